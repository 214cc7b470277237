use crate::permcore::Permutation;

use super::{Alphabet, VhDatum, VhError};

/// A synchronous transducer: in state `s`, reading letter `x` emits
/// `out(s, x)` and moves to `next(s, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MealyAutomaton {
    pub states: Alphabet,
    pub letters: Alphabet,
    out: Vec<usize>,
    next: Vec<usize>,
}

impl MealyAutomaton {
    fn build<F>(states: &Alphabet, letters: &Alphabet, mut f: F) -> Result<Self, VhError>
    where
        F: FnMut(usize, usize) -> Result<(usize, usize), VhError>,
    {
        let (ns, nl) = (states.size(), letters.size());
        let mut out = Vec::with_capacity(ns * nl);
        let mut next = Vec::with_capacity(ns * nl);
        for s in 0..ns {
            for x in 0..nl {
                let (o, t) = f(s, x)?;
                out.push(o);
                next.push(t);
            }
        }
        let aut = Self {
            states: states.clone(),
            letters: letters.clone(),
            out,
            next,
        };
        for s in 0..ns {
            assert!(
                aut.state_permutation(s).is_ok(),
                "out-map of state {s} is not a bijection on a validated datum"
            );
        }
        Ok(aut)
    }

    #[inline]
    pub fn out(&self, state: usize, letter: usize) -> usize {
        self.out[state * self.letters.size() + letter]
    }

    #[inline]
    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.next[state * self.letters.size() + letter]
    }

    /// The permutation `x ↦ out(state, x)` of the letters.
    pub fn state_permutation(&self, state: usize) -> Result<Permutation, VhError> {
        let nl = self.letters.size();
        Permutation::from_images(self.out[state * nl..(state + 1) * nl].iter().copied())
            .map_err(|e| VhError::MalformedDocument(format!("state {state}: {e}")))
    }

    /// Whether every state acts trivially on single letters.
    pub fn is_identity_on_letters(&self) -> bool {
        (0..self.states.size()).all(|s| (0..self.letters.size()).all(|x| self.out(s, x) == x))
    }

    /// Image of `word` under `state`: the first letter goes through `out`,
    /// the rest is acted on by the next state.
    pub fn act_word(&self, state: usize, word: &[usize]) -> Result<Vec<usize>, VhError> {
        if state >= self.states.size() {
            return Err(VhError::LetterOutOfRange {
                letter: state,
                size: self.states.size(),
            });
        }
        let mut s = state;
        let mut image = Vec::with_capacity(word.len());
        for &x in word {
            if x >= self.letters.size() {
                return Err(VhError::LetterOutOfRange {
                    letter: x,
                    size: self.letters.size(),
                });
            }
            image.push(self.out(s, x));
            s = self.next(s, x);
        }
        Ok(image)
    }

    /// Like [`act_word`](Self::act_word) for words already known to be in
    /// range.
    pub(crate) fn act_word_into(&self, state: usize, word: &[usize], image: &mut Vec<usize>) {
        image.clear();
        let mut s = state;
        for &x in word {
            image.push(self.out(s, x));
            s = self.next(s, x);
        }
    }
}

/// States are vertical letters acting on horizontal words: `b·a = a*·b*`
/// gives `out(b, a) = a*` and `next(b, a) = b*`. Generates the local action
/// on the horizontal tree.
pub fn vertical_automaton(d: &VhDatum) -> Result<MealyAutomaton, VhError> {
    let corners = d.corners()?;
    MealyAutomaton::build(&d.vert, &d.horiz, |b, a| {
        let (a_star, b_star) = corners.co_transition(b, a)?;
        Ok((a_star, b_star))
    })
}

/// States are horizontal letters acting on vertical words: `a·b = b′·a′`
/// gives `out(a, b) = b′` and `next(a, b) = a′`. Generates the local action
/// on the vertical tree.
pub fn horizontal_automaton(d: &VhDatum) -> Result<MealyAutomaton, VhError> {
    let corners = d.corners()?;
    MealyAutomaton::build(&d.horiz, &d.vert, |a, b| corners.transition(a, b))
}
