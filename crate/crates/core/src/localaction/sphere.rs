use crate::vhcomplex::Alphabet;

use super::{LocalActionError, DEFAULT_WORD_BOUND};

/// The reduced words of length `depth`, in lexicographic order.
///
/// Word `i` at depth `k + 1` extends word `i / (n − 1)` at depth `k`.
#[derive(Clone, Debug)]
pub struct SphereIndex {
    pub alphabet: Alphabet,
    pub depth: usize,
    pub words: Vec<Vec<usize>>,
}

pub fn sphere_index(alphabet: &Alphabet, depth: usize) -> Result<SphereIndex, LocalActionError> {
    sphere_index_bounded(alphabet, depth, DEFAULT_WORD_BOUND)
}

pub(crate) fn sphere_size(n: usize, depth: usize) -> u128 {
    (n as u128).saturating_mul((n as u128 - 1).saturating_pow(depth as u32 - 1))
}

pub fn sphere_index_bounded(
    alphabet: &Alphabet,
    depth: usize,
    bound: u64,
) -> Result<SphereIndex, LocalActionError> {
    if depth == 0 {
        return Err(LocalActionError::ZeroDepth);
    }
    let n = alphabet.size();
    let count = sphere_size(n, depth);
    if count > bound as u128 {
        return Err(LocalActionError::DepthOverflow {
            depth,
            words: count,
            bound,
        });
    }
    let mut words: Vec<Vec<usize>> = (0..n).map(|x| vec![x]).collect();
    for _ in 1..depth {
        let mut longer = Vec::with_capacity(words.len() * (n - 1));
        for w in &words {
            let forbidden = alphabet.inv(*w.last().expect("non-empty"));
            for x in (0..n).filter(|&x| x != forbidden) {
                let mut v = w.clone();
                v.push(x);
                longer.push(v);
            }
        }
        words = longer;
    }
    Ok(SphereIndex {
        alphabet: alphabet.clone(),
        depth,
        words,
    })
}

impl SphereIndex {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Position of a reduced word of this depth.
    pub fn rank(&self, word: &[usize]) -> Result<usize, LocalActionError> {
        rank(&self.alphabet, word)
    }
}

/// Mixed-radix position of a reduced word among the reduced words of its
/// length: the first letter has radix `n`, each later one radix `n − 1`
/// (letters above the forbidden inverse shift down by one).
pub(crate) fn rank(alphabet: &Alphabet, word: &[usize]) -> Result<usize, LocalActionError> {
    let n = alphabet.size();
    let not_reduced = || LocalActionError::NotReduced {
        word: word.to_vec(),
    };
    let (&first, rest) = word.split_first().ok_or(LocalActionError::ZeroDepth)?;
    if first >= n {
        return Err(not_reduced());
    }
    let mut r = first;
    let mut prev = first;
    for &x in rest {
        let forbidden = alphabet.inv(prev);
        if x >= n || x == forbidden {
            return Err(not_reduced());
        }
        r = r * (n - 1) + x - usize::from(x > forbidden);
        prev = x;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let a4 = Alphabet::standard(4).unwrap();
        assert_eq!(sphere_index(&a4, 1).unwrap().len(), 4);
        assert_eq!(sphere_index(&a4, 2).unwrap().len(), 12);
        let a6 = Alphabet::standard(6).unwrap();
        assert_eq!(sphere_index(&a6, 3).unwrap().len(), 150);
        assert!(matches!(
            sphere_index(&a6, 10),
            Err(LocalActionError::DepthOverflow { .. })
        ));
        assert!(matches!(
            sphere_index(&a6, 0),
            Err(LocalActionError::ZeroDepth)
        ));
    }

    #[test]
    fn rank_matches_enumeration() {
        let a = Alphabet::new(vec![3, 2, 1, 0, 5, 4]).unwrap();
        let idx = sphere_index(&a, 4).unwrap();
        let mut sorted = idx.words.clone();
        sorted.sort();
        assert_eq!(sorted, idx.words);
        for (i, w) in idx.words.iter().enumerate() {
            assert!(w.windows(2).all(|p| p[1] != a.inv(p[0])));
            assert_eq!(idx.rank(w).unwrap(), i);
        }
        assert!(idx.rank(&[0, 3, 1, 1]).is_err());
    }
}
