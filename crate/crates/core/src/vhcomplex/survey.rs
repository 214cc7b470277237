use super::{orientation_orbit, Alphabet, Square, VhDatum};

/// All complete data on the given alphabets (self-paired squares included).
///
/// Backtracks over the least uncovered first corner `(a, b)`: each choice of
/// last corner `(a′, b′)` places a whole orientation orbit, which must land on
/// uncovered first corners only. Closure and completeness of the result
/// follow; injectivity of `Φ` does too, since the last corners of a closed
/// set are the inverses of its first corners.
pub fn enumerate_complete_data(horiz: &Alphabet, vert: &Alphabet) -> Vec<VhDatum> {
    let mut state = Search {
        horiz,
        vert,
        covered: vec![false; horiz.size() * vert.size()],
        squares: Vec::new(),
        found: Vec::new(),
    };
    state.run();
    state.found
}

struct Search<'a> {
    horiz: &'a Alphabet,
    vert: &'a Alphabet,
    covered: Vec<bool>,
    squares: Vec<Square>,
    found: Vec<VhDatum>,
}

impl Search<'_> {
    fn index(&self, s: &Square) -> usize {
        s.a * self.vert.size() + s.b
    }

    fn run(&mut self) {
        let Some(first) = self.covered.iter().position(|&c| !c) else {
            let mut squares = self.squares.clone();
            squares.sort();
            self.found
                .push(VhDatum::new(self.horiz.clone(), self.vert.clone(), squares));
            return;
        };
        let m = self.vert.size();
        let (a, b) = (first / m, first % m);
        for a2 in 0..self.horiz.size() {
            for b2 in 0..m {
                let orbit = orientation_orbit(self.horiz, self.vert, Square::new(a, b, a2, b2));
                let mut slots: Vec<usize> = orbit.iter().map(|s| self.index(s)).collect();
                slots.sort_unstable();
                slots.dedup();
                if slots.len() != orbit.len() || slots.iter().any(|&i| self.covered[i]) {
                    continue;
                }
                for &i in &slots {
                    self.covered[i] = true;
                }
                self.squares.extend(orbit.iter().copied());
                self.run();
                self.squares.truncate(self.squares.len() - orbit.len());
                for &i in &slots {
                    self.covered[i] = false;
                }
            }
        }
    }
}
