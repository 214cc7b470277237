use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::VhError;

/// Letters `0..size` with a fixed-point-free inversion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    inverse: Vec<usize>,
}

impl Alphabet {
    pub fn new(inverse: Vec<usize>) -> Result<Self, VhError> {
        Self::with_side(inverse, "given")
    }

    pub(crate) fn with_side(inverse: Vec<usize>, side: &'static str) -> Result<Self, VhError> {
        let n = inverse.len();
        if n % 2 == 1 {
            return Err(VhError::OddAlphabet { size: n });
        }
        for (i, &j) in inverse.iter().enumerate() {
            if j >= n || j == i || inverse[j] != i {
                return Err(VhError::InvolutionNotFpf {
                    side,
                    detail: format!("letter {i} ↦ {j}"),
                });
            }
        }
        if n == 0 {
            return Err(VhError::MalformedDocument("empty alphabet".into()));
        }
        Ok(Self { inverse })
    }

    /// Size `n` with the pairing `0↔1, 2↔3, …`.
    pub fn standard(n: usize) -> Result<Self, VhError> {
        Self::new((0..n).map(|i| i ^ 1).collect())
    }

    pub fn size(&self) -> usize {
        self.inverse.len()
    }

    #[inline]
    pub fn inv(&self, letter: usize) -> usize {
        self.inverse[letter]
    }

    /// The inverse pairs `[x, x⁻¹]` with `x < x⁻¹`.
    pub fn pairs(&self) -> Vec<[usize; 2]> {
        (0..self.size())
            .filter(|&x| x < self.inverse[x])
            .map(|x| [x, self.inverse[x]])
            .collect()
    }
}

/// An oriented square, read as the relation `a·b = b2·a2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Square {
    pub a: usize,
    pub b: usize,
    pub a2: usize,
    pub b2: usize,
}

impl Square {
    pub fn new(a: usize, b: usize, a2: usize, b2: usize) -> Self {
        Self { a, b, a2, b2 }
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.a, self.b, self.a2, self.b2]
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.a2, self.b2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VhDatum {
    pub horiz: Alphabet,
    pub vert: Alphabet,
    pub squares: Vec<Square>,
    pub name: Option<String>,
    pub source: Option<String>,
}

/// The distinct squares obtained from `sq` by re-reading the same geometric
/// square from its other corners; sorted, of size 4 or 2.
pub fn orientation_orbit(h: &Alphabet, v: &Alphabet, sq: Square) -> Vec<Square> {
    let Square { a, b, a2, b2 } = sq;
    let mut orbit = vec![
        sq,
        Square::new(h.inv(a), b2, h.inv(a2), b),
        Square::new(a2, v.inv(b), a, v.inv(b2)),
        Square::new(h.inv(a2), v.inv(b2), h.inv(a), v.inv(b)),
    ];
    orbit.sort();
    orbit.dedup();
    orbit
}

impl VhDatum {
    pub fn new(horiz: Alphabet, vert: Alphabet, squares: Vec<Square>) -> Self {
        Self {
            horiz,
            vert,
            squares,
            name: None,
            source: None,
        }
    }

    /// The datum with `a·b = b·a` for all letters; its cover is the product
    /// of the two trees with the product action.
    pub fn commuting(n: usize, m: usize) -> Result<Self, VhError> {
        let horiz = Alphabet::standard(n)?;
        let vert = Alphabet::standard(m)?;
        let squares = (0..n)
            .flat_map(|a| (0..m).map(move |b| Square::new(a, b, a, b)))
            .collect();
        let mut d = Self::new(horiz, vert, squares);
        d.name = Some(format!("commuting T{n}xT{m}"));
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.horiz.size()
    }

    pub fn m(&self) -> usize {
        self.vert.size()
    }

    /// Number of geometric squares (orientation orbits) among the squares.
    pub fn geometric_count(&self) -> usize {
        let set: BTreeSet<Square> = self
            .squares
            .iter()
            .filter(|s| self.in_range(s))
            .map(|&s| orientation_orbit(&self.horiz, &self.vert, s)[0])
            .collect();
        set.len()
    }

    fn in_range(&self, s: &Square) -> bool {
        s.a < self.n() && s.a2 < self.n() && s.b < self.m() && s.b2 < self.m()
    }

    /// Validates and builds the corner lookup tables.
    pub fn corners(&self) -> Result<Corners, VhError> {
        let report = validate(self, false);
        if !report.ok() {
            return Err(VhError::InvalidDatum(report));
        }
        let (n, m) = (self.n(), self.m());
        let mut forward = vec![(0, 0); n * m];
        let mut backward = vec![(0, 0); n * m];
        for s in &self.squares {
            forward[s.a * m + s.b] = (s.b2, s.a2);
            backward[s.a2 * m + s.b2] = (s.a, s.b);
        }
        Ok(Corners {
            n,
            m,
            forward,
            backward,
        })
    }

    /// `Φ(a, b) = (b′, a′)` where `a·b = b′·a′`.
    pub fn transition(&self, a: usize, b: usize) -> Result<(usize, usize), VhError> {
        self.corners()?.transition(a, b)
    }

    /// `(a*, b*)` with `b·a = a*·b*`.
    pub fn co_transition(&self, b: usize, a: usize) -> Result<(usize, usize), VhError> {
        self.corners()?.co_transition(b, a)
    }
}

/// Corner tables of a valid datum.
#[derive(Clone, Debug)]
pub struct Corners {
    n: usize,
    m: usize,
    forward: Vec<(usize, usize)>,
    backward: Vec<(usize, usize)>,
}

impl Corners {
    fn check(&self, a: usize, b: usize) -> Result<(), VhError> {
        if a >= self.n {
            return Err(VhError::LetterOutOfRange {
                letter: a,
                size: self.n,
            });
        }
        if b >= self.m {
            return Err(VhError::LetterOutOfRange {
                letter: b,
                size: self.m,
            });
        }
        Ok(())
    }

    pub fn transition(&self, a: usize, b: usize) -> Result<(usize, usize), VhError> {
        self.check(a, b)?;
        Ok(self.forward[a * self.m + b])
    }

    pub fn co_transition(&self, b: usize, a: usize) -> Result<(usize, usize), VhError> {
        self.check(a, b)?;
        Ok(self.backward[a * self.m + b])
    }
}

/// Swaps the roles of the two alphabets: `a·b = b′·a′` is re-read as the
/// square `(b′, a′, b, a)` of the dual.
pub fn dual(d: &VhDatum) -> VhDatum {
    VhDatum {
        horiz: d.vert.clone(),
        vert: d.horiz.clone(),
        squares: d
            .squares
            .iter()
            .map(|s| Square::new(s.b2, s.a2, s.b, s.a))
            .collect(),
        name: d.name.clone(),
        source: d.source.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    LetterOutOfRange {
        square: Square,
    },
    /// Two squares share the first corner `(a, b)`.
    PairCoveredTwice {
        a: usize,
        b: usize,
    },
    /// No square has first corner `(a, b)`: `Φ` is not total.
    MissingPair {
        a: usize,
        b: usize,
    },
    /// Two squares share the last corner: `Φ` is not injective.
    TargetCoveredTwice {
        b2: usize,
        a2: usize,
    },
    OrientationNotClosed {
        square: Square,
        missing: Square,
    },
    WrongSquareCount {
        expected: usize,
        found: usize,
    },
    SelfPairedSquare {
        square: Square,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LetterOutOfRange { square } => {
                write!(f, "square {square} has a letter out of range")
            }
            Violation::PairCoveredTwice { a, b } => write!(f, "pair ({a}, {b}) covered twice"),
            Violation::MissingPair { a, b } => {
                write!(f, "pair ({a}, {b}) has no square (missing Φ-preimage)")
            }
            Violation::TargetCoveredTwice { b2, a2 } => {
                write!(f, "target ({b2}, {a2}) covered twice")
            }
            Violation::OrientationNotClosed { square, missing } => {
                write!(
                    f,
                    "square {square} present but its re-orientation {missing} is missing"
                )
            }
            Violation::WrongSquareCount { expected, found } => {
                write!(f, "expected {expected} oriented squares, found {found}")
            }
            Violation::SelfPairedSquare { square } => {
                write!(
                    f,
                    "square {square} is self-paired (orientation orbit of size 2)"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Warning {
    SelfPairedSquare { square: Square },
    DegenerateAlphabet { side: String, size: usize },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::SelfPairedSquare { square } => {
                write!(
                    f,
                    "square {square} is self-paired (orientation orbit of size 2)"
                )
            }
            Warning::DegenerateAlphabet { side, size } => {
                write!(f, "{side} alphabet has size {size}: the tree is a line")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks completeness of the corner map, orientation closure and the square
/// count. Self-paired squares are violations under `strict`, warnings
/// otherwise.
pub fn validate(d: &VhDatum, strict: bool) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (n, m) = (d.n(), d.m());
    for (side, size) in [("horizontal", n), ("vertical", m)] {
        if size == 2 {
            report.warnings.push(Warning::DegenerateAlphabet {
                side: side.to_string(),
                size,
            });
        }
    }
    let mut bad_letters = false;
    for s in &d.squares {
        if !d.in_range(s) {
            report
                .violations
                .push(Violation::LetterOutOfRange { square: *s });
            bad_letters = true;
        }
    }
    if bad_letters {
        return report;
    }

    if d.squares.len() != n * m {
        report.violations.push(Violation::WrongSquareCount {
            expected: n * m,
            found: d.squares.len(),
        });
    }
    let mut first = vec![0usize; n * m];
    let mut last = vec![0usize; n * m];
    for s in &d.squares {
        first[s.a * m + s.b] += 1;
        last[s.a2 * m + s.b2] += 1;
    }
    for a in 0..n {
        for b in 0..m {
            match first[a * m + b] {
                0 => report.violations.push(Violation::MissingPair { a, b }),
                1 => {}
                _ => report.violations.push(Violation::PairCoveredTwice { a, b }),
            }
            if last[a * m + b] > 1 {
                report
                    .violations
                    .push(Violation::TargetCoveredTwice { b2: b, a2: a });
            }
        }
    }

    let present: BTreeSet<Square> = d.squares.iter().copied().collect();
    let mut reported = BTreeSet::new();
    for s in &d.squares {
        let orbit = orientation_orbit(&d.horiz, &d.vert, *s);
        for t in &orbit {
            if !present.contains(t) && reported.insert(*t) {
                report.violations.push(Violation::OrientationNotClosed {
                    square: *s,
                    missing: *t,
                });
            }
        }
        if orbit.len() == 2 && orbit[0] == *s {
            if strict {
                report
                    .violations
                    .push(Violation::SelfPairedSquare { square: *s });
            } else {
                report
                    .warnings
                    .push(Warning::SelfPairedSquare { square: *s });
            }
        }
    }
    report
}
