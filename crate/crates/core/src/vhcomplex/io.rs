use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{orientation_orbit, Alphabet, Square, VhDatum, VhError};

/// On-disk form of a datum. With `oriented = false` (the default) each
/// listed square stands for its whole orientation orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub n: usize,
    pub m: usize,
    pub h_involution: Vec<[usize; 2]>,
    pub v_involution: Vec<[usize; 2]>,
    pub squares: Vec<[usize; 4]>,
    #[serde(default)]
    pub oriented: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

fn alphabet_from_pairs(
    size: usize,
    pairs: &[[usize; 2]],
    side: &'static str,
) -> Result<Alphabet, VhError> {
    if size % 2 == 1 {
        return Err(VhError::OddAlphabet { size });
    }
    if size == 0 {
        return Err(VhError::MalformedDocument(format!(
            "{side} alphabet is empty"
        )));
    }
    let mut inverse = vec![usize::MAX; size];
    for &[x, y] in pairs {
        if x >= size || y >= size {
            return Err(VhError::MalformedDocument(format!(
                "{side} involution pair [{x}, {y}] out of range for size {size}"
            )));
        }
        if x == y {
            return Err(VhError::InvolutionNotFpf {
                side,
                detail: format!("letter {x} is its own inverse"),
            });
        }
        if inverse[x] != usize::MAX || inverse[y] != usize::MAX {
            return Err(VhError::InvolutionNotFpf {
                side,
                detail: format!("pair [{x}, {y}] reuses a letter"),
            });
        }
        inverse[x] = y;
        inverse[y] = x;
    }
    if let Some(x) = inverse.iter().position(|&y| y == usize::MAX) {
        return Err(VhError::InvolutionNotFpf {
            side,
            detail: format!("letter {x} has no inverse"),
        });
    }
    Alphabet::with_side(inverse, side)
}

impl DatumFile {
    pub fn to_datum(&self) -> Result<VhDatum, VhError> {
        let horiz = alphabet_from_pairs(self.n, &self.h_involution, "horizontal")?;
        let vert = alphabet_from_pairs(self.m, &self.v_involution, "vertical")?;
        let mut squares = Vec::new();
        for &[a, b, a2, b2] in &self.squares {
            if a >= self.n || a2 >= self.n || b >= self.m || b2 >= self.m {
                return Err(VhError::MalformedDocument(format!(
                    "square [{a}, {b}, {a2}, {b2}] has a letter out of range"
                )));
            }
            let sq = Square::new(a, b, a2, b2);
            if self.oriented {
                squares.push(sq);
            } else {
                squares.extend(orientation_orbit(&horiz, &vert, sq));
            }
        }
        Ok(VhDatum {
            horiz,
            vert,
            squares,
            name: self.name.clone(),
            source: self.source.clone(),
        })
    }

    /// Canonical form: one representative (the least) per orientation orbit
    /// when the squares are a union of whole orbits, otherwise every oriented
    /// square. Squares are sorted either way.
    pub fn from_datum(d: &VhDatum) -> Self {
        let present: BTreeSet<Square> = d.squares.iter().copied().collect();
        let in_range = d
            .squares
            .iter()
            .all(|s| s.a < d.n() && s.a2 < d.n() && s.b < d.m() && s.b2 < d.m());
        let geometric = in_range
            && present.len() == d.squares.len()
            && d.squares.iter().all(|s| {
                orientation_orbit(&d.horiz, &d.vert, *s)
                    .iter()
                    .all(|t| present.contains(t))
            });
        let squares: Vec<[usize; 4]> = if geometric {
            let reps: BTreeSet<Square> = d
                .squares
                .iter()
                .map(|s| orientation_orbit(&d.horiz, &d.vert, *s)[0])
                .collect();
            reps.iter().map(Square::as_array).collect()
        } else {
            let mut all: Vec<[usize; 4]> = d.squares.iter().map(Square::as_array).collect();
            all.sort();
            all
        };
        Self {
            n: d.n(),
            m: d.m(),
            h_involution: d.horiz.pairs(),
            v_involution: d.vert.pairs(),
            squares,
            oriented: !geometric,
            name: d.name.clone(),
            source: d.source.clone(),
        }
    }
}

pub fn parse_datum(document: &str) -> Result<VhDatum, VhError> {
    let file: DatumFile =
        serde_json::from_str(document).map_err(|e| VhError::MalformedDocument(e.to_string()))?;
    file.to_datum()
}

fn list(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Canonical text of a datum: one key per line, one square per line.
pub fn serialize_datum(d: &VhDatum) -> String {
    let f = DatumFile::from_datum(d);
    let pairs = |p: &[[usize; 2]]| {
        let items: Vec<String> = p.iter().map(|x| list(x)).collect();
        format!("[{}]", items.join(", "))
    };
    let mut out = String::from("{\n");
    out += &format!("  \"n\": {},\n  \"m\": {},\n", f.n, f.m);
    out += &format!("  \"h_involution\": {},\n", pairs(&f.h_involution));
    out += &format!("  \"v_involution\": {},\n", pairs(&f.v_involution));
    let squares: Vec<String> = f
        .squares
        .iter()
        .map(|s| format!("    {}", list(s)))
        .collect();
    if squares.is_empty() {
        out += "  \"squares\": [],\n";
    } else {
        out += &format!("  \"squares\": [\n{}\n  ],\n", squares.join(",\n"));
    }
    out += &format!("  \"oriented\": {}", f.oriented);
    for (key, value) in [("name", &f.name), ("source", &f.source)] {
        if let Some(v) = value {
            let quoted = serde_json::to_string(v).expect("strings serialize");
            out += &format!(",\n  \"{key}\": {quoted}");
        }
    }
    out += "\n}\n";
    out
}
