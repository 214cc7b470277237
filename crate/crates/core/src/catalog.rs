//! Bundled examples: data, raw local groups, pairs, and empty slots for
//! square tables that must come from the literature.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groupprops::QpTag;
use crate::permcore::{parse_group_file, PermError, PermGroup, Permutation, RawGroupFile};
use crate::pipeline::{SideReport, WangReport};
use crate::vhcomplex::{parse_datum, VhDatum, VhError};

const INDEX: &str = include_str!("../catalog/index.json");

const FILES: &[(&str, &str)] = &[
    (
        "commuting_t4xt4.json",
        include_str!("../catalog/commuting_t4xt4.json"),
    ),
    (
        "survey_t4xt4_a.json",
        include_str!("../catalog/survey_t4xt4_a.json"),
    ),
    (
        "survey_t4xt4_b.json",
        include_str!("../catalog/survey_t4xt4_b.json"),
    ),
    (
        "survey_t4xt4_c.json",
        include_str!("../catalog/survey_t4xt4_c.json"),
    ),
    (
        "a6_natural.json",
        include_str!("../catalog/a6_natural.json"),
    ),
    (
        "s5_on_pairs.json",
        include_str!("../catalog/s5_on_pairs.json"),
    ),
    ("m12.json", include_str!("../catalog/m12.json")),
];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("no catalog entry named {0:?}")]
    UnknownEntry(String),
    #[error("catalog entry {0:?} is an empty slot: {1}")]
    EmptySlot(String, String),
    #[error("catalog entry {name:?} is a {found:?}, not a {wanted}")]
    WrongKind {
        name: String,
        found: EntryKind,
        wanted: &'static str,
    },
    #[error("bundled file {0:?} is missing")]
    MissingFile(String),
    #[error(transparent)]
    Datum(#[from] VhError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Datum,
    RawGroup,
    RawGroupPair,
}

/// Golden summary of one side; absent fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedSide {
    pub degree: Option<usize>,
    pub p1_order: Option<u64>,
    pub transitive: Option<bool>,
    pub primitive: Option<bool>,
    pub two_transitive: Option<bool>,
    pub qp_tag: Option<QpTag>,
    pub m_order: Option<u64>,
    pub s_order: Option<u64>,
    pub m_cap_s_order: Option<u64>,
    pub solvable_outer: Option<bool>,
    pub tower_orders: Option<Vec<crate::Order>>,
}

fn check<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<String>,
    field: &str,
    expected: &Option<T>,
    got: T,
) {
    if let Some(e) = expected {
        if *e != got {
            out.push(format!("{field}: expected {e:?}, got {got:?}"));
        }
    }
}

fn big(o: &crate::Order) -> String {
    o.0.to_string()
}

impl ExpectedSide {
    /// Mismatches against a computed report (empty when it matches).
    pub fn mismatches(&self, r: &SideReport) -> Vec<String> {
        let mut out = Vec::new();
        let s = |v: Option<u64>| v.map(|x| x.to_string());
        check(&mut out, "degree", &self.degree, r.degree);
        check(&mut out, "p1_order", &s(self.p1_order), big(&r.p1_order));
        check(&mut out, "transitive", &self.transitive, r.transitive);
        check(&mut out, "primitive", &self.primitive, r.primitive);
        check(
            &mut out,
            "two_transitive",
            &self.two_transitive,
            r.two_transitive,
        );
        check(&mut out, "qp_tag", &self.qp_tag, r.qp_type.tag);
        check(
            &mut out,
            "m_order",
            &s(self.m_order),
            r.m_order.as_ref().map(big).unwrap_or_default(),
        );
        check(&mut out, "s_order", &s(self.s_order), big(&r.s_order));
        check(
            &mut out,
            "m_cap_s_order",
            &s(self.m_cap_s_order),
            r.m_cap_s_order.as_ref().map(big).unwrap_or_default(),
        );
        if let Some(e) = self.solvable_outer {
            check(&mut out, "solvable_outer", &Some(Some(e)), r.solvable_outer);
        }
        if let Some(e) = &self.tower_orders {
            let got: Vec<String> = r.tower_orders.iter().flatten().map(big).collect();
            let want: Vec<String> = e.iter().map(big).collect();
            check(&mut out, "tower_orders", &Some(want), got);
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedSummary {
    pub side1: ExpectedSide,
    pub side2: ExpectedSide,
    pub applicable: Option<bool>,
    pub obstruction_established: Option<bool>,
    pub contradiction: Option<bool>,
}

impl ExpectedSummary {
    pub fn mismatches(&self, r: &WangReport) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        out.extend(
            self.side1
                .mismatches(&r.side1)
                .into_iter()
                .map(|m| format!("side1 {m}")),
        );
        out.extend(
            self.side2
                .mismatches(&r.side2)
                .into_iter()
                .map(|m| format!("side2 {m}")),
        );
        check(
            &mut out,
            "applicable",
            &self.applicable,
            r.finiteness.applicable,
        );
        if let Some(e) = self.obstruction_established {
            let got = r.obstruction.as_ref().map(|o| o.obstruction_established);
            check(&mut out, "obstruction_established", &Some(Some(e)), got);
        }
        if let Some(e) = self.contradiction {
            let got = r.chain.as_ref().map(|c| c.contradiction);
            check(&mut out, "contradiction", &Some(Some(e)), got);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    /// Bundled file; `None` marks an empty slot.
    #[serde(default)]
    pub payload: Option<String>,
    /// Entry names of the two sides of a pair.
    #[serde(default)]
    pub members: Vec<String>,
    pub source: String,
    pub description: String,
    #[serde(default)]
    pub expected: Option<ExpectedSummary>,
    #[serde(default)]
    pub expected_side: Option<ExpectedSide>,
}

impl CatalogEntry {
    pub fn is_slot(&self) -> bool {
        self.kind != EntryKind::RawGroupPair && self.payload.is_none()
    }

    /// Text of the bundled payload file.
    pub fn payload_text(&self) -> Option<&'static str> {
        let file = self.payload.as_deref()?;
        FILES
            .iter()
            .find(|(f, _)| *f == file)
            .map(|(_, text)| *text)
    }
}

#[derive(Deserialize)]
struct Index {
    entries: Vec<CatalogEntry>,
}

pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        serde_json::from_str::<Index>(INDEX)
            .expect("bundled catalog index is well-formed")
            .entries
    })
}

pub fn find(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))
}

fn payload(entry: &CatalogEntry) -> Result<&'static str, CatalogError> {
    let Some(file) = &entry.payload else {
        return Err(CatalogError::EmptySlot(
            entry.name.clone(),
            entry.description.clone(),
        ));
    };
    entry
        .payload_text()
        .ok_or_else(|| CatalogError::MissingFile(file.clone()))
}

pub fn load_datum(name: &str) -> Result<VhDatum, CatalogError> {
    let entry = find(name)?;
    if entry.kind != EntryKind::Datum {
        return Err(CatalogError::WrongKind {
            name: name.to_string(),
            found: entry.kind,
            wanted: "datum",
        });
    }
    Ok(parse_datum(payload(entry)?)?)
}

pub fn load_group(name: &str) -> Result<(RawGroupFile, PermGroup), CatalogError> {
    let entry = find(name)?;
    if entry.kind != EntryKind::RawGroup {
        return Err(CatalogError::WrongKind {
            name: name.to_string(),
            found: entry.kind,
            wanted: "raw group",
        });
    }
    Ok(parse_group_file(payload(entry)?)?)
}

/// `S_5` acting on the ten 2-subsets of `{0, …, 4}`, indexed
/// lexicographically, generated by the images of `(0 1 2 3 4)` and `(0 1)`.
pub fn s5_on_pairs() -> PermGroup {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let index = |x: usize, y: usize| {
        let key = (x.min(y), x.max(y));
        pairs.iter().position(|&p| p == key).expect("pair exists")
    };
    let induced = |p: &Permutation| {
        let images: Vec<usize> = pairs
            .iter()
            .map(|&(a, b)| index(p.apply(a), p.apply(b)))
            .collect();
        Permutation::from_images(images).expect("induced map is a bijection")
    };
    let gens = [
        Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).expect("valid cycle"),
        Permutation::from_cycles(5, &[&[0, 1]]).expect("valid cycle"),
    ];
    PermGroup::new(10, gens.iter().map(induced).collect()).expect("degree 10")
}
