use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::groupprops::{
    is_2transitive, is_primitive, is_transitive, qp_analysis, simple_order_id,
    solvable_outer_check, QpTag, QpType,
};
use crate::localaction::{discreteness_verdict, tower_bounded, DiscretenessVerdict, Side};
use crate::permcore::PermGroup;
use crate::vhcomplex::{validate, VhDatum, VhError};
use crate::Order;

use super::{AnalysisConfig, PipelineError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SideSource {
    Datum { side: Side, name: Option<String> },
    RawGroup { name: Option<String> },
}

/// Local data of one factor. `S` is the stabilizer of point 0 in `P_1`;
/// `M` is the unique minimal normal subgroup when the type is almost simple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideReport {
    pub degree: usize,
    pub p1_order: Order,
    pub transitive: bool,
    pub primitive: bool,
    pub two_transitive: bool,
    pub quasiprimitive: bool,
    pub qp_type: QpType,
    pub m_order: Option<Order>,
    /// Names of the simple groups of order `|M|`.
    pub m_names: Vec<String>,
    pub s_order: Order,
    pub m_cap_s_order: Option<Order>,
    /// Whether `S / (S ∩ M)` is solvable.
    pub solvable_outer: Option<bool>,
    pub discreteness: DiscretenessVerdict,
    pub tower_orders: Option<Vec<Order>>,
    /// Constant type holds structurally (datum input) or by assertion.
    pub constant_type: bool,
    /// True when `constant_type` is a user assertion rather than structural.
    pub constant_type_asserted: bool,
    pub source: SideSource,
}

impl SideReport {
    pub fn is_almost_simple(&self) -> bool {
        self.qp_type.tag == QpTag::AlmostSimple
    }
}

/// A [`SideReport`] with the groups it was computed from.
#[derive(Clone, Debug)]
pub struct SideAnalysis {
    pub report: SideReport,
    pub p1: PermGroup,
    pub s: PermGroup,
    pub m: Option<PermGroup>,
    pub m_cap_s: Option<PermGroup>,
}

/// Analyzes a local permutation group given directly.
pub fn analyze_group(
    p1: PermGroup,
    source: SideSource,
    discreteness: DiscretenessVerdict,
    tower_orders: Option<Vec<Order>>,
    constant_type: bool,
    cfg: &AnalysisConfig,
) -> Result<SideAnalysis, PipelineError> {
    let degree = p1.degree();
    let transitive = is_transitive(&p1)?;
    let primitive = transitive && is_primitive(&p1)?;
    let two_transitive = transitive && is_2transitive(&p1)?;
    let qa = qp_analysis(&p1, cfg.enum_cap)?;
    let quasiprimitive = qa.is_quasiprimitive();
    let s = p1.point_stabilizer(0)?;
    let (p1_order, s_order) = (p1.order(), s.order());
    if transitive && &s_order * BigUint::from(degree) != p1_order {
        return Err(PipelineError::InvariantViolation(format!(
            "|S| · degree = {s_order} · {degree} ≠ |P_1| = {p1_order}"
        )));
    }

    let (mut m, mut m_cap_s, mut solvable_outer) = (None, None, None);
    if qa.qp_type.tag == QpTag::AlmostSimple {
        let mg = qa.minimal_normal[0].clone();
        let ms = mg.point_stabilizer(0)?;
        // M is transitive, so |M : M ∩ S| is the degree of the tree.
        if mg.order() != ms.order() * BigUint::from(degree) {
            return Err(PipelineError::InvariantViolation(format!(
                "|M| / |M ∩ S| = {} / {} is not the degree {degree}",
                mg.order(),
                ms.order()
            )));
        }
        solvable_outer = Some(solvable_outer_check(&p1, &mg, 0)?);
        m = Some(mg);
        m_cap_s = Some(ms);
    }

    let m_order = m.as_ref().map(|g| Order(g.order()));
    let m_names = m_order
        .as_ref()
        .and_then(|o| o.0.to_u64())
        .map(simple_order_id)
        .unwrap_or_default();
    let constant_type_asserted = matches!(source, SideSource::RawGroup { .. });
    let report = SideReport {
        degree,
        p1_order: Order(p1_order),
        transitive,
        primitive,
        two_transitive,
        quasiprimitive,
        qp_type: qa.qp_type,
        m_order,
        m_names,
        s_order: Order(s_order),
        m_cap_s_order: m_cap_s.as_ref().map(|g| Order(g.order())),
        solvable_outer,
        discreteness,
        tower_orders,
        constant_type,
        constant_type_asserted,
        source,
    };
    Ok(SideAnalysis {
        report,
        p1,
        s,
        m,
        m_cap_s,
    })
}

/// Analyzes the local action of a datum on the tree of `side`. Constant type
/// holds structurally: the lattice is vertex-transitive, so all local
/// actions are conjugate.
pub fn analyze_datum_side(
    d: &VhDatum,
    side: Side,
    cfg: &AnalysisConfig,
) -> Result<SideAnalysis, PipelineError> {
    let report = validate(d, cfg.strict);
    if !report.ok() {
        return Err(VhError::InvalidDatum(report).into());
    }
    let tower = tower_bounded(d, side, cfg.depth, cfg.word_bound)?;
    let verdict = discreteness_verdict(&tower)?;
    let p1 = tower.groups[0].clone();
    analyze_group(
        p1,
        SideSource::Datum {
            side,
            name: d.name.clone(),
        },
        verdict,
        Some(tower.orders.clone()),
        true,
        cfg,
    )
}
