use serde::{Deserialize, Serialize};

use crate::groupprops::{section_exact_small, section_necessary, SectionReport, SectionVerdict};
use crate::localaction::DiscretenessVerdict;
use crate::permcore::PermGroup;

use super::{AnalysisConfig, PipelineError, SideAnalysis, SideReport};

/// Whether the finiteness theorem for discrete overgroups applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitenessVerdict {
    pub applicable: bool,
    /// Hypotheses that fail.
    pub unmet: Vec<String>,
    /// Hypotheses taken on evidence or on assertion rather than certified.
    pub caveats: Vec<String>,
    pub conclusion: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub m1_in_s2: SectionReport,
    pub m2_in_s1: SectionReport,
    /// `M_1` against `S_2 ∩ M_2`, run when `S_2 / (S_2 ∩ M_2)` is solvable.
    pub m1_in_s2_cap_m2: Option<SectionReport>,
    pub m2_in_s1_cap_m1: Option<SectionReport>,
    pub obstruction_established: bool,
    pub conclusion: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub m1_le_s2capm2: bool,
    pub m2_le_s1capm1: bool,
    pub s2capm2_lt_m2: bool,
    pub s1capm1_lt_m1: bool,
    pub contradiction: bool,
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WangReport {
    pub side1: SideReport,
    pub side2: SideReport,
    #[serde(rename = "theorem01")]
    pub finiteness: FinitenessVerdict,
    #[serde(rename = "theorem25")]
    pub obstruction: Option<ObstructionReport>,
    pub chain: Option<ChainReport>,
    pub notes: Vec<String>,
}

/// Checks the hypotheses of the finiteness theorem: on both sides the
/// closure of the projection is non-discrete and locally quasi-primitive of
/// constant, almost simple type.
pub fn theorem01_verdict(r1: &SideReport, r2: &SideReport) -> FinitenessVerdict {
    let mut unmet = Vec::new();
    let mut caveats = Vec::new();
    for (i, r) in [(1, r1), (2, r2)] {
        if !(r.quasiprimitive && r.is_almost_simple()) {
            unmet.push(format!(
                "side {i}: local action is not quasi-primitive of almost simple type ({:?})",
                r.qp_type.tag
            ));
        }
        match r.discreteness {
            DiscretenessVerdict::Discrete { at } => unmet.push(format!(
                "side {i}: local tower stabilizes at depth {at}, so the projection is discrete"
            )),
            DiscretenessVerdict::NoStabilization { at } => caveats.push(format!(
                "side {i}: non-discreteness is evidence-grade (no stabilization up to depth {at})"
            )),
            DiscretenessVerdict::NotApplicable => caveats.push(format!(
                "side {i}: non-discreteness not checked (raw group input)"
            )),
        }
        if !r.constant_type {
            unmet.push(format!("side {i}: constant type not established"));
        } else if r.constant_type_asserted {
            caveats.push(format!("side {i}: constant type asserted by the user"));
        }
    }
    let applicable = unmet.is_empty();
    let conclusion = if applicable {
        "Γ is contained in only finitely many discrete subgroups Λ with Γ < Λ < G₁ × G₂ \
         (conclusion of the finiteness theorem, subject to the caveats)"
            .to_string()
    } else {
        "hypotheses not met; no finiteness conclusion is drawn".to_string()
    };
    FinitenessVerdict {
        applicable,
        unmet,
        caveats,
        conclusion,
    }
}

fn decide(
    m: &PermGroup,
    s: &PermGroup,
    cfg: &AnalysisConfig,
) -> Result<SectionReport, PipelineError> {
    let mut r = section_necessary(m, s, cfg.enum_cap)?;
    if r.exact == SectionVerdict::Unknown {
        r.exact = section_exact_small(m, s, cfg.section_cap);
        if r.exact == SectionVerdict::No {
            r.witness = Some("no subgroup of S has a composition factor isomorphic to M".into());
        }
    }
    Ok(r)
}

/// Is `M_from` a section of `S_to`? When `S_to / (S_to ∩ M_to)` is solvable a
/// non-abelian simple section of `S_to` is already a section of `S_to ∩ M_to`,
/// so a negative answer there settles the question.
fn direction(
    from: &SideAnalysis,
    to: &SideAnalysis,
    cfg: &AnalysisConfig,
) -> Result<(SectionReport, Option<SectionReport>), PipelineError> {
    let m = from.m.as_ref().expect("almost simple side has M");
    let mut main = decide(m, &to.s, cfg)?;
    let mut refined = None;
    if to.report.solvable_outer == Some(true) {
        let inner = to.m_cap_s.as_ref().expect("almost simple side has M ∩ S");
        let r = decide(m, inner, cfg)?;
        if main.exact != SectionVerdict::No && r.exact == SectionVerdict::No {
            main.exact = SectionVerdict::No;
            main.witness = Some(format!(
                "not a section of S ∩ M ({}); S / (S ∩ M) is solvable",
                r.witness.as_deref().unwrap_or("exact test")
            ));
        }
        refined = Some(r);
    }
    Ok((main, refined))
}

/// Tests the necessary condition for a non-discrete overgroup intersection:
/// `M_1` a section of `S_2` and `M_2` a section of `S_1`. A negative answer in
/// either direction is an obstruction.
pub fn theorem25_obstruction(
    a1: &SideAnalysis,
    a2: &SideAnalysis,
    cfg: &AnalysisConfig,
) -> Result<ObstructionReport, PipelineError> {
    for (i, a) in [(1, a1), (2, a2)] {
        if !a.report.is_almost_simple() {
            return Err(PipelineError::NotAlmostSimple { side: i });
        }
    }
    let (m1_in_s2, m1_in_s2_cap_m2) = direction(a1, a2, cfg)?;
    let (m2_in_s1, m2_in_s1_cap_m1) = direction(a2, a1, cfg)?;
    let established = m1_in_s2.exact == SectionVerdict::No || m2_in_s1.exact == SectionVerdict::No;
    let conclusion = if established {
        "every discrete Λ ⊇ Γ satisfies Λ ∩ W = {(e,e)}, where W is the neighborhood of (e,e) \
         in G₁ × G₂ determined by Γ"
            .to_string()
    } else {
        "section conditions not refuted at the configured caps; defer to the finiteness verdict"
            .to_string()
    };
    Ok(ObstructionReport {
        m1_in_s2,
        m2_in_s1,
        m1_in_s2_cap_m2,
        m2_in_s1_cap_m1,
        obstruction_established: established,
        conclusion,
    })
}

/// The order arithmetic that makes the two section conditions incompatible:
/// they would give `|M_1| ≤ |S_2 ∩ M_2| < |M_2|` and
/// `|M_2| ≤ |S_1 ∩ M_1| < |M_1|`.
pub fn contradiction_chain(r1: &SideReport, r2: &SideReport) -> Result<ChainReport, PipelineError> {
    let orders = |i: usize, r: &SideReport| {
        if !r.is_almost_simple() || r.solvable_outer != Some(true) {
            return Err(PipelineError::PreconditionFailed(format!(
                "side {i} must be almost simple with solvable S / (S ∩ M)"
            )));
        }
        Ok((
            r.m_order.clone().expect("almost simple side has M").0,
            r.m_cap_s_order
                .clone()
                .expect("almost simple side has M ∩ S")
                .0,
        ))
    };
    let (m1, s1m1) = orders(1, r1)?;
    let (m2, s2m2) = orders(2, r2)?;
    let m1_le = m1 <= s2m2;
    let m2_le = m2 <= s1m1;
    let lt2 = s2m2 < m2;
    let lt1 = s1m1 < m1;
    let contradiction = lt1 && lt2 && !(m1_le && m2_le);
    let certificate = contradiction.then(|| {
        let mut failing = Vec::new();
        if !m1_le {
            failing.push(format!("|M_1| = {m1} ≤ |S_2 ∩ M_2| = {s2m2} is false"));
        }
        if !m2_le {
            failing.push(format!("|M_2| = {m2} ≤ |S_1 ∩ M_1| = {s1m1} is false"));
        }
        format!(
            "|M_1| ≤ |S_2 ∩ M_2| < |M_2| and |M_2| ≤ |S_1 ∩ M_1| < |M_1| cannot both hold: {}",
            failing.join("; ")
        )
    });
    Ok(ChainReport {
        m1_le_s2capm2: m1_le,
        m2_le_s1capm1: m2_le,
        s2capm2_lt_m2: lt2,
        s1capm1_lt_m1: lt1,
        contradiction,
        certificate,
    })
}

/// The full report for a pair of sides.
pub fn analyze_pair(
    a1: &SideAnalysis,
    a2: &SideAnalysis,
    cfg: &AnalysisConfig,
) -> Result<WangReport, PipelineError> {
    let finiteness = theorem01_verdict(&a1.report, &a2.report);
    let mut notes = Vec::new();
    let obstruction = match theorem25_obstruction(a1, a2, cfg) {
        Ok(r) => Some(r),
        Err(PipelineError::NotAlmostSimple { side }) => {
            notes.push(format!(
                "section obstruction skipped: side {side} is not almost simple"
            ));
            None
        }
        Err(e) => return Err(e),
    };
    let chain = match contradiction_chain(&a1.report, &a2.report) {
        Ok(c) => Some(c),
        Err(PipelineError::PreconditionFailed(why)) => {
            notes.push(format!("contradiction chain skipped: {why}"));
            None
        }
        Err(e) => return Err(e),
    };
    if let (Some(c), Some(o)) = (&chain, &obstruction) {
        if c.contradiction && !o.obstruction_established {
            return Err(PipelineError::InvariantViolation(
                "contradiction chain holds but no section obstruction was found".into(),
            ));
        }
    }
    Ok(WangReport {
        side1: a1.report.clone(),
        side2: a2.report.clone(),
        finiteness,
        obstruction,
        chain,
        notes,
    })
}
