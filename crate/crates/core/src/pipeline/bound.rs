use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::Order;

use super::PipelineError;

/// Largest `N` for which `(N − 1)!` is computed.
pub const MAX_BOUND_N: u64 = 100_000;

/// Index bound for a discrete overgroup `Λ ⊇ Γ` with `vol(Γ)/vol(Λ)`
/// at most the given ratio: `[Λ : Γ] ≤ N = ⌊ratio⌋`, refined to `(N − 1)!`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexBound {
    #[serde(rename = "N")]
    pub n: Order,
    pub index_bound: Order,
}

/// Parses `"3"`, `"6.5"` or `"13/2"` as a non-negative fraction.
pub fn parse_ratio(text: &str) -> Result<(BigUint, BigUint), PipelineError> {
    let bad = || PipelineError::BadRatio(text.to_string());
    let t = text.trim();
    if t.starts_with('-') {
        return Err(PipelineError::RatioBelowOne(text.to_string()));
    }
    let digits = |s: &str| -> Result<BigUint, PipelineError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigUint>().map_err(|_| bad())
    };
    let (num, den) = if let Some((p, q)) = t.split_once('/') {
        (digits(p.trim())?, digits(q.trim())?)
    } else if let Some((int, frac)) = t.split_once('.') {
        let int = if int.is_empty() { "0" } else { int };
        let scale = BigUint::from(10u32).pow(frac.len() as u32);
        let frac_value = if frac.is_empty() {
            BigUint::zero()
        } else {
            digits(frac)?
        };
        (digits(int)? * &scale + frac_value, scale)
    } else {
        (digits(t)?, BigUint::one())
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok((num, den))
}

pub fn wang_index_bound(ratio: &str) -> Result<IndexBound, PipelineError> {
    let (num, den) = parse_ratio(ratio)?;
    let n = num / den;
    if n.is_zero() {
        return Err(PipelineError::RatioBelowOne(ratio.to_string()));
    }
    let small =
        n.to_u64()
            .filter(|&v| v <= MAX_BOUND_N)
            .ok_or_else(|| PipelineError::BoundTooLarge {
                n: n.to_string(),
                max: MAX_BOUND_N,
            })?;
    let factorial = (1..small).fold(BigUint::one(), |acc, k| acc * k);
    Ok(IndexBound {
        n: Order(n),
        index_bound: Order(factorial),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples() {
        for (ratio, n, bound) in [
            ("1", 1u64, 1u64),
            ("3", 3, 2),
            ("6.5", 6, 120),
            ("13/2", 6, 120),
        ] {
            let b = wang_index_bound(ratio).unwrap();
            assert_eq!((b.n, b.index_bound), (Order::from(n), Order::from(bound)));
        }
    }

    #[test]
    fn rejects() {
        assert!(matches!(
            wang_index_bound("0.99"),
            Err(PipelineError::RatioBelowOne(_))
        ));
        assert!(matches!(
            wang_index_bound("-2"),
            Err(PipelineError::RatioBelowOne(_))
        ));
        assert!(matches!(
            wang_index_bound("abc"),
            Err(PipelineError::BadRatio(_))
        ));
        assert!(matches!(
            wang_index_bound("1/0"),
            Err(PipelineError::BadRatio(_))
        ));
        assert!(matches!(
            wang_index_bound("1e9"),
            Err(PipelineError::BadRatio(_))
        ));
        assert!(matches!(
            wang_index_bound("1000000"),
            Err(PipelineError::BoundTooLarge { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(wang_index_bound("3").unwrap()).unwrap();
        assert_eq!(v, serde_json::json!({"N": 3, "index_bound": 2}));
    }
}
