//! Orders of the non-abelian finite simple groups up to 10⁷, generated from
//! the family order formulas. Used only to label groups in reports.

use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Largest order covered by the table.
pub const SIMPLE_TABLE_LIMIT: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGroupEntry {
    pub order: u64,
    pub name: String,
}

/// Names generated by the families below that denote a group already listed
/// under another name.
const ALIASES: &[(&str, &str)] = &[
    ("PSL(2,4)", "A5"),
    ("PSL(2,5)", "A5"),
    ("PSL(2,9)", "A6"),
    ("PSL(3,2)", "PSL(2,7)"),
    ("PSL(4,2)", "A8"),
    ("PSp(4,3)", "PSU(4,2)"),
];

const DISPLAY: &[(&str, &str)] = &[
    ("A5", "A5 ≅ PSL(2,5)"),
    ("A6", "A6 ≅ PSL(2,9)"),
    ("PSL(2,7)", "PSL(2,7) ≅ PSL(3,2)"),
    ("PSU(4,2)", "PSU(4,2) ≅ PSp(4,3)"),
];

const SPORADIC: &[(&str, u64)] = &[
    ("M11", 7920),
    ("M12", 95040),
    ("J1", 175560),
    ("M22", 443520),
    ("J2", 604800),
    ("M23", 10200960),
];

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn prime_powers(limit: u64) -> Vec<(u64, u64, u32)> {
    // (q, p, e) with q = p^e
    let mut out = Vec::new();
    for p in 2..=limit {
        if (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            continue;
        }
        let mut q = p;
        let mut e = 1;
        while q <= limit {
            out.push((q, p, e));
            q *= p;
            e += 1;
        }
    }
    out.sort();
    out
}

/// Product with overflow saturating to `u128::MAX`.
fn prod(xs: &[u128]) -> u128 {
    xs.iter().fold(1u128, |acc, &x| acc.saturating_mul(x))
}

fn generate() -> Vec<SimpleGroupEntry> {
    let limit = SIMPLE_TABLE_LIMIT as u128;
    let mut raw: Vec<(String, u128)> = Vec::new();

    // Alternating groups.
    let mut fact: u128 = 2;
    for n in 3u128.. {
        fact *= n;
        if n >= 5 {
            if fact / 2 > limit {
                break;
            }
            raw.push((format!("A{n}"), fact / 2));
        }
    }

    let qs = prime_powers(1000);
    for &(q, p, e) in &qs {
        let q128 = q as u128;
        let pw = |k: u32| q128.saturating_pow(k);
        // PSL(n,q)
        for n in 2u32..=6 {
            if n == 2 && q < 4 {
                continue;
            }
            let mut factors = vec![pw(n * (n - 1) / 2)];
            for i in 2..=n {
                factors.push(pw(i) - 1);
            }
            let d = gcd(n as u64, q - 1) as u128;
            raw.push((format!("PSL({n},{q})"), prod(&factors) / d));
        }
        // PSU(n,q), n ≥ 3; PSU(3,2) is solvable.
        for n in 3u32..=6 {
            if n == 3 && q == 2 {
                continue;
            }
            let mut factors = vec![pw(n * (n - 1) / 2)];
            for i in 2..=n {
                factors.push(if i % 2 == 0 { pw(i) - 1 } else { pw(i) + 1 });
            }
            let d = gcd(n as u64, q + 1) as u128;
            raw.push((format!("PSU({n},{q})"), prod(&factors) / d));
        }
        // PSp(2m,q), m ≥ 2; PSp(4,2) is not simple.
        for m in 2u32..=4 {
            if m == 2 && q == 2 {
                continue;
            }
            let mut factors = vec![pw(m * m)];
            for i in 1..=m {
                factors.push(pw(2 * i) - 1);
            }
            let d = gcd(2, q - 1) as u128;
            raw.push((format!("PSp({},{q})", 2 * m), prod(&factors) / d));
        }
        // G2(q), q ≥ 3.
        if q >= 3 {
            raw.push((format!("G2({q})"), prod(&[pw(6), pw(6) - 1, pw(2) - 1])));
        }
        // Suzuki groups Sz(2^(2k+1)), q ≥ 8.
        if p == 2 && e % 2 == 1 && q >= 8 {
            raw.push((format!("Sz({q})"), prod(&[pw(2), pw(2) + 1, q128 - 1])));
        }
        // Ree groups 2G2(3^(2k+1)), q ≥ 27.
        if p == 3 && e % 2 == 1 && q >= 27 {
            raw.push((format!("2G2({q})"), prod(&[pw(3), pw(3) + 1, q128 - 1])));
        }
    }
    for &(name, order) in SPORADIC {
        raw.push((name.to_string(), order as u128));
    }

    let mut by_name: BTreeMap<String, u128> = BTreeMap::new();
    for (name, order) in raw {
        if order > limit {
            continue;
        }
        if ALIASES.iter().any(|(alias, _)| *alias == name) {
            continue;
        }
        by_name.insert(name, order);
    }
    let mut entries: Vec<SimpleGroupEntry> = by_name
        .into_iter()
        .map(|(name, order)| {
            let name = DISPLAY
                .iter()
                .find(|(key, _)| *key == name)
                .map(|(_, shown)| shown.to_string())
                .unwrap_or(name);
            SimpleGroupEntry {
                order: order as u64,
                name,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.name.cmp(&b.name)));
    entries
}

fn table() -> &'static [SimpleGroupEntry] {
    static TABLE: OnceLock<Vec<SimpleGroupEntry>> = OnceLock::new();
    TABLE.get_or_init(generate)
}

/// Non-abelian simple groups of the given order (empty if none, or if the
/// order exceeds [`SIMPLE_TABLE_LIMIT`]).
pub fn simple_order_id(order: u64) -> Vec<String> {
    table()
        .iter()
        .filter(|e| e.order == order)
        .map(|e| e.name.clone())
        .collect()
}

/// All table entries with order at most `bound`.
pub fn simple_groups_up_to(bound: u64) -> Vec<SimpleGroupEntry> {
    table()
        .iter()
        .filter(|e| e.order <= bound)
        .cloned()
        .collect()
}
