//! Brute-force reference implementations, independent of the library's
//! algorithms. Elements are image vectors; `compose(p, q)[x] = p[q[x]]`.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

pub type Elem = Vec<usize>;

pub fn compose(p: &[usize], q: &[usize]) -> Elem {
    q.iter().map(|&x| p[x]).collect()
}

pub fn inverse(p: &[usize]) -> Elem {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// All elements of the group generated by `gens`, by breadth-first search.
pub fn closure(degree: usize, gens: &[Elem]) -> HashSet<Elem> {
    let id: Elem = (0..degree).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// All set partitions of `0..n` as block labels (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for label in 0..=max + 1 {
            cur.push(label);
            rec(n, cur, max.max(label), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        let mut cur = vec![0];
        rec(n, &mut cur, 0, &mut out);
    }
    out
}

/// Whether the partition with labels `p` is preserved by every generator.
pub fn is_invariant(p: &[usize], gens: &[Elem]) -> bool {
    gens.iter()
        .all(|g| (0..p.len()).all(|x| (0..p.len()).all(|y| (p[x] == p[y]) == (p[g[x]] == p[g[y]]))))
}

pub fn orbit_of_zero(degree: usize, gens: &[Elem]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([0]);
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for g in gens {
            if seen.insert(g[x]) {
                stack.push(g[x]);
            }
        }
    }
    let _ = degree;
    seen
}

pub fn is_transitive(degree: usize, gens: &[Elem]) -> bool {
    orbit_of_zero(degree, gens).len() == degree
}

/// Transitive with no invariant partition other than the two trivial ones.
pub fn is_primitive(degree: usize, gens: &[Elem]) -> bool {
    is_transitive(degree, gens)
        && set_partitions(degree).iter().all(|p| {
            let blocks = p.iter().max().map_or(0, |m| m + 1);
            blocks == 1 || blocks == degree || !is_invariant(p, gens)
        })
}

/// The block of 0 in the finest invariant partition joining 0 and `beta`.
pub fn minimal_block(degree: usize, gens: &[Elem], beta: usize) -> BTreeSet<usize> {
    let mut block: BTreeSet<usize> = (0..degree).collect();
    for p in set_partitions(degree) {
        if p[0] == p[beta] && is_invariant(&p, gens) {
            block.retain(|&x| p[x] == p[0]);
        }
    }
    block
}

/// Conjugacy classes of a finite group given as a full element list.
pub fn conjugacy_classes(elements: &[Elem]) -> Vec<BTreeSet<Elem>> {
    let mut seen: HashSet<Elem> = HashSet::new();
    let mut classes = Vec::new();
    for x in elements {
        if seen.contains(x) {
            continue;
        }
        let class: BTreeSet<Elem> = elements
            .iter()
            .map(|g| compose(&compose(g, x), &inverse(g)))
            .collect();
        seen.extend(class.iter().cloned());
        classes.push(class);
    }
    classes
}

/// Every normal subgroup, as a union of conjugacy classes closed under
/// multiplication.
pub fn normal_subgroups(elements: &[Elem]) -> Vec<BTreeSet<Elem>> {
    let degree = elements[0].len();
    let id: Elem = (0..degree).collect();
    let order = elements.len();
    let classes: Vec<BTreeSet<Elem>> = conjugacy_classes(elements)
        .into_iter()
        .filter(|c| !c.contains(&id))
        .collect();
    let mut out = Vec::new();
    let k = classes.len();
    assert!(k <= 24, "too many classes for subset enumeration");
    for mask in 0u32..(1 << k) {
        let size = 1
            + (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| classes[i].len())
                .sum::<usize>();
        if !order.is_multiple_of(size) {
            continue;
        }
        let mut set: BTreeSet<Elem> = BTreeSet::from([id.clone()]);
        for i in (0..k).filter(|i| mask & (1 << i) != 0) {
            set.extend(classes[i].iter().cloned());
        }
        let closed = set
            .iter()
            .all(|a| set.iter().all(|b| set.contains(&compose(a, b))));
        if closed {
            out.push(set);
        }
    }
    out
}

/// The minimal non-trivial members of the normal-subgroup lattice.
pub fn minimal_normal_subgroups(elements: &[Elem]) -> BTreeSet<BTreeSet<Elem>> {
    let normals: Vec<BTreeSet<Elem>> = normal_subgroups(elements)
        .into_iter()
        .filter(|n| n.len() > 1)
        .collect();
    normals
        .iter()
        .filter(|n| !normals.iter().any(|m| m.len() < n.len() && m.is_subset(n)))
        .cloned()
        .collect()
}

/// One oriented square `(a, b, a2, b2)`.
pub type Sq = [usize; 4];

fn orientations(hinv: &[usize], vinv: &[usize], s: Sq) -> [Sq; 4] {
    let [a, b, a2, b2] = s;
    [
        s,
        [hinv[a], b2, hinv[a2], b],
        [a2, vinv[b], a, vinv[b2]],
        [hinv[a2], vinv[b2], hinv[a], vinv[b]],
    ]
}

/// Every complete, orientation-closed square set, found by assigning the
/// corner bijection `(a, b) ↦ (b′, a′)` one first corner at a time and
/// filtering by orientation closure.
pub fn complete_data_by_bijections(hinv: &[usize], vinv: &[usize]) -> BTreeSet<Vec<Sq>> {
    let (n, m) = (hinv.len(), vinv.len());
    let mut assigned: Vec<Option<(usize, usize)>> = vec![None; n * m];
    let mut used = vec![false; n * m];
    let mut out = BTreeSet::new();

    // A partial assignment is kept only if no assigned square forces a
    // re-orientation that contradicts another assignment.
    fn consistent(
        assigned: &[Option<(usize, usize)>],
        hinv: &[usize],
        vinv: &[usize],
        m: usize,
    ) -> bool {
        for (i, slot) in assigned.iter().enumerate() {
            let Some((a2, b2)) = *slot else { continue };
            let s = [i / m, i % m, a2, b2];
            for t in orientations(hinv, vinv, s) {
                if let Some((x, y)) = assigned[t[0] * m + t[1]] {
                    if (x, y) != (t[2], t[3]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rec(
        i: usize,
        assigned: &mut Vec<Option<(usize, usize)>>,
        used: &mut Vec<bool>,
        hinv: &[usize],
        vinv: &[usize],
        out: &mut BTreeSet<Vec<Sq>>,
    ) {
        let (n, m) = (hinv.len(), vinv.len());
        if i == n * m {
            let mut squares: Vec<Sq> = (0..n * m)
                .map(|j| {
                    let (a2, b2) = assigned[j].expect("complete");
                    [j / m, j % m, a2, b2]
                })
                .collect();
            let set: BTreeSet<Sq> = squares.iter().copied().collect();
            let closed = squares
                .iter()
                .all(|&s| orientations(hinv, vinv, s).iter().all(|t| set.contains(t)));
            if closed {
                squares.sort();
                out.insert(squares);
            }
            return;
        }
        for a2 in 0..n {
            for b2 in 0..m {
                let target = a2 * m + b2;
                if used[target] {
                    continue;
                }
                assigned[i] = Some((a2, b2));
                used[target] = true;
                if consistent(assigned, hinv, vinv, m) {
                    rec(i + 1, assigned, used, hinv, vinv, out);
                }
                used[target] = false;
                assigned[i] = None;
            }
        }
    }

    rec(0, &mut assigned, &mut used, hinv, vinv, &mut out);
    out
}

/// All reduced words of length `k` over an alphabet with inverse map `inv`,
/// found by filtering every tuple.
pub fn reduced_words(inv: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = inv.len();
    let mut out = Vec::new();
    for code in 0..n.pow(k as u32) {
        let word: Vec<usize> = (0..k).map(|i| (code / n.pow(i as u32)) % n).collect();
        if word.windows(2).all(|w| w[1] != inv[w[0]]) {
            out.push(word);
        }
    }
    out
}

/// Order of the group generated by the letters of one alphabet acting on the
/// reduced words of length `k` of the other, read straight off the squares.
///
/// `on_horizontal` selects the action of vertical letters on horizontal words
/// (`b·a = a*·b*`); otherwise horizontal letters act on vertical words
/// (`a·b = b′·a′`).
pub fn sphere_action_order(
    squares: &[Sq],
    hinv: &[usize],
    vinv: &[usize],
    on_horizontal: bool,
    k: usize,
) -> usize {
    let (states, letters_inv) = if on_horizontal {
        (vinv.len(), hinv)
    } else {
        (hinv.len(), vinv)
    };
    let words = reduced_words(letters_inv, k);
    let act = |state: usize, letter: usize| -> (usize, usize) {
        let sq = squares
            .iter()
            .find(|s| {
                if on_horizontal {
                    s[2] == letter && s[3] == state
                } else {
                    s[0] == state && s[1] == letter
                }
            })
            .expect("complete datum");
        if on_horizontal {
            (sq[0], sq[1])
        } else {
            (sq[3], sq[2])
        }
    };
    let gens: Vec<Elem> = (0..states)
        .map(|s| {
            words
                .iter()
                .map(|w| {
                    let mut state = s;
                    let image: Vec<usize> = w
                        .iter()
                        .map(|&x| {
                            let (out, next) = act(state, x);
                            state = next;
                            out
                        })
                        .collect();
                    words
                        .iter()
                        .position(|u| *u == image)
                        .expect("reduced image")
                })
                .collect()
        })
        .collect();
    closure(words.len(), &gens).len()
}
