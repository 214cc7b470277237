use crate::permcore::PermGroup;

use super::GroupPropsError;

/// A partition of the points into blocks; blocks and their members are sorted.
pub type BlockSystem = Vec<Vec<usize>>;

fn check_degree(g: &PermGroup) -> Result<(), GroupPropsError> {
    if g.degree() < 2 {
        return Err(GroupPropsError::DegreeTooSmall { degree: g.degree() });
    }
    Ok(())
}

pub fn is_transitive(g: &PermGroup) -> Result<bool, GroupPropsError> {
    check_degree(g)?;
    Ok(g.is_transitive_on_all_points())
}

/// Transitive, with the stabilizer of 0 transitive on the other points.
pub fn is_2transitive(g: &PermGroup) -> Result<bool, GroupPropsError> {
    if !is_transitive(g)? {
        return Ok(false);
    }
    let stab = g.point_stabilizer(0)?;
    Ok(stab.orbit(1)?.len() == g.degree() - 1)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes, keeping the smaller root. Returns false if they
    /// were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Smallest block system in which `a` and `b` share a block (Atkinson).
fn minimal_block_containing(g: &PermGroup, a: usize, b: usize) -> BlockSystem {
    let n = g.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = Vec::new();
    if uf.union(a, b) {
        queue.push((a, b));
    }
    while let Some((x, y)) = queue.pop() {
        for gen in g.generators() {
            let (gx, gy) = (gen.apply(x), gen.apply(y));
            if uf.union(gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 0..n {
        let r = uf.find(x);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(x);
    }
    blocks
}

/// For each `β = 1, …, degree-1` (in order), the minimal block system with
/// `0` and `β` in a common block.
pub fn minimal_block_systems(g: &PermGroup) -> Result<Vec<BlockSystem>, GroupPropsError> {
    if !is_transitive(g)? {
        return Err(GroupPropsError::NotTransitive);
    }
    Ok((1..g.degree())
        .map(|beta| minimal_block_containing(g, 0, beta))
        .collect())
}

/// Transitive with only the trivial block systems.
pub fn is_primitive(g: &PermGroup) -> Result<bool, GroupPropsError> {
    if !is_transitive(g)? {
        return Ok(false);
    }
    Ok(minimal_block_systems(g)?.iter().all(|sys| sys.len() == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Permutation;

    fn c4() -> PermGroup {
        PermGroup::new(4, vec![Permutation::from_images([1, 2, 3, 0]).unwrap()]).unwrap()
    }

    #[test]
    fn c4_has_the_antipodal_block_system() {
        let systems = minimal_block_systems(&c4()).unwrap();
        assert_eq!(systems[0], vec![vec![0, 1, 2, 3]]);
        assert_eq!(systems[1], vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(systems[2], vec![vec![0, 1, 2, 3]]);
        assert!(!is_primitive(&c4()).unwrap());
    }

    #[test]
    fn transitivity_grades() {
        let a6 = PermGroup::alternating(6);
        assert!(is_transitive(&a6).unwrap());
        assert!(is_2transitive(&a6).unwrap());
        assert!(is_primitive(&a6).unwrap());
        assert!(!is_transitive(&PermGroup::trivial(3)).unwrap());
        assert!(!is_2transitive(&c4()).unwrap());
    }

    #[test]
    fn degree_one_is_rejected() {
        assert!(matches!(
            is_transitive(&PermGroup::trivial(1)),
            Err(GroupPropsError::DegreeTooSmall { degree: 1 })
        ));
        assert!(matches!(
            minimal_block_systems(&PermGroup::trivial(3)),
            Err(GroupPropsError::NotTransitive)
        ));
    }
}
