use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use super::PermError;

/// A permutation of `{0, …, degree-1}` stored by its point images.
///
/// Permutations act on the left: `p.apply(x)` is `p(x)`, and
/// `p.compose(&q)` is the map `x ↦ p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting anything that is
    /// not a bijection of `{0, …, len-1}`.
    pub fn from_images<I>(images: I) -> Result<Self, PermError>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotABijection { images });
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` for
    /// the 3-cycle `(0 1 2)`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(PermError::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(PermError::NotABijection { images });
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked [`compose`](Self::compose); degrees must agree.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g · self · g⁻¹`.
    pub(crate) fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g p g⁻¹)(g(x)) = g(p(x))
        let mut images = vec![0u32; self.images.len()];
        for (x, &px) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[px as usize];
        }
        Permutation { images }
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub(crate) fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Lengths of all cycles, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycle_lengths()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.iter().copied()).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        assert_eq!(
            p(&[1, 0, 2]).compose(&Permutation::identity(3)).unwrap(),
            p(&[1, 0, 2])
        );
        assert_eq!(
            p(&[1, 0, 2]).compose(&p(&[2, 1, 0])).unwrap(),
            p(&[2, 0, 1])
        );
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = p(&[1, 0]).compose(&Permutation::identity(3)).unwrap_err();
        assert!(matches!(
            err,
            PermError::DegreeMismatch {
                expected: 2,
                found: 3
            }
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p(&[1, 2, 0]).inverse(), p(&[2, 0, 1]));
        assert_eq!(p(&[1, 0, 3, 2]).inverse(), p(&[1, 0, 3, 2]));
        let q = p(&[3, 0, 4, 1, 2]);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images([0, 0, 1]).is_err());
        assert!(Permutation::from_images([0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn conjugation_and_display() {
        let a = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let g = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let c = a.conjugate_by(&g);
        assert_eq!(c, g.mul(&a).mul(&g.inverse()));
        assert_eq!(c.to_string(), "(0 2)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn element_order_is_cycle_lcm() {
        let q = Permutation::from_cycles(7, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(q.order(), BigUint::from(6u32));
        assert!(!Permutation::from_cycles(3, &[&[0, 1]]).unwrap().is_even());
    }
}
