use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use super::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::{fm_feasible, Inequality, LatticeVector, RationalVector};

/// A finite fan, stored by its maximal cones in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fan {
    ambient_rank: usize,
    max_cones: Vec<Cone>,
}

impl fmt::Debug for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fan[{}]", self.max_cones.iter().map(|c| c.to_string()).join(" "))
    }
}

/// Do `a` and `b` meet in a common face? Decided through a separating
/// covector: zero on the common rays, positive on the rest of `a`, negative
/// on the rest of `b`.
pub fn meet_in_common_face(a: &Cone, b: &Cone) -> bool {
    let common: Vec<&LatticeVector> = a.rays().iter().filter(|r| b.has_ray(r)).collect();
    let eqs: Vec<_> = common.iter().map(|r| r.to_rational().coords().to_vec()).collect();
    let mut ineqs = Vec::new();
    for r in a.rays().iter().filter(|r| !b.has_ray(r)) {
        ineqs.push(Inequality { coeffs: r.to_rational().coords().to_vec(), strict: true });
    }
    for r in b.rays().iter().filter(|r| !a.has_ray(r)) {
        ineqs.push(Inequality { coeffs: r.neg().to_rational().coords().to_vec(), strict: true });
    }
    fm_feasible(a.ambient_rank(), &eqs, &ineqs)
}

impl Fan {
    /// Validates that the cones pairwise meet in common faces; cones that
    /// are faces of other listed cones are absorbed.
    pub fn new(ambient_rank: usize, cones: Vec<Cone>) -> Result<Fan> {
        for c in &cones {
            if c.ambient_rank() != ambient_rank {
                return Err(Error::RankMismatch { expected: ambient_rank, found: c.ambient_rank() });
            }
        }
        let fan = Self::from_cones_unchecked(ambient_rank, cones);
        for (a, b) in fan.max_cones.iter().tuple_combinations() {
            if !meet_in_common_face(a, b) {
                return Err(Error::InvalidFan(format!("{a} and {b} do not meet in a common face")));
            }
        }
        Ok(fan)
    }

    /// Keeps the inclusion-maximal cones without validating compatibility.
    pub(crate) fn from_cones_unchecked(ambient_rank: usize, cones: Vec<Cone>) -> Fan {
        let set: BTreeSet<Cone> = cones.into_iter().collect();
        let all: Vec<Cone> = set.into_iter().collect();
        let max_cones: Vec<Cone> = all
            .iter()
            .filter(|c| {
                !all.iter().any(|d| d != *c && d.rays().len() > c.rays().len() && c.rays().iter().all(|r| d.has_ray(r)))
            })
            .cloned()
            .collect();
        Fan { ambient_rank, max_cones }
    }

    /// The fan consisting of one cone and its faces.
    pub fn from_cone(cone: Cone) -> Fan {
        Fan { ambient_rank: cone.ambient_rank(), max_cones: vec![cone] }
    }

    /// The fan with only the zero cone.
    pub fn trivial(ambient_rank: usize) -> Fan {
        Fan { ambient_rank, max_cones: vec![Cone::zero(ambient_rank)] }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// All cones of the fan, sorted canonically.
    pub fn cones(&self) -> Vec<Cone> {
        let mut out: BTreeSet<Cone> = BTreeSet::new();
        out.insert(Cone::zero(self.ambient_rank));
        for c in &self.max_cones {
            out.extend(c.faces());
        }
        out.into_iter().collect()
    }

    /// All rays, sorted.
    pub fn rays(&self) -> Vec<LatticeVector> {
        self.max_cones.iter().flat_map(|c| c.rays().iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn is_simplicial(&self) -> bool {
        self.max_cones.iter().all(Cone::is_simplicial)
    }

    pub fn is_regular(&self) -> bool {
        self.max_cones.iter().all(Cone::is_regular)
    }

    pub fn contains_cone(&self, c: &Cone) -> bool {
        self.max_cones.iter().any(|m| m.has_face(c))
    }

    pub fn contains_point(&self, v: &RationalVector) -> bool {
        self.max_cones.iter().any(|c| c.contains(v, false))
    }

    /// The unique cone containing `v` in its relative interior.
    pub fn carrier(&self, v: &RationalVector) -> Option<Cone> {
        self.max_cones
            .iter()
            .filter(|c| c.contains(v, false))
            .flat_map(|c| c.faces())
            .find(|f| f.contains(v, true))
    }

    pub fn max_dim(&self) -> usize {
        self.max_cones.iter().map(Cone::dim).max().unwrap_or(0)
    }
}

/// Equality of fans as sets of cones.
pub fn fans_equal(f1: &Fan, f2: &Fan) -> bool {
    f1 == f2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn cone(rays: &[&[i64]]) -> Cone {
        Cone::new(rays.iter().map(|r| lv(r)).collect(), rays[0].len()).unwrap()
    }

    #[test]
    fn equality_ignores_listing_order() {
        let a = Fan::new(2, vec![cone(&[&[1, 0], &[1, 1]]), cone(&[&[1, 1], &[0, 1]])]).unwrap();
        let b = Fan::new(2, vec![cone(&[&[0, 1], &[1, 1]]), cone(&[&[1, 0], &[1, 1]])]).unwrap();
        assert!(fans_equal(&a, &b));
        let c = Fan::new(2, vec![cone(&[&[1, 0], &[0, 1]])]).unwrap();
        assert!(!fans_equal(&a, &c));
    }

    #[test]
    fn rejects_overlaps() {
        // Overlapping 2-cones.
        assert!(Fan::new(2, vec![cone(&[&[1, 0], &[0, 1]]), cone(&[&[1, 1], &[-1, 1]])]).is_err());
        // Two triangulations of one square cone.
        let sq1 = cone(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let sq2 = cone(&[&[1, 0, 1], &[0, 0, 1], &[0, 1, 1]]);
        let sq3 = cone(&[&[0, 1, 1], &[0, 0, 1], &[1, 1, 1]]);
        assert!(Fan::new(3, vec![sq1.clone(), sq2]).is_ok());
        assert!(Fan::new(3, vec![sq1, sq3]).is_err());
        // A ray through the interior of a 2-cone's facet.
        assert!(Fan::new(2, vec![cone(&[&[1, 0], &[0, 1]]), cone(&[&[1, 1]])]).is_err());
        // Crossing 2-cones in 3-space.
        assert!(Fan::new(3, vec![cone(&[&[1, 0, 0], &[0, 1, 0]]), cone(&[&[1, 1, 1], &[1, 1, -1]])]).is_err());
    }

    #[test]
    fn absorbs_faces_and_counts_cones() {
        let f = Fan::new(2, vec![cone(&[&[1, 0], &[0, 1]]), cone(&[&[1, 0]])]).unwrap();
        assert_eq!(f.max_cones().len(), 1);
        assert_eq!(f.cones().len(), 4);
        assert_eq!(f.carrier(&lv(&[2, 3]).to_rational()).unwrap(), cone(&[&[1, 0], &[0, 1]]));
        assert_eq!(f.carrier(&lv(&[0, 3]).to_rational()).unwrap(), cone(&[&[0, 1]]));
        assert!(f.carrier(&lv(&[-1, 3]).to_rational()).is_none());
    }
}
