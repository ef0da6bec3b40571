use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    fm_feasible, lattice_index, lattice_rows, nullspace, primitive_from_rationals, rank_of, solve_in_basis, Inequality,
    LatticeVector, Rat, RationalVector,
};

#[derive(Clone, Debug)]
struct HRep {
    /// Basis of the orthogonal complement of the span.
    equations: Vec<RationalVector>,
    /// Inner facet normals, primitive, chosen inside the span.
    facets: Vec<RationalVector>,
}

/// A strongly convex rational polyhedral cone given by its extreme rays.
///
/// Rays are primitive and sorted; equality, ordering and hashing use only
/// the ray list and the ambient rank.
#[derive(Clone)]
pub struct Cone {
    ambient_rank: usize,
    rays: Vec<LatticeVector>,
    dim: usize,
    hrep: OnceLock<HRep>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank && self.rays == other.rays
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient_rank.hash(state);
        self.rays.hash(state);
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient_rank, &self.rays).cmp(&(other.ambient_rank, &other.rays))
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone⟨{}⟩", self.rays.iter().join(", "))
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", self.rays.iter().join(", "))
    }
}

impl Cone {
    /// Builds a cone from its extreme rays. Generators are primitivized;
    /// redundant generators, lines and rank mismatches are rejected.
    pub fn new(rays: Vec<LatticeVector>, ambient_rank: usize) -> Result<Cone> {
        let cone = Self::unvalidated(rays, ambient_rank)?;
        if !cone.is_simplicial() {
            if !cone.is_pointed() {
                return Err(Error::InvalidCone(format!("{cone} contains a line")));
            }
            if let Some(r) = cone.rays.iter().find(|r| !cone.is_extreme(r)) {
                return Err(Error::InvalidCone(format!("generator {r} of {cone} is not extremal")));
            }
        }
        Ok(cone)
    }

    /// The cone generated by arbitrary nonzero vectors; non-extremal
    /// generators are dropped.
    pub fn from_generators(gens: Vec<LatticeVector>, ambient_rank: usize) -> Result<Cone> {
        let cone = Self::unvalidated(gens, ambient_rank)?;
        if cone.is_simplicial() {
            return Ok(cone);
        }
        if !cone.is_pointed() {
            return Err(Error::InvalidCone(format!("{cone} contains a line")));
        }
        let extreme: Vec<LatticeVector> = cone.rays.iter().filter(|r| cone.is_extreme(r)).cloned().collect();
        Self::unvalidated(extreme, ambient_rank)
    }

    pub fn zero(ambient_rank: usize) -> Cone {
        Cone { ambient_rank, rays: Vec::new(), dim: 0, hrep: OnceLock::new() }
    }

    fn unvalidated(rays: Vec<LatticeVector>, ambient_rank: usize) -> Result<Cone> {
        let mut prim = Vec::with_capacity(rays.len());
        for r in &rays {
            r.check_rank(ambient_rank)?;
            prim.push(r.primitive()?);
        }
        prim.sort();
        prim.dedup();
        let dim = rank_of(&lattice_rows(&prim), ambient_rank);
        Ok(Cone { ambient_rank, rays: prim, dim, hrep: OnceLock::new() })
    }

    /// Sub-cone on a subset of this cone's rays (assumed to be a face).
    pub(crate) fn sub_cone(&self, rays: Vec<LatticeVector>) -> Cone {
        let dim = rank_of(&lattice_rows(&rays), self.ambient_rank);
        let mut rays = rays;
        rays.sort();
        Cone { ambient_rank: self.ambient_rank, rays, dim, hrep: OnceLock::new() }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.dim == self.rays.len()
    }

    /// Simplicial with generators extending to a lattice basis.
    pub fn is_regular(&self) -> bool {
        self.is_simplicial() && lattice_index(&self.rays).is_ok_and(|i| i == 1.into())
    }

    pub fn has_ray(&self, r: &LatticeVector) -> bool {
        self.rays.binary_search(r).is_ok()
    }

    fn is_pointed(&self) -> bool {
        let ineqs: Vec<Inequality> =
            self.rays.iter().map(|r| Inequality { coeffs: r.to_rational().coords().to_vec(), strict: true }).collect();
        fm_feasible(self.ambient_rank, &[], &ineqs)
    }

    fn is_extreme(&self, r: &LatticeVector) -> bool {
        let h = self.hrep();
        let mut tight: Vec<Vec<Rat>> = h.equations.iter().map(|e| e.coords().to_vec()).collect();
        tight.extend(h.facets.iter().filter(|f| f.pair(r).is_zero()).map(|f| f.coords().to_vec()));
        rank_of(&tight, self.ambient_rank) + 1 == self.ambient_rank
    }

    fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| self.compute_hrep())
    }

    fn compute_hrep(&self) -> HRep {
        let n = self.ambient_rank;
        let equations: Vec<RationalVector> = nullspace(&lattice_rows(&self.rays), n)
            .into_iter()
            .map(|v| primitive_from_rationals(&v).expect("basis vector").to_rational())
            .collect();
        let eq_rows: Vec<Vec<Rat>> = equations.iter().map(|e| e.coords().to_vec()).collect();
        let mut facets: BTreeSet<RationalVector> = BTreeSet::new();
        if self.dim == 0 {
            return HRep { equations, facets: Vec::new() };
        }
        for subset in self.rays.iter().combinations(self.dim - 1) {
            let mut rows = eq_rows.clone();
            rows.extend(subset.iter().map(|r| r.to_rational().coords().to_vec()));
            let ker = nullspace(&rows, n);
            if ker.len() != 1 {
                continue;
            }
            let normal = primitive_from_rationals(&ker[0]).expect("kernel vector").to_rational();
            let signs: Vec<Rat> = self.rays.iter().map(|r| normal.pair(r)).collect();
            if signs.iter().all(|s| !s.is_negative()) {
                facets.insert(normal);
            } else if signs.iter().all(|s| !s.is_positive()) {
                facets.insert(normal.neg());
            }
        }
        HRep { equations, facets: facets.into_iter().collect() }
    }

    /// Primitive inner facet normals, chosen in the span of the cone.
    pub fn facet_normals(&self) -> &[RationalVector] {
        &self.hrep().facets
    }

    /// A basis of the covectors vanishing on the span of the cone.
    pub fn equations(&self) -> &[RationalVector] {
        &self.hrep().equations
    }

    pub fn in_span(&self, v: &RationalVector) -> bool {
        self.equations().iter().all(|e| e.dot(v).is_zero())
    }

    /// Membership test; with `relative_interior` the point must lie strictly
    /// inside every facet.
    pub fn contains(&self, v: &RationalVector, relative_interior: bool) -> bool {
        if v.rank() != self.ambient_rank || !self.in_span(v) {
            return false;
        }
        self.facet_normals().iter().all(|f| {
            let s = f.dot(v);
            if relative_interior {
                s.is_positive()
            } else {
                !s.is_negative()
            }
        })
    }

    pub fn contains_lattice(&self, v: &LatticeVector, relative_interior: bool) -> bool {
        self.contains(&v.to_rational(), relative_interior)
    }

    /// Whether `other` is contained in `self` as a set.
    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains_lattice(r, false))
    }

    /// Whether `other` is a face of `self`.
    pub fn has_face(&self, other: &Cone) -> bool {
        if !other.rays.iter().all(|r| self.has_ray(r)) {
            return false;
        }
        // Every subset of the rays of a simplicial cone spans a face.
        if self.is_simplicial() {
            return true;
        }
        self.face_of_rays(&other.rays).is_some_and(|f| f.rays == other.rays)
    }

    /// The smallest face containing the given rays of this cone.
    fn face_of_rays(&self, rays: &[LatticeVector]) -> Option<Cone> {
        if self.is_simplicial() {
            return Some(self.sub_cone(rays.to_vec()));
        }
        let tight: Vec<&RationalVector> =
            self.facet_normals().iter().filter(|f| rays.iter().all(|r| f.pair(r).is_zero())).collect();
        let face_rays: Vec<LatticeVector> =
            self.rays.iter().filter(|r| tight.iter().all(|f| f.pair(r).is_zero())).cloned().collect();
        Some(self.sub_cone(face_rays))
    }

    /// All faces, including the cone itself and the zero cone.
    pub fn faces(&self) -> Vec<Cone> {
        let mut out: BTreeSet<Cone> = BTreeSet::new();
        if self.is_simplicial() {
            for k in 0..=self.rays.len() {
                for subset in self.rays.iter().cloned().combinations(k) {
                    out.insert(self.sub_cone(subset));
                }
            }
            return out.into_iter().collect();
        }
        let mut stack = vec![self.clone()];
        while let Some(c) = stack.pop() {
            if !out.insert(c.clone()) {
                continue;
            }
            if c.is_simplicial() {
                out.extend(c.faces());
                continue;
            }
            for f in c.facet_normals() {
                let rays: Vec<LatticeVector> = c.rays.iter().filter(|r| f.pair(r).is_zero()).cloned().collect();
                stack.push(c.sub_cone(rays));
            }
        }
        out.into_iter().collect()
    }

    /// Coefficients of `v` in the ray basis of a simplicial cone, if `v` lies
    /// in the span.
    pub fn coefficients(&self, v: &RationalVector) -> Option<Vec<Rat>> {
        if !self.is_simplicial() {
            return None;
        }
        let cols = lattice_rows(&self.rays);
        solve_in_basis(&cols, v.coords())
    }

    /// Intersection with another cone, computed from the joint H-description.
    pub fn intersection(&self, other: &Cone) -> Cone {
        assert_eq!(self.ambient_rank, other.ambient_rank);
        if self.contains_cone(other) {
            return other.clone();
        }
        if other.contains_cone(self) {
            return self.clone();
        }
        let n = self.ambient_rank;
        let eqs: Vec<Vec<Rat>> =
            self.equations().iter().chain(other.equations()).map(|e| e.coords().to_vec()).collect();
        let ineqs: Vec<&RationalVector> = self.facet_normals().iter().chain(other.facet_normals()).collect();
        let rays = extreme_rays(n, &eqs, &ineqs);
        Cone::unvalidated(rays, n).expect("extreme rays are nonzero")
    }
}

/// Extreme rays of the pointed cone `{x : eqs·x = 0, ineqs·x ≥ 0}`.
pub(crate) fn extreme_rays(n: usize, eqs: &[Vec<Rat>], ineqs: &[&RationalVector]) -> Vec<LatticeVector> {
    let eq_rank = rank_of(eqs, n);
    if eq_rank >= n {
        return Vec::new();
    }
    let dim = n - eq_rank;
    let mut out: BTreeSet<LatticeVector> = BTreeSet::new();
    let feasible = |x: &RationalVector| ineqs.iter().all(|f| !f.dot(x).is_negative());
    for subset in ineqs.iter().combinations(dim - 1) {
        let mut rows = eqs.to_vec();
        rows.extend(subset.iter().map(|f| f.coords().to_vec()));
        let ker = nullspace(&rows, n);
        if ker.len() != 1 {
            continue;
        }
        let x = RationalVector::new(ker[0].clone());
        for cand in [x.clone(), x.neg()] {
            if feasible(&cand) {
                out.insert(cand.primitive_lattice().expect("nonzero"));
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn rv(c: &[i64]) -> RationalVector {
        lv(c).to_rational()
    }

    fn cone(rays: &[&[i64]]) -> Cone {
        let n = rays[0].len();
        Cone::new(rays.iter().map(|r| lv(r)).collect(), n).unwrap()
    }

    #[test]
    fn simplicial_faces() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(c.faces().len(), 4);
        assert_eq!(Cone::zero(3).faces(), vec![Cone::zero(3)]);
    }

    #[test]
    fn square_cone_has_ten_faces() {
        let c = cone(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 1], &[0, 0, 1]]);
        assert!(!c.is_simplicial());
        assert_eq!(c.facet_normals().len(), 4);
        let faces = c.faces();
        assert_eq!(faces.len(), 10);
        assert_eq!(faces.iter().filter(|f| f.dim() == 1).count(), 4);
        assert_eq!(faces.iter().filter(|f| f.dim() == 2).count(), 4);
        let diagonal = Cone::new(vec![lv(&[1, 0, 1]), lv(&[0, 1, 1])], 3).unwrap();
        assert!(!c.has_face(&diagonal));
    }

    #[test]
    fn membership() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert!(c.contains(&rv(&[1, 1]), true));
        assert!(!c.contains(&rv(&[1, 0]), true));
        assert!(c.contains(&rv(&[1, 0]), false));
        assert!(!c.contains(&rv(&[1, -1]), false));
        let ray = cone(&[&[1, 1, 0]]);
        assert!(ray.contains(&rv(&[2, 2, 0]), true));
        assert!(!ray.contains(&rv(&[2, 2, 1]), false));
        assert!(Cone::zero(2).contains(&rv(&[0, 0]), true));
    }

    #[test]
    fn invalid_cones() {
        assert!(Cone::new(vec![lv(&[1, 0]), lv(&[-1, 0])], 2).is_err());
        assert!(Cone::new(vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])], 2).is_err());
        assert!(Cone::new(vec![lv(&[1, 0, 0])], 2).is_err());
        let c = Cone::from_generators(vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])], 2).unwrap();
        assert_eq!(c.rays().len(), 2);
    }

    #[test]
    fn intersections() {
        let a = cone(&[&[1, 0], &[0, 1]]);
        let b = cone(&[&[1, 1], &[-1, 1]]);
        assert_eq!(a.intersection(&b), cone(&[&[1, 1], &[0, 1]]));
        let c = cone(&[&[1, 0], &[0, -1]]);
        assert_eq!(a.intersection(&c), cone(&[&[1, 0]]));
        let d = cone(&[&[-1, 0], &[0, -1]]);
        assert!(a.intersection(&d).is_zero());
    }
}
