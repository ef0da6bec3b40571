//! Fans with a distinguished one-parameter subgroup: orbit limits, boundary
//! fans, quotients, fixed components and their flow order, and the
//! elementary collapses.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{lp_feasible, quotient_projection, LatticeVector, ProjectionMap, Rat, RationalVector};
use crate::polyhedra::{Cone, Fan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `t → 0`: the orbit is pushed along `v0`.
    ToZero,
    /// `t → ∞`: the orbit is pushed along `−v0`.
    ToInfinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Cones whose generic orbits have no limit at `t → 0`.
    Lower,
    /// Cones whose generic orbits have no limit at `t → ∞`.
    Upper,
}

/// A simplicial fan together with a primitive vector `v0` generating the
/// acting one-parameter subgroup. The action itself is `t ↦ t^{k·v0}` for a
/// positive multiplicity `k`; it is 1 unless built with `from_action`.
#[derive(Clone, Debug)]
pub struct CobordismFan {
    fan: Fan,
    v0: LatticeVector,
    multiplicity: BigInt,
    projection: ProjectionMap,
    cones: Vec<Cone>,
    flows: OnceLock<Flows>,
    components: OnceLock<Vec<FixedComponent>>,
}

#[derive(Clone, Debug)]
struct Flows {
    dependent: Vec<bool>,
    /// Limit cones at `t → 0` and `t → ∞`; both `None` for fixed cones.
    limits: Vec<(Option<Cone>, Option<Cone>)>,
}

impl PartialEq for CobordismFan {
    fn eq(&self, other: &Self) -> bool {
        self.fan == other.fan && self.v0 == other.v0 && self.multiplicity == other.multiplicity
    }
}

impl Eq for CobordismFan {}

/// A face-connected set of dependent cones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedComponent {
    pub id: usize,
    /// Sorted canonically.
    pub cones: Vec<Cone>,
}

impl FixedComponent {
    /// Dependent cones of the component none of whose proper faces is
    /// dependent.
    pub fn minimal_cones(&self) -> Vec<&Cone> {
        self.cones
            .iter()
            .filter(|c| !self.cones.iter().any(|d| d != *c && c.has_face(d)))
            .collect()
    }

    pub fn max_dim(&self) -> usize {
        self.cones.iter().map(Cone::dim).max().unwrap_or(0)
    }
}

/// Immediate-predecessor edges between fixed components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredecessorGraph {
    pub components: Vec<FixedComponent>,
    /// `(from, to)` with `from ≠ to`, mapped to witness cones.
    pub edges: BTreeMap<(usize, usize), Vec<Cone>>,
    /// Components with an orbit flowing from the component back into itself.
    pub self_loops: BTreeMap<usize, Vec<Cone>>,
}

impl PredecessorGraph {
    /// Kahn's algorithm, smallest id first. On failure returns a directed
    /// cycle through distinct components.
    pub fn topological_order(&self) -> std::result::Result<Vec<usize>, Vec<usize>> {
        let k = self.components.len();
        let mut indeg = vec![0usize; k];
        for &(_, to) in self.edges.keys() {
            indeg[to] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..k).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(k);
        while let Some(&i) = ready.iter().next() {
            ready.remove(&i);
            order.push(i);
            for &(from, to) in self.edges.keys() {
                if from == i {
                    indeg[to] -= 1;
                    if indeg[to] == 0 {
                        ready.insert(to);
                    }
                }
            }
        }
        if order.len() == k {
            return Ok(order);
        }
        Err(self.find_cycle(&order))
    }

    fn find_cycle(&self, done: &[usize]) -> Vec<usize> {
        let alive: BTreeSet<usize> = (0..self.components.len()).filter(|i| !done.contains(i)).collect();
        // Every surviving node has a surviving predecessor; walk backwards
        // until a node repeats.
        let pred = |i: usize| {
            self.edges.keys().find(|&&(from, to)| to == i && alive.contains(&from)).map(|&(from, _)| from).unwrap()
        };
        let mut path = vec![*alive.iter().next().unwrap()];
        loop {
            let p = pred(*path.last().unwrap());
            if let Some(pos) = path.iter().position(|&x| x == p) {
                let mut cycle: Vec<usize> = path[pos..].iter().rev().copied().collect();
                let start = cycle.iter().position_min().unwrap();
                cycle.rotate_left(start);
                return cycle;
            }
            path.push(p);
        }
    }

    /// Components without incoming edges from other components.
    pub fn minimal_components(&self) -> Vec<usize> {
        (0..self.components.len()).filter(|&i| !self.edges.keys().any(|&(f, t)| t == i && f != i)).collect()
    }

    /// DOT rendering; edges carry the indices of their witness cones in
    /// `cone_index`.
    pub fn to_dot(&self, cone_index: &dyn Fn(&Cone) -> usize, signature: &dyn Fn(&FixedComponent) -> String) -> String {
        let mut out = String::from("digraph predecessors {\n");
        for c in &self.components {
            let _ = writeln!(out, "  F{} [label=\"F{} {}\"];", c.id, c.id, signature(c));
        }
        let loops = self.self_loops.iter().map(|(&k, v)| ((k, k), v));
        for ((from, to), witnesses) in self.edges.iter().map(|(&k, v)| (k, v)).chain(loops).sorted() {
            let idx = witnesses.iter().map(cone_index).join(",");
            let _ = writeln!(out, "  F{from} -> F{to} [label=\"{idx}\"];");
        }
        out.push_str("}\n");
        out
    }
}

impl CobordismFan {
    /// Requires a simplicial fan and a primitive `v0`; both boundary fans
    /// must be nonempty.
    pub fn new(fan: Fan, v0: LatticeVector) -> Result<CobordismFan> {
        let b = Self::assemble(fan, v0)?;
        if b.fan.max_cones().is_empty() {
            return Err(Error::NotACobordism("empty fan".into()));
        }
        b.lower_boundary()?;
        b.upper_boundary()?;
        Ok(b)
    }

    fn assemble(fan: Fan, v0: LatticeVector) -> Result<CobordismFan> {
        let projection = quotient_projection(&v0, fan.ambient_rank())?;
        if !fan.is_simplicial() {
            return Err(Error::NotACobordism("fan is not simplicial".into()));
        }
        let cones = fan.cones();
        let multiplicity = BigInt::one();
        Ok(CobordismFan { fan, v0, multiplicity, projection, cones, flows: OnceLock::new(), components: OnceLock::new() })
    }

    /// The cobordism of a possibly non-effective action `t ↦ t^{action}`:
    /// `v0` is the primitive part and the content is kept as multiplicity.
    /// Geometry depends on `v0` only; the multiplicity scales weights.
    pub fn from_action(fan: Fan, action: LatticeVector) -> Result<CobordismFan> {
        let mut b = CobordismFan::new(fan, action.primitive()?)?;
        b.multiplicity = action.content();
        Ok(b)
    }

    pub fn multiplicity(&self) -> &BigInt {
        &self.multiplicity
    }

    /// `multiplicity · v0`.
    pub fn action(&self) -> LatticeVector {
        self.v0.scale(&self.multiplicity)
    }

    /// Same fan and multiplicity, opposite action.
    pub fn reversed(&self) -> Result<CobordismFan> {
        CobordismFan::from_action(self.fan.clone(), self.action().neg())
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn v0(&self) -> &LatticeVector {
        &self.v0
    }

    pub fn projection(&self) -> &ProjectionMap {
        &self.projection
    }

    pub fn ambient_rank(&self) -> usize {
        self.fan.ambient_rank()
    }

    /// All cones of the fan in canonical order.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone_index(&self, tau: &Cone) -> Option<usize> {
        self.cones.binary_search(tau).ok()
    }

    /// `v0 ∈ span(τ)`: the orbit of `τ` is pointwise fixed.
    pub fn is_dependent(&self, tau: &Cone) -> bool {
        match self.cone_index(tau) {
            Some(i) => self.flows().dependent[i],
            None => tau.in_span(&self.v0.to_rational()),
        }
    }

    fn direction_vector(&self, direction: Direction) -> LatticeVector {
        match direction {
            Direction::ToZero => self.v0.clone(),
            Direction::ToInfinity => self.v0.neg(),
        }
    }

    fn check_non_fixed(&self, tau: &Cone) -> Result<usize> {
        let idx = self.cone_index(tau).ok_or(Error::ConeNotInFan)?;
        if self.is_dependent(tau) {
            return Err(Error::OrbitFixed);
        }
        Ok(idx)
    }

    /// The cone whose orbit contains the limit of a generic point of the
    /// orbit of `tau`, or `None` if the limit does not exist.
    pub fn limit_orbit(&self, tau: &Cone, direction: Direction) -> Result<Option<Cone>> {
        let idx = self.check_non_fixed(tau)?;
        let (zero, inf) = &self.limits()[idx];
        Ok(match direction {
            Direction::ToZero => zero.clone(),
            Direction::ToInfinity => inf.clone(),
        })
    }

    /// Limit existence through the dual criterion: the limit fails inside a
    /// maximal cone `Δ ⊇ τ` iff some `F ∈ Δ^∨ ∩ τ^⊥` has `⟨F, w⟩ < 0`.
    pub fn limit_exists_lp(&self, tau: &Cone, direction: Direction) -> Result<bool> {
        self.check_non_fixed(tau)?;
        let w = self.direction_vector(direction);
        let eqs: Vec<RationalVector> = tau.rays().iter().map(LatticeVector::to_rational).collect();
        for delta in self.fan.max_cones().iter().filter(|d| d.has_face(tau)) {
            if !lp_feasible(&eqs, delta.rays(), &w)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Dependence and both limits of every cone, from the expansion of `v0`
    /// in each maximal cone. In a simplicial `Δ ⊇ τ` with `w = Σ c_r r`, the
    /// limit along `w` is `γ = τ + ⟨r ∉ τ : c_r ≠ 0⟩` when those `c_r` are all
    /// positive and at least one exists: then `w ∈ relint(γ) + span(τ)`.
    fn flows(&self) -> &Flows {
        self.flows.get_or_init(|| {
            let v0 = self.v0.to_rational();
            let maximal = self.fan.max_cones();
            let expansions: Vec<Option<Vec<Rat>>> = maximal.par_iter().map(|d| d.coefficients(&v0)).collect();
            let per_cone: Vec<(bool, Option<Cone>, Option<Cone>)> = self
                .cones
                .par_iter()
                .map(|tau| {
                    let stars: Vec<(&Cone, &Vec<Rat>)> = maximal
                        .iter()
                        .zip(&expansions)
                        .filter(|(d, _)| tau.rays().iter().all(|r| d.has_ray(r)))
                        .filter_map(|(d, c)| c.as_ref().map(|c| (d, c)))
                        .collect();
                    let outside = |d: &Cone, c: &[Rat]| -> Vec<(LatticeVector, Rat)> {
                        d.rays().iter().zip(c).filter(|(r, c)| !tau.has_ray(r) && !c.is_zero()).map(|(r, c)| (r.clone(), c.clone())).collect()
                    };
                    if stars.first().is_some_and(|(d, c)| outside(d, c).is_empty()) {
                        return (true, None, None);
                    }
                    let limit = |sign: bool| {
                        stars.iter().find_map(|(d, c)| {
                            let out = outside(d, c);
                            let ok = !out.is_empty() && out.iter().all(|(_, c)| c.is_positive() == sign);
                            ok.then(|| {
                                let mut rays = tau.rays().to_vec();
                                rays.extend(out.into_iter().map(|(r, _)| r));
                                d.sub_cone(rays)
                            })
                        })
                    };
                    (false, limit(true), limit(false))
                })
                .collect();
            let mut flows = Flows { dependent: Vec::with_capacity(per_cone.len()), limits: Vec::with_capacity(per_cone.len()) };
            for (dep, zero, inf) in per_cone {
                flows.dependent.push(dep);
                flows.limits.push((zero, inf));
            }
            flows
        })
    }

    fn limits(&self) -> &[(Option<Cone>, Option<Cone>)] {
        &self.flows().limits
    }

    /// The subfan of non-fixed cones without a limit in the given direction.
    pub fn boundary(&self, side: Side) -> Result<Fan> {
        let cones: Vec<Cone> = self
            .cones
            .iter()
            .zip(self.limits())
            .filter(|(tau, (zero, inf))| {
                !self.is_dependent(tau)
                    && match side {
                        Side::Lower => zero.is_none(),
                        Side::Upper => inf.is_none(),
                    }
            })
            .map(|(tau, _)| tau.clone())
            .collect();
        let which = match side {
            Side::Lower => "lower",
            Side::Upper => "upper",
        };
        if cones.is_empty() {
            return Err(Error::NotACobordism(format!("{which} boundary is empty")));
        }
        let fan = Fan::from_cones_unchecked(self.ambient_rank(), cones.clone());
        // The points without a limit must form an open set, i.e. a subfan.
        if fan.cones() != cones {
            return Err(Error::NotACobordism(format!("points without a limit on the {which} side do not form an open set")));
        }
        Ok(fan)
    }

    pub fn lower_boundary(&self) -> Result<Fan> {
        self.boundary(Side::Lower)
    }

    pub fn upper_boundary(&self) -> Result<Fan> {
        self.boundary(Side::Upper)
    }

    /// Image of a subfan under the projection along `v0`.
    pub fn quotient_fan(&self, subfan: &Fan) -> Result<Fan> {
        let n = self.ambient_rank();
        if subfan.ambient_rank() != n {
            return Err(Error::RankMismatch { expected: n, found: subfan.ambient_rank() });
        }
        let mut images = Vec::new();
        for c in subfan.max_cones() {
            if !c.is_simplicial() || self.is_dependent(c) {
                return Err(Error::NotPiInjective(c.to_string()));
            }
            let rays: Vec<LatticeVector> = c.rays().iter().map(|r| self.projection.apply(r)).collect();
            let image = Cone::new(rays, n - 1).map_err(|e| Error::NotPiInjective(e.to_string()))?;
            if image.dim() != c.dim() {
                return Err(Error::NotPiInjective(c.to_string()));
            }
            images.push(image);
        }
        if images.is_empty() {
            return Fan::new(n - 1, Vec::new());
        }
        Fan::new(n - 1, images).map_err(|e| Error::QuotientNotGeometric(e.to_string()))
    }

    /// Dependent cones grouped by face-connectivity, ordered by their
    /// smallest cone.
    pub fn fixed_components(&self) -> &[FixedComponent] {
        self.components.get_or_init(|| {
            let dep: Vec<&Cone> = self.cones.iter().filter(|c| self.is_dependent(c)).collect();
            let mut parent: Vec<usize> = (0..dep.len()).collect();
            fn find(p: &mut [usize], i: usize) -> usize {
                let mut r = i;
                while p[r] != r {
                    r = p[r];
                }
                p[i] = r;
                r
            }
            for (i, j) in (0..dep.len()).tuple_combinations() {
                if dep[i].has_face(dep[j]) || dep[j].has_face(dep[i]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
            let mut groups: BTreeMap<usize, Vec<Cone>> = BTreeMap::new();
            for (i, &cone) in dep.iter().enumerate() {
                let root = find(&mut parent, i);
                groups.entry(root).or_default().push(cone.clone());
            }
            let mut comps: Vec<Vec<Cone>> = groups.into_values().collect();
            for c in comps.iter_mut() {
                c.sort();
            }
            comps.sort_by(|a, b| a[0].cmp(&b[0]));
            comps.into_iter().enumerate().map(|(id, cones)| FixedComponent { id, cones }).collect()
        })
    }

    fn component_lookup(&self) -> HashMap<&Cone, usize> {
        self.fixed_components().iter().flat_map(|c| c.cones.iter().map(move |x| (x, c.id))).collect()
    }

    pub fn component_of(&self, tau: &Cone) -> Option<usize> {
        self.fixed_components().iter().find(|c| c.cones.binary_search(tau).is_ok()).map(|c| c.id)
    }

    pub fn predecessor_graph(&self) -> PredecessorGraph {
        let lookup = self.component_lookup();
        let mut edges: BTreeMap<(usize, usize), Vec<Cone>> = BTreeMap::new();
        let mut self_loops: BTreeMap<usize, Vec<Cone>> = BTreeMap::new();
        for (tau, (zero, inf)) in self.cones.iter().zip(self.limits()) {
            let (Some(z), Some(i)) = (zero, inf) else { continue };
            let from = lookup[z];
            let to = lookup[i];
            if from == to {
                self_loops.entry(from).or_default().push(tau.clone());
            } else {
                edges.entry((from, to)).or_default().push(tau.clone());
            }
        }
        PredecessorGraph { components: self.fixed_components().to_vec(), edges, self_loops }
    }

    /// A topological order of the fixed components, or the offending cycle.
    pub fn collapse_order(&self) -> Result<Vec<usize>> {
        self.predecessor_graph().topological_order().map_err(|cycle| Error::NonCollapsible { cycle })
    }

    pub fn is_collapsible(&self) -> bool {
        self.collapse_order().is_ok()
    }

    fn resolve_component(&self, f0: &FixedComponent) -> Result<usize> {
        if f0.cones.is_empty() {
            return Err(Error::InvalidInput("empty fixed component".into()));
        }
        let id = self
            .fixed_components()
            .iter()
            .find(|c| c.cones == f0.cones)
            .map(|c| c.id)
            .ok_or_else(|| Error::InvalidInput("not a fixed component of this cobordism".into()))?;
        if !self.predecessor_graph().minimal_components().contains(&id) {
            return Err(Error::NotMinimal(id));
        }
        Ok(id)
    }

    /// Removes an upward-closed set of cones.
    fn remove(&self, removed: &BTreeSet<Cone>) -> Result<CobordismFan> {
        for tau in removed {
            for g in &self.cones {
                if !removed.contains(g) && g.has_face(tau) {
                    return Err(Error::CollapseInconsistent(format!("{g} survives but its face {tau} is removed")));
                }
            }
        }
        let kept: Vec<Cone> = self.cones.iter().filter(|c| !removed.contains(*c)).cloned().collect();
        let fan = Fan::from_cones_unchecked(self.ambient_rank(), kept);
        CobordismFan::from_action(fan, self.action())
    }

    /// Removes every cone flowing into the minimal component `f0` as
    /// `t → ∞`, together with `f0`.
    pub fn elementary_collapse(&self, f0: &FixedComponent) -> Result<CobordismFan> {
        let id = self.resolve_component(f0)?;
        let lookup = self.component_lookup();
        let removed: BTreeSet<Cone> = self
            .cones
            .iter()
            .zip(self.limits())
            .filter(|(tau, (_, inf))| lookup.get(tau) == Some(&id) || inf.as_ref().is_some_and(|g| lookup[g] == id))
            .map(|(tau, _)| tau.clone())
            .collect();
        self.remove(&removed)
    }

    /// Removes every other component and the cones flowing into one as
    /// `t → 0`.
    pub fn elementary_cobordism(&self, f0: &FixedComponent) -> Result<CobordismFan> {
        let id = self.resolve_component(f0)?;
        let lookup = self.component_lookup();
        let removed: BTreeSet<Cone> = self
            .cones
            .iter()
            .zip(self.limits())
            .filter(|(tau, (zero, _))| {
                lookup.get(tau).is_some_and(|&c| c != id) || zero.as_ref().is_some_and(|g| lookup[g] != id)
            })
            .map(|(tau, _)| tau.clone())
            .collect();
        self.remove(&removed)
    }

    /// Sign counts `(l, m)` of `v0` expanded in the unique minimal dependent
    /// cone of a component.
    pub fn signature(&self, f: &FixedComponent) -> Option<(usize, usize)> {
        let [tau] = f.minimal_cones()[..] else { return None };
        let coeffs = tau.coefficients(&self.v0.to_rational())?;
        let l = coeffs.iter().filter(|c| c.is_positive()).count();
        let m = coeffs.iter().filter(|c| c.is_negative()).count();
        debug_assert!(coeffs.iter().all(|c| !c.is_zero()));
        Some((l, m))
    }

    pub fn predecessor_dot(&self) -> String {
        let graph = self.predecessor_graph();
        let index = |c: &Cone| self.cone_index(c).expect("witness is a cone of the fan");
        let sig = |f: &FixedComponent| match self.signature(f) {
            Some((l, m)) => format!("({l},{m})"),
            None => "(?)".into(),
        };
        graph.to_dot(&index, &sig)
    }
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

    fn orthant(n: usize) -> Fan {
        Fan::from_cone(Cone::new((0..n).map(|i| LatticeVector::unit(n, i)).collect(), n).unwrap())
    }

    fn atiyah() -> CobordismFan {
        CobordismFan::new(orthant(4), lv(&[1, 1, -1, -1])).unwrap()
    }

    #[test]
    fn atiyah_boundaries() {
        let b = atiyah();
        let lower = b.lower_boundary().unwrap();
        let upper = b.upper_boundary().unwrap();
        assert_eq!(lower, Fan::new(4, vec![cone(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]), cone(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])]).unwrap());
        assert_eq!(upper, Fan::new(4, vec![cone(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]), cone(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])]).unwrap());
    }

    #[test]
    fn atiyah_quotients() {
        let b = atiyah();
        let q_lower = b.quotient_fan(&b.lower_boundary().unwrap()).unwrap();
        let expected = Fan::new(3, vec![cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, -1]])]).unwrap();
        assert_eq!(q_lower, expected);
        let q_upper = b.quotient_fan(&b.upper_boundary().unwrap()).unwrap();
        assert_ne!(q_upper, q_lower);
        assert!(crate::polyhedra::same_support(&q_lower, &q_upper));
        assert!(matches!(b.quotient_fan(b.fan()), Err(Error::NotPiInjective(_))));
    }

    #[test]
    fn atiyah_limits_agree_with_lp() {
        let b = atiyah();
        for tau in b.cones().iter().filter(|c| !b.is_dependent(c)) {
            for dir in [Direction::ToZero, Direction::ToInfinity] {
                assert_eq!(b.limit_orbit(tau, dir).unwrap().is_some(), b.limit_exists_lp(tau, dir).unwrap(), "{tau:?}");
            }
        }
        let e1 = cone(&[&[1, 0, 0, 0]]);
        assert_eq!(b.limit_orbit(&e1, Direction::ToZero).unwrap(), None);
        let e12 = cone(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(b.limit_orbit(&e12, Direction::ToInfinity).unwrap(), Some(b.fan().max_cones()[0].clone()));
        assert_eq!(b.limit_orbit(&b.fan().max_cones()[0], Direction::ToZero), Err(Error::OrbitFixed));
        assert_eq!(b.limit_orbit(&cone(&[&[1, 1, 0, 0]]), Direction::ToZero), Err(Error::ConeNotInFan));
    }

    #[test]
    fn torus_orbit_limit_is_carrier() {
        let f = Fan::new(2, vec![cone(&[&[1, 0], &[0, 1]]), cone(&[&[0, 1], &[-1, 0]])]).unwrap();
        let b = CobordismFan::assemble(f, lv(&[1, 2])).unwrap();
        assert_eq!(b.limit_orbit(&Cone::zero(2), Direction::ToZero).unwrap(), Some(cone(&[&[1, 0], &[0, 1]])));
        assert_eq!(b.limit_orbit(&Cone::zero(2), Direction::ToInfinity).unwrap(), None);
    }

    #[test]
    fn components_and_collapse() {
        let b = atiyah();
        let comps = b.fixed_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].cones, vec![b.fan().max_cones()[0].clone()]);
        let g = b.predecessor_graph();
        assert!(g.edges.is_empty());
        assert_eq!(b.collapse_order().unwrap(), vec![0]);
        let collapsed = b.elementary_collapse(&comps[0]).unwrap();
        assert_eq!(collapsed.fan(), &b.upper_boundary().unwrap());
        assert_eq!(collapsed.lower_boundary().unwrap(), b.upper_boundary().unwrap());
        assert_eq!(b.elementary_cobordism(&comps[0]).unwrap(), b);
        let empty = FixedComponent { id: 0, cones: vec![] };
        assert!(b.elementary_collapse(&empty).is_err());
        assert_eq!(b.signature(&comps[0]), Some((2, 2)));
    }

    #[test]
    fn weighted_block_component() {
        let b = CobordismFan::new(orthant(3), lv(&[1, -1, 0])).unwrap();
        let comps = b.fixed_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].cones, vec![cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), cone(&[&[1, 0, 0], &[0, 1, 0]])]);
        let z = cone(&[&[0, 0, 1]]);
        assert!(b.lower_boundary().unwrap().contains_cone(&z));
        assert!(b.upper_boundary().unwrap().contains_cone(&z));
        let ql = b.quotient_fan(&b.lower_boundary().unwrap()).unwrap();
        let qu = b.quotient_fan(&b.upper_boundary().unwrap()).unwrap();
        assert_eq!(ql, qu);
    }

    #[test]
    fn cycles_are_reported_through_distinct_components() {
        let comp = |id| FixedComponent { id, cones: vec![] };
        let w = vec![Cone::zero(2)];
        let mut g = PredecessorGraph {
            components: (0..4).map(comp).collect(),
            edges: [((0, 1), w.clone()), ((1, 2), w.clone()), ((2, 3), w.clone()), ((3, 1), w.clone())].into_iter().collect(),
            self_loops: BTreeMap::new(),
        };
        assert_eq!(g.topological_order(), Err(vec![1, 2, 3]));
        g.edges.remove(&(3, 1));
        g.self_loops.insert(2, w);
        assert_eq!(g.topological_order(), Ok(vec![0, 1, 2, 3]));
        assert_eq!(g.minimal_components(), vec![0]);
    }

    #[test]
    fn no_fixed_points() {
        let b = CobordismFan::new(orthant(2), lv(&[1, -1])).unwrap();
        assert_eq!(b.fixed_components().len(), 1);
        let f = Fan::new(2, vec![cone(&[&[1, 0]])]).unwrap();
        let b = CobordismFan::new(f, lv(&[0, 1])).unwrap();
        assert!(b.fixed_components().is_empty());
        assert!(b.predecessor_graph().edges.is_empty());
        assert!(b.collapse_order().unwrap().is_empty());
    }
}
