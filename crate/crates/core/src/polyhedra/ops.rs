use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cone::Cone;
use super::fan::Fan;
use crate::error::{Error, Result};
use crate::linalg::{circuit_relation, LatticeVector};

/// Star subdivision of `f` at the ray through `rho`.
///
/// Every cone containing `rho` must be simplicial. A cone `σ` whose face `τ`
/// carries `rho` in its relative interior is replaced by the cones obtained
/// by swapping one ray of `τ` for the new ray.
pub fn star_subdivision(f: &Fan, rho: &LatticeVector) -> Result<Fan> {
    rho.check_rank(f.ambient_rank())?;
    let v_rho = rho.primitive()?;
    let point = v_rho.to_rational();
    let carriers: Vec<&Cone> = f.max_cones().iter().filter(|c| c.contains(&point, false)).collect();
    if carriers.is_empty() {
        return Err(Error::OutsideSupport);
    }
    if carriers.iter().any(|c| !c.is_simplicial()) {
        return Err(Error::NonSimplicialCarrier);
    }
    if carriers.iter().any(|c| c.has_ray(&v_rho)) {
        return Ok(f.clone());
    }
    let mut cones: Vec<Cone> = Vec::new();
    for sigma in f.max_cones() {
        if !sigma.contains(&point, false) {
            cones.push(sigma.clone());
            continue;
        }
        let coeffs = sigma.coefficients(&point).expect("carrier is simplicial and contains rho");
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_positive() {
                let mut rays: Vec<LatticeVector> = sigma.rays().to_vec();
                rays[i] = v_rho.clone();
                cones.push(Cone::new(rays, f.ambient_rank())?);
            }
        }
    }
    Fan::new(f.ambient_rank(), cones)
}

/// The two triangulations of a circuit cone together with the circuit
/// relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StellarPair {
    /// Cones omitting a ray with positive coefficient.
    pub sigma1: Fan,
    /// Cones omitting a ray with negative coefficient.
    pub sigma2: Fan,
    /// Relation coefficients, aligned with the input ray order.
    pub relation: Vec<BigInt>,
}

/// Stellar transform of a circuit in canonical orientation: at least two
/// positive and at least one negative coefficient.
pub fn stellar_transform(sigma_rays: &[LatticeVector]) -> Result<StellarPair> {
    let relation = circuit_relation(sigma_rays)?;
    let l = relation.iter().filter(|c| c.is_positive()).count();
    let m = relation.len() - l;
    if m == 0 {
        return Err(Error::NotACircuit("all coefficients positive".into()));
    }
    if l < 2 {
        return Err(Error::NotACircuit("fewer than two positive coefficients".into()));
    }
    stellar_pair(sigma_rays, relation)
}

/// Stellar transform for an explicitly oriented relation; any nonempty sign
/// classes are allowed, so one side may be a single cone.
pub fn stellar_transform_relaxed(sigma_rays: &[LatticeVector], relation: &[BigInt]) -> Result<StellarPair> {
    let canonical = circuit_relation(sigma_rays)?;
    let flipped: Vec<BigInt> = canonical.iter().map(|c| -c).collect();
    if relation != canonical.as_slice() && relation != flipped.as_slice() {
        return Err(Error::NotACircuit("relation does not match the vectors".into()));
    }
    if relation.iter().all(|c| c.is_positive()) || relation.iter().all(|c| c.is_negative()) {
        return Err(Error::NotACircuit("a sign class is empty".into()));
    }
    stellar_pair(sigma_rays, relation.to_vec())
}

fn stellar_pair(rays: &[LatticeVector], relation: Vec<BigInt>) -> Result<StellarPair> {
    let n = rays[0].rank();
    let omit = |keep_sign: bool| -> Result<Fan> {
        let mut cones = Vec::new();
        for (i, c) in relation.iter().enumerate() {
            if c.is_positive() == keep_sign && !c.is_zero() {
                let rest: Vec<LatticeVector> =
                    rays.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
                cones.push(Cone::new(rest, n)?);
            }
        }
        Fan::new(n, cones)
    };
    Ok(StellarPair { sigma1: omit(true)?, sigma2: omit(false)?, relation })
}

/// Is every maximal cone of `a` covered by cones of `b`?
///
/// The pieces `σ ∩ τ` of full dimension in `σ` form a fan inside `σ`; they
/// cover `σ` exactly when each piece facet off the boundary of `σ` is
/// shared with another piece.
fn support_within(a: &Fan, b: &Fan) -> bool {
    for sigma in a.max_cones() {
        if sigma.is_zero() {
            continue;
        }
        let pieces: Vec<Cone> = b
            .max_cones()
            .iter()
            .map(|t| sigma.intersection(t))
            .filter(|p| p.dim() == sigma.dim())
            .collect();
        if pieces.is_empty() {
            return false;
        }
        let on_boundary = |face: &Cone| {
            sigma.facet_normals().iter().any(|n| face.rays().iter().all(|r| n.pair(r).is_zero()))
        };
        for (i, p) in pieces.iter().enumerate() {
            for face in p.faces().into_iter().filter(|f| f.dim() + 1 == p.dim()) {
                if on_boundary(&face) {
                    continue;
                }
                let shared = pieces.iter().enumerate().any(|(j, q)| j != i && q.has_face(&face));
                if !shared {
                    return false;
                }
            }
        }
    }
    true
}

/// Do the fans have the same support?
pub fn same_support(f1: &Fan, f2: &Fan) -> bool {
    f1.ambient_rank() == f2.ambient_rank() && support_within(f1, f2) && support_within(f2, f1)
}

/// The fan of all intersections `τ1 ∩ τ2`.
pub fn common_refinement(f1: &Fan, f2: &Fan) -> Result<Fan> {
    if f1.ambient_rank() != f2.ambient_rank() {
        return Err(Error::RankMismatch { expected: f1.ambient_rank(), found: f2.ambient_rank() });
    }
    if !same_support(f1, f2) {
        return Err(Error::SupportMismatch);
    }
    let mut cones = Vec::new();
    for a in f1.max_cones() {
        for b in f2.max_cones() {
            cones.push(a.intersection(b));
        }
    }
    let max_dim = cones.iter().map(Cone::dim).max().unwrap_or(0);
    // Lower-dimensional intersections are faces of full ones when supports agree.
    let full: Vec<Cone> = cones.into_iter().filter(|c| c.dim() == max_dim || c.is_zero()).collect();
    Fan::new(f1.ambient_rank(), full)
}
