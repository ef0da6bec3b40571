//! Decomposition of a collapsible cobordism into elementary pieces and the
//! induced chain of flips, blow-ups and blow-downs between quotient fans.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cobordism::{CobordismFan, FixedComponent};
use crate::error::{Error, Result};
use crate::linalg::{circuit_relation, lattice_index, primitive_from_rationals, LatticeVector};
use crate::polyhedra::{common_refinement, star_subdivision, stellar_transform_relaxed, Cone, Fan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Flip,
    Blowup,
    Blowdown,
    Identity,
}

impl MoveKind {
    /// Kind from the sign counts of a relation; `None` if a class is empty.
    pub fn from_signs(l: usize, m: usize) -> Option<MoveKind> {
        match (l, m) {
            (0, _) | (_, 0) => None,
            (1, 1) => Some(MoveKind::Identity),
            (1, _) => Some(MoveKind::Blowdown),
            (_, 1) => Some(MoveKind::Blowup),
            _ => Some(MoveKind::Flip),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::Flip => "flip",
            MoveKind::Blowup => "blowup",
            MoveKind::Blowdown => "blowdown",
            MoveKind::Identity => "identity",
        }
    }

    pub fn parse(s: &str) -> Option<MoveKind> {
        [MoveKind::Flip, MoveKind::Blowup, MoveKind::Blowdown, MoveKind::Identity].into_iter().find(|k| k.as_str() == s)
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The minimal dependent cone of an elementary component with the expansion
/// of `v0` in its rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub cone: Cone,
    /// Rays of `cone`, positive coefficients first, each class in decreasing
    /// lexicographic order.
    pub rays: Vec<LatticeVector>,
    /// Coefficients of `v0` made primitive integral, times the multiplicity
    /// of the action, aligned with `rays`. For a regular cone these are the
    /// exact weights of the action.
    pub relation: Vec<BigInt>,
    pub l: usize,
    pub m: usize,
    pub r: usize,
}

/// One step between consecutive quotient fans.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    /// Circuit relation of `center_rays`, positive on the `weights_minus`
    /// side.
    pub relation: Vec<BigInt>,
    pub weights_minus: Vec<BigInt>,
    pub weights_plus: Vec<BigInt>,
    /// Primitive images of the circuit rays in the quotient lattice.
    pub center_rays: Vec<LatticeVector>,
}

/// Quotient fans from the lower to the upper boundary and the moves
/// between them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorizationTrace {
    pub fans: Vec<Fan>,
    pub moves: Vec<Move>,
    /// Component ids of the input cobordism in the order they were
    /// collapsed.
    pub order: Vec<usize>,
}

/// The circuit of a component with a unique minimal dependent cone.
pub fn circuit(b: &CobordismFan, f: &FixedComponent) -> Result<Circuit> {
    let minimal = f.minimal_cones();
    let [cone] = minimal[..] else {
        return Err(Error::NonElementary(format!("component {} has {} minimal dependent cones", f.id, minimal.len())));
    };
    let coeffs = cone
        .coefficients(&b.v0().to_rational())
        .ok_or_else(|| Error::InvalidInput(format!("{cone} does not contain v0 in its span")))?;
    // Cleared of denominators, then scaled back up by the multiplicity of a
    // non-effective action.
    let relation: Vec<BigInt> =
        primitive_from_rationals(&coeffs).expect("v0 is nonzero").into_coords().into_iter().map(|c| c * b.multiplicity()).collect();
    let mut idx: Vec<usize> = (0..relation.len()).collect();
    // Positive class first; within a class, decreasing lexicographic order,
    // so coordinate unit vectors come in coordinate order.
    idx.sort_by(|&i, &j| {
        (!relation[i].is_positive()).cmp(&!relation[j].is_positive()).then(cone.rays()[j].cmp(&cone.rays()[i]))
    });
    let l = relation.iter().filter(|c| c.is_positive()).count();
    let m = relation.iter().filter(|c| c.is_negative()).count();
    Ok(Circuit {
        cone: cone.clone(),
        rays: idx.iter().map(|&i| cone.rays()[i].clone()).collect(),
        relation: idx.iter().map(|&i| relation[i].clone()).collect(),
        l,
        m,
        r: f.max_dim().saturating_sub(l + m),
    })
}

/// The move induced by the elementary cobordism `e` with unique component
/// `f0`.
pub fn classify(e: &CobordismFan, f0: &FixedComponent) -> Result<Move> {
    let comps = e.fixed_components();
    if comps.len() != 1 || comps[0].cones != f0.cones {
        return Err(Error::NonElementary(format!("expected one fixed component, found {}", comps.len())));
    }
    let c = circuit(e, f0)?;
    let kind = MoveKind::from_signs(c.l, c.m)
        .ok_or_else(|| Error::NotACircuit(format!("sign classes ({}, {}) of v0 are not both nonempty", c.l, c.m)))?;
    let center_rays: Vec<LatticeVector> =
        c.rays.iter().map(|r| e.projection().apply(r).primitive()).collect::<Result<_>>()?;
    let relation = circuit_relation(&center_rays)?;
    debug_assert!(relation[..c.l].iter().all(Signed::is_positive) && relation[c.l..].iter().all(Signed::is_negative));
    Ok(Move {
        kind,
        relation,
        weights_minus: c.relation[..c.l].to_vec(),
        weights_plus: c.relation[c.l..].iter().map(|x| -x).collect(),
        center_rays,
    })
}

/// Splits a collapsible cobordism into elementary cobordisms, following the
/// collapse order from the lower boundary.
pub fn decompose(b: &CobordismFan) -> Result<Pieces> {
    Ok(decompose_with_order(b)?.0)
}

fn decompose_with_order(b: &CobordismFan) -> Result<(Pieces, Vec<usize>)> {
    let order = b.collapse_order()?;
    let mut current = b.clone();
    let mut pieces = Vec::with_capacity(order.len());
    for &id in &order {
        let target = &b.fixed_components()[id];
        let f0 = current
            .fixed_components()
            .iter()
            .find(|c| c.cones == target.cones)
            .cloned()
            .ok_or_else(|| Error::CollapseInconsistent(format!("component {id} did not survive earlier collapses")))?;
        let e = current.elementary_cobordism(&f0)?;
        let e_comp = e.fixed_components()[0].clone();
        current = current.elementary_collapse(&f0)?;
        pieces.push((e, e_comp));
    }
    Ok((pieces, order))
}

/// The two local triangulations of a move's center: cones present before
/// and after.
fn sides(m: &Move) -> Result<(Vec<Cone>, Vec<Cone>)> {
    let pair = stellar_transform_relaxed(&m.center_rays, &m.relation)?;
    // Cones omitting a negative ray contain every positive one: these form
    // the side attached to the lower boundary.
    Ok((pair.sigma2.max_cones().to_vec(), pair.sigma1.max_cones().to_vec()))
}

/// Applies a move to a fan: every maximal cone `C + L` with `C` on the
/// lower side is replaced by the cones `C' + L` of the upper side.
pub fn replay(f: &Fan, m: &Move) -> Result<Fan> {
    let bad = |detail: String| Error::ReplayMismatch { step: 0, detail };
    let n = f.ambient_rank();
    for r in &m.center_rays {
        if r.rank() != n {
            return Err(Error::RankMismatch { expected: n, found: r.rank() });
        }
    }
    let (before, after) = sides(m)?;
    let mut links: BTreeSet<Vec<LatticeVector>> = BTreeSet::new();
    let mut touched: BTreeSet<&Cone> = BTreeSet::new();
    for sigma in f.max_cones() {
        for c in &before {
            if sigma.has_face(c) {
                let link: Vec<LatticeVector> = sigma.rays().iter().filter(|r| !c.has_ray(r)).cloned().collect();
                links.insert(link);
                touched.insert(sigma);
            }
        }
    }
    if links.is_empty() {
        return Err(bad("center triangulation is not part of the fan".into()));
    }
    let mut cones: Vec<Cone> = f.max_cones().iter().filter(|s| !touched.contains(s)).cloned().collect();
    for link in &links {
        for c in &before {
            let mut rays = c.rays().to_vec();
            rays.extend(link.iter().cloned());
            let full = Cone::new(rays, n)?;
            if !f.max_cones().contains(&full) {
                return Err(bad(format!("{full} is missing from the star of the center")));
            }
        }
        for c in &after {
            let mut rays = c.rays().to_vec();
            rays.extend(link.iter().cloned());
            cones.push(Cone::new(rays, n)?);
        }
    }
    Fan::new(n, cones)
}

fn step_mismatch(step: usize, detail: impl Into<String>) -> Error {
    Error::ReplayMismatch { step, detail: detail.into() }
}

/// Factors the birational map between the quotients of the lower and upper
/// boundaries.
pub fn factor(b: &CobordismFan) -> Result<FactorizationTrace> {
    Ok(factor_with_pieces(b)?.0)
}

/// Factors from the upper boundary to the lower one, by reversing `v0`.
pub fn factor_reversed(b: &CobordismFan) -> Result<FactorizationTrace> {
    let rev = b.reversed()?;
    // Components are defined by cones alone, so ids carry over.
    debug_assert_eq!(rev.fixed_components(), b.fixed_components());
    factor(&rev)
}

type Pieces = Vec<(CobordismFan, FixedComponent)>;

fn factor_with_pieces(b: &CobordismFan) -> Result<(FactorizationTrace, Pieces)> {
    let (pieces, order) = decompose_with_order(b)?;
    let first = b.quotient_fan(&b.lower_boundary()?)?;
    let mut fans = vec![first];
    let mut moves = Vec::with_capacity(pieces.len());
    for (i, (e, f0)) in pieces.iter().enumerate() {
        let lower = e.quotient_fan(&e.lower_boundary()?)?;
        if &lower != fans.last().unwrap() {
            return Err(step_mismatch(i, "lower quotient of the piece differs from the previous fan"));
        }
        moves.push(classify(e, f0)?);
        fans.push(e.quotient_fan(&e.upper_boundary()?)?);
    }
    let trace = FactorizationTrace { fans, moves, order };
    let report = verify_trace(b, &trace);
    if let Some(failure) = report.failures.into_iter().next() {
        return Err(step_mismatch(failure.step.unwrap_or(0), failure.detail));
    }
    Ok((trace, pieces))
}

/// Blow-up of `f` at the circuit ray followed by a blow-down, realizing a
/// flip. Returns the middle fan with the two moves.
pub fn flip_as_blowup_blowdown(m: &Move, f: &Fan) -> Result<(Fan, Move, Move)> {
    if m.kind != MoveKind::Flip {
        return Err(Error::WrongMoveKind(format!("expected flip, got {}", m.kind)));
    }
    let l = m.weights_minus.len();
    let mut sum = LatticeVector::zero(f.ambient_rank());
    for (c, w) in m.relation[..l].iter().zip(&m.center_rays) {
        sum = sum.add(&w.scale(c));
    }
    let rho = sum.primitive()?;
    let g = sum.content();
    let middle = star_subdivision(f, &rho)?;

    let mut up_rays: Vec<LatticeVector> = m.center_rays[..l].to_vec();
    up_rays.push(rho.clone());
    let mut up_rel: Vec<BigInt> = m.relation[..l].to_vec();
    up_rel.push(-g.clone());
    let up = Move {
        kind: MoveKind::Blowup,
        weights_minus: up_rel[..l].to_vec(),
        weights_plus: vec![g.clone()],
        relation: up_rel,
        center_rays: up_rays,
    };
    let mut down_rays = vec![rho.clone()];
    down_rays.extend(m.center_rays[l..].iter().cloned());
    let mut down_rel = vec![g.clone()];
    down_rel.extend(m.relation[l..].iter().cloned());
    let down = Move {
        kind: MoveKind::Blowdown,
        weights_minus: vec![g],
        weights_plus: m.relation[l..].iter().map(|x| -x).collect(),
        relation: down_rel,
        center_rays: down_rays,
    };
    // Normalize both relations to the canonical primitive form.
    let up = renormalize(up)?;
    let down = renormalize(down)?;

    let flipped = replay(f, m)?;
    if replay(f, &up)? != middle {
        return Err(step_mismatch(0, "blow-up replay differs from the star subdivision"));
    }
    if replay(&middle, &down)? != flipped {
        return Err(step_mismatch(0, "blow-down replay differs from the flip"));
    }
    if common_refinement(f, &flipped)? != middle {
        return Err(step_mismatch(0, "common refinement differs from the star subdivision"));
    }
    Ok((middle, up, down))
}

fn renormalize(mut m: Move) -> Result<Move> {
    let canonical = circuit_relation(&m.center_rays)?;
    if canonical.iter().zip(&m.relation).any(|(a, b)| a.sign() != b.sign()) {
        return Err(Error::NotACircuit("relation signs disagree with the center rays".into()));
    }
    m.relation = canonical;
    Ok(m)
}

/// Does the common refinement of the two local triangulations of the
/// center equal the star subdivision of either at the circuit ray?
pub fn local_flip_check(m: &Move) -> Result<bool> {
    let pair = stellar_transform_relaxed(&m.center_rays, &m.relation)?;
    let l = m.weights_minus.len();
    let mut sum = LatticeVector::zero(m.center_rays[0].rank());
    for (c, w) in m.relation[..l].iter().zip(&m.center_rays) {
        sum = sum.add(&w.scale(c));
    }
    let rho = sum.primitive()?;
    let refined = common_refinement(&pair.sigma1, &pair.sigma2)?;
    Ok(refined == star_subdivision(&pair.sigma1, &rho)? && refined == star_subdivision(&pair.sigma2, &rho)?)
}

/// One failed check of a trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFailure {
    /// Move index, or `None` for whole-trace checks.
    pub step: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub failures: Vec<TraceFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, step: Option<usize>, detail: impl Into<String>) {
        self.failures.push(TraceFailure { step, detail: detail.into() });
    }
}

/// Re-checks endpoints, per-step replay, kinds against sign counts and, for
/// moves between smooth fans, that all relation coefficients are `±1`.
pub fn verify_trace(b: &CobordismFan, t: &FactorizationTrace) -> VerifyReport {
    let mut report = VerifyReport::default();
    if t.fans.len() != t.moves.len() + 1 {
        report.fail(None, format!("{} fans for {} moves", t.fans.len(), t.moves.len()));
        return report;
    }
    let endpoints = b
        .lower_boundary()
        .and_then(|f| b.quotient_fan(&f))
        .and_then(|lo| Ok((lo, b.quotient_fan(&b.upper_boundary()?)?)));
    match endpoints {
        Ok((lo, hi)) => {
            if t.fans[0] != lo {
                report.fail(Some(0), "first fan is not the quotient of the lower boundary");
            }
            if t.fans.last() != Some(&hi) {
                report.fail(Some(t.moves.len().saturating_sub(1)), "last fan is not the quotient of the upper boundary");
            }
        }
        Err(e) => report.fail(None, format!("boundary quotients unavailable: {e}")),
    }
    for (i, m) in t.moves.iter().enumerate() {
        let l = m.relation.iter().filter(|c| c.is_positive()).count();
        let k = m.relation.len() - l;
        if MoveKind::from_signs(l, k) != Some(m.kind) {
            report.fail(Some(i), format!("kind {} does not match sign counts ({l}, {k})", m.kind));
        }
        if m.weights_minus.len() != l || m.weights_plus.len() != k {
            report.fail(Some(i), "weight tuple lengths do not match sign counts");
        }
        if m.center_rays.len() != m.relation.len() {
            report.fail(Some(i), "relation length differs from the number of center rays");
            continue;
        }
        match replay(&t.fans[i], m) {
            Ok(next) if next == t.fans[i + 1] => {}
            Ok(_) => report.fail(Some(i), "replay does not produce the next fan"),
            Err(e) => report.fail(Some(i), format!("replay failed: {e}")),
        }
        let smooth = t.fans[i].is_regular() && t.fans[i + 1].is_regular();
        if smooth && m.kind != MoveKind::Identity && m.relation.iter().any(|c| !c.abs().is_one()) {
            report.fail(Some(i), "move between smooth fans has a nontrivial weight");
        }
    }
    report
}

/// Outcome of the cyclic-singularity audit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularityAudit {
    /// Moves whose elementary piece is smooth and was therefore checked.
    pub checked: Vec<usize>,
    pub failures: Vec<TraceFailure>,
}

/// For every move whose elementary piece is smooth, the cones created or
/// removed by the move have lattice index dividing the product of the
/// weights.
pub fn singularity_audit(b: &CobordismFan) -> Result<(FactorizationTrace, SingularityAudit)> {
    let (trace, pieces) = factor_with_pieces(b)?;
    let mut audit = SingularityAudit::default();
    for (i, ((e, _), m)) in pieces.iter().zip(&trace.moves).enumerate() {
        if !e.fan().is_regular() {
            continue;
        }
        audit.checked.push(i);
        let product: BigInt = m.weights_minus.iter().chain(&m.weights_plus).product();
        let before: BTreeSet<&Cone> = trace.fans[i].max_cones().iter().collect();
        let after: BTreeSet<&Cone> = trace.fans[i + 1].max_cones().iter().collect();
        for c in before.symmetric_difference(&after) {
            let index = lattice_index(c.rays())?;
            if !(&product % &index).is_zero() {
                audit.fail(i, format!("{c} has index {index}, weights product {product}"));
            }
        }
    }
    Ok((trace, audit))
}

impl SingularityAudit {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, step: usize, detail: String) {
        self.failures.push(TraceFailure { step: Some(step), detail });
    }
}
