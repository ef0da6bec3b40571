//! Builders for cobordism fans: weighted affine blocks, chains of blocks,
//! linear actions on projective space and the slab over two polytopes.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::cobordism::CobordismFan;
use crate::error::{Error, Result};
use crate::linalg::{fm_feasible, nullspace, primitive_from_rationals, rank_of, solve_in_basis, Inequality, LatticeVector, RationalVector};
use crate::polyhedra::{Cone, Fan};

type Rat = BigRational;

/// Weights `a` (attracting as `t → 0`), `b` (repelling) and `r` neutral
/// directions of a diagonal action on affine space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSpec {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub r: usize,
}

impl WeightSpec {
    pub fn new(a: Vec<u64>, b: Vec<u64>, r: usize) -> Result<WeightSpec> {
        if a.iter().chain(&b).any(|&w| w == 0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        if a.len() + b.len() == 0 {
            return Err(Error::InvalidInput("at least one nonzero weight is required".into()));
        }
        Ok(WeightSpec { a, b, r })
    }

    /// Parses `a1,a2:b1,b2:r`; an empty block is written as nothing.
    pub fn parse(s: &str) -> Result<WeightSpec> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, r] = parts[..] else {
            return Err(Error::InvalidInput(format!("expected a:b:r, got {s:?}")));
        };
        let list = |t: &str| -> Result<Vec<u64>> {
            t.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| x.trim().parse::<u64>().map_err(|e| Error::InvalidInput(format!("bad weight {x:?}: {e}"))))
                .collect()
        };
        let r = r.trim().parse::<usize>().map_err(|e| Error::InvalidInput(format!("bad r {r:?}: {e}")))?;
        WeightSpec::new(list(a)?, list(b)?, r)
    }

    pub fn rank(&self) -> usize {
        self.a.len() + self.b.len() + self.r
    }

    /// `(a, −b, 0)` before primitivization.
    pub fn raw_v0(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self.a.iter().map(|&x| BigInt::from(x)).collect();
        v.extend(self.b.iter().map(|&x| -BigInt::from(x)));
        v.resize(self.rank(), BigInt::zero());
        v
    }
}

fn orthant(n: usize) -> Cone {
    Cone::new((0..n).map(|i| LatticeVector::unit(n, i)).collect(), n).expect("unit vectors form a cone")
}

/// All faces of the positive orthant with the action `(a, −b, 0)`. A common
/// divisor of the weights is kept as the multiplicity of the action.
pub fn from_weights(w: &WeightSpec) -> Result<CobordismFan> {
    let n = w.rank();
    CobordismFan::from_action(Fan::from_cone(orthant(n)), LatticeVector::new(w.raw_v0()))
}

/// One block of a chain: weights, and whether it is attached below the
/// previous block instead of above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub weights: WeightSpec,
    pub reversed: bool,
}

/// A chain of regular cones, each a weighted block, consecutive blocks
/// sharing a facet.
///
/// The first block is the positive orthant with `v0 = (a, −b, 0)`. Block
/// `k + 1` replaces one ray `v_j` of block `k` by `u = −v_j + Σ d_i v_i`,
/// which puts it on the far side of the facet opposite `v_j`: above when
/// `v0` has a positive coefficient on `v_j`, below otherwise. The integers
/// `d_i` are chosen so the expansion of `v0` in the new block has the
/// prescribed weights; this fails when `v0` is not primitive in the block
/// weights or when no congruence-compatible assignment exists.
pub fn from_weight_sequence(blocks: &[Block]) -> Result<CobordismFan> {
    let Some(first) = blocks.first() else {
        return Err(Error::InconsistentGluing("no blocks".into()));
    };
    if first.reversed {
        return Err(Error::InconsistentGluing("the first block has nothing to attach to".into()));
    }
    let n = first.weights.rank();
    let v0 = LatticeVector::new(first.weights.raw_v0());
    if !v0.is_primitive() {
        return Err(Error::InconsistentGluing("weights of the first block are not coprime".into()));
    }
    let mut cones: Vec<Cone> = vec![orthant(n)];
    let mut rays: Vec<LatticeVector> = (0..n).map(|i| LatticeVector::unit(n, i)).collect();
    let mut coeffs: Vec<BigInt> = first.weights.raw_v0();
    for (k, block) in blocks.iter().enumerate().skip(1) {
        if block.weights.rank() != n {
            return Err(Error::InconsistentGluing(format!("block {k} has rank {}, expected {n}", block.weights.rank())));
        }
        let target = block.weights.raw_v0();
        let (new_rays, new_coeffs, cone) = attach(&cones, &rays, &coeffs, &target, block.reversed)
            .ok_or_else(|| Error::InconsistentGluing(format!("block {k} cannot be attached to block {}", k - 1)))?;
        cones.push(cone);
        rays = new_rays;
        coeffs = new_coeffs;
    }
    let fan = Fan::new(n, cones).map_err(|e| Error::InconsistentGluing(e.to_string()))?;
    let b = CobordismFan::new(fan, v0)?;
    if b.fixed_components().len() != blocks.len() {
        return Err(Error::InconsistentGluing(format!(
            "{} blocks produced {} fixed components",
            blocks.len(),
            b.fixed_components().len()
        )));
    }
    Ok(b)
}

type Attached = (Vec<LatticeVector>, Vec<BigInt>, Cone);

fn attach(cones: &[Cone], rays: &[LatticeVector], coeffs: &[BigInt], target: &[BigInt], below: bool) -> Option<Attached> {
    let n = rays.len();
    for j in 0..n {
        let c_j = &coeffs[j];
        if c_j.is_zero() || c_j.is_negative() != below {
            continue;
        }
        // The new ray carries coefficient −c_j.
        let u_coeff = -c_j;
        let Some(pos) = target.iter().position(|t| *t == u_coeff) else { continue };
        let mut rest: Vec<BigInt> = target.to_vec();
        rest.remove(pos);
        let others: Vec<usize> = (0..n).filter(|&i| i != j).collect();
        let mut seen = BTreeSet::new();
        for perm in rest.iter().cloned().permutations(rest.len()) {
            if !seen.insert(perm.clone()) {
                continue;
            }
            // Need perm[s] ≡ coeffs[i] (mod c_j) for the s-th other ray i.
            let ds: Option<Vec<BigInt>> = others
                .iter()
                .zip(&perm)
                .map(|(&i, t)| {
                    let diff = t - &coeffs[i];
                    (&diff % c_j).is_zero().then(|| diff / c_j)
                })
                .collect();
            let Some(ds) = ds else { continue };
            let mut u = rays[j].neg();
            for (&i, d) in others.iter().zip(&ds) {
                u = u.add(&rays[i].scale(d));
            }
            let mut new_rays = rays.to_vec();
            new_rays[j] = u;
            let mut new_coeffs = coeffs.to_vec();
            new_coeffs[j] = u_coeff.clone();
            for (&i, t) in others.iter().zip(&perm) {
                new_coeffs[i] = t.clone();
            }
            let Ok(cone) = Cone::new(new_rays.clone(), n) else { continue };
            if cone.dim() != n || cones.contains(&cone) {
                continue;
            }
            if cones.iter().all(|c| crate::polyhedra::meet_in_common_face(c, &cone)) {
                return Some((new_rays, new_coeffs, cone));
            }
        }
    }
    None
}

/// Groups coordinate indices by equal weight, in increasing weight order.
pub fn projective_weight_order(weights: &[i64]) -> Result<Vec<Vec<usize>>> {
    if weights.is_empty() {
        return Err(Error::InvalidInput("empty weight list".into()));
    }
    let mut blocks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &w) in weights.iter().enumerate() {
        blocks.entry(w).or_default().push(i);
    }
    Ok(blocks.into_values().collect())
}

/// Projective space `P^n` with the action `t·x_i = t^{w_i} x_i`, with the
/// fixed components of smallest and largest weight removed.
///
/// Coordinates: the rays are `u_1 = e_1, …, u_n = e_n` and
/// `u_0 = −Σ e_i`, so `v0 = Σ w_i u_i`.
pub fn linear_action(weights: &[i64]) -> Result<CobordismFan> {
    let blocks = projective_weight_order(weights)?;
    if blocks.len() < 2 {
        return Err(Error::InvalidInput("the action is trivial".into()));
    }
    let n = weights.len() - 1;
    if n == 0 {
        return Err(Error::InvalidInput("projective space of dimension zero".into()));
    }
    let u = |i: usize| -> LatticeVector {
        if i == 0 {
            LatticeVector::from_i64(&vec![-1; n])
        } else {
            LatticeVector::unit(n, i - 1)
        }
    };
    let v0_coords: Vec<BigInt> = (1..=n).map(|i| BigInt::from(weights[i] - weights[0])).collect();
    let v0 = LatticeVector::new(v0_coords).primitive()?;
    // The cone of a fixed block omits exactly the rays of that block.
    let excluded: Vec<BTreeSet<usize>> = [&blocks[0], blocks.last().unwrap()]
        .iter()
        .map(|b| (0..=n).filter(|i| !b.contains(i)).collect())
        .collect();
    let mut cones = Vec::new();
    for omit in 0..=n {
        let all: Vec<usize> = (0..=n).filter(|&i| i != omit).collect();
        // Faces of this maximal cone avoiding the removed stars.
        for size in (0..=n).rev() {
            for subset in all.iter().copied().combinations(size) {
                let s: BTreeSet<usize> = subset.iter().copied().collect();
                if excluded.iter().any(|e| e.is_subset(&s)) {
                    continue;
                }
                cones.push(Cone::new(subset.iter().map(|&i| u(i)).collect(), n)?);
            }
        }
    }
    let fan = Fan::new(n, cones)?;
    CobordismFan::new(fan, v0)
}

// ---------------------------------------------------------------------------
// Polytopes.

/// A full-dimensional rational polytope in `M_Q`, stored by its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    ambient_rank: usize,
    vertices: Vec<RationalVector>,
}

/// A facet inequality `⟨m, normal⟩ ≥ −offset` with a primitive inner
/// normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: LatticeVector,
    pub offset: Rat,
}

fn pair_r(m: &RationalVector, u: &LatticeVector) -> Rat {
    m.pair(u)
}

/// Unique solution of `⟨m, u_i⟩ = rhs_i`, if any.
fn solve_square(normals: &[Vec<Rat>], rhs: &[Rat], n: usize) -> Option<Vec<Rat>> {
    let columns: Vec<Vec<Rat>> = (0..n).map(|j| normals.iter().map(|u| u[j].clone()).collect()).collect();
    solve_in_basis(&columns, rhs)
}

impl Polytope {
    /// Convex hull of `points`; interior and repeated points are dropped.
    pub fn new(points: Vec<RationalVector>) -> Result<Polytope> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidInput("no points".into()));
        };
        let n = first.rank();
        if points.iter().any(|p| p.rank() != n) {
            return Err(Error::RankMismatch { expected: n, found: points.iter().map(|p| p.rank()).find(|&r| r != n).unwrap() });
        }
        let points: Vec<RationalVector> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let facets = hull_facets(&points, n);
        if facets.is_empty() {
            return Err(Error::InvalidInput("points are not full-dimensional".into()));
        }
        let vertices: Vec<RationalVector> = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<Rat>> = facets
                    .iter()
                    .filter(|f| pair_r(p, &f.normal) == -f.offset.clone())
                    .map(|f| f.normal.to_rational().coords().to_vec())
                    .collect();
                rank_of(&tight, n) == n
            })
            .collect();
        Ok(Polytope { ambient_rank: n, vertices })
    }

    /// The polytope `{m : ⟨m, u_i⟩ ≥ −a_i}`; errors if it is empty, lower
    /// dimensional or unbounded.
    pub fn from_inequalities(ineqs: &[(LatticeVector, Rat)]) -> Result<Polytope> {
        let Some((u0, _)) = ineqs.first() else {
            return Err(Error::InvalidInput("no inequalities".into()));
        };
        let n = u0.rank();
        let verts = h_vertices(ineqs, n);
        if verts.is_empty() {
            return Err(Error::InvalidInput("inequalities define no vertex".into()));
        }
        // Bounded iff the normals span and admit no nonzero recession
        // direction `d` with `⟨d, u_i⟩ ≥ 0` for all `i`.
        let rows: Vec<Vec<Rat>> = ineqs.iter().map(|(u, _)| u.to_rational().coords().to_vec()).collect();
        let mut recession: Vec<Inequality> = rows.iter().map(|r| Inequality { coeffs: r.clone(), strict: false }).collect();
        let sum = (0..n).map(|j| rows.iter().map(|r| r[j].clone()).sum()).collect();
        recession.push(Inequality { coeffs: sum, strict: true });
        if rank_of(&rows, n) < n || fm_feasible(n, &[], &recession) {
            return Err(Error::InvalidInput("inequalities do not define a bounded polytope".into()));
        }
        let p = Polytope::new(verts.into_iter().map(|(v, _)| v).collect())?;
        Ok(p)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    /// Facets, sorted by normal.
    pub fn facets(&self) -> Vec<Facet> {
        hull_facets(&self.vertices, self.ambient_rank)
    }

    /// `−min⟨m, u⟩` over the polytope.
    pub fn support(&self, u: &LatticeVector) -> Rat {
        -self.vertices.iter().map(|v| pair_r(v, u)).min().expect("polytope has vertices")
    }

    fn tight_facets(&self, v: &RationalVector, facets: &[Facet]) -> Vec<usize> {
        (0..facets.len()).filter(|&i| pair_r(v, &facets[i].normal) == -facets[i].offset.clone()).collect()
    }

    /// Every vertex lies on exactly `n` facets.
    pub fn is_simple(&self) -> bool {
        let facets = self.facets();
        self.vertices.iter().all(|v| self.tight_facets(v, &facets).len() == self.ambient_rank)
    }

    /// The fan of inner normal cones of the vertices.
    pub fn normal_fan(&self) -> Result<Fan> {
        let facets = self.facets();
        let cones: Vec<Cone> = self
            .vertices
            .iter()
            .map(|v| {
                let rays = self.tight_facets(v, &facets).into_iter().map(|i| facets[i].normal.clone()).collect();
                Cone::new(rays, self.ambient_rank)
            })
            .collect::<Result<_>>()?;
        Fan::new(self.ambient_rank, cones)
    }

    pub fn scale(&self, k: &Rat) -> Polytope {
        Polytope { ambient_rank: self.ambient_rank, vertices: self.vertices.iter().map(|v| v.scale(k)).collect() }
    }

    /// Neighbours of vertex `i` along edges.
    fn neighbours(&self, i: usize) -> Vec<usize> {
        let facets = self.facets();
        let ti: BTreeSet<usize> = self.tight_facets(&self.vertices[i], &facets).into_iter().collect();
        (0..self.vertices.len())
            .filter(|&j| j != i)
            .filter(|&j| {
                let shared: Vec<Vec<Rat>> = self
                    .tight_facets(&self.vertices[j], &facets)
                    .into_iter()
                    .filter(|f| ti.contains(f))
                    .map(|f| facets[f].normal.to_rational().coords().to_vec())
                    .collect();
                rank_of(&shared, self.ambient_rank) == self.ambient_rank - 1
            })
            .collect()
    }

    /// Cuts off a simple vertex by the hyperplane through the points at
    /// fraction `s` along its edges.
    pub fn truncate_vertex(&self, i: usize, s: &Rat) -> Result<Polytope> {
        let v = &self.vertices[i];
        let nbrs = self.neighbours(i);
        if nbrs.len() != self.ambient_rank {
            return Err(Error::InvalidInput("vertex is not simple".into()));
        }
        let mut points: Vec<RationalVector> = self.vertices.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        for &j in &nbrs {
            let w = &self.vertices[j];
            points.push(v.add(&w.add(&v.neg()).scale(s)));
        }
        Polytope::new(points)
    }

    /// The simplex `conv(0, e_1, …, e_n)`.
    pub fn simplex(n: usize) -> Polytope {
        let mut pts = vec![RationalVector::zero(n)];
        pts.extend((0..n).map(|i| LatticeVector::unit(n, i).to_rational()));
        Polytope::new(pts).expect("simplex is full-dimensional")
    }

    /// The box `Π [0, s_i]`.
    pub fn cuboid(sides: &[u64]) -> Polytope {
        let n = sides.len();
        let pts = (0..1usize << n)
            .map(|mask| {
                RationalVector::new((0..n).map(|i| if mask >> i & 1 == 1 { Rat::from_integer(sides[i].into()) } else { Rat::zero() }).collect())
            })
            .collect();
        Polytope::new(pts).expect("box is full-dimensional")
    }
}

/// Facets of the convex hull of `points`, by brute force over `n`-subsets.
fn hull_facets(points: &[RationalVector], n: usize) -> Vec<Facet> {
    let mut facets: BTreeSet<Facet> = BTreeSet::new();
    if points.len() <= n {
        return Vec::new();
    }
    for subset in (0..points.len()).combinations(n) {
        let p0 = &points[subset[0]];
        let rows: Vec<Vec<Rat>> = subset[1..].iter().map(|&i| points[i].add(&p0.neg()).coords().to_vec()).collect();
        let kernel = nullspace(&rows, n);
        if kernel.len() != 1 {
            continue;
        }
        let Some(mut u) = primitive_from_rationals(&kernel[0]) else { continue };
        let level = pair_r(p0, &u);
        let sides: Vec<Rat> = points.iter().map(|p| pair_r(p, &u) - &level).collect();
        let pos = sides.iter().any(Signed::is_positive);
        let neg = sides.iter().any(Signed::is_negative);
        if pos && neg {
            continue;
        }
        if neg {
            u = u.neg();
        }
        if !pos && !neg {
            continue;
        }
        let offset = -pair_r(p0, &u);
        facets.insert(Facet { normal: u, offset });
    }
    facets.into_iter().collect()
}

/// Vertices of `{m : ⟨m, u_i⟩ ≥ −a_i}` with the indices of the tight
/// inequalities.
fn h_vertices(ineqs: &[(LatticeVector, Rat)], n: usize) -> Vec<(RationalVector, Vec<usize>)> {
    let rows: Vec<Vec<Rat>> = ineqs.iter().map(|(u, _)| u.to_rational().coords().to_vec()).collect();
    let mut out: BTreeMap<RationalVector, Vec<usize>> = BTreeMap::new();
    for subset in (0..ineqs.len()).combinations(n) {
        let normals: Vec<Vec<Rat>> = subset.iter().map(|&i| rows[i].clone()).collect();
        let rhs: Vec<Rat> = subset.iter().map(|&i| -ineqs[i].1.clone()).collect();
        let Some(m) = solve_square(&normals, &rhs, n) else { continue };
        let m = RationalVector::new(m);
        if out.contains_key(&m) {
            continue;
        }
        let values: Vec<Rat> = ineqs.iter().map(|(u, a)| pair_r(&m, u) + a).collect();
        if values.iter().any(Signed::is_negative) {
            continue;
        }
        let tight = (0..ineqs.len()).filter(|&i| values[i].is_zero()).collect();
        out.insert(m, tight);
    }
    out.into_iter().collect()
}

/// Projective cobordism between the normal fans of two simple polytopes.
///
/// Every facet normal `u` of either polytope gets an inequality
/// `⟨m, u⟩ ≥ −((1 − h)·α + h·β)` on `M_Q × Q`, with `α`, `β` the support
/// values on the two polytopes, loosened by a positive amount `K_u` on the
/// side where `u` is not a facet normal. Together with `0 ≤ h ≤ 1` these
/// cut out a slab polytope whose slices near `h = 0` and `h = 1` have the
/// normal fans of the inputs. The cobordism fan consists of the normal
/// cones of the faces of the slab not lying in either cap; `v0 = ±e_{n+1}`
/// is oriented so the lower quotient is the normal fan of `p`. The
/// loosening amounts are perturbed deterministically until the slab is
/// simple. Both endpoint quotients and collapsibility are checked before
/// returning.
pub fn from_polytopes(p: &Polytope, p2: &Polytope) -> Result<CobordismFan> {
    let n = p.ambient_rank();
    if p2.ambient_rank() != n {
        return Err(Error::RankMismatch { expected: n, found: p2.ambient_rank() });
    }
    let invalid = |why: &str| Error::ConstructionInvalid(why.to_string());
    if !p.is_simple() || !p2.is_simple() {
        return Err(invalid("input polytopes must be simple"));
    }
    let fan_p = p.normal_fan()?;
    let fan_p2 = p2.normal_fan()?;
    let f1: BTreeSet<LatticeVector> = p.facets().into_iter().map(|f| f.normal).collect();
    let f2: BTreeSet<LatticeVector> = p2.facets().into_iter().map(|f| f.normal).collect();
    let normals: Vec<LatticeVector> = f1.union(&f2).cloned().collect();
    for attempt in 0..12u64 {
        let mut ineqs: Vec<(LatticeVector, Rat)> = Vec::new();
        for (i, u) in normals.iter().enumerate() {
            // Small integers first, keeping the rays short; rational
            // perturbations only if those leave the slab non-simple.
            let sq = BigInt::from((i as u64 + 1).pow(2));
            let k = if attempt < 4 {
                Rat::from_integer(BigInt::one() + sq * attempt)
            } else {
                Rat::one() + Rat::new(sq, BigInt::from(97 + 13 * attempt))
            };
            let alpha = p.support(u) + if f1.contains(u) { Rat::zero() } else { k.clone() };
            let beta = p2.support(u) + if f2.contains(u) { Rat::zero() } else { k };
            // ⟨m, u⟩ + (β − α)·h ≥ −α, scaled to a primitive normal.
            let mut coords: Vec<Rat> = u.to_rational().coords().to_vec();
            coords.push(&beta - &alpha);
            let normal = primitive_from_rationals(&coords).expect("normal is nonzero");
            let (j, c) = u.coords().iter().enumerate().find(|(_, c)| !c.is_zero()).expect("u is nonzero");
            let scale = Rat::from_integer(normal.coords()[j].clone()) / Rat::from_integer(c.clone());
            ineqs.push((normal, alpha * scale));
        }
        let up = LatticeVector::unit(n + 1, n);
        ineqs.push((up.clone(), Rat::zero()));
        ineqs.push((up.neg(), Rat::one()));
        let caps = [ineqs.len() - 2, ineqs.len() - 1];
        let vertices = h_vertices(&ineqs, n + 1);
        if vertices.iter().any(|(_, tight)| tight.len() != n + 1) {
            continue;
        }
        let cones: Vec<Cone> = vertices
            .iter()
            .map(|(_, tight)| {
                let rays = tight.iter().filter(|i| !caps.contains(i)).map(|&i| ineqs[i].0.clone()).collect();
                Cone::new(rays, n + 1)
            })
            .collect::<Result<_>>()?;
        let fan = Fan::new(n + 1, cones)?;
        for v0 in [up.clone(), up.neg()] {
            let Ok(b) = CobordismFan::new(fan.clone(), v0) else { continue };
            let lower = b.lower_boundary().and_then(|f| b.quotient_fan(&f));
            let upper = b.upper_boundary().and_then(|f| b.quotient_fan(&f));
            if lower.as_ref() == Ok(&fan_p) && upper.as_ref() == Ok(&fan_p2) {
                if !b.is_collapsible() {
                    return Err(invalid("slab cobordism is not collapsible"));
                }
                return Ok(b);
            }
        }
        return Err(invalid("endpoint quotients do not match the input normal fans"));
    }
    Err(invalid("no simple slab found"))
}

// ---------------------------------------------------------------------------
// Random fixtures.

/// Convex hull of 4 to 7 random lattice points in `[−3, 3]²`.
pub fn random_polygon<R: Rng>(rng: &mut R) -> Polytope {
    loop {
        let k = rng.gen_range(4..=7);
        let pts: Vec<RationalVector> = (0..k)
            .map(|_| LatticeVector::from_i64(&[rng.gen_range(-3..=3), rng.gen_range(-3..=3)]).to_rational())
            .collect();
        if let Ok(p) = Polytope::new(pts) {
            return p;
        }
    }
}

/// A box with sides in `1..=3` and up to three truncated vertices.
pub fn random_simple_polytope3<R: Rng>(rng: &mut R) -> Polytope {
    let sides: Vec<u64> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
    let mut p = Polytope::cuboid(&sides);
    let cuts = rng.gen_range(0..=3);
    let corners: Vec<RationalVector> = p.vertices.clone();
    let third = Rat::new(BigInt::one(), BigInt::from(3));
    // Cuts at a third of the current edges never reach another vertex.
    for corner in corners.choose_multiple(rng, cuts) {
        let i = p.vertices.iter().position(|v| v == corner).expect("uncut corners remain vertices");
        p = p.truncate_vertex(i, &third).expect("box corners are simple");
    }
    p
}
