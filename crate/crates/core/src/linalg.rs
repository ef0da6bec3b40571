//! Exact integer and rational linear algebra.
//!
//! Everything here works over `BigInt` / `BigRational`; there is no floating
//! point anywhere in the crate.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// A point of the lattice `N ≅ Z^n` (or of its dual `M`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<Int>);

impl LatticeVector {
    pub fn new(coords: Vec<Int>) -> Self {
        LatticeVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![Int::zero(); rank])
    }

    /// The `i`-th standard basis vector of `Z^rank`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = Int::one();
        v
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn content(&self) -> Int {
        gcd_all(self.0.iter())
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one()
    }

    /// The generator of the ray spanned by `self`.
    pub fn primitive(&self) -> Result<LatticeVector> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = self.content();
        if g.is_one() {
            return Ok(self.clone());
        }
        Ok(LatticeVector(self.0.iter().map(|c| c / &g).collect()))
    }

    pub fn dot(&self, other: &LatticeVector) -> Int {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Int) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: self.rank() });
        }
        Ok(())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// A point of `N_Q` or `M_Q`. Covectors are paired with lattice vectors by
/// the standard dot product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(Vec<Rat>);

impl RationalVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        RationalVector(coords)
    }

    pub fn zero(rank: usize) -> Self {
        RationalVector(vec![Rat::zero(); rank])
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RationalVector) -> Rat {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn pair(&self, v: &LatticeVector) -> Rat {
        self.0.iter().zip(v.coords()).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: &Rat) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }

    /// Clears denominators and divides by the content; `None` for zero.
    pub fn primitive_lattice(&self) -> Option<LatticeVector> {
        primitive_from_rationals(&self.0)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

pub(crate) fn gcd_all<'a>(it: impl Iterator<Item = &'a Int>) -> Int {
    let mut g = Int::zero();
    for c in it {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn primitive_from_rationals(coords: &[Rat]) -> Option<LatticeVector> {
    if coords.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = coords.iter().fold(Int::one(), |l, c| if c.is_integer() { l } else { l.lcm(c.denom()) });
    let ints: Vec<Int> = if lcm.is_one() {
        coords.iter().map(|c| c.numer().clone()).collect()
    } else {
        coords.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect()
    };
    LatticeVector(ints).primitive().ok()
}

// ---------------------------------------------------------------------------
// Rational matrices (row-major `Vec<Vec<Rat>>`).

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns.
pub(crate) fn rref(rows: &mut Vec<Vec<Rat>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank_of(rows: &[Vec<Rat>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : rows · x = 0}`.
pub(crate) fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); ncols];
            x[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Solves `Σ coeffs_i · columns_i = target`; returns the solution if it
/// exists and is unique.
pub(crate) fn solve_in_basis(columns: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let k = columns.len();
    let n = target.len();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug, k + 1);
    if pivots.contains(&k) || pivots.len() != k {
        return None;
    }
    Some((0..k).map(|i| aug[i][k].clone()).collect())
}

pub(crate) fn lattice_rows(vs: &[LatticeVector]) -> Vec<Vec<Rat>> {
    vs.iter().map(|v| v.to_rational().0).collect()
}

// ---------------------------------------------------------------------------
// Integer lattices.

/// Basis of the integer kernel `{m ∈ Z^n : ⟨m, v⟩ = 0}` (unnormalized).
pub fn integer_kernel(v: &LatticeVector) -> Vec<Vec<Int>> {
    let n = v.rank();
    let mut a: Vec<Int> = v.coords().to_vec();
    // Columns of `u` track the unimodular column operations applied to `a`.
    let mut u: Vec<Vec<Int>> = (0..n).map(|i| LatticeVector::unit(n, i).0).collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&i| !a[i].is_zero()).collect();
        if nonzero.len() <= 1 {
            let keep = nonzero.first().copied();
            return (0..n).filter(|&i| Some(i) != keep).map(|i| u[i].clone()).collect();
        }
        let p = *nonzero.iter().min_by_key(|&&i| a[i].abs()).unwrap();
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = a[j].div_floor(&a[p]);
            a[j] = &a[j] - &q * &a[p];
            let col_p = u[p].clone();
            for (x, y) in u[j].iter_mut().zip(&col_p) {
                *x -= &q * y;
            }
        }
    }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: nonzero
/// rows only, echelon, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        // Euclid down the column until one nonzero entry remains at row r.
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, p);
            if nz.len() == 1 {
                break;
            }
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if q.is_zero() {
                continue;
            }
            let pivot_row = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Invariant factors of an integer matrix (Smith normal form diagonal,
/// nonzero entries only).
pub fn smith_diagonal(rows: &[Vec<Int>]) -> Vec<Int> {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Pick the smallest nonzero entry of the remaining block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut done = false;
        while !done {
            done = true;
            for i in t + 1..nrows {
                let q = m[i][t].div_floor(&m[t][t]);
                if !q.is_zero() {
                    let pr = m[t].clone();
                    for (x, y) in m[i].iter_mut().zip(&pr) {
                        *x -= &q * y;
                    }
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    done = false;
                }
            }
            for j in t + 1..ncols {
                let q = m[t][j].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let y = row[t].clone();
                        row[j] -= &q * y;
                    }
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    done = false;
                }
            }
            if done {
                // Divisibility: the pivot must divide every remaining entry.
                'outer: for i in t + 1..nrows {
                    for j in t + 1..ncols {
                        if !m[i][j].is_multiple_of(&m[t][t]) {
                            let ri = m[i].clone();
                            for (x, y) in m[t].iter_mut().zip(&ri) {
                                *x += y;
                            }
                            done = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// The map `N → N' = N / Z·v0` as an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectionMap {
    matrix: Vec<Vec<Int>>,
    kernel_generator: LatticeVector,
}

impl ProjectionMap {
    pub fn matrix(&self) -> &[Vec<Int>] {
        &self.matrix
    }

    pub fn kernel_generator(&self) -> &LatticeVector {
        &self.kernel_generator
    }

    pub fn source_rank(&self) -> usize {
        self.kernel_generator.rank()
    }

    pub fn target_rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector(self.matrix.iter().map(|row| row.iter().zip(v.coords()).map(|(a, b)| a * b).sum()).collect())
    }
}

/// Projection along the primitive vector `v0`. The rows are the Hermite
/// normal form of the lattice `{m : ⟨m, v0⟩ = 0}`, which makes the choice of
/// complement canonical.
pub fn quotient_projection(v0: &LatticeVector, rank: usize) -> Result<ProjectionMap> {
    v0.check_rank(rank)?;
    if v0.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !v0.is_primitive() {
        return Err(Error::NotPrimitive(v0.to_string()));
    }
    let matrix = hermite_normal_form(&integer_kernel(v0));
    debug_assert_eq!(matrix.len(), rank - 1);
    Ok(ProjectionMap { matrix, kernel_generator: v0.clone() })
}

/// The unique integer relation `Σ c_i v_i = 0` of a circuit, primitive and
/// with first coefficient positive.
pub fn circuit_relation(vectors: &[LatticeVector]) -> Result<Vec<Int>> {
    let Some(first) = vectors.first() else {
        return Err(Error::NotACircuit("empty vector list".into()));
    };
    let n = first.rank();
    for v in vectors {
        v.check_rank(n)?;
    }
    // Rows are coordinates, columns are the vectors.
    let rows: Vec<Vec<Rat>> = (0..n).map(|i| vectors.iter().map(|v| Rat::from_integer(v.coords()[i].clone())).collect()).collect();
    let kernel = nullspace(&rows, vectors.len());
    if kernel.len() != 1 {
        return Err(Error::NotACircuit(format!("rank deficit {}", kernel.len())));
    }
    if kernel[0].iter().any(Zero::is_zero) {
        return Err(Error::NotACircuit("relation has a zero coefficient".into()));
    }
    let mut rel = primitive_from_rationals(&kernel[0]).expect("kernel vector is nonzero").0;
    if rel[0].is_negative() {
        rel.iter_mut().for_each(|c| *c = -&*c);
    }
    Ok(rel)
}

/// Index of the sublattice generated by `generators` in the saturation of its
/// span: the gcd of the maximal minors.
pub fn lattice_index(generators: &[LatticeVector]) -> Result<Int> {
    let Some(first) = generators.first() else {
        return Ok(Int::one());
    };
    let n = first.rank();
    for g in generators {
        g.check_rank(n)?;
    }
    if rank_of(&lattice_rows(generators), n) != generators.len() {
        return Err(Error::DependentGenerators);
    }
    let rows: Vec<Vec<Int>> = generators.iter().map(|g| g.coords().to_vec()).collect();
    Ok(smith_diagonal(&rows).iter().product())
}

/// One homogeneous linear inequality `⟨c, F⟩ ≥ 0`, or `> 0` when strict.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Inequality {
    pub coeffs: Vec<Rat>,
    pub strict: bool,
}

fn normalize_row(coeffs: &[Rat]) -> Vec<Rat> {
    match primitive_from_rationals(coeffs) {
        Some(p) => p.to_rational().0,
        None => coeffs.to_vec(),
    }
}

/// Decides whether some `F` satisfies `⟨F, e⟩ = 0` for every `e` in
/// `equalities` together with the given homogeneous inequalities, by
/// Fourier–Motzkin elimination.
pub(crate) fn fm_feasible(rank: usize, equalities: &[Vec<Rat>], inequalities: &[Inequality]) -> bool {
    // Parametrize the solution space of the equalities: F = Σ y_k b_k.
    // Basis vectors are scaled to integers; products of zeros are skipped.
    let basis: Vec<Vec<Rat>> = if equalities.is_empty() {
        (0..rank).map(|i| LatticeVector::unit(rank, i).to_rational().0).collect()
    } else {
        nullspace(equalities, rank).iter().map(|b| normalize_row(b)).collect()
    };
    let dot = |b: &[Rat], c: &[Rat]| -> Rat {
        b.iter().zip(c).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
    };
    let mut system: Vec<Inequality> = inequalities
        .iter()
        .map(|ineq| Inequality {
            coeffs: normalize_row(&basis.iter().map(|b| dot(b, &ineq.coeffs)).collect::<Vec<Rat>>()),
            strict: ineq.strict,
        })
        .collect();
    let mut vars = basis.len();
    loop {
        system.retain(|ineq| ineq.strict || ineq.coeffs.iter().any(|c| !c.is_zero()));
        if system.iter().any(|ineq| ineq.strict && ineq.coeffs.iter().all(Zero::is_zero)) {
            return false;
        }
        system = system.into_iter().unique().collect();
        if vars == 0 {
            return true;
        }
        // Eliminate the variable producing the fewest new rows, moved last.
        let growth = |j: usize| {
            let p = system.iter().filter(|i| i.coeffs[j].is_positive()).count() as isize;
            let n = system.iter().filter(|i| i.coeffs[j].is_negative()).count() as isize;
            p * n - p - n
        };
        let best = (0..vars).min_by_key(|&j| growth(j)).expect("vars > 0");
        let k = vars - 1;
        if best != k {
            for ineq in system.iter_mut() {
                ineq.coeffs.swap(best, k);
            }
        }
        let (pos, rest): (Vec<_>, Vec<_>) = system.into_iter().partition(|i| i.coeffs[k].is_positive());
        let (neg, zero): (Vec<_>, Vec<_>) = rest.into_iter().partition(|i| i.coeffs[k].is_negative());
        let mut next: Vec<Inequality> = zero;
        for p in &pos {
            for q in &neg {
                let a = p.coeffs[k].clone();
                let b = -q.coeffs[k].clone();
                let combined: Vec<Rat> = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &b + y * &a).collect();
                next.push(Inequality { coeffs: normalize_row(&combined), strict: p.strict || q.strict });
            }
        }
        for ineq in next.iter_mut() {
            ineq.coeffs.truncate(k);
        }
        system = next;
        vars = k;
    }
}

/// Is there a covector `F` with `⟨F, e⟩ = 0` on `equalities`, `⟨F, w⟩ ≥ 0` on
/// `nonneg_on`, and `⟨F, strict_neg_on⟩ < 0`?
pub fn lp_feasible(equalities: &[RationalVector], nonneg_on: &[LatticeVector], strict_neg_on: &LatticeVector) -> Result<bool> {
    let n = strict_neg_on.rank();
    for e in equalities {
        if e.rank() != n {
            return Err(Error::RankMismatch { expected: n, found: e.rank() });
        }
    }
    for w in nonneg_on {
        w.check_rank(n)?;
    }
    let eqs: Vec<Vec<Rat>> = equalities.iter().map(|e| e.0.clone()).collect();
    let mut ineqs: Vec<Inequality> = nonneg_on.iter().map(|w| Inequality { coeffs: w.to_rational().0, strict: false }).collect();
    ineqs.push(Inequality { coeffs: strict_neg_on.neg().to_rational().0, strict: true });
    Ok(fm_feasible(n, &eqs, &ineqs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    fn ints(c: &[i64]) -> Vec<Int> {
        c.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(lv(&[2, 4, -6]).primitive().unwrap(), lv(&[1, 2, -3]));
        assert_eq!(lv(&[1, 0, 0]).primitive().unwrap(), lv(&[1, 0, 0]));
        assert_eq!(lv(&[0, -5]).primitive().unwrap(), lv(&[0, -1]));
        assert_eq!(lv(&[0, 0]).primitive(), Err(Error::ZeroVector));
    }

    #[test]
    fn projection_of_atiyah_vector() {
        let p = quotient_projection(&lv(&[1, 1, -1, -1]), 4).unwrap();
        let images: Vec<LatticeVector> = (0..4).map(|i| p.apply(&LatticeVector::unit(4, i))).collect();
        assert_eq!(images, vec![lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[0, 0, 1]), lv(&[1, 1, -1])]);
        assert!(p.apply(&lv(&[1, 1, -1, -1])).is_zero());
    }

    #[test]
    fn projection_standard_and_small_cases() {
        let p = quotient_projection(&lv(&[0, 0, 1]), 3).unwrap();
        assert_eq!(p.matrix(), &[ints(&[1, 0, 0]), ints(&[0, 1, 0])]);
        let p = quotient_projection(&lv(&[2, 1]), 2).unwrap();
        assert_eq!(p.matrix(), &[ints(&[1, -2])]);
        assert!(matches!(quotient_projection(&lv(&[2, 4]), 2), Err(Error::NotPrimitive(_))));
        assert_eq!(quotient_projection(&lv(&[0, 0]), 2), Err(Error::ZeroVector));
    }

    #[test]
    fn circuit_examples() {
        assert_eq!(circuit_relation(&[lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1])]).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(circuit_relation(&[lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])]).unwrap(), ints(&[1, 1, -1]));
        let err = circuit_relation(&[lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 2]), lv(&[2, 1])]).unwrap_err();
        assert_eq!(err, Error::NotACircuit("rank deficit 2".into()));
        assert!(matches!(circuit_relation(&[lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[0, 2, 0])]), Err(Error::NotACircuit(_))));
    }

    #[test]
    fn lp_examples() {
        let e = |i| LatticeVector::unit(4, i);
        assert!(!lp_feasible(&[], &[lv(&[1, 0]), lv(&[0, 1])], &lv(&[1, 1])).unwrap());
        assert!(lp_feasible(&[], &[lv(&[1, 0])], &lv(&[0, 1])).unwrap());
        assert!(lp_feasible(&[e(0).to_rational()], &[e(0), e(1), e(2), e(3)], &lv(&[1, 1, -1, -1])).unwrap());
        assert!(matches!(lp_feasible(&[], &[lv(&[1, 0, 0])], &lv(&[1, 1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn lattice_index_examples() {
        assert_eq!(lattice_index(&[lv(&[1, 0]), lv(&[0, 1])]).unwrap(), Int::from(1));
        assert_eq!(lattice_index(&[lv(&[1, 0]), lv(&[1, 2])]).unwrap(), Int::from(2));
        assert_eq!(lattice_index(&[lv(&[2, 0, 0])]).unwrap(), Int::from(2));
        assert_eq!(lattice_index(&[lv(&[1, 2]), lv(&[2, 4])]), Err(Error::DependentGenerators));
    }

    #[test]
    fn hnf_and_smith() {
        let h = hermite_normal_form(&[ints(&[2, 4]), ints(&[3, 5])]);
        assert_eq!(h, vec![ints(&[1, 1]), ints(&[0, 2])]);
        assert_eq!(smith_diagonal(&[ints(&[2, 4]), ints(&[3, 5])]), ints(&[1, 2]));
        assert_eq!(smith_diagonal(&[ints(&[2, 0]), ints(&[0, 3])]), ints(&[1, 6]));
    }
}
