//! Randomized invariants checked against independent recomputations.
mod common;

use cobordize::cobordism::Direction;
use cobordize::construct::{self, WeightSpec};
use cobordize::factorize::{self, MoveKind};
use cobordize::json;
use cobordize::linalg::{circuit_relation, lp_feasible, quotient_projection, smith_diagonal, LatticeVector, RationalVector};
use cobordize::polyhedra::{common_refinement, fans_equal, same_support, star_subdivision, Cone, Fan};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector::from_i64(v)
}

fn nonzero_vector(rank: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    rank.prop_flat_map(move |n| prop::collection::vec(-bound..=bound, n)).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
}

fn gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn spec() -> impl Strategy<Value = WeightSpec> {
    (1..=3usize, 1..=3usize, 0..=1usize)
        .prop_flat_map(|(l, m, r)| (prop::collection::vec(1..=4u64, l), prop::collection::vec(1..=4u64, m), Just(r)))
        .prop_map(|(a, b, r)| WeightSpec::new(a, b, r).unwrap())
}

/// Integration tests have no source root for persisted failures.
fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn kind_table(l: usize, m: usize) -> MoveKind {
    match (l, m) {
        (1, 1) => MoveKind::Identity,
        (1, _) => MoveKind::Blowdown,
        (_, 1) => MoveKind::Blowup,
        _ => MoveKind::Flip,
    }
}

/// Determinant by cofactor expansion, for tiny integer matrices.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
            let term = &m[0][j] * det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Is `s` a nonnegative combination of some linearly independent subset of
/// `ws`? Each subset is solved by Cramer's rule on a nonsingular minor.
fn in_cone_by_caratheodory(ws: &[LatticeVector], s: &LatticeVector) -> bool {
    let n = s.rank();
    (1..=n.min(ws.len())).any(|k| {
        ws.iter().combinations(k).any(|sub| {
            (0..n).combinations(k).any(|rows| {
                let m: Vec<Vec<BigInt>> = rows.iter().map(|&r| sub.iter().map(|w| w.coords()[r].clone()).collect()).collect();
                let d = det(&m);
                if d.is_zero() {
                    return false;
                }
                let coeffs: Vec<BigRational> = (0..k)
                    .map(|j| {
                        let mj: Vec<Vec<BigInt>> = m.iter().zip(&rows).map(|(row, &r)| {
                            let mut row = row.clone();
                            row[j] = s.coords()[r].clone();
                            row
                        }).collect();
                        BigRational::new(det(&mj), d.clone())
                    })
                    .collect();
                let solves = (0..n).all(|r| {
                    let lhs: BigRational = coeffs.iter().zip(&sub).map(|(c, w)| c * BigRational::from_integer(w.coords()[r].clone())).sum();
                    lhs == BigRational::from_integer(s.coords()[r].clone())
                });
                solves && coeffs.iter().all(|c| !c.is_negative())
            })
        })
    })
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn primitive_is_idempotent_and_divides(v in nonzero_vector(1..=5, 40)) {
        let v = lv(&v);
        let p = v.primitive().unwrap();
        prop_assert!(p.is_primitive());
        prop_assert_eq!(p.primitive().unwrap(), p.clone());
        prop_assert_eq!(p.scale(&v.content()), v.clone());
        prop_assert!(gcd(p.coords()).is_one());
    }

    #[test]
    fn projection_along_v0_is_surjective(v in nonzero_vector(2..=5, 9)) {
        let v0 = lv(&v).primitive().unwrap();
        let n = v0.rank();
        let p = quotient_projection(&v0, n).unwrap();
        prop_assert_eq!(p.matrix().len(), n - 1);
        prop_assert!(p.apply(&v0).is_zero());
        // Completing the rows by a vector with ⟨m, v0⟩ = 1 must give a
        // unimodular matrix exactly when the rows span the whole dual of the
        // quotient; the Smith diagonal of the rows alone decides it.
        prop_assert!(smith_diagonal(p.matrix()).iter().all(One::is_one));
        for i in 0..n {
            let e = LatticeVector::unit(n, i);
            prop_assert_eq!(p.apply(&e.add(&v0)), p.apply(&e));
        }
    }

    #[test]
    fn circuit_relation_is_an_exact_primitive_relation(rows in (2..=4usize).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-4i64..=4, n), n + 1))) {
        let vectors: Vec<LatticeVector> = rows.iter().map(|r| lv(r)).collect();
        let n = vectors[0].rank();
        // Cramer's rule: c_i = (-1)^i det(vectors without i) is a relation.
        let columns = |skip: usize| -> Vec<Vec<BigInt>> {
            (0..n).map(|k| vectors.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, v)| v.coords()[k].clone()).collect()).collect()
        };
        let cramer: Vec<BigInt> = (0..=n).map(|i| if i % 2 == 0 { det(&columns(i)) } else { -det(&columns(i)) }).collect();
        match circuit_relation(&vectors) {
            Ok(rel) => {
                prop_assert!(rel[0].is_positive());
                prop_assert!(gcd(&rel).is_one());
                for k in 0..n {
                    let s: BigInt = rel.iter().zip(&vectors).map(|(c, v)| c * &v.coords()[k]).sum();
                    prop_assert!(s.is_zero());
                }
                let g = gcd(&cramer);
                let sign = if cramer[0].is_negative() { -BigInt::one() } else { BigInt::one() };
                let expected: Vec<BigInt> = cramer.iter().map(|c| c / &g * &sign).collect();
                prop_assert_eq!(rel, expected);
            }
            Err(_) => prop_assert!(cramer.iter().any(Zero::is_zero)),
        }
    }

    #[test]
    fn lp_feasibility_matches_cone_membership(
        gens in (2..=3usize).prop_flat_map(|n| (prop::collection::vec(prop::collection::vec(-3i64..=3, n), 1..=4), prop::collection::vec(-3i64..=3, n)))
    ) {
        let (ws, s) = gens;
        let ws: Vec<LatticeVector> = ws.iter().map(|w| lv(w)).collect();
        let s = lv(&s);
        let n = s.rank();
        let feasible = lp_feasible(&[], &ws, &s).unwrap();
        // Farkas: no separating covector exactly when s lies in cone(ws).
        let in_cone = s.is_zero() || in_cone_by_caratheodory(&ws, &s);
        prop_assert_eq!(feasible, !in_cone);
        // A small grid witness must be accepted.
        let grid = (0..n).map(|_| -4i64..=4).multi_cartesian_product();
        for f in grid {
            let f = lv(&f);
            if ws.iter().all(|w| !f.dot(w).is_negative()) && f.dot(&s).is_negative() {
                prop_assert!(feasible);
                break;
            }
        }
    }

    #[test]
    fn lp_equalities_restrict_the_covector(e in nonzero_vector(3..=3, 3), s in nonzero_vector(3..=3, 3)) {
        let eq = lv(&e).to_rational();
        let s = lv(&s);
        // With only an equality, feasible iff s is not a multiple of e.
        let feasible = lp_feasible(&[eq], &[], &s).unwrap();
        let parallel = circuit_relation(&[lv(&e), s.clone()]).is_ok();
        prop_assert_eq!(feasible, !parallel);
    }

    #[test]
    fn elementary_kind_follows_the_sign_counts(w in spec()) {
        let b = construct::from_weights(&w).unwrap();
        let comps = b.fixed_components();
        prop_assert_eq!(comps.len(), 1);
        let mv = factorize::classify(&b, &comps[0]).unwrap();
        prop_assert_eq!(mv.kind, kind_table(w.a.len(), w.b.len()));
        let t = factorize::factor(&b).unwrap();
        prop_assert!(factorize::verify_trace(&b, &t).passed());
    }

    #[test]
    fn json_round_trip_is_byte_stable(w in spec()) {
        let b = construct::from_weights(&w).unwrap();
        let text = json::render(&json::cobordism_to_json(&b));
        let back = json::cobordism_from_json(&json::parse(&text).unwrap()).unwrap();
        prop_assert_eq!(json::render(&json::cobordism_to_json(&back)), text);
        let t = factorize::factor(&b).unwrap();
        let ttext = json::render(&json::trace_to_json(&t));
        let tback = json::trace_from_json(&json::parse(&ttext).unwrap()).unwrap();
        prop_assert_eq!(json::render(&json::trace_to_json(&tback)), ttext);
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn star_subdivision_preserves_support(seed in any::<u64>(), coeffs in prop::collection::vec(0u32..=3, 3)) {
        let mut rng = common::rng(seed);
        let p = construct::random_polygon(&mut rng);
        let f = p.normal_fan().unwrap();
        let sigma = &f.max_cones()[rng.gen_range(0..f.max_cones().len())];
        let rho = sigma.rays().iter().zip(&coeffs).fold(LatticeVector::zero(2), |acc, (r, &c)| acc.add(&r.scale(&BigInt::from(c))));
        prop_assume!(!rho.is_zero());
        let g = star_subdivision(&f, &rho).unwrap();
        prop_assert!(same_support(&f, &g));
        prop_assert!(g.rays().contains(&rho.primitive().unwrap()));
        for _ in 0..20 {
            let x: Vec<BigRational> = (0..2).map(|_| BigRational::new(rng.gen_range(-50..=50).into(), rng.gen_range(1..=7).into())).collect();
            let x = RationalVector::new(x);
            prop_assert_eq!(f.contains_point(&x), g.contains_point(&x));
        }
        let r = common_refinement(&f, &g).unwrap();
        prop_assert!(fans_equal(&r, &g));
    }

    #[test]
    fn limit_methods_agree_on_chains(seed in any::<u64>()) {
        let b = &common::chain_fixtures(1, seed)[0];
        for tau in b.cones() {
            if b.is_dependent(tau) {
                continue;
            }
            for d in [Direction::ToZero, Direction::ToInfinity] {
                prop_assert_eq!(b.limit_orbit(tau, d).unwrap().is_some(), b.limit_exists_lp(tau, d).unwrap());
            }
        }
    }

    #[test]
    fn collapse_identities_hold(seed in any::<u64>()) {
        let mut cur = common::chain_fixtures(1, seed)[0].clone();
        loop {
            let order = cur.collapse_order().unwrap();
            let f0 = cur.fixed_components()[order[0]].clone();
            let collapsed = cur.elementary_collapse(&f0).unwrap();
            let piece = cur.elementary_cobordism(&f0).unwrap();
            prop_assert!(fans_equal(&collapsed.upper_boundary().unwrap(), &cur.upper_boundary().unwrap()));
            prop_assert!(fans_equal(&piece.lower_boundary().unwrap(), &cur.lower_boundary().unwrap()));
            prop_assert!(fans_equal(&piece.upper_boundary().unwrap(), &collapsed.lower_boundary().unwrap()));
            if order.len() == 1 {
                break;
            }
            cur = collapsed;
        }
    }
}

#[test]
fn orthant_subdivision_matches_refinement() {
    let f = Fan::from_cone(Cone::new((0..3).map(|i| LatticeVector::unit(3, i)).collect(), 3).unwrap());
    let g = star_subdivision(&f, &lv(&[1, 1, 1])).unwrap();
    assert_eq!(g.max_cones().len(), 3);
    assert!(fans_equal(&common_refinement(&f, &g).unwrap(), &g));
}
