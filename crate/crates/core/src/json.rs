//! Canonical JSON for fans, cobordisms, traces and polytopes.
//!
//! Objects are written with sorted keys, rays primitive and sorted, cone
//! index lists ascending, so equal values serialize to equal bytes.

use std::collections::BTreeMap;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::cobordism::CobordismFan;
use crate::construct::Polytope;
use crate::error::{Error, Result};
use crate::factorize::{FactorizationTrace, Move, MoveKind};
use crate::linalg::{LatticeVector, RationalVector};
use crate::polyhedra::{Cone, Fan};

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| bad(e.to_string()))
}

/// Compact canonical text, newline terminated.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values always serialize");
    s.push('\n');
    s
}

fn int(i: &BigInt) -> Value {
    // Exact for any size thanks to arbitrary-precision numbers.
    serde_json::from_str(&i.to_string()).expect("integer literal")
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn vector(v: &LatticeVector) -> Value {
    ints(v.coords())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing key {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn read_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| bad(format!("{n} is not an integer"))),
        _ => Err(bad(format!("{v} is not an integer"))),
    }
}

fn read_ints(v: &Value, what: &str) -> Result<Vec<BigInt>> {
    array(v, what)?.iter().map(read_int).collect()
}

fn read_usize(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("{v} is not an index")))
}

fn read_vector(v: &Value, rank: usize) -> Result<LatticeVector> {
    let coords = read_ints(v, "vector")?;
    if coords.len() != rank {
        return Err(Error::RankMismatch { expected: rank, found: coords.len() });
    }
    Ok(LatticeVector::new(coords))
}

fn fan_object(f: &Fan) -> Map<String, Value> {
    let rays = f.rays();
    let index: BTreeMap<&LatticeVector, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut cones: Vec<Vec<usize>> = f
        .max_cones()
        .iter()
        .map(|c| {
            let mut ix: Vec<usize> = c.rays().iter().map(|r| index[r]).collect();
            ix.sort_unstable();
            ix
        })
        .collect();
    cones.sort();
    let mut m = Map::new();
    m.insert("ambient_rank".into(), json!(f.ambient_rank()));
    m.insert("rays".into(), Value::Array(rays.iter().map(vector).collect()));
    m.insert("max_cones".into(), json!(cones));
    m
}

pub fn fan_to_json(f: &Fan) -> Value {
    Value::Object(fan_object(f))
}

pub fn fan_from_json(v: &Value) -> Result<Fan> {
    let rank = read_usize(get(v, "ambient_rank")?)?;
    let rays: Vec<LatticeVector> = array(get(v, "rays")?, "rays")?.iter().map(|r| read_vector(r, rank)).collect::<Result<_>>()?;
    let cones = array(get(v, "max_cones")?, "max_cones")?
        .iter()
        .map(|c| {
            let gens = array(c, "cone")?
                .iter()
                .map(|i| {
                    let i = read_usize(i)?;
                    rays.get(i).cloned().ok_or_else(|| bad(format!("ray index {i} out of range")))
                })
                .collect::<Result<Vec<_>>>()?;
            Cone::new(gens, rank)
        })
        .collect::<Result<Vec<_>>>()?;
    if cones.is_empty() {
        return Ok(Fan::trivial(rank));
    }
    Fan::new(rank, cones)
}

pub fn cobordism_to_json(b: &CobordismFan) -> Value {
    let mut m = fan_object(b.fan());
    m.insert("v0".into(), vector(&b.action()));
    Value::Object(m)
}

pub fn cobordism_from_json(v: &Value) -> Result<CobordismFan> {
    let fan = fan_from_json(v)?;
    let action = read_vector(get(v, "v0")?, fan.ambient_rank())?;
    CobordismFan::from_action(fan, action)
}

pub fn move_to_json(m: &Move) -> Value {
    json!({
        "kind": m.kind.as_str(),
        "relation": ints(&m.relation),
        "weights_minus": ints(&m.weights_minus),
        "weights_plus": ints(&m.weights_plus),
        "center_rays": m.center_rays.iter().map(vector).collect::<Vec<_>>(),
    })
}

pub fn move_from_json(v: &Value) -> Result<Move> {
    let kind = get(v, "kind")?.as_str().and_then(MoveKind::parse).ok_or_else(|| bad("unknown move kind"))?;
    let center_rays: Vec<LatticeVector> = array(get(v, "center_rays")?, "center_rays")?
        .iter()
        .map(|r| read_ints(r, "ray").map(LatticeVector::new))
        .collect::<Result<_>>()?;
    if let Some(r) = center_rays.first() {
        if center_rays.iter().any(|c| c.rank() != r.rank()) {
            return Err(bad("center rays of different ranks"));
        }
    }
    Ok(Move {
        kind,
        relation: read_ints(get(v, "relation")?, "relation")?,
        weights_minus: read_ints(get(v, "weights_minus")?, "weights_minus")?,
        weights_plus: read_ints(get(v, "weights_plus")?, "weights_plus")?,
        center_rays,
    })
}

pub fn trace_to_json(t: &FactorizationTrace) -> Value {
    json!({
        "fans": t.fans.iter().map(fan_to_json).collect::<Vec<_>>(),
        "moves": t.moves.iter().map(move_to_json).collect::<Vec<_>>(),
        "order": t.order,
    })
}

pub fn trace_from_json(v: &Value) -> Result<FactorizationTrace> {
    Ok(FactorizationTrace {
        fans: array(get(v, "fans")?, "fans")?.iter().map(fan_from_json).collect::<Result<_>>()?,
        moves: array(get(v, "moves")?, "moves")?.iter().map(move_from_json).collect::<Result<_>>()?,
        order: array(get(v, "order")?, "order")?.iter().map(read_usize).collect::<Result<_>>()?,
    })
}

/// Fixed components with their cones as ray-index lists into the
/// cobordism's ray list.
pub fn components_to_json(b: &CobordismFan) -> Value {
    let rays = b.fan().rays();
    let index: BTreeMap<&LatticeVector, usize> = rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let comps: Vec<Value> = b
        .fixed_components()
        .iter()
        .map(|f| {
            let cones = |cs: Vec<&Cone>| -> Vec<Vec<usize>> {
                let mut out: Vec<Vec<usize>> = cs.iter().map(|c| c.rays().iter().map(|r| index[r]).sorted().collect()).collect();
                out.sort();
                out
            };
            let (l, m) = b.signature(f).unwrap_or((0, 0));
            json!({
                "id": f.id,
                "cones": cones(f.cones.iter().collect()),
                "minimal_cones": cones(f.minimal_cones()),
                "l": l,
                "m": m,
            })
        })
        .collect();
    json!({ "components": comps })
}

fn rational(q: &BigRational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

fn read_rational(v: &Value) -> Result<BigRational> {
    let s = v.as_str().ok_or_else(|| bad(format!("{v} is not a rational string")))?;
    let parsed = match s.split_once('/') {
        Some((p, q)) => match (BigInt::from_str(p.trim()), BigInt::from_str(q.trim())) {
            (Ok(p), Ok(q)) if q != BigInt::from(0) => Some(BigRational::new(p, q)),
            _ => None,
        },
        None => BigInt::from_str(s.trim()).ok().map(BigRational::from_integer),
    };
    parsed.ok_or_else(|| bad(format!("{s:?} is not a rational")))
}

pub fn polytope_to_json(p: &Polytope) -> Value {
    json!({
        "ambient_rank": p.ambient_rank(),
        "vertices": p.vertices().iter().map(|v| v.coords().iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn polytope_from_json(v: &Value) -> Result<Polytope> {
    let rank = read_usize(get(v, "ambient_rank")?)?;
    let vertices = array(get(v, "vertices")?, "vertices")?
        .iter()
        .map(|p| {
            let coords: Vec<BigRational> = array(p, "vertex")?.iter().map(read_rational).collect::<Result<_>>()?;
            if coords.len() != rank {
                return Err(Error::RankMismatch { expected: rank, found: coords.len() });
            }
            Ok(RationalVector::new(coords))
        })
        .collect::<Result<Vec<_>>>()?;
    Polytope::new(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{from_weights, WeightSpec};
    use crate::factorize::factor;

    #[test]
    fn fan_format_is_canonical() {
        let b = from_weights(&WeightSpec::parse("1,1:1,1:0").unwrap()).unwrap();
        let lower = b.lower_boundary().unwrap();
        let text = render(&fan_to_json(&lower));
        assert_eq!(
            text,
            "{\"ambient_rank\":4,\"max_cones\":[[0,2,3],[1,2,3]],\"rays\":[[0,0,0,1],[0,0,1,0],[0,1,0,0],[1,0,0,0]]}\n"
        );
        assert_eq!(fan_from_json(&parse(&text).unwrap()).unwrap(), lower);
    }

    #[test]
    fn round_trips() {
        let b = from_weights(&WeightSpec::parse("2,3:1,1:1").unwrap()).unwrap();
        let v = cobordism_to_json(&b);
        let back = cobordism_from_json(&parse(&render(&v)).unwrap()).unwrap();
        assert_eq!(back.fan(), b.fan());
        assert_eq!(back.v0(), b.v0());
        let t = factor(&b).unwrap();
        let tv = trace_to_json(&t);
        let t2 = trace_from_json(&parse(&render(&tv)).unwrap()).unwrap();
        assert_eq!(render(&trace_to_json(&t2)), render(&tv));
        let p = Polytope::simplex(2).scale(&BigRational::new(3.into(), 2.into()));
        let pv = polytope_to_json(&p);
        assert_eq!(pv["vertices"][1], json!(["0/1", "3/2"]));
        assert_eq!(polytope_from_json(&pv).unwrap(), p);
    }

    #[test]
    fn big_integers_survive() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        assert_eq!(read_int(&parse(&render(&int(&big))).unwrap()).unwrap(), big);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse("{"), Err(Error::Json(_))));
        let v = parse(r#"{"ambient_rank":2,"rays":[[1,0]],"max_cones":[[0,1]]}"#).unwrap();
        assert!(fan_from_json(&v).is_err());
        let v = parse(r#"{"ambient_rank":2,"rays":[[1,0,0]],"max_cones":[[0]]}"#).unwrap();
        assert!(matches!(fan_from_json(&v), Err(Error::RankMismatch { .. })));
        assert!(read_rational(&json!("1/0")).is_err());
    }
}
