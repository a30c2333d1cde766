//! JSON forms of field elements, polynomials, curves, divisors and profiles.
//!
//! Field elements are `[c0, c1]`; on input a bare integer or `[c0]` is also
//! accepted. Polynomials are element arrays, lowest degree first. Output goes
//! through [`serde_json::Value`], whose maps keep keys sorted, so printed
//! documents are byte-stable.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ff::{Fe, FieldParams};
use crate::halving::{profile_new, SignVector, SqrtProfile};
use crate::jacobian::{AffinePoint, Curve, MumfordDivisor};
use crate::poly::Poly;

pub fn fe(x: Fe) -> Value {
    json!([x.c0(), x.c1()])
}

pub fn poly(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|&c| fe(c)).collect())
}

pub fn divisor(d: &MumfordDivisor) -> Value {
    json!({ "U": poly(d.u()), "V": poly(d.v()) })
}

pub fn curve(c: &Curve) -> Value {
    json!({
        "p": c.field().p(),
        "g": c.genus(),
        "roots": c.roots().iter().map(|&r| fe(r)).collect::<Vec<_>>(),
    })
}

pub fn point(p: &AffinePoint) -> Value {
    match p {
        AffinePoint::Infinity => json!("infinity"),
        AffinePoint::Finite { a, b } => json!({ "a": fe(*a), "b": fe(*b) }),
    }
}

pub fn profile(r: &SqrtProfile) -> Value {
    json!({
        "point": point(&r.point()),
        "values": r.values().iter().map(|&v| fe(v)).collect::<Vec<_>>(),
    })
}

/// Pretty-printed with sorted keys and a trailing newline.
pub fn to_canonical_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("Value always serializes");
    s.push('\n');
    s
}

/// A field element as written in JSON.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ElemRepr {
    Int(i64),
    Pair(Vec<i64>),
}

impl ElemRepr {
    pub fn to_fe(&self, field: FieldParams) -> Result<Fe> {
        match *self {
            ElemRepr::Int(c) => Ok(field.from_i64(c)),
            ElemRepr::Pair(ref cs) => match cs[..] {
                [c0] => Ok(field.from_i64(c0)),
                [c0, c1] => Ok(field.elem_signed(c0, c1)),
                _ => Err(Error::Parse(format!("field element {cs:?} needs 1 or 2 entries"))),
            },
        }
    }
}

fn elems(field: FieldParams, xs: &[ElemRepr]) -> Result<Vec<Fe>> {
    xs.iter().map(|x| x.to_fe(field)).collect()
}

#[derive(Clone, Debug, Deserialize)]
pub struct CurveRepr {
    pub p: u64,
    pub g: usize,
    pub roots: Vec<ElemRepr>,
}

impl CurveRepr {
    pub fn to_curve(&self) -> Result<Curve> {
        let field = FieldParams::new(self.p)?;
        Curve::new(field, self.g, elems(field, &self.roots)?)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct PointRepr {
    pub a: ElemRepr,
    pub b: ElemRepr,
}

impl PointRepr {
    pub fn to_point(&self, field: FieldParams) -> Result<AffinePoint> {
        Ok(AffinePoint::Finite {
            a: self.a.to_fe(field)?,
            b: self.b.to_fe(field)?,
        })
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct DivisorRepr {
    #[serde(rename = "U")]
    pub u: Vec<ElemRepr>,
    #[serde(rename = "V")]
    pub v: Vec<ElemRepr>,
}

impl DivisorRepr {
    /// Validated against the curve.
    pub fn to_divisor(&self, curve: &Curve) -> Result<MumfordDivisor> {
        let field = curve.field();
        let u = Poly::new(field, elems(field, &self.u)?);
        let v = Poly::new(field, elems(field, &self.v)?);
        curve.divisor(u, v)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct ProfileRepr {
    pub point: PointRepr,
    pub values: Vec<ElemRepr>,
}

impl ProfileRepr {
    pub fn to_profile(&self, curve: &Curve) -> Result<SqrtProfile> {
        let field = curve.field();
        profile_new(curve, &self.point.to_point(field)?, elems(field, &self.values)?)
    }
}

/// One entry of a `halve` document. `U`/`V` are absent in profile-only output.
#[derive(Clone, Debug, Deserialize)]
pub struct HalfRepr {
    pub phi: String,
    pub profile: ProfileRepr,
    #[serde(rename = "U")]
    pub u: Option<Vec<ElemRepr>>,
    #[serde(rename = "V")]
    pub v: Option<Vec<ElemRepr>>,
}

impl HalfRepr {
    pub fn phi(&self) -> Result<SignVector> {
        self.phi.parse()
    }

    pub fn divisor(&self, curve: &Curve) -> Result<Option<MumfordDivisor>> {
        match (&self.u, &self.v) {
            (Some(u), Some(v)) => DivisorRepr {
                u: u.clone(),
                v: v.clone(),
            }
            .to_divisor(curve)
            .map(Some),
            (None, None) => Ok(None),
            _ => Err(Error::Parse("half has only one of U, V".into())),
        }
    }
}

/// The document printed by `halve`.
#[derive(Clone, Debug, Deserialize)]
pub struct HalveDocument {
    pub curve: CurveRepr,
    pub point: PointRepr,
    pub halves: Vec<HalfRepr>,
}

pub fn parse<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Command-line element syntax: `c0` or `c0:c1`, signed.
pub fn parse_elem(s: &str, field: FieldParams) -> Result<Fe> {
    let int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad field element {s:?}")))
    };
    match s.split_once(':') {
        Some((c0, c1)) => Ok(field.elem_signed(int(c0)?, int(c1)?)),
        None => Ok(field.from_i64(int(s)?)),
    }
}

/// Comma-separated elements; the empty string is the empty list.
pub fn parse_elem_list(s: &str, field: FieldParams) -> Result<Vec<Fe>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_elem(t, field)).collect()
}
