//! JSON encoding of scalars, elements, distribution values and reports.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use qroot_core::elem::Elem;
use qroot_core::envalg::{self, EnvElement, EnvMonomial};
use qroot_core::funalg::{self, FunElement, FunMonomial};
use qroot_core::integral::{DistValue, Signature};
use qroot_core::report::Report;
use qroot_core::scalars::{Cyc, Gq, RatFunc};
use qroot_core::{Field, Scalar};
use serde_json::{json, Map, Value};

/// A schema violation at a JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "schema violation at {}: {}", at, self.message)
    }
}

impl std::error::Error for SchemaError {}

type SResult<T> = Result<T, SchemaError>;

fn bad<T>(pointer: &str, message: impl Into<String>) -> SResult<T> {
    Err(SchemaError { pointer: pointer.to_string(), message: message.into() })
}

fn ptr(base: &str, key: impl fmt::Display) -> String {
    format!("{}/{}", base, key)
}

fn rat_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rat_from(v: &Value, at: &str) -> SResult<BigRational> {
    match v {
        Value::String(s) => match s.trim().parse::<BigRational>() {
            Ok(r) => Ok(r),
            Err(_) => bad(at, format!("`{}` is not a rational n/d", s)),
        },
        Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
        _ => bad(at, "expected a rational string"),
    }
}

fn obj<'a>(v: &'a Value, at: &str) -> SResult<&'a Map<String, Value>> {
    v.as_object().map_or_else(|| bad(at, "expected an object"), Ok)
}

fn field_of<'a>(m: &'a Map<String, Value>, key: &str, at: &str) -> SResult<&'a Value> {
    m.get(key).map_or_else(|| bad(at, format!("missing key `{}`", key)), Ok)
}

fn arr<'a>(v: &'a Value, at: &str) -> SResult<&'a Vec<Value>> {
    v.as_array().map_or_else(|| bad(at, "expected an array"), Ok)
}

fn uint(v: &Value, at: &str) -> SResult<u32> {
    v.as_u64().and_then(|n| u32::try_from(n).ok()).map_or_else(|| bad(at, "expected a nonnegative integer"), Ok)
}

fn int(v: &Value, at: &str) -> SResult<i64> {
    v.as_i64().map_or_else(|| bad(at, "expected an integer"), Ok)
}

/// `p` as found at `at`; must be odd and at least 3.
pub fn p_from(v: &Value, at: &str) -> SResult<u32> {
    let p = uint(v, at)?;
    if p < 3 || p % 2 == 0 {
        return bad(at, format!("p must be odd and at least 3, got {}", p));
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// scalars

pub fn scalar_to(x: &Scalar) -> Value {
    match x {
        Scalar::Root(c) => {
            let (re, im) = c.coords();
            json!({
                "mode": "root",
                "p": c.p(),
                "re": re.iter().map(rat_str).collect::<Vec<_>>(),
                "im": im.iter().map(rat_str).collect::<Vec<_>>(),
            })
        }
        Scalar::Gen(r) => {
            let (num, den) = r.parts();
            let poly = |p: &[Gq]| -> Vec<Value> {
                p.iter().map(|g| json!({"re": rat_str(&g.re), "im": rat_str(&g.im)})).collect()
            };
            json!({"mode": "generic", "num": poly(num), "den": poly(den)})
        }
    }
}

pub fn scalar_from(v: &Value, f: Field, at: &str) -> SResult<Scalar> {
    let m = obj(v, at)?;
    let mode = field_of(m, "mode", at)?.as_str().unwrap_or("");
    match (mode, f) {
        ("root", Field::Root(p)) => {
            let vp = p_from(field_of(m, "p", at)?, &ptr(at, "p"))?;
            if vp != p {
                return bad(&ptr(at, "p"), format!("scalar has p = {} inside a p = {} object", vp, p));
            }
            let mut parts = Vec::new();
            for key in ["re", "im"] {
                let a = ptr(at, key);
                let xs = arr(field_of(m, key, at)?, &a)?;
                if xs.len() != (p - 1) as usize {
                    return bad(&a, format!("expected {} coordinates", p - 1));
                }
                let rs = xs.iter().enumerate().map(|(k, x)| rat_from(x, &ptr(&a, k))).collect::<SResult<Vec<_>>>()?;
                parts.push(rs);
            }
            match Cyc::from_coords(p, &parts[0], &parts[1]) {
                Ok(c) => Ok(Scalar::Root(c)),
                Err(e) => bad(at, e.to_string()),
            }
        }
        ("generic", Field::Generic) => {
            let mut polys = Vec::new();
            for key in ["num", "den"] {
                let a = ptr(at, key);
                let xs = arr(field_of(m, key, at)?, &a)?;
                let mut poly = Vec::new();
                for (k, g) in xs.iter().enumerate() {
                    let ga = ptr(&a, k);
                    let gm = obj(g, &ga)?;
                    let re = rat_from(field_of(gm, "re", &ga)?, &ptr(&ga, "re"))?;
                    let im = rat_from(field_of(gm, "im", &ga)?, &ptr(&ga, "im"))?;
                    poly.push(Gq { re, im });
                }
                polys.push(poly);
            }
            if polys[1].iter().all(|g| g.re.is_zero() && g.im.is_zero()) {
                return bad(&ptr(at, "den"), "zero denominator");
            }
            let den = polys.pop().unwrap();
            let num = polys.pop().unwrap();
            Ok(Scalar::Gen(RatFunc::new(num, den)))
        }
        ("root", Field::Generic) | ("generic", Field::Root(_)) => bad(&ptr(at, "mode"), "mode does not match the enclosing object"),
        _ => bad(&ptr(at, "mode"), "expected \"root\" or \"generic\""),
    }
}

/// Stand-alone scalar: the field is read from the object itself.
pub fn scalar_standalone(v: &Value) -> SResult<Scalar> {
    let m = obj(v, "")?;
    let f = match field_of(m, "mode", "")?.as_str() {
        Some("root") => Field::Root(p_from(field_of(m, "p", "")?, "/p")?),
        Some("generic") => Field::Generic,
        _ => return bad("/mode", "expected \"root\" or \"generic\""),
    };
    scalar_from(v, f, "")
}

fn freq_to(x: &Scalar) -> Value {
    match x.as_rational() {
        Some(r) => Value::String(rat_str(&r)),
        None => scalar_to(x),
    }
}

fn freq_from(v: &Value, f: Field, at: &str) -> SResult<Scalar> {
    match v {
        Value::Object(_) => scalar_from(v, f, at),
        _ => Ok(f.rat(rat_from(v, at)?)),
    }
}

// ---------------------------------------------------------------------------
// elements

fn header(f: Field) -> (Value, Value) {
    match f {
        Field::Root(p) => (json!(p), json!("root")),
        Field::Generic => (Value::Null, json!("generic")),
    }
}

fn field_from(m: &Map<String, Value>) -> SResult<Field> {
    match m.get("mode").and_then(|v| v.as_str()) {
        Some("generic") => Ok(Field::Generic),
        Some("root") | None => Ok(Field::Root(p_from(field_of(m, "p", "")?, "/p")?)),
        Some(_) => bad("/mode", "expected \"root\" or \"generic\""),
    }
}

pub fn fun_to(e: &FunElement) -> Value {
    let (p, mode) = header(e.field());
    let terms: Vec<Value> = e
        .iter()
        .map(|(m, c)| {
            let (a, b) = m.freqs(e.field());
            json!({
                "np": m.np, "nm": m.nm, "kd": m.kd, "zp": m.zp, "zm": m.zm,
                "fp": freq_to(&a), "fm": freq_to(&b),
                "coeff": scalar_to(c),
            })
        })
        .collect();
    json!({"p": p, "mode": mode, "terms": terms})
}

pub fn fun_from(v: &Value) -> SResult<FunElement> {
    let m = obj(v, "")?;
    let f = field_from(m)?;
    let mut e = Elem::zero(f);
    for (k, t) in arr(field_of(m, "terms", "")?, "/terms")?.iter().enumerate() {
        let at = format!("/terms/{}", k);
        let tm = obj(t, &at)?;
        let g = |key: &str| field_of(tm, key, &at);
        let np = uint(g("np")?, &ptr(&at, "np"))?;
        let nm = uint(g("nm")?, &ptr(&at, "nm"))?;
        let kd = int(g("kd")?, &ptr(&at, "kd"))?;
        let zp = tm.get("zp").map_or(Ok(0), |x| uint(x, &ptr(&at, "zp")))?;
        let zm = tm.get("zm").map_or(Ok(0), |x| uint(x, &ptr(&at, "zm")))?;
        let fp = tm.get("fp").map_or(Ok(f.zero()), |x| freq_from(x, f, &ptr(&at, "fp")))?;
        let fm = tm.get("fm").map_or(Ok(f.zero()), |x| freq_from(x, f, &ptr(&at, "fm")))?;
        let c = scalar_from(g("coeff")?, f, &ptr(&at, "coeff"))?;
        let mono = FunMonomial::new(np, nm, kd).with_z(zp, zm).with_freq(fp, fm);
        e = e.add(&funalg::monomial(f, mono).scale(&c));
    }
    Ok(e)
}

pub fn env_to(e: &EnvElement) -> Value {
    let (p, mode) = header(e.field());
    let terms: Vec<Value> = e
        .iter()
        .map(|(m, c)| {
            json!({"sp": m.sp, "tm": m.tm, "mp": m.mp, "nm": m.nm, "kk": m.kk, "coeff": scalar_to(c)})
        })
        .collect();
    json!({"p": p, "mode": mode, "terms": terms})
}

pub fn env_from(v: &Value) -> SResult<EnvElement> {
    let m = obj(v, "")?;
    let f = field_from(m)?;
    let mut e = Elem::zero(f);
    for (k, t) in arr(field_of(m, "terms", "")?, "/terms")?.iter().enumerate() {
        let at = format!("/terms/{}", k);
        let tm = obj(t, &at)?;
        let g = |key: &str| field_of(tm, key, &at);
        let mono = EnvMonomial::new(
            uint(g("sp")?, &ptr(&at, "sp"))?,
            uint(g("tm")?, &ptr(&at, "tm"))?,
            uint(g("mp")?, &ptr(&at, "mp"))?,
            uint(g("nm")?, &ptr(&at, "nm"))?,
            int(g("kk")?, &ptr(&at, "kk"))?,
        );
        let c = scalar_from(g("coeff")?, f, &ptr(&at, "coeff"))?;
        e = e.add(&envalg::monomial(f, mono).scale(&c));
    }
    Ok(e)
}

/// Tensor products as a list of pairs of monomials with a coefficient.
pub fn fun_tensor_to(t: &Elem<(FunMonomial, FunMonomial)>) -> Value {
    let f = t.field();
    let terms: Vec<Value> = t
        .iter()
        .map(|((a, b), c)| {
            json!({
                "left": fun_to(&funalg::monomial(f, a.clone()))["terms"][0].clone(),
                "right": fun_to(&funalg::monomial(f, b.clone()))["terms"][0].clone(),
                "coeff": scalar_to(c),
            })
        })
        .collect();
    let (p, mode) = header(f);
    json!({"p": p, "mode": mode, "terms": terms})
}

pub fn env_tensor_to(t: &Elem<(EnvMonomial, EnvMonomial)>) -> Value {
    let f = t.field();
    let terms: Vec<Value> = t
        .iter()
        .map(|((a, b), c)| {
            json!({
                "left": env_to(&envalg::monomial(f, a.clone()))["terms"][0].clone(),
                "right": env_to(&envalg::monomial(f, b.clone()))["terms"][0].clone(),
                "coeff": scalar_to(c),
            })
        })
        .collect();
    let (p, mode) = header(f);
    json!({"p": p, "mode": mode, "terms": terms})
}

pub fn ua_tensor_to(t: &Elem<(EnvMonomial, FunMonomial)>) -> Value {
    let f = t.field();
    let terms: Vec<Value> = t
        .iter()
        .map(|((a, b), c)| {
            json!({
                "left": env_to(&envalg::monomial(f, a.clone()))["terms"][0].clone(),
                "right": fun_to(&funalg::monomial(f, b.clone()))["terms"][0].clone(),
                "coeff": scalar_to(c),
            })
        })
        .collect();
    let (p, mode) = header(f);
    json!({"p": p, "mode": mode, "terms": terms})
}

pub fn dist_to(d: &DistValue) -> Value {
    let tokens: Vec<Value> =
        d.tokens.iter().map(|((a, b), c)| json!({"a": a, "b": b, "coeff": scalar_to(c)})).collect();
    json!({"finite": scalar_to(&d.finite), "tokens": tokens})
}

pub fn dist_from(v: &Value, f: Field) -> SResult<DistValue> {
    let m = obj(v, "")?;
    let mut d = DistValue::zero(f);
    d.finite = scalar_from(field_of(m, "finite", "")?, f, "/finite")?;
    for (k, t) in arr(field_of(m, "tokens", "")?, "/tokens")?.iter().enumerate() {
        let at = format!("/tokens/{}", k);
        let tm = obj(t, &at)?;
        let a = uint(field_of(tm, "a", &at)?, &ptr(&at, "a"))?;
        let b = uint(field_of(tm, "b", &at)?, &ptr(&at, "b"))?;
        let c = scalar_from(field_of(tm, "coeff", &at)?, f, &ptr(&at, "coeff"))?;
        d = d.add(&DistValue::token(f, a, b, c));
    }
    Ok(d)
}

pub fn matrix_to(m: &[Vec<Scalar>]) -> Value {
    // stored column-major: m[n] is the image of basis vector n; emit rows
    let n = m.len();
    let rows: Vec<Value> =
        (0..n).map(|r| Value::Array((0..n).map(|c| scalar_to(&m[c][r])).collect())).collect();
    Value::Array(rows)
}

pub fn signature_to(s: &Signature) -> Value {
    let per_root: Vec<Value> = s
        .per_root
        .iter()
        .map(|(r, (a, b, c))| json!({"root_index": r, "pos": a, "neg": b, "zero": c}))
        .collect();
    json!({"pos": s.pos, "neg": s.neg, "zero": s.zero, "unanimous": s.unanimous, "per_root": per_root})
}

pub fn report_to(r: &Report, p: Option<u32>) -> Value {
    let checks: Vec<Value> = r
        .by_check
        .iter()
        .map(|(id, t)| json!({"id": id, "checked": t.checked, "failed": t.failed, "passed": t.failed == 0}))
        .collect();
    let failed: Vec<Value> = r
        .failed
        .iter()
        .map(|x| json!({"check": x.check, "inputs": x.inputs, "lhs": x.lhs, "rhs": x.rhs}))
        .collect();
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "suite": r.suite,
        "p": p,
        "mode": if p.is_some() { "root" } else { "generic" },
        "seed": r.seed,
        "checked": r.checked,
        "failed_count": r.failed_count,
        "passed": r.passed(),
        "checks": checks,
        "failed": failed,
        "notes": r.notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_scalar_round_trip() {
        let f = Field::Root(5);
        let x = &(&f.frac(3, 7) * &f.q_pow(2)) + &(&f.i() * &f.q_pow(4));
        let v = scalar_to(&x);
        assert_eq!(v["re"].as_array().unwrap().len(), 4);
        assert_eq!(scalar_from(&v, f, "").unwrap(), x);
        assert_eq!(scalar_standalone(&v).unwrap(), x);
    }

    #[test]
    fn generic_scalar_round_trip() {
        let f = Field::Generic;
        let x = (&f.q_half(3) + &f.i()).inv().unwrap();
        let v = scalar_to(&x);
        assert_eq!(scalar_standalone(&v).unwrap(), x);
    }

    #[test]
    fn bad_p_has_pointer() {
        let v: Value = serde_json::from_str(r#"{"p":4,"terms":[]}"#).unwrap();
        let e = fun_from(&v).unwrap_err();
        assert_eq!(e.pointer, "/p");
        let v: Value = serde_json::from_str(r#"{"p":3,"terms":[{"np":1,"nm":0,"kd":0,"coeff":{"mode":"root","p":3,"re":["1/0","0"],"im":["0","0"]}}]}"#).unwrap();
        assert_eq!(fun_from(&v).unwrap_err().pointer, "/terms/0/coeff/re/0");
    }

    #[test]
    fn dist_round_trip() {
        let f = Field::Root(3);
        let d = DistValue::token(f, 1, 2, f.q_pow(1)).add(&DistValue::token(f, 0, 0, f.int(2)));
        assert_eq!(dist_from(&dist_to(&d), f).unwrap(), d);
    }
}
