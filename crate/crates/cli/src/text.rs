//! Text rendering in the expression grammar, so output can be fed back in.

use qroot_core::elem::Elem;
use qroot_core::envalg::{EnvElement, EnvMonomial};
use qroot_core::funalg::{FunElement, FunMonomial};
use qroot_core::integral::{DistValue, Signature};
use qroot_core::report::Report;
use qroot_core::scalars::{Gq, RatFunc};
use qroot_core::{Field, Scalar};

pub fn scalar(x: &Scalar) -> String {
    match x {
        Scalar::Gen(r) => {
            let (num, den) = r.parts();
            if den.len() == 1 {
                r.to_string()
            } else {
                let poly = |p: &[Gq]| RatFunc::new(p.to_vec(), vec![Gq::one()]);
                format!("({})*({})^-1", poly(num), poly(den))
            }
        }
        Scalar::Root(_) => x.to_string(),
    }
}

fn power(name: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{}^{}", name, e)),
    }
}

fn freq(x: &Scalar) -> String {
    if x.as_rational().is_some() {
        scalar(x)
    } else {
        format!("({})", scalar(x))
    }
}

pub fn fun_monomial(f: Field, m: &FunMonomial) -> Vec<String> {
    let mut v: Vec<String> = [
        power("eta+", m.np as i64),
        power("eta-", m.nm as i64),
        power("delta", m.kd),
        power("z+", m.zp as i64),
        power("z-", m.zm as i64),
    ]
    .into_iter()
    .flatten()
    .collect();
    if m.freq.is_some() {
        let (a, b) = m.freqs(f);
        v.push(format!("exp({}, {})", freq(&a), freq(&b)));
    }
    v
}

pub fn env_monomial(m: &EnvMonomial) -> Vec<String> {
    [
        power("Ecal+", m.sp as i64),
        power("Ecal-", m.tm as i64),
        power("E+", m.mp as i64),
        power("E-", m.nm as i64),
        power("K", m.kk),
    ]
    .into_iter()
    .flatten()
    .collect()
}

fn term(c: &Scalar, atoms: Vec<String>) -> String {
    let cs = scalar(c);
    if atoms.is_empty() {
        return format!("({})", cs);
    }
    let body = atoms.join(" ");
    if c.is_one() {
        body
    } else {
        format!("({}) {}", cs, body)
    }
}

fn join(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn fun(e: &FunElement) -> String {
    join(e.iter().map(|(m, c)| term(c, fun_monomial(e.field(), m))).collect())
}

pub fn env(e: &EnvElement) -> String {
    join(e.iter().map(|(m, c)| term(c, env_monomial(m))).collect())
}

fn leg(atoms: Vec<String>) -> String {
    if atoms.is_empty() {
        "1".into()
    } else {
        atoms.join(" ")
    }
}

pub fn fun_tensor(t: &Elem<(FunMonomial, FunMonomial)>) -> String {
    let f = t.field();
    join(t.iter().map(|((a, b), c)| format!("({}) {} ⊗ {}", scalar(c), leg(fun_monomial(f, a)), leg(fun_monomial(f, b)))).collect())
}

pub fn env_tensor(t: &Elem<(EnvMonomial, EnvMonomial)>) -> String {
    join(t.iter().map(|((a, b), c)| format!("({}) {} ⊗ {}", scalar(c), leg(env_monomial(a)), leg(env_monomial(b)))).collect())
}

pub fn ua_tensor(t: &Elem<(EnvMonomial, FunMonomial)>) -> String {
    let f = t.field();
    join(t.iter().map(|((a, b), c)| format!("({}) {} ⊗ {}", scalar(c), leg(env_monomial(a)), leg(fun_monomial(f, b)))).collect())
}

pub fn dist(d: &DistValue) -> String {
    let mut parts = Vec::new();
    if !d.finite.is_zero() || d.tokens.is_empty() {
        parts.push(format!("({})", scalar(&d.finite)));
    }
    for ((a, b), c) in &d.tokens {
        parts.push(format!("({}) Delta^({},{})", scalar(c), a, b));
    }
    parts.join(" + ")
}

pub fn matrix(m: &[Vec<Scalar>]) -> String {
    let n = m.len();
    (0..n).map(|r| (0..n).map(|c| scalar(&m[c][r])).collect::<Vec<_>>().join(" | ")).collect::<Vec<_>>().join("\n")
}

pub fn signature(s: &Signature) -> String {
    let mut out = format!("signature (+{}, -{}, 0:{}) unanimous={}", s.pos, s.neg, s.zero, s.unanimous);
    for (r, (a, b, c)) in &s.per_root {
        out.push_str(&format!("\n  root index {}: (+{}, -{}, 0:{})", r, a, b, c));
    }
    out
}

pub fn report(r: &Report) -> String {
    let mut out = format!(
        "suite {} seed {}: {} checked, {} failed: {}\n",
        r.suite,
        r.seed,
        r.checked,
        r.failed_count,
        if r.passed() { "PASS" } else { "FAIL" }
    );
    for (id, t) in &r.by_check {
        out.push_str(&format!(
            "  {:<40} {:>8} {:>8} {}\n",
            id,
            t.checked,
            t.failed,
            if t.failed == 0 { "ok" } else { "FAIL" }
        ));
    }
    for x in &r.failed {
        out.push_str(&format!("  failure {}: {}\n    lhs: {}\n    rhs: {}\n", x.check, x.inputs, x.lhs, x.rhs));
    }
    for n in &r.notes {
        out.push_str(&format!("  note: {}\n", n));
    }
    out
}
