//! The diagonal duality bracket between U_q(sl(2,R)) and A(SL_q(2,R)),
//! convolution products, regular actions and the pairing axiom suite.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::elem::{contract_left, contract_right, Elem};
use crate::envalg::{self, EnvElement, EnvMonomial, EnvTensor};
use crate::error::{Error, Result};
use crate::funalg::{self, FunElement, FunMonomial, FunTensor};
use crate::report::Report;
use crate::scalars::{Field, Scalar};

fn factorial(f: Field, n: u32) -> Scalar {
    let mut r: i64 = 1;
    for k in 2..=n as i64 {
        r *= k;
    }
    f.int(r)
}

fn binom(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for j in 0..k {
        r = r * (n - j) as i64 / (j + 1) as i64;
    }
    r
}

/// Bracket of the finite parts: E₊^n E₋^m K^k against η₊^n' η₋^m' δ^l.
fn finite_bracket(f: Field, u: &EnvMonomial, a: &FunMonomial) -> Scalar {
    if u.mp != a.np || u.nm != a.nm {
        return f.zero();
    }
    let (n, m) = (u.mp as i64, u.nm as i64);
    let c = &f.i_pow(n + m) * &f.q_half(n - m);
    let c = &c * &f.q_pow(-n * m + a.kd * (u.kk + n + m));
    &(&c * &f.qfact(u.nm)) * &f.qfact(u.mp)
}

/// ⟨u, a⟩ on basis monomials; exponential tokens are rejected.
pub fn pair_monomial(f: Field, u: &EnvMonomial, a: &FunMonomial) -> Result<Scalar> {
    if a.freq.is_some() {
        return Err(Error::NonPolynomialZPart);
    }
    if u.sp != a.zp || u.tm != a.zm {
        return Ok(f.zero());
    }
    let c = finite_bracket(f, u, a);
    if c.is_zero() {
        return Ok(c);
    }
    let z = &(&f.i_pow((u.sp + u.tm) as i64) * &factorial(f, u.sp)) * &factorial(f, u.tm);
    Ok(&c * &z)
}

/// ∂^s (z^a e^{iωz}) at z = 0.
fn derivative_at_zero(f: Field, s: u32, a: u32, w: &Scalar) -> Scalar {
    if s < a {
        return f.zero();
    }
    let iw = &f.i() * w;
    let c = f.int(binom(s, a)) * factorial(f, a);
    &c * &iw.pow(s - a)
}

/// ⟨u, a⟩ extended to exponential z-parts: the central factor pairs by
/// i^{s+t} ∂₊^s ∂₋^t evaluated at z = 0.
pub fn pair_ext_monomial(f: Field, u: &EnvMonomial, a: &FunMonomial) -> Scalar {
    let c = finite_bracket(f, u, a);
    if c.is_zero() {
        return c;
    }
    let (alpha, beta) = a.freqs(f);
    let dp = derivative_at_zero(f, u.sp, a.zp, &alpha);
    if dp.is_zero() {
        return dp;
    }
    let dm = derivative_at_zero(f, u.tm, a.zm, &beta);
    &(&c * &f.i_pow((u.sp + u.tm) as i64)) * &(&dp * &dm)
}

/// The bilinear bracket ⟨φ, a⟩.
pub fn pair(phi: &EnvElement, a: &FunElement) -> Result<Scalar> {
    let f = phi.field();
    if a.field() != f {
        return Err(Error::ModeMismatch);
    }
    let mut s = f.zero();
    for (u, x) in phi.iter() {
        for (m, y) in a.iter() {
            let v = pair_monomial(f, u, m)?;
            if !v.is_zero() {
                s += &(&(x * y) * &v);
            }
        }
    }
    Ok(s)
}

/// The bracket in generic-q mode on ℰ-free, z-free elements.
pub fn pair_generic(phi: &EnvElement, a: &FunElement) -> Result<Scalar> {
    if phi.field() != Field::Generic || a.field() != Field::Generic {
        return Err(Error::ModeMismatch);
    }
    if phi.iter().any(|(u, _)| u.has_central()) || a.iter().any(|(m, _)| m.has_z()) {
        return Err(Error::GenericModeUnsupported("central generators in a generic pairing"));
    }
    pair(phi, a)
}

/// ⟨φ, a⟩ with exponential tokens allowed.
pub fn pair_ext(phi: &EnvElement, a: &FunElement) -> Scalar {
    let f = phi.field();
    let mut s = f.zero();
    for (u, x) in phi.iter() {
        for (m, y) in a.iter() {
            let v = pair_ext_monomial(f, u, m);
            if !v.is_zero() {
                s += &(&(x * y) * &v);
            }
        }
    }
    s
}

/// ⟨φ ⊗ ψ, t⟩ = Σ ⟨φ, t₁⟩⟨ψ, t₂⟩.
pub fn pair_tensor(phi: &EnvElement, psi: &EnvElement, t: &FunTensor) -> Result<Scalar> {
    let f = t.field();
    let mut s = f.zero();
    for ((a, b), c) in t.iter() {
        let x = pair(phi, &funalg::monomial(f, a.clone()))?;
        if x.is_zero() {
            continue;
        }
        let y = pair(psi, &funalg::monomial(f, b.clone()))?;
        s += &(&(&x * &y) * c);
    }
    Ok(s)
}

/// ⟨Φ, a ⊗ b⟩ for Φ ∈ U ⊗ U.
pub fn pair_env_tensor(t: &EnvTensor, a: &FunElement, b: &FunElement) -> Result<Scalar> {
    let f = t.field();
    let mut s = f.zero();
    for ((u, v), c) in t.iter() {
        let x = pair(&envalg::monomial(f, u.clone()), a)?;
        if x.is_zero() {
            continue;
        }
        let y = pair(&envalg::monomial(f, v.clone()), b)?;
        s += &(&(&x * &y) * c);
    }
    Ok(s)
}

// ---------------------------------------------------------------------------
// convolution and regular actions

type DeltaCache = RwLock<HashMap<(Field, FunMonomial), Arc<FunTensor>>>;

fn delta_cache() -> &'static DeltaCache {
    static C: OnceLock<DeltaCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Δ of a monomial, memoized for z-free monomials.
pub fn coproduct_cached(f: Field, m: &FunMonomial) -> Arc<FunTensor> {
    if m.has_z() {
        return Arc::new(funalg::coproduct(&funalg::monomial(f, m.clone())));
    }
    let key = (f, m.clone());
    if let Some(t) = delta_cache().read().unwrap().get(&key) {
        return t.clone();
    }
    let t = Arc::new(funalg::coproduct(&funalg::monomial(f, m.clone())));
    delta_cache().write().unwrap().insert(key, t.clone());
    t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// ℛ(φ)F = F ⋄ φ = Σ ⟨φ, F₁⟩ F₂ (hatted operators).
    Right,
    /// ℒ(φ)F = φ ⋄ F = Σ F₁ ⟨φ, F₂⟩ (tilded operators).
    Left,
}

/// The regular action of φ on F, with the exponential extension of the bracket.
pub fn regular_action(phi: &EnvElement, g: &FunElement, side: Side) -> FunElement {
    let f = g.field();
    let mut out = Elem::zero(f);
    for (m, c) in g.iter() {
        let d = coproduct_cached(f, m);
        let r = match side {
            Side::Right => contract_left(&d, |a| pair_ext_monomial_sum(phi, a)),
            Side::Left => contract_right(&d, |b| pair_ext_monomial_sum(phi, b)),
        };
        out.add_scaled(&r, c);
    }
    out
}

fn pair_ext_monomial_sum(phi: &EnvElement, a: &FunMonomial) -> Scalar {
    let f = phi.field();
    let mut s = f.zero();
    for (u, x) in phi.iter() {
        let v = pair_ext_monomial(f, u, a);
        if !v.is_zero() {
            s += &(x * &v);
        }
    }
    s
}

/// ξ ⋄ g for a functional ξ ∈ U: `Side::Left` returns (id ⊗ ξ)Δg, `Side::Right`
/// returns (ξ ⊗ id)Δg.
pub fn convolve(phi: &EnvElement, g: &FunElement, side: Side) -> FunElement {
    regular_action(phi, g, side)
}

// ---------------------------------------------------------------------------
// regular-action table

/// One tabulated action line: `phi` acting on `input` from `side` should give `expected`.
#[derive(Clone, Debug)]
pub struct TableLine {
    pub id: &'static str,
    pub side: Side,
    pub phi: EnvElement,
    pub input: FunElement,
    pub expected: FunElement,
}

fn pw(x: FunElement, n: i64) -> FunElement {
    if n < 0 {
        Elem::zero(x.field())
    } else {
        x.pow(n as u32)
    }
}

/// The sixteen table lines at exponent n.
pub fn table_lines(f: Field, n: u32) -> Vec<TableLine> {
    use crate::envalg::{e_minus, e_plus, k_pow};
    use crate::funalg::{delta_pow, eta_minus, eta_plus};
    let ni = n as i64;
    let i = f.i();
    let ep = |k: i64| pw(eta_plus(f), k);
    let em = |k: i64| pw(eta_minus(f), k);
    let d = |k: i64| delta_pow(f, k);
    let zero = Elem::zero(f);
    let nz = if n == 0 { f.zero() } else { f.one() };
    let line = |id, side, phi, input, expected| TableLine { id, side, phi, input, expected };
    let (r, l) = (Side::Right, Side::Left);
    vec![
        line(
            "right-E+-eta+",
            r,
            e_plus(f),
            ep(ni),
            ep(ni - 1)
                .scale(&(&(&i * &f.q_half(1)) * &f.qint(ni)))
                .add(&em(1).mul(&ep(ni)).scale(&(&(&i * &f.q_half(1 - 2 * ni)) * &f.qint(2 * ni)))),
        ),
        line("right-E+-eta-", r, e_plus(f), em(ni), em(ni + 1).scale(&-(&(&i * &f.q_half(1)) * &f.qint(ni)))),
        line("right-E--eta-", r, e_minus(f), em(ni), em(ni - 1).scale(&(&(&i * &f.q_half(-1)) * &f.qint(ni)))),
        line("right-K-eta+", r, k_pow(f, 1), ep(ni), ep(ni).scale(&f.q_pow(ni))),
        line("right-K-eta-", r, k_pow(f, 1), em(ni), em(ni).scale(&f.q_pow(-ni))),
        line("right-E--eta+", r, e_minus(f), ep(ni), zero.clone()),
        line("right-E--delta", r, e_minus(f), d(ni), zero.clone()),
        line(
            "right-E+-delta",
            r,
            e_plus(f),
            d(ni),
            em(1).mul(&d(ni)).scale(
                &(&(&(&i * &(&f.q_half(-3 - 2 * ni) + &f.q_half(-6 * ni - 7))) * &f.qint(ni + 1)) * &nz),
            ),
        ),
        line("right-K-delta", r, k_pow(f, 1), d(ni), d(ni).scale(&f.q_pow(ni))),
        line(
            "left-E+-eta+",
            l,
            e_plus(f),
            ep(ni),
            d(1).mul(&ep(ni - 1)).scale(&(&(&i * &f.q_half(2 * ni - 3)) * &f.qint(ni))),
        ),
        line("left-E--eta+", l, e_minus(f), ep(ni), d(-1).mul(&ep(ni + 1)).scale(&(&i * &f.q_half(-2 * ni - 1)))),
        line(
            "left-E--eta-",
            l,
            e_minus(f),
            em(ni),
            d(-1).mul(&em(ni - 1)).scale(&(&(&i * &f.q_half(3 - 2 * ni)) * &f.qint(ni))),
        ),
        line("left-K-eta+", l, k_pow(f, 1), ep(ni), ep(ni)),
        line("left-K-eta-", l, k_pow(f, 1), em(ni), em(ni)),
        line("left-E+-eta-", l, e_plus(f), em(ni), zero.clone()),
        line("left-E+-delta", l, e_plus(f), d(ni), zero),
        line(
            "left-E--delta",
            l,
            e_minus(f),
            d(ni),
            eta_plus(f).mul(&d(ni - 1)).scale(&-(&(&(&i * &f.q_half(3 - 2 * ni)) * &f.qint(2 * ni)) * &nz)),
        ),
        line("left-K-delta", l, k_pow(f, 1), d(ni), d(ni).scale(&f.q_pow(ni))),
    ]
}

/// The tabulated lines on functions of z, instantiated on z±, z₊z₋ and an exponential.
pub fn table_z_lines(f: Field) -> Result<Vec<TableLine>> {
    use crate::envalg::{e_minus, e_plus, k_pow};
    use crate::funalg::{delta_pow, eta_minus, eta_plus, exp_token, z_minus, z_plus};
    let p = f.p().ok_or(Error::GenericModeUnsupported("regular-action table"))?;
    let inv = f.qfact(p - 1).inv()?;
    let i = f.i();
    let e = exp_token(f, f.int(1), f.frac(-1, 2));
    let fs: Vec<(FunElement, FunElement, FunElement)> = vec![
        (z_plus(f), Elem::one(f), Elem::zero(f)),
        (z_minus(f), Elem::zero(f), Elem::one(f)),
        (z_plus(f).mul(&z_minus(f)), z_minus(f), z_plus(f)),
        (e.clone(), e.scale(&i), e.scale(&(&i * &f.frac(-1, 2)))),
    ];
    let mut out = Vec::new();
    for (g, dp, dm) in fs {
        let hp = eta_plus(f).pow(p - 1).scale(&(&(&i * &f.q_half(1)) * &inv));
        let hm = eta_minus(f).pow(p - 1).scale(&(&(&i * &f.q_half(-1)) * &inv));
        let tp = eta_plus(f).pow(p - 1).mul(&delta_pow(f, 1)).scale(&(&(&i * &f.q_pow(-1)) * &inv));
        let tm = eta_minus(f).pow(p - 1).mul(&delta_pow(f, -1)).scale(&(&(&i * &f.q_pow(1)) * &inv));
        let line = |id, side, phi, expected| TableLine { id, side, phi, input: g.clone(), expected };
        out.push(line("right-E+-f", Side::Right, e_plus(f), hp.mul(&dp)));
        out.push(line("right-E--f", Side::Right, e_minus(f), hm.mul(&dm)));
        out.push(line("right-K-f", Side::Right, k_pow(f, 1), g.clone()));
        out.push(line("left-E+-f", Side::Left, e_plus(f), tp.mul(&dp)));
        out.push(line("left-E--f", Side::Left, e_minus(f), tm.mul(&dm)));
        out.push(line("left-K-f", Side::Left, k_pow(f, 1), g.clone()));
    }
    Ok(out)
}

/// Every tabulated line for n ∈ [0, p-1], plus the z-lines, against convolution.
pub fn table_check(f: Field) -> Result<Report> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("regular-action table"))?;
    let mut rep = Report::new("regular", 0);
    for n in 0..p {
        for t in table_lines(f, n) {
            let got = regular_action(&t.phi, &t.input, t.side);
            rep.check(&format!("table-{}", t.id), || format!("n={}", n), &got, &t.expected);
        }
    }
    for t in table_z_lines(f)? {
        let got = regular_action(&t.phi, &t.input, t.side);
        rep.check(&format!("table-{}", t.id), || format!("f={:?}", t.input), &got, &t.expected);
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// axiom suite

/// U-monomials with ℰ powers ≤ 1 and E-degree ≤ max_deg.
pub fn env_basis(p: u32, max_deg: u32) -> Vec<EnvMonomial> {
    let mut v = Vec::new();
    for sp in 0..2 {
        for tm in 0..2 {
            for mp in 0..p {
                for nm in 0..p {
                    if mp + nm > max_deg {
                        continue;
                    }
                    for kk in 0..p as i64 {
                        v.push(EnvMonomial::new(sp, tm, mp, nm, kk));
                    }
                }
            }
        }
    }
    v
}

/// A-monomials with z powers ≤ 1 and η-degree ≤ max_deg.
pub fn fun_basis(p: u32, max_deg: u32) -> Vec<FunMonomial> {
    let mut v = Vec::new();
    for np in 0..p {
        for nm in 0..p {
            if np + nm > max_deg {
                continue;
            }
            for kd in 0..p as i64 {
                for zp in 0..2 {
                    for zm in 0..2 {
                        v.push(FunMonomial::new(np, nm, kd).with_z(zp, zm));
                    }
                }
            }
        }
    }
    v
}

fn check_pairing_family(
    rep: &mut Report,
    f: Field,
    phis: &[EnvElement],
    funs: &[FunElement],
    // (φ, ψ, a) and (φ, a, b) index triples; all of them when `None`
    triples: Option<&[(usize, usize, usize)]>,
) -> Result<()> {
    let one_u = Elem::one(f);
    let one_a = Elem::one(f);
    let s_phi: Vec<EnvElement> = phis.iter().map(envalg::antipode).collect();
    let s_fun: Vec<FunElement> = funs.iter().map(funalg::antipode).collect::<Result<_>>()?;
    let d_fun: Vec<FunTensor> = funs.iter().map(funalg::coproduct).collect();
    let d_phi: Vec<EnvTensor> = phis.iter().map(envalg::coproduct).collect();

    for phi in phis {
        rep.check("pair-unit-A", || format!("phi={:?}", phi), &pair(phi, &one_a)?, &envalg::counit(phi));
    }
    let pairs: Vec<(usize, usize)> = match triples {
        Some(t) => t.iter().map(|&(i, _, k)| (i, k)).collect(),
        None => (0..phis.len()).flat_map(|i| (0..funs.len()).map(move |j| (i, j))).collect(),
    };
    for (i, j) in pairs {
        let (phi, a) = (&phis[i], &funs[j]);
        rep.check(
            "pair-antipode",
            || format!("phi={:?}, a={:?}", phi, a),
            &pair(&s_phi[i], a)?,
            &pair(phi, &s_fun[j])?,
        );
        let lhs = pair(&envalg::star(phi), a)?.star();
        let rhs = pair(phi, &funalg::star(&s_fun[j]))?;
        rep.check("pair-star", || format!("phi={:?}, a={:?}", phi, a), &lhs, &rhs);
    }
    for a in funs {
        rep.check("pair-unit-U", || format!("a={:?}", a), &pair(&one_u, a)?, &funalg::counit(a));
    }

    let (n, m) = (phis.len(), funs.len());
    let full = |a: usize, b: usize, c: usize| -> Vec<(usize, usize, usize)> {
        (0..a).flat_map(|i| (0..b).flat_map(move |j| (0..c).map(move |k| (i, j, k)))).collect()
    };
    let (tu, ta) = match triples {
        Some(t) => (t.to_vec(), t.to_vec()),
        None => (full(n, n, m), full(n, m, m)),
    };
    // ⟨φψ, a⟩ = ⟨φ ⊗ ψ, Δa⟩ and ⟨Δφ, a ⊗ b⟩ = ⟨φ, ab⟩
    let mut contracted: HashMap<(usize, usize), FunElement> = HashMap::new();
    let mut products: HashMap<(usize, usize), EnvElement> = HashMap::new();
    for &(i, j, k) in &tu {
        let left = contracted
            .entry((i, k))
            .or_insert_with(|| contract_left(&d_fun[k], |m| pair_ext_monomial_sum(&phis[i], m)))
            .clone();
        let prod = products.entry((i, j)).or_insert_with(|| phis[i].mul(&phis[j])).clone();
        let lhs = pair(&prod, &funs[k])?;
        let rhs = pair(&phis[j], &left)?;
        rep.check(
            "pair-product-U",
            || format!("phi={:?}, psi={:?}, a={:?}", phis[i], phis[j], funs[k]),
            &lhs,
            &rhs,
        );
    }
    let mut fprod: HashMap<(usize, usize), FunElement> = HashMap::new();
    for &(i, a, b) in &ta {
        let ab = fprod.entry((a, b)).or_insert_with(|| funs[a].mul(&funs[b])).clone();
        let lhs = pair_env_tensor(&d_phi[i], &funs[a], &funs[b])?;
        let rhs = pair(&phis[i], &ab)?;
        rep.check(
            "pair-product-A",
            || format!("phi={:?}, a={:?}, b={:?}", phis[i], funs[a], funs[b]),
            &lhs,
            &rhs,
        );
    }
    Ok(())
}

/// Hopf pairing axioms: exhaustive over the bounded-degree bases at the given p,
/// plus `samples` random triples of random elements.
pub fn axiom_check(f: Field, max_deg: u32, samples: usize, seed: u64, exhaustive: bool) -> Result<Report> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("pairing axiom suite"))?;
    let mut rep = Report::new("duality", seed);
    if exhaustive {
        let phis: Vec<EnvElement> = env_basis(p, max_deg).into_iter().map(|m| envalg::monomial(f, m)).collect();
        let funs: Vec<FunElement> = fun_basis(p, max_deg).into_iter().map(|m| funalg::monomial(f, m)).collect();
        check_pairing_family(&mut rep, f, &phis, &funs, None)?;
    }
    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phis: Vec<EnvElement> = (0..samples).map(|_| envalg::random_element(&mut rng, f, 3)).collect();
        let funs: Vec<FunElement> = (0..samples)
            .map(|_| {
                let mut a = funalg::random_finite(&mut rng, f, 3);
                if rand::Rng::random_bool(&mut rng, 0.3) {
                    a = a.mul(&funalg::z_plus(f));
                }
                a
            })
            .collect();
        let triples: Vec<(usize, usize, usize)> =
            (0..samples).map(|k| (k, (k + 1) % samples, (k + 2) % samples)).collect();
        check_pairing_family(&mut rep, f, &phis, &funs, Some(&triples))?;
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envalg::{e_minus, e_plus, ecal_plus, k_pow};
    use crate::funalg::{delta_pow, dproj, eta_minus, eta_plus, z_plus};

    #[test]
    fn bracket_examples() {
        let f = Field::Root(3);
        for n in 0..3 {
            for m in 0..3 {
                let want = if n == m { f.one() } else { f.zero() };
                assert_eq!(pair(&k_pow(f, n), &dproj(f, m)).unwrap(), want);
            }
        }
        let v = pair(&e_plus(f), &eta_plus(f).mul(&dproj(f, 1))).unwrap();
        assert_eq!(v, &f.i() * &f.q_half(1));
        assert_eq!(pair(&ecal_plus(f), &z_plus(f)).unwrap(), f.i());
        let v = pair(&e_plus(f).pow(2), &eta_plus(f).pow(2).mul(&dproj(f, 2))).unwrap();
        assert_eq!(v, f.q_pow(1));
        let e = funalg::exp_token(f, f.int(1), f.zero());
        assert!(matches!(pair(&ecal_plus(f), &e), Err(Error::NonPolynomialZPart)));
        assert_eq!(pair_ext(&ecal_plus(f), &e), -f.one());
    }

    #[test]
    fn generic_brackets() {
        let f = Field::Generic;
        assert_eq!(pair_generic(&k_pow(f, 2), &delta_pow(f, 3)).unwrap(), f.q_pow(6));
        assert_eq!(pair_generic(&e_minus(f), &eta_minus(f)).unwrap(), &f.i() * &f.q_half(-1));
        assert!(pair_generic(&e_plus(f), &eta_minus(f)).unwrap().is_zero());
    }

    #[test]
    fn convolution_examples() {
        let f = Field::Root(3);
        let d = delta_pow(f, 1);
        assert_eq!(convolve(&k_pow(f, 1), &d, Side::Right), d.scale(&f.q_pow(1)));
        let g = funalg::random_finite(&mut ChaCha8Rng::seed_from_u64(1), f, 4);
        assert_eq!(convolve(&Elem::one(f), &g, Side::Right), g);
        assert_eq!(convolve(&Elem::one(f), &g, Side::Left), g);
    }

    #[test]
    fn right_action_examples() {
        let f = Field::Root(3);
        assert!(regular_action(&e_minus(f), &eta_plus(f), Side::Right).is_zero());
        let want = eta_minus(f).pow(2).scale(&-(&f.i() * &f.q_half(1)));
        assert_eq!(regular_action(&e_plus(f), &eta_minus(f), Side::Right), want);
        assert_eq!(regular_action(&k_pow(f, 1), &z_plus(f), Side::Right), z_plus(f));
    }

    #[test]
    fn coproduct_side_of_pairing_holds_on_small_basis() {
        let f = Field::Root(3);
        let rep = axiom_check(f, 1, 0, 0, true).unwrap();
        assert_eq!(rep.by_check["pair-product-A"].failed, 0);
        assert_eq!(rep.by_check["pair-unit-A"].failed, 0);
        assert_eq!(rep.by_check["pair-unit-U"].failed, 0);
    }
}
