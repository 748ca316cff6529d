//! Invariant integrals I_t, I_p, I_c, I_w, their Hermitian forms, Gram
//! signatures and the invariance suites.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::duality::{regular_action, Side};
use crate::elem::Elem;
use crate::envalg::{self, EnvElement};
use crate::error::{Error, Result};
use crate::funalg::{self, FunElement, FunMonomial, FunTensor};
use crate::report::Report;
use crate::scalars::{Field, Scalar};

/// Result of the translation-group integral: a plain part plus formal tokens
/// Δ^{(a,b)} = (2π)² δ^{(a)}(0) δ^{(b)}(0), one 2π absorbed per axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistValue {
    pub finite: Scalar,
    pub tokens: BTreeMap<(u32, u32), Scalar>,
}

impl DistValue {
    pub fn zero(f: Field) -> DistValue {
        DistValue { finite: f.zero(), tokens: BTreeMap::new() }
    }

    pub fn token(f: Field, a: u32, b: u32, c: Scalar) -> DistValue {
        let mut d = DistValue::zero(f);
        d.add_token(a, b, c);
        d
    }

    pub fn is_zero(&self) -> bool {
        self.finite.is_zero() && self.tokens.is_empty()
    }

    fn add_token(&mut self, a: u32, b: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.tokens.entry((a, b)).or_insert_with(|| c.field().zero());
        *e += &c;
        if e.is_zero() {
            self.tokens.remove(&(a, b));
        }
    }

    pub fn add(&self, o: &DistValue) -> DistValue {
        let mut r = self.clone();
        r.finite += &o.finite;
        for ((a, b), c) in &o.tokens {
            r.add_token(*a, *b, c.clone());
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> DistValue {
        let mut r = DistValue::zero(self.finite.field());
        r.finite = &self.finite * c;
        for ((a, b), v) in &self.tokens {
            r.add_token(*a, *b, v * c);
        }
        r
    }

    /// Complex conjugate; δ^{(a)} is odd for odd a, so tokens pick up (-1)^{a+b}.
    pub fn star(&self) -> DistValue {
        let f = self.finite.field();
        let mut r = DistValue::zero(f);
        r.finite = self.finite.star();
        for ((a, b), v) in &self.tokens {
            let s = if (a + b) % 2 == 0 { f.one() } else { f.int(-1) };
            r.add_token(*a, *b, &v.star() * &s);
        }
        r
    }

    /// The coefficient of Δ^{(0,0)} when it is the only nonzero part.
    pub fn pure_token00(&self) -> Option<Scalar> {
        let f = self.finite.field();
        if !self.finite.is_zero() || self.tokens.keys().any(|k| *k != (0, 0)) {
            return None;
        }
        Some(self.tokens.get(&(0, 0)).cloned().unwrap_or_else(|| f.zero()))
    }
}

fn require_torus(a: &FunElement) -> Result<()> {
    if a.iter().any(|(m, _)| m.np > 0 || m.nm > 0 || m.has_z()) {
        return Err(Error::DomainViolation("expected a polynomial in t alone".into()));
    }
    Ok(())
}

/// I_t(t^m) = δ_{m,0 mod p}; t is carried in the δ slot.
pub fn i_t(a: &FunElement) -> Result<Scalar> {
    require_torus(a)?;
    let f = a.field();
    let p = f.order() as i64;
    let mut s = f.zero();
    for (m, c) in a.iter() {
        if m.kd.rem_euclid(p) == 0 {
            s += c;
        }
    }
    Ok(s)
}

/// (a, b)_t = I_t(a* b).
pub fn form_t(a: &FunElement, b: &FunElement) -> Result<Scalar> {
    i_t(&funalg::star(a).mul(b))
}

pub fn t_pow(f: Field, m: i64) -> FunElement {
    funalg::delta_pow(f, m)
}

/// I_p(η₊^n η₋^m δ^k) = q⁻¹ δ_{n,p-1} δ_{m,p-1} δ_{k,0}.
pub fn i_p(a: &FunElement) -> Result<Scalar> {
    let f = a.field();
    let p = f.p().ok_or(Error::GenericModeUnsupported("I_p"))?;
    if a.iter().any(|(m, _)| m.has_z()) {
        return Err(Error::NonTrivialZPart);
    }
    let top = FunMonomial::new(p - 1, p - 1, 0);
    Ok(&a.coeff(&top) * &f.q_pow(-1))
}

/// (P, Q)_p = I_p(P Q*).
pub fn form_p(a: &FunElement, b: &FunElement) -> Result<Scalar> {
    i_p(&a.mul(&funalg::star(b)))
}

/// I_c on one z-monomial z₊^a z₋^b exp(i(α z₊ + β z₋)).
pub fn i_c_monomial(f: Field, m: &FunMonomial) -> Result<DistValue> {
    let (alpha, beta) = m.freqs(f);
    if (!alpha.is_zero() && m.zp > 0) || (!beta.is_zero() && m.zm > 0) {
        return Err(Error::UnsupportedMixedTerm);
    }
    if !alpha.is_zero() || !beta.is_zero() {
        return Ok(DistValue::zero(f));
    }
    Ok(DistValue::token(f, m.zp, m.zm, f.i_pow(-((m.zp + m.zm) as i64))))
}

/// I_c on an element whose finite part is trivial.
pub fn i_c(a: &FunElement) -> Result<DistValue> {
    let f = a.field();
    let mut r = DistValue::zero(f);
    for (m, c) in a.iter() {
        if m.np > 0 || m.nm > 0 || m.kd != 0 {
            return Err(Error::DomainViolation("I_c takes a pure z-part".into()));
        }
        r = r.add(&i_c_monomial(f, m)?.scale(c));
    }
    Ok(r)
}

/// I_w(Σ P_n f_n) = Σ I_p(P_n) I_c(f_n).
pub fn i_w(a: &FunElement) -> Result<DistValue> {
    let f = a.field();
    let p = f.p().ok_or(Error::GenericModeUnsupported("I_w"))?;
    let qinv = f.q_pow(-1);
    let mut r = DistValue::zero(f);
    for (m, c) in a.iter() {
        if m.np != p - 1 || m.nm != p - 1 || m.kd != 0 {
            if m.has_z() {
                // still reject terms outside the safe fragment
                i_c_monomial(f, &m.z_part())?;
            }
            continue;
        }
        r = r.add(&i_c_monomial(f, &m.z_part())?.scale(&(c * &qinv)));
    }
    Ok(r)
}

/// (F, G)_w = I_w(F G*).
pub fn form_w(a: &FunElement, b: &FunElement) -> Result<DistValue> {
    i_w(&a.mul(&funalg::star(b)))
}

/// An A-valued distribution: Σ F_token ⊗ Δ^{token} plus a plain A part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ADist {
    pub finite: FunElement,
    pub tokens: BTreeMap<(u32, u32), FunElement>,
}

impl ADist {
    pub fn zero(f: Field) -> ADist {
        ADist { finite: Elem::zero(f), tokens: BTreeMap::new() }
    }

    pub fn add_scaled(&mut self, x: &FunElement, d: &DistValue) {
        let f = x.field();
        if !d.finite.is_zero() {
            self.finite = self.finite.add(&x.scale(&d.finite));
        }
        for (k, c) in &d.tokens {
            let e = self.tokens.entry(*k).or_insert_with(|| Elem::zero(f));
            *e = e.add(&x.scale(c));
            if e.is_zero() {
                self.tokens.remove(k);
            }
        }
    }

    /// 1_A ⊗ d.
    pub fn unit_times(f: Field, d: &DistValue) -> ADist {
        let mut r = ADist::zero(f);
        r.add_scaled(&Elem::one(f), d);
        r
    }
}

/// (id ⊗ I_w) applied to a tensor.
pub fn id_tensor_i_w(t: &FunTensor) -> Result<ADist> {
    let f = t.field();
    let mut r = ADist::zero(f);
    for ((a, b), c) in t.iter() {
        let d = i_w(&funalg::monomial(f, b.clone()))?;
        if !d.is_zero() {
            r.add_scaled(&funalg::monomial(f, a.clone()).scale(c), &d);
        }
    }
    Ok(r)
}

/// (I_w ⊗ id) applied to a tensor.
pub fn i_w_tensor_id(t: &FunTensor) -> Result<ADist> {
    let f = t.field();
    let mut r = ADist::zero(f);
    for ((a, b), c) in t.iter() {
        let d = i_w(&funalg::monomial(f, a.clone()))?;
        if !d.is_zero() {
            r.add_scaled(&funalg::monomial(f, b.clone()).scale(c), &d);
        }
    }
    Ok(r)
}

/// {Σ F⊗X, Σ G⊗Y}_w = Σ F G* (X, Y)_w.
pub fn braces_w(s: &FunTensor, t: &FunTensor) -> Result<ADist> {
    let f = s.field();
    let mut r = ADist::zero(f);
    let tstar: Vec<(FunElement, FunElement, Scalar)> = t
        .iter()
        .map(|((a, b), c)| {
            (
                funalg::star(&funalg::monomial(f, a.clone())),
                funalg::star(&funalg::monomial(f, b.clone())),
                c.star(),
            )
        })
        .collect();
    for ((a, b), c) in s.iter() {
        let fa = funalg::monomial(f, a.clone());
        let xb = funalg::monomial(f, b.clone());
        for (ga, yb, d) in &tstar {
            let w = i_w(&xb.mul(yb))?;
            if w.is_zero() {
                continue;
            }
            r.add_scaled(&fa.mul(ga).scale(&(c * d)), &w);
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// Gram matrices and signatures

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    P,
    T,
    W,
}

pub fn form(which: Form, a: &FunElement, b: &FunElement) -> Result<Scalar> {
    match which {
        Form::P => form_p(a, b),
        Form::T => form_t(a, b),
        Form::W => form_w(a, b)?
            .pure_token00()
            .ok_or_else(|| Error::DomainViolation("w-form value is not a pure Δ^(0,0) multiple".into())),
    }
}

pub fn gram(which: Form, basis: &[FunElement]) -> Result<Vec<Vec<Scalar>>> {
    basis.iter().map(|a| basis.iter().map(|b| form(which, a, b)).collect()).collect()
}

/// Rank over the exact field.
pub fn exact_rank(m: &[Vec<Scalar>]) -> Result<usize> {
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, piv);
        let inv = a[rank][c].inv()?;
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let k = &a[r][c] * &inv;
                for j in c..cols {
                    let v = &a[r][j] - &(&k * &a[rank][j]);
                    a[r][j] = v;
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
    /// Counts per primitive root index q = exp(2πi r/p).
    pub per_root: Vec<(u32, (usize, usize, usize))>,
    pub unanimous: bool,
}

/// Eigenvalue sign tolerance for signature counts.
pub const SIGNATURE_TOL: f64 = 1e-9;

/// Signature of a Gram matrix under every primitive embedding of q.
pub fn signature_of(g: &[Vec<Scalar>], f: Field) -> Result<Signature> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("signature"))?;
    let n = g.len();
    let mut per_root = Vec::new();
    for r in 1..p {
        if num_integer::gcd(r, p) != 1 {
            continue;
        }
        let mut m = DMatrix::<Complex64>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = g[i][j].embed(r)?;
            }
        }
        // symmetrize away rounding before the Hermitian eigensolver
        let h = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let ev = h.symmetric_eigenvalues();
        let mut c = (0, 0, 0);
        for v in ev.iter() {
            if *v > SIGNATURE_TOL {
                c.0 += 1;
            } else if *v < -SIGNATURE_TOL {
                c.1 += 1;
            } else {
                c.2 += 1;
            }
        }
        per_root.push((r, c));
    }
    let first = per_root[0].1;
    let unanimous = per_root.iter().all(|(_, c)| *c == first);
    if first.2 > 0 && exact_rank(g)? < n {
        return Err(Error::DegenerateGram);
    }
    Ok(Signature { pos: first.0, neg: first.1, zero: first.2, per_root, unanimous })
}

pub fn gram_signature(basis: &[FunElement], which: Form) -> Result<Signature> {
    let f = basis.first().map(|b| b.field()).ok_or(Error::DegenerateGram)?;
    signature_of(&gram(which, basis)?, f)
}

/// The unnormalized coset basis: ẽ⁺ over the whole domain, then the nonzero ẽ⁻.
pub fn coset_gram_basis(f: Field) -> Result<Vec<FunElement>> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("coset basis"))?;
    let mut v = Vec::new();
    for plus in [true, false] {
        for (n, m) in funalg::coset_domain(p) {
            let e = funalg::coset_basis(f, plus, n, m)?;
            if !e.is_zero() {
                v.push(e);
            }
        }
    }
    Ok(v)
}

/// {t⁰} ∪ {t^m ± t^{p-m} : 1 ≤ m ≤ (p-1)/2}.
pub fn torus_basis(f: Field) -> Vec<FunElement> {
    let p = f.order() as i64;
    let mut v = vec![t_pow(f, 0)];
    for m in 1..=(p - 1) / 2 {
        v.push(t_pow(f, m).add(&t_pow(f, p - m)));
        v.push(t_pow(f, m).sub(&t_pow(f, p - m)));
    }
    v
}

// ---------------------------------------------------------------------------
// invariance

fn generator_set(f: Field) -> Vec<(String, EnvElement)> {
    let gens = [
        ("E+", envalg::e_plus(f)),
        ("E-", envalg::e_minus(f)),
        ("K", envalg::k_pow(f, 1)),
    ];
    let mut v: Vec<(String, EnvElement)> = gens.iter().map(|(n, g)| (n.to_string(), g.clone())).collect();
    for (a, x) in &gens {
        for (b, y) in &gens {
            v.push((format!("{}{}", a, b), x.mul(y)));
        }
    }
    v
}

/// I_p(ℛ(φ)P) = ε(φ) I_p(P) and I_p(ℒ(φ)P) = ε(φ) I_p(P) over the full monomial
/// basis, for the generators and all their pairwise products.
pub fn invariance_check(f: Field) -> Result<Report> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("invariance"))?;
    let mut rep = Report::new("invariance", 0);
    let gens = generator_set(f);
    for m in funalg::finite_basis(p) {
        let pm = funalg::monomial(f, m.clone());
        let base = i_p(&pm)?;
        rep.check("I_p-star", || format!("P={:?}", m), &i_p(&funalg::star(&pm))?, &base.star());
        for (name, phi) in &gens {
            let want = &base * &envalg::counit(phi);
            let r = i_p(&regular_action(phi, &pm, Side::Right))?;
            rep.check(&format!("I_p-right-{}", name), || format!("P={:?}", m), &r, &want);
            let l = i_p(&regular_action(phi, &pm, Side::Left))?;
            rep.check(&format!("I_p-left-{}", name), || format!("P={:?}", m), &l, &want);
        }
    }
    Ok(rep)
}

/// Left and right invariance of I_w on P·exp(i(α z₊ + β z₋)).
pub fn w_invariance(g: &FunElement) -> Result<(ADist, ADist, DistValue)> {
    let d = funalg::coproduct(g);
    Ok((id_tensor_i_w(&d)?, i_w_tensor_id(&d)?, i_w(g)?))
}

/// A random element of the hyperboloid space: Σ f_nm ẽ±_nm with f_nm drawn
/// from exponentials of the given nonzero frequencies.
pub fn random_hyperboloid<R: Rng>(rng: &mut R, f: Field, freqs: &[(Scalar, Scalar)], terms: usize) -> Result<FunElement> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("hyperboloid"))?;
    let dom = funalg::coset_domain(p);
    let mut x = Elem::zero(f);
    for _ in 0..terms {
        let (n, m) = dom[rng.random_range(0..dom.len())];
        let e = funalg::coset_basis(f, rng.random_bool(0.5), n, m)?;
        let (a, b) = &freqs[rng.random_range(0..freqs.len())];
        let c = funalg::random_coeff(rng, f);
        x = x.add(&e.mul(&funalg::exp_token(f, a.clone(), b.clone())).scale(&c));
    }
    Ok(x)
}

/// {ΔX, ΔY}_w = 1_A (X, Y)_w on seeded random hyperboloid pairs.
pub fn quasi_regular_check(f: Field, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("quasi-regular", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let freqs = [
        (f.int(1), f.zero()),
        (f.frac(1, 2), f.int(-1)),
        (f.zero(), f.int(2)),
    ];
    for k in 0..samples {
        let x = random_hyperboloid(&mut rng, f, &freqs, 2)?;
        let y = random_hyperboloid(&mut rng, f, &freqs, 2)?;
        let lhs = braces_w(&funalg::coproduct(&x), &funalg::coproduct(&y))?;
        let rhs = ADist::unit_times(f, &form_w(&x, &y)?);
        rep.check("quasi-regular-pseudo-unitarity", || format!("sample {}: X={:?}, Y={:?}", k, x, y), &lhs, &rhs);
    }
    Ok(rep)
}

/// Helper for tests and suites: every monomial of the finite part as an element.
pub fn basis_elements(f: Field) -> Vec<FunElement> {
    funalg::finite_basis(f.order()).into_iter().map(|m| funalg::monomial(f, m)).collect()
}
