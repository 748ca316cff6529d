//! The function algebra A(SL_q(2,R)) at roots of unity: normal-ordered
//! monomials η₊^n η₋^m δ^k z₊^a z₋^b exp(i(α z₊ + β z₋)), its Hopf maps,
//! the projectors 𝒟(m), subgroup homomorphisms and coset bases.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rand::Rng;

use crate::elem::{tensor, Elem, Monomial};
use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar};

/// Frequencies (α, β) of an exponential token exp(i(α z₊ + β z₋)).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Freq {
    pub plus: Scalar,
    pub minus: Scalar,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FunMonomial {
    pub np: u32,
    pub nm: u32,
    pub kd: i64,
    pub zp: u32,
    pub zm: u32,
    /// `None` is the zero frequency.
    pub freq: Option<Box<Freq>>,
}

pub type FunElement = Elem<FunMonomial>;
pub type FunTensor = Elem<(FunMonomial, FunMonomial)>;

impl FunMonomial {
    pub fn new(np: u32, nm: u32, kd: i64) -> FunMonomial {
        FunMonomial { np, nm, kd, zp: 0, zm: 0, freq: None }
    }

    pub fn with_z(mut self, zp: u32, zm: u32) -> FunMonomial {
        self.zp = zp;
        self.zm = zm;
        self
    }

    pub fn with_freq(mut self, plus: Scalar, minus: Scalar) -> FunMonomial {
        self.freq = make_freq(plus, minus);
        self
    }

    pub fn has_z(&self) -> bool {
        self.zp > 0 || self.zm > 0 || self.freq.is_some()
    }

    pub fn finite_part(&self) -> FunMonomial {
        FunMonomial::new(self.np, self.nm, self.kd)
    }

    pub fn z_part(&self) -> FunMonomial {
        FunMonomial { np: 0, nm: 0, kd: 0, zp: self.zp, zm: self.zm, freq: self.freq.clone() }
    }

    pub fn freqs(&self, f: Field) -> (Scalar, Scalar) {
        match &self.freq {
            Some(b) => (b.plus.clone(), b.minus.clone()),
            None => (f.zero(), f.zero()),
        }
    }

    /// Canonicalize: reduce δ mod p, kill nilpotent overflow.
    fn normalized(mut self, f: Field) -> Option<FunMonomial> {
        if let Field::Root(p) = f {
            if self.np >= p || self.nm >= p {
                return None;
            }
            self.kd = self.kd.rem_euclid(p as i64);
        }
        Some(self)
    }
}

fn make_freq(plus: Scalar, minus: Scalar) -> Option<Box<Freq>> {
    if plus.is_zero() && minus.is_zero() {
        None
    } else {
        Some(Box::new(Freq { plus, minus }))
    }
}

fn add_freq(f: Field, a: &Option<Box<Freq>>, b: &Option<Box<Freq>>) -> Option<Box<Freq>> {
    match (a, b) {
        (None, None) => None,
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (Some(x), Some(y)) => {
            let _ = f;
            make_freq(&x.plus + &y.plus, &x.minus + &y.minus)
        }
    }
}

impl Monomial for FunMonomial {
    fn unit(_f: Field) -> Self {
        FunMonomial::new(0, 0, 0)
    }

    fn product(f: Field, a: &Self, b: &Self) -> Elem<Self> {
        let m = FunMonomial {
            np: a.np + b.np,
            nm: a.nm + b.nm,
            kd: a.kd + b.kd,
            zp: a.zp + b.zp,
            zm: a.zm + b.zm,
            freq: add_freq(f, &a.freq, &b.freq),
        };
        match m.normalized(f) {
            None => Elem::zero(f),
            Some(m) => {
                let e = 2 * (a.nm as i64) * (b.np as i64) - 2 * a.kd * (b.np as i64 + b.nm as i64);
                Elem::mono(f, m, f.q_pow(e))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// constructors

pub fn monomial(f: Field, m: FunMonomial) -> FunElement {
    match m.normalized(f) {
        Some(m) => Elem::mono(f, m, f.one()),
        None => Elem::zero(f),
    }
}

pub fn eta_plus(f: Field) -> FunElement {
    monomial(f, FunMonomial::new(1, 0, 0))
}

pub fn eta_minus(f: Field) -> FunElement {
    monomial(f, FunMonomial::new(0, 1, 0))
}

/// δ^k, with negative k reduced mod p in root mode.
pub fn delta_pow(f: Field, k: i64) -> FunElement {
    monomial(f, FunMonomial::new(0, 0, k))
}

pub fn z_plus(f: Field) -> FunElement {
    monomial(f, FunMonomial::new(0, 0, 0).with_z(1, 0))
}

pub fn z_minus(f: Field) -> FunElement {
    monomial(f, FunMonomial::new(0, 0, 0).with_z(0, 1))
}

/// exp(i(α z₊ + β z₋)).
pub fn exp_token(f: Field, alpha: Scalar, beta: Scalar) -> FunElement {
    monomial(f, FunMonomial::new(0, 0, 0).with_freq(alpha, beta))
}

/// ρ = q η₊ η₋.
pub fn rho(f: Field) -> FunElement {
    monomial(f, FunMonomial::new(1, 1, 0)).scale(&f.q_pow(1))
}

/// 𝒟(m) = (1/p) Σ_l q^{-lm} δ^l.
pub fn dproj(f: Field, m: i64) -> FunElement {
    let p = f.order() as i64;
    let inv_p = f.frac(1, p);
    let mut out = Elem::zero(f);
    for l in 0..p {
        out.add_term(FunMonomial::new(0, 0, l), &f.q_pow(-l * m) * &inv_p);
    }
    out
}

/// (a; q^{qpow})_k = Π_{j=1..k} (1 - a q^{(j-1) qpow}) evaluated in the algebra.
pub fn q_pochhammer<M: Monomial>(a: &Elem<M>, qpow: i64, k: u32) -> Elem<M> {
    let f = a.field();
    let mut out = Elem::one(f);
    for j in 1..=k {
        let factor = Elem::one(f).sub(&a.scale(&f.q_pow((j as i64 - 1) * qpow)));
        out = out.mul(&factor);
    }
    out
}

// ---------------------------------------------------------------------------
// star, counit

/// Antilinear antihomomorphism fixing η±, δ, z±; exp(iαz) ↦ exp(-i ᾱ z).
pub fn star(a: &FunElement) -> FunElement {
    let f = a.field();
    let mut out = Elem::zero(f);
    for (m, c) in a.iter() {
        // reversed order of the finite generators: δ^k η₋^m η₊^n
        let d = monomial(f, FunMonomial::new(0, 0, m.kd));
        let em = monomial(f, FunMonomial::new(0, m.nm, 0));
        let ep = monomial(f, FunMonomial::new(m.np, 0, 0));
        let fin = d.mul(&em).mul(&ep);
        let mut z = m.z_part();
        if let Some(fr) = &z.freq {
            z.freq = make_freq(-fr.plus.star(), -fr.minus.star());
        }
        let zed = monomial(f, z);
        out.add_scaled(&fin.mul(&zed), &c.star());
    }
    out
}

pub fn counit(a: &FunElement) -> Scalar {
    let f = a.field();
    let mut s = f.zero();
    for (m, c) in a.iter() {
        if m.np == 0 && m.nm == 0 && m.zp == 0 && m.zm == 0 {
            s += c;
        }
    }
    s
}

// ---------------------------------------------------------------------------
// coproduct

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Gen {
    Delta,
    EtaPlus,
    EtaMinus,
}

type PowCache = RwLock<HashMap<(Field, Gen, u32, u32), Arc<FunTensor>>>;

fn pow_cache() -> &'static PowCache {
    static C: OnceLock<PowCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn fm(f: Field, np: u32, nm: u32, kd: i64) -> FunElement {
    monomial(f, FunMonomial::new(np, nm, kd))
}

/// Series truncation degree: p-1 at a root of unity, caller supplied otherwise.
fn series_len(f: Field, trunc: u32) -> u32 {
    match f {
        Field::Root(p) => p - 1,
        Field::Generic => trunc,
    }
}

fn gen_coproduct(f: Field, g: Gen, trunc: u32) -> FunTensor {
    let one = Elem::one(f);
    let q = |j: i64| f.q_pow(j);
    match g {
        Gen::Delta => {
            let mut t = tensor(&fm(f, 0, 0, 1), &fm(f, 0, 0, 1));
            let l = fm(f, 0, 0, -1).mul(&fm(f, 2, 0, 0)).scale(&q(-4));
            t = t.add(&tensor(&l, &fm(f, 0, 2, 0).mul(&fm(f, 0, 0, 1))));
            let c = &f.one() + &q(-2);
            t.add(&tensor(&fm(f, 1, 0, 0).scale(&c), &fm(f, 0, 1, 1)))
        }
        Gen::EtaPlus => {
            let mut t = tensor(&fm(f, 1, 0, 0), &one);
            t = t.add(&tensor(&fm(f, 0, 0, 1), &fm(f, 1, 0, 0)));
            let c = &f.one() + &q(2);
            t = t.add(&tensor(&fm(f, 1, 0, 0).scale(&c), &fm(f, 1, 1, 0)));
            let l = fm(f, 0, 0, -1).mul(&fm(f, 2, 0, 0)).scale(&q(-2));
            let r = one.add(&fm(f, 1, 1, 0).scale(&q(2))).mul(&fm(f, 0, 1, 0));
            t.add(&tensor(&l, &r))
        }
        Gen::EtaMinus => {
            let mut t = tensor(&fm(f, 0, 1, 0), &one);
            t = t.add(&tensor(&fm(f, 0, 0, -1), &fm(f, 0, 1, 0)));
            for k in 1..=series_len(f, trunc) as i64 {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let c = f.q_pow(-k * (k + 1)).scale_rat(&crate::scalars::rat(sign, 1));
                let l = fm(f, 0, 0, -k - 1).mul(&fm(f, k as u32, 0, 0)).scale(&c);
                t = t.add(&tensor(&l, &fm(f, 0, k as u32 + 1, 0)));
            }
            t
        }
    }
}

fn gen_power(f: Field, g: Gen, n: u32, trunc: u32) -> Arc<FunTensor> {
    let key = (f, g, n, trunc);
    if let Some(t) = pow_cache().read().unwrap().get(&key) {
        return t.clone();
    }
    let t = if n == 0 {
        Elem::one(f)
    } else {
        let prev = gen_power(f, g, n - 1, trunc);
        let t = prev.mul(&gen_coproduct(f, g, trunc));
        truncate_tensor(&t, f, trunc)
    };
    let t = Arc::new(t);
    pow_cache().write().unwrap().insert(key, t.clone());
    t
}

fn truncate_tensor(t: &FunTensor, f: Field, trunc: u32) -> FunTensor {
    match f {
        Field::Root(_) => t.clone(),
        Field::Generic => {
            t.filter(|(a, b)| a.np + a.nm <= trunc + 1 && b.np + b.nm <= trunc + 1)
        }
    }
}

/// c₊ of Δz₊ = z₊⊗1 + 1⊗z₊ + c₊.
pub fn c_plus(f: Field) -> FunTensor {
    let p = f.order();
    let mut t = Elem::zero(f);
    let r = fm(f, 1, 1, 0).scale(&-f.q_pow(2));
    for k in 1..p {
        let c = f
            .q_pow((k * k) as i64)
            .try_div(&(&f.qfact(k) * &f.qfact(p - k)))
            .expect("factorials below p are invertible");
        let left = fm(f, p - k, 0, k as i64).scale(&c);
        let right = q_pochhammer(&r, 2, p - k).mul(&fm(f, k, 0, 0));
        t = t.add(&tensor(&left, &right));
    }
    t
}

/// c₋ of Δz₋ = z₋⊗1 + 1⊗z₋ + c₋.
pub fn c_minus(f: Field) -> FunTensor {
    let p = f.order();
    let mut t = Elem::zero(f);
    let r = fm(f, 1, 1, 0).scale(&f.int(-1));
    for k in 1..p {
        let c = f
            .q_pow(-((k * k) as i64))
            .try_div(&(&f.qfact(k) * &f.qfact(p - k)))
            .expect("factorials below p are invertible");
        let left = fm(f, 0, p - k, -(k as i64)).mul(&q_pochhammer(&r, -2, k)).scale(&c);
        t = t.add(&tensor(&left, &fm(f, 0, k, 0)));
    }
    t
}

fn binom(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for j in 0..k {
        r = r * (n - j) as i64 / (j + 1) as i64;
    }
    r
}

/// f(z₀) for f = z₊^a z₋^b exp(...): substitute z± ↦ z±⊗1 + 1⊗z±.
fn z_substitute(f: Field, a: u32, b: u32, freq: &Option<Box<Freq>>) -> FunTensor {
    let mut t = Elem::zero(f);
    for j in 0..=a {
        for l in 0..=b {
            let c = f.int(binom(a, j) * binom(b, l));
            let mut x = FunMonomial::new(0, 0, 0).with_z(j, l);
            let mut y = FunMonomial::new(0, 0, 0).with_z(a - j, b - l);
            x.freq = freq.clone();
            y.freq = freq.clone();
            t.add_term((x, y), c);
        }
    }
    t
}

/// Derivative of z₊^a z₋^b exp(i(α z₊ + β z₋)) in z₊ (plus = true) or z₋.
fn z_derivative(f: Field, m: &FunMonomial, plus: bool) -> Vec<(Scalar, FunMonomial)> {
    let (alpha, beta) = m.freqs(f);
    let mut out = Vec::new();
    let (deg, w) = if plus { (m.zp, alpha) } else { (m.zm, beta) };
    if deg > 0 {
        let mut d = m.clone();
        if plus {
            d.zp -= 1;
        } else {
            d.zm -= 1;
        }
        out.push((f.int(deg as i64), d));
    }
    if !w.is_zero() {
        out.push((&f.i() * &w, m.clone()));
    }
    out
}

fn z_coproduct(f: Field, m: &FunMonomial) -> FunTensor {
    let sub = |terms: &[(Scalar, FunMonomial)]| {
        let mut t = Elem::zero(f);
        for (c, d) in terms {
            t.add_scaled(&z_substitute(f, d.zp, d.zm, &d.freq), c);
        }
        t
    };
    let base = z_substitute(f, m.zp, m.zm, &m.freq);
    if !m.has_z() {
        return base;
    }
    let dp = z_derivative(f, m, true);
    let dm = z_derivative(f, m, false);
    let mut dpm = Vec::new();
    for (c, d) in &dp {
        for (c2, d2) in z_derivative(f, d, false) {
            dpm.push((c * &c2, d2));
        }
    }
    let cp = c_plus(f);
    let cm = c_minus(f);
    let mut t = base;
    if !dp.is_empty() {
        t = t.add(&sub(&dp).mul(&cp));
    }
    if !dm.is_empty() {
        t = t.add(&sub(&dm).mul(&cm));
    }
    if !dpm.is_empty() {
        t = t.add(&sub(&dpm).mul(&cp.mul(&cm)));
    }
    t
}

/// Δ on one monomial.
pub fn coproduct_monomial(f: Field, m: &FunMonomial, trunc: u32) -> Result<FunTensor> {
    if f == Field::Generic {
        if m.has_z() {
            return Err(Error::GenericModeUnsupported("coproduct of z-parts"));
        }
        if m.kd < 0 {
            return Err(Error::GenericModeUnsupported("coproduct of negative powers of delta"));
        }
    }
    let mut t = (*gen_power(f, Gen::EtaPlus, m.np, trunc)).clone();
    if m.nm > 0 {
        t = truncate_tensor(&t.mul(&gen_power(f, Gen::EtaMinus, m.nm, trunc)), f, trunc);
    }
    if m.kd > 0 {
        t = truncate_tensor(&t.mul(&gen_power(f, Gen::Delta, m.kd as u32, trunc)), f, trunc);
    }
    if m.has_z() {
        t = t.mul(&z_coproduct(f, &m.z_part()));
    }
    Ok(t)
}

/// Δ : A → A ⊗ A (root-of-unity mode).
pub fn coproduct(a: &FunElement) -> FunTensor {
    try_coproduct(a, 0).expect("coproduct needs root-of-unity mode")
}

/// Δ with an explicit series truncation, the only form available in generic mode.
pub fn try_coproduct(a: &FunElement, trunc: u32) -> Result<FunTensor> {
    let f = a.field();
    let mut t = Elem::zero(f);
    for (m, c) in a.iter() {
        t.add_scaled(&coproduct_monomial(f, m, trunc)?, c);
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// antipode

fn antipode_gens(f: Field) -> [FunElement; 3] {
    let one = Elem::one(f);
    let u = fm(f, 1, 1, 0);
    let p = f.order();
    // (1 + η₊η₋)^{-1} as a terminating geometric series
    let mut inv = Elem::zero(f);
    let mut pw = Elem::one(f);
    for _ in 0..p {
        inv = inv.add(&pw);
        pw = pw.mul(&u.scale(&f.int(-1)));
    }
    let sp = one
        .add(&u.scale(&f.q_pow(2)))
        .mul(&fm(f, 0, 0, -1))
        .mul(&fm(f, 1, 0, 0))
        .scale(&f.int(-1));
    let sm = inv.mul(&fm(f, 0, 0, 1)).mul(&fm(f, 0, 1, 0)).scale(&f.int(-1));
    let sd = fm(f, 0, 0, -1).mul(&one.add(&u.scale(&f.q_pow(-2)))).mul(&one.add(&u));
    [sp, sm, sd]
}

/// The antipode, an antihomomorphism.
pub fn antipode(a: &FunElement) -> Result<FunElement> {
    let f = a.field();
    if f == Field::Generic {
        return Err(Error::GenericModeUnsupported("antipode"));
    }
    let [sp, sm, sd] = antipode_gens(f);
    let mut out = Elem::zero(f);
    for (m, c) in a.iter() {
        let mut z = m.z_part();
        let sign = if (z.zp + z.zm) % 2 == 0 { 1 } else { -1 };
        if let Some(fr) = &z.freq {
            z.freq = make_freq(-&fr.plus, -&fr.minus);
        }
        let t = sd
            .pow(m.kd as u32)
            .mul(&sm.pow(m.nm))
            .mul(&sp.pow(m.np))
            .mul(&monomial(f, z))
            .scale(&f.int(sign));
        out.add_scaled(&t, c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// subgroups and cosets

/// Subgroup homomorphisms of A.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupHom {
    /// η± ↦ 0, δ ↦ 1, z± ↦ z± (translation group).
    Translation,
    /// η± ↦ 0, δ ↦ t, z-part ↦ its counit (SO(1,1|p)); t is stored in the δ slot.
    Torus,
    /// η₊ ↦ η, η₋ ↦ 0, δ ↦ t, z-part ↦ its counit (E_q(1)); η in the η₊ slot, t in the δ slot.
    Borel,
}

pub fn subgroup_hom(which: SubgroupHom, a: &FunElement) -> FunElement {
    let f = a.field();
    let mut out = Elem::zero(f);
    for (m, c) in a.iter() {
        let img = match which {
            SubgroupHom::Translation => {
                if m.np > 0 || m.nm > 0 {
                    continue;
                }
                m.z_part()
            }
            SubgroupHom::Torus => {
                if m.np > 0 || m.nm > 0 || m.zp > 0 || m.zm > 0 {
                    continue;
                }
                FunMonomial::new(0, 0, m.kd)
            }
            SubgroupHom::Borel => {
                if m.nm > 0 || m.zp > 0 || m.zm > 0 {
                    continue;
                }
                FunMonomial::new(m.np, 0, m.kd)
            }
        };
        out.add_term(img, c.clone());
    }
    out
}

/// (id ⊗ ξ)Δg for `right == false`, (ξ ⊗ id)Δg otherwise.
pub fn convolve_hom(which: SubgroupHom, g: &FunElement, right: bool) -> FunTensor {
    let f = g.field();
    let d = coproduct(g);
    let mut out = Elem::zero(f);
    for ((a, b), c) in d.iter() {
        let t = if right {
            tensor(&subgroup_hom(which, &monomial(f, a.clone())), &monomial(f, b.clone()))
        } else {
            tensor(&monomial(f, a.clone()), &subgroup_hom(which, &monomial(f, b.clone())))
        };
        out.add_scaled(&t, c);
    }
    out
}

/// The (n, m) pairs on which the coset basis is independent.
pub fn coset_domain(p: u32) -> Vec<(u32, u32)> {
    let n0 = (p - 1) / 2;
    let mut v = Vec::new();
    for n in 0..n0 {
        for m in 0..=2 * n0 {
            v.push((n, m));
        }
    }
    for m in 0..=n0 {
        v.push((n0, m));
    }
    v
}

/// Unnormalized ẽ±_nm = η₊^{p-1-n} η₋^{p-1-m} ± η₊^n η₋^m.
pub fn coset_basis(f: Field, plus: bool, n: u32, m: u32) -> Result<FunElement> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("coset basis"))?;
    if !coset_domain(p).contains(&(n, m)) {
        return Err(Error::DomainViolation(format!("coset index ({}, {})", n, m)));
    }
    let a = fm(f, p - 1 - n, p - 1 - m, 0);
    let b = fm(f, n, m, 0);
    Ok(if plus { a.add(&b) } else { a.sub(&b) })
}

/// All p^3 monomials of the finite part.
pub fn finite_basis(p: u32) -> Vec<FunMonomial> {
    let mut v = Vec::with_capacity((p * p * p) as usize);
    for a in 0..p {
        for b in 0..p {
            for k in 0..p as i64 {
                v.push(FunMonomial::new(a, b, k));
            }
        }
    }
    v
}

/// A random finite-part element with small integer and q-power coefficients.
pub fn random_finite<R: Rng>(rng: &mut R, f: Field, terms: usize) -> FunElement {
    let p = f.order();
    let mut e = Elem::zero(f);
    for _ in 0..terms {
        let m = FunMonomial::new(rng.random_range(0..p), rng.random_range(0..p), rng.random_range(0..p as i64));
        e.add_term(m, random_coeff(rng, f));
    }
    e
}

/// A small random coefficient (±1, ±2, ±i, q-powers, 1/2).
pub fn random_coeff<R: Rng>(rng: &mut R, f: Field) -> Scalar {
    let p = f.p().unwrap_or(5) as i64;
    let base = match rng.random_range(0..4) {
        0 => f.int(rng.random_range(1..4)),
        1 => f.frac(1, 2),
        2 => f.i(),
        _ => f.int(-1),
    };
    &base * &f.q_pow(rng.random_range(0..p))
}
