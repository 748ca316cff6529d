//! U_q(sl(2,R)) at roots of unity in the PBW basis ℰ₊^s ℰ₋^t E₊^m E₋^n K^k.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rand::Rng;

use crate::elem::{tensor, Elem, Monomial};
use crate::scalars::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EnvMonomial {
    pub sp: u32,
    pub tm: u32,
    pub mp: u32,
    pub nm: u32,
    pub kk: i64,
}

pub type EnvElement = Elem<EnvMonomial>;
pub type EnvTensor = Elem<(EnvMonomial, EnvMonomial)>;

impl EnvMonomial {
    pub fn new(sp: u32, tm: u32, mp: u32, nm: u32, kk: i64) -> EnvMonomial {
        EnvMonomial { sp, tm, mp, nm, kk }
    }

    /// E₊^m E₋^n K^k.
    pub fn finite(mp: u32, nm: u32, kk: i64) -> EnvMonomial {
        EnvMonomial::new(0, 0, mp, nm, kk)
    }

    pub fn has_central(&self) -> bool {
        self.sp > 0 || self.tm > 0
    }
}

/// Build the normal form of ℰ₊^sp ℰ₋^tm E₊^a E₋^b K^k, rewriting E±^p into ℰ±.
fn canonical(f: Field, sp: u32, tm: u32, a: u32, b: u32, k: i64, c: Scalar) -> (EnvMonomial, Scalar) {
    let (mut sp, mut tm, mut a, mut b, mut k, mut c) = (sp, tm, a, b, k, c);
    if let Field::Root(p) = f {
        let sigma = f.int(f.central_sign());
        while a >= p {
            a -= p;
            sp += 1;
            c = &c * &sigma;
        }
        while b >= p {
            b -= p;
            tm += 1;
            c = &c * &sigma;
        }
        k = k.rem_euclid(p as i64);
    }
    (EnvMonomial::new(sp, tm, a, b, k), c)
}

type SwapCache = RwLock<HashMap<(Field, u32, u32), Arc<EnvElement>>>;

fn swap_cache() -> &'static SwapCache {
    static C: OnceLock<SwapCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// 1/(q - q⁻¹).
fn inv_qdiff(f: Field) -> Scalar {
    (&f.q_pow(1) - &f.q_pow(-1)).inv().expect("q - 1/q is invertible for p >= 3")
}

/// Normal form of E₋^n E₊^m (no overflow can occur since n, m < p).
fn swap_table(f: Field, n: u32, m: u32) -> Arc<EnvElement> {
    let key = (f, n, m);
    if let Some(v) = swap_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let v = if m == 0 {
        Elem::mono(f, EnvMonomial::finite(0, n, 0), f.one())
    } else {
        let prev = swap_table(f, n, m - 1);
        let h = inv_qdiff(f);
        let mut out = Elem::zero(f);
        for (mo, c) in prev.iter() {
            // E₊^a E₋^b K^j E₊ = q^j E₊^a (E₋^b E₊) K^j
            let (a, b, j) = (mo.mp, mo.nm, mo.kk);
            let c = c * &f.q_pow(j);
            out.add_term(EnvMonomial::finite(a + 1, b, j), c.clone());
            if b > 0 {
                let coef = &(&c * &f.qint(b as i64)) * &h;
                let bi = b as i64;
                let (m1, c1) = canonical(f, 0, 0, a, b - 1, j + 2, &coef * &f.q_pow(1 - bi));
                out.add_term(m1, -c1);
                let (m2, c2) = canonical(f, 0, 0, a, b - 1, j - 2, &coef * &f.q_pow(bi - 1));
                out.add_term(m2, c2);
            }
        }
        out
    };
    let v = Arc::new(v);
    swap_cache().write().unwrap().insert(key, v.clone());
    v
}

impl Monomial for EnvMonomial {
    fn unit(_f: Field) -> Self {
        EnvMonomial::new(0, 0, 0, 0, 0)
    }

    fn product(f: Field, x: &Self, y: &Self) -> Elem<Self> {
        let pre = f.q_pow(x.kk * (y.mp as i64 - y.nm as i64));
        let mut out = Elem::zero(f);
        for (mo, c) in swap_table(f, x.nm, y.mp).iter() {
            let c = &(c * &pre) * &f.q_pow(-mo.kk * y.nm as i64);
            let (m, c) = canonical(
                f,
                x.sp + y.sp,
                x.tm + y.tm,
                x.mp + mo.mp,
                mo.nm + y.nm,
                mo.kk + x.kk + y.kk,
                c,
            );
            out.add_term(m, c);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// constructors

pub fn monomial(f: Field, m: EnvMonomial) -> EnvElement {
    let (m, c) = canonical(f, m.sp, m.tm, m.mp, m.nm, m.kk, f.one());
    Elem::mono(f, m, c)
}

pub fn e_plus(f: Field) -> EnvElement {
    monomial(f, EnvMonomial::finite(1, 0, 0))
}

pub fn e_minus(f: Field) -> EnvElement {
    monomial(f, EnvMonomial::finite(0, 1, 0))
}

pub fn k_pow(f: Field, k: i64) -> EnvElement {
    monomial(f, EnvMonomial::finite(0, 0, k))
}

pub fn ecal_plus(f: Field) -> EnvElement {
    monomial(f, EnvMonomial::new(1, 0, 0, 0, 0))
}

pub fn ecal_minus(f: Field) -> EnvElement {
    monomial(f, EnvMonomial::new(0, 1, 0, 0, 0))
}

/// ε± = -q^{±1/2} E± K⁻¹.
pub fn eps(f: Field, plus: bool) -> EnvElement {
    let (e, h) = if plus { (e_plus(f), 1) } else { (e_minus(f), -1) };
    e.mul(&k_pow(f, -1)).scale(&-f.q_half(h))
}

/// The central Casimir E₋E₊ + (K - K⁻¹)(qK - q⁻¹K⁻¹)/(q - q⁻¹)².
pub fn casimir(f: Field) -> EnvElement {
    let h = inv_qdiff(f);
    let a = k_pow(f, 1).sub(&k_pow(f, -1));
    let b = k_pow(f, 1).scale(&f.q_pow(1)).sub(&k_pow(f, -1).scale(&f.q_pow(-1)));
    e_minus(f).mul(&e_plus(f)).add(&a.mul(&b).scale(&(&h * &h)))
}

pub fn commutator(a: &EnvElement, b: &EnvElement) -> EnvElement {
    a.mul(b).sub(&b.mul(a))
}

// ---------------------------------------------------------------------------
// Hopf structure

type PowCache = RwLock<HashMap<(Field, u8, u32), Arc<EnvTensor>>>;

fn pow_cache() -> &'static PowCache {
    static C: OnceLock<PowCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn gen_coproduct(f: Field, g: u8) -> EnvTensor {
    let one = Elem::one(f);
    match g {
        0 => tensor(&ecal_plus(f), &one).add(&tensor(&one, &ecal_plus(f))),
        1 => tensor(&ecal_minus(f), &one).add(&tensor(&one, &ecal_minus(f))),
        2 => tensor(&e_plus(f), &k_pow(f, 1)).add(&tensor(&k_pow(f, -1), &e_plus(f))),
        3 => tensor(&e_minus(f), &k_pow(f, 1)).add(&tensor(&k_pow(f, -1), &e_minus(f))),
        _ => tensor(&k_pow(f, 1), &k_pow(f, 1)),
    }
}

fn gen_power(f: Field, g: u8, n: u32) -> Arc<EnvTensor> {
    let key = (f, g, n);
    if let Some(t) = pow_cache().read().unwrap().get(&key) {
        return t.clone();
    }
    let t = if n == 0 {
        Elem::one(f)
    } else {
        gen_power(f, g, n - 1).mul(&gen_coproduct(f, g))
    };
    let t = Arc::new(t);
    pow_cache().write().unwrap().insert(key, t.clone());
    t
}

pub fn coproduct_monomial(f: Field, m: &EnvMonomial) -> EnvTensor {
    let kpow = if m.kk >= 0 {
        (*gen_power(f, 4, m.kk as u32)).clone()
    } else {
        let kinv = k_pow(f, m.kk);
        tensor(&kinv, &kinv)
    };
    gen_power(f, 0, m.sp)
        .mul(&gen_power(f, 1, m.tm))
        .mul(&gen_power(f, 2, m.mp))
        .mul(&gen_power(f, 3, m.nm))
        .mul(&kpow)
}

pub fn coproduct(a: &EnvElement) -> EnvTensor {
    let f = a.field();
    a.map_linear(f, |m| coproduct_monomial(f, m))
}

pub fn counit(a: &EnvElement) -> Scalar {
    let f = a.field();
    let mut s = f.zero();
    for (m, c) in a.iter() {
        if m.sp == 0 && m.tm == 0 && m.mp == 0 && m.nm == 0 {
            s += c;
        }
    }
    s
}

/// S(E±) = -q^{±1} E±, S(K) = K⁻¹, S(ℰ±) = -ℰ±, extended as an antihomomorphism.
pub fn antipode(a: &EnvElement) -> EnvElement {
    let f = a.field();
    let sp = e_plus(f).scale(&-f.q_pow(1));
    let sm = e_minus(f).scale(&-f.q_pow(-1));
    a.map_linear(f, |m| {
        let sign = if (m.sp + m.tm) % 2 == 0 { 1 } else { -1 };
        k_pow(f, -m.kk)
            .mul(&sm.pow(m.nm))
            .mul(&sp.pow(m.mp))
            .mul(&monomial(f, EnvMonomial::new(m.sp, m.tm, 0, 0, 0)))
            .scale(&f.int(sign))
    })
}

/// Antilinear antihomomorphism fixing E±, K, ℰ±.
pub fn star(a: &EnvElement) -> EnvElement {
    let f = a.field();
    let mut out = Elem::zero(f);
    for (m, c) in a.iter() {
        let t = k_pow(f, m.kk)
            .mul(&monomial(f, EnvMonomial::finite(0, m.nm, 0)))
            .mul(&monomial(f, EnvMonomial::finite(m.mp, 0, 0)))
            .mul(&monomial(f, EnvMonomial::new(m.sp, m.tm, 0, 0, 0)));
        out.add_scaled(&t, &c.star());
    }
    out
}

/// Projection onto U_q(sl(2,R)|p): ℰ± ↦ 0.
pub fn xi_a(a: &EnvElement) -> EnvElement {
    a.filter(|m| !m.has_central())
}

/// Random element with small coefficients; central powers up to 1.
pub fn random_element<R: Rng>(rng: &mut R, f: Field, terms: usize) -> EnvElement {
    let p = f.order();
    let mut e = Elem::zero(f);
    for _ in 0..terms {
        let m = EnvMonomial::new(
            rng.random_range(0..2),
            rng.random_range(0..2),
            rng.random_range(0..p),
            rng.random_range(0..p),
            rng.random_range(0..p as i64),
        );
        e.add_term(m, crate::funalg::random_coeff(rng, f));
    }
    e
}
