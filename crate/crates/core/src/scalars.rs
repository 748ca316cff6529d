//! Exact coefficients: the cyclotomic field Q(i, q) with q a primitive p-th
//! root of unity, and the rational-function field Q(i)(s) with q = s^2.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which coefficient field an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// q is a primitive p-th root of unity, p odd and at least 3.
    Root(u32),
    /// q = s^2 is transcendental.
    Generic,
}

impl Field {
    pub fn root(p: u32) -> Result<Field> {
        if p < 3 || p % 2 == 0 {
            return Err(Error::BadOrder(p));
        }
        Ok(Field::Root(p))
    }

    pub fn p(&self) -> Option<u32> {
        match self {
            Field::Root(p) => Some(*p),
            Field::Generic => None,
        }
    }

    /// p for root mode; panics in generic mode.
    pub fn order(&self) -> u32 {
        self.p().expect("operation requires root-of-unity mode")
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Root(p) => Scalar::Root(Cyc::zero(*p)),
            Field::Generic => Scalar::Gen(RatFunc::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rat(&self, r: BigRational) -> Scalar {
        match self {
            Field::Root(p) => Scalar::Root(Cyc::from_parts(*p, &[(0, r)], &[])),
            Field::Generic => Scalar::Gen(RatFunc::constant(Gq::real(r))),
        }
    }

    pub fn frac(&self, num: i64, den: i64) -> Scalar {
        self.rat(BigRational::new(num.into(), den.into()))
    }

    /// The imaginary unit.
    pub fn i(&self) -> Scalar {
        match self {
            Field::Root(p) => Scalar::Root(Cyc::from_parts(*p, &[], &[(0, BigRational::one())])),
            Field::Generic => Scalar::Gen(RatFunc::constant(Gq::imag(BigRational::one()))),
        }
    }

    /// i^e for any integer e.
    pub fn i_pow(&self, e: i64) -> Scalar {
        match e.rem_euclid(4) {
            0 => self.one(),
            1 => self.i(),
            2 => self.int(-1),
            _ => -self.i(),
        }
    }

    /// q^j.
    pub fn q_pow(&self, j: i64) -> Scalar {
        match self {
            Field::Root(p) => Scalar::Root(Cyc::q_pow(*p, j)),
            Field::Generic => Scalar::Gen(RatFunc::s_pow(2 * j)),
        }
    }

    /// q^{j/2}; in root mode the branch q^{1/2} = q^{(p+1)/2} is used.
    pub fn q_half(&self, j: i64) -> Scalar {
        match self {
            Field::Root(p) => {
                let h = (*p as i64 + 1) / 2;
                Scalar::Root(Cyc::q_pow(*p, j * h))
            }
            Field::Generic => Scalar::Gen(RatFunc::s_pow(j)),
        }
    }

    /// The q-number [n] = (q^n - q^-n)/(q - q^-1), as a Laurent sum.
    pub fn qint(&self, n: i64) -> Scalar {
        if n < 0 {
            return -self.qint(-n);
        }
        let mut acc = self.zero();
        for j in 0..n {
            acc += &self.q_pow(n - 1 - 2 * j);
        }
        acc
    }

    /// [n]! with [0]! = 1.
    pub fn qfact(&self, n: u32) -> Scalar {
        let mut acc = self.one();
        for k in 1..=n {
            acc = &acc * &self.qint(k as i64);
        }
        acc
    }

    /// 1/[n]!, failing when [n]! vanishes.
    pub fn inv_qfact(&self, n: u32) -> Result<Scalar> {
        if let Field::Root(p) = self {
            if n >= *p {
                return Err(Error::QFactorialZeroDivision(n));
            }
        }
        self.qfact(n).inv()
    }

    /// Symmetric q-binomial [n]!/([k]![n-k]!), computed by recurrence so no
    /// division by a vanishing factorial ever happens.
    pub fn qbinom(&self, n: u32, k: u32) -> Scalar {
        if k > n {
            return self.zero();
        }
        let mut row = vec![self.one()];
        for m in 1..=n {
            let mut next = Vec::with_capacity(m as usize + 1);
            for j in 0..=m {
                let mut v = self.zero();
                if j < m {
                    v += &(&self.q_pow(-(j as i64)) * &row[j as usize]);
                }
                if j > 0 {
                    v += &(&self.q_pow((m - j) as i64) * &row[j as usize - 1]);
                }
                next.push(v);
            }
            row = next;
        }
        row[k as usize].clone()
    }

    /// Gaussian binomial in the parameter t: [n, k]_t with [n,k]_t = [n-1,k-1]_t + t^k [n-1,k]_t.
    pub fn gauss_binom(&self, n: u32, k: u32, t: &Scalar) -> Scalar {
        if k > n {
            return self.zero();
        }
        let mut row = vec![self.one()];
        for m in 1..=n {
            let mut next = Vec::with_capacity(m as usize + 1);
            let mut tk = self.one();
            for j in 0..=m {
                let mut v = self.zero();
                if j > 0 {
                    v += &row[j as usize - 1];
                }
                if j < m {
                    v += &(&tk * &row[j as usize]);
                }
                next.push(v);
                tk = &tk * t;
            }
            row = next;
        }
        row[k as usize].clone()
    }

    /// (-1)^{(p+1)/2}, the sign relating E^p to the central generators.
    pub fn central_sign(&self) -> i64 {
        let p = self.order() as i64;
        if ((p + 1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn check(&self, x: &Scalar) -> Result<()> {
        if x.field() == *self {
            Ok(())
        } else {
            Err(Error::ModeMismatch)
        }
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic elements

/// An element (sum re_j q^j + i sum im_j q^j)/den of Q(i, q), reduced modulo
/// Phi_p so that only q^0..q^{p-2} appear.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyc {
    p: u32,
    re: Vec<BigInt>,
    im: Vec<BigInt>,
    den: BigInt,
}

impl Cyc {
    pub fn zero(p: u32) -> Cyc {
        let n = (p - 1) as usize;
        Cyc { p, re: vec![BigInt::zero(); n], im: vec![BigInt::zero(); n], den: BigInt::one() }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Build from sparse rational coordinates on q^j (j taken mod p).
    pub fn from_parts(p: u32, re: &[(i64, BigRational)], im: &[(i64, BigRational)]) -> Cyc {
        let mut den = BigInt::one();
        for (_, r) in re.iter().chain(im.iter()) {
            den = den.lcm(r.denom());
        }
        let mut wr = vec![BigInt::zero(); p as usize];
        let mut wi = vec![BigInt::zero(); p as usize];
        for (j, r) in re {
            wr[j.rem_euclid(p as i64) as usize] += r.numer() * (&den / r.denom());
        }
        for (j, r) in im {
            wi[j.rem_euclid(p as i64) as usize] += r.numer() * (&den / r.denom());
        }
        Cyc::from_wide(p, wr, wi, den)
    }

    /// Canonical coordinates as rationals (length p-1 each).
    pub fn coords(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let f = |v: &Vec<BigInt>| {
            v.iter().map(|x| BigRational::new(x.clone(), self.den.clone())).collect::<Vec<_>>()
        };
        (f(&self.re), f(&self.im))
    }

    pub fn from_coords(p: u32, re: &[BigRational], im: &[BigRational]) -> Result<Cyc> {
        let n = (p - 1) as usize;
        if re.len() != n || im.len() != n {
            return Err(Error::Schema(format!("expected {} coordinates", n)));
        }
        let r: Vec<_> = re.iter().enumerate().map(|(j, x)| (j as i64, x.clone())).collect();
        let i: Vec<_> = im.iter().enumerate().map(|(j, x)| (j as i64, x.clone())).collect();
        Ok(Cyc::from_parts(p, &r, &i))
    }

    fn q_pow(p: u32, j: i64) -> Cyc {
        Cyc::from_parts(p, &[(j, BigRational::one())], &[])
    }

    /// Reduce a length-p vector (coefficients of q^0..q^{p-1}) modulo Phi_p.
    fn from_wide(p: u32, mut wr: Vec<BigInt>, mut wi: Vec<BigInt>, den: BigInt) -> Cyc {
        let top = (p - 1) as usize;
        let tr = std::mem::take(&mut wr[top]);
        let ti = std::mem::take(&mut wi[top]);
        wr.truncate(top);
        wi.truncate(top);
        if !tr.is_zero() {
            for x in wr.iter_mut() {
                *x -= &tr;
            }
        }
        if !ti.is_zero() {
            for x in wi.iter_mut() {
                *x -= &ti;
            }
        }
        let mut c = Cyc { p, re: wr, im: wi, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        let mut g = self.den.clone();
        for x in self.re.iter().chain(self.im.iter()) {
            if g.is_one() {
                break;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if self.is_zero_num() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for x in self.re.iter_mut().chain(self.im.iter_mut()) {
                *x = &*x / &g;
            }
            self.den = &self.den / &g;
        }
    }

    fn is_zero_num(&self) -> bool {
        self.re.iter().chain(self.im.iter()).all(|x| x.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero_num()
    }

    pub fn add(&self, o: &Cyc) -> Cyc {
        assert_eq!(self.p, o.p, "mixed orders of q");
        let p = self.p;
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let (den, fa, fb) = if self.den == o.den {
            (self.den.clone(), BigInt::one(), BigInt::one())
        } else {
            let l = self.den.lcm(&o.den);
            let fa = &l / &self.den;
            let fb = &l / &o.den;
            (l, fa, fb)
        };
        let comb = |a: &[BigInt], b: &[BigInt]| {
            a.iter().zip(b.iter()).map(|(x, y)| x * &fa + y * &fb).collect::<Vec<_>>()
        };
        let mut c = Cyc { p, re: comb(&self.re, &o.re), im: comb(&self.im, &o.im), den };
        c.normalize();
        c
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            p: self.p,
            re: self.re.iter().map(|x| -x).collect(),
            im: self.im.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }

    fn conv(a: &[BigInt], b: &[BigInt], p: usize, out: &mut [BigInt], sign: i32) {
        for (j, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = (j + k) % p;
                if sign > 0 {
                    out[t] += x * y;
                } else {
                    out[t] -= x * y;
                }
            }
        }
    }

    pub fn mul(&self, o: &Cyc) -> Cyc {
        assert_eq!(self.p, o.p, "mixed orders of q");
        let p = self.p as usize;
        if self.is_zero() || o.is_zero() {
            return Cyc::zero(self.p);
        }
        let mut wr = vec![BigInt::zero(); p];
        let mut wi = vec![BigInt::zero(); p];
        Cyc::conv(&self.re, &o.re, p, &mut wr, 1);
        Cyc::conv(&self.im, &o.im, p, &mut wr, -1);
        Cyc::conv(&self.re, &o.im, p, &mut wi, 1);
        Cyc::conv(&self.im, &o.re, p, &mut wi, 1);
        Cyc::from_wide(self.p, wr, wi, &self.den * &o.den)
    }

    /// Multiply by i^e q^j without a general product.
    pub fn mul_iq(&self, e: i64, j: i64) -> Cyc {
        let p = self.p as usize;
        let s = j.rem_euclid(p as i64) as usize;
        let rot = |v: &[BigInt]| {
            let mut w = vec![BigInt::zero(); p];
            for (k, x) in v.iter().enumerate() {
                w[(k + s) % p] = x.clone();
            }
            w
        };
        let (mut r, mut i) = (rot(&self.re), rot(&self.im));
        match e.rem_euclid(4) {
            0 => {}
            1 => {
                std::mem::swap(&mut r, &mut i);
                r.iter_mut().for_each(|x| *x = -&*x);
            }
            2 => {
                r.iter_mut().for_each(|x| *x = -&*x);
                i.iter_mut().for_each(|x| *x = -&*x);
            }
            _ => {
                std::mem::swap(&mut r, &mut i);
                i.iter_mut().for_each(|x| *x = -&*x);
            }
        }
        Cyc::from_wide(self.p, r, i, self.den.clone())
    }

    pub fn scale(&self, r: &BigRational) -> Cyc {
        let mut c = Cyc {
            p: self.p,
            re: self.re.iter().map(|x| x * r.numer()).collect(),
            im: self.im.iter().map(|x| x * r.numer()).collect(),
            den: &self.den * r.denom(),
        };
        c.normalize();
        c
    }

    /// i -> -i, q -> q^{-1}.
    pub fn star(&self) -> Cyc {
        let p = self.p as usize;
        let mut wr = vec![BigInt::zero(); p];
        let mut wi = vec![BigInt::zero(); p];
        for k in 0..p - 1 {
            let t = (p - k) % p;
            wr[t] = self.re[k].clone();
            wi[t] = -&self.im[k];
        }
        Cyc::from_wide(self.p, wr, wi, self.den.clone())
    }

    /// Multiplicative inverse by exact linear solve over Q.
    pub fn inv(&self) -> Result<Cyc> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let n = (self.p - 1) as usize;
        let dim = 2 * n;
        // column c is the image of the basis vector c under multiplication by self
        let mut m = vec![vec![BigRational::zero(); dim + 1]; dim];
        for c in 0..dim {
            let (j, imag) = (c % n, c >= n);
            let basis = if imag {
                Cyc::from_parts(self.p, &[], &[(j as i64, BigRational::one())])
            } else {
                Cyc::from_parts(self.p, &[(j as i64, BigRational::one())], &[])
            };
            let prod = self.mul(&basis);
            let (r, i) = prod.coords();
            for row in 0..n {
                m[row][c] = r[row].clone();
                m[row + n][c] = i[row].clone();
            }
        }
        m[0][dim] = BigRational::one();
        let sol = solve(m, dim).ok_or(Error::ZeroInverse)?;
        Cyc::from_coords(self.p, &sol[..n], &sol[n..])
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.im.iter().any(|x| !x.is_zero()) || self.re.iter().skip(1).any(|x| !x.is_zero()) {
            return None;
        }
        Some(BigRational::new(self.re[0].clone(), self.den.clone()))
    }

    pub fn embed(&self, root_index: u32) -> Result<Complex64> {
        if root_index == 0 || root_index >= self.p || self.p.gcd(&root_index) != 1 {
            return Err(Error::BadRootIndex(root_index));
        }
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..(self.p - 1) as usize {
            let ang = 2.0 * std::f64::consts::PI * (root_index as f64) * (k as f64) / (self.p as f64);
            let z = Complex64::from_polar(1.0, ang);
            let c = Complex64::new(
                self.re[k].to_f64().unwrap_or(f64::NAN),
                self.im[k].to_f64().unwrap_or(f64::NAN),
            );
            acc += c * z;
        }
        Ok(acc / d)
    }
}

/// Gauss-Jordan on an augmented matrix; returns the solution when unique.
pub(crate) fn solve(mut m: Vec<Vec<BigRational>>, dim: usize) -> Option<Vec<BigRational>> {
    for col in 0..dim {
        let piv = (col..dim).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for k in col..=dim {
            m[col][k] = &m[col][k] * &inv;
        }
        for r in 0..dim {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=dim {
                    let t = &f * &m[col][k];
                    m[r][k] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[dim].clone()).collect())
}

// ---------------------------------------------------------------------------
// Generic mode: rational functions in s over Q(i)

/// A Gaussian rational re + i im.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gq {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gq {
    pub fn real(re: BigRational) -> Gq {
        Gq { re, im: BigRational::zero() }
    }
    pub fn imag(im: BigRational) -> Gq {
        Gq { re: BigRational::zero(), im }
    }
    pub fn zero() -> Gq {
        Gq::real(BigRational::zero())
    }
    pub fn one() -> Gq {
        Gq::real(BigRational::one())
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn add(&self, o: &Gq) -> Gq {
        Gq { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    pub fn sub(&self, o: &Gq) -> Gq {
        Gq { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    pub fn mul(&self, o: &Gq) -> Gq {
        Gq {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    pub fn conj(&self) -> Gq {
        Gq { re: self.re.clone(), im: -&self.im }
    }
    pub fn inv(&self) -> Gq {
        let n = &self.re * &self.re + &self.im * &self.im;
        Gq { re: &self.re / &n, im: -&self.im / &n }
    }
}

type Poly = Vec<Gq>;

fn ptrim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn padd(a: &Poly, b: &Poly, neg: bool) -> Poly {
    let n = a.len().max(b.len());
    let z = Gq::zero();
    ptrim(
        (0..n)
            .map(|k| {
                let x = a.get(k).unwrap_or(&z);
                let y = b.get(k).unwrap_or(&z);
                if neg {
                    x.sub(y)
                } else {
                    x.add(y)
                }
            })
            .collect(),
    )
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Gq::zero(); a.len() + b.len() - 1];
    for (j, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            out[j + k] = out[j + k].add(&x.mul(y));
        }
    }
    ptrim(out)
}

fn pdivmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b[db].inv();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut qv = vec![Gq::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r[r.len() - 1].mul(&lead);
        for (j, y) in b.iter().enumerate() {
            r[j + k] = r[j + k].sub(&c.mul(y));
        }
        qv[k] = c;
        r = ptrim(r);
        if r.len() <= db {
            break;
        }
    }
    (ptrim(qv), r)
}

fn pgcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let (_, r) = pdivmod(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn pscale(a: &Poly, c: &Gq) -> Poly {
    ptrim(a.iter().map(|x| x.mul(c)).collect())
}

/// num/den in s with den monic and gcd(num, den) = 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: vec![], den: vec![Gq::one()] }
    }
    pub fn constant(c: Gq) -> RatFunc {
        RatFunc::new(vec![c], vec![Gq::one()])
    }
    /// s^k for any integer k.
    pub fn s_pow(k: i64) -> RatFunc {
        let mono = |n: usize| {
            let mut v = vec![Gq::zero(); n + 1];
            v[n] = Gq::one();
            v
        };
        if k >= 0 {
            RatFunc { num: mono(k as usize), den: vec![Gq::one()] }
        } else {
            RatFunc { num: vec![Gq::one()], den: mono((-k) as usize) }
        }
    }

    pub fn new(num: Vec<Gq>, den: Vec<Gq>) -> RatFunc {
        let num = ptrim(num);
        let den = ptrim(den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFunc::zero();
        }
        let g = pgcd(&num, &den);
        let (n, _) = pdivmod(&num, &g);
        let (d, _) = pdivmod(&den, &g);
        let lead = d[d.len() - 1].inv();
        RatFunc { num: pscale(&n, &lead), den: pscale(&d, &lead) }
    }

    pub fn parts(&self) -> (&[Gq], &[Gq]) {
        (&self.num, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(padd(&self.num, &o.num, false), self.den.clone());
        }
        RatFunc::new(
            padd(&pmul(&self.num, &o.den), &pmul(&o.num, &self.den), false),
            pmul(&self.den, &o.den),
        )
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(pmul(&self.num, &o.num), pmul(&self.den, &o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.iter().map(|c| Gq::zero().sub(c)).collect(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    /// Conjugate coefficients and substitute s -> 1/s.
    pub fn star(&self) -> RatFunc {
        let flip = |a: &Poly, n: usize| {
            let mut v = vec![Gq::zero(); n + 1];
            for (k, c) in a.iter().enumerate() {
                v[n - k] = c.conj();
            }
            v
        };
        let dn = self.num.len().saturating_sub(1);
        let dd = self.den.len() - 1;
        let n = dn.max(dd);
        RatFunc::new(flip(&self.num, n), flip(&self.den, n))
    }

    pub fn as_constant(&self) -> Option<Gq> {
        if self.den.len() == 1 && self.num.len() <= 1 {
            Some(self.num.first().cloned().unwrap_or_else(Gq::zero))
        } else {
            None
        }
    }
}

// ---------------------------------------------------------------------------

/// A field element in either mode.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Root(Cyc),
    Gen(RatFunc),
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Root(a), Scalar::Root(b)) => a.cmp(b),
            (Scalar::Gen(a), Scalar::Gen(b)) => a.cmp(b),
            (Scalar::Root(_), Scalar::Gen(_)) => Ordering::Less,
            (Scalar::Gen(_), Scalar::Root(_)) => Ordering::Greater,
        }
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Root(c) => Field::Root(c.p),
            Scalar::Gen(_) => Field::Generic,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Root(c) => c.is_zero(),
            Scalar::Gen(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar> {
        match (self, o) {
            (Scalar::Root(a), Scalar::Root(b)) if a.p == b.p => Ok(Scalar::Root(a.add(b))),
            (Scalar::Gen(a), Scalar::Gen(b)) => Ok(Scalar::Gen(a.add(b))),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar> {
        match (self, o) {
            (Scalar::Root(a), Scalar::Root(b)) if a.p == b.p => Ok(Scalar::Root(a.mul(b))),
            (Scalar::Gen(a), Scalar::Gen(b)) => Ok(Scalar::Gen(a.mul(b))),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Root(c) => c.inv().map(Scalar::Root),
            Scalar::Gen(r) => r.inv().map(Scalar::Gen),
        }
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar> {
        self.try_mul(&o.inv()?)
    }

    pub fn star(&self) -> Scalar {
        match self {
            Scalar::Root(c) => Scalar::Root(c.star()),
            Scalar::Gen(r) => Scalar::Gen(r.star()),
        }
    }

    /// Multiply by i^e q^j.
    pub fn mul_iq(&self, e: i64, j: i64) -> Scalar {
        match self {
            Scalar::Root(c) => Scalar::Root(c.mul_iq(e, j)),
            Scalar::Gen(_) => {
                let f = self.field();
                &(&f.i_pow(e) * &f.q_pow(j)) * self
            }
        }
    }

    pub fn scale_rat(&self, r: &BigRational) -> Scalar {
        match self {
            Scalar::Root(c) => Scalar::Root(c.scale(r)),
            Scalar::Gen(_) => self * &self.field().rat(r.clone()),
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Root(c) => c.as_rational(),
            Scalar::Gen(r) => r.as_constant().filter(|g| g.im.is_zero()).map(|g| g.re),
        }
    }

    /// True when star(x) == x.
    pub fn is_real(&self) -> bool {
        self.star() == *self
    }

    pub fn embed(&self, root_index: u32) -> Result<Complex64> {
        match self {
            Scalar::Root(c) => c.embed(root_index),
            Scalar::Gen(_) => Err(Error::ModeMismatch),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.try_add(o).expect("scalar mode mismatch")
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.try_mul(o).expect("scalar mode mismatch")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Root(c) => Scalar::Root(c.neg()),
            Scalar::Gen(r) => Scalar::Gen(r.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_terms(terms: &[(BigRational, String)]) -> String {
    let mut out = String::new();
    for (c, atom) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if atom.is_empty() {
            out.push_str(&fmt_rat(&a));
        } else if a.is_one() {
            out.push_str(atom);
        } else {
            out.push_str(&format!("{}*{}", fmt_rat(&a), atom));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.coords();
        let mut terms = Vec::new();
        for (part, unit) in [(&re, ""), (&im, "i")] {
            for (k, c) in part.iter().enumerate() {
                let atom = match (k, unit) {
                    (0, u) => u.to_string(),
                    (1, "") => "q".into(),
                    (k, "") => format!("q^{}", k),
                    (1, u) => format!("{}*q", u),
                    (k, u) => format!("{}*q^{}", u, k),
                };
                terms.push((c.clone(), atom));
            }
        }
        write!(f, "{}", fmt_terms(&terms))
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_poly(p: &[Gq]) -> String {
    let mut terms = Vec::new();
    for (k, c) in p.iter().enumerate() {
        let s = match k {
            0 => String::new(),
            1 => "s".into(),
            k => format!("s^{}", k),
        };
        let join = |u: &str| match (u.is_empty(), s.is_empty()) {
            (true, _) => s.clone(),
            (false, true) => u.to_string(),
            (false, false) => format!("{}*{}", u, s),
        };
        terms.push((c.re.clone(), join("")));
        terms.push((c.im.clone(), join("i")));
    }
    fmt_terms(&terms)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.len() == 1 {
            write!(f, "{}", fmt_poly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_poly(&self.num), fmt_poly(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Root(c) => write!(f, "{}", c),
            Scalar::Gen(r) => write!(f, "{}", r),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}


#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::Root(3)
    }

    #[test]
    fn q_squared_and_cubed_reduce() {
        let f = f3();
        let q = f.q_pow(1);
        assert_eq!(&q * &q, f.q_pow(2));
        assert_eq!(&f.q_pow(2) * &q, f.one());
        // q^2 = -1 - q
        assert_eq!(f.q_pow(2), &f.int(-1) - &q);
    }

    #[test]
    fn inverse_of_q() {
        let f = f3();
        assert_eq!(f.q_pow(1).inv().unwrap(), f.q_pow(2));
        assert!(f.zero().inv().is_err());
    }

    #[test]
    fn star_examples() {
        let f = f3();
        assert_eq!(f.i().star(), -f.i());
        assert_eq!(f.q_pow(1).star(), f.q_pow(2));
        let x = &f.int(2) + &(&f.int(3) * &f.q_pow(1));
        let want = &f.int(-1) - &(&f.int(3) * &f.q_pow(1));
        assert_eq!(x.star(), want);
        let e = x.embed(1).unwrap().conj();
        let s = x.star().embed(1).unwrap();
        assert!((e - s).norm() < 1e-12);
    }

    #[test]
    fn half_powers() {
        assert_eq!(f3().q_half(1), f3().q_pow(2));
        assert_eq!(f3().q_half(2), f3().q_pow(1));
        assert_eq!(Field::Root(5).q_half(1), Field::Root(5).q_pow(3));
        for p in [3u32, 5, 7] {
            let f = Field::Root(p);
            for j in -6..6 {
                assert_eq!(f.q_half(j).pow(2), f.q_pow(j));
            }
        }
    }

    #[test]
    fn q_numbers() {
        let f = f3();
        assert_eq!(f.qint(0), f.zero());
        assert_eq!(f.qint(1), f.one());
        assert_eq!(f.qint(2), f.int(-1));
        assert_eq!(f.qint(3), f.zero());
        let e = f.qint(2).embed(1).unwrap();
        assert!((e - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn q_number_addition_rule() {
        for p in [3u32, 5, 7] {
            let f = Field::Root(p);
            for n in 0..p as i64 {
                for m in 0..p as i64 {
                    let lhs = &(&f.qint(n) * &f.q_pow(m)) + &(&f.qint(m) * &f.q_pow(-n));
                    assert_eq!(lhs, f.qint(n + m));
                }
            }
        }
    }

    #[test]
    fn qbinom_vanishes_at_p() {
        for p in [3u32, 5, 7] {
            let f = Field::Root(p);
            let t = f.q_pow(2);
            for k in 1..p {
                assert!(f.gauss_binom(p, k, &t).is_zero());
                assert!(f.qbinom(p, k).is_zero());
            }
            assert!(f.inv_qfact(p).is_err());
        }
    }

    #[test]
    fn qbinom_matches_factorials_below_p() {
        let f = Field::Root(7);
        for n in 0..7 {
            for k in 0..=n {
                let direct = f
                    .qfact(n)
                    .try_div(&(&f.qfact(k) * &f.qfact(n - k)))
                    .unwrap();
                assert_eq!(f.qbinom(n, k), direct);
            }
        }
    }

    #[test]
    fn generic_inverse() {
        let g = Field::Generic;
        let x = &g.q_pow(1) - &g.q_pow(-1);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(g.q_half(1).star(), g.q_half(-1));
        assert_eq!(x.star(), -x.clone());
    }

    #[test]
    fn bad_root_index() {
        let f = f3();
        assert!(f.one().embed(3).is_err());
        let e = f.q_pow(1).embed(1).unwrap();
        assert!((e - Complex64::new(-0.5, 0.75f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn display() {
        let f = f3();
        assert_eq!(f.q_pow(2).to_string(), "-1 - q");
        assert_eq!(f.frac(1, 2).to_string(), "1/2");
        assert_eq!(Field::Generic.q_half(-1).to_string(), "(1)/(s)");
    }
}
