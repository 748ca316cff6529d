//! The cyclic representation L^λ, the A-type representations ℛ^(l), the
//! universal T-matrix, the corepresentation T^(λ) and its matrix elements.

use crate::duality::{self, regular_action, Side};
use crate::elem::{contract_left, contract_right, tensor, Elem};
use crate::envalg::{self, EnvElement, EnvMonomial};
use crate::error::{Error, Result};
use crate::funalg::{self, FunElement, FunMonomial};
use crate::integral;
use crate::report::Report;
use crate::scalars::{Field, Scalar};

/// Dense matrix; column n is the image of the n-th basis vector.
pub type Mat = Vec<Vec<Scalar>>;

pub fn mat_zero(f: Field, n: usize) -> Mat {
    vec![vec![f.zero(); n]; n]
}

pub fn mat_identity(f: Field, n: usize) -> Mat {
    let mut m = mat_zero(f, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let f = a[0][0].field();
    let mut c = mat_zero(f, n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    c
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn mat_scale(a: &Mat, c: &Scalar) -> Mat {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn mat_pow(a: &Mat, k: u32) -> Mat {
    let f = a[0][0].field();
    let mut r = mat_identity(f, a.len());
    for _ in 0..k {
        r = mat_mul(&r, a);
    }
    r
}

/// Conjugate transpose with entries star-conjugated.
pub fn mat_adjoint(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].star()).collect()).collect()
}

/// The cyclic representation L^λ on A(SO(1,1|p)) with basis t^0..t^{p-1}.
#[derive(Clone, Debug)]
pub struct RepFamily {
    pub field: Field,
    pub lambda_plus: Scalar,
    pub a: Scalar,
    /// M_0 = λ₊, M_i = aλ₊ - [i-1][i].
    pub m: Vec<Scalar>,
    pub lambda_minus: Scalar,
    pub k: Mat,
    pub e_plus: Mat,
    pub e_minus: Mat,
    /// Scalars by which ℰ₊ and ℰ₋ act, (-1)^{(p+1)/2} L(E±)^p.
    pub ecal_plus: Scalar,
    pub ecal_minus: Scalar,
}

impl RepFamily {
    pub fn p(&self) -> u32 {
        self.field.order()
    }

    /// L(E₊)^p and L(E₋)^p when they are scalar matrices.
    pub fn cyclic_scalars(&self) -> (Option<Scalar>, Option<Scalar>) {
        let n = self.p();
        let scal = |m: &Mat| {
            let c = m[0][0].clone();
            if *m == mat_scale(&mat_identity(self.field, n as usize), &c) {
                Some(c)
            } else {
                None
            }
        };
        (scal(&mat_pow(&self.e_plus, n)), scal(&mat_pow(&self.e_minus, n)))
    }

    /// L(u) applied to t^n: the image is a single basis vector or zero.
    pub fn apply_monomial(&self, u: &EnvMonomial, n: usize) -> Option<(usize, Scalar)> {
        let f = self.field;
        let p = self.p() as usize;
        let mut c = f.q_pow(-u.kk * n as i64);
        let mut i = n;
        for _ in 0..u.nm {
            let j = (i + 1) % p;
            c = &c * &self.e_minus[j][i];
            i = j;
        }
        for _ in 0..u.mp {
            let j = (i + p - 1) % p;
            c = &c * &self.e_plus[j][i];
            i = j;
        }
        c = &c * &self.ecal_plus.pow(u.sp);
        c = &c * &self.ecal_minus.pow(u.tm);
        if c.is_zero() {
            None
        } else {
            Some((i, c))
        }
    }

    /// The matrix of L(φ).
    pub fn matrix(&self, phi: &EnvElement) -> Mat {
        let p = self.p() as usize;
        let mut m = mat_zero(self.field, p);
        for (u, c) in phi.iter() {
            for n in 0..p {
                if let Some((i, v)) = self.apply_monomial(u, n) {
                    m[i][n] += &(c * &v);
                }
            }
        }
        m
    }

    /// Adjoint with respect to (·,·)_t, whose Gram matrix is J_{ij} = δ_{i+j,0}.
    pub fn t_adjoint(&self, a: &Mat) -> Mat {
        let p = self.p() as usize;
        let h = mat_adjoint(a);
        (0..p).map(|i| (0..p).map(|j| h[(p - i) % p][(p - j) % p].clone()).collect()).collect()
    }
}

/// Build L^λ and verify the defining relations.
pub fn cyclic_rep(f: Field, lambda_plus: Scalar, a: Scalar) -> Result<RepFamily> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("cyclic representation"))?;
    f.check(&lambda_plus)?;
    f.check(&a)?;
    let n = p as usize;
    let mut m = vec![lambda_plus.clone()];
    for i in 1..p as i64 {
        m.push(&(&a * &lambda_plus) - &(&f.qint(i - 1) * &f.qint(i)));
    }
    let mut lambda_minus = a.clone();
    for mi in &m[1..] {
        lambda_minus = &lambda_minus * mi;
    }
    let mut k = mat_zero(f, n);
    let mut ep = mat_zero(f, n);
    let mut em = mat_zero(f, n);
    for i in 0..n {
        k[i][i] = f.q_pow(-(i as i64));
        if i + 1 < n {
            em[i + 1][i] = f.one();
        }
        if i >= 1 {
            ep[i - 1][i] = m[i].clone();
        }
    }
    em[0][n - 1] = lambda_plus.clone();
    ep[n - 1][0] = a.clone();
    let sigma = f.int(f.central_sign());
    let mut rep = RepFamily {
        field: f,
        lambda_plus,
        a,
        m,
        lambda_minus,
        k,
        e_plus: ep,
        e_minus: em,
        ecal_plus: f.zero(),
        ecal_minus: f.zero(),
    };
    let (sp, sm) = rep.cyclic_scalars();
    let (Some(sp), Some(sm)) = (sp, sm) else {
        return Err(Error::RelationCheckFailed("E±^p is not scalar".into()));
    };
    rep.ecal_plus = &sigma * &sp;
    rep.ecal_minus = &sigma * &sm;
    if let Some(bad) = relation_failures(&rep).first() {
        return Err(Error::RelationCheckFailed(bad.clone()));
    }
    Ok(rep)
}

/// Names of the defining relations that fail on the matrices of `rep`.
pub fn relation_failures(rep: &RepFamily) -> Vec<String> {
    let f = rep.field;
    let n = rep.p() as usize;
    let kinv = mat_pow(&rep.k, rep.p() - 1);
    let mut bad = Vec::new();
    let lhs = mat_mul(&mat_mul(&rep.k, &rep.e_plus), &kinv);
    if lhs != mat_scale(&rep.e_plus, &f.q_pow(1)) {
        bad.push("K E+ K^-1 = q E+".to_string());
    }
    let lhs = mat_mul(&mat_mul(&rep.k, &rep.e_minus), &kinv);
    if lhs != mat_scale(&rep.e_minus, &f.q_pow(-1)) {
        bad.push("K E- K^-1 = q^-1 E-".to_string());
    }
    let comm = mat_add(
        &mat_mul(&rep.e_plus, &rep.e_minus),
        &mat_scale(&mat_mul(&rep.e_minus, &rep.e_plus), &f.int(-1)),
    );
    let h = (&f.q_pow(1) - &f.q_pow(-1)).inv().expect("p >= 3");
    let k2 = mat_pow(&rep.k, 2);
    let km2 = mat_pow(&kinv, 2);
    let rhs = mat_scale(&mat_add(&k2, &mat_scale(&km2, &f.int(-1))), &h);
    if comm != rhs {
        bad.push("[E+, E-] = (K^2 - K^-2)/(q - q^-1)".to_string());
    }
    if mat_pow(&rep.k, rep.p()) != mat_identity(f, n) {
        bad.push("K^p = 1".to_string());
    }
    bad
}

/// (L(φ))^† = L(φ*) for φ ∈ {E₊, E₋, K}.
pub fn star_rep_failures(rep: &RepFamily) -> Vec<String> {
    let f = rep.field;
    let mut bad = Vec::new();
    for (name, phi) in [("E+", envalg::e_plus(f)), ("E-", envalg::e_minus(f)), ("K", envalg::k_pow(f, 1))] {
        let l = rep.matrix(&phi);
        if rep.t_adjoint(&l) != rep.matrix(&envalg::star(&phi)) {
            bad.push(name.to_string());
        }
    }
    bad
}

// ---------------------------------------------------------------------------
// A-type representations

/// Matrices of ℛ^(l) on the basis η₋^e, e = l - m ∈ [0, 2l].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ATypeRep {
    pub l: u32,
    pub e_plus: Mat,
    pub e_minus: Mat,
    pub k: Mat,
}

fn check_l(f: Field, l: u32) -> Result<u32> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("A-type representation"))?;
    if l > (p - 1) / 2 {
        return Err(Error::DomainViolation(format!("l = {} exceeds (p-1)/2", l)));
    }
    Ok(p)
}

/// The action lines in closed form.
pub fn a_type_rep(f: Field, l: u32) -> Result<ATypeRep> {
    check_l(f, l)?;
    let d = (2 * l + 1) as usize;
    let li = l as i64;
    let mut ep = mat_zero(f, d);
    let mut em = mat_zero(f, d);
    let mut k = mat_zero(f, d);
    for e in 0..d {
        let ei = e as i64;
        k[e][e] = f.q_pow(li - ei);
        if e + 1 < d {
            ep[e + 1][e] = &(&f.i() * &f.q_half(2 * li + 1)) * &f.qint(2 * li - ei);
        }
        if e >= 1 {
            em[e - 1][e] = &(&f.i() * &f.q_half(-2 * li - 1)) * &f.qint(ei);
        }
    }
    Ok(ATypeRep { l, e_plus: ep, e_minus: em, k })
}

/// ℛ^(l)(φ) g = (φ ⊗ id)(id ⊗ δ^{-l})Δ(δ^l g), with δ^{-l} multiplying the
/// second leg from the left.
pub fn a_type_rep_convolution(f: Field, l: u32) -> Result<ATypeRep> {
    check_l(f, l)?;
    let d = (2 * l + 1) as usize;
    let li = l as i64;
    let dl = funalg::delta_pow(f, -li);
    let mut mats = [mat_zero(f, d), mat_zero(f, d), mat_zero(f, d)];
    let gens = [envalg::e_plus(f), envalg::e_minus(f), envalg::k_pow(f, 1)];
    for e in 0..d {
        let g = funalg::delta_pow(f, li).mul(&funalg::eta_minus(f).pow(e as u32));
        let t = funalg::coproduct(&g);
        for (gi, phi) in gens.iter().enumerate() {
            let r = contract_left(&t, |a| duality::pair_ext(phi, &funalg::monomial(f, a.clone())));
            let r = dl.mul(&r);
            for (mo, c) in r.iter() {
                let ok = mo.np == 0 && mo.kd == 0 && !mo.has_z() && (mo.nm as usize) < d;
                if !ok {
                    return Err(Error::RelationCheckFailed(format!(
                        "convolution leaves the η₋-polynomials of degree ≤ 2l: {:?}",
                        mo
                    )));
                }
                mats[gi][mo.nm as usize][e] += c;
            }
        }
    }
    let [e_plus, e_minus, k] = mats;
    Ok(ATypeRep { l, e_plus, e_minus, k })
}

// ---------------------------------------------------------------------------
// universal T-matrix

/// Finite part of T in U ⊗ A; the prefactor exp(-iℰ₊⊗z₊ - iℰ₋⊗z₋) is kept symbolic.
pub type UATensor = Elem<(EnvMonomial, FunMonomial)>;

fn t_coeff(f: Field, n: u32, m: u32) -> Scalar {
    let (ni, mi) = (n as i64, m as i64);
    let c = &(&f.i_pow(-ni - mi) * &f.q_half(mi - ni)) * &f.q_pow(ni * mi);
    let d = &f.qfact(n) * &f.qfact(m);
    c.try_div(&d).expect("factorials below p are invertible")
}

/// T = Σ i^{-n-m} q^{(m-n)/2+nm}/([n]![m]!) E₊^n E₋^m K^k ⊗ η₊^n η₋^m 𝒟(k+n+m).
pub fn universal_t_sum(f: Field) -> Result<UATensor> {
    let p = f.p().ok_or(Error::GenericModeUnsupported("universal T-matrix"))?;
    let mut t = Elem::zero(f);
    for n in 0..p {
        for m in 0..p {
            let c = t_coeff(f, n, m);
            for k in 0..p as i64 {
                let u = envalg::monomial(f, EnvMonomial::finite(n, m, k));
                let a = funalg::monomial(f, FunMonomial::new(n, m, 0))
                    .mul(&funalg::dproj(f, k + n as i64 + m as i64));
                t.add_scaled(&tensor(&u, &a), &c);
            }
        }
    }
    Ok(t)
}

/// e_±^x = Σ_{r=0}^{p-1} q^{±r(r-1)/2}/[r]! x^r.
pub fn cutoff_exp(x: &UATensor, plus: bool) -> UATensor {
    let f = x.field();
    let p = f.order();
    let sgn: i64 = if plus { 1 } else { -1 };
    let mut out = Elem::zero(f);
    let mut pw = Elem::one(f);
    for r in 0..p {
        let ri = r as i64;
        let c = f.q_pow(sgn * ri * (ri - 1) / 2).try_div(&f.qfact(r)).expect("r < p");
        out.add_scaled(&pw, &c);
        pw = pw.mul(x);
    }
    out
}

/// D(K, δ) = (1/p) Σ_{k,l} q^{-kl} K^k ⊗ δ^l.
pub fn d_k_delta(f: Field) -> UATensor {
    let p = f.order() as i64;
    let mut t = Elem::zero(f);
    let inv = f.frac(1, p);
    for k in 0..p {
        for l in 0..p {
            let u = envalg::k_pow(f, k);
            let a = funalg::delta_pow(f, l);
            t.add_scaled(&tensor(&u, &a), &(&f.q_pow(-k * l) * &inv));
        }
    }
    t
}

/// T = e_+^{iε₊⊗η₊} e_-^{iε₋⊗η₋} D(K, δ).
pub fn universal_t_factorized(f: Field) -> Result<UATensor> {
    f.p().ok_or(Error::GenericModeUnsupported("universal T-matrix"))?;
    let xp = tensor(&envalg::eps(f, true), &funalg::eta_plus(f)).scale(&f.i());
    let xm = tensor(&envalg::eps(f, false), &funalg::eta_minus(f)).scale(&f.i());
    Ok(cutoff_exp(&xp, true).mul(&cutoff_exp(&xm, false)).mul(&d_k_delta(f)))
}

/// The universal T-matrix, after checking that the two forms agree.
pub fn universal_t(f: Field) -> Result<UATensor> {
    let s = universal_t_sum(f)?;
    let g = universal_t_factorized(f)?;
    if s != g {
        return Err(Error::FormMismatch(format!(
            "{} terms differ",
            s.sub(&g).len()
        )));
    }
    Ok(s)
}

/// (id ⊗ ε)T.
pub fn t_counit_a(t: &UATensor) -> EnvElement {
    let f = t.field();
    contract_right(t, |a| funalg::counit(&funalg::monomial(f, a.clone())))
}

/// (ε ⊗ id)T.
pub fn t_counit_u(t: &UATensor) -> FunElement {
    let f = t.field();
    contract_left(t, |u| envalg::counit(&envalg::monomial(f, u.clone())))
}

/// Σ ⟨V_a, x⟩ v^a: reproduces x when T is the canonical element of the bracket.
pub fn t_reproduce(t: &UATensor, x: &FunElement) -> Result<FunElement> {
    let f = t.field();
    let mut out = Elem::zero(f);
    for ((u, a), c) in t.iter() {
        let v = duality::pair(&envalg::monomial(f, u.clone()), x)?;
        if !v.is_zero() {
            out.add_term(a.clone(), &v * c);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// corepresentation and matrix elements

/// T^(λ) t^n as the list of A-coefficients of t^0..t^{p-1}, with the
/// prefactor exp(-iλ₊z₊ - iλ₋z₋) carried as a frequency token on every term.
pub fn corep_apply(rep: &RepFamily, t: &UATensor, n: usize) -> Vec<FunElement> {
    let f = rep.field;
    let p = rep.p() as usize;
    let mut comps = vec![Elem::zero(f); p];
    for ((u, a), c) in t.iter() {
        if let Some((i, v)) = rep.apply_monomial(u, n) {
            comps[i].add_term(a.clone(), &v * c);
        }
    }
    let e = funalg::exp_token(f, -&rep.lambda_plus, -&rep.lambda_minus);
    comps.iter().map(|x| x.mul(&e)).collect()
}

/// D_{mn} = {t^{p-m} ⊗ 1_A, T^(λ) t^n}_t.
pub fn d_matrix(rep: &RepFamily, t: &UATensor, m: usize, n: usize) -> Result<FunElement> {
    let f = rep.field;
    let p = rep.p() as i64;
    let comps = corep_apply(rep, t, n);
    let left = integral::t_pow(f, p - m as i64);
    let mut out = Elem::zero(f);
    for (j, c) in comps.iter().enumerate() {
        let w = integral::form_t(&left, &integral::t_pow(f, j as i64))?;
        out.add_scaled(c, &w);
    }
    Ok(out)
}

/// All p² matrix elements, indexed [m][n].
pub fn d_all(rep: &RepFamily, t: &UATensor) -> Result<Vec<Vec<FunElement>>> {
    let p = rep.p() as usize;
    (0..p).map(|m| (0..p).map(|n| d_matrix(rep, t, m, n)).collect()).collect()
}

/// The closed form of D_00 (prefactor exp(-iλ₊z₊ - iλ₋z₋)).
pub fn d00_closed_form(rep: &RepFamily) -> FunElement {
    let f = rep.field;
    let p = rep.p();
    let rho = funalg::rho(f);
    let mut s = Elem::one(f);
    let mut prod = f.one();
    for m in 1..p {
        prod = &prod * &rep.m[m as usize];
        let fact = &f.qfact(m) * &f.qfact(m);
        let c = (&f.int(if m % 2 == 0 { 1 } else { -1 }) * &prod).try_div(&fact).expect("m < p");
        s.add_scaled(&rho.pow(m), &c);
    }
    s.mul(&funalg::exp_token(f, -&rep.lambda_plus, -&rep.lambda_minus))
}

/// The closed form of D_{i0}, i ≥ 1.
pub fn di0_closed_form(rep: &RepFamily, i: u32) -> FunElement {
    let f = rep.field;
    let p = rep.p();
    let (ii, pi) = (i as i64, p as i64);
    let rho = funalg::rho(f);
    let mut s = Elem::zero(f);
    let prod = |lo: u32, hi: u32| {
        let mut x = f.one();
        for j in lo..=hi {
            x = &x * &rep.m[j as usize];
        }
        x
    };
    for m in 0..(p - i) {
        let mi = m as i64;
        let sign = f.int(if m % 2 == 0 { 1 } else { -1 });
        let c = &(&sign * &f.i_pow(-ii)) * &f.q_half(ii * (2 * mi - 1));
        let c = (&c * &prod(1, m + i)).try_div(&(&f.qfact(m) * &f.qfact(m + i))).expect("< p");
        s.add_scaled(&rho.pow(m).mul(&funalg::eta_minus(f).pow(i)), &c);
    }
    for m in 0..i {
        let mi = m as i64;
        let sign = f.int(if m % 2 == 0 { 1 } else { -1 });
        let c = &(&sign * &f.i_pow(ii - pi)) * &f.q_half(ii * (pi - 1) - 2 * ii * mi);
        let c = (&c * &prod(0, m)).try_div(&(&f.qfact(m) * &f.qfact(p + m - i))).expect("< p");
        s.add_scaled(&funalg::eta_plus(f).pow(p - i).mul(&rho.pow(m)), &c);
    }
    s.mul(&funalg::exp_token(f, -&rep.lambda_plus, -&rep.lambda_minus))
}

/// Strip exponential tokens, keeping the finite part of each term.
pub fn finite_part(x: &FunElement) -> FunElement {
    let f = x.field();
    let mut out = Elem::zero(f);
    for (m, c) in x.iter() {
        let mut fm = m.clone();
        fm.freq = None;
        out.add_term(fm, c.clone());
    }
    out
}

/// Pseudo-unitarity components, the counit collapse and the addition theorem.
pub fn pseudo_unitarity_check(rep: &RepFamily, t: &UATensor) -> Result<Report> {
    let f = rep.field;
    let p = rep.p() as usize;
    let d = d_all(rep, t)?;
    let mut out = Report::new("unitarity", 0);
    let ds: Vec<Vec<FunElement>> = d.iter().map(|r| r.iter().map(funalg::star).collect()).collect();
    for m in 0..p {
        for n in 0..p {
            let mut lhs = Elem::zero(f);
            for k in 0..p {
                lhs = lhs.add(&ds[k][m].mul(&d[(p - k) % p][n]));
            }
            let rhs = Elem::one(f).scale(&integral::form_t(
                &integral::t_pow(f, m as i64),
                &integral::t_pow(f, n as i64),
            )?);
            out.check("pseudo-unitarity", || format!("m={}, n={}", m, n), &lhs, &rhs);
            let e = funalg::counit(&d[m][n]);
            let want = if m == n { f.one() } else { f.zero() };
            out.check("counit-D", || format!("m={}, n={}", m, n), &e, &want);
        }
    }
    for n in 0..p {
        for m in 0..p {
            let lhs = funalg::coproduct(&d[n][m]);
            let mut rhs = Elem::zero(f);
            for k in 0..p {
                rhs = rhs.add(&tensor(&d[n][k], &d[k][m]));
            }
            out.check("addition-theorem", || format!("n={}, m={}", n, m), &lhs, &rhs);
        }
    }
    Ok(out)
}

/// The ladder relations of the right regular action on D_{i0}.
pub fn ladder_check(rep: &RepFamily, t: &UATensor) -> Result<Report> {
    let f = rep.field;
    let p = rep.p() as usize;
    let d = d_all(rep, t)?;
    let sigma = f.int(f.central_sign());
    let mut out = Report::new("ladder", 0);
    let c = envalg::casimir(f);
    let act = |phi: &EnvElement, x: &FunElement| regular_action(phi, x, Side::Right);
    for i in 0..p {
        let di = &d[i][0];
        let al = &rep.a * &rep.lambda_plus;
        out.check("ladder-casimir", || format!("i={}", i), &act(&c, di), &di.scale(&al));
        out.check(
            "ladder-ecal+",
            || format!("i={}", i),
            &act(&envalg::ecal_plus(f), di),
            &di.scale(&(&sigma * &rep.lambda_plus)),
        );
        out.check(
            "ladder-ecal-",
            || format!("i={}", i),
            &act(&envalg::ecal_minus(f), di),
            &di.scale(&(&sigma * &rep.lambda_minus)),
        );
        let up = if i + 1 < p { d[i + 1][0].clone() } else { d[0][0].scale(&rep.lambda_plus) };
        out.check("ladder-E+", || format!("i={}", i), &act(&envalg::e_plus(f), di), &up);
        let down = if i >= 1 { d[i - 1][0].scale(&rep.m[i]) } else { d[0][p - 1].scale(&rep.a) };
        out.check("ladder-E-", || format!("i={}", i), &act(&envalg::e_minus(f), di), &down);
        let kd = act(&envalg::k_pow(f, 1), di);
        let w = (0..p as i64).find(|w| kd == di.scale(&f.q_pow(*w)));
        out.note(match w {
            Some(w) => format!("K-weight of D_{}0: q^{}", i, w),
            None => format!("D_{}0 is not a K-eigenvector", i),
        });
    }
    Ok(out)
}

/// (D_{n0}, D'_{m0})_w for two cyclic representations.
pub fn orthogonality_d(
    rep: &RepFamily,
    rep2: &RepFamily,
    t: &UATensor,
    n: usize,
    m: usize,
) -> Result<integral::DistValue> {
    integral::form_w(&d_matrix(rep, t, n, 0)?, &d_matrix(rep2, t, m, 0)?)
}

/// Selection rule over all (n, m) for each pair of samples; N_n are noted as
/// the Δ^(0,0) coefficients of (D_{n0}, D_{(p-n)0})_w.
pub fn orthogonality_check(reps: &[RepFamily], t: &UATensor) -> Result<Report> {
    let mut out = Report::new("orthogonality", 0);
    for (x, r1) in reps.iter().enumerate() {
        let p = r1.p() as usize;
        for (y, r2) in reps.iter().enumerate() {
            let same = r1.lambda_plus == r2.lambda_plus && r1.lambda_minus == r2.lambda_minus;
            for n in 0..p {
                for m in 0..p {
                    let v = orthogonality_d(r1, r2, t, n, m)?;
                    if !same {
                        out.record("orthogonality-distinct", v.is_zero(), || {
                            (format!("samples {}, {}; n={}, m={}", x, y, n, m), format!("{:?}", v), "0".into())
                        });
                    } else if (n + m) % p != 0 {
                        out.record("orthogonality-selection", v.is_zero(), || {
                            (format!("sample {}; n={}, m={}", x, n, m), format!("{:?}", v), "0".into())
                        });
                    } else if x == y {
                        out.note(format!(
                            "sample {} (lambda+={:?}, a={:?}): N_{} = {:?}",
                            x,
                            r1.lambda_plus,
                            r1.a,
                            n,
                            v.pure_token00()
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}
