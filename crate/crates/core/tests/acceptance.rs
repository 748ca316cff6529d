//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Printed identities (table lines, closed forms, signature counts) are
//! encoded here directly rather than taken from the library.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qroot_core::duality::{self, regular_action, Side};
use qroot_core::envalg::{self, EnvElement};
use qroot_core::funalg::{self, FunElement, FunMonomial};
use qroot_core::integral::{self, Form};
use qroot_core::reps::{self, RepFamily};
use qroot_core::{hopf, Elem, Field, Scalar};

const SIGNATURE_TOL: f64 = 1e-9;
const SEED: u64 = 20_240_601;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn mono(f: Field, np: u32, nm: u32, kd: i64, c: Scalar) -> FunElement {
    if c.is_zero() {
        return Elem::zero(f);
    }
    Elem::mono(f, FunMonomial::new(np, nm, kd), c)
}

fn param_samples(f: Field, n: usize) -> Vec<(Scalar, Scalar)> {
    let pool = [(2, 1, 1, 1), (3, 1, 1, 1), (1, 2, 2, 1), (5, 3, 3, 1), (-2, 1, 1, 1), (1, 2, 1, 3), (7, 2, -1, 1)];
    let mut v = Vec::new();
    let mut k = 0i64;
    while v.len() < n {
        let (ln, ld, an, ad) = pool[k as usize % pool.len()];
        let shift = k / pool.len() as i64;
        v.push((f.frac(ln + shift, ld), f.frac(an + 2 * shift, ad)));
        k += 1;
    }
    v
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (p, limit) in [(3u32, 60u64), (5, 600), (7, 600)] {
        let t0 = Instant::now();
        let r = hopf::hopf_check(Field::Root(p), 100, SEED).unwrap();
        let dt = t0.elapsed();
        let fine = r.passed() && dt < Duration::from_secs(limit);
        ok &= fine;
        parts.push(format!("p={} {}/{} in {:.0}s", p, r.checked - r.failed_count, r.checked, dt.as_secs_f64()));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_2() -> Outcome {
    let r3 = duality::axiom_check(Field::Root(3), 2, 0, SEED, true).unwrap();
    let r5 = duality::axiom_check(Field::Root(5), 2, 1000, SEED, false).unwrap();
    let fails = |r: &qroot_core::report::Report| {
        r.by_check
            .iter()
            .filter(|(_, t)| t.failed > 0)
            .map(|(k, t)| format!("{} {}/{}", k, t.failed, t.checked))
            .collect::<Vec<_>>()
            .join(" ")
    };
    outcome(
        r3.passed() && r5.passed(),
        format!(
            "p=3 exhaustive {} checks, failing [{}]; p=5 random {} checks, failing [{}]",
            r3.checked,
            fails(&r3),
            r5.checked,
            fails(&r5)
        ),
    )
}

/// The sixteen right/left table cells at exponent n.
fn reference_table(f: Field, n: u32) -> Vec<(&'static str, Side, EnvElement, FunElement, FunElement)> {
    let n = n as i64;
    let i = f.i();
    let qh = |e: i64| f.q_half(e);
    let br = |k: i64| f.qint(k);
    let nz = if n == 0 { f.zero() } else { f.one() };
    let ep = |k: i64| if k < 0 { Elem::zero(f) } else { funalg::eta_plus(f).pow(k as u32) };
    let em = |k: i64| if k < 0 { Elem::zero(f) } else { funalg::eta_minus(f).pow(k as u32) };
    let d = |k: i64| funalg::delta_pow(f, k);
    let (e1, e2, k1) = (envalg::e_plus(f), envalg::e_minus(f), envalg::k_pow(f, 1));
    let (r, l) = (Side::Right, Side::Left);
    let zero = Elem::zero(f);
    vec![
        (
            "R E+ eta+^n",
            r,
            e1.clone(),
            ep(n),
            ep(n - 1).scale(&(&(&i * &qh(1)) * &br(n))).add(&em(1).mul(&ep(n)).scale(&(&(&i * &qh(1 - 2 * n)) * &br(2 * n)))),
        ),
        ("R E+ eta-^n", r, e1.clone(), em(n), em(n + 1).scale(&-(&(&i * &qh(1)) * &br(n)))),
        ("R E- eta-^n", r, e2.clone(), em(n), em(n - 1).scale(&(&(&i * &qh(-1)) * &br(n)))),
        (
            "R K eta+-^n",
            r,
            k1.clone(),
            ep(n).add(&em(n)),
            ep(n).scale(&f.q_pow(n)).add(&em(n).scale(&f.q_pow(-n))),
        ),
        ("R E- eta+^n", r, e2.clone(), ep(n), zero.clone()),
        ("R E- delta^n", r, e2.clone(), d(n), zero.clone()),
        (
            "R E+ delta^n",
            r,
            e1.clone(),
            d(n),
            mono(f, 0, 1, n, &(&(&i * &(&qh(-3 - 2 * n) + &qh(-6 * n - 7))) * &br(n + 1)) * &nz),
        ),
        ("R K delta^n", r, k1.clone(), d(n), d(n).scale(&f.q_pow(n))),
        ("L E+ eta+^n", l, e1.clone(), ep(n), d(1).mul(&ep(n - 1)).scale(&(&(&i * &qh(2 * n - 3)) * &br(n)))),
        ("L E- eta+^n", l, e2.clone(), ep(n), d(-1).mul(&ep(n + 1)).scale(&(&i * &qh(-2 * n - 1)))),
        ("L E- eta-^n", l, e2.clone(), em(n), d(-1).mul(&em(n - 1)).scale(&(&(&i * &qh(3 - 2 * n)) * &br(n)))),
        ("L K eta+-^n", l, k1.clone(), ep(n).add(&em(n)), ep(n).add(&em(n))),
        ("L E+ eta-^n", l, e1.clone(), em(n), zero.clone()),
        ("L E+ delta^n", l, e1, d(n), zero),
        (
            "L E- delta^n",
            l,
            e2,
            d(n),
            funalg::eta_plus(f).mul(&d(n - 1)).scale(&-(&(&(&i * &qh(3 - 2 * n)) * &br(2 * n)) * &nz)),
        ),
        ("L K delta^n", l, k1, d(n), d(n).scale(&f.q_pow(n))),
    ]
}

fn criterion_3() -> Outcome {
    let mut bad = std::collections::BTreeSet::new();
    let mut total = 0;
    let mut lines = 0;
    for p in [3u32, 5, 7] {
        let f = Field::Root(p);
        for n in 0..p {
            let table = reference_table(f, n);
            lines = table.len();
            for (name, side, phi, input, want) in table {
                total += 1;
                if regular_action(&phi, &input, side) != want {
                    bad.insert(name);
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} of {} lines hold for all n, p in {{3,5,7}} ({} cases); failing: {:?}",
            lines - bad.len(),
            lines,
            total,
            bad
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut rel = 0;
    let mut cyc = 0;
    let mut star = 0;
    let mut n = 0;
    for p in [3u32, 5, 7] {
        let f = Field::Root(p);
        for (lp, a) in param_samples(f, 20) {
            n += 1;
            let r = reps::cyclic_rep(f, lp.clone(), a.clone()).unwrap();
            if reps::relation_failures(&r).is_empty() {
                rel += 1;
            }
            let mut lm = a.clone();
            for i in 1..p as i64 {
                lm = &lm * &(&(&a * &lp) - &(&f.qint(i - 1) * &f.qint(i)));
            }
            if r.cyclic_scalars() == (Some(lm), Some(lp)) {
                cyc += 1;
            }
            if reps::star_rep_failures(&r).is_empty() {
                star += 1;
            }
        }
    }
    outcome(
        rel == n && cyc == n && star == n,
        format!("relations {}/{}, cyclicity scalars {}/{}, star-representation {}/{}", rel, n, cyc, n, star, n),
    )
}

fn m_consts(f: Field, lp: &Scalar, a: &Scalar) -> Vec<Scalar> {
    let p = f.order() as i64;
    let mut m = vec![lp.clone()];
    for i in 1..p {
        m.push(&(a * lp) - &(&f.qint(i - 1) * &f.qint(i)));
    }
    m
}

fn reference_d00(f: Field, lp: &Scalar, a: &Scalar) -> FunElement {
    let p = f.order();
    let m = m_consts(f, lp, a);
    let lm = m[1..].iter().fold(a.clone(), |x, y| &x * y);
    let mut s = Elem::zero(f);
    let mut prod = f.one();
    for k in 0..p {
        if k > 0 {
            prod = &prod * &m[k as usize];
        }
        let sign = if k % 2 == 0 { f.one() } else { f.int(-1) };
        let c = (&sign * &prod).try_div(&(&f.qfact(k) * &f.qfact(k))).unwrap();
        // ρ^k = q^{k²}η₊^kη₋^k
        s = s.add(&mono(f, k, k, 0, &c * &f.q_pow((k * k) as i64)));
    }
    s.mul(&funalg::exp_token(f, -lp, -&lm))
}

fn reference_di0(f: Field, lp: &Scalar, a: &Scalar, i: u32) -> FunElement {
    let p = f.order();
    let m = m_consts(f, lp, a);
    let lm = m[1..].iter().fold(a.clone(), |x, y| &x * y);
    let prod = |lo: u32, hi: u32| (lo..=hi).fold(f.one(), |x, j| &x * &m[j as usize]);
    let rho = mono(f, 1, 1, 0, f.q_pow(1));
    let (ii, pi) = (i as i64, p as i64);
    let mut s = Elem::zero(f);
    for k in 0..(p - i) {
        let ki = k as i64;
        let sign = if k % 2 == 0 { f.one() } else { f.int(-1) };
        let c = &(&(&sign * &f.i_pow(-ii)) * &f.q_half(ii * (2 * ki - 1))) * &prod(1, k + i);
        let c = c.try_div(&(&f.qfact(k) * &f.qfact(k + i))).unwrap();
        s = s.add(&rho.pow(k).mul(&funalg::eta_minus(f).pow(i)).scale(&c));
    }
    for k in 0..i {
        let ki = k as i64;
        let sign = if k % 2 == 0 { f.one() } else { f.int(-1) };
        let c = &(&(&sign * &f.i_pow(ii - pi)) * &f.q_half(ii * (pi - 1) - 2 * ii * ki)) * &prod(0, k);
        let c = c.try_div(&(&f.qfact(k) * &f.qfact(p + k - i))).unwrap();
        s = s.add(&funalg::eta_plus(f).pow(p - i).mul(&rho.pow(k)).scale(&c));
    }
    s.mul(&funalg::exp_token(f, -lp, -&lm))
}

fn criterion_5() -> Outcome {
    let mut counit_ok = true;
    for p in [3u32, 5, 7] {
        let f = Field::Root(p);
        let t = reps::universal_t_sum(f).unwrap();
        counit_ok &= reps::t_counit_a(&t) == Elem::one(f) && reps::t_counit_u(&t) == Elem::one(f);
    }
    let mut d00 = (0, 0);
    let mut di0 = (0, 0);
    let mut bad_i = std::collections::BTreeSet::new();
    for p in [3u32, 5] {
        let f = Field::Root(p);
        let t = reps::universal_t_sum(f).unwrap();
        for (lp, a) in param_samples(f, 3) {
            let r = reps::cyclic_rep(f, lp.clone(), a.clone()).unwrap();
            d00.1 += 1;
            if reps::d_matrix(&r, &t, 0, 0).unwrap() == reference_d00(f, &lp, &a) {
                d00.0 += 1;
            }
            for i in 1..p {
                di0.1 += 1;
                if reps::d_matrix(&r, &t, i as usize, 0).unwrap() == reference_di0(f, &lp, &a, i) {
                    di0.0 += 1;
                } else {
                    bad_i.insert((p, i));
                }
            }
        }
    }
    outcome(
        counit_ok && d00.0 == d00.1 && di0.0 == di0.1,
        format!(
            "counit collapses {}, D00 {}/{}, Di0 {}/{} (failing (p,i): {:?})",
            if counit_ok { "exact" } else { "fail" },
            d00.0,
            d00.1,
            di0.0,
            di0.1,
            bad_i
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, n) in [(3u32, 5usize), (5, 2)] {
        let f = Field::Root(p);
        let t = reps::universal_t_sum(f).unwrap();
        let mut tally = std::collections::BTreeMap::<String, (usize, usize)>::new();
        for (lp, a) in param_samples(f, n) {
            let r = reps::cyclic_rep(f, lp, a).unwrap();
            let rep = reps::pseudo_unitarity_check(&r, &t).unwrap();
            ok &= rep.passed();
            for (k, v) in rep.by_check {
                let e = tally.entry(k).or_default();
                e.0 += v.checked - v.failed;
                e.1 += v.checked;
            }
        }
        let s: Vec<String> = tally.iter().map(|(k, (a, b))| format!("{} {}/{}", k, a, b)).collect();
        parts.push(format!("p={} [{}]", p, s.join(", ")));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [3u32, 5, 7] {
        let r = integral::invariance_check(Field::Root(p)).unwrap();
        ok &= r.passed();
        parts.push(format!("I_p p={} {}/{}", p, r.checked - r.failed_count, r.checked));
    }
    let f = Field::Root(3);
    let t = reps::universal_t_sum(f).unwrap();
    let r = reps::cyclic_rep(f, f.int(2), f.int(1)).unwrap();
    let lad = reps::ladder_check(&r, &t).unwrap();
    ok &= lad.passed();
    let s: Vec<String> =
        lad.by_check.iter().map(|(k, v)| format!("{} {}/{}", k, v.checked - v.failed, v.checked)).collect();
    parts.push(format!("ladder p=3 [{}]", s.join(", ")));
    outcome(ok, parts.join(", "))
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for p in [3u32, 5, 7] {
        let f = Field::Root(p);
        let pp = (p * p) as usize;
        let c = integral::gram_signature(&integral::coset_gram_basis(f).unwrap(), Form::P).unwrap();
        let t = integral::gram_signature(&integral::torus_basis(f), Form::T).unwrap();
        let want_c = ((pp + 1) / 2, (pp - 1) / 2, 0);
        let want_t = ((p as usize + 1) / 2, (p as usize - 1) / 2, 0);
        let good = (c.pos, c.neg, c.zero) == want_c && c.unanimous && (t.pos, t.neg, t.zero) == want_t && t.unanimous;
        ok &= good;
        parts.push(format!("p={} coset ({},{}) t-form ({},{})", p, c.pos, c.neg, t.pos, t.neg));
    }
    assert_eq!(integral::SIGNATURE_TOL, SIGNATURE_TOL);
    outcome(ok, format!("{}; tol {:e}, unanimous over primitive roots", parts.join(", "), SIGNATURE_TOL))
}

fn criterion_9() -> Outcome {
    let f = Field::Root(3);
    let t = reps::universal_t_sum(f).unwrap();
    let samples: Vec<RepFamily> =
        param_samples(f, 5).into_iter().map(|(l, a)| reps::cyclic_rep(f, l, a).unwrap()).collect();
    let r = reps::orthogonality_check(&samples, &t).unwrap();
    let mut norms = Vec::new();
    let mut extracted = true;
    for (x, rep) in samples.iter().enumerate() {
        let mut ns = Vec::new();
        for n in 0..3usize {
            let v = reps::orthogonality_d(rep, rep, &t, n, (3 - n) % 3).unwrap();
            match v.pure_token00() {
                Some(c) => ns.push(format!("{:?}", c)),
                None => {
                    extracted = false;
                    ns.push("?".into());
                }
            }
        }
        norms.push(format!("s{}:[{}]", x, ns.join(",")));
    }
    let s: Vec<String> = r.by_check.iter().map(|(k, v)| format!("{} {}/{}", k, v.checked - v.failed, v.checked)).collect();
    outcome(r.passed() && extracted, format!("{}; N_n {}", s.join(", "), norms.join(" ")))
}

fn criterion_10() -> Outcome {
    let r = integral::quasi_regular_check(Field::Root(3), 50, SEED).unwrap();
    outcome(r.passed(), format!("{}/{} random pairs", r.checked - r.failed_count, r.checked))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Hopf axiom suites", criterion_1),
        ("duality compatibility", criterion_2),
        ("regular-action table", criterion_3),
        ("cyclic representation", criterion_4),
        ("T-matrix and closed forms", criterion_5),
        ("pseudo-unitarity and addition theorem", criterion_6),
        ("invariant integral and ladder", criterion_7),
        ("signatures", criterion_8),
        ("orthogonality", criterion_9),
        ("quasi-regular pseudo-unitarity", criterion_10),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let o = run();
        all &= o.ok;
        println!(
            "criterion {:>2} {:<40} {} ({:.1}s): {}",
            k + 1,
            name,
            if o.ok { "PASS" } else { "FAIL" },
            t0.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
