//! Verification suites: bundles of library checks with fixed parameters.

use qroot_core::duality;
use qroot_core::hopf;
use qroot_core::integral::{self, Form};
use qroot_core::report::Report;
use qroot_core::reps::{self, RepFamily};
use qroot_core::{Field, Result, Scalar};

use crate::app::Suite;

/// Knobs shared by the suites; `None` picks the per-suite default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Params {
    pub seed: u64,
    pub samples: Option<usize>,
    pub max_deg: Option<u32>,
}

const POOL: [(i64, i64, i64, i64); 7] = [(2, 1, 1, 1), (3, 1, 1, 1), (1, 2, 2, 1), (5, 3, 3, 1), (-2, 1, 1, 1), (1, 2, 1, 3), (7, 2, -1, 1)];

/// Deterministic rational (λ₊, a) samples; the seed rotates and shifts the pool.
pub fn param_samples(f: Field, n: usize, seed: u64) -> Vec<(Scalar, Scalar)> {
    let start = (seed % POOL.len() as u64) as usize;
    let base = (seed / POOL.len() as u64 % 97) as i64;
    (0..n)
        .map(|k| {
            let (ln, ld, an, ad) = POOL[(start + k) % POOL.len()];
            let shift = base + (k / POOL.len()) as i64;
            (f.frac(ln + shift, ld), f.frac(an + 2 * shift, ad))
        })
        .collect()
}

pub fn sample_reps(f: Field, n: usize, seed: u64) -> Result<Vec<RepFamily>> {
    param_samples(f, n, seed).into_iter().map(|(l, a)| reps::cyclic_rep(f, l, a)).collect()
}

fn hopf_suite(f: Field, q: Params) -> Result<Report> {
    hopf::hopf_check(f, q.samples.unwrap_or(100), q.seed)
}

fn duality_suite(f: Field, q: Params) -> Result<Report> {
    let exhaustive = f.p() == Some(3);
    let samples = q.samples.unwrap_or(if exhaustive { 0 } else { 1000 });
    duality::axiom_check(f, q.max_deg.unwrap_or(2), samples, q.seed, exhaustive)
}

fn regular_suite(f: Field) -> Result<Report> {
    let mut r = duality::table_check(f)?;
    r.suite = "regular".into();
    Ok(r)
}

fn invariance_suite(f: Field, q: Params) -> Result<Report> {
    let mut r = integral::invariance_check(f)?;
    r.seed = q.seed;
    r.merge(integral::quasi_regular_check(f, q.samples.unwrap_or(50), q.seed)?);
    Ok(r)
}

fn unitarity_suite(f: Field, q: Params) -> Result<Report> {
    let n = q.samples.unwrap_or(if f.p() == Some(3) { 5 } else { 2 });
    let t = reps::universal_t_sum(f)?;
    let mut r = Report::new("unitarity", q.seed);
    for rep in sample_reps(f, n, q.seed)? {
        r.merge(reps::pseudo_unitarity_check(&rep, &t)?);
    }
    Ok(r)
}

fn ladder_suite(f: Field, q: Params) -> Result<Report> {
    let t = reps::universal_t_sum(f)?;
    let mut r = Report::new("ladder", q.seed);
    for rep in sample_reps(f, q.samples.unwrap_or(1), q.seed)? {
        r.merge(reps::ladder_check(&rep, &t)?);
    }
    Ok(r)
}

/// Signature counts against ((p²+1)/2, (p²-1)/2) for the coset form and
/// ((p+1)/2, (p-1)/2) for the t-form, unanimous over the primitive roots.
pub fn signature_suite(f: Field) -> Result<Report> {
    let p = f.order() as usize;
    let mut r = Report::new("signature", 0);
    let c = integral::gram_signature(&integral::coset_gram_basis(f)?, Form::P)?;
    let t = integral::gram_signature(&integral::torus_basis(f), Form::T)?;
    let want_c = ((p * p + 1) / 2, (p * p - 1) / 2, 0);
    let want_t = ((p + 1) / 2, (p - 1) / 2, 0);
    r.check("signature-coset", || format!("p={}", p), &(c.pos, c.neg, c.zero), &want_c);
    r.check("signature-coset-unanimous", || format!("p={}", p), &c.unanimous, &true);
    r.check("signature-torus", || format!("p={}", p), &(t.pos, t.neg, t.zero), &want_t);
    r.check("signature-torus-unanimous", || format!("p={}", p), &t.unanimous, &true);
    r.note(format!("eigenvalue tolerance {:e}", integral::SIGNATURE_TOL));
    Ok(r)
}

pub fn orthogonality_suite(f: Field, q: Params) -> Result<Report> {
    let t = reps::universal_t_sum(f)?;
    let samples = sample_reps(f, q.samples.unwrap_or(5), q.seed)?;
    let mut r = reps::orthogonality_check(&samples, &t)?;
    r.seed = q.seed;
    Ok(r)
}

pub fn run(suite: Suite, f: Field, q: Params) -> Result<Report> {
    f.p().ok_or(qroot_core::Error::GenericModeUnsupported("verification suites"))?;
    match suite {
        Suite::Hopf => hopf_suite(f, q),
        Suite::Duality => duality_suite(f, q),
        Suite::Regular => regular_suite(f),
        Suite::Invariance => invariance_suite(f, q),
        Suite::Unitarity => unitarity_suite(f, q),
        Suite::Ladder => ladder_suite(f, q),
        Suite::Signature => signature_suite(f),
        Suite::Orthogonality => orthogonality_suite(f, q),
        Suite::All => {
            let mut all = Report::new("all", q.seed);
            let parts = [
                Suite::Hopf,
                Suite::Duality,
                Suite::Regular,
                Suite::Invariance,
                Suite::Unitarity,
                Suite::Ladder,
                Suite::Signature,
                Suite::Orthogonality,
            ];
            for s in parts {
                let r = run(s, f, q)?;
                let name = r.suite.clone();
                all.note(format!("{}: {} checked, {} failed", name, r.checked, r.failed_count));
                all.merge(r);
            }
            Ok(all)
        }
    }
}
