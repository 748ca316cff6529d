//! Hopf axiom suites for both algebras.

use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::duality::coproduct_cached;
use crate::elem::{assoc_left, contract_left, contract_right, map_legs, multiply, Elem, Monomial};
use crate::envalg::{self, EnvElement};
use crate::error::{Error, Result};
use crate::funalg::{self, FunElement};
use crate::report::Report;
use crate::scalars::{Field, Scalar};

type Op<A, B> = Box<dyn Fn(&A) -> B + Send + Sync>;

struct Ops<M: Monomial> {
    delta_mono: Op<M, Elem<(M, M)>>,
    counit: Op<Elem<M>, Scalar>,
    antipode: Op<Elem<M>, Elem<M>>,
    star: Op<Elem<M>, Elem<M>>,
}

impl<M: Monomial> Ops<M> {
    fn delta(&self, a: &Elem<M>) -> Elem<(M, M)> {
        let mut t = Elem::zero(a.field());
        for (m, c) in a.iter() {
            t.add_scaled(&(self.delta_mono)(m), c);
        }
        t
    }
}

fn check_element<M: Monomial>(rep: &mut Report, tag: &str, ops: &Ops<M>, a: &Elem<M>, b: &Elem<M>) {
    let f = a.field();
    let mono = |m: &M| Elem::mono(f, m.clone(), f.one());
    let d = ops.delta(a);
    let show = || format!("{:?}", a);

    let left = map_legs(&d, |x| (ops.delta_mono)(x), mono);
    let right = assoc_left(&map_legs(&d, mono, |x| (ops.delta_mono)(x)));
    rep.check(&format!("coassociativity-{}", tag), show, &left, &right);

    let eps = |x: &M| (ops.counit)(&mono(x));
    rep.check(&format!("counit-left-{}", tag), show, &contract_left(&d, eps), a);
    rep.check(&format!("counit-right-{}", tag), show, &contract_right(&d, eps), a);

    let unit = Elem::one(f).scale(&(ops.counit)(a));
    let s_left = multiply(&map_legs(&d, |x| (ops.antipode)(&mono(x)), mono));
    let s_right = multiply(&map_legs(&d, mono, |x| (ops.antipode)(&mono(x))));
    rep.check(&format!("antipode-left-{}", tag), show, &s_left, &unit);
    rep.check(&format!("antipode-right-{}", tag), show, &s_right, &unit);

    let ab = a.mul(b);
    let show2 = || format!("a={:?}, b={:?}", a, b);
    rep.check(&format!("homomorphism-{}", tag), show2, &ops.delta(&ab), &ops.delta(a).mul(&ops.delta(b)));
    rep.check(
        &format!("counit-multiplicative-{}", tag),
        show2,
        &(ops.counit)(&ab),
        &(&(ops.counit)(a) * &(ops.counit)(b)),
    );
    rep.check(
        &format!("antipode-antihomomorphism-{}", tag),
        show2,
        &(ops.antipode)(&ab),
        &(ops.antipode)(b).mul(&(ops.antipode)(a)),
    );

    let sa = (ops.star)(a);
    let star_legs = map_legs(&d.map_coeffs(|c| c.star()), |x| (ops.star)(&mono(x)), |x| (ops.star)(&mono(x)));
    rep.check(&format!("star-coproduct-{}", tag), show, &ops.delta(&sa), &star_legs);
    rep.check(&format!("star-involution-{}", tag), show, &(ops.star)(&sa), a);
    rep.check(&format!("star-counit-{}", tag), show, &(ops.counit)(&sa), &(ops.counit)(a).star());
    rep.check(
        &format!("star-antiautomorphism-{}", tag),
        show2,
        &(ops.star)(&ab),
        &(ops.star)(b).mul(&sa),
    );
    let s_star = (ops.star)(&(ops.antipode)(&(ops.star)(&(ops.antipode)(a))));
    rep.check(&format!("star-antipode-{}", tag), show, &s_star, a);
}

fn fun_ops(f: Field) -> Ops<funalg::FunMonomial> {
    Ops {
        delta_mono: Box::new(move |m| (*coproduct_cached(f, m)).clone()),
        counit: Box::new(funalg::counit),
        antipode: Box::new(|a| funalg::antipode(a).expect("root-of-unity mode")),
        star: Box::new(funalg::star),
    }
}

fn env_ops(f: Field) -> Ops<envalg::EnvMonomial> {
    Ops {
        delta_mono: Box::new(move |m| envalg::coproduct_monomial(f, m)),
        counit: Box::new(envalg::counit),
        antipode: Box::new(envalg::antipode),
        star: Box::new(envalg::star),
    }
}

/// Generators of A, including a polynomial and an exponential z-part.
pub fn fun_generators(f: Field) -> Vec<FunElement> {
    vec![
        funalg::eta_plus(f),
        funalg::eta_minus(f),
        funalg::delta_pow(f, 1),
        funalg::delta_pow(f, -1),
        funalg::z_plus(f),
        funalg::z_minus(f),
        funalg::exp_token(f, f.frac(1, 2), f.int(-1)),
    ]
}

pub fn env_generators(f: Field) -> Vec<EnvElement> {
    vec![
        envalg::e_plus(f),
        envalg::e_minus(f),
        envalg::k_pow(f, 1),
        envalg::k_pow(f, -1),
        envalg::ecal_plus(f),
        envalg::ecal_minus(f),
    ]
}

/// Random element of A: a finite part times 1, z₊, z₋ or an exponential.
pub fn random_fun<R: Rng>(rng: &mut R, f: Field, terms: usize) -> FunElement {
    let a = funalg::random_finite(rng, f, terms);
    match rng.random_range(0..5) {
        0 => a.mul(&funalg::z_plus(f)),
        1 => a.mul(&funalg::z_minus(f)),
        2 => a.mul(&funalg::exp_token(f, f.int(rng.random_range(-2..3)), f.frac(1, 3))),
        _ => a,
    }
}

fn run<M: Monomial>(rep: &mut Report, tag: &str, ops: &Ops<M>, xs: &[Elem<M>]) {
    let parts: Vec<Report> = (0..xs.len())
        .into_par_iter()
        .map(|k| {
            let mut r = Report::default();
            check_element(&mut r, tag, ops, &xs[k], &xs[(k + 1) % xs.len()]);
            r
        })
        .collect();
    for r in parts {
        rep.merge(r);
    }
}

/// Coassociativity, counit, antipode, homomorphism and star compatibility on
/// the generators of both algebras and `samples` seeded random elements of each.
pub fn hopf_check(f: Field, samples: usize, seed: u64) -> Result<Report> {
    f.p().ok_or(Error::GenericModeUnsupported("Hopf axiom suite"))?;
    let mut rep = Report::new("hopf", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fo = fun_ops(f);
    let eo = env_ops(f);
    run(&mut rep, "A", &fo, &fun_generators(f));
    run(&mut rep, "U", &eo, &env_generators(f));
    let funs: Vec<FunElement> = (0..samples).map(|_| random_fun(&mut rng, f, 2)).collect();
    let envs: Vec<EnvElement> = (0..samples).map(|_| envalg::random_element(&mut rng, f, 2)).collect();
    run(&mut rep, "A", &fo, &funs);
    run(&mut rep, "U", &eo, &envs);
    Ok(rep)
}
