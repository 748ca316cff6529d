use num_rational::BigRational;
use proptest::prelude::*;
use qroot_core::duality::{self, Side};
use qroot_core::elem::{map_legs, Elem};
use qroot_core::envalg::{self, EnvElement};
use qroot_core::funalg::{self, FunElement};
use qroot_core::scalars::{Cyc, Gq, RatFunc};
use qroot_core::{Field, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rat() -> impl Strategy<Value = BigRational> {
    (-9i64..10, 1i64..6).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn cyc(p: u32) -> impl Strategy<Value = Scalar> {
    let n = (p - 1) as usize;
    (prop::collection::vec(rat(), n), prop::collection::vec(rat(), n))
        .prop_map(move |(re, im)| Scalar::Root(Cyc::from_coords(p, &re, &im).unwrap()))
}

fn gq() -> impl Strategy<Value = Gq> {
    (rat(), rat()).prop_map(|(re, im)| Gq { re, im })
}

fn gen_scalar() -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(gq(), 1..4), prop::collection::vec(gq(), 1..3)).prop_filter_map("zero denominator", |(n, d)| {
        if d.iter().all(|g| g.is_zero()) {
            None
        } else {
            Some(Scalar::Gen(RatFunc::new(n, d)))
        }
    })
}

fn any_p() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 5, 7])
}

fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a - a), &a.field().zero());
    prop_assert_eq!(a.star().star(), a.clone());
    prop_assert_eq!((a * b).star(), &a.star() * &b.star());
    if !a.is_zero() {
        prop_assert!((a * &a.inv().unwrap()).is_one());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in any_p().prop_flat_map(|p| (cyc(p), cyc(p), cyc(p)))) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn rational_function_field_axioms(a in gen_scalar(), b in gen_scalar(), c in gen_scalar()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn q_is_a_primitive_root(p in any_p(), j in -20i64..20) {
        let f = Field::Root(p);
        prop_assert_eq!(f.q_pow(j + p as i64), f.q_pow(j));
        prop_assert_eq!(f.q_half(2 * j), f.q_pow(j));
        prop_assert_eq!(f.q_pow(j).star(), f.q_pow(-j));
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn fun_triple(p: u32, seed: u64) -> (Field, FunElement, FunElement, FunElement) {
    let f = Field::Root(p);
    let mut r = rng(seed);
    (f, funalg::random_finite(&mut r, f, 3), funalg::random_finite(&mut r, f, 3), funalg::random_finite(&mut r, f, 3))
}

fn env_triple(p: u32, seed: u64) -> (Field, EnvElement, EnvElement, EnvElement) {
    let f = Field::Root(p);
    let mut r = rng(seed);
    (f, envalg::random_element(&mut r, f, 3), envalg::random_element(&mut r, f, 3), envalg::random_element(&mut r, f, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fun_product_is_associative(p in any_p(), seed in any::<u64>()) {
        let (_, a, b, c) = fun_triple(p, seed);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn env_product_is_associative(p in any_p(), seed in any::<u64>()) {
        let (_, a, b, c) = env_triple(p, seed);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn casimir_is_central(p in any_p(), seed in any::<u64>()) {
        let (f, a, _, _) = env_triple(p, seed);
        let c = envalg::casimir(f);
        prop_assert_eq!(c.mul(&a), a.mul(&c));
    }

    #[test]
    fn fun_coproduct_is_multiplicative(p in prop::sample::select(vec![3u32, 5]), seed in any::<u64>()) {
        let (_, a, b, _) = fun_triple(p, seed);
        prop_assert_eq!(funalg::coproduct(&a.mul(&b)), funalg::coproduct(&a).mul(&funalg::coproduct(&b)));
        prop_assert_eq!(funalg::counit(&a.mul(&b)), &funalg::counit(&a) * &funalg::counit(&b));
    }

    #[test]
    fn env_coproduct_is_multiplicative(p in any_p(), seed in any::<u64>()) {
        let (_, a, b, _) = env_triple(p, seed);
        prop_assert_eq!(envalg::coproduct(&a.mul(&b)), envalg::coproduct(&a).mul(&envalg::coproduct(&b)));
    }

    #[test]
    fn star_is_an_antilinear_involution(p in any_p(), seed in any::<u64>()) {
        let (f, a, b, _) = fun_triple(p, seed);
        prop_assert_eq!(funalg::star(&funalg::star(&a)), a.clone());
        prop_assert_eq!(funalg::star(&a.mul(&b)), funalg::star(&b).mul(&funalg::star(&a)));
        prop_assert_eq!(funalg::star(&a.scale(&f.i())), funalg::star(&a).scale(&f.i().star()));
        let (_, x, y, _) = env_triple(p, seed);
        prop_assert_eq!(envalg::star(&envalg::star(&x)), x.clone());
        prop_assert_eq!(envalg::star(&x.mul(&y)), envalg::star(&y).mul(&envalg::star(&x)));
    }

    #[test]
    fn antipode_is_an_antihomomorphism(p in prop::sample::select(vec![3u32, 5]), seed in any::<u64>()) {
        let (_, a, b, _) = fun_triple(p, seed);
        prop_assert_eq!(funalg::antipode(&a.mul(&b)).unwrap(), funalg::antipode(&b).unwrap().mul(&funalg::antipode(&a).unwrap()));
        let (_, x, y, _) = env_triple(p, seed);
        prop_assert_eq!(envalg::antipode(&x.mul(&y)), envalg::antipode(&y).mul(&envalg::antipode(&x)));
    }

    #[test]
    fn coproduct_pairs_with_product(p in prop::sample::select(vec![3u32, 5]), seed in any::<u64>()) {
        let (_, a, b, _) = fun_triple(p, seed);
        let (_, phi, _, _) = env_triple(p, seed ^ 1);
        let lhs = duality::pair_env_tensor(&envalg::coproduct(&phi), &a, &b).unwrap();
        prop_assert_eq!(lhs, duality::pair(&phi, &a.mul(&b)).unwrap());
    }

    #[test]
    fn regular_actions_obey_leibniz(p in prop::sample::select(vec![3u32, 5]), seed in any::<u64>(), g in 0usize..3) {
        let (f, a, b, _) = fun_triple(p, seed);
        let phi = [envalg::e_plus(f), envalg::e_minus(f), envalg::k_pow(f, 1)][g].clone();
        for side in [Side::Right, Side::Left] {
            let lhs = duality::regular_action(&phi, &a.mul(&b), side);
            let mut rhs = Elem::zero(f);
            for ((u, v), c) in envalg::coproduct(&phi).iter() {
                let x = duality::regular_action(&envalg::monomial(f, u.clone()), &a, side);
                let y = duality::regular_action(&envalg::monomial(f, v.clone()), &b, side);
                rhs = rhs.add(&x.mul(&y).scale(c));
            }
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn k_actions_compose(p in any_p(), seed in any::<u64>(), j in 0i64..7, k in 0i64..7) {
        let (f, a, _, _) = fun_triple(p, seed);
        for side in [Side::Right, Side::Left] {
            let once = duality::regular_action(&envalg::k_pow(f, j + k), &a, side);
            let twice = duality::regular_action(&envalg::k_pow(f, j), &duality::regular_action(&envalg::k_pow(f, k), &a, side), side);
            prop_assert_eq!(once, twice);
        }
    }

    #[test]
    fn coproduct_is_coassociative(p in prop::sample::select(vec![3u32, 5]), seed in any::<u64>()) {
        let (f, a, _, _) = fun_triple(p, seed);
        let d = funalg::coproduct(&a);
        let left = map_legs(&d, |x| funalg::coproduct(&funalg::monomial(f, x.clone())), |y| funalg::monomial(f, y.clone()));
        let right = map_legs(&d, |x| funalg::monomial(f, x.clone()), |y| funalg::coproduct(&funalg::monomial(f, y.clone())));
        prop_assert_eq!(left, qroot_core::elem::assoc_left(&right));
    }
}
