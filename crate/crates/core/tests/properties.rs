mod common;

use std::collections::BTreeMap;

use common::{poly_strategy, vars};
use geoprove::algebra::relations::{collinear, congruent, Pt};
use geoprove::poly::{parse_polynomial, pseudo_divide, Polynomial, Variable};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn assignment(vals: [i64; 4]) -> BTreeMap<Variable, BigRational> {
    vars().into_iter().zip(vals).map(|(v, k)| (v, BigRational::from_integer(BigInt::from(k)))).collect()
}

fn pt(x: &str, y: &str) -> Pt {
    Pt::new(parse_polynomial(x).unwrap(), parse_polynomial(y).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in poly_strategy(5, 2), b in poly_strategy(5, 2), c in poly_strategy(5, 2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(5, 2), b in poly_strategy(5, 2), v in prop::array::uniform4(-6i64..=6)) {
        let m = assignment(v);
        let ea = a.evaluate(&m).unwrap();
        let eb = b.evaluate(&m).unwrap();
        prop_assert_eq!((&a + &b).evaluate(&m).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).evaluate(&m).unwrap(), &ea * &eb);
    }

    #[test]
    fn text_rendering_is_canonical(a in poly_strategy(6, 3)) {
        let back = parse_polynomial(&a.to_string()).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), a.to_string());
    }

    #[test]
    fn statements_are_symmetric(c in prop::array::uniform6(-20i64..=20)) {
        let s = |k: i64| k.to_string();
        let (a, b, d) = (pt(&s(c[0]), &s(c[1])), pt(&s(c[2]), &s(c[3])), pt(&s(c[4]), &s(c[5])));
        let abc = collinear(&a, &b, &d);
        prop_assert!(abc.equal_up_to_unit(&collinear(&b, &a, &d)));
        prop_assert!(abc.equal_up_to_unit(&collinear(&d, &b, &a)));
        prop_assert!(congruent(&a, &b, &a, &d).equal_up_to_unit(&congruent(&b, &a, &d, &a)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pseudo_division_identity(p in poly_strategy(6, 3), q in poly_strategy(4, 2), k in 0usize..4) {
        let v = vars()[k];
        prop_assume!(q.degree_in(v) >= 1);
        let pd = pseudo_divide(&p, &q, v).unwrap();
        prop_assert!(pd.residual(&p, &q).is_zero());
        prop_assert!(pd.remainder.degree_in(v) < q.degree_in(v));
        prop_assert_eq!(pd.initial, q.leading_coeff(v));
        let bound = (p.degree_in(v) + 1).saturating_sub(q.degree_in(v));
        prop_assert!(pd.exponent <= bound);
    }
}

#[test]
fn pseudo_division_rejects_bad_divisors() {
    let x1 = Variable::dep(1);
    let p = parse_polynomial("x1^2 + u1").unwrap();
    assert!(pseudo_divide(&p, &Polynomial::zero(), x1).is_err());
    assert!(pseudo_divide(&p, &parse_polynomial("u1").unwrap(), x1).is_err());
}

// A false conjecture should be refuted by some concrete instance.
#[test]
fn numeric_witness_for_false_goal() {
    use geoprove::algebra::sample_instance;
    use rand::SeedableRng;
    let s = common::setup("point A free\npoint B free\npoint C free\npoint M midpoint A B\nprove collinear A M C\n");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let nonzero = (0..50)
        .filter_map(|_| sample_instance(&s.proto, &s.coords, &mut rng).ok())
        .filter(|i| s.sys.statement_polys.iter().any(|g| g.evaluate(&i.values).map(|v| !num_traits::Zero::is_zero(&v)).unwrap_or(false)))
        .count();
    assert!(nonzero > 40, "{nonzero}");
}
