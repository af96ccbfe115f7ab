#![allow(dead_code)]

use std::path::{Path, PathBuf};

use geoprove::algebra::{algebrize, assign_with, AlgebraicSystem, AssignOptions, CoordinateAssignment};
use geoprove::poly::{Polynomial, Term, Variable};
use geoprove::protocol::{parse_protocol, ConstructionProtocol};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn corpus_dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(sub)
}

pub fn load(sub: &str, file: &str) -> String {
    std::fs::read_to_string(corpus_dir(sub).join(file)).unwrap()
}

pub struct Setup {
    pub proto: ConstructionProtocol,
    pub coords: CoordinateAssignment,
    pub sys: AlgebraicSystem,
}

pub fn setup_with(src: &str, opts: &AssignOptions) -> Setup {
    let proto = parse_protocol(src).unwrap();
    let coords = assign_with(&proto, opts).unwrap();
    let sys = algebrize(&proto, &coords).unwrap();
    Setup { proto, coords, sys }
}

pub fn setup(src: &str) -> Setup {
    setup_with(src, &AssignOptions::default())
}

pub fn p(s: &str) -> Polynomial {
    geoprove::poly::parse_polynomial(s).unwrap()
}

pub fn vars() -> [Variable; 4] {
    [Variable::free(1), Variable::free(2), Variable::dep(1), Variable::dep(2)]
}

/// Small random polynomials in u1, u2, x1, x2.
pub fn poly_strategy(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::array::uniform4(0..=max_exp), -9i64..=9), 0..=max_terms).prop_map(|terms| {
        let vs = vars();
        Polynomial::from_terms(terms.into_iter().map(|(e, c)| {
            (Term::from_powers(vs.iter().zip(e).filter(|(_, k)| *k > 0).map(|(v, k)| (*v, k))), BigInt::from(c))
        }))
    })
}
