use serde::{Deserialize, Serialize};

use super::{TriangularSystem, WuError};
use crate::algebra::AlgebraicSystem;
use crate::poly::{pseudo_divide, Polynomial, PseudoDivision};
use crate::proof::Budget;

/// One recorded identity `initial^exponent * dividend = quotient * chain[i] + remainder`.
/// The dividend is implicit: the statement polynomial for the first step
/// of a statement, the primitive part of the previous remainder after that.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertStep {
    /// Index of the statement polynomial being reduced.
    pub dividend: usize,
    pub chain_index: usize,
    pub quotient: Polynomial,
    pub remainder: Polynomial,
    pub initial: Polynomial,
    pub exponent: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WuCertificate {
    pub steps: Vec<CertStep>,
    /// One per statement polynomial.
    pub final_remainders: Vec<Polynomial>,
}

/// Pseudo-divides `g` by the chain from the highest main variable down,
/// stripping integer content after each step.
pub fn final_remainder(
    g: &Polynomial,
    t: &TriangularSystem,
    budget: &Budget,
) -> Result<(Polynomial, WuCertificate), WuError> {
    let mut cur = g.clone();
    let mut steps = Vec::new();
    for (i, e) in t.chain.iter().enumerate().rev() {
        if cur.is_zero() {
            break;
        }
        if cur.degree_in(e.main_var) < e.poly.degree_in(e.main_var) {
            continue;
        }
        let pd = pseudo_divide(&cur, &e.poly, e.main_var).expect("chain entries contain their main variable");
        budget.observe([&pd.quotient, &pd.remainder])?;
        cur = pd.remainder.primitive();
        steps.push(CertStep {
            dividend: 0,
            chain_index: i,
            quotient: pd.quotient,
            remainder: pd.remainder,
            initial: pd.initial,
            exponent: pd.exponent,
        });
    }
    let cert = WuCertificate { steps, final_remainders: vec![cur.clone()] };
    Ok((cur, cert))
}

/// Replays every recorded identity by expansion and checks that the chain
/// of remainders ends in the recorded final remainders.
pub fn verify_certificate(c: &WuCertificate, sys: &AlgebraicSystem, t: &TriangularSystem) -> bool {
    if t.check_shape().is_err() || c.final_remainders.len() != sys.statement_polys.len() {
        return false;
    }
    let mut current: Vec<Polynomial> = sys.statement_polys.clone();
    let mut last_index: Vec<Option<usize>> = vec![None; current.len()];
    for s in &c.steps {
        let (Some(cur), Some(entry)) = (current.get(s.dividend), t.chain.get(s.chain_index)) else {
            return false;
        };
        // Steps of one statement must walk down the chain.
        if last_index[s.dividend].is_some_and(|prev| prev <= s.chain_index) {
            return false;
        }
        if s.initial != entry.initial {
            return false;
        }
        let pd = PseudoDivision {
            quotient: s.quotient.clone(),
            remainder: s.remainder.clone(),
            initial: s.initial.clone(),
            exponent: s.exponent,
        };
        if !pd.residual(cur, &entry.poly).is_zero() {
            return false;
        }
        if s.remainder.degree_in(entry.main_var) >= entry.poly.degree_in(entry.main_var) {
            return false;
        }
        current[s.dividend] = s.remainder.primitive();
        last_index[s.dividend] = Some(s.chain_index);
    }
    // The remainder must also be reduced with respect to every entry.
    let reduced = |r: &Polynomial| t.chain.iter().all(|e| r.degree_in(e.main_var) < e.poly.degree_in(e.main_var));
    current.iter().zip(&c.final_remainders).all(|(a, b)| a == b && reduced(a))
}
