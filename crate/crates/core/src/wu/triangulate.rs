use serde::{Deserialize, Serialize};

use super::ndg::collect_ndgs;
use super::{NdgCondition, WuError};
use crate::algebra::AlgebraicSystem;
use crate::poly::{pseudo_divide, Polynomial, Variable};
use crate::proof::Budget;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub main_var: Variable,
    pub poly: Polynomial,
    pub initial: Polynomial,
}

/// Polynomials ordered so that each introduces exactly one new dependent
/// variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularSystem {
    pub chain: Vec<ChainEntry>,
}

impl TriangularSystem {
    /// Checks the shape invariants: strictly increasing main variables,
    /// positive degree in the own main variable, none in later ones, and
    /// initials that match.
    pub fn check_shape(&self) -> Result<(), String> {
        for (i, e) in self.chain.iter().enumerate() {
            if i > 0 && self.chain[i - 1].main_var >= e.main_var {
                return Err(format!("entry {i}: main variables not increasing"));
            }
            if e.poly.degree_in(e.main_var) == 0 {
                return Err(format!("entry {i}: free of its main variable {}", e.main_var));
            }
            if let Some(v) = e.poly.variables().into_iter().filter(|v| v.is_dependent()).max() {
                if v != e.main_var {
                    return Err(format!("entry {i}: contains {v} above its main variable"));
                }
            }
            if e.initial != e.poly.leading_coeff(e.main_var) || e.initial.is_zero() {
                return Err(format!("entry {i}: initial mismatch"));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }
}

/// Brings the construction polynomials to triangular form by successive
/// pseudo-division, eliminating from the highest dependent variable down.
///
/// For each variable the pivot is a polynomial of least degree in it, the
/// earliest one on ties. Every other polynomial containing the variable is
/// replaced by its primitive pseudo-remainder, until one polynomial is left.
pub fn triangulate(
    sys: &AlgebraicSystem,
    budget: &Budget,
) -> Result<(TriangularSystem, Vec<NdgCondition>), WuError> {
    let mut work: Vec<Polynomial> = sys.construction_polys.iter().filter(|p| !p.is_zero()).map(|p| p.primitive()).collect();
    if work.iter().any(|p| p.is_constant()) {
        return Err(WuError::Inconsistent);
    }
    let mut vars: Vec<Variable> = work.iter().flat_map(|p| p.variables()).filter(|v| v.is_dependent()).collect();
    vars.sort();
    vars.dedup();

    let mut chain = Vec::new();
    for &v in vars.iter().rev() {
        loop {
            budget.observe(&work)?;
            let holders: Vec<usize> = (0..work.len()).filter(|&i| work[i].contains_var(v)).collect();
            match holders.len() {
                0 => break,
                1 => {
                    let poly = work.remove(holders[0]);
                    let initial = poly.leading_coeff(v);
                    chain.push(ChainEntry { main_var: v, poly, initial });
                    break;
                }
                _ => {}
            }
            let pivot = *holders.iter().min_by_key(|&&i| (work[i].degree_in(v), i)).unwrap();
            let q = work[pivot].clone();
            for &i in &holders {
                if i == pivot {
                    continue;
                }
                let r = pseudo_divide(&work[i], &q, v).expect("pivot contains v").remainder.primitive();
                if !r.is_zero() && r.is_constant() {
                    return Err(WuError::Inconsistent);
                }
                work[i] = r;
            }
            work.retain(|p| !p.is_zero());
        }
    }
    // Whatever is left constrains free variables only; dropping a
    // hypothesis never makes a proof unsound.
    chain.reverse();
    let tri = TriangularSystem { chain };
    debug_assert!(tri.check_shape().is_ok());
    let ndgs = collect_ndgs(&tri, &sys.side_ndgs);
    Ok((tri, ndgs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn sys(polys: &[&str]) -> AlgebraicSystem {
        AlgebraicSystem {
            construction_polys: polys.iter().map(|s| p(s)).collect(),
            construction_sources: vec![],
            statement_polys: vec![],
            side_ndgs: vec![],
            dep_vars: vec![],
        }
    }

    #[test]
    fn orthocenter_chain() {
        let (t, ndgs) = triangulate(&sys(&["(u3 - u1)*x2 + u2*x1", "u3*x2 + u2*x1 - u3*u1"]), &Budget::unlimited()).unwrap();
        assert_eq!(t.chain[0].main_var, Variable::dep(1));
        assert_eq!(t.chain[0].poly, p("-u2*u1*x1 - u3^2*u1 + u3*u1^2"));
        assert_eq!(t.chain[0].initial, p("-u2*u1"));
        assert_eq!(t.chain[1].poly, p("(u3 - u1)*x2 + u2*x1"));
        assert_eq!(t.chain[1].initial, p("u3 - u1"));
        assert_eq!(ndgs.len(), 3);
        t.check_shape().unwrap();
    }

    #[test]
    fn already_triangular() {
        let polys = ["2*x1 - u1 - u2", "2*x2 - u3", "2*x3 - u2", "2*x4 - u3"];
        let (t, ndgs) = triangulate(&sys(&polys), &Budget::unlimited()).unwrap();
        let got: Vec<Polynomial> = t.chain.iter().map(|e| e.poly.clone()).collect();
        assert_eq!(got, polys.iter().map(|s| p(s)).collect::<Vec<_>>());
        assert!(ndgs.is_empty());
    }

    #[test]
    fn empty_system() {
        let (t, ndgs) = triangulate(&sys(&[]), &Budget::unlimited()).unwrap();
        assert!(t.is_empty() && ndgs.is_empty());
    }

    #[test]
    fn shape_check_rejects_bad_chains() {
        let bad = TriangularSystem {
            chain: vec![
                ChainEntry { main_var: Variable::dep(1), poly: p("x1 + x2"), initial: p("1") },
                ChainEntry { main_var: Variable::dep(2), poly: p("x2"), initial: p("1") },
            ],
        };
        assert!(bad.check_shape().is_err());
    }
}
