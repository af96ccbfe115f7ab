//! The simple Wu method: triangulate the hypotheses, pseudo-divide the
//! conclusion through the chain, read non-degeneracy conditions off the
//! initials.

mod certificate;
mod ndg;
mod triangulate;

pub use certificate::{final_remainder, verify_certificate, CertStep, WuCertificate};
pub use ndg::{collect_ndgs, real_reading, NdgCondition, NdgOrigin, RealReading};
pub use triangulate::{triangulate, ChainEntry, TriangularSystem};

use thiserror::Error;

use crate::algebra::AlgebraicSystem;
use crate::proof::{Budget, Exhausted, Method, ProofResult, ProofStats, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WuError {
    #[error("the construction is inconsistent (a nonzero constant was derived)")]
    Inconsistent,
    #[error("budget exhausted: {0}")]
    Timeout(#[from] Exhausted),
}

/// Runs the whole method on `sys`. Budget exhaustion and inconsistency are
/// reported as verdicts, never as errors.
pub fn prove_wu(sys: &AlgebraicSystem, budget: &Budget) -> ProofResult {
    let mut stats = ProofStats::default();
    let mut result = ProofResult {
        method: Method::Wu,
        verdict: Verdict::Proved,
        ndgs: vec![],
        chain: None,
        certificate: None,
        stats: ProofStats::default(),
    };
    let tri = stats.time("triangulation", || triangulate(sys, budget));
    let (chain, ndgs) = match tri {
        Ok(t) => t,
        Err(e) => {
            result.verdict = match e {
                WuError::Inconsistent => Verdict::Inconsistent,
                WuError::Timeout(x) => Verdict::Timeout { reason: x.to_string() },
            };
            result.stats = finish(stats, budget);
            return result;
        }
    };
    result.ndgs = ndgs;

    let rem = stats.time("final_remainder", || {
        let mut cert = WuCertificate::default();
        for (j, g) in sys.statement_polys.iter().enumerate() {
            let (r, c) = final_remainder(g, &chain, budget)?;
            cert.steps.extend(c.steps.into_iter().map(|s| CertStep { dividend: j, ..s }));
            cert.final_remainders.push(r);
        }
        Ok::<_, WuError>(cert)
    });
    match rem {
        Ok(cert) => {
            if let Some(r) = cert.final_remainders.iter().find(|r| !r.is_zero()) {
                result.verdict = Verdict::NotProved { witness: r.clone() };
            }
            result.certificate = Some(cert);
        }
        Err(e) => {
            result.verdict = match e {
                WuError::Inconsistent => Verdict::Inconsistent,
                WuError::Timeout(x) => Verdict::Timeout { reason: x.to_string() },
            };
        }
    }
    result.chain = Some(chain);
    result.stats = finish(stats, budget);
    result
}

fn finish(mut stats: ProofStats, budget: &Budget) -> ProofStats {
    stats.peak_monomials = budget.peak_monomials();
    stats.max_degree = budget.max_degree();
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{algebrize, assign_coordinates};
    use crate::poly::{parse_polynomial, Polynomial};
    use crate::protocol::parse_protocol;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn system(src: &str) -> AlgebraicSystem {
        let proto = parse_protocol(src).unwrap();
        algebrize(&proto, &assign_coordinates(&proto).unwrap()).unwrap()
    }

    #[test]
    fn orthocenter_proof() {
        let sys = system(crate::algebra::tests::ORTHOCENTER);
        let r = prove_wu(&sys, &Budget::unlimited());
        assert!(r.verdict.is_proved());
        let chain = r.chain.as_ref().unwrap();
        assert_eq!(chain.chain[0].poly, p("-u2*u1*x1 - u3^2*u1 + u3*u1^2"));
        assert_eq!(chain.chain[1].poly, p("(u3 - u1)*x2 + u2*x1"));
        let ndgs: Vec<Polynomial> = r.ndgs.iter().map(|n| n.poly.clone()).collect();
        assert_eq!(ndgs, vec![p("u1"), p("u2"), p("u3 - u1")]);
        assert!(verify_certificate(r.certificate.as_ref().unwrap(), &sys, chain));
    }

    #[test]
    fn simson_proof() {
        let sys = system(crate::algebra::tests::SIMSON);
        let r = prove_wu(&sys, &Budget::unlimited());
        assert!(r.verdict.is_proved());
        let ndgs: Vec<Polynomial> = r.ndgs.iter().map(|n| n.poly.clone()).collect();
        assert_eq!(ndgs.len(), 6, "{ndgs:?}");
        for want in ["u1", "u2", "u3", "u3^2 - 2*u3*u1 + u2^2 + u1^2", "u3 - u1", "u3^2 + u2^2"] {
            assert!(ndgs.contains(&p(want)), "{want}");
        }
    }

    #[test]
    fn identical_goal_needs_nothing() {
        let sys = system("point A free\nprove identical A A\n");
        let r = prove_wu(&sys, &Budget::unlimited());
        assert!(r.verdict.is_proved());
        assert!(r.ndgs.is_empty());
    }

    #[test]
    fn unprovable_goal() {
        let sys = system("point A free\npoint B free\npoint C free\nprove collinear A B C\n");
        let r = prove_wu(&sys, &Budget::unlimited());
        assert!(matches!(r.verdict, Verdict::NotProved { .. }));
    }

    #[test]
    fn inconsistent_construction() {
        let mut sys = system("point A free\npoint B free\npoint M midpoint A B\nprove identical M M\n");
        sys.construction_polys = vec![p("x1"), p("x1 + 1")];
        assert_eq!(prove_wu(&sys, &Budget::unlimited()).verdict, Verdict::Inconsistent);
    }

    #[test]
    fn budget_is_enforced() {
        let sys = system(crate::algebra::tests::SIMSON);
        let r = prove_wu(&sys, &Budget::unlimited().max_monomials(3));
        assert!(matches!(r.verdict, Verdict::Timeout { .. }));
    }
}
