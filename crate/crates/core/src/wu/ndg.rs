use serde::{Deserialize, Serialize};

use super::TriangularSystem;
use crate::ndg::GeometricCondition;
use crate::poly::{split_factors, Polynomial, Variable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "chain_index")]
pub enum NdgOrigin {
    TriangulationInitial(usize),
    AlgebraizationSide,
}

/// What an NDG amounts to over the reals, when that is simpler.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RealReading {
    /// A positive sum of even powers containing a variable already assumed
    /// nonzero: implied, so it can be dropped.
    ImpliedBy(Variable),
    /// A positive sum of even powers: not all of these variables are zero.
    NotAllZero(Vec<Variable>),
}

/// A polynomial assumed nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NdgCondition {
    pub poly: Polynomial,
    pub origin: NdgOrigin,
    #[serde(default)]
    pub geometric: Option<GeometricCondition>,
    #[serde(default)]
    pub real: Option<RealReading>,
}

/// NDGs of a triangulation: side conditions first, then the factors of the
/// chain initials, normalized, without constants and duplicates.
pub fn collect_ndgs(t: &TriangularSystem, side: &[Polynomial]) -> Vec<NdgCondition> {
    let mut out: Vec<NdgCondition> = Vec::new();
    let mut add = |p: &Polynomial, origin: NdgOrigin| {
        for f in split_factors(p) {
            if !out.iter().any(|n| n.poly == f) {
                out.push(NdgCondition { poly: f, origin, geometric: None, real: None });
            }
        }
    };
    for s in side {
        add(s, NdgOrigin::AlgebraizationSide);
    }
    for (i, e) in t.chain.iter().enumerate() {
        add(&e.initial, NdgOrigin::TriangulationInitial(i));
    }
    let singles: Vec<Variable> = out.iter().filter_map(|n| single_variable(&n.poly)).collect();
    for n in out.iter_mut() {
        n.real = real_reading(&n.poly, &singles);
    }
    out
}

fn single_variable(p: &Polynomial) -> Option<Variable> {
    let (t, c) = p.leading()?;
    match (p.num_terms(), t.powers()) {
        (1, [(v, 1)]) if *c == 1.into() => Some(*v),
        _ => None,
    }
}

/// Recognizes `sum c_i * v_i^(2 k_i)` with every `c_i > 0` and at least two
/// terms. Such a polynomial vanishes over the reals only when every `v_i`
/// does.
pub fn real_reading(p: &Polynomial, nonzero: &[Variable]) -> Option<RealReading> {
    if p.num_terms() < 2 {
        return None;
    }
    let mut vars = Vec::new();
    for (t, c) in p.terms() {
        match t.powers() {
            [(v, e)] if e % 2 == 0 && *c > 0.into() => vars.push(*v),
            _ => return None,
        }
    }
    vars.sort();
    vars.dedup();
    match vars.iter().find(|v| nonzero.contains(v)) {
        Some(v) => Some(RealReading::ImpliedBy(*v)),
        None => Some(RealReading::NotAllZero(vars)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn sum_of_squares() {
        let u1 = Variable::free(1);
        let u2 = Variable::free(2);
        assert_eq!(real_reading(&p("u1^2 + u2^2"), &[u1]), Some(RealReading::ImpliedBy(u1)));
        assert_eq!(real_reading(&p("u1^2 + u2^2"), &[]), Some(RealReading::NotAllZero(vec![u1, u2])));
        assert_eq!(real_reading(&p("u1^2 - u2^2"), &[u1]), None);
        assert_eq!(real_reading(&p("u3^2 - 2*u3*u1 + u2^2 + u1^2"), &[u1]), None);
        assert_eq!(real_reading(&p("u1"), &[u1]), None);
    }

    #[test]
    fn dedup_and_split() {
        let t = TriangularSystem::default();
        let ndgs = collect_ndgs(&t, &[p("-u2*u1"), p("u1"), p("3"), p("u1^2 + u2^2")]);
        let polys: Vec<_> = ndgs.iter().map(|n| n.poly.clone()).collect();
        assert_eq!(polys, vec![p("u1"), p("u2"), p("u2^2 + u1^2")]);
        assert_eq!(ndgs[2].real, Some(RealReading::ImpliedBy(Variable::free(1))));
    }
}
