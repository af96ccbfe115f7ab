//! Buchberger's algorithm over the integers, radical membership by the
//! Rabinowitsch trick, and the resulting decision method.

mod dense;

pub use dense::MonomialOrder;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraicSystem;
use crate::poly::{Polynomial, VarClass, Variable};
use crate::proof::{Budget, Exhausted, Method, NdgMode, ProofResult, ProofStats, Verdict};
use crate::wu::{self, NdgCondition, NdgOrigin, WuError};
use dense::{cofactors, DPoly, Layout};

/// A reduced basis: content-free polynomials with positive leading
/// coefficients, sorted by decreasing leading term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    pub polys: Vec<Polynomial>,
    pub order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        reduce(p, &self.polys, self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Checks that every S-polynomial reduces to zero, rather than trusting
    /// the construction.
    pub fn verify(&self) -> bool {
        self.verify_within(&Budget::unlimited()).expect("no deadline")
    }

    pub fn verify_within(&self, budget: &Budget) -> Result<bool, Exhausted> {
        let n = self.polys.len();
        for i in 0..n {
            for j in i + 1..n {
                let s = s_polynomial(&self.polys[i], &self.polys[j], self.order);
                if !reduce_within(&s, &self.polys, self.order, budget)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Full normal form of `p`, fraction-free: the result is a multiple of the
/// rational normal form by a nonzero integer, content removed.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    reduce_within(p, basis, order, &Budget::unlimited()).expect("no deadline")
}

/// [`reduce`] under a budget.
pub fn reduce_within(
    p: &Polynomial,
    basis: &[Polynomial],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<Polynomial, Exhausted> {
    let layout = Layout::of(std::iter::once(p).chain(basis));
    let g: Vec<DPoly> = basis.iter().filter(|b| !b.is_zero()).map(|b| layout.to_dense(b, order)).collect();
    let mut r = normal_form(layout.to_dense(p, order), &g, order, budget)?;
    r.make_primitive();
    Ok(layout.to_sparse(&r))
}

/// Fraction-free S-polynomial, content removed.
pub fn s_polynomial(p: &Polynomial, q: &Polynomial, order: MonomialOrder) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let layout = Layout::of([p, q]);
    let mut s = spoly(&layout.to_dense(p, order), &layout.to_dense(q, order), order);
    s.make_primitive();
    layout.to_sparse(&s)
}

fn spoly(p: &DPoly, q: &DPoly, order: MonomialOrder) -> DPoly {
    let l = p.lm().lcm(q.lm());
    let mp = p.lm().quotient_of(&l);
    let mq = q.lm().quotient_of(&l);
    let (a, b) = cofactors(p.lc(), q.lc());
    let left = DPoly { terms: p.terms.iter().map(|(m, c)| (m.mul(&mp), c.clone())).collect() };
    left.combine(&a, q, &mq, &b, order)
}

fn normal_form(mut p: DPoly, g: &[DPoly], order: MonomialOrder, budget: &Budget) -> Result<DPoly, Exhausted> {
    // Irreducible terms collect in `done`, highest first.
    let mut done: Vec<(dense::Mono, BigInt)> = Vec::new();
    let mut steps = 0u32;
    while let Some((lm, lc)) = p.terms.last().cloned() {
        steps += 1;
        if steps.is_multiple_of(64) {
            budget.tick()?;
        }
        match g.iter().find(|d| d.lm().divides(&lm)) {
            Some(d) => {
                let (a, b) = cofactors(&lc, d.lc());
                let m = d.lm().quotient_of(&lm);
                p = p.combine(&a, d, &m, &b, order);
                if !a.is_one() {
                    for (_, c) in done.iter_mut() {
                        *c *= &a;
                    }
                    if a.abs() > BigInt::one() {
                        strip_content(&mut p, &mut done);
                    }
                }
            }
            None => {
                p.terms.pop();
                done.push((lm, lc));
            }
        }
    }
    done.reverse();
    Ok(DPoly { terms: done })
}

fn strip_content(p: &mut DPoly, done: &mut [(dense::Mono, BigInt)]) {
    use num_integer::Integer;
    let mut g = BigInt::from(0);
    for (_, c) in p.terms.iter().chain(done.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for (_, c) in p.terms.iter_mut().chain(done.iter_mut()) {
            *c /= &g;
        }
    }
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder, budget: &Budget) -> Result<GroebnerBasis, Exhausted> {
    buchberger_dividing(gens, &[], order, budget)
}

/// As [`buchberger`], except that every new basis element is divided by
/// any of `nonzero` that divides it exactly. The result generates an ideal
/// between that of `gens` and its saturation by the product of `nonzero`:
/// membership in it shows `g * prod(nonzero)^k` in the ideal of `gens`.
pub fn buchberger_dividing(
    gens: &[Polynomial],
    nonzero: &[Polynomial],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, Exhausted> {
    let layout = Layout::of(gens.iter().chain(nonzero));
    let dense: Vec<DPoly> = gens.iter().filter(|p| !p.is_zero()).map(|p| layout.to_dense(p, order)).collect();
    let divisors: Vec<DPoly> =
        nonzero.iter().filter(|p| !p.is_constant()).map(|p| layout.to_dense(&p.primitive(), order)).collect();
    let basis = buchberger_dense(dense, &divisors, order, budget)?;
    Ok(GroebnerBasis { polys: basis.iter().map(|p| layout.to_sparse(p)).collect(), order })
}

/// Removes every factor in `divisors` from `h`, as often as it divides.
fn divide_out(mut h: DPoly, divisors: &[DPoly], order: MonomialOrder) -> DPoly {
    for d in divisors {
        while d.lm().divides(h.lm()) {
            match h.div_exact(d, order) {
                Some(q) => h = q,
                None => break,
            }
        }
    }
    h
}

/// Reduces the leading term of `p` until no basis leading term divides it.
/// Returns the result and its sugar.
fn top_reduce(
    mut p: DPoly,
    mut sugar: u32,
    polys: &[Entry],
    active: &[usize],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<(DPoly, u32), Exhausted> {
    let mut steps = 0u32;
    while !p.is_zero() {
        steps += 1;
        if steps.is_multiple_of(64) {
            budget.tick()?;
        }
        let lm = p.lm();
        // The shortest applicable reducer keeps intermediate growth down.
        let Some(&k) = active.iter().filter(|&&k| polys[k].p.lm().divides(lm)).min_by_key(|&&k| (polys[k].p.len(), k))
        else {
            break;
        };
        let d = &polys[k];
        let (a, b) = cofactors(p.lc(), d.p.lc());
        let m = d.p.lm().quotient_of(lm);
        sugar = sugar.max(m.degree() + d.sugar);
        p = p.combine(&a, &d.p, &m, &b, order);
        if a.abs() > BigInt::one() {
            p.make_primitive();
        }
    }
    Ok((p, sugar))
}

struct Entry {
    p: DPoly,
    /// Degree the polynomial would have if the input were homogenized.
    sugar: u32,
}

/// Gebauer-Moeller update: adds `h` (index `new`) to the basis, discarding
/// pairs that the product and chain criteria make redundant.
fn update(polys: &[Entry], active: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, new: usize) {
    let h = polys[new].p.lm();
    let lcm_with = |g: usize| h.lcm(polys[g].p.lm());
    let cands: Vec<usize> = active.clone();
    let mut kept: Vec<usize> = Vec::new();
    for (idx, &g1) in cands.iter().enumerate() {
        let l1 = lcm_with(g1);
        let coprime = h.coprime(polys[g1].p.lm());
        let dominated = cands[idx + 1..].iter().any(|&g2| lcm_with(g2).divides(&l1))
            || kept.iter().any(|&g2| lcm_with(g2).divides(&l1));
        if coprime || !dominated {
            kept.push(g1);
        }
    }
    pairs.retain(|&(a, b)| {
        let l = polys[a].p.lm().lcm(polys[b].p.lm());
        !h.divides(&l) || lcm_with(a) == l || lcm_with(b) == l
    });
    for g in kept {
        if !h.coprime(polys[g].p.lm()) {
            pairs.push((g.min(new), g.max(new)));
        }
    }
    active.retain(|&g| !h.divides(polys[g].p.lm()));
    active.push(new);
}

fn buchberger_dense(
    gens: Vec<DPoly>,
    divisors: &[DPoly],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<Vec<DPoly>, Exhausted> {
    let mut polys: Vec<Entry> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let unit = |p: &DPoly| vec![DPoly { terms: vec![(p.lm().clone(), BigInt::one())] }];

    let mut pending: Vec<(DPoly, u32)> = gens.into_iter().map(|p| {
        let d = p.degree();
        (p, d)
    }).collect();
    // Pairs are chosen by least sugar, then least lcm, then index.
    loop {
        let (p, sugar) = if let Some(x) = pending.pop() {
            x
        } else {
            let Some(best) = (0..pairs.len()).min_by(|&x, &y| {
                let key = |&(a, b): &(usize, usize)| {
                    let l = polys[a].p.lm().lcm(polys[b].p.lm());
                    let s = (polys[a].sugar - polys[a].p.lm().degree()).max(polys[b].sugar - polys[b].p.lm().degree())
                        + l.degree();
                    (s, l)
                };
                let (sx, lx) = key(&pairs[x]);
                let (sy, ly) = key(&pairs[y]);
                sx.cmp(&sy).then_with(|| order.cmp_mono(&lx, &ly)).then_with(|| (pairs[x].1, pairs[x].0).cmp(&(pairs[y].1, pairs[y].0)))
            }) else {
                break;
            };
            let (a, b) = pairs.swap_remove(best);
            let l = polys[a].p.lm().lcm(polys[b].p.lm());
            let s = (polys[a].sugar - polys[a].p.lm().degree()).max(polys[b].sugar - polys[b].p.lm().degree()) + l.degree();
            (spoly(&polys[a].p, &polys[b].p, order), s)
        };
        budget.observe_count(p.len() + active.iter().map(|&k| polys[k].p.len()).sum::<usize>())?;
        let (mut h, sugar) = top_reduce(p, sugar, &polys, &active, order, budget)?;
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        let mut h = divide_out(h, divisors, order);
        h.make_primitive();
        budget.observe_degree(h.degree());
        if h.is_constant() {
            return Ok(unit(&h));
        }
        polys.push(Entry { p: h, sugar });
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }
    interreduce(active.iter().map(|&k| polys[k].p.clone()).collect(), order, budget)
}

fn interreduce(g: Vec<DPoly>, order: MonomialOrder, budget: &Budget) -> Result<Vec<DPoly>, Exhausted> {
    let mut minimal: Vec<DPoly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(k, q)| {
            k != i && q.lm().divides(p.lm()) && (q.lm() != p.lm() || k < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out: Vec<DPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<DPoly> =
                minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, q)| q.clone()).collect();
            let mut r = normal_form(minimal[i].clone(), &others, order, budget)?;
            r.make_primitive();
            Ok(r)
        })
        .collect::<Result<_, Exhausted>>()?;
    out.sort_by(|a, b| order.cmp_mono(b.lm(), a.lm()));
    Ok(out)
}

/// A variable above every variable occurring in `polys`.
fn fresh_aux<'a>(polys: impl IntoIterator<Item = &'a Polynomial>, skip: u32) -> Variable {
    let top = polys
        .into_iter()
        .flat_map(|p| p.variables())
        .filter(|v| v.class == VarClass::Aux)
        .map(|v| v.index)
        .max()
        .unwrap_or(0);
    Variable::aux(top + 1 + skip)
}

/// `1 - z * g`.
fn rabinowitsch(g: &Polynomial, z: Variable) -> Polynomial {
    &Polynomial::one() - &(&Polynomial::var(z) * g)
}

/// Decides whether some power of `g` lies in the ideal of `gens`, by
/// checking that adding `1 - z*g` for a fresh `z` yields the unit ideal.
pub fn radical_membership(g: &Polynomial, gens: &[Polynomial], budget: &Budget) -> Result<bool, Exhausted> {
    if g.is_zero() {
        return Ok(true);
    }
    let z = fresh_aux(gens.iter().chain([g]), 0);
    let mut all = gens.to_vec();
    all.push(rabinowitsch(g, z));
    Ok(buchberger(&all, MonomialOrder::DegRevLex, budget)?.is_unit())
}

/// Decides each statement polynomial by radical membership in the ideal of
/// the hypotheses, saturated by the NDGs that `mode` selects.
pub fn prove_groebner(sys: &AlgebraicSystem, mode: NdgMode, budget: &Budget) -> ProofResult {
    let mut stats = ProofStats::default();
    let mut result = ProofResult {
        method: Method::Groebner { ndg_mode: mode },
        verdict: Verdict::Proved,
        ndgs: vec![],
        chain: None,
        certificate: None,
        stats: ProofStats::default(),
    };
    let finish = |mut r: ProofResult, mut stats: ProofStats| {
        stats.peak_monomials = budget.peak_monomials();
        stats.max_degree = budget.max_degree();
        r.stats = stats;
        r
    };

    result.ndgs = match mode {
        NdgMode::None => vec![],
        NdgMode::Side => sys
            .side_ndgs
            .iter()
            .map(|p| NdgCondition { poly: p.clone(), origin: NdgOrigin::AlgebraizationSide, geometric: None, real: None })
            .collect(),
        NdgMode::Wu => match stats.time("triangulation", || wu::triangulate(sys, budget)) {
            Ok((_, ndgs)) => ndgs,
            Err(e) => {
                result.verdict = match e {
                    WuError::Inconsistent => Verdict::Inconsistent,
                    WuError::Timeout(x) => Verdict::Timeout { reason: x.to_string() },
                };
                return finish(result, stats);
            }
        },
    };

    // One Buchberger run per statement polynomial g: the hypotheses plus
    // 1 - z*g*c, c the product of the NDGs. The run stops as soon as a
    // constant appears. Factors known to be nonzero are divided out of new
    // basis elements, which discards degenerate components early.
    let hyps: Vec<Polynomial> = sys.construction_polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let nonzero: Vec<Polynomial> = result.ndgs.iter().map(|n| n.poly.clone()).collect();
    let ndg_product = nonzero.iter().fold(Polynomial::one(), |acc, c| &acc * c);
    let verdict = stats.time("membership", || {
        for g in &sys.statement_polys {
            if g.is_zero() {
                continue;
            }
            let gc = g * &ndg_product;
            let z = fresh_aux(hyps.iter().chain([&gc]), 0);
            let mut gens = hyps.clone();
            gens.push(rabinowitsch(&gc, z));
            match buchberger_dividing(&gens, &nonzero, MonomialOrder::DegRevLex, budget) {
                Ok(b) if b.is_unit() => {}
                Ok(_) => return Verdict::NotProved { witness: g.clone() },
                Err(e) => return Verdict::Timeout { reason: e.to_string() },
            }
        }
        Verdict::Proved
    });
    result.verdict = verdict;
    finish(result, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{algebrize, assign_coordinates};
    use crate::poly::parse_polynomial;
    use crate::protocol::parse_protocol;
    use MonomialOrder::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn ps(v: &[&str]) -> Vec<Polynomial> {
        v.iter().map(|s| p(s)).collect()
    }

    fn system(src: &str) -> AlgebraicSystem {
        let proto = parse_protocol(src).unwrap();
        algebrize(&proto, &assign_coordinates(&proto).unwrap()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce(&p("x1^2"), &ps(&["x1"]), Lex).is_zero());
        assert_eq!(reduce(&p("x1 - u1"), &ps(&["x1^2 - 1", "x1*u1 - 1"]), Lex), p("x1 - u1"));
        assert!(reduce(&Polynomial::zero(), &ps(&["x1"]), DegRevLex).is_zero());
        // Fraction-free: 2*x1 - 1 reduces 3*x1 + u1 to a multiple of 3/2 + u1.
        assert_eq!(reduce(&p("3*x1 + u1"), &ps(&["2*x1 - 1"]), Lex), p("2*u1 + 3"));
    }

    #[test]
    fn s_polynomial_examples() {
        let s = s_polynomial(&p("x1^2 - 1"), &p("x1*u1 - 1"), Lex);
        assert!(s.equal_up_to_unit(&p("x1 - u1")));
        assert!(s_polynomial(&p("x1^2 - u1"), &p("x1^2 - u1"), Lex).is_zero());
        let s = s_polynomial(&p("x1 + 1"), &p("u1 + 2"), Lex);
        assert!(reduce(&s, &ps(&["x1 + 1", "u1 + 2"]), Lex).is_zero());
    }

    #[test]
    fn buchberger_examples() {
        let b = buchberger(&ps(&["x1"]), Lex, &Budget::unlimited()).unwrap();
        assert_eq!(b.polys, ps(&["x1"]));
        let b = buchberger(&ps(&["x1^2 - 1", "x1*u1 - 1"]), Lex, &Budget::unlimited()).unwrap();
        assert_eq!(b.polys, ps(&["x1 - u1", "u1^2 - 1"]));
        assert!(b.verify());
        let b = buchberger(&ps(&["x1 + 1", "x1"]), DegRevLex, &Budget::unlimited()).unwrap();
        assert!(b.is_unit());
        let b = buchberger(&[], DegRevLex, &Budget::unlimited()).unwrap();
        assert!(b.polys.is_empty());
    }

    #[test]
    fn basis_is_deterministic_and_verified() {
        let sys = system(crate::algebra::tests::ORTHOCENTER);
        for ord in [Lex, DegRevLex] {
            let a = buchberger(&sys.construction_polys, ord, &Budget::unlimited()).unwrap();
            let b = buchberger(&sys.construction_polys, ord, &Budget::unlimited()).unwrap();
            assert_eq!(a, b);
            assert!(a.verify());
            for g in &sys.construction_polys {
                assert!(a.contains(g));
            }
        }
    }

    #[test]
    fn radical_examples() {
        let b = Budget::unlimited();
        assert!(radical_membership(&p("x1"), &ps(&["x1^2"]), &b).unwrap());
        assert!(!radical_membership(&Polynomial::one(), &ps(&["x1"]), &b).unwrap());
        let mid = ps(&["2*x1 - u2 - u1", "2*x2 - u3", "2*x3 - u2", "2*x4 - u3"]);
        assert!(radical_membership(&p("-(x4 - x2)*u1"), &mid, &b).unwrap());
    }

    #[test]
    fn orthocenter_modes() {
        let sys = system(crate::algebra::tests::ORTHOCENTER);
        let r = prove_groebner(&sys, NdgMode::Wu, &Budget::unlimited());
        assert_eq!(r.verdict, Verdict::Proved);
        assert_eq!(r.ndgs.len(), 3);
        // The goal u1*(x2 - u3) is the difference of the two hypotheses.
        let r = prove_groebner(&sys, NdgMode::None, &Budget::unlimited());
        assert_eq!(r.verdict, Verdict::Proved);
        assert!(r.ndgs.is_empty());
    }

    #[test]
    fn simson_with_wu_ndgs() {
        let sys = system(crate::algebra::tests::SIMSON);
        let r = prove_groebner(&sys, NdgMode::Wu, &Budget::unlimited());
        assert_eq!(r.verdict, Verdict::Proved, "{:?}", r.stats);
    }

    #[test]
    fn trivial_goals() {
        let mut sys = system("point A free\nprove identical A A\n");
        assert_eq!(prove_groebner(&sys, NdgMode::None, &Budget::unlimited()).verdict, Verdict::Proved);
        sys.statement_polys = vec![Polynomial::one()];
        sys.construction_polys = vec![];
        assert!(matches!(prove_groebner(&sys, NdgMode::None, &Budget::unlimited()).verdict, Verdict::NotProved { .. }));
        // Contradictory hypotheses prove anything.
        sys.construction_polys = ps(&["x1", "x1 - 1"]);
        assert_eq!(prove_groebner(&sys, NdgMode::None, &Budget::unlimited()).verdict, Verdict::Proved);
    }
}
