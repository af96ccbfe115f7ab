//! Dense working representation: exponent vectors over a fixed variable
//! layout, terms kept sorted ascending so the leading term is last.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::poly::{Polynomial, Term, Variable};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    /// Compares two terms; larger variables weigh more.
    pub fn compare(self, a: &Term, b: &Term) -> Ordering {
        let vars: Vec<Variable> = a.variables().chain(b.variables()).collect();
        let layout = Layout::new(vars);
        self.cmp_mono(&layout.mono(a), &layout.mono(b))
    }

    pub(crate) fn cmp_mono(self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for i in (0..a.0.len()).rev() {
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Exponents, position 0 holding the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Mono(pub SmallVec<[u16; 24]>);

impl Mono {
    fn one(n: usize) -> Mono {
        Mono(SmallVec::from_elem(0, n))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient_of(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Maps variables to exponent positions, largest variable first.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    vars: Vec<Variable>,
}

impl Layout {
    pub fn new(vars: impl IntoIterator<Item = Variable>) -> Layout {
        let mut vars: Vec<Variable> = vars.into_iter().collect();
        vars.sort_by(|a, b| b.cmp(a));
        vars.dedup();
        Layout { vars }
    }

    pub fn of<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Layout {
        Layout::new(polys.into_iter().flat_map(|p| p.variables()))
    }

    fn mono(&self, t: &Term) -> Mono {
        let mut m = Mono::one(self.vars.len());
        for &(v, e) in t.powers() {
            let i = self.vars.iter().position(|&w| w == v).expect("variable outside layout");
            m.0[i] = u16::try_from(e).expect("exponent overflow");
        }
        m
    }

    fn term(&self, m: &Mono) -> Term {
        Term::from_powers(m.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (self.vars[i], e as u32)))
    }

    pub fn to_dense(&self, p: &Polynomial, ord: MonomialOrder) -> DPoly {
        let mut terms: Vec<(Mono, BigInt)> = p.terms().map(|(t, c)| (self.mono(t), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp_mono(&a.0, &b.0));
        DPoly { terms }
    }

    pub fn to_sparse(&self, p: &DPoly) -> Polynomial {
        Polynomial::from_terms(p.terms.iter().map(|(m, c)| (self.term(m), c.clone())))
    }
}

/// A polynomial in the dense representation, terms ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DPoly {
    pub terms: Vec<(Mono, BigInt)>,
}

impl DPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Mono {
        &self.terms.last().expect("nonzero").0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms.last().expect("nonzero").1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.lm().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Divides out the integer content and makes the leading coefficient
    /// positive.
    pub fn make_primitive(&mut self) {
        if self.is_zero() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
    }

    /// `a * self - b * m * other`, where `m * other` is ordered like `other`.
    pub fn combine(&self, a: &BigInt, other: &DPoly, m: &Mono, b: &BigInt, ord: MonomialOrder) -> DPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let mut shifted: Option<(Mono, BigInt)> = other.terms.first().map(|(mo, c)| (m.mul(mo), c * b));
        while i < self.terms.len() || shifted.is_some() {
            let ord_ij = match (&shifted, self.terms.get(i)) {
                (None, _) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some((sm, _)), Some((tm, _))) => ord.cmp_mono(tm, sm),
            };
            match ord_ij {
                Ordering::Less => {
                    let (tm, tc) = &self.terms[i];
                    out.push((tm.clone(), tc * a));
                    i += 1;
                }
                Ordering::Greater => {
                    let (sm, sc) = shifted.take().unwrap();
                    out.push((sm, -sc));
                    j += 1;
                }
                Ordering::Equal => {
                    let (sm, sc) = shifted.take().unwrap();
                    let c = &self.terms[i].1 * a - sc;
                    if !c.is_zero() {
                        out.push((sm, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
            if shifted.is_none() && j < other.terms.len() {
                let (mo, c) = &other.terms[j];
                shifted = Some((m.mul(mo), c * b));
            }
        }
        DPoly { terms: out }
    }
}

impl DPoly {
    /// Exact quotient `self / d`, if `d` divides `self` over the integers.
    pub fn div_exact(&self, d: &DPoly, ord: MonomialOrder) -> Option<DPoly> {
        use num_integer::Integer;
        let mut r = self.clone();
        let mut q: Vec<(Mono, BigInt)> = Vec::new();
        while !r.is_zero() {
            if !d.lm().divides(r.lm()) {
                return None;
            }
            let (c, rem) = r.lc().div_rem(d.lc());
            if !rem.is_zero() {
                return None;
            }
            let m = d.lm().quotient_of(r.lm());
            r = r.combine(&BigInt::one(), d, &m, &c, ord);
            q.push((m, c));
        }
        q.reverse();
        Some(DPoly { terms: q })
    }
}

/// Cofactors `(a, b)` with `a * x = b * y = lcm(x, y)` up to sign.
pub(crate) fn cofactors(x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
    let g = x.gcd(y);
    (y / &g, x / &g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn t(s: &str) -> Term {
        p(s).leading().unwrap().0.clone()
    }

    #[test]
    fn orders() {
        use MonomialOrder::*;
        assert_eq!(Lex.compare(&t("x1"), &t("u1^5")), Ordering::Greater);
        assert_eq!(DegRevLex.compare(&t("x1"), &t("u1^5")), Ordering::Less);
        // Same degree: the one with less of the smallest variable is larger.
        assert_eq!(DegRevLex.compare(&t("x1*x2"), &t("x2*u1")), Ordering::Greater);
        assert_eq!(Lex.compare(&t("x2"), &t("x1^3")), Ordering::Greater);
        assert_eq!(DegRevLex.compare(&t("1"), &t("u1")), Ordering::Less);
    }

    #[test]
    fn round_trip() {
        let q = p("3*x2^2*u1 - x1 + 7*z1 - 2");
        for ord in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let l = Layout::of([&q]);
            let d = l.to_dense(&q, ord);
            assert_eq!(l.to_sparse(&d), q);
            for w in d.terms.windows(2) {
                assert_eq!(ord.cmp_mono(&w[0].0, &w[1].0), Ordering::Less);
            }
        }
    }

    #[test]
    fn combine_matches_sparse() {
        let a = p("x1^2 - 1");
        let b = p("x1*u1 - 1");
        let l = Layout::of([&a, &b]);
        let ord = MonomialOrder::Lex;
        let (da, db) = (l.to_dense(&a, ord), l.to_dense(&b, ord));
        let m = l.to_dense(&p("x1"), ord).lm().clone();
        let u = l.to_dense(&p("u1"), ord).lm().clone();
        let s = da.combine(&BigInt::one(), &DPoly { terms: vec![] }, &m, &BigInt::one(), ord);
        assert_eq!(l.to_sparse(&s), a);
        let uda = DPoly { terms: da.terms.iter().map(|(mm, c)| (mm.mul(&u), c.clone())).collect() };
        let r = uda.combine(&BigInt::one(), &db, &m, &BigInt::one(), ord);
        assert_eq!(l.to_sparse(&r), p("x1 - u1"));
    }
}
