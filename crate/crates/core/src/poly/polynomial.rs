use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Term, Variable};

/// Sparse multivariate polynomial over the integers.
///
/// Monomials live in an ordered map keyed by [`Term`] (lex order), so two
/// equal polynomials are always structurally identical. Zero coefficients
/// are never stored; the zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeMap<Term, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Polynomial::monomial(c, Term::one())
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::monomial(1, Term::var(v))
    }

    pub fn monomial<C: Into<BigInt>>(c: C, t: Term) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(t, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Term, BigInt)>>(it: I) -> Self {
        let mut terms: BTreeMap<Term, BigInt> = BTreeMap::new();
        for (t, c) in it {
            *terms.entry(t).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Term::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Term, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Term) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    /// Lex-leading term and its coefficient.
    pub fn leading(&self) -> Option<(&Term, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|t| t.variables()).collect()
    }

    pub fn max_variable(&self) -> Option<Variable> {
        self.terms.keys().filter_map(Term::max_variable).max()
    }

    pub fn contains_var(&self, v: Variable) -> bool {
        self.terms.keys().any(|t| t.degree_in(v) > 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Term::total_degree).max().unwrap_or(0)
    }

    /// Degree in `v`; zero for the zero polynomial.
    pub fn degree_in(&self, v: Variable) -> u32 {
        self.terms.keys().map(|t| t.degree_in(v)).max().unwrap_or(0)
    }

    /// Coefficients of `self` viewed as a polynomial in `v`, indexed by
    /// degree. Empty for the zero polynomial.
    pub fn coeffs_in(&self, v: Variable) -> Vec<Polynomial> {
        if self.is_zero() {
            return Vec::new();
        }
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<BTreeMap<Term, BigInt>> = vec![BTreeMap::new(); d + 1];
        for (t, c) in &self.terms {
            let (e, rest) = t.split_off(v);
            buckets[e as usize].insert(rest, c.clone());
        }
        buckets.into_iter().map(|terms| Polynomial { terms }).collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs(v: Variable, coeffs: &[Polynomial]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in coeffs.iter().enumerate() {
            let pow = Term::var_pow(v, e as u32);
            for (t, k) in &c.terms {
                terms.insert(t.mul(&pow), k.clone());
            }
        }
        Polynomial { terms }
    }

    /// Coefficient of `v^deg(v)`, a polynomial free of `v`.
    pub fn leading_coeff(&self, v: Variable) -> Polynomial {
        self.coeffs_in(v).pop().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect(),
        }
    }

    pub fn mul_term(&self, t: &Term, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(s, c)| (s.mul(t), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the integer content, keeping the sign.
    pub fn primitive(&self) -> Polynomial {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c / &g)).collect(),
        }
    }

    /// Content-free with a positive lex-leading coefficient.
    pub fn normalized(&self) -> Polynomial {
        let p = self.primitive();
        match p.leading() {
            Some((_, c)) if c.is_negative() => -p,
            _ => p,
        }
    }

    /// Greatest power product dividing every monomial.
    pub fn monomial_content(&self) -> Term {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Term::one();
        };
        let mut g = first.clone();
        for t in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(t);
        }
        g
    }

    /// Divides every monomial by `t`; `None` unless `t` divides all of them.
    pub fn div_term(&self, t: &Term) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (s, c) in &self.terms {
            terms.insert(s.div(t)?, c.clone());
        }
        Some(Polynomial { terms })
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, else `None`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let (dt, dc) = divisor.leading().map(|(t, c)| (t.clone(), c.clone()))?;
        if divisor.num_terms() == 1 {
            let mut terms = BTreeMap::new();
            for (s, c) in &self.terms {
                let (q, r) = c.div_rem(&dc);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(s.div(&dt)?, q);
            }
            return Some(Polynomial { terms });
        }
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((rt, rc)) = rem.leading().map(|(t, c)| (t.clone(), c.clone())) {
            let qt = rt.div(&dt)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            // Every term of the quotient must still fit under the dividend.
            rem.sub_assign_scaled(divisor, &qt, &qc);
            quotient.insert(qt, qc);
        }
        Some(Polynomial { terms: quotient })
    }

    /// `self -= k * t * other`.
    pub fn sub_assign_scaled(&mut self, other: &Polynomial, t: &Term, k: &BigInt) {
        for (s, c) in &other.terms {
            let key = s.mul(t);
            let prod = c * k;
            match self.terms.get_mut(&key) {
                Some(v) => {
                    *v -= prod;
                    if v.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, -prod);
                }
            }
        }
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Variable, value: &Polynomial) -> Polynomial {
        if !self.contains_var(v) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(v);
        // Horner
        let mut acc = Polynomial::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Variable) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().filter_map(|(t, c)| {
            let (e, rest) = t.split_off(v);
            (e > 0).then(|| (rest.mul(&Term::var_pow(v, e - 1)), c * BigInt::from(e)))
        }))
    }

    /// Exact rational value under `assignment`.
    pub fn evaluate(&self, assignment: &BTreeMap<Variable, BigRational>) -> Result<BigRational, PolyError> {
        let mut sum = BigRational::zero();
        for (t, c) in &self.terms {
            let mut val = BigRational::from_integer(c.clone());
            for &(v, e) in t.powers() {
                let x = assignment.get(&v).ok_or(PolyError::MissingVariable(v))?;
                val *= num_traits::pow(x.clone(), e as usize);
            }
            sum += val;
        }
        Ok(sum)
    }

    /// Partially evaluates the variables present in `assignment`, leaving a
    /// polynomial in the remaining variables with rational coefficients
    /// returned as `(numerator polynomial, common denominator)`.
    pub fn evaluate_partial(
        &self,
        assignment: &BTreeMap<Variable, BigRational>,
    ) -> (Polynomial, BigInt) {
        let mut acc: Vec<(Term, BigRational)> = Vec::new();
        for (t, c) in &self.terms {
            let mut val = BigRational::from_integer(c.clone());
            let mut rest = Vec::new();
            for &(v, e) in t.powers() {
                match assignment.get(&v) {
                    Some(x) => val *= num_traits::pow(x.clone(), e as usize),
                    None => rest.push((v, e)),
                }
            }
            acc.push((Term::from_powers(rest), val));
        }
        let den = acc.iter().fold(BigInt::one(), |d, (_, v)| d.lcm(v.denom()));
        let poly = Polynomial::from_terms(
            acc.into_iter()
                .map(|(t, v)| (t, v.numer() * (&den / v.denom()))),
        );
        (poly, den)
    }

    /// Renames variables through `f`; the result is re-canonicalized.
    pub fn map_variables(&self, f: impl Fn(Variable) -> Variable) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(t, c)| {
            (Term::from_powers(t.powers().iter().map(|&(v, e)| (f(v), e))), c.clone())
        }))
    }

    /// Equality up to a nonzero integer factor (sign and content).
    pub fn equal_up_to_unit(&self, other: &Polynomial) -> bool {
        self.normalized() == other.normalized()
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut terms = big.terms.clone();
        for (t, c) in &small.terms {
            match terms.get_mut(t) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(t);
                    }
                }
                None => {
                    terms.insert(t.clone(), c.clone());
                }
            }
        }
        Polynomial { terms }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.sub_assign_scaled(rhs, &Term::one(), &BigInt::one());
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if rhs.terms.len() == 1 {
            let (t, c) = rhs.leading().unwrap();
            return self.mul_term(t, c);
        }
        if self.terms.len() == 1 {
            let (t, c) = self.leading().unwrap();
            return rhs.mul_term(t, c);
        }
        let mut acc: HashMap<Term, BigInt> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                *acc.entry(s.mul(t)).or_default() += a * b;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Canonical rendering: monomials in descending lex order, variables in
/// descending order inside each monomial, e.g. `-u2*u1*x1 - u3^2*u1 + u3*u1^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{mag}*{t}")?;
            }
        }
        Ok(())
    }
}

// Serialized as the canonical text rendering.
impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_polynomial(&s).map_err(serde::de::Error::custom)
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
    fn add_examples() {
        assert_eq!(p("x1 + u1") + p("-u1"), p("x1"));
        assert_eq!(p("2*x1 - u1") + Polynomial::zero(), p("2*x1 - u1"));
        assert_eq!(p("2*x1 - u1") + p("2*x1 - u1"), p("4*x1 - 2*u1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x1 - u1") * p("x1 + u1"), p("x1^2 - u1^2"));
        assert_eq!(p("3*x2*u1 - 7") * Polynomial::one(), p("3*x2*u1 - 7"));
        assert_eq!(p("u3 - u1") * p("x2"), p("u3*x2 - u1*x2"));
    }

    #[test]
    fn degree_examples() {
        let x1 = Variable::dep(1);
        assert_eq!(p("u2*x1^2 - u2*u1*x1").degree_in(x1), 2);
        assert_eq!(p("u1").degree_in(x1), 0);
        assert_eq!(Polynomial::zero().degree_in(x1), 0);
    }

    #[test]
    fn leading_coeff_examples() {
        let (x1, x2) = (Variable::dep(1), Variable::dep(2));
        assert_eq!(p("(u3 - u1)*x2 + u2*x1").leading_coeff(x2), p("u3 - u1"));
        assert_eq!(p("-u2*u1*x1 - u3^2*u1 + u3*u1^2").leading_coeff(x1), p("-u2*u1"));
        assert_eq!(p("u5").leading_coeff(x1), p("u5"));
    }

    #[test]
    fn rendering_is_descending_lex() {
        let q = p("u3*u1^2 - u3^2*u1 - u2*u1*x1");
        assert_eq!(q.to_string(), "-u2*u1*x1 - u3^2*u1 + u3*u1^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("2*x1 - 3").to_string(), "2*x1 - 3");
    }

    #[test]
    fn evaluate_examples() {
        let mut a = BTreeMap::new();
        a.insert(Variable::dep(1), BigRational::new(1.into(), 2.into()));
        a.insert(Variable::free(1), BigRational::one());
        assert!(p("2*x1 - u1").evaluate(&a).unwrap().is_zero());
        assert!(Polynomial::zero().evaluate(&BTreeMap::new()).unwrap().is_zero());
        assert_eq!(
            p("u2").evaluate(&a),
            Err(PolyError::MissingVariable(Variable::free(2)))
        );
    }

    #[test]
    fn midsegment_statement_vanishes_on_instance() {
        // A(0,0), B(2,0), C(0,2); B1 = mid AC = (0,1), C1 = mid AB = (1,0).
        // Variables follow the unpinned numbering A(u0,u1) B(u2,u3) C(u4,u5),
        // B1(x0,x1), C1(x2,x3).
        let g = p("(x2 - x0)*(u5 - u3) - (x3 - x1)*(u4 - u2)");
        let vals = [
            (Variable::free(0), 0),
            (Variable::free(1), 0),
            (Variable::free(2), 2),
            (Variable::free(3), 0),
            (Variable::free(4), 0),
            (Variable::free(5), 2),
            (Variable::dep(0), 0),
            (Variable::dep(1), 1),
            (Variable::dep(2), 1),
            (Variable::dep(3), 0),
        ];
        let a: BTreeMap<_, _> = vals
            .iter()
            .map(|&(v, k)| (v, BigRational::from_integer(k.into())))
            .collect();
        // Direct arithmetic: (1 - 0)*(2 - 0) - (0 - 1)*(0 - 2) = 2 - 2 = 0.
        assert!(g.evaluate(&a).unwrap().is_zero());
    }

    #[test]
    fn exact_division() {
        let a = p("u1*x1^2 + u1*u2*x1 - 3*u2");
        let b = p("u2 + x1");
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(p("6*x1").div_exact(&p("4")), None);
    }

    #[test]
    fn substitute_and_derivative() {
        let x1 = Variable::dep(1);
        assert_eq!(p("x1^2 + x1*u1").substitute(x1, &p("u2")), p("u2^2 + u2*u1"));
        assert_eq!(p("x1^3*u1 + x1").derivative(x1), p("3*x1^2*u1 + 1"));
    }

    #[test]
    fn monomial_content() {
        assert_eq!(p("-u1*u2*x1 + u1^2*u2").monomial_content(), Term::from_powers([(Variable::free(1), 1), (Variable::free(2), 1)]));
        assert!(p("x1 + 1").monomial_content().is_one());
    }
}
