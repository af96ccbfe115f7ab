use std::fmt;

use smallvec::SmallVec;

use super::{VarClass, Variable};

/// A power product, stored as `(variable, exponent)` pairs sorted by
/// variable in descending order. The empty list is the constant term.
///
/// Because the powers are sorted descending, the derived lexicographic
/// comparison on the list is exactly the lex monomial order induced by the
/// variable order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Term {
    powers: SmallVec<[(Variable, u32); 4]>,
}

impl Term {
    pub fn one() -> Self {
        Term::default()
    }

    pub fn var(v: Variable) -> Self {
        Term::var_pow(v, 1)
    }

    pub fn var_pow(v: Variable, exp: u32) -> Self {
        let mut powers = SmallVec::new();
        if exp > 0 {
            powers.push((v, exp));
        }
        Term { powers }
    }

    /// Builds a term from arbitrary `(variable, exponent)` pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(it: I) -> Self {
        let mut powers: SmallVec<[(Variable, u32); 4]> = it.into_iter().filter(|p| p.1 > 0).collect();
        powers.sort_by_key(|a| std::cmp::Reverse(a.0));
        let mut merged: SmallVec<[(Variable, u32); 4]> = SmallVec::new();
        for (v, e) in powers {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Term { powers: merged }
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.powers
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree_in(&self, v: Variable) -> u32 {
        self.powers.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.powers.iter().map(|p| p.1).sum()
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.powers.iter().map(|p| p.0)
    }

    pub fn max_variable(&self) -> Option<Variable> {
        self.powers.first().map(|p| p.0)
    }

    pub fn mul(&self, other: &Term) -> Term {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Term { powers: out }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Term) -> Option<Term> {
        let mut out = SmallVec::new();
        let mut j = 0;
        let b = &other.powers;
        for &(v, e) in &self.powers {
            if j < b.len() && b[j].0 > v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                if b[j].1 > e {
                    return None;
                }
                if e > b[j].1 {
                    out.push((v, e - b[j].1));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(Term { powers: out })
    }

    /// Splits off the power of `v`: returns `(exponent, rest)`.
    pub fn split_off(&self, v: Variable) -> (u32, Term) {
        let mut rest = self.clone();
        let mut exp = 0;
        if let Some(pos) = rest.powers.iter().position(|p| p.0 == v) {
            exp = rest.powers.remove(pos).1;
        }
        (exp, rest)
    }

    /// Componentwise minimum of exponents (the gcd of two power products).
    pub fn gcd(&self, other: &Term) -> Term {
        Term::from_powers(self.powers.iter().filter_map(|&(v, e)| {
            let f = other.degree_in(v);
            (f > 0).then_some((v, e.min(f)))
        }))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        // u-part first, then x-part, then z-part; descending inside a group.
        let ordered = [VarClass::Free, VarClass::Dependent, VarClass::Aux]
            .into_iter()
            .flat_map(|class| self.powers.iter().filter(move |p| p.0.class == class));
        for (i, (v, e)) in ordered.enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(i: u32) -> Variable {
        Variable::free(i)
    }
    fn x(i: u32) -> Variable {
        Variable::dep(i)
    }

    #[test]
    fn lex_order_prefers_higher_variable() {
        let a = Term::var(x(1));
        let b = Term::var_pow(u(9), 7);
        assert!(a > b);
        let c = Term::from_powers([(u(3), 2), (u(1), 1)]);
        let d = Term::from_powers([(u(3), 1), (u(1), 2)]);
        assert!(c > d);
        assert!(Term::var(u(1)) > Term::one());
    }

    #[test]
    fn mul_and_div() {
        let a = Term::from_powers([(u(1), 1), (x(2), 2)]);
        let b = Term::from_powers([(x(2), 1), (u(3), 1)]);
        let p = a.mul(&b);
        assert_eq!(p.to_string(), "u3*u1*x2^3");
        assert_eq!(p.div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
    }

    #[test]
    fn from_powers_merges() {
        let t = Term::from_powers([(u(1), 1), (u(1), 2), (u(2), 0)]);
        assert_eq!(t, Term::var_pow(u(1), 3));
    }
}
