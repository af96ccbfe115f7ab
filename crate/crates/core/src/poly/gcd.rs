//! Multivariate gcd over the integers (recursive primitive PRS) and the
//! light factor splitting used to present non-degeneracy conditions.

use num_integer::Integer;
use num_traits::{One, Signed};

use super::{pseudo_divide, Polynomial, Variable};

/// Greatest common divisor, normalized (content-free apart from the integer
/// gcd of the contents, positive leading coefficient).
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.normalized_keep_content();
    }
    if b.is_zero() {
        return a.normalized_keep_content();
    }
    if a.is_constant() && b.is_constant() {
        let g = a.constant_value().unwrap().gcd(&b.constant_value().unwrap());
        return Polynomial::constant(g);
    }
    let v = match (a.max_variable(), b.max_variable()) {
        (Some(x), Some(y)) => x.max(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => unreachable!(),
    };
    if !a.contains_var(v) {
        return gcd(a, &content_in(b, v));
    }
    if !b.contains_var(v) {
        return gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let g_content = gcd(&ca, &cb);
    let mut r0 = a.div_exact(&ca).expect("content divides");
    let mut r1 = b.div_exact(&cb).expect("content divides");
    if r0.degree_in(v) < r1.degree_in(v) {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let r = pseudo_divide(&r0, &r1, v).expect("r1 has positive degree").remainder;
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            r1 = Polynomial::one();
            break;
        }
        r0 = r1;
        r1 = primitive_part_in(&r, v);
    }
    let pp = if r1.contains_var(v) { primitive_part_in(&r1, v) } else { Polynomial::one() };
    (&g_content * &pp).normalized_keep_content()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &Polynomial, v: Variable) -> Polynomial {
    let mut g = Polynomial::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() && g.constant_value().is_some_and(|k| k.is_one()) {
            break;
        }
    }
    g
}

pub fn primitive_part_in(p: &Polynomial, v: Variable) -> Polynomial {
    let c = content_in(p, v);
    if c.is_zero() {
        return p.clone();
    }
    p.div_exact(&c).expect("content divides").normalized()
}

/// Square-free part: `p / gcd(p, dp/dv for every v)`, normalized.
pub fn square_free_part(p: &Polynomial) -> Polynomial {
    if p.is_constant() {
        return p.normalized();
    }
    let mut g = p.clone();
    for v in p.variables() {
        g = gcd(&g, &p.derivative(v));
        if g.is_constant() {
            return p.normalized();
        }
    }
    p.div_exact(&g).expect("gcd divides").normalized()
}

/// Splits `p` into normalized, square-free, pairwise distinct factors by
/// peeling off single-variable monomial factors and recursive contents.
/// This is not a full factorization; it is the decomposition used to report
/// conditions like `-u2*u1 != 0` as `u1 != 0, u2 != 0`.
pub fn split_factors(p: &Polynomial) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    let push = |f: Polynomial, out: &mut Vec<Polynomial>| {
        if f.is_constant() {
            return;
        }
        let f = square_free_part(&f);
        if !out.contains(&f) {
            out.push(f);
        }
    };
    if p.is_constant() {
        return out;
    }
    let mono = p.monomial_content();
    for &(v, _) in mono.powers().iter().rev() {
        push(Polynomial::var(v), &mut out);
    }
    let rest = p.div_term(&mono).expect("monomial content divides");
    let mut stack = vec![rest];
    while let Some(f) = stack.pop() {
        if f.is_constant() {
            continue;
        }
        let v = f.max_variable().unwrap();
        let c = content_in(&f, v);
        if c.is_constant() {
            push(f, &mut out);
        } else {
            let pp = f.div_exact(&c).expect("content divides");
            stack.push(pp);
            stack.push(c);
        }
    }
    out
}

impl Polynomial {
    /// Positive leading coefficient, integer content kept.
    fn normalized_keep_content(&self) -> Polynomial {
        match self.leading() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }
}
