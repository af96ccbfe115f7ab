
use super::{PolyError, Polynomial, Variable};

/// Result of pseudo-dividing `p` by `q` in a main variable `v`:
/// `initial^exponent * p = quotient * q + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoDivision {
    pub quotient: Polynomial,
    pub remainder: Polynomial,
    pub initial: Polynomial,
    pub exponent: u32,
}

impl PseudoDivision {
    /// Expands `c^e * p - t * q - r`; zero iff the identity holds.
    pub fn residual(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        &(&self.initial.pow(self.exponent) * p) - &(&(&self.quotient * q) + &self.remainder)
    }
}

/// Pseudo-division of `p` by `q` with respect to `v`.
///
/// The exponent starts at the number of reduction steps actually taken
/// (at most `deg_v(p) - deg_v(q) + 1`) and is then lowered while the
/// initial still divides both quotient and remainder.
pub fn pseudo_divide(p: &Polynomial, q: &Polynomial, v: Variable) -> Result<PseudoDivision, PolyError> {
    if q.is_zero() {
        return Err(PolyError::DivisorZero);
    }
    let dq = q.degree_in(v) as usize;
    if dq == 0 {
        return Err(PolyError::DivisorFree(v));
    }
    let qc = q.coeffs_in(v);
    let c = qc[dq].clone();
    let mut r = p.coeffs_in(v);
    trim(&mut r);
    let tlen = (r.len()).saturating_sub(dq);
    let mut t = vec![Polynomial::zero(); tlen];
    let mut e = 0u32;

    while r.len() > dq {
        let d = r.len() - 1;
        let lead = r[d].clone();
        let shift = d - dq;
        for ri in r.iter_mut() {
            *ri = &c * &*ri;
        }
        for (j, qj) in qc.iter().enumerate() {
            if !qj.is_zero() {
                r[j + shift] = &r[j + shift] - &(&lead * qj);
            }
        }
        debug_assert!(r[d].is_zero());
        for ti in t.iter_mut() {
            *ti = &c * &*ti;
        }
        t[shift] = &t[shift] + &lead;
        e += 1;
        trim(&mut r);
    }

    // Drop unnecessary powers of the initial.
    while e > 0 {
        let divided_t: Option<Vec<_>> = t.iter().map(|x| x.div_exact(&c)).collect();
        let Some(dt) = divided_t else { break };
        let divided_r: Option<Vec<_>> = r.iter().map(|x| x.div_exact(&c)).collect();
        let Some(dr) = divided_r else { break };
        t = dt;
        r = dr;
        e -= 1;
    }

    Ok(PseudoDivision {
        quotient: Polynomial::from_coeffs(v, &t),
        remainder: Polynomial::from_coeffs(v, &r),
        initial: c,
        exponent: e,
    })
}

fn trim(v: &mut Vec<Polynomial>) {
    while v.last().is_some_and(Polynomial::is_zero) {
        v.pop();
    }
}
