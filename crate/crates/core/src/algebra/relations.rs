//! Polynomial forms of the basic geometric relations over symbolic point
//! coordinates.

use crate::poly::Polynomial;

/// A point given by its two coordinate polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pt {
    pub x: Polynomial,
    pub y: Polynomial,
}

impl Pt {
    pub fn new(x: Polynomial, y: Polynomial) -> Self {
        Pt { x, y }
    }

    pub fn sub(&self, o: &Pt) -> Pt {
        Pt::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Pt) -> Pt {
        Pt::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn dot(&self, o: &Pt) -> Polynomial {
        &(&self.x * &o.x) + &(&self.y * &o.y)
    }

    pub fn cross(&self, o: &Pt) -> Polynomial {
        &(&self.x * &o.y) - &(&self.y * &o.x)
    }

    /// Quarter turn used for perpendicular directions: `(dx, dy) -> (dy, -dx)`.
    pub fn rot(&self) -> Pt {
        Pt::new(self.y.clone(), -&self.x)
    }

    pub fn norm2(&self) -> Polynomial {
        self.dot(self)
    }
}

/// A line as a point on it plus a direction.
#[derive(Clone, Debug)]
pub struct LineRep {
    pub point: Pt,
    pub dir: Pt,
}

impl LineRep {
    /// Line through `a` and `b`; the direction is `a - b`.
    pub fn through(a: &Pt, b: &Pt) -> Self {
        LineRep { point: a.clone(), dir: a.sub(b) }
    }

    pub fn perp_through(p: &Pt, l: &LineRep) -> Self {
        LineRep { point: p.clone(), dir: l.dir.rot() }
    }

    pub fn parallel_through(p: &Pt, l: &LineRep) -> Self {
        LineRep { point: p.clone(), dir: l.dir.clone() }
    }

    /// Vanishes iff `x` lies on the line. For a line through `A, B` this is
    /// the collinearity polynomial of `x, A, B`.
    pub fn incidence(&self, x: &Pt) -> Polynomial {
        x.sub(&self.point).cross(&self.dir)
    }
}

/// A circle in implicit form `k*(x^2 + y^2) + a*x + b*y + c`.
#[derive(Clone, Debug)]
pub struct CircleRep {
    pub k: Polynomial,
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
}

impl CircleRep {
    pub fn centered(center: &Pt, through: &Pt) -> Self {
        let two = Polynomial::constant(2);
        CircleRep {
            k: Polynomial::one(),
            a: -(&two * &center.x),
            b: -(&two * &center.y),
            c: &(&two * &center.dot(through)) - &through.norm2(),
        }
    }

    /// Circle through three points, from the 4x4 determinant with rows
    /// `[x^2 + y^2, x, y, 1]`.
    pub fn circumcircle(p: &Pt, q: &Pt, r: &Pt) -> Self {
        let rows: Vec<[Polynomial; 4]> = [p, q, r]
            .iter()
            .map(|pt| [pt.norm2(), pt.x.clone(), pt.y.clone(), Polynomial::one()])
            .collect();
        let minor = |skip: usize| {
            let m: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, v)| v.clone()).collect())
                .collect();
            det3(&m)
        };
        CircleRep { k: minor(0), a: -minor(1), b: minor(2), c: -minor(3) }
    }

    pub fn incidence(&self, x: &Pt) -> Polynomial {
        &(&(&self.k * &x.norm2()) + &(&self.a * &x.x)) + &(&(&self.b * &x.y) + &self.c)
    }

    /// Linear condition on the second intersection `x` of a line with
    /// direction `dir` through the circle point `known`:
    /// `(k*(x + known) + (a, b)) . dir = 0`.
    pub fn second_intersection(&self, x: &Pt, known: &Pt, dir: &Pt) -> Polynomial {
        let s = x.add(known);
        let v = Pt::new(&(&self.k * &s.x) + &self.a, &(&self.k * &s.y) + &self.b);
        v.dot(dir)
    }
}

fn det3(m: &[Vec<Polynomial>]) -> Polynomial {
    let t = |i: usize, j: usize, k: usize| &(&m[0][i] * &m[1][j]) * &m[2][k];
    let pos = &(&t(0, 1, 2) + &t(1, 2, 0)) + &t(2, 0, 1);
    let neg = &(&t(2, 1, 0) + &t(0, 2, 1)) + &t(1, 0, 2);
    &pos - &neg
}

pub fn midpoint(m: &Pt, a: &Pt, b: &Pt) -> [Polynomial; 2] {
    let two = Polynomial::constant(2);
    [
        &(&two * &m.x) - &(&a.x + &b.x),
        &(&two * &m.y) - &(&a.y + &b.y),
    ]
}

/// `(xa - xb)(yb - yc) - (ya - yb)(xb - xc)`.
pub fn collinear(a: &Pt, b: &Pt, c: &Pt) -> Polynomial {
    a.sub(b).cross(&b.sub(c))
}

pub fn perpendicular(l: &LineRep, m: &LineRep) -> Polynomial {
    l.dir.dot(&m.dir)
}

pub fn parallel(l: &LineRep, m: &LineRep) -> Polynomial {
    l.dir.cross(&m.dir)
}

/// `|AB|^2 - |CD|^2`.
pub fn congruent(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Polynomial {
    &a.sub(b).norm2() - &c.sub(d).norm2()
}

pub fn identical(a: &Pt, b: &Pt) -> [Polynomial; 2] {
    [&a.x - &b.x, &a.y - &b.y]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }
    fn pt(x: &str, y: &str) -> Pt {
        Pt::new(p(x), p(y))
    }

    #[test]
    fn midpoint_form() {
        let [fx, fy] = midpoint(&pt("x1", "x2"), &pt("u1", "u2"), &pt("u3", "u4"));
        assert_eq!(fx, p("2*x1 - u1 - u3"));
        assert_eq!(fy, p("2*x2 - u2 - u4"));
    }

    #[test]
    fn orthocenter_perpendicular_form() {
        // A(0,0), B(0,u1), C(u2,u3), H(x1,x2): AH perpendicular to BC.
        let (a, b, c, h) = (pt("0", "0"), pt("0", "u1"), pt("u2", "u3"), pt("x1", "x2"));
        let alt = LineRep::perp_through(&a, &LineRep::through(&b, &c));
        assert_eq!(alt.incidence(&h), p("(u3 - u1)*x2 + u2*x1"));
        assert_eq!(perpendicular(&LineRep::through(&a, &h), &LineRep::through(&b, &c)), p("(u3 - u1)*x2 + u2*x1"));
    }

    #[test]
    fn collinear_form() {
        let f = collinear(&pt("x2", "x3"), &pt("0", "u1"), &pt("u2", "u3"));
        assert_eq!(f, p("u2*x3 + (u1 - u3)*x2 - u2*u1"));
    }

    #[test]
    fn circumcircle_through_its_points() {
        let (a, b, c) = (pt("0", "0"), pt("0", "u1"), pt("u2", "u3"));
        let circ = CircleRep::circumcircle(&a, &b, &c);
        for q in [&a, &b, &c] {
            assert!(circ.incidence(q).is_zero());
        }
        let d = pt("u4", "x1");
        let expected = p("u2*x1^2 - u2*u1*x1 + u4^2*u2 - u4*u3^2 + u4*u3*u1 - u4*u2^2");
        assert_eq!(circ.incidence(&d).div_exact(&p("u1")).map(|q| q.normalized()), Some(expected));
    }

    #[test]
    fn centered_circle() {
        let circ = CircleRep::centered(&pt("u1", "u2"), &pt("u3", "u4"));
        assert!(circ.incidence(&pt("u3", "u4")).is_zero());
        assert!(circ.incidence(&pt("2*u1 - u3", "2*u2 - u4")).is_zero());
    }

    #[test]
    fn identical_self() {
        let a = pt("u1", "u2");
        assert_eq!(identical(&a, &a), [Polynomial::zero(), Polynomial::zero()]);
    }
}
