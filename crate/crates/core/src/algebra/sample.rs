//! Random rational instances of a construction, computed numerically and
//! independently of the polynomial encoding.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{Coordinate, CoordinateAssignment, PinAxis, PointRole};
use crate::poly::Variable;
use crate::protocol::{CircleExpr, ConstructionProtocol, Label, LineExpr, StepKind};

type Q = BigRational;

#[derive(Clone, Debug, PartialEq)]
struct V2(Q, Q);

impl V2 {
    fn sub(&self, o: &V2) -> V2 {
        V2(&self.0 - &o.0, &self.1 - &o.1)
    }
    fn add(&self, o: &V2) -> V2 {
        V2(&self.0 + &o.0, &self.1 + &o.1)
    }
    fn scale(&self, k: &Q) -> V2 {
        V2(&self.0 * k, &self.1 * k)
    }
    fn dot(&self, o: &V2) -> Q {
        &self.0 * &o.0 + &self.1 * &o.1
    }
    fn cross(&self, o: &V2) -> Q {
        &self.0 * &o.1 - &self.1 * &o.0
    }
}

/// A concrete configuration: every point's position, plus the value of
/// each coordinate variable.
#[derive(Clone, Debug)]
pub struct Instance {
    pub points: BTreeMap<Label, (Q, Q)>,
    pub values: BTreeMap<Variable, Q>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleError {
    /// The random choice hit a degenerate configuration; draw again.
    Degenerate,
    /// The numeric position disagrees with the symbolic coordinates.
    Mismatch(Label),
}

fn rand_q<R: Rng>(rng: &mut R) -> Q {
    Q::new(BigInt::from(rng.gen_range(-40i64..=40)), BigInt::from(rng.gen_range(1i64..=7)))
}

fn rand_nonzero<R: Rng>(rng: &mut R) -> Q {
    loop {
        let q = rand_q(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

struct Line {
    p: V2,
    d: V2,
}

struct Circle {
    center: V2,
    /// A point known to lie on the circle.
    on: V2,
}

struct Ctx<'a> {
    pts: &'a BTreeMap<Label, V2>,
}

impl Ctx<'_> {
    fn pt(&self, l: &Label) -> V2 {
        self.pts[l].clone()
    }

    fn line(&self, l: &LineExpr) -> Line {
        match l {
            LineExpr::Through(a, b) => Line { p: self.pt(a), d: self.pt(a).sub(&self.pt(b)) },
            LineExpr::PerpThrough(p, m) => {
                let d = self.line(m).d;
                Line { p: self.pt(p), d: V2(d.1.clone(), -d.0) }
            }
            LineExpr::ParallelThrough(p, m) => Line { p: self.pt(p), d: self.line(m).d },
        }
    }

    fn circle(&self, c: &CircleExpr) -> Result<Circle, SampleError> {
        match c {
            CircleExpr::Centered { center, through } => Ok(Circle { center: self.pt(center), on: self.pt(through) }),
            CircleExpr::Circumcircle(a, b, c) => {
                let (a, b, c) = (self.pt(a), self.pt(b), self.pt(c));
                let two = Q::from_integer(2.into());
                // Perpendicular bisectors of AB and AC.
                let mab = a.add(&b).scale(&(Q::one() / &two));
                let mac = a.add(&c).scale(&(Q::one() / &two));
                let dab = b.sub(&a);
                let dac = c.sub(&a);
                let l1 = Line { p: mab, d: V2(dab.1.clone(), -dab.0.clone()) };
                let l2 = Line { p: mac, d: V2(dac.1.clone(), -dac.0.clone()) };
                Ok(Circle { center: intersect(&l1, &l2)?, on: a })
            }
        }
    }
}

fn intersect(l: &Line, m: &Line) -> Result<V2, SampleError> {
    let den = l.d.cross(&m.d);
    if den.is_zero() {
        return Err(SampleError::Degenerate);
    }
    let s = m.p.sub(&l.p).cross(&m.d) / den;
    Ok(l.p.add(&l.d.scale(&s)))
}

/// Reflection of `p` across the line through `center` perpendicular to
/// `d`: the second intersection of the circle with the line through `p`.
fn second_point(c: &Circle, p: &V2, d: &V2) -> Result<V2, SampleError> {
    let n = d.dot(d);
    if n.is_zero() {
        return Err(SampleError::Degenerate);
    }
    let k = p.sub(&c.center).dot(d) * Q::from_integer(2.into()) / n;
    Ok(p.sub(&d.scale(&k)))
}

/// Draws a random genuine instance of `proto` compatible with the pinning
/// in `a`, then reads off the value of every coordinate variable.
pub fn sample_instance<R: Rng>(
    proto: &ConstructionProtocol,
    a: &CoordinateAssignment,
    rng: &mut R,
) -> Result<Instance, SampleError> {
    let mut pts: BTreeMap<Label, V2> = BTreeMap::new();
    for step in &proto.steps {
        let pc = a.get(&step.label).ok_or_else(|| SampleError::Mismatch(step.label.clone()))?;
        let ctx = Ctx { pts: &pts };
        let pos = match &step.kind {
            StepKind::FreePoint => match pc.role {
                PointRole::Pinned if pc.x == Coordinate::Zero && pc.y == Coordinate::Zero => {
                    V2(Q::zero(), Q::zero())
                }
                PointRole::Pinned => match a.axis {
                    PinAxis::X => V2(rand_nonzero(rng), Q::zero()),
                    PinAxis::Y => V2(Q::zero(), rand_nonzero(rng)),
                },
                _ => V2(rand_q(rng), rand_q(rng)),
            },
            StepKind::Midpoint(p, q) => ctx.pt(p).add(&ctx.pt(q)).scale(&Q::new(1.into(), 2.into())),
            StepKind::IntersectLines(l, m) => intersect(&ctx.line(l), &ctx.line(m))?,
            StepKind::FootOfPerpendicular(p, l) => {
                let line = ctx.line(l);
                let n = line.d.dot(&line.d);
                if n.is_zero() {
                    return Err(SampleError::Degenerate);
                }
                let p = ctx.pt(p);
                let k = p.sub(&line.p).dot(&line.d) / n;
                line.p.add(&line.d.scale(&k))
            }
            StepKind::PointOnLine(l) => {
                let line = ctx.line(l);
                line.p.add(&line.d.scale(&rand_q(rng)))
            }
            StepKind::PointOnCircle(c) => {
                let circ = ctx.circle(c)?;
                let d = V2(Q::one(), rand_q(rng));
                second_point(&circ, &circ.on, &d)?
            }
            StepKind::SecondIntersectLineCircle(l, c, p) => {
                let circ = ctx.circle(c)?;
                second_point(&circ, &ctx.pt(p), &ctx.line(l).d)?
            }
        };
        pts.insert(step.label.clone(), pos);
    }

    let mut values: BTreeMap<Variable, Q> = BTreeMap::new();
    for pc in &a.points {
        let pos = &pts[&pc.label];
        for (c, val) in [(pc.x, &pos.0), (pc.y, &pos.1)] {
            match c.variable() {
                None if !val.is_zero() => return Err(SampleError::Mismatch(pc.label.clone())),
                None => {}
                Some(v) => {
                    if let Some(old) = values.insert(v, val.clone()) {
                        if &old != val {
                            return Err(SampleError::Mismatch(pc.label.clone()));
                        }
                    }
                }
            }
        }
    }
    let points = pts.into_iter().map(|(l, V2(x, y))| (l, (x, y))).collect();
    Ok(Instance { points, values })
}
