//! Translation of construction protocols into polynomial systems.

mod coords;
pub mod relations;
mod sample;

pub use coords::{
    assign_coordinates, assign_with, AssignOptions, Coordinate, CoordinateAssignment, PinAxis, Pinning, PointCoords,
    PointRole,
};
pub use sample::{sample_instance, Instance, SampleError};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Polynomial, Term, VarClass, Variable};
use crate::protocol::{CircleExpr, ConstructionProtocol, Label, LineExpr, Statement, StepKind};
use relations::{CircleRep, LineRep, Pt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown point {0}")]
    UnknownLabel(Label),
    #[error("cannot pin {0}: {1}")]
    BadPin(String, &'static str),
    #[error("line used by {0} is degenerate (its two defining points coincide symbolically)")]
    DegenerateLine(Label),
    #[error("circle used by {0} is degenerate")]
    DegenerateCircle(Label),
}

/// The hypotheses and conclusion of a conjecture in polynomial form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicSystem {
    pub construction_polys: Vec<Polynomial>,
    /// Label of the step each construction polynomial came from.
    pub construction_sources: Vec<Label>,
    pub statement_polys: Vec<Polynomial>,
    /// Polynomials assumed nonzero while algebraizing (cancelled factors,
    /// semi-free coordinate choices).
    pub side_ndgs: Vec<Polynomial>,
    pub dep_vars: Vec<Variable>,
}

pub(crate) fn line_rep(l: &LineExpr, env: &dyn Fn(&Label) -> Result<Pt, AlgebraError>) -> Result<LineRep, AlgebraError> {
    Ok(match l {
        LineExpr::Through(a, b) => LineRep::through(&env(a)?, &env(b)?),
        LineExpr::PerpThrough(p, m) => LineRep::perp_through(&env(p)?, &line_rep(m, env)?),
        LineExpr::ParallelThrough(p, m) => LineRep::parallel_through(&env(p)?, &line_rep(m, env)?),
    })
}

pub(crate) fn circle_rep(
    c: &CircleExpr,
    env: &dyn Fn(&Label) -> Result<Pt, AlgebraError>,
) -> Result<CircleRep, AlgebraError> {
    Ok(match c {
        CircleExpr::Centered { center, through } => CircleRep::centered(&env(center)?, &env(through)?),
        CircleExpr::Circumcircle(a, b, c) => CircleRep::circumcircle(&env(a)?, &env(b)?, &env(c)?),
    })
}

/// Polynomials expressing that `me` is built by `kind`. Free and semi-free
/// steps other than the incidence itself contribute nothing.
pub(crate) fn step_polynomials(
    kind: &StepKind,
    me: &Pt,
    env: &dyn Fn(&Label) -> Result<Pt, AlgebraError>,
) -> Result<Vec<Polynomial>, AlgebraError> {
    Ok(match kind {
        StepKind::FreePoint => vec![],
        StepKind::Midpoint(a, b) => relations::midpoint(me, &env(a)?, &env(b)?).to_vec(),
        StepKind::IntersectLines(l, m) => vec![line_rep(l, env)?.incidence(me), line_rep(m, env)?.incidence(me)],
        StepKind::FootOfPerpendicular(p, l) => {
            let line = line_rep(l, env)?;
            let perp = LineRep::perp_through(&env(p)?, &line);
            vec![perp.incidence(me), line.incidence(me)]
        }
        StepKind::PointOnLine(l) => vec![line_rep(l, env)?.incidence(me)],
        StepKind::PointOnCircle(c) => vec![circle_rep(c, env)?.incidence(me)],
        StepKind::SecondIntersectLineCircle(l, c, p) => {
            let line = line_rep(l, env)?;
            let circ = circle_rep(c, env)?;
            vec![line.incidence(me), circ.second_intersection(me, &env(p)?, &line.dir)]
        }
    })
}

/// Polynomials whose common vanishing expresses `stmt`.
pub fn relation_polynomials(
    stmt: &Statement,
    env: &dyn Fn(&Label) -> Result<Pt, AlgebraError>,
) -> Result<Vec<Polynomial>, AlgebraError> {
    Ok(match stmt {
        Statement::Collinear(a, b, c) => vec![relations::collinear(&env(a)?, &env(b)?, &env(c)?)],
        Statement::Parallel(l, m) => vec![relations::parallel(&line_rep(l, env)?, &line_rep(m, env)?)],
        Statement::Perpendicular(l, m) => vec![relations::perpendicular(&line_rep(l, env)?, &line_rep(m, env)?)],
        Statement::Incident(p, l) => vec![line_rep(l, env)?.incidence(&env(p)?)],
        Statement::IncidentCircle(p, c) => vec![circle_rep(c, env)?.incidence(&env(p)?)],
        Statement::CongruentSegments(a, b, c, d) => {
            vec![relations::congruent(&env(a)?, &env(b)?, &env(c)?, &env(d)?)]
        }
        Statement::Identical(a, b) => relations::identical(&env(a)?, &env(b)?).to_vec(),
    })
}

/// Divides out every monomial factor built from free variables, returning
/// the cofactor and the variables removed.
pub(crate) fn strip_free_monomials(p: &Polynomial) -> (Polynomial, Vec<Variable>) {
    if p.is_zero() {
        return (Polynomial::zero(), vec![]);
    }
    let m = p.monomial_content();
    let free: Vec<(Variable, u32)> = m.powers().iter().filter(|(v, _)| v.class == VarClass::Free).copied().collect();
    if free.is_empty() {
        return (p.clone(), vec![]);
    }
    let t = Term::from_powers(free.iter().copied());
    let q = p.div_term(&t).expect("monomial content divides");
    let mut vars: Vec<Variable> = free.into_iter().map(|(v, _)| v).collect();
    vars.sort();
    (q, vars)
}

/// Builds the polynomial system of `p` under the coordinates `a`.
pub fn algebrize(p: &ConstructionProtocol, a: &CoordinateAssignment) -> Result<AlgebraicSystem, AlgebraError> {
    let env = |l: &Label| a.pt(l).ok_or_else(|| AlgebraError::UnknownLabel(l.clone()));
    let mut sys = AlgebraicSystem {
        construction_polys: vec![],
        construction_sources: vec![],
        statement_polys: vec![],
        side_ndgs: vec![],
        dep_vars: a.dep_vars(),
    };
    let push_side = |sys: &mut AlgebraicSystem, q: Polynomial| {
        if q.is_constant() {
            return;
        }
        let q = q.normalized();
        if !sys.side_ndgs.contains(&q) {
            sys.side_ndgs.push(q);
        }
    };
    for step in &p.steps {
        let pc = a.get(&step.label).ok_or_else(|| AlgebraError::UnknownLabel(step.label.clone()))?;
        for q in &pc.side {
            push_side(&mut sys, q.clone());
        }
        let me = pc.pt();
        for f in step_polynomials(&step.kind, &me, &env)? {
            let (g, vars) = strip_free_monomials(&f);
            if g.is_zero() {
                continue;
            }
            for v in vars {
                push_side(&mut sys, Polynomial::var(v));
            }
            sys.construction_polys.push(g.primitive());
            sys.construction_sources.push(step.label.clone());
        }
    }
    sys.statement_polys = relation_polynomials(&p.goal, &env)?;
    Ok(sys)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::protocol::parse_protocol;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    pub(crate) const ORTHOCENTER: &str = "point A free\npoint B free\npoint C free\n\
        point H intersect (perp A (line B C)) (perp B (line A C))\n\
        prove perpendicular (line C H) (line A B)\n";

    pub(crate) const SIMSON: &str = "point A free\npoint B free\npoint C free\n\
        point D oncircle (circumcircle A B C)\n\
        point M foot D (line A B)\npoint N foot D (line B C)\npoint P foot D (line C A)\n\
        prove collinear M N P\n";

    #[test]
    fn orthocenter_system() {
        let proto = parse_protocol(ORTHOCENTER).unwrap();
        let a = assign_coordinates(&proto).unwrap();
        let sys = algebrize(&proto, &a).unwrap();
        assert_eq!(sys.construction_polys, vec![p("(u3 - u1)*x2 + u2*x1"), p("u3*x2 + u2*x1 - u3*u1")]);
        assert_eq!(sys.statement_polys.len(), 1);
        assert!(sys.statement_polys[0].equal_up_to_unit(&p("(x2 - u3)*u1")));
        assert!(sys.side_ndgs.is_empty());
    }

    #[test]
    fn simson_system() {
        let proto = parse_protocol(SIMSON).unwrap();
        let a = assign_coordinates(&proto).unwrap();
        assert_eq!(a.pt(&"M".into()).unwrap(), Pt::new(p("0"), p("x1")));
        let sys = algebrize(&proto, &a).unwrap();
        let expected = [
            "u2*x1^2 - u2*u1*x1 + u4^2*u2 - u4*u3^2 + u4*u3*u1 - u4*u2^2",
            "(u3 - u1)*x3 + u2*x2 + (u1 - u3)*x1 - u4*u2",
            "u2*x3 + (u1 - u3)*x2 - u2*u1",
            "u3*x5 + u2*x4 - u3*x1 - u4*u2",
            "u2*x5 - u3*x4",
        ];
        assert_eq!(sys.construction_polys.len(), 5);
        for (got, want) in sys.construction_polys.iter().zip(expected) {
            assert!(got.equal_up_to_unit(&p(want)), "{got} vs {want}");
        }
        assert!(sys.statement_polys[0].equal_up_to_unit(&p("x5*x2 - x4*x3 + x4*x1 - x2*x1")));
        assert_eq!(sys.side_ndgs, vec![p("u1")]);
    }

    #[test]
    fn identical_self_is_zero() {
        let proto = parse_protocol("point A free\nprove identical A A\n").unwrap();
        let a = assign_coordinates(&proto).unwrap();
        let sys = algebrize(&proto, &a).unwrap();
        assert_eq!(sys.statement_polys, vec![Polynomial::zero(), Polynomial::zero()]);
        assert!(sys.construction_polys.is_empty());
    }

    #[test]
    fn strip_reports_variables() {
        let (q, vs) = strip_free_monomials(&p("-u2*u1^2*x1 + u2*u1"));
        assert_eq!(q, p("-u1*x1 + 1"));
        assert_eq!(vs, vec![Variable::free(1), Variable::free(2)]);
    }
}
