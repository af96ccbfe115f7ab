use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::relations::Pt;
use super::{step_polynomials, strip_free_monomials, AlgebraError};
use crate::poly::{Polynomial, VarClass, Variable};
use crate::protocol::{ConstructionProtocol, Label, StepKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coordinate {
    Zero,
    FreeVar(u32),
    DepVar(u32),
}

impl Coordinate {
    fn from_var(v: Variable) -> Self {
        match v.class {
            VarClass::Free => Coordinate::FreeVar(v.index),
            _ => Coordinate::DepVar(v.index),
        }
    }

    pub fn variable(&self) -> Option<Variable> {
        match *self {
            Coordinate::Zero => None,
            Coordinate::FreeVar(i) => Some(Variable::free(i)),
            Coordinate::DepVar(i) => Some(Variable::dep(i)),
        }
    }

    pub fn poly(&self) -> Polynomial {
        self.variable().map(Polynomial::var).unwrap_or_default()
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variable() {
            None => f.write_str("0"),
            Some(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PointRole {
    Pinned,
    Free,
    SemiFree,
    Dependent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCoords {
    pub label: Label,
    pub x: Coordinate,
    pub y: Coordinate,
    pub role: PointRole,
    /// Nonvanishing assumptions made while placing this point.
    pub side: Vec<Polynomial>,
}

impl PointCoords {
    pub fn pt(&self) -> Pt {
        Pt::new(self.x.poly(), self.y.poly())
    }
}

/// Where the second pinned point goes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum PinAxis {
    /// `(u, 0)`
    X,
    /// `(0, u)`
    #[default]
    Y,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Pinning {
    /// The two most referenced free points.
    #[default]
    Auto,
    /// Explicit choice of one or two free points.
    Labels(Vec<Label>),
    None,
}

#[derive(Clone, Debug, Default)]
pub struct AssignOptions {
    pub pinning: Pinning,
    pub axis: PinAxis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateAssignment {
    /// In declaration order.
    pub points: Vec<PointCoords>,
    pub next_free: u32,
    pub next_dep: u32,
    pub pinned: Vec<Label>,
    pub axis: PinAxis,
}

impl CoordinateAssignment {
    pub fn get(&self, l: &Label) -> Option<&PointCoords> {
        self.points.iter().find(|p| &p.label == l)
    }

    pub fn pt(&self, l: &Label) -> Option<Pt> {
        self.get(l).map(PointCoords::pt)
    }

    pub fn dep_vars(&self) -> Vec<Variable> {
        (1..self.next_dep).map(Variable::dep).collect()
    }

    pub fn free_vars(&self) -> Vec<Variable> {
        (1..self.next_free).map(Variable::free).collect()
    }
}

/// Coordinates with the default options: automatic pinning, second pinned
/// point on the y-axis.
pub fn assign_coordinates(p: &ConstructionProtocol) -> Result<CoordinateAssignment, AlgebraError> {
    assign_with(p, &AssignOptions::default())
}

fn choose_pins(p: &ConstructionProtocol, pinning: &Pinning) -> Result<Vec<Label>, AlgebraError> {
    let free: Vec<&Label> = p.free_points().collect();
    match pinning {
        Pinning::None => Ok(vec![]),
        Pinning::Labels(ls) => {
            if ls.is_empty() || ls.len() > 2 {
                return Err(AlgebraError::BadPin(format!("{ls:?}"), "give one or two points"));
            }
            if ls.len() == 2 && ls[0] == ls[1] {
                return Err(AlgebraError::BadPin(ls[0].to_string(), "pinned twice"));
            }
            for l in ls {
                if !free.contains(&l) {
                    return Err(AlgebraError::BadPin(l.to_string(), "not a free point"));
                }
            }
            Ok(ls.clone())
        }
        Pinning::Auto => {
            let mut count: BTreeMap<&Label, usize> = BTreeMap::new();
            let refs = p.steps.iter().flat_map(|s| s.kind.references()).chain(p.goal.references());
            for r in refs {
                *count.entry(r).or_default() += 1;
            }
            let mut ranked: Vec<(usize, &Label)> = free.iter().enumerate().map(|(i, l)| (i, *l)).collect();
            // Stable sort keeps declaration order among ties.
            ranked.sort_by_key(|(_, l)| std::cmp::Reverse(count.get(l).copied().unwrap_or(0)));
            ranked.truncate(2);
            // The chosen pair is placed in declaration order.
            ranked.sort();
            Ok(ranked.into_iter().map(|(_, l)| l.clone()).collect())
        }
    }
}

// Placeholders for the coordinates of the point being placed.
const PX: Variable = Variable::aux(u32::MAX - 1);
const PY: Variable = Variable::aux(u32::MAX);

/// `p` as `v - w` for a placeholder `v` and `w` zero or a single variable.
fn solved_form(p: &Polynomial, open: &[Variable]) -> Option<(Variable, Polynomial)> {
    let terms: Vec<_> = p.terms().collect();
    let single = |i: usize| -> Option<Variable> {
        let (t, _) = terms[i];
        match t.powers() {
            [(v, 1)] => Some(*v),
            _ => None,
        }
    };
    match terms.len() {
        1 => {
            let v = single(0)?;
            open.contains(&v).then(|| (v, Polynomial::zero()))
        }
        2 => {
            let (a, b) = (single(0)?, single(1)?);
            let (ca, cb) = (terms[0].1, terms[1].1);
            let unit = |c: &num_bigint::BigInt| c.magnitude() == &1u32.into();
            if !unit(ca) || !unit(cb) || ca == cb {
                return None;
            }
            let pick = open.iter().find(|v| **v == a || **v == b)?;
            let other = if *pick == a { b } else { a };
            Some((*pick, Polynomial::var(other)))
        }
        _ => None,
    }
}

pub fn assign_with(p: &ConstructionProtocol, opts: &AssignOptions) -> Result<CoordinateAssignment, AlgebraError> {
    let pins = choose_pins(p, &opts.pinning)?;
    let mut a = CoordinateAssignment {
        points: vec![],
        next_free: 1,
        next_dep: 1,
        pinned: pins.clone(),
        axis: opts.axis,
    };
    let fresh_free = |a: &mut CoordinateAssignment| {
        let c = Coordinate::FreeVar(a.next_free);
        a.next_free += 1;
        c
    };
    for (i, l) in pins.iter().enumerate() {
        let (x, y) = match (i, opts.axis) {
            (0, _) => (Coordinate::Zero, Coordinate::Zero),
            (_, PinAxis::X) => (fresh_free(&mut a), Coordinate::Zero),
            (_, PinAxis::Y) => (Coordinate::Zero, fresh_free(&mut a)),
        };
        a.points.push(PointCoords { label: l.clone(), x, y, role: PointRole::Pinned, side: vec![] });
    }

    for step in &p.steps {
        if pins.contains(&step.label) {
            continue;
        }
        if step.kind == StepKind::FreePoint {
            let x = fresh_free(&mut a);
            let y = fresh_free(&mut a);
            a.points.push(PointCoords { label: step.label.clone(), x, y, role: PointRole::Free, side: vec![] });
            continue;
        }
        let env = |l: &Label| a.pt(l).ok_or_else(|| AlgebraError::UnknownLabel(l.clone()));
        let me = Pt::new(Polynomial::var(PX), Polynomial::var(PY));
        let mut polys = step_polynomials(&step.kind, &me, &env)?;
        let mut side = vec![];
        let mut open = vec![PX, PY];
        let mut value: BTreeMap<Variable, Polynomial> = BTreeMap::new();

        let role = if step.kind.is_semi_free() {
            let f = &polys[0];
            let (dep, free) = match &step.kind {
                StepKind::PointOnLine(_) => {
                    let cy = f.coeffs_in(PY).get(1).cloned().unwrap_or_default();
                    let cx = f.coeffs_in(PX).get(1).cloned().unwrap_or_default();
                    if !cy.is_zero() {
                        side.push(cy);
                        (PY, PX)
                    } else if !cx.is_zero() {
                        side.push(cx);
                        (PX, PY)
                    } else {
                        return Err(AlgebraError::DegenerateLine(step.label.clone()));
                    }
                }
                _ => {
                    if f.degree_in(PY) == 2 {
                        (PY, PX)
                    } else {
                        return Err(AlgebraError::DegenerateCircle(step.label.clone()));
                    }
                }
            };
            let u = fresh_free(&mut a).poly();
            polys = polys.iter().map(|q| q.substitute(free, &u)).collect();
            value.insert(free, u);
            open.retain(|v| *v == dep);
            PointRole::SemiFree
        } else {
            PointRole::Dependent
        };

        // Equations of the form v = 0 or v = w fix a coordinate outright.
        loop {
            let found = polys.iter().find_map(|f| {
                let (g, vars) = strip_free_monomials(f);
                solved_form(&g.primitive(), &open).map(|s| (s, vars))
            });
            let Some(((v, w), vars)) = found else { break };
            side.extend(vars.into_iter().map(Polynomial::var));
            polys = polys.iter().map(|q| q.substitute(v, &w)).collect();
            for val in value.values_mut() {
                *val = val.substitute(v, &w);
            }
            value.insert(v, w);
            open.retain(|o| *o != v);
        }
        for v in open {
            let d = Polynomial::var(Variable::dep(a.next_dep));
            a.next_dep += 1;
            for val in value.values_mut() {
                *val = val.substitute(v, &d);
            }
            value.insert(v, d);
        }
        let coord = |v: Variable| {
            let val = &value[&v];
            match val.variables().into_iter().next() {
                None => Coordinate::Zero,
                Some(w) => Coordinate::from_var(w),
            }
        };
        let (x, y) = (coord(PX), coord(PY));
        side.retain(|q| !q.is_constant());
        side.dedup();
        a.points.push(PointCoords { label: step.label.clone(), x, y, role, side });
    }
    // Keep declaration order; pinned points were placed first only to
    // number their variables first.
    let order: Vec<&Label> = p.steps.iter().map(|s| &s.label).collect();
    a.points.sort_by_key(|pc| order.iter().position(|l| *l == &pc.label));
    Ok(a)
}
