//! Reading non-degeneracy polynomials back as geometric conditions, by
//! trying the polynomial forms of simple conditions over small sets of
//! points whose coordinates carry the NDG's variables.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::relations::{self, Pt};
use crate::algebra::{CoordinateAssignment, PointRole};
use crate::poly::{Polynomial, Variable};
use crate::protocol::{ConstructionProtocol, Label};
use crate::wu::NdgCondition;

pub const MAX_SET_SIZE: usize = 4;
pub const MAX_CANDIDATES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum GeometricCondition {
    NotIdentical { a: Label, b: Label },
    NotCollinear { a: Label, b: Label, c: Label },
    /// Line `ab` is not perpendicular to line `cd`.
    NotPerpendicular { a: Label, b: Label, c: Label, d: Label },
    NotOnCircle { point: Label, center: Label, through: Label },
    /// Line `ab` is not parallel to line `cd`.
    NotParallel { a: Label, b: Label, c: Label, d: Label },
}

impl GeometricCondition {
    pub fn labels(&self) -> Vec<&Label> {
        match self {
            GeometricCondition::NotIdentical { a, b } => vec![a, b],
            GeometricCondition::NotCollinear { a, b, c } => vec![a, b, c],
            GeometricCondition::NotPerpendicular { a, b, c, d } | GeometricCondition::NotParallel { a, b, c, d } => {
                vec![a, b, c, d]
            }
            GeometricCondition::NotOnCircle { point, center, through } => vec![point, center, through],
        }
    }

    /// The polynomial whose vanishing is the degenerate case. `None` for
    /// `NotIdentical` unless one coordinate difference vanishes outright.
    pub fn polynomial(&self, a: &CoordinateAssignment) -> Option<Polynomial> {
        let pt = |l: &Label| a.pt(l);
        let line = |p: &Label, q: &Label| -> Option<Pt> { Some(pt(p)?.sub(&pt(q)?)) };
        match self {
            GeometricCondition::NotIdentical { a, b } => {
                let [dx, dy] = relations::identical(&pt(a)?, &pt(b)?);
                match (dx.is_zero(), dy.is_zero()) {
                    (true, false) => Some(dy),
                    (false, true) => Some(dx),
                    _ => None,
                }
            }
            GeometricCondition::NotCollinear { a, b, c } => Some(relations::collinear(&pt(a)?, &pt(b)?, &pt(c)?)),
            GeometricCondition::NotPerpendicular { a, b, c, d } => Some(line(a, b)?.dot(&line(c, d)?)),
            GeometricCondition::NotParallel { a, b, c, d } => Some(line(a, b)?.cross(&line(c, d)?)),
            GeometricCondition::NotOnCircle { point, center, through } => {
                Some(&line(point, center)?.norm2() - &line(through, center)?.norm2())
            }
        }
    }
}

impl fmt::Display for GeometricCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometricCondition::NotIdentical { a, b } => write!(f, "{a} ≢ {b}"),
            GeometricCondition::NotCollinear { a, b, c } => write!(f, "{a}, {b} and {c} are not collinear"),
            GeometricCondition::NotPerpendicular { a, b, c, d } => write!(f, "{a}{b} ⊥̸ {c}{d}"),
            GeometricCondition::NotParallel { a, b, c, d } => write!(f, "{a}{b} ∦ {c}{d}"),
            GeometricCondition::NotOnCircle { point, center, through } => {
                write!(f, "{point} is not on the circle with center {center} through {through}")
            }
        }
    }
}

pub fn extract_variables(p: &Polynomial) -> BTreeSet<Variable> {
    p.variables()
}

fn coord_vars(a: &CoordinateAssignment, l: &Label) -> BTreeSet<Variable> {
    a.get(l).map(|pc| [pc.x.variable(), pc.y.variable()].into_iter().flatten().collect()).unwrap_or_default()
}

/// Point sets, smallest first and in declaration order, made of a minimal
/// set of points whose coordinates cover `vars`, optionally extended with
/// neutral points (both coordinates zero).
pub fn candidate_point_sets(
    vars: &BTreeSet<Variable>,
    p: &ConstructionProtocol,
    a: &CoordinateAssignment,
) -> Vec<Vec<Label>> {
    candidate_point_sets_with(vars, &BTreeSet::new(), p, a)
}

/// As [`candidate_point_sets`], where points whose coordinate variables
/// all lie in `neutral` (variables separately assumed nonzero) also count
/// as neutral.
pub fn candidate_point_sets_with(
    vars: &BTreeSet<Variable>,
    neutral: &BTreeSet<Variable>,
    p: &ConstructionProtocol,
    a: &CoordinateAssignment,
) -> Vec<Vec<Label>> {
    if vars.is_empty() {
        return vec![];
    }
    let labels: Vec<&Label> = p.steps.iter().map(|s| &s.label).collect();
    let cv: Vec<BTreeSet<Variable>> = labels.iter().map(|l| coord_vars(a, l)).collect();
    let carrier: Vec<bool> = cv.iter().map(|s| !s.is_disjoint(vars)).collect();
    let is_neutral: Vec<bool> = (0..labels.len()).map(|i| !carrier[i] && cv[i].is_subset(neutral)).collect();
    let pool: Vec<usize> = (0..labels.len()).filter(|&i| carrier[i] || is_neutral[i]).collect();

    let covers = |idx: &[usize]| -> bool {
        let mut got = BTreeSet::new();
        for &i in idx {
            got.extend(cv[i].intersection(vars).copied());
        }
        got.len() == vars.len()
    };
    let mut out = Vec::new();
    for size in 2..=MAX_SET_SIZE.min(pool.len()) {
        for combo in combinations(&pool, size) {
            let carriers: Vec<usize> = combo.iter().copied().filter(|&i| carrier[i]).collect();
            if !covers(&carriers) {
                continue;
            }
            let minimal = (0..carriers.len()).all(|k| {
                let rest: Vec<usize> = carriers.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &i)| i).collect();
                !covers(&rest)
            });
            if minimal {
                out.push(combo.iter().map(|&i| labels[i].clone()).collect());
            }
        }
    }
    out
}

/// All `k`-subsets of `items`, in lexicographic order of positions.
fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if idx[i] == i + items.len() - k {
            return out;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Conditions whose points are exactly `set`, in kind order.
fn conditions_on(set: &[Label]) -> Vec<GeometricCondition> {
    use GeometricCondition::*;
    let c = |i: usize| set[i].clone();
    match set.len() {
        2 => vec![
            NotIdentical { a: c(0), b: c(1) },
            NotPerpendicular { a: c(0), b: c(1), c: c(0), d: c(1) },
        ],
        3 => {
            let mut v = vec![NotCollinear { a: c(0), b: c(1), c: c(2) }];
            // Right angle at each vertex: lines (vertex, y) and (x, vertex).
            for (x, vx, y) in [(1, 0, 2), (0, 1, 2), (0, 2, 1)] {
                v.push(NotPerpendicular { a: c(vx), b: c(y), c: c(x), d: c(vx) });
            }
            for (center, through, point) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
                v.push(NotOnCircle { point: c(point), center: c(center), through: c(through) });
            }
            v
        }
        4 => {
            let pairs = [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)];
            let mut v: Vec<GeometricCondition> =
                pairs.iter().map(|&(i, j, k, l)| NotPerpendicular { a: c(i), b: c(j), c: c(k), d: c(l) }).collect();
            v.extend(pairs.iter().map(|&(i, j, k, l)| NotParallel { a: c(i), b: c(j), c: c(k), d: c(l) }));
            v
        }
        _ => vec![],
    }
}

/// Removes every factor in `companions` from `f` as often as it divides.
fn strip_companions(f: &Polynomial, companions: &[Polynomial]) -> Polynomial {
    let mut f = f.clone();
    for c in companions {
        if c.is_constant() {
            continue;
        }
        while let Some(q) = f.div_exact(c) {
            if q.is_zero() {
                break;
            }
            f = q;
        }
    }
    f
}

/// Does `cond` read as the NDG `p`, given that `companions` are also
/// assumed nonzero?
pub fn condition_matches(
    cond: &GeometricCondition,
    p: &Polynomial,
    companions: &[Polynomial],
    a: &CoordinateAssignment,
) -> bool {
    let Some(f) = cond.polynomial(a) else { return false };
    if f.is_constant() {
        return false;
    }
    strip_companions(&f, companions).normalized() == p.normalized()
}

/// First matching condition up to sign and integer content, or `None`.
pub fn match_ndg(p: &Polynomial, proto: &ConstructionProtocol, a: &CoordinateAssignment) -> Option<GeometricCondition> {
    match_ndg_with(p, &[], proto, a)
}

/// Matching where factors equal to other assumed NDGs may be cancelled,
/// and points carrying only such single-variable NDGs count as neutral.
/// Among matches with the fewest points, prefers the one with most free
/// and semi-free points.
pub fn match_ndg_with(
    p: &Polynomial,
    companions: &[Polynomial],
    proto: &ConstructionProtocol,
    a: &CoordinateAssignment,
) -> Option<GeometricCondition> {
    if p.is_constant() {
        return None;
    }
    let companions: Vec<Polynomial> = companions.iter().filter(|c| !c.equal_up_to_unit(p)).cloned().collect();
    let neutral: BTreeSet<Variable> = companions
        .iter()
        .filter(|c| c.num_terms() == 1 && c.total_degree() == 1)
        .flat_map(|c| c.variables())
        .collect();
    let sets = candidate_point_sets_with(&extract_variables(p), &neutral, proto, a);
    let freeness = |set: &[Label]| {
        set.iter()
            .filter(|l| matches!(a.get(l).map(|pc| pc.role), Some(PointRole::Free | PointRole::Pinned | PointRole::SemiFree)))
            .count()
    };
    let mut tried = 0;
    let mut best: Option<(usize, usize, GeometricCondition)> = None;
    for set in &sets {
        if let Some((size, _, _)) = &best {
            if set.len() > *size {
                break;
            }
        }
        for cond in conditions_on(set) {
            tried += 1;
            if tried > MAX_CANDIDATES {
                return best.map(|b| b.2);
            }
            if condition_matches(&cond, p, &companions, a) {
                let score = freeness(set);
                if best.as_ref().is_none_or(|b| score > b.1) {
                    best = Some((set.len(), score, cond));
                }
                break;
            }
        }
    }
    best.map(|b| b.2)
}

/// Fills in the geometric reading of each NDG where one is found.
pub fn interpret_all(ndgs: &[NdgCondition], proto: &ConstructionProtocol, a: &CoordinateAssignment) -> Vec<NdgCondition> {
    let all: Vec<Polynomial> = ndgs.iter().map(|n| n.poly.clone()).collect();
    ndgs.iter()
        .map(|n| NdgCondition { geometric: match_ndg_with(&n.poly, &all, proto, a), ..n.clone() })
        .collect()
}
