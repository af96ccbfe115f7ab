use std::fmt;

use serde::{Deserialize, Serialize};

/// A point label, unique within a protocol.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Label(pub String);

impl Label {
    pub fn new(s: impl Into<String>) -> Self {
        Label(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_string())
    }
}

/// Lines are never first-class unknowns; they are always described through
/// points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LineExpr {
    /// The line through two points.
    Through(Label, Label),
    /// The line through a point, perpendicular to another line.
    PerpThrough(Label, Box<LineExpr>),
    /// The line through a point, parallel to another line.
    ParallelThrough(Label, Box<LineExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CircleExpr {
    /// Circle with a given center passing through a point.
    Centered { center: Label, through: Label },
    /// Circle through three points.
    Circumcircle(Label, Label, Label),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    FreePoint,
    Midpoint(Label, Label),
    IntersectLines(LineExpr, LineExpr),
    FootOfPerpendicular(Label, LineExpr),
    PointOnLine(LineExpr),
    PointOnCircle(CircleExpr),
    /// The second intersection of a line and a circle, given the first.
    SecondIntersectLineCircle(LineExpr, CircleExpr, Label),
}

impl StepKind {
    pub fn name(&self) -> &'static str {
        match self {
            StepKind::FreePoint => "free",
            StepKind::Midpoint(..) => "midpoint",
            StepKind::IntersectLines(..) => "intersect",
            StepKind::FootOfPerpendicular(..) => "foot",
            StepKind::PointOnLine(..) => "on",
            StepKind::PointOnCircle(..) => "oncircle",
            StepKind::SecondIntersectLineCircle(..) => "intersect2",
        }
    }

    /// One degree of freedom: one free and one dependent coordinate.
    pub fn is_semi_free(&self) -> bool {
        matches!(self, StepKind::PointOnLine(_) | StepKind::PointOnCircle(_))
    }
}

#[derive(Clone, Debug, Eq, Serialize, Deserialize)]
pub struct ConstructionStep {
    pub label: Label,
    pub kind: StepKind,
    /// 1-based source line; 0 for programmatically built steps.
    #[serde(default)]
    pub line: usize,
}

impl PartialEq for ConstructionStep {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statement {
    Collinear(Label, Label, Label),
    Parallel(LineExpr, LineExpr),
    Perpendicular(LineExpr, LineExpr),
    Incident(Label, LineExpr),
    IncidentCircle(Label, CircleExpr),
    CongruentSegments(Label, Label, Label, Label),
    Identical(Label, Label),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionProtocol {
    pub name: Option<String>,
    pub steps: Vec<ConstructionStep>,
    pub goal: Statement,
}

impl ConstructionProtocol {
    pub fn step(&self, label: &Label) -> Option<&ConstructionStep> {
        self.steps.iter().find(|s| &s.label == label)
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.steps.iter().position(|s| &s.label == label)
    }

    pub fn free_points(&self) -> impl Iterator<Item = &Label> {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::FreePoint)
            .map(|s| &s.label)
    }
}

impl LineExpr {
    pub fn through(a: &str, b: &str) -> Self {
        LineExpr::Through(a.into(), b.into())
    }

    pub fn labels(&self) -> Vec<&Label> {
        match self {
            LineExpr::Through(a, b) => vec![a, b],
            LineExpr::PerpThrough(p, l) | LineExpr::ParallelThrough(p, l) => {
                let mut v = vec![p];
                v.extend(l.labels());
                v
            }
        }
    }
}

impl CircleExpr {
    pub fn labels(&self) -> Vec<&Label> {
        match self {
            CircleExpr::Centered { center, through } => vec![center, through],
            CircleExpr::Circumcircle(a, b, c) => vec![a, b, c],
        }
    }
}

impl StepKind {
    /// Every label the step refers to, with repetition.
    pub fn references(&self) -> Vec<&Label> {
        match self {
            StepKind::FreePoint => vec![],
            StepKind::Midpoint(a, b) => vec![a, b],
            StepKind::IntersectLines(l, m) => {
                let mut v = l.labels();
                v.extend(m.labels());
                v
            }
            StepKind::FootOfPerpendicular(p, l) => {
                let mut v = vec![p];
                v.extend(l.labels());
                v
            }
            StepKind::PointOnLine(l) => l.labels(),
            StepKind::PointOnCircle(c) => c.labels(),
            StepKind::SecondIntersectLineCircle(l, c, p) => {
                let mut v = l.labels();
                v.extend(c.labels());
                v.push(p);
                v
            }
        }
    }
}

impl Statement {
    pub fn references(&self) -> Vec<&Label> {
        match self {
            Statement::Collinear(a, b, c) => vec![a, b, c],
            Statement::Parallel(l, m) | Statement::Perpendicular(l, m) => {
                let mut v = l.labels();
                v.extend(m.labels());
                v
            }
            Statement::Incident(p, l) => {
                let mut v = vec![p];
                v.extend(l.labels());
                v
            }
            Statement::IncidentCircle(p, c) => {
                let mut v = vec![p];
                v.extend(c.labels());
                v
            }
            Statement::CongruentSegments(a, b, c, d) => vec![a, b, c, d],
            Statement::Identical(a, b) => vec![a, b],
        }
    }
}

// Concrete syntax, the inverse of the parser.

impl fmt::Display for LineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineExpr::Through(a, b) => write!(f, "(line {a} {b})"),
            LineExpr::PerpThrough(p, l) => write!(f, "(perp {p} {l})"),
            LineExpr::ParallelThrough(p, l) => write!(f, "(parallel {p} {l})"),
        }
    }
}

impl fmt::Display for CircleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleExpr::Centered { center, through } => write!(f, "(circle {center} {through})"),
            CircleExpr::Circumcircle(a, b, c) => write!(f, "(circumcircle {a} {b} {c})"),
        }
    }
}

impl fmt::Display for ConstructionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "point {} ", self.label)?;
        match &self.kind {
            StepKind::FreePoint => write!(f, "free"),
            StepKind::Midpoint(a, b) => write!(f, "midpoint {a} {b}"),
            StepKind::IntersectLines(l, m) => write!(f, "intersect {l} {m}"),
            StepKind::FootOfPerpendicular(p, l) => write!(f, "foot {p} {l}"),
            StepKind::PointOnLine(l) => write!(f, "on {l}"),
            StepKind::PointOnCircle(c) => write!(f, "oncircle {c}"),
            StepKind::SecondIntersectLineCircle(l, c, p) => write!(f, "intersect2 {l} {c} {p}"),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Collinear(a, b, c) => write!(f, "collinear {a} {b} {c}"),
            Statement::Parallel(l, m) => write!(f, "parallel {l} {m}"),
            Statement::Perpendicular(l, m) => write!(f, "perpendicular {l} {m}"),
            Statement::Incident(p, l) => write!(f, "incident {p} {l}"),
            Statement::IncidentCircle(p, c) => write!(f, "oncircle {p} {c}"),
            Statement::CongruentSegments(a, b, c, d) => write!(f, "congruent {a} {b} {c} {d}"),
            Statement::Identical(a, b) => write!(f, "identical {a} {b}"),
        }
    }
}

impl fmt::Display for ConstructionProtocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "# name: {name}")?;
        }
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        writeln!(f, "prove {}", self.goal)
    }
}
