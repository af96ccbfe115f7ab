use std::collections::HashSet;

use super::ast::*;
use super::ProtocolError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Word(String),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<Token>, ProtocolError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            out.push(Token { tok: Tok::Open, col });
            i += 1;
        } else if c == ')' {
            out.push(Token { tok: Tok::Close, col });
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token { tok: Tok::Word(chars[start..i].iter().collect()), col });
        } else {
            return Err(ProtocolError::Syntax {
                line: lineno,
                col,
                expected: "label, keyword or parenthesis".into(),
            });
        }
    }
    Ok(out)
}

struct LineParser<'a> {
    toks: Vec<Token>,
    pos: usize,
    line: usize,
    end_col: usize,
    declared: &'a HashSet<Label>,
}

impl LineParser<'_> {
    fn err(&self, expected: &str) -> ProtocolError {
        let col = self.toks.get(self.pos).map_or(self.end_col, |t| t.col);
        ProtocolError::Syntax { line: self.line, col, expected: expected.to_string() }
    }

    fn word(&mut self, expected: &str) -> Result<String, ProtocolError> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Word(w), .. }) => {
                self.pos += 1;
                Ok(w.clone())
            }
            _ => Err(self.err(expected)),
        }
    }

    fn open(&mut self) -> Result<(), ProtocolError> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Open, .. }) => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err("'('")),
        }
    }

    fn close(&mut self) -> Result<(), ProtocolError> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Close, .. }) => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err("')'")),
        }
    }

    /// A reference to an already declared point.
    fn label(&mut self) -> Result<Label, ProtocolError> {
        let w = self.word("point label")?;
        let l = Label(w);
        if !self.declared.contains(&l) {
            return Err(ProtocolError::UndefinedLabel { label: l.0, line: self.line });
        }
        Ok(l)
    }

    fn line_expr(&mut self) -> Result<LineExpr, ProtocolError> {
        self.open()?;
        let kw_pos = self.pos;
        let kw = self.word("'line', 'perp' or 'parallel'")?;
        let out = match kw.as_str() {
            "line" => {
                let a = self.label()?;
                let b_pos = self.pos;
                let b = self.label()?;
                if a == b {
                    self.pos = b_pos;
                    return Err(self.err("a second, distinct point"));
                }
                LineExpr::Through(a, b)
            }
            "perp" => {
                let p = self.label()?;
                LineExpr::PerpThrough(p, Box::new(self.line_expr()?))
            }
            "parallel" => {
                let p = self.label()?;
                LineExpr::ParallelThrough(p, Box::new(self.line_expr()?))
            }
            _ => {
                self.pos = kw_pos;
                return Err(self.err("'line', 'perp' or 'parallel'"));
            }
        };
        self.close()?;
        Ok(out)
    }

    fn circle_expr(&mut self) -> Result<CircleExpr, ProtocolError> {
        self.open()?;
        let kw_pos = self.pos;
        let kw = self.word("'circle' or 'circumcircle'")?;
        let out = match kw.as_str() {
            "circle" => {
                let center = self.label()?;
                let through = self.label()?;
                CircleExpr::Centered { center, through }
            }
            "circumcircle" => CircleExpr::Circumcircle(self.label()?, self.label()?, self.label()?),
            _ => {
                self.pos = kw_pos;
                return Err(self.err("'circle' or 'circumcircle'"));
            }
        };
        self.close()?;
        Ok(out)
    }

    fn construct(&mut self) -> Result<StepKind, ProtocolError> {
        let kw_pos = self.pos;
        let kw = self.word("construction keyword")?;
        Ok(match kw.as_str() {
            "free" => StepKind::FreePoint,
            "midpoint" => StepKind::Midpoint(self.label()?, self.label()?),
            "intersect" => StepKind::IntersectLines(self.line_expr()?, self.line_expr()?),
            "foot" => StepKind::FootOfPerpendicular(self.label()?, self.line_expr()?),
            "on" => StepKind::PointOnLine(self.line_expr()?),
            "oncircle" => StepKind::PointOnCircle(self.circle_expr()?),
            "intersect2" => StepKind::SecondIntersectLineCircle(self.line_expr()?, self.circle_expr()?, self.label()?),
            _ => {
                self.pos = kw_pos;
                return Err(self.err(
                    "one of free, midpoint, intersect, foot, on, oncircle, intersect2",
                ));
            }
        })
    }

    fn statement(&mut self) -> Result<Statement, ProtocolError> {
        let kw_pos = self.pos;
        let kw = self.word("statement keyword")?;
        Ok(match kw.as_str() {
            "collinear" => Statement::Collinear(self.label()?, self.label()?, self.label()?),
            "parallel" => Statement::Parallel(self.line_expr()?, self.line_expr()?),
            "perpendicular" => Statement::Perpendicular(self.line_expr()?, self.line_expr()?),
            "incident" => Statement::Incident(self.label()?, self.line_expr()?),
            "oncircle" => Statement::IncidentCircle(self.label()?, self.circle_expr()?),
            "congruent" => {
                Statement::CongruentSegments(self.label()?, self.label()?, self.label()?, self.label()?)
            }
            "identical" => Statement::Identical(self.label()?, self.label()?),
            _ => {
                self.pos = kw_pos;
                return Err(self.err(
                    "one of collinear, parallel, perpendicular, incident, oncircle, congruent, identical",
                ));
            }
        })
    }

    fn finish(&self) -> Result<(), ProtocolError> {
        if self.pos < self.toks.len() {
            return Err(self.err("end of line"));
        }
        Ok(())
    }
}

/// Parses the line-oriented protocol format: one `point` step per line,
/// followed by a single `prove` line. Lines starting with `#` are comments;
/// a comment of the form `# name: <text>` names the protocol.
pub fn parse_protocol(text: &str) -> Result<ConstructionProtocol, ProtocolError> {
    let mut declared: HashSet<Label> = HashSet::new();
    let mut steps: Vec<ConstructionStep> = Vec::new();
    let mut goal: Option<(Statement, usize)> = None;
    let mut name = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("name:") {
                name = Some(n.trim().to_string());
            }
            continue;
        }
        let toks = tokenize(raw, lineno)?;
        let mut p = LineParser {
            toks,
            pos: 0,
            line: lineno,
            end_col: raw.chars().count() + 1,
            declared: &declared,
        };
        if goal.is_some() {
            return Err(p.err("end of input after the goal"));
        }
        let head = p.word("'point' or 'prove'")?;
        match head.as_str() {
            "point" => {
                let label_pos = p.pos;
                let label = Label(p.word("new point label")?);
                if declared.contains(&label) {
                    return Err(ProtocolError::DuplicateLabel { label: label.0, line: lineno });
                }
                if is_keyword(&label.0) {
                    p.pos = label_pos;
                    return Err(p.err("point label (not a keyword)"));
                }
                let kind = p.construct()?;
                p.finish()?;
                declared.insert(label.clone());
                steps.push(ConstructionStep { label, kind, line: lineno });
            }
            "prove" => {
                let st = p.statement()?;
                p.finish()?;
                goal = Some((st, lineno));
            }
            _ => {
                p.pos = 0;
                return Err(p.err("'point' or 'prove'"));
            }
        }
    }

    let last_line = text.lines().count().max(1);
    let Some((goal, _)) = goal else {
        return Err(ProtocolError::MissingGoal { line: last_line });
    };
    if !steps.iter().any(|s| s.kind == StepKind::FreePoint) {
        return Err(ProtocolError::NoFreePoint);
    }
    Ok(ConstructionProtocol { name, steps, goal })
}

fn is_keyword(w: &str) -> bool {
    matches!(
        w,
        "point" | "prove" | "line" | "perp" | "parallel" | "circle" | "circumcircle"
    )
}
