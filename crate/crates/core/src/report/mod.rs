//! Proof reports: the full pipeline from a parsed protocol to a rendered
//! document, in text or JSON.

mod bench;

pub use bench::{bench, read_corpus, BenchRow, CorpusEntry};

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{algebrize, assign_with, AlgebraError, AlgebraicSystem, AssignOptions, PointCoords};
use crate::groebner::prove_groebner;
use crate::ndg::interpret_all;
use crate::proof::{Budget, Method, NdgMode, ProofResult, Verdict};
use crate::protocol::{parse_protocol, ConstructionProtocol, ProtocolError, Statement};
use crate::wu::{prove_wu, verify_certificate, NdgOrigin, RealReading};

pub const SCHEMA: &str = "geoprove-report/1";

const PARALLEL_CAVEAT: &str = "the algebraic parallelism condition is weaker than the geometric one: \
it also holds when either line degenerates to a single point";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodChoice {
    #[default]
    Wu,
    Groebner,
}

#[derive(Clone, Debug)]
pub struct ProveOptions {
    pub method: MethodChoice,
    pub ndg_mode: NdgMode,
    pub assign: AssignOptions,
    pub timeout: Option<Duration>,
    pub verify_certificate: bool,
}

impl Default for ProveOptions {
    fn default() -> Self {
        ProveOptions {
            method: MethodChoice::Wu,
            ndg_mode: NdgMode::Wu,
            assign: AssignOptions::default(),
            timeout: None,
            verify_certificate: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{0}")]
    Protocol(#[from] ProtocolError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
}

/// Everything a report shows. Serialized as the JSON report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub name: Option<String>,
    pub protocol: ConstructionProtocol,
    pub coordinates: Vec<PointCoords>,
    pub system: AlgebraicSystem,
    pub result: ProofResult,
    #[serde(default)]
    pub certificate_verified: Option<bool>,
    #[serde(default)]
    pub caveats: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// The deterministic part of the text report: everything but timings.
    pub fn body_text(&self) -> String {
        render_body(self)
    }

    pub fn stats_text(&self) -> String {
        render_stats(self)
    }

    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.body_text(), self.stats_text())
    }
}

pub fn prove_source(src: &str, opts: &ProveOptions) -> Result<Report, InputError> {
    prove_protocol(&parse_protocol(src)?, opts)
}

pub fn prove_protocol(proto: &ConstructionProtocol, opts: &ProveOptions) -> Result<Report, InputError> {
    let a = assign_with(proto, &opts.assign)?;
    let sys = algebrize(proto, &a)?;
    let budget = match opts.timeout {
        Some(t) => Budget::with_timeout(t),
        None => Budget::unlimited(),
    };
    let mut result = match opts.method {
        MethodChoice::Wu => prove_wu(&sys, &budget),
        MethodChoice::Groebner => prove_groebner(&sys, opts.ndg_mode, &budget),
    };
    result.ndgs = interpret_all(&result.ndgs, proto, &a);
    let certificate_verified = match (&result.certificate, &result.chain) {
        (Some(c), Some(t)) if opts.verify_certificate => Some(verify_certificate(c, &sys, t)),
        _ => None,
    };
    let mut caveats = Vec::new();
    if matches!(proto.goal, Statement::Parallel(..)) {
        caveats.push(PARALLEL_CAVEAT.to_string());
    }
    Ok(Report {
        schema: SCHEMA.to_string(),
        name: proto.name.clone(),
        protocol: proto.clone(),
        coordinates: a.points.clone(),
        system: sys,
        result,
        certificate_verified,
        caveats,
    })
}

fn method_name(m: &Method) -> String {
    match m {
        Method::Wu => "Wu (simple method, pseudo-division)".to_string(),
        Method::Groebner { ndg_mode } => format!("Groebner basis (degrevlex, NDGs: {})", ndg_mode_name(*ndg_mode)),
    }
}

fn ndg_mode_name(m: NdgMode) -> &'static str {
    match m {
        NdgMode::None => "none",
        NdgMode::Side => "side",
        NdgMode::Wu => "wu",
    }
}

fn render_body(r: &Report) -> String {
    let mut s = String::new();
    let title = r.name.as_deref().unwrap_or("(unnamed)");
    let _ = writeln!(s, "== {title} ==\n");

    let _ = writeln!(s, "Protocol:");
    for line in r.protocol.to_string().lines() {
        let _ = writeln!(s, "  {line}");
    }

    let _ = writeln!(s, "\nCoordinates:");
    for p in &r.coordinates {
        let _ = writeln!(s, "  {} = ({}, {})  [{:?}]", p.label, p.x, p.y, p.role);
    }

    let _ = writeln!(s, "\nHypotheses:");
    for (i, p) in r.system.construction_polys.iter().enumerate() {
        match r.system.construction_sources.get(i) {
            Some(src) => {
                let _ = writeln!(s, "  h{} = {p}    ({src})", i + 1);
            }
            None => {
                let _ = writeln!(s, "  h{} = {p}", i + 1);
            }
        }
    }
    let _ = writeln!(s, "Statement:");
    for (i, p) in r.system.statement_polys.iter().enumerate() {
        let _ = writeln!(s, "  g{} = {p}", i + 1);
    }

    let _ = writeln!(s, "\nMethod: {}", method_name(&r.result.method));
    if let Some(chain) = &r.result.chain {
        let _ = writeln!(s, "Triangular system:");
        for (i, e) in chain.chain.iter().enumerate() {
            let _ = writeln!(s, "  t{} = {}    (main variable {})", i + 1, e.poly, e.main_var);
        }
    }
    if let Some(cert) = &r.result.certificate {
        let _ = writeln!(s, "Pseudo-division steps: {}", cert.steps.len());
        for (i, rem) in cert.final_remainders.iter().enumerate() {
            let _ = writeln!(s, "Final remainder of g{}: {rem}", i + 1);
        }
    }
    if let Some(ok) = r.certificate_verified {
        let _ = writeln!(s, "Certificate replay: {}", if ok { "verified" } else { "FAILED" });
    }

    let _ = writeln!(s, "\nVerdict: {}", r.result.verdict.label());
    match &r.result.verdict {
        Verdict::NotProved { witness } => {
            let _ = writeln!(s, "  witness: {witness}");
        }
        Verdict::Timeout { reason } => {
            let _ = writeln!(s, "  reason: {reason}");
        }
        _ => {}
    }

    let _ = writeln!(s, "\nNon-degeneracy conditions:");
    if r.result.ndgs.is_empty() {
        let _ = writeln!(s, "  no non-degeneracy conditions");
    }
    for n in &r.result.ndgs {
        let origin = match n.origin {
            NdgOrigin::TriangulationInitial(i) => format!("initial of t{}", i + 1),
            NdgOrigin::AlgebraizationSide => "construction".to_string(),
        };
        let _ = writeln!(s, "  {} != 0    ({origin})", n.poly);
        match &n.geometric {
            Some(g) => {
                let _ = writeln!(s, "      geometric: {g}");
            }
            None => {
                let _ = writeln!(s, "      geometric: no reading found");
            }
        }
        match &n.real {
            Some(RealReading::ImpliedBy(v)) => {
                let _ = writeln!(s, "      real-interpretation: implied by {v} != 0");
            }
            Some(RealReading::NotAllZero(vs)) => {
                let names: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "      real-interpretation: not ({} all zero)", names.join(", "));
            }
            None => {}
        }
    }
    if !r.caveats.is_empty() {
        let _ = writeln!(s, "\nCaveats:");
        for c in &r.caveats {
            let _ = writeln!(s, "  {c}");
        }
    }
    s
}

fn render_stats(r: &Report) -> String {
    let mut s = String::from("-- stats --\n");
    for (name, ms) in &r.result.stats.phases {
        let _ = writeln!(s, "  {name}: {ms:.3} ms");
    }
    let _ = writeln!(s, "  total: {:.3} ms", r.result.stats.total_ms());
    let _ = writeln!(s, "  peak monomials: {}", r.result.stats.peak_monomials);
    let _ = writeln!(s, "  max degree: {}", r.result.stats.max_degree);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORTHO: &str = "# name: orthocenter\npoint A free\npoint B free\npoint C free\n\
        point H intersect (perp A (line B C)) (perp B (line A C))\n\
        prove perpendicular (line C H) (line A B)\n";

    #[test]
    fn orthocenter_text() {
        let r = prove_source(ORTHO, &ProveOptions { verify_certificate: true, ..Default::default() }).unwrap();
        let t = r.body_text();
        assert!(t.contains("-u2*u1*x1 - u3^2*u1 + u3*u1^2"), "{t}");
        assert!(t.contains("Verdict: proved"));
        assert!(t.contains("A ≢ B"));
        assert!(t.contains("BC ⊥̸ AB"));
        assert!(t.contains("Certificate replay: verified"));
        assert!(!t.contains("ms"));
    }

    #[test]
    fn json_round_trip() {
        let r = prove_source(ORTHO, &ProveOptions::default()).unwrap();
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let cert = back.result.certificate.as_ref().unwrap();
        assert!(verify_certificate(cert, &back.system, back.result.chain.as_ref().unwrap()));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], SCHEMA);
    }

    #[test]
    fn deterministic_body() {
        let a = prove_source(ORTHO, &ProveOptions::default()).unwrap();
        let b = prove_source(ORTHO, &ProveOptions::default()).unwrap();
        assert_eq!(a.body_text(), b.body_text());
    }

    #[test]
    fn empty_ndgs_line() {
        let r = prove_source("point A free\nprove identical A A\n", &ProveOptions::default()).unwrap();
        assert!(r.body_text().contains("no non-degeneracy conditions"));
    }

    #[test]
    fn parallel_caveat() {
        let src = "point A free\npoint B free\npoint C free\npoint B1 midpoint A C\n\
                   point C1 midpoint A B\nprove parallel (line B1 C1) (line B C)\n";
        let r = prove_source(src, &ProveOptions::default()).unwrap();
        assert_eq!(r.caveats.len(), 1);
        assert!(r.body_text().contains("Caveats:"));
    }
}
