//! Types shared by both decision methods: resource budgets and results.

use std::cell::Cell;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::Polynomial;
use crate::wu::{NdgCondition, TriangularSystem, WuCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Exhausted {
    #[error("deadline exceeded")]
    Deadline,
    #[error("more than {0} live monomials")]
    Monomials(usize),
}

/// A wall-clock deadline plus a cap on the monomials alive in one working
/// set. Also records the peak size and degree it was shown.
#[derive(Debug, Clone)]
pub struct Budget {
    deadline: Option<Instant>,
    max_monomials: usize,
    peak_monomials: Cell<usize>,
    max_degree: Cell<u32>,
}

pub const DEFAULT_MAX_MONOMIALS: usize = 2_000_000;

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            max_monomials: DEFAULT_MAX_MONOMIALS,
            peak_monomials: Cell::new(0),
            max_degree: Cell::new(0),
        }
    }

    pub fn with_timeout(t: Duration) -> Self {
        Budget { deadline: Some(Instant::now() + t), ..Budget::unlimited() }
    }

    pub fn max_monomials(mut self, n: usize) -> Self {
        self.max_monomials = n;
        self
    }

    /// Records a working set and fails if the budget is spent.
    pub fn observe<'a>(&self, polys: impl IntoIterator<Item = &'a Polynomial>) -> Result<(), Exhausted> {
        let mut live = 0;
        for p in polys {
            live += p.num_terms();
            let d = p.total_degree();
            if d > self.max_degree.get() {
                self.max_degree.set(d);
            }
        }
        self.observe_count(live)
    }

    pub fn observe_count(&self, live: usize) -> Result<(), Exhausted> {
        if live > self.peak_monomials.get() {
            self.peak_monomials.set(live);
        }
        if live > self.max_monomials {
            return Err(Exhausted::Monomials(self.max_monomials));
        }
        self.tick()
    }

    pub fn observe_degree(&self, d: u32) {
        if d > self.max_degree.get() {
            self.max_degree.set(d);
        }
    }

    pub fn tick(&self) -> Result<(), Exhausted> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Exhausted::Deadline),
            _ => Ok(()),
        }
    }

    pub fn peak_monomials(&self) -> usize {
        self.peak_monomials.get()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree.get()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NdgMode {
    None,
    Side,
    Wu,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Method {
    Wu,
    Groebner { ndg_mode: NdgMode },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum Verdict {
    Proved,
    /// Carries the first statement polynomial that failed: its nonzero
    /// final remainder for Wu, the statement itself for Groebner.
    NotProved { witness: Polynomial },
    Timeout { reason: String },
    Inconsistent,
}

impl Verdict {
    pub fn is_proved(&self) -> bool {
        *self == Verdict::Proved
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Proved => "proved",
            Verdict::NotProved { .. } => "not proved",
            Verdict::Timeout { .. } => "timeout",
            Verdict::Inconsistent => "inconsistent",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ProofStats {
    /// Phase name and elapsed milliseconds, in execution order.
    pub phases: Vec<(String, f64)>,
    pub peak_monomials: usize,
    pub max_degree: u32,
}

impl ProofStats {
    pub fn phase_ms(&self, name: &str) -> Option<f64> {
        self.phases.iter().find(|(n, _)| n == name).map(|(_, t)| *t)
    }

    pub fn total_ms(&self) -> f64 {
        self.phases.iter().map(|(_, t)| t).sum()
    }

    pub(crate) fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.phases.push((name.to_string(), start.elapsed().as_secs_f64() * 1e3));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofResult {
    pub method: Method,
    pub verdict: Verdict,
    pub ndgs: Vec<NdgCondition>,
    pub chain: Option<TriangularSystem>,
    pub certificate: Option<WuCertificate>,
    pub stats: ProofStats,
}
