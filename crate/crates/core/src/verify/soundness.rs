use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::conditions::{evaluate, recognize_family, Condition, Input, InputKind, Property, Status, Tolerances, Verdict};
use crate::error::VerifyError;
use crate::graph::{BipartiteGraph, Graph};
use crate::graph6::write_graph6;
use crate::oracle::{is_hamiltonian, is_traceable};

use super::enumerate::{fold_bipartite, fold_graphs, Mode, BIPARTITE_MAX_CELLS, GENERAL_MAX};

/// Enumeration limits for one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Smallest general-graph order scanned.
    pub min_n: usize,
    /// Largest general-graph order scanned.
    pub max_n: usize,
    /// Largest `p·q` scanned for bipartite conditions.
    pub max_pq: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { min_n: 1, max_n: 7, max_pq: 25 }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.max_n > GENERAL_MAX {
            return Err(VerifyError::CapExceeded(format!("max n {} > {GENERAL_MAX}", self.max_n)));
        }
        if self.max_pq > BIPARTITE_MAX_CELLS {
            return Err(VerifyError::CapExceeded(format!("max p·q {} > {BIPARTITE_MAX_CELLS}", self.max_pq)));
        }
        Ok(())
    }

    /// Bipartite shapes `(p, q)` scanned for `condition`: balanced, or
    /// `(n+1, n)` for the unbalanced condition.
    pub fn shapes(&self, condition: Condition) -> Vec<(usize, usize)> {
        let unbalanced = condition == Condition::BipartiteSpectralTraceableUnbalanced;
        (1..)
            .map(|n| if unbalanced { (n + 1, n) } else { (n, n) })
            .take_while(|&(p, q)| p * q <= self.max_pq)
            .collect()
    }
}

/// Outcome of one exhaustive soundness run.
///
/// `hypothesis_hits` counts every graph whose verdict is `Guaranteed`,
/// `Exception` or `Boundary`, or a violation; the four buckets partition it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SoundnessReport {
    pub theorem_id: String,
    pub property: Property,
    pub caps: Caps,
    pub graphs_scanned: u64,
    /// Graphs dismissed by a cheap bound that rules out the hypothesis.
    pub screened_out: u64,
    pub not_applicable: u64,
    pub inconclusive: u64,
    pub hypothesis_hits: u64,
    pub guaranteed_confirmed: u64,
    pub exceptions_matched: u64,
    /// Exceptions whose comparison landed in the boundary band.
    pub exceptions_at_boundary: u64,
    /// Exception-class members that nevertheless have the property.
    pub exceptions_with_property: u64,
    pub boundary_cases: u64,
    /// Boundary graphs the oracle shows lack the property.
    pub boundary_without_property: u64,
    /// Matched exceptions by family name.
    pub exception_families: BTreeMap<String, u64>,
    /// graph6 of every graph where a guarantee or an exception failed.
    pub violations: Vec<String>,
}

impl SoundnessReport {
    pub fn new(condition: Condition, caps: Caps) -> Self {
        SoundnessReport {
            theorem_id: condition.id().to_string(),
            property: condition.property(),
            caps,
            graphs_scanned: 0,
            screened_out: 0,
            not_applicable: 0,
            inconclusive: 0,
            hypothesis_hits: 0,
            guaranteed_confirmed: 0,
            exceptions_matched: 0,
            exceptions_at_boundary: 0,
            exceptions_with_property: 0,
            boundary_cases: 0,
            boundary_without_property: 0,
            exception_families: BTreeMap::new(),
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Adds the counts of `other` into `self`. Associative and commutative
    /// up to the order of `violations`, which [`soundness`] sorts.
    pub fn merge(mut self, other: SoundnessReport) -> Self {
        self.graphs_scanned += other.graphs_scanned;
        self.screened_out += other.screened_out;
        self.not_applicable += other.not_applicable;
        self.inconclusive += other.inconclusive;
        self.hypothesis_hits += other.hypothesis_hits;
        self.guaranteed_confirmed += other.guaranteed_confirmed;
        self.exceptions_matched += other.exceptions_matched;
        self.exceptions_at_boundary += other.exceptions_at_boundary;
        self.exceptions_with_property += other.exceptions_with_property;
        self.boundary_cases += other.boundary_cases;
        self.boundary_without_property += other.boundary_without_property;
        for (k, v) in other.exception_families {
            *self.exception_families.entry(k).or_insert(0) += v;
        }
        self.violations.extend(other.violations);
        self
    }

    /// Checks the bucket identity.
    pub fn is_consistent(&self) -> bool {
        self.hypothesis_hits
            == self.guaranteed_confirmed
                + self.exceptions_matched
                + self.boundary_cases
                + self.violations.len() as u64
            && self.graphs_scanned
                == self.screened_out + self.not_applicable + self.inconclusive + self.hypothesis_hits
    }

    /// Folds one verdict and its graph into the counts.
    pub fn record(&mut self, verdict: &Verdict, g: &Graph) {
        match verdict.status {
            Status::NotApplicable => self.not_applicable += 1,
            Status::Inconclusive => self.inconclusive += 1,
            Status::Guaranteed => {
                self.hypothesis_hits += 1;
                if has_property(g, verdict.property) {
                    self.guaranteed_confirmed += 1;
                } else {
                    self.violations.push(write_graph6(g));
                }
            }
            Status::Exception => {
                self.hypothesis_hits += 1;
                let Some(family) = verdict.family else {
                    self.violations.push(write_graph6(g));
                    return;
                };
                let lacks = !has_property(g, verdict.property);
                let coherent = recognize_family(g, family) && (lacks || !verdict.condition.exceptions_lack_property());
                if !coherent {
                    self.violations.push(write_graph6(g));
                    return;
                }
                self.exceptions_matched += 1;
                if verdict.get("boundary").is_some() {
                    self.exceptions_at_boundary += 1;
                }
                if !lacks {
                    self.exceptions_with_property += 1;
                }
                *self.exception_families.entry(family.to_string()).or_insert(0) += 1;
            }
            Status::Boundary => {
                self.hypothesis_hits += 1;
                self.boundary_cases += 1;
                if !has_property(g, verdict.property) {
                    self.boundary_without_property += 1;
                }
            }
        }
    }
}

pub(crate) fn has_property(g: &Graph, property: Property) -> bool {
    let r = match property {
        Property::Hamiltonian => is_hamiltonian(g),
        Property::Traceable => is_traceable(g),
    };
    r.expect("enumeration orders are within the oracle cap").is_some()
}

/// Minimum degree every graph must have to pass the condition's precondition.
pub(crate) fn required_min_degree(condition: Condition) -> usize {
    match condition {
        Condition::EdgeHamiltonian
        | Condition::QTightHamiltonian
        | Condition::BipartiteEdgeHamiltonianMinDeg2
        | Condition::BipartiteSpectralHamiltonian => 2,
        Condition::EdgeTraceable
        | Condition::QTightTraceable
        | Condition::BipartiteEdgeHamiltonian
        | Condition::BipartiteEdgeTraceable
        | Condition::BipartiteSpectralTraceable
        | Condition::BipartiteSpectralTraceableUnbalanced => 1,
        _ => 0,
    }
}

const SCREEN_SLACK: f64 = 1e-6;

fn max_edge_degree_sum(g: &Graph) -> usize {
    g.edges().iter().map(|&(u, v)| g.degree(u) + g.degree(v)).max().unwrap_or(0)
}

/// True when a cheap eigenvalue bound shows the hypothesis of `condition`
/// fails on `g` by more than [`SCREEN_SLACK`]. `n` is the threshold
/// parameter (the `Y` side for bipartite conditions).
pub fn screen(condition: Condition, g: &Graph, n: usize) -> bool {
    let Some(t) = condition.threshold(n) else {
        return false;
    };
    let m = g.edge_count() as f64;
    match condition {
        Condition::BipartiteSpectralHamiltonian
        | Condition::BipartiteSpectralTraceable
        | Condition::BipartiteSpectralTraceableUnbalanced => m.sqrt() < t - SCREEN_SLACK,
        Condition::QTightHamiltonian
        | Condition::QTightTraceable
        | Condition::YuFanHamiltonian
        | Condition::YuFanTraceable
        | Condition::YuConnectedTraceable => {
            let order = g.n();
            if order < 2 {
                return false;
            }
            let bound = (2.0 * m / (order - 1) as f64 + order as f64 - 2.0).min(max_edge_degree_sum(g) as f64);
            bound < t - SCREEN_SLACK
        }
        Condition::QuasiComplement => {
            // g is G⋆ here
            let order = g.n().max(1) as f64;
            let delta_max = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0) as f64;
            delta_max.sqrt().max(2.0 * m / order) > t + SCREEN_SLACK
        }
        Condition::ComplementHamiltonian | Condition::ComplementTraceable => {
            // g is the complement here
            if g.edge_count() == 0 {
                return false;
            }
            let delta_max = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0) as f64;
            (delta_max + 1.0).max(4.0 * m / g.n() as f64) > t + SCREEN_SLACK
        }
        _ => false,
    }
}

/// The graph [`screen`] reads for `condition`.
pub(crate) fn screened_graph(condition: Condition, g: &Graph, b: Option<&BipartiteGraph>) -> Option<Graph> {
    match condition {
        Condition::QuasiComplement => b.map(|b| b.quasi_complement().to_graph()),
        Condition::ComplementHamiltonian | Condition::ComplementTraceable => Some(g.complement()),
        _ if condition.threshold(1).is_some() => Some(g.clone()),
        _ => None,
    }
}

/// Exhaustive soundness run of `condition` within `caps`, in parallel.
pub fn soundness(condition: Condition, caps: Caps) -> Result<SoundnessReport, VerifyError> {
    soundness_with(condition, caps, Mode::Parallel, &Tolerances::default())
}

pub fn soundness_with(
    condition: Condition,
    caps: Caps,
    mode: Mode,
    tol: &Tolerances,
) -> Result<SoundnessReport, VerifyError> {
    caps.validate()?;
    let delta = required_min_degree(condition);
    let identity = || SoundnessReport::new(condition, caps);
    let merge = SoundnessReport::merge;
    let mut report = identity();
    match condition.input_kind() {
        InputKind::General => {
            for n in caps.min_n.max(1)..=caps.max_n {
                let visit = |acc: &mut SoundnessReport, g: &Graph| {
                    acc.graphs_scanned += 1;
                    if screened_graph(condition, g, None).is_some_and(|h| screen(condition, &h, n)) {
                        acc.screened_out += 1;
                        return;
                    }
                    let v = evaluate(condition, Input::General(g), tol);
                    acc.record(&v, g);
                };
                let (_, r) = fold_graphs(n, delta, mode, identity, visit, merge)?;
                report = report.merge(r);
            }
        }
        InputKind::Bipartite => {
            for (p, q) in caps.shapes(condition) {
                let visit = |acc: &mut SoundnessReport, b: &BipartiteGraph| {
                    acc.graphs_scanned += 1;
                    let g = b.to_graph();
                    if screened_graph(condition, &g, Some(b)).is_some_and(|h| screen(condition, &h, q)) {
                        acc.screened_out += 1;
                        return;
                    }
                    let v = evaluate(condition, Input::Bipartite(b), tol);
                    acc.record(&v, &g);
                };
                let (_, r) = fold_bipartite(p, q, delta, mode, identity, visit, merge)?;
                report = report.merge(r);
            }
        }
    }
    report.violations.sort();
    Ok(report)
}

/// Resolves a selector: a condition id or `all`.
pub fn select(selector: &str) -> Result<Vec<Condition>, VerifyError> {
    if selector == "all" {
        return Ok(Condition::ALL.to_vec());
    }
    Condition::from_id(selector).map(|c| vec![c]).ok_or_else(|| VerifyError::UnknownTheorem(selector.to_string()))
}

/// Soundness runs for every condition named by `selector`.
pub fn soundness_by_id(selector: &str, caps: Caps) -> Result<Vec<SoundnessReport>, VerifyError> {
    select(selector)?.into_iter().map(|c| soundness(c, caps)).collect()
}

impl SoundnessReport {
    /// One-line summary.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {}: scanned={} screened={} n/a={} inconclusive={} hits={} guaranteed={} exceptions={} boundary={} violations={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.theorem_id,
            self.graphs_scanned,
            self.screened_out,
            self.not_applicable,
            self.inconclusive,
            self.hypothesis_hits,
            self.guaranteed_confirmed,
            self.exceptions_matched,
            self.boundary_cases,
            self.violations.len()
        )
    }

    /// Multi-line text rendering.
    pub fn to_text(&self) -> String {
        let mut s = self.summary_line();
        s.push('\n');
        if self.exceptions_at_boundary + self.exceptions_with_property + self.boundary_without_property > 0 {
            s.push_str(&format!(
                "  exceptions at boundary={} exceptions with property={} boundary without property={}\n",
                self.exceptions_at_boundary, self.exceptions_with_property, self.boundary_without_property
            ));
        }
        for (fam, count) in &self.exception_families {
            s.push_str(&format!("  exception {fam}: {count}\n"));
        }
        for g in &self.violations {
            s.push_str(&format!("  violation {g}\n"));
        }
        s
    }
}
