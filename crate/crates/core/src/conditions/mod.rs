//! Sufficient conditions for Hamiltonicity and traceability.
//!
//! Every checker validates its own preconditions and returns a [`Verdict`]:
//!
//! * `Guaranteed`: the hypothesis holds strictly and no listed exception matches;
//! * `Exception`: the hypothesis holds (possibly at the boundary) and the
//!   input is one of the listed exceptional graphs;
//! * `Boundary`: a floating-point comparison landed within tolerance of its
//!   threshold, so the hypothesis cannot be certified either way;
//! * `Inconclusive`: the hypothesis fails;
//! * `NotApplicable`: a precondition (order, balance, minimum degree) fails.

mod classes;
mod degree;
mod edges;
mod recognize;
mod spectral_checks;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::family::FamilyId;
use crate::graph::{BipartiteGraph, Graph};
use crate::spectral::{compare_threshold, Relation, DEFAULT_CMP_TOL, DEFAULT_TOL};

pub use classes::{ec_ep_membership, ClassWitness, JoinDecomposition};
pub use degree::{bipartite_degree_hamiltonian, chvatal_hamiltonian, moon_moser_hamiltonian};
pub use edges::{edge_bound_bipartite, edge_bound_general, BipartiteEdgeTarget};
pub use recognize::{nc_np_membership, recognize_family};
pub use spectral_checks::{
    q_spectral_general, quasi_complement_hamiltonian, spectral_bipartite, zhou_complement, BipartiteSpectralTarget,
    QTarget,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Guaranteed,
    Exception,
    Boundary,
    Inconclusive,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Guaranteed => "guaranteed",
            Status::Exception => "exception",
            Status::Boundary => "boundary",
            Status::Inconclusive => "inconclusive",
            Status::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Hamiltonian,
    Traceable,
}

/// Which kind of input a condition reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    General,
    Bipartite,
}

/// Identifies one implemented sufficient condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// Chvátal's degree-sequence condition.
    ChvatalDegree,
    /// Balanced bipartite degree-sequence condition.
    BipartiteDegree,
    /// Balanced bipartite nonadjacent-pair degree sum `d(x)+d(y) >= n+1`.
    BipartitePairDegree,
    /// Balanced bipartite, `δ >= 1`, `m >= n²-n+1`, unless `K_{n,n-1}+e`.
    BipartiteEdgeHamiltonian,
    /// Balanced bipartite, `δ >= 2`, `m >= n²-2n+4`, unless `K_{n,n-2}+4e`.
    BipartiteEdgeHamiltonianMinDeg2,
    /// Balanced bipartite, `δ >= 1`, `m >= n²-2n+3` gives a Hamiltonian path.
    BipartiteEdgeTraceable,
    /// Balanced bipartite, `ρ >= √(n²-2n+4)`, unless `K_{n,n-2}+4e`.
    BipartiteSpectralHamiltonian,
    /// Balanced bipartite, `ρ >= √(n²-2n+3)`.
    BipartiteSpectralTraceable,
    /// `|X| = n+1`, `|Y| = n`, `ρ >= √(n²-n+2)`, unless `K_{n+1,n-2}+4e` or `K_{n,n-1}+2e`.
    BipartiteSpectralTraceableUnbalanced,
    /// Balanced bipartite, `ρ(G⋆) <= √((n-2)/2)`.
    QuasiComplement,
    /// `δ >= 2`, `m > (n²-4n+6)/2`, unless in the NC list.
    EdgeHamiltonian,
    /// `δ >= 1`, `m > (n²-4n+3)/2`, unless in the NP list.
    EdgeTraceable,
    /// `δ >= 2`, `q >= 2n-5+3/(n-1)`, unless `K3∨4K1`, `K2∨3K1` or `K2∨(K2+2K1)`.
    QTightHamiltonian,
    /// `δ >= 1`, `q >= 2n-5`, unless `K2∨4K1`, `K1∨(K2+2K1)`, `K1,3`, `K1,4`.
    QTightTraceable,
    /// `q > 2n-4`, unless `K2∨3K1` or `K_{n-1}+e`.
    YuFanHamiltonian,
    /// `q >= 2n-4`, unless `K1,3` or `K_{n-1}+v`.
    YuFanTraceable,
    /// Connected, `n >= 4`, `q >= (2(n-2)²+4)/(n-1)`, unless `K2∨4K1` or `K3∨5K1`.
    YuConnectedTraceable,
    /// `q(Ḡ) <= n-1` and not in EC_n.
    ComplementHamiltonian,
    /// `q(Ḡ) <= n` and not in EP_n.
    ComplementTraceable,
}

impl Condition {
    pub const ALL: [Condition; 19] = [
        Condition::ChvatalDegree,
        Condition::BipartiteDegree,
        Condition::BipartitePairDegree,
        Condition::BipartiteEdgeHamiltonian,
        Condition::BipartiteEdgeHamiltonianMinDeg2,
        Condition::BipartiteEdgeTraceable,
        Condition::BipartiteSpectralHamiltonian,
        Condition::BipartiteSpectralTraceable,
        Condition::BipartiteSpectralTraceableUnbalanced,
        Condition::QuasiComplement,
        Condition::EdgeHamiltonian,
        Condition::EdgeTraceable,
        Condition::QTightHamiltonian,
        Condition::QTightTraceable,
        Condition::YuFanHamiltonian,
        Condition::YuFanTraceable,
        Condition::YuConnectedTraceable,
        Condition::ComplementHamiltonian,
        Condition::ComplementTraceable,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Condition::ChvatalDegree => "chvatal-degree",
            Condition::BipartiteDegree => "bipartite-degree",
            Condition::BipartitePairDegree => "bipartite-pair-degree",
            Condition::BipartiteEdgeHamiltonian => "bipartite-edge-hamiltonian",
            Condition::BipartiteEdgeHamiltonianMinDeg2 => "bipartite-edge-hamiltonian-mindeg2",
            Condition::BipartiteEdgeTraceable => "bipartite-edge-traceable",
            Condition::BipartiteSpectralHamiltonian => "bipartite-spectral-hamiltonian",
            Condition::BipartiteSpectralTraceable => "bipartite-spectral-traceable",
            Condition::BipartiteSpectralTraceableUnbalanced => "bipartite-spectral-traceable-unbalanced",
            Condition::QuasiComplement => "quasi-complement",
            Condition::EdgeHamiltonian => "edge-hamiltonian",
            Condition::EdgeTraceable => "edge-traceable",
            Condition::QTightHamiltonian => "q-tight-hamiltonian",
            Condition::QTightTraceable => "q-tight-traceable",
            Condition::YuFanHamiltonian => "yu-fan-hamiltonian",
            Condition::YuFanTraceable => "yu-fan-traceable",
            Condition::YuConnectedTraceable => "yu-connected-traceable",
            Condition::ComplementHamiltonian => "complement-hamiltonian",
            Condition::ComplementTraceable => "complement-traceable",
        }
    }

    pub fn from_id(id: &str) -> Option<Condition> {
        Condition::ALL.into_iter().find(|c| c.id() == id)
    }

    pub fn property(self) -> Property {
        match self {
            Condition::BipartiteEdgeTraceable
            | Condition::BipartiteSpectralTraceable
            | Condition::BipartiteSpectralTraceableUnbalanced
            | Condition::EdgeTraceable
            | Condition::QTightTraceable
            | Condition::YuFanTraceable
            | Condition::YuConnectedTraceable
            | Condition::ComplementTraceable => Property::Traceable,
            _ => Property::Hamiltonian,
        }
    }

    pub fn input_kind(self) -> InputKind {
        match self {
            Condition::BipartiteDegree
            | Condition::BipartitePairDegree
            | Condition::BipartiteEdgeHamiltonian
            | Condition::BipartiteEdgeHamiltonianMinDeg2
            | Condition::BipartiteEdgeTraceable
            | Condition::BipartiteSpectralHamiltonian
            | Condition::BipartiteSpectralTraceable
            | Condition::BipartiteSpectralTraceableUnbalanced
            | Condition::QuasiComplement => InputKind::Bipartite,
            _ => InputKind::General,
        }
    }

    /// Whether every listed exceptional graph is claimed to lack the property.
    /// The complement conditions exclude whole classes, some of whose
    /// members do have it.
    pub fn exceptions_lack_property(self) -> bool {
        !matches!(self, Condition::ComplementHamiltonian | Condition::ComplementTraceable)
    }

    /// Numeric threshold of a floating-point hypothesis at order `n` (for
    /// bipartite conditions, `n` is the size of the `Y` side). `None` for the
    /// degree and edge-count conditions.
    pub fn threshold(self, n: usize) -> Option<f64> {
        let n = n as f64;
        Some(match self {
            Condition::BipartiteSpectralHamiltonian => (n * n - 2.0 * n + 4.0).sqrt(),
            Condition::BipartiteSpectralTraceable => (n * n - 2.0 * n + 3.0).sqrt(),
            Condition::BipartiteSpectralTraceableUnbalanced => (n * n - n + 2.0).sqrt(),
            Condition::QuasiComplement => ((n - 2.0) / 2.0).sqrt(),
            Condition::QTightHamiltonian => 2.0 * n - 5.0 + 3.0 / (n - 1.0),
            Condition::QTightTraceable => 2.0 * n - 5.0,
            Condition::YuFanHamiltonian | Condition::YuFanTraceable => 2.0 * n - 4.0,
            Condition::YuConnectedTraceable => (2.0 * (n - 2.0) * (n - 2.0) + 4.0) / (n - 1.0),
            Condition::ComplementHamiltonian => n - 1.0,
            Condition::ComplementTraceable => n,
            _ => return None,
        })
    }

    /// Whether the measured value must reach the threshold from above
    /// (`true`) or stay below it.
    pub fn lower_bound_hypothesis(self) -> bool {
        !matches!(self, Condition::QuasiComplement | Condition::ComplementHamiltonian | Condition::ComplementTraceable)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Tolerances shared by the spectral checkers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Residual tolerance for power iteration.
    pub spectral: f64,
    /// Width of the boundary band in threshold comparisons.
    pub compare: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { spectral: DEFAULT_TOL, compare: DEFAULT_CMP_TOL }
    }
}

/// One named number in a certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertEntry {
    pub name: String,
    pub value: f64,
}

/// Outcome of one checker on one input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub condition: Condition,
    pub status: Status,
    pub property: Property,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyId>,
    /// The numbers compared. When a hypothesis was evaluated, `margin` is
    /// its slack: nonnegative exactly when the hypothesis holds.
    pub certificate: Vec<CertEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    pub(crate) fn new(condition: Condition, status: Status) -> Self {
        Verdict { condition, status, property: condition.property(), family: None, certificate: Vec::new(), note: None }
    }

    pub(crate) fn not_applicable(condition: Condition, why: impl Into<String>) -> Self {
        let mut v = Verdict::new(condition, Status::NotApplicable);
        v.note = Some(why.into());
        v
    }

    pub(crate) fn cert(mut self, name: &str, value: impl Into<f64>) -> Self {
        self.certificate.push(CertEntry { name: name.to_string(), value: value.into() });
        self
    }

    /// Looks up a certificate entry by name.
    pub fn get(&self, name: &str) -> Option<f64> {
        self.certificate.iter().find(|c| c.name == name).map(|c| c.value)
    }

    pub fn margin(&self) -> Option<f64> {
        self.get("margin")
    }
}

/// A general or bipartite input to [`evaluate`].
#[derive(Debug, Clone, Copy)]
pub enum Input<'a> {
    General(&'a Graph),
    Bipartite(&'a BipartiteGraph),
}

/// Runs `condition` on `input`. Bipartite conditions given a general graph
/// report `NotApplicable`; general conditions read a bipartite input as its
/// underlying graph.
pub fn evaluate(condition: Condition, input: Input<'_>, tol: &Tolerances) -> Verdict {
    let owned;
    let (graph, bip) = match input {
        Input::General(g) => (g, None),
        Input::Bipartite(b) => {
            owned = b.to_graph();
            (&owned, Some(b))
        }
    };
    if condition.input_kind() == InputKind::Bipartite {
        let Some(b) = bip else {
            return Verdict::not_applicable(condition, "requires a bipartite input with a fixed bipartition");
        };
        return match condition {
            Condition::BipartiteDegree => bipartite_degree_hamiltonian(b),
            Condition::BipartitePairDegree => moon_moser_hamiltonian(b),
            Condition::BipartiteEdgeHamiltonian => edge_bound_bipartite(b, BipartiteEdgeTarget::HamiltonianMinDeg1),
            Condition::BipartiteEdgeHamiltonianMinDeg2 => {
                edge_bound_bipartite(b, BipartiteEdgeTarget::HamiltonianMinDeg2)
            }
            Condition::BipartiteEdgeTraceable => edge_bound_bipartite(b, BipartiteEdgeTarget::Traceable),
            Condition::BipartiteSpectralHamiltonian => {
                spectral_bipartite(b, BipartiteSpectralTarget::HamiltonianBalanced, tol)
            }
            Condition::BipartiteSpectralTraceable => {
                spectral_bipartite(b, BipartiteSpectralTarget::TraceableBalanced, tol)
            }
            Condition::BipartiteSpectralTraceableUnbalanced => {
                spectral_bipartite(b, BipartiteSpectralTarget::TraceableUnbalanced, tol)
            }
            Condition::QuasiComplement => quasi_complement_hamiltonian(b, tol),
            _ => unreachable!("general condition"),
        };
    }
    match condition {
        Condition::ChvatalDegree => chvatal_hamiltonian(graph),
        Condition::EdgeHamiltonian => edge_bound_general(graph, Property::Hamiltonian),
        Condition::EdgeTraceable => edge_bound_general(graph, Property::Traceable),
        Condition::QTightHamiltonian => q_spectral_general(graph, QTarget::HamiltonianTight, tol),
        Condition::QTightTraceable => q_spectral_general(graph, QTarget::TraceableTight, tol),
        Condition::YuFanHamiltonian => q_spectral_general(graph, QTarget::YuFanHamiltonian, tol),
        Condition::YuFanTraceable => q_spectral_general(graph, QTarget::YuFanTraceable, tol),
        Condition::YuConnectedTraceable => q_spectral_general(graph, QTarget::YuConnectedTraceable, tol),
        Condition::ComplementHamiltonian => zhou_complement(graph, Property::Hamiltonian, tol),
        Condition::ComplementTraceable => zhou_complement(graph, Property::Traceable, tol),
        _ => unreachable!("bipartite condition"),
    }
}

/// Whether the hypothesis is a lower or an upper bound on the measured value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    AtLeast,
    AtMost,
}

/// Shared tail of every floating-point threshold check. `exceptions` runs
/// only when the hypothesis holds or sits on the boundary.
pub(crate) fn threshold_verdict(
    condition: Condition,
    value_name: &str,
    value: f64,
    threshold: f64,
    direction: Direction,
    cmp_tol: f64,
    exceptions: impl FnOnce() -> Option<(FamilyId, Option<String>)>,
) -> Verdict {
    let slack = match direction {
        Direction::AtLeast => value - threshold,
        Direction::AtMost => threshold - value,
    };
    let outcome = compare_threshold(slack, 0.0, cmp_tol);
    let base = |status| {
        Verdict::new(condition, status).cert(value_name, value).cert("threshold", threshold).cert("margin", slack)
    };
    if outcome.relation == Relation::Below {
        return base(Status::Inconclusive);
    }
    if let Some((family, note)) = exceptions() {
        let mut v = base(Status::Exception);
        if outcome.relation == Relation::Boundary {
            v = v.cert("boundary", 1.0);
        }
        v.family = Some(family);
        v.note = note;
        return v;
    }
    match outcome.relation {
        Relation::Boundary => base(Status::Boundary),
        _ => base(Status::Guaranteed),
    }
}
