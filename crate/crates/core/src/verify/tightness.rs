use serde::{Deserialize, Serialize};

use crate::conditions::{evaluate, Condition, Input, InputKind, Status, Tolerances, Verdict};
use crate::error::VerifyError;
use crate::family::{make_family, FamilyGraph, FamilyId, NC_LEN, NP_LEN};
use crate::graph::{BipartiteGraph, Graph};
use crate::graph6::write_graph6;

use super::enumerate::{fold_bipartite, fold_graphs, Mode};
use super::soundness::{has_property, required_min_degree, Caps};

/// A graph whose hypothesis fails narrowly and which lacks the property.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NearMiss {
    pub graph6: String,
    pub n: usize,
    /// Hypothesis slack; negative.
    pub margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

/// How a listed exceptional graph fares against its own condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExceptionProbe {
    pub family: String,
    pub id: FamilyId,
    pub status: Status,
    /// Whether the hypothesis holds (possibly within the boundary band).
    pub hypothesis_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    pub lacks_property: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TightnessReport {
    pub theorem_id: String,
    pub caps: Caps,
    pub near_misses: Vec<NearMiss>,
    pub exception_probes: Vec<ExceptionProbe>,
}

fn measured(v: &Verdict) -> Option<f64> {
    ["rho", "rho_star", "q", "q_complement", "m"].iter().find_map(|k| v.get(k))
}

/// Keeps the `keep` entries with the largest margin, ties by graph6.
fn better(a: &NearMiss, b: &NearMiss) -> std::cmp::Ordering {
    b.margin.total_cmp(&a.margin).then_with(|| a.graph6.cmp(&b.graph6))
}

struct Best {
    keep: usize,
    items: Vec<NearMiss>,
}

impl Best {
    fn would_enter(&self, margin: f64) -> bool {
        self.items.len() < self.keep || self.items.last().is_some_and(|w| margin >= w.margin)
    }

    fn push(&mut self, item: NearMiss) {
        self.items.push(item);
        self.items.sort_by(better);
        self.items.truncate(self.keep);
    }

    fn merge(mut self, other: Best) -> Best {
        for item in other.items {
            self.push(item);
        }
        self
    }

    fn offer(&mut self, v: &Verdict, g: &Graph, n: usize) {
        if v.status != Status::Inconclusive || v.note.is_some() {
            return;
        }
        let Some(margin) = v.margin() else { return };
        if margin >= 0.0 || !self.would_enter(margin) {
            return;
        }
        if has_property(g, v.property) {
            return;
        }
        self.push(NearMiss { graph6: write_graph6(g), n, margin, value: measured(v) });
    }
}

/// Exceptional graphs named by `condition`, at orders up to `max_n`.
pub fn listed_exceptions(condition: Condition, max_n: usize) -> Vec<FamilyId> {
    let upto = |lo: usize| lo..=max_n.max(lo);
    match condition {
        Condition::BipartiteEdgeHamiltonian => upto(2).map(|n| FamilyId::Knn1PlusEdge { n }).collect(),
        Condition::BipartiteEdgeHamiltonianMinDeg2 | Condition::BipartiteSpectralHamiltonian => {
            upto(4).map(|n| FamilyId::Kpn2Plus4e { n, p: n }).collect()
        }
        Condition::BipartiteSpectralTraceableUnbalanced => upto(3)
            .flat_map(|n| [FamilyId::Kpn2Plus4e { n, p: n + 1 }, FamilyId::Knn1Plus2e { n }])
            .collect(),
        Condition::EdgeHamiltonian => (0..NC_LEN).map(|index| FamilyId::NcMember { index }).collect(),
        Condition::EdgeTraceable => (0..NP_LEN).map(|index| FamilyId::NpMember { index }).collect(),
        Condition::QTightHamiltonian => vec![
            FamilyId::NcMember { index: 2 },
            FamilyId::NcMember { index: 8 },
            FamilyId::NcMember { index: 5 },
        ],
        Condition::QTightTraceable => vec![
            FamilyId::NpMember { index: 2 },
            FamilyId::NpMember { index: 5 },
            FamilyId::Star { leaves: 3 },
            FamilyId::Star { leaves: 4 },
        ],
        Condition::YuFanHamiltonian => std::iter::once(FamilyId::NcMember { index: 8 })
            .chain(upto(3).map(|n| FamilyId::Kn1PlusEdge { n }))
            .collect(),
        Condition::YuFanTraceable => std::iter::once(FamilyId::Star { leaves: 3 })
            .chain(upto(3).map(|n| FamilyId::Kn1PlusVertex { n }))
            .collect(),
        Condition::YuConnectedTraceable => vec![FamilyId::NpMember { index: 2 }, FamilyId::NpMember { index: 0 }],
        _ => Vec::new(),
    }
}

/// Evaluates `condition` on one listed exceptional graph.
pub fn probe_exception(condition: Condition, id: FamilyId, tol: &Tolerances) -> Option<ExceptionProbe> {
    let fam = make_family(id).ok()?;
    let g = fam.graph();
    let v = match (&fam, condition.input_kind()) {
        (FamilyGraph::Bipartite(b), InputKind::Bipartite) => evaluate(condition, Input::Bipartite(b), tol),
        (FamilyGraph::General(_), InputKind::Bipartite) => {
            let b = bipartite_view(&g)?;
            evaluate(condition, Input::Bipartite(&b), tol)
        }
        _ => evaluate(condition, Input::General(&g), tol),
    };
    Some(ExceptionProbe {
        family: id.to_string(),
        id,
        status: v.status,
        hypothesis_holds: matches!(v.status, Status::Guaranteed | Status::Exception | Status::Boundary),
        margin: v.margin(),
        value: measured(&v),
        lacks_property: !has_property(&g, v.property),
    })
}

fn bipartite_view(g: &Graph) -> Option<BipartiteGraph> {
    let colours = g.two_colouring()?;
    BipartiteGraph::from_graph_with_sides(g, &colours).ok()
}

/// Near misses (up to `keep`, closest first) and exception probes for
/// `condition`.
pub fn tightness_search(condition: Condition, caps: Caps, keep: usize) -> Result<TightnessReport, VerifyError> {
    caps.validate()?;
    let tol = Tolerances::default();
    let delta = required_min_degree(condition);
    let identity = || Best { keep, items: Vec::new() };
    let mut best = identity();
    match condition.input_kind() {
        InputKind::General => {
            for n in caps.min_n.max(1)..=caps.max_n {
                let visit = |acc: &mut Best, g: &Graph| {
                    let v = evaluate(condition, Input::General(g), &tol);
                    acc.offer(&v, g, n);
                };
                let (_, r) = fold_graphs(n, delta, Mode::Parallel, identity, visit, Best::merge)?;
                best = best.merge(r);
            }
        }
        InputKind::Bipartite => {
            for (p, q) in caps.shapes(condition) {
                let visit = |acc: &mut Best, b: &BipartiteGraph| {
                    let v = evaluate(condition, Input::Bipartite(b), &tol);
                    acc.offer(&v, &b.to_graph(), p + q);
                };
                let (_, r) = fold_bipartite(p, q, delta, Mode::Parallel, identity, visit, Best::merge)?;
                best = best.merge(r);
            }
        }
    }
    let probe_max = caps.max_n.max(8);
    let exception_probes =
        listed_exceptions(condition, probe_max).into_iter().filter_map(|id| probe_exception(condition, id, &tol)).collect();
    Ok(TightnessReport { theorem_id: condition.id().to_string(), caps, near_misses: best.items, exception_probes })
}

impl TightnessReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {} near misses\n", self.theorem_id, self.near_misses.len());
        for m in &self.near_misses {
            s.push_str(&format!("  near miss n={} margin={:.6} {}\n", m.n, m.margin, m.graph6));
        }
        for p in &self.exception_probes {
            s.push_str(&format!(
                "  exception {}: status={} hypothesis={} lacks property={}{}\n",
                p.family,
                p.status,
                if p.hypothesis_holds { "holds" } else { "fails" },
                p.lacks_property,
                p.margin.map(|m| format!(" margin={m:.6}")).unwrap_or_default()
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectral_exception_is_vacuous_at_four() {
        let p = probe_exception(
            Condition::BipartiteSpectralHamiltonian,
            FamilyId::Kpn2Plus4e { n: 4, p: 4 },
            &Tolerances::default(),
        )
        .unwrap();
        assert!(!p.hypothesis_holds);
        assert!(p.value.unwrap() < 12f64.sqrt());
        assert!(p.lacks_property);
    }

    #[test]
    fn star_sits_on_the_boundary() {
        let p = probe_exception(Condition::QTightTraceable, FamilyId::Star { leaves: 4 }, &Tolerances::default())
            .unwrap();
        assert_eq!(p.status, Status::Exception);
        assert!(p.margin.unwrap().abs() < 1e-8);
    }

    #[test]
    fn near_misses_are_sorted_and_fail() {
        let caps = Caps { min_n: 4, max_n: 6, max_pq: 9 };
        let r = tightness_search(Condition::EdgeHamiltonian, caps, 3).unwrap();
        assert_eq!(r.near_misses.len(), 3);
        assert!(r.near_misses.windows(2).all(|w| w[0].margin >= w[1].margin));
        assert!(r.near_misses.iter().all(|m| m.margin < 0.0));
        assert_eq!(r.exception_probes.len(), NC_LEN);
    }
}
