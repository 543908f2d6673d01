use serde::Serialize;

use hamspec::conditions::{evaluate, Condition, Input, InputKind, Status, Tolerances, Verdict};
use hamspec::oracle::{is_hamiltonian, is_traceable, HamWitness};
use hamspec::spectral::{q_radius, rho};
use hamspec::{BipartiteGraph, Graph};

/// Graphs up to this order get an exact oracle answer.
pub const ORACLE_MAX: usize = 24;

#[derive(Debug, Serialize)]
pub struct OracleResult {
    pub hamiltonian: bool,
    pub traceable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct AnalysisRecord {
    pub id: String,
    pub line: usize,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub rho: Option<f64>,
    pub q: Option<f64>,
    /// Side sizes used by the bipartite checkers, larger side first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<(usize, usize)>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleResult>,
}

/// Splits `g` into sides with the larger colour class as `X`.
pub fn bipartite_view(g: &Graph) -> Option<BipartiteGraph> {
    let mut colours = g.two_colouring()?;
    let count = colours.iter().filter(|&&c| c).count();
    if 2 * count < colours.len() {
        colours.iter_mut().for_each(|c| *c = !*c);
    }
    BipartiteGraph::from_graph_with_sides(g, &colours).ok()
}

pub fn oracle_result(g: &Graph) -> Option<OracleResult> {
    if g.n() > ORACLE_MAX {
        return None;
    }
    let cycle = is_hamiltonian(g).ok()?;
    let path = is_traceable(g).ok()?;
    Some(OracleResult {
        hamiltonian: cycle.is_some(),
        traceable: path.is_some(),
        cycle: cycle.map(|w: HamWitness| w.order),
        path: path.map(|w| w.order),
    })
}

pub fn analyze(id: String, line: usize, g: &Graph, tol: &Tolerances) -> AnalysisRecord {
    let bip = bipartite_view(g);
    let verdicts = Condition::ALL
        .into_iter()
        .filter_map(|c| {
            let input = match (c.input_kind(), &bip) {
                (InputKind::General, _) => Input::General(g),
                (InputKind::Bipartite, Some(b)) => Input::Bipartite(b),
                (InputKind::Bipartite, None) => return None,
            };
            let v = evaluate(c, input, tol);
            (v.status != Status::NotApplicable).then_some(v)
        })
        .collect();
    AnalysisRecord {
        id,
        line,
        n: g.n(),
        m: g.edge_count(),
        min_degree: g.min_degree(),
        rho: rho(g, tol.spectral).ok().map(|e| e.value),
        q: q_radius(g, tol.spectral).ok().map(|e| e.value),
        bipartition: bip.as_ref().map(|b| (b.p(), b.q())),
        verdicts,
        oracle: oracle_result(g),
    }
}

fn fmt_num(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{x:.0}")
    } else {
        format!("{x:.6}")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verdict_line(v: &Verdict) -> String {
    let mut s = format!("  {:<40} {:<13} ", v.condition.id(), v.status.to_string());
    let certs: Vec<String> = v
        .certificate
        .iter()
        .filter(|c| !matches!(c.name.as_str(), "residual" | "iterations"))
        .map(|c| format!("{}={}", c.name, fmt_num(c.value)))
        .collect();
    s.push_str(&certs.join(" "));
    if let Some(f) = &v.family {
        s.push_str(&format!(" [{f}]"));
    }
    if let Some(note) = &v.note {
        s.push_str(&format!(" ({note})"));
    }
    s.trim_end().to_string()
}

impl AnalysisRecord {
    pub fn to_text(&self) -> String {
        let opt = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{v:.6}"));
        let mut s = format!("{} (line {})\n", self.id, self.line);
        s.push_str(&format!(
            "  n={} m={} δ={} ρ={} q={}",
            self.n,
            self.m,
            self.min_degree,
            opt(self.rho),
            opt(self.q)
        ));
        if let Some((p, q)) = self.bipartition {
            s.push_str(&format!(" bipartite ({p}, {q})"));
        }
        s.push('\n');
        match &self.oracle {
            Some(o) => s.push_str(&format!(
                "  oracle: hamiltonian={} traceable={}\n",
                yes_no(o.hamiltonian),
                yes_no(o.traceable)
            )),
            None => s.push_str(&format!("  oracle: skipped (n > {ORACLE_MAX})\n")),
        }
        for v in &self.verdicts {
            s.push_str(&verdict_line(v));
            s.push('\n');
        }
        s
    }
}
