use serde::{Deserialize, Serialize};

use crate::error::SpectralError;
use crate::family::{ExceptionClass, FamilyId};
use crate::graph::{BipartiteGraph, Graph};
use crate::spectral::{q_radius, rho, SpectralEstimate};

use super::classes::ec_ep_membership;
use super::recognize::recognize_family;
use super::{threshold_verdict, Condition, Direction, Property, Status, Tolerances, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BipartiteSpectralTarget {
    /// `p = q = n >= 4`, `δ >= 2`, `ρ >= √(n²-2n+4)`.
    HamiltonianBalanced,
    /// `p = q = n >= 3`, `δ >= 1`, `ρ >= √(n²-2n+3)`.
    TraceableBalanced,
    /// `p = n+1`, `q = n >= 3`, `δ_X >= 1`, `δ_Y >= 2`, `ρ >= √(n²-n+2)`.
    TraceableUnbalanced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QTarget {
    /// `n >= 4`, `δ >= 2`, `q >= 2n-5+3/(n-1)`, unless `K3∨4K1`, `K2∨3K1` or
    /// `K2∨(K2+2K1)`.
    HamiltonianTight,
    /// `n >= 4`, `δ >= 1`, `q >= 2n-5`.
    TraceableTight,
    /// `n >= 3`, `q > 2n-4`.
    YuFanHamiltonian,
    /// `n >= 3`, `q >= 2n-4`.
    YuFanTraceable,
    /// `n >= 4`, connected, `q >= (2(n-2)²+4)/(n-1)`, unless `K2∨4K1` or `K3∨5K1`.
    YuConnectedTraceable,
}

fn unconverged(cond: Condition, what: &str, err: SpectralError) -> Verdict {
    let mut v = Verdict::new(cond, Status::Inconclusive);
    if let SpectralError::NoConvergence { residual, iterations } = err {
        v = v.cert("residual", residual).cert("iterations", iterations as f64);
    }
    v.note = Some(format!("{what}: {err}"));
    v
}

fn with_estimate(v: Verdict, est: &SpectralEstimate) -> Verdict {
    v.cert("residual", est.residual).cert("iterations", est.iterations as f64)
}

fn first_match(g: &Graph, ids: &[FamilyId]) -> Option<(FamilyId, Option<String>)> {
    ids.iter().copied().find(|&id| recognize_family(g, id)).map(|id| (id, None))
}

/// Spectral-radius conditions for bipartite graphs with a fixed bipartition.
pub fn spectral_bipartite(b: &BipartiteGraph, target: BipartiteSpectralTarget, tol: &Tolerances) -> Verdict {
    let (p, q) = (b.p(), b.q());
    let cond = match target {
        BipartiteSpectralTarget::HamiltonianBalanced => Condition::BipartiteSpectralHamiltonian,
        BipartiteSpectralTarget::TraceableBalanced => Condition::BipartiteSpectralTraceable,
        BipartiteSpectralTarget::TraceableUnbalanced => Condition::BipartiteSpectralTraceableUnbalanced,
    };
    let n = q;
    let (want_p, min_n, min_dx, min_dy) = match target {
        BipartiteSpectralTarget::HamiltonianBalanced => (n, 4, 2, 2),
        BipartiteSpectralTarget::TraceableBalanced => (n, 3, 1, 1),
        BipartiteSpectralTarget::TraceableUnbalanced => (n + 1, 3, 1, 2),
    };
    if p != want_p {
        return Verdict::not_applicable(cond, format!("sides ({p}, {q}) must be ({want_p}, {q})"))
            .cert("p", p as f64)
            .cert("q", q as f64);
    }
    if n < min_n {
        return Verdict::not_applicable(cond, format!("n = {n} < {min_n}")).cert("n", n as f64);
    }
    let (dx, dy) = (b.min_degree_x(), b.min_degree_y());
    if dx < min_dx || dy < min_dy {
        return Verdict::not_applicable(
            cond,
            format!("minimum degrees ({dx}, {dy}) below required ({min_dx}, {min_dy})"),
        )
        .cert("min_degree_x", dx as f64)
        .cert("min_degree_y", dy as f64);
    }
    let threshold = cond.threshold(n).expect("spectral condition");
    let exceptions = match target {
        BipartiteSpectralTarget::HamiltonianBalanced => vec![FamilyId::Kpn2Plus4e { n, p: n }],
        BipartiteSpectralTarget::TraceableBalanced => vec![],
        BipartiteSpectralTarget::TraceableUnbalanced => {
            vec![FamilyId::Kpn2Plus4e { n, p: n + 1 }, FamilyId::Knn1Plus2e { n }]
        }
    };
    let g = b.to_graph();
    let est = match rho(&g, tol.spectral) {
        Ok(e) => e,
        Err(e) => return unconverged(cond, "spectral radius", e),
    };
    let v = threshold_verdict(cond, "rho", est.value, threshold, Direction::AtLeast, tol.compare, || {
        first_match(&g, &exceptions)
    });
    with_estimate(v.cert("n", n as f64), &est)
}

/// Balanced bipartite `G` is Hamiltonian when its quasi-complement has
/// `ρ(G⋆) <= √((n-2)/2)`.
pub fn quasi_complement_hamiltonian(b: &BipartiteGraph, tol: &Tolerances) -> Verdict {
    let cond = Condition::QuasiComplement;
    if !b.is_balanced() {
        return Verdict::not_applicable(cond, format!("unbalanced bipartition ({}, {})", b.p(), b.q()))
            .cert("p", b.p() as f64)
            .cert("q", b.q() as f64);
    }
    let n = b.p();
    if n < 2 {
        return Verdict::not_applicable(cond, format!("n = {n} < 2")).cert("n", n as f64);
    }
    let star = b.quasi_complement().to_graph();
    let est = match rho(&star, tol.spectral) {
        Ok(e) => e,
        Err(e) => return unconverged(cond, "quasi-complement spectral radius", e),
    };
    let threshold = cond.threshold(n).expect("spectral condition");
    let v = threshold_verdict(cond, "rho_star", est.value, threshold, Direction::AtMost, tol.compare, || None);
    with_estimate(v.cert("n", n as f64), &est)
}

/// Signless Laplacian conditions on general graphs.
pub fn q_spectral_general(g: &Graph, target: QTarget, tol: &Tolerances) -> Verdict {
    let n = g.n();
    let cond = match target {
        QTarget::HamiltonianTight => Condition::QTightHamiltonian,
        QTarget::TraceableTight => Condition::QTightTraceable,
        QTarget::YuFanHamiltonian => Condition::YuFanHamiltonian,
        QTarget::YuFanTraceable => Condition::YuFanTraceable,
        QTarget::YuConnectedTraceable => Condition::YuConnectedTraceable,
    };
    let (min_n, min_deg) = match target {
        QTarget::HamiltonianTight => (4, 2),
        QTarget::TraceableTight => (4, 1),
        QTarget::YuFanHamiltonian | QTarget::YuFanTraceable => (3, 0),
        QTarget::YuConnectedTraceable => (4, 0),
    };
    if n < min_n {
        return Verdict::not_applicable(cond, format!("n = {n} < {min_n}")).cert("n", n as f64);
    }
    let delta = g.min_degree();
    if delta < min_deg {
        return Verdict::not_applicable(cond, format!("minimum degree {delta} < {min_deg}"))
            .cert("min_degree", delta as f64)
            .cert("required_min_degree", min_deg as f64);
    }
    if target == QTarget::YuConnectedTraceable && !g.is_connected() {
        return Verdict::not_applicable(cond, "graph is disconnected").cert("components", g.components().len() as f64);
    }
    let threshold = cond.threshold(n).expect("spectral condition");
    let exceptions = match target {
        // K2∨(K2+2K1) is included too: at n = 6 it has q ≈ 7.7588 >= 7.6 and no
        // Hamiltonian cycle.
        QTarget::HamiltonianTight => vec![
            FamilyId::NcMember { index: 2 },
            FamilyId::NcMember { index: 8 },
            FamilyId::NcMember { index: 5 },
        ],
        QTarget::TraceableTight => vec![
            FamilyId::NpMember { index: 2 },
            FamilyId::NpMember { index: 5 },
            FamilyId::Star { leaves: 3 },
            FamilyId::Star { leaves: 4 },
        ],
        QTarget::YuFanHamiltonian => vec![FamilyId::NcMember { index: 8 }, FamilyId::Kn1PlusEdge { n }],
        QTarget::YuFanTraceable => vec![FamilyId::Star { leaves: 3 }, FamilyId::Kn1PlusVertex { n }],
        // K2∨4K1 (n = 6, q ≈ 7.4641 >= 7.2) and K3∨5K1 (n = 8, q ≈ 10.8990 >= 10.8571)
        // are connected and nontraceable.
        QTarget::YuConnectedTraceable => vec![FamilyId::NpMember { index: 2 }, FamilyId::NpMember { index: 0 }],
    };
    let est = match q_radius(g, tol.spectral) {
        Ok(e) => e,
        Err(e) => return unconverged(cond, "signless Laplacian radius", e),
    };
    let v = threshold_verdict(cond, "q", est.value, threshold, Direction::AtLeast, tol.compare, || {
        first_match(g, &exceptions)
    });
    let v = if target == QTarget::YuFanHamiltonian { v.cert("strict", 1.0) } else { v };
    with_estimate(v.cert("n", n as f64), &est)
}

/// Complement conditions: `q(Ḡ) <= n-1` outside EC_n gives a Hamiltonian
/// cycle, `q(Ḡ) <= n` outside EP_n a Hamiltonian path.
pub fn zhou_complement(g: &Graph, target: Property, tol: &Tolerances) -> Verdict {
    let n = g.n();
    let (cond, class, min_n) = match target {
        Property::Hamiltonian => (Condition::ComplementHamiltonian, ExceptionClass::Ec, 3),
        Property::Traceable => (Condition::ComplementTraceable, ExceptionClass::Ep, 1),
    };
    let threshold = cond.threshold(n).expect("spectral condition");
    if n < min_n {
        return Verdict::not_applicable(cond, format!("n = {n} < {min_n}")).cert("n", n as f64);
    }
    let est = match q_radius(&g.complement(), tol.spectral) {
        Ok(e) => e,
        Err(e) => return unconverged(cond, "complement signless Laplacian radius", e),
    };
    let v = threshold_verdict(cond, "q_complement", est.value, threshold, Direction::AtMost, tol.compare, || {
        ec_ep_membership(g, class).map(|w| (w.family(), Some(w.describe())))
    });
    with_estimate(v.cert("n", n as f64), &est)
}
