use serde::{Deserialize, Serialize};

use crate::family::FamilyId;
use crate::graph::{BipartiteGraph, Graph};

use super::recognize::{nc_member_of, np_member_of, recognize_family};
use super::{Condition, Property, Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BipartiteEdgeTarget {
    /// `δ >= 1`, `n >= 2`, `m >= n²-n+1`, unless `K_{n,n-1}+e`.
    HamiltonianMinDeg1,
    /// `δ >= 2`, `n >= 4`, `m >= n²-2n+4`, unless `K_{n,n-2}+4e`.
    HamiltonianMinDeg2,
    /// `δ >= 1`, `n >= 3`, `m >= n²-2n+3`.
    Traceable,
}

/// Edge-count conditions for balanced bipartite graphs.
pub fn edge_bound_bipartite(b: &BipartiteGraph, target: BipartiteEdgeTarget) -> Verdict {
    let (cond, min_n, min_deg) = match target {
        BipartiteEdgeTarget::HamiltonianMinDeg1 => (Condition::BipartiteEdgeHamiltonian, 2, 1),
        BipartiteEdgeTarget::HamiltonianMinDeg2 => (Condition::BipartiteEdgeHamiltonianMinDeg2, 4, 2),
        BipartiteEdgeTarget::Traceable => (Condition::BipartiteEdgeTraceable, 3, 1),
    };
    if !b.is_balanced() {
        return Verdict::not_applicable(cond, format!("unbalanced bipartition ({}, {})", b.p(), b.q()));
    }
    let n = b.p();
    if n < min_n {
        return Verdict::not_applicable(cond, format!("n = {n} < {min_n}")).cert("n", n as f64);
    }
    let delta = b.min_degree();
    if delta < min_deg {
        return Verdict::not_applicable(cond, format!("minimum degree {delta} < {min_deg}"))
            .cert("min_degree", delta as f64)
            .cert("required_min_degree", min_deg as f64);
    }
    let bound = match target {
        BipartiteEdgeTarget::HamiltonianMinDeg1 => n * n - n + 1,
        BipartiteEdgeTarget::HamiltonianMinDeg2 => n * n - 2 * n + 4,
        BipartiteEdgeTarget::Traceable => n * n - 2 * n + 3,
    };
    let m = b.edge_count();
    let base = |status| {
        Verdict::new(cond, status)
            .cert("n", n as f64)
            .cert("m", m as f64)
            .cert("threshold", bound as f64)
            .cert("margin", m as f64 - bound as f64)
    };
    if m < bound {
        return base(Status::Inconclusive);
    }
    let exception = match target {
        BipartiteEdgeTarget::HamiltonianMinDeg1 => Some(FamilyId::Knn1PlusEdge { n }),
        BipartiteEdgeTarget::HamiltonianMinDeg2 => Some(FamilyId::Kpn2Plus4e { n, p: n }),
        BipartiteEdgeTarget::Traceable => None,
    };
    if let Some(id) = exception {
        if recognize_family(&b.to_graph(), id) {
            let mut v = base(Status::Exception);
            v.family = Some(id);
            return v;
        }
    }
    base(Status::Guaranteed)
}

/// Edge-count conditions for general graphs: `m > (n²-4n+6)/2` with `δ >= 2`
/// (Hamiltonian unless NC), `m > (n²-4n+3)/2` with `δ >= 1` (traceable
/// unless NP).
pub fn edge_bound_general(g: &Graph, target: Property) -> Verdict {
    let (cond, min_deg, twice_bound) = {
        let n = g.n() as i64;
        match target {
            Property::Hamiltonian => (Condition::EdgeHamiltonian, 2, n * n - 4 * n + 6),
            Property::Traceable => (Condition::EdgeTraceable, 1, n * n - 4 * n + 3),
        }
    };
    let n = g.n();
    let delta = g.min_degree();
    if delta < min_deg {
        return Verdict::not_applicable(cond, format!("minimum degree {delta} < {min_deg}"))
            .cert("min_degree", delta as f64)
            .cert("required_min_degree", min_deg as f64);
    }
    let m = g.edge_count() as i64;
    // m > twice_bound / 2  <=>  m >= floor(twice_bound / 2) + 1
    let least = twice_bound.div_euclid(2) + 1;
    let base = |status| {
        Verdict::new(cond, status)
            .cert("n", n as f64)
            .cert("m", m as f64)
            .cert("threshold", twice_bound as f64 / 2.0)
            .cert("margin", (m - least) as f64)
    };
    if m < least {
        return base(Status::Inconclusive);
    }
    let member = match target {
        Property::Hamiltonian => nc_member_of(g),
        Property::Traceable => np_member_of(g),
    };
    match member {
        Some(id) => {
            let mut v = base(Status::Exception);
            v.family = Some(id);
            v
        }
        None => base(Status::Guaranteed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::make_family;

    fn complete_minus(n: usize, missing: &[(usize, usize)]) -> BipartiteGraph {
        let edges: Vec<_> =
            (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|e| !missing.contains(e)).collect();
        BipartiteGraph::from_edges(n, n, &edges).unwrap()
    }

    #[test]
    fn bipartite_examples() {
        let ex = make_family(FamilyId::Knn1PlusEdge { n: 4 }).unwrap();
        let v = edge_bound_bipartite(ex.bipartite().unwrap(), BipartiteEdgeTarget::HamiltonianMinDeg1);
        assert_eq!(v.status, Status::Exception);
        assert_eq!(v.family, Some(FamilyId::Knn1PlusEdge { n: 4 }));
        assert_eq!(v.get("m"), Some(13.0));

        let minus_matching = complete_minus(4, &[(0, 0), (1, 1), (2, 2), (3, 3)]);
        let v = edge_bound_bipartite(&minus_matching, BipartiteEdgeTarget::HamiltonianMinDeg2);
        assert_eq!(v.status, Status::Guaranteed);
        assert_eq!(v.margin(), Some(0.0));

        let minus_two = complete_minus(3, &[(0, 0), (1, 1)]);
        let v = edge_bound_bipartite(&minus_two, BipartiteEdgeTarget::Traceable);
        assert_eq!(v.status, Status::Guaranteed);
        assert_eq!(v.get("m"), Some(7.0));
    }

    #[test]
    fn bipartite_preconditions() {
        let star_like = BipartiteGraph::from_edges(2, 2, &[(0, 0), (0, 1)]).unwrap();
        let v = edge_bound_bipartite(&star_like, BipartiteEdgeTarget::HamiltonianMinDeg1);
        assert_eq!(v.status, Status::NotApplicable);
        assert_eq!(v.get("min_degree"), Some(0.0));
        let small = BipartiteGraph::complete(3, 3).unwrap();
        assert_eq!(edge_bound_bipartite(&small, BipartiteEdgeTarget::HamiltonianMinDeg2).status, Status::NotApplicable);
        let unbalanced = BipartiteGraph::complete(3, 4).unwrap();
        assert_eq!(edge_bound_bipartite(&unbalanced, BipartiteEdgeTarget::Traceable).status, Status::NotApplicable);
    }

    #[test]
    fn general_examples() {
        let nc5 = make_family(FamilyId::NcMember { index: 5 }).unwrap().graph();
        let v = edge_bound_general(&nc5, Property::Hamiltonian);
        assert_eq!(v.status, Status::Exception);
        assert_eq!(v.family, Some(FamilyId::NcMember { index: 5 }));
        assert_eq!(v.get("threshold"), Some(9.0));

        // K2 ∨ (K2 + K_{1,2}) on 7 vertices, 14 edges
        let k2 = Graph::complete(2).unwrap();
        let p3 = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let g = k2.join(&k2.disjoint_union(&p3).unwrap()).unwrap();
        assert_eq!(g.edge_count(), 14);
        let v = edge_bound_general(&g, Property::Hamiltonian);
        assert_eq!(v.status, Status::Guaranteed);

        let two_k2 = make_family(FamilyId::NpMember { index: 6 }).unwrap().graph();
        let v = edge_bound_general(&two_k2, Property::Traceable);
        assert_eq!(v.status, Status::Exception);
        assert_eq!(v.family, Some(FamilyId::NpMember { index: 6 }));

        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_bound_general(&path, Property::Hamiltonian).status, Status::NotApplicable);
        let c6 = make_family(FamilyId::Cycle { n: 6 }).unwrap().graph();
        assert_eq!(edge_bound_general(&c6, Property::Hamiltonian).status, Status::Inconclusive);
    }
}
