use crate::graph::{BipartiteGraph, Graph};

use super::{Condition, Status, Verdict};

/// Chvátal's condition: Hamiltonian when no `k < n/2` has `d_k <= k` and
/// `d_{n-k} <= n-k-1`. Reports the smallest such `k` otherwise.
pub fn chvatal_hamiltonian(g: &Graph) -> Verdict {
    let cond = Condition::ChvatalDegree;
    let n = g.n();
    if n < 3 {
        return Verdict::not_applicable(cond, format!("n = {n} < 3")).cert("n", n as f64);
    }
    let d = g.degree_sequence();
    let mut margin = i64::MAX;
    let mut witness = None;
    // k < n/2  <=>  2k < n
    for k in (1..).take_while(|k| 2 * k < n) {
        let slack = (d.d(k) as i64 - k as i64).max(d.d(n - k) as i64 - (n - k - 1) as i64) - 1;
        margin = margin.min(slack);
        if slack < 0 && witness.is_none() {
            witness = Some(k);
        }
    }
    match witness {
        None => Verdict::new(cond, Status::Guaranteed).cert("n", n as f64).cert("margin", margin as f64),
        Some(k) => Verdict::new(cond, Status::Inconclusive)
            .cert("n", n as f64)
            .cert("k", k as f64)
            .cert("d_k", d.d(k) as f64)
            .cert("d_n_minus_k", d.d(n - k) as f64)
            .cert("margin", margin as f64),
    }
}

fn balance_check(cond: Condition, b: &BipartiteGraph, min_n: usize) -> Option<Verdict> {
    if !b.is_balanced() {
        return Some(
            Verdict::not_applicable(cond, format!("unbalanced bipartition ({}, {})", b.p(), b.q()))
                .cert("p", b.p() as f64)
                .cert("q", b.q() as f64),
        );
    }
    if b.p() < min_n {
        return Some(Verdict::not_applicable(cond, format!("n = {} < {min_n}", b.p())).cert("n", b.p() as f64));
    }
    None
}

/// Balanced bipartite degree condition on all `2n` degrees: Hamiltonian
/// when no `k <= n/2` has `d_k <= k` and `d_n <= n-k`.
pub fn bipartite_degree_hamiltonian(b: &BipartiteGraph) -> Verdict {
    let cond = Condition::BipartiteDegree;
    if let Some(v) = balance_check(cond, b, 2) {
        return v;
    }
    let n = b.p();
    let d = b.degree_sequence();
    let mut margin = i64::MAX;
    let mut witness = None;
    for k in 1..=n / 2 {
        let slack = (d.d(k) as i64 - k as i64).max(d.d(n) as i64 - (n - k) as i64) - 1;
        margin = margin.min(slack);
        if slack < 0 && witness.is_none() {
            witness = Some(k);
        }
    }
    match witness {
        None => Verdict::new(cond, Status::Guaranteed).cert("n", n as f64).cert("margin", margin as f64),
        Some(k) => Verdict::new(cond, Status::Inconclusive)
            .cert("n", n as f64)
            .cert("k", k as f64)
            .cert("d_k", d.d(k) as f64)
            .cert("d_n", d.d(n) as f64)
            .cert("margin", margin as f64),
    }
}

/// Balanced bipartite pair condition: Hamiltonian when every nonadjacent
/// `x ∈ X`, `y ∈ Y` has `d(x) + d(y) >= n + 1`.
pub fn moon_moser_hamiltonian(b: &BipartiteGraph) -> Verdict {
    let cond = Condition::BipartitePairDegree;
    if let Some(v) = balance_check(cond, b, 2) {
        return v;
    }
    let n = b.p();
    let dx = b.degrees_x();
    let dy = b.degrees_y();
    // With no nonadjacent pair the slack is that of two full-degree vertices.
    let mut margin = n as i64 - 1;
    let mut worst: Option<(usize, usize)> = None;
    let mut pairs = 0usize;
    for x in 0..n {
        for y in 0..n {
            if b.has_edge(x, y) {
                continue;
            }
            pairs += 1;
            let slack = (dx[x] + dy[y]) as i64 - (n + 1) as i64;
            if worst.is_none() || slack < margin {
                margin = slack;
                worst = Some((x, y));
            }
        }
    }
    let status = if margin >= 0 { Status::Guaranteed } else { Status::Inconclusive };
    let mut v = Verdict::new(cond, status).cert("n", n as f64).cert("nonadjacent_pairs", pairs as f64);
    if let Some((x, y)) = worst {
        v = v.cert("x", x as f64).cert("y", y as f64).cert("degree_sum", (dx[x] + dy[y]) as f64);
    }
    v.cert("margin", margin as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilyId};

    fn bip(p: usize, q: usize, missing: &[(usize, usize)]) -> BipartiteGraph {
        let mut edges = Vec::new();
        for x in 0..p {
            for y in 0..q {
                if !missing.contains(&(x, y)) {
                    edges.push((x, y));
                }
            }
        }
        BipartiteGraph::from_edges(p, q, &edges).unwrap()
    }

    #[test]
    fn chvatal_examples() {
        assert_eq!(chvatal_hamiltonian(&Graph::complete(5).unwrap()).status, Status::Guaranteed);
        let v = chvatal_hamiltonian(&make_family(FamilyId::Kn1PlusEdge { n: 5 }).unwrap().graph());
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.get("k"), Some(1.0));
        let v = chvatal_hamiltonian(&make_family(FamilyId::NcMember { index: 8 }).unwrap().graph());
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.get("k"), Some(2.0));
        let c5 = make_family(FamilyId::Cycle { n: 5 }).unwrap().graph();
        let v = chvatal_hamiltonian(&c5);
        assert_eq!((v.status, v.get("k")), (Status::Inconclusive, Some(2.0)));
        assert_eq!(chvatal_hamiltonian(&Graph::complete(2).unwrap()).status, Status::NotApplicable);
    }

    #[test]
    fn bipartite_degree_examples() {
        let v = bipartite_degree_hamiltonian(&BipartiteGraph::complete(4, 4).unwrap());
        assert_eq!(v.status, Status::Guaranteed);
        assert!(v.margin().unwrap() >= 0.0);
        let ex = make_family(FamilyId::Kpn2Plus4e { n: 4, p: 4 }).unwrap();
        let v = bipartite_degree_hamiltonian(ex.bipartite().unwrap());
        assert_eq!((v.status, v.get("k")), (Status::Inconclusive, Some(2.0)));
        // C8 with sides (4, 4)
        let c8 = BipartiteGraph::from_edges(4, 4, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (0, 3)])
            .unwrap();
        let v = bipartite_degree_hamiltonian(&c8);
        assert_eq!((v.status, v.get("k")), (Status::Inconclusive, Some(2.0)));
        assert_eq!(bipartite_degree_hamiltonian(&BipartiteGraph::complete(3, 4).unwrap()).status, Status::NotApplicable);
    }

    #[test]
    fn pair_degree_examples() {
        // C6: every nonadjacent pair sums to 4 = n+1
        let c6 = bip(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        let v = moon_moser_hamiltonian(&c6);
        assert_eq!((v.status, v.margin()), (Status::Guaranteed, Some(0.0)));
        let c8 = BipartiteGraph::from_edges(4, 4, &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (0, 3)])
            .unwrap();
        let v = moon_moser_hamiltonian(&c8);
        assert_eq!((v.status, v.margin()), (Status::Inconclusive, Some(-1.0)));
        let v = moon_moser_hamiltonian(&BipartiteGraph::complete(3, 3).unwrap());
        assert_eq!(v.status, Status::Guaranteed);
        assert_eq!(v.get("nonadjacent_pairs"), Some(0.0));
        let v = moon_moser_hamiltonian(&bip(3, 3, &[(0, 0)]));
        assert_eq!(v.status, Status::Guaranteed);
        assert_eq!(v.get("degree_sum"), Some(4.0));
        assert_eq!(v.margin(), Some(0.0));
        assert_eq!(moon_moser_hamiltonian(&BipartiteGraph::complete(2, 3).unwrap()).status, Status::NotApplicable);
    }
}
