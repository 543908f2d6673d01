//! Exact Hamiltonian cycle / path decision for small graphs.
//!
//! The main route is subset dynamic programming; [`backtrack_oracle`] is a
//! plain depth-first search kept as an independent cross-check.

use serde::{Deserialize, Serialize};

use crate::error::OracleError;
use crate::graph::Graph;

/// Largest order handled by the subset DP.
pub const DP_MAX: usize = 24;
/// Largest order handled by the backtracking search.
pub const BACKTRACK_MAX: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    Cycle,
    Path,
}

/// A Hamiltonian cycle or path, as a vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamWitness {
    pub kind: WalkKind,
    pub order: Vec<usize>,
}

impl HamWitness {
    /// True when `order` is a permutation of `V(g)` whose consecutive
    /// vertices (and last-to-first, for cycles) are adjacent.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.order.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &self.order {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if !self.order.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        match self.kind {
            WalkKind::Path => true,
            WalkKind::Cycle => n >= 3 && g.has_edge(self.order[n - 1], self.order[0]),
        }
    }
}

fn check_cap(g: &Graph, max: usize) -> Result<(), OracleError> {
    if g.n() > max {
        Err(OracleError { n: g.n(), max })
    } else {
        Ok(())
    }
}

/// A Hamiltonian cycle of `g`, if any. Graphs on fewer than three vertices
/// have none.
pub fn is_hamiltonian(g: &Graph) -> Result<Option<HamWitness>, OracleError> {
    check_cap(g, DP_MAX)?;
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Ok(None);
    }
    let nb: Vec<u32> = (0..n).map(|v| g.mask(v) as u32).collect();
    // Subsets of {1..n-1}, bit v-1 for vertex v. reach[s] holds the end
    // vertices (bit v) of paths that start at 0 and cover exactly s.
    let rest = n - 1;
    let full = (1usize << rest) - 1;
    let mut reach = vec![0u32; 1 << rest];
    for v in 1..n {
        if nb[0] >> v & 1 == 1 {
            reach[1 << (v - 1)] |= 1 << v;
        }
    }
    for s in 1..=full {
        let mut ends = reach[s];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = nb[v] & !((s as u32) << 1) & !1;
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[s | 1 << (u - 1)] |= 1 << u;
            }
        }
    }
    let closing = reach[full] & nb[0];
    if closing == 0 {
        return Ok(None);
    }
    let mut v = closing.trailing_zeros() as usize;
    let mut s = full;
    let mut order = vec![v];
    while s.count_ones() > 1 {
        s &= !(1 << (v - 1));
        let u = (reach[s] & nb[v]).trailing_zeros() as usize;
        order.push(u);
        v = u;
    }
    order.push(0);
    order.reverse();
    let w = HamWitness { kind: WalkKind::Cycle, order };
    assert!(w.is_valid(g), "oracle produced an invalid witness");
    Ok(Some(w))
}

/// A Hamiltonian path of `g`, if any.
pub fn is_traceable(g: &Graph) -> Result<Option<HamWitness>, OracleError> {
    check_cap(g, DP_MAX)?;
    let n = g.n();
    if n == 1 {
        return Ok(Some(HamWitness { kind: WalkKind::Path, order: vec![0] }));
    }
    if !g.is_connected() || g.degrees().iter().filter(|&&d| d == 1).count() > 2 {
        return Ok(None);
    }
    let nb: Vec<u32> = (0..n).map(|v| g.mask(v) as u32).collect();
    let full = (1usize << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for s in 1..=full {
        let mut ends = reach[s];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = nb[v] & !(s as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[s | 1 << u] |= 1 << u;
            }
        }
    }
    if reach[full] == 0 {
        return Ok(None);
    }
    let mut v = reach[full].trailing_zeros() as usize;
    let mut s = full;
    let mut order = vec![v];
    while s.count_ones() > 1 {
        s &= !(1 << v);
        let u = (reach[s] & nb[v]).trailing_zeros() as usize;
        order.push(u);
        v = u;
    }
    order.reverse();
    let w = HamWitness { kind: WalkKind::Path, order };
    assert!(w.is_valid(g), "oracle produced an invalid witness");
    Ok(Some(w))
}

/// Depth-first search for a Hamiltonian cycle or path.
pub fn backtrack_oracle(g: &Graph, kind: WalkKind) -> Result<bool, OracleError> {
    check_cap(g, BACKTRACK_MAX)?;
    let n = g.n();
    let mut visited = vec![false; n];
    let mut found = false;
    match kind {
        WalkKind::Cycle => {
            if n >= 3 {
                visited[0] = true;
                found = dfs(g, 0, 1, &mut visited, Some(0));
            }
        }
        WalkKind::Path => {
            for s in 0..n {
                visited[s] = true;
                if dfs(g, s, 1, &mut visited, None) {
                    found = true;
                    break;
                }
                visited[s] = false;
            }
        }
    }
    Ok(found)
}

fn dfs(g: &Graph, v: usize, depth: usize, visited: &mut [bool], close_to: Option<usize>) -> bool {
    let n = g.n();
    if depth == n {
        return close_to.is_none_or(|s| g.has_edge(v, s));
    }
    for u in g.neighbors(v) {
        if visited[u] {
            continue;
        }
        visited[u] = true;
        if dfs(g, u, depth + 1, visited, close_to) {
            return true;
        }
        visited[u] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilyId};

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn cycle_examples() {
        let c7 = make_family(FamilyId::Cycle { n: 7 }).unwrap().graph();
        let w = is_hamiltonian(&c7).unwrap().unwrap();
        assert!(w.is_valid(&c7));
        let ex = make_family(FamilyId::Knn1PlusEdge { n: 4 }).unwrap().graph();
        assert!(is_hamiltonian(&ex).unwrap().is_none());
        assert!(is_hamiltonian(&petersen()).unwrap().is_none());
        assert!(!backtrack_oracle(&petersen(), WalkKind::Cycle).unwrap());
    }

    #[test]
    fn path_examples() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(is_traceable(&p5).unwrap().unwrap().is_valid(&p5));
        let k5v = make_family(FamilyId::Kn1PlusVertex { n: 6 }).unwrap().graph();
        assert!(is_traceable(&k5v).unwrap().is_none());
        let w = is_traceable(&petersen()).unwrap().unwrap();
        assert!(w.is_valid(&petersen()));
        assert!(backtrack_oracle(&petersen(), WalkKind::Path).unwrap());
    }

    #[test]
    fn backtrack_examples() {
        assert!(backtrack_oracle(&Graph::complete(4).unwrap(), WalkKind::Cycle).unwrap());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!backtrack_oracle(&two_k2, WalkKind::Path).unwrap());
        let k13 = make_family(FamilyId::Star { leaves: 3 }).unwrap().graph();
        assert!(!backtrack_oracle(&k13, WalkKind::Path).unwrap());
    }

    #[test]
    fn tiny_orders() {
        let k1 = Graph::complete(1).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert!(is_hamiltonian(&k1).unwrap().is_none());
        assert!(is_hamiltonian(&k2).unwrap().is_none());
        assert!(is_traceable(&k1).unwrap().is_some());
        assert!(is_traceable(&k2).unwrap().is_some());
        assert!(!backtrack_oracle(&k2, WalkKind::Cycle).unwrap());
        assert!(backtrack_oracle(&k1, WalkKind::Path).unwrap());
        assert!(is_hamiltonian(&Graph::complete(3).unwrap()).unwrap().is_some());
    }

    #[test]
    fn caps() {
        assert!(is_hamiltonian(&Graph::complete(25).unwrap()).is_err());
        assert!(backtrack_oracle(&Graph::complete(13).unwrap(), WalkKind::Path).is_err());
        let c24 = make_family(FamilyId::Cycle { n: 24 }).unwrap().graph();
        assert!(is_hamiltonian(&c24).unwrap().unwrap().is_valid(&c24));
    }
}
