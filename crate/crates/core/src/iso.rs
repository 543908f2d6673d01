//! Isomorphism test for small graphs: colour refinement followed by a
//! backtracking search over colour-compatible assignments.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Joint colour refinement of two graphs, so colours are comparable.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = g.degrees();
    let mut ch: Vec<usize> = h.degrees();
    let mut classes = usize::MAX;
    loop {
        let mut ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let sig = |graph: &Graph, col: &[usize], v: usize| {
            let mut nb: Vec<usize> = graph.neighbors(v).map(|u| col[u]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        for s in sg.iter().chain(sh.iter()) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (cg, ch);
        }
        classes = ids.len();
    }
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in c {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

/// Returns `phi` with `uv ∈ E(g) ⟺ phi[u]phi[v] ∈ E(h)`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let n = g.n();
    let (cg, ch) = refine(g, h);
    let hist = histogram(&cg);
    if hist != histogram(&ch) {
        return None;
    }

    // Search order: repeatedly take the vertex with the most already-ordered
    // neighbours, breaking ties by smallest colour class.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (usize::MAX - links[v], hist[&cg[v]], v))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            links[u] += 1;
        }
    }

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &cg, &ch, &order, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n() {
        if used[w] || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g.has_edge(u, v) == h.has_edge(phi[u], w));
        if !consistent {
            continue;
        }
        phi[v] = w;
        used[w] = true;
        if extend(g, h, cg, ch, order, depth + 1, phi, used) {
            return true;
        }
        used[w] = false;
        phi[v] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn relabeled_copies() {
        let c6 = cycle(6);
        let perm = [3, 5, 0, 1, 4, 2];
        let h = c6.permute(&perm);
        let phi = find_isomorphism(&c6, &h).unwrap();
        for (u, v) in c6.edges() {
            assert!(h.has_edge(phi[u], phi[v]));
        }
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 and 2K3 share every degree and refinement colour
        let two_k3 = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_k3));
        assert!(are_isomorphic(&two_k3, &two_k3.permute(&[5, 4, 3, 2, 1, 0])));
    }

    #[test]
    fn different_degrees() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star));
        assert!(!are_isomorphic(&p4, &cycle(5)));
    }
}
