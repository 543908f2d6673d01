//! Labeled enumeration with minimum-degree pruning.
//!
//! General graphs are generated one upper-triangle adjacency row at a time;
//! bipartite graphs one biadjacency row at a time. Work is split across
//! threads by the choice of the first row.

use rayon::prelude::*;

use crate::error::VerifyError;
use crate::graph::{BipartiteGraph, Graph};

/// Largest order accepted by [`enumerate_graphs`].
pub const GENERAL_MAX: usize = 8;
/// Largest `p·q` accepted by [`enumerate_bipartite`].
pub const BIPARTITE_MAX_CELLS: usize = 25;

/// Serial or thread-parallel traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Serial,
    #[default]
    Parallel,
}

fn check_general(n: usize) -> Result<(), VerifyError> {
    if n == 0 {
        return Err(VerifyError::CapExceeded("n must be at least 1".into()));
    }
    if n > GENERAL_MAX {
        return Err(VerifyError::CapExceeded(format!("n = {n} > {GENERAL_MAX}")));
    }
    Ok(())
}

fn check_bipartite(p: usize, q: usize) -> Result<(), VerifyError> {
    if p == 0 || q == 0 {
        return Err(VerifyError::CapExceeded("both sides must be nonempty".into()));
    }
    if p * q > BIPARTITE_MAX_CELLS || p > BIPARTITE_MAX_CELLS || q > BIPARTITE_MAX_CELLS {
        return Err(VerifyError::CapExceeded(format!("p·q = {} > {BIPARTITE_MAX_CELLS}", p * q)));
    }
    Ok(())
}

struct GraphGen {
    n: usize,
    delta_min: usize,
    rows: Vec<u64>,
    deg: Vec<usize>,
}

impl GraphGen {
    fn new(n: usize, delta_min: usize) -> Self {
        GraphGen { n, delta_min, rows: vec![0; n], deg: vec![0; n] }
    }

    /// Applies row `i`; false when some degree can no longer reach `delta_min`.
    fn place(&mut self, i: usize, sel: u64) -> bool {
        self.rows[i] |= sel;
        self.deg[i] += sel.count_ones() as usize;
        let mut bits = sel;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.rows[j] |= 1 << i;
            self.deg[j] += 1;
        }
        if self.deg[i] < self.delta_min {
            return false;
        }
        // vertices after i can still gain one edge from each later vertex
        let later = self.n.saturating_sub(i + 2);
        (i + 1..self.n).all(|j| self.deg[j] + later >= self.delta_min)
    }

    fn unplace(&mut self, i: usize, sel: u64) {
        self.rows[i] &= !sel;
        self.deg[i] -= sel.count_ones() as usize;
        let mut bits = sel;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.rows[j] &= !(1 << i);
            self.deg[j] -= 1;
        }
    }

    fn run(&mut self, i: usize, visit: &mut dyn FnMut(&Graph)) -> u64 {
        if i >= self.n {
            if self.deg.iter().any(|&d| d < self.delta_min) {
                return 0;
            }
            let g = Graph::from_masks(&self.rows).expect("n within cap");
            visit(&g);
            return 1;
        }
        let k = self.n - 1 - i;
        let mut count = 0;
        for bits in 0..1u64 << k {
            let sel = bits << (i + 1);
            if self.place(i, sel) {
                count += self.run(i + 1, visit);
            }
            self.unplace(i, sel);
        }
        count
    }
}

/// Visits every labeled graph on `n` vertices with minimum degree at least
/// `delta_min` exactly once, in a fixed order. Returns the number visited.
pub fn enumerate_graphs(n: usize, delta_min: usize, mut visit: impl FnMut(&Graph)) -> Result<u64, VerifyError> {
    check_general(n)?;
    Ok(GraphGen::new(n, delta_min).run(0, &mut visit))
}

/// Folds over the same graphs as [`enumerate_graphs`]. In parallel mode each
/// first-row choice is folded separately from `identity()`; the partial
/// results are merged in first-row order, so the outcome does not depend on
/// scheduling.
pub fn fold_graphs<R, I, F, M>(
    n: usize,
    delta_min: usize,
    mode: Mode,
    identity: I,
    visit: F,
    merge: M,
) -> Result<(u64, R), VerifyError>
where
    R: Send,
    I: Fn() -> R + Sync,
    F: Fn(&mut R, &Graph) + Sync,
    M: Fn(R, R) -> R,
{
    check_general(n)?;
    if n <= 1 || mode == Mode::Serial {
        let mut acc = identity();
        let count = GraphGen::new(n, delta_min).run(0, &mut |g| visit(&mut acc, g));
        return Ok((count, acc));
    }
    let parts: Vec<(u64, R)> = (0..1u64 << (n - 1))
        .into_par_iter()
        .map(|bits| {
            let mut acc = identity();
            let mut gen = GraphGen::new(n, delta_min);
            let count = if gen.place(0, bits << 1) { gen.run(1, &mut |g| visit(&mut acc, g)) } else { 0 };
            (count, acc)
        })
        .collect();
    let mut total = 0;
    let mut acc = identity();
    for (c, r) in parts {
        total += c;
        acc = merge(acc, r);
    }
    Ok((total, acc))
}

struct BipartiteGen {
    p: usize,
    q: usize,
    delta_min: usize,
    rows: Vec<u64>,
    deg_y: Vec<usize>,
}

impl BipartiteGen {
    fn new(p: usize, q: usize, delta_min: usize) -> Self {
        BipartiteGen { p, q, delta_min, rows: vec![0; p], deg_y: vec![0; q] }
    }

    fn place(&mut self, x: usize, row: u64) -> bool {
        self.rows[x] = row;
        for y in 0..self.q {
            self.deg_y[y] += (row >> y & 1) as usize;
        }
        let later = self.p - 1 - x;
        (row.count_ones() as usize) >= self.delta_min && self.deg_y.iter().all(|&d| d + later >= self.delta_min)
    }

    fn unplace(&mut self, x: usize) {
        let row = self.rows[x];
        for y in 0..self.q {
            self.deg_y[y] -= (row >> y & 1) as usize;
        }
        self.rows[x] = 0;
    }

    fn run(&mut self, x: usize, visit: &mut dyn FnMut(&BipartiteGraph)) -> u64 {
        if x >= self.p {
            if self.deg_y.iter().any(|&d| d < self.delta_min) {
                return 0;
            }
            let b = BipartiteGraph::from_rows(self.q, &self.rows).expect("sides within cap");
            visit(&b);
            return 1;
        }
        let mut count = 0;
        for row in 0..1u64 << self.q {
            if self.place(x, row) {
                count += self.run(x + 1, visit);
            }
            self.unplace(x);
        }
        count
    }
}

/// Visits every `p × q` biadjacency matrix whose row and column sums are all
/// at least `delta_min`. Returns the number visited.
pub fn enumerate_bipartite(
    p: usize,
    q: usize,
    delta_min: usize,
    mut visit: impl FnMut(&BipartiteGraph),
) -> Result<u64, VerifyError> {
    check_bipartite(p, q)?;
    Ok(BipartiteGen::new(p, q, delta_min).run(0, &mut visit))
}

/// Bipartite counterpart of [`fold_graphs`], split by the first row.
pub fn fold_bipartite<R, I, F, M>(
    p: usize,
    q: usize,
    delta_min: usize,
    mode: Mode,
    identity: I,
    visit: F,
    merge: M,
) -> Result<(u64, R), VerifyError>
where
    R: Send,
    I: Fn() -> R + Sync,
    F: Fn(&mut R, &BipartiteGraph) + Sync,
    M: Fn(R, R) -> R,
{
    check_bipartite(p, q)?;
    if mode == Mode::Serial {
        let mut acc = identity();
        let count = BipartiteGen::new(p, q, delta_min).run(0, &mut |b| visit(&mut acc, b));
        return Ok((count, acc));
    }
    let parts: Vec<(u64, R)> = (0..1u64 << q)
        .into_par_iter()
        .map(|row| {
            let mut acc = identity();
            let mut gen = BipartiteGen::new(p, q, delta_min);
            let count = if gen.place(0, row) { gen.run(1, &mut |b| visit(&mut acc, b)) } else { 0 };
            (count, acc)
        })
        .collect();
    let mut total = 0;
    let mut acc = identity();
    for (c, r) in parts {
        total += c;
        acc = merge(acc, r);
    }
    Ok((total, acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_counts() {
        for n in 1..=6 {
            assert_eq!(enumerate_graphs(n, 0, |_| {}).unwrap(), 1 << (n * (n - 1) / 2), "n = {n}");
        }
        assert_eq!(enumerate_bipartite(2, 2, 0, |_| {}).unwrap(), 16);
        assert_eq!(enumerate_bipartite(4, 4, 0, |_| {}).unwrap(), 65536);
    }

    #[test]
    fn pruned_counts_match_filter() {
        for n in 1..=6 {
            for d in 0..=3 {
                let mut filtered = 0u64;
                enumerate_graphs(n, 0, |g| filtered += (g.min_degree() >= d) as u64).unwrap();
                let mut seen = 0u64;
                let pruned = enumerate_graphs(n, d, |g| {
                    assert!(g.min_degree() >= d);
                    seen += 1;
                })
                .unwrap();
                assert_eq!((pruned, seen), (filtered, filtered), "n = {n}, d = {d}");
            }
        }
        for d in 0..=3 {
            let mut filtered = 0u64;
            enumerate_bipartite(4, 4, 0, |b| filtered += (b.min_degree() >= d) as u64).unwrap();
            assert_eq!(enumerate_bipartite(4, 4, d, |_| {}).unwrap(), filtered, "d = {d}");
        }
    }

    #[test]
    fn four_vertices_min_degree_two() {
        // C4 (3 labelings), K4 minus an edge (6), K4 (1)
        assert_eq!(enumerate_graphs(4, 2, |_| {}).unwrap(), 10);
    }

    #[test]
    fn every_graph_visited_once() {
        let mut seen = std::collections::HashSet::new();
        enumerate_graphs(5, 0, |g| assert!(seen.insert(crate::graph6::write_graph6(g)))).unwrap();
        assert_eq!(seen.len(), 1024);
        let mut seen = std::collections::HashSet::new();
        enumerate_bipartite(2, 3, 0, |b| assert!(seen.insert(format!("{b:?}")))).unwrap();
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn parallel_matches_serial() {
        let count_edges = |acc: &mut (u64, u64), g: &Graph| {
            acc.0 += 1;
            acc.1 += g.edge_count() as u64;
        };
        let merge = |a: (u64, u64), b: (u64, u64)| (a.0 + b.0, a.1 + b.1);
        let s = fold_graphs(6, 1, Mode::Serial, || (0, 0), count_edges, merge).unwrap();
        let p = fold_graphs(6, 1, Mode::Parallel, || (0, 0), count_edges, merge).unwrap();
        assert_eq!(s, p);
        let bip = |acc: &mut u64, b: &BipartiteGraph| *acc += b.edge_count() as u64;
        let s = fold_bipartite(3, 4, 1, Mode::Serial, || 0, bip, |a, b| a + b).unwrap();
        let p = fold_bipartite(3, 4, 1, Mode::Parallel, || 0, bip, |a, b| a + b).unwrap();
        assert_eq!(s, p);
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate_graphs(9, 0, |_| {}), Err(VerifyError::CapExceeded(_))));
        assert!(matches!(enumerate_graphs(0, 0, |_| {}), Err(VerifyError::CapExceeded(_))));
        assert!(matches!(enumerate_bipartite(5, 6, 0, |_| {}), Err(VerifyError::CapExceeded(_))));
    }
}
