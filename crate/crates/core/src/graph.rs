//! Simple undirected graphs stored as rows of adjacency bits, plus bipartite
//! graphs with an explicit side assignment.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 512;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// An undirected simple graph on vertices `0..n`.
///
/// Row `i` is a bit vector whose bit `j` is set iff `ij` is an edge. Rows are
/// kept symmetric and loop-free by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount { n, max: MAX_VERTICES });
        }
        let words = words_for(n);
        Ok(Graph { n, words, bits: vec![0; n * words] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v);
            }
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from per-vertex neighbor masks.
    /// Only the upper triangle of `rows` is read.
    pub fn from_masks(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > WORD {
            return Err(GraphError::VertexCount { n, max: WORD });
        }
        let mut g = Graph::empty(n)?;
        for (u, &row) in rows.iter().enumerate() {
            let above = if u + 1 >= WORD { 0 } else { !0u64 << (u + 1) };
            let mut upper = row & above;
            while upper != 0 {
                let v = upper.trailing_zeros() as usize;
                upper &= upper - 1;
                if v < n {
                    g.set(u, v);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    #[inline]
    fn clear(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.bits[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.set(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u != v {
            self.clear(u, v);
        }
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// The raw adjacency bits of vertex `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighbor mask of `v` for graphs on at most 64 vertices.
    ///
    /// # Panics
    /// If the graph has more than 64 vertices.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        assert!(self.n <= WORD, "mask() requires n <= 64");
        self.bits[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * WORD + b)
            })
        })
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph { n: self.n, words: self.words, bits: vec![0; self.bits.len()] };
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        for (u, v) in other.edges() {
            g.set(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// The join: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Graph { n: self.n, words: self.words, bits: vec![0; self.bits.len()] };
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check(v)?;
        }
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True when every edge joins `0..p` to `p..n`.
    pub fn respects_split(&self, p: usize) -> bool {
        self.edges().iter().all(|&(u, v)| (u < p) != (v < p))
    }

    /// A proper 2-colouring if one exists; `true` marks the first colour.
    /// The lowest vertex of each component gets the first colour.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(true);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = colour[u].unwrap();
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A bipartite graph `G[X, Y]` with `|X| = p`, `|Y| = q`.
///
/// As a [`Graph`], `X` occupies vertices `0..p` and `Y` occupies `p..p+q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    p: usize,
    q: usize,
    words: usize,
    biadj: Vec<u64>,
}

impl BipartiteGraph {
    pub fn empty(p: usize, q: usize) -> Result<Self, GraphError> {
        let n = p + q;
        if p == 0 || q == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount { n, max: MAX_VERTICES });
        }
        let words = words_for(q);
        Ok(BipartiteGraph { p, q, words, biadj: vec![0; p * words] })
    }

    pub fn complete(p: usize, q: usize) -> Result<Self, GraphError> {
        let mut b = BipartiteGraph::empty(p, q)?;
        for x in 0..p {
            for y in 0..q {
                b.set(x, y);
            }
        }
        Ok(b)
    }

    /// Builds from cross edges `(x, y)` with `x < p`, `y < q`.
    pub fn from_edges(p: usize, q: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = BipartiteGraph::empty(p, q)?;
        for &(x, y) in edges {
            b.add_edge(x, y)?;
        }
        Ok(b)
    }

    /// Builds from biadjacency rows (bit `y` of `rows[x]`), requires `q <= 64`.
    pub fn from_rows(q: usize, rows: &[u64]) -> Result<Self, GraphError> {
        let mut b = BipartiteGraph::empty(rows.len(), q)?;
        if q > WORD {
            return Err(GraphError::VertexCount { n: q, max: WORD });
        }
        let keep = if q == WORD { u64::MAX } else { (1u64 << q) - 1 };
        for (x, &r) in rows.iter().enumerate() {
            b.biadj[x * b.words] = r & keep;
        }
        Ok(b)
    }

    /// Reads a bipartite graph from `g`, taking `0..p` as side `X`.
    pub fn from_graph(g: &Graph, p: usize) -> Result<Self, GraphError> {
        if p == 0 || p >= g.n() {
            return Err(GraphError::SideMismatch { p, q: g.n().saturating_sub(p) });
        }
        let mut b = BipartiteGraph::empty(p, g.n() - p)?;
        for (u, v) in g.edges() {
            if (u < p) == (v < p) {
                return Err(GraphError::NotBipartite(u, v));
            }
            b.set(u, v - p);
        }
        Ok(b)
    }

    /// Reads a bipartite graph from `g` with `side_x[v]` marking membership
    /// of `X`. Vertices keep their relative order within each side.
    pub fn from_graph_with_sides(g: &Graph, side_x: &[bool]) -> Result<Self, GraphError> {
        let xs: Vec<usize> = (0..g.n()).filter(|&v| side_x[v]).collect();
        let ys: Vec<usize> = (0..g.n()).filter(|&v| !side_x[v]).collect();
        let mut b = BipartiteGraph::empty(xs.len(), ys.len())?;
        let mut pos = vec![0; g.n()];
        for (i, &x) in xs.iter().enumerate() {
            pos[x] = i;
        }
        for (i, &y) in ys.iter().enumerate() {
            pos[y] = i;
        }
        for (u, v) in g.edges() {
            match (side_x[u], side_x[v]) {
                (true, false) => b.set(pos[u], pos[v]),
                (false, true) => b.set(pos[v], pos[u]),
                _ => return Err(GraphError::NotBipartite(u, v)),
            }
        }
        Ok(b)
    }

    #[inline]
    pub fn p(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn is_balanced(&self) -> bool {
        self.p == self.q
    }

    #[inline]
    fn set(&mut self, x: usize, y: usize) {
        self.biadj[x * self.words + y / WORD] |= 1 << (y % WORD);
    }

    pub fn add_edge(&mut self, x: usize, y: usize) -> Result<(), GraphError> {
        if x >= self.p {
            return Err(GraphError::VertexOutOfRange { vertex: x, n: self.p });
        }
        if y >= self.q {
            return Err(GraphError::VertexOutOfRange { vertex: y, n: self.q });
        }
        self.set(x, y);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.p && y < self.q && self.biadj[x * self.words + y / WORD] >> (y % WORD) & 1 == 1
    }

    /// Biadjacency row of `x` as a mask; requires `q <= 64`.
    #[inline]
    pub fn row_mask(&self, x: usize) -> u64 {
        assert!(self.q <= WORD, "row_mask() requires q <= 64");
        self.biadj[x * self.words]
    }

    pub fn edge_count(&self) -> usize {
        self.biadj.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees_x(&self) -> Vec<usize> {
        (0..self.p)
            .map(|x| self.biadj[x * self.words..(x + 1) * self.words].iter().map(|w| w.count_ones() as usize).sum())
            .collect()
    }

    pub fn degrees_y(&self) -> Vec<usize> {
        (0..self.q).map(|y| (0..self.p).filter(|&x| self.has_edge(x, y)).count()).collect()
    }

    pub fn min_degree_x(&self) -> usize {
        self.degrees_x().into_iter().min().unwrap_or(0)
    }

    pub fn min_degree_y(&self) -> usize {
        self.degrees_y().into_iter().min().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree_x().min(self.min_degree_y())
    }

    /// Degree sequence over all `p + q` vertices.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees_x();
        d.extend(self.degrees_y());
        DegreeSequence::new(d)
    }

    /// Flips every cross pair, keeping the bipartition.
    pub fn quasi_complement(&self) -> BipartiteGraph {
        let mut b = BipartiteGraph::empty(self.p, self.q).expect("same shape");
        for x in 0..self.p {
            for y in 0..self.q {
                if !self.has_edge(x, y) {
                    b.set(x, y);
                }
            }
        }
        b
    }

    /// The same graph with the roles of `X` and `Y` exchanged.
    pub fn swap_sides(&self) -> BipartiteGraph {
        let mut b = BipartiteGraph::empty(self.q, self.p).expect("same size");
        for x in 0..self.p {
            for y in 0..self.q {
                if self.has_edge(x, y) {
                    b.set(y, x);
                }
            }
        }
        b
    }

    /// The underlying graph, `X` first.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.p + self.q).expect("size checked at construction");
        for x in 0..self.p {
            for y in 0..self.q {
                if self.has_edge(x, y) {
                    g.set(x, self.p + y);
                }
            }
        }
        g
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> =
            (0..self.p).flat_map(|x| (0..self.q).filter(move |&y| self.has_edge(x, y)).map(move |y| (x, y))).collect();
        write!(f, "BipartiteGraph(p={}, q={}, edges={:?})", self.p, self.q, edges)
    }
}

/// Degrees sorted nondecreasingly, `d_1 <= d_2 <= ... <= d_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        DegreeSequence(degrees)
    }

    /// The `k`-th smallest degree, 1-based.
    ///
    /// # Panics
    /// If `k` is zero or exceeds the length.
    #[inline]
    pub fn d(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_examples() {
        let t = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(t.edge_count(), 3);
        assert_eq!(Graph::from_edges(4, &[]).unwrap().edge_count(), 0);
        let k2 = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2, Graph::complete(2).unwrap());
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(513).is_err());
        assert!(Graph::empty(512).is_ok());
    }

    #[test]
    fn wide_rows() {
        let mut g = Graph::empty(200).unwrap();
        g.add_edge(3, 150).unwrap();
        g.add_edge(199, 64).unwrap();
        assert!(g.has_edge(150, 3) && g.has_edge(64, 199));
        assert_eq!(g.neighbors(150).collect::<Vec<_>>(), vec![3]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.complement().edge_count(), 200 * 199 / 2 - 2);
    }

    #[test]
    fn complement_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.complement(), Graph::empty(5).unwrap());
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.complement().degree_sequence().as_slice(), &[2; 5]);
        assert!(c5.complement().is_connected());
        // K_4 plus an isolated vertex: complement is the star centred at the isolated vertex
        let k4v = Graph::complete(4).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let star = Graph::from_edges(5, &[(4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert_eq!(k4v.complement(), star);
    }

    #[test]
    fn quasi_complement_examples() {
        let k33 = BipartiteGraph::complete(3, 3).unwrap();
        assert_eq!(k33.quasi_complement().edge_count(), 0);
        let e22 = BipartiteGraph::empty(2, 2).unwrap();
        assert_eq!(e22.quasi_complement(), BipartiteGraph::complete(2, 2).unwrap());
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::complete(1).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        let bowtie = k1.join(&two_k2).unwrap();
        assert_eq!(bowtie.degree_sequence().as_slice(), &[2, 2, 2, 2, 4]);
        let k2_3k1 = k2.join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k2_3k1.degree_sequence().as_slice(), &[2, 2, 2, 4, 4]);
        for n in 2..8 {
            let kn1 = Graph::complete(n - 1).unwrap();
            assert_eq!(k1.join(&kn1).unwrap(), Graph::complete(n).unwrap());
        }
        let big = Graph::empty(300).unwrap();
        assert!(big.join(&big).is_err());
    }

    #[test]
    fn degree_examples() {
        let k23 = BipartiteGraph::complete(2, 3).unwrap().to_graph();
        assert_eq!(k23.degree_sequence().as_slice(), &[2, 2, 2, 3, 3]);
        assert_eq!(k23.min_degree(), 2);
        assert_eq!(k23.edge_count(), 6);
        let k2 = Graph::complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        assert_eq!(two_k2.degree_sequence().as_slice(), &[1, 1, 1, 1]);
        assert_eq!(two_k2.edge_count(), 2);
    }

    #[test]
    fn bipartite_conversions() {
        let b = BipartiteGraph::from_edges(2, 3, &[(0, 0), (1, 2)]).unwrap();
        let g = b.to_graph();
        assert!(g.has_edge(0, 2) && g.has_edge(1, 4));
        assert_eq!(BipartiteGraph::from_graph(&g, 2).unwrap(), b);
        assert_eq!(b.swap_sides().swap_sides(), b);
        let tri = Graph::complete(3).unwrap();
        assert!(BipartiteGraph::from_graph(&tri, 1).is_err());
        assert!(tri.two_colouring().is_none());
        let colours = g.two_colouring().unwrap();
        let again = BipartiteGraph::from_graph_with_sides(&g, &colours).unwrap();
        assert_eq!(again.edge_count(), 2);
    }
}
