//! Named graph families and their canonical labeled representatives.
//!
//! Labeling convention: for bipartite families side `X` holds vertices
//! `0..p`; vertices added on top of a complete or complete bipartite core
//! take the highest indices of their side.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::FamilyError;
use crate::graph::{BipartiteGraph, Graph};

/// Which of the two structured complement-condition exception classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExceptionClass {
    /// Exceptions to the Hamiltonian form.
    Ec,
    /// Exceptions to the traceable form.
    Ep,
}

/// Sub-type within an exception class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    A,
    B,
    C,
}

/// Every graph family the checkers can name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum FamilyId {
    /// `K_n`.
    CompleteK { n: usize },
    /// `K_{p,q}` with `|X| = p`.
    CompleteBipartite { p: usize, q: usize },
    /// `C_n`.
    Cycle { n: usize },
    /// `K_{1,leaves}`.
    Star { leaves: usize },
    /// `K_{n-1}+e`: `K_{n-1}` with a pendant edge, `n` vertices in total.
    Kn1PlusEdge { n: usize },
    /// `K_{n-1}+v`: `K_{n-1}` with an isolated vertex, `n` vertices in total.
    Kn1PlusVertex { n: usize },
    /// `K_{n,n-1}+e`: a pendant edge on an `X` vertex of `K_{n,n-1}`, balanced `(n, n)`.
    Knn1PlusEdge { n: usize },
    /// `K_{p,n-2}+4e`: two vertices joined to the same two vertices of the
    /// `p` side of `K_{p,n-2}`, shape `(p, n)`; requires `p >= n-1`.
    Kpn2Plus4e { n: usize, p: usize },
    /// `K_{n,n-1}+2e`: two pendant vertices attached to a common vertex of
    /// the `n` side of `K_{n,n-1}`, shape `(n+1, n)` with the pendants in `X`.
    Knn1Plus2e { n: usize },
    /// Member of the non-Hamiltonian edge-count exception list (index 0..9).
    NcMember { index: usize },
    /// Member of the nontraceable edge-count exception list (index 0..8).
    NpMember { index: usize },
    /// Member of a structured complement-condition class; `r` is the size
    /// of the free side for join types, zero otherwise.
    JoinExpr { class: ExceptionClass, kind: ClassKind, r: usize },
}

/// Number of members in the non-Hamiltonian exception list.
pub const NC_LEN: usize = 9;
/// Number of members in the nontraceable exception list.
pub const NP_LEN: usize = 8;

const NC_NAMES: [&str; NC_LEN] = [
    "K4∨5K1",
    "K2∨(K3+2K1)",
    "K3∨4K1",
    "K1,2∨4K1",
    "K2∨(K1+K1,3)",
    "K2∨(K2+2K1)",
    "K1∨2K2",
    "K2,3",
    "K2∨3K1",
];

const NP_NAMES: [&str; NP_LEN] = [
    "K3∨5K1",
    "K1∨(K3+2K1)",
    "K2∨4K1",
    "K2,4",
    "K1∨(K1+K1,3)",
    "K1∨(K2+2K1)",
    "2K2",
    "K1,3",
];

/// A constructed family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyGraph {
    General(Graph),
    Bipartite(BipartiteGraph),
}

impl FamilyGraph {
    /// The underlying graph (bipartite side `X` first).
    pub fn graph(&self) -> Graph {
        match self {
            FamilyGraph::General(g) => g.clone(),
            FamilyGraph::Bipartite(b) => b.to_graph(),
        }
    }

    pub fn bipartite(&self) -> Option<&BipartiteGraph> {
        match self {
            FamilyGraph::Bipartite(b) => Some(b),
            FamilyGraph::General(_) => None,
        }
    }
}

fn invalid(family: &'static str, constraint: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters { family, constraint: constraint.into() }
}

fn k(n: usize) -> Graph {
    Graph::complete(n).expect("small complete graph")
}

fn e(n: usize) -> Graph {
    Graph::empty(n).expect("small empty graph")
}

fn star(leaves: usize) -> Graph {
    k(1).join(&e(leaves)).expect("small star")
}

fn plus(a: &Graph, b: &Graph) -> Graph {
    a.disjoint_union(b).expect("small union")
}

fn join(a: &Graph, b: &Graph) -> Graph {
    a.join(b).expect("small join")
}

fn nc_member(index: usize) -> Graph {
    match index {
        0 => join(&k(4), &e(5)),
        1 => join(&k(2), &plus(&k(3), &e(2))),
        2 => join(&k(3), &e(4)),
        3 => join(&star(2), &e(4)),
        4 => join(&k(2), &plus(&k(1), &star(3))),
        5 => join(&k(2), &plus(&k(2), &e(2))),
        6 => join(&k(1), &plus(&k(2), &k(2))),
        7 => join(&e(2), &e(3)),
        8 => join(&k(2), &e(3)),
        _ => unreachable!(),
    }
}

fn np_member(index: usize) -> Graph {
    match index {
        0 => join(&k(3), &e(5)),
        1 => join(&k(1), &plus(&k(3), &e(2))),
        2 => join(&k(2), &e(4)),
        3 => join(&e(2), &e(4)),
        4 => join(&k(1), &plus(&k(1), &star(3))),
        5 => join(&k(1), &plus(&k(2), &e(2))),
        6 => plus(&k(2), &k(2)),
        7 => star(3),
        _ => unreachable!(),
    }
}

impl FamilyId {
    /// Number of vertices of the family instance.
    pub fn order(&self) -> Option<usize> {
        Some(match *self {
            FamilyId::CompleteK { n } | FamilyId::Cycle { n } => n,
            FamilyId::Kn1PlusEdge { n } | FamilyId::Kn1PlusVertex { n } => n,
            FamilyId::CompleteBipartite { p, q } => p + q,
            FamilyId::Star { leaves } => leaves + 1,
            FamilyId::Knn1PlusEdge { n } => 2 * n,
            FamilyId::Kpn2Plus4e { n, p } => p + n,
            FamilyId::Knn1Plus2e { n } => 2 * n + 1,
            FamilyId::NcMember { index } if index < NC_LEN => nc_member(index).n(),
            FamilyId::NpMember { index } if index < NP_LEN => np_member(index).n(),
            _ => return None,
        })
    }

    /// Closed-form edge count where one exists.
    pub fn edge_count(&self) -> Option<usize> {
        Some(match *self {
            FamilyId::CompleteK { n } => n * (n - 1) / 2,
            FamilyId::CompleteBipartite { p, q } => p * q,
            FamilyId::Cycle { n } => n,
            FamilyId::Star { leaves } => leaves,
            FamilyId::Kn1PlusEdge { n } => (n - 1) * (n - 2) / 2 + 1,
            FamilyId::Kn1PlusVertex { n } => (n - 1) * (n - 2) / 2,
            FamilyId::Knn1PlusEdge { n } => n * n - n + 1,
            FamilyId::Kpn2Plus4e { n, p } => p * (n - 2) + 4,
            FamilyId::Knn1Plus2e { n } => n * n - n + 2,
            _ => return None,
        })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::CompleteK { n } => write!(f, "K{n}"),
            FamilyId::CompleteBipartite { p, q } => write!(f, "K{p},{q}"),
            FamilyId::Cycle { n } => write!(f, "C{n}"),
            FamilyId::Star { leaves } => write!(f, "K1,{leaves}"),
            FamilyId::Kn1PlusEdge { n } => write!(f, "K{}+e", n - 1),
            FamilyId::Kn1PlusVertex { n } => write!(f, "K{}+v", n - 1),
            FamilyId::Knn1PlusEdge { n } => write!(f, "K{},{}+e", n, n - 1),
            FamilyId::Kpn2Plus4e { n, p } => write!(f, "K{},{}+4e", p, n - 2),
            FamilyId::Knn1Plus2e { n } => write!(f, "K{},{}+2e", n, n - 1),
            FamilyId::NcMember { index } => f.write_str(NC_NAMES.get(index).copied().unwrap_or("NC?")),
            FamilyId::NpMember { index } => f.write_str(NP_NAMES.get(index).copied().unwrap_or("NP?")),
            FamilyId::JoinExpr { class, kind, r } => {
                let c = match class {
                    ExceptionClass::Ec => "EC",
                    ExceptionClass::Ep => "EP",
                };
                let t = match kind {
                    ClassKind::A => 'a',
                    ClassKind::B => 'b',
                    ClassKind::C => 'c',
                };
                write!(f, "{c}({t}, r={r})")
            }
        }
    }
}

/// Builds the canonical labeled representative of `id`.
pub fn make_family(id: FamilyId) -> Result<FamilyGraph, FamilyError> {
    Ok(match id {
        FamilyId::CompleteK { n } => FamilyGraph::General(Graph::complete(n)?),
        FamilyId::CompleteBipartite { p, q } => FamilyGraph::Bipartite(BipartiteGraph::complete(p, q)?),
        FamilyId::Cycle { n } => {
            if n < 3 {
                return Err(invalid("C_n", "n >= 3"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            FamilyGraph::General(Graph::from_edges(n, &edges)?)
        }
        FamilyId::Star { leaves } => {
            if leaves == 0 {
                return Err(invalid("K_{1,k}", "k >= 1"));
            }
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            FamilyGraph::General(Graph::from_edges(leaves + 1, &edges)?)
        }
        FamilyId::Kn1PlusEdge { n } => {
            if n < 3 {
                return Err(invalid("K_{n-1}+e", "n >= 3"));
            }
            let mut g = Graph::complete(n - 1)?.disjoint_union(&Graph::empty(1)?)?;
            g.add_edge(0, n - 1)?;
            FamilyGraph::General(g)
        }
        FamilyId::Kn1PlusVertex { n } => {
            if n < 2 {
                return Err(invalid("K_{n-1}+v", "n >= 2"));
            }
            FamilyGraph::General(Graph::complete(n - 1)?.disjoint_union(&Graph::empty(1)?)?)
        }
        FamilyId::Knn1PlusEdge { n } => {
            if n < 2 {
                return Err(invalid("K_{n,n-1}+e", "n >= 2"));
            }
            let mut b = BipartiteGraph::empty(n, n)?;
            for x in 0..n {
                for y in 0..n - 1 {
                    b.add_edge(x, y)?;
                }
            }
            b.add_edge(0, n - 1)?;
            FamilyGraph::Bipartite(b)
        }
        FamilyId::Kpn2Plus4e { n, p } => {
            if n < 3 {
                return Err(invalid("K_{p,n-2}+4e", "n >= 3"));
            }
            if p + 1 < n {
                return Err(invalid("K_{p,n-2}+4e", format!("p >= n-1 (got p = {p}, n = {n})")));
            }
            let mut b = BipartiteGraph::empty(p, n)?;
            for x in 0..p {
                for y in 0..n - 2 {
                    b.add_edge(x, y)?;
                }
            }
            for y in [n - 2, n - 1] {
                b.add_edge(0, y)?;
                b.add_edge(1, y)?;
            }
            FamilyGraph::Bipartite(b)
        }
        FamilyId::Knn1Plus2e { n } => {
            if n < 2 {
                return Err(invalid("K_{n,n-1}+2e", "n >= 2"));
            }
            // X: the n-1 vertices of the small side, then the two pendants.
            let mut b = BipartiteGraph::empty(n + 1, n)?;
            for x in 0..n - 1 {
                for y in 0..n {
                    b.add_edge(x, y)?;
                }
            }
            b.add_edge(n - 1, 0)?;
            b.add_edge(n, 0)?;
            FamilyGraph::Bipartite(b)
        }
        FamilyId::NcMember { index } => {
            if index >= NC_LEN {
                return Err(invalid("NC member", format!("index < {NC_LEN}")));
            }
            FamilyGraph::General(nc_member(index))
        }
        FamilyId::NpMember { index } => {
            if index >= NP_LEN {
                return Err(invalid("NP member", format!("index < {NP_LEN}")));
            }
            FamilyGraph::General(np_member(index))
        }
        FamilyId::JoinExpr { .. } => return Err(FamilyError::NotConstructible("a structured exception class")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kpn2_plus_4e_example() {
        let fam = make_family(FamilyId::Kpn2Plus4e { n: 4, p: 4 }).unwrap();
        let g = fam.graph();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree_sequence().as_slice(), &[2, 2, 2, 2, 4, 4, 4, 4]);
    }

    #[test]
    fn kn1_plus_edge_example() {
        let g = make_family(FamilyId::Kn1PlusEdge { n: 5 }).unwrap().graph();
        assert_eq!(g.degree_sequence().as_slice(), &[1, 3, 3, 3, 4]);
    }

    #[test]
    fn nc_member_degrees() {
        let g = make_family(FamilyId::NcMember { index: 0 }).unwrap().graph();
        assert_eq!(g.n(), 9);
        assert_eq!(g.degree_sequence().as_slice(), &[4, 4, 4, 4, 4, 8, 8, 8, 8]);
        let g = make_family(FamilyId::NcMember { index: 1 }).unwrap().graph();
        assert_eq!(g.degree_sequence().as_slice(), &[2, 2, 4, 4, 4, 6, 6]);
        assert_eq!(g.edge_count(), 14);
        let g = make_family(FamilyId::NcMember { index: 8 }).unwrap().graph();
        assert_eq!(g.degree_sequence().as_slice(), &[2, 2, 2, 4, 4]);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            make_family(FamilyId::Kpn2Plus4e { n: 4, p: 2 }),
            Err(FamilyError::InvalidParameters { .. })
        ));
        assert!(make_family(FamilyId::NcMember { index: 9 }).is_err());
        assert!(make_family(FamilyId::NpMember { index: 8 }).is_err());
        assert!(make_family(FamilyId::Cycle { n: 2 }).is_err());
        assert!(matches!(
            make_family(FamilyId::JoinExpr { class: ExceptionClass::Ec, kind: ClassKind::A, r: 0 }),
            Err(FamilyError::NotConstructible(_))
        ));
    }

    #[test]
    fn bipartite_family_shapes() {
        let b = make_family(FamilyId::Knn1PlusEdge { n: 4 }).unwrap();
        let b = b.bipartite().unwrap();
        assert_eq!((b.p(), b.q(), b.edge_count()), (4, 4, 13));
        let b = make_family(FamilyId::Knn1Plus2e { n: 4 }).unwrap();
        let b = b.bipartite().unwrap();
        assert_eq!((b.p(), b.q(), b.edge_count()), (5, 4, 14));
        assert_eq!(b.min_degree_x(), 1);
        assert_eq!(b.min_degree_y(), 3);
        let b = make_family(FamilyId::Kpn2Plus4e { n: 4, p: 5 }).unwrap();
        let b = b.bipartite().unwrap();
        assert_eq!((b.p(), b.q(), b.edge_count()), (5, 4, 14));
    }

    #[test]
    fn closed_form_edge_counts() {
        for n in 3..=12 {
            let ids = [
                FamilyId::CompleteK { n },
                FamilyId::CompleteBipartite { p: n, q: n - 1 },
                FamilyId::Cycle { n },
                FamilyId::Star { leaves: n },
                FamilyId::Kn1PlusEdge { n },
                FamilyId::Kn1PlusVertex { n },
                FamilyId::Knn1PlusEdge { n },
                FamilyId::Kpn2Plus4e { n, p: n - 1 },
                FamilyId::Kpn2Plus4e { n, p: n },
                FamilyId::Kpn2Plus4e { n, p: n + 1 },
                FamilyId::Knn1Plus2e { n },
            ];
            for id in ids {
                let g = make_family(id).unwrap().graph();
                assert_eq!(Some(g.edge_count()), id.edge_count(), "{id}");
                assert_eq!(Some(g.n()), id.order(), "{id}");
                for u in 0..g.n() {
                    assert!(!g.has_edge(u, u));
                    for v in 0..g.n() {
                        assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                    }
                }
            }
            assert_eq!(FamilyId::Knn1PlusEdge { n }.edge_count(), Some(n * n - n + 1));
            assert_eq!(FamilyId::Kpn2Plus4e { n, p: n }.edge_count(), Some(n * n - 2 * n + 4));
            assert_eq!(FamilyId::Kpn2Plus4e { n, p: n + 1 }.edge_count(), Some(n * n - n + 2));
        }
    }

    #[test]
    fn names() {
        assert_eq!(FamilyId::NcMember { index: 8 }.to_string(), "K2∨3K1");
        assert_eq!(FamilyId::Kpn2Plus4e { n: 4, p: 4 }.to_string(), "K4,2+4e");
        assert_eq!(FamilyId::Knn1PlusEdge { n: 4 }.to_string(), "K4,3+e");
    }
}
