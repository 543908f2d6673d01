//! Membership in the structured exception classes of the complement
//! conditions.
//!
//! EC_n (Hamiltonian form):
//!   (a) `K1 ∨ (K_a ⊔ K_b)`;
//!   (b) `H ∨ F` with `H` regular of degree `(n-1)/2 - r` on `n-r` vertices,
//!       `F` arbitrary on `r` vertices, `1 <= r <= (n-1)/2`.
//! EP_n (traceable form):
//!   (a) regular of degree `n/2 - 1`;
//!   (b) `K_a ⊔ K_b`;
//!   (c) `H ∨ F` with `H` regular of degree `n/2 - 1 - r`, `1 <= r <= n/2 - 1`.
//!
//! Every join `A ∨ B` splits the components of the complement between the
//! two sides. For the regular-join types the regular side `H` has
//! complement degree `(n-1)/2` (resp. `n/2`) at every vertex, and complement
//! edges never leave `H`; such a component has more than half the vertices,
//! so `H` is a single complement component. The search below therefore
//! only inspects each complement component once.

use serde::{Deserialize, Serialize};

use crate::family::{ClassKind, ExceptionClass, FamilyId};
use crate::graph::Graph;

/// Two nonempty vertex sets with every cross pair an edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinDecomposition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl JoinDecomposition {
    /// Checks the partition and join properties against `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in self.side_a.iter().chain(&self.side_b) {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        !self.side_a.is_empty()
            && !self.side_b.is_empty()
            && seen.iter().all(|&s| s)
            && self.side_a.iter().all(|&a| self.side_b.iter().all(|&b| g.has_edge(a, b)))
    }
}

/// Evidence that a graph lies in EC_n or EP_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassWitness {
    pub class: ExceptionClass,
    pub kind: ClassKind,
    /// Size of the free side `F` for regular-join types, 0 otherwise.
    pub r: usize,
    /// For join types: `side_a` is the single vertex (EC a) or the regular
    /// side `H`; `side_b` is the rest.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<JoinDecomposition>,
    /// The two cliques for EC (a) and EP (b).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cliques: Vec<Vec<usize>>,
}

impl ClassWitness {
    pub fn family(&self) -> FamilyId {
        FamilyId::JoinExpr { class: self.class, kind: self.kind, r: self.r }
    }

    pub fn describe(&self) -> String {
        let mut s = self.family().to_string();
        if let Some(d) = &self.decomposition {
            s.push_str(&format!(": {:?} ∨ {:?}", d.side_a, d.side_b));
        }
        if !self.cliques.is_empty() {
            s.push_str(&format!(": cliques {:?}", self.cliques));
        }
        s
    }
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// `Some([A, B])` when `g` is the disjoint union of exactly two cliques.
fn two_cliques(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let comps = g.components();
    (comps.len() == 2 && comps.iter().all(|c| is_clique(g, c))).then_some(comps)
}

/// A complement component, other than all of `V`, whose vertices all have
/// complement degree `d`.
fn regular_complement_component(g: &Graph, d: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let comp = g.complement().components();
    comp.into_iter().find(|c| c.len() < n && c.iter().all(|&v| n - 1 - g.degree(v) == d))
}

fn regular_join(g: &Graph, class: ExceptionClass, kind: ClassKind, d: usize) -> Option<ClassWitness> {
    let h = regular_complement_component(g, d)?;
    let rest: Vec<usize> = (0..g.n()).filter(|v| h.binary_search(v).is_err()).collect();
    let r = rest.len();
    Some(ClassWitness {
        class,
        kind,
        r,
        decomposition: Some(JoinDecomposition { side_a: h, side_b: rest }),
        cliques: Vec::new(),
    })
}

/// A witness that `g ∈ EC_n` (or `EP_n`), if one exists.
pub fn ec_ep_membership(g: &Graph, class: ExceptionClass) -> Option<ClassWitness> {
    let n = g.n();
    match class {
        ExceptionClass::Ec => {
            for v in (0..n).filter(|&v| g.degree(v) == n - 1) {
                let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                if rest.len() < 2 {
                    continue;
                }
                let sub = g.induced(&rest).expect("valid vertices");
                if let Some(parts) = two_cliques(&sub) {
                    let cliques = parts.into_iter().map(|p| p.into_iter().map(|i| rest[i]).collect()).collect();
                    return Some(ClassWitness {
                        class,
                        kind: ClassKind::A,
                        r: 0,
                        decomposition: Some(JoinDecomposition { side_a: vec![v], side_b: rest }),
                        cliques,
                    });
                }
            }
            if n % 2 == 1 && n >= 3 {
                return regular_join(g, class, ClassKind::B, (n - 1) / 2);
            }
            None
        }
        ExceptionClass::Ep => {
            if n % 2 == 0 && (0..n).all(|v| g.degree(v) == n / 2 - 1) {
                return Some(ClassWitness { class, kind: ClassKind::A, r: 0, decomposition: None, cliques: Vec::new() });
            }
            if let Some(cliques) = two_cliques(g) {
                return Some(ClassWitness { class, kind: ClassKind::B, r: 0, decomposition: None, cliques });
            }
            if n % 2 == 0 && n >= 4 {
                return regular_join(g, class, ClassKind::C, n / 2);
            }
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::make_family;

    fn fam(id: FamilyId) -> Graph {
        make_family(id).unwrap().graph()
    }

    fn is_regular(g: &Graph, d: usize) -> bool {
        (0..g.n()).all(|v| g.degree(v) == d)
    }

    /// Literal reading of the class definitions: try every split of the
    /// complement components into two sides.
    fn brute_force(g: &Graph, class: ExceptionClass) -> bool {
        let n = g.n();
        let comps = g.complement().components();
        let c = comps.len();
        let mut join_types = false;
        for mask in 1..(1u32 << c) - 1 {
            let a: Vec<usize> =
                (0..c).filter(|i| mask >> i & 1 == 1).flat_map(|i| comps[i].iter().copied()).collect();
            let b: Vec<usize> =
                (0..c).filter(|i| mask >> i & 1 == 0).flat_map(|i| comps[i].iter().copied()).collect();
            let ga = g.induced(&a).unwrap();
            let gb = g.induced(&b).unwrap();
            let r = b.len();
            match class {
                ExceptionClass::Ec => {
                    if a.len() == 1 && gb.components().len() == 2 && gb.components().iter().all(|k| is_clique(&gb, k)) {
                        join_types = true;
                    }
                    if n % 2 == 1 && r >= 1 && 2 * r <= n - 1 && is_regular(&ga, (n - 1) / 2 - r) {
                        join_types = true;
                    }
                }
                ExceptionClass::Ep => {
                    if n % 2 == 0 && r >= 1 && 2 * r + 2 <= n && is_regular(&ga, n / 2 - 1 - r) {
                        join_types = true;
                    }
                }
            }
        }
        match class {
            ExceptionClass::Ec => join_types,
            ExceptionClass::Ep => {
                join_types
                    || (n % 2 == 0 && is_regular(g, n / 2 - 1))
                    || (g.components().len() == 2 && g.components().iter().all(|k| is_clique(g, k)))
            }
        }
    }

    #[test]
    fn examples() {
        let bowtie = fam(FamilyId::NcMember { index: 6 });
        let w = ec_ep_membership(&bowtie, ExceptionClass::Ec).unwrap();
        assert_eq!(w.kind, ClassKind::A);
        assert!(w.decomposition.as_ref().unwrap().is_valid(&bowtie));
        let c6 = fam(FamilyId::Cycle { n: 6 });
        assert_eq!(ec_ep_membership(&c6, ExceptionClass::Ep).unwrap().kind, ClassKind::A);
        let k3k2 = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        let w = ec_ep_membership(&k3k2, ExceptionClass::Ep).unwrap();
        assert_eq!(w.kind, ClassKind::B);
        assert_eq!(w.cliques, vec![vec![0, 1, 2], vec![3, 4]]);
        let c5 = fam(FamilyId::Cycle { n: 5 });
        assert!(ec_ep_membership(&c5, ExceptionClass::Ec).is_none());
        // K_{2,3} = 3K1 ∨ 2K1: 3K1 is 0-regular = (5-1)/2 - 2
        let k23 = fam(FamilyId::NcMember { index: 7 });
        let w = ec_ep_membership(&k23, ExceptionClass::Ec).unwrap();
        assert_eq!((w.kind, w.r), (ClassKind::B, 2));
        assert!(w.decomposition.unwrap().is_valid(&k23));
    }

    #[test]
    fn complete_graphs_are_not_members() {
        for n in 3..9 {
            let k = Graph::complete(n).unwrap();
            assert!(ec_ep_membership(&k, ExceptionClass::Ec).is_none(), "K{n}");
        }
    }

    #[test]
    fn agrees_with_brute_force_on_all_small_graphs() {
        for n in 2..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                for class in [ExceptionClass::Ec, ExceptionClass::Ep] {
                    let w = ec_ep_membership(&g, class);
                    assert_eq!(w.is_some(), brute_force(&g, class), "{g:?} {class:?}");
                    if let Some(d) = w.and_then(|w| w.decomposition) {
                        assert!(d.is_valid(&g));
                    }
                }
            }
        }
    }
}
