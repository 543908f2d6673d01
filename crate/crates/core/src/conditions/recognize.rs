use std::sync::OnceLock;

use crate::family::{make_family, FamilyId, NC_LEN, NP_LEN};
use crate::graph::Graph;
use crate::iso::are_isomorphic;

use super::classes::ec_ep_membership;

struct Member {
    id: FamilyId,
    graph: Graph,
    m: usize,
}

fn members(list: &'static OnceLock<Vec<Member>>, ids: impl Iterator<Item = FamilyId>) -> &'static [Member] {
    list.get_or_init(|| {
        ids.map(|id| {
            let graph = make_family(id).expect("fixed list member").graph();
            Member { id, m: graph.edge_count(), graph }
        })
        .collect()
    })
}

fn find(list: &[Member], g: &Graph) -> Option<FamilyId> {
    let m = g.edge_count();
    list.iter().find(|mem| mem.graph.n() == g.n() && mem.m == m && are_isomorphic(&mem.graph, g)).map(|mem| mem.id)
}

static NC: OnceLock<Vec<Member>> = OnceLock::new();
static NP: OnceLock<Vec<Member>> = OnceLock::new();

pub(crate) fn nc_member_of(g: &Graph) -> Option<FamilyId> {
    find(members(&NC, (0..NC_LEN).map(|index| FamilyId::NcMember { index })), g)
}

pub(crate) fn np_member_of(g: &Graph) -> Option<FamilyId> {
    find(members(&NP, (0..NP_LEN).map(|index| FamilyId::NpMember { index })), g)
}

/// The NC or NP member isomorphic to `g`, if any. The two lists share no
/// graph, so at most one match exists.
pub fn nc_np_membership(g: &Graph) -> Option<FamilyId> {
    nc_member_of(g).or_else(|| np_member_of(g))
}

/// True iff `g` is isomorphic to the representative of `id`. For a
/// structured exception class, true iff `g` has a membership witness of the
/// same type and `r`. A bipartite input is passed as its underlying graph.
pub fn recognize_family(g: &Graph, id: FamilyId) -> bool {
    if let FamilyId::JoinExpr { class, kind, r } = id {
        return ec_ep_membership(g, class).is_some_and(|w| w.kind == kind && w.r == r);
    }
    if id.order() != Some(g.n()) {
        return false;
    }
    if id.edge_count().is_some_and(|m| m != g.edge_count()) {
        return false;
    }
    match make_family(id) {
        Ok(fam) => are_isomorphic(&fam.graph(), g),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BipartiteGraph;

    #[test]
    fn membership_examples() {
        let k23 = BipartiteGraph::complete(2, 3).unwrap().to_graph();
        assert_eq!(nc_np_membership(&k23), Some(FamilyId::NcMember { index: 7 }));
        let k24 = BipartiteGraph::complete(2, 4).unwrap().to_graph();
        assert_eq!(nc_np_membership(&k24), Some(FamilyId::NpMember { index: 3 }));
        let c5 = make_family(FamilyId::Cycle { n: 5 }).unwrap().graph();
        assert_eq!(nc_np_membership(&c5), None);
    }

    #[test]
    fn every_member_recognised_after_relabeling() {
        for id in (0..NC_LEN).map(|index| FamilyId::NcMember { index }).chain((0..NP_LEN).map(|index| FamilyId::NpMember { index })) {
            let g = make_family(id).unwrap().graph();
            let n = g.n();
            let perm: Vec<usize> = (0..n).map(|v| (v * 5 + 3) % n).collect();
            let perm = if n % 5 == 0 { (0..n).rev().collect() } else { perm };
            assert_eq!(nc_np_membership(&g.permute(&perm)), Some(id), "{id}");
        }
    }

    #[test]
    fn recognize_examples() {
        let fam = make_family(FamilyId::Kpn2Plus4e { n: 4, p: 4 }).unwrap();
        assert!(recognize_family(&fam.graph(), FamilyId::Kpn2Plus4e { n: 4, p: 4 }));
        let c8 = make_family(FamilyId::Cycle { n: 8 }).unwrap().graph();
        assert!(!recognize_family(&c8, FamilyId::Kpn2Plus4e { n: 4, p: 4 }));
        let k4e = make_family(FamilyId::Kn1PlusEdge { n: 5 }).unwrap().graph();
        // move the pendant vertex (index 4) to index 0
        let moved = k4e.permute(&[1, 2, 3, 4, 0]);
        assert!(moved.degree(0) == 1);
        assert!(recognize_family(&moved, FamilyId::Kn1PlusEdge { n: 5 }));
        assert!(!recognize_family(&moved, FamilyId::Kn1PlusEdge { n: 6 }));
        assert!(!recognize_family(&moved, FamilyId::Kn1PlusVertex { n: 5 }));
    }
}
