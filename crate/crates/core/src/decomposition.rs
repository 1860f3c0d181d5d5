//! Decomposition family `M(F)` and subgraph covering family `B(F)`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bits::{for_each_subset_of_size, low_mask};
use crate::budget::{Budget, Outcome};
use crate::canon::canonize;
use crate::construct::{complete, empty, turan};
use crate::error::{Error, Result};
use crate::family::ForbiddenFamily;
use crate::generate::children;
use crate::graph::{Graph, MAX_ORDER};
use crate::subgraph::{contains_subgraph, find_embedding};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    /// Minimal members in canonical labelling, by order, then edges, then
    /// certificate.
    pub members: Vec<Graph>,
    /// Largest candidate order examined.
    pub search_bound: usize,
    /// True when the bound reaches `t` and no containment test ran out of
    /// budget, so the list is the whole family.
    pub complete: bool,
    /// Candidates whose test ran out of budget (treated as non-members).
    pub undecided: usize,
    pub has_bipartite: bool,
}

/// `(M + E_|F|) * T((r-1)|F|, r-1)`.
fn host(m: &Graph, f_order: usize, r: usize) -> Result<Graph> {
    let total = m.order() + f_order + (r - 1) * f_order;
    if total > MAX_ORDER {
        return Err(Error::TooManyVertices(total));
    }
    let first = Graph::disjoint_union(&[m, &empty(f_order)?])?;
    Graph::join(&[&first, &turan((r - 1) * f_order, r - 1)?])
}

/// Whether some member embeds in the host built on `m`.
pub fn decomposes(m: &Graph, fam: &ForbiddenFamily, budget: Budget) -> Result<Outcome<usize>> {
    let mut undecided = false;
    for (i, f) in fam.members().iter().enumerate() {
        match find_embedding(&host(m, f.order(), fam.r())?, f, budget) {
            Outcome::Found(_) => return Ok(Outcome::Found(i)),
            Outcome::Undecided => undecided = true,
            Outcome::Absent => {}
        }
    }
    Ok(if undecided { Outcome::Undecided } else { Outcome::Absent })
}

/// Minimal graphs without isolated vertices whose host contains a member,
/// searched up to order `bound` (at most `t`; larger minimal members cannot
/// exist since a member uses at most `t` vertices of `M`).
///
/// Candidates are generated by canonical augmentation one order at a time.
/// A candidate is kept when it decomposes and contains no member kept
/// before it, in order of vertex count and then edge count; any generated
/// graph containing a kept member is pruned with its whole subtree.
pub fn decomposition_family(fam: &ForbiddenFamily, bound: Option<usize>, budget: Budget) -> Result<DecompositionResult> {
    let t = fam.t();
    let bound = bound.unwrap_or(t).min(t);
    for f in fam.members() {
        host(&Graph::new(bound)?, f.order(), fam.r())?;
    }
    let mut kept: Vec<Graph> = Vec::new();
    let mut undecided = 0;
    let mut level = vec![Graph::new(0)?];
    for _ in 0..bound {
        let next: Vec<Graph> = level
            .iter()
            .flat_map(|g| children(g, |c| kept.iter().all(|k| contains_subgraph(c, k).is_none())))
            .collect();
        let mut cands: Vec<&Graph> = next.iter().filter(|g| g.min_degree() > 0).collect();
        cands.sort_by_key(|g| g.edge_count());
        let verdicts: Vec<Outcome<usize>> = cands
            .par_iter()
            .map(|m| decomposes(m, fam, budget))
            .collect::<Result<_>>()?;
        let mut found: Vec<Graph> = Vec::new();
        for (m, v) in cands.iter().zip(verdicts) {
            match v {
                Outcome::Found(_) => {
                    if found.iter().all(|k| contains_subgraph(m, k).is_none()) {
                        found.push((*m).clone());
                    }
                }
                Outcome::Undecided => undecided += 1,
                Outcome::Absent => {}
            }
        }
        kept.extend(found);
        level = next
            .into_iter()
            .filter(|g| kept.iter().all(|k| contains_subgraph(g, k).is_none()))
            .collect();
    }
    let mut keyed: Vec<((usize, usize, Vec<u8>), Graph)> = kept
        .iter()
        .map(|g| {
            let c = canonize(g);
            ((g.order(), g.edge_count(), c.form.cert), c.graph)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let members: Vec<Graph> = keyed.into_iter().map(|(_, g)| g).collect();
    let has_bipartite = members.iter().any(Graph::is_bipartite);
    Ok(DecompositionResult {
        members,
        search_bound: bound,
        complete: bound >= t && undecided == 0,
        undecided,
        has_bipartite,
    })
}

/// All `F[U]` over members `F` and coverings `U` with `|U| <= q - 1`, in
/// canonical labelling and sorted by certificate; `{K_q}` when no member has
/// such a covering.
pub fn covering_family(fam: &ForbiddenFamily) -> Result<Vec<Graph>> {
    let q = fam.q();
    let mut out: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for f in fam.members() {
        let all = low_mask(f.order());
        for size in 0..q {
            for_each_subset_of_size(all, size, |u| {
                let covers = f.edges().iter().all(|&(a, b)| (u >> a | u >> b) & 1 == 1);
                if covers {
                    let c = canonize(&f.induced(u));
                    out.entry(c.form.cert).or_insert(c.graph);
                }
                true
            });
        }
    }
    if out.is_empty() {
        return Ok(vec![complete(q)?]);
    }
    Ok(out.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::certificate;
    use crate::construct::{complete_multipartite, cycle, path};

    fn single(g: Graph) -> ForbiddenFamily {
        ForbiddenFamily::single(g).unwrap()
    }

    #[test]
    fn cliques_decompose_into_an_edge() {
        for r in 2..=3 {
            let res = decomposition_family(&single(complete(r + 1).unwrap()), None, Budget::unlimited()).unwrap();
            assert!(res.complete);
            assert_eq!(res.members.len(), 1);
            assert_eq!(certificate(&res.members[0]), certificate(&complete(2).unwrap()));
        }
    }

    #[test]
    fn bipartite_pattern_with_r_one() {
        // r = 1: the host is M + E_4, so M(C_4) = {C_4}
        let res = decomposition_family(&single(cycle(4).unwrap()), None, Budget::unlimited()).unwrap();
        assert_eq!(res.members.iter().map(certificate).collect::<Vec<_>>(), vec![certificate(&cycle(4).unwrap())]);
    }

    fn without_isolated(g: &Graph) -> Graph {
        g.induced((0..g.order()).filter(|&v| g.degree(v) > 0).fold(0, |m, v| m | 1 << v))
    }

    #[test]
    fn members_are_minimal() {
        for f in [cycle(5).unwrap(), path(5).unwrap(), complete_multipartite(&[2, 3]).unwrap()] {
            let fam = single(f);
            let res = decomposition_family(&fam, None, Budget::unlimited()).unwrap();
            assert!(res.complete && res.has_bipartite);
            for (i, m) in res.members.iter().enumerate() {
                assert!(m.min_degree() > 0);
                assert!(decomposes(m, &fam, Budget::unlimited()).unwrap().is_found());
                for (u, v) in m.edges() {
                    let mut h = m.clone();
                    h.remove_edge(u, v);
                    assert!(!decomposes(&without_isolated(&h), &fam, Budget::unlimited()).unwrap().is_found());
                }
                for (j, other) in res.members.iter().enumerate() {
                    assert!(i == j || contains_subgraph(m, other).is_none());
                }
            }
        }
        // two vertices of C_5 go to the independent side, leaving one edge
        let res = decomposition_family(&single(cycle(5).unwrap()), None, Budget::unlimited()).unwrap();
        assert_eq!(res.members, vec![complete(2).unwrap()]);
    }

    #[test]
    fn covering_families() {
        let matching = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let fam = single(matching);
        assert_eq!(fam.q(), 3);
        assert_eq!(covering_family(&fam).unwrap(), vec![complete(3).unwrap()]);

        let star = single(complete_multipartite(&[1, 3]).unwrap());
        assert_eq!(covering_family(&star).unwrap(), vec![complete(1).unwrap()]);

        // q = 4 from the matching; K_3 and K_4 contribute K_2 and K_3
        let four = Graph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let mixed = ForbiddenFamily::new(vec![four, complete(3).unwrap(), complete(4).unwrap()]).unwrap();
        assert_eq!(mixed.q(), 4);
        let mut got: Vec<String> = covering_family(&mixed).unwrap().iter().map(certificate).collect();
        got.sort();
        let mut want = vec![certificate(&complete(2).unwrap()), certificate(&complete(3).unwrap())];
        want.sort();
        assert_eq!(got, want);
    }
}
