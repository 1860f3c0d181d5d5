//! Non-induced subgraph containment.
//!
//! Backtracking with bit-vector candidate domains and forward checking.
//! The next pattern vertex is the unassigned one with the fewest remaining
//! candidates (ties: higher pattern degree, then lower index); candidates are
//! tried in ascending host order. Host vertices with identical neighbourhoods
//! outside each other are interchangeable, so at each node only the first
//! unused member of such a class is tried. The first witness is therefore the
//! same one a plain ascending search would report.

use crate::budget::{Budget, Meter, Outcome};
use crate::bits::{bit, bits};
use crate::canon::twin_classes;
use crate::graph::Graph;

/// Embedding of the pattern: `witness[p]` is the host image of pattern vertex `p`.
pub type Containment = Outcome<Vec<usize>>;

/// Unbudgeted containment test.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    find_embedding(host, pattern, Budget::unlimited()).found()
}

pub fn find_embedding(host: &Graph, pattern: &Graph, budget: Budget) -> Containment {
    Matcher::new(host, pattern).map_or(Outcome::Absent, |m| m.run(None, budget))
}

/// Embeddings whose image contains host vertex `through`.
///
/// Used when `host - through` is already known to be pattern-free.
pub fn find_embedding_through(
    host: &Graph,
    pattern: &Graph,
    through: usize,
    budget: Budget,
) -> Containment {
    Matcher::new(host, pattern).map_or(Outcome::Absent, |m| m.run(Some(through), budget))
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    host_twin: Vec<usize>,
    pattern_twin: Vec<usize>,
    initial: Vec<u64>,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph) -> Option<Self> {
        let (hn, pn) = (host.order(), pattern.order());
        if pn > hn || pattern.edge_count() > host.edge_count() {
            return None;
        }
        let mut hd = host.degrees();
        let mut pd = pattern.degrees();
        hd.sort_unstable_by(|a, b| b.cmp(a));
        pd.sort_unstable_by(|a, b| b.cmp(a));
        if pd.iter().zip(&hd).any(|(p, h)| p > h) {
            return None;
        }
        let initial: Vec<u64> = (0..pn)
            .map(|p| {
                let need = pattern.degree(p);
                (0..hn)
                    .filter(|&h| host.degree(h) >= need)
                    .fold(0u64, |m, h| m | bit(h))
            })
            .collect();
        if initial.contains(&0) {
            return None;
        }
        Some(Matcher {
            host,
            pattern,
            host_twin: twin_classes(host),
            pattern_twin: twin_classes(pattern),
            initial,
        })
    }

    fn run(&self, through: Option<usize>, budget: Budget) -> Containment {
        let pn = self.pattern.order();
        let mut meter = budget.meter();
        let mut assign = vec![usize::MAX; pn];
        let found = match through {
            None => self.search(self.initial.clone(), &mut assign, 0, &mut meter),
            Some(v) => {
                let mut found = false;
                let mut tried: Vec<usize> = Vec::new();
                for p in 0..pn {
                    if self.initial[p] & bit(v) == 0 {
                        continue;
                    }
                    // pattern twins give the same embeddings up to relabelling
                    if tried.iter().any(|&q| self.pattern_twin[q] == self.pattern_twin[p]) {
                        continue;
                    }
                    tried.push(p);
                    let mut dom = self.initial.clone();
                    if !self.assign(&mut dom, p, v) {
                        continue;
                    }
                    assign[p] = v;
                    if self.search(dom, &mut assign, 1, &mut meter) {
                        found = true;
                        break;
                    }
                    assign[p] = usize::MAX;
                    if meter.exhausted {
                        break;
                    }
                }
                found
            }
        };
        if found {
            Outcome::Found(assign)
        } else if meter.exhausted {
            Outcome::Undecided
        } else {
            Outcome::Absent
        }
    }

    /// Restricts domains after mapping `p` to `h`; false on a wipe-out.
    fn assign(&self, dom: &mut [u64], p: usize, h: usize) -> bool {
        let hn = self.host.neighbors(h);
        let pn = self.pattern.neighbors(p);
        dom[p] = bit(h);
        for q in 0..dom.len() {
            if q == p {
                continue;
            }
            let mut d = dom[q] & !bit(h);
            if pn & bit(q) != 0 {
                d &= hn;
            }
            if d == 0 {
                return false;
            }
            dom[q] = d;
        }
        true
    }

    fn search(&self, dom: Vec<u64>, assign: &mut [usize], depth: usize, meter: &mut Meter) -> bool {
        let pn = assign.len();
        if depth == pn {
            return true;
        }
        if !meter.tick() {
            return false;
        }
        // pigeonhole over unassigned pattern vertices
        let mut union = 0u64;
        let mut open = 0u32;
        let mut next = usize::MAX;
        let mut best = (u32::MAX, 0usize);
        for q in 0..pn {
            if assign[q] != usize::MAX {
                continue;
            }
            union |= dom[q];
            open += 1;
            let size = dom[q].count_ones();
            let deg = self.pattern.degree(q);
            if size < best.0 || (size == best.0 && deg > best.1) {
                best = (size, deg);
                next = q;
            }
        }
        if union.count_ones() < open {
            return false;
        }
        let mut tried_classes = 0u64;
        for h in bits(dom[next]) {
            let class = self.host_twin[h];
            if tried_classes & bit(class) != 0 {
                continue;
            }
            tried_classes |= bit(class);
            let mut child = dom.clone();
            if !self.assign(&mut child, next, h) {
                continue;
            }
            assign[next] = h;
            if self.search(child, assign, depth + 1, meter) {
                return true;
            }
            assign[next] = usize::MAX;
            if meter.exhausted {
                return false;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn turan(n: usize, r: usize) -> Graph {
        let part = |v: usize| v % r;
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if part(u) != part(v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn is_embedding(host: &Graph, pattern: &Graph, w: &[usize]) -> bool {
        let mut used = 0u64;
        for &h in w {
            if used & bit(h) != 0 {
                return false;
            }
            used |= bit(h);
        }
        pattern.edges().iter().all(|&(a, b)| host.has_edge(w[a], w[b]))
    }

    #[test]
    fn k4_contains_c4() {
        let k4 = Graph::complete(4).unwrap();
        let w = contains_subgraph(&k4, &cycle(4)).unwrap();
        assert!(is_embedding(&k4, &cycle(4), &w));
    }

    #[test]
    fn turan_9_3_has_no_k4() {
        assert!(contains_subgraph(&turan(9, 3), &Graph::complete(4).unwrap()).is_none());
        assert!(contains_subgraph(&turan(9, 3), &Graph::complete(3).unwrap()).is_some());
    }

    #[test]
    fn odd_cycle_not_in_bipartite() {
        assert!(contains_subgraph(&turan(10, 2), &cycle(5)).is_none());
        assert!(contains_subgraph(&turan(10, 2), &cycle(6)).is_some());
    }

    #[test]
    fn isolated_vertices_in_pattern() {
        let host = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let pat = Graph::from_edges(4, &[(2, 3)]).unwrap();
        let w = contains_subgraph(&host, &pat).unwrap();
        assert!(is_embedding(&host, &pat, &w));
        let too_big = Graph::new(5).unwrap();
        assert!(contains_subgraph(&host, &too_big).is_none());
    }

    #[test]
    fn twin_pruning_keeps_first_witness() {
        // \bar{K_2} pattern in \bar{K_2} host: twin pruning must still find it
        let e2 = Graph::new(2).unwrap();
        assert_eq!(contains_subgraph(&e2, &e2), Some(vec![0, 1]));
    }

    #[test]
    fn through_vertex() {
        // triangle 0-1-2 plus pendant 3 attached to 0
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert!(find_embedding_through(&g, &k3, 3, Budget::unlimited()).is_absent());
        let w = find_embedding_through(&g, &k3, 1, Budget::unlimited()).found().unwrap();
        assert!(w.contains(&1));
    }

    #[test]
    fn budget_yields_undecided() {
        // K_6 is absent from T(30,5) but proving it takes more than a handful of nodes
        let host = turan(30, 5);
        let out = find_embedding(&host, &Graph::complete(6).unwrap(), Budget::nodes(2));
        assert_eq!(out, Outcome::Undecided);
    }
}
