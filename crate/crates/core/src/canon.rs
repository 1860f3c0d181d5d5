//! Exact canonical labelling.
//!
//! Individualisation-refinement over ordered partitions. Leaves are compared
//! by their relabelled adjacency rows and the greatest one is the canonical
//! form. Automorphisms are detected whenever two leaves coincide and are used
//! to prune equivalent children; a leaf equivalent to the first leaf also
//! abandons the rest of its subtree up to the first-path node it branched
//! from. Twin vertices (equal neighbourhoods apart from each other) are
//! interchangeable and only one per class is tried at each node.

use std::cmp::Ordering;

use crate::bits::{bit, bits};
use crate::graph::Graph;

/// Canonical certificate and the labelling that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// graph6 bytes of the canonically relabelled graph.
    pub cert: Vec<u8>,
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

impl CanonicalForm {
    pub fn cert_str(&self) -> &str {
        std::str::from_utf8(&self.cert).expect("graph6 is ASCII")
    }
}

/// Canonical form together with automorphism information.
#[derive(Clone, Debug)]
pub struct Canonization {
    pub form: CanonicalForm,
    /// Canonical graph itself (`g.permuted(&form.order)`).
    pub graph: Graph,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    /// `orbits[v]` is the least vertex in the orbit of `v`.
    pub orbits: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g).form
}

/// Shorthand for the certificate as a `String`.
pub fn certificate(g: &Graph) -> String {
    String::from_utf8(canonical_form(g).cert).expect("graph6 is ASCII")
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.degrees().iter().copied().fold([0usize; 65], |mut h, d| {
            h[d] += 1;
            h
        }) == b.degrees().iter().copied().fold([0usize; 65], |mut h, d| {
            h[d] += 1;
            h
        })
        && canonical_form(a).cert == canonical_form(b).cert
}

pub fn canonize(g: &Graph) -> Canonization {
    let n = g.order();
    let mut search = Search::new(g);
    let cells = if n == 0 { Vec::new() } else { vec![g.vertices()] };
    let mut prefix = Vec::new();
    search.explore(cells, &mut prefix);
    let best = search.best.expect("search always reaches a leaf");
    let orbits = orbits_of(n, &search.autos);
    let graph = Graph::from_rows(best.rows).expect("relabelled rows are valid");
    let form = CanonicalForm {
        cert: graph.to_graph6().into_bytes(),
        order: best.lab,
    };
    Canonization {
        form,
        graph,
        generators: search.autos,
        orbits,
    }
}

struct Leaf {
    rows: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    twin: Vec<usize>,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let twin = twin_classes(g);
        // twin transpositions are automorphisms the search never visits
        let autos = (0..g.order())
            .filter(|&v| twin[v] != v)
            .map(|v| {
                let mut a: Vec<usize> = (0..g.order()).collect();
                a.swap(v, twin[v]);
                a
            })
            .collect();
        Search {
            g,
            twin,
            first: None,
            first_path: Vec::new(),
            best: None,
            autos,
        }
    }

    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn explore(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let depth = prefix.len();
        let target = match cells.iter().position(|c| c.count_ones() > 1) {
            None => return self.leaf(&cells, prefix),
            Some(i) => i,
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if tried.iter().any(|&u| self.twin[u] == self.twin[v]) {
                continue;
            }
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            let jump = self.explore(child, prefix);
            prefix.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let fixing: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(n);
        for a in fixing {
            for (x, &y) in a.iter().enumerate() {
                uf.union(x, y);
            }
        }
        let rv = uf.find(v);
        tried.iter().any(|&u| uf.find(u) == rv)
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows = self.g.permuted(&lab).rows().to_vec();
        let Some(first) = &self.first else {
            self.first = Some(Leaf { rows: rows.clone(), lab: lab.clone() });
            self.first_path = prefix.to_vec();
            self.best = Some(Leaf { rows, lab });
            return None;
        };
        if rows == first.rows {
            let auto = compose_auto(&first.lab, &lab);
            self.push_auto(auto);
            let common = prefix
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("best set with first");
        match rows.cmp(&best.rows) {
            Ordering::Equal => {
                let auto = compose_auto(&best.lab, &lab);
                self.push_auto(auto);
            }
            Ordering::Greater => self.best = Some(Leaf { rows, lab }),
            Ordering::Less => {}
        }
        None
    }

    fn push_auto(&mut self, auto: Vec<usize>) {
        if auto.iter().enumerate().any(|(i, &j)| i != j) && !self.autos.contains(&auto) {
            self.autos.push(auto);
        }
    }
}

/// Automorphism mapping `from[i]` to `to[i]`.
fn compose_auto(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut a = vec![0; from.len()];
    for (&f, &t) in from.iter().zip(to) {
        a[f] = t;
    }
    a
}

/// Label-invariant refinement to an equitable ordered partition.
///
/// Every vertex is keyed by its neighbour counts into each current cell;
/// cells split by key in ascending key order until nothing changes.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let k = cells.len();
        let mut next: Vec<u64> = Vec::with_capacity(k);
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = bits(cell)
                .map(|v| {
                    let row = g.neighbors(v);
                    let key = cells.iter().map(|&c| (row & c).count_ones() as u8).collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut cur = 0u64;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(cur);
                    cur = 0;
                }
                cur |= bit(keyed[i].1);
            }
            next.push(cur);
        }
        let done = next.len() == k;
        *cells = next;
        if done {
            return;
        }
    }
}

/// Class ids where `u`, `v` share a class iff swapping them is an automorphism
/// (same neighbourhood outside `{u, v}`).
pub(crate) fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut class = vec![usize::MAX; n];
    for u in 0..n {
        if class[u] != usize::MAX {
            continue;
        }
        class[u] = u;
        for v in u + 1..n {
            if class[v] == usize::MAX
                && g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u)
            {
                class[v] = u;
            }
        }
    }
    class
}

pub(crate) fn orbits_of(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for a in gens {
        for (x, &y) in a.iter().enumerate() {
            uf.union(x, y);
        }
    }
    (0..n).map(|v| uf.min_of(v)).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn min_of(&mut self, x: usize) -> usize {
        self.find(x)
    }
}
