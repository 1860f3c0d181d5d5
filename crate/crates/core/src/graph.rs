//! Dense simple graphs on at most 64 vertices.
//!
//! Row `i` of the adjacency matrix is a `u64` whose bit `j` is set iff `ij`
//! is an edge. Rows are kept symmetric, loop-free and clean above `n`.

use std::fmt;

use crate::bits::{bit, bits, low_mask};
use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating every representation invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        let mask = low_mask(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 || r & bit(i) != 0 {
                return Err(Error::InvalidParameter(format!("row {i} has stray bits")));
            }
            for j in bits(r) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::InvalidParameter(format!("row {i} is not symmetric")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertices(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Adds edge `uv`. Panics on out-of-range vertices or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge {u}-{v}");
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Adds a fresh isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.n == MAX_ORDER {
            return Err(Error::TooManyVertices(MAX_ORDER + 1));
        }
        self.adj.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    /// Subgraph induced by `s`; result vertices follow ascending order of `s`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in s {
            self.check_vertex(v)?;
            mask |= bit(v);
        }
        Ok(self.induced(mask))
    }

    /// Subgraph induced by the vertex mask (ascending order).
    pub fn induced(&self, mask: u64) -> Graph {
        let lab: Vec<usize> = bits(mask & self.vertices()).collect();
        self.permuted(&lab)
    }

    /// Graph whose vertex `i` is the old vertex `lab[i]`. `lab` may select a
    /// subset of the vertices; the result is then the induced subgraph.
    pub fn permuted(&self, lab: &[usize]) -> Graph {
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let adj = lab
            .iter()
            .map(|&v| {
                bits(self.adj[v])
                    .filter(|&w| pos[w] != usize::MAX)
                    .fold(0u64, |r, w| r | bit(pos[w]))
            })
            .collect();
        Graph { n: lab.len(), adj }
    }

    /// Relabels by `perm`, where old vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let mut lab = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            lab[p] = v;
        }
        self.permuted(&lab)
    }

    pub fn without_vertices(&self, mask: u64) -> Graph {
        self.induced(self.vertices() & !mask)
    }

    /// Disjoint union, operands laid out left to right.
    pub fn disjoint_union(parts: &[&Graph]) -> Result<Graph> {
        let total: usize = parts.iter().map(|g| g.n).sum();
        let mut out = Graph::new(total)?;
        let mut off = 0;
        for g in parts {
            for v in 0..g.n {
                out.adj[off + v] = g.adj[v] << off;
            }
            off += g.n;
        }
        Ok(out)
    }

    /// Join: disjoint union plus every edge between different operands.
    pub fn join(parts: &[&Graph]) -> Result<Graph> {
        let mut out = Graph::disjoint_union(parts)?;
        let mut off = 0;
        let all = out.vertices();
        for g in parts {
            let own = low_mask(g.n) << off;
            for v in off..off + g.n {
                out.adj[v] |= all & !own;
            }
            off += g.n;
        }
        Ok(out)
    }

    /// Connected components as vertex masks, ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let comp = self.component_of(v, self.vertices());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Components of the subgraph induced by `within`, ordered by least vertex.
    pub fn induced_components(&self, within: u64) -> Vec<u64> {
        let mut left = within & self.vertices();
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.component_of(left.trailing_zeros() as usize, within);
            left &= !comp;
            out.push(comp);
        }
        out
    }

    /// Component of `v` inside the subgraph induced by `within`.
    pub fn component_of(&self, v: usize, within: u64) -> u64 {
        let mut comp = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    /// Whether `mask` induces a connected subgraph (the empty set does not).
    pub fn is_connected_set(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        self.component_of(mask.trailing_zeros() as usize, mask) == mask
    }

    /// One side of a proper 2-colouring, or `None` for non-bipartite graphs.
    /// The least vertex of every component is placed on the returned side.
    pub fn bipartition(&self) -> Option<u64> {
        let mut side_a = 0u64;
        let mut seen = 0u64;
        for v in 0..self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let mut layer = bit(v);
            let mut on_a = true;
            seen |= layer;
            while layer != 0 {
                if on_a {
                    side_a |= layer;
                }
                let mut next = 0u64;
                for u in bits(layer) {
                    next |= self.adj[u];
                }
                next &= !seen;
                seen |= next;
                layer = next;
                on_a = !on_a;
            }
        }
        let side_b = self.vertices() & !side_a;
        let ok = (0..self.n).all(|v| {
            let same = if side_a & bit(v) != 0 { side_a } else { side_b };
            self.adj[v] & same == 0
        });
        ok.then_some(side_a)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Edges with both ends in `a` plus edges between `a` and the rest.
    pub fn edges_touching(&self, a: u64) -> usize {
        let inside: usize = bits(a).map(|v| (self.adj[v] & a).count_ones() as usize).sum();
        let across: usize = bits(a).map(|v| (self.adj[v] & !a).count_ones() as usize).sum();
        inside / 2 + across
    }

    /// Edges between disjoint vertex sets `a` and `b`.
    pub fn edges_between(&self, a: u64, b: u64) -> usize {
        bits(a).map(|v| (self.adj[v] & b).count_ones() as usize).sum()
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::write_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::new(3).unwrap());
        assert_eq!(Graph::new(0).unwrap().complement(), Graph::new(0).unwrap());
    }

    #[test]
    fn complement_of_c5_is_c5() {
        // complement edges of 0-1-2-3-4-0 are 02, 03, 13, 14, 24,
        // i.e. the cycle 0-2-4-1-3-0
        let c5 = cycle(5);
        let co = c5.complement();
        assert_eq!(co.edges(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        let relabel = co.permuted(&[0, 2, 4, 1, 3]);
        assert_eq!(relabel, c5);
    }

    #[test]
    fn induced_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.induced_subgraph(&[4, 0, 2]).unwrap(), Graph::complete(3).unwrap());
        let c6 = cycle(6);
        assert_eq!(c6.induced_subgraph(&[0, 2, 4]).unwrap().edge_count(), 0);
        assert_eq!(
            c6.induced_subgraph(&[0, 9]),
            Err(Error::VertexOutOfRange { vertex: 9, order: 6 })
        );
    }

    #[test]
    fn turan_6_3_part_plus_vertex_is_cherry() {
        // parts {0,1}, {2,3}, {4,5}
        let mut t = Graph::new(6).unwrap();
        for u in 0..6 {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    t.add_edge(u, v);
                }
            }
        }
        let h = t.induced_subgraph(&[0, 1, 2]).unwrap();
        // vertex 2 (index 2) adjacent to both part members, which are independent
        assert_eq!(h.edges(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn join_and_union_layout() {
        let k2 = Graph::complete(2).unwrap();
        let e3 = Graph::new(3).unwrap();
        let j = Graph::join(&[&k2, &e3]).unwrap();
        assert_eq!(j.order(), 5);
        assert_eq!(j.edge_count(), 1 + 6);
        let u = Graph::disjoint_union(&[&k2, &k2]).unwrap();
        assert_eq!(u.edges(), vec![(0, 1), (2, 3)]);
        let big = Graph::new(40).unwrap();
        assert_eq!(
            Graph::disjoint_union(&[&big, &big]),
            Err(Error::TooManyVertices(80))
        );
    }

    #[test]
    fn bipartition_and_components() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b11, 0b100, 0b11000]);
        assert!(!g.is_connected());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }
}
