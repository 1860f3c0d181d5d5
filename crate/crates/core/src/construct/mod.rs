//! Graph constructions with fixed vertex layouts.
//!
//! Every builder documents where its vertices land so callers can address
//! parts by index. Turán parts are contiguous, larger parts first.

mod expr;
pub mod named;

pub use expr::{eval, parse_expr, Built, Expr};

use crate::bits::{bit, bits, low_mask};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

/// Path on `n` vertices, `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph> {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &e)
}

/// Cycle `0 - 1 - ... - n-1 - 0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &e)
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Result<Graph> {
    Graph::new(n)
}

/// Part sizes of `T(n, r)`: `n mod r` parts of size `ceil(n/r)` first.
/// `r = 0` gives no parts.
pub fn turan_part_sizes(n: usize, r: usize) -> Vec<usize> {
    if r == 0 {
        return Vec::new();
    }
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// Complete multipartite graph with contiguous parts in the given order.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    let parts = sizes.iter().map(|&s| Graph::new(s)).collect::<Result<Vec<_>>>()?;
    Graph::join(&parts.iter().collect::<Vec<_>>())
}

/// Turán graph `T(n, r)`. `T(n, 1)` is edgeless and `T(n, 0)` has no vertices.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    complete_multipartite(&turan_part_sizes(n, r))
}

/// Vertex masks of consecutive parts with the given sizes, starting at `offset`.
pub fn part_masks(sizes: &[usize], offset: usize) -> Vec<u64> {
    let mut off = offset;
    sizes
        .iter()
        .map(|&s| {
            let m = low_mask(s) << off;
            off += s;
            m
        })
        .collect()
}

pub fn edge_count_turan(n: usize, r: usize) -> usize {
    let sizes = turan_part_sizes(n, r);
    let sq: usize = sizes.iter().map(|s| s * s).sum();
    (n * n - sq) / 2
}

/// Replaces every edge by a clique of order `p + 1`.
///
/// The original vertices keep their labels; the `p - 1` fresh vertices of each
/// edge follow, edges taken in lexicographic order.
pub fn blow_up(g: &Graph, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(invalid("blow-up needs p >= 1"));
    }
    let edges = g.edges();
    let n = edges
        .len()
        .checked_mul(p - 1)
        .and_then(|x| x.checked_add(g.order()))
        .unwrap_or(usize::MAX);
    check_order(n)?;
    let mut out = Graph::new(n)?;
    let mut next = g.order();
    for (u, v) in edges {
        let clique: Vec<usize> = [u, v].into_iter().chain(next..next + p - 1).collect();
        next += p - 1;
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                out.add_edge(a, b);
            }
        }
    }
    Ok(out)
}

/// Replaces edge `i` (lexicographic order) by an odd cycle of length `lengths[i]`.
///
/// The edge itself stays and the `lengths[i] - 2` fresh vertices form the
/// rest of the cycle, `u - f1 - f2 - ... - v`. A single length applies to
/// every edge.
pub fn odd_balloon(g: &Graph, lengths: &[usize]) -> Result<Graph> {
    let edges = g.edges();
    let lens: Vec<usize> = match lengths {
        [l] => vec![*l; edges.len()],
        _ if lengths.len() == edges.len() => lengths.to_vec(),
        _ => {
            return Err(invalid(format!(
                "odd ballooning needs 1 or {} lengths, got {}",
                edges.len(),
                lengths.len()
            )))
        }
    };
    if let Some(&bad) = lens.iter().find(|&&l| l < 3 || l % 2 == 0) {
        return Err(invalid(format!("balloon length {bad} is not an odd integer >= 3")));
    }
    let n = lens.iter().fold(g.order(), |acc, l| acc.saturating_add(l - 2));
    check_order(n)?;
    let mut out = Graph::new(n)?;
    let mut next = g.order();
    for (&(u, v), &len) in edges.iter().zip(&lens) {
        out.add_edge(u, v);
        let fresh: Vec<usize> = (next..next + len - 2).collect();
        next += len - 2;
        let mut prev = u;
        for &f in &fresh {
            out.add_edge(prev, f);
            prev = f;
        }
        out.add_edge(prev, v);
    }
    Ok(out)
}

/// Sides of a bipartite graph with `|A| <= |B|`.
///
/// Uses [`Graph::bipartition`] and swaps the two sides if needed.
pub fn bipartite_sides(f: &Graph) -> Result<(u64, u64)> {
    let a = f.bipartition().ok_or(Error::NotBipartite)?;
    let b = f.vertices() & !a;
    Ok(if a.count_ones() <= b.count_ones() { (a, b) } else { (b, a) })
}

/// Whether an odd ballooning is good: every edge given length 3 must touch
/// a vertex of `B` of degree one. Lengths are per edge in lexicographic order
/// or a single shared value.
pub fn validate_good_odd_ballooning(f: &Graph, lengths: &[usize]) -> Result<bool> {
    let (_, b) = bipartite_sides(f)?;
    validate_good_odd_ballooning_with_side(f, b, lengths)
}

/// As [`validate_good_odd_ballooning`] with the larger side `B` given explicitly.
pub fn validate_good_odd_ballooning_with_side(f: &Graph, b: u64, lengths: &[usize]) -> Result<bool> {
    let a = f.vertices() & !b;
    if b & !f.vertices() != 0 || a.count_ones() > b.count_ones() {
        return Err(invalid("B must be a vertex set at least as large as its complement"));
    }
    if bits(a).any(|v| f.neighbors(v) & a != 0) || bits(b).any(|v| f.neighbors(v) & b != 0) {
        return Err(Error::NotBipartite);
    }
    let edges = f.edges();
    let lens = match lengths {
        [l] => vec![*l; edges.len()],
        _ if lengths.len() == edges.len() => lengths.to_vec(),
        _ => return Err(invalid("length list does not match the edge count")),
    };
    let leaf_of_b = |v: usize| b & bit(v) != 0 && f.degree(v) == 1;
    Ok(edges
        .iter()
        .zip(&lens)
        .all(|(&(u, v), &l)| l != 3 || leaf_of_b(u) || leaf_of_b(v)))
}

/// Adds a (near) perfect matching inside each part: consecutive vertices of
/// the part are paired, an odd part leaves its last vertex unmatched.
pub fn add_part_matchings(g: &Graph, parts: &[u64]) -> Graph {
    let mut out = g.clone();
    for &part in parts {
        let vs: Vec<usize> = bits(part).collect();
        for pair in vs.chunks_exact(2) {
            if !out.has_edge(pair[0], pair[1]) {
                out.add_edge(pair[0], pair[1]);
            }
        }
    }
    out
}

/// Places `pattern` on the lowest-indexed vertices of `part`, adding its edges.
pub fn embed_in_part(g: &Graph, part: u64, pattern: &Graph) -> Result<Graph> {
    let vs: Vec<usize> = bits(part).collect();
    if pattern.order() > vs.len() {
        return Err(invalid(format!(
            "pattern on {} vertices does not fit in a part of size {}",
            pattern.order(),
            vs.len()
        )));
    }
    let mut out = g.clone();
    for (a, b) in pattern.edges() {
        if !out.has_edge(vs[a], vs[b]) {
            out.add_edge(vs[a], vs[b]);
        }
    }
    Ok(out)
}

/// `K^+_{n_1,...,n_r}`: complete multipartite plus a (near) perfect matching
/// in every part. Part sizes may differ by at most 2.
pub fn k_plus(sizes: &[usize]) -> Result<Graph> {
    if let (Some(lo), Some(hi)) = (sizes.iter().min(), sizes.iter().max()) {
        if hi - lo > 2 {
            return Err(invalid(format!("K+ part sizes {sizes:?} differ by more than 2")));
        }
    }
    let g = complete_multipartite(sizes)?;
    Ok(add_part_matchings(&g, &part_masks(sizes, 0)))
}

/// `G_{n,r}`: `T(n, r)` with a (near) perfect matching in each part.
pub fn g_nr(n: usize, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(invalid("G_{n,r} needs r >= 1"));
    }
    k_plus(&turan_part_sizes(n, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn turan_layout() {
        assert_eq!(turan_part_sizes(7, 3), vec![3, 2, 2]);
        let t = turan(6, 3).unwrap();
        assert_eq!(t.edge_count(), 12);
        assert!(!t.has_edge(0, 1) && t.has_edge(1, 2));
        assert_eq!(turan(5, 1).unwrap(), empty(5).unwrap());
        assert_eq!(turan(0, 0).unwrap().order(), 0);
        assert_eq!(turan(4, 0).unwrap().order(), 0);
        assert_eq!(edge_count_turan(10, 3), turan(10, 3).unwrap().edge_count());
    }

    #[test]
    fn blow_up_examples() {
        let k3 = complete(3).unwrap();
        let b = blow_up(&k3, 2).unwrap();
        assert_eq!((b.order(), b.edge_count()), (6, 9));
        let p3 = path(3).unwrap();
        let b = blow_up(&p3, 2).unwrap();
        assert_eq!((b.order(), b.edge_count()), (5, 6));
        assert_eq!(blow_up(&cycle(5).unwrap(), 1).unwrap(), cycle(5).unwrap());
        // fresh vertices follow edges lexicographically: edge (0,1) gets 3
        assert!(b.has_edge(0, 3) && b.has_edge(1, 3) && b.has_edge(1, 4) && b.has_edge(2, 4));
    }

    #[test]
    fn odd_balloon_examples() {
        let k3 = complete(3).unwrap();
        let a = odd_balloon(&k3, &[3]).unwrap();
        assert!(is_isomorphic(&a, &blow_up(&k3, 2).unwrap()));
        let c5 = odd_balloon(&complete(2).unwrap(), &[5]).unwrap();
        assert!(is_isomorphic(&c5, &cycle(5).unwrap()));
        let f33 = odd_balloon(&complete_multipartite(&[3, 3]).unwrap(), &[5]).unwrap();
        assert_eq!((f33.order(), f33.edge_count()), (33, 45));
        assert!(odd_balloon(&k3, &[4]).is_err());
        assert!(odd_balloon(&k3, &[1]).is_err());
        assert!(odd_balloon(&k3, &[3, 5]).is_err());
    }

    #[test]
    fn good_ballooning() {
        let star = complete_multipartite(&[1, 3]).unwrap();
        assert!(validate_good_odd_ballooning(&star, &[3]).unwrap());
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        assert!(!validate_good_odd_ballooning(&k22, &[3, 5, 5, 5]).unwrap());
        // P_4 = 0-1-2-3 with A = {0,2}, B = {1,3}; the only B-leaf is 3
        let p4 = path(4).unwrap();
        assert!(validate_good_odd_ballooning(&p4, &[5, 5, 3]).unwrap());
        assert!(!validate_good_odd_ballooning(&p4, &[3, 5, 5]).unwrap());
        assert_eq!(
            validate_good_odd_ballooning(&complete(3).unwrap(), &[3]),
            Err(Error::NotBipartite)
        );
    }

    #[test]
    fn k_plus_examples() {
        assert_eq!(k_plus(&[2, 2]).unwrap(), complete(4).unwrap());
        assert_eq!(k_plus(&[3, 5]).unwrap().edge_count(), 18);
        assert_eq!(g_nr(8, 2).unwrap().edge_count(), 20);
        assert!(k_plus(&[1, 4]).is_err());
    }

    #[test]
    fn embedding_uses_lowest_vertices() {
        let t = turan(8, 2).unwrap();
        let g = embed_in_part(&t, part_masks(&[4, 4], 0)[1], &path(3).unwrap()).unwrap();
        assert!(g.has_edge(4, 5) && g.has_edge(5, 6) && !g.has_edge(6, 7));
        assert!(embed_in_part(&t, 0b11, &path(3).unwrap()).is_err());
    }

    #[test]
    fn vertex_cap() {
        assert_eq!(blow_up(&complete(8).unwrap(), 3).unwrap().order(), 64);
        assert_eq!(blow_up(&complete(8).unwrap(), 4), Err(Error::TooManyVertices(92)));
        assert!(turan(65, 2).is_err());
    }
}
