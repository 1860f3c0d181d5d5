//! Isomorph-free generation by canonical augmentation, plus a labelled
//! brute-force engine used as an independent check.
//!
//! A graph on `m + 1` vertices is accepted as a child of its parent on `m`
//! vertices iff the added vertex lies in the automorphism orbit of the
//! canonical deletion vertex: the minimum-degree vertex that comes last in
//! the canonical order. Children of one parent are deduplicated by
//! certificate; children of different parents are never isomorphic.

use std::collections::HashSet;

use crate::bits::{bit, bits, low_mask};
use crate::canon::canonize;
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// All one-vertex augmentations of `g` accepted by the canonical deletion
/// rule, in increasing order of the new vertex's neighbourhood mask.
///
/// `keep` sees each candidate child before it is canonised and can reject
/// it (and with it the whole subtree below). The new vertex is `g.order()`.
pub fn children(g: &Graph, mut keep: impl FnMut(&Graph) -> bool) -> Vec<Graph> {
    let m = g.order();
    let degs = g.degrees();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for s in 0..=low_mask(m) {
        let d = s.count_ones() as usize;
        // the new vertex must have minimum degree in the child
        if (0..m).any(|u| degs[u] + usize::from(s & bit(u) != 0) < d) {
            continue;
        }
        let mut child = g.clone();
        child.add_vertex().expect("generator stays below 64 vertices");
        for u in bits(s) {
            child.add_edge(u, m);
        }
        if !keep(&child) {
            continue;
        }
        let c = canonize(&child);
        let deletion = *c
            .form
            .order
            .iter()
            .rev()
            .find(|&&v| child.degree(v) == d)
            .expect("the new vertex has minimum degree");
        if c.orbits[deletion] != c.orbits[m] {
            continue;
        }
        if seen.insert(c.form.cert) {
            out.push(child);
        }
        if m == 0 {
            break;
        }
    }
    out
}

/// One representative of every isomorphism class on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(0).expect("empty graph")];
    for _ in 0..n {
        level = level.iter().flat_map(|g| children(g, |_| true)).collect();
    }
    level
}

/// Number of isomorphism classes on `n` vertices by canonical augmentation.
pub fn count_classes(n: usize) -> usize {
    all_graphs(n).len()
}

/// Largest order the labelled engine accepts.
pub const LABELED_MAX: usize = 6;

/// Upper-triangle code of a labelled graph, pair `(i, j)` with `i < j`
/// at bit `j(j-1)/2 + i`.
fn code(rows: &[u64], lab: &[usize]) -> u32 {
    let n = lab.len();
    let mut c = 0u32;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if rows[lab[i]] & bit(lab[j]) != 0 {
                c |= 1 << k;
            }
            k += 1;
        }
    }
    c
}

fn decode(n: usize, c: u32) -> Graph {
    let mut g = Graph::new(n).expect("small order");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if c >> k & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    permute(&mut p, 0, &mut out);
    out
}

fn permute(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

/// Labelled brute force: every graph on `n <= 6` labelled vertices, each
/// represented by its least code over all `n!` relabellings. Returns the
/// distinct representatives in increasing code order, optionally restricted
/// by `keep`.
pub fn labeled_classes(n: usize, mut keep: impl FnMut(&Graph) -> bool) -> Result<Vec<Graph>> {
    if n > LABELED_MAX {
        return Err(invalid(format!("labelled brute force supports n <= {LABELED_MAX}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let perms = permutations(n);
    let mut done = vec![false; 1 << pairs];
    let mut reps = Vec::new();
    for c in 0..(1u32 << pairs) {
        if done[c as usize] {
            continue;
        }
        let g = decode(n, c);
        let mut least = c;
        for p in &perms {
            let d = code(g.rows(), p);
            done[d as usize] = true;
            least = least.min(d);
        }
        // c is the first code of its class, hence the least
        debug_assert_eq!(least, c);
        if keep(&g) {
            reps.push(g);
        }
    }
    Ok(reps)
}

/// Containment by trying every injective map; only for tiny graphs.
pub fn contains_by_brute_force(host: &Graph, pattern: &Graph) -> bool {
    let (hn, pn) = (host.order(), pattern.order());
    if pn > hn {
        return false;
    }
    let edges = pattern.edges();
    let mut map = vec![0usize; pn];
    fn go(k: usize, used: u64, map: &mut [usize], host: &Graph, edges: &[(usize, usize)]) -> bool {
        if k == map.len() {
            return edges.iter().all(|&(a, b)| host.has_edge(map[a], map[b]));
        }
        for h in 0..host.order() {
            if used & bit(h) != 0 {
                continue;
            }
            map[k] = h;
            let ok = edges
                .iter()
                .filter(|&&(a, b)| a.max(b) == k)
                .all(|&(a, b)| host.has_edge(map[a], map[b]));
            if ok && go(k + 1, used | bit(h), map, host, edges) {
                return true;
            }
        }
        false
    }
    go(0, 0, &mut map, host, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn augmentation_counts() {
        let counts: Vec<usize> = (0..=8).map(count_classes).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044, 12346]);
    }

    #[test]
    fn labelled_counts() {
        let counts: Vec<usize> =
            (0..=6).map(|n| labeled_classes(n, |_| true).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert!(labeled_classes(7, |_| true).is_err());
    }

    #[test]
    fn engines_agree_on_classes() {
        for n in 0..=6 {
            let mut a: Vec<String> = all_graphs(n).iter().map(crate::canon::certificate).collect();
            let mut b: Vec<String> = labeled_classes(n, |_| true)
                .unwrap()
                .iter()
                .map(crate::canon::certificate)
                .collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "n = {n}");
        }
    }

    #[test]
    fn brute_force_containment() {
        let k4 = Graph::complete(4).unwrap();
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(contains_by_brute_force(&k4, &c4));
        assert!(!contains_by_brute_force(&c4, &k4));
    }
}
