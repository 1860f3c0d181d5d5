//! Exact scalar invariants: clique number, chromatic number, covering
//! number and independent covering order.

use crate::bits::{bit, bits};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximum clique, as a vertex mask.
pub fn max_clique(g: &Graph) -> u64 {
    let mut best = 0u64;
    expand_clique(g, 0, g.vertices(), &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).count_ones() as usize
}

/// Branch and bound with a greedy colouring bound on the candidate set.
fn expand_clique(g: &Graph, clique: u64, mut cand: u64, best: &mut u64) {
    if cand == 0 {
        if clique.count_ones() > best.count_ones() {
            *best = clique;
        }
        return;
    }
    let (order, colors) = greedy_color_order(g, cand);
    let size = clique.count_ones() as usize;
    for i in (0..order.len()).rev() {
        if size + colors[i] <= best.count_ones() as usize {
            return;
        }
        let v = order[i];
        expand_clique(g, clique | bit(v), cand & g.neighbors(v), best);
        cand &= !bit(v);
    }
}

/// Vertices of `cand` in colour-class order with the running colour count.
fn greedy_color_order(g: &Graph, cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut left = cand;
    let mut color = 0;
    while left != 0 {
        color += 1;
        let mut avail = left;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !g.neighbors(v);
            left &= !bit(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

/// Exact chromatic number (DSATUR branch and bound seeded with a maximum clique).
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    if g.is_bipartite() {
        return 2;
    }
    let clique = max_clique(g);
    let lower = clique.count_ones() as usize;
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<u64> = Vec::new();
    for v in bits(clique) {
        color[v] = classes.len();
        classes.push(bit(v));
    }
    let mut best = dsatur_greedy(g, &color, &classes);
    if best == lower {
        return best;
    }
    dsatur_bb(g, &mut color, &mut classes, lower, &mut best);
    best
}

fn saturation(g: &Graph, v: usize, classes: &[u64]) -> usize {
    classes.iter().filter(|&&c| c & g.neighbors(v) != 0).count()
}

fn pick_dsatur(g: &Graph, color: &[usize], classes: &[u64]) -> Option<usize> {
    let uncolored = (0..g.order()).filter(|&v| color[v] == usize::MAX);
    uncolored.max_by(|&a, &b| {
        let key = |v: usize| (saturation(g, v, classes), g.degree(v));
        key(a).cmp(&key(b)).then(b.cmp(&a))
    })
}

fn dsatur_greedy(g: &Graph, color: &[usize], classes: &[u64]) -> usize {
    let mut color = color.to_vec();
    let mut classes = classes.to_vec();
    while let Some(v) = pick_dsatur(g, &color, &classes) {
        let c = classes
            .iter()
            .position(|&cl| cl & g.neighbors(v) == 0)
            .unwrap_or_else(|| {
                classes.push(0);
                classes.len() - 1
            });
        classes[c] |= bit(v);
        color[v] = c;
    }
    classes.len()
}

fn dsatur_bb(
    g: &Graph,
    color: &mut Vec<usize>,
    classes: &mut Vec<u64>,
    lower: usize,
    best: &mut usize,
) -> bool {
    if classes.len() >= *best {
        return false;
    }
    let Some(v) = pick_dsatur(g, color, classes) else {
        *best = classes.len();
        return *best == lower;
    };
    for c in 0..classes.len() {
        if classes[c] & g.neighbors(v) != 0 {
            continue;
        }
        classes[c] |= bit(v);
        color[v] = c;
        let done = dsatur_bb(g, color, classes, lower, best);
        classes[c] &= !bit(v);
        color[v] = usize::MAX;
        if done {
            return true;
        }
    }
    if classes.len() + 1 < *best {
        classes.push(bit(v));
        color[v] = classes.len() - 1;
        let done = dsatur_bb(g, color, classes, lower, best);
        classes.pop();
        color[v] = usize::MAX;
        if done {
            return true;
        }
    }
    false
}

/// Maximum independent set size.
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Minimum vertex cover size (covering number).
pub fn covering_number(g: &Graph) -> usize {
    g.order() - independence_number(g)
}

/// Minimum order of an independent covering of a bipartite graph.
///
/// In a connected bipartite graph an independent covering must be one whole
/// colour class, so the answer sums the smaller class of every component
/// that has an edge.
pub fn independent_covering_order(g: &Graph) -> Result<usize> {
    let side = g.bipartition().ok_or(Error::NotBipartite)?;
    Ok(g.components()
        .into_iter()
        .filter(|&c| c.count_ones() > 1)
        .map(|c| {
            let a = (c & side).count_ones();
            let b = (c & !side).count_ones();
            a.min(b) as usize
        })
        .sum())
}
