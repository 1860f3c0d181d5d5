//! Small-order extremal numbers, the path oracle, the `D` operation on shaped
//! graphs and certificate checks.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{bit, bits, to_vec};
use crate::budget::Budget;
use crate::canon::certificate;
use crate::construct::{complete, empty};
use crate::error::{invalid, Error, Result};
use crate::family::{is_family_free, ForbiddenFamily, Freeness};
use crate::generate::{children, contains_by_brute_force, labeled_classes, LABELED_MAX};
use crate::graph::{Graph, MAX_ORDER};
use crate::subgraph::find_embedding_through;
use crate::symmetry::ShapeCertificate;

/// Largest order [`enumerate_extremal`] accepts.
pub const EXHAUSTIVE_MAX: usize = 10;

/// Frontier size at which the enumeration tree is split across threads.
const SPLIT_AT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Canonical augmentation with pruning.
    Exhaustive,
    /// Every labelled graph, reduced by least code; `n <= 6`.
    LabeledBruteForce,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::LabeledBruteForce => "labeled-bruteforce",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    /// Member graph6 strings joined by `,` unless set by the caller.
    pub family: String,
    pub ex: usize,
    /// Canonical graph6 certificates of the extremal graphs, sorted.
    pub graphs: Vec<String>,
    pub graphs_examined: u64,
    pub method: Method,
}

impl ExtremalReport {
    /// `n ex count`, then one graph6 line per extremal graph.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.n, self.ex, self.graphs.len());
        for g in &self.graphs {
            s.push_str(g);
            s.push('\n');
        }
        s
    }

    /// A single JSON object on one line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

pub fn family_id(fam: &ForbiddenFamily) -> String {
    fam.members().iter().map(Graph::to_graph6).collect::<Vec<_>>().join(",")
}

/// Upper bound on the edges of an order-`n` descendant of a graph with `e`
/// edges on `m` vertices. Every augmentation step adds a vertex of minimum
/// degree, so each step multiplies the edge count by at most `k/(k-2)`.
fn edge_bound(e: usize, m: usize, n: usize) -> usize {
    let trivial = e + (m..n).sum::<usize>();
    if m < 2 {
        return trivial;
    }
    trivial.min(e * n * (n - 1) / (m * (m - 1)))
}

struct Local {
    best: usize,
    leaves: Vec<Graph>,
    examined: u64,
}

impl Local {
    fn offer(&mut self, g: &Graph) {
        let e = g.edge_count();
        if e > self.best || self.leaves.is_empty() {
            self.best = e;
            self.leaves.clear();
        }
        if e == self.best {
            self.leaves.push(g.clone());
        }
    }
}

/// True when `child` stays pattern-free, given that it is pattern-free
/// without its last vertex.
fn free_through(child: &Graph, patterns: &[Graph]) -> bool {
    let v = child.order() - 1;
    patterns
        .iter()
        .all(|f| find_embedding_through(child, f, v, Budget::unlimited()).is_absent())
}

fn expand(g: &Graph, patterns: &[Graph], n: usize, best: Option<usize>) -> Vec<Graph> {
    let mut kids = children(g, |c| {
        best.is_none_or(|b| edge_bound(c.edge_count(), c.order(), n) >= b) && free_through(c, patterns)
    });
    kids.sort_by_key(|c| std::cmp::Reverse(c.edge_count()));
    kids
}

fn dfs(g: &Graph, patterns: &[Graph], n: usize, local: &mut Local) {
    if g.order() == n {
        local.offer(g);
        return;
    }
    let best = (!local.leaves.is_empty()).then_some(local.best);
    for c in expand(g, patterns, n, best) {
        local.examined += 1;
        dfs(&c, patterns, n, local);
    }
}

/// `ex(n, F)` and one representative of every extremal class.
///
/// The top of the canonical augmentation tree is expanded breadth-first until
/// it has enough nodes, then each subtree is searched depth-first on its own
/// thread with its own incumbent, so the statistics do not depend on
/// scheduling.
pub fn enumerate_extremal(n: usize, fam: &ForbiddenFamily) -> Result<ExtremalReport> {
    enumerate_extremal_with(n, fam, Method::Exhaustive)
}

pub fn enumerate_extremal_with(n: usize, fam: &ForbiddenFamily, method: Method) -> Result<ExtremalReport> {
    let (leaves, examined) = match method {
        Method::Exhaustive => exhaustive(n, fam.members())?,
        Method::LabeledBruteForce => brute_force(n, fam.members())?,
    };
    let ex = leaves.iter().map(Graph::edge_count).max().unwrap_or(0);
    let graphs: BTreeSet<String> =
        leaves.iter().filter(|g| g.edge_count() == ex).map(certificate).collect();
    Ok(ExtremalReport {
        n,
        family: family_id(fam),
        ex,
        graphs: graphs.into_iter().collect(),
        graphs_examined: examined,
        method,
    })
}

fn exhaustive(n: usize, patterns: &[Graph]) -> Result<(Vec<Graph>, u64)> {
    if n > EXHAUSTIVE_MAX {
        return Err(invalid(format!("exhaustive search supports n <= {EXHAUSTIVE_MAX}, got {n}")));
    }
    let mut frontier = vec![Graph::new(0)?];
    let mut examined = 0u64;
    let mut level = 0;
    while level < n && frontier.len() < SPLIT_AT {
        frontier = frontier.iter().flat_map(|g| expand(g, patterns, n, None)).collect();
        examined += frontier.len() as u64;
        level += 1;
    }
    if level == n {
        return Ok((frontier, examined));
    }
    let locals: Vec<Local> = frontier
        .par_iter()
        .map(|g| {
            let mut local = Local { best: 0, leaves: Vec::new(), examined: 0 };
            dfs(g, patterns, n, &mut local);
            local
        })
        .collect();
    let mut leaves = Vec::new();
    for l in locals {
        examined += l.examined;
        leaves.extend(l.leaves);
    }
    Ok((leaves, examined))
}

fn brute_force(n: usize, patterns: &[Graph]) -> Result<(Vec<Graph>, u64)> {
    if n > LABELED_MAX {
        return Err(invalid(format!("labelled brute force supports n <= {LABELED_MAX}, got {n}")));
    }
    let mut examined = 0u64;
    let free = labeled_classes(n, |g| {
        examined += 1;
        patterns.iter().all(|f| !contains_by_brute_force(g, f))
    })?;
    Ok((free, examined))
}

/// Closed-form maximum for `P_l`-free graphs and the graphs attaining it.
#[derive(Clone, Debug)]
pub struct PathExtremal {
    pub n: usize,
    pub l: usize,
    /// `n = (l - 1) t + s` with `0 <= s < l - 1`.
    pub t: usize,
    pub s: usize,
    pub ex: usize,
    /// Pairwise non-isomorphic, in order of construction.
    pub graphs: Vec<Graph>,
}

impl PathExtremal {
    pub fn certificates(&self) -> Vec<String> {
        let mut c: Vec<String> = self.graphs.iter().map(certificate).collect();
        c.sort();
        c
    }
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Extremal number and extremal graphs for the path on `l` vertices.
///
/// The bound is `t C(l-1, 2) + C(s, 2)`, attained by `t K_{l-1} + K_s` and,
/// for even `l` and `s` in `{l/2 - 1, l/2}`, by
/// `(t - t0) K_{l-1} + (K_{l/2-1} v E_{(l-1) t0 - l/2 + s + 1})` for
/// `1 <= t0 <= t`. For other `s` the second family has fewer edges.
pub fn path_extremal_oracle(n: usize, l: usize) -> Result<PathExtremal> {
    if l < 2 {
        return Err(invalid("path order must be at least 2"));
    }
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices(n));
    }
    let (t, s) = (n / (l - 1), n % (l - 1));
    let ex = t * binom2(l - 1) + binom2(s);
    let clique = complete(l - 1)?;
    let mut graphs = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |g: Graph| {
        if seen.insert(certificate(&g)) {
            graphs.push(g);
        }
    };

    let mut ops: Vec<Graph> = vec![clique.clone(); t];
    ops.push(complete(s)?);
    push(Graph::disjoint_union(&ops.iter().collect::<Vec<_>>())?);

    let a = (l / 2).wrapping_sub(1);
    if l % 2 == 0 && (s == a || s == a + 1) {
        for t0 in 1..=t {
            let star = Graph::join(&[&complete(a)?, &empty((l - 1) * t0 + s - a)?])?;
            let mut ops: Vec<Graph> = vec![clique.clone(); t - t0];
            ops.push(star);
            let g = Graph::disjoint_union(&ops.iter().collect::<Vec<_>>())?;
            debug_assert_eq!(g.edge_count(), ex);
            push(g);
        }
    }
    Ok(PathExtremal { n, l, t, s, ex, graphs })
}

/// Adds a vertex `x_i` to every part `S_i`, adjacent to everything outside
/// `S_i + x_i`. The new vertices are `n, ..., n + r - 1` and join the cores.
///
/// Panics if the edge identity
/// `e(D(H)) = e(H) + (q-1) + m(r-1) + C(r,2)` fails, which would mean the
/// certificate check is broken.
pub fn d_operation(g: &Graph, cert: &ShapeCertificate) -> Result<(Graph, ShapeCertificate)> {
    cert.check(g)?;
    let (m, r) = (g.order(), cert.r());
    if m + r > MAX_ORDER {
        return Err(Error::TooManyVertices(m + r));
    }
    let mut h = g.clone();
    let xs: Vec<usize> = (0..r).map(|_| h.add_vertex()).collect::<Result<_>>()?;
    for (i, part) in cert.parts.iter().enumerate() {
        let inside = part.iter().fold(bit(xs[i]), |acc, &v| acc | bit(v));
        for u in bits(h.vertices() & !inside) {
            if !h.has_edge(u, xs[i]) {
                h.add_edge(u, xs[i]);
            }
        }
    }
    assert_eq!(
        h.edge_count(),
        g.edge_count() + (cert.q() - 1) + m * (r - 1) + binom2(r),
        "edge identity of D"
    );
    let mut next = cert.clone();
    for i in 0..r {
        next.parts[i].push(xs[i]);
        next.cores[i].push(xs[i]);
    }
    Ok((h, next))
}

/// Deletes the highest-indexed core vertex of every part and renumbers the
/// remaining vertices in ascending order. Every core must be nonempty.
///
/// Panics if `e(D^-1(H)) = e(H) - (q-1) - (m-r)(r-1) - C(r,2)` fails.
pub fn d_inverse(g: &Graph, cert: &ShapeCertificate) -> Result<(Graph, ShapeCertificate)> {
    cert.check(g)?;
    let (m, r) = (g.order(), cert.r());
    let mut gone = 0u64;
    for (i, core) in cert.cores.iter().enumerate() {
        let x = *core
            .iter()
            .max()
            .ok_or_else(|| Error::InvalidCertificate(format!("core of part {} is empty", i + 1)))?;
        gone |= bit(x);
    }
    let h = g.without_vertices(gone);
    assert_eq!(
        h.edge_count() + (cert.q() - 1) + (m - r) * (r - 1) + binom2(r),
        g.edge_count(),
        "edge identity of D^-1"
    );
    let keep = to_vec(g.vertices() & !gone);
    let mut pos = vec![usize::MAX; m];
    for (i, &v) in keep.iter().enumerate() {
        pos[v] = i;
    }
    let map = |vs: &[usize]| -> Vec<usize> {
        vs.iter().filter(|&&v| gone & bit(v) == 0).map(|&v| pos[v]).collect()
    };
    let next = ShapeCertificate {
        w: map(&cert.w),
        parts: cert.parts.iter().map(|p| map(p)).collect(),
        cores: cert.cores.iter().map(|c| map(c)).collect(),
    };
    Ok((h, next))
}

/// Result of checking a claimed extremal graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub freeness: Freeness,
    pub edges: usize,
    pub claimed: usize,
    /// Whether `edges` equals `ex(n, F)` from the exhaustive search; only
    /// computed on request and for `n <= 10`.
    pub matches_exhaustive: Option<bool>,
}

impl Verdict {
    pub fn edges_match(&self) -> bool {
        self.edges == self.claimed
    }

    /// `Some(true)` when free with the claimed count, `None` if undecided.
    pub fn holds(&self) -> Option<bool> {
        match self.freeness {
            Freeness::Undecided { .. } => None,
            Freeness::Free => Some(self.edges_match() && self.matches_exhaustive != Some(false)),
            Freeness::Contains { .. } => Some(false),
        }
    }
}

pub fn certify_candidate(
    g: &Graph,
    fam: &ForbiddenFamily,
    claimed: usize,
    budget: Budget,
    compare_exhaustive: bool,
) -> Result<Verdict> {
    let freeness = is_family_free(g, fam, budget);
    let matches_exhaustive = if compare_exhaustive && g.order() <= EXHAUSTIVE_MAX {
        Some(enumerate_extremal(g.order(), fam)?.ex == g.edge_count())
    } else {
        None
    };
    Ok(Verdict { freeness, edges: g.edge_count(), claimed, matches_exhaustive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{edge_count_turan, path, turan};

    fn single(g: Graph) -> ForbiddenFamily {
        ForbiddenFamily::single(g).unwrap()
    }

    #[test]
    fn triangle_free_five() {
        let rep = enumerate_extremal(5, &single(complete(3).unwrap())).unwrap();
        assert_eq!(rep.ex, 6);
        assert_eq!(rep.graphs, vec![certificate(&turan(5, 2).unwrap())]);
        assert_eq!(rep.to_text().lines().next(), Some("5 6 1"));
    }

    #[test]
    fn p4_free_six() {
        let rep = enumerate_extremal(6, &single(path(4).unwrap())).unwrap();
        let two_k3 = Graph::disjoint_union(&[&complete(3).unwrap(), &complete(3).unwrap()]).unwrap();
        assert_eq!((rep.ex, rep.graphs.clone()), (6, vec![certificate(&two_k3)]));
    }

    #[test]
    fn engines_agree() {
        for pat in [complete(3).unwrap(), path(4).unwrap(), crate::construct::cycle(4).unwrap()] {
            let fam = single(pat);
            for n in 0..=6 {
                let a = enumerate_extremal(n, &fam).unwrap();
                let b = enumerate_extremal_with(n, &fam, Method::LabeledBruteForce).unwrap();
                assert_eq!((a.ex, &a.graphs), (b.ex, &b.graphs), "n = {n}");
            }
        }
    }

    #[test]
    fn turan_small() {
        for r in 2..=3 {
            let fam = single(complete(r + 1).unwrap());
            for n in r + 1..=8 {
                let rep = enumerate_extremal(n, &fam).unwrap();
                assert_eq!(rep.ex, edge_count_turan(n, r));
                assert_eq!(rep.graphs, vec![certificate(&turan(n, r).unwrap())]);
            }
        }
    }

    #[test]
    fn path_oracle_matches_search() {
        for l in 3..=6 {
            let fam = single(path(l).unwrap());
            for n in l..=8 {
                let oracle = path_extremal_oracle(n, l).unwrap();
                let rep = enumerate_extremal(n, &fam).unwrap();
                assert_eq!(oracle.ex, rep.ex, "n = {n}, l = {l}");
                assert_eq!(oracle.certificates(), rep.graphs, "n = {n}, l = {l}");
            }
        }
    }

    #[test]
    fn path_oracle_values() {
        assert_eq!(path_extremal_oracle(7, 4).unwrap().ex, 6);
        let p3 = path_extremal_oracle(6, 3).unwrap();
        assert_eq!(p3.ex, 3);
        assert_eq!(p3.graphs.len(), 1);
        assert_eq!(p3.graphs[0].edge_count(), 3);
    }

    #[test]
    fn too_large() {
        assert!(enumerate_extremal(11, &single(complete(3).unwrap())).is_err());
    }

    #[test]
    fn d_round_trip() {
        // E_1 * T(10, 2): W = {0}, parts {1..5}, {6..10}
        let h = Graph::join(&[&empty(1).unwrap(), &turan(10, 2).unwrap()]).unwrap();
        let cert = ShapeCertificate {
            w: vec![0],
            parts: vec![(1..6).collect(), (6..11).collect()],
            cores: vec![(1..6).collect(), (6..11).collect()],
        };
        let (d, dc) = d_operation(&h, &cert).unwrap();
        assert_eq!(d.edge_count(), h.edge_count() + 1 + 11 + 1);
        let (back, bc) = d_inverse(&d, &dc).unwrap();
        assert_eq!(back, h);
        assert_eq!(bc, cert);
    }

    #[test]
    fn d_on_turan() {
        let t8 = turan(8, 2).unwrap();
        let cert = ShapeCertificate {
            w: vec![],
            parts: vec![(0..4).collect(), (4..8).collect()],
            cores: vec![(0..4).collect(), (4..8).collect()],
        };
        let (d, _) = d_operation(&t8, &cert).unwrap();
        assert_eq!(certificate(&d), certificate(&turan(10, 2).unwrap()));
        let empty_core = ShapeCertificate { cores: vec![vec![], (4..8).collect()], ..cert };
        assert!(d_inverse(&t8, &empty_core).is_err());
    }
}
