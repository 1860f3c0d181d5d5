//! Symmetric vertices, symmetric subgraph families and replication.

use serde::Serialize;

use crate::bits::{bit, bits, set_of, to_vec};
use crate::budget::{Budget, Meter, Outcome};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Blocks `Q_1, ..., Q_tau` of a host and maps `psi_j : Q_1 -> Q_j`.
///
/// `isos[j - 2][i]` is the image of `blocks[0][i]` in `blocks[j - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricFamily {
    #[serde(serialize_with = "as_graph6")]
    pub host: Graph,
    pub blocks: Vec<Vec<usize>>,
    pub isos: Vec<Vec<usize>>,
}

fn as_graph6<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_graph6())
}

fn invalid_family(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

impl SymmetricFamily {
    pub fn tau(&self) -> usize {
        self.blocks.len()
    }

    /// Order of each block.
    pub fn block_order(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    pub fn union_mask(&self) -> u64 {
        self.blocks.iter().fold(0, |m, b| m | set_of(b))
    }

    /// True if an edge joins two different blocks.
    pub fn has_cross_edges(&self) -> bool {
        let masks: Vec<u64> = self.blocks.iter().map(|b| set_of(b)).collect();
        masks.iter().enumerate().any(|(i, &a)| {
            masks[i + 1..].iter().any(|&b| bits(a).any(|v| self.host.neighbors(v) & b != 0))
        })
    }

    /// Checks disjointness, connectivity, the maps and the outside condition.
    pub fn validate(&self) -> Result<()> {
        let g = &self.host;
        let n = g.order();
        if self.blocks.is_empty() {
            return Err(invalid_family("no blocks"));
        }
        if self.isos.len() + 1 != self.blocks.len() {
            return Err(invalid_family("need one map per block after the first"));
        }
        let k = self.block_order();
        let mut seen = 0u64;
        for b in &self.blocks {
            if b.len() != k || k == 0 {
                return Err(invalid_family("blocks must be nonempty and of equal order"));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
                if seen & bit(v) != 0 {
                    return Err(invalid_family(format!("vertex {v} is in two blocks")));
                }
                seen |= bit(v);
            }
            if !g.is_connected_set(set_of(b)) {
                return Err(invalid_family(format!("block {b:?} is not connected")));
            }
        }
        let outside = g.vertices() & !seen;
        let q1 = &self.blocks[0];
        for (j, (psi, qj)) in self.isos.iter().zip(&self.blocks[1..]).enumerate() {
            if psi.len() != k || set_of(psi) != set_of(qj) || psi.iter().any(|&v| v >= n) {
                return Err(invalid_family(format!("map {} is not a bijection onto its block", j + 2)));
            }
            for a in 0..k {
                if g.neighbors(q1[a]) & outside != g.neighbors(psi[a]) & outside {
                    return Err(invalid_family(format!(
                        "vertices {} and {} differ outside the blocks",
                        q1[a], psi[a]
                    )));
                }
                for b in 0..a {
                    if g.has_edge(q1[a], q1[b]) != g.has_edge(psi[a], psi[b]) {
                        return Err(invalid_family(format!("map {} is not an isomorphism", j + 2)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Classes of vertices with equal neighbourhoods, ordered by least vertex.
/// Such vertices are never adjacent, so these are the symmetric vertex
/// classes.
pub fn find_symmetric_vertices(g: &Graph) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.order() {
        match classes.iter_mut().find(|c| g.neighbors(c[0]) == g.neighbors(v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

/// Isomorphism `G[a] -> G[b]`, as images of `a` in order, that also keeps
/// adjacency to every vertex of `outside`.
pub(crate) fn block_iso(g: &Graph, a: &[usize], b: &[usize], outside: u64) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let am = set_of(a);
    let bm = set_of(b);
    let key = |v: usize, own: u64| (g.neighbors(v) & outside, (g.neighbors(v) & own).count_ones());
    let mut used = 0u64;
    let mut img = vec![0usize; a.len()];
    fn go(
        i: usize,
        g: &Graph,
        a: &[usize],
        b: &[usize],
        keys: &(Vec<(u64, u32)>, Vec<(u64, u32)>),
        used: &mut u64,
        img: &mut [usize],
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for (jb, &w) in b.iter().enumerate() {
            if *used & bit(w) != 0 || keys.0[i] != keys.1[jb] {
                continue;
            }
            if (0..i).any(|p| g.has_edge(a[p], a[i]) != g.has_edge(img[p], w)) {
                continue;
            }
            img[i] = w;
            *used |= bit(w);
            if go(i + 1, g, a, b, keys, used, img) {
                return true;
            }
            *used &= !bit(w);
        }
        false
    }
    let keys = (
        a.iter().map(|&v| key(v, am)).collect::<Vec<_>>(),
        b.iter().map(|&v| key(v, bm)).collect::<Vec<_>>(),
    );
    go(0, g, a, b, &keys, &mut used, &mut img).then_some(img)
}

fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

/// Connected induced vertex sets of order `k`, each once, ascending.
fn connected_sets(g: &Graph, k: usize, meter: &mut Meter) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    // grow from the least vertex, adding only larger vertices adjacent to the set
    fn grow(g: &Graph, set: u64, root: usize, k: usize, ext: u64, out: &mut Vec<u64>, meter: &mut Meter) -> bool {
        if !meter.tick() {
            return false;
        }
        if set.count_ones() as usize == k {
            out.push(set);
            return true;
        }
        let mut ext = ext;
        while ext != 0 {
            let v = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let add = g.neighbors(v) & !set & above(root) & !bit(v);
            let nbrs_of_set = bits(set).fold(0u64, |m, u| m | g.neighbors(u));
            if !grow(g, set | bit(v), root, k, ext | (add & !nbrs_of_set & !set), out, meter) {
                return false;
            }
        }
        true
    }
    for root in 0..g.order() {
        if !grow(g, bit(root), root, k, g.neighbors(root) & above(root), &mut out, meter) {
            return None;
        }
    }
    out.sort_by_key(|&s| to_vec(s));
    Some(out)
}

/// Largest family of pairwise disjoint, symmetric connected induced blocks
/// of order `k`, provided it has at least `tau_min` blocks.
///
/// Every block `Q_j` must admit a map from the anchor `Q_1` that keeps
/// adjacency to all vertices outside `Q_1 + Q_j`; such blocks form a valid
/// family whatever else is chosen, and for families without edges between
/// blocks the condition is also necessary. Among the anchors, the largest
/// family wins, ties going to the earlier anchor in ascending order.
pub fn find_symmetric_families(
    g: &Graph,
    k: usize,
    tau_min: usize,
    budget: Budget,
) -> Result<Outcome<SymmetricFamily>> {
    if k == 0 {
        return Err(Error::InvalidParameter("block order must be at least 1".into()));
    }
    let mut meter = budget.meter();
    let Some(sets) = connected_sets(g, k, &mut meter) else {
        return Ok(Outcome::Undecided);
    };
    let all = g.vertices();
    let mut best: Option<(Vec<usize>, Vec<(u64, Vec<usize>)>)> = None;
    for (ai, &anchor) in sets.iter().enumerate() {
        let q1 = to_vec(anchor);
        let mut cands: Vec<(u64, Vec<usize>)> = Vec::new();
        for (bi, &other) in sets.iter().enumerate() {
            if bi == ai || other & anchor != 0 {
                continue;
            }
            if !meter.tick() {
                return Ok(Outcome::Undecided);
            }
            if let Some(psi) = block_iso(g, &q1, &to_vec(other), all & !anchor & !other) {
                cands.push((other, psi));
            }
        }
        let need = best.as_ref().map_or(tau_min.max(1), |(_, b)| b.len() + 2);
        if cands.len() + 1 < need {
            continue;
        }
        let masks: Vec<u64> = cands.iter().map(|c| c.0).collect();
        let Some(pick) = max_packing(&masks, need.saturating_sub(1), &mut meter) else {
            return Ok(Outcome::Undecided);
        };
        if pick.len() + 1 >= need {
            best = Some((q1, pick.into_iter().map(|i| cands[i].clone()).collect()));
        }
    }
    Ok(match best {
        Some((q1, rest)) => {
            let mut blocks = vec![q1];
            let mut isos = Vec::new();
            for (m, psi) in rest {
                blocks.push(to_vec(m));
                isos.push(psi);
            }
            Outcome::Found(SymmetricFamily { host: g.clone(), blocks, isos })
        }
        None => Outcome::Absent,
    })
}

/// Lexicographically first maximum set of pairwise disjoint masks with at
/// least `at_least` members; empty if there is none. `None` on budget.
fn max_packing(masks: &[u64], at_least: usize, meter: &mut Meter) -> Option<Vec<usize>> {
    struct St<'a> {
        masks: &'a [u64],
        best: Vec<usize>,
        cur: Vec<usize>,
        floor: usize,
    }
    fn go(st: &mut St, from: usize, used: u64, meter: &mut Meter) -> bool {
        if !meter.tick() {
            return false;
        }
        if st.cur.len() > st.best.len() && st.cur.len() >= st.floor {
            st.best = st.cur.clone();
        }
        let free: Vec<usize> = (from..st.masks.len()).filter(|&i| st.masks[i] & used == 0).collect();
        // each further mask needs at least one uncovered vertex
        let room = (free.iter().fold(0u64, |m, &i| m | st.masks[i]) & !used).count_ones() as usize;
        let bound = st.cur.len() + free.len().min(room);
        if bound <= st.best.len() || bound < st.floor {
            return true;
        }
        for (idx, &i) in free.iter().enumerate() {
            if st.cur.len() + free.len() - idx <= st.best.len() {
                break;
            }
            st.cur.push(i);
            if !go(st, i + 1, used | st.masks[i], meter) {
                return false;
            }
            st.cur.pop();
        }
        true
    }
    let mut st = St { masks, best: Vec::new(), cur: Vec::new(), floor: at_least };
    go(&mut st, 0, 0, meter).then_some(st.best)
}

/// Adds a fresh copy `Q` of `Q_1`, wired inside like `Q_1` and to every
/// vertex outside the blocks exactly as `Q_1`; `Q` has no edges to the
/// blocks. The copy occupies the last `|Q_1|` vertices, in the order of
/// `blocks[0]`. Families with edges between blocks are rejected.
pub fn replicate(fam: &SymmetricFamily) -> Result<Graph> {
    fam.validate()?;
    if fam.has_cross_edges() {
        return Err(invalid_family("replication needs blocks without edges between them"));
    }
    let g = &fam.host;
    let (n, k) = (g.order(), fam.block_order());
    if n + k > MAX_ORDER {
        return Err(Error::TooManyVertices(n + k));
    }
    let outside = g.vertices() & !fam.union_mask();
    let q1 = &fam.blocks[0];
    let mut h = g.clone();
    for _ in 0..k {
        h.add_vertex()?;
    }
    for (i, &u) in q1.iter().enumerate() {
        for j in 0..i {
            if g.has_edge(u, q1[j]) {
                h.add_edge(n + i, n + j);
            }
        }
        for v in bits(g.neighbors(u) & outside) {
            h.add_edge(n + i, v);
        }
    }
    Ok(h)
}
