//! Partitions `W, S_1, ..., S_r` in which most of every part is fully
//! joined to everything outside it.

use serde::Serialize;

use crate::bits::{bit, bits, to_vec};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `W`, parts `S_i` and cores `S'_i`, each as an ascending vertex list.
///
/// Every core vertex `v` of part `i` has `N(v) = V - S_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ShapeCertificate {
    pub w: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
    pub cores: Vec<Vec<usize>>,
}

fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

/// `V - N(v)`, which contains `v`.
fn co_neighbourhood(g: &Graph, v: usize) -> u64 {
    g.vertices() & !g.neighbors(v)
}

impl ShapeCertificate {
    /// `q = |W| + 1`.
    pub fn q(&self) -> usize {
        self.w.len() + 1
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    /// Largest `|S_i - S'_i|`.
    pub fn max_co_size(&self) -> usize {
        self.parts.iter().zip(&self.cores).map(|(p, c)| p.len() - c.len()).max().unwrap_or(0)
    }

    /// Checks the partition, the part balance and the core condition.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        if self.parts.len() != self.cores.len() {
            return Err(bad("parts and cores differ in number"));
        }
        if self.parts.is_empty() {
            return Err(bad("no parts"));
        }
        let mut seen = 0u64;
        for &v in self.w.iter().chain(self.parts.iter().flatten()) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if seen & bit(v) != 0 {
                return Err(bad(format!("vertex {v} listed twice")));
            }
            seen |= bit(v);
        }
        if seen != g.vertices() {
            return Err(bad("sets do not cover every vertex"));
        }
        let rest = n - self.w.len();
        let r = self.parts.len();
        let (lo, hi) = (rest / r, rest.div_ceil(r));
        for (i, (part, core)) in self.parts.iter().zip(&self.cores).enumerate() {
            if part.len() != lo && part.len() != hi {
                return Err(bad(format!("part {i} has {} vertices, expected {lo} or {hi}", part.len())));
            }
            let pm = mask(part);
            for &v in core {
                if pm & bit(v) == 0 {
                    return Err(bad(format!("core vertex {v} is not in part {i}")));
                }
                if co_neighbourhood(g, v) != pm {
                    return Err(bad(format!("core vertex {v} is not joined to exactly V - S_{}", i + 1)));
                }
            }
        }
        Ok(())
    }

    /// [`check`](Self::check) plus `|W| = q - 1`, `r` parts and cores of
    /// co-size at most `t^2`.
    pub fn verify(&self, g: &Graph, q: usize, r: usize, t: usize) -> Result<()> {
        self.check(g)?;
        if self.w.len() + 1 != q {
            return Err(bad(format!("|W| = {}, expected {}", self.w.len(), q - 1)));
        }
        if self.parts.len() != r {
            return Err(bad(format!("{} parts, expected {r}", self.parts.len())));
        }
        if self.max_co_size() > t * t {
            return Err(bad(format!("a part has more than {} non-core vertices", t * t)));
        }
        Ok(())
    }
}

/// Finds `W` with `|W| = q - 1` and balanced parts whose cores miss at most
/// `t^2` vertices each, or `None` when no such partition exists.
///
/// A part with a nonempty core equals `V - N(v)` for each of its core
/// vertices, so such parts are drawn from the distinct co-neighbourhoods.
/// The remaining parts have empty cores and at most `t^2` vertices, and only
/// their sizes matter. Collections with more core-carrying parts are tried
/// first, in order of least vertex.
pub fn verify_extremal_shape(g: &Graph, q: usize, r: usize, t: usize) -> Option<ShapeCertificate> {
    let n = g.order();
    if q == 0 || r == 0 || q - 1 > n {
        return None;
    }
    let rest = n - (q - 1);
    let (lo, hi) = (rest / r, rest.div_ceil(r));
    let cap = t * t;

    let mut anchors: Vec<(u64, u64)> = Vec::new();
    for v in 0..n {
        let s = co_neighbourhood(g, v);
        if anchors.iter().any(|&(a, _)| a == s) {
            continue;
        }
        let size = s.count_ones() as usize;
        if size != lo && size != hi {
            continue;
        }
        let core = bits(s).filter(|&u| co_neighbourhood(g, u) == s).fold(0, |m, u| m | bit(u));
        if (s & !core).count_ones() as usize <= cap {
            anchors.push((s, core));
        }
    }
    anchors.sort_by_key(|&(s, _)| s.trailing_zeros());

    for a in (0..=r.min(anchors.len())).rev() {
        let mut chosen = Vec::new();
        if let Some(free) = pick(&anchors, 0, a, 0, &mut chosen, &|used| free_sizes(rest, used, r - a, lo, hi, cap))
        {
            return Some(assemble(g, &anchors, &chosen, &free, q - 1));
        }
    }
    None
}

/// Chooses `need` pairwise disjoint anchors; `done` decides the leftover.
fn pick<T>(
    anchors: &[(u64, u64)],
    from: usize,
    need: usize,
    used: u64,
    chosen: &mut Vec<usize>,
    done: &dyn Fn(u64) -> Option<T>,
) -> Option<T> {
    if need == 0 {
        return done(used);
    }
    for i in from..anchors.len() {
        if anchors.len() - i < need {
            break;
        }
        if anchors[i].0 & used != 0 {
            continue;
        }
        chosen.push(i);
        if let Some(x) = pick(anchors, i + 1, need - 1, used | anchors[i].0, chosen, done) {
            return Some(x);
        }
        chosen.pop();
    }
    None
}

/// Sizes of `k` core-free parts filling the leftover after `W`, larger first.
fn free_sizes(rest: usize, used: u64, k: usize, lo: usize, hi: usize, cap: usize) -> Option<Vec<usize>> {
    let left = rest.checked_sub(used.count_ones() as usize)?;
    if k == 0 {
        return (left == 0).then(Vec::new);
    }
    (0..=k).rev().find_map(|big| {
        let sizes: Vec<usize> = (0..k).map(|i| if i < big { hi } else { lo }).collect();
        (sizes.iter().sum::<usize>() == left && sizes.iter().all(|&s| s <= cap)).then_some(sizes)
    })
}

/// `W` takes the highest-degree leftover vertices (ties: lower index); the
/// free parts take the rest in ascending order.
fn assemble(g: &Graph, anchors: &[(u64, u64)], chosen: &[usize], free: &[usize], w: usize) -> ShapeCertificate {
    let used = chosen.iter().fold(0, |m, &i| m | anchors[i].0);
    let mut left: Vec<usize> = bits(g.vertices() & !used).collect();
    left.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut wv: Vec<usize> = left.drain(..w).collect();
    wv.sort_unstable();
    left.sort_unstable();

    let mut parts: Vec<(u64, u64)> = chosen.iter().map(|&i| anchors[i]).collect();
    let mut it = left.into_iter();
    for &size in free {
        let s = (&mut it).take(size).fold(0, |m, v| m | bit(v));
        let core = bits(s).filter(|&u| co_neighbourhood(g, u) == s).fold(0, |m, u| m | bit(u));
        parts.push((s, core));
    }
    parts.sort_by_key(|&(s, _)| s.trailing_zeros());
    ShapeCertificate {
        w: wv,
        parts: parts.iter().map(|&(s, _)| to_vec(s)).collect(),
        cores: parts.iter().map(|&(_, c)| to_vec(c)).collect(),
    }
}

/// Reference search over every labelling of the vertices with
/// `W, S_1, ..., S_r`; `(r + 1)^n` steps.
pub fn verify_extremal_shape_exhaustive(g: &Graph, q: usize, r: usize, t: usize) -> Option<ShapeCertificate> {
    let n = g.order();
    let mut lab = vec![0usize; n];
    loop {
        let mut w = Vec::new();
        let mut parts = vec![Vec::new(); r];
        for (v, &l) in lab.iter().enumerate() {
            if l == 0 {
                w.push(v);
            } else {
                parts[l - 1].push(v);
            }
        }
        let cores = parts
            .iter()
            .map(|p| {
                let pm = mask(p);
                p.iter().copied().filter(|&v| co_neighbourhood(g, v) == pm).collect()
            })
            .collect();
        let cert = ShapeCertificate { w, parts, cores };
        if cert.verify(g, q, r, t).is_ok() {
            return Some(cert);
        }
        let mut i = 0;
        while i < n {
            lab[i] += 1;
            if lab[i] <= r {
                break;
            }
            lab[i] = 0;
            i += 1;
        }
        if i == n {
            return None;
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cycle, empty, named, turan};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn shaped(q: usize, r: usize, n: usize) -> Graph {
        Graph::join(&[&empty(q - 1).unwrap(), &turan(n - q + 1, r).unwrap()]).unwrap()
    }

    #[test]
    fn accepts_shaped_joins() {
        for (q, r, n) in [(1, 2, 10), (3, 2, 13), (2, 3, 14)] {
            let g = shaped(q, r, n);
            let cert = verify_extremal_shape(&g, q, r, 1).unwrap();
            cert.verify(&g, q, r, 1).unwrap();
            assert_eq!(cert.parts, cert.cores);
        }
    }

    #[test]
    fn witness_with_embedded_edge() {
        // G_{14,3,2}: K_2 * T(12, 2) with one edge inside the first part
        let g = named::g_nak(14, 3, 2).unwrap().eval().unwrap();
        // the edge's ends leave the core, which t = 1 does not allow
        assert!(verify_extremal_shape(&g, 3, 2, 1).is_none());
        let cert = verify_extremal_shape(&g, 3, 2, 2).unwrap();
        cert.verify(&g, 3, 2, 2).unwrap();
        assert_eq!(cert.w, vec![0, 1]);
        assert_eq!(cert.max_co_size(), 2);
    }

    #[test]
    fn rejects_odd_cycle() {
        assert!(verify_extremal_shape(&cycle(7).unwrap(), 1, 2, 1).is_none());
        assert!(verify_extremal_shape_exhaustive(&cycle(7).unwrap(), 1, 2, 1).is_none());
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..150 {
            let n = rng.gen_range(2..=7);
            let mut g = Graph::new(n).unwrap();
            let p = rng.gen_range(0.3..0.95);
            for u in 0..n {
                for v in 0..u {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let (q, r, t) = (rng.gen_range(1..=2), rng.gen_range(2..=3), 1);
            let got = verify_extremal_shape(&g, q, r, t);
            if let Some(c) = &got {
                c.verify(&g, q, r, t).unwrap();
            }
            assert_eq!(got.is_some(), verify_extremal_shape_exhaustive(&g, q, r, t).is_some(), "{g:?} q={q} r={r}");
        }
    }
}
