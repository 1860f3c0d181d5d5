//! Membership in `D(n, r, c)`: after omitting at most `c` vertices the rest
//! is a join of `r` graphs, each a disjoint union of symmetric blocks of
//! order at most `c`, with every part within `c` of `n / r`.

use serde::Serialize;

use crate::bits::{bit, bits, set_of, to_vec};
use crate::budget::{Budget, Meter, Outcome};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

use super::families::{block_iso, find_symmetric_vertices};

/// Omitted vertices and, per part, its blocks as ascending vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCertificate {
    pub omitted: Vec<usize>,
    pub parts: Vec<Vec<Vec<usize>>>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

fn size_ok(size: usize, n: usize, r: usize, c: usize) -> bool {
    (r * size).abs_diff(n) <= r * c
}

/// Whether the components of `G[k]` are pairwise symmetric in `G`; they must
/// all have order at most `c`.
fn components_symmetric(g: &Graph, k: u64, c: usize) -> Option<Vec<u64>> {
    let comps = g.induced_components(k);
    if comps.iter().any(|m| m.count_ones() as usize > c) {
        return None;
    }
    let outside = g.vertices() & !k;
    let first = to_vec(comps[0]);
    comps[1..]
        .iter()
        .all(|&m| block_iso(g, &first, &to_vec(m), outside).is_some())
        .then_some(comps)
}

impl ClassCertificate {
    /// Re-checks every condition of the definition.
    pub fn check(&self, g: &Graph, r: usize, c: usize) -> Result<()> {
        let n = g.order();
        if self.omitted.len() > c {
            return Err(bad("too many omitted vertices"));
        }
        if self.parts.len() != r {
            return Err(bad(format!("{} parts, expected {r}", self.parts.len())));
        }
        let mut seen = set_of(&self.omitted);
        let mut part_masks = Vec::new();
        for (i, part) in self.parts.iter().enumerate() {
            let mut pm = 0u64;
            for b in part {
                let bm = set_of(b);
                if bm & (seen | pm) != 0 || b.iter().any(|&v| v >= n) {
                    return Err(bad("sets overlap or leave the graph"));
                }
                if b.is_empty() || b.len() > c {
                    return Err(bad(format!("block {b:?} has order outside 1..={c}")));
                }
                pm |= bm;
            }
            if !size_ok(pm.count_ones() as usize, n, r, c) {
                return Err(bad(format!("part {i} is unbalanced")));
            }
            let comps = g.induced_components(pm);
            let mut listed: Vec<u64> = part.iter().map(|b| set_of(b)).collect();
            let mut comps_sorted = comps.clone();
            listed.sort_unstable();
            comps_sorted.sort_unstable();
            if listed != comps_sorted {
                return Err(bad(format!("blocks of part {i} are not its components")));
            }
            if !comps.is_empty() && components_symmetric(g, pm, c).is_none() {
                return Err(bad(format!("blocks of part {i} are not symmetric")));
            }
            seen |= pm;
            part_masks.push(pm);
        }
        if seen != g.vertices() {
            return Err(bad("sets do not cover every vertex"));
        }
        for (i, &a) in part_masks.iter().enumerate() {
            for &b in &part_masks[i + 1..] {
                if bits(a).any(|v| g.neighbors(v) & b != b) {
                    return Err(bad("parts are not fully joined"));
                }
            }
        }
        Ok(())
    }
}

/// A group of co-components that can form one part.
struct CoComp {
    mask: u64,
    /// Components of `G[mask]` when they are symmetric blocks of order `<= c`.
    blocks: Option<Vec<u64>>,
}

/// Searches omission sets by size, smallest first. Within a size, vertices
/// from small symmetric-vertex classes are tried first, since members of
/// large classes are the ones parts are built from. Exhaustive when the
/// budget allows; otherwise `Undecided` once it is spent.
pub fn in_symmetry_class(g: &Graph, r: usize, c: usize, budget: Budget) -> Result<Outcome<ClassCertificate>> {
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    let n = g.order();
    let mut meter = budget.meter();
    let class_size: Vec<usize> = {
        let mut s = vec![0; n];
        for cl in find_symmetric_vertices(g) {
            for &v in &cl {
                s[v] = cl.len();
            }
        }
        s
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[v], v));

    for size in 0..=c.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if !meter.tick() {
                return Ok(Outcome::Undecided);
            }
            let omitted = idx.iter().fold(0u64, |m, &i| m | bit(order[i]));
            match split(g, omitted, r, c, &mut meter) {
                Outcome::Found(parts) => {
                    return Ok(Outcome::Found(ClassCertificate {
                        omitted: to_vec(omitted),
                        parts: parts.iter().map(|p| p.iter().map(|&b| to_vec(b)).collect()).collect(),
                    }))
                }
                Outcome::Undecided => return Ok(Outcome::Undecided),
                Outcome::Absent => {}
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(Outcome::Absent)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Groups the co-components of `G - omitted` into `r` parts. A part is
/// either one co-component whose components are symmetric blocks, or the
/// join of at least two co-components of total order at most `c`, which is
/// then a single connected block.
fn split(g: &Graph, omitted: u64, r: usize, c: usize, meter: &mut Meter) -> Outcome<Vec<Vec<u64>>> {
    let n = g.order();
    let rest = g.vertices() & !omitted;
    let co: Vec<CoComp> = g
        .complement()
        .induced_components(rest)
        .into_iter()
        .map(|mask| CoComp { mask, blocks: components_symmetric(g, mask, c) })
        .collect();
    let empty_ok = size_ok(0, n, r, c);
    if co.len() > r && co.iter().filter(|k| (k.mask.count_ones() as usize) <= c).count() < 2 {
        return Outcome::Absent;
    }

    // groups: (mask, members); a group with one member must carry blocks
    let mut groups: Vec<(u64, usize)> = Vec::new();
    fn go(
        i: usize,
        co: &[CoComp],
        groups: &mut Vec<(u64, usize)>,
        r: usize,
        n: usize,
        c: usize,
        empty_ok: bool,
        meter: &mut Meter,
    ) -> Option<bool> {
        if !meter.tick() {
            return None;
        }
        if i == co.len() {
            let valid = groups.iter().all(|&(m, k)| {
                size_ok(m.count_ones() as usize, n, r, c) && (k >= 2 || co.iter().any(|x| x.mask == m && x.blocks.is_some()))
            });
            return Some(valid && (groups.len() == r || (groups.len() < r && empty_ok)));
        }
        let k = &co[i];
        let ksize = k.mask.count_ones() as usize;
        if k.blocks.is_some() && groups.len() < r {
            groups.push((k.mask, 1));
            match go(i + 1, co, groups, r, n, c, empty_ok, meter) {
                Some(false) => {}
                other => return other,
            }
            groups.pop();
        }
        if ksize <= c {
            for gi in 0..groups.len() {
                let (m, cnt) = groups[gi];
                if (m.count_ones() as usize) + ksize > c || (cnt == 1 && (m.count_ones() as usize) > c) {
                    continue;
                }
                groups[gi] = (m | k.mask, cnt + 1);
                match go(i + 1, co, groups, r, n, c, empty_ok, meter) {
                    Some(false) => {}
                    other => return other,
                }
                groups[gi] = (m, cnt);
            }
            if groups.len() < r && k.blocks.is_none() {
                // opens a group that must absorb another co-component
                groups.push((k.mask, 1));
                match go(i + 1, co, groups, r, n, c, empty_ok, meter) {
                    Some(false) => {}
                    other => return other,
                }
                groups.pop();
            }
        }
        Some(false)
    }
    match go(0, &co, &mut groups, r, n, c, empty_ok, meter) {
        None => Outcome::Undecided,
        Some(false) => Outcome::Absent,
        Some(true) => {
            let mut parts: Vec<Vec<u64>> = groups
                .iter()
                .map(|&(m, _)| {
                    let mut comps = g.induced_components(m);
                    comps.sort_by_key(|b| b.trailing_zeros());
                    comps
                })
                .collect();
            parts.resize(r, Vec::new());
            Outcome::Found(parts)
        }
    }
}
