//! Structure of dense symmetric configurations in `P_l`-free graphs.
//!
//! If `G` is `P_l`-free, `G[S]` is the disjoint union of `tau >= l`
//! symmetric blocks, `(l - 1)` divides `|S|` and
//! `e(G[S]) + e(S, V - S) >= (l - 2)|S| / 2`, then either every block is
//! `K_{l-1}` with no edges leaving `S`, or (for even `l`) every block is a
//! single vertex and all of them see the same `(l - 2)/2` outside vertices.

use serde::Serialize;

use crate::bits::{bits, set_of, to_vec};
use crate::budget::Budget;
use crate::construct::path;
use crate::error::Result;
use crate::subgraph::find_embedding;

use super::families::SymmetricFamily;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Dichotomy {
    /// Every block is `K_{l-1}` and nothing leaves `S`.
    CliqueBlocks,
    /// Every block is `K_1`, adjacent to exactly the listed outside vertices.
    Apexed { apexes: Vec<usize> },
    /// The hypothesis holds but neither branch describes the configuration.
    Neither,
    /// The hypothesis fails; the reason is given.
    HypothesisNotMet(String),
}

/// `|A_1 ∩ ... ∩ A_m| >= sum |A_i| - (m - 1)|A_1 ∪ ... ∪ A_m|`.
fn intersection_lower_bound(sets: &[u64]) -> i64 {
    let union = sets.iter().fold(0u64, |m, &s| m | s).count_ones() as i64;
    let sum: i64 = sets.iter().map(|s| s.count_ones() as i64).sum();
    sum - (sets.len() as i64 - 1) * union
}

pub fn classify_dichotomy(fam: &SymmetricFamily, l: usize) -> Result<Dichotomy> {
    let not_met = |why: &str| Ok(Dichotomy::HypothesisNotMet(why.to_string()));
    let g = &fam.host;
    if l < 3 {
        return not_met("l must be at least 3");
    }
    if fam.validate().is_err() {
        return not_met("the blocks are not symmetric");
    }
    if fam.has_cross_edges() {
        return not_met("G[S] is not the disjoint union of the blocks");
    }
    let s = fam.union_mask();
    let size = s.count_ones() as usize;
    if size % (l - 1) != 0 {
        return not_met("|S| is not a multiple of l - 1");
    }
    if fam.tau() < l {
        return not_met("fewer than l blocks");
    }
    let inner = g.induced(s).edge_count();
    let leaving = g.edges_between(s, g.vertices() & !s);
    if 2 * (inner + leaving) < (l - 2) * size {
        return not_met("too few edges at S");
    }
    if l <= g.order() && find_embedding(g, &path(l)?, Budget::unlimited()).is_found() {
        return not_met("G contains P_l");
    }

    let k = fam.block_order();
    let complete_blocks = fam.blocks.iter().all(|b| g.induced(set_of(b)).edge_count() == k * (k - 1) / 2);
    if k == l - 1 && complete_blocks && leaving == 0 {
        return Ok(Dichotomy::CliqueBlocks);
    }
    if k == 1 && l % 2 == 0 {
        let outside: Vec<u64> = bits(s).map(|v| g.neighbors(v) & !s).collect();
        let common = outside.iter().fold(g.vertices() & !s, |m, &o| m & o);
        debug_assert!(outside.len() < 2 || intersection_lower_bound(&outside) <= common.count_ones() as i64);
        if outside.iter().all(|&o| o == common) && common.count_ones() as usize == (l - 2) / 2 {
            return Ok(Dichotomy::Apexed { apexes: to_vec(common) });
        }
    }
    Ok(Dichotomy::Neither)
}
