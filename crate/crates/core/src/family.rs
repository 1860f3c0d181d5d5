//! Forbidden families and the family-level invariants `r`, `t` and `q`.

use std::sync::OnceLock;

use crate::budget::{Budget, Outcome};
use crate::construct::{complete_multipartite, empty};
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::invariants::{chromatic_number, independent_covering_order};
use crate::subgraph::find_embedding;

/// A finite family of forbidden patterns with cached invariants.
#[derive(Debug)]
pub struct ForbiddenFamily {
    members: Vec<Graph>,
    labels: Vec<String>,
    chi: Vec<usize>,
    r: usize,
    t: usize,
    q: OnceLock<usize>,
}

impl Clone for ForbiddenFamily {
    fn clone(&self) -> Self {
        let q = OnceLock::new();
        if let Some(&v) = self.q.get() {
            let _ = q.set(v);
        }
        ForbiddenFamily {
            members: self.members.clone(),
            labels: self.labels.clone(),
            chi: self.chi.clone(),
            r: self.r,
            t: self.t,
            q,
        }
    }
}

/// Outcome of a family-freeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness {
    Free,
    /// `witness[p]` is the host image of vertex `p` of member `member`.
    Contains { member: usize, witness: Vec<usize> },
    /// No member was found, but the search for `member` ran out of budget.
    Undecided { member: usize },
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

impl ForbiddenFamily {
    /// Members are labelled `F1, F2, ...`.
    pub fn new(members: Vec<Graph>) -> Result<Self> {
        let labelled = members
            .into_iter()
            .enumerate()
            .map(|(i, g)| (format!("F{}", i + 1), g))
            .collect();
        Self::with_labels(labelled)
    }

    pub fn single(g: Graph) -> Result<Self> {
        Self::new(vec![g])
    }

    /// Needs at least one member, and every member needs an edge so `r >= 1`.
    pub fn with_labels(members: Vec<(String, Graph)>) -> Result<Self> {
        if members.is_empty() {
            return Err(invalid("a forbidden family needs at least one member"));
        }
        if let Some((label, _)) = members.iter().find(|(_, g)| g.edge_count() == 0) {
            return Err(invalid(format!("member {label} has no edges")));
        }
        let (labels, members): (Vec<_>, Vec<_>) = members.into_iter().unzip();
        let chi: Vec<usize> = members.iter().map(chromatic_number).collect();
        let r = chi.iter().min().unwrap() - 1;
        let t = members.iter().map(Graph::order).max().unwrap();
        Ok(ForbiddenFamily { members, labels, chi, r, t, q: OnceLock::new() })
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn chromatic_numbers(&self) -> &[usize] {
        &self.chi
    }

    /// `min chi - 1`.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Largest member order.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `q` of the family, computed once without a budget.
    pub fn q(&self) -> usize {
        *self.q.get_or_init(|| match family_q(self, Budget::unlimited()) {
            Outcome::Found(q) => q,
            _ => unreachable!("an unbudgeted search always finds q"),
        })
    }

    pub fn is_free(&self, host: &Graph) -> bool {
        is_family_free(host, self, Budget::unlimited()).is_free()
    }
}

/// Tests every member in order; each search gets its own budget.
pub fn is_family_free(host: &Graph, fam: &ForbiddenFamily, budget: Budget) -> Freeness {
    let mut undecided = None;
    for (i, f) in fam.members.iter().enumerate() {
        match find_embedding(host, f, budget) {
            Outcome::Found(witness) => return Freeness::Contains { member: i, witness },
            Outcome::Undecided => {
                undecided.get_or_insert(i);
            }
            Outcome::Absent => {}
        }
    }
    match undecided {
        Some(member) => Freeness::Undecided { member },
        None => Freeness::Free,
    }
}

/// Smallest `s` such that some member embeds in `E_s * T(t r, r)`.
///
/// A member `F` only needs parts of size `|F|`, so it is tested against
/// `E_s * K_{|F|,...,|F|}`, which contains `F` exactly when the larger host
/// does. Only members with `chi = r + 1` can embed, and `s = 0` never works
/// because the Turán graph is `r`-colourable.
pub fn family_q(fam: &ForbiddenFamily, budget: Budget) -> Outcome<usize> {
    let r = fam.r;
    let mut undecided = false;
    for s in 1..=fam.t {
        for (f, &chi) in fam.members.iter().zip(&fam.chi) {
            if chi != r + 1 || s > f.order() {
                continue;
            }
            let host = q_host(s, f.order(), r).expect("host has at most 64 vertices");
            match find_embedding(&host, f, budget) {
                Outcome::Found(_) => return Outcome::Found(s),
                Outcome::Undecided => undecided = true,
                Outcome::Absent => {}
            }
        }
        if undecided {
            return Outcome::Undecided;
        }
    }
    unreachable!("every member with chi = r+1 embeds once s reaches its order")
}

fn q_host(s: usize, part: usize, r: usize) -> Result<Graph> {
    let t = complete_multipartite(&vec![part; r])?;
    let e = empty(s)?;
    Graph::join(&[&e, &t])
}

/// The bipartite formulation: least independent covering order over the
/// bipartite members, or `None` when no member is bipartite.
pub fn family_q_bipartite(fam: &ForbiddenFamily) -> Option<usize> {
    fam.members.iter().filter_map(|f| independent_covering_order(f).ok()).min()
}
