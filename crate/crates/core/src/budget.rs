//! Search budgets and tri-state search outcomes.

use std::time::{Duration, Instant};

/// Environment variable read by [`Budget::from_env`], in milliseconds.
pub const BUDGET_ENV: &str = "TURANLAB_BUDGET_MS";

/// Limits for a potentially exponential search. `Budget::default()` is unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of search nodes.
    pub max_nodes: Option<u64>,
    /// Wall-clock limit measured from when the search starts.
    pub time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes), time: None }
    }

    pub fn millis(ms: u64) -> Self {
        Budget { max_nodes: None, time: Some(Duration::from_millis(ms)) }
    }

    /// Reads `TURANLAB_BUDGET_MS`; unlimited when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .map(Budget::millis)
            .unwrap_or_default()
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            max_nodes: self.max_nodes,
            deadline: self.time.map(|d| Instant::now() + d),
            used: 0,
            exhausted: false,
        }
    }
}

/// Running counter for one search.
#[derive(Debug)]
pub(crate) struct Meter {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    pub(crate) used: u64,
    pub(crate) exhausted: bool,
}

impl Meter {
    /// Counts one node; returns false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.used += 1;
        if let Some(max) = self.max_nodes {
            if self.used > max {
                self.exhausted = true;
                return false;
            }
        }
        if self.used & 1023 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted = true;
                    return false;
                }
            }
        }
        true
    }
}

/// Result of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    /// The search was exhaustive and nothing exists.
    Absent,
    /// The budget ran out first.
    Undecided,
}

impl<T> Outcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Outcome::Absent)
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Outcome::Undecided)
    }

    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Absent => Outcome::Absent,
            Outcome::Undecided => Outcome::Undecided,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_budget_runs_out() {
        let mut m = Budget::nodes(3).meter();
        assert!(m.tick() && m.tick() && m.tick());
        assert!(!m.tick());
        assert!(m.exhausted);
        let mut free = Budget::unlimited().meter();
        assert!((0..10_000).all(|_| free.tick()));
    }
}
