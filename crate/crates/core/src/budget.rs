//! Node and wall-clock caps for exhaustive searches.
//!
//! Every search that can blow up takes a [`Budget`]. Running out is reported
//! as its own outcome and never folded into "no solution".

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Some(DEFAULT_NODE_LIMIT),
            max_time: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_nodes: None,
            max_time: None,
        }
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            max_nodes: Some(n),
            max_time: None,
        }
    }

    pub fn with_time(mut self, d: Duration) -> Self {
        self.max_time = Some(d);
        self
    }

    pub fn meter(&self) -> Meter {
        Meter {
            budget: *self,
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            exceeded: AtomicBool::new(false),
        }
    }
}

/// Marker error: the budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("search budget exceeded")]
pub struct BudgetExceeded;

/// Running counter for one search. Safe to share between worker threads.
#[derive(Debug)]
pub struct Meter {
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    exceeded: AtomicBool,
}

impl Meter {
    #[inline]
    pub fn tick(&self) -> Result<(), BudgetExceeded> {
        self.tick_n(1)
    }

    pub fn tick_n(&self, k: u64) -> Result<(), BudgetExceeded> {
        let before = self.nodes.fetch_add(k, Ordering::Relaxed);
        let now = before + k;
        if let Some(max) = self.budget.max_nodes {
            if now > max {
                self.exceeded.store(true, Ordering::Relaxed);
                return Err(BudgetExceeded);
            }
        }
        if let Some(limit) = self.budget.max_time {
            // the clock is read once per 1024 nodes
            if before >> 10 != now >> 10 && self.start.elapsed() > limit {
                self.exceeded.store(true, Ordering::Relaxed);
                return Err(BudgetExceeded);
            }
        }
        if self.exceeded.load(Ordering::Relaxed) {
            return Err(BudgetExceeded);
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn is_exceeded(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed)
    }
}
