//! Theorem checkers and conjecture scans.
//!
//! Every check compares canonical polynomials exactly; nothing passes on
//! evaluation at sample points. Instances are independent and run in
//! parallel, but reports list them in plan order.

mod lemmas;
mod plan;
mod scans;
mod theorems;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use lemmas::{lemma_q_sides, lemma_t0_sum, verify_lemma_q, verify_lemma_t0};
pub use plan::{Instance, Plan, DEFAULT_SEED};
pub use scans::{s_qt, scan_conjectures, scan_instance_positivity, Conjecture};
pub use theorems::{qinv_product, t0_product, verify_qinv, verify_t0, verify_t1};

/// First witness of a failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub beta: Vec<u8>,
    pub a: Vec<u64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    /// Wall time; the only field that varies between identical runs.
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `check` on every item in parallel and collects the failures in order.
pub(crate) fn run<T, F>(theorem: &str, seed: Option<u64>, items: &[T], check: F) -> VerificationReport
where
    T: Sync,
    F: Fn(&T) -> Vec<Failure> + Sync + Send,
{
    let start = Instant::now();
    let failures: Vec<Failure> = items.par_iter().map(&check).collect::<Vec<_>>().concat();
    VerificationReport {
        theorem: theorem.to_string(),
        instances: items.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
        seed,
    }
}
