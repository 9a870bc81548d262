//! Adaptive quadrature and the integrals behind the second-order term.

mod integrals;
mod kronrod;

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::sum::NeumaierSum;
use crate::{Error, Result};

pub use integrals::{
    eval_f, eval_f_substituted, f_expansion_check, f_zero, fractional_tail, identity_rhs,
    zeta_half_integral, FExpansionCheck,
};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_SUBDIVISIONS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Sum of the per-interval error estimates.
    pub error_estimate: f64,
    /// Number of bisections performed.
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    /// Absolute tolerance on the summed error estimate.
    pub tolerance: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self { tolerance: DEFAULT_TOLERANCE, max_subdivisions: DEFAULT_MAX_SUBDIVISIONS }
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    // Largest error first; ties broken by position for determinism.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn segment<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let est = kronrod::gk21(f, a, b);
    Segment { a, b, value: est.value, error: est.error }
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol` with the default
/// subdivision limit.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    integrate_with(f, a, b, QuadratureOptions { tolerance: tol, ..Default::default() })
}

/// Globally adaptive Gauss-Kronrod integration: the interval with the
/// largest error estimate is bisected until the summed estimate drops to
/// the tolerance.
pub fn integrate_with<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: QuadratureOptions,
) -> Result<QuadratureResult> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!("integration needs finite a < b, got [{a}, {b}]")));
    }
    if !(opts.tolerance > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {}", opts.tolerance)));
    }

    let first = segment(&f, a, b);
    if !first.value.is_finite() || !first.error.is_finite() {
        return Err(Error::InvalidArgument("integrand is not finite on the interval".into()));
    }
    let mut running_error = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut subdivisions = 0usize;

    let summarize = |heap: &BinaryHeap<Segment>, subdivisions: usize| {
        let value: NeumaierSum = heap.iter().map(|s| s.value).collect();
        let error: NeumaierSum = heap.iter().map(|s| s.error).collect();
        QuadratureResult { value: value.total(), error_estimate: error.total(), subdivisions }
    };

    loop {
        if running_error <= opts.tolerance {
            // The running total drifts; confirm with an exact resummation.
            let result = summarize(&heap, subdivisions);
            if result.error_estimate <= opts.tolerance {
                return Ok(result);
            }
            running_error = result.error_estimate;
        }
        if subdivisions >= opts.max_subdivisions {
            let best = summarize(&heap, subdivisions);
            return Err(Error::ToleranceNotMet { tol: opts.tolerance, best });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            let best = summarize(&heap, subdivisions);
            return Err(Error::ToleranceNotMet { tol: opts.tolerance, best });
        }
        let left = segment(&f, worst.a, mid);
        let right = segment(&f, mid, worst.b);
        if ![left.value, left.error, right.value, right.error].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidArgument("integrand is not finite on the interval".into()));
        }
        running_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
    }
}
