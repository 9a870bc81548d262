//! Direct summation of the su(3) Witten zeta function
//! `zeta_su3(s) = sum_{j,k >= 1} (jk(j+k)/2)^(-s)` for real `s >= 1`.
//!
//! Every term is positive, so a truncation at dimension `N` gives a lower
//! bound. The tail is bounded by partial summation against the leading
//! growth `S(t) <= c1 t^(2/3)` of the counting function:
//! `sum_{n > N} rho(n) n^(-s) <= s/(s - 2/3) c1 N^(2/3 - s)`, reported with
//! a safety factor of 2.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asymptotics::constants;
use crate::lattice::{max_n_for_m, rho_table};
use crate::sum::NeumaierSum;
use crate::{Error, Result, MAX_X};

pub const TAIL_SAFETY_FACTOR: f64 = 2.0;

/// Rows of the `j` range summed by one parallel task.
const J_CHUNK: u64 = 64;

/// Largest cutoff for which the by-dimension table is built in memory.
pub const MAX_TABLE_CUTOFF: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaEvaluation {
    pub s: f64,
    pub dim_cutoff: u64,
    pub partial_sum: f64,
    /// The full series lies in `[partial_sum, partial_sum + tail_bound]`.
    pub tail_bound: f64,
    pub points_included: u64,
}

impl ZetaEvaluation {
    pub fn upper(&self) -> f64 {
        self.partial_sum + self.tail_bound
    }
}

fn check_params(s: f64, dim_cutoff: u64, max_cutoff: u64) -> Result<()> {
    if !(s >= 1.0) || !s.is_finite() {
        return Err(Error::UnsupportedParameter(format!(
            "direct summation needs real s >= 1, got {s}"
        )));
    }
    if dim_cutoff == 0 || dim_cutoff > max_cutoff {
        return Err(Error::OutOfRange { name: "dim_cutoff", value: dim_cutoff, min: 1, max: max_cutoff });
    }
    Ok(())
}

pub fn tail_bound(s: f64, dim_cutoff: u64) -> f64 {
    let c1 = constants().c1.value;
    TAIL_SAFETY_FACTOR * c1 * s / (s - 2.0 / 3.0) * (dim_cutoff as f64).powf(2.0 / 3.0 - s)
}

/// Sums over lattice points row by row (`j` outer, `k` inner).
///
/// Rows are split into fixed chunks summed in parallel; chunk totals are
/// combined in order, so the result does not depend on the thread count.
pub fn zeta_su3_direct(s: f64, dim_cutoff: u64) -> Result<ZetaEvaluation> {
    check_params(s, dim_cutoff, MAX_X)?;
    let j_max = max_n_for_m(1, dim_cutoff);
    let chunks: Vec<(f64, u64)> = (0..j_max.div_ceil(J_CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut acc = NeumaierSum::new();
            let mut points = 0u64;
            let first = c * J_CHUNK + 1;
            let last = ((c + 1) * J_CHUNK).min(j_max);
            for j in first..=last {
                let k_max = max_n_for_m(j, dim_cutoff);
                for k in 1..=k_max {
                    let (jf, kf) = (j as f64, k as f64);
                    let dim = 0.5 * jf * kf * (jf + kf);
                    acc.add(dim.powf(-s));
                }
                points += k_max;
            }
            (acc.total(), points)
        })
        .collect();
    let total: NeumaierSum = chunks.iter().map(|c| c.0).collect();
    Ok(ZetaEvaluation {
        s,
        dim_cutoff,
        partial_sum: total.total(),
        tail_bound: tail_bound(s, dim_cutoff),
        points_included: chunks.iter().map(|c| c.1).sum(),
    })
}

/// Sums `rho(n) n^(-s)` over `n <= dim_cutoff` in increasing `n`.
pub fn zeta_su3_via_rho(s: f64, dim_cutoff: u64) -> Result<ZetaEvaluation> {
    check_params(s, dim_cutoff, MAX_TABLE_CUTOFF)?;
    let rho = rho_table(dim_cutoff)?;
    let mut acc = NeumaierSum::new();
    let mut points = 0u64;
    for (n, &r) in rho.iter().enumerate().skip(1) {
        if r > 0 {
            acc.add(r as f64 * (n as f64).powf(-s));
            points += r;
        }
    }
    Ok(ZetaEvaluation {
        s,
        dim_cutoff,
        partial_sum: acc.total(),
        tail_bound: tail_bound(s, dim_cutoff),
        points_included: points,
    })
}

/// Residue of `zeta_su3` at `s = 2/3`: `2^(2/3) Gamma(1/3)^3 / (2 pi sqrt 3)`.
pub fn residue_su3() -> f64 {
    constants().residue_23.value
}

/// Residue at `s = 2/3` of the normalization `omega(s) = 2^(-s) zeta_su3(s)`.
pub fn residue_omega() -> f64 {
    2f64.powf(-2.0 / 3.0) * residue_su3()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_enumerated_cutoff_ten() {
        // The eight points with dimension <= 10 have dimensions
        // 1, 3, 3, 6, 6, 10, 10, 8; the sum is 18913/14400.
        let d = zeta_su3_direct(2.0, 10).unwrap();
        let r = zeta_su3_via_rho(2.0, 10).unwrap();
        assert_eq!(d.points_included, 8);
        assert_eq!(r.points_included, 8);
        assert!((d.partial_sum - 18913.0 / 14400.0).abs() < 1e-15);
        assert!((r.partial_sum - 18913.0 / 14400.0).abs() < 1e-15);
    }

    #[test]
    fn large_s_isolates_the_trivial_representation() {
        let v = zeta_su3_direct(60.0, 1000).unwrap();
        assert!((v.partial_sum - 1.0).abs() < 1e-20);
    }

    #[test]
    fn orders_agree() {
        for (s, cutoff) in [(1.0, 5000), (1.5, 20_000), (2.0, 10_000), (3.0, 777)] {
            let d = zeta_su3_direct(s, cutoff).unwrap();
            let r = zeta_su3_via_rho(s, cutoff).unwrap();
            assert_eq!(d.points_included, r.points_included);
            let tol = 1e3 * f64::EPSILON * d.partial_sum;
            assert!((d.partial_sum - r.partial_sum).abs() <= tol, "s = {s}");
        }
    }

    #[test]
    fn decreasing_in_s() {
        let mut prev = f64::INFINITY;
        for i in 0..20 {
            let v = zeta_su3_direct(1.0 + 0.25 * i as f64, 2000).unwrap().partial_sum;
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn nested_enclosures_at_s_two() {
        let small = zeta_su3_direct(2.0, 1_000).unwrap();
        let mid = zeta_su3_direct(2.0, 10_000).unwrap();
        assert!(small.partial_sum <= mid.partial_sum);
        assert!(mid.partial_sum <= small.upper());
        assert!(mid.tail_bound < 1e-3);
    }

    #[test]
    fn points_match_counting_function() {
        let v = zeta_su3_direct(1.0, 1_000_000).unwrap();
        assert_eq!(v.points_included, 37_946);
        assert!(v.tail_bound.is_finite() && v.tail_bound > 0.0);
    }

    #[test]
    fn parameter_checks() {
        assert!(matches!(zeta_su3_direct(0.9, 100), Err(Error::UnsupportedParameter(_))));
        assert!(matches!(zeta_su3_via_rho(f64::NAN, 100), Err(Error::UnsupportedParameter(_))));
        assert!(zeta_su3_direct(2.0, 0).is_err());
    }

    #[test]
    fn residues() {
        let c = constants();
        assert!((residue_su3() - 2.0 / 3.0 * c.c1.value).abs() < 1e-15);
        assert!((residue_su3() - 2.8044).abs() < 1e-4);
        assert!((residue_omega() - 1.766_638_750_285_45).abs() < 1e-14);
    }
}
