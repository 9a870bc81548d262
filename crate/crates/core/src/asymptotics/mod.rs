//! Two-term expansion of the summatory function and residual diagnostics.
//!
//! `S(x) = c1 x^(2/3) + c2 x^(1/2) + O(x^(1/3))` with
//! `c1 = 2^(2/3) sqrt(3) Gamma(1/3)^3 / (4 pi)` and `c2 = 2^(3/2) zeta(1/2)`.
//! The implied constant is not known, so the diagnostics report the scaled
//! residual `(S(x) - c1 x^(2/3) - c2 x^(1/2)) / x^(1/3)` and leave the
//! judgement of boundedness to the caller.

mod constants;
pub mod dd;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::lattice::{self, CountMethod, SummatoryRecord};
use crate::{Error, Result};

pub use constants::{constants, AsymptoticConstants, Constant};
use dd::DoubleDouble;

/// Above this `x` the residual is evaluated in double-double arithmetic.
pub const DOUBLE_DOUBLE_THRESHOLD: u64 = 1_000_000_000_000;

/// Arithmetic used to evaluate the main terms of a [`SummatoryRecord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Precision {
    Double,
    DoubleDouble,
}

impl Precision {
    pub fn for_x(x: u64) -> Self {
        if x > DOUBLE_DOUBLE_THRESHOLD {
            Precision::DoubleDouble
        } else {
            Precision::Double
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Precision::Double => "double",
            Precision::DoubleDouble => "double-double",
        }
    }
}

/// `(c1 x^(2/3), c2 x^(1/2))` in double precision.
pub fn main_term_parts(x: f64) -> Result<(f64, f64)> {
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::InvalidArgument(format!("main terms need x >= 1, got {x}")));
    }
    let c = constants();
    let cr = x.cbrt();
    Ok((c.c1.value * cr * cr, c.c2.value * x.sqrt()))
}

/// `c1 x^(2/3) + c2 x^(1/2)`.
pub fn main_terms(x: f64) -> Result<f64> {
    main_term_parts(x).map(|(a, b)| a + b)
}

/// Builds the diagnostic record for an exact count `S(x) = count`.
pub fn summatory_record(x: u64, count: u64, method: CountMethod) -> SummatoryRecord {
    let precision = Precision::for_x(x);
    let (main_term_23, main_term_12, residual, scaled_residual) = match precision {
        Precision::Double => {
            let xf = x as f64;
            let cr = xf.cbrt();
            let c = constants();
            let t23 = c.c1.value * cr * cr;
            let t12 = c.c2.value * xf.sqrt();
            let residual = (count as f64 - t23) - t12;
            (t23, t12, residual, residual / cr)
        }
        Precision::DoubleDouble => {
            let c = constants();
            let c1 = DoubleDouble::from_decimal(c.c1.decimal).expect("c1 literal");
            let c2 = DoubleDouble::from_decimal(c.c2.decimal).expect("c2 literal");
            let xd = DoubleDouble::from_u64(x);
            let cr = xd.cbrt();
            let t23 = c1 * cr * cr;
            let t12 = c2 * xd.sqrt();
            let residual = DoubleDouble::from_u64(count) - t23 - t12;
            (
                t23.to_f64(),
                t12.to_f64(),
                residual.to_f64(),
                (residual / cr).to_f64(),
            )
        }
    };
    SummatoryRecord {
        x,
        exact_count: count,
        main_term_23,
        main_term_12,
        residual,
        scaled_residual,
        method,
        precision,
    }
}

/// Exact counts and residuals for every `x` in a strictly increasing grid.
///
/// Grid points are processed in parallel; the output is in grid order.
pub fn residual_series(x_grid: &[u64], method: CountMethod) -> Result<Vec<SummatoryRecord>> {
    if let Some(w) = x_grid.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "grid must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    x_grid
        .par_iter()
        .map(|&x| {
            let count = lattice::summatory(x, method)?;
            Ok(summatory_record(x, count, method))
        })
        .collect()
}

/// `(D(x) - x ln x - (2 gamma - 1) x) / sqrt(x)` where `D` is the divisor
/// summatory function.
pub fn divisor_residual(x: u64) -> Result<f64> {
    let d = lattice::divisor_summatory(x)? as f64;
    let xf = x as f64;
    let gamma = constants().euler_gamma.value;
    Ok((d - xf * xf.ln() - (2.0 * gamma - 1.0) * xf) / xf.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_terms_examples() {
        let c = constants();
        let at_one = main_terms(1.0).unwrap();
        assert!((at_one - 0.076_040_011_513_928_42).abs() < 1e-14);
        let big = main_terms(1e6).unwrap();
        assert!((big - (c.c1.value * 1e4 + c.c2.value * 1e3)).abs() < 1e-9);
        assert!(main_terms(0.0).is_err());
        assert!(main_terms(f64::NAN).is_err());
    }

    #[test]
    fn main_terms_positive() {
        let mut x = 1.0;
        while x < 1e15 {
            assert!(main_terms(x).unwrap() > 0.0, "x = {x}");
            x *= 1.1;
        }
    }

    // Residuals below were evaluated with mpmath at 40 digits from the
    // exact counts.
    #[test]
    fn records_match_high_precision_residuals() {
        let cases = [
            (1u64, 1u64, 0.923_959_988_486_071_6),
            (10, 8, 1.536_749_403_475_348_6),
            (1_000_000, 37_946, 11.043_144_698_806_531),
            (10_000_000_000, 19_112_020, 12.222_135_385_656_285),
        ];
        for (x, s, expected) in cases {
            let r = summatory_record(x, s, CountMethod::Hyperbola);
            assert_eq!(r.precision, Precision::Double);
            assert!((r.residual - expected).abs() < 1e-5, "x = {x}: {}", r.residual);
            let xf = x as f64;
            assert!((r.scaled_residual - r.residual / xf.cbrt()).abs() < 1e-12);
            assert!((r.residual - (s as f64 - r.main_term_23 - r.main_term_12)).abs() < 1e-5);
        }
    }

    #[test]
    fn double_double_residual_at_top_of_range() {
        let r = summatory_record(1_000_000_000_000_000, 41_934_845_122, CountMethod::Hyperbola);
        assert_eq!(r.precision, Precision::DoubleDouble);
        assert!((r.residual - 40.354_234_228_729_884).abs() < 1e-9, "{}", r.residual);
        assert!((r.scaled_residual - 4.035_423_422_872_988e-4).abs() < 1e-14);
    }

    #[test]
    fn double_double_path_agrees_just_above_threshold() {
        // Force the double-double path by evaluating just above the switch
        // and compare against plain doubles.
        let x = DOUBLE_DOUBLE_THRESHOLD + 1;
        let count = lattice::summatory_hyperbola(x).unwrap();
        let r = summatory_record(x, count, CountMethod::Hyperbola);
        assert_eq!(r.precision, Precision::DoubleDouble);
        let (a, b) = main_term_parts(x as f64).unwrap();
        assert!((r.residual - (count as f64 - a - b)).abs() < 1e-3);
    }

    #[test]
    fn series_examples() {
        let rows = residual_series(&[1, 10, 100], CountMethod::Brute).unwrap();
        assert_eq!(rows.iter().map(|r| r.exact_count).collect::<Vec<_>>(), [1, 8, 50]);
        let c = constants();
        assert!((rows[0].residual - (1.0 - c.c1.value - c.c2.value)).abs() < 1e-14);
        assert!(residual_series(&[10, 10], CountMethod::Brute).is_err());
        assert!(residual_series(&[100, 10], CountMethod::Brute).is_err());
        assert!(residual_series(&[0, 10], CountMethod::Brute).is_err());
        assert!(residual_series(&[], CountMethod::Brute).unwrap().is_empty());
    }

    #[test]
    fn divisor_residual_examples() {
        assert!((divisor_residual(1).unwrap() - 0.845_568_670_196_934_3).abs() < 1e-14);
        assert!((divisor_residual(100).unwrap() - 0.603_984_842_088_429_1).abs() < 1e-12);
        assert!(divisor_residual(1_000_000).unwrap().abs() < 4.0);
    }
}
