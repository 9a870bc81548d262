//! Geometric grids of integer `x` values.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub x_min: u64,
    pub x_max: u64,
    pub points_per_decade: u32,
}

impl GridSpec {
    pub fn new(x_min: u64, x_max: u64, points_per_decade: u32) -> Result<Self> {
        if x_min == 0 || x_min >= x_max {
            return Err(Error::InvalidArgument(format!(
                "grid needs 1 <= x_min < x_max, got {x_min}..{x_max}"
            )));
        }
        if points_per_decade == 0 {
            return Err(Error::InvalidArgument("points per decade must be positive".into()));
        }
        Ok(Self { x_min, x_max, points_per_decade })
    }

    /// `x_min * 10^(i / points_per_decade)` rounded to integers, clipped to
    /// `x_max`, deduplicated. Always contains both endpoints.
    pub fn points(&self) -> Vec<u64> {
        let decades = (self.x_max as f64 / self.x_min as f64).log10();
        let steps = (decades * self.points_per_decade as f64 - 1e-9).ceil().max(1.0) as u64;
        let mut out = Vec::with_capacity(steps as usize + 1);
        for i in 0..=steps {
            let x = if i == steps {
                self.x_max
            } else {
                let v = self.x_min as f64 * 10f64.powf(i as f64 / self.points_per_decade as f64);
                (v.round() as u64).clamp(self.x_min, self.x_max)
            };
            if out.last().is_none_or(|&last| x > last) {
                out.push(x);
            }
        }
        out
    }
}

/// Parses an integer written either plainly or as `1e10` / `2.5e6`.
pub fn parse_count(s: &str) -> Result<u64> {
    let s = s.trim();
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let bad = || Error::InvalidArgument(format!("`{s}` is not a nonnegative integer"));
    let v: f64 = s.parse().map_err(|_| bad())?;
    if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 {
        Ok(v as u64)
    } else {
        Err(bad())
    }
}

/// `x_min:x_max:points_per_decade`, e.g. `1e2:1e10:25`.
impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, ppd] = parts[..] else {
            return Err(Error::InvalidArgument(format!(
                "grid spec must look like `x_min:x_max:points_per_decade`, got `{s}`"
            )));
        };
        let ppd = u32::try_from(parse_count(ppd)?)
            .map_err(|_| Error::InvalidArgument(format!("points per decade `{ppd}` too large")))?;
        GridSpec::new(parse_count(lo)?, parse_count(hi)?, ppd)
    }
}

/// One `x` per line; blank lines and `#` comments are skipped. The result
/// must be strictly increasing.
pub fn parse_grid_lines(text: &str) -> Result<Vec<u64>> {
    let xs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_count)
        .collect::<Result<Vec<_>>>()?;
    if let Some(w) = xs.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "grid file must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    Ok(xs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn default_acceptance_grid() {
        let g: GridSpec = "1e2:1e10:25".parse().unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 201);
        assert_eq!(pts[0], 100);
        assert_eq!(pts[25], 1000);
        assert_eq!(*pts.last().unwrap(), 10_000_000_000);
    }

    #[test]
    fn dedups_small_values() {
        let pts = GridSpec::new(1, 10, 50).unwrap().points();
        assert_eq!(pts, (1..=10).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_bad_specs() {
        assert!("10:10:5".parse::<GridSpec>().is_err());
        assert!("0:10:5".parse::<GridSpec>().is_err());
        assert!("1:10:0".parse::<GridSpec>().is_err());
        assert!("1:10".parse::<GridSpec>().is_err());
        assert!("1:1.5:3".parse::<GridSpec>().is_err());
    }

    #[test]
    fn grid_lines() {
        assert_eq!(parse_grid_lines("# x\n10\n\n1e3\n").unwrap(), [10, 1000]);
        assert!(parse_grid_lines("10\n10\n").is_err());
        assert!(parse_grid_lines("ten\n").is_err());
    }

    proptest! {
        #[test]
        fn strictly_increasing_with_endpoints(lo in 1u64..1_000_000, span in 2u64..1_000_000, ppd in 1u32..40) {
            let hi = lo.saturating_mul(span);
            let pts = GridSpec::new(lo, hi, ppd).unwrap().points();
            prop_assert_eq!(pts[0], lo);
            prop_assert_eq!(*pts.last().unwrap(), hi);
            prop_assert!(pts.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
