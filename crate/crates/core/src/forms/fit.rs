use serde::{Deserialize, Serialize};

use super::{count_under, HomogeneousForm};
use crate::{Error, Result};

/// Least-squares line through `(ln x, ln count)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub grid: Vec<(u64, u64)>,
}

/// Ordinary least squares `y = slope * x + intercept`, returning
/// `(slope, intercept, r_squared)`.
pub fn fit_log_log(points: &[(f64, f64)]) -> Result<(f64, f64, f64)> {
    if points.len() < 2 {
        return Err(Error::DegenerateFit(format!("need at least 2 points, got {}", points.len())));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateFit("all abscissae coincide".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0) };
    Ok((slope, intercept, r_squared))
}

/// Fits the growth exponent of `count_under(form, x)` over a grid.
///
/// For a form of degree `d` homogeneity predicts slope `2/d`.
pub fn exponent_fit(form: &HomogeneousForm, x_grid: &[u64]) -> Result<ExponentFit> {
    if x_grid.len() < 10 {
        return Err(Error::DegenerateFit(format!(
            "need at least 10 grid points, got {}",
            x_grid.len()
        )));
    }
    if x_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::DegenerateFit("grid must be strictly increasing".into()));
    }
    let grid = x_grid
        .iter()
        .map(|&x| count_under(form, x).map(|c| (x, c)))
        .collect::<Result<Vec<_>>>()?;
    if grid[0].1 < 10 {
        return Err(Error::DegenerateFit(format!(
            "count at smallest x = {} is {}, need at least 10",
            grid[0].0, grid[0].1
        )));
    }
    let logs: Vec<(f64, f64)> = grid
        .iter()
        .map(|&(x, c)| ((x as f64).ln(), (c as f64).ln()))
        .collect();
    let (slope, intercept, r_squared) = fit_log_log(&logs)?;
    Ok(ExponentFit { slope, intercept, r_squared, grid })
}
