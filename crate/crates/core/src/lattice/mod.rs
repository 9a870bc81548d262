//! Exact integer counting of su(3) representation dimensions.
//!
//! The number of irreducible representations of dimension `n` is
//! `rho(n) = #{(j, k) : j, k >= 1, jk(j+k)/2 = n}`, and its summatory
//! function `S(x) = sum_{n <= x} rho(n)` is the number of lattice points
//! `(m, n)` in the positive quadrant with `mn(m+n) <= 2x`. Two independent
//! counting routes are provided: a point-by-point scan and the hyperbola
//! method, which sums column heights up to `floor(cbrt(x))` on both axes and
//! removes the doubly counted square.
//!
//! Everything here is exact: products are formed in `u128` and curve
//! heights come from integer binary search, never from floating-point roots.

mod genfn;
pub mod roots;

use serde::{Deserialize, Serialize};

use crate::asymptotics::Precision;
use crate::{Error, Result, MAX_X};

pub use genfn::rep_count_r;
use roots::{icbrt, isqrt};

/// Default cap on the number of lattice points visited by [`summatory_brute`].
pub const DEFAULT_BRUTE_CAP: u64 = 100_000_000;

/// Dimension `jk(j+k)/2` of the irreducible representation `W_{j,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Dimension(u64);

impl Dimension {
    pub fn value(self) -> u64 {
        self.0
    }
}

impl From<Dimension> for u64 {
    fn from(d: Dimension) -> u64 {
        d.0
    }
}

/// A lattice point `(j, k)` together with its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticePoint {
    pub j: u64,
    pub k: u64,
    pub dim: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Brute,
    Hyperbola,
}

impl CountMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CountMethod::Brute => "brute",
            CountMethod::Hyperbola => "hyperbola",
        }
    }
}

impl std::str::FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(CountMethod::Brute),
            "hyperbola" => Ok(CountMethod::Hyperbola),
            other => Err(Error::InvalidArgument(format!("unknown count method `{other}`"))),
        }
    }
}

/// One row of residual diagnostics for the two-term expansion of `S(x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummatoryRecord {
    pub x: u64,
    pub exact_count: u64,
    /// `c1 * x^(2/3)`.
    pub main_term_23: f64,
    /// `c2 * x^(1/2)`.
    pub main_term_12: f64,
    /// `exact_count - main_term_23 - main_term_12`.
    pub residual: f64,
    /// `residual * x^(-1/3)`.
    pub scaled_residual: f64,
    pub method: CountMethod,
    pub precision: Precision,
}

fn check_x(name: &'static str, x: u64) -> Result<()> {
    if (1..=MAX_X).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value: x, min: 1, max: MAX_X })
    }
}

/// `jk(j+k)/2`, exact.
pub fn dim_su3(j: u64, k: u64) -> Result<Dimension> {
    if j == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!("dim_su3 needs j, k >= 1, got ({j}, {k})")));
    }
    let (j, k) = (j as u128, k as u128);
    let twice = j
        .checked_add(k)
        .and_then(|s| s.checked_mul(j))
        .and_then(|p| p.checked_mul(k))
        .ok_or(Error::Overflow("jk(j+k)"))?;
    // One of j, k, j+k is always even.
    debug_assert_eq!(twice % 2, 0);
    u64::try_from(twice / 2)
        .map(Dimension)
        .map_err(|_| Error::Overflow("jk(j+k)/2"))
}

/// `m * n * (m + n)` if it does not exceed `bound`, `None` otherwise.
#[inline]
fn cubic_within(m: u128, n: u128, bound: u128) -> bool {
    m.checked_mul(n)
        .and_then(|p| p.checked_mul(m + n))
        .is_some_and(|v| v <= bound)
}

/// Largest `n >= 0` with `m n (m + n) <= 2x`.
///
/// Equal to `floor((-m^2 + sqrt(m^4 + 8mx)) / (2m))`, but found by binary
/// search on the cubic so the result is exact for every input.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn max_n_for_m(m: u64, x: u64) -> u64 {
    assert!(m >= 1, "max_n_for_m requires m >= 1");
    let m = m as u128;
    let bound = 2 * x as u128;
    // m n^2 <= 2x bounds the answer from above.
    let mut lo = 0u128;
    let mut hi = isqrt(bound / m) + 1;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if cubic_within(m, mid, bound) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo as u64
}

/// Number of ordered pairs `(j, k)` with `jk(j+k)/2 = n`.
pub fn rho(n: u64) -> Result<u64> {
    check_x("n", n)?;
    let target = 2 * n as u128;
    let mut count = 0;
    // With j <= k, 2j^3 <= jk(j+k) = 2n.
    let mut j = 1u64;
    while (j as u128).pow(3) <= n as u128 {
        let k = max_n_for_m(j, n);
        if k >= j && (j as u128) * (k as u128) * (j as u128 + k as u128) == target {
            count += if k == j { 1 } else { 2 };
        }
        j += 1;
    }
    Ok(count)
}

/// `rho(n)` for every `0 <= n <= n_max`, by one sweep over the lattice.
pub fn rho_table(n_max: u64) -> Result<Vec<u64>> {
    let mut table = vec![0u64; n_max as usize + 1];
    if n_max == 0 {
        return Ok(table);
    }
    for p in points_up_to(n_max)? {
        table[p.dim as usize] += 1;
    }
    Ok(table)
}

/// Iterator over all lattice points with `jk(j+k)/2 <= x`, in `(j, k)`
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct LatticePoints {
    x: u64,
    j: u64,
    k: u64,
    k_max: u64,
}

impl Iterator for LatticePoints {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        while self.k >= self.k_max {
            self.j += 1;
            self.k = 0;
            self.k_max = max_n_for_m(self.j, self.x);
            if self.k_max == 0 {
                return None;
            }
        }
        self.k += 1;
        let (j, k) = (self.j as u128, self.k as u128);
        let dim = (j * k * (j + k) / 2) as u64;
        Some(LatticePoint { j: self.j, k: self.k, dim })
    }
}

pub fn points_up_to(x: u64) -> Result<LatticePoints> {
    check_x("x", x)?;
    Ok(LatticePoints { x, j: 0, k: 0, k_max: 0 })
}

/// `S(x)` by visiting every lattice point, capped at [`DEFAULT_BRUTE_CAP`].
pub fn summatory_brute(x: u64) -> Result<u64> {
    summatory_brute_capped(x, DEFAULT_BRUTE_CAP)
}

/// `S(x)` by scanning each column `n = 1, 2, ...` until the curve
/// `mn(m+n) = 2x` is crossed. Fails once more than `cap` points are seen.
pub fn summatory_brute_capped(x: u64, cap: u64) -> Result<u64> {
    check_x("x", x)?;
    let bound = 2 * x as u128;
    let mut count = 0u64;
    let mut m = 1u128;
    while cubic_within(m, 1, bound) {
        let mut n = 1u128;
        while cubic_within(m, n, bound) {
            count += 1;
            n += 1;
        }
        if count > cap {
            return Err(Error::BudgetExceeded { cap });
        }
        m += 1;
    }
    Ok(count)
}

/// `S(x) = 2 * sum_{n <= q} h(n) - q^2` with `q = floor(cbrt(x))` and
/// `h(n) = max_n_for_m(n, x)`.
///
/// Every point off the `q x q` square has `min(m, n) <= q`, because
/// `m, n >= q + 1` forces `mn(m+n) >= 2(q+1)^3 > 2x`.
pub fn summatory_hyperbola(x: u64) -> Result<u64> {
    check_x("x", x)?;
    let q = icbrt(x as u128) as u64;
    let strips: u64 = (1..=q).map(|n| max_n_for_m(n, x)).sum();
    Ok(2 * strips - q * q)
}

pub fn summatory(x: u64, method: CountMethod) -> Result<u64> {
    match method {
        CountMethod::Brute => summatory_brute(x),
        CountMethod::Hyperbola => summatory_hyperbola(x),
    }
}

/// `sum_{n <= x} d(n)` by the classical hyperbola method.
pub fn divisor_summatory(x: u64) -> Result<u64> {
    check_x("x", x)?;
    let s = isqrt(x as u128) as u64;
    let strips: u64 = (1..=s).map(|n| x / n).sum();
    Ok(2 * strips - s * s)
}
