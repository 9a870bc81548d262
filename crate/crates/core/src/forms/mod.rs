//! Lattice-point counts under homogeneous integer-valued binary forms.
//!
//! A form is `p(m, n) = sum_i a_i m^(d-i) n^i / D` with nonnegative integer
//! coefficients. The su(3) dimension `mn(m+n)/2` and the so(5) dimension
//! `mn(m+n)(m+2n)/6` are the two presets. Nonnegative coefficients make `p`
//! increasing in each variable, so each column height is found by binary
//! search.

mod fit;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use fit::{exponent_fit, fit_log_log, ExponentFit};

/// The integer-valuedness certificate costs `(2D + d)^2` evaluations.
pub const MAX_DENOMINATOR: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousForm {
    degree: u32,
    coefficients: Vec<u64>,
    denominator: u64,
    name: String,
}

/// Validates and builds a form.
///
/// Integer-valuedness is certified on `1 <= m, n <= 2D + d`: the numerator
/// modulo `D` is periodic in each variable with period dividing `D`.
pub fn make_form(
    degree: u32,
    coefficients: &[i64],
    denominator: u64,
    name: &str,
) -> Result<HomogeneousForm> {
    if degree == 0 {
        return Err(Error::InvalidForm("degree must be positive".into()));
    }
    if coefficients.len() != degree as usize + 1 {
        return Err(Error::InvalidForm(format!(
            "degree {degree} needs {} coefficients, got {}",
            degree + 1,
            coefficients.len()
        )));
    }
    if let Some((i, &a)) = coefficients.iter().enumerate().find(|(_, &a)| a < 0) {
        return Err(Error::UnsupportedParameter(format!(
            "negative coefficient a_{i} = {a}; only nonnegative forms are monotone"
        )));
    }
    if coefficients.iter().all(|&a| a == 0) {
        return Err(Error::InvalidForm("all coefficients are zero".into()));
    }
    // p(1, n) is unbounded only if some monomial contains n, and likewise m.
    let d = degree as usize;
    if coefficients[1..].iter().all(|&a| a == 0) || coefficients[..d].iter().all(|&a| a == 0) {
        return Err(Error::InvalidForm(
            "form must involve both variables, otherwise the count is infinite".into(),
        ));
    }
    if denominator == 0 || denominator > MAX_DENOMINATOR {
        return Err(Error::InvalidForm(format!(
            "denominator must be in 1..={MAX_DENOMINATOR}, got {denominator}"
        )));
    }
    let form = HomogeneousForm {
        degree,
        coefficients: coefficients.iter().map(|&a| a as u64).collect(),
        denominator,
        name: name.to_string(),
    };
    let limit = 2 * denominator + degree as u64;
    for m in 1..=limit {
        for n in 1..=limit {
            if form.numerator_mod(m, n, denominator) != 0 {
                return Err(Error::InvalidForm(format!(
                    "numerator at (m, n) = ({m}, {n}) is not divisible by {denominator}"
                )));
            }
        }
    }
    Ok(form)
}

impl HomogeneousForm {
    /// `mn(m+n)/2`.
    pub fn su3() -> Self {
        make_form(3, &[0, 1, 1, 0], 2, "su3").expect("su3 preset is valid")
    }

    /// `mn(m+n)(m+2n)/6 = (m^3 n + 3 m^2 n^2 + 2 m n^3)/6`.
    pub fn so5() -> Self {
        make_form(4, &[0, 1, 3, 2, 0], 6, "so5").expect("so5 preset is valid")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "su3" => Some(Self::su3()),
            "so5" => Some(Self::so5()),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `p(n, m)` as a form in `(m, n)`.
    pub fn transposed(&self) -> Self {
        let mut coefficients = self.coefficients.clone();
        coefficients.reverse();
        Self {
            degree: self.degree,
            coefficients,
            denominator: self.denominator,
            name: format!("{}^T", self.name),
        }
    }

    fn numerator_mod(&self, m: u64, n: u64, modulus: u64) -> u64 {
        let md = modulus as u128;
        let (m, n) = (m as u128 % md, n as u128 % md);
        let d = self.degree as usize;
        let mut acc = 0u128;
        for (i, &a) in self.coefficients.iter().enumerate() {
            let mut term = a as u128 % md;
            for _ in 0..d - i {
                term = term * m % md;
            }
            for _ in 0..i {
                term = term * n % md;
            }
            acc = (acc + term) % md;
        }
        acc as u64
    }

    /// `sum_i a_i m^(d-i) n^i`, or `None` on `u128` overflow.
    pub fn numerator(&self, m: u64, n: u64) -> Option<u128> {
        let d = self.degree as usize;
        let (m, n) = (m as u128, n as u128);
        let mut acc = 0u128;
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let term = m
                .checked_pow((d - i) as u32)?
                .checked_mul(n.checked_pow(i as u32)?)?
                .checked_mul(a as u128)?;
            acc = acc.checked_add(term)?;
        }
        Some(acc)
    }

    /// `p(m, n)`, exact.
    pub fn evaluate(&self, m: u64, n: u64) -> Result<u64> {
        let num = self.numerator(m, n).ok_or(Error::Overflow("form numerator"))?;
        u64::try_from(num / self.denominator as u128).map_err(|_| Error::Overflow("form value"))
    }

    fn within(&self, m: u64, n: u64, bound: u128) -> bool {
        self.numerator(m, n).is_some_and(|v| v <= bound)
    }

    /// Largest `v >= 0` with `pred(v)`, for a predicate that holds on an
    /// initial segment of the naturals. `pred(0)` is taken as true and never
    /// evaluated.
    fn last_true(pred: impl Fn(u64) -> bool) -> u64 {
        let mut hi = 1u64;
        while pred(hi) {
            hi = hi.checked_mul(2).expect("monotone search overflow");
        }
        let mut lo = hi / 2;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if pred(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        write!(f, "{}:{}:{}", self.degree, self.denominator, coeffs.join(","))
    }
}

/// Accepts a preset name (`su3`, `so5`) or `d:D:a_0,a_1,...,a_d`.
impl FromStr for HomogeneousForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(form) = Self::preset(s) {
            return Ok(form);
        }
        let bad = || Error::InvalidForm(format!("expected `d:D:a_0,...,a_d` or a preset, got `{s}`"));
        let mut parts = s.split(':');
        let (Some(d), Some(den), Some(coeffs), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(bad());
        };
        let degree: u32 = d.trim().parse().map_err(|_| bad())?;
        let denominator: u64 = den.trim().parse().map_err(|_| bad())?;
        let coefficients = coeffs
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        make_form(degree, &coefficients, denominator, s)
    }
}

/// Number of `(m, n)` with `m, n >= 1` and `p(m, n) <= x`.
pub fn count_under(form: &HomogeneousForm, x: u64) -> Result<u64> {
    if x == 0 {
        return Err(Error::OutOfRange { name: "x", value: 0, min: 1, max: u64::MAX });
    }
    let bound = (form.denominator as u128)
        .checked_mul(x as u128)
        .ok_or(Error::Overflow("D * x"))?;
    if !form.within(1, 1, bound) {
        return Ok(0);
    }
    let m_max = HomogeneousForm::last_true(|m| form.within(m, 1, bound));
    let total = (1..=m_max)
        .into_par_iter()
        .map(|m| HomogeneousForm::last_true(|n| form.within(m, n, bound)))
        .sum();
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{dim_su3, summatory_brute};
    use proptest::prelude::*;

    fn double_loop(form: &HomogeneousForm, x: u64) -> u64 {
        let mut c = 0;
        for m in 1..=x {
            for n in 1..=x {
                if form.evaluate(m, n).unwrap() <= x {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn presets() {
        let su3 = HomogeneousForm::su3();
        assert_eq!(su3.evaluate(1, 2).unwrap(), 3);
        let so5 = HomogeneousForm::so5();
        assert_eq!(so5.evaluate(1, 1).unwrap(), 1);
        for m in 1..20 {
            for n in 1..20 {
                assert_eq!(su3.evaluate(m, n).unwrap(), dim_su3(m, n).unwrap().value());
                assert_eq!(so5.evaluate(m, n).unwrap(), m * n * (m + n) * (m + 2 * n) / 6);
            }
        }
    }

    #[test]
    fn invalid_forms() {
        assert!(matches!(make_form(3, &[0, 1, 1, 0], 5, "bad"), Err(Error::InvalidForm(_))));
        assert!(matches!(make_form(3, &[0, 1, -1, 0], 1, "neg"), Err(Error::UnsupportedParameter(_))));
        assert!(matches!(make_form(2, &[0, 0, 0], 1, "zero"), Err(Error::InvalidForm(_))));
        assert!(matches!(make_form(2, &[1, 1], 1, "short"), Err(Error::InvalidForm(_))));
        assert!(matches!(make_form(0, &[1], 1, "const"), Err(Error::InvalidForm(_))));
        assert!(matches!(make_form(2, &[3, 0, 0], 1, "m only"), Err(Error::InvalidForm(_))));
        assert!(matches!(make_form(3, &[0, 0, 0, 1], 1, "n only"), Err(Error::InvalidForm(_))));
        assert!(matches!(make_form(2, &[1, 0, 1], 0, "den"), Err(Error::InvalidForm(_))));
        // m^2 + mn is odd at (1, 2).
        assert!(make_form(2, &[1, 1, 0], 2, "m(m+n)/2").is_err());
        assert!(make_form(2, &[1, 0, 1], 1, "m^2+n^2").is_ok());
    }

    #[test]
    fn parse_forms() {
        let f: HomogeneousForm = "3:2:0,1,1,0".parse().unwrap();
        assert_eq!(f.coefficients(), HomogeneousForm::su3().coefficients());
        assert_eq!(f.to_string(), "3:2:0,1,1,0");
        let so5: HomogeneousForm = "so5".parse().unwrap();
        assert_eq!(so5.degree(), 4);
        assert_eq!(so5.denominator(), 6);
        assert!("3:2".parse::<HomogeneousForm>().is_err());
        assert!("3:2:0,1,x,0".parse::<HomogeneousForm>().is_err());
        assert!("3:2:0,1,1,0:9".parse::<HomogeneousForm>().is_err());
        assert!("3:5:0,1,1,0".parse::<HomogeneousForm>().is_err());
    }

    #[test]
    fn count_examples() {
        let su3 = HomogeneousForm::su3();
        let so5 = HomogeneousForm::so5();
        assert_eq!(count_under(&su3, 10).unwrap(), 8);
        assert_eq!(count_under(&so5, 1).unwrap(), 1);
        assert_eq!(count_under(&so5, 100).unwrap(), 18);
        assert_eq!(count_under(&so5, 10_000).unwrap(), 254);
        assert_eq!(count_under(&so5, 100).unwrap(), double_loop(&so5, 100));
        assert_eq!(count_under(&so5, 100_000_000).unwrap(), 30_639);
        assert_eq!(count_under(&so5, 1_600_000_000).unwrap(), 124_739);
        assert_eq!(count_under(&so5, 10_000_000_000).unwrap(), 314_295);
        assert!(count_under(&so5, 0).is_err());
    }

    #[test]
    fn form_with_no_points() {
        let f = make_form(2, &[5, 0, 5], 1, "5(m^2+n^2)").unwrap();
        assert_eq!(count_under(&f, 9).unwrap(), 0);
        assert_eq!(count_under(&f, 10).unwrap(), 1);
    }

    #[test]
    fn su3_matches_lattice_core() {
        let su3 = HomogeneousForm::su3();
        for x in (1..3000).chain([10_000, 123_456, 1_000_000]) {
            assert_eq!(count_under(&su3, x).unwrap(), summatory_brute(x).unwrap(), "x = {x}");
        }
    }

    #[test]
    fn scaling_law() {
        for form in [HomogeneousForm::su3(), HomogeneousForm::so5()] {
            let x = 100_000_000u64;
            let big = x * 2u64.pow(form.degree());
            let ratio = count_under(&form, big).unwrap() as f64 / count_under(&form, x).unwrap() as f64;
            assert!((ratio / 4.0 - 1.0).abs() < 0.05, "{}: {ratio}", form.name());
        }
    }

    proptest! {
        #[test]
        fn transposition_preserves_counts(
            a in proptest::collection::vec(0i64..4, 4),
            x in 1u64..5000,
        ) {
            prop_assume!(a[1..].iter().any(|&c| c > 0) && a[..3].iter().any(|&c| c > 0));
            let f = make_form(3, &a, 1, "f").unwrap();
            prop_assert_eq!(count_under(&f, x).unwrap(), count_under(&f.transposed(), x).unwrap());
        }

        #[test]
        fn matches_double_loop(a in proptest::collection::vec(0i64..5, 3), x in 1u64..400) {
            prop_assume!(a[1..].iter().any(|&c| c > 0) && a[..2].iter().any(|&c| c > 0));
            let f = make_form(2, &a, 1, "g").unwrap();
            prop_assert_eq!(count_under(&f, x).unwrap(), double_loop(&f, x));
        }
    }
}
