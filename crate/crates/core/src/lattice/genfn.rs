use num_bigint::BigUint;

use super::rho_table;

/// Coefficients `r(0..=n_max)` of `prod_{j,k >= 1} 1 / (1 - q^{jk(j+k)/2})`,
/// the number of (not necessarily irreducible) su(3) representations of each
/// dimension.
///
/// Each dimension `d` contributes the factor `(1 - q^d)^{-rho(d)}`, applied
/// as `rho(d)` passes of the in-place geometric-series update.
pub fn rep_count_r(n_max: usize) -> Vec<BigUint> {
    let mut coeffs = vec![BigUint::from(0u8); n_max + 1];
    coeffs[0] = BigUint::from(1u8);
    if n_max == 0 {
        return coeffs;
    }
    let rho = rho_table(n_max as u64).expect("n_max within counting range");
    for (d, &mult) in rho.iter().enumerate().skip(1) {
        for _ in 0..mult {
            for i in d..=n_max {
                let (low, high) = coeffs.split_at_mut(i);
                high[0] += &low[i - d];
            }
        }
    }
    coeffs
}
