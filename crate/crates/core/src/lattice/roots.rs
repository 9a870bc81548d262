//! Integer square and cube roots by Newton iteration.

/// `floor(sqrt(n))`.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // Start above the root so the iteration decreases monotonically.
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    while square_exceeds(x, n) {
        x -= 1;
    }
    while !square_exceeds(x + 1, n) {
        x += 1;
    }
    x
}

fn square_exceeds(x: u128, n: u128) -> bool {
    x.checked_mul(x).is_none_or(|sq| sq > n)
}

/// `floor(cbrt(n))`.
pub fn icbrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(3);
    loop {
        let y = (2 * x + n / (x * x)) / 3;
        if y >= x {
            break;
        }
        x = y;
    }
    while cube_exceeds(x, n) {
        x -= 1;
    }
    while !cube_exceeds(x + 1, n) {
        x += 1;
    }
    x
}

fn cube_exceeds(x: u128, n: u128) -> bool {
    match x.checked_mul(x).and_then(|sq| sq.checked_mul(x)) {
        Some(c) => c > n,
        None => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        let sq: Vec<u128> = (0..17).map(isqrt).collect();
        assert_eq!(sq, [0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 4]);
        let cb: Vec<u128> = (0..28).map(icbrt).collect();
        assert_eq!(&cb[..9], &[0, 1, 1, 1, 1, 1, 1, 1, 2]);
        assert_eq!(cb[26], 2);
        assert_eq!(cb[27], 3);
    }

    #[test]
    fn perfect_powers_and_neighbours() {
        for r in [2u128, 10, 999, 100_000, 1_000_000, 2_097_151, 4_294_967_295] {
            assert_eq!(isqrt(r * r), r);
            assert_eq!(isqrt(r * r - 1), r - 1);
            assert_eq!(isqrt(r * r + 2 * r), r);
            assert_eq!(icbrt(r * r * r), r);
            assert_eq!(icbrt(r * r * r - 1), r - 1);
        }
        assert_eq!(isqrt(u128::MAX), u64::MAX as u128);
        assert_eq!(icbrt(u128::MAX), 6_981_463_658_331);
        assert_eq!(icbrt(1_000_000_000_000_000), 100_000);
    }

    proptest! {
        #[test]
        fn roots_bracket(n in any::<u64>()) {
            let n = n as u128;
            let s = isqrt(n);
            prop_assert!(s * s <= n && (s + 1) * (s + 1) > n);
            let c = icbrt(n);
            prop_assert!(c * c * c <= n && (c + 1) * (c + 1) * (c + 1) > n);
        }
    }
}
