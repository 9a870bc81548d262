use num_bigint::BigInt;
use serde::Serialize;

/// A frozen high-precision constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constant {
    pub value: f64,
    /// Decimal expansion with at least 40 significant digits.
    pub decimal: &'static str,
    pub provenance: &'static str,
}

/// Closed-form constants of the two-term expansion
/// `S(x) = c1 x^(2/3) + c2 x^(1/2) + O(x^(1/3))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticConstants {
    /// `Gamma(1/3)`.
    pub gamma_one_third: Constant,
    /// `zeta(1/2)`.
    pub zeta_half: Constant,
    /// Euler-Mascheroni constant.
    pub euler_gamma: Constant,
    /// `2^(2/3) sqrt(3) Gamma(1/3)^3 / (4 pi)`.
    pub c1: Constant,
    /// `2^(3/2) zeta(1/2)`.
    pub c2: Constant,
    /// Residue of the su(3) Witten zeta function at `s = 2/3`,
    /// `2^(2/3) Gamma(1/3)^3 / (2 pi sqrt(3))`.
    pub residue_23: Constant,
}

const ORACLE: &str = "mpmath 1.3.0, mp.dps = 50";

// Generated with mpmath: gamma(mpf(1)/3), zeta(mpf(1)/2), +euler and the
// closed forms above evaluated at 50 digits.
static CONSTANTS: AsymptoticConstants = AsymptoticConstants {
    gamma_one_third: Constant {
        value: 2.678_938_534_707_747_6,
        decimal: "2.6789385347077476336556929409746776441286893779573",
        provenance: ORACLE,
    },
    zeta_half: Constant {
        value: -1.460_354_508_809_586_8,
        decimal: "-1.4603545088095868128894991525152980124672293310126",
        provenance: ORACLE,
    },
    euler_gamma: Constant {
        value: 0.577_215_664_901_532_9,
        decimal: "0.57721566490153286060651209008240243104215933593992",
        provenance: ORACLE,
    },
    c1: Constant {
        value: 4.206_546_315_976_363,
        decimal: "4.206546315976362783525057237150882406389066616272",
        provenance: ORACLE,
    },
    c2: Constant {
        value: -4.130_506_304_462_434,
        decimal: "-4.1305063044624343662735301335025070244539837522856",
        provenance: ORACLE,
    },
    residue_23: Constant {
        value: 2.804_364_210_650_908_5,
        decimal: "2.804364210650908522350038158100588270926044410848",
        provenance: ORACLE,
    },
};

pub fn constants() -> &'static AsymptoticConstants {
    &CONSTANTS
}

/// Parses a decimal literal into an integer scaled by `10^scale`, truncating
/// extra digits.
pub(crate) fn scaled_decimal(s: &str, scale: usize) -> BigInt {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let mut digits = String::with_capacity(int_part.len() + scale);
    digits.push_str(int_part);
    for i in 0..scale {
        digits.push(frac_part.as_bytes().get(i).map_or('0', |&b| b as char));
    }
    let v: BigInt = digits.parse().expect("decimal literal");
    if negative {
        -v
    } else {
        v
    }
}

impl AsymptoticConstants {
    /// Number of significant digits (to within one) on which `c1` and
    /// `(3/2) residue_23` agree, computed exactly on the decimal literals.
    pub fn tauberian_agreement_digits(&self) -> u32 {
        const SCALE: usize = 45;
        let c1 = scaled_decimal(self.c1.decimal, SCALE);
        let res = scaled_decimal(self.residue_23.decimal, SCALE);
        let diff: BigInt = &c1 * 2u8 - &res * 3u8;
        let diff = diff.magnitude().to_string();
        let reference: BigInt = &c1 * 2u8;
        let reference = reference.magnitude().to_string();
        if diff == "0" {
            return reference.len() as u32;
        }
        reference.len().saturating_sub(diff.len()) as u32
    }
}
