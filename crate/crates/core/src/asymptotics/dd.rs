//! Double-double arithmetic (about 32 significant digits).

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const fn from_f64(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }

    pub fn from_u64(v: u64) -> Self {
        let hi = v as f64;
        let lo = (v as i128 - hi as i128) as f64;
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }

    /// Parses a plain decimal literal such as `-4.1305063044624343662735`.
    /// Digits beyond the 32nd significant one are ignored.
    pub fn from_decimal(s: &str) -> Option<Self> {
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        let mut acc = Self::default();
        let mut significant = 0usize;
        let mut scale = 0i32;
        for (i, ch) in int_part.chars().chain(frac_part.chars()).enumerate() {
            let d = ch.to_digit(10)?;
            let in_fraction = i >= int_part.len();
            if significant >= 32 {
                if !in_fraction {
                    scale -= 1;
                }
                continue;
            }
            acc = acc * 10.0 + Self::from_f64(d as f64);
            if significant > 0 || d != 0 {
                significant += 1;
            }
            if in_fraction {
                scale += 1;
            }
        }
        let mut pow = Self::from_f64(1.0);
        for _ in 0..scale.unsigned_abs() {
            pow = pow * 10.0;
        }
        let v = if scale >= 0 { acc / pow } else { acc * pow };
        Some(if negative { -v } else { v })
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::default();
        }
        let y = Self::from_f64(self.hi.sqrt());
        y + (self - y * y) / (y * 2.0)
    }

    pub fn cbrt(self) -> Self {
        if self.hi == 0.0 {
            return Self::default();
        }
        let y = Self::from_f64(self.hi.cbrt());
        y - (y * y * y - self) / (y * y * 3.0)
    }
}

impl Add for DoubleDouble {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;

    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;

    fn mul(self, rhs: f64) -> Self {
        let (p, e) = two_prod(self.hi, rhs);
        let (hi, lo) = quick_two_sum(p, e + self.lo * rhs);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * q1;
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * q2;
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo } + Self::from_f64(q3)
    }
}
