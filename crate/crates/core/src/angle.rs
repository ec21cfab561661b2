//! Exact rotation angles of the form `num * pi / (den_base * 2^den_exp)`.
//!
//! Angles are never reduced modulo 2*pi: global-phase bookkeeping needs the
//! unreduced value. Floating point appears only in [`ExactAngle::to_f64`].

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Index, Neg};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Canonical form: `den_base` is odd, `gcd(num, den_base) = 1`, `num` is odd
/// whenever `den_exp > 0`, and zero is stored as `0 / (1 * 2^0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactAngle {
    num: BigInt,
    den_base: u64,
    den_exp: u32,
}

impl ExactAngle {
    pub fn zero() -> Self {
        ExactAngle {
            num: BigInt::zero(),
            den_base: 1,
            den_exp: 0,
        }
    }

    pub fn pi() -> Self {
        ExactAngle {
            num: BigInt::one(),
            den_base: 1,
            den_exp: 0,
        }
    }

    /// `num * pi / (den_base * 2^den_exp)`, brought to canonical form.
    pub fn new(num: impl Into<BigInt>, den_base: u64, den_exp: u32) -> Result<Self> {
        Self::canonical(num.into(), den_base, den_exp)
    }

    /// `num * pi / den`.
    pub fn frac_pi(num: impl Into<BigInt>, den: u64) -> Result<Self> {
        Self::canonical(num.into(), den, 0)
    }

    /// `num * pi / den` for an arbitrary-precision denominator whose odd part fits in `u64`.
    pub fn frac_pi_big(num: impl Into<BigInt>, den: &BigInt) -> Result<Self> {
        if !den.is_positive() {
            return Err(Error::ZeroDenominator);
        }
        let twos = den.trailing_zeros().unwrap_or(0);
        let den_exp = u32::try_from(twos).map_err(|_| Error::AngleOverflow)?;
        let odd = (den >> twos).to_u64().ok_or(Error::AngleOverflow)?;
        Self::canonical(num.into(), odd, den_exp)
    }

    fn canonical(mut num: BigInt, mut den_base: u64, mut den_exp: u32) -> Result<Self> {
        if den_base == 0 {
            return Err(Error::ZeroDenominator);
        }
        let base_twos = den_base.trailing_zeros();
        den_base >>= base_twos;
        den_exp = den_exp.checked_add(base_twos).ok_or(Error::AngleOverflow)?;
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let num_twos = num.trailing_zeros().unwrap_or(0);
        let shared = num_twos.min(u64::from(den_exp));
        num >>= shared;
        den_exp -= shared as u32;
        let g = num.gcd(&BigInt::from(den_base));
        if !g.is_one() {
            num /= &g;
            den_base /= g.to_u64().ok_or(Error::AngleOverflow)?;
        }
        Ok(ExactAngle {
            num,
            den_base,
            den_exp,
        })
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn den_base(&self) -> u64 {
        self.den_base
    }

    pub fn den_exp(&self) -> u32 {
        self.den_exp
    }

    /// Full denominator `den_base * 2^den_exp`.
    pub fn denominator(&self) -> BigInt {
        BigInt::from(self.den_base) << self.den_exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn abs(&self) -> Self {
        ExactAngle {
            num: self.num.abs(),
            den_base: self.den_base,
            den_exp: self.den_exp,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Result<Self> {
        let g = self.den_base.gcd(&other.den_base);
        let base = (self.den_base / g)
            .checked_mul(other.den_base)
            .ok_or(Error::AngleOverflow)?;
        let exp = self.den_exp.max(other.den_exp);
        let lhs = (&self.num * BigInt::from(base / self.den_base)) << (exp - self.den_exp);
        let rhs = (&other.num * BigInt::from(base / other.den_base)) << (exp - other.den_exp);
        let num = if subtract { lhs - rhs } else { lhs + rhs };
        Self::canonical(num, base, exp)
    }

    /// Divides by `2^k`.
    pub fn div_pow2(&self, k: u32) -> Result<Self> {
        let exp = self.den_exp.checked_add(k).ok_or(Error::AngleOverflow)?;
        Self::canonical(self.num.clone(), self.den_base, exp)
    }

    pub fn half(&self) -> Result<Self> {
        self.div_pow2(1)
    }

    /// Multiplies by an integer.
    pub fn scale(&self, factor: impl Into<BigInt>) -> Result<Self> {
        Self::canonical(&self.num * factor.into(), self.den_base, self.den_exp)
    }

    /// `(self + other) / 2`.
    pub fn half_sum(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)?.half()
    }

    /// `(self - other) / 2`.
    pub fn half_diff(&self, other: &Self) -> Result<Self> {
        self.checked_sub(other)?.half()
    }

    /// Value in radians.
    pub fn to_f64(&self) -> f64 {
        let num = self.num.to_f64().unwrap_or(f64::NAN);
        let scale = Float::powi(2.0_f64, -(self.den_exp.min(i32::MAX as u32) as i32));
        num * core::f64::consts::PI * scale / self.den_base as f64
    }

    /// True when the angle is an integer multiple of `k * pi`.
    pub fn is_multiple_of_pi(&self, k: u64) -> bool {
        self.den_base == 1 && self.den_exp == 0 && (&self.num % BigInt::from(k)).is_zero()
    }
}

/// `(a + b) / 2`.
pub fn angle_half_sum(a: &ExactAngle, b: &ExactAngle) -> Result<ExactAngle> {
    a.half_sum(b)
}

/// `(a - b) / 2`.
pub fn angle_half_diff(a: &ExactAngle, b: &ExactAngle) -> Result<ExactAngle> {
    a.half_diff(b)
}

impl Default for ExactAngle {
    fn default() -> Self {
        Self::zero()
    }
}

impl Neg for ExactAngle {
    type Output = ExactAngle;

    fn neg(self) -> ExactAngle {
        ExactAngle {
            num: -self.num,
            den_base: self.den_base,
            den_exp: self.den_exp,
        }
    }
}

impl Neg for &ExactAngle {
    type Output = ExactAngle;

    fn neg(self) -> ExactAngle {
        -self.clone()
    }
}

impl Ord for ExactAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = (&self.num * BigInt::from(other.den_base)) << other.den_exp;
        let rhs = (&other.num * BigInt::from(self.den_base)) << self.den_exp;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for ExactAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formats as `0`, `pi`, `-3*pi/28` and so on.
impl fmt::Display for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            return f.write_str("0");
        }
        if self.num.abs().is_one() {
            if self.num.is_negative() {
                f.write_str("-")?;
            }
            f.write_str("pi")?;
        } else {
            write!(f, "{}*pi", self.num)?;
        }
        let den = self.denominator();
        if !den.is_one() {
            write!(f, "/{den}")?;
        }
        Ok(())
    }
}

impl FromStr for ExactAngle {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidAngle(text.to_string());
        let s = text.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let (head, den) = match s.split_once('/') {
            Some((h, d)) => (h, d.trim().parse::<BigInt>().map_err(|_| bad())?),
            None => (s, BigInt::one()),
        };
        let head = head.trim();
        let num = if let Some(coef) = head.strip_suffix("*pi") {
            coef.trim().parse::<BigInt>().map_err(|_| bad())?
        } else {
            match head {
                "pi" => BigInt::one(),
                "-pi" => -BigInt::one(),
                _ => return Err(bad()),
            }
        };
        Self::frac_pi_big(num, &den)
    }
}

/// Angles indexed by the standard-binary value of a control register.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AngleVector(Vec<ExactAngle>);

impl AngleVector {
    /// Length must be a nonzero power of two.
    pub fn new(angles: Vec<ExactAngle>) -> Result<Self> {
        if !angles.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(angles.len()));
        }
        Ok(AngleVector(angles))
    }

    pub fn zeros(control_count: usize) -> Self {
        AngleVector(alloc::vec![ExactAngle::zero(); 1 << control_count])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of controls `m` with `len = 2^m`.
    pub fn control_count(&self) -> usize {
        self.0.len().trailing_zeros() as usize
    }

    pub fn as_slice(&self) -> &[ExactAngle] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<ExactAngle> {
        self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, ExactAngle> {
        self.0.iter()
    }

    pub fn negated(&self) -> Self {
        AngleVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn max_den_exp(&self) -> u32 {
        self.0.iter().map(ExactAngle::den_exp).max().unwrap_or(0)
    }
}

impl Index<usize> for AngleVector {
    type Output = ExactAngle;

    fn index(&self, i: usize) -> &ExactAngle {
        &self.0[i]
    }
}

impl<'a> IntoIterator for &'a AngleVector {
    type Item = &'a ExactAngle;
    type IntoIter = core::slice::Iter<'a, ExactAngle>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Shorthand used by tests and fixtures: `num * pi / den`, panicking on a zero denominator.
pub fn pi_frac(num: i64, den: u64) -> ExactAngle {
    ExactAngle::frac_pi(num, den).expect("nonzero denominator")
}
