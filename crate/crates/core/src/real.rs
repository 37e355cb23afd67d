//! Scalar arithmetic at a configurable precision.
//!
//! Geometry and root finding are written against [`Real`], which is
//! implemented for `f64` (fast multistart search) and for [`MpFloat`], a
//! binary multiprecision float whose precision travels with every value.
//! Mixing precisions inside one computation is a logic error; binary
//! operations on `MpFloat` use the larger of the two operand precisions.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mantissa length in bits. Every value in one computation shares it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Precision(u32);

impl Precision {
    pub const DOUBLE: Precision = Precision(53);

    pub fn new(bits: u32) -> Result<Self> {
        if bits < 53 {
            return Err(Error::Domain(format!("precision must be at least 53 bits, got {bits}")));
        }
        Ok(Precision(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Exponent of the degeneracy/incidence tolerance `2^-(bits/2)`.
    pub fn half_exponent(self) -> i32 {
        (self.0 / 2) as i32
    }

    /// `2^-(bits/2)` as an `f64` (underflows to 0 only beyond 2000 bits).
    pub fn tolerance_f64(self) -> f64 {
        2f64.powi(-self.half_exponent())
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} bits", self.0)
    }
}

pub trait Real:
    Clone
    + fmt::Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn precision(&self) -> Precision;
    fn from_f64(v: f64, prec: Precision) -> Self;
    fn from_i64(v: i64, prec: Precision) -> Self;
    fn pi(prec: Precision) -> Self;
    fn sqrt(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn to_f64(&self) -> f64;
    /// Base-2 logarithm of the magnitude, `-inf` for zero.
    fn log2_abs(&self) -> f64;
    fn to_decimal(&self) -> String;
    fn parse_decimal(s: &str, prec: Precision) -> Result<Self>;

    fn zero(prec: Precision) -> Self {
        Self::from_i64(0, prec)
    }
    fn one(prec: Precision) -> Self {
        Self::from_i64(1, prec)
    }
    fn ratio(n: i64, d: i64, prec: Precision) -> Self {
        Self::from_i64(n, prec) / Self::from_i64(d, prec)
    }
    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
    fn is_negative(&self) -> bool {
        *self < Self::zero(self.precision())
    }
    fn is_zero(&self) -> bool {
        *self == Self::zero(self.precision())
    }
    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
    /// `2^-(bits/2)` at this value's precision.
    fn half_tolerance(prec: Precision) -> Self {
        Self::pow2(-prec.half_exponent(), prec)
    }
    fn pow2(e: i32, prec: Precision) -> Self {
        let two = Self::from_i64(2, prec);
        let mut acc = Self::one(prec);
        for _ in 0..e.unsigned_abs() {
            acc = acc * two.clone();
        }
        if e < 0 {
            Self::one(prec) / acc
        } else {
            acc
        }
    }
}

impl Real for f64 {
    fn precision(&self) -> Precision {
        Precision::DOUBLE
    }
    fn from_f64(v: f64, _: Precision) -> Self {
        v
    }
    fn from_i64(v: i64, _: Precision) -> Self {
        v as f64
    }
    fn pi(_: Precision) -> Self {
        std::f64::consts::PI
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn log2_abs(&self) -> f64 {
        self.abs().log2()
    }
    fn to_decimal(&self) -> String {
        format!("{self:e}")
    }
    fn parse_decimal(s: &str, _: Precision) -> Result<Self> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not a decimal number: {s:?}")))
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn pow2(e: i32, _: Precision) -> Self {
        2f64.powi(e)
    }
}

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Multiprecision binary float carrying its own precision.
#[derive(Clone)]
pub struct MpFloat {
    v: BigFloat,
    bits: u32,
}

impl MpFloat {
    fn p(&self, other: &MpFloat) -> u32 {
        self.bits.max(other.bits)
    }

    fn wrap(v: BigFloat, bits: u32) -> Self {
        MpFloat { v, bits }
    }

    /// Re-round to another precision.
    pub fn with_precision(&self, prec: Precision) -> Self {
        let mut v = self.v.clone();
        // Widening never fails; narrowing rounds.
        let _ = v.set_precision(prec.bits() as usize, RM);
        MpFloat { v, bits: prec.bits() }
    }

    pub fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }
}

impl fmt::Debug for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal())
    }
}

impl fmt::Display for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal())
    }
}

impl PartialEq for MpFloat {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

impl PartialOrd for MpFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

macro_rules! mp_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for MpFloat {
            type Output = MpFloat;
            fn $m(self, rhs: MpFloat) -> MpFloat {
                let p = self.p(&rhs);
                MpFloat::wrap(self.v.$m(&rhs.v, p as usize, RM), p)
            }
        }
        impl<'a> $tr<&'a MpFloat> for &'a MpFloat {
            type Output = MpFloat;
            fn $m(self, rhs: &'a MpFloat) -> MpFloat {
                let p = self.p(rhs);
                MpFloat::wrap(self.v.$m(&rhs.v, p as usize, RM), p)
            }
        }
    };
}

mp_binop!(Add, add);
mp_binop!(Sub, sub);
mp_binop!(Mul, mul);
mp_binop!(Div, div);

impl Neg for MpFloat {
    type Output = MpFloat;
    fn neg(self) -> MpFloat {
        MpFloat::wrap(self.v.neg(), self.bits)
    }
}

impl Real for MpFloat {
    fn precision(&self) -> Precision {
        Precision(self.bits)
    }
    fn from_f64(v: f64, prec: Precision) -> Self {
        MpFloat::wrap(BigFloat::from_f64(v, prec.bits() as usize), prec.bits())
    }
    fn from_i64(v: i64, prec: Precision) -> Self {
        MpFloat::wrap(BigFloat::from_i64(v, prec.bits() as usize), prec.bits())
    }
    fn pi(prec: Precision) -> Self {
        let v = with_consts(|cc| cc.pi(prec.bits() as usize, RM));
        MpFloat::wrap(v, prec.bits())
    }
    fn sqrt(&self) -> Self {
        MpFloat::wrap(self.v.sqrt(self.bits as usize, RM), self.bits)
    }
    fn sin(&self) -> Self {
        let v = with_consts(|cc| self.v.sin(self.bits as usize, RM, cc));
        MpFloat::wrap(v, self.bits)
    }
    fn cos(&self) -> Self {
        let v = with_consts(|cc| self.v.cos(self.bits as usize, RM, cc));
        MpFloat::wrap(v, self.bits)
    }
    fn to_f64(&self) -> f64 {
        if self.v.is_zero() {
            return 0.0;
        }
        if self.v.is_nan() {
            return f64::NAN;
        }
        if self.v.is_inf() {
            return if self.v.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        let Some((words, _, sign, exp, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        // Mantissa is normalized with its top bit in the last word: value = 0.m * 2^exp.
        let top = *words.last().unwrap_or(&0) as f64;
        let mag = top * 2f64.powi(exp - 64);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }
    fn log2_abs(&self) -> f64 {
        if self.v.is_zero() {
            return f64::NEG_INFINITY;
        }
        match self.v.as_raw_parts() {
            Some((words, _, _, exp, _)) => {
                let top = *words.last().unwrap_or(&1) as f64;
                (top / 2f64.powi(64)).log2() + exp as f64
            }
            None => f64::NAN,
        }
    }
    fn to_decimal(&self) -> String {
        with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".to_string())
    }
    fn parse_decimal(s: &str, prec: Precision) -> Result<Self> {
        let v = with_consts(|cc| BigFloat::parse(s.trim(), Radix::Dec, prec.bits() as usize, RM, cc));
        if v.is_nan() {
            return Err(Error::Parse(format!("not a decimal number: {s:?}")));
        }
        Ok(MpFloat::wrap(v, prec.bits()))
    }
    fn abs(&self) -> Self {
        MpFloat::wrap(self.v.abs(), self.bits)
    }
    fn is_zero(&self) -> bool {
        self.v.is_zero()
    }
    fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }
    fn pow2(e: i32, prec: Precision) -> Self {
        let mut v = BigFloat::from_i64(1, prec.bits() as usize);
        // 1 = 0.1b * 2^1
        v.set_exponent(1 + e);
        MpFloat::wrap(v, prec.bits())
    }
}

impl Serialize for MpFloat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_decimal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u32) -> Precision {
        Precision::new(bits).unwrap()
    }

    #[test]
    fn precision_floor() {
        assert!(Precision::new(52).is_err());
        assert_eq!(Precision::new(53).unwrap(), Precision::DOUBLE);
    }

    #[test]
    fn mp_to_f64_matches() {
        for v in [1.0, -2.5, 0.518152, 1e-30, -7.25e12, 3.0f64.sqrt()] {
            let m = MpFloat::from_f64(v, p(256));
            assert_eq!(m.to_f64(), v, "{v}");
        }
    }

    #[test]
    fn sqrt2_squared() {
        let two = MpFloat::from_i64(2, p(512));
        let r = two.sqrt();
        let err = (r.clone() * r - two).abs();
        assert!(err.log2_abs() < -505.0);
    }

    #[test]
    fn trig_identity_at_1024_bits() {
        let x = MpFloat::ratio(2, 7, p(1024)) * MpFloat::pi(p(1024));
        let one = x.sin().square() + x.cos().square();
        assert!((one - MpFloat::one(p(1024))).abs().log2_abs() < -1015.0);
    }

    #[test]
    fn pow2_and_tolerance() {
        let t = MpFloat::half_tolerance(p(256));
        assert_eq!(t.log2_abs(), -128.0);
        assert_eq!(MpFloat::pow2(3, p(64)).to_f64(), 8.0);
        assert_eq!(f64::half_tolerance(Precision::DOUBLE), 2f64.powi(-26));
    }

    #[test]
    fn decimal_round_trip() {
        let x = MpFloat::ratio(1, 3, p(200));
        let s = x.to_decimal();
        let y = MpFloat::parse_decimal(&s, p(200)).unwrap();
        assert!((x - y).abs().log2_abs() < -190.0);
        assert!(MpFloat::parse_decimal("abc", p(200)).is_err());
    }
}
