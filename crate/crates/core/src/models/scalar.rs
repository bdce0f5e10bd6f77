use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

/// Field elements a linear model computes with.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Parses `7`, `-3/4` or `0.25`.
    fn parse(text: &str) -> Option<Self>;

    fn to_f64(&self) -> f64;

    fn abs_diff(&self, other: &Self) -> f64 {
        (self.clone() - other.clone()).to_f64().abs()
    }

    /// Magnitude used for pivoting.
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            return Some(BigRational::new(num, den));
        }
        if let Some((whole, frac)) = text.split_once('.') {
            let negative = whole.trim_start().starts_with('-');
            let digits = frac.len() as u32;
            let whole: BigInt = if whole.is_empty() || whole == "-" {
                BigInt::zero()
            } else {
                whole.parse().ok()?
            };
            let frac: BigInt = if frac.is_empty() {
                BigInt::zero()
            } else {
                if !frac.chars().all(|c| c.is_ascii_digit()) {
                    return None;
                }
                frac.parse().ok()?
            };
            let scale = num::pow(BigInt::from(10), digits as usize);
            let mut value = whole.abs() * &scale + frac;
            if negative {
                value = -value;
            }
            return Some(BigRational::new(value, scale));
        }
        text.parse::<BigInt>().ok().map(BigRational::from_integer)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs_diff(&self, other: &Self) -> f64 {
        let d = (self - other).abs();
        if d.is_zero() {
            0.0
        } else {
            ToPrimitive::to_f64(&d).unwrap_or(f64::INFINITY)
        }
    }

    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            // any nonzero pivot is exact
            1.0
        }
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num: f64 = num.trim().parse().ok()?;
            let den: f64 = den.trim().parse().ok()?;
            return Some(num / den);
        }
        text.parse().ok()
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}
