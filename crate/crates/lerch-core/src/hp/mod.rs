//! Internal extended-precision layer (192-bit mantissa, ≈57 decimal digits).
//!
//! The explicit and recurrence coefficient paths subtract nearly equal
//! quantities — `c_n(z)` grows like `(ln z)^(−n−1)` while the combined
//! `C_n(z,a)` stays small — shedding up to ~15 decimal digits by `n = 20`
//! for the parameter grids this crate must serve. Likewise, reproducing
//! relative errors at the `1e−14` scale requires references and truncated
//! sums carried well past double precision. Both needs are met by running
//! those computations on [`R`]/[`Cx`] and rounding to `f64` only at the API
//! boundary.
//!
//! The wrapper is deliberately minimal: owned values, borrowing operators,
//! and explicit [`Ctx`] threading for the transcendental constant cache.

mod complex;

pub(crate) use complex::Cx;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Working mantissa precision in bits.
pub(crate) const PREC: usize = 192;
const RM: RoundingMode = RoundingMode::ToEven;

/// Constant cache handle threaded through transcendental calls.
pub(crate) struct Ctx {
    cc: Consts,
}

impl Ctx {
    pub fn new() -> Self {
        Ctx {
            cc: Consts::new().expect("transcendental constant cache"),
        }
    }

    pub fn pi(&mut self) -> R {
        R(self.cc.pi(PREC, RM))
    }
}

/// Extended-precision real number.
#[derive(Clone, Debug)]
pub(crate) struct R(BigFloat);

impl R {
    pub fn zero() -> Self {
        R(BigFloat::from_i8(0, PREC))
    }

    pub fn one() -> Self {
        R(BigFloat::from_i8(1, PREC))
    }

    pub fn from_f64(x: f64) -> Self {
        // BigFloat::from_f64 applies the normal-number exponent bias to
        // subnormal inputs as well, halving them; rescale those into the
        // normal range first (exact: power-of-two scaling loses no bits).
        if x != 0.0 && x.is_subnormal() {
            let mut v = BigFloat::from_f64(x * f64::powi(2.0, 120), PREC);
            if let Some(e) = v.exponent() {
                v.set_exponent(e - 120);
            }
            return R(v);
        }
        R(BigFloat::from_f64(x, PREC))
    }

    pub fn from_i64(x: i64) -> Self {
        R(BigFloat::from_i64(x, PREC))
    }

    /// Parses a decimal literal (used for embedded quadrature nodes).
    pub fn parse(text: &str, ctx: &mut Ctx) -> Self {
        R(BigFloat::parse(text, Radix::Dec, PREC, RM, &mut ctx.cc))
    }

    /// Rounds to the nearest `f64` (top 128 mantissa bits, then one exact
    /// scaling — double rounding is confined to ties beyond 128 bits).
    pub fn to_f64(&self) -> f64 {
        let v = &self.0;
        if v.is_nan() {
            return f64::NAN;
        }
        if v.is_inf_pos() {
            return f64::INFINITY;
        }
        if v.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if v.is_zero() {
            return 0.0;
        }
        match v.as_raw_parts() {
            None => f64::NAN,
            Some((words, _bits, sign, e, _inexact)) => {
                let n = words.len();
                let w1 = words[n - 1] as u128;
                let w0 = if n >= 2 { words[n - 2] as u128 } else { 0 };
                let hi = (w1 << 64) | w0;
                let mag = ldexp(hi as f64, i64::from(e) - 128);
                if sign == Sign::Neg {
                    -mag
                } else {
                    mag
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn cmp(&self, other: &R) -> Ordering {
        match self.0.cmp(&other.0) {
            Some(v) if v < 0 => Ordering::Less,
            Some(v) if v > 0 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }

    pub fn le(&self, other: &R) -> bool {
        self.cmp(other) != Ordering::Greater
    }

    pub fn sqrt(&self) -> Self {
        R(self.0.sqrt(PREC, RM))
    }

    pub fn exp(&self, ctx: &mut Ctx) -> Self {
        R(self.0.exp(PREC, RM, &mut ctx.cc))
    }

    pub fn ln(&self, ctx: &mut Ctx) -> Self {
        R(self.0.ln(PREC, RM, &mut ctx.cc))
    }

    pub fn sin(&self, ctx: &mut Ctx) -> Self {
        R(self.0.sin(PREC, RM, &mut ctx.cc))
    }

    pub fn cos(&self, ctx: &mut Ctx) -> Self {
        R(self.0.cos(PREC, RM, &mut ctx.cc))
    }

    pub fn atan(&self, ctx: &mut Ctx) -> Self {
        R(self.0.atan(PREC, RM, &mut ctx.cc))
    }

    /// Four-quadrant arctangent on the principal branch `(−π, π]`.
    pub fn atan2(y: &R, x: &R, ctx: &mut Ctx) -> Self {
        if x.is_zero() && y.is_zero() {
            return R::zero();
        }
        let pi = ctx.pi();
        if x.is_zero() {
            let half = &pi / &R::from_i64(2);
            return if y.is_negative() { half.neg() } else { half };
        }
        let base = (y / x).atan(ctx);
        if x.is_negative() {
            if y.is_negative() {
                &base - &pi
            } else {
                // Covers y > 0 and y = 0 (the negative real axis maps to +π).
                &base + &pi
            }
        } else {
            base
        }
    }

    /// Integer power by binary exponentiation; `n < 0` goes through the
    /// reciprocal.
    pub fn powi(&self, n: i64) -> Self {
        if n < 0 {
            return &R::one() / &self.powi(-n);
        }
        R(self.0.powi(n as usize, PREC, RM))
    }
}

impl Neg for &R {
    type Output = R;
    fn neg(self) -> R {
        R((&self.0).neg())
    }
}

impl R {
    pub fn neg(&self) -> R {
        R((&self.0).neg())
    }
}

impl Add for &R {
    type Output = R;
    fn add(self, rhs: &R) -> R {
        R(self.0.add(&rhs.0, PREC, RM))
    }
}

impl Sub for &R {
    type Output = R;
    fn sub(self, rhs: &R) -> R {
        R(self.0.sub(&rhs.0, PREC, RM))
    }
}

impl Mul for &R {
    type Output = R;
    fn mul(self, rhs: &R) -> R {
        R(self.0.mul(&rhs.0, PREC, RM))
    }
}

impl Div for &R {
    type Output = R;
    fn div(self, rhs: &R) -> R {
        R(self.0.div(&rhs.0, PREC, RM))
    }
}

/// `x · 2^k` without intermediate overflow for any representable result.
fn ldexp(x: f64, k: i64) -> f64 {
    if (-1022..=1023).contains(&k) {
        x * f64::powi(2.0, k as i32)
    } else if k < -2200 {
        x * 0.0
    } else if k < -1022 {
        x * f64::powi(2.0, -1022) * f64::powi(2.0, (k + 1022) as i32)
    } else if k <= 2100 {
        x * f64::powi(2.0, 1023) * f64::powi(2.0, (k - 1023) as i32)
    } else {
        x * f64::INFINITY
    }
}
