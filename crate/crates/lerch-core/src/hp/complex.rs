//! Extended-precision complex arithmetic on top of [`R`].

use super::{Ctx, R};
use crate::scalar::ComplexScalar;
use std::ops::{Add, Mul, Sub};

/// Extended-precision complex number.
#[derive(Clone, Debug)]
pub(crate) struct Cx {
    pub re: R,
    pub im: R,
}

impl Cx {
    pub fn new(re: R, im: R) -> Self {
        Cx { re, im }
    }

    pub fn zero() -> Self {
        Cx::new(R::zero(), R::zero())
    }

    pub fn one() -> Self {
        Cx::new(R::one(), R::zero())
    }

    pub fn from_real(re: R) -> Self {
        Cx::new(re, R::zero())
    }

    pub fn from_c64(v: ComplexScalar) -> Self {
        Cx::new(R::from_f64(v.re), R::from_f64(v.im))
    }

    pub fn to_c64(&self) -> ComplexScalar {
        ComplexScalar::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn neg(&self) -> Cx {
        Cx::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Cx {
        Cx::new(self.re.clone(), self.im.neg())
    }

    pub fn scale(&self, k: &R) -> Cx {
        Cx::new(&self.re * k, &self.im * k)
    }

    pub fn div(&self, rhs: &Cx) -> Cx {
        let den = &(&rhs.re * &rhs.re) + &(&rhs.im * &rhs.im);
        let num = self * &rhs.conj();
        Cx::new(&num.re / &den, &num.im / &den)
    }

    pub fn recip(&self) -> Cx {
        Cx::one().div(self)
    }

    /// Squared magnitude (no rounding beyond the two products and one add).
    pub fn norm_sqr(&self) -> R {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> R {
        self.norm_sqr().sqrt()
    }

    /// Principal argument in `(−π, π]`.
    pub fn arg(&self, ctx: &mut Ctx) -> R {
        R::atan2(&self.im, &self.re, ctx)
    }

    pub fn exp(&self, ctx: &mut Ctx) -> Cx {
        let m = self.re.exp(ctx);
        Cx::new(&m * &self.im.cos(ctx), &m * &self.im.sin(ctx))
    }

    /// Principal-branch logarithm.
    pub fn ln(&self, ctx: &mut Ctx) -> Cx {
        // ln|v| via ln(norm²)/2 spends one ln instead of a sqrt and a ln.
        let half_ln_norm = &self.norm_sqr().ln(ctx) / &R::from_i64(2);
        Cx::new(half_ln_norm, self.arg(ctx))
    }

    /// Principal-branch complex power `self^w = exp(w·ln self)`.
    pub fn pow(&self, w: &Cx, ctx: &mut Ctx) -> Cx {
        if self.is_zero() {
            return Cx::zero();
        }
        (w * &self.ln(ctx)).exp(ctx)
    }

    /// Integer power by binary exponentiation (exact branch handling, no
    /// logarithms involved).
    pub fn powi(&self, n: i64) -> Cx {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut result = Cx::one();
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl Add for &Cx {
    type Output = Cx;
    fn add(self, rhs: &Cx) -> Cx {
        Cx::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Cx {
    type Output = Cx;
    fn sub(self, rhs: &Cx) -> Cx {
        Cx::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Cx {
    type Output = Cx;
    fn mul(self, rhs: &Cx) -> Cx {
        Cx::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    fn assert_close(got: ComplexScalar, want: ComplexScalar, tol: f64) {
        assert!(
            (got - want).norm() <= tol * want.norm().max(1.0),
            "{got} vs {want}"
        );
    }

    #[test]
    fn field_ops_match_f64_complex() {
        let a = cplx(1.5, -2.25);
        let b = cplx(-0.5, 3.0);
        let (ha, hb) = (Cx::from_c64(a), Cx::from_c64(b));
        assert_close((&ha + &hb).to_c64(), a + b, 1e-16);
        assert_close((&ha * &hb).to_c64(), a * b, 1e-16);
        assert_close(ha.div(&hb).to_c64(), a / b, 1e-16);
    }

    #[test]
    fn exp_ln_round_trip() {
        let mut ctx = Ctx::new();
        for v in [cplx(0.5, 1.25), cplx(-2.0, 0.75), cplx(3.0, -4.0)] {
            let h = Cx::from_c64(v);
            let back = h.ln(&mut ctx).exp(&mut ctx).to_c64();
            assert_close(back, v, 1e-15);
        }
    }

    #[test]
    fn principal_branch_matches_num_complex() {
        let mut ctx = Ctx::new();
        // num_complex uses the principal branch for both ln and powc.
        let z = cplx(2.0, 0.0);
        let w = cplx(-4.0, -1.0); // z^(1-a) with a = 5+i
        let got = Cx::from_c64(z).pow(&Cx::from_c64(w), &mut ctx).to_c64();
        assert_close(got, z.powc(w), 1e-14);

        let neg = cplx(-0.5, 0.0);
        let l = Cx::from_c64(neg).ln(&mut ctx).to_c64();
        assert_close(l, neg.ln(), 1e-15); // Im = +π on the cut side
    }

    #[test]
    fn powi_agrees_with_pow() {
        let mut ctx = Ctx::new();
        let v = Cx::from_c64(cplx(1.25, -0.5));
        let via_exp = v.pow(&Cx::from_c64(cplx(7.0, 0.0)), &mut ctx).to_c64();
        assert_close(v.powi(7).to_c64(), via_exp, 1e-14);
        let inv = v.powi(-3).to_c64();
        assert_close(inv, cplx(1.25, -0.5).powi(-3), 1e-14);
    }
}
