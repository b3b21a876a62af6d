//! Polylogarithms of negative integer order.
//!
//! `Li_{−n}(z)` is a rational function of `z` with a pole only at `z = 1`;
//! it is obtained from `Li_0(z) = z/(1−z)` by the recurrence
//!
//! ```text
//! Li_{−n}(z) = z/(1−z)² + z/(1−z) · Σ_{k=1}^{n−1} binom(n,k)·Li_{−k}(z)
//! ```
//!
//! which needs no derivatives and no divisions beyond the base factors.

use crate::error::{Error, Result};
use crate::hp::{Ctx, Cx, R};
use crate::scalar::{ComplexScalar, cplx};

/// All of `Li_0(z) … Li_{−n_max}(z)` in double precision.
pub(crate) fn polylog_neg_list(n_max: usize, z: ComplexScalar) -> Vec<ComplexScalar> {
    let base = z / (1.0 - z);
    let base_sq = base / (1.0 - z); // z/(1−z)²
    let mut li = Vec::with_capacity(n_max + 1);
    li.push(base);
    // Pascal row for binom(n, ·), updated in place per order.
    let mut row: Vec<f64> = vec![1.0];
    for n in 1..=n_max {
        row.push(1.0);
        for j in (1..n).rev() {
            row[j] += row[j - 1];
        }
        let mut acc = cplx(0.0, 0.0);
        for k in 1..n {
            acc += row[k] * li[k];
        }
        li.push(base_sq + base * acc);
    }
    li
}

/// `Li_{−n}(z)` for `n ≥ 0`. Fails with a domain error at the pole `z = 1`.
pub fn polylog_neg(n: usize, z: ComplexScalar) -> Result<ComplexScalar> {
    crate::scalar::ensure_finite(z, "z")?;
    if z == cplx(1.0, 0.0) {
        return Err(Error::Domain(
            "polylog of negative order singular at z=1".into(),
        ));
    }
    Ok(polylog_neg_list(n, z)[n])
}

/// Extended-precision version of [`polylog_neg_list`]. Binomials are built
/// exactly (they are integers well inside the mantissa for any order used
/// here).
pub(crate) fn hp_polylog_neg_list(n_max: usize, z: &Cx, _ctx: &mut Ctx) -> Vec<Cx> {
    let one = Cx::one();
    let one_minus_z = &one - z;
    let base = z.div(&one_minus_z);
    let base_sq = base.div(&one_minus_z);
    let mut li = Vec::with_capacity(n_max + 1);
    li.push(base.clone());
    let mut row: Vec<R> = vec![R::one()];
    for n in 1..=n_max {
        row.push(R::one());
        for j in (1..n).rev() {
            let s = &row[j] + &row[j - 1];
            row[j] = s;
        }
        let mut acc = Cx::zero();
        for k in 1..n {
            acc = &acc + &li[k].scale(&row[k]);
        }
        li.push(&base_sq + &(&base * &acc));
    }
    li
}
