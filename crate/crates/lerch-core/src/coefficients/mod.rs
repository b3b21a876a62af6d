//! Taylor coefficients of the kernel
//!
//! ```text
//! f(z, x, a) = (1 − (z·e^(−x))^(1−a)) / (1 − z·e^(−x)) = Σ_n C_n(z,a)·x^n
//! ```
//!
//! which drive the large-`a` expansion of the pole-free Lerch combination.
//! Three independent formation paths are provided and cross-checked by the
//! test suite:
//!
//! * **explicit** — `C_n = c_n(z) − z^(1−a)·p_n(z,a)` built from negative-order
//!   polylogarithms, with a Bernoulli-polynomial closed form at `z = 1`;
//! * **recurrence** — a triangular recurrence needing only `C_0 … C_(n−1)`;
//! * **integer-direct** — for positive integer `a = m`, the finite sum
//!   `C_n = −(1/n!)·Σ_{k=1}^{m−1} k^n/z^k`, exact up to rounding.
//!
//! The explicit and recurrence forms cancel catastrophically (10+ decimal
//! digits for moderate `z`, `a`, `n`), so both are evaluated internally in
//! 192-bit arithmetic and rounded once at the API boundary.

mod bernoulli;
mod polylog;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial, BigRational};
pub use polylog::polylog_neg;

pub(crate) use bernoulli::{bernoulli_polynomial_cx, bernoulli_r};
pub(crate) use polylog::hp_polylog_neg_list;

use crate::error::{Error, Result};
use crate::hp::{Ctx, Cx, R};
use crate::kahan::CompensatedSum;
use crate::scalar::{as_positive_integer, cplx, ensure_finite, ComplexScalar};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Which formation path to use for kernel coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathSelect {
    /// Positive integer `a` → integer-direct; otherwise explicit.
    Auto,
    /// `c_n − z^(1−a)·p_n` (Bernoulli closed form at `z = 1`).
    Explicit,
    /// Triangular recurrence on `C_0 … C_n`.
    Recurrence,
    /// Finite power sum; requires positive integer `a`.
    IntegerDirect,
}

impl PathSelect {
    pub fn name(self) -> &'static str {
        match self {
            PathSelect::Auto => "auto",
            PathSelect::Explicit => "explicit",
            PathSelect::Recurrence => "recurrence",
            PathSelect::IntegerDirect => "integer-direct",
        }
    }
}

impl fmt::Display for PathSelect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PathSelect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(PathSelect::Auto),
            "explicit" => Ok(PathSelect::Explicit),
            "recurrence" => Ok(PathSelect::Recurrence),
            "integer-direct" => Ok(PathSelect::IntegerDirect),
            other => Err(Error::Usage(format!(
                "unknown coefficient path '{other}' (expected auto, explicit, recurrence, or integer-direct)"
            ))),
        }
    }
}

/// A concrete formation strategy after `Auto` resolution and domain checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ResolvedPath {
    ExplicitGeneral,
    ExplicitAtOne,
    RecurrenceGeneral,
    RecurrenceAtOne,
    IntegerDirect(u32),
}

impl ResolvedPath {
    pub(crate) fn public(self) -> PathSelect {
        match self {
            ResolvedPath::ExplicitGeneral | ResolvedPath::ExplicitAtOne => PathSelect::Explicit,
            ResolvedPath::RecurrenceGeneral | ResolvedPath::RecurrenceAtOne => {
                PathSelect::Recurrence
            }
            ResolvedPath::IntegerDirect(_) => PathSelect::IntegerDirect,
        }
    }
}

/// Validate `(z, a)` and turn a requested path into a concrete one.
pub(crate) fn resolve_path(
    z: ComplexScalar,
    a: ComplexScalar,
    requested: PathSelect,
) -> Result<ResolvedPath> {
    ensure_finite(z, "z")?;
    ensure_finite(a, "a")?;
    if z == cplx(0.0, 0.0) {
        return Err(Error::Domain("z = 0: log z undefined".into()));
    }
    let z_is_one = z == cplx(1.0, 0.0);
    match requested {
        PathSelect::Auto => {
            if let Some(m) = as_positive_integer(a) {
                Ok(ResolvedPath::IntegerDirect(m))
            } else if z_is_one {
                Ok(ResolvedPath::ExplicitAtOne)
            } else {
                Ok(ResolvedPath::ExplicitGeneral)
            }
        }
        PathSelect::Explicit => Ok(if z_is_one {
            ResolvedPath::ExplicitAtOne
        } else {
            ResolvedPath::ExplicitGeneral
        }),
        PathSelect::Recurrence => Ok(if z_is_one {
            ResolvedPath::RecurrenceAtOne
        } else {
            ResolvedPath::RecurrenceGeneral
        }),
        PathSelect::IntegerDirect => match as_positive_integer(a) {
            Some(m) => Ok(ResolvedPath::IntegerDirect(m)),
            None => Err(Error::Usage(
                "integer-direct path requires a to be a positive integer".into(),
            )),
        },
    }
}

/// Inverse factorials `1/0!, 1/1!, …, 1/n!` in extended precision.
pub(crate) fn hp_invfact_list(n: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(R::one());
    for j in 1..=n {
        let next = &out[j - 1] / &R::from_i64(j as i64);
        out.push(next);
    }
    out
}

/// `n!` in double precision; errors above 170 where the result overflows.
pub(crate) fn factorial_f64(n: usize) -> Result<f64> {
    if n > 170 {
        return Err(Error::Usage(format!(
            "order n = {n} exceeds the double-precision factorial range (n <= 170)"
        )));
    }
    Ok((1..=n).fold(1.0_f64, |acc, j| acc * j as f64))
}

/// Pochhammer symbol `(s)_n = s·(s+1)·…·(s+n−1)`, with `(s)_0 = 1`.
pub fn pochhammer(s: ComplexScalar, n: usize) -> ComplexScalar {
    let mut acc = cplx(1.0, 0.0);
    for j in 0..n {
        acc *= s + j as f64;
    }
    acc
}

/// Power-series coefficients `c_n(z)` of `1/(1 − z·e^(−x))` around `x = 0`:
/// `c_0 = 1/(1−z)` and `c_n = (−1)^n·Li_(−n)(z)/n!` for `n ≥ 1`.
///
/// Double precision throughout; the polylogarithm values grow roughly like
/// `n!/|ln z|^(n+1)`, so the order guard tracks the factorial range.
pub fn coeff_c(n: usize, z: ComplexScalar) -> Result<ComplexScalar> {
    ensure_finite(z, "z")?;
    if z == cplx(1.0, 0.0) {
        return Err(Error::Domain(
            "c_n(z) has a pole at z = 1; use the z = 1 kernel branch instead".into(),
        ));
    }
    if n == 0 {
        return Ok(1.0 / (1.0 - z));
    }
    let fact = factorial_f64(n)?;
    let li = polylog::polylog_neg_list(n, z);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * li[n] / fact)
}

/// Shifted convolution `p_n(z,a) = Σ_{k=0}^{n} c_(n−k)(z)·(a−1)^k/k!`,
/// the coefficient family multiplying `z^(1−a)` in the explicit kernel split.
pub fn poly_p(n: usize, z: ComplexScalar, a: ComplexScalar) -> Result<ComplexScalar> {
    ensure_finite(z, "z")?;
    ensure_finite(a, "a")?;
    if z == cplx(1.0, 0.0) {
        return Err(Error::Domain(
            "p_n(z,a) has a pole at z = 1; use the z = 1 kernel branch instead".into(),
        ));
    }
    factorial_f64(n)?;
    let li = polylog::polylog_neg_list(n, z);
    let c: Vec<ComplexScalar> = (0..=n)
        .map(|j| {
            if j == 0 {
                1.0 / (1.0 - z)
            } else {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                // factorial_f64(j) cannot fail: j ≤ n was checked above.
                sign * li[j] / factorial_f64(j).unwrap()
            }
        })
        .collect();
    let w = a - 1.0;
    let mut weight = cplx(1.0, 0.0); // (a−1)^k / k!
    let mut acc = CompensatedSum::new();
    for k in 0..=n {
        acc.add(c[n - k] * weight);
        weight *= w / (k as f64 + 1.0);
    }
    Ok(acc.value())
}

// ---------------------------------------------------------------------------
// Extended-precision list builders (shared with the expansion and validation
// layers, which need many orders of the same table).
// ---------------------------------------------------------------------------

/// `c_0 … c_nmax` at `z ≠ 1`.
pub(crate) fn hp_c_list(n_max: usize, z: &Cx, ctx: &mut Ctx) -> Vec<Cx> {
    let li = hp_polylog_neg_list(n_max, z, ctx);
    let invfact = hp_invfact_list(n_max);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push((&Cx::one() - z).recip());
    for n in 1..=n_max {
        let v = li[n].scale(&invfact[n]);
        out.push(if n % 2 == 0 { v } else { v.neg() });
    }
    out
}

/// `p_0 … p_nmax` at `z ≠ 1` given the matching `c` list.
pub(crate) fn hp_p_list(n_max: usize, a: &Cx, c: &[Cx], _ctx: &mut Ctx) -> Vec<Cx> {
    let w = a - &Cx::one();
    // weights t_k = (a−1)^k / k!
    let mut weights = Vec::with_capacity(n_max + 1);
    weights.push(Cx::one());
    for k in 1..=n_max {
        let t = (&weights[k - 1] * &w).scale(&(&R::one() / &R::from_i64(k as i64)));
        weights.push(t);
    }
    (0..=n_max)
        .map(|n| {
            let mut acc = Cx::zero();
            for k in 0..=n {
                acc = &acc + &(&c[n - k] * &weights[k]);
            }
            acc
        })
        .collect()
}

fn hp_explicit_general(n_max: usize, z: &Cx, a: &Cx, ctx: &mut Ctx) -> Vec<Cx> {
    let c = hp_c_list(n_max, z, ctx);
    let p = hp_p_list(n_max, a, &c, ctx);
    let zf = z.pow(&(&Cx::one() - a), ctx); // z^(1−a), principal branch
    (0..=n_max).map(|n| &c[n] - &(&zf * &p[n])).collect()
}

/// `z = 1` closed form: `C_n(1,a) = [B_(n+1)(1) − B_(n+1)(a)]/(n+1)!` with
/// `B_k(·)` the Bernoulli polynomials (`B_(n+1)(1) = (−1)^(n+1)·B_(n+1)`).
fn hp_explicit_at_one(n_max: usize, a: &Cx, ctx: &mut Ctx) -> Vec<Cx> {
    let invfact = hp_invfact_list(n_max + 1);
    (0..=n_max)
        .map(|n| {
            let b_at_one = {
                let b = bernoulli_r(n + 1, ctx);
                if (n + 1) % 2 == 0 {
                    b
                } else {
                    b.neg()
                }
            };
            let b_at_a = bernoulli_polynomial_cx(n + 1, a, ctx);
            (&Cx::from_real(b_at_one) - &b_at_a).scale(&invfact[n + 1])
        })
        .collect()
}

fn hp_recurrence_general(n_max: usize, z: &Cx, a: &Cx, ctx: &mut Ctx) -> Vec<Cx> {
    let one = Cx::one();
    let one_minus_z = &one - z;
    let zc = z.div(&one_minus_z); // z/(1−z)
    let w = a - &one;
    let zf = z.pow(&(&one - a), ctx); // z^(1−a)
    let invfact = hp_invfact_list(n_max.max(1));
    let mut out: Vec<Cx> = Vec::with_capacity(n_max + 1);
    out.push((&one - &zf).div(&one_minus_z));
    // q_n = (a−1)^n / (n! · z^a) built incrementally from q_0 = z^(−a) = z^(1−a)/z.
    let mut q = zf.div(z);
    for n in 1..=n_max {
        q = (&q * &w).scale(&(&R::one() / &R::from_i64(n as i64)));
        let mut acc = Cx::zero();
        for (k, prev) in out.iter().enumerate() {
            let term = prev.scale(&invfact[n - k]);
            acc = if (n - k) % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        out.push(&zc * &(&acc - &q));
    }
    out
}

fn hp_recurrence_at_one(n_max: usize, a: &Cx, ctx: &mut Ctx) -> Vec<Cx> {
    let _ = ctx;
    let one = Cx::one();
    let w = a - &one;
    let invfact = hp_invfact_list(n_max + 1);
    let mut out: Vec<Cx> = Vec::with_capacity(n_max + 1);
    out.push(&one - a);
    let mut wpow = w.clone(); // (a−1)^(n) going into order n, starts at n=1
    for n in 1..=n_max {
        wpow = &wpow * &w; // (a−1)^(n+1)
        let mut acc = wpow.scale(&invfact[n + 1]).neg();
        for (k, prev) in out.iter().enumerate() {
            let term = prev.scale(&invfact[n + 1 - k]);
            acc = if (n - k) % 2 == 0 {
                &acc - &term
            } else {
                &acc + &term
            };
        }
        out.push(acc);
    }
    out
}

fn hp_integer_direct(n_max: usize, z: &Cx, m: u32, _ctx: &mut Ctx) -> Vec<Cx> {
    let invfact = hp_invfact_list(n_max);
    let zinv = z.recip();
    let count = m.saturating_sub(1) as usize;
    // z^(−k) for k = 1…m−1, and running k^n updated per order.
    let mut zk = Vec::with_capacity(count);
    let mut acc = Cx::one();
    for _ in 0..count {
        acc = &acc * &zinv;
        zk.push(acc.clone());
    }
    let ks: Vec<R> = (1..=count).map(|k| R::from_i64(k as i64)).collect();
    let mut kn: Vec<R> = vec![R::one(); count];
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut sum = Cx::zero();
        for k in 0..count {
            sum = &sum + &zk[k].scale(&kn[k]);
        }
        out.push(sum.scale(&invfact[n]).neg());
        if n < n_max {
            for k in 0..count {
                let next = &kn[k] * &ks[k];
                kn[k] = next;
            }
        }
    }
    out
}

/// All kernel coefficients `C_0 … C_nmax` for a resolved path, in extended
/// precision. `z` and `a` are taken as exact doubles.
pub(crate) fn hp_kernel_list(
    n_max: usize,
    z: ComplexScalar,
    a: ComplexScalar,
    path: ResolvedPath,
    ctx: &mut Ctx,
) -> Vec<Cx> {
    let zc = Cx::from_c64(z);
    let ac = Cx::from_c64(a);
    match path {
        ResolvedPath::ExplicitGeneral => hp_explicit_general(n_max, &zc, &ac, ctx),
        ResolvedPath::ExplicitAtOne => hp_explicit_at_one(n_max, &ac, ctx),
        ResolvedPath::RecurrenceGeneral => hp_recurrence_general(n_max, &zc, &ac, ctx),
        ResolvedPath::RecurrenceAtOne => hp_recurrence_at_one(n_max, &ac, ctx),
        ResolvedPath::IntegerDirect(m) => hp_integer_direct(n_max, &zc, m, ctx),
    }
}

/// Double-precision integer-direct sum, safe for moderate `m` (no factorial
/// is formed: `k^n/n!` is accumulated as a running product `Π_j k/j`).
fn integer_direct_f64(n: usize, z: ComplexScalar, m: u32) -> ComplexScalar {
    if m <= 1 {
        return cplx(0.0, 0.0);
    }
    let zinv = 1.0 / z;
    let mut zk = cplx(1.0, 0.0);
    let mut acc = CompensatedSum::new();
    for k in 1..=(m - 1) as usize {
        zk *= zinv;
        let mut t = zk;
        for j in 1..=n {
            t *= k as f64 / j as f64;
        }
        acc.add(t);
    }
    -acc.value()
}

/// Kernel Taylor coefficient `C_n(z,a)`.
///
/// The explicit and recurrence paths run in 192-bit arithmetic internally and
/// round once on return, so they agree with each other (and with the
/// integer-direct path where applicable) to double-precision rounding even
/// where the defining expressions cancel by many digits.
pub fn kernel_coeff(
    n: usize,
    z: ComplexScalar,
    a: ComplexScalar,
    path: PathSelect,
) -> Result<ComplexScalar> {
    let resolved = resolve_path(z, a, path)?;
    if let ResolvedPath::IntegerDirect(m) = resolved {
        // The double-precision fused sum is exact-in-pattern and fast; fall
        // back to extended precision where its intermediates could overflow.
        if m <= 150 && z.norm() >= 0.5 {
            return Ok(integer_direct_f64(n, z, m));
        }
    }
    let mut ctx = Ctx::new();
    Ok(hp_kernel_list(n, z, a, resolved, &mut ctx)[n].to_c64())
}

// ---------------------------------------------------------------------------
// Coefficient tables
// ---------------------------------------------------------------------------

/// Dense table of kernel coefficients (and, away from `z = 1`, the `c`/`p`
/// families they are assembled from) for one `(z, a)` pair.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    pub z: ComplexScalar,
    pub a: ComplexScalar,
    /// The concrete path used (never `Auto`).
    pub path: PathSelect,
    /// `c_0 … c_n`; empty when `z = 1` (the family has a pole there).
    pub c: Vec<ComplexScalar>,
    /// `p_0 … p_n`; empty when `z = 1`.
    pub p: Vec<ComplexScalar>,
    /// Kernel coefficients `C_0 … C_n`.
    pub big_c: Vec<ComplexScalar>,
    /// Human-readable notes: path resolution, conditioning warnings.
    pub diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct TableDump<'a> {
    z: [f64; 2],
    a: [f64; 2],
    path: &'a str,
    #[serde(rename = "C")]
    big_c: Vec<[f64; 2]>,
}

impl CoefficientTable {
    /// Build coefficients `0 … n_max` on the given path (after `Auto`
    /// resolution), recording any conditioning concerns in `diagnostics`.
    pub fn build(
        z: ComplexScalar,
        a: ComplexScalar,
        path: PathSelect,
        n_max: usize,
    ) -> Result<CoefficientTable> {
        let resolved = resolve_path(z, a, path)?;
        let mut diagnostics = Vec::new();
        if path == PathSelect::Auto {
            diagnostics.push(format!("auto-selected path: {}", resolved.public().name()));
        }
        let near_one = (z - cplx(1.0, 0.0)).norm();
        if near_one > 0.0 && near_one < 1e-3 {
            diagnostics.push(
                "conditioning warning: |z - 1| < 1e-3; coefficient formation near the kernel pole loses accuracy"
                    .into(),
            );
        }
        let mut ctx = Ctx::new();
        let z_is_one = z == cplx(1.0, 0.0);
        let (c, p) = if z_is_one {
            (Vec::new(), Vec::new())
        } else {
            let zc = Cx::from_c64(z);
            let ac = Cx::from_c64(a);
            let c_hp = hp_c_list(n_max, &zc, &mut ctx);
            let p_hp = hp_p_list(n_max, &ac, &c_hp, &mut ctx);
            (
                c_hp.iter().map(Cx::to_c64).collect(),
                p_hp.iter().map(Cx::to_c64).collect(),
            )
        };
        let big_c = hp_kernel_list(n_max, z, a, resolved, &mut ctx)
            .iter()
            .map(Cx::to_c64)
            .collect();
        Ok(CoefficientTable {
            z,
            a,
            path: resolved.public(),
            c,
            p,
            big_c,
            diagnostics,
        })
    }

    /// Highest order held (the lists are dense prefixes `0 ..= order`).
    pub fn order(&self) -> usize {
        self.big_c.len().saturating_sub(1)
    }

    /// Deterministic JSON debug dump:
    /// `{"z":[re,im],"a":[re,im],"path":"…","C":[[re,im],…]}`.
    pub fn to_debug_json(&self) -> String {
        let dump = TableDump {
            z: [self.z.re, self.z.im],
            a: [self.a.re, self.a.im],
            path: self.path.name(),
            big_c: self.big_c.iter().map(|v| [v.re, v.im]).collect(),
        };
        serde_json::to_string(&dump).expect("table dump serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(x: ComplexScalar, y: ComplexScalar) -> f64 {
        (x - y).norm() / y.norm().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(cplx(7.5, -2.0), 0), cplx(1.0, 0.0));
        assert_eq!(pochhammer(cplx(2.5, 0.0), 3), cplx(39.375, 0.0));
        assert_eq!(pochhammer(cplx(-3.0, 0.0), 5), cplx(0.0, 0.0));
        let s = cplx(1.0, 1.0);
        assert_eq!(pochhammer(s, 2), s * (s + 1.0));
    }

    #[test]
    fn coeff_c_frozen_values() {
        assert_eq!(coeff_c(0, cplx(2.0, 0.0)).unwrap(), cplx(-1.0, 0.0));
        assert_eq!(coeff_c(1, cplx(2.0, 0.0)).unwrap(), cplx(-2.0, 0.0));
        assert_eq!(coeff_c(2, cplx(2.0, 0.0)).unwrap(), cplx(-3.0, 0.0));
        assert_eq!(coeff_c(0, cplx(0.5, 0.0)).unwrap(), cplx(2.0, 0.0));
        assert!(matches!(
            coeff_c(3, cplx(1.0, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            coeff_c(171, cplx(2.0, 0.0)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn poly_p_frozen_values() {
        assert_eq!(
            poly_p(0, cplx(2.0, 0.0), cplx(5.0, 0.0)).unwrap(),
            cplx(-1.0, 0.0)
        );
        assert_eq!(
            poly_p(1, cplx(2.0, 0.0), cplx(2.0, 0.0)).unwrap(),
            cplx(-3.0, 0.0)
        );
        // a = 1 collapses the convolution to c_n.
        assert_eq!(
            poly_p(1, cplx(2.0, 0.0), cplx(1.0, 0.0)).unwrap(),
            cplx(-2.0, 0.0)
        );
    }

    #[test]
    fn kernel_frozen_values() {
        // C_0(z,a) = (1 − z^(1−a))/(1 − z): at z=2, a=5 → (1 − 1/16)/(−1).
        let c0 = kernel_coeff(0, cplx(2.0, 0.0), cplx(5.0, 0.0), PathSelect::Explicit).unwrap();
        assert!(rel(c0, cplx(-0.9375, 0.0)) < 1e-15);
        // z = 1: C_0(1,a) = 1 − a.
        let c0_z1 = kernel_coeff(0, cplx(1.0, 0.0), cplx(5.0, 0.0), PathSelect::Explicit).unwrap();
        assert!(rel(c0_z1, cplx(-4.0, 0.0)) < 1e-15);
        // C_1(2,2) = −1/2 on both the explicit and integer-direct paths.
        let e = kernel_coeff(1, cplx(2.0, 0.0), cplx(2.0, 0.0), PathSelect::Explicit).unwrap();
        let d = kernel_coeff(1, cplx(2.0, 0.0), cplx(2.0, 0.0), PathSelect::IntegerDirect).unwrap();
        assert_eq!(d, cplx(-0.5, 0.0));
        assert!(rel(e, cplx(-0.5, 0.0)) < 1e-15);
    }

    #[test]
    fn kernel_vanishes_at_a_equal_one() {
        for n in 0..=8 {
            let d =
                kernel_coeff(n, cplx(3.0, 0.0), cplx(1.0, 0.0), PathSelect::IntegerDirect).unwrap();
            assert_eq!(d, cplx(0.0, 0.0), "integer-direct n={n}");
            let e = kernel_coeff(n, cplx(3.0, 0.0), cplx(1.0, 0.0), PathSelect::Explicit).unwrap();
            assert!(e.norm() <= 1e-15, "explicit n={n}: {e}");
        }
    }

    #[test]
    fn paths_agree_at_moderate_order() {
        let z = cplx(2.0, 0.0);
        let a = cplx(5.0, 0.0);
        for n in 0..=12 {
            let e = kernel_coeff(n, z, a, PathSelect::Explicit).unwrap();
            let r = kernel_coeff(n, z, a, PathSelect::Recurrence).unwrap();
            let d = kernel_coeff(n, z, a, PathSelect::IntegerDirect).unwrap();
            assert!(rel(e, r) < 1e-13, "explicit/recurrence n={n}");
            assert!(rel(e, d) < 1e-13, "explicit/direct n={n}");
        }
    }

    #[test]
    fn z_equal_one_branches_agree() {
        let a = cplx(7.5, 0.0);
        for n in 0..=10 {
            let e = kernel_coeff(n, cplx(1.0, 0.0), a, PathSelect::Explicit).unwrap();
            let r = kernel_coeff(n, cplx(1.0, 0.0), a, PathSelect::Recurrence).unwrap();
            assert!(rel(e, r) < 1e-13, "n={n}: {e} vs {r}");
        }
    }

    #[test]
    fn auto_resolution_rules() {
        let t = CoefficientTable::build(cplx(2.0, 0.0), cplx(5.0, 0.0), PathSelect::Auto, 3)
            .unwrap();
        assert_eq!(t.path, PathSelect::IntegerDirect);
        let t = CoefficientTable::build(cplx(2.0, 0.0), cplx(5.5, 0.0), PathSelect::Auto, 3)
            .unwrap();
        assert_eq!(t.path, PathSelect::Explicit);
        assert!(t.diagnostics.iter().any(|d| d.contains("auto-selected")));
    }

    #[test]
    fn domain_and_usage_errors() {
        assert!(matches!(
            kernel_coeff(2, cplx(0.0, 0.0), cplx(5.0, 0.0), PathSelect::Auto),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            kernel_coeff(2, cplx(2.0, 0.0), cplx(5.5, 0.0), PathSelect::IntegerDirect),
            Err(Error::Usage(_))
        ));
        // Non-finite inputs are a caller bug, reported as Usage rather than Domain.
        assert!(matches!(
            kernel_coeff(2, cplx(f64::NAN, 0.0), cplx(5.0, 0.0), PathSelect::Auto),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn table_shape_and_dump() {
        let t = CoefficientTable::build(cplx(2.0, 0.0), cplx(2.0, 0.0), PathSelect::Explicit, 1)
            .unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.c.len(), 2);
        assert_eq!(t.p.len(), 2);
        assert_eq!(t.big_c.len(), 2);
        assert_eq!(
            t.to_debug_json(),
            r#"{"z":[2.0,0.0],"a":[2.0,0.0],"path":"explicit","C":[[-0.5,0.0],[-0.5,0.0]]}"#
        );
    }

    #[test]
    fn table_at_one_has_empty_c_and_p() {
        let t = CoefficientTable::build(cplx(1.0, 0.0), cplx(7.5, 0.0), PathSelect::Explicit, 4)
            .unwrap();
        assert!(t.c.is_empty());
        assert!(t.p.is_empty());
        assert_eq!(t.big_c.len(), 5);
        assert!(rel(t.big_c[0], cplx(-6.5, 0.0)) < 1e-15); // 1 − a
    }

    #[test]
    fn near_one_conditioning_warning() {
        let t = CoefficientTable::build(cplx(1.0005, 0.0), cplx(5.5, 0.0), PathSelect::Explicit, 2)
            .unwrap();
        assert!(t.diagnostics.iter().any(|d| d.contains("conditioning")));
    }

    #[test]
    fn integer_direct_f64_window_matches_extended_path() {
        // Force the extended-precision fallback with |z| < 0.5 and compare
        // against the in-window double path at a nearby point.
        let m = cplx(6.0, 0.0);
        let v_hp = kernel_coeff(7, cplx(0.4, 0.0), m, PathSelect::IntegerDirect).unwrap();
        let mut ctx = Ctx::new();
        let direct = hp_integer_direct(7, &Cx::from_c64(cplx(0.4, 0.0)), 6, &mut ctx)[7].to_c64();
        assert_eq!(v_hp, direct);
        let v_f64 = kernel_coeff(7, cplx(0.6, 0.0), m, PathSelect::IntegerDirect).unwrap();
        let hp_check = hp_integer_direct(7, &Cx::from_c64(cplx(0.6, 0.0)), 6, &mut ctx)[7].to_c64();
        assert!(rel(v_f64, hp_check) < 1e-14);
    }

    #[test]
    fn complex_a_explicit_recurrence_agreement() {
        let z = cplx(2.0, 0.0);
        let a = cplx(10.0, 1.0);
        for n in 0..=10 {
            let e = kernel_coeff(n, z, a, PathSelect::Explicit).unwrap();
            let r = kernel_coeff(n, z, a, PathSelect::Recurrence).unwrap();
            assert!(rel(e, r) < 1e-13, "n={n}");
        }
    }
}
