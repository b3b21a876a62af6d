//! Independent reference evaluators ("oracles").
//!
//! Everything in this module is deliberately built from *different*
//! mathematics than the asymptotic expansion it is used to cross-check:
//! direct finite summation, defining power series inside the unit disc,
//! Euler–Maclaurin tail sums, and adaptive quadrature of the pole-free
//! integral representation. Agreement between independent routes is the
//! basis of the validation suite.

mod gamma;
mod quadrature;

pub use quadrature::{f_quadrature, QuadratureSettings};

pub(crate) use quadrature::hp_f_quadrature;

use crate::coefficients::{bernoulli_number, factorial_f64, pochhammer};
use crate::error::{Error, Result};
use crate::hp::{Ctx, Cx, R};
use crate::kahan::CompensatedSum;
use crate::scalar::{cplx, ensure_finite, ComplexScalar};
use num_traits::ToPrimitive;

fn is_real_integer(v: ComplexScalar) -> Option<i64> {
    if v.im == 0.0 && v.re.fract() == 0.0 && v.re.abs() <= 9.0e15 {
        Some(v.re as i64)
    } else {
        None
    }
}

/// `base^exp` by repeated squaring on doubles; exact whenever every
/// intermediate is an integer below 2^53.
fn pow_int(base: f64, exp: i64) -> f64 {
    if exp >= 0 {
        base.powi(exp.min(i32::MAX as i64) as i32)
    } else {
        1.0 / base.powi((-exp).min(i32::MAX as i64) as i32)
    }
}

/// Term-count threshold below which `η` terms are formed in extended
/// precision; longer sums fall back to compensated double accumulation,
/// where the extra cost would be disproportionate.
const ETA_HP_TERM_LIMIT: u32 = 10_000;

/// Finite sum `η(z,s,m) = Σ_{n=1}^{m} z^n / n^s` by direct summation.
///
/// Up to 10^4 terms the sum runs in extended precision and rounds once at
/// the end, so clean rational values land on their nearest double (e.g.
/// `η(2,1,3) = 20/3`; summing already-rounded double terms can finish an
/// ulp away). Longer sums use compensated double accumulation.
pub fn eta_direct(z: ComplexScalar, s: ComplexScalar, m: u32) -> Result<ComplexScalar> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    if m <= ETA_HP_TERM_LIMIT {
        let mut ctx = Ctx::new();
        return Ok(hp_eta_direct(z, s, m, &mut ctx).to_c64());
    }
    Ok(eta_direct_f64(z, s, m))
}

/// Compensated double-precision fallback for very long sums. Integer `s`
/// uses exact integer powers rather than `exp(s·ln n)`, so integer inputs
/// whose sums stay inside the 2^53 range come out exact.
fn eta_direct_f64(z: ComplexScalar, s: ComplexScalar, m: u32) -> ComplexScalar {
    let mut acc = CompensatedSum::new();
    let mut zk = cplx(1.0, 0.0);
    let int_s = is_real_integer(s);
    for n in 1..=m as i64 {
        zk *= z;
        let term = match int_s {
            Some(si) => zk * pow_int(n as f64, -si),
            None => zk * cplx(n as f64, 0.0).powc(-s),
        };
        acc.add(term);
    }
    acc.value()
}

/// Extended-precision `η(z,s,m)`.
pub(crate) fn hp_eta_direct(z: ComplexScalar, s: ComplexScalar, m: u32, ctx: &mut Ctx) -> Cx {
    let zc = Cx::from_c64(z);
    let sc = Cx::from_c64(s);
    let int_s = is_real_integer(s);
    let mut acc = Cx::zero();
    let mut zk = Cx::one();
    for n in 1..=m as i64 {
        zk = &zk * &zc;
        let term = match int_s {
            Some(si) => zk.scale(&R::from_i64(n).powi(-si)),
            None => {
                let ln_n = R::from_i64(n).ln(ctx);
                let p = sc.neg().scale(&ln_n).exp(ctx);
                &zk * &p
            }
        };
        acc = &acc + &term;
    }
    acc
}

/// Polylogarithm `Li_s(z) = Σ_{k≥1} z^k/k^s` from its defining series.
///
/// Valid strictly inside the unit disc, or on it when `Re s > 1`. Negative
/// real `z` is summed in consecutive pairs so the alternating tail converges
/// at twice the polynomial rate.
pub fn li_series(z: ComplexScalar, s: ComplexScalar, tol: f64) -> Result<ComplexScalar> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    series_sum(z, s, tol, |k, zk| zk * cplx(k as f64, 0.0).powc(-s), 1)
}

/// Lerch transcendent `Φ(z,s,a) = Σ_{k≥0} z^k/(k+a)^s` from its defining
/// series, truncated when `|term| < tol·|sum|` for three consecutive terms.
///
/// Same `z` domain as [`li_series`]; additionally `a` must avoid the
/// nonpositive integers, where individual terms have poles.
pub fn phi_series(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    tol: f64,
) -> Result<ComplexScalar> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    ensure_finite(a, "a")?;
    if let Some(ai) = is_real_integer(a) {
        if ai <= 0 {
            return Err(Error::Domain(
                "phi series undefined at nonpositive integer a (series terms have poles)".into(),
            ));
        }
    }
    series_sum(z, s, tol, |k, zk| zk * (a + k as f64).powc(-s), 0)
}

/// Shared series driver with the unit-disc domain check, the
/// three-consecutive-small-terms stopping rule, and pairwise accumulation
/// for negative real `z`.
fn series_sum(
    z: ComplexScalar,
    s: ComplexScalar,
    tol: f64,
    term: impl Fn(u64, ComplexScalar) -> ComplexScalar,
    first_index: u64,
) -> Result<ComplexScalar> {
    if !(tol > 0.0) {
        return Err(Error::Usage("tol must be positive".into()));
    }
    let r2 = z.norm_sqr();
    if !(r2 < 1.0 || (r2 == 1.0 && s.re > 1.0)) {
        return Err(Error::Domain(
            "series requires |z| < 1, or |z| = 1 with Re s > 1".into(),
        ));
    }
    const MAX_TERMS: u64 = 2_000_000;
    let paired = z.im == 0.0 && z.re < 0.0;
    let mut acc = CompensatedSum::new();
    let mut zk = if first_index == 0 { cplx(1.0, 0.0) } else { z };
    let mut small_streak = 0u32;
    let mut k = first_index;
    while k < first_index + MAX_TERMS {
        let mut t = term(k, zk);
        zk *= z;
        k += 1;
        if paired && k < first_index + MAX_TERMS {
            t += term(k, zk);
            zk *= z;
            k += 1;
        }
        acc.add(t);
        let scale = acc.value().norm().max(1e-300);
        if t.norm() <= tol * scale {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(acc.value());
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::NoConvergence {
        max_order: MAX_TERMS as usize,
        best: acc.value(),
    })
}

/// Hurwitz zeta `ζ(s,m) = Σ_{n≥0} (m+n)^(−s)` at integer argument, by direct
/// summation completed with the integral tail `(m+N)^(1−s)/(s−1)`.
///
/// Terms are added (in blocks) until the first omitted correction
/// `(m+N)^(−s)/2` drops below `tol` relative to the accumulated value, up to
/// a cap of 10^6 terms; an unreachable tolerance is an accuracy error
/// carrying the best estimate.
pub fn hurwitz_zeta_direct(s: ComplexScalar, m: u32, tol: f64) -> Result<ComplexScalar> {
    ensure_finite(s, "s")?;
    if s.re <= 1.0 {
        return Err(Error::Domain(
            "direct Hurwitz summation requires Re s > 1".into(),
        ));
    }
    if m < 1 {
        return Err(Error::Usage("m >= 1 required".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Usage("tol must be positive".into()));
    }
    const CAP: usize = 1_000_000;
    const BLOCK: usize = 1024;
    let mf = m as f64;
    let mut partial = CompensatedSum::new();
    let mut n = 0usize;
    loop {
        let stop = (n + BLOCK).min(CAP);
        while n < stop {
            partial.add(cplx(mf + n as f64, 0.0).powc(-s));
            n += 1;
        }
        let edge = cplx(mf + n as f64, 0.0);
        let tail = edge.powc(1.0 - s) / (s - 1.0);
        let value = partial.value() + tail;
        let residual = edge.powc(-s).norm() / 2.0;
        if residual <= tol * value.norm().max(1e-300) {
            return Ok(value);
        }
        if n >= CAP {
            return Err(Error::Accuracy {
                message: format!(
                    "Hurwitz direct sum: residual {residual:.3e} above tol after {CAP} terms"
                ),
                best: Some(value),
            });
        }
    }
}

/// Euler–Maclaurin approximation to `F(1,s,m) = −Σ_{k=1}^{m−1} k^(−s)` for
/// real `s > 1`, with `ζ(s)` supplied by the caller:
///
/// ```text
/// −ζ(s) + m^(1−s)/(s−1) + m^(−s)/2 + Σ_{k=1}^{n} B_(2k)/(2k)!·(s)_(2k−1)·m^(−(2k+s−1))
/// ```
///
/// Returns the value paired with the magnitude of the first omitted
/// correction, `(|B_(2n+2)|/(2n+2)!)·|(s)_(2n+1)|/m^(2n+s+1)`, which bounds
/// the truncation error of this alternating-remainder expansion.
pub fn euler_maclaurin_f1(
    s: ComplexScalar,
    m: u32,
    n: usize,
    zeta_s: ComplexScalar,
) -> Result<(ComplexScalar, f64)> {
    ensure_finite(s, "s")?;
    ensure_finite(zeta_s, "zeta_s")?;
    if s.im != 0.0 || s.re <= 1.0 {
        return Err(Error::Domain("real s > 1 required".into()));
    }
    if m < 2 {
        return Err(Error::Usage(
            "m >= 2 required: the expansion is in inverse powers of m".into(),
        ));
    }
    if n < 1 {
        return Err(Error::Usage("at least one correction term required".into()));
    }
    let sr = s.re;
    let mf = m as f64;
    let mut acc = CompensatedSum::new();
    acc.add(-zeta_s);
    acc.add(cplx(mf.powf(1.0 - sr) / (sr - 1.0), 0.0));
    acc.add(cplx(mf.powf(-sr) / 2.0, 0.0));
    for k in 1..=n {
        let b2k = bernoulli_number(2 * k)
            .to_f64()
            .ok_or_else(|| Error::Usage(format!("Bernoulli order {} overflows", 2 * k)))?;
        let coeff = b2k / factorial_f64(2 * k)? * pochhammer(s, 2 * k - 1).re;
        acc.add(cplx(coeff * mf.powf(-(2.0 * k as f64 + sr - 1.0)), 0.0));
    }
    let b_next = bernoulli_number(2 * n + 2)
        .to_f64()
        .ok_or_else(|| Error::Usage(format!("Bernoulli order {} overflows", 2 * n + 2)))?
        .abs();
    let bound = b_next / factorial_f64(2 * n + 2)? * pochhammer(s, 2 * n + 1).re.abs()
        * mf.powf(-(2.0 * n as f64 + sr + 1.0));
    Ok((acc.value(), bound))
}

/// Absolute residual of the depth-truncated summation-by-parts rearrangement
///
/// ```text
/// |η(z,s,m) − [z^(m+1)/((z−1)(m+1)^s) − z/(z−1)
///              + z/(z−1)·Σ_{n=1}^{depth} ((s)_n(−1)^(n−1)/n!)·η(z,s+n,m)]|
/// ```
///
/// with every `η` from [`eta_direct`]. The truncated rearrangement is *not*
/// a convergent scheme in the depth (the inner sums' leading terms do not
/// decay in `n`), and this residual is the honest measure of that.
pub fn summation_by_parts_residual(
    z: ComplexScalar,
    s: ComplexScalar,
    m: u32,
    depth: usize,
) -> Result<f64> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    if z.im != 0.0 || z.re <= 1.0 {
        return Err(Error::Domain(
            "real z > 1 required (the rearrangement divides by z - 1)".into(),
        ));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain("Re s > 0 required".into()));
    }
    if m < 1 || depth < 1 {
        return Err(Error::Usage("m >= 1 and depth >= 1 required".into()));
    }
    let lhs = eta_direct(z, s, m)?;
    let zc = z / (z - 1.0);
    let mf = (m + 1) as f64;
    let mut rhs = CompensatedSum::new();
    rhs.add(z.powu(m + 1) / ((z - 1.0) * cplx(mf, 0.0).powc(s)));
    rhs.add(-zc);
    let mut coeff = cplx(1.0, 0.0); // (s)_n / n!, built incrementally
    for n in 1..=depth {
        let nf = n as f64;
        coeff *= (s + (nf - 1.0)) / nf;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let inner = eta_direct(z, s + nf, m)?;
        rhs.add(zc * sign * coeff * inner);
    }
    Ok((lhs - rhs.value()).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(x: ComplexScalar, y: ComplexScalar) -> f64 {
        (x - y).norm() / y.norm().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn eta_exact_small_sums() {
        // η(1/2, 1, 3) = 1/2 + 1/8 + 1/24 = 2/3.
        let v = eta_direct(cplx(0.5, 0.0), cplx(1.0, 0.0), 3).unwrap();
        assert!(rel(v, cplx(2.0 / 3.0, 0.0)) < 1e-15);
        // η(1, 1, 4) = H_4 = 25/12.
        let v = eta_direct(cplx(1.0, 0.0), cplx(1.0, 0.0), 4).unwrap();
        assert!(rel(v, cplx(25.0 / 12.0, 0.0)) < 1e-15);
        // η(2, −1, m) = Σ n·2^n = (m−1)·2^(m+1) + 2, exactly.
        for m in 1..=40u32 {
            let v = eta_direct(cplx(2.0, 0.0), cplx(-1.0, 0.0), m).unwrap();
            let exact = (m as f64 - 1.0) * 2f64.powi(m as i32 + 1) + 2.0;
            assert_eq!(v, cplx(exact, 0.0), "m={m}");
        }
    }

    #[test]
    fn eta_empty_and_complex() {
        assert_eq!(
            eta_direct(cplx(2.0, 0.0), cplx(3.0, 0.0), 0).unwrap(),
            cplx(0.0, 0.0)
        );
        let v = eta_direct(cplx(0.5, 0.5), cplx(1.0, 1.0), 5).unwrap();
        assert!(v.norm().is_finite());
    }

    #[test]
    fn double_fallback_matches_hp() {
        let mut ctx = Ctx::new();
        for &(z, s, m) in &[
            (cplx(2.0, 0.0), cplx(2.0, 0.0), 10u32),
            (cplx(5.0, 0.0), cplx(3.0, 0.0), 7),
            (cplx(0.5, 0.2), cplx(1.5, -0.5), 12),
        ] {
            let hp = hp_eta_direct(z, s, m, &mut ctx).to_c64();
            let lo = eta_direct_f64(z, s, m);
            assert!(rel(hp, lo) < 1e-13, "z={z} s={s} m={m}");
        }
    }

    #[test]
    fn eta_rounds_clean_rationals_to_nearest_double() {
        // The term 8/3 rounds before summation in plain double arithmetic,
        // leaving a compensated sum of rounded terms one ulp below 20/3; the
        // extended-precision route must land on the nearest double.
        let v = eta_direct(cplx(2.0, 0.0), cplx(1.0, 0.0), 3).unwrap();
        assert_eq!(v, cplx(20.0 / 3.0, 0.0));
        assert_eq!(format!("{}", v.re), "6.666666666666667");
    }

    #[test]
    fn li_series_known_values() {
        // Li_1(z) = −ln(1−z).
        let v = li_series(cplx(0.5, 0.0), cplx(1.0, 0.0), 1e-16).unwrap();
        assert!(rel(v, cplx(2.0_f64.ln(), 0.0)) < 1e-14);
        // Li_2(−1) = −π²/12, on the boundary via paired summation.
        let v = li_series(cplx(-1.0, 0.0), cplx(2.0, 0.0), 1e-16).unwrap();
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        assert!(rel(v, cplx(-pi2 / 12.0, 0.0)) < 1e-10, "{v}");
    }

    #[test]
    fn li_series_domain() {
        assert!(matches!(
            li_series(cplx(1.5, 0.0), cplx(2.0, 0.0), 1e-12),
            Err(Error::Domain(_))
        ));
        // |z| = 1 needs Re s > 1.
        assert!(matches!(
            li_series(cplx(-1.0, 0.0), cplx(1.0, 0.0), 1e-12),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn phi_series_values_and_domain() {
        // Φ(0, s, a): only the first term survives.
        let v = phi_series(cplx(0.0, 0.0), cplx(2.0, 0.0), cplx(3.0, 0.0), 1e-14).unwrap();
        assert!(rel(v, cplx(1.0 / 9.0, 0.0)) < 1e-15);
        // Φ(z,s,1) = Li_s(z)/z; at s=1, z=0.5 that is 2·ln 2.
        let v = phi_series(cplx(0.5, 0.0), cplx(1.0, 0.0), cplx(1.0, 0.0), 1e-16).unwrap();
        assert!(rel(v, cplx(2.0 * 2.0_f64.ln(), 0.0)) < 1e-13, "{v}");
        assert!(matches!(
            phi_series(cplx(0.5, 0.0), cplx(2.0, 0.0), cplx(-3.0, 0.0), 1e-12),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            phi_series(cplx(2.0, 0.0), cplx(2.0, 0.0), cplx(3.0, 0.0), 1e-12),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn hurwitz_known_values() {
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        let pi4 = pi2 * pi2;
        let v = hurwitz_zeta_direct(cplx(2.0, 0.0), 1, 1e-12).unwrap();
        assert!(rel(v, cplx(pi2 / 6.0, 0.0)) < 5e-12, "{v}");
        let v = hurwitz_zeta_direct(cplx(2.0, 0.0), 2, 1e-12).unwrap();
        assert!(rel(v, cplx(pi2 / 6.0 - 1.0, 0.0)) < 5e-12);
        let v = hurwitz_zeta_direct(cplx(4.0, 0.0), 1, 1e-13).unwrap();
        assert!(rel(v, cplx(pi4 / 90.0, 0.0)) < 5e-13);
    }

    #[test]
    fn hurwitz_shift_identity() {
        // Tolerances sized so the 10^6-term cap is never hit (Re s close to 1
        // needs ~tol^(−1/Re s) terms).
        for &(s, m) in &[(cplx(2.0, 0.0), 3u32), (cplx(2.5, 0.3), 2), (cplx(3.0, 0.0), 7)] {
            let lhs = hurwitz_zeta_direct(s, m, 1e-11).unwrap()
                - hurwitz_zeta_direct(s, m + 1, 1e-11).unwrap();
            let rhs = cplx(m as f64, 0.0).powc(-s);
            assert!(rel(lhs, rhs) < 1e-9, "s={s} m={m}");
        }
    }

    #[test]
    fn hurwitz_domain_and_unreachable_tol() {
        assert!(matches!(
            hurwitz_zeta_direct(cplx(0.5, 0.0), 1, 1e-10),
            Err(Error::Domain(_))
        ));
        // Re s barely above 1: the 10^6-term cap cannot reach 1e−12.
        match hurwitz_zeta_direct(cplx(1.05, 0.0), 1, 1e-12) {
            Err(Error::Accuracy { best, .. }) => assert!(best.unwrap().norm().is_finite()),
            other => panic!("expected accuracy error, got {other:?}"),
        }
    }

    #[test]
    fn euler_maclaurin_bound_holds_against_exact_sums() {
        // F(1,s,m) = −Σ_{k=1}^{m−1} k^(−s), computable exactly.
        for &(s, m, n) in &[
            (cplx(2.0, 0.0), 10u32, 3usize),
            (cplx(3.0, 0.0), 5, 2),
            (cplx(2.0, 0.0), 2, 1),
        ] {
            let zeta = hurwitz_zeta_direct(s, 1, 1e-12).unwrap();
            let (em, bound) = euler_maclaurin_f1(s, m, n, zeta).unwrap();
            let mut exact = cplx(0.0, 0.0);
            for k in 1..m {
                exact -= cplx(k as f64, 0.0).powc(-s);
            }
            let err = (em - exact).norm();
            // The zeta reference itself is only good to ~1e−12 relative.
            assert!(
                err <= bound + 1e-11 * exact.norm().max(1.0),
                "s={s} m={m} n={n}: err {err:e} vs bound {bound:e}"
            );
        }
    }

    #[test]
    fn euler_maclaurin_preconditions() {
        let zeta = cplx(1.6449, 0.0);
        assert!(matches!(
            euler_maclaurin_f1(cplx(0.5, 0.0), 10, 3, zeta),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            euler_maclaurin_f1(cplx(2.0, 1.0), 10, 3, zeta),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            euler_maclaurin_f1(cplx(2.0, 0.0), 1, 3, zeta),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn by_parts_residual_depth_one_by_hand() {
        // z=2, s=1, m=1: LHS = η(2,1,1) = 2 and
        // RHS(1) = 4/2 − 2 + 2·1·η(2,2,1) = 2 − 2 + 4 = 4, so the residual is 2.
        let r = summation_by_parts_residual(cplx(2.0, 0.0), cplx(1.0, 0.0), 1, 1).unwrap();
        assert!((r - 2.0).abs() < 1e-12, "{r}");
    }

    #[test]
    fn by_parts_residual_is_finite_and_reproducible() {
        let r1 = summation_by_parts_residual(cplx(2.0, 0.0), cplx(2.0, 0.0), 10, 4).unwrap();
        let r2 = summation_by_parts_residual(cplx(2.0, 0.0), cplx(2.0, 0.0), 10, 4).unwrap();
        assert!(r1.is_finite() && r1 >= 0.0);
        assert_eq!(r1, r2);
        assert!(matches!(
            summation_by_parts_residual(cplx(1.0, 0.0), cplx(2.0, 0.0), 5, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            summation_by_parts_residual(cplx(0.5, 0.0), cplx(2.0, 0.0), 5, 2),
            Err(Error::Domain(_))
        ));
    }
}
