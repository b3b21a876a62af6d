//! Evaluation of the large-`a` expansion of `F(z,s,a) = Φ(z,s,a) − z^(−a)·Li_s(z)`,
//! its convergent variant at integer `a`, and the series built on top of them:
//! the finite power sum `η`, the classic expansion of `Φ` off the ray `[1,∞)`,
//! the separable two-sum split, and the Hurwitz-zeta series at integer argument.
//!
//! All term generation runs in extended precision internally; results are
//! rounded to doubles at the API boundary, with `value` always equal to the
//! compensated double-precision re-sum of the rounded `terms`.

use crate::coefficients::{resolve_path, PathSelect, ResolvedPath};
use crate::error::{Error, Result};
use crate::hp::{Ctx, Cx, R};
use crate::kahan::CompensatedSum;
use crate::oracles;
use crate::scalar::{cplx, ensure_finite, ComplexScalar};
use serde::Serialize;

/// Outcome of a truncated series evaluation.
///
/// `value` is the compensated sum of `terms` (re-summing `terms` in order
/// reproduces `value` exactly); `order_used == terms.len()`;
/// `remainder_estimate` is a heuristic magnitude for the truncation error,
/// not a proven bound.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionResult {
    pub value: ComplexScalar,
    pub terms: Vec<ComplexScalar>,
    pub order_used: usize,
    pub remainder_estimate: f64,
    pub diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct ResultDump<'a> {
    value: [f64; 2],
    order: usize,
    remainder_estimate: f64,
    terms: Vec<[f64; 2]>,
    diagnostics: &'a [String],
}

impl ExpansionResult {
    fn from_terms(terms: Vec<ComplexScalar>, remainder_estimate: f64, diagnostics: Vec<String>) -> Self {
        let value = terms.iter().copied().collect::<CompensatedSum>().value();
        ExpansionResult {
            value,
            order_used: terms.len(),
            terms,
            remainder_estimate,
            diagnostics,
        }
    }

    /// JSON form: `{"value":[re,im],"order":N,"remainder_estimate":r,"terms":[[re,im],...],"diagnostics":["..."]}`.
    pub fn to_json(&self) -> String {
        let dump = ResultDump {
            value: [self.value.re, self.value.im],
            order: self.order_used,
            remainder_estimate: self.remainder_estimate,
            terms: self.terms.iter().map(|t| [t.re, t.im]).collect(),
            diagnostics: &self.diagnostics,
        };
        serde_json::to_string(&dump).expect("serialization of plain numbers cannot fail")
    }
}

/// Method selector for [`evaluate_eta`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EtaMethod {
    /// Truncated large-`a` expansion at the given order.
    Asymptotic(usize),
    /// Convergent integer-`a` series summed to the given relative tolerance.
    Convergent(f64),
    /// Direct summation oracle.
    Direct,
}

/// Extended-precision terms `C_k(z,a)·(s)_k·a^(−(k+s))` for `k = 0..=n`
/// (one past the requested order, so the caller can form a first-omitted-term
/// remainder estimate). `a^(−(k+s))` is `exp(−(k+s)·log a)` on the principal
/// branch with `log a` computed once.
fn hp_terms(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    n: usize,
    path: ResolvedPath,
    ctx: &mut Ctx,
) -> Vec<Cx> {
    let coeffs = crate::coefficients::hp_kernel_list(n, z, a, path, ctx);
    let sc = Cx::from_c64(s);
    let ln_a = Cx::from_c64(a).ln(ctx);
    let mut poch = Cx::one();
    let mut out = Vec::with_capacity(n + 1);
    for (k, coeff) in coeffs.iter().enumerate() {
        let shift = Cx::from_real(R::from_i64(k as i64));
        let exponent = (&sc + &shift).neg();
        let apow = (&exponent * &ln_a).exp(ctx);
        out.push(&(coeff * &poch) * &apow);
        poch = &poch * &(&sc + &shift);
    }
    out
}

fn expansion_domain(z: ComplexScalar, s: ComplexScalar, a: ComplexScalar, n: usize) -> Result<()> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    ensure_finite(a, "a")?;
    if z.norm() == 0.0 {
        return Err(Error::Domain(
            "z = 0: the combination F involves z^(1-a), undefined at the origin".into(),
        ));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain("Re s > 0 required for the large-a expansion".into()));
    }
    if a.re <= 1.0 {
        return Err(Error::Domain("Re a > 1 required for the large-a expansion".into()));
    }
    if n == 0 {
        return Err(Error::Usage("expansion order N >= 1 required".into()));
    }
    Ok(())
}

fn near_pole_warning(z: ComplexScalar, diagnostics: &mut Vec<String>) {
    let d = (z - 1.0).norm();
    if d > 0.0 && d < 1e-3 {
        diagnostics.push(
            "conditioning warning: |z - 1| < 1e-3; coefficient formation near the kernel pole loses accuracy"
                .to_string(),
        );
    }
}

fn smallest_term_note(terms: &[ComplexScalar], diagnostics: &mut Vec<String>) {
    if let Some((idx, _)) = terms
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| x.norm().total_cmp(&y.norm()))
    {
        diagnostics.push(format!("smallest term: index {idx} of {}", terms.len()));
    }
}

/// `|z^(1−a)|`, the magnitude of the exponentially small second component.
fn second_component_scale(z: ComplexScalar, a: ComplexScalar) -> f64 {
    ((cplx(1.0, 0.0) - a) * z.ln()).re.exp()
}

/// Truncated expansion `Σ_{n=0}^{N−1} C_n(z,a)·(s)_n/a^(n+s)` of `F(z,s,a)`,
/// asymptotic for large `Re a` (convergent when `a` is a positive integer).
///
/// Requires `Re s > 0`, `Re a > 1`, `z ≠ 0`, `N ≥ 1`. The remainder estimate
/// is the first omitted term's magnitude plus `|z^(1−a)|` — a heuristic, not
/// a proven bound.
pub fn expand_f(z: ComplexScalar, s: ComplexScalar, a: ComplexScalar, n: usize) -> Result<ExpansionResult> {
    expansion_domain(z, s, a, n)?;
    let path = resolve_path(z, a, PathSelect::Auto)?;
    let mut ctx = Ctx::new();
    let hp = hp_terms(z, s, a, n, path, &mut ctx);
    let terms: Vec<ComplexScalar> = hp[..n].iter().map(Cx::to_c64).collect();
    let remainder = hp[n].abs().to_f64() + second_component_scale(z, a);
    let mut diagnostics = vec![format!("path: {}", path.public().name())];
    near_pole_warning(z, &mut diagnostics);
    smallest_term_note(&terms, &mut diagnostics);
    diagnostics.push(
        "remainder estimate: first omitted term plus |z^(1-a)|; heuristic, not a proven bound".to_string(),
    );
    Ok(ExpansionResult::from_terms(terms, remainder, diagnostics))
}

/// Extended-precision partial sum `Σ_{k=0}^{n−1} C_k(z,a)·(s)_k/a^(k+s)`,
/// for validation code that measures relative errors finer than double
/// rounding allows.
pub(crate) fn hp_partial_sum(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    n: usize,
    ctx: &mut Ctx,
) -> Result<Cx> {
    expansion_domain(z, s, a, n)?;
    let path = resolve_path(z, a, PathSelect::Auto)?;
    let hp = hp_terms(z, s, a, n - 1, path, ctx);
    let mut acc = Cx::zero();
    for t in &hp[..n] {
        acc = &acc + t;
    }
    Ok(acc)
}

/// Convergent variant of the expansion at positive integer `a = m ≥ 2`:
/// sums `C_n(z,m)·(s)_n/m^(n+s)` until three consecutive terms fall below
/// `tol` relative to the partial sum, or `max_order` is hit (an error, with
/// the best value attached).
///
/// In-domain for `|z| ≥ 1` and `Re s > 0`.
pub fn evaluate_f_convergent(
    z: ComplexScalar,
    s: ComplexScalar,
    m: u32,
    tol: f64,
    max_order: usize,
) -> Result<ExpansionResult> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    if s.re <= 0.0 {
        return Err(Error::Domain("Re s > 0 required".into()));
    }
    if m < 2 {
        return Err(Error::Usage("integer argument m >= 2 required".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Usage("tol must be positive".into()));
    }
    if z.norm() < 1.0 {
        return Err(Error::Domain(
            "convergent variant requires |z| >= 1 (inside the disc, use the defining series)".into(),
        ));
    }
    let mut diagnostics = vec!["path: integer-direct".to_string()];
    if z.im != 0.0 || z.re < 1.0 {
        diagnostics.push(
            "domain gate: |z| >= 1; for complex z with Re z < 1 convergence is heuristic".to_string(),
        );
    }
    // Fused form of the terms: C_n(z,m)·(s)_n/m^(n+s)
    //   = −m^(−s) · [(s)_n/n!] · Σ_{k=1}^{m−1} (k/m)^n z^(−k),
    // with every factor bounded by 1 in magnitude except the slowly growing
    // (s)_n/n!. Ratio powers and the Pochhammer factor update incrementally.
    let mf = m as f64;
    let front = -cplx(mf, 0.0).powc(-s);
    let zinv = {
        let mut v = Vec::with_capacity(m as usize - 1);
        let mut w = cplx(1.0, 0.0);
        for _ in 1..m {
            w /= z;
            v.push(w);
        }
        v
    };
    let mut rpow: Vec<f64> = (1..m).map(|_| 1.0).collect();
    let ratios: Vec<f64> = (1..m).map(|k| k as f64 / mf).collect();
    let mut poch_over_fact = cplx(1.0, 0.0);
    let mut terms = Vec::new();
    let mut acc = CompensatedSum::new();
    let mut small_streak = 0u32;
    for order in 0..max_order {
        let mut inner = CompensatedSum::new();
        for k in 0..zinv.len() {
            inner.add(zinv[k] * rpow[k]);
        }
        let term = front * poch_over_fact * inner.value();
        terms.push(term);
        acc.add(term);
        let last_mag = term.norm();
        if last_mag <= tol * acc.value().norm().max(1e-300) {
            small_streak += 1;
            if small_streak >= 3 {
                diagnostics.push(format!(
                    "stop: three consecutive terms below tolerance at order {}",
                    order + 1
                ));
                return Ok(ExpansionResult::from_terms(terms, last_mag, diagnostics));
            }
        } else {
            small_streak = 0;
        }
        for k in 0..rpow.len() {
            rpow[k] *= ratios[k];
        }
        poch_over_fact *= (s + order as f64) / (order as f64 + 1.0);
    }
    Err(Error::NoConvergence {
        max_order,
        best: acc.value(),
    })
}

/// Finite power sum `η(z,s,m) = Σ_{n=1}^{m} z^n/n^s`, by the requested method.
///
/// The asymptotic and convergent methods compute `−z^(m+1)·F(z,s,m+1)` and
/// require `Re s > 0` and `m ≥ 2`; `Direct` delegates to the summation oracle.
pub fn evaluate_eta(z: ComplexScalar, s: ComplexScalar, m: u32, method: EtaMethod) -> Result<ComplexScalar> {
    if m < 1 {
        return Err(Error::Usage("m >= 1 required".into()));
    }
    match method {
        EtaMethod::Direct => oracles::eta_direct(z, s, m),
        EtaMethod::Asymptotic(order) => {
            eta_expansion_domain(s, m)?;
            let f = expand_f(z, s, cplx((m + 1) as f64, 0.0), order)?;
            Ok(-z.powu(m + 1) * f.value)
        }
        EtaMethod::Convergent(tol) => {
            eta_expansion_domain(s, m)?;
            let f = evaluate_f_convergent(z, s, m + 1, tol, 4000)?;
            Ok(-z.powu(m + 1) * f.value)
        }
    }
}

fn eta_expansion_domain(s: ComplexScalar, m: u32) -> Result<()> {
    if s.re <= 0.0 {
        return Err(Error::Domain(
            "Re s > 0 required for the expansion-based methods".into(),
        ));
    }
    if m < 2 {
        return Err(Error::Usage(
            "m >= 2 required for the expansion-based methods".into(),
        ));
    }
    Ok(())
}

/// Classic expansion of the Lerch transcendent off the ray `[1,∞)`:
/// `Φ(z,s,a) ≈ Σ_{n=0}^{N−1} c_n(z)·(s)_n/a^(n+s)` with
/// `c_n(z) = (−1)^n·Li_(−n)(z)/n!`.
///
/// Requires `z ∉ [1,∞)`, `Re s > 0`, `Re a > 0`. The remainder estimate is
/// the first omitted term, falling back to the first *nonzero* omitted term
/// when structured zeros (e.g. at `z = −1`) make the literal one vanish.
pub fn expand_phi_classic(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    n: usize,
) -> Result<ExpansionResult> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    ensure_finite(a, "a")?;
    if z.im == 0.0 && z.re >= 1.0 {
        return Err(Error::Domain(
            "z on the ray [1, inf) is outside the classic expansion; use expand_f there".into(),
        ));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain("Re s > 0 required".into()));
    }
    if a.re <= 0.0 {
        return Err(Error::Domain("Re a > 0 required".into()));
    }
    if n == 0 {
        return Err(Error::Usage("expansion order N >= 1 required".into()));
    }
    // Look a few coefficients past the truncation so the remainder fallback
    // can find a nonzero omitted term.
    let extra = 8usize;
    let mut ctx = Ctx::new();
    let zc = Cx::from_c64(z);
    let c = crate::coefficients::hp_c_list(n + extra, &zc, &mut ctx);
    let sc = Cx::from_c64(s);
    let ln_a = Cx::from_c64(a).ln(&mut ctx);
    let mut poch = Cx::one();
    let mut hp_all = Vec::with_capacity(n + extra + 1);
    for (k, ck) in c.iter().enumerate() {
        let shift = Cx::from_real(R::from_i64(k as i64));
        let exponent = (&sc + &shift).neg();
        let apow = (&exponent * &ln_a).exp(&mut ctx);
        hp_all.push(&(ck * &poch) * &apow);
        poch = &poch * &(&sc + &shift);
    }
    let terms: Vec<ComplexScalar> = hp_all[..n].iter().map(Cx::to_c64).collect();
    let mut diagnostics = vec!["path: classic power-series coefficients".to_string()];
    let mut remainder = hp_all[n].abs().to_f64();
    if remainder == 0.0 {
        if let Some(t) = hp_all[n..].iter().map(|t| t.abs().to_f64()).find(|&m| m > 0.0) {
            remainder = t;
            diagnostics.push(
                "remainder: literal first omitted term vanishes; using first nonzero omitted term"
                    .to_string(),
            );
        }
    }
    smallest_term_note(&terms, &mut diagnostics);
    diagnostics
        .push("remainder estimate: first omitted term; heuristic, not a proven bound".to_string());
    Ok(ExpansionResult::from_terms(terms, remainder, diagnostics))
}

/// Separable split of the truncated expansion for real `z > 1`:
/// returns `(Σ c_k(z)(s)_k/a^(k+s), −z^(1−a)·Σ p_k(z,a)(s)_k/a^(k+s))`,
/// whose sum equals `expand_f(z,s,a,N).value`. The second component carries
/// the exponentially small scale `z^(1−a)`.
pub fn split_f(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    n: usize,
) -> Result<(ComplexScalar, ComplexScalar)> {
    expansion_domain(z, s, a, n)?;
    if z.im != 0.0 || z.re <= 1.0 {
        return Err(Error::Domain(
            "real z > 1 required for the separable split".into(),
        ));
    }
    let mut ctx = Ctx::new();
    let zc = Cx::from_c64(z);
    let c = crate::coefficients::hp_c_list(n - 1, &zc, &mut ctx);
    let ac = Cx::from_c64(a);
    let p = crate::coefficients::hp_p_list(n - 1, &ac, &c, &mut ctx);
    let sc = Cx::from_c64(s);
    let ln_a = ac.ln(&mut ctx);
    let mut poch = Cx::one();
    let mut sum_c = Cx::zero();
    let mut sum_p = Cx::zero();
    for k in 0..n {
        let shift = Cx::from_real(R::from_i64(k as i64));
        let exponent = (&sc + &shift).neg();
        let apow = (&exponent * &ln_a).exp(&mut ctx);
        let weight = &poch * &apow;
        sum_c = &sum_c + &(&c[k] * &weight);
        sum_p = &sum_p + &(&p[k] * &weight);
        poch = &poch * &(&sc + &shift);
    }
    // z^(1−a) on the principal branch.
    let zc = Cx::from_c64(z);
    let one_minus_a = &Cx::one() - &ac;
    let scale = (&one_minus_a * &zc.ln(&mut ctx)).exp(&mut ctx);
    let part2 = (&scale * &sum_p).neg();
    Ok((sum_c.to_c64(), part2.to_c64()))
}

/// Hurwitz zeta at integer argument via the kernel-coefficient series:
/// `ζ(s,m) = ζ(s) + Σ_{k≥0} C_k(1,m)·(s)_k/m^(k+s)`, with `ζ(s)` supplied by
/// the caller. Terms are summed until three consecutive fall below `tol`
/// relative to the accumulated value.
pub fn hurwitz_zeta_series(
    s: ComplexScalar,
    m: u32,
    tol: f64,
    zeta_s: ComplexScalar,
) -> Result<ComplexScalar> {
    ensure_finite(s, "s")?;
    ensure_finite(zeta_s, "zeta_s")?;
    if s.re <= 1.0 {
        return Err(Error::Domain(
            "Re s > 1 required (the supplied zeta value must come from a convergent sum)".into(),
        ));
    }
    if m < 2 {
        return Err(Error::Usage("integer argument m >= 2 required".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Usage("tol must be positive".into()));
    }
    // Same fused integer-direct term form as the convergent variant, at z=1.
    const CAP: usize = 20_000;
    let mf = m as f64;
    let front = -cplx(mf, 0.0).powc(-s);
    let ratios: Vec<f64> = (1..m).map(|k| k as f64 / mf).collect();
    let mut rpow: Vec<f64> = (1..m).map(|_| 1.0).collect();
    let mut poch_over_fact = cplx(1.0, 0.0);
    let mut acc = CompensatedSum::new();
    acc.add(zeta_s);
    let mut small_streak = 0u32;
    for order in 0..CAP {
        let mut inner = CompensatedSum::new();
        for r in &rpow {
            inner.add(cplx(*r, 0.0));
        }
        let term = front * poch_over_fact * inner.value();
        acc.add(term);
        if term.norm() <= tol * acc.value().norm().max(1e-300) {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(acc.value());
            }
        } else {
            small_streak = 0;
        }
        for k in 0..rpow.len() {
            rpow[k] *= ratios[k];
        }
        poch_over_fact *= (s + order as f64) / (order as f64 + 1.0);
    }
    Err(Error::NoConvergence {
        max_order: CAP,
        best: acc.value(),
    })
}

/// Truncation-order selection: the index `1 ≤ n ≤ max_order` minimising the
/// term magnitude `|C_n(z,a)·(s)_n/a^(n+s)|` (first index on ties — the
/// standard smallest-term heuristic for an asymptotic tail). For positive
/// integer `a` the series converges and the full `max_order` is returned.
pub fn select_truncation(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    max_order: usize,
) -> Result<usize> {
    expansion_domain(z, s, a, max_order.max(1))?;
    if max_order == 0 {
        return Err(Error::Usage("max_order >= 1 required".into()));
    }
    let path = resolve_path(z, a, PathSelect::Auto)?;
    if matches!(path, ResolvedPath::IntegerDirect(_)) {
        return Ok(max_order);
    }
    let mut ctx = Ctx::new();
    let hp = hp_terms(z, s, a, max_order, path, &mut ctx);
    let mut best = 1usize;
    let mut best_mag = f64::INFINITY;
    for n in 1..=max_order {
        let mag = hp[n].abs().to_f64();
        if mag < best_mag {
            best_mag = mag;
            best = n;
        }
    }
    Ok(best)
}
