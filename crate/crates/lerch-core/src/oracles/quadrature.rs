//! Adaptive Gauss–Kronrod quadrature for the integral representation
//!
//! ```text
//! F(z,s,a) = (1/Γ(s)) ∫_0^∞ x^(s−1) · (e^(−ax) − z^(1−a)·e^(−x)) / (1 − z·e^(−x)) dx
//! ```
//!
//! The quotient is the numerically stable rearrangement of
//! `e^(−ax)·(1 − (z·e^(−x))^(1−a))/(1 − z·e^(−x))`. For real `z ≥ 1` the
//! denominator vanishes at `x₀ = ln z`; near that point the kernel is replaced
//! by its Taylor expansion in `u = x − x₀`, which also covers the `z = 1`
//! endpoint where the kernel tends to `1 − a`. For `0 < Re s < 1` the
//! algebraic endpoint singularity is removed by the substitution
//! `x = t^(1/Re s)` on an initial subinterval.
//!
//! Subdivision is worst-panel-first on a binary heap with an insertion
//! sequence number as tie-break, so results are bit-for-bit deterministic.

use crate::error::{Error, Result};
use crate::hp::{Ctx, Cx, R};
use crate::kahan::CompensatedSum;
use crate::oracles::gamma::{gamma_f64, hp_gamma};
use crate::scalar::{cplx, ensure_finite, ComplexScalar};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Tuning knobs for the adaptive integrator.
#[derive(Debug, Clone)]
pub struct QuadratureSettings {
    /// Absolute error target for the accumulated panel estimates.
    pub abs_tol: f64,
    /// Relative error target (against the running integral value).
    pub rel_tol: f64,
    /// Panel-split budget before giving up with a no-convergence error.
    pub max_subdivisions: usize,
    /// Half-width of the Taylor-patch region around the kernel pole.
    pub singularity_window: f64,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
            singularity_window: 1e-3,
        }
    }
}

// 15-point Kronrod nodes (positive half) and weights; the embedded 7-point
// Gauss rule uses the odd-indexed nodes.
const XGK: [&str; 8] = [
    "0.991455371120812639206854697526329",
    "0.949107912342758524526189684047851",
    "0.864864423359769072789712788640926",
    "0.741531185599394439863864773280788",
    "0.586087235467691130294144838258730",
    "0.405845151377397166906606412076961",
    "0.207784955007898467600689403773245",
    "0.000000000000000000000000000000000",
];
const WG: [&str; 4] = [
    "0.129484966168869693270611432679082",
    "0.279705391489276667901467771423780",
    "0.381830050505118944950369775488975",
    "0.417959183673469387755102040816327",
];
const WGK: [&str; 8] = [
    "0.022935322010529224963732008058970",
    "0.063092092629978553290700663189204",
    "0.104790010322250183839876322541518",
    "0.140653259715525918745189590510238",
    "0.169004726639267902826583426598550",
    "0.190350578064785409913256402421014",
    "0.204432940075298892414161999234649",
    "0.209482141084727828012999174891714",
];

fn xgk_f64() -> [f64; 8] {
    let mut out = [0.0; 8];
    for (i, s) in XGK.iter().enumerate() {
        out[i] = s.parse().unwrap();
    }
    out
}

fn wg_f64() -> [f64; 4] {
    let mut out = [0.0; 4];
    for (i, s) in WG.iter().enumerate() {
        out[i] = s.parse().unwrap();
    }
    out
}

fn wgk_f64() -> [f64; 8] {
    let mut out = [0.0; 8];
    for (i, s) in WGK.iter().enumerate() {
        out[i] = s.parse().unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// Problem description shared by the double and extended pipelines
// ---------------------------------------------------------------------------

/// Geometry of the integration problem: pole location, patch window,
/// endpoint-substitution subinterval, and the panel breakpoints (whose last
/// entry is the tail cut-off).
struct Layout {
    /// `ln z` when `z` is real and positive (the kernel pole when `z ≥ 1`).
    x0: Option<f64>,
    window: f64,
    /// Substitution exponent `q = Re s` when `0 < Re s < 1`.
    subst_q: Option<f64>,
    x_cut: f64,
    breakpoints: Vec<f64>,
}

fn validate_domain(z: ComplexScalar, s: ComplexScalar, a: ComplexScalar) -> Result<()> {
    ensure_finite(z, "z")?;
    ensure_finite(s, "s")?;
    ensure_finite(a, "a")?;
    // Negative real z is fine: the kernel denominator 1 - z·e^(-x) cannot
    // vanish there, and (z·e^(-x))^(1-a) stays on one principal-log sheet
    // because e^(-x) > 0 never moves arg(z·e^(-x)). Only z = 0 breaks the
    // representation (0^(1-a) is undefined for Re a > 1).
    if z.norm() == 0.0 {
        return Err(Error::Domain(
            "z = 0: the integral representation involves (z·e^(-x))^(1-a), undefined at the origin"
                .into(),
        ));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(
            "Re s > 0 required for the integral representation".into(),
        ));
    }
    if a.re <= 0.0 {
        return Err(Error::Domain(
            "Re a > 0 required for the integral representation".into(),
        ));
    }
    Ok(())
}

/// Solve `e^(−Re a·X)·X^(Re s−1) = target` for the tail cut-off by doubling
/// and bisection on the log scale.
fn solve_x_max(re_a: f64, re_s: f64, target: f64) -> f64 {
    let log_target = target.ln();
    let h = |x: f64| -re_a * x + (re_s - 1.0) * x.ln();
    // Start past the integrand's algebraic peak so h is decreasing.
    let mut lo = if re_s > 1.0 {
        ((re_s - 1.0) / re_a).max(1.0)
    } else {
        1.0
    };
    let mut hi = lo;
    let mut guard = 0;
    while h(hi) > log_target && guard < 80 {
        hi *= 2.0;
        guard += 1;
    }
    if guard == 0 {
        return lo.max(1.0);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if h(mid) > log_target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

fn build_layout(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    window: f64,
    tail_target: f64,
) -> Layout {
    let x0 = if z.im == 0.0 && z.re > 0.0 {
        Some(z.re.ln())
    } else {
        None
    };
    let mut x_max = solve_x_max(a.re, s.re, tail_target);
    // The kernel (e^(−ax) − z^(1−a)·e^(−x))/(1 − z·e^(−x)) carries two
    // exponential scales; for Re a > 1 the tail is dominated by the slow
    // −z^(1−a)·e^(−x) piece, so the cut-off must also push that one below
    // the target.
    let slow_prefactor = z.powc(cplx(1.0, 0.0) - a).norm();
    if slow_prefactor.is_finite() && slow_prefactor > 0.0 {
        let slow_target = (tail_target / slow_prefactor).max(1e-300);
        x_max = x_max.max(solve_x_max(1.0, s.re, slow_target));
    }
    if let Some(x0) = x0 {
        // Always cover the pole neighbourhood plus a margin.
        if x0 > 0.0 {
            x_max = x_max.max(x0 + 1.0);
        }
    }
    let subst_q = if s.re < 1.0 { Some(s.re) } else { None };
    let mut x_cut = 1.0_f64.min(x_max);
    if let Some(x0) = x0 {
        if x0 > 0.0 {
            x_cut = x_cut.min(0.5 * x0);
        }
    }
    let mut bps = vec![0.0, x_max];
    if subst_q.is_some() {
        bps.push(x_cut);
    }
    if let Some(x0) = x0 {
        for b in [x0 - window, x0 + window] {
            if b > 0.0 && b < x_max {
                bps.push(b);
            }
        }
    }
    bps.sort_by(f64::total_cmp);
    bps.dedup();
    Layout {
        x0,
        window,
        subst_q,
        x_cut,
        breakpoints: bps,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SegKind {
    Plain,
    /// Integrated in the variable `t` with `x = t^(1/q)`.
    Substituted,
}

/// Segments in integration order with their variable kind; substituted
/// segments are expressed in the transformed variable.
fn segments(layout: &Layout) -> Vec<(f64, f64, SegKind)> {
    let mut out = Vec::new();
    for pair in layout.breakpoints.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        if hi <= lo {
            continue;
        }
        match layout.subst_q {
            Some(q) if hi <= layout.x_cut => {
                out.push((lo.powf(q), hi.powf(q), SegKind::Substituted));
            }
            _ => out.push((lo, hi, SegKind::Plain)),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Double-precision pipeline
// ---------------------------------------------------------------------------

struct F64Problem {
    s: ComplexScalar,
    a: ComplexScalar,
    z: ComplexScalar,
    z_pow: ComplexScalar, // z^(1−a)
    taylor: [ComplexScalar; 4],
    layout: Layout,
}

impl F64Problem {
    fn new(z: ComplexScalar, s: ComplexScalar, a: ComplexScalar, settings: &QuadratureSettings) -> Self {
        let alpha = 1.0 - a;
        let z_pow = z.powc(alpha);
        let taylor = taylor_coeffs_f64(alpha);
        let layout = build_layout(z, s, a, settings.singularity_window, settings.abs_tol / 10.0);
        F64Problem {
            s,
            a,
            z,
            z_pow,
            taylor,
            layout,
        }
    }

    /// Kernel `K(x) = e^(−ax)·f(z,x,a)` without the `x^(s−1)` factor.
    fn kernel(&self, x: f64) -> ComplexScalar {
        if let Some(x0) = self.layout.x0 {
            let u = x - x0;
            if u.abs() < self.layout.window {
                let t = &self.taylor;
                let horner = t[0] + u * (t[1] + u * (t[2] + u * t[3]));
                return (-self.a * x).exp() * horner;
            }
        }
        let emx = (-x).exp();
        ((-self.a * x).exp() - self.z_pow * emx) / (1.0 - self.z * emx)
    }

    fn eval(&self, kind: SegKind, v: f64) -> ComplexScalar {
        match kind {
            SegKind::Plain => cplx(v, 0.0).powc(self.s - 1.0) * self.kernel(v),
            SegKind::Substituted => {
                let q = self.layout.subst_q.unwrap();
                let p = 1.0 / q;
                let x = v.powf(p);
                p * cplx(v, 0.0).powc(p * self.s - 1.0) * self.kernel(x)
            }
        }
    }
}

fn taylor_coeffs_f64(alpha: ComplexScalar) -> [ComplexScalar; 4] {
    let one = cplx(1.0, 0.0);
    [
        alpha,
        alpha * (one - alpha) / 2.0,
        alpha * (cplx(1.0 / 12.0, 0.0) - alpha / 4.0 + alpha * alpha / 6.0),
        -alpha * alpha * (one - alpha) * (one - alpha) / 24.0,
    ]
}

struct Panel {
    err: f64,
    seq: u64,
    lo: f64,
    hi: f64,
    val: ComplexScalar,
    kind: SegKind,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.seq == other.seq
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

fn gk15_f64(
    problem: &F64Problem,
    kind: SegKind,
    lo: f64,
    hi: f64,
) -> (ComplexScalar, f64) {
    let xgk = xgk_f64();
    let wg = wg_f64();
    let wgk = wgk_f64();
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut kronrod = cplx(0.0, 0.0);
    let mut gauss = cplx(0.0, 0.0);
    for i in 0..7 {
        let fsum = problem.eval(kind, c - h * xgk[i]) + problem.eval(kind, c + h * xgk[i]);
        kronrod += wgk[i] * fsum;
        if i % 2 == 1 {
            gauss += wg[i / 2] * fsum;
        }
    }
    let fc = problem.eval(kind, c);
    kronrod += wgk[7] * fc;
    gauss += wg[3] * fc;
    (h * kronrod, (h * (kronrod - gauss)).norm())
}

fn integrate_f64(problem: &F64Problem, settings: &QuadratureSettings) -> Result<ComplexScalar> {
    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    let mut total = cplx(0.0, 0.0);
    let mut err_total = 0.0;
    for (lo, hi, kind) in segments(&problem.layout) {
        let (val, err) = gk15_f64(problem, kind, lo, hi);
        total += val;
        err_total += err;
        heap.push(Panel {
            err,
            seq,
            lo,
            hi,
            val,
            kind,
        });
        seq += 1;
    }
    let mut splits = 0usize;
    while err_total > settings.abs_tol.max(settings.rel_tol * total.norm()) {
        if splits >= settings.max_subdivisions {
            return Err(Error::NoConvergence {
                max_order: settings.max_subdivisions,
                best: resum(&mut heap),
            });
        }
        let worst = heap.pop().expect("heap cannot be empty while error > 0");
        let mid = 0.5 * (worst.lo + worst.hi);
        total -= worst.val;
        err_total -= worst.err;
        for (lo, hi) in [(worst.lo, mid), (mid, worst.hi)] {
            let (val, err) = gk15_f64(problem, worst.kind, lo, hi);
            total += val;
            err_total += err;
            heap.push(Panel {
                err,
                seq,
                lo,
                hi,
                val,
                kind: worst.kind,
            });
            seq += 1;
        }
        splits += 1;
    }
    Ok(resum(&mut heap))
}

/// Deterministic final pass: sum panels in position order with compensation,
/// avoiding the drift of the incremental running total.
fn resum(heap: &mut BinaryHeap<Panel>) -> ComplexScalar {
    let mut panels: Vec<Panel> = std::mem::take(heap).into_vec();
    panels.sort_by(|a, b| {
        a.lo.total_cmp(&b.lo)
            .then((a.kind == SegKind::Plain).cmp(&(b.kind == SegKind::Plain)))
    });
    let mut acc = CompensatedSum::new();
    for p in &panels {
        acc.add(p.val);
    }
    acc.value()
}

/// `F(z,s,a)` by adaptive quadrature of the integral representation.
///
/// Requires `z` off the branch cut `(−∞, 0]`, `Re s > 0`, and `Re a > 0`.
/// This routine is an oracle: it shares no series machinery with the
/// asymptotic expansion it is used to validate.
pub fn f_quadrature(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    settings: &QuadratureSettings,
) -> Result<ComplexScalar> {
    validate_domain(z, s, a)?;
    let problem = F64Problem::new(z, s, a, settings);
    let integral = integrate_f64(&problem, settings)?;
    Ok(integral / gamma_f64(s))
}

// ---------------------------------------------------------------------------
// Extended-precision pipeline (reference values for validation)
// ---------------------------------------------------------------------------

struct HpRule {
    xgk: Vec<R>,
    wg: Vec<R>,
    wgk: Vec<R>,
}

impl HpRule {
    fn new(ctx: &mut Ctx) -> Self {
        HpRule {
            xgk: XGK.iter().map(|s| R::parse(s, ctx)).collect(),
            wg: WG.iter().map(|s| R::parse(s, ctx)).collect(),
            wgk: WGK.iter().map(|s| R::parse(s, ctx)).collect(),
        }
    }
}

struct HpProblem {
    s: Cx,
    a: Cx,
    z: Cx,
    z_pow: Cx,
    s_minus_one: Cx,
    taylor: [Cx; 4],
    layout: Layout,
    subst: Option<(f64, Cx)>, // (p = 1/Re s, p·s − 1)
}

impl HpProblem {
    fn new(
        z: ComplexScalar,
        s: ComplexScalar,
        a: ComplexScalar,
        rel_tol: f64,
        ctx: &mut Ctx,
    ) -> Self {
        let zc = Cx::from_c64(z);
        let sc = Cx::from_c64(s);
        let ac = Cx::from_c64(a);
        let alpha = &Cx::one() - &ac;
        let z_pow = zc.pow(&alpha, ctx);
        let taylor = taylor_coeffs_hp(&alpha);
        // Tail target: relative tolerance against the pole-region magnitude
        // e^(−Re a·x0), with two orders of margin.
        let anchor = if z.im == 0.0 && z.re > 1.0 {
            (-a.re * z.re.ln()).exp()
        } else {
            1.0
        };
        let layout = build_layout(z, s, a, 1e-9, (rel_tol * anchor * 1e-2).max(1e-290));
        let subst = layout.subst_q.map(|q| {
            let p = 1.0 / q;
            let exponent = &sc.scale(&R::from_f64(p)) - &Cx::one();
            (p, exponent)
        });
        HpProblem {
            s_minus_one: &sc - &Cx::one(),
            s: sc,
            a: ac,
            z: zc,
            z_pow,
            taylor,
            layout,
            subst,
        }
    }

    fn kernel(&self, x: &R, x64: f64, ctx: &mut Ctx) -> Cx {
        if let Some(x0) = self.layout.x0 {
            if (x64 - x0).abs() < self.layout.window {
                let u = x - &R::from_f64(x0);
                let t = &self.taylor;
                let mut horner = t[3].clone();
                for k in (0..3).rev() {
                    horner = &t[k] + &horner.scale(&u);
                }
                let e_ax = self.a.neg().scale(x).exp(ctx);
                return &e_ax * &horner;
            }
        }
        let emx = x.neg().exp(ctx);
        let e_ax = self.a.neg().scale(x).exp(ctx);
        let num = &e_ax - &self.z_pow.scale(&emx);
        let den = &Cx::one() - &self.z.scale(&emx);
        num.div(&den)
    }

    fn eval(&self, kind: SegKind, v: &R, v64: f64, ctx: &mut Ctx) -> Cx {
        match kind {
            SegKind::Plain => {
                let ln_x = v.ln(ctx);
                let power = self.s_minus_one.scale(&ln_x).exp(ctx);
                &power * &self.kernel(v, v64, ctx)
            }
            SegKind::Substituted => {
                let (p, ref exponent) = *self.subst.as_ref().unwrap();
                let ln_t = v.ln(ctx);
                let x = (&ln_t * &R::from_f64(p)).exp(ctx);
                let x64 = v64.powf(p);
                let power = exponent.scale(&ln_t).exp(ctx);
                let k = self.kernel(&x, x64, ctx);
                (&power * &k).scale(&R::from_f64(p))
            }
        }
    }
}

fn taylor_coeffs_hp(alpha: &Cx) -> [Cx; 4] {
    let one = Cx::one();
    let one_minus = &one - alpha;
    let t0 = alpha.clone();
    let t1 = (alpha * &one_minus).scale(&R::from_f64(0.5));
    let twelfth = &R::one() / &R::from_i64(12);
    let quarter = R::from_f64(0.25);
    let sixth = &R::one() / &R::from_i64(6);
    let inner = &(&Cx::from_real(twelfth) - &alpha.scale(&quarter))
        + &(alpha * alpha).scale(&sixth);
    let t2 = alpha * &inner;
    let t3 = (&(alpha * alpha) * &(&one_minus * &one_minus))
        .scale(&(&R::one() / &R::from_i64(24)))
        .neg();
    [t0, t1, t2, t3]
}

struct HpPanel {
    err: R,
    seq: u64,
    lo: R,
    hi: R,
    lo64: f64,
    hi64: f64,
    val: Cx,
    kind: SegKind,
}

impl PartialEq for HpPanel {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}
impl Eq for HpPanel {}
impl PartialOrd for HpPanel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HpPanel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .cmp(&other.err)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

fn gk15_hp(
    problem: &HpProblem,
    rule: &HpRule,
    kind: SegKind,
    lo: &R,
    hi: &R,
    lo64: f64,
    hi64: f64,
    ctx: &mut Ctx,
) -> (Cx, R) {
    let half = R::from_f64(0.5);
    let c = &(lo + hi) * &half;
    let h = &(hi - lo) * &half;
    let c64 = 0.5 * (lo64 + hi64);
    let h64 = 0.5 * (hi64 - lo64);
    let xgk64 = xgk_f64();
    let mut kronrod = Cx::zero();
    let mut gauss = Cx::zero();
    for i in 0..7 {
        let off = &h * &rule.xgk[i];
        let off64 = h64 * xgk64[i];
        let fsum = &problem.eval(kind, &(&c - &off), c64 - off64, ctx)
            + &problem.eval(kind, &(&c + &off), c64 + off64, ctx);
        kronrod = &kronrod + &fsum.scale(&rule.wgk[i]);
        if i % 2 == 1 {
            gauss = &gauss + &fsum.scale(&rule.wg[i / 2]);
        }
    }
    let fc = problem.eval(kind, &c, c64, ctx);
    kronrod = &kronrod + &fc.scale(&rule.wgk[7]);
    gauss = &gauss + &fc.scale(&rule.wg[3]);
    let err = (&kronrod - &gauss).scale(&h).abs();
    (kronrod.scale(&h), err)
}

/// Extended-precision `F(z,s,a)` by the same integral representation,
/// targeting `rel_tol` (typically far below double rounding). Panel budget
/// `max_panels` guards against pathological inputs.
pub(crate) fn hp_f_quadrature(
    z: ComplexScalar,
    s: ComplexScalar,
    a: ComplexScalar,
    rel_tol: f64,
    max_panels: usize,
    ctx: &mut Ctx,
) -> Result<Cx> {
    validate_domain(z, s, a)?;
    let problem = HpProblem::new(z, s, a, rel_tol, ctx);
    let rule = HpRule::new(ctx);
    let rel = R::from_f64(rel_tol);
    let mut heap: BinaryHeap<HpPanel> = BinaryHeap::new();
    let mut seq = 0u64;
    let mut total = Cx::zero();
    let mut err_total = R::zero();
    for (lo64, hi64, kind) in segments(&problem.layout) {
        let lo = R::from_f64(lo64);
        let hi = R::from_f64(hi64);
        let (val, err) = gk15_hp(&problem, &rule, kind, &lo, &hi, lo64, hi64, ctx);
        total = &total + &val;
        err_total = &err_total + &err;
        heap.push(HpPanel {
            err,
            seq,
            lo,
            hi,
            lo64,
            hi64,
            val,
            kind,
        });
        seq += 1;
    }
    let mut splits = 0usize;
    loop {
        let threshold = total.abs();
        let threshold = &threshold * &rel;
        if err_total.le(&threshold) {
            break;
        }
        if splits >= max_panels {
            return Err(Error::NoConvergence {
                max_order: max_panels,
                best: hp_resum(&mut heap).to_c64(),
            });
        }
        let worst = heap.pop().expect("non-empty heap");
        let mid = &(&worst.lo + &worst.hi) * &R::from_f64(0.5);
        let mid64 = 0.5 * (worst.lo64 + worst.hi64);
        total = &total - &worst.val;
        err_total = &err_total - &worst.err;
        let pieces = [
            (worst.lo.clone(), mid.clone(), worst.lo64, mid64),
            (mid, worst.hi.clone(), mid64, worst.hi64),
        ];
        for (lo, hi, lo64, hi64) in pieces {
            let (val, err) = gk15_hp(&problem, &rule, worst.kind, &lo, &hi, lo64, hi64, ctx);
            total = &total + &val;
            err_total = &err_total + &err;
            heap.push(HpPanel {
                err,
                seq,
                lo,
                hi,
                lo64,
                hi64,
                val,
                kind: worst.kind,
            });
            seq += 1;
        }
        splits += 1;
    }
    let integral = hp_resum(&mut heap);
    let gamma = hp_gamma(&problem.s, ctx);
    Ok(integral.div(&gamma))
}

fn hp_resum(heap: &mut BinaryHeap<HpPanel>) -> Cx {
    let mut panels: Vec<HpPanel> = std::mem::take(heap).into_vec();
    panels.sort_by(|a, b| {
        a.lo64
            .total_cmp(&b.lo64)
            .then((a.kind == SegKind::Plain).cmp(&(b.kind == SegKind::Plain)))
            .then(a.seq.cmp(&b.seq))
    });
    let mut acc = Cx::zero();
    for p in &panels {
        acc = &acc + &p.val;
    }
    acc
}
