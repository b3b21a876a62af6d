//! Numerical evaluation of the pole-free Lerch combination
//!
//! ```text
//! F(z,s,a) = Φ(z,s,a) − Li_s(z)·z^(−a)
//! ```
//!
//! together with the finite power sum `η(z,s,m) = Σ_{n=1}^m z^n/n^s`.
//!
//! `F` stays analytic for `z ∈ ℂ ∖ (−∞,0]` — in particular on the ray
//! `z ≥ 1` where `Φ` and `Li_s` separately live on a branch cut — and for
//! large `Re a` it admits the expansion
//!
//! ```text
//! F(z,s,a) ≈ Σ_{n=0}^{N−1} C_n(z,a) · (s)_n / a^(n+s)
//! ```
//!
//! whose coefficients `C_n` are the Taylor coefficients of the kernel
//! `f(z,x,a) = (1−(z·e^(−x))^(1−a))/(1−z·e^(−x))` at `x = 0`. For integer
//! `a = m ≥ 2` the expansion converges outright and `F(z,s,m)` collapses to
//! the closed form `−z^(−m)·η(z,s,m−1)`, which is how finite power sums are
//! evaluated from the tail end.
//!
//! The crate is organised in layers:
//!
//! * [`coefficients`] — Bernoulli numbers/polynomials in exact rational
//!   arithmetic, negative-order polylogarithms, and the coefficient families
//!   `c_n(z)`, `p_n(z,a)`, `C_n(z,a)` via three independent computation paths.
//! * [`expansion`] — the truncated large-`a` expansion, its convergent
//!   integer-`a` variant, the classic `Φ` expansion off the cut, the
//!   separable split, a Hurwitz-zeta series, and truncation-order selection.
//! * [`oracles`] — independent reference evaluators (direct summation, the
//!   defining power series, adaptive quadrature of the pole-free integral,
//!   Euler–Maclaurin at `z = 1`, Hurwitz-zeta tail summation) used to
//!   validate everything else.
//! * [`validation`] — the error-table and sweep harness plus the property
//!   suite behind `lerch check`.
//!
//! Internally the ill-conditioned coefficient paths run in 192-bit extended
//! precision (the explicit formula subtracts two nearly equal quantities and
//! can shed 15+ decimal digits by `n = 20`); results are rounded to `f64`
//! at the public API boundary.

pub mod coefficients;
pub mod error;
pub mod expansion;
mod hp;
mod kahan;
pub mod oracles;
pub mod scalar;
pub mod validation;

pub use error::Error;
pub use expansion::{
    evaluate_eta, evaluate_f_convergent, expand_f, expand_phi_classic, hurwitz_zeta_series,
    select_truncation, split_f, EtaMethod, ExpansionResult,
};
pub use kahan::CompensatedSum;
pub use scalar::ComplexScalar;

pub use coefficients::{
    bernoulli_number, bernoulli_polynomial, coeff_c, kernel_coeff, pochhammer, poly_p,
    polylog_neg, BigRational, CoefficientTable, PathSelect,
};
pub use oracles::{
    eta_direct, euler_maclaurin_f1, f_quadrature, hurwitz_zeta_direct, li_series, phi_series,
    summation_by_parts_residual, QuadratureSettings,
};
pub use validation::{
    relative_error, reproduce_table1, run_property_suite, sweep_figure2, PropertyCheck,
    ReferenceMethod, ReportRow, SweepAxis, ValidationReport,
};
