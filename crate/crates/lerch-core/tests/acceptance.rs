//! End-to-end acceptance checks, one per numbered criterion.
//!
//! Each test prints a single `criterion N: PASS/FAIL` verdict line (visible
//! with `--nocapture`, and always shown for a failing test). A failing test
//! panics with the same message, so the suite's red/green state is the
//! verdict. Criterion 8 currently fails; see its comment for the numerical
//! reason — its assertions are deliberately not weakened.

use lerch_core::scalar::cplx;
use lerch_core::{
    eta_direct, euler_maclaurin_f1, evaluate_f_convergent, expand_f, f_quadrature,
    hurwitz_zeta_direct, hurwitz_zeta_series, kernel_coeff, li_series, phi_series,
    reproduce_table1, summation_by_parts_residual, ComplexScalar, PathSelect, QuadratureSettings,
};

fn exact_f_integer(z: ComplexScalar, s: ComplexScalar, m: u32) -> ComplexScalar {
    if m == 1 {
        return cplx(0.0, 0.0);
    }
    -z.powi(-(m as i32)) * eta_direct(z, s, m - 1).unwrap()
}

fn pass(n: usize, what: &str) {
    println!("criterion {n}: PASS — {what}");
}

fn fail(n: usize, what: &str) -> ! {
    println!("criterion {n}: FAIL — {what}");
    panic!("criterion {n}: FAIL — {what}");
}

#[test]
fn criterion_1_error_table_reproduction() {
    let t0 = std::time::Instant::now();
    let report = reproduce_table1();
    let elapsed = t0.elapsed();
    let failures: Vec<String> = report
        .rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("(z={} s={} a={} n={}): rel {:e} vs expected {:?}", r.z, r.s, r.a, r.n, r.rel_error, r.expected))
        .collect();
    if !failures.is_empty() {
        fail(1, &format!("{} of 36 table cells off: {}", failures.len(), failures.join("; ")));
    }
    if elapsed.as_secs_f64() >= 10.0 {
        fail(1, &format!("table reproduced but took {elapsed:?} (budget 10 s)"));
    }
    pass(1, &format!("all 36 tabulated relative errors reproduced to the printed precision in {elapsed:.2?}"));
}

#[test]
fn criterion_2_exact_integer_sums() {
    for m in 1u32..=40 {
        let got = eta_direct(cplx(2.0, 0.0), cplx(-1.0, 0.0), m).unwrap();
        let expect = (f64::from(m) - 1.0) * (2f64).powi(m as i32 + 1) + 2.0;
        if got.re != expect || got.im != 0.0 {
            fail(2, &format!("η(2,−1,{m}) = {got}, want {expect} exactly"));
        }
    }
    pass(2, "η(2,−1,m) matches its closed form exactly for m ≤ 40");
}

#[test]
fn criterion_3_convergent_variant() {
    let mut worst = 0.0f64;
    for z in [cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(5.0, 0.0)] {
        for s in [cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(0.5, 0.0)] {
            for m in [5u32, 10, 20] {
                let r = match evaluate_f_convergent(z, s, m, 1e-14, 4000) {
                    Ok(r) => r,
                    Err(e) => fail(3, &format!("evaluation failed at z={z} s={s} m={m}: {e}")),
                };
                let exact = exact_f_integer(z, s, m);
                let rel = (r.value - exact).norm() / exact.norm().max(f64::MIN_POSITIVE);
                worst = worst.max(rel);
                if rel >= 1e-10 {
                    fail(3, &format!("z={z} s={s} m={m}: rel {rel:e} vs exact finite sum"));
                }
            }
        }
    }
    pass(3, &format!("convergent evaluation matches exact finite sums on the 27-point grid (worst rel {worst:.1e})"));
}

#[test]
fn criterion_4_coefficient_path_agreement() {
    let mut worst = 0.0f64;
    let mut check = |n: usize, z: ComplexScalar, a: ComplexScalar, p: PathSelect, q: PathSelect| {
        let x = kernel_coeff(n, z, a, p).unwrap();
        let y = kernel_coeff(n, z, a, q).unwrap();
        let rel = (x - y).norm() / x.norm().max(y.norm()).max(1e-30);
        worst = worst.max(rel);
        if rel >= 1e-9 {
            fail(4, &format!("paths {p:?}/{q:?} at z={z} a={a} n={n}: rel {rel:e}"));
        }
    };
    for z in [cplx(2.0, 0.0), cplx(5.0, 0.0), cplx(1.5, 0.0)] {
        for a in [cplx(5.0, 0.0), cplx(10.0, 0.0), cplx(10.0, 1.0)] {
            for n in 0..=20 {
                check(n, z, a, PathSelect::Explicit, PathSelect::Recurrence);
                if a.im == 0.0 {
                    check(n, z, a, PathSelect::Explicit, PathSelect::IntegerDirect);
                }
            }
        }
    }
    // z = 1 has its own pair of branches (closed form vs recurrence).
    for a in [cplx(7.5, 0.0), cplx(4.0, 1.0)] {
        for n in 0..=20 {
            check(n, cplx(1.0, 0.0), a, PathSelect::Explicit, PathSelect::Recurrence);
        }
    }
    pass(4, &format!("independent coefficient paths agree to 1e-9 through n = 20, z = 1 branches included (worst rel {worst:.1e})"));
}

#[test]
fn criterion_5_error_scales_with_a() {
    let z = cplx(2.0, 0.0);
    let s = cplx(1.0, 0.0);
    let err_at = |m: u32| {
        let approx = expand_f(z, s, cplx(f64::from(m), 0.0), 4).unwrap().value;
        (approx - exact_f_integer(z, s, m)).norm()
    };
    let ratio = err_at(32) / err_at(16);
    let target = 2f64.powi(-5);
    if ratio < target / 4.0 || ratio > target * 4.0 {
        fail(5, &format!("doubling a changed the order-4 error by {ratio:.3e}, want within 4x of {target:.3e}"));
    }
    pass(5, &format!("order-4 truncation error scales like a^-5 (observed ratio {ratio:.3e} vs 2^-5 = {target:.3e})"));
}

#[test]
fn criterion_6_oracle_triangles() {
    let settings = QuadratureSettings::default();
    let mut worst = 0.0f64;
    for z in [cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(5.0, 0.0)] {
        for s in [cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(0.5, 0.0)] {
            for m in [3u32, 7, 15] {
                let q = f_quadrature(z, s, cplx(f64::from(m), 0.0), &settings).unwrap();
                let exact = exact_f_integer(z, s, m);
                let rel = (q - exact).norm() / exact.norm().max(1e-12);
                worst = worst.max(rel);
                if rel >= 1e-8 {
                    fail(6, &format!("quadrature vs finite sum at z={z} s={s} m={m}: rel {rel:e}"));
                }
            }
        }
    }
    for z in [cplx(0.3, 0.0), cplx(-0.5, 0.0)] {
        for s in [cplx(1.5, 0.0), cplx(2.0, 0.0)] {
            for a in [cplx(2.5, 0.0), cplx(6.0, 0.0)] {
                let q = f_quadrature(z, s, a, &settings).unwrap();
                let assembled = phi_series(z, s, a, 1e-15).unwrap()
                    - z.powc(-a) * li_series(z, s, 1e-15).unwrap();
                let rel = (q - assembled).norm() / assembled.norm().max(1e-12);
                worst = worst.max(rel);
                if rel >= 1e-8 {
                    fail(6, &format!("quadrature vs assembled series at z={z} s={s} a={a}: rel {rel:e}"));
                }
            }
        }
    }
    pass(6, &format!("independent oracles agree to 1e-8 on and off the integer lattice, z = -0.5 included (worst rel {worst:.1e})"));
}

#[test]
fn criterion_7_hurwitz_tail_and_endpoint_expansion() {
    for s in [cplx(2.0, 0.0), cplx(3.0, 0.0)] {
        // Reference zeta value from plain tail summation, then the series
        // route must land on the directly summed ζ(s, m).
        let zeta = hurwitz_zeta_direct(s, 1, 1e-12).unwrap();
        for m in [2u32, 5, 10] {
            let series = hurwitz_zeta_series(s, m, 1e-12, zeta).unwrap();
            let direct = hurwitz_zeta_direct(s, m, 1e-11).unwrap();
            let rel = (series - direct).norm() / direct.norm().max(f64::MIN_POSITIVE);
            if rel >= 1e-8 {
                fail(7, &format!("ζ(s,m) series vs direct at s={s} m={m}: rel {rel:e}"));
            }
        }
        for m in [5u32, 10] {
            let (em, bound) = euler_maclaurin_f1(s, m, 3, zeta).unwrap();
            let exact = exact_f_integer(cplx(1.0, 0.0), s, m);
            let err = (em - exact).norm();
            // The returned bound covers the expansion's truncation; the
            // supplied zeta reference contributes its own summation error
            // (relative tolerance 1e-12 above), accounted for separately.
            let slack = 2e-12 * zeta.norm();
            if err > bound + slack {
                fail(7, &format!("endpoint expansion at s={s} m={m}: error {err:e} exceeds its own bound {bound:e} (+ reference slack {slack:e})"));
            }
        }
    }
    pass(7, "Hurwitz tail series matches direct summation to 1e-8 and the endpoint expansion honors its error bound");
}

#[test]
fn criterion_8_rearrangement_residual_decay() {
    // The probed rearrangement does not actually converge: its inner tail
    // sums approach a constant as the depth grows, so past a shallow depth
    // the residual plateaus instead of decaying. The assertions state the
    // intended behavior and are left to fail rather than being loosened;
    // the numbers in the failure message document the plateau.
    for (z, s, m) in [
        (cplx(2.0, 0.0), cplx(2.0, 0.0), 10u32),
        (cplx(3.0, 0.0), cplx(1.0, 0.0), 5u32),
    ] {
        let residuals: Vec<f64> = (3..=30)
            .map(|d| summation_by_parts_residual(z, s, m, d).unwrap())
            .collect();
        for w in residuals.windows(2) {
            if w[1] > w[0] * (1.0 + 1e-12) {
                fail(8, &format!(
                    "residual grew with depth at z={z} s={s} m={m}: {:.3e} -> {:.3e}",
                    w[0], w[1]
                ));
            }
        }
        let last = *residuals.last().unwrap();
        if last >= 1e-8 {
            fail(8, &format!(
                "depth-30 residual at z={z} s={s} m={m} is {last:.3e} (depth-3 was {:.3e}), required < 1e-8",
                residuals[0]
            ));
        }
    }
    pass(8, "rearrangement residual decays monotonically below 1e-8 by depth 30");
}
