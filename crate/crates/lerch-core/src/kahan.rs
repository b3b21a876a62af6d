//! Compensated (Neumaier) summation for complex series.

use crate::scalar::ComplexScalar;

/// Accumulates a complex series with per-component Neumaier compensation.
///
/// Each `f64` component keeps a running correction that captures the rounding
/// error of every addition, including the case where the incoming term is
/// larger than the accumulated sum (which plain Kahan mishandles). The
/// correction is folded in once, when [`value`](Self::value) is read.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum_re: f64,
    sum_im: f64,
    c_re: f64,
    c_im: f64,
}

#[inline]
fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, term: ComplexScalar) {
        neumaier(&mut self.sum_re, &mut self.c_re, term.re);
        neumaier(&mut self.sum_im, &mut self.c_im, term.im);
    }

    /// Current compensated value of the sum.
    #[inline]
    pub fn value(&self) -> ComplexScalar {
        ComplexScalar::new(self.sum_re + self.c_re, self.sum_im + self.c_im)
    }
}

impl std::iter::FromIterator<ComplexScalar> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = ComplexScalar>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for t in iter {
            acc.add(t);
        }
        acc
    }
}
