//! Small numeric helpers shared by the spectral and closed-form code.

/// Neumaier-compensated accumulator. Summation order is whatever order the
/// caller feeds terms in, so results are reproducible run to run.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of an iterator, in iteration order.
pub fn sum(iter: impl IntoIterator<Item = f64>) -> f64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}

/// Relative error `|x - y| / max(|x|, |y|)`, zero when both are zero.
pub fn rel_err(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}

/// `log2(sum_i 2^{e_i})` without overflow. Returns `-inf` for an empty input.
pub fn log2_sum_exp2(exponents: &[f64]) -> f64 {
    let max = exponents.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    max + sum(exponents.iter().map(|e| (e - max).exp2())).log2()
}

/// `x log2 x` with the `0 log 0 = 0` convention; weights below 1e-300 count as zero.
#[inline]
pub fn xlog2x(x: f64) -> f64 {
    if x <= ENTROPY_ZERO_FLOOR {
        0.0
    } else {
        x * x.log2()
    }
}

/// Squared magnitudes at or below this are treated as exact zeros in entropy sums.
pub const ENTROPY_ZERO_FLOOR: f64 = 1e-300;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_cancelled_terms() {
        let terms = [1e16, 1.0, -1e16, 1.0];
        assert_eq!(sum(terms), 2.0);
        assert_eq!(terms.iter().sum::<f64>(), 1.0);
    }

    #[test]
    fn log_sum_exp_matches_direct() {
        let e = [0.0, 1.0, 2.0];
        assert!((log2_sum_exp2(&e) - 7f64.log2()).abs() < 1e-15);
        assert_eq!(log2_sum_exp2(&[]), f64::NEG_INFINITY);
        // 2^2000 + 2^2000 = 2^2001
        assert!((log2_sum_exp2(&[2000.0, 2000.0]) - 2001.0).abs() < 1e-12);
    }

    #[test]
    fn zero_log_zero_is_zero() {
        assert_eq!(xlog2x(0.0), 0.0);
        assert_eq!(xlog2x(1e-310), 0.0);
        assert_eq!(xlog2x(1.0), 0.0);
        assert_eq!(xlog2x(0.5), -0.5);
    }

    #[test]
    fn rel_err_handles_zero() {
        assert_eq!(rel_err(0.0, 0.0), 0.0);
        assert_eq!(rel_err(1.0, 0.0), 1.0);
        assert!((rel_err(1.0, 1.0 + 1e-12) - 1e-12).abs() < 1e-15);
    }
}
