//! Builders for the generalized Rudin-Shapiro families and the other example
//! functions, plus their closed-form spectral quantities.
//!
//! Given `a_1..a_n` in `(0, 1]`, the pair `(P_n, Q_n)` starts from
//! `P_0 = Q_0 = 1` and grows one coordinate at a time:
//!
//! ```text
//! P_{k+1} = P_k + eps_{k+1} a_{k+1} Q_k
//! Q_{k+1} = eps_{k+1} a_{k+1} P_k - Q_k
//! ```
//!
//! With all `a_i = 1` these are the classical Rudin-Shapiro functions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_1_SQRT_2, LN_2};

use crate::error::{Error, Result};
use crate::numeric::{self, CompensatedSum};
use crate::spectrum::{scale, HypercubeFunction, TableLimit};

/// Driving sequence `a_1..a_n`, every entry in `(0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ParamSeq {
    a: Vec<f64>,
}

impl ParamSeq {
    pub fn new(a: Vec<f64>) -> Result<Self> {
        for (i, &value) in a.iter().enumerate() {
            // rejects NaN as well
            if !(value > 0.0 && value <= 1.0) {
                return Err(Error::ParamOutOfRange {
                    index: i + 1,
                    value,
                });
            }
        }
        Ok(Self { a })
    }

    pub fn constant(n: usize, value: f64) -> Result<Self> {
        Self::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.a
    }

    /// `K = sum a_i^2`.
    pub fn total_mass(&self) -> f64 {
        numeric::sum(self.a.iter().map(|a| a * a))
    }

    /// `log2 prod (1 + a_i^2)`, i.e. `log2 ||P_n||_2^2`.
    pub fn log2_norm_sq(&self) -> f64 {
        numeric::sum(self.a.iter().map(|&a| log2_1p_sq(a)))
    }

    pub fn max(&self) -> Option<f64> {
        self.a.iter().copied().reduce(f64::max)
    }
}

impl TryFrom<Vec<f64>> for ParamSeq {
    type Error = Error;

    fn try_from(a: Vec<f64>) -> Result<Self> {
        Self::new(a)
    }
}

impl From<ParamSeq> for Vec<f64> {
    fn from(p: ParamSeq) -> Self {
        p.a
    }
}

#[inline]
fn log2_1p_sq(a: f64) -> f64 {
    (a * a).ln_1p() / LN_2
}

/// The pair `(P_n, Q_n)` as value tables.
#[derive(Debug, Clone, PartialEq)]
pub struct RSPair {
    pub p: HypercubeFunction,
    pub q: HypercubeFunction,
}

/// Builds `P_n` and `Q_n` by doubling the tables once per coordinate.
///
/// Coordinate `k + 1` lives in bit `k`, so after each step the low half of
/// the table is `eps_{k+1} = +1` and the high half `eps_{k+1} = -1`.
pub fn build_pq(params: &ParamSeq, limit: TableLimit) -> Result<RSPair> {
    let n = params.len();
    limit.check(n)?;
    let mut p = Vec::with_capacity(1 << n);
    let mut q = Vec::with_capacity(1 << n);
    p.push(1.0f64);
    q.push(1.0f64);
    for &a in params.as_slice() {
        let half = p.len();
        for x in 0..half {
            let (pv, qv) = (p[x], q[x]);
            p[x] = pv + a * qv;
            q[x] = a * pv - qv;
            p.push(pv - a * qv);
            q.push(-a * pv - qv);
        }
    }
    Ok(RSPair {
        p: HypercubeFunction::from_real(n, p)?,
        q: HypercubeFunction::from_real(n, q)?,
    })
}

/// `(P_n, Q_n)` at a single point, in O(n) time and O(1) space.
///
/// `minus[i]` selects `eps_{i+1} = -1`. Works for any `n`; the raw values
/// grow like `prod (1 + a_i^2)^{1/2}` and overflow for very long sequences,
/// where [`unimodular_at`] should be used instead.
pub fn evaluate_signs(params: &ParamSeq, minus: &[bool]) -> Result<(f64, f64)> {
    if minus.len() != params.len() {
        return Err(Error::invalid(format!(
            "point has {} coordinates, parameters have {}",
            minus.len(),
            params.len()
        )));
    }
    let (mut p, mut q) = (1.0f64, 1.0f64);
    for (&a, &neg) in params.as_slice().iter().zip(minus) {
        let ea = if neg { -a } else { a };
        (p, q) = (p + ea * q, ea * p - q);
    }
    Ok((p, q))
}

/// [`evaluate_signs`] at a point index (bit `i - 1` set means `eps_i = -1`).
pub fn evaluate_at(params: &ParamSeq, point: u64) -> Result<(f64, f64)> {
    let n = params.len();
    if n < 64 && point >> n != 0 {
        return Err(Error::invalid(format!(
            "point {point:#x} has bits beyond n = {n}"
        )));
    }
    if n > 64 {
        return Err(Error::invalid(
            "point index form supports n <= 64; use evaluate_signs",
        ));
    }
    let minus: Vec<bool> = (0..n).map(|i| (point >> i) & 1 == 1).collect();
    evaluate_signs(params, &minus)
}

/// Value of the modulus-one function `(P_n + i Q_n) / (sqrt 2 ||P_n||_2)` at a
/// point. Each step is divided by `(1 + a_i^2)^{1/2}`, so this never
/// overflows whatever `n` is.
pub fn unimodular_at(params: &ParamSeq, minus: &[bool]) -> Result<Complex64> {
    if minus.len() != params.len() {
        return Err(Error::invalid(format!(
            "point has {} coordinates, parameters have {}",
            minus.len(),
            params.len()
        )));
    }
    let (mut p, mut q) = (1.0f64, 1.0f64);
    for (&a, &neg) in params.as_slice().iter().zip(minus) {
        let ea = if neg { -a } else { a };
        let s = (1.0 + a * a).sqrt();
        (p, q) = ((p + ea * q) / s, (ea * p - q) / s);
    }
    Ok(Complex64::new(p, q) * FRAC_1_SQRT_2)
}

/// Analytic values of every quantity attached to `P_n` and `Q_n`.
///
/// Products over the `a_i` are carried as base-2 logarithms so the report
/// stays finite in log form for sequences of any length. The plain `f64`
/// fields overflow to infinity once the true value does.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormReport {
    pub n: usize,
    /// `log2 prod (1 + a_i^2)`.
    pub log2_norm_sq: f64,
    pub l2_norm: f64,
    pub linf_lower: f64,
    pub linf_upper: f64,
    pub influence: f64,
    pub log2_influence: f64,
    pub entropy: f64,
    pub log2_entropy: f64,
    /// `log2 a_i^2`; `log2 |P^(A)|^2` is the sum of these over `i` in `A`.
    pub coeff_log2_weights: Vec<f64>,
    /// `K = sum a_i^2`.
    pub total_mass: f64,
    /// `K e^K`, an upper bound on the influence, strict once `n >= 1`.
    pub remark1_bound: f64,
}

impl ClosedFormReport {
    /// `|P^(A)|^2 = prod_{i in A} a_i^2` for the subset mask `m`.
    pub fn coeff_weight(&self, m: usize) -> f64 {
        let mut acc = CompensatedSum::new();
        for (i, w) in self.coeff_log2_weights.iter().enumerate() {
            if i < usize::BITS as usize && (m >> i) & 1 == 1 {
                acc.add(*w);
            }
        }
        acc.value().exp2()
    }

    /// `|P_n|^2 + |Q_n|^2`, constant over the cube.
    pub fn pq_square_sum(&self) -> f64 {
        2.0 * self.log2_norm_sq.exp2()
    }
}

pub fn closed_form(params: &ParamSeq) -> ClosedFormReport {
    let a = params.as_slice();
    let n = a.len();
    let logs: Vec<f64> = a.iter().map(|&x| log2_1p_sq(x)).collect();

    // others[i] = sum_{j != i} log2(1 + a_j^2) from prefix and suffix sums
    let mut others = vec![0.0; n];
    let mut prefix = CompensatedSum::new();
    for i in 0..n {
        others[i] = prefix.value();
        prefix.add(logs[i]);
    }
    let mut suffix = CompensatedSum::new();
    for i in (0..n).rev() {
        others[i] += suffix.value();
        suffix.add(logs[i]);
    }
    let log2_norm_sq = prefix.value();

    let coeff_log2_weights: Vec<f64> = a.iter().map(|&x| 2.0 * x.log2()).collect();

    let influence_terms: Vec<f64> = (0..n).map(|i| coeff_log2_weights[i] + others[i]).collect();
    let log2_influence = numeric::log2_sum_exp2(&influence_terms);

    // entropy summand i is 2^{others_i} a_i^2 (-log2 a_i^2), zero when a_i = 1
    let entropy_terms: Vec<f64> = (0..n)
        .filter(|&i| coeff_log2_weights[i] < 0.0)
        .map(|i| others[i] + coeff_log2_weights[i] + (-coeff_log2_weights[i]).log2())
        .collect();
    let log2_entropy = numeric::log2_sum_exp2(&entropy_terms);

    let l2_norm = (0.5 * log2_norm_sq).exp2();
    let total_mass = params.total_mass();
    ClosedFormReport {
        n,
        log2_norm_sq,
        l2_norm,
        linf_lower: l2_norm,
        linf_upper: std::f64::consts::SQRT_2 * l2_norm,
        influence: log2_influence.exp2(),
        log2_influence,
        entropy: log2_entropy.exp2(),
        log2_entropy,
        coeff_log2_weights,
        total_mass,
        remark1_bound: total_mass * total_mass.exp(),
    }
}

/// Closed-form statistics of the unit-norm functions `P_n / ||P_n||_2` and
/// `(P_n + i Q_n) / (sqrt 2 ||P_n||_2)`; both share one squared spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizedClosedForm {
    /// `sum a_i^2 / (1 + a_i^2)`.
    pub influence: f64,
    pub entropy: f64,
    /// `-(1 + max a_i^2)^{-1} sum a_i^2 log2 a_i^2`.
    pub entropy_lower_bound: f64,
}

pub fn normalized_closed_form(params: &ParamSeq) -> NormalizedClosedForm {
    let a = params.as_slice();
    let influence = numeric::sum(a.iter().map(|&x| {
        let sq = x * x;
        sq / (1.0 + sq)
    }));
    let mut entropy = CompensatedSum::new();
    for &x in a {
        let sq = x * x;
        entropy.add(-(sq / (1.0 + sq)) * sq.log2());
    }
    for &x in a {
        entropy.add(log2_1p_sq(x));
    }
    let max_sq = params.max().map_or(0.0, |m| m * m);
    let weighted = numeric::sum(a.iter().map(|&x| {
        let sq = x * x;
        sq * sq.log2()
    }));
    NormalizedClosedForm {
        influence,
        entropy: entropy.value(),
        entropy_lower_bound: -weighted / (1.0 + max_sq),
    }
}

/// `(n / (n + 1)) log2 n`, the entropy bound both theorem functions beat.
pub fn theorem_entropy_bound(n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let nf = n as f64;
    nf / (nf + 1.0) * nf.log2()
}

/// `a_i = 1/sqrt(n)` for every `i`.
pub fn theorem_params(n: usize) -> Result<ParamSeq> {
    if n == 0 {
        return Err(Error::invalid("theorem parameters need n >= 1"));
    }
    ParamSeq::constant(n, 1.0 / (n as f64).sqrt())
}

/// `a_i = sqrt(a / n)` for `1 < a < n`.
pub fn remark3_params(n: usize, a: f64) -> Result<ParamSeq> {
    let nf = n as f64;
    if !(a > 1.0 && a < nf) {
        return Err(Error::invalid(format!(
            "need 1 < a < n, got a = {a}, n = {n}"
        )));
    }
    ParamSeq::constant(n, (a / nf).sqrt())
}

/// `(a/2) (log2 n - log2 a)`, the entropy floor for the `remark3_params` family.
pub fn remark3_entropy_bound(n: usize, a: f64) -> f64 {
    0.5 * a * ((n as f64).log2() - a.log2())
}

/// `P_n / ||P_n||_2`: unit L2 norm and sup norm at most `sqrt 2`.
pub fn normalized_real(params: &ParamSeq, limit: TableLimit) -> Result<HypercubeFunction> {
    let pq = build_pq(params, limit)?;
    let factor = (-0.5 * params.log2_norm_sq()).exp2();
    Ok(scale(&pq.p, Complex64::new(factor, 0.0)))
}

/// `(P_n + i Q_n) / (sqrt 2 ||P_n||_2)`, a function into the unit circle.
pub fn unimodular_complex(params: &ParamSeq, limit: TableLimit) -> Result<HypercubeFunction> {
    let RSPair { p, q } = build_pq(params, limit)?;
    let factor = FRAC_1_SQRT_2 * (-0.5 * params.log2_norm_sq()).exp2();
    let values = p
        .values()
        .iter()
        .zip(q.values())
        .map(|(pv, qv)| Complex64::new(pv.re, qv.re) * factor)
        .collect();
    HypercubeFunction::new(params.len(), values)
}

/// `P + iQ`, `P - iQ`, `Q + iP`, `Q - iP`, unnormalized.
pub fn four_variants(params: &ParamSeq, limit: TableLimit) -> Result<[HypercubeFunction; 4]> {
    let RSPair { p, q } = build_pq(params, limit)?;
    let n = params.len();
    let combine = |re: &HypercubeFunction, im: &HypercubeFunction, sign: f64| {
        let values = re
            .values()
            .iter()
            .zip(im.values())
            .map(|(r, i)| Complex64::new(r.re, sign * i.re))
            .collect();
        HypercubeFunction::new(n, values)
    };
    Ok([
        combine(&p, &q, 1.0)?,
        combine(&p, &q, -1.0)?,
        combine(&q, &p, 1.0)?,
        combine(&q, &p, -1.0)?,
    ])
}

/// The classical Rudin-Shapiro pair, `a_i = 1` for all `i`.
pub fn classical_pq(n: usize, limit: TableLimit) -> Result<RSPair> {
    build_pq(&ParamSeq::constant(n, 1.0)?, limit)
}

/// `2^{-n/2} R_n` with `R_n = P_n` for the all-ones sequence.
pub fn classical_normalized(n: usize, limit: TableLimit) -> Result<HypercubeFunction> {
    normalized_real(&ParamSeq::constant(n, 1.0)?, limit)
}

/// `n^{-1/2} sum eps_i`.
pub fn normalized_sum(n: usize, limit: TableLimit) -> Result<HypercubeFunction> {
    if n == 0 {
        return Err(Error::invalid("normalized sum needs n >= 1"));
    }
    let root = (n as f64).sqrt();
    HypercubeFunction::from_fn(n, limit, |x| {
        let s = n as f64 - 2.0 * f64::from(x.count_ones());
        Complex64::new(s / root, 0.0)
    })
}

/// Default truncation level for [`neeman_function`].
pub const NEEMAN_DEFAULT_C: f64 = 2.0;

/// `n^{-1/2} sum eps_i` clamped to `[-c, c]`, as a function of the number
/// `k` of coordinates equal to `-1`.
pub fn neeman_level_value(n: usize, c: f64, k: usize) -> f64 {
    let s = (n as f64 - 2.0 * k as f64) / (n as f64).sqrt();
    s.clamp(-c, c)
}

/// Exact L2 norm of the clamped sum, from the binomial law of `sum eps_i`.
pub fn neeman_l2_norm(n: usize, c: f64) -> Result<f64> {
    check_neeman_args(n, c)?;
    if c >= (n as f64).sqrt() {
        // no level is clamped and E[(sum eps_i)^2] = n
        return Ok(1.0);
    }
    // ln(C(n, k) / 2^n), stepped through k
    let mut log_w = -(n as f64) * LN_2;
    let mut acc = CompensatedSum::new();
    for k in 0..=n {
        if k > 0 {
            log_w += ((n - k + 1) as f64).ln() - (k as f64).ln();
        }
        let v = neeman_level_value(n, c, k);
        acc.add(log_w.exp() * v * v);
    }
    Ok(acc.value().sqrt())
}

fn check_neeman_args(n: usize, c: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("truncated sum needs n >= 1"));
    }
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::invalid(format!(
            "truncation level must be positive, got {c}"
        )));
    }
    Ok(())
}

/// Clamped normalized sum, optionally divided by its exact L2 norm.
pub fn neeman_function(
    n: usize,
    c: f64,
    normalize: bool,
    limit: TableLimit,
) -> Result<HypercubeFunction> {
    check_neeman_args(n, c)?;
    limit.check(n)?;
    let divisor = if normalize {
        neeman_l2_norm(n, c)?
    } else {
        1.0
    };
    let levels: Vec<f64> = (0..=n)
        .map(|k| neeman_level_value(n, c, k) / divisor)
        .collect();
    HypercubeFunction::from_fn(n, limit, |x| {
        Complex64::new(levels[x.count_ones() as usize], 0.0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{stats, walsh_transform};

    const LIM: TableLimit = TableLimit::new(26);

    #[test]
    fn params_reject_out_of_range() {
        assert!(ParamSeq::new(vec![0.5, 1.0]).is_ok());
        assert_eq!(
            ParamSeq::new(vec![0.5, 0.0]),
            Err(Error::ParamOutOfRange {
                index: 2,
                value: 0.0
            })
        );
        assert!(ParamSeq::new(vec![1.0 + 1e-15]).is_err());
        assert!(ParamSeq::new(vec![f64::NAN]).is_err());
        assert!(ParamSeq::new(vec![-0.5]).is_err());
    }

    #[test]
    fn base_case_is_constant_one() {
        let pq = build_pq(&ParamSeq::new(vec![]).unwrap(), LIM).unwrap();
        assert_eq!(pq.p.values(), &[Complex64::new(1.0, 0.0)]);
        assert_eq!(pq.q.values(), &[Complex64::new(1.0, 0.0)]);
        assert_eq!(
            evaluate_at(&ParamSeq::new(vec![]).unwrap(), 0).unwrap(),
            (1.0, 1.0)
        );
    }

    #[test]
    fn first_step_by_hand() {
        // P_1 = 1 + eps_1, Q_1 = eps_1 - 1
        let params = ParamSeq::new(vec![1.0]).unwrap();
        let pq = build_pq(&params, LIM).unwrap();
        let re = |f: &HypercubeFunction| f.values().iter().map(|z| z.re).collect::<Vec<_>>();
        assert_eq!(re(&pq.p), vec![2.0, 0.0]);
        assert_eq!(re(&pq.q), vec![0.0, -2.0]);
        assert_eq!(evaluate_at(&params, 0).unwrap(), (2.0, 0.0));
        assert_eq!(evaluate_at(&params, 1).unwrap(), (0.0, -2.0));
    }

    #[test]
    fn build_respects_cap() {
        let params = ParamSeq::constant(5, 0.5).unwrap();
        assert_eq!(
            build_pq(&params, TableLimit::new(4)),
            Err(Error::ResourceLimit { n: 5, max_n: 4 })
        );
    }

    #[test]
    fn evaluate_rejects_mismatched_point() {
        let params = ParamSeq::constant(3, 0.5).unwrap();
        assert!(evaluate_at(&params, 8).is_err());
        assert!(evaluate_signs(&params, &[true]).is_err());
        assert!(unimodular_at(&params, &[false; 4]).is_err());
    }

    #[test]
    fn closed_form_two_coordinates() {
        let h = FRAC_1_SQRT_2;
        let cf = closed_form(&ParamSeq::new(vec![h, h]).unwrap());
        assert!((cf.l2_norm - 1.5).abs() < 1e-15);
        assert!((cf.influence - 1.5).abs() < 1e-14);
        assert!((cf.entropy - 1.5).abs() < 1e-14);
        assert!((cf.linf_upper - 1.5 * 2f64.sqrt()).abs() < 1e-14);
        assert!((cf.coeff_weight(0b11) - 0.25).abs() < 1e-15);
        assert!((cf.pq_square_sum() - 4.5).abs() < 1e-14);
    }

    #[test]
    fn closed_form_single_unit_parameter() {
        let cf = closed_form(&ParamSeq::new(vec![1.0]).unwrap());
        assert_eq!(cf.influence, 1.0);
        assert_eq!(cf.entropy, 0.0);
        assert!((cf.l2_norm - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn closed_form_all_ones() {
        for n in [1usize, 3, 10, 40] {
            let cf = closed_form(&ParamSeq::constant(n, 1.0).unwrap());
            assert_eq!(cf.entropy, 0.0);
            let expected = n as f64 * (n as f64 - 1.0).exp2();
            assert!(numeric::rel_err(cf.influence, expected) < 1e-14, "n={n}");
        }
    }

    #[test]
    fn closed_form_survives_a_million_coordinates() {
        let n = 1_000_000;
        let cf = closed_form(&ParamSeq::constant(n, 0.5).unwrap());
        // log2 I = log2(n * 0.25) + (n - 1) log2 1.25
        let expected = (n as f64 * 0.25).log2() + (n as f64 - 1.0) * 1.25f64.log2();
        assert!(numeric::rel_err(cf.log2_influence, expected) < 1e-12);
        assert!(cf.influence.is_infinite());
        assert!(cf.log2_entropy.is_finite());
        assert!(cf.remark1_bound.is_infinite());
    }

    #[test]
    fn normalized_closed_form_values() {
        let nc = normalized_closed_form(&ParamSeq::constant(4, 0.5).unwrap());
        assert!((nc.influence - 0.8).abs() < 1e-15);
        let expected = 0.8 * 2.0 + 4.0 * 1.25f64.log2();
        assert!((nc.entropy - expected).abs() < 1e-14);
        assert!((nc.entropy - 2.887_712_38).abs() < 1e-8);
        assert!(nc.entropy > nc.entropy_lower_bound);

        for n in [1usize, 5, 64] {
            let nc = normalized_closed_form(&ParamSeq::constant(n, 1.0).unwrap());
            assert!((nc.influence - n as f64 / 2.0).abs() < 1e-12);
            assert!((nc.entropy - n as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn theorem_and_remark3_parameters() {
        assert_eq!(theorem_params(1).unwrap().as_slice(), &[1.0]);
        assert_eq!(theorem_params(4).unwrap().as_slice(), &[0.5; 4]);
        assert!(theorem_params(0).is_err());
        let nine = normalized_closed_form(&theorem_params(9).unwrap());
        assert!((nine.influence - 0.9).abs() < 1e-15);

        assert_eq!(remark3_params(16, 4.0).unwrap().as_slice(), &[0.5; 16]);
        assert!(remark3_params(16, 16.0).is_err());
        assert!(remark3_params(16, 1.0).is_err());
        assert!(remark3_params(16, f64::NAN).is_err());
        let nc = normalized_closed_form(&remark3_params(16, 4.0).unwrap());
        assert!((nc.influence - 3.2).abs() < 1e-14);
    }

    #[test]
    fn normalized_sum_examples() {
        let f = normalized_sum(1, LIM).unwrap();
        assert_eq!(
            f.values(),
            &[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]
        );
        let st = stats(&normalized_sum(4, LIM).unwrap(), LIM).unwrap();
        assert!((st.influence - 1.0).abs() < 1e-14);
        assert!((st.entropy - 2.0).abs() < 1e-14);
        assert!(normalized_sum(0, LIM).is_err());
    }

    #[test]
    fn neeman_two_coordinates_by_hand() {
        let f = neeman_function(2, 1.0, false, LIM).unwrap();
        let re: Vec<f64> = f.values().iter().map(|z| z.re).collect();
        assert_eq!(re, vec![1.0, 0.0, 0.0, -1.0]);
        // ||f||_2^2 = (1 + 0 + 0 + 1) / 4
        assert!((neeman_l2_norm(2, 1.0).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        // spectrum: f = (eps_1 + eps_2) / 2
        let s = walsh_transform(&f, LIM).unwrap();
        let expect = [0.0, 0.5, 0.5, 0.0];
        for (c, e) in s.coeffs().iter().zip(expect) {
            assert!((c.re - e).abs() < 1e-15 && c.im == 0.0);
        }
    }

    #[test]
    fn neeman_binomial_norm_matches_enumeration() {
        for (n, c) in [(1, 0.5), (5, 1.0), (9, 2.0), (12, 0.3), (16, 2.0)] {
            let raw = neeman_function(n, c, false, LIM).unwrap();
            assert!(numeric::rel_err(raw.l2_norm(), neeman_l2_norm(n, c).unwrap()) < 1e-13);
            let unit = neeman_function(n, c, true, LIM).unwrap();
            assert!((unit.l2_norm() - 1.0).abs() < 1e-13);
            assert!(unit.linf_norm() <= c / raw.l2_norm() * (1.0 + 1e-15));
        }
    }

    #[test]
    fn neeman_without_clamping_is_normalized_sum() {
        let n = 9;
        let f = neeman_function(n, 3.0, false, LIM).unwrap();
        assert_eq!(f, normalized_sum(n, LIM).unwrap());
        assert!(neeman_function(n, 0.0, true, LIM).is_err());
        assert!(neeman_function(n, -1.0, true, LIM).is_err());
    }

    #[test]
    fn four_variants_base_case() {
        let [f1, f2, f3, f4] = four_variants(&ParamSeq::new(vec![]).unwrap(), LIM).unwrap();
        assert_eq!(f1.get(0), Complex64::new(1.0, 1.0));
        assert_eq!(f2.get(0), Complex64::new(1.0, -1.0));
        assert_eq!(f3.get(0), Complex64::new(1.0, 1.0));
        assert_eq!(f4.get(0), Complex64::new(1.0, -1.0));
        let s = walsh_transform(&f1, LIM).unwrap();
        assert!((s.coeff(0).norm() - 2f64.sqrt()).abs() < 1e-15);
    }
}
