//! Brute-force oracles and certificates.
//!
//! Every certificate recomputes its quantities from value tables through the
//! Walsh transform, then also checks agreement with the closed forms. Strict
//! inequalities are reported with their margin and fail when the margin is
//! not positive; there is no epsilon forgiveness on them.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::SQRT_2;
use std::fmt::{self, Write as _};

use crate::construct::{
    self, build_pq, classical_pq, closed_form, evaluate_signs, normalized_closed_form,
    normalized_real, remark3_entropy_bound, remark3_params, theorem_entropy_bound, theorem_params,
    unimodular_complex, ParamSeq,
};
use crate::error::{Error, Result};
use crate::format::format_f64;
use crate::numeric::rel_err;
use crate::spectrum::{
    conjugate, entropy, influence, lift_zero_mean, scale, stats, walsh_transform,
    HypercubeFunction, SpectralStats, TableLimit,
};

/// Absolute tolerance on norms that are exactly one (or equal) in exact arithmetic.
pub const NORM_TOL: f64 = 1e-12;
/// Relative tolerance between brute-force and closed-form quantities.
pub const AGREEMENT_TOL: f64 = 1e-9;
/// Sampled modulus checks beyond the table cap.
pub const SAMPLED_MODULUS_TOL: f64 = 1e-9;
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    Theorem1,
    Theorem2,
    Remark2,
    Remark3,
    ClassicalRs,
    Neeman,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::Theorem1 => "theorem1",
            CertificateKind::Theorem2 => "theorem2",
            CertificateKind::Remark2 => "remark2",
            CertificateKind::Remark3 => "remark3",
            CertificateKind::ClassicalRs => "classical_rs",
            CertificateKind::Neeman => "neeman",
        }
    }
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    /// `|lhs - rhs| <= tol`
    #[serde(rename = "~abs")]
    AbsEq,
    /// `|lhs - rhs| / max(|lhs|, |rhs|) <= tol`
    #[serde(rename = "~rel")]
    RelEq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Gt => ">",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::AbsEq => "~abs",
            Relation::RelEq => "~rel",
        }
    }
}

/// One comparison. `margin` is signed distance to failure: positive means
/// comfortably passing. Strict relations need `margin > 0`, the others
/// `margin >= 0` where `tol` is the allowed slack.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    pub tol: f64,
    pub margin: f64,
    pub pass: bool,
}

impl Check {
    fn build(name: &str, lhs: f64, relation: Relation, rhs: f64, tol: f64) -> Self {
        let margin = match relation {
            Relation::Lt => rhs - lhs,
            Relation::Gt => lhs - rhs,
            Relation::Le => rhs + tol - lhs,
            Relation::Ge => lhs + tol - rhs,
            Relation::AbsEq => tol - (lhs - rhs).abs(),
            Relation::RelEq => tol - rel_err(lhs, rhs),
        };
        let pass = match relation {
            Relation::Lt | Relation::Gt => margin > 0.0,
            _ => margin >= 0.0,
        };
        Self {
            name: name.to_string(),
            lhs,
            relation,
            rhs,
            tol,
            margin,
            pass,
        }
    }

    pub fn lt(name: &str, lhs: f64, rhs: f64) -> Self {
        Self::build(name, lhs, Relation::Lt, rhs, 0.0)
    }

    pub fn gt(name: &str, lhs: f64, rhs: f64) -> Self {
        Self::build(name, lhs, Relation::Gt, rhs, 0.0)
    }

    pub fn le(name: &str, lhs: f64, rhs: f64, slack: f64) -> Self {
        Self::build(name, lhs, Relation::Le, rhs, slack)
    }

    pub fn ge(name: &str, lhs: f64, rhs: f64, slack: f64) -> Self {
        Self::build(name, lhs, Relation::Ge, rhs, slack)
    }

    pub fn abs_eq(name: &str, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::build(name, lhs, Relation::AbsEq, rhs, tol)
    }

    pub fn rel_eq(name: &str, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::build(name, lhs, Relation::RelEq, rhs, tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub n: u64,
    pub inputs: String,
    pub log_base: u32,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl Certificate {
    pub fn new(
        kind: CertificateKind,
        n: u64,
        inputs: impl Into<String>,
        checks: Vec<Check>,
    ) -> Self {
        let overall = checks.iter().all(|c| c.pass);
        Self {
            kind,
            n,
            inputs: inputs.into(),
            log_base: 2,
            checks,
            overall,
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Key-value text: one header record, then one record per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "certificate={} n={} inputs={} log_base={} overall={}",
            self.kind,
            self.n,
            self.inputs.replace(' ', "_"),
            self.log_base,
            verdict(self.overall)
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "check={} lhs={} relation={} rhs={} tol={} margin={} pass={}",
                c.name,
                format_f64(c.lhs),
                c.relation.symbol(),
                format_f64(c.rhs),
                format_f64(c.tol),
                format_f64(c.margin),
                verdict(c.pass)
            );
        }
        out
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn theorem_inputs(n: usize) -> String {
    format!("a_i=1/sqrt({n})")
}

/// Real unit-norm function from `a_i = 1/sqrt(n)`: `||f||_2 = 1 <= ||f||_inf <= sqrt 2`,
/// `I(f) < 1` and `H > (n/(n+1)) log2 n`.
pub fn certify_theorem1(n: usize, limit: TableLimit) -> Result<Certificate> {
    let params = theorem_params(n)?;
    limit.check(n)?;
    let f = normalized_real(&params, limit)?;
    let st = stats(&f, limit)?;
    let nc = normalized_closed_form(&params);
    let nf = n as f64;
    let checks = vec![
        Check::abs_eq("l2_norm", st.l2_norm, 1.0, NORM_TOL),
        Check::ge("linf_lower", st.linf_norm, 1.0, NORM_TOL),
        Check::le("linf_upper", st.linf_norm, SQRT_2, NORM_TOL),
        Check::lt("influence_below_one", st.influence, 1.0),
        Check::gt("entropy_above_bound", st.entropy, theorem_entropy_bound(n)),
        Check::rel_eq(
            "influence_exact",
            st.influence,
            nf / (nf + 1.0),
            AGREEMENT_TOL,
        ),
        Check::rel_eq("entropy_closed_form", st.entropy, nc.entropy, AGREEMENT_TOL),
    ];
    Ok(Certificate::new(
        CertificateKind::Theorem1,
        n as u64,
        theorem_inputs(n),
        checks,
    ))
}

fn max_modulus_deviation(f: &HypercubeFunction) -> f64 {
    f.values()
        .iter()
        .map(|z| (z.norm() - 1.0).abs())
        .fold(0.0, f64::max)
}

/// Modulus-one function `(P + iQ)/(sqrt 2 ||P||_2)` from `a_i = 1/sqrt(n)`.
pub fn certify_theorem2(n: usize, limit: TableLimit) -> Result<Certificate> {
    let params = theorem_params(n)?;
    limit.check(n)?;
    let f = unimodular_complex(&params, limit)?;
    let st = stats(&f, limit)?;
    let nc = normalized_closed_form(&params);
    let checks = vec![
        Check::lt("modulus_deviation", max_modulus_deviation(&f), NORM_TOL),
        Check::lt("influence_below_one", st.influence, 1.0),
        Check::gt("entropy_above_bound", st.entropy, theorem_entropy_bound(n)),
        Check::rel_eq(
            "influence_closed_form",
            st.influence,
            nc.influence,
            AGREEMENT_TOL,
        ),
        Check::rel_eq("entropy_closed_form", st.entropy, nc.entropy, AGREEMENT_TOL),
    ];
    Ok(Certificate::new(
        CertificateKind::Theorem2,
        n as u64,
        theorem_inputs(n),
        checks,
    ))
}

/// Uniformly random point as per-coordinate "is minus" flags.
pub fn random_point(n: usize, rng: &mut impl Rng) -> Vec<bool> {
    (0..n).map(|_| rng.gen::<bool>()).collect()
}

/// Largest `| |f(x)| - 1 |` over `samples` random points of the modulus-one
/// function, evaluated by the streaming recursion (no table).
pub fn sampled_modulus_deviation(params: &ParamSeq, samples: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let norm = std::f64::consts::FRAC_1_SQRT_2 * (-0.5 * params.log2_norm_sq()).exp2();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let point = random_point(params.len(), &mut rng);
        let (p, q) = evaluate_signs(params, &point)?;
        let z = Complex64::new(p, q) * norm;
        let z = if z.is_finite() {
            z
        } else {
            construct::unimodular_at(params, &point)?
        };
        worst = worst.max((z.norm() - 1.0).abs());
    }
    Ok(worst)
}

/// Modulus-one certificate beyond the table cap: closed-form influence and entropy plus a
/// sampled modulus check.
pub fn certify_theorem2_sampled(n: usize, samples: usize, seed: u64) -> Result<Certificate> {
    let params = theorem_params(n)?;
    let nc = normalized_closed_form(&params);
    let dev = sampled_modulus_deviation(&params, samples, seed)?;
    let checks = vec![
        Check::lt("sampled_modulus_deviation", dev, SAMPLED_MODULUS_TOL),
        Check::lt("influence_below_one", nc.influence, 1.0),
        Check::gt("entropy_above_bound", nc.entropy, theorem_entropy_bound(n)),
    ];
    let inputs = format!("{} samples={samples} seed={seed}", theorem_inputs(n));
    Ok(Certificate::new(
        CertificateKind::Theorem2,
        n as u64,
        inputs,
        checks,
    ))
}

/// `a/2 < I < a` and `H > (a/2)(log2 n - log2 a)` for `a_i = sqrt(a/n)`, in
/// closed form for any `n` and by brute force for both the real and the
/// modulus-one function when `n` fits the table cap.
pub fn certify_remark3(n: usize, a: f64, limit: TableLimit) -> Result<Certificate> {
    let params = remark3_params(n, a)?;
    let nc = normalized_closed_form(&params);
    let bound = remark3_entropy_bound(n, a);
    let mut checks = vec![
        Check::gt("closed_form_influence_lower", nc.influence, a / 2.0),
        Check::lt("closed_form_influence_upper", nc.influence, a),
        Check::gt("closed_form_entropy_above_bound", nc.entropy, bound),
    ];
    if limit.check(n).is_ok() {
        let real = normalized_real(&params, limit)?;
        let complex = unimodular_complex(&params, limit)?;
        for (tag, f) in [("real", &real), ("complex", &complex)] {
            let st = stats(f, limit)?;
            checks.push(Check::abs_eq(
                &format!("{tag}_l2_norm"),
                st.l2_norm,
                1.0,
                NORM_TOL,
            ));
            checks.push(Check::gt(
                &format!("{tag}_influence_lower"),
                st.influence,
                a / 2.0,
            ));
            checks.push(Check::lt(
                &format!("{tag}_influence_upper"),
                st.influence,
                a,
            ));
            checks.push(Check::gt(
                &format!("{tag}_entropy_above_bound"),
                st.entropy,
                bound,
            ));
            checks.push(Check::rel_eq(
                &format!("{tag}_influence_closed_form"),
                st.influence,
                nc.influence,
                AGREEMENT_TOL,
            ));
            checks.push(Check::rel_eq(
                &format!("{tag}_entropy_closed_form"),
                st.entropy,
                nc.entropy,
                AGREEMENT_TOL,
            ));
        }
        checks.push(Check::le(
            "real_linf_upper",
            real.linf_norm(),
            SQRT_2,
            NORM_TOL,
        ));
        checks.push(Check::lt(
            "complex_modulus_deviation",
            max_modulus_deviation(&complex),
            NORM_TOL,
        ));
    }
    let inputs = format!("a_i=sqrt({a}/{n})");
    Ok(Certificate::new(
        CertificateKind::Remark3,
        n as u64,
        inputs,
        checks,
    ))
}

/// Zero-mean lift `g = eps_{n+1} f` of the theorem-1 function.
pub fn certify_remark2(n: usize, limit: TableLimit) -> Result<Certificate> {
    let params = theorem_params(n)?;
    limit.check(n + 1)?;
    let f = normalized_real(&params, limit)?;
    let g = lift_zero_mean(&f, limit)?;
    let sf = stats(&f, limit)?;
    let sg = stats(&g, limit)?;
    let checks = vec![
        Check::abs_eq("l2_preserved", sg.l2_norm, sf.l2_norm, NORM_TOL),
        Check::abs_eq("linf_preserved", sg.linf_norm, sf.linf_norm, NORM_TOL),
        Check::abs_eq("entropy_preserved", sg.entropy, sf.entropy, NORM_TOL),
        Check::rel_eq(
            "influence_shift",
            sg.influence,
            sf.influence + sf.l2_norm * sf.l2_norm,
            AGREEMENT_TOL,
        ),
        Check::lt("influence_below_two", sg.influence, 2.0),
        Check::le("mean_zero", g.mean().norm(), 0.0, NORM_TOL),
    ];
    Ok(Certificate::new(
        CertificateKind::Remark2,
        n as u64,
        theorem_inputs(n),
        checks,
    ))
}

/// Classical Rudin-Shapiro (`a_i = 1`): unit-modulus coefficients,
/// `||P||_2 = 2^{n/2}`, `||P||_inf <= sqrt 2 ||P||_2`, and `I = n/2`, `H = n`
/// after normalization.
pub fn certify_classical_rs(n: usize, limit: TableLimit) -> Result<Certificate> {
    limit.check(n)?;
    let pq = classical_pq(n, limit)?;
    let sp = walsh_transform(&pq.p, limit)?;
    let sq = walsh_transform(&pq.q, limit)?;
    let coeff_dev = sp
        .coeffs()
        .iter()
        .chain(sq.coeffs())
        .map(|c| (c.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    let l2 = pq.p.l2_norm();
    let normalized = scale(&pq.p, Complex64::new(1.0 / l2, 0.0));
    let st = stats(&normalized, limit)?;
    let nf = n as f64;
    let checks = vec![
        Check::le("coefficient_modulus_deviation", coeff_dev, 0.0, NORM_TOL),
        Check::rel_eq("l2_norm", l2, (nf / 2.0).exp2(), AGREEMENT_TOL),
        Check::le("linf_over_l2", pq.p.linf_norm() / l2, SQRT_2, NORM_TOL),
        Check::rel_eq(
            "normalized_influence",
            st.influence,
            nf / 2.0,
            AGREEMENT_TOL,
        ),
        Check::rel_eq("normalized_entropy", st.entropy, nf, AGREEMENT_TOL),
    ];
    Ok(Certificate::new(
        CertificateKind::ClassicalRs,
        n as u64,
        "a_i=1",
        checks,
    ))
}

/// Maximum relative errors between brute force and closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: usize,
    pub trials: usize,
    pub seed: Option<u64>,
    pub tol: f64,
    /// `|P|^2 + |Q|^2` against `2 prod (1 + a_i^2)`, worst point.
    pub pq_square_sum: f64,
    pub l2_norm: f64,
    /// Relative distance by which `||P||_inf` or `||Q||_inf` leaves its bracket.
    pub linf_bracket: f64,
    pub coefficients: f64,
    pub influence: f64,
    pub entropy: f64,
}

impl OracleReport {
    pub fn max_error(&self) -> f64 {
        [
            self.pq_square_sum,
            self.l2_norm,
            self.linf_bracket,
            self.coefficients,
            self.influence,
            self.entropy,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.max_error() <= self.tol
    }

    fn merge(&mut self, other: &OracleReport) {
        self.trials += other.trials;
        self.pq_square_sum = self.pq_square_sum.max(other.pq_square_sum);
        self.l2_norm = self.l2_norm.max(other.l2_norm);
        self.linf_bracket = self.linf_bracket.max(other.linf_bracket);
        self.coefficients = self.coefficients.max(other.coefficients);
        self.influence = self.influence.max(other.influence);
        self.entropy = self.entropy.max(other.entropy);
    }
}

fn bracket_violation(value: f64, lower: f64, upper: f64) -> f64 {
    let below = (lower - value) / lower;
    let above = (value - upper) / upper;
    below.max(above).max(0.0)
}

/// Builds `P_n`, `Q_n`, transforms both and compares every closed-form
/// quantity: the constant `|P|^2 + |Q|^2`, both norms, the sup-norm bracket,
/// each squared coefficient, influence and entropy.
pub fn oracle_compare(params: &ParamSeq, tol: f64, limit: TableLimit) -> Result<OracleReport> {
    let n = params.len();
    limit.check(n)?;
    let cf = closed_form(params);
    let pq = build_pq(params, limit)?;

    let target = cf.pq_square_sum();
    let pq_square_sum =
        pq.p.values()
            .iter()
            .zip(pq.q.values())
            .map(|(p, q)| rel_err(p.norm_sqr() + q.norm_sqr(), target))
            .fold(0.0, f64::max);

    let mut report = OracleReport {
        n,
        trials: 1,
        seed: None,
        tol,
        pq_square_sum,
        l2_norm: 0.0,
        linf_bracket: 0.0,
        coefficients: 0.0,
        influence: 0.0,
        entropy: 0.0,
    };
    let weights: Vec<f64> = (0..1usize << n).map(|m| cf.coeff_weight(m)).collect();
    for f in [&pq.p, &pq.q] {
        let s = walsh_transform(f, limit)?;
        report.l2_norm = report.l2_norm.max(rel_err(f.l2_norm(), cf.l2_norm));
        report.linf_bracket = report.linf_bracket.max(bracket_violation(
            f.linf_norm(),
            cf.linf_lower,
            cf.linf_upper,
        ));
        let coeff = s
            .weights()
            .zip(&weights)
            .map(|(w, &expect)| rel_err(w, expect))
            .fold(0.0, f64::max);
        report.coefficients = report.coefficients.max(coeff);
        report.influence = report.influence.max(rel_err(influence(&s), cf.influence));
        report.entropy = report.entropy.max(rel_err(entropy(&s), cf.entropy));
    }
    Ok(report)
}

/// Lower end of the uniform draw for random parameters.
pub const RANDOM_PARAM_FLOOR: f64 = 0.05;

/// Uniform draw from `(0.05, 1]^n`.
pub fn random_params(n: usize, rng: &mut impl Rng) -> ParamSeq {
    let width = 1.0 - RANDOM_PARAM_FLOOR;
    let a = (0..n).map(|_| 1.0 - width * rng.gen::<f64>()).collect();
    ParamSeq::new(a).expect("draws lie in (0.05, 1]")
}

/// [`oracle_compare`] over `trials` seeded random parameter sequences.
pub fn oracle_campaign(
    n: usize,
    trials: usize,
    seed: u64,
    tol: f64,
    limit: TableLimit,
) -> Result<OracleReport> {
    if trials == 0 {
        return Err(Error::invalid("oracle campaign needs at least one trial"));
    }
    limit.check(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total: Option<OracleReport> = None;
    for _ in 0..trials {
        let params = random_params(n, &mut rng);
        let r = oracle_compare(&params, tol, limit)?;
        match total.as_mut() {
            Some(t) => t.merge(&r),
            None => total = Some(r),
        }
    }
    let mut total = total.expect("at least one trial");
    total.seed = Some(seed);
    Ok(total)
}

/// Pinned range for the normalized truncated sum's influence at `C = 2`,
/// `n` in {8, 12, 16, 20}. The first brute-force run gave `I` between
/// 1.0134 (n = 8) and 1.0277 (n = 16).
pub const NEEMAN_C2_INFLUENCE_BAND: (f64, f64) = (1.00, 1.05);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeemanRow {
    pub n: usize,
    /// L2 norm before normalization.
    pub raw_l2_norm: f64,
    pub linf_norm: f64,
    pub influence: f64,
    pub entropy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeemanReport {
    pub c: f64,
    pub rows: Vec<NeemanRow>,
    pub entropy_increasing: bool,
    pub influence_band: Option<(f64, f64)>,
    pub influence_in_band: Option<bool>,
}

impl NeemanReport {
    pub fn passed(&self) -> bool {
        self.entropy_increasing && self.influence_in_band.unwrap_or(true)
    }

    pub fn certificate(&self) -> Certificate {
        let mut checks = Vec::new();
        for pair in self.rows.windows(2) {
            checks.push(Check::gt(
                &format!("entropy_increases_{}_to_{}", pair[0].n, pair[1].n),
                pair[1].entropy,
                pair[0].entropy,
            ));
        }
        if let Some((lo, hi)) = self.influence_band {
            for row in &self.rows {
                checks.push(Check::ge(
                    &format!("influence_band_low_n{}", row.n),
                    row.influence,
                    lo,
                    0.0,
                ));
                checks.push(Check::le(
                    &format!("influence_band_high_n{}", row.n),
                    row.influence,
                    hi,
                    0.0,
                ));
            }
        }
        let ns: Vec<String> = self.rows.iter().map(|r| r.n.to_string()).collect();
        let n = self.rows.iter().map(|r| r.n).max().unwrap_or(0);
        let inputs = format!("C={} ns={}", self.c, ns.join(","));
        Certificate::new(CertificateKind::Neeman, n as u64, inputs, checks)
    }
}

/// Brute-force `(I, H)` of the normalized truncated sum for each `n`.
///
/// The entropy must increase strictly along `ns`; when a band is given the
/// influence must stay inside it.
pub fn neeman_regression(
    ns: &[usize],
    c: f64,
    band: Option<(f64, f64)>,
    limit: TableLimit,
) -> Result<NeemanReport> {
    if ns.is_empty() {
        return Err(Error::invalid("need at least one dimension"));
    }
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let f = construct::neeman_function(n, c, true, limit)?;
        let st = stats(&f, limit)?;
        rows.push(NeemanRow {
            n,
            raw_l2_norm: construct::neeman_l2_norm(n, c)?,
            linf_norm: st.linf_norm,
            influence: st.influence,
            entropy: st.entropy,
        });
    }
    let entropy_increasing = rows.windows(2).all(|w| w[1].entropy > w[0].entropy);
    let influence_in_band =
        band.map(|(lo, hi)| rows.iter().all(|r| r.influence >= lo && r.influence <= hi));
    Ok(NeemanReport {
        c,
        rows,
        entropy_increasing,
        influence_band: band,
        influence_in_band,
    })
}

/// Worst relative errors of the generic spectral laws over a random campaign.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LawReport {
    pub trials: usize,
    pub seed: u64,
    /// `I(af) = |a|^2 I(f)`.
    pub scaling_influence: f64,
    /// `H(|(af)^|^2) = |a|^2 H(|f^|^2) - |a|^2 log2(|a|^2) ||f||_2^2`.
    pub scaling_entropy: f64,
    /// `|conj(f)^(A)| = |f^(A)|` and equal entropy, absolute.
    pub conjugation: f64,
    /// `I(R + a eps_{n+1} S) = I(R) + a^2 (I(S) + ||S||_2^2)`.
    pub additivity: f64,
}

pub fn random_function(
    n: usize,
    rng: &mut impl Rng,
    limit: TableLimit,
) -> Result<HypercubeFunction> {
    limit.check(n)?;
    let values = (0..1usize << n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    HypercubeFunction::new(n, values)
}

/// Relative errors of both scaling identities for `a * f`.
pub fn scaling_errors(
    f: &HypercubeFunction,
    a: Complex64,
    limit: TableLimit,
) -> Result<(f64, f64)> {
    let base: SpectralStats = stats(f, limit)?;
    let scaled = stats(&scale(f, a), limit)?;
    let m = a.norm_sqr();
    let expect_h = m * base.entropy - crate::numeric::xlog2x(m) * base.l2_norm * base.l2_norm;
    Ok((
        rel_err(scaled.influence, m * base.influence),
        rel_err(scaled.entropy, expect_h),
    ))
}

/// Largest coefficient-magnitude or entropy difference under conjugation.
pub fn conjugation_error(f: &HypercubeFunction, limit: TableLimit) -> Result<f64> {
    let s = walsh_transform(f, limit)?;
    let sc = walsh_transform(&conjugate(f), limit)?;
    let coeff = s
        .coeffs()
        .iter()
        .zip(sc.coeffs())
        .map(|(a, b)| (a.norm() - b.norm()).abs())
        .fold(0.0, f64::max);
    Ok(coeff.max((entropy(&s) - entropy(&sc)).abs()))
}

/// `T = R + a eps_{n+1} S` on `n + 1` coordinates.
pub fn extend_with_coordinate(
    r: &HypercubeFunction,
    s: &HypercubeFunction,
    a: f64,
    limit: TableLimit,
) -> Result<HypercubeFunction> {
    if r.n() != s.n() {
        return Err(Error::invalid("R and S must share a dimension"));
    }
    limit.check(r.n() + 1)?;
    let lo = r.values().iter().zip(s.values()).map(|(x, y)| x + y * a);
    let hi = r.values().iter().zip(s.values()).map(|(x, y)| x - y * a);
    HypercubeFunction::new(r.n() + 1, lo.chain(hi).collect())
}

pub fn additivity_error(
    r: &HypercubeFunction,
    s: &HypercubeFunction,
    a: f64,
    limit: TableLimit,
) -> Result<f64> {
    let t = extend_with_coordinate(r, s, a, limit)?;
    let it = stats(&t, limit)?.influence;
    let ir = stats(r, limit)?.influence;
    let ss = stats(s, limit)?;
    Ok(rel_err(
        it,
        ir + a * a * (ss.influence + ss.l2_norm * ss.l2_norm),
    ))
}

/// Runs `trials` random instances of each law with `n` drawn from `1..=max_n`.
pub fn law_campaign(
    trials: usize,
    max_n: usize,
    seed: u64,
    limit: TableLimit,
) -> Result<LawReport> {
    if max_n == 0 {
        return Err(Error::invalid("law campaign needs max_n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport {
        trials,
        seed,
        ..LawReport::default()
    };
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_n);
        let f = random_function(n, &mut rng, limit)?;
        let a = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let (ei, eh) = scaling_errors(&f, a, limit)?;
        report.scaling_influence = report.scaling_influence.max(ei);
        report.scaling_entropy = report.scaling_entropy.max(eh);
        report.conjugation = report.conjugation.max(conjugation_error(&f, limit)?);

        let n_rs = rng.gen_range(0..max_n);
        let r = random_function(n_rs, &mut rng, limit)?;
        let s = random_function(n_rs, &mut rng, limit)?;
        let a = rng.gen_range(-2.0..2.0);
        report.additivity = report.additivity.max(additivity_error(&r, &s, a, limit)?);
    }
    Ok(report)
}
