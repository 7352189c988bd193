//! Functions on `{-1,1}^n`, their Fourier-Walsh spectra, and the spectral
//! statistics built on top (norms, influence, entropy).
//!
//! Index conventions are fixed so that files and tests are bit-exact:
//!
//! * a point index `x` in `[0, 2^n)` encodes the signs `eps_1..eps_n`
//!   through bit `i - 1`: a clear bit is `eps_i = +1`, a set bit `eps_i = -1`;
//! * a subset mask `m` encodes `A` through bit `i - 1`, set iff `i` is in `A`.
//!
//! With these, the character `W_A(x)` is `(-1)^popcount(m & x)`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{self, CompensatedSum};

/// Default largest dimension for which a full `2^n` table may be built.
pub const DEFAULT_MAX_TABLE_N: usize = 26;

/// Tables beyond this are refused whatever the configured cap says.
pub const HARD_MAX_TABLE_N: usize = 40;

// Butterfly passes run inside blocks of this many entries before the
// long-stride passes; tables shorter than this run sequentially.
const BLOCK_LEN: usize = 1 << 13;

/// Cap on the dimension of brute-force value tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableLimit {
    max_n: usize,
}

impl TableLimit {
    pub const fn new(max_n: usize) -> Self {
        Self { max_n }
    }

    pub const fn max_n(self) -> usize {
        self.max_n
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.max_n || n > HARD_MAX_TABLE_N {
            Err(Error::ResourceLimit {
                n,
                max_n: self.max_n.min(HARD_MAX_TABLE_N),
            })
        } else {
            Ok(())
        }
    }
}

impl Default for TableLimit {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_TABLE_N)
    }
}

/// `eps_i(x)` for the 1-based coordinate `i`, as `+1.0` or `-1.0`.
#[inline]
pub fn epsilon(x: usize, i: usize) -> f64 {
    if (x >> (i - 1)) & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `W_A(x)` for the subset mask `m`.
#[inline]
pub fn character(m: usize, x: usize) -> f64 {
    if (m & x).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_table(n: usize, table: &[Complex64]) -> Result<()> {
    if n > HARD_MAX_TABLE_N || table.len() != 1usize << n {
        return Err(Error::LengthMismatch {
            n,
            len: table.len(),
        });
    }
    match table
        .iter()
        .position(|z| !(z.re.is_finite() && z.im.is_finite()))
    {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

/// A complex-valued function on `{-1,1}^n`, stored as its full value table.
#[derive(Debug, Clone, PartialEq)]
pub struct HypercubeFunction {
    n: usize,
    values: Vec<Complex64>,
}

impl HypercubeFunction {
    pub fn new(n: usize, values: Vec<Complex64>) -> Result<Self> {
        check_table(n, &values)?;
        Ok(Self { n, values })
    }

    pub fn from_real(n: usize, values: Vec<f64>) -> Result<Self> {
        Self::new(
            n,
            values.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
        )
    }

    /// Tabulates `f` over all `2^n` point indices.
    pub fn from_fn(n: usize, limit: TableLimit, f: impl Fn(usize) -> Complex64) -> Result<Self> {
        limit.check(n)?;
        Self::new(n, (0..1usize << n).map(f).collect())
    }

    pub fn constant(n: usize, c: Complex64, limit: TableLimit) -> Result<Self> {
        Self::from_fn(n, limit, |_| c)
    }

    /// The character `W_A` for the subset mask `m`.
    pub fn character(n: usize, m: usize, limit: TableLimit) -> Result<Self> {
        if n < usize::BITS as usize && m >> n != 0 {
            return Err(Error::invalid(format!(
                "mask {m:#x} has bits beyond n = {n}"
            )));
        }
        Self::from_fn(n, limit, |x| Complex64::new(character(m, x), 0.0))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn get(&self, x: usize) -> Complex64 {
        self.values[x]
    }

    /// True when every imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.values.iter().all(|z| z.im == 0.0)
    }

    /// `sqrt(2^-n sum |f(x)|^2)`.
    pub fn l2_norm(&self) -> f64 {
        self.l2_norm_sq().sqrt()
    }

    pub fn l2_norm_sq(&self) -> f64 {
        let total = numeric::sum(self.values.iter().map(|z| z.norm_sqr()));
        total / self.values.len() as f64
    }

    pub fn linf_norm(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn mean(&self) -> Complex64 {
        let re = numeric::sum(self.values.iter().map(|z| z.re));
        let im = numeric::sum(self.values.iter().map(|z| z.im));
        Complex64::new(re, im) / self.values.len() as f64
    }
}

/// Fourier-Walsh coefficients `f^(A)` indexed by subset mask.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSpectrum {
    n: usize,
    coeffs: Vec<Complex64>,
}

impl FourierSpectrum {
    pub fn new(n: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        check_table(n, &coeffs)?;
        Ok(Self { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Complex64 {
        self.coeffs[m]
    }

    /// Squared magnitudes `|f^(A)|^2` in ascending mask order.
    pub fn weights(&self) -> impl Iterator<Item = f64> + '_ {
        self.coeffs.iter().map(|c| c.norm_sqr())
    }

    /// Parseval mass `sum |f^(A)|^2`.
    pub fn total_weight(&self) -> f64 {
        numeric::sum(self.weights())
    }
}

/// Unnormalized in-place Walsh-Hadamard butterfly, `n` passes over the table.
///
/// Every output entry goes through the same sequence of additions whatever
/// the thread count, so the result is bitwise reproducible.
fn butterfly(data: &mut [Complex64]) {
    let len = data.len();
    if len <= BLOCK_LEN {
        butterfly_passes(data, 1, len);
        return;
    }
    // Short strides: every pass stays inside one block.
    data.par_chunks_mut(BLOCK_LEN)
        .for_each(|block| butterfly_passes(block, 1, BLOCK_LEN));
    // Long strides: split each pair of halves into parallel slabs.
    let mut half = BLOCK_LEN;
    while half < len {
        for chunk in data.chunks_mut(2 * half) {
            let (lo, hi) = chunk.split_at_mut(half);
            lo.par_chunks_mut(BLOCK_LEN)
                .zip(hi.par_chunks_mut(BLOCK_LEN))
                .for_each(|(l, h)| {
                    for (a, b) in l.iter_mut().zip(h.iter_mut()) {
                        let (x, y) = (*a, *b);
                        *a = x + y;
                        *b = x - y;
                    }
                });
        }
        half <<= 1;
    }
}

/// Passes with strides `first_half, 2*first_half, ...` below `end_half`.
fn butterfly_passes(data: &mut [Complex64], first_half: usize, end_half: usize) {
    let mut half = first_half;
    while half < end_half {
        for chunk in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half <<= 1;
    }
}

/// Forward transform: `f^(A) = 2^-n sum_x f(x) W_A(x)`.
pub fn walsh_transform(f: &HypercubeFunction, limit: TableLimit) -> Result<FourierSpectrum> {
    limit.check(f.n)?;
    let mut coeffs = f.values.clone();
    butterfly(&mut coeffs);
    // power-of-two scaling is exact
    let scale = (-(f.n as f64)).exp2();
    coeffs.iter_mut().for_each(|c| *c *= scale);
    Ok(FourierSpectrum { n: f.n, coeffs })
}

/// Inverse transform: `f(x) = sum_A f^(A) W_A(x)`, no normalization factor.
pub fn inverse_transform(s: &FourierSpectrum, limit: TableLimit) -> Result<HypercubeFunction> {
    limit.check(s.n)?;
    let mut values = s.coeffs.clone();
    butterfly(&mut values);
    Ok(HypercubeFunction { n: s.n, values })
}

/// `I(f) = sum_A |f^(A)|^2 |A|`, accumulated in ascending mask order.
pub fn influence(s: &FourierSpectrum) -> f64 {
    let mut acc = CompensatedSum::new();
    for (m, c) in s.coeffs.iter().enumerate() {
        let degree = m.count_ones();
        if degree != 0 {
            acc.add(c.norm_sqr() * f64::from(degree));
        }
    }
    acc.value()
}

/// Base-2 entropy `-sum_A |f^(A)|^2 log2 |f^(A)|^2` with `0 log 0 = 0`.
///
/// The weights are not renormalized, so this is also meaningful for spectra
/// of functions whose L2 norm is not one.
pub fn entropy(s: &FourierSpectrum) -> f64 {
    -numeric::sum(s.weights().map(numeric::xlog2x))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralStats {
    pub l2_norm: f64,
    pub linf_norm: f64,
    pub influence: f64,
    pub entropy: f64,
    pub total_weight: f64,
}

impl SpectralStats {
    pub fn from_parts(f: &HypercubeFunction, s: &FourierSpectrum) -> Self {
        Self {
            l2_norm: f.l2_norm(),
            linf_norm: f.linf_norm(),
            influence: influence(s),
            entropy: entropy(s),
            total_weight: s.total_weight(),
        }
    }
}

pub fn stats(f: &HypercubeFunction, limit: TableLimit) -> Result<SpectralStats> {
    let s = walsh_transform(f, limit)?;
    Ok(SpectralStats::from_parts(f, &s))
}

/// Pointwise `a * f`.
pub fn scale(f: &HypercubeFunction, a: Complex64) -> HypercubeFunction {
    HypercubeFunction {
        n: f.n,
        values: f.values.iter().map(|z| z * a).collect(),
    }
}

/// Pointwise complex conjugate.
pub fn conjugate(f: &HypercubeFunction) -> HypercubeFunction {
    HypercubeFunction {
        n: f.n,
        values: f.values.iter().map(|z| z.conj()).collect(),
    }
}

/// `g = eps_{n+1} f` on `{-1,1}^{n+1}`: the low half of the table is `f`, the
/// high half (new coordinate `-1`) is `-f`. `g` has mean zero and
/// `I(g) = I(f) + ||f||_2^2`; norms and entropy are unchanged.
pub fn lift_zero_mean(f: &HypercubeFunction, limit: TableLimit) -> Result<HypercubeFunction> {
    limit.check(f.n + 1)?;
    let mut values = Vec::with_capacity(2 * f.values.len());
    values.extend_from_slice(&f.values);
    values.extend(f.values.iter().map(|z| -z));
    Ok(HypercubeFunction { n: f.n + 1, values })
}
