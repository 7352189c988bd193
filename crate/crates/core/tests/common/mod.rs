#![allow(dead_code)]

use hyperspec::{Complex64, HypercubeFunction};

/// `2^-n sum_x f(x) (-1)^{|m & x|}` by direct summation, O(4^n).
pub fn direct_coeffs(f: &HypercubeFunction) -> Vec<Complex64> {
    let len = f.len();
    (0..len)
        .map(|m| {
            let mut acc = Complex64::new(0.0, 0.0);
            for x in 0..len {
                let sign = if (m & x).count_ones() % 2 == 0 {
                    1.0
                } else {
                    -1.0
                };
                acc += f.get(x) * sign;
            }
            acc / len as f64
        })
        .collect()
}

pub fn direct_influence(coeffs: &[Complex64]) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| c.norm_sqr() * m.count_ones() as f64)
        .sum()
}

pub fn direct_entropy(coeffs: &[Complex64]) -> f64 {
    coeffs
        .iter()
        .map(|c| c.norm_sqr())
        .filter(|&w| w > 0.0)
        .map(|w| -w * w.log2())
        .sum()
}

pub fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}
