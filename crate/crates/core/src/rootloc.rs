//! Certificates that all complex zeros lie outside a closed disk `|z| <= d`,
//! and the factor-count bound implied by a two-sided root partition.
//!
//! Two modes exist. [`RootMode::Symbolic`] checks the exact coefficient
//! inequality `|a_0| > Σ_{i≥1} |a_i| d^i`: if it holds then
//! `|f(z)| >= |a_0| - Σ |a_i| |z|^i > 0` on the disk, so it is a proof, but
//! it can miss polynomials whose roots are in fact outside. [`RootMode::Numeric`]
//! approximates every root and compares moduli against the radius with a
//! relative margin; this decides almost every case but is not a proof.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub const DEFAULT_MARGIN: f64 = 1e-3;
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootMode {
    Symbolic,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateMode {
    SymbolicSufficient,
    NumericHeuristic,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CertificateDetail {
    /// `constant > weighted_sum` is the inequality that was tested.
    Symbolic {
        constant: BigInt,
        weighted_sum: BigRational,
    },
    Numeric { moduli: Vec<f64>, margin: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootLocationCertificate {
    pub radius: BigRational,
    pub mode: CertificateMode,
    pub certified: bool,
    pub detail: CertificateDetail,
}

/// Tuning for the numeric mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig {
    /// Relative margin: certified iff every modulus exceeds `d (1 + margin)`.
    pub margin: f64,
    /// Backward-error residual bound each approximate root must meet.
    pub tolerance: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            margin: DEFAULT_MARGIN,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

/// Exact test of `|a_0| > Σ_{i≥1} |a_i| d^i` for `d = num/den`, carried out
/// in integers after multiplying through by `den^m`.
pub fn symbolic_outside_disk(f: &Polynomial, radius: &BigRational) -> Result<bool> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    let a0 = f.constant_term();
    if a0.is_zero() {
        return Err(Error::RootAtOrigin);
    }
    if !radius.is_positive() {
        return Err(Error::InvalidRadius);
    }
    let (num, den) = (radius.numer(), radius.denom());
    let mut rhs = BigInt::zero();
    let mut num_pow = BigInt::one();
    let den_pows: Vec<BigInt> = std::iter::successors(Some(BigInt::one()), |p| Some(p * den))
        .take(m + 1)
        .collect();
    for i in 1..=m {
        num_pow *= num;
        let a = &f.coeffs()[i];
        if !a.is_zero() {
            rhs += a.abs() * &num_pow * &den_pows[m - i];
        }
    }
    Ok(a0.abs() * &den_pows[m] > rhs)
}

pub fn certify_outside_disk(
    f: &Polynomial,
    radius: &BigRational,
    mode: RootMode,
    numeric: &NumericConfig,
) -> Result<RootLocationCertificate> {
    f.degree().ok_or(Error::ZeroPolynomial)?;
    if f.constant_term().is_zero() {
        return Err(Error::RootAtOrigin);
    }
    if !radius.is_positive() {
        return Err(Error::InvalidRadius);
    }
    match mode {
        RootMode::Symbolic => {
            let certified = symbolic_outside_disk(f, radius)?;
            let weighted_sum = f
                .coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .fold(BigRational::zero(), |acc, (i, a)| {
                    acc + BigRational::from_integer(a.abs()) * radius.pow(i as i32)
                });
            Ok(RootLocationCertificate {
                radius: radius.clone(),
                mode: CertificateMode::SymbolicSufficient,
                certified,
                detail: CertificateDetail::Symbolic {
                    constant: f.constant_term().abs(),
                    weighted_sum,
                },
            })
        }
        RootMode::Numeric => {
            let roots = numeric_roots(f, numeric.tolerance)?;
            let mut moduli: Vec<f64> = roots.iter().map(|r| r.norm()).collect();
            moduli.sort_by(|a, b| a.total_cmp(b));
            let d = rational_to_f64(radius);
            let threshold = d * (1.0 + numeric.margin);
            let certified = moduli.iter().all(|&r| r > threshold);
            Ok(RootLocationCertificate {
                radius: radius.clone(),
                mode: CertificateMode::NumericHeuristic,
                certified,
                detail: CertificateDetail::Numeric {
                    moduli,
                    margin: numeric.margin,
                },
            })
        }
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

/// Counts of roots strictly inside `|z| < 1/|a_m|` and strictly outside
/// `|z| <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootPartition {
    pub inner: usize,
    pub outer: usize,
    pub degree: usize,
}

/// With `j` roots in `|z| < 1/|a_m|` and the other `m - j` in `|z| > 1`, the
/// polynomial has at most `m - j` irreducible factors: a factor whose roots
/// all sit in the small disk would have `|g(0)| < 1`.
pub fn lemma2_bound(partition: &RootPartition) -> Result<usize> {
    let RootPartition {
        inner,
        outer,
        degree,
    } = *partition;
    if inner + outer != degree || outer == 0 {
        return Err(Error::IncompletePartition {
            inner,
            outer,
            degree,
        });
    }
    Ok(outer)
}

/// Classifies numerically computed roots of `f` against the two radii of
/// [`RootPartition`]. Roots in the gap leave the partition incomplete.
pub fn partition_roots(f: &Polynomial, tolerance: f64) -> Result<RootPartition> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    let lead = f.leading().and_then(|a| a.abs().to_f64()).unwrap_or(f64::INFINITY);
    let roots = numeric_roots(f, tolerance)?;
    let inner = roots.iter().filter(|r| r.norm() < 1.0 / lead).count();
    let outer = roots.iter().filter(|r| r.norm() > 1.0).count();
    Ok(RootPartition {
        inner,
        outer,
        degree: m,
    })
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `|f(z)| / Σ |a_i| |z|^i`: relative backward error of an approximate root.
fn relative_residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let (p, _) = horner_with_derivative(coeffs, z);
    let scale = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Approximates all `m` complex roots by Aberth–Ehrlich simultaneous
/// iteration. Every returned root has relative backward error at most
/// `tolerance`; stagnating runs restart from rotated starting circles.
pub fn numeric_roots(f: &Polynomial, tolerance: f64) -> Result<Vec<Complex64>> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 {
        return Err(Error::InvalidArgument(
            "constant polynomial has no roots".into(),
        ));
    }
    // Factor out z^t so the origin is handled exactly.
    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    let coeffs: Vec<Complex64> = f.coeffs()[zeros..]
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect();
    if coeffs.iter().any(|c| !c.re.is_finite()) {
        return Err(Error::InvalidArgument(
            "coefficients exceed floating-point range".into(),
        ));
    }
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(roots);
    }
    if n == 1 {
        roots.push(-coeffs[0] / coeffs[1]);
        return Ok(roots);
    }

    // Starting radius: geometric mean of the root moduli.
    let radius = (coeffs[0].norm() / coeffs[n].norm()).powf(1.0 / n as f64);
    let mut best: Option<(f64, Vec<Complex64>)> = None;
    for attempt in 0..8 {
        let offset = 0.4 + 0.7 * attempt as f64;
        let scale = radius * (1.0 + 0.1 * attempt as f64);
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| Complex64::from_polar(scale, offset + std::f64::consts::TAU * k as f64 / n as f64))
            .collect();
        for _ in 0..1000 {
            let mut moved = 0.0f64;
            for k in 0..n {
                let (p, dp) = horner_with_derivative(&coeffs, z[k]);
                if p.norm() == 0.0 {
                    continue;
                }
                let ratio = p / dp;
                let repulsion: Complex64 = (0..n)
                    .filter(|&l| l != k)
                    .map(|l| (z[k] - z[l]).inv())
                    .sum();
                let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
                if step.re.is_finite() && step.im.is_finite() {
                    z[k] -= step;
                    moved = moved.max(step.norm() / z[k].norm().max(1e-300));
                }
            }
            if moved < 1e-15 {
                break;
            }
        }
        let worst = z
            .iter()
            .map(|&r| relative_residual(&coeffs, r))
            .fold(0.0, f64::max);
        if worst <= tolerance {
            roots.extend(z);
            return Ok(roots);
        }
        if best.as_ref().map_or(true, |(b, _)| worst < *b) {
            best = Some((worst, z));
        }
    }
    Err(Error::NonConvergence {
        best_residual: best.map_or(f64::INFINITY, |(b, _)| b),
    })
}

/// `|a_0| / |a_m|` as a float, the modulus product every root set must match.
pub fn root_modulus_product(f: &Polynomial) -> Option<f64> {
    let a0 = f.constant_term().abs();
    let am = f.leading()?.abs();
    let g = a0.gcd(&am);
    Some((a0 / &g).to_f64()? / (am / g).to_f64()?)
}
