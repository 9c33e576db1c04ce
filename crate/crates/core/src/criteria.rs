//! Irreducibility and factor-count criteria with automatic witness search.
//!
//! Every criterion takes a primitive polynomial with nonzero constant term
//! (see [`crate::poly::normalize`]) and returns a [`CriterionOutcome`]
//! carrying the witnesses it found. The witnesses searched are always
//! drawn from prime divisors of specific coefficients, so every search is
//! finite.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numutil;
use crate::poly::{self, Polynomial};
use crate::rootloc::{self, CertificateMode, NumericConfig, RootMode};

/// The criteria, listed in name order. Reports keep this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    /// Prime power of `a_0` plus all roots outside `|z| <= d`.
    ConstantTerm,
    /// Large prime power in a middle coefficient.
    Cor2,
    /// A single coefficient dominating a weighted sum of the others.
    DominantCoefficient,
    /// Eisenstein with `p^k | a_i` below index `j`, `gcd(k, j) = 1`.
    EisensteinGeneralized,
    /// Prime power of `a_m` plus all roots outside `|z| <= d`.
    LeadingCoeff,
    /// Perron's dominant `a_{m-1}` condition, non-monic form.
    PerronNonmonic,
    /// Weintraub's Eisenstein generalization (smallest `k_0` with `p^2 ∤ a_{k_0}`).
    Weintraub,
}

impl Criterion {
    pub const ALL: [Criterion; 7] = [
        Criterion::ConstantTerm,
        Criterion::Cor2,
        Criterion::DominantCoefficient,
        Criterion::EisensteinGeneralized,
        Criterion::LeadingCoeff,
        Criterion::PerronNonmonic,
        Criterion::Weintraub,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::ConstantTerm => "constant_term_criterion",
            Criterion::Cor2 => "cor2_check",
            Criterion::DominantCoefficient => "dominant_coefficient",
            Criterion::EisensteinGeneralized => "eisenstein_generalized",
            Criterion::LeadingCoeff => "leading_coeff_criterion",
            Criterion::PerronNonmonic => "perron_nonmonic",
            Criterion::Weintraub => "weintraub_check",
        }
    }

    pub fn run(self, f: &Polynomial, config: &CriteriaConfig) -> Result<CriterionOutcome> {
        match self {
            Criterion::ConstantTerm => constant_term_criterion(f, config),
            Criterion::Cor2 => cor2_check(f),
            Criterion::DominantCoefficient => dominant_coefficient(f),
            Criterion::EisensteinGeneralized => eisenstein_generalized(f),
            Criterion::LeadingCoeff => leading_coeff_criterion(f, config),
            Criterion::PerronNonmonic => perron_nonmonic(f),
            Criterion::Weintraub => weintraub_check(f),
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    /// Accepts the full name or the short form without the `_check` /
    /// `_criterion` suffix.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Criterion::ALL
            .into_iter()
            .find(|c| {
                let name = c.name();
                name == s
                    || name.strip_suffix("_check") == Some(s)
                    || name.strip_suffix("_criterion") == Some(s)
            })
            .ok_or_else(|| Error::InvalidArgument(format!("unknown criterion `{s}`")))
    }
}

/// What a criterion concluded about the number or degrees of irreducible
/// factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conclusion {
    Irreducible,
    /// At most `n` irreducible factors, `1 < n <= m`.
    AtMostFactors(usize),
    /// Either irreducible, or some irreducible factor has degree at most `k`.
    FactorDegreeBound(usize),
    NoConclusion,
}

impl Conclusion {
    /// Bound on the factor count, `AtMostFactors(1)` folded into `Irreducible`.
    fn from_bound(n: usize) -> Conclusion {
        if n <= 1 {
            Conclusion::Irreducible
        } else {
            Conclusion::AtMostFactors(n)
        }
    }

    /// Factor-count bound, when the conclusion is one.
    pub fn factor_bound(&self) -> Option<usize> {
        match *self {
            Conclusion::Irreducible => Some(1),
            Conclusion::AtMostFactors(n) => Some(n),
            _ => None,
        }
    }

    /// Strength order: irreducible, then factor-count bounds ascending, then
    /// factor-degree bounds ascending, then nothing.
    pub fn rank(&self) -> (u8, usize) {
        match *self {
            Conclusion::Irreducible => (0, 1),
            Conclusion::AtMostFactors(n) => (0, n),
            Conclusion::FactorDegreeBound(k) => (1, k),
            Conclusion::NoConclusion => (2, 0),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Conclusion::Irreducible => "Irreducible",
            Conclusion::AtMostFactors(_) => "AtMostFactors",
            Conclusion::FactorDegreeBound(_) => "FactorDegreeBound",
            Conclusion::NoConclusion => "NoConclusion",
        }
    }

    pub fn bound(&self) -> Option<usize> {
        match *self {
            Conclusion::AtMostFactors(n) | Conclusion::FactorDegreeBound(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bound() {
            Some(n) => write!(f, "{}({})", self.kind(), n),
            None => f.write_str(self.kind()),
        }
    }
}

/// Whether a conclusion rests only on exact arithmetic or on a numeric
/// root-location heuristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertificateTag {
    Exact,
    NumericConditional,
}

impl CertificateTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateTag::Exact => "exact",
            CertificateTag::NumericConditional => "numeric-conditional",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WitnessValue {
    Int(BigInt),
    Rational(BigRational),
}

impl WitnessValue {
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            WitnessValue::Int(n) => Some(n),
            WitnessValue::Rational(_) => None,
        }
    }
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessValue::Int(n) => write!(f, "{n}"),
            WitnessValue::Rational(r) => write!(f, "{r}"),
        }
    }
}

impl From<BigInt> for WitnessValue {
    fn from(n: BigInt) -> Self {
        WitnessValue::Int(n)
    }
}

impl From<usize> for WitnessValue {
    fn from(n: usize) -> Self {
        WitnessValue::Int(n.into())
    }
}

impl From<u32> for WitnessValue {
    fn from(n: u32) -> Self {
        WitnessValue::Int(n.into())
    }
}

impl From<BigRational> for WitnessValue {
    fn from(r: BigRational) -> Self {
        WitnessValue::Rational(r)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionOutcome {
    pub criterion: Criterion,
    pub applicable: bool,
    pub witnesses: BTreeMap<String, WitnessValue>,
    pub conclusion: Conclusion,
    pub certificate: CertificateTag,
}

impl CriterionOutcome {
    fn none(criterion: Criterion) -> Self {
        CriterionOutcome {
            criterion,
            applicable: false,
            witnesses: BTreeMap::new(),
            conclusion: Conclusion::NoConclusion,
            certificate: CertificateTag::Exact,
        }
    }

    fn fired(
        criterion: Criterion,
        conclusion: Conclusion,
        witnesses: Vec<(&str, WitnessValue)>,
        certificate: CertificateTag,
    ) -> Self {
        CriterionOutcome {
            criterion,
            applicable: true,
            witnesses: witnesses
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            conclusion,
            certificate,
        }
    }

    pub fn witness(&self, name: &str) -> Option<&BigInt> {
        self.witnesses.get(name).and_then(WitnessValue::as_int)
    }

    /// Strength with exact certificates preferred at equal bounds.
    fn sort_key(&self) -> ((u8, usize), CertificateTag) {
        (self.conclusion.rank(), self.certificate)
    }
}

/// Keeps the stronger of two outcomes; the earlier one wins ties.
fn keep_best(best: &mut Option<CriterionOutcome>, candidate: CriterionOutcome) {
    if best
        .as_ref()
        .map_or(true, |b| candidate.sort_key() < b.sort_key())
    {
        *best = Some(candidate);
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriteriaConfig {
    /// Symbolic mode uses only the exact coefficient inequality; numeric mode
    /// tries it first and falls back to approximate root moduli.
    pub root_mode: RootMode,
    pub numeric: NumericConfig,
}

impl Default for CriteriaConfig {
    fn default() -> Self {
        CriteriaConfig {
            root_mode: RootMode::Symbolic,
            numeric: NumericConfig::default(),
        }
    }
}

/// Degree of a valid criterion input.
fn checked_degree(f: &Polynomial) -> Result<usize> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(m)
}

fn divides(d: &BigInt, n: &BigInt) -> bool {
    n.is_multiple_of(d)
}

fn has_rational_root(f: &Polynomial) -> Result<bool> {
    Ok(!poly::rational_roots(f)?.is_empty())
}

/// Weintraub: a prime `p` with `p | a_i` for all `i < m` and `p ∤ a_m`; if
/// `k_0` is the least index with `p² ∤ a_{k_0}`, every factorization has a
/// factor of degree at most `k_0`. `k_0 = 0` is Eisenstein; `k_0 = 1` with no
/// rational root is also irreducible.
pub fn weintraub_check(f: &Polynomial) -> Result<CriterionOutcome> {
    let m = checked_degree(f)?;
    let kind = Criterion::Weintraub;
    if m == 0 {
        return Ok(CriterionOutcome::none(kind));
    }
    let a = f.coeffs();
    let lead = &a[m];
    let mut best = None;
    for (p, _) in numutil::factorize(&a[0])?.factors {
        if divides(&p, lead) || !a[..m].iter().all(|c| divides(&p, c)) {
            continue;
        }
        let p2 = &p * &p;
        let Some(k0) = a[..m].iter().position(|c| !divides(&p2, c)) else {
            continue;
        };
        let conclusion = match k0 {
            0 => Conclusion::Irreducible,
            1 if !has_rational_root(f)? => Conclusion::Irreducible,
            _ => Conclusion::FactorDegreeBound(k0),
        };
        keep_best(
            &mut best,
            CriterionOutcome::fired(
                kind,
                conclusion,
                vec![("p", p.into()), ("k0", k0.into())],
                CertificateTag::Exact,
            ),
        );
    }
    Ok(best.unwrap_or_else(|| CriterionOutcome::none(kind)))
}

/// Generalized Eisenstein: a prime `p`, `k = v_p(a_0)`, and `j` coprime to
/// `k` with `p^k | a_i` for `i < j` and `p ∤ a_j`. Either some factor has
/// degree at most `m - j`, or the polynomial is irreducible; `j = m` forces
/// irreducibility, as does `j = m - 1` without rational roots.
pub fn eisenstein_generalized(f: &Polynomial) -> Result<CriterionOutcome> {
    let m = checked_degree(f)?;
    let kind = Criterion::EisensteinGeneralized;
    if m == 0 {
        return Ok(CriterionOutcome::none(kind));
    }
    let a = f.coeffs();
    let mut best = None;
    for (p, k) in numutil::factorize(&a[0])?.factors {
        let pk = p.pow(k);
        let mut found = None;
        for j in 1..=m {
            if !divides(&pk, &a[j - 1]) {
                break;
            }
            if !divides(&p, &a[j]) && (k as usize).gcd(&j) == 1 {
                found = Some(j);
            }
        }
        let Some(j) = found else { continue };
        let conclusion = if j == m {
            Conclusion::Irreducible
        } else if j + 1 == m && !has_rational_root(f)? {
            Conclusion::Irreducible
        } else {
            Conclusion::FactorDegreeBound(m - j)
        };
        keep_best(
            &mut best,
            CriterionOutcome::fired(
                kind,
                conclusion,
                vec![("p", p.into()), ("k", k.into()), ("j", j.into())],
                CertificateTag::Exact,
            ),
        );
    }
    Ok(best.unwrap_or_else(|| CriterionOutcome::none(kind)))
}

/// Root-location certificate for `|z| <= d` honoring the configured mode.
fn outside_disk(
    f: &Polynomial,
    d: &BigInt,
    config: &CriteriaConfig,
) -> Result<Option<CertificateTag>> {
    let radius = BigRational::from_integer(d.clone());
    if rootloc::symbolic_outside_disk(f, &radius)? {
        return Ok(Some(CertificateTag::Exact));
    }
    if config.root_mode == RootMode::Numeric {
        let cert = rootloc::certify_outside_disk(f, &radius, RootMode::Numeric, &config.numeric)?;
        if cert.certified {
            debug_assert_eq!(cert.mode, CertificateMode::NumericHeuristic);
            return Ok(Some(CertificateTag::NumericConditional));
        }
    }
    Ok(None)
}

/// `a_0 = ±p^k d` with `p ∤ d`, all roots outside `|z| <= d`, and `p ∤ a_j`:
/// at most `min(k, j)` irreducible factors.
pub fn constant_term_criterion(
    f: &Polynomial,
    config: &CriteriaConfig,
) -> Result<CriterionOutcome> {
    let m = checked_degree(f)?;
    let kind = Criterion::ConstantTerm;
    if m == 0 {
        return Ok(CriterionOutcome::none(kind));
    }
    let a = f.coeffs();
    let mut best = None;
    for (p, k) in numutil::factorize(&a[0])?.factors {
        // j is the smallest index with p ∤ a_j; primitivity guarantees one.
        let Some(j) = (1..=m).find(|&j| !divides(&p, &a[j])) else {
            continue;
        };
        let d = a[0].abs() / p.pow(k);
        let Some(tag) = outside_disk(f, &d, config)? else {
            continue;
        };
        let bound = (k as usize).min(j);
        keep_best(
            &mut best,
            CriterionOutcome::fired(
                kind,
                Conclusion::from_bound(bound),
                vec![
                    ("p", p.into()),
                    ("k", k.into()),
                    ("d", d.into()),
                    ("j", j.into()),
                ],
                tag,
            ),
        );
    }
    Ok(best.unwrap_or_else(|| CriterionOutcome::none(kind)))
}

/// `a_m = ±p^k d` with `p ∤ d`, all roots outside `|z| <= d`, `p ∤ a_{m-j}`,
/// and `|a_0 / q| <= |a_m|` for the least prime `q | a_0`: at most
/// `min(k, j)` irreducible factors.
pub fn leading_coeff_criterion(
    f: &Polynomial,
    config: &CriteriaConfig,
) -> Result<CriterionOutcome> {
    let m = checked_degree(f)?;
    let kind = Criterion::LeadingCoeff;
    let a = f.coeffs();
    let (a0, am) = (a[0].abs(), a[m].abs());
    if m == 0 || a0.is_one() || am.is_one() {
        return Ok(CriterionOutcome::none(kind));
    }
    let q = numutil::smallest_prime_divisor(&a0)?;
    if a0 > &q * &am {
        return Ok(CriterionOutcome::none(kind));
    }
    let mut best = None;
    for (p, k) in numutil::factorize(&am)?.factors {
        let Some(j) = (1..=m).find(|&j| !divides(&p, &a[m - j])) else {
            continue;
        };
        let d = &am / p.pow(k);
        let Some(tag) = outside_disk(f, &d, config)? else {
            continue;
        };
        let bound = (k as usize).min(j);
        keep_best(
            &mut best,
            CriterionOutcome::fired(
                kind,
                Conclusion::from_bound(bound),
                vec![
                    ("p", p.into()),
                    ("k", k.into()),
                    ("d", d.into()),
                    ("j", j.into()),
                    ("q", q.clone().into()),
                ],
                tag,
            ),
        );
    }
    Ok(best.unwrap_or_else(|| CriterionOutcome::none(kind)))
}

/// Exact test of
/// `|a_j| > Σ_{i<j} |a_i| |a_m|^{j-i} + Σ_{j<i≤m} |a_i| b^{-(i-j)}`,
/// scaled by `b^{m-j}` to stay in the integers.
pub fn dominant_inequality_holds(f: &Polynomial, j: usize, b: &BigInt) -> bool {
    let Some(m) = f.degree() else { return false };
    if j >= m || !b.is_positive() {
        return false;
    }
    let a = f.coeffs();
    let am = a[m].abs();
    let mut lower = BigInt::zero();
    let mut am_pow = BigInt::one();
    for i in (0..j).rev() {
        am_pow *= &am;
        lower += a[i].abs() * &am_pow;
    }
    let mut upper = BigInt::zero();
    let mut b_pow = BigInt::one();
    for i in (j + 1..=m).rev() {
        upper += a[i].abs() * &b_pow;
        b_pow *= b;
    }
    // b_pow is now b^(m-j)
    a[j].abs() * &b_pow > lower * &b_pow + upper
}

/// A coefficient `a_j` dominating the rest with `δ = 1/b` for a positive
/// divisor `b` of `a_m`: at most `m - j` irreducible factors. The right-hand
/// side grows with `δ`, so `δ = 1/b` is the only value worth testing.
pub fn dominant_coefficient(f: &Polynomial) -> Result<CriterionOutcome> {
    let m = checked_degree(f)?;
    let kind = Criterion::DominantCoefficient;
    if m < 2 {
        return Ok(CriterionOutcome::none(kind));
    }
    let divisors = numutil::positive_divisors(&f.coeffs()[m])?;
    for j in (0..m).rev() {
        if f.coeffs()[j].is_zero() {
            continue;
        }
        if let Some(b) = divisors.iter().find(|b| dominant_inequality_holds(f, j, b)) {
            let delta = BigRational::new(BigInt::one(), b.clone());
            return Ok(CriterionOutcome::fired(
                kind,
                Conclusion::from_bound(m - j),
                vec![("j", j.into()), ("b", b.clone().into()), ("delta", delta.into())],
                CertificateTag::Exact,
            ));
        }
    }
    Ok(CriterionOutcome::none(kind))
}

/// `|a_{m-1}| > 1 + Σ_{i≤m-2} |a_i| |a_m|^{m-1-i}`: irreducible.
pub fn perron_nonmonic(f: &Polynomial) -> Result<CriterionOutcome> {
    let m = checked_degree(f)?;
    let kind = Criterion::PerronNonmonic;
    if m < 2 {
        return Ok(CriterionOutcome::none(kind));
    }
    let a = f.coeffs();
    let am = a[m].abs();
    let mut rhs = BigInt::one();
    let mut am_pow = BigInt::one();
    for i in (0..m - 1).rev() {
        am_pow *= &am;
        rhs += a[i].abs() * &am_pow;
    }
    if a[m - 1].abs() > rhs {
        Ok(CriterionOutcome::fired(
            kind,
            Conclusion::Irreducible,
            Vec::new(),
            CertificateTag::Exact,
        ))
    } else {
        Ok(CriterionOutcome::none(kind))
    }
}

/// Exact test of the prime-power middle coefficient inequality for prime
/// `p` at index `j`, with coefficient `j` written `p^N a_j` and coefficient
/// `j-1` written `p^s a_{j-1}`:
/// `p^N |a_j| > |a_m a_{j-1}| p^{2s} + Σ_{i=2}^{j} |a_m^i c_{j-i}| p^{is}
///   + Σ_{i=j+1}^{m} |c_i| / |a_m|^{i-j}`.
/// Returns `(N, s)` when it holds.
pub fn cor2_inequality(f: &Polynomial, p: &BigInt, j: usize) -> Option<(u32, u32)> {
    let m = f.degree()?;
    if j == 0 || j >= m {
        return None;
    }
    let c = f.coeffs();
    if c[0].is_zero() || c[j - 1].is_zero() || c[j].is_zero() {
        return None;
    }
    let n = numutil::valuation(p, &c[j]);
    if n == 0 {
        return None;
    }
    let s = numutil::valuation(p, &c[j - 1]);
    let reduced_prev = c[j - 1].abs() / p.pow(s);
    let am = c[m].abs();
    let ps = p.pow(s);

    let mut lower = &am * &reduced_prev * &ps * &ps;
    let mut am_pow = am.clone();
    let mut ps_pow = ps.clone();
    for i in 2..=j {
        am_pow *= &am;
        ps_pow *= &ps;
        lower += &am_pow * c[j - i].abs() * &ps_pow;
    }
    // Upper sum over a common denominator |a_m|^(m-j).
    let mut upper = BigInt::zero();
    let mut scale = BigInt::one();
    for i in (j + 1..=m).rev() {
        upper += c[i].abs() * &scale;
        scale *= &am;
    }
    // scale is now |a_m|^(m-j)
    if c[j].abs() * &scale > lower * &scale + upper {
        Some((n, s))
    } else {
        None
    }
}

/// Prime-power middle coefficient: when [`cor2_inequality`] holds at index
/// `j`, at most `m - j` irreducible factors.
pub fn cor2_check(f: &Polynomial) -> Result<CriterionOutcome> {
    let m = checked_degree(f)?;
    let kind = Criterion::Cor2;
    if m < 2 {
        return Ok(CriterionOutcome::none(kind));
    }
    let c = f.coeffs();
    for j in (1..m).rev() {
        if c[j].is_zero() || c[j - 1].is_zero() {
            continue;
        }
        for (p, _) in numutil::factorize(&c[j])?.factors {
            if let Some((n, s)) = cor2_inequality(f, &p, j) {
                return Ok(CriterionOutcome::fired(
                    kind,
                    Conclusion::from_bound(m - j),
                    vec![
                        ("p", p.into()),
                        ("N", n.into()),
                        ("s", s.into()),
                        ("j", j.into()),
                    ],
                    CertificateTag::Exact,
                ));
            }
        }
    }
    Ok(CriterionOutcome::none(kind))
}

/// Runs the selected criteria on a primitive polynomial with nonzero
/// constant term, in [`Criterion::ALL`] order.
pub fn run_all(
    f: &Polynomial,
    criteria: &[Criterion],
    config: &CriteriaConfig,
) -> Vec<(Criterion, Result<CriterionOutcome>)> {
    let mut selected: Vec<Criterion> = criteria.to_vec();
    selected.sort();
    selected.dedup();
    selected.into_iter().map(|c| (c, c.run(f, config))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn w(o: &CriterionOutcome, name: &str) -> i64 {
        o.witness(name)
            .unwrap_or_else(|| panic!("missing witness {name}"))
            .try_into()
            .unwrap()
    }

    fn sym() -> CriteriaConfig {
        CriteriaConfig::default()
    }

    #[test]
    fn inputs_must_be_normalized() {
        assert_eq!(weintraub_check(&p(&[2, 4])), Err(Error::NotPrimitive));
        assert_eq!(eisenstein_generalized(&p(&[0, 1, 1])), Err(Error::ZeroConstantTerm));
        assert_eq!(perron_nonmonic(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn weintraub_examples() {
        let o = weintraub_check(&p(&[2, 2, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!((w(&o, "p"), w(&o, "k0")), (2, 0));

        let o = weintraub_check(&p(&[4, 2, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!(w(&o, "k0"), 1);

        let o = weintraub_check(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::NoConclusion);
        assert!(!o.applicable);
    }

    #[test]
    fn weintraub_k0_one_with_rational_root() {
        // (z + 2)(z^2 + 2) = z^3 + 2z^2 + 2z + 4: p = 2, k0 = 1, root -2
        let o = weintraub_check(&p(&[4, 2, 2, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::FactorDegreeBound(1));
    }

    #[test]
    fn eisenstein_examples() {
        let o = eisenstein_generalized(&p(&[4, 4, 0, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!((w(&o, "p"), w(&o, "k"), w(&o, "j")), (2, 2, 3));

        let o = eisenstein_generalized(&p(&[2, 2, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!((w(&o, "k"), w(&o, "j")), (1, 2));

        let o = eisenstein_generalized(&p(&[4, 2, 2, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::NoConclusion);
    }

    #[test]
    fn eisenstein_factor_degree_branch() {
        // 2 + 2z + 2z^2 + z^3 + z^4: p = 2, k = 1, j = 3 = m - 1 and no
        // rational root (candidates ±1, ±2 all miss)
        let o = eisenstein_generalized(&p(&[2, 2, 2, 1, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!(w(&o, "j"), 3);
        // 2 + 2z + z^2 + z^3 + z^4: j = 2, bound m - j = 2
        let o = eisenstein_generalized(&p(&[2, 2, 1, 1, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::FactorDegreeBound(2));
    }

    #[test]
    fn eisenstein_respects_coprimality() {
        // a_0 = 4 (k = 2), p^2 | a_1, p ∤ a_2: j = 2 shares a factor with k
        let o = eisenstein_generalized(&p(&[4, 4, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::NoConclusion);
    }

    #[test]
    fn constant_term_examples() {
        let o = constant_term_criterion(&p(&[5, 1, 1]), &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!((w(&o, "p"), w(&o, "k"), w(&o, "d"), w(&o, "j")), (5, 1, 1, 1));

        let o = constant_term_criterion(&p(&[50, 5, 1]), &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::AtMostFactors(2));
        assert_eq!((w(&o, "p"), w(&o, "k"), w(&o, "d"), w(&o, "j")), (5, 2, 2, 2));

        let o = constant_term_criterion(&p(&[75, 1, 1]), &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!((w(&o, "p"), w(&o, "k"), w(&o, "d")), (5, 2, 3));

        let o = constant_term_criterion(&p(&[1, 1, 1]), &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::NoConclusion);
    }

    #[test]
    fn constant_term_numeric_fallback() {
        // z^2 - 3z + 3 has roots of modulus √3: d = 1 symbolic 3 > 3 + 1 fails
        let f = p(&[3, -3, 1]);
        let o = constant_term_criterion(&f, &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::NoConclusion);
        let numeric = CriteriaConfig {
            root_mode: RootMode::Numeric,
            ..sym()
        };
        let o = constant_term_criterion(&f, &numeric).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!(o.certificate, CertificateTag::NumericConditional);
    }

    #[test]
    fn leading_coeff_examples() {
        let o = leading_coeff_criterion(&p(&[7, 1, 5]), &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!(
            (w(&o, "p"), w(&o, "k"), w(&o, "d"), w(&o, "j"), w(&o, "q")),
            (5, 1, 1, 1, 7)
        );

        let o = leading_coeff_criterion(&p(&[11, 1, 5]), &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);

        let o = leading_coeff_criterion(&p(&[7, 1, 1]), &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::NoConclusion);
    }

    #[test]
    fn leading_coeff_needs_small_cofactor() {
        // |a_0 / q| = 21 / 3 = 7 > |a_m| = 5
        let o = leading_coeff_criterion(&p(&[21, 1, 5]), &sym()).unwrap();
        assert_eq!(o.conclusion, Conclusion::NoConclusion);
    }

    #[test]
    fn dominant_examples() {
        let o = dominant_coefficient(&p(&[1, 3, 9, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!((w(&o, "j"), w(&o, "b")), (2, 1));

        let o = dominant_coefficient(&p(&[1, 1, 10, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);

        let o = dominant_coefficient(&p(&[10, 1, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::AtMostFactors(2));
        assert_eq!(w(&o, "j"), 0);
    }

    #[test]
    fn dominant_uses_divisors_of_leading_coefficient() {
        // 1 + 7z + 4z^2 at j = 1: b = 1 gives 7 > 4 + 4, false;
        // b = 2 gives 7 > 4 + 2, true.
        let o = dominant_coefficient(&p(&[1, 7, 4])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!(w(&o, "b"), 2);
        assert_eq!(
            o.witnesses["delta"],
            WitnessValue::Rational(BigRational::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn perron_examples() {
        assert_eq!(
            perron_nonmonic(&p(&[1, 5, 1])).unwrap().conclusion,
            Conclusion::Irreducible
        );
        assert_eq!(
            perron_nonmonic(&p(&[3, 10, 2])).unwrap().conclusion,
            Conclusion::Irreducible
        );
        assert_eq!(
            perron_nonmonic(&p(&[1, 1, 1])).unwrap().conclusion,
            Conclusion::NoConclusion
        );
        // boundary: 7 > 1 + 3·2 fails
        assert_eq!(
            perron_nonmonic(&p(&[3, 7, 2])).unwrap().conclusion,
            Conclusion::NoConclusion
        );
    }

    #[test]
    fn cor2_examples() {
        let o = cor2_check(&p(&[1, 1, 16, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!((w(&o, "p"), w(&o, "N"), w(&o, "s"), w(&o, "j")), (2, 4, 0, 2));

        let o = cor2_check(&p(&[1, 3, 5, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::NoConclusion);

        let o = cor2_check(&p(&[1, 2, 16, 1])).unwrap();
        assert_eq!(o.conclusion, Conclusion::Irreducible);
        assert_eq!((w(&o, "N"), w(&o, "s")), (4, 1));
        // RHS is 9 for every a_2 here
        assert!(cor2_inequality(&p(&[1, 2, 8, 1]), &2.into(), 2).is_none());
        assert_eq!(cor2_inequality(&p(&[1, 2, 10, 1]), &2.into(), 2), Some((1, 1)));
    }

    #[test]
    fn criterion_names_round_trip() {
        for c in Criterion::ALL {
            assert_eq!(c.name().parse::<Criterion>().unwrap(), c);
        }
        assert_eq!("weintraub".parse::<Criterion>().unwrap(), Criterion::Weintraub);
        assert!("schonemann".parse::<Criterion>().is_err());
        let mut sorted = Criterion::ALL.map(|c| c.name());
        sorted.sort();
        assert_eq!(sorted, Criterion::ALL.map(|c| c.name()));
    }

    #[test]
    fn conclusion_ordering() {
        let mut v = vec![
            Conclusion::NoConclusion,
            Conclusion::FactorDegreeBound(1),
            Conclusion::AtMostFactors(3),
            Conclusion::Irreducible,
            Conclusion::AtMostFactors(2),
        ];
        v.sort_by_key(|c| c.rank());
        assert_eq!(
            v,
            vec![
                Conclusion::Irreducible,
                Conclusion::AtMostFactors(2),
                Conclusion::AtMostFactors(3),
                Conclusion::FactorDegreeBound(1),
                Conclusion::NoConclusion,
            ]
        );
    }
}
