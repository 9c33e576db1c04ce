//! Exact factorization over ℤ by Kronecker's method.
//!
//! The input is split into its signed content, a power of `z`, linear
//! factors found from rational roots, and then factors of degree
//! `2..=deg/2` found by interpolating through divisors of the polynomial's
//! values at small integer points. Factors are always found in increasing
//! degree, so each one found is irreducible.
//!
//! This is meant for desk-scale inputs (degree ≤ 8, modest coefficients);
//! it is the ground truth the criteria are audited against.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numutil;
use crate::poly::{self, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_degree: usize,
    /// Largest allowed coefficient magnitude, in bits.
    pub max_coeff_bits: u64,
    /// Divisor tuples the Kronecker search may visit per factor search.
    pub step_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_degree: 8,
            max_coeff_bits: 40,
            step_budget: 10_000_000,
        }
    }
}

/// `content · ∏ factor^multiplicity`. The content carries the sign; every
/// factor is primitive, irreducible, with positive leading coefficient.
/// A root at the origin appears as the factor `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    pub content: BigInt,
    pub factors: Vec<(Polynomial, u32)>,
}

impl FactorizationResult {
    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> usize {
        self.factors.iter().map(|(_, e)| *e as usize).sum()
    }

    pub fn recompose(&self) -> Polynomial {
        self.factors.iter().fold(
            Polynomial::constant(self.content.clone()),
            |acc, (g, e)| &acc * &g.pow(*e),
        )
    }

    /// Smallest degree among the factors.
    pub fn min_factor_degree(&self) -> Option<usize> {
        self.factors.iter().filter_map(|(g, _)| g.degree()).min()
    }
}

impl fmt::Display for FactorizationResult {
    /// `(2z+1)(3z+1)`, `-(z-1)(z+1)`, `3z^2(z+1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.content);
        }
        if self.content == BigInt::from(-1) {
            f.write_str("-")?;
        } else if !self.content.is_one() {
            write!(f, "{}", self.content)?;
        }
        for (g, e) in &self.factors {
            let body = g.to_compact();
            if g.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                write!(f, "({body})")?;
            } else {
                f.write_str(&body)?;
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn canonical_order(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

pub fn factor(f: &Polynomial) -> Result<FactorizationResult> {
    factor_with(f, &OracleConfig::default())
}

pub fn factor_with(f: &Polynomial, config: &OracleConfig) -> Result<FactorizationResult> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m > config.max_degree {
        return Err(Error::OracleLimit(format!(
            "degree {m} exceeds limit {}",
            config.max_degree
        )));
    }
    if let Some(c) = f.coeffs().iter().find(|c| c.bits() > config.max_coeff_bits) {
        return Err(Error::OracleLimit(format!(
            "coefficient {c} exceeds {} bits",
            config.max_coeff_bits
        )));
    }
    let norm = poly::normalize(f)?;
    let mut content = norm.content;
    let mut rest = norm.primitive_part;
    if rest.leading().map_or(false, Signed::is_negative) {
        content = -content;
        rest = -rest;
    }
    let mut factors = Vec::new();
    if norm.z_power > 0 {
        factors.push((Polynomial::monomial(1), norm.z_power as u32));
    }

    for root in poly::rational_roots(&rest)? {
        let linear = Polynomial::new(vec![-root.numer().clone(), root.denom().clone()]);
        let mut e = 0;
        while let Some(q) = rest.div_exact(&linear) {
            rest = q;
            e += 1;
        }
        debug_assert!(e > 0);
        factors.push((linear, e));
    }

    let mut k = 2;
    while rest.degree().map_or(false, |d| 2 * k <= d) {
        match find_factor(&rest, k, config)? {
            Some(h) => {
                let mut e = 0;
                while let Some(q) = rest.div_exact(&h) {
                    rest = q;
                    e += 1;
                }
                factors.push((h, e));
            }
            None => k += 1,
        }
    }
    if rest.degree().map_or(false, |d| d > 0) {
        factors.push((rest, 1));
    } else {
        debug_assert!(rest.leading().map_or(false, One::is_one));
    }
    factors.sort_by(|a, b| canonical_order(&a.0, &b.0));
    Ok(FactorizationResult { content, factors })
}

/// Irreducible factors counted with multiplicity, `z` included.
pub fn count_irreducible_factors(f: &Polynomial) -> Result<usize> {
    Ok(factor(f)?.count())
}

/// True for a primitive polynomial of positive degree with no proper
/// divisor of degree `1..=deg/2`, found by a fresh exhaustive search.
pub fn is_irreducible(g: &Polynomial) -> Result<bool> {
    is_irreducible_with(g, &OracleConfig::default())
}

pub fn is_irreducible_with(g: &Polynomial, config: &OracleConfig) -> Result<bool> {
    let Some(d) = g.degree() else {
        return Ok(false);
    };
    if d == 0 || !g.is_primitive() {
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    if g.constant_term().is_zero() || !poly::rational_roots(g)?.is_empty() {
        return Ok(false);
    }
    for k in 2..=d / 2 {
        if find_factor(g, k, config)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Recomposes exactly and re-checks each factor: primitive, positive
/// leading coefficient, irreducible, canonically ordered.
pub fn verify(result: &FactorizationResult, f: &Polynomial) -> bool {
    if result.recompose() != *f {
        return false;
    }
    let ordered = result
        .factors
        .windows(2)
        .all(|w| canonical_order(&w[0].0, &w[1].0) == Ordering::Less);
    ordered
        && result.factors.iter().all(|(g, e)| {
            *e >= 1
                && g.leading().map_or(false, Signed::is_positive)
                && is_irreducible(g).unwrap_or(false)
        })
}

/// A sample point with its value and the divisors of that value.
struct Sample {
    x: i128,
    value: i128,
    divisors: Vec<i128>,
}

/// Values of `g` at `0, 1, -1, 2, -2, …` with their divisors, skipping
/// points whose value is too large to factor.
fn sample_points(g: &Polynomial, wanted: usize) -> Vec<Sample> {
    let mut out = Vec::new();
    let mut offset = 0i64;
    while out.len() < wanted && offset <= 64 {
        let xs: &[i64] = if offset == 0 { &[0] } else { &[offset, -offset] };
        for &x in xs {
            let v = g.eval_int(&BigInt::from(x));
            let Some(abs) = v.abs().to_u64() else {
                continue;
            };
            if abs == 0 || abs > (1 << 62) {
                continue;
            }
            let mut divisors = vec![1u64];
            for (p, e) in numutil::factor_u64(abs) {
                let base = divisors.len();
                let mut pk = 1u64;
                for _ in 0..e {
                    pk *= p;
                    for i in 0..base {
                        divisors.push(divisors[i] * pk);
                    }
                }
            }
            out.push(Sample {
                x: x as i128,
                value: v.to_i128().expect("fits"),
                divisors: divisors.into_iter().map(|d| d as i128).collect(),
            });
        }
        offset += 1;
    }
    out
}

struct Search<'a> {
    g: &'a Polynomial,
    lead: i128,
    nodes: Vec<Sample>,
    extra: Vec<Sample>,
    /// Divided-difference table rows, one per chosen node.
    table: Vec<Vec<i128>>,
    steps: u64,
    budget: u64,
}

/// A primitive divisor of `g` of degree exactly `k`, if one exists. `g`
/// must be primitive with no rational roots, so it never vanishes at an
/// integer.
fn find_factor(g: &Polynomial, k: usize, config: &OracleConfig) -> Result<Option<Polynomial>> {
    let Some(lead) = g.leading().and_then(|l| l.to_i128()) else {
        return Err(Error::OracleLimit("leading coefficient too large".into()));
    };
    let mut samples = sample_points(g, 2 * k + 7);
    if samples.len() < k + 1 {
        return Err(Error::OracleLimit(
            "too few factorable sample values".into(),
        ));
    }
    // Fewest divisor choices first; ties by distance from the origin.
    samples.sort_by_key(|s| (s.divisors.len(), s.x.abs()));
    let extra = samples.split_off(k + 1);
    let mut search = Search {
        g,
        lead,
        nodes: samples,
        extra,
        table: Vec::with_capacity(k + 1),
        steps: 0,
        budget: config.step_budget,
    };
    search.descend(0)
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) -> Result<Option<Polynomial>> {
        let k = self.nodes.len() - 1;
        let choices = self.nodes[depth].divisors.clone();
        for d in choices {
            // Only the positive value at the first node: h and -h are the
            // same divisor up to a unit.
            let signs: &[i128] = if depth == 0 { &[1] } else { &[1, -1] };
            for &s in signs {
                self.steps += 1;
                if self.steps > self.budget {
                    return Err(Error::OracleLimit("step budget exhausted".into()));
                }
                let Some(row) = self.difference_row(depth, s * d) else {
                    continue;
                };
                let top = row[depth];
                self.table.push(row);
                if depth < k {
                    if let Some(h) = self.descend(depth + 1)? {
                        return Ok(Some(h));
                    }
                } else if top != 0 && self.lead % top == 0 {
                    if let Some(h) = self.try_candidate()? {
                        return Ok(Some(h));
                    }
                }
                self.table.pop();
            }
        }
        Ok(None)
    }

    /// Divided differences ending at node `depth` with value `v`, or `None`
    /// if one is not an integer (no integer polynomial passes through).
    fn difference_row(&self, depth: usize, v: i128) -> Option<Vec<i128>> {
        let mut row = Vec::with_capacity(depth + 1);
        row.push(v);
        for l in 1..=depth {
            let num = row[l - 1].checked_sub(self.table[depth - 1][l - 1])?;
            let den = self.nodes[depth].x - self.nodes[depth - l].x;
            if num % den != 0 {
                return None;
            }
            row.push(num / den);
        }
        Some(row)
    }

    fn try_candidate(&self) -> Result<Option<Polynomial>> {
        let k = self.nodes.len() - 1;
        let overflow = || Error::OracleLimit("candidate coefficients overflow".into());
        // Newton form to monomial form: h = c_k, then h·(z - x_i) + c_i.
        let mut h: Vec<i128> = vec![self.table[k][k]];
        for i in (0..k).rev() {
            let xi = self.nodes[i].x;
            let mut next = vec![0i128; h.len() + 1];
            for (t, &c) in h.iter().enumerate() {
                next[t + 1] = next[t + 1].checked_add(c).ok_or_else(overflow)?;
                let prod = c.checked_mul(xi).ok_or_else(overflow)?;
                next[t] = next[t].checked_sub(prod).ok_or_else(overflow)?;
            }
            next[0] = next[0].checked_add(self.table[i][i]).ok_or_else(overflow)?;
            h = next;
        }
        let g0 = self.g.constant_term().to_i128().ok_or_else(overflow)?;
        if h[0] == 0 || g0 % h[0] != 0 {
            return Ok(None);
        }
        for s in &self.extra {
            let mut hv: i128 = 0;
            for &c in h.iter().rev() {
                hv = hv
                    .checked_mul(s.x)
                    .and_then(|t| t.checked_add(c))
                    .ok_or_else(overflow)?;
            }
            if hv == 0 || s.value % hv != 0 {
                return Ok(None);
            }
        }
        let mut cand = Polynomial::new(h.into_iter().map(BigInt::from).collect());
        if cand.leading().map_or(false, Signed::is_negative) {
            cand = -cand;
        }
        Ok(self.g.div_exact(&cand).map(|_| cand))
    }
}
