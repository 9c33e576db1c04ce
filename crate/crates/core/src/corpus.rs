//! Example polynomial families and audit corpora.
//!
//! The four families are constructions whose factorization behavior follows
//! from one criterion each:
//!
//! * `P1 = p^{m-1}(1 + z + … + z^{n-1}) ± z^m` (generalized Eisenstein, `j = m`);
//! * `P2 = ±p^k d + a_1 z + … + a_m z^m` with `p^k > m·max|a_i| d^{i-1}`
//!   (constant-term criterion);
//! * `P3 = a_0 + a_1 z + … ± p^k d z^m` with
//!   `|a_0| > m·max(|a_i| d^i, p^k d^{m+1})` (leading-coefficient criterion);
//! * `P4 = 1 ± a z ± … ± a^{j-1} z^{j-1} ± (a^j - b^j + 1) z^j ± b z^m`
//!   with `b < a - b` (dominant coefficient).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::criteria;
use crate::error::{Error, Result};
use crate::numutil;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    P1,
    P2,
    P3,
    P4,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "P1" => Ok(Family::P1),
            "P2" => Ok(Family::P2),
            "P3" => Ok(Family::P3),
            "P4" => Ok(Family::P4),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `+1` or `-1`, as used for the `±` choices in the families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, n: BigInt) -> BigInt {
        match self {
            Sign::Plus => n,
            Sign::Minus => -n,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "1" | "+1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            other => Err(Error::InvalidArgument(format!("invalid sign `{other}`"))),
        }
    }
}

/// Parameters of one family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    P1 {
        p: u64,
        m: usize,
        n: usize,
        sign: Sign,
    },
    /// `coeffs` holds `a_1, …, a_m`.
    P2 {
        p: u64,
        k: u32,
        d: u64,
        sign: Sign,
        coeffs: Vec<i64>,
    },
    /// `coeffs` holds `a_1, …, a_{m-1}`; the degree is `coeffs.len() + 1`.
    P3 {
        p: u64,
        k: u32,
        d: u64,
        sign: Sign,
        a0: i64,
        coeffs: Vec<i64>,
    },
    /// `signs` has `j + 1` entries: coefficients `1..=j`, then `z^m`.
    P4 {
        a: u64,
        b: u64,
        m: usize,
        j: usize,
        signs: Vec<Sign>,
    },
}

impl FamilySpec {
    pub fn family(&self) -> Family {
        match self {
            FamilySpec::P1 { .. } => Family::P1,
            FamilySpec::P2 { .. } => Family::P2,
            FamilySpec::P3 { .. } => Family::P3,
            FamilySpec::P4 { .. } => Family::P4,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && numutil::is_prime_u64(p)
}

fn violated(what: impl Into<String>) -> Error {
    Error::SideCondition(what.into())
}

pub fn gen_family(spec: &FamilySpec) -> Result<Polynomial> {
    match spec {
        FamilySpec::P1 { p, m, n, sign } => {
            if !is_prime(*p) {
                return Err(violated(format!("P1: p = {p} is not prime")));
            }
            if !(*m >= *n && *n >= 2) {
                return Err(violated(format!("P1: need m >= n >= 2, got m = {m}, n = {n}")));
            }
            let pk = BigInt::from(*p).pow(*m as u32 - 1);
            let mut c = vec![BigInt::zero(); m + 1];
            for slot in c.iter_mut().take(*n) {
                *slot = pk.clone();
            }
            c[*m] += sign.apply(BigInt::one());
            Ok(Polynomial::new(c))
        }
        FamilySpec::P2 {
            p,
            k,
            d,
            sign,
            coeffs,
        } => {
            let m = coeffs.len();
            if !is_prime(*p) {
                return Err(violated(format!("P2: p = {p} is not prime")));
            }
            if *k < 1 || *d < 1 || d % p == 0 {
                return Err(violated("P2: need k >= 1, d >= 1 and p ∤ d"));
            }
            if m < 2 || coeffs[m - 1] == 0 {
                return Err(violated("P2: need m >= 2 and a_m != 0"));
            }
            let d_big = BigInt::from(*d);
            let max = coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| BigInt::from(a.abs()) * d_big.pow(i as u32))
                .max()
                .expect("m >= 2");
            let pk = BigInt::from(*p).pow(*k);
            if pk <= BigInt::from(m) * max {
                return Err(violated("P2: need p^k > m·max{|a_1|, |a_2| d, …, |a_m| d^{m-1}}"));
            }
            let mut c = vec![sign.apply(pk * &d_big)];
            c.extend(coeffs.iter().map(|&a| BigInt::from(a)));
            Ok(Polynomial::new(c))
        }
        FamilySpec::P3 {
            p,
            k,
            d,
            sign,
            a0,
            coeffs,
        } => {
            let m = coeffs.len() + 1;
            if !is_prime(*p) {
                return Err(violated(format!("P3: p = {p} is not prime")));
            }
            if *k < 1 || *d < 1 || d % p == 0 {
                return Err(violated("P3: need k >= 1, d >= 1 and p ∤ d"));
            }
            let d_big = BigInt::from(*d);
            let lead = BigInt::from(*p).pow(*k) * &d_big;
            let max = coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| BigInt::from(a.abs()) * d_big.pow(i as u32 + 1))
                .chain(std::iter::once(&lead * d_big.pow(m as u32)))
                .max()
                .expect("nonempty");
            let a0_big = BigInt::from(*a0);
            if a0_big.abs() <= BigInt::from(m) * max {
                return Err(violated(
                    "P3: need |a_0| > m·max{|a_1| d, …, |a_{m-1}| d^{m-1}, p^k d^{m+1}}",
                ));
            }
            let q = numutil::smallest_prime_divisor(&a0_big)?;
            if a0_big.abs() > &q * &lead {
                return Err(violated("P3: need |a_0 / q| <= p^k d for the least prime q | a_0"));
            }
            let mut c = vec![a0_big];
            c.extend(coeffs.iter().map(|&a| BigInt::from(a)));
            c.push(sign.apply(lead));
            Ok(Polynomial::new(c))
        }
        FamilySpec::P4 { a, b, m, j, signs } => {
            if *m < 3 || *j < 1 || *j >= *m {
                return Err(violated("P4: need m >= 3 and 1 <= j <= m - 1"));
            }
            if *b < 1 || *a <= 2 * b {
                return Err(violated("P4: need positive a, b with b < a - b"));
            }
            if signs.len() != j + 1 {
                return Err(violated(format!("P4: expected {} signs", j + 1)));
            }
            let (a_big, b_big) = (BigInt::from(*a), BigInt::from(*b));
            let mut c = vec![BigInt::zero(); m + 1];
            c[0] = BigInt::one();
            for i in 1..*j {
                c[i] = signs[i - 1].apply(a_big.pow(i as u32));
            }
            let dominant = a_big.pow(*j as u32) - b_big.pow(*j as u32) + 1;
            c[*j] = signs[j - 1].apply(dominant);
            c[*m] = signs[*j].apply(b_big.clone());
            let f = Polynomial::new(c);
            if !criteria::dominant_inequality_holds(&f, *j, &b_big) {
                return Err(violated("P4: dominant-coefficient inequality fails at δ = 1/b"));
            }
            Ok(f)
        }
    }
}

/// Both readings of the P4 inequality: the closed form
/// `a^j - b^j + 1 > b (a^j - b^j)/(a - b) + b^{-(m-1-j)}`, which sums the
/// lower terms over `0 <= i < j`, and the variant that stops at `i < j - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P4Readings {
    pub closed_form: bool,
    pub full_sum: bool,
    pub truncated_sum: bool,
}

impl P4Readings {
    /// The two index ranges disagree for this instance.
    pub fn differ(&self) -> bool {
        self.full_sum != self.truncated_sum
    }
}

pub fn p4_readings(a: u64, b: u64, m: usize, j: usize) -> P4Readings {
    let (ar, br) = (BigRational::from_integer(a.into()), BigRational::from_integer(b.into()));
    let aj = ar.pow(j as i32);
    let bj = br.pow(j as i32);
    let lhs = &aj - &bj + BigRational::one();
    let tail = br.pow(-((m - 1 - j) as i32));
    let closed = &br * (&aj - &bj) / (&ar - &br) + &tail;
    let lower = |upto: usize| -> BigRational {
        (0..upto).fold(BigRational::zero(), |acc, i| {
            acc + ar.pow(i as i32) * br.pow((j - i) as i32)
        })
    };
    P4Readings {
        closed_form: lhs > closed,
        full_sum: lhs > lower(j) + &tail,
        truncated_sum: lhs > lower(j.saturating_sub(1)) + &tail,
    }
}

/// All primitive polynomials of degree `1..=max_degree` with coefficients in
/// `[-bound, bound]` and `a_0 a_m != 0`, one per `±f` pair (the member with
/// positive leading coefficient). Ordered by degree, then odometer order on
/// the coefficients `a_0, …, a_m` with `a_0` varying fastest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustiveCorpus {
    pub max_degree: usize,
    pub bound: i64,
}

impl ExhaustiveCorpus {
    pub fn new(max_degree: usize, bound: i64) -> Result<Self> {
        if max_degree < 1 || bound < 1 {
            return Err(Error::InvalidArgument(
                "exhaustive corpus needs max degree >= 1 and coefficient bound >= 1".into(),
            ));
        }
        Ok(ExhaustiveCorpus { max_degree, bound })
    }

    /// Size of the raw index space before filtering.
    fn count_for_degree(&self, m: usize) -> u64 {
        let b = self.bound as u64;
        // a_0 nonzero, a_m positive, middle free
        2 * b * b * (2 * b + 1).pow(m as u32 - 1)
    }

    pub fn raw_len(&self) -> u64 {
        (1..=self.max_degree).map(|m| self.count_for_degree(m)).sum()
    }

    /// The polynomial at a raw index, or `None` if it is filtered out
    /// (non-primitive) or the index is out of range.
    pub fn get(&self, mut index: u64) -> Option<Polynomial> {
        let b = self.bound;
        for m in 1..=self.max_degree {
            let size = self.count_for_degree(m);
            if index >= size {
                index -= size;
                continue;
            }
            let nonzero = |r: u64| -> i64 {
                // 0..2b maps to -b..-1, 1..b
                let v = r as i64 - b;
                if v >= 0 {
                    v + 1
                } else {
                    v
                }
            };
            let width = 2 * b as u64;
            let a0 = nonzero(index % width);
            index /= width;
            let mut c = Vec::with_capacity(m + 1);
            c.push(a0);
            for _ in 1..m {
                let span = (2 * b + 1) as u64;
                c.push((index % span) as i64 - b);
                index /= span;
            }
            c.push(index as i64 + 1);
            let g = c.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g != 1 {
                return None;
            }
            return Some(Polynomial::from_i64s(&c));
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = Polynomial> + '_ {
        (0..self.raw_len()).filter_map(move |i| self.get(i))
    }
}

pub fn gen_exhaustive(max_degree: usize, bound: i64) -> Result<impl Iterator<Item = Polynomial>> {
    let corpus = ExhaustiveCorpus::new(max_degree, bound)?;
    Ok((0..corpus.raw_len()).filter_map(move |i| corpus.get(i)))
}

/// Reproducible primitive polynomials with `a_0 a_m != 0`, degree uniform in
/// `1..=max_degree`, coefficients uniform in `[-bound, bound]`.
pub fn gen_random(count: usize, max_degree: usize, bound: i64, seed: u64) -> Result<Vec<Polynomial>> {
    if count < 1 || max_degree < 1 || bound < 1 {
        return Err(Error::InvalidArgument(
            "random corpus needs count, max degree and bound >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = rng.gen_range(1..=max_degree);
        let mut c: Vec<i64> = (0..=m).map(|_| rng.gen_range(-bound..=bound)).collect();
        if c[0] == 0 || c[m] == 0 {
            continue;
        }
        let g = c.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g != 1 {
            // rescaling keeps the draw instead of rejecting it
            c.iter_mut().for_each(|x| *x /= g);
        }
        out.push(Polynomial::from_i64s(&c));
    }
    Ok(out)
}

/// Standard P1 grid: `p ∈ {2,3,5}`, `2 <= n <= m <= 6`, both signs.
pub fn p1_grid() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for p in [2, 3, 5] {
        for m in 2..=6 {
            for n in 2..=m {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.push(FamilySpec::P1 { p, m, n, sign });
                }
            }
        }
    }
    out
}

/// P2 grid for a given `k`: `p ∈ {3,5,7}`, `d ∈ {1,2}`, `m ∈ {2,3,4}`, both
/// signs, every coefficient vector `a_1..a_m` drawn from `choices` that
/// satisfies the side conditions.
pub fn p2_grid(k: u32, choices: &[i64]) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for p in [3u64, 5, 7] {
        for d in [1u64, 2] {
            for m in 2..=4usize {
                for_each_vector(choices, m, &mut |coeffs| {
                    for sign in [Sign::Plus, Sign::Minus] {
                        let spec = FamilySpec::P2 {
                            p,
                            k,
                            d,
                            sign,
                            coeffs: coeffs.to_vec(),
                        };
                        if gen_family(&spec).is_ok() {
                            out.push(spec);
                        }
                    }
                });
            }
        }
    }
    out
}

/// P3 grid: `p ∈ {2,3,5}`, `k ∈ {1,2}`, `d ∈ {1,2}`, `m ∈ {2,3}`, middle
/// coefficients from `{-1,0,1}`, and `a_0` the smallest primes above the
/// side-condition threshold.
pub fn p3_grid() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        for k in 1..=2u32 {
            for d in [1u64, 2] {
                for m in 2..=3usize {
                    for_each_vector(&[-1, 0, 1], m - 1, &mut |coeffs| {
                        for sign in [Sign::Plus, Sign::Minus] {
                            let mut a0 = 2i64;
                            let mut taken = 0;
                            while taken < 2 && a0 < 100_000 {
                                for a0s in [a0, -a0] {
                                    let spec = FamilySpec::P3 {
                                        p,
                                        k,
                                        d,
                                        sign,
                                        a0: a0s,
                                        coeffs: coeffs.to_vec(),
                                    };
                                    if gen_family(&spec).is_ok() {
                                        out.push(spec);
                                        taken += 1;
                                    }
                                }
                                a0 += 1;
                            }
                        }
                    });
                }
            }
        }
    }
    out
}

/// P4 grid: `a ∈ {3,4,5}`, `b ∈ {1, a-2}` with `b < a - b`, `m ∈ {3,4,5}`,
/// `1 <= j <= m - 1`, with all-plus signs plus two mixed sign patterns.
pub fn p4_grid() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for a in [3u64, 4, 5] {
        let mut bs = vec![1, a - 2];
        bs.dedup();
        for b in bs {
            if b >= a - b {
                continue;
            }
            for m in 3..=5usize {
                for j in 1..m {
                    let patterns = [
                        vec![Sign::Plus; j + 1],
                        (0..=j)
                            .map(|i| if i % 2 == 0 { Sign::Minus } else { Sign::Plus })
                            .collect(),
                        vec![Sign::Minus; j + 1],
                    ];
                    for signs in patterns {
                        out.push(FamilySpec::P4 { a, b, m, j, signs });
                    }
                }
            }
        }
    }
    out
}

fn for_each_vector(choices: &[i64], len: usize, f: &mut dyn FnMut(&[i64])) {
    fn rec(choices: &[i64], buf: &mut Vec<i64>, len: usize, f: &mut dyn FnMut(&[i64])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        for &c in choices {
            buf.push(c);
            rec(choices, buf, len, f);
            buf.pop();
        }
    }
    rec(choices, &mut Vec::with_capacity(len), len, f);
}
