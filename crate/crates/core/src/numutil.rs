//! Integer factorization, valuations and divisor enumeration.
//!
//! Trial division by sieved primes below 10⁶, then Miller–Rabin and Brent's
//! variant of Pollard rho for a cofactor that fits in 64 bits. Larger
//! cofactors are reported as [`Error::FactorizationLimit`].

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// `n = sign · ∏ prime^exponent`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerDecomposition {
    pub n: BigInt,
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
}

impl PrimePowerDecomposition {
    pub fn primes(&self) -> impl Iterator<Item = &BigInt> + '_ {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn recompose(&self) -> BigInt {
        let mag = self
            .factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e));
        if self.sign < 0 {
            -mag
        } else {
            mag
        }
    }

    pub fn divisor_count(&self) -> usize {
        self.factors.iter().map(|(_, e)| *e as usize + 1).product()
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

pub fn factorize(n: &BigInt) -> Result<PrimePowerDecomposition> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factorize zero".into()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut factors = Vec::new();
    let mut rest = n.abs();

    if let Some(small) = rest.to_u64() {
        for (p, e) in factor_u64(small) {
            factors.push((BigInt::from(p), e));
        }
        return Ok(PrimePowerDecomposition {
            n: n.clone(),
            sign,
            factors,
        });
    }

    for &p in small_primes() {
        let pb = BigInt::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
        if let Some(small) = rest.to_u64() {
            for (q, e) in factor_u64(small) {
                factors.push((BigInt::from(q), e));
            }
            rest = BigInt::one();
            break;
        }
    }
    if !rest.is_one() {
        return Err(Error::FactorizationLimit(n.to_string()));
    }
    factors.sort();
    Ok(PrimePowerDecomposition {
        n: n.clone(),
        sign,
        factors,
    })
}

/// Exponent of `p` in `n`. Zero when `n` is zero or `p < 2`.
pub fn valuation(p: &BigInt, n: &BigInt) -> u32 {
    if n.is_zero() || *p <= BigInt::one() {
        return 0;
    }
    let mut e = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return e;
        }
        rest = q;
        e += 1;
    }
}

pub fn smallest_prime_divisor(n: &BigInt) -> Result<BigInt> {
    if n.abs() <= BigInt::one() {
        return Err(Error::NoPrimeDivisor(n.to_string()));
    }
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if (n % &pb).is_zero() {
            return Ok(pb);
        }
        if pb.pow(2) > n.abs() {
            return Ok(n.abs());
        }
    }
    let d = factorize(n)?;
    Ok(d.factors[0].0.clone())
}

/// Positive divisors of `|n|`, ascending.
pub fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let d = factorize(n)?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in &d.factors {
        let base = divs.len();
        let mut pk = BigInt::one();
        for _ in 0..*e {
            pk *= p;
            for i in 0..base {
                divs.push(&divs[i] * &pk);
            }
        }
    }
    divs.sort();
    Ok(divs)
}

/// Factorization of a machine-sized positive integer, primes ascending.
pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    for &p in small_primes() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if n > 1 {
        if n < TRIAL_LIMIT * TRIAL_LIMIT || is_prime_u64(n) {
            out.push((n, 1));
        } else {
            let mut stack = vec![n];
            let mut big = Vec::new();
            while let Some(m) = stack.pop() {
                if is_prime_u64(m) {
                    big.push(m);
                } else {
                    let d = pollard_brent(m);
                    stack.push(d);
                    stack.push(m / d);
                }
            }
            big.sort_unstable();
            for p in big {
                match out.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => out.push((p, 1)),
                }
            }
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1..u64::MAX {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g, mut q, mut r) = (2u64, 2u64, 1u64, 1u64, 1u64);
        let mut ys = y;
        const BLOCK: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BLOCK.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BLOCK;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("pollard rho exhausted its constants")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factorize_examples() {
        let d = factorize(&b(50)).unwrap();
        assert_eq!(d.sign, 1);
        assert_eq!(d.factors, vec![(b(2), 1), (b(5), 2)]);
        let d = factorize(&b(-12)).unwrap();
        assert_eq!(d.sign, -1);
        assert_eq!(d.factors, vec![(b(2), 2), (b(3), 1)]);
        assert_eq!(factorize(&b(75)).unwrap().factors, vec![(b(3), 1), (b(5), 2)]);
        assert!(factorize(&b(1)).unwrap().factors.is_empty());
        assert!(factorize(&b(0)).is_err());
    }

    #[test]
    fn factorize_large_semiprimes() {
        // 1000003 * 1000033, both beyond the trial-division range
        let n = 1_000_003u64 * 1_000_033;
        assert_eq!(factor_u64(n), vec![(1_000_003, 1), (1_000_033, 1)]);
        let big = BigInt::from(4_294_967_291u64) * BigInt::from(4_294_967_279u64);
        let d = factorize(&big).unwrap();
        assert_eq!(d.recompose(), big);
        assert_eq!(d.factors.len(), 2);
        // 2^64 itself sits on the bound
        let two64 = BigInt::one() << 64;
        assert_eq!(factorize(&two64).unwrap().factors, vec![(b(2), 64)]);
    }

    #[test]
    fn factorize_beyond_limit() {
        // product of two ~2^61 primes
        let p = BigInt::from(2305843009213693951u64); // 2^61 - 1
        let n = &p * &p;
        assert!(matches!(factorize(&n), Err(Error::FactorizationLimit(_))));
        // smooth numbers above the bound still factor
        let smooth = BigInt::from(3).pow(90);
        assert_eq!(factorize(&smooth).unwrap().factors, vec![(b(3), 90)]);
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&b(2), &b(4)), 2);
        assert_eq!(valuation(&b(5), &b(50)), 2);
        assert_eq!(valuation(&b(3), &b(5)), 0);
        assert_eq!(valuation(&b(2), &b(-48)), 4);
    }

    #[test]
    fn smallest_prime_divisor_examples() {
        assert_eq!(smallest_prime_divisor(&b(50)).unwrap(), b(2));
        assert_eq!(smallest_prime_divisor(&b(7)).unwrap(), b(7));
        assert_eq!(smallest_prime_divisor(&b(-15)).unwrap(), b(3));
        assert!(matches!(
            smallest_prime_divisor(&b(1)),
            Err(Error::NoPrimeDivisor(_))
        ));
        assert!(smallest_prime_divisor(&b(-1)).is_err());
        assert!(smallest_prime_divisor(&b(0)).is_err());
    }

    #[test]
    fn divisor_examples() {
        let v: Vec<i64> = positive_divisors(&b(12))
            .unwrap()
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect();
        assert_eq!(v, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(positive_divisors(&b(1)).unwrap(), vec![b(1)]);
        assert_eq!(positive_divisors(&b(-5)).unwrap(), vec![b(1), b(5)]);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(18446744073709551557)); // largest 64-bit prime
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to bases 2,3,5,7
        assert!(!is_prime_u64(1));
    }
}
