//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored lowest degree first, so `coeffs()[i]` is the
//! coefficient of `z^i`. The zero polynomial is the empty sequence and the
//! last stored coefficient of any other polynomial is nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numutil;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients, lowest degree first. Trailing
    /// zeros are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `z^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_primitive(&self) -> bool {
        content(self).map_or(false, |c| c.is_one())
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `q^m f(p/q)` for `m = deg f`: an integer that vanishes exactly when
    /// `p/q` is a root.
    pub fn eval_homogeneous(&self, p: &BigInt, q: &BigInt) -> BigInt {
        let Some(m) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = self.coeffs[m].clone();
        let mut qpow = BigInt::one();
        for c in self.coeffs[..m].iter().rev() {
            qpow *= q;
            acc = acc * p + c * &qpow;
        }
        acc
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn scalar_div_exact(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// `f(-z)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Polynomial::constant(BigInt::one()), |acc, _| &acc * self)
    }

    /// Integer long division. The quotient stays in ℤ[z] only while the
    /// divisor's leading coefficient divides each partial remainder's
    /// leading coefficient; `exact` is set when that held throughout and
    /// the final remainder is zero.
    pub fn divmod_exact(&self, divisor: &Polynomial) -> Result<IntDivision> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(IntDivision {
                quotient: Polynomial::zero(),
                remainder: Polynomial::zero(),
                exact: true,
            });
        };
        if nd < dd {
            return Ok(IntDivision {
                quotient: Polynomial::zero(),
                exact: false,
                remainder: self.clone(),
            });
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Ok(IntDivision {
                    quotient: Polynomial::new(quot),
                    remainder: Polynomial::new(rem),
                    exact: false,
                });
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
            quot[shift] = q;
        }
        let remainder = Polynomial::new(rem);
        Ok(IntDivision {
            exact: remainder.is_zero(),
            quotient: Polynomial::new(quot),
            remainder,
        })
    }

    /// Quotient when `divisor` divides `self` in ℤ[z].
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        match self.divmod_exact(divisor) {
            Ok(d) if d.exact => Some(d.quotient),
            _ => None,
        }
    }

    /// Comma-separated coefficient list, lowest degree first (`4,4,0,1`).
    pub fn to_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Sparse form without spaces (`2z+1`).
    pub fn to_compact(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else if spaced {
                out.push_str(if negative { " - " } else { " + " });
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push('z'),
                _ => {
                    out.push_str("z^");
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Canonical sparse form, highest degree first (`z^3 + 4z + 4`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

/// Result of [`Polynomial::divmod_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntDivision {
    pub quotient: Polynomial,
    pub remainder: Polynomial,
    pub exact: bool,
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// A nonzero input split as `content · z^z_power · primitive_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedInput {
    pub original: Polynomial,
    pub content: BigInt,
    pub z_power: usize,
    pub primitive_part: Polynomial,
}

/// Positive gcd of the coefficients.
pub fn content(f: &Polynomial) -> Result<BigInt> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = BigInt::zero();
    for c in f.coeffs() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

pub fn normalize(f: &Polynomial) -> Result<NormalizedInput> {
    let c = content(f)?;
    let z_power = f
        .coeffs()
        .iter()
        .position(|a| !a.is_zero())
        .expect("nonzero polynomial has a nonzero coefficient");
    let primitive_part = Polynomial::new(f.coeffs()[z_power..].iter().map(|a| a / &c).collect());
    Ok(NormalizedInput {
        original: f.clone(),
        content: c,
        z_power,
        primitive_part,
    })
}

/// Exact value of `f` at a rational point (Horner).
pub fn evaluate(f: &Polynomial, x: &BigRational) -> BigRational {
    f.coeffs()
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
}

/// `b^(m-1) f(z/b)`: coefficient `i` becomes `a_i b^(m-1-i)`, and the leading
/// coefficient becomes `a_m / b`. Requires `b` to be a positive divisor of
/// the leading coefficient.
pub fn scale_transform(f: &Polynomial, b: &BigInt) -> Result<Polynomial> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    let lead = &f.coeffs()[m];
    if !b.is_positive() || !lead.is_multiple_of(b) {
        return Err(Error::InvalidDivisor {
            divisor: b.to_string(),
        });
    }
    if m == 0 {
        return Ok(Polynomial::constant(lead / b));
    }
    let mut out = Vec::with_capacity(m + 1);
    let mut power = BigInt::one();
    // Walk downward so the power of b grows with the distance from m-1.
    let mut rev = Vec::with_capacity(m);
    for a in f.coeffs()[..m].iter().rev() {
        rev.push(a * &power);
        power *= b;
    }
    out.extend(rev.into_iter().rev());
    out.push(lead / b);
    Ok(Polynomial::new(out))
}

/// All rational roots, each reduced with a positive denominator, sorted.
pub fn rational_roots(f: &Polynomial) -> Result<Vec<BigRational>> {
    let norm = normalize(f)?;
    let g = &norm.primitive_part;
    let mut roots = Vec::new();
    if norm.z_power > 0 {
        roots.push(BigRational::zero());
    }
    if g.degree() == Some(0) {
        return Ok(roots);
    }
    let nums = numutil::positive_divisors(&g.constant_term())?;
    let dens = numutil::positive_divisors(g.leading().expect("nonzero"))?;
    for q in &dens {
        for p in &nums {
            if !p.gcd(q).is_one() {
                continue;
            }
            for p in [p.clone(), -p] {
                if g.eval_homogeneous(&p, q).is_zero() {
                    roots.push(BigRational::new(p, q.clone()));
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(&p(&[4, 0, 2])).unwrap(), 2.into());
        assert_eq!(content(&p(&[4, 4, 0, 1])).unwrap(), 1.into());
        assert_eq!(content(&p(&[6, 10, 2])).unwrap(), 2.into());
        assert_eq!(content(&p(&[-6, -9])).unwrap(), 3.into());
        assert_eq!(content(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn normalize_examples() {
        let n = normalize(&p(&[0, 8, 4])).unwrap();
        assert_eq!(n.content, 4.into());
        assert_eq!(n.z_power, 1);
        assert_eq!(n.primitive_part, p(&[2, 1]));

        let f = p(&[4, 4, 0, 1]);
        let n = normalize(&f).unwrap();
        assert_eq!((n.content, n.z_power), (1.into(), 0));
        assert_eq!(n.primitive_part, f);

        let f = p(&[50, 5, 1]);
        assert_eq!(normalize(&f).unwrap().primitive_part, f);
        assert!(normalize(&Polynomial::zero()).is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(&p(&[4, 2, 2, 1]), &rat(-2, 1)), rat(0, 1));
        assert_eq!(evaluate(&p(&[7, 3, 1]), &rat(0, 1)), rat(7, 1));
        assert_eq!(evaluate(&p(&[2, 2, 1]), &rat(1, 1)), rat(5, 1));
        assert_eq!(evaluate(&p(&[1, 2]), &rat(1, 3)), rat(5, 3));
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[1, 2]) * &p(&[1, 3]), p(&[1, 5, 6]));
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        assert!((&p(&[1, 1]) - &p(&[1, 1])).is_zero());
        let d = p(&[-1, 0, 1]).divmod_exact(&p(&[-1, 1])).unwrap();
        assert!(d.exact);
        assert_eq!(d.quotient, p(&[1, 1]));
    }

    #[test]
    fn divmod_reports_non_divisibility() {
        // 2z + 1 does not divide z^2 + 1 in ℤ[z]
        let d = p(&[1, 0, 1]).divmod_exact(&p(&[1, 2])).unwrap();
        assert!(!d.exact);
        // z + 1 into z^2 + 2: remainder 3
        let d = p(&[2, 0, 1]).divmod_exact(&p(&[1, 1])).unwrap();
        assert!(!d.exact);
        assert_eq!(d.remainder, p(&[3]));
        assert_eq!(
            p(&[1]).divmod_exact(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn scale_transform_examples() {
        assert_eq!(
            scale_transform(&p(&[3, 10, 2]), &2.into()).unwrap(),
            p(&[6, 10, 1])
        );
        let f = p(&[5, -3, 7, 4]);
        assert_eq!(scale_transform(&f, &1.into()).unwrap(), f);
        assert_eq!(
            scale_transform(&p(&[1, 1, 4]), &2.into()).unwrap(),
            p(&[2, 1, 2])
        );
        assert!(matches!(
            scale_transform(&p(&[1, 1, 4]), &3.into()),
            Err(Error::InvalidDivisor { .. })
        ));
        assert!(scale_transform(&p(&[1, 1, 4]), &0.into()).is_err());
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_roots(&p(&[4, 2, 2, 1])).unwrap(), vec![rat(-2, 1)]);
        assert!(rational_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(
            rational_roots(&p(&[1, 5, 6])).unwrap(),
            vec![rat(-1, 2), rat(-1, 3)]
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[4, 4, 0, 1]).to_string(), "z^3 + 4z + 4");
        assert_eq!(p(&[1, 0, -1]).to_string(), "-z^2 + 1");
        assert_eq!(p(&[1, 2]).to_compact(), "2z+1");
        assert_eq!(p(&[0, 1]).to_compact(), "z");
        assert_eq!(p(&[4, 4, 0, 1]).to_list(), "4,4,0,1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
