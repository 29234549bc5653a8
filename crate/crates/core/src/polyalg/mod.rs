//! Exact univariate polynomial algebra over arbitrary-precision integers,
//! plus multiprecision complex evaluation with certified rounding bounds.
//!
//! Polynomials are stored densely in the failure probability `q`, ascending
//! degree, with no trailing zero coefficients; the zero polynomial is the
//! empty sequence, so equality is plain coefficient-sequence equality.

mod dyadic;

pub use dyadic::{ComplexDyadic, Dyadic};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A univariate polynomial with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `1 - q`, the single-edge reliability factor.
    pub fn one_minus_q() -> Self {
        Self::from_i64(&[1, -1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Integer power by binary exponentiation.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact quotient `self / divisor`; fails unless the division is exact
    /// over the integers.
    pub fn divide_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        if divisor.is_zero() {
            return Err(Error::InvalidParameter("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dd = divisor.degree().unwrap();
        let dp = match self.degree() {
            Some(d) if d >= dd => d,
            _ => return Err(Error::NotDivisible),
        };
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dd + 1];
        for k in (0..=dp - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let prod = dc * &q;
                rem[k + i] -= prod;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPolynomial::new(quot))
    }

    /// Content: gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact evaluation at a dyadic point. The result carries
    /// `degree * x.bits()` fractional bits.
    pub fn eval_dyadic_exact(&self, x: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero(0);
        }
        let d = self.degree().unwrap();
        let b = x.bits();
        let total_bits = d as u64 * b as u64;
        assert!(total_bits < u32::MAX as u64, "dyadic evaluation overflow");
        // N = sum c_i m^i 2^{b(d-i)}, accumulated by Horner.
        let m = x.mantissa();
        let mut acc = self.coeffs[d].clone();
        for i in (0..d).rev() {
            acc = acc * m + (&self.coeffs[i] << (b as u64 * (d - i) as u64) as u32);
        }
        Dyadic::new(acc, total_bits as u32)
    }

    /// Exact sign of `p(x)` at a dyadic point.
    pub fn sign_at_dyadic(&self, x: &Dyadic) -> i8 {
        self.eval_dyadic_exact(x).signum()
    }

    /// Horner evaluation at a complex dyadic point, together with a
    /// certified upper bound on the absolute rounding error.
    ///
    /// Each Horner step performs one truncated complex multiplication
    /// (componentwise error below one ulp) and one exact coefficient
    /// addition, so the accumulated error is at most
    /// `2 (d+1) max(1,|z|)^(d+1)` ulps of the working precision.
    pub fn eval_complex(&self, z: &ComplexDyadic) -> (ComplexDyadic, Dyadic) {
        let prec = z.bits().max(53);
        if self.is_zero() {
            return (ComplexDyadic::zero(prec), Dyadic::zero(prec));
        }
        let d = self.degree().unwrap();
        let z = z.with_bits(prec);
        let mut acc = ComplexDyadic::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&z, prec);
            acc = ComplexDyadic::new(acc.re() + &Dyadic::from_bigint(c.clone()), acc.im().clone());
        }
        let steps = BigInt::from(2 * (d as u64 + 1));
        let norm_sqr = z.norm_sqr_exact();
        let bound = if norm_sqr <= Dyadic::from_int(1) {
            Dyadic::new(steps, prec)
        } else {
            let zau = z.abs_ceil(prec);
            let factor = zau.pow_ceil(d as u32 + 1, prec);
            factor.mul_int(&steps).with_bits(prec) + &Dyadic::ulp(prec)
        };
        (acc, bound)
    }

    /// Serialize in the polynomial text format: a `degree d` line followed
    /// by the `d+1` coefficients in ascending order, one per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push_str("degree 0\n0\n");
            return out;
        }
        let d = self.degree().unwrap();
        out.push_str(&format!("degree {}\n", d));
        for c in &self.coeffs {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    /// Parse the polynomial text format. Blank lines and lines starting
    /// with `#` are ignored.
    pub fn parse_text(text: &str) -> Result<IntPolynomial> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty polynomial file".into()))?;
        let degree: usize = header
            .strip_prefix("degree")
            .map(str::trim)
            .ok_or_else(|| Error::Parse(format!("expected 'degree d', got '{header}'")))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad degree: {e}")))?;
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..=degree {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("truncated coefficient list".into()))?;
            let c: BigInt = line
                .parse()
                .map_err(|e| Error::Parse(format!("bad coefficient '{line}': {e}")))?;
            coeffs.push(c);
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c += r;
            }
            coeffs.push(c);
        }
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c -= r;
            }
            coeffs.push(c);
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn pow_zero_is_one() {
        assert_eq!(IntPolynomial::one_minus_q().pow(0), IntPolynomial::one());
    }

    #[test]
    fn mul_difference_of_squares() {
        let prod = &p(&[1, -1]) * &p(&[1, 1]);
        assert_eq!(prod, p(&[1, 0, -1]));
    }

    #[test]
    fn pow_binomial_cube() {
        assert_eq!(IntPolynomial::one_minus_q().pow(3), p(&[1, -3, 3, -1]));
    }

    #[test]
    fn divide_exact_examples() {
        // (1 - q^2) / (1 - q) = 1 + q
        let q = p(&[1, 0, -1]).divide_exact(&p(&[1, -1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        // Rel(K_3) = (1-q)^2 (1+2q)
        let rel_k3 = p(&[1, 0, -3, 2]);
        let q = rel_k3
            .divide_exact(&IntPolynomial::one_minus_q().pow(2))
            .unwrap();
        assert_eq!(q, p(&[1, 2]));
        // Non-divisible input is rejected.
        assert!(matches!(
            p(&[1, 1]).divide_exact(&p(&[1, -1])),
            Err(crate::Error::NotDivisible)
        ));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[1, 0, -1]).derivative(), p(&[0, -2]));
        assert_eq!(p(&[7]).derivative(), IntPolynomial::zero());
        assert_eq!(p(&[1, 0, -3, 2]).derivative(), p(&[0, -6, 6]));
    }

    #[test]
    fn eval_complex_simple_points() {
        // (1 - q) at q = 1 vanishes.
        let (v, err) = p(&[1, -1]).eval_complex(&ComplexDyadic::from_f64(1.0, 0.0));
        assert!(v.norm_sqr_exact() <= err.mul_exact(&err));
        assert!(v.is_zero());
        // Rel(K_4) at 1/2 equals 38/64.
        let rel_k4 = p(&[1, 0, 0, -4, -3, 12, -6]);
        let (v, err) = rel_k4.eval_complex(&ComplexDyadic::from_f64(0.5, 0.0).with_bits(128));
        assert!((v.re().to_f64() - 0.59375).abs() < 1e-30);
        assert!(err.to_f64() < 1e-30);
        // 1 - 3q^2 + 2q^3 at q = -1 is -4; matches the sign law for K_3.
        let v = p(&[1, 0, -3, 2]).eval_bigint(&BigInt::from(-1));
        assert_eq!(v, BigInt::from(-4));
    }

    #[test]
    fn eval_rational_exact() {
        let rel_k4 = p(&[1, 0, 0, -4, -3, 12, -6]);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let v = rel_k4.eval_rational(&half);
        assert_eq!(v, BigRational::new(BigInt::from(38), BigInt::from(64)));
    }

    #[test]
    fn eval_dyadic_exact_matches_rational() {
        let poly = p(&[3, -1, 0, 5, -2]);
        let x = Dyadic::from_f64(-0.8125);
        let exact = poly.eval_dyadic_exact(&x);
        let expect = poly.eval_rational(&x.to_rational());
        assert_eq!(exact.to_rational(), expect);
    }

    #[test]
    fn text_format_roundtrip() {
        let poly = p(&[1, 0, -3, 2]);
        let text = poly.to_text();
        assert!(text.starts_with("degree 3\n"));
        let back = IntPolynomial::parse_text(&text).unwrap();
        assert_eq!(back, poly);
        // Comment and blank lines are skipped.
        let with_comment = format!("# checksum line\n\n{}", text);
        assert_eq!(IntPolynomial::parse_text(&with_comment).unwrap(), poly);
    }

    #[test]
    fn display_pretty() {
        assert_eq!(p(&[1, 0, -3, 2]).to_string(), "1 - 3*q^2 + 2*q^3");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    prop_compose! {
        fn small_poly()(coeffs in prop::collection::vec(-50i64..50, 0..8)) -> IntPolynomial {
            IntPolynomial::from_i64(&coeffs)
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            let ab_c = &(&a + &b) + &c;
            let a_bc = &a + &(&b + &c);
            prop_assert_eq!(ab_c, a_bc);
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(lhs, rhs);
            let comm = (&a * &b) == (&b * &a);
            prop_assert!(comm);
        }

        #[test]
        fn divide_exact_inverts_mul(d in small_poly(), x in small_poly()) {
            prop_assume!(!d.is_zero());
            let prod = &d * &x;
            let q = prod.divide_exact(&d).unwrap();
            prop_assert_eq!(q, x);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn eval_bound_holds_at_double_precision(
            coeffs in prop::collection::vec(-1_000_000i64..1_000_000, 1..64),
            re in -1.2f64..1.2,
            im in -1.2f64..1.2,
        ) {
            let poly = IntPolynomial::from_i64(&coeffs);
            let z128 = ComplexDyadic::from_f64(re, im).with_bits(128);
            let z256 = ComplexDyadic::from_f64(re, im).with_bits(256);
            let (v1, bound) = poly.eval_complex(&z128);
            let (v2, _) = poly.eval_complex(&z256);
            // The doubled-precision value moves by less than the bound.
            let diff = v1.sub(&v2).norm_sqr_exact();
            let bound_sqr = bound.mul_exact(&bound);
            prop_assert!(diff <= bound_sqr);
        }
    }

    #[test]
    fn eval_bound_high_degree() {
        // Degree ~300 with large coefficients stays certified.
        let coeffs: Vec<i64> = (0..300).map(|i| ((i * 37 + 11) % 2000) as i64 - 1000).collect();
        let poly = IntPolynomial::from_i64(&coeffs);
        let z1 = ComplexDyadic::from_f64(0.93, -0.31).with_bits(192);
        let z2 = z1.with_bits(384);
        let (v1, bound) = poly.eval_complex(&z1);
        let (v2, _) = poly.eval_complex(&z2);
        let diff = v1.sub(&v2).norm_sqr_exact();
        assert!(diff <= bound.mul_exact(&bound));
        assert!(bound.to_f64() < 1e-40);
    }
}
