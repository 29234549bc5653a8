//! Multiprecision dyadic arithmetic.
//!
//! A [`Dyadic`] stores an exact value `mant / 2^bits`. Addition and
//! subtraction are exact; multiplication, division and roots truncate the
//! result to the requested number of fractional bits, so every operation
//! carries an absolute error of at most one ulp (`2^-bits`) regardless of
//! the magnitude of the operands. That property is what makes the certified
//! polynomial evaluation bounds in [`super::IntPolynomial::eval_complex`]
//! independent of coefficient size.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An exact dyadic rational `mant / 2^bits`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    mant: BigInt,
    bits: u32,
}

impl Dyadic {
    pub fn new(mant: BigInt, bits: u32) -> Self {
        Dyadic { mant, bits }
    }

    pub fn zero(bits: u32) -> Self {
        Dyadic {
            mant: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        Dyadic {
            mant: BigInt::one() << bits,
            bits,
        }
    }

    /// One unit in the last place at the given precision: `2^-bits`.
    pub fn ulp(bits: u32) -> Self {
        Dyadic {
            mant: BigInt::one(),
            bits,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic {
            mant: BigInt::from(v),
            bits: 0,
        }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Dyadic { mant: v, bits: 0 }
    }

    /// Exact conversion; every finite `f64` is a dyadic rational.
    ///
    /// Panics on NaN or infinity.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "Dyadic::from_f64 requires a finite value");
        if x == 0.0 {
            return Dyadic::zero(0);
        }
        let (mant, exp, sign) = Float::integer_decode(x);
        let m = BigInt::from(mant) * BigInt::from(sign);
        if exp >= 0 {
            Dyadic {
                mant: m << exp as u32,
                bits: 0,
            }
        } else {
            Dyadic {
                mant: m,
                bits: (-exp) as u32,
            }
        }
    }

    /// Nearest representable value of `num/den` at `bits` fractional bits
    /// (rounded toward negative infinity).
    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        assert!(!den.is_zero());
        let (n, d) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        Dyadic {
            mant: (n << bits).div_floor(&d),
            bits,
        }
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), bits)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        match self.mant.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Re-round to `bits` fractional bits (floor). Exact when widening.
    pub fn with_bits(&self, bits: u32) -> Self {
        if bits >= self.bits {
            Dyadic {
                mant: &self.mant << (bits - self.bits),
                bits,
            }
        } else {
            Dyadic {
                mant: &self.mant >> (self.bits - bits),
                bits,
            }
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    /// Exact product; fractional bits add up.
    pub fn mul_exact(&self, other: &Dyadic) -> Self {
        Dyadic {
            mant: &self.mant * &other.mant,
            bits: self.bits + other.bits,
        }
    }

    /// Product truncated (floor) to `out_bits`; error < one ulp.
    pub fn mul_floor(&self, other: &Dyadic, out_bits: u32) -> Self {
        self.mul_exact(other).with_bits(out_bits)
    }

    /// Product rounded up to `out_bits`.
    pub fn mul_ceil(&self, other: &Dyadic, out_bits: u32) -> Self {
        let exact = self.mul_exact(other);
        let floored = exact.with_bits(out_bits);
        if floored.mul_cmp_exact(&exact) == Ordering::Equal {
            floored
        } else {
            Dyadic {
                mant: floored.mant + 1,
                bits: out_bits,
            }
        }
    }

    fn mul_cmp_exact(&self, other: &Dyadic) -> Ordering {
        self.cmp(other)
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Dyadic {
            mant: &self.mant * k,
            bits: self.bits,
        }
    }

    /// Quotient truncated (floor) to `out_bits`; error < one ulp.
    pub fn div_floor(&self, other: &Dyadic, out_bits: u32) -> Self {
        assert!(!other.is_zero(), "dyadic division by zero");
        let (num, den) = if other.mant.is_negative() {
            (-&self.mant, -&other.mant)
        } else {
            (self.mant.clone(), other.mant.clone())
        };
        let shifted = num << (other.bits as u64 + out_bits as u64) as u32;
        let den_shifted = den << self.bits;
        Dyadic {
            mant: shifted.div_floor(&den_shifted),
            bits: out_bits,
        }
    }

    /// Integer power truncated to `out_bits`.
    ///
    /// Accumulated error is below `k * max(1,|self|)^(k-1)` ulps.
    pub fn pow_floor(&self, k: u32, out_bits: u32) -> Self {
        let mut acc = Dyadic::one(out_bits);
        for _ in 0..k {
            acc = acc.mul_floor(self, out_bits);
        }
        acc
    }

    /// Exact integer power; fractional bits scale with `k`.
    pub fn pow_exact(&self, k: u32) -> Self {
        let mut acc = Dyadic::from_int(1);
        for _ in 0..k {
            acc = acc.mul_exact(self);
        }
        acc
    }

    /// Integer power rounded up (requires a nonnegative base).
    pub fn pow_ceil(&self, k: u32, out_bits: u32) -> Self {
        assert!(!self.is_negative());
        let mut acc = Dyadic::one(out_bits);
        for _ in 0..k {
            acc = acc.mul_ceil(self, out_bits);
        }
        acc
    }

    /// Floor square root at `out_bits`; requires a nonnegative value.
    /// The result `r` satisfies `r <= sqrt(v) < r + 2 ulp`.
    pub fn sqrt_floor(&self, out_bits: u32) -> Self {
        assert!(!self.is_negative(), "square root of a negative dyadic");
        let target_bits = 2 * out_bits as u64;
        let scaled = if target_bits >= self.bits as u64 {
            &self.mant << (target_bits - self.bits as u64) as u32
        } else {
            &self.mant >> (self.bits as u64 - target_bits) as u32
        };
        Dyadic {
            mant: scaled.sqrt(),
            bits: out_bits,
        }
    }

    /// Upper bound for the square root at `out_bits`.
    pub fn sqrt_ceil(&self, out_bits: u32) -> Self {
        let lo = self.sqrt_floor(out_bits);
        Dyadic {
            mant: lo.mant + 2,
            bits: out_bits,
        }
    }

    /// Floor `n`-th root at `out_bits`; requires a nonnegative value.
    pub fn nth_root_floor(&self, n: u32, out_bits: u32) -> Self {
        assert!(n >= 1);
        assert!(!self.is_negative());
        let target_bits = n as u64 * out_bits as u64;
        let scaled = if target_bits >= self.bits as u64 {
            &self.mant << (target_bits - self.bits as u64) as u32
        } else {
            &self.mant >> (self.bits as u64 - target_bits) as u32
        };
        Dyadic {
            mant: scaled.nth_root(n),
            bits: out_bits,
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        // Scale manually: BigInt::to_f64 handles huge mantissas by rounding.
        let mant_bits = self.mant.bits();
        if mant_bits <= 1000 {
            self.mant.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.bits as i32)
        } else {
            let shift = (mant_bits - 64) as u32;
            let top = (&self.mant >> shift).to_f64().unwrap_or(f64::NAN);
            let exp = shift as i64 - self.bits as i64;
            top * 2f64.powi(exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
        }
    }

    /// Deterministic decimal rendering, truncated toward zero after
    /// `max_frac_digits` fractional digits.
    pub fn to_decimal(&self, max_frac_digits: usize) -> String {
        if self.mant.is_zero() {
            return "0".to_string();
        }
        let neg = self.mant.is_negative();
        let mag = self.mant.abs();
        let int_part = &mag >> self.bits;
        let mut frac = &mag - (&int_part << self.bits);
        let mut digits = String::new();
        let ten = BigInt::from(10);
        for _ in 0..max_frac_digits {
            if frac.is_zero() {
                break;
            }
            frac *= &ten;
            let digit = &frac >> self.bits;
            digits.push_str(&digit.to_string());
            frac -= &digit << self.bits;
        }
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push_str(&int_part.to_string());
        if !digits.is_empty() {
            let trimmed = digits.trim_end_matches('0');
            if !trimmed.is_empty() {
                s.push('.');
                s.push_str(trimmed);
            }
        }
        s
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let b = self.bits.max(other.bits);
        let lhs = &self.mant << (b - self.bits);
        let rhs = &other.mant << (b - other.bits);
        lhs.cmp(&rhs)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let b = self.bits.max(rhs.bits);
        Dyadic {
            mant: (&self.mant << (b - self.bits)) + (&rhs.mant << (b - rhs.bits)),
            bits: b,
        }
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let b = self.bits.max(rhs.bits);
        Dyadic {
            mant: (&self.mant << (b - self.bits)) - (&rhs.mant << (b - rhs.bits)),
            bits: b,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            bits: self.bits,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(50))
    }
}

/// A complex number with dyadic components sharing one precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDyadic {
    re: Dyadic,
    im: Dyadic,
}

impl ComplexDyadic {
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        let b = re.bits().max(im.bits());
        ComplexDyadic {
            re: re.with_bits(b),
            im: im.with_bits(b),
        }
    }

    pub fn zero(bits: u32) -> Self {
        ComplexDyadic {
            re: Dyadic::zero(bits),
            im: Dyadic::zero(bits),
        }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        ComplexDyadic::new(Dyadic::from_f64(re), Dyadic::from_f64(im))
    }

    pub fn real(re: Dyadic) -> Self {
        let bits = re.bits();
        ComplexDyadic {
            re,
            im: Dyadic::zero(bits),
        }
    }

    pub fn re(&self) -> &Dyadic {
        &self.re
    }

    pub fn im(&self) -> &Dyadic {
        &self.im
    }

    pub fn bits(&self) -> u32 {
        self.re.bits().max(self.im.bits())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        ComplexDyadic {
            re: self.re.with_bits(bits),
            im: self.im.with_bits(bits),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexDyadic {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexDyadic::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        ComplexDyadic::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn neg(&self) -> Self {
        ComplexDyadic {
            re: -&self.re,
            im: -&self.im,
        }
    }

    /// Product with a single floor truncation per component, so the
    /// componentwise error is below one ulp of `out_bits`.
    pub fn mul(&self, other: &Self, out_bits: u32) -> Self {
        let ac = self.re.mul_exact(&other.re);
        let bd = self.im.mul_exact(&other.im);
        let ad = self.re.mul_exact(&other.im);
        let bc = self.im.mul_exact(&other.re);
        ComplexDyadic {
            re: (&ac - &bd).with_bits(out_bits),
            im: (&ad + &bc).with_bits(out_bits),
        }
    }

    pub fn mul_real(&self, k: &Dyadic, out_bits: u32) -> Self {
        ComplexDyadic {
            re: self.re.mul_floor(k, out_bits),
            im: self.im.mul_floor(k, out_bits),
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        ComplexDyadic {
            re: self.re.mul_int(k),
            im: self.im.mul_int(k),
        }
    }

    pub fn div(&self, other: &Self, out_bits: u32) -> Self {
        let den = other.norm_sqr_exact();
        assert!(!den.is_zero(), "complex division by zero");
        let num_re = &self.re.mul_exact(&other.re) + &self.im.mul_exact(&other.im);
        let num_im = &self.im.mul_exact(&other.re) - &self.re.mul_exact(&other.im);
        ComplexDyadic {
            re: num_re.div_floor(&den, out_bits),
            im: num_im.div_floor(&den, out_bits),
        }
    }

    /// Exact `re^2 + im^2`.
    pub fn norm_sqr_exact(&self) -> Dyadic {
        &self.re.mul_exact(&self.re) + &self.im.mul_exact(&self.im)
    }

    /// Lower bound on `|z|` at `out_bits`.
    pub fn abs_floor(&self, out_bits: u32) -> Dyadic {
        self.norm_sqr_exact().sqrt_floor(out_bits)
    }

    /// Upper bound on `|z|` at `out_bits`.
    pub fn abs_ceil(&self, out_bits: u32) -> Dyadic {
        self.norm_sqr_exact().sqrt_ceil(out_bits)
    }

    pub fn powi(&self, k: u32, out_bits: u32) -> Self {
        let mut acc = ComplexDyadic {
            re: Dyadic::one(out_bits),
            im: Dyadic::zero(out_bits),
        };
        for _ in 0..k {
            acc = acc.mul(self, out_bits);
        }
        acc
    }

    /// Exact squared distance to `other`.
    pub fn dist_sqr_exact(&self, other: &Self) -> Dyadic {
        self.sub(other).norm_sqr_exact()
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for ComplexDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re.to_decimal(40), self.im.to_decimal(40))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(x: f64) -> Dyadic {
        Dyadic::from_f64(x)
    }

    #[test]
    fn exact_add_sub() {
        let a = d(0.75);
        let b = d(-2.5);
        assert_eq!((&a + &b).to_f64(), -1.75);
        assert_eq!((&a - &b).to_f64(), 3.25);
    }

    #[test]
    fn mul_floor_error_below_ulp() {
        let a = Dyadic::from_ratio(&BigInt::from(1), &BigInt::from(3), 128);
        let b = Dyadic::from_ratio(&BigInt::from(2), &BigInt::from(7), 128);
        let prod = a.mul_floor(&b, 64);
        let exact = a.mul_exact(&b);
        let diff = &exact - &prod;
        assert!(!diff.is_negative());
        assert!(diff < Dyadic::ulp(64));
    }

    #[test]
    fn division_inverse() {
        let a = d(3.5);
        let b = d(1.25);
        let q = a.div_floor(&b, 128);
        assert!((q.to_f64() - 2.8).abs() < 1e-30);
    }

    #[test]
    fn sqrt_two_bracket() {
        let two = Dyadic::from_int(2);
        let lo = two.sqrt_floor(200);
        let hi = two.sqrt_ceil(200);
        assert!(lo.mul_exact(&lo) <= two);
        assert!(hi.mul_exact(&hi) >= two);
        let width = &hi - &lo;
        assert!(width <= Dyadic::new(BigInt::from(2), 200));
    }

    #[test]
    fn nth_root() {
        let v = Dyadic::from_ratio(&BigInt::from(1), &BigInt::from(8), 128);
        let r = v.nth_root_floor(3, 96);
        assert!((r.to_f64() - 0.5).abs() < 1e-25);
    }

    #[test]
    fn complex_mul_matches_f64() {
        let z = ComplexDyadic::from_f64(0.3, -0.4);
        let w = ComplexDyadic::from_f64(-1.5, 0.25);
        let p = z.mul(&w, 128);
        let (re, im) = p.to_f64_pair();
        assert!((re - (0.3 * -1.5 - (-0.4) * 0.25)).abs() < 1e-12);
        assert!((im - (0.3 * 0.25 + (-0.4) * -1.5)).abs() < 1e-12);
    }

    #[test]
    fn complex_div_roundtrip() {
        let z = ComplexDyadic::from_f64(0.3, -0.4);
        let w = ComplexDyadic::from_f64(-1.5, 0.25);
        let q = z.mul(&w, 256).div(&w, 192);
        let err = q.sub(&z.with_bits(192)).norm_sqr_exact();
        assert!(err < Dyadic::new(BigInt::one(), 300));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(d(-0.25).to_decimal(10), "-0.25");
        assert_eq!(d(3.0).to_decimal(10), "3");
        assert_eq!(Dyadic::zero(7).to_decimal(10), "0");
    }
}
