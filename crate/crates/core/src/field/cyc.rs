use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldError;

/// Degree of Q(ζ₃₆) over Q.
pub const DEGREE: usize = 12;
/// The conductor: ζ is a primitive 36th root of unity.
pub const CONDUCTOR: i64 = 36;

/// Residues mod 36 coprime to 36, i.e. the Galois group of Q(ζ₃₆).
pub const GALOIS_UNITS: [i64; 12] = [1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35];

/// ζⁿ written in the power basis 1, ζ, …, ζ¹¹ using ζ¹² = ζ⁶ − 1 and ζ¹⁸ = −1.
pub(crate) fn zeta_power_coeffs(n: i64) -> [i64; DEGREE] {
    let n = n.rem_euclid(CONDUCTOR) as usize;
    if n >= 18 {
        let mut c = zeta_power_coeffs((n - 18) as i64);
        c.iter_mut().for_each(|x| *x = -*x);
        return c;
    }
    let mut c = [0i64; DEGREE];
    if n < DEGREE {
        c[n] = 1;
    } else {
        c[n - 6] = 1;
        c[n - 12] = -1;
    }
    c
}

/// An element of the cyclotomic field Q(ζ₃₆), ζ = e^{2πi/36}.
///
/// Stored as integer numerators over a common positive denominator, always
/// reduced modulo Φ₃₆(x) = x¹² − x⁶ + 1 and with gcd(numerators, den) = 1, so
/// structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    num: [BigInt; DEGREE],
    den: BigInt,
}

impl CycNum {
    fn from_parts(num: [BigInt; DEGREE], den: BigInt) -> Self {
        let mut out = CycNum { num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            self.num.iter_mut().for_each(|x| *x = -x.clone());
        }
        let mut g = self.den.clone();
        for x in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            self.den /= &g;
            self.num.iter_mut().for_each(|x| *x /= &g);
        }
    }

    pub fn zero() -> Self {
        CycNum { num: Default::default(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = BigInt::from(n);
        CycNum { num, den: BigInt::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = r.numer().clone();
        Self::from_parts(num, r.denom().clone())
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    /// Builds c₀ + c₁ζ + … from integer coefficients (at most 12).
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        assert!(coeffs.len() <= DEGREE, "at most {DEGREE} coefficients");
        let mut num: [BigInt; DEGREE] = Default::default();
        for (slot, c) in num.iter_mut().zip(coeffs) {
            *slot = BigInt::from(*c);
        }
        Self::from_parts(num, BigInt::one())
    }

    pub fn from_rational_coeffs(coeffs: &[BigRational]) -> Self {
        assert!(coeffs.len() <= DEGREE, "at most {DEGREE} coefficients");
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num: [BigInt; DEGREE] = Default::default();
        for (slot, c) in num.iter_mut().zip(coeffs) {
            *slot = c.numer() * (&den / c.denom());
        }
        Self::from_parts(num, den)
    }

    /// ζᵏ for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        Self::from_int_coeffs(&zeta_power_coeffs(k))
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..DEGREE).map(|i| self.coeff(i)).collect()
    }

    pub(crate) fn numerators(&self) -> &[BigInt; DEGREE] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// The rational value, when the element is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeff(0))
    }

    /// Σ|cᵢ|, the ℓ¹ size of the coefficient vector.
    pub fn l1_norm(&self) -> BigRational {
        let s: BigInt = self.num.iter().map(|x| x.abs()).sum();
        BigRational::new(s, self.den.clone())
    }

    /// Image under the Galois automorphism ζ ↦ ζᵏ (k coprime to 36).
    pub fn galois(&self, k: i64) -> Self {
        debug_assert!(num_integer::gcd(k.rem_euclid(CONDUCTOR), CONDUCTOR) == 1);
        let mut out: [BigInt; DEGREE] = Default::default();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = zeta_power_coeffs(i as i64 * k);
            for (o, e) in out.iter_mut().zip(image) {
                match e {
                    0 => {}
                    1 => *o += c,
                    -1 => *o -= c,
                    _ => *o += c * e,
                }
            }
        }
        Self::from_parts(out, self.den.clone())
    }

    /// Complex conjugation, the automorphism ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// |x|² = x·x̄.
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Real part (x + x̄)/2.
    pub fn re(&self) -> Self {
        (self + &self.conj()) * &CycNum::from_frac(1, 2)
    }

    /// Imaginary part (x − x̄)/(2i), itself conjugation-fixed.
    pub fn im(&self) -> Self {
        // 1/(2i) = -i/2
        (self - &self.conj()) * &(CycNum::zeta_pow(9) * &CycNum::from_frac(-1, 2))
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse via the product of the non-trivial Galois conjugates.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let mut cofactor = CycNum::one();
        for &k in &GALOIS_UNITS[1..] {
            cofactor *= &self.galois(k);
        }
        let norm = (self * &cofactor)
            .to_rational()
            .expect("field norm is rational");
        let inv_norm = CycNum::from_rational(&norm.recip());
        Ok(cofactor * &inv_norm)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycNum::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Approximate value under ζ ↦ e^{2πi/36}. Display and diagnostics only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * i as f64 / CONDUCTOR as f64;
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return CycNum::zero();
        }
        let mut wide: Vec<BigInt> = vec![BigInt::zero(); 2 * DEGREE - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        // ζ^d = ζ^{d-6} − ζ^{d-12}
        for d in (DEGREE..2 * DEGREE - 1).rev() {
            let c = std::mem::take(&mut wide[d]);
            if !c.is_zero() {
                wide[d - 6] += &c;
                wide[d - 12] -= c;
            }
        }
        let mut num: [BigInt; DEGREE] = Default::default();
        for (slot, c) in num.iter_mut().zip(wide) {
            *slot = c;
        }
        Self::from_parts(num, &self.den * &rhs.den)
    }

    fn add_impl(&self, rhs: &Self, sign: i8) -> Self {
        if self.den == rhs.den {
            let mut num = self.num.clone();
            for (a, b) in num.iter_mut().zip(&rhs.num) {
                if sign > 0 {
                    *a += b;
                } else {
                    *a -= b;
                }
            }
            return Self::from_parts(num, self.den.clone());
        }
        let den = self.den.lcm(&rhs.den);
        let fa = &den / &self.den;
        let fb = &den / &rhs.den;
        let mut num: [BigInt; DEGREE] = Default::default();
        for (k, slot) in num.iter_mut().enumerate() {
            let a = &self.num[k] * &fa;
            let b = &rhs.num[k] * &fb;
            *slot = if sign > 0 { a + b } else { a - b };
        }
        Self::from_parts(num, den)
    }
}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::zero()
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                $body(self, rhs)
            }
        }
        impl $trait<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(&self, &rhs)
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                $body(&self, rhs)
            }
        }
        impl $trait<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycNum, b: &CycNum| a.add_impl(b, 1));
forward_binop!(Sub, sub, |a: &CycNum, b: &CycNum| a.add_impl(b, -1));
forward_binop!(Mul, mul, |a: &CycNum, b: &CycNum| a.mul_impl(b));

/// Panics on division by zero, like integer division. Use [`CycNum::checked_div`]
/// when the divisor may vanish.
impl Div<&CycNum> for &CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self.checked_div(rhs).expect("division by zero in Q(ζ₃₆)")
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = self.add_impl(rhs, 1);
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = self.add_impl(rhs, -1);
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        let mut num = self.num.clone();
        num.iter_mut().for_each(|x| *x = -x.clone());
        CycNum { num, den: self.den.clone() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_power_table_is_consistent() {
        let z = CycNum::zeta_pow(1);
        let mut acc = CycNum::one();
        for n in 0..72 {
            assert_eq!(acc, CycNum::zeta_pow(n), "ζ^{n}");
            acc = &acc * &z;
        }
        assert_eq!(CycNum::zeta_pow(18), CycNum::from_int(-1));
    }

    #[test]
    fn defining_relation() {
        let z6 = CycNum::zeta_pow(6);
        let expected = &z6 - &CycNum::one();
        assert_eq!(&z6 * &z6, expected);
    }

    #[test]
    fn normalization_makes_equality_structural() {
        let a = CycNum::from_rational_coeffs(&[BigRational::new(2.into(), 4.into())]);
        assert_eq!(a, CycNum::from_frac(1, 2));
        let b = &CycNum::from_frac(1, 3) + &CycNum::from_frac(2, 3);
        assert!(b.is_one());
        assert_eq!(&a - &a, CycNum::zero());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(CycNum::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn inverse_round_trip() {
        let x = CycNum::from_int_coeffs(&[3, -1, 0, 2, 0, 0, 5, 0, 0, 0, 0, -7]);
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn re_and_im_split() {
        let x = CycNum::from_int_coeffs(&[1, 2, 3]);
        let i = CycNum::zeta_pow(9);
        assert_eq!(&x.re() + &(&i * &x.im()), x);
        assert!(x.re().is_real() && x.im().is_real());
    }

    #[test]
    fn pow_negative() {
        let z = CycNum::zeta_pow(1);
        assert_eq!(z.pow(-1).unwrap(), CycNum::zeta_pow(35));
        assert_eq!(z.pow(36).unwrap(), CycNum::one());
    }
}
