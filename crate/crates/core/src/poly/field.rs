use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact coefficient field.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(value: i64) -> Self;
    /// `num / den`, or `None` if `den` is zero in this field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;
    /// Whether printing needs parentheses when used as a product factor.
    fn is_negative(&self) -> bool {
        false
    }
}

/// Rational numbers with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// The prime field `Z/PZ`. `P` must be prime and below 2^32.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Zp<const P: u64>(u64);

impl<const P: u64> Zp<P> {
    pub fn new(value: u64) -> Self {
        Zp(value % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut exp: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            exp >>= 1;
        }
        Zp(acc)
    }
}

impl<const P: u64> fmt::Debug for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn one() -> Self {
        Zp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Zp((self.0 + other.0) % P)
    }
    fn sub(&self, other: &Self) -> Self {
        Zp((self.0 + P - other.0) % P)
    }
    fn mul(&self, other: &Self) -> Self {
        Zp(self.0 * other.0 % P)
    }
    fn neg(&self) -> Self {
        Zp((P - self.0) % P)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in Z/{P}");
        self.pow(P - 2)
    }
    fn from_i64(value: i64) -> Self {
        Zp(value.rem_euclid(P as i64) as u64)
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |v: &BigInt| -> u64 {
            let r = ((v % &p) + &p) % &p;
            r.to_u64().expect("residue below modulus")
        };
        let den = Zp::<P>(reduce(den));
        (!den.is_zero()).then(|| Zp::<P>(reduce(num)).mul(&den.inv()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        type F = Zp<7>;
        assert_eq!(F::new(3).mul(&F::new(5)), F::new(1));
        assert_eq!(F::new(3).inv(), F::new(5));
        assert_eq!(F::from_i64(-1), F::new(6));
        assert_eq!(
            F::from_ratio(&BigInt::from(1), &BigInt::from(2)),
            Some(F::new(4))
        );
        assert_eq!(F::from_ratio(&BigInt::from(1), &BigInt::from(7)), None);
    }

    #[test]
    fn rational_arithmetic() {
        let half = Rational::from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(Field::add(&half, &half), <Rational as Field>::one());
        assert_eq!(half.inv(), Rational::from_i64(2));
    }
}
