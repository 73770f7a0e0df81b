//! Coefficient fields: arbitrary-precision rationals and prime fields F_p.
//!
//! A [`CoefficientField`] is a runtime descriptor; coefficient values are
//! [`Coeff`] and all arithmetic goes through the field so the same
//! polynomial code serves both QQ and F_p.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field k of the ambient polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientField {
    /// The rational numbers QQ.
    Rationals,
    /// The prime field F_p, p < 2^31.
    PrimeField(u64),
}

/// A coefficient value. Arithmetic is only defined through the owning
/// [`CoefficientField`]; mixing values from different fields is a bug.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl CoefficientField {
    pub fn rationals() -> Self {
        CoefficientField::Rationals
    }

    /// Construct F_p, verifying that p is prime and p < 2^31.
    pub fn prime_field(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CoefficientField::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::zero()),
            CoefficientField::PrimeField(_) => Coeff::Mod(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::one()),
            CoefficientField::PrimeField(_) => Coeff::Mod(1),
        }
    }

    pub fn from_integer(&self, n: i64) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::from(BigInt::from(n))),
            CoefficientField::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64);
                Coeff::Mod(r as u64)
            }
        }
    }

    /// Build a/b. Fails when b = 0 or b vanishes mod p.
    pub fn from_ratio(&self, a: i64, b: i64) -> Result<Coeff> {
        if b == 0 {
            return Err(Error::Parse("zero denominator in coefficient".into()));
        }
        match self {
            CoefficientField::Rationals => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(a),
                BigInt::from(b),
            ))),
            CoefficientField::PrimeField(_) => {
                let num = self.from_integer(a);
                let den = self.from_integer(b);
                if self.is_zero(&den) {
                    return Err(Error::Parse(
                        "denominator vanishes in the prime field".into(),
                    ));
                }
                Ok(self.mul(&num, &self.inv(&den)?))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod(m) => *m == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Mod(m) => *m == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (CoefficientField::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod((x + y) % p)
            }
            _ => unreachable!("coefficient kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoefficientField::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (CoefficientField::PrimeField(p), Coeff::Mod(x)) => {
                Coeff::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => unreachable!("coefficient kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (CoefficientField::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => {
                // p < 2^31, so the product fits in u64.
                Coeff::Mod((x * y) % p)
            }
            _ => unreachable!("coefficient kind does not match field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (self, a) {
            (CoefficientField::Rationals, Coeff::Rat(x)) => Ok(Coeff::Rat(x.recip())),
            (CoefficientField::PrimeField(p), Coeff::Mod(x)) => {
                // Fermat: x^(p-2) mod p.
                let mut base = *x % p;
                let mut exp = p - 2;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Ok(Coeff::Mod(acc))
            }
            _ => unreachable!("coefficient kind does not match field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// True when the text form needs a leading minus sign. Prime-field
    /// values always print as canonical representatives in [0, p).
    pub fn is_display_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Mod(_) => false,
        }
    }

    /// The magnitude used by the printer (absolute value over QQ).
    pub fn display_abs(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rat(r) => Coeff::Rat(r.abs()),
            Coeff::Mod(m) => Coeff::Mod(*m),
        }
    }

    pub fn format(&self, a: &Coeff) -> String {
        match a {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod(m) => m.to_string(),
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::PrimeField(p) => write!(f, "Fp({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(CoefficientField::prime_field(2).is_ok());
        assert!(CoefficientField::prime_field(32003).is_ok());
        assert_eq!(
            CoefficientField::prime_field(32004),
            Err(Error::NotPrime(32004))
        );
        assert_eq!(CoefficientField::prime_field(1), Err(Error::NotPrime(1)));
        assert!(CoefficientField::prime_field(1 << 31).is_err());
    }

    #[test]
    fn fp_inverse() {
        let f = CoefficientField::prime_field(13).unwrap();
        for x in 1..13 {
            let a = Coeff::Mod(x);
            let inv = f.inv(&a).unwrap();
            assert!(f.is_one(&f.mul(&a, &inv)));
        }
        assert_eq!(f.inv(&Coeff::Mod(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_ratio() {
        let f = CoefficientField::Rationals;
        let c = f.from_ratio(-3, 2).unwrap();
        assert_eq!(f.format(&c), "-3/2");
        assert!(f.is_display_negative(&c));
        assert_eq!(f.format(&f.display_abs(&c)), "3/2");
        assert!(f.from_ratio(1, 0).is_err());
    }

    #[test]
    fn characteristic_two_cancellation() {
        let f = CoefficientField::prime_field(2).unwrap();
        let one = f.one();
        assert!(f.is_zero(&f.add(&one, &one)));
    }
}
