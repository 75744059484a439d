use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field: the rationals or a prime field GF(p) with p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

/// An exact field element. Rationals are kept in lowest terms by
/// `BigRational`; prime-field elements are canonical residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u32),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(BigRational::zero()),
            FieldSpec::Prime(_) => Coeff::Mod(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Coeff::Mod(v.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rat(BigRational::from_integer(v.clone())),
            FieldSpec::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Coeff::Mod(r.to_u32().expect("residue fits"))
            }
        }
    }

    /// Maps a rational into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, v: &BigRational) -> Result<Coeff> {
        match self {
            FieldSpec::Rationals => Ok(Coeff::Rat(v.clone())),
            FieldSpec::Prime(p) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                let inv = self.inv(&den).ok_or_else(|| {
                    Error::InvalidInput(format!("denominator {} vanishes mod {p}", v.denom()))
                })?;
                Ok(self.mul(&num, &inv))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Mod(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Rat(x), Coeff::Rat(y), _) => Coeff::Rat(x + y),
            (Coeff::Mod(x), Coeff::Mod(y), FieldSpec::Prime(p)) => {
                Coeff::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => panic!("coefficient kinds do not match field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (a, self) {
            (Coeff::Rat(x), _) => Coeff::Rat(-x),
            (Coeff::Mod(0), _) => Coeff::Mod(0),
            (Coeff::Mod(x), FieldSpec::Prime(p)) => Coeff::Mod(*p - *x),
            _ => panic!("coefficient kinds do not match field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Rat(x), Coeff::Rat(y), _) => Coeff::Rat(x * y),
            (Coeff::Mod(x), Coeff::Mod(y), FieldSpec::Prime(p)) => {
                Coeff::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => panic!("coefficient kinds do not match field {self:?}"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if self.is_zero(a) {
            return None;
        }
        match (a, self) {
            (Coeff::Rat(x), _) => Some(Coeff::Rat(x.recip())),
            (Coeff::Mod(x), FieldSpec::Prime(p)) => Some(Coeff::Mod(mod_pow(*x, *p - 2, *p))),
            _ => panic!("coefficient kinds do not match field {self:?}"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

pub(crate) fn mod_pow(base: u32, mut exp: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u32
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Coeff {
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Mod(_) => false,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf5_product() {
        let k = FieldSpec::prime(5).unwrap();
        assert_eq!(k.mul(&k.from_i64(2), &k.from_i64(3)), k.one());
        assert_eq!(k.inv(&k.from_i64(2)), Some(k.from_i64(3)));
        assert_eq!(k.from_i64(-1), Coeff::Mod(4));
    }

    #[test]
    fn rejects_composites() {
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(32001).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
    }

    #[test]
    fn rational_into_prime_field() {
        let k = FieldSpec::prime(7).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(k.from_rational(&half).unwrap(), Coeff::Mod(4));
        let seventh = BigRational::new(1.into(), 7.into());
        assert!(k.from_rational(&seventh).is_err());
    }
}
