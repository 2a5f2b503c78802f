//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! A computation fixes one [`Field`] up front and every [`Scalar`] it produces
//! carries that field. Mixing scalars from different fields is a programming
//! error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Prime field `F_p`; rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if !(2..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::InvalidModulus(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    value: r.to_u32().expect("reduced residue fits"),
                    p,
                }
            }
        }
    }

    /// Parses an integer or fraction literal such as `-3` or `5/7`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, AlgebraError> {
        let text = text.trim();
        let bad = || AlgebraError::BadScalar(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let value = self.from_bigint(&num);
        match den {
            None => Ok(value),
            Some(d) => {
                let den = BigInt::from_str(d).map_err(|_| bad())?;
                let den = self.from_bigint(&den);
                let inv = den.inverse().map_err(|_| bad())?;
                Ok(&value * &inv)
            }
        }
    }

    /// Every element of the field, for prime fields only.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(move |value| Scalar::Mod { value, p })),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

impl FromStr for Field {
    type Err = AlgebraError;

    /// Accepts `Q`, `Fp 7`, `Fp:7` and `F7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(Field::Rational);
        }
        let rest = s
            .strip_prefix("Fp")
            .or_else(|| s.strip_prefix("F"))
            .ok_or_else(|| AlgebraError::BadField(s.to_string()))?;
        let rest = rest.trim_start_matches(':').trim();
        let p: u64 = rest.parse().map_err(|_| AlgebraError::BadField(s.to_string()))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`].
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed by
/// `BigRational`); residues are canonical in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Canonical sign used to fix the `±1` unit: rationals are positive when
    /// `> 0`, residues when their representative lies in `[1, (p-1)/2]`.
    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_positive(),
            Scalar::Mod { value, p } => *value >= 1 && *value <= (*p - 1) / 2,
        }
    }

    pub fn inverse(&self) -> Result<Scalar, AlgebraError> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(AlgebraError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Mod { value, p } => {
                if *value == 0 {
                    return Err(AlgebraError::DivisionByZero);
                }
                Ok(Scalar::Mod {
                    value: pow_mod(*value as u64, (*p - 2) as u64, *p as u64) as u32,
                    p: *p,
                })
            }
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar, AlgebraError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field().one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        Ok(self * &other.inverse()?)
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn same_prime(p: u32, q: u32) -> u32 {
    assert_eq!(p, q, "scalars from different prime fields");
    p
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Mod {
                    value: ((*a as u64 + *b as u64) % p as u64) as u32,
                    p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Mod {
                    value: ((*a as u64 * *b as u64) % p as u64) as u32,
                    p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, p } => Scalar::Mod {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}
