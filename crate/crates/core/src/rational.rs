//! Rationals with an inline fast path: machine-word numerator and
//! denominator while they fit, arbitrary precision otherwise.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// A rational number in lowest terms with positive denominator. Values
/// that fit in `i64 / i64` are always stored inline, so equal values have
/// equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rational {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small(0, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Rational::Small(n, 1)
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational::from_big(BigRational::from_integer(n))
    }

    fn from_big(q: BigRational) -> Self {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(q),
        }
    }

    /// `n / d` for `d > 0`, reduced.
    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d > 0);
        let g = gcd128(n.unsigned_abs(), d as u128) as i128;
        let (n, d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(q) => q.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(q) => q.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(q) => q.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(n, _) => *n < 0,
            Rational::Big(q) => q.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(q) => q.is_integer(),
        }
    }

    pub fn recip(&self) -> Self {
        match self {
            Rational::Small(n, d) => {
                let (n, d) = (*n as i128, *d as i128);
                if n < 0 {
                    Rational::from_i128(-d, -n)
                } else {
                    Rational::from_i128(d, n)
                }
            }
            Rational::Big(q) => Rational::from_big(q.recip()),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small(n, d) => Rational::from_i128(-(*n as i128), *d as i128),
            Rational::Big(q) => Rational::from_big(-q),
        }
    }

    pub fn add(&self, other: &Rational) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.big() + other.big()),
        }
    }

    pub fn sub(&self, other: &Rational) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rational) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.big() * other.big()),
        }
    }

    pub fn to_big(&self) -> BigRational {
        self.big()
    }
}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rational::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Rational::Big(q) => {
                1u8.hash(state);
                q.hash(state);
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Rational::Big(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl From<BigRational> for Rational {
    fn from(q: BigRational) -> Self {
        Rational::from_big(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_and_demotes() {
        let big = Rational::from_int(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq, Rational::Big(_)));
        let back = sq.mul(&big.recip()).mul(&big.recip());
        assert_eq!(back, Rational::from_int(1));
        assert!(back.is_one());
        let x = Rational::from_int(6).mul(&Rational::from_int(-4).recip());
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(x.add(&Rational::from_int(3).mul(&Rational::from_int(2).recip())), Rational::zero());
        let min = Rational::from_int(i64::MIN);
        assert_eq!(min.neg().neg(), min);
        assert!(min.recip().is_negative());
    }
}
