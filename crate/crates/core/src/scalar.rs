//! Ground-field scalars and the `Z/2` grading.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Add;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^(|a||b|)` as a boolean: `true` means the sign is negative.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// An exact field of fractions over an integral domain.
///
/// Everything in this crate is generic over `Scalar`. Elimination clears
/// denominators and runs fraction-free over [`Scalar::Int`], so the only
/// requirement beyond field arithmetic is access to numerator and denominator.
/// `Ratio<BigInt>` is the default; `Ratio<i64>` is faster but can overflow on
/// larger inputs.
pub trait Scalar: Clone + Eq + Hash + Debug + Display + Num + Signed + FromStr + Send + Sync + 'static {
    type Int: Integer + Signed + Clone + Debug + Display + Send + Sync;

    fn from_int(n: Self::Int) -> Self;
    fn from_frac(numer: Self::Int, denom: Self::Int) -> Self;
    fn numer(&self) -> &Self::Int;
    fn denom(&self) -> &Self::Int;
    fn from_i64(v: i64) -> Self;

    /// Canonical `p/q` rendering, denominator always present.
    fn to_frac_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + FromStr + Send + Sync + 'static,
{
    type Int = I;

    fn from_int(n: I) -> Self {
        Ratio::from_integer(n)
    }

    fn from_frac(numer: I, denom: I) -> Self {
        Ratio::new(numer, denom)
    }

    fn numer(&self) -> &I {
        Ratio::numer(self)
    }

    fn denom(&self) -> &I {
        Ratio::denom(self)
    }

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(I::from_i64(v).expect("integer type cannot hold value"))
    }
}

/// `(-1)^(|a||b|)` applied to a scalar.
pub(crate) fn koszul_sign<T: Scalar>(a: Parity, b: Parity, value: T) -> T {
    if a.koszul(b) {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parity_addition_is_mod_two() {
        assert_eq!(Parity::Even + Parity::Even, Parity::Even);
        assert_eq!(Parity::Even + Parity::Odd, Parity::Odd);
        assert_eq!(Parity::Odd + Parity::Even, Parity::Odd);
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
    }

    #[test]
    fn rationals_are_canonical() {
        let q = Ratio::<BigInt>::from_frac(BigInt::from(4), BigInt::from(-6));
        assert_eq!(q.to_frac_string(), "-2/3");
        assert_eq!(<Ratio<i64> as Scalar>::from_i64(5).to_frac_string(), "5/1");
        let parsed: Ratio<BigInt> = "6/4".parse().unwrap();
        assert_eq!(parsed.to_frac_string(), "3/2");
    }
}
