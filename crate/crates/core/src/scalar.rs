//! Scalar abstraction: every quantity in the crate is an exact rational.
//!
//! The trait is a bound alias over num-traits. `Ord + Hash` rules out
//! floating point on purpose; the acceptance checks certify equalities like
//! the LP duality gap being exactly zero, which floats cannot express.

use num::{FromPrimitive, Num, Signed, ToPrimitive};
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

pub trait Scalar:
    Num
    + Signed
    + Ord
    + Clone
    + Hash
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Debug
    + Display
    + 'static
{
}

impl<T> Scalar for T where
    T: Num
        + Signed
        + Ord
        + Clone
        + Hash
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Debug
        + Display
        + 'static
{
}

/// Exact conversion from a small integer.
pub fn int<R: Scalar>(v: i64) -> R {
    R::from_i64(v).expect("integer representable in scalar")
}

/// Exact fraction `num/den`.
pub fn frac<R: Scalar>(num: i64, den: i64) -> R {
    assert!(den != 0, "zero denominator");
    int::<R>(num) / int::<R>(den)
}

/// Lossy f64 view, for human-readable report columns only.
pub fn approx<R: Scalar>(v: &R) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRat, Rat64};

    #[test]
    fn frac_reduces() {
        assert_eq!(frac::<Rat64>(2, 4), frac::<Rat64>(1, 2));
        assert_eq!(frac::<BigRat>(1002, 5001), frac::<BigRat>(334, 1667));
    }

    #[test]
    fn parse_ratio_strings() {
        let r: Rat64 = "3/4".parse().unwrap();
        assert_eq!(r, frac::<Rat64>(3, 4));
        let w: BigRat = "7".parse().unwrap();
        assert_eq!(w, int::<BigRat>(7));
    }
}
