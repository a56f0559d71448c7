//! The exact scalar abstraction the whole crate is generic over.

use num_traits::{FromPrimitive, Num, Signed};
use std::fmt::{Debug, Display};
use std::hash::Hash;

/// An exact ordered field scalar.
///
/// The two intended instantiations are `Ratio<BigInt>` ([`crate::Rat`]) and
/// `Ratio<i64>` ([`crate::Rat64`]).  Every algorithm in this crate relies on
/// exact equality and exact sign tests, so lossy types are not admissible.
pub trait Scalar:
    Num + Signed + Ord + Clone + Hash + Debug + Display + FromPrimitive + 'static
{
}

impl<T> Scalar for T where
    T: Num + Signed + Ord + Clone + Hash + Debug + Display + FromPrimitive + 'static
{
}

/// Exact conversion to a big-integer fraction, for handing rational data to
/// the fraction-free integer elimination.
pub trait BigConvert {
    fn to_frac(&self) -> (num_bigint::BigInt, num_bigint::BigInt);
}

impl BigConvert for num_rational::Ratio<num_bigint::BigInt> {
    fn to_frac(&self) -> (num_bigint::BigInt, num_bigint::BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

impl BigConvert for num_rational::Ratio<i64> {
    fn to_frac(&self) -> (num_bigint::BigInt, num_bigint::BigInt) {
        (num_bigint::BigInt::from(*self.numer()), num_bigint::BigInt::from(*self.denom()))
    }
}

/// Embed a machine integer.
pub fn int<R: Scalar>(n: i64) -> R {
    R::from_i64(n).expect("integer embeds into scalar")
}

/// Exact ratio of two machine integers.
pub fn ratio<R: Scalar>(p: i64, q: i64) -> R {
    assert!(q != 0, "zero denominator");
    int::<R>(p) / int::<R>(q)
}

/// Render a scalar the way the JSON interfaces expect: `"p/q"`, or plain
/// `"p"` when the denominator is one.  `Ratio` already prints reduced
/// fractions in exactly this form.
pub fn to_frac_string<R: Scalar>(x: &R) -> String {
    x.to_string()
}

/// Parse `"p"` or `"p/q"`.
pub fn from_frac_string<R: Scalar>(s: &str) -> Option<R> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<i64>().ok().map(int::<R>),
        Some((p, q)) => {
            let p = p.trim().parse::<i64>().ok()?;
            let q = q.trim().parse::<i64>().ok()?;
            if q == 0 {
                None
            } else {
                Some(ratio::<R>(p, q))
            }
        }
    }
}
