//! Exact rational coefficients and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient field of every tensor and algebra element.
pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Coeff {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Coeff {
    Coeff::zero()
}

pub fn one() -> Coeff {
    Coeff::one()
}

/// Always renders as `p/q`, including integers (`"-32/1"`).
pub fn to_pq(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn from_pq(s: &str) -> Result<Coeff> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(p, q))
}

/// `Some(n)` if `c` is an integer that fits in `i64`.
pub fn as_i64(c: &Coeff) -> Option<i64> {
    if !c.is_integer() {
        return None;
    }
    i64::try_from(c.numer()).ok()
}

pub fn is_positive(c: &Coeff) -> bool {
    c.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_round_trip() {
        for (p, q) in [(0, 1), (-32, 1), (3, 7), (-5, 10)] {
            let c = ratio(p, q);
            assert_eq!(from_pq(&to_pq(&c)).unwrap(), c);
        }
        assert_eq!(to_pq(&int(-8)), "-8/1");
        assert_eq!(to_pq(&ratio(2, 4)), "1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(from_pq("1/0").is_err());
        assert!(from_pq("x/2").is_err());
        assert_eq!(from_pq("7").unwrap(), int(7));
    }
}
