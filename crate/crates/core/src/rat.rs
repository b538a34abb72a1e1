//! Exact rational numbers and their wire format.
//!
//! All invariants computed by this crate are exact rationals; everything that
//! crosses the CLI boundary is printed as a reduced `"p/q"` string (`"p"`
//! when the denominator is 1). `BigRational` already stores lowest terms
//! with a positive denominator, which is exactly the invariant we need.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rat = BigRational;

/// Builds a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer rational.
pub fn rat_int(num: i64) -> Rat {
    BigRational::from(BigInt::from(num))
}

/// Renders a rational as `"p"` or `"p/q"` in lowest terms.
pub fn to_wire(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the wire format accepted by [`to_wire`], plus plain JSON integers.
pub fn from_wire(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Validation(format!("malformed rational {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Validation(format!("malformed rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Validation(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True if the reduced denominator of `r` divides `d`.
pub fn denominator_divides(r: &Rat, d: u64) -> bool {
    (BigInt::from(d) % r.denom()).is_zero()
}

/// True if `r` is an even integer.
pub fn is_even_integer(r: &Rat) -> bool {
    is_integer(r) && (r.numer() % BigInt::from(2)).is_zero()
}

/// Exact integer value, or an error naming `what` if `r` is not integral.
pub fn expect_integer(r: &Rat, what: &str) -> Result<BigInt> {
    if is_integer(r) {
        Ok(r.numer().clone())
    } else {
        Err(Error::Validation(format!(
            "{what} must be an integer, got {}",
            to_wire(r)
        )))
    }
}

/// Serde adapter serializing a [`Rat`] as its wire string.
pub mod serde_wire {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&to_wire(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Rat, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(de)? {
            Raw::Int(n) => Ok(rat_int(n)),
            Raw::Str(s) => from_wire(&s).map_err(de::Error::custom),
        }
    }
}

/// Serde adapter for `Option<Rat>`; `None` serializes as JSON null.
pub mod serde_wire_opt {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        r: &Option<Rat>,
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => ser.serialize_some(&to_wire(r)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<Option<Rat>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Option::<Raw>::deserialize(de)? {
            None => Ok(None),
            Some(Raw::Int(n)) => Ok(Some(rat_int(n))),
            Some(Raw::Str(s)) => from_wire(&s).map(Some).map_err(de::Error::custom),
        }
    }
}

/// Returns `r` rounded to the nearest integer; `r` must not be half-integral.
pub fn nearest_integer(r: &Rat) -> Result<BigInt> {
    let twice = r * BigRational::from(BigInt::from(2));
    if is_integer(&twice) && !is_integer(r) {
        return Err(Error::Internal(format!(
            "nearest integer of exact half {} is ambiguous",
            to_wire(r)
        )));
    }
    Ok(r.round().to_integer())
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_round_trip() {
        for (n, d, s) in [(1, 8, "1/8"), (0, 1, "0"), (-1, 2, "-1/2"), (3, 1, "3"), (2, -4, "-1/2")] {
            let r = rat(n, d);
            assert_eq!(to_wire(&r), s);
            assert_eq!(from_wire(s).unwrap(), r);
        }
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let x = rat(1, 6) + rat(1, 3);
        assert_eq!(to_wire(&x), "1/2");
        assert!(denominator_divides(&rat(3, 16), 16));
        assert!(!denominator_divides(&rat(1, 32), 16));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(from_wire("1/0").is_err());
    }
}
