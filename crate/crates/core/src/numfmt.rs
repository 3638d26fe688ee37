//! 17-significant-digit float formatting, enough to round-trip any `f64`.

use serde::Serializer;
use serde_json::value::RawValue;

pub fn sci17(x: f64) -> String {
    format!("{x:.16e}")
}

/// `serialize_with` helper emitting an `f64` as a 17-digit JSON number.
pub fn serialize_sci17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::Error;
    use serde::Serialize;
    if !x.is_finite() {
        return Err(S::Error::custom(format!("non-finite value {x} has no JSON form")));
    }
    RawValue::from_string(sci17(*x))
        .map_err(S::Error::custom)?
        .serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for &x in &[0.1, -0.0, 1.0 / 3.0, 5e-324, f64::MAX, -2.220446049250313e-16] {
            let s = sci17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(sci17(1.0), "1.0000000000000000e0");
    }
}
