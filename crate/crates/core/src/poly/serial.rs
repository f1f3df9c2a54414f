use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactPoly;

#[derive(Serialize, Deserialize)]
struct Wire {
    coeffs: Vec<(String, String)>,
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs()
            .into_iter()
            .map(|c| (c.numer().to_string(), c.denom().to_string()))
            .collect();
        Wire { coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        let coeffs = wire
            .coeffs
            .into_iter()
            .map(|(n, d)| {
                let n: BigInt = n.parse().map_err(D::Error::custom)?;
                let d: BigInt = d.parse().map_err(D::Error::custom)?;
                if d.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(BigRational::new(n, d))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn wire_format_is_numerator_denominator_strings() {
        let p = ExactPoly::from_coeffs(vec![
            BigRational::new(BigInt::from(-1), BigInt::from(64)),
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(3)),
        ]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"coeffs":[["-1","64"],["0","1"],["3","1"]]}"#);
    }

    #[test]
    fn rejects_zero_denominator() {
        let r: Result<ExactPoly, _> = serde_json::from_str(r#"{"coeffs":[["1","0"]]}"#);
        assert!(r.is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(c in prop::collection::vec((-1000i64..1000, 1i64..50), 0..12)) {
            let p = ExactPoly::from_coeffs(
                c.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect(),
            );
            let back: ExactPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
