//! Machine formats: polynomials as sorted term arrays, rationals as
//! decimal strings.

use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use super::LaurentPoly;

/// One polynomial term on the wire: `{"coeff": "-3", "e_q": 2, "e_Q": [1, -1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub e_q: i64,
    #[serde(rename = "e_Q")]
    pub e_params: Vec<i64>,
}

impl LaurentPoly {
    /// Terms in the canonical (e_q, then e_Q lexicographic) order.
    pub fn to_terms_json(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(key, c)| TermJson {
                coeff: c.to_string(),
                e_q: key.e_q,
                e_params: key.e_params.clone(),
            })
            .collect()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self.to_terms_json();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for t in &terms {
            seq.serialize_element(t)?;
        }
        seq.end()
    }
}

/// An exact rational on the wire: `{"num": "2", "den": "3"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(v: &BigRational) -> Self {
        RationalJson {
            num: v.numer().to_string(),
            den: v.denom().to_string(),
        }
    }
}
