//! Exact rational arithmetic for distance invariants.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

pub type Rational = Ratio<i64>;

pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A rational rendered as `"p/q"` with a float convenience field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExactValue {
    #[serde(serialize_with = "ser_ratio")]
    pub exact: Rational,
    pub value: f64,
}

impl From<Rational> for ExactValue {
    fn from(r: Rational) -> Self {
        ExactValue { exact: r, value: to_f64(r) }
    }
}

pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_ratio(r))
}
