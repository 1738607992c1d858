use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Entry type of the block-matrix model.
///
/// Exact types compare with `==`; floating types compare up to
/// [`Scalar::tolerance`], which is also the Frobenius bound used when a
/// constructed result is verified.
pub trait Scalar:
    Num + Signed + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    const EXACT: bool;

    fn tolerance() -> f64;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn is_negligible(&self) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.abs().to_f64().is_some_and(|v| v <= Self::tolerance())
        }
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn parse_json(v: &Value) -> Result<Self>;

    fn to_json(&self) -> Value;
}

fn parse_ratio(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn tolerance() -> f64 {
        0.0
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(num.into(), den.into())
    }

    fn parse_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_ratio(s),
            Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
            other => Err(Error::Parse(format!(
                "exact entries must be integers or \"num/den\" strings, got {other}"
            ))),
        }
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn tolerance() -> f64 {
                $tol
            }

            fn from_ratio(num: i64, den: i64) -> Self {
                (num as f64 / den as f64) as $t
            }

            fn parse_json(v: &Value) -> Result<Self> {
                match v {
                    Value::Number(n) => Ok(n.as_f64().unwrap_or(f64::NAN) as $t),
                    Value::String(s) => match s.parse::<$t>() {
                        Ok(x) => Ok(x),
                        Err(_) => Ok(parse_ratio(s)?.to_f64().unwrap_or(f64::NAN) as $t),
                    },
                    other => Err(Error::Parse(format!("expected a number, got {other}"))),
                }
            }

            fn to_json(&self) -> Value {
                serde_json::Number::from_f64(*self as f64).map_or(Value::Null, Value::Number)
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);
