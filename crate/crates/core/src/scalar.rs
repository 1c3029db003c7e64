//! Coefficient fields.
//!
//! Everything above this module is generic over [`Scalar`]. The exact
//! instantiations ([`Ratio<i64>`], [`Ratio<i128>`], [`BigRational`]) are the
//! ones used for real computations; `f64`/`f32` are supported for quick
//! numerical cross-checks and decide zero with a tolerance.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num};

/// A field usable as the coefficient ring of path algebras and modules.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
    /// Whether rank decisions are exact for this type.
    const EXACT: bool;

    /// Zero test used by elimination. Exact types compare against zero.
    fn is_negligible(&self) -> bool;

    fn from_int(v: i64) -> Self;
}

macro_rules! exact_ratio {
    ($t:ty) => {
        impl Scalar for Ratio<$t> {
            const EXACT: bool = true;

            fn is_negligible(&self) -> bool {
                num_traits::Zero::is_zero(self)
            }

            fn from_int(v: i64) -> Self {
                Ratio::from_integer(<$t>::from_i64(v).expect("integer fits"))
            }
        }
    };
}

exact_ratio!(i64);
exact_ratio!(i128);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn from_int(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-4
    }

    fn from_int(v: i64) -> Self {
        v as f32
    }
}
