use std::fmt;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Exact integer scalar used by the counting machinery.
///
/// All sequence values and class counts in this crate grow like `2^n`, so the
/// default instantiation is [`num_bigint::BigInt`] (aliased as
/// [`crate::Count`]). The trait is also satisfied by the signed primitive
/// integers, which is convenient for cross-checking small prefixes in tests.
pub trait CountInt: Integer + Signed + FromPrimitive + Clone + fmt::Debug + fmt::Display {}

impl<T> CountInt for T where T: Integer + Signed + FromPrimitive + Clone + fmt::Debug + fmt::Display {}

/// `2^exp` as a `T`.
pub(crate) fn pow2<T: CountInt>(exp: usize) -> T {
    let two = T::from_u32(2).unwrap();
    let mut out = T::one();
    for _ in 0..exp {
        out = out * two.clone();
    }
    out
}
