//! Cost scalars used by the dynamic programs and weighted primitives.
//!
//! Movement costs are non-negative integers. The tables are generic over any
//! unsigned primitive integer; the largest representable value doubles as the
//! `+inf` sentinel and all additions saturate into it.

use std::fmt::{Debug, Display};

use num_traits::{NumCast, PrimInt, SaturatingAdd, Unsigned};

pub trait CostValue:
    PrimInt + Unsigned + SaturatingAdd + NumCast + Debug + Display + Send + Sync + 'static
{
    /// The infeasibility sentinel.
    #[inline]
    fn infinity() -> Self {
        Self::max_value()
    }

    #[inline]
    fn is_infinite(self) -> bool {
        self == Self::max_value()
    }

    #[inline]
    fn is_finite(self) -> bool {
        !self.is_infinite()
    }

    /// Saturating sum; anything that reaches the sentinel stays infinite.
    #[inline]
    fn plus(self, other: Self) -> Self {
        <Self as SaturatingAdd>::saturating_add(&self, &other)
    }

    /// Converts a count, mapping values that do not fit to the sentinel.
    #[inline]
    fn from_count(count: usize) -> Self {
        match <Self as NumCast>::from(count) {
            Some(v) if v < Self::max_value() => v,
            _ => Self::infinity(),
        }
    }

    /// Widens a finite value to `u64`; `None` for the sentinel.
    #[inline]
    fn finite_u64(self) -> Option<u64> {
        if self.is_infinite() {
            None
        } else {
            self.to_u64()
        }
    }
}

impl<T> CostValue for T where
    T: PrimInt + Unsigned + SaturatingAdd + NumCast + Debug + Display + Send + Sync + 'static
{
}

/// `|a - b|` for counts.
#[inline]
pub(crate) fn abs_diff<C: CostValue>(a: usize, b: usize) -> C {
    C::from_count(a.abs_diff(b))
}
