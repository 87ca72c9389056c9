//! Exact scalar types for averaged eccentricities.
//!
//! Every average in this crate is a sum of integers divided by the order of a
//! tree, so the values live in `Ratio<I>` for a signed integer type `I`. The
//! computations are written once against [`ExactInt`]; [`crate::Rational`] and
//! [`crate::WideRational`] fix the integer width.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer types usable as the numerator/denominator of an exact average.
pub trait ExactInt:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Lossless conversion from a vertex count or distance sum.
    ///
    /// Panics if the value does not fit; at desk-scale orders this is
    /// unreachable for every provided alias.
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count does not fit the chosen integer type")
    }
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// `sum / n` in lowest terms.
pub fn mean_of<I: ExactInt>(sum: usize, n: usize) -> Ratio<I> {
    Ratio::new(I::from_count(sum), I::from_count(n))
}

/// Renders a ratio as `p/q`, always with an explicit denominator.
pub fn format_ratio<I: ExactInt>(r: &Ratio<I>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Six-decimal approximation used next to the exact form in reports.
pub fn format_decimal<I: ExactInt>(r: &Ratio<I>) -> String {
    let num = r.numer().to_f64().unwrap_or(f64::NAN);
    let den = r.denom().to_f64().unwrap_or(f64::NAN);
    format!("{:.6}", num / den)
}

/// Parses `p/q` or a bare integer.
pub fn parse_ratio<I: ExactInt>(text: &str) -> Option<Ratio<I>> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p = I::from_i64(p.trim().parse().ok()?)?;
            let q = I::from_i64(q.trim().parse().ok()?)?;
            if q.is_zero() {
                None
            } else {
                Some(Ratio::new(p, q))
            }
        }
        None => Some(Ratio::from_integer(I::from_i64(text.parse().ok()?)?)),
    }
}
