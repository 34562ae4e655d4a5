//! Exact polynomial arithmetic in `q` and `t`.
//!
//! [`QtPoly`] is a sparse bivariate polynomial with nonnegative exponents and
//! [`LaurentPoly`] a sparse univariate Laurent polynomial in `q`. Both are
//! generic over the coefficient ring; the crate root fixes the coefficient to
//! [`num_bigint::BigInt`] for everything that touches combinatorial sums.
//! There is no division anywhere.

mod laurent;
mod qanalog;
mod qt;
mod text;

use std::fmt;

use num_traits::{Num, Signed};

pub use laurent::LaurentPoly;
pub use qanalog::{q_bracket, q_factorial, qt_weight, qt_weight_at_qinv};
pub use qt::{QtPoly, Slot, Specialization};
pub use text::ParsePolyError;

/// Coefficient ring for the polynomial types.
///
/// Anything signed with exact `+`, `-`, `*` that embeds the machine integers
/// qualifies: `BigInt`, `i64`, `i128`.
pub trait Coefficient:
    Num + Signed + From<i64> + Clone + fmt::Debug + fmt::Display + Send + Sync
{
}

impl<T> Coefficient for T where
    T: Num + Signed + From<i64> + Clone + fmt::Debug + fmt::Display + Send + Sync
{
}

/// Symmetry and positivity flags of a bivariate polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
    pub symmetric: bool,
    pub nonnegative: bool,
}

pub fn check_flags<C: Coefficient>(p: &QtPoly<C>) -> Flags {
    Flags {
        symmetric: p.is_symmetric(),
        nonnegative: p.is_nonnegative(),
    }
}
