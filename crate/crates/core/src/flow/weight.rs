use num_bigint::BigInt;

use super::enumerate::IntegerFlow;
use super::sum::surplus_factor;
use crate::error::{Error, Result};
use crate::poly::qt_weight;
use crate::QTPolynomial;

/// `(-(1-t)(1-q))^{#nonzero - n} Π wt_{q,t}(f(i,j))`.
pub fn weight_qt(flow: &IntegerFlow) -> Result<QTPolynomial> {
    let support = flow.support();
    let n = flow.n();
    if support < n {
        return Err(Error::SupportTooSmall { support, n });
    }
    let mut w = surplus_factor().pow((support - n) as u32);
    for (_, _, v) in flow.entries() {
        w *= &qt_weight::<BigInt>(v as u32);
    }
    Ok(w)
}
