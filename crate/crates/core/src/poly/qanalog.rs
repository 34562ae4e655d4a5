use super::{Coefficient, LaurentPoly, QtPoly};

/// The `(q,t)`-weight of a nonnegative integer: `1` for `b = 0`, otherwise
/// `(q^b - t^b)/(q - t) = sum_{i<b} q^i t^(b-1-i)`.
pub fn qt_weight<C: Coefficient>(b: u32) -> QtPoly<C> {
    if b == 0 {
        return QtPoly::one();
    }
    let mut p = QtPoly::zero();
    for i in 0..b {
        p.add_term((i, b - 1 - i), C::one());
    }
    p
}

/// `qt_weight(b)` at `t = q^-1`, i.e. `q^(1-b) [b]_{q^2}` for `b > 0`.
pub fn qt_weight_at_qinv<C: Coefficient>(b: u32) -> LaurentPoly<C> {
    if b == 0 {
        return LaurentPoly::one();
    }
    let mut p = LaurentPoly::zero();
    for i in 0..b as i64 {
        p.add_term(1 - b as i64 + 2 * i, C::one());
    }
    p
}

/// `[k]_{q^base} = 1 + q^base + ... + q^((k-1) base)`; `[0] = 0`.
pub fn q_bracket<C: Coefficient>(k: u32, base: u32) -> QtPoly<C> {
    assert!(base >= 1, "q_bracket base must be positive");
    let mut p = QtPoly::zero();
    for i in 0..k {
        p.add_term((i * base, 0), C::one());
    }
    p
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial<C: Coefficient>(n: u32) -> QtPoly<C> {
    (1..=n).map(|k| q_bracket(k, 1)).product()
}
