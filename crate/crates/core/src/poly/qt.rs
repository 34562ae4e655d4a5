use std::collections::BTreeMap;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{Coefficient, LaurentPoly};

/// Exponent pair `(e_q, e_t)`.
pub type Exponents = (u32, u32);

/// Sparse polynomial in `q` and `t`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QtPoly<C> {
    terms: BTreeMap<Exponents, C>,
}

/// Substitution for `t` producing a Laurent polynomial in `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `t := 1`
    TOne,
    /// `t := 0`
    TZero,
    /// `t := q^-1`
    TQInv,
}

/// Target of a variable substitution: an integer constant, `q`, or `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Const(i64),
    Q,
    T,
}

impl<C: Coefficient> QtPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(C::from(c))
    }

    pub fn monomial(c: C, e_q: u32, e_t: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((e_q, e_t), c);
        p
    }

    pub fn q() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    /// `q^e`
    pub fn q_pow(e: u32) -> Self {
        Self::monomial(C::one(), e, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e_q: u32, e_t: u32) -> C {
        self.terms.get(&(e_q, e_t)).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c * q^e_q * t^e_t` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, exps: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Terms in storage order (ascending `(e_q, e_t)`).
    pub fn iter(&self) -> impl Iterator<Item = (Exponents, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Terms in canonical order: descending total degree, then descending `e_q`.
    pub fn canonical_terms(&self) -> Vec<(Exponents, &C)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by_key(|(e, _)| std::cmp::Reverse((e.0 + e.1, e.0)));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    /// Whether the polynomial mentions `t` at all.
    pub fn is_univariate_q(&self) -> bool {
        self.terms.keys().all(|&(_, et)| et == 0)
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(a, b), c)| self.terms.get(&(b, a)) == Some(c))
    }

    /// True when every stored coefficient is positive (vacuously for zero).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn mul_monomial(&self, e_q: u32, e_t: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + e_q, b + e_t), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c.clone() * k.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, q: &C, t: &C) -> C {
        let mut acc = C::zero();
        for (&(a, b), c) in &self.terms {
            acc = acc + c.clone() * num_traits::pow(q.clone(), a as usize) * num_traits::pow(t.clone(), b as usize);
        }
        acc
    }

    /// Substitutes `t` according to `mode`, term by term.
    pub fn specialize(&self, mode: Specialization) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            let e = match mode {
                Specialization::TOne => a as i64,
                Specialization::TZero if b > 0 => continue,
                Specialization::TZero => a as i64,
                Specialization::TQInv => a as i64 - b as i64,
            };
            out.add_term(e, c.clone());
        }
        out
    }

    /// Simultaneous substitution `q := x`, `t := y`.
    pub fn substitute(&self, x: Slot, y: Slot) -> Self {
        let image = |s: Slot, e: u32| -> Self {
            match s {
                Slot::Const(v) => Self::from_i64(v).pow(e),
                Slot::Q => Self::monomial(C::one(), e, 0),
                Slot::T => Self::monomial(C::one(), 0, e),
            }
        };
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out += (&image(x, a) * &image(y, b)).scale(c);
        }
        out
    }

    /// Lossless view as a Laurent polynomial; `None` if `t` occurs.
    pub fn to_laurent(&self) -> Option<LaurentPoly<C>> {
        if !self.is_univariate_q() {
            return None;
        }
        Some(self.specialize(Specialization::TZero))
    }
}

impl<C: Coefficient> Default for QtPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Zero for QtPoly<C> {
    fn zero() -> Self {
        QtPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for QtPoly<C> {
    fn one() -> Self {
        QtPoly::one()
    }
}

impl<'a, C: Coefficient> Add<&'a QtPoly<C>> for &QtPoly<C> {
    type Output = QtPoly<C>;
    fn add(self, rhs: &'a QtPoly<C>) -> QtPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for QtPoly<C> {
    type Output = QtPoly<C>;
    fn add(mut self, rhs: QtPoly<C>) -> QtPoly<C> {
        if self.len() < rhs.len() {
            let mut r = rhs;
            r += &self;
            return r;
        }
        self += &rhs;
        self
    }
}

impl<'a, C: Coefficient> AddAssign<&'a QtPoly<C>> for QtPoly<C> {
    fn add_assign(&mut self, rhs: &'a QtPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Coefficient> AddAssign for QtPoly<C> {
    fn add_assign(&mut self, rhs: QtPoly<C>) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a, C: Coefficient> SubAssign<&'a QtPoly<C>> for QtPoly<C> {
    fn sub_assign(&mut self, rhs: &'a QtPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<'a, C: Coefficient> Sub<&'a QtPoly<C>> for &QtPoly<C> {
    type Output = QtPoly<C>;
    fn sub(self, rhs: &'a QtPoly<C>) -> QtPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for QtPoly<C> {
    type Output = QtPoly<C>;
    fn sub(mut self, rhs: QtPoly<C>) -> QtPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for QtPoly<C> {
    type Output = QtPoly<C>;
    fn neg(self) -> QtPoly<C> {
        QtPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Neg for &QtPoly<C> {
    type Output = QtPoly<C>;
    fn neg(self) -> QtPoly<C> {
        -(self.clone())
    }
}

impl<'a, C: Coefficient> Mul<&'a QtPoly<C>> for &QtPoly<C> {
    type Output = QtPoly<C>;
    fn mul(self, rhs: &'a QtPoly<C>) -> QtPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return QtPoly::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let mut out = QtPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for QtPoly<C> {
    type Output = QtPoly<C>;
    fn mul(self, rhs: QtPoly<C>) -> QtPoly<C> {
        &self * &rhs
    }
}

impl<'a, C: Coefficient> MulAssign<&'a QtPoly<C>> for QtPoly<C> {
    fn mul_assign(&mut self, rhs: &'a QtPoly<C>) {
        *self = &*self * rhs;
    }
}

impl<C: Coefficient> Sum for QtPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = QtPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl<C: Coefficient> Product for QtPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = QtPoly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = QtPoly<i64>;

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = P::q() + P::t();
        let b = P::q() - P::t();
        let s = &a + &b;
        assert_eq!(s, P::monomial(2, 1, 0));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn annihilator_and_distributivity() {
        let a = P::q() + P::t();
        assert!((&a * &P::zero()).is_zero());
        let prod = (P::one() + P::q()) * (P::one() + P::t());
        let expected = P::one() + P::q() + P::t() + P::monomial(1, 1, 1);
        assert_eq!(prod, expected);
    }

    #[test]
    fn specialize_modes() {
        let w = P::monomial(1, 2, 0) + P::monomial(1, 1, 1) + P::monomial(1, 0, 2);
        let one = w.specialize(Specialization::TOne);
        assert_eq!(one.coeff(0), 1);
        assert_eq!(one.coeff(1), 1);
        assert_eq!(one.coeff(2), 1);
        let zero = w.specialize(Specialization::TZero);
        assert_eq!(zero, LaurentPoly::monomial(1, 2));
        let qinv = w.specialize(Specialization::TQInv);
        assert_eq!(qinv, LaurentPoly::monomial(1, 2) + LaurentPoly::one() + LaurentPoly::monomial(1, -2));
    }

    #[test]
    fn flags() {
        let s = P::q() + P::t();
        assert!(s.is_symmetric() && s.is_nonnegative());
        let d = P::q() - P::t();
        assert!(!d.is_symmetric() && !d.is_nonnegative());
        assert!(P::zero().is_nonnegative());
    }

    #[test]
    fn substitute_swaps_and_evaluates() {
        let p = P::monomial(3, 2, 1) + P::from_i64(-1);
        assert_eq!(p.substitute(Slot::T, Slot::Q), p.swap_qt());
        assert_eq!(p.substitute(Slot::Const(1), Slot::Const(1)), P::from_i64(2));
        assert_eq!(p.eval(&2, &5), 3 * 4 * 5 - 1);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = P::one() + P::q() - P::t();
        let mut acc = P::one();
        for k in 0..6 {
            assert_eq!(x.pow(k), acc);
            acc = &acc * &x;
        }
    }
}
