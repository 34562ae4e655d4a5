//! Weighted sums over the lattice points of a flow polytope.
//!
//! Every weight used here factors over vertices: the flow leaving vertex `i`
//! contributes `vertex(#nonzero out-edges of i) * Π edge(i, j, f(i,j))`. The
//! sum is evaluated by the same vertex-by-vertex recursion as
//! [`enumerate_flows`](super::enumerate_flows), memoized on the inflow
//! profile of the vertices not yet processed.

use std::collections::HashMap;
use std::ops::{AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::enumerate::{next_composition, NetflowVector};
use crate::error::Result;
use crate::graph::Dag;
use crate::poly::{qt_weight, Specialization};
use crate::{QLaurent, QTPolynomial};

/// Commutative ring the flow sums are evaluated in.
pub trait FlowRing: Clone + Zero + One + for<'a> AddAssign<&'a Self> {
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl<R> FlowRing for R
where
    R: Clone + Zero + One + for<'a> AddAssign<&'a R>,
    for<'a> &'a R: Mul<&'a R, Output = R>,
{
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

struct Summer<'g, R, E, V> {
    dag: &'g Dag,
    a: &'g [u64],
    edge: E,
    vertex: V,
    edge_cache: HashMap<(usize, usize, u64), R>,
    vertex_cache: HashMap<usize, R>,
    memo: HashMap<(usize, Vec<u64>), R>,
}

impl<R, E, V> Summer<'_, R, E, V>
where
    R: FlowRing,
    E: Fn(usize, usize, u64) -> R,
    V: Fn(usize) -> R,
{
    fn edge_factor(&mut self, i: usize, j: usize, v: u64) -> R {
        if let Some(r) = self.edge_cache.get(&(i, j, v)) {
            return r.clone();
        }
        let r = (self.edge)(i, j, v);
        self.edge_cache.insert((i, j, v), r.clone());
        r
    }

    fn vertex_factor(&mut self, nz: usize) -> R {
        if let Some(r) = self.vertex_cache.get(&nz) {
            return r.clone();
        }
        let r = (self.vertex)(nz);
        self.vertex_cache.insert(nz, r.clone());
        r
    }

    /// Sum over completions of vertices `v, v-1, ..., 1` given `inflow[1..=v]`.
    fn solve(&mut self, v: usize, inflow: &[u64]) -> R {
        if v == 0 {
            return R::one();
        }
        let key = (v, inflow[..=v].to_vec());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let amount = self.a[v - 1] + inflow[v];
        let outs = self.dag.out(v).to_vec();
        let mut total = R::zero();
        if outs.is_empty() {
            if amount == 0 {
                total = self.solve(v - 1, inflow);
            }
        } else {
            let mut comp = vec![0; outs.len()];
            comp[0] = amount;
            let mut child = inflow.to_vec();
            loop {
                let mut factor = R::one();
                let mut nz = 0;
                for (&j, &c) in outs.iter().zip(&comp) {
                    if c > 0 {
                        nz += 1;
                        let e = self.edge_factor(v, j, c);
                        factor = factor.mul_ref(&e);
                    }
                    child[j] = inflow[j] + c;
                }
                if !factor.is_zero() {
                    let vf = self.vertex_factor(nz);
                    factor = factor.mul_ref(&vf);
                    let rest = self.solve(v - 1, &child);
                    total += &factor.mul_ref(&rest);
                }
                if !next_composition(&mut comp) {
                    break;
                }
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `Σ_A vertex(nz_i) Π edge(i, j, f(i,j))` over all integer flows `A` of
/// `F_G(a)`. Edge factors are only requested for positive flow values.
pub fn weighted_flow_sum<R, E, V>(dag: &Dag, a: &NetflowVector, edge: E, vertex: V) -> Result<R>
where
    R: FlowRing,
    E: Fn(usize, usize, u64) -> R,
    V: Fn(usize) -> R,
{
    a.check_len(dag.n())?;
    let mut s = Summer {
        dag,
        a: a.as_slice(),
        edge,
        vertex,
        edge_cache: HashMap::new(),
        vertex_cache: HashMap::new(),
        memo: HashMap::new(),
    };
    let inflow = vec![0; dag.n() + 1];
    Ok(s.solve(dag.n(), &inflow))
}

/// `-(1-t)(1-q) = -1 + q + t - qt`, the factor per surplus nonzero entry.
pub fn surplus_factor() -> QTPolynomial {
    let one = QTPolynomial::one();
    -(&(&one - &QTPolynomial::t()) * &(&one - &QTPolynomial::q()))
}

/// `Ehr_{q,t}(F_G(a)) = Σ_A (-(1-t)(1-q))^{#nonzero - n} Π wt_{q,t}(f(i,j))`.
pub fn ehrhart_qt(dag: &Dag, a: &NetflowVector) -> Result<QTPolynomial> {
    let x = surplus_factor();
    weighted_flow_sum(
        dag,
        a,
        |_, _, v| qt_weight::<BigInt>(v as u32),
        |nz| x.pow(nz as u32 - 1),
    )
}

/// `Ehr_{q,t}` with `t` specialized before summing. Equal to
/// `ehrhart_qt(..).specialize(mode)` since specialization is a ring map.
pub fn ehrhart_specialized(dag: &Dag, a: &NetflowVector, mode: Specialization) -> Result<QLaurent> {
    let x = surplus_factor().specialize(mode);
    weighted_flow_sum(
        dag,
        a,
        |_, _, v| qt_weight::<BigInt>(v as u32).specialize(mode),
        |nz| x.pow(nz as u32 - 1),
    )
}

/// Number of lattice points of `F_G(a)`.
pub fn count_flows(dag: &Dag, a: &NetflowVector) -> Result<BigInt> {
    weighted_flow_sum(dag, a, |_, _, _| BigInt::one(), |_| BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_unit_netflow() {
        let e = ehrhart_qt(&Dag::complete(2), &NetflowVector::ones(2)).unwrap();
        assert_eq!(e.to_string(), "q + t + 1");
        assert_eq!(count_flows(&Dag::complete(2), &NetflowVector::ones(2)).unwrap(), BigInt::from(2));
    }

    #[test]
    fn tesler_counts() {
        let expected = [1u32, 2, 7, 40, 357];
        for (n, &want) in (1..=5).zip(&expected) {
            assert_eq!(
                count_flows(&Dag::complete(n), &NetflowVector::ones(n)).unwrap(),
                BigInt::from(want)
            );
        }
    }

    #[test]
    fn empty_polytope_sums_to_zero() {
        let g = Dag::from_edges(2, [(1, 0)]).unwrap();
        assert!(ehrhart_qt(&g, &NetflowVector::ones(2)).unwrap().is_zero());
    }
}
