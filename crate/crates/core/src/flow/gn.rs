//! Gorsky–Negut style weights: one distinguished column per row gets
//! `wt(f+1) - wt(f)`, the columns strictly between it and the sink get
//! `-(1-t)(1-q) wt(f)`, and everything else contributes `1`.

use num_bigint::BigInt;
use serde::Serialize;

use super::enumerate::{IntegerFlow, NetflowVector};
use super::sum::{surplus_factor, weighted_flow_sum};
use crate::error::Result;
use crate::graph::ThresholdGraph;
use crate::poly::qt_weight;
use crate::QTPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GnVariant {
    /// Distinguished edge `(i, i-1)`.
    Gn,
    /// Distinguished edge `(i, bar_d_i - 1)`, the largest lower neighbour.
    GnThreshold,
}

fn distinguished(g: &ThresholdGraph, variant: GnVariant, i: usize) -> usize {
    match variant {
        GnVariant::Gn => i - 1,
        GnVariant::GnThreshold => g.outdegree(i) - 1,
    }
}

/// Factor contributed by a positive entry `f(i, j) = v`.
fn edge_factor(i: usize, j: usize, v: u64, col: usize, x: &QTPolynomial) -> QTPolynomial {
    let v = v as u32;
    if j == 0 {
        QTPolynomial::one()
    } else if j == col {
        if i > 1 {
            qt_weight::<BigInt>(v + 1) - qt_weight::<BigInt>(v)
        } else {
            QTPolynomial::one()
        }
    } else if j < col {
        x * &qt_weight::<BigInt>(v)
    } else {
        QTPolynomial::one()
    }
}

/// Weight of a single flow; used to cross-check [`gn_sum`].
pub fn gn_weight(g: &ThresholdGraph, variant: GnVariant, flow: &IntegerFlow) -> QTPolynomial {
    let x = surplus_factor();
    let mut w = QTPolynomial::one();
    for (i, j, v) in flow.entries() {
        w *= &edge_factor(i, j, v, distinguished(g, variant, i), &x);
    }
    w
}

/// `Σ_A wt'(A)` (or `wt''`) over the integer flows of `F_G(a)`.
///
/// Edges `(i, i-1)` missing from `G` simply carry zero flow, so the complete
/// variant is also defined on non-complete threshold graphs.
pub fn gn_sum(g: &ThresholdGraph, a: &NetflowVector, variant: GnVariant) -> Result<QTPolynomial> {
    let x = surplus_factor();
    weighted_flow_sum(
        &g.dag(),
        a,
        |i, j, v| edge_factor(i, j, v, distinguished(g, variant, i), &x),
        |_| QTPolynomial::one(),
    )
}
