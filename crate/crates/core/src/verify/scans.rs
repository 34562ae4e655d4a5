use rayon::prelude::*;
use serde::Serialize;

use super::{run, Failure, VerificationReport};
use crate::flow::ehrhart_qt;
use crate::graph::{PosetPn, ThresholdGraph};
use crate::{NetflowVector, QTPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conjecture {
    /// `Ehr_{q,t}(F_G) ∈ N[q,t]`.
    Positivity,
    /// `Ehr_{q,t}(F_{K_{n+1}}) - Ehr_{q,t}(F_G) ∈ N[q,t]`.
    CompleteMinusG,
    /// `Ehr_{q,t}(F_G) - Ehr_{q,t}(F_H) ∈ N[q,t]` for every cover `H ⋖ G`.
    PosetCovers,
}

impl Conjecture {
    fn id(self) -> &'static str {
        match self {
            Self::Positivity => "positivity",
            Self::CompleteMinusG => "k-minus-g",
            Self::PosetCovers => "poset",
        }
    }
}

fn unit_ehr(g: &ThresholdGraph) -> QTPolynomial {
    ehrhart_qt(&g.dag(), &NetflowVector::ones(g.n())).expect("length matches")
}

fn negative(beta: &[u8], a: &[u64], p: &QTPolynomial, what: String) -> Vec<Failure> {
    if p.is_nonnegative() {
        Vec::new()
    } else {
        vec![Failure { beta: beta.to_vec(), a: a.to_vec(), lhs: p.to_string(), rhs: what }]
    }
}

/// Coefficient-sign scan over every connected threshold graph with
/// `n <= n_max` and netflow all ones. A failure's `lhs` is the offending
/// polynomial and `rhs` names what it was supposed to be.
pub fn scan_conjectures(which: Conjecture, n_max: usize) -> VerificationReport {
    let mut cases: Vec<(ThresholdGraph, Option<ThresholdGraph>)> = Vec::new();
    let mut ehr = std::collections::HashMap::new();
    for n in 1..=n_max {
        let graphs = ThresholdGraph::all_connected(n);
        let values: Vec<QTPolynomial> = graphs.par_iter().map(unit_ehr).collect();
        for (g, e) in graphs.iter().zip(values) {
            ehr.insert(g.beta().to_vec(), e);
        }
        match which {
            Conjecture::Positivity => cases.extend(graphs.into_iter().map(|g| (g, None))),
            Conjecture::CompleteMinusG => {
                let k = ThresholdGraph::complete(n).expect("n >= 1");
                cases.extend(graphs.into_iter().map(|g| (k.clone(), Some(g))));
            }
            Conjecture::PosetCovers => {
                let p = PosetPn::new(n);
                for &(h, g) in p.covers() {
                    cases.push((p.element(g).clone(), Some(p.element(h).clone())));
                }
            }
        }
    }
    run(which.id(), None, &cases, |(g, h)| {
        let ones = vec![1; g.n()];
        let top = &ehr[g.beta()];
        match h {
            None => negative(g.beta(), &ones, top, "N[q,t]".into()),
            Some(h) => {
                let diff = top - &ehr[h.beta()];
                let what = format!("N[q,t] (minus beta {:?})", h.beta());
                negative(g.beta(), &ones, &diff, what)
            }
        }
    })
}

/// Positivity of `Ehr_{q,t}(F_G(a))` for one graph and netflow.
pub fn scan_instance_positivity(g: &ThresholdGraph, a: &NetflowVector) -> VerificationReport {
    run("positivity", None, &[()], |_| {
        let e = ehrhart_qt(&g.dag(), a).expect("length matches");
        negative(g.beta(), a.as_slice(), &e, "N[q,t]".into())
    })
}

/// `S_{q,t}(G) = Σ_{H ⪯ G} μ(H, G) Ehr_{q,t}(F_H)` with netflow all ones.
pub fn s_qt(p: &PosetPn, g: usize) -> QTPolynomial {
    let below = p.down_set(g);
    let terms: Vec<QTPolynomial> = below
        .par_iter()
        .map(|&h| {
            let mu = p.moebius(h, g).expect("h below g");
            unit_ehr(p.element(h)).scale(&mu.into())
        })
        .collect();
    terms.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scans_pass() {
        for c in [Conjecture::Positivity, Conjecture::CompleteMinusG, Conjecture::PosetCovers] {
            let r = scan_conjectures(c, 5);
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn star_has_trivial_refinement() {
        let p = PosetPn::new(4);
        assert!(s_qt(&p, 0).is_one());
    }
}
