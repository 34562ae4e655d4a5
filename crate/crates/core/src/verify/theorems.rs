use num_bigint::BigInt;

use super::{run, Failure, Instance, Plan, VerificationReport};
use crate::flow::ehrhart_specialized;
use crate::graph::ThresholdGraph;
use crate::poly::{q_bracket, q_factorial, Slot, Specialization};
use crate::tree::{enumerate_spanning_trees, inversion_enumerator, tree_weight, tutte};
use crate::{NetflowVector, QLaurent, QTPolynomial};

fn failure(inst: &Instance, lhs: impl ToString, rhs: impl ToString) -> Failure {
    Failure {
        beta: inst.graph.beta().to_vec(),
        a: inst.a.as_slice().to_vec(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn compare<T: PartialEq + ToString>(inst: &Instance, lhs: &T, rhs: &T, out: &mut Vec<Failure>) {
    if lhs != rhs {
        out.push(failure(inst, lhs.to_string(), rhs.to_string()));
    }
}

fn ehr_at(inst: &Instance, mode: Specialization) -> QLaurent {
    ehrhart_specialized(&inst.graph.dag(), &inst.a, mode).expect("plan netflows match their graphs")
}

/// `Ehr_{q,1} = Σ_T w(T) = t_{G~}(1, q)`, plus `= I_G(q)` when `a = 1`.
pub fn verify_t1(plan: &Plan) -> VerificationReport {
    run("t1", plan.seed, &plan.instances, |inst| {
        let mut out = Vec::new();
        let dag = inst.graph.dag();
        let lhs = ehr_at(inst, Specialization::TOne).to_poly().expect("t = 1 leaves a polynomial");
        let trees: QTPolynomial = enumerate_spanning_trees(&dag).map(|t| tree_weight(&t, &inst.a)).sum();
        compare(inst, &lhs, &trees, &mut out);
        let inflated = inst.graph.inflate(inst.a.as_slice()).expect("validated netflow");
        let t = tutte(&inflated).expect("connected").substitute(Slot::Const(1), Slot::Q);
        compare(inst, &lhs, &t, &mut out);
        if inst.a.is_all_ones() {
            compare(inst, &lhs, &inversion_enumerator(&dag), &mut out);
        }
        out
    })
}

/// `Π_i q^{bar_d_i (a_i - 1)} [bar_d_i]_q`.
pub fn t0_product(g: &ThresholdGraph, a: &NetflowVector) -> QTPolynomial {
    (1..=g.n())
        .map(|i| {
            let d = g.outdegree(i) as u32;
            q_bracket::<BigInt>(d, 1).mul_monomial(d * (a.at(i) as u32 - 1), 0)
        })
        .product()
}

fn sum_i_ai(a: &NetflowVector) -> u64 {
    (1..=a.len()).map(|i| i as u64 * a.at(i)).sum()
}

/// `Ehr_{q,0}` against the product formula, and against
/// `q^{Σ i a_i - C(n+1,2)} [n]_q!` on complete graphs.
pub fn verify_t0(plan: &Plan) -> VerificationReport {
    run("t0", plan.seed, &plan.instances, |inst| {
        let mut out = Vec::new();
        let lhs = ehr_at(inst, Specialization::TZero);
        let rhs = QLaurent::from(&t0_product(&inst.graph, &inst.a));
        compare(inst, &lhs, &rhs, &mut out);
        if inst.graph.is_complete() {
            let n = inst.graph.n() as u64;
            let shift = sum_i_ai(&inst.a) - n * (n + 1) / 2;
            let cor = QLaurent::from(&q_factorial::<BigInt>(n as u32)).shift(shift as i64);
            compare(inst, &lhs, &cor, &mut out);
        }
        out
    })
}

/// `(F, Π b_i(q))` with `F = Σ bar_d_i a_i - n` and
///
/// ```text
/// b_i = [(i+1) a_i + a_{i+1} + ... + a_{d_i}]_q   if d_i > i
/// b_i = [a_i]_{q^{i+1}}                           if d_i = i
/// b_i = [a_i]_{q^{d_i+1}} [d_i]_q                 if d_i < i
/// ```
pub fn qinv_product(g: &ThresholdGraph, a: &NetflowVector) -> (i64, QTPolynomial) {
    let n = g.n();
    let f: u64 = (1..=n).map(|i| g.outdegree(i) as u64 * a.at(i)).sum::<u64>() - n as u64;
    let prod = (1..=n)
        .map(|i| {
            let d = g.degrees()[i];
            let ai = a.at(i) as u32;
            match d.cmp(&i) {
                std::cmp::Ordering::Greater => {
                    let k = (i as u64 + 1) * a.at(i) + (i + 1..=d).map(|j| a.at(j)).sum::<u64>();
                    q_bracket::<BigInt>(k as u32, 1)
                }
                std::cmp::Ordering::Equal => q_bracket(ai, i as u32 + 1),
                std::cmp::Ordering::Less => {
                    &q_bracket::<BigInt>(ai, d as u32 + 1) * &q_bracket::<BigInt>(d as u32, 1)
                }
            }
        })
        .product();
    (f as i64, prod)
}

/// `q^F Ehr_{q,q^-1} = Π b_i(q)`; on complete graphs also
/// `q^F Ehr_{q,q^-1} = [a_n]_{q^{n+1}} Π_{i<n} [(i+1) a_i + Σ_{j>i} a_j]_q`,
/// and for `a = 1` also `q^{C(n,2)} Ehr_{q,q^-1} = [n+1]_q^{n-1}`.
pub fn verify_qinv(plan: &Plan) -> VerificationReport {
    run("qinv", plan.seed, &plan.instances, |inst| {
        let mut out = Vec::new();
        let ehr = ehr_at(inst, Specialization::TQInv);
        let (f, prod) = qinv_product(&inst.graph, &inst.a);
        compare(inst, &ehr.shift(f), &QLaurent::from(&prod), &mut out);
        if inst.graph.is_complete() {
            let n = inst.graph.n();
            let a = &inst.a;
            let mut cor = q_bracket::<BigInt>(a.at(n) as u32, n as u32 + 1);
            for i in 1..n {
                let k = (i as u64 + 1) * a.at(i) + (i + 1..=n).map(|j| a.at(j)).sum::<u64>();
                cor *= &q_bracket::<BigInt>(k as u32, 1);
            }
            let f_cor = sum_i_ai(a) as i64 - n as i64;
            compare(inst, &ehr.shift(f_cor), &QLaurent::from(&cor), &mut out);
            if a.is_all_ones() {
                let rhs = q_bracket::<BigInt>(n as u32 + 1, 1).pow(n as u32 - 1);
                let shift = (n * (n - 1) / 2) as i64;
                compare(inst, &ehr.shift(shift), &QLaurent::from(&rhs), &mut out);
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_exhaustive_plans_pass() {
        let plan = Plan::exhaustive(4, 2);
        for report in [verify_t1(&plan), verify_t0(&plan), verify_qinv(&plan)] {
            assert!(report.passed(), "{}: {:?}", report.theorem, report.failures.first());
            assert_eq!(report.instances, plan.len());
        }
    }

    #[test]
    fn single_edge() {
        let g = ThresholdGraph::from_binary(&[1]).unwrap();
        let a = NetflowVector::new(&[5]).unwrap();
        assert_eq!(t0_product(&g, &a), QTPolynomial::q_pow(4));
        let (f, prod) = qinv_product(&g, &a);
        assert_eq!(f, 4);
        assert_eq!(prod, q_bracket(5, 2));
    }
}
