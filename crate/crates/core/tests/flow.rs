use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use qtflows::flow::{
    count_flows, ehrhart_specialized, enumerate_flows, flow_to_tesler, weight_qt, IntegerFlow,
    TeslerMatrix,
};
use qtflows::poly::Specialization;
use qtflows::verify::{Plan, DEFAULT_SEED};
use qtflows::{ehrhart_qt, Dag, NetflowVector, QTPolynomial, ThresholdGraph};

/// Oracle: every assignment of values in `0..=total` to the edges of `g`,
/// filtered by conservation.
fn brute_force_flows(g: &Dag, a: &NetflowVector) -> BTreeSet<Vec<(usize, usize, u64)>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let bound = a.total();
    let mut vals = vec![0u64; edges.len()];
    let mut out = BTreeSet::new();
    loop {
        let entries: Vec<(usize, usize, u64)> =
            edges.iter().zip(&vals).map(|(&(i, j), &v)| (i, j, v)).collect();
        let f = IntegerFlow::from_entries(g.n(), &entries).unwrap();
        if f.netflow().iter().zip(a.as_slice()).all(|(&x, &y)| x == y as i64) {
            out.insert(f.entries());
        }
        let mut k = 0;
        loop {
            if k == vals.len() {
                return out;
            }
            vals[k] += 1;
            if vals[k] <= bound {
                break;
            }
            vals[k] = 0;
            k += 1;
        }
    }
}

/// Oracle: upper-triangular matrices with hook sums `h`, built row by row.
fn tesler_matrices(h: &[u64]) -> BTreeSet<Vec<u64>> {
    fn rec(n: usize, h: &[u64], row: usize, m: &mut Vec<u64>, out: &mut BTreeSet<Vec<u64>>) {
        if row == n {
            out.insert(m.clone());
            return;
        }
        let above: u64 = (0..row).map(|i| m[i * n + row]).sum();
        let total = h[row] + above;
        let width = n - row;
        let mut parts = vec![0u64; width];
        fill(n, h, row, 0, total, &mut parts, m, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn fill(
        n: usize,
        h: &[u64],
        row: usize,
        k: usize,
        left: u64,
        parts: &mut Vec<u64>,
        m: &mut Vec<u64>,
        out: &mut BTreeSet<Vec<u64>>,
    ) {
        if k == parts.len() - 1 {
            parts[k] = left;
            for (c, &v) in parts.iter().enumerate() {
                m[row * n + row + c] = v;
            }
            rec(n, h, row + 1, m, out);
            for c in 0..parts.len() {
                m[row * n + row + c] = 0;
            }
            return;
        }
        for v in 0..=left {
            parts[k] = v;
            fill(n, h, row, k + 1, left - v, parts, m, out);
        }
    }
    let n = h.len();
    let mut out = BTreeSet::new();
    rec(n, h, 0, &mut vec![0; n * n], &mut out);
    out
}

fn netflows(n: usize, a_max: u64) -> Vec<NetflowVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u64>| (1..=a_max).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out.iter().map(|v| NetflowVector::from_positive(v).unwrap()).collect()
}

#[test]
fn enumeration_examples() {
    let k3 = Dag::complete(2);
    let flows: Vec<_> = enumerate_flows(&k3, &NetflowVector::ones(2)).unwrap().map(|f| f.entries()).collect();
    assert_eq!(flows, vec![vec![(1, 0, 1), (2, 0, 1)], vec![(1, 0, 2), (2, 1, 1)]]);
    let g = Dag::complete(4).without_edge(2, 1).unwrap();
    assert_eq!(enumerate_flows(&g, &NetflowVector::ones(4)).unwrap().count(), 15);
    let t = ThresholdGraph::from_degree_sequence(&[3, 3, 2, 2]).unwrap();
    let a = NetflowVector::new(&[3, 3, 3]).unwrap();
    assert_eq!(enumerate_flows(&t.dag(), &a).unwrap().count(), 16);
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=3 {
        for g in ThresholdGraph::all_connected(n) {
            for a in netflows(n, 2) {
                let dag = g.dag();
                let got: BTreeSet<_> = enumerate_flows(&dag, &a).unwrap().map(|f| f.entries()).collect();
                assert_eq!(got, brute_force_flows(&dag, &a), "beta {:?} a {a}", g.beta());
                assert_eq!(count_flows(&dag, &a).unwrap(), BigInt::from(got.len()));
            }
        }
    }
    let g = Dag::complete(4).without_edge(2, 1).unwrap();
    let a = NetflowVector::ones(4);
    assert_eq!(brute_force_flows(&g, &a).len(), 15);
}

#[test]
fn conservation_exhaustive() {
    for n in 1..=5 {
        for g in ThresholdGraph::all_connected(n) {
            let a = NetflowVector::ones(n);
            let dag = g.dag();
            let mut seen = BTreeSet::new();
            for f in enumerate_flows(&dag, &a).unwrap() {
                assert_eq!(f.netflow(), vec![1; n]);
                assert!(f.is_supported_by(&dag));
                assert!(f.support() >= n);
                assert!(seen.insert(f.entries()));
            }
        }
    }
}

#[test]
fn tesler_counting_sequence() {
    let expected = [1usize, 2, 7, 40, 357];
    for (n, &want) in (1..=5).zip(&expected) {
        assert_eq!(tesler_matrices(&vec![1; n]).len(), want);
        assert_eq!(enumerate_flows(&Dag::complete(n), &NetflowVector::ones(n)).unwrap().count(), want);
    }
}

#[test]
fn tesler_bijection() {
    for n in 1..=4 {
        for a in netflows(n, 2) {
            let images: Vec<TeslerMatrix> =
                enumerate_flows(&Dag::complete(n), &a).unwrap().map(|f| flow_to_tesler(&f)).collect();
            let set: BTreeSet<Vec<u64>> = images.iter().map(|m| m.row_major().to_vec()).collect();
            assert_eq!(set.len(), images.len(), "not injective at a = {a}");
            let mut hooks: Vec<u64> = a.as_slice().to_vec();
            hooks.reverse();
            assert_eq!(set, tesler_matrices(&hooks), "image differs at a = {a}");
            for m in &images {
                assert_eq!(m.hook_sums(), hooks.iter().map(|&x| x as i64).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn tesler_examples() {
    let f = IntegerFlow::from_entries(2, &[(1, 0, 1), (2, 0, 1)]).unwrap();
    let m = flow_to_tesler(&f);
    assert_eq!((m.get(1, 1), m.get(1, 2), m.get(2, 2)), (1, 0, 1));
    let f = IntegerFlow::from_entries(2, &[(1, 0, 2), (2, 1, 1)]).unwrap();
    let m = flow_to_tesler(&f);
    assert_eq!((m.get(1, 1), m.get(1, 2), m.get(2, 2)), (0, 1, 2));
}

/// In the construction labelling of `β`, a vertex `i` with `β_i = 0` has no
/// incoming edges, so column `n + 1 - i` is zero above the diagonal.
#[test]
fn isolated_vertices_give_empty_columns() {
    for n in 1..=5 {
        for g in ThresholdGraph::all_connected(n) {
            let c = g.construction_dag();
            for f in enumerate_flows(&c, &NetflowVector::ones(n)).unwrap() {
                let m = flow_to_tesler(&f);
                for (i, &b) in g.beta().iter().enumerate().skip(1) {
                    if b == 0 {
                        let col = n + 1 - i;
                        assert!((1..col).all(|r| m.get(r, col) == 0));
                    }
                }
            }
        }
    }
}

#[test]
fn weight_examples() {
    let f = IntegerFlow::from_entries(2, &[(1, 0, 1), (2, 0, 1)]).unwrap();
    assert!(weight_qt(&f).unwrap().is_one());
    let f = IntegerFlow::from_entries(2, &[(1, 0, 2), (2, 1, 1)]).unwrap();
    assert_eq!(weight_qt(&f).unwrap().to_string(), "q + t");
    let f = IntegerFlow::from_entries(2, &[(1, 0, 2), (2, 0, 1), (2, 1, 1)]).unwrap();
    let w = weight_qt(&f).unwrap();
    assert_eq!(w, "-q^2*t - q*t^2 + q^2 + 2*q*t + t^2 - q - t".parse().unwrap());
}

fn brute_force_ehr(g: &Dag, a: &NetflowVector) -> QTPolynomial {
    enumerate_flows(g, a).unwrap().map(|f| weight_qt(&f).unwrap()).sum()
}

#[test]
fn dp_matches_enumeration() {
    for n in 1..=4 {
        for g in ThresholdGraph::all_connected(n) {
            for a in netflows(n, 2) {
                let dag = g.dag();
                assert_eq!(ehrhart_qt(&dag, &a).unwrap(), brute_force_ehr(&dag, &a));
            }
        }
    }
}

#[test]
fn specialized_dp_matches_specialization() {
    for g in ThresholdGraph::all_connected(4) {
        for a in netflows(4, 2) {
            let e = ehrhart_qt(&g.dag(), &a).unwrap();
            for mode in [Specialization::TOne, Specialization::TZero, Specialization::TQInv] {
                assert_eq!(ehrhart_specialized(&g.dag(), &a, mode).unwrap(), e.specialize(mode));
            }
        }
    }
}

#[test]
fn k3_example() {
    let e = ehrhart_qt(&Dag::complete(2), &NetflowVector::ones(2)).unwrap();
    assert_eq!(e.to_string(), "q + t + 1");
}

/// The published polynomial for this graph, with every sign flipped, is what
/// the definition produces; its value at `q = t = 1` must be the positive
/// sum of `Π f(i,j)` over the flows with support exactly `n`.
#[test]
fn k5_minus_edge_value() {
    let g = Dag::complete(4).without_edge(2, 1).unwrap();
    let a = NetflowVector::ones(4);
    let e = ehrhart_qt(&g, &a).unwrap();
    let want: QTPolynomial = "-q^3*t - 2*q^2*t^2 - q*t^3 + 3*q^3 + 5*q^2*t + 5*q*t^2 + 3*t^3 \
                              + 5*q^2 + 8*q*t + 5*t^2 + 3*q + 3*t + 1"
        .parse()
        .unwrap();
    assert_eq!(e, want);
    assert_eq!(e.len(), 13);
    assert_eq!(e, brute_force_ehr(&g, &a));
    let tree_supported: u64 = enumerate_flows(&g, &a)
        .unwrap()
        .filter(|f| f.support() == 4)
        .map(|f| f.entries().iter().map(|e| e.2).product::<u64>())
        .sum();
    assert_eq!(e.eval(&BigInt::one(), &BigInt::one()), BigInt::from(tree_supported));
    assert_eq!(tree_supported, 37);
    // the other reading of the removed edge
    let other = Dag::complete(4).without_edge(4, 3).unwrap();
    assert_eq!(count_flows(&other, &a).unwrap(), BigInt::from(24));
    assert!(ehrhart_qt(&other, &a).unwrap().is_nonnegative());
}

#[test]
fn spanning_tree_count_at_one() {
    for n in 1..=5 {
        for g in ThresholdGraph::all_connected(n) {
            let e = ehrhart_qt(&g.dag(), &NetflowVector::ones(n)).unwrap();
            assert_eq!(e.eval(&BigInt::one(), &BigInt::one()), BigInt::from(g.spanning_tree_count()));
        }
    }
}

#[test]
fn symmetric_in_q_and_t() {
    for n in 1..=5 {
        for g in ThresholdGraph::all_connected(n) {
            for a in netflows(n, 3) {
                assert!(ehrhart_qt(&g.dag(), &a).unwrap().is_symmetric(), "beta {:?} a {a}", g.beta());
            }
        }
    }
    let plan = Plan::random(6, 3, 24, DEFAULT_SEED);
    let sixes = plan.instances.iter().filter(|i| i.graph.n() == 6);
    for inst in sixes.chain(Plan::unit(6).instances.iter().filter(|i| i.graph.n() == 6)) {
        assert!(ehrhart_qt(&inst.graph.dag(), &inst.a).unwrap().is_symmetric());
    }
}

#[test]
fn relabeled_netflow_preserves_ehrhart() {
    for n in 1..=4 {
        for g in ThresholdGraph::all_connected(n) {
            for a in netflows(n, 2) {
                let permuted = NetflowVector::from_positive(&g.permute_netflow(a.as_slice()).unwrap()).unwrap();
                assert_eq!(
                    ehrhart_qt(&g.construction_dag(), &a).unwrap(),
                    ehrhart_qt(&g.dag(), &permuted).unwrap()
                );
            }
        }
    }
}

#[test]
fn rejects_bad_netflows() {
    assert!(NetflowVector::new(&[1, 0, 1]).is_err());
    assert!(ehrhart_qt(&Dag::complete(3), &NetflowVector::ones(2)).is_err());
    let f = IntegerFlow::from_entries(3, &[(3, 0, 3)]).unwrap();
    assert!(weight_qt(&f).is_err());
}
