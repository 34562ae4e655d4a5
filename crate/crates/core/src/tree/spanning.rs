use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::flow::NetflowVector;
use crate::graph::Dag;
use crate::poly::q_bracket;
use crate::QTPolynomial;

/// Spanning tree rooted at `0`, stored as a parent array over `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    parent: Vec<usize>,
}

fn reaches_root(parent: &[usize]) -> bool {
    let n = parent.len();
    (1..=n).all(|start| {
        let mut v = start;
        for _ in 0..n {
            if v == 0 {
                return true;
            }
            v = parent[v - 1];
        }
        v == 0
    })
}

impl SpanningTree {
    /// Validates `parents[i - 1] = p_T(i)` against `host`.
    pub fn from_parents(host: &Dag, parents: &[usize]) -> Result<Self> {
        if parents.len() != host.n() {
            return Err(Error::NotATree);
        }
        let edges_ok = parents
            .iter()
            .enumerate()
            .all(|(k, &p)| p != k + 1 && host.has_edge(k + 1, p));
        if !edges_ok || !reaches_root(parents) {
            return Err(Error::NotATree);
        }
        Ok(Self { parent: parents.to_vec() })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// `p_T(i)` for `1 <= i <= n`.
    pub fn parent(&self, i: usize) -> usize {
        self.parent[i - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Tree edges `(i, p_T(i))`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().enumerate().map(|(k, &p)| (k + 1, p))
    }

    /// Proper ancestors of `v`, nearest first, ending at `0`.
    fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut u = v;
        while u != 0 {
            u = self.parent(u);
            out.push(u);
        }
        out
    }

    /// Inversions `(i, j)`: `i > j` with `j` a proper descendant of `i`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..=self.n() {
            for i in self.ancestors(j) {
                if i > j {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn inv(&self) -> usize {
        self.inversions().len()
    }

    /// Inversions `(i, j)` where `j` is adjacent to `p_T(i)` in `host`.
    pub fn kappa(&self, host: &Dag) -> usize {
        self.inversions()
            .into_iter()
            .filter(|&(i, j)| host.has_edge(j, self.parent(i)))
            .count()
    }

    pub fn is_increasing(&self) -> bool {
        self.edges().all(|(i, p)| p < i)
    }

    /// `δ_T(i)`: number of vertices in the subtree rooted at `i` (including `i`).
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1usize; self.n() + 1];
        for v in 1..=self.n() {
            for u in self.ancestors(v) {
                size[u] += 1;
            }
        }
        size
    }

    /// `δ^a_T(i) = Σ_{j in subtree(i)} a_j` for `i = 1..=n`.
    pub fn subtree_netflow(&self, a: &NetflowVector) -> Vec<u64> {
        let mut s: Vec<u64> = a.as_slice().to_vec();
        for v in 1..=self.n() {
            for u in self.ancestors(v) {
                if u != 0 {
                    s[u - 1] += a.at(v);
                }
            }
        }
        s
    }
}

/// Every spanning tree of `host`, in lexicographic order of parent arrays.
pub fn enumerate_spanning_trees(host: &Dag) -> impl Iterator<Item = SpanningTree> {
    let adj = host.undirected();
    let choices: Vec<Vec<usize>> = (1..=host.n()).map(|i| adj[i].clone()).collect();
    let mut pos = vec![0usize; choices.len()];
    let mut done = choices.iter().any(Vec::is_empty);
    let mut parent = vec![0usize; choices.len()];
    std::iter::from_fn(move || {
        while !done {
            for (k, &p) in pos.iter().enumerate() {
                parent[k] = choices[k][p];
            }
            // odometer, last vertex fastest
            let mut k = pos.len();
            loop {
                if k == 0 {
                    done = true;
                    break;
                }
                k -= 1;
                pos[k] += 1;
                if pos[k] < choices[k].len() {
                    break;
                }
                pos[k] = 0;
            }
            if reaches_root(&parent) {
                return Some(SpanningTree { parent: parent.clone() });
            }
        }
        None
    })
}

/// `I_G(q) = Σ_T q^{inv(T)}`.
pub fn inversion_enumerator(host: &Dag) -> QTPolynomial {
    let mut p = QTPolynomial::zero();
    for t in enumerate_spanning_trees(host) {
        p.add_term((t.inv() as u32, 0), BigInt::from(1));
    }
    p
}

/// `I_G(q)` as `Σ_{T increasing} Π_i [δ_T(i)]_q`; equal to
/// [`inversion_enumerator`] on threshold graphs.
pub fn inversion_enumerator_increasing(host: &Dag) -> QTPolynomial {
    enumerate_spanning_trees(host)
        .filter(SpanningTree::is_increasing)
        .map(|t| {
            let sizes = t.subtree_sizes();
            (1..=t.n()).map(|i| q_bracket::<BigInt>(sizes[i] as u32, 1)).product::<QTPolynomial>()
        })
        .sum()
}

/// `w(T) = Π_{(i,j) in E(T)} [a_{max(i,j)}]_q · Π_{(i,j) in Inv(T)} q^{a_{max(p_T(i), j)}}`.
pub fn tree_weight(t: &SpanningTree, a: &NetflowVector) -> QTPolynomial {
    let mut w: QTPolynomial = t
        .edges()
        .map(|(i, p)| q_bracket::<BigInt>(a.at(i.max(p)) as u32, 1))
        .product();
    let shift: u64 = t.inversions().iter().map(|&(i, j)| a.at(t.parent(i).max(j))).sum();
    w = w.mul_monomial(shift as u32, 0);
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ThresholdGraph;

    #[test]
    fn cayley_counts() {
        assert_eq!(enumerate_spanning_trees(&Dag::complete(2)).count(), 3);
        assert_eq!(enumerate_spanning_trees(&Dag::complete(3)).count(), 16);
        let g = ThresholdGraph::from_degree_sequence(&[4, 3, 2, 2, 1]).unwrap();
        assert_eq!(enumerate_spanning_trees(&g.dag()).count(), 8);
    }

    #[test]
    fn lexicographic_order() {
        let trees: Vec<_> = enumerate_spanning_trees(&Dag::complete(2)).collect();
        let parents: Vec<&[usize]> = trees.iter().map(|t| t.parents()).collect();
        assert_eq!(parents, vec![&[0, 0][..], &[0, 1], &[2, 0]]);
    }

    #[test]
    fn chain_inversion() {
        let t = SpanningTree::from_parents(&Dag::complete(2), &[2, 0]).unwrap();
        assert_eq!(t.inversions(), vec![(2, 1)]);
        assert_eq!(t.inv(), 1);
    }

    #[test]
    fn k3_enumerator() {
        assert_eq!(inversion_enumerator(&Dag::complete(2)).to_string(), "q + 2");
        assert_eq!(inversion_enumerator_increasing(&Dag::complete(2)).to_string(), "q + 2");
    }

    #[test]
    fn rejects_non_trees() {
        let k = Dag::complete(3);
        assert_eq!(SpanningTree::from_parents(&k, &[2, 1, 0]), Err(Error::NotATree));
        assert_eq!(SpanningTree::from_parents(&k, &[0, 2, 0]), Err(Error::NotATree));
        let path = Dag::from_edges(2, [(1, 0), (2, 1)]).unwrap();
        assert_eq!(SpanningTree::from_parents(&path, &[0, 0]), Err(Error::NotATree));
    }

    #[test]
    fn unit_netflow_weight_is_q_inv() {
        let a = NetflowVector::ones(3);
        for t in enumerate_spanning_trees(&Dag::complete(3)) {
            assert_eq!(tree_weight(&t, &a), QTPolynomial::q_pow(t.inv() as u32));
        }
    }
}
