use serde::Serialize;

use super::{Dag, Multigraph};
use crate::error::{Error, Result};

/// Threshold graph on vertices `0..=n`, labelled by reverse degree sequence.
///
/// The binary sequence `beta` is the primary identity: vertex `i` of the
/// construction order is dominating (`1`) or isolated (`0`) with respect to
/// the vertices `i+1..=n`. Degrees and outdegrees are derived from it. Under
/// the canonical labelling `i ~ j` (with `i > j`) exactly when `j < bar_d[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThresholdGraph {
    beta: Vec<u8>,
    degrees: Vec<usize>,
    /// `bar_d[i - 1] = min(d_i, i)` for `i = 1..=n`.
    bar_d: Vec<usize>,
    /// `relabel[v]` is the canonical label of construction-order vertex `v`.
    relabel: Vec<usize>,
}

/// Serializable summary `{"beta": [...], "degrees": [...], "bar_d": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub beta: Vec<u8>,
    pub degrees: Vec<usize>,
    pub bar_d: Vec<usize>,
}

impl ThresholdGraph {
    /// Builds the graph encoded by `beta = (β_0, ..., β_{n-1})`.
    pub fn from_binary(beta: &[u8]) -> Result<Self> {
        if beta.is_empty() {
            return Err(Error::EmptyBeta);
        }
        let beta: Vec<u8> = beta.iter().map(|&b| u8::from(b != 0)).collect();
        let n = beta.len();
        // Construction-order degrees: dominating vertices below v, plus v's own
        // dominance over everything above it.
        let mut raw = vec![0usize; n + 1];
        let mut dominating_below = 0;
        for (v, d) in raw.iter_mut().enumerate() {
            let own = if v < n && beta[v] == 1 { n - v } else { 0 };
            *d = dominating_below + own;
            if v < n && beta[v] == 1 {
                dominating_below += 1;
            }
        }
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| raw[b].cmp(&raw[a]));
        let mut relabel = vec![0; n + 1];
        for (canon, &v) in order.iter().enumerate() {
            relabel[v] = canon;
        }
        let degrees: Vec<usize> = order.iter().map(|&v| raw[v]).collect();
        let bar_d = (1..=n).map(|i| degrees[i].min(i)).collect();
        Ok(Self { beta, degrees, bar_d, relabel })
    }

    /// Reconstructs the graph from its degree sequence (any order).
    ///
    /// Peels one vertex at a time: with `m` vertices left, a vertex of degree
    /// `m - 1` is dominating, a vertex of degree `0` is isolated; anything else
    /// is not a threshold sequence.
    pub fn from_degree_sequence(degrees: &[usize]) -> Result<Self> {
        let err = || Error::NotThreshold(degrees.to_vec());
        if degrees.len() < 2 {
            return Err(Error::TooSmall);
        }
        let mut left: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
        let mut beta = Vec::with_capacity(degrees.len() - 1);
        while left.len() > 1 {
            let m = left.len() as i64;
            if let Some(pos) = left.iter().position(|&d| d == m - 1) {
                left.swap_remove(pos);
                for d in &mut left {
                    *d -= 1;
                    if *d < 0 {
                        return Err(err());
                    }
                }
                beta.push(1);
            } else if let Some(pos) = left.iter().position(|&d| d == 0) {
                left.swap_remove(pos);
                beta.push(0);
            } else {
                return Err(err());
            }
        }
        if left[0] != 0 {
            return Err(err());
        }
        let g = Self::from_binary(&beta)?;
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if g.degrees != sorted {
            return Err(err());
        }
        Ok(g)
    }

    /// `K_{n+1}`.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall);
        }
        Self::from_binary(&vec![1; n])
    }

    pub fn n(&self) -> usize {
        self.beta.len()
    }

    pub fn beta(&self) -> &[u8] {
        &self.beta
    }

    /// `(d_0, ..., d_n)`, weakly decreasing.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `(bar_d_1, ..., bar_d_n)`.
    pub fn bar_d(&self) -> &[usize] {
        &self.bar_d
    }

    /// `bar_d_i` for `1 <= i <= n`.
    pub fn outdegree(&self, i: usize) -> usize {
        self.bar_d[i - 1]
    }

    pub fn relabeling(&self) -> &[usize] {
        &self.relabel
    }

    pub fn is_connected(&self) -> bool {
        self.beta[0] == 1
    }

    pub fn is_complete(&self) -> bool {
        self.beta.iter().all(|&b| b == 1)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (hi, lo) = if i > j { (i, j) } else { (j, i) };
        hi != lo && hi <= self.n() && lo < self.bar_d[hi - 1]
    }

    pub fn edge_count(&self) -> usize {
        self.bar_d.iter().sum()
    }

    /// Oriented graph under the canonical labelling.
    pub fn dag(&self) -> Dag {
        Dag::from_edges(
            self.n(),
            (1..=self.n()).flat_map(|i| (0..self.outdegree(i)).map(move |j| (i, j))),
        )
        .expect("canonical edges point downward")
    }

    /// Oriented graph under the construction-order labelling of `beta`.
    pub fn construction_dag(&self) -> Dag {
        let n = self.n();
        let edges = (0..n)
            .filter(|&v| self.beta[v] == 1)
            .flat_map(|v| (v + 1..=n).map(move |w| (w, v)));
        Dag::from_edges(n, edges).expect("construction edges point downward")
    }

    /// Moves a netflow given in construction order to canonical order.
    pub fn permute_netflow(&self, a: &[u64]) -> Result<Vec<u64>> {
        if a.len() != self.n() {
            return Err(Error::NetflowLength { expected: self.n(), got: a.len() });
        }
        if self.relabel[0] != 0 {
            return Err(Error::Disconnected);
        }
        let mut out = vec![0; self.n()];
        for (v, &x) in a.iter().enumerate() {
            out[self.relabel[v + 1] - 1] = x;
        }
        Ok(out)
    }

    /// Conjugate partition `(c_1, ..., c_n)`, `c_i = #{j : d_j >= i}`.
    pub fn conjugate_degrees(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|i| self.degrees.iter().filter(|&&d| d >= i).count())
            .collect()
    }

    /// Spanning-tree count `c_2 c_3 ... c_n`.
    pub fn spanning_tree_count(&self) -> u128 {
        self.conjugate_degrees().iter().skip(1).map(|&c| c as u128).product()
    }

    /// Replaces each edge `(i, j)` by `a_{max(i,j)}` parallel edges.
    pub fn inflate(&self, a: &[u64]) -> Result<Multigraph> {
        if a.len() != self.n() {
            return Err(Error::NetflowLength { expected: self.n(), got: a.len() });
        }
        if a.contains(&0) {
            return Err(Error::NonPositiveNetflow(a.iter().map(|&x| x as i64).collect()));
        }
        let mut m = Multigraph::new(self.n() + 1);
        for i in 1..=self.n() {
            for j in 0..self.outdegree(i) {
                m.add_edges(i, j, a[i - 1] as u32);
            }
        }
        Ok(m)
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            beta: self.beta.clone(),
            degrees: self.degrees.clone(),
            bar_d: self.bar_d.clone(),
        }
    }

    /// Every threshold graph on `n + 1` vertices with `β_0 = 1`, in
    /// lexicographic order of `β`.
    pub fn all_connected(n: usize) -> Vec<Self> {
        assert!(n >= 1);
        (0..1usize << (n - 1))
            .map(|mask| {
                let mut beta = vec![1u8; n];
                for (k, b) in beta.iter_mut().enumerate().skip(1) {
                    *b = ((mask >> (n - 1 - k)) & 1) as u8;
                }
                Self::from_binary(&beta).expect("nonempty")
            })
            .collect()
    }
}
