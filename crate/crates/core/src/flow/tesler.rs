use std::fmt;

use serde::Serialize;

use super::enumerate::IntegerFlow;

/// Upper-triangular `n x n` matrix of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TeslerMatrix {
    n: usize,
    /// Row-major, full `n * n`; entries below the diagonal are zero.
    entries: Vec<u64>,
}

impl TeslerMatrix {
    pub fn new(n: usize) -> Self {
        Self { n, entries: vec![0; n * n] }
    }

    /// Converts a flow on (a subgraph of) `K_{n+1}`: `b_jj = f(n+1-j, 0)` and
    /// `b_ij = f(n+1-i, n+1-j)` for `i < j`. Missing edges give zeros.
    pub fn from_flow(flow: &IntegerFlow) -> Self {
        let n = flow.n();
        let mut m = Self::new(n);
        for i in 1..=n {
            m.set(i, i, flow.get(n + 1 - i, 0));
            for j in i + 1..=n {
                m.set(i, j, flow.get(n + 1 - i, n + 1 - j));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `b_ij`, 1-indexed.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        assert!(i <= j, "Tesler matrices are upper triangular");
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    /// `b_kk + ... + b_kn - (b_1k + ... + b_{k-1,k})` for `k = 1..=n`.
    pub fn hook_sums(&self) -> Vec<i64> {
        (1..=self.n)
            .map(|k| {
                let row: u64 = (k..=self.n).map(|j| self.get(k, j)).sum();
                let col: u64 = (1..k).map(|i| self.get(i, k)).sum();
                row as i64 - col as i64
            })
            .collect()
    }

    pub fn row_major(&self) -> &[u64] {
        &self.entries
    }
}

/// Space-separated row-major entries.
impl fmt::Display for TeslerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn flow_to_tesler(flow: &IntegerFlow) -> TeslerMatrix {
    TeslerMatrix::from_flow(flow)
}
