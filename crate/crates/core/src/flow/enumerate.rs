use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Dag;

/// Strictly positive netflow `(a_1, ..., a_n)`; vertex `0` absorbs `-Σ a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct NetflowVector(Vec<u64>);

impl NetflowVector {
    pub fn new(a: &[i64]) -> Result<Self> {
        if a.iter().any(|&x| x <= 0) {
            return Err(Error::NonPositiveNetflow(a.to_vec()));
        }
        Ok(Self(a.iter().map(|&x| x as u64).collect()))
    }

    pub fn from_positive(a: &[u64]) -> Result<Self> {
        if a.contains(&0) {
            return Err(Error::NonPositiveNetflow(a.iter().map(|&x| x as i64).collect()));
        }
        Ok(Self(a.to_vec()))
    }

    /// `(1, ..., 1)`.
    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a_i` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> u64 {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&x| x == 1)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::NetflowLength { expected: n, got: self.len() });
        }
        Ok(())
    }
}

impl fmt::Display for NetflowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(j < i);
    i * (i - 1) / 2 + j
}

/// Nonnegative integer flow on the edges `i -> j` (`i > j`) of a graph on
/// `0..=n`. Edges absent from the host simply carry zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerFlow {
    n: usize,
    table: Vec<u64>,
}

impl IntegerFlow {
    /// Builds a flow from explicit `(i, j, value)` entries.
    pub fn from_entries(n: usize, entries: &[(usize, usize, u64)]) -> Result<Self> {
        let mut table = vec![0; (n + 1) * n / 2];
        for &(i, j, v) in entries {
            if j >= i || i > n {
                return Err(Error::BadEdge(i, j));
            }
            table[pair_index(i, j)] = v;
        }
        Ok(Self { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `f(i, j)` for `i > j`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.table[pair_index(i, j)]
    }

    /// Number of nonzero entries.
    pub fn support(&self) -> usize {
        self.table.iter().filter(|&&v| v > 0).count()
    }

    /// Nonzero entries `(i, j, f(i,j))`, ordered by `i` then `j`.
    pub fn entries(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 0..i {
                let v = self.get(i, j);
                if v > 0 {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Net outflow at each vertex `1..=n` (outflow minus inflow).
    pub fn netflow(&self) -> Vec<i64> {
        (1..=self.n)
            .map(|i| {
                let out: u64 = (0..i).map(|j| self.get(i, j)).sum();
                let inn: u64 = (i + 1..=self.n).map(|k| self.get(k, i)).sum();
                out as i64 - inn as i64
            })
            .collect()
    }

    /// Whether the support lies on edges of `host`.
    pub fn is_supported_by(&self, host: &Dag) -> bool {
        self.entries().iter().all(|&(i, j, _)| host.has_edge(i, j))
    }
}

/// Advances a weak composition to its successor in descending lexicographic
/// order; `(s, 0, .., 0)` comes first and `(0, .., 0, s)` last.
pub(crate) fn next_composition(c: &mut [u64]) -> bool {
    let k = c.len();
    if k < 2 {
        return false;
    }
    let Some(p) = (0..k - 1).rev().find(|&p| c[p] > 0) else {
        return false;
    };
    let tail: u64 = c[p + 1..].iter().sum();
    c[p] -= 1;
    c[p + 1] = tail + 1;
    for x in &mut c[p + 2..] {
        *x = 0;
    }
    true
}

/// All weak compositions of `total` into `parts` parts, descending lex order.
pub fn weak_compositions(total: u64, parts: usize) -> impl Iterator<Item = Vec<u64>> {
    let mut cur = if parts == 0 {
        if total == 0 { Some(Vec::new()) } else { None }
    } else {
        let mut c = vec![0; parts];
        c[0] = total;
        Some(c)
    };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        cur = if next_composition(&mut next) { Some(next) } else { None };
        Some(out)
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// Lazy stream of the lattice points of a flow polytope.
///
/// Vertices are processed `n, n-1, ..., 1`; at vertex `i` the amount
/// `a_i + inflow(i)` is split over the out-edges to `out(i)` (ascending
/// targets) in descending lexicographic order of the composition.
pub struct FlowIter<'g> {
    dag: &'g Dag,
    a: Vec<u64>,
    inflow: Vec<u64>,
    levels: Vec<Vec<u64>>,
    table: Vec<u64>,
    state: IterState,
}

/// Streams every integer flow of `F_G(a)` exactly once.
pub fn enumerate_flows<'g>(dag: &'g Dag, a: &NetflowVector) -> Result<FlowIter<'g>> {
    a.check_len(dag.n())?;
    let n = dag.n();
    Ok(FlowIter {
        dag,
        a: a.as_slice().to_vec(),
        inflow: vec![0; n + 1],
        levels: Vec::with_capacity(n),
        table: vec![0; (n + 1) * n / 2],
        state: IterState::Fresh,
    })
}

impl FlowIter<'_> {
    fn vertex_of_level(&self, level: usize) -> usize {
        self.dag.n() - level
    }

    fn apply(&mut self, v: usize, comp: &[u64], sign: bool) {
        for (&j, &c) in self.dag.out(v).iter().zip(comp) {
            let idx = pair_index(v, j);
            if sign {
                self.table[idx] = c;
                self.inflow[j] += c;
            } else {
                self.table[idx] = 0;
                self.inflow[j] -= c;
            }
        }
    }

    /// Fills the remaining levels with first compositions.
    fn descend(&mut self) -> bool {
        while self.levels.len() < self.dag.n() {
            let v = self.vertex_of_level(self.levels.len());
            let amount = self.a[v - 1] + self.inflow[v];
            let k = self.dag.out(v).len();
            if k == 0 {
                if amount > 0 {
                    return false;
                }
                self.levels.push(Vec::new());
                continue;
            }
            let mut comp = vec![0; k];
            comp[0] = amount;
            self.apply(v, &comp, true);
            self.levels.push(comp);
        }
        true
    }

    fn advance(&mut self) -> bool {
        while let Some(mut comp) = self.levels.pop() {
            let v = self.vertex_of_level(self.levels.len());
            self.apply(v, &comp, false);
            if next_composition(&mut comp) {
                self.apply(v, &comp, true);
                self.levels.push(comp);
                if self.descend() {
                    return true;
                }
            }
        }
        false
    }

    fn emit(&self) -> IntegerFlow {
        IntegerFlow { n: self.dag.n(), table: self.table.clone() }
    }
}

impl Iterator for FlowIter<'_> {
    type Item = IntegerFlow;

    fn next(&mut self) -> Option<IntegerFlow> {
        let found = match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                self.descend() || self.advance()
            }
            IterState::Running => self.advance(),
        };
        if found {
            Some(self.emit())
        } else {
            self.state = IterState::Done;
            None
        }
    }
}
