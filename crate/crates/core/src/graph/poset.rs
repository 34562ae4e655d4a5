//! The poset of connected threshold graphs on `0..=n` ordered by subgraph
//! containment, isomorphic to shifted Young diagrams inside the staircase
//! `(n-1, n-2, ..., 1)`.

use super::ThresholdGraph;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`PosetPn::new`]; the order relation is stored as
/// a dense `2^(n-1) x 2^(n-1)` table.
pub const MAX_POSET_N: usize = 12;

#[derive(Clone, Debug)]
pub struct PosetPn {
    n: usize,
    elements: Vec<ThresholdGraph>,
    edge_sets: Vec<u128>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

/// Edge set as a bit mask over pairs `(i, j)`, `i > j`.
fn edge_mask(g: &ThresholdGraph) -> u128 {
    let mut m = 0u128;
    for i in 1..=g.n() {
        for j in 0..g.outdegree(i) {
            m |= 1 << (i * (i - 1) / 2 + j);
        }
    }
    m
}

/// Row lengths of the shifted diagram: row `j` (for `j = 1..n-1`) counts the
/// vertices `i > j` adjacent to `j`.
pub fn shifted_diagram(g: &ThresholdGraph) -> Vec<usize> {
    (1..g.n())
        .map(|j| (j + 1..=g.n()).filter(|&i| g.outdegree(i) > j).count())
        .collect()
}

impl PosetPn {
    pub fn new(n: usize) -> Self {
        assert!((1..=MAX_POSET_N).contains(&n), "poset size out of range: {n}");
        let elements = ThresholdGraph::all_connected(n);
        let edge_sets: Vec<u128> = elements.iter().map(edge_mask).collect();
        let leq: Vec<Vec<bool>> = edge_sets
            .iter()
            .map(|&h| edge_sets.iter().map(|&g| h & !g == 0).collect())
            .collect();
        let mut covers = Vec::new();
        for (h, row) in leq.iter().enumerate() {
            for (g, &le) in row.iter().enumerate() {
                if le && (edge_sets[g].count_ones() == edge_sets[h].count_ones() + 1) {
                    covers.push((h, g));
                }
            }
        }
        Self { n, elements, edge_sets, leq, covers }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ThresholdGraph] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &ThresholdGraph {
        &self.elements[idx]
    }

    pub fn index_of(&self, g: &ThresholdGraph) -> Option<usize> {
        self.elements.iter().position(|e| e.dag() == g.dag())
    }

    /// `h ⪯ g` by edge-set containment.
    pub fn leq(&self, h: usize, g: usize) -> bool {
        self.leq[h][g]
    }

    /// `h ⪯ g` by containment of shifted diagrams.
    pub fn leq_shifted(&self, h: usize, g: usize) -> bool {
        let (a, b) = (shifted_diagram(&self.elements[h]), shifted_diagram(&self.elements[g]));
        a.iter().zip(&b).all(|(x, y)| x <= y)
    }

    /// Cover relations `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn edge_count(&self, idx: usize) -> u32 {
        self.edge_sets[idx].count_ones()
    }

    /// Elements below or equal to `g`.
    pub fn down_set(&self, g: usize) -> Vec<usize> {
        (0..self.len()).filter(|&h| self.leq[h][g]).collect()
    }

    /// `μ(h, g)` via `μ(h,h) = 1`, `μ(h,g) = -Σ_{h ⪯ k ≺ g} μ(h,k)`.
    pub fn moebius(&self, h: usize, g: usize) -> Result<i64> {
        if !self.leq[h][g] {
            return Err(Error::Incomparable(h, g));
        }
        // interval sorted by edge count is a linear extension
        let mut interval: Vec<usize> =
            (0..self.len()).filter(|&k| self.leq[h][k] && self.leq[k][g]).collect();
        interval.sort_by_key(|&k| self.edge_count(k));
        let mut mu = vec![0i64; self.len()];
        for (pos, &k) in interval.iter().enumerate() {
            mu[k] = if k == h {
                1
            } else {
                -interval[..pos]
                    .iter()
                    .filter(|&&m| self.leq[m][k])
                    .map(|&m| mu[m])
                    .sum::<i64>()
            };
        }
        Ok(mu[g])
    }
}
