use super::Dag;

/// Undirected multigraph with loops, stored as a symmetric multiplicity table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    v: usize,
    /// Row-major `v * v`; the diagonal counts loops.
    mult: Vec<u32>,
}

impl Multigraph {
    pub fn new(vertices: usize) -> Self {
        Self { v: vertices, mult: vec![0; vertices * vertices] }
    }

    pub fn from_dag(g: &Dag) -> Self {
        let mut m = Self::new(g.vertex_count());
        for (i, j) in g.edges() {
            m.add_edges(i, j, 1);
        }
        m
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    /// Adds `k` parallel edges between `u` and `w` (loops when `u == w`).
    pub fn add_edges(&mut self, u: usize, w: usize, k: u32) {
        self.mult[u * self.v + w] += k;
        if u != w {
            self.mult[w * self.v + u] += k;
        }
    }

    pub fn multiplicity(&self, u: usize, w: usize) -> u32 {
        self.mult[u * self.v + w]
    }

    pub fn loops(&self, u: usize) -> u32 {
        self.multiplicity(u, u)
    }

    pub fn edge_count(&self) -> u32 {
        let mut total = 0;
        for u in 0..self.v {
            for w in u..self.v {
                total += self.multiplicity(u, w);
            }
        }
        total
    }

    /// Every edge as `(u, w)` with `u <= w`, parallel edges repeated.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.v {
            for w in u..self.v {
                for _ in 0..self.multiplicity(u, w) {
                    out.push((u, w));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.v == 0 {
            return true;
        }
        let mut seen = vec![false; self.v];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for w in 0..self.v {
                if !seen[w] && self.multiplicity(u, w) > 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
