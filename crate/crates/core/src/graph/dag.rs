use crate::error::{Error, Result};

/// Acyclic directed graph on vertices `0..=n` with every edge `i -> j`
/// satisfying `i > j`. Any subgraph of `K_{n+1}` oriented this way.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dag {
    /// `out[i]` holds the targets `j < i` of `i`, ascending.
    out: Vec<Vec<usize>>,
}

impl Dag {
    /// Edgeless graph on `n + 1` vertices.
    pub fn empty(n: usize) -> Self {
        Self { out: vec![Vec::new(); n + 1] }
    }

    /// `K_{n+1}`.
    pub fn complete(n: usize) -> Self {
        Self {
            out: (0..=n).map(|i| (0..i).collect()).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (i, j) in edges {
            g.insert_edge(i, j)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if j >= i || i >= self.out.len() {
            return Err(Error::BadEdge(i, j));
        }
        if let Err(pos) = self.out[i].binary_search(&j) {
            self.out[i].insert(pos, j);
        }
        Ok(())
    }

    /// Copy with edge `i -> j` removed.
    pub fn without_edge(&self, i: usize, j: usize) -> Result<Self> {
        let mut g = self.clone();
        let pos = g
            .out
            .get(i)
            .and_then(|o| o.binary_search(&j).ok())
            .ok_or(Error::BadEdge(i, j))?;
        g.out[i].remove(pos);
        Ok(g)
    }

    /// Largest vertex label.
    pub fn n(&self) -> usize {
        self.out.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn out(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let (hi, lo) = if i > j { (i, j) } else { (j, i) };
        hi < self.out.len() && self.out[hi].binary_search(&lo).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Edges `(i, j)` with `i > j`, ordered by `i` then `j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(i, js)| js.iter().map(move |&j| (i, j)))
    }

    /// Undirected degree.
    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len() + (v + 1..self.out.len()).filter(|&i| self.has_edge(i, v)).count()
    }

    /// Undirected neighbourhoods as bit masks (requires at most 64 vertices).
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.out.len() <= 64, "adjacency masks support at most 64 vertices");
        let mut masks = vec![0u64; self.out.len()];
        for (i, j) in self.edges() {
            masks[i] |= 1 << j;
            masks[j] |= 1 << i;
        }
        masks
    }

    pub fn is_connected(&self) -> bool {
        let n = self.out.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let adj = self.undirected();
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Undirected adjacency lists, ascending.
    pub fn undirected(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.out.len()];
        for (i, j) in self.edges() {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Whether every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Dag) -> bool {
        self.out.len() == other.out.len() && self.edges().all(|(i, j)| other.has_edge(i, j))
    }
}
