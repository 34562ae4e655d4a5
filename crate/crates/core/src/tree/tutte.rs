//! Tutte polynomials of multigraphs by deletion–contraction.
//!
//! Parallel edges are handled a whole class at a time: for a class of `m`
//! edges between `u` and `w`,
//!
//! ```text
//! t(G) = t(G - class) + (1 + y + ... + y^{m-1}) t(G / class)   (not a bridge)
//! t(G) = (x + y + ... + y^{m-1}) t(G / class)                  (bridge)
//! ```
//!
//! and every loop contributes a factor `y`. Intermediate graphs are memoized
//! on a canonical relabelling, so isomorphic minors are evaluated once.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::QTPolynomial;

/// Canonical labelling is searched exhaustively only up to this many vertices.
const CANON_MAX_VERTICES: usize = 10;
/// ... and only when the refined partition admits at most this many orderings.
const CANON_MAX_ORDERINGS: u64 = 50_000;

/// Loopless multigraph, full symmetric multiplicity table.
#[derive(Clone, Debug)]
struct Reduced {
    v: usize,
    m: Vec<u32>,
}

impl Reduced {
    fn get(&self, u: usize, w: usize) -> u32 {
        self.m[u * self.v + w]
    }

    fn connected_without(&self, cu: usize, cw: usize) -> bool {
        let mut seen = vec![false; self.v];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for w in 0..self.v {
                let skip = (u == cu && w == cw) || (u == cw && w == cu);
                if !seen[w] && !skip && self.get(u, w) > 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn without_class(&self, u: usize, w: usize) -> Self {
        let mut g = self.clone();
        g.m[u * self.v + w] = 0;
        g.m[w * self.v + u] = 0;
        g
    }

    /// Identifies `w` with `u`, dropping the `u`–`w` class entirely.
    fn contract(&self, u: usize, w: usize) -> Self {
        let keep: Vec<usize> = (0..self.v).filter(|&x| x != w).collect();
        let v = keep.len();
        let mut m = vec![0; v * v];
        for (a, &x) in keep.iter().enumerate() {
            for (b, &y) in keep.iter().enumerate() {
                if a == b {
                    continue;
                }
                let mut k = self.get(x, y);
                if x == u {
                    k += self.get(w, y);
                }
                if y == u {
                    k += self.get(x, w);
                }
                m[a * v + b] = k;
            }
        }
        Self { v, m }
    }

    fn invariant(&self, u: usize) -> (u32, Vec<u32>) {
        let mut row: Vec<u32> = (0..self.v).map(|w| self.get(u, w)).filter(|&k| k > 0).collect();
        row.sort_unstable();
        (row.iter().sum(), row)
    }

    /// Upper triangle under the ordering `order` (position -> vertex), column
    /// by column so that fixing a prefix of `order` fixes a prefix of the key.
    fn key_under(&self, order: &[usize]) -> Vec<u32> {
        let mut key = Vec::with_capacity(self.v * (self.v - 1) / 2);
        for b in 1..order.len() {
            for a in 0..b {
                key.push(self.get(order[a], order[b]));
            }
        }
        key
    }

    /// Isomorphism-invariant key: the lexicographically least upper triangle
    /// over orderings consistent with the degree-refined partition. Large or
    /// highly symmetric graphs fall back to the refined order with ties
    /// broken by label, which is still a sound (if less shared) key.
    fn canonical_key(&self) -> (usize, Vec<u32>) {
        let inv: Vec<_> = (0..self.v).map(|u| self.invariant(u)).collect();
        let mut order: Vec<usize> = (0..self.v).collect();
        order.sort_by(|&a, &b| inv[b].cmp(&inv[a]).then(a.cmp(&b)));
        let mut cells: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for k in 1..=self.v {
            if k == self.v || inv[order[k]] != inv[order[start]] {
                cells.push((start, k));
                start = k;
            }
        }
        let orderings = cells.iter().try_fold(1u64, |acc, &(s, e)| {
            (1..=(e - s) as u64).try_fold(acc, |x, f| x.checked_mul(f))
        });
        match orderings {
            Some(c) if self.v <= CANON_MAX_VERTICES && c <= CANON_MAX_ORDERINGS => {
                let mut best: Option<Vec<u32>> = None;
                let mut cur = order.clone();
                self.search(&cells, 0, &mut cur, &mut best);
                (self.v, best.expect("at least one ordering"))
            }
            _ => (self.v, self.key_under(&order)),
        }
    }

    /// Permutes within each cell, keeping the least key.
    fn search(&self, cells: &[(usize, usize)], pos: usize, cur: &mut Vec<usize>, best: &mut Option<Vec<u32>>) {
        if pos == self.v {
            let key = self.key_under(cur);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            return;
        }
        let &(_, end) = cells.iter().find(|&&(s, e)| s <= pos && pos < e).expect("covering cells");
        for k in pos..end {
            cur.swap(pos, k);
            if self.prefix_ok(cur, pos, best) {
                self.search(cells, pos + 1, cur, best);
            }
            cur.swap(pos, k);
        }
    }

    /// Whether the columns fixed so far can still beat (or tie) `best`.
    fn prefix_ok(&self, cur: &[usize], pos: usize, best: &Option<Vec<u32>>) -> bool {
        let Some(best) = best else { return true };
        let mut idx = 0;
        for b in 1..=pos {
            for a in 0..b {
                match self.get(cur[a], cur[b]).cmp(&best[idx]) {
                    std::cmp::Ordering::Less => return true,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Equal => {}
                }
                idx += 1;
            }
        }
        true
    }
}

/// `1 + y + ... + y^{m-1}` with `y` in the `t` slot.
fn y_bracket(m: u32) -> QTPolynomial {
    let mut p = QTPolynomial::zero();
    for k in 0..m {
        p.add_term((0, k), BigInt::from(1));
    }
    p
}

struct Solver {
    memo: HashMap<(usize, Vec<u32>), QTPolynomial>,
}

impl Solver {
    fn solve(&mut self, g: &Reduced) -> QTPolynomial {
        if g.v <= 1 {
            return QTPolynomial::one();
        }
        let key = g.canonical_key();
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let mut classes = Vec::new();
        for u in 0..g.v {
            for w in u + 1..g.v {
                let m = g.get(u, w);
                if m > 0 {
                    classes.push((u, w, m));
                }
            }
        }
        let result = if let Some(&(u, w, m)) =
            classes.iter().find(|&&(u, w, _)| !g.connected_without(u, w))
        {
            let factor = &QTPolynomial::q() + &(y_bracket(m) - QTPolynomial::one());
            &factor * &self.solve(&g.contract(u, w))
        } else {
            let &(u, w, m) = classes
                .iter()
                .max_by(|x, y| x.2.cmp(&y.2).then(y.0.cmp(&x.0)).then(y.1.cmp(&x.1)))
                .expect("connected graph on two or more vertices has an edge");
            let del = self.solve(&g.without_class(u, w));
            let con = self.solve(&g.contract(u, w));
            del + &y_bracket(m) * &con
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// Tutte polynomial `t_M(x, y)` with `x` in the `q` slot and `y` in the `t`
/// slot. Rejects disconnected input.
pub fn tutte(m: &Multigraph) -> Result<QTPolynomial> {
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    let v = m.vertex_count();
    let mut table = vec![0; v * v];
    let mut loops = 0;
    for u in 0..v {
        loops += m.loops(u);
        for w in 0..v {
            if u != w {
                table[u * v + w] = m.multiplicity(u, w);
            }
        }
    }
    let mut solver = Solver { memo: HashMap::new() };
    let core = solver.solve(&Reduced { v, m: table });
    Ok(core.mul_monomial(0, loops))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Dag, ThresholdGraph};
    use crate::poly::Slot;

    #[test]
    fn edge_and_loop() {
        let mut e = Multigraph::new(2);
        e.add_edges(0, 1, 1);
        assert_eq!(tutte(&e).unwrap(), QTPolynomial::q());
        let mut l = Multigraph::new(1);
        l.add_edges(0, 0, 1);
        assert_eq!(tutte(&l).unwrap(), QTPolynomial::t());
    }

    #[test]
    fn triangle() {
        let k3 = Multigraph::from_dag(&Dag::complete(2));
        let t = tutte(&k3).unwrap();
        assert_eq!(t.to_string(), "q^2 + q + t");
        assert_eq!(t.substitute(Slot::Const(1), Slot::Q).to_string(), "q + 2");
    }

    #[test]
    fn parallel_pair_is_x_plus_y() {
        let mut g = Multigraph::new(2);
        g.add_edges(0, 1, 2);
        assert_eq!(tutte(&g).unwrap().to_string(), "q + t");
    }

    #[test]
    fn spanning_tree_count_at_one_one() {
        for g in ThresholdGraph::all_connected(5) {
            let t = tutte(&Multigraph::from_dag(&g.dag())).unwrap();
            assert_eq!(t.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(g.spanning_tree_count()));
        }
    }

    #[test]
    fn rejects_disconnected() {
        assert_eq!(tutte(&Multigraph::new(2)), Err(Error::Disconnected));
    }

    #[test]
    fn canonical_key_is_label_free() {
        let g = Reduced { v: 3, m: vec![0, 2, 1, 2, 0, 0, 1, 0, 0] };
        let h = Reduced { v: 3, m: vec![0, 0, 1, 0, 0, 2, 1, 2, 0] };
        assert_eq!(g.canonical_key(), h.canonical_key());
    }
}
