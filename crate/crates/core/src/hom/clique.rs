//! Maximum cliques by branch and bound with a greedy colouring bound.

use crate::bitset::BitSet;
use crate::graph::Graph;

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    stop_at: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Vertices of `p` with greedy colour numbers, in nondecreasing colour order.
    fn colour_order(&self, p: &BitSet) -> Vec<(usize, usize)> {
        let mut left = p.clone();
        let mut out = Vec::with_capacity(p.count());
        let mut colour = 0;
        while !left.is_empty() {
            colour += 1;
            let mut avail = left.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.difference_with(self.g.neighbors(v));
                left.remove(v);
                out.push((v, colour));
            }
        }
        out
    }

    /// False once the budget is spent or the target size is reached.
    fn expand(&mut self, r: &mut Vec<usize>, mut p: BitSet) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        for (v, colour) in self.colour_order(&p).into_iter().rev() {
            if r.len() + colour <= self.best.len() {
                return true;
            }
            r.push(v);
            let mut next = p.clone();
            next.intersect_with(self.g.neighbors(v));
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                    if self.best.len() >= self.stop_at {
                        return false;
                    }
                }
            } else if !self.expand(r, next) {
                return false;
            }
            r.pop();
            p.remove(v);
        }
        true
    }
}

/// A clique of loopless `g` found within `budget` nodes, stopping early once
/// one of at least `stop_at` vertices is found. The flag is true when the clique is
/// proven maximum.
pub fn max_clique(g: &Graph, budget: u64, stop_at: usize) -> (Vec<usize>, bool) {
    let n = g.vertex_count();
    let mut s = Search {
        g,
        best: Vec::new(),
        stop_at,
        nodes: 0,
        budget,
    };
    let finished = s.expand(&mut Vec::new(), BitSet::full(n));
    (s.best, finished)
}
