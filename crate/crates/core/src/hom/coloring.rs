//! `k`-colourability through maximal independent sets.
//!
//! `G` is `k`-colourable iff some maximal independent set `I` leaves `G - I`
//! `(k-1)`-colourable: any colour class extends to a maximal independent set
//! once the added vertices are taken out of their old classes. A largest
//! class has at least `ceil(n/k)` vertices, so smaller sets are skipped, and
//! sets in one orbit under the known automorphisms of `G` are tested once.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::constructions::complete;
use crate::error::Result;
use crate::graph::Graph;
use crate::hom::{exists_hom_with, HomCertificate};
use crate::iso::automorphisms;
use crate::Limits;

pub(crate) enum Outcome {
    Colorable(Vec<usize>),
    NotColorable { tested: u64 },
}

struct Enumeration<'a> {
    g: &'a Graph,
    k: usize,
    limits: &'a Limits,
    min_size: usize,
    /// `nonadj[v]`: vertices other than `v` not adjacent to `v`.
    nonadj: Vec<BitSet>,
    generators: Vec<Vec<usize>>,
    seen: HashSet<Vec<u64>>,
    seen_cap: usize,
    tested: u64,
}

enum Step {
    Continue,
    Found(Vec<usize>),
    CapReached,
}

impl Enumeration<'_> {
    /// Bron-Kerbosch with pivoting on the complement of `g`.
    fn expand(&mut self, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet) -> Result<Step> {
        if r.len() + p.count() < self.min_size {
            return Ok(Step::Continue);
        }
        if p.is_empty() {
            if x.is_empty() {
                return self.test(r);
            }
            return Ok(Step::Continue);
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| {
                let mut q = p.clone();
                q.intersect_with(&self.nonadj[u]);
                q.count()
            })
            .expect("nonempty candidates");
        let mut branch = p.clone();
        branch.difference_with(&self.nonadj[pivot]);
        for v in branch.iter() {
            let mut np = p.clone();
            np.intersect_with(&self.nonadj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.nonadj[v]);
            r.push(v);
            let step = self.expand(r, np, nx)?;
            r.pop();
            if !matches!(step, Step::Continue) {
                return Ok(step);
            }
            p.remove(v);
            x.insert(v);
        }
        Ok(Step::Continue)
    }

    fn test(&mut self, set: &[usize]) -> Result<Step> {
        let n = self.g.vertex_count();
        let key = BitSet::from_indices(n, set.iter().copied());
        if self.seen.contains(key.words()) {
            return Ok(Step::Continue);
        }
        let mut stack = vec![key.clone()];
        self.seen.insert(key.words().to_vec());
        while let Some(s) = stack.pop() {
            for sigma in &self.generators {
                let image = BitSet::from_indices(n, s.iter().map(|v| sigma[v]));
                if self.seen.insert(image.words().to_vec()) {
                    stack.push(image);
                }
            }
            if self.seen.len() > self.seen_cap {
                return Ok(Step::CapReached);
            }
        }
        self.tested += 1;
        let rest: Vec<usize> = (0..n).filter(|&v| !key.contains(v)).collect();
        let sub = self.g.induced_by_indices(&rest);
        if let HomCertificate::Exists(m) = exists_hom_with(&sub, &complete(self.k - 1), self.limits)? {
            let mut colors = vec![self.k - 1; n];
            for (i, &v) in rest.iter().enumerate() {
                colors[v] = m.image(i);
            }
            return Ok(Step::Found(colors));
        }
        Ok(Step::Continue)
    }
}

/// Decides `g -> K_k` for loopless `g` and `k >= 2`. `None` when more than
/// `seen_cap` independent sets would have to be remembered.
pub(crate) fn by_independent_sets(
    g: &Graph,
    k: usize,
    limits: &Limits,
    seen_cap: usize,
) -> Result<Option<Outcome>> {
    let n = g.vertex_count();
    let nonadj = (0..n)
        .map(|v| {
            let mut s = BitSet::full(n);
            s.difference_with(g.neighbors(v));
            s.remove(v);
            s
        })
        .collect();
    let generators = if limits.symmetry_breaking {
        automorphisms(g, 64 * n as u64).1
    } else {
        Vec::new()
    };
    let mut e = Enumeration {
        g,
        k,
        limits,
        min_size: n.div_ceil(k),
        nonadj,
        generators,
        seen: HashSet::new(),
        seen_cap,
        tested: 0,
    };
    let step = e.expand(&mut Vec::new(), BitSet::full(n), BitSet::new(n))?;
    Ok(match step {
        Step::Found(colors) => Some(Outcome::Colorable(colors)),
        Step::Continue => Some(Outcome::NotColorable { tested: e.tested }),
        Step::CapReached => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, helical, mycielski, petersen};

    fn decide(g: &Graph, k: usize) -> bool {
        match by_independent_sets(g, k, &Limits::default(), 1 << 20).unwrap() {
            Some(Outcome::Colorable(c)) => {
                assert!(g.edges().iter().all(|&(u, v)| c[u] != c[v]));
                assert!(c.iter().all(|&x| x < k));
                true
            }
            Some(Outcome::NotColorable { .. }) => false,
            None => panic!("cap reached"),
        }
    }

    #[test]
    fn agrees_with_known_chromatic_numbers() {
        assert!(!decide(&cycle(5), 2));
        assert!(decide(&cycle(5), 3));
        assert!(!decide(&petersen(), 2));
        assert!(decide(&petersen(), 3));
        assert!(!decide(&mycielski(4), 3));
        assert!(decide(&mycielski(4), 4));
        assert!(!decide(&helical(4, 1, 2).unwrap(), 3));
        assert!(decide(&complete(4), 4));
        assert!(!decide(&complete(5), 4));
    }
}
