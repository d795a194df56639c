//! Backtracking search with maintained arc consistency.
//!
//! Each vertex of `G` is a variable whose domain is a bitset over `V(H)`.
//! Every edge `uv` of `G` constrains `(f(u), f(v))` to be an edge of `H`;
//! revising `u` against `v` intersects `D(u)` with the union of the
//! `H`-neighbourhoods of `D(v)`. Variables are picked by the smallest ratio
//! of domain size to undecided neighbours. Values are tried in
//! order of decreasing degree in `H`.
//!
//! For a complete target `K_k` the search first tries a short refutation:
//! the Mycielski graph `M_{k+1}` is triangle-free and not `k`-colourable, so
//! any homomorphism `M_{k+1} -> G` shows `G -/-> K_k`. Both facts are
//! established by this same search under a small budget; if either is not
//! decided the ordinary search runs. For `k >= 4`, a search that stalls
//! early is followed by the decomposition in [`super::coloring`].

use super::clique::max_clique;
use super::coloring::{self, Outcome};
use super::{HomCertificate, HomMap};
use crate::bitset::{self, words_for};
use crate::constructions::{complete, mycielski};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::automorphism_orbits;
use crate::Limits;

/// Largest `|V(H)|·|E(H)|` for which the odd-girth refutation is attempted.
const ODD_GIRTH_WORK: usize = 20_000_000;
/// Largest target for which automorphism orbits are computed.
const ORBIT_TARGET_MAX: usize = 1_500;

enum Symmetry {
    None,
    /// `H` is complete: unused values are interchangeable.
    Interchangeable,
    /// Orbit id per `H` vertex; used to restrict each component's first decision.
    Orbits(Vec<usize>),
}

struct Target {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    value_order: Vec<usize>,
    symmetry: Symmetry,
}

impl Target {
    fn new(h: &Graph, limits: &Limits) -> Self {
        let n = h.vertex_count();
        let words = words_for(n);
        let mut rows = vec![0u64; n * words];
        for v in 0..n {
            rows[v * words..(v + 1) * words].copy_from_slice(h.neighbors(v).words());
        }
        let mut value_order: Vec<usize> = (0..n).collect();
        value_order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
        let symmetry = if !limits.symmetry_breaking {
            Symmetry::None
        } else if h.is_complete() {
            Symmetry::Interchangeable
        } else if h.is_circulant() {
            Symmetry::Orbits(vec![0; n])
        } else if n <= ORBIT_TARGET_MAX {
            Symmetry::Orbits(automorphism_orbits(h, 64 * n as u64))
        } else {
            Symmetry::None
        };
        Target {
            n,
            words,
            rows,
            value_order,
            symmetry,
        }
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }
}

struct Component<'a> {
    t: &'a Target,
    nbrs: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
    support: Vec<u64>,
    queue: Vec<usize>,
    queued: Vec<bool>,
}

impl<'a> Component<'a> {
    #[inline]
    fn dom<'d>(&self, doms: &'d [u64], v: usize) -> &'d [u64] {
        &doms[v * self.t.words..(v + 1) * self.t.words]
    }

    /// Runs revisions from every queued variable to a fixpoint. False on a wipe-out.
    fn propagate(&mut self, doms: &mut [u64]) -> bool {
        let w = self.t.words;
        while let Some(v) = self.queue.pop() {
            self.queued[v] = false;
            self.support.iter_mut().for_each(|x| *x = 0);
            let dv = &doms[v * w..(v + 1) * w];
            for b in bitset::ones(dv) {
                bitset::or_into(&mut self.support, self.t.row(b));
            }
            for i in 0..self.nbrs[v].len() {
                let u = self.nbrs[v][i];
                let du = &mut doms[u * w..(u + 1) * w];
                let mut changed = false;
                let mut any = false;
                for (x, s) in du.iter_mut().zip(&self.support) {
                    let nx = *x & s;
                    changed |= nx != *x;
                    any |= nx != 0;
                    *x = nx;
                }
                if !any {
                    self.queue.clear();
                    self.queued.iter_mut().for_each(|q| *q = false);
                    return false;
                }
                if changed && !self.queued[u] {
                    self.queued[u] = true;
                    self.queue.push(u);
                }
            }
        }
        true
    }

    /// Smallest ratio of domain size to undecided neighbours first, then the
    /// lower index. Vertices with no undecided neighbour come last.
    fn pick_variable(&self, doms: &[u64]) -> Option<usize> {
        let counts: Vec<usize> = (0..self.nbrs.len())
            .map(|v| bitset::count_in(self.dom(doms, v)))
            .collect();
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.nbrs.len() {
            if counts[v] < 2 {
                continue;
            }
            let open = self.nbrs[v].iter().filter(|&&u| counts[u] >= 2).count();
            let better = match best {
                None => true,
                // counts[v] / open < c / o, with open = 0 as infinity.
                Some((_, c, o)) => match (open, o) {
                    (0, _) => o == 0 && counts[v] < c,
                    (_, 0) => true,
                    _ => counts[v] * o < c * open,
                },
            };
            if better {
                best = Some((v, counts[v], open));
            }
        }
        best.map(|(v, _, _)| v)
    }

    fn candidate_values(&self, dom: &[u64], used: &[bool], first: bool) -> Vec<usize> {
        let contains = |x: usize| dom[x / 64] >> (x % 64) & 1 == 1;
        let ordered = self.t.value_order.iter().copied().filter(|&x| contains(x));
        match &self.t.symmetry {
            Symmetry::Interchangeable => {
                let mut out: Vec<usize> = Vec::new();
                let mut fresh = false;
                for x in ordered {
                    if used[x] {
                        out.push(x);
                    } else if !fresh {
                        out.push(x);
                        fresh = true;
                    }
                }
                out
            }
            Symmetry::Orbits(orbit) if first => {
                let mut seen = vec![false; self.t.n];
                ordered
                    .filter(|&x| !std::mem::replace(&mut seen[orbit[x]], true))
                    .collect()
            }
            _ => ordered.collect(),
        }
    }

    fn search(
        &mut self,
        doms: &[u64],
        pool: &mut Vec<Vec<u64>>,
        depth: usize,
        used: &mut Vec<bool>,
    ) -> Result<Option<Vec<usize>>> {
        let Some(var) = self.pick_variable(doms) else {
            let images = (0..self.nbrs.len())
                .map(|v| bitset::first_in(self.dom(doms, v)).expect("nonempty domain"))
                .collect();
            return Ok(Some(images));
        };
        let values = self.candidate_values(self.dom(doms, var), used, depth == 0);
        if pool.len() <= depth {
            pool.push(vec![0; doms.len()]);
        }
        let w = self.t.words;
        for a in values {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Unknown {
                    budget: self.budget,
                });
            }
            let mut next = std::mem::take(&mut pool[depth]);
            next.copy_from_slice(doms);
            let dv = &mut next[var * w..(var + 1) * w];
            dv.iter_mut().for_each(|x| *x = 0);
            dv[a / 64] |= 1 << (a % 64);
            self.queue.push(var);
            self.queued[var] = true;
            let consistent = self.propagate(&mut next);
            let newly_used = !used[a];
            used[a] = true;
            let found = if consistent {
                self.search(&next, pool, depth + 1, used)
            } else {
                Ok(None)
            };
            if newly_used {
                used[a] = false;
            }
            pool[depth] = next;
            if let Some(images) = found? {
                return Ok(Some(images));
            }
        }
        Ok(None)
    }
}

/// Bipartition of a bipartite `G` sent onto one edge of `H`.
fn bipartite_map(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let side = g.bipartition()?;
    let &(a, b) = h.edges().first()?;
    Some(side.into_iter().map(|s| if s == 0 { a } else { b }).collect())
}

pub(crate) fn solve(g: &Graph, h: &Graph, limits: &Limits) -> Result<HomCertificate> {
    let ng = g.vertex_count();
    if ng == 0 {
        return Ok(HomCertificate::Exists(HomMap::new(Vec::new())));
    }
    if h.vertex_count() == 0 {
        return Ok(HomCertificate::None { nodes_explored: 0 });
    }
    if let Some(w) = h.loop_vertices().next() {
        return Ok(HomCertificate::Exists(HomMap::new(vec![w; ng])));
    }
    if g.has_loops() {
        return Ok(HomCertificate::None { nodes_explored: 0 });
    }
    if g.edge_count() == 0 {
        return Ok(HomCertificate::Exists(HomMap::new(vec![0; ng])));
    }
    if h.edge_count() == 0 {
        return Ok(HomCertificate::None { nodes_explored: 0 });
    }
    if let Some(images) = bipartite_map(g, h) {
        return Ok(HomCertificate::Exists(HomMap::new(images)));
    }
    // Odd closed walks map to odd closed walks of the same length.
    if h.vertex_count() * h.edge_count() <= ODD_GIRTH_WORK
        && g.vertex_count() * g.edge_count() <= ODD_GIRTH_WORK
    {
        if let crate::graph::OddGirth::Finite(og) = g.odd_girth() {
            if !h.has_odd_closed_walk_within(og) {
                return Ok(HomCertificate::None { nodes_explored: 0 });
            }
        }
    }
    if clique_refutation(g, h) {
        return Ok(HomCertificate::None { nodes_explored: 0 });
    }

    if h.is_complete() {
        let k = h.vertex_count();
        if let Some(nodes) = mycielski_refutation(g, k, limits) {
            return Ok(HomCertificate::None {
                nodes_explored: nodes,
            });
        }
        if k >= 4 && limits.node_budget > FIRST_PASS_BUDGET {
            let first = Limits {
                node_budget: FIRST_PASS_BUDGET,
                ..limits.clone()
            };
            match search(g, h, &first) {
                Err(Error::Unknown { .. }) => {}
                decided => return decided,
            }
            match coloring::by_independent_sets(g, k, limits, INDEPENDENT_SET_CAP)? {
                Some(Outcome::Colorable(colors)) => {
                    return Ok(HomCertificate::Exists(HomMap::new(colors)))
                }
                Some(Outcome::NotColorable { tested }) => {
                    return Ok(HomCertificate::None {
                        nodes_explored: FIRST_PASS_BUDGET + tested,
                    })
                }
                None => {}
            }
        }
    }
    search(g, h, limits)
}

const CLIQUE_BUDGET: u64 = 200_000;

/// A clique maps injectively onto a clique, so a clique of `G` larger than
/// `ω(H)` rules out `G -> H`. Skipped when `ω(H)` is not settled cheaply.
fn clique_refutation(g: &Graph, h: &Graph) -> bool {
    let omega_h = if h.is_complete() {
        h.vertex_count()
    } else {
        match max_clique(h, CLIQUE_BUDGET, usize::MAX) {
            (c, true) => c.len(),
            (_, false) => return false,
        }
    };
    max_clique(g, CLIQUE_BUDGET, omega_h + 1).0.len() > omega_h
}

/// Nodes the plain search gets on a `K_k` target, `k >= 4`, before the
/// independent-set decomposition is tried.
const FIRST_PASS_BUDGET: u64 = 200_000;
/// Independent sets the decomposition may remember before giving up.
const INDEPENDENT_SET_CAP: usize = 4_000_000;

/// Smallest and largest `k` for which a Mycielski witness is tried.
const WITNESS_COLORS: std::ops::RangeInclusive<usize> = 3..=5;
const WITNESS_BUDGET: u64 = 20_000;

/// Bitmask of `k` for which `M_{k+1} -/-> K_k` has been established.
static WITNESS_PROVEN: std::sync::Mutex<u64> = std::sync::Mutex::new(0);

/// Nodes spent if `M_{k+1} -> G` was found, proving `G -/-> K_k`.
fn mycielski_refutation(g: &Graph, k: usize, limits: &Limits) -> Option<u64> {
    if !WITNESS_COLORS.contains(&k) || !g.has_odd_closed_walk_within(5) {
        return None;
    }
    let budget = WITNESS_BUDGET.min(limits.node_budget);
    let quiet = Limits {
        node_budget: budget,
        symmetry_breaking: false,
        ..limits.clone()
    };
    let w = mycielski(k + 1);
    let mut nodes = 0;
    let proven = *WITNESS_PROVEN.lock().unwrap() >> k & 1 == 1;
    if !proven {
        let strict = Limits {
            node_budget: budget,
            ..limits.clone()
        };
        match search(&w, &complete(k), &strict) {
            Ok(HomCertificate::None { nodes_explored }) => {
                nodes += nodes_explored;
                *WITNESS_PROVEN.lock().unwrap() |= 1 << k;
            }
            _ => return None,
        }
    }
    match search(&w, g, &quiet) {
        Ok(HomCertificate::Exists(m)) => {
            assert!(m.is_valid(&w, g), "invalid witness homomorphism");
            Some(nodes + w.vertex_count() as u64)
        }
        _ => None,
    }
}

/// The backtracking search proper, one connected component of `G` at a time.
fn search(g: &Graph, h: &Graph, limits: &Limits) -> Result<HomCertificate> {
    let ng = g.vertex_count();
    let target = Target::new(h, limits);
    let mut images = vec![usize::MAX; ng];
    let mut nodes = 0u64;
    for comp in g.components() {
        if comp.len() == 1 {
            images[comp[0]] = target.value_order[0];
            continue;
        }
        let mut local = vec![usize::MAX; ng];
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let nbrs: Vec<Vec<usize>> = comp
            .iter()
            .map(|&v| g.neighbors(v).iter().map(|u| local[u]).collect())
            .collect();
        let k = comp.len();
        let mut c = Component {
            t: &target,
            nbrs,
            nodes: 0,
            budget: limits.node_budget.saturating_sub(nodes),
            support: vec![0; target.words],
            queue: (0..k).rev().collect(),
            queued: vec![true; k],
        };
        let mut doms = vec![0u64; k * target.words];
        for v in 0..k {
            let full = crate::bitset::BitSet::full(target.n);
            doms[v * target.words..(v + 1) * target.words].copy_from_slice(full.words());
        }
        let consistent = c.propagate(&mut doms);
        let found = if consistent {
            let mut pool = Vec::new();
            let mut used = vec![false; target.n];
            c.search(&doms, &mut pool, 0, &mut used)?
        } else {
            None
        };
        nodes += c.nodes;
        match found {
            Some(sol) => {
                for (i, &v) in comp.iter().enumerate() {
                    images[v] = sol[i];
                }
            }
            None => return Ok(HomCertificate::None { nodes_explored: nodes }),
        }
    }
    Ok(HomCertificate::Exists(HomMap::new(images)))
}
