//! Subdivisions, walk powers and fractional powers.
//!
//! `G^{(2r+1)/(2s+1)}` is the `(2r+1)`-th walk power of the
//! `(2s+1)`-subdivision. The negative powers `G^{-1/(2s+1)}` are built on
//! tuples of vertex subsets and serve as the target side of the duality
//! `G^{(2r+1)/(2s+1)} -> H  <=>  G -> H^{-(2s+1)/(2r+1)}`.

use std::collections::HashSet;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::label::VertexLabel;
use crate::rational::RationalValue;
use crate::Limits;

/// The exponent `(2r+1)/(2s+1)`, never reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OddFraction {
    pub r: u32,
    pub s: u32,
}

impl OddFraction {
    pub const ONE: OddFraction = OddFraction { r: 0, s: 0 };

    pub fn new(r: u32, s: u32) -> Self {
        OddFraction { r, s }
    }

    /// From an odd numerator and odd denominator.
    pub fn from_odd(num: u32, den: u32) -> Result<Self> {
        if num % 2 == 0 || den % 2 == 0 {
            return Err(Error::Precondition(format!(
                "exponent {num}/{den} must have odd numerator and denominator"
            )));
        }
        Ok(OddFraction {
            r: (num - 1) / 2,
            s: (den - 1) / 2,
        })
    }

    pub fn numerator(self) -> u64 {
        2 * self.r as u64 + 1
    }

    pub fn denominator(self) -> u64 {
        2 * self.s as u64 + 1
    }

    pub fn value(self) -> RationalValue {
        RationalValue::new(self.numerator(), self.denominator())
    }
}

impl serde::Serialize for OddFraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for OddFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

/// `S_t(G)`: every edge becomes a path with `t - 1` inner vertices.
///
/// For odd `t = 2s+1` the inner vertices of edge `uv` are `(uv)_1..(uv)_s`
/// and `(vu)_1..(vu)_s`, with `(uv)_0 = u`, joined by the edges
/// `(uv)_i (vu)_{s-i}` and `(vu)_{s-j+1} (uv)_j`. So `(uv)_i` sits at
/// distance `2i` from `u`. For even `t` the inner vertices are
/// `(uv)_1..(uv)_{t-1}` in path order from `u`.
///
/// Subdividing a graph that already has subdivision labels can repeat a
/// label: in `(S_3 C_5)^3` the vertices `0` and `1` are adjacent, and
/// `(0,1)_1` is taken. The endpoint names in new labels are then wrapped as
/// `[u]`, `[[u]]`, ... until every label is fresh.
pub fn subdivide(g: &Graph, t: usize) -> Result<Graph> {
    g.require_loopless()?;
    if t < 1 {
        return Err(Error::Precondition("subdivision length must be >= 1".into()));
    }
    let depth = endpoint_depth(g, t);
    let name = |v: usize| wrapped(g.label(v), depth);
    let mut b = GraphBuilder::new();
    for l in g.labels() {
        b.add_vertex(l.clone())?;
    }
    for &(u, v) in g.edges() {
        let (lu, lv) = (name(u), name(v));
        if t % 2 == 1 {
            let s = (t - 1) / 2;
            // side[0][i] = (uv)_i, side[1][i] = (vu)_i
            let mut uv = vec![u];
            let mut vu = vec![v];
            for i in 1..=s {
                uv.push(b.add_vertex(VertexLabel::sub(lu.clone(), lv.clone(), i))?);
            }
            for i in 1..=s {
                vu.push(b.add_vertex(VertexLabel::sub(lv.clone(), lu.clone(), i))?);
            }
            for i in 0..=s {
                b.add_edge(uv[i], vu[s - i]);
            }
            for j in 1..=s {
                b.add_edge(vu[s - j + 1], uv[j]);
            }
        } else {
            let mut prev = u;
            for i in 1..t {
                let x = b.add_vertex(VertexLabel::sub(lu.clone(), lv.clone(), i))?;
                b.add_edge(prev, x);
                prev = x;
            }
            b.add_edge(prev, v);
        }
    }
    Ok(b.build())
}

fn wrapped(l: &VertexLabel, depth: usize) -> VertexLabel {
    let mut l = l.clone();
    for _ in 0..depth {
        l = VertexLabel::atom(format!("[{l}]"));
    }
    l
}

/// Least wrapping depth for which no new inner-vertex label of
/// [`subdivide`] equals an existing vertex label.
fn endpoint_depth(g: &Graph, t: usize) -> usize {
    let existing: HashSet<&VertexLabel> = g.labels().iter().collect();
    if !existing.iter().any(|l| matches!(l, VertexLabel::Sub(..))) {
        return 0;
    }
    let inner = if t % 2 == 1 { (t - 1) / 2 } else { t - 1 };
    (0..)
        .find(|&d| {
            g.edges().iter().all(|&(u, v)| {
                let (lu, lv) = (wrapped(g.label(u), d), wrapped(g.label(v), d));
                (1..=inner).all(|i| {
                    !existing.contains(&VertexLabel::sub(lu.clone(), lv.clone(), i))
                        && !existing.contains(&VertexLabel::sub(lv.clone(), lu.clone(), i))
                })
            })
        })
        .expect("some depth is collision free")
}

fn bool_mul(a: &[BitSet], b: &[BitSet]) -> Vec<BitSet> {
    a.iter()
        .map(|row| {
            let mut out = BitSet::new(b.len());
            for j in row.iter() {
                out.union_with(&b[j]);
            }
            out
        })
        .collect()
}

/// `G^k`: `u ~ v` iff some walk of exactly `k` edges joins them (loops included).
pub fn power(g: &Graph, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::Precondition("power exponent must be >= 1".into()));
    }
    let mut base: Vec<BitSet> = g.rows().to_vec();
    let mut acc: Option<Vec<BitSet>> = None;
    let mut e = k;
    loop {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => bool_mul(&a, &base),
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        base = bool_mul(&base, &base);
    }
    Ok(g.with_adjacency(acc.expect("k >= 1")))
}

/// `G^{(2r+1)/(2s+1)} = (S_{2s+1}(G))^{2r+1}` for loopless `G`.
pub fn fractional_power(g: &Graph, e: OddFraction) -> Result<Graph> {
    g.require_loopless()?;
    let sub = subdivide(g, e.denominator() as usize)?;
    power(&sub, e.numerator() as usize)
}

fn submasks_nonempty(mask: u64) -> impl Iterator<Item = u64> {
    let mut x: u64 = 0;
    let mut done = mask == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        x = x.wrapping_sub(mask) & mask;
        if x == mask {
            done = true;
        }
        Some(x)
    })
}

fn mask_to_vec(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// `G^{-1/(2s+1)}`.
///
/// Vertices are tuples `(A_1, ..., A_{s+1})` with `A_1 = {v}` and
/// `∅ ≠ A_i ⊆ N_{i-1}(v)`; labels list the members of each `A_i` as 0-based
/// positions in `G`'s vertex list. Two tuples are adjacent when
/// `A_i ⊆ B_{i+1}` and `B_i ⊆ A_{i+1}` for `i <= s`, and every member of
/// `A_j` is adjacent to every member of `B_j` for `j <= s+1`.
///
/// An isolated vertex has no tuples once `s >= 1`. Intended for graphs
/// without isolated vertices; `G` must have at most 64 vertices.
pub fn negative_unit_power(g: &Graph, s: usize) -> Result<Graph> {
    negative_unit_power_with(g, s, &Limits::default())
}

pub fn negative_unit_power_with(g: &Graph, s: usize, limits: &Limits) -> Result<Graph> {
    g.require_loopless()?;
    let n = g.vertex_count();
    if n > 64 {
        return Err(Error::Precondition(format!(
            "negative powers support at most 64 base vertices, got {n}"
        )));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect();
    let walk_masks = |v: usize| -> Vec<u64> {
        let mut out = vec![1u64 << v];
        for _ in 0..s {
            let last = *out.last().unwrap();
            let next = (0..n)
                .filter(|&u| last >> u & 1 == 1)
                .fold(0u64, |m, u| m | adj[u]);
            out.push(next);
        }
        out
    };

    // Projected size first.
    let per_vertex: Vec<Vec<u64>> = (0..n).map(walk_masks).collect();
    let mut projected: usize = 0;
    for nb in &per_vertex {
        let mut c: usize = 1;
        for m in &nb[1..] {
            let choices = (1usize << m.count_ones().min(63)).saturating_sub(1);
            c = c.saturating_mul(choices);
        }
        projected = projected.saturating_add(c);
    }
    if projected > limits.vertex_cap {
        return Err(Error::SizeCap {
            what: format!("negative power with s={s}"),
            count: projected,
            cap: limits.vertex_cap,
        });
    }

    let mut tuples: Vec<Vec<u64>> = Vec::with_capacity(projected);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let nb = &per_vertex[v];
        let mut cur = vec![nb[0]];
        fn fill(
            i: usize,
            nb: &[u64],
            cur: &mut Vec<u64>,
            out: &mut Vec<Vec<u64>>,
            group: &mut Vec<usize>,
        ) {
            if i == nb.len() {
                group.push(out.len());
                out.push(cur.clone());
                return;
            }
            for a in submasks_nonempty(nb[i]) {
                cur.push(a);
                fill(i + 1, nb, cur, out, group);
                cur.pop();
            }
        }
        fill(1, nb, &mut cur, &mut tuples, &mut groups[v]);
    }

    // Common neighbourhood of each component set.
    let common = |set: u64| -> u64 {
        (0..n)
            .filter(|&u| set >> u & 1 == 1)
            .fold(u64::MAX, |m, u| m & adj[u])
    };
    let cn: Vec<Vec<u64>> = tuples
        .iter()
        .map(|t| t.iter().map(|&a| common(a)).collect())
        .collect();

    let mut b = GraphBuilder::new();
    for t in &tuples {
        b.add_vertex(VertexLabel::SetTuple(
            t.iter().map(|&a| mask_to_vec(a)).collect(),
        ))?;
    }
    let adjacent = |x: usize, y: usize| -> bool {
        let (a, c) = (&tuples[x], &tuples[y]);
        (0..s).all(|i| a[i] & !c[i + 1] == 0 && c[i] & !a[i + 1] == 0)
            && (0..=s).all(|j| c[j] & !cn[x][j] == 0)
    };
    // A_1 and B_1 are singletons that must be adjacent in G, so only tuple
    // groups over edges of G need comparing.
    for &(v, w) in g.edges() {
        for &x in &groups[v] {
            for &y in &groups[w] {
                if adjacent(x, y) {
                    b.add_edge(x, y);
                }
            }
        }
    }
    Ok(b.build())
}

/// `G^{-(2s+1)/(2r+1)} = (G^{-1/(2r+1)})^{2s+1}`, defined for `s <= r`.
pub fn negative_power(g: &Graph, s: usize, r: usize) -> Result<Graph> {
    negative_power_with(g, s, r, &Limits::default())
}

pub fn negative_power_with(g: &Graph, s: usize, r: usize, limits: &Limits) -> Result<Graph> {
    if s > r {
        return Err(Error::Precondition(format!(
            "negative power needs (2s+1)/(2r+1) <= 1, got s={s}, r={r}"
        )));
    }
    power(&negative_unit_power_with(g, r, limits)?, 2 * s + 1)
}
