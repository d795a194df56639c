//! Chromatic and circular chromatic numbers, power thickness, colorful
//! graphs, the odd-cycle parameter `f(G, 2t+1)` and the Laplacian bound.
//!
//! Every value here is either exact or explicitly a bounded-search lower
//! bound ([`ThicknessEstimate`], [`ChicSweep`]).

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::constructions::{circular_complete, complete, cycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, OddGirth};
use crate::hom::exists_hom_with;
use crate::powers::{fractional_power, subdivide, OddFraction};
use crate::rational::{gcd, RationalValue};
use crate::spectral::laplacian_lambda_max;
use crate::Limits;

fn require_edges(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

fn require_odd_cycle(g: &Graph) -> Result<usize> {
    match g.odd_girth() {
        OddGirth::Finite(og) => Ok(og),
        OddGirth::Infinite => Err(Error::Bipartite),
        OddGirth::One => Err(Error::LoopPresent(
            g.name(g.loop_vertices().next().expect("loop")).to_string(),
        )),
    }
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, &Limits::default())
}

/// Least `k` with `G -> K_k`.
pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    g.require_loopless()?;
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if g.is_bipartite() {
        return Ok(2);
    }
    let mut k = 3;
    while !exists_hom_with(g, &complete(k), limits)?.exists() {
        k += 1;
    }
    Ok(k)
}

/// Reduced fractions `p/q` with `q <= max_den` and `lo < p/q <= hi`, increasing.
fn fractions_between(lo: RationalValue, hi: RationalValue, max_den: u64) -> Vec<RationalValue> {
    let mut out = Vec::new();
    for q in 1..=max_den {
        let first = lo.num * q / lo.den + 1;
        let last = hi.num * q / hi.den;
        for p in first..=last {
            if gcd(p, q) == 1 {
                out.push(RationalValue::new(p, q));
            }
        }
    }
    out.sort();
    out
}

pub fn circular_chromatic_number(g: &Graph) -> Result<RationalValue> {
    circular_chromatic_number_with(g, &Limits::default())
}

/// Least reduced `n/d` with `G -> K_{n/d}`.
///
/// Candidates are the reduced fractions in `(max(2, χ-1), χ]` with
/// `d <= |V(G)|`; since `K_{p/q} -> K_{p'/q'}` exactly when `p/q <= p'/q'`,
/// the least feasible candidate is found by bisection over that ordered list.
pub fn circular_chromatic_number_with(g: &Graph, limits: &Limits) -> Result<RationalValue> {
    g.require_loopless()?;
    require_edges(g)?;
    let chi = chromatic_number_with(g, limits)? as u64;
    if chi <= 2 {
        return Ok(RationalValue::integer(2));
    }
    let lo = RationalValue::integer((chi - 1).max(2));
    let candidates = fractions_between(lo, RationalValue::integer(chi), g.vertex_count() as u64);
    // The last candidate is chi/1, which is always feasible.
    let (mut a, mut b) = (0, candidates.len() - 1);
    while a < b {
        let mid = (a + b) / 2;
        let c = candidates[mid];
        let target = circular_complete(c.num as usize, c.den as usize)?;
        if exists_hom_with(g, &target, limits)?.exists() {
            b = mid;
        } else {
            a = mid + 1;
        }
    }
    Ok(candidates[a])
}

/// Result of the `(n, t)` sweep characterising `χ_c` through cube-root powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChicSweep {
    /// Least `(2n+1)/(n-t)` found, unreduced.
    pub best: Option<RationalValue>,
    /// `(n, t)` attaining `best`.
    pub witness: Option<(u32, u32)>,
    pub max_n: u32,
    pub max_t: u32,
    /// Pairs whose power was decided.
    pub tested: usize,
    /// Always false: the sweep is bounded, so `best` only bounds `χ_c` from above.
    pub exhaustive: bool,
}

pub fn chic_via_powers(g: &Graph, max_t: u32, max_n: u32) -> Result<ChicSweep> {
    chic_via_powers_with(g, max_t, max_n, &Limits::default())
}

/// Least `(2n+1)/(n-t)` over `0 < t < n`, `t <= max_t`, `n <= max_n`, with
/// `χ(G^{(2n+1)/(3(2t+1))}) = 3`. Pairs are tried in increasing ratio, so
/// the first hit is the minimum. Exponents at or above the odd girth give
/// looped powers and are skipped.
pub fn chic_via_powers_with(g: &Graph, max_t: u32, max_n: u32, limits: &Limits) -> Result<ChicSweep> {
    g.require_loopless()?;
    let og = require_odd_cycle(g)?;
    let mut pairs: Vec<(RationalValue, u32, u32)> = Vec::new();
    for t in 1..=max_t {
        for n in t + 1..=max_n {
            let e = OddFraction::new(n, 3 * t + 1);
            if OddGirth::Finite(og).exceeds_ratio(e.numerator(), e.denominator()) {
                pairs.push((RationalValue::new(2 * n as u64 + 1, (n - t) as u64), n, t));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut sweep = ChicSweep {
        best: None,
        witness: None,
        max_n,
        max_t,
        tested: 0,
        exhaustive: false,
    };
    for (ratio, n, t) in pairs {
        let p = fractional_power(g, OddFraction::new(n, 3 * t + 1))?;
        sweep.tested += 1;
        if !p.is_bipartite() && exists_hom_with(&p, &complete(3), limits)?.exists() {
            sweep.best = Some(ratio);
            sweep.witness = Some((n, t));
            break;
        }
    }
    Ok(sweep)
}

/// A bounded-search lower bound for `θ_i(G)` or `θ_H(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThicknessEstimate {
    /// `i` for `θ_i`; `None` for a target-graph estimate.
    pub level: Option<i64>,
    /// Largest `(2r+1)/(2s+1)` satisfying the condition, unreduced; `None`
    /// when no searched exponent qualifies.
    pub best_ratio: Option<RationalValue>,
    pub witness: Option<OddFraction>,
    /// `χ(G^{best_ratio})`, for `θ_i` estimates.
    pub witness_chi: Option<usize>,
    /// Largest denominator searched, `2S+1`.
    pub search_bound: u64,
    /// False when some probe ran out of budget and was counted as failing.
    pub exhaustive_below_bound: bool,
}

/// Per denominator `2s+1`, bisects for the largest `r` with
/// `(2r+1)/(2s+1) < og(G)` and `holds(G^{(2r+1)/(2s+1)})`. The condition must
/// be monotone along exponents, which holds because `G^a -> G^b` for `a <= b`.
fn lattice_search(
    g: &Graph,
    og: usize,
    max_s: u32,
    holds: &(dyn Fn(&Graph) -> Result<bool> + Sync),
) -> Result<(Option<OddFraction>, bool)> {
    let per_s: Vec<Result<(Option<OddFraction>, bool)>> = (0..=max_s)
        .into_par_iter()
        .map(|s| {
            let mut complete_search = true;
            let mut probe = |r: u32| -> Result<bool> {
                let p = fractional_power(g, OddFraction::new(r, s))?;
                match holds(&p) {
                    Err(Error::Unknown { .. }) => {
                        complete_search = false;
                        Ok(false)
                    }
                    other => other,
                }
            };
            let r_max = ((og as u64 * (2 * s as u64 + 1) - 3) / 2) as u32;
            if !probe(0)? {
                return Ok((None, complete_search));
            }
            let (mut lo, mut hi) = (0, r_max);
            while lo < hi {
                let mid = lo + (hi - lo).div_ceil(2);
                if probe(mid)? {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            Ok((Some(OddFraction::new(lo, s)), complete_search))
        })
        .collect();
    let mut best: Option<OddFraction> = None;
    let mut exhaustive = true;
    for item in per_s {
        let (found, done) = item?;
        exhaustive &= done;
        if let Some(e) = found {
            // Keep the smallest denominator among equal values.
            if best.is_none_or(|b| e.value() > b.value()) {
                best = Some(e);
            }
        }
    }
    Ok((best, exhaustive))
}

pub fn thickness_lower_bound(g: &Graph, i: i64, max_s: u32) -> Result<ThicknessEstimate> {
    thickness_lower_bound_with(g, i, max_s, &Limits::default())
}

/// Lower bound for `θ_i(G)`: the largest searched exponent `e < og(G)` with
/// denominator at most `2·max_s+1` and `χ(G^e) <= χ(G) + i`.
pub fn thickness_lower_bound_with(
    g: &Graph,
    i: i64,
    max_s: u32,
    limits: &Limits,
) -> Result<ThicknessEstimate> {
    g.require_loopless()?;
    let og = require_odd_cycle(g)?;
    let chi = chromatic_number_with(g, limits)? as i64;
    if i < 3 - chi {
        return Err(Error::Precondition(format!(
            "level {i} is below 3 - χ(G) = {}",
            3 - chi
        )));
    }
    let colors = complete((chi + i) as usize);
    let holds = |p: &Graph| -> Result<bool> { Ok(exists_hom_with(p, &colors, limits)?.exists()) };
    let (best, exhaustive) = lattice_search(g, og, max_s, &holds)?;
    let witness_chi = match best {
        Some(e) => match chromatic_number_with(&fractional_power(g, e)?, limits) {
            Ok(c) => Some(c),
            Err(Error::Unknown { .. }) => None,
            Err(other) => return Err(other),
        },
        None => None,
    };
    Ok(ThicknessEstimate {
        level: Some(i),
        best_ratio: best.map(OddFraction::value),
        witness: best,
        witness_chi,
        search_bound: 2 * max_s as u64 + 1,
        exhaustive_below_bound: exhaustive,
    })
}

pub fn theta_h_lower_bound(g: &Graph, h: &Graph, max_s: u32) -> Result<ThicknessEstimate> {
    theta_h_lower_bound_with(g, h, max_s, &Limits::default())
}

/// Lower bound for `θ_H(G)`: the largest searched exponent `e < og(G)` with
/// `G^e -> H`.
pub fn theta_h_lower_bound_with(
    g: &Graph,
    h: &Graph,
    max_s: u32,
    limits: &Limits,
) -> Result<ThicknessEstimate> {
    g.require_loopless()?;
    let og = require_odd_cycle(g)?;
    require_odd_cycle(h)?;
    let holds = |p: &Graph| -> Result<bool> { Ok(exists_hom_with(p, h, limits)?.exists()) };
    let (best, exhaustive) = lattice_search(g, og, max_s, &holds)?;
    Ok(ThicknessEstimate {
        level: None,
        best_ratio: best.map(OddFraction::value),
        witness: best,
        witness_chi: None,
        search_bound: 2 * max_s as u64 + 1,
        exhaustive_below_bound: exhaustive,
    })
}

pub fn is_colorful(g: &Graph) -> Result<bool> {
    is_colorful_with(g, &Limits::default())
}

/// True iff every proper `χ(G)`-colouring has a nonempty induced subgraph in
/// which each closed neighbourhood sees all colours.
///
/// Colourings are enumerated once per partition into colour classes. For
/// each one, vertices whose closed neighbourhood misses a colour are peeled
/// until nothing changes; any such subgraph survives peeling, and a
/// nonempty fixpoint is one.
pub fn is_colorful_with(g: &Graph, limits: &Limits) -> Result<bool> {
    g.require_loopless()?;
    let k = chromatic_number_with(g, limits)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(true);
    }
    let order = coloring_order(g);
    let mut colors = vec![usize::MAX; n];
    let mut e = ColoringWalk {
        g,
        k,
        order: &order,
        colors: &mut colors,
        nodes: 0,
        budget: limits.coloring_budget,
    };
    e.all_colorful(0, 0)
}

/// Highest degree first, then the vertex with most already-placed neighbours.
fn coloring_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            links[u] += 1;
        }
    }
    order
}

struct ColoringWalk<'a> {
    g: &'a Graph,
    k: usize,
    order: &'a [usize],
    colors: &'a mut Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl ColoringWalk<'_> {
    /// False as soon as one completed colouring peels to nothing.
    fn all_colorful(&mut self, depth: usize, used: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(!peel(self.g, self.colors, self.k).is_empty());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Unknown {
                budget: self.budget,
            });
        }
        let v = self.order[depth];
        // A new colour is only ever the next unused one.
        for c in 0..(used + 1).min(self.k) {
            if self.g.neighbors(v).iter().any(|u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            let ok = self.all_colorful(depth + 1, used.max(c + 1))?;
            self.colors[v] = usize::MAX;
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Largest vertex set on which every closed neighbourhood carries all `k` colours.
fn peel(g: &Graph, colors: &[usize], k: usize) -> BitSet {
    let n = g.vertex_count();
    let mut alive = BitSet::full(n);
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive.contains(v) {
                continue;
            }
            let mut seen = vec![false; k];
            seen[colors[v]] = true;
            for u in g.neighbors(v).iter() {
                if alive.contains(u) {
                    seen[colors[u]] = true;
                }
            }
            if seen.iter().any(|&s| !s) {
                alive.remove(v);
                changed = true;
            }
        }
        if !changed {
            return alive;
        }
    }
}

pub fn f_parameter(g: &Graph, t: u32, max_n: u32) -> Result<u64> {
    f_parameter_with(g, t, max_n, &Limits::default())
}

/// Largest `2n+1 <= 2·max_n+1` with `S_{2t+1}(G) -> C_{2n+1}`.
///
/// `C_{2n+1} -> C_{2n-1}`, so the feasible `n` form an initial segment and
/// the largest is found by bisection. With `max_n >= ((2t+1)·og(G) - 1)/2`
/// the answer is `f(G, 2t+1)` exactly.
pub fn f_parameter_with(g: &Graph, t: u32, max_n: u32, limits: &Limits) -> Result<u64> {
    g.require_loopless()?;
    require_odd_cycle(g)?;
    let sub = subdivide(g, 2 * t as usize + 1)?;
    let maps = |n: u32| -> Result<bool> {
        Ok(exists_hom_with(&sub, &cycle(2 * n as usize + 1), limits)?.exists())
    };
    if max_n < 1 || !maps(1)? {
        return Err(Error::Precondition(format!(
            "no odd cycle of length at most {} is a target of the subdivision",
            2 * max_n as u64 + 1
        )));
    }
    let (mut lo, mut hi) = (1, max_n);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if maps(mid)? {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(2 * lo as u64 + 1)
}

/// `2⌊(1 + t·χ_c)/(χ_c - 2)⌋ + 1` in exact integer arithmetic.
pub fn f_closed_form(chi_c: RationalValue, t: u64) -> Result<u64> {
    let (p, q) = (chi_c.num, chi_c.den);
    if p <= 2 * q {
        return Err(Error::Precondition(format!("χ_c = {chi_c} is not above 2")));
    }
    // (1 + t p/q) / (p/q - 2) = (q + t p) / (p - 2q)
    Ok(2 * ((q + t * p) / (p - 2 * q)) + 1)
}

/// Laplacian necessary condition for `G -> C_{2n+1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralBoundReport {
    pub lambda_g: f64,
    pub edge_count: usize,
    pub vertex_count: usize,
    pub n: usize,
    pub lambda_cycle: f64,
    /// `λ_G >= (2|E| / 2|V|)·λ_{C_{2n+1}} - 1e-9`. False certifies that no
    /// homomorphism to `C_{2n+1}` exists.
    pub bound_satisfied: bool,
}

pub fn spectral_check(g: &Graph, n: usize) -> Result<SpectralBoundReport> {
    g.require_loopless()?;
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if n == 0 {
        return Err(Error::Precondition("the cycle length 2n+1 needs n >= 1".into()));
    }
    let lambda_g = laplacian_lambda_max(g)?;
    let lambda_cycle = laplacian_lambda_max(&cycle(2 * n + 1))?;
    let (e, m) = (g.edge_count(), g.vertex_count());
    let scale = (2 * e) as f64 / (2 * m) as f64;
    Ok(SpectralBoundReport {
        lambda_g,
        edge_count: e,
        vertex_count: m,
        n,
        lambda_cycle,
        bound_satisfied: lambda_g >= scale * lambda_cycle - 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{helical, kneser, petersen, schrijver};

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(7)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(8)).unwrap(), 2);
        assert_eq!(chromatic_number(&kneser(6, 2).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number(&helical(4, 1, 2).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number(&complete(1)).unwrap(), 1);
    }

    #[test]
    fn fraction_candidates() {
        let f = fractions_between(RationalValue::integer(2), RationalValue::integer(3), 5);
        let text: Vec<String> = f.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            text,
            ["11/5", "9/4", "7/3", "12/5", "5/2", "13/5", "8/3", "11/4", "14/5", "3/1"]
        );
    }

    #[test]
    fn circular_examples() {
        assert_eq!(circular_chromatic_number(&cycle(5)).unwrap().to_string(), "5/2");
        assert_eq!(circular_chromatic_number(&cycle(7)).unwrap().to_string(), "7/3");
        assert_eq!(circular_chromatic_number(&petersen()).unwrap().to_string(), "3/1");
        assert_eq!(circular_chromatic_number(&complete(4)).unwrap().to_string(), "4/1");
        assert_eq!(circular_chromatic_number(&cycle(6)).unwrap().to_string(), "2/1");
        let k = circular_complete(11, 4).unwrap();
        assert_eq!(circular_chromatic_number(&k).unwrap().to_string(), "11/4");
        assert!(circular_chromatic_number(&crate::graph::GraphBuilder::new().build()).is_err());
    }

    #[test]
    fn chic_sweep_on_c5() {
        let s = chic_via_powers(&cycle(5), 3, 10).unwrap();
        assert_eq!(s.best.unwrap().reduce().to_string(), "5/2");
        assert_eq!(s.witness, Some((7, 1)));
        assert!(!s.exhaustive);
        assert!(matches!(chic_via_powers(&cycle(6), 2, 5), Err(Error::Bipartite)));
    }

    #[test]
    fn thickness_examples() {
        let c5 = thickness_lower_bound(&cycle(5), 0, 2).unwrap();
        assert_eq!(c5.witness, Some(OddFraction::new(2, 1)));
        assert_eq!(c5.best_ratio.unwrap().to_string(), "5/3");
        assert_eq!(c5.witness_chi, Some(3));
        assert!(c5.exhaustive_below_bound);
        let k4 = thickness_lower_bound(&complete(4), 0, 2).unwrap();
        assert_eq!(k4.best_ratio.unwrap(), RationalValue::integer(1));
        assert_eq!(k4.witness, Some(OddFraction::ONE));
        let h = thickness_lower_bound(&helical(4, 1, 2).unwrap(), 0, 0).unwrap();
        assert_eq!(h.witness, Some(OddFraction::new(1, 0)));
        assert_eq!(h.witness_chi, Some(4));
        assert!(thickness_lower_bound(&cycle(5), -1, 1).is_err());
        assert!(thickness_lower_bound(&cycle(4), 0, 1).is_err());
    }

    #[test]
    fn theta_h_examples() {
        let e = theta_h_lower_bound(&cycle(5), &cycle(5), 0).unwrap();
        assert!(e.best_ratio.unwrap() >= RationalValue::integer(1));
        let e = theta_h_lower_bound(&cycle(5), &complete(3), 1).unwrap();
        assert_eq!(e.best_ratio.unwrap().to_string(), "5/3");
        // C_7 -> C_5, so the estimate reaches at least 1.
        let e = theta_h_lower_bound(&cycle(7), &cycle(5), 0).unwrap();
        assert!(e.best_ratio.unwrap() >= RationalValue::integer(1));
        // C_5 -/-> C_7 and no denominator-1 exponent below 1 exists.
        assert_eq!(theta_h_lower_bound(&cycle(5), &cycle(7), 0).unwrap().best_ratio, None);
    }

    #[test]
    fn colorful_examples() {
        for n in 3..=5 {
            assert!(is_colorful(&complete(n)).unwrap());
        }
        assert!(!is_colorful(&cycle(5)).unwrap());
        assert!(is_colorful(&petersen()).unwrap());
        assert!(is_colorful(&schrijver(5, 2).unwrap()).unwrap() == is_colorful(&cycle(5)).unwrap());
        let tiny = Limits {
            coloring_budget: 2,
            ..Limits::default()
        };
        assert!(matches!(is_colorful_with(&petersen(), &tiny), Err(Error::Unknown { .. })));
    }

    #[test]
    fn f_values() {
        assert_eq!(f_parameter(&cycle(5), 0, 10).unwrap(), 5);
        assert_eq!(f_parameter(&cycle(5), 1, 10).unwrap(), 15);
        assert_eq!(f_parameter(&petersen(), 0, 10).unwrap(), 3);
        assert_eq!(f_closed_form(RationalValue::new(5, 2), 0).unwrap(), 5);
        assert_eq!(f_closed_form(RationalValue::new(5, 2), 1).unwrap(), 15);
        assert_eq!(f_closed_form(RationalValue::integer(3), 0).unwrap(), 3);
        assert!(f_closed_form(RationalValue::integer(2), 0).is_err());
        assert!(f_parameter(&complete(4), 0, 5).is_err());
    }

    #[test]
    fn spectral_examples() {
        assert!(spectral_check(&cycle(5), 2).unwrap().bound_satisfied);
        let k4 = spectral_check(&complete(4), 2).unwrap();
        assert!(!k4.bound_satisfied);
        assert!((k4.lambda_g - 4.0).abs() < 1e-9);
        assert!(spectral_check(&cycle(15), 7).unwrap().bound_satisfied);
    }
}
