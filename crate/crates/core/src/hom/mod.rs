//! Homomorphism existence, equivalence, cores and the power duality check.

mod clique;
mod coloring;
mod solver;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::VertexLabel;
use crate::powers::{fractional_power, negative_power_with, OddFraction};
use crate::Limits;

/// A vertex map `V(G) -> V(H)` by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMap {
    images: Vec<usize>,
}

impl HomMap {
    pub(crate) fn new(images: Vec<usize>) -> Self {
        HomMap { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    /// Every edge of `g`, loops included, lands on an edge of `h`.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        self.images.len() == g.vertex_count()
            && self.images.iter().all(|&x| x < h.vertex_count())
            && g.edges()
                .iter()
                .all(|&(u, v)| h.has_edge(self.images[u], self.images[v]))
    }

    /// `(vertex of G, image in H)` in vertex order of `g`.
    pub fn to_labels(&self, g: &Graph, h: &Graph) -> Vec<(VertexLabel, VertexLabel)> {
        self.images
            .iter()
            .enumerate()
            .map(|(v, &x)| (g.label(v).clone(), h.label(x).clone()))
            .collect()
    }
}

/// Outcome of a completed search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomCertificate {
    Exists(HomMap),
    /// The search space was exhausted.
    None { nodes_explored: u64 },
}

impl HomCertificate {
    pub fn exists(&self) -> bool {
        matches!(self, HomCertificate::Exists(_))
    }

    pub fn map(&self) -> Option<&HomMap> {
        match self {
            HomCertificate::Exists(m) => Some(m),
            HomCertificate::None { .. } => None,
        }
    }
}

/// Decides `G -> H` with default limits.
pub fn exists_hom(g: &Graph, h: &Graph) -> Result<HomCertificate> {
    exists_hom_with(g, h, &Limits::default())
}

/// Decides `G -> H`. Returns [`Error::Unknown`] when the node budget runs out.
///
/// A returned map is always checked against every edge of `G`.
pub fn exists_hom_with(g: &Graph, h: &Graph, limits: &Limits) -> Result<HomCertificate> {
    let cert = solver::solve(g, h, limits)?;
    if let HomCertificate::Exists(m) = &cert {
        assert!(m.is_valid(g, h), "solver produced an invalid homomorphism");
    }
    Ok(cert)
}

/// `G -> H` and `H -> G`.
pub fn hom_equivalent(g: &Graph, h: &Graph) -> Result<bool> {
    hom_equivalent_with(g, h, &Limits::default())
}

pub fn hom_equivalent_with(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    Ok(exists_hom_with(g, h, limits)?.exists() && exists_hom_with(h, g, limits)?.exists())
}

/// `G -> H` but not `H -> G`.
pub fn strictly_below(g: &Graph, h: &Graph) -> Result<bool> {
    strictly_below_with(g, h, &Limits::default())
}

pub fn strictly_below_with(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    Ok(exists_hom_with(g, h, limits)?.exists() && !exists_hom_with(h, g, limits)?.exists())
}

/// The core of `G` as an induced subgraph.
pub fn core_of(g: &Graph) -> Result<Graph> {
    Ok(core_with_retraction(g, &Limits::default())?.0)
}

/// The core of `G` together with a retraction: `r[v]` is the core vertex
/// (index into the returned graph) that `v` maps to, and `r` is the identity
/// on the core. Refuses graphs above `limits.core_cap` vertices.
pub fn core_with_retraction(g: &Graph, limits: &Limits) -> Result<(Graph, Vec<usize>)> {
    let n = g.vertex_count();
    if n > limits.core_cap {
        return Err(Error::SizeCap {
            what: "core computation".into(),
            count: n,
            cap: limits.core_cap,
        });
    }
    let mut current: Vec<usize> = (0..n).collect();
    // f: G -> G[current], as indices of G.
    let mut f: Vec<usize> = (0..n).collect();
    loop {
        let sub = g.induced_by_indices(&current);
        let mut shrunk = false;
        for drop in (0..current.len()).rev() {
            let without: Vec<usize> = current
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &v)| v)
                .collect();
            let target = g.induced_by_indices(&without);
            if let HomCertificate::Exists(m) = exists_hom_with(&sub, &target, limits)? {
                let mut pos = vec![usize::MAX; n];
                for (i, &v) in current.iter().enumerate() {
                    pos[v] = i;
                }
                for x in f.iter_mut() {
                    *x = without[m.image(pos[*x])];
                }
                let mut image: Vec<usize> = m.images().iter().map(|&i| without[i]).collect();
                image.sort_unstable();
                image.dedup();
                current = image;
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            break;
        }
    }
    // f restricted to the core is an automorphism; undo it.
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in current.iter().enumerate() {
        pos[v] = i;
    }
    let mut undo = vec![usize::MAX; n];
    for &y in &current {
        undo[f[y]] = y;
    }
    let retraction = f.iter().map(|&x| pos[undo[x]]).collect();
    Ok((g.induced_by_indices(&current), retraction))
}

/// Both sides of `G^e -> H  <=>  G -> H^{-1/e}` for one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCheck {
    pub exponent: OddFraction,
    /// `G^e -> H`.
    pub power_side: bool,
    /// `G -> H^{-1/e}`.
    pub negative_side: bool,
}

impl DualityCheck {
    pub fn holds(&self) -> bool {
        self.power_side == self.negative_side
    }
}

/// Evaluates both sides of the duality. Requires `1 <= e < og(G)` and a
/// loopless `H`.
pub fn verify_duality(g: &Graph, h: &Graph, e: OddFraction, limits: &Limits) -> Result<DualityCheck> {
    if e.r < e.s {
        return Err(Error::Precondition(format!("exponent {e} is below 1")));
    }
    if !g.odd_girth().exceeds_ratio(e.numerator(), e.denominator()) {
        return Err(Error::Precondition(format!(
            "exponent {e} is not below the odd girth {}",
            g.odd_girth()
        )));
    }
    h.require_loopless()?;
    let power = fractional_power(g, e)?;
    let power_side = exists_hom_with(&power, h, limits)?.exists();
    let dual = negative_power_with(h, e.s as usize, e.r as usize, limits)?;
    let negative_side = exists_hom_with(g, &dual, limits)?.exists();
    Ok(DualityCheck {
        exponent: e,
        power_side,
        negative_side,
    })
}
