//! Finite undirected graphs with optional loops.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// A finite undirected graph. Loops are allowed, parallel edges are not.
///
/// Vertices keep their construction order; adjacency is held both as a
/// sorted edge list and as one bitset row per vertex.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BitSet>,
    /// `(u, v)` with `u <= v`, sorted.
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddGirth {
    /// The graph has a loop.
    One,
    Finite(usize),
    /// Bipartite (including edgeless).
    Infinite,
}

impl OddGirth {
    /// True when `value < og`, comparing `value` against the odd girth.
    pub fn exceeds(&self, value: usize) -> bool {
        match *self {
            OddGirth::One => value < 1,
            OddGirth::Finite(g) => value < g,
            OddGirth::Infinite => true,
        }
    }

    /// Exact test of `num/den < og` for positive `den`.
    pub fn exceeds_ratio(&self, num: u64, den: u64) -> bool {
        match *self {
            OddGirth::One => num < den,
            OddGirth::Finite(g) => num < g as u64 * den,
            OddGirth::Infinite => true,
        }
    }
}

impl fmt::Display for OddGirth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddGirth::One => f.write_str("1"),
            OddGirth::Finite(g) => write!(f, "{g}"),
            OddGirth::Infinite => f.write_str("inf"),
        }
    }
}

/// Incremental construction; edges are deduplicated silently.
#[derive(Default)]
pub struct GraphBuilder {
    labels: Vec<VertexLabel>,
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: VertexLabel) -> Result<usize> {
        let name = label.render();
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateVertex(name));
        }
        let id = self.labels.len();
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.labels.push(label);
        Ok(id)
    }

    /// Returns the index of `label`, adding it if absent.
    pub fn vertex(&mut self, label: VertexLabel) -> usize {
        match self.index.get(&label.render()) {
            Some(&i) => i,
            None => self.add_vertex(label).expect("absent label"),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.labels.len() && v < self.labels.len());
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let mut adj = vec![BitSet::new(n); n];
        for &(u, v) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph {
            labels: self.labels,
            names: self.names,
            index: self.index,
            adj,
            edges: self.edges.into_iter().collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from labels and edges given by label.
    pub fn new(labels: Vec<VertexLabel>, edges: &[(VertexLabel, VertexLabel)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for l in labels {
            b.add_vertex(l)?;
        }
        let mut seen = BTreeSet::new();
        for (x, y) in edges {
            let u = *b
                .index
                .get(&x.render())
                .ok_or_else(|| Error::UnknownVertex(x.render()))?;
            let v = *b
                .index
                .get(&y.render())
                .ok_or_else(|| Error::UnknownVertex(y.render()))?;
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(x.render(), y.render()));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    /// Same vertex list, adjacency given by symmetric bitset rows.
    pub(crate) fn with_adjacency(&self, adj: Vec<BitSet>) -> Graph {
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            edges.extend(row.iter().filter(|&v| v >= u).map(|v| (u, v)));
        }
        Graph {
            labels: self.labels.clone(),
            names: self.names.clone(),
            index: self.index.clone(),
            adj,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    /// Rendered label of vertex `v`.
    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn index_of_label(&self, label: &VertexLabel) -> Option<usize> {
        self.index_of(&label.render())
    }

    fn require(&self, label: &VertexLabel) -> Result<usize> {
        self.index_of_label(label)
            .ok_or_else(|| Error::UnknownVertex(label.render()))
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[BitSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.adj[v].contains(v)
    }

    pub fn loop_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(|&v| self.has_loop(v))
    }

    pub fn has_loops(&self) -> bool {
        self.loop_vertices().next().is_some()
    }

    /// Errors with `LoopPresent` naming the first looped vertex.
    pub fn require_loopless(&self) -> Result<()> {
        match self.loop_vertices().next() {
            Some(v) => Err(Error::LoopPresent(self.name(v).to_owned())),
            None => Ok(()),
        }
    }

    /// Edge list by index, `(u, v)` with `u <= v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of distinct neighbours (a loop counts once).
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        !self.has_loops() && self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// True when adjacency depends only on `(j - i) mod n` in vertex order.
    /// Rotation is then an automorphism, so the graph is vertex-transitive.
    pub fn is_circulant(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        (1..n).all(|i| (0..n).all(|d| self.adj[0].contains(d) == self.adj[i].contains((i + d) % n)))
    }

    /// Shortest odd closed walk length.
    pub fn odd_girth(&self) -> OddGirth {
        if self.has_loops() {
            return OddGirth::One;
        }
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(x) = queue.pop_front() {
                // Any same-level edge beyond here gives a walk of at least this length.
                if 2 * dist[x] + 1 >= best {
                    break 'bfs;
                }
                for y in self.adj[x].iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    } else if dist[y] == dist[x] {
                        best = best.min(2 * dist[x] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            OddGirth::Infinite
        } else {
            OddGirth::Finite(best)
        }
    }

    /// True when some odd closed walk has length at most `bound`.
    /// Breadth-first search from each vertex stops at depth `bound / 2`.
    pub fn has_odd_closed_walk_within(&self, bound: usize) -> bool {
        if self.has_loops() {
            return bound >= 1;
        }
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 > bound {
                    break;
                }
                for y in self.adj[x].iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    } else if dist[y] == dist[x] {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Two-colouring attempt; false for any loop or odd cycle.
    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub(crate) fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for y in self.adj[x].iter() {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Connected components as sorted index lists, in order of smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.adj[x].iter() {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Vertices joined to `v` by a walk of exactly `steps` edges, by index.
    pub(crate) fn walk_set(&self, v: usize, steps: usize) -> BitSet {
        let mut cur = BitSet::from_indices(self.vertex_count(), [v]);
        for _ in 0..steps {
            cur = self.neighborhood_of_set(&cur);
        }
        cur
    }

    /// Union of the neighbourhoods of the members of `set`.
    pub(crate) fn neighborhood_of_set(&self, set: &BitSet) -> BitSet {
        let mut next = BitSet::new(self.vertex_count());
        for u in set.iter() {
            next.union_with(&self.adj[u]);
        }
        next
    }

    /// `N_i(v)`: labels of vertices joined to `v` by a walk of length exactly
    /// `steps`, sorted by rendering.
    pub fn walk_neighborhood(&self, v: &VertexLabel, steps: usize) -> Result<Vec<VertexLabel>> {
        let v = self.require(v)?;
        Ok(self.sorted_labels(self.walk_set(v, steps).iter()))
    }

    pub(crate) fn sorted_labels(&self, it: impl Iterator<Item = usize>) -> Vec<VertexLabel> {
        let mut idx: Vec<usize> = it.collect();
        idx.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        idx.into_iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Induced subgraph on `set`, keeping this graph's vertex order.
    pub fn induced_subgraph(&self, set: &[VertexLabel]) -> Result<Graph> {
        let mut keep = BitSet::new(self.vertex_count());
        for l in set {
            keep.insert(self.require(l)?);
        }
        Ok(self.induced_by_indices(&keep.iter().collect::<Vec<_>>()))
    }

    /// Induced subgraph on the given vertex indices (in the given order).
    pub(crate) fn induced_by_indices(&self, keep: &[usize]) -> Graph {
        let mut b = GraphBuilder::new();
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for &v in keep {
            pos[v] = b.add_vertex(self.labels[v].clone()).expect("labels are unique");
        }
        for &(u, v) in &self.edges {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                b.add_edge(pos[u], pos[v]);
            }
        }
        b.build()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field(
                "edges",
                &self
                    .edges
                    .iter()
                    .map(|&(u, v)| (&self.names[u], &self.names[v]))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, petersen};

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = GraphBuilder::new();
        for i in 0..a + b {
            g.add_vertex(VertexLabel::atom(i.to_string())).unwrap();
        }
        for i in 0..a {
            for j in a..a + b {
                g.add_edge(i, j);
            }
        }
        g.build()
    }

    fn path(n: usize) -> Graph {
        let mut g = GraphBuilder::new();
        for i in 0..n {
            g.add_vertex(VertexLabel::atom(i.to_string())).unwrap();
        }
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g.build()
    }

    fn at(i: usize) -> VertexLabel {
        VertexLabel::atom(i.to_string())
    }

    #[test]
    fn odd_girth_examples() {
        assert_eq!(cycle(5).odd_girth(), OddGirth::Finite(5));
        assert_eq!(cycle(7).odd_girth(), OddGirth::Finite(7));
        assert_eq!(complete_bipartite(3, 3).odd_girth(), OddGirth::Infinite);
        assert_eq!(petersen().odd_girth(), OddGirth::Finite(5));
        let looped = Graph::new(vec![at(0)], &[(at(0), at(0))]).unwrap();
        assert_eq!(looped.odd_girth(), OddGirth::One);
    }

    #[test]
    fn bipartite_examples() {
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(!petersen().is_bipartite());
        assert!(path(5).is_bipartite());
    }

    #[test]
    fn walk_neighborhood_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.walk_neighborhood(&at(0), 0).unwrap(), vec![at(0)]);
        // length-2 walks from 0: 0-1-0, 0-1-2, 0-4-0, 0-4-3
        assert_eq!(c5.walk_neighborhood(&at(0), 2).unwrap(), vec![at(0), at(2), at(3)]);
        let k3 = complete(3);
        assert_eq!(k3.walk_neighborhood(&at(1), 3).unwrap().len(), 3);
        assert!(matches!(
            c5.walk_neighborhood(&at(9), 1),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn walk_sets_grow_by_backtracking() {
        let g = petersen();
        for v in 0..g.vertex_count() {
            for i in 0..6 {
                assert!(g.walk_set(v, i).is_subset(&g.walk_set(v, i + 2)));
            }
        }
    }

    #[test]
    fn induced_subgraph_edge_cases() {
        let g = petersen();
        let empty = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(g.induced_subgraph(g.labels()).unwrap(), g);
        assert!(g.induced_subgraph(&[at(99)]).is_err());
    }

    #[test]
    fn rejects_duplicates() {
        assert!(matches!(
            Graph::new(vec![at(0), at(0)], &[]),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            Graph::new(vec![at(0), at(1)], &[(at(0), at(1)), (at(1), at(0))]),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            Graph::new(vec![at(0)], &[(at(0), at(1))]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn bounded_odd_walk_search() {
        let c7 = crate::constructions::cycle(7);
        assert!(!c7.has_odd_closed_walk_within(5));
        assert!(c7.has_odd_closed_walk_within(7));
        assert!(!path(6).has_odd_closed_walk_within(100));
        for n in 3..12 {
            let c = crate::constructions::cycle(n);
            let og = match c.odd_girth() {
                OddGirth::Finite(g) => g,
                _ => usize::MAX,
            };
            for b in 1..15 {
                assert_eq!(c.has_odd_closed_walk_within(b), og <= b);
            }
        }
    }

    #[test]
    fn odd_girth_matches_bipartiteness_on_paths_and_cycles() {
        for n in 3..12 {
            let c = cycle(n);
            assert_eq!(c.odd_girth() == OddGirth::Infinite, c.is_bipartite());
            let p = path(n);
            assert_eq!(p.odd_girth(), OddGirth::Infinite);
        }
    }

    #[test]
    fn circulant_detection() {
        assert!(cycle(7).is_circulant());
        assert!(complete(4).is_circulant());
        assert!(!path(4).is_circulant());
        assert!(!petersen().is_circulant());
    }
}
