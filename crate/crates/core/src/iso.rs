//! Exact isomorphism for small graphs.
//!
//! Colour refinement runs on both graphs with a shared palette, then a
//! backtracking search maps vertices class by class. Highly symmetric graphs
//! with large refinement classes (beyond a dozen or so vertices per class)
//! can make the search slow.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::graph::Graph;

/// Stable colour refinement over both graphs at once.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g, h];
    let mut colors: [Vec<usize>; 2] = [
        (0..g.vertex_count()).map(|v| g.degree(v) * 2 + g.has_loop(v) as usize).collect(),
        (0..h.vertex_count()).map(|v| h.degree(v) * 2 + h.has_loop(v) as usize).collect(),
    ];
    let mut classes = usize::MAX;
    loop {
        let mut palette: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        // Signatures are collected in a fixed order so ids agree across graphs.
        let mut sigs: Vec<(usize, usize, (usize, Vec<usize>))> = Vec::new();
        for (k, gr) in graphs.iter().enumerate() {
            for v in 0..gr.vertex_count() {
                let mut nb: Vec<usize> = gr.neighbors(v).iter().map(|u| colors[k][u]).collect();
                nb.sort_unstable();
                sigs.push((k, v, (colors[k][v], nb)));
            }
        }
        let mut keys: Vec<&(usize, Vec<usize>)> = sigs.iter().map(|s| &s.2).collect();
        keys.sort();
        keys.dedup();
        for (i, key) in keys.into_iter().enumerate() {
            palette.insert(key.clone(), i);
        }
        next[0] = vec![0; g.vertex_count()];
        next[1] = vec![0; h.vertex_count()];
        for (k, v, sig) in &sigs {
            next[*k][*v] = palette[sig];
        }
        let count = palette.len();
        colors = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let [cg, ch] = colors;
    (cg, ch)
}

fn histogram(colors: &[usize]) -> Vec<(usize, usize)> {
    let mut m: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *m.entry(c).or_default() += 1;
    }
    let mut v: Vec<_> = m.into_iter().collect();
    v.sort_unstable();
    v
}

/// True iff an adjacency- and loop-preserving bijection exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An isomorphism as `map[v_g] = v_h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh || g.loop_vertices().count() != h.loop_vertices().count() {
        return None;
    }
    let (cg, ch) = refine(g, h);
    if histogram(&cg) != histogram(&ch) {
        return None;
    }
    let class_size = {
        let mut m: HashMap<usize, usize> = HashMap::new();
        for &c in &cg {
            *m.entry(c).or_default() += 1;
        }
        m
    };
    let mut class_mask: HashMap<usize, BitSet> = HashMap::new();
    for (v, &c) in ch.iter().enumerate() {
        class_mask.entry(c).or_insert_with(|| BitSet::new(n)).insert(v);
    }

    // Connectivity-first order: next vertex has the most already-placed
    // neighbours, then the smallest colour class.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&cg[v]], v))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            links[u] += 1;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = BitSet::new(n);
    let mut budget = u64::MAX;
    match extend(g, h, &order, 0, &cg, &class_mask, &mut map, &mut used, &mut budget) {
        Some(true) => Some(map),
        _ => None,
    }
}

/// Orbit id per vertex, merging two vertices only when an automorphism
/// joining them has been found within `budget` nodes. Vertices whose search
/// ran out of budget stay in their own orbit, so the partition may be finer
/// than the true orbit partition but never coarser.
pub(crate) fn automorphism_orbits(g: &Graph, budget: u64) -> Vec<usize> {
    automorphisms(g, budget).0
}

/// Orbits as in [`automorphism_orbits`] plus the automorphisms found on the
/// way. The automorphisms generate a subgroup of `Aut(g)` whose vertex orbits
/// are the returned ones.
pub(crate) fn automorphisms(g: &Graph, budget: u64) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let (colors, _) = refine(g, g);
    let mut found = Vec::new();
    let mut class_mask: HashMap<usize, BitSet> = HashMap::new();
    for (v, &c) in colors.iter().enumerate() {
        class_mask.entry(c).or_insert_with(|| BitSet::new(n)).insert(v);
    }
    // Try each vertex against one representative per known orbit of its class.
    for b in 1..n {
        let mut reps: Vec<usize> = (0..b)
            .filter(|&a| colors[a] == colors[b])
            .map(|a| find(&mut parent, a))
            .collect();
        reps.sort_unstable();
        reps.dedup();
        for a in reps {
            if find(&mut parent, b) == find(&mut parent, a) {
                break;
            }
            if let Some(sigma) = automorphism_sending(g, a, b, &colors, &class_mask, budget) {
                for (x, &y) in sigma.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    parent[rx.max(ry)] = rx.min(ry);
                }
                found.push(sigma);
                break;
            }
        }
    }
    ((0..n).map(|v| find(&mut parent, v)).collect(), found)
}

fn automorphism_sending(
    g: &Graph,
    a: usize,
    b: usize,
    colors: &[usize],
    class_mask: &HashMap<usize, BitSet>,
    budget: u64,
) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    // Breadth-first from `a` so every later vertex has a placed neighbour.
    let mut order = vec![a];
    let mut placed = BitSet::from_indices(n, [a]);
    let mut i = 0;
    while order.len() < n {
        if i == order.len() {
            let next = (0..n).find(|&v| !placed.contains(v)).expect("unplaced");
            placed.insert(next);
            order.push(next);
        }
        let x = order[i];
        i += 1;
        for y in g.neighbors(x).iter() {
            if !placed.contains(y) {
                placed.insert(y);
                order.push(y);
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    map[a] = b;
    let mut used = BitSet::from_indices(n, [b]);
    let mut left = budget;
    match extend(g, g, &order, 1, colors, class_mask, &mut map, &mut used, &mut left) {
        Some(true) => Some(map),
        _ => None,
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    cg: &[usize],
    class_mask: &HashMap<usize, BitSet>,
    map: &mut [usize],
    used: &mut BitSet,
    budget: &mut u64,
) -> Option<bool> {
    if depth == order.len() {
        return Some(true);
    }
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let v = order[depth];
    let mut cand = class_mask[&cg[v]].clone();
    cand.difference_with(used);
    for &u in &order[..depth] {
        if g.has_edge(v, u) {
            cand.intersect_with(h.neighbors(map[u]));
        } else {
            cand.difference_with(h.neighbors(map[u]));
        }
        if cand.is_empty() {
            return Some(false);
        }
    }
    for w in cand.iter() {
        if g.has_loop(v) != h.has_loop(w) {
            continue;
        }
        map[v] = w;
        used.insert(w);
        match extend(g, h, order, depth + 1, cg, class_mask, map, used, budget) {
            Some(false) => {}
            found_or_unknown => return found_or_unknown,
        }
        used.remove(w);
    }
    map[v] = usize::MAX;
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{circular_complete, complete, cycle, kneser, petersen};
    use crate::graph::GraphBuilder;
    use crate::label::VertexLabel;

    fn relabeled_cycle(n: usize, perm: &[usize]) -> Graph {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(VertexLabel::atom(format!("x{i}"))).unwrap();
        }
        for i in 0..n {
            b.add_edge(perm[i], perm[(i + 1) % n]);
        }
        b.build()
    }

    fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(VertexLabel::atom(i.to_string())).unwrap();
        }
        for i in 1..n {
            b.add_edge(i - 1, i);
        }
        b.build()
    }

    fn check_map(g: &Graph, h: &Graph, map: &[usize]) {
        for a in 0..g.vertex_count() {
            for b in 0..g.vertex_count() {
                assert_eq!(g.has_edge(a, b), h.has_edge(map[a], map[b]));
            }
        }
    }

    #[test]
    fn examples() {
        let c5 = cycle(5);
        assert!(are_isomorphic(&c5, &relabeled_cycle(5, &[3, 0, 4, 1, 2])));
        assert!(!are_isomorphic(&c5, &path(5)));
        assert!(are_isomorphic(&circular_complete(5, 2).unwrap(), &c5));
        assert!(are_isomorphic(&circular_complete(5, 1).unwrap(), &complete(5)));
        let k52 = kneser(5, 2).unwrap();
        let map = find_isomorphism(&k52, &petersen()).unwrap();
        check_map(&k52, &petersen(), &map);
    }

    #[test]
    fn orbits() {
        let o = automorphism_orbits(&petersen(), 10_000);
        assert!(o.iter().all(|&x| x == 0));
        let p = path(5);
        let o = automorphism_orbits(&p, 10_000);
        assert_eq!(o, vec![0, 1, 2, 1, 0]);
        let sub = crate::powers::subdivide(&cycle(5), 3).unwrap();
        assert!(automorphism_orbits(&sub, 10_000).iter().all(|&x| x == 0));
    }

    #[test]
    fn distinguishes_regular_graphs_refinement_cannot() {
        // C6 and two triangles are both 2-regular on 6 vertices.
        let mut b = GraphBuilder::new();
        for i in 0..6 {
            b.add_vertex(VertexLabel::atom(i.to_string())).unwrap();
        }
        for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            b.add_edge(u, v);
        }
        assert!(!are_isomorphic(&cycle(6), &b.build()));
        // C_8 vs C_8 with chords making it 3-regular differ in edges anyway.
        assert!(!are_isomorphic(&cycle(8), &circular_complete(8, 3).unwrap()));
    }

    #[test]
    fn equivalence_relation_spot_checks() {
        let pool = vec![
            cycle(5),
            relabeled_cycle(5, &[2, 4, 1, 3, 0]),
            circular_complete(5, 2).unwrap(),
            path(5),
            complete(5),
        ];
        for a in &pool {
            assert!(are_isomorphic(a, a));
            for b in &pool {
                assert_eq!(are_isomorphic(a, b), are_isomorphic(b, a));
                for c in &pool {
                    if are_isomorphic(a, b) && are_isomorphic(b, c) {
                        assert!(are_isomorphic(a, c));
                    }
                }
            }
        }
    }
}
