//! Named graph families.
//!
//! Set-valued vertices (Kneser, Schrijver, helical) use the ground set
//! `[m] = {1, ..., m}` in their labels; internally subsets are `u64` masks
//! with bit `i` standing for element `i + 1`.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::label::VertexLabel;
use crate::Limits;

fn atoms(b: &mut GraphBuilder, n: usize) {
    for i in 0..n {
        b.add_vertex(VertexLabel::atom(i.to_string()))
            .expect("fresh labels");
    }
}

/// `K_n` on atoms `"0"..`.
pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new();
    atoms(&mut b, n);
    for i in 0..n {
        for j in i + 1..n {
            b.add_edge(i, j);
        }
    }
    b.build()
}

/// `C_n` on atoms `"0".."n-1"`. Panics for `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices, got {n}");
    let mut b = GraphBuilder::new();
    atoms(&mut b, n);
    for i in 0..n {
        b.add_edge(i, (i + 1) % n);
    }
    b.build()
}

/// Circular complete graph `K_{n/d}`: `v_i ~ v_j` iff `d <= |i - j| <= n - d`.
pub fn circular_complete(n: usize, d: usize) -> Result<Graph> {
    if d < 1 || n < 2 * d {
        return Err(Error::Precondition(format!(
            "circular complete graph needs n >= 2d >= 2, got n={n}, d={d}"
        )));
    }
    let mut b = GraphBuilder::new();
    atoms(&mut b, n);
    for i in 0..n {
        for j in i + 1..n {
            let gap = j - i;
            if d <= gap && gap <= n - d {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

pub(crate) fn mask_elements(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// All `n`-subsets of `[m]` as masks, in lexicographic order of their
/// sorted element lists.
pub(crate) fn subsets_of_size(m: usize, n: usize) -> Vec<u64> {
    fn go(start: usize, m: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=m - left {
            go(i + 1, m, left - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    if n <= m {
        go(0, m, n, 0, &mut out);
    }
    out
}

fn binomial(m: usize, n: usize) -> usize {
    (0..n).fold(1usize, |acc, i| acc.saturating_mul(m - i) / (i + 1))
}

fn check_ground(m: usize, n: usize, what: &str) -> Result<()> {
    if n < 1 || m < 2 * n {
        return Err(Error::Precondition(format!(
            "{what} needs m >= 2n >= 2, got m={m}, n={n}"
        )));
    }
    if m > 63 {
        return Err(Error::Precondition(format!(
            "{what} supports ground sets of at most 63 elements, got m={m}"
        )));
    }
    Ok(())
}

fn disjointness_graph(sets: &[u64]) -> Graph {
    let mut b = GraphBuilder::new();
    for &s in sets {
        b.add_vertex(VertexLabel::SetTuple(vec![mask_elements(s)]))
            .expect("distinct subsets");
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i] & sets[j] == 0 {
                b.add_edge(i, j);
            }
        }
    }
    b.build()
}

/// Kneser graph `KG(m, n)`.
pub fn kneser(m: usize, n: usize) -> Result<Graph> {
    kneser_with(m, n, &Limits::default())
}

pub fn kneser_with(m: usize, n: usize, limits: &Limits) -> Result<Graph> {
    check_ground(m, n, "Kneser graph")?;
    let count = binomial(m, n);
    if count > limits.vertex_cap {
        return Err(Error::SizeCap {
            what: format!("KG({m},{n})"),
            count,
            cap: limits.vertex_cap,
        });
    }
    Ok(disjointness_graph(&subsets_of_size(m, n)))
}

/// True when no two elements of `mask` are cyclically consecutive in `[m]`.
fn is_two_stable(mask: u64, m: usize) -> bool {
    let rotated = (mask >> 1) | ((mask & 1) << (m - 1));
    mask & rotated == 0
}

/// Schrijver graph `SG(m, n)`: `KG(m, n)` restricted to 2-stable subsets.
pub fn schrijver(m: usize, n: usize) -> Result<Graph> {
    check_ground(m, n, "Schrijver graph")?;
    let sets: Vec<u64> = subsets_of_size(m, n)
        .into_iter()
        .filter(|&s| is_two_stable(s, m))
        .collect();
    Ok(disjointness_graph(&sets))
}

/// Helical graph `H(m, n, k)`.
pub fn helical(m: usize, n: usize, k: usize) -> Result<Graph> {
    helical_with(m, n, k, &Limits::default())
}

pub fn helical_with(m: usize, n: usize, k: usize, limits: &Limits) -> Result<Graph> {
    check_ground(m, n, "helical graph")?;
    if k < 1 {
        return Err(Error::Precondition("helical graph needs k >= 1".into()));
    }
    let full: u64 = (1u64 << m) - 1;
    let mut tuples: Vec<Vec<u64>> = Vec::new();
    let mut cur: Vec<u64> = Vec::with_capacity(k);

    // Depth-first over positions; A_t = A_{t-2} ∪ X keeps the nesting rule
    // while generating.
    fn fill(
        cur: &mut Vec<u64>,
        k: usize,
        n: usize,
        full: u64,
        cap: usize,
        out: &mut Vec<Vec<u64>>,
    ) -> bool {
        if cur.len() == k {
            if out.len() == cap {
                return false;
            }
            out.push(cur.clone());
            return true;
        }
        let t = cur.len();
        let prev = cur[t - 1];
        let (base, free) = if t >= 2 {
            let base = cur[t - 2];
            (base, full & !prev & !base)
        } else {
            (0, full & !prev)
        };
        // Enumerate submasks of `free` in increasing order.
        let mut x: u64 = 0;
        loop {
            let a = base | x;
            if a.count_ones() as usize >= n {
                cur.push(a);
                let ok = fill(cur, k, n, full, cap, out);
                cur.pop();
                if !ok {
                    return false;
                }
            }
            if x == free {
                break;
            }
            x = (x.wrapping_sub(free)) & free;
        }
        true
    }

    for first in subsets_of_size(m, n) {
        cur.push(first);
        let ok = fill(&mut cur, k, n, full, limits.vertex_cap, &mut tuples);
        cur.pop();
        if !ok {
            return Err(Error::SizeCap {
                what: format!("H({m},{n},{k})"),
                count: limits.vertex_cap + 1,
                cap: limits.vertex_cap,
            });
        }
    }

    let mut b = GraphBuilder::new();
    for t in &tuples {
        b.add_vertex(VertexLabel::SetTuple(
            t.iter().map(|&s| mask_elements(s)).collect(),
        ))
        .expect("distinct tuples");
    }
    let adjacent = |a: &[u64], c: &[u64]| -> bool {
        (0..k).all(|i| a[i] & c[i] == 0)
            && (0..k - 1).all(|j| a[j] & !c[j + 1] == 0 && c[j] & !a[j + 1] == 0)
    };
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            if adjacent(&tuples[i], &tuples[j]) {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

/// Mycielski graph `M_k` for `k >= 2`: `M_2 = K_2`, and `M_{k+1}` adds a
/// copy `u'` of every vertex `u` (joined to the neighbours of `u`) and an apex
/// joined to all copies. `M_k` is triangle-free with chromatic number `k`.
pub fn mycielski(k: usize) -> Graph {
    assert!(k >= 2, "Mycielski graphs start at k = 2");
    let mut n = 2;
    let mut edges = vec![(0, 1)];
    for _ in 2..k {
        let mut next = edges.clone();
        for &(u, v) in &edges {
            next.push((u, n + v));
            next.push((v, n + u));
        }
        next.extend((0..n).map(|i| (n + i, 2 * n)));
        edges = next;
        n = 2 * n + 1;
    }
    from_table(n, &edges)
}

/// Petersen graph: outer 5-cycle `0..4`, spokes `i -- i+5`, inner pentagram on `5..9`.
pub fn petersen() -> Graph {
    const EDGES: [(usize, usize); 15] = [
        (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
    ];
    from_table(10, &EDGES)
}

/// Coxeter graph. Layout: `0..6` is a 7-cycle with step 1, `7..13` a
/// 7-cycle with step 2, `14..20` a 7-cycle with step 3, and hub `21 + i` is
/// joined to `i`, `7 + i` and `14 + i`.
pub fn coxeter() -> Graph {
    const EDGES: [(usize, usize); 42] = [
        (0, 1), (0, 6), (0, 21), (1, 2), (1, 22), (2, 3), (2, 23),
        (3, 4), (3, 24), (4, 5), (4, 25), (5, 6), (5, 26), (6, 27),
        (7, 9), (7, 12), (7, 21), (8, 10), (8, 13), (8, 22), (9, 11),
        (9, 23), (10, 12), (10, 24), (11, 13), (11, 25), (12, 26), (13, 27),
        (14, 17), (14, 18), (14, 21), (15, 18), (15, 19), (15, 22), (16, 19),
        (16, 20), (16, 23), (17, 20), (17, 24), (18, 25), (19, 26), (20, 27),
    ];
    from_table(28, &EDGES)
}

fn from_table(n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut b = GraphBuilder::new();
    atoms(&mut b, n);
    for &(u, v) in edges {
        b.add_edge(u, v);
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OddGirth;
    use crate::iso::are_isomorphic;

    fn set(v: &[u32]) -> VertexLabel {
        VertexLabel::SetTuple(vec![v.to_vec()])
    }

    #[test]
    fn small_families() {
        let k1 = complete(1);
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert_eq!(complete(3).edge_count(), 3);
        assert!(are_isomorphic(&cycle(3), &complete(3)));
        assert_eq!(cycle(7).odd_girth(), OddGirth::Finite(7));
        assert!(cycle(4).is_bipartite());
    }

    #[test]
    fn circular_complete_edge_rule() {
        assert!(are_isomorphic(&circular_complete(5, 1).unwrap(), &complete(5)));
        assert!(are_isomorphic(&circular_complete(5, 2).unwrap(), &cycle(5)));
        // Brute enumeration of the rule for K_{6/2}: gaps 2, 3, 4.
        let g = circular_complete(6, 2).unwrap();
        for i in 0..6usize {
            for j in 0..6usize {
                let gap = i.abs_diff(j);
                assert_eq!(g.has_edge(i, j), (2..=4).contains(&gap));
            }
        }
        assert_eq!(g.edge_count(), 9);
        assert!(circular_complete(3, 2).is_err());
        assert!(circular_complete(4, 0).is_err());
    }

    #[test]
    fn kneser_examples() {
        let k52 = kneser(5, 2).unwrap();
        assert_eq!(k52.vertex_count(), 10);
        assert!(are_isomorphic(&k52, &petersen()));
        let k42 = kneser(4, 2).unwrap();
        assert_eq!((k42.vertex_count(), k42.edge_count()), (6, 3));
        assert!((0..6).all(|v| k42.degree(v) == 1));
        assert_eq!(kneser(7, 3).unwrap().vertex_count(), 35);
        assert!(kneser(3, 2).is_err());
    }

    #[test]
    fn kneser_is_invariant_under_ground_permutations() {
        let g = kneser(6, 2).unwrap();
        // The 6-cycle (1 2 3 4 5 6) on [6] maps subsets to subsets.
        let rot = |l: &VertexLabel| match l {
            VertexLabel::SetTuple(s) => VertexLabel::set_tuple(vec![s[0]
                .iter()
                .map(|&x| x % 6 + 1)
                .collect()]),
            _ => unreachable!(),
        };
        for &(u, v) in g.edges() {
            let a = g.index_of_label(&rot(g.label(u))).unwrap();
            let b = g.index_of_label(&rot(g.label(v))).unwrap();
            assert!(g.has_edge(a, b));
        }
    }

    #[test]
    fn schrijver_examples() {
        let s52 = schrijver(5, 2).unwrap();
        assert!(are_isomorphic(&s52, &cycle(5)));
        let s42 = schrijver(4, 2).unwrap();
        assert_eq!(s42.labels(), &[set(&[1, 3]), set(&[2, 4])]);
        assert_eq!(s42.edge_count(), 1);
        // Same graph as the induced subgraph of KG(5,2) on 2-stable sets.
        let k = kneser(5, 2).unwrap();
        let stable: Vec<VertexLabel> = s52.labels().to_vec();
        assert_eq!(k.induced_subgraph(&stable).unwrap(), s52);
    }

    #[test]
    fn helical_small_cases() {
        for m in 2..=6 {
            assert!(are_isomorphic(&helical(m, 1, 1).unwrap(), &complete(m)));
        }
        for (m, n) in [(5, 2), (6, 2), (7, 3)] {
            assert!(are_isomorphic(&helical(m, n, 1).unwrap(), &kneser(m, n).unwrap()));
        }
        // 5 choices of A_1, then any nonempty subset of the other 4 elements.
        assert_eq!(helical(5, 1, 2).unwrap().vertex_count(), 75);
        assert_eq!(helical(5, 2, 2).unwrap().vertex_count(), 40);
        // A_3 = A_1 ∪ X with X avoiding A_1 ∪ A_2: 6·(3^5 − 2^5).
        assert_eq!(helical(6, 1, 3).unwrap().vertex_count(), 1266);
    }

    #[test]
    fn helical_tuples_satisfy_definition() {
        let (m, n, k) = (5, 1, 3);
        let g = helical(m, n, k).unwrap();
        for l in g.labels() {
            let VertexLabel::SetTuple(sets) = l else { panic!() };
            assert_eq!(sets.len(), k);
            assert_eq!(sets[0].len(), n);
            for s in 0..k - 1 {
                assert!(sets[s].iter().all(|x| !sets[s + 1].contains(x)));
            }
            for t in 0..k.saturating_sub(2) {
                assert!(sets[t].iter().all(|x| sets[t + 2].contains(x)));
            }
        }
    }

    #[test]
    fn helical_odd_girth_lower_bound() {
        for m in 3..=6 {
            for n in 1..=2 {
                if m <= 2 * n {
                    continue;
                }
                for k in 1..=3 {
                    let g = helical(m, n, k).unwrap();
                    assert!(
                        g.odd_girth().exceeds(2 * k),
                        "H({m},{n},{k}) has odd girth {}",
                        g.odd_girth()
                    );
                }
            }
        }
    }

    #[test]
    fn helical_cap_is_enforced() {
        let limits = Limits {
            vertex_cap: 50,
            ..Limits::default()
        };
        assert!(matches!(
            helical_with(5, 1, 2, &limits),
            Err(Error::SizeCap { cap: 50, .. })
        ));
        assert!(matches!(
            kneser_with(10, 3, &limits),
            Err(Error::SizeCap { count: 120, .. })
        ));
    }

    #[test]
    fn named_graphs() {
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let c = coxeter();
        assert_eq!((c.vertex_count(), c.edge_count()), (28, 42));
        assert!((0..28).all(|v| c.degree(v) == 3));
        assert_eq!(c.odd_girth(), OddGirth::Finite(7));
        assert_eq!(girth(&c), 7);
        assert_eq!(girth(&p), 5);
    }

    #[test]
    fn mycielski_family() {
        assert_eq!(mycielski(2).edge_count(), 1);
        assert!(crate::iso::are_isomorphic(&mycielski(3), &cycle(5)));
        for (k, n, e) in [(4, 11, 20), (5, 23, 71), (6, 47, 236)] {
            let g = mycielski(k);
            assert_eq!((g.vertex_count(), g.edge_count()), (n, e));
            assert_eq!(g.odd_girth(), OddGirth::Finite(5));
        }
    }

    /// Shortest cycle length by BFS from every vertex.
    fn girth(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut best = usize::MAX;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in g.neighbors(x).iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        best
    }
}
