//! Brute-force reference implementations shared by the integration tests
//! and the acceptance runner. Nothing here uses the library's search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gray_unit_distance::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

/// Shortest cycle by depth-limited enumeration of simple paths starting and
/// ending at their smallest vertex.
pub fn girth_by_cycle_enumeration(g: &Graph, max_len: usize) -> Option<usize> {
    let adj = adjacency(g);
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut on_path = vec![false; n];

    fn walk(
        adj: &[Vec<bool>],
        start: usize,
        v: usize,
        len: usize,
        max_len: usize,
        on_path: &mut [bool],
        best: &mut Option<usize>,
    ) {
        let limit = best.map_or(max_len, |b| b.min(max_len));
        for w in 0..adj.len() {
            if !adj[v][w] {
                continue;
            }
            if w == start && len >= 3 {
                if best.is_none_or(|b| len < b) {
                    *best = Some(len);
                }
            } else if w > start && !on_path[w] && len < limit {
                on_path[w] = true;
                walk(adj, start, w, len + 1, max_len, on_path, best);
                on_path[w] = false;
            }
        }
    }

    for s in 0..n {
        on_path[s] = true;
        walk(&adj, s, s, 1, max_len, &mut on_path, &mut best);
        on_path[s] = false;
    }
    best
}

/// Whether any of the `2^n` vertex colorings is proper.
pub fn bipartite_by_colorings(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n).any(|mask| {
        g.edges()
            .iter()
            .all(|&(a, b)| (mask >> a & 1) != (mask >> b & 1))
    })
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn preserves_edges(g: &Graph, p: &[usize]) -> bool {
    let edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    g.edges().iter().all(|&(a, b)| {
        let (x, y) = (p[a], p[b]);
        edges.contains(&(x.min(y), x.max(y)))
    })
}

/// Every automorphism, by testing all `n!` permutations.
pub fn automorphisms_by_enumeration(g: &Graph) -> Vec<Vec<usize>> {
    all_permutations(g.vertex_count())
        .into_iter()
        .filter(|p| preserves_edges(g, p))
        .collect()
}

/// Vertex orbits from an explicit list of all group elements.
pub fn orbits_of(n: usize, group: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if seen[v] {
            continue;
        }
        let orbit: BTreeSet<usize> = group.iter().map(|p| p[v]).collect();
        for &w in &orbit {
            seen[w] = true;
        }
        out.push(orbit.into_iter().collect());
    }
    out
}

pub fn edge_orbits_of(g: &Graph, group: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        if seen.contains(&(a, b)) {
            continue;
        }
        let orbit: BTreeSet<(usize, usize)> = group
            .iter()
            .map(|p| (p[a].min(p[b]), p[a].max(p[b])))
            .collect();
        seen.extend(orbit.iter().copied());
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Counts automorphisms of a connected graph by naive vertex-by-vertex
/// extension in BFS order, checking adjacency against every mapped vertex.
/// No refinement, no pruning beyond consistency.
pub fn automorphism_count_naive(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let order = bfs_order(g);
    assert_eq!(order.len(), n, "graph must be connected");
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        k: usize,
        order: &[usize],
        adj: &[Vec<bool>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> u64 {
        if k == order.len() {
            return 1;
        }
        let v = order[k];
        let mut total = 0;
        for w in 0..adj.len() {
            if used[w]
                || adj[v].iter().filter(|&&b| b).count() != adj[w].iter().filter(|&&b| b).count()
            {
                continue;
            }
            let consistent = order[..k].iter().all(|&u| adj[u][v] == adj[image[u]][w]);
            if consistent {
                image[v] = w;
                used[w] = true;
                total += extend(k + 1, order, adj, image, used);
                used[w] = false;
                image[v] = usize::MAX;
            }
        }
        total
    }

    extend(0, &order, &adj, &mut image, &mut used)
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    if n == 0 {
        return order;
    }
    seen[0] = true;
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

/// Erdős–Rényi graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).expect("simple graph")
}

/// Sorts every inner list and then the outer list.
pub fn normalize<T: Ord + Clone>(parts: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = parts
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.sort();
            q
        })
        .collect();
    out.sort();
    out
}

/// Coordinates of `assemble(0.6, 0.3)` for selected vertices, computed with
/// an independent complex-arithmetic implementation of the construction.
pub const REFERENCE_COORDS: [(usize, f64, f64); 10] = [
    (0, 1.1724984686987472, -0.08061537543157588),
    (4, 1.1724984686987474, 0.6716557887542549),
    (8, 0.5210125299793236, 0.2955202066613397),
    (9, 0.955336489125606, 0.8955202066613395),
    (12, 0.43572124685494273, 0.5955202066613394),
    (14, 1.4749517313962692, 0.5955202066613391),
    (20, -1.1335962508631496, 1.3724058884418926),
    (44, 0.2978750040082071, -0.675105772075681),
    (45, 0.2171619795731412, -0.3761355820929154),
    (53, -0.4343239591462824, 1.687201497496381e-16),
];

/// A parameter point where vertices land exactly on top of each other: at
/// `h = 1/2`, `theta = π/6` the copies of the first column vertex meet the
/// connectors, one pair per rotation.
pub const COINCIDENT_PARAMS: (f64, f64) = (0.5, std::f64::consts::FRAC_PI_6);
pub const COINCIDENT_PAIRS: [(usize, usize); 3] = [(13, 46), (29, 50), (42, 51)];
