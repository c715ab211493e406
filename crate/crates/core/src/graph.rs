//! Labeled undirected simple graphs with an optional solid/hollow role
//! assignment, plus the basic invariants used throughout the crate.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which side of a point-line incidence a vertex represents.
///
/// Solid vertices stand for points, hollow vertices for lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Solid,
    Hollow,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Solid => "solid",
            Role::Hollow => "hollow",
        }
    }

    pub fn opposite(self) -> Role {
        match self {
            Role::Solid => Role::Hollow,
            Role::Hollow => Role::Solid,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{a}, {b}}} references a vertex outside 0..{n}")]
    VertexOutOfRange { a: usize, b: usize, n: usize },
    #[error("role table has {got} entries for {n} vertices")]
    RoleCount { got: usize, n: usize },
    #[error("edge {{{0}, {1}}} joins two vertices of the same role")]
    MonochromaticEdge(usize, usize),
}

/// Undirected simple graph on the dense vertex ids `0..n`.
///
/// Edges are stored normalized (smaller id first) in lexicographic order;
/// adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    roles: Option<Vec<Role>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and dangling endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { a, b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    /// Builds a graph from an edge list where repeats are merged.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { a, b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &set {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
            roles: None,
        }
    }

    pub fn empty() -> Self {
        Self::from_edge_set(0, BTreeSet::new())
    }

    /// Attaches a role table. Every edge must join a solid and a hollow vertex.
    pub fn with_roles(mut self, roles: Vec<Role>) -> Result<Self, GraphError> {
        if roles.len() != self.n {
            return Err(GraphError::RoleCount {
                got: roles.len(),
                n: self.n,
            });
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| roles[a] == roles[b]) {
            return Err(GraphError::MonochromaticEdge(a, b));
        }
        self.roles = Some(roles);
        Ok(self)
    }

    pub fn without_roles(mut self) -> Self {
        self.roles = None;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn roles(&self) -> Option<&[Role]> {
        self.roles.as_deref()
    }

    pub fn role(&self, v: usize) -> Option<Role> {
        self.roles.as_ref().map(|r| r[v])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Vertices carrying `role`, ascending.
    pub fn vertices_with_role(&self, role: Role) -> Vec<usize> {
        match &self.roles {
            Some(r) => (0..self.n).filter(|&v| r[v] == role).collect(),
            None => Vec::new(),
        }
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Length of a shortest cycle, or `None` when the graph is a forest.
///
/// Runs a breadth-first search from every vertex. Every non-tree edge closes
/// a walk containing a cycle, and a root on a shortest cycle closes it
/// exactly, so the minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            // a non-tree edge at u closes a walk of length >= 2 * dist[u]
            if let Some(b) = best {
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Proper 2-coloring, or `None` if some component has an odd cycle.
///
/// In every component the lowest vertex id goes to the first class.
pub fn bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let su = side[u]?;
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == Some(false)).collect();
    let b = (0..n).filter(|&v| side[v] == Some(true)).collect();
    Some((a, b))
}

/// Checks that `cycle` is a Hamilton cycle of `g`. A verifier only.
pub fn verify_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn roles_must_be_bipartite() {
        let g = path3();
        assert!(g
            .clone()
            .with_roles(vec![Role::Solid, Role::Hollow, Role::Solid])
            .is_ok());
        assert_eq!(
            g.clone()
                .with_roles(vec![Role::Solid, Role::Solid, Role::Hollow]),
            Err(GraphError::MonochromaticEdge(0, 1))
        );
        assert!(matches!(
            g.with_roles(vec![Role::Solid]),
            Err(GraphError::RoleCount { got: 1, n: 3 })
        ));
    }

    #[test]
    fn edges_are_normalized_and_sorted() {
        let g = Graph::new(4, [(3, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn girth_small_cases() {
        assert_eq!(girth(&k4()), Some(3));
        assert_eq!(girth(&path3()), None);
        assert_eq!(girth(&Graph::empty()), None);
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(girth(&c5), Some(5));
    }

    #[test]
    fn bipartition_small_cases() {
        assert_eq!(bipartition(&k4()), None);
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(bipartition(&edge), Some((vec![0], vec![1])));
        // two components; the lowest id of each goes first
        let g = Graph::new(5, [(0, 3), (1, 2), (2, 4)]).unwrap();
        assert_eq!(bipartition(&g), Some((vec![0, 1, 4], vec![2, 3])));
        assert_eq!(bipartition(&Graph::empty()), Some((vec![], vec![])));
    }

    #[test]
    fn hamiltonian_verifier() {
        assert!(verify_hamiltonian_cycle(&k4(), &[0, 1, 2, 3]));
        assert!(!verify_hamiltonian_cycle(&k4(), &[0, 1, 2]));
        assert!(!verify_hamiltonian_cycle(&k4(), &[0, 1, 1, 3]));
        assert!(!verify_hamiltonian_cycle(&path3(), &[0, 1, 2]));
    }

    #[test]
    fn distances() {
        let d = path3().distances_from(0);
        assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.distances_from(2), vec![None, None, Some(0)]);
    }
}
