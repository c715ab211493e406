//! Permutations, automorphism checks, isomorphism search and orbit
//! computation.
//!
//! Both the isomorphism search and the automorphism enumeration run the same
//! individualization-refinement backtracking: vertex colors start from
//! (degree, optional role, distance profile), are refined to an equitable
//! partition, and the search branches on the smallest non-singleton cell
//! (lowest vertex id first). Colors are renumbered from sorted signatures
//! only, so refinement commutes with relabeling and the search is exact.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Role};

/// Largest vertex count accepted by the exhaustive automorphism routines.
pub const MAX_AUTOMORPHISM_VERTICES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("image sequence is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("graph has {n} vertices; exhaustive enumeration is limited to {max}")]
    TooLarge { n: usize, max: usize },
    #[error("automorphism group order exceeds 128 bits")]
    OrderOverflow,
}

/// A bijection on `0..n`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self, SymmetryError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(SymmetryError::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Transposition of `a` and `b` on `0..n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation {
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Self::identity(self.len()), |acc, _| acc.then(self))
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = SymmetryError;

    fn try_from(image: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// The rotation of the Gray graph's LCF labeling, `i ↦ i + 18 (mod 54)`.
pub fn rho() -> Permutation {
    Permutation {
        image: (0..54).map(|i| (i + 18) % 54).collect(),
    }
}

/// True iff `p` maps the edge set of `g` onto itself.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    p.len() == g.vertex_count()
        && g.edges()
            .iter()
            .all(|&(a, b)| g.has_edge(p.apply(a), p.apply(b)))
}

/// True iff every cycle of `p` has length exactly `m`.
pub fn is_semiregular(p: &Permutation, m: usize) -> bool {
    m > 0 && p.cycles().iter().all(|c| c.len() == m)
}

/// A vertex bijection `G → H` and whether it was checked edge by edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismCertificate {
    pub mapping: Permutation,
    pub verified: bool,
}

impl IsomorphismCertificate {
    /// Re-checks the mapping against the two graphs.
    pub fn recheck(&self, g: &Graph, h: &Graph) -> bool {
        verify_isomorphism(g, h, &self.mapping)
    }
}

/// True iff `mapping` is an isomorphism from `g` onto `h`.
pub fn verify_isomorphism(g: &Graph, h: &Graph, mapping: &Permutation) -> bool {
    g.vertex_count() == h.vertex_count()
        && mapping.len() == g.vertex_count()
        && g.edge_count() == h.edge_count()
        && g.edges()
            .iter()
            .all(|&(a, b)| h.has_edge(mapping.apply(a), mapping.apply(b)))
}

/// Searches for an isomorphism `g → h`, ignoring vertex roles.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<IsomorphismCertificate> {
    isomorphism_search(g, h, false)
}

/// Searches for an isomorphism that maps solid to solid and hollow to
/// hollow. Graphs without roles are treated as all-solid.
pub fn find_role_preserving_isomorphism(g: &Graph, h: &Graph) -> Option<IsomorphismCertificate> {
    isomorphism_search(g, h, true)
}

fn isomorphism_search(g: &Graph, h: &Graph, use_roles: bool) -> Option<IsomorphismCertificate> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = initial_colors(g, h, use_roles)?;
    let mapping = first_leaf(g, h, cg, ch)?;
    let verified = verify_isomorphism(g, h, &mapping);
    debug_assert!(verified);
    Some(IsomorphismCertificate { mapping, verified })
}

/// Full automorphism group described by a base and strong generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    /// Group order.
    pub order: u128,
    /// Base points individualized along the first path of the search.
    pub base: Vec<usize>,
    /// Orbit length of each base point in the pointwise stabilizer of the
    /// preceding base points; the product is `order`.
    pub basic_orbit_lengths: Vec<usize>,
    /// Generators harvested during the search. They generate the group.
    pub generators: Vec<Permutation>,
}

/// Computes `Aut(g)` (roles ignored) by exhaustive refined backtracking
/// along a stabilizer chain.
pub fn automorphism_group(g: &Graph) -> Result<AutomorphismGroup, SymmetryError> {
    let n = g.vertex_count();
    if n > MAX_AUTOMORPHISM_VERTICES {
        return Err(SymmetryError::TooLarge {
            n,
            max: MAX_AUTOMORPHISM_VERTICES,
        });
    }
    let (mut c0, mut c0h) = initial_colors(g, g, false).expect("a graph matches itself");
    refine_pair(g, &mut c0, g, &mut c0h);

    // first path: states[k] is the partition before individualizing base[k]
    let mut states = vec![c0.clone()];
    let mut base = Vec::new();
    let mut cur = c0;
    while let Some(v) = target_vertex(&cur) {
        base.push(v);
        let mut next = individualize(&cur, v);
        let mut twin = next.clone();
        refine_pair(g, &mut next, g, &mut twin);
        states.push(next.clone());
        cur = next;
    }

    let mut generators: Vec<Permutation> = Vec::new();
    let mut uf = UnionFind::new(n);
    let mut basic_orbit_lengths = vec![0; base.len()];
    let mut order: u128 = 1;
    for k in (0..base.len()).rev() {
        let v = base[k];
        let state = &states[k];
        let mut count = 0usize;
        for w in (0..n).filter(|&w| state[w] == state[v]) {
            if uf.same(v, w) {
                count += 1;
                continue;
            }
            let left = individualize(state, v);
            let right = individualize(state, w);
            if let Some(p) = first_leaf(g, g, left, right) {
                for i in 0..n {
                    uf.union(i, p.apply(i));
                }
                generators.push(p);
                count += 1;
            }
        }
        basic_orbit_lengths[k] = count;
        order = order
            .checked_mul(count as u128)
            .ok_or(SymmetryError::OrderOverflow)?;
    }
    Ok(AutomorphismGroup {
        order,
        base,
        basic_orbit_lengths,
        generators,
    })
}

pub fn automorphism_count(g: &Graph) -> Result<u128, SymmetryError> {
    automorphism_group(g).map(|grp| grp.order)
}

/// Vertex orbits under `Aut(g)`, each sorted, ordered by smallest member.
pub fn vertex_orbits(g: &Graph) -> Result<Vec<Vec<usize>>, SymmetryError> {
    let grp = automorphism_group(g)?;
    Ok(orbits_from_generators(g.vertex_count(), &grp.generators))
}

/// Edge orbits under `Aut(g)`, each sorted, ordered by smallest member.
pub fn edge_orbits(g: &Graph) -> Result<Vec<Vec<(usize, usize)>>, SymmetryError> {
    let grp = automorphism_group(g)?;
    Ok(edge_orbits_from_generators(g, &grp.generators))
}

/// Orbits of the group generated by `generators` on `0..n`.
pub fn orbits_from_generators(n: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for p in generators {
        for i in 0..n {
            uf.union(i, p.apply(i));
        }
    }
    uf.classes()
}

/// Orbits on the edges of `g` of the group generated by `generators`, which
/// must be automorphisms of `g`.
pub fn edge_orbits_from_generators(
    g: &Graph,
    generators: &[Permutation],
) -> Vec<Vec<(usize, usize)>> {
    let edges = g.edges();
    let index = |a: usize, b: usize| {
        edges
            .binary_search(&(a.min(b), a.max(b)))
            .expect("generator maps edges to edges")
    };
    let mut uf = UnionFind::new(edges.len());
    for p in generators {
        for (i, &(a, b)) in edges.iter().enumerate() {
            uf.union(i, index(p.apply(a), p.apply(b)));
        }
    }
    uf.classes()
        .into_iter()
        .map(|c| c.into_iter().map(|i| edges[i]).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// refinement engine

type Coloring = Vec<u32>;

/// Initial colors for both graphs from a shared signature table, or `None`
/// if the color histograms already differ.
fn initial_colors(g: &Graph, h: &Graph, use_roles: bool) -> Option<(Coloring, Coloring)> {
    let signature = |graph: &Graph, v: usize| -> (usize, u8, Vec<usize>) {
        let role = match (use_roles, graph.role(v)) {
            (true, Some(Role::Hollow)) => 1,
            _ => 0,
        };
        // distance profile: vertex counts per distance, unreachable last
        let n = graph.vertex_count();
        let mut profile = vec![0usize; n + 1];
        for d in graph.distances_from(v) {
            profile[d.unwrap_or(n)] += 1;
        }
        while profile.last() == Some(&0) {
            profile.pop();
        }
        (graph.degree(v), role, profile)
    };
    let sg: Vec<_> = (0..g.vertex_count()).map(|v| signature(g, v)).collect();
    let sh: Vec<_> = (0..h.vertex_count()).map(|v| signature(h, v)).collect();
    let (cg, ch, _) = renumber(&sg, &sh);
    histograms_match(&cg, &ch).then_some((cg, ch))
}

/// Maps signatures to dense color ids in sorted signature order.
fn renumber<S: Ord>(sg: &[S], sh: &[S]) -> (Coloring, Coloring, usize) {
    let mut table: BTreeMap<&S, u32> = BTreeMap::new();
    for s in sg.iter().chain(sh) {
        table.insert(s, 0);
    }
    for (id, slot) in table.values_mut().enumerate() {
        *slot = id as u32;
    }
    let cg = sg.iter().map(|s| table[s]).collect();
    let ch = sh.iter().map(|s| table[s]).collect();
    (cg, ch, table.len())
}

fn histograms_match(cg: &[u32], ch: &[u32]) -> bool {
    if cg.len() != ch.len() {
        return false;
    }
    let mut a = cg.to_vec();
    let mut b = ch.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn class_count(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Refines both colorings jointly to their coarsest equitable refinement.
/// Returns false once the two sides diverge.
fn refine_pair(g: &Graph, cg: &mut Coloring, h: &Graph, ch: &mut Coloring) -> bool {
    if !histograms_match(cg, ch) {
        return false;
    }
    let mut classes = class_count(cg);
    loop {
        let signature = |graph: &Graph, colors: &[u32], v: usize| -> (u32, Vec<u32>) {
            let mut nb: Vec<u32> = graph.neighbors(v).iter().map(|&w| colors[w]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let sg: Vec<_> = (0..g.vertex_count()).map(|v| signature(g, cg, v)).collect();
        let sh: Vec<_> = (0..h.vertex_count()).map(|v| signature(h, ch, v)).collect();
        let (ng, nh, _) = renumber(&sg, &sh);
        if !histograms_match(&ng, &nh) {
            return false;
        }
        *cg = ng;
        *ch = nh;
        let now = class_count(cg);
        if now == classes {
            return true;
        }
        classes = now;
    }
}

/// Vertex of the smallest non-singleton cell, lowest id first; `None` once
/// the coloring is discrete.
fn target_vertex(c: &[u32]) -> Option<usize> {
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in c {
        *sizes.entry(x).or_default() += 1;
    }
    (0..c.len())
        .filter(|&v| sizes[&c[v]] > 1)
        .min_by_key(|&v| (sizes[&c[v]], v))
}

/// Gives `v` a fresh color above every existing one.
fn individualize(c: &[u32], v: usize) -> Coloring {
    let fresh = c.iter().copied().max().unwrap_or(0) + 1;
    let mut out = c.to_vec();
    out[v] = fresh;
    out
}

/// Depth-first search for the first discrete leaf that is an isomorphism.
fn first_leaf(g: &Graph, h: &Graph, mut cg: Coloring, mut ch: Coloring) -> Option<Permutation> {
    if !refine_pair(g, &mut cg, h, &mut ch) {
        return None;
    }
    match target_vertex(&cg) {
        None => {
            let mut by_color = vec![usize::MAX; ch.len()];
            for (w, &c) in ch.iter().enumerate() {
                by_color[c as usize] = w;
            }
            let image: Vec<usize> = cg.iter().map(|&c| by_color[c as usize]).collect();
            let p = Permutation::new(image).ok()?;
            verify_isomorphism(g, h, &p).then_some(p)
        }
        Some(v) => {
            let left = individualize(&cg, v);
            (0..ch.len())
                .filter(|&w| ch[w] == cg[v])
                .find_map(|w| first_leaf(g, h, left.clone(), individualize(&ch, w)))
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so class representatives are class minima
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = self.find(i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().collect()
    }
}
