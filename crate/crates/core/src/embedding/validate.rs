use std::f64::consts::PI;
use std::sync::OnceLock;

use super::Embedding;
use crate::graph::Graph;
use crate::lcf::gray_graph;
use crate::symmetry::{find_isomorphism, is_automorphism, Permutation};

/// Results of every metric and combinatorial check on an embedding.
/// Failures are recorded here, never raised.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// Largest `|length − 1|` over all edges (0 for edgeless drawings).
    pub max_edge_length_error: f64,
    /// Smallest pairwise vertex distance (infinite below two vertices).
    pub min_vertex_separation: f64,
    /// Pairs closer than the separation threshold.
    pub coincident_pairs: Vec<(usize, usize)>,
    /// Non-adjacent pairs at distance `1 ± tol`.
    pub accidental_unit_pairs: Vec<(usize, usize)>,
    pub symmetry_order: usize,
    pub induced_symmetry_permutation: Option<Permutation>,
    pub isomorphic_to_gray: bool,
}

impl ValidationReport {
    pub fn is_unit_distance(&self, tol: f64) -> bool {
        self.max_edge_length_error <= tol
    }
}

fn gray() -> &'static Graph {
    static GRAY: OnceLock<Graph> = OnceLock::new();
    GRAY.get_or_init(gray_graph)
}

/// Checks edge lengths, separations, accidental unit distances, rotational
/// symmetry about the centroid and isomorphism with the Gray graph.
pub fn validate(e: &Embedding, tol: f64, sep_threshold: f64) -> ValidationReport {
    let g = e.graph();
    let max_edge_length_error = g
        .edges()
        .iter()
        .map(|&(a, b)| (e.edge_length(a, b) - 1.0).abs())
        .fold(0.0, f64::max);

    let n = e.vertex_count();
    let mut min_vertex_separation = f64::INFINITY;
    let mut coincident_pairs = Vec::new();
    let mut accidental_unit_pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let d = e.coord(a).dist(e.coord(b));
            min_vertex_separation = min_vertex_separation.min(d);
            if d < sep_threshold {
                coincident_pairs.push((a, b));
            }
            if (d - 1.0).abs() <= tol && !g.has_edge(a, b) {
                accidental_unit_pairs.push((a, b));
            }
        }
    }

    let (symmetry_order, induced_symmetry_permutation) = detect_symmetry(e, tol);
    let isomorphic_to_gray = g.vertex_count() == gray().vertex_count()
        && g.edge_count() == gray().edge_count()
        && find_isomorphism(g, gray()).is_some_and(|c| c.verified);

    ValidationReport {
        max_edge_length_error,
        min_vertex_separation,
        coincident_pairs,
        accidental_unit_pairs,
        symmetry_order,
        induced_symmetry_permutation,
        isomorphic_to_gray,
    }
}

/// Vertex permutation induced by rotating `e` by `angle` about `center`, if
/// every rotated vertex lands within `tol` of a distinct vertex of the same
/// role.
fn induced_rotation(
    e: &Embedding,
    center: super::Point,
    angle: f64,
    tol: f64,
) -> Option<Permutation> {
    let n = e.vertex_count();
    let mut image = Vec::with_capacity(n);
    let mut taken = vec![false; n];
    for v in 0..n {
        let r = e.coord(v).rotate_about(center, angle);
        let (w, d) = (0..n)
            .map(|w| (w, r.dist(e.coord(w))))
            .min_by(|x, y| x.1.total_cmp(&y.1))?;
        if d > tol || d.is_nan() || taken[w] || e.graph().role(v) != e.graph().role(w) {
            return None;
        }
        taken[w] = true;
        image.push(w);
    }
    Permutation::new(image).ok()
}

/// Largest `m` such that rotating by `2π/m` about the centroid maps the
/// vertex set onto itself within `tol` and induces a graph automorphism.
/// Returns the witnessing permutation, or `(1, None)` when there is no
/// nontrivial rotational symmetry.
pub fn detect_symmetry(e: &Embedding, tol: f64) -> (usize, Option<Permutation>) {
    let n = e.vertex_count();
    let center = e.centroid();
    for m in (2..=n).rev() {
        let angle = 2.0 * PI / m as f64;
        if let Some(p) = induced_rotation(e, center, angle, tol) {
            if is_automorphism(e.graph(), &p) {
                return (m, Some(p));
            }
        }
    }
    (1, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{assemble, build_g0, Color, ConstructionParams, Point};
    use crate::symmetry::is_semiregular;

    fn square() -> Embedding {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let coords = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        Embedding::new(g, coords, vec![Color::None; 4], None).unwrap()
    }

    #[test]
    fn reference_report() {
        let e = assemble(ConstructionParams::reference()).unwrap();
        let r = validate(&e, 1e-9, 1e-6);
        assert!(r.max_edge_length_error <= 1e-12);
        assert!(r.min_vertex_separation > 1e-6);
        assert!(r.coincident_pairs.is_empty());
        assert_eq!(r.symmetry_order, 3);
        let p = r.induced_symmetry_permutation.unwrap();
        assert!(is_semiregular(&p, 3));
        assert!(is_automorphism(e.graph(), &p));
        assert!(r.isomorphic_to_gray);
    }

    #[test]
    fn perturbation_shows_up() {
        let e = assemble(ConstructionParams::reference()).unwrap();
        let p = e.coord(0);
        let bent = e.with_coord(0, Point::new(p.x + 1e-3, p.y));
        let r = validate(&bent, 1e-9, 1e-6);
        assert!(
            r.max_edge_length_error >= 5e-4,
            "{}",
            r.max_edge_length_error
        );
        assert!(!r.is_unit_distance(1e-9));
    }

    #[test]
    fn unit_square() {
        let r = validate(&square(), 1e-9, 1e-6);
        assert!(r.max_edge_length_error < 1e-15);
        assert!(r.accidental_unit_pairs.is_empty());
        assert_eq!(r.symmetry_order, 4);
        assert!(!r.isomorphic_to_gray);
    }

    #[test]
    fn g0_symmetry() {
        let (m, p) = detect_symmetry(&build_g0(0.6).unwrap(), 1e-9);
        assert!(m >= 3 && m % 3 == 0);
        assert!(p.is_some());
    }

    #[test]
    fn asymmetric_points() {
        let coords = vec![
            Point::new(0.0, 0.0),
            Point::new(1.3, 0.1),
            Point::new(0.2, 2.1),
            Point::new(-0.7, 0.9),
            Point::new(0.4, -1.6),
        ];
        let e = Embedding::new(
            Graph::new(5, []).unwrap(),
            coords,
            vec![Color::None; 5],
            None,
        )
        .unwrap();
        assert_eq!(detect_symmetry(&e, 1e-9), (1, None));
    }

    #[test]
    fn accidental_pairs_are_reported_not_fatal() {
        // path 0-1-2 bent at a right angle, plus a far vertex at unit
        // distance from 0 but not adjacent
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let coords = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        let e = Embedding::new(g, coords, vec![Color::None; 4], None).unwrap();
        let r = validate(&e, 1e-9, 1e-6);
        assert_eq!(r.accidental_unit_pairs, vec![(0, 3), (2, 3)]);
        assert!(r.is_unit_distance(1e-9));
    }
}
