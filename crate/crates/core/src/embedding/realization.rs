use thiserror::Error;

use super::{Embedding, Point};
use crate::config::{grid3_configuration, levi_graph, IncidenceConfiguration};
use crate::graph::Role;
use crate::symmetry::find_role_preserving_isomorphism;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("expected 27 solid and 27 hollow vertices, found {solid} solid and {hollow} hollow")]
    Unbalanced { solid: usize, hollow: usize },
}

/// Unit circles about the hollow vertices together with the solid vertices.
///
/// Indices in the incidence lists refer to positions in `points` and
/// `circle_centers`, not to vertex ids.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCircleRealization {
    /// `(vertex id, center)` for every hollow vertex, ascending by id.
    pub circle_centers: Vec<(usize, Point)>,
    pub circle_radius: f64,
    /// `(vertex id, position)` for every solid vertex, ascending by id.
    pub points: Vec<(usize, Point)>,
    /// All `(point, circle)` pairs with `|dist − radius| ≤ tol`.
    pub incidences: Vec<(usize, usize)>,
    /// Graph-adjacent `(point, circle)` pairs.
    pub required: Vec<(usize, usize)>,
    /// Required pairs that miss the circle by more than `tol`.
    pub missing_required: Vec<(usize, usize)>,
    /// Incidences between a point and a non-adjacent circle.
    pub accidental: Vec<(usize, usize)>,
    pub max_required_error: f64,
}

impl PointCircleRealization {
    /// The incidence structure formed by the required incidences that hold.
    pub fn configuration(&self) -> IncidenceConfiguration {
        let holding = self
            .required
            .iter()
            .filter(|f| self.missing_required.binary_search(f).is_err())
            .copied();
        IncidenceConfiguration::unlabeled(self.points.len(), self.circle_centers.len(), holding)
            .expect("incidence indices are in range")
    }

    /// Whether the holding required incidences form the 3×3×3 grid
    /// configuration, points to points and circles to lines.
    pub fn is_gray_configuration(&self) -> bool {
        find_role_preserving_isomorphism(
            &levi_graph(&self.configuration()),
            &levi_graph(&grid3_configuration(3)),
        )
        .is_some_and(|c| c.verified)
    }

    /// Every circle carries at least 3 points and every point lies on at
    /// least 3 circles.
    pub fn is_at_least_trivalent(&self) -> bool {
        let mut on_circle = vec![0usize; self.circle_centers.len()];
        let mut on_point = vec![0usize; self.points.len()];
        for &(p, c) in &self.incidences {
            on_point[p] += 1;
            on_circle[c] += 1;
        }
        on_circle.iter().chain(&on_point).all(|&k| k >= 3)
    }
}

/// Circles of radius 1 about the 27 hollow vertices, with the 27 solid
/// vertices as points.
pub fn point_circle_realization(
    e: &Embedding,
    tol: f64,
) -> Result<PointCircleRealization, RealizationError> {
    let g = e.graph();
    let solids = g.vertices_with_role(Role::Solid);
    let hollows = g.vertices_with_role(Role::Hollow);
    if solids.len() != 27 || hollows.len() != 27 {
        return Err(RealizationError::Unbalanced {
            solid: solids.len(),
            hollow: hollows.len(),
        });
    }
    let radius = 1.0;
    let mut incidences = Vec::new();
    let mut required = Vec::new();
    let mut missing_required = Vec::new();
    let mut accidental = Vec::new();
    let mut max_required_error: f64 = 0.0;
    for (pi, &p) in solids.iter().enumerate() {
        for (ci, &c) in hollows.iter().enumerate() {
            let err = (e.coord(p).dist(e.coord(c)) - radius).abs();
            let on = err <= tol;
            let adjacent = g.has_edge(p, c);
            if on {
                incidences.push((pi, ci));
            }
            if adjacent {
                required.push((pi, ci));
                max_required_error = max_required_error.max(err);
                if !on {
                    missing_required.push((pi, ci));
                }
            } else if on {
                accidental.push((pi, ci));
            }
        }
    }
    Ok(PointCircleRealization {
        circle_centers: hollows.iter().map(|&v| (v, e.coord(v))).collect(),
        circle_radius: radius,
        points: solids.iter().map(|&v| (v, e.coord(v))).collect(),
        incidences,
        required,
        missing_required,
        accidental,
        max_required_error,
    })
}
