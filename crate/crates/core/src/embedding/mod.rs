//! Planar embeddings: the two-parameter unit-distance construction of the
//! Gray graph, its validation, the feasibility sweep over the parameter
//! plane, and the isometric point-circle realization.

mod construction;
mod realization;
mod sweep;
mod validate;

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use construction::{assemble, assemble_with_threshold, build_g0, vector_star, VectorStar};
pub use realization::{point_circle_realization, PointCircleRealization, RealizationError};
#[cfg(feature = "parallel")]
pub use sweep::sweep_parallel;
pub use sweep::{
    evaluate_point, sweep, sweep_sequential, FeasibilityMap, SweepPoint, SweepSpec, SweepStatus,
};
pub use validate::{detect_symmetry, validate, ValidationReport};

pub(crate) use construction::construct_unchecked;

/// Unit-length tolerance used when none is given.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Vertices closer than this are treated as coincident.
pub const DEFAULT_SEP_THRESHOLD: f64 = 1e-6;
/// Period of the vector star under rotation.
pub const STAR_PERIOD: f64 = 2.0 * PI / 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn polar(r: f64, angle: f64) -> Self {
        Point::new(r * angle.cos(), r * angle.sin())
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// 2D cross product `self × other`.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    /// Rotation by `angle` about `center`.
    pub fn rotate_about(self, center: Point, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        let d = self - center;
        center + Point::new(c * d.x - s * d.y, s * d.x + c * d.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

/// Which translate of the base grid drawing a vertex belongs to. The nine
/// untranslated connector vertices carry [`Color::None`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    B,
    G,
    R,
    None,
}

impl Color {
    pub const TRANSLATES: [Color; 3] = [Color::B, Color::G, Color::R];

    pub fn as_str(self) -> &'static str {
        match self {
            Color::B => "b",
            Color::G => "g",
            Color::R => "r",
            Color::None => "none",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The two degrees of freedom: hexagon circumradius `h` (edge length is 1)
/// and the rotation `theta` of the vector star, in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub h: f64,
    pub theta: f64,
}

impl ConstructionParams {
    pub fn new(h: f64, theta: f64) -> Result<Self, ConstructionError> {
        let p = ConstructionParams { h, theta };
        p.check()?;
        Ok(p)
    }

    /// Reference point used throughout the tests and the CLI defaults.
    pub fn reference() -> Self {
        ConstructionParams { h: 0.6, theta: 0.3 }
    }

    pub(crate) fn check(&self) -> Result<(), ConstructionError> {
        if !self.theta.is_finite() {
            return Err(ConstructionError::NonFiniteTheta(self.theta));
        }
        check_h(self.h)
    }

    /// `theta` reduced into `[0, 2π/3)`.
    pub fn reduced_theta(&self) -> f64 {
        let t = self.theta.rem_euclid(STAR_PERIOD);
        if t >= STAR_PERIOD {
            0.0
        } else {
            t
        }
    }
}

pub(crate) fn check_h(h: f64) -> Result<(), ConstructionError> {
    // circles about antipodal hexagon vertices sit 2h apart
    if h.is_finite() && h > 0.0 && h < 1.0 {
        Ok(())
    } else {
        Err(ConstructionError::NoIntersection { h })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("no transversal circle intersection for h = {h} (need 0 < h < 1)")]
    NoIntersection { h: f64 },
    #[error("theta must be finite, got {0}")]
    NonFiniteTheta(f64),
    #[error("vertices {a} and {b} coincide (separation {separation:e})")]
    Coincident { a: usize, b: usize, separation: f64 },
    #[error("embedding has {coords} coordinates and {colors} colors for {n} vertices")]
    Shape {
        n: usize,
        coords: usize,
        colors: usize,
    },
}

impl ConstructionError {
    /// Stable machine-readable reason.
    pub fn reason(&self) -> &'static str {
        match self {
            ConstructionError::NoIntersection { .. } | ConstructionError::NonFiniteTheta(_) => {
                "no_intersection"
            }
            ConstructionError::Coincident { .. } => "coincident",
            ConstructionError::Shape { .. } => "malformed",
        }
    }
}

/// Vertex coordinates together with the combinatorial graph they realize.
/// Edge target length is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    params: Option<ConstructionParams>,
    graph: Graph,
    coords: Vec<Point>,
    colors: Vec<Color>,
}

impl Embedding {
    pub fn new(
        graph: Graph,
        coords: Vec<Point>,
        colors: Vec<Color>,
        params: Option<ConstructionParams>,
    ) -> Result<Self, ConstructionError> {
        let n = graph.vertex_count();
        if coords.len() != n || colors.len() != n {
            return Err(ConstructionError::Shape {
                n,
                coords: coords.len(),
                colors: colors.len(),
            });
        }
        Ok(Embedding {
            params,
            graph,
            coords,
            colors,
        })
    }

    pub fn params(&self) -> Option<ConstructionParams> {
        self.params
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    pub fn coord(&self, v: usize) -> Point {
        self.coords[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn edge_length(&self, a: usize, b: usize) -> f64 {
        self.coords[a].dist(self.coords[b])
    }

    /// Arithmetic mean of the coordinates.
    pub fn centroid(&self) -> Point {
        if self.coords.is_empty() {
            return Point::ORIGIN;
        }
        let n = self.coords.len() as f64;
        let sum = self.coords.iter().fold(Point::ORIGIN, |acc, &p| acc + p);
        sum * (1.0 / n)
    }

    /// Applies `f` to every coordinate, keeping the combinatorics.
    pub fn map_coords(&self, f: impl Fn(Point) -> Point) -> Embedding {
        Embedding {
            params: self.params,
            graph: self.graph.clone(),
            coords: self.coords.iter().map(|&p| f(p)).collect(),
            colors: self.colors.clone(),
        }
    }

    /// Copy with vertex `v` moved to `p`.
    pub fn with_coord(&self, v: usize, p: Point) -> Embedding {
        let mut e = self.clone();
        e.coords[v] = p;
        e
    }

    /// Smallest pairwise separation and the pair attaining it.
    pub fn closest_pair(&self) -> Option<(usize, usize, f64)> {
        let mut best: Option<(usize, usize, f64)> = None;
        for a in 0..self.coords.len() {
            for b in a + 1..self.coords.len() {
                let d = self.coords[a].dist(self.coords[b]);
                if best.is_none_or(|(_, _, bd)| d < bd) {
                    best = Some((a, b, d));
                }
            }
        }
        best
    }
}

/// The combinatorial graph underlying `e` (roles kept, coordinates dropped).
pub fn extract_graph(e: &Embedding) -> Graph {
    e.graph.clone()
}
