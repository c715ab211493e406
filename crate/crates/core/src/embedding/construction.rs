use std::f64::consts::PI;

use super::{
    check_h, Color, ConstructionError, ConstructionParams, Embedding, Point, DEFAULT_SEP_THRESHOLD,
};
use crate::config::{grid2_configuration, levi_graph};
use crate::graph::{Graph, Role};

/// Vertices of the base grid drawing: 9 solid cells, 3 rows, 3 columns.
pub(crate) const G0_VERTICES: usize = 15;
const G0_SOLIDS: usize = 9;
const ROW_BASE: usize = 9;
const COL_BASE: usize = 12;
/// First id of the nine untranslated connector vertices.
pub(crate) const CONNECTOR_BASE: usize = 3 * G0_VERTICES;
pub(crate) const GRAY_VERTICES: usize = CONNECTOR_BASE + G0_SOLIDS;

/// Three unit vectors at mutual 120° angles, the first at `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorStar {
    pub vectors: [Point; 3],
}

impl VectorStar {
    pub fn sum(&self) -> Point {
        self.vectors[0] + self.vectors[1] + self.vectors[2]
    }
}

pub fn vector_star(theta: f64) -> VectorStar {
    // rotate the first vector by a fixed matrix rather than evaluating the
    // trigonometric functions at three rounded angles, so the sum stays at
    // rounding level for any theta
    let v = Point::polar(1.0, theta);
    let s = 3f64.sqrt() / 2.0;
    let turn = |sign: f64| Point::new(-0.5 * v.x - sign * s * v.y, sign * s * v.x - 0.5 * v.y);
    VectorStar {
        vectors: [v, turn(1.0), turn(-1.0)],
    }
}

/// Intersection of the unit circles about `a` and `b` lying to the left of
/// the directed segment `a → b`.
fn left_unit_intersection(a: Point, b: Point) -> Option<Point> {
    let d = b - a;
    let len = d.norm();
    let half_chord_sq = 1.0 - len * len / 4.0;
    if len == 0.0 || half_chord_sq <= 0.0 {
        return None;
    }
    let left = Point::new(-d.y / len, d.x / len);
    Some((a + b) * 0.5 + left * half_chord_sq.sqrt())
}

/// Base drawing without the coincidence check.
fn g0_unchecked(h: f64) -> Result<Embedding, ConstructionError> {
    check_h(h)?;
    let mut coords = vec![Point::ORIGIN; G0_VERTICES];
    // rows at 90°, 210°, 330°; columns at 150°, 270°, 30°
    for i in 0..3 {
        let step = 2.0 * PI * i as f64 / 3.0;
        coords[ROW_BASE + i] = Point::polar(h, PI / 2.0 + step);
        coords[COL_BASE + i] = Point::polar(h, 5.0 * PI / 6.0 + step);
    }
    for i in 0..3 {
        for j in 0..3 {
            coords[3 * i + j] = left_unit_intersection(coords[ROW_BASE + i], coords[COL_BASE + j])
                .ok_or(ConstructionError::NoIntersection { h })?;
        }
    }
    // ids agree with levi_graph(grid2_configuration(3)): cells, rows, columns
    let graph = levi_graph(&grid2_configuration(3));
    Embedding::new(graph, coords, vec![Color::None; G0_VERTICES], None)
}

fn check_separation(e: &Embedding, threshold: f64) -> Result<(), ConstructionError> {
    match e.closest_pair() {
        // NaN separations count as coincident
        Some((a, b, separation)) if separation < threshold || separation.is_nan() => {
            Err(ConstructionError::Coincident { a, b, separation })
        }
        _ => Ok(()),
    }
}

/// Unit-distance drawing of the Levi graph of the 3×3 grid: a regular
/// hexagon of circumradius `h` (rows and columns alternating) and the nine
/// cells at left-hand unit-circle intersections. Invariant under rotation
/// by 120° about the origin.
pub fn build_g0(h: f64) -> Result<Embedding, ConstructionError> {
    let e = g0_unchecked(h)?;
    check_separation(&e, DEFAULT_SEP_THRESHOLD)?;
    Ok(e)
}

/// Full construction without the coincidence check.
///
/// Ids: translate `c` (b, g, r) occupies `15c..15c+15` with the base
/// drawing's numbering; ids `45..54` are the untranslated cells, relabeled
/// hollow. Connector `45 + p` joins cell `p` of each translate.
pub(crate) fn construct_unchecked(
    params: ConstructionParams,
) -> Result<Embedding, ConstructionError> {
    params.check()?;
    let base = g0_unchecked(params.h)?;
    let star = vector_star(params.theta);

    let mut coords = Vec::with_capacity(GRAY_VERTICES);
    let mut colors = Vec::with_capacity(GRAY_VERTICES);
    let mut roles = Vec::with_capacity(GRAY_VERTICES);
    let mut edges = Vec::with_capacity(81);
    let base_roles = base
        .graph()
        .roles()
        .expect("base drawing has roles")
        .to_vec();
    for (c, &color) in Color::TRANSLATES.iter().enumerate() {
        let offset = c * G0_VERTICES;
        coords.extend(base.coords().iter().map(|&p| p + star.vectors[c]));
        colors.extend(std::iter::repeat_n(color, G0_VERTICES));
        roles.extend_from_slice(&base_roles);
        edges.extend(
            base.graph()
                .edges()
                .iter()
                .map(|&(a, b)| (a + offset, b + offset)),
        );
    }
    for p in 0..G0_SOLIDS {
        coords.push(base.coord(p));
        colors.push(Color::None);
        roles.push(Role::Hollow);
        for c in 0..3 {
            edges.push((CONNECTOR_BASE + p, c * G0_VERTICES + p));
        }
    }
    let graph = Graph::new(GRAY_VERTICES, edges)
        .and_then(|g| g.with_roles(roles))
        .expect("construction graph is simple and bipartite");
    Embedding::new(graph, coords, colors, Some(params))
}

/// Unit-distance drawing of the Gray graph for the given parameters, with
/// the default coincidence threshold.
pub fn assemble(params: ConstructionParams) -> Result<Embedding, ConstructionError> {
    assemble_with_threshold(params, DEFAULT_SEP_THRESHOLD)
}

pub fn assemble_with_threshold(
    params: ConstructionParams,
    sep_threshold: f64,
) -> Result<Embedding, ConstructionError> {
    let e = construct_unchecked(params)?;
    check_separation(&e, sep_threshold)?;
    Ok(e)
}
