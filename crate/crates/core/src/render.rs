//! SVG drawings of embeddings.
//!
//! Solid vertices are filled, hollow vertices are drawn as outlined discs,
//! and each translate of the base grid drawing gets its own color. The
//! y-axis is flipped at render time so the picture keeps mathematical
//! orientation; data files are never flipped.

use std::fmt::Write;

use crate::embedding::{Color, Embedding, Point};
use crate::graph::Role;

#[derive(Debug, Clone, PartialEq)]
pub struct Palette {
    pub b: String,
    pub g: String,
    pub r: String,
    pub none: String,
}

impl Palette {
    pub fn get(&self, c: Color) -> &str {
        match c {
            Color::B => &self.b,
            Color::G => &self.g,
            Color::R => &self.r,
            Color::None => &self.none,
        }
    }
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            b: "#1f4fd1".into(),
            g: "#1a9a3a".into(),
            r: "#d12a1f".into(),
            none: "#000000".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Canvas width and height.
    pub size: f64,
    pub margin: f64,
    pub vertex_radius: f64,
    pub stroke_width: f64,
    /// Draw a unit circle about every hollow vertex.
    pub circles: bool,
    pub palette: Palette,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            size: 800.0,
            margin: 24.0,
            vertex_radius: 5.0,
            stroke_width: 1.5,
            circles: false,
            palette: Palette::default(),
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    // avoid "-0.000"
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000".to_string()
    } else {
        s
    }
}

struct Frame {
    min: Point,
    max: Point,
    scale: f64,
    offset: Point,
}

impl Frame {
    fn fit(e: &Embedding, style: &RenderStyle) -> Frame {
        let pad = |v: usize| {
            if style.circles && e.graph().role(v) == Some(Role::Hollow) {
                1.0
            } else {
                0.0
            }
        };
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (v, p) in e.coords().iter().enumerate() {
            let r = pad(v);
            min = Point::new(min.x.min(p.x - r), min.y.min(p.y - r));
            max = Point::new(max.x.max(p.x + r), max.y.max(p.y + r));
        }
        if e.vertex_count() == 0 {
            min = Point::ORIGIN;
            max = Point::ORIGIN;
        }
        let extent = (max.x - min.x).max(max.y - min.y);
        let avail = (style.size - 2.0 * style.margin).max(1.0);
        let scale = if extent > 0.0 { avail / extent } else { 1.0 };
        let offset = Point::new(
            style.margin + (avail - (max.x - min.x) * scale) / 2.0,
            style.margin + (avail - (max.y - min.y) * scale) / 2.0,
        );
        Frame {
            min,
            max,
            scale,
            offset,
        }
    }

    fn map(&self, p: Point) -> (String, String) {
        let x = self.offset.x + (p.x - self.min.x) * self.scale;
        let y = self.offset.y + (self.max.y - p.y) * self.scale;
        (num(x), num(y))
    }
}

/// SVG 1.1 document: optional incidence circles, then edges in sorted
/// order, then vertex marks by id.
pub fn to_svg(e: &Embedding, style: &RenderStyle) -> String {
    let frame = Frame::fit(e, style);
    let g = e.graph();
    let size = num(style.size);
    let sw = num(style.stroke_width);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{size}\" height=\"{size}\" fill=\"#ffffff\"/>"
    );

    if style.circles {
        let r = num(frame.scale);
        let _ = writeln!(
            out,
            "<g id=\"incidence-circles\" fill=\"none\" stroke=\"#9a9a9a\" stroke-width=\"{}\">",
            num(style.stroke_width * 0.5)
        );
        for v in g.vertices_with_role(Role::Hollow) {
            let (cx, cy) = frame.map(e.coord(v));
            let _ = writeln!(
                out,
                "<circle class=\"incidence\" cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\"/>"
            );
        }
        out.push_str("</g>\n");
    }

    let _ = writeln!(
        out,
        "<g id=\"edges\" stroke-width=\"{sw}\" stroke-linecap=\"round\">"
    );
    for &(a, b) in g.edges() {
        let color = if e.color(a) == e.color(b) {
            e.color(a)
        } else {
            Color::None
        };
        let (x1, y1) = frame.map(e.coord(a));
        let (x2, y2) = frame.map(e.coord(b));
        let _ = writeln!(
            out,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{}\"/>",
            style.palette.get(color)
        );
    }
    out.push_str("</g>\n");

    let _ = writeln!(out, "<g id=\"vertices\" stroke-width=\"{sw}\">");
    let r = num(style.vertex_radius);
    for v in 0..e.vertex_count() {
        let color = style.palette.get(e.color(v));
        let (cx, cy) = frame.map(e.coord(v));
        let (class, fill) = match g.role(v) {
            Some(Role::Hollow) => ("hollow", "#ffffff"),
            _ => ("solid", color),
        };
        let _ = writeln!(
            out,
            "<circle class=\"vertex {class}\" cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\" fill=\"{fill}\" stroke=\"{color}\"/>"
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
