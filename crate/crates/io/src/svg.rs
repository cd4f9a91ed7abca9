//! Static SVG drawings of planar configurations. Hulls are computed
//! exactly; coordinates become floats only when written out.

use std::fmt::Write;

use tverberg_core::{IntersectionCertificate, PointConfig, Rat, RatVector};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;
const COLORS: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];

fn cross(o: &RatVector, a: &RatVector, b: &RatVector) -> Rat {
    let (ax, ay) = (&a[0] - &o[0], &a[1] - &o[1]);
    let (bx, by) = (&b[0] - &o[0], &b[1] - &o[1]);
    ax * by - ay * bx
}

/// Vertices of the convex hull in counterclockwise order (monotone chain).
pub fn hull_2d(config: &PointConfig, indices: &[usize]) -> Vec<usize> {
    let mut idx = indices.to_vec();
    idx.sort_by(|&a, &b| config.point(a).coords().cmp(config.point(b).coords()));
    idx.dedup_by(|a, b| config.point(*a) == config.point(*b));
    if idx.len() < 3 {
        return idx;
    }
    let p = |i: usize| config.point(i);
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<usize> = if pass == 0 { idx.clone() } else { idx.iter().rev().copied().collect() };
        for &i in &seq {
            while hull.len() >= start + 2
                && !cross(p(hull[hull.len() - 2]), p(hull[hull.len() - 1]), p(i)).is_positive()
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

struct Frame {
    min: [f64; 2],
    scale: f64,
}

impl Frame {
    fn new(config: &PointConfig) -> Self {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in config.points() {
            for k in 0..2 {
                let v = p[k].to_f64();
                min[k] = min[k].min(v);
                max[k] = max[k].max(v);
            }
        }
        let span = (max[0] - min[0]).max(max[1] - min[1]).max(1e-12);
        Frame {
            min,
            scale: (SIZE - 2.0 * MARGIN) / span,
        }
    }

    fn map(&self, p: &RatVector) -> (f64, f64) {
        let x = MARGIN + (p[0].to_f64() - self.min[0]) * self.scale;
        let y = SIZE - MARGIN - (p[1].to_f64() - self.min[1]) * self.scale;
        (x, y)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Draws the points with their labels and, when given, each part's hull
/// as a shaded polygon and the common point as a cross. Requires `dim = 2`.
pub fn render(
    config: &PointConfig,
    witness: Option<(&[Vec<usize>; 3], &IntersectionCertificate)>,
) -> Result<String, String> {
    if config.dim() != 2 {
        return Err(format!("rendering needs dimension 2, got {}", config.dim()));
    }
    let frame = Frame::new(config);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if let Some((parts, cert)) = witness {
        for (part, color) in parts.iter().zip(COLORS) {
            let hull = hull_2d(config, part);
            let pts: Vec<String> = hull
                .iter()
                .map(|&i| {
                    let (x, y) = frame.map(config.point(i));
                    format!("{x:.2},{y:.2}")
                })
                .collect();
            let _ = writeln!(
                out,
                r#"<polygon points="{}" fill="{color}" fill-opacity="0.2" stroke="{color}" stroke-width="2"/>"#,
                pts.join(" ")
            );
        }
        let (x, y) = frame.map(&cert.common_point);
        let _ = writeln!(
            out,
            r#"<path d="M{:.2},{:.2}L{:.2},{:.2}M{:.2},{:.2}L{:.2},{:.2}" stroke="black" stroke-width="2"/>"#,
            x - 6.0,
            y - 6.0,
            x + 6.0,
            y + 6.0,
            x - 6.0,
            y + 6.0,
            x + 6.0,
            y - 6.0
        );
    }
    for (i, p) in config.points().iter().enumerate() {
        let color = witness
            .and_then(|(parts, _)| parts.iter().position(|part| part.contains(&i)))
            .map_or("black", |k| COLORS[k]);
        let (x, y) = frame.map(p);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{color}"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" font-family="sans-serif">{}</text>"#,
            x + 6.0,
            y - 6.0,
            escape(config.label(i))
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
