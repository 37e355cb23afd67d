//! Deterministic SVG drawings of stored configurations.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::io::ConfigRecord;

#[derive(Clone, Debug)]
pub struct Style {
    pub size: f64,
    pub point_radius: f64,
    pub line_width: f64,
    pub show_omega: bool,
    pub show_mirror: bool,
    pub labels: bool,
}

impl Default for Style {
    fn default() -> Self {
        Style { size: 800.0, point_radius: 4.5, line_width: 1.4, show_omega: true, show_mirror: true, labels: false }
    }
}

const FALLBACK: [&str; 6] = ["#ff7f0e", "#8c564b", "#17a673", "#7f7f7f", "#bcbd22", "#e377c2"];

/// Colour of a symmetry class; point and line classes sharing a letter
/// share a colour.
pub fn class_color(class: &str) -> Option<&'static str> {
    Some(match class.to_ascii_lowercase().as_str() {
        "r" => "#d62728",
        "y" => "#e6b800",
        "g" => "#2ca02c",
        "m" => "#c51bc5",
        "b" => "#1f4fd6",
        "c" => "#12b5c9",
        "p" => "#7b2fa8",
        _ => return None,
    })
}

struct Palette(Vec<String>);

impl Palette {
    fn new(rec: &ConfigRecord) -> Self {
        let unknown: BTreeSet<String> = rec
            .points
            .iter()
            .chain(&rec.lines)
            .map(|e| e.label.class.to_ascii_lowercase())
            .filter(|c| class_color(c).is_none())
            .collect();
        Palette(unknown.into_iter().collect())
    }

    fn color(&self, class: &str) -> &'static str {
        class_color(class).unwrap_or_else(|| {
            let k = self.0.iter().position(|c| *c == class.to_ascii_lowercase()).unwrap_or(0);
            FALLBACK[k % FALLBACK.len()]
        })
    }
}

fn f64s(cs: &[String], what: &str) -> Result<Vec<f64>> {
    cs.iter()
        .map(|s| s.parse::<f64>().map_err(|_| Error::Parse(format!("{what}: not a decimal number {s:?}"))))
        .collect()
}

/// Segment of `a x + b y + c = 0` inside the box, if any.
fn clip(l: [f64; 3], lo: [f64; 2], hi: [f64; 2]) -> Option<([f64; 2], [f64; 2])> {
    let [a, b, c] = l;
    let mut hits: Vec<[f64; 2]> = Vec::new();
    let eps = 1e-12 * (hi[0] - lo[0]).max(hi[1] - lo[1]);
    if b.abs() > 1e-300 {
        for x in [lo[0], hi[0]] {
            let y = -(a * x + c) / b;
            if y >= lo[1] - eps && y <= hi[1] + eps {
                hits.push([x, y]);
            }
        }
    }
    if a.abs() > 1e-300 {
        for y in [lo[1], hi[1]] {
            let x = -(b * y + c) / a;
            if x >= lo[0] - eps && x <= hi[0] + eps {
                hits.push([x, y]);
            }
        }
    }
    // Direction along the line; the extreme hits bound the segment.
    let d = [-b, a];
    let t = |p: &[f64; 2]| p[0] * d[0] + p[1] * d[1];
    let first = hits.iter().min_by(|p, q| t(p).total_cmp(&t(q)))?;
    let last = hits.iter().max_by(|p, q| t(p).total_cmp(&t(q)))?;
    (t(last) - t(first) > eps).then_some((*first, *last))
}

/// Renders points as discs over their lines. The view is the square around
/// the points' bounding box grown by 15%.
pub fn render_svg(rec: &ConfigRecord, style: &Style) -> Result<String> {
    let size = style.size;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let mut pts = Vec::new();
    for (i, e) in rec.points.iter().enumerate() {
        let c = f64s(&e.coords, &format!("points[{i}]"))?;
        if c[2].abs() < 1e-300 {
            return Err(Error::Domain(format!("point {} is at infinity", e.label)));
        }
        pts.push((&e.label, [c[0] / c[2], c[1] / c[2]]));
    }
    if pts.is_empty() {
        out.push_str("</svg>\n");
        return Ok(out);
    }
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for (_, p) in &pts {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let half = 0.5 * 1.15 * (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let mid = [(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0];
    let (lo, hi) = ([mid[0] - half, mid[1] - half], [mid[0] + half, mid[1] + half]);
    let scale = size / (2.0 * half);
    let sx = |x: f64| (x - lo[0]) * scale;
    let sy = |y: f64| (hi[1] - y) * scale;
    let palette = Palette::new(rec);

    let _ = writeln!(out, r#"<g stroke-width="{:.2}" fill="none">"#, style.line_width);
    for (i, e) in rec.lines.iter().enumerate() {
        let c = f64s(&e.coords, &format!("lines[{i}]"))?;
        if let Some((p, q)) = clip([c[0], c[1], c[2]], lo, hi) {
            let _ = writeln!(
                out,
                r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}"/>"#,
                sx(p[0]),
                sy(p[1]),
                sx(q[0]),
                sy(q[1]),
                palette.color(&e.label.class)
            );
        }
    }
    out.push_str("</g>\n");

    if style.show_omega {
        if let Some(o) = &rec.omega {
            let c = f64s(&o.center, "omega.center")?;
            let r = f64s(std::slice::from_ref(&o.radius), "omega.radius")?[0];
            let _ = writeln!(
                out,
                r#"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1" stroke-dasharray="6 4"/>"#,
                sx(c[0]),
                sy(c[1]),
                r * scale
            );
        }
    }
    if style.show_mirror {
        if let Some(th) = rec.mirror.as_ref().and_then(|m| m.angle()) {
            // The mirror passes through the origin.
            if let Some((p, q)) = clip([th.sin(), -th.cos(), 0.0], lo, hi) {
                let _ = writeln!(
                    out,
                    r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1" stroke-dasharray="6 4"/>"#,
                    sx(p[0]),
                    sy(p[1]),
                    sx(q[0]),
                    sy(q[1])
                );
            }
        }
    }

    out.push_str("<g stroke=\"black\" stroke-width=\"0.8\">\n");
    for (l, p) in &pts {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.3}" cy="{:.3}" r="{:.2}" fill="{}"/>"#,
            sx(p[0]),
            sy(p[1]),
            style.point_radius,
            palette.color(&l.class)
        );
    }
    out.push_str("</g>\n");
    if style.labels {
        out.push_str("<g font-family=\"sans-serif\" font-size=\"11\">\n");
        for (l, p) in &pts {
            let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}">{}{}</text>"#, sx(p[0]) + 6.0, sy(p[1]) - 6.0, l.class, l.index);
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::celestial::gr_coordinates;
    use crate::real::Precision;

    #[test]
    fn clip_horizontal_line() {
        let (p, q) = clip([0.0, 1.0, -0.5], [-1.0, -1.0], [1.0, 1.0]).unwrap();
        assert_eq!((p, q), ([1.0, 0.5], [-1.0, 0.5]));
        assert!(clip([0.0, 1.0, -2.0], [-1.0, -1.0], [1.0, 1.0]).is_none());
    }

    #[test]
    fn gr_drawing() {
        let cfg = gr_coordinates(Precision::new(64).unwrap()).unwrap();
        let rec = ConfigRecord::from_config("GR", &cfg);
        let svg = render_svg(&rec, &Style::default()).unwrap();
        assert_eq!(svg, render_svg(&rec, &Style::default()).unwrap());
        assert_eq!(svg.matches("<circle").count(), 21);
        assert_eq!(svg.matches("<line").count(), 21);
    }

    #[test]
    fn empty_canvas() {
        let cfg = crate::config::GeometricConfiguration::new(3, vec![], vec![], vec![]).unwrap();
        let svg = render_svg(&ConfigRecord::from_config("empty", &cfg), &Style::default()).unwrap();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(!svg.contains("<circle"));
    }
}
