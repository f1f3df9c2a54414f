//! SVG drawing of the plane curve `(T_i(t), T_j(t))`, optionally with the
//! crossings of the space curve `z = T_k` broken on the under strand.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::Report;
use crate::diagram::{z_crossing_sequence, Height};
use crate::error::Result;
use crate::geometry::{curve_samples, NodalCurve};

const SIZE: f64 = 512.0;
const VIEW: f64 = 1.25;
const GAP: f64 = 0.045;

#[derive(Debug, Clone, Serialize)]
pub struct SvgReport {
    pub schema: &'static str,
    pub i: u64,
    pub j: u64,
    pub k: Option<u64>,
    pub samples: usize,
    pub nodes: usize,
    pub gapped_crossings: usize,
    pub path: Option<String>,
}

impl Report for SvgReport {
    fn text(&self) -> String {
        let mut s = format!("curve: (T_{}, T_{})", self.i, self.j);
        if let Some(k) = self.k {
            s.push_str(&format!(" with z = T_{k}"));
        }
        s.push_str(&format!(
            "\nsamples: {}\nnodes: {}\ngapped crossings: {}\n",
            self.samples, self.nodes, self.gapped_crossings
        ));
        if let Some(p) = &self.path {
            s.push_str(&format!("written: {p}\n"));
        }
        s
    }
}

fn to_screen(x: f64, y: f64) -> (f64, f64) {
    ((x + VIEW) / (2.0 * VIEW) * SIZE, (VIEW - y) / (2.0 * VIEW) * SIZE)
}

/// Unit tangent of `(T_i, T_j)` at `t = cos(theta)`, up to a positive factor.
fn tangent(i: u64, j: u64, theta: f64) -> (f64, f64) {
    let (dx, dy) = (i as f64 * (i as f64 * theta).sin(), j as f64 * (j as f64 * theta).sin());
    let n = dx.hypot(dy);
    (dx / n, dy / n)
}

/// Renders the SVG document. `64 (i + j)` samples cover `t` in `[-1.05, 1.05]`.
pub fn render_svg(i: u64, j: u64, k: Option<u64>) -> Result<(String, SvgReport)> {
    let curve = NodalCurve::new(i, j)?;
    let count = 64 * (i + j) as usize;
    let r = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(20));
    let pts: Vec<(f64, f64)> = curve_samples(i, j, count, (r(-21), r(21)))?
        .iter()
        .map(|(x, y)| (x.to_f64().unwrap_or(f64::NAN), y.to_f64().unwrap_or(f64::NAN)))
        .collect();

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<clipPath id="box"><rect width="{SIZE}" height="{SIZE}"/></clipPath>"#);
    let _ = writeln!(svg, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = write!(svg, r#"<polyline clip-path="url(#box)" fill="none" stroke="black" stroke-width="1.5" points=""#);
    for &(x, y) in &pts {
        // Far ends are clamped so the polyline stays finite; the clip hides them.
        let (sx, sy) = to_screen(x.clamp(-4.0, 4.0), y.clamp(-4.0, 4.0));
        let _ = write!(svg, "{sx:.2},{sy:.2} ");
    }
    let _ = writeln!(svg, r#""/>"#);

    let mut gapped = 0;
    match k {
        None => {
            for n in &curve.nodes {
                let (sx, sy) = to_screen(n.x.to_f64(), n.y.to_f64());
                let _ = writeln!(svg, r#"<circle cx="{sx:.2}" cy="{sy:.2}" r="3" fill="red"/>"#);
            }
        }
        Some(k) => {
            let seq = z_crossing_sequence(&curve, &Height::Chebyshev(k))?;
            let rad = GAP / (2.0 * VIEW) * SIZE;
            for (pos, &v) in seq.values().iter().enumerate() {
                if v < 0 {
                    continue;
                }
                let node = &curve.nodes[curve.node_of[pos]];
                let (cx, cy) = to_screen(node.x.to_f64(), node.y.to_f64());
                let theta = curve.params[pos].to_f64().acos();
                let (ux, uy) = tangent(i, j, theta);
                let (ax, ay) = (cx - 1.3 * rad * ux, cy + 1.3 * rad * uy);
                let (bx, by) = (cx + 1.3 * rad * ux, cy - 1.3 * rad * uy);
                let _ = writeln!(svg, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{rad:.2}" fill="white"/>"#);
                let _ = writeln!(
                    svg,
                    r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}" stroke="black" stroke-width="1.5"/>"#
                );
                gapped += 1;
            }
        }
    }
    svg.push_str("</svg>\n");
    let report = SvgReport {
        schema: "chebknot.svg/1",
        i,
        j,
        k,
        samples: count,
        nodes: curve.node_count(),
        gapped_crossings: gapped,
        path: None,
    };
    Ok((svg, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markers_and_gaps() {
        let (doc, rep) = render_svg(3, 8, None).unwrap();
        assert_eq!(rep.samples, 704);
        assert_eq!(doc.matches("<circle").count(), 7);
        let (doc, rep) = render_svg(3, 4, Some(5)).unwrap();
        assert_eq!(rep.gapped_crossings, 3);
        assert_eq!(doc.matches("<line").count(), 3);
        assert!(doc.starts_with("<svg") && doc.ends_with("</svg>\n"));
    }
}
