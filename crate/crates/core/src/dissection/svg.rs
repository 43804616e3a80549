use std::f64::consts::PI;
use std::fmt::Write;

use super::Dissection;

const SIZE: f64 = 400.0;
const RADIUS: f64 = 160.0;

fn vertex(n: usize, label: usize) -> (f64, f64) {
    // Clockwise from the top.
    let t = 2.0 * PI * (label - 1) as f64 / n as f64 - PI / 2.0;
    (SIZE / 2.0 + RADIUS * t.cos(), SIZE / 2.0 + RADIUS * t.sin())
}

/// The dissection drawn on a regular polygon, each vertex annotated with its
/// label and quiddity entry and each cell with its weight.
pub fn render_svg(d: &Dissection) -> String {
    let q = d.quiddity_unchecked();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    for c in &d.cells {
        let pts: Vec<String> = c
            .vertices
            .iter()
            .map(|&v| {
                let (x, y) = vertex(d.n, v);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let fill = if c.is_triangle() {
            "#dde8f6"
        } else {
            "#f6eedd"
        };
        let _ = writeln!(
            s,
            r#"  <polygon points="{}" fill="{fill}" stroke="black" stroke-width="1.5"/>"#,
            pts.join(" ")
        );
        if let Some(w) = c.weight {
            let k = c.vertices.len() as f64;
            let (cx, cy) = c.vertices.iter().fold((0.0, 0.0), |(x, y), &v| {
                let (vx, vy) = vertex(d.n, v);
                (x + vx / k, y + vy / k)
            });
            let _ = writeln!(
                s,
                r#"  <text x="{cx:.2}" y="{cy:.2}" font-size="14" text-anchor="middle" dominant-baseline="middle">{w}</text>"#
            );
        }
    }
    for v in 1..=d.n {
        let (x, y) = vertex(d.n, v);
        let (dx, dy) = ((x - SIZE / 2.0) * 0.14, (y - SIZE / 2.0) * 0.14);
        let _ = writeln!(s, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="3"/>"#);
        let _ = writeln!(
            s,
            r#"  <text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle" dominant-baseline="middle">{v}:{}</text>"#,
            x + dx,
            y + dy,
            q[v - 1]
        );
    }
    s.push_str("</svg>\n");
    s
}
