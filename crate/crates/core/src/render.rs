//! Deterministic renderings of diagrams with walls: plain text, Graphviz dot
//! and SVG. Arrows are chords of the boundary circle, walls dashed chords,
//! irreducible areas shaded (grey fill in SVG, `#` marker in text).

use crate::walls::{AreaKind, DiagramWithWalls};
use std::fmt::Write as _;

pub fn render_ascii(dw: &DiagramWithWalls) -> String {
    let d = &dw.diagram;
    let mut out = String::new();
    let _ = writeln!(out, "{}", d);
    let _ = writeln!(out, "endpoints:");
    for (k, e) in d.endpoints().iter().enumerate() {
        let _ = writeln!(out, "  [{}] {}", k, e);
    }
    let _ = writeln!(out, "arrows:");
    for orbit in 1..=d.r() {
        let from = d.position(crate::diagram::Endpoint::minus(orbit));
        let to = d.position(crate::diagram::Endpoint::plus(orbit));
        let _ = writeln!(out, "  {}: [{}] -> [{}]", orbit, from, to);
    }
    if !d.crossings().is_empty() {
        let _ = writeln!(out, "crossings:");
        for (i, j) in d.crossings() {
            let _ = writeln!(out, "  {} x {}", i, j);
        }
    }
    let _ = writeln!(out, "walls:");
    for (k, w) in dw.walls.iter().enumerate() {
        let _ = writeln!(out, "  w{}: {}", k, w.notation());
    }
    let _ = writeln!(out, "areas:");
    for a in &dw.areas {
        let shade = if a.kind == AreaKind::Irreducible { "# " } else { "  " };
        let orbits: Vec<String> = a.orbits.iter().map(|o| o.to_string()).collect();
        let boundary: Vec<String> = a.boundary.iter().map(|w| format!("w{}", w)).collect();
        let _ = writeln!(
            out,
            "{}{{{}}} {:?} boundary [{}]",
            shade,
            orbits.join(","),
            a.kind,
            boundary.join(",")
        );
    }
    out
}

fn circle_point(k: usize, n: usize, radius: f64) -> (f64, f64) {
    let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
    (radius * theta.cos(), -radius * theta.sin())
}

fn gap_point(g: usize, n: usize, radius: f64) -> (f64, f64) {
    let theta = 2.0 * std::f64::consts::PI * (g as f64 + 0.5) / (n as f64);
    (radius * theta.cos(), -radius * theta.sin())
}

pub fn render_dot(dw: &DiagramWithWalls) -> String {
    let d = &dw.diagram;
    let n = d.len();
    let mut out = String::new();
    let _ = writeln!(out, "digraph diagram {{");
    let _ = writeln!(out, "  layout=neato;");
    for (k, e) in d.endpoints().iter().enumerate() {
        let (x, y) = circle_point(k, n, 2.0);
        let _ = writeln!(
            out,
            "  e{} [label=\"{}\", pos=\"{:.3},{:.3}!\", shape=circle];",
            k, e, x, y
        );
    }
    for orbit in 1..=d.r() {
        let from = d.position(crate::diagram::Endpoint::minus(orbit));
        let to = d.position(crate::diagram::Endpoint::plus(orbit));
        let _ = writeln!(out, "  e{} -> e{} [label=\"{}\"];", from, to, orbit);
    }
    for w in &dw.walls {
        let _ = writeln!(
            out,
            "  g{} -> g{} [style=dashed, dir=none];",
            w.gaps.0, w.gaps.1
        );
    }
    for w in &dw.walls {
        for g in [w.gaps.0, w.gaps.1] {
            let (x, y) = gap_point(g, n, 2.0);
            let _ = writeln!(out, "  g{} [label=\"g{}\", pos=\"{:.3},{:.3}!\", shape=point];", g, g, x, y);
        }
    }
    let _ = writeln!(out, "}}");
    out
}

pub fn render_svg(dw: &DiagramWithWalls) -> String {
    let d = &dw.diagram;
    let n = d.len();
    let r = 100.0;
    let cx = 120.0;
    let cy = 120.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" viewBox=\"0 0 240 240\">"
    );
    // Shade irreducible areas with a grey wedge between their boundary walls.
    for area in &dw.areas {
        if area.kind != AreaKind::Irreducible {
            continue;
        }
        let mut pts = Vec::new();
        for &w in &area.boundary {
            let wall = &dw.walls[w];
            for g in [wall.gaps.0, wall.gaps.1] {
                let (x, y) = gap_point(g, n, r);
                pts.push((cx + x, cy + y));
            }
        }
        if pts.len() >= 3 {
            let path: Vec<String> = pts.iter().map(|(x, y)| format!("{:.2},{:.2}", x, y)).collect();
            let _ = writeln!(
                out,
                "  <polygon points=\"{}\" fill=\"#cccccc\" stroke=\"none\"/>",
                path.join(" ")
            );
        }
    }
    let _ = writeln!(
        out,
        "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"{:.1}\" fill=\"none\" stroke=\"black\"/>",
        cx, cy, r
    );
    for orbit in 1..=d.r() {
        let from = d.position(crate::diagram::Endpoint::minus(orbit));
        let to = d.position(crate::diagram::Endpoint::plus(orbit));
        let (x1, y1) = circle_point(from, n, r);
        let (x2, y2) = circle_point(to, n, r);
        let _ = writeln!(
            out,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" marker-end=\"url(#arrow)\"/>",
            cx + x1,
            cy + y1,
            cx + x2,
            cy + y2
        );
    }
    for w in &dw.walls {
        let (x1, y1) = gap_point(w.gaps.0, n, r);
        let (x2, y2) = gap_point(w.gaps.1, n, r);
        let _ = writeln!(
            out,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-dasharray=\"6,3\"/>",
            cx + x1,
            cy + y1,
            cx + x2,
            cy + y2
        );
    }
    for (k, e) in d.endpoints().iter().enumerate() {
        let (x, y) = circle_point(k, n, r + 12.0);
        let _ = writeln!(
            out,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\" text-anchor=\"middle\">{}</text>",
            cx + x,
            cy + y,
            e
        );
    }
    let _ = writeln!(
        out,
        "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" markerWidth=\"5\" markerHeight=\"5\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>"
    );
    let _ = writeln!(out, "</svg>");
    out
}
