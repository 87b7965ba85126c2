//! SVG rendering of toric diagrams.

use std::fmt::Write;

use hyperconifold::fan::{PointKind, ToricDiagram};
use hyperconifold::lattice::{squaring_shear, Point2};
use hyperconifold::Result;

use crate::report::point;

pub const SPACING: i64 = 40;
pub const MARGIN: i64 = 40;
pub const DOT_RADIUS: i64 = 4;
pub const STROKE: i64 = 2;

/// Draws the lattice points, the boundary polygon and, if present, the
/// triangulation, after a shear that makes the picture roughly square.
pub fn render(diagram: &ToricDiagram) -> Result<String> {
    let all: Vec<Point2> = diagram.points().iter().map(|p| p.point.clone()).collect();
    let shear = squaring_shear(&all)?;
    let map = |p: &Point2| -> [i64; 2] {
        let [x, y] = shear.apply(&[p.x.clone(), p.y.clone()]);
        point(&Point2 { x, y })
    };
    let moved: Vec<[i64; 2]> = all.iter().map(map).collect();
    let min_x = moved.iter().map(|p| p[0]).min().unwrap();
    let max_x = moved.iter().map(|p| p[0]).max().unwrap();
    let min_y = moved.iter().map(|p| p[1]).min().unwrap();
    let max_y = moved.iter().map(|p| p[1]).max().unwrap();
    let width = (max_x - min_x) * SPACING + 2 * MARGIN;
    let height = (max_y - min_y) * SPACING + 2 * MARGIN;
    // lattice y grows upwards, SVG y downwards
    let px = |p: [i64; 2]| (MARGIN + (p[0] - min_x) * SPACING, MARGIN + (max_y - p[1]) * SPACING);
    let path = |pts: &[Point2]| -> String {
        pts.iter()
            .map(|p| {
                let (x, y) = px(map(p));
                format!("{x},{y}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();
    if let Some(triangles) = diagram.triangles() {
        for t in triangles {
            writeln!(
                s,
                r##"<polygon class="triangle" points="{}" fill="none" stroke="#888888" stroke-width="1"/>"##,
                path(t)
            )
            .unwrap();
        }
    }
    writeln!(
        s,
        r##"<polygon class="boundary" points="{}" fill="none" stroke="#000000" stroke-width="{STROKE}"/>"##,
        path(diagram.vertices())
    )
    .unwrap();
    for p in diagram.points() {
        let (x, y) = px(map(&p.point));
        let (class, fill) = match p.kind {
            PointKind::Vertex => ("vertex", "#000000"),
            PointKind::Boundary => ("boundary-point", "#000000"),
            PointKind::Interior => ("interior", "#cc0000"),
        };
        writeln!(s, r#"<circle class="{class}" cx="{x}" cy="{y}" r="{DOT_RADIUS}" fill="{fill}"/>"#).unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}
