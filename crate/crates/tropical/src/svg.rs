//! Deterministic SVG rendering of point configurations on the standard
//! 2-simplex.
//!
//! Chart: the equilateral triangle of side 1 with the first simplex
//! vertex at the origin, the second at (1, 0) and the third at
//! (1/2, √3/2); a simplex point maps to the matching barycentric
//! combination.  Canvas coordinates are scaled by 400 and emitted with
//! four decimals, so identical inputs produce byte-identical files.

use crate::grassmann::SimplexPoint;

const SCALE: f64 = 400.0;
const MARGIN: f64 = 40.0;
const POINT_RADIUS: f64 = 6.0;
const TRIANGLE_COLOR: &str = "#333333";
const HULL_COLOR: &str = "#1f77b4";
const POINT_COLOR: &str = "#d62728";

fn chart(p: &[f64]) -> (f64, f64) {
    // barycentric combination of (0,0), (1,0), (1/2, sqrt(3)/2)
    let x = p[1] + 0.5 * p[2];
    let y = (3.0f64.sqrt() / 2.0) * p[2];
    (x, y)
}

fn canvas(xy: (f64, f64)) -> (f64, f64) {
    let height = 3.0f64.sqrt() / 2.0;
    (MARGIN + SCALE * xy.0, MARGIN + SCALE * (height - xy.1))
}

fn fmt(v: f64) -> String {
    format!("{v:.4}")
}

/// Upper-then-lower convex hull (monotone chain) of 2D points; returns
/// hull vertices in counterclockwise order.
fn convex_hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Renders a Δ² configuration: the simplex triangle, the convex hull
/// outline of the points, and one dot per point.
pub fn render_delta2(points: &[SimplexPoint]) -> String {
    let height = 3.0f64.sqrt() / 2.0;
    let width = SCALE + 2.0 * MARGIN;
    let total_height = SCALE * height + 2.0 * MARGIN;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        fmt(width), fmt(total_height), fmt(width), fmt(total_height)
    ));

    let tri: Vec<(f64, f64)> = [
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0],
    ]
    .iter()
    .map(|v| canvas(chart(v)))
    .collect();
    out.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
        polygon_points(&tri),
        TRIANGLE_COLOR
    ));

    let mapped: Vec<(f64, f64)> = points
        .iter()
        .map(|p| canvas(chart(p.coords())))
        .collect();

    if mapped.len() >= 2 {
        let hull = convex_hull(mapped.clone());
        if hull.len() >= 3 {
            out.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                polygon_points(&hull),
                HULL_COLOR
            ));
        } else if hull.len() == 2 {
            out.push_str(&format!(
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                fmt(hull[0].0), fmt(hull[0].1), fmt(hull[1].0), fmt(hull[1].1), HULL_COLOR
            ));
        }
    }

    for (x, y) in &mapped {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n",
            fmt(*x), fmt(*y), fmt(POINT_RADIUS), POINT_COLOR
        ));
    }

    out.push_str("</svg>\n");
    out
}

fn polygon_points(pts: &[(f64, f64)]) -> String {
    pts.iter()
        .map(|(x, y)| format!("{},{}", fmt(*x), fmt(*y)))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::SimplexPoint;

    fn sp(c: &[f64]) -> SimplexPoint {
        SimplexPoint::new(c.to_vec()).unwrap()
    }

    #[test]
    fn deterministic_output() {
        let points = vec![sp(&[1.0, 0.0, 0.0]), sp(&[0.0, 1.0, 0.0]), sp(&[0.0, 0.0, 1.0])];
        let a = render_delta2(&points);
        let b = render_delta2(&points);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert_eq!(a.matches("<circle").count(), 3);
        // corners hull = the triangle itself
        assert_eq!(a.matches("<polygon").count(), 2);
    }

    #[test]
    fn two_points_draw_a_segment() {
        let points = vec![sp(&[0.5, 0.0, 0.5]), sp(&[0.0, 0.5, 0.5])];
        let svg = render_delta2(&points);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.contains("<line"));
    }
}
