//! Small 2-D computational-geometry helpers: convex hull, point-in-polygon,
//! and segment intersection. Shared by the four-point solver and the hull
//! membership checks.

/// Monotone-chain convex hull, counter-clockwise, strict (collinear boundary
/// points are dropped). Duplicates are tolerated.
pub fn convex_hull(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts: Vec<[f64; 2]> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return pts;
    }

    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(2 * n);
    // lower chain
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    // upper chain
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    // Fully collinear input collapses to its two extremes.
    if hull.len() < 3 {
        let mut ends = vec![pts[0], pts[n - 1]];
        ends.dedup();
        return ends;
    }
    hull
}

/// Cross product of (b - a) x (c - a).
pub fn cross(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// True when `p` is inside or on the boundary of the counter-clockwise
/// convex polygon `hull`, allowing an absolute slack `tol` on each edge's
/// signed area test.
pub fn point_in_convex_polygon(p: [f64; 2], hull: &[[f64; 2]], tol: f64) -> bool {
    match hull.len() {
        0 => false,
        1 => {
            let d = ((p[0] - hull[0][0]).powi(2) + (p[1] - hull[0][1]).powi(2)).sqrt();
            d <= tol
        }
        2 => point_near_segment(p, hull[0], hull[1], tol),
        _ => (0..hull.len()).all(|i| {
            let a = hull[i];
            let b = hull[(i + 1) % hull.len()];
            cross(a, b, p) >= -tol
        }),
    }
}

fn point_near_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2], tol: f64) -> bool {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 > 0.0 {
        ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = [a[0] + t * ab[0], a[1] + t * ab[1]];
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt() <= tol
}

/// Intersection of segments (p1, p2) and (p3, p4), if the supporting lines
/// are not parallel and the crossing lies within both segments.
pub fn segment_intersection(
    p1: [f64; 2],
    p2: [f64; 2],
    p3: [f64; 2],
    p4: [f64; 2],
) -> Option<[f64; 2]> {
    let d1 = [p2[0] - p1[0], p2[1] - p1[1]];
    let d2 = [p4[0] - p3[0], p4[1] - p3[1]];
    let denom = d1[0] * d2[1] - d1[1] * d2[0];
    let scale = d1[0].abs() + d1[1].abs() + d2[0].abs() + d2[1].abs();
    if denom.abs() <= 1e-14 * scale * scale {
        return None;
    }
    let r = [p3[0] - p1[0], p3[1] - p1[1]];
    let t = (r[0] * d2[1] - r[1] * d2[0]) / denom;
    let s = (r[0] * d1[1] - r[1] * d1[0]) / denom;
    let eps = 1e-12;
    if !(-eps..=1.0 + eps).contains(&t) || !(-eps..=1.0 + eps).contains(&s) {
        return None;
    }
    Some([p1[0] + t * d1[0], p1[1] + t * d1[1]])
}
