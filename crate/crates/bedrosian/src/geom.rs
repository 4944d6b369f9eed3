//! Small computational-geometry kit: convex hulls of lattice point sets and
//! Hausdorff distances between them, in dimensions 1 to 3.

/// A point in up to three dimensions; trailing entries are zero.
pub type GeoPoint = [f64; 3];

/// Andrew monotone chain over the (x, y) coordinates. Returns hull vertices
/// in counterclockwise order without repetition; collinear points are
/// dropped. Degenerate inputs (all collinear) yield the extreme segment.
pub fn convex_hull_2d(points: &[GeoPoint]) -> Vec<GeoPoint> {
    let mut pts: Vec<GeoPoint> = points.to_vec();
    pts.sort_by(|a, b| {
        a[0].partial_cmp(&b[0])
            .unwrap()
            .then(a[1].partial_cmp(&b[1]).unwrap())
    });
    pts.dedup_by(|a, b| a[0] == b[0] && a[1] == b[1]);
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: &GeoPoint, a: &GeoPoint, b: &GeoPoint| -> f64 {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut lower: Vec<GeoPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0.0
        {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<GeoPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0.0
        {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Distance from a point to a segment in the plane.
fn point_segment_distance_2d(p: &GeoPoint, a: &GeoPoint, b: &GeoPoint) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0)
    };
    let q = [a[0] + t * ab[0], a[1] + t * ab[1]];
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
}

fn inside_convex_polygon(p: &GeoPoint, hull: &[GeoPoint]) -> bool {
    if hull.len() < 3 {
        return false;
    }
    for i in 0..hull.len() {
        let a = &hull[i];
        let b = &hull[(i + 1) % hull.len()];
        let cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
        if cross < 0.0 {
            return false;
        }
    }
    true
}

/// Distance from `p` to the convex hull of `hull_points`, dimension-aware.
///
/// Dimensions 1 and 2 are exact. Dimension 3 uses the Gilbert nearest-point
/// iteration over the point set, accurate to far below a bin step, which is
/// all the hull-discrepancy comparisons need.
pub fn point_to_hull_distance(p: &GeoPoint, hull_points: &[GeoPoint], dim: usize) -> f64 {
    assert!(!hull_points.is_empty(), "hull needs at least one point");
    match dim {
        1 => {
            let lo = hull_points.iter().map(|q| q[0]).fold(f64::INFINITY, f64::min);
            let hi = hull_points.iter().map(|q| q[0]).fold(f64::NEG_INFINITY, f64::max);
            (lo - p[0]).max(p[0] - hi).max(0.0)
        }
        2 => {
            let hull = convex_hull_2d(hull_points);
            if hull.is_empty() {
                return f64::INFINITY;
            }
            if inside_convex_polygon(p, &hull) {
                return 0.0;
            }
            if hull.len() == 1 {
                return dist(p, &hull[0]);
            }
            (0..hull.len())
                .map(|i| point_segment_distance_2d(p, &hull[i], &hull[(i + 1) % hull.len()]))
                .fold(f64::INFINITY, f64::min)
        }
        3 => gilbert_distance(p, hull_points),
        _ => unreachable!("dimension out of range"),
    }
}

fn dist(a: &GeoPoint, b: &GeoPoint) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Gilbert's algorithm for the nearest point of `conv(points)` to `p`:
/// maintain a feasible point `x`, repeatedly move toward the support point
/// of the residual direction. The duality gap bounds the error.
fn gilbert_distance(p: &GeoPoint, points: &[GeoPoint]) -> f64 {
    let mut x = points[0];
    for _ in 0..10_000 {
        let r = [p[0] - x[0], p[1] - x[1], p[2] - x[2]];
        let rn = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if rn < 1e-12 {
            return 0.0;
        }
        // support point maximizing <r, q>
        let mut best = points[0];
        let mut best_dot = f64::NEG_INFINITY;
        for q in points {
            let d = r[0] * q[0] + r[1] * q[1] + r[2] * q[2];
            if d > best_dot {
                best_dot = d;
                best = *q;
            }
        }
        let xd = r[0] * x[0] + r[1] * x[1] + r[2] * x[2];
        // duality gap: distance is within (best_dot - xd)/rn of rn
        if (best_dot - xd) / rn < 1e-10 {
            return rn;
        }
        // exact line search toward the support point
        let s = [best[0] - x[0], best[1] - x[1], best[2] - x[2]];
        let ss = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
        if ss == 0.0 {
            return rn;
        }
        let t = ((r[0] * s[0] + r[1] * s[1] + r[2] * s[2]) / ss).clamp(0.0, 1.0);
        x = [x[0] + t * s[0], x[1] + t * s[1], x[2] + t * s[2]];
    }
    dist(p, &x)
}

/// Symmetric Hausdorff distance between `conv(p_set)` and `conv(q_set)`.
/// The maximum over a convex set of the distance to another convex set is
/// attained at an extreme point, so scanning the generating points suffices.
pub fn hull_hausdorff_distance(p_set: &[GeoPoint], q_set: &[GeoPoint], dim: usize) -> f64 {
    let directed = |from: &[GeoPoint], to: &[GeoPoint]| -> f64 {
        from.iter()
            .map(|p| point_to_hull_distance(p, to, dim))
            .fold(0.0, f64::max)
    };
    directed(p_set, q_set).max(directed(q_set, p_set))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_hull() {
        let pts: Vec<GeoPoint> = vec![
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [1.0, 1.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.5, 0.5, 0.0],
            [0.5, 0.0, 0.0],
        ];
        let hull = convex_hull_2d(&pts);
        assert_eq!(hull.len(), 4);
    }

    #[test]
    fn point_distances_2d() {
        let square: Vec<GeoPoint> = vec![
            [0.0, 0.0, 0.0],
            [2.0, 0.0, 0.0],
            [2.0, 2.0, 0.0],
            [0.0, 2.0, 0.0],
        ];
        assert_eq!(point_to_hull_distance(&[1.0, 1.0, 0.0], &square, 2), 0.0);
        assert!((point_to_hull_distance(&[3.0, 1.0, 0.0], &square, 2) - 1.0).abs() < 1e-12);
        assert!(
            (point_to_hull_distance(&[3.0, 3.0, 0.0], &square, 2) - 2f64.sqrt()).abs() < 1e-12
        );
    }

    #[test]
    fn hausdorff_1d_intervals() {
        let a: Vec<GeoPoint> = vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]];
        let b: Vec<GeoPoint> = vec![[0.25, 0.0, 0.0], [1.5, 0.0, 0.0]];
        assert!((hull_hausdorff_distance(&a, &b, 1) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn gilbert_matches_exact_in_easy_cases() {
        let cube: Vec<GeoPoint> = (0..8)
            .map(|i| {
                [
                    (i & 1) as f64,
                    ((i >> 1) & 1) as f64,
                    ((i >> 2) & 1) as f64,
                ]
            })
            .collect();
        assert!(point_to_hull_distance(&[0.5, 0.5, 0.5], &cube, 3) < 1e-9);
        let d = point_to_hull_distance(&[2.0, 0.5, 0.5], &cube, 3);
        assert!((d - 1.0).abs() < 1e-9, "distance {d}");
    }
}
