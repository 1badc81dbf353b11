//! Exact integer predicates on grid points. No floating point anywhere.

use crate::drawing::Point;
use std::cmp::Ordering;

/// Twice the signed area of (a, b, c): positive when counter-clockwise.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (bx, by) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
    let (cx, cy) = ((c.x - a.x) as i128, (c.y - a.y) as i128);
    bx * cy - by * cx
}

pub fn cross(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.1 - u.1 * v.0
}

fn sub(a: Point, b: Point) -> (i128, i128) {
    ((a.x - b.x) as i128, (a.y - b.y) as i128)
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c).signum();
    let o2 = orient(a, b, d).signum();
    let o3 = orient(c, d, a).signum();
    let o4 = orient(c, d, b).signum();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// Half-plane index used for exact angular sorting: 0 for directions in
/// [0, pi), 1 for [pi, 2pi).
fn half(v: (i128, i128)) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

/// Compares the counter-clockwise angles of `u` and `v` measured from the
/// positive x axis.
pub fn angle_cmp(u: (i128, i128), v: (i128, i128)) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&cross(u, v)))
}

/// Counter-clockwise angle from `base` to `v`, as a sortable key relative to
/// `base`. Directions equal to `base` come first.
fn rel_angle_cmp(base: (i128, i128), u: (i128, i128), v: (i128, i128)) -> Ordering {
    // Rotate so base points along +x: compare angles of u and v relative to base.
    let key = |w: (i128, i128)| {
        let c = cross(base, w);
        let d = base.0 * w.0 + base.1 * w.1;
        // Direction of w in base's frame is (d, c).
        (d, c)
    };
    angle_cmp(key(u), key(v))
}

/// Going counter-clockwise around `o` starting at the direction of `a`,
/// `b` is met strictly before `c`. Directions must be pairwise distinct.
pub fn ccw_order(o: Point, a: Point, b: Point, c: Point) -> bool {
    rel_angle_cmp(sub(a, o), sub(b, o), sub(c, o)) == Ordering::Less
}

/// Direction `d` lies strictly inside the counter-clockwise sweep from `from`
/// to `to` (both exclusive).
pub fn strictly_inside_ccw_sweep(from: (i128, i128), to: (i128, i128), d: (i128, i128)) -> bool {
    let d_key = rel_angle_cmp(from, d, to);
    let same_as_from = cross(from, d) == 0 && from.0 * d.0 + from.1 * d.1 > 0;
    !same_as_from && d_key == Ordering::Less
}

pub fn direction(from: Point, to: Point) -> (i128, i128) {
    sub(to, from)
}

/// Twice the signed area of a closed polygon.
pub fn signed_area2(poly: &[Point]) -> i128 {
    let m = poly.len();
    (0..m)
        .map(|i| {
            let (p, q) = (poly[i], poly[(i + 1) % m]);
            p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Locates `p` with respect to a closed polygon. Coordinates of `p` are
/// given at `scale` times the polygon's (for exact midpoints and centroids).
pub fn locate_scaled(p: (i128, i128), scale: i128, poly: &[Point]) -> Location {
    let m = poly.len();
    let mut inside = false;
    for i in 0..m {
        let a = poly[i];
        let b = poly[(i + 1) % m];
        let (ax, ay) = (a.x as i128 * scale, a.y as i128 * scale);
        let (bx, by) = (b.x as i128 * scale, b.y as i128 * scale);
        let o = (bx - ax) * (p.1 - ay) - (by - ay) * (p.0 - ax);
        if o == 0 && p.0 >= ax.min(bx) && p.0 <= ax.max(bx) && p.1 >= ay.min(by) && p.1 <= ay.max(by) {
            return Location::Boundary;
        }
        // Half-open crossing rule on the edge's y range.
        if (ay > p.1) != (by > p.1) {
            // x of the edge at height p.1 compared to p.0, sign-adjusted.
            let lhs = (p.0 - ax) * (by - ay);
            let rhs = (bx - ax) * (p.1 - ay);
            let crosses = if by > ay { lhs < rhs } else { lhs > rhs };
            if crosses {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// A straight-line edge between two labelled vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seg {
    pub a: usize,
    pub b: usize,
}

/// Whether two edges of a graph drawing conflict: they meet anywhere other
/// than at a shared endpoint, or overlap along a shared endpoint.
pub fn edges_conflict(pts: &[Point], s: Seg, t: Seg) -> bool {
    let shared = [s.a == t.a, s.a == t.b, s.b == t.a, s.b == t.b];
    let n_shared = shared.iter().filter(|&&x| x).count();
    if n_shared >= 2 {
        return true;
    }
    let (a, b, c, d) = (pts[s.a], pts[s.b], pts[t.a], pts[t.b]);
    if n_shared == 1 {
        let (o, p, q) = if s.a == t.a {
            (a, b, d)
        } else if s.a == t.b {
            (a, b, c)
        } else if s.b == t.a {
            (b, a, d)
        } else {
            (b, a, c)
        };
        let u = sub(p, o);
        let v = sub(q, o);
        return cross(u, v) == 0 && u.0 * v.0 + u.1 * v.1 > 0;
    }
    segments_meet(a, b, c, d)
}

/// First conflicting pair of edges, scanning bottom to top and testing every
/// pair whose vertical extents overlap.
pub fn find_conflict(pts: &[Point], segs: &[Seg]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..segs.len()).collect();
    let lo = |i: usize| pts[segs[i].a].y.min(pts[segs[i].b].y);
    let hi = |i: usize| pts[segs[i].a].y.max(pts[segs[i].b].y);
    order.sort_by_key(|&i| (lo(i), i));
    let mut active: Vec<usize> = Vec::new();
    let mut pairs = Vec::new();
    for &i in &order {
        let y = lo(i);
        active.retain(|&j| hi(j) >= y);
        let (ax, bx) = (pts[segs[i].a].x, pts[segs[i].b].x);
        let (x0, x1) = (ax.min(bx), ax.max(bx));
        for &j in &active {
            let (cx, dx) = (pts[segs[j].a].x, pts[segs[j].b].x);
            if cx.max(dx) < x0 || cx.min(dx) > x1 {
                continue;
            }
            if edges_conflict(pts, segs[i], segs[j]) {
                pairs.push((j.min(i), j.max(i)));
                break;
            }
        }
        if !pairs.is_empty() {
            break;
        }
        active.push(i);
    }
    pairs.into_iter().next()
}

/// Indices of two vertices placed on the same point, if any.
pub fn find_duplicate_point(pts: &[Point]) -> Option<(usize, usize)> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by_key(|&i| (pts[i].x, pts[i].y, i));
    idx.windows(2).find(|w| pts[w[0]] == pts[w[1]]).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_signs() {
        assert!(orient(p(0, 0), p(1, 0), p(0, 1)) > 0);
        assert!(orient(p(0, 0), p(0, 1), p(1, 0)) < 0);
        assert_eq!(orient(p(0, 0), p(1, 1), p(3, 3)), 0);
    }

    #[test]
    fn crossing_diagonals_conflict() {
        let pts = [p(0, 0), p(2, 2), p(0, 2), p(2, 0)];
        assert!(edges_conflict(&pts, Seg { a: 0, b: 1 }, Seg { a: 2, b: 3 }));
        assert_eq!(find_conflict(&pts, &[Seg { a: 0, b: 1 }, Seg { a: 2, b: 3 }]), Some((0, 1)));
    }

    #[test]
    fn star_edges_do_not_conflict() {
        let pts = [p(0, 0), p(1, 0), p(0, 1), p(-1, 0), p(0, -1), p(3, 3)];
        let segs: Vec<Seg> = (1..6).map(|b| Seg { a: 0, b }).collect();
        assert_eq!(find_conflict(&pts, &segs), None);
    }

    #[test]
    fn collinear_overlap_through_shared_endpoint() {
        let pts = [p(0, 0), p(2, 0), p(1, 0)];
        assert!(edges_conflict(&pts, Seg { a: 0, b: 1 }, Seg { a: 0, b: 2 }));
        // Opposite directions only touch at the shared point.
        let pts = [p(0, 0), p(2, 0), p(-1, 0)];
        assert!(!edges_conflict(&pts, Seg { a: 0, b: 1 }, Seg { a: 0, b: 2 }));
    }

    #[test]
    fn point_on_interior_of_other_edge() {
        let pts = [p(0, 0), p(2, 0), p(1, 0), p(1, 5)];
        assert!(edges_conflict(&pts, Seg { a: 0, b: 1 }, Seg { a: 2, b: 3 }));
    }

    #[test]
    fn ccw_order_basic() {
        // From up, counter-clockwise: left, then down, then right.
        let o = p(0, 0);
        assert!(ccw_order(o, p(0, 1), p(-1, -1), p(1, -1)));
        assert!(!ccw_order(o, p(0, 1), p(1, -1), p(-1, -1)));
    }

    #[test]
    fn sweep_interior() {
        assert!(strictly_inside_ccw_sweep((1, 0), (0, 1), (1, 1)));
        assert!(!strictly_inside_ccw_sweep((1, 0), (0, 1), (1, -1)));
        assert!(!strictly_inside_ccw_sweep((1, 0), (0, 1), (2, 0)));
        assert!(strictly_inside_ccw_sweep((1, 0), (1, -1), (-1, 0)));
    }

    #[test]
    fn point_location() {
        let sq = [p(0, 0), p(2, 0), p(2, 2), p(0, 2)];
        assert_eq!(locate_scaled((1, 1), 1, &sq), Location::Inside);
        assert_eq!(locate_scaled((2, 1), 1, &sq), Location::Boundary);
        assert_eq!(locate_scaled((3, 1), 1, &sq), Location::Outside);
        assert_eq!(locate_scaled((1, 3), 2, &sq), Location::Inside);
        assert_eq!(signed_area2(&sq), 8);
    }
}
