//! Independent geometric checkers. Nothing here calls into the
//! constructions; every fact is recomputed from the tree and the points.

use crate::drawing::{BBox, GridDrawing, Point};
use crate::geometry::{
    ccw_order, direction, find_conflict, find_duplicate_point, locate_scaled, orient, signed_area2,
    strictly_inside_ccw_sweep, Location, Seg,
};
use crate::outerplanar::OuterplanarGraph;
use crate::tree::Tree;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Node(usize),
    Point([i64; 2]),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub property: String,
    pub witness: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub violations: Vec<Violation>,
}

const MAX_VIOLATIONS: usize = 16;

impl VerifyReport {
    pub fn ok() -> Self {
        VerifyReport { pass: true, violations: Vec::new() }
    }

    fn add(&mut self, property: &str, witness: Vec<Witness>) {
        self.pass = false;
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(Violation { property: property.to_string(), witness });
        }
    }

    fn full(&self) -> bool {
        self.violations.len() >= MAX_VIOLATIONS
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.pass &= other.pass;
        for v in other.violations {
            if self.violations.len() < MAX_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

fn nodes(ids: &[usize]) -> Vec<Witness> {
    ids.iter().map(|&i| Witness::Node(i)).collect()
}

fn size_mismatch(t_len: usize, d: &GridDrawing) -> Option<VerifyReport> {
    if d.points.len() == t_len {
        return None;
    }
    let mut r = VerifyReport::ok();
    r.add("node_set", vec![Witness::Node(t_len), Witness::Node(d.points.len())]);
    Some(r)
}

fn tree_edges(t: &Tree) -> Vec<Seg> {
    (0..t.len()).filter_map(|v| t.parent(v).map(|p| Seg { a: p, b: v })).collect()
}

/// Checks that the drawing is exactly what some assignment of left/right
/// rules produces.
pub fn is_lr_drawing(t: &Tree, d: &GridDrawing) -> VerifyReport {
    if let Some(r) = size_mismatch(t.len(), d) {
        return r;
    }
    let mut r = VerifyReport::ok();
    let p = &d.points;
    let mut rows: Vec<i64> = p.iter().map(|q| q.y).collect();
    rows.sort_unstable();
    if rows.windows(2).any(|w| w[0] == w[1]) {
        let y = rows.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
        let ids: Vec<usize> = (0..p.len()).filter(|&i| p[i].y == y).collect();
        r.add("one_node_per_row", nodes(&ids));
    }
    let mut bb: Vec<Option<BBox>> = vec![None; t.len()];
    for v in t.postorder() {
        let mut b = BBox::of([p[v]]).unwrap();
        let nd = t.node(v);
        for c in [nd.left, nd.right].into_iter().flatten() {
            let cb = bb[c].unwrap();
            b.include(Point::new(cb.min_x, cb.min_y));
            b.include(Point::new(cb.max_x, cb.max_y));
            if p[c].y >= p[v].y {
                r.add("upward", nodes(&[v, c]));
            }
        }
        bb[v] = Some(b);
        if nd.left.is_none() && nd.right.is_none() {
            continue;
        }
        let (x, y) = (p[v].x, p[v].y);
        let lb = nd.left.map(|c| bb[c].unwrap());
        let rb = nd.right.map(|c| bb[c].unwrap());
        let left_rule = {
            let mut ok = true;
            let mut next_top = y - 1;
            if let (Some(l), Some(lb)) = (nd.left, lb) {
                ok &= lb.max_y == y - 1 && lb.max_x == x - 1 && p[l].y == lb.max_y;
                next_top = lb.min_y - 1;
            }
            if let (Some(c), Some(rb)) = (nd.right, rb) {
                ok &= rb.max_y == next_top && p[c].x == x && p[c].y == rb.max_y;
            }
            ok
        };
        let right_rule = {
            let mut ok = true;
            let mut next_top = y - 1;
            if let (Some(c), Some(rb)) = (nd.right, rb) {
                ok &= rb.max_y == y - 1 && rb.min_x == x + 1 && p[c].y == rb.max_y;
                next_top = rb.min_y - 1;
            }
            if let (Some(l), Some(lb)) = (nd.left, lb) {
                ok &= lb.max_y == next_top && p[l].x == x && p[l].y == lb.max_y;
            }
            ok
        };
        if !left_rule && !right_rule {
            r.add("lr_rule", nodes(&[v]));
        }
        if r.full() {
            break;
        }
    }
    r
}

/// Planar straight-line check for an arbitrary segment set over `points`.
pub fn is_planar_straightline(points: &[Point], segments: &[(usize, usize)]) -> VerifyReport {
    let mut r = VerifyReport::ok();
    if let Some((a, b)) = find_duplicate_point(points) {
        r.add("distinct_points", nodes(&[a, b]));
        return r;
    }
    let segs: Vec<Seg> = segments.iter().map(|&(a, b)| Seg { a, b }).collect();
    if let Some((i, j)) = find_conflict(points, &segs) {
        r.add("planar", nodes(&[segs[i].a, segs[i].b, segs[j].a, segs[j].b]));
    }
    r
}

/// Where a graph edge of the star-shaped augmentation comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeOrigin {
    Tree,
    /// Chord of the polygon owned by this node.
    Polygon(usize),
    Apex,
}

#[derive(Debug, Clone, Copy)]
enum TriOrigin {
    Polygon,
    Apex,
}

/// The tree plus the edges and triangles implied by the left-right and
/// right-left paths of every node and by the apexes. Vertex ids `n` and
/// `n + 1` are the two apexes.
struct Augmented {
    pts: Vec<Point>,
    segs: Vec<Seg>,
    origin: Vec<EdgeOrigin>,
    /// Counter-clockwise triangles expected in an order-preserving drawing.
    tris: Vec<([usize; 3], TriOrigin)>,
}

/// Maximal path from `s` going `first` once, then `then` repeatedly.
fn turn_path(t: &Tree, s: usize, first_left: bool, then_left: bool) -> Vec<usize> {
    let step = |v: usize, left: bool| if left { t.left(v) } else { t.right(v) };
    let mut out = vec![s];
    let Some(mut cur) = step(s, first_left) else {
        return out;
    };
    out.push(cur);
    while let Some(c) = step(cur, then_left) {
        out.push(c);
        cur = c;
    }
    out
}

fn augment(t: &Tree, d: &GridDrawing, apexes: [Point; 2]) -> Augmented {
    let n = t.len();
    let (pu, pv) = (n, n + 1);
    let mut pts = d.points.clone();
    pts.push(apexes[0]);
    pts.push(apexes[1]);
    let mut segs = Vec::new();
    let mut origin = Vec::new();
    let mut tris = Vec::new();
    for s in tree_edges(t) {
        segs.push(s);
        origin.push(EdgeOrigin::Tree);
    }
    for s in 0..n {
        let lr = turn_path(t, s, true, false);
        for (i, &x) in lr.iter().enumerate().skip(2) {
            segs.push(Seg { a: s, b: x });
            origin.push(EdgeOrigin::Polygon(s));
            tris.push(([s, lr[i - 1], x], TriOrigin::Polygon));
        }
        let rl = turn_path(t, s, false, true);
        for (i, &x) in rl.iter().enumerate().skip(2) {
            segs.push(Seg { a: s, b: x });
            origin.push(EdgeOrigin::Polygon(s));
            tris.push(([s, x, rl[i - 1]], TriOrigin::Polygon));
        }
    }
    let root = t.root();
    let lm = turn_path(t, root, true, true);
    let rm = turn_path(t, root, false, false);
    for (i, &x) in lm.iter().enumerate() {
        segs.push(Seg { a: pu, b: x });
        origin.push(EdgeOrigin::Apex);
        if i > 0 {
            tris.push(([pu, x, lm[i - 1]], TriOrigin::Apex));
        }
    }
    for (i, &x) in rm.iter().enumerate() {
        segs.push(Seg { a: pv, b: x });
        origin.push(EdgeOrigin::Apex);
        if i > 0 {
            tris.push(([pv, rm[i - 1], x], TriOrigin::Apex));
        }
    }
    segs.push(Seg { a: pu, b: pv });
    origin.push(EdgeOrigin::Apex);
    tris.push(([pv, pu, root], TriOrigin::Apex));
    Augmented { pts, segs, origin, tris }
}

fn order_preserving(t: &Tree, p: &[Point], r: &mut VerifyReport) {
    for v in 0..t.len() {
        let nd = t.node(v);
        let (Some(par), Some(l), Some(c)) = (t.parent(v), nd.left, nd.right) else {
            continue;
        };
        if !ccw_order(p[v], p[par], p[l], p[c]) {
            r.add("property1_order", nodes(&[v, par, l, c]));
            if r.full() {
                return;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StarOptions {
    /// Also run the literal per-polygon and pairwise polygon checks.
    pub exhaustive: bool,
}

/// Checks the four star-shaped properties using the drawing's own apexes.
pub fn is_star_shaped(t: &Tree, d: &GridDrawing) -> VerifyReport {
    is_star_shaped_with(t, d, StarOptions::default())
}

pub fn is_star_shaped_with(t: &Tree, d: &GridDrawing, opts: StarOptions) -> VerifyReport {
    if let Some(r) = size_mismatch(t.len(), d) {
        return r;
    }
    let Some(apexes) = d.apexes else {
        let mut r = VerifyReport::ok();
        r.add("apexes_missing", Vec::new());
        return r;
    };
    let mut r = check_star(t, d, apexes);
    if opts.exhaustive && r.pass {
        r.merge(exhaustive_polygons(t, &d.points));
    }
    r
}

/// Fast check. With all augmented edges pairwise non-conflicting and every
/// implied triangle counter-clockwise, the augmented graph (a triangulated
/// disk) is embedded, which yields properties 2 to 4.
fn check_star(t: &Tree, d: &GridDrawing, apexes: [Point; 2]) -> VerifyReport {
    let mut r = VerifyReport::ok();
    let aug = augment(t, d, apexes);
    let n = t.len();
    if let Some((a, b)) = find_duplicate_point(&aug.pts) {
        let prop = if a >= n || b >= n { "property4" } else { "property1_planar" };
        r.add(prop, nodes(&[a, b]));
        return r;
    }
    order_preserving(t, &d.points, &mut r);
    if let Some((i, j)) = find_conflict(&aug.pts, &aug.segs) {
        let prop = match (aug.origin[i], aug.origin[j]) {
            (EdgeOrigin::Tree, EdgeOrigin::Tree) => "property1_planar",
            (EdgeOrigin::Apex, _) | (_, EdgeOrigin::Apex) => "property4",
            (EdgeOrigin::Polygon(a), EdgeOrigin::Polygon(b)) if a == b => "property2",
            (EdgeOrigin::Polygon(_), EdgeOrigin::Tree) | (EdgeOrigin::Tree, EdgeOrigin::Polygon(_)) => {
                "property2"
            }
            _ => "property3",
        };
        let (s, u) = (aug.segs[i], aug.segs[j]);
        r.add(prop, nodes(&[s.a, s.b, u.a, u.b]));
        return r;
    }
    for &(tri, org) in &aug.tris {
        let o = orient(aug.pts[tri[0]], aug.pts[tri[1]], aug.pts[tri[2]]);
        if o <= 0 {
            let prop = match org {
                TriOrigin::Polygon => "property3",
                TriOrigin::Apex => "property4",
            };
            r.add(prop, nodes(&tri));
            if r.full() {
                break;
            }
        }
    }
    r
}

/// Literal checks of properties 2 and 3, quadratic in the number of nodes.
fn exhaustive_polygons(t: &Tree, p: &[Point]) -> VerifyReport {
    let mut r = VerifyReport::ok();
    let mut polys: Vec<(usize, Vec<usize>)> = Vec::new();
    for s in 0..t.len() {
        for path in [turn_path(t, s, true, false), turn_path(t, s, false, true)] {
            if path.len() >= 3 {
                polys.push((s, path));
            }
        }
    }
    for (s, path) in &polys {
        let poly: Vec<Point> = path.iter().map(|&i| p[i]).collect();
        let m = path.len();
        // Simplicity: no two non-adjacent polygon edges meet.
        for i in 0..m {
            for j in i + 1..m {
                let adjacent = j == i + 1 || (i == 0 && j == m - 1);
                if adjacent {
                    continue;
                }
                let (a, b) = (poly[i], poly[(i + 1) % m]);
                let (c, e) = (poly[j], poly[(j + 1) % m]);
                if crate::geometry::segments_meet(a, b, c, e) {
                    r.add("property2", nodes(&[*s, path[i], path[j]]));
                }
            }
        }
        // Every chord from s to a non-adjacent vertex stays inside.
        let area = signed_area2(&poly);
        if area == 0 {
            r.add("property2", nodes(&[*s]));
            continue;
        }
        for k in 2..m - 1 {
            let (a, b) = (poly[0], poly[k]);
            for i in 0..m {
                let (c, e) = (poly[i], poly[(i + 1) % m]);
                let touches_endpoint = i == 0 || i == m - 1 || i == k || i + 1 == k;
                if !touches_endpoint && crate::geometry::segments_meet(a, b, c, e) {
                    r.add("property2", nodes(&[*s, path[k], path[i]]));
                }
            }
            let mid = ((a.x + b.x) as i128, (a.y + b.y) as i128);
            if locate_scaled(mid, 2, &poly) != Location::Inside {
                r.add("property2", nodes(&[*s, path[k]]));
            }
        }
        if r.full() {
            return r;
        }
    }
    // Pairwise interiors: a sample point inside each fan triangle of one
    // polygon must not lie strictly inside another.
    for (i, (s, path)) in polys.iter().enumerate() {
        let poly: Vec<Point> = path.iter().map(|&v| p[v]).collect();
        for (j, (u, other)) in polys.iter().enumerate() {
            if i == j {
                continue;
            }
            let oth: Vec<Point> = other.iter().map(|&v| p[v]).collect();
            for k in 1..poly.len() - 1 {
                let (a, b, c) = (poly[0], poly[k], poly[k + 1]);
                let cen = ((a.x + b.x + c.x) as i128, (a.y + b.y + c.y) as i128);
                if locate_scaled(cen, 3, &oth) == Location::Inside {
                    r.add("property3", nodes(&[*s, *u]));
                    break;
                }
            }
            if r.full() {
                return r;
            }
        }
    }
    r
}

/// Probe apex positions just outside the top corners of the bounding box.
fn bell_probes(b: BBox) -> Vec<[Point; 2]> {
    vec![
        [Point::new(b.min_x - 1, b.max_y + 1), Point::new(b.max_x + 1, b.max_y + 1)],
        [Point::new(b.min_x - 1, b.max_y + 3), Point::new(b.max_x + 2, b.max_y + 1)],
        [Point::new(b.min_x - 4, b.max_y + 1), Point::new(b.max_x + 1, b.max_y + 5)],
    ]
}

/// Root on the top side, and apexes anywhere above-left and above-right of
/// the bounding box work.
pub fn is_bell_like(t: &Tree, d: &GridDrawing) -> VerifyReport {
    if let Some(r) = size_mismatch(t.len(), d) {
        return r;
    }
    let mut r = VerifyReport::ok();
    let b = d.bbox();
    if d.points[t.root()].y != b.max_y {
        r.add("bell_root_on_top", nodes(&[t.root()]));
        return r;
    }
    for probe in bell_probes(b) {
        let mut rep = check_star(t, d, probe);
        if !rep.pass {
            for v in &mut rep.violations {
                v.property = format!("bell_probe_{}", v.property);
                v.witness.push(Witness::Point([probe[0].x, probe[0].y]));
                v.witness.push(Witness::Point([probe[1].x, probe[1].y]));
            }
            r.merge(rep);
            break;
        }
    }
    r
}

/// Leftmost and rightmost paths on the left side, the former going down
/// and the latter going up from the root.
pub fn is_flat(t: &Tree, d: &GridDrawing) -> VerifyReport {
    if let Some(r) = size_mismatch(t.len(), d) {
        return r;
    }
    let mut r = VerifyReport::ok();
    let p = &d.points;
    let min_x = d.bbox().min_x;
    let root = t.root();
    let lm = turn_path(t, root, true, true);
    let rm = turn_path(t, root, false, false);
    for &v in lm.iter().chain(rm.iter()) {
        if p[v].x != min_x {
            r.add("flat_left_side", nodes(&[v]));
        }
    }
    for w in lm.windows(2) {
        if p[w[0]].y <= p[w[1]].y {
            r.add("flat_leftmost_down", nodes(w));
        }
    }
    for w in rm.windows(2) {
        if p[w[0]].y >= p[w[1]].y {
            r.add("flat_rightmost_up", nodes(w));
        }
    }
    r
}

/// Planar straight-line drawing with every vertex on the outer face, with
/// the outer face bounded by the cycle 0, 1, ..., n-1.
pub fn is_outerplanar_drawing(g: &OuterplanarGraph, d: &GridDrawing) -> VerifyReport {
    let mut r = VerifyReport::ok();
    let n = g.n();
    if d.points.len() != n {
        r.add("vertex_set", vec![Witness::Node(n), Witness::Node(d.points.len())]);
        return r;
    }
    let p = &d.points;
    let edges = g.edges();
    let rep = is_planar_straightline(p, &edges);
    if !rep.pass {
        r.merge(rep);
        return r;
    }
    // With the drawing planar, the outer cycle is a simple polygon; all
    // vertices are on the outer face iff every chord runs inside it.
    let area = signed_area2(p);
    if area == 0 {
        r.add("outer_face", Vec::new());
        return r;
    }
    for &(a, b) in g.chords() {
        for (u, w) in [(a, b), (b, a)] {
            let prev = p[(u + n - 1) % n];
            let next = p[(u + 1) % n];
            let (from, to) = if area > 0 {
                (direction(p[u], next), direction(p[u], prev))
            } else {
                (direction(p[u], prev), direction(p[u], next))
            };
            if !strictly_inside_ccw_sweep(from, to, direction(p[u], p[w])) {
                r.add("outer_face", nodes(&[u, w]));
                break;
            }
        }
        if r.full() {
            break;
        }
    }
    r
}

/// Edges of the augmented graph, for rendering polygon closing edges.
pub fn closing_edges(t: &Tree) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 0..t.len() {
        for path in [turn_path(t, s, true, false), turn_path(t, s, false, true)] {
            if path.len() >= 3 {
                out.push((s, *path.last().unwrap()));
            }
        }
    }
    out
}
