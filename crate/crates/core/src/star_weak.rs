//! Star-shaped drawings whose width is linear in the width of an LR-drawing.
//!
//! Both constructions walk the column path of a fixed LR-drawing and hang
//! the side subtrees off it, recursively drawn bell-like or flat. All work
//! happens on node ids of one tree; a `flip` flag reads the tree and the
//! rules mirrored, and a drawing made under `flip` becomes a drawing of the
//! real subtree once reflected.

use crate::drawing::{BBox, DrawingKind, GridDrawing, Point};
use crate::lr_opt::{optimal_rules, Rule};
use crate::tree::{Dir, Tree};

/// Points for a subset of the nodes.
#[derive(Debug, Clone, Default)]
pub(crate) struct Piece {
    pub pts: Vec<(usize, Point)>,
}

impl Piece {
    pub fn single(v: usize, x: i64, y: i64) -> Piece {
        Piece { pts: vec![(v, Point::new(x, y))] }
    }

    pub fn bbox(&self) -> BBox {
        BBox::of(self.pts.iter().map(|p| p.1)).expect("pieces are non-empty")
    }

    pub fn shift(mut self, dx: i64, dy: i64) -> Piece {
        for (_, p) in &mut self.pts {
            p.x += dx;
            p.y += dy;
        }
        self
    }

    pub fn rot180(mut self) -> Piece {
        for (_, p) in &mut self.pts {
            *p = Point::new(-p.x, -p.y);
        }
        self
    }

    pub fn reflect_x(mut self) -> Piece {
        for (_, p) in &mut self.pts {
            p.x = -p.x;
        }
        self
    }

    pub fn reflect_y(mut self) -> Piece {
        for (_, p) in &mut self.pts {
            p.y = -p.y;
        }
        self
    }

    pub fn at(&self, v: usize) -> Point {
        self.pts.iter().find(|p| p.0 == v).expect("node in piece").1
    }

    pub fn append(&mut self, other: Piece) {
        self.pts.extend(other.pts);
    }
}

/// Blocks placed top to bottom, each one row below the previous.
pub(crate) fn stack_down(blocks: Vec<Piece>) -> Option<Piece> {
    stack(blocks, false)
}

/// Blocks placed bottom to top, each one row above the previous.
pub(crate) fn stack_up(blocks: Vec<Piece>) -> Option<Piece> {
    stack(blocks, true)
}

fn stack(blocks: Vec<Piece>, up: bool) -> Option<Piece> {
    let mut out: Option<(Piece, BBox)> = None;
    for b in blocks {
        let bb = b.bbox();
        out = Some(match out {
            None => (b, bb),
            Some((mut acc, mut ab)) => {
                let dy = if up { ab.max_y + 1 - bb.min_y } else { ab.min_y - 1 - bb.max_y };
                acc.append(b.shift(0, dy));
                ab.include(Point::new(bb.min_x, bb.min_y + dy));
                ab.include(Point::new(bb.max_x, bb.max_y + dy));
                (acc, ab)
            }
        });
    }
    out.map(|o| o.0)
}

/// Puts `p` to the right of column `x0 - 1` with node `v` on row `y`.
pub(crate) fn place_left_at(p: Piece, x0: i64, v: usize, y: i64) -> Piece {
    let dx = x0 - p.bbox().min_x;
    let dy = y - p.at(v).y;
    p.shift(dx, dy)
}

pub(crate) fn to_drawing(t: &Tree, p: Piece, kind: DrawingKind) -> GridDrawing {
    let b = p.bbox();
    let mut pts = vec![Point::new(0, 0); t.len()];
    let mut seen = vec![false; t.len()];
    for (v, q) in p.pts {
        pts[v] = Point::new(q.x - b.min_x, q.y - b.min_y);
        seen[v] = true;
    }
    debug_assert!(seen.iter().all(|&s| s), "piece covers every node");
    let mut d = GridDrawing::new(kind, pts);
    d.apexes = Some(default_apexes(&d));
    d
}

/// Apexes just outside the bounding box: the top corners for bell-like
/// drawings, the left corners for flat ones (the lower one sees the leftmost
/// path).
pub fn default_apexes(d: &GridDrawing) -> [Point; 2] {
    let b = d.bbox();
    match d.kind {
        DrawingKind::Flat => {
            let top = b.max_y.max(b.min_y + 1);
            [Point::new(b.min_x - 1, b.min_y), Point::new(b.min_x - 1, top)]
        }
        _ => [Point::new(b.min_x - 1, b.max_y + 1), Point::new(b.max_x + 1, b.max_y + 1)],
    }
}

/// A tree with a fixed LR-drawing given by its rules, and the left and right
/// widths of that drawing restricted to every subtree.
pub(crate) struct WeakCtx<'a> {
    t: &'a Tree,
    rules: Vec<Rule>,
    lw: Vec<u32>,
    rw: Vec<u32>,
}

impl<'a> WeakCtx<'a> {
    pub fn new(t: &'a Tree, rules: Vec<Rule>) -> WeakCtx<'a> {
        let mut lw = vec![0u32; t.len()];
        let mut rw = vec![0u32; t.len()];
        for v in t.postorder() {
            let width = |c: Option<usize>| c.map_or(0, |c| lw[c] + rw[c] + 1);
            let (l, r) = (t.left(v), t.right(v));
            match rules[v] {
                Rule::Left => {
                    lw[v] = width(l).max(r.map_or(0, |c| lw[c]));
                    rw[v] = r.map_or(0, |c| rw[c]);
                }
                Rule::Right => {
                    rw[v] = width(r).max(l.map_or(0, |c| rw[c]));
                    lw[v] = l.map_or(0, |c| lw[c]);
                }
            }
        }
        WeakCtx { t, rules, lw, rw }
    }

    pub fn optimal(t: &'a Tree) -> WeakCtx<'a> {
        WeakCtx::new(t, optimal_rules(t))
    }

    /// Width of the restricted LR-drawing of the subtree at `v`.
    pub fn omega(&self, v: usize) -> u32 {
        self.lw[v] + self.rw[v] + 1
    }

    fn child(&self, v: usize, d: Dir, flip: bool) -> Option<usize> {
        self.t.child(v, if flip { d.flip() } else { d })
    }

    fn rule(&self, v: usize, flip: bool) -> Rule {
        match (self.rules[v], flip) {
            (r, false) => r,
            (Rule::Left, true) => Rule::Right,
            (Rule::Right, true) => Rule::Left,
        }
    }

    /// Column path from `v`: after a left rule the right child, after a
    /// right rule the left child.
    fn column(&self, v: usize, flip: bool) -> Vec<usize> {
        let mut p = vec![v];
        let mut cur = v;
        loop {
            let next = match self.rule(cur, flip) {
                Rule::Left => self.child(cur, Dir::Right, flip),
                Rule::Right => self.child(cur, Dir::Left, flip),
            };
            match next {
                Some(c) => {
                    p.push(c);
                    cur = c;
                }
                None => return p,
            }
        }
    }

    fn turn(&self, v: usize, d: Dir, flip: bool) -> Vec<usize> {
        let mut p = vec![v];
        let mut cur = v;
        while let Some(c) = self.child(cur, d, flip) {
            p.push(c);
            cur = c;
        }
        p
    }

    /// Bell-like drawing of the subtree at `v`: root on the top side, and any
    /// apexes above and beyond the top corners work.
    pub fn bell(&self, v: usize, flip: bool) -> Piece {
        let path = self.column(v, flip);
        let m = path.len();
        let mut seen_left = false;
        let mut seen_right = false;
        let mut blocks = Vec::with_capacity(m);
        for (i, &u) in path.iter().enumerate() {
            let rule = self.rule(u, flip);
            let x = if i + 1 < m && rule == Rule::Right { 2 } else { 1 };
            let mut block = Piece::single(u, x, 0);
            match rule {
                Rule::Left => {
                    let first = !seen_left;
                    seen_left = true;
                    if let Some(c) = self.child(u, Dir::Left, flip) {
                        let side = if first {
                            let s = self.bell(c, flip);
                            let b = s.bbox();
                            s.shift(-b.max_x, -1 - b.max_y)
                        } else {
                            let s = self.flat(c, flip).rot180();
                            let (b, r) = (s.bbox(), s.at(c));
                            s.shift(-b.max_x, -r.y)
                        };
                        block.append(side);
                    }
                }
                Rule::Right => {
                    let first = !seen_right;
                    seen_right = true;
                    if let Some(c) = self.child(u, Dir::Right, flip) {
                        let side = if first {
                            let s = self.bell(c, flip);
                            let b = s.bbox();
                            s.shift(3 - b.min_x, -1 - b.max_y)
                        } else {
                            place_left_at(self.flat(c, flip), 3, c, 0)
                        };
                        block.append(side);
                    }
                }
            }
            blocks.push(block);
        }
        stack_down(blocks).expect("path is non-empty")
    }

    /// Flat drawing of the subtree at `v`: leftmost and rightmost paths on
    /// the left side, the leftmost going down and the rightmost going up.
    pub fn flat(&self, v: usize, flip: bool) -> Piece {
        if self.t.is_leaf(v) {
            return Piece::single(v, 1, 0);
        }
        if self.rule(v, flip) == Rule::Left {
            return self.flat(v, !flip).reflect_y();
        }
        let omega = self.omega(v) as i64;
        let side_block = |s: usize, d: Dir| -> Piece {
            let mut b = Piece::single(s, 1, 0);
            if let Some(c) = self.child(s, d, flip) {
                b.append(place_left_at(self.flat(c, flip), 2, c, 0));
            }
            b
        };

        // Right subtree of the root, rightmost path going up.
        let rm = self.turn(v, Dir::Right, flip);
        let upper = stack_up(rm[1..].iter().map(|&t| side_block(t, Dir::Left)).collect());

        let lm = self.turn(v, Dir::Left, flip);
        let path = self.column(v, flip);
        let mut j = 1;
        while j < lm.len() && j < path.len() && lm[j] == path[j] {
            j += 1;
        }
        // lm[..j] == path[..j]; j counts shared nodes.
        let has_next = j < path.len();
        let mut lower: Vec<Piece> = Vec::new();
        let root_inside = has_next && j == 2;
        if has_next {
            let (vj1, vj, vnext) = (path[j - 2], path[j - 1], path[j]);
            for &s in &lm[1..j.saturating_sub(2).max(1)] {
                lower.push(side_block(s, Dir::Right));
            }
            if j >= 3 {
                if let Some(c) = self.child(vj1, Dir::Right, flip) {
                    lower.push(place_left_at(self.flat(c, flip), 2, c, 0));
                }
            }
            if let Some(d) = self.child(vnext, Dir::Right, flip) {
                let s = self.bell(d, flip).rot180();
                let b = s.bbox();
                lower.push(s.shift(2 - b.min_x, 0));
            }
            lower.push(Piece::single(vj1, 1, 0));
            let mut row = Piece::single(vj, 1, 0);
            row.append(Piece::single(vnext, 4 * omega, 0));
            lower.push(row);
            if let Some(c) = self.child(vnext, Dir::Left, flip) {
                let s = self.bell(c, flip);
                let b = s.bbox();
                lower.push(s.shift(2 - b.min_x, 0));
            }
            for &s in &lm[j..] {
                lower.push(side_block(s, Dir::Right));
            }
        } else {
            for &s in &lm[1..] {
                lower.push(side_block(s, Dir::Right));
            }
        }
        let lower = stack_down(lower);

        let mut middle = match (root_inside, lower) {
            (true, Some(l)) => l,
            (false, Some(l)) => stack_down(vec![Piece::single(v, 1, 0), l]).expect("non-empty"),
            (_, None) => Piece::single(v, 1, 0),
        };
        if let Some(u) = upper {
            let dy = middle.bbox().max_y + 1 - u.bbox().min_y;
            middle.append(u.shift(0, dy));
        }
        middle
    }
}

/// Bell-like star-shaped drawing built on an optimal LR-drawing.
pub fn bell_like_drawing(t: &Tree) -> GridDrawing {
    let ctx = WeakCtx::optimal(t);
    to_drawing(t, ctx.bell(t.root(), false), DrawingKind::BellLike)
}

/// Flat star-shaped drawing built on an optimal LR-drawing.
pub fn flat_drawing(t: &Tree) -> GridDrawing {
    let ctx = WeakCtx::optimal(t);
    to_drawing(t, ctx.flat(t.root(), false), DrawingKind::Flat)
}

/// Width of the LR-drawing the weak constructions start from.
pub fn base_width(t: &Tree) -> u32 {
    WeakCtx::optimal(t).omega(t.root())
}
