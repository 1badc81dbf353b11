//! Star-shaped drawings of width O(2^sqrt(2 log n) sqrt(log n)).
//!
//! Every call splits the tree along a heavy spine (a root path whose last
//! node still carries at least n - A nodes) and picks a construction by the
//! number of direction changes ("switches") along the spine. Small subtrees
//! fall back to the weak constructions. Mirrored cases run in a flipped view
//! of the tree and are reflected back, as in [`crate::star_weak`].

use crate::drawing::{DrawingKind, GridDrawing};
use crate::star_weak::{place_left_at, stack_down, stack_up, to_drawing, Piece, WeakCtx};
use crate::tree::{Dir, Tree};
use serde::Serialize;
use std::fmt::Write as _;

/// Subtrees at or below this size use the weak constructions.
pub const WEAK_FLOOR: usize = 16;

/// `max(1, floor(n / 2^sqrt(2 log2 n)))`.
pub fn choose_a(n: usize) -> usize {
    if n <= 1 {
        return 1;
    }
    let nf = n as f64;
    let m = (2.0 * nf.log2()).sqrt().exp2();
    ((nf / m).floor() as usize).max(1)
}

/// Heavy path from the root of a subtree together with its switches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineDecomposition {
    /// Spine nodes v_1..v_k.
    pub spine: Vec<usize>,
    /// Direction of each spine edge (v_i, v_{i+1}).
    pub dirs: Vec<Dir>,
    /// Child of v_i off the spine, for i < k.
    pub off: Vec<Option<usize>>,
    /// Rightmost path of the subtree at v_k.
    pub right_tail: Vec<usize>,
    /// Left subtrees of the right tail.
    pub tail_subtrees: Vec<Option<usize>>,
    /// Indices i (0-based) such that (v_i, v_{i+1}, v_{i+2}) is a switch.
    pub switches: Vec<usize>,
}

/// Greedy heavy path: descend while some child keeps at least `n - a` nodes,
/// preferring the larger child and the right one on ties.
pub fn spine(t: &Tree, v: usize, a: usize) -> SpineDecomposition {
    let size = t.subtree_sizes();
    let spine = heavy_path(t, &size, v, a, false);
    decompose(t, spine, false)
}

fn heavy_path(t: &Tree, size: &[usize], v: usize, a: usize, flip: bool) -> Vec<usize> {
    let n = size[v];
    let need = n.saturating_sub(a);
    let ch = |u: usize, d: Dir| t.child(u, if flip { d.flip() } else { d });
    let mut path = vec![v];
    let mut cur = v;
    loop {
        let l = ch(cur, Dir::Left).filter(|&c| size[c] >= need);
        let r = ch(cur, Dir::Right).filter(|&c| size[c] >= need);
        let next = match (l, r) {
            (Some(l), Some(r)) => Some(if size[l] > size[r] { l } else { r }),
            (x, None) | (None, x) => x,
        };
        match next {
            Some(c) => {
                path.push(c);
                cur = c;
            }
            None => return path,
        }
    }
}

fn decompose(t: &Tree, spine: Vec<usize>, flip: bool) -> SpineDecomposition {
    let ch = |u: usize, d: Dir| t.child(u, if flip { d.flip() } else { d });
    let k = spine.len();
    let mut dirs = Vec::with_capacity(k.saturating_sub(1));
    let mut off = Vec::with_capacity(k.saturating_sub(1));
    for w in spine.windows(2) {
        let d = if ch(w[0], Dir::Left) == Some(w[1]) { Dir::Left } else { Dir::Right };
        dirs.push(d);
        off.push(ch(w[0], d.flip()));
    }
    let mut right_tail = vec![spine[k - 1]];
    while let Some(c) = ch(*right_tail.last().unwrap(), Dir::Right) {
        right_tail.push(c);
    }
    let tail_subtrees = right_tail.iter().map(|&u| ch(u, Dir::Left)).collect();
    let switches = count_switches(&dirs);
    SpineDecomposition { spine, dirs, off, right_tail, tail_subtrees, switches }
}

/// Indices where consecutive spine edges change direction.
pub fn count_switches(dirs: &[Dir]) -> Vec<usize> {
    dirs.windows(2).enumerate().filter(|(_, w)| w[0] != w[1]).map(|(i, _)| i).collect()
}

/// One recursive call: the construction used and its width against the
/// bound the construction guarantees in terms of the child drawings' measured widths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub n: usize,
    pub a: usize,
    pub s: usize,
    pub case: &'static str,
    pub width: i64,
    pub bound: i64,
    pub height: i64,
}

impl TraceRow {
    pub fn ok(&self) -> bool {
        self.width <= self.bound && self.height <= self.n as i64
    }
}

pub fn trace_to_csv(rows: &[TraceRow]) -> String {
    let mut s = String::from("n,A,s,case,width,bound,height\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{},{},{},{}", r.n, r.a, r.s, r.case, r.width, r.bound, r.height);
    }
    s
}

/// (subtree size, width) of each child drawing made by a recursive call.
type Kids = Vec<(usize, i64)>;

struct StrongCtx<'a> {
    t: &'a Tree,
    size: Vec<usize>,
    weak: WeakCtx<'a>,
    trace: Vec<TraceRow>,
    /// Layout variant taken by the last two-column bell construction.
    bell_variant: &'static str,
    levels: Option<Vec<LevelDrawing>>,
}

/// Drawing made by one recursive call, as a standalone tree and drawing.
/// Calls made in a mirrored view come with the mirrored subtree.
#[derive(Debug, Clone)]
pub struct LevelDrawing {
    pub tree: Tree,
    pub drawing: GridDrawing,
}

fn width(p: &Piece) -> i64 {
    p.bbox().width()
}

fn height(p: &Piece) -> i64 {
    p.bbox().height()
}

impl<'a> StrongCtx<'a> {
    fn new(t: &'a Tree) -> StrongCtx<'a> {
        StrongCtx { t, size: t.subtree_sizes(), weak: WeakCtx::optimal(t), trace: Vec::new(), bell_variant: "", levels: None }
    }

    fn child(&self, v: usize, d: Dir, flip: bool) -> Option<usize> {
        self.t.child(v, if flip { d.flip() } else { d })
    }

    fn chain(&self, v: usize, d: Dir, flip: bool) -> Vec<usize> {
        let mut p = vec![v];
        while let Some(c) = self.child(*p.last().unwrap(), d, flip) {
            p.push(c);
        }
        p
    }

    /// A for this call and the threshold handed to the children.
    fn parameter(&self, n: usize, thr: usize) -> usize {
        if n > thr {
            thr
        } else {
            choose_a(n)
        }
    }

    fn decomposition(&self, v: usize, a: usize, flip: bool) -> SpineDecomposition {
        decompose(self.t, heavy_path(self.t, &self.size, v, a, flip), flip)
    }

    fn rflat(&mut self, v: usize, flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let p = self.flat(v, flip, thr);
        kids.push((self.size[v], width(&p)));
        p
    }

    fn rbell(&mut self, v: usize, flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let p = self.bell(v, flip, thr);
        kids.push((self.size[v], width(&p)));
        p
    }

    fn flat(&mut self, v: usize, flip: bool, thr: usize) -> Piece {
        let n = self.size[v];
        if n <= WEAK_FLOOR {
            let p = self.weak.flat(v, flip);
            let bound = 4 * self.weak.omega(v) as i64;
            self.record(v, flip, DrawingKind::Flat, (n, 0, 0, "weak_flat"), &p, bound);
            return p;
        }
        let a = self.parameter(n, thr);
        let sp = self.decomposition(v, a, flip);
        let s = sp.switches.len();
        let mut kids = Kids::new();
        let (p, case, bound) = if s <= 7 {
            let p = self.zigzag_flat(&sp.spine, flip, a, &mut kids);
            let m = kids.iter().map(|k| k.1).max().unwrap_or(0);
            (p, "flat_zigzag", 8 + m)
        } else {
            let p = self.flat_many(&sp.spine, flip, a, &mut kids);
            (p, "flat_many", 5 + split_bound(&kids, a))
        };
        self.record(v, flip, DrawingKind::Flat, (n, a, s, case), &p, bound);
        p
    }

    fn bell(&mut self, v: usize, flip: bool, thr: usize) -> Piece {
        let n = self.size[v];
        if n <= WEAK_FLOOR {
            let p = self.weak.bell(v, flip);
            let bound = 4 * self.weak.omega(v) as i64 - 2;
            self.record(v, flip, DrawingKind::BellLike, (n, 0, 0, "weak_bell"), &p, bound);
            return p;
        }
        let a = self.parameter(n, thr);
        let sp = self.decomposition(v, a, flip);
        let s = sp.switches.len();
        let mut kids = Kids::new();
        let (p, case, bound) = if s <= 4 {
            let p = self.bell_few(&sp.spine, flip, a, &mut kids);
            let m = kids.iter().map(|k| k.1).max().unwrap_or(0);
            (p, "bell_few", 5 + m)
        } else {
            let p = self.bell_many(&sp.spine, flip, a, &mut kids);
            (p, self.bell_variant, 3 + split_bound(&kids, a))
        };
        self.record(v, flip, DrawingKind::BellLike, (n, a, s, case), &p, bound);
        p
    }

    fn record(
        &mut self,
        v: usize,
        flip: bool,
        kind: DrawingKind,
        (n, a, s, case): (usize, usize, usize, &'static str),
        p: &Piece,
        bound: i64,
    ) {
        self.trace.push(TraceRow { n, a, s, case, width: width(p), bound, height: height(p) });
        if let Some(levels) = self.levels.as_mut() {
            let (sub, old) = self.t.subtree(v);
            let sub = if flip { sub.mirror() } else { sub };
            let mut new_id = vec![usize::MAX; self.t.len()];
            for (i, &u) in old.iter().enumerate() {
                new_id[u] = i;
            }
            let piece = Piece { pts: p.pts.iter().map(|&(u, q)| (new_id[u], q)).collect() };
            let drawing = to_drawing(&sub, piece, kind);
            levels.push(LevelDrawing { tree: sub, drawing });
        }
    }

    fn spine_dirs(&self, spine: &[usize], flip: bool) -> Vec<Dir> {
        spine
            .windows(2)
            .map(|w| if self.child(w[0], Dir::Left, flip) == Some(w[1]) { Dir::Left } else { Dir::Right })
            .collect()
    }

    /// Node at x = 0 with the flat drawing of its `d` child to its right.
    fn comb_block(&mut self, u: usize, d: Dir, flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let mut b = Piece::single(u, 0, 0);
        if let Some(c) = self.child(u, d, flip) {
            b.append(place_left_at(self.rflat(c, flip, thr, kids), 1, c, 0));
        }
        b
    }

    /// Leftmost path going down and rightmost path going up on x = 0, all
    /// hanging subtrees flat at x >= 1.
    fn comb(&mut self, u: usize, flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let lm = self.chain(u, Dir::Left, flip);
        let mut lower = vec![Piece::single(u, 0, 0)];
        for &s in &lm[1..] {
            lower.push(self.comb_block(s, Dir::Right, flip, thr, kids));
        }
        let lower = stack_down(lower).expect("non-empty");
        self.put_right_tail(u, lower, flip, thr, kids)
    }

    /// Adds the rightmost path below `u` (excluding `u`) above `below`,
    /// going up, with left subtrees flat to the right.
    fn put_right_tail(&mut self, u: usize, mut below: Piece, flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let rm = self.chain(u, Dir::Right, flip);
        let mut up = Vec::new();
        for &t in &rm[1..] {
            up.push(self.comb_block(t, Dir::Left, flip, thr, kids));
        }
        if let Some(upper) = stack_up(up) {
            let dy = below.bbox().max_y + 1 - upper.bbox().min_y;
            below.append(upper.shift(0, dy));
        }
        below
    }

    /// Flat drawing along a spine with few switches: one extra column per
    /// switch, leftmost and rightmost paths on x = 0.
    fn zigzag_flat(&mut self, spine: &[usize], flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let dirs = self.spine_dirs(spine, flip);
        let sw = count_switches(&dirs);
        let u = spine[0];
        if sw.is_empty() {
            return self.comb(u, flip, thr, kids);
        }
        if dirs[0] == Dir::Right {
            return self.zigzag_flat(spine, !flip, thr, kids).reflect_y();
        }
        let p = sw[0];
        let turn = spine[p + 1];
        let mut lower = vec![Piece::single(u, 0, 0)];
        for &s in &spine[1..=p] {
            lower.push(self.comb_block(s, Dir::Right, flip, thr, kids));
        }
        let mut b = Piece::single(turn, 0, 0);
        let rest = self.zigzag_flat(&spine[p + 2..], flip, thr, kids);
        b.append(place_left_at(rest, 1, spine[p + 2], 0));
        lower.push(b);
        if let Some(l) = self.child(turn, Dir::Left, flip) {
            for s in self.chain(l, Dir::Left, flip) {
                lower.push(self.comb_block(s, Dir::Right, flip, thr, kids));
            }
        }
        let lower = stack_down(lower).expect("non-empty");
        self.put_right_tail(u, lower, flip, thr, kids)
    }

    /// Bell-like drawing along a spine with at most four switches.
    fn bell_few(&mut self, spine: &[usize], flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let dirs = self.spine_dirs(spine, flip);
        let sw = count_switches(&dirs);
        let u = spine[0];
        let wants_flip = if spine.len() == 1 {
            let size = |c: Option<usize>| c.map_or(0, |c| self.size[c]);
            size(self.child(u, Dir::Left, flip)) > size(self.child(u, Dir::Right, flip))
        } else if sw.is_empty() {
            dirs[0] == Dir::Left
        } else {
            dirs[0] == Dir::Right
        };
        if wants_flip {
            return self.bell_few(spine, !flip, thr, kids).reflect_x();
        }
        if sw.is_empty() {
            // Rightmost path on the right side, left subtrees to its left.
            let rm = self.chain(u, Dir::Right, flip);
            let mut blocks = Vec::with_capacity(rm.len());
            for (i, &r) in rm.iter().enumerate() {
                let mut b = Piece::single(r, 0, 0);
                if let Some(c) = self.child(r, Dir::Left, flip) {
                    if i == 0 {
                        let s = self.rbell(c, flip, thr, kids);
                        let bb = s.bbox();
                        b.append(s.shift(-1 - bb.max_x, -1 - bb.max_y));
                    } else {
                        let s = self.rflat(c, flip, thr, kids).rot180();
                        let (bb, root) = (s.bbox(), s.at(c));
                        b.append(s.shift(-1 - bb.max_x, -root.y));
                    }
                }
                blocks.push(b);
            }
            return stack_down(blocks).expect("non-empty");
        }
        // First spine edges go left: leftmost path on the left side.
        let p = sw[0];
        let turn = spine[p + 1];
        let mut blocks = Vec::new();
        let mut top = Piece::single(u, 0, 0);
        if let Some(c) = self.child(u, Dir::Right, flip) {
            let s = self.rbell(c, flip, thr, kids);
            let bb = s.bbox();
            top.append(s.shift(1 - bb.min_x, -1 - bb.max_y));
        }
        blocks.push(top);
        for &s in &spine[1..=p] {
            blocks.push(self.comb_block(s, Dir::Right, flip, thr, kids));
        }
        let mut b = Piece::single(turn, 0, 0);
        let rest = self.zigzag_flat(&spine[p + 2..], flip, thr, kids);
        b.append(place_left_at(rest, 1, spine[p + 2], 0));
        blocks.push(b);
        if let Some(l) = self.child(turn, Dir::Left, flip) {
            for s in self.chain(l, Dir::Left, flip) {
                blocks.push(self.comb_block(s, Dir::Right, flip, thr, kids));
            }
        }
        stack_down(blocks).expect("non-empty")
    }

    /// Bell-like drawing along a spine with at least five switches: the
    /// spine runs on two columns up to its last switch, then on one column
    /// next to the right side together with the right tail.
    fn bell_many(&mut self, spine: &[usize], flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let dirs = self.spine_dirs(spine, flip);
        if *dirs.last().expect("spine has switches") == Dir::Left {
            return self.bell_many(spine, !flip, thr, kids).reflect_x();
        }
        let sw = count_switches(&dirs);
        let s = sw.len();
        assert!(s >= 5, "two-column bell construction needs five switches, got {s}");
        let k = spine.len();
        let (p1, ps, ps1, ps2) = (sw[0], sw[s - 1], sw[s - 2], sw[s - 3]);
        let is_bell = |i: usize| i == 0 || i == p1 + 1 || i == ps || i == ps + 1;

        // Off-spine subtrees, drawn up front to measure their widths.
        let mut off: Vec<Option<(usize, Piece)>> = Vec::with_capacity(k - 1);
        for i in 0..k - 1 {
            let c = self.child(spine[i], dirs[i].flip(), flip);
            off.push(c.map(|c| {
                let p = if is_bell(i) {
                    self.rbell(c, flip, thr, kids)
                } else {
                    self.rflat(c, flip, thr, kids)
                };
                (c, p)
            }));
        }
        let omega = off.iter().flatten().map(|(_, p)| width(p)).max().unwrap_or(0);
        let col_r = -omega - 1;
        let col_l = -omega - 2;

        // Off-subtree attached to spine[i] for i < ps, placed relative to a
        // node at row 0.
        let attach = |i: usize, off: &mut Vec<Option<(usize, Piece)>>| -> Option<Piece> {
            let (c, p) = off[i].take()?;
            let right = dirs[i] == Dir::Left;
            Some(match (right, is_bell(i)) {
                (true, true) => {
                    let b = p.bbox();
                    p.shift(-omega - b.min_x, -1 - b.max_y)
                }
                (true, false) => place_left_at(p, -omega, c, 0),
                (false, true) => {
                    let b = p.bbox();
                    p.shift(-omega - 3 - b.max_x, -1 - b.max_y)
                }
                (false, false) => {
                    let p = p.rot180();
                    let (b, r) = (p.bbox(), p.at(c));
                    p.shift(-omega - 3 - b.max_x, -r.y)
                }
            })
        };
        let xcol = |i: usize| if dirs[i] == Dir::Right { col_l } else { col_r };
        let block = |i: usize, off: &mut Vec<Option<(usize, Piece)>>| -> Piece {
            let mut b = Piece::single(spine[i], xcol(i), 0);
            if let Some(p) = attach(i, off) {
                b.append(p);
            }
            b
        };
        // Detached right subtree with its left side on x = -omega.
        let detached = |i: usize, off: &mut Vec<Option<(usize, Piece)>>, rotate: bool| -> Option<Piece> {
            let (_, p) = off[i].take()?;
            let p = if rotate { p.rot180() } else { p };
            let b = p.bbox();
            Some(p.shift(-omega - b.min_x, 0))
        };

        let mut blocks = Vec::new();
        self.bell_variant = if ps1 + 1 < ps { "bell_many_gap" } else { "bell_many_adjacent" };
        if ps1 + 1 < ps {
            for i in 0..ps1 {
                blocks.push(block(i, &mut off));
            }
            for i in ps1 + 1..ps - 1 {
                blocks.push(block(i, &mut off));
            }
            blocks.extend(detached(ps - 1, &mut off, false));
            blocks.extend(detached(ps, &mut off, true));
            let mut row = Piece::single(spine[ps - 1], xcol(ps - 1), 0);
            row.append(Piece::single(spine[ps], 0, 0));
            blocks.push(row);
            blocks.push(block(ps1, &mut off));
        } else {
            for i in 0..ps2 {
                blocks.push(block(i, &mut off));
            }
            blocks.extend(detached(ps2, &mut off, false));
            blocks.extend(detached(ps, &mut off, true));
            blocks.push(Piece::single(spine[ps2], xcol(ps2), 0));
            for i in ps2 + 1..ps1 {
                blocks.push(block(i, &mut off));
            }
            let mut row = block(ps1, &mut off);
            row.append(Piece::single(spine[ps], 0, 0));
            blocks.push(row);
        }

        // Last straight run of the spine and the right tail on x = -1 with
        // left subtrees right-aligned on x = -2.
        let hang = |u: usize, sub: Option<(usize, Piece)>, as_bell: bool| -> Piece {
            let mut b = Piece::single(u, -1, 0);
            if let Some((c, p)) = sub {
                if as_bell {
                    let bb = p.bbox();
                    b.append(p.shift(-2 - bb.max_x, -1 - bb.max_y));
                } else {
                    let p = p.rot180();
                    let (bb, r) = (p.bbox(), p.at(c));
                    b.append(p.shift(-2 - bb.max_x, -r.y));
                }
            }
            b
        };
        for i in ps + 1..k - 1 {
            let sub = off[i].take();
            blocks.push(hang(spine[i], sub, i == ps + 1));
        }
        let tail = self.chain(spine[k - 1], Dir::Right, flip);
        for u in tail {
            let sub = self.child(u, Dir::Left, flip).map(|c| (c, self.rflat(c, flip, thr, kids)));
            blocks.push(hang(u, sub, false));
        }
        debug_assert!(off.iter().all(|o| o.is_none()), "every off-spine subtree placed");
        stack_down(blocks).expect("non-empty")
    }

    /// Flat drawing along a spine with at least eight switches: the weak flat
    /// frame, with the subtree entered by the spine drawn by the two-column
    /// bell construction.
    fn flat_many(&mut self, spine: &[usize], flip: bool, thr: usize, kids: &mut Kids) -> Piece {
        let dirs = self.spine_dirs(spine, flip);
        if dirs[0] == Dir::Right {
            return self.flat_many(spine, !flip, thr, kids).reflect_y();
        }
        let sw = count_switches(&dirs);
        assert!(sw.len() >= 8, "flat frame needs eight switches, got {}", sw.len());
        let p1 = sw[0];
        let u = spine[0];
        // Leftmost path shares spine[..=p1 + 1]; spine[p1 + 2] is a right child.
        let j = p1 + 2;
        let (vj1, vj, vnext) = (spine[j - 2], spine[j - 1], spine[j]);
        let x_root = spine[j + 1];
        let suffix = &spine[j + 1..];
        let suffix_switches = count_switches(&self.spine_dirs(suffix, flip)).len();
        assert!(suffix_switches >= 5, "spine suffix keeps {suffix_switches} switches");

        let lm = self.chain(u, Dir::Left, flip);
        debug_assert_eq!(&lm[..j], &spine[..j]);
        let mut lower: Vec<Piece> = Vec::new();
        for &s in &lm[1..j.saturating_sub(2).max(1)] {
            lower.push(self.comb_block(s, Dir::Right, flip, thr, kids));
        }
        if j >= 3 {
            if let Some(c) = self.child(vj1, Dir::Right, flip) {
                lower.push(place_left_at(self.rflat(c, flip, thr, kids), 1, c, 0));
            }
        }
        let draw_sub = |me: &mut Self, c: usize, kids: &mut Kids| -> Piece {
            if c == x_root {
                me.bell_many(suffix, flip, thr, kids)
            } else {
                me.rbell(c, flip, thr, kids)
            }
        };
        if let Some(d) = self.child(vnext, Dir::Right, flip) {
            let s = draw_sub(self, d, kids).rot180();
            let b = s.bbox();
            lower.push(s.shift(1 - b.min_x, 0));
        }
        lower.push(Piece::single(vj1, 0, 0));
        lower.push(Piece::single(vj, 0, 0));
        if let Some(c) = self.child(vnext, Dir::Left, flip) {
            let s = draw_sub(self, c, kids);
            let b = s.bbox();
            lower.push(s.shift(1 - b.min_x, 0));
        }
        for &s in &lm[j..] {
            lower.push(self.comb_block(s, Dir::Right, flip, thr, kids));
        }
        let lower = stack_down(lower).expect("non-empty");
        let mut all = if j == 2 {
            lower
        } else {
            stack_down(vec![Piece::single(u, 0, 0), lower]).expect("non-empty")
        };
        all = self.put_right_tail(u, all, flip, thr, kids);
        let b = all.bbox();
        let y = all.at(vj).y;
        all.append(Piece::single(vnext, b.max_x + 1, y));
        all
    }
}

/// `max(2 * (widest child with at most a nodes), widest larger child)`.
fn split_bound(kids: &Kids, a: usize) -> i64 {
    let small = kids.iter().filter(|k| k.0 <= a).map(|k| k.1).max().unwrap_or(0);
    let large = kids.iter().filter(|k| k.0 > a).map(|k| k.1).max().unwrap_or(0);
    (2 * small).max(large)
}

/// Drawing plus the per-call trace of the recursion.
#[derive(Debug, Clone)]
pub struct StrongResult {
    pub drawing: GridDrawing,
    pub trace: Vec<TraceRow>,
    /// Every intermediate drawing, when requested.
    pub levels: Vec<LevelDrawing>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongKind {
    Flat,
    Bell,
}

/// Runs either construction; with `keep_levels` every recursive call's
/// drawing is kept for inspection (costly on large trees).
pub fn strong_drawing(t: &Tree, kind: StrongKind, threshold: usize, keep_levels: bool) -> StrongResult {
    let mut ctx = StrongCtx::new(t);
    if keep_levels {
        ctx.levels = Some(Vec::new());
    }
    let thr = threshold.max(1);
    let (p, dk) = match kind {
        StrongKind::Flat => (ctx.flat(t.root(), false, thr), DrawingKind::Flat),
        StrongKind::Bell => (ctx.bell(t.root(), false, thr), DrawingKind::BellLike),
    };
    StrongResult { drawing: to_drawing(t, p, dk), trace: ctx.trace, levels: ctx.levels.unwrap_or_default() }
}

/// Flat star-shaped drawing. `threshold` is the A used while subtrees are
/// larger than it; smaller subtrees recompute A from their own size.
pub fn strong_flat(t: &Tree, threshold: usize) -> StrongResult {
    strong_drawing(t, StrongKind::Flat, threshold, false)
}

pub fn strong_bell(t: &Tree, threshold: usize) -> StrongResult {
    strong_drawing(t, StrongKind::Bell, threshold, false)
}

/// Both drawings with the threshold chosen from the tree size.
pub fn strong_flat_drawing(t: &Tree) -> GridDrawing {
    strong_flat(t, choose_a(t.len())).drawing
}

pub fn strong_bell_drawing(t: &Tree) -> GridDrawing {
    strong_bell(t, choose_a(t.len())).drawing
}

/// `2^sqrt(2 log2 n) * sqrt(log2 n)`, the growth rate of the strong width.
pub fn growth(n: usize) -> f64 {
    let l = (n.max(2) as f64).log2();
    (2.0 * l).sqrt().exp2() * l.sqrt()
}
