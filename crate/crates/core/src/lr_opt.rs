//! Representation sequences and width-optimal LR-drawings.
//!
//! An LR-drawing places the root on top and applies at every internal node
//! either the left rule (left subtree below-left, right subtree below it in
//! the root's column) or the right rule (mirror). The representation
//! sequence `S` maps a left-width budget `i` to the least right width any
//! LR-drawing can achieve with left width at most `i`.

use crate::drawing::{DrawingKind, GridDrawing, Point};
use crate::tree::Tree;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RepSeq(pub Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Left,
    Right,
}

impl RepSeq {
    pub fn leaf() -> RepSeq {
        RepSeq(vec![0])
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `S(i)`, extended by zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Smallest `(i, S(i))` minimizing `i + S(i) + 1`, as a (left, right)
    /// width pair.
    pub fn optimal_pair(&self) -> (u32, u32) {
        let mut best = (u32::MAX, 0, 0);
        for (i, &s) in self.0.iter().enumerate() {
            let w = i as u32 + s + 1;
            if w < best.0 {
                best = (w, i as u32, s);
            }
        }
        (best.1, best.2)
    }

    pub fn min_width(&self) -> u32 {
        let (a, b) = self.optimal_pair();
        a + b + 1
    }

    /// Checks the structural invariants of a representation sequence.
    pub fn is_valid(&self) -> bool {
        let v = &self.0;
        if v.is_empty() || *v.last().unwrap() != 0 {
            return false;
        }
        if v.len() >= 2 && v[v.len() - 2] == 0 {
            return false;
        }
        if v.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        let w = self.min_width() as usize;
        v.len() == w || v.len() == w + 1
    }
}

pub fn min_width(s: &RepSeq) -> u32 {
    s.min_width()
}

/// Sequence of a tree whose root has the given child sequences. Works on
/// sequences only, never on the tree.
pub fn splice(l: Option<&RepSeq>, r: Option<&RepSeq>) -> RepSeq {
    match (l, r) {
        (None, None) => RepSeq::leaf(),
        (Some(s), None) | (None, Some(s)) => s.clone(),
        (Some(l), Some(r)) => {
            let wl = l.min_width() as usize;
            let wr = r.min_width();
            let mut out = Vec::with_capacity(wl.max(r.len()) + 1);
            let mut i = 0;
            loop {
                let v = if i < wl { l.get(i).max(wr) } else { r.get(i) };
                out.push(v);
                if v == 0 {
                    break;
                }
                i += 1;
            }
            RepSeq(out)
        }
    }
}

/// Sequences of every subtree, indexed by node.
pub fn all_rep_sequences(t: &Tree) -> Vec<RepSeq> {
    let mut seqs: Vec<Option<RepSeq>> = vec![None; t.len()];
    for v in t.postorder() {
        let nd = t.node(v);
        let s = splice(
            nd.left.map(|c| seqs[c].as_ref().expect("postorder")),
            nd.right.map(|c| seqs[c].as_ref().expect("postorder")),
        );
        seqs[v] = Some(s);
    }
    seqs.into_iter().map(|s| s.expect("all nodes visited")).collect()
}

pub fn rep_sequence(t: &Tree) -> RepSeq {
    all_rep_sequences(t).swap_remove(t.root())
}

/// `true` iff `t` has an LR-drawing with left width <= a and right width <= b.
pub fn feasible(t: &Tree, a: u32, b: u32) -> bool {
    let s = rep_sequence(t);
    b >= s.get((a as usize).min(s.len() - 1))
}

/// Rule the optimal top-down construction applies at `v` under budget
/// `(alpha, _)`.
fn choose_rule(t: &Tree, seqs: &[RepSeq], v: usize, alpha: u32) -> Rule {
    let wl = t.left(v).map_or(0, |c| seqs[c].min_width());
    if wl <= alpha {
        Rule::Left
    } else {
        Rule::Right
    }
}

/// Nodes of the optimal LR-drawing of the subtree at `u` that share `u`'s
/// column, with the rule used at each. The path continues into the right
/// child after a left rule and into the left child after a right rule.
pub fn column_path(t: &Tree, seqs: &[RepSeq], u: usize) -> Vec<(usize, Rule)> {
    let (alpha, _) = seqs[u].optimal_pair();
    let mut out = Vec::new();
    let mut v = u;
    loop {
        let rule = choose_rule(t, seqs, v, alpha);
        out.push((v, rule));
        let next = match rule {
            Rule::Left => t.right(v),
            Rule::Right => t.left(v),
        };
        match next {
            Some(c) => v = c,
            None => break,
        }
    }
    out
}

pub fn optimal_lr_drawing(t: &Tree) -> GridDrawing {
    GridDrawing::new(DrawingKind::Lr, optimal_layout(t).0)
}

/// Rule used at every node by the optimal LR-drawing.
pub fn optimal_rules(t: &Tree) -> Vec<Rule> {
    optimal_layout(t).1
}

fn optimal_layout(t: &Tree) -> (Vec<Point>, Vec<Rule>) {
    let seqs = all_rep_sequences(t);
    let mut rules = vec![Rule::Left; t.len()];
    let size = t.subtree_sizes();
    let mut pts = vec![Point::new(0, 0); t.len()];
    let (a0, b0) = seqs[t.root()].optimal_pair();
    let mut stack = vec![(t.root(), a0, b0, 0i64, 0i64)];
    while let Some((v, a, b, x, y)) = stack.pop() {
        pts[v] = Point::new(x, y);
        let nd = t.node(v);
        rules[v] = choose_rule(t, &seqs, v, a);
        match rules[v] {
            Rule::Left => {
                let mut below = y - 1;
                if let Some(l) = nd.left {
                    let (al, bl) = seqs[l].optimal_pair();
                    stack.push((l, al, bl, x - bl as i64 - 1, y - 1));
                    below -= size[l] as i64;
                }
                if let Some(r) = nd.right {
                    stack.push((r, a, b, x, below));
                }
            }
            Rule::Right => {
                let mut below = y - 1;
                if let Some(r) = nd.right {
                    let (ar, br) = seqs[r].optimal_pair();
                    stack.push((r, ar, br, x + ar as i64 + 1, y - 1));
                    below -= size[r] as i64;
                }
                if let Some(l) = nd.left {
                    stack.push((l, a, b, x, below));
                }
            }
        }
    }
    (pts, rules)
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("brute force limited to {limit} internal nodes, tree has {got}")]
pub struct TooLarge {
    pub limit: usize,
    pub got: usize,
}

pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Calls `f` with the (left width, right width) of the drawing produced by
/// every rule assignment until it returns `true`.
fn for_each_assignment(t: &Tree, mut f: impl FnMut(u32, u32) -> bool) -> Result<(), TooLarge> {
    let post = t.postorder();
    let internal: Vec<usize> = post.iter().copied().filter(|&v| !t.is_leaf(v)).collect();
    if internal.len() > BRUTE_FORCE_LIMIT {
        return Err(TooLarge { limit: BRUTE_FORCE_LIMIT, got: internal.len() });
    }
    let mut bit = vec![usize::MAX; t.len()];
    for (i, &v) in internal.iter().enumerate() {
        bit[v] = i;
    }
    // (columns left of root, columns right of root) per subtree.
    let mut ext = vec![(0u32, 0u32); t.len()];
    for mask in 0u32..(1u32 << internal.len()) {
        for &v in &post {
            let nd = t.node(v);
            if nd.left.is_none() && nd.right.is_none() {
                ext[v] = (0, 0);
                continue;
            }
            let full = |c: usize| ext[c].0 + ext[c].1 + 1;
            ext[v] = if mask >> bit[v] & 1 == 0 {
                let wl = nd.left.map_or(0, full);
                let (ar, br) = nd.right.map_or((0, 0), |c| ext[c]);
                (wl.max(ar), br)
            } else {
                let wr = nd.right.map_or(0, full);
                let (al, bl) = nd.left.map_or((0, 0), |c| ext[c]);
                (al, wr.max(bl))
            };
        }
        let (a, b) = ext[t.root()];
        if f(a, b) {
            break;
        }
    }
    Ok(())
}

/// Minimum width over every assignment of rules to internal nodes.
pub fn brute_force_min_width(t: &Tree) -> Result<u32, TooLarge> {
    let mut best = u32::MAX;
    for_each_assignment(t, |a, b| {
        best = best.min(a + b + 1);
        false
    })?;
    Ok(best)
}

/// Whether some rule assignment gives left width <= a and right width <= b.
pub fn brute_force_feasible(t: &Tree, a: u32, b: u32) -> Result<bool, TooLarge> {
    let mut found = false;
    for_each_assignment(t, |ra, rb| {
        found = ra <= a && rb <= b;
        found
    })?;
    Ok(found)
}
