//! Ordered rooted binary trees.
//!
//! Nodes are dense indices in construction order. The text form is the
//! grammar `T := "." | "(" T T ")"` where `.` is an empty subtree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Node {
    pub left: Option<usize>,
    pub right: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Left,
    Right,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    nodes: Vec<Node>,
    parent: Vec<Option<usize>>,
    root: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodePath {
    pub nodes: Vec<usize>,
    pub dirs: Vec<Dir>,
}

impl NodePath {
    pub fn single(s: usize) -> Self {
        NodePath { nodes: vec![s], dirs: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn last(&self) -> usize {
        *self.nodes.last().expect("paths are never empty")
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("the empty tree is not a tree")]
    Empty,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Tree {
    /// Builds a tree from child records. Validates the single-root shape.
    pub fn from_nodes(nodes: Vec<Node>, root: usize) -> Result<Tree, TreeError> {
        let n = nodes.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if root >= n {
            return Err(TreeError::Invalid(format!("root {root} out of range")));
        }
        let mut parent = vec![None; n];
        for (i, nd) in nodes.iter().enumerate() {
            for c in [nd.left, nd.right].into_iter().flatten() {
                if c >= n || c == root || parent[c].is_some() {
                    return Err(TreeError::Invalid(format!("bad child reference {c} at {i}")));
                }
                parent[c] = Some(i);
            }
        }
        let t = Tree { nodes, parent, root };
        if t.preorder().len() != n {
            return Err(TreeError::Invalid("nodes unreachable from root".into()));
        }
        Ok(t)
    }

    pub fn single() -> Tree {
        Tree { nodes: vec![Node::default()], parent: vec![None], root: 0 }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, v: usize) -> Node {
        self.nodes[v]
    }

    pub fn left(&self, v: usize) -> Option<usize> {
        self.nodes[v].left
    }

    pub fn right(&self, v: usize) -> Option<usize> {
        self.nodes[v].right
    }

    pub fn child(&self, v: usize, d: Dir) -> Option<usize> {
        match d {
            Dir::Left => self.nodes[v].left,
            Dir::Right => self.nodes[v].right,
        }
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Which side of its parent `v` hangs on.
    pub fn side(&self, v: usize) -> Option<Dir> {
        let p = self.parent[v]?;
        if self.nodes[p].left == Some(v) {
            Some(Dir::Left)
        } else {
            Some(Dir::Right)
        }
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.nodes[v].left.is_none() && self.nodes[v].right.is_none()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn preorder(&self) -> Vec<usize> {
        self.preorder_from(self.root)
    }

    pub fn preorder_from(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            if out.len() > self.nodes.len() {
                break;
            }
            out.push(u);
            if let Some(r) = self.nodes[u].right {
                stack.push(r);
            }
            if let Some(l) = self.nodes[u].left {
                stack.push(l);
            }
        }
        out
    }

    /// Children before parents.
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = self.preorder();
        order.reverse();
        order
    }

    /// Subtree sizes for every node.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1usize; self.len()];
        for v in self.postorder() {
            let nd = self.nodes[v];
            for c in [nd.left, nd.right].into_iter().flatten() {
                size[v] += size[c];
            }
        }
        size
    }

    /// Copy of the subtree rooted at `v`, renumbered in preorder. The second
    /// value maps new ids back to ids in `self`.
    pub fn subtree(&self, v: usize) -> (Tree, Vec<usize>) {
        let order = self.preorder_from(v);
        let mut new_id = std::collections::HashMap::with_capacity(order.len());
        for (i, &u) in order.iter().enumerate() {
            new_id.insert(u, i);
        }
        let nodes = order
            .iter()
            .map(|&u| Node {
                left: self.nodes[u].left.map(|c| new_id[&c]),
                right: self.nodes[u].right.map(|c| new_id[&c]),
            })
            .collect();
        (Tree::from_nodes(nodes, 0).expect("subtree of a valid tree"), order)
    }

    /// Left/right swapped everywhere; node ids are preserved.
    pub fn mirror(&self) -> Tree {
        let nodes = self
            .nodes
            .iter()
            .map(|nd| Node { left: nd.right, right: nd.left })
            .collect();
        Tree { nodes, parent: self.parent.clone(), root: self.root }
    }

    /// Tree with a fresh root whose children are copies of `l` and `r`.
    pub fn join(l: Option<&Tree>, r: Option<&Tree>) -> Tree {
        let mut b = Builder::default();
        let root = b.push();
        let lc = l.map(|t| b.graft(t));
        let rc = r.map(|t| b.graft(t));
        b.set(root, lc, rc);
        b.finish(root)
    }

    pub fn height(&self) -> usize {
        let mut h = vec![1usize; self.len()];
        for v in self.postorder() {
            let nd = self.nodes[v];
            for c in [nd.left, nd.right].into_iter().flatten() {
                h[v] = h[v].max(h[c] + 1);
            }
        }
        h[self.root]
    }

    /// Maximal path from `s` following `first` once and then `then` repeatedly.
    fn turn_path(&self, s: usize, first: Dir, then: Dir) -> NodePath {
        let mut p = NodePath::single(s);
        let Some(c) = self.child(s, first) else {
            return p;
        };
        p.nodes.push(c);
        p.dirs.push(first);
        let mut cur = c;
        while let Some(c) = self.child(cur, then) {
            p.nodes.push(c);
            p.dirs.push(then);
            cur = c;
        }
        p
    }

    pub fn leftmost_path(&self) -> NodePath {
        self.turn_path(self.root, Dir::Left, Dir::Left)
    }

    pub fn rightmost_path(&self) -> NodePath {
        self.turn_path(self.root, Dir::Right, Dir::Right)
    }

    /// Leftmost path of the subtree rooted at `s`.
    pub fn leftmost_from(&self, s: usize) -> NodePath {
        self.turn_path(s, Dir::Left, Dir::Left)
    }

    pub fn rightmost_from(&self, s: usize) -> NodePath {
        self.turn_path(s, Dir::Right, Dir::Right)
    }

    pub fn left_right_path(&self, s: usize) -> NodePath {
        self.turn_path(s, Dir::Left, Dir::Right)
    }

    pub fn right_left_path(&self, s: usize) -> NodePath {
        self.turn_path(s, Dir::Right, Dir::Left)
    }
}

/// Incremental tree construction used by generators.
#[derive(Default)]
pub struct Builder {
    nodes: Vec<Node>,
}

impl Builder {
    pub fn push(&mut self) -> usize {
        self.nodes.push(Node::default());
        self.nodes.len() - 1
    }

    pub fn set(&mut self, v: usize, left: Option<usize>, right: Option<usize>) {
        self.nodes[v] = Node { left, right };
    }

    pub fn set_child(&mut self, v: usize, d: Dir, c: usize) {
        match d {
            Dir::Left => self.nodes[v].left = Some(c),
            Dir::Right => self.nodes[v].right = Some(c),
        }
    }

    /// Appends a copy of `t` and returns the id of its root.
    pub fn graft(&mut self, t: &Tree) -> usize {
        let order = t.preorder();
        let base = self.nodes.len();
        let mut pos = vec![0usize; t.len()];
        for (i, &u) in order.iter().enumerate() {
            pos[u] = base + i;
        }
        for &u in &order {
            let nd = t.node(u);
            self.nodes.push(Node { left: nd.left.map(|c| pos[c]), right: nd.right.map(|c| pos[c]) });
        }
        base
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn finish(self, root: usize) -> Tree {
        Tree::from_nodes(self.nodes, root).expect("builder produced a valid tree")
    }
}

pub fn parse_tree(text: &str) -> Result<Tree, TreeError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut nodes: Vec<Node> = Vec::new();
    // Frames: node id and how many children have been read so far.
    let mut stack: Vec<(usize, u8)> = Vec::new();
    let mut root: Option<usize> = None;
    let mut seen_empty_root = false;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    loop {
        skip_ws(&mut pos);
        if root.is_some() && stack.is_empty() || seen_empty_root {
            break;
        }
        if pos >= bytes.len() {
            return Err(TreeError::Syntax { offset: pos, msg: "unexpected end of input".into() });
        }
        let c = bytes[pos];
        match c {
            b'(' => {
                let id = nodes.len();
                nodes.push(Node::default());
                if let Some(top) = stack.last_mut() {
                    let (p, k) = *top;
                    if k == 0 {
                        nodes[p].left = Some(id);
                    } else {
                        nodes[p].right = Some(id);
                    }
                    top.1 += 1;
                } else {
                    root = Some(id);
                }
                stack.push((id, 0));
                pos += 1;
            }
            b'.' => {
                match stack.last_mut() {
                    Some(top) if top.1 < 2 => top.1 += 1,
                    Some(_) => {
                        return Err(TreeError::Syntax { offset: pos, msg: "expected ')'".into() })
                    }
                    None => seen_empty_root = true,
                }
                pos += 1;
            }
            b')' => {
                match stack.last() {
                    Some(&(_, 2)) => {
                        stack.pop();
                    }
                    _ => return Err(TreeError::Syntax { offset: pos, msg: "unexpected ')'".into() }),
                }
                pos += 1;
            }
            _ => {
                return Err(TreeError::Syntax {
                    offset: pos,
                    msg: format!("unexpected character {:?}", c as char),
                })
            }
        }
        if let Some(&(_, k)) = stack.last() {
            if k > 2 {
                return Err(TreeError::Syntax { offset: pos - 1, msg: "expected ')'".into() });
            }
        }
    }
    skip_ws(&mut pos);
    if pos < bytes.len() {
        return Err(TreeError::Syntax { offset: pos, msg: "trailing input".into() });
    }
    if seen_empty_root {
        return Err(TreeError::Empty);
    }
    Tree::from_nodes(nodes, root.expect("loop exits with a root"))
}

pub fn serialize_tree(t: &Tree) -> String {
    let mut out = String::with_capacity(3 * t.len());
    // Explicit stack of pending tokens: Some(node) opens a node, None emits '.'
    // and a marker closes.
    enum Tok {
        Open(usize),
        Empty,
        Close,
    }
    let mut stack = vec![Tok::Open(t.root())];
    while let Some(tok) = stack.pop() {
        match tok {
            Tok::Open(v) => {
                out.push('(');
                stack.push(Tok::Close);
                stack.push(t.right(v).map_or(Tok::Empty, Tok::Open));
                stack.push(t.left(v).map_or(Tok::Empty, Tok::Open));
            }
            Tok::Empty => out.push('.'),
            Tok::Close => out.push(')'),
        }
    }
    out
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_tree(self))
    }
}

impl std::str::FromStr for Tree {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

pub fn complete_tree(height: u32) -> Result<Tree, TreeError> {
    if height == 0 {
        return Err(TreeError::Invalid("height must be at least 1".into()));
    }
    if height > 26 {
        return Err(TreeError::Invalid("height too large".into()));
    }
    let n = (1usize << height) - 1;
    // Heap layout: children of i are 2i+1 and 2i+2.
    let nodes = (0..n)
        .map(|i| Node {
            left: (2 * i + 1 < n).then_some(2 * i + 1),
            right: (2 * i + 2 < n).then_some(2 * i + 2),
        })
        .collect();
    Tree::from_nodes(nodes, 0)
}

/// Root-to-leaf path; `dirs[i]` is the side of node i+1 under node i.
pub fn path_tree(dirs: &[Dir]) -> Tree {
    let mut b = Builder::default();
    let mut cur = b.push();
    let root = cur;
    for &d in dirs {
        let c = b.push();
        b.set_child(cur, d, c);
        cur = c;
    }
    b.finish(root)
}

/// Uniform random tree with `n` nodes, deterministic in `seed`.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree, TreeError> {
    if n == 0 {
        return Err(TreeError::Invalid("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 60 {
        Ok(random_tree_exact(n, &mut rng))
    } else {
        Ok(random_tree_remy(n, &mut rng))
    }
}

/// Split sampling with exact Catalan weights in u128 (C(60) < 2^128).
fn random_tree_exact(n: usize, rng: &mut ChaCha8Rng) -> Tree {
    let mut cat = vec![0u128; n + 1];
    cat[0] = 1;
    for m in 1..=n {
        cat[m] = (0..m).map(|i| cat[i] * cat[m - 1 - i]).sum();
    }
    let mut b = Builder::default();
    let root = b.push();
    let mut work = vec![(root, n)];
    while let Some((v, m)) = work.pop() {
        let mut r = rng.gen_range(0..cat[m]);
        let mut left = 0;
        loop {
            let w = cat[left] * cat[m - 1 - left];
            if r < w {
                break;
            }
            r -= w;
            left += 1;
        }
        let right = m - 1 - left;
        let lc = (left > 0).then(|| b.push());
        let rc = (right > 0).then(|| b.push());
        b.set(v, lc, rc);
        if let Some(c) = rc {
            work.push((c, right));
        }
        if let Some(c) = lc {
            work.push((c, left));
        }
    }
    renumber_preorder(b.finish(root))
}

/// Rémy's algorithm on extended binary trees: uniform over shapes with
/// `n` internal nodes, linear time.
fn random_tree_remy(n: usize, rng: &mut ChaCha8Rng) -> Tree {
    // Extended tree with 2n+1 slots; children stored as (left, right) of
    // internal slots. Slot ids: internal and leaves mixed.
    let total = 2 * n + 1;
    let mut left = vec![usize::MAX; total];
    let mut right = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    let mut root = 0usize;
    let mut used = 1usize;
    for _ in 0..n {
        let x = rng.gen_range(0..used);
        let internal = used;
        let leaf = used + 1;
        used += 2;
        let p = parent[x];
        if p == usize::MAX {
            root = internal;
        } else if left[p] == x {
            left[p] = internal;
        } else {
            right[p] = internal;
        }
        parent[internal] = p;
        if rng.gen_bool(0.5) {
            left[internal] = x;
            right[internal] = leaf;
        } else {
            left[internal] = leaf;
            right[internal] = x;
        }
        parent[x] = internal;
        parent[leaf] = internal;
    }
    // Internal slots are exactly those with children.
    let mut id = vec![usize::MAX; total];
    let mut b = Builder::default();
    let mut stack = vec![root];
    let mut order = Vec::with_capacity(n);
    while let Some(u) = stack.pop() {
        if left[u] == usize::MAX {
            continue;
        }
        id[u] = b.push();
        order.push(u);
        stack.push(right[u]);
        stack.push(left[u]);
    }
    for &u in &order {
        let l = (left[left[u]] != usize::MAX).then(|| id[left[u]]);
        let r = (left[right[u]] != usize::MAX).then(|| id[right[u]]);
        b.set(id[u], l, r);
    }
    b.finish(id[root])
}

fn renumber_preorder(t: Tree) -> Tree {
    let root = t.root();
    t.subtree(root).0
}

/// All trees with exactly `n` nodes, in a fixed order.
pub fn all_trees(n: usize) -> Vec<Tree> {
    let mut by_size: Vec<Vec<Option<Tree>>> = vec![vec![None]];
    for m in 1..=n {
        let mut out = Vec::new();
        for l in 0..m {
            let r = m - 1 - l;
            for lt in &by_size[l] {
                for rt in &by_size[r] {
                    out.push(Some(Tree::join(lt.as_ref(), rt.as_ref())));
                }
            }
        }
        by_size.push(out);
    }
    by_size.pop().unwrap_or_default().into_iter().flatten().collect()
}
