//! Outerplanar graphs on a clockwise outer cycle, their ordered dual trees,
//! and assembly of outerplanar drawings from star-shaped tree drawings.

use crate::drawing::{DrawingKind, GridDrawing};
use crate::tree::{Builder, Tree};
use std::collections::HashSet;

/// Vertices `0..n` in clockwise order along the outer cycle, plus chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarGraph {
    n: usize,
    /// Normalized `(a, b)` with `a < b`, sorted.
    chords: Vec<(usize, usize)>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("a graph needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("chord ({0}, {1}) is a loop or an outer-cycle edge")]
    NotAChord(usize, usize),
    #[error("duplicate chord ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("chords ({0}, {1}) and ({2}, {3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("graph is not maximal: {got} chords, expected {expected}")]
    NotMaximal { got: usize, expected: usize },
    #[error("root edge ({0}, {1}) is not an outer edge with the second vertex clockwise after the first")]
    BadRootEdge(usize, usize),
    #[error("dual mapping is inconsistent: {0}")]
    BadMapping(String),
}

impl OuterplanarGraph {
    pub fn new(n: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall(n));
        }
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for (a, b) in chords {
            if a >= n {
                return Err(GraphError::OutOfRange(a));
            }
            if b >= n {
                return Err(GraphError::OutOfRange(b));
            }
            let (a, b) = (a.min(b), a.max(b));
            if a == b || b - a == 1 || (a == 0 && b == n - 1) {
                return Err(GraphError::NotAChord(a, b));
            }
            if !seen.insert((a, b)) {
                return Err(GraphError::Duplicate(a, b));
            }
            out.push((a, b));
        }
        // Laminar check: sorted by (a asc, b desc), each chord must nest
        // inside or sit after the chords still open.
        out.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in &out {
            while stack.last().is_some_and(|top| top.1 <= a) {
                stack.pop();
            }
            if let Some(&(c, d)) = stack.last() {
                if d < b {
                    return Err(GraphError::Crossing(c, d, a, b));
                }
            }
            stack.push((a, b));
        }
        out.sort_unstable();
        Ok(OuterplanarGraph { n, chords: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn is_maximal(&self) -> bool {
        self.chords.len() == self.n - 3
    }

    /// Outer cycle edges followed by chords.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = (0..self.n).map(|i| (i, (i + 1) % self.n)).collect();
        e.extend_from_slice(&self.chords);
        e
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(a, b) in &self.chords {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    /// Forward (clockwise) distance from `a` to `b` along the outer cycle.
    fn fwd(&self, a: usize, b: usize) -> usize {
        (b + self.n - a) % self.n
    }

    /// Neighbors of each vertex sorted by forward distance.
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_by_key(|&x| (x + self.n - v) % self.n);
        }
        adj
    }

    /// Next vertex after the directed edge `u -> v` on the internal face
    /// traversed clockwise.
    fn face_next(&self, adj: &[Vec<usize>], u: usize, v: usize) -> usize {
        let du = self.fwd(v, u);
        let list = &adj[v];
        let pos = list.partition_point(|&x| self.fwd(v, x) < du);
        list[pos - 1]
    }

    /// Internal faces as clockwise vertex cycles.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut darts: Vec<(usize, usize)> = (0..self.n).map(|i| (i, (i + 1) % self.n)).collect();
        for &(a, b) in &self.chords {
            darts.push((a, b));
            darts.push((b, a));
        }
        let mut used: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = Vec::new();
        for &(u0, v0) in &darts {
            if used.contains(&(u0, v0)) {
                continue;
            }
            let mut face = vec![u0];
            let (mut u, mut v) = (u0, v0);
            loop {
                used.insert((u, v));
                if v == u0 {
                    break;
                }
                face.push(v);
                let w = self.face_next(&adj, u, v);
                u = v;
                v = w;
            }
            faces.push(face);
        }
        faces
    }
}

pub fn parse_graph(text: &str) -> Result<OuterplanarGraph, GraphError> {
    let mut n: Option<usize> = None;
    let mut chords = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let nums = nums.map_err(|e| GraphError::Parse { line: i + 1, msg: e.to_string() })?;
        match (n, nums.as_slice()) {
            (None, [k]) => n = Some(*k),
            (Some(_), [a, b]) => chords.push((*a, *b)),
            (None, _) => return Err(GraphError::Parse { line: i + 1, msg: "expected vertex count".into() }),
            (Some(_), _) => return Err(GraphError::Parse { line: i + 1, msg: "expected two vertices".into() }),
        }
    }
    let n = n.ok_or(GraphError::Parse { line: 0, msg: "empty input".into() })?;
    OuterplanarGraph::new(n, chords)
}

/// Adds chords fanning each internal face from its lowest-index vertex.
pub fn triangulate(g: &OuterplanarGraph) -> OuterplanarGraph {
    let mut chords = g.chords.clone();
    for face in g.faces() {
        if face.len() <= 3 {
            continue;
        }
        let (lo, _) = face.iter().enumerate().min_by_key(|&(_, &v)| v).expect("faces are non-empty");
        let k = face.len();
        let v0 = face[lo];
        for i in 2..k - 1 {
            chords.push((v0, face[(lo + i) % k]));
        }
    }
    OuterplanarGraph::new(g.n, chords).expect("fan chords stay inside their faces")
}

/// Ordered dual tree with the map from tree nodes to graph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualMapping {
    pub tree: Tree,
    pub gamma: Vec<usize>,
    pub root_edge: (usize, usize),
}

/// Dual tree rooted at the face on `root_edge = (u*, v*)`, where `v*`
/// follows `u*` clockwise.
pub fn dual_tree(g: &OuterplanarGraph, root_edge: (usize, usize)) -> Result<DualMapping, GraphError> {
    let n = g.n;
    let (us, vs) = root_edge;
    if us >= n || vs >= n || vs != (us + 1) % n {
        return Err(GraphError::BadRootEdge(us, vs));
    }
    if !g.is_maximal() {
        return Err(GraphError::NotMaximal { got: g.chords.len(), expected: n - 3 });
    }
    let adj = g.adjacency();
    let mut b = Builder::default();
    let mut gamma = Vec::with_capacity(n - 2);
    let root = b.push();
    // Node, entry edge (u, v) traversed clockwise inside the face.
    let mut stack = vec![(root, us, vs)];
    let mut pending: Vec<(usize, Option<usize>, Option<usize>)> = Vec::new();
    while let Some((node, u, v)) = stack.pop() {
        let w = g.face_next(&adj, u, v);
        if gamma.len() <= node {
            gamma.resize(node + 1, usize::MAX);
        }
        gamma[node] = w;
        let left = (w != (u + n - 1) % n).then(|| b.push());
        let right = (w != (v + 1) % n).then(|| b.push());
        pending.push((node, left, right));
        // Right pushed first so the left subtree gets the smaller ids.
        if let Some(r) = right {
            stack.push((r, w, v));
        }
        if let Some(l) = left {
            stack.push((l, u, w));
        }
    }
    for (node, l, r) in pending {
        b.set(node, l, r);
    }
    let tree = b.finish(root);
    let tree = renumber(tree, &mut gamma);
    let dm = DualMapping { tree, gamma, root_edge };
    check_mapping(g, &dm)?;
    Ok(dm)
}

/// Renumbers nodes in preorder and permutes `gamma` to match.
fn renumber(t: Tree, gamma: &mut Vec<usize>) -> Tree {
    let (nt, order) = t.subtree(t.root());
    *gamma = order.iter().map(|&old| gamma[old]).collect();
    nt
}

fn check_mapping(g: &OuterplanarGraph, dm: &DualMapping) -> Result<(), GraphError> {
    let n = g.n;
    let (us, vs) = dm.root_edge;
    if dm.tree.len() != n - 2 {
        return Err(GraphError::BadMapping(format!("tree has {} nodes, expected {}", dm.tree.len(), n - 2)));
    }
    let mut hit = vec![false; n];
    for &x in &dm.gamma {
        if x >= n || x == us || x == vs || std::mem::replace(&mut hit[x], true) {
            return Err(GraphError::BadMapping(format!("gamma is not a bijection at vertex {x}")));
        }
    }
    // Tree edges map into G - {u*, v*}. The converse does not hold: that
    // graph also has the chords from each node to its left-right and
    // right-left paths.
    let edge_set: HashSet<(usize, usize)> = g.edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    for v in 0..dm.tree.len() {
        if let Some(p) = dm.tree.parent(v) {
            let (a, b) = (dm.gamma[p], dm.gamma[v]);
            let e = (a.min(b), a.max(b));
            if !edge_set.contains(&e) {
                return Err(GraphError::BadMapping(format!("tree edge maps to non-edge {e:?}")));
            }
        }
    }
    Ok(())
}

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

/// Rebuilds the graph: tree edges, each node joined to its left-right and
/// right-left paths, then u* and v* joined to the leftmost and rightmost
/// paths and to each other.
pub fn primal_from_dual(dm: &DualMapping) -> Result<OuterplanarGraph, GraphError> {
    let t = &dm.tree;
    let n = t.len() + 2;
    let (us, vs) = dm.root_edge;
    let g = &dm.gamma;
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    let mut add = |a: usize, b: usize| {
        edges.insert((a.min(b), a.max(b)));
    };
    for s in 0..t.len() {
        for path in [turn_path(t, s, true, false), turn_path(t, s, false, true)] {
            for &x in &path[1..] {
                add(g[s], g[x]);
            }
        }
    }
    for &x in &turn_path(t, t.root(), true, true) {
        add(us, g[x]);
    }
    for &x in &turn_path(t, t.root(), false, false) {
        add(vs, g[x]);
    }
    add(us, vs);
    if edges.iter().any(|&(a, b)| b >= n || a == b) {
        return Err(GraphError::BadMapping("vertex labels out of range".into()));
    }
    for i in 0..n {
        let e = (i.min((i + 1) % n), i.max((i + 1) % n));
        if !edges.remove(&e) {
            return Err(GraphError::BadMapping(format!("outer edge {e:?} missing")));
        }
    }
    OuterplanarGraph::new(n, edges)
}

/// Mapping that turns an arbitrary tree into the dual of a maximal
/// outerplanar graph with root edge (0, 1): vertices 2.. follow a reverse
/// in-order walk, which is the clockwise order of the outer cycle.
pub fn mapping_for_tree(t: &Tree) -> DualMapping {
    let mut gamma = vec![0usize; t.len()];
    let mut next = 2usize;
    // Reverse in-order: right subtree, node, left subtree.
    let mut stack: Vec<usize> = Vec::new();
    let mut cur = Some(t.root());
    while cur.is_some() || !stack.is_empty() {
        while let Some(v) = cur {
            stack.push(v);
            cur = t.right(v);
        }
        let v = stack.pop().expect("non-empty");
        gamma[v] = next;
        next += 1;
        cur = t.left(v);
    }
    DualMapping { tree: t.clone(), gamma, root_edge: (0, 1) }
}

/// Random maximal outerplanar graph on `n >= 3` vertices.
pub fn random_maximal_graph(n: usize, seed: u64) -> OuterplanarGraph {
    assert!(n >= 3, "maximal outerplanar graphs need 3 vertices");
    let t = crate::tree::random_tree(n - 2, seed).expect("n - 2 >= 1");
    primal_from_dual(&mapping_for_tree(&t)).expect("mapping of a tree is consistent")
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AssembleError {
    #[error("star-shaped drawing has no apexes")]
    NoApexes,
    #[error("drawing covers {got} nodes, tree has {expected}")]
    SizeMismatch { got: usize, expected: usize },
}

/// Places gamma(s) at s's point and u*, v* at the apexes.
pub fn assemble_outerplanar_drawing(dm: &DualMapping, star: &GridDrawing) -> Result<GridDrawing, AssembleError> {
    let apexes = star.apexes.ok_or(AssembleError::NoApexes)?;
    if star.points.len() != dm.tree.len() {
        return Err(AssembleError::SizeMismatch { got: star.points.len(), expected: dm.tree.len() });
    }
    let n = dm.tree.len() + 2;
    let mut pts = vec![apexes[0]; n];
    for (s, &p) in star.points.iter().enumerate() {
        pts[dm.gamma[s]] = p;
    }
    pts[dm.root_edge.0] = apexes[0];
    pts[dm.root_edge.1] = apexes[1];
    let mut d = GridDrawing::new(DrawingKind::Outerplanar, pts);
    d.apexes = Some(apexes);
    Ok(d)
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Assemble(#[from] AssembleError),
}

/// Triangulates if needed, draws the dual tree rooted at edge (0, 1) with
/// the strong flat construction and places the graph on it.
pub fn draw_outerplanar(g: &OuterplanarGraph) -> Result<GridDrawing, PipelineError> {
    let full = if g.is_maximal() { g.clone() } else { triangulate(g) };
    let dm = dual_tree(&full, (0, 1))?;
    let star = crate::star_strong::strong_flat_drawing(&dm.tree);
    Ok(assemble_outerplanar_drawing(&dm, &star)?)
}
