use crate::lr_opt::{all_rep_sequences, splice, RepSeq};
use crate::tree::{parse_tree, serialize_tree, Builder, Tree};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::Path;

/// Anything with a node count and a representation sequence.
pub trait SizedSeq {
    fn nodes(&self) -> usize;
    fn seq(&self) -> &[u32];
}

impl SizedSeq for (usize, RepSeq) {
    fn nodes(&self) -> usize {
        self.0
    }
    fn seq(&self) -> &[u32] {
        self.1.values()
    }
}

impl SizedSeq for Entry {
    fn nodes(&self) -> usize {
        self.n
    }
    fn seq(&self) -> &[u32] {
        self.seq.values()
    }
}

/// `a` dominates `b` when it has no more nodes and a sequence that is at
/// least as long and entrywise at least as large.
pub fn dominates<A: SizedSeq + ?Sized, B: SizedSeq + ?Sized>(a: &A, b: &B) -> bool {
    a.nodes() <= b.nodes() && seq_dominates(a.seq(), b.seq())
}

fn seq_dominates(a: &[u32], b: &[u32]) -> bool {
    a.len() >= b.len() && a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Reference to a frontier entry: bucket (node count) and index.
pub type EntryId = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Leaf,
    Join(Option<EntryId>, Option<EntryId>),
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub n: usize,
    pub seq: RepSeq,
    pub witness: Witness,
}

#[derive(Debug, thiserror::Error)]
pub enum FrontierError {
    #[error("checkpoint line {line}: {msg}")]
    Checkpoint { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}

/// Antichain of (node count, sequence) pairs covering every tree with at
/// most `max_n()` nodes. Entries are bucketed by node count; witnesses refer
/// to entries in smaller buckets.
#[derive(Debug, Clone)]
pub struct FrontierSet {
    buckets: Vec<Vec<Entry>>,
    /// Entries of completed buckets grouped by sequence length, each group
    /// sorted by first value descending.
    index: BTreeMap<usize, Vec<EntryId>>,
}

impl Default for FrontierSet {
    fn default() -> Self {
        FrontierSet::new()
    }
}

impl FrontierSet {
    /// Frontier for trees with at most one node.
    pub fn new() -> FrontierSet {
        let mut f = FrontierSet { buckets: vec![Vec::new(), Vec::new()], index: BTreeMap::new() };
        f.buckets[1].push(Entry { n: 1, seq: RepSeq::leaf(), witness: Witness::Leaf });
        f.reindex(1);
        f
    }

    pub fn max_n(&self) -> usize {
        self.buckets.len() - 1
    }

    pub fn bucket(&self, n: usize) -> &[Entry] {
        self.buckets.get(n).map(|b| b.as_slice()).unwrap_or(&[])
    }

    pub fn entry(&self, id: EntryId) -> &Entry {
        &self.buckets[id.0][id.1]
    }

    pub fn entries(&self) -> impl Iterator<Item = &Entry> {
        self.buckets.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.buckets.iter().map(|b| b.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn witness_tree(&self, id: EntryId) -> Tree {
        let mut b = Builder::default();
        let root = self.build(id, &mut b);
        b.finish(root)
    }

    fn build(&self, id: EntryId, b: &mut Builder) -> usize {
        let v = b.push();
        if let Witness::Join(l, r) = self.entry(id).witness {
            let lc = l.map(|c| self.build(c, b));
            let rc = r.map(|c| self.build(c, b));
            b.set(v, lc, rc);
        }
        v
    }

    fn reindex(&mut self, n: usize) {
        for i in 0..self.buckets[n].len() {
            let len = self.buckets[n][i].seq.len();
            self.index.entry(len).or_default().push((n, i));
        }
        let buckets = &self.buckets;
        for group in self.index.values_mut() {
            group.sort_by(|&a, &b| {
                let (ea, eb) = (&buckets[a.0][a.1], &buckets[b.0][b.1]);
                eb.seq.get(0).cmp(&ea.seq.get(0)).then(a.cmp(&b))
            });
        }
    }

    /// True if some entry of a completed bucket dominates `seq` (those
    /// buckets all have fewer nodes than any pending candidate).
    fn covered(&self, seq: &[u32]) -> bool {
        let first = seq[0];
        for (_, group) in self.index.range(seq.len()..) {
            for &(n, i) in group {
                let e = &self.buckets[n][i].seq.0;
                if e[0] < first {
                    break;
                }
                if seq_dominates(e, seq) {
                    return true;
                }
            }
        }
        false
    }

    /// Adds bucket `max_n() + 1`.
    pub fn extend(&mut self, threads: Option<usize>) -> Result<(), FrontierError> {
        match threads {
            None => {
                self.extend_inner();
                Ok(())
            }
            Some(t) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(t.max(1))
                    .build()
                    .map_err(|e| FrontierError::Pool(e.to_string()))?;
                pool.install(|| self.extend_inner());
                Ok(())
            }
        }
    }

    fn extend_inner(&mut self) {
        let n = self.buckets.len();
        // (left, right) pairs in deterministic order.
        let mut blocks: Vec<(Option<usize>, Option<usize>)> = Vec::new();
        for a in 1..n - 1 {
            blocks.push((Some(a), Some(n - 1 - a)));
        }
        blocks.push((Some(n - 1), None));
        blocks.push((None, Some(n - 1)));

        let mut survivors: Vec<(RepSeq, Witness)> = Vec::new();
        for (la, rb) in blocks {
            let lcount = la.map_or(1, |a| self.bucket(a).len());
            let rcount = rb.map_or(1, |b| self.bucket(b).len());
            let this = &*self;
            let found: Vec<(RepSeq, Witness)> = (0..lcount * rcount)
                .into_par_iter()
                .filter_map(|k| {
                    let li = la.map(|a| (a, k / rcount));
                    let ri = rb.map(|b| (b, k % rcount));
                    let seq = splice(li.map(|id| &this.entry(id).seq), ri.map(|id| &this.entry(id).seq));
                    if this.covered(&seq.0) {
                        None
                    } else {
                        Some((seq, Witness::Join(li, ri)))
                    }
                })
                .collect();
            survivors.extend(found);
        }

        // Sequential merge among the new equal-size candidates.
        let mut bucket: Vec<Option<Entry>> = Vec::new();
        let mut seen: HashSet<RepSeq> = HashSet::new();
        for (seq, witness) in survivors {
            if !seen.insert(seq.clone()) {
                continue;
            }
            if bucket.iter().flatten().any(|e| seq_dominates(&e.seq.0, &seq.0)) {
                continue;
            }
            for slot in bucket.iter_mut() {
                if slot.as_ref().is_some_and(|e| seq_dominates(&seq.0, &e.seq.0)) {
                    *slot = None;
                }
            }
            bucket.push(Some(Entry { n, seq, witness }));
        }
        self.buckets.push(bucket.into_iter().flatten().collect());
        self.reindex(n);
    }

    /// Writes a `# max_n N` header, then one line per entry: node count,
    /// sequence, witness tree.
    pub fn save(&self, path: &Path) -> Result<(), FrontierError> {
        let tmp = path.with_extension("tmp");
        {
            let mut w = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
            writeln!(w, "# max_n {}", self.max_n())?;
            for (n, bucket) in self.buckets.iter().enumerate() {
                for (i, e) in bucket.iter().enumerate() {
                    let mut seq = String::new();
                    for (k, v) in e.seq.values().iter().enumerate() {
                        if k > 0 {
                            seq.push(',');
                        }
                        let _ = write!(seq, "{v}");
                    }
                    writeln!(w, "{}\t{}\t{}", n, seq, serialize_tree(&self.witness_tree((n, i))))?;
                }
            }
            w.flush()?;
        }
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Reads a file written by [`FrontierSet::save`]. Every witness's root
    /// subtrees must themselves be entries.
    pub fn load(path: &Path) -> Result<FrontierSet, FrontierError> {
        let file = std::io::BufReader::new(std::fs::File::open(path)?);
        let mut buckets: Vec<Vec<Entry>> = vec![Vec::new()];
        let mut lookup: HashMap<(usize, RepSeq), EntryId> = HashMap::new();
        let mut declared: Option<usize> = None;
        for (ln, line) in file.lines().enumerate() {
            let line = line?;
            let bad = |msg: &str| FrontierError::Checkpoint { line: ln + 1, msg: msg.to_string() };
            if line.trim().is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("# max_n ") {
                declared = Some(rest.trim().parse().map_err(|_| bad("bad max_n header"))?);
                continue;
            }
            let mut parts = line.split('\t');
            let (Some(ns), Some(ss), Some(ts), None) = (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(bad("expected three tab-separated fields"));
            };
            let n: usize = ns.parse().map_err(|_| bad("bad node count"))?;
            let seq = RepSeq(
                ss.split(',')
                    .map(|v| v.parse::<u32>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad("bad sequence"))?,
            );
            let tree = parse_tree(ts).map_err(|e| bad(&e.to_string()))?;
            if tree.len() != n {
                return Err(bad("witness size differs from node count"));
            }
            let seqs = all_rep_sequences(&tree);
            if seqs[tree.root()] != seq {
                return Err(bad("sequence does not match witness"));
            }
            if n + 1 < buckets.len() || n == 0 {
                return Err(bad("entries must be in nondecreasing node count"));
            }
            let sizes = tree.subtree_sizes();
            let child = |c: Option<usize>| -> Result<Option<EntryId>, FrontierError> {
                match c {
                    None => Ok(None),
                    Some(c) => lookup
                        .get(&(sizes[c], seqs[c].clone()))
                        .copied()
                        .map(Some)
                        .ok_or_else(|| bad("witness subtree is not an entry")),
                }
            };
            let witness = if n == 1 {
                Witness::Leaf
            } else {
                let nd = tree.node(tree.root());
                Witness::Join(child(nd.left)?, child(nd.right)?)
            };
            while buckets.len() <= n {
                buckets.push(Vec::new());
            }
            lookup.insert((n, seq.clone()), (n, buckets[n].len()));
            buckets[n].push(Entry { n, seq, witness });
        }
        if buckets.len() < 2 {
            return Err(FrontierError::Checkpoint { line: 0, msg: "empty checkpoint".into() });
        }
        if let Some(m) = declared {
            if m + 1 < buckets.len() {
                return Err(FrontierError::Checkpoint { line: 0, msg: "entries beyond max_n".into() });
            }
            buckets.resize_with(m + 1, Vec::new);
        }
        let mut f = FrontierSet { buckets, index: BTreeMap::new() };
        for n in 1..f.buckets.len() {
            f.reindex(n);
        }
        Ok(f)
    }
}

/// Smallest node count at which each width first becomes necessary.
pub fn table_from(f: &FrontierSet, max_n: usize) -> Vec<(u32, usize)> {
    let mut table: Vec<(u32, usize)> = Vec::new();
    for n in 1..=f.max_n().min(max_n) {
        let best = f.bucket(n).iter().map(|e| e.seq.min_width()).max().unwrap_or(0);
        let have = table.last().map_or(0, |r| r.0);
        for w in have + 1..=best {
            table.push((w, n));
        }
    }
    table
}

pub fn min_nodes_table(max_n: usize) -> Vec<(u32, usize)> {
    let mut f = FrontierSet::new();
    while f.max_n() < max_n {
        f.extend_inner();
    }
    table_from(&f, max_n)
}

/// Like [`min_nodes_table`] but resumes from and saves to `checkpoint`
/// after every size, on a pool of `threads` workers.
pub fn min_nodes_table_from(
    max_n: usize,
    checkpoint: Option<&Path>,
    threads: Option<usize>,
) -> Result<(Vec<(u32, usize)>, FrontierSet), FrontierError> {
    let mut f = match checkpoint {
        Some(p) if p.exists() => FrontierSet::load(p)?,
        _ => FrontierSet::new(),
    };
    while f.max_n() < max_n {
        f.extend(threads)?;
        if let Some(p) = checkpoint {
            f.save(p)?;
        }
    }
    Ok((table_from(&f, max_n), f))
}

pub fn table_to_csv(table: &[(u32, usize)]) -> String {
    let mut s = String::from("w,n\n");
    for (w, n) in table {
        let _ = writeln!(s, "{w},{n}");
    }
    s
}
