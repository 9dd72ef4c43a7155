//! Canonical labeling of colored graphs and canonical forms of cubes.
//!
//! The labeling search is individualization-refinement: refine to an
//! equitable partition, individualize each vertex of the first smallest
//! non-singleton cell in turn, recurse, and keep the leaf whose relabeled
//! graph is least. Leaves that coincide yield automorphisms, which prune
//! sibling branches in the same orbit.

mod refine;

use std::cmp::Ordering;

use crate::graph::{build_graph, ColoredGraph};
use crate::kernel::{encode_into, Cube, Encoding, Layout, Permutation, UNASSIGNED};
use crate::{Error, Result};

pub(crate) use refine::{Partition, Scratch};

/// Vertex relabeling: `get(v)` is the canonical index of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling(Vec<u32>);

impl Labeling {
    pub fn get(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Encoding of the canonical cube; equal exactly for isomorphic cubes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Encoding);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn encoding(&self) -> &Encoding {
        &self.0
    }
}

/// Coarsest equitable refinement of `coloring`, as an ordered list of
/// classes. `coloring` must partition the vertices of `g`.
pub fn refine(g: &ColoredGraph, coloring: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut members = Vec::with_capacity(g.num_vertices());
    let mut starts = vec![0u32];
    for c in coloring {
        members.extend_from_slice(c);
        starts.push(members.len() as u32);
    }
    assert_eq!(members.len(), g.num_vertices(), "coloring must cover the graph");
    let mut p = Partition::from_classes(&members, &starts);
    let all: Vec<u32> = p.cell_starts().collect();
    p.refine(g, &mut Scratch::new(g.num_vertices()), all);
    p.cell_starts().map(|s| p.cell(s).to_vec()).collect()
}

/// Sorted relabeled edges `(i << 32) | j` with `i < j`.
fn certificate(g: &ColoredGraph, lab: &[u32], pos: &[u32], out: &mut Vec<u64>) {
    out.clear();
    for (i, &v) in lab.iter().enumerate() {
        let start = out.len();
        let i = i as u32;
        for &u in g.neighbors(v as usize) {
            let j = pos[u as usize];
            if i < j {
                out.push(((i as u64) << 32) | j as u64);
            }
        }
        out[start..].sort_unstable();
    }
}

/// Order of the upper-triangle adjacency bitstrings: at the first pair
/// present in only one graph, that graph is the greater.
fn compare_certificates(a: &[u64], b: &[u64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return if x < y { Ordering::Greater } else { Ordering::Less };
        }
    }
    b.len().cmp(&a.len())
}

#[derive(Clone)]
struct Leaf {
    path: Vec<u32>,
    lab: Vec<u32>,
    pos: Vec<u32>,
    cert: Vec<u64>,
}

struct Search<'g> {
    g: &'g ColoredGraph,
    scratch: Scratch,
    path: Vec<u32>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u32>>,
    cert: Vec<u64>,
}

/// Result of exploring a subtree: `Some(level)` abandons everything below
/// the node at that level.
type Jump = Option<usize>;

fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

impl<'g> Search<'g> {
    fn explore(&mut self, p: &Partition) -> Jump {
        let level = self.path.len();
        let Some(target) = p.target_cell(self.g) else {
            if p.is_discrete() {
                return self.leaf(p);
            }
            let mut leaf = p.clone();
            leaf.make_discrete();
            return self.leaf(&leaf);
        };
        let mut children = p.cell(target).to_vec();
        children.sort_unstable();

        let mut orbits: Vec<u32> = Vec::new();
        let mut gens_used = usize::MAX;
        let mut explored: Vec<u32> = Vec::new();
        for v in children {
            if self.generators.len() != gens_used {
                gens_used = self.generators.len();
                orbits = self.orbits(&self.path);
            }
            if !explored.is_empty() {
                let r = find(&mut orbits, v);
                if explored.iter().any(|&u| find(&mut orbits, u) == r) {
                    continue;
                }
            }
            let mut child = p.clone();
            let s = child.individualize(v);
            child.refine(self.g, &mut self.scratch, [s]);
            self.path.push(v);
            let jump = self.explore(&child);
            self.path.pop();
            explored.push(v);
            if let Some(l) = jump {
                if l < level {
                    return jump;
                }
            }
        }
        None
    }

    /// Union-find parents of the orbits of the group generated by the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn orbits(&self, prefix: &[u32]) -> Vec<u32> {
        let mut parent: Vec<u32> = (0..self.g.num_vertices() as u32).collect();
        for gamma in &self.generators {
            if prefix.iter().any(|&w| gamma[w as usize] != w) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let a = find(&mut parent, v as u32);
                let b = find(&mut parent, w);
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        parent
    }

    fn leaf(&mut self, p: &Partition) -> Jump {
        certificate(self.g, &p.lab, &p.pos, &mut self.cert);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                path: self.path.clone(),
                lab: p.lab.clone(),
                pos: p.pos.clone(),
                cert: self.cert.clone(),
            };
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if self.cert == first.cert {
            let gamma = p.pos.iter().map(|&i| first.lab[i as usize]).collect();
            let jump = common_prefix(&self.path, &first.path);
            self.generators.push(gamma);
            return Some(jump);
        }
        let best = self.best.as_mut().expect("best leaf is set with the first");
        match compare_certificates(&self.cert, &best.cert) {
            Ordering::Equal => {
                let gamma = p.pos.iter().map(|&i| best.lab[i as usize]).collect();
                let jump = common_prefix(&self.path, &best.path);
                self.generators.push(gamma);
                Some(jump)
            }
            Ordering::Less => {
                best.path.clone_from(&self.path);
                best.lab.clone_from(&p.lab);
                best.pos.clone_from(&p.pos);
                std::mem::swap(&mut best.cert, &mut self.cert);
                None
            }
            Ordering::Greater => None,
        }
    }
}

/// Vertex positions of the canonical leaf.
fn canonical_positions(g: &ColoredGraph) -> Vec<u32> {
    let (members, starts) = g.partition_order();
    let mut root = Partition::from_classes(members, starts);
    let mut search = Search {
        g,
        scratch: Scratch::new(g.num_vertices()),
        path: Vec::new(),
        first: None,
        best: None,
        generators: Vec::new(),
        cert: Vec::new(),
    };
    let all: Vec<u32> = root.cell_starts().collect();
    root.refine(g, &mut search.scratch, all);
    search.explore(&root);
    search.best.expect("the search reaches at least one leaf").pos
}

/// Class sizes (u32 LE) followed by the relabeled upper-triangle adjacency
/// bitstring, row-major, most significant bit first.
fn graph_bytes(g: &ColoredGraph, pos: &[u32]) -> Vec<u8> {
    let v = g.num_vertices();
    let mut out = Vec::new();
    for class in g.classes() {
        out.extend_from_slice(&(class.len() as u32).to_le_bytes());
    }
    let bits = v * v.saturating_sub(1) / 2;
    let base = out.len();
    out.resize(base + bits.div_ceil(8), 0);
    // index of pair (i, j), i < j, in row-major upper-triangle order
    let index = |i: usize, j: usize| i * (2 * v - i - 1) / 2 + (j - i - 1);
    for (a, b) in g.edges() {
        let (x, y) = (pos[a as usize] as usize, pos[b as usize] as usize);
        let k = index(x.min(y), x.max(y));
        out[base + k / 8] |= 0x80 >> (k % 8);
    }
    out
}

/// Canonical labeling of `g` and the bytes of the relabeled graph.
pub fn canonical_labeling(g: &ColoredGraph) -> (Labeling, Vec<u8>) {
    let pos = canonical_positions(g);
    let bytes = graph_bytes(g, &pos);
    (Labeling(pos), bytes)
}

/// Domain permutation read off the canonical positions of the element
/// vertices: pinned elements stay, the others are numbered by position.
fn domain_permutation(layout: &Layout, pos: &[u32]) -> Permutation {
    let n = layout.order();
    let pinned = &layout.signature().pinned;
    let mut free: Vec<u8> = (0..n as u8).filter(|d| !pinned.contains(d)).collect();
    let targets = free.clone();
    free.sort_by_key(|&d| pos[d as usize]);
    let mut images: Vec<u8> = (0..n as u8).collect();
    for (&d, &t) in free.iter().zip(&targets) {
        images[d as usize] = t;
    }
    Permutation::from_images(images).expect("a bijection by construction")
}

/// Entries of `apply_perm(p, c)` without building a cube.
fn permuted_values(layout: &Layout, values: &[u8], p: &Permutation, out: &mut [u8]) {
    let mut args = [0u8; 3];
    for (cell, &v) in values.iter().enumerate() {
        let symbol = layout.decompose(cell, &mut args);
        let k = layout.arity(symbol);
        for a in args[..k].iter_mut() {
            *a = p.apply(*a);
        }
        let dest = layout.cell_index(symbol, &args[..k]);
        out[dest] = if v == UNASSIGNED || layout.is_relation(symbol) {
            v
        } else {
            p.apply(v)
        };
    }
}

fn key_of(layout: &Layout, values: &[u8]) -> CanonicalKey {
    let mut bytes = Vec::new();
    encode_into(layout, values, &mut bytes);
    CanonicalKey(Encoding::from_bytes(bytes))
}

/// The domain permutation taking `c` to its canonical form.
pub fn canonical_permutation(c: &Cube) -> Permutation {
    let g = build_graph(c);
    domain_permutation(c.layout(), &canonical_positions(&g))
}

/// Canonical key of `c`, without building the canonical cube.
pub fn canonical_key(c: &Cube) -> CanonicalKey {
    let p = canonical_permutation(c);
    let layout = c.layout();
    let mut values = vec![UNASSIGNED; layout.num_cells()];
    permuted_values(layout, c.values(), &p, &mut values);
    key_of(layout, &values)
}

/// Canonical form of `c` and its key.
pub fn canonicalize(c: &Cube) -> (Cube, CanonicalKey) {
    let p = canonical_permutation(c);
    let canon = crate::kernel::apply_unchecked(&p, c);
    let key = key_of(canon.layout(), canon.values());
    (canon, key)
}

/// Largest order accepted by [`brute_force_canonicalize`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 8;

/// Least encoding over all permutations fixing the pinned elements.
pub fn brute_force_canonicalize(c: &Cube) -> Result<(Cube, CanonicalKey)> {
    let layout = c.layout();
    let n = layout.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::OracleGuard(n));
    }
    let free: Vec<u8> = (0..n as u8).filter(|d| !layout.is_pinned(*d)).collect();
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut best = c.values().to_vec();
    let mut buf = vec![0u8; best.len()];
    let mut best_perm = Permutation::identity(n);

    // Heap's algorithm over the images of the free elements
    let mut order = free.clone();
    let mut counters = vec![0usize; order.len()];
    let mut visit = |order: &[u8], images: &mut Vec<u8>| {
        for (&d, &t) in free.iter().zip(order) {
            images[d as usize] = t;
        }
        let p = Permutation::from_images(images.clone()).expect("bijection");
        permuted_values(layout, c.values(), &p, &mut buf);
        if buf < best {
            best.copy_from_slice(&buf);
            best_perm = p;
        }
    };
    visit(&order, &mut images);
    let mut i = 0;
    while i < order.len() {
        if counters[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(counters[i], i);
            }
            visit(&order, &mut images);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    let canon = crate::kernel::apply_unchecked(&best_perm, c);
    let key = key_of(layout, canon.values());
    Ok((canon, key))
}

/// True iff the cubes have the same canonical key.
pub fn is_isomorphic(c1: &Cube, c2: &Cube) -> Result<bool> {
    if c1.layout() != c2.layout() {
        return Err(Error::SignatureMismatch(
            "cubes over different signatures or orders".into(),
        ));
    }
    Ok(canonical_key(c1) == canonical_key(c2))
}

#[cfg(test)]
mod tests;
