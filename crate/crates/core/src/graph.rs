//! Vertex-colored graph of a cube or model.
//!
//! Vertex classes, in numbering order:
//!
//! | class    | vertices                         |
//! |----------|----------------------------------|
//! | `E`      | one per domain element           |
//! | `A_p`    | one per element, for `p = 1..=q` |
//! | `R`      | one per element (cell values)    |
//! | `B_T B_F`| truth values, only with relations|
//! | `V_s`    | one per cell of each symbol      |
//! | `U`      | only if some cell is unassigned  |
//!
//! `q` is the largest arity. An assigned function cell `f(a1..ak) = v` is
//! joined to `R_v` and to `A_p,a_p` for each argument position; a relation
//! cell to `B_T` or `B_F` and its argument vertices; an unassigned cell to
//! `U` only. Each class gets its own color, and the `E`, `A_p` and `R`
//! vertices of a pinned element are split off as singleton colors.

use std::fmt::Write as _;

use crate::kernel::{Cube, Layout, TRUE, UNASSIGNED};
use crate::{Error, Result};

/// Undirected simple graph with an ordered partition of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    offsets: Vec<u32>,
    neighbors: Vec<u32>,
    class_starts: Vec<u32>,
    class_members: Vec<u32>,
}

impl ColoredGraph {
    /// Builds a graph from an edge list and an ordered vertex partition.
    pub fn from_edges(vertices: usize, edges: &[(u32, u32)], classes: &[Vec<u32>]) -> Result<ColoredGraph> {
        let mut seen = vec![false; vertices];
        for &v in classes.iter().flatten() {
            match seen.get_mut(v as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::Encoding(format!("vertex {v} misplaced in partition"))),
            }
        }
        if seen.iter().any(|s| !s) || classes.iter().any(|c| c.is_empty()) {
            return Err(Error::Encoding("color classes do not partition the vertices".into()));
        }
        let mut degree = vec![0u32; vertices];
        for &(a, b) in edges {
            if a == b || a as usize >= vertices || b as usize >= vertices {
                return Err(Error::Encoding(format!("invalid edge {a}-{b}")));
            }
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(vertices + 1);
        let mut acc = 0u32;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut fill: Vec<u32> = offsets[..vertices].to_vec();
        let mut neighbors = vec![0u32; acc as usize];
        for &(a, b) in edges {
            neighbors[fill[a as usize] as usize] = b;
            fill[a as usize] += 1;
            neighbors[fill[b as usize] as usize] = a;
            fill[b as usize] += 1;
        }
        for v in 0..vertices {
            let slice = &mut neighbors[offsets[v] as usize..offsets[v + 1] as usize];
            slice.sort_unstable();
            if slice.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Encoding(format!("duplicate edge at vertex {v}")));
            }
        }
        let mut class_starts = Vec::with_capacity(classes.len() + 1);
        let mut class_members = Vec::with_capacity(vertices);
        for c in classes {
            class_starts.push(class_members.len() as u32);
            class_members.extend_from_slice(c);
        }
        class_starts.push(class_members.len() as u32);
        Ok(ColoredGraph {
            offsets,
            neighbors,
            class_starts,
            class_members,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn degree(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    pub fn num_classes(&self) -> usize {
        self.class_starts.len() - 1
    }

    pub fn class(&self, i: usize) -> &[u32] {
        &self.class_members[self.class_starts[i] as usize..self.class_starts[i + 1] as usize]
    }

    pub fn classes(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.num_classes()).map(|i| self.class(i))
    }

    pub(crate) fn partition_order(&self) -> (&[u32], &[u32]) {
        (&self.class_members, &self.class_starts)
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for v in 0..self.num_vertices() {
            for &u in self.neighbors(v) {
                if (v as u32) < u {
                    out.push((v as u32, u));
                }
            }
        }
        out
    }
}

/// Vertex numbering of the graph of a cube over some layout.
#[derive(Debug, Clone, Copy)]
pub struct VertexMap {
    pub n: usize,
    pub q: usize,
    pub relations: bool,
    pub cells: usize,
}

impl VertexMap {
    pub fn new(layout: &Layout) -> VertexMap {
        VertexMap {
            n: layout.order(),
            q: layout.signature().max_arity(),
            relations: layout.signature().has_relations(),
            cells: layout.num_cells(),
        }
    }

    pub fn element(&self, d: usize) -> usize {
        d
    }

    /// Argument vertex for position `p` (1-based).
    pub fn argument(&self, p: usize, d: usize) -> usize {
        self.n * p + d
    }

    pub fn value(&self, d: usize) -> usize {
        self.n * (self.q + 1) + d
    }

    pub fn truth(&self, value: bool) -> usize {
        debug_assert!(self.relations);
        self.n * (self.q + 2) + if value { 0 } else { 1 }
    }

    pub fn cell(&self, c: usize) -> usize {
        self.n * (self.q + 2) + if self.relations { 2 } else { 0 } + c
    }

    pub fn unassigned(&self) -> usize {
        self.cell(self.cells)
    }
}

/// Builds the colored graph of a cube over its own layout.
pub fn build_graph(c: &Cube) -> ColoredGraph {
    let layout = c.layout();
    let map = VertexMap::new(layout);
    let (n, q) = (map.n, map.q);
    let has_unassigned = !c.is_total();
    let vertices = map.cell(map.cells) + usize::from(has_unassigned);

    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n * (q + 1) + c.values().len() * 4);
    for d in 0..n {
        for p in 1..=q {
            edges.push((map.element(d) as u32, map.argument(p, d) as u32));
        }
        edges.push((map.element(d) as u32, map.value(d) as u32));
    }
    let mut args = [0u8; 3];
    for (cell, &v) in c.values().iter().enumerate() {
        let vertex = map.cell(cell) as u32;
        if v == UNASSIGNED {
            edges.push((vertex, map.unassigned() as u32));
            continue;
        }
        let symbol = layout.decompose(cell, &mut args);
        let target = if layout.is_relation(symbol) {
            map.truth(v == TRUE)
        } else {
            map.value(v as usize)
        };
        edges.push((vertex, target as u32));
        for (p, &a) in args[..layout.arity(symbol)].iter().enumerate() {
            edges.push((vertex, map.argument(p + 1, a as usize) as u32));
        }
    }

    let pinned: Vec<usize> = layout.signature().pinned.iter().map(|&d| d as usize).collect();
    let mut classes: Vec<Vec<u32>> = Vec::new();
    let mut per_element = |vertex: &dyn Fn(usize) -> usize| {
        for &d in &pinned {
            classes.push(vec![vertex(d) as u32]);
        }
        let rest: Vec<u32> = (0..n)
            .filter(|d| !pinned.contains(d))
            .map(|d| vertex(d) as u32)
            .collect();
        if !rest.is_empty() {
            classes.push(rest);
        }
    };
    per_element(&|d| map.element(d));
    for p in 1..=q {
        per_element(&|d| map.argument(p, d));
    }
    per_element(&|d| map.value(d));
    if map.relations {
        classes.push(vec![map.truth(true) as u32]);
        classes.push(vec![map.truth(false) as u32]);
    }
    for s in 0..layout.num_symbols() {
        classes.push(layout.symbol_range(s).map(|cell| map.cell(cell) as u32).collect());
    }
    if has_unassigned {
        classes.push(vec![map.unassigned() as u32]);
    }
    ColoredGraph::from_edges(vertices, &edges, &classes).expect("graph construction is well-formed")
}

/// Adjacency listing: one line `v : higher neighbors` per vertex, then the
/// color classes separated by `|`.
pub fn dump_graph(g: &ColoredGraph) -> String {
    let mut out = String::new();
    for v in 0..g.num_vertices() {
        write!(out, "{v} :").unwrap();
        for &u in g.neighbors(v).iter().filter(|&&u| u as usize > v) {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    out.push_str("colors :");
    for (i, class) in g.classes().enumerate() {
        if i > 0 {
            out.push_str(" |");
        }
        for v in class {
            write!(out, " {v}").unwrap();
        }
    }
    out.push('\n');
    out
}

/// Reads the output of [`dump_graph`].
pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let bad = |line: usize, msg: &str| Error::Record {
        line: line + 1,
        msg: msg.to_string(),
    };
    let mut edges = Vec::new();
    let mut vertices = 0usize;
    let mut classes = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line.split_once(':').ok_or_else(|| bad(i, "missing `:`"))?;
        let head = head.trim();
        if head == "colors" {
            let mut parsed = Vec::new();
            for part in tail.split('|') {
                let class: std::result::Result<Vec<u32>, _> =
                    part.split_whitespace().map(str::parse).collect();
                parsed.push(class.map_err(|_| bad(i, "bad vertex in colors"))?);
            }
            classes = Some(parsed);
            continue;
        }
        let v: u32 = head.parse().map_err(|_| bad(i, "bad vertex number"))?;
        if v as usize != vertices {
            return Err(bad(i, "vertices must be listed in order"));
        }
        vertices += 1;
        for tok in tail.split_whitespace() {
            let u: u32 = tok.parse().map_err(|_| bad(i, "bad neighbor"))?;
            if u <= v {
                return Err(bad(i, "neighbors must be higher than the vertex"));
            }
            edges.push((v, u));
        }
    }
    let classes = classes.ok_or_else(|| bad(0, "missing colors line"))?;
    ColoredGraph::from_edges(vertices, &edges, &classes)
}
