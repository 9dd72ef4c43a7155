//! Ordered partitions of the vertex set and equitable refinement.

use std::collections::VecDeque;

use crate::graph::ColoredGraph;

/// Ordered partition stored as a permutation of the vertices (`lab`) cut
/// into contiguous cells. A cell is named by its start position.
#[derive(Debug, Clone)]
pub(crate) struct Partition {
    pub lab: Vec<u32>,
    pub pos: Vec<u32>,
    cell_of: Vec<u32>,
    end: Vec<u32>,
    cells: usize,
}

/// Buffers reused across refinements of the same graph.
#[derive(Debug, Default)]
pub(crate) struct Scratch {
    count: Vec<u32>,
    touched: Vec<u32>,
    queued: Vec<bool>,
    queue: VecDeque<u32>,
    buf: Vec<u32>,
    frags: Vec<(u32, u32)>,
}

impl Scratch {
    pub fn new(vertices: usize) -> Scratch {
        Scratch {
            count: vec![0; vertices],
            queued: vec![false; vertices],
            ..Scratch::default()
        }
    }
}

impl Partition {
    pub fn from_classes(members: &[u32], starts: &[u32]) -> Partition {
        let v = members.len();
        let mut p = Partition {
            lab: members.to_vec(),
            pos: vec![0; v],
            cell_of: vec![0; v],
            end: vec![0; v],
            cells: starts.len().saturating_sub(1),
        };
        for w in starts.windows(2) {
            p.end[w[0] as usize] = w[1];
            for i in w[0]..w[1] {
                let x = members[i as usize] as usize;
                p.pos[x] = i;
                p.cell_of[x] = w[0];
            }
        }
        p
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    pub fn cell_starts(&self) -> impl Iterator<Item = u32> + '_ {
        let mut p = 0u32;
        std::iter::from_fn(move || {
            if p as usize >= self.lab.len() {
                return None;
            }
            let s = p;
            p = self.end[s as usize];
            Some(s)
        })
    }

    pub fn cell(&self, start: u32) -> &[u32] {
        &self.lab[start as usize..self.end[start as usize] as usize]
    }

    /// First cell of least size above one whose vertices are not all
    /// twins (same neighbors). Twin cells never need branching: every
    /// order of their members gives the same relabeled graph.
    pub fn target_cell(&self, g: &ColoredGraph) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        for s in self.cell_starts() {
            let size = self.end[s as usize] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) && !self.is_twin_cell(g, s) {
                best = Some((s, size));
                if size == 2 {
                    break;
                }
            }
        }
        best.map(|(s, _)| s)
    }

    fn is_twin_cell(&self, g: &ColoredGraph, start: u32) -> bool {
        let cell = self.cell(start);
        let first = g.neighbors(cell[0] as usize);
        cell[1..].iter().all(|&v| g.neighbors(v as usize) == first)
    }

    /// Splits every remaining cell into singletons in its current order.
    pub fn make_discrete(&mut self) {
        for p in 0..self.lab.len() {
            self.end[p] = p as u32 + 1;
            self.cell_of[self.lab[p] as usize] = p as u32;
        }
        self.cells = self.lab.len();
    }

    /// Splits `v` off the front of its cell; returns the singleton's start.
    pub fn individualize(&mut self, v: u32) -> u32 {
        let x = self.cell_of[v as usize];
        let e = self.end[x as usize];
        if e - x == 1 {
            return x;
        }
        let p = self.pos[v as usize];
        let u = self.lab[x as usize];
        self.lab[x as usize] = v;
        self.lab[p as usize] = u;
        self.pos[v as usize] = x;
        self.pos[u as usize] = p;
        self.end[x as usize] = x + 1;
        self.end[x as usize + 1] = e;
        for q in x + 1..e {
            self.cell_of[self.lab[q as usize] as usize] = x + 1;
        }
        self.cells += 1;
        x
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// starting from the given splitter cells.
    pub fn refine(&mut self, g: &ColoredGraph, sc: &mut Scratch, splitters: impl IntoIterator<Item = u32>) {
        let Scratch {
            count,
            touched,
            queued,
            queue,
            buf,
            frags,
        } = sc;
        for s in splitters {
            if !queued[s as usize] {
                queued[s as usize] = true;
                queue.push_back(s);
            }
        }
        while let Some(w) = queue.pop_front() {
            queued[w as usize] = false;
            if self.is_discrete() {
                continue;
            }
            touched.clear();
            for p in w..self.end[w as usize] {
                for &u in g.neighbors(self.lab[p as usize] as usize) {
                    let x = self.cell_of[u as usize];
                    if self.end[x as usize] == x + 1 {
                        continue;
                    }
                    if count[u as usize] == 0 {
                        touched.push(u);
                    }
                    count[u as usize] += 1;
                }
            }
            let cell_of = &self.cell_of;
            touched.sort_unstable_by_key(|&u| ((cell_of[u as usize] as u64) << 32) | count[u as usize] as u64);

            let mut i = 0;
            while i < touched.len() {
                let x = self.cell_of[touched[i] as usize];
                let mut j = i;
                while j < touched.len() && self.cell_of[touched[j] as usize] == x {
                    j += 1;
                }
                let group = &touched[i..j];
                i = j;
                let xe = self.end[x as usize];
                let size = (xe - x) as usize;
                let uniform = group.len() == size
                    && count[group[0] as usize] == count[group[group.len() - 1] as usize];
                if size == 1 || uniform {
                    continue;
                }

                buf.clear();
                buf.extend(
                    self.lab[x as usize..xe as usize]
                        .iter()
                        .copied()
                        .filter(|&v| count[v as usize] == 0),
                );
                let untouched = buf.len();
                buf.extend_from_slice(group);
                for (k, &v) in buf.iter().enumerate() {
                    self.lab[x as usize + k] = v;
                    self.pos[v as usize] = x + k as u32;
                }

                frags.clear();
                let mut fs = x;
                if untouched > 0 {
                    frags.push((x, x + untouched as u32));
                    fs = x + untouched as u32;
                }
                let mut k = 0;
                while k < group.len() {
                    let c = count[group[k] as usize];
                    let mut l = k;
                    while l < group.len() && count[group[l] as usize] == c {
                        l += 1;
                    }
                    frags.push((fs, fs + (l - k) as u32));
                    fs += (l - k) as u32;
                    k = l;
                }
                for &(a, b) in frags.iter() {
                    self.end[a as usize] = b;
                    for q in a..b {
                        self.cell_of[self.lab[q as usize] as usize] = a;
                    }
                }
                self.cells += frags.len() - 1;

                // a queued cell keeps its place as the first fragment,
                // otherwise the first largest fragment is left out
                let skip = if queued[x as usize] {
                    x
                } else {
                    let mut largest = frags[0];
                    for &f in frags.iter() {
                        if f.1 - f.0 > largest.1 - largest.0 {
                            largest = f;
                        }
                    }
                    largest.0
                };
                for &(a, _) in frags.iter() {
                    if a != skip && !queued[a as usize] {
                        queued[a as usize] = true;
                        queue.push_back(a);
                    }
                }
            }
            for &u in touched.iter() {
                count[u as usize] = 0;
            }
        }
    }
}
