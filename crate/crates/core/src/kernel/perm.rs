use super::cube::{Cube, TrailEntry, UNASSIGNED};
use crate::{Error, Result};

/// A bijection on the domain `{0..n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u8).collect())
    }

    /// Swaps `a` and `b`.
    pub fn transposition(n: usize, a: u8, b: u8) -> Permutation {
        let mut p = Permutation::identity(n);
        p.0.swap(a as usize, b as usize);
        p
    }

    pub fn from_images(images: Vec<u8>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            match seen.get_mut(x as usize) {
                Some(s) if !*s => *s = true,
                _ => {
                    return Err(Error::Permutation(format!(
                        "{images:?} is not a bijection"
                    )))
                }
            }
        }
        Ok(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, d: u8) -> u8 {
        self.0[d as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }
}

/// Renames the domain elements of a cube: every assignment
/// `f(a1..ak) = v` becomes `f(p(a1)..p(ak)) = p(v)`; truth values and
/// unassigned entries keep their meaning at the permuted coordinates.
pub fn apply_perm(p: &Permutation, c: &Cube) -> Result<Cube> {
    let layout = c.layout();
    if p.len() != layout.order() {
        return Err(Error::Permutation(format!(
            "permutation on {} elements applied to a cube of order {}",
            p.len(),
            layout.order()
        )));
    }
    if let Some(&d) = layout.signature().pinned.iter().find(|&&d| p.apply(d) != d) {
        return Err(Error::Permutation(format!("moves pinned element {d}")));
    }
    Ok(apply_unchecked(p, c))
}

pub(crate) fn apply_unchecked(p: &Permutation, c: &Cube) -> Cube {
    let layout = c.layout();
    let mut values = vec![UNASSIGNED; layout.num_cells()];
    let mut target = vec![0u32; layout.num_cells()];
    let mut args = [0u8; 3];
    for (cell, &v) in c.values().iter().enumerate() {
        let symbol = layout.decompose(cell, &mut args);
        let k = layout.arity(symbol);
        for a in args[..k].iter_mut() {
            *a = p.apply(*a);
        }
        let dest = layout.cell_index(symbol, &args[..k]);
        target[cell] = dest as u32;
        values[dest] = if v == UNASSIGNED || layout.is_relation(symbol) {
            v
        } else {
            p.apply(v)
        };
    }
    let trail = c
        .trail()
        .iter()
        .map(|e| TrailEntry {
            cell: target[e.cell as usize],
            decision: e.decision,
        })
        .collect();
    Cube::from_parts(layout.clone(), values, trail)
}
