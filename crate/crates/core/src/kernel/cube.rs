use std::fmt;
use std::sync::Arc;

use super::layout::Layout;
use crate::{Error, Result};

/// Entry of an unassigned cell.
pub const UNASSIGNED: u8 = 255;
/// Entry of a relation cell assigned true.
pub const TRUE: u8 = 254;
/// Entry of a relation cell assigned false.
pub const FALSE: u8 = 253;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrailEntry {
    pub cell: u32,
    pub decision: bool,
}

/// A partial assignment of cells: the prefix of a search path. A cube with
/// no unassigned cell is a model candidate.
///
/// Equality compares the assignment only, not the order it was made in.
#[derive(Clone)]
pub struct Cube {
    layout: Arc<Layout>,
    values: Vec<u8>,
    trail: Vec<TrailEntry>,
}

impl Cube {
    pub fn empty(layout: Arc<Layout>) -> Cube {
        let cells = layout.num_cells();
        Cube {
            layout,
            values: vec![UNASSIGNED; cells],
            trail: Vec::new(),
        }
    }

    /// Builds a cube from raw entries, recording assigned cells on the
    /// trail in cell order.
    pub fn from_values(layout: Arc<Layout>, values: Vec<u8>) -> Result<Cube> {
        if values.len() != layout.num_cells() {
            return Err(Error::Encoding(format!(
                "expected {} cells, found {}",
                layout.num_cells(),
                values.len()
            )));
        }
        for (cell, &v) in values.iter().enumerate() {
            if !entry_is_valid(&layout, cell, v) {
                return Err(Error::Encoding(format!(
                    "entry {v} is out of range for cell {cell}"
                )));
            }
        }
        let trail = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != UNASSIGNED)
            .map(|(cell, _)| TrailEntry {
                cell: cell as u32,
                decision: true,
            })
            .collect();
        Ok(Cube {
            layout,
            values,
            trail,
        })
    }

    pub fn layout(&self) -> &Arc<Layout> {
        &self.layout
    }

    pub fn order(&self) -> usize {
        self.layout.order()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, cell: usize) -> u8 {
        self.values[cell]
    }

    pub fn is_assigned(&self, cell: usize) -> bool {
        self.values[cell] != UNASSIGNED
    }

    pub fn trail(&self) -> &[TrailEntry] {
        &self.trail
    }

    pub fn assigned_count(&self) -> usize {
        self.trail.len()
    }

    pub fn is_total(&self) -> bool {
        self.trail.len() == self.values.len()
    }

    /// Table of one symbol, row-major.
    pub fn table(&self, symbol: usize) -> &[u8] {
        &self.values[self.layout.symbol_range(symbol)]
    }

    /// Assigns an unassigned cell and pushes it on the trail.
    pub fn assign(&mut self, cell: usize, value: u8, decision: bool) {
        debug_assert_eq!(self.values[cell], UNASSIGNED);
        debug_assert!(entry_is_valid(&self.layout, cell, value));
        self.values[cell] = value;
        self.trail.push(TrailEntry {
            cell: cell as u32,
            decision,
        });
    }

    /// Undoes the most recent assignment.
    pub fn pop(&mut self) -> Option<TrailEntry> {
        let entry = self.trail.pop()?;
        self.values[entry.cell as usize] = UNASSIGNED;
        Some(entry)
    }

    pub(crate) fn from_parts(layout: Arc<Layout>, values: Vec<u8>, trail: Vec<TrailEntry>) -> Cube {
        Cube {
            layout,
            values,
            trail,
        }
    }
}

pub(crate) fn entry_is_valid(layout: &Layout, cell: usize, v: u8) -> bool {
    if v == UNASSIGNED {
        return true;
    }
    if layout.is_relation(layout.symbol_of(cell)) {
        v == TRUE || v == FALSE
    } else {
        (v as usize) < layout.order()
    }
}

impl PartialEq for Cube {
    fn eq(&self, other: &Cube) -> bool {
        (Arc::ptr_eq(&self.layout, &other.layout) || self.layout == other.layout)
            && self.values == other.values
    }
}

impl Eq for Cube {}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cube(n={}, [", self.order())?;
        for (i, &v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match v {
                UNASSIGNED => write!(f, "_")?,
                TRUE => write!(f, "T")?,
                FALSE => write!(f, "F")?,
                v => write!(f, "{v}")?,
            }
        }
        write!(f, "])")
    }
}
