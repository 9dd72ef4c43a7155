use std::sync::Arc;

use crate::ground::{ClauseStatus, Forced, GroundClauseSet};
use crate::kernel::{Cube, Layout, FALSE, TRUE, UNASSIGNED};

use super::Strategy;

/// Propagation found a falsified clause or emptied a cell's candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conflict;

/// Restore point for [`SearchState::undo_to`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mark {
    trail: usize,
    excluded: usize,
}

fn bit(v: u8) -> usize {
    match v {
        TRUE => 1,
        FALSE => 0,
        v => v as usize,
    }
}

/// Cube plus per-cell excluded values, with the ground clauses that drive
/// propagation.
#[derive(Debug)]
pub struct SearchState {
    ground: Arc<GroundClauseSet>,
    cube: Cube,
    excluded: Vec<[u64; 4]>,
    excluded_trail: Vec<(u32, u8)>,
    order: Vec<u32>,
    propagation: bool,
    lnh: bool,
}

impl SearchState {
    pub fn new(ground: Arc<GroundClauseSet>, strategy: Strategy, propagation: bool, lnh: bool) -> SearchState {
        let layout = ground.layout().clone();
        let order = cell_order(&layout, strategy);
        SearchState {
            excluded: vec![[0; 4]; layout.num_cells()],
            cube: Cube::empty(layout),
            ground,
            excluded_trail: Vec::new(),
            order,
            propagation,
            lnh,
        }
    }

    pub fn cube(&self) -> &Cube {
        &self.cube
    }

    pub fn layout(&self) -> &Arc<Layout> {
        self.cube.layout()
    }

    pub fn ground(&self) -> &GroundClauseSet {
        &self.ground
    }

    /// Cells in strategy order.
    pub fn cell_order(&self) -> &[u32] {
        &self.order
    }

    pub fn is_excluded(&self, cell: usize, value: u8) -> bool {
        let b = bit(value);
        self.excluded[cell][b / 64] >> (b % 64) & 1 == 1
    }

    pub fn mark(&self) -> Mark {
        Mark {
            trail: self.cube.trail().len(),
            excluded: self.excluded_trail.len(),
        }
    }

    pub fn undo_to(&mut self, m: Mark) {
        while self.cube.trail().len() > m.trail {
            self.cube.pop();
        }
        while self.excluded_trail.len() > m.excluded {
            let (cell, v) = self.excluded_trail.pop().expect("non-empty");
            let b = bit(v);
            self.excluded[cell as usize][b / 64] &= !(1u64 << (b % 64));
        }
    }

    /// First unassigned cell in strategy order at or after position `from`.
    pub fn next_cell_from(&self, from: usize) -> Option<(usize, usize)> {
        self.order[from..]
            .iter()
            .position(|&c| !self.cube.is_assigned(c as usize))
            .map(|i| (from + i, self.order[from + i] as usize))
    }

    pub fn next_cell(&self) -> Option<usize> {
        self.next_cell_from(0).map(|(_, c)| c)
    }

    fn domain(&self, cell: usize) -> Vec<u8> {
        let layout = self.layout();
        if layout.is_relation(layout.symbol_of(cell)) {
            vec![FALSE, TRUE]
        } else {
            (0..layout.order() as u8).collect()
        }
    }

    /// Largest element named so far: pinned elements, the values and
    /// arguments of assigned cells, and the arguments of `cell`.
    fn max_designated(&self, cell: usize) -> Option<u8> {
        let layout = self.layout();
        let mut mdn = layout.signature().pinned.iter().next_back().copied();
        let mut args = [0u8; 3];
        let mut note = |d: u8| mdn = Some(mdn.map_or(d, |m| m.max(d)));
        let symbol = layout.decompose(cell, &mut args);
        args[..layout.arity(symbol)].iter().for_each(|&a| note(a));
        for e in self.cube.trail() {
            let c = e.cell as usize;
            let symbol = layout.decompose(c, &mut args);
            args[..layout.arity(symbol)].iter().for_each(|&a| note(a));
            if !layout.is_relation(symbol) {
                note(self.cube.get(c));
            }
        }
        mdn
    }

    /// Values to try at an unassigned cell, ascending. Under the least
    /// number heuristic a function cell only tries elements up to one past
    /// the largest element named so far.
    pub fn candidate_values(&self, cell: usize) -> Vec<u8> {
        let mut values: Vec<u8> = self
            .domain(cell)
            .into_iter()
            .filter(|&v| !self.is_excluded(cell, v))
            .collect();
        let layout = self.layout();
        if self.lnh && !layout.is_relation(layout.symbol_of(cell)) {
            let bound = self.max_designated(cell).map_or(0, |m| m as usize + 1);
            values.retain(|&v| v as usize <= bound);
        }
        values
    }

    fn assign(&mut self, cell: usize, value: u8, decision: bool) -> Result<(), Conflict> {
        if self.is_excluded(cell, value) {
            return Err(Conflict);
        }
        self.cube.assign(cell, value, decision);
        Ok(())
    }

    fn exclude(&mut self, cell: usize, value: u8) -> Result<(), Conflict> {
        if self.is_excluded(cell, value) {
            return Ok(());
        }
        let b = bit(value);
        self.excluded[cell][b / 64] |= 1u64 << (b % 64);
        self.excluded_trail.push((cell as u32, value));
        let mut left = self.domain(cell).into_iter().filter(|&v| !self.is_excluded(cell, v));
        match (left.next(), left.next()) {
            (None, _) => Err(Conflict),
            (Some(v), None) => self.assign(cell, v, false),
            _ => Ok(()),
        }
    }

    /// Checks or propagates every clause reading a cell assigned at trail
    /// position `from` or later.
    fn propagate_from(&mut self, mut head: usize) -> Result<(), Conflict> {
        while head < self.cube.trail().len() {
            let cell = self.cube.trail()[head].cell as usize;
            head += 1;
            let ground = self.ground.clone();
            for &occ in ground.occurrences(cell) {
                if !ground.reads(occ, cell, self.cube.values()) {
                    continue;
                }
                match ground.clause_status(occ.clause as usize, self.cube.values()) {
                    ClauseStatus::Falsified => return Err(Conflict),
                    ClauseStatus::Unit(f) if self.propagation => match f {
                        Forced::Assign { cell, value } => {
                            if self.cube.get(cell as usize) == UNASSIGNED {
                                self.assign(cell as usize, value, false)?;
                            }
                        }
                        Forced::Exclude { cell, value } => self.exclude(cell as usize, value)?,
                    },
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Evaluates every clause against the empty cube: falsified clauses
    /// mean no models, unit clauses are propagated.
    pub fn propagate_root(&mut self) -> Result<(), Conflict> {
        let start = self.mark();
        let result = self.propagate_root_inner();
        if result.is_err() {
            self.undo_to(start);
        }
        result
    }

    fn propagate_root_inner(&mut self) -> Result<(), Conflict> {
        let head = self.cube.trail().len();
        let ground = self.ground.clone();
        for clause in 0..ground.num_clauses() {
            match ground.clause_status(clause, self.cube.values()) {
                ClauseStatus::Falsified => return Err(Conflict),
                ClauseStatus::Unit(f) if self.propagation => match f {
                    Forced::Assign { cell, value } => {
                        if self.cube.get(cell as usize) == UNASSIGNED {
                            self.assign(cell as usize, value, false)?;
                        }
                    }
                    Forced::Exclude { cell, value } => self.exclude(cell as usize, value)?,
                },
                _ => {}
            }
        }
        self.propagate_from(head)
    }

    /// Assigns `value` as a decision and propagates to a fixpoint. On
    /// conflict the state is left as it was before the call.
    pub fn assign_and_propagate(&mut self, cell: usize, value: u8) -> Result<(), Conflict> {
        let start = self.mark();
        let head = self.cube.trail().len();
        let result = self.assign(cell, value, true).and_then(|()| self.propagate_from(head));
        if result.is_err() {
            self.undo_to(start);
        }
        result
    }
}

/// Cells in the order the strategy visits them.
pub fn cell_order(layout: &Layout, strategy: Strategy) -> Vec<u32> {
    let mut order: Vec<u32> = (0..layout.num_cells() as u32).collect();
    if strategy == Strategy::Concentric {
        let mut args = [0u8; 3];
        let keys: Vec<u8> = (0..layout.num_cells())
            .map(|c| {
                let s = layout.decompose(c, &mut args);
                args[..layout.arity(s)].iter().copied().max().unwrap_or(0)
            })
            .collect();
        order.sort_by_key(|&c| (keys[c as usize], c));
    }
    order
}
