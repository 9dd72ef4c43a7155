//! Ground instantiation of clauses over the domain `{0..n-1}`.
//!
//! Ground terms stay nested. A term evaluates against the current cell
//! values to a domain element, to the single unassigned cell that blocks
//! it (all arguments known), or to unknown when an inner cell is missing.

use std::collections::HashMap;
use std::sync::Arc;

use crate::fol::{Atom, Clause, Signature, Term, Theory};
use crate::kernel::{Layout, FALSE, TRUE, UNASSIGNED};
use crate::{Error, Result};

/// One entry position of a symbol table, e.g. `f(0,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub symbol: usize,
    pub args: Vec<u8>,
}

impl Cell {
    pub fn display(&self, sig: &Signature) -> String {
        let name = &sig.symbol(self.symbol).name;
        if self.args.is_empty() {
            name.clone()
        } else {
            let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
            format!("{name}({})", args.join(","))
        }
    }
}

/// All cells of the signature in table order: by symbol, then row-major.
pub fn enumerate_cells(sig: &Signature, n: usize) -> Result<Vec<Cell>> {
    let layout = Layout::new(sig.clone(), n)?;
    Ok((0..layout.num_cells()).map(|i| layout.cell(i)).collect())
}

const NO_ARG: u32 = u32::MAX;
const MAX_VARIABLES: usize = 6;
const MAX_GROUND_LITERALS: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Elem(u8),
    App { symbol: u16, args: [u32; 3] },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GroundLiteral {
    Eq { lhs: u32, rhs: u32, positive: bool },
    Rel { atom: u32, positive: bool },
}

/// Value of a ground term under a partial assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermValue {
    Known(u8),
    /// Every argument is known but this cell is unassigned.
    Blocked(u32),
    Unknown,
}

/// A single-cell consequence of a clause whose other literals are false.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Forced {
    Assign { cell: u32, value: u8 },
    Exclude { cell: u32, value: u8 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiteralStatus {
    True,
    False,
    /// Undetermined, but decided by one blocked cell.
    Pending(Forced),
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseStatus {
    Satisfied,
    Falsified,
    /// All literals but one are false and the last one can be forced.
    Unit(Forced),
    Open,
}

/// A clause listed under a cell. `via` is the application node that reads
/// the cell when some argument is itself an application; the entry only
/// applies while that node's arguments evaluate to the cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub clause: u32,
    via: u32,
    /// When the only nested argument reads a fixed cell, the guard is that
    /// cell holding `value`.
    guard_cell: u32,
    guard_value: u8,
}

const DIRECT: u32 = u32::MAX;

/// Ground clauses over one layout together with a cell occurrence index.
#[derive(Debug)]
pub struct GroundClauseSet {
    layout: Arc<Layout>,
    n: u32,
    offsets: Vec<u32>,
    arities: Vec<u8>,
    nodes: Vec<Node>,
    literals: Vec<GroundLiteral>,
    clause_starts: Vec<u32>,
    occurrences: Vec<Vec<Occurrence>>,
    instances: u64,
}

struct Builder<'a> {
    layout: &'a Layout,
    interned: HashMap<Node, u32>,
    nodes: Vec<Node>,
}

impl Builder<'_> {
    fn intern(&mut self, node: Node) -> u32 {
        if let Some(&id) = self.interned.get(&node) {
            return id;
        }
        let id = self.nodes.len() as u32;
        self.nodes.push(node);
        self.interned.insert(node, id);
        id
    }

    fn term(&mut self, t: &Term, vars: &[&str], env: &[u8]) -> Result<u32> {
        let node = match t {
            Term::Var(v) => Node::Elem(env[vars.iter().position(|x| x == v).unwrap()]),
            Term::Numeral(d) => {
                if *d as usize >= self.layout.order() {
                    return Err(Error::NumeralOutOfRange {
                        numeral: *d,
                        n: self.layout.order(),
                    });
                }
                Node::Elem(*d)
            }
            Term::Apply(name, args) => {
                let symbol = self.symbol(name, args.len())?;
                let mut ids = [NO_ARG; 3];
                for (slot, a) in ids.iter_mut().zip(args) {
                    *slot = self.term(a, vars, env)?;
                }
                Node::App { symbol, args: ids }
            }
        };
        Ok(self.intern(node))
    }

    fn symbol(&self, name: &str, arity: usize) -> Result<u16> {
        let sig = self.layout.signature();
        let id = sig
            .lookup(name)
            .ok_or_else(|| Error::SignatureMismatch(format!("unknown symbol `{name}`")))?;
        if sig.symbol(id).arity != arity {
            return Err(Error::ArityConflict {
                name: name.to_string(),
                first: sig.symbol(id).arity,
                second: arity,
            });
        }
        Ok(id as u16)
    }
}

/// Grounds a whole theory at order `n`.
pub fn ground_theory(theory: &Theory, n: usize) -> Result<GroundClauseSet> {
    let layout = Layout::new(theory.signature.clone(), n)?;
    ground_clauses(&theory.clauses(), layout)
}

/// Instantiates every clause with all `n^v` variable assignments, drops
/// tautologies and duplicate literals, and indexes clauses by cell.
pub fn ground_clauses(clauses: &[Clause], layout: Arc<Layout>) -> Result<GroundClauseSet> {
    let n = layout.order();
    let mut total: u128 = 0;
    for c in clauses {
        let v = c.variables().len();
        if v > MAX_VARIABLES {
            return Err(Error::TooManyVariables(v));
        }
        total += c.literals.len() as u128 * (n as u128).pow(v as u32);
    }
    if total > MAX_GROUND_LITERALS {
        return Err(Error::GroundingOverflow(total));
    }

    let mut b = Builder {
        layout: &layout,
        interned: HashMap::new(),
        nodes: Vec::new(),
    };
    let mut literals = Vec::new();
    let mut clause_starts = vec![0u32];
    let mut instances = 0u64;
    for clause in clauses {
        let vars = clause.variables();
        let mut env = vec![0u8; vars.len()];
        loop {
            instances += 1;
            let mut lits = Vec::with_capacity(clause.literals.len());
            for lit in &clause.literals {
                let g = match &lit.atom {
                    Atom::Eq(l, r) => GroundLiteral::Eq {
                        lhs: b.term(l, &vars, &env)?,
                        rhs: b.term(r, &vars, &env)?,
                        positive: lit.positive,
                    },
                    Atom::Rel(name, args) => GroundLiteral::Rel {
                        atom: b.term(&Term::Apply(name.clone(), args.clone()), &vars, &env)?,
                        positive: lit.positive,
                    },
                };
                lits.push(g);
            }
            if let Some(lits) = simplify_ground(&b.nodes, lits) {
                literals.extend(lits);
                clause_starts.push(literals.len() as u32);
            }
            if !next_assignment(&mut env, n) {
                break;
            }
        }
    }

    let arities: Vec<u8> = (0..layout.num_symbols()).map(|s| layout.arity(s) as u8).collect();
    let offsets: Vec<u32> = (0..layout.num_symbols())
        .map(|s| layout.symbol_range(s).start as u32)
        .collect();
    let mut set = GroundClauseSet {
        n: n as u32,
        offsets,
        arities,
        nodes: b.nodes,
        literals,
        clause_starts,
        occurrences: vec![Vec::new(); layout.num_cells()],
        instances,
        layout,
    };
    set.build_occurrences();
    Ok(set)
}

/// Odometer over `{0..n-1}^k`; false once it wraps around.
fn next_assignment(env: &mut [u8], n: usize) -> bool {
    for slot in env.iter_mut().rev() {
        if (*slot as usize) + 1 < n {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

fn simplify_ground(nodes: &[Node], lits: Vec<GroundLiteral>) -> Option<Vec<GroundLiteral>> {
    let mut out: Vec<GroundLiteral> = Vec::with_capacity(lits.len());
    for lit in lits {
        if let GroundLiteral::Eq { lhs, rhs, positive } = lit {
            let decided = if lhs == rhs {
                Some(true)
            } else {
                match (nodes[lhs as usize], nodes[rhs as usize]) {
                    (Node::Elem(_), Node::Elem(_)) => Some(false),
                    _ => None,
                }
            };
            match decided {
                Some(holds) if holds == positive => return None,
                Some(_) => continue,
                None => {}
            }
        }
        let mut duplicate = false;
        for o in &out {
            match same_atom(o, &lit) {
                Some(true) => duplicate = true,
                Some(false) => return None,
                None => {}
            }
        }
        if !duplicate {
            out.push(lit);
        }
    }
    Some(out)
}

/// `Some(same polarity)` when the literals share their atom.
fn same_atom(a: &GroundLiteral, b: &GroundLiteral) -> Option<bool> {
    match (*a, *b) {
        (
            GroundLiteral::Eq { lhs: l1, rhs: r1, positive: p1 },
            GroundLiteral::Eq { lhs: l2, rhs: r2, positive: p2 },
        ) if (l1 == l2 && r1 == r2) || (l1 == r2 && r1 == l2) => Some(p1 == p2),
        (
            GroundLiteral::Rel { atom: a1, positive: p1 },
            GroundLiteral::Rel { atom: a2, positive: p2 },
        ) if a1 == a2 => Some(p1 == p2),
        _ => None,
    }
}

impl GroundClauseSet {
    pub fn layout(&self) -> &Arc<Layout> {
        &self.layout
    }

    pub fn num_clauses(&self) -> usize {
        self.clause_starts.len() - 1
    }

    /// Instances generated before simplification.
    pub fn instances(&self) -> u64 {
        self.instances
    }

    pub fn num_literals(&self, clause: usize) -> usize {
        (self.clause_starts[clause + 1] - self.clause_starts[clause]) as usize
    }

    /// Clauses whose evaluation can read `cell`, with the guard used by
    /// [`GroundClauseSet::reads`].
    pub fn occurrences(&self, cell: usize) -> &[Occurrence] {
        &self.occurrences[cell]
    }

    /// Whether the clause of `occ` currently reads `cell`. Entries reached
    /// through a nested argument are checked against the argument values.
    pub fn reads(&self, occ: Occurrence, cell: usize, values: &[u8]) -> bool {
        if occ.via == DIRECT {
            return true;
        }
        if occ.guard_cell != DIRECT {
            return values[occ.guard_cell as usize] == occ.guard_value;
        }
        let Node::App { symbol, args } = self.nodes[occ.via as usize] else {
            return true;
        };
        let mut idx = 0u32;
        for &a in &args[..self.arities[symbol as usize] as usize] {
            match self.eval_node(a, values) {
                TermValue::Known(d) => idx = idx * self.n + d as u32,
                _ => return false,
            }
        }
        (self.offsets[symbol as usize] + idx) as usize == cell
    }

    fn literals_of(&self, clause: usize) -> &[GroundLiteral] {
        &self.literals[self.clause_starts[clause] as usize..self.clause_starts[clause + 1] as usize]
    }

    /// Indexes each clause under every cell any evaluation of its terms may
    /// read. A nested argument can take any value, so `f(g(0), 1)` is listed
    /// under `g(0)` and, guarded by the `f` node, under every `f(d, 1)`.
    fn build_occurrences(&mut self) {
        let mut cells = Vec::new();
        for clause in 0..self.num_clauses() {
            cells.clear();
            for lit in self.literals_of(clause) {
                match *lit {
                    GroundLiteral::Eq { lhs, rhs, .. } => {
                        self.reachable_cells(lhs, &mut cells);
                        self.reachable_cells(rhs, &mut cells);
                    }
                    GroundLiteral::Rel { atom, .. } => self.reachable_cells(atom, &mut cells),
                }
            }
            cells.sort_unstable();
            cells.dedup();
            // a direct read sorts last in its group and makes guarded reads
            // of the same cell redundant
            for group in cells.chunk_by(|a, b| a.0 == b.0) {
                let (c, last) = group[group.len() - 1];
                let entries = if last == DIRECT { &group[group.len() - 1..] } else { group };
                for &(_, via) in entries {
                    let (guard_cell, guard_value) = self.simple_guard(via, c);
                    self.occurrences[c as usize].push(Occurrence {
                        clause: clause as u32,
                        via,
                        guard_cell,
                        guard_value,
                    });
                }
            }
        }
    }

    /// For a node `f(.., g(a..), ..)` whose one nested argument has only
    /// element arguments, the cell of `g(a..)` and the value it must hold
    /// for the node to read `cell`.
    fn simple_guard(&self, via: u32, cell: u32) -> (u32, u8) {
        let none = (DIRECT, 0);
        if via == DIRECT {
            return none;
        }
        let Node::App { symbol, args } = self.nodes[via as usize] else {
            return none;
        };
        let k = self.arities[symbol as usize] as usize;
        let nested: Vec<usize> = (0..k)
            .filter(|&i| matches!(self.nodes[args[i] as usize], Node::App { .. }))
            .collect();
        let [i] = nested[..] else {
            return none;
        };
        let Node::App { symbol: inner, args: inner_args } = self.nodes[args[i] as usize] else {
            return none;
        };
        let mut idx = 0u32;
        for &a in &inner_args[..self.arities[inner as usize] as usize] {
            match self.nodes[a as usize] {
                Node::Elem(d) => idx = idx * self.n + d as u32,
                Node::App { .. } => return none,
            }
        }
        // digit i of the outer cell's argument tuple
        let local = cell - self.offsets[symbol as usize];
        let value = local / self.n.pow((k - 1 - i) as u32) % self.n;
        (self.offsets[inner as usize] + idx, value as u8)
    }

    fn reachable_cells(&self, node: u32, out: &mut Vec<(u32, u32)>) {
        let Node::App { symbol, args } = self.nodes[node as usize] else {
            return;
        };
        let k = self.arities[symbol as usize] as usize;
        let mut choices: Vec<Vec<u32>> = Vec::with_capacity(k);
        let mut via = DIRECT;
        for &a in &args[..k] {
            match self.nodes[a as usize] {
                Node::Elem(d) => choices.push(vec![d as u32]),
                Node::App { .. } => {
                    self.reachable_cells(a, out);
                    choices.push((0..self.n).collect());
                    via = node;
                }
            }
        }
        let mut idx = vec![0usize; k];
        loop {
            let mut cell = 0u32;
            for (i, c) in choices.iter().enumerate() {
                cell = cell * self.n + c[idx[i]];
            }
            out.push((self.offsets[symbol as usize] + cell, via));
            let mut pos = k;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    fn eval_node(&self, node: u32, values: &[u8]) -> TermValue {
        match self.nodes[node as usize] {
            Node::Elem(d) => TermValue::Known(d),
            Node::App { symbol, args } => {
                let k = self.arities[symbol as usize] as usize;
                let mut idx = 0u32;
                for &a in &args[..k] {
                    match self.eval_node(a, values) {
                        TermValue::Known(d) => idx = idx * self.n + d as u32,
                        _ => return TermValue::Unknown,
                    }
                }
                let cell = self.offsets[symbol as usize] + idx;
                match values[cell as usize] {
                    UNASSIGNED => TermValue::Blocked(cell),
                    v => TermValue::Known(v),
                }
            }
        }
    }

    fn literal_status(&self, lit: GroundLiteral, values: &[u8]) -> LiteralStatus {
        match lit {
            GroundLiteral::Eq { lhs, rhs, positive } => {
                match (self.eval_node(lhs, values), self.eval_node(rhs, values)) {
                    (TermValue::Known(a), TermValue::Known(b)) => {
                        if (a == b) == positive {
                            LiteralStatus::True
                        } else {
                            LiteralStatus::False
                        }
                    }
                    (TermValue::Known(value), TermValue::Blocked(cell))
                    | (TermValue::Blocked(cell), TermValue::Known(value)) => {
                        LiteralStatus::Pending(if positive {
                            Forced::Assign { cell, value }
                        } else {
                            Forced::Exclude { cell, value }
                        })
                    }
                    _ => LiteralStatus::Unknown,
                }
            }
            GroundLiteral::Rel { atom, positive } => match self.eval_node(atom, values) {
                TermValue::Known(v) => {
                    if (v == TRUE) == positive {
                        LiteralStatus::True
                    } else {
                        LiteralStatus::False
                    }
                }
                TermValue::Blocked(cell) => LiteralStatus::Pending(Forced::Assign {
                    cell,
                    value: if positive { TRUE } else { FALSE },
                }),
                TermValue::Unknown => LiteralStatus::Unknown,
            },
        }
    }

    /// Status of one clause under the given cell values.
    pub fn clause_status(&self, clause: usize, values: &[u8]) -> ClauseStatus {
        let mut open = 0;
        let mut forced = None;
        for &lit in self.literals_of(clause) {
            match self.literal_status(lit, values) {
                LiteralStatus::True => return ClauseStatus::Satisfied,
                LiteralStatus::False => {}
                LiteralStatus::Pending(f) => {
                    open += 1;
                    forced = Some(f);
                }
                LiteralStatus::Unknown => {
                    open += 1;
                    forced = None;
                }
            }
        }
        match (open, forced) {
            (0, _) => ClauseStatus::Falsified,
            (1, Some(f)) => ClauseStatus::Unit(f),
            _ => ClauseStatus::Open,
        }
    }

    /// Status of each literal of a clause, in order.
    pub fn literal_statuses(&self, clause: usize, values: &[u8]) -> Vec<LiteralStatus> {
        self.literals_of(clause)
            .iter()
            .map(|&l| self.literal_status(l, values))
            .collect()
    }

    /// Cells actually read when evaluating a clause under total values.
    pub fn cells_read(&self, clause: usize, values: &[u8]) -> Vec<u32> {
        let mut out = Vec::new();
        for lit in self.literals_of(clause) {
            match *lit {
                GroundLiteral::Eq { lhs, rhs, .. } => {
                    self.cells_read_node(lhs, values, &mut out);
                    self.cells_read_node(rhs, values, &mut out);
                }
                GroundLiteral::Rel { atom, .. } => self.cells_read_node(atom, values, &mut out),
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn cells_read_node(&self, node: u32, values: &[u8], out: &mut Vec<u32>) {
        if let Node::App { symbol, args } = self.nodes[node as usize] {
            let k = self.arities[symbol as usize] as usize;
            for &a in &args[..k] {
                self.cells_read_node(a, values, out);
            }
            if let TermValue::Known(_) | TermValue::Blocked(_) = self.eval_node(node, values) {
                let mut idx = 0u32;
                for &a in &args[..k] {
                    if let TermValue::Known(d) = self.eval_node(a, values) {
                        idx = idx * self.n + d as u32;
                    }
                }
                out.push(self.offsets[symbol as usize] + idx);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fol::parse_theory;

    #[test]
    fn guarded_occurrences_match_cells_read() {
        let t = parse_theory(
            "x * (y * z) = y * (x * z).\n(x + -y) * x = x.\nr(x * y, -x) -> x + (y + (x * y)) = 0.",
        )
        .unwrap();
        let g = ground_theory(&t, 3).unwrap();
        let cells = g.layout().num_cells();
        let mut state = 12345u64;
        for _ in 0..40 {
            let values: Vec<u8> = (0..cells)
                .map(|c| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let r = (state >> 33) as u8;
                    match (r % 3, g.layout().is_relation(g.layout().symbol_of(c))) {
                        (0, _) => UNASSIGNED,
                        (1, true) => TRUE,
                        (_, true) => FALSE,
                        (_, false) => (r / 3) % 3,
                    }
                })
                .collect();
            for cell in 0..cells {
                let mut via_index: Vec<u32> = g
                    .occurrences(cell)
                    .iter()
                    .filter(|o| g.reads(**o, cell, &values))
                    .map(|o| o.clause)
                    .collect();
                via_index.sort_unstable();
                via_index.dedup();
                let direct: Vec<u32> = (0..g.num_clauses() as u32)
                    .filter(|&c| g.cells_read(c as usize, &values).contains(&(cell as u32)))
                    .collect();
                assert_eq!(via_index, direct, "cell {cell}");
            }
        }
    }

    #[test]
    fn binary_cells_row_major() {
        let sig = Signature::from_spec("f/2").unwrap();
        let cells = enumerate_cells(&sig, 2).unwrap();
        let shown: Vec<String> = cells.iter().map(|c| c.display(&sig)).collect();
        assert_eq!(shown, ["f(0,0)", "f(0,1)", "f(1,0)", "f(1,1)"]);
    }

    #[test]
    fn nullary_then_unary() {
        let sig = Signature::from_spec("c/0, g/1").unwrap();
        let shown: Vec<String> = enumerate_cells(&sig, 3)
            .unwrap()
            .iter()
            .map(|c| c.display(&sig))
            .collect();
        assert_eq!(shown, ["c", "g(0)", "g(1)", "g(2)"]);
    }

    #[test]
    fn involutive_lattice_cell_count() {
        // *: 2^2, +: 2^2, -: 2^1
        let t = parse_theory("(x * y) * z = x * (y * z). (x + y) + z = x + (y + z). --x = x.").unwrap();
        assert_eq!(enumerate_cells(&t.signature, 2).unwrap().len(), 10);
    }

    #[test]
    fn commutativity_grounding() {
        let t = parse_theory("x * y = y * x.").unwrap();
        let g = ground_theory(&t, 2).unwrap();
        assert_eq!(g.instances(), 4);
        assert_eq!(g.num_clauses(), 2);
    }

    #[test]
    fn reflexivity_grounds_to_nothing() {
        let t = parse_theory("functions f/1.\nx = x.").unwrap();
        for n in 2..5 {
            assert_eq!(ground_theory(&t, n).unwrap().num_clauses(), 0);
        }
    }

    #[test]
    fn cancellation_instances() {
        let t = parse_theory("x * y = x * z -> y = z.").unwrap();
        let g = ground_theory(&t, 3).unwrap();
        assert_eq!(g.instances(), 27);
        // y = z instances are tautologies
        assert_eq!(g.num_clauses(), 18);
    }

    #[test]
    fn variable_cap() {
        let t = parse_theory("f(f(f(x, y, z), f(u, v, w), f(x1, x, x)), x, y) = x.").unwrap();
        assert_eq!(ground_theory(&t, 2).unwrap_err(), Error::TooManyVariables(7));
    }

    #[test]
    fn overflow_guard() {
        let t = parse_theory("f(f(x, y, z), f(u, v, w), x) = y.").unwrap();
        assert!(matches!(
            ground_theory(&t, 30),
            Err(Error::GroundingOverflow(_))
        ));
    }

    #[test]
    fn numeral_range_checked() {
        let t = parse_theory("x * 3 = x.").unwrap();
        assert!(matches!(
            ground_theory(&t, 3),
            Err(Error::NumeralOutOfRange { numeral: 3, n: 3 })
        ));
    }

    #[test]
    fn nested_terms_report_blocking_cell() {
        let t = parse_theory("(x * y) * x = x.").unwrap();
        let g = ground_theory(&t, 2).unwrap();
        let mut values = vec![UNASSIGNED; 4];
        // instance x=0, y=1: (0*1)*0 = 0
        let clause = 1;
        assert_eq!(g.clause_status(clause, &values), ClauseStatus::Open);
        values[1] = 1; // 0*1 = 1, so the cell 1*0 must be 0
        assert_eq!(
            g.clause_status(clause, &values),
            ClauseStatus::Unit(Forced::Assign { cell: 2, value: 0 })
        );
        values[2] = 1;
        assert_eq!(g.clause_status(clause, &values), ClauseStatus::Falsified);
    }

    #[test]
    fn relation_literals() {
        let t = parse_theory("r(x) | f(x) = x.").unwrap();
        let g = ground_theory(&t, 2).unwrap();
        // cells: f(0) f(1) r(0) r(1)
        let mut values = vec![1, UNASSIGNED, UNASSIGNED, UNASSIGNED];
        assert_eq!(
            g.clause_status(0, &values),
            ClauseStatus::Unit(Forced::Assign { cell: 2, value: TRUE })
        );
        values[2] = FALSE;
        assert_eq!(g.clause_status(0, &values), ClauseStatus::Falsified);
    }
}
