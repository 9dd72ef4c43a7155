//! Theory language: syntax tree, parser, printer and clause normal form.

mod ast;
mod clausify;
mod parser;
mod print;

pub use ast::{Atom, Formula, Signature, Symbol, SymbolKind, Term, Theory, MAX_ARITY};
pub use clausify::{clausify, Clause, Literal};
pub use parser::{is_variable, parse_theory, signature_of};


impl Theory {
    pub fn clauses(&self) -> Vec<Clause> {
        self.formulas.iter().flat_map(clausify).collect()
    }
}
