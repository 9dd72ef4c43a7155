//! Lexer and recursive-descent parser for theory files.
//!
//! Term operators, tightest first: postfix `'`, prefix `-`, `^` (right
//! associative), `*` and `×`, `+`. Atoms are `t = t`, `t != t`, `t < t` or a
//! relation application `r(t, ...)`. Connectives, tightest first: `~`, `&`,
//! `|`, `->` (right associative), `<->`.

use super::ast::{Atom, Formula, Signature, SymbolKind, Term, Theory};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Op(&'static str),
    LParen,
    RParen,
    Comma,
    Dot,
    Slash,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

/// Operator spellings the lexer recognizes, longest first.
const OPERATORS: &[&str] = &[
    "<->", "->", "!=", "*", "+", "^", "×", "-", "'", "<", "=", "~", "&", "|",
];

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut rest = text;
    while let Some(c) = rest.chars().next() {
        let (tline, tcol) = (line, col);
        let mut advance = |s: &str| {
            for ch in s.chars() {
                if ch == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
            }
        };
        if c == '%' {
            let end = rest.find('\n').unwrap_or(rest.len());
            advance(&rest[..end]);
            rest = &rest[end..];
            continue;
        }
        if c.is_whitespace() {
            advance(&rest[..c.len_utf8()]);
            rest = &rest[c.len_utf8()..];
            continue;
        }
        let (tok, len) = if c.is_ascii_alphabetic() || c == '_' {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            (Tok::Ident(rest[..len].to_string()), len)
        } else if c.is_ascii_digit() {
            let len = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            let value = rest[..len].parse::<u64>().map_err(|_| Error::Syntax {
                line: tline,
                col: tcol,
                msg: "numeral too large".into(),
            })?;
            (Tok::Num(value), len)
        } else {
            match c {
                '(' => (Tok::LParen, 1),
                ')' => (Tok::RParen, 1),
                ',' => (Tok::Comma, 1),
                '.' => (Tok::Dot, 1),
                '/' => (Tok::Slash, 1),
                _ => match OPERATORS.iter().find(|op| rest.starts_with(**op)) {
                    Some(op) => (Tok::Op(op), op.len()),
                    None => {
                        return Err(Error::Syntax {
                            line: tline,
                            col: tcol,
                            msg: format!("unexpected character `{c}`"),
                        })
                    }
                },
            }
        };
        advance(&rest[..len]);
        rest = &rest[len..];
        out.push(Token {
            tok,
            line: tline,
            col: tcol,
        });
    }
    Ok(out)
}

/// True for identifiers in the variable class `[u-z][0-9]*`.
pub fn is_variable(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('u'..='z')) && chars.all(|c| c.is_ascii_digit())
}

fn binary_op_name(op: &str) -> Option<&'static str> {
    match op {
        "*" => Some("*"),
        "×" => Some("×"),
        "+" => Some("+"),
        "^" => Some("^"),
        _ => None,
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    eof: (usize, usize),
}

type PResult<T> = std::result::Result<T, (usize, String)>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_op(&self, op: &str) -> bool {
        matches!(self.peek(), Some(Tok::Op(o)) if *o == op)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err((self.pos, msg.into()))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn to_error(&self, (pos, msg): (usize, String)) -> Error {
        let (line, col) = self
            .toks
            .get(pos)
            .map(|t| (t.line, t.col))
            .unwrap_or(self.eof);
        Error::Syntax { line, col, msg }
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut lhs = self.implication()?;
        while self.peek_op("<->") {
            self.pos += 1;
            let rhs = self.implication()?;
            lhs = Formula::Iff(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> PResult<Formula> {
        let lhs = self.disjunction()?;
        if self.peek_op("->") {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> PResult<Formula> {
        let mut lhs = self.conjunction()?;
        while self.peek_op("|") {
            self.pos += 1;
            let rhs = self.conjunction()?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let mut lhs = self.negation()?;
        while self.peek_op("&") {
            self.pos += 1;
            let rhs = self.negation()?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn negation(&mut self) -> PResult<Formula> {
        if self.peek_op("~") {
            self.pos += 1;
            return Ok(Formula::not(self.negation()?));
        }
        if self.peek() == Some(&Tok::LParen) {
            // Either a parenthesized term starting a comparison or a
            // parenthesized formula; keep whichever parse gets further.
            let start = self.pos;
            let as_atom = self.atom();
            if as_atom.is_ok() {
                return as_atom;
            }
            let atom_err = as_atom.unwrap_err();
            self.pos = start + 1;
            let as_formula = self
                .formula()
                .and_then(|f| self.expect(Tok::RParen, "`)`").map(|_| f));
            return match as_formula {
                Ok(f) => Ok(f),
                Err(e) if e.0 >= atom_err.0 => Err(e),
                Err(_) => Err(atom_err),
            };
        }
        self.atom()
    }

    fn atom(&mut self) -> PResult<Formula> {
        let lhs = self.term()?;
        let op = match self.peek() {
            Some(Tok::Op(o)) if matches!(*o, "=" | "!=" | "<") => *o,
            _ => {
                return match lhs {
                    Term::Apply(name, args) if !args.is_empty() && !is_operator(&name) => {
                        Ok(Formula::Atom(Atom::Rel(name, args)))
                    }
                    _ => self.fail("expected `=`, `!=` or `<`"),
                }
            }
        };
        self.pos += 1;
        let rhs = self.term()?;
        Ok(match op {
            "=" => Formula::eq(lhs, rhs),
            "!=" => Formula::not(Formula::eq(lhs, rhs)),
            _ => Formula::Atom(Atom::Rel("<".into(), vec![lhs, rhs])),
        })
    }

    fn term(&mut self) -> PResult<Term> {
        let mut lhs = self.product()?;
        while self.peek_op("+") {
            self.pos += 1;
            let rhs = self.product()?;
            lhs = Term::apply("+", vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn product(&mut self) -> PResult<Term> {
        let mut lhs = self.power()?;
        loop {
            let name = match self.peek() {
                Some(Tok::Op(o)) if matches!(*o, "*" | "×") => binary_op_name(o).unwrap(),
                _ => break,
            };
            self.pos += 1;
            let rhs = self.power()?;
            lhs = Term::apply(name, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn power(&mut self) -> PResult<Term> {
        let base = self.prefix()?;
        if self.peek_op("^") {
            self.pos += 1;
            let exp = self.power()?;
            return Ok(Term::apply("^", vec![base, exp]));
        }
        Ok(base)
    }

    fn prefix(&mut self) -> PResult<Term> {
        if self.peek_op("-") {
            self.pos += 1;
            return Ok(Term::apply("-", vec![self.prefix()?]));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> PResult<Term> {
        let mut t = self.primary()?;
        while self.peek_op("'") {
            self.pos += 1;
            t = Term::apply("'", vec![t]);
        }
        Ok(t)
    }

    fn primary(&mut self) -> PResult<Term> {
        match self.peek().cloned() {
            Some(Tok::Num(d)) => {
                if d > 252 {
                    return self.fail("numeral exceeds 252");
                }
                self.pos += 1;
                Ok(Term::Numeral(d as u8))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::LParen) {
                    if is_variable(&name) {
                        return self.fail(format!("variable `{name}` cannot be applied"));
                    }
                    self.pos += 1;
                    let mut args = vec![self.term()?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        args.push(self.term()?);
                    }
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(Term::Apply(name, args))
                } else if is_variable(&name) {
                    Ok(Term::Var(name))
                } else {
                    Ok(Term::Apply(name, Vec::new()))
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => self.fail("expected a term"),
        }
    }

    fn header(&mut self, kind: SymbolKind, sig: &mut Signature) -> PResult<()> {
        loop {
            let name = match self.peek().cloned() {
                Some(Tok::Ident(n)) => n,
                Some(Tok::Op(o)) => o.to_string(),
                _ => return self.fail("expected a symbol name"),
            };
            let at = self.pos;
            self.pos += 1;
            self.expect(Tok::Slash, "`/`")?;
            let arity = match self.peek() {
                Some(Tok::Num(a)) => *a as usize,
                _ => return self.fail("expected an arity"),
            };
            self.pos += 1;
            sig.push(&name, arity, kind).map_err(|e| (at, e.to_string()))?;
            match self.peek() {
                Some(Tok::Comma) => self.pos += 1,
                Some(Tok::Dot) => {
                    self.pos += 1;
                    return Ok(());
                }
                _ => return self.fail("expected `,` or `.`"),
            }
        }
    }
}

pub(crate) fn is_operator(name: &str) -> bool {
    matches!(name, "*" | "×" | "+" | "^" | "-" | "'" | "<")
}

/// Parses a theory file. Symbols not declared in a header are added in
/// first-use order after the declared ones.
pub fn parse_theory(text: &str) -> Result<Theory> {
    let toks = lex(text)?;
    let eof = {
        let lines = text.split('\n').count();
        let last = text.rsplit('\n').next().unwrap_or("");
        (lines, last.chars().count() + 1)
    };
    let mut p = Parser { toks, pos: 0, eof };
    let mut sig = Signature::default();
    let mut formulas = Vec::new();
    while p.pos < p.toks.len() {
        let header = match p.peek() {
            Some(Tok::Ident(w)) if w == "functions" => Some(SymbolKind::Function),
            Some(Tok::Ident(w)) if w == "relations" => Some(SymbolKind::Relation),
            _ => None,
        };
        // A header keyword could in principle be a constant; only treat it
        // as a header when a declaration follows.
        let is_header = header.is_some()
            && matches!(p.toks.get(p.pos + 2).map(|t| &t.tok), Some(Tok::Slash));
        if let (true, Some(kind)) = (is_header, header) {
            p.pos += 1;
            p.header(kind, &mut sig).map_err(|e| p.to_error(e))?;
            continue;
        }
        let f = p.formula().map_err(|e| p.to_error(e))?;
        p.expect(Tok::Dot, "`.` after formula")
            .map_err(|e| p.to_error(e))?;
        formulas.push(f);
    }
    for f in &formulas {
        infer_formula(f, &mut sig)?;
    }
    sig.validate()?;
    Ok(Theory {
        signature: sig,
        formulas,
    })
}

/// The signature of a parsed theory.
pub fn signature_of(theory: &Theory) -> &Signature {
    &theory.signature
}

fn infer_formula(f: &Formula, sig: &mut Signature) -> Result<()> {
    match f {
        Formula::Atom(Atom::Eq(l, r)) => {
            infer_term(l, sig)?;
            infer_term(r, sig)
        }
        Formula::Atom(Atom::Rel(name, args)) if name == "<" && args.len() == 2 => {
            infer_term(&args[0], sig)?;
            sig.push(name, 2, SymbolKind::Relation)?;
            infer_term(&args[1], sig)
        }
        Formula::Atom(Atom::Rel(name, args)) => {
            sig.push(name, args.len(), SymbolKind::Relation)?;
            args.iter().try_for_each(|a| infer_term(a, sig))
        }
        Formula::Not(g) => infer_formula(g, sig),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            infer_formula(a, sig)?;
            infer_formula(b, sig)
        }
    }
}

fn infer_term(t: &Term, sig: &mut Signature) -> Result<()> {
    match t {
        Term::Var(_) => Ok(()),
        Term::Numeral(d) => {
            sig.pinned.insert(*d);
            Ok(())
        }
        // Visit symbols in the order they appear in the source text.
        Term::Apply(name, args) if binary_op_name(name).is_some() && args.len() == 2 => {
            infer_term(&args[0], sig)?;
            sig.push(name, 2, SymbolKind::Function)?;
            infer_term(&args[1], sig)
        }
        Term::Apply(name, args) if name == "'" && args.len() == 1 => {
            infer_term(&args[0], sig)?;
            sig.push(name, 1, SymbolKind::Function)
        }
        Term::Apply(name, args) => {
            sig.push(name, args.len(), SymbolKind::Function)?;
            args.iter().try_for_each(|a| infer_term(a, sig))
        }
    }
}
