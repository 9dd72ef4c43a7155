//! The `interpretation(...)` text format for models.
//!
//! ```text
//! interpretation( 2, [number=1], [
//!     function(*(_,_), [0,1,1,0]),
//!     relation(r(_), [0,1]) ]).
//! ```
//!
//! Tables are flattened row-major; relation entries are 0/1. The reader
//! accepts arbitrary whitespace and ignores extra fields in the second
//! bracket.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::fol::{Signature, SymbolKind};
use crate::kernel::{Cube, Layout, FALSE, TRUE, UNASSIGNED};
use crate::{Error, Result};

/// One symbol table as read from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub arity: usize,
    pub kind: SymbolKind,
    pub values: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    pub order: usize,
    pub number: Option<u64>,
    pub tables: Vec<Table>,
    /// Line on which the record starts.
    pub line: usize,
}

/// Writes a total cube; `number` is the 1-based model number.
pub fn write_interpretation(c: &Cube, number: u64) -> String {
    let layout = c.layout();
    let mut out = String::new();
    write!(out, "interpretation( {}, [number={}], [", layout.order(), number).unwrap();
    for (s, symbol) in layout.signature().symbols().enumerate() {
        let head = if symbol.arity == 0 {
            symbol.name.clone()
        } else {
            format!("{}({})", symbol.name, vec!["_"; symbol.arity].join(","))
        };
        let kind = match symbol.kind {
            SymbolKind::Function => "function",
            SymbolKind::Relation => "relation",
        };
        let entries: Vec<String> = c
            .table(s)
            .iter()
            .map(|&v| match v {
                TRUE => "1".to_string(),
                FALSE => "0".to_string(),
                UNASSIGNED => "-".to_string(),
                v => v.to_string(),
            })
            .collect();
        let sep = if s == 0 { "" } else { "," };
        write!(out, "{sep}\n    {kind}({head}, [{}])", entries.join(",")).unwrap();
    }
    out.push_str(" ]).\n");
    out
}

impl Interpretation {
    /// Signature implied by the tables; no pinned elements.
    pub fn signature(&self) -> Result<Signature> {
        let mut spec = Vec::new();
        for t in &self.tables {
            let prefix = if t.kind == SymbolKind::Relation { "rel " } else { "" };
            spec.push(format!("{prefix}{}/{}", t.name, t.arity));
        }
        Signature::from_spec(&spec.join(", "))
    }

    /// The model as a cube over `layout`, which must have the same order
    /// and the same symbols in the same order.
    pub fn to_cube(&self, layout: &Arc<Layout>) -> Result<Cube> {
        let sig = layout.signature();
        let mismatch = |msg: String| Error::SignatureMismatch(format!("record at line {}: {msg}", self.line));
        if self.order != layout.order() {
            return Err(mismatch(format!("order {} but expected {}", self.order, layout.order())));
        }
        if self.tables.len() != sig.num_symbols() {
            return Err(mismatch(format!(
                "{} tables but the signature has {} symbols",
                self.tables.len(),
                sig.num_symbols()
            )));
        }
        let mut values = Vec::with_capacity(layout.num_cells());
        for (t, s) in self.tables.iter().zip(sig.symbols()) {
            if t.name != s.name || t.arity != s.arity || t.kind != s.kind {
                return Err(mismatch(format!("table `{}/{}` where `{}/{}` was expected", t.name, t.arity, s.name, s.arity)));
            }
            let expected = layout.order().pow(t.arity as u32);
            if t.values.len() != expected {
                return Err(Error::Record {
                    line: self.line,
                    msg: format!("`{}` has {} entries, expected {expected}", t.name, t.values.len()),
                });
            }
            for &v in &t.values {
                values.push(match t.kind {
                    SymbolKind::Relation => match v {
                        0 => FALSE,
                        1 => TRUE,
                        _ => {
                            return Err(Error::Record {
                                line: self.line,
                                msg: format!("relation `{}` entry {v} is not 0 or 1", t.name),
                            })
                        }
                    },
                    SymbolKind::Function => v,
                });
            }
        }
        Cube::from_values(layout.clone(), values).map_err(|e| Error::Record {
            line: self.line,
            msg: e.to_string(),
        })
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
}

impl Reader<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Record {
            line: self.line,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == '%' {
                while self.bump().is_some_and(|c| c != '\n') {}
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let mut w = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() || "(),[]".contains(c) {
                break;
            }
            w.push(c);
            self.bump();
        }
        w
    }

    fn number(&mut self) -> Result<usize> {
        let w = self.word();
        w.parse().map_err(|_| self.err(format!("expected a number, found `{w}`")))
    }

    fn record(&mut self) -> Result<Option<Interpretation>> {
        if self.peek().is_none() {
            return Ok(None);
        }
        let line = self.line;
        let head = self.word();
        if head != "interpretation" {
            return Err(self.err(format!("expected `interpretation`, found `{head}`")));
        }
        self.expect('(')?;
        let order = self.number()?;
        self.expect(',')?;
        let mut number = None;
        if self.peek() == Some('[') {
            let mut fields = String::new();
            self.expect('[')?;
            while let Some(c) = self.bump() {
                if c == ']' {
                    break;
                }
                fields.push(c);
            }
            for f in fields.split(',') {
                if let Some(v) = f.trim().strip_prefix("number=") {
                    number = v.trim().parse().ok();
                }
            }
            self.expect(',')?;
        }
        self.expect('[')?;
        let mut tables = Vec::new();
        while self.peek() != Some(']') {
            if !tables.is_empty() {
                self.expect(',')?;
            }
            tables.push(self.table()?);
        }
        self.expect(']')?;
        self.expect(')')?;
        self.expect('.')?;
        Ok(Some(Interpretation {
            order,
            number,
            tables,
            line,
        }))
    }

    fn table(&mut self) -> Result<Table> {
        let kind = match self.word().as_str() {
            "function" => SymbolKind::Function,
            "relation" => SymbolKind::Relation,
            other => return Err(self.err(format!("expected `function` or `relation`, found `{other}`"))),
        };
        self.expect('(')?;
        let name = self.word();
        if name.is_empty() {
            return Err(self.err("missing symbol name"));
        }
        let mut arity = 0;
        if self.peek() == Some('(') {
            self.expect('(')?;
            loop {
                if self.word() != "_" {
                    return Err(self.err("expected `_` in argument list"));
                }
                arity += 1;
                match self.peek() {
                    Some(',') => self.expect(',')?,
                    _ => break,
                }
            }
            self.expect(')')?;
        }
        self.expect(',')?;
        self.expect('[')?;
        let mut values = Vec::new();
        while self.peek() != Some(']') {
            if !values.is_empty() {
                self.expect(',')?;
            }
            let v = self.number()?;
            values.push(u8::try_from(v).map_err(|_| self.err(format!("entry {v} out of range")))?);
        }
        self.expect(']')?;
        self.expect(')')?;
        Ok(Table {
            name,
            arity,
            kind,
            values,
        })
    }
}

/// Iterator over the records in `text`.
pub fn read_interpretations(text: &str) -> impl Iterator<Item = Result<Interpretation>> + '_ {
    let mut reader = Reader {
        chars: text.chars().peekable(),
        line: 1,
    };
    let mut failed = false;
    std::iter::from_fn(move || {
        if failed {
            return None;
        }
        match reader.record() {
            Ok(r) => r.map(Ok),
            Err(e) => {
                failed = true;
                Some(Err(e))
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fol::parse_theory;

    fn layout(spec: &str, n: usize) -> Arc<Layout> {
        Layout::new(Signature::from_spec(spec).unwrap(), n).unwrap()
    }

    #[test]
    fn round_trip() {
        let l = layout("*/2, '/1, e/0, rel r/1", 2);
        let c = Cube::from_values(l.clone(), vec![0, 1, 1, 0, 1, 0, 1, TRUE, FALSE]).unwrap();
        let text = write_interpretation(&c, 4);
        assert!(text.starts_with("interpretation( 2, [number=4], ["));
        assert!(text.contains("function(*(_,_), [0,1,1,0])"));
        assert!(text.contains("function(e, [1])"));
        assert!(text.contains("relation(r(_), [1,0])"));
        let records: Vec<Interpretation> = read_interpretations(&text).collect::<Result<_>>().unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].number, Some(4));
        assert_eq!(records[0].to_cube(&l).unwrap(), c);
        assert_eq!(records[0].signature().unwrap(), *l.signature());
    }

    #[test]
    fn tolerant_reader() {
        let text = "% header\ninterpretation(2,[number=1,seconds=0],[\n function(f(_,_),[\n 0,1,\n 1,0])]).\n\
                    interpretation( 2, [], [function(f(_,_), [1,1,1,1])]).";
        let records: Vec<Interpretation> = read_interpretations(text).collect::<Result<_>>().unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].tables[0].values, vec![0, 1, 1, 0]);
        assert_eq!(records[1].number, None);
        assert_eq!(records[1].line, 6);
    }

    #[test]
    fn malformed_record_reports_line() {
        let text = "interpretation(2, [], [function(f(_,_), [0,1,1,0])]).\n\ninterpretation(2, [], [function(f(_,_), [0,x])]).";
        let results: Vec<Result<Interpretation>> = read_interpretations(text).collect();
        assert!(results[0].is_ok());
        match &results[1] {
            Err(Error::Record { line, .. }) => assert_eq!(*line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mismatches() {
        let text = "interpretation(2, [], [function(g(_,_), [0,1,1,0])]).";
        let r = read_interpretations(text).next().unwrap().unwrap();
        assert!(matches!(r.to_cube(&layout("f/2", 2)), Err(Error::SignatureMismatch(_))));
        assert!(matches!(r.to_cube(&layout("g/2", 3)), Err(Error::SignatureMismatch(_))));
        let short = "interpretation(2, [], [function(g(_,_), [0,1,1])]).";
        let r = read_interpretations(short).next().unwrap().unwrap();
        assert!(matches!(r.to_cube(&layout("g/2", 2)), Err(Error::Record { .. })));
    }

    #[test]
    fn theory_signature_matches_output() {
        let t = parse_theory("x' * (x * y) = y.").unwrap();
        let l = Layout::new(t.signature.clone(), 2).unwrap();
        let c = Cube::from_values(l.clone(), vec![0, 1, 0, 1, 1, 0]).unwrap();
        let r = read_interpretations(&write_interpretation(&c, 1)).next().unwrap().unwrap();
        assert_eq!(r.to_cube(&l).unwrap(), c);
    }
}
