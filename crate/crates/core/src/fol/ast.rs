use std::collections::BTreeSet;

/// Largest arity accepted for any symbol.
pub const MAX_ARITY: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Function,
    Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
    pub kind: SymbolKind,
}

/// Function and relation symbols in declaration order, plus the domain
/// elements named by numerals in the axioms.
///
/// Symbol ids index functions first, then relations. The same order fixes
/// table order in cubes, encodings and graphs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Signature {
    pub functions: Vec<Symbol>,
    pub relations: Vec<Symbol>,
    pub pinned: BTreeSet<u8>,
}

impl Signature {
    pub fn num_symbols(&self) -> usize {
        self.functions.len() + self.relations.len()
    }

    pub fn symbol(&self, id: usize) -> &Symbol {
        if id < self.functions.len() {
            &self.functions[id]
        } else {
            &self.relations[id - self.functions.len()]
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.functions.iter().chain(self.relations.iter())
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.symbols().position(|s| s.name == name)
    }

    pub fn is_relation(&self, id: usize) -> bool {
        id >= self.functions.len()
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.is_empty()
    }

    /// Highest arity over all symbols.
    pub fn max_arity(&self) -> usize {
        self.symbols().map(|s| s.arity).max().unwrap_or(0)
    }

    /// Parses a compact `name/arity` list such as `*/2, '/1`; relations are
    /// written `rel name/arity`.
    pub fn from_spec(spec: &str) -> crate::Result<Signature> {
        let mut sig = Signature::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (kind, body) = match item.strip_prefix("rel ") {
                Some(rest) => (SymbolKind::Relation, rest.trim()),
                None => (SymbolKind::Function, item),
            };
            let (name, arity) = body.rsplit_once('/').ok_or_else(|| crate::Error::Syntax {
                line: 1,
                col: 1,
                msg: format!("expected name/arity, found `{item}`"),
            })?;
            let arity: usize = arity.trim().parse().map_err(|_| crate::Error::Syntax {
                line: 1,
                col: 1,
                msg: format!("bad arity in `{item}`"),
            })?;
            sig.push(name.trim(), arity, kind)?;
        }
        sig.validate()?;
        Ok(sig)
    }

    pub(crate) fn push(&mut self, name: &str, arity: usize, kind: SymbolKind) -> crate::Result<()> {
        if let Some(id) = self.lookup(name) {
            let existing = self.symbol(id);
            if existing.kind != kind {
                return Err(crate::Error::KindConflict(name.to_string()));
            }
            if existing.arity != arity {
                return Err(crate::Error::ArityConflict {
                    name: name.to_string(),
                    first: existing.arity,
                    second: arity,
                });
            }
            return Ok(());
        }
        if arity > MAX_ARITY {
            return Err(crate::Error::UnsupportedArity {
                name: name.to_string(),
                arity,
            });
        }
        let sym = Symbol {
            name: name.to_string(),
            arity,
            kind,
        };
        match kind {
            SymbolKind::Function => self.functions.push(sym),
            SymbolKind::Relation => {
                if arity == 0 {
                    return Err(crate::Error::UnsupportedArity {
                        name: name.to_string(),
                        arity,
                    });
                }
                self.relations.push(sym)
            }
        }
        Ok(())
    }

    pub(crate) fn validate(&self) -> crate::Result<()> {
        if self.max_arity() == 0 {
            return Err(crate::Error::DegenerateSignature);
        }
        Ok(())
    }

    /// Renders the signature in the header syntax of theory files.
    pub fn describe(&self) -> String {
        let list = |syms: &[Symbol]| {
            syms.iter()
                .map(|s| format!("{}/{}", s.name, s.arity))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let mut out = String::new();
        if !self.functions.is_empty() {
            out.push_str(&format!("functions {}.", list(&self.functions)));
        }
        if !self.relations.is_empty() {
            if !out.is_empty() {
                out.push('\n');
            }
            out.push_str(&format!("relations {}.", list(&self.relations)));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Apply(String, Vec<Term>),
    Numeral(u8),
}

impl Term {
    pub fn apply(name: &str, args: Vec<Term>) -> Term {
        Term::Apply(name.to_string(), args)
    }

    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub(crate) fn collect_vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Term::Var(v) => {
                if !out.contains(&v.as_str()) {
                    out.push(v);
                }
            }
            Term::Apply(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
            Term::Numeral(_) => {}
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Eq(Term, Term),
    Rel(String, Vec<Term>),
}

impl Atom {
    pub(crate) fn collect_vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Atom::Eq(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Atom::Rel(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn eq(l: Term, r: Term) -> Formula {
        Formula::Atom(Atom::Eq(l, r))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    /// Evaluates the formula under a variable environment. `term` resolves
    /// a symbol application on domain elements; `rel` resolves a relation.
    pub fn eval<F, R>(&self, env: &dyn Fn(&str) -> u8, term: &F, rel: &R) -> bool
    where
        F: Fn(&str, &[u8]) -> u8,
        R: Fn(&str, &[u8]) -> bool,
    {
        match self {
            Formula::Atom(a) => eval_atom(a, env, term, rel),
            Formula::Not(f) => !f.eval(env, term, rel),
            Formula::And(a, b) => a.eval(env, term, rel) && b.eval(env, term, rel),
            Formula::Or(a, b) => a.eval(env, term, rel) || b.eval(env, term, rel),
            Formula::Implies(a, b) => !a.eval(env, term, rel) || b.eval(env, term, rel),
            Formula::Iff(a, b) => a.eval(env, term, rel) == b.eval(env, term, rel),
        }
    }

    /// Variables in first-occurrence order.
    pub fn variables(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Formula::Atom(a) => a.collect_vars(out),
            Formula::Not(f) => f.collect_vars(out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

pub(crate) fn eval_term<F>(t: &Term, env: &dyn Fn(&str) -> u8, term: &F) -> u8
where
    F: Fn(&str, &[u8]) -> u8,
{
    match t {
        Term::Var(v) => env(v),
        Term::Numeral(d) => *d,
        Term::Apply(name, args) => {
            let vals: Vec<u8> = args.iter().map(|a| eval_term(a, env, term)).collect();
            term(name, &vals)
        }
    }
}

pub(crate) fn eval_atom<F, R>(a: &Atom, env: &dyn Fn(&str) -> u8, term: &F, rel: &R) -> bool
where
    F: Fn(&str, &[u8]) -> u8,
    R: Fn(&str, &[u8]) -> bool,
{
    match a {
        Atom::Eq(l, r) => eval_term(l, env, term) == eval_term(r, env, term),
        Atom::Rel(name, args) => {
            let vals: Vec<u8> = args.iter().map(|t| eval_term(t, env, term)).collect();
            rel(name, &vals)
        }
    }
}

/// A parsed theory: its signature and axioms in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    pub signature: Signature,
    pub formulas: Vec<Formula>,
}
