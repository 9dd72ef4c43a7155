use super::ast::{Atom, Formula, Term};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    fn complements(&self, other: &Literal) -> bool {
        self.positive != other.positive && same_atom(&self.atom, &other.atom)
    }

    fn duplicates(&self, other: &Literal) -> bool {
        self.positive == other.positive && same_atom(&self.atom, &other.atom)
    }
}

/// Atoms equal up to the symmetry of equality.
fn same_atom(a: &Atom, b: &Atom) -> bool {
    match (a, b) {
        (Atom::Eq(l1, r1), Atom::Eq(l2, r2)) => (l1 == l2 && r1 == r2) || (l1 == r2 && r1 == l2),
        _ => a == b,
    }
}

/// A disjunction of literals over implicitly universally quantified
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn variables(&self) -> Vec<&str> {
        let mut out = Vec::new();
        for lit in &self.literals {
            lit.atom.collect_vars(&mut out);
        }
        out
    }
}

#[derive(Debug, Clone)]
enum Nnf {
    Lit(Literal),
    And(Vec<Nnf>),
    Or(Vec<Nnf>),
}

fn nnf(f: &Formula, positive: bool) -> Nnf {
    match f {
        Formula::Atom(a) => Nnf::Lit(Literal {
            atom: a.clone(),
            positive,
        }),
        Formula::Not(g) => nnf(g, !positive),
        Formula::And(a, b) if positive => Nnf::And(vec![nnf(a, true), nnf(b, true)]),
        Formula::And(a, b) => Nnf::Or(vec![nnf(a, false), nnf(b, false)]),
        Formula::Or(a, b) if positive => Nnf::Or(vec![nnf(a, true), nnf(b, true)]),
        Formula::Or(a, b) => Nnf::And(vec![nnf(a, false), nnf(b, false)]),
        Formula::Implies(a, b) if positive => Nnf::Or(vec![nnf(a, false), nnf(b, true)]),
        Formula::Implies(a, b) => Nnf::And(vec![nnf(a, true), nnf(b, false)]),
        // a <-> b  ==  (~a | b) & (~b | a)
        Formula::Iff(a, b) if positive => Nnf::And(vec![
            Nnf::Or(vec![nnf(a, false), nnf(b, true)]),
            Nnf::Or(vec![nnf(b, false), nnf(a, true)]),
        ]),
        // ~(a <-> b)  ==  (a | b) & (~a | ~b)
        Formula::Iff(a, b) => Nnf::And(vec![
            Nnf::Or(vec![nnf(a, true), nnf(b, true)]),
            Nnf::Or(vec![nnf(a, false), nnf(b, false)]),
        ]),
    }
}

fn cnf(f: Nnf) -> Vec<Vec<Literal>> {
    match f {
        Nnf::Lit(l) => vec![vec![l]],
        Nnf::And(parts) => parts.into_iter().flat_map(cnf).collect(),
        Nnf::Or(parts) => {
            let mut acc: Vec<Vec<Literal>> = vec![Vec::new()];
            for part in parts {
                let rhs = cnf(part);
                let mut next = Vec::with_capacity(acc.len() * rhs.len());
                for a in &acc {
                    for b in &rhs {
                        let mut c = a.clone();
                        c.extend(b.iter().cloned());
                        next.push(c);
                    }
                }
                acc = next;
            }
            acc
        }
    }
}

fn is_trivial_eq(lit: &Literal) -> bool {
    matches!(&lit.atom, Atom::Eq(l, r) if l == r)
}

fn distinct_numerals(lit: &Literal) -> bool {
    matches!(&lit.atom, Atom::Eq(Term::Numeral(a), Term::Numeral(b)) if a != b)
}

/// Simplifies a raw disjunction: drops false literals (`t != t`, `i = j` for
/// distinct numerals) and duplicates; returns `None` for tautologies.
pub(crate) fn simplify(literals: Vec<Literal>) -> Option<Clause> {
    let mut out: Vec<Literal> = Vec::with_capacity(literals.len());
    for lit in literals {
        let trivially_true = (is_trivial_eq(&lit) && lit.positive)
            || (distinct_numerals(&lit) && !lit.positive);
        if trivially_true {
            return None;
        }
        if is_trivial_eq(&lit) || distinct_numerals(&lit) {
            continue;
        }
        if out.iter().any(|o| o.complements(&lit)) {
            return None;
        }
        if !out.iter().any(|o| o.duplicates(&lit)) {
            out.push(lit);
        }
    }
    Some(Clause { literals: out })
}

/// Converts a formula to clauses by negation normal form and distribution.
/// Nested terms are kept as they are.
pub fn clausify(formula: &Formula) -> Vec<Clause> {
    cnf(nnf(formula, true))
        .into_iter()
        .filter_map(simplify)
        .collect()
}
