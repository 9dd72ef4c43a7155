use std::fmt;

use super::ast::{Atom, Formula, Term, Theory};

fn is_binary_op(name: &str, args: &[Term]) -> bool {
    args.len() == 2 && matches!(name, "*" | "×" | "+" | "^")
}

fn needs_parens(t: &Term) -> bool {
    matches!(t, Term::Apply(name, args) if is_binary_op(name, args))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |f: &mut fmt::Formatter<'_>, t: &Term| {
            if needs_parens(t) {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        };
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Numeral(d) => write!(f, "{d}"),
            Term::Apply(name, args) if is_binary_op(name, args) => {
                sub(f, &args[0])?;
                write!(f, " {name} ")?;
                sub(f, &args[1])
            }
            Term::Apply(name, args) if name == "-" && args.len() == 1 => {
                write!(f, "-")?;
                sub(f, &args[0])
            }
            Term::Apply(name, args) if name == "'" && args.len() == 1 => {
                let prefixed = matches!(&args[0], Term::Apply(n, a) if n == "-" && a.len() == 1);
                if needs_parens(&args[0]) || prefixed {
                    write!(f, "({})'", args[0])
                } else {
                    write!(f, "{}'", args[0])
                }
            }
            Term::Apply(name, args) if args.is_empty() => write!(f, "{name}"),
            Term::Apply(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Eq(l, r) => write!(f, "{l} = {r}"),
            Atom::Rel(name, args) if name == "<" && args.len() == 2 => {
                write!(f, "{} < {}", args[0], args[1])
            }
            Atom::Rel(name, args) => write!(f, "{}", Term::Apply(name.clone(), args.clone())),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |f: &mut fmt::Formatter<'_>, g: &Formula| match g {
            Formula::Atom(_) | Formula::Not(_) => write!(f, "{g}"),
            _ => write!(f, "({g})"),
        };
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(g) => match &**g {
                Formula::Atom(Atom::Eq(l, r)) => write!(f, "{l} != {r}"),
                Formula::Atom(Atom::Rel(..)) => write!(f, "~{g}"),
                _ => write!(f, "~({g})"),
            },
            Formula::And(a, b) => {
                sub(f, a)?;
                write!(f, " & ")?;
                sub(f, b)
            }
            Formula::Or(a, b) => {
                sub(f, a)?;
                write!(f, " | ")?;
                sub(f, b)
            }
            Formula::Implies(a, b) => {
                sub(f, a)?;
                write!(f, " -> ")?;
                sub(f, b)
            }
            Formula::Iff(a, b) => {
                sub(f, a)?;
                write!(f, " <-> ")?;
                sub(f, b)
            }
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header = self.signature.describe();
        if !header.is_empty() {
            writeln!(f, "{header}")?;
        }
        for formula in &self.formulas {
            writeln!(f, "{formula}.")?;
        }
        Ok(())
    }
}
