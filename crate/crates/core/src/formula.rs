//! Propositional formulas over `!`, `&`, `|` and `->`.
//!
//! The biconditional and the well-behavedness operator `^` exist only in the
//! concrete syntax. The parser expands them, so every [`Formula`] value is built
//! from the five constructors below and nothing else. No operation in this
//! crate rewrites a formula into an "equivalent" one: C1 is not closed under
//! replacement of equivalents, so syntactic identity is the only equality.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::parser;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

/// Which binary connective a compound formula uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connective {
    And,
    Or,
    Implies,
}

impl Connective {
    pub const ALL: [Connective; 3] = [Connective::And, Connective::Or, Connective::Implies];

    pub fn apply(self, left: Formula, right: Formula) -> Formula {
        match self {
            Connective::And => Formula::and(left, right),
            Connective::Or => Formula::or(left, right),
            Connective::Implies => Formula::implies(left, right),
        }
    }

    pub fn eval(self, left: bool, right: bool) -> bool {
        match self {
            Connective::And => left && right,
            Connective::Or => left || right,
            Connective::Implies => !left || right,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Implies => "->",
        }
    }
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// `a <-> b`, represented as `(a -> b) & (b -> a)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::implies(a.clone(), b.clone()), Formula::implies(b, a))
    }

    /// The well-behavedness formula `f^`, i.e. `!(f & !f)`.
    pub fn circ(&self) -> Formula {
        expand_circ(self)
    }

    /// `!(f^)`: the formula "f behaves badly".
    pub fn badly(&self) -> Formula {
        Formula::not(self.circ())
    }

    pub fn negated(&self) -> Formula {
        Formula::not(self.clone())
    }

    /// Splits a binary formula into its connective and operands.
    pub fn as_binary(&self) -> Option<(Connective, &Formula, &Formula)> {
        match self {
            Formula::And(a, b) => Some((Connective::And, a, b)),
            Formula::Or(a, b) => Some((Connective::Or, a, b)),
            Formula::Implies(a, b) => Some((Connective::Implies, a, b)),
            _ => None,
        }
    }

    /// If this formula is the expansion `!(g & !g)` of some `g^`, returns `g`.
    pub fn circ_operand(&self) -> Option<&Formula> {
        if let Formula::Not(inner) = self {
            if let Formula::And(left, right) = inner.as_ref() {
                if let Formula::Not(neg) = right.as_ref() {
                    if neg.as_ref() == left.as_ref() {
                        return Some(left);
                    }
                }
            }
        }
        None
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// Number of connective and atom occurrences.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// All subformulas, the formula itself included, without duplicates.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    pub(crate) fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.contains(self) {
            return;
        }
        match self {
            Formula::Atom(_) => {}
            Formula::Not(f) => f.collect_subformulas(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
        }
        out.insert(self.clone());
    }

    /// Fully parenthesised ASCII rendering; `parse(render(f)) == f`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// `f^` expanded: `!(f & !f)`.
pub fn expand_circ(f: &Formula) -> Formula {
    Formula::not(Formula::and(f.clone(), Formula::not(f.clone())))
}

/// Atom names occurring in any of `formulas`.
pub fn atoms_of<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for f in formulas {
        f.collect_atoms(&mut out);
    }
    out
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    parser::parse(text)
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parser::parse(s)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(name) => f.write_str(name),
            Formula::Not(inner) => write!(f, "!{inner}"),
            _ => {
                let (conn, a, b) = self.as_binary().expect("binary formula");
                write!(f, "({a} {} {b})", conn.symbol())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn render_examples() {
        let f = Formula::and(Formula::atom("p"), Formula::not(Formula::atom("p")));
        assert_eq!(f.render(), "(p & !p)");
        assert_eq!(Formula::not(f).render(), "!(p & !p)");
        assert_eq!(p("((a | b) -> c)").render(), "((a | b) -> c)");
    }

    #[test]
    fn circ_expansion() {
        let glasses = Formula::atom("glasses");
        assert_eq!(expand_circ(&glasses), p("!(glasses & !glasses)"));
        let twice = expand_circ(&expand_circ(&Formula::atom("p")));
        assert_eq!(twice, p("!(p^ & !(p^))"));
        assert_eq!(twice, p("p^^"));
        assert_eq!(expand_circ(&p("p & q")), p("!((p & q) & !(p & q))"));
        assert_eq!(twice.atoms(), Formula::atom("p").atoms());
    }

    #[test]
    fn circ_operand_recognises_expansions() {
        let g = p("a -> b");
        assert_eq!(g.circ().circ_operand(), Some(&g));
        assert_eq!(p("!(a & !b)").circ_operand(), None);
        assert_eq!(p("a").circ_operand(), None);
    }

    #[test]
    fn atom_sets() {
        let set = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        assert_eq!(p("p & !p").atoms(), set(&["p"]));
        assert_eq!(p("penguin -> bird").atoms(), set(&["bird", "penguin"]));
        assert_eq!(p("a | !a").atoms(), set(&["a"]));
    }

    #[test]
    fn subformulas_include_self_and_atoms() {
        let f = p("!(p -> q)");
        let subs = f.subformulas();
        assert_eq!(subs.len(), 4);
        assert!(subs.contains(&f));
        assert!(subs.contains(&p("p")));
    }
}
