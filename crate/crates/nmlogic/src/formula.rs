//! Propositional formulas over truth-table functions.
//!
//! Grammar (UTF-8 text): propositions `[a-z][a-z0-9_]*`; infix `& | ^ -> <->`
//! and prefix `!`; constants `0` and `1`; parentheses; named functions
//! `NAME(arg, ...)`. Precedence `! > & > ^ > | > -> > <->`, with `->`
//! right-associative and the other binary operators left-associative.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::func::{BooleanFunction, FunctionLibrary};
use crate::theory::Assignment;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Prop(String),
    Apply(Arc<BooleanFunction>, Vec<Formula>),
}

impl Formula {
    pub fn prop(name: &str) -> Formula {
        Formula::Prop(name.to_string())
    }

    pub fn apply(f: Arc<BooleanFunction>, args: Vec<Formula>) -> Result<Formula> {
        if args.len() != f.arity() {
            return Err(Error::ArityMismatch {
                name: f.name().to_string(),
                expected: f.arity(),
                got: args.len(),
            });
        }
        Ok(Formula::Apply(f, args))
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Prop(p) => {
                out.insert(p.clone());
            }
            Formula::Apply(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
        }
    }

    /// Bottom-up evaluation under a total assignment.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<bool> {
        match self {
            Formula::Prop(p) => assignment
                .get(p)
                .ok_or_else(|| Error::UnboundProposition(p.clone())),
            Formula::Apply(f, args) => {
                let mut vals = Vec::with_capacity(args.len());
                for a in args {
                    vals.push(a.evaluate(assignment)?);
                }
                Ok(f.eval(&vals))
            }
        }
    }

    /// All distinct functions applied anywhere in the formula.
    pub fn functions(&self) -> BTreeSet<Arc<BooleanFunction>> {
        let mut out = BTreeSet::new();
        self.collect_functions(&mut out);
        out
    }

    pub(crate) fn collect_functions(&self, out: &mut BTreeSet<Arc<BooleanFunction>>) {
        if let Formula::Apply(f, args) = self {
            out.insert(f.clone());
            for a in args {
                a.collect_functions(out);
            }
        }
    }

    /// True when the nullary function `name` occurs somewhere in the formula.
    pub fn mentions_nullary(&self, name: &str) -> bool {
        match self {
            Formula::Prop(_) => false,
            Formula::Apply(f, args) => {
                (f.arity() == 0 && f.name() == name)
                    || args.iter().any(|a| a.mentions_nullary(name))
            }
        }
    }

    /// Replaces every occurrence of the nullary function `name` by `with`.
    pub fn replace_nullary(&self, name: &str, with: &Formula) -> Formula {
        match self {
            Formula::Prop(_) => self.clone(),
            Formula::Apply(f, args) => {
                if f.arity() == 0 && f.name() == name {
                    with.clone()
                } else {
                    Formula::Apply(
                        f.clone(),
                        args.iter().map(|a| a.replace_nullary(name, with)).collect(),
                    )
                }
            }
        }
    }
}

/// Parses `text` against `library`. All named functions must resolve.
pub fn parse_formula(text: &str, library: &FunctionLibrary) -> Result<Formula> {
    let ast = parse_ast(text, library, false)?;
    Ok(ast_to_formula(ast))
}

fn ast_to_formula(ast: Ast) -> Formula {
    match ast {
        Ast::Prop(p) => Formula::Prop(p),
        Ast::Apply(f, args) => {
            Formula::Apply(f, args.into_iter().map(ast_to_formula).collect())
        }
        Ast::Belief(_) => unreachable!("belief nodes are rejected by the plain parser"),
    }
}

// ---------------------------------------------------------------------------
// Shared parser for the plain and autoepistemic dialects
// ---------------------------------------------------------------------------

/// Parse tree shared by `Formula` and the autoepistemic dialect.
#[derive(Debug, Clone)]
pub(crate) enum Ast {
    Prop(String),
    Apply(Arc<BooleanFunction>, Vec<Ast>),
    Belief(Box<Ast>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Not,
    And,
    Xor,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '0' => {
                toks.push((i, Tok::Zero));
                i += 1;
            }
            '1' => {
                toks.push((i, Tok::One));
                i += 1;
            }
            '!' => {
                toks.push((i, Tok::Not));
                i += 1;
            }
            '&' => {
                toks.push((i, Tok::And));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Xor));
                i += 1;
            }
            '|' => {
                toks.push((i, Tok::Or));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            ',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((i, Tok::Imp));
                    i += 2;
                } else {
                    return Err(Error::Syntax {
                        position: i,
                        message: "expected `->`".to_string(),
                    });
                }
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    toks.push((i, Tok::Iff));
                    i += 3;
                } else {
                    return Err(Error::Syntax {
                        position: i,
                        message: "expected `<->`".to_string(),
                    });
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    library: &'a FunctionLibrary,
    allow_belief: bool,
    len: usize,
}

pub(crate) fn parse_ast(text: &str, library: &FunctionLibrary, allow_belief: bool) -> Result<Ast> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        library,
        allow_belief,
        len: text.len(),
    };
    let ast = p.iff()?;
    if let Some((at, _)) = p.peek() {
        return Err(Error::Syntax {
            position: at,
            message: "trailing input after formula".to_string(),
        });
    }
    Ok(ast)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<(usize, Tok)> {
        self.toks.get(self.pos).cloned()
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, want: &Tok, what: &str) -> Result<()> {
        match self.bump() {
            Some((_, t)) if &t == want => Ok(()),
            Some((at, _)) => Err(Error::Syntax {
                position: at,
                message: format!("expected {what}"),
            }),
            None => Err(Error::Syntax {
                position: self.len,
                message: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn iff(&mut self) -> Result<Ast> {
        let mut lhs = self.imp()?;
        while matches!(self.peek(), Some((_, Tok::Iff))) {
            self.bump();
            let rhs = self.imp()?;
            lhs = self.builtin("eq", vec![lhs, rhs])?;
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Ast> {
        let lhs = self.or()?;
        if matches!(self.peek(), Some((_, Tok::Imp))) {
            self.bump();
            let rhs = self.imp()?; // right-associative
            return self.builtin("imp", vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Ast> {
        let mut lhs = self.xor()?;
        while matches!(self.peek(), Some((_, Tok::Or))) {
            self.bump();
            let rhs = self.xor()?;
            lhs = self.builtin("or", vec![lhs, rhs])?;
        }
        Ok(lhs)
    }

    fn xor(&mut self) -> Result<Ast> {
        let mut lhs = self.and()?;
        while matches!(self.peek(), Some((_, Tok::Xor))) {
            self.bump();
            let rhs = self.and()?;
            lhs = self.builtin("xor", vec![lhs, rhs])?;
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while matches!(self.peek(), Some((_, Tok::And))) {
            self.bump();
            let rhs = self.unary()?;
            lhs = self.builtin("and", vec![lhs, rhs])?;
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if matches!(self.peek(), Some((_, Tok::Not))) {
            self.bump();
            let arg = self.unary()?;
            return self.builtin("not", vec![arg]);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.bump() {
            Some((_, Tok::Zero)) => self.builtin("const0", vec![]),
            Some((_, Tok::One)) => self.builtin("const1", vec![]),
            Some((_, Tok::LParen)) => {
                let inner = self.iff()?;
                self.eat(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some((at, Tok::Ident(name))) => {
                if matches!(self.peek(), Some((_, Tok::LParen))) {
                    if self.allow_belief && name == "L" {
                        self.bump();
                        let inner = self.iff()?;
                        self.eat(&Tok::RParen, "`)`")?;
                        return Ok(Ast::Belief(Box::new(inner)));
                    }
                    self.bump();
                    let mut args = Vec::new();
                    if !matches!(self.peek(), Some((_, Tok::RParen))) {
                        loop {
                            args.push(self.iff()?);
                            if matches!(self.peek(), Some((_, Tok::Comma))) {
                                self.bump();
                            } else {
                                break;
                            }
                        }
                    }
                    self.eat(&Tok::RParen, "`)` or `,`")?;
                    let f = self.library.lookup(&name)?;
                    if f.arity() != args.len() {
                        return Err(Error::ArityMismatch {
                            name,
                            expected: f.arity(),
                            got: args.len(),
                        });
                    }
                    Ok(Ast::Apply(f, args))
                } else {
                    if !is_prop_name(&name) {
                        return Err(Error::Syntax {
                            position: at,
                            message: format!(
                                "`{name}` is not a proposition (propositions match [a-z][a-z0-9_]*)"
                            ),
                        });
                    }
                    Ok(Ast::Prop(name))
                }
            }
            Some((at, _)) => Err(Error::Syntax {
                position: at,
                message: "expected a proposition, constant, `!`, `(` or a function".to_string(),
            }),
            None => Err(Error::Syntax {
                position: self.len,
                message: "unexpected end of input".to_string(),
            }),
        }
    }

    fn builtin(&self, name: &str, args: Vec<Ast>) -> Result<Ast> {
        let f = self.library.lookup(name)?;
        debug_assert_eq!(f.arity(), args.len());
        Ok(Ast::Apply(f, args))
    }
}

pub(crate) fn is_prop_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

// Precedence contexts: 0 = <->, 1 = ->, 2 = |, 3 = ^, 4 = &, 5 = !, 6 = atom.
fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Prop(_) => 6,
        Formula::Apply(func, args) => match (func.name(), args.len()) {
            ("eq", 2) => 0,
            ("imp", 2) => 1,
            ("or", 2) => 2,
            ("xor", 2) => 3,
            ("and", 2) => 4,
            ("not", 1) => 5,
            _ => 6,
        },
    }
}

fn fmt_prec(formula: &Formula, ctx: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    let p = prec(formula);
    if p < ctx {
        write!(out, "(")?;
        fmt_prec(formula, 0, out)?;
        return write!(out, ")");
    }
    match formula {
        Formula::Prop(name) => write!(out, "{name}"),
        Formula::Apply(f, args) => match (f.name(), args.len()) {
            ("const0", 0) => write!(out, "0"),
            ("const1", 0) => write!(out, "1"),
            ("not", 1) => {
                write!(out, "!")?;
                fmt_prec(&args[0], 5, out)
            }
            ("and", 2) => {
                fmt_prec(&args[0], 4, out)?;
                write!(out, " & ")?;
                fmt_prec(&args[1], 5, out)
            }
            ("xor", 2) => {
                fmt_prec(&args[0], 3, out)?;
                write!(out, " ^ ")?;
                fmt_prec(&args[1], 4, out)
            }
            ("or", 2) => {
                fmt_prec(&args[0], 2, out)?;
                write!(out, " | ")?;
                fmt_prec(&args[1], 3, out)
            }
            ("imp", 2) => {
                fmt_prec(&args[0], 2, out)?;
                write!(out, " -> ")?;
                fmt_prec(&args[1], 1, out)
            }
            ("eq", 2) => {
                fmt_prec(&args[0], 0, out)?;
                write!(out, " <-> ")?;
                fmt_prec(&args[1], 1, out)
            }
            (name, _) => {
                write!(out, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(out, ", ")?;
                    }
                    fmt_prec(a, 0, out)?;
                }
                write!(out, ")")
            }
        },
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 0, f)
    }
}
