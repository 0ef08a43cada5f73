//! A small language of subspace identities, e.g.
//! `im(delta,1) ∩ ker(d,1) = im(ddelta,1)`.
//!
//! ```text
//! statement := expr [("=" | "⊆" | "<=") expr]
//! expr      := term ("+" term)*
//! term      := factor (("∩" | "&") factor)*
//! factor    := atom | "(" expr ")"
//! atom      := ("im" | "ker") "(" ("d" | "delta" | "ddelta") "," int ")"
//!            | ("all" | "zero") "(" int ")"
//! ```
//!
//! `im(delta,k)` is `δ(Λ^{k+1})` and `im(d,k)` is `d(Λ^{k−1})`, so every
//! atom of degree `k` is a subspace of `Λ^k`.

use std::fmt;

use thiserror::Error;

use super::Cohomology;
use crate::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("atoms of degrees {expected} and {found} in one expression")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AtomKind {
    ImD,
    KerD,
    ImDelta,
    KerDelta,
    ImDdelta,
    KerDdelta,
    All,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub kind: AtomKind,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceExpr {
    Atom(Atom),
    Intersect(Box<SpaceExpr>, Box<SpaceExpr>),
    Sum(Box<SpaceExpr>, Box<SpaceExpr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Subset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub lhs: SpaceExpr,
    pub rhs: Option<(Comparison, SpaceExpr)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceValue {
    Space(Subspace),
    Truth(bool),
}

impl SpaceExpr {
    pub fn atoms(&self) -> Vec<Atom> {
        match self {
            SpaceExpr::Atom(a) => vec![*a],
            SpaceExpr::Intersect(a, b) | SpaceExpr::Sum(a, b) => {
                let mut v = a.atoms();
                v.extend(b.atoms());
                v
            }
        }
    }
}

impl Statement {
    pub fn parse(text: &str) -> Result<Statement, ExprError> {
        let tokens = lex(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let lhs = p.expr()?;
        let rhs = match p.peek() {
            None => None,
            Some((_, Tok::Cmp(c))) => {
                let c = *c;
                p.pos += 1;
                Some((c, p.expr()?))
            }
            Some((offset, t)) => {
                return Err(ExprError::Syntax {
                    offset: *offset,
                    message: format!("unexpected {t:?}"),
                })
            }
        };
        if let Some((offset, t)) = p.peek() {
            return Err(ExprError::Syntax {
                offset: *offset,
                message: format!("trailing {t:?}"),
            });
        }
        Ok(Statement { lhs, rhs })
    }

    /// The common degree of all atoms.
    pub fn degree(&self) -> Result<usize, ExprError> {
        let mut atoms = self.lhs.atoms();
        if let Some((_, r)) = &self.rhs {
            atoms.extend(r.atoms());
        }
        let expected = atoms[0].degree;
        match atoms.iter().find(|a| a.degree != expected) {
            Some(a) => Err(ExprError::DegreeMismatch {
                expected,
                found: a.degree,
            }),
            None => Ok(expected),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    Comma,
    Cap,
    Plus,
    Cmp(Comparison),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                it.next();
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '∩' | '&' => Tok::Cap,
            '⊆' => Tok::Cmp(Comparison::Subset),
            '=' => {
                it.next();
                if matches!(it.peek(), Some((_, '='))) {
                    it.next();
                }
                out.push((i, Tok::Cmp(Comparison::Equal)));
                continue;
            }
            '<' => {
                it.next();
                match it.next() {
                    Some((_, '=')) => {}
                    _ => {
                        return Err(ExprError::Syntax {
                            offset: i,
                            message: "expected '<='".into(),
                        })
                    }
                }
                out.push((i, Tok::Cmp(Comparison::Subset)));
                continue;
            }
            c if c.is_ascii_digit() => {
                let mut v = 0usize;
                while let Some(&(_, d)) = it.peek() {
                    let Some(x) = d.to_digit(10) else { break };
                    v = v * 10 + x as usize;
                    it.next();
                }
                out.push((i, Tok::Int(v)));
                continue;
            }
            c if c.is_alphabetic() => {
                let mut s = String::new();
                while let Some(&(_, d)) = it.peek() {
                    if !d.is_alphanumeric() && d != '_' {
                        break;
                    }
                    s.push(d);
                    it.next();
                }
                out.push((i, if s == "cap" { Tok::Cap } else { Tok::Ident(s) }));
                continue;
            }
            other => {
                return Err(ExprError::Syntax {
                    offset: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        it.next();
        out.push((i, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.tokens.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or_else(
            || self.tokens.last().map_or(0, |(o, _)| o + 1),
            |(o, _)| *o,
        )
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<(), ExprError> {
        match self.peek() {
            Some((_, x)) if *x == t => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected {t:?}")),
        }
    }

    fn expr(&mut self) -> Result<SpaceExpr, ExprError> {
        let mut acc = self.term()?;
        while matches!(self.peek(), Some((_, Tok::Plus))) {
            self.pos += 1;
            acc = SpaceExpr::Sum(Box::new(acc), Box::new(self.term()?));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SpaceExpr, ExprError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Tok::Cap))) {
            self.pos += 1;
            acc = SpaceExpr::Intersect(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SpaceExpr, ExprError> {
        match self.peek().cloned() {
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                self.expect(Tok::LParen)?;
                let kind = match name.as_str() {
                    "all" => AtomKind::All,
                    "zero" => AtomKind::Zero,
                    "im" | "ker" => {
                        let op = match self.peek() {
                            Some((_, Tok::Ident(op))) => op.clone(),
                            _ => return self.err("expected d, delta or ddelta"),
                        };
                        let kind = match (name.as_str(), op.as_str()) {
                            ("im", "d") => AtomKind::ImD,
                            ("ker", "d") => AtomKind::KerD,
                            ("im", "delta") => AtomKind::ImDelta,
                            ("ker", "delta") => AtomKind::KerDelta,
                            ("im", "ddelta") => AtomKind::ImDdelta,
                            ("ker", "ddelta") => AtomKind::KerDdelta,
                            _ => return self.err(format!("unknown operator {op:?}")),
                        };
                        self.pos += 1;
                        self.expect(Tok::Comma)?;
                        kind
                    }
                    _ => return self.err(format!("unknown space {name:?}")),
                };
                let degree = match self.peek() {
                    Some((_, Tok::Int(k))) => *k,
                    _ => return self.err("expected a degree"),
                };
                self.pos += 1;
                self.expect(Tok::RParen)?;
                Ok(SpaceExpr::Atom(Atom { kind, degree }))
            }
            _ => self.err("expected an atom or '('"),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.degree;
        match self.kind {
            AtomKind::ImD => write!(f, "im(d,{k})"),
            AtomKind::KerD => write!(f, "ker(d,{k})"),
            AtomKind::ImDelta => write!(f, "im(delta,{k})"),
            AtomKind::KerDelta => write!(f, "ker(delta,{k})"),
            AtomKind::ImDdelta => write!(f, "im(ddelta,{k})"),
            AtomKind::KerDdelta => write!(f, "ker(ddelta,{k})"),
            AtomKind::All => write!(f, "all({k})"),
            AtomKind::Zero => write!(f, "zero({k})"),
        }
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Atom(a) => write!(f, "{a}"),
            SpaceExpr::Intersect(a, b) => {
                let wrap = |e: &SpaceExpr| matches!(e, SpaceExpr::Sum(..));
                for (i, e) in [a, b].into_iter().enumerate() {
                    if i == 1 {
                        write!(f, " ∩ ")?;
                    }
                    if wrap(e) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            SpaceExpr::Sum(a, b) => {
                if matches!(**b, SpaceExpr::Sum(..)) {
                    write!(f, "{a} + ({b})")
                } else {
                    write!(f, "{a} + {b}")
                }
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lhs)?;
        match &self.rhs {
            Some((Comparison::Equal, r)) => write!(f, " = {r}"),
            Some((Comparison::Subset, r)) => write!(f, " ⊆ {r}"),
            None => Ok(()),
        }
    }
}

impl Cohomology {
    fn eval_atom(&self, a: Atom) -> Result<Subspace, ExprError> {
        let top = self.dim();
        if a.degree > top {
            return Err(ExprError::DegreeOutOfRange {
                degree: a.degree,
                top,
            });
        }
        let k = a.degree;
        let ambient = crate::exterior::binomial(top, k);
        Ok(match a.kind {
            AtomKind::ImD => self.im_d(k).unwrap().clone(),
            AtomKind::KerD => self.ker_d(k).unwrap().clone(),
            AtomKind::ImDelta => self.im_delta(k).unwrap().clone(),
            AtomKind::KerDelta => self.ker_delta(k).unwrap().clone(),
            AtomKind::ImDdelta => self.im_ddelta(k).unwrap().clone(),
            AtomKind::KerDdelta if k == 0 => Subspace::full(ambient),
            AtomKind::KerDdelta => {
                use crate::symplectic::Operator;
                let s = self.structure();
                s.matrix(Operator::D, k - 1)
                    .mul(s.matrix(Operator::Delta, k))
                    .expect("composable")
                    .kernel()
            }
            AtomKind::All => Subspace::full(ambient),
            AtomKind::Zero => Subspace::zero(ambient),
        })
    }

    /// Evaluates an expression to a subspace of `Λ^k`.
    pub fn eval_space(&self, e: &SpaceExpr) -> Result<Subspace, ExprError> {
        match e {
            SpaceExpr::Atom(a) => self.eval_atom(*a),
            SpaceExpr::Intersect(a, b) => Ok(self
                .eval_space(a)?
                .intersect(&self.eval_space(b)?)
                .expect("degrees checked")),
            SpaceExpr::Sum(a, b) => Ok(self
                .eval_space(a)?
                .sum(&self.eval_space(b)?)
                .expect("degrees checked")),
        }
    }

    pub fn eval_space_expr(&self, st: &Statement) -> Result<SpaceValue, ExprError> {
        st.degree()?;
        let lhs = self.eval_space(&st.lhs)?;
        match &st.rhs {
            None => Ok(SpaceValue::Space(lhs)),
            Some((cmp, r)) => {
                let rhs = self.eval_space(r)?;
                Ok(SpaceValue::Truth(match cmp {
                    Comparison::Equal => lhs == rhs,
                    Comparison::Subset => rhs.contains_subspace(&lhs).expect("same ambient"),
                }))
            }
        }
    }

    /// Parses and evaluates in one step.
    pub fn eval_str(&self, text: &str) -> Result<SpaceValue, ExprError> {
        self.eval_space_expr(&Statement::parse(text)?)
    }
}
