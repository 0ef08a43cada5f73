//! The `.lie` description format.
//!
//! ```text
//! # Kodaira–Thurston
//! dim 4
//! names a b c t
//! d t = a^b
//! omega = a^c + b^t
//! ```
//!
//! `dim` comes first and must be even. `names` is optional (default
//! `e1 … e2n`). Each `d <id> = <expr>` gives the differential of one
//! generator; omitted generators are closed. Exactly one `omega` line is
//! required. An expression is a `+`/`-` separated sum of terms
//! `[p or p/q] id ^ id`, or the literal `0`. `#` starts a comment.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exterior::{Form, MAX_DIM};
use crate::lie::{LieAlgebra, LieError};
use crate::symplectic::{SymplecticError, SymplecticStructure};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("dimension {0} is not a positive even number")]
    OddDimension(usize),
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("the first statement must be `dim <n>`")]
    MissingDim,
    #[error("`dim` given twice")]
    DuplicateDim,
    #[error("`names` must directly follow `dim` and appear once")]
    MisplacedNames,
    #[error("expected {expected} names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("generator name {0:?} declared twice")]
    DuplicateName(String),
    #[error("undeclared generator {0:?}")]
    Undeclared(String),
    #[error("second equation for d {0}")]
    DuplicateEquation(String),
    #[error("generator {0:?} repeated in a wedge")]
    RepeatedFactor(String),
    #[error("`omega` given twice")]
    DuplicateOmega,
    #[error("no `omega` line")]
    MissingOmega,
}

/// A parse error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
}

/// A parsed description of a Lie algebra with a 2-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub names: Vec<String>,
    /// `(generator, d generator)` in file order.
    pub mc_equations: Vec<(usize, Form)>,
    pub omega: Form,
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::default().run(text)
    }

    /// Builds a document from an algebra and a 2-form, listing the
    /// non-closed generators in order.
    pub fn from_parts(algebra: &LieAlgebra, omega: Form) -> Self {
        AlgebraDocument {
            dim: algebra.dim(),
            names: algebra.names().to_vec(),
            mc_equations: algebra
                .d_on_generators()
                .iter()
                .enumerate()
                .filter(|(_, f)| !f.is_zero())
                .map(|(i, f)| (i, f.clone()))
                .collect(),
            omega,
        }
    }

    pub fn algebra(&self) -> Result<LieAlgebra, DocumentError> {
        let mut d = vec![Form::zero(self.dim, 2); self.dim];
        for (i, f) in &self.mc_equations {
            d[*i] = f.clone();
        }
        Ok(LieAlgebra::new(self.names.clone(), d)?)
    }

    pub fn structure(&self) -> Result<SymplecticStructure, DocumentError> {
        Ok(SymplecticStructure::build(self.algebra()?, self.omega.clone())?)
    }
}

impl fmt::Display for AlgebraDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        if self.names != LieAlgebra::default_names(self.dim) {
            writeln!(f, "names {}", self.names.join(" "))?;
        }
        for (i, form) in &self.mc_equations {
            writeln!(f, "d {} = {}", self.names[*i], form.display_with(&self.names))?;
        }
        writeln!(f, "omega = {}", self.omega.display_with(&self.names))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(Rational),
    Caret,
    Plus,
    Minus,
    Eq,
}

struct Lexed {
    tokens: Vec<(usize, Tok)>,
    end: usize,
}

fn lex_line(line: &str, lineno: usize) -> Result<Lexed, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    let mut tokens = Vec::new();
    let err = |col: usize, msg: String| ParseError {
        line: lineno,
        column: col + 1,
        kind: ParseErrorKind::Syntax(msg),
    };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '^' | '+' | '-' | '=' => {
                i += 1;
                tokens.push((
                    start,
                    match c {
                        '^' => Tok::Caret,
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        _ => Tok::Eq,
                    },
                ));
            }
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let num: String = chars[start..i].iter().collect();
                let mut value = Rational::from_integer(num.parse().expect("digits"));
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(err(dstart, "expected a denominator".into()));
                    }
                    let den: String = chars[dstart..i].iter().collect();
                    let den = Rational::from_integer(den.parse().expect("digits"));
                    if den.is_zero() {
                        return Err(err(dstart, "zero denominator".into()));
                    }
                    value /= den;
                }
                tokens.push((start, Tok::Num(value)));
            }
            c if c.is_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((start, Tok::Ident(chars[start..i].iter().collect())));
            }
            other => return Err(err(start, format!("unexpected character {other:?}"))),
        }
    }
    Ok(Lexed {
        tokens,
        end: chars.len(),
    })
}

#[derive(Default)]
struct Parser {
    dim: Option<usize>,
    names: Option<Vec<String>>,
    statements_after_dim: usize,
    equations: Vec<(usize, Form)>,
    omega: Option<Form>,
}

impl Parser {
    fn run(mut self, text: &str) -> Result<AlgebraDocument, ParseError> {
        let mut last_line = 1;
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let lexed = lex_line(line, lineno)?;
            if lexed.tokens.is_empty() {
                continue;
            }
            self.statement(lineno, lexed)?;
        }
        let dim = self.dim.ok_or(ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::MissingDim,
        })?;
        let omega = self.omega.ok_or(ParseError {
            line: last_line,
            column: 1,
            kind: ParseErrorKind::MissingOmega,
        })?;
        Ok(AlgebraDocument {
            dim,
            names: self
                .names
                .unwrap_or_else(|| LieAlgebra::default_names(dim)),
            mc_equations: self.equations,
            omega,
        })
    }

    fn names(&self) -> Vec<String> {
        self.names
            .clone()
            .unwrap_or_else(|| LieAlgebra::default_names(self.dim.unwrap_or(0)))
    }

    fn statement(&mut self, line: usize, lexed: Lexed) -> Result<(), ParseError> {
        let at = |col: usize, kind| ParseError {
            line,
            column: col + 1,
            kind,
        };
        let toks = &lexed.tokens;
        let (col0, head) = &toks[0];
        let keyword = match head {
            Tok::Ident(s) => s.as_str(),
            _ => {
                return Err(at(
                    *col0,
                    ParseErrorKind::Syntax("expected dim, names, d or omega".into()),
                ))
            }
        };
        if self.dim.is_none() && keyword != "dim" {
            return Err(at(*col0, ParseErrorKind::MissingDim));
        }
        match keyword {
            "dim" => {
                if self.dim.is_some() {
                    return Err(at(*col0, ParseErrorKind::DuplicateDim));
                }
                let (col, value) = match toks.get(1) {
                    Some((c, Tok::Num(v))) if v.is_integer() && toks.len() == 2 => (*c, v),
                    Some((c, _)) => {
                        return Err(at(*c, ParseErrorKind::Syntax("expected `dim <integer>`".into())))
                    }
                    None => {
                        return Err(at(
                            lexed.end,
                            ParseErrorKind::Syntax("expected `dim <integer>`".into()),
                        ))
                    }
                };
                let d: usize = value.to_integer().try_into().map_err(|_| {
                    at(col, ParseErrorKind::Syntax("dimension out of range".into()))
                })?;
                if d == 0 || d % 2 == 1 {
                    return Err(at(col, ParseErrorKind::OddDimension(d)));
                }
                if d > MAX_DIM {
                    return Err(at(col, ParseErrorKind::DimensionTooLarge(d)));
                }
                self.dim = Some(d);
            }
            "names" => {
                if self.names.is_some() || self.statements_after_dim > 0 {
                    return Err(at(*col0, ParseErrorKind::MisplacedNames));
                }
                let dim = self.dim.unwrap();
                let mut names: Vec<String> = Vec::new();
                for (c, t) in &toks[1..] {
                    match t {
                        Tok::Ident(s) if s == "d" || s == "omega" || s == "dim" || s == "names" => {
                            return Err(at(*c, ParseErrorKind::Syntax(format!("{s:?} is reserved"))))
                        }
                        Tok::Ident(s) => {
                            if names.contains(s) {
                                return Err(at(*c, ParseErrorKind::DuplicateName(s.clone())));
                            }
                            names.push(s.clone());
                        }
                        _ => return Err(at(*c, ParseErrorKind::Syntax("expected a name".into()))),
                    }
                }
                if names.len() != dim {
                    return Err(at(
                        *col0,
                        ParseErrorKind::NameCount {
                            expected: dim,
                            found: names.len(),
                        },
                    ));
                }
                self.names = Some(names);
            }
            "d" => {
                self.statements_after_dim += 1;
                let names = self.names();
                let (gcol, gname) = match toks.get(1) {
                    Some((c, Tok::Ident(s))) => (*c, s.clone()),
                    Some((c, _)) => {
                        return Err(at(*c, ParseErrorKind::Syntax("expected a generator".into())))
                    }
                    None => {
                        return Err(at(lexed.end, ParseErrorKind::Syntax("expected a generator".into())))
                    }
                };
                let gen = names
                    .iter()
                    .position(|n| *n == gname)
                    .ok_or_else(|| at(gcol, ParseErrorKind::Undeclared(gname.clone())))?;
                if self.equations.iter().any(|(g, _)| *g == gen) {
                    return Err(at(*col0, ParseErrorKind::DuplicateEquation(gname)));
                }
                self.expect_eq(line, &lexed, 2)?;
                let form = parse_expr(line, &lexed, 3, &names)?;
                self.equations.push((gen, form));
            }
            "omega" => {
                self.statements_after_dim += 1;
                if self.omega.is_some() {
                    return Err(at(*col0, ParseErrorKind::DuplicateOmega));
                }
                self.expect_eq(line, &lexed, 1)?;
                self.omega = Some(parse_expr(line, &lexed, 2, &self.names())?);
            }
            other => {
                return Err(at(
                    *col0,
                    ParseErrorKind::Syntax(format!("unknown statement {other:?}")),
                ))
            }
        }
        Ok(())
    }

    fn expect_eq(&self, line: usize, lexed: &Lexed, pos: usize) -> Result<(), ParseError> {
        match lexed.tokens.get(pos) {
            Some((_, Tok::Eq)) => Ok(()),
            Some((c, _)) => Err(ParseError {
                line,
                column: c + 1,
                kind: ParseErrorKind::Syntax("expected '='".into()),
            }),
            None => Err(ParseError {
                line,
                column: lexed.end + 1,
                kind: ParseErrorKind::Syntax("expected '='".into()),
            }),
        }
    }
}

fn parse_expr(
    line: usize,
    lexed: &Lexed,
    start: usize,
    names: &[String],
) -> Result<Form, ParseError> {
    let dim = names.len();
    let toks = &lexed.tokens[start..];
    let syntax = |col: usize, msg: &str| ParseError {
        line,
        column: col + 1,
        kind: ParseErrorKind::Syntax(msg.into()),
    };
    if toks.is_empty() {
        return Err(syntax(lexed.end, "expected an expression"));
    }
    if let [(_, Tok::Num(z))] = toks {
        if z.is_zero() {
            return Ok(Form::zero(dim, 2));
        }
    }
    let mut acc = Form::zero(dim, 2);
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        let mut sign = Rational::one();
        match &toks[i].1 {
            Tok::Plus => i += 1,
            Tok::Minus => {
                sign = -sign;
                i += 1;
            }
            _ if first => {}
            _ => return Err(syntax(toks[i].0, "expected '+' or '-'")),
        }
        first = false;
        let mut coeff = sign;
        if let Some((_, Tok::Num(v))) = toks.get(i) {
            coeff *= v;
            i += 1;
        }
        let mut idx = Vec::with_capacity(2);
        for slot in 0..2 {
            if slot == 1 {
                match toks.get(i) {
                    Some((_, Tok::Caret)) => i += 1,
                    Some((c, _)) => return Err(syntax(*c, "expected '^'")),
                    None => return Err(syntax(lexed.end, "expected '^'")),
                }
            }
            match toks.get(i) {
                Some((c, Tok::Ident(s))) => {
                    let g = names.iter().position(|n| n == s).ok_or(ParseError {
                        line,
                        column: c + 1,
                        kind: ParseErrorKind::Undeclared(s.clone()),
                    })?;
                    if idx.contains(&g) {
                        return Err(ParseError {
                            line,
                            column: c + 1,
                            kind: ParseErrorKind::RepeatedFactor(s.clone()),
                        });
                    }
                    idx.push(g);
                    i += 1;
                }
                Some((c, _)) => return Err(syntax(*c, "expected a generator")),
                None => return Err(syntax(lexed.end, "expected a generator")),
            }
        }
        if let Some((c, Tok::Caret)) = toks.get(i) {
            return Err(syntax(*c, "terms must be 2-forms"));
        }
        acc = acc.add(&Form::basis_wedge(dim, &idx).scale(&coeff));
    }
    Ok(acc)
}

/// Parses a standalone 2-form expression over the given names.
pub fn parse_two_form(text: &str, names: &[String]) -> Result<Form, ParseError> {
    let lexed = lex_line(text, 1)?;
    parse_expr(1, &lexed, 0, names)
}

/// A rational written as `p` or `p/q`, with sign.
pub fn format_rational(r: &Rational) -> String {
    if r.is_negative() {
        format!("-{}", -r)
    } else {
        r.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KT: &str = "dim 4\nd e4 = e1^e2\nomega = e1^e3 + e2^e4\n";

    #[test]
    fn parses_kt() {
        let doc = AlgebraDocument::parse(KT).unwrap();
        assert_eq!(doc.dim, 4);
        assert_eq!(doc.mc_equations, vec![(3, Form::basis_wedge(4, &[0, 1]))]);
        assert_eq!(doc.to_string(), KT);
        assert!(doc.structure().is_ok());
    }

    #[test]
    fn parses_solv6_with_rationals_and_comments() {
        let text = "# six\ndim 6\nd e3 = -e1^e3 - e2^e5 # dγ1\nd e4 = e1^e4 - e2^e6\n\
                    d e5 = -e1^e5\nd e6 = e1^e6\nomega = e1^e2 + 1/2 e3^e6 + 2 e4^e5\n";
        let doc = AlgebraDocument::parse(text).unwrap();
        assert_eq!(doc.mc_equations.len(), 4);
        let again = AlgebraDocument::parse(&doc.to_string()).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn custom_names_and_reversed_wedges() {
        let text = "dim 4\nnames a b c t\nd t = -b^a\nomega = a^c + b^t\n";
        let doc = AlgebraDocument::parse(text).unwrap();
        assert_eq!(doc.mc_equations[0].1, Form::basis_wedge(4, &[0, 1]));
        assert_eq!(doc.to_string(), "dim 4\nnames a b c t\nd t = a^b\nomega = a^c + b^t\n");
    }

    #[test]
    fn positioned_errors() {
        let err = AlgebraDocument::parse("dim 3\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
        assert_eq!(err.kind, ParseErrorKind::OddDimension(3));

        let err = AlgebraDocument::parse("dim 4\nd e4 = e1^e9\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 11));
        assert_eq!(err.kind, ParseErrorKind::Undeclared("e9".into()));

        let err = AlgebraDocument::parse("dim 4\nd e4 = e1^e2\nd e4 = 0\nomega = e1^e3\n")
            .unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::DuplicateEquation("e4".into()));

        let err = AlgebraDocument::parse("dim 4\nd e4 = e1 e2\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 11));

        assert_eq!(
            AlgebraDocument::parse("dim 4\nd e4 = e1^e2\n").unwrap_err().kind,
            ParseErrorKind::MissingOmega
        );
        assert_eq!(
            AlgebraDocument::parse("omega = e1^e2\n").unwrap_err().kind,
            ParseErrorKind::MissingDim
        );
        assert_eq!(
            AlgebraDocument::parse("dim 4\nomega = e1^e1\n").unwrap_err().kind,
            ParseErrorKind::RepeatedFactor("e1".into())
        );
    }

    #[test]
    fn zero_equation_round_trips() {
        let doc = AlgebraDocument::parse("dim 2\nd e2 = 0\nomega = e1^e2\n").unwrap();
        assert!(doc.mc_equations[0].1.is_zero());
        assert_eq!(AlgebraDocument::parse(&doc.to_string()).unwrap(), doc);
    }
}
