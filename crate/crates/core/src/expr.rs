//! A small language for naming groups on the command line.
//!
//! ```text
//! expr := FAMILY "(" INT ")"
//!       | "product(" expr "," expr ")"
//!       | "semidirect(" INT "," INT "," INT ")"
//!       | "quotient(" expr "," "[" word ("," word)* "]" ")"
//!       | "table(" STRING ")"
//! word := term ("*" term)*
//! term := IDENT ("^" SINT)?
//! ```
//!
//! `FAMILY` is one of `cyclic`, `dihedral`, `quaternion`, `semidihedral`,
//! `cover_dq`, `cover_qsd`. The word list of a quotient may also be empty.
//! Whitespace between tokens is ignored.

use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::families::{self, CoverKind, Family, FamilyError};
use crate::formats::{parse_table_json, FormatError};
use crate::group::{Element, FiniteGroup, GroupError, DEFAULT_ORDER_CAP};
use crate::homs::{quotient, GroupHom, HomError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKeyword {
    Cyclic,
    Dihedral,
    Quaternion,
    Semidihedral,
    CoverDq,
    CoverQsd,
}

impl FamilyKeyword {
    const ALL: [FamilyKeyword; 6] = [
        FamilyKeyword::Cyclic,
        FamilyKeyword::Dihedral,
        FamilyKeyword::Quaternion,
        FamilyKeyword::Semidihedral,
        FamilyKeyword::CoverDq,
        FamilyKeyword::CoverQsd,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            FamilyKeyword::Cyclic => "cyclic",
            FamilyKeyword::Dihedral => "dihedral",
            FamilyKeyword::Quaternion => "quaternion",
            FamilyKeyword::Semidihedral => "semidihedral",
            FamilyKeyword::CoverDq => "cover_dq",
            FamilyKeyword::CoverQsd => "cover_qsd",
        }
    }

    fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub generator: String,
    pub exponent: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<Term>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Family(FamilyKeyword, u64),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    Semidirect { m: u64, k: u64, a: u64 },
    Quotient(Box<GroupExpr>, Vec<Word>),
    Table(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.generator)?;
        if let Some(e) = self.exponent {
            write!(f, "^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Family(k, n) => write!(f, "{}({n})", k.keyword()),
            GroupExpr::Product(a, b) => write!(f, "product({a}, {b})"),
            GroupExpr::Semidirect { m, k, a } => write!(f, "semidirect({m}, {k}, {a})"),
            GroupExpr::Quotient(e, words) => {
                write!(f, "quotient({e}, [")?;
                for (i, w) in words.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{w}")?;
                }
                f.write_str("])")
            }
            GroupExpr::Table(path) => {
                f.write_str("table(\"")?;
                for c in path.chars() {
                    match c {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        c => write!(f, "{c}")?,
                    }
                }
                f.write_str("\")")
            }
        }
    }
}

/// Parse failure. Lines count from 1, columns from 0.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("parse error at line {line}, column {column}: expected {}, found {found}", .expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Str(String),
    Punct(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    column: usize,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.char_indices().peekable(),
            line: 1,
            column: 0,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 0;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn error(&self, line: usize, column: usize, expected: &str, found: String) -> ParseError {
        ParseError {
            line,
            column,
            expected: vec![expected.into()],
            found,
        }
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            while self.peek().is_some_and(char::is_whitespace) {
                self.bump();
            }
            let (line, column) = (self.line, self.column);
            let Some(c) = self.peek() else {
                out.push(Spanned {
                    tok: Tok::Eof,
                    line,
                    column,
                });
                return Ok(out);
            };
            let tok = if c.is_ascii_alphabetic() || c == '_' {
                let mut s = String::new();
                while let Some(c) = self
                    .peek()
                    .filter(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '.')
                {
                    s.push(c);
                    self.bump();
                }
                Tok::Ident(s)
            } else if c.is_ascii_digit() {
                let mut s = String::new();
                while let Some(c) = self.peek().filter(char::is_ascii_digit) {
                    s.push(c);
                    self.bump();
                }
                let n = s.parse().map_err(|_| {
                    self.error(line, column, "INT", format!("integer {s} (too large)"))
                })?;
                Tok::Int(n)
            } else if c == '"' {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        None => {
                            return Err(self.error(
                                self.line,
                                self.column,
                                "`\"`",
                                "end of input".into(),
                            ))
                        }
                        Some('"') => break,
                        Some('\\') => match self.bump() {
                            Some(c @ ('"' | '\\')) => s.push(c),
                            other => {
                                return Err(self.error(
                                    self.line,
                                    self.column,
                                    "escape `\\\"` or `\\\\`",
                                    format!("{other:?}"),
                                ))
                            }
                        },
                        Some(c) => s.push(c),
                    }
                }
                Tok::Str(s)
            } else if "(),[]*^-".contains(c) {
                self.bump();
                Tok::Punct(c)
            } else {
                return Err(self.error(line, column, "a token", format!("`{c}`")));
            };
            out.push(Spanned { tok, line, column });
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        })
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek().tok == Tok::Punct(c) {
            self.next();
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        match self.peek().tok {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            _ => self.fail(&["INT"]),
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = self.peek().tok == Tok::Punct('-');
        if negative {
            self.next();
        }
        let at = self.peek().clone();
        let n = self.int()?;
        let n = i64::try_from(n).map_err(|_| ParseError {
            line: at.line,
            column: at.column,
            expected: vec!["SINT".into()],
            found: format!("integer {n} (too large)"),
        })?;
        Ok(if negative { -n } else { n })
    }

    fn expr(&mut self) -> Result<GroupExpr, ParseError> {
        const STARTS: [&str; 10] = [
            "cyclic",
            "dihedral",
            "quaternion",
            "semidihedral",
            "cover_dq",
            "cover_qsd",
            "product",
            "semidirect",
            "quotient",
            "table",
        ];
        let name = match &self.peek().tok {
            Tok::Ident(s) => s.clone(),
            _ => return self.fail(&STARTS),
        };
        if let Some(k) = FamilyKeyword::from_keyword(&name) {
            self.next();
            self.punct('(')?;
            let n = self.int()?;
            self.punct(')')?;
            return Ok(GroupExpr::Family(k, n));
        }
        match name.as_str() {
            "product" => {
                self.next();
                self.punct('(')?;
                let a = self.expr()?;
                self.punct(',')?;
                let b = self.expr()?;
                self.punct(')')?;
                Ok(GroupExpr::Product(Box::new(a), Box::new(b)))
            }
            "semidirect" => {
                self.next();
                self.punct('(')?;
                let m = self.int()?;
                self.punct(',')?;
                let k = self.int()?;
                self.punct(',')?;
                let a = self.int()?;
                self.punct(')')?;
                Ok(GroupExpr::Semidirect { m, k, a })
            }
            "quotient" => {
                self.next();
                self.punct('(')?;
                let e = self.expr()?;
                self.punct(',')?;
                self.punct('[')?;
                let mut words = Vec::new();
                if self.peek().tok != Tok::Punct(']') {
                    words.push(self.word()?);
                    while self.peek().tok == Tok::Punct(',') {
                        self.next();
                        words.push(self.word()?);
                    }
                }
                if self.peek().tok != Tok::Punct(']') {
                    return self.fail(&["`,`", "`]`"]);
                }
                self.next();
                self.punct(')')?;
                Ok(GroupExpr::Quotient(Box::new(e), words))
            }
            "table" => {
                self.next();
                self.punct('(')?;
                let path = match &self.peek().tok {
                    Tok::Str(s) => s.clone(),
                    _ => return self.fail(&["STRING"]),
                };
                self.next();
                self.punct(')')?;
                Ok(GroupExpr::Table(path))
            }
            _ => self.fail(&STARTS),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let generator = match &self.peek().tok {
            Tok::Ident(s) => s.clone(),
            _ => return self.fail(&["IDENT"]),
        };
        self.next();
        let exponent = if self.peek().tok == Tok::Punct('^') {
            self.next();
            Some(self.signed_int()?)
        } else {
            None
        };
        Ok(Term {
            generator,
            exponent,
        })
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut terms = vec![self.term()?];
        while self.peek().tok == Tok::Punct('*') {
            self.next();
            terms.push(self.term()?);
        }
        Ok(Word(terms))
    }
}

pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return p.fail(&["end of input"]);
    }
    Ok(e)
}

#[derive(Error, Debug)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown generator {name:?}; available: {}", .available.join(", "))]
    UnknownGenerator {
        name: String,
        available: Vec<String>,
    },
    #[error("subgroup generated by {words} is not normal (conjugator {conjugator})")]
    NotNormal { words: String, conjugator: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Table { path: PathBuf, source: FormatError },
}

/// Evaluation settings: the order cap and the directory `table(...)` paths
/// are resolved against.
#[derive(Debug, Clone)]
pub struct EvalContext {
    pub cap: usize,
    pub base_dir: Option<PathBuf>,
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext {
            cap: DEFAULT_ORDER_CAP,
            base_dir: None,
        }
    }
}

/// An evaluated expression; quotient expressions also carry the
/// projection from the inner group.
#[derive(Debug, Clone)]
pub struct Evaluated {
    pub group: FiniteGroup,
    pub projection: Option<GroupHom>,
}

fn check_order(order: u128, cap: usize) -> Result<(), GroupError> {
    if order > cap as u128 {
        Err(GroupError::OrderCapExceeded {
            order: usize::try_from(order).unwrap_or(usize::MAX),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Resolves a word through the group's named generators.
pub fn eval_word(group: &FiniteGroup, word: &Word) -> Result<Element, EvalError> {
    let mut acc = group.identity();
    for t in &word.0 {
        let g = group
            .generator(&t.generator)
            .ok_or_else(|| EvalError::UnknownGenerator {
                name: t.generator.clone(),
                available: group.generators().iter().map(|(l, _)| l.clone()).collect(),
            })?;
        acc = group.mul(acc, group.pow(g, t.exponent.unwrap_or(1)));
    }
    Ok(acc)
}

pub fn eval_group_expr(e: &GroupExpr, ctx: &EvalContext) -> Result<Evaluated, EvalError> {
    let plain = |group: FiniteGroup| Evaluated {
        group,
        projection: None,
    };
    match e {
        GroupExpr::Family(k, n) => {
            let n = *n;
            let order: u128 = match k {
                FamilyKeyword::CoverDq | FamilyKeyword::CoverQsd => {
                    if n > 64 {
                        u128::MAX
                    } else {
                        1u128 << (n + 1)
                    }
                }
                _ => n as u128,
            };
            check_order(order, ctx.cap)?;
            let group = match k {
                FamilyKeyword::Cyclic => families::make_family(Family::Cyclic, n)?,
                FamilyKeyword::Dihedral => families::make_family(Family::Dihedral, n)?,
                FamilyKeyword::Quaternion => families::make_family(Family::Quaternion, n)?,
                FamilyKeyword::Semidihedral => families::make_family(Family::Semidihedral, n)?,
                FamilyKeyword::CoverDq => families::cover_group(CoverKind::DQ, n as u32)?.group,
                FamilyKeyword::CoverQsd => families::cover_group(CoverKind::QSD, n as u32)?.group,
            };
            Ok(plain(group))
        }
        GroupExpr::Product(a, b) => {
            let a = eval_group_expr(a, ctx)?.group;
            let b = eval_group_expr(b, ctx)?.group;
            Ok(plain(families::direct_product(&a, &b, ctx.cap)?))
        }
        GroupExpr::Semidirect { m, k, a } => {
            check_order(*m as u128 * *k as u128, ctx.cap)?;
            let a = i64::try_from(*a)
                .map_err(|_| FamilyError::InvalidAction(format!("action {a} out of range")))?;
            Ok(plain(families::semidirect_cyclic(*m, *k, a)?))
        }
        GroupExpr::Quotient(inner, words) => {
            let g = eval_group_expr(inner, ctx)?.group;
            let elems = words
                .iter()
                .map(|w| eval_word(&g, w))
                .collect::<Result<Vec<_>, _>>()?;
            let n = g.closure(elems);
            match quotient(&g, &n) {
                Ok(q) => Ok(Evaluated {
                    group: q.group,
                    projection: Some(q.projection),
                }),
                Err(HomError::NotNormal { conjugator }) => Err(EvalError::NotNormal {
                    words: words
                        .iter()
                        .map(|w| w.to_string())
                        .collect::<Vec<_>>()
                        .join(", "),
                    conjugator: g.label(conjugator),
                }),
                Err(err) => Err(err.into()),
            }
        }
        GroupExpr::Table(path) => {
            let full = match &ctx.base_dir {
                Some(dir) if Path::new(path).is_relative() => dir.join(path),
                _ => PathBuf::from(path),
            };
            let text = std::fs::read_to_string(&full).map_err(|source| EvalError::Io {
                path: full.clone(),
                source,
            })?;
            let group = parse_table_json(&text).map_err(|source| EvalError::Table {
                path: full.clone(),
                source,
            })?;
            group.check_cap(ctx.cap)?;
            Ok(plain(group))
        }
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, ctx: &EvalContext) -> Result<Evaluated, EvalError> {
    eval_group_expr(&parse_group_expr(text)?, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make_family;
    use crate::homs::are_isomorphic;

    #[test]
    fn parses_family() {
        assert_eq!(
            parse_group_expr("cyclic(8)").unwrap(),
            GroupExpr::Family(FamilyKeyword::Cyclic, 8)
        );
    }

    #[test]
    fn parses_quotient() {
        let e = parse_group_expr("quotient(cover_dq(3), [x^2*y^2])").unwrap();
        let GroupExpr::Quotient(inner, words) = &e else {
            panic!("{e:?}")
        };
        assert_eq!(**inner, GroupExpr::Family(FamilyKeyword::CoverDq, 3));
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].to_string(), "x^2*y^2");
        assert_eq!(e.to_string(), "quotient(cover_dq(3), [x^2*y^2])");
    }

    #[test]
    fn truncated_input_reports_position() {
        let err = parse_group_expr("dihedral(").unwrap_err();
        assert_eq!((err.line, err.column), (1, 9));
        assert_eq!(err.expected, vec!["INT".to_string()]);
        assert_eq!(err.found, "end of input");
    }

    #[test]
    fn parse_errors() {
        let err = parse_group_expr("dyhedral(4)").unwrap_err();
        assert_eq!(err.column, 0);
        assert!(err.expected.contains(&"dihedral".to_string()));

        let err = parse_group_expr("cyclic(4) x").unwrap_err();
        assert_eq!(err.column, 10);

        let err = parse_group_expr("quotient(cyclic(4),\n  [x y])").unwrap_err();
        assert_eq!((err.line, err.column), (2, 5));
        assert_eq!(err.expected, vec!["`,`", "`]`"]);

        assert!(parse_group_expr("cyclic(99999999999999999999999)").is_err());
        assert!(parse_group_expr("table(\"abc)").is_err());
        assert!(parse_group_expr("cyclic(4) %").is_err());
    }

    #[test]
    fn negative_exponents_and_whitespace() {
        let e = parse_group_expr(" quotient ( dihedral(8) , [ x^-2 , y*x^3*y ] ) ").unwrap();
        assert_eq!(e.to_string(), "quotient(dihedral(8), [x^-2, y*x^3*y])");
    }

    #[test]
    fn table_strings_escape() {
        let e = GroupExpr::Table("a \"b\"\\c.json".into());
        assert_eq!(parse_group_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn eval_klein_four() {
        let g = eval_str("product(cyclic(2), cyclic(2))", &EvalContext::default())
            .unwrap()
            .group;
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.elements().filter(|&e| g.element_order(e) == 2).count(), 3);
        assert!(g.generator("l.x").is_some() && g.generator("r.x").is_some());
    }

    #[test]
    fn eval_cover_quotient_is_q8() {
        let ev = eval_str("quotient(cover_dq(3), [x^2*y^2])", &EvalContext::default()).unwrap();
        assert_eq!(ev.group.order(), 8);
        let q8 = make_family(Family::Quaternion, 8).unwrap();
        assert!(are_isomorphic(&ev.group, &q8).unwrap());
        let proj = ev.projection.unwrap();
        assert_eq!(proj.kernel().order(), 2);
    }

    #[test]
    fn eval_quotient_by_everything() {
        let ev = eval_str("quotient(cyclic(4), [x])", &EvalContext::default()).unwrap();
        assert_eq!(ev.group.order(), 1);
        let ev = eval_str("quotient(cyclic(4), [])", &EvalContext::default()).unwrap();
        assert_eq!(ev.group.order(), 4);
    }

    #[test]
    fn eval_errors() {
        let ctx = EvalContext::default();
        assert!(matches!(
            eval_str("quotient(cyclic(4), [z])", &ctx),
            Err(EvalError::UnknownGenerator { .. })
        ));
        assert!(matches!(
            eval_str("quotient(dihedral(6), [y])", &ctx),
            Err(EvalError::NotNormal { .. })
        ));
        assert!(matches!(
            eval_str("quaternion(12)", &ctx),
            Err(EvalError::Family(FamilyError::UnsupportedParameter(_)))
        ));
        assert!(matches!(
            eval_str("cyclic(100000)", &ctx),
            Err(EvalError::Group(GroupError::OrderCapExceeded { .. }))
        ));
        assert!(matches!(
            eval_str("cover_dq(99)", &ctx),
            Err(EvalError::Group(GroupError::OrderCapExceeded { .. }))
        ));
        assert!(matches!(
            eval_str("table(\"/nonexistent/t.json\")", &ctx),
            Err(EvalError::Io { .. })
        ));
    }

    #[test]
    fn nested_product_generators() {
        let g = eval_str(
            "quotient(product(product(cyclic(2), cyclic(4)), cyclic(2)), [l.r.x^2])",
            &EvalContext::default(),
        )
        .unwrap()
        .group;
        assert_eq!(g.order(), 8);
    }
}
