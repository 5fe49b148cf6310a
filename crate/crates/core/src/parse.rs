//! Text format for rings, polynomials, ideals and parametrizations.
//!
//! ```text
//! # a comment
//! ring GF(31991) vars x0 x1 x2 x3 order degrevlex;
//! ideal I = x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2;
//! params u v;
//! map x0 = u^3;
//! ```
//!
//! Polynomials are sums and products of variables, integer literals
//! (optionally `a/b`), powers `^n` and parentheses.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{PolyRing, Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: Tok::Int(s.parse().expect("digits")),
                    line: li + 1,
                    col,
                });
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line: li + 1,
                    col,
                });
                continue;
            }
            if "+-*^/(),;=".contains(c) {
                out.push(Token {
                    tok: Tok::Sym(c),
                    line: li + 1,
                    col,
                });
                i += 1;
                continue;
            }
            return Err(Error::Parse {
                line: li + 1,
                col,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

/// Field-independent polynomial syntax tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Var(String, usize, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn eval<F: Field>(&self, ring: &Ring<F>) -> Result<Polynomial<F>> {
        let field = ring.field();
        Ok(match self {
            Expr::Int(v) => Polynomial::constant(ring, field.from_bigint(v)),
            Expr::Ratio(a, b) => Polynomial::constant(ring, field.from_ratio(a, b)?),
            Expr::Var(name, _, _) => {
                let i = ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                Polynomial::monomial(ring, Monomial::var(ring.nvars(), i, 1)?, field.one())
            }
            Expr::Add(a, b) => a.eval(ring)?.try_add(&b.eval(ring)?)?,
            Expr::Sub(a, b) => a.eval(ring)?.try_sub(&b.eval(ring)?)?,
            Expr::Mul(a, b) => a.eval(ring)?.try_mul(&b.eval(ring)?)?,
            Expr::Neg(a) => a.eval(ring)?.neg(),
            Expr::Pow(a, e) => a.eval(ring)?.pow(*e)?,
        })
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        let toks = tokenize(text)?;
        let last_line = text.lines().count().max(1);
        let last_col = text.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
        Ok(Parser {
            toks,
            pos: 0,
            end: (last_line, last_col),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Parse {
            line,
            col,
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err("expected identifier"),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected integer"),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat_sym('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat_sym('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat_sym('^') {
            let e = match self.peek() {
                Some(Tok::Int(v)) => v.clone(),
                _ => return self.err("malformed exponent: expected a non-negative integer"),
            };
            self.pos += 1;
            let e: u32 = match u32::try_from(e) {
                Ok(e) if e <= crate::monomial::MAX_EXP => e,
                _ => return Err(Error::ExponentOverflow),
            };
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let (line, col) = self.here();
        match self.next() {
            Some(Tok::Int(v)) => {
                if self.eat_sym('/') {
                    let d = self.int()?;
                    if d.is_zero() {
                        return Err(Error::Parse {
                            line,
                            col,
                            msg: "division by zero".into(),
                        });
                    }
                    Ok(Expr::Ratio(v, d))
                } else {
                    Ok(Expr::Int(v))
                }
            }
            Some(Tok::Ident(s)) => Ok(Expr::Var(s, line, col)),
            Some(Tok::Sym('(')) => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Some(t) => Err(Error::Parse {
                line,
                col,
                msg: format!("unexpected token {t:?}"),
            }),
            None => Err(Error::Parse {
                line,
                col,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    fn ring_decl(&mut self) -> Result<RingDecl> {
        if !self.eat_keyword("ring") {
            return self.err("expected `ring`");
        }
        let field = if self.eat_keyword("GF") {
            self.expect_sym('(')?;
            let (line, col) = self.here();
            let p = self.int()?;
            self.expect_sym(')')?;
            let p = u64::try_from(&p).map_err(|_| Error::InvalidField(format!("{p} is too large")))?;
            PrimeField::new(p).map_err(|e| match e {
                Error::InvalidField(m) => Error::Parse {
                    line,
                    col,
                    msg: m,
                },
                other => other,
            })?;
            FieldKind::Prime(p)
        } else if self.eat_keyword("QQ") {
            FieldKind::Rationals
        } else {
            return self.err("expected `GF(p)` or `QQ`");
        };
        if !self.eat_keyword("vars") {
            return self.err("expected `vars`");
        }
        let mut vars = Vec::new();
        while let Some(Tok::Ident(s)) = self.peek() {
            if s == "order" {
                break;
            }
            let (line, col) = self.here();
            let s = s.clone();
            if vars.contains(&s) {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("duplicate variable name `{s}`"),
                });
            }
            vars.push(s);
            self.pos += 1;
        }
        if vars.is_empty() {
            return self.err("expected at least one variable");
        }
        let order = if self.eat_keyword("order") {
            if self.eat_keyword("degrevlex") {
                TermOrder::DegRevLex
            } else if self.eat_keyword("lex") {
                TermOrder::Lex
            } else {
                return self.err("expected `degrevlex` or `lex`");
            }
        } else {
            TermOrder::DegRevLex
        };
        Ok(RingDecl { field, vars, order })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Prime(u64),
    Rationals,
}

/// A parsed `ring` declaration, not yet bound to a concrete field type.
#[derive(Clone, Debug, PartialEq)]
pub struct RingDecl {
    pub field: FieldKind,
    pub vars: Vec<String>,
    pub order: TermOrder,
}

impl RingDecl {
    pub fn build<F: Field>(&self, field: F) -> Result<Ring<F>> {
        PolyRing::new(field, self.vars.clone(), self.order)
    }

    pub fn build_any(&self) -> Result<AnyRing> {
        Ok(match self.field {
            FieldKind::Prime(p) => AnyRing::Prime(self.build(PrimeField::new(p)?)?),
            FieldKind::Rationals => AnyRing::Rational(self.build(Rationals)?),
        })
    }
}

/// A ring whose coefficient field was chosen at runtime.
#[derive(Clone, Debug)]
pub enum AnyRing {
    Prime(Ring<PrimeField>),
    Rational(Ring<Rationals>),
}

impl AnyRing {
    pub fn nvars(&self) -> usize {
        match self {
            AnyRing::Prime(r) => r.nvars(),
            AnyRing::Rational(r) => r.nvars(),
        }
    }
    pub fn characteristic(&self) -> u64 {
        match self {
            AnyRing::Prime(r) => r.field().characteristic(),
            AnyRing::Rational(_) => 0,
        }
    }
}

/// Parses a single ring declaration (the trailing `;` is optional).
pub fn parse_ring(text: &str) -> Result<AnyRing> {
    parse_ring_decl(text)?.build_any()
}

pub fn parse_ring_decl(text: &str) -> Result<RingDecl> {
    let mut p = Parser::new(text)?;
    let decl = p.ring_decl()?;
    p.eat_sym(';');
    if !p.at_end() {
        return p.err("trailing input after ring declaration");
    }
    Ok(decl)
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text)?;
    if p.at_end() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty input".into(),
        });
    }
    let e = p.expr()?;
    if !p.at_end() {
        return p.err("trailing input after polynomial");
    }
    Ok(e)
}

pub fn parse_polynomial<F: Field>(ring: &Ring<F>, text: &str) -> Result<Polynomial<F>> {
    parse_expr(text)?.eval(ring)
}

/// Contents of an ideal file.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealFile {
    pub ring: RingDecl,
    pub params: Option<Vec<String>>,
    pub ideals: Vec<(String, Vec<Expr>)>,
    pub maps: Vec<(String, Expr)>,
}

impl IdealFile {
    /// Generators of the named ideal (first ideal when `name` is `None`).
    pub fn ideal_exprs(&self, name: Option<&str>) -> Option<&[Expr]> {
        match name {
            None => self.ideals.first().map(|(_, g)| g.as_slice()),
            Some(n) => self.ideals.iter().find(|(k, _)| k == n).map(|(_, g)| g.as_slice()),
        }
    }

    pub fn generators<F: Field>(&self, ring: &Ring<F>, name: Option<&str>) -> Result<Vec<Polynomial<F>>> {
        let exprs = self
            .ideal_exprs(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no ideal {}", name.unwrap_or("declared"))))?;
        exprs.iter().map(|e| e.eval(ring)).collect()
    }

    /// Parameter ring and images of the ring variables, if the file declares a parametrization.
    pub fn parametrization<F: Field>(&self, ring: &Ring<F>) -> Result<Option<(Ring<F>, Vec<Polynomial<F>>)>> {
        let Some(params) = &self.params else {
            return Ok(None);
        };
        let pring = PolyRing::new(ring.field().clone(), params.clone(), TermOrder::DegRevLex)?;
        let mut images: Vec<Option<Polynomial<F>>> = vec![None; ring.nvars()];
        for (v, e) in &self.maps {
            let i = ring.index_of(v).ok_or_else(|| Error::UnknownVariable(v.clone()))?;
            images[i] = Some(e.eval(&pring)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::InvalidArgument(format!("no map for {}", ring.names()[i]))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some((pring, images)))
    }
}

pub fn parse_file(text: &str) -> Result<IdealFile> {
    let mut p = Parser::new(text)?;
    if p.at_end() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty input: expected a ring declaration".into(),
        });
    }
    let ring = p.ring_decl()?;
    p.expect_sym(';')?;
    let mut file = IdealFile {
        ring,
        params: None,
        ideals: Vec::new(),
        maps: Vec::new(),
    };
    while !p.at_end() {
        if p.eat_keyword("ideal") {
            let name = p.ident()?;
            p.expect_sym('=')?;
            let mut gens = vec![p.expr()?];
            while p.eat_sym(',') {
                gens.push(p.expr()?);
            }
            p.expect_sym(';')?;
            file.ideals.push((name, gens));
        } else if p.eat_keyword("params") {
            let mut ps = Vec::new();
            while let Some(Tok::Ident(_)) = p.peek() {
                ps.push(p.ident()?);
            }
            if ps.is_empty() {
                return p.err("expected parameter names");
            }
            p.expect_sym(';')?;
            file.params = Some(ps);
        } else if p.eat_keyword("map") {
            let v = p.ident()?;
            if !file.ring.vars.contains(&v) {
                return p.err(format!("map target `{v}` is not a ring variable"));
            }
            p.expect_sym('=')?;
            let e = p.expr()?;
            p.expect_sym(';')?;
            file.maps.push((v, e));
        } else {
            return p.err("expected `ideal`, `params` or `map`");
        }
    }
    if file.ideals.is_empty() && file.params.is_none() {
        return Err(Error::Parse {
            line: p.end.0,
            col: p.end.1,
            msg: "file declares neither an ideal nor a parametrization".into(),
        });
    }
    Ok(file)
}

/// Prints a ring declaration in the file syntax.
pub fn format_ring<F: Field>(ring: &Ring<F>) -> String {
    let order = match ring.order() {
        TermOrder::Lex => "lex",
        _ => "degrevlex",
    };
    format!("ring {} vars {} order {};", ring.field().name(), ring.names().join(" "), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ring_examples() {
        match parse_ring("ring GF(31991) vars x0 x1 x2 x3 x4 order degrevlex").unwrap() {
            AnyRing::Prime(r) => {
                assert_eq!(r.nvars(), 5);
                assert_eq!(r.field().characteristic(), 31991);
            }
            _ => panic!("expected a prime field"),
        }
        assert!(matches!(parse_ring("ring QQ vars x0 x1").unwrap(), AnyRing::Rational(r) if r.nvars() == 2));
        match parse_ring("ring GF(4) vars x0") {
            Err(Error::Parse { msg, .. }) => assert!(msg.contains("not prime")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ring("ring QQ vars x y x"), Err(Error::Parse { .. })));
    }

    fn p4() -> Ring<PrimeField> {
        PolyRing::standard(PrimeField::default_field(), 5)
    }

    #[test]
    fn polynomial_examples() {
        let r = p4();
        let m = parse_polynomial(&r, "x1*x2^2*x3").unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.terms()[0].0.exps(), &[0, 1, 2, 1, 0]);
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        assert!(parse_polynomial(&r, "x0^2 - x0^2").unwrap().is_zero());
        assert_eq!(parse_polynomial(&r, "y").unwrap_err(), Error::UnknownVariable("y".into()));
        assert!(matches!(parse_polynomial(&r, "x0^x1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, ""), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "  # nothing"), Err(Error::Parse { .. })));
    }

    #[test]
    fn error_positions() {
        let err = parse_file("ring QQ vars x y;\nideal I = x +* y;").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                col: 14,
                msg: "unexpected token Sym('*')".into()
            }
        );
    }

    #[test]
    fn file_with_parametrization() {
        let text = "ring QQ vars x0 x1 x2; # conic\nparams u v;\nmap x0 = u^2;\nmap x1 = u*v;\nmap x2 = v^2;\n";
        let f = parse_file(text).unwrap();
        let r = f.ring.build(Rationals).unwrap();
        let (pr, imgs) = f.parametrization(&r).unwrap().unwrap();
        assert_eq!(pr.nvars(), 2);
        assert_eq!(imgs[1].to_string(), "u*v");
    }

    #[test]
    fn rationals_print_and_reparse() {
        let r = PolyRing::standard(Rationals, 2);
        let p = parse_polynomial(&r, "3/2*x0^2 - (x1 - 1/3)*x0").unwrap();
        let s = p.to_string();
        assert_eq!(parse_polynomial(&r, &s).unwrap(), p);
    }

    fn poly_text() -> impl Strategy<Value = String> {
        let term = (-40i64..40, 0u32..4, 0u32..4, 0u32..3).prop_map(|(c, a, b, d)| format!("{c}*x0^{a}*x1^{b}*x2^{d}"));
        proptest::collection::vec(term, 1..6).prop_map(|ts| ts.join(" + "))
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(s in poly_text()) {
            let r = PolyRing::standard(PrimeField::default_field(), 3);
            let p = parse_polynomial(&r, &s).unwrap();
            prop_assert_eq!(parse_polynomial(&r, &p.to_string()).unwrap(), p.clone());
            let q = PolyRing::standard(Rationals, 3);
            let pq = parse_polynomial(&q, &s).unwrap();
            prop_assert_eq!(parse_polynomial(&q, &pq.to_string()).unwrap(), pq);
        }
    }
}
