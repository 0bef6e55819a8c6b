//! ASCII surface syntax and the canonical printer.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | 'i' | symbol | symbol "'"* '(t)' | '@'coord
//!         | '(' expr ')' | '-' factor
//! ```
//!
//! Symbols resolve against a [`ParserContext`]: chart coordinates and
//! their differentials (`th`, `dth`), odd constants, even parameters and
//! function-of-t symbols of declared parity.

mod files;
mod lexer;
mod printer;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::calculus::{Chart, VectorField};
use crate::coeff::Coeff;
use crate::error::ParseError;
use crate::expr::{canonicalize, RawExpr, SuperExpr, Term};
use crate::generator::{GenKind, Generator, Parity};
use lexer::{tokenize, Tok, Token};

pub use files::{parse_document, AlgebraDecl, Document};
pub use printer::{print_canonical, print_vf};

/// Everything needed to resolve identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParserContext {
    chart: Arc<Chart>,
    functions: BTreeMap<String, Parity>,
    odd_constants: BTreeSet<String>,
    parameters: BTreeSet<String>,
    /// Extra marker symbols, e.g. Lie algebra basis elements.
    markers: BTreeMap<String, Parity>,
}

impl ParserContext {
    /// `eps`, `epsb` odd constants, `lam` parameter; functions `q, b, a, c`
    /// even and `psi, psib, chi, chib` odd.
    pub fn new(chart: Arc<Chart>) -> Self {
        let mut ctx = ParserContext {
            chart,
            functions: BTreeMap::new(),
            odd_constants: BTreeSet::new(),
            parameters: BTreeSet::new(),
            markers: BTreeMap::new(),
        };
        for n in ["eps", "epsb"] {
            ctx.odd_constants.insert(n.into());
        }
        ctx.parameters.insert("lam".into());
        for n in ["q", "b", "a", "c"] {
            ctx.functions.insert(n.into(), Parity::Even);
        }
        for n in ["psi", "psib", "chi", "chib"] {
            ctx.functions.insert(n.into(), Parity::Odd);
        }
        ctx
    }

    /// No predeclared symbols beyond the chart.
    pub fn bare(chart: Arc<Chart>) -> Self {
        ParserContext {
            chart,
            functions: BTreeMap::new(),
            odd_constants: BTreeSet::new(),
            parameters: BTreeSet::new(),
            markers: BTreeMap::new(),
        }
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn set_chart(&mut self, chart: Arc<Chart>) {
        self.chart = chart;
    }

    pub fn declare_function(&mut self, name: &str, parity: Parity) {
        self.functions.insert(name.into(), parity);
    }

    pub fn declare_odd_constant(&mut self, name: &str) {
        self.odd_constants.insert(name.into());
    }

    pub fn declare_parameter(&mut self, name: &str) {
        self.parameters.insert(name.into());
    }

    pub(crate) fn with_markers(&self, markers: &[(String, Parity)]) -> Self {
        let mut ctx = self.clone();
        ctx.markers = markers.iter().cloned().collect();
        ctx
    }

    /// Declare every generator of `e` that is not a chart symbol, so that
    /// its printed form parses back.
    pub fn declare_all(&mut self, e: &SuperExpr) {
        for g in e.generators() {
            match g.kind() {
                GenKind::Function { parity, .. } => self.declare_function(g.name(), parity),
                GenKind::OddConstant => self.declare_odd_constant(g.name()),
                GenKind::Parameter => self.declare_parameter(g.name()),
                _ => {}
            }
        }
    }
}

pub(crate) struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'a ParserContext,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &str, ctx: &'a ParserContext) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            ctx,
        })
    }

    pub(crate) fn from_tokens(toks: Vec<Token>, ctx: &'a ParserContext) -> Self {
        Parser { toks, pos: 0, ctx }
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    pub(crate) fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn expect(&mut self, tok: Tok, what: &str) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.next())
        } else {
            Err(self.peek().error(format!("expected {what}")))
        }
    }

    pub(crate) fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.peek().tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.peek().error("unexpected trailing input"))
        }
    }

    pub(crate) fn expr(&mut self) -> Result<RawExpr, ParseError> {
        let mut items = vec![self.term()?];
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    items.push(self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    items.push(RawExpr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            RawExpr::Add(items)
        })
    }

    fn term(&mut self) -> Result<RawExpr, ParseError> {
        let mut items = vec![self.factor()?];
        while self.peek().tok == Tok::Star {
            self.next();
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            RawExpr::Mul(items)
        })
    }

    fn factor(&mut self) -> Result<RawExpr, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Minus => Ok(RawExpr::Neg(Box::new(self.factor()?))),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Int(n) => {
                let num: BigInt = n.parse().expect("digits");
                let mut q = BigRational::from_integer(num);
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let d = self.next();
                    let Tok::Int(den) = &d.tok else {
                        return Err(d.error("expected a denominator"));
                    };
                    let den: BigInt = den.parse().expect("digits");
                    if den == BigInt::from(0) {
                        return Err(d.error("zero denominator"));
                    }
                    q /= BigRational::from_integer(den);
                }
                Ok(RawExpr::Num(Coeff::new(
                    q,
                    BigRational::from_integer(0.into()),
                )))
            }
            Tok::Partial(name) => {
                let chart = &self.ctx.chart;
                let i = chart
                    .index_of(name)
                    .ok_or_else(|| ParseError::UnknownIdentifier {
                        name: format!("@{name}"),
                        line: t.line,
                        col: t.col,
                    })?;
                Ok(RawExpr::Gen(chart.partial_marker(i)))
            }
            Tok::Ident(name) => self.symbol(name, &t),
            _ => Err(t.error("expected a factor")),
        }
    }

    fn symbol(&mut self, name: &str, t: &Token) -> Result<RawExpr, ParseError> {
        if matches!(self.peek().tok, Tok::Prime | Tok::LParen) {
            let mut order = 0u32;
            while self.peek().tok == Tok::Prime {
                self.next();
                order += 1;
            }
            self.expect(Tok::LParen, "'(t)' after function symbol")?;
            let arg = self.next();
            if arg.tok != Tok::Ident("t".into()) {
                return Err(arg.error("functions take the argument t"));
            }
            self.expect(Tok::RParen, "')'")?;
            let parity = self.ctx.functions.get(name).copied().ok_or_else(|| {
                ParseError::ParityInference {
                    name: name.to_string(),
                    line: t.line,
                    col: t.col,
                }
            })?;
            return Ok(RawExpr::Gen(Generator::function(name, parity, order)));
        }
        if name == "i" {
            return Ok(RawExpr::Num(Coeff::i()));
        }
        let chart = &self.ctx.chart;
        if let Some(i) = chart.index_of(name) {
            return Ok(RawExpr::Gen(chart.coordinate(i)));
        }
        if let Some(i) = name.strip_prefix('d').and_then(|c| chart.index_of(c)) {
            return Ok(RawExpr::Gen(chart.differential(i)));
        }
        if self.ctx.odd_constants.contains(name) {
            return Ok(RawExpr::Gen(Generator::odd_constant(name)));
        }
        if self.ctx.parameters.contains(name) {
            return Ok(RawExpr::Gen(Generator::parameter(name)));
        }
        if let Some(p) = self.ctx.markers.get(name) {
            return Ok(RawExpr::Gen(Generator::marker(name, *p)));
        }
        if self.ctx.functions.contains_key(name) {
            return Err(t.error("function symbols must be applied to (t)"));
        }
        Err(ParseError::UnknownIdentifier {
            name: name.to_string(),
            line: t.line,
            col: t.col,
        })
    }
}

/// Parse and canonicalize an expression. Partials `@c` are rejected.
pub fn parse_expr(src: &str, ctx: &ParserContext) -> Result<SuperExpr, ParseError> {
    let e = parse_with_markers(src, ctx)?;
    if e.contains(Generator::is_marker) {
        return Err(ParseError::Semantic(
            "partials '@' are only allowed in vector fields".into(),
        ));
    }
    Ok(e)
}

pub(crate) fn parse_with_markers(src: &str, ctx: &ParserContext) -> Result<SuperExpr, ParseError> {
    let mut p = Parser::new(src, ctx)?;
    let raw = p.expr()?;
    p.expect_end()?;
    Ok(canonicalize(&raw))
}

/// Split `e` along marker generators: every term must contain exactly one
/// marker, which is removed; the rest is its left coefficient.
pub(crate) fn split_markers(e: &SuperExpr) -> Result<BTreeMap<Generator, SuperExpr>, ParseError> {
    let mut out: BTreeMap<Generator, SuperExpr> = BTreeMap::new();
    for (term, c) in e.terms() {
        let markers: Vec<&Generator> = term.generators().filter(|g| g.is_marker()).collect();
        let count: u32 = markers.iter().map(|g| term.degree_in(g)).sum();
        if count != 1 {
            return Err(ParseError::Semantic(format!(
                "each term must contain exactly one basis symbol or partial; found {count}"
            )));
        }
        let m = markers[0].clone();
        // markers sort last, so dropping one needs no sign
        let odd: Vec<Generator> = term
            .odd_factors()
            .iter()
            .filter(|g| **g != m)
            .cloned()
            .collect();
        let even: Vec<(Generator, u32)> = term
            .even_factors()
            .iter()
            .filter(|(g, _)| *g != m)
            .cloned()
            .collect();
        let rest = SuperExpr::monomial(c.clone(), Term::from_parts(odd, even));
        let slot = out.entry(m).or_default();
        *slot = &*slot + &rest;
    }
    Ok(out)
}

/// Parse `sum_c X_c * @c`.
pub fn parse_vf(src: &str, ctx: &ParserContext) -> Result<VectorField, ParseError> {
    let e = parse_with_markers(src, ctx)?;
    let chart = ctx.chart.clone();
    let mut comps = vec![SuperExpr::zero(); chart.dim()];
    for (marker, comp) in split_markers(&e)? {
        let i = (0..chart.dim())
            .find(|&i| chart.partial_marker(i) == marker)
            .ok_or_else(|| {
                ParseError::Semantic(format!(
                    "'{marker}' is not a partial of chart {}",
                    chart.name()
                ))
            })?;
        comps[i] = comp;
    }
    Ok(VectorField::new(chart, comps))
}

/// Comma-separated names, as in `--odd-fns psi,chi`.
pub fn parse_name_list(list: &str) -> Vec<String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}
