//! Declaration files:
//!
//! ```text
//! fn even q, b;  fn odd psi;  const eta;  param mu;
//! chart r1n2 { even t; odd th, thb; }
//! algebra n2 {
//!     even P; odd Q, Qb;
//!     bracket [Q,Qb] = 2*i*P;
//!     coset i*(t*P + th*Q + thb*Qb);
//!     stabilizer P;
//! }
//! map shift { t -> t + i*eps*thb; th -> th + eps; }
//! ```
//!
//! Blocks after a `chart` block use that chart; before any, the context's.

use std::sync::Arc;

use crate::calculus::{Chart, Coordinate, CoordinateMap};
use crate::coeff::Coeff;
use crate::error::ParseError;
use crate::generator::Parity;
use crate::lie::{LieAlgebraPresentation, LieValued};
use crate::parse::lexer::{tokenize, Tok, Token};
use crate::parse::{split_markers, Parser, ParserContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDecl {
    pub presentation: Arc<LieAlgebraPresentation>,
    pub coset: Option<(Arc<Chart>, LieValued)>,
    pub stabilizer: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub charts: Vec<Arc<Chart>>,
    pub algebras: Vec<AlgebraDecl>,
    pub maps: Vec<(String, CoordinateMap)>,
    /// The context after all declarations.
    pub context: ParserContext,
}

struct DocParser {
    toks: Vec<Token>,
    pos: usize,
}

impl DocParser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.next())
        } else {
            Err(self.peek().error(format!("expected {what}")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Token), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            _ => Err(t.error(format!("expected {what}"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        if self.peek().tok == Tok::Ident(kw.into()) {
            self.next();
            true
        } else {
            false
        }
    }

    /// `name (, name)* ;`
    fn names(&mut self) -> Result<Vec<String>, ParseError> {
        let mut out = vec![self.ident("a name")?.0];
        while self.peek().tok == Tok::Comma {
            self.next();
            out.push(self.ident("a name")?.0);
        }
        self.expect(Tok::Semi, "';'")?;
        Ok(out)
    }

    fn parity(&mut self) -> Result<Parity, ParseError> {
        let (word, t) = self.ident("'even' or 'odd'")?;
        match word.as_str() {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(t.error("expected 'even' or 'odd'")),
        }
    }

    /// Tokens up to (not including) the next `;`, which is consumed.
    fn statement(&mut self) -> Result<Vec<Token>, ParseError> {
        let mut out = Vec::new();
        loop {
            let t = self.next();
            match t.tok {
                Tok::Semi => {
                    out.push(Token {
                        tok: Tok::Eof,
                        text: ";".into(),
                        line: t.line,
                        col: t.col,
                    });
                    return Ok(out);
                }
                Tok::Eof | Tok::RBrace => return Err(t.error("expected ';'")),
                _ => out.push(t),
            }
        }
    }
}

fn parse_tokens(toks: Vec<Token>, ctx: &ParserContext) -> Result<crate::SuperExpr, ParseError> {
    let mut p = Parser::from_tokens(toks, ctx);
    let raw = p.expr()?;
    p.expect_end()?;
    Ok(crate::canonicalize(&raw))
}

fn semantic(e: impl std::fmt::Display) -> ParseError {
    ParseError::Semantic(e.to_string())
}

/// Parse a declaration file, starting from `ctx`.
pub fn parse_document(src: &str, ctx: &ParserContext) -> Result<Document, ParseError> {
    let mut p = DocParser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let mut doc = Document {
        charts: vec![],
        algebras: vec![],
        maps: vec![],
        context: ctx.clone(),
    };
    while p.peek().tok != Tok::Eof {
        let (kw, t) = p.ident("a declaration")?;
        match kw.as_str() {
            "fn" => {
                let parity = p.parity()?;
                for n in p.names()? {
                    doc.context.declare_function(&n, parity);
                }
            }
            "const" => {
                for n in p.names()? {
                    doc.context.declare_odd_constant(&n);
                }
            }
            "param" => {
                for n in p.names()? {
                    doc.context.declare_parameter(&n);
                }
            }
            "chart" => {
                let chart = chart_block(&mut p)?;
                doc.context.set_chart(chart.clone());
                doc.charts.push(chart);
            }
            "algebra" => doc.algebras.push(algebra_block(&mut p, &doc.context)?),
            "map" => {
                let (name, _) = p.ident("a map name")?;
                p.expect(Tok::LBrace, "'{'")?;
                let mut pairs = Vec::new();
                while p.peek().tok != Tok::RBrace {
                    let (coord, ct) = p.ident("a coordinate")?;
                    if doc.context.chart().index_of(&coord).is_none() {
                        return Err(ParseError::UnknownIdentifier {
                            name: coord,
                            line: ct.line,
                            col: ct.col,
                        });
                    }
                    p.expect(Tok::Arrow, "'->'")?;
                    let img = parse_tokens(p.statement()?, &doc.context)?;
                    pairs.push((coord, img));
                }
                p.next();
                let refs: Vec<(&str, crate::SuperExpr)> =
                    pairs.iter().map(|(n, e)| (n.as_str(), e.clone())).collect();
                let map = CoordinateMap::from_pairs(doc.context.chart().clone(), &refs)
                    .map_err(semantic)?;
                doc.maps.push((name, map));
            }
            _ => return Err(t.error("expected fn, const, param, chart, algebra or map")),
        }
    }
    Ok(doc)
}

fn chart_block(p: &mut DocParser) -> Result<Arc<Chart>, ParseError> {
    let (name, _) = p.ident("a chart name")?;
    p.expect(Tok::LBrace, "'{'")?;
    let mut coords = Vec::new();
    while p.peek().tok != Tok::RBrace {
        let parity = p.parity()?;
        for n in p.names()? {
            coords.push(Coordinate { name: n, parity });
        }
    }
    p.next();
    Chart::new(&name, coords).map_err(semantic)
}

fn algebra_block(p: &mut DocParser, ctx: &ParserContext) -> Result<AlgebraDecl, ParseError> {
    let (name, _) = p.ident("an algebra name")?;
    p.expect(Tok::LBrace, "'{'")?;
    let mut basis: Vec<(String, Parity)> = Vec::new();
    let mut brackets = Vec::new();
    let mut coset = None;
    let mut stabilizer = Vec::new();
    while p.peek().tok != Tok::RBrace {
        if p.keyword("bracket") {
            p.expect(Tok::LBracket, "'['")?;
            let a = p.ident("a basis symbol")?.0;
            p.expect(Tok::Comma, "','")?;
            let b = p.ident("a basis symbol")?.0;
            p.expect(Tok::RBracket, "']'")?;
            p.expect(Tok::Eq, "'='")?;
            brackets.push(((a, b), p.statement()?));
        } else if p.keyword("coset") {
            coset = Some(p.statement()?);
        } else if p.keyword("stabilizer") {
            stabilizer.extend(p.names()?);
        } else {
            let parity = p.parity()?;
            for n in p.names()? {
                basis.push((n, parity));
            }
        }
    }
    p.next();
    let mctx = ctx.with_markers(&basis);
    let mut table = Vec::new();
    for ((a, b), toks) in brackets {
        let rhs = parse_tokens(toks, &mctx)?;
        let mut value: Vec<(String, Coeff)> = Vec::new();
        for (marker, coeff) in split_markers(&rhs)? {
            let c = coeff.as_constant().ok_or_else(|| {
                ParseError::Semantic(format!("structure constant of [{a},{b}] is not a number"))
            })?;
            value.push((marker.name().to_string(), c));
        }
        table.push(((a, b), value));
    }
    let presentation =
        Arc::new(LieAlgebraPresentation::new(&name, basis, table).map_err(semantic)?);
    let coset = match coset {
        None => None,
        Some(toks) => {
            let e = parse_tokens(toks, &mctx)?;
            let pairs: Vec<(String, crate::SuperExpr)> = split_markers(&e)?
                .into_iter()
                .map(|(g, f)| (g.name().to_string(), f))
                .collect();
            let refs: Vec<(&str, crate::SuperExpr)> =
                pairs.iter().map(|(n, f)| (n.as_str(), f.clone())).collect();
            Some((
                ctx.chart().clone(),
                LieValued::from_pairs(presentation.clone(), &refs).map_err(semantic)?,
            ))
        }
    };
    for s in &stabilizer {
        if presentation.index_of(s).is_none() {
            return Err(ParseError::Semantic(format!("unknown basis symbol: {s}")));
        }
    }
    Ok(AlgebraDecl {
        presentation,
        coset,
        stabilizer,
    })
}
