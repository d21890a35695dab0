//! The diagram-expression language: a textual form for layered networks.
//!
//! Grammar (whitespace insignificant, colors decimal integers):
//!
//! ```text
//! expr   := term { ";" term }
//! term   := factor { "|" factor }
//! factor := GEN "(" args ")" | "(" expr ")"
//! GEN    := id | cup | cap | jw | vertex | covertex | cross
//! ```
//!
//! `;` composes vertically in reading order (the left operand is drawn above
//! the right), `|` juxtaposes horizontally. `cross` takes a sign `+` or `-`.
//! The empty expression denotes the empty diagram.

use crate::skein::network::{Generator, NetworkSpec};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DslError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("color mismatch: boundary {upper:?} vs {lower:?}")]
    ColorMismatch { upper: Vec<usize>, lower: Vec<usize> },
}

/// Abstract syntax of a diagram expression. Sequences and tensors are kept
/// flattened: a `Seq` never directly contains a `Seq`, likewise `Tensor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramExpr {
    Empty,
    Gen(Generator),
    /// Vertical composition, first element drawn topmost.
    Seq(Vec<DiagramExpr>),
    /// Horizontal juxtaposition, left to right.
    Tensor(Vec<DiagramExpr>),
}

impl fmt::Display for DiagramExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", pretty(self))
    }
}

fn gen_text(g: &Generator) -> String {
    match *g {
        Generator::Id(c) => format!("id({})", c),
        Generator::Cup(c) => format!("cup({})", c),
        Generator::Cap(c) => format!("cap({})", c),
        Generator::Jw(n) => format!("jw({})", n),
        Generator::Vertex { top, left, right } => format!("vertex({},{},{})", top, left, right),
        Generator::Covertex { left, right, bottom } => {
            format!("covertex({},{},{})", left, right, bottom)
        }
        Generator::Cross { sign, .. } => {
            format!("cross({})", if sign >= 0 { "+" } else { "-" })
        }
    }
}

/// Canonical text of an expression; `parse` of the result returns the same
/// tree.
pub fn pretty(e: &DiagramExpr) -> String {
    match e {
        DiagramExpr::Empty => String::new(),
        DiagramExpr::Gen(g) => gen_text(g),
        DiagramExpr::Seq(parts) => parts
            .iter()
            .map(|p| match p {
                DiagramExpr::Seq(_) => format!("({})", pretty(p)),
                _ => pretty(p),
            })
            .collect::<Vec<_>>()
            .join(" ; "),
        DiagramExpr::Tensor(parts) => parts
            .iter()
            .map(|p| match p {
                DiagramExpr::Seq(_) | DiagramExpr::Tensor(_) => format!("({})", pretty(p)),
                _ => pretty(p),
            })
            .collect::<Vec<_>>()
            .join(" | "),
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    Plus,
    Minus,
    LParen,
    RParen,
    Comma,
    Semi,
    Bar,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, DslError> {
        let mut out = Vec::new();
        loop {
            while let Some(&c) = self.src.get(self.pos) {
                if c.is_ascii_whitespace() {
                    self.bump();
                } else {
                    break;
                }
            }
            let (line, col) = (self.line, self.col);
            let Some(&c) = self.src.get(self.pos) else {
                return Ok(out);
            };
            let tok = match c {
                b'(' => {
                    self.bump();
                    Tok::LParen
                }
                b')' => {
                    self.bump();
                    Tok::RParen
                }
                b',' => {
                    self.bump();
                    Tok::Comma
                }
                b';' => {
                    self.bump();
                    Tok::Semi
                }
                b'|' => {
                    self.bump();
                    Tok::Bar
                }
                b'+' => {
                    self.bump();
                    Tok::Plus
                }
                b'-' => {
                    self.bump();
                    Tok::Minus
                }
                b'0'..=b'9' => {
                    let mut n = 0usize;
                    while let Some(&d) = self.src.get(self.pos) {
                        if d.is_ascii_digit() {
                            n = n * 10 + (d - b'0') as usize;
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Num(n)
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    let start = self.pos;
                    while let Some(&d) = self.src.get(self.pos) {
                        if d.is_ascii_alphanumeric() || d == b'_' {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
                }
                other => {
                    return Err(DslError::Syntax {
                        line,
                        col,
                        msg: format!("unexpected character {:?}", other as char),
                    })
                }
            };
            out.push((tok, line, col));
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn err_here(&self, msg: impl Into<String>) -> DslError {
        let (line, col) = self
            .peek()
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or((1, 1));
        DslError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), DslError> {
        match self.peek() {
            Some((t, _, _)) if *t == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err_here(format!("expected {}", what))),
        }
    }

    fn number(&mut self, what: &str) -> Result<usize, DslError> {
        match self.peek() {
            Some((Tok::Num(n), _, _)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err_here(format!("expected {}", what))),
        }
    }

    fn expr(&mut self) -> Result<DiagramExpr, DslError> {
        let mut parts = vec![self.term()?];
        while matches!(self.peek(), Some((Tok::Semi, _, _))) {
            self.pos += 1;
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            // keep sequences flattened
            let mut flat = Vec::new();
            for p in parts {
                match p {
                    DiagramExpr::Seq(inner) => flat.extend(inner),
                    other => flat.push(other),
                }
            }
            DiagramExpr::Seq(flat)
        })
    }

    fn term(&mut self) -> Result<DiagramExpr, DslError> {
        let mut parts = vec![self.factor()?];
        while matches!(self.peek(), Some((Tok::Bar, _, _))) {
            self.pos += 1;
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            let mut flat = Vec::new();
            for p in parts {
                match p {
                    DiagramExpr::Tensor(inner) => flat.extend(inner),
                    other => flat.push(other),
                }
            }
            DiagramExpr::Tensor(flat)
        })
    }

    fn factor(&mut self) -> Result<DiagramExpr, DslError> {
        match self.peek().cloned() {
            Some((Tok::LParen, _, _)) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            Some((Tok::Ident(name), line, col)) => {
                self.pos += 1;
                self.expect(Tok::LParen, "argument list")?;
                let gen = match name.as_str() {
                    "id" => Generator::Id(self.number("color")?),
                    "cup" => Generator::Cup(self.number("color")?),
                    "cap" => Generator::Cap(self.number("color")?),
                    "jw" => Generator::Jw(self.number("strand count")?),
                    "vertex" => {
                        let top = self.number("color")?;
                        self.expect(Tok::Comma, "comma")?;
                        let left = self.number("color")?;
                        self.expect(Tok::Comma, "comma")?;
                        let right = self.number("color")?;
                        Generator::Vertex { top, left, right }
                    }
                    "covertex" => {
                        let left = self.number("color")?;
                        self.expect(Tok::Comma, "comma")?;
                        let right = self.number("color")?;
                        self.expect(Tok::Comma, "comma")?;
                        let bottom = self.number("color")?;
                        Generator::Covertex { left, right, bottom }
                    }
                    "cross" => {
                        let sign = match self.peek() {
                            Some((Tok::Plus, _, _)) => {
                                self.pos += 1;
                                1
                            }
                            Some((Tok::Minus, _, _)) => {
                                self.pos += 1;
                                -1
                            }
                            _ => return Err(self.err_here("expected + or -")),
                        };
                        Generator::Cross { c1: 1, c2: 1, sign }
                    }
                    other => {
                        return Err(DslError::Syntax {
                            line,
                            col,
                            msg: format!("unknown generator {:?}", other),
                        })
                    }
                };
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(DiagramExpr::Gen(gen))
            }
            _ => Err(self.err_here("expected a generator or parenthesized expression")),
        }
    }
}

/// Parse the textual form into an expression tree (syntax only).
pub fn parse_expr(src: &str) -> Result<DiagramExpr, DslError> {
    let toks = Lexer::new(src).tokens()?;
    if toks.is_empty() {
        return Ok(DiagramExpr::Empty);
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err_here("trailing input"));
    }
    Ok(e)
}

/// The (top, bottom) boundary color lists of a well-colored expression.
pub fn boundary(e: &DiagramExpr) -> Result<(Vec<usize>, Vec<usize>), DslError> {
    match e {
        DiagramExpr::Empty => Ok((vec![], vec![])),
        DiagramExpr::Gen(g) => Ok((g.top_colors(), g.bottom_colors())),
        DiagramExpr::Seq(parts) => {
            let mut bounds = Vec::new();
            for p in parts {
                bounds.push(boundary(p)?);
            }
            for w in bounds.windows(2) {
                if w[0].1 != w[1].0 {
                    return Err(DslError::ColorMismatch {
                        upper: w[0].1.clone(),
                        lower: w[1].0.clone(),
                    });
                }
            }
            Ok((
                bounds.first().map(|b| b.0.clone()).unwrap_or_default(),
                bounds.last().map(|b| b.1.clone()).unwrap_or_default(),
            ))
        }
        DiagramExpr::Tensor(parts) => {
            let mut top = Vec::new();
            let mut bottom = Vec::new();
            for p in parts {
                let (t, b) = boundary(p)?;
                top.extend(t);
                bottom.extend(b);
            }
            Ok((top, bottom))
        }
    }
}

/// Parse and statically check boundary colors.
pub fn parse(src: &str) -> Result<DiagramExpr, DslError> {
    let e = parse_expr(src)?;
    boundary(&e)?;
    Ok(e)
}

/// Flatten an expression into strict layers (bottom of the diagram first),
/// padding tensor factors of unequal height with identity layers. Valid by
/// the interchange law for tensor and composition.
pub fn to_network(e: &DiagramExpr) -> Result<NetworkSpec, DslError> {
    boundary(e)?;
    Ok(NetworkSpec::new(layers_of(e)))
}

fn layers_of(e: &DiagramExpr) -> Vec<Vec<Generator>> {
    match e {
        DiagramExpr::Empty => vec![],
        DiagramExpr::Gen(g) => vec![vec![g.clone()]],
        DiagramExpr::Seq(parts) => {
            // parts are listed top to bottom; layers are listed bottom-up
            let mut layers = Vec::new();
            for p in parts.iter().rev() {
                layers.extend(layers_of(p));
            }
            layers
        }
        DiagramExpr::Tensor(parts) => {
            let part_layers: Vec<Vec<Vec<Generator>>> = parts.iter().map(layers_of).collect();
            let height = part_layers.iter().map(|l| l.len()).max().unwrap_or(0);
            let mut out: Vec<Vec<Generator>> = vec![Vec::new(); height];
            for (p, ls) in parts.iter().zip(part_layers) {
                let own = ls.len();
                let top = boundary(p).expect("checked").0;
                for (k, layer) in out.iter_mut().enumerate() {
                    if k < own {
                        layer.extend(ls[k].clone());
                    } else {
                        // pad above the factor with identities on its top colors
                        layer.extend(top.iter().map(|&c| Generator::Id(c)));
                    }
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_closed_loop() {
        let e = parse("cap(1) ; cup(1)").unwrap();
        let (top, bottom) = boundary(&e).unwrap();
        assert_eq!(top, vec![1, 1]);
        assert_eq!(bottom, vec![1, 1]);
    }

    #[test]
    fn parse_theta_shape() {
        let e = parse("vertex(2,1,1) ; covertex(1,1,2)").unwrap();
        let (top, bottom) = boundary(&e).unwrap();
        assert_eq!(top, vec![2]);
        assert_eq!(bottom, vec![2]);
    }

    #[test]
    fn ill_typed_composition_is_a_color_mismatch() {
        let err = parse("cup(1) ; id(2)").unwrap_err();
        assert_eq!(
            err,
            DslError::ColorMismatch {
                upper: vec![1, 1],
                lower: vec![2],
            }
        );
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = parse("vertex(2,1 1)").unwrap_err();
        match err {
            DslError::Syntax { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col > 1);
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn empty_expression_parses() {
        assert_eq!(parse("").unwrap(), DiagramExpr::Empty);
        assert_eq!(parse("  \n ").unwrap(), DiagramExpr::Empty);
    }

    #[test]
    fn pretty_roundtrip_nested() {
        let src = "(cap(1) ; cup(1)) | id(2)";
        let e = parse_expr(src).unwrap();
        let printed = pretty(&e);
        assert_eq!(parse_expr(&printed).unwrap(), e);
    }

    #[test]
    fn flatten_pads_with_identities() {
        let e = parse("(cap(1) ; cup(1)) | id(2)").unwrap();
        let net = to_network(&e).unwrap();
        assert_eq!(net.layers.len(), 2);
        // both layers carry the id(2) padding on the right
        assert!(net.layers[0].contains(&Generator::Id(2)));
        assert!(net.layers[1].contains(&Generator::Id(2)));
    }

    #[test]
    fn cross_sign_parses() {
        let e = parse("cross(+) ; cross(-)").unwrap();
        let (top, bottom) = boundary(&e).unwrap();
        assert_eq!(top, vec![1, 1]);
        assert_eq!(bottom, vec![1, 1]);
    }
}
