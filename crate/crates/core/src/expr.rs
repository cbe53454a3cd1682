//! Expression language for brace words over the generators `x1..xr`.
//!
//! Grammar (EBNF):
//!
//! ```text
//! expr    := term (("+" | "-") term)* ;
//! term    := smul ("." smul)* ;              . is the group product, left-assoc
//! smul    := [int] starred ;                 leading integer = additive multiple
//! starred := factor ("*" factor)* ;          * is the star operation, LEFT-assoc
//! factor  := atom ["^" int] ;                integer group power, "^-1" inverse
//! atom    := letter | "0" | "(" expr ")" | "-" atom ;
//! letter  := "x" int ("." int){0,2} ;        contiguous, no inner whitespace
//! ```
//!
//! Star is left-associative: `a * b * c` is `(a * b) * c`, matching how
//! iterated basis letters are built. Star is not associative in general,
//! so the convention carries meaning.
//!
//! Basis letters beyond the generators are atoms too: `x1.2` and `x1.2.1`
//! parse (as iterated stars of generators, which evaluate to exactly those
//! basis elements). A three-part letter is accepted only when its first two
//! indices coincide (`x2.2.1`) or are increasing (`x1.2.1`), mirroring index
//! validity. A letter is a single contiguous token, so `x1 . x2` is a
//! product of generators while `x1.2` is one letter.
//!
//! Lexing is whitespace-insensitive between tokens, and a leading integer
//! may carry a sign so that canonical output such as `-2 x1` re-parses.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::element::Element;
use crate::error::Error;
use crate::index::Rank;
use crate::ring::CoeffRing;

/// Abstract syntax of a brace word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Var(u32),
    IntLit(BigInt),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    SMul(BigInt, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Star(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, BigInt),
    Inv(Box<Ast>),
}

/// Lexical or syntax error, with the byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Letter(Vec<u32>),
    Plus,
    Minus,
    Dot,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Letter(parts) => {
                write!(f, "letter x")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ".")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Dot => write!(f, "'.'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
        }
    }
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn digits(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return err(start, "expected digits");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<u32>().map_err(|_| ParseError {
            offset: start,
            message: format!("index {text} is too large"),
        })
    }

    fn lex(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut toks = Vec::new();
        while self.pos < self.bytes.len() {
            let offset = self.pos;
            let b = self.bytes[self.pos];
            if b.is_ascii_whitespace() {
                self.pos += 1;
                continue;
            }
            let tok = match b {
                b'+' => {
                    self.pos += 1;
                    Tok::Plus
                }
                b'-' => {
                    self.pos += 1;
                    Tok::Minus
                }
                b'.' => {
                    self.pos += 1;
                    Tok::Dot
                }
                b'*' => {
                    self.pos += 1;
                    Tok::Star
                }
                b'^' => {
                    self.pos += 1;
                    Tok::Caret
                }
                b'(' => {
                    self.pos += 1;
                    Tok::LParen
                }
                b')' => {
                    self.pos += 1;
                    Tok::RParen
                }
                b'x' => {
                    self.pos += 1;
                    let mut parts = vec![self.digits()?];
                    // further ".int" pieces belong to the letter only when
                    // contiguous; "x1 . 2" stays three tokens
                    while self.pos + 1 < self.bytes.len()
                        && self.bytes[self.pos] == b'.'
                        && self.bytes[self.pos + 1].is_ascii_digit()
                    {
                        self.pos += 1;
                        parts.push(self.digits()?);
                    }
                    Tok::Letter(parts)
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                    Tok::Int(text.parse().expect("digits parse as BigInt"))
                }
                other => {
                    return err(offset, format!("unexpected character {:?}", other as char));
                }
            };
            toks.push((tok, offset));
        }
        Ok(toks)
    }
}

fn starts_factor(t: Option<&Tok>) -> bool {
    matches!(
        t,
        Some(Tok::Letter(_) | Tok::LParen | Tok::Minus | Tok::Int(_))
    )
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(t, _)| t)
    }

    fn peek3(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 2).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => err(self.offset(), format!("expected {want}, found {t}")),
            None => err(self.end, format!("expected {want}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut node = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    node = Ast::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    node = Ast::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut node = self.smul()?;
        while self.peek() == Some(&Tok::Dot) {
            self.pos += 1;
            node = Ast::Mul(Box::new(node), Box::new(self.smul()?));
        }
        Ok(node)
    }

    fn smul(&mut self) -> Result<Ast, ParseError> {
        // an Int is a leading scalar only when a factor follows; a bare "0"
        // still reaches atom as the zero element
        if matches!(self.peek(), Some(Tok::Int(_))) && starts_factor(self.peek2()) {
            let Some(Tok::Int(n)) = self.bump() else {
                unreachable!()
            };
            return Ok(Ast::SMul(n, Box::new(self.starred()?)));
        }
        // a signed leading scalar, so that canonical output like "-2 x1"
        // re-parses; a bare "-" before an atom is still unary minus
        if self.peek() == Some(&Tok::Minus)
            && matches!(self.peek2(), Some(Tok::Int(_)))
            && starts_factor(self.peek3())
        {
            self.pos += 1;
            let Some(Tok::Int(n)) = self.bump() else {
                unreachable!()
            };
            return Ok(Ast::SMul(-n, Box::new(self.starred()?)));
        }
        self.starred()
    }

    fn starred(&mut self) -> Result<Ast, ParseError> {
        let mut node = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            node = Ast::Star(Box::new(node), Box::new(self.factor()?));
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        let node = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let n = self.signed_int()?;
            return Ok(Ast::Pow(Box::new(node), n));
        }
        Ok(node)
    }

    fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Int(n)) => Ok(if negative { -n } else { n }),
            Some(t) => err(
                self.toks[self.pos - 1].1,
                format!("expected an integer exponent, found {t}"),
            ),
            None => err(self.end, "expected an integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let offset = self.offset();
        match self.bump() {
            Some(Tok::Letter(parts)) => letter_ast(&parts, offset),
            Some(Tok::Int(n)) => {
                if n.is_zero() {
                    Ok(Ast::IntLit(n))
                } else {
                    err(offset, "only the literal 0 denotes an element")
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Minus) => Ok(Ast::Neg(Box::new(self.atom()?))),
            Some(t) => err(
                offset,
                format!("expected 'x<i>', '0', '(' or '-', found {t}"),
            ),
            None => err(
                self.end,
                "expected 'x<i>', '0', '(' or '-', found end of input",
            ),
        }
    }
}

/// Multi-part letters are iterated stars of generators; that is exactly how
/// the corresponding basis elements arise.
fn letter_ast(parts: &[u32], offset: usize) -> Result<Ast, ParseError> {
    let var = |i: u32| Box::new(Ast::Var(i));
    match *parts {
        [i] => Ok(Ast::Var(i)),
        [i, j] => Ok(Ast::Star(var(i), var(j))),
        [i, j, k] => {
            // accepted when the first two indices coincide or increase
            if i <= j {
                Ok(Ast::Star(Box::new(Ast::Star(var(i), var(j))), var(k)))
            } else {
                err(
                    offset,
                    format!(
                        "letter x{i}.{j}.{k} is not canonical: the first two \
                         indices must coincide or increase"
                    ),
                )
            }
        }
        _ => err(offset, "basis letters have at most three indices"),
    }
}

/// Parses a brace word. Variable ranges are checked at evaluation time,
/// not here.
pub fn parse(src: &str) -> Result<Ast, ParseError> {
    let toks = Lexer {
        bytes: src.as_bytes(),
        pos: 0,
    }
    .lex()?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let ast = parser.expr()?;
    if let Some(t) = parser.peek() {
        return err(parser.offset(), format!("unexpected {t} after expression"));
    }
    Ok(ast)
}

/// Evaluates an expression to a canonical element of the given rank.
pub fn evaluate(ast: &Ast, rank: Rank) -> Result<Element, Error> {
    match ast {
        Ast::Var(i) => {
            Element::generator(rank, *i).map_err(|_| Error::VarOutOfRange { var: *i, rank })
        }
        Ast::IntLit(n) => {
            if n.is_zero() {
                Ok(Element::zero(rank))
            } else {
                Err(Error::IntLiteral { value: n.clone() })
            }
        }
        Ast::Add(l, r) => evaluate(l, rank)?.add(&evaluate(r, rank)?),
        Ast::Sub(l, r) => evaluate(l, rank)?.sub(&evaluate(r, rank)?),
        Ast::Neg(e) => Ok(evaluate(e, rank)?.neg()),
        Ast::SMul(n, e) => Ok(evaluate(e, rank)?.smul(n.clone())),
        Ast::Mul(l, r) => evaluate(l, rank)?.mul(&evaluate(r, rank)?),
        Ast::Star(l, r) => evaluate(l, rank)?.star(&evaluate(r, rank)?),
        Ast::Pow(e, n) => Ok(evaluate(e, rank)?.power(n.clone())),
        Ast::Inv(e) => Ok(evaluate(e, rank)?.inv()),
    }
}

/// Canonical textual form of an element; `evaluate(parse(s), rank)` of the
/// output reproduces the element.
pub fn format_canonical<R: CoeffRing>(x: &Element<R>) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::Index;
    use crate::ring::Integers;

    fn rk(r: u32) -> Rank {
        Rank::new(r).unwrap()
    }

    fn eval(src: &str, r: u32) -> Element {
        evaluate(&parse(src).unwrap(), rk(r)).unwrap()
    }

    fn el(r: u32, coords: &[(Index, i64)]) -> Element {
        Element::from_int_coords(Integers, rk(r), coords.iter().copied()).unwrap()
    }

    #[test]
    fn grammar_shapes() {
        let v = |i| Box::new(Ast::Var(i));
        assert_eq!(parse("x1 * x2").unwrap(), Ast::Star(v(1), v(2)));
        assert_eq!(parse("x1 . x2").unwrap(), Ast::Mul(v(1), v(2)));
        assert_eq!(
            parse("2 x1 - x2^-1").unwrap(),
            Ast::Sub(
                Box::new(Ast::SMul(BigInt::from(2), v(1))),
                Box::new(Ast::Pow(v(2), BigInt::from(-1))),
            )
        );
        // star chains associate to the left
        assert_eq!(
            parse("x1 * x2 * x1").unwrap(),
            Ast::Star(Box::new(Ast::Star(v(1), v(2))), v(1))
        );
        // leading scalar binds looser than star, tighter than product
        assert_eq!(
            parse("2 x1 * x2").unwrap(),
            Ast::SMul(BigInt::from(2), Box::new(Ast::Star(v(1), v(2))))
        );
        assert_eq!(
            parse("2 x1 . x2").unwrap(),
            Ast::Mul(Box::new(Ast::SMul(BigInt::from(2), v(1))), v(2))
        );
        assert_eq!(parse("-x1").unwrap(), Ast::Neg(v(1)));
        assert_eq!(parse("-2 x1").unwrap(), Ast::SMul(BigInt::from(-2), v(1)));
        assert_eq!(parse("0").unwrap(), Ast::IntLit(BigInt::from(0)));
        assert_eq!(
            parse("x1 - 0").unwrap(),
            Ast::Sub(v(1), Box::new(Ast::IntLit(BigInt::from(0))))
        );
        assert_eq!(
            parse("0 * x1").unwrap(),
            Ast::Star(Box::new(Ast::IntLit(BigInt::from(0))), v(1))
        );
    }

    #[test]
    fn letters_are_single_tokens() {
        let v = |i| Box::new(Ast::Var(i));
        assert_eq!(parse("x1.2").unwrap(), Ast::Star(v(1), v(2)));
        assert_eq!(parse("x2.1").unwrap(), Ast::Star(v(2), v(1)));
        assert_eq!(
            parse("x1.2.1").unwrap(),
            Ast::Star(Box::new(Ast::Star(v(1), v(2))), v(1))
        );
        assert_eq!(
            parse("x2.2.1").unwrap(),
            Ast::Star(Box::new(Ast::Star(v(2), v(2))), v(1))
        );
        // non-canonical triple letters are rejected at parse time
        let e = parse("x2.1.1").unwrap_err();
        assert_eq!(e.offset, 0);
        assert!(parse("x1.2.3.4").is_err());
    }

    #[test]
    fn errors_carry_byte_offsets() {
        assert_eq!(parse("x1 ? x2").unwrap_err().offset, 3);
        assert_eq!(parse("x1 ^ x2").unwrap_err().offset, 5);
        assert_eq!(parse("x").unwrap_err().offset, 1);
        assert_eq!(parse("(x1 + x2").unwrap_err().offset, 8);
        assert_eq!(parse("5").unwrap_err().offset, 0);
        assert!(parse("").is_err());
    }

    #[test]
    fn evaluation_matches_the_arithmetic() {
        assert_eq!(
            eval("x1 * x2", 2),
            Element::basis(rk(2), Index::Pair(1, 2)).unwrap()
        );
        assert_eq!(
            eval("x1 . x2", 2),
            el(
                2,
                &[
                    (Index::Gen(1), 1),
                    (Index::Gen(2), 1),
                    (Index::Pair(1, 2), 1)
                ]
            )
        );
        assert_eq!(
            eval("x1 * x2 * x1", 2),
            Element::basis(rk(2), Index::Triple(1, 2, 1)).unwrap()
        );
        assert_eq!(
            eval("x1 . x1", 2),
            el(2, &[(Index::Gen(1), 2), (Index::Pair(1, 1), 1)])
        );
        assert!(eval("x1 * (x2 * x1)", 2).is_zero());
        assert_eq!(eval("x1 . x1^-1", 1), Element::zero(rk(1)));
        // a star into the square of the brace, and a four-fold star
        assert!(eval("x1 * x2.3", 3).is_zero());
        assert!(eval("((x1 * x2) * x3) * x4", 4).is_zero());
        // the multiplicative group is not commutative
        assert_eq!(
            eval("(x1 . x2) - (x2 . x1)", 2),
            el(2, &[(Index::Pair(1, 2), 1), (Index::Pair(2, 1), -1)])
        );
        assert_eq!(eval("x1^3", 1), eval("3 x1 + 3 x1.1", 1));
    }

    #[test]
    fn variables_are_checked_at_evaluation() {
        let ast = parse("x2").unwrap();
        assert!(evaluate(&ast, rk(2)).is_ok());
        let e = evaluate(&ast, rk(1)).unwrap_err();
        assert!(matches!(e, Error::VarOutOfRange { var: 2, .. }));
        assert!(matches!(
            evaluate(&parse("x0").unwrap(), rk(3)),
            Err(Error::VarOutOfRange { var: 0, .. })
        ));
    }

    #[test]
    fn product_is_sum_plus_star() {
        for (a, b) in [("x1", "x2"), ("x1 + 2 x2", "x2.1"), ("x1^2", "x1 . x2")] {
            let lhs = eval(&format!("({a}) . ({b})"), 2);
            let rhs = eval(&format!("({a}) + ({b}) + ({a}) * ({b})"), 2);
            assert_eq!(lhs, rhs, "a={a}, b={b}");
        }
    }

    #[test]
    fn canonical_output_round_trips() {
        let cases = [
            el(2, &[(Index::Gen(1), 2), (Index::Pair(1, 1), 1)]),
            el(2, &[(Index::Gen(1), -1), (Index::Pair(1, 2), -3)]),
            el(
                3,
                &[
                    (Index::Gen(3), 5),
                    (Index::TripleRep(2, 1), -2),
                    (Index::Triple(1, 3, 2), 7),
                ],
            ),
            Element::zero(rk(2)),
        ];
        for x in cases {
            let text = format_canonical(&x);
            let back = evaluate(&parse(&text).unwrap(), x.rank()).unwrap();
            assert_eq!(back, x, "text {text:?}");
        }
    }

    #[test]
    fn formatting_examples() {
        assert_eq!(
            format_canonical(&Element::basis(rk(2), Index::Triple(1, 2, 1)).unwrap()),
            "x1.2.1"
        );
        assert_eq!(format_canonical(&Element::zero(rk(1))), "0");
        assert_eq!(
            format_canonical(&el(2, &[(Index::Gen(1), 2), (Index::Pair(1, 1), -1)])),
            "2 x1 - x1.1"
        );
    }
}
