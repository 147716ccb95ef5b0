//! Parser for class expressions in the symbols h and t.
//!
//! Grammar: sums and differences of products of factors, where a factor is a
//! rational literal ("3", "1/2"), the symbol h or t, a parenthesized
//! expression, or any of those raised to a nonnegative integer power with ^.
//! Rational literals are written without spaces around the slash.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::rational::{rat_int, Rational};

use super::ht_poly::Poly2;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    H,
    T,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err(msg: impl Into<String>) -> Error {
    Error::ParseClass(msg.into())
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            'h' => {
                toks.push(Tok::H);
                i += 1;
            }
            't' => {
                toks.push(Tok::T);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = src[start..i].parse().expect("digits");
                // a slash immediately followed by digits continues the literal
                if i < bytes.len() && bytes[i] == b'/' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)
                {
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let denom: BigInt = src[dstart..i].parse().expect("digits");
                    if denom.is_zero() {
                        return Err(err("denominator of a rational literal is zero"));
                    }
                    toks.push(Tok::Num(Rational::new(numer, denom)));
                } else {
                    toks.push(Tok::Num(Rational::from_integer(numer)));
                }
            }
            other => return Err(err(format!("unexpected character {other:?}"))),
        }
    }
    Ok(toks)
}

struct Cursor {
    toks: Vec<Tok>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        match self.next() {
            Some(t) if t == tok => Ok(()),
            Some(t) => Err(err(format!("expected {tok:?}, found {t:?}"))),
            None => Err(err(format!("expected {tok:?}, found end of input"))),
        }
    }
}

/// Parse a class expression into an unreduced (h, t)-polynomial.
pub(crate) fn parse_class_expr(src: &str) -> Result<Poly2> {
    let mut cur = Cursor {
        toks: lex(src)?,
        pos: 0,
    };
    let p = parse_expr(&mut cur)?;
    match cur.peek() {
        None => Ok(p),
        Some(t) => Err(err(format!("trailing input at {t:?}"))),
    }
}

fn parse_expr(cur: &mut Cursor) -> Result<Poly2> {
    let mut acc = match cur.peek() {
        Some(Tok::Minus) => {
            cur.next();
            parse_term(cur)?.neg()
        }
        Some(Tok::Plus) => {
            cur.next();
            parse_term(cur)?
        }
        _ => parse_term(cur)?,
    };
    loop {
        match cur.peek() {
            Some(Tok::Plus) => {
                cur.next();
                acc = acc.add(&parse_term(cur)?);
            }
            Some(Tok::Minus) => {
                cur.next();
                acc = acc.add(&parse_term(cur)?.neg());
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(cur: &mut Cursor) -> Result<Poly2> {
    let mut acc = parse_factor(cur)?;
    while cur.peek() == Some(&Tok::Star) {
        cur.next();
        acc = acc.mul(&parse_factor(cur)?);
    }
    Ok(acc)
}

fn parse_factor(cur: &mut Cursor) -> Result<Poly2> {
    let base = parse_atom(cur)?;
    if cur.peek() != Some(&Tok::Caret) {
        return Ok(base);
    }
    cur.next();
    let exp = match cur.next() {
        Some(Tok::Num(r)) if r.is_integer() && r >= rat_int(0) => {
            usize::try_from(r.to_integer()).map_err(|_| err("exponent too large"))?
        }
        Some(t) => return Err(err(format!("exponent must be a nonnegative integer, found {t:?}"))),
        None => return Err(err("expected exponent after ^")),
    };
    let mut acc = Poly2::one();
    for _ in 0..exp {
        acc = acc.mul(&base);
    }
    Ok(acc)
}

fn parse_atom(cur: &mut Cursor) -> Result<Poly2> {
    match cur.next() {
        Some(Tok::Num(r)) => Ok(Poly2::monomial(0, 0, r)),
        Some(Tok::H) => Ok(Poly2::monomial(1, 0, rat_int(1))),
        Some(Tok::T) => Ok(Poly2::monomial(0, 1, rat_int(1))),
        Some(Tok::LParen) => {
            let inner = parse_expr(cur)?;
            cur.expect(Tok::RParen)?;
            Ok(inner)
        }
        Some(t) => Err(err(format!("unexpected token {t:?}"))),
        None => Err(err("unexpected end of input")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn parses_basic_expressions() {
        assert_eq!(parse_class_expr("1").unwrap(), Poly2::monomial(0, 0, rat_int(1)));
        assert_eq!(parse_class_expr("h").unwrap(), Poly2::monomial(1, 0, rat_int(1)));
        assert_eq!(
            parse_class_expr("-3/2*t").unwrap(),
            Poly2::monomial(0, 1, rat(-3, 2))
        );
    }

    #[test]
    fn parses_sums_products_powers() {
        // (h + t)^2 = h^2 + 2 h t + t^2
        let p = parse_class_expr("(h + t)^2").unwrap();
        let mut expect = Poly2::monomial(2, 0, rat_int(1));
        expect.add_term(1, 1, rat_int(2));
        expect.add_term(0, 2, rat_int(1));
        assert_eq!(p, expect);

        let q = parse_class_expr("h^2 - 2*h*t + t^2 + h*t + h*t").unwrap();
        assert_eq!(q, expect.add(&Poly2::monomial(1, 1, rat_int(-2))));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_class_expr("x").is_err());
        assert!(parse_class_expr("h +").is_err());
        assert!(parse_class_expr("(h").is_err());
        assert!(parse_class_expr("h ^ t").is_err());
        assert!(parse_class_expr("1/0").is_err());
        assert!(parse_class_expr("h 2").is_err());
    }
}
