//! Text grammar for polynomials: rational literals, variables `t r s`,
//! operators `+ - * ^` and parentheses. Juxtaposition is rejected.

use num::ToPrimitive;

use super::arith::{parse_rational, Rational};
use super::binary::BinaryForm;
use super::mpoly::MPoly;
use super::poly::UniPoly;
use crate::error::{Error, Result};

const VARS: [char; 3] = ['t', 'r', 's'];

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Var(usize),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(chars[start..i].iter().collect()));
        } else if let Some(v) = VARS.iter().position(|&x| x == c) {
            out.push(Tok::Var(v));
            i += 1;
        } else if "+-*^/()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at token {}", self.pos)))
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = if self.eat('-') { -&self.term()? } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k = n.parse::<u32>().ok().filter(|&k| k <= 1000);
                    match k {
                        Some(k) => Ok(base.pow(k)),
                        None => self.err("exponent out of range"),
                    }
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut text = n;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            self.pos += 1;
                            text = format!("{text}/{d}");
                        }
                        _ => return self.err("expected denominator"),
                    }
                }
                Ok(MPoly::constant(VARS.len(), parse_rational(&text)?))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(MPoly::var(VARS.len(), v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            _ => self.err("expected number, variable or '('"),
        }
    }
}

/// Parses an expression into a polynomial in `(t, r, s)`.
pub fn parse_poly(src: &str) -> Result<MPoly> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input (implicit multiplication is not allowed)");
    }
    Ok(e)
}

/// Parses a univariate polynomial in `t`.
pub fn parse_unipoly(src: &str) -> Result<UniPoly> {
    let p = parse_poly(src)?;
    let mut coeffs = Vec::new();
    for (e, c) in p.terms() {
        if e[1] != 0 || e[2] != 0 {
            return Err(Error::Parse(format!("{src:?} must only involve t")));
        }
        let d = e[0].to_usize().unwrap();
        if coeffs.len() <= d {
            coeffs.resize(d + 1, Rational::default());
        }
        coeffs[d] = c.clone();
    }
    Ok(UniPoly::new(coeffs))
}

/// Parses a binary form in `r, s` of the given degree.
pub fn parse_binary_form(src: &str, degree: usize) -> Result<BinaryForm> {
    let p = parse_poly(src)?;
    let mut rs = MPoly::zero(2);
    for (e, c) in p.terms() {
        if e[0] != 0 {
            return Err(Error::Parse(format!("{src:?} must only involve r and s")));
        }
        rs.add_term(vec![e[1], e[2]], c.clone());
    }
    BinaryForm::from_mpoly(&rs, degree)
        .map_err(|_| Error::Parse(format!("{src:?} is not homogeneous of degree {degree}")))
}
