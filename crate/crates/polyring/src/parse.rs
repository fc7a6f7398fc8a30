//! Text form for polynomials and ideal files.
//!
//! A polynomial is a signed sum of terms like `3/2*x0^2*x3 - x1*x2`;
//! variables are `x0` through `x9`. An ideal file lists one generator per
//! line, with `#` starting a comment and blank lines ignored.

use exact::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::PolyError;

pub fn parse_poly(text: &str, nvars: usize) -> Result<Poly, PolyError> {
    Parser::new(text, nvars).poly()
}

pub fn parse_ideal(text: &str, nvars: usize) -> Result<Ideal, PolyError> {
    let mut gens = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if line.trim().is_empty() {
            continue;
        }
        gens.push(parse_poly(line, nvars)?);
    }
    Ok(Ideal::new(nvars, gens))
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, nvars: usize) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, nvars, text }
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse(format!("{} in {:?}", msg.into(), self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn digits(&mut self) -> Result<u64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err(format!("number {s} too large")))
    }

    fn poly(&mut self) -> Result<Poly, PolyError> {
        if self.peek().is_none() {
            return Err(self.err("empty polynomial text"));
        }
        let mut acc = Poly::zero(self.nvars);
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                Some(_) => false,
                None => return Err(self.err("trailing sign")),
            };
            let term = self.term()?;
            acc = if negative { acc - term } else { acc + term };
            match self.peek() {
                None => return Ok(acc),
                Some('+') | Some('-') => continue,
                Some(c) => return Err(self.err(format!("unexpected character {c:?}"))),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.nvars];
        loop {
            match self.peek() {
                Some('x') => {
                    self.bump();
                    let idx = self.digits()? as usize;
                    if idx >= 10 || idx >= self.nvars {
                        return Err(self.err(format!(
                            "variable x{idx} out of range for a ring with {} variables",
                            self.nvars
                        )));
                    }
                    let e = if self.peek() == Some('^') {
                        self.bump();
                        u32::try_from(self.digits()?)
                            .map_err(|_| self.err("exponent too large"))?
                    } else {
                        1
                    };
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent too large"))?;
                }
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits()?;
                    let den = if self.peek() == Some('/') {
                        self.bump();
                        let d = self.digits()?;
                        if d == 0 {
                            return Err(self.err("zero denominator"));
                        }
                        d
                    } else {
                        1
                    };
                    coeff *= Rational::new(BigInt::from(num), BigInt::from(den));
                }
                Some(c) => return Err(self.err(format!("unexpected character {c:?}"))),
                None => return Err(self.err("truncated term")),
            }
            if self.peek() == Some('*') {
                self.bump();
                continue;
            }
            break;
        }
        if coeff.is_zero() {
            return Ok(Poly::zero(self.nvars));
        }
        Ok(Poly::monomial(Monomial::new(exps), coeff))
    }
}
