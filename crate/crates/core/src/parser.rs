//! Reader and printer for the table notation of polynomials.
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := [sign] [coeff ['*']] factor (['*'] factor)*  |  [sign] coeff
//! coeff  := integer | integer '/' integer | param
//! factor := var ['^' (integer | '{' integer '}')]
//! var    := 't' | 'z' | 'x' | 'y' | 'x' digit+
//! param  := 'a' .. 'e'
//! ```
//!
//! Juxtaposition is multiplication and `^` binds tighter than juxtaposition.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{normalize, Coefficient, Monomial, Polynomial, VarList, PARAMETER_LETTERS};

pub fn parse_polynomial(text: &str, vars: &VarList) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let terms = p.poly()?;
    normalize(vars, terms)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarList,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn poly(&mut self) -> Result<Vec<(Monomial, Coefficient)>> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            terms.push(self.term(negative)?);
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.syntax("'+', '-' or end of input"),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self, negative: bool) -> Result<(Monomial, Coefficient)> {
        let n = self.vars.len();
        let mut coeff: Option<Coefficient> = None;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return self.syntax("denominator");
                    }
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.syntax("nonzero denominator");
                    }
                    value /= BigRational::from_integer(den);
                }
                coeff = Some(Coefficient::Rational(value));
            }
            Some(c) if PARAMETER_LETTERS.contains(&(c as char)) => {
                if negative {
                    return self.syntax("unsigned generic parameter");
                }
                self.pos += 1;
                coeff = Some(Coefficient::param(c as char));
            }
            _ => {}
        }
        if coeff.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                return self.syntax("variable after '*'");
            }
        }

        let mut exps = vec![0u32; n];
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let (i, e) = self.factor()?;
                    exps[i] += e;
                    factors += 1;
                }
                _ => break,
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                    return self.syntax("variable after '*'");
                }
            }
        }
        if factors == 0 && coeff.is_none() {
            return self.syntax("term");
        }
        let mut coeff = coeff.unwrap_or_else(Coefficient::one);
        if negative {
            if let Coefficient::Rational(r) = &mut coeff {
                *r = -r.clone();
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        let c = self.src[self.pos];
        self.pos += 1;
        if c == b'x' {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("?");
        if PARAMETER_LETTERS.contains(&(c as char)) {
            return Err(Error::Syntax {
                position: start,
                expected: "variable (generic parameters may only lead a term)".to_string(),
            });
        }
        let index = self.vars.index_of(name).ok_or_else(|| Error::UnknownVariable {
            name: name.to_string(),
            position: start,
        })?;
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let braced = self.peek() == Some(b'{');
            if braced {
                self.pos += 1;
            }
            match self.peek() {
                Some(b'-') => return Err(Error::NegativeExponent { position: self.pos }),
                Some(c) if c.is_ascii_digit() => {}
                _ => return self.syntax("exponent"),
            }
            let value = self.integer()?;
            exp = u32::try_from(value).map_err(|_| Error::Syntax {
                position: self.pos,
                expected: "exponent below 2^32".to_string(),
            })?;
            if braced {
                if self.peek() != Some(b'}') {
                    return self.syntax("'}'");
                }
                self.pos += 1;
            }
        }
        Ok((index, exp))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit run parses"))
    }
}

/// Canonical spaced form, e.g. `t^2 + z^3 x + z x^5 y^2`.
pub fn render(poly: &Polynomial) -> String {
    render_with(poly, " ", true)
}

/// Tight form as the tables write it, e.g. `t^3+zx+tx^3+ty`.
pub fn render_compact(poly: &Polynomial) -> String {
    render_with(poly, "", false)
}

fn render_with(poly: &Polynomial, sep: &str, spaced: bool) -> String {
    let vars = poly.vars();
    let mut out = String::new();
    for (k, (m, c)) in poly.terms().enumerate() {
        let negative = Polynomial::sign_is_negative(c);
        match (k, negative, spaced) {
            (0, true, _) => out.push('-'),
            (0, false, _) => {}
            (_, true, true) => out.push_str(" - "),
            (_, false, true) => out.push_str(" + "),
            (_, true, false) => out.push('-'),
            (_, false, false) => out.push('+'),
        }
        let is_const = m.exponents().iter().all(|&e| e == 0);
        let coeff = match c {
            Coefficient::Rational(r) => {
                let r = r.abs();
                if r.is_one() && !is_const {
                    None
                } else if r.is_integer() {
                    Some(r.numer().to_string())
                } else {
                    Some(format!("{}/{}", r.numer(), r.denom()))
                }
            }
            Coefficient::Param { name, .. } => Some(name.to_string()),
        };
        match coeff {
            Some(s) if is_const => out.push_str(&s),
            Some(s) => {
                out.push_str(&s);
                out.push_str(if spaced { " " } else { "" });
                out.push_str(&m.display(vars, sep));
            }
            None => out.push_str(&m.display(vars, sep)),
        }
    }
    out
}
