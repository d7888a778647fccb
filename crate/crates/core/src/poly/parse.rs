//! Text syntax for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' poly ')'
//! ```
//!
//! Variables are identifiers (`[A-Za-z_][A-Za-z0-9_]*`) drawn from the
//! caller's list of names, by default `x1..xn`. Whitespace is ignored.

use num_bigint::BigInt;

use super::field::Field;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Default variable names `x1..xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

/// Parses `text` as a polynomial in the variables `names` (in order).
pub fn parse_polynomial<F: Field>(text: &str, names: &[String]) -> Result<Polynomial<F>> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        names,
    };
    let p = parser.poly()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn column(&self) -> usize {
        // 1-based character column
        self.pos.min(self.chars.len()) + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.column(),
            message: message.into(),
        }
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

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn poly<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = Polynomial::zero(self.nvars());
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term::<F>()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor::<F>()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor::<F>()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom::<F>()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let exp = self.integer()?;
            let exp: u32 = exp
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn atom<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let n = self.nvars();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                let value =
                    F::from_ratio(&num, &den).ok_or_else(|| self.error("zero denominator"))?;
                Ok(Polynomial::constant(n, value))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.names.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(n, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown variable `{name}`")))
                    }
                }
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.poly::<F>()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(self.error(format!("unexpected character `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::Rational;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn parse(text: &str) -> Result<Polynomial<Rational>> {
        parse_polynomial(text, &names(&["x", "y"]))
    }

    #[test]
    fn parses_grammar() {
        let p = parse("x^2*y - 3/4*x + 1").unwrap();
        assert_eq!(
            p.display_with(&names(&["x", "y"])).to_string(),
            "x^2*y - 3/4*x + 1"
        );
        assert_eq!(
            parse("-(x - y)^2").unwrap(),
            parse("-x^2 + 2*x*y - y^2").unwrap()
        );
        assert!(parse("0").unwrap().is_zero());
        assert_eq!(parse(" x * y ").unwrap(), parse("x*y").unwrap());
    }

    #[test]
    fn default_names_round_trip() {
        let p: Polynomial<Rational> = parse_polynomial("x1*x2 - 1", &default_names(2)).unwrap();
        assert_eq!(p.to_string(), "x1*x2 - 1");
        let again: Polynomial<Rational> =
            parse_polynomial(&p.to_string(), &default_names(2)).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn reports_columns() {
        assert_eq!(
            parse("x + z").unwrap_err(),
            Error::Parse {
                column: 5,
                message: "unknown variable `z`".into()
            }
        );
        assert!(matches!(
            parse("x +").unwrap_err(),
            Error::Parse { column: 4, .. }
        ));
        assert!(matches!(parse("1/0").unwrap_err(), Error::Parse { .. }));
        assert!(matches!(
            parse("(x").unwrap_err(),
            Error::Parse { column: 3, .. }
        ));
        assert!(matches!(
            parse("x y").unwrap_err(),
            Error::Parse { column: 3, .. }
        ));
    }
}
