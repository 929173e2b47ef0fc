//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: sums and differences of products; factors are integers,
//! variables, parenthesized expressions, each optionally raised to a
//! natural power with `^`. Division is allowed by nonzero constants only.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Field;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
    field: Field,
}

pub fn parse_polynomial(text: &str, names: &[String], field: Field) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        names,
        field,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let poly = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected `{}`", p.peek_char())));
    }
    Ok(poly)
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        std::str::from_utf8(&self.src[self.pos..])
            .ok()
            .and_then(|s| s.chars().next())
            .unwrap_or('?')
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = 1 + before.iter().filter(|&&b| b == b'\n').count();
        let start = before.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
        let column = 1 + String::from_utf8_lossy(&before[start..]).chars().count();
        Error::parse(line, column, message)
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat(b'-') {
            -&self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.power()?;
                let c = match (d.len(), d.degree()) {
                    (1, Some(0)) => d.coeff(&crate::monomial::Exponent::zero(self.nvars())),
                    (0, _) => {
                        self.pos = at;
                        return Err(self.error("division by zero"));
                    }
                    _ => {
                        self.pos = at;
                        return Err(self.error("division by a non-constant"));
                    }
                };
                acc = acc.scale(&c.inv());
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let n = self.natural()?;
            match u32::try_from(n) {
                Ok(k) if k <= 10_000 => return Ok(base.pow(k)),
                _ => {
                    self.pos = at;
                    return Err(self.error("exponent too large"));
                }
            }
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some(b'0'..=b'9') => {
                let n = self.natural()?;
                Ok(Polynomial::constant(self.nvars(), self.field.from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Polynomial::var(self.nvars(), self.field, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown variable `{name}`")))
                    }
                }
            }
            None => Err(self.error("unexpected end of expression")),
            Some(_) => Err(self.error(format!("unexpected `{}`", self.peek_char()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn names() -> Vec<String> {
        ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect()
    }

    fn roundtrip(s: &str) -> String {
        let n = names();
        parse_polynomial(s, &n, Field::Rational)
            .unwrap()
            .render(&n, &MonomialOrder::grevlex())
    }

    #[test]
    fn parses_example_generators() {
        assert_eq!(roundtrip("w-x*y"), "-x*y + w");
        assert_eq!(roundtrip("-x^4*z + y^5"), "y^5 - x^4*z");
        assert_eq!(roundtrip("(x+1)*(x-1)"), "x^2 - 1");
        assert_eq!(roundtrip("-3/2*x^2*y"), "-3/2*x^2*y");
        assert_eq!(roundtrip("x/2 + x/2"), "x");
    }

    #[test]
    fn errors_carry_positions() {
        let n = names();
        match parse_polynomial("x + q", &n, Field::Rational) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x/y", &n, Field::Rational).is_err());
        assert!(parse_polynomial("x/0", &n, Field::Rational).is_err());
        assert!(parse_polynomial("(x", &n, Field::Rational).is_err());
        assert!(parse_polynomial("", &n, Field::Rational).is_err());
        assert!(parse_polynomial("x y", &n, Field::Rational).is_err());
    }

    #[test]
    fn division_by_multiple_of_p_fails() {
        let n = names();
        let f = Field::prime(5).unwrap();
        assert!(parse_polynomial("x/5", &n, f).is_err());
        assert!(parse_polynomial("x/3", &n, f).is_ok());
    }
}
