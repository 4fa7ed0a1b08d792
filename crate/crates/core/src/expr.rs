//! Polynomial expressions in `x` and `y`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := ('+' | '-') unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Literals are integers or fractions; there are no decimals. Products and
//! powers are expanded exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{SparseBiPoly, MAX_EXPONENT};
use crate::rational::Rational;

/// Powers of polynomials with two or more terms are expanded only up to this
/// exponent.
pub const MAX_EXPANDED_POWER: u64 = 4096;

pub fn parse_poly(source: &str) -> Result<SparseBiPoly> {
    let mut parser = Parser { src: source.as_bytes(), pos: 0 };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SparseBiPoly> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<SparseBiPoly> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            let rhs = self.unary()?;
            acc = acc.checked_mul(&rhs)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SparseBiPoly> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<SparseBiPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits().ok_or_else(|| self.error("expected a nonnegative integer exponent"))?;
        let exp: u64 = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(Error::Syntax { offset: at, message: "exponent does not fit in 63 bits".into() })?;
        if base.t() == 1 {
            let term = &base.terms()[0];
            let scale = |e: u64| e.checked_mul(exp).filter(|&v| v <= MAX_EXPONENT).ok_or(Error::ExponentOverflow);
            let unit = term.coeff.is_one() || (-&term.coeff).is_one();
            if !unit && exp > MAX_EXPANDED_POWER {
                return Err(Error::Syntax {
                    offset: at,
                    message: format!("refusing to raise a coefficient to a power above {MAX_EXPANDED_POWER}"),
                });
            }
            let coeff = crate::rational::pow_u64(&term.coeff, exp);
            return SparseBiPoly::monomial(coeff, scale(term.alpha)?, scale(term.beta)?);
        }
        if base.t() > 1 && exp > MAX_EXPANDED_POWER {
            return Err(Error::Syntax {
                offset: at,
                message: format!("refusing to expand a multi-term power above {MAX_EXPANDED_POWER}"),
            });
        }
        base.checked_pow(exp)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<SparseBiPoly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                SparseBiPoly::monomial(Rational::one(), 1, 0)
            }
            Some(b'y') => {
                self.pos += 1;
                SparseBiPoly::monomial(Rational::one(), 0, 1)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                let mut den = BigInt::one();
                if self.eat(b'/') {
                    self.skip_ws();
                    let at = self.pos;
                    den = self.digits().ok_or_else(|| self.error("expected a denominator"))?.parse().unwrap();
                    if den.is_zero() {
                        return Err(Error::Syntax { offset: at, message: "zero denominator".into() });
                    }
                }
                Ok(SparseBiPoly::constant(Rational::new(num, den)))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn expands_products() {
        let f = parse_poly("(y - x - 2)*(y + x)").unwrap();
        let expected = SparseBiPoly::new([(int(1), 0, 2), (int(-1), 2, 0), (int(-2), 0, 1), (int(-2), 1, 0)]).unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn rational_literals() {
        let f = parse_poly("3/2*x^2*y - y + 1").unwrap();
        assert_eq!(f.t(), 3);
        assert_eq!(f.terms().iter().find(|t| t.alpha == 2).unwrap().coeff, ratio(3, 2));
    }

    #[test]
    fn syntax_errors_have_offsets() {
        assert_eq!(
            parse_poly("x^"),
            Err(Error::Syntax { offset: 2, message: "expected a nonnegative integer exponent".into() })
        );
        assert!(matches!(parse_poly("x + z"), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(parse_poly("(x"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly("1/0"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly("x y"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly("1.5"), Err(Error::Syntax { offset: 1, .. })));
    }

    #[test]
    fn huge_monomial_powers() {
        let f = parse_poly("x^3*y^1125899906842624").unwrap();
        assert_eq!(f.terms()[0].beta, 1 << 50);
        assert_eq!(parse_poly("(x^4611686018427387904)^2"), Err(Error::ExponentOverflow));
        assert!(parse_poly("(x+y)^100000").is_err());
        assert_eq!(parse_poly("(2*x)^3").unwrap(), SparseBiPoly::monomial(int(8), 3, 0).unwrap());
    }

    #[test]
    fn unary_and_zero() {
        assert_eq!(parse_poly("-x^2").unwrap(), SparseBiPoly::monomial(int(-1), 2, 0).unwrap());
        assert!(parse_poly("x - x").unwrap().is_zero());
        assert!(parse_poly("0").unwrap().is_zero());
    }
}
