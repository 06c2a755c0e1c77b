use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, Polynomial, Rational, VarId};
use crate::error::ParseError;

/// Parses the textual polynomial form under the default order.
///
/// ```text
/// poly   := ['+'|'-'] term (('+'|'-') term)*
/// term   := coef ['*' factors] | factors
/// factors:= factor ('*' factor)*
/// coef   := int | int '/' posint
/// factor := var ['^' posint]
/// var    := 'y' nat | 'x' posint '_' nat
/// ```
///
/// `y<i>` is shorthand for `x1_<i>`. Whitespace is ignored between tokens.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    parse_polynomial_with_order(text, MonomialOrder::default())
}

pub fn parse_polynomial_with_order(text: &str, order: MonomialOrder) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(text);
    let mut terms = Vec::new();
    p.skip_ws();
    let mut sign = match p.peek() {
        Some('-') => {
            p.bump();
            -Rational::one()
        }
        Some('+') => {
            p.bump();
            Rational::one()
        }
        _ => Rational::one(),
    };
    loop {
        let (c, m) = p.term()?;
        terms.push((sign * c, m));
        p.skip_ws();
        sign = match p.peek() {
            None => break,
            Some('+') => Rational::one(),
            Some('-') => -Rational::one(),
            Some(ch) => return Err(p.syntax(format!("expected `+` or `-`, found `{ch}`"))),
        };
        p.bump();
    }
    Ok(Polynomial::from_terms(order, terms))
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn syntax(&self, message: String) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column,
            message,
        }
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        (!s.is_empty()).then_some(s)
    }

    fn term(&mut self) -> Result<(Rational, Monomial), ParseError> {
        self.skip_ws();
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.coefficient()?;
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok((c, Monomial::one()));
            }
            self.bump();
            c
        } else {
            Rational::one()
        };
        let mut m = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                break;
            }
            self.bump();
            m = m.mul(&self.factor()?);
        }
        Ok((coeff, m))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let num: BigInt = self.digits().expect("caller saw a digit").parse().unwrap();
        self.skip_ws();
        if self.peek() != Some('/') {
            return Ok(Rational::from_integer(num));
        }
        let (line, column) = (self.line, self.column);
        self.bump();
        self.skip_ws();
        let Some(d) = self.digits() else {
            let f = self.found();
            return Err(self.syntax(format!("expected denominator, found {f}")));
        };
        let den: BigInt = d.parse().unwrap();
        if den.is_zero() {
            return Err(ParseError::ZeroDenominator { line, column });
        }
        Ok(Rational::new(num, den))
    }

    fn factor(&mut self) -> Result<Monomial, ParseError> {
        self.skip_ws();
        let v = self.variable()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(Monomial::var(v));
        }
        self.bump();
        self.skip_ws();
        let Some(d) = self.digits() else {
            let f = self.found();
            return Err(self.syntax(format!("expected exponent, found {f}")));
        };
        match d.parse::<u32>() {
            Ok(e) if e > 0 => Ok(Monomial::pow(v, e)),
            _ => Err(self.syntax(format!("exponent `{d}` must be a positive integer"))),
        }
    }

    fn variable(&mut self) -> Result<VarId, ParseError> {
        let (line, column) = (self.line, self.column);
        let malformed = |text: String| ParseError::MalformedVariable { line, column, text };
        match self.peek() {
            Some('y') => {
                self.bump();
                let level = self.digits().ok_or_else(|| malformed("y".into()))?;
                let level = level.parse().map_err(|_| malformed(format!("y{level}")))?;
                Ok(VarId::y(level))
            }
            Some('x') => {
                self.bump();
                let coord = self.digits().ok_or_else(|| malformed("x".into()))?;
                if self.peek() != Some('_') {
                    return Err(malformed(format!("x{coord}")));
                }
                self.bump();
                let level = self.digits().ok_or_else(|| malformed(format!("x{coord}_")))?;
                let text = format!("x{coord}_{level}");
                let coord: u32 = coord.parse().map_err(|_| malformed(text.clone()))?;
                let level: u32 = level.parse().map_err(|_| malformed(text.clone()))?;
                if coord == 0 {
                    return Err(malformed(text));
                }
                Ok(VarId::new(coord, level))
            }
            _ => {
                let f = self.found();
                Err(self.syntax(format!("expected a variable, found {f}")))
            }
        }
    }
}
