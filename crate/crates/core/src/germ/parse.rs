//! Parser for germ strings such as `t - 1/2*t^3 + (0,1)*t^4 + O(t^6)`.
//!
//! ```text
//! germ     := ['-'] term (('+' | '-') term)*
//! term     := 'O(' var ['^' int] ')' | coeff ['*' power] | power
//! power    := var ['^' int]
//! coeff    := rational | '(' rational ',' rational ')'
//! rational := int ['/' int]
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentGerm;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
    var: char,
}

enum Term {
    Known(i64, Coefficient),
    Tail(i64),
}

pub(super) fn parse(input: &str, var: char) -> Result<LaurentGerm> {
    let mut p = Parser {
        input,
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        var,
    };
    if p.chars.is_empty() {
        return Err(p.error("empty input"));
    }
    let mut terms = Vec::new();
    let mut tail: Option<i64> = None;
    let mut negate = p.eat('-');
    loop {
        match p.term()? {
            Term::Known(e, c) => terms.push((e, if negate { -c } else { c })),
            Term::Tail(t) => {
                if negate {
                    return Err(p.error("a truncation O(...) cannot be negated"));
                }
                tail = Some(tail.map_or(t, |x| x.min(t)));
            }
        }
        if p.eat('+') {
            negate = false;
        } else if p.eat('-') {
            negate = true;
        } else if p.pos == p.chars.len() {
            break;
        } else {
            return Err(p.error(&format!("unexpected character {:?}", p.chars[p.pos])));
        }
    }
    Ok(LaurentGerm::from_terms(terms, tail))
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::Parse {
            what: "germ",
            input: self.input.to_string(),
            reason: format!("{reason} (at position {})", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn term(&mut self) -> Result<Term> {
        if self.eat('O') {
            self.expect('(')?;
            let e = self.power()?;
            self.expect(')')?;
            return Ok(Term::Tail(e));
        }
        if self.peek() == Some(self.var) {
            let e = self.power()?;
            return Ok(Term::Known(e, Coefficient::one()));
        }
        let c = self.coefficient()?;
        if self.eat('*') {
            let e = self.power()?;
            Ok(Term::Known(e, c))
        } else {
            Ok(Term::Known(0, c))
        }
    }

    fn power(&mut self) -> Result<i64> {
        self.expect(self.var)?;
        if self.eat('^') {
            let paren = self.eat('(');
            let e = self.integer()?;
            if paren {
                self.expect(')')?;
            }
            i64::try_from(e).map_err(|_| self.error("exponent out of range"))
        } else {
            Ok(1)
        }
    }

    fn coefficient(&mut self) -> Result<Coefficient> {
        if self.eat('(') {
            let re = self.rational()?;
            self.expect(',')?;
            let im = self.rational()?;
            self.expect(')')?;
            Ok(Coefficient::new(re, im))
        } else {
            Ok(Coefficient::new(self.rational()?, BigRational::zero()))
        }
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.integer()?;
        if self.eat('/') {
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::new(num, BigInt::one()))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        if self.peek() == Some('-') || self.peek() == Some('+') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<BigInt>()
            .map_err(|_| self.error("expected an integer"))
    }
}
