//! Text syntax for scalars in the point ring and for elements of the cohomology of `X(p,q)`.
//!
//! Accepts everything the library prints, plus products, powers and parentheses:
//! `(-1 + g)*z0*cw + e^2`, `-e^-2*kappa*z0*cw^2 + 3*cw`, `8*tau(i^4)*cw^2*cxw^2`.

use equibezout_core::grading::PiBDegree;
use equibezout_core::hscalar::{kappa, tau, HElement, HMonomial};
use equibezout_core::projmod::{BasisMonomial, Element, ProjSpace};
use equibezout_core::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(i64),
    Name(String),
    Caret,
    Star,
    Plus,
    Minus,
    Open,
    Close,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '^' => Token::Caret,
            '*' => Token::Star,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '(' => Token::Open,
            ')' => Token::Close,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let k = digits.parse().map_err(|_| perr(start, &format!("integer {digits} is too large")))?;
                out.push((start, Token::Int(k)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Token::Name(text[start..i].to_string())));
                continue;
            }
            _ => return Err(perr(start, &format!("unexpected character {c:?}"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

fn perr(at: usize, why: &str) -> Error {
    Error::Parse(format!("at offset {at}: {why}"))
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(HElement),
    Module(Element),
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    sp: Option<ProjSpace>,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(at, _)| *at)
    }

    fn fail<T>(&self, why: &str) -> Result<T> {
        Err(perr(self.offset(), why))
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Token, what: &str) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.fail(&format!("expected {what}"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek() {
            Some(&Token::Int(k)) => {
                self.pos += 1;
                Ok(k)
            }
            _ => self.fail("expected an integer"),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = self.eat(&Token::Minus);
        let k = self.int()?;
        Ok(if negative { -k } else { k })
    }

    /// `^k`, or 1 when there is no exponent.
    fn exponent(&mut self) -> Result<i64> {
        if self.eat(&Token::Caret) {
            self.signed_int()
        } else {
            Ok(1)
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut negative = self.eat(&Token::Minus);
        let mut acc: Option<Value> = None;
        loop {
            let at = self.offset();
            let mut term = self.term()?;
            if negative {
                term = negate(term);
            }
            acc = Some(match acc {
                None => term,
                Some(prev) => self.add(prev, term, at)?,
            });
            negative = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => break,
            };
            self.pos += 1;
        }
        Ok(acc.expect("at least one term"))
    }

    fn add(&self, x: Value, y: Value, at: usize) -> Result<Value> {
        let mismatch = |a: String, b: String| perr(at, &format!("adding terms of gradings {a} and {b}"));
        match (x, y) {
            (Value::Scalar(x), Value::Scalar(y)) => {
                x.checked_add(&y).map(Value::Scalar).map_err(|(a, b)| mismatch(a.to_string(), b.to_string()))
            }
            (x, y) => {
                let (x, y) = (self.promote(x)?, self.promote(y)?);
                x.checked_add(&y).map(Value::Module).map_err(|_| mismatch(x.grading().to_string(), y.grading().to_string()))
            }
        }
    }

    fn promote(&self, x: Value) -> Result<Element> {
        match x {
            Value::Module(x) => Ok(x),
            Value::Scalar(c) => Ok(Element::monomial(self.space()?, c, BasisMonomial::ONE)),
        }
    }

    fn space(&self) -> Result<ProjSpace> {
        self.sp.ok_or_else(|| perr(0, "generators z0, z1, cw, cxw are not allowed in a scalar"))
    }

    /// A product of factors. Generator powers are collected into one monomial, which may be divided.
    fn term(&mut self) -> Result<Value> {
        let start = self.offset();
        let mut scalar = HElement::one();
        let mut mono = [0i64; 4];
        let mut has_gen = false;
        let mut modules = Vec::new();
        loop {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Token::Int(k)) => {
                    self.pos += 1;
                    let k = self.power_of(HElement::from_int(k), at)?;
                    scalar = &scalar * &k;
                }
                Some(Token::Open) => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect(Token::Close, "')'")?;
                    let k = self.exponent()?;
                    if k < 0 {
                        return Err(perr(at, "negative power of a parenthesized expression"));
                    }
                    match inner {
                        Value::Scalar(c) => scalar = &scalar * &c.pow(k as u32),
                        Value::Module(x) => modules.push((at, x.pow(k as u32).map_err(|e| perr(at, &e.to_string()))?)),
                    }
                }
                Some(Token::Name(name)) => {
                    self.pos += 1;
                    match name.as_str() {
                        "z0" | "z1" | "cw" | "cxw" => {
                            self.space()?;
                            let slot = ["z0", "z1", "cw", "cxw"].iter().position(|n| *n == name).unwrap();
                            let k = self.exponent()?;
                            if k < 0 && slot >= 2 {
                                return Err(perr(at, &format!("negative power of {name}")));
                            }
                            mono[slot] += k;
                            has_gen = true;
                        }
                        _ => {
                            let c = self.named_scalar(&name, at)?;
                            scalar = &scalar * &c;
                        }
                    }
                }
                _ => return self.fail("expected a factor"),
            }
            if !self.eat(&Token::Star) {
                break;
            }
        }
        if !has_gen && modules.is_empty() {
            return Ok(Value::Scalar(scalar));
        }
        let sp = self.space()?;
        let [s, t, a, b] = mono.map(|k| k as i32);
        let x = BasisMonomial::new(s, t, a, b);
        if x.is_divided() {
            let (p, q) = (sp.p as i32, sp.q as i32);
            let valid = (s < 0 && t == 0 && a >= p) || (t < 0 && s == 0 && b >= q);
            if !valid {
                return Err(perr(start, &format!("{x} is not a valid divided monomial on {sp}")));
            }
        }
        let mut out = Element::monomial(sp, scalar, x);
        for (at, y) in modules {
            out = out.mul(&y).map_err(|e| perr(at, &e.to_string()))?;
        }
        Ok(Value::Module(out))
    }

    fn power_of(&mut self, x: HElement, at: usize) -> Result<HElement> {
        let k = self.exponent()?;
        if k < 0 {
            return Err(perr(at, "negative power"));
        }
        Ok(x.pow(k as u32))
    }

    fn named_scalar(&mut self, name: &str, at: usize) -> Result<HElement> {
        match name {
            "g" => self.power_of(HElement::monomial(1, HMonomial::G), at),
            "kappa" => self.power_of(kappa(), at),
            "xi" => self.power_of(HElement::xi(1), at),
            "e" => {
                let k = self.exponent()?;
                if k >= 0 {
                    return Ok(HElement::e(k as u32));
                }
                // e^-m is only meaningful as part of the generator e^-m*kappa.
                let followed = self.eat(&Token::Star) && self.peek() == Some(&Token::Name("kappa".into()));
                if !followed {
                    return Err(perr(at, "e^-m must be followed by *kappa"));
                }
                self.pos += 1;
                if self.peek() == Some(&Token::Caret) {
                    return self.fail("e^-m*kappa cannot be raised to a power");
                }
                Ok(HElement::monomial(1, HMonomial::EInvKappa(k.unsigned_abs() as u32)))
            }
            "tau" => {
                self.expect(Token::Open, "'(' after tau")?;
                match self.peek() {
                    Some(Token::Name(n)) if n == "i" => self.pos += 1,
                    _ => return self.fail("expected i in tau(i^k)"),
                }
                let k = self.exponent()?;
                self.expect(Token::Close, "')'")?;
                if k % 2 != 0 {
                    return Err(perr(at, &format!("tau(i^{k}) needs an even exponent")));
                }
                let base = tau((k / 2) as i32);
                self.power_of(base, at)
            }
            _ => Err(perr(
                at,
                &format!("unknown symbol {name:?}; expected one of g, kappa, e, xi, tau, z0, z1, cw, cxw"),
            )),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            self.fail(&format!("unexpected input after the expression in {:?}", self.text))
        }
    }
}

fn negate(x: Value) -> Value {
    match x {
        Value::Scalar(c) => Value::Scalar(-c),
        Value::Module(x) => Value::Module(x.scale(-1)),
    }
}

fn run(text: &str, sp: Option<ProjSpace>) -> Result<Value> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(perr(0, "empty expression"));
    }
    let mut parser = Parser { tokens, pos: 0, end: text.len(), sp, text };
    let value = parser.expr()?;
    parser.finish()?;
    Ok(value)
}

/// Parses a scalar in the point ring, such as `-1 + g` or `e^-2*kappa`.
pub fn parse_scalar(text: &str) -> Result<HElement> {
    match run(text, None)? {
        Value::Scalar(c) => Ok(c),
        Value::Module(_) => unreachable!("generators are rejected without a space"),
    }
}

/// Parses an element of the cohomology of `sp`, normalizing it into the basis.
pub fn parse_element(sp: ProjSpace, text: &str) -> Result<Element> {
    let parser = Parser { tokens: Vec::new(), pos: 0, end: 0, sp: Some(sp), text };
    parser.promote(run(text, Some(sp))?)
}

/// As [`parse_element`], in a known grading; needed to give `0` a grading.
pub fn parse_element_in(sp: ProjSpace, grading: PiBDegree, text: &str) -> Result<Element> {
    let x = parse_element(sp, text)?;
    if x.is_zero() {
        return Ok(Element::zero(sp, grading));
    }
    if x.grading() != grading {
        return Err(Error::GradingMismatch(grading.to_string(), x.grading().to_string()));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use equibezout_core::hscalar::{e_kappa, g, unit_u};

    fn sp(p: u32, q: u32) -> ProjSpace {
        ProjSpace::new(p, q).unwrap()
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("-1 + g").unwrap(), unit_u());
        assert_eq!(parse_scalar("kappa").unwrap(), e_kappa(0));
        assert_eq!(parse_scalar("e^-3*kappa").unwrap(), e_kappa(-3));
        assert_eq!(parse_scalar("tau(i^-4)").unwrap(), tau(-2));
        assert_eq!(parse_scalar("tau(i^0)").unwrap(), g());
        assert_eq!(parse_scalar("8*tau(i^4)").unwrap(), HElement::monomial(16, HMonomial::Xi(2)));
        assert_eq!(parse_scalar("(1 - kappa)^2").unwrap(), HElement::one());
        assert_eq!(parse_scalar("2*e*xi").unwrap().to_string(), "0");
    }

    #[test]
    fn elements_round_trip() {
        let x = sp(2, 2);
        for text in ["(-1 + g)*z0*cw + e^2", "-e^-2*kappa*z0*cw^2 + 3*cw", "e^-2*kappa*cw*cxw + tau(i^-2)*z0*cw"] {
            assert_eq!(parse_element(x, text).unwrap().to_string(), text);
        }
        assert_eq!(parse_element(x, "z0*z1").unwrap().to_string(), "xi");
        assert_eq!(parse_element(x, "cw^2*cxw^2").unwrap().to_string(), "0");
    }

    #[test]
    fn diagnostics() {
        let x = sp(2, 2);
        for bad in ["", "e^-2", "e^-2*g", "tau(i^3)", "foo", "z0^-1*cw", "z0^-1*z1^-1*cw^2", "cw^-1", "1 +", "(1", "e + 1"] {
            let err = parse_element(x, bad).unwrap_err();
            assert!(matches!(err, Error::Parse(_)), "{bad:?}: {err}");
        }
        assert!(parse_scalar("z0").is_err());
        assert!(parse_element(x, "z0^-1*cw^2*cxw").is_ok());
    }

    #[test]
    fn zero_takes_the_given_grading() {
        let x = sp(1, 1);
        let d = BasisMonomial::new(0, 0, 1, 0).grading();
        assert_eq!(parse_element_in(x, d, "0").unwrap().grading(), d);
        assert!(parse_element_in(x, d, "cxw").is_err());
    }
}
