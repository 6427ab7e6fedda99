//! Polynomial expressions in `x` and `y`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. Multiplication is always explicit.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{format_rat, BiPoly, Field, Rat};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("integer {n}"),
        Tok::X => "'x'".into(),
        Tok::Y => "'y'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Slash => "'/'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

/// Tokens paired with their 1-based character position.
fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("decimal digits")), pos));
            continue;
        }
        let tok = match c {
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Syntax {
                    position: pos,
                    message: format!("unexpected character {c:?}; expected a number, 'x', 'y', an operator or a parenthesis"),
                })
            }
        };
        out.push((tok, pos));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos(),
            message: format!("expected {expected}, found {}", describe(self.peek())),
        })
    }

    fn overflow<T>(&self, pos: usize) -> Result<T> {
        Err(Error::Syntax { position: pos, message: "polynomial degree overflow".into() })
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            let pos = self.pos();
            self.bump();
            let rhs = self.unary()?;
            acc = match acc.checked_mul(&rhs) {
                Some(p) => p,
                None => return self.overflow(pos),
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let caret = self.pos();
        self.bump();
        let epos = self.pos();
        let e = match self.peek() {
            Tok::Int(n) => n.clone(),
            _ => return self.fail("a nonnegative integer exponent"),
        };
        self.bump();
        let e: u32 = match e.try_into() {
            Ok(e) => e,
            Err(_) => {
                return Err(Error::Syntax { position: epos, message: "exponent must be less than 2^32".into() })
            }
        };
        match base.checked_pow(e as u64) {
            Some(p) => Ok(p),
            None => self.overflow(caret),
        }
    }

    fn atom(&mut self) -> Result<BiPoly> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(BiPoly::constant(Rat::from_integer(n)));
                }
                self.bump();
                let dpos = self.pos();
                let d = match self.peek() {
                    Tok::Int(d) => d.clone(),
                    _ => return self.fail("an integer denominator"),
                };
                if d.is_zero() {
                    return Err(Error::Syntax { position: dpos, message: "zero denominator".into() });
                }
                self.bump();
                Ok(BiPoly::constant(Rat::new(n, d)))
            }
            Tok::X => {
                self.bump();
                Ok(BiPoly::x())
            }
            Tok::Y => {
                self.bump();
                Ok(BiPoly::y())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.fail("')'");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.fail("a number, 'x', 'y' or '('"),
        }
    }
}

/// Parse a polynomial in `x`, `y` with rational coefficients.
pub fn parse_poly(src: &str) -> Result<BiPoly> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("an operator or end of input");
    }
    Ok(out)
}

fn monomial_text(a: u32, b: u32) -> String {
    let var = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    [var("x", a), var("y", b)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

/// Canonical text: terms by descending total degree, then descending power
/// of `x`; explicit `*`.
pub fn format_poly(p: &BiPoly) -> String {
    let mut terms: Vec<(&(u32, u32), &Rat)> = p.terms().collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|((a1, b1), _), ((a2, b2), _)| (a2 + b2).cmp(&(a1 + b1)).then(a2.cmp(a1)));
    let mut out = String::new();
    for (i, (&(a, b), c)) in terms.into_iter().enumerate() {
        let negative = *c < <Rat as Field>::zero();
        let mag = if negative { c.neg() } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = monomial_text(a, b);
        if mono.is_empty() {
            out.push_str(&format_rat(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rat(&mag));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}
