//! The textual scalar grammar used by the interchange format.
//!
//! A value of order N prints as a polynomial in `z` (denoting ζ_N) with
//! rational coefficients, highest power first, e.g. `-1/2*z^3 + 2`. Parsing
//! is whitespace-insensitive and accepts exponents of any size (reduced
//! modulo Φ_N); printing is canonical so parse–print round-trips exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CycError, CycNumber, Rational};

fn push_rational(out: &mut String, q: &Rational) {
    out.push_str(&q.numer().to_string());
    if !q.denom().is_one() {
        out.push('/');
        out.push_str(&q.denom().to_string());
    }
}

impl std::fmt::Display for CycNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if k == 0 {
                push_rational(&mut out, &mag);
            } else {
                if !mag.is_one() {
                    push_rational(&mut out, &mag);
                    out.push('*');
                }
                out.push('z');
                if k > 1 {
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        f.write_str(&out)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, CycError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(CycError::Parse(format!(
                "expected digits at offset {start}"
            )));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse()
            .map_err(|e| CycError::Parse(format!("bad integer {s}: {e}")))
    }
}

/// Parses the scalar grammar in the field Q(ζ_order).
pub fn parse_scalar(input: &str, order: u32) -> Result<CycNumber, CycError> {
    let mut sc = Scanner::new(input);
    let mut acc: Vec<(usize, Rational)> = Vec::new();
    let mut first = true;
    loop {
        let Some(b) = sc.peek() else {
            break;
        };
        let sign = match b {
            b'+' => {
                sc.bump();
                false
            }
            b'-' => {
                sc.bump();
                true
            }
            _ if first => false,
            _ => {
                return Err(CycError::Parse(format!(
                    "expected '+' or '-' before term at offset {}",
                    sc.pos
                )))
            }
        };
        first = false;
        // term := rational ['*' zpow] | zpow
        let (coeff, exp) = if sc.peek() == Some(b'z') {
            (Rational::one(), parse_zpow(&mut sc)?)
        } else {
            let numer = sc.integer()?;
            let denom = if sc.eat(b'/') { sc.integer()? } else { BigInt::one() };
            if denom.is_zero() {
                return Err(CycError::Parse("zero denominator".into()));
            }
            let q = Rational::new(numer, denom);
            if sc.eat(b'*') {
                (q, parse_zpow(&mut sc)?)
            } else {
                (q, 0)
            }
        };
        acc.push((exp, if sign { -coeff } else { coeff }));
    }
    if first {
        return Err(CycError::Parse("empty scalar".into()));
    }
    let max_exp = acc.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut raw = vec![Rational::zero(); max_exp + 1];
    for (e, c) in acc {
        raw[e] += c;
    }
    Ok(CycNumber::from_coeffs(order, raw))
}

fn parse_zpow(sc: &mut Scanner<'_>) -> Result<usize, CycError> {
    if !sc.eat(b'z') {
        return Err(CycError::Parse(format!("expected 'z' at offset {}", sc.pos)));
    }
    if sc.eat(b'^') {
        let e = sc.integer()?;
        use num_traits::ToPrimitive;
        e.to_usize()
            .ok_or_else(|| CycError::Parse(format!("exponent {e} too large")))
    } else {
        Ok(1)
    }
}
