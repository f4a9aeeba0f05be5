//! Parser for the canonical polynomial string form.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! poly     := [ '-' ] term { ('+' | '-') term }
//! term     := factor { '*' factor }
//! factor   := rational | variable [ '^' exponent ] | '(' zpoly ')'
//! exponent := integer | '(' integer '/' ('1' | '2') ')'
//! rational := digits [ '/' digits ]
//! variable := 'u' | 'v' | 'gamma' | 'q' | 'z' | 'lambda' | 'w'
//!           | 'x' '[' digits ',' integer ']'
//! zpoly    := [ '-' ] zterm { ('+' | '-') zterm }
//! zterm    := rational [ '*' zpow ] | zpow
//! zpow     := 'z' [ '^' digits ]
//! ```
//!
//! A parenthesized block is a coefficient in the fixed primitive root of
//! unity; there `z` means the root, while a bare `z` outside any block is
//! the polynomial variable of the same name.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CoeffError, CycNumber, LaurentPoly, Monomial, VarId};

/// Parse the canonical string form at cyclotomic order `d`.
pub fn parse_poly(text: &str, d: u32) -> Result<LaurentPoly, CoeffError> {
    let mut cur = Cursor {
        s: text.as_bytes(),
        pos: 0,
        d,
    };
    let poly = cur.parse_poly()?;
    cur.skip_ws();
    if cur.pos != cur.s.len() {
        return Err(cur.err("trailing input"));
    }
    Ok(poly)
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    d: u32,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: &str) -> CoeffError {
        CoeffError::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), CoeffError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn parse_digits(&mut self) -> Result<BigInt, CoeffError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        BigInt::parse_bytes(&self.s[start..self.pos], 10).ok_or_else(|| self.err("bad integer"))
    }

    fn parse_small_uint(&mut self) -> Result<i64, CoeffError> {
        let big = self.parse_digits()?;
        i64::try_from(big).map_err(|_| self.err("integer out of range"))
    }

    fn parse_small_int(&mut self) -> Result<i64, CoeffError> {
        let neg = self.eat(b'-');
        let n = self.parse_small_uint()?;
        Ok(if neg { -n } else { n })
    }

    fn parse_rational(&mut self) -> Result<BigRational, CoeffError> {
        let num = self.parse_digits()?;
        if self.eat(b'/') {
            let den = self.parse_digits()?;
            if den == BigInt::from(0) {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn parse_name(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_lowercase() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn parse_poly(&mut self) -> Result<LaurentPoly, CoeffError> {
        let mut out = LaurentPoly::zero();
        let mut negate = self.eat(b'-');
        loop {
            let term = self.parse_term()?;
            out = if negate {
                out.sub(&term)
            } else {
                out.add(&term)
            };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(out),
            }
        }
    }

    fn parse_term(&mut self) -> Result<LaurentPoly, CoeffError> {
        let mut acc = self.parse_factor()?;
        while self.eat(b'*') {
            let f = self.parse_factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<LaurentPoly, CoeffError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let r = self.parse_rational()?;
                Ok(LaurentPoly::constant(CycNumber::rational(r)))
            }
            Some(b'(') => {
                self.pos += 1;
                let c = self.parse_zblock()?;
                self.expect(b')')?;
                Ok(LaurentPoly::constant(c))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let var = self.parse_variable()?;
                let half = if self.eat(b'^') {
                    self.parse_exponent()?
                } else {
                    2
                };
                Ok(LaurentPoly::term(
                    Monomial::var_half(var, half),
                    CycNumber::one(),
                ))
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn parse_variable(&mut self) -> Result<VarId, CoeffError> {
        let name = self.parse_name();
        match name.as_str() {
            "u" => Ok(VarId::U),
            "v" => Ok(VarId::V),
            "gamma" => Ok(VarId::Gamma),
            "q" => Ok(VarId::Q),
            "z" => Ok(VarId::Z),
            "lambda" => Ok(VarId::Lambda),
            "w" => Ok(VarId::W),
            "x" => {
                self.expect(b'[')?;
                let color = self.parse_small_uint()?;
                let color =
                    u32::try_from(color).map_err(|_| self.err("color out of range"))?;
                if color == 0 {
                    return Err(self.err("colors are numbered from 1"));
                }
                self.expect(b',')?;
                let winding = self.parse_small_int()?;
                if winding == 0 {
                    return Err(self.err("winding 0 names the constant 1"));
                }
                self.expect(b']')?;
                Ok(VarId::XParam { color, winding })
            }
            "" => Err(self.err("expected a variable")),
            other => Err(self.err(&format!("unknown variable '{other}'"))),
        }
    }

    /// Exponent in half units: `3` -> 6, `(3/2)` -> 3, `(-1/2)` -> -1.
    fn parse_exponent(&mut self) -> Result<i32, CoeffError> {
        if self.eat(b'(') {
            let p = self.parse_small_int()?;
            self.expect(b'/')?;
            let q = self.parse_small_uint()?;
            self.expect(b')')?;
            let half = match q {
                1 => p.checked_mul(2),
                2 => Some(p),
                _ => return Err(self.err("exponent denominator must be 1 or 2")),
            };
            half.and_then(|h| i32::try_from(h).ok())
                .ok_or_else(|| self.err("exponent out of range"))
        } else {
            let k = self.parse_small_int()?;
            k.checked_mul(2)
                .and_then(|h| i32::try_from(h).ok())
                .ok_or_else(|| self.err("exponent out of range"))
        }
    }

    /// A coefficient block: a polynomial in the root of unity.
    fn parse_zblock(&mut self) -> Result<CycNumber, CoeffError> {
        let mut acc = CycNumber::zero();
        let mut negate = self.eat(b'-');
        loop {
            let term = self.parse_zterm()?;
            acc = if negate {
                acc.checked_sub(&term)?
            } else {
                acc.checked_add(&term)?
            };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_zterm(&mut self) -> Result<CycNumber, CoeffError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let r = CycNumber::rational(self.parse_rational()?);
                if self.eat(b'*') {
                    let zp = self.parse_zpow()?;
                    Ok(r.checked_mul(&zp)?)
                } else {
                    Ok(r)
                }
            }
            Some(b'z') => self.parse_zpow(),
            _ => Err(self.err("expected a root-of-unity term")),
        }
    }

    fn parse_zpow(&mut self) -> Result<CycNumber, CoeffError> {
        self.skip_ws();
        if self.s.get(self.pos) != Some(&b'z') {
            return Err(self.err("expected 'z'"));
        }
        self.pos += 1;
        let k = if self.eat(b'^') {
            self.parse_small_uint()?
        } else {
            1
        };
        Ok(CycNumber::zeta_pow(self.d, k))
    }
}
