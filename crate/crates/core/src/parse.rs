//! Text syntax for multivectors.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := rational '*'? blade | rational | blade
//! rational := integer ('/' positive-integer)?
//! blade  := '1' | 'e' digit+ | 'e{' index (',' index)* '}'
//! ```
//!
//! Whitespace is ignored between tokens. A bare rational is a multiple of the
//! scalar unit, so every string printed by [`Multivector`]'s `Display` parses
//! back to the same value.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::blade::{Blade, Signature};
use crate::error::{Error, Result};
use crate::multivector::{Coeff, Multivector};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        // only ASCII digits were consumed
        Ok((start, std::str::from_utf8(&self.src[start..self.pos]).unwrap()))
    }

    fn rational(&mut self) -> Result<Coeff> {
        let (_, num) = self.digits()?;
        let num: BigInt = num.parse().unwrap();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let (at, den) = self.digits()?;
            let den: BigInt = den.parse().unwrap();
            if den.is_zero() {
                return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
            }
            Ok(Coeff::new(num, den))
        } else {
            Ok(Coeff::from_integer(num))
        }
    }

    fn index(&mut self, sig: Signature) -> Result<(usize, u32)> {
        let (at, d) = self.digits()?;
        let i: u32 = d.parse().map_err(|_| Error::Parse { pos: at, msg: "index too large".into() })?;
        if i == 0 || i > sig.n() {
            return Err(Error::IndexOutOfRange { index: i, n: sig.n() });
        }
        Ok((at, i))
    }

    /// Parses a blade token at the cursor, which must start with `1` or `e`.
    fn blade(&mut self, sig: Signature) -> Result<Blade> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return self.err("unexpected digit after scalar blade `1`");
                }
                Ok(Blade::SCALAR)
            }
            Some(b'e') => {
                self.pos += 1;
                let mut mask = 0u64;
                let push = |at: usize, i: u32, mask: &mut u64| -> Result<()> {
                    let bit = 1u64 << (i - 1);
                    if *mask & bit != 0 {
                        return Err(Error::Parse { pos: at, msg: format!("repeated index {i}") });
                    }
                    *mask |= bit;
                    Ok(())
                };
                if self.src.get(self.pos) == Some(&b'{') {
                    self.pos += 1;
                    loop {
                        let (at, i) = self.index(sig)?;
                        push(at, i, &mut mask)?;
                        match self.peek() {
                            Some(b',') => self.pos += 1,
                            Some(b'}') => {
                                self.pos += 1;
                                break;
                            }
                            _ => return self.err("expected `,` or `}`"),
                        }
                    }
                } else {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        let i = u32::from(self.src[self.pos] - b'0');
                        if i == 0 || i > sig.n() {
                            return Err(Error::IndexOutOfRange { index: i, n: sig.n() });
                        }
                        push(self.pos, i, &mut mask)?;
                        self.pos += 1;
                    }
                    if start == self.pos {
                        return self.err("expected digits or `{` after `e`");
                    }
                }
                Ok(Blade(mask))
            }
            _ => self.err("expected a blade (`1`, `e..`)"),
        }
    }

    fn term(&mut self, sig: Signature) -> Result<(Blade, Coeff)> {
        match self.peek() {
            Some(b'e') => Ok((self.blade(sig)?, Coeff::one())),
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.rational()?;
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        Ok((self.blade(sig)?, coeff))
                    }
                    Some(b'e') => Ok((self.blade(sig)?, coeff)),
                    _ => Ok((Blade::SCALAR, coeff)),
                }
            }
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the text form of a multivector over `sig`.
pub fn parse_mv(text: &str, sig: Signature) -> Result<Multivector> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut out = Multivector::zero(sig);
    let mut negate = match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            true
        }
        Some(b'+') => {
            cur.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        let (blade, c) = cur.term(sig)?;
        out.add_term(blade, if negate { -c } else { c });
        match cur.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(_) => return cur.err("expected `+`, `-` or end of input"),
        }
        cur.pos += 1;
    }
    Ok(out)
}
