//! Basis blades of Cl(r,s) and their sign arithmetic.
//!
//! A blade `e_I` is stored as a bit set: index `i` (1-based) occupies bit
//! `i - 1`. Generators satisfy `e_i^2 = -1` for `i <= r` and `e_i^2 = +1` for
//! `i > r`, i.e. `v.v = -Q(v,v)` for the diagonal form with `r` positive
//! entries followed by `s` negative ones.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported `n`; a blade must fit in one machine word.
pub const MAX_N: u32 = 62;

/// Largest `n` accepted by operations that enumerate blades.
pub const MAX_EXHAUSTIVE_N: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    r: u32,
    s: u32,
}

impl Signature {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        let n = r as u64 + s as u64;
        if n == 0 {
            return Err(Error::InvalidSignature { r, s, reason: "r + s must be at least 1" });
        }
        if n > MAX_N as u64 {
            return Err(Error::InvalidSignature { r, s, reason: "r + s exceeds 62" });
        }
        Ok(Signature { r, s })
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    #[inline]
    pub fn s(&self) -> u32 {
        self.s
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.r + self.s
    }

    /// Bits of the generators squaring to `-1` (indices `1..=r`).
    #[inline]
    pub fn negative_mask(&self) -> u64 {
        low_bits(self.r)
    }

    /// Bits of the generators squaring to `+1` (indices `r+1..=n`).
    #[inline]
    pub fn positive_mask(&self) -> u64 {
        low_bits(self.n()) & !low_bits(self.r)
    }

    #[inline]
    pub fn full_mask(&self) -> u64 {
        low_bits(self.n())
    }

    /// The volume element `e_1 e_2 ... e_n`.
    pub fn omega(&self) -> Blade {
        Blade(self.full_mask())
    }

    pub fn check_blade(&self, b: Blade) -> Result<()> {
        if b.0 & !self.full_mask() != 0 {
            return Err(Error::BladeOutOfRange { mask: b.0, n: self.n() });
        }
        Ok(())
    }

    pub fn require_exhaustive(&self, cap: u32) -> Result<()> {
        if self.n() > cap {
            return Err(Error::TooLarge { n: self.n(), cap });
        }
        Ok(())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

#[inline]
fn low_bits(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    #[inline]
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    #[inline]
    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

impl MulAssign for Sign {
    #[inline]
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;
    #[inline]
    fn neg(self) -> Sign {
        Sign::from_parity(!self.is_minus())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A basis monomial `e_I`; the empty set is the scalar unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Blade(pub u64);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Builds a blade from 1-based indices. Repeated indices are rejected.
    pub fn from_indices(indices: &[u32]) -> Result<Blade> {
        let mut mask = 0u64;
        for &i in indices {
            if i == 0 || i > MAX_N {
                return Err(Error::IndexOutOfRange { index: i, n: MAX_N });
            }
            let bit = 1u64 << (i - 1);
            if mask & bit != 0 {
                return Err(Error::Precondition(format!("index {i} repeated in blade")));
            }
            mask |= bit;
        }
        Ok(Blade(mask))
    }

    #[inline]
    pub fn generator(i: u32) -> Blade {
        debug_assert!((1..=MAX_N).contains(&i));
        Blade(1u64 << (i - 1))
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// Ascending 1-based indices.
    pub fn indices(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.grade() as usize);
        let mut m = self.0;
        while m != 0 {
            out.push(m.trailing_zeros() + 1);
            m &= m - 1;
        }
        out
    }

    /// `I+`: indices whose generators square to `+1`.
    #[inline]
    pub fn plus_part(self, sig: Signature) -> Blade {
        Blade(self.0 & sig.positive_mask())
    }

    /// `I-`: indices whose generators square to `-1`.
    #[inline]
    pub fn minus_part(self, sig: Signature) -> Blade {
        Blade(self.0 & sig.negative_mask())
    }

    /// Text form: `1`, `e123`, or `e{1,2,12}`. The bracketed form is used
    /// whenever `n >= 10` or an index exceeds 9.
    pub fn to_text(self, n: u32) -> String {
        if self.is_scalar() {
            return "1".to_string();
        }
        let idx = self.indices();
        if n >= 10 || idx.iter().any(|&i| i >= 10) {
            let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            format!("e{{{}}}", parts.join(","))
        } else {
            let mut s = String::with_capacity(idx.len() + 1);
            s.push('e');
            for i in idx {
                s.push(char::from(b'0' + i as u8));
            }
            s
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    pub sign: Sign,
    pub blade: Blade,
}

/// `e_i^2` for a single generator.
pub fn square_sign(i: u32, sig: Signature) -> Result<Sign> {
    if i == 0 || i > sig.n() {
        return Err(Error::IndexOutOfRange { index: i, n: sig.n() });
    }
    Ok(Sign::from_parity(i <= sig.r()))
}

/// Parity of the transpositions needed to sort the concatenation `a ++ b`.
/// For each index of `b`, counts the indices of `a` strictly above it.
#[inline]
pub(crate) fn reorder_parity(a: u64, b: u64) -> bool {
    let mut swaps = 0u32;
    let mut m = b;
    while m != 0 {
        let j = m.trailing_zeros();
        // bits of a strictly greater than j
        let above = if j >= 63 { 0 } else { a >> (j + 1) };
        swaps += above.count_ones();
        m &= m - 1;
    }
    swaps & 1 == 1
}

/// Product of two blades without validity checks.
#[inline]
pub fn mul_unchecked(a: Blade, b: Blade, sig: Signature) -> SignedBlade {
    let odd = reorder_parity(a.0, b.0) ^ ((a.0 & b.0 & sig.negative_mask()).count_ones() & 1 == 1);
    SignedBlade { sign: Sign::from_parity(odd), blade: Blade(a.0 ^ b.0) }
}

pub fn blade_mul(a: Blade, b: Blade, sig: Signature) -> Result<SignedBlade> {
    sig.check_blade(a)?;
    sig.check_blade(b)?;
    Ok(mul_unchecked(a, b, sig))
}

/// `e_I^2 = (-1)^{k(k-1)/2} e_{i1}^2 ... e_{ik}^2` in closed form.
pub fn blade_square(a: Blade, sig: Signature) -> Sign {
    let k = a.grade() as u64;
    let reversal = (k * k.saturating_sub(1) / 2) & 1 == 1;
    let negatives = a.minus_part(sig).grade() & 1 == 1;
    Sign::from_parity(reversal ^ negatives)
}

/// Grade involution: `(-1)^{|I|}`.
#[inline]
pub fn alpha_sign(a: Blade) -> Sign {
    Sign::from_parity(a.grade() & 1 == 1)
}

/// Clifford conjugation: `(-1)^{|I|(|I|+1)/2}`.
#[inline]
pub fn c_sign(a: Blade) -> Sign {
    let k = a.grade() as u64;
    Sign::from_parity((k * (k + 1) / 2) & 1 == 1)
}

/// The automorphism fixing `e_1..e_r` and negating `e_{r+1}..e_n`.
#[inline]
pub fn beta_sign(a: Blade, sig: Signature) -> Sign {
    Sign::from_parity(a.plus_part(sig).grade() & 1 == 1)
}

/// Whether `e_I e_J = e_J e_I`, from degree and overlap parities alone.
pub fn commutes(a: Blade, b: Blade) -> bool {
    let both_odd = a.grade() & 1 == 1 && b.grade() & 1 == 1;
    let overlap_odd = (a.0 & b.0).count_ones() & 1 == 1;
    if overlap_odd {
        both_odd
    } else {
        // disjoint is the overlap-even case: commute iff |I||J| even
        !both_odd
    }
}

/// `e_I` lies in the Lie algebra of isometric elements iff `c(e_I) = -e_I`.
#[inline]
pub fn in_isometry_algebra(a: Blade) -> bool {
    matches!(a.grade() % 4, 1 | 2)
}
