//! General elements of Cl(r,s) with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::blade::{alpha_sign, beta_sign, c_sign, mul_unchecked, Blade, Sign, Signature};
use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// Sparse multivector: no stored coefficient is zero, iteration is
/// mask-ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, Coeff>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// Grade involution.
    Alpha,
    /// Clifford conjugation (anti-automorphism).
    Conjugation,
    /// Signature automorphism negating the `+1`-squaring generators.
    Beta,
}

fn apply_sign(sign: Sign, c: Coeff) -> Coeff {
    match sign {
        Sign::Plus => c,
        Sign::Minus => -c,
    }
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn one(sig: Signature) -> Self {
        Self::from_blade(sig, Blade::SCALAR)
    }

    pub fn from_blade(sig: Signature, blade: Blade) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(blade, Coeff::one());
        Multivector { sig, terms }
    }

    /// Validated construction from `(blade, coefficient)` pairs; duplicates add up.
    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Coeff)>,
    {
        let mut out = Multivector::zero(sig);
        for (blade, c) in terms {
            sig.check_blade(blade)?;
            out.add_term(blade, c);
        }
        Ok(out)
    }

    /// The volume element `e_1 ... e_n`.
    pub fn omega(sig: Signature) -> Self {
        Self::from_blade(sig, sig.omega())
    }

    #[inline]
    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, blade: Blade) -> Coeff {
        self.terms.get(&blade).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, blade: Blade, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&blade);
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    fn same_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch { left: self.sig, right: other.sig });
        }
        Ok(())
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        self.same_sig(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.same_sig(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Coeff) -> Multivector {
        if k.is_zero() {
            return Multivector::zero(self.sig);
        }
        let terms = self.terms.iter().map(|(b, c)| (*b, c * k)).collect();
        Multivector { sig: self.sig, terms }
    }

    pub fn neg(&self) -> Multivector {
        let terms = self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect();
        Multivector { sig: self.sig, terms }
    }

    /// Geometric product, the bilinear extension of the blade product.
    pub fn mul(&self, other: &Multivector) -> Result<Multivector> {
        self.same_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let p = mul_unchecked(*a, *b, self.sig);
                out.add_term(p.blade, apply_sign(p.sign, ca * cb));
            }
        }
        Ok(out)
    }

    /// `[x, y] = xy - yx`.
    pub fn bracket(&self, other: &Multivector) -> Result<Multivector> {
        self.same_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let ab = mul_unchecked(*a, *b, self.sig);
                let ba = mul_unchecked(*b, *a, self.sig);
                // the two products share a blade and differ at most by sign
                if ab.sign != ba.sign {
                    let two = Coeff::from_integer(BigInt::from(2));
                    out.add_term(ab.blade, apply_sign(ab.sign, ca * cb * two));
                }
            }
        }
        Ok(out)
    }

    pub fn involution(&self, which: Involution) -> Multivector {
        let sig = self.sig;
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| {
                let sign = match which {
                    Involution::Alpha => alpha_sign(*b),
                    Involution::Conjugation => c_sign(*b),
                    Involution::Beta => beta_sign(*b, sig),
                };
                (*b, apply_sign(sign, c.clone()))
            })
            .collect();
        Multivector { sig, terms }
    }

    /// Coefficients over `blades`, scaled to a primitive integer vector
    /// (clearing denominators). Used by the exact rank routines.
    pub fn integer_coords(&self, blades: &[Blade]) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        blades
            .iter()
            .map(|b| match self.terms.get(b) {
                Some(c) => (c * Coeff::from_integer(lcm.clone())).to_integer(),
                None => BigInt::zero(),
            })
            .collect()
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Multivector {
    /// Canonical text: mask-ascending terms, explicit `+`/`-` separators and
    /// no redundant unit coefficient. The zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let n = self.sig.n();
        for (i, (blade, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = c.abs().is_one();
            if blade.is_scalar() {
                f.write_str(&fmt_coeff(c))?;
            } else if unit {
                f.write_str(&blade.to_text(n))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(c), blade.to_text(n))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(r: u32, s: u32) -> Signature {
        Signature::new(r, s).unwrap()
    }

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(BigInt::from(n), BigInt::from(d))
    }

    fn e(sig: Signature, idx: &[u32]) -> Multivector {
        Multivector::from_blade(sig, Blade::from_indices(idx).unwrap())
    }

    #[test]
    fn linear_examples() {
        let s = sig(2, 1);
        let e1 = e(s, &[1]);
        let two_e1 = e1.add(&e1).unwrap();
        assert_eq!(two_e1.coeff(Blade::generator(1)), q(2, 1));
        assert!(e1.sub(&e1).unwrap().is_zero());

        let s = sig(5, 2);
        let one_plus_omega = Multivector::one(s).add(&Multivector::omega(s)).unwrap();
        let pi_plus = one_plus_omega.scale(&q(1, 2));
        assert_eq!(pi_plus.coeff(Blade::SCALAR), q(1, 2));
        assert_eq!(pi_plus.coeff(s.omega()), q(1, 2));
        assert_eq!(pi_plus.len(), 2);
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = e(sig(1, 1), &[1]);
        let b = e(sig(2, 0), &[1]);
        assert!(matches!(a.add(&b), Err(Error::SignatureMismatch { .. })));
        assert!(a.mul(&b).is_err());
        assert!(a.bracket(&b).is_err());
    }

    #[test]
    fn product_examples() {
        let s = sig(1, 0);
        let one = Multivector::one(s);
        let e1 = e(s, &[1]);
        let lhs = one.add(&e1).unwrap();
        let rhs = one.sub(&e1).unwrap();
        let prod = lhs.mul(&rhs).unwrap();
        assert_eq!(prod, Multivector::one(s).scale(&q(2, 1)));
        assert_eq!(one.mul(&lhs).unwrap(), lhs);
    }

    #[test]
    fn idempotents_are_orthogonal_for_n_3_mod_4_s_even() {
        for (r, s_) in [(3, 0), (1, 2), (5, 2), (3, 4), (7, 0)] {
            let s = sig(r, s_);
            let one = Multivector::one(s);
            let omega = Multivector::omega(s);
            let half = q(1, 2);
            let pp = one.add(&omega).unwrap().scale(&half);
            let pm = one.sub(&omega).unwrap().scale(&half);
            assert!(pp.mul(&pm).unwrap().is_zero(), "{s}");
            assert!(pm.mul(&pp).unwrap().is_zero(), "{s}");
            assert_eq!(pp.mul(&pp).unwrap(), pp);
        }
    }

    #[test]
    fn bracket_examples() {
        let s = sig(2, 1);
        let b = e(s, &[1]).bracket(&e(s, &[2])).unwrap();
        assert_eq!(b, e(s, &[1, 2]).scale(&q(2, 1)));
        let x = e(s, &[1]).add(&e(s, &[2, 3])).unwrap();
        assert!(x.bracket(&x).unwrap().is_zero());
        assert!(e(s, &[1]).bracket(&e(s, &[2, 3])).unwrap().is_zero());
    }

    #[test]
    fn involution_examples() {
        let s = sig(1, 1);
        let x = e(s, &[1]).add(&e(s, &[1, 2])).unwrap();
        let cx = x.involution(Involution::Conjugation);
        assert_eq!(cx, x.neg());
        let y = x.add(&Multivector::one(s)).unwrap();
        assert_eq!(y.involution(Involution::Alpha).involution(Involution::Alpha), y);
        assert_eq!(e(s, &[2]).involution(Involution::Beta), e(s, &[2]).neg());
    }

    #[test]
    fn display_is_canonical() {
        let s = sig(2, 1);
        let x = Multivector::from_terms(
            s,
            [
                (Blade::from_indices(&[3]).unwrap(), q(1, 2)),
                (Blade::from_indices(&[1, 2]).unwrap(), q(2, 1)),
                (Blade::SCALAR, q(-3, 1)),
                (Blade::from_indices(&[1]).unwrap(), q(-1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(x.to_string(), "-3 - e1 + 2*e12 + 1/2*e3");
        assert_eq!(Multivector::zero(s).to_string(), "0");
        let big = sig(6, 6);
        let y = Multivector::from_blade(big, Blade::from_indices(&[1, 12]).unwrap());
        assert_eq!(y.to_string(), "e{1,12}");
    }
}
