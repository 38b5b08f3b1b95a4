//! Closed-form dimensions of the isometry algebra and its pieces.
//!
//! Production values come from a uniform roots-of-unity filter evaluated in
//! the Gaussian integers, so they are exact for any size. The trigonometric
//! case formulas live in [`trig`] and are evaluated exactly in `Q(√2)`.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInteger { re: re.into(), im: im.into() }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Mul for &GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, o: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Add for GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, o: GaussianInteger) -> GaussianInteger {
        GaussianInteger { re: self.re + o.re, im: self.im + o.im }
    }
}

/// `Σ_k C(n, a + 4k)` by the 4th-roots-of-unity filter
/// `¼ Σ_j i^{-ja} (1 + i^j)^n`.
///
/// The `j = 2` term is `(-1)^a 0^n`; it only contributes at `n = 0`.
pub fn binom_sum_mod4(n: u64, a: u32) -> BigInt {
    assert!(a < 4, "residue must be in 0..4");
    let a = a as i64;
    let mut total = GaussianInteger::new(BigInt::one() << n, 0);
    total = total + &GaussianInteger::i_pow(-a) * &GaussianInteger::new(1, 1).pow(n);
    if n == 0 {
        total = total + GaussianInteger::i_pow(-2 * a);
    }
    total = total + &GaussianInteger::i_pow(-3 * a) * &GaussianInteger::new(1, -1).pow(n);
    assert!(total.im.is_zero(), "imaginary parts must cancel");
    let (q, rem) = total.re.div_rem(&BigInt::from(4));
    assert!(rem.is_zero(), "filter sum must be divisible by 4");
    q
}

/// `dim G = #{I : |I| ≡ 1, 2 (mod 4)}`.
pub fn dim_g(r: u64, s: u64) -> BigInt {
    let n = r + s;
    binom_sum_mod4(n, 1) + binom_sum_mod4(n, 2)
}

/// Blades of the isometry algebra with `|I+|` odd, split by the residues of
/// `|I+|` (drawn from the `s` generators) and `|I-|` (from the `r`).
pub fn dim_p(r: u64, s: u64) -> BigInt {
    let bs = |a| binom_sum_mod4(s, a);
    let br = |a| binom_sum_mod4(r, a);
    bs(1) * br(0) + bs(3) * br(2) + bs(1) * br(1) + bs(3) * br(3)
}

/// As [`dim_p`] with `|I+|` even.
pub fn dim_k(r: u64, s: u64) -> BigInt {
    let bs = |a| binom_sum_mod4(s, a);
    let br = |a| binom_sum_mod4(r, a);
    let k = bs(0) * br(1) + bs(2) * br(3) + bs(0) * br(2) + bs(2) * br(0);
    assert_eq!(&k + dim_p(r, s), dim_g(r, s), "K and P must partition G");
    k
}

fn as_decimal<S: Serializer>(x: &BigInt, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&x.to_string())
}

fn from_decimal<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<BigInt, D::Error> {
    let text = String::deserialize(de)?;
    text.parse().map_err(serde::de::Error::custom)
}

/// All dimension invariants of one signature. Serialises integers as
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub r: u64,
    pub s: u64,
    #[serde(rename = "G", serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub g: BigInt,
    #[serde(rename = "P", serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub p: BigInt,
    #[serde(rename = "K", serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub k: BigInt,
    #[serde(rename = "H", serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub h: BigInt,
    #[serde(rename = "Kprime", serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub kprime: BigInt,
    #[serde(rename = "Z_K", serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub z_k: BigInt,
    #[serde(rename = "Z_Kprime", serialize_with = "as_decimal", deserialize_with = "from_decimal")]
    pub z_kprime: BigInt,
}

/// Number of central blades of `K` by the three closed-form clauses, and
/// whether `ω` is among them through the first clause.
fn center_k_count(r: u64, s: u64) -> (u64, bool) {
    let n = r + s;
    // blades as half-open index ranges [lo, hi)
    let mut found: Vec<(u64, u64)> = Vec::new();
    let omega_clause = n % 4 == 1 && s % 2 == 0;
    if omega_clause {
        found.push((0, n));
    }
    if s % 4 == 2 {
        found.push((r, n));
    }
    if r % 4 == 1 {
        found.push((0, r));
    }
    found.sort_unstable();
    found.dedup();
    (found.len() as u64, omega_clause)
}

/// Full dimension report. Requires `s >= 1`; the compact case `s = 0` is
/// not covered by the center description used here.
pub fn dim_report(r: u64, s: u64) -> Result<DimReport> {
    if s == 0 {
        return Err(Error::Precondition(
            "s = 0 (the compact case) is outside the supported range; use s >= 1".into(),
        ));
    }
    let n = r + s;
    let g = dim_g(r, s);
    let p = dim_p(r, s);
    let k = dim_k(r, s);
    let n1 = n % 4 == 1;
    let h = if n1 { &g - 1 } else { g.clone() };
    let kprime = if n1 && s % 2 == 0 { &k - 1 } else { k.clone() };
    let (zk, omega_central) = center_k_count(r, s);
    let z_kprime = if n1 && omega_central { zk - 1 } else { zk };
    let report = DimReport {
        r,
        s,
        g,
        p,
        k,
        h,
        kprime,
        z_k: BigInt::from(zk),
        z_kprime: BigInt::from(z_kprime),
    };
    // inside H the -1 eigenspace of β loses ω when ω lies in P
    let omega_in_p = u8::from(n1 && s % 2 == 1);
    debug_assert_eq!(&report.h - &report.kprime, &report.p - omega_in_p);
    Ok(report)
}

pub mod trig {
    //! The trigonometric closed forms, evaluated exactly. A value
    //! `2^{m/2} cos(kπ/4)` is computed in `Q(√2)` and must come out as an
    //! integer; any leftover `√2` part is reported as an error.

    use num_rational::BigRational;

    use super::*;

    /// `a + b√2` with rational `a`, `b`.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct QSqrt2 {
        pub a: BigRational,
        pub b: BigRational,
    }

    impl QSqrt2 {
        pub fn int(x: impl Into<BigInt>) -> Self {
            QSqrt2 { a: BigRational::from_integer(x.into()), b: BigRational::zero() }
        }

        /// `2^{m/2}` for any integer `m`.
        pub fn pow2_half(m: i64) -> Self {
            let two = BigRational::from_integer(BigInt::from(2));
            let p = |e: i64| -> BigRational {
                if e >= 0 {
                    two.clone().pow(e as u32)
                } else {
                    two.clone().pow(-e as u32).recip()
                }
            };
            if m.rem_euclid(2) == 0 {
                QSqrt2 { a: p(m / 2), b: BigRational::zero() }
            } else {
                QSqrt2 { a: BigRational::zero(), b: p((m - 1).div_euclid(2)) }
            }
        }

        /// `cos(kπ/4)`.
        pub fn cos_quarter_pi(k: i64) -> Self {
            let half = BigRational::new(BigInt::from(1), BigInt::from(2));
            let (a, b) = match k.rem_euclid(8) {
                0 => (BigRational::one(), BigRational::zero()),
                1 | 7 => (BigRational::zero(), half),
                2 | 6 => (BigRational::zero(), BigRational::zero()),
                3 | 5 => (BigRational::zero(), -half),
                _ => (-BigRational::one(), BigRational::zero()),
            };
            QSqrt2 { a, b }
        }

        /// `sin(kπ/4) = cos((k-2)π/4)`.
        pub fn sin_quarter_pi(k: i64) -> Self {
            Self::cos_quarter_pi(k - 2)
        }

        pub fn add(&self, o: &Self) -> Self {
            QSqrt2 { a: &self.a + &o.a, b: &self.b + &o.b }
        }

        pub fn sub(&self, o: &Self) -> Self {
            QSqrt2 { a: &self.a - &o.a, b: &self.b - &o.b }
        }

        pub fn mul(&self, o: &Self) -> Self {
            let two = BigRational::from_integer(BigInt::from(2));
            QSqrt2 {
                a: &self.a * &o.a + two * &self.b * &o.b,
                b: &self.a * &o.b + &self.b * &o.a,
            }
        }

        pub fn to_integer(&self) -> Result<BigInt> {
            if !self.b.is_zero() || !self.a.is_integer() {
                return Err(Error::Inconsistent(format!(
                    "closed form did not reduce to an integer: {} + {}√2",
                    self.a, self.b
                )));
            }
            Ok(self.a.to_integer())
        }
    }

    fn p2h(m: i64) -> QSqrt2 {
        QSqrt2::pow2_half(m)
    }

    fn cos(k: i64) -> QSqrt2 {
        QSqrt2::cos_quarter_pi(k)
    }

    fn sin(k: i64) -> QSqrt2 {
        QSqrt2::sin_quarter_pi(k)
    }

    /// `Σ_k C(n, a+4k)` from the cos/sin expressions, `n >= 1`.
    pub fn binom_sum_mod4(n: i64, a: u32) -> Result<BigInt> {
        let base = p2h(2 * (n - 2));
        let amp = p2h(n - 2);
        let v = match a {
            0 => base.add(&amp.mul(&cos(n))),
            1 => base.add(&amp.mul(&sin(n))),
            2 => base.sub(&amp.mul(&cos(n))),
            3 => base.sub(&amp.mul(&sin(n))),
            _ => return Err(Error::Precondition("residue must be in 0..4".into())),
        };
        v.to_integer()
    }

    /// `2^{n-1} - 2^{(n-1)/2} cos((n+1)π/4)`.
    pub fn dim_g(n: i64) -> Result<BigInt> {
        p2h(2 * (n - 1)).sub(&p2h(n - 1).mul(&cos(n + 1))).to_integer()
    }

    /// The case formulas for `dim P`. `None` when `(r, s)` is outside every
    /// stated domain.
    pub fn dim_p(r: i64, s: i64) -> Option<Result<BigInt>> {
        let n = r + s;
        let v = if r >= 3 && s >= 3 {
            p2h(2 * (n - 2)).add(&p2h(n - 1).mul(&sin(r + 1)).mul(&sin(s)))
        } else if r >= 3 && s == 1 {
            p2h(2 * (r - 1)).add(&p2h(r - 1).mul(&sin(r + 1)))
        } else if r >= 3 && s == 2 {
            p2h(2 * r).add(&p2h(r + 1).mul(&sin(r + 1)))
        } else if s >= 3 && r == 1 {
            p2h(2 * (s - 1)).add(&p2h(s).mul(&sin(s)))
        } else if s >= 3 && r == 2 {
            p2h(2 * s).add(&p2h(s).mul(&sin(s)))
        } else {
            return small_case(r, s, &[2, 4, 3, 6]).map(|x| Ok(BigInt::from(x)));
        };
        Some(v.to_integer())
    }

    /// The case formulas for `dim K`; both expressions of the general case
    /// are evaluated and must agree.
    pub fn dim_k(r: i64, s: i64) -> Option<Result<BigInt>> {
        let n = r + s;
        let v = if r >= 3 && s >= 3 {
            let first = p2h(2 * (n - 2)).sub(&p2h(n - 1).mul(&cos(r + 1)).mul(&cos(s)));
            let second =
                p2h(2 * (n - 2)).sub(&p2h(n - 3).mul(&cos(n + 1).add(&cos(r - s + 1))));
            if first != second {
                return Some(Err(Error::Inconsistent(format!(
                    "the two general dim K expressions differ at ({r},{s})"
                ))));
            }
            first
        } else if r >= 3 && s == 1 {
            p2h(2 * (r - 1)).sub(&p2h(r - 1).mul(&cos(r + 1)))
        } else if r >= 3 && s == 2 {
            p2h(2 * r)
        } else if s >= 3 && r == 1 {
            p2h(2 * (s - 1))
        } else if s >= 3 && r == 2 {
            p2h(2 * s).add(&p2h(s).mul(&cos(s)))
        } else {
            return small_case(r, s, &[1, 2, 3, 4]).map(|x| Ok(BigInt::from(x)));
        };
        Some(v.to_integer())
    }

    /// Tabulated values at (1,1), (1,2), (2,1), (2,2).
    fn small_case(r: i64, s: i64, values: &[i64; 4]) -> Option<i64> {
        match (r, s) {
            (1, 1) => Some(values[0]),
            (1, 2) => Some(values[1]),
            (2, 1) => Some(values[2]),
            (2, 2) => Some(values[3]),
            _ => None,
        }
    }
}
