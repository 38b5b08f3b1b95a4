//! Identification of the semisimple ideal as a named real Lie algebra.
//!
//! The two invariants `dim K'` and `dim Z(K')` are matched against the
//! fixed-point algebras of the involutions of the compact form of the
//! complexification. Split families are solved as quadratics in their
//! parameter. The resulting name is then checked against three independent
//! dimension identities.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::dims::{dim_report, DimReport};
use crate::error::{Error, Result};

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn choose2(m: &BigInt) -> BigInt {
    m * (m - 1u32) / 2u32
}

fn one_if_two(m: &BigInt) -> BigInt {
    BigInt::from(u8::from(*m == BigInt::from(2)))
}

/// A real semisimple Lie algebra from the classical families.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraName {
    /// `so(p,q)`
    So { p: BigInt, q: BigInt },
    /// `so*(2m)`
    SoStar { m: BigInt },
    /// `su(p,q)`
    Su { p: BigInt, q: BigInt },
    /// `sl(m,R)`
    Sl { m: BigInt },
    /// `su*(2m)`
    SuStar { m: BigInt },
    /// `sp(m,R)`
    SpReal { m: BigInt },
    /// `sp(p,q)`
    Sp { p: BigInt, q: BigInt },
    /// `sp(m,C)` viewed as a real algebra.
    RealSpC { m: BigInt },
    /// `so(m,C)` viewed as a real algebra.
    RealSoC { m: BigInt },
    DirectSum(Box<AlgebraName>, Box<AlgebraName>),
}

impl AlgebraName {
    pub fn direct_sum(a: AlgebraName, b: AlgebraName) -> Self {
        AlgebraName::DirectSum(Box::new(a), Box::new(b))
    }

    pub fn dim(&self) -> BigInt {
        use AlgebraName::*;
        match self {
            So { p, q } => choose2(&(p + q)),
            SoStar { m } => m * (BigInt::from(2) * m - 1u32),
            Su { p, q } => {
                let n = p + q;
                &n * &n - 1u32
            }
            Sl { m } => m * m - 1u32,
            SuStar { m } => BigInt::from(4) * m * m - 1u32,
            SpReal { m } => m * (BigInt::from(2) * m + 1u32),
            Sp { p, q } => {
                let n = p + q;
                &n * (BigInt::from(2) * &n + 1u32)
            }
            RealSpC { m } => BigInt::from(2) * m * (BigInt::from(2) * m + 1u32),
            RealSoC { m } => m * (m - 1u32),
            DirectSum(a, b) => a.dim() + b.dim(),
        }
    }

    /// Dimension of a maximal compact subalgebra.
    pub fn max_compact_dim(&self) -> BigInt {
        use AlgebraName::*;
        let two = BigInt::from(2);
        match self {
            So { p, q } => choose2(p) + choose2(q),
            SoStar { m } | SpReal { m } => m * m,
            Su { p, q } => p * p + q * q - 1u32,
            Sl { m } | RealSoC { m } => choose2(m),
            SuStar { m } | RealSpC { m } => m * (&two * m + 1u32),
            Sp { p, q } => p * (&two * p + 1u32) + q * (&two * q + 1u32),
            DirectSum(a, b) => a.max_compact_dim() + b.max_compact_dim(),
        }
    }

    /// Dimension of the center of a maximal compact subalgebra.
    pub fn max_compact_center_dim(&self) -> BigInt {
        use AlgebraName::*;
        match self {
            So { p, q } => one_if_two(p) + one_if_two(q),
            SoStar { .. } | SpReal { .. } => BigInt::one(),
            Su { p, q } => BigInt::from(u8::from(p.is_positive() && q.is_positive())),
            Sl { m } | RealSoC { m } => one_if_two(m),
            SuStar { .. } | Sp { .. } | RealSpC { .. } => BigInt::zero(),
            DirectSum(a, b) => a.max_compact_center_dim() + b.max_compact_center_dim(),
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AlgebraName::*;
        match self {
            So { p, q } => write!(f, "so({p},{q})"),
            SoStar { m } => write!(f, "so*({})", BigInt::from(2) * m),
            Su { p, q } => write!(f, "su({p},{q})"),
            Sl { m } => write!(f, "sl({m},R)"),
            SuStar { m } => write!(f, "su*({})", BigInt::from(2) * m),
            SpReal { m } => write!(f, "sp({m},R)"),
            Sp { p, q } => write!(f, "sp({p},{q})"),
            RealSpC { m } => write!(f, "sp({m},C)_R"),
            RealSoC { m } => write!(f, "so({m},C)_R"),
            DirectSum(a, b) => write!(f, "{a}+{b}"),
        }
    }
}

impl Serialize for AlgebraName {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// A compact simple Lie algebra, `so(N)`, `su(N)` or `sp(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompactForm {
    So(BigInt),
    Su(BigInt),
    Sp(BigInt),
}

impl CompactForm {
    pub fn dim(&self) -> BigInt {
        match self {
            CompactForm::So(n) => choose2(n),
            CompactForm::Su(n) => n * n - 1u32,
            CompactForm::Sp(n) => n * (BigInt::from(2) * n + 1u32),
        }
    }
}

impl fmt::Display for CompactForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompactForm::So(n) => write!(f, "so({n})"),
            CompactForm::Su(n) => write!(f, "su({n})"),
            CompactForm::Sp(n) => write!(f, "sp({n})"),
        }
    }
}

/// Compact real form of the complexified semisimple ideal: one simple
/// factor, or two equal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompactDescriptor {
    Simple(CompactForm),
    Pair(CompactForm),
}

impl CompactDescriptor {
    pub fn factor(&self) -> &CompactForm {
        match self {
            CompactDescriptor::Simple(u) | CompactDescriptor::Pair(u) => u,
        }
    }

    pub fn dim(&self) -> BigInt {
        match self {
            CompactDescriptor::Simple(u) => u.dim(),
            CompactDescriptor::Pair(u) => BigInt::from(2) * u.dim(),
        }
    }
}

impl fmt::Display for CompactDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompactDescriptor::Simple(u) => write!(f, "{u}"),
            CompactDescriptor::Pair(u) => write!(f, "{u} x {u}"),
        }
    }
}

/// The compact form by the residue of `n` mod 8, with `k = n / 8`.
pub fn complexified_h(n: u64) -> CompactDescriptor {
    use CompactDescriptor::*;
    use CompactForm::*;
    let k = n / 8;
    let e = |x: u64| pow2(4 * k + x);
    match n % 8 {
        0 => Simple(So(e(0))),
        1 => Simple(Su(e(0))),
        2 => Simple(Sp(e(0))),
        3 => Pair(Sp(e(0))),
        4 => Simple(Sp(e(1))),
        5 => Simple(Su(e(2))),
        6 => Simple(So(e(3))),
        _ => Pair(So(e(3))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvolutionKind {
    AI,
    AII,
    AIII,
    BDI,
    DIII,
    CI,
    CII,
}

impl InvolutionKind {
    pub fn is_split(self) -> bool {
        matches!(self, InvolutionKind::AIII | InvolutionKind::BDI | InvolutionKind::CII)
    }
}

/// One family of involutions of a compact form. Split families carry a
/// parameter `p` with `0 <= p <= q = N - p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionCandidate {
    pub kind: InvolutionKind,
    /// `N` of the compact form.
    pub n: BigInt,
}

/// A concrete involution: a candidate plus its split parameter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Involution {
    pub kind: InvolutionKind,
    pub n: BigInt,
    pub p: Option<BigInt>,
}

/// The involution catalogue of a compact form.
pub fn candidates_for(u: &CompactForm) -> Vec<InvolutionCandidate> {
    use InvolutionKind::*;
    let (kinds, n): (&[InvolutionKind], &BigInt) = match u {
        CompactForm::So(n) if n.is_even() => (&[BDI, DIII], n),
        CompactForm::So(n) => (&[BDI], n),
        CompactForm::Su(n) if n.is_even() => (&[AI, AII, AIII], n),
        CompactForm::Su(n) => (&[AI, AIII], n),
        CompactForm::Sp(n) => (&[CI, CII], n),
    };
    kinds.iter().map(|&kind| InvolutionCandidate { kind, n: n.clone() }).collect()
}

impl InvolutionCandidate {
    /// Coefficients `(a, b, c)` with `dim Fix = a p^2 + b p + c` for split
    /// families.
    fn quadratic(&self) -> Option<(BigInt, BigInt, BigInt)> {
        let n = &self.n;
        let two = BigInt::from(2);
        match self.kind {
            InvolutionKind::BDI => Some((BigInt::one(), -n.clone(), choose2(n))),
            InvolutionKind::AIII => Some((two.clone(), -(&two * n), n * n - 1u32)),
            InvolutionKind::CII => {
                Some((BigInt::from(4), -(BigInt::from(4) * n), &two * n * n + n))
            }
            _ => None,
        }
    }

    fn instance(&self, p: Option<BigInt>) -> Involution {
        Involution { kind: self.kind, n: self.n.clone(), p }
    }

    fn half(&self) -> BigInt {
        self.n.div_floor(&BigInt::from(2))
    }

    /// Smallest fixed-point dimension in the family.
    pub fn min_fix_dim(&self) -> BigInt {
        let p = self.kind.is_split().then(|| self.half());
        self.instance(p).fix_dim()
    }

    /// All members of the family whose fixed-point algebra has dimension
    /// `d`, each at most once.
    pub fn solve(&self, d: &BigInt) -> Vec<Involution> {
        let Some((a, b, c)) = self.quadratic() else {
            let inv = self.instance(None);
            return if &inv.fix_dim() == d { vec![inv] } else { vec![] };
        };
        let disc = &b * &b - BigInt::from(4) * &a * (&c - d);
        if disc.is_negative() {
            return vec![];
        }
        let root = disc.sqrt();
        if &root * &root != disc {
            return vec![];
        }
        let half = self.half();
        let mut out: Vec<Involution> = Vec::new();
        for num in [-&b - &root, -&b + &root] {
            let (p, rem) = num.div_rem(&(BigInt::from(2) * &a));
            if rem.is_zero() && !p.is_negative() && p <= half {
                let inv = self.instance(Some(p));
                debug_assert_eq!(&inv.fix_dim(), d);
                if !out.contains(&inv) {
                    out.push(inv);
                }
            }
        }
        out
    }

    /// Members in order of nondecreasing fixed-point dimension, lazily.
    pub fn by_fix_dim(&self) -> Box<dyn Iterator<Item = Involution> + '_> {
        if self.kind.is_split() {
            let half = self.half();
            let mut p = Some(half);
            Box::new(std::iter::from_fn(move || {
                let cur = p.take()?;
                if cur.is_positive() {
                    p = Some(&cur - 1u32);
                }
                Some(self.instance(Some(cur)))
            }))
        } else {
            Box::new(std::iter::once(self.instance(None)))
        }
    }
}

impl Involution {
    fn q(&self) -> BigInt {
        &self.n - self.p.as_ref().expect("split family")
    }

    pub fn fix_dim(&self) -> BigInt {
        let n = &self.n;
        let two = BigInt::from(2);
        match self.kind {
            InvolutionKind::AI => choose2(n),
            InvolutionKind::AII => n * (n + 1u32) / 2u32,
            InvolutionKind::AIII => {
                let p = self.p.as_ref().unwrap();
                let q = self.q();
                p * p + &q * &q - 1u32
            }
            InvolutionKind::BDI => choose2(self.p.as_ref().unwrap()) + choose2(&self.q()),
            InvolutionKind::DIII => {
                let m = n / 2u32;
                &m * &m
            }
            InvolutionKind::CI => n * n,
            InvolutionKind::CII => {
                let p = self.p.as_ref().unwrap();
                let q = self.q();
                p * (&two * p + 1u32) + &q * (&two * &q + 1u32)
            }
        }
    }

    pub fn fix_center_dim(&self) -> BigInt {
        match self.kind {
            InvolutionKind::AI => one_if_two(&self.n),
            InvolutionKind::AII | InvolutionKind::CII => BigInt::zero(),
            InvolutionKind::AIII => {
                BigInt::from(u8::from(self.p.as_ref().unwrap().is_positive()))
            }
            InvolutionKind::BDI => one_if_two(self.p.as_ref().unwrap()) + one_if_two(&self.q()),
            InvolutionKind::DIII | InvolutionKind::CI => BigInt::one(),
        }
    }

    /// The noncompact real form induced by this involution.
    pub fn algebra(&self) -> AlgebraName {
        use AlgebraName::*;
        let n = self.n.clone();
        let p = || self.p.clone().unwrap();
        match self.kind {
            InvolutionKind::AI => Sl { m: n },
            InvolutionKind::AII => SuStar { m: n / 2u32 },
            InvolutionKind::AIII => Su { p: p(), q: self.q() },
            InvolutionKind::BDI => So { p: p(), q: self.q() },
            InvolutionKind::DIII => SoStar { m: n / 2u32 },
            InvolutionKind::CI => SpReal { m: n },
            InvolutionKind::CII => Sp { p: p(), q: self.q() },
        }
    }

    pub fn label(&self) -> String {
        match &self.p {
            Some(p) => format!("{:?}({},{})", self.kind, p, self.q()),
            None => format!("{:?}", self.kind),
        }
    }
}

/// Row label of the residue `n mod 8`, e.g. `8k+3`.
pub fn row_label(alpha: u64) -> String {
    if alpha == 0 {
        "8k".to_string()
    } else {
        format!("8k+{alpha}")
    }
}

pub fn case_id(r: u64, s: u64) -> String {
    format!("{}:s{}", row_label((r + s) % 8), s % 4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub dim: bool,
    pub max_compact: bool,
    pub center: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.dim && self.max_compact && self.center
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Derived by matching within `r, s >= 3`.
    Proven,
    /// Derived by matching at a signature with `r < 3` or `s < 3`.
    MatchedOutsideRange,
    /// Read off the closed-form table for `r < 3` or `s < 3`.
    Unproven,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub r: u64,
    pub s: u64,
    pub case: String,
    pub algebra: AlgebraName,
    pub status: Status,
    /// Labels of the matched involutions; empty for realifications and
    /// table lookups.
    pub involutions: Vec<String>,
    pub dims: DimReport,
    pub checks: Checks,
}

fn checks_for(name: &AlgebraName, dims: &DimReport) -> Checks {
    Checks {
        dim: name.dim() == dims.h,
        max_compact: name.max_compact_dim() == dims.kprime,
        center: name.max_compact_center_dim() == dims.z_kprime,
    }
}

fn describe(invs: &[Involution]) -> String {
    invs.iter().map(Involution::label).collect::<Vec<_>>().join(" + ")
}

fn match_simple(u: &CompactForm, d: &BigInt, z: &BigInt, r: u64, s: u64) -> Result<Involution> {
    let mut matches: Vec<Involution> = Vec::new();
    for cand in candidates_for(u) {
        matches.extend(cand.solve(d).into_iter().filter(|i| &i.fix_center_dim() == z));
    }
    match matches.len() {
        1 => Ok(matches.pop().unwrap()),
        0 => Err(Error::Classification(format!(
            "no involution of {u} has dim Fix = {d} and dim Z(Fix) = {z} at ({r},{s})"
        ))),
        _ => Err(Error::Classification(format!("ambiguous match at ({r},{s}): {}", describe(&matches)))),
    }
}

/// Pairs `(τ1, τ2)` of involutions of `u` with additive dimension and center
/// counts equal to `(d, z)`, unordered and deduplicated. Exhaustive over one
/// factor, so the cost grows like the square root of the rank of `u`.
pub fn match_pairs(u: &CompactForm, d: &BigInt, z: &BigInt) -> Vec<(Involution, Involution)> {
    let cands = candidates_for(u);
    let mut found = BTreeSet::new();
    for a in &cands {
        for b in &cands {
            let min_b = b.min_fix_dim();
            for ia in a.by_fix_dim() {
                let fa = ia.fix_dim();
                if &fa + &min_b > *d {
                    break;
                }
                for ib in b.solve(&(d - &fa)) {
                    if ia.fix_center_dim() + ib.fix_center_dim() == *z {
                        let pair =
                            if ia <= ib { (ia.clone(), ib) } else { (ib, ia.clone()) };
                        found.insert(pair);
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}

/// Runs the matching procedure at any `(r, s)` with `s >= 1`, ignoring the
/// `r, s >= 3` hypothesis. The report carries the consistency checks but is
/// not rejected when they fail.
pub fn match_signature(r: u64, s: u64) -> Result<ClassificationReport> {
    let dims = dim_report(r, s)?;
    let n = r + s;
    let d = &dims.kprime;
    let z = &dims.z_kprime;
    let descriptor = complexified_h(n);
    let (algebra, involutions) = match (&descriptor, n % 4 == 3) {
        (CompactDescriptor::Simple(u), false) => {
            let inv = match_simple(u, d, z, r, s)?;
            (inv.algebra(), vec![inv.label()])
        }
        (CompactDescriptor::Pair(u), true) if s % 2 == 1 => {
            let name = match u {
                CompactForm::Sp(m) => AlgebraName::RealSpC { m: m.clone() },
                CompactForm::So(m) => AlgebraName::RealSoC { m: m.clone() },
                CompactForm::Su(_) => unreachable!("no unitary pair in the catalogue"),
            };
            (name, Vec::new())
        }
        (CompactDescriptor::Pair(u), true) => {
            // α swaps the two ideals, so both factors carry half of K' and of its center
            let two = BigInt::from(2);
            if d.is_odd() || z.is_odd() {
                return Err(Error::Classification(format!(
                    "dim {d} and center {z} do not split evenly over two ideals at ({r},{s})"
                )));
            }
            let inv = match_simple(u, &(d / &two), &(z / &two), r, s)?;
            let half = inv.algebra();
            (AlgebraName::direct_sum(half.clone(), half), vec![inv.label(), inv.label()])
        }
        _ => unreachable!("the pair forms occur exactly at n = 3 mod 4"),
    };
    let checks = checks_for(&algebra, &dims);
    let status = if r >= 3 && s >= 3 { Status::Proven } else { Status::MatchedOutsideRange };
    Ok(ClassificationReport { r, s, case: case_id(r, s), algebra, status, involutions, dims, checks })
}

/// Classification with only the three consistency checks as verdict. Never
/// consults the closed-form table.
pub fn verify_classification(r: u64, s: u64) -> Result<ClassificationReport> {
    if r < 3 || s < 3 {
        return Err(Error::OutsideProvedRange { r: r as u32, s: s as u32 });
    }
    match_signature(r, s)
}

/// Names the semisimple ideal of the isometry algebra at `(r, s)`.
///
/// Outside `r, s >= 3` this is refused unless `extrapolate` is set, in which
/// case the closed-form table entry is returned and tagged as unproven.
pub fn classify(r: u64, s: u64, extrapolate: bool) -> Result<ClassificationReport> {
    if r < 3 || s < 3 {
        if !extrapolate {
            return Err(Error::OutsideProvedRange { r: r as u32, s: s as u32 });
        }
        let dims = dim_report(r, s)?;
        let n = r + s;
        let algebra = table_formula(n % 8, s % 4, n / 8).ok_or_else(|| {
            Error::Classification(format!("the closed-form table has no entry at ({r},{s})"))
        })?;
        let checks = checks_for(&algebra, &dims);
        return Ok(ClassificationReport {
            r,
            s,
            case: case_id(r, s),
            algebra,
            status: Status::Unproven,
            involutions: Vec::new(),
            dims,
            checks,
        });
    }
    let report = match_signature(r, s)?;
    if !report.checks.all() {
        return Err(Error::Classification(format!(
            "{} at ({r},{s}) fails the consistency checks {:?}",
            report.algebra, report.checks
        )));
    }
    Ok(report)
}

/// The closed-form table entry for row `8k + alpha`, column `s = beta (mod
/// 4)`. `None` when an exponent would be negative.
pub fn table_formula(alpha: u64, beta: u64, k: u64) -> Option<AlgebraName> {
    use AlgebraName::*;
    let e = |x: i64| -> Option<BigInt> {
        let exp = 4 * k as i64 + x;
        (exp >= 0).then(|| pow2(exp as u64))
    };
    let so = |x| Some(So { p: e(x)?, q: e(x)? });
    let su = |x| Some(Su { p: e(x)?, q: e(x)? });
    let sp = |x| Some(Sp { p: e(x)?, q: e(x)? });
    let sum = |a: Option<AlgebraName>| a.map(|a| AlgebraName::direct_sum(a.clone(), a));
    match (alpha, beta) {
        (0, 0 | 1) => so(-1),
        (0, _) => Some(SoStar { m: e(-1)? }),
        (1, 0 | 2) => su(-1),
        (1, 1) => Some(Sl { m: e(0)? }),
        (1, _) => Some(SuStar { m: e(-1)? }),
        (2, 0 | 3) => sp(-1),
        (2, _) => Some(SpReal { m: e(0)? }),
        (3, 0) => sum(sp(-1)),
        (3, 2) => sum(Some(SpReal { m: e(0)? })),
        (3, _) => Some(RealSpC { m: e(0)? }),
        (4, 0 | 1) => sp(0),
        (4, _) => Some(SpReal { m: e(1)? }),
        (5, 0 | 2) => su(1),
        (5, 1) => Some(SuStar { m: e(1)? }),
        (5, _) => Some(Sl { m: e(2)? }),
        (6, 0 | 3) => so(2),
        (6, _) => Some(SoStar { m: e(2)? }),
        (7, 0) => sum(so(2)),
        (7, 2) => sum(Some(SoStar { m: e(2)? })),
        (7, _) => Some(RealSoC { m: e(3)? }),
        _ => None,
    }
}

/// Representative signature of a table cell: `s = beta (mod 4)` and
/// `r + s = n`, preferring `r, s >= 3` and otherwise the largest `min(r, s)`
/// with `s >= 1`.
pub fn representative(n: u64, beta: u64) -> Option<(u64, u64)> {
    (1..=n)
        .filter(|s| s % 4 == beta)
        .map(|s| (n - s, s))
        .max_by_key(|&(r, s)| (r.min(s).min(3), std::cmp::Reverse(s)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub row: String,
    pub column: String,
    pub algebra: Option<String>,
    pub r: Option<u64>,
    pub s: Option<u64>,
    pub status: Option<Status>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub k: u64,
    pub cells: Vec<Vec<TableCell>>,
}

pub const NOT_AVAILABLE: &str = "n/a";

fn column_label(beta: u64) -> String {
    format!("s ≡ {beta} (mod 4)")
}

fn row_title(alpha: u64) -> String {
    format!("r+s = {}", row_label(alpha))
}

/// The 8 x 4 table of names at a given `k`, one cell per `(n mod 8, s mod
/// 4)`, each classified at a representative signature.
///
/// Cells with `n >= 6` are matched. If no representative with `r, s >= 3`
/// exists the match runs outside that range and the cell says so; if that
/// match fails, or `n < 6`, the cell is n/a, or the table entry when
/// `extrapolate` is set.
pub fn emit_table(k: u64, extrapolate: bool) -> Result<Table> {
    let coords: Vec<(u64, u64)> = (0..8).flat_map(|a| (0..4).map(move |b| (a, b))).collect();
    let cells: Vec<TableCell> = coords
        .par_iter()
        .map(|&(alpha, beta)| table_cell(k, alpha, beta, extrapolate))
        .collect::<Result<_>>()?;
    let cells = cells.chunks(4).map(<[TableCell]>::to_vec).collect();
    Ok(Table { k, cells })
}

fn table_cell(k: u64, alpha: u64, beta: u64, extrapolate: bool) -> Result<TableCell> {
    let n = 8 * k + alpha;
    let mut cell = TableCell {
        row: row_title(alpha),
        column: column_label(beta),
        algebra: None,
        r: None,
        s: None,
        status: None,
    };
    let Some((r, s)) = representative(n, beta) else {
        return Ok(cell);
    };
    let in_range = r >= 3 && s >= 3;
    let matched = if n >= 6 {
        match match_signature(r, s) {
            Ok(rep) if rep.checks.all() => Some(rep),
            Ok(_) if in_range => {
                return Err(Error::Classification(format!(
                    "table cell ({},{}) at ({r},{s}) fails its checks",
                    row_label(alpha),
                    beta
                )))
            }
            Err(e) if in_range => return Err(e),
            // small signatures can match ambiguously (e.g. so(2,6) and so*(8))
            _ => None,
        }
    } else {
        None
    };
    let report = match matched {
        Some(rep) => Some(rep),
        None if extrapolate => classify(r, s, true).ok(),
        None => None,
    };
    if let Some(rep) = report {
        cell.algebra = Some(rep.algebra.to_string());
        cell.r = Some(r);
        cell.s = Some(s);
        cell.status = Some(rep.status);
    }
    Ok(cell)
}

impl Table {
    fn name(cell: &TableCell) -> &str {
        cell.algebra.as_deref().unwrap_or(NOT_AVAILABLE)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once("row".to_string()).chain((0..4).map(column_label));
        w.write_record(header).expect("in-memory write");
        for row in &self.cells {
            let fields = std::iter::once(row[0].row.as_str()).chain(row.iter().map(Self::name));
            w.write_record(fields).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    /// Aligned columns, with a footnote list of cells not derived inside
    /// `r, s >= 3`.
    pub fn to_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = vec![std::iter::once(format!("k = {}", self.k))
            .chain((0..4).map(column_label))
            .collect()];
        let mut notes = Vec::new();
        for row in &self.cells {
            let mut line = vec![row[0].row.clone()];
            for c in row {
                let mut text = Self::name(c).to_string();
                match c.status {
                    Some(Status::MatchedOutsideRange) => {
                        text.push_str(" [*]");
                        notes.push(format!(
                            "[*] {} / {}: matched at ({},{}), outside r,s >= 3",
                            c.row,
                            c.column,
                            c.r.unwrap(),
                            c.s.unwrap()
                        ));
                    }
                    Some(Status::Unproven) => {
                        text.push_str(" [?]");
                        notes.push(format!("[?] {} / {}: table value, unproven", c.row, c.column));
                    }
                    _ => {}
                }
                line.push(text);
            }
            grid.push(line);
        }
        let widths: Vec<usize> = (0..5)
            .map(|j| grid.iter().map(|l| l[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in &grid {
            let cols: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(t, &w)| format!("{t}{}", " ".repeat(w - t.chars().count())))
                .collect();
            out.push_str(cols.join("  ").trim_end());
            out.push('\n');
        }
        for note in notes {
            out.push_str(&note);
            out.push('\n');
        }
        out
    }
}
