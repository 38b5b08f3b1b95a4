//! The Lie algebra of isometric elements of Cl(r,s) and its structure.
//!
//! Every subspace needed here (the algebra itself, the two Cartan summands,
//! the semisimple ideal, the centers) is spanned by basis blades, so each is
//! represented by a sorted blade list. The bracket of two blades is either
//! zero or `±2` times a single blade, which keeps structure constants sparse
//! and makes the Killing form diagonal in the blade basis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::blade::{
    beta_sign, blade_square, commutes, in_isometry_algebra, mul_unchecked, Blade, Sign,
    SignedBlade, Signature, MAX_EXHAUSTIVE_N,
};
use crate::error::{Error, Result};
use crate::linalg::{nullity, SparseEchelon, SparseRow};
use crate::multivector::{Coeff, Multivector};

pub const CENTRALIZER_MAX_N: u32 = 12;
pub const KILLING_MAX_N: u32 = 10;
pub const IDEAL_SPLIT_MAX_N: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    G,
    K,
    P,
    H,
    Kprime,
    ZK,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 6] =
        [SpaceKind::G, SpaceKind::K, SpaceKind::P, SpaceKind::H, SpaceKind::Kprime, SpaceKind::ZK];

    pub fn label(self) -> &'static str {
        match self {
            SpaceKind::G => "G",
            SpaceKind::K => "K",
            SpaceKind::P => "P",
            SpaceKind::H => "H",
            SpaceKind::Kprime => "Kprime",
            SpaceKind::ZK => "ZK",
        }
    }
}

impl std::str::FromStr for SpaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpaceKind::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown space `{s}` (G|K|P|H|Kprime|ZK)")))
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A blade-spanned subspace: sorted ascending by mask, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BladeSubspace {
    sig: Signature,
    basis: Vec<Blade>,
}

impl BladeSubspace {
    pub fn new(sig: Signature, mut basis: Vec<Blade>) -> Result<Self> {
        for b in &basis {
            sig.check_blade(*b)?;
        }
        basis.sort_unstable();
        basis.dedup();
        Ok(BladeSubspace { sig, basis })
    }

    fn from_sorted(sig: Signature, basis: Vec<Blade>) -> Self {
        debug_assert!(basis.windows(2).all(|w| w[0] < w[1]));
        BladeSubspace { sig, basis }
    }

    pub fn empty(sig: Signature) -> Self {
        BladeSubspace { sig, basis: Vec::new() }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn basis(&self) -> &[Blade] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, b: Blade) -> Option<usize> {
        self.basis.binary_search(&b).ok()
    }

    pub fn contains(&self, b: Blade) -> bool {
        self.index_of(b).is_some()
    }

    pub fn filter(&self, mut keep: impl FnMut(Blade) -> bool) -> BladeSubspace {
        let basis = self.basis.iter().copied().filter(|b| keep(*b)).collect();
        BladeSubspace::from_sorted(self.sig, basis)
    }

    pub fn is_subset_of(&self, other: &BladeSubspace) -> bool {
        self.basis.iter().all(|b| other.contains(*b))
    }

    /// Dump format: a header line followed by one blade per line.
    pub fn dump(&self, kind: SpaceKind) -> String {
        let mut out = format!(
            "# space={} r={} s={} dim={}\n",
            kind,
            self.sig.r(),
            self.sig.s(),
            self.dim()
        );
        for b in &self.basis {
            out.push_str(&b.to_text(self.sig.n()));
            out.push('\n');
        }
        out
    }
}

/// `[e_a, e_b] = 2 * sign * e_blade`, or `None` when the blades commute.
#[inline]
pub fn blade_bracket(a: Blade, b: Blade, sig: Signature) -> Option<SignedBlade> {
    if commutes(a, b) {
        None
    } else {
        Some(mul_unchecked(a, b, sig))
    }
}

/// All blades of degree 1 or 2 (mod 4).
pub fn basis_g(sig: Signature) -> Result<BladeSubspace> {
    sig.require_exhaustive(MAX_EXHAUSTIVE_N)?;
    let basis = (0..(1u64 << sig.n())).map(Blade).filter(|b| in_isometry_algebra(*b)).collect();
    Ok(BladeSubspace::from_sorted(sig, basis))
}

/// The center of the isometry algebra: `{ω}` when `n ≡ 1 (mod 4)`, else zero.
pub fn center_g(sig: Signature) -> BladeSubspace {
    if sig.n() % 4 == 1 {
        BladeSubspace::from_sorted(sig, vec![sig.omega()])
    } else {
        BladeSubspace::empty(sig)
    }
}

#[derive(Debug, Clone)]
pub struct CartanData {
    pub g: BladeSubspace,
    pub k: BladeSubspace,
    pub p: BladeSubspace,
    pub h: BladeSubspace,
    pub kprime: BladeSubspace,
    pub omega: Blade,
    pub omega_in_g: bool,
    pub omega_in_k: bool,
}

impl CartanData {
    pub fn space(&self, kind: SpaceKind) -> BladeSubspace {
        match kind {
            SpaceKind::G => self.g.clone(),
            SpaceKind::K => self.k.clone(),
            SpaceKind::P => self.p.clone(),
            SpaceKind::H => self.h.clone(),
            SpaceKind::Kprime => self.kprime.clone(),
            SpaceKind::ZK => center_k_blades(self.g.signature()),
        }
    }
}

/// Cartan decomposition `G = K ⊕ P` together with the semisimple ideal `H`
/// and `K' = K ∩ H`.
///
/// `K` is characterised both as the blades squaring to `-1` and as the
/// `+1`-eigenspace of the signature automorphism; the two are compared
/// blade by blade.
pub fn cartan_split(sig: Signature) -> Result<CartanData> {
    let g = basis_g(sig)?;
    for &b in g.basis() {
        let by_square = blade_square(b, sig) == Sign::Minus;
        let by_beta = beta_sign(b, sig) == Sign::Plus;
        if by_square != by_beta {
            return Err(Error::Inconsistent(format!(
                "blade {} in {sig}: square and eigenvalue characterisations disagree",
                b.to_text(sig.n())
            )));
        }
    }
    let k = g.filter(|b| blade_square(b, sig) == Sign::Minus);
    let p = g.filter(|b| blade_square(b, sig) == Sign::Plus);
    let (h, kprime) = subspace_h_and_kprime(sig, &g, &k);
    let omega = sig.omega();
    Ok(CartanData {
        omega_in_g: g.contains(omega),
        omega_in_k: k.contains(omega),
        g,
        k,
        p,
        h,
        kprime,
        omega,
    })
}

/// `H` drops `ω` exactly when `n ≡ 1 (mod 4)`; `K'` drops it from `K` when it
/// was there, which happens exactly when `s` is even.
pub fn subspace_h_and_kprime(
    sig: Signature,
    g: &BladeSubspace,
    k: &BladeSubspace,
) -> (BladeSubspace, BladeSubspace) {
    let omega = sig.omega();
    if sig.n() % 4 == 1 {
        let h = g.filter(|b| b != omega);
        let kprime = if sig.s() % 2 == 0 { k.filter(|b| b != omega) } else { k.clone() };
        (h, kprime)
    } else {
        (g.clone(), k.clone())
    }
}

/// Central blades of `K` from their closed-form description:
/// (a) `ω` when `n ≡ 1 (mod 4)` and `s` even;
/// (b) `e_{r+1}...e_{r+s}` when `s ≡ 2 (mod 4)`;
/// (c) `e_1...e_r` when `r ≡ 1 (mod 4)`.
pub fn center_k_blades(sig: Signature) -> BladeSubspace {
    let mut out = Vec::new();
    if sig.n() % 4 == 1 && sig.s() % 2 == 0 {
        out.push(sig.omega());
    }
    if sig.s() % 4 == 2 {
        out.push(Blade(sig.positive_mask()));
    }
    if sig.r() % 4 == 1 {
        out.push(Blade(sig.negative_mask()));
    }
    out.sort_unstable();
    out.dedup();
    BladeSubspace::from_sorted(sig, out)
}

#[derive(Debug, Clone)]
pub struct Centralizer {
    /// Basis blades commuting with every basis blade of the subspace.
    pub blades: BladeSubspace,
    /// Exact null space dimension of `ξ ↦ ([ξ, e_J])_J` on the subspace.
    pub nullspace_dim: usize,
}

/// Brute-force center of a blade subspace.
///
/// Besides the blade-wise commutation test, solves the full linear system
/// `[ξ, e_J] = 0` for all basis `e_J` over the integers and checks that its
/// solution space has exactly the dimension of the central blade span.
pub fn centralizer_oracle(sub: &BladeSubspace) -> Result<Centralizer> {
    let sig = sub.signature();
    sig.require_exhaustive(CENTRALIZER_MAX_N)?;
    let basis = sub.basis();
    let central: Vec<Blade> = basis
        .par_iter()
        .copied()
        .filter(|a| basis.iter().all(|b| commutes(*a, *b)))
        .collect();

    // Rows are indexed by (J, output blade); column I carries the
    // coefficient of e_{I Δ J} in [e_I, e_J].
    let mut rows: std::collections::BTreeMap<(usize, Blade), SparseRow> = Default::default();
    for (j, &bj) in basis.iter().enumerate() {
        for (i, &bi) in basis.iter().enumerate() {
            if let Some(t) = blade_bracket(bi, bj, sig) {
                let coeff = BigInt::from(2 * t.sign.to_i64());
                rows.entry((j, t.blade)).or_default().insert(i, coeff);
            }
        }
    }
    let nullspace_dim = nullity(rows.into_values(), basis.len());
    if nullspace_dim != central.len() {
        return Err(Error::Inconsistent(format!(
            "center of a {}-dimensional subspace in {sig}: null space dimension {} but {} central blades",
            basis.len(),
            nullspace_dim,
            central.len()
        )));
    }
    Ok(Centralizer { blades: BladeSubspace::from_sorted(sig, central), nullspace_dim })
}

/// One structure constant: `[e_i, e_j] = coeff * e_k` with `k` the basis
/// index of `blade` inside the subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: i64,
}

/// Structure constants of a subspace that is closed under the bracket.
/// Entries are evaluated on demand; construction verifies closure.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    sub: BladeSubspace,
}

pub fn structure_constants(sub: &BladeSubspace) -> Result<StructureConstants> {
    let sig = sub.signature();
    sig.require_exhaustive(MAX_EXHAUSTIVE_N)?;
    let basis = sub.basis();
    let escape = (0..basis.len()).into_par_iter().find_map_any(|i| {
        basis[i + 1..].iter().find_map(|&bj| {
            blade_bracket(basis[i], bj, sig)
                .filter(|t| !sub.contains(t.blade))
                .map(|_| (basis[i], bj))
        })
    });
    if let Some((a, b)) = escape {
        let n = sig.n();
        return Err(Error::NotClosed { left: a.to_text(n), right: b.to_text(n) });
    }
    Ok(StructureConstants { sub: sub.clone() })
}

impl StructureConstants {
    pub fn subspace(&self) -> &BladeSubspace {
        &self.sub
    }

    pub fn get(&self, i: usize, j: usize) -> Option<StructureEntry> {
        let basis = self.sub.basis();
        let t = blade_bracket(basis[i], basis[j], self.sub.signature())?;
        // closure was verified at construction
        let k = self.sub.index_of(t.blade).expect("closed subspace");
        Some(StructureEntry { i, j, k, coeff: 2 * t.sign.to_i64() })
    }

    /// Nonzero constants with `i < j`; the rest follow by antisymmetry.
    pub fn iter(&self) -> impl Iterator<Item = StructureEntry> + '_ {
        let d = self.sub.dim();
        (0..d).flat_map(move |i| (i + 1..d).filter_map(move |j| self.get(i, j)))
    }
}

#[derive(Debug, Clone)]
pub struct KillingDiagonal {
    pub sub: BladeSubspace,
    /// `B(e_I, e_I)` aligned with `sub.basis()`.
    pub entries: Vec<i64>,
}

impl KillingDiagonal {
    pub fn entry(&self, b: Blade) -> Option<i64> {
        self.sub.index_of(b).map(|i| self.entries[i])
    }
}

const NO_TARGET: u32 = u32::MAX;

/// Killing form `B(x, y) = tr(ad x ∘ ad y)` of a blade subalgebra.
///
/// Returns the diagonal entries. Off-diagonal entries are computed as well
/// and must all vanish; a nonzero one is reported as an inconsistency.
pub fn killing_diagonal(sub: &BladeSubspace) -> Result<KillingDiagonal> {
    let sig = sub.signature();
    sig.require_exhaustive(KILLING_MAX_N)?;
    let basis = sub.basis();
    let d = basis.len();

    // ad[i*d + k] = (target index, coefficient) of [e_i, e_k]
    let mut ad: Vec<(u32, i64)> = vec![(NO_TARGET, 0); d * d];
    for (i, &bi) in basis.iter().enumerate() {
        for (k, &bk) in basis.iter().enumerate() {
            if let Some(t) = blade_bracket(bi, bk, sig) {
                let Some(target) = sub.index_of(t.blade) else {
                    let n = sig.n();
                    return Err(Error::NotClosed { left: bi.to_text(n), right: bk.to_text(n) });
                };
                ad[i * d + k] = (target as u32, 2 * t.sign.to_i64());
            }
        }
    }

    let trace = |i: usize, j: usize| -> i64 {
        let mut acc = 0i64;
        for k in 0..d {
            let (l, c1) = ad[j * d + k];
            if l == NO_TARGET {
                continue;
            }
            let (m, c2) = ad[i * d + l as usize];
            if m as usize == k {
                acc += c1 * c2;
            }
        }
        acc
    };

    let off_diagonal = (0..d)
        .into_par_iter()
        .find_map_any(|i| (0..d).find(|&j| j != i && trace(i, j) != 0).map(|j| (i, j)));
    if let Some((i, j)) = off_diagonal {
        let n = sig.n();
        return Err(Error::Inconsistent(format!(
            "Killing form not diagonal: B({}, {}) != 0",
            basis[i].to_text(n),
            basis[j].to_text(n)
        )));
    }

    let entries = (0..d).into_par_iter().map(|i| trace(i, i)).collect();
    Ok(KillingDiagonal { sub: sub.clone(), entries })
}

/// Decomposition of the isometry algebra into two commuting ideals by the
/// central idempotents `π± = (1 ± ω)/2`, for `n ≡ 3 (mod 4)` and `s` even.
#[derive(Debug, Clone)]
pub struct IdealSplit {
    pub dim_g: usize,
    /// Independent spanning set of `π+ · G`.
    pub g1: Vec<Multivector>,
    /// Independent spanning set of `π- · G`.
    pub g2: Vec<Multivector>,
    pub idempotent: bool,
    pub orthogonal: bool,
    pub cross_brackets_vanish: bool,
}

impl IdealSplit {
    pub fn all_checks_pass(&self) -> bool {
        self.idempotent
            && self.orthogonal
            && self.cross_brackets_vanish
            && self.g1.len() * 2 == self.dim_g
            && self.g2.len() * 2 == self.dim_g
    }
}

fn independent_images(pi: &Multivector, g: &BladeSubspace) -> Result<Vec<Multivector>> {
    let sig = g.signature();
    let mut ech = SparseEchelon::new();
    let mut out = Vec::new();
    for &b in g.basis() {
        let v = pi.mul(&Multivector::from_blade(sig, b))?;
        let row: SparseRow = {
            let support: Vec<Blade> = v.terms().map(|(b, _)| *b).collect();
            let coords = v.integer_coords(&support);
            support.iter().map(|b| b.mask() as usize).zip(coords).collect()
        };
        if ech.insert(row) {
            out.push(v);
        }
    }
    Ok(out)
}

pub fn ideal_split(sig: Signature) -> Result<IdealSplit> {
    if sig.n() % 4 != 3 || sig.s() % 2 != 0 {
        return Err(Error::Precondition(format!(
            "ideal splitting needs n ≡ 3 (mod 4) and s even; got {sig}"
        )));
    }
    sig.require_exhaustive(IDEAL_SPLIT_MAX_N)?;
    let g = basis_g(sig)?;
    let one = Multivector::one(sig);
    let omega = Multivector::omega(sig);
    let half = Coeff::new(BigInt::one(), BigInt::from(2));
    let pi_plus = one.add(&omega)?.scale(&half);
    let pi_minus = one.sub(&omega)?.scale(&half);

    let idempotent = pi_plus.mul(&pi_plus)? == pi_plus && pi_minus.mul(&pi_minus)? == pi_minus;
    let orthogonal = pi_plus.mul(&pi_minus)?.is_zero() && pi_minus.mul(&pi_plus)?.is_zero();

    let g1 = independent_images(&pi_plus, &g)?;
    let g2 = independent_images(&pi_minus, &g)?;

    let cross_brackets_vanish = g1
        .par_iter()
        .all(|x| g2.iter().all(|y| x.bracket(y).map(|z| z.is_zero()).unwrap_or(false)));

    Ok(IdealSplit { dim_g: g.dim(), g1, g2, idempotent, orthogonal, cross_brackets_vanish })
}

/// Checks that `ω` is a complex structure on the isometry algebra when
/// `n ≡ 3 (mod 4)` and `s` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexStructureReport {
    pub omega_central: bool,
    pub omega_squared_is_minus_one: bool,
    pub commutes_with_ad: bool,
}

impl ComplexStructureReport {
    pub fn all_checks_pass(&self) -> bool {
        self.omega_central && self.omega_squared_is_minus_one && self.commutes_with_ad
    }
}

pub fn omega_complex_structure_check(sig: Signature) -> Result<ComplexStructureReport> {
    if sig.n() % 4 != 3 || sig.s() % 2 != 1 {
        return Err(Error::Precondition(format!(
            "complex structure check needs n ≡ 3 (mod 4) and s odd; got {sig}"
        )));
    }
    sig.require_exhaustive(IDEAL_SPLIT_MAX_N)?;
    let g = basis_g(sig)?;
    let omega = sig.omega();

    let omega_central = g.basis().iter().all(|&b| commutes(omega, b));
    let omega_mv = Multivector::omega(sig);
    let omega_squared_is_minus_one = omega_mv.mul(&omega_mv)? == Multivector::one(sig).neg();

    // ω[ξ, η] == [ξ, ωη] over all basis pairs, as signed blades
    let times_omega = |t: SignedBlade| {
        let p = mul_unchecked(omega, t.blade, sig);
        SignedBlade { sign: p.sign * t.sign, blade: p.blade }
    };
    let basis = g.basis();
    let commutes_with_ad = basis.par_iter().all(|&xi| {
        basis.iter().all(|&eta| {
            let lhs = blade_bracket(xi, eta, sig).map(times_omega);
            let w_eta = mul_unchecked(omega, eta, sig);
            let rhs = blade_bracket(xi, w_eta.blade, sig)
                .map(|t| SignedBlade { sign: t.sign * w_eta.sign, blade: t.blade });
            lhs == rhs
        })
    });

    Ok(ComplexStructureReport { omega_central, omega_squared_is_minus_one, commutes_with_ad })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(r: u32, s: u32) -> Signature {
        Signature::new(r, s).unwrap()
    }

    fn b(idx: &[u32]) -> Blade {
        Blade::from_indices(idx).unwrap()
    }

    fn blades(sub: &BladeSubspace) -> Vec<Vec<u32>> {
        sub.basis().iter().map(|b| b.indices()).collect()
    }

    #[test]
    fn basis_g_examples() {
        assert_eq!(blades(&basis_g(sig(1, 1)).unwrap()), vec![vec![1], vec![2], vec![1, 2]]);
        assert_eq!(blades(&basis_g(sig(1, 0)).unwrap()), vec![vec![1]]);
        assert_eq!(basis_g(sig(2, 1)).unwrap().dim(), 6);
        assert!(matches!(basis_g(sig(8, 7)), Err(Error::TooLarge { n: 15, .. })));
    }

    #[test]
    fn cartan_split_examples() {
        let c = cartan_split(sig(1, 1)).unwrap();
        assert_eq!(blades(&c.k), vec![vec![1]]);
        assert_eq!(blades(&c.p), vec![vec![2], vec![1, 2]]);
        let c = cartan_split(sig(2, 2)).unwrap();
        assert_eq!((c.k.dim(), c.p.dim()), (4, 6));
        let c = cartan_split(sig(1, 2)).unwrap();
        assert_eq!(blades(&c.k), vec![vec![1], vec![2, 3]]);
    }

    #[test]
    fn center_g_examples() {
        assert_eq!(center_g(sig(2, 3)).basis(), &[sig(2, 3).omega()]);
        assert_eq!(center_g(sig(1, 1)).dim(), 0);
        assert_eq!(center_g(sig(3, 2)).basis(), &[sig(3, 2).omega()]);
    }

    #[test]
    fn h_and_kprime_examples() {
        let c = cartan_split(sig(3, 2)).unwrap();
        assert!(c.omega_in_k);
        assert_eq!(c.kprime.dim() + 1, c.k.dim());
        assert!(!c.kprime.contains(c.omega));
        let c = cartan_split(sig(2, 3)).unwrap();
        assert!(!c.omega_in_k && c.omega_in_g);
        assert_eq!(c.kprime, c.k);
        assert_eq!(c.h.dim() + 1, c.g.dim());
        let c = cartan_split(sig(1, 1)).unwrap();
        assert_eq!(c.h, c.g);
    }

    #[test]
    fn center_k_examples() {
        assert_eq!(blades(&center_k_blades(sig(1, 2))), vec![vec![1], vec![2, 3]]);
        assert_eq!(center_k_blades(sig(4, 4)).dim(), 0);
        assert_eq!(
            blades(&center_k_blades(sig(5, 2))),
            vec![vec![1, 2, 3, 4, 5], vec![6, 7]]
        );
    }

    #[test]
    fn centralizer_examples() {
        let c = cartan_split(sig(1, 2)).unwrap();
        let z = centralizer_oracle(&c.k).unwrap();
        assert_eq!(blades(&z.blades), vec![vec![1], vec![2, 3]]);
        assert_eq!(z.nullspace_dim, 2);

        // an abelian subspace is its own center
        let s = sig(2, 2);
        let abelian = BladeSubspace::new(s, vec![b(&[1, 2]), b(&[3, 4]), b(&[1, 2, 3, 4])]).unwrap();
        assert_eq!(centralizer_oracle(&abelian).unwrap().blades, abelian);

        let g = basis_g(sig(2, 3)).unwrap();
        assert_eq!(centralizer_oracle(&g).unwrap().blades.basis(), &[sig(2, 3).omega()]);
    }

    #[test]
    fn structure_constant_examples() {
        let s = sig(2, 1);
        let g = basis_g(s).unwrap();
        let sc = structure_constants(&g).unwrap();
        let i = g.index_of(b(&[1])).unwrap();
        let j = g.index_of(b(&[2])).unwrap();
        let e = sc.get(i, j).unwrap();
        assert_eq!((g.basis()[e.k], e.coeff), (b(&[1, 2]), 2));
        let j = g.index_of(b(&[2, 3])).unwrap();
        assert!(sc.get(i, j).is_none());

        let c = cartan_split(sig(2, 2)).unwrap();
        assert!(structure_constants(&c.k).is_ok());
        assert!(matches!(structure_constants(&c.p), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn killing_examples() {
        let s = sig(1, 1);
        let g = basis_g(s).unwrap();
        let kd = killing_diagonal(&g).unwrap();
        assert_eq!(kd.entries, vec![-8, 8, 8]);

        let s = sig(2, 3);
        let c = cartan_split(s).unwrap();
        let kd = killing_diagonal(&c.g).unwrap();
        assert_eq!(kd.entry(s.omega()), Some(0));
        let kh = killing_diagonal(&c.h).unwrap();
        assert!(kh.entries.iter().all(|&x| x != 0));
    }

    #[test]
    fn ideal_split_examples() {
        for (r, s_) in [(5, 2), (3, 4)] {
            let split = ideal_split(sig(r, s_)).unwrap();
            assert_eq!(split.dim_g, 56);
            assert_eq!((split.g1.len(), split.g2.len()), (28, 28));
            assert!(split.all_checks_pass());
        }
        assert!(matches!(ideal_split(sig(4, 3)), Err(Error::Precondition(_))));
    }

    #[test]
    fn complex_structure_examples() {
        assert!(omega_complex_structure_check(sig(4, 3)).unwrap().all_checks_pass());
        assert!(omega_complex_structure_check(sig(2, 1)).unwrap().all_checks_pass());
        assert!(matches!(omega_complex_structure_check(sig(5, 2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn dump_format() {
        let c = cartan_split(sig(1, 1)).unwrap();
        assert_eq!(c.k.dump(SpaceKind::K), "# space=K r=1 s=1 dim=1\ne1\n");
        assert_eq!("Kprime".parse::<SpaceKind>().unwrap(), SpaceKind::Kprime);
        assert!("Q".parse::<SpaceKind>().is_err());
    }
}
