//! Sweeps that compare every closed-form statement with brute force.
//!
//! Each suite returns how many cases it checked and a description of each
//! failure. Signatures are processed in parallel and results are collected
//! in a fixed order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::blade::{blade_mul, commutes, Blade, Signature};
use crate::classify::{classify, complexified_h, match_pairs, table_formula, CompactDescriptor};
use crate::dims::{dim_report, trig};
use crate::error::{Error, Result};
use crate::lie::{
    cartan_split, center_k_blades, centralizer_oracle, ideal_split, killing_diagonal,
    omega_complex_structure_check,
};

pub const VERIFY_MIN_N: u32 = 2;
pub const VERIFY_MAX_N: u32 = 12;

pub const COMMUTATION_MAX_N: u32 = 7;
pub const CENTERS_MAX_N: u32 = 9;
pub const KILLING_SWEEP_MAX_N: u32 = 9;
pub const CLASSIFICATION_MAX_N: u64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    Dims,
    Commutation,
    Centers,
    Killing,
    IdealSplit,
    Classification,
}

impl Section {
    pub const ALL: [Section; 6] = [
        Section::Dims,
        Section::Commutation,
        Section::Centers,
        Section::Killing,
        Section::IdealSplit,
        Section::Classification,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Dims => "dims",
            Section::Commutation => "commutation",
            Section::Centers => "centers",
            Section::Killing => "killing",
            Section::IdealSplit => "ideal-split",
            Section::Classification => "classification",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Section::ALL
            .into_iter()
            .find(|sec| sec.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown section `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub section: Section,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All `(r, s)` with `n = r + s` in `1..=max_n` and `s >= min_s`.
pub fn signatures(max_n: u32, min_s: u32) -> Vec<Signature> {
    (1..=max_n)
        .flat_map(|n| (min_s..=n).map(move |s| Signature::new(n - s, s).unwrap()))
        .collect()
}

/// Runs `check` per signature in parallel; each call yields a count and
/// failures, concatenated in input order.
fn sweep<F>(section: Section, sigs: &[Signature], check: F) -> SuiteResult
where
    F: Fn(Signature) -> (u64, Vec<String>) + Sync,
{
    let parts: Vec<(u64, Vec<String>)> = sigs.par_iter().map(|&sig| check(sig)).collect();
    let mut out = SuiteResult { section, checked: 0, failures: Vec::new() };
    for (c, f) in parts {
        out.checked += c;
        out.failures.extend(f);
    }
    out
}

fn fail(sig: Signature, what: impl fmt::Display) -> String {
    format!("{sig}: {what}")
}

/// Enumerated subspace sizes against the uniform sums, and the case
/// formulas against the uniform sums on their domains.
pub fn check_dims(max_n: u32) -> SuiteResult {
    sweep(Section::Dims, &signatures(max_n, 1), |sig| {
        let mut failures = Vec::new();
        let (r, s) = (u64::from(sig.r()), u64::from(sig.s()));
        let rep = match dim_report(r, s) {
            Ok(rep) => rep,
            Err(e) => return (1, vec![fail(sig, e)]),
        };
        let data = match cartan_split(sig) {
            Ok(d) => d,
            Err(e) => return (1, vec![fail(sig, e)]),
        };
        let zk = center_k_blades(sig).dim();
        let zkprime = center_k_blades(sig).filter(|b| data.kprime.contains(b)).dim();
        let pairs = [
            ("G", data.g.dim(), &rep.g),
            ("K", data.k.dim(), &rep.k),
            ("P", data.p.dim(), &rep.p),
            ("H", data.h.dim(), &rep.h),
            ("Kprime", data.kprime.dim(), &rep.kprime),
            ("Z_K", zk, &rep.z_k),
            ("Z_Kprime", zkprime, &rep.z_kprime),
        ];
        let mut checked = 0;
        for (name, counted, formula) in pairs {
            checked += 1;
            if BigInt::from(counted) != *formula {
                failures.push(fail(sig, format!("{name}: enumerated {counted}, formula {formula}")));
            }
        }
        let closed = [
            ("G (closed form)", Some(trig::dim_g(i64::from(sig.n()))), &rep.g),
            ("P (closed form)", trig::dim_p(r as i64, s as i64), &rep.p),
            ("K (closed form)", trig::dim_k(r as i64, s as i64), &rep.k),
        ];
        for (name, value, expected) in closed {
            match value {
                None => {}
                Some(Ok(v)) => {
                    checked += 1;
                    if v != *expected {
                        failures.push(fail(sig, format!("{name}: {v}, expected {expected}")));
                    }
                }
                Some(Err(e)) => failures.push(fail(sig, format!("{name}: {e}"))),
            }
        }
        (checked, failures)
    })
}

/// The closed commutation predicate against comparing `ab` with `ba`, for
/// all blade pairs.
pub fn check_commutation(max_n: u32) -> SuiteResult {
    let max_n = max_n.min(COMMUTATION_MAX_N);
    sweep(Section::Commutation, &signatures(max_n, 0), |sig| {
        let full = 1u64 << sig.n();
        let mut failures = Vec::new();
        for a in 0..full {
            for b in 0..full {
                let (a, b) = (Blade(a), Blade(b));
                let two_sided = blade_mul(a, b, sig).unwrap() == blade_mul(b, a, sig).unwrap();
                if two_sided != commutes(a, b) && failures.len() < 8 {
                    failures.push(fail(sig, format!("commutation of {a:?} and {b:?}")));
                }
            }
        }
        (full * full, failures)
    })
}

/// The three center clauses against the brute-force centralizer of `K`.
pub fn check_centers(max_n: u32) -> SuiteResult {
    let max_n = max_n.min(CENTERS_MAX_N);
    sweep(Section::Centers, &signatures(max_n, 1), |sig| {
        let predicted = center_k_blades(sig);
        let oracle = match cartan_split(sig).and_then(|d| centralizer_oracle(&d.k)) {
            Ok(o) => o,
            Err(e) => return (1, vec![fail(sig, e)]),
        };
        let mut failures = Vec::new();
        if predicted != oracle.blades {
            failures.push(fail(
                sig,
                format!("center clauses give {:?}, centralizer {:?}", predicted.basis(), oracle.blades.basis()),
            ));
        }
        if oracle.nullspace_dim != oracle.blades.dim() {
            failures.push(fail(
                sig,
                format!("null space {} vs {} central blades", oracle.nullspace_dim, oracle.blades.dim()),
            ));
        }
        (1, failures)
    })
}

/// Sign pattern of the Killing form of `G`: negative on `K'`, positive on
/// the rest of `H`, zero on `ω` when it is central.
pub fn check_killing(max_n: u32) -> SuiteResult {
    let max_n = max_n.min(KILLING_SWEEP_MAX_N);
    sweep(Section::Killing, &signatures(max_n, 1), |sig| {
        let data = match cartan_split(sig) {
            Ok(d) => d,
            Err(e) => return (1, vec![fail(sig, e)]),
        };
        let kd = match killing_diagonal(&data.g) {
            Ok(kd) => kd,
            Err(e) => return (1, vec![fail(sig, e)]),
        };
        let mut failures = Vec::new();
        for (&b, &v) in data.g.basis().iter().zip(&kd.entries) {
            let ok = if !data.h.contains(b) {
                v == 0
            } else if data.kprime.contains(b) {
                v < 0
            } else {
                v > 0
            };
            if !ok {
                failures.push(fail(sig, format!("B({0},{0}) = {v}", b.to_text(sig.n()))));
            }
        }
        (data.g.dim() as u64, failures)
    })
}

/// For `n = 3 (mod 4)`: the ideal split when `s` is even, the complex
/// structure of `ω` when `s` is odd.
pub fn check_ideal_split(max_n: u32) -> SuiteResult {
    let sigs: Vec<Signature> =
        signatures(max_n, 0).into_iter().filter(|sig| sig.n() % 4 == 3).collect();
    sweep(Section::IdealSplit, &sigs, |sig| {
        let outcome = if sig.s() % 2 == 0 {
            ideal_split(sig).map(|split| {
                let half = split.dim_g / 2;
                let sizes_ok = split.g1.len() == half && split.g2.len() == half;
                (split.all_checks_pass() && sizes_ok, format!("{split:?}"))
            })
        } else {
            omega_complex_structure_check(sig).map(|rep| (rep.all_checks_pass(), format!("{rep:?}")))
        };
        match outcome {
            Ok((true, _)) => (1, vec![]),
            Ok((false, detail)) => (1, vec![fail(sig, detail)]),
            Err(e) => (1, vec![fail(sig, e)]),
        }
    })
}

/// Classification inside `r, s >= 3`, `n <= 40`: unique match, all three
/// consistency checks, and agreement with the closed-form table.
pub fn check_classification() -> SuiteResult {
    let pairs: Vec<(u64, u64)> = (6..=CLASSIFICATION_MAX_N)
        .flat_map(|n| (3..=n - 3).map(move |s| (n - s, s)))
        .collect();
    let parts: Vec<Option<String>> = pairs
        .par_iter()
        .map(|&(r, s)| match classify(r, s, false) {
            Err(e) => Some(format!("({r},{s}): {e}")),
            Ok(rep) => {
                let n = r + s;
                let table = table_formula(n % 8, s % 4, n / 8);
                if table.as_ref() != Some(&rep.algebra) {
                    return Some(format!(
                        "({r},{s}): matched {}, table has {:?}",
                        rep.algebra,
                        table.map(|t| t.to_string())
                    ));
                }
                match complexified_h(n) {
                    CompactDescriptor::Pair(u) if s % 2 == 0 => {
                        let pairs = match_pairs(&u, &rep.dims.kprime, &rep.dims.z_kprime);
                        let labels: Vec<String> =
                            pairs.iter().map(|(a, b)| format!("{} + {}", a.label(), b.label())).collect();
                        (labels != [rep.involutions.join(" + ")])
                            .then(|| format!("({r},{s}): exhaustive pair search gives {labels:?}"))
                    }
                    _ => None,
                }
            }
        })
        .collect();
    SuiteResult {
        section: Section::Classification,
        checked: pairs.len() as u64,
        failures: parts.into_iter().flatten().collect(),
    }
}

/// Runs the selected sections in their canonical order.
pub fn run(max_n: u32, sections: &[Section]) -> Result<Vec<SuiteResult>> {
    if !(VERIFY_MIN_N..=VERIFY_MAX_N).contains(&max_n) {
        return Err(Error::Precondition(format!(
            "max_n must be between {VERIFY_MIN_N} and {VERIFY_MAX_N}, got {max_n}"
        )));
    }
    let mut selected: Vec<Section> = sections.to_vec();
    selected.sort();
    selected.dedup();
    Ok(selected
        .into_iter()
        .map(|sec| match sec {
            Section::Dims => check_dims(max_n),
            Section::Commutation => check_commutation(max_n),
            Section::Centers => check_centers(max_n),
            Section::Killing => check_killing(max_n),
            Section::IdealSplit => check_ideal_split(max_n),
            Section::Classification => check_classification(),
        })
        .collect())
}
