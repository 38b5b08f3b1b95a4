//! Command-line front end for the `clifford-lie` crate.
//!
//! Exit status: 0 on success, 1 when a verification or consistency check
//! fails, 2 for usage errors (bad flags, out-of-range parameters, parse
//! errors).

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clifford_lie::classify::{classify, emit_table, ClassificationReport, Status};
use clifford_lie::dims::{dim_report, DimReport};
use clifford_lie::lie::{cartan_split, center_k_blades, SpaceKind};
use clifford_lie::verify::{self, Section};
use clifford_lie::{parse_mv, Error, Signature};

#[derive(Parser)]
#[command(name = "clifford-lie", version, about = "Isometry Lie algebras of Clifford algebras Cl(r,s)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of G, K, P, H, K' and the centers of K and K'.
    Dims {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
        /// Shorthand for `--format json`.
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Name the semisimple ideal as a real Lie algebra.
    Classify {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
        /// Allow r < 3 or s < 3 by reading the closed-form table.
        #[arg(long)]
        extrapolate: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The 8 x 4 table of names for rows r+s = 8k+a.
    Table {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Fill cells below r+s = 6 from the closed-form table.
        #[arg(long)]
        extrapolate: bool,
    },
    /// List the blade basis of a subspace.
    Basis {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        /// One of G, K, P, H, Kprime, ZK.
        #[arg(long)]
        space: SpaceKind,
    },
    /// Evaluate the bracket [x, y] = xy - yx.
    Bracket {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Run the invariant sweeps.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// Comma-separated subset of: dims, commutation, centers, killing,
        /// ideal-split, classification.
        #[arg(long, value_delimiter = ',')]
        sections: Vec<Section>,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSignature { .. }
            | Error::IndexOutOfRange { .. }
            | Error::BladeOutOfRange { .. }
            | Error::SignatureMismatch { .. }
            | Error::TooLarge { .. }
            | Error::Parse { .. }
            | Error::Precondition(_)
            | Error::OutsideProvedRange { .. }
            | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            Error::NotClosed { .. } | Error::Classification(_) | Error::Inconsistent(_) => {
                Failure::Check(e.to_string())
            }
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialise");
    text.push('\n');
    text
}

fn render_dims(d: &DimReport, format: Format) -> String {
    let fields = [
        ("G", &d.g),
        ("K", &d.k),
        ("P", &d.p),
        ("H", &d.h),
        ("Kprime", &d.kprime),
        ("Z_K", &d.z_k),
        ("Z_Kprime", &d.z_kprime),
    ];
    match format {
        Format::Json => json(d),
        Format::Csv => {
            let head: Vec<&str> = fields.iter().map(|f| f.0).collect();
            let vals: Vec<String> = fields.iter().map(|f| f.1.to_string()).collect();
            format!("r,s,{}\n{},{},{}\n", head.join(","), d.r, d.s, vals.join(","))
        }
        Format::Text => {
            let mut out = format!("signature ({},{})\n", d.r, d.s);
            for (name, v) in fields {
                out.push_str(&format!("{name:<9}= {v}\n"));
            }
            out
        }
    }
}

fn render_classification(rep: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Json => json(rep),
        Format::Csv => format!(
            "r,s,case,algebra,status,dim,max_compact,center\n{},{},{},{},{},{},{},{}\n",
            rep.r,
            rep.s,
            rep.case,
            rep.algebra,
            serde_json::to_value(rep.status).unwrap().as_str().unwrap(),
            rep.checks.dim,
            rep.checks.max_compact,
            rep.checks.center
        ),
        Format::Text => {
            let tag = match rep.status {
                Status::Proven => "",
                Status::MatchedOutsideRange => " (matched outside r,s >= 3)",
                Status::Unproven => " (unproven: table value)",
            };
            let mut out = format!("{}{tag}\n", rep.algebra);
            out.push_str(&format!("signature  ({},{})\n", rep.r, rep.s));
            out.push_str(&format!("case       {}\n", rep.case));
            if !rep.involutions.is_empty() {
                out.push_str(&format!("involution {}\n", rep.involutions.join(" + ")));
            }
            out.push_str(&format!(
                "dims       H={} Kprime={} Z_Kprime={}\n",
                rep.dims.h, rep.dims.kprime, rep.dims.z_kprime
            ));
            out.push_str(&format!(
                "checks     dim={} max_compact={} center={}\n",
                rep.checks.dim, rep.checks.max_compact, rep.checks.center
            ));
            out
        }
    }
}

fn run(cmd: Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Dims { r, s, json: as_json, format } => {
            let format = if as_json { Format::Json } else { format };
            out.push_str(&render_dims(&dim_report(r, s)?, format));
        }
        Command::Classify { r, s, extrapolate, json: as_json, format } => {
            let format = if as_json { Format::Json } else { format };
            let rep = classify(r, s, extrapolate)?;
            out.push_str(&render_classification(&rep, format));
            if !rep.checks.all() {
                return Err(Failure::Check(format!("consistency checks failed for {}", rep.algebra)));
            }
        }
        Command::Table { k, format, extrapolate } => {
            let table = emit_table(k, extrapolate)?;
            out.push_str(&match format {
                Format::Text => table.to_text(),
                Format::Csv => table.to_csv(),
                Format::Json => json(&table),
            });
        }
        Command::Basis { r, s, space } => {
            let sig = Signature::new(r, s)?;
            let sub = match space {
                SpaceKind::ZK => {
                    sig.require_exhaustive(clifford_lie::blade::MAX_EXHAUSTIVE_N)?;
                    center_k_blades(sig)
                }
                kind => cartan_split(sig)?.space(kind),
            };
            out.push_str(&sub.dump(space));
        }
        Command::Bracket { r, s, x, y } => {
            let sig = Signature::new(r, s)?;
            let x = parse_mv(&x, sig)?;
            let y = parse_mv(&y, sig)?;
            out.push_str(&format!("{}\n", x.bracket(&y)?));
        }
        Command::Verify { max_n, sections } => {
            let sections = if sections.is_empty() { Section::ALL.to_vec() } else { sections };
            let results = verify::run(max_n, &sections)?;
            let mut failed = Vec::new();
            for res in &results {
                let verdict = if res.passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{verdict} {:<15} checked={} failures={}\n",
                    res.section.name(),
                    res.checked,
                    res.failures.len()
                ));
                for f in res.failures.iter().take(10) {
                    out.push_str(&format!("    {f}\n"));
                }
                if !res.passed() {
                    failed.push(res.section.name());
                }
            }
            if !failed.is_empty() {
                return Err(Failure::Check(format!("failed sections: {}", failed.join(", "))));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
