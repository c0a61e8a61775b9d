//! `g12`: command-line front end for the G12 category O toolkit.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use g12_core::amatrix::build_a_matrix;
use g12_core::arith::{format_rational, parse_rational, ExactMatrix, Rational};
use g12_core::category::{
    aspherical_scan, aspherical_witnesses, blocks, category_report, decomposition_matrix_at, scaling_permutation,
    sign_flip, ASPHERICAL_SERIES_LEN, DEFAULT_DEPTH,
};
use g12_core::chars::{sym_power_decompose, GrothVector};
use g12_core::cherednik::{lowest_weight, ModuleContext};
use g12_core::hecke::is_semisimple;
use g12_core::{Error, IrrepLabel};

/// Environment variable naming a directory of cached form matrices.
const CACHE_ENV: &str = "G12_CACHE_DIR";

const SCAN_CANDIDATES: [&str; 10] = ["1/4", "1/2", "1/3", "2/3", "3/4", "5/4", "1/12", "5/12", "7/12", "11/12"];

#[derive(Parser, Debug)]
#[command(name = "g12", version, about = "Exact computations in category O for the rational Cherednik algebra of G12")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
struct CArg {
    /// Parameter as a fraction `p/q`.
    #[arg(long, value_parser = parse_c, allow_hyphen_values = true)]
    c: Rational,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Whether `O_c` is semisimple.
    Semisimple(CArg),
    /// Lowest weights `h_c(τ)`.
    Weights(CArg),
    /// Blocks of `O_c` by integral weight differences.
    Blocks(CArg),
    /// Multiplicities of each irreducible in `S^n h* ⊗ τ`.
    DecomposeSym {
        #[arg(long, value_parser = parse_label, default_value = "1+")]
        tau: IrrepLabel,
        #[arg(long)]
        degree: usize,
    },
    /// Rank of the contravariant form on `M_c(τ)` in one degree.
    Brank {
        #[command(flatten)]
        c: CArg,
        #[arg(long, value_parser = parse_label)]
        tau: IrrepLabel,
        #[arg(long)]
        degree: usize,
        /// Restrict to the isotypic part of this irreducible.
        #[arg(long, value_parser = parse_label)]
        sigma: Option<IrrepLabel>,
        /// Include the form matrix itself in the report.
        #[arg(long)]
        export_form: bool,
    },
    /// Singular vectors of `M_c(τ)` in one degree, as a representation.
    Singular {
        #[command(flatten)]
        c: CArg,
        #[arg(long, value_parser = parse_label)]
        tau: IrrepLabel,
        #[arg(long)]
        degree: usize,
    },
    /// The A-matrix and its nullspace.
    Amatrix(CArg),
    /// Full report on `O_c`.
    Category {
        #[command(flatten)]
        c: CArg,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Aspherical test at one parameter, or the scan over the standard candidates.
    Aspherical {
        #[arg(long, value_parser = parse_c, allow_hyphen_values = true)]
        c: Option<Rational>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Decomposition data at `c` obtained by transport from the base value `1/d`.
    Transport {
        #[command(flatten)]
        c: CArg,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
}

fn parse_c(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_label(s: &str) -> Result<IrrepLabel, String> {
    s.parse::<IrrepLabel>().map_err(|e| e.to_string())
}

fn groth_map(v: &GrothVector) -> BTreeMap<String, i64> {
    IrrepLabel::ALL
        .iter()
        .filter(|t| v.get(**t) != 0)
        .map(|&t| (t.name().to_string(), v.get(t)))
        .collect()
}

fn cache_path(dir: &Path, c: &Rational, tau: IrrepLabel, degree: usize) -> PathBuf {
    let key = format!("b_{}_{}_{}.json", format_rational(c).replace('/', "_"), tau.name(), degree);
    dir.join(key)
}

/// `B_n`, read from or written to the cache directory when one is configured.
fn form_matrix(ctx: &ModuleContext, degree: usize) -> g12_core::Result<ExactMatrix> {
    let dim = ctx.piece_dim(degree);
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    if let Some(dir) = &dir {
        let path = cache_path(dir, &ctx.c, ctx.tau, degree);
        if let Ok(text) = fs::read_to_string(&path) {
            let m: ExactMatrix = serde_json::from_str(&text)
                .map_err(|e| Error::inconsistency(format!("cache file {}: {e}", path.display())))?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::inconsistency(format!(
                    "cache file {} holds a {}x{} matrix, expected {dim}x{dim}",
                    path.display(),
                    m.rows(),
                    m.cols()
                )));
            }
            return Ok(m);
        }
    }
    let m = ctx.b_matrix(degree)?.matrix;
    if let Some(dir) = &dir {
        let path = cache_path(dir, &ctx.c, ctx.tau, degree);
        let text = serde_json::to_string(&m).expect("matrix serializes");
        fs::create_dir_all(dir)
            .and_then(|_| fs::write(&path, text))
            .map_err(|e| Error::domain(format!("cannot write cache file {}: {e}", path.display())))?;
    }
    Ok(m)
}

fn run(verb: &Verb) -> g12_core::Result<Value> {
    Ok(match verb {
        Verb::Semisimple(CArg { c }) => json!({ "semisimple": is_semisimple(c) }),
        Verb::Weights(CArg { c }) => {
            let w: BTreeMap<String, String> = IrrepLabel::ALL
                .iter()
                .map(|&t| (t.name().to_string(), format_rational(&lowest_weight(t, c))))
                .collect();
            json!({ "c": format_rational(c), "lowest_weights": w })
        }
        Verb::Blocks(CArg { c }) => json!({ "c": format_rational(c), "blocks": json!(&blocks(c)) }),
        Verb::DecomposeSym { tau, degree } => {
            let v = sym_power_decompose(*degree, *tau);
            json!({ "tau": tau.name(), "degree": degree, "dim": v.dimension(), "multiplicities": groth_map(&v) })
        }
        Verb::Brank { c, tau, degree, sigma, export_form } => {
            let ctx = ModuleContext::new(*tau, c.c.clone());
            let dim = ctx.piece_dim(*degree);
            let b = form_matrix(&ctx, *degree)?;
            let mut out = match sigma {
                None => json!({ "rank": b.rank(), "dim": dim }),
                Some(s) => {
                    let p = ctx.isotypic_projector(*s, *degree);
                    let rank = p.transpose().mul(&b).rank();
                    if rank % s.dim() != 0 {
                        return Err(Error::inconsistency(format!("isotypic rank {rank} is not a multiple of dim {s}")));
                    }
                    let isotypic_dim = p.rank();
                    json!({ "rank": rank, "dim": isotypic_dim, "sigma": s.name() })
                }
            };
            if *export_form {
                out["form"] = json!(&b);
            }
            out
        }
        Verb::Singular { c, tau, degree } => {
            let ctx = ModuleContext::new(*tau, c.c.clone());
            let v = ctx.singular_subspace(*degree).decompose()?;
            json!({
                "c": format_rational(&c.c),
                "tau": tau.name(),
                "degree": degree,
                "weight": format_rational(&(lowest_weight(*tau, &c.c) + Rational::from_integer((*degree as i64).into()))),
                "dim": v.dimension(),
                "multiplicities": groth_map(&v),
            })
        }
        Verb::Amatrix(CArg { c }) => json!(&build_a_matrix(c).report()),
        Verb::Category { c, depth } => json!(&category_report(&c.c, *depth)?),
        Verb::Aspherical { c: Some(c), depth } => {
            let dm = decomposition_matrix_at(c, *depth)?;
            let w = aspherical_witnesses(&dm, ASPHERICAL_SERIES_LEN)?;
            json!({ "c": format_rational(c), "depth": depth, "aspherical": !w.is_empty(), "witnesses": json!(&w) })
        }
        Verb::Aspherical { c: None, depth } => {
            let mut candidates = Vec::new();
            for s in SCAN_CANDIDATES {
                let c = parse_rational(s)?;
                candidates.push(-c.clone());
                candidates.push(c);
            }
            if *depth != DEFAULT_DEPTH {
                return Err(Error::domain(format!("the scan runs at depth {DEFAULT_DEPTH}; pass --c to test one value at another depth")));
            }
            let found = aspherical_scan(&candidates, ASPHERICAL_SERIES_LEN)?;
            let mut sorted = candidates.clone();
            sorted.sort();
            json!({
                "depth": DEFAULT_DEPTH,
                "candidates": sorted.iter().map(format_rational).collect::<Vec<_>>(),
                "aspherical": found.iter().map(format_rational).collect::<Vec<_>>(),
            })
        }
        Verb::Transport { c, depth } => {
            let c = &c.c;
            let dm = decomposition_matrix_at(c, *depth)?;
            let d = c.denom().to_string().parse::<u32>().ok();
            let r = c.numer().magnitude().to_string().parse::<u32>().ok();
            let mut maps = Vec::new();
            if !is_semisimple(c) {
                if let (Some(d), Some(r)) = (d, r) {
                    maps.push(json!(&scaling_permutation(d, r)?));
                }
                if c < &Rational::from_integer(0.into()) {
                    maps.push(json!(&sign_flip()));
                }
            }
            json!({
                "c": format_rational(c),
                "depth": depth,
                "semisimple": is_semisimple(c),
                "maps": maps,
                "n": json!(&dm.n),
                "n_hat": json!(&dm.n_hat),
                "l_in_m": IrrepLabel::ALL.iter()
                    .map(|&t| (t.name().to_string(), dm.l_in_m(t).format_terms("M", &IrrepLabel::ALL)))
                    .collect::<BTreeMap<_, _>>(),
            })
        }
    })
}

/// Indented `key: value` rendering of a JSON report.
fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_scalar_like(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(x, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_scalar_like(x) {
                    out.push_str(&format!("{pad}- {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(x, indent + 1, out);
                }
            }
        }
        x => out.push_str(&format!("{pad}{}\n", scalar(x))),
    }
}

/// Scalars and arrays of scalars fit on one line.
fn is_scalar_like(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.is_empty(),
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let report = match run(&cli.verb) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_inconsistency() { 2 } else { 1 });
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("json") + "\n",
        Format::Text => {
            let mut s = String::new();
            render_text(&report, 0, &mut s);
            s
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write report: {e}");
            ExitCode::from(1)
        }
    }
}
