use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bilocal_core::algebra::HamiltonianSpec;
use bilocal_core::fock::{FieldKind, FockContext};
use bilocal_core::highest_weight::{classify_spectrum, gram_matrix, SectorLabel};
use bilocal_core::mode_spectrum::{conformal_spectrum_check, spectrum_table};
use bilocal_core::rational::{self, to_json};
use bilocal_core::report::to_canonical_json;
use bilocal_core::verify::run_suite;
use bilocal_core::young_gauge::{
    bijection_roundtrip_check_o, bijection_roundtrip_check_u, sector_to_irrep_o, sector_to_irrep_u, weyl_dimension_u,
    YoungDiagram,
};
use bilocal_core::{Error, Rational};

const MAX_N: i64 = 4;
const MAX_M: i64 = 4;
const MAX_P: i64 = 6;

#[derive(Parser)]
#[command(name = "bilocal")]
#[command(about = "Exact checks of bilocal sectors on truncated Fock spaces")]
#[command(version)]
struct Cli {
    /// Field kind
    #[arg(long, global = true, value_enum, default_value_t = Kind::Complex)]
    kind: Kind,

    /// Number of flavors
    #[arg(long = "N", global = true, default_value_t = 1, allow_negative_numbers = true)]
    n: i64,

    /// Number of modes
    #[arg(long = "M", global = true, default_value_t = 2, allow_negative_numbers = true)]
    m: i64,

    /// Particle cap
    #[arg(long = "P", global = true, default_value_t = 4, allow_negative_numbers = true)]
    p: i64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Accepted for scripts; every computation is deterministic
    #[arg(long, global = true)]
    seed_free: bool,

    /// Lift the default bounds N ≤ 4, M ≤ 4, P ≤ 6
    #[arg(long, global = true)]
    unsafe_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Complex,
    Real,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    #[value(name = "U", alias = "u")]
    U,
    #[value(name = "O", alias = "o")]
    O,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant suite on one Fock context
    Verify {
        /// Particle-number headroom kept free of truncation effects
        #[arg(long, default_value_t = 2)]
        margin: u32,

        /// Realize the Cartan generators without their N/2 shift
        #[arg(long)]
        inject_fault: bool,
    },

    /// List highest-weight sectors up to an energy cutoff
    Classify {
        /// Energy cutoff (integer or p/q)
        #[arg(long)]
        cutoff: String,

        /// One-particle energies, comma separated; defaults to 1, 2, …, M+1
        #[arg(long)]
        energies: Option<String>,
    },

    /// Gram matrix of a level over a sector ground state
    Gram {
        /// Rows of Y⁺ (complex), comma separated
        #[arg(long, default_value = "")]
        plus: String,

        /// Rows of Y⁻ (complex), comma separated
        #[arg(long, default_value = "")]
        minus: String,

        /// Rows of Y (real), comma separated
        #[arg(long, default_value = "")]
        y: String,

        #[arg(long, default_value_t = 1)]
        level: u32,
    },

    /// Sector to gauge-irrep dictionary
    MapIrreps {
        #[arg(long, value_enum)]
        group: Group,

        /// Largest total box count
        #[arg(long, default_value_t = 2)]
        cap: u32,
    },

    /// Spherical-harmonic mode table
    Spectrum {
        /// Spacetime dimension (even, at least 4)
        #[arg(long = "D", default_value_t = 4)]
        d: u32,

        /// Number of modes
        #[arg(long, default_value_t = 14)]
        count: usize,

        /// Also check the Fock Hamiltonian on M = count modes
        #[arg(long)]
        check: bool,
    },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Output {
    passed: bool,
    json: Value,
    table: String,
}

fn field(kind: Kind) -> FieldKind {
    match kind {
        Kind::Complex => FieldKind::Complex,
        Kind::Real => FieldKind::Real,
    }
}

fn context(cli: &Cli) -> Result<FockContext, Failure> {
    context_with_modes(cli, cli.m)
}

fn context_with_modes(cli: &Cli, m: i64) -> Result<FockContext, Failure> {
    for (name, v, max) in [("N", cli.n, MAX_N), ("M", m, MAX_M), ("P", cli.p, MAX_P)] {
        if v < 0 {
            return Err(Failure::Usage(format!("--{name} must be non-negative, got {v}")));
        }
        if v > max && !cli.unsafe_large {
            return Err(Failure::Usage(format!("--{name} {v} exceeds the default bound {max}; pass --unsafe-large")));
        }
    }
    if m == 0 {
        return Err(Failure::Usage("--M must be at least 1".into()));
    }
    Ok(FockContext::new(field(cli.kind), cli.n as u32, m as u32, cli.p as u32)?)
}

fn parse_rows(s: &str) -> Result<YoungDiagram, Failure> {
    let rows: Vec<u32> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("bad row length {t:?}"))))
        .collect::<Result<_, _>>()?;
    Ok(YoungDiagram::new(rows)?)
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    rational::parse(s).ok_or_else(|| Failure::Usage(format!("not a rational number: {s:?}")))
}

fn config_json(cli: &Cli) -> Value {
    json!({
        "kind": field(cli.kind),
        "N": cli.n,
        "M": cli.m,
        "P": cli.p,
    })
}

/// Left-aligned columns separated by two spaces.
fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<String>, out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.iter().map(|s| s.to_string()).collect(), &mut out);
    for r in rows {
        line(r.clone(), &mut out);
    }
    out
}

fn cmd_verify(cli: &Cli, margin: u32, inject_fault: bool) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let report = run_suite(&ctx, margin, inject_fault)?;
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), if c.passed { "PASS" } else { "FAIL" }.into(), c.checked.to_string()])
        .collect();
    Ok(Output {
        passed: report.passed,
        json: json!({"command": "verify", "config": config_json(cli), "passed": report.passed, "result": report}),
        table: render_table(&["check", "status", "checked"], &rows),
    })
}

fn gauge_label(s: &SectorLabel) -> Result<(Value, String, Option<u64>), Failure> {
    Ok(match s.kind() {
        FieldKind::Complex => {
            let irr = sector_to_irrep_u(s)?;
            let dim = weyl_dimension_u(&irr, s.n())?;
            (json!({"group": "U", "label": irr, "dimension": dim}), irr.to_string(), Some(dim))
        }
        FieldKind::Real => {
            let o = sector_to_irrep_o(s)?;
            let text = match &o.equivalent {
                Some(e) => format!("{} = {}", o.canonical, e),
                None => o.canonical.to_string(),
            };
            (json!({"group": "O", "label": o}), text, None)
        }
    })
}

fn cmd_classify(cli: &Cli, cutoff: &str, energies: Option<&str>) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let cutoff = parse_rational(cutoff)?;
    let eps: Vec<Rational> = match energies {
        Some(list) => list.split(',').map(|t| parse_rational(t.trim())).collect::<Result<_, _>>()?,
        None => (1..=ctx.m as i64 + 1).map(rational::int).collect(),
    };
    let spec = HamiltonianSpec::canonical(&ctx, eps)?;
    let entries = classify_spectrum(&ctx, &spec, &cutoff)?;
    let mut passed = true;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    for e in &entries {
        let (gauge, text, dim) = gauge_label(&e.sector)?;
        let dim_ok = dim.is_none_or(|d| d == e.multiplicity as u64);
        passed &= e.in_bound() && dim_ok;
        let mut v = e.to_json();
        let obj = v.as_object_mut().expect("sector entry is an object");
        obj.insert("gauge".into(), gauge);
        if dim.is_some() {
            obj.insert("multiplicity_matches_dimension".into(), json!(dim_ok));
        }
        items.push(v);
        rows.push(vec![
            e.sector.to_string(),
            rational::to_string(&e.energy),
            e.multiplicity.to_string(),
            text,
            if e.in_bound() { "yes" } else { "NO" }.into(),
        ]);
    }
    Ok(Output {
        passed,
        json: json!({
            "command": "classify",
            "config": config_json(cli),
            "cutoff": to_json(&cutoff),
            "energies": rational::vec_to_json(&spec.energies),
            "passed": passed,
            "result": {"count": entries.len(), "sectors": items},
        }),
        table: render_table(&["sector", "energy", "mult", "gauge", "in_bound"], &rows),
    })
}

fn cmd_gram(cli: &Cli, plus: &str, minus: &str, y: &str, level: u32) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let sector = match ctx.kind {
        FieldKind::Complex => SectorLabel::complex(parse_rows(plus)?, parse_rows(minus)?, ctx.n),
        FieldKind::Real => SectorLabel::real(parse_rows(y)?, ctx.n),
    };
    sector.check_bound()?;
    let g = gram_matrix(&ctx, &sector, level)?;
    let passed = g.minors_nonnegative && g.positive_semidefinite;
    let cell = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let mut rows: Vec<Vec<String>> = g
        .vectors
        .iter()
        .zip(&g.matrix)
        .map(|(label, r)| std::iter::once(label.clone()).chain(r.iter().map(cell)).collect())
        .collect();
    rows.push(vec![format!("rank {}, psd {}", g.rank, g.positive_semidefinite)]);
    let header: Vec<String> = std::iter::once("vector".to_string()).chain((1..=g.vectors.len()).map(|i| i.to_string())).collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let table = render_table(&header, &rows);
    Ok(Output {
        passed,
        json: json!({"command": "gram", "config": config_json(cli), "passed": passed, "result": g}),
        table,
    })
}

fn cmd_map_irreps(cli: &Cli, group: Group, cap: u32) -> Result<Output, Failure> {
    if cli.n < 0 {
        return Err(Failure::Usage(format!("--N must be non-negative, got {}", cli.n)));
    }
    if cli.n > MAX_N && !cli.unsafe_large {
        return Err(Failure::Usage(format!("--N {} exceeds the default bound {MAX_N}; pass --unsafe-large", cli.n)));
    }
    let n = cli.n as u32;
    let report = match group {
        Group::U => bijection_roundtrip_check_u(n, cap),
        Group::O => bijection_roundtrip_check_o(n, cap),
    };
    let cell = |v: &Value| v.to_string();
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| vec![cell(&r.sector), cell(&r.label), r.equivalent.as_ref().map(cell).unwrap_or_default()])
        .collect();
    Ok(Output {
        passed: report.passed,
        json: json!({"command": "map-irreps", "N": n, "cap": cap, "passed": report.passed, "result": report}),
        table: render_table(&["sector", "label", "equivalent"], &rows),
    })
}

fn cmd_spectrum(cli: &Cli, d: u32, count: usize, check: bool) -> Result<Output, Failure> {
    let table = spectrum_table(d, count)?;
    let rows: Vec<Vec<String>> = table
        .iter()
        .map(|r| vec![r.ell.to_string(), r.h.to_string(), rational::to_string(&r.energy), r.cumulative.to_string()])
        .collect();
    let mut passed = true;
    let mut result = json!({"D": d, "count": count, "rows": table});
    if check {
        let ctx = context_with_modes(cli, count as i64)?;
        let r = conformal_spectrum_check(&ctx, d, count)?;
        passed = r.passed;
        result["check"] = serde_json::to_value(&r).expect("report serializes");
    }
    Ok(Output {
        passed,
        json: json!({"command": "spectrum", "passed": passed, "result": result}),
        table: render_table(&["ell", "h", "energy", "cumulative"], &rows),
    })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Verify { margin, inject_fault } => cmd_verify(cli, *margin, *inject_fault),
        Command::Classify { cutoff, energies } => cmd_classify(cli, cutoff, energies.as_deref()),
        Command::Gram { plus, minus, y, level } => cmd_gram(cli, plus, minus, y, *level),
        Command::MapIrreps { group, cap } => cmd_map_irreps(cli, *group, *cap),
        Command::Spectrum { d, count, check } => cmd_spectrum(cli, *d, *count, *check),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => print!("{}", to_canonical_json(&out.json)),
                Format::Table => print!("{}", out.table),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
