use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quiver_exact::exactlin::FieldSpec;
use quiver_exact_cli::{
    analyze, k0, load, reconstruct, render_dot, CliError, Options, Payload, Report, Session,
};

/// Exact structures on proj Γ for a quiver algebra Γ given in the
/// presentation DSL.
#[derive(Parser, Debug)]
#[command(name = "quiver-exact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Override the field declared in the file: `Q` or a prime such as `7` or `F7`.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Depth of projective resolutions.
    #[arg(long, global = true, default_value_t = 20)]
    max_deg: usize,
    /// Number of Ext degrees checked past a bound.
    #[arg(long, global = true, default_value_t = 10)]
    check_span: usize,
    /// Random samples for the Ex=AR check.
    #[arg(long, global = true, default_value_t = 50)]
    samples: usize,
    /// Seed for all sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Dotted arrows of the structure: orbit names (A,B), arrow indices (0,2), `all` or `split`.
    #[arg(long, global = true)]
    dotted: Option<String>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print the translation quiver as Graphviz DOT instead of the report.
    #[arg(long, global = true)]
    dot: bool,
    /// Report counts without listing every structure.
    #[arg(long, global = true)]
    count_only: bool,
    /// Check injective dimensions, the cotilting module and orthogonality.
    #[arg(long, global = true)]
    verify_ig: bool,
    /// Exit successfully when a verdict is only undetermined.
    #[arg(long, global = true)]
    allow_undetermined: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// 2-regular simples, dotted arrows, orbits and structure counts.
    Analyze { file: PathBuf },
    /// Quiver and relations of the endomorphism algebra of the projective objects.
    Reconstruct { file: PathBuf },
    /// Grothendieck group from AR relations, with sampled Ex=AR checks.
    K0 { file: PathBuf },
    /// Graphviz DOT of the translation quiver (all dotted arrows by default).
    Dot { file: PathBuf },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let t = s.trim();
    if t == "Q" || t == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .trim_start_matches(['F', 'f'])
        .trim_start_matches(['_', ' ']);
    let p: u64 = digits
        .parse()
        .map_err(|_| format!("`{s}` is neither Q nor a prime"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

fn run(cli: Cli, argv: Vec<String>) -> Result<String, CliError> {
    let g = &cli.global;
    let opts = Options {
        field: g.field,
        max_deg: g.max_deg,
        check_span: g.check_span,
        samples: g.samples,
        seed: g.seed,
        dotted: g.dotted.clone(),
        count_only: g.count_only,
        verify_ig: g.verify_ig,
        allow_undetermined: g.allow_undetermined,
    };
    let (file, default_dotted) = match &cli.command {
        Command::Dot { file } => (file, "all"),
        Command::Analyze { file } | Command::Reconstruct { file } | Command::K0 { file } => {
            (file, "split")
        }
    };
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Parse(format!("{}: {e}", file.display())))?;
    let session = load(&text, &opts)?;
    let dot_only = g.dot || matches!(cli.command, Command::Dot { .. });
    if dot_only {
        let dot = render_dot(&session.selection(&opts, default_dotted)?);
        if !g.json {
            return Ok(dot);
        }
        return emit(&argv, true, &session, Payload::Dot { dot }, String::new());
    }
    match cli.command {
        Command::Analyze { .. } => {
            let r = analyze(&session, &opts)?;
            let text = if g.count_only {
                format!("{}\n", r.summary())
            } else {
                r.to_string()
            };
            emit(&argv, g.json, &session, Payload::Analyze(r), text)
        }
        Command::Reconstruct { .. } => {
            let r = reconstruct(&session, &opts)?;
            let ok = r.verified(g.allow_undetermined);
            let out = emit(
                &argv,
                g.json,
                &session,
                Payload::Reconstruct(r.clone()),
                r.to_string(),
            )?;
            if ok {
                Ok(out)
            } else {
                print!("{out}");
                Err(CliError::Failed(
                    "Iwanaga-Gorenstein verification did not pass".into(),
                ))
            }
        }
        Command::K0 { .. } => {
            let r = k0(&session, &opts)?;
            let ok = r.passed == r.samples && r.cross_checked;
            let out = emit(
                &argv,
                g.json,
                &session,
                Payload::K0(r.clone()),
                r.to_string(),
            )?;
            if ok {
                Ok(out)
            } else {
                print!("{out}");
                Err(CliError::Failed(
                    "Ex=AR sampling found relations outside the AR lattice".into(),
                ))
            }
        }
        Command::Dot { .. } => unreachable!("handled above"),
    }
}

fn emit(
    argv: &[String],
    json: bool,
    session: &Session,
    payload: Payload,
    text: String,
) -> Result<String, CliError> {
    if json {
        let report = Report {
            command: argv.to_vec(),
            field: session.field_name(),
            payload,
        };
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        Ok(s)
    } else {
        Ok(text)
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli, argv.into_iter().skip(1).collect()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("quiver-exact: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
