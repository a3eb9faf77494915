use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symplectic_hecke::algebra::{PrimeLaurent, VSeries, XPoly};
use symplectic_hecke::render::{self, Style};
use symplectic_hecke::series::{
    k_coefficients, p3_in_generators, q3_in_generators, r_series, specialize_nu, NumeratorRegistry, DEFAULT_ORDER,
    K_NAMES,
};
use symplectic_hecke::spherical::{is_prime, sp_image_pbracket, sp_image_ti, sp_image_tp, OmegaRegistry};
use symplectic_hecke::verify::{self, Report};
use symplectic_hecke::{reference, Error, HeckeExpr, Signature};

#[derive(Parser)]
#[command(name = "sphecke", version, about = "Spherical-map images and Hecke series for Sp of genus at most three")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the rendered output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// omega(t(p^lambda)) in the sym basis.
    Omega {
        /// Exponents of the elementary divisors, in any order.
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
        /// Specialize p to this prime.
        #[arg(long)]
        prime: Option<u64>,
        /// Compute by coset enumeration (needs --prime).
        #[arg(long)]
        oracle: bool,
        /// Method by name; overrides --oracle.
        #[arg(long)]
        method: Option<String>,
    },
    /// The 28 values omega(t(1, p^a, p^b)), 0 <= a <= b <= 6.
    Table,
    /// Images of T(p), T_i(p^2) and [p]_n.
    Images {
        #[arg(long, default_value_t = 3)]
        genus: usize,
    },
    /// The series R_n(v) truncated after v^order.
    Series {
        #[arg(long, default_value_t = 3)]
        genus: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// The numerator P_n(v).
    Numerator {
        #[arg(long, default_value_t = 3)]
        genus: usize,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value = "rationality")]
        route: String,
    },
    /// P_3(v) in the Hecke generators, with its verification.
    Theorem1,
    /// Q_3(v) in the Hecke generators and the K table, with their verification.
    Theorem2,
    /// The degree specialization of P_3(v) and its factorization.
    Special,
    /// Run every acceptance check.
    VerifyAll,
}

/// Rendered output and whether a verification inside it failed.
struct Output {
    body: String,
    failed: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, failed: false }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedGenus(_)
            | Error::OrderTooSmall { .. }
            | Error::UnknownMethod(_)
            | Error::MissingPrime
            | Error::NotPrime(_)
            | Error::LengthMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::EnumerationTooLarge { .. }
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn style(format: Format) -> Style {
    if format == Format::Latex {
        Style::Latex
    } else {
        Style::Text
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn report_json(r: &Report) -> Value {
    json!({"criterion": r.id, "title": r.title, "passed": r.passed, "detail": r.detail})
}

fn verdicts(ids: &[usize]) -> Vec<Report> {
    ids.iter().filter_map(|&id| verify::check(id)).map(|c| c.run()).collect()
}

fn omega(
    lambda: Vec<u32>,
    prime: Option<u64>,
    oracle: bool,
    method: Option<String>,
    format: Format,
) -> Result<Output, Failure> {
    if !(1..=4).contains(&lambda.len()) {
        return Err(Failure::Usage(format!("--lambda needs 1 to 4 parts, got {}", lambda.len())));
    }
    if let Some(q) = prime {
        if !is_prime(q) {
            return Err(Failure::Usage(format!("--prime {q} is not prime")));
        }
    }
    let name = method.unwrap_or_else(|| if oracle { "cosets".into() } else { "hl".into() });
    let n = lambda.len();
    let sig = Signature::from_unsorted(lambda);
    let w = OmegaRegistry::with_defaults().get(&name)?.omega(&sig, n, prime)?;
    Ok(Output::ok(match format {
        Format::Json => json_text(&json!({
            "signature": sig.parts(),
            "prime": prime,
            "method": name,
            "omega": render::xpoly_json(&w),
        })),
        _ => render::xpoly(&w, style(format)),
    }))
}

fn table(format: Format) -> Result<Output, Failure> {
    let mut rows = Vec::new();
    for (item, (parts, _)) in reference::OMEGA_TABLE.iter().enumerate() {
        let sig = Signature::new(parts.to_vec())?;
        let w = symplectic_hecke::spherical::omega_hl(&sig, 3)?;
        rows.push((item + 1, parts[1], parts[0], w));
    }
    Ok(Output::ok(match format {
        Format::Json => json_text(&Value::Array(
            rows.iter()
                .map(|(item, a, b, w)| json!({"item": item, "a": a, "b": b, "omega": render::xpoly_json(w)}))
                .collect(),
        )),
        Format::Text => rows
            .iter()
            .map(|(item, a, b, w)| format!("{item:>2}. t(1,p^{a},p^{b}): {}", render::xpoly(w, Style::Text)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => rows
            .iter()
            .map(|(_, a, b, w)| format!("\\omega(t(1,p^{{{a}}},p^{{{b}}})) &= {} \\\\", render::xpoly(w, Style::Latex)))
            .collect::<Vec<_>>()
            .join("\n"),
    }))
}

fn images(n: usize, format: Format) -> Result<Output, Failure> {
    if n == 0 {
        return Err(Error::UnsupportedGenus(0).into());
    }
    let mut rows: Vec<(String, String, XPoly)> = vec![("T(p)".into(), r"\mathbf{T}(p)".into(), sp_image_tp(n))];
    for i in 1..=n {
        rows.push((format!("T_{i}(p^2)"), format!(r"\mathbf{{T}}_{i}(p^2)"), sp_image_ti(i, n)?));
    }
    rows.push((format!("[p]_{n}"), format!("[p]_{n}"), sp_image_pbracket(n)));
    Ok(Output::ok(match format {
        Format::Json => json_text(&Value::Array(
            rows.iter().map(|(name, _, x)| json!({"operator": name, "image": render::xpoly_json(x)})).collect(),
        )),
        Format::Text => rows
            .iter()
            .map(|(name, _, x)| format!("Omega({name}) = {}", render::xpoly(x, Style::Text)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => rows
            .iter()
            .map(|(_, tex, x)| format!("\\Omega({tex}) &= {} \\\\", render::xpoly(x, Style::Latex)))
            .collect::<Vec<_>>()
            .join("\n"),
    }))
}

fn series_output(s: &VSeries, format: Format) -> Output {
    Output::ok(match format {
        Format::Json => json_text(&render::vseries_json(s)),
        _ => render::vseries(s, style(format)),
    })
}

fn hecke_lines(exprs: &[HeckeExpr], label: &str, format: Format) -> Vec<String> {
    exprs
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(k, e)| match format {
            Format::Latex => format!("{label}_{{{k}}} &= {} \\\\", render::hecke(e, Style::Latex)),
            _ => format!("{label}_{k} = {}", render::hecke(e, Style::Text)),
        })
        .collect()
}

fn with_verdicts(mut lines: Vec<String>, reports: &[Report], format: Format) -> Output {
    let failed = reports.iter().any(|r| !r.passed);
    for r in reports {
        lines.push(match format {
            Format::Latex => format!("% {}", r.verdict()),
            _ => r.verdict(),
        });
    }
    Output { body: lines.join("\n"), failed }
}

fn theorem1(format: Format) -> Result<Output, Failure> {
    let u = p3_in_generators()?;
    let reports = verdicts(&[6]);
    if format == Format::Json {
        return Ok(Output {
            body: json_text(&json!({
                "coefficients": u.iter().map(HeckeExpr::to_json).collect::<Vec<_>>(),
                "verdicts": reports.iter().map(report_json).collect::<Vec<_>>(),
            })),
            failed: reports.iter().any(|r| !r.passed),
        });
    }
    Ok(with_verdicts(hecke_lines(&u, "u", format), &reports, format))
}

fn theorem2(format: Format) -> Result<Output, Failure> {
    let q = q3_in_generators()?;
    let k = k_coefficients(&q);
    let reports = verdicts(&[7, 8]);
    if format == Format::Json {
        let k_json: serde_json::Map<String, Value> =
            K_NAMES.iter().map(|(name, _)| (format!("K_{name}"), render::laurent_json(&k[name]))).collect();
        return Ok(Output {
            body: json_text(&json!({
                "t": q.to_json(),
                "K": k_json,
                "verdicts": reports.iter().map(report_json).collect::<Vec<_>>(),
            })),
            failed: reports.iter().any(|r| !r.passed),
        });
    }
    let st = style(format);
    let mut lines = hecke_lines(&q.t, "t", format);
    for (name, _) in K_NAMES {
        lines.push(match format {
            Format::Latex => format!("K_{{\\mathrm{{{name}}}}} &= {} \\\\", render::laurent(&k[name], st)),
            _ => format!("K_{name} = {}", render::laurent(&k[name], st)),
        });
    }
    Ok(with_verdicts(lines, &reports, format))
}

fn special(format: Format) -> Result<Output, Failure> {
    let p = NumeratorRegistry::with_defaults().get("rationality")?.numerator(3, DEFAULT_ORDER)?;
    let nu = specialize_nu(&p)?;
    let coeffs: Vec<PrimeLaurent> =
        nu.scalar_coeffs().ok_or_else(|| Failure::Runtime("specialization left x variables".into()))?;
    let reports = verdicts(&[9]);
    if format == Format::Json {
        return Ok(Output {
            body: json_text(&json!({
                "nu_P3": coeffs.iter().map(render::laurent_json).collect::<Vec<_>>(),
                "factorization": reference::NU_P3_FACTORED,
                "verdicts": reports.iter().map(report_json).collect::<Vec<_>>(),
            })),
            failed: reports.iter().any(|r| !r.passed),
        });
    }
    let st = style(format);
    let mut lines: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match format {
            Format::Latex => format!("v^{{{k}}} &: {} \\\\", render::laurent(c, st)),
            _ => format!("v^{k}: {}", render::laurent(c, st)),
        })
        .collect();
    lines.push(format!("factored: {}", reference::NU_P3_FACTORED));
    Ok(with_verdicts(lines, &reports, format))
}

fn verify_all(format: Format) -> Output {
    let reports = verify::run_all();
    let failed = reports.iter().any(|r| !r.passed);
    let body = match format {
        Format::Json => json_text(&Value::Array(reports.iter().map(report_json).collect())),
        _ => reports.iter().map(Report::verdict).collect::<Vec<_>>().join("\n"),
    };
    Output { body, failed }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Omega { lambda, prime, oracle, method } => omega(lambda, prime, oracle, method, format),
        Command::Table => table(format),
        Command::Images { genus } => images(genus, format),
        Command::Series { genus, order } => Ok(series_output(&r_series(genus, order)?, format)),
        Command::Numerator { genus, order, route } => {
            let p = NumeratorRegistry::with_defaults().get(&route)?.numerator(genus, order)?;
            Ok(series_output(&p, format))
        }
        Command::Theorem1 => theorem1(format),
        Command::Theorem2 => theorem2(format),
        Command::Special => special(format),
        Command::VerifyAll => Ok(verify_all(format)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = cli.out.clone();
    match run(cli) {
        Ok(output) => {
            let mut body = output.body;
            body.push('\n');
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, body) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{body}"),
            }
            ExitCode::from(u8::from(output.failed))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
