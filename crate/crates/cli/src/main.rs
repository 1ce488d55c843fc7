mod config;
mod output;

use std::process::ExitCode;
use std::sync::Arc;

use carlitz_core::harmonic::{finite_mzv, t_expansion, Index, ZetaEngine};
use carlitz_core::laurent::{laurent_json, laurent_pairs};
use carlitz_core::uexp::UExpansion;
use carlitz_core::verify::{run_suite, SCHEMA_VERSION};
use carlitz_core::{Error, FiniteField};
use clap::Parser;
use serde_json::json;

use config::{Cli, Command, RunConfig};
use output::{emit, Rendered};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::resolve(&cli) {
        Ok(c) => c,
        Err(e) => return output::fail("Config", &e),
    };
    match run(&cli.command, &cfg) {
        Ok((rendered, pass)) => match emit(&rendered, cfg.format, cfg.output.as_deref()) {
            Ok(()) if pass => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => output::fail("Io", &e.to_string()),
        },
        Err(e) => output::fail(error_kind(&e), &e.to_string()),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidField(_) => "InvalidField",
        Error::DenominatorNotCoprime => "DenominatorNotCoprime",
        Error::ZeroToPrecision => "ZeroToPrecision",
        Error::ZeroInput => "ZeroInput",
        Error::NotMonic => "NotMonic",
        Error::PrecisionTooLow(_) => "PrecisionTooLow",
        Error::NotInvertible => "NotInvertible",
        Error::WrongModulus => "WrongModulus",
        Error::BracketNotInvertible(_) => "BracketNotInvertible",
        Error::PrecisionNotCertified(_) => "PrecisionNotCertified",
        Error::NonIntegralCoefficient(_) => "NonIntegralCoefficient",
        Error::IndexMismatch(_) => "IndexMismatch",
        Error::Precondition(_) => "Precondition",
        Error::UnknownSuite(_) => "UnknownSuite",
        Error::Unsupported(_) => "Unsupported",
    }
}

fn parse_index(s: &str) -> carlitz_core::Result<Index> {
    s.parse()
}

fn run(cmd: &Command, cfg: &RunConfig) -> carlitz_core::Result<(Rendered, bool)> {
    let f = FiniteField::of_order(cfg.r)?;
    match cmd {
        Command::Zeta { index } => {
            let s = parse_index(index)?;
            let zeta = ZetaEngine::new(&f);
            let (cutoff, _) = zeta.zeta_truncation(&s, cfg.prec)?;
            let x = zeta.zeta_thakur(&s, cfg.prec)?;
            let json = json!({
                "schema_version": SCHEMA_VERSION,
                "r": cfg.r,
                "index": s.to_string(),
                "prec": cfg.prec,
                "route": "gamma_0",
                "cutoff": cutoff,
                "value": laurent_json(&x),
            });
            let rows = vec![vec![
                s.to_string(),
                cfg.prec.to_string(),
                cutoff.to_string(),
                laurent_pairs(&x),
            ]];
            let text = format!("ζ_A{s} = {x}\n");
            Ok((
                Rendered::new(json, &["index", "prec", "cutoff", "value"], rows, text),
                true,
            ))
        }
        Command::ZetaU { index } => {
            let s = parse_index(index)?;
            let u = UExpansion::new(Arc::new(ZetaEngine::new(&f)));
            let series = u.zeta_u_series(&s, cfg.n_max, cfg.prec)?;
            let mut json = series.to_json();
            json["schema_version"] = json!(SCHEMA_VERSION);
            json["r"] = json!(cfg.r);
            json["prec"] = json!(cfg.prec);
            let step = cfg.r - 1;
            let rows = series
                .gammas
                .iter()
                .enumerate()
                .map(|(n, g)| {
                    vec![
                        s.to_string(),
                        n.to_string(),
                        (n as u64 * step).to_string(),
                        laurent_pairs(g),
                    ]
                })
                .collect();
            let text = series
                .gammas
                .iter()
                .enumerate()
                .map(|(n, g)| format!("γ_{n}{s} = {g}\n"))
                .collect();
            Ok((
                Rendered::new(json, &["index", "N", "u_exponent", "value"], rows, text),
                true,
            ))
        }
        Command::FiniteZeta { index } => {
            let s = parse_index(index)?;
            let zeta = ZetaEngine::new(&f);
            let vec = finite_mzv(&zeta, &s, cfg.big_d_max)?;
            let json = json!({
                "schema_version": SCHEMA_VERSION,
                "r": cfg.r,
                "index": s.to_string(),
                "D_max": cfg.big_d_max,
                "components": vec.to_json(),
            });
            let rows = vec
                .components
                .iter()
                .map(|(v, x)| {
                    vec![
                        v.to_string(),
                        v.digit_strings().join(" "),
                        x.to_string(),
                        x.digit_strings().join(" "),
                    ]
                })
                .collect();
            let text = vec
                .components
                .iter()
                .map(|(v, x)| format!("{v}: {x}\n"))
                .collect();
            Ok((
                Rendered::new(
                    json,
                    &["v", "v_coeffs", "value", "value_coeffs"],
                    rows,
                    text,
                ),
                true,
            ))
        }
        Command::TExpansion { index, terms } => {
            let s = parse_index(index)?;
            let c = t_expansion(&f, &s, *terms)?;
            let json = json!({
                "schema_version": SCHEMA_VERSION,
                "r": cfg.r,
                "index": s.to_string(),
                "coeffs": c.iter().map(|a| a.to_digit_arrays()).collect::<Vec<_>>(),
            });
            let rows = c
                .iter()
                .enumerate()
                .map(|(k, a)| vec![k.to_string(), a.to_string(), a.digit_strings().join(" ")])
                .collect();
            let text = c
                .iter()
                .enumerate()
                .map(|(k, a)| format!("t^{k}: {a}\n"))
                .collect();
            Ok((
                Rendered::new(json, &["k", "coeff", "coeff_digits"], rows, text),
                true,
            ))
        }
        Command::Verify { suite } => {
            let report = run_suite(suite, &cfg.verify())?;
            let pass = report.pass();
            Ok((Rendered::report(report), pass))
        }
    }
}
