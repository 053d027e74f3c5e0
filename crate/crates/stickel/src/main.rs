use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stickel::cache::{self, Cache};
use stickel::config::{self, parse_moduli};
use stickel::report::{self, complex};
use stickel::{fixtures, runner, Check, CliError, OutputFormat, RunConfig};
use stickel_core::maninsym::build_space;

#[derive(Parser)]
#[command(name = "stickel", version, about = "Mazur-Tate elements of elliptic curves and their relations")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone)]
struct Common {
    /// Fixture file of `label;a1,a2,a3,a4,a6;N;rank` lines (default: built-in battery).
    #[arg(long, value_name = "FILE")]
    curves: Option<PathBuf>,
    /// Run on the curve with this label.
    #[arg(long, value_name = "LABEL")]
    curve: Option<String>,
    /// Run on every curve.
    #[arg(long)]
    all: bool,
    /// A modulus; may be repeated.
    #[arg(long, value_name = "M")]
    modulus: Vec<u64>,
    /// `A..B`, or a comma-separated list.
    #[arg(long, value_name = "RANGE")]
    moduli: Option<String>,
    /// Largest filtration depth explored when computing orders of vanishing
    #[arg(long, value_name = "K")]
    rmax: Option<u32>,
    /// Target decimal digits for L-values
    #[arg(long, value_name = "D")]
    digits: Option<u32>,
    /// Cache directory (the STICKEL_CACHE environment variable takes precedence).
    #[arg(long, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// json, csv or text.
    #[arg(long, value_name = "F", default_value = "text")]
    format: String,
}

#[derive(Subcommand)]
enum Verb {
    /// Print Theta_M.
    Theta(Common),
    /// Order of vanishing over Z against |S_M|.
    Ord(Common),
    /// Run a battery of checks.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Subset of theta,ord,norm,funceq,parity,special,mazur-tate (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
    /// Character values of Theta against twisted L-values.
    Special(Common),
    /// Twisted central L-values.
    Lvalue(Common),
    /// Generator values of the rational period map.
    DumpSpace(Common),
}

impl Common {
    fn format(&self) -> Result<OutputFormat, CliError> {
        self.format.parse()
    }

    fn curves(&self) -> Result<Vec<stickel_core::curve::CurveData>, CliError> {
        let all = match &self.curves {
            Some(p) => fixtures::parse_curve_file(p)?,
            None => fixtures::builtin(),
        };
        fixtures::select(all, self.curve.as_deref(), self.all)
    }

    fn moduli(&self) -> Result<Vec<u64>, CliError> {
        let mut out = self.modulus.clone();
        if let Some(r) = &self.moduli {
            out.extend(parse_moduli(r)?);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    fn cache(&self) -> Result<Option<Cache>, CliError> {
        config::cache_dir(self.cache.clone()).map(Cache::open).transpose()
    }

    fn config(&self, checks: impl IntoIterator<Item = Check>) -> Result<RunConfig, CliError> {
        let mut c = RunConfig::new(self.curves()?, self.moduli()?, checks);
        if let Some(r) = self.rmax {
            c.r_max = r;
        }
        if let Some(d) = self.digits {
            c.digits = d;
        }
        c.cache_dir = config::cache_dir(self.cache.clone());
        c.format = self.format()?;
        Ok(c)
    }
}

fn no_csv(format: OutputFormat) -> Result<(), CliError> {
    if format == OutputFormat::Csv {
        return Err(CliError::Usage("csv output is only available for special-value tables".into()));
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.verb {
        Verb::Theta(c) => {
            let config = c.config([Check::Theta])?;
            no_csv(config.format)?;
            let out = runner::run(&config)?;
            if config.format == OutputFormat::Json {
                print!("{}", report::render_json(&out.report)?);
            } else {
                let many = out.report.curves.len() > 1;
                for curve in &out.report.curves {
                    if many {
                        println!("# {}", curve.label);
                    }
                    for m in &curve.moduli {
                        println!("{}", m.theta);
                    }
                }
            }
            Ok(out.exit_code)
        }
        Verb::Ord(c) => {
            let config = c.config([Check::Ord])?;
            no_csv(config.format)?;
            let out = runner::run(&config)?;
            if config.format == OutputFormat::Json {
                print!("{}", report::render_json(&out.report)?);
            } else {
                for curve in &out.report.curves {
                    for m in &curve.moduli {
                        let ord = m.orders.first().map_or("?", |o| o.ord.as_str());
                        let bound = m.relations.iter().find(|r| r.name == "vanishing-bound");
                        let passed = bound.is_some_and(|r| r.passed);
                        println!("{} M={} ord_Z={}", curve.label, m.modulus, ord);
                        let k = m.split_primes.len();
                        println!("ord>={k}: {} (|S_M|={k})", if passed { "PASS" } else { "FAIL" });
                    }
                }
            }
            Ok(out.exit_code)
        }
        Verb::Verify { common, checks } => {
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks.iter().map(|s| s.parse()).collect::<Result<Vec<Check>, _>>()?
            };
            let config = common.config(checks)?;
            let out = runner::run(&config)?;
            match config.format {
                OutputFormat::Json => print!("{}", report::render_json(&out.report)?),
                OutputFormat::Csv => print!("{}", report::render_csv(&out.report)),
                OutputFormat::Text => print!("{}", report::render_text(&out.report)),
            }
            Ok(out.exit_code)
        }
        Verb::Special(c) => {
            let config = c.config([Check::Special])?;
            let out = runner::run(&config)?;
            match config.format {
                OutputFormat::Json => print!("{}", report::render_json(&out.report)?),
                OutputFormat::Csv => print!("{}", report::render_csv(&out.report)),
                OutputFormat::Text => {
                    for t in &out.report.special {
                        println!(
                            "[{}] c={} max_rel={:.3e} tolerance={:.0e}: {}",
                            t.label,
                            complex(t.c),
                            t.max_rel,
                            t.tolerance,
                            if t.passed { "PASS" } else { "FAIL" }
                        );
                        for r in &t.rows {
                            println!(
                                "  M={} {} A={} B={} rel={:.3e}",
                                r.modulus,
                                r.char_id,
                                complex(r.a_chi),
                                complex(r.b_chi),
                                r.rel
                            );
                        }
                    }
                }
            }
            Ok(out.exit_code)
        }
        Verb::Lvalue(c) => {
            let format = c.format()?;
            no_csv(format)?;
            let digits = c.digits.unwrap_or(stickel_core::lseries::DEFAULT_DIGITS);
            let cache = c.cache()?;
            let moduli = c.moduli()?;
            let mut rows = Vec::new();
            for curve in c.curves()? {
                rows.extend(runner::lvalues(&curve, &moduli, digits, cache.as_ref())?);
            }
            if format == OutputFormat::Json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                let prec = digits as usize;
                for r in rows {
                    if r.modulus == 1 {
                        println!("L({}, 1) = {:.prec$}", r.label, r.value[0]);
                    } else {
                        println!(
                            "L({}, {} mod {}, 1) = {:.prec$}{:+.prec$}i",
                            r.label, r.char_id, r.modulus, r.value[0], r.value[1]
                        );
                    }
                }
            }
            Ok(0)
        }
        Verb::DumpSpace(c) => {
            let format = c.format()?;
            no_csv(format)?;
            let cache = c.cache()?;
            for curve in c.curves()? {
                let space = build_space(curve.conductor());
                let map = cache::period_map(cache.as_ref(), &space, &curve)?;
                if format == OutputFormat::Json {
                    let v = serde_json::json!({
                        "label": curve.label(),
                        "level": map.level(),
                        "normalization": map.normalization_id(),
                        "primes_used": map.primes_used(),
                        "generators": space.p1().pairs(),
                        "values": map.generator_values(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v)?);
                } else {
                    println!(
                        "# {} level={} generators={} normalization={}",
                        curve.label(),
                        map.level(),
                        map.generator_values().len(),
                        map.normalization_id()
                    );
                    print!("{}", map.dump());
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("stickel: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
