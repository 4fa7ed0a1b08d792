use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fewnomial::descartes::sign_variations;
use fewnomial::divisibility::{divides_vertical, test_linear_factor_report, Mode, TestConfig};
use fewnomial::expr::parse_poly;
use fewnomial::line::{count_roots_on_line, restrict_to_line, six_t_minus_four};
use fewnomial::poly::DEFAULT_DENSE_CAP;
use fewnomial::rational::parse_rational;
use fewnomial::{Error, Line, Rational, Result, SparseBiPoly, SparseUniPoly};
use fewnomial_cli::bench::run_bench;
use fewnomial_cli::fuzz::{run_fuzz, FuzzParams, Property};
use serde::Serialize;

/// Exact sparse polynomial tools: sign variations, real roots on lines and
/// linear-factor tests.
#[derive(Parser)]
#[command(name = "fewnomial", version)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest degree expanded densely.
    #[arg(long, global = true, default_value_t = DEFAULT_DENSE_CAP)]
    dense_cap: u64,
    /// Seed for modular tests, fuzz campaigns and benchmarks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Read the polynomial from a JSON file instead of an expression.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sign variations of a univariate polynomial in x (-2 for zero).
    Vcount {
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// The root bound 6t - 4.
    Bound {
        #[arg(long)]
        t: u64,
    },
    /// The restriction f(x, a*x + b).
    Restrict {
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Real roots of f(x, a*x + b) against 6t - 4.
    Roots {
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Whether y - a*x - b divides f. Exit code 0 if it does, 1 if not.
    Divides {
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "auto")]
        mode: String,
        /// Primes per modular check.
        #[arg(long, default_value_t = 3)]
        primes: u32,
        /// Bit-length of the random primes.
        #[arg(long, default_value_t = 46)]
        prime_bits: u32,
    },
    /// Whether x - c divides f. Exit code 0 if it does, 1 if not.
    DividesVertical {
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Run a seeded verification campaign. Exit code 1 on any failure.
    Fuzz {
        /// lemma2, perturbation, prop3, descartes, thm1, corollary,
        /// test-vs-oracle or yun.
        property: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        max_terms: Option<usize>,
        #[arg(long)]
        max_exp: Option<u64>,
        #[arg(long)]
        coeff_bound: Option<i64>,
        #[arg(long)]
        ratio_bound: Option<i64>,
    },
    /// Time the linear-factor test on (y - 2x - 3) * g with huge exponents.
    Bench {
        /// Exponent bit-lengths to try.
        #[arg(long, value_delimiter = ',', default_value = "16,32,48")]
        bits: Vec<u32>,
        /// Terms in the cofactor g.
        #[arg(long, default_value_t = 5)]
        terms: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn rational_arg(s: &str) -> Result<Rational> {
    parse_rational(s)
}

fn line_arg(a: &str, b: &str) -> Result<Line> {
    Ok(Line::new(rational_arg(a)?, rational_arg(b)?))
}

fn read_input(cli: &Cli) -> Result<String> {
    let path = cli.input.as_ref().expect("checked by caller");
    std::fs::read_to_string(path).map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))
}

fn bivariate(cli: &Cli, expr: &Option<String>) -> Result<SparseBiPoly> {
    match (expr, &cli.input) {
        (Some(src), None) => parse_poly(src),
        (None, Some(_)) => serde_json::from_str(&read_input(cli)?)
            .map_err(|e| Error::InvalidConfig(format!("bad polynomial JSON: {e}"))),
        (Some(_), Some(_)) => Err(Error::InvalidConfig("give an expression or --in, not both".into())),
        (None, None) => Err(Error::InvalidConfig("missing polynomial".into())),
    }
}

/// A polynomial in `x` alone, from an expression or either JSON form.
fn univariate(cli: &Cli, expr: &Option<String>) -> Result<SparseUniPoly> {
    if expr.is_none() && cli.input.is_some() {
        if let Ok(p) = serde_json::from_str::<SparseUniPoly>(&read_input(cli)?) {
            return Ok(p);
        }
    }
    let f = bivariate(cli, expr)?;
    if f.max_beta().unwrap_or(0) > 0 {
        return Err(Error::InvalidConfig("expected a polynomial in x only".into()));
    }
    SparseUniPoly::new(f.terms().iter().map(|t| (t.alpha, t.coeff.clone())))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Vcount { poly } => {
            let v = sign_variations(&univariate(cli, poly)?);
            if cli.json {
                print_json(&serde_json::json!({ "sign_variations": v }));
            } else {
                println!("{}", v.value());
            }
        }
        Command::Bound { t } => {
            let t = usize::try_from(*t).map_err(|_| Error::InvalidConfig("t too large".into()))?;
            if t == 0 {
                return Err(Error::InvalidConfig("t must be at least 1".into()));
            }
            let bound = six_t_minus_four(t);
            if cli.json {
                print_json(&serde_json::json!({ "t": t, "bound": bound }));
            } else {
                println!("{bound}");
            }
        }
        Command::Restrict { poly, a, b } => {
            let g = restrict_to_line(&bivariate(cli, poly)?, &line_arg(a, b)?, cli.dense_cap)?;
            if cli.json {
                print_json(&g);
            } else {
                println!("{g}");
            }
        }
        Command::Roots { poly, a, b } => {
            print_json(&count_roots_on_line(&bivariate(cli, poly)?, &line_arg(a, b)?, cli.dense_cap)?);
        }
        Command::Divides { poly, a, b, mode, primes, prime_bits } => {
            let cfg = TestConfig {
                mode: mode.parse::<Mode>()?,
                prime_count: *primes,
                prime_bits: *prime_bits,
                dense_cap: cli.dense_cap,
                rng_seed: cli.seed,
            };
            let report = test_linear_factor_report(&bivariate(cli, poly)?, &line_arg(a, b)?, &cfg)?;
            print_json(&report);
            return Ok(if report.divides { 0 } else { 1 });
        }
        Command::DividesVertical { poly, c } => {
            let c = rational_arg(c)?;
            let divides = divides_vertical(&bivariate(cli, poly)?, &c, cli.dense_cap)?;
            if cli.json {
                print_json(&serde_json::json!({ "c": fewnomial::rational::format_rational(&c), "divides": divides }));
            } else {
                println!("{divides}");
            }
            return Ok(if divides { 0 } else { 1 });
        }
        Command::Fuzz { property, trials, max_terms, max_exp, coeff_bound, ratio_bound } => {
            let property: Property = property.parse()?;
            let mut params = FuzzParams::for_property(property);
            params.dense_cap = cli.dense_cap;
            let gen = &mut params.gen;
            gen.max_terms = max_terms.unwrap_or(gen.max_terms);
            gen.max_exp = max_exp.unwrap_or(gen.max_exp);
            gen.coeff_bound = coeff_bound.unwrap_or(gen.coeff_bound);
            gen.ratio_bound = ratio_bound.unwrap_or(gen.ratio_bound);
            if gen.max_terms == 0 || gen.coeff_bound < 1 || gen.ratio_bound < 1 {
                return Err(Error::InvalidConfig("term count and bounds must be positive".into()));
            }
            let report = run_fuzz(property, *trials, cli.seed, &params);
            print_json(&report);
            eprintln!("{property}: {} trials, {} failures, {:.2?}", report.trials, report.failures, report.wall_time);
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Bench { bits, terms } => {
            if let Some(bad) = bits.iter().find(|b| !(2..=60).contains(*b)) {
                return Err(Error::InvalidConfig(format!("bit-length {bad} outside 2..=60")));
            }
            let cfg = TestConfig { dense_cap: cli.dense_cap, rng_seed: cli.seed, ..TestConfig::modular(cli.seed) };
            let rows = bits.iter().map(|&b| run_bench(cli.seed, *terms, b, &cfg)).collect::<Result<Vec<_>>>()?;
            if cli.json {
                print_json(&rows);
            } else {
                println!(
                    "{:>5} {:>4} {:>8} {:>12} {:>10} {:>10} {:>10}",
                    "bits", "t", "divides", "ring_mults", "time", "perturbed", "time"
                );
                for r in &rows {
                    println!(
                        "{:>5} {:>4} {:>8} {:>12} {:>9.3}s {:>10} {:>9.3}s",
                        r.bits,
                        r.t,
                        r.divides,
                        r.ring_mults,
                        r.time.as_secs_f64(),
                        r.perturbed_divides,
                        r.perturbed_time.as_secs_f64()
                    );
                }
            }
        }
    }
    Ok(0)
}
