use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qloop::harness::{
    divided_root_samples, parse_e_monomial, parse_f_monomial, verify_dual_bases, verify_duality, verify_good_criterion,
    verify_key_specialization, verify_oracle, with_threads, DecompStrategy, FactorOrder, GramRow, WindowConfig,
};
use qloop::pairing::pair;
use qloop::shuffle::{build_e_pbwd, check_relations, star, ShuffleElement};
use qloop::special::is_good;
use qloop::{Error, Result};

#[derive(Parser)]
#[command(
    name = "qloop",
    version,
    about = "Exact shuffle-algebra computations and integral-form checks for U_v(Lsl_n)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Shuffle product of two elements.
    Star {
        #[arg(long)]
        n: usize,
        /// Monomial text `e[j..i]@r^k*...` or a JSON element file.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Integrality and specialization divisibility of an element.
    Good {
        #[arg(long)]
        n: usize,
        /// Monomial text or a JSON element file.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Pairing of an element with an F-monomial.
    Pair {
        #[arg(long)]
        n: usize,
        /// Monomial text or a JSON element file.
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Gram report of the window (same as `verify duality`).
    Gram(DualityArgs),
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Subcommand)]
enum Verify {
    /// Every window pairing of divided-power E-monomials is a Laurent polynomial.
    Duality(DualityArgs),
    /// Good elements pair polynomially; others have a non-polynomial witness.
    Good {
        #[command(flatten)]
        window: WindowArgs,
        /// Largest divided power sampled.
        #[arg(long, default_value_t = 2)]
        max_power: usize,
        /// Extra elements (JSON files) to test.
        #[arg(long)]
        element: Vec<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Permutation-monomial structure of E~ against divided-power F Gram blocks.
    DualBases {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value_t = 2)]
        mode_bound: i64,
        #[arg(long, value_enum, default_value_t = OrderArg::EDecreasing)]
        order: OrderArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Orientation-sum pairing against the word-expansion oracle.
    Oracle {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value_t = 2)]
        max_factors: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Quadratic and Serre relations among generators.
    Relations {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "-1..1", allow_hyphen_values = true)]
        modes: String,
    },
    /// Closed-form pairing with the longest root current against monomials.
    KeySpec {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        window: i64,
    },
}

#[derive(Args)]
struct WindowArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    /// Factor mode window `lo..hi`.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    modes: String,
    /// `zero`, `slope` or `file:PATH`.
    #[arg(long, default_value = "zero")]
    decomp: String,
    /// Worker threads for the parallel map; the output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct DualityArgs {
    #[command(flatten)]
    window: WindowArgs,
    /// JSON element appended as an extra Gram row.
    #[arg(long)]
    extra_row: Vec<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    EIncreasing,
    EDecreasing,
}

fn parse_modes(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("mode window {s:?} is not lo..hi")))?;
    let p = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad mode window {s:?}")))
    };
    Ok((p(lo)?, p(hi)?))
}

fn parse_strategy(s: &str) -> Result<DecompStrategy> {
    match s {
        "zero" => Ok(DecompStrategy::Zero),
        "slope" => Ok(DecompStrategy::Slope),
        _ => match s.strip_prefix("file:") {
            Some(p) => DecompStrategy::from_file(Path::new(p)),
            None => Err(Error::Parse(format!("unknown decomposition strategy {s:?}"))),
        },
    }
}

impl WindowArgs {
    fn config(&self) -> Result<WindowConfig> {
        let (lo, hi) = parse_modes(&self.modes)?;
        WindowConfig::new(self.n, self.max_degree, lo, hi, parse_strategy(&self.decomp)?)
    }
}

fn read_element(path: &Path, n: usize) -> Result<ShuffleElement> {
    let x: ShuffleElement = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    if x.rank() != n {
        return Err(Error::RankMismatch {
            left: x.rank(),
            right: n,
        });
    }
    Ok(x)
}

/// Monomial text if it looks like one, otherwise a JSON file.
fn element_arg(s: &str, n: usize) -> Result<ShuffleElement> {
    if s.starts_with("e[") {
        build_e_pbwd(n, &parse_e_monomial(s)?)
    } else {
        read_element(Path::new(s), n)
    }
}

fn emit(output: &OutputArgs, json: String, csv: Option<String>) -> Result<()> {
    let body = match output.format {
        Format::Json => json,
        Format::Csv => csv.ok_or_else(|| Error::Precondition("this report has no CSV form".into()))?,
    };
    match &output.out {
        Some(p) => std::fs::write(p, body + "\n")?,
        None => println!("{body}"),
    }
    Ok(())
}

fn json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("report serializes")
}

fn verdict(ok: bool, what: &str) -> bool {
    eprintln!("{what}: {}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Star { n, left, right } => {
            let x = star(&element_arg(&left, n)?, &element_arg(&right, n)?)?;
            println!("{}", json(&x));
            Ok(true)
        }
        Cmd::Good { n, element } => {
            let rep = is_good(&element_arg(&element, n)?)?;
            println!("{}", json(&rep));
            Ok(rep.good)
        }
        Cmd::Pair { n, e, f } => {
            let p = pair(&element_arg(&e, n)?, &parse_f_monomial(&f)?)?;
            println!("{p}");
            Ok(true)
        }
        Cmd::Gram(a) | Cmd::Verify(Verify::Duality(a)) => {
            let cfg = a.window.config()?;
            let extra = a
                .extra_row
                .iter()
                .map(|p| {
                    Ok(GramRow {
                        label: p.display().to_string(),
                        element: read_element(p, cfg.n)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let rep = with_threads(a.window.threads, || verify_duality(&cfg, &extra))??;
            emit(&a.output, rep.to_json(), Some(rep.to_csv()))?;
            if let Some(v) = &rep.summary.first_violation {
                eprintln!("first violation: {v}");
            }
            eprintln!(
                "checked {} entries, {} violations",
                rep.summary.checked, rep.summary.violations
            );
            Ok(verdict(rep.passed(), "duality"))
        }
        Cmd::Verify(Verify::Good {
            window,
            max_power,
            element,
            output,
        }) => {
            let cfg = window.config()?;
            let mut samples = divided_root_samples(&cfg, max_power)?;
            for p in &element {
                samples.push(GramRow {
                    label: p.display().to_string(),
                    element: read_element(p, cfg.n)?,
                });
            }
            let rep = with_threads(window.threads, || verify_good_criterion(&cfg, &samples))??;
            emit(&output, json(&rep), None)?;
            Ok(verdict(rep.passed, "good criterion"))
        }
        Cmd::Verify(Verify::DualBases {
            window,
            mode_bound,
            order,
            output,
        }) => {
            let cfg = window.config()?;
            let order = match order {
                OrderArg::EIncreasing => FactorOrder::EIncreasing,
                OrderArg::EDecreasing => FactorOrder::EDecreasing,
            };
            let rep = with_threads(window.threads, || verify_dual_bases(&cfg, mode_bound, order))??;
            emit(&output, json(&rep), None)?;
            Ok(verdict(rep.passed, "dual bases"))
        }
        Cmd::Verify(Verify::Oracle {
            window,
            max_factors,
            output,
        }) => {
            let cfg = window.config()?;
            let rep = with_threads(window.threads, || verify_oracle(&cfg, max_factors))??;
            emit(&output, json(&rep), None)?;
            Ok(verdict(rep.passed(), "oracle"))
        }
        Cmd::Verify(Verify::Relations { n, modes }) => {
            let (lo, hi) = parse_modes(&modes)?;
            let rep = check_relations(&qloop::shuffle::RootSystemData::sl(n), lo..=hi)?;
            println!("{}", json(&rep));
            Ok(verdict(rep.passed(), "relations"))
        }
        Cmd::Verify(Verify::KeySpec { n, window }) => {
            if n < 3 {
                return Err(Error::Precondition("key-spec needs n >= 3".into()));
            }
            let rep = verify_key_specialization(n, &[-1, 0, 2], &[-3, -4], window)?;
            println!("{}", json(&rep));
            Ok(verdict(rep.passed(), "key specialization"))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
