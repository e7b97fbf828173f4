//! `recalg`: presentations, twisting, determinants and verification from the command line.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use recalg::braided::{braided_det_expr, BraidedAlgebra};
use recalg::combinatorics::{v_set, Composition};
use recalg::frt::{format_word, parse_word, FrtAlgebra, Word};
use recalg::presentations::{count_terms, present, Family};
use recalg::rform::{build_rform, dump_tables, Variant};
use recalg::ring::{sigma_factors, sigma_q, CyclotomicCtx, LaurentInt};
use recalg::twisting::Twister;
use recalg::verify::{run_suite, Suite, SuiteParams, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(
    name = "recalg",
    version,
    about = "Exact presentations of quantum matrix and reflection equation algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output syntax.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads; 0 means one per core.
    #[arg(long, global = true, env = "RECALG_WORKERS", default_value_t = 0)]
    workers: usize,

    /// Entry cap of each memo table.
    #[arg(long, global = true)]
    memo_cap: Option<usize>,

    /// Seed of the randomized checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators and relations of an algebra.
    Present {
        /// mn, gln, sln, small-gln or small-sln.
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u8,
        /// Odd order of the root of unity; small families only.
        #[arg(long)]
        ell: Option<u32>,
    },
    /// Run verification suites; exits with 1 if any check fails.
    Verify(VerifyArgs),
    /// The quantum determinant, or with --braided its covariantized image.
    Det {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        braided: bool,
    },
    /// Image of a word under the twisting map.
    Twist {
        /// For example "x[1,1]^3" or "x[1,2]*x[2,1]".
        #[arg(long)]
        word: String,
        /// Matrix size; defaults to the largest index in the word.
        #[arg(long)]
        n: Option<u8>,
    },
    /// The scalar of a composition and optionally its index tuples.
    Sigma {
        /// Comma-separated parts, for example 3,1,2.
        #[arg(long)]
        composition: String,
        /// Also reduce at a primitive root of unity of this order.
        #[arg(long)]
        ell: Option<u32>,
        /// List the tuples of V^k.
        #[arg(long)]
        k: Option<u8>,
    },
    /// Monomials of the diagonal power relation, enumerated and by closed form.
    Count {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        ell: u32,
        /// Only this k; all 1..=n by default.
        #[arg(long)]
        k: Option<u8>,
    },
    /// The generator tables of R, its inverse and the second-slot inverse.
    RformDump {
        #[arg(long)]
        n: u8,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// ring, fr, rform, braided, twist, theorem, examples, counts or all. Repeatable.
    #[arg(long, required = true)]
    suite: Vec<String>,
    #[arg(long, default_value_t = 2)]
    n: u8,
    #[arg(long)]
    ell: Option<u32>,
    #[arg(long)]
    k: Option<u8>,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    #[arg(long, default_value_t = 5)]
    max_power: u32,
    #[arg(long, default_value_t = 16)]
    samples: usize,
    /// Largest admitted n^(2m) expansion.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Include wall times (reports then differ between runs).
    #[arg(long)]
    timing: bool,
}

/// Text to emit and whether the run counts as a failure.
struct Output {
    body: String,
    failed: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output {
            body,
            failed: false,
        }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn no_latex(cmd: &str, f: Format) -> Result<()> {
    if f == Format::Latex {
        bail!("{cmd} has no LaTeX output; use --format text or json");
    }
    Ok(())
}

fn size_of_word(w: &Word) -> u8 {
    w.iter().map(|g| g.row.max(g.col)).max().unwrap_or(1)
}

fn present_cmd(f: Format, family: Family, n: u8, ell: Option<u32>) -> Result<Output> {
    let doc = present(family, n, ell)?;
    Ok(Output::ok(match f {
        Format::Json => doc.to_json_string(),
        Format::Latex => doc.to_latex(),
        Format::Text => doc.to_text(),
    }))
}

fn verify_cmd(f: Format, a: &VerifyArgs, workers: usize, seed: u64) -> Result<Output> {
    no_latex("verify", f)?;
    let suites: Vec<Suite> = if a.suite.iter().any(|s| s == "all") {
        Suite::ALL.to_vec()
    } else {
        a.suite
            .iter()
            .map(|s| s.parse::<Suite>())
            .collect::<recalg::Result<_>>()?
    };
    let params = SuiteParams {
        n: a.n,
        ell: a.ell,
        k: a.k,
        max_degree: a.max_degree,
        max_power: a.max_power,
        samples: a.samples,
        seed,
        budget: a.budget,
        workers,
        timing: a.timing,
    };
    let reports = suites
        .iter()
        .map(|&s| run_suite(s, &params))
        .collect::<recalg::Result<Vec<_>>>()?;
    let failed = reports.iter().any(|r| !r.passed);
    let body = match f {
        Format::Json if reports.len() == 1 => reports[0].to_json_string(),
        Format::Json => json_text(&serde_json::to_value(&reports)?),
        _ => reports
            .iter()
            .map(|r| r.to_text())
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Output { body, failed })
}

fn det_cmd(f: Format, n: u8, braided: bool) -> Result<Output> {
    let body = if braided {
        let e = braided_det_expr(n);
        match f {
            Format::Json => {
                let alg = BraidedAlgebra::new(n)?;
                let value = alg.evaluate(&e)?;
                json_text(&json!({ "chains": e.to_json(), "normal_form": value.to_json() }))
            }
            Format::Latex => format!("{}\n", e.render_latex()),
            Format::Text => format!("{}\n", e.render()),
        }
    } else {
        let d = FrtAlgebra::new(n)?.qdet();
        match f {
            Format::Json => json_text(&serde_json::to_value(d.to_json())?),
            Format::Latex => format!("{}\n", d.render_latex('x', " ")),
            Format::Text => format!("{d}\n"),
        }
    };
    Ok(Output::ok(body))
}

fn twist_cmd(f: Format, word: &str, n: Option<u8>) -> Result<Output> {
    let w = parse_word(word)?;
    let n = n.unwrap_or_else(|| size_of_word(&w));
    let tw = Twister::new(n)?;
    let input = tw.algebra().frt().normal_form(&w, &LaurentInt::one())?;
    let out = tw.twist(&input)?;
    Ok(Output::ok(match f {
        Format::Json => json_text(&json!({ "input": input.to_json(), "output": out.to_json() })),
        Format::Latex => format!(
            "{}\n",
            out.as_element().render_latex('u', " \\underline{\\cdot} ")
        ),
        Format::Text => format!("{}\n", out.as_element().render('u')),
    }))
}

fn sigma_cmd(f: Format, composition: &str, ell: Option<u32>, k: Option<u8>) -> Result<Output> {
    no_latex("sigma", f)?;
    let lambda: Composition = composition.parse()?;
    let factors = sigma_factors(&lambda);
    let value = sigma_q(&lambda, 1);
    let reduced = ell
        .map(|l| CyclotomicCtx::new(l, 1).map(|ctx| ctx.reduce(&value)))
        .transpose()?;
    let tuples: Option<Vec<Vec<u8>>> = k.map(|k| v_set(k, &lambda).map(|t| t.0).collect());
    let factored = if factors.is_empty() {
        "1".to_string()
    } else {
        factors
            .iter()
            .map(|m| format!("(1 - q^-{})", 2 * m))
            .collect::<Vec<_>>()
            .join("·")
    };
    let body = match f {
        Format::Json => json_text(&json!({
            "composition": lambda.to_string(),
            "factors": factors,
            "value": value.to_json(1),
            "reduced": reduced.as_ref().map(|r| r.to_json(1)),
            "ell": ell,
            "k": k,
            "tuples": tuples,
        })),
        _ => {
            let mut s = format!("sigma({lambda}) = {factored}\n  = {}\n", value.display(1));
            if let (Some(l), Some(r)) = (ell, &reduced) {
                s.push_str(&format!(
                    "at q = ε of order {l}: {}\n",
                    r.render(1, "ε", false)
                ));
            }
            if let (Some(k), Some(ts)) = (k, &tuples) {
                s.push_str(&format!("V^{k}({lambda}): {} tuple(s)\n", ts.len()));
                for t in ts {
                    let parts: Vec<String> = t.iter().map(|b| b.to_string()).collect();
                    s.push_str(&format!("({})\n", parts.join(",")));
                }
            }
            s
        }
    };
    Ok(Output::ok(body))
}

fn count_cmd(f: Format, n: u8, ell: u32, k: Option<u8>) -> Result<Output> {
    no_latex("count", f)?;
    let ks: Vec<u8> = match k {
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    let counts = ks
        .iter()
        .map(|&k| count_terms(n, ell, k))
        .collect::<recalg::Result<Vec<_>>>()?;
    Ok(Output::ok(match f {
        Format::Json => json_text(&serde_json::to_value(&counts)?),
        _ => counts
            .iter()
            .map(|c| {
                let verdict = if c.agrees() { "agree" } else { "differ" };
                format!(
                    "n = {}, ell = {}, k = {}: enumerated {}, closed form {} ({verdict})\n",
                    c.n, c.ell, c.k, c.enumerated, c.closed_form
                )
            })
            .collect(),
    }))
}

fn rform_cmd(f: Format, n: u8) -> Result<Output> {
    no_latex("rform-dump", f)?;
    let form = build_rform(n)?;
    Ok(Output::ok(match f {
        Format::Json => json_text(&dump_tables(&form)),
        _ => {
            let mut s = String::new();
            for (name, v) in [
                ("R", Variant::R),
                ("Rinv", Variant::Rinv),
                ("Rtilde", Variant::Rtilde),
            ] {
                s.push_str(&format!("# {name}, nonzero entries\n"));
                for (a, b, c) in form.nonzero(v) {
                    s.push_str(&format!(
                        "{name}({}, {}) = {}\n",
                        format_word(&[*a], 'x'),
                        format_word(&[*b], 'x'),
                        c.display(n as u32)
                    ));
                }
            }
            s
        }
    }))
}

fn run(cli: &Cli) -> Result<Output> {
    if let Some(cap) = cli.memo_cap {
        recalg::memo::set_memo_cap(cap);
    }
    if cli.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global()
            .context("starting the worker pool")?;
    }
    let f = cli.format;
    match &cli.command {
        Command::Present { family, n, ell } => present_cmd(f, *family, *n, *ell),
        Command::Verify(a) => verify_cmd(f, a, cli.workers, cli.seed),
        Command::Det { n, braided } => det_cmd(f, *n, *braided),
        Command::Twist { word, n } => twist_cmd(f, word, *n),
        Command::Sigma {
            composition,
            ell,
            k,
        } => sigma_cmd(f, composition, *ell, *k),
        Command::Count { n, ell, k } => count_cmd(f, *n, *ell, *k),
        Command::RformDump { n } => rform_cmd(f, *n),
    }
}

fn emit(cli: &Cli, body: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| emit(&cli, &o.body).map(|_| o.failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_size_is_largest_index() {
        assert_eq!(size_of_word(&parse_word("x[1,3]*x[2,2]").unwrap()), 3);
        assert_eq!(size_of_word(&parse_word("1").unwrap()), 1);
    }

    #[test]
    fn latex_is_rejected_where_absent() {
        assert!(no_latex("count", Format::Latex).is_err());
        assert!(no_latex("count", Format::Json).is_ok());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
