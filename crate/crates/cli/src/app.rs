//! Argument parsing and the subcommands.

use std::io::Write;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use carton_core::growth::grow_rectangle;
use carton_core::lr_oracle::{lr_triple, lr_via_rectification};
use carton_core::verify::{self, SelftestOptions, SuiteReport, SweepOptions};
use carton_core::{
    canonical_tableaux, enumerate_cartons, enumerate_cartons_par, permute_carton, validate_carton, Carton, Partition,
    Permutation, Rectangle, ShapeChain, StandardTableau,
};

use crate::json::{self, CartonJson, CountJson, GrowthJson, RectJson, SuiteJson};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "carton", version, about = "Count and display cartons for Littlewood-Richardson coefficients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of cartons for a triple.
    Count {
        #[command(flatten)]
        instance: Instance,
        /// Also print both oracle values.
        #[arg(short, long)]
        verbose: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Every carton for a triple, as six face tables or JSON lines.
    Enumerate {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Extend witnesses on all cores; output order is unchanged.
        #[arg(long)]
        parallel: bool,
    },
    /// Grow a rectangular diagram from its left column and top row.
    Growth {
        /// Left column, bottom to top, e.g. `0-1-2-3-3,1`.
        #[arg(long)]
        left: String,
        /// Top row, left to right, e.g. `3,1-4,1-4,2`.
        #[arg(long)]
        top: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare cartons with both oracles on every triple in a rectangle and
    /// run the property suites.
    Verify {
        #[arg(long)]
        rect: Rectangle,
        /// Largest tableau size for the infusion and evacuation suites.
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Map each carton through a permutation of (λ, μ, ν) and pair it with
    /// a carton of the permuted triple.
    Symmetry {
        #[command(flatten)]
        instance: Instance,
        /// New order of the triple as a word in l, m, n (`mln` swaps λ and
        /// μ, `mnl` is a 3-cycle, `id` the identity).
        #[arg(long, default_value = "id")]
        sigma: Permutation,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Every sweep and property suite.
    Selftest {
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Instance {
    /// Rectangle as `LxK`.
    #[arg(long)]
    pub rect: Rectangle,
    /// Comma-separated parts; `0` or the empty string for ∅.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Partition,
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub nu: Partition,
    /// T_λ as rows separated by `/`, e.g. `1,2/3`; row superstandard if absent.
    #[arg(long)]
    pub t_lambda: Option<String>,
    #[arg(long)]
    pub t_mu: Option<String>,
    #[arg(long)]
    pub t_nu: Option<String>,
}

fn parse_rows(s: &str) -> anyhow::Result<StandardTableau> {
    let rows = s
        .split('/')
        .filter(|r| !r.trim().is_empty())
        .map(|r| {
            r.split(',')
                .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad label {x:?}")))
                .collect()
        })
        .collect::<anyhow::Result<Vec<Vec<usize>>>>()?;
    Ok(StandardTableau::from_rows(&rows)?)
}

pub fn parse_chain(s: &str) -> anyhow::Result<ShapeChain> {
    let shapes = s
        .split(['-', '−'])
        .map(|p| p.trim().parse::<Partition>().with_context(|| format!("bad shape {p:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(ShapeChain::new(shapes)?)
}

impl Instance {
    fn triple(&self) -> [Partition; 3] {
        [self.lambda.clone(), self.mu.clone(), self.nu.clone()]
    }

    fn tableaux(&self) -> anyhow::Result<[StandardTableau; 3]> {
        for p in self.triple() {
            p.check_fits(self.rect)?;
        }
        let mut ts = canonical_tableaux(&self.lambda, &self.mu, &self.nu);
        let given = [&self.t_lambda, &self.t_mu, &self.t_nu];
        for (i, (g, name)) in given.into_iter().zip(["--t-lambda", "--t-mu", "--t-nu"]).enumerate() {
            if let Some(s) = g {
                let t = parse_rows(s).with_context(|| name.to_string())?;
                if t.outer() != ts[i].outer() {
                    bail!("{name} has shape {}, expected {}", t.outer(), ts[i].outer());
                }
                ts[i] = t;
            }
        }
        Ok(ts)
    }

    fn cartons(&self, parallel: bool) -> anyhow::Result<Vec<Carton>> {
        let ts = self.tableaux()?;
        Ok(if parallel {
            enumerate_cartons_par(self.rect, &ts[0], &ts[1], &ts[2])?
        } else {
            enumerate_cartons(self.rect, &ts[0], &ts[1], &ts[2])?.collect::<Result<_, _>>()?
        })
    }
}

fn rect_json(r: Rectangle) -> RectJson {
    RectJson { ell: r.ell(), k: r.k() }
}

/// Usage and input errors map to exit code 1; failed checks return 2.
pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Count { instance, verbose, format } => {
            let ts = instance.tableaux()?;
            let [l, m, n] = instance.triple();
            let count = enumerate_cartons(instance.rect, &ts[0], &ts[1], &ts[2])?.try_fold(0u64, |k, c| c.map(|_| k + 1))?;
            let oracles = verbose.then(|| -> anyhow::Result<(u64, u64)> {
                Ok((lr_triple(instance.rect, &l, &m, &n)?, lr_via_rectification(instance.rect, &l, &m, &n)?))
            });
            let oracles = oracles.transpose()?;
            match format {
                Format::Text => {
                    writeln!(out, "{count}")?;
                    if let Some((b, r)) = oracles {
                        writeln!(out, "ballot {b}")?;
                        writeln!(out, "rectification {r}")?;
                    }
                }
                Format::Json => {
                    let doc = CountJson {
                        rect: rect_json(instance.rect),
                        lambda: json::partition(&l),
                        mu: json::partition(&m),
                        nu: json::partition(&n),
                        count,
                        ballot: oracles.map(|o| o.0),
                        rectification: oracles.map(|o| o.1),
                    };
                    writeln!(out, "{}", serde_json::to_string(&doc)?)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { instance, format, parallel } => {
            let mut n = 0;
            let mut emit = |ca: &Carton, out: &mut dyn Write| -> anyhow::Result<()> {
                n += 1;
                match format {
                    Format::Text => {
                        writeln!(out, "carton {n}")?;
                        writeln!(out, "witness {}", ca.witness())?;
                        writeln!(out)?;
                        writeln!(out, "{}", render::carton(ca))?;
                    }
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&CartonJson::from(ca))?)?,
                }
                Ok(())
            };
            if parallel {
                for ca in instance.cartons(true)? {
                    emit(&ca, out)?;
                }
            } else {
                let ts = instance.tableaux()?;
                for ca in enumerate_cartons(instance.rect, &ts[0], &ts[1], &ts[2])? {
                    emit(&ca?, out)?;
                }
            }
            if format == Format::Text {
                writeln!(out, "count {n}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Growth { left, top, format } => {
            let left = parse_chain(&left).context("--left")?;
            let top = parse_chain(&top).context("--top")?;
            let g = grow_rectangle(&left, &top)?;
            match format {
                Format::Text => write!(out, "{}", render::growth(&g))?,
                Format::Json => writeln!(out, "{}", serde_json::to_string(&GrowthJson::from(&g))?)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            rect,
            max_size,
            seed,
            parallel,
            format,
        } => {
            let opts = SelftestOptions { seed, max_size, parallel };
            let small = rect.area() <= 6;
            let sweep = verify::sweep(
                rect,
                SweepOptions {
                    generic: small,
                    symmetry: true,
                    parallel,
                },
            );
            if format == Format::Text {
                writeln!(out, "seed {seed}")?;
                writeln!(out, "{}", matrix(&sweep))?;
            }
            let mut suites = vec![verify::summarize_sweep(format!("every triple in {rect}"), &sweep)];
            let props = verify::verify_rect(rect, opts);
            suites.extend(props.into_iter().skip(1));
            report(&suites, format, out)
        }
        Command::Symmetry { instance, sigma, format } => symmetry(&instance, sigma, format, out),
        Command::Selftest {
            max_size,
            seed,
            parallel,
            format,
        } => {
            if format == Format::Text {
                writeln!(out, "seed {seed}")?;
            }
            let suites = verify::selftest(SelftestOptions { seed, max_size, parallel });
            report(&suites, format, out)
        }
    }
}

/// One line per triple with a nonzero coefficient or a failure.
fn matrix(results: &[verify::TripleResult]) -> String {
    let flag = |b: Option<bool>| match b {
        Some(true) => "ok",
        Some(false) => "FAIL",
        None => "-",
    };
    let mut rows = vec![["λ", "μ", "ν", "cartons", "ballot", "rectification", "generic", "S3", "status"]
        .map(String::from)
        .to_vec()];
    for r in results.iter().filter(|r| r.cartons > 0 || r.ballot > 0 || !r.passed()) {
        let [l, m, n] = &r.triple;
        rows.push(vec![
            l.to_string(),
            m.to_string(),
            n.to_string(),
            r.cartons.to_string(),
            r.ballot.to_string(),
            r.rectification.to_string(),
            flag(r.generic_agrees).into(),
            flag(r.symmetric).into(),
            if r.passed() { "PASS".into() } else { "FAIL".into() },
        ]);
    }
    render::grid(&rows)
}

fn report(suites: &[SuiteReport], format: Format, out: &mut dyn Write) -> anyhow::Result<i32> {
    let passed = suites.iter().filter(|s| s.passed()).count();
    match format {
        Format::Text => {
            for s in suites {
                writeln!(out, "{s}")?;
            }
            writeln!(out, "{passed} of {} suites passed", suites.len())?;
        }
        Format::Json => {
            let docs: Vec<SuiteJson> = suites.iter().map(SuiteJson::from).collect();
            writeln!(out, "{}", serde_json::to_string(&docs)?)?;
        }
    }
    Ok(if passed == suites.len() { EXIT_OK } else { EXIT_VERIFY })
}

fn symmetry(instance: &Instance, sigma: Permutation, format: Format, out: &mut dyn Write) -> anyhow::Result<i32> {
    let ours = instance.cartons(false)?;
    let ts = instance.tableaux()?;
    let pts = sigma.apply(&ts);
    let theirs: Vec<Carton> =
        enumerate_cartons(instance.rect, &pts[0], &pts[1], &pts[2])?.collect::<Result<_, _>>()?;
    let [l, m, n] = sigma.apply(&instance.triple());
    let mut ok = ours.len() == theirs.len();
    let mut pairs = Vec::new();
    let mut hit = vec![false; theirs.len()];
    for (i, ca) in ours.iter().enumerate() {
        let img = permute_carton(ca, sigma)?;
        let report = validate_carton(&img);
        let j = theirs.iter().position(|c| *c == img);
        let back = permute_carton(&img, sigma.inverse()).ok().as_ref() == Some(ca);
        match j {
            Some(j) if report.is_valid() && back && !hit[j] => hit[j] = true,
            _ => ok = false,
        }
        pairs.push((i + 1, j.map(|j| j + 1), report));
    }
    match format {
        Format::Text => {
            writeln!(out, "sigma {sigma}: ({}, {}, {}) to ({l}, {m}, {n})", instance.lambda, instance.mu, instance.nu)?;
            for (i, j, report) in &pairs {
                match j {
                    Some(j) => writeln!(out, "{i} <-> {j}")?,
                    None => writeln!(out, "{i} -> no carton ({report})")?,
                }
            }
            writeln!(
                out,
                "{} {} cartons, {} cartons for the permuted triple",
                if ok { "bijection:" } else { "FAILED:" },
                ours.len(),
                theirs.len()
            )?;
        }
        Format::Json => {
            let doc = serde_json::json!({
                "sigma": sigma.to_string(),
                "pairs": pairs.iter().map(|(i, j, _)| serde_json::json!([i, j])).collect::<Vec<_>>(),
                "bijection": ok,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}

/// Parses `args` and runs; prints errors to stderr and returns the exit code.
pub fn main_with(args: impl IntoIterator<Item = std::ffi::OsString>, out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}
