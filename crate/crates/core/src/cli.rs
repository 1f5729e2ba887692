//! Command-line front end. `run` and `corpus` print a JSON report on stdout and a table
//! on stderr; the single-operation subcommands print their result and, with `--json`, the
//! full check record.
//!
//! Exit codes: 0 success, 1 verdict mismatch or resource limit, 2 usage or parse error.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::checks::execute;
use crate::corpus::run_corpus;
use crate::demazure::parse_rational;
use crate::error::{Error, Result};
use crate::manifest::{build_divisor, Bounds, CheckEntry, CheckSpec, Manifest, RingSpec, SubringSpec, DEFAULT_NAME};
use crate::report::{run_manifest, Report, RunOptions};

#[derive(Parser, Debug)]
#[command(
    name = "fsing",
    version,
    about = "Frobenius singularities of graded rings over prime fields"
)]
pub struct Cli {
    /// Characteristic; overrides the one in ring descriptions.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Search bound: Frobenius levels, series truncation or zero-test stages, per command.
    #[arg(long, global = true)]
    pub bound: Option<u64>,
    /// Print the JSON check record instead of the plain result.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock timings in reports.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct RingArgs {
    /// Ring description file (`p`, `vars`, `weights`, `relations`).
    #[arg(long)]
    pub ring: Option<PathBuf>,
    /// Variables, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Weights, comma separated (default all 1).
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<u32>,
    /// A defining relation; repeat for several.
    #[arg(long = "rel")]
    pub relations: Vec<String>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SubringArgs {
    /// Subring generator; repeat for several.
    #[arg(long = "gen")]
    pub generators: Vec<String>,
    /// Ambient degree of internal degree one.
    #[arg(long)]
    pub unit: Option<u64>,
    /// Use the Veronese subring of this index.
    #[arg(long = "veronese-of")]
    pub veronese: Option<u64>,
}

impl SubringArgs {
    fn spec(&self) -> Option<SubringSpec> {
        if self.generators.is_empty() && self.veronese.is_none() {
            return None;
        }
        Some(SubringSpec {
            generators: (!self.generators.is_empty()).then(|| self.generators.clone()),
            unit: self.unit,
            veronese: self.veronese,
            word_cap: None,
        })
    }

    fn required(&self) -> Result<SubringSpec> {
        self.spec()
            .ok_or_else(|| Error::Usage("this command needs --gen or --veronese-of".into()))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every check in a manifest.
    Run {
        manifest: PathBuf,
        #[arg(long)]
        skip_expensive: bool,
    },
    /// Run the built-in corpus, or one item of it.
    Corpus {
        id: Option<String>,
        #[arg(long)]
        skip_expensive: bool,
        /// List corpus ids.
        #[arg(long)]
        list: bool,
    },
    /// Reduced Gröbner basis of an ideal of the ambient polynomial ring.
    Gb {
        #[command(flatten)]
        ring: RingArgs,
        generators: Vec<String>,
    },
    /// Normal form modulo the relations, or modulo relations plus `--ideal`.
    Nf {
        #[command(flatten)]
        ring: RingArgs,
        element: String,
        #[arg(long)]
        ideal: Vec<String>,
    },
    /// Ideal membership in the quotient (or in a subring).
    Member {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        subring: SubringArgs,
        element: String,
        #[arg(long)]
        ideal: Vec<String>,
    },
    /// Frobenius closure membership, searched up to `--bound` levels.
    Fclosure {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        subring: SubringArgs,
        element: String,
        #[arg(long)]
        ideal: Vec<String>,
    },
    /// Fedder's F-purity criterion.
    Fedder {
        #[command(flatten)]
        ring: RingArgs,
        /// Use the colon criterion even for hypersurfaces.
        #[arg(long)]
        general: bool,
    },
    /// Bounded tight closure certificate.
    TcCert {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        subring: SubringArgs,
        element: String,
        #[arg(long)]
        ideal: Vec<String>,
        #[arg(long)]
        multiplier: Option<String>,
        /// `bracket` or `ordinary`.
        #[arg(long)]
        mode: Option<String>,
        /// `a,b` for the element exponent `a q + b`.
        #[arg(long, value_delimiter = ',', num_args = 2)]
        element_exponent: Option<Vec<i64>>,
        /// `a,b` for the ideal power `a q + b`.
        #[arg(long, value_delimiter = ',', num_args = 2)]
        ideal_exponent: Option<Vec<i64>>,
    },
    /// Hilbert series and its first coefficients.
    Hilbert {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// a-invariant.
    Ainv {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Veronese subring: Hilbert function and a-invariant.
    Veronese {
        #[command(flatten)]
        ring: RingArgs,
        n: u64,
    },
    /// Multiplicity, from the series or from a subring's Hilbert function.
    Multiplicity {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        subring: SubringArgs,
        #[arg(long)]
        dimension: usize,
    },
    /// Hilbert function of a graded subalgebra.
    SubringHf {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        subring: SubringArgs,
    },
    /// Membership in an ideal of a graded subalgebra.
    SubringMember {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        subring: SubringArgs,
        element: String,
        #[arg(long)]
        ideal: Vec<String>,
        #[arg(long)]
        power: Option<usize>,
    },
    /// Whether the Veronese subring of index n is generated in degree one.
    Equalgen {
        #[command(flatten)]
        ring: RingArgs,
        n: u64,
    },
    /// Relations among subring generators.
    Present {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        subring: SubringArgs,
        #[arg(long, value_delimiter = ',')]
        symbols: Vec<String>,
        #[arg(long)]
        contains: Vec<String>,
    },
    /// Q-divisors on the projective line, written `label=p/q,label=p/q`.
    Divisor {
        divisor: String,
        #[arg(long)]
        profile: Option<usize>,
        #[arg(long)]
        veronese: Option<i64>,
        #[arg(long)]
        frac: bool,
        #[arg(long)]
        floor: Option<i64>,
        #[arg(long)]
        section_dim: Option<i64>,
        /// Compare fractional parts with another divisor.
        #[arg(long)]
        same_class: Option<String>,
    },
    /// A Čech class in top local cohomology.
    LcClass {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_delimiter = ',')]
        sop: Vec<String>,
        #[arg(long)]
        numerator: String,
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<u64>,
        #[arg(long)]
        degree: bool,
        #[arg(long)]
        frob: Option<u32>,
        #[arg(long)]
        iszero: bool,
    },
}

fn ring_spec(args: &RingArgs, p: Option<u64>) -> Result<RingSpec> {
    if let Some(path) = &args.ring {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
        let m = Manifest::parse_with(&text, p)?;
        let mut spec = m
            .ring_specs
            .get(DEFAULT_NAME)
            .cloned()
            .ok_or_else(|| Error::Usage(format!("{} defines no top-level ring", path.display())))?;
        if let Some(p) = p {
            spec.p = p;
        }
        return Ok(spec);
    }
    if args.vars.is_empty() {
        return Err(Error::Usage("give a ring with --ring FILE or --vars".into()));
    }
    Ok(RingSpec {
        p: p.ok_or_else(|| Error::Usage("--p is required with --vars".into()))?,
        vars: args.vars.clone(),
        weights: (!args.weights.is_empty()).then(|| args.weights.clone()),
        relations: args.relations.clone(),
    })
}

fn parse_divisor_arg(text: &str) -> Result<Vec<(String, String)>> {
    text.split(',')
        .map(|part| {
            let (label, coeff) = part
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("expected label=p/q, got `{part}`")))?;
            parse_rational(coeff)?;
            Ok((label.trim().to_string(), coeff.trim().to_string()))
        })
        .collect()
}

fn bounds(cli: &Cli) -> Bounds {
    let mut b = Bounds::default();
    if let Some(v) = cli.bound {
        b.levels = v as u32;
        b.s_max = v;
        b.truncation = v as usize;
    }
    b
}

fn ring_manifest(cli: &Cli, args: &RingArgs, checks: Vec<CheckEntry>) -> Result<Manifest> {
    let spec = ring_spec(args, cli.p)?;
    let q = spec.build(None)?;
    let mut m = Manifest::single(Some((&spec, q)), None, checks[0].clone(), bounds(cli));
    m.checks = checks;
    Ok(m)
}

fn single_command(cli: &Cli) -> Result<Manifest> {
    let one = |spec: CheckSpec| vec![CheckEntry::new(spec)];
    let bound = cli.bound;
    Ok(match &cli.command {
        Command::Run { .. } | Command::Corpus { .. } => unreachable!(),
        Command::Gb { ring, generators } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::Gb {
                ideal: generators.clone(),
            }),
        )?,
        Command::Nf { ring, element, ideal } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::Nf {
                element: element.clone(),
                ideal: (!ideal.is_empty()).then(|| ideal.clone()),
            }),
        )?,
        Command::Member {
            ring,
            subring,
            element,
            ideal,
        } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::Member {
                element: element.clone(),
                ideal: ideal.clone(),
                subring: subring.spec(),
            }),
        )?,
        Command::Fclosure {
            ring,
            subring,
            element,
            ideal,
        } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::Fclosure {
                element: element.clone(),
                ideal: ideal.clone(),
                levels: bound.map(|b| b as u32),
                subring: subring.spec(),
            }),
        )?,
        Command::Fedder { ring, general } => ring_manifest(cli, ring, one(CheckSpec::Fedder { general: *general }))?,
        Command::TcCert {
            ring,
            subring,
            element,
            ideal,
            multiplier,
            mode,
            element_exponent,
            ideal_exponent,
        } => {
            let pair = |v: &Option<Vec<i64>>| v.as_ref().map(|v| [v[0], v[1]]);
            ring_manifest(
                cli,
                ring,
                one(CheckSpec::TcCert {
                    multiplier: multiplier.clone(),
                    element: element.clone(),
                    ideal: ideal.clone(),
                    levels: bound.map(|b| b as u32),
                    mode: mode.clone(),
                    element_exponent: pair(element_exponent),
                    ideal_exponent: pair(ideal_exponent),
                    subring: subring.spec(),
                }),
            )?
        }
        Command::Hilbert { ring } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::Hilbert {
                truncation: bound.map(|b| b as usize),
            }),
        )?,
        Command::Ainv { ring } => ring_manifest(cli, ring, one(CheckSpec::Ainv {}))?,
        Command::Veronese { ring, n } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::Veronese {
                n: *n,
                truncation: bound.map(|b| b as usize),
            }),
        )?,
        Command::Multiplicity {
            ring,
            subring,
            dimension,
        } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::Multiplicity {
                dimension: *dimension,
                subring: subring.spec(),
                bound,
            }),
        )?,
        Command::SubringHf { ring, subring } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::SubringHf {
                subring: subring.required()?,
                bound,
            }),
        )?,
        Command::SubringMember {
            ring,
            subring,
            element,
            ideal,
            power,
        } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::SubringMember {
                subring: subring.required()?,
                element: element.clone(),
                ideal: ideal.clone(),
                power: *power,
            }),
        )?,
        Command::Equalgen { ring, n } => ring_manifest(cli, ring, one(CheckSpec::Equalgen { n: *n, bound }))?,
        Command::Present {
            ring,
            subring,
            symbols,
            contains,
        } => ring_manifest(
            cli,
            ring,
            one(CheckSpec::Present {
                subring: subring.required()?,
                symbols: (!symbols.is_empty()).then(|| symbols.clone()),
                contains: (!contains.is_empty()).then(|| contains.clone()),
            }),
        )?,
        Command::Divisor {
            divisor,
            profile,
            veronese,
            frac,
            floor,
            section_dim,
            same_class,
        } => {
            let mut divisors = BTreeMap::new();
            divisors.insert(DEFAULT_NAME.to_string(), build_divisor(&parse_divisor_arg(divisor)?)?);
            let op = |op: &str, n: Option<i64>, bound: Option<usize>, other: Option<String>| {
                CheckEntry::new(CheckSpec::Divisor {
                    op: op.into(),
                    n,
                    bound,
                    other,
                })
            };
            let mut checks = Vec::new();
            if let Some(n) = floor {
                checks.push(op("floor", Some(*n), None, None));
            }
            if let Some(n) = section_dim {
                checks.push(op("section-dim", Some(*n), None, None));
            }
            if *frac {
                checks.push(op("frac", None, None, None));
            }
            if let Some(n) = veronese {
                checks.push(op("veronese", Some(*n), None, None));
            }
            if let Some(b) = profile {
                checks.push(op("profile", None, Some(*b), None));
            }
            if let Some(other) = same_class {
                divisors.insert("other".into(), build_divisor(&parse_divisor_arg(other)?)?);
                checks.push(op("same-class", None, None, Some("other".into())));
            }
            if checks.is_empty() {
                return Err(Error::Usage(
                    "give at least one of --floor, --section-dim, --frac, --veronese, --profile, --same-class".into(),
                ));
            }
            Manifest {
                rings: BTreeMap::new(),
                ring_specs: BTreeMap::new(),
                divisors,
                bounds: bounds(cli),
                checks,
            }
        }
        Command::LcClass {
            ring,
            sop,
            numerator,
            exponents,
            degree,
            frob,
            iszero,
        } => {
            let entry = |op: &str| {
                CheckEntry::new(CheckSpec::LcClass {
                    sop: sop.clone(),
                    numerator: numerator.clone(),
                    exponents: exponents.clone(),
                    frob: *frob,
                    op: Some(op.into()),
                    bound,
                })
            };
            let mut checks = Vec::new();
            if *degree {
                checks.push(entry("degree"));
            }
            if *iszero || !*degree {
                checks.push(entry("iszero"));
            }
            ring_manifest(cli, ring, checks)?
        }
    })
}

fn print_report(report: &Report) {
    println!("{}", report.to_json());
    eprint!("{}", report.to_table());
}

fn value_line(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Runs the command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match run_inner(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fsing: {e}");
            e.exit_code()
        }
    }
}

fn run_inner(cli: &Cli) -> Result<i32> {
    let options = RunOptions {
        timings: cli.timings,
        skip_expensive: false,
    };
    match &cli.command {
        Command::Run {
            manifest,
            skip_expensive,
        } => {
            let text = std::fs::read_to_string(manifest)
                .map_err(|e| Error::Usage(format!("cannot read {}: {e}", manifest.display())))?;
            let m = Manifest::parse_with(&text, cli.p)?;
            let report = run_manifest(
                &m,
                RunOptions {
                    skip_expensive: *skip_expensive,
                    ..options
                },
            );
            print_report(&report);
            Ok(report.exit_code())
        }
        Command::Corpus {
            id,
            skip_expensive,
            list,
        } => {
            if *list {
                for item in crate::corpus::ITEMS {
                    println!("{:<6} {}", item.id, item.title);
                }
                println!("{:<6} randomized property suites", crate::corpus::PROPS_ID);
                return Ok(0);
            }
            let report = run_corpus(
                id.as_deref(),
                RunOptions {
                    skip_expensive: *skip_expensive,
                    ..options
                },
            )?;
            print_report(&report);
            Ok(report.exit_code())
        }
        _ => {
            let m = single_command(cli)?;
            if cli.json {
                let report = run_manifest(&m, options);
                println!("{}", report.to_json());
                return Ok(report.exit_code());
            }
            for entry in &m.checks {
                let out = execute(&m, entry)?;
                println!("{}", value_line(&out.value));
                if let Some(d) = &out.detail {
                    println!("  {d}");
                }
                if let Some(w) = &out.witness {
                    println!("  witness: {}", value_line(w));
                }
            }
            Ok(0)
        }
    }
}
