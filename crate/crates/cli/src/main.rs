mod config;

use std::cmp::Ordering;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use braid_core::conjugacy::{are_conjugate_with_cap, geodesic_length, ultra_summit_set_with};
use braid_core::diagram::{self, closure, destabilize, homfly_via_skein_with_budget, stabilize, LinkDiagram};
use braid_core::dual::{self, band_to_classical, render_dual, BandWord};
use braid_core::garside::{classical, equal, normalize, Classical};
use braid_core::hecke::{alexander_from_homfly, homfly_via_trace, jones_from_homfly, mfw_bound};
use braid_core::laurent::{LaurentPoly, Vars};
use braid_core::representations::{alexander, burau_reduced, burau_unreduced, lk_matrix, singular_equal, PolyMatrix, SingularBraidWord};
use braid_core::{ordering, selftest, stats, BraidWord, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use config::{CliConfig, Format};

#[derive(Parser, Debug)]
#[command(name = "braid", version, about = "Braid group computations")]
struct Cli {
    /// Output format (overrides the config file)
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// JSON config file with format, uss_cap, skein_budget and variables
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    uss_cap: Option<usize>,
    #[arg(long, global = true)]
    skein_budget: Option<usize>,
    /// Report elapsed_ms as 0 so JSON output is byte-stable
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Left normal form `D^i | p1 | p2 | ...`
    Nf { word: String },
    /// Whether two words represent the same braid
    Eq { u: String, v: String },
    /// Conjugacy test with a conjugating word `c`, `v = c^-1 u c`
    Conj { u: String, v: String },
    /// Ultra summit set, one normal form per line
    Uss { word: String },
    /// Shortest length over the conjugacy class in simples and their inverses
    Geodesic { word: String },
    /// Normal form for the band generator structure (band or classical word)
    DualNf { word: String },
    /// Matrix representation as rows of polynomials
    Rep { kind: RepKind, word: String },
    /// Knot and link polynomials of a closed braid or diagram
    Invariant {
        kind: InvariantKind,
        input: String,
        /// Treat the input as a diagram in PD format
        #[arg(long)]
        diagram: bool,
    },
    /// Closed braid for a PD diagram via Seifert circles
    Fromdiagram { diagram: String },
    /// PD diagram of the closure of a braid
    Closure { word: String },
    /// Appends σ_n or σ_n^-1 on a new strand
    Stabilize {
        word: String,
        #[arg(long)]
        negative: bool,
    },
    /// Removes the last strand when it meets a single crossing
    Destabilize { word: String },
    /// Left-invariant order: `<`, `=` or `>`
    Order { u: String, v: String },
    /// Equality of singular braids, e.g. `3: 1 t2 -1`
    SingularEq { a: String, b: String },
    /// Runs the acceptance checks
    Selftest {
        /// Run a single criterion by number
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RepKind {
    Burau,
    BurauReduced,
    Lk,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InvariantKind {
    Homfly,
    Jones,
    Alexander,
    Mfw,
}

enum Failure {
    Usage(String),
    Domain(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            Error::ResourceCap { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(String, Value), Failure>;

struct Ctx {
    cfg: CliConfig,
    inputs: Vec<String>,
}

impl Ctx {
    /// A file path is read; anything else is taken literally.
    fn read(&mut self, arg: &str) -> Result<String, Failure> {
        let p = Path::new(arg);
        let text = if p.is_file() {
            std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?.trim().to_string()
        } else {
            arg.to_string()
        };
        self.inputs.push(text.clone());
        Ok(text)
    }

    fn parse<T: std::str::FromStr<Err = Error>>(&mut self, arg: &str) -> Result<T, Failure> {
        self.read(arg)?.parse::<T>().map_err(|e| Failure::Usage(e.to_string()))
    }

    fn word(&mut self, arg: &str) -> Result<BraidWord, Failure> {
        self.parse(arg)
    }

    fn diagram(&mut self, arg: &str) -> Result<LinkDiagram, Failure> {
        self.parse(arg)
    }

    fn poly(&self, p: &LaurentPoly) -> LaurentPoly {
        rename(p, &self.cfg)
    }
}

fn rename(p: &LaurentPoly, cfg: &CliConfig) -> LaurentPoly {
    if cfg.variables.is_empty() {
        return p.clone();
    }
    let old = p.vars();
    let names: Vec<String> = old.names().iter().map(|n| cfg.variables.get(n).cloned().unwrap_or_else(|| n.clone())).collect();
    let spec: Vec<(&str, bool)> = names.iter().enumerate().map(|(i, n)| (n.as_str(), old.is_half(i))).collect();
    let vars = Vars::new(&spec);
    let mut out = LaurentPoly::zero(&vars);
    for (e, c) in p.terms() {
        out = &out + &LaurentPoly::monomial_raw(&vars, e.clone(), c.clone());
    }
    out
}

fn matrix_rows(m: &PolyMatrix, cfg: &CliConfig) -> Vec<Vec<String>> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| rename(m.get(i, j), cfg).to_string()).collect()).collect()
}

fn order_symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn run(cmd: &Command, ctx: &mut Ctx) -> Outcome {
    match cmd {
        Command::Nf { word } => {
            let nf = normalize(&ctx.word(word)?);
            Ok((nf.to_string(), nf.to_json()))
        }
        Command::Eq { u, v } => {
            let b = equal(&ctx.word(u)?, &ctx.word(v)?)?;
            Ok((b.to_string(), json!(b)))
        }
        Command::Conj { u, v } => {
            let (u, v) = (ctx.word(u)?, ctx.word(v)?);
            let cert = are_conjugate_with_cap(&u, &v, ctx.cfg.uss_cap)?;
            let value = match &cert {
                Some(c) => json!({ "conjugate": true, "witness": c.witness.to_word(&Classical::new(u.strands())).to_string() }),
                None => json!({ "conjugate": false, "witness": Value::Null }),
            };
            Ok((value.to_string(), value))
        }
        Command::Uss { word } => {
            let x = ctx.word(word)?;
            let uss = ultra_summit_set_with(&classical(x.strands()), &normalize(&x), ctx.cfg.uss_cap)?;
            let lines: Vec<String> = uss.elements.iter().map(|e| e.to_string()).collect();
            Ok((lines.join("\n"), json!(lines)))
        }
        Command::Geodesic { word } => {
            let g = geodesic_length(&ctx.word(word)?);
            Ok((g.to_string(), json!(g)))
        }
        Command::DualNf { word } => {
            let text = ctx.read(word)?;
            let band: BandWord = if text.contains('(') {
                text.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?
            } else {
                BandWord::from_classical(&text.parse::<BraidWord>().map_err(|e| Failure::Usage(e.to_string()))?)
            };
            let nf = dual::engine(band.strands()).normalize_band(&band)?;
            let e = dual::engine(band.strands());
            let value = json!({
                "normal_form": render_dual(&nf),
                "band_word": e.to_band_word(&nf).to_string(),
                "classical": band_to_classical(&e.to_band_word(&nf)).to_string(),
            });
            Ok((render_dual(&nf), value))
        }
        Command::Rep { kind, word } => {
            let x = ctx.word(word)?;
            let m = match kind {
                RepKind::Burau => burau_unreduced(&x),
                RepKind::BurauReduced => burau_reduced(&x)?,
                RepKind::Lk => lk_matrix(&x)?,
            };
            let rows = json!(matrix_rows(&m, &ctx.cfg));
            Ok((rows.to_string(), rows))
        }
        Command::Invariant { kind, input, diagram } => {
            let (homfly, word) = if *diagram {
                let d = ctx.diagram(input)?;
                (homfly_via_skein_with_budget(&d, ctx.cfg.skein_budget)?, None)
            } else {
                let x = ctx.word(input)?;
                (homfly_via_trace(&x), Some(x))
            };
            match kind {
                InvariantKind::Homfly => {
                    let p = ctx.poly(&homfly);
                    Ok((p.to_string(), json!({ "text": p.to_string(), "terms": p.to_json() })))
                }
                InvariantKind::Jones => {
                    let p = ctx.poly(&jones_from_homfly(&homfly)?);
                    Ok((p.to_string(), json!({ "text": p.to_string(), "terms": p.to_json() })))
                }
                InvariantKind::Alexander => {
                    let a = match &word {
                        Some(x) => alexander(x),
                        None => alexander_from_homfly(&homfly)?,
                    };
                    let p = ctx.poly(&a);
                    Ok((p.to_string(), json!({ "text": p.to_string(), "terms": p.to_json() })))
                }
                InvariantKind::Mfw => {
                    let b = mfw_bound(&homfly)?;
                    Ok((b.to_string(), json!(b)))
                }
            }
        }
        Command::Fromdiagram { diagram } => {
            let d = ctx.diagram(diagram)?;
            let yv = diagram::seifert::yamada_vogel(&d)?;
            let value = json!({
                "braid": yv.braid.to_string(),
                "seifert_circles": yv.circles,
                "initial_height": yv.initial_height,
                "reducing_moves": yv.moves,
                "heights": yv.heights,
            });
            Ok((yv.braid.to_string(), value))
        }
        Command::Closure { word } => {
            let d = closure(&ctx.word(word)?);
            let text = d.to_string();
            Ok((text.trim_end().to_string(), json!(text)))
        }
        Command::Stabilize { word, negative } => {
            let s = stabilize(&ctx.word(word)?, !negative);
            Ok((s.to_string(), json!(s.to_string())))
        }
        Command::Destabilize { word } => {
            let x = ctx.word(word)?;
            let d = destabilize(&x).ok_or_else(|| Failure::Domain(format!("{x} admits no destabilization")))?;
            Ok((d.to_string(), json!(d.to_string())))
        }
        Command::Order { u, v } => {
            let o = order_symbol(ordering::compare(&ctx.word(u)?, &ctx.word(v)?)?);
            Ok((o.to_string(), json!(o)))
        }
        Command::SingularEq { a, b } => {
            let sa: SingularBraidWord = ctx.parse(a)?;
            let sb: SingularBraidWord = ctx.parse(b)?;
            let r = singular_equal(&sa, &sb)?;
            Ok((r.to_string(), json!(r)))
        }
        Command::Selftest { only } => {
            let reports = match only {
                Some(id) => vec![selftest::run_one(*id).ok_or_else(|| Failure::Usage(format!("no criterion {id}; there are {}", selftest::criterion_count())))?],
                None => selftest::run_all(),
            };
            let text = reports.iter().map(selftest::render_line).collect::<Vec<_>>().join("\n");
            let value = json!(reports);
            if reports.iter().all(|r| r.passed) {
                Ok((text, value))
            } else {
                println!("{text}");
                Err(Failure::Domain(format!("{} of {} criteria failed", reports.iter().filter(|r| !r.passed).count(), reports.len())))
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Nf { .. } => "nf",
        Command::Eq { .. } => "eq",
        Command::Conj { .. } => "conj",
        Command::Uss { .. } => "uss",
        Command::Geodesic { .. } => "geodesic",
        Command::DualNf { .. } => "dual-nf",
        Command::Rep { .. } => "rep",
        Command::Invariant { .. } => "invariant",
        Command::Fromdiagram { .. } => "fromdiagram",
        Command::Closure { .. } => "closure",
        Command::Stabilize { .. } => "stabilize",
        Command::Destabilize { .. } => "destabilize",
        Command::Order { .. } => "order",
        Command::SingularEq { .. } => "singular-eq",
        Command::Selftest { .. } => "selftest",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = match &cli.config {
        Some(p) => match CliConfig::load(p) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        None => CliConfig::default(),
    };
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(c) = cli.uss_cap {
        cfg.uss_cap = c;
    }
    if let Some(b) = cli.skein_budget {
        cfg.skein_budget = b;
    }
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    stats::reset_cache_hits();
    let start = Instant::now();
    let format = cfg.format;
    let mut ctx = Ctx { cfg, inputs: Vec::new() };
    let outcome = run(&cli.command, &mut ctx);
    let elapsed_ms = if cli.no_timing { 0 } else { start.elapsed().as_millis() };
    match outcome {
        Ok((text, value)) => {
            match format {
                Format::Text => println!("{text}"),
                Format::Json => {
                    let doc = json!({
                        "command": command_name(&cli.command),
                        "input": ctx.inputs,
                        "result": value,
                        "stats": { "elapsed_ms": elapsed_ms, "cache_hits": stats::cache_hits() },
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Domain(m) => (1, m),
                Failure::Usage(m) => (2, m),
                Failure::Cap(m) => (3, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
