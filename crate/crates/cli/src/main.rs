use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gpc_core::constructions::{
    circular_complete, complete, coxeter, cycle, helical_with, kneser_with, mycielski, petersen,
    schrijver,
};
use gpc_core::hom::{core_with_retraction, exists_hom_with, HomCertificate};
use gpc_core::invariants::{
    chic_via_powers_with, chromatic_number_with, circular_chromatic_number_with, f_parameter_with,
    is_colorful_with, spectral_check, theta_h_lower_bound_with, thickness_lower_bound_with,
};
use gpc_core::io::{read_graph, to_dot, to_json};
use gpc_core::iso::find_isomorphism;
use gpc_core::powers::{fractional_power, negative_power_with, negative_unit_power_with, subdivide};
use gpc_core::verify::{self, Pool, VerifyBounds, VerifyReport};
use gpc_core::{Error, Graph, Limits, OddFraction, OddGirth};

#[derive(Parser)]
#[command(name = "gpc", version, about = "Graph powers, homomorphisms and colouring invariants")]
struct Cli {
    /// Print readable text instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Write graphs as DOT instead of JSON.
    #[arg(long, global = true)]
    dot: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, env = "GPC_JOBS")]
    jobs: Option<usize>,
    /// Branching nodes per homomorphism search before giving up.
    #[arg(long, global = true, env = "GPC_NODE_BUDGET")]
    node_budget: Option<u64>,
    /// Largest vertex count for helical and negative-power constructions.
    #[arg(long, global = true, env = "GPC_VERTEX_CAP")]
    vertex_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Cycle,
    Circular,
    Kneser,
    Schrijver,
    Helical,
    Petersen,
    Coxeter,
    Mycielski,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a named family.
    Make {
        family: Family,
        params: Vec<usize>,
    },
    /// t-subdivision S_t(G).
    Subdivide {
        input: PathBuf,
        #[arg(short = 't')]
        t: usize,
    },
    /// Fractional power G^{num/den}, or G^{-num/den} with --negative.
    Power {
        input: PathBuf,
        #[arg(short = 'n', long = "num", default_value_t = 1)]
        num: u32,
        #[arg(short = 'd', long = "den", default_value_t = 1)]
        den: u32,
        #[arg(long)]
        negative: bool,
    },
    /// Negative power G^{-1/(2s+1)}.
    Negpower {
        input: PathBuf,
        #[arg(short = 's')]
        s: usize,
    },
    /// Decide G -> H. Exit code 0: exists, 1: none, 2: error or undecided.
    Hom {
        g: PathBuf,
        h: PathBuf,
        /// Include the map.
        #[arg(long)]
        certificate: bool,
    },
    /// Chromatic number.
    Chi { input: PathBuf },
    /// Circular chromatic number.
    Chic { input: PathBuf },
    /// Upper bound on the circular chromatic number from cube-root powers.
    ChicPowers {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_t: u32,
        #[arg(long, default_value_t = 10)]
        max_n: u32,
    },
    /// Odd girth.
    Oddgirth { input: PathBuf },
    /// Lower bound for the power thickness, or for θ_H with --target.
    Thickness {
        input: PathBuf,
        #[arg(short = 'i', long, default_value_t = 0, allow_negative_numbers = true)]
        level: i64,
        #[arg(long, default_value_t = 2)]
        max_s: u32,
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Colorful-graph predicate. Exit code 0: colorful, 1: not, 2: error.
    Colorful { input: PathBuf },
    /// Largest odd cycle that S_{2t+1}(G) maps to.
    Fparam {
        input: PathBuf,
        #[arg(short = 't', default_value_t = 0)]
        t: u32,
        /// Defaults to the bound that makes the answer exact.
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Laplacian necessary condition for G -> C_{2n+1}.
    Spectral {
        input: PathBuf,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Core of G with a retraction.
    Core { input: PathBuf },
    /// Isomorphism test. Exit code 0: isomorphic, 1: not, 2: error.
    Iso { g: PathBuf, h: PathBuf },
    /// Run one verification suite. Exit code 0: all pass, 1: failures, 2: error.
    Verify {
        id: String,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_s: Option<u32>,
        #[arg(long)]
        max_den: Option<u32>,
        #[arg(long, default_value = "small")]
        pool: String,
        /// One CSV row per checked instance.
        #[arg(long)]
        csv: bool,
    },
}

struct Ctx {
    human: bool,
    dot: bool,
    out: Option<PathBuf>,
    limits: Limits,
}

impl Ctx {
    fn write(&self, text: &str) -> Result<(), Error> {
        match &self.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn graph(&self, g: &Graph) -> Result<(), Error> {
        if self.dot {
            self.write(&to_dot(g))
        } else {
            self.write(&to_json(g))
        }
    }

    fn value(&self, v: Value) -> Result<(), Error> {
        if self.human {
            let mut text = String::new();
            if let Value::Object(map) = &v {
                for (k, x) in map {
                    let shown = match x {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    text.push_str(&format!("{k}: {shown}\n"));
                }
            }
            self.write(&text)
        } else {
            self.write(&format!("{v}\n"))
        }
    }
}

fn params<const N: usize>(family: &str, p: &[usize]) -> Result<[usize; N], Error> {
    p.try_into().map_err(|_| {
        Error::Precondition(format!(
            "family `{family}` takes {N} parameter(s), got {}",
            p.len()
        ))
    })
}

fn make(family: Family, p: &[usize], limits: &Limits) -> Result<Graph, Error> {
    Ok(match family {
        Family::Complete => complete(params::<1>("complete", p)?[0]),
        Family::Cycle => {
            let [n] = params("cycle", p)?;
            if n < 3 {
                return Err(Error::Precondition("a cycle needs at least 3 vertices".into()));
            }
            cycle(n)
        }
        Family::Circular => {
            let [n, d] = params("circular", p)?;
            circular_complete(n, d)?
        }
        Family::Kneser => {
            let [m, n] = params("kneser", p)?;
            kneser_with(m, n, limits)?
        }
        Family::Schrijver => {
            let [m, n] = params("schrijver", p)?;
            schrijver(m, n)?
        }
        Family::Helical => {
            let [m, n, k] = params("helical", p)?;
            helical_with(m, n, k, limits)?
        }
        Family::Petersen => {
            params::<0>("petersen", p)?;
            petersen()
        }
        Family::Coxeter => {
            params::<0>("coxeter", p)?;
            coxeter()
        }
        Family::Mycielski => {
            let [k] = params("mycielski", p)?;
            if k < 2 {
                return Err(Error::Precondition("mycielski needs k >= 2".into()));
            }
            mycielski(k)
        }
    })
}

fn odd_girth_value(og: OddGirth) -> Value {
    match og {
        OddGirth::Finite(n) => json!(n),
        OddGirth::One => json!(1),
        OddGirth::Infinite => Value::Null,
    }
}

fn load(path: &Path) -> Result<Graph, Error> {
    read_graph(path)
}

fn predicate(b: bool) -> ExitCode {
    if b {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let mut limits = Limits::default();
    if let Some(b) = cli.node_budget {
        limits.node_budget = b;
    }
    if let Some(c) = cli.vertex_cap {
        limits.vertex_cap = c;
    }
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| Error::Precondition(format!("cannot start {j} workers: {e}")))?;
    }
    let ctx = Ctx {
        human: cli.human,
        dot: cli.dot,
        out: cli.out,
        limits,
    };
    let limits = &ctx.limits;
    match cli.command {
        Command::Make { family, params } => ctx.graph(&make(family, &params, limits)?)?,
        Command::Subdivide { input, t } => ctx.graph(&subdivide(&load(&input)?, t)?)?,
        Command::Power {
            input,
            num,
            den,
            negative,
        } => {
            let g = load(&input)?;
            let e = OddFraction::from_odd(num, den)?;
            let p = if negative {
                if num > den {
                    return Err(Error::Precondition(format!(
                        "negative exponent -{num}/{den} needs numerator <= denominator"
                    )));
                }
                // G^{-(2s+1)/(2r+1)} with 2s+1 = num, 2r+1 = den.
                negative_power_with(&g, e.r as usize, e.s as usize, limits)?
            } else {
                fractional_power(&g, e)?
            };
            ctx.graph(&p)?
        }
        Command::Negpower { input, s } => ctx.graph(&negative_unit_power_with(&load(&input)?, s, limits)?)?,
        Command::Hom { g, h, certificate } => {
            let (g, h) = (load(&g)?, load(&h)?);
            let cert = exists_hom_with(&g, &h, limits)?;
            let mut v = json!({ "exists": cert.exists() });
            match &cert {
                HomCertificate::Exists(m) if certificate => {
                    let pairs: Vec<[String; 2]> = m
                        .to_labels(&g, &h)
                        .into_iter()
                        .map(|(a, b)| [a.render(), b.render()])
                        .collect();
                    v["map"] = json!(pairs);
                }
                HomCertificate::None { nodes_explored } => v["nodes_explored"] = json!(nodes_explored),
                _ => {}
            }
            ctx.value(v)?;
            return Ok(predicate(cert.exists()));
        }
        Command::Chi { input } => {
            let chi = chromatic_number_with(&load(&input)?, limits)?;
            ctx.value(json!({ "chi": chi }))?
        }
        Command::Chic { input } => {
            let c = circular_chromatic_number_with(&load(&input)?, limits)?;
            ctx.value(json!({ "chi_c": c, "num": c.num, "den": c.den }))?
        }
        Command::ChicPowers { input, max_t, max_n } => {
            let sweep = chic_via_powers_with(&load(&input)?, max_t, max_n, limits)?;
            ctx.value(json!(sweep))?
        }
        Command::Oddgirth { input } => {
            let og = load(&input)?.odd_girth();
            ctx.value(json!({ "odd_girth": odd_girth_value(og) }))?
        }
        Command::Thickness {
            input,
            level,
            max_s,
            target,
        } => {
            let g = load(&input)?;
            let est = match target {
                Some(h) => theta_h_lower_bound_with(&g, &load(&h)?, max_s, limits)?,
                None => thickness_lower_bound_with(&g, level, max_s, limits)?,
            };
            ctx.value(json!(est))?
        }
        Command::Colorful { input } => {
            let c = is_colorful_with(&load(&input)?, limits)?;
            ctx.value(json!({ "colorful": c }))?;
            return Ok(predicate(c));
        }
        Command::Fparam { input, t, max_n } => {
            let g = load(&input)?;
            let max_n = match (max_n, g.odd_girth()) {
                (Some(n), _) => n,
                (None, OddGirth::Finite(og)) => ((2 * t + 1) * og as u32 - 1) / 2,
                (None, _) => return Err(Error::Bipartite),
            };
            let f = f_parameter_with(&g, t, max_n, limits)?;
            ctx.value(json!({ "f": f, "t": t, "max_n": max_n }))?
        }
        Command::Spectral { input, n } => ctx.value(json!(spectral_check(&load(&input)?, n)?))?,
        Command::Core { input } => {
            let g = load(&input)?;
            let (core, r) = core_with_retraction(&g, limits)?;
            if ctx.human || ctx.dot {
                ctx.graph(&core)?;
            } else {
                let retraction: Vec<[String; 2]> = r
                    .iter()
                    .enumerate()
                    .map(|(v, &c)| [g.name(v).to_string(), core.name(c).to_string()])
                    .collect();
                let core_json: Value = serde_json::from_str(&to_json(&core))?;
                ctx.value(json!({ "core": core_json, "retraction": retraction }))?
            }
        }
        Command::Iso { g, h } => {
            let (g, h) = (load(&g)?, load(&h)?);
            let map = find_isomorphism(&g, &h);
            let mut v = json!({ "isomorphic": map.is_some() });
            if let Some(m) = &map {
                let pairs: Vec<[String; 2]> = m
                    .iter()
                    .enumerate()
                    .map(|(a, &b)| [g.name(a).to_string(), h.name(b).to_string()])
                    .collect();
                v["map"] = json!(pairs);
            }
            ctx.value(v)?;
            return Ok(predicate(map.is_some()));
        }
        Command::Verify {
            id,
            max_n,
            max_s,
            max_den,
            pool,
            csv,
        } => {
            let defaults = VerifyBounds::default();
            let bounds = VerifyBounds {
                max_n: max_n.unwrap_or(defaults.max_n),
                max_s: max_s.unwrap_or(defaults.max_s),
                max_den: max_den.unwrap_or(defaults.max_den),
                pool: pool.parse::<Pool>()?,
            };
            let report = verify::run(&id, &bounds, limits)?;
            emit_report(&ctx, &report, csv)?;
            return Ok(predicate(report.passed()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_report(ctx: &Ctx, report: &VerifyReport, csv: bool) -> Result<(), Error> {
    if csv {
        ctx.write(&format!("{}\n{}", VerifyReport::CSV_HEADER, report.csv_rows()))
    } else if ctx.human {
        ctx.write(&report.to_string())
    } else {
        ctx.write(&format!("{}\n", serde_json::to_string(report)?))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
