//! Command-line front end for `symprod-core`.
//!
//! Every command maps onto one library call; `outputs` is that call's
//! result serialized with `serde_json`, so `--json` output can be compared
//! directly against the library.

mod input;
pub mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use symprod_core::embedding::{
    self, default_parameters, singular_points_sample, singular_points_search, ConicParametrization, SingularMode,
};
use symprod_core::linear_series::{self, CurveClass, DEFAULT_D_MARGIN};
use symprod_core::ns_calculus::{self, DivisorClass, SymmetricProductSpace};
use symprod_core::{arith, Error};

/// Environment variable holding the default worker count for `series search`.
pub const WORKERS_ENV: &str = "SYMPROD_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub exit_code: i32,
}

impl CommandResult {
    fn ok(command: &str, inputs: Value, outputs: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            outputs,
            exit_code: EXIT_OK,
        }
    }

    fn failure(command: &str, inputs: Value, code: &str, message: String, exit_code: i32) -> Self {
        Self {
            command: command.into(),
            inputs,
            outputs: json!({ "error": { "code": code, "message": message } }),
            exit_code,
        }
    }

    pub fn is_help(&self) -> bool {
        self.command == "help"
    }

    /// Text for stdout: the JSON record, or the aligned table.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            return serde_json::to_string_pretty(self).expect("JSON values serialize") + "\n";
        }
        if self.is_help() {
            return self.outputs["text"].as_str().unwrap_or_default().to_string();
        }
        render::table(&self.outputs)
    }
}

#[derive(Parser, Debug)]
#[command(name = "symprod", version, about = "Exact intersection numbers, series bounds and plane-curve embeddings")]
struct Cli {
    /// Emit the full command record as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Intersection calculus on C(n).
    #[command(subcommand)]
    Ns(NsCommand),
    /// Linear series bounds and the degree search.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// The map C(3) -> P^9 and its helpers.
    #[command(subcommand)]
    Embed(EmbedCommand),
    /// The plane quintic through a conic.
    #[command(subcommand)]
    Quintic(QuinticCommand),
    /// Plane curve utilities.
    #[command(subcommand)]
    Curve(CurveCommand),
}

#[derive(Args, Debug)]
struct Space {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand, Debug)]
enum NsCommand {
    /// Top intersection of n classes given as `xi,theta;xi,theta;...`.
    Intersect {
        #[command(flatten)]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        classes: String,
    },
    /// Top self-intersection of L(n)^s or L(n)^a for deg L = d.
    Degree {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Sym,
    Alt,
}

#[derive(Subcommand, Debug)]
enum SeriesCommand {
    /// Largest r of a g^r_9, with the derivation.
    #[command(name = "max-r9")]
    MaxR9 {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        hyperelliptic: bool,
        #[arg(long)]
        trigonal: bool,
    },
    /// Castelnuovo's bound on the genus of a degree-d curve in P^r.
    Castelnuovo {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: i64,
    },
    /// Scan (g, d) pairs for anti-symmetrized degrees at most 125.
    Search {
        #[arg(long)]
        g_min: u32,
        #[arg(long)]
        g_max: u32,
        /// Defaults to g-max + 10.
        #[arg(long)]
        d_max: Option<u32>,
        /// Defaults to $SYMPROD_WORKERS, else 1.
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum EmbedCommand {
    /// Image of a divisor x1 + x2 + x3 in P^9.
    Phi {
        /// JSON file, inline JSON, or `a,b,c;a,b,c;a,b,c`.
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Cubic Veronese image of a point of P^2.
    Veronese {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Whether three points of P^9 lie on a line.
    Collinear {
        /// Three points separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
}

#[derive(Subcommand, Debug)]
enum QuinticCommand {
    /// Build the quintic on the standard conic.
    Construct {
        #[arg(long, default_value_t = embedding::DEFAULT_SEED)]
        seed: u64,
        /// Also eliminate the full singular locus.
        #[arg(long)]
        certify: bool,
    },
    /// Run the non-collinearity check and print the certificate.
    Verify {
        #[arg(long, default_value_t = embedding::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        certify: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CurveCommand {
    /// Singular points of a plane curve.
    Singular {
        /// JSON file or inline JSON in the form schema.
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value = "eliminate")]
        mode: Mode,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Sample,
    Eliminate,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandResult::ok("help", json!({}), json!({ "text": e.to_string() }))
                }
                _ => CommandResult::failure("usage", json!({}), "usage", e.to_string(), EXIT_USAGE),
            };
        }
    };
    dispatch(cli.command)
}

/// Whether `--json` appears among the arguments, for rendering usage errors.
pub fn wants_json<S: AsRef<str>>(args: &[S]) -> bool {
    args.iter().any(|a| a.as_ref() == "--json")
}

fn exit_code(e: &Error) -> i32 {
    match e.code() {
        "parse" => EXIT_USAGE,
        "domain" => EXIT_DOMAIN,
        "resource" => EXIT_RESOURCE,
        _ => EXIT_INTERNAL,
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn finish(command: &str, inputs: Value, result: symprod_core::Result<Value>) -> CommandResult {
    match result {
        Ok(outputs) => CommandResult::ok(command, inputs, outputs),
        Err(e) => CommandResult::failure(command, inputs, e.code(), e.to_string(), exit_code(&e)),
    }
}

fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w: &usize| w >= 1)
        .unwrap_or(1)
}

fn dispatch(command: Command) -> CommandResult {
    match command {
        Command::Ns(NsCommand::Intersect { space, classes }) => {
            let inputs = json!({ "g": space.g, "n": space.n, "classes": classes });
            finish("ns intersect", inputs, (|| {
                let sp = SymmetricProductSpace::new(space.g, space.n)?;
                let list: Vec<DivisorClass> = input::class_pairs(&classes)?
                    .into_iter()
                    .map(|(a, b)| DivisorClass::new(sp, a, b))
                    .collect();
                let value = ns_calculus::top_intersection(&list)?;
                Ok(json!({ "classes": list, "intersection": arith::bigint_to_json(&value) }))
            })())
        }
        Command::Ns(NsCommand::Degree { kind, space, d }) => {
            let name = match kind {
                Kind::Sym => "sym",
                Kind::Alt => "alt",
            };
            let inputs = json!({ "kind": name, "g": space.g, "n": space.n, "d": d });
            finish("ns degree", inputs, (|| {
                let sp = SymmetricProductSpace::new(space.g, space.n)?;
                let (class, degree) = match kind {
                    Kind::Sym => (ns_calculus::sym_class(sp, d), ns_calculus::sym_degree(sp, d)),
                    Kind::Alt => (ns_calculus::alt_class(sp, d), ns_calculus::alt_degree(sp, d)),
                };
                Ok(json!({ "class": class, "degree": arith::bigint_to_json(&degree) }))
            })())
        }
        Command::Series(SeriesCommand::MaxR9 { g, hyperelliptic, trigonal }) => {
            let inputs = json!({ "g": g, "hyperelliptic": hyperelliptic, "trigonal": trigonal });
            finish("series max-r9", inputs, (|| {
                let curve = CurveClass::new(g, hyperelliptic, trigonal)?;
                Ok(to_value(&linear_series::degree9_bound(curve)?))
            })())
        }
        Command::Series(SeriesCommand::Castelnuovo { d, r }) => {
            let inputs = json!({ "d": d, "r": r });
            finish("series castelnuovo", inputs, (|| {
                Ok(json!({ "genus_bound": linear_series::castelnuovo_genus_bound(d, r)? }))
            })())
        }
        Command::Series(SeriesCommand::Search { g_min, g_max, d_max, workers }) => {
            let d_max = d_max.unwrap_or(g_max.saturating_add(DEFAULT_D_MARGIN));
            let workers = workers.unwrap_or_else(default_workers);
            let inputs = json!({ "g_min": g_min, "g_max": g_max, "d_max": d_max });
            finish("series search", inputs, (|| {
                if workers == 0 {
                    return Err(Error::Parse("--workers must be at least 1".into()));
                }
                let report = linear_series::min_alt_embedding_degree_search_with_workers(g_min, g_max, d_max, workers)?;
                Ok(to_value(&report))
            })())
        }
        Command::Embed(EmbedCommand::Phi { divisor }) => {
            let inputs = json!({ "divisor": divisor });
            finish("embed phi", inputs, (|| {
                let d = input::divisor(&divisor)?;
                Ok(json!({ "divisor": d, "point": embedding::phi3(&d) }))
            })())
        }
        Command::Embed(EmbedCommand::Veronese { point }) => {
            let inputs = json!({ "point": point });
            finish("embed veronese", inputs, (|| {
                let p = input::point(&point)?;
                Ok(json!({ "point": embedding::veronese3(&p)? }))
            })())
        }
        Command::Embed(EmbedCommand::Collinear { points }) => {
            let inputs = json!({ "points": points });
            finish("embed collinear", inputs, (|| {
                let pts = input::points(&points)?;
                let [p, q, r] = pts.as_slice() else {
                    return Err(Error::Parse(format!("expected 3 points, got {}", pts.len())));
                };
                let collinear = embedding::collinear_p10(p, q, r)?;
                Ok(json!({ "collinear": collinear, "rank": embedding::points_rank(&pts)? }))
            })())
        }
        Command::Quintic(QuinticCommand::Construct { seed, certify }) => {
            let inputs = json!({ "seed": seed, "certify": certify });
            finish("quintic construct", inputs, (|| {
                let c = embedding::construct_quintic(&ConicParametrization::standard(), &default_parameters(), seed)?;
                let mut out = to_value(&c);
                if certify {
                    let locus = singular_points_search(&c.quintic, SingularMode::Eliminate)?;
                    out["singular_locus"] = to_value(&locus);
                }
                Ok(out)
            })())
        }
        Command::Quintic(QuinticCommand::Verify { seed, certify }) => {
            let inputs = json!({ "seed": seed, "certify": certify });
            finish("quintic verify", inputs, (|| {
                let cert = embedding::verify_with(&ConicParametrization::standard(), &default_parameters(), seed, certify)?;
                Ok(to_value(&cert))
            })())
        }
        Command::Curve(CurveCommand::Singular { form, mode }) => {
            let inputs = json!({ "form": form, "mode": match mode { Mode::Sample => "sample", Mode::Eliminate => "eliminate" } });
            finish("curve singular", inputs, (|| {
                let curve = input::form(&form)?;
                let locus = match mode {
                    Mode::Sample => singular_points_sample(&curve, &[])?,
                    Mode::Eliminate => singular_points_search(&curve, SingularMode::Eliminate)?,
                };
                Ok(to_value(&locus))
            })())
        }
    }
}
