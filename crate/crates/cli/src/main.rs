use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use arthurkit::audit::{run_audit, AuditConfig, Mode};
use arthurkit::endoscopy::{elliptic_decompose, enumerate_elliptic, validate};
use arthurkit::jordan::{jordan_blocks, maximal_summands, pole_profile, reconstruct, t_set, PoleProfile};
use arthurkit::kernel_cases::{basic_triangles, compile_with, to_dot, tower, CompileOptions, Diagram};
use arthurkit::orbits::{coefficient_kind, grading, rational_orbit_keys, stabilizer, unipotent_dims};
use arthurkit::parameters::{classify, Duality};
use arthurkit::partitions::{bv_dual, OrbitFamily, Partition};
use arthurkit::spectral::{beta_factors, beta_latex, pole_case, residual_points, x_plus, PoleCase, SpectralFamily};
use arthurkit::{ArthurParameter, CuspidalDatum, Error, EtaLabel, GroupDatum, GroupFamily, SimpleParameter, TauId};

#[derive(Parser)]
#[command(name = "arthurkit", version, about = "Arthur parameters, endoscopy and kernel-function case tables")]
struct Cli {
    /// TOML file with enumeration bounds and the cuspidal pool.
    #[arg(long, global = true, env = "ARTHURKIT_CONFIG")]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Barbasch-Vogan dual of a partition.
    Dual {
        /// `DUAL:TARGET`, one of A:A, C:B, B:C, D:D.
        #[arg(long)]
        family: String,
        #[arg(long)]
        partition: String,
    },
    /// Groups a parameter factors through.
    Classify {
        #[arg(long)]
        param: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
    },
    /// Endoscopy datum for `(tau, b)` inside a parameter, or all elliptic data of a group.
    Endoscopy {
        #[arg(long, conflicts_with = "enumerate")]
        param: Option<PathBuf>,
        #[arg(long, requires = "param")]
        tau: Option<String>,
        #[arg(long, requires = "param")]
        b: Option<u32>,
        #[arg(long)]
        enumerate: bool,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Grading, coefficient kind and stabilizer of `[d^c 1^r]`.
    Orbit {
        #[arg(long)]
        group: GroupFamily,
        /// Defining size of the group.
        #[arg(long)]
        size: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        c: u32,
    },
    /// Normalizing factor of the Eisenstein series.
    Beta {
        #[arg(long)]
        family: SpectralFamily,
        #[arg(long)]
        b: u32,
        /// Drop the Rankin-Selberg factor.
        #[arg(long)]
        no_rankin_selberg: bool,
    },
    /// Candidate poles and residual points.
    Poles {
        #[arg(long)]
        b: u32,
        #[arg(long, required_unless_present = "rho_pole")]
        case: Option<u8>,
        /// Derive the case: does `L(s, tau, rho)` have a pole at 1?
        #[arg(long, conflicts_with = "case", action = clap::ArgAction::Set)]
        rho_pole: Option<bool>,
        #[arg(long, requires = "rho_pole", default_value_t = false, action = clap::ArgAction::Set)]
        second: bool,
    },
    /// Construction record for a target family and `(tau, b, c)`.
    Compile {
        #[arg(long)]
        target: GroupFamily,
        #[command(flatten)]
        tau: TauArgs,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        /// Use `psi0 ⊞ (chi, 1)` with `m_V = a(b+c) + 1` (unitary targets).
        #[arg(long)]
        extra: bool,
    },
    /// `(tau, b)`-tower over a base group and parameter.
    Tower {
        #[command(flatten)]
        group: GroupArgs,
        /// Base parameter file; empty when omitted.
        #[arg(long)]
        param: Option<PathBuf>,
        #[command(flatten)]
        tau: TauArgs,
        #[arg(long, default_value_t = 2)]
        steps: u32,
    },
    /// Basic triangle and its dual for a symplectic `tau`.
    Triangle {
        #[command(flatten)]
        tau: TauArgs,
        #[arg(long)]
        l: u32,
    },
    /// Pole profile and Jordan blocks, or reconstruction from poles.
    Jordan {
        #[arg(long, required_unless_present = "reconstruct", conflicts_with = "reconstruct")]
        param: Option<PathBuf>,
        #[arg(long, requires = "n")]
        reconstruct: Option<PathBuf>,
        #[arg(long = "N", id = "n")]
        n: Option<u32>,
    },
    /// Run the enumerated consistency sweeps.
    Audit {
        #[arg(long = "max-N")]
        max_n: Option<u32>,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long)]
    family: Option<GroupFamily>,
    /// Defining size.
    #[arg(long)]
    size: Option<u32>,
    /// Discriminant token of an even orthogonal group.
    #[arg(long)]
    eta: Option<String>,
    #[arg(long = "group-kappa", allow_hyphen_values = true)]
    group_kappa: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TauType {
    Orthogonal,
    Symplectic,
    Conjugate,
}

#[derive(Args)]
struct TauArgs {
    #[arg(long, default_value = "τ")]
    tau_id: String,
    #[arg(long)]
    a: u32,
    #[arg(long, value_enum)]
    tau_type: TauType,
    /// Sign of a conjugate self-dual datum.
    #[arg(long, allow_hyphen_values = true)]
    tau_eta: Option<String>,
    /// Assert `L(1/2, tau) != 0`.
    #[arg(long)]
    l_half_nonzero: bool,
}

impl TauArgs {
    fn datum(&self) -> Result<CuspidalDatum, Failure> {
        let t = match self.tau_type {
            TauType::Orthogonal => CuspidalDatum::orthogonal(&self.tau_id, self.a),
            TauType::Symplectic => {
                let mut t = CuspidalDatum::orthogonal(&self.tau_id, self.a);
                t.duality = Some(Duality::Symplectic);
                t
            }
            TauType::Conjugate => {
                let eta = self.tau_eta.as_deref().unwrap_or("+").parse()?;
                CuspidalDatum::conjugate(&self.tau_id, self.a, eta)
            }
        };
        t.validate()?;
        Ok(if self.l_half_nonzero { t.with_central_nonvanishing(true) } else { t })
    }
}

enum Failure {
    Domain(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Output {
    text: String,
    failed: Option<Failure>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: None }
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Domain(Error::Parse(format!("{}: {e}", path.display()))))
}

fn load_config(path: Option<&Path>) -> Result<AuditConfig, Failure> {
    match path {
        None => Ok(AuditConfig::default()),
        Some(p) => {
            let text = read(p)?;
            toml::from_str(&text).map_err(|e| Failure::Domain(Error::Parse(format!("{}: {e}", p.display()))))
        }
    }
}

fn parse_sign(s: &Option<String>) -> Result<Option<arthurkit::Sign>, Failure> {
    Ok(s.as_deref().map(str::parse).transpose()?)
}

fn build_group(g: &GroupArgs) -> Result<GroupDatum, Failure> {
    let (Some(family), Some(size)) = (g.family, g.size) else {
        return Err(Failure::Usage("--family and --size are required".into()));
    };
    let bad = || Failure::Domain(Error::GroupMismatch(format!("{family} has no defining space of size {size}")));
    let eta = g.eta.as_deref().map_or_else(EtaLabel::trivial, EtaLabel::token);
    Ok(match family {
        GroupFamily::SOodd if size % 2 == 1 => GroupDatum::so_odd(size / 2),
        GroupFamily::Sp if size % 2 == 0 => GroupDatum::sp(size / 2),
        GroupFamily::SOeven if size % 2 == 0 => GroupDatum::so_even(size / 2, eta),
        GroupFamily::Mp if size % 2 == 0 => GroupDatum::mp(size / 2),
        GroupFamily::U => GroupDatum::unitary(size, parse_sign(&g.group_kappa)?.unwrap_or(arthurkit::Sign::Plus)),
        _ => return Err(bad()),
    })
}

fn families(spec: &str) -> Result<(OrbitFamily, OrbitFamily), Failure> {
    let (d, t) = spec
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("--family expects DUAL:TARGET, got '{spec}'")))?;
    Ok((d.parse()?, t.parse()?))
}

fn restrict(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        Err(Failure::Usage(format!("--format {name} is not available for this subcommand")))
    }
}

#[derive(Deserialize)]
struct ReconstructInput {
    #[serde(default)]
    cuspidal_data: Vec<CuspidalDatum>,
    entries: Value,
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    use Format::*;
    let fmt = cli.format;
    match &cli.command {
        Command::Dual { family, partition } => {
            restrict(fmt, &[Json, Text])?;
            let (d, t) = families(family)?;
            let p: Partition = partition.parse()?;
            let q = bv_dual(&p, d, t)?;
            Ok(Output::ok(if fmt == Text { format!("{}\n", q.to_exponent_string()) } else { format!("{}\n", serde_json::to_string(&q).unwrap()) }))
        }
        Command::Classify { param, kappa } => {
            restrict(fmt, &[Json, Text, Latex])?;
            let psi: ArthurParameter = read_json(param)?;
            let groups = classify(&psi, parse_sign(kappa)?)?;
            Ok(Output::ok(match fmt {
                Text => groups.iter().map(|g| format!("{g}\n")).collect(),
                Latex => groups.iter().map(|g| format!("{}\n", g.latex())).collect(),
                _ => pretty(&json!({ "parameter": psi.to_string(), "N": psi.n(), "groups": groups })),
            }))
        }
        Command::Endoscopy { param, tau, b, enumerate, group } => {
            restrict(fmt, &[Json, Text])?;
            let data = if *enumerate {
                enumerate_elliptic(&build_group(group)?)
            } else {
                let Some(path) = param else {
                    return Err(Failure::Usage("give --param with --tau and --b, or --enumerate".into()));
                };
                let (Some(tau), Some(b)) = (tau, b) else {
                    return Err(Failure::Usage("--tau and --b are required with --param".into()));
                };
                let psi: ArthurParameter = read_json(path)?;
                let sp = psi
                    .summands()
                    .iter()
                    .find(|s| s.tau.id.as_str() == tau && s.b == *b)
                    .cloned()
                    .ok_or_else(|| Error::NotASummand(format!("({tau},{b}) does not occur in {psi}")))?;
                let rest = psi.boxminus(&sp)?;
                let g = match group.family {
                    Some(_) => build_group(group)?,
                    None => classify(&psi, parse_sign(&group.group_kappa)?)?
                        .into_iter()
                        .next()
                        .ok_or_else(|| Error::GroupMismatch(format!("{psi} has mixed types")))?,
                };
                vec![elliptic_decompose(&g, &sp, &rest)?]
            };
            Ok(Output::ok(if fmt == Text {
                data.iter().map(|e| format!("{}  [{}]\n", e.describe(), e.conjecture_basis)).collect()
            } else {
                let rows: Vec<Value> = data
                    .iter()
                    .map(|e| json!({ "datum": e, "describe": e.describe(), "validation": validate(e) }))
                    .collect();
                pretty(&rows)
            }))
        }
        Command::Orbit { group, size, d, c } => {
            restrict(fmt, &[Json])?;
            let st = stabilizer(*group, *size, *d, *c)?;
            let fam = group.orbit_family();
            let r = size - d * c;
            let g = grading(fam, &st.partition)?;
            Ok(Output::ok(pretty(&json!({
                "partition": st.partition,
                "grading": g.dims,
                "unipotent": unipotent_dims(&g),
                "coefficient": coefficient_kind(fam, *d, *c, r)?,
                "stabilizer": st,
                "rational_orbit_keys": rational_orbit_keys(*group, *d, *c, *size)?,
            }))))
        }
        Command::Beta { family, b, no_rankin_selberg } => {
            restrict(fmt, &[Json, Text, Latex])?;
            let f = beta_factors(*family, *b, !no_rankin_selberg)?;
            Ok(Output::ok(match fmt {
                Latex => format!("{}\n", beta_latex(&f)),
                Text => f.iter().map(|x| format!("{x}\n")).collect(),
                _ => pretty(&f),
            }))
        }
        Command::Poles { b, case, rho_pole, second } => {
            restrict(fmt, &[Json])?;
            let case = match (case, rho_pole) {
                (Some(id), _) => PoleCase::new(*id)?,
                (None, Some(rho)) => pole_case(*rho, *second),
                (None, None) => unreachable!("clap requires one of them"),
            };
            Ok(Output::ok(pretty(&json!({
                "b": b,
                "case": case,
                "x_plus": x_plus(*b, case).iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "residual_points": residual_points(*b, case),
            }))))
        }
        Command::Compile { target, tau, b, c, kappa, extra } => {
            restrict(fmt, &[Json, Text])?;
            let opts = CompileOptions { kappa: parse_sign(kappa)?, chi: None, unitary_extra: *extra };
            let case = compile_with(*target, &tau.datum()?, *b, *c, &opts)?;
            Ok(Output::ok(if fmt == Text {
                format!(
                    "{}: {} with psi0 = {}, {} coefficient on {}, {}\n",
                    case.conjecture_tag,
                    case.ambient,
                    case.psi0,
                    case.coefficient,
                    case.orbit.to_exponent_string(),
                    case.endoscopy.describe()
                )
            } else {
                pretty(&case)
            }))
        }
        Command::Tower { group, param, tau, steps } => {
            restrict(fmt, &[Json, Dot])?;
            let base = build_group(group)?;
            let psi = match param {
                Some(p) => read_json(p)?,
                None => ArthurParameter::empty(),
            };
            let t = tau.datum()?;
            let nodes = tower(&base, &psi, &t, *steps)?;
            Ok(Output::ok(if fmt == Dot { to_dot(Diagram::Tower(&nodes)) } else { pretty(&nodes) }))
        }
        Command::Triangle { tau, l } => {
            restrict(fmt, &[Json, Dot])?;
            let tri = basic_triangles(&tau.datum()?, *l)?;
            Ok(Output::ok(if fmt == Dot {
                let mut s = to_dot(Diagram::Triangle(&tri.basic));
                if let Some(d) = &tri.dual {
                    s.push_str(&to_dot(Diagram::Triangle(d)));
                }
                s
            } else {
                pretty(&tri)
            }))
        }
        Command::Jordan { param, reconstruct: rec, n } => {
            restrict(fmt, &[Json])?;
            if let Some(path) = rec {
                let input: ReconstructInput = read_json(path)?;
                let profile: PoleProfile = serde_json::from_value(json!({ "entries": input.entries }))
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                let mut pool = input.cuspidal_data;
                if !pool.iter().any(|t| t.is_trivial()) {
                    pool.push(CuspidalDatum::trivial());
                }
                let psi = reconstruct(&profile, &pool, n.expect("clap requires --N"))?;
                return Ok(Output::ok(pretty(&json!({ "parameter": psi.to_string(), "file": psi }))));
            }
            let psi: ArthurParameter = read_json(param.as_ref().expect("clap requires --param"))?;
            let profile = pole_profile(&psi)?;
            let mut blocks = serde_json::Map::new();
            for id in t_set(&psi) {
                let v = match jordan_blocks(&psi, &id) {
                    Ok(bs) => json!(bs),
                    Err(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
                };
                blocks.insert(id.to_string(), v);
            }
            let maxes: Vec<String> = maximal_summands(&psi).iter().map(SimpleParameter::to_string).collect();
            Ok(Output::ok(pretty(&json!({
                "parameter": psi.to_string(),
                "pole_profile": profile,
                "t_set": t_set(&psi).into_iter().map(|t: TauId| t.to_string()).collect::<Vec<_>>(),
                "jordan_blocks": blocks,
                "maximal_summands": maxes,
            }))))
        }
        Command::Audit { max_n, sequential } => {
            restrict(fmt, &[Json])?;
            let mut cfg = load_config(cli.config.as_deref())?;
            if let Some(n) = max_n {
                cfg.max_n = *n;
            }
            let mode = if *sequential { Mode::Sequential } else { Mode::default() };
            let report = run_audit(&cfg, mode);
            let failed = (!report.ok()).then(|| {
                Failure::Domain(Error::Degenerate(format!("{} audit checks failed", report.total_failures)))
            });
            Ok(Output { text: report.to_json(), failed })
        }
    }
}

fn error_json(kind: &str, message: &str) -> String {
    format!("{}\n", json!({ "error": { "kind": kind, "message": message } }))
}

fn report(f: Failure) -> ExitCode {
    match f {
        Failure::Domain(e) => {
            eprint!("{}", error_json(e.kind(), &e.to_string()));
            ExitCode::from(1)
        }
        Failure::Io(msg) => {
            eprint!("{}", error_json("io", &msg));
            ExitCode::from(1)
        }
        Failure::Usage(msg) => Cli::command().error(clap::error::ErrorKind::InvalidValue, msg).exit(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            match out.failed {
                None => ExitCode::SUCCESS,
                Some(f) => report(f),
            }
        }
        Err(f) => report(f),
    }
}
