//! The `monodimer` command line.
//!
//! Exit codes: 0 success, 1 property violation or mismatch, 2 input error,
//! 3 a theorem hypothesis is not met.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::config_weight;
use crate::dicot::{Dicot, Graph, MonopoleDimerConfig};
use crate::enumerate::{
    brute_force_partition_function_with_limit, check_positivity_with_limit, visit_configs,
    DEFAULT_MAX_VERTICES,
};
use crate::families::{Family, FamilyError, FamilySpec};
use crate::free_energy::{free_energy, FreeEnergyError, FreeEnergyParams};
use crate::json::{ConfigLine, InputError, PiFile, RawDicot};
use crate::linalg::partition_function;
use crate::planar::{
    is_planar_dicot, kasteleyn_orient, planar_partition_function, verify_kasteleyn, PlanarDicot,
    PlanarError,
};
use crate::quotient::{involution_from_map, verify_squareness, Hypothesis, QuotientError};
use crate::random::{random_small_dicot, rng};
use crate::rational::{format_float, format_rational, parse_rational, to_f64, Rational};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_HYPOTHESIS: u8 = 3;

const DEFAULT_SEED: u64 = 2024;

#[derive(Parser, Debug)]
#[command(
    name = "monodimer",
    version,
    about = "Exact monopole-dimer partition functions on dicots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Oracle {
    /// Sum of configuration weights
    Brute,
    /// Sum with loop signs from enclosed vertices (needs coordinates)
    Planar,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact partition function det K of a dicot
    Partition {
        #[arg(long)]
        input: PathBuf,
        /// Also report determinant time
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List every monopole-dimer configuration with its weight
    Enumerate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// Report whether every configuration weight is positive
        #[arg(long)]
        positivity: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the determinant with an independent oracle
    Verify {
        #[arg(long, required_unless_present = "random")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Oracle::Brute)]
        oracle: Oracle,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// Check this many random dicots instead of a file
        #[arg(long, conflicts_with = "input")]
        random: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest random dicot
        #[arg(long, default_value_t = 8)]
        random_vertices: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Check Z(G) = Z(G/pi)^2 for a graph and a fixed-point-free involution
    Square {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        pi: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Faces, Kasteleyn check and a Kasteleyn orientation of a planar dicot
    Kasteleyn {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Exact values against closed forms for the built-in families
    Family {
        #[command(flatten)]
        spec: FamilyArgs,
        /// Also sum configurations where the instance is small enough
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// Relative tolerance for the closed-form comparison
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Free energies in the thermodynamic limit
    FreeEnergy {
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        weights: WeightArgs,
        /// Wheel ratio 4a^2 / (x^2 + b^2)
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct WeightArgs {
    #[arg(long, default_value = "1", value_parser = rational_arg)]
    x: Rational,
    #[arg(long, default_value = "1", value_parser = rational_arg)]
    a: Rational,
    /// Defaults to a for cycles, 1 otherwise
    #[arg(long, value_parser = rational_arg)]
    b: Option<Rational>,
    #[arg(long, default_value = "1", value_parser = rational_arg)]
    b1: Rational,
    #[arg(long, default_value = "1", value_parser = rational_arg)]
    b2: Rational,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    family: Family,
    /// Sizes, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// First dimension for grid families, comma separated
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    #[command(flatten)]
    weights: WeightArgs,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    let q = parse_rational(s).map_err(|e| e.to_string())?;
    if q > Rational::from_integer(0.into()) {
        Ok(q)
    } else {
        Err(format!("weight must be positive, got {s}"))
    }
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    fn hypothesis(message: impl ToString) -> Self {
        Failure {
            code: EXIT_HYPOTHESIS,
            message: message.to_string(),
        }
    }

    fn violation(message: impl ToString) -> Self {
        Failure {
            code: EXIT_VIOLATION,
            message: message.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn io_err(e: std::io::Error) -> Failure {
    Failure::input(format!("write failed: {e}"))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_dicot(path: &Path) -> Result<Dicot, Failure> {
    Dicot::from_json(&read(path)?).map_err(Failure::input)
}

fn load_raw(path: &Path) -> Result<RawDicot, Failure> {
    RawDicot::from_json(&read(path)?).map_err(|e| Failure::input(InputError::from(e)))
}

fn load_planar(path: &Path) -> Result<PlanarDicot, Failure> {
    let raw = load_raw(path)?;
    if raw.coords.is_none() {
        return Err(Failure::input("planar input needs a \"coords\" map"));
    }
    PlanarDicot::from_raw(&raw).map_err(planar_failure)
}

fn planar_failure(e: PlanarError) -> Failure {
    match e {
        PlanarError::Dicot(d) => Failure::input(InputError::Dicot(d)),
        PlanarError::NotPlanarDicot => Failure::hypothesis(e),
        PlanarError::NoKasteleynOrientation { .. } => Failure::violation(e),
        other => Failure::input(other),
    }
}

fn family_failure(e: FamilyError) -> Failure {
    match e {
        FamilyError::Quotient(QuotientError::HypothesisViolated(_)) => Failure::hypothesis(e),
        other => Failure::input(other),
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Partition {
            input,
            timing,
            common,
        } => cmd_partition(&input, timing, common.emit, out),
        Command::Enumerate {
            input,
            max_vertices,
            positivity,
            common,
        } => cmd_enumerate(&input, max_vertices, positivity, common.emit, out),
        Command::Verify {
            input,
            oracle,
            max_vertices,
            random,
            seed,
            random_vertices,
            common,
        } => match random {
            Some(k) => cmd_verify_random(k, seed, random_vertices, max_vertices, common.emit, out),
            None => cmd_verify(
                input.as_deref().expect("clap requires input"),
                oracle,
                max_vertices,
                common.emit,
                out,
            ),
        },
        Command::Square { input, pi, common } => cmd_square(&input, &pi, common.emit, out),
        Command::Kasteleyn { input, common } => cmd_kasteleyn(&input, common.emit, out),
        Command::Family {
            spec,
            brute,
            max_vertices,
            tolerance,
            common,
        } => cmd_family(&spec, brute, max_vertices, tolerance, common.emit, out),
        Command::FreeEnergy {
            family,
            weights,
            alpha,
            common,
        } => cmd_free_energy(family, &weights, alpha, common.emit, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn cmd_partition(input: &Path, timing: bool, emit: Emit, out: &mut dyn Write) -> CmdResult {
    let d = load_dicot(input)?;
    let start = Instant::now();
    let z = partition_function(&d).map_err(Failure::violation)?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let z = format_rational(&z);
    match emit {
        Emit::Text => {
            writeln!(out, "{z}").map_err(io_err)?;
            if timing {
                writeln!(out, "det_ms {}", format_float(elapsed)).map_err(io_err)?;
            }
        }
        Emit::Csv => {
            writeln!(out, "vertices,partition_function").map_err(io_err)?;
            writeln!(out, "{},{z}", d.vertex_count()).map_err(io_err)?;
        }
        Emit::Json => {
            let mut v = json!({"vertices": d.vertex_count(), "partition_function": z});
            if timing {
                v["det_ms"] = json!(elapsed);
            }
            writeln!(out, "{v}").map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn config_line(c: &MonopoleDimerConfig, w: &Rational) -> ConfigLine {
    ConfigLine {
        loops: c
            .loops
            .iter()
            .map(|l| l.vertices().iter().map(|u| u.label()).collect())
            .collect(),
        kinds: c
            .loops
            .iter()
            .map(|l| l.kinds().iter().map(|k| k.code().to_string()).collect())
            .collect(),
        isolated: c.isolated.iter().map(|u| u.label()).collect(),
        weight: format_rational(w),
    }
}

fn loops_text(line: &ConfigLine) -> String {
    let parts: Vec<String> = line
        .loops
        .iter()
        .zip(&line.kinds)
        .map(|(vs, ks)| {
            let vs: Vec<String> = vs.iter().map(u32::to_string).collect();
            format!("{}({})", vs.join("-"), ks.concat())
        })
        .collect();
    parts.join(" ")
}

fn cmd_enumerate(
    input: &Path,
    limit: usize,
    positivity: bool,
    emit: Emit,
    out: &mut dyn Write,
) -> CmdResult {
    let d = load_dicot(input)?;
    let mut lines = Vec::new();
    let mut total = Rational::from_integer(0.into());
    visit_configs(&d, limit, |c| {
        let w = config_weight(c, &d).expect("enumerated configurations are valid");
        total += &w;
        lines.push(config_line(c, &w));
    })
    .map_err(Failure::input)?;
    let report = if positivity {
        Some(check_positivity_with_limit(&d, limit).map_err(Failure::input)?)
    } else {
        None
    };
    match emit {
        Emit::Text => {
            for l in &lines {
                let iso: Vec<String> = l.isolated.iter().map(u32::to_string).collect();
                writeln!(
                    out,
                    "loops [{}] isolated [{}] weight {}",
                    loops_text(l),
                    iso.join(" "),
                    l.weight
                )
                .map_err(io_err)?;
            }
            writeln!(
                out,
                "configurations {} total {}",
                lines.len(),
                format_rational(&total)
            )
            .map_err(io_err)?;
            if let Some(r) = &report {
                match &r.witness {
                    None => writeln!(out, "all weights positive").map_err(io_err)?,
                    Some((c, w)) => writeln!(
                        out,
                        "negative weights {} of {}; witness [{}] weight {}",
                        r.negative,
                        r.configurations,
                        loops_text(&config_line(c, w)),
                        format_rational(w)
                    )
                    .map_err(io_err)?,
                }
            }
        }
        Emit::Csv => {
            writeln!(out, "loops,isolated,weight").map_err(io_err)?;
            for l in &lines {
                let iso: Vec<String> = l.isolated.iter().map(u32::to_string).collect();
                writeln!(out, "{},{},{}", loops_text(l), iso.join(" "), l.weight)
                    .map_err(io_err)?;
            }
        }
        Emit::Json => {
            for l in &lines {
                writeln!(out, "{}", json!(l)).map_err(io_err)?;
            }
            let mut v = json!({
                "count": lines.len(),
                "total": format_rational(&total),
            });
            if let Some(r) = &report {
                v["all_positive"] = json!(r.all_positive);
                v["negative"] = json!(r.negative);
                if let Some((c, w)) = &r.witness {
                    v["witness"] = json!(config_line(c, w));
                }
            }
            writeln!(out, "{v}").map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn report_match(
    label: &str,
    det: &Rational,
    oracle: &Rational,
    emit: Emit,
    out: &mut dyn Write,
) -> CmdResult {
    let ok = det == oracle;
    let (d, o) = (format_rational(det), format_rational(oracle));
    match emit {
        Emit::Text => {
            writeln!(out, "determinant {d}").map_err(io_err)?;
            writeln!(out, "{label} {o}").map_err(io_err)?;
            if ok {
                writeln!(out, "MATCH {d}").map_err(io_err)?;
            } else {
                writeln!(out, "MISMATCH {d} != {o}").map_err(io_err)?;
            }
        }
        Emit::Csv => {
            writeln!(out, "determinant,{label},match").map_err(io_err)?;
            writeln!(out, "{d},{o},{ok}").map_err(io_err)?;
        }
        Emit::Json => {
            writeln!(out, "{}", json!({"determinant": d, label: o, "match": ok}))
                .map_err(io_err)?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_verify(
    input: &Path,
    oracle: Oracle,
    limit: usize,
    emit: Emit,
    out: &mut dyn Write,
) -> CmdResult {
    match oracle {
        Oracle::Brute => {
            let d = load_dicot(input)?;
            let z = brute_force_partition_function_with_limit(&d, limit).map_err(Failure::input)?;
            let det = partition_function(&d).map_err(Failure::violation)?;
            report_match("brute-force", &det, &z, emit, out)
        }
        Oracle::Planar => {
            let pd = load_planar(input)?;
            if !verify_kasteleyn(&pd, &pd.dicot().orientation()) {
                return Err(Failure::hypothesis("the orientation is not Kasteleyn"));
            }
            let z = planar_partition_function(&pd, limit).map_err(planar_failure)?;
            let det = partition_function(pd.dicot()).map_err(Failure::violation)?;
            report_match("planar", &det, &z, emit, out)
        }
    }
}

fn cmd_verify_random(
    k: usize,
    seed: u64,
    max_n: u32,
    limit: usize,
    emit: Emit,
    out: &mut dyn Write,
) -> CmdResult {
    if max_n == 0 || max_n as usize > limit {
        return Err(Failure::input(format!(
            "random dicots need 1..={limit} vertices"
        )));
    }
    let mut r = rng(seed);
    let mut failures = Vec::new();
    for i in 0..k {
        let d = random_small_dicot(&mut r, max_n);
        let det = partition_function(&d).map_err(Failure::violation)?;
        let z = brute_force_partition_function_with_limit(&d, limit).map_err(Failure::input)?;
        if det != z {
            failures.push((i, d.to_json()));
        }
    }
    let matched = k - failures.len();
    match emit {
        Emit::Text => {
            writeln!(out, "seed {seed}").map_err(io_err)?;
            for (i, json) in &failures {
                writeln!(out, "MISMATCH #{i} {json}").map_err(io_err)?;
            }
            writeln!(
                out,
                "{} {matched}/{k}",
                if failures.is_empty() {
                    "MATCH"
                } else {
                    "MISMATCH"
                }
            )
            .map_err(io_err)?;
        }
        Emit::Csv => {
            writeln!(out, "seed,checked,matched").map_err(io_err)?;
            writeln!(out, "{seed},{k},{matched}").map_err(io_err)?;
        }
        Emit::Json => {
            let bad: Vec<usize> = failures.iter().map(|f| f.0).collect();
            writeln!(
                out,
                "{}",
                json!({"seed": seed, "checked": k, "matched": matched, "mismatches": bad})
            )
            .map_err(io_err)?;
        }
    }
    Ok(if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_square(input: &Path, pi: &Path, emit: Emit, out: &mut dyn Write) -> CmdResult {
    let g = Graph::from_json(&read(input)?).map_err(Failure::input)?;
    let pi: PiFile =
        serde_json::from_str(&read(pi)?).map_err(|e| Failure::input(InputError::from(e)))?;
    let pi = involution_from_map(&g, &pi.pi)
        .map_err(|e| Failure::input(format!("invalid involution: {e}")))?;
    let report = verify_squareness(&g, &pi).map_err(|e| match e {
        QuotientError::HypothesisViolated(h) => Failure::hypothesis(match h {
            Hypothesis::BipartiteGraph => "the graph is not bipartite",
            Hypothesis::AdaptedPartition => "no adapted partition",
            Hypothesis::BipartiteQuotient => "the quotient dicot is not bipartite",
        }),
        QuotientError::Disconnected => Failure::hypothesis("the graph is disconnected"),
        other => Failure::violation(other),
    })?;
    let (zg, zq) = (
        format_rational(&report.z_graph),
        format_rational(&report.z_quotient),
    );
    let p1: Vec<u32> = report.partition.p1.iter().map(|u| u.label()).collect();
    let p2: Vec<u32> = report.partition.p2.iter().map(|u| u.label()).collect();
    match emit {
        Emit::Text => {
            let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
            writeln!(out, "partition {{{}}} {{{}}}", list(&p1), list(&p2)).map_err(io_err)?;
            writeln!(out, "Z(G) {zg}").map_err(io_err)?;
            writeln!(out, "Z(G/pi) {zq}").map_err(io_err)?;
            writeln!(
                out,
                "block identity {}",
                if report.block_identity {
                    "holds"
                } else {
                    "fails"
                }
            )
            .map_err(io_err)?;
            if report.holds {
                writeln!(out, "{zg} = {zq}^2").map_err(io_err)?;
            } else {
                writeln!(out, "{zg} != {zq}^2").map_err(io_err)?;
            }
        }
        Emit::Csv => {
            writeln!(out, "z_graph,z_quotient,holds,block_identity").map_err(io_err)?;
            writeln!(out, "{zg},{zq},{},{}", report.holds, report.block_identity)
                .map_err(io_err)?;
        }
        Emit::Json => {
            let v = json!({
                "p1": p1,
                "p2": p2,
                "z_graph": zg,
                "z_quotient": zq,
                "holds": report.holds,
                "block_identity": report.block_identity,
                "quotient": serde_json::from_str::<serde_json::Value>(&report.quotient.dicot.to_json())
                    .expect("dicot JSON parses"),
            });
            writeln!(out, "{v}").map_err(io_err)?;
        }
    }
    Ok(if report.holds && report.block_identity {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_kasteleyn(input: &Path, emit: Emit, out: &mut dyn Write) -> CmdResult {
    let pd = load_planar(input)?;
    if !is_planar_dicot(&pd) {
        return Err(Failure::hypothesis(
            "some bounded face has an odd number of dashed edges",
        ));
    }
    let given = verify_kasteleyn(&pd, &pd.dicot().orientation());
    let orientation = kasteleyn_orient(&pd).map_err(planar_failure)?;
    let fixed = pd.reoriented(&orientation).map_err(planar_failure)?;
    let arrows: Vec<String> = orientation
        .0
        .iter()
        .map(|(t, h)| format!("{t}->{h}"))
        .collect();
    match emit {
        Emit::Text => {
            writeln!(out, "bounded faces {}", pd.bounded_faces().len()).map_err(io_err)?;
            writeln!(
                out,
                "input orientation Kasteleyn: {}",
                if given { "yes" } else { "no" }
            )
            .map_err(io_err)?;
            writeln!(out, "orientation {}", arrows.join(" ")).map_err(io_err)?;
            let z = partition_function(fixed.dicot()).map_err(Failure::violation)?;
            writeln!(out, "partition function {}", format_rational(&z)).map_err(io_err)?;
        }
        Emit::Csv => {
            writeln!(out, "tail,head").map_err(io_err)?;
            for (t, h) in &orientation.0 {
                writeln!(out, "{t},{h}").map_err(io_err)?;
            }
        }
        Emit::Json => writeln!(out, "{}", fixed.to_raw().to_json()).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

fn build_specs(args: &FamilyArgs) -> Result<Vec<FamilySpec>, Failure> {
    let w = &args.weights;
    let b = w.b.clone().unwrap_or_else(|| {
        if args.family == Family::Cycle {
            w.a.clone()
        } else {
            Rational::from_integer(1.into())
        }
    });
    let ms: Vec<usize> = if args.family.uses_m() {
        if args.m.is_empty() {
            return Err(Failure::input(format!(
                "--m is required for the {} family",
                args.family
            )));
        }
        args.m.clone()
    } else {
        vec![0]
    };
    let mut specs = Vec::new();
    for &m in &ms {
        for &n in &args.n {
            let mut s = FamilySpec::new(args.family, m, n);
            s.x = w.x.clone();
            s.a = w.a.clone();
            s.b = b.clone();
            s.b1 = w.b1.clone();
            s.b2 = w.b2.clone();
            specs.push(s);
        }
    }
    Ok(specs)
}

fn cmd_family(
    args: &FamilyArgs,
    brute: bool,
    limit: usize,
    tol: f64,
    emit: Emit,
    out: &mut dyn Write,
) -> CmdResult {
    let specs = build_specs(args)?;
    let mut rows = Vec::new();
    let mut all_ok = true;
    for s in &specs {
        let d = s.build().map_err(family_failure)?;
        let exact = partition_function(&d).map_err(Failure::violation)?;
        let closed = s.closed_form().map_err(family_failure)?;
        let ef = to_f64(&exact);
        let rel = (ef - closed).abs() / closed.abs().max(f64::MIN_POSITIVE);
        let mut ok = rel <= tol;
        let brute_value = if brute && d.vertex_count() <= limit {
            let z = brute_force_partition_function_with_limit(&d, limit).map_err(Failure::input)?;
            ok &= z == exact;
            Some(format_rational(&z))
        } else {
            None
        };
        all_ok &= ok;
        rows.push((
            s,
            d.vertex_count(),
            format_rational(&exact),
            closed,
            rel,
            brute_value,
            ok,
        ));
    }
    match emit {
        Emit::Text => {
            writeln!(
                out,
                "{:<20} {:>8} {:>24} {:>24} {:>10}  status",
                "instance", "vertices", "exact", "closed_form", "rel_err"
            )
            .map_err(io_err)?;
            for (s, nv, exact, closed, rel, brute, ok) in &rows {
                let brute = brute
                    .as_ref()
                    .map(|b| format!(" brute {b}"))
                    .unwrap_or_default();
                writeln!(
                    out,
                    "{:<20} {:>8} {:>24} {:>24} {:>10.3e}  {}{brute}",
                    s.label(),
                    nv,
                    exact,
                    format_float(*closed),
                    rel,
                    if *ok { "ok" } else { "MISMATCH" }
                )
                .map_err(io_err)?;
            }
        }
        Emit::Csv => {
            writeln!(
                out,
                "family,m,n,vertices,exact,closed_form,rel_err,brute,ok"
            )
            .map_err(io_err)?;
            for (s, nv, exact, closed, rel, brute, ok) in &rows {
                writeln!(
                    out,
                    "{},{},{},{nv},{exact},{},{rel:e},{},{ok}",
                    s.family,
                    s.m,
                    s.n,
                    format_float(*closed),
                    brute.clone().unwrap_or_default()
                )
                .map_err(io_err)?;
            }
        }
        Emit::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(s, nv, exact, closed, rel, brute, ok)| {
                    json!({
                        "family": s.family.name(),
                        "m": s.m,
                        "n": s.n,
                        "vertices": nv,
                        "exact": exact,
                        "closed_form": closed,
                        "rel_err": rel,
                        "brute": brute,
                        "ok": ok,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(v)).map_err(io_err)?;
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_free_energy(
    family: Family,
    w: &WeightArgs,
    alpha: Option<f64>,
    emit: Emit,
    out: &mut dyn Write,
) -> CmdResult {
    let params = FreeEnergyParams {
        x: to_f64(&w.x),
        a: to_f64(&w.a),
        b: w.b.as_ref().map(to_f64).unwrap_or(1.0),
        b1: to_f64(&w.b1),
        b2: to_f64(&w.b2),
        alpha,
    };
    let f = free_energy(family, &params).map_err(|e| match e {
        FreeEnergyError::Quadrature(_) => Failure::violation(e),
        other => Failure::input(other),
    })?;
    match emit {
        Emit::Text => writeln!(out, "{}", format_float(f)).map_err(io_err)?,
        Emit::Csv => {
            writeln!(out, "family,x,a,b,b1,b2,alpha,free_energy").map_err(io_err)?;
            let alpha = alpha.map(format_float).unwrap_or_default();
            writeln!(
                out,
                "{family},{},{},{},{},{},{alpha},{}",
                format_float(params.x),
                format_float(params.a),
                format_float(params.b),
                format_float(params.b1),
                format_float(params.b2),
                format_float(f)
            )
            .map_err(io_err)?;
        }
        Emit::Json => writeln!(
            out,
            "{}",
            json!({"family": family.name(), "free_energy": f, "alpha": alpha})
        )
        .map_err(io_err)?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("monodimer").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn family_and_free_energy() {
        let (code, out, _) = run_args(&["family", "--family", "wheel", "--n", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains(" 54 "), "{out}");
        let (code, out, _) = run_args(&[
            "family", "--family", "grid", "--m", "1", "--n", "1", "--emit", "csv",
        ]);
        assert_eq!(code, 0);
        assert!(
            out.lines().nth(1).unwrap().starts_with("grid,1,1,4,9,"),
            "{out}"
        );
        let (code, out, _) =
            run_args(&["free-energy", "--family", "cycle", "--x", "1", "--a", "1"]);
        assert_eq!((code, out.trim()), (0, "0.481211825059603"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["partition"]).0, EXIT_INPUT);
        assert_eq!(
            run_args(&["family", "--family", "wheel", "--n", "4"]).0,
            EXIT_INPUT
        );
        assert_eq!(
            run_args(&["family", "--family", "grid", "--n", "1"]).0,
            EXIT_INPUT
        );
        assert_eq!(run_args(&["free-energy", "--family", "grid"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn random_verification() {
        let (code, out, _) = run_args(&["verify", "--random", "20", "--seed", "3"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("MATCH 20/20\n"), "{out}");
    }
}
