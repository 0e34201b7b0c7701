//! Command-line front end.

use std::io::Write as _;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::geometry::bary::Bary;
use crate::geometry::{
    build_boundary_homotopy_t, build_full_horn_deformation, build_halfopen_deformation, build_punctured_deformation,
};
use crate::model::{edge_group_rank, igc_factor, pi0, rlp_check, GeneratingSet, GeneratorKind};
use crate::report::{Check, Report};
use crate::simplicial::json::{ComplexJson, MapJson};
use crate::simplicial::{boundary_complex, horn_complex, standard_simplicial_set, FiniteSimplicialSet, SimplicialMap};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "diffeomodel", version, about = "Checks for the smooth simplices and the model-structure algorithms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Chart covering and exact chart transitions.
    VerifyAxiom1,
    /// Smoothness probes of random affine maps.
    VerifyAxiom2,
    /// Injectivity of realized horns and boundaries into the simplex.
    VerifyAxiom3,
    /// Contracts of the simplex-to-horn deformation.
    VerifyAxiom4,
    /// Fill maps defined on a horn and compare on the horn.
    FillHorn,
    /// Stages of the gluing factorization of a map.
    Factorize,
    /// Lifting problems of a map against I or J.
    Rlp,
    /// Components and edge-group rank of a complex.
    Pi,
    /// Evaluate one of the explicit homotopies at a point.
    HomotopyEval,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HomotopyKind {
    /// Deformation of the simplex onto the horn `Λ^p_k`.
    #[default]
    Horn,
    /// Deformation of the half-open simplex onto the half-open horn.
    HalfOpen,
    /// Deformation of the punctured simplex onto its boundary.
    Punctured,
    /// Collar homotopy pushing `∂_ε Δ^p` onto the boundary.
    Collar,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Flags {
    #[arg(long, global = true)]
    pub p: Option<usize>,
    #[arg(long, global = true)]
    pub q: Option<usize>,
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Lattice denominator of sampling grids.
    #[arg(long, global = true, default_value_t = 20)]
    pub grid: usize,
    /// Tolerance; defaults to 1e-9 for contracts and 1e-6 for derivative probes.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[arg(long = "max-dim", global = true)]
    pub max_dim: Option<usize>,
    #[arg(long = "max-stages", global = true, default_value_t = 3)]
    pub max_stages: usize,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Built-in map name (e.g. `delta1_to_delta0`, `horn2_1_incl`) or a JSON file.
    #[arg(long, global = true)]
    pub map: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = GeneratorKind::J)]
    pub gens: GeneratorKind,
    /// Built-in complex name (e.g. `boundary2`, `horn3_1`) or a JSON file.
    #[arg(long, global = true)]
    pub complex: Option<String>,
    /// Comma-separated barycentric coordinates.
    #[arg(long, global = true)]
    pub point: Option<String>,
    /// Homotopy time.
    #[arg(long, global = true)]
    pub s: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = HomotopyKind::Horn)]
    pub kind: HomotopyKind,
    /// Collar width for the collar homotopy.
    #[arg(long, global = true)]
    pub eps: Option<f64>,
    /// Record wall-clock time in the report (makes reports run dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameters(format!("--{name} is required")))
}

/// Built-in complexes: `empty`, `delta<p>`, `boundary<p>`, `horn<p>_<k>`.
pub fn named_complex(name: &str) -> Result<FiniteSimplicialSet> {
    let bad = || Error::InvalidParameters(format!("unknown complex {name:?}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if name == "empty" {
        Ok(FiniteSimplicialSet::empty())
    } else if let Some(rest) = name.strip_prefix("delta") {
        Ok(standard_simplicial_set(num(rest)?))
    } else if let Some(rest) = name.strip_prefix("boundary") {
        Ok(boundary_complex(num(rest)?).complex.as_ref().clone())
    } else if let Some(rest) = name.strip_prefix("horn") {
        let (p, k) = rest.split_once('_').ok_or_else(bad)?;
        Ok(horn_complex(num(p)?, num(k)?)?.complex.as_ref().clone())
    } else {
        Err(bad())
    }
}

fn load_complex(name: &str) -> Result<FiniteSimplicialSet> {
    if name.ends_with(".json") {
        let text = std::fs::read_to_string(name).map_err(|e| Error::InvalidParameters(format!("{name}: {e}")))?;
        return crate::simplicial::json::complex_from_json(&text);
    }
    named_complex(name)
}

fn collapse(x: Arc<FiniteSimplicialSet>) -> SimplicialMap {
    let pt = Arc::new(standard_simplicial_set(0));
    let assignment = x.ids().map(|id| pt.pull(&pt.simplex(0), &vec![0; x.dim(id) + 1])).collect();
    SimplicialMap::new(x, pt, assignment).expect("maps to a point are simplicial")
}

#[derive(Deserialize)]
struct MapFile {
    source: ComplexJson,
    target: ComplexJson,
    #[serde(flatten)]
    map: MapJson,
}

/// Built-in maps: `<complex>_to_delta0` (collapse), `<horn or boundary>_incl`
/// (inclusion into the simplex), `<complex>_id`; or a JSON file with
/// `source`, `target` and `assignment`.
pub fn named_map(name: &str) -> Result<SimplicialMap> {
    if name.ends_with(".json") {
        let text = std::fs::read_to_string(name).map_err(|e| Error::InvalidParameters(format!("{name}: {e}")))?;
        let file: MapFile = serde_json::from_str(&text)?;
        return file.map.to_map(Arc::new(file.source.to_complex()?), Arc::new(file.target.to_complex()?));
    }
    if let Some(src) = name.strip_suffix("_to_delta0") {
        return Ok(collapse(Arc::new(named_complex(src)?)));
    }
    if let Some(src) = name.strip_suffix("_id") {
        return Ok(SimplicialMap::identity(Arc::new(named_complex(src)?)));
    }
    if let Some(src) = name.strip_suffix("_incl") {
        let bad = || Error::InvalidParameters(format!("unknown map {name:?}"));
        if let Some(rest) = src.strip_prefix("boundary") {
            return Ok(boundary_complex(rest.parse().map_err(|_| bad())?).inclusion);
        }
        if let Some(rest) = src.strip_prefix("horn") {
            let (p, k) = rest.split_once('_').ok_or_else(bad)?;
            return Ok(horn_complex(p.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?)?.inclusion);
        }
    }
    Err(Error::InvalidParameters(format!("unknown map {name:?}")))
}

fn rlp(flags: &Flags) -> Result<Report> {
    let name = flags.map.as_deref().ok_or_else(|| Error::InvalidParameters("--map is required".into()))?;
    let f = named_map(name)?;
    let max_dim = flags.max_dim.unwrap_or(2);
    let r = rlp_check(&f, &GeneratingSet::new(flags.gens, max_dim));
    let mut report = Report::new("rlp", flags.seed)
        .param("map", name)
        .param("gens", flags.gens.to_possible_value().map(|v| v.get_name().to_string()))
        .param("max_dim", max_dim);
    let failures: Vec<_> = r.failures.iter().map(|pr| pr.to_json()).collect();
    report.push(Check::bounded(
        "right lifting property",
        r.failures.len() as f64,
        0.0,
        failures.first().map(|w| json!(w)),
    ));
    report.output = Some(json!({"squares": r.squares, "failures": failures}));
    Ok(report)
}

fn factorize(flags: &Flags) -> Result<Report> {
    let name = flags.map.as_deref().ok_or_else(|| Error::InvalidParameters("--map is required".into()))?;
    let f = named_map(name)?;
    let max_dim = flags.max_dim.unwrap_or(2);
    let fac = igc_factor(&f, &GeneratingSet::new(flags.gens, max_dim), flags.max_stages)?;
    let mut report = Report::new("factorize", flags.seed)
        .param("map", name)
        .param("gens", flags.gens.to_possible_value().map(|v| v.get_name().to_string()))
        .param("max_dim", max_dim)
        .param("max_stages", flags.max_stages);
    let bad_commute: Vec<usize> = fac.stages.iter().filter(|s| !s.commutes_with(&f)).map(|s| s.n).collect();
    let bad_inj: Vec<usize> = fac.stages.iter().filter(|s| !s.j.is_injective()).map(|s| s.n).collect();
    report.push(Check::boolean("q_n ∘ j_n = f", bad_commute.is_empty(), json!(bad_commute)));
    report.push(Check::boolean("j_n injective", bad_inj.is_empty(), json!(bad_inj)));
    if fac.rlp_clean() {
        report.push(Check::boolean("lifting property reached", true, json!(null)));
    } else {
        report.push(Check::skipped(
            "lifting property reached",
            &format!("stage budget exhausted with {} residual problems", fac.last().residual.len()),
        ));
    }
    let stages: Vec<_> = fac.stages.iter().map(|s| s.to_json()).collect();
    let sizes: Vec<_> = fac.stages.iter().map(|s| s.complex.counts()).collect();
    report.output = Some(json!({"stages": stages, "cell_counts": sizes}));
    Ok(report)
}

fn pi(flags: &Flags) -> Result<Report> {
    let name = flags.complex.as_deref().ok_or_else(|| Error::InvalidParameters("--complex is required".into()))?;
    let x = load_complex(name)?;
    let mut report = Report::new("pi", flags.seed).param("complex", name);
    let p0 = pi0(&x);
    let rank = edge_group_rank(&x);
    match &rank {
        Ok(r) => report.push(Check::bounded(
            "rank bookkeeping",
            (r.edges as f64 - r.tree_edges as f64 - r.relation_rank as f64 - r.rank as f64).abs(),
            0.0,
            None,
        )),
        Err(e) => report.push(Check::skipped("rank bookkeeping", &e.to_string())),
    }
    report.output = Some(json!({"pi0": p0, "edge_group": rank.ok(), "euler_characteristic": x.euler_characteristic()}));
    Ok(report)
}

fn parse_point(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|_| Error::InvalidParameters(format!("bad coordinate {v:?}"))))
        .collect()
}

fn homotopy_eval(flags: &Flags) -> Result<Report> {
    let point =
        parse_point(flags.point.as_deref().ok_or_else(|| Error::InvalidParameters("--point is required".into()))?)?;
    let p = point.len().checked_sub(1).ok_or_else(|| Error::InvalidParameters("empty point".into()))?;
    let s = flags.s.unwrap_or(1.0);
    let k = flags.k.unwrap_or(0);
    let h = match flags.kind {
        HomotopyKind::Horn => build_full_horn_deformation(p, k)?,
        HomotopyKind::HalfOpen => build_halfopen_deformation(p, k)?,
        HomotopyKind::Punctured => build_punctured_deformation(p)?,
        HomotopyKind::Collar => build_boundary_homotopy_t(p, flags.eps.unwrap_or(0.2))?,
    };
    let x = Bary::new(point.clone())?;
    let y = h.eval(&x, s)?;
    let mut report = Report::new("homotopy-eval", flags.seed)
        .param("kind", flags.kind.to_possible_value().map(|v| v.get_name().to_string()))
        .param("p", p)
        .param("k", k);
    let drift = crate::geometry::bary::simplex_drift(y.coords());
    report.push(Check::bounded("result in the simplex", drift, 1e-12, Some(json!(y))));
    report.output = Some(json!({"point": point, "s": s, "result": y, "stage": h.stage_at(s)}));
    Ok(report)
}

/// Runs one command and returns its report.
pub fn run(command: Command, flags: &Flags) -> Result<Report> {
    let start = Instant::now();
    let contract_tol = flags.tol.unwrap_or(1e-9);
    let mut report = match command {
        Command::VerifyAxiom1 => {
            let ps: Vec<usize> = flags.p.map_or_else(|| vec![1, 2, 3], |p| vec![p]);
            let mut merged = Report::new("verify-axiom1", flags.seed).param("p", &ps).param("grid", flags.grid);
            for p in ps {
                for mut c in verify::axiom1(p, flags.grid)?.checks {
                    c.name = format!("p={p}: {}", c.name);
                    merged.push(c);
                }
            }
            merged
        }
        Command::VerifyAxiom2 => {
            let (p, q) = (flags.p.unwrap_or(2), flags.q.unwrap_or(2));
            verify::axiom2(p, q, flags.trials.unwrap_or(10), flags.seed, flags.tol.unwrap_or(1e-6))?
        }
        Command::VerifyAxiom3 => verify::axiom3(need(flags.p, "p")?, flags.trials.unwrap_or(10_000), flags.seed)?,
        Command::VerifyAxiom4 => verify::axiom4(need(flags.p, "p")?, flags.k.unwrap_or(0), flags.grid, contract_tol)?,
        Command::FillHorn => verify::fill_horn(need(flags.p, "p")?, flags.k.unwrap_or(0), flags.grid, contract_tol)?,
        Command::Factorize => factorize(flags)?,
        Command::Rlp => rlp(flags)?,
        Command::Pi => pi(flags)?,
        Command::HomotopyEval => homotopy_eval(flags)?,
    };
    report.seed = flags.seed;
    if flags.timing {
        report.timing = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command, &cli.flags) {
        Ok(report) => {
            if let Some(path) = &cli.flags.json {
                if let Err(e) = std::fs::write(path, report.to_json()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            let text = match cli.flags.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            // a closed pipe on stdout is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{text}");
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
