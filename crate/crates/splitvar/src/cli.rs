//! Command-line front end: deterministic artifacts for each pipeline stage.
//!
//! Exit codes: 0 = computed and verified, 1 = a mathematical check failed,
//! 2 = usage error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloNum;
use crate::eigenbasis::{build_eigensystem, EigenSystem};
use crate::error::{Error, Result};
use crate::field::{CyclotomicField, PrimeField};
use crate::polyring::{
    parse_cyclo, polys_from_cas_text, polys_to_cas_text, LaurentPoly, RingMap,
};
use crate::splitkernel::{
    build_theta, crosscheck_builtin_reference, crosscheck_reference_list, kernel_generators,
    verify_kernel, CrosscheckReport, Provenance, ThetaSystem, VerifyReport, WeightedIdeal,
};
use crate::variety::{find_point, is_on_variety, specialize, theta_point};
use crate::veronese::{
    category_counts, classify_generators_n3, pi_unit_map, sym_basis, toric_ideal,
};

/// Environment variable that redirects relative `--out` paths.
pub const OUT_DIR_ENV: &str = "SPLITVAR_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "splitvar",
    version,
    about = "Exact splitting-variety ideals for cup products with Z/n coefficients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    CasText,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Coefficient order n (prime)
    #[arg(long, default_value_t = 3)]
    pub n: u32,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Write the artifact to this file instead of stdout; relative paths
    /// are resolved under $SPLITVAR_OUT_DIR when it is set
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Seed for randomized checks and searches
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Iteration cap for randomized searches
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full pipeline and emit verified kernel generators
    Generate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Recompute the pipeline and verify every structural identity
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit the simultaneous eigenbasis with its weights
    Eigenbasis {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit generators of the toric ideal of the Veronese embedding
    Toric {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare the computed kernel with the tabulated reference list
    Crosscheck {
        #[command(flatten)]
        common: CommonArgs,
        /// Alternative reference list (one polynomial per line, `--`
        /// comments ignored) replacing the built-in one
        #[arg(long)]
        oracle: Option<PathBuf>,
    },
    /// Search for a point of X(a, b) over a prime field
    FindPoint {
        #[command(flatten)]
        common: CommonArgs,
        /// Field size (prime, q = 1 mod n)
        #[arg(long)]
        q: u64,
        /// Value of a (unit mod q)
        #[arg(long, default_value_t = 1)]
        a: u64,
        /// Value of b (unit mod q)
        #[arg(long, default_value_t = 1)]
        b: u64,
    },
    /// Evaluate the theta-images at a point and test variety membership
    Eval {
        #[command(flatten)]
        common: CommonArgs,
        /// Prime field size; omit to evaluate exactly over Q(zeta_n)
        #[arg(long)]
        q: Option<u64>,
        /// Comma-separated x-coordinates (integers for prime fields,
        /// scalar expressions like `1+zeta` for the exact field)
        #[arg(long, value_delimiter = ',')]
        x: Vec<String>,
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1")]
        beta: String,
    },
}

// --- artifact shapes ---

#[derive(Debug, Serialize, Deserialize)]
pub struct ToricArtifact {
    pub n: u32,
    pub variable_count: usize,
    pub generator_count: usize,
    pub generators: Vec<LaurentPoly>,
    /// present only for n = 3, where the five relation shapes are defined
    pub categories: Option<CategoryArtifact>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CategoryArtifact {
    pub counts: [usize; 5],
    pub by_generator: Vec<u8>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EigenbasisArtifact {
    pub n: u32,
    pub vectors: Vec<EigenvectorArtifact>,
    pub units: Vec<UnitWeightArtifact>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EigenvectorArtifact {
    pub name: String,
    pub weight: (u32, u32),
    pub vector: LaurentPoly,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct UnitWeightArtifact {
    pub name: String,
    pub weight: (u32, u32),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GenerateArtifact {
    pub n: u32,
    pub generator_count: usize,
    pub generators: Vec<LaurentPoly>,
    pub provenance: Vec<Provenance>,
    pub verified: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyArtifact {
    pub n: u32,
    pub generator_count: usize,
    pub all_residuals_zero: bool,
    pub theta_images_fixed: bool,
    pub phi_factors_theta: bool,
    pub basis_change_invertible: bool,
    pub pass: bool,
    pub residuals: VerifyReport,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EvalArtifact {
    pub n: u32,
    pub field: String,
    pub x: Vec<String>,
    pub alpha: String,
    pub beta: String,
    pub a: String,
    pub b: String,
    pub point: Vec<String>,
    pub on_variety: bool,
}

/// Everything the pipeline produces for one n.
pub struct Pipeline {
    pub eigen: EigenSystem,
    pub theta: ThetaSystem,
    pub toric: Vec<LaurentPoly>,
    pub ideal: WeightedIdeal,
}

pub fn run_pipeline(n: u32) -> Result<Pipeline> {
    let eigen = build_eigensystem(n)?;
    let theta = build_theta(&eigen)?;
    let toric = toric_ideal(n)?;
    let ideal = kernel_generators(&toric, &eigen, &theta)?;
    Ok(Pipeline {
        eigen,
        theta,
        toric,
        ideal,
    })
}

fn resolve_out(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var(OUT_DIR_ENV) {
            return PathBuf::from(dir).join(path);
        }
    }
    path.to_path_buf()
}

fn emit(common: &CommonArgs, content: &str) -> Result<()> {
    match &common.out {
        Some(path) => {
            let path = resolve_out(path);
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(path, content)?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn zeta_power_text(n: u32, k: u32) -> String {
    match k % n {
        0 => "1".to_string(),
        1 => "zeta".to_string(),
        k => format!("zeta^{k}"),
    }
}

fn cmd_toric(common: &CommonArgs) -> Result<bool> {
    let gens = toric_ideal(common.n)?;
    let categories = if common.n == 3 {
        let cats = classify_generators_n3(&gens)?;
        Some(CategoryArtifact {
            counts: category_counts(&cats),
            by_generator: cats.iter().map(|c| c.0).collect(),
        })
    } else {
        None
    };
    let artifact = ToricArtifact {
        n: common.n,
        variable_count: sym_basis(common.n)?.len(),
        generator_count: gens.len(),
        generators: gens,
        categories,
    };
    let content = match common.format {
        OutputFormat::Json => to_json(&artifact)?,
        OutputFormat::CasText => {
            let ring = crate::veronese::w_ring(common.n)?;
            polys_to_cas_text(&ring, &artifact.generators)
        }
    };
    emit(common, &content)?;
    Ok(true)
}

fn cmd_eigenbasis(common: &CommonArgs) -> Result<bool> {
    let eigen = build_eigensystem(common.n)?;
    let vectors: Vec<EigenvectorArtifact> = eigen
        .vectors()
        .iter()
        .enumerate()
        .map(|(i, wv)| EigenvectorArtifact {
            name: format!("v{}", i + 1),
            weight: wv.weight,
            vector: wv.vector.clone(),
        })
        .collect();
    let units = eigen
        .unit_weights()
        .into_iter()
        .map(|(name, weight)| UnitWeightArtifact { name, weight })
        .collect();
    let artifact = EigenbasisArtifact {
        n: common.n,
        vectors,
        units,
    };
    let content = match common.format {
        OutputFormat::Json => to_json(&artifact)?,
        OutputFormat::CasText => {
            let n = common.n;
            let mut text = String::from("-- eigenvector | eigenvalues under (E12, E23)\n");
            for v in &artifact.vectors {
                text.push_str(&format!(
                    "{}  |  ({}, {})\n",
                    v.vector,
                    zeta_power_text(n, v.weight.0),
                    zeta_power_text(n, v.weight.1)
                ));
            }
            for u in &artifact.units {
                text.push_str(&format!(
                    "{}  |  ({}, {})\n",
                    u.name,
                    zeta_power_text(n, u.weight.0),
                    zeta_power_text(n, u.weight.1)
                ));
            }
            text
        }
    };
    emit(common, &content)?;
    Ok(true)
}

fn cmd_generate(common: &CommonArgs) -> Result<bool> {
    let p = run_pipeline(common.n)?;
    let report = verify_kernel(&p.ideal, &p.theta);
    let artifact = GenerateArtifact {
        n: common.n,
        generator_count: p.ideal.generators.len(),
        generators: p.ideal.generators.clone(),
        provenance: p.ideal.provenance.clone(),
        verified: report.pass,
    };
    let content = match common.format {
        OutputFormat::Json => to_json(&artifact)?,
        OutputFormat::CasText => polys_to_cas_text(p.theta.z_ring(), &artifact.generators),
    };
    emit(common, &content)?;
    Ok(report.pass)
}

fn cmd_verify(common: &CommonArgs) -> Result<bool> {
    let p = run_pipeline(common.n)?;
    let residuals = verify_kernel(&p.ideal, &p.theta);

    let mut images_fixed = true;
    for i in 0..p.eigen.vectors().len() {
        images_fixed &= crate::heisenberg::is_fixed(p.theta.theta().image_of(i))?;
    }

    let pi_u = pi_unit_map(common.n)?;
    let phi_factors = RingMap::compose(&pi_u, p.theta.phi())? == *p.theta.theta();

    let id_w = RingMap::identity(p.eigen.p_inv().target());
    let invertible = RingMap::compose(p.eigen.p_inv(), p.eigen.p())? == id_w;

    let pass = residuals.pass && images_fixed && phi_factors && invertible;
    let artifact = VerifyArtifact {
        n: common.n,
        generator_count: p.ideal.generators.len(),
        all_residuals_zero: residuals.pass,
        theta_images_fixed: images_fixed,
        phi_factors_theta: phi_factors,
        basis_change_invertible: invertible,
        pass,
        residuals,
    };
    let content = match common.format {
        OutputFormat::Json => to_json(&artifact)?,
        OutputFormat::CasText => format!(
            "-- verification for n = {}\nresiduals zero: {}\nimages fixed: {}\nphi factors theta: {}\nbasis change invertible: {}\npass: {}\n",
            artifact.n,
            artifact.all_residuals_zero,
            artifact.theta_images_fixed,
            artifact.phi_factors_theta,
            artifact.basis_change_invertible,
            artifact.pass,
        ),
    };
    emit(common, &content)?;
    Ok(pass)
}

fn crosscheck_text(report: &CrosscheckReport) -> String {
    let mut text = format!(
        "-- crosscheck for n = {}\nitems: {}\ndistinct: {}\nclean: {}\ndirty: {:?}\nreference in computed ideal: {}\ncomputed in reference ideal: {}\npass: {}\n",
        report.n,
        report.item_count,
        report.distinct_count,
        report.clean_count,
        report.dirty_items,
        report.reference_in_computed,
        report.computed_in_reference,
        report.pass,
    );
    for item in &report.items {
        if !item.residual_zero || item.in_computed_ideal == Some(false) {
            text.push_str(&format!(
                "flagged item {}: residual_zero={} member={:?} :: {}\n",
                item.index, item.residual_zero, item.in_computed_ideal, item.text
            ));
        }
    }
    for item in &report.items {
        if let Some(orig) = item.duplicate_of {
            text.push_str(&format!("item {} duplicates item {}\n", item.index, orig));
        }
    }
    text
}

fn cmd_crosscheck(common: &CommonArgs, oracle: Option<&Path>) -> Result<bool> {
    if common.n != 3 {
        return Err(Error::Usage(
            "the reference list is tabulated for n = 3 only".into(),
        ));
    }
    let p = run_pipeline(common.n)?;
    let report = match oracle {
        None => crosscheck_builtin_reference(&p.theta, &p.ideal)?,
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            let reference = polys_from_cas_text(p.theta.z_ring(), &text)?;
            if reference.is_empty() {
                return Err(Error::Usage(format!(
                    "oracle file {} contains no polynomials",
                    path.display()
                )));
            }
            crosscheck_reference_list(&p.theta, &p.ideal, &reference)?
        }
    };
    let content = match common.format {
        OutputFormat::Json => to_json(&report)?,
        OutputFormat::CasText => crosscheck_text(&report),
    };
    emit(common, &content)?;
    Ok(report.pass)
}

fn cmd_find_point(common: &CommonArgs, q: u64, a: u64, b: u64) -> Result<bool> {
    let p = run_pipeline(common.n)?;
    let search = find_point(&p.theta, &p.ideal, q, a, b, common.budget, common.seed)?;
    let found = search.found;
    let content = match common.format {
        OutputFormat::Json => to_json(&search)?,
        OutputFormat::CasText => format!(
            "-- point search over F_{} with (a, b) = ({}, {})\nfound: {}\nmethod: {}\nchecked: {}\npoint: {:?}\n",
            search.q, search.a, search.b, search.found, search.method, search.checked, search.point,
        ),
    };
    emit(common, &content)?;
    Ok(found)
}

fn cmd_eval(
    common: &CommonArgs,
    q: Option<u64>,
    x: &[String],
    alpha: &str,
    beta: &str,
) -> Result<bool> {
    let n = common.n;
    if x.len() != n as usize {
        return Err(Error::Usage(format!(
            "--x needs exactly {n} comma-separated coordinates"
        )));
    }
    let p = run_pipeline(n)?;
    let artifact = match q {
        Some(q) => {
            let fp = PrimeField::new(q, n)?;
            let parse_u64 = |s: &str| -> Result<u64> {
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Usage(format!("`{s}` is not an integer mod q")))
            };
            let xs: Vec<u64> = x.iter().map(|s| parse_u64(s)).collect::<Result<_>>()?;
            let xs: Vec<u64> = xs.into_iter().map(|v| v % q).collect();
            let av = parse_u64(alpha)? % q;
            let bv = parse_u64(beta)? % q;
            let (pt, a_val, b_val) = theta_point(&p.theta, &fp, &xs, &av, &bv)?;
            let sv = specialize(&p.ideal, &p.theta, a_val, b_val, &fp)?;
            let on = is_on_variety(&pt.z, &sv)?;
            EvalArtifact {
                n,
                field: format!("F_{q}"),
                x: xs.iter().map(|v| v.to_string()).collect(),
                alpha: av.to_string(),
                beta: bv.to_string(),
                a: a_val.to_string(),
                b: b_val.to_string(),
                point: pt.z.iter().map(|v| v.to_string()).collect(),
                on_variety: on,
            }
        }
        None => {
            let kf = CyclotomicField { order: n };
            let xs: Vec<CycloNum> = x
                .iter()
                .map(|s| parse_cyclo(n, s))
                .collect::<Result<_>>()?;
            let av = parse_cyclo(n, alpha)?;
            let bv = parse_cyclo(n, beta)?;
            let (pt, a_val, b_val) = theta_point(&p.theta, &kf, &xs, &av, &bv)?;
            let sv = specialize(&p.ideal, &p.theta, a_val.clone(), b_val.clone(), &kf)?;
            let on = is_on_variety(&pt.z, &sv)?;
            EvalArtifact {
                n,
                field: format!("Q(zeta_{n})"),
                x: xs.iter().map(|v| v.to_string()).collect(),
                alpha: av.to_string(),
                beta: bv.to_string(),
                a: a_val.to_string(),
                b: b_val.to_string(),
                point: pt.z.iter().map(|v| v.to_string()).collect(),
                on_variety: on,
            }
        }
    };
    let content = match common.format {
        OutputFormat::Json => to_json(&artifact)?,
        OutputFormat::CasText => format!(
            "-- evaluation over {}\npoint: {:?}\non variety: {}\n",
            artifact.field, artifact.point, artifact.on_variety,
        ),
    };
    emit(common, &content)?;
    Ok(artifact.on_variety)
}

/// Execute a parsed command; Ok(true) means verified, Ok(false) means a
/// mathematical check failed.
pub fn execute(command: &Command) -> Result<bool> {
    match command {
        Command::Generate { common } => cmd_generate(common),
        Command::Verify { common } => cmd_verify(common),
        Command::Eigenbasis { common } => cmd_eigenbasis(common),
        Command::Toric { common } => cmd_toric(common),
        Command::Crosscheck { common, oracle } => cmd_crosscheck(common, oracle.as_deref()),
        Command::FindPoint { common, q, a, b } => cmd_find_point(common, *q, *a, *b),
        Command::Eval {
            common,
            q,
            x,
            alpha,
            beta,
        } => cmd_eval(common, *q, x, alpha, beta),
    }
}

/// Exit-code mapping: usage errors are 2, mathematical failures 1.
pub fn run(cli: &Cli) -> i32 {
    match execute(&cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_)
                | Error::Parse(_)
                | Error::InvalidOrder(_)
                | Error::NotPrime(_)
                | Error::Io(_)
                | Error::Json(_) => 2,
                _ => 1,
            }
        }
    }
}
