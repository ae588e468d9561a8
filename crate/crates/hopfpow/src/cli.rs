//! Batch command-line surface: builds and caches instances, runs the
//! verification reports, and emits exact-rational matrices and tables as
//! text, JSON, or CSV.
//!
//! Exit status: 0 when every requested check passes, 1 when a verification
//! fails (a failed report, a mismatched characteristic polynomial), 2 on
//! usage errors (unknown selectors, malformed files, out-of-bound degrees).

use crate::convolution::ConvolutionContext;
use crate::error::{Error, Result};
use crate::grading::MultiDegree;
use crate::hopf::{GradedMap, HopfData};
use crate::instances::{verify_dual_pairing, InstanceKind, InstanceSpec};
use crate::io::{load_hopf, save_hopf, to_json_string};
use crate::matrix::Matrix;
use crate::pbw::{
    basis_generator_input, construct_pbw, seq_compare, triangular_check, PbwBasis,
    SeqOrder,
};
use crate::poly::{factored_string, Poly};
use crate::report::{CheckReport, ReportSet};
use crate::scalar::{format_rat, int_pow, rat};
use crate::spectra::{hilbert_series, multiplicity, predicted_char_poly, primitive_dims};
use crate::ssym::{
    all_perms, build_ssym, classify, connected_generator_input, m_to_f, parse_perm,
    perm_compare, perm_string, OrderVariant, Perm, TExpander, WeakOrderSide,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

/// Environment variable consulted when `--cache-dir` is absent.
pub const CACHE_ENV: &str = "HOPFPOW_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "hopfpow",
    version,
    about = "Exact convolution-power (Adams) operators on connected graded Hopf algebras"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Instance: `ssym`, `tensor`, `shuffle`, or a path to an algebra JSON file.
    #[arg(long, global = true, default_value = "ssym")]
    pub instance: String,

    /// Generator degrees for the tensor/shuffle instances (comma separated).
    #[arg(long, global = true, value_delimiter = ',', default_value = "1,2")]
    pub gen_degrees: Vec<u32>,

    /// Degree bound: structure constants are built for total degree <= bound.
    #[arg(long, global = true, default_value_t = 4)]
    pub bound: u32,

    /// Convolution exponents n (comma separated; negatives allowed).
    #[arg(
        long = "n",
        global = true,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "2"
    )]
    pub n_values: Vec<i64>,

    /// Matrix basis: the instance's defining basis (F), or the monomial (M),
    /// triangularizing (T), or sorted-sequence (pbw) basis.
    #[arg(long, global = true, value_enum, default_value_t = BasisSel::F)]
    pub basis: BasisSel,

    /// Row/column order: listed order, or the transferred permutation orders
    /// compared from the left/right (for pbw: the sequence orders).
    #[arg(long, global = true, value_enum, default_value_t = OrderSel::Natural)]
    pub order: OrderSel,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatSel::Text)]
    pub format: FormatSel,

    /// Cache directory for built instances (else $HOPFPOW_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisSel {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "pbw")]
    Pbw,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderSel {
    #[value(name = "natural")]
    Natural,
    #[value(name = "precL", alias = "precl")]
    PrecL,
    #[value(name = "precR", alias = "precr")]
    PrecR,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatSel {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct the instance, validate it, and write its canonical JSON
    /// into the cache directory.
    Build,
    /// Run the verification reports: bialgebra axioms, antipode convolution
    /// identity, power-map expansion through the log idempotents, the
    /// sorted-sequence basis conditions, and triangularity.
    Verify,
    /// Matrix of the n-th convolution power of the identity on one graded
    /// component.
    Adams(DegreeArg),
    /// Matrix of the antipode on one graded component.
    Antipode(DegreeArg),
    /// Matrices of the log-of-identity idempotents on one graded component.
    Eulerian(EulerianArgs),
    /// Exact characteristic polynomial of the power map versus the
    /// prediction from primitive dimensions, with a MATCH verdict.
    Charpoly(DegreeArg),
    /// Graded dimensions, primitive dimensions, and the eigenvalue
    /// multiplicity table.
    Hilbert,
    /// Construct the sorted-sequence basis from the instance's default
    /// generator family and report the construction log.
    Pbw,
    /// Classify permutations (connected / single-factor / composite) and
    /// print the three order chains.
    Classify(ClassifyArgs),
}

#[derive(Args, Debug)]
pub struct DegreeArg {
    /// Graded component, e.g. `3` or `2,1` (defaults to the bound for
    /// rank-1 gradings).
    #[arg(long)]
    pub degree: Option<String>,
}

#[derive(Args, Debug)]
pub struct EulerianArgs {
    /// Graded component, e.g. `3` (defaults to the bound).
    #[arg(long)]
    pub degree: Option<String>,
    /// Idempotent indices (defaults to 1..=total degree).
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<u32>>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Classify all permutations of size 1..=degree.
    #[arg(long, default_value_t = 3)]
    pub degree: u32,
}

/// One emitted piece of output; the format selector decides rendering.
pub enum Artifact {
    Note(String),
    Matrix {
        title: String,
        rows: Vec<String>,
        cols: Vec<String>,
        entries: Vec<Vec<String>>,
    },
    Table {
        title: String,
        columns: Vec<String>,
        rows: Vec<Vec<String>>,
    },
    Reports(ReportSet),
}

// ---------------------------------------------------------------------------
// Instance resolution and caching.

#[derive(Debug, Clone, PartialEq, Eq)]
enum InstanceSel {
    Ssym,
    Word(InstanceKind),
    File(PathBuf),
}

fn instance_sel(cfg: &RunConfig) -> InstanceSel {
    match cfg.instance.as_str() {
        "ssym" => InstanceSel::Ssym,
        "tensor" => InstanceSel::Word(InstanceKind::Tensor),
        "shuffle" => InstanceSel::Word(InstanceKind::Shuffle),
        other => InstanceSel::File(PathBuf::from(other)),
    }
}

/// Content-addressed cache file name: instance kind, generator degrees, and
/// bound pin the structure constants exactly.
fn cache_key(cfg: &RunConfig) -> Option<String> {
    let degs = |v: &[u32]| {
        v.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("-")
    };
    match instance_sel(cfg) {
        InstanceSel::Ssym => Some(format!("ssym-b{}.json", cfg.bound)),
        InstanceSel::Word(InstanceKind::Tensor) => Some(format!(
            "tensor-{}-b{}.json",
            degs(&cfg.gen_degrees),
            cfg.bound
        )),
        InstanceSel::Word(InstanceKind::Shuffle) => Some(format!(
            "shuffle-{}-b{}.json",
            degs(&cfg.gen_degrees),
            cfg.bound
        )),
        InstanceSel::File(_) => None,
    }
}

fn cache_dir(cfg: &RunConfig) -> Option<PathBuf> {
    cfg.cache_dir
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

fn build_fresh(cfg: &RunConfig) -> Result<HopfData> {
    match instance_sel(cfg) {
        InstanceSel::Ssym => build_ssym(cfg.bound),
        InstanceSel::Word(kind) => {
            InstanceSpec::new(kind, cfg.gen_degrees.clone(), cfg.bound)?.build()
        }
        InstanceSel::File(path) => {
            let (h, warnings) = load_hopf(&path)?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            Ok(h)
        }
    }
}

/// Loads the instance from the cache when a cache directory is configured
/// (building and caching on a miss), otherwise builds fresh.
fn resolve_instance(cfg: &RunConfig) -> Result<HopfData> {
    if let InstanceSel::File(_) = instance_sel(cfg) {
        return build_fresh(cfg);
    }
    let Some(dir) = cache_dir(cfg) else {
        return build_fresh(cfg);
    };
    let path = dir.join(cache_key(cfg).expect("non-file instances have keys"));
    if path.exists() {
        let (h, warnings) = load_hopf(&path)?;
        for w in warnings {
            eprintln!("warning: {w}");
        }
        Ok(h)
    } else {
        let h = build_fresh(cfg)?;
        save_hopf(&h, &path)?;
        Ok(h)
    }
}

fn resolve_degree(h: &HopfData, arg: &Option<String>) -> Result<MultiDegree> {
    let rank = h.basis.grading_rank();
    let degree = match arg {
        Some(s) => {
            let d = MultiDegree::parse_key(s)?;
            if d.rank() != rank {
                return Err(Error::Invalid(format!(
                    "degree {s:?} has rank {}, the instance is graded with rank {rank}",
                    d.rank()
                )));
            }
            d
        }
        None if rank == 1 => MultiDegree::scalar(h.bound()),
        None => {
            return Err(Error::Invalid(
                "--degree is required for gradings of rank > 1".into(),
            ))
        }
    };
    if degree.max_parts() > h.bound() {
        return Err(Error::BoundExceeded(format!(
            "degree {} has total {} but the instance is built to bound {}",
            degree.key(),
            degree.max_parts(),
            h.bound()
        )));
    }
    if h.basis.of_degree(&degree).is_empty() {
        return Err(Error::Invalid(format!(
            "the instance has no basis elements in degree {}",
            degree.key()
        )));
    }
    Ok(degree)
}

// ---------------------------------------------------------------------------
// Basis and order selection for matrix emission.

/// Row/column labels plus the change-of-basis matrix from the requested
/// basis (in the requested order) to the defining basis; `None` means the
/// defining basis in listed order.
struct BasisView {
    labels: Vec<String>,
    change: Option<Matrix>,
}

/// Column `j` of the result is `e_{positions[j]}`.
fn column_selection(positions: &[usize]) -> Matrix {
    let k = positions.len();
    let mut p = Matrix::zeros(k, k);
    for (j, &i) in positions.iter().enumerate() {
        p.set(i, j, rat(1));
    }
    p
}

/// The degree's labels parsed as permutations, checked against the canonical
/// lexicographic listing the permutation-basis transforms are indexed by.
fn degree_perms(h: &HopfData, degree: &MultiDegree, why: &str) -> Result<Vec<Perm>> {
    if degree.rank() != 1 {
        return Err(Error::Invalid(format!(
            "{why} needs the rank-1 permutation algebra"
        )));
    }
    let m = degree.max_parts() as usize;
    let expected = all_perms(m);
    let ids = h.basis.of_degree(degree);
    if ids.len() != expected.len() {
        return Err(Error::Invalid(format!(
            "{why} needs the permutation algebra: degree {m} has dimension {}, expected {}",
            ids.len(),
            expected.len()
        )));
    }
    for (&id, p) in ids.iter().zip(&expected) {
        if h.basis.label(id) != format!("F:{}", perm_string(p)) {
            return Err(Error::Invalid(format!(
                "{why} needs the permutation algebra with its canonical labels; found {:?}",
                h.basis.label(id)
            )));
        }
    }
    Ok(expected)
}

fn order_variant(order: OrderSel) -> Option<OrderVariant> {
    match order {
        OrderSel::Natural => None,
        OrderSel::PrecL => Some(OrderVariant::PrecL),
        OrderSel::PrecR => Some(OrderVariant::PrecR),
    }
}

/// Indices of `perms` sorted by the requested order (identity for natural).
fn perm_positions(perms: &[Perm], order: OrderSel) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..perms.len()).collect();
    if let Some(variant) = order_variant(order) {
        idx.sort_by(|&a, &b| perm_compare(variant, &perms[a], &perms[b]));
    }
    idx
}

fn basis_view(
    cfg: &RunConfig,
    h: &HopfData,
    degree: &MultiDegree,
    pbw: Option<&PbwBasis>,
) -> Result<BasisView> {
    match cfg.basis {
        BasisSel::F => {
            let ids = h.basis.of_degree(degree);
            match cfg.order {
                OrderSel::Natural => Ok(BasisView {
                    labels: ids.iter().map(|&i| h.basis.label(i).to_string()).collect(),
                    change: None,
                }),
                _ => {
                    let perms = degree_perms(h, degree, "order precL/precR")?;
                    let pos = perm_positions(&perms, cfg.order);
                    let labels = pos
                        .iter()
                        .map(|&j| format!("F:{}", perm_string(&perms[j])))
                        .collect();
                    Ok(BasisView {
                        labels,
                        change: Some(column_selection(&pos)),
                    })
                }
            }
        }
        BasisSel::M | BasisSel::T => {
            let tag = if cfg.basis == BasisSel::M { "M" } else { "T" };
            let perms = degree_perms(h, degree, "basis M/T")?;
            let m = degree.max_parts() as usize;
            let c0 = if cfg.basis == BasisSel::M {
                m_to_f(m, WeakOrderSide::Left)
            } else {
                let mut expander = TExpander::new();
                let index: std::collections::HashMap<Perm, usize> = perms
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, p)| (p, i))
                    .collect();
                let mut c = Matrix::zeros(perms.len(), perms.len());
                for (j, p) in perms.iter().enumerate() {
                    for (q, coeff) in expander.expand(p) {
                        c.set(index[&q], j, coeff);
                    }
                }
                c
            };
            let pos = perm_positions(&perms, cfg.order);
            let labels = pos
                .iter()
                .map(|&j| format!("{tag}:{}", perm_string(&perms[j])))
                .collect();
            Ok(BasisView {
                labels,
                change: Some(c0.mul(&column_selection(&pos))),
            })
        }
        BasisSel::Pbw => {
            let basis = pbw.expect("pbw basis prepared by caller");
            let seqs = basis.seq_list(degree);
            let rank = h.basis.grading_rank();
            let mut idx: Vec<usize> = (0..seqs.len()).collect();
            if cfg.order == OrderSel::PrecL {
                idx.sort_by(|&a, &b| {
                    seq_compare(&basis.family, rank, SeqOrder::Left, &seqs[a].0, &seqs[b].0)
                });
            }
            let labels = idx
                .iter()
                .map(|&j| seqs[j].label(&basis.family))
                .collect();
            let c0 = basis.expansion[degree].clone();
            Ok(BasisView {
                labels,
                change: Some(c0.mul(&column_selection(&idx))),
            })
        }
    }
}

/// The default generator family: connected fundamental elements on the
/// permutation algebra, every positive-degree basis element otherwise.
fn default_pbw(h: &HopfData) -> Result<(PbwBasis, crate::pbw::ConstructionLog)> {
    let input = if h.name == "ssym" || h.name.starts_with("ssym-") {
        connected_generator_input(h)?
    } else {
        basis_generator_input(h)
    };
    construct_pbw(h, &input, h.bound())
}

fn transformed_block(block: &Matrix, view: &BasisView) -> Result<Matrix> {
    match &view.change {
        None => Ok(block.clone()),
        Some(c) => {
            let inv = c
                .inverse()
                .ok_or_else(|| Error::Invalid("basis transform is singular".into()))?;
            Ok(inv.mul(block).mul(c))
        }
    }
}

fn matrix_artifact(title: String, labels: &[String], m: &Matrix) -> Artifact {
    let entries = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rat(m.get(i, j))).collect())
        .collect();
    Artifact::Matrix {
        title,
        rows: labels.to_vec(),
        cols: labels.to_vec(),
        entries,
    }
}

fn basis_name(sel: BasisSel) -> &'static str {
    match sel {
        BasisSel::F => "F",
        BasisSel::M => "M",
        BasisSel::T => "T",
        BasisSel::Pbw => "pbw",
    }
}

fn order_name(sel: OrderSel) -> &'static str {
    match sel {
        OrderSel::Natural => "natural",
        OrderSel::PrecL => "precL",
        OrderSel::PrecR => "precR",
    }
}

// ---------------------------------------------------------------------------
// Commands.

fn dims_table(h: &HopfData) -> Artifact {
    let rows = h
        .basis
        .dims()
        .iter()
        .map(|(d, k)| vec![d.key(), k.to_string()])
        .collect();
    Artifact::Table {
        title: format!("graded dimensions of {}", h.name),
        columns: vec!["degree".into(), "dim".into()],
        rows,
    }
}

fn cmd_build(cfg: &RunConfig) -> Result<(Vec<Artifact>, bool)> {
    let mut artifacts = Vec::new();
    match instance_sel(cfg) {
        InstanceSel::File(path) => {
            let (h, warnings) = load_hopf(&path)?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            artifacts.push(Artifact::Note(format!(
                "validated {} (rank {}, bound {}, total dimension {})",
                path.display(),
                h.basis.grading_rank(),
                h.bound(),
                h.basis.len()
            )));
            artifacts.push(dims_table(&h));
        }
        _ => {
            let h = build_fresh(cfg)?;
            let dir = cache_dir(cfg).unwrap_or_else(|| PathBuf::from("hopfpow-cache"));
            let path = dir.join(cache_key(cfg).expect("non-file instance"));
            let fresh = to_json_string(&h);
            if path.exists() && std::fs::read_to_string(&path).ok().as_deref() == Some(&fresh)
            {
                artifacts.push(Artifact::Note(format!(
                    "cache {} is up to date (rebuild is bit-identical)",
                    path.display()
                )));
            } else {
                save_hopf(&h, &path)?;
                artifacts.push(Artifact::Note(format!("wrote {}", path.display())));
            }
            artifacts.push(dims_table(&h));
        }
    }
    Ok((artifacts, true))
}

fn reports_to_artifacts(title: &str, set: ReportSet, artifacts: &mut Vec<Artifact>) -> bool {
    let ok = set.all_passed();
    artifacts.push(Artifact::Note(title.to_string()));
    artifacts.push(Artifact::Reports(set));
    ok
}

fn cmd_verify(cfg: &RunConfig) -> Result<(Vec<Artifact>, bool)> {
    let h = resolve_instance(cfg)?;
    let mut artifacts = Vec::new();
    let mut pass = true;

    pass &= reports_to_artifacts("bialgebra axioms", h.verify_bialgebra(), &mut artifacts);

    let ctx = ConvolutionContext::new(&h);
    let s = ctx.antipode();
    let id = ctx.identity();
    let unit = ctx.unit();
    let mut conv = ReportSet::new();
    conv.push(if ctx.convolve(&s, &id) == unit {
        CheckReport::pass("antipode * id = unit projection")
    } else {
        CheckReport::fail("antipode * id = unit projection", "blocks differ")
    });
    conv.push(if ctx.convolve(&id, &s) == unit {
        CheckReport::pass("id * antipode = unit projection")
    } else {
        CheckReport::fail("id * antipode = unit projection", "blocks differ")
    });
    pass &= reports_to_artifacts("antipode convolution identity", conv, &mut artifacts);

    pass &= reports_to_artifacts(
        "power maps through log idempotents",
        ctx.check_eulerian_expansion(&cfg.n_values),
        &mut artifacts,
    );

    if let InstanceSel::Word(kind) = instance_sel(cfg) {
        pass &= reports_to_artifacts(
            "orthogonal idempotent system",
            ctx.check_idempotent_system(),
            &mut artifacts,
        );
        let partner_kind = match kind {
            InstanceKind::Tensor => InstanceKind::Shuffle,
            InstanceKind::Shuffle => InstanceKind::Tensor,
        };
        let partner =
            InstanceSpec::new(partner_kind, cfg.gen_degrees.clone(), cfg.bound)?.build()?;
        let pairing = match kind {
            InstanceKind::Tensor => verify_dual_pairing(&h, &partner),
            InstanceKind::Shuffle => verify_dual_pairing(&partner, &h),
        };
        pass &= reports_to_artifacts("graded dual pairing", pairing, &mut artifacts);
    }

    let (basis, _log) = default_pbw(&h)?;
    pass &= reports_to_artifacts(
        "sorted-sequence basis conditions",
        crate::pbw::verify_pbw_conditions(&h, &basis),
        &mut artifacts,
    );

    let mut tri = ReportSet::new();
    let degrees: Vec<MultiDegree> = basis.sequences.keys().cloned().collect();
    for n in &cfg.n_values {
        let map = ctx.adams(*n);
        for degree in &degrees {
            let report =
                triangular_check(&basis, &map, degree, |seq| int_pow(*n, seq.len()));
            let name = format!(
                "power map n={n} triangular on degree {} with diagonal n^len",
                degree.key()
            );
            tri.push(if report.triangular && report.diagonal_ok {
                CheckReport::pass(name)
            } else {
                CheckReport::fail(
                    name,
                    report
                        .first_violation
                        .unwrap_or_else(|| "diagonal mismatch".into()),
                )
            });
        }
    }
    for degree in &degrees {
        let report = triangular_check(&basis, &s, degree, |seq| {
            int_pow(-1, seq.len())
        });
        let name = format!(
            "antipode triangular on degree {} with diagonal (-1)^len",
            degree.key()
        );
        tri.push(if report.triangular && report.diagonal_ok {
            CheckReport::pass(name)
        } else {
            CheckReport::fail(
                name,
                report
                    .first_violation
                    .unwrap_or_else(|| "diagonal mismatch".into()),
            )
        });
    }
    pass &= reports_to_artifacts("triangularity in the sequence basis", tri, &mut artifacts);

    match primitive_dims(&hilbert_series(&h)) {
        Ok(p) => {
            pass &= reports_to_artifacts(
                "sequence counts match predicted multiplicities",
                crate::spectra::count_sequences_check(&basis, &p),
                &mut artifacts,
            );
        }
        Err(e) => {
            let mut set = ReportSet::new();
            set.push(CheckReport::fail("primitive dimensions", e.to_string()));
            pass &= reports_to_artifacts("primitive dimensions", set, &mut artifacts);
        }
    }

    Ok((artifacts, pass))
}

fn cmd_matrix(
    cfg: &RunConfig,
    arg: &DegreeArg,
    kind: MatrixKind,
) -> Result<(Vec<Artifact>, bool)> {
    let h = resolve_instance(cfg)?;
    let degree = resolve_degree(&h, &arg.degree)?;
    let ctx = ConvolutionContext::new(&h);
    let pbw = if cfg.basis == BasisSel::Pbw {
        Some(default_pbw(&h)?.0)
    } else {
        None
    };
    let view = basis_view(cfg, &h, &degree, pbw.as_ref())?;
    let mut artifacts = Vec::new();
    let maps: Vec<(String, GradedMap)> = match kind {
        MatrixKind::Adams => cfg
            .n_values
            .iter()
            .map(|n| (format!("power map n={n}"), ctx.adams(*n)))
            .collect(),
        MatrixKind::Antipode => vec![("antipode".to_string(), ctx.antipode())],
    };
    for (name, map) in maps {
        let m = transformed_block(map.block(&degree), &view)?;
        artifacts.push(matrix_artifact(
            format!(
                "{name} on degree {} (basis {}, order {})",
                degree.key(),
                basis_name(cfg.basis),
                order_name(cfg.order)
            ),
            &view.labels,
            &m,
        ));
    }
    Ok((artifacts, true))
}

enum MatrixKind {
    Adams,
    Antipode,
}

fn cmd_eulerian(cfg: &RunConfig, arg: &EulerianArgs) -> Result<(Vec<Artifact>, bool)> {
    let h = resolve_instance(cfg)?;
    let degree = resolve_degree(&h, &arg.degree)?;
    let ctx = ConvolutionContext::new(&h);
    let pbw = if cfg.basis == BasisSel::Pbw {
        Some(default_pbw(&h)?.0)
    } else {
        None
    };
    let view = basis_view(cfg, &h, &degree, pbw.as_ref())?;
    let rs: Vec<u32> = match &arg.r {
        Some(rs) => rs.clone(),
        None => (1..=degree.max_parts().max(1)).collect(),
    };
    let mut artifacts = Vec::new();
    for r in rs {
        let m = transformed_block(ctx.eulerian_idempotent(r).block(&degree), &view)?;
        artifacts.push(matrix_artifact(
            format!(
                "log idempotent r={r} on degree {} (basis {}, order {})",
                degree.key(),
                basis_name(cfg.basis),
                order_name(cfg.order)
            ),
            &view.labels,
            &m,
        ));
    }
    Ok((artifacts, true))
}

fn cmd_charpoly(cfg: &RunConfig, arg: &DegreeArg) -> Result<(Vec<Artifact>, bool)> {
    let h = resolve_instance(cfg)?;
    let degree = resolve_degree(&h, &arg.degree)?;
    let ctx = ConvolutionContext::new(&h);
    let p = primitive_dims(&hilbert_series(&h))?;
    let mut rows = Vec::new();
    let mut pass = true;
    for &n in &cfg.n_values {
        let actual = ctx.adams(n).block(&degree).char_poly();
        let (predicted, roots) = predicted_char_poly(&p, n, &degree);
        let verdict = if actual == predicted {
            "MATCH"
        } else {
            pass = false;
            "MISMATCH"
        };
        rows.push(vec![
            n.to_string(),
            factored_string(&roots, &Poly::one()),
            actual.to_string(),
            verdict.to_string(),
        ]);
    }
    let artifacts = vec![Artifact::Table {
        title: format!(
            "characteristic polynomial of the power map on degree {}",
            degree.key()
        ),
        columns: vec![
            "n".into(),
            "predicted".into(),
            "matrix-derived".into(),
            "verdict".into(),
        ],
        rows,
    }];
    Ok((artifacts, pass))
}

fn cmd_hilbert(cfg: &RunConfig) -> Result<(Vec<Artifact>, bool)> {
    let h = resolve_instance(cfg)?;
    let series = hilbert_series(&h);
    let mut artifacts = vec![dims_table(&h)];
    match primitive_dims(&series) {
        Ok(p) => {
            let top = h.bound() as usize;
            let mut columns = vec!["degree".into(), "dim".into(), "primitive".into()];
            for s in 0..=top {
                columns.push(format!("mul[{s}]"));
            }
            let rows = series
                .dims
                .iter()
                .map(|(d, k)| {
                    let mut row = vec![
                        d.key(),
                        k.to_string(),
                        p.count(d).to_string(),
                    ];
                    for s in 0..=top {
                        row.push(multiplicity(&p, s, d).to_string());
                    }
                    row
                })
                .collect();
            artifacts.push(Artifact::Table {
                title: "primitive dimensions and eigenvalue multiplicities (eigenvalue n^s has multiplicity mul[s])".into(),
                columns,
                rows,
            });
            Ok((artifacts, true))
        }
        Err(e) => {
            let mut set = ReportSet::new();
            set.push(CheckReport::fail("primitive dimensions", e.to_string()));
            artifacts.push(Artifact::Reports(set));
            Ok((artifacts, false))
        }
    }
}

fn cmd_pbw(cfg: &RunConfig) -> Result<(Vec<Artifact>, bool)> {
    let h = resolve_instance(cfg)?;
    let (basis, log) = default_pbw(&h)?;
    let mut artifacts = Vec::new();

    let gen_rows = basis
        .family
        .generators()
        .iter()
        .map(|g| {
            vec![
                g.label.clone(),
                g.degree.key(),
                g.height.map_or("inf".to_string(), |v| v.to_string()),
            ]
        })
        .collect();
    artifacts.push(Artifact::Table {
        title: format!(
            "irreducible generators of {} (bound {})",
            h.name,
            basis.bound
        ),
        columns: vec!["generator".into(), "degree".into(), "height".into()],
        rows: gen_rows,
    });

    let strata_rows = basis
        .sequences
        .iter()
        .map(|(d, seqs)| {
            vec![
                d.key(),
                seqs.len().to_string(),
                log.kernel_dims.get(d).copied().unwrap_or(0).to_string(),
                log.reducible
                    .get(d)
                    .map(|w| w.join(" "))
                    .unwrap_or_default(),
            ]
        })
        .collect();
    artifacts.push(Artifact::Table {
        title: "sequence strata".into(),
        columns: vec![
            "degree".into(),
            "sequences".into(),
            "kernel dim".into(),
            "reducible words".into(),
        ],
        rows: strata_rows,
    });

    let mut seq_rows = Vec::new();
    for (d, seqs) in &basis.sequences {
        for seq in seqs {
            seq_rows.push(vec![d.key(), seq.label(&basis.family)]);
        }
    }
    artifacts.push(Artifact::Table {
        title: "sorted sequences (right order within each degree)".into(),
        columns: vec!["degree".into(), "sequence".into()],
        rows: seq_rows,
    });

    for note in &log.notes {
        artifacts.push(Artifact::Note(note.clone()));
    }

    let pass = reports_to_artifacts(
        "basis conditions",
        crate::pbw::verify_pbw_conditions(&h, &basis),
        &mut artifacts,
    );
    Ok((artifacts, pass))
}

fn cmd_classify(arg: &ClassifyArgs) -> Result<(Vec<Artifact>, bool)> {
    let top = arg.degree;
    if top == 0 || top > 8 {
        return Err(Error::Invalid(
            "classify supports sizes 1..=8 (factorial growth)".into(),
        ));
    }
    let mut rows = Vec::new();
    let mut counts = Vec::new();
    let mut all: Vec<Perm> = Vec::new();
    for m in 1..=top as usize {
        let perms = all_perms(m);
        let mut connected = 0usize;
        let mut lyndon = 0usize;
        for p in &perms {
            let class = classify(p);
            connected += class.connected as usize;
            lyndon += class.lyndon as usize;
            rows.push(vec![
                perm_string(p),
                class.connected.to_string(),
                class.lyndon.to_string(),
                class
                    .factors
                    .iter()
                    .map(|f| perm_string(f))
                    .collect::<Vec<_>>()
                    .join("x"),
                class.length.to_string(),
            ]);
        }
        counts.push(vec![
            m.to_string(),
            perms.len().to_string(),
            connected.to_string(),
            lyndon.to_string(),
        ]);
        all.extend(perms);
    }

    let mut artifacts = vec![
        Artifact::Table {
            title: format!("permutation classes for sizes 1..={top}"),
            columns: vec![
                "perm".into(),
                "connected".into(),
                "lyndon".into(),
                "factors".into(),
                "length".into(),
            ],
            rows,
        },
        Artifact::Table {
            title: "class counts".into(),
            columns: vec![
                "size".into(),
                "total".into(),
                "connected".into(),
                "lyndon".into(),
            ],
            rows: counts,
        },
    ];

    all.sort_by(|a, b| perm_compare(OrderVariant::Prec, a, b));
    artifacts.push(Artifact::Note(format!(
        "base order chain (sizes mixed): {}",
        all.iter().map(|p| perm_string(p)).collect::<Vec<_>>().join(" ")
    )));
    for m in 1..=top as usize {
        for (variant, name) in [(OrderVariant::PrecL, "left"), (OrderVariant::PrecR, "right")] {
            let mut perms = all_perms(m);
            perms.sort_by(|a, b| perm_compare(variant, a, b));
            artifacts.push(Artifact::Note(format!(
                "{name} order chain on size {m}: {}",
                perms
                    .iter()
                    .map(|p| perm_string(p))
                    .collect::<Vec<_>>()
                    .join(" ")
            )));
        }
    }
    // `parse_perm` round-trip sanity on emitted labels (defensive).
    debug_assert!(all.iter().all(|p| parse_perm(&perm_string(p)).is_ok()));
    Ok((artifacts, true))
}

// ---------------------------------------------------------------------------
// Emission.

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn emit_text(artifacts: &[Artifact], out: &mut dyn Write) -> std::io::Result<()> {
    for artifact in artifacts {
        match artifact {
            Artifact::Note(s) => writeln!(out, "{s}")?,
            Artifact::Matrix {
                title,
                rows,
                cols,
                entries,
            } => {
                writeln!(out, "{title}")?;
                let mut widths: Vec<usize> = cols.iter().map(|c| c.len()).collect();
                for row in entries {
                    for (j, cell) in row.iter().enumerate() {
                        widths[j] = widths[j].max(cell.len());
                    }
                }
                let label_w = rows.iter().map(|r| r.len()).max().unwrap_or(0);
                write!(out, "{:label_w$}", "")?;
                for (j, c) in cols.iter().enumerate() {
                    write!(out, "  {:>w$}", c, w = widths[j])?;
                }
                writeln!(out)?;
                for (i, row) in entries.iter().enumerate() {
                    write!(out, "{:label_w$}", rows[i])?;
                    for (j, cell) in row.iter().enumerate() {
                        write!(out, "  {:>w$}", cell, w = widths[j])?;
                    }
                    writeln!(out)?;
                }
                writeln!(out)?;
            }
            Artifact::Table {
                title,
                columns,
                rows,
            } => {
                writeln!(out, "{title}")?;
                let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
                for row in rows {
                    for (j, cell) in row.iter().enumerate() {
                        widths[j] = widths[j].max(cell.len());
                    }
                }
                for (j, c) in columns.iter().enumerate() {
                    if j > 0 {
                        write!(out, "  ")?;
                    }
                    write!(out, "{:w$}", c, w = widths[j])?;
                }
                writeln!(out)?;
                for row in rows {
                    for (j, cell) in row.iter().enumerate() {
                        if j > 0 {
                            write!(out, "  ")?;
                        }
                        write!(out, "{:w$}", cell, w = widths[j])?;
                    }
                    writeln!(out)?;
                }
                writeln!(out)?;
            }
            Artifact::Reports(set) => {
                write!(out, "{set}")?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn emit_json(artifacts: &[Artifact], out: &mut dyn Write) -> std::io::Result<()> {
    use serde_json::json;
    let items: Vec<serde_json::Value> = artifacts
        .iter()
        .map(|artifact| match artifact {
            Artifact::Note(s) => json!({ "note": s }),
            Artifact::Matrix {
                title,
                rows,
                cols,
                entries,
            } => json!({
                "title": title,
                "rows": rows,
                "cols": cols,
                "entries": entries,
            }),
            Artifact::Table {
                title,
                columns,
                rows,
            } => json!({
                "title": title,
                "columns": columns,
                "rows": rows,
            }),
            Artifact::Reports(set) => json!({
                "checks": set
                    .reports
                    .iter()
                    .map(|r| json!({
                        "name": r.name,
                        "passed": r.passed,
                        "details": r.details,
                    }))
                    .collect::<Vec<_>>(),
            }),
        })
        .collect();
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&serde_json::Value::Array(items))
            .expect("serializable")
    )
}

fn emit_csv(artifacts: &[Artifact], out: &mut dyn Write) -> std::io::Result<()> {
    for artifact in artifacts {
        match artifact {
            Artifact::Note(s) => writeln!(out, "# {s}")?,
            Artifact::Matrix {
                title,
                rows,
                cols,
                entries,
            } => {
                writeln!(out, "# {title}")?;
                writeln!(out, "row,col,value")?;
                for (i, row) in entries.iter().enumerate() {
                    for (j, cell) in row.iter().enumerate() {
                        writeln!(
                            out,
                            "{},{},{}",
                            csv_field(&rows[i]),
                            csv_field(&cols[j]),
                            csv_field(cell)
                        )?;
                    }
                }
            }
            Artifact::Table {
                title,
                columns,
                rows,
            } => {
                writeln!(out, "# {title}")?;
                writeln!(
                    out,
                    "{}",
                    columns
                        .iter()
                        .map(|c| csv_field(c))
                        .collect::<Vec<_>>()
                        .join(",")
                )?;
                for row in rows {
                    writeln!(
                        out,
                        "{}",
                        row.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",")
                    )?;
                }
            }
            Artifact::Reports(set) => {
                writeln!(out, "# checks")?;
                writeln!(out, "name,passed,detail")?;
                for r in &set.reports {
                    writeln!(
                        out,
                        "{},{},{}",
                        csv_field(&r.name),
                        r.passed,
                        csv_field(&r.details.join("; "))
                    )?;
                }
            }
        }
    }
    Ok(())
}

/// Emits the artifacts in the chosen format.
pub fn emit(artifacts: &[Artifact], format: FormatSel, out: &mut dyn Write) -> Result<()> {
    match format {
        FormatSel::Text => emit_text(artifacts, out)?,
        FormatSel::Json => emit_json(artifacts, out)?,
        FormatSel::Csv => emit_csv(artifacts, out)?,
    }
    Ok(())
}

/// Executes one command; `Ok(true)` means every requested check passed.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let (artifacts, pass) = match &cfg.command {
        Command::Build => cmd_build(cfg)?,
        Command::Verify => cmd_verify(cfg)?,
        Command::Adams(arg) => cmd_matrix(cfg, arg, MatrixKind::Adams)?,
        Command::Antipode(arg) => cmd_matrix(cfg, arg, MatrixKind::Antipode)?,
        Command::Eulerian(arg) => cmd_eulerian(cfg, arg)?,
        Command::Charpoly(arg) => cmd_charpoly(cfg, arg)?,
        Command::Hilbert => cmd_hilbert(cfg)?,
        Command::Pbw => cmd_pbw(cfg)?,
        Command::Classify(arg) => cmd_classify(arg)?,
    };
    emit(&artifacts, cfg.format, out)?;
    Ok(pass)
}

/// Process entry point: parses arguments, runs, and maps outcomes to the
/// exit-code contract (0 pass, 1 failed verification, 2 usage error).
pub fn main_entry() -> i32 {
    let cfg = RunConfig::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cfg, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
