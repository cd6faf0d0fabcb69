use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use quiver_exact::exactlin::FieldSpec;
use quiver_exact::exstruct::{
    enumerate_exact_structures, frobenius_structures, parse_dotted_selection, structure_count,
    ExactStructureSpec, ExstructError, TranslationQuiver,
};
use quiver_exact::homology::{global_dimension, HomologyError};
use quiver_exact::k0::{k0_group, verify_ex_equals_ar};
use quiver_exact::pathalg::{parse_presentation_over, AlgebraBasis, PathError, DEFAULT_DEGREE_CAP};
use quiver_exact::reconstruct::{
    cotilting_module, gp_orthogonality_check, iwanaga_gorenstein_dimension, reconstruct_algebra,
    ReconstructError,
};

use crate::report::{
    AnalyzeReport, GeneratorRow, IgRow, K0Report, OrbitRow, ReconstructReport, SimpleRow,
    StructureRow,
};

/// Structures are listed individually up to this count.
pub const LIST_LIMIT: u64 = 1024;

#[derive(Clone, Debug)]
pub struct Options {
    pub field: Option<FieldSpec>,
    pub max_deg: usize,
    pub check_span: usize,
    pub samples: usize,
    pub seed: u64,
    pub dotted: Option<String>,
    pub count_only: bool,
    pub verify_ig: bool,
    pub allow_undetermined: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            field: None,
            max_deg: 20,
            check_span: 10,
            samples: 50,
            seed: 0,
            dotted: None,
            count_only: false,
            verify_ig: false,
            allow_undetermined: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Cap(String),
    Failed(String),
}

impl CliError {
    /// 1 for usage errors and failed checks, 2 for unreadable input, 3 when
    /// a degree or size cap is hit.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Failed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Cap(m) => write!(f, "cap exceeded: {m}"),
            CliError::Failed(m) => write!(f, "check failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<PathError> for CliError {
    fn from(e: PathError) -> Self {
        match e {
            PathError::DegreeCapExceeded { .. } | PathError::NotAdmissible => {
                CliError::Cap(e.to_string())
            }
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::Path(p) => p.into(),
            other => CliError::Cap(other.to_string()),
        }
    }
}

impl From<ExstructError> for CliError {
    fn from(e: ExstructError) -> Self {
        match e {
            ExstructError::TooManyStructures(_) => CliError::Cap(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ReconstructError> for CliError {
    fn from(e: ReconstructError) -> Self {
        match e {
            ReconstructError::Path(p) => p.into(),
            ReconstructError::Homology(h) => h.into(),
            ReconstructError::DegreeCapExceeded(_) => CliError::Cap(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

/// A parsed algebra with its translation quiver.
#[derive(Clone, Debug)]
pub struct Session {
    pub algebra: Arc<AlgebraBasis>,
    pub quiver: Arc<TranslationQuiver>,
}

impl Session {
    pub fn field_name(&self) -> String {
        self.algebra.field().name()
    }

    pub fn selection(&self, opts: &Options, default: &str) -> Result<ExactStructureSpec, CliError> {
        Ok(parse_dotted_selection(
            &self.quiver,
            opts.dotted.as_deref().unwrap_or(default),
        )?)
    }

    fn names(&self, vs: &[usize]) -> Vec<String> {
        vs.iter()
            .map(|&v| self.quiver.vertex_names[v].clone())
            .collect()
    }

    fn structure_row(&self, s: &ExactStructureSpec) -> StructureRow {
        StructureRow {
            label: s.label(),
            chosen: s.chosen.clone(),
            allowed_simples: self.names(&s.allowed_simples),
            projective: self.names(&s.projective_vertices),
            injective: self.names(&s.injective_vertices),
            frobenius: s.frobenius,
        }
    }
}

pub fn load(text: &str, opts: &Options) -> Result<Session, CliError> {
    let pres = parse_presentation_over(text, opts.field).map_err(|e| match &e.kind {
        quiver_exact::pathalg::ParseErrorKind::Semantic(p) => match CliError::from(p.clone()) {
            CliError::Cap(m) => CliError::Cap(m),
            _ => CliError::Parse(e.to_string()),
        },
        _ => CliError::Parse(e.to_string()),
    })?;
    let algebra = AlgebraBasis::compute(&pres, DEFAULT_DEGREE_CAP)?;
    let quiver = Arc::new(TranslationQuiver::compute(&algebra, opts.max_deg));
    Ok(Session { algebra, quiver })
}

pub fn analyze(session: &Session, opts: &Options) -> Result<AnalyzeReport, CliError> {
    let tq = &session.quiver;
    let name = |v: usize| tq.vertex_names[v].clone();
    let simples = tq
        .reports
        .iter()
        .map(|r| SimpleRow {
            vertex: name(r.vertex),
            pd: r.pd.to_string(),
            hom_vanishes: r.ext0_vanishes,
            ext1_vanishes: r.ext1_vanishes,
            ext2_dim: r.ext2_dim,
            two_regular: r.is_two_regular,
            tau: r.ext2_support_vertex.map(name),
            reason: r.reason.clone(),
        })
        .collect();
    let count = structure_count(tq);
    let frobenius: Vec<StructureRow> = frobenius_structures(tq)
        .iter()
        .map(|s| session.structure_row(s))
        .collect();
    let structures = if opts.count_only || count > LIST_LIMIT.into() {
        None
    } else {
        Some(
            enumerate_exact_structures(tq)?
                .map(|s| session.structure_row(&s))
                .collect(),
        )
    };
    Ok(AnalyzeReport {
        vertices: tq.vertex_names.clone(),
        algebra_dim: session.algebra.total_dim(),
        global_dimension: global_dimension(&session.algebra, opts.max_deg).to_string(),
        simples,
        solid_arrows: tq
            .solid_arrows
            .iter()
            .map(|a| (name(a.source), name(a.target), a.multiplicity))
            .collect(),
        dotted_arrows: tq
            .dotted_arrows
            .iter()
            .map(|d| (name(d.source), name(d.target)))
            .collect(),
        orbits: tq
            .orbits
            .iter()
            .map(|o| OrbitRow {
                name: o.name.clone(),
                vertices: o.vertices.iter().map(|&v| name(v)).collect(),
                stable: o.stable,
            })
            .collect(),
        stable_orbits: tq
            .stable_orbits()
            .iter()
            .filter_map(|o| o.name.clone())
            .collect(),
        structure_count: count.to_string(),
        frobenius_count: frobenius.len(),
        frobenius,
        structures,
    })
}

pub fn reconstruct(session: &Session, opts: &Options) -> Result<ReconstructReport, CliError> {
    let spec = session.selection(opts, "split")?;
    let pres = reconstruct_algebra(&spec, DEFAULT_DEGREE_CAP)?;
    let ig = if opts.verify_ig {
        let report = iwanaga_gorenstein_dimension(&pres, opts.check_span, opts.max_deg)?;
        let cot = cotilting_module(&spec, &pres, opts.check_span, opts.max_deg)?;
        let gp = gp_orthogonality_check(&spec, &pres, opts.check_span, opts.max_deg)?;
        Some(IgRow {
            n: report.n,
            right: report.right.verdict.to_string(),
            left: report.left.verdict.to_string(),
            cotilting_rigid: cot.rigid,
            cotilting_is_regular: cot.is_regular,
            gp_orthogonal: gp.iter().all(|r| r.orthogonal),
        })
    } else {
        None
    };
    let name = |v: usize| session.quiver.vertex_names[v].clone();
    Ok(ReconstructReport {
        selection: spec.label(),
        chosen: spec.chosen.clone(),
        kept: session.names(&pres.kept),
        presentation: pres.presentation.clone(),
        dim: pres.dim_total,
        loewy_length: pres.loewy_length,
        generators: pres
            .generators
            .iter()
            .map(|g| GeneratorRow {
                arrow: g.arrow.clone(),
                source: name(g.source),
                target: name(g.target),
                image: g.image.clone(),
            })
            .collect(),
        ig,
    })
}

pub fn k0(session: &Session, opts: &Options) -> Result<K0Report, CliError> {
    let spec = session.selection(opts, "split")?;
    let report = k0_group(&spec);
    let ex = verify_ex_equals_ar(&spec, opts.samples, opts.seed);
    let m = &report.ar_matrix;
    Ok(K0Report {
        selection: spec.label(),
        group: report.describe(),
        free_rank: report.free_rank,
        torsion: report.torsion.iter().map(|d| d.to_string()).collect(),
        ar_relations: (0..m.cols())
            .map(|c| m.column(c).iter().map(to_i64).collect())
            .collect(),
        cross_checked: report.cross_checked,
        samples: ex.samples,
        passed: ex.passed,
        failures: ex.failures,
    })
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("relation coefficients are small")
}
