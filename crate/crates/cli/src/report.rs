use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

/// Everything one invocation prints with `--json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub field: String,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Analyze(AnalyzeReport),
    Reconstruct(ReconstructReport),
    K0(K0Report),
    Dot { dot: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimpleRow {
    pub vertex: String,
    pub pd: String,
    pub hom_vanishes: bool,
    pub ext1_vanishes: bool,
    pub ext2_dim: usize,
    pub two_regular: bool,
    pub tau: Option<String>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureRow {
    pub label: String,
    pub chosen: Vec<usize>,
    pub allowed_simples: Vec<String>,
    pub projective: Vec<String>,
    pub injective: Vec<String>,
    pub frobenius: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub vertices: Vec<String>,
    pub algebra_dim: usize,
    pub global_dimension: String,
    pub simples: Vec<SimpleRow>,
    /// `(source, target, multiplicity)` of irreducible maps between projectives.
    pub solid_arrows: Vec<(String, String, usize)>,
    pub dotted_arrows: Vec<(String, String)>,
    pub orbits: Vec<OrbitRow>,
    pub stable_orbits: Vec<String>,
    pub structure_count: String,
    pub frobenius_count: usize,
    pub frobenius: Vec<StructureRow>,
    /// Omitted in count-only mode or when there are too many to list.
    pub structures: Option<Vec<StructureRow>>,
}

impl AnalyzeReport {
    pub fn summary(&self) -> String {
        let k = self.dotted_arrows.len();
        let mut s = format!("{k} dotted arrow{}", plural(k));
        if let [(a, b)] = self.dotted_arrows.as_slice() {
            if a == b {
                let _ = write!(s, " (self-loop at {a})");
            }
        }
        let one = self.structure_count == "1";
        let _ = write!(
            s,
            "; {} exact structure{}",
            self.structure_count,
            if one { " (split)" } else { "s" }
        );
        if !self.stable_orbits.is_empty() {
            let _ = write!(s, "; stable orbits: {}", self.stable_orbits.join(", "));
        }
        if k > 0 {
            let _ = write!(s, "; {} Frobenius", self.frobenius_count);
        }
        s
    }
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}

fn list(v: &[String]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

impl fmt::Display for AnalyzeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        writeln!(
            f,
            "dim Γ = {}, gl.dim Γ = {}",
            self.algebra_dim, self.global_dimension
        )?;
        writeln!(f)?;
        writeln!(
            f,
            "{:<8} {:>4} {:>5} {:>5} {:>5}  {:<6} notes",
            "vertex", "pd", "Hom", "Ext1", "Ext2", "τ"
        )?;
        for r in &self.simples {
            writeln!(
                f,
                "{:<8} {:>4} {:>5} {:>5} {:>5}  {:<6} {}",
                r.vertex,
                r.pd,
                if r.hom_vanishes { "0" } else { "≠0" },
                if r.ext1_vanishes { "0" } else { "≠0" },
                r.ext2_dim,
                r.tau.as_deref().unwrap_or("-"),
                r.reason.as_deref().unwrap_or("2-regular"),
            )?;
        }
        writeln!(f)?;
        for o in &self.orbits {
            if let Some(name) = &o.name {
                writeln!(
                    f,
                    "orbit {name}: {} ({})",
                    o.vertices.join(" "),
                    if o.stable { "stable" } else { "non-stable" }
                )?;
            }
        }
        if !self.frobenius.is_empty() {
            writeln!(f)?;
            writeln!(f, "Frobenius structures:")?;
            for s in &self.frobenius {
                writeln!(
                    f,
                    "  {:<10} projective-injective: {}",
                    s.label,
                    list(&s.projective)
                )?;
            }
        }
        if let Some(all) = &self.structures {
            writeln!(f)?;
            writeln!(
                f,
                "{:<16} {:<24} {:<24} frobenius",
                "structure", "projective", "injective"
            )?;
            for s in all {
                writeln!(
                    f,
                    "{:<16} {:<24} {:<24} {}",
                    s.label,
                    list(&s.projective),
                    list(&s.injective),
                    if s.frobenius { "yes" } else { "no" }
                )?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorRow {
    pub arrow: String,
    pub source: String,
    pub target: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IgRow {
    pub n: usize,
    pub right: String,
    pub left: String,
    pub cotilting_rigid: bool,
    pub cotilting_is_regular: bool,
    pub gp_orthogonal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReconstructReport {
    pub selection: String,
    pub chosen: Vec<usize>,
    pub kept: Vec<String>,
    pub presentation: String,
    pub dim: usize,
    pub loewy_length: usize,
    pub generators: Vec<GeneratorRow>,
    pub ig: Option<IgRow>,
}

impl ReconstructReport {
    /// Whether the requested checks passed; undetermined verdicts count as
    /// passing only when allowed.
    pub fn verified(&self, allow_undetermined: bool) -> bool {
        let Some(ig) = &self.ig else { return true };
        let ok = |v: &str| v.starts_with("yes") || (allow_undetermined && v == "undetermined");
        ok(&ig.right) && ok(&ig.left) && ig.cotilting_rigid && ig.gp_orthogonal
    }
}

impl fmt::Display for ReconstructReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# structure {}: endomorphism algebra of {}",
            self.selection,
            self.kept.join(" ")
        )?;
        writeln!(f, "# dim {}, Loewy length {}", self.dim, self.loewy_length)?;
        for g in &self.generators {
            writeln!(f, "# {} = {}", g.arrow, g.image)?;
        }
        if let Some(ig) = &self.ig {
            writeln!(f, "# IG: {}/{} (bound {})", ig.right, ig.left, ig.n)?;
            writeln!(
                f,
                "# cotilting module rigid: {}; Λ-orthogonality of projectives: {}",
                ig.cotilting_rigid, ig.gp_orthogonal
            )?;
        }
        write!(f, "{}", self.presentation)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct K0Report {
    pub selection: String,
    pub group: String,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    /// One AR relation vector per chosen dotted arrow, over the vertices.
    pub ar_relations: Vec<Vec<i64>>,
    pub cross_checked: bool,
    pub samples: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl fmt::Display for K0Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "K0 = {}; {}/{} Ex=AR samples pass",
            self.group, self.passed, self.samples
        )?;
        for v in &self.ar_relations {
            let parts: Vec<String> = v.iter().map(i64::to_string).collect();
            writeln!(f, "  AR relation [{}]", parts.join(", "))?;
        }
        for fail in &self.failures {
            writeln!(f, "  failed: {fail}")?;
        }
        Ok(())
    }
}
