//! Report documents for `analyze` and `ehrhart`, as JSON or plain tables.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use polydisc::ehrhart::{interior_counts, InteriorCountTable};
use polydisc::involution::ScalarVector;
use polydisc::symfun::{brion_count, brion_volume, choose_generic_xi, verify_polytope_symfun_identity};
use polydisc::{analyze, DegreeReport, LatticePolytope, RationalPolynomial};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    fn new(check: &str, passed: bool, detail: Option<String>) -> Self {
        Self { check: check.to_string(), passed, detail }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartEntry {
    pub dim: usize,
    /// Coefficients of `E_k(t)` from `t^0` upward, as exact rationals.
    pub coefficients: Vec<String>,
    pub polynomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InteriorTable {
    pub max_dilation: u64,
    /// `rows[p][i - 1]` is the number of interior points of the `i`-dilated `p`-faces.
    pub rows: Vec<Vec<u64>>,
}

impl From<&InteriorCountTable> for InteriorTable {
    fn from(t: &InteriorCountTable) -> Self {
        Self { max_dilation: t.max_dilation(), rows: t.rows().to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrionSection {
    pub xi: Vec<String>,
    pub lattice_points: String,
    pub brion_count: String,
    pub volume: String,
    pub brion_volume: String,
    pub identity_lhs: String,
    pub identity_rhs: String,
}

/// Everything `analyze` knows about a polytope. Big integers are strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub name: Option<String>,
    pub dimension: usize,
    pub vertices: Vec<Vec<String>>,
    pub f_vector: Vec<u64>,
    pub simple: bool,
    pub smooth: bool,
    /// `c(P)` by face volumes.
    pub c: String,
    /// `c(P)` by interior points of dilated faces.
    pub c_interior: String,
    pub per_dim_volume_sums: Vec<String>,
    pub ehrhart_vector: Vec<EhrhartEntry>,
    pub interior_table: InteriorTable,
    pub defective_criterion_fires: bool,
    pub dual_defective: bool,
    pub brion: Option<BrionSection>,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
}

fn entries(polys: &[RationalPolynomial]) -> Vec<EhrhartEntry> {
    polys
        .iter()
        .enumerate()
        .map(|(dim, e)| EhrhartEntry {
            dim,
            coefficients: e.coeffs().iter().map(ToString::to_string).collect(),
            polynomial: e.to_string(),
        })
        .collect()
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn dehn_sommerville(r: &DegreeReport) -> Verdict {
    let f = ScalarVector::from_ints(&r.f_vector.iter().map(|&x| x as i64).collect::<Vec<_>>());
    let fixed = f.s_transform() == f;
    let images = r.ehrhart_vector.to_poly_vector().s_transform();
    let extended = images
        .entries()
        .iter()
        .zip(&r.ehrhart_vector.entries)
        .all(|(fp, ep)| *fp == ep.reflect());
    let detail = match (fixed, extended) {
        (true, true) => None,
        (false, _) => Some("S does not fix the f-vector".to_string()),
        (true, false) => Some("S(E)_p(t) differs from E_p(-t)".to_string()),
    };
    Verdict::new("dehn-sommerville", fixed && extended, detail)
}

fn brion_section(p: &LatticePolytope, r: &DegreeReport, verdicts: &mut Vec<Verdict>) -> Result<BrionSection, CliError> {
    let xi = choose_generic_xi(p);
    let count = brion_count(p, &xi)?;
    let volume = brion_volume(p, &xi)?;
    let identity = verify_polytope_symfun_identity(p, &xi)?;
    let lattice_points = polydisc::polytope::count_lattice_points(p, p.whole(), 1)?;
    let n = p.dim();
    let direct_volume = &r.per_dim_volume_sums[n];
    verdicts.push(Verdict::new("brion-count", count == BigInt::from(lattice_points), None));
    verdicts.push(Verdict::new("brion-volume", &volume == direct_volume, None));
    let c = polydisc::Rational::from_integer(r.c_volumes.clone());
    verdicts.push(Verdict::new(
        "vertex-identity",
        identity.equal && identity.lhs == c,
        (!identity.equal).then(|| format!("{} != {}", identity.lhs, identity.rhs)),
    ));
    Ok(BrionSection {
        xi: strings(&xi),
        lattice_points: lattice_points.to_string(),
        brion_count: count.to_string(),
        volume: direct_volume.to_string(),
        brion_volume: volume.to_string(),
        identity_lhs: identity.lhs.to_string(),
        identity_rhs: identity.rhs.to_string(),
    })
}

impl ReportDocument {
    /// Runs the full analysis with interior counts up to `depth`.
    pub fn build(p: &LatticePolytope, depth: u64) -> Result<Self, CliError> {
        let r = analyze(p, Some(depth))?;
        let mut verdicts = vec![Verdict::new("reciprocity", true, None)];
        let mut notes = Vec::new();
        if r.is_simple {
            verdicts.push(Verdict::new(
                "formula-agreement",
                r.c_volumes == r.c_interior,
                (r.c_volumes != r.c_interior)
                    .then(|| format!("volumes {} vs interior points {}", r.c_volumes, r.c_interior)),
            ));
            verdicts.push(dehn_sommerville(&r));
            if r.defective_criterion_fires {
                verdicts.push(Verdict::new("defectivity-implies-zero", r.c_volumes.is_zero(), None));
            }
        } else {
            notes.push(
                "polytope is not simple: the volume sum is evaluated formally and the interior-point value need not agree"
                    .to_string(),
            );
        }
        if !r.is_smooth {
            notes.push("polytope is not smooth: c is the degree of the discriminant only for smooth polytopes".to_string());
        }
        let brion = if r.is_smooth { Some(brion_section(p, &r, &mut verdicts)?) } else { None };
        Ok(Self {
            name: p.name().map(str::to_string),
            dimension: r.dim,
            vertices: p.vertices().iter().map(|v| strings(v)).collect(),
            f_vector: r.f_vector.clone(),
            simple: r.is_simple,
            smooth: r.is_smooth,
            c: r.c_volumes.to_string(),
            c_interior: r.c_interior.to_string(),
            per_dim_volume_sums: strings(&r.per_dim_volume_sums),
            ehrhart_vector: entries(&r.ehrhart_vector.entries),
            interior_table: (&r.interior_table).into(),
            defective_criterion_fires: r.defective_criterion_fires,
            dual_defective: r.is_dual_defective(),
            brion,
            verdicts,
            notes,
        })
    }

    pub fn all_verdicts_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "polytope          {}", self.name.as_deref().unwrap_or("(unnamed)"));
        let _ = writeln!(s, "dimension         {}", self.dimension);
        let _ = writeln!(s, "vertices          {}", self.vertices.len());
        let _ = writeln!(s, "f-vector          {:?}", self.f_vector);
        let _ = writeln!(s, "simple            {}", self.simple);
        let _ = writeln!(s, "smooth            {}", self.smooth);
        let _ = writeln!(s, "c (volumes)       {}", self.c);
        let _ = writeln!(s, "c (interior)      {}", self.c_interior);
        let _ = writeln!(s, "defect criterion  {}", self.defective_criterion_fires);
        let _ = writeln!(s, "dual defective    {}", self.dual_defective);
        s.push('\n');
        let _ = writeln!(s, "{:>3}  {:>10}  E_k(t)", "k", "sum Vol");
        for (e, vol) in self.ehrhart_vector.iter().zip(&self.per_dim_volume_sums) {
            let _ = writeln!(s, "{:>3}  {:>10}  {}", e.dim, vol, e.polynomial);
        }
        s.push('\n');
        render_table(&mut s, &self.interior_table);
        if let Some(b) = &self.brion {
            s.push('\n');
            let _ = writeln!(s, "xi                ({})", b.xi.join(", "));
            let _ = writeln!(s, "lattice points    {} (vertex sum {})", b.lattice_points, b.brion_count);
            let _ = writeln!(s, "volume            {} (vertex sum {})", b.volume, b.brion_volume);
            let _ = writeln!(s, "vertex identity   {} = {}", b.identity_lhs, b.identity_rhs);
        }
        s.push('\n');
        for v in &self.verdicts {
            let status = if v.passed { "ok" } else { "FAILED" };
            match &v.detail {
                Some(d) => {
                    let _ = writeln!(s, "{:<26}{status} ({d})", v.check);
                }
                None => {
                    let _ = writeln!(s, "{:<26}{status}", v.check);
                }
            }
        }
        for note in &self.notes {
            let _ = writeln!(s, "note: {note}");
        }
        s
    }
}

fn render_table(s: &mut String, t: &InteriorTable) {
    let _ = write!(s, "interior points  p \\ i");
    for i in 1..=t.max_dilation {
        let _ = write!(s, "{i:>8}");
    }
    s.push('\n');
    for (p, row) in t.rows.iter().enumerate() {
        let _ = write!(s, "{p:>22}");
        for x in row {
            let _ = write!(s, "{x:>8}");
        }
        s.push('\n');
    }
}

/// `E_k(t)` per face dimension and the interior count table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartDocument {
    pub name: Option<String>,
    pub dimension: usize,
    pub ehrhart_vector: Vec<EhrhartEntry>,
    pub interior_table: InteriorTable,
}

impl EhrhartDocument {
    pub fn build(p: &LatticePolytope, max_dilation: u64) -> Result<Self, CliError> {
        let ev = polydisc::ehrhart::ehrhart_vector(p)?;
        let table = if max_dilation == 0 {
            InteriorTable { max_dilation: 0, rows: vec![Vec::new(); p.dim() + 1] }
        } else {
            (&interior_counts(p, max_dilation)?).into()
        };
        Ok(Self {
            name: p.name().map(str::to_string),
            dimension: p.dim(),
            ehrhart_vector: entries(&ev.entries),
            interior_table: table,
        })
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "polytope  {}", self.name.as_deref().unwrap_or("(unnamed)"));
        for e in &self.ehrhart_vector {
            let _ = writeln!(s, "E_{}(t) = {}", e.dim, e.polynomial);
        }
        s.push('\n');
        render_table(&mut s, &self.interior_table);
        s
    }
}
