use std::fmt::Write;

use hyperinc_core::format::{parse_weights, to_json_value, to_text};
use hyperinc_core::kernel::{
    find_certificates_exhaustive, nullity_decomposition, verify_certificate, CertificateKind, CertificateType,
    FinderBounds, InducedVector, KernelCertificate, NullityReport,
};
use hyperinc_core::{
    aggregate_eigenvalues, are_isomorphic, class_partition, compute_units, edge_vertex_incidence,
    predict_class_eigenpairs, predict_unit_eigenpairs, rank_and_nullspace, rank_modular_oracle, unit_contraction,
    vertex_edge_incidence, weighted_adjacency, EdgeWeighting, EigenvalueBound, Error, Hypergraph, IsoConfig, Label,
    LabeledVector, PredictedEigenpair, Rational, RationalMatrix,
};
use serde::Serialize;
use serde_json::Value;

use crate::render::{certificate_fields, set, sparse, sparse_induced, Report};

#[derive(Serialize)]
pub struct MatrixSummary {
    rows: usize,
    cols: usize,
    rank: usize,
    modular_rank: usize,
    nullity: usize,
    kernel_basis: Vec<LabeledVector<Rational>>,
    #[serde(skip)]
    basis_in_kernel: bool,
}

fn summarize(m: &RationalMatrix) -> Result<MatrixSummary, Error> {
    let basis = rank_and_nullspace(m);
    let mut basis_in_kernel = true;
    for x in &basis.vectors {
        basis_in_kernel &= m.matvec(x)?.is_zero();
    }
    Ok(MatrixSummary {
        rows: m.rows(),
        cols: m.cols(),
        rank: basis.rank,
        modular_rank: rank_modular_oracle(m)?,
        nullity: basis.nullity(),
        kernel_basis: basis.vectors,
        basis_in_kernel,
    })
}

impl MatrixSummary {
    fn failures(&self, name: &str, out: &mut Vec<String>) {
        if self.rank != self.modular_rank {
            out.push(format!("{name}_modular_rank_mismatch"));
        }
        if !self.basis_in_kernel {
            out.push(format!("{name}_basis_not_in_kernel"));
        }
    }

    fn render(&self, title: &str, out: &mut String) {
        let _ = writeln!(
            out,
            "{title} ({}x{}): rank {}, nullity {}",
            self.rows, self.cols, self.rank, self.nullity
        );
        for x in &self.kernel_basis {
            let _ = writeln!(out, "  kernel {}", sparse(x));
        }
    }
}

#[derive(Serialize)]
pub struct RankReport {
    vertices: usize,
    edges: usize,
    edge_vertex: MatrixSummary,
    vertex_edge: MatrixSummary,
}

pub fn rank(h: &Hypergraph) -> Result<RankReport, Error> {
    Ok(RankReport {
        vertices: h.vertex_count(),
        edges: h.edge_count(),
        edge_vertex: summarize(&edge_vertex_incidence(h))?,
        vertex_edge: summarize(&vertex_edge_incidence(h))?,
    })
}

impl Report for RankReport {
    fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.edge_vertex.failures("edge_vertex", &mut out);
        self.vertex_edge.failures("vertex_edge", &mut out);
        out
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "{} vertices, {} hyperedges", self.vertices, self.edges);
        self.edge_vertex.render("B_H", out);
        self.vertex_edge.render("I_H", out);
    }
}

#[derive(Serialize)]
struct UnitEntry {
    members: Vec<Label>,
    generator: Vec<Label>,
}

fn nullity_failures(n: &NullityReport) -> Vec<String> {
    n.failures().into_iter().map(str::to_owned).collect()
}

fn render_nullity(n: &NullityReport, prefix: &str, out: &mut String) {
    let _ = writeln!(
        out,
        "{prefix}rank(B_H) = {}, rank of contraction = {}",
        n.rank, n.contraction_rank
    );
    let _ = writeln!(
        out,
        "{prefix}nullity {} = {} + ({} - {})",
        n.nullity, n.contraction_nullity, n.vertices, n.units
    );
}

#[derive(Serialize)]
pub struct UnitsReport {
    unit_count: usize,
    contractible: bool,
    units: Vec<UnitEntry>,
    nullity: NullityReport,
}

pub fn units(h: &Hypergraph) -> UnitsReport {
    let partition = compute_units(h);
    let units = partition
        .units()
        .iter()
        .map(|u| UnitEntry {
            members: u.members.iter().map(|&v| h.vertices()[v].clone()).collect(),
            generator: u.generator.iter().map(|&e| h.edge_labels()[e].clone()).collect(),
        })
        .collect();
    UnitsReport {
        unit_count: partition.len(),
        contractible: !partition.is_trivial(),
        units,
        nullity: nullity_decomposition(h),
    }
}

impl Report for UnitsReport {
    fn failures(&self) -> Vec<String> {
        nullity_failures(&self.nullity)
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "{} units", self.unit_count);
        for u in &self.units {
            let _ = writeln!(out, "  {} generated by {}", set(&u.members), set(&u.generator));
        }
        render_nullity(&self.nullity, "", out);
    }
}

#[derive(Serialize)]
pub struct ContractReport {
    contractible: bool,
    /// `None` when the isomorphism search was skipped by the size bound.
    representatives_isomorphic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    isomorphism_skipped: Option<String>,
    nullity: NullityReport,
    contraction: Value,
    #[serde(skip)]
    contraction_text: String,
}

pub fn contract(h: &Hypergraph, iso: &IsoConfig) -> Result<ContractReport, Error> {
    let c = unit_contraction(h);
    let reps: Vec<&str> = c
        .units
        .representatives()
        .iter()
        .map(|&v| h.vertices()[v].as_str())
        .collect();
    let induced = h.induced(&reps)?;
    let (representatives_isomorphic, isomorphism_skipped) =
        match are_isomorphic(&induced.hypergraph, &c.hypergraph, iso) {
            Ok(found) => (Some(found.is_some()), None),
            Err(e @ Error::InstanceTooLarge { .. }) => (None, Some(e.to_string())),
            Err(e) => return Err(e),
        };
    Ok(ContractReport {
        contractible: !c.units.is_trivial(),
        representatives_isomorphic,
        isomorphism_skipped,
        nullity: nullity_decomposition(h),
        contraction: to_json_value(&c.hypergraph),
        contraction_text: to_text(&c.hypergraph)?,
    })
}

impl Report for ContractReport {
    fn failures(&self) -> Vec<String> {
        let mut out = nullity_failures(&self.nullity);
        if self.representatives_isomorphic == Some(false) {
            out.push("representatives_not_isomorphic".into());
        }
        out
    }

    /// The contraction as a hypergraph file, with the checks as comments.
    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "# {} units from {} vertices{}",
            self.nullity.units,
            self.nullity.vertices,
            if self.contractible {
                ""
            } else {
                " (nothing to contract)"
            }
        );
        render_nullity(&self.nullity, "# ", out);
        match (self.representatives_isomorphic, &self.isomorphism_skipped) {
            (Some(ok), _) => {
                let _ = writeln!(out, "# one vertex per unit induces an isomorphic copy: {ok}");
            }
            (None, Some(why)) => {
                let _ = writeln!(out, "# isomorphism check skipped: {why}");
            }
            (None, None) => {}
        }
        out.push_str(&self.contraction_text);
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    certificate: KernelCertificate,
    valid: bool,
    kernel: bool,
    combinatorial: bool,
    residual: InducedVector,
}

/// Parses a certificate from inline JSON.
pub fn parse_certificate(src: &str) -> Result<CertificateKind, Error> {
    serde_json::from_str(src).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn verify(h: &Hypergraph, kind: CertificateKind) -> Result<VerifyReport, Error> {
    let certificate = KernelCertificate::build(h, kind)?;
    let v = verify_certificate(h, &certificate)?;
    Ok(VerifyReport {
        certificate,
        valid: v.valid(),
        kernel: v.kernel,
        combinatorial: v.combinatorial,
        residual: v.residual,
    })
}

impl Report for VerifyReport {
    fn failures(&self) -> Vec<String> {
        if self.valid {
            Vec::new()
        } else {
            vec!["certificate_not_in_kernel".into()]
        }
    }

    fn render(&self, out: &mut String) {
        let c = &self.certificate;
        let _ = writeln!(out, "{} {}", c.certificate_type(), certificate_fields(&c.kind));
        let _ = writeln!(out, "vector {}", sparse_induced(&c.vector));
        let _ = writeln!(out, "residual {}", sparse_induced(&self.residual));
        let _ = writeln!(
            out,
            "in kernel: {}, counting identity: {}",
            self.kernel, self.combinatorial
        );
        let _ = writeln!(out, "{}", if self.valid { "VALID" } else { "INVALID" });
    }
}

#[derive(Serialize)]
pub struct FindReport {
    kind: String,
    count: usize,
    truncated: bool,
    certificates: Vec<KernelCertificate>,
}

pub fn find(h: &Hypergraph, kind: CertificateType, bounds: &FinderBounds) -> Result<FindReport, Error> {
    let certificates = find_certificates_exhaustive(h, kind, bounds)?;
    Ok(FindReport {
        kind: kind.to_string(),
        count: certificates.len(),
        truncated: certificates.len() >= bounds.max_results,
        certificates,
    })
}

impl Report for FindReport {
    fn failures(&self) -> Vec<String> {
        Vec::new()
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "{} {} certificate(s){}",
            self.count,
            self.kind,
            if self.truncated { " (result limit reached)" } else { "" }
        );
        for c in &self.certificates {
            let _ = writeln!(
                out,
                "  {}  vector {}",
                certificate_fields(&c.kind),
                sparse_induced(&c.vector)
            );
        }
    }
}

pub enum WeightSource {
    Unit,
    Banerjee,
    File(String),
}

#[derive(Serialize)]
pub struct SpectraReport {
    weighting: String,
    weights: serde_json::Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    adjacency: Option<Vec<Vec<String>>>,
    eigenvalues: Vec<EigenvalueBound>,
    eigenpairs: Vec<PredictedEigenpair>,
    #[serde(skip)]
    vertex_labels: Vec<Label>,
}

pub fn spectra(
    h: &Hypergraph,
    source: &WeightSource,
    classes: &[Vec<String>],
    show_matrix: bool,
) -> Result<SpectraReport, Error> {
    let w = match source {
        WeightSource::Unit => EdgeWeighting::unit(h),
        WeightSource::Banerjee => EdgeWeighting::banerjee(h)?,
        WeightSource::File(src) => EdgeWeighting::from_labels(h, parse_weights(src)?)?,
    };
    let eigenpairs = if classes.is_empty() {
        predict_unit_eigenpairs(h, &w)?
    } else {
        predict_class_eigenpairs(h, &w, &class_partition(h, classes)?)?
    };
    let adjacency = show_matrix.then(|| weighted_adjacency(h, &w)).transpose()?.map(|a| {
        (0..a.matrix.rows())
            .map(|r| a.matrix.row(r).iter().map(ToString::to_string).collect())
            .collect()
    });
    let weights = h
        .edge_labels()
        .iter()
        .zip(w.weights())
        .map(|(l, q)| (l.to_string(), Value::String(q.to_string())))
        .collect();
    Ok(SpectraReport {
        weighting: w.kind().to_string(),
        weights,
        adjacency,
        eigenvalues: aggregate_eigenvalues(&eigenpairs),
        eigenpairs,
        vertex_labels: h.vertices().to_vec(),
    })
}

impl Report for SpectraReport {
    fn failures(&self) -> Vec<String> {
        self.eigenpairs
            .iter()
            .filter(|p| !p.holds())
            .map(|p| {
                let members: Vec<&str> = p.class.iter().map(Label::as_str).collect();
                format!("eigenpair_not_verified:{}", members.join(","))
            })
            .collect()
    }

    fn render(&self, out: &mut String) {
        let weights: Vec<String> = self
            .weights
            .iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or_default()))
            .collect();
        let _ = writeln!(out, "weighting {}: {}", self.weighting, weights.join(" "));
        if let Some(rows) = &self.adjacency {
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
            let label_width = self.vertex_labels.iter().map(|l| l.as_str().len()).max().unwrap_or(1);
            let _ = writeln!(out, "adjacency:");
            for (label, row) in self.vertex_labels.iter().zip(rows) {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(out, "  {:>label_width$} | {}", label.as_str(), cells.join(" "));
            }
        }
        if self.eigenpairs.is_empty() {
            let _ = writeln!(out, "no class with two or more vertices; nothing predicted");
        }
        for p in &self.eigenpairs {
            let _ = writeln!(
                out,
                "class {}: eigenvalue {} with multiplicity >= {} [{}]",
                set(&p.class),
                p.eigenvalue,
                p.multiplicity_lower_bound,
                if p.holds() { "verified" } else { "NOT verified" }
            );
        }
        for e in &self.eigenvalues {
            let _ = writeln!(
                out,
                "eigenvalue {}: multiplicity >= {}",
                e.eigenvalue, e.multiplicity_lower_bound
            );
        }
    }
}
