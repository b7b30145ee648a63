//! Python bindings. Exact values cross the boundary as `fractions.Fraction`.

use hyperinc_core::format::{parse_hypergraph, to_json, to_text};
use hyperinc_core::kernel::{
    find_certificates_exhaustive, nullity_decomposition, verify_certificate, CertificateKind, CertificateType,
    FinderBounds, KernelCertificate,
};
use hyperinc_core::vector::parse_rational;
use hyperinc_core::{
    are_isomorphic, class_partition, compute_units, edge_vertex_incidence, predict_class_eigenpairs,
    predict_unit_eigenpairs, random_hypergraph, rank_and_nullspace, uniform_cycle, unit_contraction,
    vertex_edge_incidence, weighted_adjacency, EdgeWeighting, Error, Hypergraph, IsoConfig, Label, LabeledVector,
    RandomSpec, Rational, RationalMatrix,
};
use num_traits::Zero;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};

create_exception!(
    hyperinc,
    HyperincError,
    PyValueError,
    "Invalid input or an unsatisfiable request."
);

fn py_err(e: Error) -> PyErr {
    HyperincError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.to_string(),))
}

fn vector_dict<'py>(py: Python<'py>, x: &LabeledVector<Rational>) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (label, q) in x.iter() {
        d.set_item(label.as_str(), fraction(py, q)?)?;
    }
    Ok(d)
}

fn matrix_rows<'py>(py: Python<'py>, m: &RationalMatrix) -> PyResult<Bound<'py, PyList>> {
    let rows = PyList::empty(py);
    for r in 0..m.rows() {
        let row = m.row(r).iter().map(|q| fraction(py, q)).collect::<PyResult<Vec<_>>>()?;
        rows.append(row)?;
    }
    Ok(rows)
}

fn json_loads<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| HyperincError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn labels(ls: &[Label]) -> Vec<String> {
    ls.iter().map(ToString::to_string).collect()
}

/// A finite hypergraph with labelled vertices and labelled hyperedges.
#[pyclass(name = "Hypergraph", module = "hyperinc", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyHypergraph {
    inner: Hypergraph,
}

impl PyHypergraph {
    fn matrix(&self, side: &str) -> PyResult<RationalMatrix> {
        match side {
            "edge_vertex" => Ok(edge_vertex_incidence(&self.inner)),
            "vertex_edge" => Ok(vertex_edge_incidence(&self.inner)),
            other => Err(PyValueError::new_err(format!(
                "side must be 'edge_vertex' or 'vertex_edge', not {other:?}"
            ))),
        }
    }

    fn weighting(&self, weights: &Bound<'_, PyAny>) -> PyResult<EdgeWeighting> {
        let h = &self.inner;
        if let Ok(name) = weights.cast::<PyString>() {
            return match name.to_str()? {
                "unit" => Ok(EdgeWeighting::unit(h)),
                "banerjee" => EdgeWeighting::banerjee(h).map_err(py_err),
                other => Err(PyValueError::new_err(format!(
                    "weights must be 'unit', 'banerjee' or a dict, not {other:?}"
                ))),
            };
        }
        let map = weights.cast::<PyDict>()?;
        let mut entries = Vec::with_capacity(map.len());
        for (k, v) in map.iter() {
            let text = v.str()?.to_string();
            let q = parse_rational(&text)
                .ok_or_else(|| py_err(Error::BadWeight(format!("{text} is not an exact rational"))))?;
            entries.push((k.extract::<String>()?, q));
        }
        EdgeWeighting::from_labels(h, entries).map_err(py_err)
    }
}

#[pymethods]
impl PyHypergraph {
    /// `Hypergraph({"e1": ["a", "b"], ...}, vertices=None)`. Without
    /// `vertices`, the vertex set is the union of the hyperedges.
    #[new]
    #[pyo3(signature = (edges, vertices = None))]
    fn new(edges: &Bound<'_, PyDict>, vertices: Option<Vec<String>>) -> PyResult<Self> {
        let mut parsed: Vec<(String, Vec<Label>)> = Vec::with_capacity(edges.len());
        for (name, members) in edges.iter() {
            let members: Vec<String> = members.extract()?;
            parsed.push((name.extract()?, members.into_iter().map(Label::from).collect()));
        }
        let vertices = vertices.unwrap_or_else(|| {
            let mut all: Vec<String> = parsed
                .iter()
                .flat_map(|(_, m)| m.iter().map(ToString::to_string))
                .collect();
            all.sort();
            all.dedup();
            all
        });
        Ok(PyHypergraph {
            inner: Hypergraph::new(vertices, parsed).map_err(py_err)?,
        })
    }

    /// Parses the text or JSON file format.
    #[staticmethod]
    fn parse(source: &str) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: parse_hypergraph(source).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn read(path: std::path::PathBuf) -> PyResult<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// The k-uniform cycle on vertices `0..n-1`.
    #[staticmethod]
    fn cycle(n: usize, k: usize) -> PyResult<Self> {
        Ok(PyHypergraph {
            inner: uniform_cycle(n, k).map_err(py_err)?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (n, m, max_size = None, seed = 0))]
    fn random(n: usize, m: usize, max_size: Option<usize>, seed: u64) -> PyResult<Self> {
        let spec = RandomSpec {
            vertices: n,
            edges: m,
            max_size: max_size.unwrap_or(n),
            seed,
        };
        Ok(PyHypergraph {
            inner: random_hypergraph(&spec).map_err(py_err)?,
        })
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        labels(self.inner.vertices())
    }

    /// Hyperedge label to member labels, in file order.
    #[getter]
    fn edges<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (i, name) in self.inner.edge_labels().iter().enumerate() {
            d.set_item(name.as_str(), labels(&self.inner.edge_vertex_labels(i)))?;
        }
        Ok(d)
    }

    fn to_text(&self) -> PyResult<String> {
        to_text(&self.inner).map_err(py_err)
    }

    fn to_json(&self) -> String {
        to_json(&self.inner)
    }

    /// 0/1 incidence matrix: `edge_vertex` is |E|x|V|, `vertex_edge` its transpose.
    #[pyo3(signature = (side = "edge_vertex"))]
    fn incidence(&self, side: &str) -> PyResult<Vec<Vec<u8>>> {
        let m = self.matrix(side)?;
        Ok((0..m.rows())
            .map(|r| m.row(r).iter().map(|q| u8::from(!q.is_zero())).collect())
            .collect())
    }

    #[pyo3(signature = (side = "edge_vertex"))]
    fn rank(&self, side: &str) -> PyResult<usize> {
        Ok(rank_and_nullspace(&self.matrix(side)?).rank)
    }

    #[pyo3(signature = (side = "edge_vertex"))]
    fn nullity(&self, side: &str) -> PyResult<usize> {
        Ok(rank_and_nullspace(&self.matrix(side)?).nullity())
    }

    /// A basis of the null space, one `{label: Fraction}` dict per vector.
    #[pyo3(signature = (side = "edge_vertex"))]
    fn kernel_basis<'py>(&self, py: Python<'py>, side: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
        rank_and_nullspace(&self.matrix(side)?)
            .vectors
            .iter()
            .map(|x| vector_dict(py, x))
            .collect()
    }

    /// Classes of vertices with identical stars.
    fn units(&self) -> Vec<Vec<String>> {
        let units = compute_units(&self.inner);
        units
            .classes()
            .iter()
            .map(|c| c.iter().map(|&v| self.inner.vertices()[v].to_string()).collect())
            .collect()
    }

    /// Every unit collapsed to one vertex labelled by its members joined with `+`.
    fn contract(&self) -> Self {
        PyHypergraph {
            inner: unit_contraction(&self.inner).hypergraph,
        }
    }

    /// Ranks and nullities of the hypergraph and its unit contraction.
    fn nullity_decomposition<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = nullity_decomposition(&self.inner);
        let d = PyDict::new(py);
        d.set_item("vertices", r.vertices)?;
        d.set_item("units", r.units)?;
        d.set_item("rank", r.rank)?;
        d.set_item("nullity", r.nullity)?;
        d.set_item("contraction_rank", r.contraction_rank)?;
        d.set_item("contraction_nullity", r.contraction_nullity)?;
        d.set_item("deficiency", r.deficiency)?;
        d.set_item("holds", r.holds())?;
        Ok(d)
    }

    /// `True`/`False`, or `None` when either side exceeds `max_vertices`.
    #[pyo3(signature = (other, max_vertices = None))]
    fn is_isomorphic(&self, other: &PyHypergraph, max_vertices: Option<usize>) -> PyResult<Option<bool>> {
        let config = max_vertices.map_or_else(IsoConfig::default, |max_vertices| IsoConfig { max_vertices });
        match are_isomorphic(&self.inner, &other.inner, &config) {
            Ok(found) => Ok(Some(found.is_some())),
            Err(Error::InstanceTooLarge { .. }) => Ok(None),
            Err(e) => Err(py_err(e)),
        }
    }

    /// Checks a certificate given as a dict or JSON string, e.g.
    /// `{"kind": "equal_edge_partition", "u": ["1"], "v": ["2", "3"]}`.
    fn verify<'py>(&self, py: Python<'py>, certificate: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
        let text: String = match certificate.cast::<PyString>() {
            Ok(s) => s.to_str()?.to_owned(),
            Err(_) => py.import("json")?.call_method1("dumps", (certificate,))?.extract()?,
        };
        let kind: CertificateKind =
            serde_json::from_str(&text).map_err(|e| HyperincError::new_err(format!("certificate: {e}")))?;
        let cert = KernelCertificate::build(&self.inner, kind).map_err(py_err)?;
        let check = verify_certificate(&self.inner, &cert).map_err(py_err)?;
        let d = PyDict::new(py);
        d.set_item("valid", check.valid())?;
        d.set_item("kernel", check.kernel)?;
        d.set_item("combinatorial", check.combinatorial)?;
        d.set_item("certificate", json_loads(py, &cert)?)?;
        Ok(d)
    }

    /// All certificates of one kind (`"equal_edge_partition"`, `"unit_pair"`, ...).
    #[pyo3(signature = (kind, max_vertices = None, max_edges = None, max_results = None))]
    fn find<'py>(
        &self,
        py: Python<'py>,
        kind: &str,
        max_vertices: Option<usize>,
        max_edges: Option<usize>,
        max_results: Option<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let kind: CertificateType = kind.parse().map_err(py_err)?;
        let defaults = FinderBounds::default();
        let bounds = FinderBounds {
            max_vertices: max_vertices.unwrap_or(defaults.max_vertices),
            max_edges: max_edges.unwrap_or(defaults.max_edges),
            max_results: max_results.unwrap_or(defaults.max_results),
        };
        let found = find_certificates_exhaustive(&self.inner, kind, &bounds).map_err(py_err)?;
        json_loads(py, &found)
    }

    /// Weighted adjacency matrix; `weights` is `"unit"`, `"banerjee"` or
    /// a dict from hyperedge label to a positive rational.
    #[pyo3(signature = (weights = None))]
    fn adjacency<'py>(&self, py: Python<'py>, weights: Option<&Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyList>> {
        let w = match weights {
            Some(w) => self.weighting(w)?,
            None => EdgeWeighting::unit(&self.inner),
        };
        matrix_rows(py, &weighted_adjacency(&self.inner, &w).map_err(py_err)?.matrix)
    }

    /// Eigenpairs predicted by the units, or by the given vertex classes
    /// (unlisted vertices become singletons). Each one is checked exactly.
    #[pyo3(signature = (weights = None, classes = None))]
    fn spectra<'py>(
        &self,
        py: Python<'py>,
        weights: Option<&Bound<'py, PyAny>>,
        classes: Option<Vec<Vec<String>>>,
    ) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let h = &self.inner;
        let w = match weights {
            Some(w) => self.weighting(w)?,
            None => EdgeWeighting::unit(h),
        };
        let pairs = match classes {
            None => predict_unit_eigenpairs(h, &w),
            Some(classes) => class_partition(h, &classes).and_then(|p| predict_class_eigenpairs(h, &w, &p)),
        }
        .map_err(py_err)?;
        pairs
            .iter()
            .map(|p| {
                let d = PyDict::new(py);
                d.set_item("eigenvalue", fraction(py, &p.eigenvalue)?)?;
                d.set_item("class", labels(&p.class))?;
                d.set_item("multiplicity_lower_bound", p.multiplicity_lower_bound)?;
                d.set_item("verified", p.verified)?;
                d.set_item("independent", p.independent)?;
                let vectors = p
                    .eigenvectors
                    .iter()
                    .map(|x| vector_dict(py, x))
                    .collect::<PyResult<Vec<_>>>()?;
                d.set_item("eigenvectors", vectors)?;
                Ok(d)
            })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Hypergraph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

#[pymodule]
fn hyperinc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add("HyperincError", m.py().get_type::<HyperincError>())?;
    Ok(())
}
