//! Weighted adjacency matrices and the eigenpairs forced by units and by
//! classes of symmetric vertices.
//!
//! Every predicted eigenpair is checked by an exact product `A·x = λx`;
//! nothing here computes a spectrum numerically.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::label::Label;
use crate::linalg::elimination::span_rank;
use crate::linalg::matrix::RationalMatrix;
use crate::units::compute_units;
use crate::vector::{LabeledVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightingKind {
    /// `w ≡ 1`.
    Unit,
    /// `w(e) = 1/(|e|−1)`.
    Banerjee,
    Custom,
}

impl fmt::Display for WeightingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightingKind::Unit => "unit",
            WeightingKind::Banerjee => "banerjee",
            WeightingKind::Custom => "custom",
        })
    }
}

/// Positive rational weight per hyperedge, indexed like `h.edges()`.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeWeighting {
    kind: WeightingKind,
    weights: Vec<Rational>,
}

impl EdgeWeighting {
    pub fn unit(h: &Hypergraph) -> Self {
        EdgeWeighting {
            kind: WeightingKind::Unit,
            weights: vec![Rational::one(); h.edge_count()],
        }
    }

    pub fn banerjee(h: &Hypergraph) -> Result<Self> {
        let weights = h
            .edges()
            .enumerate()
            .map(|(i, e)| {
                if e.len() < 2 {
                    Err(Error::SingletonEdgeWithBanerjeeWeight(h.edge_labels()[i].to_string()))
                } else {
                    Ok(Rational::new(1.into(), (e.len() - 1).into()))
                }
            })
            .collect::<Result<_>>()?;
        Ok(EdgeWeighting {
            kind: WeightingKind::Banerjee,
            weights,
        })
    }

    /// Weights in edge order; every weight must be positive.
    pub fn custom(h: &Hypergraph, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != h.edge_count() {
            return Err(Error::BadWeight(format!(
                "{} weights for {} hyperedges",
                weights.len(),
                h.edge_count()
            )));
        }
        if let Some(i) = weights.iter().position(|w| *w <= Rational::zero()) {
            return Err(Error::BadWeight(format!(
                "weight {} of `{}` is not positive",
                weights[i],
                h.edge_labels()[i]
            )));
        }
        Ok(EdgeWeighting {
            kind: WeightingKind::Custom,
            weights,
        })
    }

    /// Weights keyed by hyperedge label; every hyperedge needs exactly one.
    pub fn from_labels<L: AsRef<str>>(
        h: &Hypergraph,
        entries: impl IntoIterator<Item = (L, Rational)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Rational>> = vec![None; h.edge_count()];
        for (label, w) in entries {
            let i = h.edge_index(label.as_ref())?;
            if slots[i].replace(w).is_some() {
                return Err(Error::BadWeight(format!("`{}` is weighted twice", label.as_ref())));
            }
        }
        let weights = slots
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| Error::BadWeight(format!("`{}` has no weight", h.edge_labels()[i]))))
            .collect::<Result<_>>()?;
        Self::custom(h, weights)
    }

    pub fn kind(&self) -> WeightingKind {
        self.kind
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, edge: usize) -> &Rational {
        &self.weights[edge]
    }

    fn check_against(&self, h: &Hypergraph) -> Result<()> {
        if self.weights.len() == h.edge_count() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "weighting has {} entries, hypergraph has {} hyperedges",
                self.weights.len(),
                h.edge_count()
            )))
        }
    }
}

/// `A_(w,H)`: zero diagonal, `a_uv = Σ_{e ∋ u,v} w(e)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedAdjacency {
    pub matrix: RationalMatrix,
    pub weighting: EdgeWeighting,
}

pub fn weighted_adjacency(h: &Hypergraph, w: &EdgeWeighting) -> Result<WeightedAdjacency> {
    w.check_against(h)?;
    let mut m = RationalMatrix::zeros(h.vertices().to_vec(), h.vertices().to_vec());
    for (i, e) in h.edges().enumerate() {
        let weight = w.weight(i);
        for (a, &u) in e.iter().enumerate() {
            for &v in &e[a + 1..] {
                let sum = m.get(u, v) + weight;
                m.set(u, v, sum.clone());
                m.set(v, u, sum);
            }
        }
    }
    Ok(WeightedAdjacency {
        matrix: m,
        weighting: w.clone(),
    })
}

/// `(s_u, s_v)_w`: weighted inner product of the incidence columns of `u` and `v`.
pub fn column_inner_product(h: &Hypergraph, u: &str, v: &str, w: &EdgeWeighting) -> Result<Rational> {
    w.check_against(h)?;
    let (u, v) = (h.vertex_index(u)?, h.vertex_index(v)?);
    Ok(inner_product(h, u, v, w))
}

fn inner_product(h: &Hypergraph, u: usize, v: usize, w: &EdgeWeighting) -> Rational {
    h.edges()
        .enumerate()
        .filter(|(_, e)| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
        .fold(Rational::zero(), |acc, (i, _)| acc + w.weight(i))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassSource {
    Unit,
    EquivalenceClass,
}

/// Eigenvalue `−(s_u, s_v)_w` shared by every pair in `class`, with the
/// eigenvectors `χ_{v_0} − χ_{v_i}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PredictedEigenpair {
    #[serde(with = "crate::vector::fraction")]
    pub eigenvalue: Rational,
    pub class: Vec<Label>,
    pub source: ClassSource,
    pub multiplicity_lower_bound: usize,
    /// Every eigenvector satisfies `A·x = λx` exactly.
    pub verified: bool,
    /// The eigenvectors have full rank `|class| − 1`.
    pub independent: bool,
    pub eigenvectors: Vec<LabeledVector<Rational>>,
}

impl PredictedEigenpair {
    pub fn holds(&self) -> bool {
        self.verified && self.independent
    }
}

fn predict_for_class(
    h: &Hypergraph,
    w: &EdgeWeighting,
    a: &RationalMatrix,
    class: &[usize],
    source: ClassSource,
) -> Result<PredictedEigenpair> {
    let labels = h.vertices().to_vec();
    let anchor = class[0];
    let eigenvalue = -inner_product(h, anchor, class[1], w);
    let eigenvectors: Vec<_> = class[1..]
        .iter()
        .map(|&v| LabeledVector::difference(labels.clone(), anchor, v))
        .collect();
    let mut verified = true;
    for x in &eigenvectors {
        let ax = a.matvec(x)?;
        verified &= ax.values().iter().zip(x.values()).all(|(l, r)| *l == r * &eigenvalue);
    }
    let independent = span_rank(&eigenvectors) == class.len() - 1;
    Ok(PredictedEigenpair {
        eigenvalue,
        class: class.iter().map(|&v| labels[v].clone()).collect(),
        source,
        multiplicity_lower_bound: class.len() - 1,
        verified,
        independent,
        eigenvectors,
    })
}

/// One eigenpair per unit with at least two members.
pub fn predict_unit_eigenpairs(h: &Hypergraph, w: &EdgeWeighting) -> Result<Vec<PredictedEigenpair>> {
    let a = weighted_adjacency(h, w)?;
    compute_units(h)
        .classes()
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| predict_for_class(h, w, &a.matrix, c, ClassSource::Unit))
        .collect()
}

/// One eigenpair per class with at least two members, after checking that
/// `classes` refines the equivalence relation of `A_(w,H)`.
pub fn predict_class_eigenpairs(
    h: &Hypergraph,
    w: &EdgeWeighting,
    classes: &[Vec<usize>],
) -> Result<Vec<PredictedEigenpair>> {
    let a = weighted_adjacency(h, w)?;
    let relation = matrix_equivalence(&a.matrix)?;
    if !is_finer(classes, &relation.classes)? {
        return Err(Error::PartitionNotFiner);
    }
    classes
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            predict_for_class(h, w, &a.matrix, &c, ClassSource::EquivalenceClass)
        })
        .collect()
}

/// Eigenvalue with the summed multiplicity bounds of all classes predicting it.
///
/// Eigenvectors of different classes have disjoint supports, so the bounds add.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvalueBound {
    #[serde(with = "crate::vector::fraction")]
    pub eigenvalue: Rational,
    pub multiplicity_lower_bound: usize,
}

/// Vertex classes given by label, completed with a singleton for every
/// vertex not listed. A vertex listed twice is an error.
pub fn class_partition<L: AsRef<str>>(h: &Hypergraph, classes: &[Vec<L>]) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut seen = vec![false; h.vertex_count()];
    for class in classes {
        let idx = h.resolve_vertices(class)?;
        for &v in &idx {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::OverlappingSets(h.vertices()[v].to_string()));
            }
        }
        out.push(idx);
    }
    out.extend((0..h.vertex_count()).filter(|&v| !seen[v]).map(|v| vec![v]));
    Ok(out)
}

pub fn aggregate_eigenvalues(pairs: &[PredictedEigenpair]) -> Vec<EigenvalueBound> {
    let mut totals: BTreeMap<Rational, usize> = BTreeMap::new();
    for p in pairs {
        *totals.entry(p.eigenvalue.clone()).or_default() += p.multiplicity_lower_bound;
    }
    totals
        .into_iter()
        .map(|(eigenvalue, multiplicity_lower_bound)| EigenvalueBound {
            eigenvalue,
            multiplicity_lower_bound,
        })
        .collect()
}

/// Classes of `R_M`: `u ~ v` when `m_uu = m_vv`, `m_uv = m_vu` and rows and
/// columns of `u` and `v` agree outside `{u, v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixEquivalence {
    pub labels: Vec<Label>,
    /// Classes of row indices, each ascending, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl MatrixEquivalence {
    pub fn class_labels(&self) -> Vec<Vec<Label>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&i| self.labels[i].clone()).collect())
            .collect()
    }
}

fn related(m: &RationalMatrix, u: usize, v: usize) -> bool {
    if m.get(u, u) != m.get(v, v) || m.get(u, v) != m.get(v, u) {
        return false;
    }
    (0..m.rows())
        .filter(|&x| x != u && x != v)
        .all(|x| m.get(u, x) == m.get(v, x) && m.get(x, u) == m.get(x, v))
}

/// Sorted row and column entries of `u`; equal for related vertices.
fn signature(m: &RationalMatrix, u: usize) -> (Vec<Rational>, Vec<Rational>) {
    let mut row = m.row(u).to_vec();
    let mut col: Vec<Rational> = (0..m.rows()).map(|x| m.get(x, u).clone()).collect();
    row.sort();
    col.sort();
    (row, col)
}

pub fn matrix_equivalence(m: &RationalMatrix) -> Result<MatrixEquivalence> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut buckets: BTreeMap<(Vec<Rational>, Vec<Rational>), Vec<usize>> = BTreeMap::new();
    for u in 0..m.rows() {
        buckets.entry(signature(m, u)).or_default().push(u);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for bucket in buckets.into_values() {
        let mut local: Vec<Vec<usize>> = Vec::new();
        for u in bucket {
            match local.iter_mut().find(|c| related(m, c[0], u)) {
                Some(c) => c.push(u),
                None => local.push(vec![u]),
            }
        }
        for c in &local {
            for (i, &u) in c.iter().enumerate() {
                if let Some(&v) = c[i + 1..].iter().find(|&&v| !related(m, u, v)) {
                    return Err(Error::RelationNotTransitive(format!(
                        "{} and {}",
                        m.row_labels()[u],
                        m.row_labels()[v]
                    )));
                }
            }
        }
        classes.extend(local);
    }
    classes.sort_by_key(|c| c[0]);
    Ok(MatrixEquivalence {
        labels: m.row_labels().to_vec(),
        classes,
    })
}

/// True when every class of `fine` lies inside a class of `coarse`.
pub fn is_finer(fine: &[Vec<usize>], coarse: &[Vec<usize>]) -> Result<bool> {
    let ground = |p: &[Vec<usize>]| -> Result<BTreeMap<usize, usize>> {
        let mut owner = BTreeMap::new();
        for (i, c) in p.iter().enumerate() {
            for &v in c {
                if owner.insert(v, i).is_some() {
                    return Err(Error::GroundSetMismatch);
                }
            }
        }
        Ok(owner)
    };
    let (f, c) = (ground(fine)?, ground(coarse)?);
    if !f.keys().eq(c.keys()) {
        return Err(Error::GroundSetMismatch);
    }
    Ok(fine.iter().all(|class| class.iter().all(|v| c[v] == c[&class[0]])))
}
