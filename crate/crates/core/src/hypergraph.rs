//! Hypergraph data model and the basic constructions on it: uniform cycles,
//! stars, induced sub-hypergraphs, vector extension and the dual.
//!
//! Vertices are kept in natural label order; hyperedges keep their input
//! order. Every matrix built from a [`Hypergraph`] uses these orderings for
//! its rows and columns.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::vector::{Scalar, VertexVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<Label>,
    vertex_index: HashMap<String, usize>,
    /// Sorted vertex indices per hyperedge.
    edges: Vec<Vec<usize>>,
    edge_labels: Vec<Label>,
    edge_index: HashMap<String, usize>,
}

/// The set of hyperedges containing a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub vertex: Label,
    /// Hyperedge indices, ascending.
    pub edges: Vec<usize>,
}

/// An induced sub-hypergraph together with where each original edge went.
#[derive(Clone, Debug)]
pub struct Induced {
    pub hypergraph: Hypergraph,
    /// `edge_map[i]` is the induced edge for original edge `i`, or `None`
    /// when that edge misses the subset.
    pub edge_map: Vec<Option<usize>>,
}

/// The dual hypergraph with the index maps linking it back to `H`.
#[derive(Clone, Debug)]
pub struct Dual {
    pub hypergraph: Hypergraph,
    /// Original edge index → vertex index in the dual.
    pub vertex_of_edge: Vec<usize>,
    /// Original vertex index → edge index in the dual (stars are deduplicated).
    pub edge_of_vertex: Vec<usize>,
}

impl Hypergraph {
    /// Builds a hypergraph from vertex labels and labelled hyperedges.
    pub fn new<V, L, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<Label>,
        L: Into<Label>,
        E: IntoIterator<Item = (L, Vec<Label>)>,
    {
        let mut vertices: Vec<Label> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].to_string()));
        }
        let vertex_index: HashMap<String, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str().to_owned(), i))
            .collect();

        let mut edge_sets = Vec::new();
        let mut edge_labels: Vec<Label> = Vec::new();
        let mut edge_index = HashMap::new();
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for (label, members) in edges {
            let label = label.into();
            if members.is_empty() {
                return Err(Error::EmptyEdge(label.to_string()));
            }
            let mut set = BTreeSet::new();
            for m in &members {
                match vertex_index.get(m.as_str()) {
                    Some(&i) => {
                        set.insert(i);
                    }
                    None => {
                        return Err(Error::UnknownVertexInEdge {
                            edge: label.to_string(),
                            vertex: m.to_string(),
                        })
                    }
                }
            }
            let set: Vec<usize> = set.into_iter().collect();
            if let Some(&prev) = seen.get(&set) {
                return Err(Error::DuplicateEdge {
                    first: edge_labels[prev].to_string(),
                    second: label.to_string(),
                });
            }
            if edge_index.contains_key(label.as_str()) {
                return Err(Error::DuplicateEdgeLabel(label.to_string()));
            }
            let idx = edge_sets.len();
            seen.insert(set.clone(), idx);
            edge_index.insert(label.as_str().to_owned(), idx);
            edge_labels.push(label);
            edge_sets.push(set);
        }

        Ok(Hypergraph {
            vertices,
            vertex_index,
            edges: edge_sets,
            edge_labels,
            edge_index,
        })
    }

    /// Builds a hypergraph whose hyperedges are named `e1`, `e2`, ... in order.
    pub fn from_edge_sets<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<Label>,
        E: IntoIterator<Item = S>,
        S: IntoIterator,
        S::Item: Into<Label>,
    {
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, e)| (format!("e{}", i + 1), e.into_iter().map(Into::into).collect()));
        Self::new(vertices, edges)
    }

    /// Builds directly from index sets that are already known to be valid.
    pub(crate) fn from_parts(vertices: Vec<Label>, edges: Vec<(Label, Vec<usize>)>) -> Self {
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str().to_owned(), i))
            .collect();
        let edge_index = edges
            .iter()
            .enumerate()
            .map(|(i, (l, _))| (l.as_str().to_owned(), i))
            .collect();
        let (edge_labels, edges) = edges.into_iter().unzip();
        let h = Hypergraph {
            vertices,
            vertex_index,
            edges,
            edge_labels,
            edge_index,
        };
        debug_assert!(h.vertices.windows(2).all(|w| w[0] < w[1]));
        h
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn edge_labels(&self) -> &[Label] {
        &self.edge_labels
    }

    /// Vertex indices of hyperedge `i`, ascending.
    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[usize]> {
        self.edges.iter().map(Vec::as_slice)
    }

    pub fn edge_vertex_labels(&self, i: usize) -> Vec<Label> {
        self.edges[i].iter().map(|&v| self.vertices[v].clone()).collect()
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub fn edge_index(&self, label: &str) -> Result<usize> {
        self.edge_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(label.to_owned()))
    }

    pub fn resolve_vertices<L: AsRef<str>>(&self, labels: &[L]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = labels
            .iter()
            .map(|l| self.vertex_index(l.as_ref()))
            .collect::<Result<_>>()?;
        Ok(set.into_iter().collect())
    }

    pub fn resolve_edges<L: AsRef<str>>(&self, labels: &[L]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = labels
            .iter()
            .map(|l| self.edge_index(l.as_ref()))
            .collect::<Result<_>>()?;
        Ok(set.into_iter().collect())
    }

    pub fn contains(&self, edge: usize, vertex: usize) -> bool {
        self.edges[edge].binary_search(&vertex).is_ok()
    }

    /// Star of every vertex, indexed by vertex.
    pub fn stars(&self) -> Vec<Vec<usize>> {
        let mut stars = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                stars[v].push(i);
            }
        }
        stars
    }

    pub fn star(&self, vertex: &str) -> Result<Star> {
        let v = self.vertex_index(vertex)?;
        Ok(Star {
            vertex: self.vertices[v].clone(),
            edges: self.star_of(v),
        })
    }

    pub(crate) fn star_of(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.contains(e, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    /// Edge sets as label sets, for comparing hypergraphs independent of indexing.
    pub fn edge_label_sets(&self) -> BTreeSet<BTreeSet<Label>> {
        (0..self.edge_count())
            .map(|i| self.edge_vertex_labels(i).into_iter().collect())
            .collect()
    }

    /// The sub-hypergraph induced by `subset`: vertices `subset`, hyperedges
    /// the non-empty traces `e ∩ subset`, with repeated traces merged.
    pub fn induced<L: AsRef<str>>(&self, subset: &[L]) -> Result<Induced> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let members = self.resolve_vertices(subset)?;
        let mut new_index = vec![usize::MAX; self.vertices.len()];
        for (j, &v) in members.iter().enumerate() {
            new_index[v] = j;
        }
        let vertices: Vec<Label> = members.iter().map(|&v| self.vertices[v].clone()).collect();

        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut edge_map = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let trace: Vec<usize> = e
                .iter()
                .filter(|&&v| new_index[v] != usize::MAX)
                .map(|&v| new_index[v])
                .collect();
            if trace.is_empty() {
                edge_map.push(None);
                continue;
            }
            let idx = *seen.entry(trace.clone()).or_insert_with(|| {
                edges.push((self.edge_labels[i].clone(), trace));
                edges.len() - 1
            });
            edge_map.push(Some(idx));
        }
        Ok(Induced {
            hypergraph: Hypergraph::from_parts(vertices, edges),
            edge_map,
        })
    }

    /// Extends `y`, given on `subset`, by zero to all of `V(H)`.
    pub fn extend_vector<S: Scalar, L: AsRef<str>>(
        &self,
        subset: &[L],
        y: &VertexVector<S>,
    ) -> Result<VertexVector<S>> {
        let members = self.resolve_vertices(subset)?;
        let zero = match y.values().first() {
            Some(v) => v.zero_like(),
            None => return Err(Error::DimensionMismatch("cannot extend an empty vector".into())),
        };
        let mut values = vec![zero; self.vertices.len()];
        for (label, value) in y.iter() {
            let v = self.vertex_index(label.as_str())?;
            if members.binary_search(&v).is_err() {
                if !value.is_zero() {
                    return Err(Error::SupportOutsideSubset(label.to_string()));
                }
                continue;
            }
            values[v] = value.clone();
        }
        VertexVector::new(self.vertices.clone(), values)
    }

    /// The dual hypergraph: vertices are the hyperedges of `H`, hyperedges
    /// are the distinct stars of `H`.
    pub fn dual(&self) -> Result<Dual> {
        let stars = self.stars();
        if let Some(v) = stars.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(self.vertices[v].to_string()));
        }
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| self.edge_labels[a].cmp(&self.edge_labels[b]));
        let mut vertex_of_edge = vec![0; self.edges.len()];
        for (j, &e) in order.iter().enumerate() {
            vertex_of_edge[e] = j;
        }
        let vertices: Vec<Label> = order.iter().map(|&e| self.edge_labels[e].clone()).collect();

        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut edge_of_vertex = Vec::with_capacity(self.vertices.len());
        for (v, star) in stars.into_iter().enumerate() {
            let mut mapped: Vec<usize> = star.iter().map(|&e| vertex_of_edge[e]).collect();
            mapped.sort_unstable();
            let idx = *seen.entry(mapped.clone()).or_insert_with(|| {
                edges.push((self.vertices[v].clone(), mapped));
                edges.len() - 1
            });
            edge_of_vertex.push(idx);
        }
        Ok(Dual {
            hypergraph: Hypergraph::from_parts(vertices, edges),
            vertex_of_edge,
            edge_of_vertex,
        })
    }
}

/// The `k`-uniform cycle on `Z_n`: vertices `"0"`..`"n-1"`, hyperedge `e_i`
/// the window `{i, i+1, ..., i+k-1}` mod `n`.
///
/// When `n == k` every window is all of `Z_n`, so the edge set collapses to
/// the single edge `e0`.
pub fn uniform_cycle(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!(
            "cycle uniformity must be >= 2, got {k}"
        )));
    }
    if n < k {
        return Err(Error::CycleTooShort { n, k });
    }
    let vertices: Vec<Label> = (0..n).map(Label::from).collect();
    let windows = if n == k { 1 } else { n };
    let edges = (0..windows)
        .map(|i| {
            let mut window: Vec<usize> = (0..k).map(|s| (i + s) % n).collect();
            window.sort_unstable();
            (Label::new(format!("e{i}")), window)
        })
        .collect();
    Ok(Hypergraph::from_parts(vertices, edges))
}
