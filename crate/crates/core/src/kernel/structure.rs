//! Kernel structure tied to units: the spaces `S_W`, the nullity
//! decomposition through the unit contraction, and extension of kernel
//! vectors from induced sub-hypergraphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::label::Label;
use crate::linalg::elimination::{rank_and_nullspace, span_rank};
use crate::linalg::matrix::{edge_vertex_incidence, RationalMatrix};
use crate::units::{compute_units, unit_contraction};
use crate::vector::{LabeledVector, Rational};

/// Vectors supported on `W` whose entries sum to zero, spanned by
/// `χ_{u_i} − χ_{u_0}` for `W = {u_0, u_1, ...}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SwSubspace {
    pub w: Vec<Label>,
    pub basis: Vec<LabeledVector<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SwReport {
    pub subspace: SwSubspace,
    /// Every basis vector lies in `ker B_H`.
    pub contained_in_kernel: bool,
    /// No strict superset `W'` has `S_{W'} ⊆ ker B_H`.
    pub maximal: bool,
    /// `W` is a unit of `H`.
    pub is_unit: bool,
}

fn in_kernel(b: &RationalMatrix, x: &LabeledVector<Rational>) -> bool {
    b.matvec(x).map(|y| y.is_zero()).unwrap_or(false)
}

/// Builds `S_W` and tests it against `ker B_H`.
///
/// Maximality is decided one outside vertex at a time: a superset `W'` with
/// `S_{W'}` in the kernel exists iff some `W ∪ {x}` has that property, and
/// `S_{W ∪ {x}} = S_W + span(χ_x − χ_{u_0})`.
pub fn sw_subspace<L: AsRef<str>>(h: &Hypergraph, w: &[L]) -> Result<SwReport> {
    let members = h.resolve_vertices(w)?;
    if members.len() < 2 {
        return Err(Error::SubsetTooSmall);
    }
    let b = edge_vertex_incidence(h);
    let labels = h.vertices().to_vec();
    let anchor = members[0];
    let basis: Vec<LabeledVector<Rational>> = members[1..]
        .iter()
        .map(|&u| LabeledVector::difference(labels.clone(), u, anchor))
        .collect();
    let contained_in_kernel = basis.iter().all(|x| in_kernel(&b, x));
    let extendable = (0..h.vertex_count())
        .filter(|v| members.binary_search(v).is_err())
        .any(|x| contained_in_kernel && in_kernel(&b, &LabeledVector::difference(labels.clone(), x, anchor)));
    let maximal = !extendable;

    let units = compute_units(h);
    let is_unit = units.units().iter().any(|u| u.members == members);
    if (contained_in_kernel && maximal) != is_unit {
        return Err(Error::InconsistentVerdict(format!(
            "S_W in kernel: {contained_in_kernel}, maximal: {maximal}, unit: {is_unit}"
        )));
    }
    Ok(SwReport {
        subspace: SwSubspace {
            w: members.iter().map(|&v| labels[v].clone()).collect(),
            basis,
        },
        contained_in_kernel,
        maximal,
        is_unit,
    })
}

/// Rank and nullity of `B_H` against those of the unit contraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NullityReport {
    pub vertices: usize,
    pub units: usize,
    pub rank: usize,
    pub nullity: usize,
    pub contraction_rank: usize,
    pub contraction_nullity: usize,
    /// `|V(H)| − |units|`.
    pub deficiency: usize,
}

impl NullityReport {
    /// `nullity = contraction_nullity + |V| − |units|`.
    pub fn decomposition_holds(&self) -> bool {
        self.nullity == self.contraction_nullity + self.deficiency
    }

    pub fn ranks_equal(&self) -> bool {
        self.rank == self.contraction_rank
    }

    pub fn nullity_lower_bound_holds(&self) -> bool {
        self.nullity >= self.deficiency
    }

    pub fn rank_upper_bound_holds(&self) -> bool {
        self.rank <= self.units
    }

    /// Names of the identities that fail.
    pub fn failures(&self) -> Vec<&'static str> {
        let checks = [
            ("nullity_decomposition", self.decomposition_holds()),
            ("rank_equality", self.ranks_equal()),
            ("nullity_lower_bound", self.nullity_lower_bound_holds()),
            ("rank_upper_bound", self.rank_upper_bound_holds()),
        ];
        checks.into_iter().filter(|(_, ok)| !ok).map(|(name, _)| name).collect()
    }

    pub fn holds(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Computes both sides of the nullity decomposition independently.
pub fn nullity_decomposition(h: &Hypergraph) -> NullityReport {
    let full = rank_and_nullspace(&edge_vertex_incidence(h));
    let contraction = unit_contraction(h);
    let reduced = rank_and_nullspace(&edge_vertex_incidence(&contraction.hypergraph));
    NullityReport {
        vertices: h.vertex_count(),
        units: contraction.units.len(),
        rank: full.rank,
        nullity: full.nullity(),
        contraction_rank: reduced.rank,
        contraction_nullity: reduced.nullity(),
        deficiency: h.vertex_count() - contraction.units.len(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionReport {
    pub subset: Vec<Label>,
    /// Kernel basis of `B_{H_U}` extended by zero to `V(H)`.
    pub extended: Vec<LabeledVector<Rational>>,
    /// Which extended vectors lie in `ker B_H`.
    pub in_kernel: Vec<bool>,
}

impl ExtensionReport {
    pub fn holds(&self) -> bool {
        self.in_kernel.iter().all(|&ok| ok)
    }

    /// Rank of the extended vectors, a lower bound for the nullity of `B_H`.
    pub fn dimension(&self) -> usize {
        span_rank(&self.extended)
    }
}

/// Extends every kernel basis vector of the induced sub-hypergraph on `u`
/// and tests it against `B_H`.
pub fn extension_theorem_check<L: AsRef<str>>(h: &Hypergraph, u: &[L]) -> Result<ExtensionReport> {
    let induced = h.induced(u)?;
    let b = edge_vertex_incidence(h);
    let local = rank_and_nullspace(&edge_vertex_incidence(&induced.hypergraph));
    let subset = induced.hypergraph.vertices().to_vec();
    let extended = local
        .vectors
        .iter()
        .map(|y| h.extend_vector(&subset, y))
        .collect::<Result<Vec<_>>>()?;
    let in_kernel = extended.iter().map(|x| in_kernel(&b, x)).collect();
    Ok(ExtensionReport {
        subset,
        extended,
        in_kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hypergraph::uniform_cycle;
    use crate::random::{random_hypergraph, RandomSpec};
    use crate::vector::integer;

    #[test]
    fn sw_on_worked_example() {
        let h = fixtures::units_example();
        let r = sw_subspace(&h, &["5", "6", "7"]).unwrap();
        assert!(r.contained_in_kernel && r.maximal && r.is_unit);
        assert_eq!(r.subspace.basis.len(), 2);
        for x in &r.subspace.basis {
            assert_eq!(x.values().iter().sum::<Rational>(), integer(0));
        }

        let r = sw_subspace(&h, &["5", "6"]).unwrap();
        assert!(r.contained_in_kernel && !r.maximal && !r.is_unit);

        let r = sw_subspace(&h, &["1", "3"]).unwrap();
        assert!(!r.contained_in_kernel && !r.is_unit);

        assert_eq!(sw_subspace(&h, &["1"]).unwrap_err(), Error::SubsetTooSmall);
    }

    #[test]
    fn sw_maximal_exactly_on_units() {
        for seed in 0..30 {
            let h = random_hypergraph(&RandomSpec {
                vertices: 7,
                edges: 4,
                max_size: 3,
                seed,
            })
            .unwrap();
            let units = compute_units(&h);
            for unit in units.units().iter().filter(|u| u.members.len() >= 2) {
                let w: Vec<&str> = unit.members.iter().map(|&v| h.vertices()[v].as_str()).collect();
                let r = sw_subspace(&h, &w).unwrap();
                assert!(r.contained_in_kernel && r.maximal);
            }
        }
    }

    #[test]
    fn nullity_of_worked_example() {
        let r = nullity_decomposition(&fixtures::units_example());
        assert_eq!((r.rank, r.nullity), (5, 6));
        assert_eq!((r.contraction_rank, r.contraction_nullity), (5, 1));
        assert_eq!(r.deficiency, 5);
        assert!(r.holds());
    }

    #[test]
    fn non_contractible_has_no_deficiency() {
        let r = nullity_decomposition(&uniform_cycle(6, 4).unwrap());
        assert_eq!(r.deficiency, 0);
        assert_eq!(r.nullity, r.contraction_nullity);
        assert!(r.holds());
    }

    #[test]
    fn nullity_identity_on_random_instances() {
        for seed in 0..50 {
            let spec = RandomSpec {
                vertices: 4 + (seed as usize % 7),
                edges: 1 + (seed as usize % 8),
                max_size: 4,
                seed,
            };
            let h = random_hypergraph(&spec).unwrap();
            let r = nullity_decomposition(&h);
            assert!(r.holds(), "seed {seed}: {:?}", r.failures());
        }
    }

    #[test]
    fn extension_from_induced_cycle() {
        let h = fixtures::three_set_cycle_example();
        let r = extension_theorem_check(&h, &["1", "2", "3", "4", "5", "6"]).unwrap();
        assert!(r.holds());
        // the alternating vector on 1..6, zero on 7 and 8
        let labels = h.vertices().to_vec();
        let alternating = LabeledVector::new(
            labels,
            (1..=8)
                .map(|i| {
                    integer(if i > 6 {
                        0
                    } else if i % 2 == 0 {
                        1
                    } else {
                        -1
                    })
                })
                .collect(),
        )
        .unwrap();
        assert!(crate::linalg::elimination::in_span(&r.extended, &alternating));
    }

    #[test]
    fn extension_on_everything_is_trivial() {
        let h = fixtures::units_example();
        let all: Vec<&str> = h.vertices().iter().map(Label::as_str).collect();
        let r = extension_theorem_check(&h, &all).unwrap();
        assert!(r.holds());
        assert_eq!(r.dimension(), 6);
        let empty: [&str; 0] = [];
        assert_eq!(extension_theorem_check(&h, &empty).unwrap_err(), Error::EmptySubset);
    }

    #[test]
    fn induced_cycle_lifts_nullity() {
        // C_6^3 sits inside on {1..6}; gcd(3,6) = 3 gives nullity >= 2
        let h = fixtures::induced_cycle_example();
        let r = extension_theorem_check(&h, &["1", "2", "3", "4", "5", "6"]).unwrap();
        assert!(r.holds());
        assert!(r.dimension() >= 2);
        assert!(nullity_decomposition(&h).nullity >= 2);
    }
}
