//! Units (classes of vertices with identical stars) and unit contraction.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::hypergraph::Hypergraph;
use crate::label::Label;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    /// Member vertex indices, ascending.
    pub members: Vec<usize>,
    /// The common star of the members.
    pub generator: Vec<usize>,
}

/// Partition of `V(H)` into units, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitPartition {
    units: Vec<Unit>,
    vertex_to_unit: Vec<usize>,
}

impl UnitPartition {
    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn unit_of(&self, v: usize) -> usize {
        self.vertex_to_unit[v]
    }

    pub fn vertex_to_unit(&self) -> &[usize] {
        &self.vertex_to_unit
    }

    /// True when every unit is a single vertex.
    pub fn is_trivial(&self) -> bool {
        self.units.len() == self.vertex_to_unit.len()
    }

    /// Member lists, for comparing with other partitions.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.units.iter().map(|u| u.members.clone()).collect()
    }

    /// One vertex from each unit (the smallest member).
    pub fn representatives(&self) -> Vec<usize> {
        self.units.iter().map(|u| u.members[0]).collect()
    }
}

/// Groups vertices by their star.
pub fn compute_units(h: &Hypergraph) -> UnitPartition {
    let stars = h.stars();
    let mut by_star: BTreeMap<&[usize], usize> = BTreeMap::new();
    let mut units: Vec<Unit> = Vec::new();
    let mut vertex_to_unit = Vec::with_capacity(stars.len());
    for (v, star) in stars.iter().enumerate() {
        let idx = *by_star.entry(star.as_slice()).or_insert_with(|| {
            units.push(Unit {
                members: Vec::new(),
                generator: star.clone(),
            });
            units.len() - 1
        });
        units[idx].members.push(v);
        vertex_to_unit.push(idx);
    }
    UnitPartition { units, vertex_to_unit }
}

/// `H/R_u(H)` with the maps from `H` into it.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub hypergraph: Hypergraph,
    pub units: UnitPartition,
    /// Original vertex → vertex of the contraction.
    pub vertex_map: Vec<usize>,
    /// Original edge → edge of the contraction. Edges with equal images merge.
    pub edge_map: Vec<usize>,
}

/// Contracts every unit to a single vertex labelled by its members joined
/// with `+` (a singleton keeps its own label).
pub fn unit_contraction(h: &Hypergraph) -> Contraction {
    let units = compute_units(h);
    let mut names: Vec<String> = units
        .units()
        .iter()
        .map(|u| {
            u.members
                .iter()
                .map(|&v| h.vertices()[v].as_str())
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    let mut taken = HashSet::new();
    for name in names.iter_mut() {
        while !taken.insert(name.clone()) {
            name.push('\'');
        }
    }

    let mut order: Vec<usize> = (0..units.len()).collect();
    let labels: Vec<Label> = names.into_iter().map(Label::from).collect();
    order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
    let mut position = vec![0; units.len()];
    for (p, &u) in order.iter().enumerate() {
        position[u] = p;
    }
    let vertices: Vec<Label> = order.iter().map(|&u| labels[u].clone()).collect();
    let vertex_map: Vec<usize> = units.vertex_to_unit().iter().map(|&u| position[u]).collect();

    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut edge_map = Vec::with_capacity(h.edge_count());
    for (i, e) in h.edges().enumerate() {
        let mut image: Vec<usize> = e.iter().map(|&v| vertex_map[v]).collect();
        image.sort_unstable();
        image.dedup();
        let idx = *seen.entry(image.clone()).or_insert_with(|| {
            edges.push((h.edge_labels()[i].clone(), image));
            edges.len() - 1
        });
        edge_map.push(idx);
    }

    Contraction {
        hypergraph: Hypergraph::from_parts(vertices, edges),
        units,
        vertex_map,
        edge_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hypergraph::uniform_cycle;
    use crate::random::{random_hypergraph, RandomSpec};

    /// O(|V|²) pairwise star comparison.
    fn brute_force_classes(h: &Hypergraph) -> Vec<Vec<usize>> {
        let n = h.vertex_count();
        let star = |v: usize| -> Vec<bool> { (0..h.edge_count()).map(|e| h.contains(e, v)).collect() };
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for u in 0..n {
            if assigned[u] {
                continue;
            }
            let class: Vec<usize> = (u..n).filter(|&v| star(u) == star(v)).collect();
            for &v in &class {
                assigned[v] = true;
            }
            classes.push(class);
        }
        classes
    }

    fn labelled(h: &Hypergraph, p: &UnitPartition) -> Vec<Vec<String>> {
        p.classes()
            .iter()
            .map(|c| c.iter().map(|&v| h.vertices()[v].to_string()).collect())
            .collect()
    }

    #[test]
    fn units_of_worked_example() {
        let h = fixtures::units_example();
        let p = compute_units(&h);
        assert_eq!(
            labelled(&h, &p),
            vec![
                vec!["1", "2"],
                vec!["3", "4"],
                vec!["5", "6", "7"],
                vec!["8", "9"],
                vec!["10"],
                vec!["11"]
            ]
        );
        let generators: Vec<Vec<&str>> = p
            .units()
            .iter()
            .map(|u| u.generator.iter().map(|&e| h.edge_labels()[e].as_str()).collect())
            .collect();
        assert_eq!(
            generators,
            vec![
                vec!["e1", "e2"],
                vec!["e2", "e3"],
                vec!["e1", "e4"],
                vec!["e4", "e5"],
                vec!["e1", "e3", "e5"],
                vec!["e1", "e5"]
            ]
        );
    }

    #[test]
    fn distinct_stars_give_singletons() {
        let h = fixtures::k4();
        assert!(compute_units(&h).is_trivial());
    }

    #[test]
    fn matches_pairwise_oracle_on_random_instances() {
        for seed in 0..100 {
            let h = random_hypergraph(&RandomSpec {
                vertices: 9,
                edges: 6,
                max_size: 4,
                seed,
            })
            .unwrap();
            assert_eq!(compute_units(&h).classes(), brute_force_classes(&h), "seed {seed}");
        }
    }

    #[test]
    fn contraction_of_worked_example() {
        let h = fixtures::units_example();
        let c = unit_contraction(&h);
        assert_eq!(c.hypergraph.vertex_count(), 6);
        assert_eq!(c.hypergraph.edge_count(), 5);
        let names: Vec<&str> = c.hypergraph.vertices().iter().map(Label::as_str).collect();
        assert_eq!(names, ["1+2", "3+4", "5+6+7", "8+9", "10", "11"]);
        assert_eq!(c.vertex_map[6], 2);
    }

    #[test]
    fn contraction_merges_equal_images() {
        // {1,2} is a unit; e1 and e2 both contract to {1+2}
        let h = Hypergraph::from_edge_sets(["1", "2", "3"], [vec!["1", "2"], vec!["1", "2", "3"]]).unwrap();
        let c = unit_contraction(&h);
        assert_eq!(c.hypergraph.edge_count(), 2);
        let h = Hypergraph::from_edge_sets(["1", "2"], [vec!["1", "2"]]).unwrap();
        let c = unit_contraction(&h);
        assert_eq!(c.hypergraph.vertex_count(), 1);
        assert_eq!(c.edge_map, vec![0]);
    }

    #[test]
    fn cycles_are_non_contractible() {
        for n in 3..12 {
            for k in 2..n {
                let c = uniform_cycle(n, k).unwrap();
                // windows covering v: starts v-k+1..=v, pairwise different for k < n
                let stars: Vec<Vec<usize>> = (0..n)
                    .map(|v| {
                        let mut s: Vec<usize> = (0..k).map(|d| (v + n - d) % n).collect();
                        s.sort_unstable();
                        s
                    })
                    .collect();
                let distinct: HashSet<&Vec<usize>> = stars.iter().collect();
                assert_eq!(distinct.len(), n);
                assert!(compute_units(&c).is_trivial());
                let contracted = unit_contraction(&c);
                assert_eq!(contracted.hypergraph.edge_label_sets(), c.edge_label_sets());
            }
        }
    }
}
