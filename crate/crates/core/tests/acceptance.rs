//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p hyperinc-core --test acceptance`. The random
//! property suite draws from `HYPERINC_ACCEPTANCE_SEED` (default `0x5eed`).

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use hyperinc_core::kernel::{
    dual_side_certificate, equal_partition_certificate, extension_theorem_check, find_certificates_exhaustive,
    general_combination_certificate, nullity_decomposition, ratio_partition_certificate, three_set_certificate,
    verify_certificate, CertificateType, FinderBounds, InducedVector, KernelCertificate, Side,
};
use hyperinc_core::linalg::cycle_kernel_report;
use hyperinc_core::{
    are_isomorphic, compute_units, edge_vertex_incidence, fixtures, integer, is_finer, matrix_equivalence,
    predict_unit_eigenpairs, random_hypergraph, rank, rank_and_nullspace, rank_modular_oracle, rational, uniform_cycle,
    unit_contraction, vertex_edge_incidence, weighted_adjacency, EdgeWeighting, Hypergraph, IsoConfig, RandomSpec,
    Rational, RationalMatrix,
};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Re-multiplies a certificate's vector by the matrix of its side.
fn annihilated(h: &Hypergraph, c: &KernelCertificate) -> Result<bool, String> {
    Ok(match (&c.vector, c.side) {
        (InducedVector::Rational(x), Side::EdgeVertex) => edge_vertex_incidence(h).matvec(x).map_err(err)?.is_zero(),
        (InducedVector::Rational(x), Side::VertexEdge) => vertex_edge_incidence(h).matvec(x).map_err(err)?.is_zero(),
        (InducedVector::Cyclotomic(x), Side::EdgeVertex) => edge_vertex_incidence(h).matvec(x).map_err(err)?.is_zero(),
        (InducedVector::Cyclotomic(_), Side::VertexEdge) => false,
    })
}

fn labels(h: &Hypergraph, idx: &[usize], edges: bool) -> Vec<String> {
    let all = if edges { h.edge_labels() } else { h.vertices() };
    idx.iter().map(|&i| all[i].to_string()).collect()
}

fn criterion_1() -> Check {
    let h = fixtures::units_example();
    let b = edge_vertex_incidence(&h);
    let basis = rank_and_nullspace(&b);
    ensure(basis.rank == 5, || format!("rank {} != 5", basis.rank))?;
    ensure(basis.nullity() == 6, || format!("nullity {} != 6", basis.nullity()))?;
    let oracle = rank_modular_oracle(&b).map_err(err)?;
    ensure(oracle == 5, || format!("modular rank {oracle} != 5"))?;
    let contraction = unit_contraction(&h);
    let reduced = rank_and_nullspace(&edge_vertex_incidence(&contraction.hypergraph));
    ensure(reduced.nullity() == 1, || {
        format!("contraction nullity {} != 1", reduced.nullity())
    })?;
    let units = contraction.units.len();
    ensure(units == 6, || format!("{units} units, expected 6"))?;
    ensure(
        basis.nullity() == reduced.nullity() + (h.vertex_count() - units),
        || {
            format!(
                "{} != {} + ({} - {units})",
                basis.nullity(),
                reduced.nullity(),
                h.vertex_count()
            )
        },
    )?;
    ensure(nullity_decomposition(&h).holds(), || "nullity report disagrees".into())
}

fn criterion_2() -> Check {
    let h = fixtures::units_example();
    let partition = compute_units(&h);
    let got: BTreeMap<Vec<String>, Vec<String>> = partition
        .units()
        .iter()
        .map(|u| (labels(&h, &u.members, false), labels(&h, &u.generator, true)))
        .collect();
    let expected: BTreeMap<Vec<String>, Vec<String>> = [
        (&["1", "2"][..], &["e1", "e2"][..]),
        (&["3", "4"], &["e2", "e3"]),
        (&["5", "6", "7"], &["e1", "e4"]),
        (&["8", "9"], &["e4", "e5"]),
        (&["11"], &["e1", "e5"]),
        (&["10"], &["e1", "e3", "e5"]),
    ]
    .iter()
    .map(|(w, e)| {
        (
            w.iter().map(|s| s.to_string()).collect(),
            e.iter().map(|s| s.to_string()).collect(),
        )
    })
    .collect();
    ensure(got == expected, || format!("units {got:?}"))?;

    let induced = h.induced(&["1", "3", "5", "8", "10", "11"]).map_err(err)?;
    let contraction = unit_contraction(&h);
    let iso = are_isomorphic(&induced.hypergraph, &contraction.hypergraph, &IsoConfig::default()).map_err(err)?;
    ensure(iso.is_some(), || "H_U is not isomorphic to the contraction".into())
}

fn criterion_3() -> Check {
    let mut swept = 0;
    for n in 2..=14usize {
        for k in 2..=n {
            let cycle = uniform_cycle(n, k).map_err(err)?;
            let b = edge_vertex_incidence(&cycle);
            let rk = rank(&b);
            let r = n.gcd(&k);
            if r >= 2 {
                let report = cycle_kernel_report(n, k).map_err(err)?;
                ensure(report.certifies_bound(), || {
                    format!("C_{n}^{k}: roots of order {r} not all in kernel")
                })?;
                for j in 1..r {
                    let x = hyperinc_core::linalg::root_of_unity_vector(n, r, j).map_err(err)?;
                    ensure(b.matvec(&x).map_err(err)?.is_zero(), || {
                        format!("C_{n}^{k}: B x_(zeta^{j}) != 0")
                    })?;
                }
                ensure(rk <= n - r + 1, || format!("C_{n}^{k}: rank {rk} > {}", n - r + 1))?;
            }
            if k == 2 {
                let expected = if n % 2 == 1 { n } else { n - 1 };
                ensure(rk == expected, || format!("C_{n}: rank {rk} != {expected}"))?;
            }
            swept += 1;
        }
    }
    ensure(swept == 91, || format!("swept {swept} cycles"))
}

fn valid(h: &Hypergraph, c: &KernelCertificate) -> Check {
    let v = verify_certificate(h, c).map_err(err)?;
    ensure(v.kernel && v.combinatorial, || {
        format!("{} rejected", c.certificate_type())
    })?;
    ensure(annihilated(h, c)?, || {
        format!("{} vector not in kernel", c.certificate_type())
    })
}

fn criterion_4() -> Check {
    let h = fixtures::equal_partition_example();
    valid(
        &h,
        &equal_partition_certificate(&h, &["1", "5"], &["2", "3", "4"]).map_err(err)?,
    )?;

    let h = fixtures::ratio_example();
    valid(
        &h,
        &ratio_partition_certificate(&h, &["1", "2"], &["3", "4", "5"], rational(1, 2)).map_err(err)?,
    )?;

    let h = fixtures::three_set_example();
    valid(
        &h,
        &three_set_certificate(&h, &["3", "4", "5"], &["6"], &["1", "2"], integer(2)).map_err(err)?,
    )?;

    let h = fixtures::three_set_cycle_example();
    valid(
        &h,
        &three_set_certificate(&h, &["2", "4"], &["7", "8"], &["1", "3", "5"], rational(1, 2)).map_err(err)?,
    )?;

    let h = fixtures::general_combination_example();
    let parts: Vec<(&[&str], Rational)> = vec![
        (&["1", "6"], integer(1)),
        (&["2"], integer(-1)),
        (&["4"], rational(1, 2)),
        (&["3"], rational(-1, 2)),
        (&["5"], rational(-3, 2)),
    ];
    valid(&h, &general_combination_certificate(&h, &parts).map_err(err)?)?;

    let h = fixtures::equal_vertex_partition_example();
    valid(
        &h,
        &dual_side_certificate(&h, &["e1", "e3"], &["e2", "e4"], integer(1)).map_err(err)?,
    )?;

    let h = fixtures::k4();
    valid(
        &h,
        &dual_side_certificate(&h, &["e1", "e2"], &["e3", "e4", "e5", "e6"], rational(1, 2)).map_err(err)?,
    )
}

fn criterion_5() -> Check {
    let h = fixtures::units_example();
    let unit = predict_unit_eigenpairs(&h, &EdgeWeighting::unit(&h)).map_err(err)?;
    ensure(unit.iter().all(|p| p.holds()), || {
        "unit eigenpair failed A x = λx".into()
    })?;
    ensure(unit.iter().all(|p| p.eigenvalue == integer(-2)), || {
        "unit eigenvalue other than -2".into()
    })?;
    let total: usize = unit.iter().map(|p| p.multiplicity_lower_bound).sum();
    ensure(total == 5, || format!("multiplicity bound {total} != 5"))?;

    let a = weighted_adjacency(&h, &EdgeWeighting::unit(&h)).map_err(err)?;
    check_pairs_independently(&a.matrix, &unit)?;

    let w = EdgeWeighting::banerjee(&h).map_err(err)?;
    let ban = predict_unit_eigenpairs(&h, &w).map_err(err)?;
    let got: Vec<(Rational, usize)> = ban
        .iter()
        .map(|p| (p.eigenvalue.clone(), p.multiplicity_lower_bound))
        .collect();
    let expected = vec![
        (rational(-1, 2), 1),
        (rational(-5, 6), 1),
        (rational(-5, 12), 2),
        (rational(-7, 12), 1),
    ];
    ensure(got == expected, || format!("banerjee eigenvalues {got:?}"))?;
    ensure(ban.iter().all(|p| p.holds()), || {
        "banerjee eigenpair failed A x = λx".into()
    })?;
    let a = weighted_adjacency(&h, &w).map_err(err)?;
    check_pairs_independently(&a.matrix, &ban)
}

fn check_pairs_independently(a: &RationalMatrix, pairs: &[hyperinc_core::PredictedEigenpair]) -> Check {
    for p in pairs {
        for x in &p.eigenvectors {
            let ax = a.matvec(x).map_err(err)?;
            let ok = ax.values().iter().zip(x.values()).all(|(l, r)| *l == r * &p.eigenvalue);
            ensure(ok, || format!("A x != {} x for class {:?}", p.eigenvalue, p.class))?;
        }
    }
    Ok(())
}

/// Units by comparing every pair of stars directly.
fn brute_force_units(h: &Hypergraph) -> BTreeSet<Vec<usize>> {
    let n = h.vertex_count();
    let star = |v: usize| -> BTreeSet<usize> { (0..h.edge_count()).filter(|&e| h.edge(e).contains(&v)).collect() };
    let mut assigned = vec![false; n];
    let mut classes = BTreeSet::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let class: Vec<usize> = (u..n).filter(|&v| star(v) == star(u)).collect();
        for &v in &class {
            assigned[v] = true;
        }
        classes.insert(class);
    }
    classes
}

struct PropertyTally {
    counts: BTreeMap<char, usize>,
    failures: BTreeMap<char, Vec<String>>,
}

impl PropertyTally {
    fn record(&mut self, key: char, seed: u64, outcome: Check) {
        *self.counts.entry(key).or_default() += 1;
        if let Err(e) = outcome {
            self.failures.entry(key).or_default().push(format!("seed {seed}: {e}"));
        }
    }
}

fn random_weighting(h: &Hypergraph, rng: &mut ChaCha8Rng) -> Result<EdgeWeighting, String> {
    let weights = (0..h.edge_count())
        .map(|_| rational(rng.random_range(1..=20), rng.random_range(1..=20)))
        .collect();
    EdgeWeighting::custom(h, weights).map_err(err)
}

fn property_checks(h: &Hypergraph, rng: &mut ChaCha8Rng, tally: &mut PropertyTally, seed: u64) {
    let b = edge_vertex_incidence(h);
    let i = vertex_edge_incidence(h);
    let contraction = unit_contraction(h);

    tally.record('a', seed, {
        let (r1, r2) = (rank(&b), rank(&edge_vertex_incidence(&contraction.hypergraph)));
        ensure(r1 == r2, || format!("rank {r1} != contraction rank {r2}"))
    });

    tally.record('b', seed, {
        let report = nullity_decomposition(h);
        ensure(report.holds(), || format!("{:?}", report.failures()))
    });

    tally.record('c', seed, {
        let grouped: BTreeSet<Vec<usize>> = compute_units(h).classes().into_iter().collect();
        let brute = brute_force_units(h);
        ensure(grouped == brute, || format!("{grouped:?} != {brute:?}"))
    });

    tally.record(
        'd',
        seed,
        (|| {
            for kind in CertificateType::ALL
                .iter()
                .copied()
                .filter(|k| *k != CertificateType::GeneralCombination)
            {
                let found = find_certificates_exhaustive(h, kind, &FinderBounds::default()).map_err(err)?;
                for c in &found {
                    ensure(annihilated(h, c)?, || format!("{kind} {:?} not in kernel", c.kind))?;
                }
            }
            Ok(())
        })(),
    );

    tally.record(
        'e',
        seed,
        (|| {
            for m in [&b, &i] {
                let basis = rank_and_nullspace(m);
                ensure(basis.vectors.len() == m.cols() - basis.rank, || {
                    "basis size != nullity".into()
                })?;
                for x in &basis.vectors {
                    ensure(m.matvec(x).map_err(err)?.is_zero(), || {
                        format!("basis vector {x} not in kernel")
                    })?;
                }
            }
            Ok(())
        })(),
    );

    tally.record(
        'f',
        seed,
        (|| {
            for m in [&b, &i] {
                let (q, p) = (rank(m), rank_modular_oracle(m).map_err(err)?);
                ensure(q == p, || format!("rational rank {q} != modular rank {p}"))?;
            }
            Ok(())
        })(),
    );

    tally.record(
        'g',
        seed,
        (|| {
            let units = compute_units(h).classes();
            for _ in 0..3 {
                let w = random_weighting(h, rng)?;
                let a = weighted_adjacency(h, &w).map_err(err)?;
                let relation = matrix_equivalence(&a.matrix).map_err(err)?;
                ensure(is_finer(&units, &relation.classes).map_err(err)?, || {
                    format!("units {units:?} not finer than {:?}", relation.classes)
                })?;
            }
            Ok(())
        })(),
    );

    tally.record(
        'h',
        seed,
        (|| {
            let n = h.vertex_count();
            let subset: Vec<String> = loop {
                let picked: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
                if !picked.is_empty() {
                    break labels(h, &picked, false);
                }
            };
            let report = extension_theorem_check(h, &subset).map_err(err)?;
            ensure(report.holds(), || format!("extension from {subset:?} left the kernel"))?;
            for x in &report.extended {
                ensure(b.matvec(x).map_err(err)?.is_zero(), || {
                    format!("extended {x} not in kernel")
                })?;
            }
            Ok(())
        })(),
    );
}

const PROPERTY_KEYS: [(char, &str); 8] = [
    ('a', "rank(B_H) = rank of the unit contraction"),
    ('b', "nullity decomposition identity"),
    ('c', "grouped units = pairwise star comparison"),
    ('d', "exhaustive finder certificates lie in the kernel"),
    ('e', "null-space basis vectors re-multiply to zero"),
    ('f', "rational rank = modular-oracle rank"),
    ('g', "unit partition finer than R_A for 3 random weightings"),
    ('h', "extended kernel vectors of random induced sub-hypergraphs"),
];

fn property_suite(base_seed: u64) -> Vec<(String, Check)> {
    let mut tally = PropertyTally {
        counts: BTreeMap::new(),
        failures: BTreeMap::new(),
    };
    let mut setup = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base_seed);
    for instance in 0..200u64 {
        let vertices = rng.random_range(1..=10usize);
        let max_size = rng.random_range(1..=vertices);
        let available: u64 = (1..=max_size as u64).map(|s| binomial(vertices as u64, s)).sum();
        let edges = rng.random_range(1..=8u64).min(available) as usize;
        let seed = base_seed.wrapping_add(instance);
        let spec = RandomSpec {
            vertices,
            edges,
            max_size,
            seed,
        };
        match random_hypergraph(&spec) {
            Ok(h) => {
                let mut local = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
                property_checks(&h, &mut local, &mut tally, seed);
            }
            Err(e) => setup.push(format!("seed {seed}: {e}")),
        }
    }
    let mut out = Vec::new();
    for (key, name) in PROPERTY_KEYS {
        let count = tally.counts.get(&key).copied().unwrap_or(0);
        let failures = tally.failures.get(&key).cloned().unwrap_or_default();
        let outcome = if !setup.is_empty() {
            Err(format!("generator failed: {}", setup.join("; ")))
        } else if count != 200 {
            Err(format!("{count} of 200 instances checked"))
        } else if failures.is_empty() {
            Ok(())
        } else {
            Err(format!("{} failures, first: {}", failures.len(), failures[0]))
        };
        out.push((format!("6({key}) {name} [200 instances]"), outcome));
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn main() -> ExitCode {
    let seed = std::env::var("HYPERINC_ACCEPTANCE_SEED")
        .ok()
        .and_then(|s| {
            let s = s.trim();
            match s.strip_prefix("0x") {
                Some(hex) => u64::from_str_radix(hex, 16).ok(),
                None => s.parse().ok(),
            }
        })
        .unwrap_or(0x5eed);
    let start = Instant::now();
    let mut results: Vec<(String, Check)> = vec![
        (
            "1 worked example: rank 5, nullity 6 = 1 + (11 - 6)".into(),
            criterion_1(),
        ),
        (
            "2 worked example units, generators, H_U isomorphic to contraction".into(),
            criterion_2(),
        ),
        (
            "3 uniform cycles 2 <= k <= n <= 14: roots of unity, rank bounds".into(),
            criterion_3(),
        ),
        ("4 worked kernel certificates verify exactly".into(), criterion_4()),
        ("5 unit and Banerjee eigenpairs verify exactly".into(), criterion_5()),
    ];
    results.extend(property_suite(seed));

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(()) => println!("PASS {name}"),
            Err(e) => {
                failed += 1;
                println!("FAIL {name}: {e}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed (seed {seed:#x}, {:.1}s)",
        results.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
