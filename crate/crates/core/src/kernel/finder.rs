//! Exhaustive certificate search over small hypergraphs.
//!
//! Sets are bitmasks, so vertex-side kinds need `|V| ≤ 63` in principle;
//! the configured bounds keep the `3^n` and `4^n` enumerations tractable.
//!
//! Results are canonical: ratios are positive, ratio partitions report
//! `r ≤ 1` (swapping the sets inverts `r`), three-set relations report
//! `r > 0` (swapping `U` and `V` negates it), and symmetric pairs keep the
//! set holding the smallest element first.

use num_integer::Integer;
use num_traits::{One, Signed};

use super::certificate::{verify_certificate, CertificateKind, CertificateType, KernelCertificate};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::label::Label;
use crate::vector::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinderBounds {
    /// Largest `|V(H)|` accepted for vertex-side kinds.
    pub max_vertices: usize,
    /// Largest `|E(H)|` accepted for hyperedge-side kinds.
    pub max_edges: usize,
    /// Search stops after this many certificates.
    pub max_results: usize,
}

impl Default for FinderBounds {
    fn default() -> Self {
        FinderBounds {
            max_vertices: 12,
            max_edges: 12,
            max_results: 100_000,
        }
    }
}

const MASK_LIMIT: usize = 63;

fn masks_by_row(rows: usize, cols: usize, member: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    (0..rows)
        .map(|r| (0..cols).filter(|&c| member(r, c)).fold(0u64, |m, c| m | (1 << c)))
        .collect()
}

fn labels_of(all: &[Label], mask: u64) -> Vec<Label> {
    (0..all.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| all[i].clone())
        .collect()
}

fn count(row: u64, set: u64) -> i64 {
    (row & set).count_ones() as i64
}

fn lowest(mask: u64) -> u64 {
    mask & mask.wrapping_neg()
}

/// The unique `r` with `a_i = r b_i` for every row, if one exists and some
/// `b_i` is non-zero.
fn common_ratio(rows: &[u64], a: impl Fn(u64) -> i64, b: impl Fn(u64) -> i64) -> Option<Rational> {
    let mut ratio: Option<Rational> = None;
    for &row in rows {
        let (x, y) = (a(row), b(row));
        if y == 0 {
            if x != 0 {
                return None;
            }
            continue;
        }
        let q = Rational::new(x.into(), y.into());
        match &ratio {
            Some(r) if *r != q => return None,
            Some(_) => {}
            None => ratio = Some(q),
        }
    }
    ratio
}

/// Iterates non-empty submasks of `mask`.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = mask;
    let mut done = mask == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = next;
        next = (next - 1) & mask;
        done = next == 0;
        Some(current)
    })
}

struct Collector<'a> {
    h: &'a Hypergraph,
    limit: usize,
    found: Vec<KernelCertificate>,
}

impl Collector<'_> {
    /// Builds and verifies a candidate. Returns `false` once the limit is hit.
    fn push(&mut self, kind: CertificateKind) -> Result<bool> {
        let cert = KernelCertificate::build(self.h, kind)?;
        let verdict = verify_certificate(self.h, &cert)?;
        if !verdict.kernel {
            return Err(Error::InconsistentVerdict(format!(
                "finder produced a {} outside the kernel",
                cert.certificate_type()
            )));
        }
        self.found.push(cert);
        Ok(self.found.len() < self.limit)
    }
}

/// All valid certificates of `kind` in canonical form, in a fixed order.
pub fn find_certificates_exhaustive(
    h: &Hypergraph,
    kind: CertificateType,
    bounds: &FinderBounds,
) -> Result<Vec<KernelCertificate>> {
    if kind == CertificateType::GeneralCombination {
        // coefficients range over Q, so there is nothing finite to enumerate
        return Err(Error::UnsupportedKind(kind.to_string()));
    }
    let (size, bound) = match kind.side() {
        super::certificate::Side::EdgeVertex => (h.vertex_count(), bounds.max_vertices),
        super::certificate::Side::VertexEdge => (h.edge_count(), bounds.max_edges),
    };
    let bound = bound.min(MASK_LIMIT);
    if size > bound {
        return Err(Error::InstanceTooLarge { size, bound });
    }
    let mut out = Collector {
        h,
        limit: bounds.max_results.max(1),
        found: Vec::new(),
    };
    let n = h.vertex_count();
    let m = h.edge_count();
    let edge_rows = masks_by_row(m, n, |e, v| h.contains(e, v));
    let star_rows = masks_by_row(n, m, |v, e| h.contains(e, v));
    let verts = h.vertices();
    let edges = h.edge_labels();

    match kind {
        CertificateType::EqualEdgePartition => pairs(n, &edge_rows, false, |u, v, _| {
            out.push(CertificateKind::EqualEdgePartition {
                u: labels_of(verts, u),
                v: labels_of(verts, v),
            })
        })?,
        CertificateType::RatioEdgePartition => pairs(n, &edge_rows, true, |u, v, r| {
            out.push(CertificateKind::RatioEdgePartition {
                u: labels_of(verts, u),
                v: labels_of(verts, v),
                r,
            })
        })?,
        CertificateType::EqualVertexPartition => pairs(m, &star_rows, false, |e, f, _| {
            out.push(CertificateKind::EqualVertexPartition {
                e: labels_of(edges, e),
                f: labels_of(edges, f),
            })
        })?,
        CertificateType::RatioVertexPartition => pairs(m, &star_rows, true, |e, f, r| {
            out.push(CertificateKind::RatioVertexPartition {
                e: labels_of(edges, e),
                f: labels_of(edges, f),
                r,
            })
        })?,
        CertificateType::ThreeSetRelation => {
            let full = (1u64 << n) - 1;
            'outer: for w in 1..=full {
                for u in submasks(full & !w) {
                    for v in submasks(full & !w & !u) {
                        let Some(r) = common_ratio(&edge_rows, |e| count(e, u) - count(e, v), |e| count(e, w)) else {
                            continue;
                        };
                        if !r.is_positive() {
                            continue;
                        }
                        let more = out.push(CertificateKind::ThreeSetRelation {
                            u: labels_of(verts, u),
                            v: labels_of(verts, v),
                            w: labels_of(verts, w),
                            r,
                        })?;
                        if !more {
                            break 'outer;
                        }
                    }
                }
            }
        }
        CertificateType::UnitPair => {
            'outer: for a in 0..n {
                for b in a + 1..n {
                    if star_rows[a] == star_rows[b] {
                        let more = out.push(CertificateKind::UnitPair {
                            u: verts[a].clone(),
                            v: verts[b].clone(),
                        })?;
                        if !more {
                            break 'outer;
                        }
                    }
                }
            }
        }
        CertificateType::RootOfUnityCycle => {
            'outer: for r in 2..=n.max(2) {
                for power in (1..r).filter(|p| p.gcd(&r) == 1) {
                    let cert = KernelCertificate::build(h, CertificateKind::RootOfUnityCycle { r, power })?;
                    if verify_certificate(h, &cert)?.kernel {
                        out.found.push(cert);
                        if out.found.len() >= out.limit {
                            break 'outer;
                        }
                    }
                }
            }
        }
        CertificateType::GeneralCombination => unreachable!("rejected above"),
    }
    Ok(out.found)
}

/// Enumerates disjoint non-empty `(A, B)` over `size` ground elements with
/// `|row ∩ A| = r |row ∩ B|` on every row. With `ratio == false` only `r = 1`
/// is accepted. Calls `emit` until it returns `false`.
fn pairs(
    size: usize,
    rows: &[u64],
    ratio: bool,
    mut emit: impl FnMut(u64, u64, Rational) -> Result<bool>,
) -> Result<()> {
    if size == 0 {
        return Ok(());
    }
    let full = (1u64 << size) - 1;
    for a in 1..=full {
        for b in submasks(full & !a) {
            let r = if ratio {
                match common_ratio(rows, |x| count(x, a), |x| count(x, b)) {
                    Some(r) if r.is_positive() && r <= Rational::one() => r,
                    _ => continue,
                }
            } else {
                if rows.iter().any(|&x| count(x, a) != count(x, b)) {
                    continue;
                }
                Rational::one()
            };
            if r.is_one() && lowest(a | b) & a == 0 {
                continue;
            }
            if !emit(a, b, r)? {
                return Ok(());
            }
        }
    }
    Ok(())
}
