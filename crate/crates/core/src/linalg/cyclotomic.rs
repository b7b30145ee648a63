//! Exact arithmetic in the cyclotomic fields `Q(ζ_r)`.
//!
//! Elements are rational polynomials of degree below `φ(r)`, reduced modulo
//! the `r`-th cyclotomic polynomial `Φ_r`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::uniform_cycle;
use crate::label::Label;
use crate::vector::{LabeledVector, Rational};

/// `Φ_r` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicPoly {
    order: usize,
    coeffs: Vec<BigInt>,
}

/// Quotient and remainder of integer polynomials by a monic divisor.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut rem = num.to_vec();
    let d = den.len() - 1;
    if rem.len() <= d {
        return (vec![BigInt::zero()], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for i in (0..quot.len()).rev() {
        let c = rem[i + d].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    rem.truncate(d.max(1));
    (quot, rem)
}

impl CyclotomicPoly {
    /// `Φ_r = (x^r − 1) / ∏_{d | r, d < r} Φ_d`, by exact division.
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameters("cyclotomic order must be positive".into()));
        }
        let mut poly = vec![BigInt::zero(); order + 1];
        poly[0] = -BigInt::one();
        poly[order] = BigInt::one();
        for d in (1..order).filter(|d| order.is_multiple_of(*d)) {
            let phi_d = CyclotomicPoly::new(d)?;
            let (q, r) = divide_monic(&poly, &phi_d.coeffs);
            debug_assert!(r.iter().all(Zero::is_zero));
            poly = q;
        }
        Ok(CyclotomicPoly { order, coeffs: poly })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `φ(r)`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// True when `Φ_r` divides `x^r − 1` with zero remainder.
    pub fn divides_x_pow_r_minus_one(&self) -> bool {
        let mut poly = vec![BigInt::zero(); self.order + 1];
        poly[0] = -BigInt::one();
        poly[self.order] = BigInt::one();
        divide_monic(&poly, &self.coeffs).1.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for CyclotomicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rational: Vec<Rational> = self.coeffs.iter().cloned().map(Rational::from_integer).collect();
        f.write_str(&render_poly(&rational, "x"))
    }
}

fn render_poly(coeffs: &[Rational], var: &str) -> String {
    let mut terms = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        let abs = c.abs();
        let mono = match i {
            0 => String::new(),
            1 => var.to_owned(),
            _ => format!("{var}^{i}"),
        };
        let body = if mono.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            mono
        } else {
            format!("{abs}*{mono}")
        };
        terms.push((sign, body));
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (sign, body)) in terms.into_iter().enumerate() {
        match (k, sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            (_, s) => {
                out.push(' ');
                out.push_str(s);
                out.push(' ');
            }
        }
        out.push_str(&body);
    }
    out
}

/// An element of `Q(ζ_r)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicPoly>,
    coeffs: Vec<Rational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Remainder of `p` modulo the monic polynomial `m`.
fn rem_monic(mut p: Vec<Rational>, m: &[BigInt]) -> Vec<Rational> {
    let d = m.len() - 1;
    while p.len() > d {
        let c = p.pop().expect("non-empty");
        if c.is_zero() {
            continue;
        }
        let base = p.len() - d;
        for (j, mj) in m[..d].iter().enumerate() {
            p[base + j] -= &c * mj;
        }
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder over `Q`; `b` must be non-zero and trimmed.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("non-empty") * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

impl CyclotomicNumber {
    fn from_coeffs(field: &Arc<CyclotomicPoly>, coeffs: Vec<Rational>) -> Self {
        let mut coeffs = rem_monic(coeffs, &field.coeffs);
        trim(&mut coeffs);
        CyclotomicNumber {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn zero(field: &Arc<CyclotomicPoly>) -> Self {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &Arc<CyclotomicPoly>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicPoly>, c: Rational) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// The generator `ζ_r`.
    pub fn zeta(field: &Arc<CyclotomicPoly>) -> Self {
        Self::from_coeffs(field, vec![Rational::zero(), Rational::one()])
    }

    /// `ζ_r^e` for any integer `e`, via `ζ_r^r = 1`.
    pub fn zeta_pow(field: &Arc<CyclotomicPoly>, e: i64) -> Self {
        let r = field.order as i64;
        let e = e.rem_euclid(r) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Arc<CyclotomicPoly> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.field.order
    }

    /// Coefficients in the power basis `1, ζ, ..., ζ^{φ(r)-1}`, trailing
    /// zeros removed.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.field.order, other.field.order, "mixing cyclotomic fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        let mut out = vec![Rational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, x) in self.coeffs.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in other.coeffs.iter().enumerate() {
            out[i] += y;
        }
        Self::from_coeffs(&self.field, out)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        Self::from_coeffs(&self.field, poly_mul(&self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// `Φ_r`, which is irreducible, so every non-zero element is invertible.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<Rational> = self.field.coeffs.iter().cloned().map(Rational::from_integer).collect();
        // invariant: s_i * self ≡ r_i (mod Φ_r)
        let (mut r0, mut r1) = (modulus, self.coeffs.clone());
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a non-zero constant, the gcd
        let c = r0[0].recip();
        Some(Self::from_coeffs(&self.field, s0.iter().map(|x| x * &c).collect()))
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q(ζ_{})", self.field.order)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(&self.coeffs, "z"))
    }
}

impl crate::vector::Scalar for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        CyclotomicNumber::zero(&self.field)
    }

    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        CyclotomicNumber::add(self, other)
    }

    fn scale(&self, c: &Rational) -> Self {
        CyclotomicNumber::scale(self, c)
    }
}

/// `x(i) = (ζ_r^power)^i` for `i` in `0..n`, labelled like the vertices of
/// `uniform_cycle(n, _)`.
pub fn root_of_unity_vector(n: usize, r: usize, power: usize) -> Result<LabeledVector<CyclotomicNumber>> {
    if r < 2 {
        return Err(Error::InvalidParameters(format!("root order must be >= 2, got {r}")));
    }
    if power == 0 || power > r {
        return Err(Error::InvalidParameters(format!(
            "power must lie in 1..={r}, got {power}"
        )));
    }
    let field = Arc::new(CyclotomicPoly::new(r)?);
    let values = (0..n)
        .map(|i| CyclotomicNumber::zeta_pow(&field, (power * i) as i64))
        .collect();
    LabeledVector::new((0..n).map(Label::from).collect(), values)
}

/// Evidence that `B_{C_n^k}` has `r − 1` independent kernel vectors over
/// `Q(ζ_r)`, `r = gcd(n, k)`.
#[derive(Clone, Debug)]
pub struct CycleKernelReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// Powers `j` with `B · x_{ζ_r^j} = 0`, out of `1..r`.
    pub kernel_powers: Vec<usize>,
    /// The nodes `ζ_r^j` are pairwise distinct, so the vectors restricted to
    /// the first `r` coordinates form a Vandermonde system of full rank.
    pub nodes_distinct: bool,
    /// `n − r + 1`.
    pub rank_bound: usize,
}

impl CycleKernelReport {
    /// All `r − 1` vectors are in the kernel and they are independent.
    pub fn certifies_bound(&self) -> bool {
        self.kernel_powers.len() + 1 == self.r && self.nodes_distinct
    }
}

/// Checks `B_{C_n^k} · x_{ζ_r^j} = 0` exactly for `j = 1..r−1`.
pub fn cycle_kernel_report(n: usize, k: usize) -> Result<CycleKernelReport> {
    let cycle = uniform_cycle(n, k)?;
    let b = super::matrix::edge_vertex_incidence(&cycle);
    let r = n.gcd(&k);
    let mut kernel_powers = Vec::new();
    let mut nodes = Vec::new();
    if r >= 2 {
        for j in 1..r {
            let x = root_of_unity_vector(n, r, j)?;
            if b.matvec(&x)?.is_zero() {
                kernel_powers.push(j);
            }
            nodes.push(x.values()[1].clone());
        }
    }
    let nodes_distinct = nodes.iter().enumerate().all(|(a, x)| nodes[..a].iter().all(|y| x != y));
    Ok(CycleKernelReport {
        n,
        k,
        r,
        kernel_powers,
        nodes_distinct,
        rank_bound: n - r + 1,
    })
}
