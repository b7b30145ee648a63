//! Rank over prime fields, used as an independent cross-check on the exact
//! rational rank of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

const PRIME_SEED: u64 = 0x5eed_0f9f;
const PRIME_COUNT: usize = 3;
const LOWER: u64 = 1 << 20;
const UPPER: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `PRIME_COUNT` distinct primes in `(2^20, 2^31)`, drawn with a fixed seed.
pub fn oracle_primes() -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(PRIME_SEED);
    let mut primes = Vec::with_capacity(PRIME_COUNT);
    while primes.len() < PRIME_COUNT {
        let candidate = rng.random_range(LOWER + 1..UPPER) | 1;
        if is_prime(candidate) && !primes.contains(&candidate) {
            primes.push(candidate);
        }
    }
    primes
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Rank of `rows` over `GF(p)` by Gaussian elimination. Needs `p < 2^32`.
pub fn rank_mod_p(rows: &[Vec<BigInt>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(piv) = (rank..n_rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        let pivot_row = a[rank][c..].to_vec();
        for row in &mut a[rank + 1..] {
            if row[c] == 0 {
                continue;
            }
            let f = row[c] * inv % p;
            for (x, &q) in row[c..].iter_mut().zip(&pivot_row) {
                *x = (*x + p - f * q % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Maximum rank of an integer matrix over several prime fields. This never
/// exceeds the rank over `Q`, and equals it unless every prime divides some
/// maximal minor.
pub fn rank_modular_oracle(m: &RationalMatrix) -> Result<usize> {
    if !m.is_integral() {
        return Err(Error::NonIntegerEntries);
    }
    let rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.to_integer()).collect())
        .collect();
    Ok(oracle_primes()
        .into_iter()
        .map(|p| rank_mod_p(&rows, p))
        .max()
        .unwrap_or(0))
}
