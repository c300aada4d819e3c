use rand::Rng;

use super::{Field, ScalarMatrix};
use crate::error::{Error, Result};

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(p)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniform random prime in `[2^62, 2^63)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(1u64 << 62..1u64 << 63) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// Row-echelon basis over `F_p`, grown one row at a time.
///
/// Each stored row has a unit pivot and zeros in the pivot columns of the
/// rows stored before it, so reducing a vector against the rows in insertion
/// order fully eliminates every pivot column.
#[derive(Clone, Debug)]
pub struct ModpEchelon {
    p: u64,
    cols: usize,
    basis: Vec<(usize, Vec<u64>)>,
}

impl ModpEchelon {
    pub fn new(p: u64, cols: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(ModpEchelon {
            p,
            cols,
            basis: Vec::new(),
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces an integer row into `F_p`.
    pub fn lift(&self, row: &[i64]) -> Vec<u64> {
        let p = i128::from(self.p);
        row.iter()
            .map(|&e| i128::from(e).rem_euclid(p) as u64)
            .collect()
    }

    fn reduce(&self, v: &mut [u64]) {
        let p = self.p;
        for (pc, b) in &self.basis {
            let f = v[*pc];
            if f == 0 {
                continue;
            }
            for j in *pc..self.cols {
                if b[j] != 0 {
                    let t = mul_mod(f, b[j], p);
                    v[j] = if v[j] >= t { v[j] - t } else { v[j] + p - t };
                }
            }
        }
    }

    /// Whether the row already lies in the span of the basis.
    pub fn contains(&self, row: &[i64]) -> bool {
        let mut v = self.lift(row);
        self.reduce(&mut v);
        v.iter().all(|&e| e == 0)
    }

    /// Adds a row; returns `true` if it was independent of the basis.
    pub fn insert(&mut self, row: &[i64]) -> bool {
        let v = self.lift(row);
        self.insert_reduced(v)
    }

    fn insert_reduced(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&e| e != 0) else {
            return false;
        };
        let inv = inv_mod(v[pc], self.p);
        for e in &mut v[pc..] {
            *e = mul_mod(*e, inv, self.p);
        }
        self.basis.push((pc, v));
        true
    }
}

pub(super) fn rank_reduced(m: &ScalarMatrix, p: u64) -> usize {
    let mut ech = ModpEchelon {
        p,
        cols: m.cols(),
        basis: Vec::new(),
    };
    for r in m.row_iter() {
        // entries are already in [0, p)
        ech.insert_reduced(r.iter().map(|&e| e as u64).collect());
        if ech.rank() == m.cols() {
            break;
        }
    }
    ech.rank()
}

/// Rank over `F_p`. Integer-tagged matrices are reduced modulo `p` first.
pub fn rank_mod_p(m: &ScalarMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    match m.field() {
        Field::ModP(q) if q != p => Err(Error::FieldMismatch(format!(
            "matrix over F_{q} queried modulo {p}"
        ))),
        _ => Ok(rank_reduced(&m.reduce_mod(p)?, p)),
    }
}
