//! Dense integer matrices and their ranks over the rationals and over prime
//! fields.

mod exact;
mod modp;

pub use exact::rank_exact;
pub use modp::{is_prime, random_prime, rank_mod_p, ModpEchelon};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The field a matrix is read over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Field {
    /// Integer entries read as rationals.
    Rational,
    /// Entries in `[0, p)` of the prime field `F_p`.
    ModP(u64),
}

/// Row-major dense matrix with a field tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
    field: Field,
}

impl ScalarMatrix {
    /// Integer matrix over the rationals.
    pub fn integer(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ScalarMatrix {
            rows,
            cols,
            entries,
            field: Field::Rational,
        })
    }

    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            entries.extend_from_slice(r);
        }
        ScalarMatrix::integer(rows.len(), cols, entries)
    }

    /// Matrix over `F_p`; entries must already lie in `[0, p)`.
    pub fn mod_p(rows: usize, cols: usize, entries: Vec<i64>, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if let Some(&value) = entries.iter().find(|&&e| e < 0 || e as u64 >= p) {
            return Err(Error::UnreducedEntry { value, p });
        }
        let mut m = ScalarMatrix::integer(rows, cols, entries)?;
        m.field = Field::ModP(p);
        Ok(m)
    }

    pub fn identity(k: usize) -> Self {
        let mut entries = vec![0; k * k];
        for i in 0..k {
            entries[i * k + i] = 1;
        }
        ScalarMatrix {
            rows: k,
            cols: k,
            entries,
            field: Field::Rational,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
            field: Field::Rational,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[i64]> {
        // chunks_exact panics on zero width
        (0..self.rows).map(move |r| self.row(r))
    }

    /// Reduces a rational-tagged matrix into `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        match self.field {
            Field::ModP(q) if q == p => return Ok(self.clone()),
            Field::ModP(q) => {
                return Err(Error::FieldMismatch(format!(
                    "cannot reduce an F_{q} matrix modulo {p}"
                )))
            }
            Field::Rational => {}
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let entries = self
            .entries
            .iter()
            .map(|&e| i128::from(e).rem_euclid(i128::from(p)) as i64)
            .collect();
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            field: Field::ModP(p),
        })
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &ScalarMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "stacking {} columns onto {}",
                other.cols, self.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "stacking {:?} onto {:?}",
                other.field, self.field
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(ScalarMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
            field: self.field,
        })
    }

    /// Appends one row in the matrix's own field.
    pub fn augment_row(&self, row: &[i64]) -> Result<Self> {
        let extra = match self.field {
            Field::Rational => ScalarMatrix::integer(1, row.len(), row.to_vec())?,
            Field::ModP(p) => ScalarMatrix::mod_p(1, row.len(), row.to_vec(), p)?,
        };
        self.stack(&extra)
    }

    /// Rank in the matrix's own field.
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rational => exact::bareiss_rank(self),
            Field::ModP(p) => modp::rank_reduced(self, p),
        }
    }
}
