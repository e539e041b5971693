//! Gram matrices of Coxeter diagrams and their exact inertia.
//!
//! Inertia is computed by symmetric Gaussian elimination (LDLᵀ with
//! symmetric pivoting, and a 2x2 pivot when every remaining diagonal entry
//! is exactly zero). By Sylvester's law of inertia the pivot signs give the
//! eigenvalue sign counts; every sign decision is a certified
//! [`SignCertificate`](crate::exact::SignCertificate), never floating point.

use std::fmt;

use crate::diagram::{CoxeterDiagram, EdgeLabel};
use crate::exact::{cos_pi_over, RadicalNumber, Sign, UnsupportedOrder};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GramError {
    #[error(transparent)]
    UnsupportedOrder(#[from] UnsupportedOrder),
    #[error("matrix is not square or rows have unequal lengths")]
    NotSquare,
    #[error("diagonal entry {0} is not 1")]
    BadDiagonal(usize),
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("matrix has size {size}, expected n+3 = {expected} for dimension {dim}")]
    DimensionMismatch {
        size: usize,
        expected: usize,
        dim: usize,
    },
}

/// Eigenvalue sign counts `(positive, negative, zero)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct InertiaTriple {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl InertiaTriple {
    pub fn size(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.negative, self.zero)
    }
}

/// Symmetric matrix with unit diagonal and non-positive off-diagonal
/// entries, exactly as diagrams produce them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    size: usize,
    entries: Vec<RadicalNumber>, // row-major
}

impl GramMatrix {
    /// Builds the Gram matrix of a diagram: absent edge -> 0 (angle pi/2),
    /// order m -> -cos(pi/m), infinity -> -1, dotted weight w -> -w.
    pub fn from_diagram(d: &CoxeterDiagram) -> Result<GramMatrix, GramError> {
        let p = d.node_count();
        let mut entries = vec![RadicalNumber::zero(); p * p];
        for i in 0..p {
            entries[i * p + i] = RadicalNumber::one();
        }
        for (i, j, label) in d.edges() {
            let value = match label {
                EdgeLabel::Order(m) => -cos_pi_over(*m)?,
                EdgeLabel::Infinity => -RadicalNumber::one(),
                EdgeLabel::Dotted(w) => -w.clone(),
            };
            entries[i * p + j] = value.clone();
            entries[j * p + i] = value;
        }
        Ok(GramMatrix { size: p, entries })
    }

    /// Validating constructor from explicit rows.
    pub fn from_rows(rows: Vec<Vec<RadicalNumber>>) -> Result<GramMatrix, GramError> {
        let p = rows.len();
        if rows.iter().any(|r| r.len() != p) {
            return Err(GramError::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            if !row[i].is_one() {
                return Err(GramError::BadDiagonal(i));
            }
            for j in i + 1..p {
                if row[j] != rows[j][i] {
                    return Err(GramError::NotSymmetric(i, j));
                }
                if row[j].sign().sign == Sign::Positive {
                    return Err(GramError::PositiveOffDiagonal(i, j));
                }
            }
        }
        Ok(GramMatrix {
            size: p,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &RadicalNumber {
        &self.entries[i * self.size + j]
    }

    /// Exact inertia via LDLᵀ pivot signs.
    pub fn inertia(&self) -> InertiaTriple {
        let rows: Vec<Vec<RadicalNumber>> = (0..self.size)
            .map(|i| (0..self.size).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        symmetric_inertia(rows)
    }

    pub fn rank(&self) -> usize {
        let it = self.inertia();
        self.size - it.zero
    }

    pub fn is_positive_definite(&self) -> bool {
        let it = self.inertia();
        it.negative == 0 && it.zero == 0
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.inertia().negative == 0
    }

    /// The rank condition a polytope's Gram matrix must satisfy: an
    /// (n+3)-square matrix of vectors living in E^{n,1} has rank at most
    /// n+1, equivalently every (n+2)x(n+2) minor vanishes.
    pub fn satisfies_rank_bound(&self, dim: usize) -> Result<bool, GramError> {
        if self.size != dim + 3 {
            return Err(GramError::DimensionMismatch {
                size: self.size,
                expected: dim + 3,
                dim,
            });
        }
        Ok(self.rank() <= dim + 1)
    }

    /// Plain-text dump: one row per line, entries in the expression grammar,
    /// tab-separated.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if j > 0 {
                    out.push('\t');
                }
                out.push_str(&self.entry(i, j).to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Inertia of a symmetric matrix given as rows, by exact elimination.
///
/// Pivot policy: the first remaining index with a certified-nonzero diagonal
/// entry; if every remaining diagonal entry is exactly zero, the first
/// nonzero off-diagonal entry (k,l) drives a 2x2 pivot `[[0,a],[a,0]]`
/// contributing one positive and one negative; if the whole remaining block
/// is zero, everything left counts as zero.
pub(crate) fn symmetric_inertia(mut work: Vec<Vec<RadicalNumber>>) -> InertiaTriple {
    let n = work.len();
    let mut active: Vec<usize> = (0..n).collect();
    let mut positive = 0;
    let mut negative = 0;
    let mut zero = 0;

    while !active.is_empty() {
        // 1x1 pivot on the first certified-nonzero diagonal entry
        let diag_pivot = active
            .iter()
            .position(|&k| !work[k][k].is_zero());
        if let Some(pos) = diag_pivot {
            let k = active.remove(pos);
            let d = work[k][k].clone();
            match d.sign().sign {
                Sign::Positive => positive += 1,
                Sign::Negative => negative += 1,
                Sign::Zero => unreachable!("structural zero test failed"),
            }
            let d_inv = d.inverse().expect("pivot is nonzero");
            for ai in 0..active.len() {
                let i = active[ai];
                if work[i][k].is_zero() {
                    continue;
                }
                let factor = &work[i][k] * &d_inv;
                for aj in ai..active.len() {
                    let j = active[aj];
                    let delta = &factor * &work[k][j];
                    let updated = &work[i][j] - &delta;
                    work[i][j] = updated.clone();
                    if i != j {
                        work[j][i] = updated;
                    }
                }
            }
            continue;
        }

        // all remaining diagonal entries are exactly zero
        let mut off = None;
        'scan: for (ai, &k) in active.iter().enumerate() {
            for &l in &active[ai + 1..] {
                if !work[k][l].is_zero() {
                    off = Some((k, l));
                    break 'scan;
                }
            }
        }
        let Some((k, l)) = off else {
            zero += active.len();
            break;
        };
        positive += 1;
        negative += 1;
        let a_inv = work[k][l].inverse().expect("off-diagonal pivot nonzero");
        active.retain(|&i| i != k && i != l);
        for ai in 0..active.len() {
            let i = active[ai];
            for aj in ai..active.len() {
                let j = active[aj];
                // Schur complement of [[0,a],[a,0]]
                let delta = (&(&work[i][k] * &work[l][j]) + &(&work[i][l] * &work[k][j])) * &a_inv;
                let updated = &work[i][j] - &delta;
                work[i][j] = updated.clone();
                if i != j {
                    work[j][i] = updated;
                }
            }
        }
    }

    InertiaTriple {
        positive,
        negative,
        zero,
    }
}
