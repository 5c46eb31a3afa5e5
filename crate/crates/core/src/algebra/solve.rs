use std::collections::BTreeMap;

use super::field::Field;
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<F> {
    pub rank: usize,
    /// Pivot columns in elimination order.
    pub pivots: Vec<usize>,
    /// Basis of the kernel of `A`, one column vector per free variable, ordered by column.
    pub kernel: Vec<SparseMatrix<F>>,
    /// A solution of `A x = b` with free variables set to zero, or `None` if inconsistent.
    pub particular: Option<SparseMatrix<F>>,
}

impl<F: Field> Solution<F> {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

type Row<F> = BTreeMap<usize, F>;

struct Reduced<F> {
    rows: Vec<Row<F>>,
    /// (row, column) of each pivot in elimination order.
    pivots: Vec<(usize, usize)>,
}

/// Gauss-Jordan elimination restricted to pivot columns `< ncols`.
///
/// Pivot choice: the entry of least weight among unused rows, ties broken by
/// lowest (row, column). Deterministic for a given input.
fn reduce<F: Field>(mut rows: Vec<Row<F>>, ncols: usize) -> Reduced<F> {
    let mut used = vec![false; rows.len()];
    let mut pivots = Vec::new();
    loop {
        let mut best: Option<((usize, u64), usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if used[r] {
                continue;
            }
            for (&c, x) in row.range(..ncols) {
                let key = (x.weight(), r, c);
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        used[pr] = true;
        let inv = rows[pr][&pc].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[pr].values_mut() {
                *x = x.mul(&inv);
            }
        }
        let prow = std::mem::take(&mut rows[pr]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr {
                continue;
            }
            let Some(f) = row.get(&pc).cloned() else { continue };
            for (&c, x) in &prow {
                let d = f.mul(x);
                match row.get_mut(&c) {
                    Some(y) => {
                        let s = y.sub(&d);
                        if s.is_zero() {
                            row.remove(&c);
                        } else {
                            *y = s;
                        }
                    }
                    None => {
                        row.insert(c, d.neg());
                    }
                }
            }
        }
        rows[pr] = prow;
        pivots.push((pr, pc));
    }
    Reduced { rows, pivots }
}

fn rows_of<F: Field>(a: &SparseMatrix<F>, b: Option<&SparseMatrix<F>>) -> Vec<Row<F>> {
    let mut rows: Vec<Row<F>> = vec![BTreeMap::new(); a.rows()];
    for (i, j, x) in a.iter() {
        rows[i].insert(j, x.clone());
    }
    if let Some(b) = b {
        for (i, j, x) in b.iter() {
            rows[i].insert(a.cols() + j, x.clone());
        }
    }
    rows
}

/// Solves `A X = B` exactly, returning rank, kernel basis and one particular solution.
pub fn solve_linear<F: Field>(a: &SparseMatrix<F>, b: &SparseMatrix<F>) -> Result<Solution<F>> {
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!("A is {}x{}, b has {} rows", a.rows(), a.cols(), b.rows())));
    }
    let n = a.cols();
    let red = reduce(rows_of(a, Some(b)), n);
    let pivot_rows: Vec<bool> = {
        let mut v = vec![false; a.rows()];
        for &(r, _) in &red.pivots {
            v[r] = true;
        }
        v
    };
    let consistent = red.rows.iter().enumerate().all(|(r, row)| pivot_rows[r] || row.is_empty());
    let particular = consistent.then(|| {
        let mut x = SparseMatrix::zeros(n, b.cols());
        for &(r, c) in &red.pivots {
            for (&k, v) in red.rows[r].range(n..) {
                x.set(c, k - n, v.clone());
            }
        }
        x
    });
    let mut is_pivot = vec![false; n];
    for &(_, c) in &red.pivots {
        is_pivot[c] = true;
    }
    let mut kernel = Vec::new();
    for f in (0..n).filter(|&f| !is_pivot[f]) {
        let mut v = SparseMatrix::zeros(n, 1);
        v.set(f, 0, F::one());
        for &(r, c) in &red.pivots {
            if let Some(x) = red.rows[r].get(&f) {
                v.set(c, 0, x.neg());
            }
        }
        kernel.push(v);
    }
    Ok(Solution {
        rank: red.pivots.len(),
        pivots: red.pivots.iter().map(|&(_, c)| c).collect(),
        kernel,
        particular,
    })
}

pub fn rank<F: Field>(a: &SparseMatrix<F>) -> usize {
    reduce(rows_of(a, None), a.cols()).pivots.len()
}

/// Kernel basis of `A` as column vectors.
pub fn nullspace<F: Field>(a: &SparseMatrix<F>) -> Vec<SparseMatrix<F>> {
    solve_linear(a, &SparseMatrix::zeros(a.rows(), 0)).expect("dimensions agree").kernel
}

/// Determinant by elimination with row swaps.
pub fn determinant<F: Field>(a: &SparseMatrix<F>) -> Result<F> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("determinant of {}x{}", a.rows(), a.cols())));
    }
    let n = a.rows();
    let mut m = a.to_dense();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return Ok(F::zero()) };
        if p != c {
            m.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&m[c][c]);
        let inv = m[c][c].inv()?;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].mul(&inv);
            for k in c..n {
                let d = f.mul(&m[c][k]);
                m[r][k] = m[r][k].sub(&d);
            }
        }
    }
    Ok(det)
}

/// Expresses each column of `targets` in the basis given by the columns of `basis`.
///
/// Errors if a target is outside the span or the basis is dependent.
pub fn coordinates<F: Field>(basis: &SparseMatrix<F>, targets: &SparseMatrix<F>) -> Result<SparseMatrix<F>> {
    let sol = solve_linear(basis, targets)?;
    if sol.rank < basis.cols() {
        return Err(Error::Invalid("basis columns are linearly dependent".into()));
    }
    sol.particular.ok_or_else(|| Error::Invalid("target outside the span of the basis".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, Rational};

    fn m(v: &[&[i64]]) -> SparseMatrix<Rational> {
        SparseMatrix::from_dense(v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn identity_system() {
        let b = m(&[&[3], &[-2], &[5]]);
        let s = solve_linear(&SparseMatrix::identity(3), &b).unwrap();
        assert_eq!(s.rank, 3);
        assert!(s.kernel.is_empty());
        assert_eq!(s.particular.unwrap(), b);
    }

    #[test]
    fn zero_system_has_full_kernel() {
        let s = solve_linear(&SparseMatrix::<Rational>::zeros(2, 3), &SparseMatrix::zeros(2, 1)).unwrap();
        assert_eq!(s.rank, 0);
        assert_eq!(s.kernel.len(), 3);
    }

    #[test]
    fn rank_two_system() {
        let a = m(&[&[1, 2, 3], &[0, 1, 4]]);
        let b = m(&[&[1], &[2]]);
        let s = solve_linear(&a, &b).unwrap();
        assert_eq!(s.rank, 2);
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(a.mul(s.particular.as_ref().unwrap()), b);
        assert!(a.mul(&s.kernel[0]).is_zero());
    }

    #[test]
    fn inconsistent_system() {
        let a = m(&[&[1, 1], &[2, 2]]);
        let b = m(&[&[1], &[3]]);
        assert!(!solve_linear(&a, &b).unwrap().is_consistent());
        assert!(solve_linear(&a, &m(&[&[1]])).is_err());
    }

    #[test]
    fn determinant_matches_cofactor() {
        let a = m(&[&[2, -1, 0], &[-1, 0, -1], &[0, -1, 2]]);
        assert_eq!(determinant(&a).unwrap(), rat(-4));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), rat(-1));
    }
}
