use super::field::{Field, Rational};
use super::solve::{nullspace, solve_linear};
use super::sparse::SparseMatrix;

/// Linear subspace of `Q^n`, stored by a basis of column vectors.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: SparseMatrix<Rational>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: SparseMatrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: SparseMatrix::identity(ambient) }
    }

    /// Span of the columns of `m`.
    pub fn span(m: &SparseMatrix<Rational>) -> Self {
        let sol = solve_linear(m, &SparseMatrix::zeros(m.rows(), 0)).expect("dimensions agree");
        let mut cols = sol.pivots.clone();
        cols.sort_unstable();
        let rows: Vec<usize> = (0..m.rows()).collect();
        Subspace { ambient: m.rows(), basis: m.select(&rows, &cols) }
    }

    /// Common kernel of the functionals given as rows of `f`.
    pub fn annihilator(f: &SparseMatrix<Rational>) -> Self {
        let ker = nullspace(f);
        if ker.is_empty() {
            return Subspace::zero(f.cols());
        }
        Subspace { ambient: f.cols(), basis: SparseMatrix::hstack(&ker) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &SparseMatrix<Rational> {
        &self.basis
    }

    pub fn contains_vector(&self, v: &SparseMatrix<Rational>) -> bool {
        SparseMatrix::hstack(&[self.basis.clone(), v.clone()]).rank() == self.dim()
    }

    pub fn contains(&self, o: &Subspace) -> bool {
        SparseMatrix::hstack(&[self.basis.clone(), o.basis.clone()]).rank() == self.dim()
    }

    pub fn same_as(&self, o: &Subspace) -> bool {
        self.dim() == o.dim() && self.contains(o)
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        Subspace::span(&SparseMatrix::hstack(&[self.basis.clone(), o.basis.clone()]))
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        if self.dim() == 0 || o.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let m = SparseMatrix::hstack(&[self.basis.clone(), o.basis.neg()]);
        let ker = nullspace(&m);
        if ker.is_empty() {
            return Subspace::zero(self.ambient);
        }
        let k = SparseMatrix::hstack(&ker);
        let top: Vec<usize> = (0..self.dim()).collect();
        let coeffs = k.select(&top, &(0..k.cols()).collect::<Vec<_>>());
        Subspace::span(&self.basis.mul(&coeffs))
    }

    /// Kernel of the functionals (rows of `f`) restricted to this subspace.
    pub fn restrict_kernel(&self, f: &SparseMatrix<Rational>) -> Subspace {
        self.intersect(&Subspace::annihilator(f))
    }

    /// Whether the functionals (rows of `f`) stay linearly independent on this subspace.
    pub fn functionals_independent(&self, f: &SparseMatrix<Rational>) -> bool {
        f.mul(&self.basis).rank() == f.rows()
    }
}

impl PartialEq for Subspace {
    fn eq(&self, o: &Self) -> bool {
        self.ambient == o.ambient && self.same_as(o)
    }
}

/// Column vector from integers.
pub fn int_vector<F: Field>(v: &[i64]) -> SparseMatrix<F> {
    SparseMatrix::column(v.iter().map(|&x| F::from_i64(x)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;

    #[test]
    fn intersection_dimension() {
        let e = |k| SparseMatrix::<Rational>::unit(3, k);
        let u = Subspace::span(&SparseMatrix::hstack(&[e(0), e(1)]));
        let w = Subspace::span(&SparseMatrix::hstack(&[e(1), e(2)]));
        let i = u.intersect(&w);
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vector(&e(1)));
        assert_eq!(u.sum(&w).dim(), 3);
    }

    #[test]
    fn annihilator_of_functional() {
        let f = SparseMatrix::from_dense(vec![vec![rat(1), rat(1), rat(0)]]);
        let k = Subspace::annihilator(&f);
        assert_eq!(k.dim(), 2);
        assert!(k.contains_vector(&int_vector(&[1, -1, 0])));
    }
}
