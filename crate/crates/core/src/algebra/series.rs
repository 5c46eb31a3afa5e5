use super::field::Field;
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// Operator-valued power series in ħ truncated after ħ^order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<F> {
    order: usize,
    coeffs: Vec<SparseMatrix<F>>,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn zero(dim: usize, order: usize) -> Self {
        TruncatedSeries { order, coeffs: vec![SparseMatrix::zeros(dim, dim); order + 1] }
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        let mut s = Self::zero(dim, order);
        s.coeffs[0] = SparseMatrix::identity(dim);
        s
    }

    /// Series from the given coefficients, padded with zeros up to `order`; extra terms are dropped.
    pub fn from_coeffs(mut coeffs: Vec<SparseMatrix<F>>, order: usize) -> Result<Self> {
        let dim = coeffs.first().map(|c| c.rows()).ok_or_else(|| Error::Invalid("empty series".into()))?;
        if coeffs.iter().any(|c| c.rows() != dim || c.cols() != dim) {
            return Err(Error::Dimension("series coefficients differ in shape".into()));
        }
        coeffs.resize(order + 1, SparseMatrix::zeros(dim, dim));
        coeffs.truncate(order + 1);
        Ok(TruncatedSeries { order, coeffs })
    }

    /// `ħ^k X`.
    pub fn monomial(x: SparseMatrix<F>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(x.rows(), order);
        if k <= order {
            s.coeffs[k] = x;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].rows()
    }

    pub fn coeff(&self, k: usize) -> &SparseMatrix<F> {
        &self.coeffs[k]
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.order != o.order {
            return Err(Error::Dimension(format!("series orders {} and {}", self.order, o.order)));
        }
        if self.dim() != o.dim() {
            return Err(Error::Dimension(format!("series dimensions {} and {}", self.dim(), o.dim())));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect();
        Ok(TruncatedSeries { order: self.order, coeffs })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect();
        Ok(TruncatedSeries { order: self.order, coeffs })
    }

    pub fn scale(&self, c: &F) -> Self {
        TruncatedSeries { order: self.order, coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// Product truncated after ħ^order.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.dim();
        let mut coeffs = vec![SparseMatrix::zeros(n, n); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(self.order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(TruncatedSeries { order: self.order, coeffs })
    }

    /// Conjugates every coefficient: `P * c * Q`.
    pub fn sandwich(&self, p: &SparseMatrix<F>, q: &SparseMatrix<F>) -> Self {
        TruncatedSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| p.mul(c).mul(q)).collect() }
    }

    /// Inverse; the constant term must be invertible.
    pub fn inverse(&self) -> Result<Self> {
        let a0_inv = self.coeffs[0].inverse()?;
        let n = self.dim();
        let mut out = vec![SparseMatrix::zeros(n, n); self.order + 1];
        out[0] = a0_inv.clone();
        for k in 1..=self.order {
            let mut acc = SparseMatrix::zeros(n, n);
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = a0_inv.mul(&acc).neg();
        }
        Ok(TruncatedSeries { order: self.order, coeffs: out })
    }

    /// `exp` of a series with vanishing constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Invalid("exponential argument has an ħ^0 term".into()));
        }
        let n = self.dim();
        let mut acc = Self::identity(n, self.order);
        let mut power = Self::identity(n, self.order);
        for j in 1..=self.order {
            power = power.mul(self)?;
            let inv_fact = F::from_i64((1..=j as i64).product()).inv()?;
            acc = acc.add(&power.scale(&inv_fact))?;
        }
        Ok(acc)
    }

    /// Lowest ħ-degree with a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

/// `exp(ħ^k X)` truncated after ħ^order; `k = 0` is rejected.
pub fn series_exp<F: Field>(x: &SparseMatrix<F>, k: usize, order: usize) -> Result<TruncatedSeries<F>> {
    if k == 0 {
        return Err(Error::Invalid("exponential argument has an ħ^0 term".into()));
    }
    TruncatedSeries::monomial(x.clone(), k, order).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, Rational};

    fn m(v: &[&[i64]]) -> SparseMatrix<Rational> {
        SparseMatrix::from_dense(v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let e = series_exp(&SparseMatrix::<Rational>::zeros(2, 2), 1, 3).unwrap();
        assert_eq!(e, TruncatedSeries::identity(2, 3));
    }

    #[test]
    fn exp_inverse_identity() {
        let x = m(&[&[1, 2], &[3, 4]]);
        let a = series_exp(&x, 1, 2).unwrap();
        let b = series_exp(&x.neg(), 1, 2).unwrap();
        assert_eq!(a.mul(&b).unwrap(), TruncatedSeries::identity(2, 2));
        assert_eq!(a.inverse().unwrap(), b);
    }

    #[test]
    fn first_order_product() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        let one = TruncatedSeries::identity(2, 2);
        let x = one.add(&TruncatedSeries::monomial(a.clone(), 1, 2)).unwrap();
        let y = one.add(&TruncatedSeries::monomial(b.clone(), 1, 2)).unwrap();
        let p = x.mul(&y).unwrap();
        assert_eq!(p.coeff(1), &a.add(&b));
        assert_eq!(p.coeff(2), &a.mul(&b));
    }

    #[test]
    fn exp_rejects_constant_term() {
        assert!(series_exp(&SparseMatrix::<Rational>::identity(2), 0, 2).is_err());
        assert!(TruncatedSeries::<Rational>::identity(2, 2).exp().is_err());
    }
}
