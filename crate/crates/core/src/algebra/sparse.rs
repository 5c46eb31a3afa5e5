use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Sparse matrix over an exact field. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), F>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.entries.insert((i, i), c.clone());
            }
        }
        m
    }

    pub fn diagonal(d: Vec<F>) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, c) in d.into_iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, usize, F)>>(rows: usize, cols: usize, it: I) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, j, x) in it {
            m.add_at(i, j, &x);
        }
        m
    }

    /// Column vector.
    pub fn column(v: Vec<F>) -> Self {
        let n = v.len();
        Self::from_entries(n, 1, v.into_iter().enumerate().map(|(i, x)| (i, 0, x)))
    }

    /// Standard basis column vector `e_k` in dimension `n`.
    pub fn unit(n: usize, k: usize) -> Self {
        Self::from_entries(n, 1, [(k, 0, F::one())])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    pub fn get_ref(&self, i: usize, j: usize) -> Option<&F> {
        self.entries.get(&(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds {}x{}", self.rows, self.cols);
        if x.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), x);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &F) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds {}x{}", self.rows, self.cols);
        if x.is_zero() {
            return;
        }
        match self.entries.get_mut(&(i, j)) {
            Some(y) => {
                let s = y.add(x);
                if s.is_zero() {
                    self.entries.remove(&(i, j));
                } else {
                    *y = s;
                }
            }
            None => {
                self.entries.insert((i, j), x.clone());
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.entries.iter().map(|(&(i, j), x)| (i, j, x))
    }

    /// Nonzero entries `(col, value)` of row `i`.
    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, F)> + '_ {
        self.entries.range((i, 0)..(i + 1, 0)).map(|(&(_, j), x)| (j, x.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.entries.len() == self.rows && self.entries.iter().all(|(&(i, j), x)| i == j && x.is_one())
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols]; self.rows];
        for (&(i, j), x) in &self.entries {
            out[i][j] = x.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), x)| ((j, i), x.clone())).collect(),
        }
    }

    pub fn map<G: Field, M: Fn(&F) -> G>(&self, f: M) -> SparseMatrix<G> {
        SparseMatrix::from_entries(self.rows, self.cols, self.entries.iter().map(|(&(i, j), x)| (i, j, f(x))))
    }

    pub fn try_map<G: Field, M: Fn(&F) -> Result<G>>(&self, f: M) -> Result<SparseMatrix<G>> {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for (&(i, j), x) in &self.entries {
            out.set(i, j, f(x)?);
        }
        Ok(out)
    }

    fn check_same(&self, o: &Self, what: &str) {
        assert!(
            self.rows == o.rows && self.cols == o.cols,
            "{what}: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            o.rows,
            o.cols
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_same(o, "add");
        let mut out = self.clone();
        for (&(i, j), x) in &o.entries {
            out.add_at(i, j, x);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_same(o, "sub");
        let mut out = self.clone();
        for (&(i, j), x) in &o.entries {
            out.add_at(i, j, &x.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "mul: {}x{} by {}x{}", self.rows, self.cols, o.rows, o.cols);
        let mut orows: Vec<Vec<(usize, &F)>> = vec![Vec::new(); o.rows];
        for (&(k, j), x) in &o.entries {
            orows[k].push((j, x));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        let mut current = None;
        let flush = |row: usize, acc: &mut BTreeMap<usize, F>, out: &mut Self| {
            for (j, x) in std::mem::take(acc) {
                if !x.is_zero() {
                    out.entries.insert((row, j), x);
                }
            }
        };
        for (&(i, k), a) in &self.entries {
            if current != Some(i) {
                if let Some(r) = current {
                    flush(r, &mut acc, &mut out);
                }
                current = Some(i);
            }
            for &(j, b) in &orows[k] {
                let p = a.mul(b);
                match acc.get_mut(&j) {
                    Some(y) => *y = y.add(&p),
                    None => {
                        acc.insert(j, p);
                    }
                }
            }
        }
        if let Some(r) = current {
            flush(r, &mut acc, &mut out);
        }
        out
    }

    /// `self * o - o * self`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product; index of `(a, b)` is `a * other.dim + b`.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for (&(i, j), x) in &self.entries {
            for (&(k, l), y) in &o.entries {
                out.entries.insert((i * o.rows + k, j * o.cols + l), x.mul(y));
            }
        }
        out
    }

    pub fn trace(&self) -> F {
        self.entries.iter().filter(|(&(i, j), _)| i == j).fold(F::zero(), |acc, (_, x)| acc.add(x))
    }

    /// Submatrix with the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                if let Some(x) = self.entries.get(&(i, j)) {
                    out.entries.insert((a, b), x.clone());
                }
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, &[j])
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[Self]) -> Self {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let mut out = Self::zeros(rows, blocks.iter().map(|b| b.cols).sum());
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for (&(i, j), x) in &b.entries {
                out.entries.insert((i, j + off), x.clone());
            }
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[Self]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut out = Self::zeros(blocks.iter().map(|b| b.rows).sum(), cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            for (&(i, j), x) in &b.entries {
                out.entries.insert((i + off, j), x.clone());
            }
            off += b.rows;
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows + o.rows, self.cols + o.cols);
        out.entries.extend(self.entries.iter().map(|(&k, x)| (k, x.clone())));
        out.entries.extend(o.entries.iter().map(|(&(i, j), x)| ((i + self.rows, j + self.cols), x.clone())));
        out
    }

    /// Flattens column-major into a column vector (entry `(i, j)` at `j * rows + i`).
    pub fn vectorize(&self) -> Self {
        let n = self.rows;
        Self::from_entries(self.rows * self.cols, 1, self.entries.iter().map(|(&(i, j), x)| (j * n + i, 0, x.clone())))
    }

    pub fn unvectorize(v: &Self, rows: usize, cols: usize) -> Self {
        assert_eq!(v.rows, rows * cols);
        Self::from_entries(rows, cols, v.entries.iter().map(|(&(k, _), x)| (k % rows, k / rows, x.clone())))
    }

    /// Exact inverse via Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let sol = super::solve::solve_linear(self, &Self::identity(self.rows))?;
        if sol.rank < self.rows {
            return Err(Error::Singular);
        }
        sol.particular.ok_or(Error::Singular)
    }

    pub fn rank(&self) -> usize {
        super::solve::rank(self)
    }

    /// Position of the first entry where `self` and `o` differ.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize, F, F)> {
        let d = self.sub(o);
        d.entries.iter().next().map(|(&(i, j), _)| (i, j, self.get(i, j), o.get(i, j)))
    }
}

impl<F: Field> fmt::Display for SparseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Identity-padded operator acting on tensor factor `leg` of a product of spaces with dimensions `dims`.
pub fn on_leg<F: Field>(op: &SparseMatrix<F>, leg: usize, dims: &[usize]) -> SparseMatrix<F> {
    let before: usize = dims[..leg].iter().product();
    let after: usize = dims[leg + 1..].iter().product();
    SparseMatrix::identity(before).kron(op).kron(&SparseMatrix::identity(after))
}

/// Permutation matrix `e_{a} (x) e_{b} -> e_{b} (x) e_{a}` from `V (x) W` to `W (x) V`.
pub fn flip<F: Field>(dv: usize, dw: usize) -> SparseMatrix<F> {
    let mut p = SparseMatrix::zeros(dv * dw, dv * dw);
    for a in 0..dv {
        for b in 0..dw {
            p.set(b * dv + a, a * dw + b, F::one());
        }
    }
    p
}

/// Matrix of the tensor-leg permutation sending factor `k` of the source to position `perm[k]`.
pub fn permute_legs<F: Field>(dims: &[usize], perm: &[usize]) -> SparseMatrix<F> {
    let n = dims.len();
    assert_eq!(perm.len(), n);
    let total: usize = dims.iter().product();
    let mut target_dims = vec![0; n];
    for k in 0..n {
        target_dims[perm[k]] = dims[k];
    }
    let mut p = SparseMatrix::zeros(total, total);
    let mut idx = vec![0usize; n];
    for src in 0..total {
        let mut r = src;
        for k in (0..n).rev() {
            idx[k] = r % dims[k];
            r /= dims[k];
        }
        let mut tgt = 0;
        let mut tidx = vec![0usize; n];
        for k in 0..n {
            tidx[perm[k]] = idx[k];
        }
        for k in 0..n {
            tgt = tgt * target_dims[k] + tidx[k];
        }
        p.set(tgt, src, F::one());
    }
    p
}
