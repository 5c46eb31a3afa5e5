//! Labelled diagrams, Coxeter labels from Cartan matrices and braid-relation checks.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Field, QMat, Rational, SparseMatrix};
use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// Coxeter label `m_ij`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum CoxeterLabel {
    Finite(u32),
    Infinity,
}

impl CoxeterLabel {
    pub fn finite(self) -> Option<u32> {
        match self {
            CoxeterLabel::Finite(m) => Some(m),
            CoxeterLabel::Infinity => None,
        }
    }
}

impl fmt::Display for CoxeterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterLabel::Finite(m) => write!(f, "{m}"),
            CoxeterLabel::Infinity => write!(f, "inf"),
        }
    }
}

/// Diagram with labels `m_ij` on all pairs; non-edges carry 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledDiagram {
    pub diagram: Diagram,
    labels: BTreeMap<(usize, usize), CoxeterLabel>,
}

impl LabelledDiagram {
    /// Labels on edges; every edge needs a label other than 2.
    pub fn new(diagram: Diagram, edge_labels: &[((usize, usize), CoxeterLabel)]) -> Result<Self> {
        let mut labels = BTreeMap::new();
        for &((a, b), m) in edge_labels {
            let key = (a.min(b), a.max(b));
            if !diagram.adjacent(a, b) {
                return Err(Error::Invalid(format!("label on non-edge ({a},{b})")));
            }
            if matches!(m, CoxeterLabel::Finite(k) if k < 3) {
                return Err(Error::Invalid(format!("edge ({a},{b}) needs a label of at least 3")));
            }
            if labels.insert(key, m).is_some_and(|old| old != m) {
                return Err(Error::Invalid(format!("conflicting labels on ({a},{b})")));
            }
        }
        if let Some((a, b)) = diagram.edges().into_iter().find(|e| !labels.contains_key(e)) {
            return Err(Error::Invalid(format!("edge ({a},{b}) is unlabelled")));
        }
        Ok(LabelledDiagram { diagram, labels })
    }

    pub fn rank(&self) -> usize {
        self.diagram.vertex_count()
    }

    pub fn label(&self, i: usize, j: usize) -> CoxeterLabel {
        if i == j {
            return CoxeterLabel::Finite(1);
        }
        self.labels.get(&(i.min(j), i.max(j))).copied().unwrap_or(CoxeterLabel::Finite(2))
    }
}

/// Checks the generalized Cartan matrix axioms.
pub fn check_gcm(a: &[Vec<i64>]) -> Result<()> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Dimension(format!("row {i} has length {}, expected {n}", row.len())));
        }
        if row[i] != 2 {
            return Err(Error::Invalid(format!("diagonal entry a[{i}][{i}] = {} is not 2", row[i])));
        }
        for j in 0..n {
            if i != j && (row[j] > 0 || (row[j] == 0) != (a[j][i] == 0)) {
                return Err(Error::Invalid(format!("entries a[{i}][{j}], a[{j}][{i}] violate the GCM axioms")));
            }
        }
    }
    Ok(())
}

/// Order of `s_i s_j` acting on `span(α_i, α_j)`.
pub fn rank2_order(aij: i64, aji: i64) -> CoxeterLabel {
    let si = QMat::from_dense(vec![vec![rat(-1), rat(-aij)], vec![rat(0), rat(1)]]);
    let sj = QMat::from_dense(vec![vec![rat(1), rat(0)], vec![rat(-aji), rat(-1)]]);
    let p = si.mul(&sj);
    let mut acc = p.clone();
    for k in 1..=12u32 {
        if acc.is_identity() {
            return CoxeterLabel::Finite(k);
        }
        acc = acc.mul(&p);
    }
    CoxeterLabel::Infinity
}

/// Coxeter labels `m_ij` (orders of `s_i s_j`) of a generalized Cartan matrix.
pub fn coxeter_labels_from_gcm(a: &[Vec<i64>]) -> Result<LabelledDiagram> {
    check_gcm(a)?;
    let n = a.len();
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a[i][j] != 0 {
                edges.push((i, j));
                labels.push(((i, j), rank2_order(a[i][j], a[j][i])));
            }
        }
    }
    LabelledDiagram::new(Diagram::new(n, &edges)?, &labels)
}

/// Word in the generators `S_i^{±1}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BraidWord(pub Vec<(usize, i8)>);

impl BraidWord {
    pub fn positive(gens: &[usize]) -> Self {
        BraidWord(gens.iter().map(|&g| (g, 1)).collect())
    }

    pub fn inverse(&self) -> Self {
        BraidWord(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    /// Alternating word `i j i ...` of length `m`.
    pub fn alternating(i: usize, j: usize, m: u32) -> Self {
        BraidWord((0..m).map(|k| (if k % 2 == 0 { i } else { j }, 1)).collect())
    }
}

/// Generator matrices with lazily computed inverses.
#[derive(Debug)]
pub struct BraidRep<F: Field> {
    gens: Vec<SparseMatrix<F>>,
    inverses: Vec<OnceLock<Result<SparseMatrix<F>>>>,
}

impl<F: Field> BraidRep<F> {
    pub fn new(gens: Vec<SparseMatrix<F>>) -> Result<Self> {
        if let Some(d) = gens.first().map(|g| g.rows()) {
            if gens.iter().any(|g| g.rows() != d || g.cols() != d) {
                return Err(Error::Dimension("generators must be square of equal size".into()));
            }
        }
        let inverses = gens.iter().map(|_| OnceLock::new()).collect();
        Ok(BraidRep { gens, inverses })
    }

    pub fn dim(&self) -> usize {
        self.gens.first().map_or(0, |g| g.rows())
    }

    pub fn generator(&self, i: usize) -> &SparseMatrix<F> {
        &self.gens[i]
    }

    pub fn generators(&self) -> &[SparseMatrix<F>] {
        &self.gens
    }

    pub fn inverse(&self, i: usize) -> Result<&SparseMatrix<F>> {
        self.inverses[i].get_or_init(|| self.gens[i].inverse()).as_ref().map_err(|e| e.clone())
    }

    /// Ordered product of the word's letters.
    pub fn evaluate_word(&self, w: &BraidWord) -> Result<SparseMatrix<F>> {
        let mut acc = SparseMatrix::identity(self.dim());
        for &(g, e) in &w.0 {
            if g >= self.gens.len() {
                return Err(Error::Invalid(format!("generator {g} out of range")));
            }
            let m = if e > 0 { &self.gens[g] } else { self.inverse(g)? };
            acc = acc.mul(m);
        }
        Ok(acc)
    }
}

/// Outcome of a braid-relation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidCheck<F> {
    pub holds: bool,
    /// `S_i S_j ... - S_j S_i ...` when the relation fails.
    pub difference: Option<SparseMatrix<F>>,
}

/// Compares the alternating products of length `m` starting with `i` and with `j`.
pub fn verify_braid_relation<F: Field>(rho: &BraidRep<F>, i: usize, j: usize, m: CoxeterLabel) -> Result<BraidCheck<F>> {
    let m = m.finite().ok_or_else(|| Error::Invalid("m = inf imposes no relation".into()))?;
    let lhs = rho.evaluate_word(&BraidWord::alternating(i, j, m))?;
    let rhs = rho.evaluate_word(&BraidWord::alternating(j, i, m))?;
    let holds = lhs == rhs;
    Ok(BraidCheck { holds, difference: (!holds).then(|| lhs.sub(&rhs)) })
}

/// Verifies every finite relation of a labelled diagram; returns failing pairs.
pub fn verify_all_braid_relations<F: Field>(rho: &BraidRep<F>, labels: &LabelledDiagram) -> Result<Vec<(usize, usize)>> {
    let n = labels.rank();
    let mut failed = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if let CoxeterLabel::Finite(_) = labels.label(i, j) {
                if !verify_braid_relation(rho, i, j, labels.label(i, j))?.holds {
                    failed.push((i, j));
                }
            }
        }
    }
    Ok(failed)
}

/// Reflection representation of the Weyl group of `A` on the root lattice.
pub fn reflection_rep(a: &[Vec<i64>]) -> Result<BraidRep<Rational>> {
    check_gcm(a)?;
    let n = a.len();
    let gens = (0..n)
        .map(|i| {
            let mut s = QMat::identity(n);
            for j in 0..n {
                s.add_at(i, j, &rat(-a[i][j]));
            }
            s
        })
        .collect();
    BraidRep::new(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank2_table() {
        let expect = [(0, 0, 2), (-1, -1, 3), (-1, -2, 4), (-2, -1, 4), (-1, -3, 6), (-3, -1, 6)];
        for (a, b, m) in expect {
            assert_eq!(rank2_order(a, b), CoxeterLabel::Finite(m));
        }
        assert_eq!(rank2_order(-2, -2), CoxeterLabel::Infinity);
        assert_eq!(rank2_order(-1, -4), CoxeterLabel::Infinity);
    }

    #[test]
    fn labels_from_gcm() {
        let l = coxeter_labels_from_gcm(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]).unwrap();
        assert_eq!(l.label(0, 1), CoxeterLabel::Finite(3));
        assert_eq!(l.label(1, 2), CoxeterLabel::Finite(4));
        assert_eq!(l.label(0, 2), CoxeterLabel::Finite(2));
        assert!(coxeter_labels_from_gcm(&[vec![2, -1], vec![0, 2]]).is_err());
        assert!(coxeter_labels_from_gcm(&[vec![2, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn s3_permutation_matrices() {
        let p = |v: [[i64; 3]; 3]| QMat::from_dense(v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect());
        let rho = BraidRep::new(vec![
            p([[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
            p([[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
        ])
        .unwrap();
        assert!(verify_braid_relation(&rho, 0, 1, CoxeterLabel::Finite(3)).unwrap().holds);
        assert!(verify_braid_relation(&rho, 1, 0, CoxeterLabel::Finite(3)).unwrap().holds);
        let fail = verify_braid_relation(&rho, 0, 1, CoxeterLabel::Finite(2)).unwrap();
        assert!(!fail.holds && fail.difference.is_some());
        assert!(verify_braid_relation(&rho, 0, 1, CoxeterLabel::Infinity).is_err());
    }

    #[test]
    fn word_evaluation() {
        let rho = reflection_rep(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert!(rho.evaluate_word(&BraidWord::default()).unwrap().is_identity());
        assert!(rho.evaluate_word(&BraidWord(vec![(0, 1), (0, -1)])).unwrap().is_identity());
        let w0 = rho.evaluate_word(&BraidWord::positive(&[0, 1, 0])).unwrap();
        assert_eq!(w0, QMat::scalar(2, rat(-1)).mul(&QMat::from_dense(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]])));
    }

    #[test]
    fn singular_generator_errors() {
        let rho = BraidRep::new(vec![QMat::zeros(2, 2)]).unwrap();
        assert!(rho.evaluate_word(&BraidWord(vec![(0, -1)])).is_err());
    }
}
