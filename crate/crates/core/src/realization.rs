//! Realizations of a matrix, their morphisms, symmetrizers, invariant forms
//! and the Cartan-diagrammatic test.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::algebra::{determinant, rat, solve_linear, Field, QMat, Rational, SparseMatrix, Subspace};
use crate::diagram::{Diagram, VSet};
use crate::error::{Error, Result};

/// Matrix from integer rows.
pub fn int_matrix(rows: &[Vec<i64>]) -> QMat {
    QMat::from_dense(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
}

/// Integer entries of a matrix, if all entries are integral.
pub fn to_int_matrix(a: &QMat) -> Option<Vec<Vec<i64>>> {
    a.to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.is_integer().then(|| x.to_integer().try_into().ok()).flatten()).collect())
        .collect()
}

/// Diagram with an edge `i - j` whenever `a_ij` or `a_ji` is nonzero.
pub fn diagram_of(a: &QMat) -> Result<Diagram> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("matrix is {}x{}", a.rows(), a.cols())));
    }
    let n = a.rows();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !a.get(i, j).is_zero() || !a.get(j, i).is_zero() {
                edges.push((i, j));
            }
        }
    }
    Diagram::new(n, &edges)
}

/// Principal submatrix on the vertex set `b`.
pub fn principal(a: &QMat, b: VSet) -> QMat {
    let idx: Vec<usize> = b.vertices().collect();
    a.select(&idx, &idx)
}

/// Triple `(V, Π, Π^∨)`: coroots are the columns of `coroots` (`dim × n`),
/// roots are the rows of `roots` (`n × dim`), with `α_i(h_j) = a_ji`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub a: QMat,
    pub coroots: QMat,
    pub roots: QMat,
}

impl Realization {
    pub fn new(a: QMat, coroots: QMat, roots: QMat) -> Result<Self> {
        let r = Realization { a, coroots, roots };
        r.check()?;
        Ok(r)
    }

    pub fn rank(&self) -> usize {
        self.a.rows()
    }

    pub fn dim(&self) -> usize {
        self.coroots.rows()
    }

    /// Verifies all realization invariants.
    pub fn check(&self) -> Result<()> {
        let n = self.a.rows();
        if !self.a.is_square() || self.coroots.cols() != n || self.roots.rows() != n || self.roots.cols() != self.dim() {
            return Err(Error::Dimension("realization data has inconsistent shapes".into()));
        }
        if self.coroots.rank() != n {
            return Err(Error::Invalid("coroots are linearly dependent".into()));
        }
        if self.roots.rank() != n {
            return Err(Error::Invalid("roots are linearly dependent".into()));
        }
        if self.roots.mul(&self.coroots) != self.a.transpose() {
            return Err(Error::Invalid("pairing α_i(h_j) differs from a_ji".into()));
        }
        if self.dim() + self.a.rank() < 2 * n {
            return Err(Error::Invalid("dimension below 2n - rank(A)".into()));
        }
        Ok(())
    }

    pub fn is_minimal(&self) -> bool {
        self.dim() + self.a.rank() == 2 * self.rank()
    }

    /// Dual realization `(V*, Π^∨, Π)` of the transposed matrix.
    pub fn transpose(&self) -> Realization {
        Realization { a: self.a.transpose(), coroots: self.roots.transpose(), roots: self.coroots.transpose() }
    }

    /// Realization on `V ⊕ k^extra` with the new directions in the kernel of every root.
    pub fn with_null_dims(&self, extra: usize) -> Realization {
        let n = self.rank();
        Realization {
            a: self.a.clone(),
            coroots: SparseMatrix::vstack(&[self.coroots.clone(), QMat::zeros(extra, n)]),
            roots: SparseMatrix::hstack(&[self.roots.clone(), QMat::zeros(n, extra)]),
        }
    }

    /// Transport along an invertible change of basis `P` of `V`.
    pub fn with_basis_change(&self, p: &QMat) -> Result<Realization> {
        let pinv = p.inverse()?;
        Realization::new(self.a.clone(), p.mul(&self.coroots), self.roots.mul(&pinv))
    }

    /// Splits `V = U ⊕ U⁰` with `U` a minimal subrealization and `U⁰ ⊆ Π^⊥`.
    /// Returns bases of `U` and `U⁰` as columns.
    pub fn split_minimal(&self) -> (QMat, QMat) {
        let n = self.rank();
        let d = self.dim();
        let mut u = self.coroots.clone();
        let mut k = 0;
        while self.roots.mul(&u).rank() < n {
            let cand = SparseMatrix::hstack(&[u.clone(), QMat::unit(d, k)]);
            if self.roots.mul(&cand).rank() > self.roots.mul(&u).rank() {
                u = cand;
            }
            k += 1;
        }
        let mut null = QMat::zeros(d, 0);
        for v in crate::algebra::nullspace(&self.roots) {
            let cand = SparseMatrix::hstack(&[u.clone(), null.clone(), v.clone()]);
            if cand.rank() == u.cols() + null.cols() + 1 {
                null = SparseMatrix::hstack(&[null, v]);
            }
        }
        (u, null)
    }
}

/// Minimal realization: coroots are the first `n` basis vectors and roots are
/// `[Aᵀ | X]` with `X` built from unit columns chosen greedily.
pub fn minimal_realization(a: &QMat) -> Result<Realization> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("matrix is {}x{}", a.rows(), a.cols())));
    }
    let n = a.rows();
    let r = a.rank();
    let mut roots = a.transpose();
    let mut k = 0;
    while roots.cols() < 2 * n - r {
        let cand = SparseMatrix::hstack(&[roots.clone(), QMat::unit(n, k)]);
        if cand.rank() > roots.rank() {
            roots = cand;
        }
        k += 1;
    }
    let coroots = SparseMatrix::vstack(&[QMat::identity(n), QMat::zeros(n - r, n)]);
    Realization::new(a.clone(), coroots, roots)
}

/// Canonical realization on `k^{2n}` with basis `h_1..h_n, λ_1..λ_n` and `α_i(λ_j) = δ_ij`.
pub fn canonical_realization(a: &QMat) -> Result<Realization> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("matrix is {}x{}", a.rows(), a.cols())));
    }
    let n = a.rows();
    let coroots = SparseMatrix::vstack(&[QMat::identity(n), QMat::zeros(n, n)]);
    let roots = SparseMatrix::hstack(&[a.transpose(), QMat::identity(n)]);
    Realization::new(a.clone(), coroots, roots)
}

/// Morphism `T: V_1 → V_2` with `T h_{1,i} = h_{2,i}` and `α_{2,i} ∘ T = α_{1,i}`.
pub fn is_morphism(v1: &Realization, v2: &Realization, t: &QMat) -> bool {
    v1.a == v2.a
        && t.rows() == v2.dim()
        && t.cols() == v1.dim()
        && t.mul(&v1.coroots) == v2.coroots
        && v2.roots.mul(t) == v1.roots
}

/// A morphism of realizations together with a basis of the translation space.
#[derive(Clone, Debug)]
pub struct MorphismSpace {
    pub particular: QMat,
    pub translations: Vec<QMat>,
}

impl MorphismSpace {
    pub fn dim(&self) -> usize {
        self.translations.len()
    }
}

/// Solves the morphism equations; the translation space is `Hom(V_1/V_1', Π_2^⊥)`.
pub fn morphism_space(v1: &Realization, v2: &Realization) -> Result<MorphismSpace> {
    if v1.a != v2.a {
        return Err(Error::Invalid("realizations of different matrices".into()));
    }
    let (n, d1, d2) = (v1.rank(), v1.dim(), v2.dim());
    let var = |a: usize, b: usize| a * d1 + b;
    let rows = d2 * n + n * d1;
    let mut m = QMat::zeros(rows, d2 * d1);
    let mut rhs = QMat::zeros(rows, 1);
    let mut eq = 0;
    for a in 0..d2 {
        for j in 0..n {
            for (b, jj, x) in v1.coroots.iter() {
                if jj == j {
                    m.add_at(eq, var(a, b), x);
                }
            }
            rhs.set(eq, 0, v2.coroots.get(a, j));
            eq += 1;
        }
    }
    for i in 0..n {
        for b in 0..d1 {
            for (ii, a, x) in v2.roots.iter() {
                if ii == i {
                    m.add_at(eq, var(a, b), x);
                }
            }
            rhs.set(eq, 0, v1.roots.get(i, b));
            eq += 1;
        }
    }
    let sol = solve_linear(&m, &rhs)?;
    let unvec = |v: &QMat| QMat::from_entries(d2, d1, v.iter().map(|(k, _, x)| (k / d1, k % d1, x.clone())));
    let particular = sol.particular.as_ref().map(unvec).ok_or_else(|| Error::NotFound("no morphism".into()))?;
    Ok(MorphismSpace { particular, translations: sol.kernel.iter().map(unvec).collect() })
}

fn gcd_int(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    a.gcd(b)
}

/// Diagonal `D` with `AD` symmetric (`a_ij d_j = a_ji d_i`), normalized on each
/// indecomposable block to positive coprime integers when possible.
pub fn symmetrizer(a: &QMat) -> Result<Vec<Rational>> {
    let diag = diagram_of(a)?;
    let n = a.rows();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for comp in diag.connected_components(diag.all()) {
        let root = comp.min_vertex().expect("nonempty");
        d[root] = Some(Rational::one());
        let mut queue = vec![root];
        while let Some(i) = queue.pop() {
            let di = d[i].clone().expect("visited");
            for j in comp.vertices() {
                let (aij, aji) = (a.get(i, j), a.get(j, i));
                if i == j || (aij.is_zero() && aji.is_zero()) {
                    continue;
                }
                if aij.is_zero() || aji.is_zero() {
                    return Err(Error::NotSymmetrizable(format!(
                        "a[{i}][{j}] = {aij} and a[{j}][{i}] = {aji} are not both zero or both nonzero"
                    )));
                }
                let dj = &di * &aji / &aij;
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push(j);
                    }
                    Some(old) if *old != dj => {
                        return Err(Error::NotSymmetrizable(format!(
                            "cycle through vertices {i} and {j} forces d_{j} = {old} and d_{j} = {dj}"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let vals: Vec<Rational> = comp.vertices().map(|v| d[v].clone().expect("visited")).collect();
        let lcm_den = vals.iter().fold(num_bigint::BigInt::from(1), |l, x| l.lcm(x.denom()));
        let gcd_num = vals.iter().fold(num_bigint::BigInt::from(0), |g, x| gcd_int(&g, &(x.numer() * &lcm_den / x.denom())));
        let mut scale = Rational::new(lcm_den, gcd_num);
        if vals.iter().all(|x| x.is_negative()) {
            scale = -scale;
        }
        for v in comp.vertices() {
            d[v] = d[v].take().map(|x| x * &scale);
        }
    }
    Ok(d.into_iter().map(|x| x.expect("all vertices visited")).collect())
}

/// Symmetric form on `V` with `⟨h_i, ·⟩ = d_i α_i`, nondegenerate.
///
/// Uses the explicit formula on the canonical basis when `V` is canonical,
/// otherwise searches the affine space of solutions.
pub fn invariant_form(v: &Realization, d: &[Rational]) -> Result<QMat> {
    let n = v.rank();
    if d.len() != n {
        return Err(Error::Dimension(format!("{} symmetrizer entries for rank {n}", d.len())));
    }
    let ad = v.a.mul(&QMat::diagonal(d.to_vec()));
    if ad != ad.transpose() {
        return Err(Error::NotSymmetrizable("AD is not symmetric".into()));
    }
    if let Ok(c) = canonical_realization(&v.a) {
        if c == *v {
            let mut g = QMat::zeros(2 * n, 2 * n);
            for i in 0..n {
                for j in 0..n {
                    g.set(i, j, &d[i] * &v.a.get(j, i));
                }
                g.set(i, n + i, d[i].clone());
                g.set(n + i, i, d[i].clone());
            }
            return Ok(g);
        }
    }
    let dim = v.dim();
    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|a| (a..dim).map(move |b| (a, b))).collect();
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let var = |a: usize, b: usize| index[&(a.min(b), a.max(b))];
    let mut m = QMat::zeros(dim * n, pairs.len());
    let mut rhs = QMat::zeros(dim * n, 1);
    for a in 0..dim {
        for i in 0..n {
            let row = a * n + i;
            for (b, ii, x) in v.coroots.iter() {
                if ii == i {
                    m.add_at(row, var(a, b), x);
                }
            }
            rhs.set(row, 0, &d[i] * &v.roots.get(i, a));
        }
    }
    let sol = solve_linear(&m, &rhs)?;
    let base = sol.particular.ok_or_else(|| Error::Invalid("no symmetric form with ⟨h_i, ·⟩ = d_i α_i".into()))?;
    let to_form = |x: &QMat| {
        let mut g = QMat::zeros(dim, dim);
        for (k, &(a, b)) in pairs.iter().enumerate() {
            let y = x.get(k, 0);
            g.set(a, b, y.clone());
            g.set(b, a, y);
        }
        g
    };
    let g0 = to_form(&base);
    if g0.rank() == dim {
        return Ok(g0);
    }
    let kernel: Vec<QMat> = sol.kernel.iter().map(to_form).collect();
    for round in 1..=6i64 {
        let mut g = g0.clone();
        for (k, x) in kernel.iter().enumerate() {
            g = g.add(&x.scale(&rat((k as i64 * round) % 5 + round)));
            if g.rank() == dim {
                return Ok(g);
            }
        }
    }
    Err(Error::NotFound("no nondegenerate invariant form found".into()))
}

/// Where an upper bound on a Cartan subspace came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BoundSource {
    /// `A_B` is invertible, so `h_B` is the coroot span.
    Forced,
    /// `h_B` lies in `h_C` for the superset `C`.
    Superset(VSet),
    /// `h_B` lies in the kernel of the roots of the orthogonal set.
    Orthogonal(VSet),
}

/// Dimension count showing that no family `{h_B}` exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    /// The subset whose Cartan subspace cannot be chosen.
    pub subset: VSet,
    /// `2|B| - rank(A_B)`.
    pub required_dim: usize,
    /// Dimension of the intersection of all upper bounds.
    pub bound_dim: usize,
    /// Constraints cutting the bound down, in the order applied.
    pub sources: Vec<BoundSource>,
    /// Set when a forced lower bound is not contained in the upper bound instead.
    pub lower_bound_violated: bool,
}

fn label(s: VSet) -> String {
    s.vertices().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join("")
}

impl fmt::Display for ObstructionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sources
            .iter()
            .map(|s| match s {
                BoundSource::Forced => format!("h'_{}", label(self.subset)),
                BoundSource::Superset(c) => format!("h_{}", label(*c)),
                BoundSource::Orthogonal(c) => format!("ker(alpha_{})", label(*c)),
            })
            .collect();
        if self.lower_bound_violated {
            write!(f, "h_{} must contain a forced subspace not inside {}", label(self.subset), parts.join(" ∩ "))
        } else {
            write!(
                f,
                "h_{} needs dim {} but {} has dim {}",
                label(self.subset),
                self.required_dim,
                parts.join(" ∩ "),
                self.bound_dim
            )
        }
    }
}

/// Outcome of the Cartan-diagrammatic test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    DiagrammaticBySufficientCondition,
    Obstructed { witness: ObstructionWitness },
    Undetermined,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::DiagrammaticBySufficientCondition => "diagrammatic_by_sufficient_condition",
            Verdict::Obstructed { .. } => "obstructed",
            Verdict::Undetermined => "undetermined",
        }
    }
}

/// Overall verdict with one verdict per indecomposable block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagrammaticReport {
    pub verdict: Verdict,
    pub components: Vec<(VSet, Verdict)>,
}

/// Decides Cartan-diagrammaticity block by block: the determinant criterion,
/// then propagation of forced subspaces inside the minimal realization.
pub fn cartan_diagrammatic_test(a: &QMat) -> Result<DiagrammaticReport> {
    let diag = diagram_of(a)?;
    if diag.vertex_count() > 16 {
        return Err(Error::Invalid("diagrammatic test supports at most 16 vertices".into()));
    }
    let mut components = Vec::new();
    for comp in diag.connected_components(diag.all()) {
        let sub = principal(a, comp);
        let sub_diag = diagram_of(&sub)?;
        let v = component_verdict(&sub, &sub_diag)?;
        let v = match v {
            Verdict::Obstructed { mut witness } => {
                let lift = |s: VSet| VSet::from_vertices(s.vertices().map(|k| comp.vertices().nth(k).expect("in range")));
                witness.subset = lift(witness.subset);
                for s in &mut witness.sources {
                    match s {
                        BoundSource::Superset(c) | BoundSource::Orthogonal(c) => *c = lift(*c),
                        BoundSource::Forced => {}
                    }
                }
                Verdict::Obstructed { witness }
            }
            other => other,
        };
        components.push((comp, v));
    }
    let verdict = if let Some((_, v)) = components.iter().find(|(_, v)| matches!(v, Verdict::Obstructed { .. })) {
        v.clone()
    } else if components.iter().all(|(_, v)| *v == Verdict::DiagrammaticBySufficientCondition) {
        Verdict::DiagrammaticBySufficientCondition
    } else {
        Verdict::Undetermined
    };
    Ok(DiagrammaticReport { verdict, components })
}

fn component_verdict(a: &QMat, diag: &Diagram) -> Result<Verdict> {
    let n = a.rows();
    let full = diag.all();
    let sufficient = full.subsets().filter(|b| n - b.len() >= 2).all(|b| {
        b.is_empty() || !determinant(&principal(a, b)).expect("square").is_zero()
    });
    if sufficient {
        return Ok(Verdict::DiagrammaticBySufficientCondition);
    }
    let real = minimal_realization(a)?;
    let dim = real.dim();
    let subsets: Vec<VSet> = full.subsets().filter(|b| !b.is_empty()).collect();
    let mut upper: BTreeMap<VSet, Subspace> = BTreeMap::new();
    let mut lower: BTreeMap<VSet, Subspace> = BTreeMap::new();
    let mut sources: BTreeMap<VSet, Vec<BoundSource>> = BTreeMap::new();
    let mut required: BTreeMap<VSet, usize> = BTreeMap::new();
    let all_rows: Vec<usize> = (0..dim).collect();
    for &b in &subsets {
        let idx: Vec<usize> = b.vertices().collect();
        let span = Subspace::span(&real.coroots.select(&all_rows, &idx));
        let r = principal(a, b).rank();
        required.insert(b, 2 * b.len() - r);
        if b == full {
            upper.insert(b, Subspace::full(dim));
            sources.insert(b, Vec::new());
        } else if r == b.len() {
            upper.insert(b, span.clone());
            sources.insert(b, vec![BoundSource::Forced]);
        } else {
            upper.insert(b, Subspace::full(dim));
            sources.insert(b, Vec::new());
        }
        lower.insert(b, span);
    }
    let root_rows = |c: VSet| {
        let idx: Vec<usize> = c.vertices().collect();
        real.roots.select(&idx, &all_rows)
    };
    let witness = |b: VSet, upper: &BTreeMap<VSet, Subspace>, sources: &BTreeMap<VSet, Vec<BoundSource>>, req: usize, lb: bool| {
        ObstructionWitness {
            subset: b,
            required_dim: req,
            bound_dim: upper[&b].dim(),
            sources: sources[&b].clone(),
            lower_bound_violated: lb,
        }
    };
    loop {
        let mut changed = false;
        for &b in &subsets {
            for &c in &subsets {
                let source = if b.is_proper_subset(c) {
                    BoundSource::Superset(c)
                } else if diag.orthogonal(b, c) {
                    BoundSource::Orthogonal(c)
                } else {
                    continue;
                };
                let bound = match source {
                    BoundSource::Superset(_) => upper[&c].clone(),
                    _ => Subspace::annihilator(&root_rows(c)),
                };
                let next = upper[&b].intersect(&bound);
                if next.dim() < upper[&b].dim() {
                    upper.insert(b, next);
                    sources.get_mut(&b).expect("present").push(source);
                    changed = true;
                    if upper[&b].dim() < required[&b] {
                        return Ok(Verdict::Obstructed { witness: witness(b, &upper, &sources, required[&b], false) });
                    }
                }
            }
            if upper[&b].dim() == required[&b] && !lower[&b].same_as(&upper[&b]) {
                if !upper[&b].contains(&lower[&b]) {
                    return Ok(Verdict::Obstructed { witness: witness(b, &upper, &sources, required[&b], true) });
                }
                lower.insert(b, upper[&b].clone());
                changed = true;
            }
            for &c in &subsets {
                if c.is_proper_subset(b) && !lower[&b].contains(&lower[&c]) {
                    let next = lower[&b].sum(&lower[&c]);
                    lower.insert(b, next);
                    changed = true;
                }
            }
            if !upper[&b].contains(&lower[&b]) {
                return Ok(Verdict::Obstructed { witness: witness(b, &upper, &sources, required[&b], true) });
            }
        }
        if !changed {
            return Ok(Verdict::Undetermined);
        }
    }
}

/// Bundled matrices with known obstructions.
pub fn counterexample(k: usize) -> Option<QMat> {
    let rows: Vec<Vec<i64>> = match k {
        1 => vec![vec![2, -1, 0], vec![-1, 0, -1], vec![0, -1, 2]],
        2 => vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]],
        3 => vec![vec![2, -2, 0, 0], vec![-2, 2, -1, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]],
        _ => return None,
    };
    Some(int_matrix(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn vs(v: &[usize]) -> VSet {
        VSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn minimal_dimensions() {
        let a2 = int_matrix(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(minimal_realization(&a2).unwrap().dim(), 2);
        let aff = int_matrix(&[vec![2, -2], vec![-2, 2]]);
        let m = minimal_realization(&aff).unwrap();
        assert_eq!(m.dim(), 3);
        assert!(m.is_minimal());
        let z = QMat::zeros(3, 3);
        let c = canonical_realization(&z).unwrap();
        assert_eq!(c.dim(), 6);
        assert!(c.roots.mul(&c.coroots).is_zero());
    }

    #[test]
    fn morphism_counts() {
        let a2 = int_matrix(&[vec![2, -1], vec![-1, 2]]);
        let m = minimal_realization(&a2).unwrap();
        let s = morphism_space(&m, &m).unwrap();
        assert!(s.particular.is_identity());
        assert_eq!(s.dim(), 0);
        let c = canonical_realization(&a2).unwrap();
        assert_eq!(morphism_space(&c, &m).unwrap().dim(), 0);
        assert_eq!(morphism_space(&m, &c).unwrap().dim(), 0);
        assert_eq!(morphism_space(&c, &c).unwrap().dim(), 4);
    }

    #[test]
    fn transpose_morphism() {
        let aff = int_matrix(&[vec![2, -2], vec![-2, 2]]);
        let m = minimal_realization(&aff).unwrap();
        let c = canonical_realization(&aff).unwrap();
        let t = morphism_space(&c, &m).unwrap().particular;
        assert!(is_morphism(&c, &m, &t));
        assert!(is_morphism(&m.transpose(), &c.transpose(), &t.transpose()));
    }

    #[test]
    fn symmetrizer_examples() {
        let a = int_matrix(&[vec![2, -1], vec![-3, 2]]);
        assert_eq!(symmetrizer(&a).unwrap(), vec![rat(1), rat(3)]);
        let b2 = int_matrix(&[vec![2, -1], vec![-2, 2]]);
        assert_eq!(symmetrizer(&b2).unwrap(), vec![rat(1), rat(2)]);
        let bad = int_matrix(&[vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]]);
        assert!(matches!(symmetrizer(&bad), Err(Error::NotSymmetrizable(_))));
        let d = symmetrizer(&int_matrix(&[vec![2, -2], vec![-3, 2]])).unwrap();
        assert_eq!(d, vec![rat(2), rat(3)]);
        let frac = symmetrizer(&QMat::from_dense(vec![vec![rat(2), ratio(-1, 2)], vec![rat(-1), rat(2)]])).unwrap();
        assert_eq!(frac, vec![rat(1), rat(2)]);
    }

    #[test]
    fn forms_are_invariant() {
        let b2 = int_matrix(&[vec![2, -1], vec![-2, 2]]);
        let d = symmetrizer(&b2).unwrap();
        for v in [minimal_realization(&b2).unwrap(), canonical_realization(&b2).unwrap()] {
            let g = invariant_form(&v, &d).unwrap();
            assert_eq!(g, g.transpose());
            assert_eq!(g.rank(), v.dim());
            assert_eq!(g.mul(&v.coroots), v.roots.transpose().mul(&QMat::diagonal(d.clone())));
        }
    }

    #[test]
    fn counterexample_witnesses() {
        let r = cartan_diagrammatic_test(&counterexample(1).unwrap()).unwrap();
        let Verdict::Obstructed { witness } = r.verdict else { panic!("expected obstruction") };
        assert_eq!((witness.subset, witness.required_dim, witness.bound_dim), (vs(&[1]), 2, 1));
        assert_eq!(witness.sources, vec![BoundSource::Superset(vs(&[0, 1])), BoundSource::Superset(vs(&[1, 2]))]);

        let r = cartan_diagrammatic_test(&counterexample(2).unwrap()).unwrap();
        let Verdict::Obstructed { witness } = r.verdict else { panic!("expected obstruction") };
        assert_eq!((witness.subset, witness.required_dim, witness.bound_dim), (vs(&[1, 2]), 3, 2));

        let r = cartan_diagrammatic_test(&counterexample(3).unwrap()).unwrap();
        let Verdict::Obstructed { witness } = r.verdict else { panic!("expected obstruction") };
        assert_eq!((witness.subset, witness.required_dim, witness.bound_dim), (vs(&[0, 1]), 3, 2));
        assert!(witness.sources.contains(&BoundSource::Orthogonal(vs(&[3]))));
    }

    #[test]
    fn zero_matrix_and_rank_two() {
        let r = cartan_diagrammatic_test(&QMat::zeros(3, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::DiagrammaticBySufficientCondition);
        assert_eq!(r.components.len(), 3);
        let h = int_matrix(&[vec![2, -5], vec![-3, 2]]);
        assert_eq!(cartan_diagrammatic_test(&h).unwrap().verdict, Verdict::DiagrammaticBySufficientCondition);
    }

    #[test]
    fn null_split() {
        let aff = int_matrix(&[vec![2, -2], vec![-2, 2]]);
        let v = minimal_realization(&aff).unwrap().with_null_dims(2);
        v.check().unwrap();
        let (u, null) = v.split_minimal();
        assert_eq!(u.cols(), 3);
        assert_eq!(null.cols(), 2);
        assert!(v.roots.mul(&null).is_zero());
        assert_eq!(SparseMatrix::hstack(&[u, null]).rank(), 5);
    }
}
