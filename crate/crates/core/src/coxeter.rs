//! Coxeter witnesses: lax D-algebras, braid representations indexed by maximal nested sets,
//! and the coproduct axiom as a matrix identity.
//!
//! Restriction functors are the identity on underlying spaces and `Υ`, `α` are trivial,
//! so `S_i^B = S_i` for every subdiagram `B ∋ i`.

use std::collections::BTreeMap;

use crate::algebra::{coordinates, flip, Field, QMat, QScalar, Rational, SparseMatrix};
use crate::bialgebra::tits_operator;
use crate::braid::{verify_braid_relation, BraidRep, CoxeterLabel, LabelledDiagram};
use crate::diagram::{enumerate_nested_sets, Diagram, NestedSet, VSet};
use crate::error::{Error, Result};
use crate::quantum::{coproduct_action, quantum_weyl_operator, rank1_r_matrix, QuantumGroupData, WeightModule};
use crate::report::Check;

/// Finite-dimensional unital algebra by left multiplication matrices of its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdAlgebra<F: Field> {
    /// `left[a]` is `y ↦ x_a y` in coordinates.
    pub left: Vec<SparseMatrix<F>>,
    /// Coordinates of `1`.
    pub unit: SparseMatrix<F>,
}

impl<F: Field> FdAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.left.len()
    }

    /// The ground field.
    pub fn scalars() -> Self {
        FdAlgebra { left: vec![SparseMatrix::identity(1)], unit: SparseMatrix::identity(1) }
    }

    /// Product of two coordinate columns.
    pub fn mul(&self, x: &SparseMatrix<F>, y: &SparseMatrix<F>) -> SparseMatrix<F> {
        let mut acc = SparseMatrix::zeros(self.dim(), 1);
        for (a, _, c) in x.iter() {
            acc = acc.add(&self.left[a].mul(y).scale(c));
        }
        acc
    }
}

/// Subalgebra of `End(V)` generated by operators, with its basis of matrices.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra<F: Field> {
    pub size: usize,
    pub basis: Vec<SparseMatrix<F>>,
    stacked: SparseMatrix<F>,
}

impl<F: Field> MatrixAlgebra<F> {
    /// Span closure of the words in `gens`, starting from the identity.
    pub fn generated_by(size: usize, gens: &[SparseMatrix<F>]) -> Result<Self> {
        if gens.iter().any(|g| g.rows() != size || g.cols() != size) {
            return Err(Error::Dimension(format!("generators must be {size} x {size}")));
        }
        let mut basis = vec![SparseMatrix::identity(size)];
        let mut stacked = basis[0].vectorize();
        let mut next = 0;
        while next < basis.len() {
            let x = basis[next].clone();
            next += 1;
            for g in gens {
                let y = g.mul(&x);
                let candidate = SparseMatrix::hstack(&[stacked.clone(), y.vectorize()]);
                if candidate.rank() > stacked.cols() {
                    stacked = candidate;
                    basis.push(y);
                }
            }
        }
        Ok(MatrixAlgebra { size, basis, stacked })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of matrices in the basis, as columns.
    pub fn coordinates_of(&self, xs: &[SparseMatrix<F>]) -> Result<SparseMatrix<F>> {
        let targets = SparseMatrix::hstack(&xs.iter().map(|x| x.vectorize()).collect::<Vec<_>>());
        coordinates(&self.stacked, &targets)
    }

    /// Structure constants.
    pub fn to_fd(&self) -> Result<FdAlgebra<F>> {
        let left = self
            .basis
            .iter()
            .map(|x| self.coordinates_of(&self.basis.iter().map(|y| x.mul(y)).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>>>()?;
        let unit = self.coordinates_of(&[SparseMatrix::identity(self.size)])?;
        Ok(FdAlgebra { left, unit })
    }
}

/// Per-subdiagram algebras `A_B` with maps `i_{BB'}: A_{B'} → A_B` for `B' ⊆ B`.
#[derive(Clone, Debug)]
pub struct LaxDAlgebra<F: Field> {
    pub diagram: Diagram,
    pub algebras: BTreeMap<VSet, FdAlgebra<F>>,
    pub maps: BTreeMap<(VSet, VSet), SparseMatrix<F>>,
}

impl<F: Field> LaxDAlgebra<F> {
    /// `A_B = k` for every `B`, all maps the identity.
    pub fn constant(diagram: Diagram) -> Self {
        let subsets: Vec<VSet> = diagram.all().subsets().collect();
        let algebras = subsets.iter().map(|&b| (b, FdAlgebra::scalars())).collect();
        let maps = subsets
            .iter()
            .flat_map(|&b| subsets.iter().filter(move |c| c.is_subset(b)).map(move |&c| ((b, c), SparseMatrix::identity(1))))
            .collect();
        LaxDAlgebra { diagram, algebras, maps }
    }

    /// `A_B` generated by `ops[i]`, `i ∈ B`, inside `End(V)`; `i_{BB'}` is the inclusion.
    pub fn from_operators(diagram: Diagram, ops: &[SparseMatrix<F>]) -> Result<Self> {
        if ops.len() != diagram.vertex_count() {
            return Err(Error::Dimension("one operator per vertex is required".into()));
        }
        let size = ops.first().map_or(0, |o| o.rows());
        let mut mats = BTreeMap::new();
        for b in diagram.all().subsets() {
            let gens: Vec<_> = b.vertices().map(|i| ops[i].clone()).collect();
            mats.insert(b, MatrixAlgebra::generated_by(size, &gens)?);
        }
        let mut algebras = BTreeMap::new();
        let mut maps = BTreeMap::new();
        for (&b, ab) in &mats {
            algebras.insert(b, ab.to_fd()?);
            for (&c, ac) in &mats {
                if c.is_subset(b) {
                    maps.insert((b, c), ab.coordinates_of(&ac.basis)?);
                }
            }
        }
        Ok(LaxDAlgebra { diagram, algebras, maps })
    }

    fn map(&self, b: VSet, c: VSet) -> Result<&SparseMatrix<F>> {
        self.maps.get(&(b, c)).ok_or_else(|| Error::Invalid(format!("missing map i_{{{b},{c}}}")))
    }
}

fn is_algebra_morphism<F: Field>(src: &FdAlgebra<F>, dst: &FdAlgebra<F>, m: &SparseMatrix<F>) -> bool {
    if m.rows() != dst.dim() || m.cols() != src.dim() || m.mul(&src.unit) != dst.unit {
        return false;
    }
    (0..src.dim()).all(|a| {
        (0..src.dim()).all(|b| {
            let (xa, xb) = (SparseMatrix::unit(src.dim(), a), SparseMatrix::unit(src.dim(), b));
            m.mul(&src.mul(&xa, &xb)) == dst.mul(&m.mul(&xa), &m.mul(&xb))
        })
    })
}

/// Identity, morphism, transitivity and orthogonal-commutation axioms.
pub fn verify_lax_d_algebra<F: Field>(l: &LaxDAlgebra<F>) -> Result<Vec<Check>> {
    let d = &l.diagram;
    let subsets: Vec<VSet> = d.all().subsets().collect();
    let mut out = Vec::new();
    for &b in &subsets {
        let ab = l.algebras.get(&b).ok_or_else(|| Error::Invalid(format!("missing algebra for {b}")))?;
        out.push(Check::from_bool(format!("identity/{b}"), l.map(b, b)?.is_identity(), || format!("i_BB is not the identity (B = {b})")));
        for &c in subsets.iter().filter(|c| c.is_proper_subset(b)) {
            let ok = is_algebra_morphism(&l.algebras[&c], ab, l.map(b, c)?);
            out.push(Check::from_bool(format!("morphism/{b}⊇{c}"), ok, || format!("i_BB' is not a unital algebra morphism (B = {b}, B' = {c})")));
        }
    }
    for &b in &subsets {
        for &c in subsets.iter().filter(|c| c.is_proper_subset(b)) {
            for &e in subsets.iter().filter(|e| e.is_proper_subset(c)) {
                let ok = l.map(b, c)?.mul(l.map(c, e)?) == *l.map(b, e)?;
                out.push(Check::from_bool(format!("transitivity/{b}⊇{c}⊇{e}"), ok, || {
                    format!("i_BB'∘i_B'B'' ≠ i_BB'' for (B, B', B'') = ({b}, {c}, {e})")
                }));
            }
        }
    }
    for &b in &subsets {
        for &c in subsets.iter().filter(|c| !c.is_empty() && c.is_proper_subset(b)) {
            let e = b.minus(c);
            if c.min_vertex() > e.min_vertex() || !d.orthogonal(c, e) {
                continue;
            }
            let ab = &l.algebras[&b];
            let (ic, ie) = (l.map(b, c)?, l.map(b, e)?);
            let mut bad = None;
            'outer: for x in 0..ic.cols() {
                for y in 0..ie.cols() {
                    let (u, v) = (ic.col(x), ie.col(y));
                    if ab.mul(&u, &v) != ab.mul(&v, &u) {
                        bad = Some((x, y));
                        break 'outer;
                    }
                }
            }
            out.push(Check::from_bool(format!("orthogonal/{b}={c}⊔{e}"), bad.is_none(), || {
                let (x, y) = bad.unwrap_or_default();
                format!("images of basis elements {x} of A_{c} and {y} of A_{e} do not commute in A_{b}; (B, B', B'') = ({b}, {c}, {e})")
            }));
        }
    }
    Ok(out)
}

/// Two orthogonal vertices acting by non-commuting matrices.
pub fn broken_lax_fixture() -> Result<LaxDAlgebra<Rational>> {
    let one = Rational::from_integer(1.into());
    let e = QMat::from_entries(2, 2, [(0, 1, one.clone())]);
    let f = QMat::from_entries(2, 2, [(1, 0, one)]);
    LaxDAlgebra::from_operators(Diagram::new(2, &[])?, &[e, f])
}

/// Labelled diagram with per-vertex operators `S_i` on each module.
#[derive(Clone, Debug)]
pub struct CoxeterWitness<F: Field> {
    pub labels: LabelledDiagram,
    pub modules: Vec<(String, Vec<SparseMatrix<F>>)>,
}

impl<F: Field> CoxeterWitness<F> {
    pub fn new(labels: LabelledDiagram, modules: Vec<(String, Vec<SparseMatrix<F>>)>) -> Result<Self> {
        for (name, ops) in &modules {
            if ops.len() != labels.rank() {
                return Err(Error::Dimension(format!("module {name}: one operator per vertex is required")));
            }
            BraidRep::new(ops.clone())?;
        }
        Ok(CoxeterWitness { labels, modules })
    }

    /// Generalized braid relations on every module.
    pub fn verify_braid(&self) -> Result<Vec<Check>> {
        let n = self.labels.rank();
        let mut out = Vec::new();
        for (name, ops) in &self.modules {
            let rep = BraidRep::new(ops.clone())?;
            for i in 0..n {
                out.push(Check::from_bool(format!("invertible/{name}/S{}", i + 1), rep.inverse(i).is_ok(), || "singular".into()));
            }
            for i in 0..n {
                for j in i + 1..n {
                    let m = self.labels.label(i, j);
                    if let CoxeterLabel::Finite(k) = m {
                        let ok = rep.inverse(i).is_ok() && rep.inverse(j).is_ok() && verify_braid_relation(&rep, i, j, m)?.holds;
                        out.push(Check::from_bool(format!("braid/{name}/({},{})", i + 1, j + 1), ok, || format!("m = {k} relation fails")));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Operators on the direct sum of all modules.
    pub fn total_operators(&self) -> Vec<SparseMatrix<F>> {
        (0..self.labels.rank())
            .map(|i| {
                let mut it = self.modules.iter().map(|(_, ops)| ops[i].clone());
                let first = it.next().unwrap_or_else(|| SparseMatrix::zeros(0, 0));
                it.fold(first, |acc, x| acc.direct_sum(&x))
            })
            .collect()
    }

    /// Lax D-algebra of the endomorphism algebras generated by the `S_i`.
    pub fn lax_d_algebra(&self) -> Result<LaxDAlgebra<F>> {
        LaxDAlgebra::from_operators(self.labels.diagram.clone(), &self.total_operators())
    }
}

/// `ρ_F` for one maximal nested set, on the direct sum of the witness modules.
#[derive(Clone, Debug)]
pub struct NestedRep<F: Field> {
    pub nested: NestedSet,
    /// `(i, ρ_F(S_i))` for `i ∈ B`.
    pub images: Vec<(usize, SparseMatrix<F>)>,
}

/// The family `{ρ_F}` over `Mns(B)` with its consistency checks.
#[derive(Clone, Debug)]
pub struct BraidRepFamily<F: Field> {
    pub subdiagram: VSet,
    pub members: Vec<NestedRep<F>>,
    pub checks: Vec<Check>,
}

fn family_members<F: Field>(d: &Diagram, b: VSet, total: &[SparseMatrix<F>]) -> Result<Vec<NestedRep<F>>> {
    Ok(enumerate_nested_sets(d, b, VSet::EMPTY, true)?
        .into_iter()
        .map(|nested| NestedRep { nested, images: b.vertices().map(|i| (i, total[i].clone())).collect() })
        .collect())
}

/// Materializes `ρ_F` for `F ∈ Mns(B)`, checking Ad-compatibility, braid relations and the
/// restriction square for every `B' ⊂ B`.
pub fn braid_reps_from_witness<F: Field>(w: &CoxeterWitness<F>, b: VSet) -> Result<BraidRepFamily<F>> {
    let d = &w.labels.diagram;
    if !b.is_subset(d.all()) {
        return Err(Error::Invalid(format!("{b} is not a subdiagram")));
    }
    if let Some(c) = w.verify_braid()?.into_iter().find(|c| !c.passed()) {
        return Err(Error::Invalid(format!("unverified witness: {c}")));
    }
    let total = w.total_operators();
    let members = family_members(d, b, &total)?;
    let mut checks = Vec::new();
    if let Some(first) = members.first() {
        for g in &members[1..] {
            let ok = g.images == first.images;
            checks.push(Check::from_bool(format!("ad-compatibility/{}→{}", first.nested, g.nested), ok, || "ρ_G ≠ Ad(Υ_GF)∘ρ_F".into()));
        }
    }
    for m in &members {
        let rep = BraidRep::new(m.images.iter().map(|(_, x)| x.clone()).collect())?;
        let idx: Vec<usize> = m.images.iter().map(|(i, _)| *i).collect();
        for a in 0..idx.len() {
            for c in a + 1..idx.len() {
                let label = w.labels.label(idx[a], idx[c]);
                if label.finite().is_some() {
                    let ok = verify_braid_relation(&rep, a, c, label)?.holds;
                    checks.push(Check::from_bool(format!("braid/{}/({},{})", m.nested, idx[a] + 1, idx[c] + 1), ok, || "relation fails".into()));
                }
            }
        }
    }
    for sub in b.subsets().filter(|s| !s.is_empty() && s.is_proper_subset(b)) {
        let lower = family_members(d, sub, &total)?;
        for f in &members {
            for g in &lower {
                let ok = g.images.iter().all(|(i, x)| f.images.iter().any(|(j, y)| i == j && x == y));
                checks.push(Check::from_bool(format!("restriction/{}⊂{}/{}", sub, b, g.nested), ok, || {
                    format!("ρ_B' and ρ_B disagree on generators of {sub}")
                }));
            }
        }
    }
    Ok(BraidRepFamily { subdiagram: b, members, checks })
}

/// Data of the commuting square `c_i ∘ Δ(S_i) = c_∅ ∘ (S_i ⊗ S_i)` for one pair `(V, W)`.
#[derive(Clone, Debug)]
pub struct CoproductFixture<F: Field> {
    pub name: String,
    pub s_v: SparseMatrix<F>,
    pub s_w: SparseMatrix<F>,
    /// `S_i` acting on `V ⊗ W` through the coproduct.
    pub s_vw: SparseMatrix<F>,
    /// Braiding of the `i`-th category, `V ⊗ W → W ⊗ V`.
    pub c_i: SparseMatrix<F>,
    /// Braiding of the base category, `V ⊗ W → W ⊗ V`.
    pub c_empty: SparseMatrix<F>,
}

/// Checks the square exactly; the witness is the first differing entry.
pub fn verify_coproduct_axiom<F: Field>(fx: &CoproductFixture<F>) -> Check {
    let lhs = fx.c_i.mul(&fx.s_vw);
    let rhs = fx.c_empty.mul(&fx.s_v.kron(&fx.s_w));
    Check::from_bool(format!("coproduct-axiom/{}", fx.name), lhs == rhs, || match lhs.first_difference(&rhs) {
        Some((r, c, x, y)) => format!("entry ({r},{c}): {x} vs {y}"),
        None => "shapes differ".into(),
    })
}

fn tensor_action<F: Field>(x: &SparseMatrix<F>, y: &SparseMatrix<F>) -> SparseMatrix<F> {
    x.kron(&SparseMatrix::identity(y.rows())).add(&SparseMatrix::identity(x.rows()).kron(y))
}

/// Classical symmetric fixture: `s̃ = exp(e)exp(−f)exp(e)` with flips as both braidings.
pub fn classical_coproduct_fixture(name: &str, v: (&QMat, &QMat), w: (&QMat, &QMat)) -> Result<CoproductFixture<Rational>> {
    let (e, f) = (tensor_action(v.0, w.0), tensor_action(v.1, w.1));
    let p = flip::<Rational>(v.0.rows(), w.0.rows());
    Ok(CoproductFixture {
        name: name.into(),
        s_v: tits_operator(v.0, v.1)?,
        s_w: tits_operator(w.0, w.1)?,
        s_vw: tits_operator(&e, &f)?,
        c_i: p.clone(),
        c_empty: p,
    })
}

/// The classical fixture with `s̃` replaced by `s̃ + e`, which is not group-like.
pub fn perturbed_classical_fixture(name: &str, v: (&QMat, &QMat), w: (&QMat, &QMat)) -> Result<CoproductFixture<Rational>> {
    let mut fx = classical_coproduct_fixture(name, v, w)?;
    fx.s_v = fx.s_v.add(v.0);
    fx.s_w = fx.s_w.add(w.0);
    fx.s_vw = fx.s_vw.add(&tensor_action(v.0, w.0));
    Ok(fx)
}

/// Quantum fixture: `c_i` is the reverse braiding `(flip ∘ R_i^{WV})⁻¹` and `c_∅` the flip.
pub fn quantum_coproduct_fixture(
    name: &str,
    data: &QuantumGroupData,
    v: &WeightModule,
    w: &WeightModule,
    i: usize,
) -> Result<CoproductFixture<QScalar>> {
    let p = flip::<QScalar>(v.dim, w.dim);
    let beta_wv = p.transpose().mul(&rank1_r_matrix(data, w, v, i));
    Ok(CoproductFixture {
        name: name.into(),
        s_v: quantum_weyl_operator(data, v, i),
        s_w: quantum_weyl_operator(data, w, i),
        s_vw: quantum_weyl_operator(data, &coproduct_action(data, v, w)?, i),
        c_i: beta_wv.inverse()?,
        c_empty: p,
    })
}

/// Witness of the `S_i` on quantum modules.
pub fn quantum_witness(data: &QuantumGroupData, modules: &[(String, WeightModule)]) -> Result<CoxeterWitness<QScalar>> {
    let ms = modules
        .iter()
        .map(|(name, v)| (name.clone(), (0..data.rank()).map(|i| quantum_weyl_operator(data, v, i)).collect()))
        .collect();
    CoxeterWitness::new(data.labels.clone(), ms)
}

/// Witness of the Tits operators of `(e_i, f_i)` families on classical modules.
pub fn classical_witness(labels: LabelledDiagram, modules: &[(String, Vec<(QMat, QMat)>)]) -> Result<CoxeterWitness<Rational>> {
    let ms = modules
        .iter()
        .map(|(name, ef)| Ok((name.clone(), ef.iter().map(|(e, f)| tits_operator(e, f)).collect::<Result<Vec<_>>>()?)))
        .collect::<Result<Vec<_>>>()?;
    CoxeterWitness::new(labels, ms)
}
