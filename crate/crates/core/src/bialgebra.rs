//! Finite-dimensional Lie bialgebras, Drinfeld doubles, Manin triples,
//! Drinfeld–Yetter modules and Tits operators.

use crate::algebra::{coordinates, on_leg, rat, Field, QMat, Rational, SparseMatrix};
use crate::error::{Error, Result};
use crate::report::Check;

/// Lie algebra by structure constants: `ad[i][k][j]` is the coefficient of `x_k` in `[x_i, x_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    ad: Vec<QMat>,
}

impl LieAlgebra {
    /// Algebra with the given adjoint matrices.
    pub fn from_ad(ad: Vec<QMat>) -> Result<Self> {
        let n = ad.len();
        if ad.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Dimension(format!("adjoint matrices must be {n}x{n}")));
        }
        Ok(LieAlgebra { ad })
    }

    /// Algebra from `c[i][j][k]`, the coefficient of `x_k` in `[x_i, x_j]`.
    pub fn from_constants(c: &[Vec<Vec<Rational>>]) -> Result<Self> {
        let n = c.len();
        let mut ad = vec![QMat::zeros(n, n); n];
        for (i, ci) in c.iter().enumerate() {
            if ci.len() != n || ci.iter().any(|v| v.len() != n) {
                return Err(Error::Dimension("structure constants must be n x n x n".into()));
            }
            for (j, v) in ci.iter().enumerate() {
                for (k, x) in v.iter().enumerate() {
                    ad[i].set(k, j, x.clone());
                }
            }
        }
        Ok(LieAlgebra { ad })
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra { ad: vec![QMat::zeros(n, n); n] }
    }

    /// Structure constants of the span of linearly independent matrices closed under commutators.
    pub fn from_matrices(basis: &[QMat]) -> Result<Self> {
        let cols: Vec<QMat> = basis.iter().map(|m| m.vectorize()).collect();
        let b = SparseMatrix::hstack(&cols);
        let n = basis.len();
        let mut ad = vec![QMat::zeros(n, n); n];
        for i in 0..n {
            let targets: Vec<QMat> = (0..n).map(|j| basis[i].commutator(&basis[j]).vectorize()).collect();
            let coords = coordinates(&b, &SparseMatrix::hstack(&targets))
                .map_err(|_| Error::Invalid("matrix span is not closed under commutators".into()))?;
            ad[i] = coords;
        }
        Ok(LieAlgebra { ad })
    }

    pub fn dim(&self) -> usize {
        self.ad.len()
    }

    pub fn ad(&self, i: usize) -> &QMat {
        &self.ad[i]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.ad[i].get(k, j)
    }

    /// `ad(x)` for a coordinate column `x`.
    pub fn ad_of(&self, x: &QMat) -> QMat {
        let n = self.dim();
        x.iter().fold(QMat::zeros(n, n), |acc, (i, _, c)| acc.add(&self.ad[i].scale(c)))
    }

    pub fn bracket(&self, x: &QMat, y: &QMat) -> QMat {
        self.ad_of(x).mul(y)
    }

    pub fn check(&self) -> Vec<Check> {
        let n = self.dim();
        let mut anti = true;
        for i in 0..n {
            for j in 0..n {
                if self.ad[i].col(j) != self.ad[j].col(i).neg() {
                    anti = false;
                }
            }
        }
        let mut jacobi = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                let lhs = self.ad[i].commutator(&self.ad[j]);
                if lhs != self.ad_of(&self.ad[i].col(j)) {
                    jacobi = Some((i, j));
                    break 'outer;
                }
            }
        }
        vec![
            Check::from_bool("antisymmetry", anti, || "bracket is not antisymmetric".into()),
            Check::from_bool("jacobi", jacobi.is_none(), || format!("fails on basis pair {:?}", jacobi.unwrap())),
        ]
    }
}

/// Lie bialgebra; `cobracket[k]` is the matrix of `δ(x_k) = Σ_ij cobracket[k][i][j] x_i ⊗ x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBialgebra {
    pub lie: LieAlgebra,
    pub cobracket: Vec<QMat>,
}

impl LieBialgebra {
    pub fn new(lie: LieAlgebra, cobracket: Vec<QMat>) -> Result<Self> {
        let n = lie.dim();
        if cobracket.len() != n || cobracket.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Dimension("cobracket must be n tensors of shape n x n".into()));
        }
        Ok(LieBialgebra { lie, cobracket })
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    /// `x · T = ad_x T + T ad_xᵀ` on a 2-tensor written as a matrix.
    fn act_on_tensor(&self, x: usize, t: &QMat) -> QMat {
        let a = self.lie.ad(x);
        a.mul(t).add(&t.mul(&a.transpose()))
    }

    /// Dual bialgebra `b*` in the dual basis.
    pub fn dual(&self) -> LieBialgebra {
        let n = self.dim();
        let ad = (0..n)
            .map(|i| QMat::from_entries(n, n, (0..n).flat_map(|k| self.cobracket[k].row_entries(i).map(move |(j, x)| (k, j, x)))))
            .collect();
        let cob = (0..n)
            .map(|k| QMat::from_entries(n, n, (0..n).flat_map(|i| self.lie.ad(i).row_entries(k).map(move |(j, x)| (i, j, x)))))
            .collect();
        LieBialgebra { lie: LieAlgebra { ad }, cobracket: cob }
    }

    /// Bracket, cobracket and cocycle axioms.
    pub fn verify(&self) -> Vec<Check> {
        let n = self.dim();
        let mut out: Vec<Check> = self.lie.check().into_iter().map(|c| c.prefixed("bracket")).collect();
        let coanti = self.cobracket.iter().all(|m| *m == m.transpose().neg());
        out.push(Check::from_bool("cobracket/antisymmetry", coanti, || "δ is not antisymmetric".into()));
        let dual = self.dual();
        out.extend(dual.lie.check().into_iter().skip(1).map(|c| c.prefixed("cobracket")));
        let mut bad = None;
        'outer: for a in 0..n {
            for b in a + 1..n {
                let lhs = self
                    .lie
                    .ad(a)
                    .col(b)
                    .iter()
                    .fold(QMat::zeros(n, n), |acc, (k, _, c)| acc.add(&self.cobracket[k].scale(c)));
                let rhs = self.act_on_tensor(a, &self.cobracket[b]).sub(&self.act_on_tensor(b, &self.cobracket[a]));
                if lhs != rhs {
                    bad = Some((a, b));
                    break 'outer;
                }
            }
        }
        out.push(Check::from_bool("cocycle", bad.is_none(), || format!("δ([x,y]) fails on basis pair {:?}", bad.unwrap())));
        out
    }
}

/// Double `b ⊕ b*` with its invariant pairing; basis `b_0..b_{n-1}, b^0..b^{n-1}`.
#[derive(Clone, Debug)]
pub struct Double {
    pub half: usize,
    pub bialgebra: LieBialgebra,
    pub form: QMat,
}

/// Drinfeld double with the cobracket `ad(r)`, `r = Σ b_i ⊗ b^i`.
pub fn drinfeld_double(b: &LieBialgebra) -> Result<Double> {
    let n = b.dim();
    let m = 2 * n;
    let mut ad = vec![QMat::zeros(m, m); m];
    let c = |i: usize, j: usize, k: usize| b.lie.constant(i, j, k);
    for i in 0..n {
        for j in 0..n {
            for (k, _, x) in b.lie.ad(i).col(j).iter() {
                ad[i].set(k, j, x.clone());
            }
            for k in 0..n {
                let x = b.cobracket[k].get(i, j);
                if !x.is_zero() {
                    ad[n + i].set(n + k, n + j, x);
                }
            }
        }
    }
    for a in 0..n {
        for i in 0..n {
            for j in 0..n {
                let x = c(a, j, i).neg();
                if !x.is_zero() {
                    ad[a].set(n + j, n + i, x.clone());
                    ad[n + i].set(n + j, a, x.neg());
                }
                let y = b.cobracket[a].get(i, j);
                if !y.is_zero() {
                    ad[a].set(j, n + i, y.clone());
                    ad[n + i].set(j, a, y.neg());
                }
            }
        }
    }
    let lie = LieAlgebra::from_ad(ad)?;
    let mut r = QMat::zeros(m, m);
    for i in 0..n {
        r.set(i, n + i, rat(1));
    }
    let cob = (0..m)
        .map(|p| {
            let a = lie.ad(p);
            a.mul(&r).add(&r.mul(&a.transpose()))
        })
        .collect();
    let mut form = QMat::zeros(m, m);
    for i in 0..n {
        form.set(i, n + i, rat(1));
        form.set(n + i, i, rat(1));
    }
    Ok(Double { half: n, bialgebra: LieBialgebra::new(lie, cob)?, form })
}

/// Checks that a form is symmetric, nondegenerate and ad-invariant.
pub fn check_invariant_form(g: &LieAlgebra, form: &QMat) -> Vec<Check> {
    let n = g.dim();
    let sym = *form == form.transpose();
    let nondeg = form.rank() == n;
    let invariant = (0..n).all(|i| {
        let a = g.ad(i);
        a.transpose().mul(form).add(&form.mul(a)).is_zero()
    });
    vec![
        Check::from_bool("form/symmetric", sym, || "form is not symmetric".into()),
        Check::from_bool("form/nondegenerate", nondeg, || format!("rank {} < {n}", form.rank())),
        Check::from_bool("form/invariant", invariant, || "<[x,y],z> != -<y,[x,z]>".into()),
    ]
}

/// Manin triple axioms for subspaces with column bases `bp`, `bm`.
pub fn manin_triple_check(g: &LieAlgebra, form: &QMat, bp: &QMat, bm: &QMat) -> Vec<Check> {
    let n = g.dim();
    let mut out = check_invariant_form(g, form);
    out.push(Check::from_bool("isotropic/plus", bp.transpose().mul(form).mul(bp).is_zero(), || {
        "b+ is not isotropic".into()
    }));
    out.push(Check::from_bool("isotropic/minus", bm.transpose().mul(form).mul(bm).is_zero(), || {
        "b- is not isotropic".into()
    }));
    let both = SparseMatrix::hstack(&[bp.clone(), bm.clone()]);
    out.push(Check::from_bool("direct-sum", both.cols() == n && both.rank() == n, || {
        format!("dims {} + {} with rank {} in dimension {n}", bp.cols(), bm.cols(), both.rank())
    }));
    let pairing = bp.transpose().mul(form).mul(bm);
    out.push(Check::from_bool("pairing", bp.cols() == bm.cols() && pairing.rank() == bp.cols(), || {
        "b+ x b- pairing is degenerate".into()
    }));
    for (name, basis) in [("closed/plus", bp), ("closed/minus", bm)] {
        let closed = (0..basis.cols()).all(|i| {
            let ai = g.ad_of(&basis.col(i));
            let img = ai.mul(basis);
            SparseMatrix::hstack(&[basis.clone(), img]).rank() == basis.rank()
        });
        out.push(Check::from_bool(name, closed, || "subspace is not a subalgebra".into()));
    }
    out
}

/// Drinfeld–Yetter module: `action[a]` is `b_a` acting, `coaction[i]` is `b^i` acting,
/// so the coaction is `v ↦ Σ_i b_i ⊗ coaction[i] v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DYModule {
    pub dim: usize,
    pub action: Vec<QMat>,
    pub coaction: Vec<QMat>,
}

impl DYModule {
    pub fn new(action: Vec<QMat>, coaction: Vec<QMat>) -> Result<Self> {
        let dim = action.first().or(coaction.first()).map_or(0, |m| m.rows());
        if action.len() != coaction.len() || action.iter().chain(&coaction).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Dimension("action and coaction must be square of one size".into()));
        }
        Ok(DYModule { dim, action, coaction })
    }

    pub fn trivial(base_dim: usize) -> Self {
        DYModule { dim: 1, action: vec![QMat::zeros(1, 1); base_dim], coaction: vec![QMat::zeros(1, 1); base_dim] }
    }

    /// Double acting on itself by the adjoint action.
    pub fn adjoint_of_double(d: &Double) -> Self {
        let n = d.half;
        DYModule {
            dim: 2 * n,
            action: (0..n).map(|a| d.bialgebra.lie.ad(a).clone()).collect(),
            coaction: (0..n).map(|i| d.bialgebra.lie.ad(n + i).clone()).collect(),
        }
    }

    /// Operators of all double basis elements, `b` first then `b*`.
    pub fn double_action(&self) -> Vec<QMat> {
        self.action.iter().chain(&self.coaction).cloned().collect()
    }
}

/// Action, coaction and compatibility, as a representation of the double.
pub fn verify_dy(b: &LieBialgebra, v: &DYModule) -> Vec<Check> {
    if v.action.len() != b.dim() {
        return vec![Check::fail("base", format!("module has {} generators, base {}", v.action.len(), b.dim()))];
    }
    let d = match drinfeld_double(b) {
        Ok(d) => d,
        Err(e) => return vec![Check::fail("double", e.to_string())],
    };
    let ops = v.double_action();
    let n = b.dim();
    let mut out = Vec::new();
    let first_bad = |range: (usize, usize), range2: (usize, usize)| {
        for p in range.0..range.1 {
            for q in range2.0..range2.1 {
                let lhs = ops[p].commutator(&ops[q]);
                let rhs = d
                    .bialgebra
                    .lie
                    .ad(p)
                    .col(q)
                    .iter()
                    .fold(QMat::zeros(v.dim, v.dim), |acc, (k, _, x)| acc.add(&ops[k].scale(x)));
                if lhs != rhs {
                    return Some((p, q));
                }
            }
        }
        None
    };
    let act = first_bad((0, n), (0, n));
    let coact = first_bad((n, 2 * n), (n, 2 * n));
    let mixed = first_bad((0, n), (n, 2 * n));
    out.push(Check::from_bool("action", act.is_none(), || format!("fails on {:?}", act.unwrap())));
    out.push(Check::from_bool("coaction", coact.is_none(), || format!("fails on {:?}", coact.unwrap())));
    out.push(Check::from_bool("compatibility", mixed.is_none(), || format!("fails on {:?}", mixed.unwrap())));
    out
}

/// Tensor product with primitive action and coaction.
pub fn dy_tensor(v: &DYModule, w: &DYModule) -> Result<DYModule> {
    if v.action.len() != w.action.len() {
        return Err(Error::Invalid("modules over different bialgebras".into()));
    }
    let dims = [v.dim, w.dim];
    let both = |x: &QMat, y: &QMat| on_leg(x, 0, &dims).add(&on_leg(y, 1, &dims));
    DYModule::new(
        v.action.iter().zip(&w.action).map(|(x, y)| both(x, y)).collect(),
        v.coaction.iter().zip(&w.coaction).map(|(x, y)| both(x, y)).collect(),
    )
}

/// `r = Σ π_V(b_i) ⊗ π*_W(b^i)` and `Ω = r + r²¹` on `V ⊗ W`.
pub fn dy_r_matrix(v: &DYModule, w: &DYModule) -> Result<(QMat, QMat)> {
    if v.action.len() != w.action.len() {
        return Err(Error::Invalid("modules over different bialgebras".into()));
    }
    let mut r = QMat::zeros(v.dim * w.dim, v.dim * w.dim);
    let mut r21 = r.clone();
    for i in 0..v.action.len() {
        r = r.add(&v.action[i].kron(&w.coaction[i]));
        r21 = r21.add(&v.coaction[i].kron(&w.action[i]));
    }
    let omega = r.add(&r21);
    Ok((r, omega))
}

/// Left side of the classical Yang–Baxter equation for `r` on `V ⊗ V ⊗ V`.
pub fn cybe_defect(v: &DYModule) -> QMat {
    cybe_defect_mixed(v, v, v)
}

/// `[r12, r13] + [r12, r23] + [r13, r23]` on `U ⊗ V ⊗ W`.
pub fn cybe_defect_mixed(u: &DYModule, v: &DYModule, w: &DYModule) -> QMat {
    let mods = [u, v, w];
    let dims = [u.dim, v.dim, w.dim];
    let n = u.dim * v.dim * w.dim;
    let r_legs = |a: usize, b: usize| {
        let mut acc = QMat::zeros(n, n);
        for i in 0..u.action.len() {
            acc = acc.add(&on_leg(&mods[a].action[i], a, &dims).mul(&on_leg(&mods[b].coaction[i], b, &dims)));
        }
        acc
    };
    let (r12, r13, r23) = (r_legs(0, 1), r_legs(0, 2), r_legs(1, 2));
    r12.commutator(&r13).add(&r12.commutator(&r23)).add(&r13.commutator(&r23))
}

/// Checks that `Ω` commutes with every double generator on `V ⊗ W`.
pub fn omega_is_dy_endomorphism(v: &DYModule, w: &DYModule) -> Result<bool> {
    let (_, omega) = dy_r_matrix(v, w)?;
    let t = dy_tensor(v, w)?;
    Ok(t.double_action().iter().all(|x| x.commutator(&omega).is_zero()))
}

/// DY axioms on fixtures and their pairwise tensor products, CYBE on every triple of
/// fixtures and the `Ω`-morphism property on every pair of modules.
pub fn dy_suite(b: &LieBialgebra, fixtures: &[(String, DYModule)]) -> Result<Vec<Check>> {
    let mut modules: Vec<(String, DYModule)> = fixtures.to_vec();
    for (nv, v) in fixtures {
        for (nw, w) in fixtures {
            modules.push((format!("{nv}⊗{nw}"), dy_tensor(v, w)?));
        }
    }
    let mut out = Vec::new();
    for (name, m) in &modules {
        out.extend(verify_dy(b, m).into_iter().map(|c| c.prefixed(&format!("dy/{name}"))));
    }
    for (nu, u) in fixtures {
        for (nv, v) in fixtures {
            for (nw, w) in fixtures {
                let ok = cybe_defect_mixed(u, v, w).is_zero();
                out.push(Check::from_bool(format!("cybe/{nu}⊗{nv}⊗{nw}"), ok, || "nonzero defect".into()));
            }
        }
    }
    for (nv, v) in &modules {
        for (nw, w) in fixtures {
            let ok = omega_is_dy_endomorphism(v, w)?;
            out.push(Check::from_bool(format!("omega/{nv}⊗{nw}"), ok, || "Ω does not commute with the double".into()));
        }
    }
    Ok(out)
}

/// `exp(X)` for nilpotent `X`.
pub fn nilpotent_exp(x: &QMat) -> Result<QMat> {
    let n = x.rows();
    let mut acc = QMat::identity(n);
    let mut term = QMat::identity(n);
    for k in 1..=n {
        term = term.mul(x).scale(&Rational::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            return Ok(acc);
        }
        acc = acc.add(&term);
    }
    if term.mul(x).is_zero() {
        Ok(acc)
    } else {
        Err(Error::NotNilpotent(format!("operator of size {n} is not nilpotent")))
    }
}

/// `s̃ = exp(e) exp(-f) exp(e)`.
pub fn tits_operator(e: &QMat, f: &QMat) -> Result<QMat> {
    let ee = nilpotent_exp(e)?;
    Ok(ee.mul(&nilpotent_exp(&f.neg())?).mul(&ee))
}

/// Borel subalgebra `⟨h, e⟩` of `sl_2` with `[h, e] = 2e` and `δ(e) = d⁻¹ h ∧ e`.
pub fn sl2_borel(d: i64) -> LieBialgebra {
    let mut ad_h = QMat::zeros(2, 2);
    ad_h.set(1, 1, rat(2));
    let mut ad_e = QMat::zeros(2, 2);
    ad_e.set(1, 0, rat(-2));
    let lie = LieAlgebra::from_ad(vec![ad_h, ad_e]).expect("2x2");
    let inv = Rational::new(1.into(), d.into());
    let mut de = QMat::zeros(2, 2);
    de.set(0, 1, inv.clone());
    de.set(1, 0, inv.neg());
    LieBialgebra::new(lie, vec![QMat::zeros(2, 2), de]).expect("shapes")
}

/// The 2-dimensional DY module over [`sl2_borel`]: the double acts through `sl_2`.
pub fn sl2_borel_standard(d: i64) -> DYModule {
    let h = QMat::diagonal(vec![rat(1), rat(-1)]);
    let e = QMat::from_entries(2, 2, [(0, 1, rat(1))]);
    let f = QMat::from_entries(2, 2, [(1, 0, rat(1))]);
    let dd = Rational::new(1.into(), d.into());
    DYModule::new(
        vec![h.clone(), e],
        vec![h.scale(&(dd.clone() * rat(-1) / rat(2))), f.scale(&(dd * rat(-2)))],
    )
    .expect("shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    #[test]
    fn borel_is_bialgebra() {
        for d in [1, 2] {
            let b = sl2_borel(d);
            assert!(all_passed(&b.verify()), "{:?}", b.verify());
            let dbl = drinfeld_double(&b).unwrap();
            assert!(all_passed(&dbl.bialgebra.verify()), "{:?}", dbl.bialgebra.verify());
            assert!(all_passed(&check_invariant_form(&dbl.bialgebra.lie, &dbl.form)));
        }
    }

    #[test]
    fn double_restricts_to_cobracket() {
        let b = sl2_borel(2);
        let d = drinfeld_double(&b).unwrap();
        let top = d.bialgebra.cobracket[1].select(&[0, 1], &[0, 1]);
        assert_eq!(top, b.cobracket[1]);
    }

    #[test]
    fn double_of_borel_contains_sl2() {
        let dd = 3;
        let d = drinfeld_double(&sl2_borel(dd)).unwrap();
        let g = &d.bialgebra.lie;
        let e = QMat::unit(4, 1);
        let f = QMat::unit(4, 3).scale(&ratio_of(-dd, 2));
        let h = g.bracket(&e, &f);
        assert_eq!(g.bracket(&h, &e), e.scale(&rat(2)));
        assert_eq!(g.bracket(&h, &f), f.scale(&rat(-2)));
    }

    fn ratio_of(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn abelian_double() {
        let b = LieBialgebra::new(LieAlgebra::abelian(2), vec![QMat::zeros(2, 2); 2]).unwrap();
        let d = drinfeld_double(&b).unwrap();
        assert!((0..4).all(|i| d.bialgebra.lie.ad(i).is_zero()));
    }

    #[test]
    fn standard_module_is_dy() {
        let b = sl2_borel(2);
        let v = sl2_borel_standard(2);
        assert!(all_passed(&verify_dy(&b, &v)), "{:?}", verify_dy(&b, &v));
        assert!(cybe_defect(&v).is_zero());
        assert!(omega_is_dy_endomorphism(&v, &v).unwrap());
        let t = DYModule::trivial(2);
        let tv = dy_tensor(&t, &v).unwrap();
        assert_eq!(tv, v);
    }

    #[test]
    fn tits_sl2() {
        let e = QMat::from_entries(2, 2, [(0, 1, rat(1))]);
        let f = e.transpose();
        let s = tits_operator(&e, &f).unwrap();
        assert_eq!(s, QMat::from_dense(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]));
        assert!(nilpotent_exp(&QMat::identity(2)).is_err());
        assert!(tits_operator(&QMat::zeros(1, 1), &QMat::zeros(1, 1)).unwrap().is_identity());
    }

    fn borel_fixtures(d: i64) -> Vec<(String, DYModule)> {
        let b = sl2_borel(d);
        vec![
            ("1".into(), DYModule::trivial(2)),
            ("V".into(), sl2_borel_standard(d)),
            ("D".into(), DYModule::adjoint_of_double(&drinfeld_double(&b).unwrap())),
        ]
    }

    #[test]
    fn dy_suite_on_borel_fixtures() {
        for d in [1, 2] {
            let checks = dy_suite(&sl2_borel(d), &borel_fixtures(d)).unwrap();
            assert!(all_passed(&checks), "{:?}", checks.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
            assert_eq!(checks.iter().filter(|c| c.name.starts_with("cybe/")).count(), 27);
        }
    }

    #[test]
    fn wrong_coaction_scale_breaks_compatibility() {
        let mut v = sl2_borel_standard(1);
        v.coaction[1] = v.coaction[1].scale(&rat(2));
        let checks = verify_dy(&sl2_borel(1), &v);
        assert!(!all_passed(&checks));
    }

    #[test]
    fn omega_is_the_casimir_of_the_pairing() {
        let b = sl2_borel(1);
        let d = drinfeld_double(&b).unwrap();
        let ginv = d.form.inverse().unwrap();
        for (v, w) in [(sl2_borel_standard(1), sl2_borel_standard(1)), (sl2_borel_standard(1), DYModule::adjoint_of_double(&d))] {
            let (xv, xw) = (v.double_action(), w.double_action());
            let mut cas = QMat::zeros(v.dim * w.dim, v.dim * w.dim);
            for (p, q, c) in ginv.iter() {
                cas = cas.add(&xv[p].kron(&xw[q]).scale(c));
            }
            assert_eq!(dy_r_matrix(&v, &w).unwrap().1, cas);
        }
    }

    #[test]
    fn double_of_dual_is_swapped_double() {
        let b = sl2_borel(1);
        let d = drinfeld_double(&b).unwrap();
        let dd = drinfeld_double(&b.dual()).unwrap();
        let n = b.dim();
        let swap: Vec<usize> = (0..2 * n).map(|k| (k + n) % (2 * n)).collect();
        let p = QMat::from_entries(2 * n, 2 * n, swap.iter().enumerate().map(|(k, &t)| (t, k, rat(1))));
        for k in 0..2 * n {
            let moved = p.mul(dd.bialgebra.lie.ad(k)).mul(&p.transpose());
            assert_eq!(&moved, d.bialgebra.lie.ad(swap[k]));
        }
        assert_eq!(p.mul(&dd.form).mul(&p.transpose()), d.form);
    }
}
