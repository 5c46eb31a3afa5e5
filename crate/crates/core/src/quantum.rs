//! Drinfeld–Jimbo quantum groups acting on integrable weight modules over
//! exact q-arithmetic: quantum Weyl group operators, rank-one R-matrices and
//! the identities they satisfy.
//!
//! Conventions: `K_i = q_i^{h_i}`, `Δ(E_i) = E_i ⊗ K_i + 1 ⊗ E_i`,
//! `Δ(F_i) = F_i ⊗ 1 + K_i⁻¹ ⊗ F_i`, `q_i = q^{d_i}` with `DA` symmetric.

use num_integer::Integer;

use crate::algebra::{coordinates, flip, nullspace, q_factorial, q_int, QScalar, QqMat, Rational, SparseMatrix};
use crate::braid::{check_gcm, coxeter_labels_from_gcm, verify_braid_relation, BraidRep, CoxeterLabel, LabelledDiagram};
use crate::error::{Error, Result};
use crate::realization::{int_matrix, symmetrizer};
use crate::report::Check;

/// Cartan matrix, symmetrizer, Coxeter labels and exponent lattice.
#[derive(Clone, Debug)]
pub struct QuantumGroupData {
    pub a: Vec<Vec<i64>>,
    /// `d` with `DA` symmetric, coprime positive integers per component.
    pub d: Vec<i64>,
    pub labels: LabelledDiagram,
    /// `M = 4·lcm(d)`; every scalar lives in `Q(q^{1/M})`.
    pub lattice: u32,
}

impl QuantumGroupData {
    pub fn new(a: &[Vec<i64>]) -> Result<Self> {
        check_gcm(a)?;
        let n = a.len();
        let at: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        let d: Vec<i64> = symmetrizer(&int_matrix(&at))?
            .iter()
            .map(|x| if x.is_integer() { i64::try_from(x.numer().clone()).ok() } else { None })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Invalid("symmetrizer is not integral".into()))?;
        let lcm = d.iter().fold(1i64, |acc, x| acc.lcm(x));
        Ok(QuantumGroupData { a: a.to_vec(), d, labels: coxeter_labels_from_gcm(a)?, lattice: (4 * lcm) as u32 })
    }

    pub fn sl2() -> Self {
        QuantumGroupData::new(&[vec![2]]).expect("sl2")
    }

    pub fn a2() -> Self {
        QuantumGroupData::new(&[vec![2, -1], vec![-1, 2]]).expect("A2")
    }

    /// `B₂` with `α₁` long: `A = [[2,−1],[−2,2]]`.
    pub fn b2() -> Self {
        QuantumGroupData::new(&[vec![2, -1], vec![-2, 2]]).expect("B2")
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `q_i^{e}` for a rational exponent `e`.
    pub fn qi_pow(&self, i: usize, e: Rational) -> QScalar {
        QScalar::q_pow(&(e * Rational::from_integer(self.d[i].into())))
    }

    pub fn qi_int_pow(&self, i: usize, e: i64) -> QScalar {
        self.qi_pow(i, Rational::from_integer(e.into()))
    }

    /// `α_i` read on the coroots: `(a_ji)_j`.
    pub fn root(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|j| self.a[j][i]).collect()
    }
}

/// Weight module with `weights[v][j] = μ(h_j)` and generator matrices over `QScalar`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightModule {
    pub dim: usize,
    pub weights: Vec<Vec<i64>>,
    pub e: Vec<QqMat>,
    pub f: Vec<QqMat>,
}

fn qdiag(v: Vec<QScalar>) -> QqMat {
    SparseMatrix::diagonal(v)
}

impl WeightModule {
    /// Constructor gated by the invariant suite.
    pub fn new(data: &QuantumGroupData, weights: Vec<Vec<i64>>, e: Vec<QqMat>, f: Vec<QqMat>) -> Result<Self> {
        let m = WeightModule { dim: weights.len(), weights, e, f };
        if let Some(c) = m.check(data).into_iter().find(|c| !c.passed()) {
            return Err(Error::Invalid(format!("weight module invariant fails: {c}")));
        }
        Ok(m)
    }

    pub fn trivial(data: &QuantumGroupData) -> Self {
        let n = data.rank();
        WeightModule { dim: 1, weights: vec![vec![0; n]], e: vec![QqMat::zeros(1, 1); n], f: vec![QqMat::zeros(1, 1); n] }
    }

    /// `K_i^{s} = q_i^{s h_i}`.
    pub fn k(&self, data: &QuantumGroupData, i: usize, s: i64) -> QqMat {
        qdiag(self.weights.iter().map(|w| data.qi_int_pow(i, s * w[i])).collect())
    }

    /// Divided power `X^{(a)} = X^a / [a]_{q_i}!`.
    pub fn divided(&self, data: &QuantumGroupData, x: &QqMat, i: usize, a: usize) -> QqMat {
        let c = q_factorial(a as i64, data.d[i]).inv().expect("nonzero q-factorial");
        x.pow(a as u32).scale(&c)
    }

    /// Grading, commutators, Serre relations and nilpotency.
    pub fn check(&self, data: &QuantumGroupData) -> Vec<Check> {
        let n = data.rank();
        let shapes = self.e.len() == n
            && self.f.len() == n
            && self.weights.iter().all(|w| w.len() == n)
            && self.e.iter().chain(&self.f).all(|m| m.rows() == self.dim && m.cols() == self.dim);
        if !shapes {
            return vec![Check::fail("shape", "generator or weight shapes do not match the data")];
        }
        let mut grading = None;
        for i in 0..n {
            let r = data.root(i);
            for (x, sign) in [(&self.e[i], 1), (&self.f[i], -1)] {
                for (row, col, _) in x.iter() {
                    let ok = (0..n).all(|j| self.weights[row][j] == self.weights[col][j] + sign * r[j]);
                    if !ok && grading.is_none() {
                        grading = Some((i, row, col));
                    }
                }
            }
        }
        let mut comm = None;
        for i in 0..n {
            for j in 0..n {
                let lhs = self.e[i].commutator(&self.f[j]);
                let rhs = if i == j {
                    qdiag(self.weights.iter().map(|w| q_int(w[i], data.d[i])).collect())
                } else {
                    QqMat::zeros(self.dim, self.dim)
                };
                if lhs != rhs && comm.is_none() {
                    comm = Some((i, j));
                }
            }
        }
        let mut serre = None;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let top = (1 - data.a[i][j]) as usize;
                for (x, name) in [(&self.e, "E"), (&self.f, "F")] {
                    let mut acc = QqMat::zeros(self.dim, self.dim);
                    for m in 0..=top {
                        let term = self.divided(data, &x[i], i, m).mul(&x[j]).mul(&self.divided(data, &x[i], i, top - m));
                        acc = if m % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                    }
                    if !acc.is_zero() && serre.is_none() {
                        serre = Some((name, i, j));
                    }
                }
            }
        }
        let nilpotent = self.e.iter().chain(&self.f).all(|x| x.pow(self.dim as u32).is_zero());
        vec![
            Check::from_bool("grading", grading.is_none(), || format!("{:?} breaks the weight grading", grading.unwrap())),
            Check::from_bool("commutator", comm.is_none(), || format!("[E_i, F_j] fails for {:?}", comm.unwrap())),
            Check::from_bool("serre", serre.is_none(), || format!("Serre relation fails for {:?}", serre.unwrap())),
            Check::from_bool("nilpotent", nilpotent, || "a generator is not nilpotent".into()),
        ]
    }
}

/// `V(m)` with basis `v_0..v_m`, `F v_k = [k+1] v_{k+1}`, `E v_k = [m−k+1] v_{k−1}`.
pub fn build_sl2_module(m: usize) -> Result<WeightModule> {
    let data = QuantumGroupData::sl2();
    let n = m + 1;
    let mi = m as i64;
    let weights = (0..n).map(|k| vec![mi - 2 * k as i64]).collect();
    let f = QqMat::from_entries(n, n, (0..m).map(|k| (k + 1, k, q_int(k as i64 + 1, 1))));
    let e = QqMat::from_entries(n, n, (1..n).map(|k| (k - 1, k, q_int(mi - k as i64 + 1, 1))));
    WeightModule::new(&data, weights, vec![e], vec![f])
}

fn ladder(n: usize, steps: &[(usize, usize)]) -> QqMat {
    QqMat::from_entries(n, n, steps.iter().map(|&(from, to)| (to, from, QScalar::one())))
}

fn transpose_ladder(n: usize, steps: &[(usize, usize)]) -> QqMat {
    QqMat::from_entries(n, n, steps.iter().map(|&(from, to)| (from, to, QScalar::one())))
}

/// `A₂` vector module, weights `(1,0), (−1,1), (0,−1)`.
pub fn a2_vector() -> Result<WeightModule> {
    let f = [vec![(0, 1)], vec![(1, 2)]];
    WeightModule::new(
        &QuantumGroupData::a2(),
        vec![vec![1, 0], vec![-1, 1], vec![0, -1]],
        f.iter().map(|s| transpose_ladder(3, s)).collect(),
        f.iter().map(|s| ladder(3, s)).collect(),
    )
}

/// `B₂` spin module: `(0,1) →F₂ (1,−1) →F₁ (−1,1) →F₂ (0,−1)`, all entries 1.
pub fn b2_spin() -> Result<WeightModule> {
    let f = [vec![(1, 2)], vec![(0, 1), (2, 3)]];
    WeightModule::new(
        &QuantumGroupData::b2(),
        vec![vec![0, 1], vec![1, -1], vec![-1, 1], vec![0, -1]],
        f.iter().map(|s| transpose_ladder(4, s)).collect(),
        f.iter().map(|s| ladder(4, s)).collect(),
    )
}

/// Module structure on `V ⊗ W` from the coproduct.
pub fn coproduct_action(data: &QuantumGroupData, v: &WeightModule, w: &WeightModule) -> Result<WeightModule> {
    let n = data.rank();
    if v.e.len() != n || w.e.len() != n {
        return Err(Error::Invalid("modules over different quantum group data".into()));
    }
    let (iv, iw) = (QqMat::identity(v.dim), QqMat::identity(w.dim));
    let weights = v
        .weights
        .iter()
        .flat_map(|a| w.weights.iter().map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect()))
        .collect();
    let e = (0..n).map(|i| v.e[i].kron(&w.k(data, i, 1)).add(&iv.kron(&w.e[i]))).collect();
    let f = (0..n).map(|i| v.f[i].kron(&iw).add(&v.k(data, i, -1).kron(&w.f[i]))).collect();
    WeightModule::new(data, weights, e, f)
}

/// Highest-weight submodule generated by the first vector of weight `weight`
/// killed by every `E_i`; returns the submodule and its inclusion matrix.
pub fn highest_weight_submodule(data: &QuantumGroupData, v: &WeightModule, weight: &[i64]) -> Result<(WeightModule, QqMat)> {
    let idx: Vec<usize> = (0..v.dim).filter(|&k| v.weights[k] == weight).collect();
    if idx.is_empty() {
        return Err(Error::Invalid(format!("weight {weight:?} does not occur")));
    }
    let all: Vec<usize> = (0..v.dim).collect();
    let sys = SparseMatrix::vstack(&v.e.iter().map(|e| e.select(&all, &idx)).collect::<Vec<_>>());
    let kernel = nullspace(&sys);
    let first = kernel.first().ok_or_else(|| Error::Invalid(format!("no highest weight vector of weight {weight:?}")))?;
    let start = QqMat::from_entries(v.dim, 1, first.iter().map(|(k, _, x)| (idx[k], 0, x.clone())));
    let mut basis = vec![start];
    let mut weights = vec![weight.to_vec()];
    let mut k = 0;
    while k < basis.len() {
        for i in 0..data.rank() {
            let y = v.f[i].mul(&basis[k]);
            if y.is_zero() {
                continue;
            }
            let wt: Vec<i64> = weights[k].iter().zip(data.root(i)).map(|(a, b)| a - b).collect();
            let same: Vec<QqMat> = basis.iter().zip(&weights).filter(|(_, w)| **w == wt).map(|(b, _)| b.clone()).collect();
            let r = SparseMatrix::hstack(&same).rank();
            let mut cand = same;
            cand.push(y.clone());
            if SparseMatrix::hstack(&cand).rank() > r || r == 0 {
                basis.push(y);
                weights.push(wt);
            }
        }
        k += 1;
    }
    let p = SparseMatrix::hstack(&basis);
    let restrict = |x: &QqMat| coordinates(&p, &x.mul(&p));
    let e = v.e.iter().map(restrict).collect::<Result<Vec<_>>>()?;
    let f = v.f.iter().map(restrict).collect::<Result<Vec<_>>>()?;
    Ok((WeightModule::new(data, weights, e, f)?, p))
}

/// Simple module of dominant highest weight `(a, b)` with `a, b ≤ 3` for `A₂` or `B₂`,
/// extracted from a tensor power of fundamental modules.
pub fn build_rank2_module(data: &QuantumGroupData, highest: [i64; 2]) -> Result<WeightModule> {
    if highest.iter().any(|&x| !(0..=3).contains(&x)) {
        return Err(Error::Invalid("highest weight coordinates must lie in 0..=3".into()));
    }
    let (w1, w2) = fundamentals(data)?;
    if highest == [0, 0] {
        return Ok(WeightModule::trivial(data));
    }
    let mut factors = Vec::new();
    factors.extend(std::iter::repeat_n(&w1, highest[0] as usize));
    factors.extend(std::iter::repeat_n(&w2, highest[1] as usize));
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let mut acc = factors[0].clone();
    let mut top = acc.weights[0].clone();
    for m in &factors[1..] {
        acc = coproduct_action(data, &acc, m)?;
        top = top.iter().zip(&m.weights[0]).map(|(a, b)| a + b).collect();
        acc = highest_weight_submodule(data, &acc, &top)?.0;
    }
    Ok(acc)
}

/// Fundamental modules of highest weights `(1,0)` and `(0,1)`.
pub fn fundamentals(data: &QuantumGroupData) -> Result<(WeightModule, WeightModule)> {
    if data.a == QuantumGroupData::a2().a {
        let v = a2_vector()?;
        let vv = coproduct_action(data, &v, &v)?;
        let dual = highest_weight_submodule(data, &vv, &[0, 1])?.0;
        Ok((v, dual))
    } else if data.a == QuantumGroupData::b2().a {
        let s = b2_spin()?;
        let ss = coproduct_action(data, &s, &s)?;
        let vec5 = highest_weight_submodule(data, &ss, &[1, 0])?.0;
        Ok((vec5, s))
    } else {
        Err(Error::Invalid("seed modules exist for A2 and B2 in the standard labelling".into()))
    }
}

/// `S_i = Σ (−1)^b q_i^{h_i²/4 + b − ac} E_i^{(a)} F_i^{(b)} E_i^{(c)}` over
/// `a − b + c = −λ(h_i)`, with `E^{(a)} = 0` for `a < 0`.
pub fn quantum_weyl_operator(data: &QuantumGroupData, v: &WeightModule, i: usize) -> QqMat {
    let n = v.dim;
    let mut ms: Vec<i64> = v.weights.iter().map(|w| w[i]).collect();
    ms.sort_unstable();
    ms.dedup();
    let len = match (ms.first(), ms.last()) {
        (Some(lo), Some(hi)) => ((hi - lo) / 2) as usize,
        _ => 0,
    };
    let e_div: Vec<QqMat> = (0..=len).map(|a| v.divided(data, &v.e[i], i, a)).collect();
    let f_div: Vec<QqMat> = (0..=len).map(|b| v.divided(data, &v.f[i], i, b)).collect();
    let mut s = QqMat::zeros(n, n);
    for m in ms {
        let proj = QqMat::from_entries(n, n, (0..n).filter(|&k| v.weights[k][i] == m).map(|k| (k, k, QScalar::one())));
        let quarter = data.qi_pow(i, Rational::new((m * m).into(), 4.into()));
        for c in 0..=len as i64 {
            let right = e_div[c as usize].mul(&proj);
            if right.is_zero() {
                continue;
            }
            for a in 0..=len as i64 {
                let b = a + c + m;
                if b < 0 || b > len as i64 {
                    continue;
                }
                let term = e_div[a as usize].mul(&f_div[b as usize].mul(&right));
                if term.is_zero() {
                    continue;
                }
                let sign = if b % 2 == 0 { QScalar::one() } else { QScalar::from_int(-1) };
                let coeff = sign.mul(&data.qi_int_pow(i, b - a * c)).mul(&quarter);
                s = s.add(&term.scale(&coeff));
            }
        }
    }
    s
}

/// `R_i = q_i^{h_i ⊗ h_i / 2} Σ_n c_n E_i^n ⊗ F_i^n`,
/// `c_n = q_i^{n(n−1)/2} (q_i − q_i⁻¹)^n / [n]_{q_i}!`.
pub fn rank1_r_matrix(data: &QuantumGroupData, v: &WeightModule, w: &WeightModule, i: usize) -> QqMat {
    let di = data.d[i];
    let gap = data.qi_int_pow(i, 1).sub(&data.qi_int_pow(i, -1));
    let top = v.dim.min(w.dim);
    let mut quasi = QqMat::zeros(v.dim * w.dim, v.dim * w.dim);
    for nn in 0..top {
        let n = nn as i64;
        let c = data
            .qi_int_pow(i, n * (n - 1) / 2)
            .mul(&gap.pow(n).expect("integer power"))
            .div(&q_factorial(n, di))
            .expect("nonzero q-factorial");
        let t = v.e[i].pow(nn as u32).kron(&w.f[i].pow(nn as u32));
        if !t.is_zero() {
            quasi = quasi.add(&t.scale(&c));
        }
    }
    let cartan = qdiag(
        v.weights
            .iter()
            .flat_map(|a| w.weights.iter().map(move |b| (a[i], b[i])))
            .map(|(x, y)| data.qi_pow(i, Rational::new((x * y).into(), 2.into())))
            .collect(),
    );
    cartan.mul(&quasi)
}

/// `Δ²¹(X)` on `V ⊗ W`: the operator of `W ⊗ V` conjugated by the flip.
pub fn flipped(dv: usize, dw: usize, x_wv: &QqMat) -> QqMat {
    let p = flip::<QScalar>(dv, dw);
    p.transpose().mul(x_wv).mul(&p)
}

/// Which of the four orientations of the coproduct identity holds.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    /// Left side uses `Δ²¹(S_i)` instead of `Δ(S_i)`.
    pub flipped_coproduct: bool,
    /// Right side uses `R_i²¹` instead of `R_i`.
    pub flipped_r: bool,
}

/// The orientation derived on `V(1) ⊗ V(1)`: `Δ²¹(S_i) = R_i (S_i ⊗ S_i)`.
/// Its flip conjugate `Δ(S_i) = R_i²¹ (S_i ⊗ S_i)` is the same statement with the factors swapped.
pub const COPRODUCT_ORIENTATION: Orientation = Orientation { flipped_coproduct: true, flipped_r: false };

/// Both sides of the coproduct identity under an orientation.
pub fn coproduct_identity_sides(
    data: &QuantumGroupData,
    v: &WeightModule,
    w: &WeightModule,
    i: usize,
    o: Orientation,
) -> Result<(QqMat, QqMat)> {
    let lhs = if o.flipped_coproduct {
        flipped(v.dim, w.dim, &quantum_weyl_operator(data, &coproduct_action(data, w, v)?, i))
    } else {
        quantum_weyl_operator(data, &coproduct_action(data, v, w)?, i)
    };
    let r = if o.flipped_r { flipped(v.dim, w.dim, &rank1_r_matrix(data, w, v, i)) } else { rank1_r_matrix(data, v, w, i) };
    let rhs = r.mul(&quantum_weyl_operator(data, v, i).kron(&quantum_weyl_operator(data, w, i)));
    Ok((lhs, rhs))
}

/// Every orientation that holds on `V ⊗ W`.
pub fn derive_orientations(data: &QuantumGroupData, v: &WeightModule, w: &WeightModule, i: usize) -> Result<Vec<Orientation>> {
    let mut out = Vec::new();
    for flipped_coproduct in [false, true] {
        for flipped_r in [false, true] {
            let o = Orientation { flipped_coproduct, flipped_r };
            let (l, r) = coproduct_identity_sides(data, v, w, i, o)?;
            if l == r {
                out.push(o);
            }
        }
    }
    Ok(out)
}

fn first_entry_difference(a: &QqMat, b: &QqMat) -> String {
    match a.first_difference(b) {
        Some((r, c, x, y)) => format!("entry ({r},{c}): {x} vs {y}"),
        None => "shapes differ".into(),
    }
}

/// `R_i Δ(X) = Δ²¹(X) R_i` for `X ∈ {E_i, F_i, K_i}`.
pub fn r_intertwines(data: &QuantumGroupData, v: &WeightModule, w: &WeightModule, i: usize) -> Result<bool> {
    let r = rank1_r_matrix(data, v, w, i);
    let vw = coproduct_action(data, v, w)?;
    let wv = coproduct_action(data, w, v)?;
    let ops = |m: &WeightModule| vec![m.e[i].clone(), m.f[i].clone(), m.k(data, i, 1)];
    Ok(ops(&vw).iter().zip(ops(&wv)).all(|(x, y)| r.mul(x) == flipped(v.dim, w.dim, &y).mul(&r)))
}

/// Entry-wise `q → 1` specialization.
pub fn specialize(x: &QqMat) -> Result<crate::algebra::QMat> {
    x.try_map(|c| c.specialize_at_one())
}

/// Diagonal sign matrix `D` with `S_i|_{q=1} = s̃_i D`, if it exists and is weight-determined.
pub fn classical_limit_signs(data: &QuantumGroupData, v: &WeightModule, i: usize) -> Result<Option<Vec<i64>>> {
    let s1 = specialize(&quantum_weyl_operator(data, v, i))?;
    let e = specialize(&v.e[i])?;
    let f = specialize(&v.f[i])?;
    let tits = crate::bialgebra::tits_operator(&e, &f)?;
    let d = tits.inverse()?.mul(&s1);
    let mut signs = Vec::with_capacity(v.dim);
    for k in 0..v.dim {
        let x = d.get(k, k);
        let s = if x == Rational::from_integer(1.into()) {
            1
        } else if x == Rational::from_integer((-1).into()) {
            -1
        } else {
            return Ok(None);
        };
        signs.push(s);
    }
    if d.iter().any(|(r, c, _)| r != c) {
        return Ok(None);
    }
    let determined = (0..v.dim).all(|a| (0..v.dim).all(|b| v.weights[a] != v.weights[b] || signs[a] == signs[b]));
    Ok(determined.then_some(signs))
}

/// Generators on which `S_i²` fails to commute, as `(name, j)`.
pub fn half_balance_failures(data: &QuantumGroupData, v: &WeightModule, i: usize) -> Vec<(&'static str, usize)> {
    let s = quantum_weyl_operator(data, v, i);
    let s2 = s.mul(&s);
    let mut out = Vec::new();
    for j in 0..data.rank() {
        for (name, x) in [("E", &v.e[j]), ("F", &v.f[j])] {
            if !s2.commutator(x).is_zero() {
                out.push((name, j));
            }
        }
        if !s2.commutator(&v.k(data, j, 1)).is_zero() {
            out.push(("K", j));
        }
    }
    out
}

/// `S_i^W f = f S_i^V` and the same for `S_i²`, for `f: V → W`.
pub fn weyl_natural(data: &QuantumGroupData, v: &WeightModule, w: &WeightModule, f: &QqMat) -> bool {
    (0..data.rank()).all(|i| {
        let (sv, sw) = (quantum_weyl_operator(data, v, i), quantum_weyl_operator(data, w, i));
        sw.mul(f) == f.mul(&sv) && sw.mul(&sw).mul(f) == f.mul(&sv.mul(&sv))
    })
}

/// Braid relations, weight reflection, local half-balance and classical limit on every module,
/// and the coproduct identity on every pair with `dim V · dim W ≤ max_tensor_dim`.
pub fn verify_coxeter_identities(data: &QuantumGroupData, modules: &[(String, WeightModule)], max_tensor_dim: usize) -> Result<Vec<Check>> {
    let n = data.rank();
    let mut out = Vec::new();
    for (name, v) in modules {
        let rep = BraidRep::new((0..n).map(|i| quantum_weyl_operator(data, v, i)).collect())?;
        for i in 0..n {
            for j in i + 1..n {
                if let CoxeterLabel::Finite(m) = data.labels.label(i, j) {
                    let c = verify_braid_relation(&rep, i, j, CoxeterLabel::Finite(m))?;
                    out.push(Check::from_bool(format!("braid/{name}/({},{})", i + 1, j + 1), c.holds, || {
                        format!("m = {m} relation fails")
                    }));
                }
            }
        }
        for i in 0..n {
            let inv = rep.inverse(i).is_ok();
            let reflects = quantum_weyl_operator(data, v, i).iter().all(|(r, c, _)| {
                let m = v.weights[c][i];
                let root = data.root(i);
                (0..n).all(|j| v.weights[r][j] == v.weights[c][j] - m * root[j])
            });
            out.push(Check::from_bool(format!("weyl/{name}/S{}", i + 1), inv && reflects, || {
                "S_i is not invertible and weight-reflecting".into()
            }));
            let bad = half_balance_failures(data, v, i);
            let local_ok = bad.iter().all(|(g, j)| *g != "K" && *j != i);
            out.push(Check::from_bool(format!("half-balance/{name}/S{}", i + 1), local_ok, || format!("S_i² fails to commute with {bad:?}")));
            let signs = classical_limit_signs(data, v, i)?;
            let ok = signs.as_ref().is_some_and(|s| s.iter().all(|&x| x == 1));
            out.push(Check::from_bool(format!("classical-limit/{name}/S{}", i + 1), ok, || format!("signs {signs:?}")));
        }
    }
    for (nv, v) in modules {
        for (nw, w) in modules.iter().filter(|(_, w)| v.dim * w.dim <= max_tensor_dim) {
            for i in 0..n {
                let (l, r) = coproduct_identity_sides(data, v, w, i, COPRODUCT_ORIENTATION)?;
                out.push(Check::from_bool(format!("coproduct/{nv}⊗{nw}/S{}", i + 1), l == r, || first_entry_difference(&l, &r)));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    #[test]
    fn sl2_modules_validate() {
        let v0 = build_sl2_module(0).unwrap();
        assert!(v0.e[0].is_zero() && v0.f[0].is_zero());
        let v1 = build_sl2_module(1).unwrap();
        let c = v1.e[0].commutator(&v1.f[0]);
        assert_eq!(c, qdiag(vec![QScalar::one(), QScalar::from_int(-1)]));
        let bad = WeightModule::new(&QuantumGroupData::sl2(), vec![vec![1], vec![-1]], vec![v1.e[0].scale(&QScalar::q())], v1.f.clone());
        assert!(bad.is_err());
    }

    #[test]
    fn symmetrizers_and_lattice() {
        let b2 = QuantumGroupData::b2();
        assert_eq!(b2.d, vec![2, 1]);
        assert_eq!(b2.lattice, 8);
        assert_eq!(QuantumGroupData::a2().d, vec![1, 1]);
    }

    #[test]
    fn tensor_weights() {
        let data = QuantumGroupData::sl2();
        let v = build_sl2_module(1).unwrap();
        let t = coproduct_action(&data, &v, &v).unwrap();
        let mut w: Vec<i64> = t.weights.iter().map(|x| x[0]).collect();
        w.sort_unstable();
        assert_eq!(w, vec![-2, 0, 0, 2]);
        assert!(t.e[0].mul(&QqMat::unit(4, 0)).is_zero());
        let a2 = QuantumGroupData::a2();
        let x = a2_vector().unwrap();
        assert!(coproduct_action(&a2, &x, &x).is_ok());
    }

    #[test]
    fn weyl_on_small_modules() {
        let data = QuantumGroupData::sl2();
        let t = build_sl2_module(0).unwrap();
        assert!(quantum_weyl_operator(&data, &t, 0).is_identity());
        let v1 = build_sl2_module(1).unwrap();
        let s = quantum_weyl_operator(&data, &v1, 0);
        assert_eq!(s.get(1, 0), QScalar::q_frac(5, 4).neg());
        assert_eq!(s.get(0, 1), QScalar::q_frac(1, 4));
        assert_eq!(s.nnz(), 2);
        let v2 = build_sl2_module(2).unwrap();
        let s2 = quantum_weyl_operator(&data, &v2, 0);
        assert!(s2.iter().all(|(r, c, _)| r + c == 2));
    }

    #[test]
    fn orientation_is_derived() {
        let data = QuantumGroupData::sl2();
        let v = build_sl2_module(1).unwrap();
        let w = build_sl2_module(2).unwrap();
        let twin = Orientation { flipped_coproduct: false, flipped_r: true };
        for (x, y) in [(&v, &v), (&v, &w), (&w, &v)] {
            assert_eq!(derive_orientations(&data, x, y, 0).unwrap(), vec![twin, COPRODUCT_ORIENTATION]);
        }
    }

    #[test]
    fn r_matrix_shape_and_intertwining() {
        let data = QuantumGroupData::sl2();
        let v1 = build_sl2_module(1).unwrap();
        let v2 = build_sl2_module(2).unwrap();
        let r = rank1_r_matrix(&data, &v1, &v1, 0);
        let off: Vec<_> = r.iter().filter(|(a, b, _)| a != b).collect();
        assert_eq!(off.len(), 1);
        assert!(off[0].0 < off[0].1);
        assert!(r_intertwines(&data, &v1, &v2, 0).unwrap());
        let t = WeightModule::trivial(&data);
        assert!(rank1_r_matrix(&data, &t, &v2, 0).is_identity());
    }

    #[test]
    fn a2_extraction_dims() {
        let data = QuantumGroupData::a2();
        let dims: Vec<usize> = [[1, 0], [0, 1], [2, 0], [1, 1]].iter().map(|&h| build_rank2_module(&data, h).unwrap().dim).collect();
        assert_eq!(dims, vec![3, 3, 6, 8]);
        let b2 = QuantumGroupData::b2();
        let dims: Vec<usize> = [[0, 1], [1, 0]].iter().map(|&h| build_rank2_module(&b2, h).unwrap().dim).collect();
        assert_eq!(dims, vec![4, 5]);
        let v = a2_vector().unwrap();
        assert!(highest_weight_submodule(&data, &v, &[3, 3]).is_err());
    }

    #[test]
    fn sl2_suite() {
        let data = QuantumGroupData::sl2();
        let mods: Vec<_> = (0..3).map(|m| (format!("V({m})"), build_sl2_module(m).unwrap())).collect();
        let checks = verify_coxeter_identities(&data, &mods, usize::MAX).unwrap();
        assert!(all_passed(&checks), "{:?}", checks.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
    }

    #[test]
    fn naturality_on_extraction() {
        let data = QuantumGroupData::sl2();
        let v1 = build_sl2_module(1).unwrap();
        let t = coproduct_action(&data, &v1, &v1).unwrap();
        let (sub, p) = highest_weight_submodule(&data, &t, &[2]).unwrap();
        assert_eq!(sub.dim, 3);
        assert!(weyl_natural(&data, &sub, &t, &p));
    }
}
