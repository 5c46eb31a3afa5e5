//! Finite-dimensional Hopf algebras by structure constants, Drinfeld–Yetter
//! modules over them and the finite quantum double.

use std::collections::BTreeMap;

use crate::algebra::{flip, nullspace, rat, Field, QMat, Rational, SparseMatrix};
use crate::error::{Error, Result};
use crate::report::Check;

/// Element of `A^{⊗3}` by basis triples.
pub type Tensor3 = BTreeMap<[usize; 3], Rational>;

fn t3_add(t: &mut Tensor3, k: [usize; 3], x: Rational) {
    if x.is_zero() {
        return;
    }
    let e = t.entry(k).or_insert_with(Rational::zero);
    *e += x;
    if e.is_zero() {
        t.remove(&k);
    }
}

/// Hopf algebra with basis `e_0..e_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub dim: usize,
    /// `mult[i][j]` is `e_i e_j` as a column.
    pub mult: Vec<Vec<QMat>>,
    /// `comult[k]` is `Δ(e_k) = Σ comult[k][i][j] e_i ⊗ e_j`.
    pub comult: Vec<QMat>,
    pub unit: QMat,
    pub counit: Vec<Rational>,
    /// Columns are `S(e_j)`.
    pub antipode: QMat,
    pub antipode_inv: QMat,
}

impl HopfAlgebra {
    pub fn new(mult: Vec<Vec<QMat>>, comult: Vec<QMat>, unit: QMat, counit: Vec<Rational>, antipode: QMat) -> Result<Self> {
        let n = mult.len();
        let shapes = mult.iter().all(|r| r.len() == n && r.iter().all(|c| c.rows() == n && c.cols() == 1))
            && comult.len() == n
            && comult.iter().all(|c| c.rows() == n && c.cols() == n)
            && unit.rows() == n
            && unit.cols() == 1
            && counit.len() == n
            && antipode.rows() == n
            && antipode.cols() == n;
        if !shapes {
            return Err(Error::Dimension("inconsistent Hopf structure tensors".into()));
        }
        let antipode_inv = antipode.inverse().map_err(|_| Error::Invalid("antipode is not invertible".into()))?;
        Ok(HopfAlgebra { dim: n, mult, comult, unit, counit, antipode, antipode_inv })
    }

    pub fn basis(&self, i: usize) -> QMat {
        QMat::unit(self.dim, i)
    }

    pub fn mul(&self, x: &QMat, y: &QMat) -> QMat {
        let mut acc = QMat::zeros(self.dim, 1);
        for (i, _, a) in x.iter() {
            for (j, _, b) in y.iter() {
                acc = acc.add(&self.mult[i][j].scale(&a.mul(b)));
            }
        }
        acc
    }

    pub fn delta(&self, x: &QMat) -> QMat {
        x.iter().fold(QMat::zeros(self.dim, self.dim), |acc, (i, _, a)| acc.add(&self.comult[i].scale(a)))
    }

    pub fn eps(&self, x: &QMat) -> Rational {
        x.iter().fold(Rational::zero(), |acc, (i, _, a)| acc + a * &self.counit[i])
    }

    /// Product in `A ⊗ A`, elements written as `n × n` coefficient matrices.
    pub fn mul2(&self, t: &QMat, u: &QMat) -> QMat {
        let mut acc = QMat::zeros(self.dim, self.dim);
        for (a, b, x) in t.iter() {
            for (c, d, y) in u.iter() {
                let l = &self.mult[a][c];
                let r = &self.mult[b][d];
                let s = x.mul(y);
                for (p, _, lp) in l.iter() {
                    for (q, _, rq) in r.iter() {
                        acc.add_at(p, q, &s.mul(&lp.mul(rq)));
                    }
                }
            }
        }
        acc
    }

    pub fn mul3(&self, t: &Tensor3, u: &Tensor3) -> Tensor3 {
        let mut out = Tensor3::new();
        for (a, x) in t {
            for (b, y) in u {
                let s = x * y;
                let ps: Vec<QMat> = (0..3).map(|k| self.mult[a[k]][b[k]].clone()).collect();
                for (i, _, p) in ps[0].iter() {
                    for (j, _, q) in ps[1].iter() {
                        for (k, _, r) in ps[2].iter() {
                            t3_add(&mut out, [i, j, k], &s * p * q * r);
                        }
                    }
                }
            }
        }
        out
    }

    /// `Δ ⊗ id` or `id ⊗ Δ` applied to a 2-tensor.
    pub fn delta_on_leg(&self, t: &QMat, leg: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for (a, b, x) in t.iter() {
            let (src, other) = if leg == 0 { (a, b) } else { (b, a) };
            for (i, j, c) in self.comult[src].iter() {
                let k = if leg == 0 { [i, j, other] } else { [other, i, j] };
                t3_add(&mut out, k, x.mul(c));
            }
        }
        out
    }

    /// `Δ^{(3)}(e_k) = (Δ ⊗ id) Δ(e_k)`.
    pub fn delta3(&self, k: usize) -> Tensor3 {
        self.delta_on_leg(&self.comult[k], 0)
    }

    /// Embeds a 2-tensor into three legs, the missing leg carrying the unit.
    pub fn embed(&self, t: &QMat, legs: [usize; 2]) -> Tensor3 {
        let mut out = Tensor3::new();
        for (a, b, x) in t.iter() {
            for (u, _, c) in self.unit.iter() {
                let mut k = [u; 3];
                k[legs[0]] = a;
                k[legs[1]] = b;
                t3_add(&mut out, k, x.mul(c));
            }
        }
        out
    }

    fn tensor_unit(&self) -> QMat {
        self.unit.mul(&self.unit.transpose())
    }

    /// `(S ⊗ id)` on a 2-tensor.
    pub fn antipode_left(&self, t: &QMat) -> QMat {
        self.antipode.mul(t)
    }

    /// Dual Hopf algebra with opposite coproduct, in the dual basis.
    pub fn dual_cop(&self) -> Result<HopfAlgebra> {
        let n = self.dim;
        let mult = (0..n)
            .map(|i| (0..n).map(|j| QMat::column((0..n).map(|k| self.comult[k].get(i, j)).collect())).collect())
            .collect();
        let comult = (0..n)
            .map(|k| QMat::from_entries(n, n, (0..n).flat_map(|i| (0..n).map(move |j| (j, i, self.mult[i][j].get(k, 0))))))
            .collect();
        HopfAlgebra::new(
            mult,
            comult,
            QMat::column(self.counit.clone()),
            (0..n).map(|k| self.unit.get(k, 0)).collect(),
            self.antipode_inv.transpose(),
        )
    }
}

/// Every Hopf algebra axiom, checked on basis elements.
pub fn verify_hopf(h: &HopfAlgebra) -> Vec<Check> {
    let n = h.dim;
    let e = |i| h.basis(i);
    let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
    let triples = || pairs().flat_map(|(i, j)| (0..n).map(move |k| (i, j, k)));
    let assoc = triples().all(|(i, j, k)| h.mul(&h.mul(&e(i), &e(j)), &e(k)) == h.mul(&e(i), &h.mul(&e(j), &e(k))));
    let unit = (0..n).all(|i| h.mul(&h.unit, &e(i)) == e(i) && h.mul(&e(i), &h.unit) == e(i));
    let coassoc = (0..n).all(|k| h.delta_on_leg(&h.comult[k], 0) == h.delta_on_leg(&h.comult[k], 1));
    let counit = (0..n).all(|k| {
        let t = &h.comult[k];
        let left = QMat::column(h.counit.clone()).transpose().mul(t).transpose();
        let right = t.mul(&QMat::column(h.counit.clone()));
        left == e(k) && right == e(k)
    });
    let compat = pairs().all(|(i, j)| h.delta(&h.mul(&e(i), &e(j))) == h.mul2(&h.comult[i], &h.comult[j]))
        && pairs().all(|(i, j)| h.eps(&h.mul(&e(i), &e(j))) == h.counit[i].mul(&h.counit[j]))
        && h.delta(&h.unit) == h.tensor_unit()
        && h.eps(&h.unit).is_one();
    let antipode = (0..n).all(|k| {
        let target = h.unit.scale(&h.counit[k]);
        let (mut l, mut r) = (QMat::zeros(n, 1), QMat::zeros(n, 1));
        for (a, b, x) in h.comult[k].iter() {
            l = l.add(&h.mul(&h.antipode.col(a), &e(b)).scale(x));
            r = r.add(&h.mul(&e(a), &h.antipode.col(b)).scale(x));
        }
        l == target && r == target
    });
    vec![
        Check::from_bool("associativity", assoc, || "m(m ⊗ id) != m(id ⊗ m)".into()),
        Check::from_bool("unit", unit, || "unit is not two-sided".into()),
        Check::from_bool("coassociativity", coassoc, || "(Δ ⊗ id)Δ != (id ⊗ Δ)Δ".into()),
        Check::from_bool("counit", counit, || "counit fails".into()),
        Check::from_bool("bialgebra", compat, || "Δ or ε is not an algebra map".into()),
        Check::from_bool("antipode", antipode, || "m(S ⊗ id)Δ != ηε".into()),
    ]
}

/// Group algebra of the cyclic group of order `n`, basis `g^0..g^{n-1}`.
pub fn cyclic_group_algebra(n: usize) -> HopfAlgebra {
    let mult = (0..n).map(|i| (0..n).map(|j| QMat::unit(n, (i + j) % n)).collect()).collect();
    let comult = (0..n).map(|k| QMat::from_entries(n, n, [(k, k, rat(1))])).collect();
    let antipode = QMat::from_entries(n, n, (0..n).map(|j| ((n - j) % n, j, rat(1))));
    HopfAlgebra::new(mult, comult, QMat::unit(n, 0), vec![rat(1); n], antipode).expect("cyclic group algebra")
}

/// Sweedler's 4-dimensional Hopf algebra, basis `1, g, x, gx` with `g² = 1`,
/// `x² = 0`, `xg = −gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
pub fn sweedler() -> HopfAlgebra {
    let v = |k: usize, c: i64| QMat::unit(4, k).scale(&rat(c));
    let z = QMat::zeros(4, 1);
    let mult = vec![
        vec![v(0, 1), v(1, 1), v(2, 1), v(3, 1)],
        vec![v(1, 1), v(0, 1), v(3, 1), v(2, 1)],
        vec![v(2, 1), v(3, -1), z.clone(), z.clone()],
        vec![v(3, 1), v(2, -1), z.clone(), z],
    ];
    let t = |es: &[(usize, usize)]| QMat::from_entries(4, 4, es.iter().map(|&(a, b)| (a, b, rat(1))));
    let comult = vec![t(&[(0, 0)]), t(&[(1, 1)]), t(&[(2, 0), (1, 2)]), t(&[(3, 1), (0, 3)])];
    let antipode = QMat::from_entries(4, 4, [(0, 0, rat(1)), (1, 1, rat(1)), (3, 2, rat(-1)), (2, 3, rat(1))]);
    HopfAlgebra::new(mult, comult, QMat::unit(4, 0), vec![rat(1), rat(1), rat(0), rat(0)], antipode).expect("Sweedler algebra")
}

/// Quantum double `DB = B ⊗ B°`, basis `e_a ⊗ e^c` at index `a·n + c`, with `R`.
#[derive(Clone, Debug)]
pub struct QuantumDouble {
    pub base: HopfAlgebra,
    pub dual: HopfAlgebra,
    pub double: HopfAlgebra,
    /// `R = Σ_i (e_i ⊗ 1) ⊗ (1 ⊗ e^i)` as a coefficient matrix on `DB ⊗ DB`.
    pub r: QMat,
}

impl QuantumDouble {
    pub fn embed_base(&self, b: &QMat) -> QMat {
        let eps = QMat::column(self.base.counit.clone());
        b.kron(&eps)
    }

    pub fn embed_dual(&self, f: &QMat) -> QMat {
        self.base.unit.kron(f)
    }
}

/// Builds the double from the Sweedler-leg product formula
/// `(b⊗f)(b'⊗f') = ⟨S⁻¹(b'₁), f₁⟩⟨b'₃, f₃⟩ b b'₂ ⊗ f₂ f'`.
pub fn quantum_double(h: &HopfAlgebra) -> Result<QuantumDouble> {
    let n = h.dim;
    let big = n * n;
    let dual = h.dual_cop()?;
    let d3: Vec<Tensor3> = (0..n).map(|k| h.delta3(k)).collect();
    let f3: Vec<Tensor3> = (0..n).map(|k| dual.delta3(k)).collect();
    let mut mult = vec![vec![QMat::zeros(big, 1); big]; big];
    for a in 0..n {
        for c in 0..n {
            for p in 0..n {
                for s in 0..n {
                    let mut acc = QMat::zeros(big, 1);
                    for ([x, y, z], bc) in &d3[p] {
                        for ([u, v, w], fc) in &f3[c] {
                            if z != w {
                                continue;
                            }
                            let pair = h.antipode_inv.get(*u, *x);
                            if pair.is_zero() {
                                continue;
                            }
                            let coeff = bc * fc * pair;
                            let left = &h.mult[a][*y];
                            let right = &dual.mult[*v][s];
                            for (i, _, l) in left.iter() {
                                for (j, _, r) in right.iter() {
                                    acc.add_at(i * n + j, 0, &coeff.mul(&l.mul(r)));
                                }
                            }
                        }
                    }
                    mult[a * n + c][p * n + s] = acc;
                }
            }
        }
    }
    let comult = (0..big)
        .map(|k| {
            let (a, c) = (k / n, k % n);
            let mut t = QMat::zeros(big, big);
            for (a1, a2, x) in h.comult[a].iter() {
                for (c1, c2, y) in dual.comult[c].iter() {
                    t.add_at(a1 * n + c1, a2 * n + c2, &x.mul(y));
                }
            }
            t
        })
        .collect();
    let unit = h.unit.kron(&dual.unit);
    let counit: Vec<Rational> = (0..big).map(|k| h.counit[k / n].mul(&dual.counit[k % n])).collect();
    let mut pre = HopfAlgebra {
        dim: big,
        mult,
        comult,
        unit,
        counit,
        antipode: QMat::identity(big),
        antipode_inv: QMat::identity(big),
    };
    let mut antipode = QMat::zeros(big, big);
    for k in 0..big {
        let (a, c) = (k / n, k % n);
        let sf = h.unit.kron(&dual.antipode.col(c));
        let sb = h.antipode.col(a).kron(&dual.unit);
        let col = pre.mul(&sf, &sb);
        for (i, _, x) in col.iter() {
            antipode.set(i, k, x.clone());
        }
    }
    pre.antipode_inv = antipode.inverse().map_err(|_| Error::Invalid("double antipode is not invertible".into()))?;
    pre.antipode = antipode;
    let mut r = QMat::zeros(big, big);
    for i in 0..n {
        let left = h.basis(i).kron(&dual.unit);
        let right = h.unit.kron(&dual.basis(i));
        r = r.add(&left.mul(&right.transpose()));
    }
    Ok(QuantumDouble { base: h.clone(), dual, double: pre, r })
}

/// Hopf axioms for `DB`, Hopf subalgebras and the quasitriangularity identities of `R`.
pub fn verify_quantum_double(q: &QuantumDouble) -> Vec<Check> {
    let d = &q.double;
    let n = q.base.dim;
    let mut out: Vec<Check> = verify_hopf(d).into_iter().map(|c| c.prefixed("double")).collect();
    let sub = |src: &HopfAlgebra, emb: &dyn Fn(&QMat) -> QMat| {
        (0..n).all(|i| {
            let x = emb(&src.basis(i));
            let alg = (0..n).all(|j| d.mul(&x, &emb(&src.basis(j))) == emb(&src.mult[i][j]));
            let co = {
                let t = &src.comult[i];
                let img = t.iter().fold(QMat::zeros(d.dim, d.dim), |acc, (a, b, c)| {
                    acc.add(&emb(&src.basis(a)).mul(&emb(&src.basis(b)).transpose()).scale(c))
                });
                d.delta(&x) == img
            };
            alg && co
        })
    };
    out.push(Check::from_bool("base-subalgebra", sub(&q.base, &|b| q.embed_base(b)), || "B is not a Hopf subalgebra".into()));
    out.push(Check::from_bool("dual-subalgebra", sub(&q.dual, &|f| q.embed_dual(f)), || "B° is not a Hopf subalgebra".into()));
    let r_inv = d.antipode_left(&q.r);
    let one = d.tensor_unit();
    let invertible = d.mul2(&q.r, &r_inv) == one && d.mul2(&r_inv, &q.r) == one;
    out.push(Check::from_bool("R-invertible", invertible, || "(S ⊗ id)R is not the inverse of R".into()));
    let bad = (0..d.dim).find(|&k| {
        let dx = &d.comult[k];
        d.mul2(&q.r, dx) != d.mul2(&dx.transpose(), &q.r)
    });
    out.push(Check::from_bool("R-intertwines-coproduct", bad.is_none(), || format!("RΔ(x) != Δᵒᵖ(x)R on basis {}", bad.unwrap())));
    let r13 = d.embed(&q.r, [0, 2]);
    let r23 = d.embed(&q.r, [1, 2]);
    let r12 = d.embed(&q.r, [0, 1]);
    out.push(Check::from_bool("(Δ⊗id)R = R13 R23", d.delta_on_leg(&q.r, 0) == d.mul3(&r13, &r23), || "first coproduct identity fails".into()));
    out.push(Check::from_bool("(id⊗Δ)R = R13 R12", d.delta_on_leg(&q.r, 1) == d.mul3(&r13, &r12), || "second coproduct identity fails".into()));
    out
}

/// Drinfeld–Yetter module: `action[i] = π(e_i)`, coaction `v ↦ Σ_k e_k ⊗ coaction[k] v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfDYModule {
    pub dim: usize,
    pub action: Vec<QMat>,
    pub coaction: Vec<QMat>,
}

impl HopfDYModule {
    pub fn new(action: Vec<QMat>, coaction: Vec<QMat>) -> Result<Self> {
        let dim = action.first().map_or(0, |m| m.rows());
        if action.len() != coaction.len() || action.iter().chain(&coaction).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Dimension("action and coaction must be square of one size".into()));
        }
        Ok(HopfDYModule { dim, action, coaction })
    }

    pub fn act(&self, x: &QMat) -> QMat {
        x.iter().fold(QMat::zeros(self.dim, self.dim), |acc, (i, _, c)| acc.add(&self.action[i].scale(c)))
    }

    pub fn trivial(h: &HopfAlgebra) -> Self {
        let action = h.counit.iter().map(|c| QMat::scalar(1, c.clone())).collect();
        let coaction = (0..h.dim).map(|k| QMat::scalar(1, h.unit.get(k, 0))).collect();
        HopfDYModule { dim: 1, action, coaction }
    }

    /// `B` with `b ▷ v = b₂ v S⁻¹(b₁)` and coaction `v ↦ v₂ ⊗ v₁`.
    pub fn regular(h: &HopfAlgebra) -> Self {
        let n = h.dim;
        let action = (0..n)
            .map(|b| {
                let mut m = QMat::zeros(n, n);
                for (b1, b2, c) in h.comult[b].iter() {
                    for v in 0..n {
                        let img = h.mul(&h.mul(&h.basis(b2), &h.basis(v)), &h.antipode_inv.col(b1));
                        for (i, _, x) in img.iter() {
                            m.add_at(i, v, &c.mul(x));
                        }
                    }
                }
                m
            })
            .collect();
        let coaction = (0..n)
            .map(|k| QMat::from_entries(n, n, (0..n).flat_map(|v| h.comult[v].iter().filter(|(_, b, _)| *b == k).map(move |(a, _, x)| (a, v, x.clone())).collect::<Vec<_>>())))
            .collect();
        HopfDYModule { dim: n, action, coaction }
    }
}

/// Module, comodule and the compatibility
/// `π*π = (m^{(3)} ⊗ π)(13)(24)(S⁻¹ ⊗ id⁴)(Δ^{(3)} ⊗ π*)`.
pub fn verify_hopf_dy(h: &HopfAlgebra, v: &HopfDYModule) -> Vec<Check> {
    let n = h.dim;
    if v.action.len() != n {
        return vec![Check::fail("base", format!("module has {} generators, base {n}", v.action.len()))];
    }
    let id = QMat::identity(v.dim);
    let module = (0..n).all(|i| (0..n).all(|j| v.action[i].mul(&v.action[j]) == v.act(&h.mult[i][j]))) && v.act(&h.unit) == id;
    let comodule = (0..n).all(|i| (0..n).all(|j| {
        let lhs = v.coaction[i].mul(&v.coaction[j]);
        let rhs = (0..n).fold(QMat::zeros(v.dim, v.dim), |acc, k| {
            let c = h.comult[k].get(i, j);
            if c.is_zero() { acc } else { acc.add(&v.coaction[k].scale(&c)) }
        });
        lhs == rhs
    })) && (0..n).fold(QMat::zeros(v.dim, v.dim), |acc, k| acc.add(&v.coaction[k].scale(&h.counit[k]))) == id;
    let mut bad = None;
    for a in 0..n {
        let lhs: Vec<QMat> = (0..n).map(|l| v.coaction[l].mul(&v.action[a])).collect();
        let mut rhs = vec![QMat::zeros(v.dim, v.dim); n];
        for ([x, y, z], c) in h.delta3(a) {
            for k in 0..n {
                let elem = h.mul(&h.mul(&h.basis(z), &h.basis(k)), &h.antipode_inv.col(x));
                if elem.is_zero() {
                    continue;
                }
                let op = v.action[y].mul(&v.coaction[k]).scale(&c);
                for (l, _, e) in elem.iter() {
                    rhs[l] = rhs[l].add(&op.scale(e));
                }
            }
        }
        if lhs != rhs {
            bad = Some(a);
            break;
        }
    }
    vec![
        Check::from_bool("module", module, || "π is not a representation".into()),
        Check::from_bool("comodule", comodule, || "π* is not a comodule".into()),
        Check::from_bool("compatibility", bad.is_none(), || format!("fails on basis element {}", bad.unwrap())),
    ]
}

/// `π_{V⊗W} = (π_V ⊗ π_W)(23)(Δ ⊗ id)` and `π*_{V⊗W} = (m²¹ ⊗ id)(23)(π*_V ⊗ π*_W)`.
pub fn hopf_dy_tensor(h: &HopfAlgebra, v: &HopfDYModule, w: &HopfDYModule) -> Result<HopfDYModule> {
    let n = h.dim;
    if v.action.len() != n || w.action.len() != n {
        return Err(Error::Invalid("modules over a different Hopf algebra".into()));
    }
    let action = (0..n)
        .map(|k| h.comult[k].iter().fold(QMat::zeros(v.dim * w.dim, v.dim * w.dim), |acc, (p, q, c)| acc.add(&v.action[p].kron(&w.action[q]).scale(c))))
        .collect();
    let mut coaction = vec![QMat::zeros(v.dim * w.dim, v.dim * w.dim); n];
    for i in 0..n {
        for j in 0..n {
            let t = v.coaction[i].kron(&w.coaction[j]);
            if t.is_zero() {
                continue;
            }
            for (k, _, c) in h.mult[j][i].iter() {
                coaction[k] = coaction[k].add(&t.scale(c));
            }
        }
    }
    HopfDYModule::new(action, coaction)
}

/// `R_{VW} = (π_V ⊗ id)(12)(id ⊗ π*_W)` and its antipode inverse.
pub fn hopf_dy_braiding(h: &HopfAlgebra, v: &HopfDYModule, w: &HopfDYModule) -> (QMat, QMat) {
    let n = h.dim;
    let d = v.dim * w.dim;
    let mut r = QMat::zeros(d, d);
    let mut r_inv = QMat::zeros(d, d);
    for i in 0..n {
        r = r.add(&v.action[i].kron(&w.coaction[i]));
        r_inv = r_inv.add(&v.act(&h.antipode.col(i)).kron(&w.coaction[i]));
    }
    (r, r_inv)
}

/// `β_{VW} = (12) ∘ R_{VW}`.
pub fn hopf_dy_beta(h: &HopfAlgebra, v: &HopfDYModule, w: &HopfDYModule) -> QMat {
    flip::<Rational>(v.dim, w.dim).mul(&hopf_dy_braiding(h, v, w).0)
}

/// Whether `f: V → V'` commutes with the action and the coaction.
pub fn is_dy_morphism(v: &HopfDYModule, w: &HopfDYModule, f: &QMat) -> bool {
    v.action.iter().zip(&w.action).all(|(a, b)| f.mul(a) == b.mul(f))
        && v.coaction.iter().zip(&w.coaction).all(|(a, b)| f.mul(a) == b.mul(f))
}

/// Basis of the space of DY morphisms `V → W`.
pub fn dy_morphisms(v: &HopfDYModule, w: &HopfDYModule) -> Vec<QMat> {
    let (dv, dw) = (v.dim, w.dim);
    let mut blocks = Vec::new();
    for (a, b) in v.action.iter().zip(&w.action).chain(v.coaction.iter().zip(&w.coaction)) {
        // vec(F A - B F) = (Aᵀ ⊗ I - I ⊗ B) vec(F) for column-major vec; rows of F are w, cols are v.
        let lhs = a.transpose().kron(&QMat::identity(dw)).sub(&QMat::identity(dv).kron(b));
        blocks.push(lhs);
    }
    let sys = SparseMatrix::vstack(&blocks);
    nullspace(&sys)
        .into_iter()
        .map(|x| QMat::from_entries(dw, dv, x.iter().map(|(k, _, c)| (k % dw, k / dw, c.clone()))))
        .collect()
}

/// Braiding checks on `V, W, U`: inverse, DY morphism, hexagons, Yang–Baxter on `V^{⊗3}`, naturality.
pub fn verify_hopf_braiding(h: &HopfAlgebra, v: &HopfDYModule, w: &HopfDYModule, u: &HopfDYModule) -> Result<Vec<Check>> {
    let (r, r_inv) = hopf_dy_braiding(h, v, w);
    let id = QMat::identity(v.dim * w.dim);
    let mut out = vec![Check::from_bool("R-inverse", r.mul(&r_inv) == id && r_inv.mul(&r) == id, || "antipode formula does not invert R".into())];
    let vw = hopf_dy_tensor(h, v, w)?;
    let wv = hopf_dy_tensor(h, w, v)?;
    let beta = hopf_dy_beta(h, v, w);
    out.push(Check::from_bool("beta-morphism", is_dy_morphism(&vw, &wv, &beta), || "β is not a DY morphism".into()));
    let iv = |m: &HopfDYModule| QMat::identity(m.dim);
    let wu = hopf_dy_tensor(h, w, u)?;
    let lhs1 = hopf_dy_beta(h, v, &wu);
    let rhs1 = iv(w).kron(&hopf_dy_beta(h, v, u)).mul(&hopf_dy_beta(h, v, w).kron(&iv(u)));
    out.push(Check::from_bool("hexagon/left", lhs1 == rhs1, || "β_{V,W⊗U} != (id ⊗ β_{VU})(β_{VW} ⊗ id)".into()));
    let lhs2 = hopf_dy_beta(h, &vw, u);
    let rhs2 = hopf_dy_beta(h, v, u).kron(&iv(w)).mul(&iv(v).kron(&hopf_dy_beta(h, w, u)));
    out.push(Check::from_bool("hexagon/right", lhs2 == rhs2, || "β_{V⊗W,U} != (β_{VU} ⊗ id)(id ⊗ β_{WU})".into()));
    out.push(yang_baxter(h, v));
    let nat = dy_morphisms(v, v).iter().all(|f| {
        let fw = f.kron(&iv(w));
        fw.mul(&r) == r.mul(&fw)
    }) && dy_morphisms(w, w).iter().all(|g| {
        let vg = iv(v).kron(g);
        vg.mul(&r) == r.mul(&vg)
    });
    out.push(Check::from_bool("naturality", nat, || "R does not commute with DY endomorphisms".into()));
    Ok(out)
}

/// `(β ⊗ 1)(1 ⊗ β)(β ⊗ 1) = (1 ⊗ β)(β ⊗ 1)(1 ⊗ β)` on `V^{⊗3}`.
pub fn yang_baxter(h: &HopfAlgebra, v: &HopfDYModule) -> Check {
    let b = hopf_dy_beta(h, v, v);
    let i = QMat::identity(v.dim);
    let b12 = b.kron(&i);
    let b23 = i.kron(&b);
    let ok = b12.mul(&b23).mul(&b12) == b23.mul(&b12).mul(&b23);
    Check::from_bool("yang-baxter", ok, || "braid relation for β fails on V⊗V⊗V".into())
}

/// `DB`-action `ρ(e_a ⊗ e^c) = π(e_a) π*(e^c)` of a DY module.
pub fn db_module_from_dy(q: &QuantumDouble, v: &HopfDYModule) -> Vec<QMat> {
    let n = q.base.dim;
    (0..n * n).map(|k| v.action[k / n].mul(&v.coaction[k % n])).collect()
}

/// DY module of a `DB`-module: restriction to `B ⊗ 1` and `1 ⊗ B°`.
pub fn dy_from_db_module(q: &QuantumDouble, rho: &[QMat]) -> Result<HopfDYModule> {
    let act = |x: &QMat| {
        let dim = rho[0].rows();
        x.iter().fold(QMat::zeros(dim, dim), |acc, (k, _, c)| acc.add(&rho[k].scale(c)))
    };
    let n = q.base.dim;
    HopfDYModule::new(
        (0..n).map(|a| act(&q.embed_base(&q.base.basis(a)))).collect(),
        (0..n).map(|c| act(&q.embed_dual(&q.dual.basis(c)))).collect(),
    )
}

/// Whether `ρ` is a representation of `DB`.
pub fn is_db_module(q: &QuantumDouble, rho: &[QMat]) -> bool {
    let d = &q.double;
    let dim = rho[0].rows();
    let act = |x: &QMat| x.iter().fold(QMat::zeros(dim, dim), |acc, (k, _, c)| acc.add(&rho[k].scale(c)));
    act(&d.unit) == QMat::identity(dim) && (0..d.dim).all(|i| (0..d.dim).all(|j| rho[i].mul(&rho[j]) == act(&d.mult[i][j])))
}

/// The left regular `DB`-module.
pub fn regular_db_module(q: &QuantumDouble) -> Vec<QMat> {
    let d = &q.double;
    (0..d.dim)
        .map(|i| QMat::from_entries(d.dim, d.dim, (0..d.dim).flat_map(|j| d.mult[i][j].iter().map(move |(k, _, c)| (k, j, c.clone())).collect::<Vec<_>>())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    fn fixtures() -> Vec<HopfAlgebra> {
        vec![cyclic_group_algebra(2), cyclic_group_algebra(3), sweedler()]
    }

    #[test]
    fn fixtures_are_hopf() {
        for h in fixtures() {
            assert!(all_passed(&verify_hopf(&h)), "{:?}", verify_hopf(&h));
            let d = h.dual_cop().unwrap();
            assert!(all_passed(&verify_hopf(&d)), "{:?}", verify_hopf(&d));
        }
    }

    #[test]
    fn broken_fixture_fails() {
        let mut h = sweedler();
        h.comult[2] = QMat::from_entries(4, 4, [(2, 0, rat(1)), (0, 2, rat(1))]);
        assert!(!all_passed(&verify_hopf(&h)));
    }

    #[test]
    fn doubles_are_quasitriangular() {
        for h in fixtures() {
            let q = quantum_double(&h).unwrap();
            assert_eq!(q.double.dim, h.dim * h.dim);
            let checks = verify_quantum_double(&q);
            assert!(all_passed(&checks), "{checks:?}");
        }
    }

    #[test]
    fn dy_modules_and_braiding() {
        for h in fixtures() {
            let reg = HopfDYModule::regular(&h);
            let triv = HopfDYModule::trivial(&h);
            assert!(all_passed(&verify_hopf_dy(&h, &reg)), "{:?}", verify_hopf_dy(&h, &reg));
            assert!(all_passed(&verify_hopf_dy(&h, &triv)));
            let t = hopf_dy_tensor(&h, &reg, &reg).unwrap();
            assert!(all_passed(&verify_hopf_dy(&h, &t)));
            let checks = verify_hopf_braiding(&h, &reg, &reg, &triv).unwrap();
            assert!(all_passed(&checks), "{checks:?}");
            let checks = verify_hopf_braiding(&h, &triv, &reg, &reg).unwrap();
            assert!(all_passed(&checks), "{checks:?}");
            let (r, _) = hopf_dy_braiding(&h, &reg, &triv);
            assert!(r.is_identity());
        }
    }

    #[test]
    fn z2_regular_r_matrix() {
        let h = cyclic_group_algebra(2);
        let reg = HopfDYModule::regular(&h);
        let (r, r_inv) = hopf_dy_braiding(&h, &reg, &reg);
        assert_eq!(r.rows(), 4);
        assert_eq!(r, QMat::diagonal(vec![rat(1), rat(1), rat(1), rat(1)]));
        assert!(r.mul(&r_inv).is_identity());
    }

    #[test]
    fn db_round_trip() {
        for h in fixtures() {
            let q = quantum_double(&h).unwrap();
            let reg = HopfDYModule::regular(&h);
            let rho = db_module_from_dy(&q, &reg);
            assert!(is_db_module(&q, &rho));
            assert_eq!(dy_from_db_module(&q, &rho).unwrap(), reg);
            let big = regular_db_module(&q);
            assert!(is_db_module(&q, &big));
            let v = dy_from_db_module(&q, &big).unwrap();
            assert!(all_passed(&verify_hopf_dy(&h, &v)));
            assert_eq!(db_module_from_dy(&q, &v), big);
        }
    }
}
