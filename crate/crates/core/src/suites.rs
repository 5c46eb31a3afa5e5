//! Named verification suites and the thirteen acceptance criteria as check lists.
//!
//! Suites run independent check groups in parallel and keep their output in a fixed order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{nullspace, ratio, QMat, QqMat, Rational};
use crate::associator::{check_associator_axioms_truncated, drinfeld_coefficient};
use crate::bialgebra::{drinfeld_double, dy_suite, sl2_borel, sl2_borel_standard, DYModule};
use crate::braid::coxeter_labels_from_gcm;
use crate::catalog::{catalan, connected_graphs, finite_and_affine_gcms, graphs_up_to_isomorphism};
use crate::coxeter::{
    braid_reps_from_witness, broken_lax_fixture, classical_coproduct_fixture, classical_witness, perturbed_classical_fixture,
    quantum_coproduct_fixture, quantum_witness, verify_coproduct_axiom, verify_lax_d_algebra,
};
use crate::diagram::{chain_to_nested_set, enumerate_nested_sets, move_graph_components, Diagram, NestedSet, VSet};
use crate::error::{Error, Result};
use crate::hopf::{
    cyclic_group_algebra, dy_from_db_module, quantum_double, regular_db_module, sweedler, verify_hopf, verify_hopf_braiding,
    verify_hopf_dy, verify_quantum_double, yang_baxter, HopfAlgebra, HopfDYModule,
};
use crate::kacmoody::{check_manin_triple, classical_modules, extended_km_data, manin_triple};
use crate::quantum::{
    build_rank2_module, build_sl2_module, classical_limit_signs, coproduct_action, coproduct_identity_sides,
    half_balance_failures, highest_weight_submodule, verify_coxeter_identities, weyl_natural, QuantumGroupData, WeightModule,
    COPRODUCT_ORIENTATION,
};
use crate::realization::{
    canonical_realization, cartan_diagrammatic_test, counterexample, int_matrix, minimal_realization, morphism_space, BoundSource,
    Realization, Verdict,
};
use crate::report::{Check, Report};

/// Suite names accepted by the CLI.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Suite {
    Classical,
    QuantumSl2,
    QuantumA2,
    QuantumB2,
    Hopf,
    Associator,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Classical, Suite::QuantumSl2, Suite::QuantumA2, Suite::QuantumB2, Suite::Hopf, Suite::Associator, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Classical => "classical",
            Suite::QuantumSl2 => "quantum-sl2",
            Suite::QuantumA2 => "quantum-a2",
            Suite::QuantumB2 => "quantum-b2",
            Suite::Hopf => "hopf",
            Suite::Associator => "associator",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::NotFound(format!("unknown suite `{s}`; expected one of classical, quantum-sl2, quantum-a2, quantum-b2, hopf, associator, all")))
    }
}

/// Options shared by the suites.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Runs the associator suite with the coefficient 1/12 instead of 1/24.
    pub break_coefficient: bool,
    /// Seed for the random realization pairs.
    pub seed: u64,
}

type Group<'a> = Box<dyn Fn() -> Result<Vec<Check>> + Send + Sync + 'a>;

fn run_groups(groups: Vec<(&str, Group<'_>)>) -> Result<Vec<Check>> {
    let results: Vec<Result<Vec<Check>>> = groups
        .par_iter()
        .map(|(prefix, g)| g().map(|cs| cs.into_iter().map(|c| c.prefixed(prefix)).collect()))
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Caps the global thread pool from `COXKIT_THREADS`; a no-op when unset or already built.
pub fn configure_threads_from_env() {
    if let Some(n) = std::env::var("COXKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Runs a suite; the report lists checks in a fixed order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Report> {
    let checks = match suite {
        Suite::Classical => classical_checks(opts)?,
        Suite::QuantumSl2 => quantum_sl2_checks()?,
        Suite::QuantumA2 => quantum_a2_checks()?,
        Suite::QuantumB2 => quantum_b2_checks()?,
        Suite::Hopf => hopf_checks()?,
        Suite::Associator => associator_checks(opts.break_coefficient)?,
        Suite::All => {
            let mut out = Vec::new();
            for s in &Suite::ALL[..6] {
                out.extend(run_suite(*s, opts)?.checks.into_iter().map(|c| c.prefixed(s.name())));
            }
            out
        }
    };
    Ok(Report::new(suite.name(), checks))
}

fn classical_checks(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let seed = opts.seed;
    let groups: Vec<(&str, Group)> = vec![
        ("nested", Box::new(|| Ok([c1_maximal_size()?, c2_bracketings()?, c3_chain_quotient()?].concat()))),
        ("realization", Box::new(move || Ok([c4_diagrammatic()?, c5_torsor(seed)?].concat()))),
        ("manin", Box::new(c6_manin)),
        ("dy", Box::new(c7_drinfeld_yetter)),
        ("tits", Box::new(classical_coxeter_checks)),
    ];
    run_groups(groups)
}

/// Criterion 1: maximal nested sets on connected diagrams with at most 6 vertices have `|D| + 1` members.
pub fn c1_maximal_size() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=6 {
        let graphs = connected_graphs(n);
        let mut bad = None;
        let mut total = 0;
        for d in &graphs {
            for h in enumerate_nested_sets(d, d.all(), VSet::EMPTY, true)? {
                total += 1;
                if h.len() != n + 1 && bad.is_none() {
                    bad = Some(format!("{h} on {:?} has {} members", d.edges(), h.len()));
                }
            }
        }
        out.push(Check::from_bool(format!("maximal-size/{n}-vertices"), bad.is_none() && total > 0, || bad.unwrap_or_default()));
    }
    Ok(out)
}

/// Criterion 2: `|Mns(A_{n−1})|` is the number of complete bracketings of `n` letters.
pub fn c2_bracketings() -> Result<Vec<Check>> {
    (3..=7)
        .map(|n| {
            let d = Diagram::type_a(n - 1);
            let got = enumerate_nested_sets(&d, d.all(), VSet::EMPTY, true)?.len() as u64;
            let want = catalan(n as u64 - 1);
            Ok(Check::from_bool(format!("bracketings/n={n}"), got == want, || format!("{got} maximal nested sets, {want} bracketings")))
        })
        .collect()
}

/// Checks that chain components map bijectively onto `Ns(B, B')`; returns a failure description.
pub fn chain_quotient_failure(d: &Diagram, b: VSet, lower: VSet) -> Result<Option<String>> {
    let comps = move_graph_components(d, b, lower)?;
    let mut images = BTreeSet::new();
    for comp in &comps {
        let img: BTreeSet<NestedSet> = comp.iter().map(|c| chain_to_nested_set(d, c)).collect();
        if img.len() != 1 {
            return Ok(Some(format!("a component over ({b}, {lower}) has {} images", img.len())));
        }
        if !images.insert(img.into_iter().next().expect("one image")) {
            return Ok(Some(format!("two components over ({b}, {lower}) share an image")));
        }
    }
    let all: BTreeSet<NestedSet> = enumerate_nested_sets(d, b, lower, false)?.into_iter().collect();
    if images != all {
        return Ok(Some(format!("image misses {} nested sets over ({b}, {lower})", all.difference(&images).count())));
    }
    Ok(None)
}

/// Criterion 3: chain components correspond to nested sets for every diagram with at most 5 vertices.
pub fn c3_chain_quotient() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=5 {
        let graphs = graphs_up_to_isomorphism(n);
        let failures: Vec<Option<String>> = graphs
            .par_iter()
            .map(|d| -> Result<Option<String>> {
                for b in d.all().subsets() {
                    for lower in b.subsets() {
                        if let Some(f) = chain_quotient_failure(d, b, lower)? {
                            return Ok(Some(format!("{:?}: {f}", d.edges())));
                        }
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?;
        let bad = failures.into_iter().flatten().next();
        out.push(Check::from_bool(format!("chain-quotient/{n}-vertices"), bad.is_none(), || bad.unwrap_or_default()));
    }
    Ok(out)
}

/// Expected obstruction data of the bundled counterexamples: subset, required and bound dimension.
pub const COUNTEREXAMPLE_WITNESSES: [(&[usize], usize, usize); 3] = [(&[1], 2, 1), (&[1, 2], 3, 2), (&[0, 1], 3, 2)];

/// Criterion 4: the counterexamples are obstructed and finite/affine GCMs of rank ≤ 4 are diagrammatic.
pub fn c4_diagrammatic() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (k, (subset, req, bound)) in COUNTEREXAMPLE_WITNESSES.iter().enumerate() {
        let r = cartan_diagrammatic_test(&counterexample(k + 1).expect("bundled"))?;
        let ok = match &r.verdict {
            Verdict::Obstructed { witness } => {
                witness.subset == VSet::from_vertices(subset.iter().copied())
                    && witness.required_dim == *req
                    && witness.bound_dim == *bound
                    && !witness.sources.is_empty()
                    && witness.sources.iter().all(|s| !matches!(s, BoundSource::Forced))
            }
            _ => false,
        };
        out.push(Check::from_bool(format!("diagrammatic/counterexample-{}", k + 1), ok, || format!("verdict {}", r.verdict.name())));
    }
    let gcms = finite_and_affine_gcms(4);
    let bad: Vec<String> = gcms
        .par_iter()
        .filter_map(|a| match cartan_diagrammatic_test(&int_matrix(a)) {
            Ok(r) if r.verdict == Verdict::DiagrammaticBySufficientCondition => None,
            Ok(r) => Some(format!("{a:?}: {}", r.verdict.name())),
            Err(e) => Some(format!("{a:?}: {e}")),
        })
        .collect();
    out.push(Check::from_bool(format!("diagrammatic/finite-affine-rank-le-4 ({} classes)", gcms.len()), bad.is_empty(), || bad.join("; ")));
    Ok(out)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=3))
}

fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> QMat {
    let mut l = QMat::identity(d);
    let mut u = QMat::identity(d);
    for i in 0..d {
        for j in 0..i {
            l.set(i, j, random_rational(rng));
            u.set(j, i, random_rational(rng));
        }
    }
    l.mul(&u)
}

/// Random realization of `a`: a minimal or canonical one with extra null directions in a random basis.
pub fn random_realization(rng: &mut ChaCha8Rng, a: &QMat) -> Result<Realization> {
    let base = if rng.gen_bool(0.5) { minimal_realization(a)? } else { canonical_realization(a)? };
    let v = base.with_null_dims(rng.gen_range(0..=2));
    v.with_basis_change(&random_invertible(rng, v.dim()))
}

/// `(n, d1, d2, computed, expected)` for the random realization pairs of criterion 5.
pub fn torsor_samples(seed: u64) -> Result<Vec<(usize, usize, usize, usize, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for k in 0..10 {
        let n = if k % 2 == 0 { 2 } else { 3 };
        let a = QMat::from_dense((0..n).map(|_| (0..n).map(|_| random_rational(&mut rng)).collect()).collect());
        let v1 = random_realization(&mut rng, &a)?;
        let v2 = random_realization(&mut rng, &a)?;
        let space = morphism_space(&v1, &v2)?;
        let quotient = v1.dim() - v1.coroots.rank();
        let perp = nullspace(&v2.roots).len();
        out.push((n, v1.dim(), v2.dim(), space.dim(), quotient * perp));
    }
    Ok(out)
}

/// Criterion 5: the morphism space between random realizations is a torsor of the predicted dimension.
pub fn c5_torsor(seed: u64) -> Result<Vec<Check>> {
    Ok(torsor_samples(seed)?
        .into_iter()
        .enumerate()
        .map(|(k, (n, d1, d2, got, want))| {
            Check::from_bool(format!("torsor/sample-{}", k + 1), got == want, || format!("n = {n}, dims {d1} → {d2}: dimension {got}, expected {want}"))
        })
        .collect())
}

/// Criterion 6: Manin triple axioms on the extended `sl_2` and `sl_3` models.
pub fn c6_manin() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, a) in [("sl2", vec![vec![2]]), ("sl3", vec![vec![2, -1], vec![-1, 2]])] {
        let t = manin_triple(&extended_km_data(&a)?)?;
        out.extend(check_manin_triple(&t).into_iter().map(|c| c.prefixed(name)));
    }
    Ok(out)
}

/// Classical DY fixtures over the `sl_2` Borel with symmetrizer `d`.
pub fn borel_fixtures(d: i64) -> Result<Vec<(String, DYModule)>> {
    let b = sl2_borel(d);
    Ok(vec![
        ("1".into(), DYModule::trivial(2)),
        ("V".into(), sl2_borel_standard(d)),
        ("D".into(), DYModule::adjoint_of_double(&drinfeld_double(&b)?)),
    ])
}

/// Criterion 7: DY compatibility, CYBE and the `Ω`-morphism property.
pub fn c7_drinfeld_yetter() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for d in [1, 2] {
        out.extend(dy_suite(&sl2_borel(d), &borel_fixtures(d)?)?.into_iter().map(|c| c.prefixed(&format!("borel-d{d}"))));
    }
    Ok(out)
}

fn classical_coxeter_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, a) in [("a2", vec![vec![2, -1], vec![-1, 2]]), ("b2", vec![vec![2, -1], vec![-2, 2]])] {
        let mods = classical_modules(&a)?;
        let w = classical_witness(coxeter_labels_from_gcm(&a)?, &mods)?;
        out.extend(w.verify_braid()?.into_iter().map(|c| c.prefixed(name)));
        out.extend(verify_lax_d_algebra(&w.lax_d_algebra()?)?.into_iter().map(|c| c.prefixed(&format!("{name}/lax"))));
        for (nv, v) in &mods {
            for (nw, x) in &mods {
                for i in 0..a.len() {
                    let fx = classical_coproduct_fixture(&format!("{nv}⊗{nw}/S{}", i + 1), (&v[i].0, &v[i].1), (&x[i].0, &x[i].1))?;
                    out.push(verify_coproduct_axiom(&fx).prefixed(name));
                }
            }
        }
        let (e, f) = &mods[0].1[0];
        let bad = perturbed_classical_fixture("perturbed", (e, f), (e, f))?;
        out.push(Check::from_bool(format!("{name}/control/non-group-like"), !verify_coproduct_axiom(&bad).passed(), || {
            "perturbed operator satisfies the coproduct axiom".into()
        }));
    }
    let broken = verify_lax_d_algebra(&broken_lax_fixture()?)?;
    out.push(Check::from_bool("control/non-commuting-orthogonal", broken.iter().any(|c| !c.passed()), || "broken fixture passes".into()));
    Ok(out)
}

fn sl2_modules(max: usize) -> Result<Vec<(String, WeightModule)>> {
    (0..=max).map(|m| Ok((format!("V{m}"), build_sl2_module(m)?))).collect()
}

/// Criterion 10: the coproduct identity on `V(1)⊗V(1)`, `V(1)⊗V(2)` and `V(2)⊗V(2)`.
pub fn c10_coproduct() -> Result<Vec<Check>> {
    let data = QuantumGroupData::sl2();
    [(1, 1), (1, 2), (2, 2)]
        .into_iter()
        .map(|(a, b)| {
            let (v, w) = (build_sl2_module(a)?, build_sl2_module(b)?);
            let (l, r) = coproduct_identity_sides(&data, &v, &w, 0, COPRODUCT_ORIENTATION)?;
            Ok(Check::from_bool(format!("coproduct-identity/V{a}⊗V{b}"), l == r, || "Δ²¹(S) ≠ R(S⊗S)".into()))
        })
        .collect()
}

fn classical_limit_checks(data: &QuantumGroupData, modules: &[(String, WeightModule)]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, v) in modules {
        for i in 0..data.rank() {
            let signs = classical_limit_signs(data, v, i)?;
            let ok = signs.as_ref().is_some_and(|s| s.iter().all(|&x| x == 1));
            out.push(Check::from_bool(format!("classical-limit/{name}/S{}", i + 1), ok, || format!("signs {signs:?}")));
        }
    }
    Ok(out)
}

/// `(name, V, W, inclusion)` for highest-weight submodules of tensor squares.
fn inclusions(data: &QuantumGroupData, modules: &[(String, WeightModule)]) -> Result<Vec<(String, WeightModule, WeightModule, QqMat)>> {
    let mut out = Vec::new();
    for (nv, v) in modules.iter().filter(|(_, v)| v.dim > 1 && v.dim <= 4) {
        for (nw, w) in modules.iter().filter(|(_, w)| w.dim > 1 && w.dim <= 4) {
            let t = coproduct_action(data, v, w)?;
            let mut seen = BTreeSet::new();
            for k in 0..t.dim {
                let wt = t.weights[k].clone();
                if !seen.insert(wt.clone()) {
                    continue;
                }
                if let Ok((sub, p)) = highest_weight_submodule(data, &t, &wt) {
                    out.push((format!("{nv}⊗{nw}⊇{wt:?}"), sub, t.clone(), p));
                }
            }
        }
    }
    Ok(out)
}

/// Literal half-balance: `S_i²` commutes with every `E_j`, `F_j`, `K_j` and with module morphisms.
fn half_balance_literal(data: &QuantumGroupData, modules: &[(String, WeightModule)]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, v) in modules {
        for i in 0..data.rank() {
            let bad = half_balance_failures(data, v, i);
            out.push(Check::from_bool(format!("half-balance-literal/{name}/S{}", i + 1), bad.is_empty(), || {
                let list: Vec<String> = bad.iter().map(|(g, j)| format!("{g}{}", j + 1)).collect();
                format!("S_{}² does not commute with {}", i + 1, list.join(", "))
            }));
        }
    }
    for (name, sub, big, p) in inclusions(data, modules)? {
        out.push(Check::from_bool(format!("naturality/{name}"), weyl_natural(data, &sub, &big, &p), || {
            "S_i or S_i² does not commute with the inclusion".into()
        }));
    }
    Ok(out)
}

fn quantum_structure_checks(data: &QuantumGroupData, modules: &[(String, WeightModule)], witness_modules: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (nv, v) in modules.iter().filter(|(_, v)| v.dim > 1 && v.dim <= 4) {
        for (nw, w) in modules.iter().filter(|(_, w)| w.dim > 1 && w.dim <= 4) {
            for i in 0..data.rank() {
                let fx = quantum_coproduct_fixture(&format!("{nv}⊗{nw}/S{}", i + 1), data, v, w, i)?;
                out.push(verify_coproduct_axiom(&fx));
            }
        }
    }
    let small: Vec<(String, WeightModule)> = modules.iter().filter(|(_, v)| v.dim > 1).take(witness_modules).cloned().collect();
    let w = quantum_witness(data, &small)?;
    out.extend(w.verify_braid()?.into_iter().map(|c| c.prefixed("witness")));
    for b in w.labels.diagram.all().subsets().filter(|b| !b.is_empty()) {
        let fam = braid_reps_from_witness(&w, b)?;
        out.push(Check::pass(format!("witness/mns{b}/{}-members", fam.members.len())));
        out.extend(fam.checks.into_iter().map(|c| c.prefixed("witness")));
    }
    out.extend(verify_lax_d_algebra(&w.lax_d_algebra()?)?.into_iter().map(|c| c.prefixed("witness/lax")));
    Ok(out)
}

fn quantum_sl2_checks() -> Result<Vec<Check>> {
    let data = QuantumGroupData::sl2();
    let mods = sl2_modules(3)?;
    let groups: Vec<(&str, Group)> = vec![
        ("identities", Box::new(|| verify_coxeter_identities(&data, &mods, 16))),
        ("balance", Box::new(|| half_balance_literal(&data, &mods))),
        ("structure", Box::new(|| quantum_structure_checks(&data, &mods, 2))),
    ];
    run_groups(groups)
}

/// A₂ modules of dimension at most 8: highest weights (0,0), (1,0), (0,1), (2,0), (0,2), (1,1).
pub fn a2_modules() -> Result<Vec<(String, WeightModule)>> {
    let data = QuantumGroupData::a2();
    [[0, 0], [1, 0], [0, 1], [2, 0], [0, 2], [1, 1]]
        .into_iter()
        .map(|hw| {
            let m = build_rank2_module(&data, hw)?;
            Ok((format!("L{hw:?}"), m))
        })
        .collect()
}

/// B₂ modules of dimension at most 5: trivial, vector (5) and spin (4).
pub fn b2_modules() -> Result<Vec<(String, WeightModule)>> {
    let data = QuantumGroupData::b2();
    [[0, 0], [1, 0], [0, 1]]
        .into_iter()
        .map(|hw| {
            let m = build_rank2_module(&data, hw)?;
            Ok((format!("L{hw:?}"), m))
        })
        .collect()
}

fn braid_checks(data: &QuantumGroupData, modules: &[(String, WeightModule)]) -> Result<Vec<Check>> {
    Ok(verify_coxeter_identities(data, modules, 0)?.into_iter().filter(|c| c.name.starts_with("braid/") || c.name.starts_with("weyl/")).collect())
}

/// Criterion 9: braid relations of `S_1, S_2` on the A₂ and B₂ fixtures.
pub fn c9_quantum_braid() -> Result<Vec<Check>> {
    Ok([
        braid_checks(&QuantumGroupData::a2(), &a2_modules()?)?.into_iter().map(|c| c.prefixed("a2")).collect::<Vec<_>>(),
        braid_checks(&QuantumGroupData::b2(), &b2_modules()?)?.into_iter().map(|c| c.prefixed("b2")).collect(),
    ]
    .concat())
}

/// Criterion 11: classical limit on the sl₂ and A₂ fixtures.
pub fn c11_classical_limit() -> Result<Vec<Check>> {
    Ok([
        classical_limit_checks(&QuantumGroupData::sl2(), &sl2_modules(3)?)?.into_iter().map(|c| c.prefixed("sl2")).collect::<Vec<_>>(),
        classical_limit_checks(&QuantumGroupData::a2(), &a2_modules()?)?.into_iter().map(|c| c.prefixed("a2")).collect(),
    ]
    .concat())
}

/// Criterion 13: literal half-balance on every quantum fixture.
pub fn c13_half_balance() -> Result<Vec<Check>> {
    Ok([
        half_balance_literal(&QuantumGroupData::sl2(), &sl2_modules(3)?)?.into_iter().map(|c| c.prefixed("sl2")).collect::<Vec<_>>(),
        half_balance_literal(&QuantumGroupData::a2(), &a2_modules()?)?.into_iter().map(|c| c.prefixed("a2")).collect(),
        half_balance_literal(&QuantumGroupData::b2(), &b2_modules()?)?.into_iter().map(|c| c.prefixed("b2")).collect(),
    ]
    .concat())
}

fn rank2_checks(data: QuantumGroupData, mods: Vec<(String, WeightModule)>) -> Result<Vec<Check>> {
    let groups: Vec<(&str, Group)> = vec![
        ("identities", Box::new(|| verify_coxeter_identities(&data, &mods, 25))),
        ("balance", Box::new(|| half_balance_literal(&data, &mods))),
        ("structure", Box::new(|| quantum_structure_checks(&data, &mods, 2))),
    ];
    run_groups(groups)
}

fn quantum_a2_checks() -> Result<Vec<Check>> {
    rank2_checks(QuantumGroupData::a2(), a2_modules()?)
}

fn quantum_b2_checks() -> Result<Vec<Check>> {
    rank2_checks(QuantumGroupData::b2(), b2_modules()?)
}

/// Finite Hopf fixtures.
pub fn hopf_fixtures() -> Vec<(&'static str, HopfAlgebra)> {
    vec![("z2", cyclic_group_algebra(2)), ("z3", cyclic_group_algebra(3)), ("sweedler", sweedler())]
}

/// Criterion 8: quantum double axioms and Yang–Baxter on regular DY modules.
pub fn c8_quantum_double() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, h) in hopf_fixtures() {
        out.extend(verify_hopf(&h).into_iter().map(|c| c.prefixed(&format!("{name}/hopf"))));
        let q = quantum_double(&h)?;
        out.extend(verify_quantum_double(&q).into_iter().map(|c| c.prefixed(name)));
        let reg = HopfDYModule::regular(&h);
        let triv = HopfDYModule::trivial(&h);
        out.extend(verify_hopf_dy(&h, &reg).into_iter().map(|c| c.prefixed(&format!("{name}/regular"))));
        out.push(yang_baxter(&h, &reg).prefixed(&format!("{name}/regular")));
        out.extend(verify_hopf_braiding(&h, &reg, &triv, &reg)?.into_iter().map(|c| c.prefixed(&format!("{name}/braiding"))));
        let from_db = dy_from_db_module(&q, &regular_db_module(&q))?;
        out.extend(verify_hopf_dy(&h, &from_db).into_iter().map(|c| c.prefixed(&format!("{name}/db-regular"))));
    }
    Ok(out)
}

fn hopf_checks() -> Result<Vec<Check>> {
    c8_quantum_double()
}

/// Criterion 12: associator axioms mod `ħ³` with `1/24`, and the `1/12` control failing at `ħ²`.
pub fn c12_associator(coefficient: &Rational) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for d in [1, 2] {
        let v = sl2_borel_standard(d);
        let t = DYModule::trivial(2);
        for (name, mods) in [("VVVV", [&v, &v, &v, &v]), ("VTVV", [&v, &t, &v, &v])] {
            let checks = check_associator_axioms_truncated(mods, 2, coefficient)?;
            out.extend(checks.into_iter().map(|c| c.prefixed(&format!("borel-d{d}/{name}"))));
        }
    }
    Ok(out)
}

fn associator_checks(break_coefficient: bool) -> Result<Vec<Check>> {
    let coeff = if break_coefficient { ratio(1, 12) } else { drinfeld_coefficient() };
    let mut out = c12_associator(&coeff)?;
    if !break_coefficient {
        let v = sl2_borel_standard(1);
        let bad = check_associator_axioms_truncated([&v, &v, &v, &v], 2, &ratio(1, 12))?;
        let at_two = bad.iter().filter(|c| c.name.starts_with("hexagon")).all(|c| c.witness.as_deref() == Some("sides differ at ħ^2"));
        out.push(Check::from_bool("control/coefficient-1/12-fails-at-order-2", at_two, || "control did not fail at ħ^2".into()));
    }
    Ok(out)
}

/// The checks behind each acceptance criterion, keyed by number.
pub fn criterion_checks(k: usize, seed: u64) -> Result<Vec<Check>> {
    match k {
        1 => c1_maximal_size(),
        2 => c2_bracketings(),
        3 => c3_chain_quotient(),
        4 => c4_diagrammatic(),
        5 => c5_torsor(seed),
        6 => c6_manin(),
        7 => c7_drinfeld_yetter(),
        8 => c8_quantum_double(),
        9 => c9_quantum_braid(),
        10 => c10_coproduct(),
        11 => c11_classical_limit(),
        12 => associator_checks(false),
        13 => c13_half_balance(),
        _ => Err(Error::NotFound(format!("no criterion {k}"))),
    }
}

/// Which suite reaches each criterion.
pub fn criterion_suite(k: usize) -> Option<Suite> {
    match k {
        1..=7 => Some(Suite::Classical),
        8 => Some(Suite::Hopf),
        9 | 11 | 13 => Some(Suite::QuantumA2),
        10 => Some(Suite::QuantumSl2),
        12 => Some(Suite::Associator),
        _ => None,
    }
}

/// Dimensions of the modules used by the quantum suites.
pub fn module_dimensions() -> Result<BTreeMap<String, Vec<usize>>> {
    let mut out = BTreeMap::new();
    out.insert("sl2".into(), sl2_modules(3)?.iter().map(|(_, m)| m.dim).collect());
    out.insert("a2".into(), a2_modules()?.iter().map(|(_, m)| m.dim).collect());
    out.insert("b2".into(), b2_modules()?.iter().map(|(_, m)| m.dim).collect());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn module_dims() {
        let d = module_dimensions().unwrap();
        assert_eq!(d["sl2"], vec![1, 2, 3, 4]);
        assert_eq!(d["a2"], vec![1, 3, 3, 6, 6, 8]);
        assert_eq!(d["b2"], vec![1, 5, 4]);
    }

    #[test]
    fn torsor_is_deterministic() {
        assert_eq!(torsor_samples(7).unwrap(), torsor_samples(7).unwrap());
        assert!(torsor_samples(7).unwrap().iter().all(|s| s.3 == s.4));
    }

    #[test]
    fn broken_associator_fails() {
        let r = run_suite(Suite::Associator, &SuiteOptions { break_coefficient: true, seed: 0 }).unwrap();
        assert!(!r.all_passed());
        assert!(r.failures().all(|c| c.witness.as_deref() == Some("sides differ at ħ^2")));
        assert!(run_suite(Suite::Associator, &SuiteOptions::default()).unwrap().all_passed());
    }

    #[test]
    fn hopf_suite_passes() {
        assert!(run_suite(Suite::Hopf, &SuiteOptions::default()).unwrap().all_passed());
    }

    #[test]
    fn quantum_sl2_suite_passes() {
        let r = run_suite(Suite::QuantumSl2, &SuiteOptions::default()).unwrap();
        assert!(r.all_passed(), "{}", r);
    }
}
