//! Acceptance suite: one line per criterion, then a nonzero exit on any unexpected outcome.
//!
//! Criterion 13 is expected to fail in a specific way; see `criterion_13`.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Zero;
use rand::Rng;

use coxkit::algebra::{ratio, QMat, Rational};
use coxkit::catalog::{connected_graphs, finite_and_affine_gcms, graphs_up_to_isomorphism};
use coxkit::diagram::{enumerate_nested_sets, move_graph_components, Diagram, VSet};
use coxkit::quantum::{half_balance_failures, QuantumGroupData};
use coxkit::realization::{cartan_diagrammatic_test, counterexample, int_matrix, morphism_space, BoundSource, Realization, Verdict};
use coxkit::report::Check;
use coxkit::suites::{self, a2_modules, b2_modules, criterion_checks, random_realization};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2024;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_checks(checks: &[Check]) -> Outcome {
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed()).map(|c| c.to_string()).collect();
    Outcome {
        ok: failed.is_empty() && !checks.is_empty(),
        detail: if failed.is_empty() { format!("{} checks", checks.len()) } else { failed.join("; ") },
    }
}

fn combine(parts: Vec<Outcome>) -> Outcome {
    Outcome { ok: parts.iter().all(|o| o.ok), detail: parts.into_iter().map(|o| o.detail).collect::<Vec<_>>().join(", ") }
}

fn expect(ok: bool, what: impl Into<String>) -> Outcome {
    Outcome { ok, detail: what.into() }
}

fn library(k: usize) -> Outcome {
    match criterion_checks(k, SEED) {
        Ok(c) => from_checks(&c),
        Err(e) => expect(false, format!("error: {e}")),
    }
}

/// Nested sets by brute force over all families of connected subsets.
fn brute_nested_sets(d: &Diagram) -> (usize, Vec<usize>) {
    let n = d.vertex_count();
    let connected: Vec<VSet> = (1u64..1 << n).map(VSet).filter(|s| d.is_connected(*s)).collect();
    let components: Vec<VSet> = d.connected_components(d.all());
    let compatible = |a: VSet, b: VSet| {
        a.is_subset(b) || b.is_subset(a) || (a.is_disjoint(b) && (0..n).all(|i| !a.contains(i) || (0..n).all(|j| !b.contains(j) || !d.adjacent(i, j))))
    };
    let mut families: Vec<u64> = Vec::new();
    for mask in 0u64..1 << connected.len() {
        let fam: Vec<VSet> = (0..connected.len()).filter(|k| mask >> k & 1 == 1).map(|k| connected[k]).collect();
        if !components.iter().all(|c| fam.contains(c)) {
            continue;
        }
        if fam.iter().enumerate().all(|(i, &a)| fam[i + 1..].iter().all(|&b| compatible(a, b))) {
            families.push(mask);
        }
    }
    let sizes: Vec<usize> = families
        .iter()
        .filter(|&&m| !families.iter().any(|&o| o != m && o & m == m))
        .map(|m| m.count_ones() as usize)
        .collect();
    (families.len(), sizes)
}

fn criterion_1() -> Outcome {
    let mut parts = vec![library(1)];
    for n in 1..=4 {
        for d in connected_graphs(n) {
            let (_, sizes) = brute_nested_sets(&d);
            let lib = enumerate_nested_sets(&d, d.all(), VSet::EMPTY, true).expect("enumerates");
            let ok = sizes.len() == lib.len() && sizes.iter().all(|&s| s == n) && lib.iter().all(|h| h.len() == n + 1);
            if !ok {
                parts.push(expect(false, format!("brute force disagrees on {:?}", d.edges())));
            }
        }
    }
    parts.push(expect(true, "brute-force oracle on ≤ 4 vertices"));
    combine(parts)
}

fn bracketings(n: usize) -> u64 {
    if n == 1 {
        return 1;
    }
    (1..n).map(|k| bracketings(k) * bracketings(n - k)).sum()
}

fn criterion_2() -> Outcome {
    let oracle: Vec<u64> = (3..=7).map(bracketings).collect();
    let counts: Vec<u64> = (3..=7)
        .map(|n| {
            let d = Diagram::type_a(n - 1);
            enumerate_nested_sets(&d, d.all(), VSet::EMPTY, true).expect("enumerates").len() as u64
        })
        .collect();
    combine(vec![
        library(2),
        expect(oracle == vec![2, 5, 14, 42, 132] && counts == oracle, format!("counts {counts:?}, bracketings {oracle:?}")),
    ])
}

fn criterion_3() -> Outcome {
    let mut parts = vec![library(3)];
    for n in 1..=4 {
        for d in graphs_up_to_isomorphism(n) {
            let comps = move_graph_components(&d, d.all(), VSet::EMPTY).expect("components");
            let (brute, _) = brute_nested_sets(&d);
            if comps.len() != brute {
                parts.push(expect(false, format!("{} components vs {brute} nested sets on {:?}", comps.len(), d.edges())));
            }
        }
    }
    parts.push(expect(true, "component counts match brute force on ≤ 4 vertices"));
    combine(parts)
}

fn criterion_4() -> Outcome {
    let mut parts = vec![library(4)];
    // subset, required, bound and the constraining subdiagrams, all 0-based.
    let expected: [(&[usize], usize, usize, Vec<BoundSource>); 3] = [
        (&[1], 2, 1, vec![BoundSource::Superset(VSet::from_vertices([0, 1])), BoundSource::Superset(VSet::from_vertices([1, 2]))]),
        (&[1, 2], 3, 2, vec![BoundSource::Superset(VSet::from_vertices([0, 1, 2])), BoundSource::Superset(VSet::from_vertices([1, 2, 3]))]),
        (&[0, 1], 3, 2, vec![BoundSource::Superset(VSet::from_vertices([0, 1, 2])), BoundSource::Orthogonal(VSet::from_vertices([3]))]),
    ];
    for (k, (subset, req, bound, sources)) in expected.into_iter().enumerate() {
        let r = cartan_diagrammatic_test(&counterexample(k + 1).expect("bundled")).expect("runs");
        let ok = match &r.verdict {
            Verdict::Obstructed { witness } => {
                witness.subset == VSet::from_vertices(subset.iter().copied())
                    && (witness.required_dim, witness.bound_dim) == (req, bound)
                    && sources.iter().all(|s| witness.sources.contains(s))
            }
            _ => false,
        };
        parts.push(expect(ok, format!("counterexample {} witness", k + 1)));
    }
    let named: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![2, -1], vec![-1, 2]],
        vec![vec![2, -1], vec![-2, 2]],
        vec![vec![2, -1], vec![-3, 2]],
        vec![vec![2, -2], vec![-2, 2]],
        vec![vec![2, -1], vec![-4, 2]],
        vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
        vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -1, 2]],
        vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]],
        vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]],
        vec![vec![2, -1, 0, -1], vec![-1, 2, -1, 0], vec![0, -1, 2, -1], vec![-1, 0, -1, 2]],
        vec![vec![2, -3], vec![-3, 2]],
        vec![vec![2, -5], vec![-1, 2]],
    ];
    let bad: Vec<String> = named
        .iter()
        .filter(|a| cartan_diagrammatic_test(&int_matrix(a)).map(|r| r.verdict != Verdict::DiagrammaticBySufficientCondition).unwrap_or(true))
        .map(|a| format!("{a:?}"))
        .collect();
    parts.push(expect(bad.is_empty(), format!("named finite, affine and hyperbolic GCMs {bad:?}")));
    let rank2 = finite_and_affine_gcms(2).iter().filter(|a| a.len() == 2).count();
    parts.push(expect(rank2 == 6, format!("{rank2} rank-2 classes")));
    combine(parts)
}

fn rank_of(rows: &mut [Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the solution space of `T h_{1,i} = h_{2,i}`, `α_{2,i} T = α_{1,i}`, or `None` if empty.
fn morphism_dimension(v1: &Realization, v2: &Realization) -> Option<usize> {
    let (d1, d2, n) = (v1.dim(), v2.dim(), v1.rank());
    let unknowns = d1 * d2;
    let mut rows = Vec::new();
    for r in 0..d2 {
        for i in 0..n {
            let mut row = vec![Rational::zero(); unknowns + 1];
            for c in 0..d1 {
                row[r * d1 + c] = v1.coroots.get(c, i);
            }
            row[unknowns] = v2.coroots.get(r, i);
            rows.push(row);
        }
    }
    for i in 0..n {
        for c in 0..d1 {
            let mut row = vec![Rational::zero(); unknowns + 1];
            for r in 0..d2 {
                row[r * d1 + c] = v2.roots.get(i, r);
            }
            row[unknowns] = v1.roots.get(i, c);
            rows.push(row);
        }
    }
    let mut coeffs: Vec<Vec<Rational>> = rows.iter().map(|r| r[..unknowns].to_vec()).collect();
    let rc = rank_of(&mut coeffs);
    (rank_of(&mut rows) == rc).then_some(unknowns - rc)
}

fn criterion_5() -> Outcome {
    let mut parts = vec![library(5)];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for k in 0..10 {
        let n = 2 + k % 2;
        let a = QMat::from_dense((0..n).map(|_| (0..n).map(|_| ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))).collect()).collect());
        let v1 = random_realization(&mut rng, &a).expect("realization");
        let v2 = random_realization(&mut rng, &a).expect("realization");
        let lib = morphism_space(&v1, &v2).expect("nonempty").dim();
        let oracle = morphism_dimension(&v1, &v2);
        let formula = (v1.dim() - v1.coroots.rank()) * (v2.dim() - v2.roots.rank());
        parts.push(expect(oracle == Some(lib) && lib == formula, format!("pair {}: {lib} vs oracle {oracle:?}", k + 1)));
    }
    Outcome { ok: parts.iter().all(|o| o.ok), detail: parts[0].detail.clone() + ", linear-system oracle on 10 pairs" }
}

fn criterion_12() -> Outcome {
    let main = library(12);
    let broken = suites::run_suite(suites::Suite::Associator, &suites::SuiteOptions { break_coefficient: true, seed: SEED }).expect("runs");
    let at_two = broken.failures().count() > 0 && broken.failures().all(|c| c.witness.as_deref() == Some("sides differ at ħ^2"));
    combine(vec![main, expect(at_two, "1/12 control fails at ħ^2")])
}

/// Literal reading fails. Expected failure pattern: `S_i²` fails only against `E_j`, `F_j` with `j ≠ i`,
/// every A₂ fixture of dimension > 1 fails, and the rank-one and local checks pass.
fn criterion_13() -> (Outcome, bool) {
    let outcome = library(13);
    let mut pattern = true;
    let mut failing = 0;
    for (data, mods) in [(QuantumGroupData::a2(), a2_modules().expect("modules")), (QuantumGroupData::b2(), b2_modules().expect("modules"))] {
        for (_, v) in &mods {
            for i in 0..2 {
                let bad = half_balance_failures(&data, v, i);
                pattern &= bad.iter().all(|(g, j)| *g != "K" && *j != i);
                failing += usize::from(!bad.is_empty());
            }
        }
    }
    let a2_all = a2_modules().expect("modules").iter().filter(|(_, v)| v.dim > 1).all(|(_, v)| {
        (0..2).all(|i| !half_balance_failures(&QuantumGroupData::a2(), v, i).is_empty())
    });
    let sl2_ok = criterion_checks(13, SEED).expect("runs").iter().filter(|c| c.name.starts_with("sl2/")).all(Check::passed);
    let expected = !outcome.ok && pattern && a2_all && sl2_ok && failing > 0;
    (outcome, expected)
}

fn main() -> ExitCode {
    suites::configure_threads_from_env();
    let titles = [
        "maximal nested sets have |D|+1 members",
        "maximal nested sets of A_{n-1} match bracketings",
        "chain components biject onto nested sets",
        "Cartan-diagrammatic verdicts",
        "realization morphisms form a torsor",
        "Manin triple axioms",
        "Drinfeld-Yetter suite",
        "finite quantum double",
        "quantum braid relations",
        "coproduct identity",
        "classical limit",
        "truncated associator axioms",
        "half-balance on all generators",
    ];
    let mut unexpected = 0;
    for (k, title) in titles.iter().enumerate().map(|(k, t)| (k + 1, t)) {
        let start = Instant::now();
        let (o, as_expected) = match k {
            1 => (criterion_1(), None),
            2 => (criterion_2(), None),
            3 => (criterion_3(), None),
            4 => (criterion_4(), None),
            5 => (criterion_5(), None),
            12 => (criterion_12(), None),
            13 => {
                let (o, e) = criterion_13();
                (o, Some(e))
            }
            _ => (library(k), None),
        };
        let secs = start.elapsed().as_secs_f64();
        let status = if o.ok { "PASS" } else { "FAIL" };
        let note = match as_expected {
            Some(true) => " (expected: S_i² fails only against E_j, F_j with j ≠ i)",
            Some(false) => " (failure pattern differs from the analysis)",
            None => "",
        };
        println!("criterion {k:2} {status} {title} [{secs:.2}s]{note}");
        if o.ok {
            println!("             {}", o.detail);
        } else {
            let d: String = o.detail.chars().take(400).collect();
            println!("             {d}");
        }
        let fine = match as_expected {
            Some(e) => e,
            None => o.ok,
        };
        unexpected += usize::from(!fine);
    }
    if unexpected == 0 {
        println!("acceptance: 12 passed, 1 failed as analysed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected outcomes");
        ExitCode::FAILURE
    }
}
