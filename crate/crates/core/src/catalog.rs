//! Finite catalogues: diagrams up to isomorphism and finite/affine generalized Cartan matrices.

use std::collections::BTreeSet;

use crate::braid::check_gcm;
use crate::diagram::{Diagram, VSet};
use crate::realization::{int_matrix, symmetrizer};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

/// One diagram per isomorphism class on `n` vertices, as the lexicographically smallest edge set.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Diagram> {
    let m = n * n.saturating_sub(1) / 2;
    let idx = pair_index(n);
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut t = vec![0; m];
            for i in 0..n {
                for j in i + 1..n {
                    t[idx[i][j]] = idx[p[i]][p[j]];
                }
            }
            t
        })
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << m) {
        let canonical = maps.iter().all(|t| {
            let mut image = 0u64;
            for (k, &tk) in t.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    image |= 1 << tk;
                }
            }
            image >= bits
        });
        if canonical {
            out.push(Diagram::from_edge_bits(n, bits));
        }
    }
    out
}

/// Connected diagrams on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Diagram> {
    graphs_up_to_isomorphism(n).into_iter().filter(|d| d.is_connected(d.all())).collect()
}

/// `C_{n-1}`: complete bracketings of `n` letters.
pub fn catalan(n: u64) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Type of an indecomposable symmetrizable GCM.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum GcmType {
    Finite,
    Affine,
    Indefinite,
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn principal_minor(a: &[Vec<i64>], s: VSet) -> i128 {
    let v: Vec<usize> = s.vertices().collect();
    det_i128(&v.iter().map(|&i| v.iter().map(|&j| a[i][j] as i128).collect()).collect::<Vec<_>>())
}

/// Sign pattern of principal minors; `None` when `a` is not a symmetrizable GCM.
/// The symmetrized matrix has minors of the same signs since `D` is positive.
pub fn classify_indecomposable(a: &[Vec<i64>]) -> Option<GcmType> {
    check_gcm(a).ok()?;
    let all = VSet::full(a.len());
    let proper_positive = all.subsets().filter(|s| !s.is_empty() && *s != all).all(|s| principal_minor(a, s) > 0);
    let det = principal_minor(a, all);
    let candidate = if proper_positive && det > 0 {
        GcmType::Finite
    } else if proper_positive && det == 0 {
        GcmType::Affine
    } else {
        GcmType::Indefinite
    };
    let d = symmetrizer(&int_matrix(a)).ok()?;
    if d.iter().any(|x| x <= &num_traits::Zero::zero()) {
        return Some(GcmType::Indefinite);
    }
    Some(candidate)
}

fn canonical_matrix(a: &[Vec<i64>], perms: &[Vec<usize>]) -> Vec<Vec<i64>> {
    perms
        .iter()
        .map(|p| p.iter().map(|&i| p.iter().map(|&j| a[i][j]).collect::<Vec<_>>()).collect::<Vec<_>>())
        .min()
        .expect("at least one permutation")
}

fn blocks_finite_or_affine(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| a[i][j] != 0).collect();
    let d = Diagram::new(n, &edges).expect("simple graph");
    d.connected_components(d.all()).into_iter().all(|comp| {
        let v: Vec<usize> = comp.vertices().collect();
        let block: Vec<Vec<i64>> = v.iter().map(|&i| v.iter().map(|&j| a[i][j]).collect()).collect();
        matches!(classify_indecomposable(&block), Some(GcmType::Finite | GcmType::Affine))
    })
}

/// Every GCM of rank `1..=max_rank` whose indecomposable blocks are finite or affine,
/// one per simultaneous-permutation class.
/// Built vertex by vertex from class representatives: principal submatrices of such a matrix are again of this kind.
pub fn finite_and_affine_gcms(max_rank: usize) -> Vec<Vec<Vec<i64>>> {
    const PAIRS: [(i64, i64); 9] = [(0, 0), (-1, -1), (-1, -2), (-2, -1), (-1, -3), (-3, -1), (-2, -2), (-1, -4), (-4, -1)];
    let mut out = BTreeSet::new();
    let mut layer: Vec<Vec<Vec<i64>>> = vec![vec![]];
    for n in 1..=max_rank {
        let perms = permutations(n);
        let mut next = BTreeSet::new();
        for prev in &layer {
            let total = PAIRS.len().pow(n as u32 - 1);
            for code in 0..total {
                let mut a = vec![vec![0i64; n]; n];
                for i in 0..n - 1 {
                    a[i][..n - 1].copy_from_slice(&prev[i]);
                }
                a[n - 1][n - 1] = 2;
                let mut c = code;
                for i in 0..n - 1 {
                    let (x, y) = PAIRS[c % PAIRS.len()];
                    c /= PAIRS.len();
                    a[i][n - 1] = x;
                    a[n - 1][i] = y;
                }
                if blocks_finite_or_affine(&a) {
                    next.insert(canonical_matrix(&a, &perms));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| graphs_up_to_isomorphism(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!((1..=7).map(catalan).collect::<Vec<_>>(), vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_indecomposable(&[vec![2, -1], vec![-3, 2]]), Some(GcmType::Finite));
        assert_eq!(classify_indecomposable(&[vec![2, -4], vec![-1, 2]]), Some(GcmType::Affine));
        assert_eq!(classify_indecomposable(&[vec![2, -3], vec![-3, 2]]), Some(GcmType::Indefinite));
        let a2_1 = [vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert_eq!(classify_indecomposable(&a2_1), Some(GcmType::Affine));
        let bad = [vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert_eq!(classify_indecomposable(&bad), None);
    }

    #[test]
    fn rank_two_catalogue() {
        let all = finite_and_affine_gcms(2);
        let rank2: Vec<_> = all.iter().filter(|a| a.len() == 2).collect();
        assert_eq!(rank2.len(), 6);
    }

    #[test]
    fn rank_four_catalogue_matches_tables() {
        // Connected: A1; A2 B2 G2 + two affine; three finite + six affine; five finite + six affine.
        let all = finite_and_affine_gcms(4);
        let connected = |a: &Vec<Vec<i64>>| classify_indecomposable(a).is_some_and(|t| t != GcmType::Indefinite) && {
            let n = a.len();
            let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| a[i][j] != 0).collect();
            Diagram::new(n, &edges).unwrap().is_connected(VSet::full(n))
        };
        let by_rank = |f: &dyn Fn(&Vec<Vec<i64>>) -> bool| (1..=4).map(|n| all.iter().filter(|a| a.len() == n && f(a)).count()).collect::<Vec<_>>();
        assert_eq!(by_rank(&connected), vec![1, 5, 9, 11]);
        assert_eq!(by_rank(&|_| true), vec![1, 6, 15, 41]);
    }
}
