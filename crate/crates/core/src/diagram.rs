//! Diagrams, nested sets, relative nested sets and chains.
//!
//! Vertices are numbered from 0 and subsets are 64-bit masks, so a diagram
//! has at most 64 vertices. A subdiagram is the full subgraph on a vertex set.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex subset as a bit mask.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug, Serialize, Deserialize)]
pub struct VSet(pub u64);

impl VSet {
    pub const EMPTY: VSet = VSet(0);

    pub fn singleton(v: usize) -> Self {
        VSet(1 << v)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            VSet(u64::MAX)
        } else {
            VSet((1u64 << n) - 1)
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VSet(it.into_iter().fold(0, |m, v| m | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: VSet) -> VSet {
        VSet(self.0 | o.0)
    }

    pub fn intersection(self, o: VSet) -> VSet {
        VSet(self.0 & o.0)
    }

    pub fn minus(self, o: VSet) -> VSet {
        VSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: VSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_proper_subset(self, o: VSet) -> bool {
        self.is_subset(o) && self != o
    }

    pub fn is_disjoint(self, o: VSet) -> bool {
        self.0 & o.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }

    /// All subsets of this set, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = VSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some((c.wrapping_sub(full)) & full) };
            Some(VSet(c))
        })
    }
}

impl fmt::Display for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

/// Undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Diagram {
    n: usize,
    adj: Vec<u64>,
}

impl Diagram {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::Invalid(format!("{n} vertices exceed the 64-vertex limit")));
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Invalid(format!("edge ({a},{b}) out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {a}")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Diagram { n, adj })
    }

    /// Path graph `0 - 1 - ... - (n-1)`.
    pub fn type_a(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|k| (k - 1, k)).collect();
        Diagram::new(n, &edges).expect("valid path")
    }

    /// Diagram from an edge bit set over the pairs `(i, j)`, `i < j`, enumerated lexicographically.
    pub fn from_edge_bits(n: usize, bits: u64) -> Self {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Diagram::new(n, &edges).expect("valid edges")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn all(&self) -> VSet {
        VSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adj[a] >> b & 1 == 1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbours(&self, s: VSet) -> VSet {
        VSet(s.vertices().fold(0, |m, v| m | self.adj[v]))
    }

    /// Disjoint and not joined by an edge.
    pub fn orthogonal(&self, a: VSet, b: VSet) -> bool {
        a.is_disjoint(b) && self.neighbours(a).is_disjoint(b)
    }

    /// Nested or orthogonal.
    pub fn compatible(&self, a: VSet, b: VSet) -> bool {
        a.is_subset(b) || b.is_subset(a) || self.orthogonal(a, b)
    }

    fn component_of(&self, s: VSet, v: usize) -> VSet {
        let mut comp = VSet::singleton(v);
        loop {
            let next = comp.union(self.neighbours(comp).intersection(s));
            if next == comp {
                return comp;
            }
            comp = next;
        }
    }

    pub fn is_connected(&self, s: VSet) -> bool {
        match s.min_vertex() {
            None => false,
            Some(v) => self.component_of(s, v) == s,
        }
    }

    /// Connected components of the full subgraph on `s`, ordered by least vertex.
    pub fn connected_components(&self, s: VSet) -> Vec<VSet> {
        let mut out = Vec::new();
        let mut rest = s;
        while let Some(v) = rest.min_vertex() {
            let c = self.component_of(s, v);
            out.push(c);
            rest = rest.minus(c);
        }
        out
    }

    /// Nonempty connected subsets of `s`, increasing by mask.
    pub fn connected_subsets(&self, s: VSet) -> Vec<VSet> {
        s.subsets().filter(|&x| self.is_connected(x)).collect()
    }

    /// Diagram obtained by relabelling vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Diagram {
        let edges: Vec<_> = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        Diagram::new(self.n, &edges).expect("permutation preserves validity")
    }
}

/// A (relative) nested set on `(base, lower)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NestedSet {
    pub base: VSet,
    pub lower: VSet,
    /// Members in increasing mask order; contains `VSet::EMPTY` iff `lower` is empty.
    pub members: Vec<VSet>,
}

impl NestedSet {
    fn from_members(base: VSet, lower: VSet, members: BTreeSet<VSet>) -> Self {
        NestedSet { base, lower, members: members.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: VSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

impl fmt::Display for NestedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

fn required_members(d: &Diagram, base: VSet, lower: VSet) -> BTreeSet<VSet> {
    let mut req: BTreeSet<VSet> = d.connected_components(base).into_iter().collect();
    req.extend(d.connected_components(lower));
    if lower.is_empty() {
        req.insert(VSet::EMPTY);
    }
    req
}

fn properly_inside_lower(d: &Diagram, lower: VSet, x: VSet) -> bool {
    d.connected_components(lower).into_iter().any(|c| x.is_proper_subset(c))
}

/// Checks the defining conditions of a relative nested set.
pub fn validate_nested_set(d: &Diagram, h: &NestedSet) -> Result<()> {
    let (b, bl) = (h.base, h.lower);
    if !bl.is_subset(b) || !b.is_subset(d.all()) {
        return Err(Error::Invalid(format!("lower {bl} not inside base {b}")));
    }
    let set: BTreeSet<VSet> = h.members.iter().copied().collect();
    if set.len() != h.members.len() || !h.members.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Invalid("members not strictly increasing".into()));
    }
    for r in required_members(d, b, bl) {
        if !set.contains(&r) {
            return Err(Error::Invalid(format!("missing required member {r}")));
        }
    }
    for &x in &h.members {
        if x.is_empty() {
            if !bl.is_empty() {
                return Err(Error::Invalid("empty member in a relative nested set".into()));
            }
            continue;
        }
        if !x.is_subset(b) || !d.is_connected(x) {
            return Err(Error::Invalid(format!("member {x} is not a connected subset of {b}")));
        }
        if properly_inside_lower(d, bl, x) {
            return Err(Error::Invalid(format!("member {x} properly inside a component of {bl}")));
        }
    }
    for (i, &x) in h.members.iter().enumerate() {
        for &y in &h.members[i + 1..] {
            if !x.is_empty() && !d.compatible(x, y) {
                return Err(Error::Invalid(format!("members {x} and {y} are incompatible")));
            }
        }
    }
    Ok(())
}

/// All nested sets on `(b, lower)` (or only the maximal ones), in lexicographic order of member lists.
pub fn enumerate_nested_sets(d: &Diagram, b: VSet, lower: VSet, maximal_only: bool) -> Result<Vec<NestedSet>> {
    if !lower.is_subset(b) {
        return Err(Error::Invalid(format!("{lower} is not contained in {b}")));
    }
    if !b.is_subset(d.all()) {
        return Err(Error::Invalid(format!("{b} is not a subdiagram")));
    }
    let required = required_members(d, b, lower);
    let candidates: Vec<VSet> = d
        .connected_subsets(b)
        .into_iter()
        .filter(|x| !required.contains(x))
        .filter(|&x| !properly_inside_lower(d, lower, x))
        .filter(|&x| required.iter().all(|&r| r.is_empty() || d.compatible(x, r)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_families(d, &candidates, 0, &mut chosen, maximal_only, &mut |fam| {
        let mut m = required.clone();
        m.extend(fam.iter().copied());
        out.push(NestedSet::from_members(b, lower, m));
    });
    out.sort();
    Ok(out)
}

fn extend_families(
    d: &Diagram,
    cands: &[VSet],
    i: usize,
    chosen: &mut Vec<VSet>,
    maximal_only: bool,
    emit: &mut dyn FnMut(&[VSet]),
) {
    if i == cands.len() {
        if maximal_only {
            let extendable = cands
                .iter()
                .any(|&c| !chosen.contains(&c) && chosen.iter().all(|&x| d.compatible(c, x)));
            if extendable {
                return;
            }
        }
        emit(chosen);
        return;
    }
    let c = cands[i];
    if chosen.iter().all(|&x| d.compatible(c, x)) {
        chosen.push(c);
        extend_families(d, cands, i + 1, chosen, maximal_only, emit);
        chosen.pop();
    }
    extend_families(d, cands, i + 1, chosen, maximal_only, emit);
}

/// Union of `h` on `(B, B')` and `h2` on `(B', B'')`, a nested set on `(B, B'')`.
pub fn vertical_union(d: &Diagram, h: &NestedSet, h2: &NestedSet) -> Result<NestedSet> {
    if h.lower != h2.base {
        return Err(Error::Invalid(format!("lower {} of the upper set differs from base {}", h.lower, h2.base)));
    }
    let mut m: BTreeSet<VSet> = h.members.iter().copied().collect();
    m.extend(h2.members.iter().copied());
    if !h2.lower.is_empty() {
        m.remove(&VSet::EMPTY);
    }
    let out = NestedSet::from_members(h.base, h2.lower, m);
    validate_nested_set(d, &out)?;
    Ok(out)
}

/// Splits `h` on `(B, B'')` at `B'` into `(lower part on (B', B''), upper part on (B, B'))`.
pub fn vertical_decompose(d: &Diagram, h: &NestedSet, mid: VSet) -> Result<(NestedSet, NestedSet)> {
    if !h.lower.is_subset(mid) || !mid.is_subset(h.base) {
        return Err(Error::Invalid(format!("{mid} is not between {} and {}", h.lower, h.base)));
    }
    let cc = d.connected_components(mid);
    if let Some(c) = cc.iter().find(|c| !h.contains(**c)) {
        return Err(Error::Invalid(format!("component {c} of {mid} is not a member")));
    }
    let lower: BTreeSet<VSet> = h.members.iter().copied().filter(|x| x.is_subset(mid)).collect();
    let mut upper: BTreeSet<VSet> =
        h.members.iter().copied().filter(|&x| !cc.iter().any(|&c| x.is_proper_subset(c))).collect();
    if mid.is_empty() {
        upper.insert(VSet::EMPTY);
    }
    let lo = NestedSet::from_members(mid, h.lower, lower);
    let up = NestedSet::from_members(h.base, mid, upper);
    validate_nested_set(d, &lo)?;
    validate_nested_set(d, &up)?;
    Ok((lo, up))
}

/// Combines nested sets on orthogonal pieces into one on their disjoint union.
pub fn orthogonal_union(d: &Diagram, h1: &NestedSet, h2: &NestedSet) -> Result<NestedSet> {
    if !d.orthogonal(h1.base, h2.base) {
        return Err(Error::Invalid(format!("{} and {} are not orthogonal", h1.base, h2.base)));
    }
    let lower = h1.lower.union(h2.lower);
    let mut m: BTreeSet<VSet> = h1.members.iter().copied().collect();
    m.extend(h2.members.iter().copied());
    if !lower.is_empty() {
        m.remove(&VSet::EMPTY);
    }
    let out = NestedSet::from_members(h1.base.union(h2.base), lower, m);
    validate_nested_set(d, &out)?;
    Ok(out)
}

/// Restriction of a nested set to a union of its components `part` (inverse of [`orthogonal_union`]).
pub fn restrict(h: &NestedSet, part: VSet) -> NestedSet {
    let lower = h.lower.intersection(part);
    let mut m: BTreeSet<VSet> = h.members.iter().copied().filter(|x| !x.is_empty() && x.is_subset(part)).collect();
    if lower.is_empty() {
        m.insert(VSet::EMPTY);
    }
    NestedSet::from_members(part, lower, m)
}

/// Strictly increasing sequence of subdiagrams from `sets[0]` to its last entry.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Chain {
    pub sets: Vec<VSet>,
}

impl Chain {
    pub fn new(sets: Vec<VSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Invalid("empty chain".into()));
        }
        if let Some(w) = sets.windows(2).find(|w| !w[0].is_proper_subset(w[1])) {
            return Err(Error::Invalid(format!("{} is not properly contained in {}", w[0], w[1])));
        }
        Ok(Chain { sets })
    }

    pub fn bottom(&self) -> VSet {
        self.sets[0]
    }

    pub fn top(&self) -> VSet {
        *self.sets.last().expect("nonempty")
    }

    pub fn is_maximal(&self) -> bool {
        self.sets.windows(2).all(|w| w[1].minus(w[0]).len() == 1)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.sets.iter().enumerate() {
            if k > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// All chains from `lower` to `b` (or only maximal ones), sorted.
pub fn enumerate_chains(b: VSet, lower: VSet, maximal_only: bool) -> Result<Vec<Chain>> {
    if !lower.is_subset(b) {
        return Err(Error::Invalid(format!("{lower} is not contained in {b}")));
    }
    let mut out = Vec::new();
    let mut cur = vec![lower];
    grow_chains(b, &mut cur, maximal_only, &mut out);
    out.sort();
    Ok(out)
}

fn grow_chains(b: VSet, cur: &mut Vec<VSet>, maximal_only: bool, out: &mut Vec<Chain>) {
    let last = *cur.last().expect("nonempty");
    if last == b {
        out.push(Chain { sets: cur.clone() });
        return;
    }
    let rest = b.minus(last);
    for add in rest.subsets().filter(|s| !s.is_empty()) {
        if maximal_only && add.len() != 1 {
            continue;
        }
        cur.push(last.union(add));
        grow_chains(b, cur, maximal_only, out);
        cur.pop();
    }
}

/// The nested set `ι(C)`: connected components of all terms of the chain.
pub fn chain_to_nested_set(d: &Diagram, c: &Chain) -> NestedSet {
    let mut m = BTreeSet::new();
    for &s in &c.sets {
        m.extend(d.connected_components(s));
    }
    if c.bottom().is_empty() {
        m.insert(VSet::EMPTY);
    }
    NestedSet::from_members(c.top(), c.bottom(), m)
}

/// Section of `ι`: descends from the base by replacing each component not in the
/// lower diagram with the union of the maximal members properly inside it.
pub fn canonical_section(d: &Diagram, h: &NestedSet) -> Chain {
    let lower_cc = d.connected_components(h.lower);
    let mut sets = vec![h.base];
    let mut cur = h.base;
    while cur != h.lower {
        let mut next = VSet::EMPTY;
        for c in d.connected_components(cur) {
            if lower_cc.contains(&c) {
                next = next.union(c);
                continue;
            }
            let inside: Vec<VSet> =
                h.members.iter().copied().filter(|x| !x.is_empty() && x.is_proper_subset(c)).collect();
            for &x in &inside {
                if !inside.iter().any(|&y| x.is_proper_subset(y)) {
                    next = next.union(x);
                }
            }
        }
        sets.push(next);
        cur = next;
    }
    sets.reverse();
    Chain { sets }
}

/// Chains adjacent to `c` in the move graph: insertion or removal of an
/// intermediate term `X = B_{k-1} ∪ U` with `U` a union of components of `B_k`.
pub fn chain_moves(d: &Diagram, c: &Chain) -> Vec<Chain> {
    let s = &c.sets;
    let mut out = Vec::new();
    for k in 1..s.len().saturating_sub(1) {
        let (prev, x, next) = (s[k - 1], s[k], s[k + 1]);
        let u = d
            .connected_components(next)
            .into_iter()
            .filter(|cc| cc.is_subset(x))
            .fold(VSet::EMPTY, VSet::union);
        if prev.union(u) == x {
            let mut t = s.clone();
            t.remove(k);
            out.push(Chain { sets: t });
        }
    }
    for k in 1..s.len() {
        let (prev, next) = (s[k - 1], s[k]);
        let comps = d.connected_components(next);
        for pick in 1u64..(1 << comps.len()) {
            let u = comps
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .fold(VSet::EMPTY, |a, (_, &c)| a.union(c));
            let x = prev.union(u);
            if prev.is_proper_subset(x) && x.is_proper_subset(next) {
                let mut t = s.clone();
                t.insert(k, x);
                out.push(Chain { sets: t });
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Whether two chains lie in the same connected component of the move graph.
pub fn chains_equivalent(d: &Diagram, c1: &Chain, c2: &Chain) -> bool {
    if c1.bottom() != c2.bottom() || c1.top() != c2.top() {
        return false;
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([c1.clone()]);
    seen.insert(c1.clone());
    while let Some(c) = queue.pop_front() {
        if &c == c2 {
            return true;
        }
        for n in chain_moves(d, &c) {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    false
}

/// Connected components of the move graph on all chains from `lower` to `b`.
pub fn move_graph_components(d: &Diagram, b: VSet, lower: VSet) -> Result<Vec<Vec<Chain>>> {
    let chains = enumerate_chains(b, lower, false)?;
    let index: HashMap<&Chain, usize> = chains.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut parent: Vec<usize> = (0..chains.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    for (i, c) in chains.iter().enumerate() {
        for n in chain_moves(d, c) {
            let j = index[&n];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<Chain>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, c) in chains.iter().enumerate() {
        let r = find(&mut parent, i);
        let g = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(c.clone());
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VSet {
        VSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn components_examples() {
        let a3 = Diagram::type_a(3);
        assert_eq!(a3.connected_components(vs(&[0, 2])), vec![vs(&[0]), vs(&[2])]);
        assert!(a3.connected_components(VSet::EMPTY).is_empty());
        let a4 = Diagram::type_a(4);
        assert_eq!(a4.connected_components(vs(&[0, 1, 3])), vec![vs(&[0, 1]), vs(&[3])]);
    }

    #[test]
    fn small_counts() {
        let a2 = Diagram::type_a(2);
        assert_eq!(enumerate_nested_sets(&a2, a2.all(), VSet::EMPTY, true).unwrap().len(), 2);
        let a3 = Diagram::type_a(3);
        assert_eq!(enumerate_nested_sets(&a3, a3.all(), VSet::EMPTY, true).unwrap().len(), 5);
        let trivial = enumerate_nested_sets(&a3, a3.all(), a3.all(), false).unwrap();
        assert_eq!(trivial.len(), 1);
        assert!(enumerate_nested_sets(&a3, vs(&[0]), vs(&[1]), false).is_err());
    }

    #[test]
    fn chain_image_examples() {
        let a2 = Diagram::type_a(2);
        let c = Chain::new(vec![VSet::EMPTY, vs(&[0]), vs(&[0, 1])]).unwrap();
        assert_eq!(chain_to_nested_set(&a2, &c).members, vec![VSet::EMPTY, vs(&[0]), vs(&[0, 1])]);
        let a3 = Diagram::type_a(3);
        let c1 = Chain::new(vec![VSet::EMPTY, vs(&[0]), vs(&[0, 2])]).unwrap();
        let c2 = Chain::new(vec![VSet::EMPTY, vs(&[2]), vs(&[0, 2])]).unwrap();
        assert!(chains_equivalent(&a3, &c1, &c2));
        assert_eq!(chain_to_nested_set(&a3, &c1), chain_to_nested_set(&a3, &c2));
    }

    #[test]
    fn maximal_chains_onto_maximal_nested_sets_a3() {
        let a3 = Diagram::type_a(3);
        let chains = enumerate_chains(a3.all(), VSet::EMPTY, true).unwrap();
        assert_eq!(chains.len(), 6);
        let images: BTreeSet<NestedSet> = chains.iter().map(|c| chain_to_nested_set(&a3, c)).collect();
        assert_eq!(images.len(), 5);
        let mns: BTreeSet<NestedSet> =
            enumerate_nested_sets(&a3, a3.all(), VSet::EMPTY, true).unwrap().into_iter().collect();
        assert_eq!(images, mns);
    }

    #[test]
    fn section_is_right_inverse() {
        let d = Diagram::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        for lower in d.all().subsets() {
            for h in enumerate_nested_sets(&d, d.all(), lower, false).unwrap() {
                assert_eq!(chain_to_nested_set(&d, &canonical_section(&d, &h)), h);
            }
        }
    }

    #[test]
    fn orthogonal_pair_of_vertices() {
        let d = Diagram::new(2, &[]).unwrap();
        let h1 = enumerate_nested_sets(&d, vs(&[0]), VSet::EMPTY, true).unwrap().remove(0);
        let h2 = enumerate_nested_sets(&d, vs(&[1]), VSet::EMPTY, true).unwrap().remove(0);
        let u = orthogonal_union(&d, &h1, &h2).unwrap();
        assert_eq!(u.members, vec![VSet::EMPTY, vs(&[0]), vs(&[1])]);
        assert_eq!(restrict(&u, vs(&[0])), h1);
        let a2 = Diagram::type_a(2);
        assert!(orthogonal_union(&a2, &h1, &h2).is_err());
    }

    #[test]
    fn decomposition_requires_components() {
        let a3 = Diagram::type_a(3);
        let h = enumerate_nested_sets(&a3, a3.all(), VSet::EMPTY, false)
            .unwrap()
            .into_iter()
            .find(|h| h.members == vec![VSet::EMPTY, vs(&[0, 1, 2])])
            .unwrap();
        assert!(vertical_decompose(&a3, &h, vs(&[0, 1])).is_err());
    }

    #[test]
    fn subsets_iterate_all() {
        assert_eq!(vs(&[1, 3]).subsets().collect::<Vec<_>>(), vec![VSet(0), vs(&[1]), vs(&[3]), vs(&[1, 3])]);
        assert_eq!(VSet::EMPTY.subsets().count(), 1);
    }
}
