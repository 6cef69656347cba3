//! Automorphism groups, subgroup stabilizers, the induced map on quotient
//! automorphisms, and orbit marking of tuples.
//!
//! Automorphism groups are materialized as full lists of image tables:
//! orbit marking touches every automorphism anyway, and in the supported
//! range the lists stay comfortably in memory.

use std::collections::{BTreeSet, HashSet};

use crate::group::{quotient, GroupRef, Homomorphism, Subgroup};
use crate::search;
use crate::{Error, Result};

pub use crate::search::DEFAULT_SEARCH_BUDGET as DEFAULT_AUT_BUDGET;

/// The full automorphism group of one group, as sorted image tables
/// (the identity table sorts first).
pub struct AutGroup {
    group: GroupRef,
    tables: Vec<Vec<u32>>,
}

impl AutGroup {
    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn tables(&self) -> &[Vec<u32>] {
        &self.tables
    }

    #[inline]
    pub fn apply(&self, idx: usize, x: usize) -> usize {
        self.tables[idx][x] as usize
    }

    pub fn contains_table(&self, t: &[u32]) -> bool {
        self.tables.binary_search_by(|probe| probe.as_slice().cmp(t)).is_ok()
    }

    /// Composition `self[i] ∘ self[j]` applied as `x -> i(j(x))`.
    pub fn compose(&self, i: usize, j: usize) -> Vec<u32> {
        self.tables[j].iter().map(|&x| self.tables[i][x as usize]).collect()
    }
}

/// All automorphisms, by backtracking over images of a generating sequence.
/// Fails with a capacity error if the search exceeds `budget` nodes.
pub fn automorphism_group(g: &GroupRef, budget: usize) -> Result<AutGroup> {
    let tables = search::bijective_homs(g, g, true, budget).map_err(|e| match e {
        Error::Capacity(msg) => Error::Capacity(format!(
            "{msg} (automorphism search{})",
            g.name().map(|n| format!(" of {n}")).unwrap_or_default()
        )),
        other => other,
    })?;
    let aut = AutGroup { group: g.clone(), tables };
    debug_assert!(verify_group_closed(&aut));
    Ok(aut)
}

/// Closure check: exhaustive for small lists, sampled beyond that.
fn verify_group_closed(a: &AutGroup) -> bool {
    let k = a.len();
    if k == 0 || a.tables[0] != (0..a.group.order() as u32).collect::<Vec<_>>() {
        return false;
    }
    let index: HashSet<&[u32]> = a.tables.iter().map(|t| t.as_slice()).collect();
    let check = |i: usize, j: usize| index.contains(a.compose(i, j).as_slice());
    if k <= 64 {
        (0..k).all(|i| (0..k).all(|j| check(i, j)))
    } else {
        let mut state = 0x1234_5678_9abc_def0u64 ^ (k as u64);
        (0..2000).all(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = (state >> 33) as usize % k;
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % k;
            check(i, j)
        })
    }
}

/// Inner automorphisms (conjugation maps), mainly for cross-checks.
pub fn inner_automorphisms(g: &GroupRef) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
    for c in 0..n {
        set.insert((0..n).map(|x| g.conj(x, c) as u32).collect());
    }
    set.into_iter().collect()
}

/// The sub-automorphism-group mapping `n` onto itself setwise.
pub fn stabilizer_of_subgroup(a: &AutGroup, n: &Subgroup) -> AutGroup {
    let tables: Vec<Vec<u32>> = a
        .tables
        .iter()
        .filter(|t| n.elems().iter().all(|&x| n.contains(t[x as usize] as usize)))
        .cloned()
        .collect();
    AutGroup { group: a.group.clone(), tables }
}

/// The induced picture on a quotient `Q = G/N`: the image of the stabilizer
/// of `N` inside `Aut(Q)`, and right-coset representatives of that image
/// (identity first). The number of representatives is the automorphism index
/// of the pair `(G, N)`.
pub struct InducedAction {
    pub q: GroupRef,
    pub projection: Homomorphism,
    /// Distinct induced automorphism tables on `Q`, sorted.
    pub image: Vec<Vec<u32>>,
    /// Representatives `α` with `Aut(Q) = ⊔ image·α`, identity first.
    pub cokreps: Vec<Vec<u32>>,
}

pub fn induced_coset_reps(
    aut_g: &AutGroup,
    n: &Subgroup,
    budget: usize,
) -> Result<InducedAction> {
    if !n.is_normal() {
        return Err(Error::precondition("induced action requires a normal subgroup"));
    }
    let g = aut_g.group();
    let (q, projection) = quotient(g, n)?;
    let section = projection.section();
    let stab = stabilizer_of_subgroup(aut_g, n);
    let mut image_set: BTreeSet<Vec<u32>> = BTreeSet::new();
    for t in stab.tables() {
        let induced: Vec<u32> = section
            .iter()
            .map(|&rep| projection.apply(t[rep as usize] as usize) as u32)
            .collect();
        image_set.insert(induced);
    }
    let image: Vec<Vec<u32>> = image_set.into_iter().collect();
    let aut_q = automorphism_group(&q, budget)?;
    let mut covered: HashSet<Vec<u32>> = HashSet::new();
    let mut cokreps = Vec::new();
    for alpha in aut_q.tables() {
        if covered.contains(alpha.as_slice()) {
            continue;
        }
        cokreps.push(alpha.clone());
        for psi in &image {
            // right coset image·alpha, composing as x -> psi(alpha(x))
            let t: Vec<u32> = alpha.iter().map(|&x| psi[x as usize]).collect();
            covered.insert(t);
        }
    }
    debug_assert_eq!(cokreps.len() * image.len(), aut_q.len());
    Ok(InducedAction { q, projection, image, cokreps })
}

/// The componentwise orbit of a tuple under an automorphism list, as a
/// deterministic sorted set.
pub fn tuple_orbit(a: &AutGroup, tuple: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for t in &a.tables {
        out.insert(tuple.iter().map(|&x| t[x as usize]).collect());
    }
    out
}
