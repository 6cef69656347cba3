//! Realizability criteria: `V/W` as a module over the tame quotient, its
//! decomposition into indecomposables, the strongly-split / tame-decoupled /
//! x₀-constrained predicates, the two realizability theorems they feed, and
//! the scanner for minimally unrealizable groups.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::analysis::decompose_structure;
use crate::catalog::Catalog;
use crate::construct::subgroup_as_group;
use crate::counting::{enumerate_tame_pairs, Counter};
use crate::group::{minimal_normal_subgroups, quotient, subgroup_generated, GroupRef};
use crate::potential::is_potentially_realizable;
use crate::relations::{angle_bracket, RelationContext};
use crate::{Error, Result};

const PAIR_BUDGET: usize = 1_000_000;
const MAX_MODULE_DIM: usize = 8;

/// `V/W` as an `F_p`-vector space with the conjugation action of `T = G/V`,
/// one matrix per generator of `T` (column `j` is the image of basis
/// vector `j`).
pub struct FpTModule {
    pub p: usize,
    pub dim: usize,
    /// Coset representatives in `G` of the chosen basis of `V/W`.
    pub basis: Vec<u32>,
    pub gens: Vec<Vec<u8>>,
}

/// An abstract module over the same acting generators, used for summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    pub dim: usize,
    pub gens: Vec<Vec<u8>>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Indecomposable summands with multiplicities, largest dimension first.
    pub summands: Vec<(ModuleRep, usize)>,
    pub max_multiplicity: usize,
}

impl Decomposition {
    /// Shape string such as `1^2 ⊕ 1` (dimension, with multiplicity
    /// exponents), or `0` for the zero module.
    pub fn shape(&self) -> String {
        if self.summands.is_empty() {
            return "0".to_string();
        }
        self.summands
            .iter()
            .map(|(m, mult)| {
                if *mult == 1 {
                    format!("{}", m.dim)
                } else {
                    format!("{}^{}", m.dim, mult)
                }
            })
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }
}

/// Builds `V/W` with a basis and the conjugation matrices of the tame
/// quotient's generators.
pub fn vw_module(g: &GroupRef, p: usize) -> Result<FpTModule> {
    let s = decompose_structure(g, p)?;
    let gv = subgroup_as_group(g, &s.v);
    let to_gv = |x: u32| -> u32 {
        s.v.elems().binary_search(&x).expect("element of V") as u32
    };
    let from_gv = |x: usize| -> u32 { s.v.elems()[x] };
    let w_in_gv: Vec<u32> = s.w.elems().iter().map(|&x| to_gv(x)).collect();
    let w_sub = subgroup_generated(&gv, &w_in_gv);
    let (qvw, projvw) = quotient(&gv, &w_sub)?;
    let mut dim = 0usize;
    let mut size = qvw.order();
    while size > 1 {
        size /= p;
        dim += 1;
    }
    if dim > MAX_MODULE_DIM {
        return Err(Error::capacity(format!("V/W dimension {dim} exceeds {MAX_MODULE_DIM}")));
    }
    let basis_qvw = if dim == 0 {
        Vec::new()
    } else {
        crate::construct::abelian_primary_basis(&qvw, p, &vec![1; dim])
    };
    // coordinates of each element of Qvw with respect to the basis
    let mut coord_of = vec![vec![0u8; dim]; qvw.order()];
    let mut stack = vec![(0usize, vec![0u8; dim])];
    let mut seen = vec![false; qvw.order()];
    seen[0] = true;
    while let Some((elem, coords)) = stack.pop() {
        coord_of[elem] = coords.clone();
        for (i, &b) in basis_qvw.iter().enumerate() {
            let next = qvw.mul(elem, b as usize);
            if !seen[next] {
                seen[next] = true;
                let mut c = coords.clone();
                c[i] = (c[i] + 1) % p as u8;
                stack.push((next, c));
            }
        }
    }
    // basis representatives back in G
    let sec = projvw.section();
    let basis: Vec<u32> = basis_qvw.iter().map(|&b| from_gv(sec[b as usize] as usize)).collect();
    // conjugation matrices for the generators of T
    let tsec = s.projection.section();
    let mut gens = Vec::new();
    for &tg in s.t.generators() {
        let lift = tsec[tg as usize] as usize;
        let mut mat = vec![0u8; dim * dim];
        for (j, &b) in basis.iter().enumerate() {
            // left action: t · v · t^{-1}
            let image = g.mul(g.mul(lift, b as usize), g.inv_of(lift));
            let q_idx = projvw.apply(to_gv(image as u32) as usize);
            for i in 0..dim {
                mat[i * dim + j] = coord_of[q_idx][i];
            }
        }
        gens.push(mat);
    }
    Ok(FpTModule { p, dim, basis, gens })
}

// --- linear algebra over F_p on small dense vectors -----------------------

fn apply_mat(mat: &[u8], v: &[u8], p: usize) -> Vec<u8> {
    let d = v.len();
    (0..d)
        .map(|i| {
            let mut acc = 0usize;
            for j in 0..d {
                acc += mat[i * d + j] as usize * v[j] as usize;
            }
            (acc % p) as u8
        })
        .collect()
}

/// Reduces `v` against an echelon basis (rows with leading 1 pivots in
/// increasing column order); if a nonzero remainder survives it is inserted
/// and `true` returned.
fn echelon_insert(basis: &mut Vec<Vec<u8>>, mut v: Vec<u8>, p: usize) -> bool {
    let d = v.len();
    let inv = |a: u8| -> u8 {
        (1..p as u8).find(|&x| (x as usize * a as usize) % p == 1).expect("unit")
    };
    for row in basis.iter() {
        let pivot = row.iter().position(|&x| x != 0).unwrap();
        if v[pivot] != 0 {
            let c = v[pivot] as usize;
            for j in 0..d {
                v[j] = ((v[j] as usize + (p - 1) * c * row[j] as usize) % p) as u8;
            }
        }
    }
    if let Some(pivot) = v.iter().position(|&x| x != 0) {
        let c = inv(v[pivot]);
        for x in v.iter_mut() {
            *x = (*x as usize * c as usize % p) as u8;
        }
        // clear this pivot column in the existing rows
        for row in basis.iter_mut() {
            if row[pivot] != 0 {
                let c = row[pivot] as usize;
                for j in 0..d {
                    row[j] = ((row[j] as usize + (p - 1) * c * v[j] as usize) % p) as u8;
                }
            }
        }
        basis.push(v);
        basis.sort_by_key(|row| row.iter().position(|&x| x != 0).unwrap());
        true
    } else {
        false
    }
}

/// Smallest submodule containing the seed vectors, as a canonical echelon
/// basis.
fn submodule_closure(m: &ModuleRep, seed: &[Vec<u8>], p: usize) -> Vec<Vec<u8>> {
    let mut basis: Vec<Vec<u8>> = Vec::new();
    for v in seed {
        echelon_insert(&mut basis, v.clone(), p);
    }
    loop {
        let mut grew = false;
        let snapshot = basis.clone();
        for v in &snapshot {
            for mat in &m.gens {
                if echelon_insert(&mut basis, apply_mat(mat, v, p), p) {
                    grew = true;
                }
            }
        }
        if !grew {
            return basis;
        }
    }
}

/// All submodules, as canonical echelon bases (sorted set).
fn all_submodules(m: &ModuleRep, p: usize) -> Result<BTreeSet<Vec<Vec<u8>>>> {
    let d = m.dim;
    let count = (p as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
    if count > 200_000 {
        return Err(Error::capacity(format!("submodule enumeration over {count} vectors")));
    }
    let mut subs: BTreeSet<Vec<Vec<u8>>> = BTreeSet::new();
    subs.insert(Vec::new());
    // cyclic submodules
    for idx in 0..count {
        let mut v = vec![0u8; d];
        let mut x = idx;
        for c in v.iter_mut() {
            *c = (x % p as u64) as u8;
            x /= p as u64;
        }
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        subs.insert(submodule_closure(m, &[v], p));
    }
    // close under sums
    loop {
        let mut added = Vec::new();
        let list: Vec<_> = subs.iter().cloned().collect();
        if list.len() > 5000 {
            return Err(Error::capacity("submodule lattice too large".to_string()));
        }
        for i in 0..list.len() {
            for j in (i + 1)..list.len() {
                let mut merged = list[i].clone();
                for v in &list[j] {
                    echelon_insert(&mut merged, v.clone(), p);
                }
                if !subs.contains(&merged) {
                    added.push(merged);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        subs.extend(added);
    }
    Ok(subs)
}

/// Coordinates of `v` in the span of echelon `basis`, if it lies there.
fn coords_in(basis: &[Vec<u8>], v: &[u8], p: usize) -> Option<Vec<u8>> {
    let d = v.len();
    let mut v = v.to_vec();
    let mut coords = vec![0u8; basis.len()];
    for (k, row) in basis.iter().enumerate() {
        let pivot = row.iter().position(|&x| x != 0).unwrap();
        if v[pivot] != 0 {
            let c = v[pivot];
            coords[k] = c;
            for j in 0..d {
                v[j] = ((v[j] as usize + (p - 1) * c as usize * row[j] as usize) % p) as u8;
            }
        }
    }
    if v.iter().all(|&x| x == 0) {
        Some(coords)
    } else {
        None
    }
}

/// Restriction of the action to an invariant subspace, in its echelon basis.
fn restrict(m: &ModuleRep, basis: &[Vec<u8>], p: usize) -> ModuleRep {
    let dim = basis.len();
    let gens = m
        .gens
        .iter()
        .map(|mat| {
            let mut out = vec![0u8; dim * dim];
            for (j, b) in basis.iter().enumerate() {
                let img = apply_mat(mat, b, p);
                let coords = coords_in(basis, &img, p).expect("invariant subspace");
                for i in 0..dim {
                    out[i * dim + j] = coords[i];
                }
            }
            out
        })
        .collect();
    ModuleRep { dim, gens }
}

fn rank(rows: &[Vec<u8>], p: usize) -> usize {
    let mut basis: Vec<Vec<u8>> = Vec::new();
    for r in rows {
        echelon_insert(&mut basis, r.clone(), p);
    }
    basis.len()
}

/// Splits off a complementary pair of invariant subspaces, if any.
fn find_splitting(m: &ModuleRep, p: usize) -> Result<Option<(Vec<Vec<u8>>, Vec<Vec<u8>>)>> {
    if m.dim <= 1 {
        return Ok(None);
    }
    let subs = all_submodules(m, p)?;
    let list: Vec<_> = subs.into_iter().collect();
    for a in &list {
        if a.is_empty() || a.len() == m.dim {
            continue;
        }
        for b in &list {
            if b.len() != m.dim - a.len() {
                continue;
            }
            let mut all = a.clone();
            all.extend(b.iter().cloned());
            if rank(&all, p) == m.dim {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

fn decompose_rep(m: &ModuleRep, p: usize) -> Result<Vec<ModuleRep>> {
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    match find_splitting(m, p)? {
        None => Ok(vec![m.clone()]),
        Some((a, b)) => {
            let mut out = decompose_rep(&restrict(m, &a, p), p)?;
            out.extend(decompose_rep(&restrict(m, &b, p), p)?);
            Ok(out)
        }
    }
}

/// Module isomorphism via the intertwiner space: solve `S·A_g = B_g·S` over
/// `F_p` and look for an invertible solution.
pub fn modules_isomorphic(m1: &ModuleRep, m2: &ModuleRep, p: usize) -> Result<bool> {
    if m1.dim != m2.dim || m1.gens.len() != m2.gens.len() {
        return Ok(false);
    }
    let d = m1.dim;
    if d == 0 {
        return Ok(true);
    }
    // variables S_{ik}, flattened i*d + k
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (a, b) in m1.gens.iter().zip(&m2.gens) {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![0u8; d * d];
                for k in 0..d {
                    // + S_{ik} A_{kj}
                    row[i * d + k] = (row[i * d + k] as usize + a[k * d + j] as usize) as u8 % p as u8;
                    // - B_{ik} S_{kj}
                    row[k * d + j] = ((row[k * d + j] as usize + (p - b[i * d + k] as usize % p))
                        % p) as u8;
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    // nullspace of the constraint matrix
    let nullspace = nullspace_basis(&rows, d * d, p);
    let nullity = nullspace.len();
    let combos = (p as u64).checked_pow(nullity as u32).unwrap_or(u64::MAX);
    if combos > 1_000_000 {
        return Err(Error::capacity(format!(
            "intertwiner search over {combos} combinations"
        )));
    }
    for idx in 1..combos {
        let mut s = vec![0u8; d * d];
        let mut x = idx;
        for basis_vec in &nullspace {
            let c = (x % p as u64) as usize;
            x /= p as u64;
            if c != 0 {
                for (si, &bi) in s.iter_mut().zip(basis_vec) {
                    *si = ((*si as usize + c * bi as usize) % p) as u8;
                }
            }
        }
        let rows: Vec<Vec<u8>> = (0..d).map(|i| s[i * d..(i + 1) * d].to_vec()).collect();
        if rank(&rows, p) == d {
            return Ok(true);
        }
    }
    Ok(false)
}

fn nullspace_basis(rows: &[Vec<u8>], vars: usize, p: usize) -> Vec<Vec<u8>> {
    let mut basis: Vec<Vec<u8>> = Vec::new();
    for r in rows {
        echelon_insert(&mut basis, r.clone(), p);
    }
    let pivots: Vec<usize> =
        basis.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
    let free: Vec<usize> = (0..vars).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut v = vec![0u8; vars];
        v[f] = 1;
        // back-substitute pivot coordinates
        for (r, &piv) in basis.iter().zip(&pivots) {
            // pivot coefficient is 1: piv coordinate = -(row · v restricted to free part)
            let mut acc = 0usize;
            for c in 0..vars {
                if c != piv {
                    acc += r[c] as usize * v[c] as usize;
                }
            }
            v[piv] = ((p - acc % p) % p) as u8;
        }
        out.push(v);
    }
    out
}

/// Full decomposition into indecomposables with multiplicities.
pub fn decompose(m: &FpTModule) -> Result<Decomposition> {
    if m.dim > MAX_MODULE_DIM {
        return Err(Error::capacity(format!("module dimension {} exceeds {MAX_MODULE_DIM}", m.dim)));
    }
    let rep = ModuleRep {
        dim: m.dim,
        gens: m.gens.clone(),
    };
    let parts = decompose_rep(&rep, m.p)?;
    let mut summands: Vec<(ModuleRep, usize)> = Vec::new();
    'outer: for part in parts {
        for (known, mult) in summands.iter_mut() {
            if modules_isomorphic(known, &part, m.p)? {
                *mult += 1;
                continue 'outer;
            }
        }
        summands.push((part, 1));
    }
    summands.sort_by(|a, b| (b.0.dim, b.1).cmp(&(a.0.dim, a.1)));
    let max_multiplicity = summands.iter().map(|&(_, m)| m).max().unwrap_or(0);
    Ok(Decomposition { summands, max_multiplicity })
}

/// No proper nontrivial invariant subspace.
pub fn is_irreducible(m: &ModuleRep, p: usize) -> Result<bool> {
    if m.dim == 0 {
        return Ok(false);
    }
    Ok(all_submodules(m, p)?.len() == 2)
}

/// The three predicates over the tame pairs:
///
/// * strongly split: every `σ` occurring in a tame pair has the same order
///   in `G` as its image in `G/V`;
/// * tame-decoupled: every `τ` occurring acts trivially on `V/W`;
/// * x₀-constrained: `x₀^σ·⟨x₀,τ⟩⁻¹ ∈ W` forces `x₀ ∈ W`.
pub fn predicates_ss_td_xc(g: &GroupRef, p: usize) -> Result<(bool, bool, bool)> {
    let pairs = enumerate_tame_pairs(g, p, PAIR_BUDGET)?;
    let s = decompose_structure(g, p)?;
    let ctx = RelationContext::new(g.order(), p)?;
    let mut ss = true;
    let mut td = true;
    let mut xc = true;
    let mut seen_tau: std::collections::HashSet<u32> = Default::default();
    for &(sigma, tau) in &pairs {
        if g.order_of(sigma as usize) != s.t.order_of(s.projection.apply(sigma as usize)) {
            ss = false;
        }
        if seen_tau.insert(tau) {
            // τ acts trivially on V/W iff it fixes every basis coset
            for &b in s.v.elems() {
                let image = g.conj(b as usize, tau as usize);
                if !s.w.contains(g.mul(image, g.inv_of(b as usize))) {
                    td = false;
                    break;
                }
            }
        }
        if xc {
            for &x0 in s.v.elems() {
                let lhs = g.mul(
                    g.conj(x0 as usize, sigma as usize),
                    g.inv_of(angle_bracket(g, x0 as usize, tau as usize, &ctx)),
                );
                if s.w.contains(lhs) && !s.w.contains(x0 as usize) {
                    xc = false;
                    break;
                }
            }
        }
    }
    Ok((ss, td, xc))
}

/// The multiplicity criterion: with `n` the largest multiplicity of an
/// indecomposable factor of `V/W`, `n > 1 + n_ss + n_xc` certifies that the
/// group is not p-realizable. Assumes potential realizability was checked.
pub fn thm_multiplicity_unrealizable(g: &GroupRef, p: usize) -> Result<bool> {
    let module = vw_module(g, p)?;
    let dec = decompose(&module)?;
    let (ss, _td, xc) = predicates_ss_td_xc(g, p)?;
    let n_ss = usize::from(!ss);
    let n_xc = usize::from(!xc);
    Ok(dec.max_multiplicity > 1 + n_ss + n_xc)
}

/// The converse criterion: `W = 1` with `V` a multiplicity-free direct sum
/// of irreducible modules certifies realizability. Assumes potential
/// realizability was checked.
pub fn thm_converse_realizable(g: &GroupRef, p: usize) -> Result<bool> {
    let s = decompose_structure(g, p)?;
    if !s.w.is_trivial() {
        return Ok(false);
    }
    let module = vw_module(g, p)?;
    let dec = decompose(&module)?;
    if dec.summands.iter().any(|&(_, mult)| mult > 1) {
        return Ok(false);
    }
    for (part, _) in &dec.summands {
        if !is_irreducible(part, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of the scan report.
#[derive(Clone, Serialize)]
pub struct ScanRow {
    pub name: String,
    pub order: usize,
    pub p: usize,
    pub potentially_realizable: bool,
    pub ss: bool,
    pub td: bool,
    pub xc: bool,
    pub shape: String,
    pub certified_unrealizable: bool,
    pub certified_realizable: bool,
    pub count: usize,
    pub minimally_unrealizable: bool,
}

/// Scans a catalog for minimally unrealizable groups: potentially
/// p-realizable, count 0, and every minimal-normal quotient with a positive
/// count (quotient-closure of realizability makes minimal quotients
/// sufficient).
pub fn minimally_unrealizable_scan(
    cat: &Catalog,
    p: usize,
    order_bound: usize,
) -> Result<Vec<ScanRow>> {
    let mut counter = Counter::new(p)?;
    let mut rows = Vec::new();
    for entry in cat.entries() {
        let g = &entry.group;
        if g.order() > order_bound {
            continue;
        }
        let potentially = is_potentially_realizable(g, p)?.0;
        let (ss, td, xc) = predicates_ss_td_xc(g, p)?;
        let shape = decompose(&vw_module(g, p)?)?.shape();
        let certified_unrealizable = potentially && thm_multiplicity_unrealizable(g, p)?;
        let certified_realizable = potentially && thm_converse_realizable(g, p)?;
        let count = counter.count(&entry.name, g)?.count;
        let minimally_unrealizable = if potentially && count == 0 {
            let mut minimal = true;
            for n in minimal_normal_subgroups(g) {
                let (q, _) = quotient(g, &n)?;
                if counter.count(&format!("{}/N", entry.name), &q)?.count == 0 {
                    minimal = false;
                    break;
                }
            }
            minimal
        } else {
            false
        };
        rows.push(ScanRow {
            name: entry.name.clone(),
            order: g.order(),
            p,
            potentially_realizable: potentially,
            ss,
            td,
            xc,
            shape,
            certified_unrealizable,
            certified_realizable,
            count,
            minimally_unrealizable,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::bundled;
    use crate::construct::*;

    #[test]
    fn vw_module_examples() {
        let cat = bundled();
        let s3 = cat.get("d3").unwrap().group.clone();
        let m = vw_module(&s3, 3).unwrap();
        assert_eq!(m.dim, 1);
        assert_eq!(m.gens.len(), 1);
        assert_eq!(m.gens[0], vec![2]); // inversion on F_3

        let gd = cat.get("f5^2:c2").unwrap().group.clone();
        let m = vw_module(&gd, 5).unwrap();
        assert_eq!(m.dim, 2);
        // -identity action
        assert_eq!(m.gens[0], vec![4, 0, 0, 4]);

        let f27 = abelian_group(&[3, 3, 3]).unwrap();
        let m = vw_module(&f27, 3).unwrap();
        assert_eq!(m.dim, 3);
        assert!(m.gens.is_empty()); // trivial tame quotient
    }

    #[test]
    fn decompose_examples() {
        // trivial action in dimension 3: one 1-dim summand, multiplicity 3
        let m = FpTModule { p: 3, dim: 3, basis: vec![], gens: vec![] };
        let d = decompose(&m).unwrap();
        assert_eq!(d.max_multiplicity, 3);
        assert_eq!(d.shape(), "1^3");

        // sign+sign over F_5
        let m = FpTModule { p: 5, dim: 2, basis: vec![], gens: vec![vec![4, 0, 0, 4]] };
        let d = decompose(&m).unwrap();
        assert_eq!(d.max_multiplicity, 2);
        assert_eq!(d.shape(), "1^2");

        // an order-4 rotation on F_3^2: irreducible 2-dimensional
        let m = FpTModule { p: 3, dim: 2, basis: vec![], gens: vec![vec![0, 2, 1, 0]] };
        let d = decompose(&m).unwrap();
        assert_eq!(d.max_multiplicity, 1);
        assert_eq!(d.shape(), "2");
        assert!(is_irreducible(&d.summands[0].0, 3).unwrap());
    }

    #[test]
    fn predicates_examples() {
        let f27 = abelian_group(&[3, 3, 3]).unwrap();
        assert_eq!(predicates_ss_td_xc(&f27, 3).unwrap(), (false, true, true));

        let gd = bundled().get("f5^2:c2").unwrap().group.clone();
        let (ss, _td, xc) = predicates_ss_td_xc(&gd, 5).unwrap();
        assert!(ss);
        assert!(xc);

        // trivial wild part: vacuously true
        let q8 = quaternion_group().unwrap();
        assert_eq!(predicates_ss_td_xc(&q8, 3).unwrap(), (true, true, true));
    }

    #[test]
    fn multiplicity_criterion_examples() {
        let f27 = abelian_group(&[3, 3, 3]).unwrap();
        assert!(thm_multiplicity_unrealizable(&f27, 3).unwrap());

        let gd = bundled().get("f5^2:c2").unwrap().group.clone();
        assert!(thm_multiplicity_unrealizable(&gd, 5).unwrap());

        let s3 = bundled().get("d3").unwrap().group.clone();
        assert!(!thm_multiplicity_unrealizable(&s3, 3).unwrap());
    }

    #[test]
    fn converse_criterion_examples() {
        let s3 = bundled().get("d3").unwrap().group.clone();
        assert!(thm_converse_realizable(&s3, 3).unwrap());

        let d5 = bundled().get("d5").unwrap().group.clone();
        assert!(thm_converse_realizable(&d5, 5).unwrap());

        let gd = bundled().get("f5^2:c2").unwrap().group.clone();
        assert!(!thm_converse_realizable(&gd, 5).unwrap());
    }

    #[test]
    fn scan_small_orders() {
        let cat = bundled();
        let rows = minimally_unrealizable_scan(&cat, 3, 26).unwrap();
        assert!(rows.iter().all(|r| !r.minimally_unrealizable));
    }
}
