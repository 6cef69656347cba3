//! Structural subgroups: Sylow subgroups, the p-core `V`, its Frattini
//! subgroup `W = V^p V'`, the derived subgroup, and the tame quotient
//! `T = G/V`.

use crate::group::{
    normal_subgroups, quotient, subgroup_generated, GroupRef, Homomorphism, Subgroup,
};
use crate::Result;

/// A Sylow p-subgroup, grown by repeatedly adjoining a p-power-order element
/// of the normalizer (one always exists below full Sylow order).
pub fn sylow_subgroup(g: &GroupRef, p: usize) -> Subgroup {
    let n = g.order();
    let mut target = 1usize;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        target *= p;
    }
    let mut sub = subgroup_generated(g, &[]);
    while sub.order() < target {
        let found = (0..n).find(|&x| {
            if sub.contains(x) {
                return false;
            }
            let mut o = g.order_of(x);
            while o % p == 0 {
                o /= p;
            }
            if o != 1 {
                return false;
            }
            // x must normalize the current subgroup
            sub.elems().iter().all(|&s| sub.contains(g.conj(s as usize, x)))
        });
        let x = found.expect("Sylow growth step must find a normalizing p-element");
        let mut gens = sub.elems().to_vec();
        gens.push(x as u32);
        sub = subgroup_generated(g, &gens);
        debug_assert!(sub.is_p_group(p));
    }
    sub
}

/// The p-core `V`: the largest normal p-subgroup, computed as the
/// intersection of all conjugates of one Sylow p-subgroup.
pub fn p_core(g: &GroupRef, p: usize) -> Subgroup {
    let sylow = sylow_subgroup(g, p);
    let n = g.order();
    let mut member = vec![false; n];
    for &x in sylow.elems() {
        member[x as usize] = true;
    }
    for c in 0..n {
        if member.iter().filter(|&&m| m).count() == 1 {
            break;
        }
        let mut keep = vec![false; n];
        for &x in sylow.elems() {
            keep[g.conj(x as usize, c)] = true;
        }
        for i in 0..n {
            member[i] = member[i] && keep[i];
        }
    }
    let elems: Vec<u32> = (0..n).filter(|&i| member[i]).map(|i| i as u32).collect();
    let sub = subgroup_generated(g, &elems);
    debug_assert!(sub.is_normal());
    debug_assert!(sub.is_p_group(p));
    sub
}

/// Frattini subgroup `W = V^p V'` of the p-core: generated by all p-th powers
/// and commutators of elements of `V`. The quotient `V/W` is elementary
/// abelian.
pub fn frattini_of_pcore(g: &GroupRef, p: usize) -> Subgroup {
    let v = p_core(g, p);
    frattini_of_p_subgroup(g, &v, p)
}

/// Same computation applied to an arbitrary p-subgroup (used for whole
/// p-groups when computing minimal generator counts).
pub fn frattini_of_p_subgroup(g: &GroupRef, v: &Subgroup, p: usize) -> Subgroup {
    let mut gens: Vec<u32> = Vec::new();
    for &x in v.elems() {
        gens.push(g.pow(x as usize, p as i64) as u32);
    }
    for &x in v.elems() {
        for &y in v.elems() {
            gens.push(g.comm(x as usize, y as usize) as u32);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    subgroup_generated(g, &gens)
}

/// Derived subgroup, generated by all commutators.
pub fn derived_subgroup(g: &GroupRef) -> Subgroup {
    let n = g.order();
    let mut gens: Vec<u32> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            gens.push(g.comm(x, y) as u32);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    subgroup_generated(g, &gens)
}

/// The tame quotient `T = G/V` with its projection.
pub fn tame_quotient(g: &GroupRef, p: usize) -> Result<(GroupRef, Homomorphism)> {
    let v = p_core(g, p);
    quotient(g, &v)
}

/// The full structural picture used throughout: `V`, `W`, and `T = G/V`.
pub struct StructuralDecomposition {
    pub p: usize,
    pub v: Subgroup,
    pub w: Subgroup,
    pub t: GroupRef,
    pub projection: Homomorphism,
}

pub fn decompose_structure(g: &GroupRef, p: usize) -> Result<StructuralDecomposition> {
    let v = p_core(g, p);
    let w = frattini_of_p_subgroup(g, &v, p);
    let (t, projection) = quotient(g, &v)?;
    debug_assert_eq!(t.order() * v.order(), g.order());
    Ok(StructuralDecomposition { p, v, w, t, projection })
}

/// Cross-check helper: the p-core equals the union of all normal p-subgroups.
pub fn p_core_via_normal_subgroups(g: &GroupRef, p: usize) -> Result<Subgroup> {
    let mut elems: Vec<u32> = vec![0];
    for n in normal_subgroups(g, None)? {
        if n.is_p_group(p) {
            elems.extend_from_slice(n.elems());
        }
    }
    elems.sort_unstable();
    elems.dedup();
    Ok(subgroup_generated(g, &elems))
}
