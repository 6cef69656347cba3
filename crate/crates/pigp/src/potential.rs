//! Screening for potential p-realizability: tame structures, the decision
//! procedure, enumeration of tame candidates by order, and the
//! semidirect-complement monitor.

use crate::analysis::p_core;
use crate::catalog::CatalogEntry;
use crate::construct::{are_isomorphic, metacyclic_group, pow_mod};
use crate::group::{normal_subgroups, quotient, subgroup_generated, GroupRef, Subgroup};
use crate::{Error, Result};

/// A filtration `G ⊇ G₀ ⊇ G₁` with cyclic quotients, the relation
/// `τ^σ = τ^p`, and `G₁` a p-group, witnessed by concrete generators.
#[derive(Clone, Debug)]
pub struct TameStructure {
    pub g0: Subgroup,
    pub g1: Subgroup,
    pub sigma: u32,
    pub tau: u32,
}

impl TameStructure {
    /// Checks every defining clause independently.
    pub fn validate(&self, g: &GroupRef, p: usize) -> bool {
        let (g0, g1) = (&self.g0, &self.g1);
        if !g0.is_normal() || !g1.is_normal() {
            return false;
        }
        if !g1.elems().iter().all(|&x| g0.contains(x as usize)) {
            return false;
        }
        if !g1.is_p_group(p) {
            return false;
        }
        // G/G0 cyclic generated by the image of sigma
        let Ok((q, proj)) = quotient(g, g0) else { return false };
        if q.order_of(proj.apply(self.sigma as usize)) != q.order() {
            return false;
        }
        // G0/G1 cyclic of order prime to p generated by the image of tau
        if !g0.contains(self.tau as usize) {
            return false;
        }
        let index = g0.order() / g1.order();
        if index % p == 0 {
            return false;
        }
        if order_mod_subgroup(g, self.tau as usize, g1) != index {
            return false;
        }
        // the Iwasawa relation
        g.conj(self.tau as usize, self.sigma as usize)
            == g.pow(self.tau as usize, p as i64)
    }
}

/// Least `k >= 1` with `x^k` inside `sub`.
fn order_mod_subgroup(g: &GroupRef, x: usize, sub: &Subgroup) -> usize {
    let mut acc = x;
    let mut k = 1;
    while !sub.contains(acc) {
        acc = g.mul(acc, x);
        k += 1;
    }
    k
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decides potential p-realizability and, when the answer is yes, returns a
/// verified witness filtration.
///
/// With `V` the p-core and `T = G/V`, a cyclic `T` settles it immediately
/// (take `G₀ = G₁ = V`). Otherwise every filtration enlarges to one with
/// `G₁ = V`, so it suffices to scan normal `G₀ ⊇ V` with `G₀/V` cyclic of
/// order prime to `p` and `G/G₀` cyclic, looking for honest elements
/// `σ, τ ∈ G` generating the two quotients with `τ^σ = τ^p`.
pub fn is_potentially_realizable(
    g: &GroupRef,
    p: usize,
) -> Result<(bool, Option<TameStructure>)> {
    if p == 2 || !crate::construct::is_prime(p) {
        return Err(Error::precondition("p must be an odd prime"));
    }
    let v = p_core(g, p);
    let (t, tproj) = quotient(g, &v)?;
    if t.is_cyclic() {
        let sigma = (0..g.order())
            .find(|&x| t.order_of(tproj.apply(x)) == t.order())
            .expect("cyclic quotient has a generator image");
        let witness = TameStructure {
            g0: v.clone(),
            g1: v,
            sigma: sigma as u32,
            tau: 0,
        };
        debug_assert!(witness.validate(g, p));
        return Ok((true, Some(witness)));
    }
    for g0 in normal_subgroups(g, Some(&v))? {
        let index = g0.order() / v.order();
        if index % p == 0 {
            continue;
        }
        let (q, proj) = quotient(g, &g0)?;
        if !q.is_cyclic() {
            continue;
        }
        for sigma in 0..g.order() {
            if q.order_of(proj.apply(sigma)) != q.order() {
                continue;
            }
            for &tau in g0.elems() {
                if order_mod_subgroup(g, tau as usize, &v) != index {
                    continue;
                }
                if g.conj(tau as usize, sigma) != g.pow(tau as usize, p as i64) {
                    continue;
                }
                let witness = TameStructure {
                    g0: g0.clone(),
                    g1: v.clone(),
                    sigma: sigma as u32,
                    tau,
                };
                debug_assert!(witness.validate(g, p), "screening witness must validate");
                return Ok((true, Some(witness)));
            }
        }
    }
    Ok((false, None))
}

/// All tame structures, one witness generator pair per valid `(G₀, G₁)`.
pub fn tame_structures(g: &GroupRef, p: usize, max_order: usize) -> Result<Vec<TameStructure>> {
    if g.order() > max_order {
        return Err(Error::capacity(format!(
            "tame structure search on order {} exceeds the bound {max_order}",
            g.order()
        )));
    }
    let normals = normal_subgroups(g, None)?;
    let mut out = Vec::new();
    for g1 in &normals {
        if !g1.is_p_group(p) {
            continue;
        }
        for g0 in &normals {
            if g0.order() % g1.order() != 0 {
                continue;
            }
            if !g1.elems().iter().all(|&x| g0.contains(x as usize)) {
                continue;
            }
            let index = g0.order() / g1.order();
            if index % p == 0 {
                continue;
            }
            let (q, proj) = quotient(g, g0)?;
            if !q.is_cyclic() {
                continue;
            }
            let mut witness = None;
            'search: for sigma in 0..g.order() {
                if q.order_of(proj.apply(sigma)) != q.order() {
                    continue;
                }
                for &tau in g0.elems() {
                    if order_mod_subgroup(g, tau as usize, g1) != index {
                        continue;
                    }
                    if g.conj(tau as usize, sigma) == g.pow(tau as usize, p as i64) {
                        witness = Some(TameStructure {
                            g0: g0.clone(),
                            g1: g1.clone(),
                            sigma: sigma as u32,
                            tau,
                        });
                        break 'search;
                    }
                }
            }
            if let Some(w) = witness {
                debug_assert!(w.validate(g, p));
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// Tame candidates of order `n`: metacyclic groups
/// `< x, y | x^k = y^l, y^m = 1, y^x = y^p >` over all factorizations
/// `n = k·m` with `m | p^k - 1`, deduplicated by isomorphism.
pub fn tame_potential_groups(n: usize, p: usize) -> Result<Vec<CatalogEntry>> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    for k in 1..=n {
        if n % k != 0 {
            continue;
        }
        let m = n / k;
        if pow_mod(p as u64, k as u64, m as u64) != 1 % m as u64 {
            continue;
        }
        let step = m / gcd(m, p - 1);
        let mut l = 0;
        while l < m {
            let g = metacyclic_group(k, m, l, p)?
                .expect("loop guard guarantees consistent parameters");
            let mut known = false;
            for existing in &out {
                if are_isomorphic(&existing.group, &g)? {
                    known = true;
                    break;
                }
            }
            if !known {
                out.push(CatalogEntry {
                    name: format!("mc({k},{m},{l},{p})"),
                    group: g,
                    recipe: Some(format!("metacyclic({k},{m},{l},{p})")),
                });
            }
            l += step;
        }
    }
    Ok(out)
}

/// Whether a complement to the p-core exists: a subgroup `H` with
/// `H ∩ V = 1` and `HV = G`, searched over lifts of the tame quotient's
/// generators.
pub fn semidirect_conjecture_holds(g: &GroupRef, p: usize) -> Result<bool> {
    let v = p_core(g, p);
    if v.is_trivial() || v.is_whole() {
        return Ok(true);
    }
    let (t, proj) = quotient(g, &v)?;
    let tgens: Vec<u32> = t.generators().to_vec();
    let fibers: Vec<Vec<u32>> = tgens
        .iter()
        .map(|&tg| {
            (0..g.order())
                .filter(|&x| proj.apply(x) == tg as usize)
                .map(|x| x as u32)
                .collect()
        })
        .collect();
    let combos: usize = fibers.iter().map(|f| f.len()).product();
    if combos > 10_000_000 {
        return Err(Error::capacity(format!(
            "complement search over {combos} lift combinations"
        )));
    }
    let mut lift = vec![0u32; tgens.len()];
    fn rec(
        g: &GroupRef,
        v: &Subgroup,
        t_order: usize,
        fibers: &[Vec<u32>],
        lift: &mut Vec<u32>,
        depth: usize,
    ) -> bool {
        if depth == fibers.len() {
            let h = subgroup_generated(g, lift);
            return h.order() == t_order
                && h.elems().iter().filter(|&&x| v.contains(x as usize)).count() == 1;
        }
        for &cand in &fibers[depth] {
            lift[depth] = cand;
            if rec(g, v, t_order, fibers, lift, depth + 1) {
                return true;
            }
        }
        false
    }
    Ok(rec(g, &v, t.order(), &fibers, &mut lift, 0))
}
