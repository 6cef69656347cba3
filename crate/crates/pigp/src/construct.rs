//! Constructors for the concrete groups the theory needs, plus isomorphism
//! testing and structural fingerprints.

use std::collections::HashMap;

use serde::Serialize;

use crate::analysis;
use crate::group::{Group, GroupRef, MAX_ORDER};
use crate::search;
use crate::{Error, Result};

/// Direct product of cyclic groups `Z/f1 x Z/f2 x ...` with canonical
/// mixed-radix indexing (first factor fastest). Factors equal to 1 are
/// skipped; the empty list gives the trivial group.
pub fn abelian_group(factors: &[usize]) -> Result<GroupRef> {
    let factors: Vec<usize> = factors.iter().copied().filter(|&f| f != 1).collect();
    if factors.iter().any(|&f| f == 0) {
        return Err(Error::precondition("abelian factor must be positive"));
    }
    let mut order = 1usize;
    for &f in &factors {
        order = order.checked_mul(f).unwrap_or(usize::MAX);
        if order > MAX_ORDER {
            return Err(Error::capacity(format!("abelian group order exceeds {MAX_ORDER}")));
        }
    }
    let k = factors.len();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut coords = Vec::with_capacity(k);
        for &f in &factors {
            coords.push(idx % f);
            idx /= f;
        }
        coords
    };
    let encode = |coords: &[usize]| -> usize {
        let mut idx = 0usize;
        for (i, &f) in factors.iter().enumerate().rev() {
            idx = idx * f + coords[i];
        }
        idx
    };
    let mut table = vec![0u32; order * order];
    for a in 0..order {
        let ca = decode(a);
        for b in 0..order {
            let cb = decode(b);
            let sum: Vec<usize> =
                ca.iter().zip(&cb).zip(&factors).map(|((&x, &y), &f)| (x + y) % f).collect();
            table[a * order + b] = encode(&sum) as u32;
        }
    }
    let mut gens = Vec::new();
    for i in 0..k {
        let mut coords = vec![0usize; k];
        coords[i] = 1;
        gens.push(encode(&coords) as u32);
    }
    Group::from_table(table, gens, None, None)
}

pub fn cyclic_group(n: usize) -> Result<GroupRef> {
    abelian_group(&[n])
}

pub fn trivial_group() -> GroupRef {
    abelian_group(&[]).expect("trivial group")
}

/// Direct product with indexing `a + |A| * b`.
pub fn direct_product(a: &GroupRef, b: &GroupRef) -> Result<GroupRef> {
    let (na, nb) = (a.order(), b.order());
    let order = na.checked_mul(nb).unwrap_or(usize::MAX);
    if order > MAX_ORDER {
        return Err(Error::capacity(format!("direct product order exceeds {MAX_ORDER}")));
    }
    let mut table = vec![0u32; order * order];
    for xa in 0..na {
        for xb in 0..nb {
            let x = xa + na * xb;
            for ya in 0..na {
                for yb in 0..nb {
                    let y = ya + na * yb;
                    table[x * order + y] = (a.mul(xa, ya) + na * b.mul(xb, yb)) as u32;
                }
            }
        }
    }
    let mut gens: Vec<u32> = a.generators().to_vec();
    gens.extend(b.generators().iter().map(|&g| (na * g as usize) as u32));
    Group::from_table(table, gens, None, None)
}

/// Semidirect product `V ⋊ T` where `action` gives, for each stored generator
/// of `T`, an automorphism of `V` as an image table. `T` acts on the left and
/// pairs multiply as `(v, t)(v', t') = (v · act(t)(v'), t t')`; the pair
/// `(v, t)` has index `v + |V| * t`.
pub fn semidirect_product(
    v: &GroupRef,
    t: &GroupRef,
    action: &[Vec<u32>],
) -> Result<GroupRef> {
    let (nv, nt) = (v.order(), t.order());
    if action.len() != t.generators().len() {
        return Err(Error::precondition(format!(
            "need one action table per generator of T ({} given, {} generators)",
            action.len(),
            t.generators().len()
        )));
    }
    for tab in action {
        if !is_automorphism_table(v, tab) {
            return Err(Error::precondition("action table is not an automorphism of V"));
        }
    }
    // Extend generator actions to all of T by closure, checking that the
    // assignment is a homomorphism T -> Aut(V).
    let mut act: Vec<Option<Vec<u32>>> = vec![None; nt];
    act[0] = Some((0..nv as u32).collect());
    let mut order_list = vec![0usize];
    let mut head = 0;
    while head < order_list.len() {
        let x = order_list[head];
        head += 1;
        for (i, &g) in t.generators().iter().enumerate() {
            let y = t.mul(x, g as usize);
            // left action: act(x·g) = act(x) ∘ act(g), applying act(g) first
            let composed: Vec<u32> = {
                let ax = act[x].as_ref().unwrap();
                action[i].iter().map(|&w| ax[w as usize]).collect()
            };
            match &act[y] {
                None => {
                    act[y] = Some(composed);
                    order_list.push(y);
                }
                Some(existing) => {
                    if *existing != composed {
                        return Err(Error::precondition(
                            "action does not extend to a homomorphism T -> Aut(V)",
                        ));
                    }
                }
            }
        }
    }
    let order = nv.checked_mul(nt).unwrap_or(usize::MAX);
    if order > MAX_ORDER {
        return Err(Error::capacity(format!("semidirect product order exceeds {MAX_ORDER}")));
    }
    let mut table = vec![0u32; order * order];
    for tx in 0..nt {
        let ax = act[tx].as_ref().unwrap();
        for vx in 0..nv {
            let x = vx + nv * tx;
            for ty in 0..nt {
                for vy in 0..nv {
                    let y = vy + nv * ty;
                    let vz = v.mul(vx, ax[vy] as usize);
                    let tz = t.mul(tx, ty);
                    table[x * order + y] = (vz + nv * tz) as u32;
                }
            }
        }
    }
    let mut gens: Vec<u32> = v.generators().iter().map(|&g| g).collect();
    gens.extend(t.generators().iter().map(|&g| (nv * g as usize) as u32));
    Group::from_table(table, gens, None, None)
}

fn is_automorphism_table(v: &GroupRef, tab: &[u32]) -> bool {
    let n = v.order();
    if tab.len() != n || tab[0] != 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in tab {
        if (x as usize) >= n || seen[x as usize] {
            return false;
        }
        seen[x as usize] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if tab[v.mul(a, b)] as usize != v.mul(tab[a] as usize, tab[b] as usize) {
                return false;
            }
        }
    }
    true
}

/// Inversion `x -> x^{-1}` as an automorphism table (requires V abelian).
pub fn inversion_automorphism(v: &GroupRef) -> Result<Vec<u32>> {
    if !v.is_abelian() {
        return Err(Error::precondition("inversion is only an automorphism of abelian groups"));
    }
    Ok((0..v.order()).map(|x| v.inv_of(x) as u32).collect())
}

/// The power map `x -> x^e` as an automorphism table of an abelian group
/// (requires gcd(e, exponent) to make it bijective; validated by the caller
/// through `semidirect_product`).
pub fn power_automorphism(v: &GroupRef, e: i64) -> Result<Vec<u32>> {
    if !v.is_abelian() {
        return Err(Error::precondition("power maps are automorphisms of abelian groups only"));
    }
    Ok((0..v.order()).map(|x| v.pow(x, e) as u32).collect())
}

/// A linear map on `V = (Z/p)^2` built with index convention `x + p*y`,
/// given as a 2x2 matrix over `F_p`.
pub fn fp2_linear_table(p: usize, mat: [[i64; 2]; 2]) -> Vec<u32> {
    let n = p * p;
    let m = |v: i64| -> usize { v.rem_euclid(p as i64) as usize };
    (0..n)
        .map(|idx| {
            let (x, y) = ((idx % p) as i64, (idx / p) as i64);
            let nx = m(mat[0][0] * x + mat[0][1] * y);
            let ny = m(mat[1][0] * x + mat[1][1] * y);
            (nx + p * ny) as u32
        })
        .collect()
}

/// The metacyclic group `< x, y | x^k = y^l, y^m = 1, y^x = y^p >` realized on
/// pairs `(i, j) = x^i y^j`, `0 <= i < k`, `0 <= j < m`, provided the
/// presentation does not collapse; returns `None` when the consistency
/// conditions `m | p^k - 1` and `l(p-1) ≡ 0 (mod m)` fail.
pub fn metacyclic_group(k: usize, m: usize, l: usize, p: usize) -> Result<Option<GroupRef>> {
    if k == 0 || m == 0 || l >= m {
        return Err(Error::precondition("metacyclic parameters need k,m >= 1 and 0 <= l < m"));
    }
    if !is_prime(p) {
        return Err(Error::precondition("metacyclic parameter p must be prime"));
    }
    if pow_mod(p as u64, k as u64, m as u64) != 1 % m as u64 {
        return Ok(None);
    }
    if (l as u64 * (p as u64 - 1)) % m as u64 != 0 {
        return Ok(None);
    }
    let order = k.checked_mul(m).unwrap_or(usize::MAX);
    if order > MAX_ORDER {
        return Err(Error::capacity(format!("metacyclic group order exceeds {MAX_ORDER}")));
    }
    // powers of p mod m for each x-exponent
    let mut ppow = vec![1u64; k];
    for i in 1..k {
        ppow[i] = ppow[i - 1] * (p as u64) % m as u64;
    }
    let idx = |i: usize, j: usize| -> usize { j + m * i };
    let mut table = vec![0u32; order * order];
    for i in 0..k {
        for j in 0..m {
            for i2 in 0..k {
                for j2 in 0..m {
                    let mut ii = i + i2;
                    let mut jj = (j as u64 * ppow[i2] + j2 as u64) % m as u64;
                    if ii >= k {
                        ii -= k;
                        jj = (jj + l as u64) % m as u64;
                    }
                    table[idx(i, j) * order + idx(i2, j2)] = idx(ii, jj as usize) as u32;
                }
            }
        }
    }
    let mut gens = Vec::new();
    if k >= 2 {
        gens.push(idx(1, 0) as u32);
    }
    if m >= 2 {
        gens.push(idx(0, 1) as u32);
    }
    Ok(Some(Group::from_table(table, gens, None, None)?))
}

/// The quaternion group of order 8 on `{±1, ±i, ±j, ±k}`.
pub fn quaternion_group() -> Result<GroupRef> {
    // index = 2*axis + sign with axes 1, i, j, k
    let enc = |axis: usize, sign: usize| axis * 2 + sign;
    let mul_axes = |a: usize, b: usize| -> (usize, usize) {
        // returns (axis, sign) of product of unit axes (1,i,j,k as 0..3)
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (1, 1) => (0, 1),
            (2, 2) => (0, 1),
            (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let mut table = vec![0u32; 64];
    for a in 0..4 {
        for sa in 0..2 {
            for b in 0..4 {
                for sb in 0..2 {
                    let (axis, s) = mul_axes(a, b);
                    let sign = (sa + sb + s) % 2;
                    table[enc(a, sa) * 8 + enc(b, sb)] = enc(axis, sign) as u32;
                }
            }
        }
    }
    Group::from_table(table, vec![enc(1, 0) as u32, enc(2, 0) as u32], None, None)
}

/// The Heisenberg group of upper unitriangular 3x3 matrices over `F_p`,
/// on triples `(a, b, c)` with index `a + p*b + p^2*c`.
pub fn heisenberg_group(p: usize) -> Result<GroupRef> {
    if !is_prime(p) {
        return Err(Error::precondition("heisenberg parameter must be prime"));
    }
    let order = p * p * p;
    if order > MAX_ORDER {
        return Err(Error::capacity(format!("heisenberg group order exceeds {MAX_ORDER}")));
    }
    let enc = |a: usize, b: usize, c: usize| a + p * b + p * p * c;
    let mut table = vec![0u32; order * order];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let x = enc(a, b, c);
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let y = enc(a2, b2, c2);
                            let z = enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
                            table[x * order + y] = z as u32;
                        }
                    }
                }
            }
        }
    }
    Group::from_table(table, vec![enc(1, 0, 0) as u32, enc(0, 1, 0) as u32], None, None)
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Structural invariants that are cheap to compare; equal fingerprints are
/// necessary (not sufficient) for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    /// (element order, multiplicity), sorted.
    pub element_orders: Vec<(usize, usize)>,
    /// Invariant factors of G/[G,G], each dividing the next.
    pub abelianization: Vec<usize>,
    /// Orders down the derived series until it stabilizes.
    pub derived_series: Vec<usize>,
    /// (conjugacy class size, multiplicity), sorted.
    pub class_sizes: Vec<(usize, usize)>,
}

pub fn fingerprint(g: &GroupRef) -> GroupFingerprint {
    let mut order_counts: HashMap<usize, usize> = HashMap::new();
    for x in 0..g.order() {
        *order_counts.entry(g.order_of(x)).or_insert(0) += 1;
    }
    let mut element_orders: Vec<(usize, usize)> = order_counts.into_iter().collect();
    element_orders.sort_unstable();

    let mut derived_series = vec![g.order()];
    let mut cur = g.clone();
    loop {
        let d = analysis::derived_subgroup(&cur);
        if d.order() == cur.order() {
            break;
        }
        derived_series.push(d.order());
        if d.order() == 1 {
            break;
        }
        let sub = crate::group::subgroup_generated(&cur, &d.elems().to_vec());
        cur = subgroup_as_group(&cur, &sub);
    }

    let abelianization = {
        let d = analysis::derived_subgroup(g);
        let (q, _) = crate::group::quotient(g, &d).expect("derived subgroup is normal");
        invariant_factors(&q)
    };

    let mut class_counts: HashMap<usize, usize> = HashMap::new();
    for c in &g.classes().classes {
        *class_counts.entry(c.len()).or_insert(0) += 1;
    }
    let mut class_sizes: Vec<(usize, usize)> = class_counts.into_iter().collect();
    class_sizes.sort_unstable();

    GroupFingerprint {
        order: g.order(),
        element_orders,
        abelianization,
        derived_series,
        class_sizes,
    }
}

/// Reifies a subgroup as a standalone group (indices renumbered in sorted
/// element order; the identity stays at 0).
pub fn subgroup_as_group(parent: &GroupRef, sub: &crate::group::Subgroup) -> GroupRef {
    let elems = sub.elems();
    let n = elems.len();
    let mut pos: HashMap<u32, usize> = HashMap::new();
    for (i, &e) in elems.iter().enumerate() {
        pos.insert(e, i);
    }
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = pos[&(parent.mul(elems[a] as usize, elems[b] as usize) as u32)] as u32;
        }
    }
    let gens: Vec<u32> = if n == 1 {
        Vec::new()
    } else {
        // generate greedily: every element works, but keep it small
        let mut gens: Vec<u32> = Vec::new();
        let mut have = vec![false; n];
        have[0] = true;
        let mut covered = 1usize;
        while covered < n {
            let pick = (0..n).find(|&i| !have[i]).unwrap();
            gens.push(pick as u32);
            let mut g = GroupScratch { table: &table, n };
            let closure = g.closure(&gens);
            covered = closure.len();
            for &e in &closure {
                have[e as usize] = true;
            }
        }
        gens
    };
    Group::from_table(table, gens, None, None).expect("subgroup table is a group")
}

struct GroupScratch<'a> {
    table: &'a [u32],
    n: usize,
}

impl GroupScratch<'_> {
    fn closure(&mut self, gens: &[u32]) -> Vec<u32> {
        let mut inset = vec![false; self.n];
        inset[0] = true;
        let mut stack: Vec<usize> = vec![0];
        let mut out = vec![0u32];
        for &g in gens {
            if !inset[g as usize] {
                inset[g as usize] = true;
                stack.push(g as usize);
                out.push(g);
            }
        }
        let mut head = 0;
        while head < stack.len() {
            let x = stack[head];
            head += 1;
            for &g in gens {
                let y = self.table[x * self.n + g as usize] as usize;
                if !inset[y] {
                    inset[y] = true;
                    stack.push(y);
                    out.push(y as u32);
                }
            }
        }
        out
    }
}

/// Exponent vectors of the primary decomposition of an abelian group:
/// for each prime, the ascending list of `n_{l,i}` with component
/// `Z/l^{n_{l,i}}`.
pub fn primary_decomposition(g: &GroupRef) -> Vec<(usize, Vec<usize>)> {
    assert!(g.is_abelian(), "primary decomposition of a non-abelian group");
    let n = g.order();
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            // s_k = #elements killed by p^k
            let mut dims = Vec::new();
            let mut prev = 1usize;
            let mut k = 1u32;
            loop {
                let sk = (0..n).filter(|&x| g.pow(x, (p as i64).pow(k)) == 0).count();
                if sk == prev {
                    break;
                }
                let mut d = 0;
                let mut q = sk / prev;
                while q > 1 {
                    q /= p;
                    d += 1;
                }
                dims.push(d);
                prev = sk;
                k += 1;
            }
            // dims[k-1] = #{i : n_i >= k}; recover the ascending exponent list
            let mut exps = Vec::new();
            for (level, _) in dims.iter().enumerate() {
                let at = dims[level] - dims.get(level + 1).copied().unwrap_or(0);
                for _ in 0..at {
                    exps.push(level + 1);
                }
            }
            exps.sort_unstable();
            out.push((p, exps));
        }
        p += 1;
    }
    out
}

/// Invariant factors `d_1 | d_2 | ... ` of an abelian group, ascending.
pub fn invariant_factors(g: &GroupRef) -> Vec<usize> {
    let primary = primary_decomposition(g);
    let m = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; m];
    for (p, exps) in &primary {
        // exps ascending; align to the right so the largest exponents stack
        for (i, &e) in exps.iter().enumerate() {
            let slot = m - exps.len() + i;
            factors[slot] *= p.pow(e as u32);
        }
    }
    factors
}

/// A basis of the `l`-primary part of an abelian group: independent elements
/// of orders `l^{e_1} >= l^{e_2} >= ...` (exponents as in `exps_desc`) whose
/// span is the whole component. Searched with backtracking, though the greedy
/// path always succeeds in practice.
pub fn abelian_primary_basis(g: &GroupRef, l: usize, exps_desc: &[usize]) -> Vec<u32> {
    let n = g.order();
    let component: Vec<u32> = (0..n)
        .filter(|&x| {
            let mut o = g.order_of(x);
            while o % l == 0 {
                o /= l;
            }
            o == 1
        })
        .map(|x| x as u32)
        .collect();
    let mut chosen: Vec<u32> = Vec::new();
    if search_basis(g, &component, l, exps_desc, &mut chosen) {
        chosen
    } else {
        panic!("abelian basis search failed; type detection is inconsistent");
    }
}

fn search_basis(
    g: &GroupRef,
    component: &[u32],
    l: usize,
    exps_desc: &[usize],
    chosen: &mut Vec<u32>,
) -> bool {
    let slot = chosen.len();
    if slot == exps_desc.len() {
        return true;
    }
    let want_order = l.pow(exps_desc[slot] as u32);
    let current_size = g.closure_of(chosen).len();
    for &cand in component {
        if g.order_of(cand as usize) != want_order {
            continue;
        }
        chosen.push(cand);
        // independence: the span must grow by a full factor of `want_order`
        if g.closure_of(chosen).len() == current_size * want_order
            && search_basis(g, component, l, exps_desc, chosen)
        {
            return true;
        }
        chosen.pop();
    }
    false
}

/// First isomorphism found between two groups, or `None`.
pub fn isomorphism(g: &GroupRef, h: &GroupRef) -> Result<Option<crate::group::Homomorphism>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if fingerprint(g) != fingerprint(h) {
        return Ok(None);
    }
    let found = search::bijective_homs(g, h, false, search::DEFAULT_SEARCH_BUDGET)?;
    Ok(found.into_iter().next().map(|images| {
        crate::group::Homomorphism::new_unchecked(g.clone(), h.clone(), images)
    }))
}

pub fn are_isomorphic(g: &GroupRef, h: &GroupRef) -> Result<bool> {
    Ok(isomorphism(g, h)?.is_some())
}
