//! Backtracking search for bijective homomorphisms between groups of equal
//! order, shared by the automorphism and isomorphism machinery.
//!
//! Images of a fixed generating sequence are chosen one at a time, with
//! candidates restricted to elements matching an order/class-size/power-map
//! profile, and a partial multiplicative closure propagated after each
//! choice so contradictions surface early.

use std::collections::HashMap;

use crate::group::{Group, GroupRef};
use crate::{Error, Result};

pub const DEFAULT_SEARCH_BUDGET: usize = 10_000_000;

/// A generating sequence chosen for pruning power: repeatedly pick the
/// element of largest order outside the span so far (least index on ties).
pub fn generating_sequence(g: &Group) -> Vec<u32> {
    let n = g.order();
    let mut gens: Vec<u32> = Vec::new();
    let mut span = g.closure_of(&gens);
    while span.len() < n {
        let mut best: Option<(usize, usize)> = None; // (order, index), max order then min index
        let mut inspan = vec![false; n];
        for &e in &span {
            inspan[e as usize] = true;
        }
        for x in 0..n {
            if inspan[x] {
                continue;
            }
            let o = g.order_of(x);
            match best {
                None => best = Some((o, x)),
                Some((bo, _)) if o > bo => best = Some((o, x)),
                _ => {}
            }
        }
        gens.push(best.unwrap().1 as u32);
        span = g.closure_of(&gens);
    }
    gens
}

/// Conjugation-invariant element profiles; a bijective homomorphism must map
/// each element to one with the same profile.
fn profiles(g: &Group) -> Vec<Vec<u32>> {
    let classes = g.classes();
    (0..g.order())
        .map(|x| {
            let o = g.order_of(x);
            let mut prof = vec![o as u32, classes.class_size(x) as u32];
            let mut q = 2;
            while q <= o {
                if o % q == 0 && crate::construct::is_prime(q) {
                    let y = g.pow(x, q as i64);
                    prof.push(q as u32);
                    prof.push(g.order_of(y) as u32);
                    prof.push(classes.class_size(y) as u32);
                }
                q += 1;
            }
            prof
        })
        .collect()
}

struct SearchState<'a> {
    g: &'a Group,
    h: &'a Group,
    gens: &'a [u32],
    candidates: Vec<Vec<u32>>,
    img: Vec<u32>,
    used: Vec<bool>,
    /// Elements of the subgroup generated by the assigned generators, in
    /// discovery order; truncated on undo.
    elems: Vec<u32>,
    nodes: usize,
    budget: usize,
    found: Vec<Vec<u32>>,
    find_all: bool,
}

/// All (or the first) bijective homomorphisms `g -> h`, as image tables
/// sorted lexicographically. The node budget caps candidate attempts.
pub fn bijective_homs(
    g: &GroupRef,
    h: &GroupRef,
    find_all: bool,
    budget: usize,
) -> Result<Vec<Vec<u32>>> {
    if g.order() != h.order() {
        return Ok(Vec::new());
    }
    let n = g.order();
    if n == 1 {
        return Ok(vec![vec![0]]);
    }
    let gens = generating_sequence(g);
    let prof_g = profiles(g);
    let prof_h = profiles(h);
    let mut buckets: HashMap<&[u32], Vec<u32>> = HashMap::new();
    for y in 0..n {
        buckets.entry(prof_h[y].as_slice()).or_default().push(y as u32);
    }
    let mut candidates: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for &gen in &gens {
        match buckets.get(prof_g[gen as usize].as_slice()) {
            Some(c) => candidates.push(c.clone()),
            None => return Ok(Vec::new()),
        }
    }
    let mut st = SearchState {
        g,
        h,
        gens: &gens,
        candidates,
        img: vec![u32::MAX; n],
        used: vec![false; n],
        elems: vec![0],
        nodes: 0,
        budget,
        found: Vec::new(),
        find_all,
    };
    st.img[0] = 0;
    st.used[0] = true;
    dfs(&mut st, 0)?;
    let mut found = st.found;
    found.sort_unstable();
    Ok(found)
}

fn dfs(st: &mut SearchState<'_>, depth: usize) -> Result<bool> {
    if depth == st.gens.len() {
        st.found.push(st.img.clone());
        return Ok(!st.find_all);
    }
    let gd = st.gens[depth] as usize;
    let cands = st.candidates[depth].clone();
    for y in cands {
        st.nodes += 1;
        if st.nodes > st.budget {
            return Err(Error::capacity(format!(
                "generator-image search exceeded {} nodes on a group of order {}",
                st.budget,
                st.g.order()
            )));
        }
        if st.used[y as usize] {
            continue;
        }
        // assign the generator image
        st.img[gd] = y;
        st.used[y as usize] = true;
        st.elems.push(gd as u32);
        let snapshot = st.elems.len() - 1;
        if extend_closure(st, depth).is_some() && dfs(st, depth + 1)? {
            return Ok(true);
        }
        // undo everything from snapshot on
        for i in snapshot..st.elems.len() {
            let e = st.elems[i] as usize;
            let fe = st.img[e];
            st.used[fe as usize] = false;
            st.img[e] = u32::MAX;
        }
        st.elems.truncate(snapshot);
    }
    Ok(false)
}

/// Propagates the partial closure after a new generator assignment. On
/// contradiction returns `None`, leaving the trail for the caller to undo.
fn extend_closure(st: &mut SearchState<'_>, depth: usize) -> Option<()> {
    let mut head = 0;
    while head < st.elems.len() {
        let x = st.elems[head] as usize;
        head += 1;
        for d in 0..=depth {
            let gd = st.gens[d] as usize;
            let y = st.g.mul(x, gd);
            let fy = st.h.mul(st.img[x] as usize, st.img[gd] as usize) as u32;
            if st.img[y] == u32::MAX {
                if st.used[fy as usize] {
                    return None;
                }
                st.img[y] = fy;
                st.used[fy as usize] = true;
                st.elems.push(y as u32);
            } else if st.img[y] != fy {
                return None;
            }
        }
    }
    Some(())
}
