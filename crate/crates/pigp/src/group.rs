//! Finite groups as explicit multiplication structures.
//!
//! A [`Group`] owns a dense multiplication table over elements indexed
//! `0..n-1`, with index `0` always the identity. Everything else in the crate
//! (subgroups, homomorphisms, automorphisms, the counting engines) works with
//! these indices. Element indexing is canonical per constructor and all
//! set-valued outputs are sorted by index, so runs are reproducible.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::{Error, Result};

/// Hard cap on supported group order. Dense tables are materialized for every
/// group, so anything larger is out of range.
pub const MAX_ORDER: usize = 4096;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(0);

/// Shared handle to an immutable group.
pub type GroupRef = Arc<Group>;

/// A faithful permutation action remembered from construction, used when
/// serializing a group back to a `perm` block.
#[derive(Clone, Debug)]
pub struct PermAction {
    pub degree: usize,
    /// One image list (0-based) per stored generator.
    pub gen_images: Vec<Vec<u32>>,
}

/// Conjugacy class data, computed once per group.
pub struct ClassData {
    /// Class index of each element.
    pub class_of: Vec<u32>,
    /// Elements of each class, sorted; classes ordered by least element.
    pub classes: Vec<Vec<u32>>,
}

impl ClassData {
    pub fn class_size(&self, x: usize) -> usize {
        self.classes[self.class_of[x] as usize].len()
    }
}

/// An immutable finite group with a dense multiplication table.
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    gens: Vec<u32>,
    name: Option<String>,
    perm_action: Option<PermAction>,
    id: u64,
    classes: OnceLock<ClassData>,
    abelian: OnceLock<bool>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order={}, name={:?})", self.order, self.name)
    }
}

impl Group {
    /// Builds a group from a dense table, validating the identity, inverse
    /// and Latin-square properties plus that `gens` generate. Associativity
    /// is the caller's responsibility (every constructor in this crate builds
    /// tables from structures that are associative by construction);
    /// [`Group::verify_axioms`] spot-checks it.
    pub(crate) fn from_table(
        table: Vec<u32>,
        gens: Vec<u32>,
        name: Option<String>,
        perm_action: Option<PermAction>,
    ) -> Result<GroupRef> {
        let n = (table.len() as f64).sqrt().round() as usize;
        if n * n != table.len() {
            return Err(Error::precondition("multiplication table is not square"));
        }
        if n == 0 {
            return Err(Error::precondition("empty multiplication table"));
        }
        if n > MAX_ORDER {
            return Err(Error::capacity(format!(
                "group order {n} exceeds supported maximum {MAX_ORDER}"
            )));
        }
        // Identity at index 0 and Latin-square rows/columns.
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for a in 0..n {
            if table[a * n] as usize != a || table[a] as usize != a {
                return Err(Error::precondition("index 0 is not a two-sided identity"));
            }
            seen_row.iter_mut().for_each(|s| *s = false);
            seen_col.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let r = table[a * n + b] as usize;
                let c = table[b * n + a] as usize;
                if r >= n || c >= n || seen_row[r] || seen_col[c] {
                    return Err(Error::precondition("table row/column is not a permutation"));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    if table[b * n + a] != 0 {
                        return Err(Error::precondition("one-sided inverse"));
                    }
                    inv[a] = b as u32;
                }
            }
        }
        let mut elem_order = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1u32;
            while x != 0 {
                x = table[x * n + a] as usize;
                k += 1;
            }
            elem_order[a] = k;
        }
        let g = Group {
            order: n,
            table,
            inv,
            elem_order,
            gens,
            name,
            perm_action,
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            classes: OnceLock::new(),
            abelian: OnceLock::new(),
        };
        // The stored generator list must generate the whole universe.
        let closure = g.closure_of(&g.gens);
        if closure.len() != n {
            return Err(Error::precondition("generator list does not generate the group"));
        }
        Ok(Arc::new(g))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Unique per-instance id, used as a cache key.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn perm_action(&self) -> Option<&PermAction> {
        self.perm_action.as_ref()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv_of(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `a^k` by square-and-multiply; negative `k` goes through the inverse.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.elem_order[a] as i64;
        let mut e = k.rem_euclid(ord) as u64;
        let mut base = a;
        let mut acc = 0usize;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Conjugate `x^y = y^{-1} x y`.
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv_of(y), x), y)
    }

    /// Commutator `[x, y] = x^{-1} y^{-1} x y`.
    #[inline]
    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv_of(x), self.inv_of(y)), self.mul(x, y))
    }

    pub fn order_of(&self, a: usize) -> usize {
        self.elem_order[a] as usize
    }

    pub fn is_abelian(&self) -> bool {
        *self.abelian.get_or_init(|| {
            let n = self.order;
            for &a in &self.gens {
                for b in 0..n {
                    if self.mul(a as usize, b) != self.mul(b, a as usize) {
                        return false;
                    }
                }
            }
            true
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.elem_order.iter().any(|&o| o as usize == self.order)
    }

    /// Elements commuting with every generator (hence with everything).
    pub fn center(&self) -> Vec<u32> {
        (0..self.order)
            .filter(|&x| self.gens.iter().all(|&g| self.mul(x, g as usize) == self.mul(g as usize, x)))
            .map(|x| x as u32)
            .collect()
    }

    pub fn elem(self: &Arc<Self>, idx: usize) -> Elem {
        assert!(idx < self.order, "element index out of range");
        Elem { group: self.clone(), idx }
    }

    /// Conjugacy classes, computed on first use.
    pub fn classes(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order;
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let cid = classes.len() as u32;
                let mut members = vec![start as u32];
                class_of[start] = cid;
                let mut queue = vec![start];
                while let Some(x) = queue.pop() {
                    for g in 0..n {
                        let y = self.conj(x, g);
                        if class_of[y] == u32::MAX {
                            class_of[y] = cid;
                            members.push(y as u32);
                            queue.push(y);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            ClassData { class_of, classes }
        })
    }

    /// Closure of a set of element indices under multiplication, as a sorted
    /// vector. In a finite group the monoid closure is already a subgroup.
    pub fn closure_of(&self, seed: &[u32]) -> Vec<u32> {
        let n = self.order;
        let mut inset = vec![false; n];
        inset[0] = true;
        let mut elems = vec![0u32];
        let mut queue = vec![0usize];
        let gens: Vec<usize> = seed.iter().map(|&g| g as usize).collect();
        for &g in &gens {
            if !inset[g] {
                inset[g] = true;
                elems.push(g as u32);
                queue.push(g);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !inset[y] {
                    inset[y] = true;
                    elems.push(y as u32);
                    queue.push(y);
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Spot-checks the group axioms: identity and inverse laws on every
    /// element, closure by construction, and associativity exhaustively for
    /// small orders or on 10^4 pseudo-random triples otherwise.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::Verify(format!("identity law fails at {a}")));
            }
            let i = self.inv_of(a);
            if self.mul(a, i) != 0 || self.mul(i, a) != 0 {
                return Err(Error::Verify(format!("inverse law fails at {a}")));
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::Verify(format!("associativity fails at ({a},{b},{c})")));
            }
            Ok(())
        };
        if n <= 20 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64 ^ (n as u64);
            let mut next = move || {
                state = state.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                z ^ (z >> 31)
            };
            for _ in 0..10_000 {
                let a = (next() % n as u64) as usize;
                let b = (next() % n as u64) as usize;
                let c = (next() % n as u64) as usize;
                check(a, b, c)?;
            }
        }
        Ok(())
    }
}

/// An element of a specific group; operations panic if elements of distinct
/// groups are combined.
#[derive(Clone)]
pub struct Elem {
    group: GroupRef,
    idx: usize,
}

impl Elem {
    pub fn index(&self) -> usize {
        self.idx
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    fn same_group(&self, other: &Elem) {
        assert_eq!(
            self.group.id, other.group.id,
            "elements of distinct groups cannot be combined"
        );
    }

    pub fn mul(&self, other: &Elem) -> Elem {
        self.same_group(other);
        self.group.elem(self.group.mul(self.idx, other.idx))
    }

    pub fn inv(&self) -> Elem {
        self.group.elem(self.group.inv_of(self.idx))
    }

    pub fn pow(&self, k: i64) -> Elem {
        self.group.elem(self.group.pow(self.idx, k))
    }

    /// `self^other = other^{-1} · self · other`.
    pub fn conj(&self, other: &Elem) -> Elem {
        self.same_group(other);
        self.group.elem(self.group.conj(self.idx, other.idx))
    }

    /// `[self, other] = self^{-1} · other^{-1} · self · other`.
    pub fn comm(&self, other: &Elem) -> Elem {
        self.same_group(other);
        self.group.elem(self.group.comm(self.idx, other.idx))
    }

    pub fn order(&self) -> usize {
        self.group.order_of(self.idx)
    }

    pub fn is_identity(&self) -> bool {
        self.idx == 0
    }
}

impl PartialEq for Elem {
    fn eq(&self, other: &Self) -> bool {
        self.group.id == other.group.id && self.idx == other.idx
    }
}
impl Eq for Elem {}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.idx)
    }
}

/// A subgroup, stored as a sorted element-index set of its parent.
#[derive(Clone)]
pub struct Subgroup {
    parent: GroupRef,
    elems: Vec<u32>,
    gens: Vec<u32>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order={})", self.elems.len())
    }
}

impl Subgroup {
    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.binary_search(&(x as u32)).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elems.len() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        self.elems.iter().all(|&x| {
            g.generators().iter().all(|&c| self.contains(g.conj(x as usize, c as usize)))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.elems.len();
        self.elems.iter().any(|&x| self.parent.order_of(x as usize) == n)
    }

    pub fn is_p_group(&self, p: usize) -> bool {
        let mut n = self.elems.len();
        while n % p == 0 {
            n /= p;
        }
        n == 1
    }

    /// Intersection with another subgroup of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        assert_eq!(self.parent.id(), other.parent.id());
        let elems: Vec<u32> =
            self.elems.iter().copied().filter(|&x| other.contains(x as usize)).collect();
        let gens = elems.clone();
        Subgroup { parent: self.parent.clone(), elems, gens }
    }
}

/// Smallest subgroup containing `gens` (closure under multiplication).
pub fn subgroup_generated(group: &GroupRef, gens: &[u32]) -> Subgroup {
    let elems = group.closure_of(gens);
    let mut g: Vec<u32> = gens.iter().copied().filter(|&x| x != 0).collect();
    g.sort_unstable();
    g.dedup();
    Subgroup { parent: group.clone(), elems, gens: g }
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(group: &GroupRef, seed: &[u32]) -> Subgroup {
    let mut gens: Vec<u32> = seed.to_vec();
    loop {
        let sub = subgroup_generated(group, &gens);
        let mut grew = false;
        'outer: for &x in sub.elems() {
            for &c in group.generators() {
                let y = group.conj(x as usize, c as usize) as u32;
                if !sub.contains(y as usize) {
                    gens = sub.elems().to_vec();
                    gens.push(y);
                    grew = true;
                    break 'outer;
                }
            }
        }
        if !grew {
            return sub;
        }
    }
}

/// All normal subgroups of `group` containing `above` (default: trivial),
/// enumerated as closures of unions of conjugacy classes.
pub fn normal_subgroups(group: &GroupRef, above: Option<&Subgroup>) -> Result<Vec<Subgroup>> {
    let base = match above {
        Some(s) => {
            if !s.is_normal() {
                return Err(Error::precondition("`above` subgroup is not normal"));
            }
            s.clone()
        }
        None => subgroup_generated(group, &[]),
    };
    let class_reps: Vec<u32> =
        group.classes().classes.iter().map(|c| c[0]).filter(|&r| r != 0).collect();
    let mut found: Vec<Subgroup> = vec![base.clone()];
    let mut seen = std::collections::HashSet::new();
    seen.insert(base.elems().to_vec());
    let mut queue = vec![base];
    while let Some(cur) = queue.pop() {
        for &r in &class_reps {
            if cur.contains(r as usize) {
                continue;
            }
            let mut seed = cur.elems().to_vec();
            seed.push(r);
            let bigger = normal_closure(group, &seed);
            if seen.insert(bigger.elems().to_vec()) {
                found.push(bigger.clone());
                queue.push(bigger);
            }
        }
    }
    found.sort_by(|a, b| (a.order(), a.elems()).cmp(&(b.order(), b.elems())));
    Ok(found)
}

/// Minimal nontrivial normal subgroups.
pub fn minimal_normal_subgroups(group: &GroupRef) -> Vec<Subgroup> {
    let mut closures: Vec<Subgroup> = group
        .classes()
        .classes
        .iter()
        .map(|c| c[0])
        .filter(|&r| r != 0)
        .map(|r| normal_closure(group, &[r]))
        .collect();
    closures.sort_by(|a, b| (a.order(), a.elems()).cmp(&(b.order(), b.elems())));
    closures.dedup_by(|a, b| a.elems() == b.elems());
    let mut minimal: Vec<Subgroup> = Vec::new();
    'outer: for cand in closures {
        for kept in &minimal {
            if kept.elems().iter().all(|&x| cand.contains(x as usize)) {
                // cand contains an already-kept (smaller or equal) normal subgroup
                continue 'outer;
            }
        }
        minimal.push(cand);
    }
    minimal
}

/// A homomorphism recorded by its full image table.
#[derive(Clone)]
pub struct Homomorphism {
    domain: GroupRef,
    codomain: GroupRef,
    images: Vec<u32>,
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homomorphism({} -> {})", self.domain.order(), self.codomain.order())
    }
}

impl Homomorphism {
    pub fn new_unchecked(domain: GroupRef, codomain: GroupRef, images: Vec<u32>) -> Self {
        Homomorphism { domain, codomain, images }
    }

    pub fn domain(&self) -> &GroupRef {
        &self.domain
    }

    pub fn codomain(&self) -> &GroupRef {
        &self.codomain
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// Exhaustive homomorphism check; quadratic, intended for desk scale.
    pub fn verify(&self) -> bool {
        let n = self.domain.order();
        if self.images[0] != 0 {
            return false;
        }
        for a in 0..n {
            for b in 0..n {
                let lhs = self.images[self.domain.mul(a, b)] as usize;
                let rhs = self.codomain.mul(self.images[a] as usize, self.images[b] as usize);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.order()];
        for &i in &self.images {
            hit[i as usize] = true;
        }
        hit.iter().all(|&h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_surjective()
    }

    pub fn kernel(&self) -> Subgroup {
        let elems: Vec<u32> = (0..self.domain.order())
            .filter(|&x| self.images[x] == 0)
            .map(|x| x as u32)
            .collect();
        Subgroup { parent: self.domain.clone(), gens: elems.clone(), elems }
    }

    /// Least preimage of each codomain element; requires surjectivity.
    pub fn section(&self) -> Vec<u32> {
        let mut sec = vec![u32::MAX; self.codomain.order()];
        for x in 0..self.domain.order() {
            let q = self.images[x] as usize;
            if sec[q] == u32::MAX {
                sec[q] = x as u32;
            }
        }
        assert!(sec.iter().all(|&s| s != u32::MAX), "section of a non-surjective map");
        sec
    }
}

/// Quotient of `group` by a normal subgroup, with canonical coset indexing
/// (cosets ordered by least member, so the identity coset is index 0) and the
/// projection homomorphism.
pub fn quotient(group: &GroupRef, n: &Subgroup) -> Result<(GroupRef, Homomorphism)> {
    if !n.is_normal() {
        return Err(Error::precondition("quotient by a non-normal subgroup"));
    }
    let order = group.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps: Vec<u32> = Vec::new();
    for g in 0..order {
        if coset_of[g] != u32::MAX {
            continue;
        }
        let q = reps.len() as u32;
        reps.push(g as u32);
        for &v in n.elems() {
            coset_of[group.mul(g, v as usize)] = q;
        }
    }
    let m = reps.len();
    let mut table = vec![0u32; m * m];
    for a in 0..m {
        for b in 0..m {
            table[a * m + b] = coset_of[group.mul(reps[a] as usize, reps[b] as usize)];
        }
    }
    let mut gens: Vec<u32> = group
        .generators()
        .iter()
        .map(|&g| coset_of[g as usize])
        .filter(|&q| q != 0)
        .collect();
    gens.sort_unstable();
    gens.dedup();
    let q_group = Group::from_table(table, gens, None, None)?;
    let projection = Homomorphism {
        domain: group.clone(),
        codomain: q_group.clone(),
        images: coset_of,
    };
    debug_assert_eq!(projection.kernel().order(), n.order());
    Ok((q_group, projection))
}

/// The unique homomorphism extending `gens -> images`, if one exists.
/// `gens` must generate the domain.
pub fn homomorphism_from_images(
    domain: &GroupRef,
    codomain: &GroupRef,
    gens: &[u32],
    images: &[u32],
) -> Result<Option<Homomorphism>> {
    if gens.len() != images.len() {
        return Err(Error::precondition("generator and image lists differ in length"));
    }
    let n = domain.order();
    if domain.closure_of(gens).len() != n {
        return Err(Error::precondition("gens do not generate the domain"));
    }
    let mut img = vec![u32::MAX; n];
    img[0] = 0;
    let mut order_list = vec![0u32];
    let mut head = 0;
    while head < order_list.len() {
        let x = order_list[head] as usize;
        head += 1;
        for (i, &g) in gens.iter().enumerate() {
            let y = domain.mul(x, g as usize);
            let fy = codomain.mul(img[x] as usize, images[i] as usize) as u32;
            if img[y] == u32::MAX {
                img[y] = fy;
                order_list.push(y as u32);
            } else if img[y] != fy {
                return Ok(None);
            }
        }
    }
    debug_assert_eq!(order_list.len(), n);
    Ok(Some(Homomorphism { domain: domain.clone(), codomain: codomain.clone(), images: img }))
}

/// Builds the abstract group generated by permutations of `0..degree`.
/// Products compose left-to-right: `(fg)(x) = g(f(x))`.
pub fn group_from_perms(
    degree: usize,
    gen_perms: &[Vec<u32>],
    name: Option<String>,
) -> Result<GroupRef> {
    for p in gen_perms {
        if p.len() != degree {
            return Err(Error::precondition("permutation length does not match degree"));
        }
        let mut seen = vec![false; degree];
        for &x in p {
            if (x as usize) >= degree || seen[x as usize] {
                return Err(Error::precondition("generator image is not a bijection"));
            }
            seen[x as usize] = true;
        }
    }
    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut index: std::collections::HashMap<Vec<u32>, usize> = std::collections::HashMap::new();
    let mut elems: Vec<Vec<u32>> = vec![identity.clone()];
    index.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        head += 1;
        for g in gen_perms {
            let prod: Vec<u32> = cur.iter().map(|&x| g[x as usize]).collect();
            if !index.contains_key(&prod) {
                if elems.len() >= MAX_ORDER {
                    return Err(Error::capacity(format!(
                        "permutation closure exceeds supported maximum {MAX_ORDER}"
                    )));
                }
                index.insert(prod.clone(), elems.len());
                elems.push(prod);
            }
        }
    }
    // Canonical indexing: sort permutations lexicographically. The identity
    // is lex-least among bijections, so it lands at index 0.
    elems.sort_unstable();
    let n = elems.len();
    let index: std::collections::HashMap<&[u32], usize> =
        elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let prod: Vec<u32> = elems[a].iter().map(|&x| elems[b][x as usize]).collect();
            table[a * n + b] = index[prod.as_slice()] as u32;
        }
    }
    let gens: Vec<u32> = gen_perms.iter().map(|p| index[p.as_slice()] as u32).collect();
    let action = PermAction { degree, gen_images: gen_perms.to_vec() };
    Group::from_table(table, gens, name, Some(action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn s3() -> GroupRef {
        group_from_perms(3, &[vec![1, 0, 2], vec![1, 2, 0]], Some("s3".into())).unwrap()
    }

    #[test]
    fn identity_and_inverse_laws() {
        let g = s3();
        assert_eq!(g.order(), 6);
        g.verify_axioms().unwrap();
        for x in 0..6 {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
        }
    }

    #[test]
    fn commutator_of_transpositions_has_order_three() {
        let g = s3();
        // (12) and (13) as permutations.
        let t12 = (0..6).find(|&i| g.order_of(i) == 2).unwrap();
        let t13 = (0..6).find(|&i| g.order_of(i) == 2 && i != t12).unwrap();
        let c = g.comm(t12, t13);
        assert_eq!(g.order_of(c), 3);
    }

    #[test]
    fn conjugation_in_abelian_group_is_trivial() {
        let g = construct::abelian_group(&[12]).unwrap();
        for x in 0..12 {
            for y in 0..12 {
                assert_eq!(g.conj(x, y), x);
            }
        }
        // Generator of a cyclic group of order 12 has order 12.
        assert_eq!(g.order_of(g.generators()[0] as usize), 12);
    }

    #[test]
    fn subgroup_generated_closure() {
        let g = s3();
        let triv = subgroup_generated(&g, &[]);
        assert_eq!(triv.order(), 1);
        let all = subgroup_generated(&g, &g.generators().to_vec());
        assert_eq!(all.order(), 6);

        // C6 generated by an order-2 and an order-3 element.
        let c6 = construct::abelian_group(&[6]).unwrap();
        let two = (0..6).find(|&i| c6.order_of(i) == 2).unwrap() as u32;
        let three = (0..6).find(|&i| c6.order_of(i) == 3).unwrap() as u32;
        assert_eq!(subgroup_generated(&c6, &[two, three]).order(), 6);
    }

    #[test]
    fn subgroup_generated_is_idempotent() {
        let g = s3();
        let s = subgroup_generated(&g, &[g.generators()[1]]);
        let s2 = subgroup_generated(&g, &s.elems().to_vec());
        assert_eq!(s.elems(), s2.elems());
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = s3();
        let normals = normal_subgroups(&g, None).unwrap();
        let orders: Vec<usize> = normals.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
        for n in &normals {
            // conjugation-stable
            for &x in n.elems() {
                for y in 0..6 {
                    assert!(n.contains(g.conj(x as usize, y)));
                }
            }
        }
    }

    #[test]
    fn normal_subgroups_of_prime_cyclic() {
        let g = construct::abelian_group(&[7]).unwrap();
        let normals = normal_subgroups(&g, None).unwrap();
        assert_eq!(normals.len(), 2);
    }

    #[test]
    fn normal_subgroups_above() {
        let g = construct::abelian_group(&[4]).unwrap();
        let c2 = subgroup_generated(&g, &[g.pow(g.generators()[0] as usize, 2) as u32]);
        let normals = normal_subgroups(&g, Some(&c2)).unwrap();
        let orders: Vec<usize> = normals.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![2, 4]);
    }

    #[test]
    fn quotient_of_s3_by_rotations() {
        let g = s3();
        let a3 = normal_subgroups(&g, None).unwrap().into_iter().find(|s| s.order() == 3).unwrap();
        let (q, proj) = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.verify());
        assert_eq!(proj.kernel().order(), 3);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = s3();
        let whole = subgroup_generated(&g, &g.generators().to_vec());
        let (q, _) = quotient(&g, &whole).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_c6_by_c2_is_c3() {
        let g = construct::abelian_group(&[6]).unwrap();
        let two = (0..6).find(|&i| g.order_of(i) == 2).unwrap() as u32;
        let c2 = subgroup_generated(&g, &[two]);
        let (q, proj) = quotient(&g, &c2).unwrap();
        assert_eq!(q.order(), 3);
        assert!(proj.verify());
        // order-preserving on the 3-part
        let three = (0..6).find(|&i| g.order_of(i) == 3).unwrap();
        assert_eq!(q.order_of(proj.apply(three)), 3);
    }

    #[test]
    fn hom_from_images_projection_and_obstruction() {
        let c4 = construct::abelian_group(&[4]).unwrap();
        let c2 = construct::abelian_group(&[2]).unwrap();
        let h = homomorphism_from_images(&c4, &c2, &[c4.generators()[0]], &[1]).unwrap().unwrap();
        assert!(h.verify());
        assert!(h.is_surjective());

        let c3 = construct::abelian_group(&[3]).unwrap();
        let none = homomorphism_from_images(&c3, &c2, &[c3.generators()[0]], &[1]).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn hom_from_images_inner_automorphism_of_s3() {
        let g = s3();
        let gens = g.generators().to_vec();
        let c = gens[1]; // a 3-cycle
        let imgs: Vec<u32> =
            gens.iter().map(|&x| g.conj(x as usize, c as usize) as u32).collect();
        let h = homomorphism_from_images(&g, &g, &gens, &imgs).unwrap().unwrap();
        assert!(h.verify());
        assert!(h.is_bijective());
    }

    #[test]
    #[should_panic(expected = "distinct groups")]
    fn mixed_group_elements_panic() {
        let a = s3();
        let b = construct::abelian_group(&[6]).unwrap();
        let x = a.elem(1);
        let y = b.elem(1);
        let _ = x.mul(&y);
    }

    #[test]
    fn axioms_hold_for_constructed_groups() {
        for g in [
            s3(),
            construct::abelian_group(&[8, 2]).unwrap(),
            construct::quaternion_group().unwrap(),
            construct::heisenberg_group(3).unwrap(),
        ] {
            g.verify_axioms().unwrap();
        }
    }
}
