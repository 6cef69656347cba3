//! Group catalogs: a bundled library of small groups built from recipes, and
//! a line-oriented text format for importing and exporting groups.
//!
//! The text format (UTF-8, `#` comments):
//!
//! ```text
//! group <name> perm <degree>
//! gen <img(1)> <img(2)> ... <img(degree)>     # 1-based, one line per generator
//! end
//! group <name> construct <recipe>
//! # recipes: cyclic(n) | abelian(n1,n2,...) | direct(nameA,nameB)
//! #          | semidirect(nameV,nameT,<action: one [i0 i1 ...] per T-generator,
//! #            0-based V element indices>)
//! #          | metacyclic(k,m,l,p) | quaternion8 | heisenberg(p)
//! end
//! ```
//!
//! Serialization always writes `perm` blocks, using a stored faithful action
//! when one is known and the regular representation (degree = order)
//! otherwise.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::construct::{
    abelian_group, direct_product, fp2_linear_table, heisenberg_group, inversion_automorphism,
    metacyclic_group, power_automorphism, quaternion_group, semidirect_product,
};
use crate::group::{group_from_perms, GroupRef};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: GroupRef,
    /// The construct recipe, when the entry came from one.
    pub recipe: Option<String>,
}

#[derive(Default, Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    by_name: HashMap<String, usize>,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    pub fn push(&mut self, entry: CatalogEntry) -> Result<()> {
        if self.by_name.contains_key(&entry.name) {
            return Err(Error::selector(format!("duplicate catalog name `{}`", entry.name)));
        }
        self.by_name.insert(entry.name.clone(), self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.by_name.get(name).map(|&i| &self.entries[i])
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Appends all entries of `other`, rejecting duplicate names.
    pub fn extend(&mut self, other: Catalog) -> Result<()> {
        for e in other.entries {
            self.push(e)?;
        }
        Ok(())
    }
}

/// Evaluates a `construct` recipe, resolving names through `lookup`.
pub fn build_recipe(recipe: &str, lookup: &dyn Fn(&str) -> Option<GroupRef>) -> Result<GroupRef> {
    let recipe = recipe.trim();
    let (head, args) = match recipe.find('(') {
        Some(i) => {
            if !recipe.ends_with(')') {
                return Err(Error::selector(format!("malformed recipe `{recipe}`")));
            }
            (&recipe[..i], &recipe[i + 1..recipe.len() - 1])
        }
        None => (recipe, ""),
    };
    let ints = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| {
                Error::selector(format!("expected integer list in recipe `{recipe}`"))
            }))
            .collect()
    };
    match head {
        "cyclic" => {
            let v = ints(args)?;
            if v.len() != 1 {
                return Err(Error::selector("cyclic takes one argument"));
            }
            if v[0] == 1 {
                abelian_group(&[])
            } else {
                abelian_group(&[v[0]])
            }
        }
        "abelian" => abelian_group(&ints(args)?),
        "quaternion8" => quaternion_group(),
        "heisenberg" => {
            let v = ints(args)?;
            if v.len() != 1 {
                return Err(Error::selector("heisenberg takes one argument"));
            }
            heisenberg_group(v[0])
        }
        "metacyclic" => {
            let v = ints(args)?;
            if v.len() != 4 {
                return Err(Error::selector("metacyclic takes (k,m,l,p)"));
            }
            metacyclic_group(v[0], v[1], v[2], v[3])?.ok_or_else(|| {
                Error::selector(format!("metacyclic parameters {args} are inconsistent"))
            })
        }
        "direct" => {
            let parts: Vec<&str> = args.split(',').map(|s| s.trim()).collect();
            if parts.len() != 2 {
                return Err(Error::selector("direct takes two catalog names"));
            }
            let a = lookup(parts[0])
                .ok_or_else(|| Error::selector(format!("unknown group `{}`", parts[0])))?;
            let b = lookup(parts[1])
                .ok_or_else(|| Error::selector(format!("unknown group `{}`", parts[1])))?;
            direct_product(&a, &b)
        }
        "semidirect" => {
            // semidirect(nameV,nameT,[...][...])
            let first_comma = args
                .find(',')
                .ok_or_else(|| Error::selector("semidirect takes (V,T,action)"))?;
            let name_v = args[..first_comma].trim();
            let rest = &args[first_comma + 1..];
            let second_comma = rest
                .find(',')
                .ok_or_else(|| Error::selector("semidirect takes (V,T,action)"))?;
            let name_t = rest[..second_comma].trim();
            let action_src = rest[second_comma + 1..].trim();
            let v = lookup(name_v)
                .ok_or_else(|| Error::selector(format!("unknown group `{name_v}`")))?;
            let t = lookup(name_t)
                .ok_or_else(|| Error::selector(format!("unknown group `{name_t}`")))?;
            let mut tables: Vec<Vec<u32>> = Vec::new();
            let mut rest = action_src;
            while !rest.is_empty() {
                if !rest.starts_with('[') {
                    return Err(Error::selector("semidirect action must be [..][..] lists"));
                }
                let close = rest
                    .find(']')
                    .ok_or_else(|| Error::selector("unterminated [ in semidirect action"))?;
                let body = &rest[1..close];
                let table: Vec<u32> = body
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<u32>().map_err(|_| {
                            Error::selector("semidirect action entries must be integers")
                        })
                    })
                    .collect::<Result<_>>()?;
                tables.push(table);
                rest = rest[close + 1..].trim_start();
            }
            semidirect_product(&v, &t, &tables)
        }
        other => Err(Error::selector(format!("unknown recipe `{other}`"))),
    }
}

/// Parses the catalog text format.
pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut cat = Catalog::new();
    let mut lines = text.lines().enumerate().peekable();
    while let Some((lineno, raw)) = lines.next() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] != "group" {
            return Err(Error::parse(lineno + 1, format!("expected `group`, found `{}`", toks[0])));
        }
        if toks.len() < 3 {
            return Err(Error::parse(lineno + 1, "truncated group header"));
        }
        let name = toks[1].to_string();
        match toks[2] {
            "perm" => {
                let degree: usize = toks
                    .get(3)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(lineno + 1, "perm block needs a degree"))?;
                let mut gens: Vec<Vec<u32>> = Vec::new();
                let mut closed = false;
                for (gl, graw) in lines.by_ref() {
                    let gline = strip_comment(graw);
                    if gline.is_empty() {
                        continue;
                    }
                    if gline == "end" {
                        closed = true;
                        break;
                    }
                    let gtoks: Vec<&str> = gline.split_whitespace().collect();
                    if gtoks[0] != "gen" {
                        return Err(Error::parse(gl + 1, "expected `gen` or `end`"));
                    }
                    if gtoks.len() - 1 != degree {
                        return Err(Error::parse(
                            gl + 1,
                            format!("inconsistent degree: expected {degree} images"),
                        ));
                    }
                    let mut images = Vec::with_capacity(degree);
                    for t in &gtoks[1..] {
                        let v: usize = t
                            .parse()
                            .map_err(|_| Error::parse(gl + 1, "generator image must be an integer"))?;
                        if v < 1 || v > degree {
                            return Err(Error::parse(gl + 1, "generator image out of range"));
                        }
                        images.push((v - 1) as u32);
                    }
                    gens.push(images);
                }
                if !closed {
                    return Err(Error::parse(lineno + 1, "perm block missing `end`"));
                }
                let group = group_from_perms(degree, &gens, Some(name.clone())).map_err(|e| {
                    match e {
                        Error::Precondition(msg) => Error::parse(lineno + 1, msg),
                        other => other,
                    }
                })?;
                group.verify_axioms().map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
                cat.push(CatalogEntry { name, group, recipe: None })
                    .map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
            }
            "construct" => {
                if toks.len() < 4 {
                    return Err(Error::parse(lineno + 1, "construct block needs a recipe"));
                }
                let recipe = toks[3..].join(" ");
                // consume the closing `end`
                let mut closed = false;
                for (gl, graw) in lines.by_ref() {
                    let gline = strip_comment(graw);
                    if gline.is_empty() {
                        continue;
                    }
                    if gline == "end" {
                        closed = true;
                        break;
                    }
                    return Err(Error::parse(gl + 1, "construct block takes no body"));
                }
                if !closed {
                    return Err(Error::parse(lineno + 1, "construct block missing `end`"));
                }
                let group = {
                    let lookup = |n: &str| cat.get(n).map(|e| e.group.clone());
                    build_recipe(&recipe, &lookup)
                        .map_err(|e| Error::parse(lineno + 1, e.to_string()))?
                };
                group.verify_axioms().map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
                cat.push(CatalogEntry { name, group, recipe: Some(recipe) })
                    .map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
            }
            other => {
                return Err(Error::parse(lineno + 1, format!("unknown block kind `{other}`")));
            }
        }
    }
    Ok(cat)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

/// Serializes one group as a `perm` block: the stored faithful action when
/// available, the regular representation otherwise.
pub fn serialize_group(name: &str, g: &GroupRef) -> String {
    let mut out = String::new();
    match g.perm_action() {
        Some(action) => {
            writeln!(out, "group {} perm {}", name, action.degree).unwrap();
            for images in &action.gen_images {
                let imgs: Vec<String> = images.iter().map(|&x| (x + 1).to_string()).collect();
                writeln!(out, "gen {}", imgs.join(" ")).unwrap();
            }
        }
        None => {
            let n = g.order();
            writeln!(out, "group {} perm {}", name, n).unwrap();
            for &gen in g.generators() {
                let imgs: Vec<String> =
                    (0..n).map(|x| (g.mul(x, gen as usize) + 1).to_string()).collect();
                writeln!(out, "gen {}", imgs.join(" ")).unwrap();
            }
        }
    }
    out.push_str("end\n");
    out
}

pub fn serialize_catalog(cat: &Catalog) -> String {
    let mut out = String::new();
    for e in cat.entries() {
        out.push_str(&serialize_group(&e.name, &e.group));
    }
    out
}

/// All abelian groups of order `n` up to isomorphism, as invariant-factor
/// lists (ascending divisibility).
pub fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    let mut primes: Vec<(usize, usize)> = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        if rest % p == 0 {
            let mut v = 0;
            while rest % p == 0 {
                rest /= p;
                v += 1;
            }
            primes.push((p, v));
        }
        p += 1;
    }
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for &(p, v) in &primes {
        let parts = partitions(v);
        let mut next = Vec::new();
        for chosen in &out {
            for part in &parts {
                let mut c = chosen.clone();
                c.push(part.iter().map(|&e| p.pow(e as u32)).collect());
                next.push(c);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|per_prime| {
            // merge primary components (each descending) into invariant factors
            let m = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
            let mut factors = vec![1usize; m];
            for comp in &per_prime {
                for (i, &q) in comp.iter().enumerate() {
                    factors[i] *= q;
                }
            }
            factors.reverse(); // ascending divisibility
            factors
        })
        .collect()
}

/// Partitions of `n` in descending part order.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn abelian_name(factors: &[usize]) -> String {
    let mut parts: Vec<String> = factors.iter().rev().map(|f| format!("c{f}")).collect();
    if parts.is_empty() {
        parts.push("c1".to_string());
    }
    parts.join("x")
}

/// The bundled catalog: all abelian groups of orders 1..=60 except 32, the
/// dihedral family, and the named nonabelian groups the tests and surveys
/// exercise. Built fresh on each call; construction is cheap.
pub fn bundled() -> Catalog {
    let mut cat = Catalog::new();
    let mut add = |name: String, group: GroupRef, recipe: Option<String>| {
        cat.push(CatalogEntry { name, group, recipe }).expect("bundled names are unique");
    };

    add("c1".into(), abelian_group(&[]).unwrap(), Some("cyclic(1)".into()));
    for n in 2..=60usize {
        if n == 32 {
            continue;
        }
        for factors in abelian_types(n) {
            let name = abelian_name(&factors);
            let recipe = format!(
                "abelian({})",
                factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(",")
            );
            add(name, abelian_group(&factors).unwrap(), Some(recipe));
        }
    }

    // dihedral groups of order 2n: inversion on a cyclic group
    // (n = 16 skipped to keep order 32 out of the catalog range)
    for n in (3..=30usize).filter(|&n| n != 16) {
        let v = abelian_group(&[n]).unwrap();
        let t = abelian_group(&[2]).unwrap();
        let inv = inversion_automorphism(&v).unwrap();
        add(format!("d{n}"), semidirect_product(&v, &t, &[inv]).unwrap(), None);
    }

    add("q8".into(), quaternion_group().unwrap(), Some("quaternion8".into()));
    add("heis3".into(), heisenberg_group(3).unwrap(), Some("heisenberg(3)".into()));

    // the extraspecial-exponent-9 cousin of heis3: C9 : C3 via x -> x^4
    {
        let c9 = abelian_group(&[9]).unwrap();
        let c3 = abelian_group(&[3]).unwrap();
        let act = power_automorphism(&c9, 4).unwrap();
        add("c9:c3".into(), semidirect_product(&c9, &c3, &[act]).unwrap(), None);
    }

    // dicyclic: C3 : C4 with the order-4 generator inverting
    {
        let c3 = abelian_group(&[3]).unwrap();
        let c4 = abelian_group(&[4]).unwrap();
        let inv = inversion_automorphism(&c3).unwrap();
        add("c3:c4".into(), semidirect_product(&c3, &c4, &[inv]).unwrap(), None);
    }

    // generalized dihedral and scalar-action families on F_p^2 / F_3^3
    for (name, pf, tf) in [("f3^2:c2", vec![3usize, 3], 2usize), ("f5^2:c2", vec![5, 5], 2), ("f7^2:c2", vec![7, 7], 2)] {
        let v = abelian_group(&pf).unwrap();
        let t = abelian_group(&[tf]).unwrap();
        let inv = inversion_automorphism(&v).unwrap();
        add(name.into(), semidirect_product(&v, &t, &[inv]).unwrap(), None);
    }
    {
        let v = abelian_group(&[3, 3]).unwrap();
        let t = abelian_group(&[4]).unwrap();
        let inv = inversion_automorphism(&v).unwrap();
        add("f3^2:c4".into(), semidirect_product(&v, &t, &[inv]).unwrap(), None);
    }
    {
        let v = abelian_group(&[3, 3, 3]).unwrap();
        let t = abelian_group(&[2]).unwrap();
        let inv = inversion_automorphism(&v).unwrap();
        add("f3^3:c2".into(), semidirect_product(&v, &t, &[inv]).unwrap(), None);
    }
    {
        // F_3^2 : D8 with the faithful planar action of the dihedral group of order 8
        let v = abelian_group(&[3, 3]).unwrap();
        let c4 = abelian_group(&[4]).unwrap();
        let c2 = abelian_group(&[2]).unwrap();
        let rot = fp2_linear_table(3, [[0, -1], [1, 0]]);
        let flip = fp2_linear_table(3, [[1, 0], [0, -1]]);
        let d8 = semidirect_product(&c4, &c2, &[inversion_automorphism(&c4).unwrap()]).unwrap();
        // d8 generators: the rotation (index 1 in C4 slot) and the reflection
        debug_assert_eq!(d8.generators().len(), 2);
        add("f3^2:d8".into(), semidirect_product(&v, &d8, &[rot, flip]).unwrap(), None);
        // the variant acting through a character: rotation trivial, the
        // reflection by -1, so the plane splits as two isomorphic lines
        let id = fp2_linear_table(3, [[1, 0], [0, 1]]);
        let neg = fp2_linear_table(3, [[-1, 0], [0, -1]]);
        add("f3^2:d8s".into(), semidirect_product(&v, &d8, &[id, neg]).unwrap(), None);
    }

    // metacyclic odd-order example: C7 : C3 via x -> x^2
    {
        let c7 = abelian_group(&[7]).unwrap();
        let c3 = abelian_group(&[3]).unwrap();
        let act = power_automorphism(&c7, 2).unwrap();
        add("c7:c3".into(), semidirect_product(&c7, &c3, &[act]).unwrap(), None);
    }

    // F_5^3, beyond the blanket abelian range
    add("c5xc5xc5".into(), abelian_group(&[5, 5, 5]).unwrap(), Some("abelian(5,5,5)".into()));

    // a few direct products with nonabelian factors
    {
        let d3 = cat.get("d3").unwrap().group.clone();
        let c3 = cat.get("c3").unwrap().group.clone();
        let d4 = cat.get("d4").unwrap().group.clone();
        let q8 = cat.get("q8").unwrap().group.clone();
        let mut add2 = |name: &str, g: GroupRef, recipe: String| {
            cat.push(CatalogEntry { name: name.into(), group: g, recipe: Some(recipe) })
                .expect("bundled names are unique");
        };
        add2("s3xc3", direct_product(&d3, &c3).unwrap(), "direct(d3,c3)".into());
        add2("s3xs3", direct_product(&d3, &d3).unwrap(), "direct(d3,d3)".into());
        add2("q8xc3", direct_product(&q8, &c3).unwrap(), "direct(q8,c3)".into());
        add2("d4xc3", direct_product(&d4, &c3).unwrap(), "direct(d4,c3)".into());
    }

    cat
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::are_isomorphic;

    #[test]
    fn parse_simple_perm_block() {
        let text = "\
# symmetric group on three points
group s3 perm 3
gen 2 1 3
gen 2 3 1
end
";
        let cat = parse_catalog(text).unwrap();
        assert_eq!(cat.len(), 1);
        assert_eq!(cat.get("s3").unwrap().group.order(), 6);
    }

    #[test]
    fn parse_empty_input() {
        assert_eq!(parse_catalog("").unwrap().len(), 0);
        assert_eq!(parse_catalog("# nothing here\n\n").unwrap().len(), 0);
    }

    #[test]
    fn parse_construct_with_reference() {
        let text = "\
group c3 construct cyclic(3)
end
group c2 construct cyclic(2)
end
group s3 construct semidirect(c3,c2,[0 2 1])
end
group c6 construct direct(c3,c2)
end
";
        let cat = parse_catalog(text).unwrap();
        assert_eq!(cat.get("s3").unwrap().group.order(), 6);
        assert!(!cat.get("s3").unwrap().group.is_abelian());
        assert!(cat.get("c6").unwrap().group.is_abelian());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_catalog("group x perm 3\ngen 1 1 2\nend\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_catalog("group x perm 3\ngen 1 2\nend\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("degree"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_catalog("group a construct cyclic(2)\nend\ngroup a construct cyclic(3)\nend\n")
            .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn round_trip_bundled_subset() {
        let cat = bundled();
        let mut small = Catalog::new();
        for name in ["c12", "d5", "q8", "heis3", "f3^2:c4"] {
            small.push(cat.get(name).unwrap().clone()).unwrap();
        }
        let text = serialize_catalog(&small);
        let re = parse_catalog(&text).unwrap();
        assert_eq!(re.len(), small.len());
        for e in small.entries() {
            let back = re.get(&e.name).unwrap();
            assert!(are_isomorphic(&e.group, &back.group).unwrap());
        }
    }

    #[test]
    fn bundled_catalog_is_consistent() {
        let cat = bundled();
        assert!(cat.len() > 100);
        for e in cat.entries() {
            e.group.verify_axioms().unwrap();
        }
        // spot-check a few orders
        assert_eq!(cat.get("q8").unwrap().group.order(), 8);
        assert_eq!(cat.get("f3^2:d8").unwrap().group.order(), 72);
        assert_eq!(cat.get("f7^2:c2").unwrap().group.order(), 98);
        assert_eq!(cat.get("c5xc5xc5").unwrap().group.order(), 125);
        // no order-32 entries
        assert!(cat.entries().iter().all(|e| e.group.order() != 32));
    }

    #[test]
    fn abelian_types_count() {
        assert_eq!(abelian_types(16).len(), 5);
        assert_eq!(abelian_types(12).len(), 2);
        assert_eq!(abelian_types(60).len(), 2);
        assert_eq!(abelian_types(36).len(), 4);
    }
}
