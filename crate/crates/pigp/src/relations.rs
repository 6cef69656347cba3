//! Arithmetic of the presentation of the absolute Galois group of `Q_p`,
//! specialized to the finite quotient at hand: the exponents `a` and `b`
//! realizing the profinite projections, the Teichmüller unit `h`, the two
//! bracket words, the auxiliary element `y₁`, and the tame/wild relation
//! predicates.
//!
//! Conventions, fixed once: `x^y = y⁻¹xy`, `[x, y] = x⁻¹y⁻¹xy`, and a
//! superscript sum `g + g'` means the product of the two conjugates in
//! left-to-right order.

use crate::construct::{is_prime, pow_mod};
use crate::group::Group;
use crate::{Error, Result};

/// The arithmetic companion for evaluating relation words in a group of
/// order `n` at an odd prime `p`.
///
/// With `n = u_p·p^r = u₂·2^s` (`u_p` prime to `p`, `u₂` odd):
///
/// * `a ≡ 0 (mod u_p)` and `(p-1)·a ≡ 1 (mod p^r)` — raising to the `a`
///   realizes the projection `π/(p-1)`;
/// * `b ≡ 0 (mod u₂)` and `b ≡ 1 (mod 2^s)` — raising to the `b` realizes
///   the projection `π₂`;
/// * `h` is the Teichmüller lift mod `p^r` of a primitive root mod `p`
///   (`h^{p-1} ≡ 1 (mod p^r)`), with `h = 1` when `r = 0`.
#[derive(Clone, Debug)]
pub struct RelationContext {
    pub p: usize,
    pub n: usize,
    pub u_p: usize,
    pub r: u32,
    pub p_pow_r: u64,
    pub u2: usize,
    pub s: u32,
    pub two_pow_s: u64,
    pub a: u64,
    pub b: u64,
    pub h: u64,
    /// The primitive-root seed mod p that `h` lifts.
    pub h_seed: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r.abs() != 1 {
        return None;
    }
    let inv = (old_s * old_r.signum()).rem_euclid(m as i128) as u64;
    Some(inv)
}

/// x ≡ 0 (mod m1), x ≡ c (mod m2) with coprime moduli; result mod m1·m2.
fn crt_zero_and(m1: u64, m2: u64, c: u64) -> u64 {
    if m2 == 1 {
        return 0;
    }
    let inv = mod_inverse(m1 % m2, m2).expect("coprime moduli");
    m1 * (inv * (c % m2) % m2)
}

/// Least primitive root mod p.
pub fn least_primitive_root(p: usize) -> u64 {
    'cand: for g in 2..p as u64 {
        let mut o = 1u64;
        let mut x = g % p as u64;
        while x != 1 {
            x = x * g % p as u64;
            o += 1;
            if o > p as u64 {
                continue 'cand;
            }
        }
        if o == p as u64 - 1 {
            return g;
        }
    }
    1 // p = 2 or 3 edge; p = 3 returns 2 from the loop
}

fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut o = 1u64;
    while x != 1 {
        x = x * (a % m) % m;
        o += 1;
    }
    Some(o)
}

impl RelationContext {
    /// Builds the context for order `n` at odd prime `p`, seeding `h` with
    /// the least primitive root mod p.
    pub fn new(n: usize, p: usize) -> Result<RelationContext> {
        Self::with_seed(n, p, least_primitive_root(p))
    }

    /// Same, with an explicit primitive-root seed for `h`.
    pub fn with_seed(n: usize, p: usize, seed: u64) -> Result<RelationContext> {
        if p == 2 || !is_prime(p) {
            return Err(Error::precondition("p must be an odd prime"));
        }
        if n == 0 {
            return Err(Error::precondition("group order must be positive"));
        }
        let seed_mod_p = seed % p as u64;
        if multiplicative_order(seed_mod_p, p as u64) != Some(p as u64 - 1) {
            return Err(Error::precondition(format!("{seed} is not a primitive root mod {p}")));
        }
        let mut u_p = n;
        let mut r = 0u32;
        while u_p % p == 0 {
            u_p /= p;
            r += 1;
        }
        let p_pow_r = (n / u_p) as u64;
        let mut u2 = n;
        let mut s = 0u32;
        while u2 % 2 == 0 {
            u2 /= 2;
            s += 1;
        }
        let two_pow_s = (n / u2) as u64;

        let a = if r == 0 {
            0
        } else {
            let inv = mod_inverse((p as u64 - 1) % p_pow_r, p_pow_r)
                .expect("p-1 is a unit mod p^r");
            crt_zero_and(u_p as u64, p_pow_r, inv)
        };
        let b = if s == 0 { 0 } else { crt_zero_and(u2 as u64, two_pow_s, 1) };

        // Teichmüller lift: iterate x -> x^p mod p^r to its fixed point.
        let h = if r == 0 {
            1
        } else {
            let mut x = seed_mod_p % p_pow_r;
            loop {
                let next = pow_mod(x, p as u64, p_pow_r);
                if next == x {
                    break x;
                }
                x = next;
            }
        };

        let ctx = RelationContext {
            p,
            n,
            u_p,
            r,
            p_pow_r,
            u2,
            s,
            two_pow_s,
            a,
            b,
            h,
            h_seed: seed_mod_p,
        };
        ctx.assert_invariants();
        Ok(ctx)
    }

    fn assert_invariants(&self) {
        let p = self.p as u64;
        if self.r > 0 {
            assert_eq!(self.a % self.u_p as u64, 0);
            assert_eq!((p - 1) * self.a % self.p_pow_r, 1 % self.p_pow_r);
            assert_eq!(pow_mod(self.h, p - 1, self.p_pow_r), 1 % self.p_pow_r);
            assert_eq!(
                multiplicative_order(self.h % p, p),
                Some(p - 1),
                "h must reduce to a primitive root mod p"
            );
        } else {
            assert_eq!(self.a, 0);
        }
        if self.s > 0 {
            assert_eq!(self.b % self.u2 as u64, 0);
            assert_eq!(self.b % self.two_pow_s, 1 % self.two_pow_s);
        } else {
            assert_eq!(self.b, 0);
        }
    }

    /// `h^e` reduced mod `p^r` (0 when r = 0, where it is never consumed
    /// because `a = 0` collapses the enclosing word).
    #[inline]
    pub fn h_pow(&self, e: u64) -> u64 {
        pow_mod(self.h, e, self.p_pow_r)
    }
}

/// `ρ = σ^i τ^j` inside the subgroup generated by the tame pair, together
/// with the data needed to evaluate `β(ρ^k) = h^{jk}`.
#[derive(Clone, Debug)]
pub struct RhoWord {
    pub i: u64,
    pub j: u64,
    pub sigma: usize,
    pub tau: usize,
}

impl RhoWord {
    pub fn element(&self, g: &Group) -> usize {
        g.mul(g.pow(self.sigma, self.i as i64), g.pow(self.tau, self.j as i64))
    }
}

/// `⟨x, y⟩ = (x^{h^{p-1}} y x^{h^{p-2}} y ⋯ x^h y)^a`, the x-exponents
/// reduced mod `p^r` before use.
pub fn angle_bracket(g: &Group, x: usize, y: usize, ctx: &RelationContext) -> usize {
    assert_eq!(g.order(), ctx.n, "relation context built for a different group order");
    let mut w = 0usize;
    for i in (1..=(ctx.p as u64 - 1)).rev() {
        w = g.mul(w, g.pow(x, ctx.h_pow(i) as i64));
        w = g.mul(w, y);
    }
    g.pow(w, ctx.a as i64)
}

/// `{x, ρ} = (x ρ² x^{β(ρ)} ρ² ⋯ x^{β(ρ^{p-2})} ρ²)^a`.
pub fn curly_bracket(g: &Group, x: usize, rho: &RhoWord, ctx: &RelationContext) -> usize {
    assert_eq!(g.order(), ctx.n, "relation context built for a different group order");
    let rho_elem = rho.element(g);
    let rho_sq = g.mul(rho_elem, rho_elem);
    let mut w = 0usize;
    for k in 0..=(ctx.p as u64 - 2) {
        w = g.mul(w, g.pow(x, ctx.h_pow(rho.j * k) as i64));
        w = g.mul(w, rho_sq);
    }
    g.pow(w, ctx.a as i64)
}

/// The auxiliary element
/// `y₁ = x₁^{τ₂^{p+1}} · {x₁, τ₂^{p+1}}^{σ₂ τ₂^{(p-1)/2}}
///      · {{x₁, τ₂^{p+1}}, σ₂ τ₂^{(p-1)/2}}^{σ₂ τ₂^{(p+1)/2} + τ₂^{(p+1)/2}}`
/// with `τ₂ = τ^b`, `σ₂ = σ^b`.
pub fn y1(g: &Group, x1: usize, sigma: usize, tau: usize, ctx: &RelationContext) -> usize {
    let p = ctx.p as u64;
    let t2 = g.pow(tau, ctx.b as i64);
    let s2 = g.pow(sigma, ctx.b as i64);
    let t2_p1 = g.pow(t2, (p + 1) as i64);

    let rho1 = RhoWord { i: 0, j: ctx.b * (p + 1), sigma, tau };
    let c1 = curly_bracket(g, x1, &rho1, ctx);

    let ga = g.mul(s2, g.pow(t2, ((p - 1) / 2) as i64));
    let rho2 = RhoWord { i: ctx.b, j: ctx.b * ((p - 1) / 2), sigma, tau };
    let c2 = curly_bracket(g, c1, &rho2, ctx);

    let g1 = g.mul(s2, g.pow(t2, ((p + 1) / 2) as i64));
    let g2 = g.pow(t2, ((p + 1) / 2) as i64);

    let f1 = g.conj(x1, t2_p1);
    let f2 = g.conj(c1, ga);
    let f3 = g.mul(g.conj(c2, g1), g.conj(c2, g2));
    g.mul(g.mul(f1, f2), f3)
}

/// The tame relation `τ^σ = τ^p`.
pub fn tame_relation_holds(g: &Group, sigma: usize, tau: usize, p: usize) -> bool {
    g.conj(tau, sigma) == g.pow(tau, p as i64)
}

/// The wild relation `x₀^σ = ⟨x₀, τ⟩ · x₁^p · [x₁, y₁]`.
pub fn wild_relation_holds(
    g: &Group,
    sigma: usize,
    tau: usize,
    x0: usize,
    x1: usize,
    ctx: &RelationContext,
) -> bool {
    let lhs = g.conj(x0, sigma);
    let y = y1(g, x1, sigma, tau, ctx);
    let rhs = g.mul(
        g.mul(angle_bracket(g, x0, tau, ctx), g.pow(x1, ctx.p as i64)),
        g.comm(x1, y),
    );
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::group::group_from_perms;

    #[test]
    fn context_examples() {
        let c = RelationContext::new(18, 3).unwrap();
        assert_eq!((c.a, c.b), (14, 9));
        assert_eq!(c.h, 8);

        let c = RelationContext::new(27, 3).unwrap();
        assert_eq!((c.a, c.b), (14, 0));
        assert_eq!(c.h, 26);

        let c = RelationContext::new(10, 5).unwrap();
        assert_eq!((c.a, c.b), (4, 5));
        assert_eq!(c.h, 2);

        let c = RelationContext::new(50, 5).unwrap();
        assert_eq!(c.h, 7); // Teichmüller lift of 2 mod 25
        assert_eq!(pow_mod(7, 4, 25), 1);

        let c = RelationContext::new(9, 3).unwrap();
        assert_eq!(c.a, 5); // 2·5 = 10 ≡ 1 (mod 9)
        assert_eq!(c.h, 8);
    }

    #[test]
    fn context_rejects_bad_input() {
        assert!(RelationContext::new(6, 2).is_err());
        assert!(RelationContext::new(6, 9).is_err());
        assert!(RelationContext::with_seed(10, 5, 4).is_err()); // 4 has order 2 mod 5
    }

    #[test]
    fn angle_bracket_collapses() {
        // x = identity: word collapses to (y^{p-1})^a
        let g = cyclic_group(10).unwrap();
        let ctx = RelationContext::new(10, 5).unwrap();
        for y in 0..10 {
            let expect = g.pow(g.pow(y, 4), ctx.a as i64);
            assert_eq!(angle_bracket(&g, 0, y, &ctx), expect);
        }
    }

    #[test]
    fn angle_bracket_on_c9_kills_everything() {
        // <g, 1> = g^{(h²+h)·a} with h² + h ≡ 0 (mod 9)
        let g = cyclic_group(9).unwrap();
        let ctx = RelationContext::new(9, 3).unwrap();
        assert_eq!((ctx.h * ctx.h + ctx.h) % 9, 0);
        for x in 0..9 {
            assert_eq!(angle_bracket(&g, x, 0, &ctx), 0);
        }
    }

    #[test]
    fn angle_bracket_with_centralizing_tau_is_trivial() {
        // τ acting trivially on an elementary abelian p-part and τ^{p-1} = 1:
        // the geometric sum of h-powers vanishes mod p^r, so the bracket dies.
        let g = abelian_group(&[3, 3, 2]).unwrap();
        let ctx = RelationContext::new(18, 3).unwrap();
        let tau = (0..18).find(|&t| g.order_of(t) == 2).unwrap();
        for x in 0..18 {
            if g.order_of(x) % 3 == 0 || x == 0 {
                assert_eq!(angle_bracket(&g, x, tau, &ctx), 0);
            }
        }
    }

    #[test]
    fn curly_bracket_collapses() {
        let g = cyclic_group(10).unwrap();
        let ctx = RelationContext::new(10, 5).unwrap();
        let rho = RhoWord { i: 1, j: 1, sigma: 3, tau: 2 };
        let rho_elem = rho.element(&g);
        // x = identity: ({1,ρ}) = (ρ^{2(p-1)})^a
        let expect = g.pow(g.pow(rho_elem, 8), ctx.a as i64);
        assert_eq!(curly_bracket(&g, 0, &rho, &ctx), expect);

        // ρ = identity word: {x, 1} = x^{(p-1)a}
        let rho0 = RhoWord { i: 0, j: 0, sigma: 3, tau: 2 };
        for x in 0..10 {
            let expect = g.pow(x, 4 * ctx.a as i64);
            assert_eq!(curly_bracket(&g, x, &rho0, &ctx), expect);
        }
    }

    #[test]
    fn curly_bracket_two_routes_agree_on_abelian_p_group() {
        // direct word evaluation vs the collapsed closed form
        let g = cyclic_group(25).unwrap();
        let ctx = RelationContext::new(25, 5).unwrap();
        for j in 0..4u64 {
            let rho = RhoWord { i: 0, j, sigma: 0, tau: 1 };
            let rho_elem = rho.element(&g);
            for x in 0..25 {
                let mut exp_sum = 0u64;
                for k in 0..=3u64 {
                    exp_sum += ctx.h_pow(j * k);
                }
                let closed = g.mul(
                    g.pow(x, (exp_sum % 25) as i64 * ctx.a as i64),
                    g.pow(rho_elem, 2 * 4 * ctx.a as i64),
                );
                assert_eq!(curly_bracket(&g, x, &rho, &ctx), closed);
            }
        }
    }

    /// Literal step-by-step transcription of the y₁ formula, written
    /// independently of `y1` (explicit exponent lists, different assembly).
    fn y1_trace(g: &crate::group::Group, x1: usize, sigma: usize, tau: usize, ctx: &RelationContext) -> usize {
        let p = ctx.p as i64;
        let conj = |x: usize, by: usize| g.mul(g.mul(g.inv_of(by), x), by);
        let curly_trace = |x: usize, rho: usize, beta_j: u64| {
            let mut word = vec![];
            for k in 0..(p - 1) as u64 {
                word.push(g.pow(x, ctx.h_pow(beta_j * k) as i64));
                word.push(g.mul(rho, rho));
            }
            let mut acc = 0usize;
            for w in word {
                acc = g.mul(acc, w);
            }
            g.pow(acc, ctx.a as i64)
        };
        let t2 = g.pow(tau, ctx.b as i64);
        let s2 = g.pow(sigma, ctx.b as i64);
        let rho1 = g.pow(t2, p + 1);
        let c1 = curly_trace(x1, rho1, ctx.b * (ctx.p as u64 + 1));
        let rho2 = g.mul(s2, g.pow(t2, (p - 1) / 2));
        let c2 = curly_trace(c1, rho2, ctx.b * ((ctx.p as u64 - 1) / 2));
        let term1 = conj(x1, rho1);
        let term2 = conj(c1, rho2);
        let e1 = g.mul(s2, g.pow(t2, (p + 1) / 2));
        let e2 = g.pow(t2, (p + 1) / 2);
        let term3 = g.mul(conj(c2, e1), conj(c2, e2));
        g.mul(g.mul(term1, term2), term3)
    }

    #[test]
    fn y1_trivial_and_trace_agreement() {
        let s3 = group_from_perms(3, &[vec![1, 0, 2], vec![1, 2, 0]], None).unwrap();
        let ctx = RelationContext::new(6, 3).unwrap();
        // x1 = identity collapses every factor
        for sigma in 0..6 {
            for tau in 0..6 {
                assert_eq!(y1(&s3, 0, sigma, tau, &ctx), 0);
            }
        }
        // general agreement with the independent trace
        for x1 in 0..6 {
            for sigma in 0..6 {
                for tau in 0..6 {
                    assert_eq!(
                        y1(&s3, x1, sigma, tau, &ctx),
                        y1_trace(&s3, x1, sigma, tau, &ctx)
                    );
                }
            }
        }
    }

    #[test]
    fn y1_trace_agreement_on_heisenberg_and_dihedral() {
        let h = heisenberg_group(3).unwrap();
        let ctx = RelationContext::new(27, 3).unwrap();
        for x1 in 0..27 {
            for &sigma in &[0usize, 1, 5, 9] {
                for &tau in &[0usize, 2, 13] {
                    assert_eq!(y1(&h, x1, sigma, tau, &ctx), y1_trace(&h, x1, sigma, tau, &ctx));
                }
            }
        }
        let v = abelian_group(&[5, 5]).unwrap();
        let t = abelian_group(&[2]).unwrap();
        let d = semidirect_product(&v, &t, &[inversion_automorphism(&v).unwrap()]).unwrap();
        let ctx = RelationContext::new(50, 5).unwrap();
        for x1 in (0..50).step_by(7) {
            for sigma in (0..50).step_by(11) {
                for tau in (0..50).step_by(13) {
                    assert_eq!(y1(&d, x1, sigma, tau, &ctx), y1_trace(&d, x1, sigma, tau, &ctx));
                }
            }
        }
    }

    #[test]
    fn tame_relation_examples() {
        let s3 = group_from_perms(3, &[vec![1, 0, 2], vec![1, 2, 0]], None).unwrap();
        // τ = identity works for every σ
        for sigma in 0..6 {
            assert!(tame_relation_holds(&s3, sigma, 0, 5));
        }
        // τ a 3-cycle, σ a transposition: τ^σ = τ⁻¹ = τ⁵
        let tau = (0..6).find(|&t| s3.order_of(t) == 3).unwrap();
        let sigma = (0..6).find(|&t| s3.order_of(t) == 2).unwrap();
        assert!(tame_relation_holds(&s3, sigma, tau, 5));

        // abelian: τ of order not dividing p-1 fails
        let c9 = cyclic_group(9).unwrap();
        assert!(!tame_relation_holds(&c9, 0, 1, 5));
    }

    #[test]
    fn wild_relation_on_c9() {
        let g = cyclic_group(9).unwrap();
        let ctx = RelationContext::new(9, 3).unwrap();
        // (σ, τ, x0, x1) = (1, 1, g³, g) satisfies x0 = x1^p
        assert!(wild_relation_holds(&g, 0, 0, 3, 1, &ctx));
        assert!(!wild_relation_holds(&g, 0, 0, 1, 1, &ctx));
    }

    #[test]
    fn wild_relation_abelian_criterion() {
        // for abelian G and τ with τ^{p-1} = 1: wild ⟺ x0 = x1^p
        for (factors, p) in [(vec![9usize, 3], 3usize), (vec![4, 5], 5), (vec![25], 5)] {
            let g = abelian_group(&factors).unwrap();
            let ctx = RelationContext::new(g.order(), p).unwrap();
            let taus: Vec<usize> =
                (0..g.order()).filter(|&t| g.pow(t, p as i64 - 1) == 0).collect();
            for &tau in &taus {
                for sigma in 0..g.order() {
                    for x1 in 0..g.order() {
                        let x0 = g.pow(x1, p as i64);
                        assert!(wild_relation_holds(&g, sigma, tau, x0, x1, &ctx));
                        let bad = (x0 + 1) % g.order();
                        assert!(!wild_relation_holds(&g, sigma, tau, bad, x1, &ctx));
                    }
                }
            }
        }
    }

    #[test]
    fn bracket_exponents_reduce_mod_p_power() {
        // replacing h by h + p^r leaves angle brackets unchanged
        let g = cyclic_group(9).unwrap();
        let mut ctx = RelationContext::new(9, 3).unwrap();
        let base: Vec<usize> = (0..9).map(|x| angle_bracket(&g, x, 1, &ctx)).collect();
        ctx.h += ctx.p_pow_r;
        let shifted: Vec<usize> = (0..9).map(|x| angle_bracket(&g, x, 1, &ctx)).collect();
        assert_eq!(base, shifted);
    }
}
