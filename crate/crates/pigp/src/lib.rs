//! Counting Galois extensions of `Q_p` (p odd) with a prescribed finite
//! Galois group.
//!
//! The absolute Galois group of `Q_p` has a known presentation on generators
//! `σ, τ, x₀, x₁` subject to the tame relation `τ^σ = τ^p` and a single wild
//! relation tying `x₀` to `x₁`. Extensions with Galois group `G` correspond
//! to `Aut(G)`-orbits of generator quadruples of `G` satisfying those
//! relations, so counting extensions is a finite (if delicate) search.
//!
//! The crate provides, in dependency order:
//!
//! * [`group`] — finite groups as explicit multiplication structures, with
//!   subgroups, quotients and homomorphisms;
//! * [`construct`] — constructors for the concrete groups the theory needs
//!   (cyclic, abelian, semidirect, metacyclic, ...) and isomorphism testing;
//! * [`catalog`] — a bundled catalog of small groups plus a line-oriented
//!   text format for importing and exporting groups;
//! * [`analysis`] — the structural subgroups `V` (p-core), `W` (Frattini
//!   subgroup of `V`) and the tame quotient `T = G/V`;
//! * [`aut`] — automorphism groups, stabilizers and orbit marking;
//! * [`relations`] — the arithmetic of the presentation: the exponents
//!   `a`, `b`, the Teichmüller unit `h`, bracket words and the wild relation;
//! * [`potential`] — screening for potential `p`-realizability;
//! * [`counting`] — the counting engines (abelian closed form, tame search,
//!   lifting) and the Shafarevich cross-check;
//! * [`realizability`] — `V/W` as a module over the tame quotient,
//!   realizability criteria, and the minimally-unrealizable scanner.
//!
//! The companion `book/` directory walks through the same material with
//! runnable examples; `pigp-cli` exposes it all on the command line.

pub mod analysis;
pub mod aut;
pub mod catalog;
pub mod construct;
pub mod counting;
mod error;
pub mod group;
pub mod potential;
pub mod realizability;
pub mod relations;
mod search;

pub use error::{Error, Result};
pub use group::{Elem, Group, GroupRef, Homomorphism, Subgroup};
