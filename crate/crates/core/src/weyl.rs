//! Weyl groups of types A, B, C, D as signed permutations, with exact
//! Coxeter lengths from breadth-first search over the generators.
//!
//! Weights are stored doubled so half-integer entries (spin weights) stay
//! integral.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

/// A classical root-system type with its rank parameter k. For family A this
/// is gl_k (Weyl group S_k).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootType {
    pub family: Family,
    pub k: usize,
}

impl RootType {
    pub fn new(family: Family, k: usize) -> Self {
        assert!(k >= 1, "rank must be >= 1");
        RootType { family, k }
    }

    /// |W|.
    pub fn order(&self) -> u64 {
        let fact: u64 = (1..=self.k as u64).product();
        match self.family {
            Family::A => fact,
            Family::B | Family::C => (1u64 << self.k) * fact,
            Family::D => (1u64 << (self.k - 1)) * fact,
        }
    }
}

/// A weight, stored as doubled integers (true weight = doubled / 2).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Weight {
    pub doubled: Vec<i64>,
}

impl Weight {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Weight { doubled }
    }

    pub fn from_integers(v: &[i64]) -> Self {
        Weight { doubled: v.iter().map(|x| 2 * x).collect() }
    }

    pub fn zero(k: usize) -> Self {
        Weight { doubled: vec![0; k] }
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    /// True if every entry is an integer (doubled entry even).
    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|x| x % 2 == 0)
    }

    /// True if every entry is a strict half-integer (doubled entry odd).
    pub fn is_half_integral(&self) -> bool {
        self.doubled.iter().all(|x| x.rem_euclid(2) == 1)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.doubled.windows(2).all(|w| w[0] >= w[1])
    }

    /// Entry i (1-indexed) as an integer; panics if it is a half-integer.
    pub fn entry_int(&self, i: usize) -> i64 {
        let d = self.doubled[i - 1];
        assert!(d % 2 == 0, "entry {} is not an integer", i);
        d / 2
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.doubled.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if d % 2 == 0 {
                write!(f, "{}", d / 2)?;
            } else {
                write!(f, "{}/2", d)?;
            }
        }
        write!(f, ")")
    }
}

/// A signed permutation: coordinate j of the input goes to coordinate
/// `perm[j]` with sign `signs[j]`. Carries its exact Coxeter length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
    pub length: u32,
}

impl WeylElement {
    pub fn identity(k: usize) -> Self {
        WeylElement { perm: (0..k).collect(), signs: vec![1; k], length: 0 }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Number of negative signs (the |α| of the α·w factorization).
    pub fn neg_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// Apply to a weight: (w·χ)_{perm[j]} = signs[j]·χ_j.
    pub fn act(&self, chi: &Weight) -> Weight {
        assert_eq!(chi.len(), self.perm.len(), "weight length mismatch");
        let mut out = vec![0i64; chi.len()];
        for j in 0..chi.len() {
            out[self.perm[j]] = self.signs[j] as i64 * chi.doubled[j];
        }
        Weight { doubled: out }
    }

    /// Composition self ∘ other (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let k = self.perm.len();
        let mut perm = vec![0; k];
        let mut signs = vec![1i8; k];
        for j in 0..k {
            perm[j] = self.perm[other.perm[j]];
            signs[j] = other.signs[j] * self.signs[other.perm[j]];
        }
        WeylElement { perm, signs, length: 0 }
    }

    pub fn inverse(&self) -> WeylElement {
        let k = self.perm.len();
        let mut perm = vec![0; k];
        let mut signs = vec![1i8; k];
        for j in 0..k {
            perm[self.perm[j]] = j;
            signs[self.perm[j]] = self.signs[j];
        }
        WeylElement { perm, signs, length: self.length }
    }

    fn key(&self) -> (Vec<usize>, Vec<i8>) {
        (self.perm.clone(), self.signs.clone())
    }
}

/// Coxeter generators for the family (as signed permutations).
fn generators(t: RootType) -> Vec<WeylElement> {
    let k = t.k;
    let mut gens = Vec::new();
    for i in 0..k.saturating_sub(1) {
        let mut g = WeylElement::identity(k);
        g.perm.swap(i, i + 1);
        gens.push(g);
    }
    match t.family {
        Family::A => {}
        Family::B | Family::C => {
            let mut g = WeylElement::identity(k);
            g.signs[k - 1] = -1;
            gens.push(g);
        }
        Family::D => {
            if k >= 2 {
                let mut g = WeylElement::identity(k);
                g.perm.swap(k - 2, k - 1);
                g.signs[k - 2] = -1;
                g.signs[k - 1] = -1;
                gens.push(g);
            }
        }
    }
    gens
}

pub const DEFAULT_WEYL_BOUND: u64 = 100_000;

/// Every element of W(t) exactly once, with exact lengths computed by BFS
/// over the Coxeter generators. Deterministic order: by length, then by
/// (perm, signs).
pub fn enumerate_weyl(t: RootType) -> Result<Vec<WeylElement>> {
    enumerate_weyl_bounded(t, DEFAULT_WEYL_BOUND)
}

pub fn enumerate_weyl_bounded(t: RootType, bound: u64) -> Result<Vec<WeylElement>> {
    let order = t.order();
    if order > bound {
        return Err(Error::WeylBoundExceeded { order, bound });
    }
    let gens = generators(t);
    let mut seen: HashMap<(Vec<usize>, Vec<i8>), u32> = HashMap::new();
    let mut queue = VecDeque::new();
    let id = WeylElement::identity(t.k);
    seen.insert(id.key(), 0);
    queue.push_back(id);
    let mut out = Vec::with_capacity(order as usize);
    while let Some(w) = queue.pop_front() {
        out.push(w.clone());
        for g in &gens {
            let mut next = g.compose(&w);
            next.length = w.length + 1;
            if !seen.contains_key(&next.key()) {
                seen.insert(next.key(), next.length);
                queue.push_back(next);
            }
        }
    }
    debug_assert_eq!(out.len() as u64, order);
    out.sort_by(|a, b| (a.length, a.key()).cmp(&(b.length, b.key())));
    Ok(out)
}

/// The ρ vector of the type, doubled. A: (k,...,1); B: (k-1/2,...,1/2);
/// C: (k,...,1); D: (k-1,...,0).
pub fn rho(t: RootType) -> Weight {
    let k = t.k as i64;
    let doubled = (0..t.k as i64)
        .map(|i| match t.family {
            Family::A | Family::C => 2 * (k - i),
            Family::B => 2 * (k - i) - 1,
            Family::D => 2 * (k - 1 - i),
        })
        .collect();
    Weight { doubled }
}

/// ρ shifted by c·(1,...,1); in family A this leaves all complex terms
/// unchanged.
pub fn rho_shifted(t: RootType, c: i64) -> Weight {
    let base = rho(t);
    Weight { doubled: base.doubled.iter().map(|d| d + 2 * c).collect() }
}

/// λ + ρ - w⁻¹(ρ), exact in doubled coordinates.
pub fn zelevinsky_weight(t: RootType, lambda: &Weight, w: &WeylElement) -> Weight {
    zelevinsky_weight_with_rho(lambda, w, &rho(t))
}

pub fn zelevinsky_weight_with_rho(lambda: &Weight, w: &WeylElement, rho: &Weight) -> Weight {
    lambda.add(rho).sub(&w.inverse().act(rho))
}

/// The 2^k weights with all entries ±1/2.
pub fn spin_weight_set(k: usize) -> Vec<Weight> {
    let mut out = Vec::with_capacity(1 << k);
    for bits in 0..(1u32 << k) {
        let doubled = (0..k)
            .map(|i| if bits & (1 << i) != 0 { 1i64 } else { -1i64 })
            .collect();
        out.push(Weight { doubled });
    }
    out.sort();
    out
}

/// Inversion count of a permutation; for family A this equals the Coxeter
/// length (kept as a fast-path cross-check).
pub fn inversion_length(perm: &[usize]) -> u32 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}
