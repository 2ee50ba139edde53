//! Symmetric polynomial bases: complete homogeneous, elementary, Schur (via
//! the h-determinant), Schur-basis decomposition, Littlewood-Richardson
//! coefficients, and the omega involution on expansions.
//!
//! Faithfulness rule: an operation that must distinguish symmetric functions
//! up to degree D needs an alphabet of size >= D. Schur polynomials with more
//! rows than variables are zero, so smaller alphabets silently collapse
//! distinct symmetric functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::partition::Partition;
use crate::poly::{Context, DegreeCaps, Exp, Monomial, Poly};
use crate::{Error, Result};

/// Which one-row basis a series is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Complete homogeneous h_d.
    Complete,
    /// Elementary e_d.
    Elementary,
}

type TermList = Arc<Vec<(Vec<Exp>, BigInt)>>;

static H_MEMO: Lazy<Mutex<HashMap<(usize, i64), TermList>>> = Lazy::new(Default::default);
static SCHUR_MEMO: Lazy<Mutex<HashMap<(usize, Partition), TermList>>> = Lazy::new(Default::default);

fn embed(ctx: &Arc<Context>, a: usize, terms: &TermList) -> Poly {
    let range = ctx.range(a);
    let mut out = Poly::zero(ctx);
    for (exps, c) in terms.iter() {
        let mut m = Monomial::unit(ctx.num_vars());
        m.0[range.clone()].copy_from_slice(exps);
        out.add_term(m, c.clone());
    }
    out
}

fn h_terms(d: i64, n: usize) -> TermList {
    if let Some(t) = H_MEMO.lock().unwrap().get(&(n, d)) {
        return Arc::clone(t);
    }
    let mut terms = Vec::new();
    if d >= 0 {
        let mut exps = vec![0 as Exp; n];
        fill_h(d as u32, 0, &mut exps, &mut terms);
    }
    let arc: TermList = Arc::new(terms);
    H_MEMO.lock().unwrap().insert((n, d), Arc::clone(&arc));
    arc
}

fn fill_h(remaining: u32, i: usize, exps: &mut Vec<Exp>, out: &mut Vec<(Vec<Exp>, BigInt)>) {
    if i == exps.len() - 1 {
        exps[i] = remaining as Exp;
        out.push((exps.clone(), BigInt::one()));
        exps[i] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[i] = e as Exp;
        fill_h(remaining - e, i + 1, exps, out);
    }
    exps[i] = 0;
}

/// Complete homogeneous symmetric polynomial h_d in alphabet `a`.
/// h_0 = 1, h_d = 0 for d < 0.
pub fn h_polynomial(d: i64, ctx: &Arc<Context>, a: usize) -> Poly {
    let n = ctx.alphabets()[a].size;
    embed(ctx, a, &h_terms(d, n))
}

/// Elementary symmetric polynomial e_d in alphabet `a`.
/// e_0 = 1, e_d = 0 for d < 0 or d > size.
pub fn e_polynomial(d: i64, ctx: &Arc<Context>, a: usize) -> Poly {
    let n = ctx.alphabets()[a].size;
    let mut out = Poly::zero(ctx);
    if d < 0 || d as usize > n {
        return out;
    }
    let d = d as usize;
    // all squarefree monomials of degree d
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let mut m = Monomial::unit(ctx.num_vars());
        for &i in &idx {
            m.0[ctx.range(a).start + i] = 1;
        }
        out.add_term(m, BigInt::one());
        // next combination
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - d {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn basis_polynomial(basis: Basis, d: i64, ctx: &Arc<Context>, a: usize) -> Poly {
    match basis {
        Basis::Complete => h_polynomial(d, ctx, a),
        Basis::Elementary => e_polynomial(d, ctx, a),
    }
}

/// Schur polynomial s_λ in alphabet `a`, computed as det(h_{λ_i - i + j}).
/// Zero when ℓ(λ) exceeds the alphabet size.
pub fn schur_polynomial(lambda: &Partition, ctx: &Arc<Context>, a: usize) -> Poly {
    let n = ctx.alphabets()[a].size;
    if lambda.len() > n {
        return Poly::zero(ctx);
    }
    if let Some(t) = SCHUR_MEMO.lock().unwrap().get(&(n, lambda.clone())) {
        return embed(ctx, a, t);
    }
    // Evaluate the h-determinant in a scratch single-alphabet context so the
    // memoized term list is context independent.
    let scratch = Context::new(vec![crate::poly::Alphabet::new("s", n)]);
    let free = DegreeCaps::none(&scratch);
    let l = lambda.len();
    let mut det = Poly::zero(&scratch);
    if l == 0 {
        det = Poly::one(&scratch);
    } else {
        for (sign, perm) in permutations_signed(l) {
            let mut prod = Poly::one(&scratch);
            for i in 1..=l {
                let d = lambda.part(i) as i64 - i as i64 + perm[i - 1] as i64;
                prod = prod.mul(&h_polynomial(d, &scratch, 0), &free);
                if prod.is_zero() {
                    break;
                }
            }
            det = if sign > 0 { det.add(&prod) } else { det.sub(&prod) };
        }
    }
    let terms: TermList = Arc::new(
        det.terms()
            .map(|(m, c)| (m.0.clone(), c.clone()))
            .collect(),
    );
    SCHUR_MEMO
        .lock()
        .unwrap()
        .insert((n, lambda.clone()), Arc::clone(&terms));
    embed(ctx, a, &terms)
}

/// All permutations of 1..=k with signs, in lexicographic order.
pub fn permutations_signed(k: usize) -> Vec<(i32, Vec<usize>)> {
    use itertools::Itertools;
    (1..=k)
        .permutations(k)
        .map(|perm| {
            let sign = if inversions(&perm) % 2 == 0 { 1 } else { -1 };
            (sign, perm)
        })
        .collect()
}

fn inversions(perm: &[usize]) -> usize {
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

/// Schur polynomial by direct semistandard tableau enumeration. Independent
/// of the determinant path; used as a cross-check oracle.
pub fn schur_by_tableaux(lambda: &Partition, ctx: &Arc<Context>, a: usize) -> Poly {
    let n = ctx.alphabets()[a].size;
    if lambda.len() > n {
        return Poly::zero(ctx);
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut out = Poly::zero(ctx);
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();
    fill_tableau(&shape, n, 0, 0, &mut rows, &mut |rows| {
        let mut m = Monomial::unit(ctx.num_vars());
        for row in rows {
            for &v in row {
                m.0[ctx.range(a).start + v - 1] += 1;
            }
        }
        out.add_term(m, BigInt::one());
    });
    out
}

fn fill_tableau(
    shape: &[usize],
    n: usize,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<usize>>,
    emit: &mut impl FnMut(&Vec<Vec<usize>>),
) {
    if r == shape.len() {
        emit(rows);
        return;
    }
    if c == shape[r] {
        fill_tableau(shape, n, r + 1, 0, rows, emit);
        return;
    }
    let min_row = if c > 0 { rows[r][c - 1] } else { 1 };
    let min_col = if r > 0 && c < shape[r - 1] { rows[r - 1][c] + 1 } else { 1 };
    for v in min_row.max(min_col)..=n {
        rows[r][c] = v;
        fill_tableau(shape, n, r, c + 1, rows, emit);
    }
    rows[r][c] = 0;
}

/// Finitely supported expansion in products of Schur polynomials, one
/// partition per alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    arity: usize,
    coeffs: BTreeMap<Vec<Partition>, BigInt>,
}

impl SchurExpansion {
    pub fn new(arity: usize) -> Self {
        SchurExpansion { arity, coeffs: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add(&mut self, key: Vec<Partition>, c: BigInt) {
        assert_eq!(key.len(), self.arity);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        // drop cancelled entries lazily
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    pub fn coefficient(&self, key: &[Partition]) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Partition>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Expand to a concrete polynomial in the given alphabets, truncated.
    pub fn to_poly(&self, ctx: &Arc<Context>, alphabets: &[usize], caps: &DegreeCaps) -> Poly {
        assert_eq!(alphabets.len(), self.arity);
        let mut out = Poly::zero(ctx);
        for (key, c) in &self.coeffs {
            let mut prod = Poly::constant(ctx, c.clone());
            for (pos, lam) in key.iter().enumerate() {
                prod = prod.mul(&schur_polynomial(lam, ctx, alphabets[pos]), caps);
                if prod.is_zero() {
                    break;
                }
            }
            out = out.add(&prod);
        }
        out.truncate(caps)
    }

    /// The omega involution: every index partition replaced by its conjugate
    /// (per alphabet independently).
    pub fn omega(&self) -> SchurExpansion {
        let mut out = SchurExpansion::new(self.arity);
        for (key, c) in &self.coeffs {
            out.add(key.iter().map(|p| p.conjugate()).collect(), c.clone());
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !c.is_one() {
                write!(f, "{}*", c)?;
            }
            for (i, p) in key.iter().enumerate() {
                if i > 0 {
                    write!(f, "*")?;
                }
                write!(f, "s{}", p)?;
            }
        }
        Ok(())
    }
}

/// Decompose a (separately) symmetric polynomial into the Schur basis of the
/// given alphabets by repeated leading-term subtraction.
///
/// Faithful only when each alphabet has at least as many variables as the
/// maximum degree appearing in it.
pub fn schur_decompose(p: &Poly, alphabets: &[usize]) -> Result<SchurExpansion> {
    let ctx = Arc::clone(p.context());
    let caps = DegreeCaps::none(&ctx);
    let mut residual = p.clone();
    let mut out = SchurExpansion::new(alphabets.len());
    let mut steps = 0usize;
    while let Some((mono, coeff)) = residual.leading() {
        steps += 1;
        if steps > 1_000_000 {
            return Err(Error::Decomposition(
                "schur_decompose did not terminate; input not symmetric?".into(),
            ));
        }
        let mut key = Vec::with_capacity(alphabets.len());
        for &a in alphabets {
            let exps: Vec<Exp> = ctx.range(a).map(|i| mono.0[i]).collect();
            let dec = exps.windows(2).all(|w| w[0] >= w[1]) && exps.iter().all(|&e| e >= 0);
            if !dec {
                return Err(Error::NotSymmetric {
                    alphabet: ctx.alphabets()[a].name.clone(),
                    exps,
                });
            }
            key.push(Partition::new(exps.iter().map(|&e| e as u32).collect()));
        }
        let c = coeff.clone();
        let mut prod = Poly::constant(&ctx, c.clone());
        for (pos, lam) in key.iter().enumerate() {
            prod = prod.mul(&schur_polynomial(lam, &ctx, alphabets[pos]), &caps);
        }
        residual = residual.sub(&prod);
        out.add(key, c);
    }
    Ok(out)
}

static LR_MEMO: Lazy<Mutex<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, BigInt>>>>> =
    Lazy::new(Default::default);

/// Littlewood-Richardson coefficient c^λ_{μν}: the multiplicity of s_λ in
/// s_μ · s_ν, computed by expansion in enough variables and decomposition.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() {
        return 0;
    }
    let key = (mu.clone(), nu.clone());
    let table = {
        let memo = LR_MEMO.lock().unwrap();
        memo.get(&key).cloned()
    };
    let table = match table {
        Some(t) => t,
        None => {
            let n = (mu.size() + nu.size()).max(1) as usize;
            let ctx = Context::new(vec![crate::poly::Alphabet::new("v", n)]);
            let free = DegreeCaps::none(&ctx);
            let prod = schur_polynomial(mu, &ctx, 0).mul(&schur_polynomial(nu, &ctx, 0), &free);
            let exp = schur_decompose(&prod, &[0]).expect("schur product decomposes");
            let mut t = BTreeMap::new();
            for (k, c) in exp.iter() {
                t.insert(k[0].clone(), c.clone());
            }
            let arc = Arc::new(t);
            LR_MEMO.lock().unwrap().insert(key, Arc::clone(&arc));
            arc
        }
    };
    table
        .get(lambda)
        .map(|c| u64::try_from(c.clone()).expect("LR coefficient is a small nonnegative integer"))
        .unwrap_or(0)
}

/// Snapshot of the memoized Littlewood-Richardson products, for persistence.
pub fn lr_memo_export() -> Vec<((Partition, Partition), BTreeMap<Partition, BigInt>)> {
    let memo = LR_MEMO.lock().unwrap();
    let mut out: Vec<_> =
        memo.iter().map(|(k, v)| (k.clone(), v.as_ref().clone())).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Preload one memoized Littlewood-Richardson product (from a cache file).
pub fn lr_memo_import(mu: Partition, nu: Partition, table: BTreeMap<Partition, BigInt>) {
    LR_MEMO.lock().unwrap().entry((mu, nu)).or_insert_with(|| Arc::new(table));
}
