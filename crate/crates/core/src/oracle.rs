//! Independent ground truth for the determinantal identities.
//!
//! Two entirely separate routes are provided:
//!
//! * `lhs_partition_sum` evaluates the explicit Schur sums directly
//!   (only valid when the alphabets are large enough to be faithful);
//! * `hwv_char` decomposes the actual module degree by degree: it builds the
//!   torus character of each graded slice over an auxiliary Laurent alphabet
//!   `u`, then greedily subtracts classical irreducible characters to read
//!   off multiplicity-space characters.
//!
//! Neither route touches the Weyl-group alternating sum or the determinant
//! entry rules, so agreement with the engine is meaningful evidence.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Signed;
use once_cell::sync::Lazy;

use crate::charring::{CharRing, CharSeries, Mode};
use crate::engine::{skew_jt_det, Case, CaseId};
use crate::partition::{enumerate_partitions, Constraint, Partition};
use crate::poly::{Alphabet, Context, DegreeCaps, Exp, Monomial, Poly};
use crate::symfunc::{lr_coefficient, lr_memo_export, lr_memo_import, schur_polynomial};
use crate::weyl::{Family, RootType, Weight};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Closed-form partition sums (left-hand sides)
// ---------------------------------------------------------------------------

/// The case's explicit Schur sum at the base weight, truncated to the ring's
/// caps. Requires faithful alphabets (size >= cap), since otherwise long
/// partitions would silently evaluate to zero.
pub fn lhs_partition_sum(ring: &CharRing, case: CaseId) -> Result<CharSeries> {
    if !ring.is_faithful() {
        let alphabets = ring.context().alphabets();
        let (a, cap) = if (alphabets[0].size as i64) < ring.cap_x() {
            (&alphabets[0], ring.cap_x())
        } else {
            (&alphabets[1], ring.cap_y())
        };
        return Err(Error::Unfaithful { alphabet: a.name.clone(), size: a.size, cap });
    }
    if ring.mode != case.mode() {
        return Err(Error::CapsMismatch);
    }
    let ctx = ring.context();
    let caps = ring.caps();
    let k = case.k;
    let mut acc = Poly::zero(ctx);
    match case.case {
        Case::Generic => {
            let bound = ring.cap_x().min(ring.cap_y()).max(0) as u32;
            for lam in enumerate_partitions(bound, Constraint::MaxLength(k)) {
                let term = schur_polynomial(&lam, ctx, 0)
                    .mul(&schur_polynomial(&lam, ctx, 1), caps);
                acc = acc.add(&term);
            }
        }
        Case::Skew => {
            // Σ_{λ_1 ≤ k} s_{(2λ)†}; the summand has degree 2|λ|
            let bound = (ring.cap_x().max(0) / 2) as u32;
            for lam in enumerate_partitions(bound, Constraint::MaxPart(k as u32)) {
                acc = acc.add(&schur_polynomial(&lam.doubled().conjugate(), ctx, 0));
            }
        }
        Case::SymEven | Case::SymOdd => {
            // Σ_μ (s_{(1+2μ_1,…,1+2μ_m)} + s_{2μ}) with m = 2k resp. 2k+1,
            // μ padded with zeros to length m
            let m = if case.case == Case::SymEven { 2 * k } else { 2 * k + 1 };
            let cap = ring.cap_x().max(0);
            for mu in enumerate_partitions((cap / 2) as u32, Constraint::MaxLength(m)) {
                if 2 * mu.size() as i64 <= cap {
                    acc = acc.add(&schur_polynomial(&mu.doubled(), ctx, 0));
                }
                if m as i64 + 2 * mu.size() as i64 <= cap {
                    let odd: Vec<u32> = (1..=m).map(|i| 1 + 2 * mu.part(i)).collect();
                    acc = acc.add(&schur_polynomial(&Partition::new(odd), ctx, 0));
                }
            }
        }
        Case::SpinorOdd | Case::SpinorEven => {
            let m = if case.case == Case::SpinorOdd { 2 * k + 1 } else { 2 * k };
            let bound = ring.cap_x().max(0) as u32;
            for lam in enumerate_partitions(bound, Constraint::MaxLength(m)) {
                acc = acc.add(&schur_polynomial(&lam, ctx, 0));
            }
        }
    }
    Ok(ring.from_poly(acc))
}

// ---------------------------------------------------------------------------
// Irreducible characters over the torus alphabet
// ---------------------------------------------------------------------------

/// Canonical context for characters in the Laurent alphabet u of rank k.
/// Exponents are stored doubled so spin weights stay integral.
pub fn u_context(k: usize) -> Arc<Context> {
    Context::new(vec![Alphabet::laurent("u", k)])
}

/// Dominance for the family's weight lattice (half-integral entries allowed
/// in the spin families B and D, which also require uniform parity).
pub fn is_dominant(t: RootType, hw: &Weight) -> bool {
    if hw.len() != t.k || !hw.is_weakly_decreasing() {
        return false;
    }
    let d = &hw.doubled;
    let uniform = d.iter().all(|x| x.rem_euclid(2) == d[0].rem_euclid(2));
    match t.family {
        Family::A => hw.is_integral(),
        Family::C => hw.is_integral() && *d.last().unwrap() >= 0,
        Family::B => uniform && *d.last().unwrap() >= 0,
        Family::D => uniform && (t.k < 2 || d[t.k - 2] >= d[t.k - 1].abs()),
    }
}

type TermList = Arc<Vec<(Vec<Exp>, BigInt)>>;

static IRR_MEMO: Lazy<Mutex<HashMap<(RootType, Vec<i64>), TermList>>> =
    Lazy::new(Default::default);

/// det over u of a matrix whose (i,j) entry is a binomial in u_j alone,
/// given as (doubled exponent, ±1) pairs.
fn monomial_det(k: usize, ctx: &Arc<Context>, entry: impl Fn(usize, usize) -> Vec<(i64, i8)>) -> Poly {
    let mut out = Poly::zero(ctx);
    for (sign, perm) in crate::symfunc::permutations_signed(k) {
        // perm[j-1] = σ(j): row index paired with column j
        let mut partial: Vec<(Vec<i64>, i8)> = vec![(Vec::new(), 1)];
        for j in 1..=k {
            let opts = entry(perm[j - 1], j);
            let mut next = Vec::with_capacity(partial.len() * opts.len());
            for (exps, s) in &partial {
                for (e, es) in &opts {
                    let mut v = exps.clone();
                    v.push(*e);
                    next.push((v, s * es));
                }
            }
            partial = next;
        }
        for (exps, s) in partial {
            let m = Monomial(exps.iter().map(|&e| e as Exp).collect());
            out.add_term(m, BigInt::from((sign as i64) * s as i64));
        }
    }
    out
}

/// Exact character of the irreducible with highest weight `hw`, as a Laurent
/// polynomial over `u_context(k)` with doubled exponents: family A by the
/// bialternant ratio, B/C/D by the classical determinant-ratio formulas.
pub fn irreducible_character(t: RootType, hw: &Weight) -> Result<Poly> {
    let terms = irreducible_terms(t, hw)?;
    let ctx = u_context(t.k);
    let mut out = Poly::zero(&ctx);
    for (exps, c) in terms.iter() {
        out.add_term(Monomial(exps.clone()), c.clone());
    }
    Ok(out)
}

fn irreducible_terms(t: RootType, hw: &Weight) -> Result<TermList> {
    if !is_dominant(t, hw) {
        return Err(Error::NonDominantWeight(hw.doubled.clone()));
    }
    let key = (t, hw.doubled.clone());
    if let Some(terms) = IRR_MEMO.lock().unwrap().get(&key) {
        return Ok(Arc::clone(terms));
    }
    let k = t.k;
    let ctx = u_context(k);
    let d = &hw.doubled;
    let quotient = match t.family {
        Family::A => {
            let num =
                monomial_det(k, &ctx, |i, _| vec![(d[i - 1] + 2 * (k - i) as i64, 1)]);
            let den = monomial_det(k, &ctx, |i, _| vec![(2 * (k - i) as i64, 1)]);
            num.exact_div(&den)?
        }
        Family::B | Family::C => {
            // l_i = hw_i + ρ_i; entries u^{l_i} − u^{−l_i}
            let rho_d = |i: usize| match t.family {
                Family::B => 2 * (k - i) as i64 + 1,
                _ => 2 * (k - i + 1) as i64,
            };
            let num = monomial_det(k, &ctx, |i, _| {
                let l = d[i - 1] + rho_d(i);
                vec![(l, 1), (-l, -1)]
            });
            let den = monomial_det(k, &ctx, |i, _| {
                let l = rho_d(i);
                vec![(l, 1), (-l, -1)]
            });
            num.exact_div(&den)?
        }
        Family::D => {
            // (A⁺ + A⁻) / det(u^{k-i} + u^{-(k-i)}): l_k carries the sign of
            // hw_k, which selects the correct one of the two mirror irreps;
            // A⁻ has a zero row when hw_k = 0
            let l = |i: usize| d[i - 1] + 2 * (k - i) as i64;
            let plus = monomial_det(k, &ctx, |i, _| vec![(l(i), 1), (-l(i), 1)]);
            let num = if d[k - 1] == 0 {
                plus
            } else {
                let minus = monomial_det(k, &ctx, |i, _| vec![(l(i), 1), (-l(i), -1)]);
                plus.add(&minus)
            };
            let den =
                monomial_det(k, &ctx, |i, _| vec![(2 * (k - i) as i64, 1), (-2 * (k - i) as i64, 1)]);
            num.exact_div(&den)?
        }
    };
    let terms: Vec<(Vec<Exp>, BigInt)> =
        quotient.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect();
    let arc: TermList = Arc::new(terms);
    IRR_MEMO.lock().unwrap().insert(key, Arc::clone(&arc));
    Ok(arc)
}

// ---------------------------------------------------------------------------
// Torus characters of module slices
// ---------------------------------------------------------------------------

/// The ring's alphabets extended by the rank-k torus alphabet u.
pub struct OracleCtx {
    pub ctx: Arc<Context>,
    /// Alphabet index of u within `ctx`.
    pub u: usize,
    pub k: usize,
}

pub fn oracle_context(ring: &CharRing, k: usize) -> OracleCtx {
    let mut alphabets = ring.context().alphabets().to_vec();
    let u = alphabets.len();
    alphabets.push(Alphabet::laurent("u", k));
    OracleCtx { ctx: Context::new(alphabets), u, k }
}

/// Degree-d part of Sym(W) for the weight list W (given as monomials), via
/// the truncated geometric-series recurrence for each 1/(1 - w) factor.
fn sym_slice(weights: &[Monomial], d: usize, ctx: &Arc<Context>) -> Poly {
    let caps = DegreeCaps::none(ctx);
    let mut acc: Vec<Poly> = (0..=d).map(|_| Poly::zero(ctx)).collect();
    acc[0] = Poly::one(ctx);
    for w in weights {
        let wp = Poly::term(ctx, w.clone(), BigInt::from(1));
        for t in 1..=d {
            let bump = acc[t - 1].mul(&wp, &caps);
            acc[t] = acc[t].add(&bump);
        }
    }
    acc.pop().unwrap()
}

/// Weight monomials x_i·u_j^{±1} (doubled u exponent ±2) for E⊗U with U
/// carrying the ± pair of torus weights; `zero_column` adds the x_i·u^0
/// weights of an odd-dimensional U.
fn pair_weights(oc: &OracleCtx, x_alphabet: usize, zero_column: bool) -> Vec<Monomial> {
    let ctx = &oc.ctx;
    let e = ctx.alphabets()[x_alphabet].size;
    let mut out = Vec::new();
    for i in 0..e {
        for j in 0..oc.k {
            for s in [2, -2] {
                let mut m = Monomial::var(ctx, x_alphabet, i, 1);
                m.0[ctx.range(oc.u).start + j] = s;
                out.push(m);
            }
        }
        if zero_column {
            out.push(Monomial::var(ctx, x_alphabet, i, 1));
        }
    }
    out
}

/// Torus character of one graded slice of the case's module V: x-degree dx
/// (and y-degree dy in the generic case) with the full u-dependence. Spinor
/// cases carry the Δ factor Π_j (u_j^{1/2} + u_j^{-1/2}).
pub fn module_torus_slice(oc: &OracleCtx, case: CaseId, dx: usize, dy: usize) -> Poly {
    assert_eq!(case.k, oc.k);
    let ctx = &oc.ctx;
    match case.case {
        Case::Generic => {
            // Sym(E⊗U*) has weights x_i u_j^{-1}; Sym(U⊗F*) has u_j y_i
            let e = ctx.alphabets()[0].size;
            let f = ctx.alphabets()[1].size;
            let mut wx = Vec::new();
            let mut wy = Vec::new();
            for j in 0..oc.k {
                for i in 0..e {
                    let mut m = Monomial::var(ctx, 0, i, 1);
                    m.0[ctx.range(oc.u).start + j] = -2;
                    wx.push(m);
                }
                for i in 0..f {
                    let mut m = Monomial::var(ctx, 1, i, 1);
                    m.0[ctx.range(oc.u).start + j] = 2;
                    wy.push(m);
                }
            }
            let caps = DegreeCaps::none(ctx);
            sym_slice(&wx, dx, ctx).mul(&sym_slice(&wy, dy, ctx), &caps)
        }
        Case::Skew | Case::SymEven => sym_slice(&pair_weights(oc, 0, false), dx, ctx),
        Case::SymOdd => sym_slice(&pair_weights(oc, 0, true), dx, ctx),
        Case::SpinorOdd | Case::SpinorEven => {
            let odd = case.case == Case::SpinorOdd;
            let mut slice = sym_slice(&pair_weights(oc, 0, odd), dx, ctx);
            let caps = DegreeCaps::none(ctx);
            for j in 0..oc.k {
                let mut delta = Poly::zero(ctx);
                for s in [1, -1] {
                    let mut m = Monomial::unit(ctx.num_vars());
                    m.0[ctx.range(oc.u).start + j] = s;
                    delta.add_term(m, BigInt::from(1));
                }
                slice = slice.mul(&delta, &caps);
            }
            slice
        }
    }
}

// ---------------------------------------------------------------------------
// Greedy highest-weight decomposition
// ---------------------------------------------------------------------------

/// Isotypic decomposition of a u-character with polynomial multiplicities:
/// dominant weight → multiplicity-space character over the remaining
/// alphabets, in the order discovered (lexicographically descending).
pub type Decomposition = Vec<(Weight, Poly)>;

pub fn greedy_decompose(p: &Poly, t: RootType, u: usize) -> Result<Decomposition> {
    greedy_decompose_floor(p, t, u, None)
}

/// As `greedy_decompose`, but may stop once every remaining weight is
/// lexicographically below `floor` (their entries are then left unresolved;
/// everything at or above `floor` is final).
pub fn greedy_decompose_floor(
    p: &Poly,
    t: RootType,
    u: usize,
    floor: Option<&[Exp]>,
) -> Result<Decomposition> {
    let sub_ctx = p.context().without(u);
    let mut slices: BTreeMap<Vec<Exp>, Poly> = p.split_by_alphabet(u);
    let mut out: Decomposition = Vec::new();
    let mut steps = 0usize;
    loop {
        steps += 1;
        if steps > 1_000_000 {
            return Err(Error::Decomposition("greedy subtraction did not terminate".into()));
        }
        let key = match slices.iter().next_back() {
            Some((k, _)) => k.clone(),
            None => break,
        };
        let mult = slices.remove(&key).unwrap();
        if mult.is_zero() {
            continue;
        }
        if let Some(f) = floor {
            if key.as_slice() < f {
                break;
            }
        }
        let hw = Weight::from_doubled(key.iter().map(|&e| e as i64).collect());
        if !is_dominant(t, &hw) {
            return Err(Error::Decomposition(format!(
                "largest remaining weight {} is not dominant: input is not a character",
                hw
            )));
        }
        if mult.terms().any(|(_, c)| c.is_negative()) {
            return Err(Error::Decomposition(format!(
                "negative multiplicity at weight {}: input is not a character",
                hw
            )));
        }
        for (exps, c) in irreducible_terms(t, &hw)?.iter() {
            if exps == &key {
                continue; // the leading weight was just removed in full
            }
            let entry = slices
                .entry(exps.clone())
                .or_insert_with(|| Poly::zero(&sub_ctx));
            *entry = entry.sub(&mult.scale(c));
        }
        out.push((hw, mult));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The assembled oracle
// ---------------------------------------------------------------------------

fn lambda_key(lambda: &Weight) -> Vec<Exp> {
    lambda.doubled.iter().map(|&d| d as Exp).collect()
}

fn accumulate_slice(
    ring: &CharRing,
    oc: &OracleCtx,
    case: CaseId,
    target: &[Exp],
    dx: usize,
    dy: usize,
    acc: &mut Poly,
) -> Result<()> {
    let slice = module_torus_slice(oc, case, dx, dy);
    let parts = greedy_decompose_floor(&slice, case.root_type(), oc.u, Some(target))?;
    for (hw, mult) in parts {
        if lambda_key(&hw) == target {
            *acc = acc.add(&mult.promote(ring.context()));
        }
    }
    Ok(())
}

/// The independent oracle for V[λ]: decompose every graded slice of the
/// module up to the ring's caps and collect the λ-isotypic multiplicity
/// characters.
pub fn hwv_char(ring: &CharRing, case: CaseId, lambda: &Weight) -> Result<CharSeries> {
    if ring.mode != case.mode() {
        return Err(Error::CapsMismatch);
    }
    let t = case.root_type();
    if !is_dominant(t, lambda) {
        return Err(Error::NonDominantWeight(lambda.doubled.clone()));
    }
    let oc = oracle_context(ring, case.k);
    let target = lambda_key(lambda);
    let mut acc = Poly::zero(ring.context());
    match ring.mode {
        Mode::Single => {
            for d in 0..=ring.cap_x().max(0) {
                accumulate_slice(ring, &oc, case, &target, d as usize, 0, &mut acc)?;
            }
        }
        Mode::Double => {
            for dx in 0..=ring.cap_x().max(0) {
                for dy in 0..=ring.cap_y().max(0) {
                    accumulate_slice(ring, &oc, case, &target, dx as usize, dy as usize, &mut acc)?;
                }
            }
        }
    }
    Ok(ring.from_poly(acc))
}

/// Parity-refined oracle for the odd symmetric case: −1 ∈ O(U) acts on the
/// degree-d slice by (−1)^d, so the invariant part collects even slices and
/// the sign part odd slices.
pub fn hwv_char_parity(
    ring: &CharRing,
    k: usize,
    lambda: &Weight,
    parity_sign: u8,
) -> Result<CharSeries> {
    let case = CaseId::new(Case::SymOdd, k);
    if ring.mode != Mode::Single {
        return Err(Error::CapsMismatch);
    }
    assert!(parity_sign < 2);
    let t = case.root_type();
    if !is_dominant(t, lambda) {
        return Err(Error::NonDominantWeight(lambda.doubled.clone()));
    }
    let oc = oracle_context(ring, k);
    let target = lambda_key(lambda);
    let mut acc = Poly::zero(ring.context());
    for d in 0..=ring.cap_x().max(0) {
        if d % 2 != parity_sign as i64 {
            continue;
        }
        accumulate_slice(ring, &oc, case, &target, d as usize, 0, &mut acc)?;
    }
    Ok(ring.from_poly(acc))
}

/// Both sides of the skew Jacobi-Trudi remark in the generic case:
/// det([L_{λ_i−μ_j−i+j}]) against Σ_ν c^λ_{μν}·(oracle character of V[ν]).
///
/// The sum runs over dominant GL_k weights ν, not just partitions: the
/// Steinberg formula expands the determinant into tensor multiplicities
/// [W_λ : W_μ ⊗ W_ν], and weights with negative trailing entries (such as
/// (1,-1) for λ = μ = (1), k = 2) contribute. Shifting ν and λ by a common
/// multiple of (1,…,1) turns each multiplicity into an ordinary
/// Littlewood-Richardson coefficient.
pub fn skew_lr_check(
    ring: &CharRing,
    k: usize,
    lambda: &Partition,
    mu: &Partition,
) -> Result<(CharSeries, CharSeries)> {
    let det = skew_jt_det(ring, k, lambda, mu)?;
    let mut rhs = ring.zero();
    let total = lambda.size() as i64 - mu.size() as i64;
    // nonzero c^λ_{μν} forces ν_i ≤ λ_i, and with the entries weakly
    // decreasing and summing to |λ| − |μ| this bounds the search
    let lo = lambda.part(k) as i64 - mu.size() as i64;
    let mut nus: Vec<Vec<i64>> = Vec::new();
    fn rec(
        k: usize,
        i: usize,
        hi: i64,
        lo: i64,
        left: i64,
        lambda: &Partition,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == k {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let r = (k - i - 1) as i64;
        let mut v = hi.min(lambda.part(i + 1) as i64);
        while v >= lo {
            if left - v >= r * lo && left - v <= r * v {
                cur.push(v);
                rec(k, i + 1, v, lo, left - v, lambda, cur, out);
                cur.pop();
            }
            v -= 1;
        }
    }
    rec(k, 0, i64::MAX, lo, total, lambda, &mut Vec::new(), &mut nus);
    for nu in nus {
        let shift = (-nu[k - 1]).max(0);
        let shifted = |w: &dyn Fn(usize) -> i64| -> Partition {
            Partition::new((1..=k).map(|i| (w(i) + shift) as u32).collect())
        };
        let lam_shifted = shifted(&|i| lambda.part(i) as i64);
        let nu_shifted = shifted(&|i| nu[i - 1]);
        let c = lr_coefficient(&lam_shifted, mu, &nu_shifted);
        if c == 0 {
            continue;
        }
        let v = hwv_char(ring, CaseId::new(Case::Generic, k), &Weight::from_integers(&nu))?;
        rhs = rhs.add(&v.scale(c as i64));
    }
    Ok((det, rhs))
}

// ---------------------------------------------------------------------------
// Optional on-disk memo for LR products and irreducible characters
// ---------------------------------------------------------------------------

const CACHE_HEADER: &str = "charident-cache v1";

fn partition_str(p: &Partition) -> String {
    if p.is_empty() {
        "-".into()
    } else {
        p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    if s == "-" {
        return Ok(Partition::empty());
    }
    let parts: std::result::Result<Vec<u32>, _> = s.split(',').map(str::parse).collect();
    parts
        .map(Partition::new)
        .map_err(|e| Error::Cache(format!("bad partition '{}': {}", s, e)))
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.parse().map_err(|e| Error::Cache(format!("bad integer list '{}': {}", s, e))))
        .collect()
}

/// Write the current LR and irreducible-character memo contents to `path`
/// as versioned plain text.
pub fn save_cache(path: &Path) -> Result<()> {
    let mut out = String::new();
    writeln!(out, "{}", CACHE_HEADER).unwrap();
    for ((mu, nu), table) in lr_memo_export() {
        write!(out, "lr {} {} ", partition_str(&mu), partition_str(&nu)).unwrap();
        let entries: Vec<String> =
            table.iter().map(|(lam, c)| format!("{}={}", partition_str(lam), c)).collect();
        writeln!(out, "{}", if entries.is_empty() { "-".into() } else { entries.join(";") })
            .unwrap();
    }
    let irr = {
        let memo = IRR_MEMO.lock().unwrap();
        let mut v: Vec<_> = memo.iter().map(|(k, t)| (k.clone(), Arc::clone(t))).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    };
    for ((t, hw), terms) in irr {
        let hw_str = if hw.is_empty() {
            "-".into()
        } else {
            hw.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(out, "irr {:?} {} {} ", t.family, t.k, hw_str).unwrap();
        let entries: Vec<String> = terms
            .iter()
            .map(|(exps, c)| {
                let e = exps.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                format!("{}={}", e, c)
            })
            .collect();
        writeln!(out, "{}", if entries.is_empty() { "-".into() } else { entries.join(";") })
            .unwrap();
    }
    std::fs::write(path, out).map_err(|e| Error::Cache(format!("write {:?}: {}", path, e)))
}

/// Preload memo contents from a cache file previously written by
/// `save_cache`. A missing file is not an error; a malformed one is.
pub fn load_cache(path: &Path) -> Result<()> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(()),
        Err(e) => return Err(Error::Cache(format!("read {:?}: {}", path, e))),
    };
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Err(Error::Cache("unrecognized cache header".into()));
    }
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(' ').collect();
        match fields.as_slice() {
            ["lr", mu, nu, body] => {
                let mut table = BTreeMap::new();
                if *body != "-" {
                    for entry in body.split(';') {
                        let (lam, c) = entry
                            .split_once('=')
                            .ok_or_else(|| Error::Cache(format!("bad lr entry '{}'", entry)))?;
                        let c: BigInt = c
                            .parse()
                            .map_err(|e| Error::Cache(format!("bad coefficient '{}': {}", c, e)))?;
                        table.insert(parse_partition(lam)?, c);
                    }
                }
                lr_memo_import(parse_partition(mu)?, parse_partition(nu)?, table);
            }
            ["irr", family, k, hw, body] => {
                let family = match *family {
                    "A" => Family::A,
                    "B" => Family::B,
                    "C" => Family::C,
                    "D" => Family::D,
                    other => return Err(Error::Cache(format!("bad family '{}'", other))),
                };
                let k: usize =
                    k.parse().map_err(|e| Error::Cache(format!("bad rank '{}': {}", k, e)))?;
                let hw = parse_i64_list(hw)?;
                let mut terms: Vec<(Vec<Exp>, BigInt)> = Vec::new();
                if *body != "-" {
                    for entry in body.split(';') {
                        let (exps, c) = entry
                            .split_once('=')
                            .ok_or_else(|| Error::Cache(format!("bad irr entry '{}'", entry)))?;
                        let exps: Vec<Exp> = parse_i64_list(exps)?
                            .into_iter()
                            .map(|x| x as Exp)
                            .collect();
                        let c: BigInt = c
                            .parse()
                            .map_err(|e| Error::Cache(format!("bad coefficient '{}': {}", c, e)))?;
                        terms.push((exps, c));
                    }
                }
                IRR_MEMO
                    .lock()
                    .unwrap()
                    .entry((RootType::new(family, k), hw))
                    .or_insert_with(|| Arc::new(terms));
            }
            _ => return Err(Error::Cache(format!("unrecognized cache line '{}'", line))),
        }
    }
    Ok(())
}
