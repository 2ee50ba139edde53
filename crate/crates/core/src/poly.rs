//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//!
//! Variables are grouped into named alphabets (e.g. `x`, `y`, `u`). A
//! [`Context`] fixes the alphabets and their sizes; every [`Poly`] carries its
//! context. Degree truncation is per alphabet via [`DegreeCaps`].
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vectors, so iteration
//! order is the canonical lexicographic order (alphabet declaration order,
//! then variable index) and equality is coefficient-exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::Error;

/// A named group of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub name: String,
    pub size: usize,
    /// Whether negative exponents are admitted.
    pub laurent: bool,
}

impl Alphabet {
    pub fn new(name: &str, size: usize) -> Self {
        assert!(size >= 1, "alphabet size must be >= 1");
        Alphabet { name: name.to_string(), size, laurent: false }
    }

    pub fn laurent(name: &str, size: usize) -> Self {
        assert!(size >= 1, "alphabet size must be >= 1");
        Alphabet { name: name.to_string(), size, laurent: true }
    }
}

/// An ordered list of alphabets; the variable space for a family of polys.
#[derive(Debug, PartialEq, Eq)]
pub struct Context {
    alphabets: Vec<Alphabet>,
    offsets: Vec<usize>,
    total: usize,
}

impl Context {
    pub fn new(alphabets: Vec<Alphabet>) -> Arc<Context> {
        let mut names: Vec<&str> = alphabets.iter().map(|a| a.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), alphabets.len(), "alphabet names must be unique");
        let mut offsets = Vec::with_capacity(alphabets.len());
        let mut total = 0;
        for a in &alphabets {
            offsets.push(total);
            total += a.size;
        }
        Arc::new(Context { alphabets, offsets, total })
    }

    pub fn alphabets(&self) -> &[Alphabet] {
        &self.alphabets
    }

    pub fn num_vars(&self) -> usize {
        self.total
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.alphabets.iter().position(|a| a.name == name)
    }

    /// Variable index range of alphabet `a` inside exponent vectors.
    pub fn range(&self, a: usize) -> std::ops::Range<usize> {
        self.offsets[a]..self.offsets[a] + self.alphabets[a].size
    }

    /// The context with alphabet `a` removed.
    pub fn without(&self, a: usize) -> Arc<Context> {
        let mut alphabets = self.alphabets.clone();
        alphabets.remove(a);
        Context::new(alphabets)
    }
}

pub type Exp = i32;

/// Exponent vector over all variables of a context.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial(pub Vec<Exp>);

impl Monomial {
    pub fn unit(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    /// The monomial `var^e` for variable `i` of alphabet `a`.
    pub fn var(ctx: &Context, a: usize, i: usize, e: Exp) -> Self {
        let mut m = Monomial::unit(ctx.num_vars());
        m.0[ctx.range(a).start + i] = e;
        m
    }

    /// Total degree within one alphabet (may be negative for Laurent alphabets).
    pub fn degree_in(&self, ctx: &Context, a: usize) -> i64 {
        ctx.range(a).map(|i| self.0[i] as i64).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn valid_in(&self, ctx: &Context) -> bool {
        ctx.alphabets.iter().enumerate().all(|(a, alph)| {
            alph.laurent || ctx.range(a).all(|i| self.0[i] >= 0)
        })
    }
}

/// Per-alphabet maximum total degree; `None` means uncapped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCaps {
    caps: Vec<Option<i64>>,
}

impl DegreeCaps {
    pub fn new(caps: Vec<Option<i64>>) -> Self {
        assert!(caps.iter().all(|c| c.map_or(true, |v| v >= 0)));
        DegreeCaps { caps }
    }

    pub fn none(ctx: &Context) -> Self {
        DegreeCaps { caps: vec![None; ctx.alphabets().len()] }
    }

    pub fn cap(&self, a: usize) -> Option<i64> {
        self.caps[a]
    }

    pub fn len(&self) -> usize {
        self.caps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.caps.is_empty()
    }

    pub fn admits(&self, ctx: &Context, m: &Monomial) -> bool {
        debug_assert_eq!(self.caps.len(), ctx.alphabets().len());
        self.caps
            .iter()
            .enumerate()
            .all(|(a, c)| c.map_or(true, |cap| m.degree_in(ctx, a) <= cap))
    }
}

/// Sparse exact polynomial; no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ctx: Arc<Context>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(ctx: &Arc<Context>) -> Self {
        Poly { ctx: Arc::clone(ctx), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Arc<Context>) -> Self {
        Poly::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: &Arc<Context>, c: BigInt) -> Self {
        let mut p = Poly::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(ctx.num_vars()), c);
        }
        p
    }

    pub fn term(ctx: &Arc<Context>, m: Monomial, c: BigInt) -> Self {
        let mut p = Poly::zero(ctx);
        p.add_term(m, c);
        p
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Lexicographically largest term, if any.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert!(m.valid_in(&self.ctx), "negative exponent in non-Laurent alphabet");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn assert_same_ctx(&self, other: &Poly) {
        assert_eq!(self.ctx, other.ctx, "polynomial context (alphabet) mismatch");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_same_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = Poly::zero(&self.ctx);
        for (m, co) in &self.terms {
            out.terms.insert(m.clone(), co * c);
        }
        out
    }

    /// Product with every term violating any cap discarded.
    pub fn mul(&self, other: &Poly, caps: &DegreeCaps) -> Poly {
        self.assert_same_ctx(other);
        let ctx = &self.ctx;
        let na = ctx.alphabets().len();
        // Bucket the smaller factor by per-alphabet degree vector so whole
        // buckets can be skipped against the caps.
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut buckets: BTreeMap<Vec<i64>, Vec<(&Monomial, &BigInt)>> = BTreeMap::new();
        for (m, c) in &small.terms {
            let deg: Vec<i64> = (0..na).map(|a| m.degree_in(ctx, a)).collect();
            buckets.entry(deg).or_default().push((m, c));
        }
        let mut out = Poly::zero(ctx);
        for (m, c) in &big.terms {
            let deg: Vec<i64> = (0..na).map(|a| m.degree_in(ctx, a)).collect();
            for (bdeg, terms) in &buckets {
                let ok = (0..na).all(|a| match caps.cap(a) {
                    Some(cap) => deg[a] + bdeg[a] <= cap,
                    None => true,
                });
                if !ok {
                    continue;
                }
                for (bm, bc) in terms {
                    out.add_term(m.mul(bm), c * *bc);
                }
            }
        }
        out
    }

    pub fn truncate(&self, caps: &DegreeCaps) -> Poly {
        let mut out = Poly::zero(&self.ctx);
        for (m, c) in &self.terms {
            if caps.admits(&self.ctx, m) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// The coefficient of the given `a`-monomial, as a poly in the remaining
    /// alphabets.
    pub fn extract_alphabet_part(&self, a: usize, exps: &[Exp]) -> Poly {
        let range = self.ctx.range(a);
        assert_eq!(exps.len(), range.len());
        let sub = self.ctx.without(a);
        let mut out = Poly::zero(&sub);
        for (m, c) in &self.terms {
            if m.0[range.clone()] == *exps {
                let mut rest: Vec<Exp> = Vec::with_capacity(sub.num_vars());
                rest.extend_from_slice(&m.0[..range.start]);
                rest.extend_from_slice(&m.0[range.end..]);
                out.terms.insert(Monomial(rest), c.clone());
            }
        }
        out
    }

    /// Group terms by their exponent vector in alphabet `a`; values are polys
    /// over the context without `a`.
    pub fn split_by_alphabet(&self, a: usize) -> BTreeMap<Vec<Exp>, Poly> {
        let range = self.ctx.range(a);
        let sub = self.ctx.without(a);
        let mut out: BTreeMap<Vec<Exp>, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.0[range.clone()].to_vec();
            let mut rest: Vec<Exp> = Vec::with_capacity(sub.num_vars());
            rest.extend_from_slice(&m.0[..range.start]);
            rest.extend_from_slice(&m.0[range.end..]);
            out.entry(key)
                .or_insert_with(|| Poly::zero(&sub))
                .terms
                .insert(Monomial(rest), c.clone());
        }
        out
    }

    /// Re-express this poly over `target`, matching alphabets by name.
    /// Alphabets missing from `self` get exponent 0 everywhere.
    pub fn promote(&self, target: &Arc<Context>) -> Poly {
        let map: Vec<(usize, usize)> = self
            .ctx
            .alphabets()
            .iter()
            .enumerate()
            .map(|(a, alph)| {
                let t = target
                    .index_of(&alph.name)
                    .unwrap_or_else(|| panic!("alphabet {} missing in target context", alph.name));
                assert_eq!(target.alphabets()[t].size, alph.size, "alphabet size mismatch");
                (a, t)
            })
            .collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.num_vars()];
            for &(a, t) in &map {
                let src = self.ctx.range(a);
                let dst = target.range(t);
                exps[dst].copy_from_slice(&m.0[src]);
            }
            out.terms.insert(Monomial(exps), c.clone());
        }
        out
    }

    fn min_exponents(&self) -> Vec<Exp> {
        let n = self.ctx.num_vars();
        let mut mins = vec![0; n];
        for (m, _) in &self.terms {
            for i in 0..n {
                mins[i] = mins[i].min(m.0[i]);
            }
        }
        mins
    }

    /// Exact division; errors if the quotient does not exist over the
    /// integers. Works for Laurent polys by clearing denominators first.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, Error> {
        self.assert_same_ctx(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Ok(Poly::zero(&self.ctx));
        }
        let shift_a = self.min_exponents();
        let shift_b = divisor.min_exponents();
        let unshift =
            |p: &Poly, s: &[Exp]| -> Poly {
                let mut out = Poly::zero(&p.ctx);
                for (m, c) in &p.terms {
                    let e: Vec<Exp> = m.0.iter().zip(s).map(|(a, b)| a - b).collect();
                    out.terms.insert(Monomial(e), c.clone());
                }
                out
            };
        let mut rem = unshift(self, &shift_a);
        let div = unshift(divisor, &shift_b);
        let (lt_m, lt_c) = div.terms.last_key_value().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut quot = Poly::zero(&self.ctx);
        while let Some((rm, rc)) = rem.terms.last_key_value() {
            let qm: Vec<Exp> = rm.0.iter().zip(&lt_m.0).map(|(a, b)| a - b).collect();
            if qm.iter().any(|&e| e < 0) || (rc % &lt_c) != BigInt::zero() {
                return Err(Error::NonExactDivision { term: format!("{}", MonoDisplay(&self.ctx, rm)) });
            }
            let qc = rc / &lt_c;
            let qmono = Monomial(qm);
            let piece = Poly::term(&self.ctx, qmono.clone(), qc.clone());
            rem = rem.sub(&div.mul(&piece, &DegreeCaps::none(&self.ctx)));
            quot.terms.insert(qmono, qc);
        }
        // Undo the clearing shifts: quotient picks up shift_b - shift_a.
        let reshift: Vec<Exp> = shift_b.iter().zip(&shift_a).map(|(b, a)| b - a).collect();
        Ok(unshift(&quot, &reshift))
    }
}

struct MonoDisplay<'a>(&'a Context, &'a Monomial);

impl fmt::Display for MonoDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (a, alph) in self.0.alphabets().iter().enumerate() {
            for (i, v) in self.0.range(a).enumerate() {
                let e = self.1 .0[v];
                if e == 0 {
                    continue;
                }
                if any {
                    write!(f, "*")?;
                }
                any = true;
                if alph.size == 1 {
                    write!(f, "{}", alph.name)?;
                } else {
                    write!(f, "{}{}", alph.name, i + 1)?;
                }
                if e != 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.0.iter().all(|&e| e == 0);
            if !abs.is_one() || is_const {
                write!(f, "{}", abs)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            if !is_const {
                write!(f, "{}", MonoDisplay(&self.ctx, m))?;
            }
        }
        Ok(())
    }
}

/// Render one monomial of a poly (used in mismatch reports).
pub fn monomial_string(ctx: &Context, m: &Monomial) -> String {
    format!("{}", MonoDisplay(ctx, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx_x(n: usize) -> Arc<Context> {
        Context::new(vec![Alphabet::new("x", n)])
    }

    fn x(ctx: &Arc<Context>, i: usize) -> Poly {
        Poly::term(ctx, Monomial::var(ctx, 0, i, 1), BigInt::one())
    }

    #[test]
    fn difference_of_squares() {
        let ctx = ctx_x(2);
        let one = Poly::one(&ctx);
        let x1 = x(&ctx, 0);
        let caps = DegreeCaps::none(&ctx);
        let p = one.add(&x1).mul(&one.sub(&x1), &caps);
        let expected = one.sub(&x1.mul(&x1, &caps));
        assert_eq!(p, expected);
    }

    #[test]
    fn cap_discards_high_terms() {
        let ctx = ctx_x(2);
        let x1 = x(&ctx, 0);
        let x2 = x(&ctx, 1);
        let caps = DegreeCaps::new(vec![Some(2)]);
        let p = x1.add(&x2).mul(&x1.mul(&x2, &DegreeCaps::none(&ctx)), &caps);
        assert!(p.is_zero());
    }

    #[test]
    fn coefficient_queries() {
        let ctx = ctx_x(1);
        let p = Poly::one(&ctx).add(&x(&ctx, 0).scale(&BigInt::from(3)));
        assert_eq!(p.coefficient(&Monomial::var(&ctx, 0, 0, 1)), BigInt::from(3));
        assert_eq!(p.coefficient(&Monomial::var(&ctx, 0, 0, 5)), BigInt::zero());
        let z = Poly::zero(&ctx);
        assert_eq!(z.coefficient(&Monomial::unit(1)), BigInt::zero());
    }

    #[test]
    fn extract_laurent_part() {
        let ctx = Context::new(vec![Alphabet::new("x", 2), Alphabet::laurent("u", 1)]);
        let caps = DegreeCaps::none(&ctx);
        let u = Poly::term(&ctx, Monomial::var(&ctx, 1, 0, 1), BigInt::one());
        let uinv = Poly::term(&ctx, Monomial::var(&ctx, 1, 0, -1), BigInt::one());
        let x1 = Poly::term(&ctx, Monomial::var(&ctx, 0, 0, 1), BigInt::one());
        let x2 = Poly::term(&ctx, Monomial::var(&ctx, 0, 1, 1), BigInt::one());

        let p = u.add(&uinv).mul(&x1, &caps);
        let part = p.extract_alphabet_part(1, &[1]);
        assert_eq!(part, x1.extract_alphabet_part(1, &[0]));

        // extract u^0 from x1*u -> 0
        let q = x1.mul(&u, &caps);
        assert!(q.extract_alphabet_part(1, &[0]).is_zero());

        // extract u^-1 from (x1+x2)*u^-1 -> x1+x2
        let r = x1.add(&x2).mul(&uinv, &caps);
        let got = r.extract_alphabet_part(1, &[-1]);
        let want = x1.add(&x2).extract_alphabet_part(1, &[0]);
        assert_eq!(got, want);
    }

    #[test]
    fn capped_mul_equals_uncapped_then_truncated() {
        let ctx = ctx_x(3);
        let free = DegreeCaps::none(&ctx);
        let caps = DegreeCaps::new(vec![Some(3)]);
        // deterministic small polys
        let mut a = Poly::one(&ctx);
        let mut b = Poly::zero(&ctx);
        for i in 0..3 {
            a = a.add(&x(&ctx, i).scale(&BigInt::from(i as i64 + 1)));
            b = b.add(&x(&ctx, i).mul(&x(&ctx, (i + 1) % 3), &free));
        }
        b = b.sub(&Poly::constant(&ctx, BigInt::from(7)));
        assert_eq!(a.mul(&b, &caps), a.mul(&b, &free).truncate(&caps));
    }

    #[test]
    fn ring_laws_under_caps() {
        let ctx = ctx_x(2);
        let caps = DegreeCaps::new(vec![Some(4)]);
        let polys = [
            Poly::one(&ctx).add(&x(&ctx, 0)),
            x(&ctx, 1).sub(&Poly::constant(&ctx, BigInt::from(2))),
            x(&ctx, 0).mul(&x(&ctx, 1), &caps).add(&x(&ctx, 1)),
        ];
        for a in &polys {
            for b in &polys {
                assert_eq!(a.mul(b, &caps), b.mul(a, &caps), "commutativity");
                for c in &polys {
                    assert_eq!(
                        a.mul(b, &caps).mul(c, &caps),
                        a.mul(&b.mul(c, &caps), &caps),
                        "associativity under eager capping"
                    );
                    assert_eq!(
                        a.mul(&b.add(c), &caps),
                        a.mul(b, &caps).add(&a.mul(c, &caps)),
                        "distributivity"
                    );
                }
            }
        }
    }

    #[test]
    fn exact_division_roundtrip() {
        let ctx = Context::new(vec![Alphabet::laurent("u", 2)]);
        let free = DegreeCaps::none(&ctx);
        let u1 = Poly::term(&ctx, Monomial::var(&ctx, 0, 0, 1), BigInt::one());
        let u2inv = Poly::term(&ctx, Monomial::var(&ctx, 0, 1, -1), BigInt::one());
        let a = u1.add(&u2inv);
        let b = u1.sub(&u2inv).add(&Poly::constant(&ctx, BigInt::from(5)));
        let prod = a.mul(&b, &free);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        // non-divisible input errors
        let bad = prod.add(&Poly::one(&ctx));
        assert!(bad.exact_div(&a).is_err());
    }

    #[test]
    fn display_is_readable() {
        let ctx = Context::new(vec![Alphabet::new("x", 2), Alphabet::laurent("u", 1)]);
        let p = Poly::term(&ctx, Monomial::var(&ctx, 1, 0, -1), BigInt::from(-2))
            .add(&Poly::term(&ctx, Monomial::var(&ctx, 0, 1, 3), BigInt::one()));
        assert_eq!(format!("{}", p), "x2^3 - 2*u^-1");
    }
}
