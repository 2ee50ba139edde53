//! The truncated graded character ring: L_n series, parity series M_0/M_1,
//! the full Sym(E) series, and determinants of matrices over the ring.

use num_bigint::BigInt;
use num_traits::Zero;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::poly::{Alphabet, Context, DegreeCaps, Poly};
use crate::symfunc::{basis_polynomial, Basis};
use crate::{Error, Result};

/// One alphabet (x) or two (x, y).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Single,
    Double,
}

/// The ring all series of one verification run live in: fixed alphabets and
/// degree caps. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharRing {
    pub mode: Mode,
    ctx: Arc<Context>,
    caps: DegreeCaps,
    sizes: (usize, usize),
    cap_vals: (i64, i64),
}

impl CharRing {
    /// Single-alphabet ring: `x` with `vars` variables, truncated at `cap`.
    pub fn single(vars: usize, cap: i64) -> CharRing {
        let ctx = Context::new(vec![Alphabet::new("x", vars)]);
        CharRing {
            mode: Mode::Single,
            ctx,
            caps: DegreeCaps::new(vec![Some(cap)]),
            sizes: (vars, 0),
            cap_vals: (cap, 0),
        }
    }

    /// Two-alphabet ring: `x` and `y`, with separate caps.
    pub fn double(vars_x: usize, vars_y: usize, cap_x: i64, cap_y: i64) -> CharRing {
        let ctx = Context::new(vec![Alphabet::new("x", vars_x), Alphabet::new("y", vars_y)]);
        CharRing {
            mode: Mode::Double,
            ctx,
            caps: DegreeCaps::new(vec![Some(cap_x), Some(cap_y)]),
            sizes: (vars_x, vars_y),
            cap_vals: (cap_x, cap_y),
        }
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn caps(&self) -> &DegreeCaps {
        &self.caps
    }

    pub fn cap_x(&self) -> i64 {
        self.cap_vals.0
    }

    pub fn cap_y(&self) -> i64 {
        self.cap_vals.1
    }

    /// True when each alphabet has at least as many variables as its cap.
    pub fn is_faithful(&self) -> bool {
        self.sizes.0 as i64 >= self.cap_vals.0
            && (self.mode == Mode::Single || self.sizes.1 as i64 >= self.cap_vals.1)
    }

    pub fn zero(&self) -> CharSeries {
        CharSeries { ring: self.clone(), poly: Poly::zero(&self.ctx) }
    }

    pub fn one(&self) -> CharSeries {
        CharSeries { ring: self.clone(), poly: Poly::one(&self.ctx) }
    }

    pub fn from_poly(&self, poly: Poly) -> CharSeries {
        assert_eq!(poly.context(), &self.ctx, "poly context does not match ring");
        CharSeries { ring: self.clone(), poly: poly.truncate(&self.caps) }
    }

    fn memo_key(&self, n: i64, basis: Basis) -> LKey {
        (self.mode, self.sizes, self.cap_vals, n, basis)
    }

    /// The series L_n = Σ_{d≥0} b_d(x) b_{d+n}(y or x), truncated. In the
    /// single-alphabet mode both factors live in x, so L_n = L_{-n}.
    pub fn l_series_basis(&self, n: i64, basis: Basis) -> CharSeries {
        let key = self.memo_key(n, basis);
        if let Some(p) = L_MEMO.lock().unwrap().get(&key) {
            return CharSeries { ring: self.clone(), poly: p.promote(&self.ctx) };
        }
        let mut sum = Poly::zero(&self.ctx);
        for d in 0..=self.cap_vals.0 {
            if d + n < 0 {
                continue;
            }
            // skip summands that are entirely above the caps
            let above = match self.mode {
                Mode::Double => d + n > self.cap_vals.1,
                Mode::Single => 2 * d + n > self.cap_vals.0,
            };
            if above {
                continue;
            }
            let lo = basis_polynomial(basis, d, &self.ctx, 0);
            if lo.is_zero() {
                continue;
            }
            let hi = match self.mode {
                Mode::Double => basis_polynomial(basis, d + n, &self.ctx, 1),
                Mode::Single => basis_polynomial(basis, d + n, &self.ctx, 0),
            };
            sum = sum.add(&lo.mul(&hi, &self.caps));
        }
        L_MEMO.lock().unwrap().insert(key, sum.clone());
        CharSeries { ring: self.clone(), poly: sum }
    }

    pub fn l_series(&self, n: i64) -> CharSeries {
        self.l_series_basis(n, Basis::Complete)
    }

    /// M_0 = Σ h_{2d}, M_1 = Σ h_{2d+1} (single alphabet only).
    pub fn m_series(&self, parity: u8) -> CharSeries {
        assert_eq!(self.mode, Mode::Single, "M series lives in the single-alphabet ring");
        assert!(parity < 2);
        let mut sum = Poly::zero(&self.ctx);
        let mut d = parity as i64;
        while d <= self.cap_vals.0 {
            sum = sum.add(&basis_polynomial(Basis::Complete, d, &self.ctx, 0));
            d += 2;
        }
        CharSeries { ring: self.clone(), poly: sum }
    }

    /// [Sym(E)] = Σ_d h_d, truncated.
    pub fn sym_e_series(&self) -> CharSeries {
        assert_eq!(self.mode, Mode::Single, "Sym(E) series lives in the single-alphabet ring");
        let mut sum = Poly::zero(&self.ctx);
        for d in 0..=self.cap_vals.0 {
            sum = sum.add(&basis_polynomial(Basis::Complete, d, &self.ctx, 0));
        }
        CharSeries { ring: self.clone(), poly: sum }
    }

    /// Exact determinant over the ring: Leibniz expansion for k ≤ 6,
    /// cofactor expansion above.
    pub fn det(&self, m: &[Vec<CharSeries>]) -> Result<CharSeries> {
        let k = m.len();
        for row in m {
            if row.len() != k {
                return Err(Error::NonSquareMatrix { rows: k, cols: row.len() });
            }
            for e in row {
                if e.ring != *self {
                    return Err(Error::CapsMismatch);
                }
            }
        }
        if k <= 6 {
            Ok(self.det_leibniz(m))
        } else {
            Ok(self.det_cofactor(m))
        }
    }

    /// Leibniz (permutation-sum) determinant; per-permutation products are
    /// truncated eagerly.
    pub fn det_leibniz(&self, m: &[Vec<CharSeries>]) -> CharSeries {
        let k = m.len();
        if k == 0 {
            return self.one();
        }
        let mut acc = self.zero();
        for (sign, perm) in crate::symfunc::permutations_signed(k) {
            let mut prod = self.one();
            for i in 0..k {
                prod = prod.mul(&m[i][perm[i] - 1]);
                if prod.poly.is_zero() {
                    break;
                }
            }
            acc = if sign > 0 { acc.add(&prod) } else { acc.sub(&prod) };
        }
        acc
    }

    /// First-row cofactor expansion determinant.
    pub fn det_cofactor(&self, m: &[Vec<CharSeries>]) -> CharSeries {
        let k = m.len();
        if k == 0 {
            return self.one();
        }
        if k == 1 {
            return m[0][0].clone();
        }
        let mut acc = self.zero();
        for j in 0..k {
            let minor: Vec<Vec<CharSeries>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let term = m[0][j].mul(&self.det_cofactor(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

type LKey = (Mode, (usize, usize), (i64, i64), i64, Basis);
static L_MEMO: Lazy<Mutex<HashMap<LKey, Poly>>> = Lazy::new(Default::default);

/// A degree-capped graded character: a truncated poly symmetric per alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeries {
    ring: CharRing,
    poly: Poly,
}

impl CharSeries {
    pub fn ring(&self) -> &CharRing {
        &self.ring
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn check(&self, other: &CharSeries) {
        assert_eq!(self.ring, other.ring, "mixing caps or alphabets is an error");
    }

    pub fn add(&self, other: &CharSeries) -> CharSeries {
        self.check(other);
        CharSeries { ring: self.ring.clone(), poly: self.poly.add(&other.poly) }
    }

    pub fn sub(&self, other: &CharSeries) -> CharSeries {
        self.check(other);
        CharSeries { ring: self.ring.clone(), poly: self.poly.sub(&other.poly) }
    }

    pub fn mul(&self, other: &CharSeries) -> CharSeries {
        self.check(other);
        CharSeries {
            ring: self.ring.clone(),
            poly: self.poly.mul(&other.poly, &self.ring.caps),
        }
    }

    pub fn neg(&self) -> CharSeries {
        CharSeries { ring: self.ring.clone(), poly: self.poly.neg() }
    }

    pub fn scale(&self, c: i64) -> CharSeries {
        CharSeries { ring: self.ring.clone(), poly: self.poly.scale(&BigInt::from(c)) }
    }

    /// Coefficient-wise division by 2; hard error naming the first monomial
    /// with an odd coefficient.
    pub fn halve_exact(&self) -> Result<CharSeries> {
        let two = BigInt::from(2);
        let mut out = Poly::zero(self.poly.context());
        for (m, c) in self.poly.terms() {
            if (c % &two) != BigInt::zero() {
                return Err(Error::OddCoefficient {
                    term: crate::poly::monomial_string(self.poly.context(), m),
                });
            }
            out.add_term(m.clone(), c / &two);
        }
        Ok(CharSeries { ring: self.ring.clone(), poly: out })
    }

    /// The part of the series whose x-degree equals `d`.
    pub fn x_degree_part(&self, d: i64) -> CharSeries {
        let ctx = self.poly.context();
        let mut out = Poly::zero(ctx);
        for (m, c) in self.poly.terms() {
            if m.degree_in(ctx, 0) == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        CharSeries { ring: self.ring.clone(), poly: out }
    }

    /// First differing monomial between two series in canonical order,
    /// with both coefficients.
    pub fn first_mismatch(&self, other: &CharSeries) -> Option<(String, BigInt, BigInt)> {
        self.check(other);
        let diff = self.poly.sub(&other.poly);
        let (m, _) = diff.terms().next()?;
        Some((
            crate::poly::monomial_string(self.poly.context(), m),
            self.poly.coefficient(m),
            other.poly.coefficient(m),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use num_traits::One;

    #[test]
    fn l0_double_low_caps() {
        // caps (1,1): 1 + sum_{i,j} x_i y_j
        let ring = CharRing::double(2, 2, 1, 1);
        let l0 = ring.l_series(0);
        let mut want = Poly::one(ring.context());
        for i in 0..2 {
            for j in 0..2 {
                let mut m = Monomial::unit(4);
                m.0[i] = 1;
                m.0[2 + j] = 1;
                want.add_term(m, BigInt::one());
            }
        }
        assert_eq!(l0.poly(), &want);
    }

    #[test]
    fn single_alphabet_l_symmetry() {
        let ring = CharRing::single(6, 6);
        for n in 0..=4i64 {
            assert_eq!(ring.l_series(n), ring.l_series(-n), "L_{} != L_{}", n, -n);
        }
    }

    #[test]
    fn l3_truncates_to_zero_below_min_degree() {
        let ring = CharRing::single(2, 2);
        assert!(ring.l_series(3).is_zero());
    }

    #[test]
    fn two_alphabet_swap_symmetry() {
        // L_n(x,y) = L_{-n}(y,x): compare coefficient multisets by swapping
        // alphabet roles (equal sizes and caps so the swap is an isomorphism).
        let ring = CharRing::double(5, 5, 5, 5);
        for n in -4..=4i64 {
            let ln = ring.l_series(n);
            let lneg = ring.l_series(-n);
            // swap x and y exponents
            let mut swapped = Poly::zero(ring.context());
            for (m, c) in lneg.poly().terms() {
                let mut e = m.0.clone();
                e.rotate_left(5);
                swapped.add_term(Monomial(e), c.clone());
            }
            assert_eq!(ln.poly(), &swapped, "n = {}", n);
        }
    }

    #[test]
    fn m_series_parity_split() {
        for cap in 0..=8i64 {
            let ring = CharRing::single(4, cap);
            let total = ring.m_series(0).add(&ring.m_series(1));
            assert_eq!(total, ring.sym_e_series(), "cap {}", cap);
        }
        let ring = CharRing::single(4, 2);
        let m0 = ring.m_series(0);
        let want = ring.one().poly().add(&crate::symfunc::h_polynomial(2, ring.context(), 0));
        assert_eq!(m0.poly(), &want);
        let ring1 = CharRing::single(4, 1);
        assert_eq!(
            ring1.m_series(1).poly(),
            &crate::symfunc::h_polynomial(1, ring1.context(), 0)
        );
    }

    #[test]
    fn small_determinants() {
        let ring = CharRing::single(3, 3);
        let a = ring.l_series(0);
        let b = ring.l_series(1);
        let c = ring.l_series(2);
        let d = ring.m_series(0);
        assert_eq!(ring.det(&[vec![a.clone()]]).unwrap(), a);
        let det2 = ring.det(&[vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        assert_eq!(det2, a.mul(&d).sub(&b.mul(&c)));
        // empty determinant is 1
        assert_eq!(ring.det(&[]).unwrap(), ring.one());
    }

    #[test]
    fn leibniz_equals_cofactor_3x3() {
        let ring = CharRing::single(3, 3);
        let e: Vec<CharSeries> =
            (-2..=6).map(|n| ring.l_series(n)).collect();
        let m = vec![
            vec![e[0].clone(), e[1].clone(), e[2].clone()],
            vec![e[3].clone(), e[4].clone(), e[5].clone()],
            vec![e[6].clone(), e[7].clone(), e[8].clone()],
        ];
        assert_eq!(ring.det_leibniz(&m), ring.det_cofactor(&m));
    }

    #[test]
    fn det_multilinear_and_alternating() {
        let ring = CharRing::single(3, 3);
        let a = ring.l_series(0);
        let b = ring.l_series(1);
        let c = ring.l_series(2);
        let d = ring.m_series(1);
        // alternating: equal rows give zero
        let z = ring.det(&[vec![a.clone(), b.clone()], vec![a.clone(), b.clone()]]).unwrap();
        assert!(z.is_zero());
        // linear in first row
        let lhs = ring
            .det(&[vec![a.add(&c), b.add(&d)], vec![c.clone(), d.clone()]])
            .unwrap();
        let rhs = ring
            .det(&[vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]])
            .unwrap()
            .add(&ring.det(&[vec![c.clone(), d.clone()], vec![c, d]]).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn halving() {
        let ring = CharRing::single(2, 2);
        let two = ring.one().scale(2).add(&ring.m_series(1).scale(2));
        let half = two.halve_exact().unwrap();
        assert_eq!(half, ring.one().add(&ring.m_series(1)));
        assert!(ring.one().halve_exact().is_err());
    }

    #[test]
    fn det_shape_errors() {
        let ring = CharRing::single(2, 2);
        let a = ring.one();
        assert!(matches!(
            ring.det(&[vec![a.clone(), a.clone()]]),
            Err(Error::NonSquareMatrix { .. })
        ));
        let other = CharRing::single(2, 3);
        assert!(matches!(
            ring.det(&[vec![other.one()]]),
            Err(Error::CapsMismatch)
        ));
    }
}
