//! Construction of BGG-type complex terms for the six determinantal cases,
//! their signed Euler characteristics, and the closed-form determinants they
//! are checked against.
//!
//! The six cases pair a classical Weyl group with a weight-space
//! factorization into L-series:
//!
//! * generic       — gl_k, two alphabets, V_χ = L_{χ_1}⊗…⊗L_{χ_k}
//! * skew          — sp_2k, single alphabet
//! * sym-even      — so_2k, single alphabet
//! * sym-odd       — so_{2k+1}, single alphabet, extra Sym(E) factor
//! * spinor-odd    — so_{2k+1} with the spinor factor Δ
//! * spinor-even   — so_2k with Δ

use crate::charring::{CharRing, CharSeries, Mode};
use crate::partition::Partition;
use crate::symfunc::{permutations_signed, Basis};
use crate::weyl::{enumerate_weyl, zelevinsky_weight, Family, RootType, Weight};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    Generic,
    Skew,
    SymEven,
    SymOdd,
    SpinorOdd,
    SpinorEven,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseId {
    pub case: Case,
    pub k: usize,
}

impl CaseId {
    pub fn new(case: Case, k: usize) -> Self {
        assert!(k >= 1, "rank must be >= 1");
        CaseId { case, k }
    }

    pub fn root_type(&self) -> RootType {
        let family = match self.case {
            Case::Generic => Family::A,
            Case::Skew => Family::C,
            Case::SymEven | Case::SpinorEven => Family::D,
            Case::SymOdd | Case::SpinorOdd => Family::B,
        };
        RootType::new(family, self.k)
    }

    pub fn mode(&self) -> Mode {
        match self.case {
            Case::Generic => Mode::Double,
            _ => Mode::Single,
        }
    }

    fn is_spinor(&self) -> bool {
        matches!(self.case, Case::SpinorOdd | Case::SpinorEven)
    }

    /// Whether the odd-orthogonal Sym(E) factor is present.
    fn has_sym_factor(&self) -> bool {
        matches!(self.case, Case::SymOdd | Case::SpinorOdd)
    }

    /// Weight-domain check per case.
    pub fn admissible(&self, lambda: &Weight) -> bool {
        if lambda.len() != self.k {
            return false;
        }
        let d = &lambda.doubled;
        match self.case {
            // weakly decreasing integer vector
            Case::Generic => lambda.is_integral() && lambda.is_weakly_decreasing(),
            // partitions of length <= k (trailing zeros allowed)
            Case::Skew | Case::SymEven | Case::SymOdd => {
                lambda.is_integral() && lambda.is_weakly_decreasing() && *d.last().unwrap() >= 0
            }
            // λ - (1/2,...,1/2) is a partition
            Case::SpinorOdd => {
                lambda.is_half_integral() && lambda.is_weakly_decreasing() && *d.last().unwrap() >= 1
            }
            // μ = λ - (1/2,...,1/2) weakly decreasing with μ_{k-1} >= |μ_k|
            Case::SpinorEven => {
                if !lambda.is_half_integral() {
                    return false;
                }
                let mu: Vec<i64> = d.iter().map(|x| x - 1).collect();
                let dec = mu.windows(2).all(|w| w[0] >= w[1]);
                dec && (self.k < 2 || mu[self.k - 2] >= mu[self.k - 1].abs())
            }
        }
    }

    /// The canonical "trivial" weight: 0, or (1/2,...,1/2) in spinor cases.
    pub fn base_lambda(&self) -> Weight {
        if self.is_spinor() {
            Weight::from_doubled(vec![1; self.k])
        } else {
            Weight::zero(self.k)
        }
    }

    fn check_ring(&self, ring: &CharRing) -> Result<()> {
        if ring.mode != self.mode() {
            return Err(Error::CapsMismatch);
        }
        Ok(())
    }

    fn check_lambda(&self, lambda: &Weight) -> Result<()> {
        if !self.admissible(lambda) {
            return Err(Error::InadmissibleWeight(lambda.doubled.clone()));
        }
        Ok(())
    }
}

/// Which written form of a determinant to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Variant {
    /// The simplified general-λ entries (the default).
    #[default]
    ClosedForm,
    /// The odd symmetric case with a plus sign in the second entry term.
    /// Kept so the sign ambiguity can be adjudicated against the oracle
    /// instead of silently picking one form.
    PlusSign,
    /// The unsimplified four-term entries of the spinor cases (before
    /// column operations).
    FourTerm,
}

/// The weights of one homological degree of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTerm {
    pub degree: u32,
    pub weights: Vec<Weight>,
}

/// Terms of the complex for (case, λ), grouped by exact Coxeter length.
pub fn complex_terms(case: CaseId, lambda: &Weight) -> Result<Vec<ComplexTerm>> {
    case.check_lambda(lambda)?;
    let t = case.root_type();
    let elements = enumerate_weyl(t)?;
    let top = elements.iter().map(|w| w.length).max().unwrap_or(0);
    let mut terms: Vec<ComplexTerm> =
        (0..=top).map(|degree| ComplexTerm { degree, weights: Vec::new() }).collect();
    for w in &elements {
        let chi = zelevinsky_weight(t, lambda, w);
        terms[w.length as usize].weights.push(chi);
    }
    for t in &mut terms {
        t.weights.sort_by(|a, b| b.cmp(a));
    }
    Ok(terms)
}

fn l_index(doubled: i64) -> i64 {
    assert!(doubled % 2 == 0, "L-series index must be an integer weight entry");
    doubled / 2
}

/// Character of the χ weight space via the case's factorization into
/// L-series (times Sym(E) for odd orthogonal cases, summed over the spinor
/// weight shifts for spinor cases).
pub fn weight_space_char(ring: &CharRing, case: CaseId, chi: &Weight) -> Result<CharSeries> {
    case.check_ring(ring)?;
    if chi.len() != case.k {
        return Err(Error::InadmissibleWeight(chi.doubled.clone()));
    }
    let parity_ok = if case.is_spinor() { chi.is_half_integral() } else { chi.is_integral() };
    if !parity_ok {
        return Err(Error::InadmissibleWeight(chi.doubled.clone()));
    }
    let mut acc = if case.is_spinor() {
        // sum over the 0-1 shift vectors: each entry picks up v_i - 1/2
        let mut sum = ring.zero();
        for bits in 0..(1u32 << case.k) {
            let mut prod = ring.one();
            for i in 0..case.k {
                let v = if bits & (1 << i) != 0 { 1 } else { 0 };
                let idx = l_index(chi.doubled[i] + 2 * v - 1);
                prod = prod.mul(&ring.l_series(idx));
                if prod.is_zero() {
                    break;
                }
            }
            sum = sum.add(&prod);
        }
        sum
    } else {
        let mut prod = ring.one();
        for i in 0..case.k {
            prod = prod.mul(&ring.l_series(l_index(chi.doubled[i])));
            if prod.is_zero() {
                break;
            }
        }
        prod
    };
    if case.has_sym_factor() {
        acc = acc.mul(&ring.sym_e_series());
    }
    Ok(acc)
}

/// Raw signed Euler characteristic: Σ_w (-1)^{ℓ(w)} [V_{λ+ρ-w⁻¹(ρ)}].
pub fn euler_raw(ring: &CharRing, case: CaseId, lambda: &Weight) -> Result<CharSeries> {
    case.check_ring(ring)?;
    case.check_lambda(lambda)?;
    let t = case.root_type();
    let mut acc = ring.zero();
    for w in enumerate_weyl(t)? {
        let chi = zelevinsky_weight(t, lambda, &w);
        let term = weight_space_char(ring, case, &chi)?;
        acc = if w.length % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

/// Signed L-series indices of one determinant entry, in doubled units.
fn entry_terms_doubled(
    case: CaseId,
    lambda: &Weight,
    variant: Variant,
    i: usize,
    j: usize,
) -> Vec<(i8, i64)> {
    let k = case.k as i64;
    let (i, j) = (i as i64, j as i64);
    let lam = |idx: i64| lambda.doubled[(idx - 1) as usize];
    let two = |v: i64| 2 * v;
    match (case.case, variant) {
        (Case::Generic, _) => vec![(1, lam(i) + two(j - i))],
        (Case::Skew, _) => vec![
            (1, lam(i) + two(j - i)),
            (-1, lam(i) + two(2 * k + 2 - j - i)),
        ],
        (Case::SymEven, _) => vec![
            (1, lam(i) + two(j - i)),
            (1, lam(i) + two(2 * k - j - i)),
        ],
        (Case::SymOdd, Variant::PlusSign) => vec![
            (1, lam(i) + two(j - i)),
            (1, lam(i) + two(2 * k + 1 - i - j)),
        ],
        (Case::SymOdd, _) => vec![
            (1, lam(i) + two(j - i)),
            (-1, lam(i) + two(2 * k + 1 - i - j)),
        ],
        (Case::SpinorOdd, Variant::FourTerm) => vec![
            (1, lam(i) - 1 + two(j - i)),
            (-1, lam(i) + 1 + two(2 * k - i - j)),
            (1, lam(i) + 1 + two(j - i)),
            (-1, lam(i) + 3 + two(2 * k - i - j)),
        ],
        // The two spinor entry rules are the row-and-column reversal of the
        // four-term determinants after column reduction; the first index is
        // λ_{k+1-i} - 1/2 + (i - j). (The commonly printed form with -i+j in
        // the first slot only agrees at λ = (1/2,...,1/2), where the matrix
        // is the transpose of this one.)
        (Case::SpinorOdd, _) => vec![
            (1, lam(k + 1 - i) - 1 + two(i - j)),
            (-1, lam(k + 1 - i) - 1 + two(i + j)),
        ],
        (Case::SpinorEven, Variant::FourTerm) => vec![
            (1, lam(i) - 1 + two(j - i)),
            (1, lam(i) - 1 + two(2 * k - i - j)),
            (1, lam(i) + 1 + two(j - i)),
            (1, lam(i) + 1 + two(2 * k - i - j)),
        ],
        (Case::SpinorEven, _) => vec![
            (1, lam(k + 1 - i) - 1 + two(i - j)),
            (1, lam(k + 1 - i) - 3 + two(i + j)),
        ],
    }
}

/// Whether the determinant result must be halved for this case/variant.
fn needs_halving(case: CaseId, variant: Variant) -> bool {
    matches!(
        (case.case, variant),
        (Case::SymEven, _) | (Case::SpinorEven, Variant::FourTerm)
    )
}

/// The symbolic determinant entry matrix: signed L-indices per entry.
pub fn entry_matrix(case: CaseId, lambda: &Weight, variant: Variant) -> Result<Vec<Vec<Vec<(i8, i64)>>>> {
    case.check_lambda(lambda)?;
    let k = case.k;
    Ok((1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| {
                    entry_terms_doubled(case, lambda, variant, i, j)
                        .into_iter()
                        .map(|(s, d)| (s, l_index(d)))
                        .collect()
                })
                .collect()
        })
        .collect())
}

/// Evaluate the case's closed-form determinant over the character ring.
pub fn det_formula(
    ring: &CharRing,
    case: CaseId,
    lambda: &Weight,
    variant: Variant,
) -> Result<CharSeries> {
    case.check_ring(ring)?;
    case.check_lambda(lambda)?;
    let k = case.k;
    let mut matrix: Vec<Vec<CharSeries>> = Vec::with_capacity(k);
    for i in 1..=k {
        let mut row = Vec::with_capacity(k);
        for j in 1..=k {
            let mut entry = ring.zero();
            for (sign, d) in entry_terms_doubled(case, lambda, variant, i, j) {
                let l = ring.l_series(l_index(d));
                entry = if sign > 0 { entry.add(&l) } else { entry.sub(&l) };
            }
            row.push(entry);
        }
        matrix.push(row);
    }
    let mut det = ring.det(&matrix)?;
    if needs_halving(case, variant) {
        det = det.halve_exact()?;
    }
    if case.has_sym_factor() {
        det = det.mul(&ring.sym_e_series());
    }
    Ok(det)
}

/// The generic-case determinant with h replaced by e in every entry
/// (the omega-involution companion of the two-alphabet identity).
pub fn generic_det_elementary(ring: &CharRing, k: usize, lambda: &Weight) -> Result<CharSeries> {
    let case = CaseId::new(Case::Generic, k);
    case.check_ring(ring)?;
    case.check_lambda(lambda)?;
    let matrix: Vec<Vec<CharSeries>> = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| {
                    let idx = l_index(lambda.doubled[i - 1]) - i as i64 + j as i64;
                    ring.l_series_basis(idx, Basis::Elementary)
                })
                .collect()
        })
        .collect();
    ring.det(&matrix)
}

/// The skew Jacobi-Trudi style determinant det([L_{λ_i - μ_j - i + j}]) in
/// the generic case.
pub fn skew_jt_det(
    ring: &CharRing,
    k: usize,
    lambda: &Partition,
    mu: &Partition,
) -> Result<CharSeries> {
    let case = CaseId::new(Case::Generic, k);
    case.check_ring(ring)?;
    assert!(lambda.len() <= k && mu.len() <= k);
    let matrix: Vec<Vec<CharSeries>> = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| {
                    let idx =
                        lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                    ring.l_series(idx)
                })
                .collect()
        })
        .collect();
    ring.det(&matrix)
}

/// The ±1-isotypic refinement of the odd symmetric case: the signed double
/// sum over {±1}^k × S_k with the parity series M_0/M_1 as extra factor.
/// `parity_sign` 0 gives the invariant part, 1 the skew part.
pub fn parity_split(
    ring: &CharRing,
    k: usize,
    lambda: &Weight,
    parity_sign: u8,
) -> Result<CharSeries> {
    let case = CaseId::new(Case::SymOdd, k);
    case.check_ring(ring)?;
    case.check_lambda(lambda)?;
    assert!(parity_sign < 2);
    let lambda_size: i64 = lambda.doubled.iter().sum::<i64>() / 2;
    let mut acc = ring.zero();
    for bits in 0..(1u32 << k) {
        let alpha: Vec<i64> = (0..k).map(|i| if bits & (1 << i) != 0 { -1 } else { 1 }).collect();
        let neg = bits.count_ones() as i64;
        let m_parity = ((lambda_size + neg + parity_sign as i64) % 2) as u8;
        let m = ring.m_series(m_parity);
        for (sign, w) in permutations_signed(k) {
            let mut prod = m.clone();
            for i in 1..=k {
                // doubled index: 2λ_i + (2k - 2i + 1) - α_i (2k + 1 - 2w(i))
                let d = lambda.doubled[i - 1] + (2 * k as i64 - 2 * i as i64 + 1)
                    - alpha[i - 1] * (2 * k as i64 + 1 - 2 * w[i - 1] as i64);
                prod = prod.mul(&ring.l_series(l_index(d)));
                if prod.is_zero() {
                    break;
                }
            }
            let term_sign = if neg % 2 == 0 { sign } else { -sign };
            acc = if term_sign > 0 { acc.add(&prod) } else { acc.sub(&prod) };
        }
    }
    Ok(acc)
}

fn weight_label(case: CaseId, chi: &Weight) -> String {
    if case.is_spinor() {
        return format!("V_{}", chi);
    }
    let factors: Vec<String> =
        chi.doubled.iter().map(|d| format!("L_{}", d / 2)).collect();
    if case.has_sym_factor() {
        format!("Sym(E)⊗{}", factors.join("⊗"))
    } else {
        factors.join("⊗")
    }
}

/// One line per homological degree, highest degree first, matching the
/// layout "F1: L_1⊗L_-1 → F0: L_0⊗L_0".
pub fn format_complex(case: CaseId, lambda: &Weight) -> Result<String> {
    let terms = complex_terms(case, lambda)?;
    let mut pieces: Vec<String> = Vec::new();
    for t in terms.iter().rev() {
        let labels: Vec<String> = t.weights.iter().map(|w| weight_label(case, w)).collect();
        pieces.push(format!("F{}: {}", t.degree, labels.join(", ")));
    }
    Ok(pieces.join(" → "))
}

/// The parity-refined complex for the odd symmetric case: each term carries
/// its M_0/M_1 factor instead of Sym(E).
pub fn format_parity_complex(k: usize, lambda: &Weight, parity_sign: u8) -> Result<String> {
    let case = CaseId::new(Case::SymOdd, k);
    case.check_lambda(lambda)?;
    assert!(parity_sign < 2);
    let t = case.root_type();
    let lambda_size: i64 = lambda.doubled.iter().sum::<i64>() / 2;
    let elements = enumerate_weyl(t)?;
    let top = elements.iter().map(|w| w.length).max().unwrap_or(0);
    let mut by_degree: Vec<Vec<(Weight, u8)>> = vec![Vec::new(); top as usize + 1];
    for w in &elements {
        let chi = zelevinsky_weight(t, lambda, w);
        let m_parity =
            ((lambda_size + w.neg_count() as i64 + parity_sign as i64).rem_euclid(2)) as u8;
        by_degree[w.length as usize].push((chi, m_parity));
    }
    let mut pieces = Vec::new();
    for (deg, entries) in by_degree.iter().enumerate().rev() {
        let mut entries = entries.clone();
        entries.sort_by(|a, b| b.cmp(a));
        let labels: Vec<String> = entries
            .iter()
            .map(|(chi, p)| {
                let ls: Vec<String> = chi.doubled.iter().map(|d| format!("L_{}", d / 2)).collect();
                format!("M_{}⊗{}", p, ls.join("⊗"))
            })
            .collect();
        pieces.push(format!("F{}: {}", deg, labels.join(", ")));
    }
    Ok(pieces.join(" → "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w_int(v: &[i64]) -> Weight {
        Weight::from_integers(v)
    }

    fn w_half(doubled: &[i64]) -> Weight {
        Weight::from_doubled(doubled.to_vec())
    }

    #[test]
    fn generic_k2_complex() {
        let case = CaseId::new(Case::Generic, 2);
        let terms = complex_terms(case, &Weight::zero(2)).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].weights, vec![Weight::zero(2)]);
        assert_eq!(terms[1].weights, vec![w_int(&[1, -1])]);
        assert_eq!(
            format_complex(case, &Weight::zero(2)).unwrap(),
            "F1: L_1⊗L_-1 → F0: L_0⊗L_0"
        );
    }

    #[test]
    fn skew_k1_complex() {
        let case = CaseId::new(Case::Skew, 1);
        let terms = complex_terms(case, &Weight::zero(1)).unwrap();
        assert_eq!(terms[0].weights, vec![Weight::zero(1)]);
        // raw weight is (2); the displayed L_-2 is the same series
        assert_eq!(terms[1].weights, vec![w_int(&[2])]);
    }

    #[test]
    fn skew_k2_complex_matches_known_listing() {
        // five homological degrees; weights up to per-entry sign
        let case = CaseId::new(Case::Skew, 2);
        let terms = complex_terms(case, &Weight::zero(2)).unwrap();
        let norm = |ws: &[Weight]| -> Vec<Vec<i64>> {
            let mut v: Vec<Vec<i64>> =
                ws.iter().map(|w| w.doubled.iter().map(|d| (d / 2).abs()).collect()).collect();
            v.sort();
            v
        };
        assert_eq!(terms.len(), 5);
        assert_eq!(norm(&terms[0].weights), vec![vec![0, 0]]);
        assert_eq!(norm(&terms[1].weights), vec![vec![0, 2], vec![1, 1]]);
        assert_eq!(norm(&terms[2].weights), vec![vec![1, 3], vec![3, 1]]);
        assert_eq!(norm(&terms[3].weights), vec![vec![3, 3], vec![4, 0]]);
        assert_eq!(norm(&terms[4].weights), vec![vec![4, 2]]);
    }

    #[test]
    fn weight_space_examples() {
        // generic k=1: V_(n) = L_n
        let ring = CharRing::double(3, 3, 3, 3);
        let case = CaseId::new(Case::Generic, 1);
        for n in -2..=2 {
            assert_eq!(
                weight_space_char(&ring, case, &w_int(&[n])).unwrap(),
                ring.l_series(n)
            );
        }
        // sym-odd k=1: V_(0) = Sym(E)·L_0
        let ring = CharRing::single(4, 4);
        let case = CaseId::new(Case::SymOdd, 1);
        assert_eq!(
            weight_space_char(&ring, case, &w_int(&[0])).unwrap(),
            ring.sym_e_series().mul(&ring.l_series(0))
        );
        // spinor-odd k=1: V_(1/2) = Sym(E)·(L_0 + L_1)
        let case = CaseId::new(Case::SpinorOdd, 1);
        assert_eq!(
            weight_space_char(&ring, case, &w_half(&[1])).unwrap(),
            ring.sym_e_series().mul(&ring.l_series(0).add(&ring.l_series(1)))
        );
        // parity mismatch is an error
        assert!(weight_space_char(&ring, case, &w_int(&[1])).is_err());
    }

    #[test]
    fn euler_raw_examples() {
        // generic k=1: one-element Weyl group
        let ring = CharRing::double(3, 3, 3, 3);
        let case = CaseId::new(Case::Generic, 1);
        assert_eq!(euler_raw(&ring, case, &w_int(&[2])).unwrap(), ring.l_series(2));
        // skew k=1: L_0 - L_2
        let ring = CharRing::single(4, 4);
        let case = CaseId::new(Case::Skew, 1);
        assert_eq!(
            euler_raw(&ring, case, &Weight::zero(1)).unwrap(),
            ring.l_series(0).sub(&ring.l_series(2))
        );
        // generic k=2, λ=0, caps (1,1): coefficient of x_i y_j is 1
        let ring = CharRing::double(2, 2, 1, 1);
        let case = CaseId::new(Case::Generic, 2);
        let e = euler_raw(&ring, case, &Weight::zero(2)).unwrap();
        let mut m = crate::poly::Monomial::unit(4);
        m.0[0] = 1;
        m.0[2] = 1;
        assert_eq!(e.poly().coefficient(&m), BigInt::from(1));
    }

    #[test]
    fn det_formula_hand_anchors() {
        // sym-odd k=1 λ=0: Sym(E)(L_0 - L_1), degree-1 part vanishes
        let ring = CharRing::single(4, 4);
        let case = CaseId::new(Case::SymOdd, 1);
        let det = det_formula(&ring, case, &Weight::zero(1), Variant::ClosedForm).unwrap();
        let want = ring.sym_e_series().mul(&ring.l_series(0).sub(&ring.l_series(1)));
        assert_eq!(det, want);
        assert!(det.x_degree_part(1).is_zero());
        // the plus-sign variant does NOT vanish in degree 1
        let plus = det_formula(&ring, case, &Weight::zero(1), Variant::PlusSign).unwrap();
        assert!(!plus.x_degree_part(1).is_zero());

        // spinor-odd k=1 λ=(1/2): Sym(E)(L_0 - L_2); degree-3 part = h3 + h1^3 - h1h2
        let case = CaseId::new(Case::SpinorOdd, 1);
        let det = det_formula(&ring, case, &w_half(&[1]), Variant::ClosedForm).unwrap();
        assert_eq!(det, ring.sym_e_series().mul(&ring.l_series(0).sub(&ring.l_series(2))));
        let ctx = ring.context();
        let free = crate::poly::DegreeCaps::none(ctx);
        let h = |d| crate::symfunc::h_polynomial(d, ctx, 0);
        let deg3 = h(3).add(&h(1).mul(&h(1), &free).mul(&h(1), &free)).sub(&h(1).mul(&h(2), &free));
        assert_eq!(det.x_degree_part(3).poly(), &deg3);

        // spinor-even k=1 λ=(1/2): L_0 + L_1; degree-2 part = h1^2
        let case = CaseId::new(Case::SpinorEven, 1);
        let det = det_formula(&ring, case, &w_half(&[1]), Variant::ClosedForm).unwrap();
        assert_eq!(det, ring.l_series(0).add(&ring.l_series(1)));
        assert_eq!(det.x_degree_part(2).poly(), &h(1).mul(&h(1), &free));
    }

    #[test]
    fn sym_even_halving_succeeds() {
        let ring = CharRing::single(4, 4);
        let case = CaseId::new(Case::SymEven, 1);
        // k=1: (1/2)([L_0]+[L_0]) = L_0
        let det = det_formula(&ring, case, &Weight::zero(1), Variant::ClosedForm).unwrap();
        assert_eq!(det, ring.l_series(0));
    }

    #[test]
    fn raw_equals_closed_form_small() {
        let ring = CharRing::single(3, 3);
        for case in [Case::Skew, Case::SymEven, Case::SymOdd, Case::SpinorOdd, Case::SpinorEven] {
            for k in 1..=2 {
                let id = CaseId::new(case, k);
                let lam = id.base_lambda();
                let raw = euler_raw(&ring, id, &lam).unwrap();
                let det = det_formula(&ring, id, &lam, Variant::ClosedForm).unwrap();
                assert_eq!(raw, det, "case {:?} k {}", case, k);
            }
        }
        let ring = CharRing::double(3, 3, 3, 3);
        for k in 1..=2 {
            let id = CaseId::new(Case::Generic, k);
            for lam in [Weight::zero(k), w_int(&vec![1; k]), ] {
                let raw = euler_raw(&ring, id, &lam).unwrap();
                let det = det_formula(&ring, id, &lam, Variant::ClosedForm).unwrap();
                assert_eq!(raw, det, "generic k {}", k);
            }
        }
    }

    #[test]
    fn parity_split_examples() {
        let ring = CharRing::single(4, 4);
        // k=1, λ=0, +: M_0 L_0 - M_1 L_1
        let plus = parity_split(&ring, 1, &Weight::zero(1), 0).unwrap();
        let want = ring
            .m_series(0)
            .mul(&ring.l_series(0))
            .sub(&ring.m_series(1).mul(&ring.l_series(1)));
        assert_eq!(plus, want);
        // (+) + (−) = euler_raw
        for k in 1..=2 {
            let lam = Weight::zero(k);
            let total = parity_split(&ring, k, &lam, 0)
                .unwrap()
                .add(&parity_split(&ring, k, &lam, 1).unwrap());
            let raw = euler_raw(&ring, CaseId::new(Case::SymOdd, k), &lam).unwrap();
            assert_eq!(total, raw, "k {}", k);
        }
    }

    #[test]
    fn parity_complex_printing() {
        let s = format_parity_complex(1, &Weight::zero(1), 0).unwrap();
        // raw weight for the length-1 element is 1 (displayed L_-1 in the
        // L_n = L_-n convention)
        assert_eq!(s, "F1: M_1⊗L_1 → F0: M_0⊗L_0");
    }

    #[test]
    fn admissibility() {
        let g = CaseId::new(Case::Generic, 2);
        assert!(g.admissible(&w_int(&[1, -1])));
        assert!(!g.admissible(&w_int(&[-1, 1])));
        let s = CaseId::new(Case::Skew, 2);
        assert!(!s.admissible(&w_int(&[1, -1])));
        let so = CaseId::new(Case::SpinorOdd, 2);
        assert!(so.admissible(&w_half(&[3, 1])));
        assert!(!so.admissible(&w_half(&[3, -1])));
        let se = CaseId::new(Case::SpinorEven, 2);
        assert!(se.admissible(&w_half(&[3, -1])));
        assert!(!se.admissible(&w_half(&[1, -3])));
        assert!(!se.admissible(&w_int(&[1, 0])));
    }

    #[test]
    fn spinor_four_term_variant_agrees() {
        let ring = CharRing::single(3, 3);
        for (case, lam) in [
            (CaseId::new(Case::SpinorOdd, 2), w_half(&[3, 1])),
            (CaseId::new(Case::SpinorEven, 2), w_half(&[1, 1])),
        ] {
            let a = det_formula(&ring, case, &lam, Variant::ClosedForm).unwrap();
            let b = det_formula(&ring, case, &lam, Variant::FourTerm).unwrap();
            assert_eq!(a, b, "{:?}", case);
        }
    }
}
