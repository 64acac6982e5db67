//! Realizability of spectra with one nonnegative entry by nonnegative matrices.
//!
//! Spectra are lists of Gaussian rationals so that power sums and
//! characteristic polynomials stay exact. Realizations are companion matrices
//! (ones on the superdiagonal, `(-a_n, ..., -a_1)` in the last row), which are
//! nonnegative exactly when every non-leading coefficient is nonpositive.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{gaussian_poly_from_roots, GaussianRational, Rational, RationalPolynomial};

pub type Matrix = Vec<Vec<Rational>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumCandidate {
    entries: Vec<GaussianRational>,
}

impl SpectrumCandidate {
    /// The first entry plays the role of the Perron root `rho`.
    pub fn new(entries: Vec<GaussianRational>) -> Self {
        SpectrumCandidate { entries }
    }

    pub fn from_reals(values: &[Rational]) -> Self {
        Self::new(values.iter().cloned().map(GaussianRational::real).collect())
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_self_conjugate(&self) -> bool {
        let mut counts: HashMap<&GaussianRational, usize> = HashMap::new();
        for z in &self.entries {
            *counts.entry(z).or_default() += 1;
        }
        counts
            .iter()
            .all(|(z, c)| counts.get(&z.conj()).copied().unwrap_or(0) == *c)
    }

    /// `sum lambda^k` over the Gaussian rationals.
    pub fn power_sum(&self, k: u32) -> GaussianRational {
        self.entries
            .iter()
            .fold(GaussianRational::zero(), |acc, z| &acc + &z.powi(k))
    }

    /// `prod (x - lambda)`, which has real coefficients for a self-conjugate list.
    pub fn char_poly(&self) -> Result<RationalPolynomial> {
        let coeffs = gaussian_poly_from_roots(&self.entries);
        if coeffs.iter().any(|c| !c.is_real()) {
            return Err(Error::NotSelfConjugate);
        }
        Ok(RationalPolynomial::new(coeffs.into_iter().map(|c| c.re).collect()))
    }

    /// Every entry shifted by `-alpha`.
    pub fn shifted(&self, alpha: &Rational) -> SpectrumCandidate {
        let a = GaussianRational::real(alpha.clone());
        SpectrumCandidate::new(self.entries.iter().map(|z| z - &a).collect())
    }
}

impl fmt::Display for SpectrumCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|z| z.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailedCondition {
    /// `rho + lambda_2 + ... + lambda_n >= 0`
    SumNonneg,
    /// `s_1^2 <= n s_2`
    SumOfSquares,
    SelfConjugate,
    /// `rho >= 0` real and every other entry with nonpositive real part
    RealPartSigns,
}

impl FailedCondition {
    pub fn name(self) -> &'static str {
        match self {
            FailedCondition::SumNonneg => "SumNonneg",
            FailedCondition::SumOfSquares => "SumOfSquares",
            FailedCondition::SelfConjugate => "SelfConjugate",
            FailedCondition::RealPartSigns => "RealPartSigns",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationResult {
    pub realizable: bool,
    pub failed_condition: Option<FailedCondition>,
    /// `C + alpha I` with `C` a nonnegative companion matrix
    pub matrix: Option<Matrix>,
    pub alpha: Option<Rational>,
}

impl RealizationResult {
    fn rejected(condition: FailedCondition) -> Self {
        RealizationResult {
            realizable: false,
            failed_condition: Some(condition),
            matrix: None,
            alpha: None,
        }
    }
}

/// Companion matrix of a monic polynomial.
pub fn companion_matrix(f: &RationalPolynomial) -> Result<Matrix> {
    f.require_monic()?;
    let n = f.degree();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate().take(n.saturating_sub(1)) {
        row[i + 1] = Rational::one();
    }
    if n > 0 {
        for j in 0..n {
            m[n - 1][j] = -f.coeff(n - j);
        }
    }
    Ok(m)
}

/// `det(xI - A)` by the Faddeev-LeVerrier recursion.
pub fn characteristic_polynomial(a: &Matrix) -> RationalPolynomial {
    let n = a.len();
    let mut coeffs = vec![Rational::one()];
    // m_k = A m_{k-1} + c_{k-1} I, c_k = -tr(A m_k) / k
    let mut m: Matrix = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[k - 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace = (0..n).fold(Rational::zero(), |acc, i| acc + &am[i][i]);
        coeffs.push(-trace / Rational::from_integer((k as i64).into()));
    }
    RationalPolynomial::new(coeffs)
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn is_nonnegative(m: &Matrix) -> bool {
    m.iter().flatten().all(|x| !x.is_negative())
}

/// Realizability of `(rho, lambda_2, ..., lambda_n)` with every `lambda_i <= 0`.
pub fn real_spectrum_check(rho: &Rational, negatives: &[Rational]) -> Result<RealizationResult> {
    if rho.is_negative() {
        return Err(Error::HypothesisViolation("rho must be nonnegative".into()));
    }
    if negatives.iter().any(|l| l.is_positive()) {
        return Err(Error::HypothesisViolation("every lambda_i must be nonpositive".into()));
    }
    let sum = negatives.iter().fold(rho.clone(), |acc, l| acc + l);
    if sum.is_negative() {
        return Ok(RealizationResult::rejected(FailedCondition::SumNonneg));
    }
    let mut values = vec![rho.clone()];
    values.extend_from_slice(negatives);
    let f = RationalPolynomial::from_roots(&values);
    if f.coeffs().iter().skip(1).any(|a| a.is_positive()) {
        return Err(Error::InternalAssertion(format!("positive coefficient in {f}")));
    }
    Ok(RealizationResult {
        realizable: true,
        failed_condition: None,
        matrix: Some(companion_matrix(&f)?),
        alpha: Some(Rational::zero()),
    })
}

fn check_signs(sigma: &SpectrumCandidate) -> Result<()> {
    let Some((rho, rest)) = sigma.entries().split_first() else {
        return Err(Error::HypothesisViolation("empty spectrum".into()));
    };
    if !rho.is_real() || rho.re.is_negative() {
        return Err(Error::HypothesisViolation(format!(
            "first entry {rho} must be a nonnegative real"
        )));
    }
    if let Some(z) = rest.iter().find(|z| z.re.is_positive()) {
        return Err(Error::HypothesisViolation(format!(
            "entry {z} has positive real part"
        )));
    }
    Ok(())
}

/// `None` when all three conditions hold, otherwise the first that fails.
fn failed_condition(sigma: &SpectrumCandidate) -> Result<Option<FailedCondition>> {
    check_signs(sigma)?;
    if !sigma.is_self_conjugate() {
        return Err(Error::NotSelfConjugate);
    }
    let s1 = sigma.power_sum(1);
    let s2 = sigma.power_sum(2);
    if !s1.is_real() || !s2.is_real() {
        return Err(Error::InternalAssertion(
            "power sums of a self-conjugate list must be real".into(),
        ));
    }
    if s1.re.is_negative() {
        return Ok(Some(FailedCondition::SumNonneg));
    }
    let n = Rational::from_integer((sigma.len() as i64).into());
    if &s1.re * &s1.re > n * s2.re {
        return Ok(Some(FailedCondition::SumOfSquares));
    }
    Ok(None)
}

/// Checks self-conjugacy, `s_1 >= 0` and `s_1^2 <= n s_2`; realizes the list when all hold.
pub fn complex_spectrum_check(sigma: &SpectrumCandidate) -> Result<RealizationResult> {
    match failed_condition(sigma)? {
        Some(c) => Ok(RealizationResult::rejected(c)),
        None => realize_shifted(sigma),
    }
}

/// Builds `C + alpha I` with `alpha = s_1 / n` and `C` the companion matrix of
/// the shifted list, which has zero trace and nonpositive coefficients.
pub fn realize_shifted(sigma: &SpectrumCandidate) -> Result<RealizationResult> {
    if let Some(c) = failed_condition(sigma)? {
        return Err(Error::HypothesisViolation(format!(
            "condition {} does not hold",
            c.name()
        )));
    }
    let n = sigma.len();
    let alpha = sigma.power_sum(1).re / Rational::from_integer((n as i64).into());
    let shifted = sigma.shifted(&alpha).char_poly()?;
    debug_assert!(shifted.coeff(1).is_zero());
    if let Some(i) = (1..=n).find(|&i| shifted.coeff(i).is_positive()) {
        return Err(Error::InternalAssertion(format!(
            "coefficient a_{i} of {shifted} is positive"
        )));
    }
    let mut matrix = companion_matrix(&shifted)?;
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i] += &alpha;
    }
    let expected = sigma.char_poly()?;
    if characteristic_polynomial(&matrix) != expected || !is_nonnegative(&matrix) {
        return Err(Error::InternalAssertion(
            "realizing matrix does not reproduce the spectrum".into(),
        ));
    }
    Ok(RealizationResult {
        realizable: true,
        failed_condition: None,
        matrix: Some(matrix),
        alpha: Some(alpha),
    })
}

/// `a_1, a_2 <= 0` implies `a_i <= 0` for every `i >= 3`.
pub fn coefficient_tail_check(f: &RationalPolynomial) -> Result<bool> {
    f.require_monic()?;
    if f.coeff(1).is_positive() || f.coeff(2).is_positive() {
        return Ok(true);
    }
    Ok((3..=f.degree()).all(|i| !f.coeff(i).is_positive()))
}
