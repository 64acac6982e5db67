//! Sign rules on coefficient sequences.
//!
//! Descartes' bound, the even/odd inverse sign rule for polynomials with a
//! single root off the closed left half-plane, the `a_k <= 0 => a_{k+2} < 0`
//! rule, Newton-like inequalities `b_k b_l >= b_{k-1} b_{l+1}` with their
//! equality cases, and the degenerate family `(x + mu) h(x^2)`.
//!
//! Indices follow the coefficient storage: `a_i` is `f.coeff(i)`, the
//! coefficient of `x^(n-i)`.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::halfplane::half_plane_counts;
use crate::poly::{even_odd_split, GaussianRational, Rational, RationalPolynomial};
use crate::sturm::{count_real_roots_with_multiplicity, sign_variations, Bound};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescartesBound {
    pub sign_changes: usize,
    pub parity_note: String,
}

/// Upper bound on the number of positive roots; the true count has the same parity.
pub fn descartes_bound(f: &RationalPolynomial) -> Result<DescartesBound> {
    f.require_nonzero()?;
    let k = sign_variations(f.coeffs());
    let parity_note = match k {
        0 => "no positive roots".to_string(),
        1 => "exactly one positive root".to_string(),
        k => format!("{k} positive roots, or fewer by an even number"),
    };
    Ok(DescartesBound {
        sign_changes: k,
        parity_note,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Storage index of the `j`-th coefficient of this parity (`j >= 1`).
    pub fn coefficient_index(self, j: usize) -> usize {
        match self {
            Parity::Even => 2 * j,
            Parity::Odd => 2 * j - 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternVerdict {
    AllPositive,
    /// positive before `s`, `<= 0` at `s`, negative after (`s` counts from 1)
    OneSwitch { s: usize, zero_at_switch: bool },
    AllNegative,
    AllZero,
    NoPattern,
}

/// Shape of the subsequence `(a_2, a_4, ...)` or `(a_1, a_3, ...)`, truncated
/// after its last nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySignPattern {
    pub parity: Parity,
    /// largest `j` with a nonzero coefficient of this parity
    pub t: Option<usize>,
    pub verdict: PatternVerdict,
}

pub fn parity_sign_pattern(f: &RationalPolynomial, parity: Parity) -> Result<ParitySignPattern> {
    f.require_monic()?;
    if f.is_constant() {
        return Err(Error::DegreeZero);
    }
    let n = f.degree();
    let values: Vec<Rational> = (1..)
        .map(|j| parity.coefficient_index(j))
        .take_while(|&i| i <= n)
        .map(|i| f.coeff(i))
        .collect();
    let Some(last) = values.iter().rposition(|v| !v.is_zero()) else {
        return Ok(ParitySignPattern {
            parity,
            t: None,
            verdict: PatternVerdict::AllZero,
        });
    };
    let values = &values[..=last];
    let verdict = if values.iter().all(|v| v.is_positive()) {
        PatternVerdict::AllPositive
    } else if values.iter().all(|v| v.is_negative()) {
        PatternVerdict::AllNegative
    } else {
        let s = values.iter().position(|v| !v.is_positive()).unwrap();
        if values[s + 1..].iter().all(|v| v.is_negative()) {
            PatternVerdict::OneSwitch {
                s: s + 1,
                zero_at_switch: values[s].is_zero(),
            }
        } else {
            PatternVerdict::NoPattern
        }
    };
    Ok(ParitySignPattern {
        parity,
        t: Some(last + 1),
        verdict,
    })
}

/// Both parity subsequences have at most one sign switch of the permitted shape.
///
/// This holds whenever every root but one real root has nonpositive real part;
/// the converse is not claimed.
pub fn check_parity_sign_rule(f: &RationalPolynomial) -> Result<bool> {
    for parity in [Parity::Even, Parity::Odd] {
        if parity_sign_pattern(f, parity)?.verdict == PatternVerdict::NoPattern {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First `k` in `1..=n-2` with `a_k <= 0` but `a_{k+2} >= 0`.
pub fn alternate_sign_violation(f: &RationalPolynomial) -> Result<Option<usize>> {
    f.require_monic()?;
    let n = f.degree();
    Ok((1..n.saturating_sub(1))
        .find(|&k| !f.coeff(k).is_positive() && !f.coeff(k + 2).is_negative()))
}

/// `a_k <= 0` implies `a_{k+2} < 0` for every `k` in `1..=n-2`.
pub fn check_alternate_sign_rule(f: &RationalPolynomial) -> Result<bool> {
    Ok(alternate_sign_violation(f)?.is_none())
}

/// Why `b_k b_l = b_{k-1} b_{l+1}` holds for a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EqualityClass {
    /// zero is a root of multiplicity at least `n - l + 1`
    ZeroRootHighMult,
    /// every root is purely imaginary
    AllImaginary,
    /// `g = x^z (x + mu) h(x^2)` with `z` the zero-root multiplicity; only for `k` odd,
    /// `l` even and `l + 1 <= n - z`
    DegenerateForm,
    StrictInequality,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPair {
    pub k: usize,
    pub l: usize,
    /// `b_k b_l`
    pub lhs: Rational,
    /// `b_{k-1} b_{l+1}`
    pub rhs: Rational,
    /// Every applicable class; `[StrictInequality]` when `lhs > rhs`. Empty
    /// for an equality (or violation) none of the known causes explains.
    pub classes: Vec<EqualityClass>,
}

impl NewtonPair {
    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonEqualityClass {
    pub holds: bool,
    /// all checked pairs `(k, l)` of different parity with `1 <= k < l <= n-1`
    pub pairs: Vec<NewtonPair>,
}

impl NewtonEqualityClass {
    pub fn equality_pairs(&self) -> impl Iterator<Item = &NewtonPair> {
        self.pairs.iter().filter(|p| p.is_equality())
    }

    pub fn violations(&self) -> impl Iterator<Item = &NewtonPair> {
        self.pairs.iter().filter(|p| p.lhs < p.rhs)
    }
}

/// Checks `b_k b_l >= b_{k-1} b_{l+1}` on all pairs of different parity and
/// classifies every equality.
pub fn newton_like(g: &RationalPolynomial) -> Result<NewtonEqualityClass> {
    g.require_monic()?;
    let n = g.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { degree: n, min: 3 });
    }
    let zero_mult = g.zero_root_multiplicity();
    let mut all_imaginary = None;
    let mut degenerate = None;
    let mut pairs = Vec::new();
    for k in 1..n - 1 {
        for l in (k + 1..n).step_by(2) {
            let lhs = g.coeff(k) * g.coeff(l);
            let rhs = g.coeff(k - 1) * g.coeff(l + 1);
            let classes = if lhs > rhs {
                vec![EqualityClass::StrictInequality]
            } else if lhs < rhs {
                Vec::new()
            } else {
                let mut classes = Vec::new();
                if zero_mult >= n - l + 1 {
                    classes.push(EqualityClass::ZeroRootHighMult);
                }
                let imag = *all_imaginary
                    .get_or_insert_with(|| half_plane_counts(g).map(|c| c.n_zero == n).unwrap_or(false));
                if imag {
                    classes.push(EqualityClass::AllImaginary);
                }
                if k % 2 == 1 && l % 2 == 0 && l + 1 <= n - zero_mult {
                    let degen = *degenerate.get_or_insert_with(|| {
                        let cofactor = RationalPolynomial::new(g.coeffs()[..=n - zero_mult].to_vec());
                        degenerate_form(&cofactor).is_some()
                    });
                    if degen {
                        classes.push(EqualityClass::DegenerateForm);
                    }
                }
                classes
            };
            pairs.push(NewtonPair {
                k,
                l,
                lhs,
                rhs,
                classes,
            });
        }
    }
    Ok(NewtonEqualityClass {
        holds: pairs.iter().all(|p| p.lhs >= p.rhs),
        pairs,
    })
}

/// Detects `g(x) = (x + mu) h(x^2)` with `mu > 0` and every root of `h` real and negative.
pub fn degenerate_form(g: &RationalPolynomial) -> Option<(Rational, RationalPolynomial)> {
    if !g.is_monic() || g.degree() % 2 == 0 {
        return None;
    }
    let (even, odd) = even_odd_split(g);
    let m = odd.degree();
    let mu = even.coeff_of_power(m);
    if !mu.is_positive() || even != odd.scale(&mu) {
        return None;
    }
    if !odd.is_constant() {
        if odd.eval(&Rational::zero()).is_zero() {
            return None;
        }
        let negative = count_real_roots_with_multiplicity(&odd, &Bound::NegInf, &Bound::Finite(Rational::zero())).ok()?;
        if negative != m {
            return None;
        }
    }
    Some((mu, odd))
}

/// Every root `-alpha + i beta` has `alpha > 0` and `beta^2 <= 3 alpha^2`.
pub fn obreschkoff_wedge(roots: &[GaussianRational], r: &Rational) -> Result<bool> {
    if !r.is_positive() {
        return Err(Error::RNonPositive);
    }
    let three = Rational::from_integer(3.into());
    Ok(roots.iter().all(|z| {
        let alpha = -&z.re;
        alpha.is_positive() && &z.im * &z.im <= &three * &alpha * &alpha
    }))
}

/// `(x - r) prod (x - z)` for a self-conjugate list of roots.
pub fn with_positive_root(roots: &[GaussianRational], r: &Rational) -> Result<RationalPolynomial> {
    let mut counts: HashMap<&GaussianRational, isize> = HashMap::new();
    for z in roots {
        *counts.entry(z).or_default() += 1;
    }
    if roots
        .iter()
        .any(|z| counts.get(&z.conj()).copied().unwrap_or(0) != counts[z])
    {
        return Err(Error::NotSelfConjugate);
    }
    let coeffs = crate::poly::gaussian_poly_from_roots(roots);
    let g = RationalPolynomial::new(coeffs.into_iter().map(|c| c.re).collect());
    Ok(&RationalPolynomial::linear_factor(r) * &g)
}

/// `(x - r) ((x + 1)^2 + beta^2)^m`, with `beta^2` passed directly.
pub fn shifted_pair_family(m: u32, beta_sq: &Rational, r: &Rational) -> RationalPolynomial {
    let quad = RationalPolynomial::new(vec![
        Rational::one(),
        Rational::from_integer(2.into()),
        Rational::one() + beta_sq,
    ]);
    &RationalPolynomial::linear_factor(r) * &quad.pow(m)
}

/// `(x - r)(x + mu) prod (x^2 + beta_j^2)`, the family whose odd coefficients
/// are `(mu - r) e_k(beta^2)`.
pub fn degenerate_family(r: &Rational, mu: &Rational, beta_sqs: &[Rational]) -> RationalPolynomial {
    let base = &RationalPolynomial::linear_factor(r) * &RationalPolynomial::linear_factor(&-mu);
    beta_sqs.iter().fold(base, |acc, b| {
        &acc * &RationalPolynomial::new(vec![Rational::one(), Rational::zero(), b.clone()])
    })
}
