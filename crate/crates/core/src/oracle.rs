//! Numeric root finder used to cross-check the exact algorithms.
//!
//! Roots of each square-free factor are found by Aberth iteration, first in
//! `f64` and then in fixed-point big-integer arithmetic at the requested
//! precision. The final approximations are dyadic rationals, and their error
//! radii come from exact Weierstrass corrections: for a square-free `g` of
//! degree `m`, every component of the union of the disks
//! `|z - z_i| <= m |g(z_i) / (lc prod_{j != i} (z_i - z_j))|` made of `k`
//! disks holds exactly `k` roots. Nothing here feeds back into the library.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::halfplane::HalfPlaneCount;
use crate::poly::{gcd, square_free_decomposition, GaussianRational, Rational, RationalPolynomial};
use crate::sturm::{count_real_roots_with_multiplicity, Bound};

const PRECISION_LADDER: [u32; 6] = [64, 128, 256, 512, 1024, 2048];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericRoot {
    pub re: Rational,
    pub im: Rational,
    /// Every root represented by this entry lies within `radius` of `re + i im`.
    pub radius: Rational,
    pub multiplicity: usize,
}

impl NumericRoot {
    pub fn re_f64(&self) -> f64 {
        self.re.to_f64().unwrap_or(f64::NAN)
    }

    pub fn im_f64(&self) -> f64 {
        self.im.to_f64().unwrap_or(f64::NAN)
    }

    pub fn center(&self) -> GaussianRational {
        GaussianRational::new(self.re.clone(), self.im.clone())
    }

    pub fn contains(&self, z: &GaussianRational) -> bool {
        (&self.center() - z).norm_sqr() <= &self.radius * &self.radius
    }

    /// Sign of the real part when the disk avoids the imaginary axis.
    pub fn real_part_sign(&self) -> Option<Ordering> {
        if self.re.abs() > self.radius {
            Some(self.re.cmp(&Rational::zero()))
        } else {
            None
        }
    }
}

/// All complex roots of `f` with multiplicities and certified error radii.
pub fn numeric_roots(f: &RationalPolynomial, precision_bits: u32) -> Result<Vec<NumericRoot>> {
    f.require_nonzero()?;
    if f.is_constant() {
        return Err(Error::DegreeZero);
    }
    let bits = precision_bits.max(16);
    let mut roots = Vec::new();
    for (factor, mult) in square_free_decomposition(f)? {
        for (z, radius) in factor_roots(&factor, bits)? {
            roots.push(NumericRoot {
                re: z.re,
                im: z.im,
                radius,
                multiplicity: mult,
            });
        }
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let gap = (&roots[i].center() - &roots[j].center()).norm_sqr();
            let reach = &roots[i].radius + &roots[j].radius;
            if gap <= &reach * &reach {
                return Err(Error::PrecisionExhausted(bits));
            }
        }
    }
    roots.sort_by(|a, b| a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im)));
    Ok(roots)
}

/// Half-plane counts from numeric roots, with the imaginary-axis roots counted exactly.
pub fn numeric_half_plane_counts(f: &RationalPolynomial) -> Result<HalfPlaneCount> {
    numeric_half_plane_counts_from(f, PRECISION_LADDER[0])
}

/// [`numeric_half_plane_counts`] starting the precision ladder at `min_bits`.
pub fn numeric_half_plane_counts_from(f: &RationalPolynomial, min_bits: u32) -> Result<HalfPlaneCount> {
    f.require_nonzero()?;
    if f.is_constant() {
        return Err(Error::DegreeZero);
    }
    let n_zero = axis_root_count(f)?;
    let start = min_bits.max(16);
    let mut last = start;
    for bits in std::iter::once(start).chain(PRECISION_LADDER.into_iter().filter(|&b| b > start)) {
        last = bits;
        let roots = match numeric_roots(f, bits) {
            Ok(r) => r,
            Err(Error::PrecisionExhausted(_)) => continue,
            Err(e) => return Err(e),
        };
        let (mut plus, mut minus, mut unsure) = (0, 0, 0);
        for r in &roots {
            match r.real_part_sign() {
                Some(Ordering::Greater) => plus += r.multiplicity,
                Some(_) => minus += r.multiplicity,
                None => unsure += r.multiplicity,
            }
        }
        // Disks meeting the axis hold every axis root, so equal totals mean
        // they hold nothing else.
        if unsure == n_zero {
            return Ok(HalfPlaneCount::new(plus, minus, n_zero));
        }
    }
    Err(Error::Undecidable(last))
}

/// Roots on the imaginary axis, with multiplicity.
///
/// `E = gcd(f(x), f(-x))` keeps each axis root at full multiplicity and is
/// even or odd, so `E = x^k e(x^2)` and axis roots `iy` with `y != 0`
/// correspond to negative roots `-y^2` of `e`.
pub fn axis_root_count(f: &RationalPolynomial) -> Result<usize> {
    let e = gcd(f, &f.reflect())?;
    let k = e.zero_root_multiplicity();
    let ascending = e.ascending();
    let even: Vec<Rational> = ascending[k..].iter().step_by(2).cloned().collect();
    if ascending[k..].iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return Err(Error::InternalAssertion(format!("{e} is neither even nor odd")));
    }
    let e = RationalPolynomial::from_ascending(even);
    let negative = if e.is_constant() {
        0
    } else {
        count_real_roots_with_multiplicity(&e, &Bound::NegInf, &Bound::Finite(Rational::zero()))?
    };
    Ok(k + 2 * negative)
}

fn factor_roots(g: &RationalPolynomial, bits: u32) -> Result<Vec<(GaussianRational, Rational)>> {
    let g = g.monic();
    let m = g.degree();
    if m == 1 {
        let root = GaussianRational::real(-g.coeff(1));
        return Ok(vec![(root, Rational::zero())]);
    }
    let start = aberth_f64(&g);
    let approx = aberth_fixed(&g, &start, bits);
    certify(&g, approx, bits)
}

fn aberth_f64(g: &RationalPolynomial) -> Vec<(f64, f64)> {
    let m = g.degree();
    let coeffs: Vec<f64> = g.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let bound = 1.0 + coeffs.iter().skip(1).fold(0.0f64, |acc, c| acc.max(c.abs()));
    let mut z: Vec<(f64, f64)> = (0..m)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64 + 0.25) / m as f64 + 0.4;
            (bound.min(1e6) * theta.cos(), bound.min(1e6) * theta.sin())
        })
        .collect();
    if !coeffs.iter().all(|c| c.is_finite()) {
        return z;
    }
    for _ in 0..500 {
        let mut worst = 0.0f64;
        for i in 0..m {
            let (p, dp) = horner_f64(&coeffs, z[i]);
            if p == (0.0, 0.0) {
                continue;
            }
            let w = cdiv(p, dp);
            let mut s = (0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let inv = cdiv((1.0, 0.0), (z[i].0 - zj.0, z[i].1 - zj.1));
                    s = (s.0 + inv.0, s.1 + inv.1);
                }
            }
            let ws = cmul(w, s);
            let step = cdiv(w, (1.0 - ws.0, -ws.1));
            if !step.0.is_finite() || !step.1.is_finite() {
                continue;
            }
            z[i] = (z[i].0 - step.0, z[i].1 - step.1);
            let size = step.0.hypot(step.1) / (1.0 + z[i].0.hypot(z[i].1));
            worst = worst.max(size);
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

fn horner_f64(coeffs: &[f64], z: (f64, f64)) -> ((f64, f64), (f64, f64)) {
    let mut p = (0.0, 0.0);
    let mut dp = (0.0, 0.0);
    for &c in coeffs {
        dp = cmul(dp, z);
        dp = (dp.0 + p.0, dp.1 + p.1);
        p = cmul(p, z);
        p = (p.0 + c, p.1);
    }
    (p, dp)
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let d = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
}

/// Complex number `(re + i im) / 2^bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Fixed {
    re: BigInt,
    im: BigInt,
}

impl Fixed {
    fn zero() -> Self {
        Fixed { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn from_rational(x: &Rational, bits: u32) -> BigInt {
        (x.numer() << bits as usize) / x.denom()
    }

    fn add(&self, o: &Fixed) -> Fixed {
        Fixed { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Fixed) -> Fixed {
        Fixed { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Fixed, bits: u32) -> Fixed {
        let s = bits as usize;
        Fixed {
            re: (&self.re * &o.re - &self.im * &o.im) >> s,
            im: (&self.re * &o.im + &self.im * &o.re) >> s,
        }
    }

    fn div(&self, o: &Fixed, bits: u32) -> Option<Fixed> {
        let d = &o.re * &o.re + &o.im * &o.im;
        if d.is_zero() {
            return None;
        }
        let s = bits as usize;
        Some(Fixed {
            re: ((&self.re * &o.re + &self.im * &o.im) << s) / &d,
            im: ((&self.im * &o.re - &self.re * &o.im) << s) / &d,
        })
    }

    fn magnitude_bound(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }

    fn to_gaussian(&self, bits: u32) -> GaussianRational {
        let scale = BigInt::one() << bits as usize;
        GaussianRational::new(
            Rational::new(self.re.clone(), scale.clone()),
            Rational::new(self.im.clone(), scale),
        )
    }
}

fn aberth_fixed(g: &RationalPolynomial, start: &[(f64, f64)], bits: u32) -> Vec<Fixed> {
    let coeffs: Vec<Fixed> = g
        .coeffs()
        .iter()
        .map(|c| Fixed { re: Fixed::from_rational(c, bits), im: BigInt::zero() })
        .collect();
    let one = Fixed { re: BigInt::one() << bits as usize, im: BigInt::zero() };
    let mut z: Vec<Fixed> = start
        .iter()
        .map(|&(re, im)| Fixed {
            re: float_to_fixed(re, bits),
            im: float_to_fixed(im, bits),
        })
        .collect();
    let tolerance = BigInt::from(16);
    for _ in 0..(200 + bits as usize) {
        let mut worst = BigInt::zero();
        for i in 0..z.len() {
            let (mut p, mut dp) = (Fixed::zero(), Fixed::zero());
            for c in &coeffs {
                dp = dp.mul(&z[i], bits).add(&p);
                p = p.mul(&z[i], bits).add(c);
            }
            let Some(w) = p.div(&dp, bits) else { continue };
            let mut s = Fixed::zero();
            for j in 0..z.len() {
                if j != i {
                    if let Some(inv) = one.div(&z[i].sub(&z[j]), bits) {
                        s = s.add(&inv);
                    }
                }
            }
            let Some(step) = w.div(&one.sub(&w.mul(&s, bits)), bits) else { continue };
            worst = worst.max(step.magnitude_bound());
            z[i] = z[i].sub(&step);
        }
        if worst <= tolerance {
            break;
        }
    }
    z
}

fn float_to_fixed(x: f64, bits: u32) -> BigInt {
    Rational::from_float(x)
        .map(|r| Fixed::from_rational(&r, bits))
        .unwrap_or_default()
}

fn certify(
    g: &RationalPolynomial,
    approx: Vec<Fixed>,
    bits: u32,
) -> Result<Vec<(GaussianRational, Rational)>> {
    let m = g.degree();
    let z: Vec<GaussianRational> = approx.iter().map(|a| a.to_gaussian(bits)).collect();
    let m_sq = Rational::from_integer(BigInt::from(m * m));
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let mut value = GaussianRational::zero();
        for c in g.coeffs() {
            value = &(&value * &z[i]) + &GaussianRational::real(c.clone());
        }
        let mut denom = GaussianRational::one();
        for j in 0..m {
            if j != i {
                denom = &denom * &(&z[i] - &z[j]);
            }
        }
        let d = denom.norm_sqr();
        if d.is_zero() {
            return Err(Error::PrecisionExhausted(bits));
        }
        let radius_sq = &m_sq * &value.norm_sqr() / d;
        out.push((z[i].clone(), sqrt_upper(&radius_sq, 2 * bits)));
    }
    Ok(out)
}

/// Dyadic `r >= sqrt(x)` with `r - sqrt(x) <= 2^-bits`.
fn sqrt_upper(x: &Rational, bits: u32) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let scaled = (x.numer() << (2 * bits as usize)) / x.denom();
    Rational::new(scaled.sqrt() + BigInt::one(), BigInt::one() << bits as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, rat};

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_ints(c)
    }

    fn z(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(rat(re), rat(im))
    }

    #[test]
    fn sqrt_two() {
        let roots = numeric_roots(&p(&[1, 0, -2]), 128).unwrap();
        assert_eq!(roots.len(), 2);
        let tiny = Rational::new(BigInt::one(), BigInt::from(10).pow(20));
        for r in &roots {
            assert!(r.radius < tiny);
            assert!((r.re_f64().abs() - std::f64::consts::SQRT_2).abs() < 1e-15);
            assert!(r.im_f64().abs() < 1e-15);
        }
    }

    #[test]
    fn quintic_with_axis_roots() {
        let roots = numeric_roots(&p(&[1, 0, -3, 0, -4, 0]), 96).unwrap();
        assert_eq!(roots.len(), 5);
        for expected in [z(-2, 0), z(0, 0), z(2, 0), z(0, 1), z(0, -1)] {
            assert_eq!(roots.iter().filter(|r| r.contains(&expected)).count(), 1, "{expected}");
        }
        assert_eq!(numeric_half_plane_counts(&p(&[1, 0, -3, 0, -4, 0])).unwrap(), HalfPlaneCount::new(1, 1, 3));
    }

    #[test]
    fn repeated_root() {
        let roots = numeric_roots(&p(&[1, -2, 1]), 64).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 2);
        assert!(roots[0].contains(&z(1, 0)));
    }

    #[test]
    fn half_plane_examples() {
        assert_eq!(numeric_half_plane_counts(&p(&[1, -1, 3, 0, -4, 1])).unwrap(), HalfPlaneCount::new(4, 1, 0));
        assert_eq!(numeric_half_plane_counts(&p(&[1, 0, 1])).unwrap(), HalfPlaneCount::new(0, 0, 2));
        assert_eq!(numeric_half_plane_counts(&p(&[1, 0, -1])).unwrap(), HalfPlaneCount::new(1, 1, 0));
        let f = &p(&[1, 0, 1]).pow(2) * &p(&[1, 0, 0]);
        assert_eq!(numeric_half_plane_counts(&f).unwrap(), HalfPlaneCount::new(0, 0, 6));
    }

    #[test]
    fn axis_count_ignores_symmetric_pairs() {
        // (x^2 - 1)(x^2 + 4)(x^2 + 2x + 5)(x^2 - 2x + 5)
        let f = &(&p(&[1, 0, -1]) * &p(&[1, 0, 4])) * &(&p(&[1, 2, 5]) * &p(&[1, -2, 5]));
        assert_eq!(axis_root_count(&f).unwrap(), 2);
        assert_eq!(numeric_half_plane_counts(&f).unwrap(), HalfPlaneCount::new(3, 3, 2));
    }

    #[test]
    fn rational_coefficients_and_clusters() {
        let f = RationalPolynomial::from_roots(&[frac(1, 1000), frac(1, 999), rat(-3)]);
        let roots = numeric_roots(&f, 128).unwrap();
        assert!(roots.iter().any(|r| r.contains(&GaussianRational::real(frac(1, 1000)))));
        assert_eq!(numeric_half_plane_counts(&f).unwrap(), HalfPlaneCount::new(2, 1, 0));
        assert_eq!(numeric_roots(&p(&[4]), 64), Err(Error::DegreeZero));
        assert_eq!(numeric_roots(&RationalPolynomial::zero(), 64), Err(Error::ZeroPolynomial));
    }
}
