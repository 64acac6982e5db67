//! Exact univariate polynomials over the rationals.
//!
//! Coefficients are stored highest power first, so `coeffs()[i]` is the
//! coefficient of `x^(n-i)`. This matches the `a_0 x^n + a_1 x^(n-1) + ...`
//! indexing used throughout the sign-rule code, where `a_i` is simply
//! `coeff(i)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Sign of a value, or of a polynomial at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: &Rational) -> Sign {
        match value.cmp(&Rational::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Builds a polynomial from highest-first coefficients, dropping leading zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let skip = coeffs.iter().take_while(|c| c.is_zero()).count();
        let coeffs = if skip == 0 {
            coeffs
        } else {
            coeffs.into_iter().skip(skip).collect()
        };
        RationalPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Builds from lowest-first coefficients.
    pub fn from_ascending(mut coeffs: Vec<Rational>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[1, 0])
    }

    /// `x - root`.
    pub fn linear_factor(root: &Rational) -> Self {
        Self::new(vec![Rational::one(), -root.clone()])
    }

    /// Monic polynomial with the given roots (repeated entries give multiplicity).
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_factor(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `a_i`, the coefficient of `x^(n-i)`; zero past the end.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `x^power`.
    pub fn coeff_of_power(&self, power: usize) -> Rational {
        if self.is_zero() || power > self.degree() {
            return Rational::zero();
        }
        self.coeffs[self.degree() - power].clone()
    }

    /// Lowest-first copy of the coefficients.
    pub fn ascending(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports 0, check [`is_zero`](Self::is_zero) to tell it apart.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_one())
    }

    pub fn require_monic(&self) -> Result<()> {
        if self.is_monic() {
            Ok(())
        } else {
            Err(Error::NonMonic(self.leading()))
        }
    }

    pub fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(())
        }
    }

    /// Divides through by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let lc = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let (num, den) = self.eval_fraction(x);
        Rational::new(num, den)
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        Sign::of(&Rational::from_integer(self.eval_fraction(x).0))
    }

    /// Unreduced `(num, den)` with `den > 0`, from integer Horner steps on the
    /// homogenized form.
    fn eval_fraction(&self, x: &Rational) -> (BigInt, BigInt) {
        if self.coeffs.is_empty() {
            return (BigInt::zero(), BigInt::one());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let (p, q) = (x.numer(), x.denom());
        let mut q_pow = BigInt::one();
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * p + c.numer() * (&lcm / c.denom()) * &q_pow;
            q_pow *= q;
        }
        (acc, lcm * q_pow / q)
    }

    pub fn sign_at_pos_inf(&self) -> Sign {
        Sign::of(&self.leading())
    }

    pub fn sign_at_neg_inf(&self) -> Sign {
        let s = Sign::of(&self.leading());
        if self.degree() % 2 == 1 {
            s.flip()
        } else {
            s
        }
    }

    pub fn derivative(&self) -> Self {
        let n = self.degree();
        Self::new(
            self.coeffs
                .iter()
                .take(n)
                .enumerate()
                .map(|(i, c)| c * rat((n - i) as i64))
                .collect(),
        )
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        let n = self.degree();
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if (n - i) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `f(c x)`.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            out.push(a * &power);
            power *= c;
        }
        Self::from_ascending(out)
    }

    /// `f(sign * x^2)` for `sign = ±1`, i.e. `p(x^2)` or `p(-x^2)`.
    pub fn substitute_square(&self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(2 * self.coeffs.len());
        for (power, c) in self.ascending().into_iter().enumerate() {
            let c = if negate && power % 2 == 1 { -c } else { c };
            if power > 0 {
                out.push(Rational::zero());
            }
            out.push(c);
        }
        Self::from_ascending(out)
    }

    /// `x^k * f(x)`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat(Rational::zero()).take(k));
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Self::zero(), self.clone());
        }
        let lc = divisor.leading();
        let dn = divisor.degree();
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() - dn + 1;
        let mut quot = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let q = &rem[i] / &lc;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    let t = &q * d;
                    rem[i + j] -= t;
                }
            }
            quot.push(q);
        }
        let r = rem.split_off(qlen);
        (Self::new(quot), Self::new(r))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Multiplicity of zero as a root.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Clears denominators and removes the content, keeping the sign of the leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        primitive_part(ints)
    }
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in &mut v {
            *c /= &content;
        }
    }
    v
}

impl<'a> Add<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, other: &RationalPolynomial) -> RationalPolynomial {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let offset = long.coeffs.len() - short.coeffs.len();
        let mut out = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            out[offset + i] += c;
        }
        RationalPolynomial::new(out)
    }
}

impl<'a> Sub<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, other: &RationalPolynomial) -> RationalPolynomial {
        self + &(-other)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, other: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RationalPolynomial> for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, other: RationalPolynomial) -> RationalPolynomial {
                (&self).$method(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        -&self
    }
}

/// Writes a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match power {
                0 => String::new(),
                1 => "x".to_string(),
                k => format!("x^{k}"),
            };
            if power == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else if mag.is_integer() {
                write!(f, "{}{var}", fmt_rational(&mag))?;
            } else {
                write!(f, "{} {var}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn powi(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}i",
            fmt_rational(&self.re),
            sign,
            fmt_rational(&self.im.abs())
        )
    }
}

/// Expands `prod (x - z)` over the Gaussian rationals, highest power first.
pub fn gaussian_poly_from_roots(roots: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut coeffs = vec![GaussianRational::one()];
    for z in roots {
        let mut next = coeffs.clone();
        next.push(GaussianRational::zero());
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] - &(c * z);
        }
        coeffs = next;
    }
    coeffs
}

/// Splits `f(x) = p(x^2) + x q(x^2)` into `(p, q)`.
pub fn even_odd_split(f: &RationalPolynomial) -> (RationalPolynomial, RationalPolynomial) {
    let asc = f.ascending();
    let even = asc.iter().step_by(2).cloned().collect();
    let odd = asc.iter().skip(1).step_by(2).cloned().collect();
    (
        RationalPolynomial::from_ascending(even),
        RationalPolynomial::from_ascending(odd),
    )
}

/// Real and imaginary parts of `i^n f(-ix)` for monic `f`.
///
/// `P = x^n - a_2 x^(n-2) + a_4 x^(n-4) - ...` and
/// `Q = a_1 x^(n-1) - a_3 x^(n-3) + ...`.
pub fn hb_polynomials(f: &RationalPolynomial) -> Result<(RationalPolynomial, RationalPolynomial)> {
    f.require_monic()?;
    let len = f.coeffs().len();
    let mut p = vec![Rational::zero(); len];
    let mut q = vec![Rational::zero(); len];
    for (k, a) in f.coeffs().iter().enumerate() {
        match k % 4 {
            0 => p[k] = a.clone(),
            1 => q[k] = a.clone(),
            2 => p[k] = -a,
            _ => q[k] = -a,
        }
    }
    Ok((RationalPolynomial::new(p), RationalPolynomial::new(q)))
}

/// Monic greatest common divisor, computed with the subresultant remainder sequence.
pub fn gcd(a: &RationalPolynomial, b: &RationalPolynomial) -> Result<RationalPolynomial> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::BothZero),
        (false, true) => return Ok(a.monic()),
        (true, false) => return Ok(b.monic()),
        _ => {}
    }
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.primitive_integer(), b.primitive_integer())
    } else {
        (b.primitive_integer(), a.primitive_integer())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return Ok(RationalPolynomial::one());
        }
        let divisor = &g * num_traits::pow(h.clone(), delta as usize);
        a = b;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a[0].clone();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta as usize);
            let den = num_traits::pow(h.clone(), (delta - 1) as usize);
            num / den
        };
    }
    let b = primitive_part(b);
    Ok(RationalPolynomial::new(b.into_iter().map(Rational::from_integer).collect()).monic())
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` over the integers, highest first, leading zeros trimmed.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lc = &b[0];
    let mut r: Vec<BigInt> = a.to_vec();
    let steps = a.len() - b.len() + 1;
    for i in 0..steps {
        let lead = r[i].clone();
        for c in r.iter_mut().skip(i) {
            *c *= lc;
        }
        if !lead.is_zero() {
            for (j, d) in b.iter().enumerate() {
                r[i + j] -= &lead * d;
            }
        }
    }
    let tail = r.split_off(steps);
    let skip = tail.iter().take_while(|c| c.is_zero()).count();
    tail.into_iter().skip(skip).collect()
}

/// Yun's square-free decomposition: `f = lc * prod factor_i^mult_i`, factors monic and coprime.
pub fn square_free_decomposition(f: &RationalPolynomial) -> Result<Vec<(RationalPolynomial, usize)>> {
    f.require_nonzero()?;
    let f = f.monic();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut mult = 1;
    while !b.is_constant() {
        let a = if d.is_zero() { b.clone() } else { gcd(&b, &d)? };
        b = b.exact_div(&a).expect("factor divides b");
        let c = d.exact_div(&a).expect("factor divides d");
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, mult));
        }
        mult += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible-free factors: the monic square-free part.
pub fn square_free_part(f: &RationalPolynomial) -> Result<RationalPolynomial> {
    Ok(square_free_decomposition(f)?
        .iter()
        .fold(RationalPolynomial::one(), |acc, (g, _)| &acc * g))
}

/// `e_k(values)`, with `e_0 = 1`.
pub fn elementary_symmetric(values: &[Rational], k: usize) -> Result<Rational> {
    if k > values.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: values.len(),
        });
    }
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for v in values {
        for j in (1..=k).rev() {
            let t = &e[j - 1] * v;
            e[j] += t;
        }
    }
    Ok(e.swap_remove(k))
}
