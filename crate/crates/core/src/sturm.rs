//! Sturm chains: sign variations, Cauchy indices, real root counting and
//! isolation of real roots with rational certificates.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{
    fmt_rational, gcd, square_free_decomposition, Rational, RationalPolynomial, Sign,
};

/// An endpoint of a real interval, possibly infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    fn key(&self) -> (i8, Option<&Rational>) {
        match self {
            Bound::NegInf => (-1, None),
            Bound::Finite(r) => (0, Some(r)),
            Bound::PosInf => (1, None),
        }
    }

    fn less_than(&self, other: &Bound) -> bool {
        match (self.key(), other.key()) {
            ((0, Some(a)), (0, Some(b))) => a < b,
            ((a, _), (b, _)) => a < b,
        }
    }
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::Finite(r)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => write!(f, "-inf"),
            Bound::Finite(r) => write!(f, "{}", fmt_rational(r)),
            Bound::PosInf => write!(f, "+inf"),
        }
    }
}

fn sign_at_bound(p: &RationalPolynomial, at: &Bound) -> Sign {
    match at {
        Bound::NegInf => p.sign_at_neg_inf(),
        Bound::Finite(x) => p.sign_at(x),
        Bound::PosInf => p.sign_at_pos_inf(),
    }
}

fn count_sign_changes<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    let mut last = Sign::Zero;
    let mut changes = 0;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Sign changes between consecutive nonzero entries.
pub fn sign_variations(values: &[Rational]) -> usize {
    count_sign_changes(values.iter().map(Sign::of))
}

/// Negated-remainder sequence `f_0, f_1, ..., f_k` with `f_{j+1} = -rem(f_{j-1}, f_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<RationalPolynomial>,
}

impl SturmChain {
    /// Chain started at `(f0, f1)`. `f0` must be nonzero.
    pub fn new(f0: &RationalPolynomial, f1: &RationalPolynomial) -> Self {
        assert!(!f0.is_zero(), "Sturm chain needs a nonzero first element");
        let mut chain = vec![f0.clone()];
        if !f1.is_zero() {
            chain.push(f1.clone());
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(-r);
            }
        }
        SturmChain { chain }
    }

    /// The classical chain `(f, f')`.
    pub fn of(f: &RationalPolynomial) -> Self {
        Self::new(f, &f.derivative())
    }

    pub fn polys(&self) -> &[RationalPolynomial] {
        &self.chain
    }

    pub fn variations_at(&self, at: &Bound) -> usize {
        count_sign_changes(self.chain.iter().map(|p| sign_at_bound(p, at)))
    }
}

fn check_interval(theta: &Bound, phi: &Bound) -> Result<()> {
    if theta.less_than(phi) {
        Ok(())
    } else {
        Err(Error::EmptyInterval)
    }
}

/// Cauchy index of `q/p` over `(theta, phi)`: the number of jumps from
/// `-inf` to `+inf` minus the number of jumps from `+inf` to `-inf`.
///
/// Jumps are counted strictly inside the interval; a finite endpoint that is a
/// root of `p` is rejected.
pub fn cauchy_index(
    q: &RationalPolynomial,
    p: &RationalPolynomial,
    theta: &Bound,
    phi: &Bound,
) -> Result<i64> {
    if p.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    check_interval(theta, phi)?;
    for b in [theta, phi] {
        if let Bound::Finite(x) = b {
            if p.eval(x).is_zero() {
                return Err(Error::EndpointIsPole(x.clone()));
            }
        }
    }
    let index = index_by_chain(q, p, theta, phi);
    debug_assert_eq!(index, {
        let g = gcd(p, q).expect("p is nonzero");
        let (pr, qr) = (p.exact_div(&g).unwrap(), q.exact_div(&g).unwrap());
        index_by_chain(&qr, &pr, theta, phi)
    });
    Ok(index)
}

fn index_by_chain(
    q: &RationalPolynomial,
    p: &RationalPolynomial,
    theta: &Bound,
    phi: &Bound,
) -> i64 {
    let chain = SturmChain::new(p, q);
    chain.variations_at(theta) as i64 - chain.variations_at(phi) as i64
}

/// Like [`cauchy_index`], but a finite endpoint that is a pole is moved inward
/// to the nearest point that keeps every other root of `p` on the same side.
///
/// Returns the index together with the endpoints actually used.
pub fn cauchy_index_nudged(
    q: &RationalPolynomial,
    p: &RationalPolynomial,
    theta: &Bound,
    phi: &Bound,
) -> Result<(i64, Bound, Bound)> {
    if p.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    check_interval(theta, phi)?;
    let theta = match theta {
        Bound::Finite(x) if p.eval(x).is_zero() => Bound::Finite(nudge(p, x, phi, true)?),
        other => other.clone(),
    };
    let phi = match phi {
        Bound::Finite(x) if p.eval(x).is_zero() => Bound::Finite(nudge(p, x, &theta, false)?),
        other => other.clone(),
    };
    let index = cauchy_index(q, p, &theta, &phi)?;
    Ok((index, theta, phi))
}

/// Half of a step `delta` away from root `x` toward `limit` such that `(x, x + delta]`
/// (or `[x - delta, x)`) is free of roots of `p`.
fn nudge(p: &RationalPolynomial, x: &Rational, limit: &Bound, upward: bool) -> Result<Rational> {
    let sf = crate::poly::square_free_part(p)?;
    let chain = SturmChain::of(&sf);
    let mut delta = Rational::one();
    if let Bound::Finite(l) = limit {
        delta = (l - x).abs();
    }
    loop {
        let other = if upward { x + &delta } else { x - &delta };
        let (lo, hi) = if upward {
            (x.clone(), other.clone())
        } else {
            (other.clone(), x.clone())
        };
        let roots_in = chain.variations_at(&Bound::Finite(lo)) as i64
            - chain.variations_at(&Bound::Finite(hi)) as i64;
        // (lo, hi] counts x itself when moving downward
        let expected = if upward { 0 } else { 1 };
        if roots_in == expected && !sf.eval(&other).is_zero() {
            let half = &delta / Rational::from_integer(BigInt::from(2));
            return Ok(if upward { x + half } else { x - half });
        }
        delta /= Rational::from_integer(BigInt::from(2));
    }
}

/// Number of distinct real roots of `f` in `(theta, phi]`.
pub fn count_real_roots(f: &RationalPolynomial, theta: &Bound, phi: &Bound) -> Result<usize> {
    f.require_nonzero()?;
    check_interval(theta, phi)?;
    if f.is_constant() {
        return Ok(0);
    }
    let sf = crate::poly::square_free_part(f)?;
    let chain = SturmChain::of(&sf);
    Ok(chain.variations_at(theta) - chain.variations_at(phi))
}

/// Number of real roots of `f` in `(theta, phi]` counted with multiplicity.
pub fn count_real_roots_with_multiplicity(
    f: &RationalPolynomial,
    theta: &Bound,
    phi: &Bound,
) -> Result<usize> {
    f.require_nonzero()?;
    check_interval(theta, phi)?;
    let mut total = 0;
    for (factor, mult) in square_free_decomposition(f)? {
        let chain = SturmChain::of(&factor);
        total += mult * (chain.variations_at(theta) - chain.variations_at(phi));
    }
    Ok(total)
}

/// Where a real root sits: exactly at a rational, or alone inside an open interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(Rational),
    Interval { lo: Rational, hi: Rational },
}

/// A real algebraic number with its defining square-free polynomial and multiplicity.
///
/// In interval form the defining polynomial has exactly one root in `(lo, hi)`
/// and opposite nonzero signs at the endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicRoot {
    pub defining: RationalPolynomial,
    pub location: RootLocation,
    pub multiplicity: usize,
}

impl AlgebraicRoot {
    pub fn exact(value: Rational, multiplicity: usize) -> Self {
        AlgebraicRoot {
            defining: RationalPolynomial::linear_factor(&value),
            location: RootLocation::Exact(value),
            multiplicity,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match &self.location {
            RootLocation::Exact(r) => Some(r),
            RootLocation::Interval { .. } => None,
        }
    }

    /// Halves the isolating interval. Exact roots are returned unchanged.
    pub fn bisect(&self) -> AlgebraicRoot {
        let RootLocation::Interval { lo, hi } = &self.location else {
            return self.clone();
        };
        let mid = (lo + hi) / Rational::from_integer(BigInt::from(2));
        let s_mid = self.defining.sign_at(&mid);
        let location = if s_mid == Sign::Zero {
            RootLocation::Exact(mid)
        } else if s_mid != self.defining.sign_at(lo) {
            RootLocation::Interval {
                lo: lo.clone(),
                hi: mid,
            }
        } else {
            RootLocation::Interval {
                lo: mid,
                hi: hi.clone(),
            }
        };
        AlgebraicRoot {
            defining: self.defining.clone(),
            location,
            multiplicity: self.multiplicity,
        }
    }

    /// Bisects until the interval is narrower than `width` (or the root becomes exact).
    pub fn refine_to(&self, width: &Rational) -> AlgebraicRoot {
        let mut r = self.clone();
        while let RootLocation::Interval { lo, hi } = &r.location {
            if &(hi - lo) < width {
                break;
            }
            r = r.bisect();
        }
        r
    }

    /// Compares the root with a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        let mut r = self.clone();
        loop {
            match &r.location {
                RootLocation::Exact(v) => return v.cmp(x),
                RootLocation::Interval { lo, hi } => {
                    if x <= lo {
                        return Ordering::Greater;
                    }
                    if x >= hi {
                        return Ordering::Less;
                    }
                    if r.defining.eval(x).is_zero() {
                        return Ordering::Equal;
                    }
                }
            }
            r = r.bisect();
        }
    }

    /// Midpoint approximation as a float.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        match &self.location {
            RootLocation::Exact(v) => v.to_f64().unwrap_or(f64::NAN),
            RootLocation::Interval { .. } => {
                let r = self.refine_to(&Rational::new(BigInt::one(), BigInt::one() << 60));
                match &r.location {
                    RootLocation::Exact(v) => v.to_f64().unwrap_or(f64::NAN),
                    RootLocation::Interval { lo, hi } => {
                        ((lo + hi) / Rational::from_integer(BigInt::from(2)))
                            .to_f64()
                            .unwrap_or(f64::NAN)
                    }
                }
            }
        }
    }

    /// Checks the certificate from scratch.
    pub fn is_valid(&self) -> bool {
        match &self.location {
            RootLocation::Exact(v) => self.defining.eval(v).is_zero(),
            RootLocation::Interval { lo, hi } => {
                let slo = self.defining.sign_at(lo);
                let shi = self.defining.sign_at(hi);
                lo < hi
                    && slo != Sign::Zero
                    && shi != Sign::Zero
                    && slo != shi
                    && count_real_roots(
                        &self.defining,
                        &Bound::Finite(lo.clone()),
                        &Bound::Finite(hi.clone()),
                    ) == Ok(1)
            }
        }
    }
}

impl fmt::Display for AlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            RootLocation::Exact(v) => write!(f, "{}", fmt_rational(v)),
            RootLocation::Interval { lo, hi } => write!(
                f,
                "{{{}; ({}, {}); {}}}",
                self.defining,
                fmt_rational(lo),
                fmt_rational(hi),
                self.multiplicity
            ),
        }
    }
}

/// Total order on real algebraic numbers. Equality is only reported when proven.
pub fn compare_roots(a: &AlgebraicRoot, b: &AlgebraicRoot) -> Ordering {
    match (&a.location, &b.location) {
        (RootLocation::Exact(x), RootLocation::Exact(y)) => x.cmp(y),
        (RootLocation::Exact(x), _) => b.cmp_rational(x).reverse(),
        (_, RootLocation::Exact(y)) => a.cmp_rational(y),
        _ => compare_intervals(a.clone(), b.clone()),
    }
}

fn compare_intervals(mut a: AlgebraicRoot, mut b: AlgebraicRoot) -> Ordering {
    let mut common: Option<RationalPolynomial> = None;
    loop {
        let (RootLocation::Interval { lo: alo, hi: ahi }, RootLocation::Interval { lo: blo, hi: bhi }) =
            (&a.location, &b.location)
        else {
            return compare_roots(&a, &b);
        };
        if ahi <= blo {
            return Ordering::Less;
        }
        if bhi <= alo {
            return Ordering::Greater;
        }
        let common = common.get_or_insert_with(|| {
            gcd(&a.defining, &b.defining).expect("defining polynomials are nonzero")
        });
        if !common.is_constant() {
            // the common factor vanishes at neither endpoint of either interval
            let lo = alo.max(blo).clone();
            let hi = ahi.min(bhi).clone();
            let shared = count_real_roots(common, &Bound::Finite(lo), &Bound::Finite(hi))
                .expect("nonzero common factor");
            if shared > 0 {
                return Ordering::Equal;
            }
        }
        a = a.bisect();
        b = b.bisect();
    }
}

/// Smallest-denominator rational strictly inside `(lo, hi)`.
fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !lo.is_negative() {
        simplest_positive(lo, hi)
    } else {
        -simplest_positive(&-hi, &-lo)
    }
}

// Stern-Brocot descent for 0 <= lo < hi.
fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    let candidate = &fl + Rational::one();
    if &candidate < hi {
        return candidate;
    }
    // lo and hi share the integer part `fl` (or hi == fl + 1 exactly)
    let frac_lo = lo - &fl;
    let frac_hi = hi - &fl;
    if frac_lo.is_zero() {
        // interval (fl, fl + frac_hi): simplest is fl + 1/k with smallest k
        let k = (Rational::one() / &frac_hi).floor() + Rational::one();
        return fl + Rational::one() / k;
    }
    let inner = simplest_positive(&(Rational::one() / &frac_hi), &(Rational::one() / &frac_lo));
    fl + Rational::one() / inner
}

fn isolate_square_free(g: &RationalPolynomial, multiplicity: usize) -> Vec<AlgebraicRoot> {
    let g = g.monic();
    if g.degree() == 1 {
        return vec![AlgebraicRoot::exact(-g.coeff(1), multiplicity)];
    }
    let bound = g
        .coeffs()
        .iter()
        .skip(1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::one();
    let chain = SturmChain::of(&g);
    let var = |x: &Rational| chain.variations_at(&Bound::Finite(x.clone()));
    let two = Rational::from_integer(BigInt::from(2));

    let mut found = Vec::new();
    let lo = -bound.clone();
    let mut stack = vec![(lo.clone(), bound.clone(), var(&lo), var(&bound))];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        let count = vlo - vhi;
        if count == 0 {
            continue;
        }
        if count == 1 {
            found.push(AlgebraicRoot {
                defining: g.clone(),
                location: RootLocation::Interval { lo, hi },
                multiplicity,
            });
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if g.eval(&mid).is_zero() {
            found.push(AlgebraicRoot {
                defining: g.clone(),
                location: RootLocation::Exact(mid.clone()),
                multiplicity,
            });
            // clear a root-free gap around mid on both sides
            let mut eps = (&hi - &lo) / Rational::from_integer(BigInt::from(4));
            loop {
                let a = &mid - &eps;
                let b = &mid + &eps;
                if !g.eval(&a).is_zero() && !g.eval(&b).is_zero() && var(&a) - var(&b) == 1 {
                    let (va, vb) = (var(&a), var(&b));
                    stack.push((lo.clone(), a, vlo, va));
                    stack.push((b, hi.clone(), vb, vhi));
                    break;
                }
                eps /= &two;
            }
        } else {
            let vmid = var(&mid);
            stack.push((lo, mid.clone(), vlo, vmid));
            stack.push((mid, hi, vmid, vhi));
        }
    }

    // A rational root p/q of the primitive integer form has q | lc, so once the
    // interval is narrower than 1/lc^2 the only candidate is the simplest rational in it.
    let lc = g.primitive_integer()[0].abs();
    let width = Rational::new(BigInt::one(), &lc * &lc);
    found
        .into_iter()
        .map(|root| {
            if root.as_exact().is_some() {
                return root;
            }
            let root = root.refine_to(&width);
            if let RootLocation::Interval { lo, hi } = &root.location {
                let s = simplest_between(lo, hi);
                if s.denom().is_one() || lc.is_multiple_of(s.denom()) {
                    if g.eval(&s).is_zero() {
                        return AlgebraicRoot {
                            location: RootLocation::Exact(s),
                            ..root
                        };
                    }
                }
            }
            root
        })
        .collect()
}

/// Distinct real roots of `f` in ascending order, with multiplicities.
///
/// Rational roots come back in exact form; every other root gets an isolating
/// interval for its square-free factor.
pub fn isolate_real_roots(f: &RationalPolynomial) -> Result<Vec<AlgebraicRoot>> {
    f.require_nonzero()?;
    let mut roots: Vec<AlgebraicRoot> = square_free_decomposition(f)?
        .iter()
        .flat_map(|(g, m)| isolate_square_free(g, *m))
        .collect();
    roots.sort_by(compare_roots);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, rat};

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_ints(c)
    }

    fn fin(n: i64) -> Bound {
        Bound::Finite(rat(n))
    }

    #[test]
    fn variation_examples() {
        let v = |xs: &[i64]| sign_variations(&xs.iter().map(|&x| rat(x)).collect::<Vec<_>>());
        assert_eq!(v(&[1, -1, 3, -4, 1]), 4);
        assert_eq!(v(&[1, 0, 0, -2]), 1);
        assert_eq!(v(&[1, 2, 3]), 0);
        assert_eq!(v(&[]), 0);
    }

    #[test]
    fn cauchy_index_examples() {
        let one = p(&[1]);
        let den = p(&[1, 0, -1]);
        assert_eq!(cauchy_index(&one, &den, &Bound::NegInf, &fin(0)), Ok(-1));
        assert_eq!(cauchy_index(&one, &den, &fin(0), &Bound::PosInf), Ok(1));
        assert_eq!(cauchy_index(&one, &den, &Bound::NegInf, &Bound::PosInf), Ok(0));
        assert_eq!(cauchy_index(&one, &p(&[1, 0]), &Bound::NegInf, &Bound::PosInf), Ok(1));
        assert_eq!(
            cauchy_index(&p(&[-1, 0, 0, 0, 1]), &p(&[1, 0, -3, 0, -4, 0]), &Bound::NegInf, &Bound::PosInf),
            Ok(-3)
        );
    }

    #[test]
    fn cauchy_index_errors() {
        let one = p(&[1]);
        assert_eq!(
            cauchy_index(&one, &p(&[1, 0, -1]), &fin(1), &Bound::PosInf),
            Err(Error::EndpointIsPole(rat(1)))
        );
        assert_eq!(
            cauchy_index(&one, &RationalPolynomial::zero(), &Bound::NegInf, &Bound::PosInf),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(
            cauchy_index(&one, &p(&[1, 0]), &fin(2), &fin(1)),
            Err(Error::EmptyInterval)
        );
    }

    #[test]
    fn even_multiplicity_pole_contributes_nothing() {
        assert_eq!(cauchy_index(&p(&[1]), &p(&[1, 0, 0]), &Bound::NegInf, &Bound::PosInf), Ok(0));
        // 1/x^3 still jumps -inf -> +inf
        assert_eq!(cauchy_index(&p(&[1]), &p(&[1, 0, 0, 0]), &Bound::NegInf, &Bound::PosInf), Ok(1));
    }

    #[test]
    fn nudged_endpoint_moves_inward() {
        let (idx, lo, _) =
            cauchy_index_nudged(&p(&[1]), &p(&[1, 0, -1]), &fin(-1), &Bound::PosInf).unwrap();
        // the pole at -1 is excluded, the one at +1 counts
        assert_eq!(idx, 1);
        let Bound::Finite(lo) = lo else { panic!() };
        assert!(lo > rat(-1) && lo < rat(1));
        let (idx, _, hi) =
            cauchy_index_nudged(&p(&[1]), &p(&[1, 0, -1]), &Bound::NegInf, &fin(1)).unwrap();
        assert_eq!(idx, -1);
        assert!(matches!(hi, Bound::Finite(h) if h < rat(1) && h > rat(-1)));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_real_roots(&p(&[1, 0, -1, 0]), &fin(-2), &fin(2)), Ok(3));
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf), Ok(0));
        assert_eq!(count_real_roots(&p(&[2, 0, -94, 0]), &Bound::NegInf, &Bound::PosInf), Ok(3));
        // half-open: (0, 1] contains 1 but not 0
        assert_eq!(count_real_roots(&p(&[1, 0, -1, 0]), &fin(0), &fin(1)), Ok(1));
        assert_eq!(
            count_real_roots(&RationalPolynomial::zero(), &Bound::NegInf, &Bound::PosInf),
            Err(Error::ZeroPolynomial)
        );
        let double = &p(&[1, -1]).pow(2) * &p(&[1, 0, 1]);
        assert_eq!(
            count_real_roots_with_multiplicity(&double, &Bound::NegInf, &Bound::PosInf),
            Ok(2)
        );
    }

    #[test]
    fn isolation_examples() {
        let roots = isolate_real_roots(&p(&[1, 0, -3, 0, -4, 0])).unwrap();
        let exact: Vec<_> = roots.iter().map(|r| r.as_exact().cloned()).collect();
        assert_eq!(exact, vec![Some(rat(-2)), Some(rat(0)), Some(rat(2))]);
        assert!(roots.iter().all(|r| r.multiplicity == 1));

        let roots = isolate_real_roots(&p(&[1, -1]).pow(2)).unwrap();
        assert_eq!(roots, vec![AlgebraicRoot::exact(rat(1), 2)]);

        let roots = isolate_real_roots(&p(&[1, 0, -2])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.as_exact().is_none() && r.is_valid()));
        assert_eq!(roots[0].cmp_rational(&rat(-1)), Ordering::Less);
        assert_eq!(roots[0].cmp_rational(&rat(-2)), Ordering::Greater);
        assert_eq!(roots[1].cmp_rational(&rat(1)), Ordering::Greater);
        assert!((roots[1].approx() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn isolation_finds_rational_roots_with_denominators() {
        // (3x - 1)(7x + 5)(x^2 - 3)
        let f = &(&p(&[3, -1]) * &p(&[7, 5])) * &p(&[1, 0, -3]);
        let roots = isolate_real_roots(&f).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots[1].as_exact(), Some(&frac(-5, 7)));
        assert_eq!(roots[2].as_exact(), Some(&frac(1, 3)));
        assert!(roots[0].as_exact().is_none() && roots[3].as_exact().is_none());
    }

    #[test]
    fn compare_examples() {
        let zero = AlgebraicRoot::exact(rat(0), 1);
        let one = AlgebraicRoot::exact(rat(1), 1);
        assert_eq!(compare_roots(&zero, &one), Ordering::Less);
        let sqrt2 = AlgebraicRoot {
            defining: p(&[1, 0, -2]),
            location: RootLocation::Interval { lo: rat(1), hi: rat(2) },
            multiplicity: 1,
        };
        assert_eq!(compare_roots(&sqrt2, &one), Ordering::Greater);
        let other = AlgebraicRoot {
            defining: p(&[2, 0, -4]),
            location: RootLocation::Interval { lo: rat(0), hi: rat(3) },
            multiplicity: 1,
        };
        assert_eq!(compare_roots(&sqrt2, &other), Ordering::Equal);
        let sqrt3 = AlgebraicRoot {
            defining: p(&[1, 0, -3]),
            location: RootLocation::Interval { lo: rat(1), hi: rat(2) },
            multiplicity: 1,
        };
        assert_eq!(compare_roots(&sqrt2, &sqrt3), Ordering::Less);
        assert_eq!(compare_roots(&sqrt3, &sqrt2), Ordering::Greater);
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&frac(1, 3), &frac(1, 2)), frac(2, 5));
        assert_eq!(simplest_between(&frac(-1, 2), &frac(1, 2)), rat(0));
        assert_eq!(simplest_between(&frac(3, 2), &frac(5, 2)), rat(2));
        assert_eq!(simplest_between(&frac(-5, 7), &frac(-2, 3)), frac(-7, 10));
        assert_eq!(simplest_between(&rat(2), &frac(9, 4)), frac(11, 5));
    }
}
