//! Root counts by half-plane, the Hermite-Biehler stability test and
//! interlacing certificates for the real roots of the even/odd parts.
//!
//! For monic `f` of degree `n`, `i^n f(-ix) = P(x) + i Q(x)` (see
//! [`hb_polynomials`]). A root `z` of `f` becomes the root `iz` of `P + iQ`,
//! so real parts of roots of `f` turn into imaginary parts, and the Cauchy
//! index of `Q/P` over the whole line equals `n_minus - n_plus`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{even_odd_split, gcd, hb_polynomials, RationalPolynomial, Sign};
use crate::sturm::{
    cauchy_index, compare_roots, count_real_roots, count_real_roots_with_multiplicity,
    isolate_real_roots, AlgebraicRoot, Bound,
};

/// Numbers of roots with positive, negative and zero real part (with multiplicity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfPlaneCount {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl HalfPlaneCount {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        HalfPlaneCount {
            n_plus,
            n_minus,
            n_zero,
        }
    }

    pub fn total(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    /// `n - 2 min(n_plus, n_minus)`.
    pub fn interlacing_depth(&self) -> usize {
        self.total() - 2 * self.n_plus.min(self.n_minus)
    }
}

/// Counts roots of `P + iQ` by the sign of their imaginary part, for monic `P`
/// of degree `n` and `deg Q < n`: `(n_plus, n_minus, n_zero)` with positive,
/// negative and zero imaginary part.
pub(crate) fn pair_counts(p: &RationalPolynomial, q: &RationalPolynomial) -> Result<HalfPlaneCount> {
    let n = p.degree();
    let common = gcd(p, q)?;
    let n_zero = count_real_roots_with_multiplicity(&common, &Bound::NegInf, &Bound::PosInf)?;
    let index = cauchy_index(q, p, &Bound::NegInf, &Bound::PosInf)?;
    let off_axis = (n - n_zero) as i64;
    if (off_axis + index) % 2 != 0 || index.abs() > off_axis {
        return Err(Error::InternalAssertion(format!(
            "Cauchy index {index} inconsistent with {off_axis} non-real roots"
        )));
    }
    let n_minus = ((off_axis + index) / 2) as usize;
    Ok(HalfPlaneCount::new(off_axis as usize - n_minus, n_minus, n_zero))
}

/// Root counts of `f` by sign of real part, computed exactly.
pub fn half_plane_counts(f: &RationalPolynomial) -> Result<HalfPlaneCount> {
    f.require_nonzero()?;
    let (p, q) = hb_polynomials(&f.monic())?;
    pair_counts(&p, &q)
}

/// Which of the two Hermite-Biehler conditions a witness root belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HbPart {
    /// root of `p(-x^2)`
    Even,
    /// root of `q(-x^2)`
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HbConditions {
    /// all roots of `p(-x^2)` and `q(-x^2)` are real and simple
    pub real_and_distinct: bool,
    /// `a_0` and `a_1` have the same sign
    pub leading_same_sign: bool,
    /// `0 < x_e1 < x_o1 < x_e2 < ...`
    pub interleaved: bool,
}

impl HbConditions {
    pub fn all(&self) -> bool {
        self.real_and_distinct && self.leading_same_sign && self.interleaved
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: bool,
    pub counts: HalfPlaneCount,
    pub hb_conditions: HbConditions,
    /// The interleaved nonnegative roots `x_e1 < x_o1 < ...`, filled only when stable.
    pub witnesses: Vec<(HbPart, AlgebraicRoot)>,
}

fn real_and_simple(g: &RationalPolynomial) -> Result<bool> {
    if g.is_zero() {
        return Ok(false);
    }
    if g.is_constant() {
        return Ok(true);
    }
    let simple = gcd(g, &g.derivative())?.is_constant();
    Ok(simple && count_real_roots(g, &Bound::NegInf, &Bound::PosInf)? == g.degree())
}

fn nonnegative_roots(g: &RationalPolynomial) -> Result<Vec<AlgebraicRoot>> {
    if g.is_zero() {
        return Ok(Vec::new());
    }
    let zero = crate::poly::rat(0);
    Ok(isolate_real_roots(g)?
        .into_iter()
        .filter(|r| r.cmp_rational(&zero) != Ordering::Less)
        .collect())
}

/// Hermite-Biehler test, cross-checked against [`half_plane_counts`].
pub fn is_hurwitz_stable(f: &RationalPolynomial) -> Result<StabilityReport> {
    f.require_nonzero()?;
    if f.is_constant() {
        return Err(Error::DegreeZero);
    }
    let n = f.degree();
    let counts = half_plane_counts(f)?;
    let (p, q) = even_odd_split(f);
    let even = p.substitute_square(true);
    let odd = q.substitute_square(true);

    let real_and_distinct = real_and_simple(&even)? && real_and_simple(&odd)?;
    let leading_same_sign = {
        let s0 = Sign::of(&f.coeff(0));
        let s1 = Sign::of(&f.coeff(1));
        s1 != Sign::Zero && s0 == s1
    };

    let mut merged: Vec<(HbPart, AlgebraicRoot)> = nonnegative_roots(&even)?
        .into_iter()
        .map(|r| (HbPart::Even, r))
        .chain(nonnegative_roots(&odd)?.into_iter().map(|r| (HbPart::Odd, r)))
        .collect();
    merged.sort_by(|a, b| compare_roots(&a.1, &b.1));
    let zero = crate::poly::rat(0);
    let interleaved = !even.is_zero()
        && !odd.is_zero()
        && merged
            .first()
            .map_or(true, |(part, r)| *part == HbPart::Even && r.cmp_rational(&zero) == Ordering::Greater)
        && merged.iter().enumerate().all(|(i, (part, _))| {
            *part == if i % 2 == 0 { HbPart::Even } else { HbPart::Odd }
        })
        && merged
            .windows(2)
            .all(|w| compare_roots(&w[0].1, &w[1].1) == Ordering::Less);

    let hb_conditions = HbConditions {
        real_and_distinct,
        leading_same_sign,
        interleaved,
    };
    let stable = hb_conditions.all();
    if stable != (counts == HalfPlaneCount::new(0, n, 0)) {
        return Err(Error::InternalAssertion(format!(
            "Hermite-Biehler verdict {stable} disagrees with counts {counts:?}"
        )));
    }
    Ok(StabilityReport {
        stable,
        counts,
        hb_conditions,
        witnesses: if stable { merged } else { Vec::new() },
    })
}

/// Real roots `mu` of `P` and `nu` of `Q` with `mu_1 <= nu_1 <= mu_2 <= ... <= mu_d`.
///
/// `nu_pre` and `nu_post` are the extra roots of `Q` below `mu_1` and above
/// `mu_d` added by [`extend_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacingCertificate {
    pub d: usize,
    pub mu: Vec<AlgebraicRoot>,
    pub nu: Vec<AlgebraicRoot>,
    pub strict: bool,
    pub nu_pre: Option<AlgebraicRoot>,
    pub nu_post: Option<AlgebraicRoot>,
}

impl InterlacingCertificate {
    /// membership, multiplicities and the ordering chain. Any real `nu` is
    /// accepted when `Q = 0`.
    /// membership, multiplicities and the ordering chain.
    pub fn verify(&self, p: &RationalPolynomial, q: &RationalPolynomial) -> bool {
        if self.mu.len() < self.d || (self.d >= 1 && self.nu.len() + 1 < self.d) {
            return false;
        }
        if self.d == 0 {
            return self.mu.is_empty()
                && self.nu.is_empty()
                && self.nu_pre.is_none()
                && self.nu_post.is_none();
        }
        let is_root_of = |r: &AlgebraicRoot, g: &RationalPolynomial| {
            !g.is_zero() && r.is_valid() && g.rem(&r.defining).is_zero()
        };
        let nus = self.nu.iter().chain(&self.nu_pre).chain(&self.nu_post);
        if !self.mu.iter().all(|r| is_root_of(r, p)) || !within_multiplicity(&self.mu) {
            return false;
        }
        let nus_ok = if q.is_zero() {
            nus.clone().all(AlgebraicRoot::is_valid)
        } else {
            nus.clone().all(|r| is_root_of(r, q)) && within_multiplicity(&nus.cloned().collect::<Vec<_>>())
        };
        if !nus_ok {
            return false;
        }
        let ok = |a: &AlgebraicRoot, b: &AlgebraicRoot| match compare_roots(a, b) {
            Ordering::Less => true,
            Ordering::Equal => !self.strict,
            Ordering::Greater => false,
        };
        let mut chain: Vec<&AlgebraicRoot> = Vec::new();
        chain.extend(self.nu_pre.iter());
        for i in 0..self.d {
            chain.push(&self.mu[i]);
            if i + 1 < self.d {
                chain.push(&self.nu[i]);
            }
        }
        chain.extend(self.nu_post.iter());
        chain.windows(2).all(|w| ok(w[0], w[1]))
    }
}

/// No value is used more often than its multiplicity.
fn within_multiplicity(roots: &[AlgebraicRoot]) -> bool {
    roots.iter().all(|r| {
        let uses = roots
            .iter()
            .filter(|s| compare_roots(r, s) == Ordering::Equal)
            .count();
        uses <= r.multiplicity
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    P,
    Q,
}

impl Label {
    fn other(self) -> Label {
        match self {
            Label::P => Label::Q,
            Label::Q => Label::P,
        }
    }
}

/// Roots of `P` and `Q` grouped by value, ascending.
struct Group {
    p: Option<AlgebraicRoot>,
    q: Option<AlgebraicRoot>,
}

impl Group {
    fn count(&self, label: Label) -> usize {
        let r = match label {
            Label::P => &self.p,
            Label::Q => &self.q,
        };
        r.as_ref().map_or(0, |r| r.multiplicity)
    }

    fn root(&self, label: Label) -> &AlgebraicRoot {
        match label {
            Label::P => self.p.as_ref().unwrap(),
            Label::Q => self.q.as_ref().unwrap(),
        }
    }
}

fn group_roots(p_roots: Vec<AlgebraicRoot>, q_roots: Vec<AlgebraicRoot>) -> Vec<Group> {
    let mut groups = Vec::new();
    let mut p_iter = p_roots.into_iter().peekable();
    let mut q_iter = q_roots.into_iter().peekable();
    loop {
        let order = match (p_iter.peek(), q_iter.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some(a), Some(b)) => compare_roots(a, b),
        };
        groups.push(match order {
            Ordering::Less => Group {
                p: p_iter.next(),
                q: None,
            },
            Ordering::Greater => Group {
                p: None,
                q: q_iter.next(),
            },
            Ordering::Equal => Group {
                p: p_iter.next(),
                q: q_iter.next(),
            },
        });
    }
    groups
}

/// Longest alternating sequence of roots that starts with `start` and ends with
/// `end`, scanning value groups left to right. In strict mode each value is
/// used at most once; otherwise equal values may repeat up to their
/// multiplicities (`mu <= nu <= mu` ties).
fn longest_alternation(
    groups: &[Group],
    start: Label,
    end: Label,
    strict: bool,
) -> Vec<(Label, AlgebraicRoot)> {
    // state index: 0 = nothing taken yet, 1 = last was P, 2 = last was Q
    let idx = |l: Option<Label>| match l {
        None => 0,
        Some(Label::P) => 1,
        Some(Label::Q) => 2,
    };
    let labels = [None, Some(Label::P), Some(Label::Q)];
    let mut best: Vec<[Option<usize>; 3]> = vec![[Some(0), None, None]];
    // back[g][state] = (previous state, first label taken in group g, tokens taken)
    let mut back: Vec<[(usize, Option<Label>, usize); 3]> = Vec::new();

    for group in groups {
        let prev = *best.last().unwrap();
        let mut cur: [Option<usize>; 3] = [None; 3];
        let mut cur_back = [(0, None, 0); 3];
        for (si, last) in labels.iter().enumerate() {
            let Some(len) = prev[si] else { continue };
            if cur[si].map_or(true, |c| c < len) {
                cur[si] = Some(len);
                cur_back[si] = (si, None, 0);
            }
            let first = match last {
                None => start,
                Some(l) => l.other(),
            };
            let (cx, cy) = (group.count(first), group.count(first.other()));
            let max_take = if strict {
                cx.min(1)
            } else {
                (2 * cx).min(2 * cy + 1)
            };
            for k in 1..=max_take {
                let last_label = if k % 2 == 1 { first } else { first.other() };
                let ni = idx(Some(last_label));
                if cur[ni].map_or(true, |c| c < len + k) {
                    cur[ni] = Some(len + k);
                    cur_back[ni] = (si, Some(first), k);
                }
            }
        }
        best.push(cur);
        back.push(cur_back);
    }

    let mut state = idx(Some(end));
    if best.last().unwrap()[state].is_none() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for g in (0..groups.len()).rev() {
        let (prev, first, k) = back[g][state];
        if let Some(first) = first {
            let mut tokens: Vec<(Label, AlgebraicRoot)> = (0..k)
                .map(|j| {
                    let l = if j % 2 == 0 { first } else { first.other() };
                    (l, groups[g].root(l).clone())
                })
                .collect();
            tokens.reverse();
            out.extend(tokens);
        }
        state = prev;
    }
    out.reverse();
    out
}

fn split_chain(tokens: &[(Label, AlgebraicRoot)]) -> (Vec<AlgebraicRoot>, Vec<AlgebraicRoot>) {
    let mu = tokens
        .iter()
        .filter(|(l, _)| *l == Label::P)
        .map(|(_, r)| r.clone())
        .collect();
    let nu = tokens
        .iter()
        .filter(|(l, _)| *l == Label::Q)
        .map(|(_, r)| r.clone())
        .collect();
    (mu, nu)
}

struct PairContext {
    p: RationalPolynomial,
    q: RationalPolynomial,
    counts: HalfPlaneCount,
    groups: Vec<Group>,
}

impl PairContext {
    fn new(f: &RationalPolynomial) -> Result<Self> {
        f.require_nonzero()?;
        if f.is_constant() {
            return Err(Error::DegreeZero);
        }
        let (p, q) = hb_polynomials(&f.monic())?;
        let counts = pair_counts(&p, &q)?;
        let p_roots = isolate_real_roots(&p)?;
        let q_roots = if q.is_zero() {
            Vec::new()
        } else {
            isolate_real_roots(&q)?
        };
        let groups = group_roots(p_roots, q_roots);
        Ok(PairContext {
            p,
            q,
            counts,
            groups,
        })
    }

    fn strict(&self) -> bool {
        self.counts.n_zero == 0
    }

    /// Chain with `d` roots of `P`, optionally flanked by roots of `Q`.
    fn chain(&self, d: usize, with_pre: bool, with_post: bool) -> Option<Vec<(Label, AlgebraicRoot)>> {
        let start = if with_pre { Label::Q } else { Label::P };
        let end = if with_post { Label::Q } else { Label::P };
        let tokens = longest_alternation(&self.groups, start, end, self.strict());
        let need = 2 * d - 1 + usize::from(with_pre) + usize::from(with_post);
        (tokens.len() >= need).then(|| tokens[..need].to_vec())
    }
}

/// Interlacing certificate for the real roots of `P` and `Q` with
/// `d = n - 2 min(n_plus, n_minus)` roots of `P`; strict when no root of `f`
/// lies on the imaginary axis.
///
/// The chain is the longest alternation of the merged, sorted root lists
/// (ties allowed only in the non-strict case), truncated to its first `2d - 1`
/// entries.
pub fn interlacing_certificate(f: &RationalPolynomial) -> Result<InterlacingCertificate> {
    let ctx = PairContext::new(f)?;
    certificate_from(&ctx)
}

fn certificate_from(ctx: &PairContext) -> Result<InterlacingCertificate> {
    let counts = ctx.counts;
    if counts.n_zero == counts.total() {
        return Err(Error::AllRootsImaginary);
    }
    let d = counts.interlacing_depth();
    let strict = ctx.strict();
    let (mu, nu) = if d == 0 {
        (Vec::new(), Vec::new())
    } else if ctx.q.is_zero() {
        // every real number is a root of Q
        let mu: Vec<AlgebraicRoot> = ctx
            .groups
            .iter()
            .filter_map(|g| g.p.as_ref())
            .flat_map(|r| std::iter::repeat(r.clone()).take(r.multiplicity))
            .take(d)
            .collect();
        if mu.len() < d {
            return Err(Error::InternalAssertion(format!("fewer than {d} real roots of P found")));
        }
        let nu = mu[..d - 1].to_vec();
        (mu, nu)
    } else {
        let tokens = ctx.chain(d, false, false).ok_or_else(|| {
            Error::InternalAssertion(format!("fewer than {d} interlacing roots of P found"))
        })?;
        split_chain(&tokens)
    };
    let cert = InterlacingCertificate {
        d,
        mu,
        nu,
        strict,
        nu_pre: None,
        nu_post: None,
    };
    debug_assert!(cert.verify(&ctx.p, &ctx.q));
    Ok(cert)
}

/// Signs of `lim P/Q` at `-inf` and `+inf` (`P/Q` is unbounded at both ends
/// since `deg P > deg Q`). `None` when `Q = 0`.
pub fn ratio_limit_signs(p: &RationalPolynomial, q: &RationalPolynomial) -> Option<(Sign, Sign)> {
    if q.is_zero() {
        return None;
    }
    let times = |a: Sign, b: Sign| if a == b { Sign::Positive } else { Sign::Negative };
    Some((
        times(p.sign_at_neg_inf(), q.sign_at_neg_inf()),
        times(p.sign_at_pos_inf(), q.sign_at_pos_inf()),
    ))
}

/// Which boundary extensions apply: `(below mu_1, above mu_d)`.
pub fn extension_conditions(f: &RationalPolynomial) -> Result<(bool, bool)> {
    f.require_nonzero()?;
    let counts = half_plane_counts(f)?;
    let (p, q) = hb_polynomials(&f.monic())?;
    Ok(extension_flags(&p, &q, counts))
}

fn extension_flags(p: &RationalPolynomial, q: &RationalPolynomial, counts: HalfPlaneCount) -> (bool, bool) {
    let Some((neg, pos)) = ratio_limit_signs(p, q) else {
        return (false, false);
    };
    match counts.n_minus.cmp(&counts.n_plus) {
        Ordering::Greater => (neg == Sign::Positive, pos == Sign::Negative),
        Ordering::Less => (neg == Sign::Negative, pos == Sign::Positive),
        Ordering::Equal => (false, false),
    }
}

/// Root of `Q` not already used by `used`, on the requested side of `pivot`.
fn spare_q_root(
    groups: &[Group],
    used: &[AlgebraicRoot],
    pivot: &AlgebraicRoot,
    below: bool,
    strict: bool,
) -> Option<AlgebraicRoot> {
    let candidates = groups.iter().filter_map(|g| g.q.as_ref()).filter(|r| {
        let taken = used
            .iter()
            .filter(|u| compare_roots(u, r) == Ordering::Equal)
            .count();
        let side = compare_roots(r, pivot);
        let on_side = if below {
            side == Ordering::Less || (!strict && side == Ordering::Equal)
        } else {
            side == Ordering::Greater || (!strict && side == Ordering::Equal)
        };
        taken < r.multiplicity && on_side
    });
    if below {
        candidates.last().cloned()
    } else {
        candidates.into_iter().next().cloned()
    }
}

/// Adds the extra roots of `Q` outside `[mu_1, mu_d]` whose existence follows
/// from the limits of `P/Q` at `±inf` when `n_plus != n_minus`.
///
/// The given certificate is extended in place when spare roots of `Q` sit on
/// the required sides; otherwise the chain is rebuilt with the flanking roots
/// pinned.
pub fn extend_certificate(
    f: &RationalPolynomial,
    cert: &InterlacingCertificate,
) -> Result<InterlacingCertificate> {
    let ctx = PairContext::new(f)?;
    let counts = ctx.counts;
    if counts.n_plus == counts.n_minus {
        return Err(Error::NotApplicable("n_plus equals n_minus".into()));
    }
    if ctx.q.is_zero() {
        return Err(Error::NotApplicable("Q is the zero polynomial".into()));
    }
    let (pre, post) = extension_flags(&ctx.p, &ctx.q, counts);
    if !pre && !post {
        return Err(Error::NotApplicable("no limit condition holds".into()));
    }
    let strict = ctx.strict();
    let d = counts.interlacing_depth();
    if cert.d != d || cert.mu.len() != d || !cert.verify(&ctx.p, &ctx.q) {
        return Err(Error::HypothesisViolation(
            "certificate was not produced for this polynomial".into(),
        ));
    }

    let mut extended = cert.clone();
    let mut used = cert.nu.clone();
    let mut in_place = true;
    if pre {
        match spare_q_root(&ctx.groups, &used, &cert.mu[0], true, strict) {
            Some(r) => {
                used.push(r.clone());
                extended.nu_pre = Some(r);
            }
            None => in_place = false,
        }
    }
    if post && in_place {
        match spare_q_root(&ctx.groups, &used, &cert.mu[d - 1], false, strict) {
            Some(r) => extended.nu_post = Some(r),
            None => in_place = false,
        }
    }
    if in_place && extended.verify(&ctx.p, &ctx.q) {
        return Ok(extended);
    }

    let tokens = ctx.chain(d, pre, post).ok_or_else(|| {
        Error::InternalAssertion("no flanking root of Q found despite limit condition".into())
    })?;
    let mut body = tokens.as_slice();
    let mut nu_pre = None;
    let mut nu_post = None;
    if pre {
        nu_pre = Some(body[0].1.clone());
        body = &body[1..];
    }
    if post {
        nu_post = Some(body[body.len() - 1].1.clone());
        body = &body[..body.len() - 1];
    }
    let (mu, nu) = split_chain(body);
    let rebuilt = InterlacingCertificate {
        d,
        mu,
        nu,
        strict,
        nu_pre,
        nu_post,
    };
    if !rebuilt.verify(&ctx.p, &ctx.q) {
        return Err(Error::InternalAssertion("extended certificate failed verification".into()));
    }
    Ok(rebuilt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_ints(c)
    }

    fn exact_values(roots: &[AlgebraicRoot]) -> Vec<Option<crate::Rational>> {
        roots.iter().map(|r| r.as_exact().cloned()).collect()
    }

    #[test]
    fn count_examples() {
        assert_eq!(half_plane_counts(&p(&[1, -1, 3, 0, -4, 1])), Ok(HalfPlaneCount::new(4, 1, 0)));
        assert_eq!(half_plane_counts(&p(&[1, 2, 23, 94, 130])), Ok(HalfPlaneCount::new(2, 2, 0)));
        assert_eq!(half_plane_counts(&p(&[1, 0, 1])), Ok(HalfPlaneCount::new(0, 0, 2)));
        assert_eq!(half_plane_counts(&p(&[1, 3, 3, 1])), Ok(HalfPlaneCount::new(0, 3, 0)));
        // non-monic input is normalized
        assert_eq!(half_plane_counts(&p(&[-2, 2, 4])), Ok(HalfPlaneCount::new(1, 1, 0)));
        assert_eq!(half_plane_counts(&RationalPolynomial::zero()), Err(Error::ZeroPolynomial));
        // x^2 (x^2 + 1)(x - 3): zero and the pair ±i are on the axis
        let f = &p(&[1, 0, 1, 0, 0]) * &p(&[1, -3]);
        assert_eq!(half_plane_counts(&f), Ok(HalfPlaneCount::new(1, 0, 4)));
    }

    #[test]
    fn stability_examples() {
        let r = is_hurwitz_stable(&p(&[1, 3, 3, 1])).unwrap();
        assert!(r.stable);
        assert_eq!(r.witnesses.len(), 2);
        assert_eq!(r.witnesses[0].0, HbPart::Even);
        let r = is_hurwitz_stable(&p(&[1, 1, 1, 1])).unwrap();
        assert!(!r.stable);
        assert!(!r.hb_conditions.interleaved);
        assert!(r.witnesses.is_empty());
        assert!(is_hurwitz_stable(&p(&[1, 2, 2, 1])).unwrap().stable);
        assert!(is_hurwitz_stable(&p(&[2, 1])).unwrap().stable);
        assert!(!is_hurwitz_stable(&p(&[1, -1])).unwrap().stable);
        assert!(!is_hurwitz_stable(&p(&[1, 0, 1])).unwrap().stable);
        assert_eq!(is_hurwitz_stable(&p(&[5])), Err(Error::DegreeZero));
        // negative leading coefficient, still stable: -(x+1)(x+2)
        assert!(is_hurwitz_stable(&p(&[-1, -3, -2])).unwrap().stable);
    }

    #[test]
    fn certificate_worked_examples() {
        let cert = interlacing_certificate(&p(&[1, -1, 3, 0, -4, 1])).unwrap();
        assert_eq!(cert.d, 3);
        assert!(cert.strict);
        assert_eq!(exact_values(&cert.mu), vec![Some(rat(-2)), Some(rat(0)), Some(rat(2))]);
        assert_eq!(exact_values(&cert.nu), vec![Some(rat(-1)), Some(rat(1))]);

        let cert = interlacing_certificate(&p(&[1, 2, 23, 94, 130])).unwrap();
        assert_eq!(cert.d, 0);
        assert!(cert.mu.is_empty() && cert.nu.is_empty());

        let cert = interlacing_certificate(&p(&[1, 2, 1])).unwrap();
        assert_eq!(cert.d, 2);
        assert_eq!(exact_values(&cert.mu), vec![Some(rat(-1)), Some(rat(1))]);
        assert_eq!(exact_values(&cert.nu), vec![Some(rat(0))]);
    }

    #[test]
    fn certificate_with_axis_roots_is_non_strict() {
        // (x - 2)(x + 1)(x^2 + 4): P and Q share the roots ±2
        let f = p(&[1, -1, 2, -4, -8]);
        assert_eq!(half_plane_counts(&f), Ok(HalfPlaneCount::new(1, 1, 2)));
        let cert = interlacing_certificate(&f).unwrap();
        assert_eq!(cert.d, 2);
        assert!(!cert.strict);
        let (pp, qq) = hb_polynomials(&f).unwrap();
        assert!(cert.verify(&pp, &qq));
        assert_eq!(interlacing_certificate(&p(&[1, 0, 1])), Err(Error::AllRootsImaginary));
    }

    #[test]
    fn certificate_when_q_vanishes() {
        // x^5 (x^2 - 4): only even powers of the reversed form, so Q = 0
        let f = p(&[1, 0, -4, 0, 0, 0, 0, 0]);
        let (pp, qq) = hb_polynomials(&f).unwrap();
        assert!(qq.is_zero());
        assert_eq!(half_plane_counts(&f), Ok(HalfPlaneCount::new(1, 1, 5)));
        let cert = interlacing_certificate(&f).unwrap();
        assert_eq!(cert.d, 5);
        assert!(!cert.strict);
        assert_eq!(exact_values(&cert.mu), vec![Some(rat(0)); 5]);
        assert!(cert.verify(&pp, &qq));
        assert!(!cert.verify(&pp, &p(&[1, -1])));
    }

    #[test]
    fn tie_chain_uses_multiplicities() {
        // (x^2 + 1)^2 (x - 1): double roots of f on the axis
        let f = &p(&[1, 0, 1]).pow(2) * &p(&[1, -1]);
        let counts = half_plane_counts(&f).unwrap();
        assert_eq!(counts, HalfPlaneCount::new(1, 0, 4));
        let cert = interlacing_certificate(&f).unwrap();
        assert_eq!(cert.d, 5);
        let (pp, qq) = hb_polynomials(&f).unwrap();
        assert!(cert.verify(&pp, &qq));
    }

    #[test]
    fn extension_limit_signs_and_applicability() {
        // (x-2)(x+1)(x^2+4): the limits are +inf at -inf and -inf at +inf,
        // but n_plus == n_minus so no extension applies
        let f = p(&[1, -1, 2, -4, -8]);
        let (pp, qq) = hb_polynomials(&f).unwrap();
        assert_eq!(ratio_limit_signs(&pp, &qq), Some((Sign::Positive, Sign::Negative)));
        let cert = interlacing_certificate(&f).unwrap();
        assert!(matches!(extend_certificate(&f, &cert), Err(Error::NotApplicable(_))));

        let f = p(&[1, -1, 3, 0, -4, 1]);
        let cert = interlacing_certificate(&f).unwrap();
        assert_eq!(extension_conditions(&f), Ok((false, false)));
        assert!(matches!(extend_certificate(&f, &cert), Err(Error::NotApplicable(_))));

        let f = p(&[1, 3, 3, 1]);
        let cert = interlacing_certificate(&f).unwrap();
        assert!(matches!(extend_certificate(&f, &cert), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn extension_fires_for_one_positive_root_with_negative_trace() {
        // (x - 5)(x + 1)(x + 2) = x^3 - 2x^2 - 13x - 10, a_1 < 0
        let f = p(&[1, -2, -13, -10]);
        assert_eq!(extension_conditions(&f), Ok((true, true)));
        let cert = interlacing_certificate(&f).unwrap();
        assert_eq!(cert.d, 1);
        let ext = extend_certificate(&f, &cert).unwrap();
        let (pp, qq) = hb_polynomials(&f).unwrap();
        assert!(ext.verify(&pp, &qq));
        assert!(ext.nu_pre.is_some() && ext.nu_post.is_some());
        // Q = -2x^2 + 10 has exactly the two roots ±sqrt(5); both are used
        assert_eq!(count_real_roots(&qq, &Bound::NegInf, &Bound::PosInf), Ok(2));
    }
}
