//! Seeded generators shared by the integration suites.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use polystab::{GaussianRational, Rational, RationalPolynomial};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `n / d` with `|n| <= max_num` and `1 <= d <= max_den`.
pub fn rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    q(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

/// Strictly positive rational at most `max_num`.
pub fn positive(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    q(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

pub fn nonnegative(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    q(rng.gen_range(0..=max_num), rng.gen_range(1..=max_den))
}

/// `(x - a)^2 + b2`
pub fn quadratic(a: &Rational, b2: &Rational) -> RationalPolynomial {
    RationalPolynomial::new(vec![Rational::one(), -(a + a), a * a + b2])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Axis,
}

#[derive(Debug, Clone)]
pub struct Planted {
    pub f: RationalPolynomial,
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    /// real roots with their multiplicity
    pub real: Vec<(Rational, usize)>,
    /// complex pairs `a +- i sqrt(b2)` with their multiplicity
    pub pairs: Vec<(Rational, Rational, usize)>,
}

impl Planted {
    pub fn degree(&self) -> usize {
        self.f.degree()
    }

    pub fn roots_exact(&self) -> Vec<GaussianRational> {
        self.real
            .iter()
            .flat_map(|(r, m)| std::iter::repeat(GaussianRational::real(r.clone())).take(*m))
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PlantSpec {
    pub max_degree: usize,
    /// allow roots on the imaginary axis
    pub axis: bool,
    /// force at least one axis root
    pub force_axis: bool,
    /// allow roots with positive real part
    pub right: bool,
    /// chance that a factor is repeated
    pub repeat: f64,
}

impl Default for PlantSpec {
    fn default() -> Self {
        PlantSpec {
            max_degree: 10,
            axis: true,
            force_axis: false,
            right: true,
            repeat: 0.15,
        }
    }
}

fn side(rng: &mut ChaCha8Rng, spec: &PlantSpec) -> Side {
    loop {
        let s = match rng.gen_range(0..5) {
            0 | 1 => Side::Left,
            2 | 3 => Side::Right,
            _ => Side::Axis,
        };
        if (s == Side::Axis && !spec.axis) || (s == Side::Right && !spec.right) {
            continue;
        }
        return s;
    }
}

fn signed_part(rng: &mut ChaCha8Rng, s: Side) -> Rational {
    match s {
        Side::Left => -positive(rng, 6, 3),
        Side::Right => positive(rng, 6, 3),
        Side::Axis => Rational::zero(),
    }
}

/// Product of planted linear and quadratic factors with known half-plane counts.
pub fn planted(rng: &mut ChaCha8Rng, spec: &PlantSpec) -> Planted {
    let target = rng.gen_range(1..=spec.max_degree);
    let mut p = Planted {
        f: RationalPolynomial::one(),
        n_plus: 0,
        n_minus: 0,
        n_zero: 0,
        real: Vec::new(),
        pairs: Vec::new(),
    };
    let mut need_axis = spec.force_axis;
    while p.f.degree() < target || need_axis {
        let room = spec.max_degree - p.f.degree();
        if room == 0 {
            break;
        }
        let s = if need_axis { Side::Axis } else { side(rng, spec) };
        let quadratic_factor = room >= 2 && rng.gen_bool(0.5);
        let factor_degree = if quadratic_factor { 2 } else { 1 };
        let mut mult = 1;
        while rng.gen_bool(spec.repeat) && p.f.degree() + factor_degree * (mult + 1) <= spec.max_degree {
            mult += 1;
        }
        let a = signed_part(rng, s);
        let factor = if quadratic_factor {
            let b2 = positive(rng, 9, 4);
            p.pairs.push((a.clone(), b2.clone(), mult));
            quadratic(&a, &b2)
        } else {
            p.real.push((a.clone(), mult));
            RationalPolynomial::linear_factor(&a)
        };
        let count = factor_degree * mult;
        match s {
            Side::Left => p.n_minus += count,
            Side::Right => p.n_plus += count,
            Side::Axis => {
                p.n_zero += count;
                need_axis = false;
            }
        }
        p.f = &p.f * &factor.pow(mult as u32);
    }
    p
}

/// `prod (x + eta_j) prod ((x + alpha_j)^2 + beta_j^2)` with `eta_j, alpha_j >= 0`
/// (or `> 0` when `strict`), so every root has nonpositive real part.
pub fn left_half_plane(rng: &mut ChaCha8Rng, degree: usize, strict: bool) -> RationalPolynomial {
    let mut g = RationalPolynomial::one();
    while g.degree() < degree {
        let shift = if strict {
            positive(rng, 6, 3)
        } else if rng.gen_bool(0.25) {
            Rational::zero()
        } else {
            positive(rng, 6, 3)
        };
        if degree - g.degree() >= 2 && rng.gen_bool(0.5) {
            g = &g * &quadratic(&-shift, &positive(rng, 9, 4));
        } else {
            g = &g * &RationalPolynomial::linear_factor(&-shift);
        }
    }
    g
}

/// Nonpositive real parts paired into a self-conjugate list of `count` entries.
pub fn left_entries(rng: &mut ChaCha8Rng, count: usize, max_im: i64) -> Vec<GaussianRational> {
    let mut out = Vec::new();
    while out.len() < count {
        let re = -nonnegative(rng, 6, 2);
        if count - out.len() >= 2 && rng.gen_bool(0.5) {
            let im = positive(rng, max_im, 2);
            out.push(GaussianRational::new(re.clone(), im.clone()));
            out.push(GaussianRational::new(re, -im));
        } else {
            out.push(GaussianRational::real(re));
        }
    }
    out
}

/// `prod (x - z)` built from real linear factors and real quadratics, without
/// the Gaussian expansion used by the library.
pub fn real_product(entries: &[GaussianRational]) -> RationalPolynomial {
    let mut f = RationalPolynomial::one();
    for z in entries {
        if z.im.is_zero() {
            f = &f * &RationalPolynomial::linear_factor(&z.re);
        } else if z.im.is_positive() {
            f = &f * &quadratic(&z.re, &(&z.im * &z.im));
        }
    }
    f
}

/// `e_k` of `values` by summing over all `k`-subsets.
pub fn e_brute(values: &[Rational], k: usize) -> Rational {
    let n = values.len();
    let mut total = Rational::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            total += (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .fold(Rational::one(), |acc, i| acc * &values[i]);
        }
    }
    total
}
