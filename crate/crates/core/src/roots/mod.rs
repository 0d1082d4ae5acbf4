//! Complex roots of Ehrhart polynomials and the checks built on them.

pub mod aberth;
pub mod region;
pub mod spectrum;

use dashu_float::ops::Abs;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::ehrhart::EhrhartPolynomial;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use aberth::{fl, from_rational, to_f64, Float, HpComplex};

pub use region::{classify_3d, RegionTag, RegionVerdict, RootVerdict};
pub use spectrum::{h_sum, sn1_max_root_asymptotic, sn1_spectrum};

pub const DEFAULT_TOL: f64 = 1e-9;
/// Roots closer than this (relative to `max(1, |z|)`) are one root with multiplicity.
pub const CLUSTER_RADIUS: f64 = 1e-7;

/// Decimal rendering with 20 significant digits.
pub fn decimal20(x: &Float) -> String {
    if *x == fl(0.0) {
        return "0".into();
    }
    x.clone().with_base::<10>().value().with_precision(20).value().to_string()
}

#[derive(Clone, Debug, Serialize)]
pub struct Root {
    #[serde(skip)]
    pub re: f64,
    #[serde(skip)]
    pub im: f64,
    #[serde(rename = "re")]
    re_text: String,
    #[serde(rename = "im")]
    im_text: String,
    pub multiplicity: usize,
    pub residual: f64,
    #[serde(skip)]
    hp: HpComplex,
}

impl Root {
    fn new(hp: HpComplex, multiplicity: usize, residual: f64) -> Self {
        let z = hp.to_c64();
        Root {
            re: z.re,
            im: z.im,
            re_text: decimal20(&hp.re),
            im_text: decimal20(&hp.im),
            multiplicity,
            residual,
            hp,
        }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }

    pub fn re_text(&self) -> &str {
        &self.re_text
    }

    pub fn im_text(&self) -> &str {
        &self.im_text
    }
}

/// Distinct roots with multiplicities, sorted by real then imaginary part.
#[derive(Clone, Debug, Serialize)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub tol: f64,
}

impl RootSet {
    /// Number of roots counted with multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Every root repeated by multiplicity.
    pub fn values(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat(r.value()).take(r.multiplicity))
            .collect()
    }

    pub fn worst_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    /// Largest relative coefficient error of `lead * prod (s - z)` against `e`.
    pub fn reconstruction_error(&self, e: &EhrhartPolynomial) -> f64 {
        let mut p = vec![HpComplex::new(from_rational(e.volume()), fl(0.0))];
        for r in &self.roots {
            for _ in 0..r.multiplicity {
                let mut q = vec![HpComplex::zero(); p.len() + 1];
                for (i, a) in p.iter().enumerate() {
                    q[i + 1] = q[i + 1].add(a);
                    q[i] = q[i].sub(&a.mul(&r.hp));
                }
                p = q;
            }
        }
        let exact: Vec<Float> = e.coeffs().iter().map(from_rational).collect();
        let scale = exact.iter().fold(fl(0.0), |m, c| {
            let a = c.clone().abs();
            if a > m {
                a
            } else {
                m
            }
        });
        let mut worst: f64 = 0.0;
        for (c, got) in exact.iter().zip(&p) {
            let diff = HpComplex::new(&got.re - c, got.im.clone()).abs();
            let denom = if *c == fl(0.0) { scale.clone() } else { c.clone().abs() };
            worst = worst.max(to_f64(&(diff / denom)));
        }
        worst
    }
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let lead = r.last().unwrap().clone() / b.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lead * c;
        }
        r.pop();
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r
}

fn derivative(c: &[BigRational]) -> Vec<BigRational> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Number of distinct real roots, from a Sturm sequence over the rationals.
pub fn sturm_real_root_count(c: &[BigRational]) -> usize {
    let mut seq = vec![c.to_vec(), derivative(c)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let r: Vec<BigRational> = poly_rem(&seq[n - 2], &seq[n - 1]).into_iter().map(|x| -x).collect();
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    let changes = |signs: Vec<i8>| signs.windows(2).filter(|w| w[0] != w[1]).count();
    let at_pos: Vec<i8> = seq
        .iter()
        .map(|p| if p.last().unwrap().is_positive() { 1 } else { -1 })
        .collect();
    let at_neg: Vec<i8> = seq
        .iter()
        .map(|p| {
            let s = if p.last().unwrap().is_positive() { 1 } else { -1 };
            if (p.len() - 1) % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .collect();
    changes(at_neg) - changes(at_pos)
}

/// Discriminant of a quadratic or cubic.
pub fn discriminant(c: &[BigRational]) -> Option<BigRational> {
    let four = BigRational::from_integer(BigInt::from(4));
    match c.len() {
        3 => {
            let (cc, b, a) = (&c[0], &c[1], &c[2]);
            Some(b * b - &four * a * cc)
        }
        4 => {
            let (d, cc, b, a) = (&c[0], &c[1], &c[2], &c[3]);
            let k = |n: i64| BigRational::from_integer(BigInt::from(n));
            Some(
                k(18) * a * b * cc * d - k(4) * b * b * b * d + b * b * cc * cc
                    - k(4) * a * cc * cc * cc
                    - k(27) * a * a * d * d,
            )
        }
        _ => None,
    }
}

/// Distinct real root count of a polynomial of degree at most three, from the
/// sign of its discriminant.
fn closed_form_real_count(c: &[BigRational]) -> Option<usize> {
    match c.len() {
        2 => Some(1),
        3 => {
            let d = discriminant(c)?;
            Some(if d.is_positive() { 2 } else if d.is_zero() { 1 } else { 0 })
        }
        4 => {
            let d = discriminant(c)?;
            if d.is_positive() {
                Some(3)
            } else if d.is_negative() {
                Some(1)
            } else {
                // triple root iff b^2 = 3ac
                let three = BigRational::from_integer(BigInt::from(3));
                let triple = &c[2] * &c[2] == three * &c[3] * &c[1];
                Some(if triple { 1 } else { 2 })
            }
        }
        _ => None,
    }
}

/// Roots of a polynomial of degree one to three by explicit formulas, in f64.
pub fn closed_form_roots(c: &[BigRational]) -> Option<Vec<Complex64>> {
    let f: Vec<f64> = c.iter().map(|x| to_f64(&from_rational(x))).collect();
    match f.len() {
        2 => Some(vec![Complex64::new(-f[0] / f[1], 0.0)]),
        3 => {
            let (cc, b, a) = (f[0], f[1], f[2]);
            let sq = Complex64::new(b * b - 4.0 * a * cc, 0.0).sqrt();
            Some(vec![(-b + sq) / (2.0 * a), (-b - sq) / (2.0 * a)])
        }
        4 => {
            let (a2, a1, a0) = (f[2] / f[3], f[1] / f[3], f[0] / f[3]);
            let p = a1 - a2 * a2 / 3.0;
            let q = 2.0 * a2.powi(3) / 27.0 - a2 * a1 / 3.0 + a0;
            let shift = a2 / 3.0;
            let d = Complex64::new(q * q / 4.0 + p.powi(3) / 27.0, 0.0).sqrt();
            let mut u = (Complex64::new(-q / 2.0, 0.0) + d).cbrt();
            if u.norm() < 1e-300 {
                u = (Complex64::new(-q / 2.0, 0.0) - d).cbrt();
            }
            let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
            let mut out = Vec::with_capacity(3);
            let mut w = Complex64::new(1.0, 0.0);
            for _ in 0..3 {
                let t = if u.norm() < 1e-300 {
                    Complex64::new(0.0, 0.0)
                } else {
                    u * w - p / (3.0 * u * w)
                };
                out.push(t - shift);
                w *= omega;
            }
            Some(out)
        }
        _ => None,
    }
}

fn cluster(z: &[HpComplex]) -> Vec<(HpComplex, usize)> {
    let approx: Vec<Complex64> = z.iter().map(|x| x.to_c64()).collect();
    let n = z.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = approx[i].norm().max(1.0);
            if (approx[i] - approx[j]).norm() <= CLUSTER_RADIUS * scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(k, _)| *k == r) {
            Some((_, g)) => g.push(i),
            None => groups.push((r, vec![i])),
        }
    }
    groups
        .into_iter()
        .map(|(_, g)| {
            let m = g.len();
            let sum = g.iter().fold(HpComplex::zero(), |acc, &i| acc.add(&z[i]));
            (sum.scale(&(fl(1.0) / fl(m as f64))), m)
        })
        .collect()
}

/// All complex roots of `e`, with multiplicities and relative residuals.
///
/// Coordinates come from an f64 Aberth stage refined at 256 bits. The split
/// into real and non-real roots is decided exactly (Sturm sequence, and the
/// discriminant for degree at most three) and imposed on the numeric roots.
pub fn find_roots(e: &EhrhartPolynomial, tol: f64) -> Result<RootSet> {
    let n = e.degree();
    if n == 0 {
        return Err(Error::WrongDegree { expected: 1, got: 0 });
    }
    let lead = e.volume().clone();
    if lead.is_zero() {
        return Err(Error::InvalidInput("leading coefficient is zero".into()));
    }
    let monic: Vec<BigRational> = e.coeffs().iter().map(|c| c / &lead).collect();
    let hp: Vec<Float> = monic.iter().map(from_rational).collect();
    let f: Vec<f64> = hp.iter().map(to_f64).collect();

    let seeds = if n == 1 {
        vec![Complex64::new(-f[0], 0.0)]
    } else {
        aberth::aberth_f64(&f, 2000)
    };
    let refined = aberth::aberth_hp(&hp, &seeds, 200);
    let mut clusters = cluster(&refined);

    let real_count = match closed_form_real_count(&monic) {
        Some(k) => k,
        None => sturm_real_root_count(&monic),
    };
    // the real_count clusters nearest the axis are the real roots
    let closeness = |z: &HpComplex| {
        let c = z.to_c64();
        c.im.abs() / (1.0 + c.norm())
    };
    clusters.sort_by(|a, b| closeness(&a.0).total_cmp(&closeness(&b.0)));
    if clusters.len() < real_count {
        return Err(Error::NoConvergence { worst_residual: f64::INFINITY });
    }
    for (z, _) in clusters.iter_mut().take(real_count) {
        let gap = closeness(z);
        if gap > 1e-6 {
            return Err(Error::NoConvergence { worst_residual: gap });
        }
        z.im = fl(0.0);
    }
    // pair each upper half-plane root with its nearest lower partner
    let mut complex: Vec<(HpComplex, usize)> = clusters.split_off(real_count);
    let mut roots: Vec<(HpComplex, usize)> = clusters;
    while let Some((z, m)) = complex.pop() {
        let target = z.to_c64().conj();
        let partner = complex
            .iter()
            .enumerate()
            .filter(|(_, (w, k))| *k == m && (w.to_c64().im > 0.0) != (z.to_c64().im > 0.0))
            .min_by(|a, b| {
                (a.1 .0.to_c64() - target)
                    .norm()
                    .total_cmp(&(b.1 .0.to_c64() - target).norm())
            })
            .map(|(i, _)| i);
        let Some(i) = partner else {
            return Err(Error::NoConvergence { worst_residual: f64::INFINITY });
        };
        let (w, _) = complex.remove(i);
        let half = fl(0.5);
        let re = (&z.re + &w.re) * &half;
        let im = ((z.im.clone() - w.im.clone()) * &half).abs();
        roots.push((HpComplex::new(re.clone(), im.clone()), m));
        roots.push((HpComplex::new(re, -im), m));
    }

    let mut out: Vec<Root> = roots
        .into_iter()
        .map(|(z, m)| {
            let res = aberth::relative_residual(&hp, &z);
            Root::new(z, m, res)
        })
        .collect();
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let set = RootSet { roots: out, tol };
    let worst = set.worst_residual();
    if worst > tol || set.count() != n {
        return Err(Error::NoConvergence { worst_residual: worst });
    }
    if let Some(cf) = closed_form_roots(&monic) {
        for c in cf {
            let d = set
                .values()
                .iter()
                .map(|z| (z - c).norm() / (1.0 + c.norm()))
                .fold(f64::INFINITY, f64::min);
            if d > 1e-6 {
                return Err(Error::NoConvergence { worst_residual: d });
            }
        }
    }
    Ok(set)
}

/// Do all roots lie on `re = -1/2`?
pub fn critical_line_check(r: &RootSet, tol: f64) -> bool {
    r.roots.iter().all(|z| (z.re + 0.5).abs() <= tol)
}

/// Braun's disc: `|z + 1/2| <= n(n-1)/2`.
pub fn braun_disc_check(r: &RootSet, n: usize) -> bool {
    let radius = (n * n.saturating_sub(1)) as f64 / 2.0;
    r.roots
        .iter()
        .all(|z| (z.value() + 0.5).norm() <= radius + r.tol)
}

/// With `G(s) = vol prod (s + g_i)`: `prod g_i = 1/vol` and `sum g_i = G_{n-1}/vol`.
pub fn mean_identities_check(e: &EhrhartPolynomial, r: &RootSet) -> VerificationReport {
    let gammas: Vec<Complex64> = r.values().into_iter().map(|z| -z).collect();
    let prod: Complex64 = gammas.iter().product();
    let sum: Complex64 = gammas.iter().sum();
    let n = e.degree();
    let vol = e.volume();
    let want_prod = to_f64(&from_rational(&(BigRational::one() / vol)));
    let want_sum = to_f64(&from_rational(&(e.coeff(n - 1) / vol)));
    let rel = |got: Complex64, want: f64| (got - want).norm() / want.abs().max(1.0);
    let (ep, es) = (rel(prod, want_prod), rel(sum, want_sum));
    VerificationReport::new("root-means", format!("{e}"))
        .with("product", format!("{:.12e}", prod.re))
        .with("inverse_volume", format!("{want_prod:.12e}"))
        .with("sum", format!("{:.12e}", sum.re))
        .with("coefficient_ratio", format!("{want_sum:.12e}"))
        .check(ep <= DEFAULT_TOL && es <= DEFAULT_TOL)
}
