//! Ehrhart polynomials, h*-vectors and the simplex parallelepiped oracle.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::counting::{self, DEFAULT_WORK_CAP};
use crate::error::{Error, Result};
use crate::lattice::LatticePolytope;
use crate::linalg;
use crate::report::VerificationReport;

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Multiplies a monomial-basis polynomial by `(s + c)`.
fn mul_linear(p: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i + 1] += a;
        out[i] += a * c;
    }
    out
}

/// Monomial coefficients of `C(s + c, n) = (s+c)(s+c-1)...(s+c-n+1) / n!`.
fn binomial_poly(c: i64, n: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::one()];
    for j in 0..n as i64 {
        p = mul_linear(&p, &rat(c - j));
    }
    let f = BigRational::from_integer(factorial(n as u64));
    p.into_iter().map(|a| a / &f).collect()
}

/// `G(s) = sum_i G_i s^i` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    coeffs: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        EhrhartPolynomial { coeffs }
    }

    pub fn from_fractions(coeffs: &[(i64, i64)]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&(n, d)| frac(n, d)).collect())
    }

    /// The unique polynomial of degree `< values.len()` through `(k, values[k])`,
    /// by Newton forward differences.
    pub fn from_values(values: &[BigInt]) -> Self {
        let mut diffs: Vec<BigInt> = values.to_vec();
        let mut leading = Vec::with_capacity(values.len());
        while let Some(first) = diffs.first() {
            leading.push(first.clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let deg = values.len().saturating_sub(1);
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (j, d) in leading.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            // C(s, j) = s (s-1) ... (s-j+1) / j!
            let basis = binomial_poly(0, j);
            let d = BigRational::from_integer(d.clone());
            for (i, b) in basis.iter().enumerate() {
                coeffs[i] += b * &d;
            }
        }
        EhrhartPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// Leading coefficient, the volume of the polytope.
    pub fn volume(&self) -> &BigRational {
        self.coeffs.last().unwrap()
    }

    pub fn eval(&self, s: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * s + c)
    }

    pub fn eval_int(&self, k: i64) -> BigRational {
        self.eval(&rat(k))
    }

    /// Number of interior lattice points of `kP` via reciprocity.
    pub fn interior_value(&self, k: i64) -> BigRational {
        let v = self.eval_int(-k);
        if self.degree() % 2 == 0 {
            v
        } else {
            -v
        }
    }

    /// Coefficients of `(-1)^n G(-1 - s)`.
    pub fn reflected(&self) -> Self {
        let n = self.degree();
        let mut out = vec![BigRational::zero(); n + 1];
        // (-1 - s)^i expanded
        let mut power = vec![BigRational::one()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = mul_linear(&power, &BigRational::one())
                    .into_iter()
                    .map(|x| -x)
                    .collect();
            }
            for (j, p) in power.iter().enumerate() {
                out[j] += c * p;
            }
        }
        if n % 2 == 1 {
            out.iter_mut().for_each(|x| *x = -x.clone());
        }
        EhrhartPolynomial { coeffs: out }
    }

    /// Does `G(s) = (-1)^n G(-1 - s)` hold identically?
    pub fn satisfies_functional_equation(&self) -> bool {
        self.reflected() == *self
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let t = match i {
                0 => format!("{c}"),
                1 => format!("({c})s"),
                _ => format!("({c})s^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Ehrhart polynomial of `p` from the counts at `k = 0..=n`, checked against a
/// fresh count at `k = n + 1`.
pub fn interpolate(p: &LatticePolytope) -> Result<EhrhartPolynomial> {
    interpolate_capped(p, DEFAULT_WORK_CAP)
}

pub fn interpolate_capped(p: &LatticePolytope, cap: u128) -> Result<EhrhartPolynomial> {
    let n = p.dim() as u64;
    let values = (0..=n)
        .map(|k| counting::count_points_capped(p, k, cap).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    let e = EhrhartPolynomial::from_values(&values);
    let check = counting::count_points_capped(p, n + 1, cap)?;
    let predicted = e.eval_int(n as i64 + 1);
    if predicted != rat(check as i64) {
        return Err(Error::CountMismatch {
            k: n + 1,
            predicted: predicted.to_string(),
            counted: check,
        });
    }
    Ok(e)
}

/// Coefficients `a_0..a_n` of `G(k) = sum_i a_i C(k + n - i, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HStarVector {
    a: Vec<i64>,
}

impl HStarVector {
    pub fn new(a: Vec<i64>) -> Self {
        HStarVector { a }
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    /// `sum a_i = n! vol(P)`.
    pub fn sum(&self) -> i64 {
        self.a.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.degree();
        (0..=n).all(|i| self.a[i] == self.a[n - i])
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `a_i = sum_{j<=i} (-1)^j C(n+1, j) G(i - j)`.
pub fn to_hstar(e: &EhrhartPolynomial) -> Result<HStarVector> {
    let n = e.degree();
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let v = e.eval_int(k as i64);
        if !v.is_integer() {
            return Err(Error::NonIntegral { index: k, value: v.to_string() });
        }
        values.push(v.to_integer());
    }
    let mut a = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut s = BigInt::zero();
        for j in 0..=i {
            let term = binomial(n as u64 + 1, j as u64) * &values[i - j];
            if j % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        let v = s
            .to_i64()
            .ok_or_else(|| Error::Overflow(format!("h*-entry a_{i}")))?;
        if v < 0 {
            return Err(Error::NegativeEntry { index: i, value: v });
        }
        a.push(v);
    }
    Ok(HStarVector { a })
}

/// Inverse of [`to_hstar`].
pub fn from_hstar(h: &HStarVector) -> EhrhartPolynomial {
    let n = h.degree();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (i, &a) in h.a.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let basis = binomial_poly(n as i64 - i as i64, n);
        for (j, b) in basis.iter().enumerate() {
            coeffs[j] += b * rat(a);
        }
    }
    EhrhartPolynomial { coeffs }
}

/// h*-vector of a lattice simplex from its half-open fundamental parallelepiped.
///
/// With generators `g_j = (v_j, 1)` the lattice points of
/// `{sum lambda_j g_j : 0 <= lambda_j < 1}` are in bijection with
/// `Z^{n+1} / <g_j>`; each one is represented by the numerators of its
/// barycentric coordinates `lambda = adj(M) z / det M` modulo `|det M|`, and
/// its height is `sum lambda_j`. The group is enumerated by closing the images
/// of the unit vectors under addition.
pub fn hstar_simplex_oracle(s: &LatticePolytope) -> Result<HStarVector> {
    let n = s.dim();
    if !s.is_simplex() {
        return Err(Error::NotASimplex { vertices: s.vertices().len(), dim: n });
    }
    // Columns are the generators.
    let m: Vec<Vec<BigInt>> = (0..=n)
        .map(|i| {
            s.vertices()
                .iter()
                .map(|v| if i < n { BigInt::from(v[i]) } else { BigInt::one() })
                .collect()
        })
        .collect();
    let (adj, det) = linalg::adjugate(&m);
    let d = det.abs();
    let sign = if det.is_negative() { -BigInt::one() } else { BigInt::one() };
    let order = d
        .to_u64()
        .ok_or_else(|| Error::Overflow("simplex normalized volume".into()))?;
    let gens: Vec<Vec<u64>> = (0..=n)
        .map(|c| {
            (0..=n)
                .map(|j| (&adj[j][c] * &sign).mod_floor(&d).to_u64().unwrap())
                .collect()
        })
        .collect();

    let zero = vec![0u64; n + 1];
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(zero.clone());
    queue.push_back(zero);
    let mut a = vec![0i64; n + 1];
    while let Some(w) = queue.pop_front() {
        let height: u64 = w.iter().sum::<u64>() / order;
        a[height as usize] += 1;
        for g in &gens {
            let next: Vec<u64> = w.iter().zip(g).map(|(x, y)| (x + y) % order).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    debug_assert_eq!(seen.len() as u64, order);
    Ok(HStarVector { a })
}

/// Hibi's lower bound `a_i >= a_1` (polytopes with interior points) and the
/// palindromic test `a_i = a_{n-i}`.
pub fn hibi_checks(h: &HStarVector, has_interior: bool) -> Vec<VerificationReport> {
    let n = h.degree();
    let a = h.entries();
    let lower = VerificationReport::new("hibi-lower-bound", h.to_string())
        .with("a", h);
    let lower = if has_interior {
        let ok = (1..n).all(|i| a[i] >= a[1]);
        lower.check(ok)
    } else {
        lower.status(crate::report::Status::NotApplicable)
    };
    let symmetric = VerificationReport::new("hibi-symmetry", h.to_string())
        .with("a", h)
        .check(h.is_symmetric());
    vec![lower, symmetric]
}
