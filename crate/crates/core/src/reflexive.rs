//! Reflexivity tests and the critical-line criteria for reflexive polytopes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::counting;
use crate::ehrhart::{frac, interpolate, rat, to_hstar, EhrhartPolynomial};
use crate::error::{Error, Result};
use crate::lattice::{IntPoint, LatticePolytope};
use crate::report::{Status, VerificationReport};
use crate::roots::{critical_line_check, find_roots, DEFAULT_TOL};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityReport {
    pub is_reflexive: bool,
    pub witness_center: Option<IntPoint>,
    pub dual_integral: bool,
    pub hibi_symmetric: bool,
    pub functional_equation: bool,
    /// `G_{n-1} = (n/2) vol`.
    pub volume_identity: bool,
    /// `G(kP) = G(int (k+1)P)` for `k = 1, 2`.
    pub dilation_identity: bool,
}

/// Decides reflexivity (up to a lattice translation) four ways and checks
/// that they agree.
pub fn reflexivity_report(p: &LatticePolytope) -> Result<ReflexivityReport> {
    let mut centers = Vec::new();
    for c in p.interior_lattice_points() {
        if p.polar_dual(&c)?.iter().all(|v| v.is_integral()) {
            centers.push(c);
        }
    }
    assert!(centers.len() <= 1, "a reflexive polytope has exactly one interior lattice point");
    let dual_integral = !centers.is_empty();

    let e = interpolate(p)?;
    let h = to_hstar(&e)?;
    let n = p.dim();
    let volume_identity =
        *e.coeff(n - 1) == e.volume() * BigRational::new(BigInt::from(n), BigInt::from(2));
    let mut dilation_identity = true;
    for k in 1..=2 {
        dilation_identity &= counting::count_points(p, k)? == counting::count_interior(p, k + 1)?;
    }
    let report = ReflexivityReport {
        is_reflexive: dual_integral,
        witness_center: centers.pop(),
        dual_integral,
        hibi_symmetric: h.is_symmetric(),
        functional_equation: e.satisfies_functional_equation(),
        volume_identity,
        dilation_identity,
    };
    assert!(
        report.dual_integral == report.hibi_symmetric
            && report.hibi_symmetric == report.functional_equation,
        "reflexivity tests disagree on {}: {report:?}",
        p.label()
    );
    Ok(report)
}

/// The exact criterion deciding whether all roots of a reflexive polytope's
/// Ehrhart polynomial have real part `-1/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalLineCriterion {
    pub dim: usize,
    pub holds: bool,
    #[serde(with = "crate::serial::rational")]
    pub volume: BigRational,
    #[serde(with = "crate::serial::bigint")]
    pub lattice_points: BigInt,
    /// `n <= 3`: `vol <= 2^n`.
    pub volume_bound: Option<bool>,
    /// `n = 4`: `G(s)/vol = u^2 + 2 mu u + beta` with `u = s^2 + s`.
    #[serde(with = "crate::serial::opt_rational")]
    pub mu: Option<BigRational>,
    #[serde(with = "crate::serial::opt_rational")]
    pub beta: Option<BigRational>,
    /// `mu^2 >= beta`, i.e. `(G - 1 - 4 vol)^2 >= 16 vol`.
    pub discriminant_condition: Option<bool>,
    /// `2 G <= 9 vol + 18`, i.e. `(mu - 1/4)^2 >= mu^2 - beta`.
    pub doubled_hibi_condition: Option<bool>,
    /// `mu >= 1/4`, needed when taking the square root of the previous line.
    pub mu_guard: Option<bool>,
}

fn require_reflexive(p: &LatticePolytope) -> Result<EhrhartPolynomial> {
    if p.dim() > 4 {
        return Err(Error::DimensionUnsupported(p.dim()));
    }
    if !reflexivity_report(p)?.is_reflexive {
        return Err(Error::NotReflexive);
    }
    interpolate(p)
}

pub fn critical_line_criterion(p: &LatticePolytope) -> Result<CriticalLineCriterion> {
    let e = require_reflexive(p)?;
    let n = p.dim();
    let vol = e.volume().clone();
    let g = e.eval_int(1).to_integer();
    let mut out = CriticalLineCriterion {
        dim: n,
        holds: false,
        volume: vol.clone(),
        lattice_points: g.clone(),
        volume_bound: None,
        mu: None,
        beta: None,
        discriminant_condition: None,
        doubled_hibi_condition: None,
        mu_guard: None,
    };
    if n <= 3 {
        let ok = vol <= rat(1 << n);
        out.volume_bound = Some(ok);
        out.holds = ok;
        return Ok(out);
    }
    let g = BigRational::from_integer(g);
    let mu = (&g - rat(1) - rat(4) * &vol) / (rat(4) * &vol);
    let beta = BigRational::one() / &vol;
    let disc = &mu * &mu >= beta;
    let quarter = frac(1, 4);
    let guard = mu >= quarter;
    let surd = (&mu - &quarter) * (&mu - &quarter) >= &mu * &mu - &beta;
    debug_assert_eq!(surd, rat(2) * &g <= rat(9) * &vol + rat(18));
    out.holds = disc && guard && surd;
    out.mu = Some(mu);
    out.beta = Some(beta);
    out.discriminant_condition = Some(disc);
    out.doubled_hibi_condition = Some(surd);
    out.mu_guard = Some(guard);
    Ok(out)
}

/// Factors of `G(s, P) / vol(P)` for a reflexive 3- or 4-polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Factor {
    /// `s - root`
    Linear {
        #[serde(with = "crate::serial::rational")]
        root: BigRational,
    },
    /// `s^2 + s + c`
    Quadratic {
        #[serde(with = "crate::serial::rational")]
        c: BigRational,
    },
    /// The pair `s^2 + s + mu ± sqrt(disc)`.
    SurdPair {
        #[serde(with = "crate::serial::rational")]
        mu: BigRational,
        #[serde(with = "crate::serial::rational")]
        disc: BigRational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub factors: Vec<Factor>,
    /// Whether the factors multiply back to `G(s)/vol` exactly.
    pub exact: bool,
    /// For the surd pair: `mu^2 - beta < 0`, so the quadratics have
    /// non-real coefficients.
    pub complex_coefficients: bool,
}

fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn reflexive_factorization(p: &LatticePolytope) -> Result<Factorization> {
    let n = p.dim();
    if n != 3 && n != 4 {
        return Err(Error::DimensionUnsupported(n));
    }
    let e = require_reflexive(p)?;
    let vol = e.volume().clone();
    let target: Vec<BigRational> = e.coeffs().iter().map(|c| c / &vol).collect();
    if n == 3 {
        let c = rat(2) / &vol;
        let got = mul(&[frac(1, 2), rat(1)], &[c.clone(), rat(1), rat(1)]);
        return Ok(Factorization {
            factors: vec![Factor::Linear { root: frac(-1, 2) }, Factor::Quadratic { c }],
            exact: got == target,
            complex_coefficients: false,
        });
    }
    let mu = e.coeff(1) / (rat(2) * &vol);
    let beta = BigRational::one() / &vol;
    let disc = &mu * &mu - &beta;
    // u^2 + 2 mu u + beta with u = s^2 + s
    let u = [rat(0), rat(1), rat(1)];
    let u2 = mul(&u, &u);
    let mut got = vec![BigRational::zero(); 5];
    for (i, c) in u2.iter().enumerate() {
        got[i] += c;
    }
    for (i, c) in u.iter().enumerate() {
        got[i] += rat(2) * &mu * c;
    }
    got[0] += &beta;
    Ok(Factorization {
        factors: vec![Factor::SurdPair { mu, disc: disc.clone() }],
        exact: got == target,
        complex_coefficients: disc.is_negative(),
    })
}

/// If a 3-polytope's non-real roots have real part `-1`, then `2P` is
/// reflexive and all its roots lie on `re = -1/2`.
pub fn doubled_polytope_bridge(p: &LatticePolytope) -> Result<VerificationReport> {
    let report = VerificationReport::new("doubled-polytope-bridge", p.label());
    if p.dim() != 3 {
        return Ok(report.with("reason", "dimension is not 3").status(Status::NotApplicable));
    }
    let e = interpolate(p)?;
    let r = find_roots(&e, DEFAULT_TOL)?;
    let complex: Vec<_> = r.roots.iter().filter(|z| !z.is_real()).collect();
    let applies = !complex.is_empty() && complex.iter().all(|z| (z.re + 1.0).abs() <= DEFAULT_TOL);
    if !applies {
        return Ok(report
            .with("reason", "non-real roots do not have real part -1")
            .status(Status::NotApplicable));
    }
    let q = p.dilate(2)?;
    let refl = reflexivity_report(&q)?;
    let rq = find_roots(&interpolate(&q)?, DEFAULT_TOL)?;
    let on_line = critical_line_check(&rq, DEFAULT_TOL);
    Ok(report
        .with("doubled_reflexive", refl.is_reflexive)
        .with("doubled_on_critical_line", on_line)
        .check(refl.is_reflexive && on_line))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn cubes_crosspolytopes_and_simplices_are_reflexive() {
        for n in 1..=4 {
            for p in [make_box_q(n, 1).unwrap(), make_cross_star(n, 1).unwrap(), make_sn(n, 1).unwrap()] {
                let r = reflexivity_report(&p).unwrap();
                assert!(r.is_reflexive, "{}", p.label());
                assert!(r.volume_identity && r.dilation_identity);
                assert_eq!(r.witness_center, Some(IntPoint::origin(n)));
            }
        }
        let shifted = make_sn(3, 1).unwrap().translate(&[2, -1, 5]).unwrap();
        assert_eq!(reflexivity_report(&shifted).unwrap().witness_center, Some(IntPoint(vec![2, -1, 5])));
    }

    #[test]
    fn non_reflexive() {
        let t = reflexivity_report(&make_reeve(3).unwrap()).unwrap();
        assert!(!t.is_reflexive && t.witness_center.is_none());
        let s = reflexivity_report(&make_sn(3, 2).unwrap()).unwrap();
        assert!(!s.is_reflexive && !s.volume_identity);
        assert!(matches!(critical_line_criterion(&make_reeve(2).unwrap()), Err(Error::NotReflexive)));
    }

    #[test]
    fn four_dimensional_examples() {
        let e1 = critical_line_criterion(&make_e1()).unwrap();
        assert!(!e1.holds);
        assert_eq!(e1.discriminant_condition, Some(true));
        assert_eq!(e1.doubled_hibi_condition, Some(false));
        assert_eq!(e1.mu, Some(frac(5, 18)));
        let e2 = critical_line_criterion(&make_e2()).unwrap();
        assert!(!e2.holds);
        assert_eq!(e2.discriminant_condition, Some(false));
        assert_eq!(e2.doubled_hibi_condition, Some(true));
        assert_eq!(e2.mu, Some(frac(1, 2)));
        assert_eq!(e2.beta, Some(frac(3, 4)));
    }

    #[test]
    fn planar_cases() {
        assert!(!critical_line_criterion(&make_triangle_s()).unwrap().holds);
        assert!(critical_line_criterion(&make_box_q(2, 1).unwrap()).unwrap().holds);
        assert!(critical_line_criterion(&make_box_q(3, 1).unwrap()).unwrap().holds);
    }

    #[test]
    fn factorizations() {
        let cube = reflexive_factorization(&make_box_q(3, 1).unwrap()).unwrap();
        assert!(cube.exact);
        assert_eq!(cube.factors[1], Factor::Quadratic { c: frac(1, 4) });
        let oct = reflexive_factorization(&make_cross_star(3, 1).unwrap()).unwrap();
        assert_eq!(oct.factors[1], Factor::Quadratic { c: frac(3, 2) });
        let e2 = reflexive_factorization(&make_e2()).unwrap();
        assert!(e2.exact && e2.complex_coefficients);
        assert!(reflexive_factorization(&make_e1()).unwrap().exact);
        assert!(matches!(
            reflexive_factorization(&make_box_q(2, 1).unwrap()),
            Err(Error::DimensionUnsupported(2))
        ));
    }

    #[test]
    fn doubled_witnesses() {
        for k in 2..=5 {
            let r = doubled_polytope_bridge(&make_realpart_minus1_witness(k).unwrap()).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let r = doubled_polytope_bridge(&make_pyramid_p(3).unwrap()).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
    }
}
