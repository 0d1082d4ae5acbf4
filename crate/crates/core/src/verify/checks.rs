//! Individual claim checks. Each takes an analysed instance and returns a
//! report, or `None` when the claim does not apply to it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;

use crate::counting::{count_interior, count_points, min_dilate_with_interior};
use crate::ehrhart::{
    binomial, frac, from_hstar, hstar_simplex_oracle, interpolate, rat, to_hstar,
    EhrhartPolynomial, HStarVector,
};
use crate::error::{Error, Result};
use crate::lattice::{LatticePolytope, PolytopeJson};
use crate::linalg::{inverse, to_big_matrix, to_rat_matrix};
use crate::reflexive::{critical_line_criterion, reflexivity_report, ReflexivityReport};
use crate::report::{Status, VerificationReport};
use crate::roots::{
    braun_disc_check, classify_3d, critical_line_check, find_roots, mean_identities_check,
    RegionTag, RootSet, DEFAULT_TOL,
};

use super::random::random_unimodular;

/// Relative coefficient error allowed when rebuilding `G` from its roots.
pub const RECONSTRUCTION_TOL: f64 = 1e-8;

/// Matrices tried before an oversized unimodular image counts as an error.
const UNIMODULAR_ATTEMPTS: usize = 16;

/// Everything the checks need about one polytope, computed once.
pub struct Instance {
    pub p: LatticePolytope,
    pub e: EhrhartPolynomial,
    pub h: HStarVector,
    pub interior: u64,
    pub roots: RootSet,
    /// Only computed for polytopes with interior points.
    pub reflexivity: Option<ReflexivityReport>,
}

impl Instance {
    pub fn analyze(p: LatticePolytope) -> Result<Self> {
        let e = interpolate(&p)?;
        let h = to_hstar(&e)?;
        let interior = count_interior(&p, 1)?;
        let roots = find_roots(&e, DEFAULT_TOL)?;
        let reflexivity = if interior > 0 { Some(reflexivity_report(&p)?) } else { None };
        Ok(Instance { p, e, h, interior, roots, reflexivity })
    }

    pub fn label(&self) -> &str {
        self.p.label()
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }

    fn report(&self, claim: &str) -> VerificationReport {
        VerificationReport::new(claim, self.label()).with("hstar", &self.h)
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexivity.as_ref().is_some_and(|r| r.is_reflexive)
    }

    fn is_crosspolytope(&self) -> bool {
        self.p.is_origin_symmetric() && self.p.vertices().len() == 2 * self.dim()
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn polytope_json(p: &LatticePolytope) -> String {
    serde_json::to_string(&PolytopeJson::from(p.clone())).unwrap_or_default()
}

/// Interior counts of `kP` against `(-1)^n G(-k)` for `k = 1..=n+1`.
pub fn check_reciprocity(inst: &Instance) -> Result<VerificationReport> {
    let n = inst.dim() as u64;
    let mut counted = Vec::new();
    let mut predicted = Vec::new();
    for k in 1..=n + 1 {
        counted.push(BigRational::from_integer(count_interior(&inst.p, k)?.into()));
        predicted.push(inst.e.interior_value(k as i64));
    }
    Ok(inst
        .report("reciprocity")
        .with("counted", list(&counted))
        .with("predicted", list(&predicted))
        .check(counted == predicted))
}

/// `a_0 = 1`, `a_1 = #P - n - 1`, `a_n = #int P`, `sum a_i = n! vol`,
/// `a_i >= 0` and the round trip back to `G`.
pub fn check_hstar_identities(
    label: &str,
    e: &EhrhartPolynomial,
    h: &HStarVector,
    points: u64,
    interior: u64,
    normalized_volume: &BigInt,
) -> VerificationReport {
    let n = e.degree();
    let a = h.entries();
    let mut broken = Vec::new();
    if a.len() != n + 1 {
        broken.push("length");
    } else {
        if a[0] != 1 {
            broken.push("a0");
        }
        if n >= 1 && a[1] as i128 != points as i128 - n as i128 - 1 {
            broken.push("a1");
        }
        if a[n] as i128 != interior as i128 {
            broken.push("an");
        }
        if BigInt::from(h.sum()) != *normalized_volume {
            broken.push("sum");
        }
        if a.iter().any(|&x| x < 0) {
            broken.push("nonnegative");
        }
        if from_hstar(h) != *e {
            broken.push("round_trip");
        }
    }
    VerificationReport::new("hstar-identities", label)
        .with("hstar", h)
        .with("points", points)
        .with("interior", interior)
        .with("normalized_volume", normalized_volume)
        .with("broken", broken.join(","))
        .check(broken.is_empty())
}

pub fn check_hstar(inst: &Instance) -> Result<VerificationReport> {
    Ok(check_hstar_identities(
        inst.label(),
        &inst.e,
        &inst.h,
        count_points(&inst.p, 1)?,
        inst.interior,
        &inst.p.normalized_volume(),
    ))
}

/// Is there an affine unimodular map taking simplex `a` onto simplex `b`?
pub fn unimodular_equivalent_simplices(a: &LatticePolytope, b: &LatticePolytope) -> bool {
    let n = a.dim();
    if b.dim() != n || !a.is_simplex() || !b.is_simplex() {
        return false;
    }
    let va = a.vertices();
    let edges = |v: &[Vec<i64>]| -> Vec<Vec<i64>> {
        // rows j, columns i: coordinate j of v_i - v_0
        (0..n).map(|j| (1..=n).map(|i| v[i][j] - v[0][j]).collect()).collect()
    };
    let ea: Vec<Vec<i64>> = edges(&va.iter().map(|v| v.0.clone()).collect::<Vec<_>>());
    let Some(ea_inv) = inverse(&to_rat_matrix(&to_big_matrix(&ea))) else {
        return false;
    };
    let mut perm: Vec<usize> = (0..=n).collect();
    loop {
        let vb: Vec<Vec<i64>> = perm.iter().map(|&i| b.vertices()[i].0.clone()).collect();
        let eb = to_rat_matrix(&to_big_matrix(&edges(&vb)));
        let u_integral = (0..n).all(|r| {
            (0..n).all(|c| {
                let x: BigRational = (0..n).map(|k| &eb[r][k] * &ea_inv[k][c]).sum();
                x.is_integer()
            })
        });
        if u_integral && a.normalized_volume() == b.normalized_volume() {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `n! vol >= n l + 1` for `l >= 1`; at equality `h* = (1, l, .., l)`, and for
/// `l = 1` equality only on images of `S_n(1)`.
pub fn check_volume_lower_bound(inst: &Instance) -> Result<Option<VerificationReport>> {
    let l = inst.interior;
    if l == 0 {
        return Ok(None);
    }
    let n = inst.dim();
    let nvol = inst.p.normalized_volume();
    let bound = BigInt::from(n as u64 * l + 1);
    let mut ok = nvol >= bound;
    let equality = nvol == bound;
    let mut report = inst
        .report("volume-lower-bound")
        .with("normalized_volume", &nvol)
        .with("bound", &bound)
        .with("equality", equality);
    if equality {
        let flat = (1..=n).all(|i| inst.h.entries()[i] as u64 == l);
        report = report.with("equality_hstar_flat", flat);
        ok &= flat;
        if l == 1 {
            let s = crate::families::make_sn(n, 1)?;
            let image = unimodular_equivalent_simplices(&s, &inst.p);
            report = report.with("equality_is_sn1_image", image);
            ok &= image;
        }
    }
    Ok(Some(report.check(ok)))
}

/// `a_i >= a_1` for `1 <= i <= n - 1` when there is an interior point.
pub fn check_hibi_lower_bound(inst: &Instance) -> Option<VerificationReport> {
    let n = inst.dim();
    if inst.interior == 0 || n < 2 {
        return None;
    }
    let a = inst.h.entries();
    Some(inst.report("hibi-lower-bound").check((1..n).all(|i| a[i] >= a[1])))
}

/// `a_i >= C(n, i)` for origin-symmetric polytopes.
pub fn check_symmetric_lower_bound(inst: &Instance) -> Option<VerificationReport> {
    if !inst.p.is_origin_symmetric() {
        return None;
    }
    let n = inst.dim() as u64;
    let ok = inst
        .h
        .entries()
        .iter()
        .enumerate()
        .all(|(i, &a)| BigInt::from(a) >= binomial(n, i as u64));
    Some(inst.report("symmetric-lower-bound").check(ok))
}

/// `a_i + a_{n-i} >= C(n, i)(a_0 + a_n)` for lattice crosspolytopes.
pub fn check_crosspolytope_pairs(inst: &Instance) -> Option<VerificationReport> {
    if !inst.is_crosspolytope() {
        return None;
    }
    let n = inst.dim();
    let a = inst.h.entries();
    let ends = BigInt::from(a[0] + a[n]);
    let ok = (0..=n).all(|i| BigInt::from(a[i] + a[n - i]) >= binomial(n as u64, i as u64) * &ends);
    Some(inst.report("crosspolytope-pairs").check(ok))
}

/// Monitored only: `n! vol >= 2^{n-1}(l + 1)` for origin-symmetric polytopes.
/// A violation is a discovery, not a failure.
pub fn check_symmetric_volume_conjecture(inst: &Instance) -> Option<VerificationReport> {
    if !inst.p.is_origin_symmetric() {
        return None;
    }
    let n = inst.dim();
    let nvol = inst.p.normalized_volume();
    let bound = BigInt::from(1u64 << (n - 1)) * BigInt::from(inst.interior + 1);
    let report = inst
        .report("symmetric-volume-conjecture")
        .with("normalized_volume", &nvol)
        .with("bound", &bound);
    Some(if nvol >= bound {
        report.check(true)
    } else {
        report.with("polytope", polytope_json(&inst.p)).status(Status::Discovery)
    })
}

/// Group enumeration of the fundamental parallelepiped against interpolation.
pub fn check_simplex_oracle(inst: &Instance) -> Result<Option<VerificationReport>> {
    if !inst.p.is_simplex() {
        return Ok(None);
    }
    let oracle = hstar_simplex_oracle(&inst.p)?;
    Ok(Some(inst.report("oracle-agreement").with("oracle", &oracle).check(oracle == inst.h)))
}

pub fn check_root_means(inst: &Instance) -> VerificationReport {
    let mut r = mean_identities_check(&inst.e, &inst.roots);
    r.instance = inst.label().to_string();
    r
}

pub fn check_root_reconstruction(inst: &Instance) -> VerificationReport {
    let err = inst.roots.reconstruction_error(&inst.e);
    inst.report("root-reconstruction")
        .with("relative_error", format!("{err:.3e}"))
        .with("worst_residual", format!("{:.3e}", inst.roots.worst_residual()))
        .check(err <= RECONSTRUCTION_TOL)
}

/// Roots in the disc `|z + 1/2| <= n(n-1)/2`, for `n >= 2`.
pub fn check_disc_bound(inst: &Instance) -> Option<VerificationReport> {
    let n = inst.dim();
    if n < 2 {
        return None;
    }
    let far = inst
        .roots
        .roots
        .iter()
        .map(|z| (z.value() + 0.5).norm())
        .fold(0.0, f64::max);
    Some(
        inst.report("disc-bound")
            .with("max_distance", format!("{far:.12}"))
            .with("radius", (n * (n - 1)) as f64 / 2.0)
            .check(braun_disc_check(&inst.roots, n)),
    )
}

/// `G_{n-1}` is half the sum of the relative facet volumes, each read off as
/// the leading coefficient of the facet's own Ehrhart polynomial.
pub fn verify_facet_coefficient(p: &LatticePolytope, e: &EhrhartPolynomial) -> Result<VerificationReport> {
    let n = p.dim();
    let mut total = BigRational::zero();
    for i in 0..p.halfspaces().len() {
        let f = p.flatten_facet(i)?;
        total += interpolate(&f)?.volume();
    }
    let half = total / rat(2);
    let got = e.coeff(n - 1).clone();
    Ok(VerificationReport::new("facet-sum", p.label())
        .with("coefficient", &got)
        .with("half_facet_volume", &half)
        .check(got == half))
}

/// With `k` the smallest dilate having an interior point:
/// `G_{n-1} <= (n k / 2) vol`, and `G_2 >= 1` in dimension 3.
pub fn verify_interior_dilate_bound(p: &LatticePolytope, e: &EhrhartPolynomial) -> Result<VerificationReport> {
    let n = p.dim();
    let k = min_dilate_with_interior(p)?;
    let bound = e.volume() * frac((n as u64 * k) as i64, 2);
    let g = e.coeff(n - 1);
    let mut ok = *g <= bound;
    if n == 3 {
        ok &= *g >= rat(1);
    }
    Ok(VerificationReport::new("interior-dilate-bound", p.label())
        .with("k", k)
        .with("coefficient", g)
        .with("bound", &bound)
        .check(ok))
}

/// Coefficient inequalities for 3-polytopes with interior points:
/// `G_1 <= G_2 + G_3 + 2/3 <= (5/2) G_3 + 2/3`, `l <= 2 G_3 - 1/3` with the
/// first inequality tight iff `vol = (3l + 1)/6`, and `G(-1/(3 vol)) >= 0`
/// with equality iff `h* = (1, 1, 1, 1)`.
pub fn verify_dim3_coefficients(inst: &Instance) -> Option<VerificationReport> {
    if inst.dim() != 3 || inst.interior == 0 {
        return None;
    }
    let g = inst.e.coeffs();
    let l = rat(inst.interior as i64);
    let two_thirds = frac(2, 3);
    let middle = &g[2] + &g[3] + &two_thirds;
    let first = g[1] <= middle;
    let second = middle <= frac(5, 2) * &g[3] + &two_thirds;
    let third = l <= rat(2) * &g[3] - frac(1, 3);
    let tight = g[1] == middle;
    let tight_ok = tight == (g[3] == (rat(3) * &l + rat(1)) / rat(6));
    let at = -(BigRational::one() / (rat(3) * &g[3]));
    let value = inst.e.eval(&at);
    let nonneg = !value.is_negative();
    let zero_ok = value.is_zero() == (inst.h.entries() == [1, 1, 1, 1]);
    let ok = first && second && third && tight_ok && nonneg && zero_ok;
    Some(
        inst.report("dim3-coefficient-bounds")
            .with("G", list(g))
            .with("first", first)
            .with("second", second)
            .with("interior_bound", third)
            .with("tight", tight)
            .with("value_at_minus_inverse_3vol", &value)
            .check(ok),
    )
}

/// Root location for 3-polytopes: every root in `[-3, -1]` or in
/// `{-1 <= a < 1, |z|^2 <= 3}`, `|z|^2 = 3` only for `h* = (1, 1, 1, 1)`, and
/// the sharper region when there are no interior points.
pub fn verify_dim3_region(inst: &Instance) -> Result<Option<VerificationReport>> {
    if inst.dim() != 3 {
        return Ok(None);
    }
    let v = classify_3d(&inst.roots, inst.interior)?;
    let boundary = v.roots.iter().any(|r| r.tags.contains(&RegionTag::DiscBoundary));
    let boundary_ok = inst.interior == 0 || !boundary || inst.h.entries() == [1, 1, 1, 1];
    let tags: Vec<String> = v
        .roots
        .iter()
        .map(|r| r.tags.iter().map(|t| t.as_str()).collect::<Vec<_>>().join("+"))
        .collect();
    Ok(Some(
        inst.report("dim3-root-region")
            .with("interior_points", inst.interior)
            .with("tags", tags.join(" "))
            .with("in_region", v.in_region)
            .with(
                "no_interior_region",
                v.no_interior_region.map_or("n/a".into(), |b| b.to_string()),
            )
            .check(v.holds() && boundary_ok),
    ))
}

/// For 3-polytopes with interior points: three real roots lie all in `(-1, 0)`
/// or one there and two in `(0, 1)`; a single real root lies in `(-1, 0)` and
/// the other two have real part in `(-3/4, 1/2)`.
pub fn check_dim3_real_roots(inst: &Instance) -> Option<VerificationReport> {
    if inst.dim() != 3 || inst.interior == 0 {
        return None;
    }
    let tol = inst.roots.tol;
    let inside = |x: f64, lo: f64, hi: f64| x > lo - tol && x < hi + tol;
    let values = inst.roots.values();
    let real: Vec<f64> = values.iter().filter(|z| z.im == 0.0).map(|z| z.re).collect();
    let ok = match real.len() {
        3 => {
            let neg = real.iter().filter(|&&x| inside(x, -1.0, 0.0)).count();
            let pos = real.iter().filter(|&&x| inside(x, 0.0, 1.0)).count();
            neg == 3 || (neg == 1 && pos == 2)
        }
        1 => {
            inside(real[0], -1.0, 0.0)
                && values
                    .iter()
                    .filter(|z| z.im != 0.0)
                    .all(|z| inside(z.re, -0.75, 0.5))
        }
        _ => false,
    };
    Some(
        inst.report("dim3-real-roots")
            .with("real_roots", real.len())
            .check(ok),
    )
}

/// For polytopes with interior points: the volume identity
/// `G_{n-1} = (n/2) vol` holds exactly for reflexive ones, which also satisfy
/// `#kP = #int (k+1)P`. Agreement of the four reflexivity tests is asserted
/// inside `reflexivity_report`.
pub fn check_reflexivity(inst: &Instance) -> Option<VerificationReport> {
    let r = inst.reflexivity.as_ref()?;
    let ok = r.volume_identity == r.is_reflexive && (!r.is_reflexive || r.dilation_identity);
    Some(
        inst.report("reflexivity-agreement")
            .with("reflexive", r.is_reflexive)
            .with("volume_identity", r.volume_identity)
            .with("dilation_identity", r.dilation_identity)
            .check(ok),
    )
}

/// The exact criterion for reflexive polytopes in dimension at most 4 agrees
/// with the located roots.
pub fn check_critical_line_criterion(inst: &Instance) -> Result<Option<VerificationReport>> {
    if !inst.is_reflexive() || inst.dim() > 4 {
        return Ok(None);
    }
    let c = critical_line_criterion(&inst.p)?;
    let numeric = critical_line_check(&inst.roots, DEFAULT_TOL);
    Ok(Some(
        inst.report("critical-line-criterion")
            .with("criterion", c.holds)
            .with("roots_on_line", numeric)
            .check(c.holds == numeric),
    ))
}

/// All roots on `re = -1/2` forces reflexivity and `vol <= 2^n`.
pub fn check_critical_line_reflexive(inst: &Instance) -> Option<VerificationReport> {
    if !critical_line_check(&inst.roots, DEFAULT_TOL) {
        return None;
    }
    let n = inst.dim();
    let small = *inst.e.volume() <= rat(1 << n);
    let refl = inst.is_reflexive();
    Some(
        inst.report("critical-line-reflexive")
            .with("reflexive", refl)
            .with("volume", inst.e.volume())
            .check(refl && small),
    )
}

/// `G` is unchanged by a random affine unimodular map.
pub fn check_unimodular_invariance(inst: &Instance, rng: &mut ChaCha8Rng) -> Result<VerificationReport> {
    use rand::Rng;
    let n = inst.dim();
    let mut attempt = 1;
    loop {
        let u = random_unimodular(rng, n);
        let t: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let q = inst.p.apply_unimodular(&u, &t)?;
        // a shear can blow up the bounding box; redraw rather than give up
        let e = match interpolate(&q) {
            Err(Error::WorkCapExceeded { .. }) if attempt < UNIMODULAR_ATTEMPTS => {
                attempt += 1;
                continue;
            }
            r => r?,
        };
        return Ok(inst
            .report("unimodular-invariance")
            .with("matrix", format!("{u:?}"))
            .with("shift", format!("{t:?}"))
            .with("attempts", attempt)
            .check(e == inst.e));
    }
}

/// Runs every applicable per-instance check.
pub fn instance_reports(inst: &Instance, rng: &mut ChaCha8Rng) -> Result<Vec<VerificationReport>> {
    let mut out = vec![
        check_reciprocity(inst)?,
        check_hstar(inst)?,
        check_root_means(inst),
        check_root_reconstruction(inst),
        check_unimodular_invariance(inst, rng)?,
    ];
    if inst.dim() >= 2 {
        out.push(verify_facet_coefficient(&inst.p, &inst.e)?);
    }
    out.push(verify_interior_dilate_bound(&inst.p, &inst.e)?);
    out.extend(check_volume_lower_bound(inst)?);
    out.extend(check_hibi_lower_bound(inst));
    out.extend(check_symmetric_lower_bound(inst));
    out.extend(check_crosspolytope_pairs(inst));
    out.extend(check_symmetric_volume_conjecture(inst));
    out.extend(check_simplex_oracle(inst)?);
    out.extend(check_disc_bound(inst));
    out.extend(verify_dim3_coefficients(inst));
    out.extend(verify_dim3_region(inst)?);
    out.extend(check_dim3_real_roots(inst));
    out.extend(check_reflexivity(inst));
    out.extend(check_critical_line_criterion(inst)?);
    out.extend(check_critical_line_reflexive(inst));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::verify::random::rng;

    fn analyzed(p: LatticePolytope) -> Instance {
        Instance::analyze(p).unwrap()
    }

    #[test]
    fn corrupted_hstar_is_reported() {
        let inst = analyzed(make_sn(3, 1).unwrap());
        let good = check_hstar(&inst).unwrap();
        assert!(good.passed());
        let mut a = inst.h.entries().to_vec();
        a[1] += 1;
        let bad = check_hstar_identities(
            "corrupted",
            &inst.e,
            &HStarVector::new(a),
            count_points(&inst.p, 1).unwrap(),
            inst.interior,
            &inst.p.normalized_volume(),
        );
        assert!(bad.failed());
        assert_eq!(bad.detail["broken"], "a1,sum,round_trip");
    }

    #[test]
    fn unimodular_images_of_sn1() {
        let s = make_sn(3, 1).unwrap();
        let mut r = rng(11, 0);
        for _ in 0..5 {
            let u = random_unimodular(&mut r, 3);
            let img = s.apply_unimodular(&u, &[1, -2, 0]).unwrap();
            assert!(unimodular_equivalent_simplices(&s, &img));
            let inst = analyzed(img);
            let rep = check_volume_lower_bound(&inst).unwrap().unwrap();
            assert!(rep.passed() && rep.detail["equality_is_sn1_image"] == "true");
        }
        assert!(!unimodular_equivalent_simplices(&s, &make_reeve(4).unwrap()));
        assert!(unimodular_equivalent_simplices(
            &make_reeve(2).unwrap(),
            &make_realpart_minus1_witness(2).unwrap().translate(&[3, 0, -1]).unwrap()
        ));
    }

    #[test]
    fn fixtures_pass_every_check() {
        let mut r = rng(1, 0);
        let mut ps = vec![make_e1(), make_e2(), make_triangle_s(), make_pyramid_p(3).unwrap()];
        for k in 1..=6 {
            ps.push(make_reeve(k).unwrap());
        }
        for n in 1..=3 {
            ps.push(make_cross_star(n, 2).unwrap());
            ps.push(make_sn(n, 2).unwrap());
        }
        for p in ps {
            let inst = analyzed(p);
            for rep in instance_reports(&inst, &mut r).unwrap() {
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }

    #[test]
    fn dim3_checks_on_s3() {
        let inst = analyzed(make_sn(3, 1).unwrap());
        let c = verify_dim3_coefficients(&inst).unwrap();
        assert!(c.passed());
        assert_eq!(c.detail["tight"], "true");
        assert_eq!(c.detail["value_at_minus_inverse_3vol"], "0");
        let region = verify_dim3_region(&inst).unwrap().unwrap();
        assert!(region.passed() && region.detail["tags"].contains("disc_boundary"));
        assert!(check_critical_line_reflexive(&inst).unwrap().passed());
    }

    #[test]
    fn facet_sum_and_dilate_bound() {
        let p = make_pyramid_p(4).unwrap();
        let e = interpolate(&p).unwrap();
        assert!(verify_facet_coefficient(&p, &e).unwrap().passed());
        let b = verify_interior_dilate_bound(&p, &e).unwrap();
        assert!(b.passed());
        // a wrong polynomial is caught
        let wrong = EhrhartPolynomial::from_fractions(&[(1, 1), (1, 1), (1, 1), (1, 1)]);
        assert!(verify_facet_coefficient(&p, &wrong).unwrap().failed());
    }
}
