//! Seeded property suites binding each claim to executable checks.
//!
//! Every report carries a claim id from [`CLAIMS`]; [`run_suite`] refuses ids
//! that are not registered there.

pub mod checks;
pub mod random;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::ehrhart::{binomial, from_hstar, interpolate, to_hstar, HStarVector};
use crate::error::{Error, Result};
use crate::families::*;
use crate::lattice::LatticePolytope;
use crate::reflexive::{critical_line_criterion, doubled_polytope_bridge};
use crate::report::{Status, VerificationReport};
use crate::roots::{
    critical_line_check, find_roots, sn1_max_root_asymptotic, sn1_spectrum, DEFAULT_TOL,
};

use checks::{instance_reports, Instance};
use random::{generate_random, random_crosspolytopes, random_simplices, RandomPolytopeConfig};

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
}

const fn claim(id: &'static str, statement: &'static str) -> Claim {
    Claim { id, statement }
}

/// Every claim the suites can report on.
pub const CLAIMS: &[Claim] = &[
    claim("bipyramid-recursion", "a_i(conv{Q, ±e_n}) = a_i(Q) + a_{i-1}(Q) when the origin is interior to Q"),
    claim("critical-line-criterion", "for reflexive P with n <= 4 the exact criterion decides whether all roots have real part -1/2"),
    claim("critical-line-examples", "E1 fails only the doubled condition, E2 only the discriminant condition, S x S_2(1) has volume below 16 with roots off the line"),
    claim("critical-line-reflexive", "all roots on re = -1/2 implies P is reflexive with vol(P) <= 2^n"),
    claim("crosspolytope-formula", "a_i(conv{±l e_1, ±e_2, .., ±e_n}) = C(n,i) + C(n-1,i-1)(2l-2)"),
    claim("crosspolytope-pairs", "a_i + a_{n-i} >= C(n,i)(a_0 + a_n) for lattice crosspolytopes"),
    claim("dim3-coefficient-bounds", "G_1 <= G_2 + G_3 + 2/3 <= (5/2)G_3 + 2/3 and G(-1/(3 vol)) >= 0 for 3-polytopes with interior points"),
    claim("dim3-real-roots", "real roots of 3-polytopes with interior points lie in (-1,0), or one there and two in (0,1); complex pairs have real part in (-3/4,1/2)"),
    claim("dim3-root-region", "roots of 3-polytopes lie in [-3,-1] or {-1 <= a < 1, a^2 + b^2 <= 3}; without interior points in {-3,-2} u (-2,1) and the half disc (a+1)^2 + b^2 <= 2"),
    claim("disc-bound", "every root satisfies |z + 1/2| <= n(n-1)/2"),
    claim("facet-sum", "G_{n-1} is half the sum of the relative facet volumes"),
    claim("hibi-lower-bound", "a_i >= a_1 for 1 <= i <= n-1 when P has interior points"),
    claim("hstar-identities", "a_0 = 1, a_1 = #P - n - 1, a_n = #int P, sum a_i = n! vol, a_i >= 0"),
    claim("interior-dilate-bound", "G_{n-1} <= (nk/2) vol with k the smallest dilate having an interior point; 1 <= G_2 in dimension 3"),
    claim("no-interior-extreme-roots", "search for 3-polytopes without interior points whose roots include -3 or -2"),
    claim("oracle-agreement", "parallelepiped enumeration of a simplex gives the interpolated h*-vector"),
    claim("pipeline", "every instance is counted, interpolated and solved without error"),
    claim("pyramid-real-roots", "G(s, P(q)) has a real root in (-2,-1) for 2 <= q <= 50"),
    claim("reciprocity", "#int(kP) = (-1)^n G(-k) for k = 1..n+1"),
    claim("reeve-semicircle", "T(k) has non-real roots on (a+1)^2 + b^2 = 2 exactly for 2 <= k <= 34"),
    claim("reflexivity-agreement", "with interior points, G_{n-1} = (n/2) vol iff P is reflexive, and then #kP = #int(k+1)P"),
    claim("root-means", "prod of the negated roots is 1/vol and their sum is G_{n-1}/vol"),
    claim("root-reconstruction", "vol * prod (s - z_i) reproduces G"),
    claim("sn1-asymptotic", "the largest imaginary part of a root of G(s, S_n(1)) grows like n(n+2)/(2 pi)"),
    claim("sn1-critical-line", "all roots of G(s, S_n(1)) have real part -1/2 with imaginary parts solving the cotangent sum equation"),
    claim("symmetric-lower-bound", "a_i >= C(n,i) for origin-symmetric P"),
    claim("symmetric-volume-conjecture", "monitored: n! vol >= 2^{n-1}(l+1) for origin-symmetric P"),
    claim("unimodular-invariance", "G is invariant under affine unimodular maps"),
    claim("volume-lower-bound", "n! vol >= n l + 1, with equality for l = 1 only on images of S_n(1)"),
    claim("witness-real-part", "the four witnesses have non-real roots -1 ± i sqrt(6/k - 1) and their doubles are reflexive with all roots on re = -1/2"),
];

pub fn lookup_claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

/// Claims checked on every analysed instance.
const INSTANCE_CLAIMS: &[&str] = &[
    "critical-line-criterion",
    "critical-line-reflexive",
    "crosspolytope-pairs",
    "dim3-coefficient-bounds",
    "dim3-real-roots",
    "dim3-root-region",
    "disc-bound",
    "facet-sum",
    "hibi-lower-bound",
    "hstar-identities",
    "interior-dilate-bound",
    "no-interior-extreme-roots",
    "oracle-agreement",
    "pipeline",
    "reciprocity",
    "reflexivity-agreement",
    "root-means",
    "root-reconstruction",
    "symmetric-lower-bound",
    "symmetric-volume-conjecture",
    "unimodular-invariance",
    "volume-lower-bound",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random instances per pool.
    pub trials: usize,
    pub dim_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 1, trials: 100, dim_max: 4 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClaimCounts {
    pub pass: usize,
    pub fail: usize,
    #[serde(rename = "n/a")]
    pub not_applicable: usize,
    pub discovery: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: VerifyConfig,
    pub total: usize,
    pub failures: usize,
    pub discoveries: usize,
    pub summary: BTreeMap<String, ClaimCounts>,
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    fn new(suite: &str, config: VerifyConfig, mut reports: Vec<VerificationReport>) -> Self {
        reports.sort_by(|a, b| (&a.claim_id, &a.instance).cmp(&(&b.claim_id, &b.instance)));
        let mut summary: BTreeMap<String, ClaimCounts> = BTreeMap::new();
        for r in &reports {
            let c = summary.entry(r.claim_id.clone()).or_default();
            match r.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::NotApplicable => c.not_applicable += 1,
                Status::Discovery => c.discovery += 1,
            }
        }
        SuiteReport {
            suite: suite.to_string(),
            config,
            total: reports.len(),
            failures: reports.iter().filter(|r| r.failed()).count(),
            discoveries: reports.iter().filter(|r| r.status == Status::Discovery).count(),
            summary,
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Fixed polytopes run through every per-instance check.
pub fn fixture_polytopes() -> Result<Vec<LatticePolytope>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for l in 1..=3 {
            out.push(make_sn(n, l)?);
            out.push(make_cross_star(n, l)?);
            out.push(make_box_q(n, l)?);
        }
        out.push(make_unit_cube(n)?);
        out.push(FamilySpec::StdCross { n }.build()?);
    }
    for k in 1..=12 {
        out.push(make_reeve(k)?);
    }
    for q in [1, 2, 3, 5, 10] {
        out.push(make_pyramid_p(q)?);
    }
    for k in 2..=5 {
        let w = make_realpart_minus1_witness(k)?;
        out.push(w.dilate(2)?);
        out.push(w);
    }
    out.push(make_e1());
    out.push(make_e2());
    let s = make_triangle_s();
    out.push(product(&s, &make_sn(2, 1)?)?);
    out.push(s);
    let mut r = random::rng(0, 99);
    let s3 = make_sn(3, 1)?;
    for i in 0..4 {
        let u = random::random_unimodular(&mut r, 3);
        out.push(s3.apply_unimodular(&u, &[i, -1, 2])?.with_label(format!("sn:n=3,l=1@image{i}")));
    }
    Ok(out)
}

fn round_robin(dims: &[usize], trials: usize) -> Vec<(usize, usize)> {
    dims.iter()
        .enumerate()
        .map(|(i, &d)| (d, trials / dims.len() + usize::from(i < trials % dims.len())))
        .filter(|&(_, c)| c > 0)
        .collect()
}

/// The random pools: general, with interior points, 3-dimensional,
/// origin-symmetric, simplices and crosspolytopes.
pub fn random_polytopes(cfg: &VerifyConfig) -> Result<Vec<LatticePolytope>> {
    let dim_max = cfg.dim_max.clamp(2, 4);
    let dims: Vec<usize> = (2..=dim_max).collect();
    let mut out = Vec::new();
    for (d, count) in round_robin(&dims, cfg.trials) {
        let seed = cfg.seed.wrapping_mul(31).wrapping_add(d as u64);
        let base = RandomPolytopeConfig::new(d, seed, count);
        let sym = RandomPolytopeConfig { symmetric: true, num_points: d + 1, coord_bound: 2, ..base.clone() };
        let int = RandomPolytopeConfig { require_interior: true, seed: seed ^ 0x5a5a, ..base.clone() };
        let tag = |ps: Vec<LatticePolytope>, pool: &'static str| {
            ps.into_iter().map(move |p| {
                let label = format!("{pool}/{}", p.label());
                p.with_label(label)
            })
        };
        out.extend(tag(generate_random(&base)?, "general"));
        out.extend(tag(generate_random(&int)?, "interior"));
        out.extend(tag(generate_random(&sym)?, "symmetric"));
        out.extend(tag(random_simplices(d, 4, seed, count)?, "simplex"));
        out.extend(tag(random_crosspolytopes(d, 2, seed, count)?, "crosspolytope"));
    }
    let three = RandomPolytopeConfig { num_points: 6, ..RandomPolytopeConfig::new(3, cfg.seed ^ 0x3d3d, cfg.trials) };
    out.extend(generate_random(&three)?.into_iter().map(|p| {
        let label = format!("dim3/{}", p.label());
        p.with_label(label)
    }));
    Ok(out)
}

fn panic_text(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

/// What the extreme-root search needs from an analysed instance.
type Analysed = (LatticePolytope, HStarVector, Vec<f64>);

/// Analyses every polytope in parallel; failures become `pipeline` reports.
fn analyse_all(
    polytopes: Vec<LatticePolytope>,
    seed: u64,
) -> (Vec<VerificationReport>, Vec<Analysed>) {
    let results: Vec<(Vec<VerificationReport>, Option<Analysed>)> =
        polytopes
            .into_par_iter()
            .enumerate()
            .map(|(i, p)| {
                let label = p.label().to_string();
                let run = catch_unwind(AssertUnwindSafe(|| -> Result<_> {
                    let inst = Instance::analyze(p)?;
                    let mut r = random::rng(seed, 1000 + i as u64);
                    let reports = instance_reports(&inst, &mut r)?;
                    let real_roots = if inst.dim() == 3 && inst.interior == 0 {
                        inst.roots.roots.iter().filter(|z| z.is_real()).map(|z| z.re).collect()
                    } else {
                        Vec::new()
                    };
                    Ok((reports, (inst.p.clone(), inst.h.clone(), real_roots)))
                }));
                match run {
                    Ok(Ok((mut reports, extra))) => {
                        reports.push(VerificationReport::new("pipeline", label).check(true));
                        (reports, Some(extra))
                    }
                    Ok(Err(e)) => {
                        let r = VerificationReport::new("pipeline", label).with("error", e).check(false);
                        (vec![r], None)
                    }
                    Err(e) => {
                        let r = VerificationReport::new("pipeline", label)
                            .with("panic", panic_text(e))
                            .check(false);
                        (vec![r], None)
                    }
                }
            })
            .collect();
    let mut reports = Vec::new();
    let mut extras = Vec::new();
    for (r, x) in results {
        reports.extend(r);
        extras.extend(x);
    }
    (reports, extras)
}

/// Reports where the extreme values -3 and -2 turn up as roots of 3-polytopes
/// without interior points. Informational: a miss is `n/a`, not a failure.
fn extreme_root_search(extras: &[Analysed]) -> Vec<VerificationReport> {
    [-3.0, -2.0]
        .iter()
        .map(|&target: &f64| {
            let hit = extras
                .iter()
                .filter(|(_, _, roots)| roots.iter().any(|x| (x - target).abs() <= DEFAULT_TOL))
                .map(|(p, _, _)| p.label().to_string())
                .min();
            let r = VerificationReport::new("no-interior-extreme-roots", format!("root={target}"))
                .with("searched", extras.iter().filter(|x| x.0.dim() == 3).count());
            match hit {
                Some(label) => r.with("witness", label).check(true),
                None => r.status(Status::NotApplicable),
            }
        })
        .collect()
}

pub fn crosspolytope_formula_reports() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        for l in 1..=3i64 {
            let p = make_cross_star(n, l)?;
            let h = to_hstar(&interpolate(&p)?)?;
            let want: Vec<BigInt> = (0..=n)
                .map(|i| {
                    let mut w = binomial(n as u64, i as u64);
                    if i >= 1 {
                        w += binomial(n as u64 - 1, i as u64 - 1) * BigInt::from(2 * l - 2);
                    }
                    w
                })
                .collect();
            let got: Vec<BigInt> = h.entries().iter().map(|&a| BigInt::from(a)).collect();
            out.push(
                VerificationReport::new("crosspolytope-formula", p.label())
                    .with("hstar", &h)
                    .with("formula", want.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
                    .check(got == want),
            );
        }
    }
    Ok(out)
}

/// The recursion on random origin-symmetric bases of dimension 1 to 3.
pub fn bipyramid_reports(seed: u64, count: usize) -> Result<Vec<VerificationReport>> {
    let mut bases = Vec::new();
    for (d, c) in round_robin(&[1, 2, 3], count) {
        let cfg = RandomPolytopeConfig {
            symmetric: true,
            num_points: d + 1,
            coord_bound: 2,
            ..RandomPolytopeConfig::new(d, seed.wrapping_add(77), c)
        };
        bases.extend(generate_random(&cfg)?);
    }
    bases
        .par_iter()
        .map(|q| {
            let b = bipyramid(q)?;
            let hq = to_hstar(&interpolate(q)?)?;
            let hb = to_hstar(&interpolate(&b)?)?;
            let a = hq.entries();
            let want: Vec<i64> = (0..=a.len())
                .map(|i| a.get(i).copied().unwrap_or(0) + if i > 0 { a[i - 1] } else { 0 })
                .collect();
            Ok(VerificationReport::new("bipyramid-recursion", b.label())
                .with("base_hstar", &hq)
                .with("hstar", &hb)
                .check(hb.entries() == want.as_slice()))
        })
        .collect()
}

pub fn reeve_semicircle_reports() -> Result<Vec<VerificationReport>> {
    (1..=40)
        .map(|k| {
            let p = make_reeve(k)?;
            let r = find_roots(&interpolate(&p)?, DEFAULT_TOL)?;
            let complex: Vec<_> = r.roots.iter().filter(|z| !z.is_real()).collect();
            let on = !complex.is_empty()
                && complex.iter().all(|z| ((z.re + 1.0).powi(2) + z.im * z.im - 2.0).abs() <= DEFAULT_TOL);
            let expected = (2..=34).contains(&k);
            Ok(VerificationReport::new("reeve-semicircle", p.label())
                .with("on_semicircle", on)
                .with("expected", expected)
                .check(on == expected))
        })
        .collect()
}

pub fn witness_reports() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for k in 2..=5 {
        let p = make_realpart_minus1_witness(k)?;
        let r = find_roots(&interpolate(&p)?, DEFAULT_TOL)?;
        let b = (6.0 / k as f64 - 1.0).sqrt();
        let values = r.values();
        let found = [b, -b]
            .iter()
            .all(|&y| values.iter().any(|z| (z - Complex64::new(-1.0, y)).norm() <= 1e-9));
        let bridge = doubled_polytope_bridge(&p)?;
        out.push(
            VerificationReport::new("witness-real-part", p.label())
                .with("imaginary_part", format!("{b:.15}"))
                .with("roots_found", found)
                .with("doubled", format!("{:?}", bridge.status))
                .check(found && bridge.passed()),
        );
    }
    Ok(out)
}

pub fn sn1_reports(n_max: usize) -> Result<Vec<VerificationReport>> {
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            // counted where the enumeration reaches, h* = (1, .., 1) beyond
            let ones = HStarVector::new(vec![1; n + 1]);
            let (e, source) = if n <= crate::lattice::MAX_DIM {
                let e = interpolate(&make_sn(n, 1)?)?;
                if to_hstar(&e)? != ones {
                    return Ok(VerificationReport::new("sn1-critical-line", format!("sn:n={n},l=1"))
                        .with("hstar", to_hstar(&e)?)
                        .check(false));
                }
                (e, "counted")
            } else {
                (from_hstar(&ones), "hstar")
            };
            let r = find_roots(&e, DEFAULT_TOL)?;
            let on = critical_line_check(&r, DEFAULT_TOL);
            let mut upper: Vec<f64> = r.values().iter().filter(|z| z.im >= 0.0).map(|z| z.im).collect();
            upper.sort_by(|a, b| b.total_cmp(a));
            let spectrum = sn1_spectrum(n, 1e-14)?;
            let worst = if upper.len() == spectrum.len() {
                upper.iter().zip(&spectrum).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
            } else {
                f64::INFINITY
            };
            Ok(VerificationReport::new("sn1-critical-line", format!("sn:n={n},l=1"))
                .with("source", source)
                .with("on_line", on)
                .with("spectrum_error", format!("{worst:.3e}"))
                .check(on && worst <= 1e-8))
        })
        .collect()
}

/// The ratio to `n(n+2)/(2 pi)` moves towards 1 along `ns`, ending within 1%.
pub fn sn1_asymptotic_report() -> Result<VerificationReport> {
    let ns = [10, 100, 1000, 4000];
    let rows = sn1_max_root_asymptotic(&ns)?;
    let gaps: Vec<f64> = rows.iter().map(|r| (r.2 - 1.0).abs()).collect();
    let shrinking = gaps.windows(2).all(|w| w[1] < w[0]);
    let ratios: Vec<String> = rows.iter().map(|r| format!("{}:{:.6}", r.0, r.2)).collect();
    Ok(VerificationReport::new("sn1-asymptotic", "sn:l=1")
        .with("ratios", ratios.join(","))
        .check(shrinking && gaps[gaps.len() - 1] < 0.01))
}

pub fn pyramid_reports() -> Result<Vec<VerificationReport>> {
    (2..=50)
        .map(|q| {
            let p = make_pyramid_p(q)?;
            let r = find_roots(&interpolate(&p)?, DEFAULT_TOL)?;
            let hit = r
                .roots
                .iter()
                .filter(|z| z.is_real() && z.re > -2.0 && z.re < -1.0)
                .map(|z| z.re)
                .next();
            Ok(VerificationReport::new("pyramid-real-roots", p.label())
                .with("root", hit.map_or("none".into(), |x| format!("{x:.15}")))
                .check(hit.is_some()))
        })
        .collect()
}

pub fn critical_line_example_reports() -> Result<Vec<VerificationReport>> {
    let e1 = critical_line_criterion(&make_e1())?;
    let e2 = critical_line_criterion(&make_e2())?;
    let ps = product(&make_triangle_s(), &make_sn(2, 1)?)?;
    let c = critical_line_criterion(&ps)?;
    let r = find_roots(&interpolate(&ps)?, DEFAULT_TOL)?;
    let off = !critical_line_check(&r, DEFAULT_TOL);
    let e1_ok = !e1.holds
        && e1.discriminant_condition == Some(true)
        && e1.mu_guard == Some(true)
        && e1.doubled_hibi_condition == Some(false);
    let e2_ok = !e2.holds
        && e2.discriminant_condition == Some(false)
        && e2.mu_guard == Some(true)
        && e2.doubled_hibi_condition == Some(true);
    let small = c.volume < BigInt::from(16).into();
    Ok(vec![
        VerificationReport::new("critical-line-examples", "e1")
            .with("criterion", serde_json::to_string(&e1).unwrap_or_default())
            .check(e1_ok),
        VerificationReport::new("critical-line-examples", "e2")
            .with("criterion", serde_json::to_string(&e2).unwrap_or_default())
            .check(e2_ok),
        VerificationReport::new("critical-line-examples", ps.label())
            .with("volume", &c.volume)
            .with("criterion", c.holds)
            .with("roots_off_line", off)
            .check(small && !c.holds && off),
    ])
}

/// Runs one registered claim, or every claim for `suite == "all"`.
pub fn run_suite(cfg: &VerifyConfig, suite: &str) -> Result<SuiteReport> {
    let all = suite == "all";
    if !all && lookup_claim(suite).is_none() {
        return Err(Error::InvalidInput(format!("unknown claim id {suite:?}")));
    }
    let wants = |id: &str| all || suite == id;
    let mut reports = Vec::new();
    if INSTANCE_CLAIMS.iter().any(|c| wants(c)) {
        let mut polytopes = fixture_polytopes()?;
        polytopes.extend(random_polytopes(cfg)?);
        let (r, extras) = analyse_all(polytopes, cfg.seed);
        reports.extend(r);
        reports.extend(extreme_root_search(&extras));
    }
    type Fixture = fn(&VerifyConfig) -> Result<Vec<VerificationReport>>;
    let fixtures: &[(&str, Fixture)] = &[
        ("crosspolytope-formula", |_| crosspolytope_formula_reports()),
        ("bipyramid-recursion", |c| bipyramid_reports(c.seed, 20)),
        ("reeve-semicircle", |_| reeve_semicircle_reports()),
        ("witness-real-part", |_| witness_reports()),
        ("sn1-critical-line", |_| sn1_reports(25)),
        ("sn1-asymptotic", |_| Ok(vec![sn1_asymptotic_report()?])),
        ("pyramid-real-roots", |_| pyramid_reports()),
        ("critical-line-examples", |_| critical_line_example_reports()),
    ];
    for (id, f) in fixtures {
        if wants(id) {
            reports.extend(f(cfg)?);
        }
    }
    reports.retain(|r| wants(&r.claim_id));
    for r in &reports {
        assert!(lookup_claim(&r.claim_id).is_some(), "unregistered claim id {}", r.claim_id);
    }
    Ok(SuiteReport::new(suite, *cfg, reports))
}

pub fn run_all(cfg: &VerifyConfig) -> Result<SuiteReport> {
    run_suite(cfg, "all")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { seed: 3, trials: 6, dim_max: 3 }
    }

    #[test]
    fn registry_is_consistent() {
        let mut ids: Vec<&str> = CLAIMS.iter().map(|c| c.id).collect();
        let len = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), len);
        assert!(INSTANCE_CLAIMS.iter().all(|c| lookup_claim(c).is_some()));
        assert!(matches!(run_suite(&small(), "no-such-claim"), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let a = run_all(&small()).unwrap();
        let failures: Vec<_> = a.reports.iter().filter(|r| r.failed()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        for c in CLAIMS {
            assert!(a.summary.contains_key(c.id), "no report for {}", c.id);
        }
        let b = run_all(&small()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn single_suite_filters() {
        let r = run_suite(&small(), "reeve-semicircle").unwrap();
        assert_eq!(r.total, 40);
        assert!(r.reports.iter().all(|x| x.claim_id == "reeve-semicircle" && x.passed()));
    }
}
