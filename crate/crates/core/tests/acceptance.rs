//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p ehrhart-core --test acceptance`. The lines go
//! straight to stderr so they show up without `--nocapture`.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use ehrhart_core::ehrhart::{binomial, from_hstar, hstar_simplex_oracle, interpolate, to_hstar, EhrhartPolynomial, HStarVector};
use ehrhart_core::families::*;
use ehrhart_core::lattice::LatticePolytope;
use ehrhart_core::reflexive::{critical_line_criterion, reflexivity_report};
use ehrhart_core::roots::{
    classify_3d, critical_line_check, find_roots, sn1_max_root_asymptotic, sn1_spectrum, RegionTag,
};
use ehrhart_core::verify::random::{generate_random, random_crosspolytopes, random_simplices, RandomPolytopeConfig};
use ehrhart_core::verify::{run_all, VerifyConfig};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(c: &[(i64, i64)]) -> EhrhartPolynomial {
    EhrhartPolynomial::from_fractions(c)
}

fn hstar(p: &LatticePolytope) -> HStarVector {
    to_hstar(&interpolate(p).unwrap()).unwrap()
}

fn interior(p: &LatticePolytope) -> u64 {
    p.interior_lattice_points().len() as u64
}

/// Runs one criterion, prints its line and returns whether it passed in time.
fn criterion(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        Err(e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into()))
    });
    let took = start.elapsed();
    let result = result.and_then(|()| {
        ensure(took <= limit, || format!("took {took:.1?}, limit {limit:?}"))
    });
    let line = match &result {
        Ok(()) => format!("criterion {id:>2} {name}: PASS ({:.2}s)\n", took.as_secs_f64()),
        Err(m) => format!("criterion {id:>2} {name}: FAIL ({:.2}s) {m}\n", took.as_secs_f64()),
    };
    std::io::stderr().write_all(line.as_bytes()).unwrap();
    result.is_ok()
}

fn exact_polynomials() -> Outcome {
    let s3 = interpolate(&make_sn(3, 1).unwrap()).unwrap();
    ensure(s3 == poly(&[(1, 1), (7, 3), (1, 1), (2, 3)]), || format!("S_3(1): {s3}"))?;
    ensure(to_hstar(&s3).unwrap().entries() == [1, 1, 1, 1], || "S_3(1) h*".into())?;
    for k in 2..=34 {
        let e = interpolate(&make_reeve(k).unwrap()).unwrap();
        let want = poly(&[(1, 1), (12 - k, 6), (1, 1), (k, 6)]);
        ensure(e == want, || format!("T({k}): {e}"))?;
    }
    let e1 = interpolate(&make_e1()).unwrap();
    ensure(e1 == poly(&[(1, 1), (15, 2), (21, 1), (27, 1), (27, 2)]), || format!("E1: {e1}"))?;
    let e2 = interpolate(&make_e2()).unwrap();
    ensure(e2 == poly(&[(1, 1), (4, 3), (8, 3), (8, 3), (4, 3)]), || format!("E2: {e2}"))
}

fn sn1_critical_line() -> Outcome {
    for n in 1..=25usize {
        let ones = HStarVector::new(vec![1; n + 1]);
        let e = if n <= 4 {
            let e = interpolate(&make_sn(n, 1).unwrap()).unwrap();
            ensure(to_hstar(&e).unwrap() == ones, || format!("h* of S_{n}(1)"))?;
            e
        } else {
            from_hstar(&ones)
        };
        let r = find_roots(&e, 1e-9).map_err(|x| x.to_string())?;
        for z in r.values() {
            ensure((z.re + 0.5).abs() <= 1e-9, || format!("n={n}: root {z}"))?;
        }
        let mut upper: Vec<f64> = r.values().iter().filter(|z| z.im >= 0.0).map(|z| z.im).collect();
        upper.sort_by(|a, b| b.total_cmp(a));
        let b = sn1_spectrum(n, 1e-14).unwrap();
        ensure(upper.len() == b.len(), || format!("n={n}: {} vs {}", upper.len(), b.len()))?;
        for (x, y) in upper.iter().zip(&b) {
            ensure((x - y).abs() <= 1e-8, || format!("n={n}: {x} vs {y}"))?;
        }
    }
    Ok(())
}

fn asymptotic_ratio() -> Outcome {
    let r = sn1_max_root_asymptotic(&[100, 400]).unwrap();
    ensure((0.95..=1.05).contains(&r[0].2), || format!("ratio at 100: {}", r[0].2))?;
    ensure((r[1].2 - 1.0).abs() < (r[0].2 - 1.0).abs(), || {
        format!("ratios {} then {}", r[0].2, r[1].2)
    })
}

fn boundary_pairs() -> Outcome {
    let mut hits = Vec::new();
    for k in 1..=60 {
        let r = find_roots(&interpolate(&make_reeve(k).unwrap()).unwrap(), 1e-9).unwrap();
        let complex: Vec<Complex64> = r.values().into_iter().filter(|z| z.im != 0.0).collect();
        if !complex.is_empty()
            && complex.iter().all(|z| ((z.re + 1.0).powi(2) + z.im * z.im - 2.0).abs() <= 1e-9)
        {
            hits.push(k);
        }
    }
    ensure(hits == (2..=34).collect::<Vec<_>>(), || format!("boundary pairs at {hits:?}"))?;
    let expected = [2f64.sqrt(), 1.0, 0.5f64.sqrt(), 0.2f64.sqrt()];
    for (k, b) in (2..=5).zip(expected) {
        let r = find_roots(&interpolate(&make_realpart_minus1_witness(k).unwrap()).unwrap(), 1e-9).unwrap();
        for y in [b, -b] {
            let want = Complex64::new(-1.0, y);
            ensure(r.values().iter().any(|z| (z - want).norm() <= 1e-9), || {
                format!("witness {k}: no root near {want}")
            })?;
        }
    }
    Ok(())
}

fn region_containment() -> Outcome {
    let cfg = RandomPolytopeConfig { num_points: 6, coord_bound: 3, ..RandomPolytopeConfig::new(3, 2024, 200) };
    let ps = generate_random(&cfg).map_err(|e| e.to_string())?;
    ensure(ps.len() == 200, || "generation".into())?;
    let (mut with, mut without) = (0, 0);
    for p in &ps {
        let e = interpolate(p).unwrap();
        let l = interior(p);
        if l == 0 {
            without += 1
        } else {
            with += 1
        }
        let r = find_roots(&e, 1e-9).unwrap();
        let v = classify_3d(&r, l).unwrap();
        ensure(v.in_region, || format!("{}: {:?}", p.label(), r.values()))?;
        let boundary = v.roots.iter().any(|z| z.tags.contains(&RegionTag::DiscBoundary));
        if l >= 1 && boundary {
            let h = to_hstar(&e).unwrap();
            ensure(h.entries() == [1, 1, 1, 1], || format!("{}: |z|^2 = 3 with h* {h}", p.label()))?;
        }
    }
    ensure(with > 0 && without > 0, || format!("batch not mixed: {with} / {without}"))
}

fn volume_bound() -> Outcome {
    let mut polys = Vec::new();
    for d in 2..=4 {
        let cfg = RandomPolytopeConfig { require_interior: true, ..RandomPolytopeConfig::new(d, 77 + d as u64, 60) };
        polys.extend(generate_random(&cfg).map_err(|e| e.to_string())?);
        for l in 1..=3 {
            polys.push(make_sn(d, l).unwrap());
        }
    }
    let mut equalities = 0;
    for p in &polys {
        let n = p.dim() as u64;
        let l = interior(p);
        let nvol = p.normalized_volume();
        let bound = BigInt::from(n * l + 1);
        ensure(nvol >= bound, || format!("{}: {nvol} < {bound}", p.label()))?;
        if nvol == bound {
            equalities += 1;
            let h = hstar(p);
            let flat = h.entries()[0] == 1 && h.entries()[1..].iter().all(|&a| a as u64 == l);
            ensure(flat, || format!("{}: equality with h* {h}", p.label()))?;
        }
    }
    ensure(equalities >= 9, || format!("only {equalities} equality cases"))
}

fn symmetric_inequalities() -> Outcome {
    let mut sym = Vec::new();
    let mut cross = Vec::new();
    for (d, count) in [(2, 34), (3, 33), (4, 33)] {
        let cfg = RandomPolytopeConfig {
            symmetric: true,
            num_points: d + 1,
            coord_bound: 2,
            ..RandomPolytopeConfig::new(d, 500 + d as u64, count)
        };
        sym.extend(generate_random(&cfg).map_err(|e| e.to_string())?);
        cross.extend(random_crosspolytopes(d, 2, 600 + d as u64, count).map_err(|e| e.to_string())?);
    }
    ensure(sym.len() == 100 && cross.len() == 100, || "generation".into())?;
    for p in &sym {
        let n = p.dim() as u64;
        let h = hstar(p);
        for (i, &a) in h.entries().iter().enumerate() {
            ensure(BigInt::from(a) >= binomial(n, i as u64), || format!("{}: h* {h}", p.label()))?;
        }
    }
    for p in &cross {
        let n = p.dim();
        let h = hstar(p);
        let a = h.entries();
        for i in 0..=n {
            let lhs = BigInt::from(a[i] + a[n - i]);
            let rhs = binomial(n as u64, i as u64) * BigInt::from(a[0] + a[n]);
            ensure(lhs >= rhs, || format!("{}: h* {h} at i={i}", p.label()))?;
        }
    }
    for n in 1..=4usize {
        for l in 1..=3i64 {
            let h = hstar(&make_cross_star(n, l).unwrap());
            for i in 0..=n {
                let mut want = binomial(n as u64, i as u64);
                if i >= 1 {
                    want += binomial(n as u64 - 1, i as u64 - 1) * BigInt::from(2 * l - 2);
                }
                ensure(BigInt::from(h.entries()[i]) == want, || format!("cross-star n={n} l={l}: {h}"))?;
            }
        }
    }
    let mut bases = Vec::new();
    for (d, count) in [(1, 6), (2, 7), (3, 7)] {
        let cfg = RandomPolytopeConfig {
            symmetric: true,
            num_points: d + 1,
            coord_bound: 2,
            ..RandomPolytopeConfig::new(d, 700 + d as u64, count)
        };
        bases.extend(generate_random(&cfg).map_err(|e| e.to_string())?);
    }
    for q in &bases {
        let hq = hstar(q);
        let hb = hstar(&bipyramid(q).unwrap());
        let a = hq.entries();
        for i in 0..=a.len() {
            let want = a.get(i).copied().unwrap_or(0) + if i > 0 { a[i - 1] } else { 0 };
            ensure(hb.entries()[i] == want, || format!("bipyramid over {}: {hq} -> {hb}", q.label()))?;
        }
    }
    Ok(())
}

fn reflexive_agreement() -> Outcome {
    let s_x_s2 = product(&make_triangle_s(), &make_sn(2, 1).unwrap()).unwrap();
    let mut fixtures = vec![make_e1(), make_e2(), s_x_s2.clone()];
    for n in 1..=4 {
        fixtures.push(make_box_q(n, 1).unwrap());
        fixtures.push(make_cross_star(n, 1).unwrap());
        fixtures.push(make_sn(n, 1).unwrap());
    }
    for k in 2..=5 {
        fixtures.push(make_realpart_minus1_witness(k).unwrap().dilate(2).unwrap());
    }
    for p in &fixtures {
        ensure(reflexivity_report(p).unwrap().is_reflexive, || format!("{} not reflexive", p.label()))?;
        let c = critical_line_criterion(p).unwrap();
        let r = find_roots(&interpolate(p).unwrap(), 1e-9).unwrap();
        let numeric = critical_line_check(&r, 1e-9);
        ensure(c.holds == numeric, || format!("{}: criterion {} vs roots {numeric}", p.label(), c.holds))?;
    }
    let e1 = critical_line_criterion(&make_e1()).unwrap();
    ensure(
        e1.discriminant_condition == Some(true) && e1.doubled_hibi_condition == Some(false),
        || format!("E1: {e1:?}"),
    )?;
    let e2 = critical_line_criterion(&make_e2()).unwrap();
    ensure(
        e2.discriminant_condition == Some(false) && e2.doubled_hibi_condition == Some(true),
        || format!("E2: {e2:?}"),
    )?;
    let c = critical_line_criterion(&s_x_s2).unwrap();
    let r = find_roots(&interpolate(&s_x_s2).unwrap(), 1e-9).unwrap();
    ensure(
        c.volume < BigRational::from_integer(16.into()) && !c.holds && !critical_line_check(&r, 1e-9),
        || format!("S x S_2(1): {c:?}"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut n_checked = 0;
    for (d, count) in [(1, 10), (2, 30), (3, 30), (4, 30)] {
        for s in random_simplices(d, 4, 900 + d as u64, count).map_err(|e| e.to_string())? {
            let oracle = hstar_simplex_oracle(&s).unwrap();
            let h = hstar(&s);
            ensure(oracle == h, || format!("{}: oracle {oracle} vs {h}", s.label()))?;
            n_checked += 1;
        }
    }
    ensure(n_checked == 100, || format!("{n_checked} simplices"))
}

fn identity_suite() -> Outcome {
    let report = run_all(&VerifyConfig::default()).map_err(|e| e.to_string())?;
    let failures: Vec<String> = report
        .reports
        .iter()
        .filter(|r| r.failed())
        .take(5)
        .map(|r| format!("{} on {}: {:?}", r.claim_id, r.instance, r.detail))
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    for claim in [
        "reciprocity",
        "hstar-identities",
        "root-means",
        "facet-sum",
        "interior-dilate-bound",
        "dim3-coefficient-bounds",
    ] {
        let passes = report.summary.get(claim).map_or(0, |c| c.pass);
        ensure(passes >= 200, || format!("{claim}: only {passes} passes"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "exact polynomial reproduction", secs(10), exact_polynomials),
        criterion(2, "S_n(1) critical line", secs(30), sn1_critical_line),
        criterion(3, "asymptotic magnitude", secs(5), asymptotic_ratio),
        criterion(4, "boundary pairs and witnesses", secs(10), boundary_pairs),
        criterion(5, "3D region containment", secs(300), region_containment),
        criterion(6, "volume bound and equality", secs(300), volume_bound),
        criterion(7, "symmetric inequalities", secs(300), symmetric_inequalities),
        criterion(8, "reflexivity criteria agreement", secs(300), reflexive_agreement),
        criterion(9, "oracle equivalence", secs(300), oracle_equivalence),
        criterion(10, "identity suite", secs(600), identity_suite),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
