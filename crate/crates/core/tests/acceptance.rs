//! Acceptance gate: one check per release criterion, one printed line each.

// one table ratio happens to sit near pi/6
#![allow(clippy::approx_constant)]

use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use eaqecc::bits::{symplectic_inner, SymplecticVector};
use eaqecc::code::AdditiveCode;
use eaqecc::construction::{
    corollary44_suite, search_theorem43, theorem43_build, CodeCatalog, ProtectorSource,
    SuiteStatus, Theorem43Fixture,
};
use eaqecc::field::{trace_inner, Gf4, Gf4Vector};
use eaqecc::params;
use eaqecc::perf::{self, TableConfig};
use eaqecc::symplectic::Subspace;

/// Published rows: (max_p_b, ratio, P(D), P(C)).
type PaperRow = (f64, f64, f64, f64);

const TABLE1: [PaperRow; 16] = [
    (0.0013, 0.1288, 0.999979, 0.999979),
    (0.0049, 0.2440, 0.999698, 0.999697),
    (0.0103, 0.3472, 0.998630, 0.998626),
    (0.0175, 0.4403, 0.996102, 0.996101),
    (0.0260, 0.5235, 0.991446, 0.991444),
    (0.0356, 0.5976, 0.984073, 0.984047),
    (0.0461, 0.6647, 0.973462, 0.973424),
    (0.0575, 0.7248, 0.959300, 0.959232),
    (0.0695, 0.7789, 0.941380, 0.941284),
    (0.0820, 0.8280, 0.919611, 0.919544),
    (0.0950, 0.8721, 0.894132, 0.894109),
    (0.1083, 0.9111, 0.865248, 0.865197),
    (0.1219, 0.9462, 0.833204, 0.833122),
    (0.1355, 0.9773, 0.798477, 0.798272),
    (0.1485, 0.9993, 0.762866, 0.761089),
    (0.1584, 0.9994, 0.730771, 0.722046),
];

const TABLE2: [PaperRow; 11] = [
    (0.0011, 0.1060, 0.999894, 0.999893),
    (0.0039, 0.1962, 0.998587, 0.998581),
    (0.0082, 0.2744, 0.993983, 0.993959),
    (0.0136, 0.3425, 0.983974, 0.983891),
    (0.0200, 0.4036, 0.966818, 0.966773),
    (0.0272, 0.4567, 0.941915, 0.941738),
    (0.0350, 0.5048, 0.908826, 0.908666),
    (0.0434, 0.5479, 0.868170, 0.868071),
    (0.0523, 0.5859, 0.821227, 0.820950),
    (0.0615, 0.6210, 0.768705, 0.768609),
    (0.0711, 0.6521, 0.712740, 0.712515),
];

const TABLE3: [PaperRow; 15] = [
    (0.0002, 0.0228, 0.999994, 0.999993),
    (0.0012, 0.0598, 0.999829, 0.999825),
    (0.0030, 0.1008, 0.998923, 0.998904),
    (0.0057, 0.1438, 0.996197, 0.996172),
    (0.0092, 0.1858, 0.990374, 0.990303),
    (0.0135, 0.2268, 0.980094, 0.979958),
    (0.0185, 0.2669, 0.964105, 0.964009),
    (0.0242, 0.3049, 0.941739, 0.941687),
    (0.0304, 0.3410, 0.912669, 0.912658),
    (0.0371, 0.3740, 0.877536, 0.877031),
    (0.0444, 0.4070, 0.835335, 0.835306),
    (0.0520, 0.4371, 0.788506, 0.788308),
    (0.0599, 0.4651, 0.737672, 0.737087),
    (0.0683, 0.4921, 0.683293, 0.682827),
    (0.0768, 0.5172, 0.627425, 0.626755),
];

struct Outcome {
    label: &'static str,
    pass: bool,
    detail: String,
}

fn report(results: &mut Vec<Outcome>, label: &'static str, pass: bool, detail: String) {
    println!("criterion {label}: {} — {detail}", if pass { "PASS" } else { "FAIL" });
    results.push(Outcome { label, pass, detail });
}

/// Tolerances: P(C) ±2e-6 vs the published column; ratio ±0.005; P(D) at the
/// solver threshold equals P(C) (certificate) and therefore also matches the
/// published P(C) to ±2e-6 on uncapped rows. The published P(D) column
/// embeds the original coarser threshold search (its p_b sits up to 1e-4
/// below the exact equality point), so it is reproduced by evaluating the
/// model at the published 4-decimal ratio, to ±5e-5 (rounding limit).
fn check_table(cfg: &TableConfig, paper: &[PaperRow]) -> (bool, String) {
    let tol = 1e-8;
    let rows = perf::run_table(cfg, tol).unwrap();
    if rows.len() != paper.len() {
        return (false, format!("expected {} rows, got {}", paper.len(), rows.len()));
    }
    let mut worst_pc: f64 = 0.0;
    let mut worst_ratio: f64 = 0.0;
    let mut worst_pd_paper: f64 = 0.0;
    let mut ok = true;
    for (row, &(_, lam, pd_paper, pc_paper)) in rows.iter().zip(paper) {
        let pb = row.max_p_b.unwrap();
        let ratio = row.ratio.unwrap();
        let pd = row.p_d.unwrap();
        worst_pc = worst_pc.max((row.p_c - pc_paper).abs());
        worst_ratio = worst_ratio.max((ratio - lam).abs());
        ok &= (row.p_c - pc_paper).abs() <= 2e-6;
        ok &= (ratio - lam).abs() <= 0.005;
        let capped = (pb - row.p_a.min(0.5)).abs() <= tol;
        if capped {
            // the combination still beats the reference at p_b = p_a
            ok &= pd > row.p_c;
        } else {
            ok &= (pd - row.p_c).abs() <= 1e-6;
            ok &= (pd - pc_paper).abs() <= 2e-6;
        }
        let pd_at_paper_ratio = perf::p_combination(cfg.ea, cfg.b, row.p_a, row.p_a * lam);
        worst_pd_paper = worst_pd_paper.max((pd_at_paper_ratio - pd_paper).abs());
        ok &= (pd_at_paper_ratio - pd_paper).abs() <= 5e-5;
    }
    (
        ok,
        format!(
            "P(C) err ≤ {worst_pc:.1e} (tol 2e-6), ratio err ≤ {worst_ratio:.4} (tol 0.005), \
             published P(D) at its 4-dp ratio err ≤ {worst_pd_paper:.1e} (tol 5e-5)"
        ),
    )
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Gf4Vector {
    Gf4Vector::new(
        (0..n)
            .map(|_| {
                let x: u8 = rng.gen_range(0..4);
                Gf4::from_bits(x & 1, x >> 1)
            })
            .collect(),
    )
}

fn random_subspace(rng: &mut ChaCha8Rng, max_n: usize, max_gens: usize) -> Subspace {
    let n = rng.gen_range(1..=max_n);
    let g = rng.gen_range(0..=max_gens);
    let gens: Vec<SymplecticVector> = (0..g)
        .map(|_| SymplecticVector::from_gf4(&random_vector(rng, n)))
        .collect();
    Subspace::from_generators(n, &gens)
}

fn property_suites() -> (bool, String) {
    const CASES: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(20260824);
    let mut failures = Vec::new();

    // phi isometry
    for _ in 0..CASES {
        let n = rng.gen_range(1..=10);
        let (u, v) = (random_vector(&mut rng, n), random_vector(&mut rng, n));
        let (su, sv) = (SymplecticVector::from_gf4(&u), SymplecticVector::from_gf4(&v));
        if trace_inner(&u, &v).unwrap() != symplectic_inner(&su, &sv).unwrap()
            || u.symbol_weight() != su.symplectic_weight()
        {
            failures.push("phi isometry");
            break;
        }
    }
    // double dual and dimension sum
    for _ in 0..CASES {
        let s = random_subspace(&mut rng, 10, 12);
        if s.symplectic_dual().symplectic_dual() != s {
            failures.push("double dual");
            break;
        }
        if s.dim() + s.symplectic_dual().dim() != 2 * s.ambient_len() {
            failures.push("dual dimension sum");
            break;
        }
    }
    // SGS invariants
    for _ in 0..CASES {
        let s = random_subspace(&mut rng, 12, 16);
        let d = s.gram_schmidt();
        if d.verify().is_err()
            || d.span() != s
            || d.isotropic_dim() + 2 * d.pair_count() != s.dim()
            || d.pair_count() != s.entanglement_degree()
        {
            failures.push("SGS invariants");
            break;
        }
    }
    // min_weight vs naive enumeration
    for _ in 0..CASES {
        let n = rng.gen_range(2..=8);
        let g = rng.gen_range(1..=12);
        let gens: Vec<Gf4Vector> = (0..g).map(|_| random_vector(&mut rng, n)).collect();
        let code = AdditiveCode::from_gf4_generators(n, &gens).unwrap();
        let m = code.size_log2();
        if m == 0 || m > 12 {
            continue;
        }
        let basis = code.generators();
        let mut naive = usize::MAX;
        for mask in 1u32..(1 << m) {
            let mut w = Gf4Vector::zero(n);
            for (i, gen) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    w = w.add(gen);
                }
            }
            naive = naive.min(w.symbol_weight());
        }
        if code.min_weight(None, 1 << 20).unwrap().min_weight != naive {
            failures.push("min_weight naive oracle");
            break;
        }
    }
    // p_correct vs exact rational oracle
    for _ in 0..CASES {
        let n = rng.gen_range(1..=40);
        let d = rng.gen_range(1..=15);
        let num: u32 = rng.gen_range(0..=1000);
        let p = f64::from(num) / 1000.0;
        let got = perf::p_correct(n, d, p);
        let pr = BigRational::new(BigInt::from(num), BigInt::from(1000));
        let qr = BigRational::one() - pr.clone();
        let t = ((d - 1) / 2).min(n);
        let mut acc = BigRational::new(BigInt::from(0), BigInt::from(1));
        for i in 0..=t {
            let mut binom = BigInt::one();
            for j in 0..i {
                binom = binom * BigInt::from(n - j) / BigInt::from(j + 1);
            }
            acc += BigRational::from(binom) * pr.pow(i as i32) * qr.pow((n - i) as i32);
        }
        let diff = acc - BigRational::from_float(got).unwrap();
        if diff.abs() >= BigRational::new(BigInt::from(1), BigInt::from(10u64.pow(12))) {
            failures.push("p_correct rational oracle");
            break;
        }
    }
    // bisection certificate at every table row
    'outer: for cfg in [perf::table1_config(), perf::table2_config(), perf::table3_config()] {
        let tol = 1e-8;
        for row in perf::run_table(&cfg, tol).unwrap() {
            let pb = row.max_p_b.unwrap();
            let cap = row.p_a.min(0.5);
            let certified = perf::p_combination(cfg.ea, cfg.b, row.p_a, pb) >= row.p_c
                && (pb + tol > cap
                    || perf::p_combination(cfg.ea, cfg.b, row.p_a, pb + tol) < row.p_c);
            if !certified {
                failures.push("bisection certificate");
                break 'outer;
            }
        }
    }

    if failures.is_empty() {
        (true, format!("{CASES} seeded instances per suite, zero failures"))
    } else {
        (false, format!("failed suites: {failures:?}"))
    }
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    let cat = CodeCatalog::bundled();
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");

    // 1-3: table reproduction
    for (label, cfg, paper) in [
        ("1 (Table I)", perf::table1_config(), &TABLE1[..]),
        ("2 (Table II)", perf::table2_config(), &TABLE2[..]),
        ("3 (Table III)", perf::table3_config(), &TABLE3[..]),
    ] {
        let start = Instant::now();
        let (mut ok, mut detail) = check_table(&cfg, paper);
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 1.0 {
            ok = false;
            detail.push_str(&format!(", too slow: {elapsed:?}"));
        } else {
            detail.push_str(&format!(", {elapsed:?}"));
        }
        report(&mut results, label, ok, detail);
    }

    // 4: dodecacode
    {
        let start = Instant::now();
        let dodeca = cat.code("dodecacode").unwrap();
        let self_dual = dodeca.trace_dual() == dodeca;
        let w = dodeca.min_weight(None, 1 << 24).unwrap();
        let elapsed = start.elapsed();
        let ok = self_dual && w.min_weight == 6 && w.enumerated == 4095 && elapsed.as_secs_f64() < 0.1;
        report(
            &mut results,
            "4 (dodecacode)",
            ok,
            format!(
                "trace self-dual: {self_dual}, min weight {} over all {} nonzero codewords, {elapsed:?}",
                w.min_weight, w.enumerated
            ),
        );
    }

    // 5: combination-code fixtures with seeded search
    {
        let start = Instant::now();
        let mut ok = true;
        let mut notes = Vec::new();
        for file in ["t43_14_2_7_4.json", "t43_15_2_8_5.json"] {
            let fx = Theorem43Fixture::load(&fixtures.join(file)).unwrap();
            let build = theorem43_build(&fx.input, true, 1 << 24).unwrap();
            let p = build.params;
            let got = (p.n, p.k, p.d_ea.unwrap(), p.c);
            let want = (fx.target.n, fx.target.k, fx.target.d, fx.target.c);
            // independent ebit count: symplectic Gram-Schmidt pairing of the
            // EA-stabilizer, which is the trace dual of the stacked code
            let sgs_c = build.m_code.trace_dual().subspace().gram_schmidt().pair_count();
            let bound_ok = build.bound_ok == Some(true);
            ok &= got == want && bound_ok && sgs_c == p.c;
            notes.push(format!(
                "[[{},{},{};{}]] d1+d2={} bound_ok={bound_ok} sgs_c={sgs_c}",
                got.0, got.1, got.2, got.3,
                build.d1.unwrap() + build.d2.unwrap(),
            ));
        }
        // the searches that produced the fixtures re-run from their seeds
        let dodeca = cat.code("dodecacode").unwrap();
        for (e_name, target_d) in [("acd_2_4_1", 7), ("acd_3_4_2", 8)] {
            let e = cat.code(e_name).unwrap();
            let found = search_theorem43(&dodeca, 8, &e, target_d, 10_000, 1, 1 << 24).unwrap();
            ok &= found.is_some();
        }
        let elapsed = start.elapsed();
        ok &= elapsed.as_secs_f64() < 5.0;
        report(
            &mut results,
            "5 (Theorem 4.3 fixtures)",
            ok,
            format!("{}; search reproduced from seed 1; {elapsed:?}", notes.join("; ")),
        );
    }

    // 6: five-qubit code
    {
        let five = cat.code("five_qubit").unwrap();
        let p = params::qecc_params(&five, true, 1 << 24).unwrap();
        let ok = (p.n, p.k, p.d) == (5, 1, Some(3));
        report(&mut results, "6 (five-qubit code)", ok, format!("derived {p}"));
    }

    // 7: property suites
    {
        let (ok, detail) = property_suites();
        report(&mut results, "7 (property suites)", ok, detail);
    }

    // 8: protector bound and catalog lookup
    {
        let mut ok = true;
        for (c, want_m) in [(4, 10), (5, 11), (6, 12), (8, 14), (9, 15), (10, 16)] {
            ok &= params::protector_bound(c).unwrap().m == want_m;
        }
        let (p, src) = cat.lookup_protector(3).unwrap();
        ok &= (p.n, p.k, p.d) == (8, 3, Some(3)) && matches!(src, ProtectorSource::Catalog);
        report(
            &mut results,
            "8 (protector bound)",
            ok,
            format!("m(4,5,6,8,9,10) = 10,11,12,14,15,16; lookup_protector(3) = {p}"),
        );
    }

    // Desk-scale limit: the suite must say, not silently pass, that the
    // (30,2^30,12)-based combinations ship parameters-only.
    {
        let rows = corollary44_suite(&cat, true, 1 << 24).unwrap();
        let beyond: Vec<&str> = rows
            .iter()
            .filter(|r| {
                matches!(&r.status, SuiteStatus::ParametersOnly { reason } if reason.contains("beyond cap"))
            })
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(beyond.len(), 3, "the three (30,2^30,12)-based rows");
        println!(
            "note: distance NOT verified for {} — built on the (30,2^30,12) self-dual code, \
             enumeration of 2^30 codewords exceeds the 2^24 cap; parameters only.",
            beyond.join(", ")
        );
    }

    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{}: {}", r.label, r.detail))
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
