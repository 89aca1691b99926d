//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! cargo test --release --test acceptance

use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::Rng;

use bohrcert::engine::{
    certify, compact_inclusion_slack, large_spectrum, spectral_bound, t_conditions, CertificateInputs,
    FiniteAction, Representation, Theorem, T_FIXED,
};
use bohrcert::groups::{make_alternating5, make_cyclic_product, make_dihedral, ElementSet, Group};
use bohrcert::instances::{
    doubled_translation, polygon_action, quotient_action, random_measure, random_points, random_set, random_vector,
    rng, unit_vector_with_invariant_mass,
};
use bohrcert::oracle::verify_certificate;
use bohrcert::repr::{
    irreps, max_homomorphism_defect, max_unitarity_defect, parseval_sum, GroupMeasure, IrrepCatalog,
};
use bohrcert::density::{weyl_average, IndexSequence, Theta};
use bohrcert::sweep::{exhaustive_comb, random_grid, run_instance, GridConfig, Instance, RowVerdict, SweepRow};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

/// Rows plus the JSON of every certificate, one per line, in instance order.
fn run_with_certificates(instances: &[Instance]) -> (Vec<SweepRow>, String) {
    use rayon::prelude::*;
    let results: Vec<_> = instances.par_iter().enumerate().map(|(i, inst)| run_instance(i, inst)).collect();
    let mut json = String::new();
    let mut rows = Vec::with_capacity(results.len());
    for (row, cert) in results {
        if let Some(c) = cert {
            json.push_str(&serde_json::to_string(&c).expect("certificate serializes"));
        }
        json.push('\n');
        rows.push(row);
    }
    (rows, json)
}

fn z8_exhaustive() -> (Vec<SweepRow>, String) {
    let g = make_cyclic_product(&[8]).unwrap();
    run_with_certificates(&exhaustive_comb(&g).unwrap())
}

fn randomized_grid() -> (Vec<SweepRow>, String) {
    let config = GridConfig { count: 200, seed: 20240601, ..GridConfig::default() };
    run_with_certificates(&random_grid(&config).unwrap())
}

fn criterion_1() -> (Outcome, String) {
    let start = Instant::now();
    let (rows, json) = z8_exhaustive();
    let secs = start.elapsed().as_secs_f64();
    let failing = rows.iter().filter(|r| r.verdict != RowVerdict::Pass).count();
    let ok = rows.len() == 255 * 255 && failing == 0 && secs <= 60.0;
    (outcome(ok, format!("{} pairs, {failing} failing, {secs:.2} s (limit 60 s)", rows.len())), json)
}

fn criterion_2() -> (Outcome, String) {
    let (rows, json) = randomized_grid();
    let rate = |t: Theorem| {
        let sel: Vec<_> = rows.iter().filter(|r| r.theorem == t).collect();
        let pass = sel.iter().filter(|r| r.verdict == RowVerdict::Pass).count();
        (pass, sel.len())
    };
    let (cp, cn) = rate(Theorem::Comb);
    let (ep, en) = rate(Theorem::Erg);
    let family = |prefix: &str, product: Option<bool>| {
        rows.iter()
            .filter(|r| r.theorem == Theorem::Comb && r.group.starts_with(prefix))
            .filter(|r| product.is_none_or(|p| r.group.contains('x') == p))
            .count()
    };
    let (zn, zab, dn) = (family("Z", Some(false)), family("Z", Some(true)), family("D", None));
    let min_margin = rows
        .iter()
        .filter(|r| r.spectrum_size.unwrap_or(0) > 0)
        .filter_map(|r| r.margin_bohr)
        .fold(f64::INFINITY, f64::min);
    let r_values: std::collections::BTreeSet<String> = rows
        .iter()
        .filter(|r| r.theorem == Theorem::Erg)
        .map(|r| match (r.r, r.beta) {
            (Some(r), Some(b)) => format!("{:.2}", r / b),
            _ => "error".into(),
        })
        .collect();
    let ok = cn == 200 && en == 600 && cp == cn && ep == en && zn > 0 && zab > 0 && dn > 0 && min_margin > 1e-6;
    let detail = format!(
        "comb {cp}/{cn}, erg {ep}/{en} (r/beta in {r_values:?}); groups Z_N {zn}, Z_a x Z_b {zab}, D_n {dn}; \
         min Bohr margin {min_margin:.3e}"
    );
    (outcome(ok, detail), json)
}

fn criterion_3() -> Outcome {
    let g = make_alternating5();
    let cat = irreps(&g);
    let sum = cat.completeness_sum();
    let d_min = cat.d_min();
    let mut passed = 0;
    let mut total = 0;
    let mut bound_ok = true;
    for seed in 0..30u64 {
        let mut r = rng(1000 + seed);
        let alpha = r.gen_range(0.1..0.8);
        let beta = r.gen_range(0.1..0.8);
        let a = random_set(&g, alpha, &mut r).unwrap();
        let inputs = match seed % 3 {
            0 => CertificateInputs::Comb { a, b: random_set(&g, beta, &mut r).unwrap() },
            1 => {
                let b = random_points(60, beta, &mut r).unwrap();
                let thr = b.measure() * [0.0, 0.25, 0.5][(seed / 3 % 3) as usize];
                CertificateInputs::Erg { a, action: FiniteAction::translation(&g), b, r: thr }
            }
            _ => {
                let rep = Representation::regular(&g);
                let u = unit_vector_with_invariant_mass(&rep, beta, &mut r).unwrap();
                CertificateInputs::Uni { a, rep, u, beta, r: beta / 4.0 }
            }
        };
        total += 1;
        let cert = certify(&cat, &inputs).unwrap();
        let report = verify_certificate(&cert, &cat, &inputs).unwrap();
        let expected = spectral_bound(cert.alpha, cert.beta, cert.r, 3).unwrap();
        bound_ok &= cert.bound == expected;
        if cert.passed() && report.passed() {
            passed += 1;
        }
    }
    let ok = sum == 60 && d_min == Some(3) && passed >= 20 && passed == total && bound_ok;
    outcome(
        ok,
        format!("sum d^2 = {sum}, d_min = {d_min:?}, {passed}/{total} instances pass, bound uses d_min = 3: {bound_ok}"),
    )
}

fn all_providers(r: &mut impl Rng) -> Group {
    match r.gen_range(0..4) {
        0 => make_cyclic_product(&[r.gen_range(2..=96)]).unwrap(),
        1 => make_cyclic_product(&[r.gen_range(2..=8), r.gen_range(2..=8), r.gen_range(1..=3)]).unwrap(),
        2 => make_dihedral(r.gen_range(3..=30)).unwrap(),
        _ => make_alternating5(),
    }
}

fn catalog_for(cache: &mut std::collections::HashMap<String, IrrepCatalog>, g: &Group) -> IrrepCatalog {
    cache.entry(g.name().to_string()).or_insert_with(|| irreps(g)).clone()
}

fn criterion_4() -> Outcome {
    let mut r = rng(44);
    let mut cache = std::collections::HashMap::new();
    let mut violations = 0;
    let mut min_slack = f64::INFINITY;
    let mut families = [0usize; 3];
    for _ in 0..500 {
        let g = all_providers(&mut r);
        let cat = catalog_for(&mut cache, &g);
        let mu = random_measure(&g, &mut r).unwrap();
        let delta = 10f64.powf(r.gen_range(-1.7..0.0));
        let size = large_spectrum(&cat, &mu, delta).unwrap().len() as f64;
        let xi_sq = mu.l2_density_sq();
        let bound = (xi_sq - 1.0) / (cat.d_min().unwrap() as f64 * delta * delta);
        let slack = bound - size;
        min_slack = min_slack.min(slack);
        if slack < -1e-9 {
            violations += 1;
        }
        families[match g.family() {
            bohrcert::groups::Family::CyclicProduct => 0,
            bohrcert::groups::Family::Dihedral => 1,
            bohrcert::groups::Family::Alternating5 => 2,
        }] += 1;
    }
    outcome(
        violations == 0 && families.iter().all(|&c| c > 0),
        format!("500 draws (cyclic {}, dihedral {}, A5 {}), {violations} violations, min slack {min_slack:.3e}",
            families[0], families[1], families[2]),
    )
}

fn criterion_5() -> Outcome {
    let mut r = rng(55);
    let mut cache = std::collections::HashMap::new();
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let g = all_providers(&mut r);
        let cat = catalog_for(&mut cache, &g);
        let mu = random_measure(&g, &mut r).unwrap();
        worst = worst.max((parseval_sum(&cat, &mu).unwrap() - mu.l2_density_sq()).abs());
    }
    let z12 = make_cyclic_product(&[12]).unwrap();
    let a = ElementSet::from_indices(&z12, [0, 3, 6, 9]).unwrap();
    let hand = parseval_sum(&irreps(&z12), &GroupMeasure::uniform_on(&a).unwrap()).unwrap();
    outcome(
        worst <= 1e-9 && (hand - 3.0).abs() <= 1e-9,
        format!("max deviation {worst:.3e} over 500 measures (tol 1e-9); Z12 {{0,3,6,9}} gives {hand}"),
    )
}

fn criterion_6() -> Outcome {
    let mut r = rng(66);
    let mut cache = std::collections::HashMap::new();
    let mut worst = f64::INFINITY;
    let mut kinds = [0usize; 3];
    for _ in 0..100 {
        let g = match r.gen_range(0..3) {
            0 => make_cyclic_product(&[r.gen_range(2..=40)]).unwrap(),
            1 => make_dihedral(r.gen_range(3..=16)).unwrap(),
            _ => make_alternating5(),
        };
        let cat = catalog_for(&mut cache, &g);
        let mu = random_measure(&g, &mut r).unwrap();
        let kind = r.gen_range(0..3);
        kinds[kind] += 1;
        let rep = match kind {
            0 => Representation::regular(&g),
            1 => Representation::Permutation(match (g.dihedral_n(), g.moduli()) {
                (Some(_), _) => polygon_action(&g).unwrap(),
                (None, Some([n])) if *n % 2 == 0 => quotient_action(&g, n / 2).unwrap(),
                _ => doubled_translation(&g).unwrap(),
            }),
            _ => {
                let k = r.gen_range(1..=4);
                let blocks =
                    (0..k).map(|_| cat.items()[r.gen_range(0..cat.len())].clone()).collect();
                Representation::irrep_sum(&g, blocks).unwrap()
            }
        };
        let v = random_vector(rep.dim(), &mut r);
        let delta = r.gen_range(0.01..1.0);
        worst = worst.min(compact_inclusion_slack(&cat, &mu, &rep, &v, delta).unwrap());
    }
    outcome(
        worst >= -1e-8,
        format!(
            "100 tuples (regular {}, permutation {}, irrep sums {}), min slack over all k: {worst:.3e} (tol -1e-8)",
            kinds[0], kinds[1], kinds[2]
        ),
    )
}

fn criterion_7() -> Outcome {
    let (growth, square) = t_conditions(T_FIXED);
    let ok = T_FIXED == 17.0
        && square <= 17.0
        && growth > 1.0
        && (square - 16.955_017_301_038_062).abs() < 1e-12
        && (growth - 1.028_521_270_099_735_5).abs() < 1e-12
        && bohrcert::engine::check_t_fixed().is_ok();
    outcome(ok, format!("T = {T_FIXED}: (4 + 2/T)^2 = {square} <= 17, (1 - 1/2T)(1 + 1/2T)^2 = {growth} > 1"))
}

fn criterion_8() -> Outcome {
    let mut groups: Vec<Group> = Vec::new();
    for n in 1..=120 {
        groups.push(make_cyclic_product(&[n]).unwrap());
    }
    for a in 2..=60 {
        for b in a..=60 {
            if a * b <= 120 {
                groups.push(make_cyclic_product(&[a, b]).unwrap());
            }
        }
    }
    for moduli in [[2, 2, 2], [2, 2, 3], [2, 3, 4], [3, 3, 3], [2, 2, 30], [2, 4, 5]] {
        groups.push(make_cyclic_product(&moduli).unwrap());
    }
    for n in 1..=60 {
        if let Ok(g) = make_dihedral(n) {
            groups.push(g);
        }
    }
    groups.push(make_alternating5());

    let (mut unit, mut hom, mut orth) = (0f64, 0f64, 0f64);
    let mut complete = true;
    let mut failures = Vec::new();
    for g in &groups {
        let cat = irreps(g);
        let pairs: Vec<(usize, usize)> = g.elements().flat_map(|a| g.elements().map(move |b| (a, b))).collect();
        let u = cat.items().iter().map(|s| max_unitarity_defect(s, g.elements())).fold(0.0, f64::max);
        let h = cat.items().iter().map(|s| max_homomorphism_defect(s, pairs.iter().copied())).fold(0.0, f64::max);
        let o = cat.max_orthogonality_defect();
        let c = cat.completeness_sum() == g.order();
        if u > 1e-10 || h > 1e-10 || o > 1e-9 || !c {
            failures.push(g.name().to_string());
        }
        unit = unit.max(u);
        hom = hom.max(h);
        orth = orth.max(o);
        complete &= c;
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} groups with |G| <= 120: max unitarity {unit:.2e}, homomorphism {hom:.2e} (tol 1e-10), \
             orthogonality {orth:.2e} (tol 1e-9), completeness exact: {complete}; failing {failures:?}",
            groups.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let seq = IndexSequence::power_floor(2.5).unwrap();
    let w = |text: &str| weyl_average(&seq, &text.parse::<Theta>().unwrap(), 10_000).unwrap();
    let (a, b, zero) = (w("sqrt2-1"), w("(sqrt5-1)/2"), w("0"));
    outcome(
        a <= 0.05 && b <= 0.05 && zero == 1.0,
        format!("n = 1e4: theta = sqrt2-1 -> {a:.5}, (sqrt5-1)/2 -> {b:.5} (limit 0.05), 0 -> {zero}"),
    )
}

fn cli_certificate_bytes(dir: &std::path::Path, tag: &str) -> Vec<u8> {
    let path = dir.join(format!("{tag}.json"));
    let status = Command::new(env!("CARGO_BIN_EXE_bohrcert"))
        .args(["certify", "--group", "A5", "--random", "--alpha", "0.4", "--beta", "0.3", "--seed", "7", "--out"])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert!(status.status.success(), "certify failed: {}", String::from_utf8_lossy(&status.stderr));
    std::fs::read(&path).expect("certificate written")
}

fn criterion_10(first: &(String, String)) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let second = pool.install(|| (z8_exhaustive().1, randomized_grid().1));
    let dir = std::env::temp_dir().join(format!("bohrcert-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cli_same = cli_certificate_bytes(&dir, "a") == cli_certificate_bytes(&dir, "b");
    let _ = std::fs::remove_dir_all(&dir);
    let same1 = first.0 == second.0;
    let same2 = first.1 == second.1;
    outcome(
        same1 && same2 && cli_same,
        format!(
            "criterion 1 certificates identical: {same1} ({} bytes), criterion 2: {same2} ({} bytes), \
             CLI certificate files identical: {cli_same}",
            first.0.len(),
            first.1.len()
        ),
    )
}

fn main() -> ExitCode {
    let mut results = Vec::new();
    let (c1, json1) = criterion_1();
    results.push((1, "exhaustive Z8 comb", c1));
    let (c2, json2) = criterion_2();
    results.push((2, "randomized comb/erg suite", c2));
    results.push((3, "A5 catalog and instances", criterion_3()));
    results.push((4, "large spectrum size bound", criterion_4()));
    results.push((5, "Parseval identity", criterion_5()));
    results.push((6, "compact inclusion inequality", criterion_6()));
    results.push((7, "constants for T = 17", criterion_7()));
    results.push((8, "representation validity", criterion_8()));
    results.push((9, "Weyl averages along floor(k^(5/2))", criterion_9()));
    results.push((10, "determinism", criterion_10(&(json1, json2))));

    let mut all = true;
    for (n, name, o) in &results {
        println!("criterion {n:2} {:4} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        all &= o.passed;
    }
    if all {
        println!("acceptance: all {} criteria pass", results.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
