//! Cross-checks between the closed forms, Burnside sums, orbit enumeration,
//! witness constructions and the pair-permutation counts.

use std::time::Instant;

use num_bigint::BigUint;
use quadmap::census::{
    adjudicate_beta, biggs_check, burnside_count, formula_report, orbit_count, pair_permutation_check, FixedSource,
    OrbitOptions,
};
use quadmap::complete::{admissible_classes, fixed_maps_count, is_stable, witness_map};
use quadmap::perm::factorial;
use quadmap::{BetaVariant, CensusError, CycleType, Permutation, SurfaceKind};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{CliResult, Failure, Format, Level, VerifyArgs};

const KINDS: [SurfaceKind; 3] = [SurfaceKind::Orientable, SurfaceKind::NonOrientable, SurfaceKind::LocallyOrientable];

struct Check {
    name: String,
    passed: bool,
    detail: String,
    seconds: f64,
}

#[derive(Default)]
struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> (bool, String)) {
        let start = Instant::now();
        let (passed, detail) = f();
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
}

fn count_of(r: Result<quadmap::CensusReport, CensusError>) -> Result<BigUint, String> {
    match r {
        Ok(r) => Ok(r.count),
        Err(CensusError::NonIntegerOrbitCount { report, remainder }) => {
            Err(format!("{} with remainder {remainder}", report.count))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn expect_counts(n: usize, want: [u64; 3], variant: BetaVariant) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (kind, w) in KINDS.into_iter().zip(want) {
        match count_of(formula_report(n, kind, variant)) {
            Ok(c) => {
                ok &= c == BigUint::from(w);
                parts.push(format!("{kind} {c} (want {w})"));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{kind}: {e}"));
            }
        }
    }
    (ok, parts.join(", "))
}

fn orbit(n: usize, kind: SurfaceKind, long_run: bool) -> Result<BigUint, String> {
    let opts = OrbitOptions {
        long_run,
        ..OrbitOptions::default()
    };
    count_of(orbit_count(n, kind, &opts))
}

fn burnside(n: usize, kind: SurfaceKind, source: FixedSource) -> Result<BigUint, String> {
    count_of(burnside_count(n, kind, source, BetaVariant::Proof))
}

fn compare(a: Result<BigUint, String>, b: Result<BigUint, String>, label_a: &str, label_b: &str) -> (bool, String) {
    match (a, b) {
        (Ok(x), Ok(y)) => (x == y, format!("{label_a} {x}, {label_b} {y}")),
        (x, y) => (false, format!("{label_a} {x:?}, {label_b} {y:?}")),
    }
}

/// Fixed counts are positive exactly on the listed classes.
fn admissibility(n: usize, kind: SurfaceKind) -> (bool, String) {
    let listed = match admissible_classes(n, kind) {
        Ok(l) => l,
        Err(e) => return (false, e.to_string()),
    };
    let mut wrong = Vec::new();
    for class in CycleType::all(n) {
        let g = class.representative();
        for rev in [false, true] {
            let positive = fixed_maps_count(n, &g, rev, kind) > BigUint::ZERO;
            let emitted = listed.contains(&(class.clone(), rev));
            if positive != emitted {
                let tag = if rev { "r" } else { "" };
                let what = if positive { "fixed but unlisted" } else { "listed but unfixed" };
                wrong.push(format!("{class}{tag} {what}"));
            }
        }
    }
    if wrong.is_empty() {
        (true, format!("{} classes listed", listed.len()))
    } else {
        (false, wrong.join("; "))
    }
}

fn witnesses(n: usize, kind: SurfaceKind) -> (bool, String) {
    let listed = match admissible_classes(n, kind) {
        Ok(l) => l,
        Err(e) => return (false, e.to_string()),
    };
    let mut bad = Vec::new();
    for (class, rev) in &listed {
        let tag = if *rev { "r" } else { "" };
        match witness_map(n, class, *rev, kind) {
            Ok(w) => {
                let stable = is_stable(&w.map, &w.action).unwrap_or(false);
                if !stable || w.surface.orientable != (kind == SurfaceKind::Orientable) {
                    bad.push(format!("{class}{tag} stable={stable} surface={}", w.surface.label()));
                }
            }
            Err(e) => bad.push(format!("{class}{tag}: {e}")),
        }
    }
    if bad.is_empty() {
        (true, format!("{} witnesses", listed.len()))
    } else {
        (false, bad.join("; "))
    }
}

fn biggs(n: usize) -> (bool, String) {
    match biggs_check(n, &OrbitOptions::default()) {
        Ok(rows) => {
            let orders: Vec<usize> = rows.iter().map(|r| r.preserving_order).collect();
            let ok = rows.iter().all(|r| r.divides);
            (ok, format!("{} classes, preserving orders {orders:?} against {}", rows.len(), n * (n - 1)))
        }
        Err(e) => (false, e.to_string()),
    }
}

/// `|Fix(g)| = |Fix(hgh⁻¹)|` for seeded random `g` and `h`.
fn class_function(n: usize, rng: &mut ChaCha8Rng, samples: usize) -> (bool, String) {
    let random_perm = |rng: &mut ChaCha8Rng| {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        Permutation::from_images(v).expect("shuffle is a permutation")
    };
    let mut bad = Vec::new();
    for _ in 0..samples {
        let g = random_perm(rng);
        let h = random_perm(rng);
        let conj = g.conjugate_by(&h);
        for rev in [false, true] {
            let a = fixed_maps_count(n, &g, rev, SurfaceKind::LocallyOrientable);
            let b = fixed_maps_count(n, &conj, rev, SurfaceKind::LocallyOrientable);
            if a != b {
                bad.push(format!("g={g} h={h} rev={rev}: {a} vs {b}"));
            }
        }
    }
    (bad.is_empty(), if bad.is_empty() { format!("{samples} samples") } else { bad.join("; ") })
}

fn integrality(max_n: usize) -> (bool, String) {
    let mut fractional = Vec::new();
    for n in 4..=max_n {
        for kind in KINDS {
            if let Err(e) = count_of(formula_report(n, kind, BetaVariant::Proof)) {
                fractional.push(format!("n={n} {kind}: {e}"));
            }
        }
    }
    if fractional.is_empty() {
        (true, format!("all integers for 4 <= n <= {max_n}"))
    } else {
        (false, fractional.join("; "))
    }
}

fn quick(s: &mut Suite, rng: &mut ChaCha8Rng) {
    s.run("formula counts at n=4", || expect_counts(4, [3, 8, 11], BetaVariant::Proof));
    for (kind, want) in [
        (SurfaceKind::Orientable, 3u32),
        (SurfaceKind::NonOrientable, 8),
        (SurfaceKind::LocallyOrientable, 11),
    ] {
        s.run(format!("orbit count n=4 {kind}"), || {
            compare(orbit(4, kind, false), Ok(BigUint::from(want)), "orbits", "expected")
        });
        s.run(format!("burnside equals orbit count n=4 {kind}"), || {
            compare(burnside(4, kind, FixedSource::Dfs), orbit(4, kind, false), "burnside", "orbits")
        });
    }
    s.run("identity fixes (n-2)!^n orientable codes at n=4", || identity(4));
    for kind in [SurfaceKind::Orientable, SurfaceKind::NonOrientable] {
        s.run(format!("admissible classes n=4 {kind}"), || admissibility(4, kind));
        s.run(format!("witness maps n=4 {kind}"), || witnesses(4, kind));
    }
    s.run("orientation-preserving automorphism orders divide 12 at n=4", || biggs(4));
    for (m, k) in [(4, 2), (4, 4), (6, 2), (6, 3), (6, 6)] {
        s.run(format!("stable pair permutations m={m} k={k}"), || match pair_permutation_check(m, k) {
            Ok(c) => (
                c.agrees(),
                format!(
                    "closed form {}, counted {} (g only {}, g·alpha only {}, both {})",
                    c.formula, c.implemented, c.g_only, c.g_alpha_only, c.both
                ),
            ),
            Err(e) => (false, e.to_string()),
        });
    }
    s.run("fixed counts are class functions at n=4", || class_function(4, rng, 8));
}

fn identity(n: usize) -> (bool, String) {
    let got = fixed_maps_count(n, &Permutation::identity(n), false, SurfaceKind::Orientable);
    let want = factorial(n - 2).pow(n as u32);
    (got == want, format!("{got} (want {want})"))
}

fn standard(s: &mut Suite, rng: &mut ChaCha8Rng) {
    s.run("formula counts at n=5", || expect_counts(5, [45, 1035, 1080], BetaVariant::Proof));
    s.run("orbit count n=5 orientable", || {
        compare(orbit(5, SurfaceKind::Orientable, false), Ok(BigUint::from(45u32)), "orbits", "expected")
    });
    s.run("burnside equals orbit count n=5 orientable", || {
        compare(
            burnside(5, SurfaceKind::Orientable, FixedSource::Dfs),
            orbit(5, SurfaceKind::Orientable, false),
            "burnside",
            "orbits",
        )
    });
    s.run("burnside count n=5 locally-orientable", || {
        compare(
            burnside(5, SurfaceKind::LocallyOrientable, FixedSource::Dfs),
            Ok(BigUint::from(1080u32)),
            "burnside",
            "expected",
        )
    });
    for n in [5, 7, 9] {
        for kind in KINDS {
            s.run(format!("burnside over closed-form fixed counts n={n} {kind}"), || {
                compare(
                    burnside(n, kind, FixedSource::Formula),
                    count_of(formula_report(n, kind, BetaVariant::Proof)),
                    "burnside",
                    "closed form",
                )
            });
        }
    }
    for n in [5, 6] {
        s.run(format!("identity fixes (n-2)!^n orientable codes at n={n}"), || identity(n));
    }
    for kind in [SurfaceKind::Orientable, SurfaceKind::NonOrientable] {
        s.run(format!("admissible classes n=5 {kind}"), || admissibility(5, kind));
        for n in [5, 6, 8] {
            s.run(format!("witness maps n={n} {kind}"), || witnesses(n, kind));
        }
    }
    s.run("orientation-preserving automorphism orders divide 20 at n=5", || biggs(5));
    s.run("closed forms are integers for n <= 12", || integrality(12));
    s.run("fixed counts are class functions at n=5", || class_function(5, rng, 4));
}

fn full(s: &mut Suite) {
    s.run("orbit count n=5 locally-orientable (long run)", || {
        compare(
            orbit(5, SurfaceKind::LocallyOrientable, true),
            Ok(BigUint::from(1080u32)),
            "orbits",
            "expected",
        )
    });
    s.run("burnside equals orbit count n=5 locally-orientable", || {
        compare(
            burnside(5, SurfaceKind::LocallyOrientable, FixedSource::Dfs),
            orbit(5, SurfaceKind::LocallyOrientable, true),
            "burnside",
            "orbits",
        )
    });
}

fn beta(s: &mut Suite) -> Option<String> {
    let mut named = None;
    s.run("beta adjudication at n=7 class [1,3,3]", || {
        let class = CycleType::new(vec![1, 3, 3]).expect("valid");
        match adjudicate_beta(7, &class) {
            Ok(b) => {
                let names: Vec<&str> = b.matching.iter().map(|v| v.as_str()).collect();
                named = (b.matching.len() == 1).then(|| names[0].to_string());
                (
                    b.matching.len() == 1,
                    format!(
                        "counted {} (signed codes {}), statement {}, proof {}, matches [{}]",
                        b.twist_carrier,
                        b.code_carrier,
                        b.statement,
                        b.proof,
                        names.join(", ")
                    ),
                )
            }
            Err(e) => (false, e.to_string()),
        }
    });
    named
}

pub fn run(a: &VerifyArgs, format: Format) -> CliResult {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut suite = Suite::default();
    quick(&mut suite, &mut rng);
    if a.level >= Level::Standard {
        standard(&mut suite, &mut rng);
    }
    if a.level >= Level::Full {
        full(&mut suite);
    }
    let variant = if a.adjudicate_beta || a.level >= Level::Full {
        Some(beta(&mut suite))
    } else {
        None
    };

    let failed: Vec<&str> = suite.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let level = format!("{:?}", a.level).to_lowercase();
    match format {
        Format::Json => {
            let checks: Vec<_> = suite
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            let v = json!({
                "level": level,
                "seed": a.seed,
                "passed": failed.is_empty(),
                "beta_variant": variant.flatten(),
                "checks": checks,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        _ => {
            for c in &suite.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                println!("{tag} {} ({:.2} s): {}", c.name, c.seconds, c.detail);
            }
            if let Some(v) = &variant {
                match v {
                    Some(name) => println!("beta variant: {name}"),
                    None => println!("beta variant: no unique match"),
                }
            }
            println!(
                "{} of {} checks passed at level {level}",
                suite.checks.len() - failed.len(),
                suite.checks.len()
            );
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verify(format!("failed: {}", failed.join(", "))))
    }
}
