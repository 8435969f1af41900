//! Acceptance criteria, one line each. Runs without the test harness so the
//! lines always print; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use cxqt::appendix::{
    det_identity_report, h3_charpoly_table, h3_negative_classes_have_minus_one, h3_relations_hold,
    h3_system_from_generators, h4_census, map_star, random_unit_quaternion, sum_map_det,
    Quaternion,
};
use cxqt::closed::{p_all, p_even_evens, p_odd, q_closed, q_dihedral};
use cxqt::counter::{e_grade, q_of_group, verify_multiplicativity};
use cxqt::error::CacheError;
use cxqt::exact::Scalar;
use cxqt::group::{cache_load, cache_store, conjugacy_classes, generate, Budget, FiniteGroup};
use cxqt::roots::{CartanType, RootSystem};
use cxqt::verify::{run_suite, Status, Suite, VerifyOptions};
use cxqt::Error;
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

fn group(name: &str, budget: &Budget) -> Result<FiniteGroup, String> {
    let sys = RootSystem::build(ty(name)).map_err(|e| e.to_string())?;
    generate(&sys, budget).map_err(|e| format!("{name}: {e}"))
}

fn q_brute(name: &str, budget: &Budget) -> Result<(u64, usize, usize), String> {
    let g = group(name, budget)?;
    let r = q_of_group(&g);
    Ok((
        u64::try_from(r.q).unwrap(),
        r.num_classes.unwrap() as usize,
        g.order(),
    ))
}

fn big(n: u64) -> BigUint {
    n.into()
}

/// Sorted (size, invariants) over all classes.
fn invariant_multiset(g: &FiniteGroup) -> Vec<(u64, cxqt::group::Invariants)> {
    let mut v: Vec<_> = conjugacy_classes(g)
        .iter()
        .map(|c| (c.size, c.invariants()))
        .collect();
    v.sort();
    v
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(label: &str, start: Instant, limit: Duration) -> Result<f64, String> {
    let t = start.elapsed();
    ensure(t < limit, || {
        format!(
            "{label} took {:.1}s, limit {}s",
            t.as_secs_f64(),
            limit.as_secs()
        )
    })?;
    Ok(t.as_secs_f64())
}

/// Peak resident set size in bytes, where the platform reports it.
fn peak_rss() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

fn table_reproduction() -> Outcome {
    let budget = Budget::default();
    let mut notes = Vec::new();

    let start = Instant::now();
    let mut a = Vec::new();
    for (n, want) in (2..=8).zip([1, 2, 2, 3, 4, 5, 6]) {
        let (q, _, _) = q_brute(&format!("A{}", n - 1), &budget)?;
        ensure(q == want && big(q) == p_odd(n as i64).unwrap(), || {
            format!("A{}: q = {q}, expected {want}", n - 1)
        })?;
        a.push(q.to_string());
    }
    notes.push(format!(
        "A {} in {:.1}s",
        a.join(","),
        within("A series", start, Duration::from_secs(60))?
    ));

    let start = Instant::now();
    for (n, want) in (1..=6).zip([1, 2, 3, 5, 7, 11]) {
        let mut reference = None;
        for fam in ["B", "C", "BC"] {
            let g = group(&format!("{fam}{n}"), &budget)?;
            let q = q_of_group(&g).q;
            ensure(q == big(want) && q == p_all(n).unwrap(), || {
                format!("{fam}{n}: q = {q}, expected {want}")
            })?;
            let inv = (g.order(), invariant_multiset(&g));
            match &reference {
                None => reference = Some(inv),
                Some(r) => ensure(*r == inv, || {
                    format!("{fam}{n} differs from B{n} as a group")
                })?,
            }
        }
    }
    notes.push(format!(
        "B/C/BC 1,2,3,5,7,11 in {:.1}s",
        within("B/C/BC series", start, Duration::from_secs(120))?
    ));

    let start = Instant::now();
    for (n, want) in (2..=6).zip([1, 2, 3, 4, 6]) {
        let (q, _, _) = q_brute(&format!("D{n}"), &budget)?;
        ensure(q == want && big(q) == p_even_evens(n).unwrap(), || {
            format!("D{n}: q = {q}, expected {want}")
        })?;
    }
    notes.push(format!(
        "D 1,2,3,4,6 in {:.1}s",
        within("D series", start, Duration::from_secs(120))?
    ));

    for (name, want, order, classes) in [
        ("G2", 3, 12, None),
        ("F4", 9, 1152, None),
        ("H3", 4, 120, None),
        ("H4", 20, 14400, Some(34)),
        ("E6", 9, 51840, None),
    ] {
        let start = Instant::now();
        let (q, nc, o) = q_brute(name, &budget)?;
        ensure(q == want && o == order, || {
            format!("{name}: q = {q}, |W| = {o}")
        })?;
        ensure(classes.is_none_or(|c| c == nc), || {
            format!("{name}: {nc} classes")
        })?;
        ensure(big(q) == q_closed(ty(name)).unwrap(), || {
            format!("{name}: closed form disagrees")
        })?;
        let secs = within(name, start, Duration::from_secs(300))?;
        notes.push(format!("{name} {q}/{nc} classes in {secs:.1}s"));
    }

    let start = Instant::now();
    let (q, nc, o) = q_brute("E7", &Budget::slow())?;
    let secs = within("E7", start, Duration::from_secs(600))?;
    ensure(q == 12 && o == 2_903_040, || {
        format!("E7: q = {q}, |W| = {o}")
    })?;
    let rss = peak_rss();
    if let Some(b) = rss {
        ensure(b < 4 << 30, || format!("peak memory {} MB", b >> 20))?;
    }
    notes.push(format!(
        "E7 12/{nc} classes in {secs:.1}s, peak {}",
        rss.map_or("n/a".into(), |b| format!("{} MB", b >> 20))
    ));

    let e8 = RootSystem::build(ty("E8")).map_err(|e| e.to_string())?;
    match generate(&e8, &budget) {
        Err(Error::BudgetExceeded {
            order: 696_729_600, ..
        }) => {}
        other => return Err(format!("E8 brute force was not refused: {other:?}")),
    }
    ensure(q_closed(ty("E8")).unwrap() == big(30), || {
        "E8 closed constant".into()
    })?;
    notes.push("E8 closed 30 (brute force refused)".into());
    Ok(notes.join("; "))
}

fn h3_matrices() -> Outcome {
    ensure(h3_relations_hold(), || "relations".into())?;
    let rows = h3_charpoly_table().map_err(|e| e.to_string())?;
    ensure(
        rows.len() == 5 && rows.iter().all(|r| r.computed == r.expected),
        || "table".into(),
    )?;
    ensure(
        h3_negative_classes_have_minus_one().map_err(|e| e.to_string())?,
        || "det -1 classes".into(),
    )?;
    let budget = Budget::default();
    let sys = h3_system_from_generators().map_err(|e| e.to_string())?;
    let g = generate(&sys, &budget).map_err(|e| e.to_string())?;
    let classes = conjugacy_classes(&g);
    let pos = classes.iter().filter(|c| c.det.is_positive()).count();
    let neg = classes.iter().filter(|c| c.det.is_negative()).count();
    let q = classes.iter().filter(|c| c.e_grade == 0).count();
    ensure(
        g.order() == 120 && classes.len() == 10 && pos == 5 && neg == 5 && q == 4,
        || {
            format!(
                "order {}, {} classes, {pos}/{neg}, q = {q}",
                g.order(),
                classes.len()
            )
        },
    )?;
    let built = group("H3", &budget)?;
    ensure(invariant_multiset(&g) == invariant_multiset(&built), || {
        "differs from built H3".into()
    })?;
    Ok("six relations, five table polynomials, 10 classes split 5/5, Q = 4".into())
}

fn quaternion_lemmas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let one = Quaternion::one();

    // (i) p = 1: every imaginary quaternion is a −1 eigenvector
    let m = map_star(&one).map_err(|e| e.to_string())?;
    for x in [
        Quaternion::i(),
        Quaternion::j(),
        Quaternion::k(),
        Quaternion::from_ints(0, 1, -2, 3),
    ] {
        ensure(m.apply(&x.to_vec()) == (-&x).to_vec(), || {
            format!("p = 1, x = {x}")
        })?;
    }
    for _ in 0..100 {
        let p = random_unit_quaternion(&mut rng);
        let m = map_star(&p).map_err(|e| e.to_string())?;
        ensure(e_grade(&m) >= 1, || format!("p = {p} has no eigenvalue -1"))?;
        if p != one {
            let x = &p - &one;
            ensure(m.apply(&x.to_vec()) == (-&x).to_vec(), || {
                format!("witness fails for p = {p}")
            })?;
        }
    }

    // (ii)
    ensure(sum_map_det(&one, &one) == Scalar::from_int(16), || {
        "l = r = 1".into()
    })?;
    let (i, j) = (Quaternion::i(), Quaternion::j());
    ensure(
        sum_map_det(&i, &i).is_zero() && (&(&i * &j) + &(&j * &i)).is_zero(),
        || "l = r = i".into(),
    )?;
    for _ in 0..1000 {
        let l = random_unit_quaternion(&mut rng);
        let r = random_unit_quaternion(&mut rng);
        let rep = det_identity_report(&l, &r);
        ensure(rep.holds(), || {
            format!("l = {l}, r = {r}: {} vs {}", rep.det, rep.claimed)
        })?;
    }

    // (iii)
    let c = h4_census(&Budget::default()).map_err(|e| e.to_string())?;
    ensure(c.passed() && c.classes == 34 && c.q == 20, || {
        format!("{c:?}")
    })?;
    Ok(format!(
        "witnesses on p = 1 and 100 random p; det identity on 1000 pairs + 2 cases; H4 {} of {} classes, {} rotations checked",
        c.q, c.classes, c.rotations
    ))
}

fn multiplicativity() -> Outcome {
    let budget = Budget::default();
    let mut seen = Vec::new();
    for (a, b, want) in [
        ("A1", "A1", 1u32),
        ("A2", "A1", 2),
        ("A2", "B2", 4),
        ("B2", "B2", 4),
    ] {
        let r1 = RootSystem::build(ty(a)).unwrap();
        let r2 = RootSystem::build(ty(b)).unwrap();
        ensure(
            verify_multiplicativity(&r1, &r2, &budget).map_err(|e| e.to_string())?,
            || format!("{a}+{b}"),
        )?;
        let q = q_of_group(&generate(&r1.direct_sum(&r2).unwrap(), &budget).unwrap()).q;
        ensure(q == BigUint::from(want), || format!("Q({a}+{b}) = {q}"))?;
        seen.push(format!("{a}+{b} = {q}"));
    }
    Ok(seen.join(", "))
}

fn property_suites() -> Outcome {
    let opts = VerifyOptions::default();
    let mut count = 0;
    for suite in [Suite::Roots, Suite::Groups, Suite::Classes] {
        for line in run_suite(suite, &opts) {
            ensure(line.status != Status::Fail, || line.to_string())?;
            count += 1;
        }
    }
    for n in 2..=1000 {
        ensure(q_dihedral(n).unwrap() == (n as u64).div_ceil(2), || {
            format!("dihedral n = {n}")
        })?;
    }
    // byte-identical reports across worker counts, on a larger group too
    let sys = RootSystem::build(ty("F4")).unwrap();
    let mut outputs = Vec::new();
    for threads in [1, 4, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        outputs.push(pool.install(|| {
            q_of_group(&generate(&sys, &Budget::default()).unwrap())
                .to_json()
                .unwrap()
        }));
    }
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
        "F4 report depends on thread count".into()
    })?;
    Ok(format!(
        "{count} suite checks, dihedral 2..1000, F4 identical on 1/4/8 threads"
    ))
}

fn cache_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let budget = Budget::default();
    for name in ["H4", "E6"] {
        let g = group(name, &budget)?;
        let path = dir.path().join(format!("{name}.cxqt"));
        cache_store(&g, &path).map_err(|e| e.to_string())?;
        let back = cache_load(&path).map_err(|e| e.to_string())?;
        ensure(back.order() == g.order(), || {
            format!("{name}: order {}", back.order())
        })?;
        ensure(invariant_multiset(&back) == invariant_multiset(&g), || {
            format!("{name}: class invariants differ")
        })?;

        let mut bytes = std::fs::read(&path).unwrap();
        let mid = bytes.len() / 2;
        bytes[mid] ^= 0x01;
        let corrupt = dir.path().join(format!("{name}-corrupt.cxqt"));
        std::fs::write(&corrupt, &bytes).unwrap();
        match cache_load(&corrupt) {
            Err(Error::Cache {
                kind: CacheError::Checksum,
                ..
            }) => {}
            other => return Err(format!("{name}: corrupted load gave {other:?}")),
        }

        let mut bytes = std::fs::read(&path).unwrap();
        bytes[4..8].copy_from_slice(&99u32.to_le_bytes());
        let old = dir.path().join(format!("{name}-v99.cxqt"));
        std::fs::write(&old, &bytes).unwrap();
        match cache_load(&old) {
            Err(Error::Cache {
                kind: CacheError::VersionMismatch { found: 99, .. },
                ..
            }) => {}
            other => return Err(format!("{name}: wrong-version load gave {other:?}")),
        }
    }
    Ok("H4 and E6 reload identically; checksum and version errors raised".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 6] = [
        (
            "table reproduction, brute force vs closed form",
            table_reproduction,
        ),
        ("H3 matrices and characteristic polynomials", h3_matrices),
        ("quaternion lemmas and H4 count", quaternion_lemmas),
        ("multiplicativity over direct sums", multiplicativity),
        ("property suites", property_suites),
        ("cache round trip", cache_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} [{secs:.1}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} [{secs:.1}s] {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
