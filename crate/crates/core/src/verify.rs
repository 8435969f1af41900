//! Self-check suites behind `cxqt verify`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::appendix::{
    det_identity_report, h3_charpoly_table, h3_negative_classes_have_minus_one, h3_relations_hold,
    h3_system_from_generators, h4_census, map_star, random_unit_quaternion, sum_map_det,
    Quaternion,
};
use crate::closed::{dihedral_classes, q_closed, q_closed_label, q_dihedral};
use crate::counter::{e_grade, q_of_group, verify_multiplicativity};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, Scalar};
use crate::group::{conjugacy_classes, generate, verify_class_invariants, Budget, FiniteGroup};
use crate::roots::{build_label, h3_seed_roots, CartanType, Family, Label, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Roots,
    Groups,
    Classes,
    Oracle,
    Multiplicativity,
    Appendix,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Roots,
        Suite::Groups,
        Suite::Classes,
        Suite::Oracle,
        Suite::Multiplicativity,
        Suite::Appendix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roots => "roots",
            Suite::Groups => "groups",
            Suite::Classes => "classes",
            Suite::Oracle => "oracle",
            Suite::Multiplicativity => "multiplicativity",
            Suite::Appendix => "appendix",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidType(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported, not asserted.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub suite: Suite,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        };
        write!(f, "[{tag}] {}: {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub suites: Vec<Suite>,
    /// Adds E7 brute force.
    pub slow: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suites: Suite::ALL.to_vec(),
            slow: false,
        }
    }
}

impl VerifyOptions {
    fn budget(&self) -> Budget {
        Budget {
            slow_ok: self.slow,
            ..Budget::default()
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub lines: Vec<CheckLine>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| l.status == Status::Fail)
    }
}

struct Lines {
    suite: Suite,
    out: Vec<CheckLine>,
}

impl Lines {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.out.push(CheckLine {
            suite: self.suite,
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.out.push(CheckLine {
            suite: self.suite,
            name: name.into(),
            status: Status::Info,
            detail: detail.into(),
        });
    }

    /// Records an error as a failed check.
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
        let name = name.into();
        match f() {
            Ok((passed, detail)) => self.push(name, passed, detail),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }
}

fn ty(s: &str) -> CartanType {
    s.parse().expect("built-in type name")
}

fn series(prefix: &str, ranks: std::ops::RangeInclusive<u32>) -> Vec<CartanType> {
    ranks.map(|n| ty(&format!("{prefix}{n}"))).collect()
}

/// Every type with a concrete realization that the suites touch.
pub fn builtin_types() -> Vec<CartanType> {
    let mut out = series("A", 1..=8);
    for p in ["B", "C", "BC"] {
        out.extend(series(p, 1..=6));
    }
    out.extend(series("D", 2..=6));
    out.extend(["E6", "E7", "E8", "F4", "G2", "H3", "H4"].map(ty));
    out
}

/// Types whose closed form is checked against brute force, in acceptance
/// order. E7 only when slow runs are allowed.
pub fn oracle_types(slow: bool) -> Vec<CartanType> {
    let mut out = series("A", 1..=7);
    for p in ["B", "C", "BC"] {
        out.extend(series(p, 1..=6));
    }
    out.extend(series("D", 2..=6));
    out.extend(["G2", "F4", "H3", "H4", "E6"].map(ty));
    if slow {
        out.push(ty("E7"));
    }
    out
}

pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let mut report = VerifyReport::default();
    for &suite in &opts.suites {
        report.lines.extend(run_suite(suite, opts));
    }
    report
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<CheckLine> {
    let mut lines = Lines {
        suite,
        out: Vec::new(),
    };
    match suite {
        Suite::Roots => roots_suite(&mut lines),
        Suite::Groups => groups_suite(&mut lines, opts),
        Suite::Classes => classes_suite(&mut lines, opts),
        Suite::Oracle => oracle_suite(&mut lines, opts),
        Suite::Multiplicativity => multiplicativity_suite(&mut lines, opts),
        Suite::Appendix => appendix_suite(&mut lines, opts),
    }
    lines.out
}

fn roots_suite(lines: &mut Lines) {
    for t in builtin_types() {
        lines.run(format!("{t} root system"), || {
            let sys = RootSystem::build(t)?;
            let report = sys.verify();
            let mut bad = Vec::new();
            for r in sys.roots() {
                let m = sys.reflection_matrix(r)?;
                if !(&m * &m).is_identity() || !m.is_orthogonal() {
                    bad.push(format!("{r:?}"));
                }
            }
            let detail = format!(
                "{} roots, rank {}, failed checks {:?}, bad reflections {}",
                sys.len(),
                sys.rank(),
                report.failed(),
                bad.len()
            );
            Ok((report.passed() && bad.is_empty(), detail))
        });
    }
    // B, C and BC share their reflections, hence their group
    for n in 1..=6 {
        lines.run(
            format!("B{n}, C{n}, BC{n} have the same reflections"),
            || {
                let sets: Vec<Vec<ExactMatrix>> = ["B", "C", "BC"]
                    .iter()
                    .map(|p| -> Result<Vec<ExactMatrix>> {
                        let sys = RootSystem::build(ty(&format!("{p}{n}")))?;
                        let mut ms = sys
                            .roots()
                            .iter()
                            .map(|r| sys.reflection_matrix(r))
                            .collect::<Result<Vec<_>>>()?;
                        ms.sort_by_key(|m| format!("{:?}", m.rows()));
                        ms.dedup();
                        Ok(ms)
                    })
                    .collect::<Result<_>>()?;
                Ok((
                    sets[0] == sets[1] && sets[1] == sets[2],
                    format!("{} reflections", sets[0].len()),
                ))
            },
        );
    }
}

fn groups_suite(lines: &mut Lines, opts: &VerifyOptions) {
    let budget = opts.budget();
    for t in builtin_types() {
        let predicted = t.group_order();
        if !budget.allows_order(predicted) || t.family() == Family::E8 {
            lines.info(
                format!("|W({t})|"),
                format!("degree product {predicted}, not enumerated"),
            );
            continue;
        }
        lines.run(format!("|W({t})| equals the degree product"), || {
            let g = generate(&RootSystem::build(t)?, &budget)?;
            Ok((
                g.order() as u128 == predicted,
                format!("{} elements, predicted {predicted}", g.order()),
            ))
        });
    }
}

/// Types whose classes are checked member by member.
fn class_types(slow: bool) -> Vec<CartanType> {
    let mut out: Vec<CartanType> = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "BC3", "C4", "D4", "D5", "G2", "H3", "F4",
        "H4", "E6",
    ]
    .map(ty)
    .to_vec();
    if slow {
        out.push(ty("E7"));
    }
    out
}

fn check_classes(g: &FiniteGroup) -> Result<(bool, String)> {
    let classes = conjugacy_classes(g);
    let total: u64 = classes.iter().map(|c| c.size).sum();
    if total != g.order() as u64 {
        return Ok((
            false,
            format!("class sizes sum to {total}, order {}", g.order()),
        ));
    }
    verify_class_invariants(g, &classes, 100)?;
    let n = g.system().ambient_dim();
    for c in &classes {
        let m = g.matrix(c.representative);
        let det_plus = (&m + &ExactMatrix::identity(n)).det();
        let mult = c.charpoly_minus_one_multiplicity();
        if mult != c.e_grade || det_plus.is_zero() != (c.e_grade > 0) {
            return Ok((
                false,
                format!(
                    "class {}: e_grade {} vs charpoly multiplicity {mult}",
                    c.id, c.e_grade
                ),
            ));
        }
        // −1 and +1 eigenvalues plus complex pairs fill the dimension
        let plus = c.charpoly.root_multiplicity(&Scalar::one());
        if !(n - plus - c.e_grade).is_multiple_of(2) {
            return Ok((
                false,
                format!("class {}: odd remainder after real eigenvalues", c.id),
            ));
        }
    }
    Ok((
        true,
        format!("{} classes, sizes sum to {total}", classes.len()),
    ))
}

fn classes_suite(lines: &mut Lines, opts: &VerifyOptions) {
    let budget = opts.budget();
    for t in class_types(opts.slow) {
        lines.run(format!("{t} classes"), || {
            check_classes(&generate(&RootSystem::build(t)?, &budget)?)
        });
    }
    lines.run("A2 count in its 2-dimensional span", || {
        let g = generate(&RootSystem::build(ty("A2"))?, &budget)?;
        let ambient = q_of_group(&g);
        let span_q = conjugacy_classes(&g)
            .iter()
            .filter(|c| e_grade(&g.span_matrix(c.representative)) == 0)
            .count();
        Ok((
            ambient.q == BigUint::from(span_q),
            format!("ambient q = {}, span q = {span_q}", ambient.q),
        ))
    });
    lines.run("reports identical across 1, 4 and 8 threads", || {
        let sys = RootSystem::build(ty("H3"))?;
        let mut outputs = Vec::new();
        for threads in [1, 4, 8] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?;
            let json = pool.install(|| -> Result<String> {
                q_of_group(&generate(&sys, &budget)?).to_json()
            })?;
            outputs.push(json);
        }
        Ok((
            outputs.windows(2).all(|w| w[0] == w[1]),
            format!("{} bytes", outputs[0].len()),
        ))
    });
}

/// Dihedral groups with a realization over ℚ(√5).
fn concrete_dihedral(n: u32) -> Result<RootSystem> {
    match n {
        2 => build_label(&"A1+A1".parse()?),
        3 => RootSystem::build(ty("A2")),
        4 => RootSystem::build(ty("B2")),
        5 => {
            let [a, b, _] = h3_seed_roots();
            RootSystem::from_generators(Label::Custom("I2(5)".into()), vec![a, b])
        }
        6 => RootSystem::build(ty("G2")),
        _ => Err(Error::Symbolic(format!("I2({n})"))),
    }
}

fn oracle_suite(lines: &mut Lines, opts: &VerifyOptions) {
    let budget = opts.budget();
    for t in oracle_types(opts.slow) {
        lines.run(format!("Q({t}) closed form equals brute force"), || {
            let start = Instant::now();
            let closed = q_closed(t)?;
            let brute = q_of_group(&generate(&RootSystem::build(t)?, &budget)?);
            Ok((
                closed == brute.q,
                format!(
                    "closed {closed}, brute {} over {} classes, {:.1}s",
                    brute.q,
                    brute.num_classes.unwrap_or(0),
                    start.elapsed().as_secs_f64()
                ),
            ))
        });
    }
    if !opts.slow {
        lines.info("Q(E7)", "closed constant 12; brute force needs --slow");
    }
    lines.info(
        "Q(E8)",
        "closed constant 30; |W(E8)| = 696729600 is not enumerated",
    );

    lines.run(
        "dihedral class model gives floor((n+1)/2) for 2 <= n <= 1000",
        || {
            let bad: Vec<i64> = (2..=1000)
                .filter(|&n| q_dihedral(n).ok() != Some((n as u64).div_ceil(2)))
                .collect();
            Ok((bad.is_empty(), format!("{} disagreements", bad.len())))
        },
    );
    for n in 2..=6u32 {
        lines.run(
            format!("I2({n}) class model matches a concrete group"),
            || {
                let g = generate(&concrete_dihedral(n)?, &budget)?;
                let mut brute: Vec<(u64, usize)> = conjugacy_classes(&g)
                    .iter()
                    .map(|c| (c.size, c.e_grade))
                    .collect();
                let mut model: Vec<(u64, usize)> = dihedral_classes(n as i64)?
                    .iter()
                    .map(|c| (c.size, c.e_grade))
                    .collect();
                brute.sort_unstable();
                model.sort_unstable();
                let q = model.iter().filter(|c| c.1 == 0).count();
                Ok((brute == model, format!("{} classes, q = {q}", model.len())))
            },
        );
    }
}

fn multiplicativity_suite(lines: &mut Lines, opts: &VerifyOptions) {
    let budget = opts.budget();
    for (a, b) in [
        ("A1", "A1"),
        ("A2", "A1"),
        ("A2", "B2"),
        ("B2", "B2"),
        ("H3", "A1"),
        ("G2", "A2"),
    ] {
        lines.run(format!("Q({a}+{b}) = Q({a})·Q({b})"), || {
            let (r1, r2) = (RootSystem::build(ty(a))?, RootSystem::build(ty(b))?);
            let ok = verify_multiplicativity(&r1, &r2, &budget)?;
            let closed = q_closed_label(&format!("{a}+{b}").parse()?)?;
            let q = q_of_group(&generate(&r1.direct_sum(&r2)?, &budget)?).q;
            Ok((
                ok && q == closed,
                format!("q = {q}, closed product {closed}"),
            ))
        });
    }
}

fn appendix_suite(lines: &mut Lines, opts: &VerifyOptions) {
    let budget = opts.budget();
    lines.run("H3 generators satisfy the six relations", || {
        Ok((h3_relations_hold(), String::new()))
    });
    lines.run("H3 rotation class polynomials match the table", || {
        let rows = h3_charpoly_table()?;
        let detail = rows
            .iter()
            .map(|r| format!("{}: {}", r.word, r.computed))
            .collect::<Vec<_>>()
            .join("; ");
        Ok((true, detail))
    });
    lines.run("H3 determinant -1 classes have eigenvalue -1", || {
        Ok((h3_negative_classes_have_minus_one()?, String::new()))
    });
    lines.run("H3 from a, b, c: 120 elements, 10 classes split 5/5, Q = 4", || {
        let from_gens = generate(&h3_system_from_generators()?, &budget)?;
        let built = generate(&RootSystem::build(ty("H3"))?, &budget)?;
        let multiset = |g: &FiniteGroup| {
            let mut v: Vec<_> = conjugacy_classes(g).iter().map(|c| (c.size, c.invariants())).collect();
            v.sort();
            v
        };
        let classes = conjugacy_classes(&from_gens);
        let pos = classes.iter().filter(|c| c.det.is_positive()).count();
        let q = classes.iter().filter(|c| c.e_grade == 0).count();
        let same = multiset(&from_gens) == multiset(&built);
        Ok((
            from_gens.order() == 120 && classes.len() == 10 && pos == 5 && q == 4 && same,
            format!(
                "order {}, {} classes, {pos} with det +1, Q = {q}, same invariants as built H3: {same}",
                from_gens.order(),
                classes.len()
            ),
        ))
    });

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    lines.run("x -> p x* has eigenvalue -1 with witness -1 + p", || {
        let one = Quaternion::one();
        let identity_case = e_grade(&map_star(&one)?) == 3;
        let mut ok = identity_case;
        for _ in 0..100 {
            let p = random_unit_quaternion(&mut rng);
            let m = map_star(&p)?;
            if p != one {
                let x = &p - &one;
                ok &= m.apply(&x.to_vec()) == (-&x).to_vec();
            }
            ok &= e_grade(&m) >= 1;
        }
        Ok((ok, "p = 1 and 100 random exact unit p".into()))
    });
    lines.run("det(x -> lx + xr) = 4(l0 + r0)^2 for unit l, r", || {
        let (one, i) = (Quaternion::one(), Quaternion::i());
        let analytic =
            sum_map_det(&one, &one) == Scalar::from_int(16) && sum_map_det(&i, &i).is_zero();
        let mut failures = Vec::new();
        for _ in 0..1000 {
            let l = random_unit_quaternion(&mut rng);
            let r = random_unit_quaternion(&mut rng);
            let rep = det_identity_report(&l, &r);
            if !rep.holds() {
                failures.push(format!(
                    "l = {l}, r = {r}: det {} vs {}",
                    rep.det, rep.claimed
                ));
            }
        }
        let detail = match failures.first() {
            Some(f) => format!("{} counterexamples, first {f}", failures.len()),
            None => "1000 random pairs and l = r = 1, l = r = i".into(),
        };
        Ok((analytic && failures.is_empty(), detail))
    });
    {
        let mut agree = 0;
        let trials = 200;
        for _ in 0..trials {
            let mut v = || Scalar::from_int(rand::Rng::gen_range(&mut rng, -4..=4));
            let l = Quaternion::new(v(), v(), v(), v());
            let r = Quaternion::new(v(), v(), v(), v());
            if det_identity_report(&l, &r).general_holds() {
                agree += 1;
            }
        }
        lines.info(
            "det(x -> lx + xr) for arbitrary l, r",
            format!("((l0+r0)^2 + |l_im|^2 + |r_im|^2)^2 - 4|l_im|^2|r_im|^2 matched {agree}/{trials} integer pairs"),
        );
    }
    lines.run(
        "H4: 34 classes, 20 without eigenvalue -1, l0 + r0 criterion on every rotation",
        || {
            let c = h4_census(&budget)?;
            Ok((
                c.passed() && c.classes == 34 && c.q == 20 && c.order == 14400,
                format!(
                "order {}, {} classes, Q = {}, {} rotations, {} reflections, mismatches {}/{}/{}",
                c.order,
                c.classes,
                c.q,
                c.rotations,
                c.reflections,
                c.matrix_mismatches,
                c.criterion_mismatches,
                c.star_without_minus_one
            ),
            ))
        },
    );
}
