//! Exit criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see them.

use std::time::{Duration, Instant};

use divlog::interval::Interval;
use divlog::logic::{check_valid, parse, Validity};
use divlog::oracle::{
    intervals_up_to, verify_heyting, verify_lattice_laws, verify_projective, LawReport,
};
use divlog::{factorize, join, meet, meet_euclid, nat, reconstruct, Natural};

fn report(id: &str, title: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("PASS  {id}  {title}: {detail}"),
        Err(why) => {
            println!("FAIL  {id}  {title}: {why}");
            panic!("{id} failed: {why}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn find<'a>(reports: &'a [LawReport], name: &str) -> &'a LawReport {
    reports
        .iter()
        .find(|r| r.law_name == name)
        .unwrap_or_else(|| panic!("no report {name}"))
}

fn clean(r: &LawReport) -> Result<(), String> {
    ensure(r.passed(), || {
        format!(
            "{}: {} counterexamples, first {:?}",
            r.law_name,
            r.counterexamples.len(),
            r.counterexamples.first()
        )
    })
}

/// Interval sizes by brute-force divisor listing, independent of the
/// library's enumeration.
fn brute_sizes(top_max: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for x in 1..=top_max {
        for y in (1..=x).filter(|y| x % y == 0) {
            out.push((1..=x).filter(|a| x % a == 0 && a % y == 0).count() as u64);
        }
    }
    out
}

#[test]
fn ac1_lattice_laws_to_100() {
    let outcome = (|| {
        let start = Instant::now();
        let reports = verify_lattice_laws(100);
        let elapsed = start.elapsed();
        let expected = [
            ("idempotency", 2 * 100),
            ("commutativity", 2 * 100 * 100),
            ("associativity", 2 * 100 * 100 * 100),
            ("mutual_distributivity", 2 * 100 * 100 * 100),
        ];
        ensure(reports.len() == 4, || format!("{} reports", reports.len()))?;
        for (name, cases) in expected {
            let r = find(&reports, name);
            clean(r)?;
            ensure(r.cases_checked == cases, || {
                format!("{name}: {} cases, expected {cases}", r.cases_checked)
            })?;
        }
        ensure(elapsed < Duration::from_secs(60), || {
            format!("took {elapsed:?}")
        })?;
        Ok(format!(
            "4 laws, 0 counterexamples, distributivity 2000000 cases, {elapsed:.2?}"
        ))
    })();
    report("AC1", "lattice laws on [1,100]", outcome);
}

#[test]
fn ac2_projective_identity_to_100() {
    let outcome = (|| {
        let r = verify_projective(100);
        clean(&r)?;
        let pairs: u64 = (1..=100u64)
            .map(|x| (1..=x).filter(|y| x % y == 0).count() as u64)
            .sum();
        ensure(r.cases_checked == pairs * 100, || {
            format!("{} cases", r.cases_checked)
        })?;
        Ok(format!(
            "{} triples with y | x, 0 counterexamples",
            r.cases_checked
        ))
    })();
    report("AC2", "projective identity on [1,100]", outcome);
}

#[test]
fn ac3_formulas_equal_oracle() {
    let outcome = (|| {
        let reports = verify_heyting(200, 512);
        let sizes = brute_sizes(200);
        let members: u64 = sizes.iter().sum();
        let pairs: u64 = sizes.iter().map(|s| s * s).sum();
        for (name, cases) in [
            ("neg_matches_oracle", members),
            ("imp_matches_oracle", pairs),
        ] {
            let r = find(&reports, name);
            clean(r)?;
            ensure(r.skipped.is_empty(), || {
                format!("{name}: skipped {:?}", r.skipped)
            })?;
            ensure(r.cases_checked == cases, || {
                format!("{name}: {} cases, expected {cases}", r.cases_checked)
            })?;
        }
        Ok(format!(
            "{} intervals, {members} negations, {pairs} implications, 0 discrepancies",
            sizes.len()
        ))
    })();
    report(
        "AC3",
        "neg/imp formulas = brute-force maxima (top <= 200)",
        outcome,
    );
}

#[test]
fn ac4_residuation() {
    let outcome = (|| {
        let reports = verify_heyting(200, 512);
        let r = find(&reports, "residuation");
        clean(r)?;
        let triples: u64 = brute_sizes(200).iter().map(|s| s * s * s).sum();
        ensure(r.cases_checked == triples, || {
            format!("{} cases, expected {triples}", r.cases_checked)
        })?;
        Ok(format!("{triples} member triples, 0 counterexamples"))
    })();
    report("AC4", "residuation (a∧b)|c <=> a|(b→c)", outcome);
}

#[test]
fn ac5_boolean_iff_excluded_middle() {
    let outcome = (|| {
        let lem = parse("p | ~p").unwrap();
        let mut boolean = 0;
        let intervals = intervals_up_to(120);
        for q in &intervals {
            let valid = check_valid(q, &lem).map_err(|e| e.to_string())? == Validity::Valid;
            ensure(valid == q.is_boolean(), || {
                format!("{q}: is_boolean={} valid={valid}", q.is_boolean())
            })?;
            boolean += usize::from(valid);
        }
        let q130 = Interval::new(nat(1), nat(30)).unwrap();
        ensure(q130.is_boolean(), || "Q[1,30] not Boolean".into())?;
        let q112 = Interval::new(nat(1), nat(12)).unwrap();
        ensure(!q112.is_boolean(), || "Q[1,12] Boolean".into())?;
        let two = q112.element(&nat(2)).unwrap();
        let expected = join(two.value(), q112.neg(&two).unwrap().value());
        ensure(expected == nat(6), || {
            format!("join(2, neg 2) = {expected}")
        })?;
        match check_valid(&q112, &lem).unwrap() {
            Validity::Counterexample { assignment, value } => {
                ensure(assignment == vec![("p".to_string(), two.clone())], || {
                    format!("{assignment:?}")
                })?;
                ensure(value.value() == &expected, || format!("value {value}"))?;
            }
            Validity::Valid => return Err("p | ~p valid in Q[1,12]".into()),
        }
        Ok(format!(
            "{} intervals ({boolean} Boolean); Q[1,12] fails at p=2 with value 6",
            intervals.len()
        ))
    })();
    report("AC5", "Boolean <=> p | ~p valid (top <= 120)", outcome);
}

#[test]
fn ac6_boolean_complement_formula() {
    let outcome = (|| {
        let mut checked = 0u64;
        let mut intervals = 0;
        for q in intervals_up_to(200).iter().filter(|q| q.is_boolean()) {
            intervals += 1;
            let (x, y) = (q.top().to_u64().unwrap(), q.bottom().to_u64().unwrap());
            for a in q.enumerate().unwrap() {
                let av = a.value().to_u64().unwrap();
                ensure((x * y) % av == 0, || {
                    format!("{q}: {av} does not divide x·y")
                })?;
                let closed = nat(x * y / av);
                let neg = q.neg(&a).unwrap();
                let comp = q.boolean_complement(&a).unwrap();
                ensure(neg.value() == &closed && comp.value() == &closed, || {
                    format!("{q}, a={av}: neg={neg} complement={comp} x·y/a={closed}")
                })?;
                checked += 1;
            }
        }
        let reports = verify_heyting(200, 512);
        clean(find(&reports, "boolean_iff_complement_formula"))?;
        clean(find(&reports, "boolean_iff_excluded_middle"))?;
        Ok(format!(
            "{intervals} Boolean intervals, {checked} members, neg = x·y/a exactly"
        ))
    })();
    report(
        "AC6",
        "neg(a) = x·y/a in Boolean intervals (top <= 200)",
        outcome,
    );
}

#[test]
fn ac7_intuitionistic_axioms() {
    let axioms = [
        "p -> (q -> p)",
        "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
        "p & q -> p",
        "p & q -> q",
        "p -> p | q",
        "q -> p | q",
        "(p -> r) -> ((q -> r) -> (p | q -> r))",
        "F -> p",
        "(~p -> (p -> F)) & ((p -> F) -> ~p)",
    ];
    let outcome = (|| {
        let formulas: Vec<_> = axioms.iter().map(|a| parse(a).unwrap()).collect();
        let mut intervals = 0;
        for q in intervals_up_to(120).iter().filter(|q| q.size() <= 64) {
            intervals += 1;
            for (text, f) in axioms.iter().zip(&formulas) {
                let v = check_valid(q, f).map_err(|e| e.to_string())?;
                ensure(v == Validity::Valid, || format!("{text} in {q}: {v:?}"))?;
            }
        }
        let q14 = Interval::new(nat(1), nat(4)).unwrap();
        let peirce = check_valid(&q14, &parse("((p->q)->p)->p").unwrap()).unwrap();
        let el = |n: u64| q14.element(&nat(n)).unwrap();
        let expected = Validity::Counterexample {
            assignment: vec![("p".to_string(), el(2)), ("q".to_string(), el(1))],
            value: el(2),
        };
        ensure(peirce == expected, || {
            format!("Peirce in Q[1,4]: {peirce:?}")
        })?;
        Ok(format!(
            "{} axioms valid in {intervals} intervals; Peirce fails in Q[1,4] at p=2 q=1 (value 2)",
            axioms.len()
        ))
    })();
    report(
        "AC7",
        "intuitionistic axioms (top <= 120, |Q| <= 64)",
        outcome,
    );
}

#[test]
fn ac8_round_trip_and_euclid() {
    let outcome = (|| {
        for n in 1..=100_000u64 {
            let v = factorize(&nat(n)).map_err(|e| e.to_string())?;
            ensure(reconstruct(&v) == nat(n), || {
                format!("round trip of {n}: {v:?}")
            })?;
        }
        let values: Vec<Natural> = (1..=1000).map(nat).collect();
        for a in &values {
            for b in &values {
                let (m, e) = (meet(a, b), meet_euclid(a, b));
                ensure(m == e, || format!("gcd({a},{b}): meet={m} euclid={e}"))?;
            }
        }
        Ok("10^5 round trips, 10^6 gcd pairs, 0 discrepancies".into())
    })();
    report(
        "AC8",
        "factorization round trip and meet = meet_euclid",
        outcome,
    );
}
