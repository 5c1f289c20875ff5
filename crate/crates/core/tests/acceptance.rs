//! Acceptance suite: one PASS/FAIL line per criterion, with wall-clock time.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eolab_core::bijections::harness::{
    crank_harness, lemma2_harness, lemma3_harness, phi_harness, HarnessReport,
};
use eolab_core::identities::{
    verify_bailey_daum, verify_eobar_unweighted, verify_eq1, verify_eq2, verify_gfover,
    verify_heine3, verify_lemma1, verify_qbinomial, verify_section3, verify_theorem1,
    verify_theorem2, HeineParams, QMono, VerificationReport, ZChoice, EO2_MISPRINT_NOTE,
};
use eolab_core::overpartitions::eobar_weighted_series;
use eolab_core::partitions::{eo_table, gen_eo_star, EoClass, EoRow, Partition};
use eolab_core::series::TruncOrder;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn report_ok(r: &VerificationReport) -> Outcome {
    if r.passed() {
        Ok(())
    } else {
        Err(r.summary())
    }
}

fn harness_ok(r: &HarnessReport) -> Outcome {
    if r.passed() {
        Ok(())
    } else {
        Err(format!(
            "{} r={}: {} failures, first: {:?}",
            r.map,
            r.r,
            r.failure_count,
            r.failures.first()
        ))
    }
}

fn all(checks: impl IntoIterator<Item = Outcome>) -> Outcome {
    checks
        .into_iter()
        .collect::<Result<Vec<()>, _>>()
        .map(|_| ())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn paper_tables() -> Outcome {
    let t = eo_table(8);
    ensure(
        t[6] == EoRow { n: 6, c0: 2, c2: 2 },
        format!("row 6 is {:?}", t[6]),
    )?;
    ensure(
        t[8] == EoRow { n: 8, c0: 4, c2: 1 },
        format!("row 8 is {:?}", t[8]),
    )?;
    let eo2: Vec<Partition> = gen_eo_star(8)
        .into_iter()
        .filter(|p| p.classify_eo() == EoClass::Eo2)
        .collect();
    ensure(
        eo2 == [Partition::new(vec![3, 3, 2]).unwrap()],
        format!("eo2(8) members: {eo2:?}"),
    )?;
    let listed = Partition::new(vec![3, 2, 2]).unwrap();
    ensure(!listed.is_eo_star(), "3+2+2 unexpectedly belongs")?;
    let report = verify_theorem1(TruncOrder(8));
    ensure(
        report.notes.iter().any(|n| n == EO2_MISPRINT_NOTE),
        "discrepancy note missing",
    )
}

fn eq1_eq2() -> Outcome {
    all([
        report_ok(&verify_eq1(TruncOrder(40)).map_err(|e| e.to_string())?),
        report_ok(&verify_eq2(TruncOrder(30)).map_err(|e| e.to_string())?),
    ])
}

fn theorem1() -> Outcome {
    report_ok(&verify_theorem1(TruncOrder(60)))
}

fn theorem2() -> Outcome {
    report_ok(&verify_theorem2(TruncOrder(40)))
}

fn lemma1() -> Outcome {
    all((0..=4).map(|r| {
        let rep = verify_lemma1(r, TruncOrder(25)).map_err(|e| e.to_string())?;
        ensure(rep.sides.len() == 3, "lemma1 must compare three pipelines")?;
        report_ok(&rep)
    }))
}

fn phi_round_trip() -> Outcome {
    all((0..=3).map(|r| harness_ok(&phi_harness(r, 25))))
}

fn lemma_harnesses() -> Outcome {
    all((0..=2).flat_map(|r| {
        [
            harness_ok(&lemma2_harness(r, 20)),
            harness_ok(&lemma3_harness(r, 20)),
            harness_ok(&crank_harness(r, 20)),
        ]
    }))
}

fn section3() -> Outcome {
    let rep = verify_section3(TruncOrder(40)).map_err(|e| e.to_string())?;
    report_ok(&rep)?;
    let s = eolab_core::identities::section3_signed_enumeration(TruncOrder(40))
        .map_err(|e| e.to_string())?;
    let (c4, c8) = (s.coeff(0, 4).unwrap(), s.coeff(0, 8).unwrap());
    ensure(
        (c4, c8) == (2, 3),
        format!("q^4, q^8 coefficients are {c4}, {c8}"),
    )
}

fn overpartitions() -> Outcome {
    let g = verify_gfover(TruncOrder(24)).map_err(|e| e.to_string())?;
    ensure(
        g.sides.len() >= 3,
        "gfover must compare at least three forms",
    )?;
    report_ok(&g)?;
    report_ok(&verify_eobar_unweighted(TruncOrder(16)).map_err(|e| e.to_string())?)?;
    let s = eobar_weighted_series(TruncOrder(16), false).map_err(|e| e.to_string())?;
    let row: Vec<(i64, i64)> = s.row(2).unwrap().iter().map(|(&m, &c)| (m, c)).collect();
    ensure(
        row == [(0, 2), (1, 2)],
        format!("q^2 coefficient is {row:?}"),
    )
}

fn classical() -> Outcome {
    let n = TruncOrder(20);
    let e = |r: Result<VerificationReport, _>| {
        r.map_err(|e: eolab_core::identities::IdentityError| e.to_string())
    };
    all([
        report_ok(&e(verify_qbinomial(
            Some(QMono::new(1, 2)),
            QMono::new(-1, 2),
            4,
            n,
        ))?),
        report_ok(&e(verify_qbinomial(None, QMono::new(1, 1), 1, n))?),
        report_ok(&e(verify_bailey_daum(ZChoice::Generic, n))?),
        report_ok(&e(verify_heine3(HeineParams::lemma1(0), n))?),
        report_ok(&e(verify_heine3(
            HeineParams {
                a: Some(1),
                b: Some(2),
                c: 3,
                z: 1,
            },
            n,
        ))?),
    ])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "1 eo tables at n=6,8 with the (3,3,2) witness",
            paper_tables,
            Some(Duration::from_secs(1)),
        ),
        (
            "2 eq1 at N=40 and eq2 at N=30",
            eq1_eq2,
            Some(Duration::from_secs(30)),
        ),
        (
            "3 eo0 vs eo2 inequality for n <= 60",
            theorem1,
            Some(Duration::from_secs(60)),
        ),
        (
            "4 overpartition inequality for n <= 40",
            theorem2,
            Some(Duration::from_secs(60)),
        ),
        ("5 lemma1 three-way for r in 0..=4 at N=25", lemma1, None),
        (
            "6 phi round trips for r in 0..=3, weight <= 25",
            phi_round_trip,
            None,
        ),
        (
            "7 lemma2, lemma3 and composite harnesses, r in 0..=2, weight <= 20",
            lemma_harnesses,
            None,
        ),
        ("8 signed EO* series at N=40", section3, None),
        ("9 overpartition generating functions", overpartitions, None),
        (
            "10 q-binomial, Bailey-Daum and Heine instances at N=20",
            classical,
            None,
        ),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(()), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
