//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//!
//! A criterion listed in `KNOWN_COUNTEREXAMPLES` is expected to fail with
//! exactly the listed graphs; any other failure makes the run exit nonzero.

use std::process::ExitCode;
use std::time::Instant;

use bettiforge::analysis::{
    search_open_questions, strand_report, verify_theorem, Theorem, VerificationReport,
};
use bettiforge::betti::{disjoint_sum_betti, hochster_betti, koszul_oracle_betti};
use bettiforge::graphs::{graphs_up_to, in_class_g, is_chordal, is_unicyclic, EnumOptions};
use bettiforge::{FieldSpec, SquarefreeIdeal, VertexMask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::RATIONALS;

/// Criterion 9 includes the wheel W_3 = K_4 and the cone over C_3 along all
/// of its vertices (the same graph). Its independence complex is four points,
/// so β_{3,{0,1,2,3}} = 3, above the stated bound of 2.
const KNOWN_COUNTEREXAMPLES: &[(u32, &[&str])] = &[(9, &["edges:4:0-1,0-2,0-3,1-2,1-3,2-3"])];

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn from_reports(reports: &[VerificationReport]) -> Self {
        let failures = reports
            .iter()
            .flat_map(|r| {
                r.failures
                    .iter()
                    .map(|f| format!("{}: {} ({})", r.theorem, f.graph, f.detail))
            })
            .collect();
        let summary = reports
            .iter()
            .map(|r| format!("{} n<={} {} instances", r.theorem, r.n_max, r.instances))
            .collect::<Vec<_>>()
            .join("; ");
        Outcome { failures, summary }
    }
}

fn verify(items: &[(Theorem, usize)]) -> Outcome {
    let reports: Vec<VerificationReport> = items
        .iter()
        .map(|&(t, n)| verify_theorem(t, n, Q).expect("harness runs"))
        .collect();
    Outcome::from_reports(&reports)
}

fn check(ok: bool, failures: &mut Vec<String>, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn criterion_1() -> Outcome {
    let ideal = SquarefreeIdeal::parse(include_str!("../../../data/example_disconn.ideal"))
        .expect("data file parses");
    let b = hochster_betti(&ideal, Q).expect("8 variables");
    let g = b.graded();
    let mut failures = Vec::new();
    let got = (g.get(1, 3), g.get(2, 4), g.get(3, 5));
    check(got == (1, 0, 1), &mut failures, || {
        format!("(β13, β24, β35) = {got:?}")
    });
    let report = strand_report(&b);
    match report.strand(2) {
        Some(s) => check(
            !s.is_connected() && s.gaps == vec![2],
            &mut failures,
            || format!("2-strand {s:?}"),
        ),
        None => failures.push("2-strand empty".into()),
    }
    Outcome {
        failures,
        summary: "β13 = 1, β24 = 0, β35 = 1, 2-strand gap {2}".into(),
    }
}

fn random_ideal(rng: &mut ChaCha8Rng, n: usize) -> SquarefreeIdeal {
    let count = rng.gen_range(0..=6);
    let gens = (0..count).map(|_| VertexMask::from_bits(rng.gen_range(1..(1u32 << n))));
    SquarefreeIdeal::new(n, gens).expect("nonzero masks in range")
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let mut graphs = 0;
    for g in graphs_up_to(5, EnumOptions::connected_iso()).expect("small") {
        graphs += 1;
        let ideal = g.edge_ideal();
        check(
            hochster_betti(&ideal, Q).unwrap() == koszul_oracle_betti(&ideal, Q).unwrap(),
            &mut failures,
            || format!("{g:?}"),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let n = rng.gen_range(1..=6);
        let ideal = random_ideal(&mut rng, n);
        check(
            hochster_betti(&ideal, Q).unwrap() == koszul_oracle_betti(&ideal, Q).unwrap(),
            &mut failures,
            || format!("{ideal}"),
        );
    }
    Outcome {
        failures,
        summary: format!("{graphs} connected graphs, 50 random ideals"),
    }
}

fn criterion_5() -> Outcome {
    let mut out = verify(&[(Theorem::Subedge, 7)]);
    let mut covered = 0;
    for g in graphs_up_to(7, EnumOptions::iso())
        .unwrap()
        .filter(|g| is_chordal(g) || (g.is_connected() && is_unicyclic(g)))
    {
        covered += 1;
        check(in_class_g(&g), &mut out.failures, || {
            format!("chordal/unicyclic graph outside class: {g:?}")
        });
    }
    out.summary
        .push_str(&format!("; {covered} chordal or unicyclic graphs in class"));
    out
}

fn criterion_7() -> Outcome {
    let mut out = verify(&[
        (Theorem::Splitting, 7),
        (Theorem::ConeFormula, 7),
        (Theorem::JoinFormula, 8),
        (Theorem::DisjointSum, 8),
    ]);
    // sums of random ideals in disjoint variables, not only edge ideals
    let mut rng = ChaCha8Rng::seed_from_u64(0xd15);
    for _ in 0..60 {
        let n = rng.gen_range(2..=8);
        let split = rng.gen_range(1..n);
        let left = random_ideal(&mut rng, split).embed(n, 0).unwrap();
        let right = random_ideal(&mut rng, n - split).embed(n, split).unwrap();
        let got = disjoint_sum_betti(
            &hochster_betti(&left, Q).unwrap(),
            &hochster_betti(&right, Q).unwrap(),
        )
        .unwrap();
        let want = hochster_betti(&left.sum(&right).unwrap(), Q).unwrap();
        check(got == want, &mut out.failures, || {
            format!("disjoint sum {left} + {right}")
        });
    }
    out.summary.push_str("; 60 random disjoint sums");
    out
}

fn criterion_11() -> Outcome {
    let mut failures = Vec::new();
    let a = search_open_questions(6, Q).expect("search runs");
    let b = search_open_questions(6, Q).expect("search runs");
    let (ja, jb) = (
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap(),
    );
    check(ja == jb, &mut failures, || "two runs differ".into());
    check(
        a.n_max == 6 && a.questions.len() == 3,
        &mut failures,
        || "wrong shape".into(),
    );
    for q in &a.questions {
        let expected = if q.counterexamples.is_empty() {
            "no counterexample up to n = 6".to_string()
        } else {
            format!(
                "{} counterexample(s) found up to n = 6",
                q.counterexamples.len()
            )
        };
        check(
            q.conclusion == expected && q.graphs_checked > 0,
            &mut failures,
            || format!("question {}: {q:?}", q.id),
        );
    }
    let found: Vec<usize> = a
        .questions
        .iter()
        .map(|q| q.counterexamples.len())
        .collect();
    Outcome {
        failures,
        summary: format!("deterministic report, counterexamples per question {found:?}"),
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "strand gap in I(C_5) + (y1y2y3)", criterion_1),
        (2, "Hochster sweep equals Koszul oracle", criterion_2),
        (3, "t_{nu+1} = 2 nu + 1 on connected graphs <= 7", || {
            verify(&[(Theorem::Tb, 7)])
        }),
        (
            4,
            "t_{a+b} <= t_a + t_b when min(a,b) <= nu + 1, graphs <= 7",
            || verify(&[(Theorem::Indsub, 7), (Theorem::Nug1, 7)]),
        ),
        (5, "subadditivity on class G, graphs <= 7", criterion_5),
        (
            6,
            "reg = nu and strand connectivity on class G', graphs <= 7",
            || verify(&[(Theorem::Greg, 7), (Theorem::GprimeStrand, 7)]),
        ),
        (
            7,
            "combination formulas equal direct computation",
            criterion_7,
        ),
        (8, "unicyclic multigraded bounds, graphs <= 8", || {
            verify(&[(Theorem::UcMultigraded, 8)])
        }),
        (
            9,
            "multigraded bounds for wheels, Jahangir, fans, k-partite, cones",
            || {
                verify(&[
                    (Theorem::JahangirBound, 9),
                    (Theorem::FanBound, 9),
                    (Theorem::KpartiteBound, 8),
                    (Theorem::ConeBound, 7),
                ])
            },
        ),
        (
            10,
            "subadditivity of path ideals of rooted trees <= 8",
            || verify(&[(Theorem::RootedTree, 8)]),
        ),
        (11, "open-question search up to n = 6", criterion_11),
    ];
    let mut unexpected = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_COUNTEREXAMPLES
            .iter()
            .find(|(k, _)| *k == id)
            .map(|(_, g)| *g);
        if outcome.failures.is_empty() {
            println!(
                "PASS criterion {id:>2}: {title} [{}] ({secs:.1}s)",
                outcome.summary
            );
            if known.is_some() {
                println!("     note: documented counterexample no longer reproduces");
            }
            continue;
        }
        println!(
            "FAIL criterion {id:>2}: {title} [{}] ({secs:.1}s)",
            outcome.summary
        );
        for f in &outcome.failures {
            println!("     {f}");
        }
        let explained = known.is_some_and(|graphs| {
            outcome
                .failures
                .iter()
                .all(|f| graphs.iter().any(|g| f.contains(&format!(": {g} "))))
        });
        if explained {
            println!(
                "     expected: every failure is a documented counterexample to the stated bound"
            );
        } else {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criterion/criteria failed unexpectedly");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
