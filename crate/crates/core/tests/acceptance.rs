//! Acceptance criteria. Run with `cargo test --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use chromcomp::cli;
use chromcomp::coloring::chromatic_number;
use chromcomp::completion::{
    completion_edges, completion_graph, pseudo_completion_graph, upper_bound_complement, zeta,
    zeta_exhaustive, Limits,
};
use chromcomp::families::{
    formula_zeta_cycle, formula_zeta_helm, gen_complete, gen_complete_multipartite, gen_cycle,
    gen_helm, gen_nested_join, FamilySpec,
};
use chromcomp::io::{read_graph, write_graph, GraphFormat};
use chromcomp::partition::{
    completion_partition, lucky_sum_product, max_partition_oracle, PartitionSpec,
};
use chromcomp::verify::{verify_instance, Status};
use chromcomp::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn spt(parts: &[u64]) -> u64 {
    PartitionSpec::new(parts.to_vec())
        .unwrap()
        .sum_permutated_term_products()
}

fn c1_partition_values() -> Check {
    ensure!(spt(&[1, 1]) == 1, "(1,1)");
    ensure!(spt(&[1, 1, 3]) == 7 && spt(&[1, 2, 2]) == 8, "n=5 values");
    let n8: Vec<u64> = [[1, 2, 5], [1, 3, 4], [2, 3, 3], [2, 2, 4]]
        .iter()
        .map(|p| spt(p))
        .collect();
    ensure!(n8 == [17, 19, 21, 20], "n=8 values {n8:?}");
    let (max, argmax) = max_partition_oracle(8, 3).map_err(|e| e.to_string())?;
    ensure!(
        max == 21 && argmax == vec![PartitionSpec::new(vec![2, 3, 3]).unwrap()],
        "n=8 maximum {max} at {argmax:?}"
    );
    Ok(())
}

fn c2_lucky_property() -> Check {
    for n in 2..=14u64 {
        for l in 2..=n {
            let (max, argmax) = max_partition_oracle(n, l).map_err(|e| e.to_string())?;
            let lucky = lucky_sum_product(n, l).map_err(|e| e.to_string())?;
            ensure!(lucky == max, "n={n} l={l}: {lucky} vs {max}");
            let cp = completion_partition(n, l).unwrap();
            ensure!(argmax.contains(&cp), "n={n} l={l}: {cp} not in argmax");
        }
    }
    Ok(())
}

fn c3_closed_form_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=60u64);
        let mut parts = Vec::new();
        let mut left = n;
        while left > 0 {
            let p = rng.gen_range(1..=left);
            parts.push(p);
            left -= p;
        }
        let mut direct = 0;
        for i in 0..parts.len() {
            for j in (i + 1)..parts.len() {
                direct += parts[i] * parts[j];
            }
        }
        let squares: u64 = parts.iter().map(|p| p * p).sum();
        ensure!((n * n - squares) / 2 == direct, "{parts:?}");
        ensure!(spt(&parts) == direct, "{parts:?}");
    }
    Ok(())
}

fn c4_oracle_equivalence(corpus: &[Graph]) -> Check {
    ensure!(corpus.len() >= 500, "corpus too small");
    for g in corpus {
        let bb = zeta(g, &Limits::default()).map_err(|e| e.to_string())?;
        let naive = zeta_exhaustive(g).map_err(|e| e.to_string())?;
        ensure!(bb.zeta == naive, "{g:?}: {} vs {naive}", bb.zeta);
    }
    Ok(())
}

fn zeta_of(g: &Graph) -> std::result::Result<u64, String> {
    zeta(g, &Limits::default())
        .map(|r| r.zeta)
        .map_err(|e| e.to_string())
}

fn c5_anchored_values() -> Check {
    for n in 1..=7 {
        ensure!(zeta_of(&gen_complete(n).unwrap())? == 0, "K{n}");
    }
    for parts in common::compositions(8) {
        ensure!(
            zeta_of(&gen_complete_multipartite(&parts).unwrap())? == 0,
            "K{parts:?}"
        );
    }
    for n in [4usize, 6, 8, 10, 12] {
        let z = zeta_of(&gen_cycle(n).unwrap())?;
        ensure!(z == (n * (n - 4) / 4) as u64, "C{n}: {z}");
    }
    for (n, expected) in [(5, 3), (7, 9), (9, 18)] {
        let z = zeta_of(&gen_cycle(n).unwrap())?;
        let f = formula_zeta_cycle(n).unwrap().as_integer();
        ensure!(z == expected && f == Some(expected as i64), "C{n}: {z} / {f:?}");
    }
    for (n, expected) in [(3, 9), (4, 15), (5, 30)] {
        let z = zeta_of(&gen_helm(n).unwrap())?;
        let f = formula_zeta_helm(n).unwrap().as_integer();
        ensure!(z == expected && f == Some(expected as i64), "H(1,{n}): {z} / {f:?}");
    }
    Ok(())
}

fn golden_table() -> Vec<(FamilySpec, &'static str, u64, Status)> {
    vec![
        (FamilySpec::Cycle(11), "24", 29, Status::Mismatch),
        (FamilySpec::Sunlet(3), "3", 6, Status::Mismatch),
        (FamilySpec::Sunlet(5), "14", 23, Status::Mismatch),
        (FamilySpec::Wheel(4), "4", 0, Status::Mismatch),
        (FamilySpec::Wheel(6), "9", 3, Status::Mismatch),
        (FamilySpec::Sun(3), "15/2", 3, Status::NonIntegral),
        (FamilySpec::Sun(4), "16", 10, Status::Mismatch),
        (FamilySpec::Helm(6), "106/3", 38, Status::NonIntegral),
    ]
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(args.iter().copied(), &mut out, &mut err);
    (code, out)
}

fn c6_golden_discrepancies() -> Check {
    for (spec, formula, oracle, status) in golden_table() {
        let row = verify_instance(&spec, &Limits::default()).map_err(|e| e.to_string())?;
        let got_formula = row.formula.map(|f| f.to_string());
        ensure!(
            got_formula.as_deref() == Some(formula) && row.oracle == Some(oracle) && row.status == status,
            "{spec}: {:?} {:?} {:?}",
            got_formula,
            row.oracle,
            row.status
        );
        let n = spec.parameter().to_string();
        let family = spec.family().name();
        let (code, out) = run_cli(&["chromcomp", "verify", family, &n, "--strict"]);
        let line = format!("{family},{n},{formula},{oracle},{status}\n");
        let text = String::from_utf8(out).unwrap();
        ensure!(code == 2, "{spec}: strict exit {code}");
        ensure!(text.ends_with(&line), "{spec}: report {text:?}");
    }
    Ok(())
}

fn check_structure(g: &Graph) -> Check {
    let r = zeta(g, &Limits::default()).map_err(|e| e.to_string())?;
    let chi = chromatic_number(g).unwrap();
    ensure!(r.exact, "{g:?}: not exact");
    ensure!(r.witness.class_count() == chi, "{g:?}: classes");
    ensure!(
        completion_edges(g, &r.witness).map_err(|e| e.to_string())? == r.completion_edges,
        "{g:?}: witness not proper/chromatic or edges differ"
    );
    ensure!(r.zeta == r.completion_edges.len() as u64, "{g:?}: edge count");
    ensure!(r.zeta == r.pseudo_size - g.size() as u64, "{g:?}: pseudo size");
    let gz = completion_graph(g, &r.witness).map_err(|e| e.to_string())?;
    ensure!(gz == pseudo_completion_graph(&r.witness), "{g:?}: not multipartite on classes");
    ensure!(chromatic_number(&gz).unwrap() == chi, "{g:?}: chi changed");
    ensure!(zeta_of(&gz)? == 0, "{g:?}: completion not a fixed point");
    let bound = upper_bound_complement(g);
    ensure!(r.zeta <= bound, "{g:?}: above complement bound");
    ensure!((r.zeta == bound) == g.is_complete(), "{g:?}: bound equality");
    ensure!(gz.is_complete() == g.is_complete(), "{g:?}: completeness");
    Ok(())
}

fn c7_structural_invariants(corpus: &[Graph]) -> Check {
    let mut instances: Vec<Graph> = corpus.to_vec();
    instances.extend((1..=7).map(|n| gen_complete(n).unwrap()));
    instances.extend(
        common::compositions(8)
            .iter()
            .map(|p| gen_complete_multipartite(p).unwrap()),
    );
    instances.extend([4, 5, 6, 7, 8, 9, 10, 12].map(|n| gen_cycle(n).unwrap()));
    instances.extend([3, 4, 5].map(|n| gen_helm(n).unwrap()));
    instances.extend(golden_table().iter().map(|(s, ..)| s.build().unwrap()));
    for g in &instances {
        check_structure(g)?;
    }
    Ok(())
}

fn c8_non_uniqueness() -> Check {
    let c5 = gen_cycle(5).unwrap();
    let r = zeta(&c5, &Limits::default().collecting_all()).map_err(|e| e.to_string())?;
    ensure!(r.optima.len() >= 2, "only {} optimum", r.optima.len());
    let mut edge_sets: Vec<_> = r
        .optima
        .iter()
        .map(|c| completion_edges(&c5, c).unwrap())
        .collect();
    ensure!(edge_sets.iter().all(|e| e.len() == 3), "gain differs from 3");
    edge_sets.sort();
    edge_sets.dedup();
    ensure!(edge_sets.len() >= 2, "completion edge sets coincide");
    Ok(())
}

fn c9_nested_join() -> Check {
    let g = gen_nested_join(&gen_cycle(21).unwrap(), 1).unwrap();
    let r = zeta(&g, &Limits::default()).map_err(|e| e.to_string())?;
    let mut theta = r.witness.theta();
    theta.sort_unstable();
    ensure!(r.zeta == 126, "zeta {}", r.zeta);
    ensure!(theta == vec![1, 7, 7, 7], "theta {theta:?}");
    ensure!(r.witness.classes().contains(&vec![21]), "hub not a singleton");
    Ok(())
}

fn c10_cli_contract(corpus: &[Graph]) -> Check {
    for g in corpus.iter().take(100) {
        for fmt in [GraphFormat::EdgeList, GraphFormat::Json] {
            for one_based in [false, true] {
                let text = write_graph(g, fmt, one_based);
                let back = read_graph(&text, fmt, one_based).map_err(|e| e.to_string())?;
                ensure!(&back == g, "round trip {fmt:?} {one_based}");
            }
        }
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("g.txt");
    let g = gen_helm(6).unwrap();
    std::fs::write(&path, write_graph(&g, GraphFormat::EdgeList, false)).unwrap();
    let p = path.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["verify", "cycle", "3..12"],
        vec!["verify", "helm", "3..7"],
        vec!["--format", "json", "verify", "sun", "3..5"],
        vec!["zeta", p],
        vec!["--format", "json", "zeta", p, "--all-optima"],
        vec!["family", "sunlet", "5", "--emit", "--zeta", "--formula"],
    ];
    for cmd in commands {
        let mut outputs = Vec::new();
        for workers in ["1", "4", "1", "4"] {
            let mut args = vec!["chromcomp", "--workers", workers];
            args.extend(cmd.iter().copied());
            outputs.push(run_cli(&args));
        }
        ensure!(
            outputs.windows(2).all(|w| w[0] == w[1]),
            "non-deterministic output for {cmd:?}"
        );
    }
    Ok(())
}

#[test]
fn acceptance_suite() {
    let corpus = common::random_connected_corpus(0x0acc_e97a, 500, 8);
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Check + '_>)> = vec![
        ("1 partition values", Duration::from_secs(1), Box::new(c1_partition_values)),
        ("2 balanced partition maximality, n <= 14", Duration::from_secs(10), Box::new(c2_lucky_property)),
        ("3 pair-sum closed form, 10000 partitions", Duration::from_secs(5), Box::new(c3_closed_form_identity)),
        ("4 branch-and-bound vs exhaustive, 500 graphs", Duration::from_secs(60), Box::new(|| c4_oracle_equivalence(&corpus))),
        ("5 anchored exact values", Duration::from_secs(30), Box::new(c5_anchored_values)),
        ("6 golden discrepancy table", Duration::from_secs(120), Box::new(c6_golden_discrepancies)),
        ("7 structural invariants", Duration::from_secs(600), Box::new(|| c7_structural_invariants(&corpus))),
        ("8 non-unique optima on C5", Duration::from_secs(1), Box::new(c8_non_uniqueness)),
        ("9 K1 + C21", Duration::from_secs(60), Box::new(c9_nested_join)),
        ("10 CLI round trip and determinism", Duration::from_secs(10), Box::new(|| c10_cli_contract(&corpus))),
    ];
    let mut failures = Vec::new();
    for (name, budget, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= *budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL over budget {budget:?}"),
            (Err(e), _) => format!("FAIL {e}"),
        };
        println!("[{}] criterion {name} ({elapsed:.2?})", verdict);
        if !verdict.starts_with("PASS") {
            failures.push(format!("{name}: {verdict}"));
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:#?}");
}
