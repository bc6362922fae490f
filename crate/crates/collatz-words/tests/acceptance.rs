//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Everything here is exact integer arithmetic; there are no tolerances.

use std::collections::HashSet;
use std::path::Path;
use std::process::Command;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::{Rng, SeedableRng};

use collatz_words::arith::{pow2, pow3, triangle_a};
use collatz_words::cli::word_grid;
use collatz_words::diophantine::{rrs_check, special_solution, x0_shift_check, y0_period_check};
use collatz_words::engine::{oracle_realizations, run_word};
use collatz_words::pattern::{
    closed_form_state, general_families, recur_families_ns1, recurrence_states, RealizationFamily,
};
use collatz_words::tree::{
    all_labels_distinct, build_tree, level_stats, path_to_root, EdgeLabel,
};
use collatz_words::words::{parse_word, Word, WordTuple};

fn pass(number: u32, name: &str) {
    println!("ACCEPTANCE {number:2} {name}: PASS");
}

fn read_bfile(name: &str) -> Vec<(u64, u64)> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read fixture {path:?}: {e}"));
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut parts = l.split_whitespace();
            let index = parts.next().unwrap().parse().unwrap();
            let value = parts.next().unwrap().parse().unwrap();
            (index, value)
        })
        .collect()
}

#[test]
fn acceptance_01_diophantine_exactness() {
    for m in 0..=12u64 {
        for n in 0..=12u64 {
            let (x0, y0) = special_solution(m, n);
            let lhs = BigInt::from(pow3(m)) * BigInt::from(x0.clone())
                - BigInt::from(pow2(n)) * BigInt::from(y0.clone());
            assert_eq!(lhs, BigInt::one(), "identity fails at m={m} n={n}");
            if m >= 1 {
                assert!(
                    BigUint::one() <= y0 && y0 < pow3(m),
                    "y0 out of range at m={m} n={n}"
                );
            }
            assert!(x0 >= BigUint::one());
        }
    }
    pass(1, "diophantine exactness over m,n <= 12");
}

#[test]
fn acceptance_02_y0_residue_tuple() {
    let fixture = read_bfile("y0_pow3.bfile");
    assert_eq!(fixture.len(), 18);
    for (n, expected) in fixture {
        assert_eq!(
            special_solution(3, n).1,
            BigUint::from(expected),
            "y0(3, {n}) mismatch"
        );
    }
    assert!(rrs_check(3), "y0(3, .) is not a reduced residue system");
    pass(2, "first-period residues modulo 27 and RRS property");
}

#[test]
fn acceptance_03_periodicity_suite() {
    for m in 0..=5u64 {
        let phi = collatz_words::arith::to_u64(&collatz_words::arith::totient_of_3_pow(m)).unwrap();
        let report = y0_period_check(m, 2 * phi + 4);
        assert!(report.certified);
        assert_eq!(report.period, phi, "primitive period mismatch at m={m}");
        for n in 0..=40 {
            assert!(x0_shift_check(m, n), "shift identity fails at m={m} n={n}");
        }
    }
    pass(3, "y0 periodicity and x0 shift identity for m <= 5");
}

#[test]
fn acceptance_04_alternating_word_families() {
    // words [0, 2, ..., 2, 1] with S-1 twos: M(k) = 1 + 2^(2S-1) k, N(k) = 2 + 3^S k
    for s in 1..=6u64 {
        let mut ns = vec![2u64; s as usize - 1];
        ns.push(1);
        let w = WordTuple::new(0, ns).unwrap();
        let family = recur_families_ns1(&w).unwrap();
        assert_eq!(
            family,
            RealizationFamily {
                m0: BigUint::one(),
                n0: BigUint::from(2u32),
                m_step: pow2(2 * s - 1),
                n_step: pow3(s),
            },
            "family mismatch at S={s}"
        );
    }
    let w = parse_word("[0,2,2,1]").unwrap();
    let t = run_word(&BigUint::from(97u32), &w).unwrap();
    let entries: Vec<u64> = t
        .entries
        .iter()
        .map(|e| collatz_words::arith::to_u64(e).unwrap())
        .collect();
    assert_eq!(entries, vec![97, 292, 146, 73, 220, 110, 55, 166, 83]);
    pass(4, "alternating-word families and the 97-start sequence");
}

#[test]
fn acceptance_05_printed_rows() {
    // ud^m for m = 1, 2, 3: eleven members from k = 0
    let ud_m: [[[u64; 11]; 2]; 3] = [
        [
            [1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21],
            [2, 5, 8, 11, 14, 17, 20, 23, 26, 29, 32],
        ],
        [
            [1, 5, 9, 13, 17, 21, 25, 29, 33, 37, 41],
            [1, 4, 7, 10, 13, 16, 19, 22, 25, 28, 31],
        ],
        [
            [5, 13, 21, 29, 37, 45, 53, 61, 69, 77, 85],
            [2, 5, 8, 11, 14, 17, 20, 23, 26, 29, 32],
        ],
    ];
    for (i, rows) in ud_m.iter().enumerate() {
        let m = i as u64 + 1;
        let family = general_families(&WordTuple::new(0, vec![m]).unwrap());
        for k in 0..11u64 {
            let (mv, nv) = family.member(k);
            assert_eq!(mv, BigUint::from(rows[0][k as usize]), "ud^{m} M row at k={k}");
            assert_eq!(nv, BigUint::from(rows[1][k as usize]), "ud^{m} N row at k={k}");
        }
    }
    // s^S for S = 1, 2, 3: the tabulated rows are the members at k = 1..=10
    let s_pow: [[[u64; 10]; 2]; 3] = [
        [
            [3, 5, 7, 9, 11, 13, 15, 17, 19, 21],
            [5, 8, 11, 14, 17, 20, 23, 26, 29, 32],
        ],
        [
            [7, 11, 15, 19, 23, 27, 31, 35, 39, 43],
            [17, 26, 35, 44, 53, 62, 71, 80, 89, 98],
        ],
        [
            [15, 23, 31, 39, 47, 55, 63, 71, 79, 87],
            [53, 80, 107, 134, 161, 188, 215, 242, 269, 296],
        ],
    ];
    for (i, rows) in s_pow.iter().enumerate() {
        let s = i + 1;
        let family = general_families(&WordTuple::new(0, vec![1; s]).unwrap());
        for k in 1..=10u64 {
            let (mv, nv) = family.member(k);
            assert_eq!(mv, BigUint::from(rows[0][k as usize - 1]), "s^{s} M row at k={k}");
            assert_eq!(nv, BigUint::from(rows[1][k as usize - 1]), "s^{s} N row at k={k}");
        }
        // the k = 0 member below the tabulated rows is real: the oracle finds it first
        let w = Word::Tuple(WordTuple::new(0, vec![1; s]).unwrap());
        assert_eq!(oracle_realizations(&w, 1)[0], family.member(0));
    }
    pass(5, "tabulated ud^m and s^S rows reproduced exactly");
}

#[test]
fn acceptance_06_oracle_equivalence_keystone() {
    let grid = word_grid(3, 3, 4);
    for tuple in &grid {
        let word = Word::Tuple(tuple.clone());
        let family = general_families(tuple);
        let members: Vec<_> = (0..5).map(|k| family.member(k)).collect();
        let expected = oracle_realizations(&word, 5);
        assert_eq!(
            members, expected,
            "family differs from oracle for {word} ({tuple:?})"
        );
        for k in 0..=10u64 {
            let (m, n) = family.member(k);
            let t = run_word(&m, &word)
                .unwrap_or_else(|e| panic!("member k={k} of {word} does not realize it: {e}"));
            assert_eq!(t.end(), &n, "end value mismatch at k={k} for {word}");
        }
    }
    pass(
        6,
        &format!(
            "oracle equivalence and end-to-end runs over {} grid words",
            grid.len()
        ),
    );
}

#[test]
fn acceptance_07_closed_form_equals_recurrence() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0c011a72);
    for case in 0..1000 {
        let s = rng.gen_range(1..=8usize);
        let n0 = rng.gen_range(0..=8u64);
        let mut ns: Vec<u64> = (0..s - 1).map(|_| rng.gen_range(1..=8)).collect();
        ns.push(1);
        let w = WordTuple::new(n0, ns).unwrap();
        let iterated = recurrence_states(&w).pop().unwrap();
        let closed = closed_form_state(&w).unwrap();
        assert_eq!(closed, iterated, "paths disagree on case {case}: {w:?}");
    }
    pass(7, "closed form equals iterated recurrence on 1000 random words");
}

#[test]
fn acceptance_08_tree_structure() {
    let levels = build_tree(14);
    let labels = |l: usize| -> Vec<u64> { levels[l].nodes.iter().map(|n| n.label).collect() };
    assert_eq!(labels(0), vec![8]);
    assert_eq!(labels(1), vec![16]);
    assert_eq!(labels(2), vec![5, 32]);
    assert_eq!(labels(3), vec![10, 64]);
    assert_eq!(labels(4), vec![3, 20, 21, 128]);

    // node counts against the frozen fixture and an independent recursive count
    let fixture = read_bfile("tree_node_counts.bfile");
    assert_eq!(fixture.len(), 15);
    fn count_recursive(label: u64, depth: u32) -> u64 {
        if depth == 0 {
            return 1;
        }
        let mut total = 0;
        if label % 6 == 4 && label != 4 {
            total += count_recursive((label - 1) / 3, depth - 1);
        }
        total + count_recursive(label * 2, depth - 1)
    }
    for &(level, count) in &fixture {
        assert_eq!(
            levels[level as usize].nodes.len() as u64,
            count,
            "node count mismatch at level {level}"
        );
        assert_eq!(
            count_recursive(8, level as u32),
            count,
            "independent recursion disagrees at level {level}"
        );
    }

    // the left/right split stays even through level 12; the first asymmetric
    // level is the 29-node one, split 15 / 14
    let stats = level_stats(&levels);
    for s in &stats[2..=12] {
        assert_eq!(s.left, s.right, "level {} should split evenly", s.level);
    }
    let first_odd = stats[2..].iter().find(|s| s.count % 2 == 1).unwrap();
    assert_eq!(
        (first_odd.level, first_odd.count, first_odd.left, first_odd.right),
        (13, 29, 15, 14)
    );

    use EdgeLabel::*;
    assert_eq!(
        path_to_root(&levels, 40, 5).unwrap(),
        vec![V, R, V, L, V]
    );
    assert!(all_labels_distinct(&levels));
    let total: usize = levels.iter().map(|l| l.nodes.len()).sum();
    let distinct: HashSet<u64> = levels
        .iter()
        .flat_map(|l| l.nodes.iter().map(|n| n.label))
        .collect();
    assert_eq!(total, distinct.len());
    pass(8, "tree levels, symmetry breaking, path extraction, distinctness");
}

#[test]
fn acceptance_09_triangle_integrality() {
    for n in 1..=60u64 {
        for m in 1..=n {
            let a = triangle_a(n, m); // panics internally if not exact
            assert!(a >= BigUint::one(), "entry ({n}, {m}) not positive");
        }
    }
    pass(9, "integrality triangle exact and positive through n = 60");
}

#[test]
fn acceptance_10_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_collatz-words");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    // success path: exit 0 and verified member output
    let out = run(&["realize", "sdsds", "-k", "3", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("k=3 M=97 N=83"), "missing member line:\n{text}");
    assert!(text.contains("verification: passed"));

    // lookup failure: exit 1 (7 is not a label at level 2)
    let out = run(&["path", "7", "--level", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());

    // verification failure: exit 1 via the fault-injection hook
    let out = run(&[
        "verify",
        "--s-max",
        "1",
        "--n-max",
        "1",
        "--n0-max",
        "0",
        "--count",
        "2",
        "--inject-fault",
        "--quiet",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // usage errors: exit 2
    let out = run(&["realize", "uu"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["solve-dio", "--bogus-flag"]);
    assert_eq!(out.status.code(), Some(2));

    // JSON output validates against the documented record shape
    let out = run(&["realize", "[0,2,2,1]", "--format", "json", "-k", "3", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("realize output is one JSON record");
    assert_eq!(record["command"], "realize");
    assert_eq!(record["inputs"]["word"], "sdsds");
    assert_eq!(record["results"]["family"]["m_step"], "32");
    assert_eq!(record["verification"], "passed");
    let members = record["results"]["members"].as_array().unwrap();
    assert_eq!(members.len(), 4);
    assert_eq!(members[3]["m"], "97");
    assert_eq!(members[3]["n"], "83");

    let out = run(&["solve-dio", "--format", "json", "-m", "3", "-n", "0", "-c", "1", "--count", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let record: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(record["results"]["x0"], "1");
    assert_eq!(record["results"]["y0"], "26");

    let out = run(&["tree", "--max-level", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let levels: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        levels,
        serde_json::json!([[{"label": 8, "parent_edge": null}]])
    );

    pass(10, "CLI exit codes and JSON schema");
}
