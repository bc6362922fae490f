//! Trajectories against word patterns, and the brute-force oracle that the
//! closed-form families are checked against.
//!
//!     cargo run --example trajectory_oracle

use num_bigint::BigUint;

use collatz_words::engine::{oracle_realizations, run_word};
use collatz_words::pattern::general_families;
use collatz_words::words::parse_word;

fn main() {
    let word = parse_word("sdsds").unwrap();
    let trajectory = run_word(&BigUint::from(97u32), &word).unwrap();
    let entries: Vec<String> = trajectory.entries.iter().map(|e| e.to_string()).collect();
    println!("97 realizes sdsds: [{}]", entries.join(", "));

    // starts that do not follow the pattern report the first divergence
    let miss = run_word(&BigUint::from(3u32), &word).unwrap_err();
    println!("3 does not: {miss}");

    // the oracle scans ascending start values; the family formula must agree
    for text in ["ddds", "sd", "ss", "[0,4,1]"] {
        let word = parse_word(text).unwrap();
        let found = oracle_realizations(&word, 5);
        let pairs: Vec<String> = found
            .iter()
            .map(|(m, n)| format!("({m}, {n})"))
            .collect();
        println!("oracle {text}: {}", pairs.join(", "));
        if let Some(tuple) = word.as_tuple() {
            let family = general_families(tuple);
            let computed: Vec<_> = (0..5).map(|k| family.member(k)).collect();
            assert_eq!(computed, found, "closed form disagrees with the oracle");
        }
    }
    println!("closed-form families match the oracle on all of the above");
}
