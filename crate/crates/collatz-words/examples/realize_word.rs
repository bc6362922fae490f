//! Compute the realization family of a word: every start value M and end
//! value N of Collatz sequences following its up-down pattern.
//!
//!     cargo run --example realize_word -- sdsds
//!     cargo run --example realize_word -- "[3,1]"

use collatz_words::engine::{run_word, special_family};
use collatz_words::pattern::{closed_form_state, general_families, recurrence_states};
use collatz_words::words::{compressed_form, parse_word, Word};

fn main() {
    let input = std::env::args().nth(1).unwrap_or_else(|| "sdsds".into());
    let word = parse_word(&input).unwrap_or_else(|e| {
        eprintln!("cannot parse {input:?}: {e}");
        std::process::exit(2);
    });
    println!("word {} ({})", word, compressed_form(&word));

    let family = match &word {
        Word::Tuple(t) => {
            // the closed form and the iterated recurrence must agree exactly
            if t.ns().last() == Some(&1) {
                let iterated = recurrence_states(t).pop().unwrap();
                let closed = closed_form_state(t).unwrap();
                assert_eq!(iterated, closed);
                println!(
                    "recurrence basepoints at level {}: M={} N={} c={}",
                    iterated.level,
                    iterated.m,
                    iterated.n(),
                    iterated.c
                );
            }
            general_families(t)
        }
        Word::Special(s) => special_family(s),
    };
    println!(
        "family: M(k) = {} + {} k,  N(k) = {} + {} k",
        family.m0, family.m_step, family.n0, family.n_step
    );
    for k in 0..5 {
        let (m, n) = family.member(k);
        let trajectory = run_word(&m, &word).expect("family members realize the word");
        assert_eq!(trajectory.end(), &n);
        let entries: Vec<String> = trajectory.entries.iter().map(|e| e.to_string()).collect();
        println!("k={k}: [{}]", entries.join(", "));
    }
}
