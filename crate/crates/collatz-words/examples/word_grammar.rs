//! The word surface syntax: letter form, tuple form, normalization and the
//! derived counts.
//!
//!     cargo run --example word_grammar

use collatz_words::words::{compressed_form, format_word, parse_word, word_counts};

fn main() {
    for text in ["dsds", "[1,2,1]", "ddduds", "uds", "u", "ddd", "sdsds"] {
        match parse_word(text) {
            Ok(word) => {
                print!(
                    "{text:>8} -> canonical {} ({})",
                    format_word(&word),
                    compressed_form(&word)
                );
                match word.as_tuple() {
                    Some(t) => {
                        let c = word_counts(t);
                        println!(
                            "  ups={} downs={} core_downs={} length={}",
                            c.ups, c.downs, c.core_downs, c.length
                        );
                    }
                    None => println!("  (special word)"),
                }
                // canonical strings round-trip
                assert_eq!(parse_word(&format_word(&word)).unwrap(), word);
            }
            Err(e) => println!("{text:>8} -> error: {e}"),
        }
    }

    println!();
    for text in ["uu", "du", "[1,0,2]", ""] {
        let err = parse_word(text).unwrap_err();
        println!("{text:>8} rejected: {err}");
    }
}
