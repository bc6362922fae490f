//! The Collatz map, trajectory generation against a word pattern, and the
//! brute-force realization oracle that grounds the closed-form results.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::words::{Letter, SpecialWord, Word};

/// A finite Collatz sequence together with its induced letter pattern.
///
/// `letters[i]` records the parity step taken from `entries[i]`, so
/// `letters.len() == entries.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub entries: Vec<BigUint>,
    pub letters: Vec<Letter>,
}

impl Trajectory {
    /// First entry.
    pub fn start(&self) -> &BigUint {
        &self.entries[0]
    }

    /// Last entry.
    pub fn end(&self) -> &BigUint {
        self.entries.last().expect("trajectory is nonempty")
    }
}

/// A trajectory diverged from the requested pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoMatch {
    /// 0-based letter index of the first divergence.
    pub position: usize,
    pub expected: Letter,
    pub found: Letter,
}

impl fmt::Display for NoMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pattern diverges at position {}: expected {}, trajectory takes {}",
            self.position, self.expected, self.found
        )
    }
}

/// One application of the Collatz map: `(3c+1, u)` for odd `c`, `(c/2, d)`
/// for even `c`. Panics for `c = 0`, which is outside the map's domain.
pub fn collatz_step(c: &BigUint) -> (BigUint, Letter) {
    assert!(!c.is_zero(), "collatz_step: argument must be >= 1");
    if c.is_odd() {
        (c * 3u32 + BigUint::one(), Letter::U)
    } else {
        (c >> 1, Letter::D)
    }
}

/// Runs the Collatz map from `start`, checking the induced letters against
/// the word. Succeeds with the full length-`L` trajectory exactly when the
/// first `L - 1` letters match (nothing is required of any later step).
pub fn run_word(start: &BigUint, word: &Word) -> Result<Trajectory, NoMatch> {
    assert!(!start.is_zero(), "run_word: start must be >= 1");
    let expected = word.letters();
    let mut entries = Vec::with_capacity(expected.len() + 1);
    let mut letters = Vec::with_capacity(expected.len());
    entries.push(start.clone());
    let mut current = start.clone();
    for (position, &want) in expected.iter().enumerate() {
        let (next, got) = collatz_step(&current);
        if got != want {
            return Err(NoMatch {
                position,
                expected: want,
                found: got,
            });
        }
        letters.push(got);
        entries.push(next.clone());
        current = next;
    }
    Ok(Trajectory { entries, letters })
}

/// The `count` smallest start values realizing the word, each with its end
/// value, found by an ascending scan.
///
/// The scan is capped at `(count + 1) * 2^D` (with the word-appropriate
/// period for the special words), which suffices because realizations form a
/// single arithmetic progression with step `2^D`; exceeding the cap would
/// signal a bug.
pub fn oracle_realizations(word: &Word, count: usize) -> Vec<(BigUint, BigUint)> {
    assert!(count >= 1, "oracle_realizations: count must be >= 1");
    let period: BigUint = match word {
        Word::Tuple(t) => crate::arith::pow2(crate::words::word_counts(t).downs),
        Word::Special(SpecialWord::LoneU) => BigUint::from(2u32),
        Word::Special(SpecialWord::PureD(n0)) => crate::arith::pow2(*n0),
    };
    let bound = BigUint::from(count as u64 + 1) * period;
    let expected = word.letters();
    let mut out = Vec::with_capacity(count);
    let mut m = BigUint::one();
    while out.len() < count {
        assert!(
            m <= bound,
            "oracle scan exceeded its period bound; realization structure violated"
        );
        if let Some(end) = realize_end(&m, &expected) {
            out.push((m.clone(), end));
        }
        m += BigUint::one();
    }
    out
}

/// Closed realization families of the special words, which bypass the
/// recurrence machinery: the lone `u` realizes as `2k+1 -> 2(3k+2)` and
/// `d^n0` as `2^n0 * k -> k` for `k >= 1`.
pub fn special_family(word: &SpecialWord) -> crate::pattern::RealizationFamily {
    match word {
        SpecialWord::LoneU => crate::pattern::RealizationFamily {
            m0: BigUint::one(),
            n0: BigUint::from(4u32),
            m_step: BigUint::from(2u32),
            n_step: BigUint::from(6u32),
        },
        SpecialWord::PureD(n0) => crate::pattern::RealizationFamily {
            m0: crate::arith::pow2(*n0),
            n0: BigUint::one(),
            m_step: crate::arith::pow2(*n0),
            n_step: BigUint::one(),
        },
    }
}

// Steps through the letters with early exit; returns the final entry on a
// full match.
fn realize_end(start: &BigUint, expected: &[Letter]) -> Option<BigUint> {
    let mut current = start.clone();
    for &want in expected {
        let got = if current.is_odd() { Letter::U } else { Letter::D };
        if got != want {
            return None;
        }
        current = match want {
            Letter::U => current * 3u32 + BigUint::one(),
            Letter::D => current >> 1,
        };
    }
    Some(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn entries(t: &Trajectory) -> Vec<u64> {
        t.entries
            .iter()
            .map(|e| crate::arith::to_u64(e).unwrap())
            .collect()
    }

    #[test]
    fn collatz_step_cases() {
        assert_eq!(collatz_step(&big(5)), (big(16), Letter::U));
        assert_eq!(collatz_step(&big(40)), (big(20), Letter::D));
        assert_eq!(collatz_step(&big(1)), (big(4), Letter::U));
    }

    #[test]
    #[should_panic(expected = "argument must be >= 1")]
    fn collatz_step_rejects_zero() {
        collatz_step(&BigUint::zero());
    }

    #[test]
    fn run_word_reproduces_known_sequences() {
        let w = parse_word("[0,2,2,1]").unwrap();
        let t = run_word(&big(97), &w).unwrap();
        assert_eq!(entries(&t), vec![97, 292, 146, 73, 220, 110, 55, 166, 83]);

        let w = parse_word("[3,1]").unwrap();
        let t = run_word(&big(40), &w).unwrap();
        assert_eq!(entries(&t), vec![40, 20, 10, 5, 16, 8]);

        let w = parse_word("[1,2,1]").unwrap();
        let t = run_word(&big(2), &w).unwrap();
        assert_eq!(entries(&t), vec![2, 1, 4, 2, 1, 4, 2]);
    }

    #[test]
    fn run_word_reports_first_divergence() {
        let w = parse_word("[0,2,2,1]").unwrap();
        let err = run_word(&big(3), &w).unwrap_err();
        // 3 -> 10 -> 5 is odd where the word wants a second d
        assert_eq!(err.position, 2);
        assert_eq!(err.expected, Letter::D);
        assert_eq!(err.found, Letter::U);
    }

    #[test]
    fn run_word_is_deterministic() {
        let w = parse_word("sdsds").unwrap();
        let a = run_word(&big(97), &w).unwrap();
        let b = run_word(&big(97), &w).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn oracle_finds_smallest_realizations() {
        let w = parse_word("[3,1]").unwrap();
        let got = oracle_realizations(&w, 3);
        assert_eq!(
            got,
            vec![(big(8), big(2)), (big(24), big(5)), (big(40), big(8))]
        );

        let w = parse_word("[0,1]").unwrap();
        assert_eq!(
            oracle_realizations(&w, 2),
            vec![(big(1), big(2)), (big(3), big(5))]
        );

        let w = parse_word("u").unwrap();
        assert_eq!(
            oracle_realizations(&w, 2),
            vec![(big(1), big(4)), (big(3), big(10))]
        );
    }

    #[test]
    fn oracle_members_run_successfully() {
        for text in ["[3,1]", "[0,2,2,1]", "[1,2,1]", "u", "ddd"] {
            let w = parse_word(text).unwrap();
            for (m, n) in oracle_realizations(&w, 4) {
                let t = run_word(&m, &w).unwrap();
                assert_eq!(t.end(), &n);
            }
        }
    }

    #[test]
    fn pure_down_realizations_are_the_multiples() {
        let w = parse_word("ddd").unwrap();
        let got = oracle_realizations(&w, 4);
        assert_eq!(
            got,
            vec![
                (big(8), big(1)),
                (big(16), big(2)),
                (big(24), big(3)),
                (big(32), big(4))
            ]
        );
    }

    #[test]
    fn special_families_match_the_oracle() {
        for text in ["u", "d", "ddd"] {
            let w = parse_word(text).unwrap();
            let sw = match &w {
                crate::words::Word::Special(s) => s.clone(),
                _ => unreachable!(),
            };
            let f = special_family(&sw);
            let got: Vec<_> = (0..5).map(|k| f.member(k)).collect();
            assert_eq!(got, oracle_realizations(&w, 5), "mismatch for {text}");
        }
    }
}
