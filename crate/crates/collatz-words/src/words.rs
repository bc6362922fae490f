//! Collatz words: the up-down alphabet, the tuple encoding and its surface
//! syntax.
//!
//! A Collatz word is a finite string over `{u, d}` where `u` marks the odd
//! step `c -> 3c+1` and `d` the even step `c -> c/2`. Except for the one
//! letter word `u`, every `u` is immediately followed by a `d` (an odd number
//! maps to an even one), which motivates the abbreviation `s = ud`. Words are
//! encoded canonically by a tuple `[n0, n1, ..., nS]`: `n0` leading `d`s, then
//! for each `j = 1..S` one `s` followed by `n_j - 1` further `d`s.

use std::fmt;

use thiserror::Error;

/// One step letter: up (`3c+1`, odd argument) or down (`c/2`, even argument).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    U,
    D,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::U => "u",
            Letter::D => "d",
        })
    }
}

/// Tuple encoding `[n0, n1, ..., nS]` of a word with at least one `u`.
///
/// Invariants: `n0 >= 0`, every later entry `>= 1`, and there is at least one
/// later entry (`S >= 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordTuple {
    n0: u64,
    ns: Vec<u64>,
}

/// Words not covered by the tuple encoding: the lone `u` and the pure-down
/// words `d^n0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpecialWord {
    LoneU,
    PureD(u64),
}

/// Any valid Collatz word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Word {
    Tuple(WordTuple),
    Special(SpecialWord),
}

/// The derived counts of a tuple word.
///
/// `ups` is the number of `u`s (the paper-independent role: how many odd
/// steps), `downs` the number of `d`s, `core_downs` the number of `d`s with
/// the trailing down-run removed (equivalently `1 + n0 + ... + n_{S-1}`), and
/// `length` the entry count `downs + ups + 1` of any realizing sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordCounts {
    pub ups: u64,
    pub downs: u64,
    pub core_downs: u64,
    pub length: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("empty word")]
    Empty,
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedChar { position: usize, found: char },
    #[error("'u' at position {position} must be followed by 'd'")]
    UpNotFollowedByDown { position: usize },
    #[error("tuple entry {index} must be >= 1 (only the first entry may be 0)")]
    ZeroEntry { index: usize },
    #[error("invalid integer in tuple at entry {index}")]
    BadInteger { index: usize },
    #[error("tuple needs at least one entry")]
    EmptyTuple,
    #[error("a one-entry tuple [0] encodes the empty word")]
    EmptyPureDown,
    #[error("unterminated tuple: missing ']'")]
    UnterminatedTuple,
}

impl WordTuple {
    /// Builds a tuple word, validating that all entries past the first are
    /// positive and that there is at least one of them.
    pub fn new(n0: u64, ns: Vec<u64>) -> Result<Self, ParseWordError> {
        if ns.is_empty() {
            return Err(ParseWordError::EmptyTuple);
        }
        for (i, &n) in ns.iter().enumerate() {
            if n == 0 {
                return Err(ParseWordError::ZeroEntry { index: i + 1 });
            }
        }
        Ok(WordTuple { n0, ns })
    }

    /// Leading down-run length `n0`.
    pub fn n0(&self) -> u64 {
        self.n0
    }

    /// The entries `n1..nS`.
    pub fn ns(&self) -> &[u64] {
        &self.ns
    }

    /// Number of `u`s, i.e. `S`.
    pub fn ups(&self) -> u64 {
        self.ns.len() as u64
    }

    /// Entry `n_j` for `j = 0..=S`.
    pub fn entry(&self, j: usize) -> u64 {
        if j == 0 {
            self.n0
        } else {
            self.ns[j - 1]
        }
    }

    /// The expanded `u`/`d` letters, of length `length - 1`.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        out.extend(std::iter::repeat(Letter::D).take(self.n0 as usize));
        for &nj in &self.ns {
            out.push(Letter::U);
            out.extend(std::iter::repeat(Letter::D).take(nj as usize));
        }
        out
    }
}

impl SpecialWord {
    pub fn letters(&self) -> Vec<Letter> {
        match self {
            SpecialWord::LoneU => vec![Letter::U],
            SpecialWord::PureD(n0) => vec![Letter::D; *n0 as usize],
        }
    }
}

impl Word {
    pub fn letters(&self) -> Vec<Letter> {
        match self {
            Word::Tuple(t) => t.letters(),
            Word::Special(s) => s.letters(),
        }
    }

    /// Sequence length of a realization: one more than the letter count.
    pub fn length(&self) -> u64 {
        self.letters().len() as u64 + 1
    }

    pub fn as_tuple(&self) -> Option<&WordTuple> {
        match self {
            Word::Tuple(t) => Some(t),
            Word::Special(_) => None,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

/// The four derived counts of a tuple word.
pub fn word_counts(w: &WordTuple) -> WordCounts {
    let ups = w.ups();
    let downs = w.n0 + w.ns.iter().sum::<u64>();
    let core_downs = 1 + w.n0 + w.ns[..w.ns.len() - 1].iter().sum::<u64>();
    WordCounts {
        ups,
        downs,
        core_downs,
        length: downs + ups + 1,
    }
}

/// Canonical letter form: `d^{n0} s d^{n1-1} s ... s d^{nS-1}`.
pub fn format_word(w: &Word) -> String {
    match w {
        Word::Special(SpecialWord::LoneU) => "u".to_string(),
        Word::Special(SpecialWord::PureD(n0)) => "d".repeat(*n0 as usize),
        Word::Tuple(t) => {
            let mut out = "d".repeat(t.n0 as usize);
            for &nj in &t.ns {
                out.push('s');
                out.push_str(&"d".repeat(nj as usize - 1));
            }
            out
        }
    }
}

/// Compressed human form with run exponents, e.g. `d^3 s` for `dddud`.
pub fn compressed_form(w: &Word) -> String {
    fn run(c: char, n: u64, out: &mut Vec<String>) {
        match n {
            0 => {}
            1 => out.push(c.to_string()),
            _ => out.push(format!("{c}^{n}")),
        }
    }
    let mut parts = Vec::new();
    match w {
        Word::Special(SpecialWord::LoneU) => parts.push("u".to_string()),
        Word::Special(SpecialWord::PureD(n0)) => run('d', *n0, &mut parts),
        Word::Tuple(t) => {
            run('d', t.n0, &mut parts);
            for &nj in &t.ns {
                parts.push("s".to_string());
                run('d', nj - 1, &mut parts);
            }
        }
    }
    parts.join(" ")
}

/// Parses either letter form (`dsds`, `ddduds`) or tuple form (`[1,2,1]`).
///
/// Letter form is normalized: an explicit `ud` pair becomes `s`. Every `u`
/// must be followed by `d` unless the whole word is `u`.
pub fn parse_word(text: &str) -> Result<Word, ParseWordError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseWordError::Empty);
    }
    if trimmed.starts_with('[') {
        parse_tuple(trimmed)
    } else {
        parse_letters(trimmed)
    }
}

fn parse_tuple(text: &str) -> Result<Word, ParseWordError> {
    let inner = text
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or(ParseWordError::UnterminatedTuple)?;
    if inner.trim().is_empty() {
        return Err(ParseWordError::EmptyTuple);
    }
    let mut entries = Vec::new();
    for (index, part) in inner.split(',').enumerate() {
        let n: u64 = part
            .trim()
            .parse()
            .map_err(|_| ParseWordError::BadInteger { index })?;
        entries.push(n);
    }
    let n0 = entries[0];
    let ns = entries[1..].to_vec();
    if ns.is_empty() {
        return match n0 {
            0 => Err(ParseWordError::EmptyPureDown),
            _ => Ok(Word::Special(SpecialWord::PureD(n0))),
        };
    }
    Ok(Word::Tuple(WordTuple::new(n0, ns)?))
}

fn parse_letters(text: &str) -> Result<Word, ParseWordError> {
    // Expand s -> ud, remembering source positions for error messages.
    let mut expanded: Vec<(Letter, usize)> = Vec::new();
    for (position, ch) in text.char_indices() {
        match ch {
            'd' => expanded.push((Letter::D, position)),
            'u' => expanded.push((Letter::U, position)),
            's' => {
                expanded.push((Letter::U, position));
                expanded.push((Letter::D, position));
            }
            found => return Err(ParseWordError::UnexpectedChar { position, found }),
        }
    }
    if expanded.len() == 1 && expanded[0].0 == Letter::U {
        return Ok(Word::Special(SpecialWord::LoneU));
    }
    for (i, &(letter, position)) in expanded.iter().enumerate() {
        if letter == Letter::U {
            match expanded.get(i + 1) {
                Some(&(Letter::D, _)) => {}
                _ => return Err(ParseWordError::UpNotFollowedByDown { position }),
            }
        }
    }
    // Leading d-run is n0; each u consumes its following d and the d-run
    // after that gives n_j - 1.
    let letters: Vec<Letter> = expanded.iter().map(|&(l, _)| l).collect();
    let mut i = 0;
    let mut n0 = 0u64;
    while i < letters.len() && letters[i] == Letter::D {
        n0 += 1;
        i += 1;
    }
    let mut ns = Vec::new();
    while i < letters.len() {
        debug_assert_eq!(letters[i], Letter::U);
        i += 2; // skip the u and its mandatory d
        let mut run = 0u64;
        while i < letters.len() && letters[i] == Letter::D {
            run += 1;
            i += 1;
        }
        ns.push(run + 1);
    }
    if ns.is_empty() {
        return Ok(Word::Special(SpecialWord::PureD(n0)));
    }
    Ok(Word::Tuple(WordTuple { n0, ns }))
}
