//! Command-line surface over the library. One thin binary dispatches here.
//!
//! Exit codes are a stable contract: 0 on success, 1 when a verification or
//! lookup fails, 2 on usage errors. All integers print in full decimal.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::diophantine::{solve, DioProblem};
use crate::engine::{oracle_realizations, run_word, special_family};
use crate::pattern::{general_families, RealizationFamily};
use crate::tree::{build_tree, level_stats, lvr_to_word, path_to_root, to_dot, to_json};
use crate::words::{
    compressed_form, format_word, parse_word, word_counts, SpecialWord, Word, WordTuple,
};

const TREE_LEVEL_CAP: u32 = 30;
const DIO_COUNT_CAP: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "collatz-words",
    version,
    about = "Exact realization families for Collatz up-down words",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Output options shared by every subcommand except `tree`, which has its
/// own export formats.
#[derive(Debug, Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Suppress echo lines and per-item progress.
    #[arg(long)]
    quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TreeFormat {
    Dot,
    Json,
    Stats,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve 3^m x - 2^n y = c; print the special solution and the first
    /// positive (x, y) pairs.
    SolveDio(SolveDioArgs),
    /// Compute the realization family of a word and list members.
    Realize(RealizeArgs),
    /// Cross-check closed-form families against the brute-force oracle over
    /// a word grid.
    Verify(VerifyArgs),
    /// Build the Collatz tree and export it.
    Tree(TreeArgs),
    /// Read the edge path from a label at a level up to the root.
    Path(PathArgs),
    /// Parse a word and print its canonical forms and counts.
    Word(WordArgs),
}

#[derive(Debug, Args)]
struct SolveDioArgs {
    #[command(flatten)]
    opts: OutputOpts,
    /// Exponent of 3.
    #[arg(short)]
    m: u64,
    /// Exponent of 2.
    #[arg(short)]
    n: u64,
    /// Right-hand side (any integer, full decimal).
    #[arg(short, allow_hyphen_values = true)]
    c: String,
    /// Number of positive pairs to list.
    #[arg(long, default_value_t = 5)]
    count: u64,
}

#[derive(Debug, Args)]
struct RealizeArgs {
    #[command(flatten)]
    opts: OutputOpts,
    /// Word in letter form ("sdsds") or tuple form ("[0,2,2,1]").
    word: String,
    /// Largest member index k to list.
    #[arg(short, long = "k-max", default_value_t = 5)]
    k_max: u64,
    /// List only members with odd end value N.
    #[arg(long)]
    odd_only: bool,
    /// Re-run every listed member through the trajectory engine; any
    /// mismatch exits with code 1.
    #[arg(long)]
    verify: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    opts: OutputOpts,
    /// Largest number of up-steps S.
    #[arg(long, default_value_t = 3)]
    s_max: u64,
    /// Largest entry value for n1..nS.
    #[arg(long, default_value_t = 4)]
    n_max: u64,
    /// Largest leading down-run n0 (defaults to --n-max).
    #[arg(long)]
    n0_max: Option<u64>,
    /// Realizations per word to cross-check.
    #[arg(long, default_value_t = 5)]
    count: usize,
    /// Corrupt the first family before checking (test hook).
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug, Args)]
struct TreeArgs {
    #[arg(long, default_value_t = 8)]
    max_level: u32,
    /// Export format for the tree.
    #[arg(long, value_enum, default_value_t = TreeFormat::Stats)]
    format: TreeFormat,
}

#[derive(Debug, Args)]
struct PathArgs {
    #[command(flatten)]
    opts: OutputOpts,
    /// Node label to start from.
    label: u64,
    /// Level the label lives at.
    #[arg(long)]
    level: u32,
}

#[derive(Debug, Args)]
struct WordArgs {
    #[command(flatten)]
    opts: OutputOpts,
    /// Word in letter or tuple form.
    word: String,
}

enum CmdError {
    /// Bad input: exit code 2.
    Usage(String),
    /// Verification or lookup failure: exit code 1.
    Failure(String),
}

/// Parses process arguments, runs the command, and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CmdError::Failure(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CmdError> {
    match &cli.command {
        Command::SolveDio(args) => cmd_solve_dio(args),
        Command::Realize(args) => cmd_realize(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Tree(args) => cmd_tree(args),
        Command::Path(args) => cmd_path(args),
        Command::Word(args) => cmd_word(args),
    }
}

fn cmd_solve_dio(args: &SolveDioArgs) -> Result<(), CmdError> {
    if args.count > DIO_COUNT_CAP {
        return Err(CmdError::Usage(format!(
            "--count must be at most {DIO_COUNT_CAP}"
        )));
    }
    let c = BigInt::from_str(args.c.trim())
        .map_err(|e| CmdError::Usage(format!("invalid right-hand side {:?}: {e}", args.c)))?;
    let problem = DioProblem {
        m: args.m,
        n: args.n,
        c: c.clone(),
    };
    let solution = solve(&problem);
    let members: Vec<_> = (0..args.count).map(|k| solution.member(k)).collect();
    match args.opts.format {
        Format::Json => {
            let record = json!({
                "command": "solve-dio",
                "inputs": {"m": args.m, "n": args.n, "c": c.to_string(), "count": args.count},
                "results": {
                    "x0": solution.x0.to_string(),
                    "y0": solution.y0.to_string(),
                    "t_min": solution.t_min.to_string(),
                    "x_step": solution.x_step.to_string(),
                    "y_step": solution.y_step.to_string(),
                    "members": members.iter().enumerate().map(|(k, (x, y))| {
                        json!({"k": k, "x": x.to_string(), "y": y.to_string()})
                    }).collect::<Vec<_>>(),
                },
                "verification": serde_json::Value::Null,
            });
            println!("{record}");
        }
        Format::Csv => {
            println!("k,x,y");
            for (k, (x, y)) in members.iter().enumerate() {
                println!("{k},{x},{y}");
            }
        }
        Format::Plain => {
            if !args.opts.quiet {
                println!("equation: 3^{} x - 2^{} y = {}", args.m, args.n, c);
            }
            println!(
                "x0={} y0={} t_min={} x_step={} y_step={}",
                solution.x0, solution.y0, solution.t_min, solution.x_step, solution.y_step
            );
            for (k, (x, y)) in members.iter().enumerate() {
                println!("k={k} x={x} y={y}");
            }
        }
    }
    Ok(())
}

fn family_of(word: &Word) -> RealizationFamily {
    match word {
        Word::Tuple(t) => general_families(t),
        Word::Special(s) => special_family(s),
    }
}

fn tuple_json(word: &Word) -> serde_json::Value {
    match word {
        Word::Tuple(t) => {
            let mut entries = vec![t.n0()];
            entries.extend_from_slice(t.ns());
            json!(entries)
        }
        Word::Special(SpecialWord::PureD(n0)) => json!([n0]),
        Word::Special(SpecialWord::LoneU) => serde_json::Value::Null,
    }
}

fn tuple_plain(word: &Word) -> String {
    match word {
        Word::Tuple(t) => {
            let mut entries = vec![t.n0().to_string()];
            entries.extend(t.ns().iter().map(u64::to_string));
            format!("[{}]", entries.join(","))
        }
        Word::Special(SpecialWord::PureD(n0)) => format!("[{n0}]"),
        Word::Special(SpecialWord::LoneU) => "-".to_string(),
    }
}

fn cmd_realize(args: &RealizeArgs) -> Result<(), CmdError> {
    let word = parse_word(&args.word)
        .map_err(|e| CmdError::Usage(format!("cannot parse word {:?}: {e}", args.word)))?;
    let family = family_of(&word);
    let mut members = Vec::new();
    for k in 0..=args.k_max {
        let (m, n) = family.member(k);
        if args.odd_only && (&n % 2u32) == 0u32.into() {
            continue;
        }
        members.push((k, m, n));
    }
    let mut verification = None;
    if args.verify {
        for (k, m, n) in &members {
            let outcome = run_word(m, &word);
            let ok = matches!(&outcome, Ok(t) if t.end() == n);
            if !ok {
                return Err(CmdError::Failure(format!(
                    "member k={k} (M={m}) failed verification: {}",
                    match outcome {
                        Ok(t) => format!("trajectory ends at {}, family says {n}", t.end()),
                        Err(nm) => nm.to_string(),
                    }
                )));
            }
        }
        verification = Some("passed");
    }
    match args.opts.format {
        Format::Json => {
            let record = json!({
                "command": "realize",
                "inputs": {
                    "word": format_word(&word),
                    "tuple": tuple_json(&word),
                    "k_max": args.k_max,
                    "odd_only": args.odd_only,
                },
                "results": {
                    "family": {
                        "m0": family.m0.to_string(),
                        "n0": family.n0.to_string(),
                        "m_step": family.m_step.to_string(),
                        "n_step": family.n_step.to_string(),
                    },
                    "members": members.iter().map(|(k, m, n)| {
                        json!({"k": k, "m": m.to_string(), "n": n.to_string()})
                    }).collect::<Vec<_>>(),
                },
                "verification": verification,
            });
            println!("{record}");
        }
        Format::Csv => {
            println!("k,m,n");
            for (k, m, n) in &members {
                println!("{k},{m},{n}");
            }
        }
        Format::Plain => {
            if !args.opts.quiet {
                println!(
                    "word={} tuple={} ({})",
                    format_word(&word),
                    tuple_plain(&word),
                    compressed_form(&word)
                );
            }
            println!(
                "m0={} n0={} m_step={} n_step={}",
                family.m0, family.n0, family.m_step, family.n_step
            );
            for (k, m, n) in &members {
                println!("k={k} M={m} N={n}");
            }
            if let Some(v) = verification {
                println!("verification: {v}");
            }
        }
    }
    Ok(())
}

/// All tuple words with `n0 <= n0_max`, `1 <= S <= s_max` and entries
/// `1 <= n_i <= n_max`, in lexicographic order.
pub fn word_grid(n0_max: u64, s_max: u64, n_max: u64) -> Vec<WordTuple> {
    let mut out = Vec::new();
    for n0 in 0..=n0_max {
        for s in 1..=s_max {
            let mut ns = vec![1u64; s as usize];
            'words: loop {
                out.push(WordTuple::new(n0, ns.clone()).expect("grid entries are positive"));
                // odometer increment over 1..=n_max per digit
                let mut i = ns.len();
                while i > 0 {
                    i -= 1;
                    if ns[i] < n_max {
                        ns[i] += 1;
                        for later in ns[i + 1..].iter_mut() {
                            *later = 1;
                        }
                        continue 'words;
                    }
                }
                break;
            }
        }
    }
    out
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CmdError> {
    if args.count == 0 {
        return Err(CmdError::Usage("--count must be at least 1".into()));
    }
    let n0_max = args.n0_max.unwrap_or(args.n_max);
    let grid = word_grid(n0_max, args.s_max, args.n_max);
    let mut failures: Vec<(String, String)> = Vec::new();
    let mut checked = 0usize;
    for (index, tuple) in grid.iter().enumerate() {
        let word = Word::Tuple(tuple.clone());
        let mut family = general_families(tuple);
        if args.inject_fault && index == 0 {
            family.m0 += 1u32;
        }
        let expected = oracle_realizations(&word, args.count);
        let mut failure = None;
        for (k, oracle_pair) in expected.iter().enumerate() {
            let member = family.member(k as u64);
            if &member != oracle_pair {
                failure = Some(format!(
                    "first divergence at k={k}: family ({}, {}) vs oracle ({}, {})",
                    member.0, member.1, oracle_pair.0, oracle_pair.1
                ));
                break;
            }
            let trajectory = run_word(&member.0, &word);
            match trajectory {
                Ok(t) if t.end() == &member.1 => {}
                other => {
                    failure = Some(format!(
                        "member k={k} does not realize the word: {}",
                        match other {
                            Ok(t) => format!("ends at {}", t.end()),
                            Err(nm) => nm.to_string(),
                        }
                    ));
                    break;
                }
            }
        }
        checked += 1;
        let canonical = format_word(&word);
        match failure {
            Some(detail) => {
                if args.opts.format == Format::Plain {
                    println!("FAIL {} {}: {detail}", tuple_plain(&word), canonical);
                }
                failures.push((canonical, detail));
            }
            None => {
                if args.opts.format == Format::Plain && !args.opts.quiet {
                    println!("ok {} {}", tuple_plain(&word), canonical);
                }
            }
        }
    }
    let status = if failures.is_empty() { "passed" } else { "failed" };
    match args.opts.format {
        Format::Json => {
            let record = json!({
                "command": "verify",
                "inputs": {
                    "s_max": args.s_max, "n_max": args.n_max,
                    "n0_max": n0_max, "count": args.count,
                },
                "results": {
                    "words_checked": checked,
                    "failures": failures.iter().map(|(w, d)| json!({"word": w, "detail": d}))
                        .collect::<Vec<_>>(),
                },
                "verification": status,
            });
            println!("{record}");
        }
        Format::Csv => {
            println!("words_checked,failures,status");
            println!("{checked},{},{status}", failures.len());
        }
        Format::Plain => {
            println!(
                "verified {checked} words, {} failure(s): {status}",
                failures.len()
            );
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CmdError::Failure(format!(
            "{} of {checked} words failed oracle cross-check",
            failures.len()
        )))
    }
}

fn cmd_tree(args: &TreeArgs) -> Result<(), CmdError> {
    if args.max_level > TREE_LEVEL_CAP {
        return Err(CmdError::Usage(format!(
            "--max-level must be at most {TREE_LEVEL_CAP}"
        )));
    }
    let levels = build_tree(args.max_level);
    match args.format {
        TreeFormat::Dot => print!("{}", to_dot(&levels)),
        TreeFormat::Json => println!("{}", to_json(&levels)),
        TreeFormat::Stats => {
            for s in level_stats(&levels) {
                let mut line = format!(
                    "level {}: {} nodes, {} = 4 (mod 6)",
                    s.level, s.count, s.four_mod_six
                );
                if s.level >= 2 {
                    let _ = write!(line, ", {} left / {} right", s.left, s.right);
                }
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn cmd_path(args: &PathArgs) -> Result<(), CmdError> {
    if args.level > TREE_LEVEL_CAP {
        return Err(CmdError::Usage(format!(
            "--level must be at most {TREE_LEVEL_CAP}"
        )));
    }
    let levels = build_tree(args.level);
    let path = path_to_root(&levels, args.label, args.level).ok_or_else(|| {
        CmdError::Failure(format!(
            "label {} not found at level {}",
            args.label, args.level
        ))
    })?;
    let letters = lvr_to_word(&path);
    let word = if letters.is_empty() {
        None
    } else {
        Some(parse_word(&letters).expect("edge paths always induce valid words"))
    };
    let compressed = word.as_ref().map(compressed_form).unwrap_or_default();
    let edges: Vec<String> = path.iter().map(|e| e.to_string()).collect();
    match args.opts.format {
        Format::Json => {
            let record = json!({
                "command": "path",
                "inputs": {"label": args.label, "level": args.level},
                "results": {
                    "edges": edges,
                    "word": letters,
                    "compressed": compressed,
                },
                "verification": serde_json::Value::Null,
            });
            println!("{record}");
        }
        Format::Csv => {
            println!("index,edge");
            for (i, e) in edges.iter().enumerate() {
                println!("{i},{e}");
            }
        }
        Format::Plain => {
            if letters.is_empty() {
                println!("(root)");
            } else {
                println!("{} -> {letters} ({compressed})", edges.join(","));
            }
        }
    }
    Ok(())
}

fn cmd_word(args: &WordArgs) -> Result<(), CmdError> {
    let word = parse_word(&args.word)
        .map_err(|e| CmdError::Usage(format!("cannot parse word {:?}: {e}", args.word)))?;
    let canonical = format_word(&word);
    let compressed = compressed_form(&word);
    let counts = word.as_tuple().map(word_counts);
    match args.opts.format {
        Format::Json => {
            let record = json!({
                "command": "word",
                "inputs": {"text": args.word},
                "results": {
                    "canonical": canonical,
                    "compressed": compressed,
                    "tuple": tuple_json(&word),
                    "kind": match &word {
                        Word::Tuple(_) => "tuple",
                        Word::Special(SpecialWord::LoneU) => "lone-u",
                        Word::Special(SpecialWord::PureD(_)) => "pure-down",
                    },
                    "counts": counts.map(|c| json!({
                        "ups": c.ups,
                        "downs": c.downs,
                        "core_downs": c.core_downs,
                        "length": c.length,
                    })),
                },
                "verification": serde_json::Value::Null,
            });
            println!("{record}");
        }
        Format::Csv => {
            println!("canonical,tuple,ups,downs,core_downs,length");
            let (ups, downs, core, len) = counts
                .map(|c| {
                    (
                        c.ups.to_string(),
                        c.downs.to_string(),
                        c.core_downs.to_string(),
                        c.length.to_string(),
                    )
                })
                .unwrap_or_default();
            println!("{canonical},{},{ups},{downs},{core},{len}", tuple_plain(&word));
        }
        Format::Plain => {
            print!(
                "canonical={canonical} compressed={compressed:?} tuple={}",
                tuple_plain(&word)
            );
            match counts {
                Some(c) => println!(
                    " ups={} downs={} core_downs={} length={}",
                    c.ups, c.downs, c.core_downs, c.length
                ),
                None => println!(),
            }
        }
    }
    Ok(())
}
