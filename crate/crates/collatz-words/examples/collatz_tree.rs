//! Build the Collatz tree (the preimage tree rooted at 8), inspect its
//! levels, extract edge paths, and export DOT.
//!
//!     cargo run --example collatz_tree

use collatz_words::tree::{build_tree, level_stats, lvr_to_word, path_to_root, to_dot};
use collatz_words::words::parse_word;

fn main() {
    let levels = build_tree(13);
    for level in &levels[..5] {
        let labels: Vec<String> = level.nodes.iter().map(|n| n.label.to_string()).collect();
        println!("level {}: [{}]", level.level, labels.join(", "));
    }

    println!();
    for s in level_stats(&levels) {
        if s.level >= 2 {
            println!(
                "level {:2}: {:2} nodes, {} = 4 (mod 6), split {} / {}",
                s.level, s.count, s.four_mod_six, s.left, s.right
            );
        }
    }

    // reading edges upward from 40 at level 5 gives a word that 40 realizes
    let path = path_to_root(&levels, 40, 5).unwrap();
    let edges: Vec<String> = path.iter().map(|e| e.to_string()).collect();
    let letters = lvr_to_word(&path);
    let word = parse_word(&letters).unwrap();
    println!("\npath from 40 at level 5: {} -> {letters} = {word}", edges.join(","));

    println!("\nDOT of the first three levels:\n{}", to_dot(&build_tree(3)));
}
