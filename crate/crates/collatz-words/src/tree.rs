//! Level-by-level construction of the Collatz tree: the preimage tree rooted
//! at 8, where a node `n = 4 (mod 6)` has the two children `(n-1)/3` (edge L)
//! and `2n` (edge R) and every other node has the single child `2n` (edge V).
//!
//! Levels are materialized eagerly and deterministically: children inherit
//! their parent's position, with an L child placed before its R sibling.

use std::collections::HashSet;
use std::fmt;

use crate::words::Letter;

/// Edge label from a node to its parent: left preimage, vertical doubling in
/// place, or right doubling at a bifurcation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    L,
    V,
    R,
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeLabel::L => "L",
            EdgeLabel::V => "V",
            EdgeLabel::R => "R",
        })
    }
}

/// One tree node. The root (label 8, level 0) has no parent data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub label: u64,
    pub level: u32,
    pub parent_edge: Option<EdgeLabel>,
    /// Position of the parent within the previous level's node list.
    pub parent_index: Option<usize>,
}

/// All nodes of one level, in deterministic sibling order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLevel {
    pub level: u32,
    pub nodes: Vec<TreeNode>,
}

/// Per-level statistics. The left/right split is by descent from the level-2
/// nodes 5 (left) and 32 (right); levels 0 and 1 report zero for both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelStats {
    pub level: u32,
    pub count: usize,
    pub four_mod_six: usize,
    pub left: usize,
    pub right: usize,
}

// The children of a label, in L-before-R order. Node 4 would close the
// trivial cycle with an L child and never receives one; with root 8 the label
// 4 does not occur at all.
fn children(label: u64) -> Vec<(u64, EdgeLabel)> {
    let doubled = label
        .checked_mul(2)
        .expect("tree label exceeds u64; build fewer levels");
    if label % 6 == 4 && label != 4 {
        vec![((label - 1) / 3, EdgeLabel::L), (doubled, EdgeLabel::R)]
    } else {
        vec![(doubled, EdgeLabel::V)]
    }
}

/// Builds levels `0..=max_level`, completely and deterministically.
pub fn build_tree(max_level: u32) -> Vec<TreeLevel> {
    let root = TreeNode {
        label: 8,
        level: 0,
        parent_edge: None,
        parent_index: None,
    };
    let mut levels = vec![TreeLevel {
        level: 0,
        nodes: vec![root],
    }];
    for level in 1..=max_level {
        let prev = &levels[level as usize - 1];
        let mut nodes = Vec::with_capacity(prev.nodes.len() * 2);
        for (parent_index, parent) in prev.nodes.iter().enumerate() {
            for (label, edge) in children(parent.label) {
                nodes.push(TreeNode {
                    label,
                    level,
                    parent_edge: Some(edge),
                    parent_index: Some(parent_index),
                });
            }
        }
        levels.push(TreeLevel { level, nodes });
    }
    levels
}

/// Per-level counts and the left/right split of the built levels.
pub fn level_stats(levels: &[TreeLevel]) -> Vec<LevelStats> {
    let mut stats = Vec::with_capacity(levels.len());
    let mut sides: Vec<Vec<Option<bool>>> = Vec::with_capacity(levels.len()); // true = left
    for (l, level) in levels.iter().enumerate() {
        let mut level_sides = Vec::with_capacity(level.nodes.len());
        for node in &level.nodes {
            let side = match l {
                0 | 1 => None,
                2 => Some(node.label == 5),
                _ => sides[l - 1][node.parent_index.expect("non-root has a parent")],
            };
            level_sides.push(side);
        }
        let left = level_sides.iter().filter(|s| **s == Some(true)).count();
        let right = level_sides.iter().filter(|s| **s == Some(false)).count();
        stats.push(LevelStats {
            level: level.level,
            count: level.nodes.len(),
            four_mod_six: level.nodes.iter().filter(|n| n.label % 6 == 4).count(),
            left,
            right,
        });
        sides.push(level_sides);
    }
    stats
}

/// Edge labels read from the node with the given label at `level` upward to
/// the root. `None` if no node at that level carries the label.
pub fn path_to_root(levels: &[TreeLevel], label: u64, level: u32) -> Option<Vec<EdgeLabel>> {
    let nodes = &levels.get(level as usize)?.nodes;
    let mut index = nodes.iter().position(|n| n.label == label)?;
    let mut path = Vec::with_capacity(level as usize);
    for l in (1..=level as usize).rev() {
        let node = &levels[l].nodes[index];
        path.push(node.parent_edge.expect("non-root has an edge"));
        index = node.parent_index.expect("non-root has a parent");
    }
    Some(path)
}

/// Letterwise image of an edge path under `L -> u`, `V, R -> d`. The result
/// is a valid word string (the map is not one to one: V and R collapse).
pub fn lvr_to_word(path: &[EdgeLabel]) -> String {
    path.iter()
        .map(|e| match e {
            EdgeLabel::L => 'u',
            EdgeLabel::V | EdgeLabel::R => 'd',
        })
        .collect()
}

/// Same image as [`lvr_to_word`], as letters.
pub fn lvr_to_letters(path: &[EdgeLabel]) -> Vec<Letter> {
    path.iter()
        .map(|e| match e {
            EdgeLabel::L => Letter::U,
            EdgeLabel::V | EdgeLabel::R => Letter::D,
        })
        .collect()
}

/// DOT digraph of the built levels: node names are labels, edges run parent
/// to child and carry their L/V/R label.
pub fn to_dot(levels: &[TreeLevel]) -> String {
    let mut out = String::from("digraph collatz_tree {\n");
    for level in levels.iter().skip(1) {
        let parents = &levels[level.level as usize - 1];
        for node in &level.nodes {
            let parent = &parents.nodes[node.parent_index.expect("non-root")];
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                parent.label,
                node.label,
                node.parent_edge.expect("non-root")
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// JSON export: an array of levels, each an array of `{label, parent_edge}`.
pub fn to_json(levels: &[TreeLevel]) -> serde_json::Value {
    serde_json::Value::Array(
        levels
            .iter()
            .map(|level| {
                serde_json::Value::Array(
                    level
                        .nodes
                        .iter()
                        .map(|n| {
                            serde_json::json!({
                                "label": n.label,
                                "parent_edge": n.parent_edge.map(|e| e.to_string()),
                            })
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

/// True when no label occurs twice anywhere in the built levels.
pub fn all_labels_distinct(levels: &[TreeLevel]) -> bool {
    let mut seen = HashSet::new();
    levels
        .iter()
        .flat_map(|l| l.nodes.iter())
        .all(|n| seen.insert(n.label))
}
