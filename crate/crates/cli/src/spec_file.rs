//! Twist specification files.
//!
//! Either one matching per level, used for both children at every level:
//!
//! ```json
//! {"levels": [[0], [1, 0], [0, 1, 2, 3]]}
//! ```
//!
//! or an explicit tree, where `"leaf"` is the one-vertex graph:
//!
//! ```json
//! {"tree": {"left": "leaf", "right": "leaf", "matching": [0]}}
//! ```
//!
//! `levels[m - 1]` (and the matching of a node of dimension `m`) maps each
//! right-child vertex id below `2^(m-1)` to the left-child vertex it joins.

use serde::Deserialize;
use twistcube_core::TwistSpec;

use crate::error::FormatError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    levels: Option<Vec<Vec<usize>>>,
    tree: Option<TreeNode>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum LeafTag {
    Leaf,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TreeNode {
    Leaf(LeafTag),
    Node {
        left: Box<TreeNode>,
        right: Box<TreeNode>,
        matching: Vec<usize>,
    },
}

impl From<TreeNode> for TwistSpec {
    fn from(node: TreeNode) -> Self {
        match node {
            TreeNode::Leaf(_) => TwistSpec::Leaf,
            TreeNode::Node {
                left,
                right,
                matching,
            } => TwistSpec::Node {
                left: Box::new((*left).into()),
                right: Box::new((*right).into()),
                matching,
            },
        }
    }
}

/// Parses and validates a specification.
pub fn parse_spec(text: &str) -> Result<TwistSpec, FormatError> {
    let file: SpecFile = serde_json::from_str(text)?;
    let spec = match (file.levels, file.tree) {
        (Some(levels), None) => TwistSpec::uniform(levels),
        (None, Some(tree)) => tree.into(),
        _ => {
            return Err(FormatError::at(
                "$",
                "expected exactly one of \"levels\" or \"tree\"",
            ))
        }
    };
    spec.validate()
        .map_err(|e| FormatError::at("$", e.to_string()))?;
    Ok(spec)
}
