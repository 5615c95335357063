use serde::{Deserialize, Serialize};

use crate::config::Configuration;
use crate::error::Result;
use crate::graph::Graph;
use crate::rules::{ComponentMove, ReconfSequence, Rule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

/// Why a solver answered `No` or `Unknown`.
pub mod reason {
    pub const MULTISET_MISMATCH: &str = "multiset-mismatch";
    pub const PROFILE_MISMATCH: &str = "profile-mismatch";
    pub const INSUFFICIENT_BUFFER: &str = "insufficient-buffer";
    pub const SEPARATE_CO_COMPONENTS: &str = "separate-co-components";
    pub const NOT_A_FOREST: &str = "cc-piran-not-a-forest";
    pub const UNREACHABLE: &str = "unreachable";
}

/// A solver verdict. On `Yes`, `moves` transforms the source into the
/// target one token at a time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub answer: Answer,
    pub reason: Option<&'static str>,
    pub moves: Vec<ComponentMove>,
}

impl Solution {
    pub fn yes(moves: Vec<ComponentMove>) -> Self {
        Solution {
            answer: Answer::Yes,
            reason: None,
            moves,
        }
    }

    pub fn no(reason: &'static str) -> Self {
        Solution {
            answer: Answer::No,
            reason: Some(reason),
            moves: Vec::new(),
        }
    }

    pub fn unknown(reason: &'static str) -> Self {
        Solution {
            answer: Answer::Unknown,
            reason: Some(reason),
            moves: Vec::new(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    /// Materializes the configurations visited, starting from `start`.
    pub fn sequence(
        &self,
        g: &Graph,
        rule: Rule,
        start: &[usize],
    ) -> Result<Option<ReconfSequence>> {
        if !self.is_yes() {
            return Ok(None);
        }
        let start = Configuration::new(g, start.iter().copied())?;
        ReconfSequence::from_moves(g, rule, &start, &self.moves).map(Some)
    }
}
