//! Embeddings of the complete graph `K_n` in the quadricell model.
//!
//! Vertices are `0..n` internally and `1..=n` in text. The flag `i^{j±}`
//! (vertex `i`, towards `j`, sign `±`) has index `2·dart(i, j) + sign`, where
//! `dart(i, j) = i(n−1) + (j if j < i else j−1)`. `α` flips the sign and
//! `β(i^{j s}) = j^{i, −s}`.

mod action;
mod classes;
mod code;
mod fixed;
mod twist;
mod witness;

pub use action::{is_stable, lift, LiftedAction};
pub use classes::admissible_classes;
pub use code::{
    decode, embedding_count, enumerate_embeddings, enumerate_embeddings_from, local_rotations, parse_code,
    rotation_text, EmbeddingCode, Embeddings, LocalRotation,
};
pub(crate) use code::next_permutation;
pub use fixed::{fixed_codes, fixed_maps_count, find_fixed_code, FixedCodes};
pub use twist::{twist_class_count, twist_class_fixed_count};
pub use witness::{witness_map, witness_map_with_budget, Witness, WitnessError, WitnessSource, DEFAULT_SEARCH_BUDGET};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CodeError;
use crate::map::FlagSet;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn flipped_if(self, cond: bool) -> Sign {
        if cond {
            self.flip()
        } else {
            self
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which embeddings a count ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SurfaceKind {
    Orientable,
    NonOrientable,
    LocallyOrientable,
}

impl SurfaceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SurfaceKind::Orientable => "orientable",
            SurfaceKind::NonOrientable => "non-orientable",
            SurfaceKind::LocallyOrientable => "locally-orientable",
        }
    }

    pub fn admits(self, orientable: bool) -> bool {
        match self {
            SurfaceKind::Orientable => orientable,
            SurfaceKind::NonOrientable => !orientable,
            SurfaceKind::LocallyOrientable => true,
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SurfaceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "orientable" | "o" => Ok(SurfaceKind::Orientable),
            "non-orientable" | "n" => Ok(SurfaceKind::NonOrientable),
            "locally-orientable" | "l" => Ok(SurfaceKind::LocallyOrientable),
            _ => Err(format!("unknown surface kind {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteFlagUniverse {
    n: usize,
    flags: FlagSet,
}

pub fn universe(n: usize) -> Result<CompleteFlagUniverse, CodeError> {
    CompleteFlagUniverse::new(n)
}

impl CompleteFlagUniverse {
    pub fn new(n: usize) -> Result<Self, CodeError> {
        if n < 3 {
            return Err(CodeError::TooSmall(n));
        }
        let size = 2 * n * (n - 1);
        let mut alpha = vec![0; size];
        let mut beta = vec![0; size];
        for f in 0..size {
            let (i, j, s) = decompose(n, f);
            alpha[f] = f ^ 1;
            beta[f] = flag_index(n, j, i, s.flip());
        }
        let flags = FlagSet::new(
            Permutation::from_images_unchecked(alpha),
            Permutation::from_images_unchecked(beta),
        )
        .expect("complete-graph involutions are valid");
        Ok(CompleteFlagUniverse { n, flags })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn flags(&self) -> &FlagSet {
        &self.flags
    }

    pub fn alpha(&self) -> &Permutation {
        self.flags.alpha()
    }

    pub fn beta(&self) -> &Permutation {
        self.flags.beta()
    }

    /// Index of `i^{j s}` (0-based vertices).
    pub fn flag(&self, i: usize, j: usize, s: Sign) -> usize {
        assert!(i < self.n && j < self.n && i != j);
        flag_index(self.n, i, j, s)
    }

    pub fn decompose(&self, f: usize) -> (usize, usize, Sign) {
        decompose(self.n, f)
    }

    /// `i^{j±}` with 1-based vertices, for messages.
    pub fn flag_name(&self, f: usize) -> String {
        let (i, j, s) = self.decompose(f);
        format!("{}^{}{}", i + 1, j + 1, s.as_char())
    }
}

#[inline]
pub(crate) fn dart_index(n: usize, i: usize, j: usize) -> usize {
    i * (n - 1) + if j < i { j } else { j - 1 }
}

#[inline]
pub(crate) fn flag_index(n: usize, i: usize, j: usize, s: Sign) -> usize {
    2 * dart_index(n, i, j) + s.bit()
}

#[inline]
pub(crate) fn decompose(n: usize, f: usize) -> (usize, usize, Sign) {
    let d = f / 2;
    let i = d / (n - 1);
    let r = d % (n - 1);
    let j = if r < i { r } else { r + 1 };
    let s = if f & 1 == 0 { Sign::Plus } else { Sign::Minus };
    (i, j, s)
}

/// Index of the edge `{i, j}` among the `n(n−1)/2` edges, lexicographic.
#[inline]
pub(crate) fn edge_index(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}
