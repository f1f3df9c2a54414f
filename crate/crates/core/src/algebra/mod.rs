//! Line embeddings `(T_i, T_j, T_k)`: the embedding criterion and its
//! constructive witness, elementary involutions, reduction to reduced
//! triples, and the remnant of a coprime pair.

mod involution;
mod reduce;
mod semigroup;
mod witness;

pub use involution::{apply_involutions, chebyshev_parametrization, Involution, InvolutionForm, Parametrization, Separable};
pub use reduce::{is_reduced, rectify, rectify_trivial, reduce_triple, ReductionTrace, TraceEntry};
pub use semigroup::{ext_gcd, frobenius, in_semigroup, is_embedding, pgcd, remnant, semigroup_member};
pub use witness::{embedding_witness, witness_unchecked, Slot, Witness, MAX_WITNESS_DEGREE};

use std::fmt;

use serde::{Deserialize, Serialize};

/// An ordered triple of positive degrees `(i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u64; 3]", try_from = "[u64; 3]")]
pub struct Triple {
    pub i: u64,
    pub j: u64,
    pub k: u64,
}

impl Triple {
    /// # Panics
    /// If any component is zero.
    pub fn new(i: u64, j: u64, k: u64) -> Self {
        Self::try_new(i, j, k).expect("triple components must be positive")
    }

    pub fn try_new(i: u64, j: u64, k: u64) -> Option<Self> {
        (i > 0 && j > 0 && k > 0).then_some(Triple { i, j, k })
    }

    pub fn as_array(self) -> [u64; 3] {
        [self.i, self.j, self.k]
    }

    pub fn from_array([i, j, k]: [u64; 3]) -> Self {
        Triple::new(i, j, k)
    }

    pub fn total_degree(self) -> u64 {
        self.i + self.j + self.k
    }

    pub fn contains_one(self) -> bool {
        self.as_array().contains(&1)
    }

    pub fn sorted(self) -> Self {
        let mut a = self.as_array();
        a.sort_unstable();
        Triple::from_array(a)
    }
}

impl From<Triple> for [u64; 3] {
    fn from(t: Triple) -> Self {
        t.as_array()
    }
}

impl TryFrom<[u64; 3]> for Triple {
    type Error = String;
    fn try_from([i, j, k]: [u64; 3]) -> Result<Self, Self::Error> {
        Triple::try_new(i, j, k).ok_or_else(|| format!("non-positive component in ({i},{j},{k})"))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}
