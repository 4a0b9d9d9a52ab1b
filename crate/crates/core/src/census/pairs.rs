//! Pair permutations `(x₁ … x_m)(αx_m … αx₁)` and their stabilisers.
//!
//! The ground set has `2m` points: `x_i` is `2i` and `αx_i` is `2i + 1`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::CensusError;
use crate::complete::next_permutation;
use crate::perm::{conjugacy_class_size, euler_phi, factorial, CycleType, Permutation};

/// A cyclic order of `0..m`, read as the pair permutation it spans.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairPermutation {
    pub cycle: Vec<usize>,
}

impl PairPermutation {
    pub fn to_permutation(&self) -> Permutation {
        let m = self.cycle.len();
        let fwd: Vec<usize> = self.cycle.iter().map(|&x| 2 * x).collect();
        let back: Vec<usize> = self.cycle.iter().rev().map(|&x| 2 * x + 1).collect();
        Permutation::from_cycles(&[fwd, back], 2 * m).expect("disjoint cycles")
    }
}

/// `2φ(k)(m−1)!/|E|` where `E` is the class of type `[k^{m/k}]` in `S_m`.
pub fn stable_pair_permutation_count(m: usize, k: usize) -> Result<BigUint, CensusError> {
    if k == 0 || m == 0 || m % k != 0 {
        return Err(CensusError::NotDivisor { k, n: m });
    }
    let num = BigUint::from(2 * euler_phi(k as u64)) * factorial(m - 1);
    let (q, r) = num.div_rem(&conjugacy_class_size(&CycleType::uniform(k, m / k)));
    if !r.is_zero() {
        return Err(CensusError::NonIntegral {
            what: format!("stable pair permutation count for m = {m}, k = {k}"),
        });
    }
    Ok(q)
}

/// Exhaustive counts for one `g` of type `[k^{m/k}]` extended to the `2m`
/// points so that it commutes with `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPermutationCheck {
    pub m: usize,
    pub k: usize,
    pub formula: BigUint,
    /// `C^g = C`.
    pub g_only: u64,
    /// `C^{gα} = C`.
    pub g_alpha_only: u64,
    pub both: u64,
    pub union: u64,
    pub sum: u64,
    /// The implemented reading: every `g`-stable pair permutation counted
    /// once for `g` and once for its `α` companion.
    pub implemented: u64,
}

impl PairPermutationCheck {
    pub fn agrees(&self) -> bool {
        BigUint::from(self.implemented) == self.formula
    }
}

pub fn pair_permutation_check(m: usize, k: usize) -> Result<PairPermutationCheck, CensusError> {
    let formula = stable_pair_permutation_count(m, k)?;
    let g = CycleType::uniform(k, m / k).representative();
    let lifted = Permutation::from_images((0..2 * m).map(|x| 2 * g.apply(x / 2) + x % 2).collect())
        .expect("lift of a permutation");
    let alpha = Permutation::from_images((0..2 * m).map(|x| x ^ 1).collect()).expect("involution");
    let g_alpha = lifted.compose(&alpha);
    let (mut g_only, mut g_alpha_only, mut both) = (0u64, 0u64, 0u64);
    let mut rest: Vec<usize> = (1..m).collect();
    loop {
        let mut cycle = vec![0];
        cycle.extend_from_slice(&rest);
        let c = PairPermutation { cycle }.to_permutation();
        let by_g = c.conjugate_by(&lifted) == c;
        let by_ga = c.conjugate_by(&g_alpha) == c;
        g_only += by_g as u64;
        g_alpha_only += by_ga as u64;
        both += (by_g && by_ga) as u64;
        if !next_permutation(&mut rest) {
            break;
        }
    }
    Ok(PairPermutationCheck {
        m,
        k,
        formula,
        g_only,
        g_alpha_only,
        both,
        union: g_only + g_alpha_only - both,
        sum: g_only + g_alpha_only,
        implemented: 2 * g_only,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let v: Vec<u64> = [(4, 2), (4, 4), (6, 2), (6, 3), (6, 6), (4, 1)]
            .iter()
            .map(|&(m, k)| stable_pair_permutation_count(m, k).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(v, [4, 4, 16, 12, 4, 12]);
        assert!(stable_pair_permutation_count(6, 4).is_err());
    }

    #[test]
    fn readings_at_four_two() {
        let c = pair_permutation_check(4, 2).unwrap();
        assert_eq!((c.g_only, c.g_alpha_only, c.union, c.sum), (2, 4, 6, 6));
        assert!(c.agrees());
    }

    #[test]
    fn implemented_reading_on_the_five_cases() {
        for (m, k) in [(4, 2), (4, 4), (6, 2), (6, 3), (6, 6)] {
            assert!(pair_permutation_check(m, k).unwrap().agrees(), "({m},{k})");
        }
    }

    #[test]
    fn pair_permutation_is_alpha_reversed() {
        let p = PairPermutation { cycle: vec![0, 2, 1] }.to_permutation();
        let alpha = Permutation::from_images((0..6).map(|x| x ^ 1).collect()).unwrap();
        assert_eq!(p.conjugate_by(&alpha), p.inverse());
    }
}
