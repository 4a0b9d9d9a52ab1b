//! Counting on twist classes: embeddings with the per-edge side swap
//! `x ↔ αx` factored out.
//!
//! A twist class is a pair `(ρ, λ)` of unsigned local cyclic orders and edge
//! twists, taken modulo vertex flips (flipping `v` reverses `ρ_v` and toggles
//! `λ` on the edges at `v`). The flips act freely, so there are
//! `2^{E−n}(n−2)!^n` classes. Orientable classes are those with
//! `λ = δS` for some vertex set `S`.
//!
//! `g` fixes a class iff `g·(ρ, λ) = flip_T(ρ, λ)` for a (unique) `T`. For a
//! fixed `T` the rotations along each vertex orbit `O` of length `ℓ` are
//! determined by the one at its least vertex `v`, which must satisfy
//! `g^ℓ ρ_v = ρ_v` when `|T ∩ O|` is even and `g^ℓ ρ_v = ρ_v⁻¹` otherwise;
//! the twists along each edge orbit are determined by one value, subject to
//! `δT` summing to zero around the orbit. Summing over `T` counts every fixed
//! class `2^n` times.

use num_bigint::BigUint;
use num_traits::Zero;

use super::code::next_permutation;
use super::SurfaceKind;
use crate::perm::Permutation;

/// Cyclic orders of the neighbours of `v` fixed, and reversed, by `h`
/// (a permutation fixing `v`).
fn rotation_counts(n: usize, v: usize, h: &Permutation) -> [u64; 2] {
    let mut others: Vec<usize> = (0..n).filter(|&j| j != v).collect();
    let first = others.remove(0);
    let mut counts = [0u64; 2];
    let mut rest = others.clone();
    let canon = |cyc: Vec<usize>| -> Vec<usize> {
        let pos = cyc.iter().enumerate().min_by_key(|(_, &x)| x).map_or(0, |(p, _)| p);
        let mut c = cyc;
        c.rotate_left(pos);
        c
    };
    loop {
        let mut rho = vec![first];
        rho.extend_from_slice(&rest);
        let image = canon(rho.iter().map(|&j| h.apply(j)).collect());
        if image == rho {
            counts[0] += 1;
        }
        let mut rev = rho.clone();
        rev.reverse();
        if image == canon(rev) {
            counts[1] += 1;
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    counts
}

fn permute_mask(g: &Permutation, s: usize) -> usize {
    (0..g.len()).filter(|&v| s >> v & 1 == 1).fold(0, |acc, v| acc | 1 << g.apply(v))
}

/// Twist classes of the given kind fixed by `g`. The mirror acts trivially on
/// twist classes, so there is no reversing flag.
pub fn twist_class_fixed_count(n: usize, g: &Permutation, kind: SurfaceKind) -> BigUint {
    assert_eq!(g.len(), n, "vertex permutation has the wrong degree");
    assert!((3..usize::BITS as usize / 2).contains(&n), "twist-class counting supports 3 <= n < 32");
    if kind == SurfaceKind::NonOrientable {
        return twist_class_fixed_count(n, g, SurfaceKind::LocallyOrientable)
            - twist_class_fixed_count(n, g, SurfaceKind::Orientable);
    }

    let vertex_orbits = g.cycles();
    let orbit_masks: Vec<usize> = vertex_orbits
        .iter()
        .map(|o| o.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    let r: Vec<[u64; 2]> = vertex_orbits
        .iter()
        .map(|o| rotation_counts(n, o[0], &g.pow(o.len() as i64)))
        .collect();

    let mut edge_seen = vec![vec![false; n]; n];
    let mut edge_orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if edge_seen[a][b] {
                continue;
            }
            let mut orbit = Vec::new();
            let (mut x, mut y) = (a, b);
            while !edge_seen[x.min(y)][x.max(y)] {
                edge_seen[x.min(y)][x.max(y)] = true;
                orbit.push((x, y));
                (x, y) = (g.apply(x), g.apply(y));
            }
            edge_orbits.push(orbit);
        }
    }

    let full = (1usize << n) - 1;
    let switch_hits: Vec<u32> = if kind == SurfaceKind::Orientable {
        let mut cnt = vec![0u32; 1 << n];
        for s in 0..=full {
            cnt[permute_mask(g, s) ^ s] += 1;
        }
        cnt
    } else {
        Vec::new()
    };

    let mut total = BigUint::zero();
    for t in 0..=full {
        let mut prod = BigUint::from(1u32);
        for (mask, counts) in orbit_masks.iter().zip(&r) {
            let parity = (t & mask).count_ones() as usize & 1;
            prod *= counts[parity];
        }
        if prod.is_zero() {
            continue;
        }
        let edge_factor = match kind {
            SurfaceKind::Orientable => {
                BigUint::from((switch_hits[t] + switch_hits[full ^ t]) / 2)
            }
            _ => {
                let balanced = edge_orbits.iter().all(|orbit| {
                    orbit
                        .iter()
                        .map(|&(x, y)| ((t >> x) ^ (t >> y)) & 1)
                        .sum::<usize>()
                        % 2
                        == 0
                });
                if balanced {
                    BigUint::from(1u32) << edge_orbits.len()
                } else {
                    BigUint::zero()
                }
            }
        };
        total += prod * edge_factor;
    }
    let denom = BigUint::from(1u32) << n;
    debug_assert!((&total % &denom).is_zero());
    total / denom
}

/// Size of the twist-class carrier of the given kind.
pub fn twist_class_count(n: usize, kind: SurfaceKind) -> BigUint {
    twist_class_fixed_count(n, &Permutation::identity(n), kind)
}
