use num_bigint::BigUint;
use num_traits::One;

use super::action::transform_local;
use super::code::{decode, local_rotations, EmbeddingCode, LocalRotation};
use super::{edge_index, Sign, SurfaceKind};
use crate::error::BudgetExceeded;
use crate::map::surface_of;
use crate::perm::Permutation;

/// The admissible rotations along one `g`-orbit of vertices: each solution
/// lists the rotation of every member, in orbit order.
struct OrbitSolutions {
    members: Vec<usize>,
    solutions: Vec<Vec<LocalRotation>>,
}

/// For each orbit, try every rotation at its least vertex, push it around the
/// orbit with the lifted action and keep it if it comes back unchanged.
fn orbit_solutions(
    n: usize,
    g: &Permutation,
    reversing: bool,
    kind: SurfaceKind,
    twist: Option<&[bool]>,
) -> Vec<OrbitSolutions> {
    assert_eq!(g.len(), n, "vertex permutation has the wrong degree");
    let carrier = if kind == SurfaceKind::Orientable {
        SurfaceKind::Orientable
    } else {
        SurfaceKind::LocallyOrientable
    };
    let tw = twist.map(|t| move |a: usize, b: usize| t[edge_index(n, a, b)]);
    let tw_ref: Option<&dyn Fn(usize, usize) -> bool> = tw.as_ref().map(|f| f as &dyn Fn(usize, usize) -> bool);
    g.cycles()
        .into_iter()
        .map(|members| {
            let rep = members[0];
            let solutions = local_rotations(n, rep, carrier)
                .into_iter()
                .filter_map(|rot| {
                    let mut seq = Vec::with_capacity(members.len());
                    let mut cur = rot.clone();
                    for &v in &members {
                        let next = transform_local(&cur, v, g, reversing, tw_ref);
                        seq.push(std::mem::replace(&mut cur, next));
                    }
                    (cur == rot).then_some(seq)
                })
                .collect();
            OrbitSolutions { members, solutions }
        })
        .collect()
}

fn product_count(orbits: &[OrbitSolutions]) -> BigUint {
    orbits
        .iter()
        .fold(BigUint::one(), |acc, o| acc * BigUint::from(o.solutions.len()))
}

/// Number of codes fixed by the lifted action of `g` (composed with `α` when
/// `reversing`). `Orientable` counts all-`+` codes, `LocallyOrientable` the
/// whole signed carrier, `NonOrientable` the signed codes whose map is
/// non-orientable.
pub fn fixed_maps_count(n: usize, g: &Permutation, reversing: bool, kind: SurfaceKind) -> BigUint {
    match kind {
        SurfaceKind::Orientable | SurfaceKind::LocallyOrientable => {
            product_count(&orbit_solutions(n, g, reversing, kind, None))
        }
        SurfaceKind::NonOrientable if n <= MAX_TWIST_TRANSFORM => {
            let orbits = orbit_solutions(n, g, reversing, SurfaceKind::LocallyOrientable, None);
            BigUint::from(non_orientable_count(n, &orbits))
        }
        SurfaceKind::NonOrientable => BigUint::from(non_orientable_by_decoding(n, g, reversing)),
    }
}

fn non_orientable_by_decoding(n: usize, g: &Permutation, reversing: bool) -> usize {
    fixed_codes(n, g, reversing, SurfaceKind::LocallyOrientable)
        .filter(|c| !surface_of(&decode(c)).expect("valid map").orientable)
        .count()
}

/// Largest order for which the twist distribution fits a dense table.
const MAX_TWIST_TRANSFORM: usize = 7;

/// Edges whose two darts carry different signs, contributed by one orbit
/// solution. A code's map is orientable iff the XOR of these over all
/// vertices is `δS` for a vertex set `S`.
fn twist_mask(n: usize, members: &[usize], solution: &[LocalRotation]) -> usize {
    let mut mask = 0;
    for (&v, rot) in members.iter().zip(solution) {
        for &(j, sign) in rot {
            if sign == Sign::Minus {
                mask ^= 1 << edge_index(n, v, j);
            }
        }
    }
    mask
}

fn walsh_hadamard(a: &mut [i128]) {
    let mut h = 1;
    while h < a.len() {
        for i in (0..a.len()).step_by(2 * h) {
            for j in i..i + h {
                let (x, y) = (a[j], a[j + h]);
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
        h *= 2;
    }
}

/// Fixed codes with a non-coboundary twist: the XOR convolution of the
/// per-orbit twist distributions, read off outside the coboundaries.
fn non_orientable_count(n: usize, orbits: &[OrbitSolutions]) -> u128 {
    let e = n * (n - 1) / 2;
    let size = 1usize << e;
    let mut acc = vec![0i128; size];
    acc[0] = 1;
    walsh_hadamard(&mut acc);
    for o in orbits {
        let mut dist = vec![0i128; size];
        for sol in &o.solutions {
            dist[twist_mask(n, &o.members, sol)] += 1;
        }
        walsh_hadamard(&mut dist);
        for (a, d) in acc.iter_mut().zip(&dist) {
            *a *= d;
        }
    }
    walsh_hadamard(&mut acc);
    let total: i128 = acc.iter().sum::<i128>() >> e;
    let mut orientable = 0i128;
    for s in 0..1usize << (n - 1) {
        let mut delta = 0;
        for a in 0..n {
            for b in a + 1..n {
                if (s >> a ^ s >> b) & 1 == 1 {
                    delta |= 1 << edge_index(n, a, b);
                }
            }
        }
        orientable += acc[delta] >> e;
    }
    (total - orientable) as u128
}

#[cfg(test)]
/// Fixed count for `s ∘ lift(g)` where `s` swaps the two sides of every edge
/// flagged in `twist` (indexed as in `edge_index`).
pub(crate) fn fixed_maps_count_twisted(n: usize, g: &Permutation, reversing: bool, twist: &[bool]) -> BigUint {
    product_count(&orbit_solutions(n, g, reversing, SurfaceKind::LocallyOrientable, Some(twist)))
}

/// Streams the fixed codes: the product of the per-orbit solutions, last
/// orbit fastest. `NonOrientable` streams the signed carrier unfiltered.
pub fn fixed_codes(n: usize, g: &Permutation, reversing: bool, kind: SurfaceKind) -> FixedCodes {
    let orbits = orbit_solutions(n, g, reversing, kind, None);
    let done = orbits.iter().any(|o| o.solutions.is_empty());
    FixedCodes {
        n,
        counter: vec![0; orbits.len()],
        orbits,
        done,
    }
}

pub struct FixedCodes {
    n: usize,
    orbits: Vec<OrbitSolutions>,
    counter: Vec<usize>,
    done: bool,
}

impl FixedCodes {
    pub fn total(&self) -> BigUint {
        product_count(&self.orbits)
    }
}

impl Iterator for FixedCodes {
    type Item = EmbeddingCode;

    fn next(&mut self) -> Option<EmbeddingCode> {
        if self.done {
            return None;
        }
        let mut rotations = vec![Vec::new(); self.n];
        for (o, &k) in self.orbits.iter().zip(&self.counter) {
            for (&v, rot) in o.members.iter().zip(&o.solutions[k]) {
                rotations[v] = rot.clone();
            }
        }
        let mut i = self.orbits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counter[i] += 1;
            if self.counter[i] < self.orbits[i].solutions.len() {
                break;
            }
            self.counter[i] = 0;
        }
        Some(EmbeddingCode::from_parts_unchecked(self.n, rotations))
    }
}

/// First fixed code (in stream order) whose map has the requested kind,
/// searching the signed carrier. At most `budget` codes are decoded.
pub fn find_fixed_code(
    n: usize,
    g: &Permutation,
    reversing: bool,
    kind: SurfaceKind,
    budget: u64,
) -> Result<Option<EmbeddingCode>, BudgetExceeded> {
    for (examined, code) in (0u64..).zip(fixed_codes(n, g, reversing, SurfaceKind::LocallyOrientable)) {
        if examined == budget {
            return Err(BudgetExceeded { examined });
        }
        let orientable = surface_of(&decode(&code)).expect("valid map").orientable;
        if kind.admits(orientable) {
            return Ok(Some(code));
        }
    }
    Ok(None)
}
