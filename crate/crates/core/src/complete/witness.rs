use std::fmt;

use thiserror::Error;

use super::action::transform_local;
use super::code::{decode, EmbeddingCode, LocalRotation};
use super::fixed::find_fixed_code;
use super::{LiftedAction, Sign, SurfaceKind};
use crate::error::{BudgetExceeded, CodeError};
use crate::map::{surface_of, Map, SurfaceType};
use crate::perm::{CycleType, Permutation};

/// Fixed codes examined by the fallback search before giving up.
pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessSource {
    /// One of the explicit orientable constructions `M1`..`M4`.
    Construction(&'static str),
    /// A construction with the signs of a `g`-invariant set of darts toggled.
    SignToggle(&'static str),
    /// Found by walking the fixed codes.
    Search,
}

impl fmt::Display for WitnessSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessSource::Construction(name) => write!(f, "construction {name}"),
            WitnessSource::SignToggle(name) => write!(f, "construction {name} with toggled signs"),
            WitnessSource::Search => write!(f, "search"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub code: EmbeddingCode,
    pub map: Map,
    pub action: LiftedAction,
    pub surface: SurfaceType,
    pub source: WitnessSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("cycle type {class} does not partition {n}")]
    WrongDegree { n: usize, class: CycleType },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("no {kind} embedding of K_{n} is stable under {class}{}", if *.reversing { " composed with α" } else { "" })]
    NotFound {
        n: usize,
        class: CycleType,
        reversing: bool,
        kind: SurfaceKind,
    },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// An embedding of `K_n` of the requested kind that is stable under the
/// class representative (composed with `α` when `reversing`).
pub fn witness_map(n: usize, class: &CycleType, reversing: bool, kind: SurfaceKind) -> Result<Witness, WitnessError> {
    witness_map_with_budget(n, class, reversing, kind, DEFAULT_SEARCH_BUDGET)
}

pub fn witness_map_with_budget(
    n: usize,
    class: &CycleType,
    reversing: bool,
    kind: SurfaceKind,
    budget: u64,
) -> Result<Witness, WitnessError> {
    if n < 3 {
        return Err(CodeError::TooSmall(n).into());
    }
    if class.total() != n {
        return Err(WitnessError::WrongDegree { n, class: class.clone() });
    }
    let g = class.representative();
    let finish = |code: EmbeddingCode, source| {
        let map = decode(&code);
        let surface = surface_of(&map).expect("decoded maps are valid");
        Witness {
            code,
            map,
            action: LiftedAction::new(g.clone(), reversing),
            surface,
            source,
        }
    };

    let built = construction(n, class, &g, reversing);
    if let Some((name, code)) = &built {
        debug_assert!(code_is_stable(code, &g, reversing));
        if kind != SurfaceKind::NonOrientable {
            return Ok(finish(code.clone(), WitnessSource::Construction(name)));
        }
        if let Some(toggled) = toggle_to_non_orientable(code, &g) {
            return Ok(finish(toggled, WitnessSource::SignToggle(name)));
        }
    }
    match find_fixed_code(n, &g, reversing, kind, budget)? {
        Some(code) => Ok(finish(code, WitnessSource::Search)),
        None => Err(WitnessError::NotFound {
            n,
            class: class.clone(),
            reversing,
            kind,
        }),
    }
}

/// Whether every local rotation is carried to the one at the image vertex.
pub(crate) fn code_is_stable(code: &EmbeddingCode, g: &Permutation, reversing: bool) -> bool {
    (0..code.n()).all(|v| transform_local(code.rotation(v), v, g, reversing, None) == *code.rotation(g.apply(v)))
}

/// The cycles of `g` read column by column: first entries of every cycle,
/// then second entries, and so on. When all cycles have the same length,
/// `g` shifts this sequence cyclically by the number of cycles.
fn column_major(cycles: &[Vec<usize>]) -> Vec<usize> {
    let len = cycles.first().map_or(0, Vec::len);
    (0..len).flat_map(|i| cycles.iter().map(move |c| c[i])).collect()
}

fn plus(seq: impl IntoIterator<Item = usize>) -> LocalRotation {
    seq.into_iter().map(|j| (j, Sign::Plus)).collect()
}

fn construction(n: usize, class: &CycleType, g: &Permutation, reversing: bool) -> Option<(&'static str, EmbeddingCode)> {
    let parts = class.parts();
    let uniform = parts.iter().all(|&p| p == parts[0]);
    let cycles = g.cycles();
    let rotations: Vec<LocalRotation> = if !reversing && uniform {
        let l = column_major(&cycles);
        (0..n).map(|x| plus(l.iter().copied().filter(|&y| y != x))).collect()
    } else if !reversing && parts[0] == 1 && parts[1..].iter().all(|&p| p == parts[1]) && parts.len() > 1 {
        let t = cycles[0][0];
        let l = column_major(&cycles[1..]);
        let mut rot = vec![Vec::new(); n];
        rot[t] = plus(l.iter().copied());
        for (p, &x) in l.iter().enumerate() {
            let mut seq = l.clone();
            seq[p] = t;
            rot[x] = plus(seq);
        }
        rot
    } else if reversing && uniform && parts[0] % 2 == 0 {
        let l = column_major(&cycles);
        (0..n)
            .map(|x| {
                let mut seq: Vec<usize> = l.iter().copied().filter(|&y| y != x).collect();
                if (x + 1) % 2 == 0 {
                    seq.reverse();
                }
                plus(seq)
            })
            .collect()
    } else if reversing && n == 4 && parts == [1, 1, 2] {
        [[1, 2, 3], [0, 2, 3], [0, 3, 1], [0, 1, 2]].iter().map(|r| plus(r.iter().copied())).collect()
    } else {
        return None;
    };
    let name = match (reversing, uniform) {
        (false, true) => "M1",
        (false, false) => "M2",
        (true, true) => "M3",
        (true, false) => "M4",
    };
    let code = EmbeddingCode::normalized(n, rotations).expect("constructions list every neighbour once");
    code_is_stable(&code, g, reversing).then_some((name, code))
}

/// Toggles the signs on one `g`-orbit of darts, then on pairs of orbits,
/// until the surface becomes non-orientable. Toggling commutes with the
/// lifted action, so the result stays stable.
fn toggle_to_non_orientable(code: &EmbeddingCode, g: &Permutation) -> Option<EmbeddingCode> {
    let n = code.n();
    let mut seen = vec![vec![false; n]; n];
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || seen[i][j] {
                continue;
            }
            let mut orbit = Vec::new();
            let (mut a, mut b) = (i, j);
            while !seen[a][b] {
                seen[a][b] = true;
                orbit.push((a, b));
                (a, b) = (g.apply(a), g.apply(b));
            }
            orbits.push(orbit);
        }
    }
    let apply = |sets: &[&Vec<(usize, usize)>]| -> EmbeddingCode {
        let mut rot: Vec<LocalRotation> = code.rotations().to_vec();
        for set in sets {
            for &(a, b) in set.iter() {
                for e in rot[a].iter_mut() {
                    if e.0 == b {
                        e.1 = e.1.flip();
                    }
                }
            }
        }
        EmbeddingCode::normalized(n, rot).expect("toggling keeps the shape")
    };
    let non_orientable = |c: &EmbeddingCode| !surface_of(&decode(c)).expect("valid map").orientable;
    for o in &orbits {
        let c = apply(&[o]);
        if non_orientable(&c) {
            return Some(c);
        }
    }
    for (k, o1) in orbits.iter().enumerate() {
        for o2 in &orbits[k + 1..] {
            let c = apply(&[o1, o2]);
            if non_orientable(&c) {
                return Some(c);
            }
        }
    }
    None
}
