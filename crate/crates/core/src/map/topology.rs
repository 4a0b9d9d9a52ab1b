use std::fmt;

use serde::{Deserialize, Serialize};

use super::{reach, Map};
use crate::error::MapError;
use crate::perm::Permutation;

/// Groups the cycles of `p` into pairs `{C, σC⁻¹σ}`. The first member of each
/// pair is the cycle holding the smaller least flag; pairs are sorted by it.
/// A cycle that is its own partner appears with itself as partner.
fn conjugate_pairs(p: &Permutation, sigma: &Permutation) -> Vec<(Vec<usize>, Vec<usize>)> {
    let cycles = p.cycles();
    let mut id = vec![0; p.len()];
    for (k, c) in cycles.iter().enumerate() {
        for &x in c {
            id[x] = k;
        }
    }
    let mut used = vec![false; cycles.len()];
    let mut out = Vec::new();
    for (k, c) in cycles.iter().enumerate() {
        if used[k] {
            continue;
        }
        let partner = id[sigma.apply(c[0])];
        used[k] = true;
        used[partner] = true;
        out.push((c.clone(), cycles[partner].clone()));
    }
    out
}

/// Vertices as pairs `{C, αC⁻¹α}` of rotation cycles.
pub fn vertices(m: &Map) -> Vec<(Vec<usize>, Vec<usize>)> {
    conjugate_pairs(m.rotation(), m.alpha())
}

/// Edges as orbits `{x, αx, βx, αβx}`, each sorted, listed by least flag.
pub fn edges(m: &Map) -> Vec<Vec<usize>> {
    let mut seen = vec![false; m.len()];
    let mut out = Vec::new();
    for x in 0..m.len() {
        if seen[x] {
            continue;
        }
        let a = m.alpha().apply(x);
        let b = m.beta().apply(x);
        let ab = m.alpha().apply(b);
        let mut orbit = vec![x, a, b, ab];
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
        }
        out.push(orbit);
    }
    out
}

/// Faces as pairs `{C, βC⁻¹β}` of cycles of `x ↦ P(αβx)`.
pub fn faces(m: &Map) -> Vec<(Vec<usize>, Vec<usize>)> {
    conjugate_pairs(&m.face_permutation(), m.beta())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceType {
    pub orientable: bool,
    pub genus_or_crosscap: u64,
    pub euler_characteristic: i64,
}

impl SurfaceType {
    pub fn from_euler(orientable: bool, chi: i64) -> Self {
        let genus_or_crosscap = if orientable { (2 - chi) / 2 } else { 2 - chi } as u64;
        SurfaceType {
            orientable,
            genus_or_crosscap,
            euler_characteristic: chi,
        }
    }

    /// Short label: `S0`, `S1`, … for orientable, `N1`, `N2`, … otherwise.
    pub fn label(&self) -> String {
        let tag = if self.orientable { 'S' } else { 'N' };
        format!("{tag}{}", self.genus_or_crosscap)
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.orientable, self.genus_or_crosscap) {
            (true, 0) => write!(f, "sphere"),
            (true, 1) => write!(f, "torus"),
            (true, g) => write!(f, "orientable genus {g}"),
            (false, 1) => write!(f, "projective plane"),
            (false, 2) => write!(f, "Klein bottle"),
            (false, k) => write!(f, "non-orientable crosscap {k}"),
        }
    }
}

/// Orbits of `⟨αβ, P⟩`, labelled by first discovery from flag 0 upward.
pub(crate) fn even_orbits(m: &Map) -> Vec<usize> {
    let ab = m.alpha().compose(m.beta());
    let gens = [&ab, m.rotation()];
    let mut label = vec![usize::MAX; m.len()];
    let mut next = 0;
    for x in 0..m.len() {
        if label[x] != usize::MAX {
            continue;
        }
        for (y, r) in reach(m.len(), x, &gens).into_iter().enumerate() {
            if r {
                label[y] = next;
            }
        }
        next += 1;
    }
    label
}

pub fn surface_of(m: &Map) -> Result<SurfaceType, MapError> {
    let orbits = even_orbits(m);
    let count = orbits.iter().copied().max().map_or(0, |k| k + 1);
    let orientable = match count {
        1 => false,
        2 => true,
        k => return Err(MapError::Internal(k)),
    };
    let v = vertices(m).len() as i64;
    let e = edges(m).len() as i64;
    let f = faces(m).len() as i64;
    Ok(SurfaceType::from_euler(orientable, v - e + f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::fixtures::*;

    #[test]
    fn torus_vertices_match_listing() {
        let m = torus_k4();
        let vs = vertices(&m);
        assert_eq!(vs.len(), 4);
        assert_eq!(vs[0].0, vec![e(X), e(Y), e(Z)]);
        assert_eq!(vs[0].1, vec![a(X), a(Z), a(Y)]);
        let mut all: Vec<usize> = vs.iter().flat_map(|(c, d)| c.iter().chain(d)).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..24).collect::<Vec<_>>());
    }

    #[test]
    fn torus_edges_are_letter_quadruples() {
        let m = torus_k4();
        let es = edges(&m);
        assert_eq!(es.len(), 6);
        for (k, orbit) in es.iter().enumerate() {
            assert_eq!(orbit, &vec![e(k), a(k), b(k), ab(k)]);
        }
    }

    #[test]
    fn torus_faces_have_lengths_four_and_eight() {
        let m = torus_k4();
        let fs = faces(&m);
        let mut lens: Vec<usize> = fs.iter().map(|(c, _)| c.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![4, 8]);
        for (c, d) in &fs {
            assert_eq!(c.len(), d.len());
            assert_ne!(c, d);
        }
    }

    #[test]
    fn torus_surface() {
        let s = surface_of(&torus_k4()).unwrap();
        assert!(s.orientable);
        assert_eq!(s.euler_characteristic, 0);
        assert_eq!(s.genus_or_crosscap, 1);
        assert_eq!(s.to_string(), "torus");
        assert_eq!(s.label(), "S1");
    }

    #[test]
    fn alpha_swaps_the_two_orientation_classes() {
        let m = torus_k4();
        let orb = even_orbits(&m);
        for x in 0..m.len() {
            assert_ne!(orb[x], orb[m.alpha().apply(x)]);
        }
    }
}
