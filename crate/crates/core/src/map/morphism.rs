use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::topology::even_orbits;
use super::Map;
use crate::perm::Permutation;

/// Whether a morphism carries `P₁` to `P₂` or to `P₂⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mode {
    Preserving,
    Reversing,
}

impl Mode {
    pub fn compose(self, other: Mode) -> Mode {
        if self == other {
            Mode::Preserving
        } else {
            Mode::Reversing
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Preserving => write!(f, "order-preserving"),
            Mode::Reversing => write!(f, "order-reversing"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModeFilter {
    Preserving,
    Reversing,
    Either,
}

impl ModeFilter {
    pub fn modes(self) -> &'static [Mode] {
        match self {
            ModeFilter::Preserving => &[Mode::Preserving],
            ModeFilter::Reversing => &[Mode::Reversing],
            ModeFilter::Either => &[Mode::Preserving, Mode::Reversing],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MapMorphism {
    pub bijection: Permutation,
    pub mode: Mode,
}

impl MapMorphism {
    pub fn identity(m: usize) -> Self {
        MapMorphism {
            bijection: Permutation::identity(m),
            mode: Mode::Preserving,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MapMorphism) -> MapMorphism {
        MapMorphism {
            bijection: self.bijection.compose(&other.bijection),
            mode: self.mode.compose(other.mode),
        }
    }

    /// Checks the defining identities directly.
    pub fn is_morphism(&self, m1: &Map, m2: &Map) -> bool {
        let t = &self.bijection;
        if t.len() != m1.len() || m2.len() != m1.len() {
            return false;
        }
        let p2 = match self.mode {
            Mode::Preserving => m2.rotation().clone(),
            Mode::Reversing => m2.rotation().inverse(),
        };
        (0..m1.len()).all(|x| {
            let y = t.apply(x);
            t.apply(m1.alpha().apply(x)) == m2.alpha().apply(y)
                && t.apply(m1.beta().apply(x)) == m2.beta().apply(y)
                && t.apply(m1.rotation().apply(x)) == p2.apply(y)
        })
    }
}

/// Extends `x₀ ↦ y₀` along `α`, `β`, `P` to the unique candidate bijection,
/// failing on the first inconsistency.
pub(crate) fn propagate(m1: &Map, m2: &Map, x0: usize, y0: usize, mode: Mode) -> Option<Permutation> {
    let n = m1.len();
    if m2.len() != n {
        return None;
    }
    let p2inv;
    let p2 = match mode {
        Mode::Preserving => m2.rotation(),
        Mode::Reversing => {
            p2inv = m2.rotation().inverse();
            &p2inv
        }
    };
    let src = [m1.alpha(), m1.beta(), m1.rotation()];
    let dst = [m2.alpha(), m2.beta(), p2];

    let mut image = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    image[x0] = y0;
    hit[y0] = true;
    let mut queue = VecDeque::from([x0]);
    while let Some(x) = queue.pop_front() {
        let y = image[x];
        for (g1, g2) in src.iter().zip(dst.iter()) {
            let x1 = g1.apply(x);
            let y1 = g2.apply(y);
            if image[x1] == usize::MAX {
                if hit[y1] {
                    return None;
                }
                image[x1] = y1;
                hit[y1] = true;
                queue.push_back(x1);
            } else if image[x1] != y1 {
                return None;
            }
        }
    }
    if image.contains(&usize::MAX) {
        return None;
    }
    Some(Permutation::from_images_unchecked(image))
}

/// Anchored search: flag 0 of `m1` is sent to each flag of `m2` in turn.
pub fn find_isomorphism(m1: &Map, m2: &Map, filter: ModeFilter) -> Option<MapMorphism> {
    if m1.len() != m2.len() || m1.is_empty() {
        return None;
    }
    for &mode in filter.modes() {
        for y0 in 0..m2.len() {
            if let Some(bijection) = propagate(m1, m2, 0, y0, mode) {
                return Some(MapMorphism { bijection, mode });
            }
        }
    }
    None
}

/// Every automorphism of both modes, preserving ones first, each list in
/// order of the image of flag 0.
pub fn automorphism_group(m: &Map) -> Vec<MapMorphism> {
    let mut out = Vec::new();
    for mode in [Mode::Preserving, Mode::Reversing] {
        for y0 in 0..m.len() {
            if let Some(bijection) = propagate(m, m, 0, y0, mode) {
                out.push(MapMorphism { bijection, mode });
            }
        }
    }
    out
}

/// Order-preserving automorphisms that also fix each orbit of `⟨αβ, P⟩`.
/// On an orientable map these are the orientation-preserving symmetries; on a
/// non-orientable map there is one orbit and this is the whole preserving
/// subgroup.
pub fn orientation_preserving_automorphisms(m: &Map) -> Vec<MapMorphism> {
    let orbit = even_orbits(m);
    automorphism_group(m)
        .into_iter()
        .filter(|a| a.mode == Mode::Preserving)
        .filter(|a| (0..m.len()).all(|x| orbit[a.bijection.apply(x)] == orbit[x]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::fixtures::*;
    use crate::map::{edges, faces, vertices};
    use std::collections::BTreeSet;

    #[test]
    fn self_isomorphism_is_identity() {
        let m = torus_k4();
        let iso = find_isomorphism(&m, &m, ModeFilter::Preserving).unwrap();
        assert!(iso.bijection.is_identity());
        assert_eq!(iso.mode, Mode::Preserving);
    }

    #[test]
    fn alpha_realises_the_mirror() {
        let m = torus_k4();
        let mirror = m.mirror();
        // α P = P⁻¹ α, so α is a reversing automorphism of m and a preserving
        // isomorphism onto the mirror; the identity is a reversing one.
        let alpha = |mode| MapMorphism {
            bijection: m.alpha().clone(),
            mode,
        };
        assert!(alpha(Mode::Reversing).is_morphism(&m, &m));
        assert!(alpha(Mode::Preserving).is_morphism(&m, &mirror));
        let id = MapMorphism {
            bijection: Permutation::identity(24),
            mode: Mode::Reversing,
        };
        assert!(id.is_morphism(&m, &mirror));
        assert!(find_isomorphism(&m, &mirror, ModeFilter::Reversing).is_some());
    }

    #[test]
    fn preserving_automorphisms_are_semiregular() {
        let m = torus_k4();
        let aut = automorphism_group(&m);
        assert!(aut.iter().all(|a| a.is_morphism(&m, &m)));
        let set: BTreeSet<_> = aut.iter().map(|a| (a.bijection.images().to_vec(), a.mode)).collect();
        for a in &aut {
            for b in &aut {
                let c = a.compose(b);
                assert!(set.contains(&(c.bijection.images().to_vec(), c.mode)));
            }
        }
        let preserving: Vec<_> = aut.iter().filter(|a| a.mode == Mode::Preserving).collect();
        assert_eq!(aut.len(), 2 * preserving.len());
        assert_eq!(m.len() % preserving.len(), 0);
        for x in 0..m.len() {
            let orbit: BTreeSet<_> = preserving.iter().map(|a| a.bijection.apply(x)).collect();
            assert_eq!(orbit.len(), preserving.len());
        }
        // a reversing automorphism may fix flags
        assert!(aut
            .iter()
            .any(|a| a.mode == Mode::Reversing && (0..m.len()).any(|x| a.bijection.apply(x) == x)));
    }

    #[test]
    fn orientation_preserving_subgroup_divides_dart_count() {
        let m = torus_k4();
        let rot = orientation_preserving_automorphisms(&m);
        assert_eq!(12 % rot.len(), 0);
    }

    #[test]
    fn automorphisms_carry_vertices_edges_faces() {
        let m = torus_k4();
        let as_sets = |pairs: Vec<(Vec<usize>, Vec<usize>)>| -> BTreeSet<BTreeSet<usize>> {
            pairs.into_iter().map(|(c, d)| c.into_iter().chain(d).collect()).collect()
        };
        let vs = as_sets(vertices(&m));
        let fs = as_sets(faces(&m));
        let es: BTreeSet<BTreeSet<usize>> = edges(&m).into_iter().map(|e| e.into_iter().collect()).collect();
        let mirror_faces = as_sets(faces(&m.mirror()));
        for a in automorphism_group(&m) {
            let img = |s: &BTreeSet<BTreeSet<usize>>| -> BTreeSet<BTreeSet<usize>> {
                s.iter().map(|c| c.iter().map(|&x| a.bijection.apply(x)).collect()).collect()
            };
            assert_eq!(img(&vs), vs);
            assert_eq!(img(&es), es);
            match a.mode {
                Mode::Preserving => assert_eq!(img(&fs), fs),
                Mode::Reversing => assert_eq!(img(&fs), mirror_faces),
            }
        }
    }
}
