//! Maps as permutations on quadricell flag sets.
//!
//! A map is a rotation `P` on a flag set carrying two commuting fixed-point-free
//! involutions `α` (side swap) and `β` (end swap), subject to three axioms:
//! no power of `P` sends a flag to its `α` image, `αP = P⁻¹α`, and
//! `⟨α, β, P⟩` is transitive.

mod canon;
mod morphism;
mod text;
mod topology;

pub use canon::canonical_form;
pub use morphism::{automorphism_group, find_isomorphism, orientation_preserving_automorphisms, Mode, ModeFilter, MapMorphism};
pub use text::{parse_map, parse_maps, write_map};
pub use topology::{edges, faces, surface_of, vertices, SurfaceType};

use crate::error::MapError;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagSet {
    alpha: Permutation,
    beta: Permutation,
}

impl FlagSet {
    pub fn new(alpha: Permutation, beta: Permutation) -> Result<Self, MapError> {
        if alpha.len() != beta.len() {
            return Err(MapError::FlagSizeMismatch {
                alpha: alpha.len(),
                beta: beta.len(),
            });
        }
        for (name, p) in [("alpha", &alpha), ("beta", &beta)] {
            if let Some(x) = (0..p.len()).find(|&x| p.apply(x) == x || p.apply(p.apply(x)) != x) {
                return Err(MapError::NotInvolution { name, flag: x });
            }
        }
        for x in 0..alpha.len() {
            if alpha.apply(beta.apply(x)) != beta.apply(alpha.apply(x)) {
                return Err(MapError::NotCommuting(x));
            }
            if alpha.apply(beta.apply(x)) == x {
                return Err(MapError::DegenerateQuadricell(x));
            }
        }
        Ok(FlagSet { alpha, beta })
    }

    /// `e` edges with flags `4e + {0, 1, 2, 3}` standing for `x, αx, βx, αβx`.
    pub fn quadricells(edges: usize) -> Self {
        let m = 4 * edges;
        let alpha = Permutation::from_images_unchecked((0..m).map(|x| x ^ 1).collect());
        let beta = Permutation::from_images_unchecked((0..m).map(|x| x ^ 2).collect());
        FlagSet { alpha, beta }
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Map {
    flags: FlagSet,
    rotation: Permutation,
}

/// Checks the three map axioms and wraps the data. Axiom I is checked first,
/// then transitivity, then the `α`-conjugation law.
pub fn validate_map(flags: FlagSet, rotation: Permutation) -> Result<Map, MapError> {
    if rotation.len() != flags.len() {
        return Err(MapError::RotationSizeMismatch {
            rotation: rotation.len(),
            flags: flags.len(),
        });
    }
    let alpha = flags.alpha();

    let m = flags.len();
    let mut cycle_id = vec![usize::MAX; m];
    for (id, cycle) in rotation.cycles().iter().enumerate() {
        for &x in cycle {
            cycle_id[x] = id;
        }
    }
    if let Some(x) = (0..m).find(|&x| cycle_id[x] == cycle_id[alpha.apply(x)]) {
        return Err(MapError::AxiomI(x));
    }

    let gens = [alpha, flags.beta(), &rotation];
    let reached = reach(m, 0, &gens);
    if let Some(x) = reached.iter().position(|&r| !r) {
        return Err(MapError::AxiomIII(x));
    }

    let inv = rotation.inverse();
    if let Some(x) = (0..m).find(|&x| alpha.apply(rotation.apply(x)) != inv.apply(alpha.apply(x))) {
        return Err(MapError::AxiomII(x));
    }

    Ok(Map { flags, rotation })
}

/// Flags reachable from `start` under the given generators (and their
/// inverses, which coincide with forward reachability for permutations).
pub(crate) fn reach(m: usize, start: usize, gens: &[&Permutation]) -> Vec<bool> {
    let mut seen = vec![false; m];
    if m == 0 {
        return seen;
    }
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

impl Map {
    pub fn new(flags: FlagSet, rotation: Permutation) -> Result<Self, MapError> {
        validate_map(flags, rotation)
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

    pub fn rotation(&self) -> &Permutation {
        &self.rotation
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Same flags, rotation `P⁻¹`.
    pub fn mirror(&self) -> Map {
        Map {
            flags: self.flags.clone(),
            rotation: self.rotation.inverse(),
        }
    }

    /// Transports the map along a flag bijection `t`: the result has
    /// `α' = tαt⁻¹`, `β' = tβt⁻¹`, `P' = tPt⁻¹`.
    pub fn relabel(&self, t: &Permutation) -> Map {
        Map {
            flags: FlagSet {
                alpha: self.alpha().conjugate_by(t),
                beta: self.beta().conjugate_by(t),
            },
            rotation: self.rotation.conjugate_by(t),
        }
    }

    /// `x ↦ P(αβ(x))`; its cycles bound the faces.
    pub fn face_permutation(&self) -> Permutation {
        let ab = self.alpha().compose(self.beta());
        self.rotation.compose(&ab)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn torus_example_is_valid() {
        let m = torus_k4();
        assert_eq!(m.len(), 24);
    }

    #[test]
    fn two_cycle_through_alpha_pair_breaks_axiom_one() {
        let p = Permutation::from_cycles(&[vec![e(X), a(X)]], 24).unwrap();
        assert_eq!(validate_map(FlagSet::quadricells(6), p), Err(MapError::AxiomI(e(X))));
    }

    #[test]
    fn lone_cycle_is_not_transitive() {
        let p = Permutation::from_cycles(&[vec![e(X), e(Y)]], 24).unwrap();
        assert!(matches!(
            validate_map(FlagSet::quadricells(6), p),
            Err(MapError::AxiomIII(_))
        ));
    }

    #[test]
    fn conjugation_law_is_checked() {
        // The partner of (x, y, z) listed in the same direction instead of reversed.
        let mut cycles = torus_k4_rotation().cycles();
        let i = cycles.iter().position(|c| c.contains(&a(X))).unwrap();
        cycles[i] = vec![a(X), a(Y), a(Z)];
        let p = Permutation::from_cycles(&cycles, 24).unwrap();
        assert!(matches!(
            validate_map(FlagSet::quadricells(6), p),
            Err(MapError::AxiomII(_))
        ));
    }

    #[test]
    fn flag_set_rejects_bad_involutions() {
        let id = Permutation::identity(4);
        let q = FlagSet::quadricells(1);
        assert!(matches!(
            FlagSet::new(id, q.beta().clone()),
            Err(MapError::NotInvolution { name: "alpha", .. })
        ));
        let a = Permutation::from_cycles(&[vec![0, 1], vec![2, 3]], 4).unwrap();
        let b = Permutation::from_cycles(&[vec![0, 2], vec![1, 3]], 4).unwrap();
        assert!(FlagSet::new(a.clone(), b).is_ok());
        let b2 = Permutation::from_cycles(&[vec![0, 2], vec![1, 3]], 4).unwrap();
        let a2 = Permutation::from_cycles(&[vec![0, 1], vec![2, 3]], 4).unwrap();
        assert_eq!(FlagSet::new(a2, b2).unwrap(), FlagSet::quadricells(1));
        assert!(matches!(FlagSet::new(a.clone(), a), Err(MapError::DegenerateQuadricell(_))));
    }

    #[test]
    fn mirror_is_valid() {
        let m = torus_k4();
        assert!(validate_map(m.flags().clone(), m.mirror().rotation().clone()).is_ok());
    }
}
