use std::fmt;

use super::code::{normalize_local, LocalRotation};
use super::{flag_index, CompleteFlagUniverse};
use crate::error::CodeError;
use crate::map::Map;
use crate::perm::Permutation;

/// A vertex permutation `g`, optionally composed with `α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiftedAction {
    pub base: Permutation,
    pub reversing: bool,
}

impl LiftedAction {
    pub fn new(base: Permutation, reversing: bool) -> Self {
        LiftedAction { base, reversing }
    }

    pub fn flag_permutation(&self, u: &CompleteFlagUniverse) -> Result<Permutation, CodeError> {
        lift(u, &self.base, self.reversing)
    }

    /// The normalised rotation at `g(v)` that the rotation `rot` at `v` is
    /// carried to.
    pub fn image_rotation(&self, rot: &LocalRotation, v: usize) -> LocalRotation {
        transform_local(rot, v, &self.base, self.reversing, None)
    }
}

impl fmt::Display for LiftedAction {
    /// 1-based cycle notation, with a trailing `·α` when reversing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.base.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            write!(f, "()")?;
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        if self.reversing {
            write!(f, "·α")?;
        }
        Ok(())
    }
}

/// `i^{j s} ↦ g(i)^{g(j) s}`, followed by `α` when `reversing`.
pub fn lift(u: &CompleteFlagUniverse, g: &Permutation, reversing: bool) -> Result<Permutation, CodeError> {
    let n = u.n();
    if g.len() != n {
        return Err(CodeError::ActionSizeMismatch { n, got: g.len() });
    }
    let images = (0..u.len())
        .map(|f| {
            let (i, j, s) = u.decompose(f);
            flag_index(n, g.apply(i), g.apply(j), s.flipped_if(reversing))
        })
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// Whether conjugating the rotation by the lifted action gives it back.
pub fn is_stable(m: &Map, a: &LiftedAction) -> Result<bool, CodeError> {
    let n = a.base.len();
    let u = CompleteFlagUniverse::new(n)?;
    if m.len() != u.len() || m.flags() != u.flags() {
        return Err(CodeError::UniverseMismatch {
            n,
            expected: u.len(),
            got: m.len(),
        });
    }
    let t = lift(&u, &a.base, a.reversing)?;
    let p = m.rotation();
    Ok((0..m.len()).all(|x| t.apply(p.apply(x)) == p.apply(t.apply(x))))
}

/// The local rotation at `g(v)` forced by the one at `v`: relabel
/// neighbours by `g`, flip signs when reversing or when the image edge is
/// twisted, and renormalise.
pub(crate) fn transform_local(
    rot: &LocalRotation,
    v: usize,
    g: &Permutation,
    reversing: bool,
    twist: Option<&dyn Fn(usize, usize) -> bool>,
) -> LocalRotation {
    let gv = g.apply(v);
    let mut out: LocalRotation = rot
        .iter()
        .map(|&(j, s)| {
            let gj = g.apply(j);
            let t = twist.is_some_and(|tw| tw(gv, gj));
            (gj, s.flipped_if(reversing ^ t))
        })
        .collect();
    normalize_local(&mut out);
    out
}
