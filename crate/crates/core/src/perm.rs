//! Permutations of `0..m`, cycle types and the counting helpers built on them.
//!
//! Composition follows function notation: `p.compose(&q)` is `p ∘ q`, the
//! permutation that applies `q` first.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::PermError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m {
                return Err(PermError::OutOfRange { point: x, size: m });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::Repeated(x));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of `0..m` from disjoint cycles; unlisted points
    /// are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], m: usize) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut used = vec![false; m];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x >= m {
                    return Err(PermError::OutOfRange { point: x, size: m });
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(PermError::Repeated(x));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.len());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// `t ∘ self ∘ t⁻¹`: the permutation obtained by renaming every point
    /// `x` of `self` to `t(x)`.
    pub fn conjugate_by(&self, t: &Permutation) -> Permutation {
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[t.images[x]] = t.images[y];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &y)| x != y && self.images[y] == x)
    }

    /// All cycles, fixed points included, each starting at its least element
    /// and sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable();
        CycleType { parts }
    }

    /// Least `k ≥ 1` with `selfᵏ = id`. Fits in `u64` for every degree used
    /// here (Landau's function stays below 2⁶⁴ well past 300 points).
    pub fn order(&self) -> u64 {
        self.cycle_type().order()
    }

    pub fn is_semi_regular(&self) -> bool {
        let parts = self.cycle_type().parts;
        parts.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.len(), self)
    }
}

/// Multiset of cycle lengths of a permutation of `n` points, stored as an
/// ascending list. Names the conjugacy class E_θ of S_n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PermError> {
        if parts.contains(&0) {
            return Err(PermError::ZeroPart);
        }
        parts.sort_unstable();
        Ok(CycleType { parts })
    }

    /// `[k^count]`.
    pub fn uniform(k: usize, count: usize) -> Self {
        assert!(k > 0);
        CycleType {
            parts: vec![k; count],
        }
    }

    /// `[1, k^count]`.
    pub fn one_plus_uniform(k: usize, count: usize) -> Self {
        let mut parts = vec![k; count];
        parts.push(1);
        parts.sort_unstable();
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Length ↦ number of cycles of that length (the a_k of `[1^{a_1} 2^{a_2} …]`).
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }

    /// Every cycle type of total `n`, in ascending lexicographic order.
    pub fn all(n: usize) -> Vec<CycleType> {
        fn rec(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>) {
            if rest == 0 {
                out.push(CycleType { parts: cur.clone() });
                return;
            }
            for k in min..=rest {
                if rest - k != 0 && rest - k < k {
                    continue;
                }
                cur.push(k);
                rec(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 1, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// The permutation `(0 … k₁−1)(k₁ … k₁+k₂−1)…` with cycles laid out
    /// consecutively in the order of `parts()`.
    pub fn representative(&self) -> Permutation {
        let n = self.total();
        let mut images = vec![0; n];
        let mut start = 0;
        for &k in &self.parts {
            for t in 0..k {
                images[start + t] = start + (t + 1) % k;
            }
            start += k;
        }
        Permutation { images }
    }

    pub fn class_size(&self) -> BigUint {
        conjugacy_class_size(self)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycleType {
    type Err = PermError;

    /// Accepts `1,1,2`, `[1,1,2]` or `1 1 2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PermError::BadCycleType(s.to_string()))?;
        if parts.is_empty() {
            return Err(PermError::BadCycleType(s.to_string()));
        }
        CycleType::new(parts)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `n! / ∏_k (k^{a_k} · a_k!)`.
pub fn conjugacy_class_size(t: &CycleType) -> BigUint {
    let mut denom = BigUint::one();
    for (k, a) in t.multiplicities() {
        denom *= BigUint::from(k).pow(a as u32) * factorial(a);
    }
    factorial(t.total()) / denom
}

pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1, "euler_phi is defined for k >= 1");
    let mut n = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}
