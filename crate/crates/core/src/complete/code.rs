use std::fmt::Write as _;

use num_bigint::BigUint;

use super::{flag_index, universe, Sign, SurfaceKind};
use crate::error::{CodeError, ParseError};
use crate::map::{validate_map, Map};
use crate::perm::{factorial, Permutation};

/// Cyclic order of the neighbours around one vertex, each with a sign.
pub type LocalRotation = Vec<(usize, Sign)>;

/// Puts a local rotation into normal form: the pair `{C, αC⁻¹α}` is
/// represented by the member in which the least neighbour carries `+`, and
/// the cycle is rotated to start there.
pub(crate) fn normalize_local(rot: &mut LocalRotation) {
    let Some(pos) = rot.iter().enumerate().min_by_key(|(_, &(j, _))| j).map(|(p, _)| p) else {
        return;
    };
    if rot[pos].1 == Sign::Minus {
        rot.reverse();
        for e in rot.iter_mut() {
            e.1 = e.1.flip();
        }
        let pos = rot.len() - 1 - pos;
        rot.rotate_left(pos);
    } else {
        rot.rotate_left(pos);
    }
}

/// A labelled embedding of `K_n`: one normalised local rotation per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmbeddingCode {
    n: usize,
    rotations: Vec<LocalRotation>,
}

impl EmbeddingCode {
    /// Accepts only rotations that are already normalised.
    pub fn new(n: usize, rotations: Vec<LocalRotation>) -> Result<Self, CodeError> {
        let code = EmbeddingCode::check_shape(n, rotations)?;
        for (v, rot) in code.rotations.iter().enumerate() {
            let least = if v == 0 { 1 } else { 0 };
            if rot[0] != (least, Sign::Plus) {
                return Err(CodeError::NotNormalised { vertex: v });
            }
        }
        Ok(code)
    }

    /// Normalises each local rotation, then validates.
    pub fn normalized(n: usize, mut rotations: Vec<LocalRotation>) -> Result<Self, CodeError> {
        for rot in rotations.iter_mut() {
            normalize_local(rot);
        }
        EmbeddingCode::check_shape(n, rotations)
    }

    fn check_shape(n: usize, rotations: Vec<LocalRotation>) -> Result<Self, CodeError> {
        if n < 3 {
            return Err(CodeError::TooSmall(n));
        }
        if rotations.len() != n {
            return Err(CodeError::WrongVertexCount {
                expected: n,
                got: rotations.len(),
            });
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut seen = vec![false; n];
            seen[v] = true;
            let ok = rot.len() == n - 1
                && rot
                    .iter()
                    .all(|&(j, _)| j < n && !std::mem::replace(&mut seen[j], true));
            if !ok {
                return Err(CodeError::NotNeighbourPermutation { vertex: v });
            }
        }
        Ok(EmbeddingCode { n, rotations })
    }

    pub(crate) fn from_parts_unchecked(n: usize, rotations: Vec<LocalRotation>) -> Self {
        EmbeddingCode { n, rotations }
    }

    /// Every vertex lists its neighbours in increasing order, all signs `+`.
    pub fn all_plus_identity(n: usize) -> Self {
        let rotations = (0..n)
            .map(|v| (0..n).filter(|&j| j != v).map(|j| (j, Sign::Plus)).collect())
            .collect();
        EmbeddingCode { n, rotations }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rotations(&self) -> &[LocalRotation] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &LocalRotation {
        &self.rotations[v]
    }

    pub fn is_all_plus(&self) -> bool {
        self.rotations.iter().flatten().all(|&(_, s)| s == Sign::Plus)
    }

    /// Images of the rotation permutation on the flag universe.
    pub fn rotation_images(&self) -> Vec<usize> {
        let n = self.n;
        let mut images = vec![0; 2 * n * (n - 1)];
        for (i, rot) in self.rotations.iter().enumerate() {
            let k = rot.len();
            for t in 0..k {
                let (j, s) = rot[t];
                let (j2, s2) = rot[(t + 1) % k];
                let f = flag_index(n, i, j, s);
                let f2 = flag_index(n, i, j2, s2);
                images[f] = f2;
                images[f2 ^ 1] = f ^ 1;
            }
        }
        images
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("kn v1; n={}", self.n);
        for (v, rot) in self.rotations.iter().enumerate() {
            write!(s, "; rot[{}]={}", v + 1, rotation_text(rot)).unwrap();
        }
        s
    }
}

/// `2+ 4- 3+`: 1-based neighbours with their signs.
pub fn rotation_text(rot: &LocalRotation) -> String {
    let parts: Vec<String> = rot.iter().map(|&(j, s)| format!("{}{}", j + 1, s.as_char())).collect();
    parts.join(" ")
}

/// Parses `kn v1; n=5; rot[1]=2+ 3+ 5- 4+; …`. Rotations are normalised on
/// the way in.
pub fn parse_code(text: &str) -> Result<EmbeddingCode, ParseError> {
    let mut fields = text
        .split([';', '\n'])
        .map(str::trim)
        .filter(|f| !f.is_empty() && !f.starts_with('#'));
    let line = 1;
    if fields.next() != Some("kn v1") {
        return Err(ParseError::syntax(line, "expected 'kn v1' header"));
    }
    let n = fields
        .next()
        .and_then(|f| f.strip_prefix("n="))
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| ParseError::syntax(line, "expected n=<order>"))?;
    if n < 3 {
        return Err(CodeError::TooSmall(n).into());
    }
    let mut rotations: Vec<Option<LocalRotation>> = vec![None; n];
    for f in fields {
        let (key, value) = f
            .split_once('=')
            .ok_or_else(|| ParseError::syntax(line, format!("bad field {f:?}")))?;
        let v = key
            .trim()
            .strip_prefix("rot[")
            .and_then(|k| k.strip_suffix(']'))
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&v| (1..=n).contains(&v))
            .ok_or_else(|| ParseError::syntax(line, format!("bad vertex key {key:?}")))?;
        let mut rot = Vec::new();
        for tok in value.split_whitespace() {
            let (num, sign) = match tok.chars().last() {
                Some('+') => (&tok[..tok.len() - 1], Sign::Plus),
                Some('-') => (&tok[..tok.len() - 1], Sign::Minus),
                _ => return Err(ParseError::syntax(line, format!("dart {tok:?} lacks a sign"))),
            };
            let j = num
                .parse::<usize>()
                .ok()
                .filter(|&j| (1..=n).contains(&j))
                .ok_or_else(|| ParseError::syntax(line, format!("bad neighbour {num:?}")))?;
            rot.push((j - 1, sign));
        }
        if rotations[v - 1].replace(rot).is_some() {
            return Err(ParseError::syntax(line, format!("rot[{v}] given twice")));
        }
    }
    let got = rotations.iter().filter(|r| r.is_some()).count();
    let rotations: Option<Vec<_>> = rotations.into_iter().collect();
    let rotations = rotations.ok_or(CodeError::WrongVertexCount { expected: n, got })?;
    Ok(EmbeddingCode::normalized(n, rotations)?)
}

/// The map of a code. Vertex `i` contributes the cycle `C(i)` of its flags in
/// rotation order together with `αC(i)⁻¹α`.
pub fn decode(code: &EmbeddingCode) -> Map {
    let u = universe(code.n()).expect("codes have n >= 3");
    let p = Permutation::from_images_unchecked(code.rotation_images());
    validate_map(u.flags().clone(), p).expect("every embedding code decodes to a valid map")
}

/// Normalised local rotations at vertex `v`, in a fixed order: neighbour
/// orders lexicographically, and for each, sign patterns by binary counting.
/// Orientable kind yields only all-`+` rotations.
pub fn local_rotations(n: usize, v: usize, kind: SurfaceKind) -> Vec<LocalRotation> {
    let mut others: Vec<usize> = (0..n).filter(|&j| j != v).collect();
    let first = others.remove(0);
    let signed = kind != SurfaceKind::Orientable;
    let masks = if signed { 1usize << others.len() } else { 1 };
    let mut out = Vec::new();
    let mut perm = others.clone();
    loop {
        for mask in 0..masks {
            let mut rot = Vec::with_capacity(n - 1);
            rot.push((first, Sign::Plus));
            for (t, &j) in perm.iter().enumerate() {
                let sign = if mask >> (perm.len() - 1 - t) & 1 == 1 { Sign::Minus } else { Sign::Plus };
                rot.push((j, sign));
            }
            out.push(rot);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `(2^{n−2}(n−2)!)^n` for the signed carrier, `((n−2)!)^n` for all-`+` codes.
pub fn embedding_count(n: usize, kind: SurfaceKind) -> BigUint {
    let mut per_vertex = factorial(n - 2);
    if kind != SurfaceKind::Orientable {
        per_vertex <<= n - 2;
    }
    per_vertex.pow(n as u32)
}

/// Every normalised code once. `Orientable` yields the all-`+` codes; the
/// other kinds yield the full signed carrier (callers filter by surface).
/// The last vertex varies fastest.
pub fn enumerate_embeddings(n: usize, kind: SurfaceKind) -> Embeddings {
    Embeddings::new(n, kind, None)
}

/// The codes whose vertex-0 rotation is choice number `first` of
/// [`local_rotations`]; the partitions over all `first` cover the carrier.
pub fn enumerate_embeddings_from(n: usize, kind: SurfaceKind, first: usize) -> Embeddings {
    Embeddings::new(n, kind, Some(first))
}

pub struct Embeddings {
    n: usize,
    choices: Vec<Vec<LocalRotation>>,
    counter: Vec<usize>,
    done: bool,
}

impl Embeddings {
    fn new(n: usize, kind: SurfaceKind, first: Option<usize>) -> Self {
        assert!(n >= 3, "complete graphs need n >= 3");
        let mut choices: Vec<Vec<LocalRotation>> = (0..n).map(|v| local_rotations(n, v, kind)).collect();
        let mut done = false;
        if let Some(k) = first {
            if k < choices[0].len() {
                choices[0] = vec![choices[0][k].clone()];
            } else {
                done = true;
            }
        }
        Embeddings {
            n,
            counter: vec![0; n],
            choices,
            done,
        }
    }

    pub fn choices_per_vertex(&self) -> usize {
        self.choices[1].len()
    }
}

impl Iterator for Embeddings {
    type Item = EmbeddingCode;

    fn next(&mut self) -> Option<EmbeddingCode> {
        if self.done {
            return None;
        }
        let rotations = (0..self.n).map(|v| self.choices[v][self.counter[v]].clone()).collect();
        let mut v = self.n;
        loop {
            if v == 0 {
                self.done = true;
                break;
            }
            v -= 1;
            self.counter[v] += 1;
            if self.counter[v] < self.choices[v].len() {
                break;
            }
            self.counter[v] = 0;
        }
        Some(EmbeddingCode::from_parts_unchecked(self.n, rotations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::surface_of;
    use std::collections::HashSet;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_embeddings(4, SurfaceKind::Orientable).count(), 16);
        assert_eq!(enumerate_embeddings(4, SurfaceKind::LocallyOrientable).count(), 4096);
        assert_eq!(enumerate_embeddings(5, SurfaceKind::Orientable).count(), 7776);
        assert_eq!(embedding_count(4, SurfaceKind::LocallyOrientable), BigUint::from(4096u32));
        assert_eq!(embedding_count(5, SurfaceKind::Orientable), BigUint::from(7776u32));
        assert_eq!(local_rotations(5, 2, SurfaceKind::LocallyOrientable).len(), 48);
    }

    #[test]
    fn partitions_cover_the_carrier() {
        let k = local_rotations(4, 0, SurfaceKind::LocallyOrientable).len();
        let total: usize = (0..k)
            .map(|f| enumerate_embeddings_from(4, SurfaceKind::LocallyOrientable, f).count())
            .sum();
        assert_eq!(total, 4096);
        assert_eq!(enumerate_embeddings_from(4, SurfaceKind::Orientable, 99).count(), 0);
    }

    #[test]
    fn decode_is_injective_and_valid_at_four() {
        let mut seen = HashSet::new();
        for code in enumerate_embeddings(4, SurfaceKind::LocallyOrientable) {
            let m = decode(&code);
            assert!(seen.insert(m.rotation().clone()));
        }
        assert_eq!(seen.len(), 4096);
    }

    #[test]
    fn all_plus_codes_are_orientable() {
        for code in enumerate_embeddings(4, SurfaceKind::Orientable) {
            assert!(surface_of(&decode(&code)).unwrap().orientable);
        }
        let m = decode(&EmbeddingCode::all_plus_identity(4));
        assert!(surface_of(&m).unwrap().orientable);
    }

    #[test]
    fn normalisation() {
        let mut r = vec![(3, Sign::Plus), (0, Sign::Minus), (2, Sign::Plus)];
        normalize_local(&mut r);
        assert_eq!(r, vec![(0, Sign::Plus), (3, Sign::Minus), (2, Sign::Minus)]);
        let mut r = vec![(3, Sign::Plus), (0, Sign::Plus), (2, Sign::Minus)];
        normalize_local(&mut r);
        assert_eq!(r, vec![(0, Sign::Plus), (2, Sign::Minus), (3, Sign::Plus)]);
    }

    #[test]
    fn text_round_trip() {
        let code = EmbeddingCode::new(
            4,
            vec![
                vec![(1, Sign::Plus), (3, Sign::Minus), (2, Sign::Plus)],
                vec![(0, Sign::Plus), (2, Sign::Plus), (3, Sign::Plus)],
                vec![(0, Sign::Plus), (3, Sign::Plus), (1, Sign::Minus)],
                vec![(0, Sign::Plus), (1, Sign::Plus), (2, Sign::Plus)],
            ],
        )
        .unwrap();
        let text = code.to_text();
        assert_eq!(
            text,
            "kn v1; n=4; rot[1]=2+ 4- 3+; rot[2]=1+ 3+ 4+; rot[3]=1+ 4+ 2-; rot[4]=1+ 2+ 3+"
        );
        assert_eq!(parse_code(&text).unwrap(), code);
        assert!(parse_code("kn v1; n=4; rot[1]=2+ 3+").is_err());
        assert!(parse_code("kn v1; n=4; rot[1]=2+ 2+ 3+; rot[2]=1+ 3+ 4+; rot[3]=1+ 2+ 4+; rot[4]=1+ 2+ 3+").is_err());
    }

    #[test]
    fn unnormalised_codes_rejected() {
        let rots = vec![
            vec![(2, Sign::Plus), (1, Sign::Plus), (3, Sign::Plus)],
            vec![(0, Sign::Plus), (2, Sign::Plus), (3, Sign::Plus)],
            vec![(0, Sign::Plus), (1, Sign::Plus), (3, Sign::Plus)],
            vec![(0, Sign::Plus), (1, Sign::Plus), (2, Sign::Plus)],
        ];
        assert_eq!(
            EmbeddingCode::new(4, rots.clone()),
            Err(CodeError::NotNormalised { vertex: 0 })
        );
        assert!(EmbeddingCode::normalized(4, rots).is_ok());
    }
}
