use super::SurfaceKind;
use crate::error::CodeError;
use crate::perm::{divisors, CycleType};

/// Vertex classes `(cycle type, reversing)` for which a stable embedding of
/// `K_n` exists, sorted with non-reversing classes first.
///
/// Non-reversing: `[s^{n/s}]` for `s | n` and `[1, s^{(n−1)/s}]` for
/// `s | n−1`. Reversing: `[(2s)^{n/2s}]` for `2s | n`, plus `[1,1,2]` when
/// `n = 4`. The same list is returned for every surface kind.
pub fn admissible_classes(n: usize, _kind: SurfaceKind) -> Result<Vec<(CycleType, bool)>, CodeError> {
    if n < 4 {
        return Err(CodeError::TooSmall(n));
    }
    let mut out = Vec::new();
    for s in divisors(n) {
        out.push((CycleType::uniform(s, n / s), false));
    }
    for s in divisors(n - 1) {
        if s > 1 {
            out.push((CycleType::one_plus_uniform(s, (n - 1) / s), false));
        }
    }
    for s in divisors(n) {
        if s % 2 == 0 {
            out.push((CycleType::uniform(s, n / s), true));
        }
    }
    if n == 4 {
        out.push((CycleType::new(vec![1, 1, 2]).expect("valid parts"), true));
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out.dedup();
    Ok(out)
}
