use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BetaVariant, CensusError, CensusReport, Method};
use crate::complete::SurfaceKind;
use crate::perm::{conjugacy_class_size, divisors, euler_phi, factorial, CycleType};

/// `n(n−3)/2k` for odd `k`, `n(n−2)/2k` for even `k`.
pub fn alpha_exponent(n: usize, k: usize) -> Result<u64, CensusError> {
    if k == 0 || n % k != 0 {
        return Err(CensusError::NotDivisor { k, n });
    }
    if n < 3 {
        return Err(CensusError::TooSmall(n));
    }
    let num = if k % 2 == 1 { n * (n - 3) } else { n * (n - 2) };
    exact(num, 2 * k, || format!("alpha({n},{k})"))
}

/// `(n−1)(n−2)/2k` (statement) or `(n−1)(n−4)/2k` (proof) for odd `k`, and
/// `(n−1)(n−3)/2k` for even `k` in both.
pub fn beta_exponent(n: usize, k: usize, variant: BetaVariant) -> Result<u64, CensusError> {
    if n < 4 {
        return Err(CensusError::TooSmall(n));
    }
    if k == 0 || (n - 1) % k != 0 {
        return Err(CensusError::NotDivisor { k, n: n - 1 });
    }
    let num = match (k % 2, variant) {
        (1, BetaVariant::Statement) => (n - 1) * (n - 2),
        (1, BetaVariant::Proof) => (n - 1) * (n - 4),
        _ => (n - 1) * (n - 3),
    };
    exact(num, 2 * k, || format!("beta({n},{k})"))
}

fn exact(num: usize, den: usize, what: impl FnOnce() -> String) -> Result<u64, CensusError> {
    if num % den != 0 {
        return Err(CensusError::NonIntegral { what: what() });
    }
    Ok((num / den) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaCounts {
    pub locally_orientable: BigUint,
    pub orientable: BigUint,
    pub non_orientable: BigUint,
}

impl FormulaCounts {
    pub fn get(&self, kind: SurfaceKind) -> &BigUint {
        match kind {
            SurfaceKind::Orientable => &self.orientable,
            SurfaceKind::NonOrientable => &self.non_orientable,
            SurfaceKind::LocallyOrientable => &self.locally_orientable,
        }
    }
}

/// The weight a `2^e` factor takes for each kind: `2^e`, `1` or `2^e − 1`.
fn weight(kind: SurfaceKind, e: u64) -> BigUint {
    let p = BigUint::one() << e;
    match kind {
        SurfaceKind::LocallyOrientable => p,
        SurfaceKind::Orientable => BigUint::one(),
        SurfaceKind::NonOrientable => p - 1u32,
    }
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn to_natural(r: BigRational, what: impl FnOnce() -> String) -> Result<BigUint, CensusError> {
    if !r.is_integer() || r.numer() < &BigInt::zero() {
        return Err(CensusError::NonIntegral { what: what() });
    }
    Ok(r.to_integer().to_biguint().expect("non-negative"))
}

fn closed_form(n: usize, kind: SurfaceKind, variant: BetaVariant) -> Result<BigRational, CensusError> {
    let f = factorial(n - 2);
    let mut first = BigRational::zero();
    for k in divisors(n) {
        let q = n / k;
        let a = alpha_exponent(n, k)?;
        let term = ratio(
            weight(kind, a) * f.pow(q as u32),
            BigUint::from(k).pow(q as u32) * factorial(q),
        );
        let copies = if k % 2 == 0 { 2u32 } else { 1 };
        first += term * BigRational::from_integer(BigInt::from(copies));
    }
    first /= BigRational::from_integer(BigInt::from(2u32));
    let mut second = BigRational::zero();
    for k in divisors(n - 1).into_iter().filter(|&k| k != 1) {
        let q = (n - 1) / k;
        let b = beta_exponent(n, k, variant)?;
        second += ratio(
            BigUint::from(euler_phi(k as u64)) * weight(kind, b) * f.pow(q as u32),
            BigUint::from(n - 1),
        );
    }
    Ok(first + second)
}

/// The closed forms evaluated exactly, before any integrality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaValues {
    pub locally_orientable: BigRational,
    pub orientable: BigRational,
    pub non_orientable: BigRational,
}

impl FormulaValues {
    pub fn get(&self, kind: SurfaceKind) -> &BigRational {
        match kind {
            SurfaceKind::Orientable => &self.orientable,
            SurfaceKind::NonOrientable => &self.non_orientable,
            SurfaceKind::LocallyOrientable => &self.locally_orientable,
        }
    }
}

pub fn formula_values(n: usize, variant: BetaVariant) -> Result<FormulaValues, CensusError> {
    if n < 4 {
        return Err(CensusError::TooSmall(n));
    }
    if n == 4 {
        let int = |v: u32| BigRational::from_integer(BigInt::from(v));
        return Ok(FormulaValues {
            locally_orientable: int(11),
            orientable: int(3),
            non_orientable: int(8),
        });
    }
    Ok(FormulaValues {
        locally_orientable: closed_form(n, SurfaceKind::LocallyOrientable, variant)?,
        orientable: closed_form(n, SurfaceKind::Orientable, variant)?,
        non_orientable: closed_form(n, SurfaceKind::NonOrientable, variant)?,
    })
}

/// The three closed-form counts. For `n = 4` the values are fixed at
/// 11, 3 and 8. Fails when a value is not an integer.
pub fn formula_counts(n: usize, variant: BetaVariant) -> Result<FormulaCounts, CensusError> {
    let v = formula_values(n, variant)?;
    let get = |kind: SurfaceKind| {
        let x = v.get(kind);
        to_natural(x.clone(), || {
            format!("closed form for n = {n}, {kind}, beta {variant} ({})", show_ratio(x))
        })
    };
    Ok(FormulaCounts {
        locally_orientable: get(SurfaceKind::LocallyOrientable)?,
        orientable: get(SurfaceKind::Orientable)?,
        non_orientable: get(SurfaceKind::NonOrientable)?,
    })
}

/// The closed form for one kind as a report. A fractional value comes back
/// as `NonIntegerOrbitCount` carrying the report with the integer part.
pub fn formula_report(n: usize, kind: SurfaceKind, variant: BetaVariant) -> Result<CensusReport, CensusError> {
    let v = formula_values(n, variant)?;
    let x = v.get(kind);
    let mut report = CensusReport::new(n, kind, Method::Formula, variant);
    let (numer, denom) = (x.numer().to_biguint(), x.denom().to_biguint());
    let (Some(numer), Some(denom)) = (numer, denom) else {
        return Err(CensusError::NonIntegral {
            what: format!("closed form for n = {n}, {kind} ({})", show_ratio(x)),
        });
    };
    let (count, remainder) = numer.div_rem(&denom);
    report.count = count;
    if n == 4 {
        report.notes.push("n = 4 values are fixed, the closed forms start at n = 5".into());
    }
    if remainder.is_zero() {
        return Ok(report);
    }
    report.notes.push(format!("closed form evaluates to {}", show_ratio(x)));
    Err(CensusError::NonIntegerOrbitCount {
        report: Box::new(report),
        remainder,
    })
}

/// Closed-form fixed count of one class.
///
/// `[k^{n/k}]` (and its reversing companion for even `k`) gets
/// `w(α(n,k))·(n−2)!^{n/k}`. `[1, k^{(n−1)/k}]` gets
/// `w(β(n,k))·(n−2)!^{(n−1)/k}·2φ(k)(n−2)!/|C|` where `C` is the class of
/// type `[k^{(n−1)/k}]` in the symmetric group on `n−1` letters. Here `w(e)`
/// is `2^e`, `1` or `2^e − 1` for the three kinds.
pub fn fixed_count_formula(
    n: usize,
    class: &CycleType,
    reversing: bool,
    kind: SurfaceKind,
    variant: BetaVariant,
) -> Result<BigUint, CensusError> {
    if n < 4 {
        return Err(CensusError::TooSmall(n));
    }
    if class.total() != n {
        return Err(CensusError::NotDivisor { k: class.total(), n });
    }
    let parts = class.parts();
    let f = factorial(n - 2);
    let inadmissible = || CensusError::Inadmissible {
        class: class.clone(),
        reversing,
    };
    if parts.iter().all(|&p| p == parts[0]) {
        let k = parts[0];
        if reversing && k % 2 == 1 {
            return Err(inadmissible());
        }
        let a = alpha_exponent(n, k)?;
        return Ok(weight(kind, a) * f.pow((n / k) as u32));
    }
    let rest = &parts[1..];
    if parts[0] == 1 && rest.iter().all(|&p| p == rest[0]) {
        if reversing {
            if n == 4 && parts == [1, 1, 2] {
                return Err(CensusError::NoClosedForm {
                    class: class.clone(),
                    reversing,
                });
            }
            return Err(inadmissible());
        }
        let k = rest[0];
        let q = (n - 1) / k;
        let b = beta_exponent(n, k, variant)?;
        let sub = conjugacy_class_size(&CycleType::uniform(k, q));
        let tail = ratio(BigUint::from(2 * euler_phi(k as u64)) * &f, sub);
        let value = BigRational::from_integer(BigInt::from(weight(kind, b) * f.pow(q as u32))) * tail;
        return to_natural(value, || format!("fixed count of {class} at n = {n}"));
    }
    if reversing && n == 4 && parts == [1, 1, 2] {
        return Err(CensusError::NoClosedForm {
            class: class.clone(),
            reversing,
        });
    }
    Err(inadmissible())
}

/// The trailing factor of the `[1, k^{(n−1)/k}]` fixed count with the class
/// size taken in the full symmetric group on `n` letters instead. Kept for
/// reporting; it is usually not an integer.
pub fn printed_tail_factor(n: usize, k: usize) -> Result<BigRational, CensusError> {
    if n < 4 {
        return Err(CensusError::TooSmall(n));
    }
    if k < 2 || (n - 1) % k != 0 {
        return Err(CensusError::NotDivisor { k, n: n - 1 });
    }
    let mut parts = vec![1];
    parts.extend(std::iter::repeat(k).take((n - 1) / k));
    let class = CycleType::new(parts).expect("valid parts");
    Ok(ratio(
        BigUint::from(2 * euler_phi(k as u64)) * factorial(n - 2),
        conjugacy_class_size(&class),
    ))
}

/// Small helper for reports: a rational as `p/q` or an integer.
pub(crate) fn show_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
