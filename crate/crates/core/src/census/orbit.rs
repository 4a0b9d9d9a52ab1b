use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{BetaVariant, CensusError, CensusReport, Method};
use crate::complete::{decode, local_rotations, EmbeddingCode, LocalRotation, Sign, SurfaceKind};
use crate::map::{canonical_form, orientation_preserving_automorphisms, surface_of, SurfaceType};

/// Codes an orbit count may decode without the long-run flag.
pub const DEFAULT_ORBIT_BUDGET: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitOptions {
    pub long_run: bool,
    pub budget: u64,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            long_run: false,
            budget: DEFAULT_ORBIT_BUDGET,
        }
    }
}

/// A set of codes that meets every isomorphism class, indexed densely.
enum Carrier {
    /// Every normalised code, mixed radix with the last vertex fastest.
    Codes { n: usize, choices: Vec<Vec<LocalRotation>> },
    /// One code per twist class: each vertex takes one cyclic order per
    /// reversal pair, and every edge is either plain or twisted.
    Twist { n: usize, orders: Vec<Vec<Vec<usize>>>, edges: Vec<(usize, usize)> },
}

impl Carrier {
    fn new(n: usize, kind: SurfaceKind) -> Carrier {
        match kind {
            SurfaceKind::Orientable => Carrier::Codes {
                n,
                choices: (0..n).map(|v| local_rotations(n, v, kind)).collect(),
            },
            _ if n <= 4 => Carrier::Codes {
                n,
                choices: (0..n).map(|v| local_rotations(n, v, SurfaceKind::LocallyOrientable)).collect(),
            },
            _ => Carrier::twist(n),
        }
    }

    fn twist(n: usize) -> Carrier {
        let orders = (0..n)
            .map(|v| {
                local_rotations(n, v, SurfaceKind::Orientable)
                    .into_iter()
                    .map(|r| r.into_iter().map(|(j, _)| j).collect::<Vec<_>>())
                    .filter(|r| r[1] < r[r.len() - 1])
                    .collect()
            })
            .collect();
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Carrier::Twist { n, orders, edges }
    }

    fn size(&self) -> u128 {
        match self {
            Carrier::Codes { choices, .. } => choices.iter().map(|c| c.len() as u128).product(),
            Carrier::Twist { orders, edges, .. } => {
                orders.iter().map(|c| c.len() as u128).product::<u128>() << edges.len()
            }
        }
    }

    fn code(&self, mut idx: u128) -> EmbeddingCode {
        match self {
            Carrier::Codes { n, choices } => {
                let mut rot = vec![Vec::new(); *n];
                for v in (0..*n).rev() {
                    let k = choices[v].len() as u128;
                    rot[v] = choices[v][(idx % k) as usize].clone();
                    idx /= k;
                }
                EmbeddingCode::new(*n, rot).expect("normalised choices")
            }
            Carrier::Twist { n, orders, edges } => {
                let twists = idx & ((1u128 << edges.len()) - 1);
                idx >>= edges.len();
                let mut rot: Vec<LocalRotation> = vec![Vec::new(); *n];
                for v in (0..*n).rev() {
                    let k = orders[v].len() as u128;
                    rot[v] = orders[v][(idx % k) as usize].iter().map(|&j| (j, Sign::Plus)).collect();
                    idx /= k;
                }
                for (e, &(_, b)) in edges.iter().enumerate() {
                    if twists >> e & 1 == 1 {
                        let a = edges[e].0;
                        for entry in rot[b].iter_mut() {
                            if entry.0 == a {
                                entry.1 = Sign::Minus;
                            }
                        }
                    }
                }
                EmbeddingCode::normalized(*n, rot).expect("complete rotations")
            }
        }
    }

    fn describe(&self) -> String {
        match self {
            Carrier::Codes { .. } => format!("{} normalised codes", self.size()),
            Carrier::Twist { .. } => format!("{} twist-class representatives", self.size()),
        }
    }
}

/// One isomorphism class: its canonical form, the first code (in carrier
/// order) that realises it, and its surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapClass {
    pub form: Vec<u8>,
    pub code: EmbeddingCode,
    pub surface: SurfaceType,
}

fn check_budget(carrier: &Carrier, opts: &OrbitOptions) -> Result<(), CensusError> {
    if !opts.long_run && carrier.size() > opts.budget as u128 {
        return Err(CensusError::Budget {
            required: BigUint::from(carrier.size()),
            budget: opts.budget,
        });
    }
    Ok(())
}

/// Isomorphism classes (mirror images identified) of embeddings of the
/// given kind, sorted by surface and then by representative code.
pub fn isomorphism_classes(n: usize, kind: SurfaceKind, opts: &OrbitOptions) -> Result<Vec<MapClass>, CensusError> {
    if n < 3 {
        return Err(CensusError::TooSmall(n));
    }
    let carrier = Carrier::new(n, kind);
    check_budget(&carrier, opts)?;
    let size = carrier.size();
    let chunk = 4096u128;
    let chunks = size.div_ceil(chunk);
    let found: HashMap<Vec<u8>, (u128, SurfaceType)> = (0..chunks)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Vec<u8>, (u128, SurfaceType)>, c| {
            for idx in c * chunk..((c + 1) * chunk).min(size) {
                let m = decode(&carrier.code(idx));
                let surface = surface_of(&m).expect("decoded maps are valid");
                if !kind.admits(surface.orientable) {
                    continue;
                }
                acc.entry(canonical_form(&m))
                    .and_modify(|e| e.0 = e.0.min(idx))
                    .or_insert((idx, surface));
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (form, (idx, s)) in b {
                a.entry(form).and_modify(|e| e.0 = e.0.min(idx)).or_insert((idx, s));
            }
            a
        });
    let mut classes: Vec<(u128, MapClass)> = found
        .into_iter()
        .map(|(form, (idx, surface))| {
            (
                idx,
                MapClass {
                    form,
                    code: carrier.code(idx),
                    surface,
                },
            )
        })
        .collect();
    classes.sort_by(|a, b| surface_key(&a.1.surface).cmp(&surface_key(&b.1.surface)).then(a.0.cmp(&b.0)));
    Ok(classes.into_iter().map(|(_, c)| c).collect())
}

fn surface_key(s: &SurfaceType) -> (bool, u64) {
    (!s.orientable, s.genus_or_crosscap)
}

/// Number of isomorphism classes by canonical forms.
pub fn orbit_count(n: usize, kind: SurfaceKind, opts: &OrbitOptions) -> Result<CensusReport, CensusError> {
    if n < 4 {
        return Err(CensusError::TooSmall(n));
    }
    let mut report = CensusReport::new(n, kind, Method::Orbit, BetaVariant::Proof);
    let carrier = Carrier::new(n, kind);
    report.notes.push(format!("carrier: {}", carrier.describe()));
    let classes = isomorphism_classes(n, kind, opts)?;
    report.count = BigUint::from(classes.len());
    if kind == SurfaceKind::NonOrientable {
        let all = isomorphism_classes(n, SurfaceKind::LocallyOrientable, opts)?.len();
        let orientable = isomorphism_classes(n, SurfaceKind::Orientable, opts)?.len();
        report.notes.push(format!(
            "direct tally {}; locally orientable minus orientable {} - {} = {}",
            classes.len(),
            all,
            orientable,
            all - orientable
        ));
    }
    Ok(report)
}

fn histogram(surfaces: impl IntoIterator<Item = SurfaceType>) -> Vec<(SurfaceType, u64)> {
    let mut h: BTreeMap<(bool, u64), (SurfaceType, u64)> = BTreeMap::new();
    for s in surfaces {
        h.entry(surface_key(&s)).or_insert((s, 0)).1 += 1;
    }
    h.into_values().collect()
}

/// Isomorphism classes per surface.
pub fn genus_distribution(
    n: usize,
    kind: SurfaceKind,
    opts: &OrbitOptions,
) -> Result<Vec<(SurfaceType, u64)>, CensusError> {
    Ok(histogram(isomorphism_classes(n, kind, opts)?.into_iter().map(|c| c.surface)))
}

/// Labelled codes per surface, before any quotient.
pub fn labeled_surface_tally(
    n: usize,
    kind: SurfaceKind,
    opts: &OrbitOptions,
) -> Result<Vec<(SurfaceType, u64)>, CensusError> {
    let carrier = Carrier::Codes {
        n,
        choices: (0..n)
            .map(|v| {
                let k = if kind == SurfaceKind::Orientable { kind } else { SurfaceKind::LocallyOrientable };
                local_rotations(n, v, k)
            })
            .collect(),
    };
    check_budget(&carrier, opts)?;
    let surfaces: Vec<SurfaceType> = (0..carrier.size())
        .into_par_iter()
        .map(|i| surface_of(&decode(&carrier.code(i))).expect("valid map"))
        .filter(|s| kind.admits(s.orientable))
        .collect();
    Ok(histogram(surfaces))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiggsRow {
    pub code: EmbeddingCode,
    pub surface: SurfaceType,
    pub preserving_order: usize,
    pub divides: bool,
}

/// Order of the orientation-preserving automorphism group of every
/// orientable class, and whether it divides `n(n−1)`.
pub fn biggs_check(n: usize, opts: &OrbitOptions) -> Result<Vec<BiggsRow>, CensusError> {
    let classes = isomorphism_classes(n, SurfaceKind::Orientable, opts)?;
    Ok(classes
        .into_par_iter()
        .map(|c| {
            let order = orientation_preserving_automorphisms(&decode(&c.code)).len();
            BiggsRow {
                code: c.code,
                surface: c.surface,
                preserving_order: order,
                divides: (n * (n - 1)) % order == 0,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::find_isomorphism;
    use crate::ModeFilter;

    fn count(n: usize, kind: SurfaceKind) -> usize {
        isomorphism_classes(n, kind, &OrbitOptions::default()).unwrap().len()
    }

    #[test]
    fn four() {
        assert_eq!(count(4, SurfaceKind::Orientable), 3);
        assert_eq!(count(4, SurfaceKind::LocallyOrientable), 11);
        assert_eq!(count(4, SurfaceKind::NonOrientable), 8);
    }

    #[test]
    fn twist_carrier_agrees_at_four() {
        let carrier = Carrier::twist(4);
        assert_eq!(carrier.size(), 64);
        let mut forms: Vec<Vec<u8>> = (0..64).map(|i| canonical_form(&decode(&carrier.code(i)))).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let classes = isomorphism_classes(4, SurfaceKind::LocallyOrientable, &OrbitOptions::default()).unwrap();
        let maps: Vec<_> = classes.iter().map(|c| decode(&c.code)).collect();
        for i in 0..maps.len() {
            for j in i + 1..maps.len() {
                assert!(find_isomorphism(&maps[i], &maps[j], ModeFilter::Either).is_none());
            }
        }
    }

    #[test]
    fn distributions_at_four() {
        let opts = OrbitOptions::default();
        let d = genus_distribution(4, SurfaceKind::Orientable, &opts).unwrap();
        let labels: Vec<(String, u64)> = d.iter().map(|(s, c)| (s.label(), *c)).collect();
        assert_eq!(labels, [("S0".to_string(), 1), ("S1".to_string(), 2)]);
        let t = labeled_surface_tally(4, SurfaceKind::Orientable, &opts).unwrap();
        let labels: Vec<(String, u64)> = t.iter().map(|(s, c)| (s.label(), *c)).collect();
        assert_eq!(labels, [("S0".to_string(), 2), ("S1".to_string(), 14)]);
        let n = genus_distribution(4, SurfaceKind::NonOrientable, &opts).unwrap();
        assert_eq!(n.iter().map(|(_, c)| c).sum::<u64>(), 8);
    }

    #[test]
    fn budget_is_enforced() {
        let opts = OrbitOptions { long_run: false, budget: 10 };
        assert!(matches!(
            isomorphism_classes(4, SurfaceKind::Orientable, &opts),
            Err(CensusError::Budget { .. })
        ));
        assert!(matches!(
            isomorphism_classes(5, SurfaceKind::LocallyOrientable, &OrbitOptions::default()),
            Err(CensusError::Budget { .. })
        ));
    }

    #[test]
    fn biggs_at_four() {
        let rows = biggs_check(4, &OrbitOptions::default()).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.divides));
    }
}
