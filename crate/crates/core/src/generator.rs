//! Enumeration of the singular-fullerene family from the dodecahedron by
//! the seven admissible truncations, with canonical-form deduplication.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::belts::{classify, has_4belt_not_surrounding_quad, ClassKind};
use crate::canonical::canonical_code;
use crate::polytope::{dodecahedron, Polytope};
use crate::transform::{chamfer, leapfrog, sk_truncate, TruncationSpec};

/// The seven admissible signatures: s = 1 with flank gonalities {4,5} or
/// {5,5}, and s = 2 on a hexagon or heptagon with the listed flanks.
pub fn signature_allowed(s: usize, k: usize, m1: usize, m2: usize) -> bool {
    let fl = (m1.min(m2), m1.max(m2));
    match s {
        1 => matches!(fl, (4, 5) | (5, 5)),
        2 if k == 6 => matches!(fl, (4, 5) | (5, 5) | (5, 6)),
        2 if k == 7 => matches!(fl, (5, 5) | (5, 6)),
        _ => false,
    }
}

/// All specs carrying one of the seven signatures, before applying them.
pub fn seven_signature_specs(p: &Polytope) -> Vec<TruncationSpec> {
    let mut out = Vec::new();
    // s = 1: one spec per edge (either containing facet gives the same
    // result); anchor on the facet holding the normalized dart
    for (u, v) in p.edges() {
        let (facet, pos) = p.dart_facet(u, v).unwrap();
        let spec = TruncationSpec { facet, start: pos, len: 1 };
        let (m1, m2) = spec.flank_gonalities(p);
        if signature_allowed(1, p.gonality(facet), m1, m2) {
            out.push(spec);
        }
    }
    // s = 2: anchored runs on hexagons and heptagons
    for facet in 0..p.m() {
        let k = p.gonality(facet);
        if k != 6 && k != 7 {
            continue;
        }
        for start in 0..k {
            let spec = TruncationSpec { facet, start, len: 2 };
            let (m1, m2) = spec.flank_gonalities(p);
            if signature_allowed(2, k, m1, m2) {
                out.push(spec);
            }
        }
    }
    out
}

/// Specs of the seven signatures whose image classifies back into the
/// singular-fullerene family.
pub fn applicable_truncations(p: &Polytope) -> Vec<TruncationSpec> {
    seven_signature_specs(p)
        .into_iter()
        .filter(|spec| {
            let (q, _) = sk_truncate(p, spec).expect("seven-signature specs are valid");
            classify(&q).kind != ClassKind::NonMember
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenerationCatalog {
    /// isomer counts per p6 (densely keyed 0..=p6_max)
    pub counts: BTreeMap<usize, usize>,
    /// canonical codes of the fullerenes per p6, sorted
    #[serde(skip)]
    pub fullerenes: BTreeMap<usize, Vec<Polytope>>,
    pub mirror_identified: bool,
}

/// Breadth-first generation from the dodecahedron. Every intermediate is a
/// family member; each truncation adds one facet, so levels are facet
/// counts. Fullerenes with p6 <= p6_max are collected; `chiral` switches to
/// orientation-sensitive counting.
pub fn generate(p6_max: usize, chiral: bool) -> GenerationCatalog {
    let allow_mirror = !chiral;
    let max_m = 12 + p6_max;
    let seed = dodecahedron();
    let seed_code = canonical_code(&seed, allow_mirror).code;

    let mut counts: BTreeMap<usize, usize> = (0..=p6_max).map(|k| (k, 0)).collect();
    let mut fullerenes: BTreeMap<usize, Vec<Polytope>> = BTreeMap::new();
    let mut level: Vec<(Vec<u8>, Polytope)> = vec![(seed_code, seed)];

    record_fullerenes(&level, &mut counts, &mut fullerenes, p6_max);
    while !level.is_empty() && level[0].1.m() < max_m {
        let children: Vec<(Vec<u8>, Polytope)> = level
            .par_iter()
            .flat_map_iter(|(_, p)| {
                let specs = seven_signature_specs(p);
                let mut out = Vec::new();
                for spec in specs {
                    let (q, _) = sk_truncate(p, &spec).expect("valid spec");
                    let cls = classify(&q);
                    if cls.kind == ClassKind::NonMember {
                        continue;
                    }
                    assert!(
                        !has_4belt_not_surrounding_quad(&q),
                        "family member grew a stray 4-belt"
                    );
                    let code = canonical_code(&q, allow_mirror).code;
                    out.push((code, q));
                }
                out
            })
            .collect();
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next: Vec<(Vec<u8>, Polytope)> = Vec::new();
        for (code, q) in children {
            if seen.insert(code.clone()) {
                next.push((code, q));
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        record_fullerenes(&next, &mut counts, &mut fullerenes, p6_max);
        level = next;
    }
    GenerationCatalog { counts, fullerenes, mirror_identified: allow_mirror }
}

fn record_fullerenes(
    level: &[(Vec<u8>, Polytope)],
    counts: &mut BTreeMap<usize, usize>,
    fullerenes: &mut BTreeMap<usize, Vec<Polytope>>,
    p6_max: usize,
) {
    for (_, p) in level {
        if classify(p).kind == ClassKind::Fullerene {
            let p6 = p.p_vector().get(6);
            if p6 <= p6_max {
                *counts.get_mut(&p6).unwrap() += 1;
                fullerenes.entry(p6).or_default().push(p.clone());
            }
        }
    }
}

/// The two hexagon-inserting iterations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IterOp {
    /// chamfer, p6 -> p6 + f1
    T1,
    /// leapfrog, p6 -> p6 + f0
    T2,
}

/// Fold a word over {T1, T2} starting from the dodecahedron.
pub fn icosahedral_word(word: &[IterOp]) -> Polytope {
    let mut p = dodecahedron();
    for op in word {
        p = match op {
            IterOp::T1 => chamfer(&p),
            IterOp::T2 => leapfrog(&p),
        };
    }
    p
}

/// Stable map from canonical codes to indices, for emitting catalogs.
pub fn code_index(catalog: &GenerationCatalog) -> HashMap<Vec<u8>, (usize, usize)> {
    let mut out = HashMap::new();
    for (&p6, polys) in &catalog.fullerenes {
        for (i, p) in polys.iter().enumerate() {
            out.insert(canonical_code(p, catalog.mirror_identified).code, (p6, i));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::equivalent_either_orientation;
    use crate::polytope::{barrel, c60};

    #[test]
    fn dodecahedron_offers_only_pentagon_pair_edge_truncations() {
        let p = dodecahedron();
        let specs = seven_signature_specs(&p);
        assert_eq!(specs.len(), p.f1());
        assert!(specs.iter().all(|s| s.len == 1 && s.flank_gonalities(&p) == (5, 5)));
        // and they all stay in the family
        assert_eq!(applicable_truncations(&p).len(), p.f1());
    }

    #[test]
    fn counts_up_to_four() {
        let cat = generate(4, false);
        let expect: Vec<(usize, usize)> = vec![(0, 1), (1, 0), (2, 1), (3, 1), (4, 2)];
        let got: Vec<(usize, usize)> = cat.counts.iter().map(|(&a, &b)| (a, b)).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn unique_p6_2_isomer_is_the_barrel() {
        let cat = generate(2, false);
        let isomers = &cat.fullerenes[&2];
        assert_eq!(isomers.len(), 1);
        assert!(equivalent_either_orientation(&isomers[0], &barrel()));
    }

    #[test]
    fn icosahedral_words() {
        let w2 = icosahedral_word(&[IterOp::T2]);
        assert!(equivalent_either_orientation(&w2, &c60()));
        let w1 = icosahedral_word(&[IterOp::T1]);
        assert_eq!(w1.p_vector().get(6), 30);
        assert_eq!(w1.f0(), 80);
    }
}
