//! Canonical form and chirality of oriented polytopes.
//!
//! The code of a polytope relative to a starting dart is the label stream of
//! a breadth-first traversal that enumerates each vertex's neighbors in
//! rotation order, anchored at the entry dart. Minimizing over all starting
//! darts gives a canonical form for one orientation class; walking the
//! rotations backwards gives the mirror class.

use serde::{Deserialize, Serialize};

use crate::polytope::Polytope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OrientationClass {
    AsGiven,
    Mirrored,
}

/// Canonical byte code; equal codes mean combinatorially equivalent with a
/// matching orientation class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub code: Vec<u8>,
    pub orientation_class: OrientationClass,
}

impl CanonicalCode {
    pub fn hex(&self) -> String {
        self.code.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn traversal_code(p: &Polytope, start_u: u32, start_v: u32, mirrored: bool) -> Vec<u32> {
    let f0 = p.f0();
    let rot = |v: u32, x: u32| if mirrored { p.rotate_inv(v, x) } else { p.rotate(v, x) };
    let mut label = vec![u32::MAX; f0];
    // entry[w] = the vertex from which w was first reached
    let mut entry = vec![u32::MAX; f0];
    let mut order: Vec<u32> = Vec::with_capacity(f0);
    let mut code: Vec<u32> = Vec::with_capacity(3 * f0);

    label[start_u as usize] = 0;
    order.push(start_u);
    let mut next_label = 1u32;
    let mut head = 0usize;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let anchor = if v == start_u { start_v } else { entry[v as usize] };
        let mut nbrs = [anchor, 0, 0];
        nbrs[1] = rot(v, nbrs[0]);
        nbrs[2] = rot(v, nbrs[1]);
        let emit = if v == start_u { &nbrs[..] } else { &nbrs[1..] };
        for &w in emit {
            if label[w as usize] == u32::MAX {
                label[w as usize] = next_label;
                next_label += 1;
                entry[w as usize] = v;
                order.push(w);
            }
            code.push(label[w as usize]);
        }
    }
    code
}

fn min_code(p: &Polytope, mirrored: bool) -> Vec<u32> {
    // every dart occurs exactly once as a consecutive facet pair
    let mut best: Option<Vec<u32>> = None;
    for f in p.facets() {
        for i in 0..f.len() {
            let u = f[i];
            let v = f[(i + 1) % f.len()];
            let c = traversal_code(p, u, v, mirrored);
            if best.as_ref().map_or(true, |m| c < *m) {
                best = Some(c);
            }
        }
    }
    best.unwrap()
}

fn encode(words: &[u32], f0: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + 4 * words.len());
    out.extend_from_slice(&(f0 as u32).to_le_bytes());
    for &w in words {
        out.extend_from_slice(&w.to_le_bytes());
    }
    out
}

/// Canonical code of `p`; with `allow_mirror` the code is also invariant
/// under orientation reversal, and `orientation_class` records which class
/// realized the minimum.
pub fn canonical_code(p: &Polytope, allow_mirror: bool) -> CanonicalCode {
    let plain = min_code(p, false);
    if !allow_mirror {
        return CanonicalCode { code: encode(&plain, p.f0()), orientation_class: OrientationClass::AsGiven };
    }
    let mirrored = min_code(p, true);
    if mirrored < plain {
        CanonicalCode { code: encode(&mirrored, p.f0()), orientation_class: OrientationClass::Mirrored }
    } else {
        CanonicalCode { code: encode(&plain, p.f0()), orientation_class: OrientationClass::AsGiven }
    }
}

/// Orientation-preserving equivalence.
pub fn equivalent(p: &Polytope, q: &Polytope) -> bool {
    min_code(p, false) == min_code(q, false)
}

/// Equivalence allowing orientation reversal (combinatorial equivalence).
pub fn equivalent_either_orientation(p: &Polytope, q: &Polytope) -> bool {
    canonical_code(p, true).code == canonical_code(q, true).code
}

/// A polytope is combinatorially chiral when no self-equivalence reverses
/// the orientation, i.e. its two orientation classes have distinct codes.
pub fn is_combinatorially_chiral(p: &Polytope) -> bool {
    min_code(p, false) != min_code(p, true)
}

/// Brute-force isomorphism search by propagating a dart-to-dart guess, used
/// as an independent oracle against the canonical code.
pub fn isomorphic_bruteforce(p: &Polytope, q: &Polytope) -> bool {
    if p.f0() != q.f0() || p.m() != q.m() {
        return false;
    }
    let pf = p.facet(0);
    let (a, b) = (pf[0], pf[1]);
    for f in q.facets() {
        for i in 0..f.len() {
            let u = f[i];
            let v = f[(i + 1) % f.len()];
            for (x, y) in [(u, v), (v, u)] {
                for mirrored in [false, true] {
                    if dart_map_extends(p, q, (a, b), (x, y), mirrored) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn dart_map_extends(p: &Polytope, q: &Polytope, pd: (u32, u32), qd: (u32, u32), mirrored: bool) -> bool {
    let f0 = p.f0();
    let mut map = vec![u32::MAX; f0];
    let mut inv = vec![u32::MAX; f0];
    let mut stack = vec![(pd, qd)];
    let assign = |map: &mut Vec<u32>, inv: &mut Vec<u32>, a: u32, b: u32| -> bool {
        if map[a as usize] == u32::MAX && inv[b as usize] == u32::MAX {
            map[a as usize] = b;
            inv[b as usize] = a;
            true
        } else {
            map[a as usize] == b
        }
    };
    if !assign(&mut map, &mut inv, pd.0, qd.0) || !assign(&mut map, &mut inv, pd.1, qd.1) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    while let Some(((a, b), (x, y))) = stack.pop() {
        if !seen.insert((a, b)) {
            continue;
        }
        // rotate both darts in step: successor neighbors around b and y
        let nb = p.rotate(b, a);
        let ny = if mirrored { q.rotate_inv(y, x) } else { q.rotate(y, x) };
        if !assign(&mut map, &mut inv, nb, ny) {
            return false;
        }
        stack.push(((b, nb), (y, ny)));
        stack.push(((b, a), (y, x)));
    }
    // verify the assembled bijection preserves edges
    if map.iter().any(|&v| v == u32::MAX) {
        return false;
    }
    for (u, v) in p.edges() {
        if !q.is_edge(map[u as usize], map[v as usize]) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::*;

    #[test]
    fn achiral_platonic_solids() {
        for p in [simplex(), cube(), dodecahedron()] {
            assert!(!is_combinatorially_chiral(&p));
        }
    }

    #[test]
    fn cube_equals_its_mirror_with_mirror_allowed() {
        let p = cube();
        let m = p.mirror();
        assert_eq!(canonical_code(&p, true).code, canonical_code(&m, true).code);
        assert!(equivalent_either_orientation(&p, &m));
    }

    #[test]
    fn barrel_and_dodecahedron_differ() {
        assert_ne!(
            canonical_code(&barrel(), true).code,
            canonical_code(&dodecahedron(), true).code
        );
    }

    #[test]
    fn code_is_relabeling_invariant() {
        use rand::{seq::SliceRandom, SeedableRng};
        let p = dodecahedron();
        let base = canonical_code(&p, false);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let mut perm: Vec<u32> = (0..p.f0() as u32).collect();
            perm.shuffle(&mut rng);
            let q = p.relabel_vertices(&perm).unwrap();
            assert_eq!(canonical_code(&q, false), base);
        }
    }

    #[test]
    fn double_mirror_restores_code() {
        let p = barrel();
        assert_eq!(
            canonical_code(&p.mirror().mirror(), false).code,
            canonical_code(&p, false).code
        );
    }

    #[test]
    fn bruteforce_agrees_with_code_on_small_cases() {
        let p = cube();
        let q = prism(4);
        assert!(isomorphic_bruteforce(&p, &q));
        assert!(!isomorphic_bruteforce(&cube(), &prism(5)));
        assert!(equivalent(&p, &q));
    }
}
