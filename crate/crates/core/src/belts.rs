//! k-belts, flagness, fullerene classification and zigzag cycles.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::canonical::equivalent_either_orientation;
use crate::polytope::{d_k, Polytope};

/// A k-belt: a cyclic facet sequence where exactly the consecutive pairs
/// intersect (in edges) and the total intersection is empty. Stored in
/// canonical rotation: minimal facet first, smaller neighbor second.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Belt {
    pub facets: Vec<u32>,
}

impl Belt {
    pub fn new(facets: Vec<u32>) -> Self {
        Belt { facets: canonical_rotation(&facets) }
    }
    pub fn k(&self) -> usize {
        self.facets.len()
    }
    pub fn omega(&self) -> Vec<u32> {
        let mut w = self.facets.clone();
        w.sort_unstable();
        w
    }
}

fn canonical_rotation(seq: &[u32]) -> Vec<u32> {
    let k = seq.len();
    let mut best: Option<Vec<u32>> = None;
    for rev in [false, true] {
        let base: Vec<u32> = if rev { seq.iter().rev().copied().collect() } else { seq.to_vec() };
        for r in 0..k {
            let cand: Vec<u32> = (0..k).map(|i| base[(r + i) % k]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Do the three pairwise-adjacent facets share a vertex?
fn triple_has_common_vertex(p: &Polytope, a: usize, b: usize, c: usize) -> bool {
    if let Some((u, v)) = p.shared_edge(a, b) {
        let c32 = c as u32;
        p.vertex_facets(u).contains(&c32) || p.vertex_facets(v).contains(&c32)
    } else {
        false
    }
}

/// All k-belts, each once in canonical rotation, ascending.
pub fn k_belts(p: &Polytope, k: usize) -> Vec<Belt> {
    assert!((3..=p.m()).contains(&k), "k out of range");
    let m = p.m();
    let mut adj: Vec<Vec<usize>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut n = p.facet_neighbors(i);
        n.sort_unstable();
        n.dedup();
        adj.push(n);
    }
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::with_capacity(k);
    for a in 0..m {
        path.push(a);
        extend_belts(p, &adj, k, &mut path, &mut out);
        path.pop();
    }
    out.sort_unstable();
    out
}

fn extend_belts(p: &Polytope, adj: &[Vec<usize>], k: usize, path: &mut Vec<usize>, out: &mut Vec<Belt>) {
    let a = path[0];
    let i = path.len();
    let last = path[i - 1];
    for &f in &adj[last] {
        if f <= a || path.contains(&f) {
            continue;
        }
        if i == k - 1 {
            // closing facet: adjacent to the start, disjoint from the middle
            if !adj[f].contains(&a) {
                continue;
            }
            if path[1..i].iter().any(|&g| g != last && adj[f].contains(&g)) {
                continue;
            }
            // reflection dedup
            if path.len() >= 2 && path[1] > f {
                continue;
            }
            if k == 3 && triple_has_common_vertex(p, a, path[1], f) {
                continue;
            }
            let mut facets: Vec<u32> = path.iter().map(|&x| x as u32).collect();
            facets.push(f as u32);
            out.push(Belt { facets });
        } else {
            // middle facet: disjoint from everything before its predecessor
            if path[..i - 1].iter().any(|&g| adj[f].contains(&g)) {
                continue;
            }
            path.push(f);
            extend_belts(p, adj, k, path, out);
            path.pop();
        }
    }
}

/// Brute-force belt enumeration over all k-subsets and cyclic orders; the
/// independent oracle for `k_belts` at small m.
pub fn k_belts_bruteforce(p: &Polytope, k: usize) -> Vec<Belt> {
    let m = p.m();
    let adj = |x: usize, y: usize| p.adjacent_facets(x, y);
    let mut found: HashSet<Vec<u32>> = HashSet::new();
    let mut subset: Vec<usize> = Vec::new();
    fn rec(
        p: &Polytope,
        k: usize,
        start: usize,
        subset: &mut Vec<usize>,
        adj: &dyn Fn(usize, usize) -> bool,
        found: &mut HashSet<Vec<u32>>,
    ) {
        if subset.len() == k {
            // try every cyclic order of the subset
            let mut perm: Vec<usize> = (1..k).collect();
            permute_orders(&mut perm, 0, &mut |order: &[usize]| {
                let seq: Vec<usize> =
                    std::iter::once(subset[0]).chain(order.iter().map(|&i| subset[i])).collect();
                let is_belt = (0..k).all(|i| {
                    let a = seq[i];
                    let b = seq[(i + 1) % k];
                    adj(a, b)
                }) && (0..k).all(|i| {
                    (i + 2..k)
                        .filter(|&j| !(i == 0 && j == k - 1))
                        .all(|j| !adj(seq[i], seq[j]))
                });
                if is_belt {
                    let total_ok = if k == 3 {
                        !triple_has_common_vertex(p, seq[0], seq[1], seq[2])
                    } else {
                        true
                    };
                    if total_ok {
                        found.insert(canonical_rotation(&seq.iter().map(|&x| x as u32).collect::<Vec<_>>()));
                    }
                }
            });
            return;
        }
        for x in start..p.m() {
            subset.push(x);
            rec(p, k, x + 1, subset, adj, found);
            subset.pop();
        }
    }
    fn permute_orders(perm: &mut Vec<usize>, at: usize, f: &mut dyn FnMut(&[usize])) {
        if at == perm.len() {
            f(perm);
            return;
        }
        for i in at..perm.len() {
            perm.swap(at, i);
            permute_orders(perm, at + 1, f);
            perm.swap(at, i);
        }
    }
    let _ = m;
    rec(p, k, 0, &mut subset, &adj, &mut found);
    let mut out: Vec<Belt> = found.into_iter().map(|facets| Belt { facets }).collect();
    out.sort_unstable();
    out
}

/// A simple 3-polytope is flag iff it is not the simplex and has no 3-belt.
pub fn is_flag(p: &Polytope) -> bool {
    p.m() > 4 && k_belts(p, 3).is_empty()
}

/// Whether the facets around facet `i` form a belt.
pub fn facet_surrounded_by_belt(p: &Polytope, i: usize) -> bool {
    let ring = p.facet_neighbors(i);
    let k = ring.len();
    let mut distinct = ring.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != k {
        return false;
    }
    for a in 0..k {
        for b in a + 1..k {
            let consecutive = b == a + 1 || (a == 0 && b == k - 1);
            if !consecutive && p.adjacent_facets(ring[a], ring[b]) {
                return false;
            }
        }
    }
    if k == 3 && triple_has_common_vertex(p, ring[0], ring[1], ring[2]) {
        return false;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    Fullerene,
    SingularQuad,
    SingularHept,
    NonMember,
}

/// How a one-heptagon polytope met the membership condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HeptCondition {
    /// two edge-sharing pentagons whose shared edge ends at the heptagon and a hexagon
    Fragment5567,
    /// every adjacent pentagon pair has exactly one member adjacent to the heptagon
    PairRule { vacuous: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: ClassKind,
    /// singular facets witnessing the class (the quadrangle or the heptagon)
    pub witness: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hept_condition: Option<HeptCondition>,
}

/// Classify into the singular-fullerene family: all facets pentagons and
/// hexagons, allowing one quadrangle or one admissible heptagon.
pub fn classify(p: &Polytope) -> Classification {
    let mut quads = Vec::new();
    let mut hepts = Vec::new();
    for i in 0..p.m() {
        match p.gonality(i) {
            5 | 6 => {}
            4 => quads.push(i),
            7 => hepts.push(i),
            _ => {
                return Classification { kind: ClassKind::NonMember, witness: vec![i], hept_condition: None }
            }
        }
    }
    match (quads.len(), hepts.len()) {
        (0, 0) => Classification { kind: ClassKind::Fullerene, witness: vec![], hept_condition: None },
        (1, 0) => Classification { kind: ClassKind::SingularQuad, witness: quads, hept_condition: None },
        (0, 1) => {
            let h = hepts[0];
            if !p.facet_neighbors(h).iter().any(|&g| p.gonality(g) == 5) {
                return Classification { kind: ClassKind::NonMember, witness: hepts, hept_condition: None };
            }
            match heptagon_condition(p, h) {
                Some(cond) => Classification {
                    kind: ClassKind::SingularHept,
                    witness: hepts,
                    hept_condition: Some(cond),
                },
                None => Classification { kind: ClassKind::NonMember, witness: hepts, hept_condition: None },
            }
        }
        _ => {
            let mut w = quads;
            w.extend(hepts);
            Classification { kind: ClassKind::NonMember, witness: w, hept_condition: None }
        }
    }
}

fn heptagon_condition(p: &Polytope, h: usize) -> Option<HeptCondition> {
    // edges shared by two pentagons
    let mut pent_edges: Vec<(u32, u32)> = Vec::new();
    for (u, v) in p.edges() {
        let (a, b) = p.edge_facets(u, v).unwrap();
        if p.gonality(a) == 5 && p.gonality(b) == 5 {
            pent_edges.push((u, v));
        }
    }
    // third facet at an edge endpoint, besides the edge's two sides
    let third = |end: u32, a: usize, b: usize| -> usize {
        *p.vertex_facets(end)
            .iter()
            .find(|&&f| f as usize != a && f as usize != b)
            .unwrap() as usize
    };
    for &(u, v) in &pent_edges {
        let (a, b) = p.edge_facets(u, v).unwrap();
        let (t1, t2) = (third(u, a, b), third(v, a, b));
        let gons = (p.gonality(t1), p.gonality(t2));
        if (t1 == h && gons.1 == 6) || (t2 == h && gons.0 == 6) {
            return Some(HeptCondition::Fragment5567);
        }
    }
    let h_adjacent = |f: usize| p.adjacent_facets(f, h);
    let rule_holds = pent_edges.iter().all(|&(u, v)| {
        let (a, b) = p.edge_facets(u, v).unwrap();
        h_adjacent(a) != h_adjacent(b)
    });
    if rule_holds {
        Some(HeptCondition::PairRule { vacuous: pent_edges.is_empty() })
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiveBeltStructure {
    pub count: usize,
    pub dk_index: Option<usize>,
}

/// 5-belt census of a fullerene: 12 belts around the pentagons, plus k
/// hexagonal belts exactly for the (5,0)-nanotube D_k.
pub fn five_belt_structure(p: &Polytope) -> Result<FiveBeltStructure, String> {
    if classify(p).kind != ClassKind::Fullerene {
        return Err("five_belt_structure requires a fullerene".to_string());
    }
    let count = k_belts(p, 5).len();
    if count == 12 {
        return Ok(FiveBeltStructure { count, dk_index: None });
    }
    if count < 12 {
        return Err(format!("fullerene with {count} 5-belts contradicts the belt census"));
    }
    let k = count - 12;
    if p.p_vector().get(6) != 5 * k || !equivalent_either_orientation(p, &d_k(k)) {
        return Err(format!("fullerene with {count} 5-belts is not the nanotube D_{k}"));
    }
    Ok(FiveBeltStructure { count, dk_index: Some(k) })
}

/// True when some 4-belt does not surround a quadrangle. Members of the
/// singular-fullerene family must answer false.
pub fn has_4belt_not_surrounding_quad(p: &Polytope) -> bool {
    let belts = k_belts(p, 4);
    if belts.is_empty() {
        return false;
    }
    let mut surrounded: HashSet<Vec<u32>> = HashSet::new();
    for i in 0..p.m() {
        if p.gonality(i) == 4 && facet_surrounded_by_belt(p, i) {
            let mut w: Vec<u32> = p.facet_neighbors(i).iter().map(|&x| x as u32).collect();
            w.sort_unstable();
            surrounded.insert(w);
        }
    }
    belts.iter().any(|b| !surrounded.contains(&b.omega()))
}

/// All zigzag cycles: closed edge paths with no 3 successive edges in one
/// facet. Each cycle is reported once as its edge sequence.
pub fn zigzag_cycles(p: &Polytope) -> Vec<Vec<(u32, u32)>> {
    // state: pair of consecutive darts u -> v -> w; the continuation is the
    // unique edge at w leaving the facet shared by {u,v} and {v,w}
    let common_facet = |u: u32, v: u32, w: u32| -> usize {
        let (a1, b1) = p.edge_facets(u, v).unwrap();
        let (a2, b2) = p.edge_facets(v, w).unwrap();
        if a1 == a2 || a1 == b2 {
            a1
        } else {
            debug_assert!(b1 == a2 || b1 == b2);
            b1
        }
    };
    let step = |u: u32, v: u32, w: u32| -> u32 {
        let avoid = common_facet(u, v, w);
        let cands = p.vertex_neighbors(w);
        for &x in &cands {
            if x == v {
                continue;
            }
            if common_facet(v, w, x) != avoid {
                return x;
            }
        }
        unreachable!("zigzag continuation must exist at a 3-valent vertex")
    };

    let mut states: Vec<(u32, u32, u32)> = Vec::new();
    for (u, v) in p.edges() {
        for (a, b) in [(u, v), (v, u)] {
            for w in p.vertex_neighbors(b) {
                if w != a {
                    states.push((a, b, w));
                }
            }
        }
    }
    states.sort_unstable();
    let mut visited: HashSet<(u32, u32, u32)> = HashSet::new();
    let mut cycles: HashSet<Vec<(u32, u32)>> = HashSet::new();
    for &s0 in &states {
        if visited.contains(&s0) {
            continue;
        }
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut s = s0;
        loop {
            visited.insert(s);
            edges.push((s.0.min(s.1), s.0.max(s.1)));
            let x = step(s.0, s.1, s.2);
            s = (s.1, s.2, x);
            if s == s0 {
                break;
            }
        }
        cycles.insert(canonical_edge_cycle(&edges));
    }
    let mut out: Vec<_> = cycles.into_iter().collect();
    out.sort_unstable();
    out
}

fn canonical_edge_cycle(edges: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let k = edges.len();
    let mut best: Option<Vec<(u32, u32)>> = None;
    for rev in [false, true] {
        let base: Vec<(u32, u32)> =
            if rev { edges.iter().rev().copied().collect() } else { edges.to_vec() };
        for r in 0..k {
            let cand: Vec<(u32, u32)> = (0..k).map(|i| base[(r + i) % k]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::*;

    #[test]
    fn dodecahedron_has_twelve_5belts() {
        assert_eq!(k_belts(&dodecahedron(), 5).len(), 12);
    }

    #[test]
    fn cube_has_three_4belts() {
        assert_eq!(k_belts(&cube(), 4).len(), 3);
    }

    #[test]
    fn simplex_has_no_3belts() {
        assert_eq!(k_belts(&simplex(), 3).len(), 0);
        assert!(!is_flag(&simplex()));
    }

    #[test]
    fn flagness() {
        assert!(is_flag(&cube()));
        assert!(is_flag(&c60()));
        assert!(is_flag(&dodecahedron()));
    }

    #[test]
    fn surrounded_facets() {
        let d = dodecahedron();
        for i in 0..d.m() {
            assert!(facet_surrounded_by_belt(&d, i));
        }
        let c = cube();
        for i in 0..c.m() {
            assert!(facet_surrounded_by_belt(&c, i));
        }
        let s = simplex();
        for i in 0..s.m() {
            assert!(!facet_surrounded_by_belt(&s, i));
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&c60()).kind, ClassKind::Fullerene);
        assert_eq!(classify(&cube()).kind, ClassKind::NonMember);
        assert_eq!(classify(&barrel()).kind, ClassKind::Fullerene);
    }

    #[test]
    fn five_belt_census() {
        assert_eq!(
            five_belt_structure(&dodecahedron()).unwrap(),
            FiveBeltStructure { count: 12, dk_index: None }
        );
        assert_eq!(
            five_belt_structure(&d_k(3)).unwrap(),
            FiveBeltStructure { count: 15, dk_index: Some(3) }
        );
        assert_eq!(
            five_belt_structure(&c60()).unwrap(),
            FiveBeltStructure { count: 12, dk_index: None }
        );
    }

    #[test]
    fn fullerenes_lack_3_and_4_belts() {
        for p in [dodecahedron(), barrel(), c60(), d_k(1)] {
            assert!(k_belts(&p, 3).is_empty());
            assert!(k_belts(&p, 4).is_empty());
        }
    }

    #[test]
    fn cube_4belts_all_surround_facets() {
        assert!(!has_4belt_not_surrounding_quad(&cube()));
    }

    #[test]
    fn zigzag_counts() {
        let z = zigzag_cycles(&dodecahedron());
        assert_eq!(z.len(), 6);
        assert!(z.iter().all(|c| c.len() == 10));
        let z = zigzag_cycles(&cube());
        assert_eq!(z.len(), 4);
        assert!(z.iter().all(|c| c.len() == 6));
        let z = zigzag_cycles(&simplex());
        assert_eq!(z.len(), 3);
        assert!(z.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn oracle_agrees_on_small_polytopes() {
        for p in [simplex(), cube(), prism(5), dodecahedron(), barrel()] {
            for k in 3..=5.min(p.m()) {
                assert_eq!(k_belts(&p, k), k_belts_bruteforce(&p, k), "m={} k={k}", p.m());
            }
        }
    }
}
