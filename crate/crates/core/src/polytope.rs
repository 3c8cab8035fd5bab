//! Combinatorial simple 3-polytopes stored as oriented facet cycles.
//!
//! A polytope is a list of facet boundary walks over dense vertex ids. The
//! walks are cyclic and all traversed with the same global orientation, so
//! every directed edge (dart) occurs in exactly one facet cycle and its
//! reverse in exactly one other. Everything else (adjacency, vertex
//! rotations, f- and p-vectors) is derived from the cycles.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::PolytopeError;

/// A validated combinatorial simple 3-polytope.
#[derive(Debug, Clone)]
pub struct Polytope {
    facets: Vec<Vec<u32>>,
    f0: usize,
    /// dart (u,v) -> (facet index, position of u in that facet cycle)
    dart_pos: HashMap<(u32, u32), (u32, u32)>,
    /// facets incident to each vertex, ascending
    vertex_facets: Vec<[u32; 3]>,
}

/// One pass/fail entry of a [`ValidationReport`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn ok() -> Self {
        Check { pass: true, detail: None }
    }
    fn fail(detail: impl Into<String>) -> Self {
        Check { pass: false, detail: Some(detail.into()) }
    }
}

/// Outcome of validating a facet list against the simple-3-polytope axioms.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    /// m >= 4, cycles of length >= 3, dense vertex ids, no repeats in a cycle
    pub well_formed: Check,
    /// every vertex lies in exactly 3 facet cycles
    pub simplicity: Check,
    /// f0 - f1 + f2 = 2 together with f1 = 3(f2-2), f0 = 2(f2-2)
    pub euler: Check,
    /// each dart in exactly one cycle, reverse dart present, graph connected
    pub face_tracing: Check,
    /// >= 6 edges and any two facet closures meet in nothing, a vertex or an edge
    pub three_connected: Check,
    /// f2 <= 2 f0 - 4 and f0 <= 2 f2 - 4
    pub steinitz: Check,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.well_formed.pass
            && self.simplicity.pass
            && self.euler.pass
            && self.face_tracing.pass
            && self.three_connected.pass
            && self.steinitz.pass
    }

    pub fn first_error(&self) -> Option<PolytopeError> {
        let detail = |c: &Check| c.detail.clone().unwrap_or_default();
        if !self.well_formed.pass {
            return Some(PolytopeError::Malformed(detail(&self.well_formed)));
        }
        if !self.simplicity.pass {
            let d = detail(&self.simplicity);
            return Some(match d.strip_prefix("vertex ").and_then(|s| {
                s.split_whitespace().next().and_then(|t| t.parse::<u32>().ok())
            }) {
                Some(v) => PolytopeError::NonSimpleVertex(v),
                None => PolytopeError::Malformed(d),
            });
        }
        if !self.face_tracing.pass {
            return Some(PolytopeError::RotationSystem(detail(&self.face_tracing)));
        }
        if !self.euler.pass {
            return Some(PolytopeError::EulerViolation(detail(&self.euler)));
        }
        if !self.three_connected.pass {
            let d = detail(&self.three_connected);
            if let Some(rest) = d.strip_prefix("multi-edge ") {
                let mut it = rest.split(',').filter_map(|t| t.trim().parse::<usize>().ok());
                if let (Some(a), Some(b)) = (it.next(), it.next()) {
                    return Some(PolytopeError::MultiEdgeFacetPair(a, b));
                }
            }
            return Some(PolytopeError::NotThreeConnected(d));
        }
        if !self.steinitz.pass {
            return Some(PolytopeError::EulerViolation(detail(&self.steinitz)));
        }
        None
    }
}

/// Validate a raw facet list without constructing a `Polytope`.
///
/// All checks are reported even when earlier ones fail, as far as the data
/// allows computing them.
pub fn validate_facets(facets: &[Vec<u32>]) -> ValidationReport {
    let mut well_formed = Check::ok();
    if facets.len() < 4 {
        well_formed = Check::fail(format!("need at least 4 facets, got {}", facets.len()));
    }
    for (i, f) in facets.iter().enumerate() {
        if f.len() < 3 {
            well_formed = Check::fail(format!("facet {i} has fewer than 3 vertices"));
        }
        let mut seen = f.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != f.len() {
            well_formed = Check::fail(format!("facet {i} repeats a vertex"));
        }
    }
    let max_id = facets.iter().flatten().copied().max().map(|v| v as usize + 1).unwrap_or(0);
    let mut occurrences = vec![0usize; max_id];
    for f in facets {
        for &v in f {
            occurrences[v as usize] += 1;
        }
    }
    if occurrences.iter().any(|&c| c == 0) {
        well_formed = Check::fail("vertex ids are not dense".to_string());
    }

    let simplicity = match occurrences.iter().position(|&c| c != 3) {
        Some(v) if well_formed.pass => Check::fail(format!("vertex {v} lies in {} facets", occurrences[v])),
        Some(v) => Check::fail(format!("vertex {v} lies in {} facets", occurrences[v])),
        None => Check::ok(),
    };

    // darts
    let mut darts: HashMap<(u32, u32), usize> = HashMap::new();
    let mut face_tracing = Check::ok();
    for (i, f) in facets.iter().enumerate() {
        for p in 0..f.len() {
            let u = f[p];
            let v = f[(p + 1) % f.len()];
            if u == v {
                face_tracing = Check::fail(format!("loop edge at vertex {u}"));
                continue;
            }
            if darts.insert((u, v), i).is_some() {
                face_tracing = Check::fail(format!(
                    "dart ({u},{v}) traced by two facet cycles; a cycle is reversed or duplicated"
                ));
            }
        }
    }
    if face_tracing.pass {
        for &(u, v) in darts.keys() {
            if !darts.contains_key(&(v, u)) {
                face_tracing = Check::fail(format!("dart ({u},{v}) has no reverse; edge lies in one facet only"));
                break;
            }
        }
    }
    // connectivity of the vertex-edge graph
    if face_tracing.pass && max_id > 0 {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); max_id];
        for &(u, v) in darts.keys() {
            adj[u as usize].push(v);
        }
        let mut seen = vec![false; max_id];
        let mut stack = vec![0u32];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            face_tracing = Check::fail("vertex-edge graph is disconnected".to_string());
        }
    }

    let f0 = max_id;
    let f2 = facets.len();
    let dart_count: usize = facets.iter().map(|f| f.len()).sum();
    let euler = if dart_count % 2 != 0 {
        Check::fail("odd number of darts".to_string())
    } else {
        let f1 = dart_count / 2;
        if f0 as i64 - f1 as i64 + f2 as i64 != 2 {
            Check::fail(format!("f0 - f1 + f2 = {} (f = ({f0},{f1},{f2}))", f0 as i64 - f1 as i64 + f2 as i64))
        } else {
            Check::ok()
        }
    };
    let f1 = dart_count / 2;

    // 3-connectivity via the facet-intersection criterion, which also
    // detects multi-edge facet pairs.
    let mut three_connected = Check::ok();
    if f1 < 6 {
        three_connected = Check::fail(format!("only {f1} edges; a 3-connected graph needs at least 6"));
    } else {
        // candidate pairs: facets sharing at least one vertex
        let mut common: HashMap<(usize, usize), Vec<u32>> = HashMap::new();
        let mut vert_facets: Vec<Vec<usize>> = vec![Vec::new(); f0];
        for (i, f) in facets.iter().enumerate() {
            for &v in f {
                vert_facets[v as usize].push(i);
            }
        }
        for (v, fs) in vert_facets.iter().enumerate() {
            for a in 0..fs.len() {
                for b in a + 1..fs.len() {
                    let key = (fs[a].min(fs[b]), fs[a].max(fs[b]));
                    common.entry(key).or_default().push(v as u32);
                }
            }
        }
        'pairs: for (&(i, j), verts) in common.iter() {
            if verts.len() <= 1 {
                continue;
            }
            // count shared edges between facets i and j
            let mut shared_edges = 0usize;
            for a in 0..verts.len() {
                for b in a + 1..verts.len() {
                    let (u, v) = (verts[a], verts[b]);
                    let e_in_i = darts.get(&(u, v)) == Some(&i) || darts.get(&(v, u)) == Some(&i);
                    let e_in_j = darts.get(&(u, v)) == Some(&j) || darts.get(&(v, u)) == Some(&j);
                    if e_in_i && e_in_j {
                        shared_edges += 1;
                    }
                }
            }
            if shared_edges >= 2 {
                three_connected = Check::fail(format!("multi-edge {i}, {j}"));
                break 'pairs;
            }
            if !(verts.len() == 2 && shared_edges == 1) {
                three_connected = Check::fail(format!(
                    "facets {i} and {j} meet in {} vertices but {} shared edges",
                    verts.len(),
                    shared_edges
                ));
                break 'pairs;
            }
        }
    }

    let steinitz = if f2 as i64 <= 2 * f0 as i64 - 4 && f0 as i64 <= 2 * f2 as i64 - 4 {
        Check::ok()
    } else {
        Check::fail(format!("f = ({f0},{f1},{f2}) violates the 3-polytope inequalities"))
    };

    ValidationReport { well_formed, simplicity, euler, face_tracing, three_connected, steinitz }
}

impl Polytope {
    /// Build and fully validate a polytope from oriented facet cycles.
    pub fn from_facets(facets: Vec<Vec<u32>>) -> Result<Self, PolytopeError> {
        let report = validate_facets(&facets);
        if let Some(err) = report.first_error() {
            return Err(err);
        }
        Ok(Self::from_facets_unchecked(facets))
    }

    fn from_facets_unchecked(facets: Vec<Vec<u32>>) -> Self {
        let f0 = facets.iter().flatten().copied().max().map(|v| v as usize + 1).unwrap_or(0);
        let mut dart_pos = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for p in 0..f.len() {
                let u = f[p];
                let v = f[(p + 1) % f.len()];
                dart_pos.insert((u, v), (i as u32, p as u32));
            }
        }
        let mut vf: Vec<Vec<u32>> = vec![Vec::with_capacity(3); f0];
        for (i, f) in facets.iter().enumerate() {
            for &v in f {
                vf[v as usize].push(i as u32);
            }
        }
        let vertex_facets = vf
            .into_iter()
            .map(|mut v| {
                v.sort_unstable();
                [v[0], v[1], v[2]]
            })
            .collect();
        Polytope { facets, f0, dart_pos, vertex_facets }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_facets(&self.facets)
    }

    pub fn m(&self) -> usize {
        self.facets.len()
    }
    pub fn f0(&self) -> usize {
        self.f0
    }
    pub fn f1(&self) -> usize {
        self.dart_pos.len() / 2
    }
    pub fn f_vector(&self) -> (usize, usize, usize) {
        (self.f0(), self.f1(), self.m())
    }
    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }
    pub fn facet(&self, i: usize) -> &[u32] {
        &self.facets[i]
    }
    /// Number of sides of facet `i`.
    pub fn gonality(&self, i: usize) -> usize {
        self.facets[i].len()
    }

    /// Facet whose cycle contains the dart (u,v), with the position of u.
    pub fn dart_facet(&self, u: u32, v: u32) -> Option<(usize, usize)> {
        self.dart_pos.get(&(u, v)).map(|&(f, p)| (f as usize, p as usize))
    }

    pub fn is_edge(&self, u: u32, v: u32) -> bool {
        self.dart_pos.contains_key(&(u, v))
    }

    /// The two facets of edge {u,v}: (facet of dart (u,v), facet of dart (v,u)).
    pub fn edge_facets(&self, u: u32, v: u32) -> Option<(usize, usize)> {
        match (self.dart_pos.get(&(u, v)), self.dart_pos.get(&(v, u))) {
            (Some(&(a, _)), Some(&(b, _))) => Some((a as usize, b as usize)),
            _ => None,
        }
    }

    /// All edges as normalized (min,max) vertex pairs, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .dart_pos
            .keys()
            .filter(|&&(u, v)| u < v)
            .copied()
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacent_facets(&self, i: usize, j: usize) -> bool {
        self.shared_edge(i, j).is_some()
    }

    /// The shared edge of facets i and j as the dart it forms in facet i.
    pub fn shared_edge(&self, i: usize, j: usize) -> Option<(u32, u32)> {
        let (small, other) = if self.facets[i].len() <= self.facets[j].len() { (i, j) } else { (j, i) };
        let f = &self.facets[small];
        for p in 0..f.len() {
            let u = f[p];
            let v = f[(p + 1) % f.len()];
            if self.dart_pos.get(&(v, u)).map(|&(g, _)| g as usize) == Some(other) {
                return Some(if small == i { (u, v) } else { (v, u) });
            }
        }
        None
    }

    /// Neighbor facets of facet i in cyclic order: entry p is the facet
    /// across the edge (F[p], F[p+1]).
    pub fn facet_neighbors(&self, i: usize) -> Vec<usize> {
        let f = &self.facets[i];
        (0..f.len())
            .map(|p| {
                let u = f[p];
                let v = f[(p + 1) % f.len()];
                self.dart_pos[&(v, u)].0 as usize
            })
            .collect()
    }

    /// The three facets containing vertex v, ascending.
    pub fn vertex_facets(&self, v: u32) -> [u32; 3] {
        self.vertex_facets[v as usize]
    }

    /// All vertices as facet triples (the dual triangles), ascending ids.
    pub fn vertex_triples(&self) -> &[[u32; 3]] {
        &self.vertex_facets
    }

    /// The three neighbors of v, in no particular order.
    pub fn vertex_neighbors(&self, v: u32) -> [u32; 3] {
        let mut out = [0u32; 3];
        let mut k = 0;
        for &f in &self.vertex_facets[v as usize] {
            let cycle = &self.facets[f as usize];
            let p = cycle.iter().position(|&x| x == v).unwrap();
            let next = cycle[(p + 1) % cycle.len()];
            out[k] = next;
            k += 1;
        }
        out
    }

    /// Rotation at v: maps neighbor x to the predecessor of v in the facet
    /// cycle containing the dart (v,x). The orbit of any neighbor is the
    /// full rotation; traversing with `rotate_inv` walks the mirror image.
    pub fn rotate(&self, v: u32, x: u32) -> u32 {
        let (f, p) = self.dart_pos[&(v, x)];
        let cycle = &self.facets[f as usize];
        cycle[(p as usize + cycle.len() - 1) % cycle.len()]
    }

    pub fn rotate_inv(&self, v: u32, x: u32) -> u32 {
        // inverse of `rotate`: the neighbor y with rotate(v, y) == x, i.e.
        // the successor of v in the facet cycle containing the dart (x,v).
        let (f, p) = self.dart_pos[&(x, v)];
        let cycle = &self.facets[f as usize];
        cycle[(p as usize + 2) % cycle.len()]
    }

    /// The mirror image: every facet cycle reversed.
    pub fn mirror(&self) -> Polytope {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.reverse();
                g
            })
            .collect();
        Self::from_facets_unchecked(facets)
    }

    /// Apply a vertex relabeling; `perm[old] = new`.
    pub fn relabel_vertices(&self, perm: &[u32]) -> Result<Polytope, PolytopeError> {
        if perm.len() != self.f0 {
            return Err(PolytopeError::Malformed("permutation length mismatch".into()));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|&v| perm[v as usize]).collect())
            .collect();
        Polytope::from_facets(facets)
    }

    pub fn p_vector(&self) -> PVector {
        let mut p = BTreeMap::new();
        for f in &self.facets {
            *p.entry(f.len()).or_insert(0usize) += 1;
        }
        PVector { p }
    }
}

/// Counts of k-gonal facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PVector {
    pub p: BTreeMap<usize, usize>,
}

impl PVector {
    pub fn get(&self, k: usize) -> usize {
        self.p.get(&k).copied().unwrap_or(0)
    }

    pub fn facet_count(&self) -> usize {
        self.p.values().sum()
    }

    /// Left and right side of the simple-3-polytope relation
    /// 3 p3 + 2 p4 + p5 = 12 + sum_{k>=7} (k-6) p_k.
    pub fn balance(&self) -> (i64, i64) {
        let lhs = 3 * self.get(3) as i64 + 2 * self.get(4) as i64 + self.get(5) as i64;
        let rhs = 12
            + self
                .p
                .iter()
                .filter(|&(&k, _)| k >= 7)
                .map(|(&k, &c)| (k as i64 - 6) * c as i64)
                .sum::<i64>();
        (lhs, rhs)
    }

    pub fn satisfies_balance(&self) -> bool {
        let (l, r) = self.balance();
        l == r
    }
}

// ---------------------------------------------------------------------------
// builders

/// Boundary of the 3-simplex.
pub fn simplex() -> Polytope {
    Polytope::from_facets(vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![3, 2, 1]]).unwrap()
}

/// k-gonal prism: two k-gons and k quadrangles.
pub fn prism(k: usize) -> Polytope {
    assert!(k >= 3);
    let k = k as u32;
    let mut facets = Vec::with_capacity(k as usize + 2);
    let mut bottom = vec![0u32];
    bottom.extend((1..k).rev());
    facets.push(bottom);
    facets.push((k..2 * k).collect());
    for i in 0..k {
        let j = (i + 1) % k;
        facets.push(vec![i, j, k + j, k + i]);
    }
    Polytope::from_facets(facets).unwrap()
}

pub fn cube() -> Polytope {
    prism(4)
}

/// n-barrel: an n-gon, two rings of n pentagons, an n-gon. `drum(5)` is the
/// dodecahedron and `drum(6)` the 14-facet barrel.
pub fn drum(n: usize) -> Polytope {
    assert!(n >= 3);
    let n32 = n as u32;
    let a = |i: u32| i % n32;
    let b = |i: u32| n32 + i % n32;
    let c = |i: u32| 2 * n32 + i % n32;
    let d = |i: u32| 3 * n32 + i % n32;
    let mut facets = Vec::with_capacity(2 * n + 2);
    facets.push((0..n32).collect::<Vec<_>>());
    for i in 0..n32 {
        facets.push(vec![a(i), b(i), c(i), b(i + 1), a(i + 1)]);
    }
    for i in 0..n32 {
        facets.push(vec![c(i + n32 - 1), d(i + n32 - 1), d(i), c(i), b(i)]);
    }
    facets.push((0..n32).rev().map(d).collect::<Vec<_>>());
    Polytope::from_facets(facets).unwrap()
}

pub fn dodecahedron() -> Polytope {
    drum(5)
}

/// The 14-facet fullerene with two hexagons (p5 = 12, p6 = 2).
pub fn barrel() -> Polytope {
    drum(6)
}

/// (5,0)-nanotube family: two dodecahedral caps with k hexagonal 5-belts
/// between them. `d_k(0)` is the dodecahedron; p6 = 5k, f0 = 20 + 10k.
pub fn d_k(k: usize) -> Polytope {
    let mut facets: Vec<Vec<u32>> = Vec::with_capacity(12 + 5 * k);
    // top cap on rings a (0..5), b (5..10), c (10..15)
    facets.push((0..5).collect());
    let a = |i: u32| i % 5;
    let b = |i: u32| 5 + i % 5;
    let c = |i: u32| 10 + i % 5;
    for i in 0..5 {
        facets.push(vec![a(i), b(i), c(i), b(i + 1), a(i + 1)]);
    }
    // boundary cycle t[0..10]: t[2i] = b_i with its third edge used, t[2i+1] = c_i waiting
    let mut t: Vec<u32> = (0..10).map(|j| if j % 2 == 0 { b(j / 2) } else { c(j / 2) }).collect();
    let mut next_id = 15u32;
    for _ in 0..k {
        let u: Vec<u32> = (0..10).map(|j| next_id + j).collect();
        next_id += 10;
        for i in 0..5u32 {
            let j = |x: u32| (2 * i + x) as usize % 10;
            facets.push(vec![t[j(3)], t[j(2)], t[j(1)], u[j(1)], u[j(2)], u[j(3)]]);
        }
        // waiting vertices of the new boundary sit at even positions; shift
        // so the closing formula again sees them at odd positions
        t = (0..10).map(|j| u[(j + 1) % 10]).collect();
    }
    // bottom cap on ring d
    let d: Vec<u32> = (0..5).map(|i| next_id + i).collect();
    for i in 0..5usize {
        let tm = |x: isize| t[((2 * i as isize + x).rem_euclid(10)) as usize];
        facets.push(vec![tm(-1), d[(i + 4) % 5], d[i], tm(1), tm(0)]);
    }
    facets.push(vec![d[4], d[3], d[2], d[1], d[0]]);
    Polytope::from_facets(facets).unwrap()
}

/// Truncated icosahedron (the 32-facet fullerene with p6 = 20), built by
/// corner-cutting a hardcoded icosahedron rather than via `leapfrog`.
pub fn c60() -> Polytope {
    // icosahedron: north 0, upper ring 1..=5, lower ring 6..=10, south 11;
    // faces oriented coherently (shared edges traversed in opposite
    // directions by their two faces)
    let n = 0u32;
    let s = 11u32;
    let u = |i: u32| 1 + i % 5;
    let l = |i: u32| 6 + i % 5;
    let mut faces: Vec<[u32; 3]> = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push([n, u(i), u(i + 1)]);
        faces.push([u(i + 1), u(i), l(i)]);
        faces.push([u(i), l(i + 4), l(i)]);
        faces.push([l(i + 1), l(i), s]);
    }
    // rotation derived from oriented faces: next edge after {v,w} around v
    // is {v,z} where some face reads (w, v, z)
    let mut succ: HashMap<(u32, u32), u32> = HashMap::new();
    for f in &faces {
        for p in 0..3 {
            succ.insert((f[p], f[(p + 1) % 3]), f[(p + 2) % 3]);
        }
    }
    let next_edge = |v: u32, w: u32| -> u32 { succ[&(w, v)] };

    // flag ids: (vertex, normalized edge) in sorted order
    let mut flags: Vec<(u32, (u32, u32))> = Vec::new();
    for (&(a2, b2), _) in succ.iter() {
        if a2 < b2 {
            flags.push((a2, (a2, b2)));
            flags.push((b2, (a2, b2)));
        }
    }
    flags.sort_unstable();
    flags.dedup();
    let id: HashMap<(u32, (u32, u32)), u32> =
        flags.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
    let norm = |x: u32, y: u32| (x.min(y), x.max(y));

    let mut out: Vec<Vec<u32>> = Vec::with_capacity(32);
    // pentagon per icosahedron vertex: its edges in rotation order
    for v in 0..12u32 {
        let start = (0..12u32).find(|&w| succ.contains_key(&(v, w))).unwrap();
        let mut cyc = Vec::with_capacity(5);
        let mut w = start;
        loop {
            cyc.push(id[&(v, norm(v, w))]);
            w = next_edge(v, w);
            if w == start {
                break;
            }
        }
        out.push(cyc);
    }
    // hexagon per face (a,b,c): corner darts reverse the pentagon rotations
    for f in &faces {
        let (a, b2, c) = (f[0], f[1], f[2]);
        let (e_ab, e_ca, e_bc) = (norm(a, b2), norm(c, a), norm(b2, c));
        out.push(vec![
            id[&(a, e_ab)],
            id[&(a, e_ca)],
            id[&(c, e_ca)],
            id[&(c, e_bc)],
            id[&(b2, e_bc)],
            id[&(b2, e_ab)],
        ]);
    }
    Polytope::from_facets(out).unwrap()
}
