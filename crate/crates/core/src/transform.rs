//! Combinatorial surgeries: (s,k)-truncations, straightening along an edge,
//! and the two global hexagon-inserting operations (chamfer and leapfrog).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::belts::is_flag;
use crate::canonical::equivalent_either_orientation;
use crate::error::{Obstruction, TransformError};
use crate::polytope::Polytope;

/// A run of `len` consecutive edges on a facet, anchored at a cycle
/// position: the run covers edges (F[start], F[start+1]), ...,
/// (F[start+len-1], F[start+len]). `len = 0` marks the corner at F[start]
/// for a vertex truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationSpec {
    pub facet: usize,
    pub start: usize,
    pub len: usize,
}

impl TruncationSpec {
    pub fn is_valid(&self, p: &Polytope) -> bool {
        self.facet < p.m() && {
            let k = p.gonality(self.facet);
            self.start < k && self.len + 2 <= k
        }
    }

    /// Gonalities (m1, m2) of the two facets flanking the run across its
    /// boundary edges E1 and E2.
    pub fn flank_gonalities(&self, p: &Polytope) -> (usize, usize) {
        let (g1, g2) = self.flank_facets(p);
        (p.gonality(g1), p.gonality(g2))
    }

    pub fn flank_facets(&self, p: &Polytope) -> (usize, usize) {
        let f = p.facet(self.facet);
        let k = f.len();
        let at = |o: isize| f[((self.start as isize + o).rem_euclid(k as isize)) as usize];
        // E1 = {w_-1, w_0}, E2 = {w_s, w_s+1}
        let g1 = p.dart_facet(at(0), at(-1)).unwrap().0;
        let g2 = p.dart_facet(at(self.len as isize + 1), at(self.len as isize)).unwrap().0;
        (g1, g2)
    }
}

/// The k-gonal facet of the spec is split into an (s+3)-gon and a
/// (k-s+1)-gon; the two flanking facets gain one side each. The new facet
/// sits at index m, the shrunk one keeps index `spec.facet`. Returns the
/// polytope and the endpoints of the created edge F' ∩ F''.
pub fn sk_truncate(p: &Polytope, spec: &TruncationSpec) -> Result<(Polytope, (u32, u32)), TransformError> {
    if !spec.is_valid(p) {
        return Err(TransformError::InvalidSpec(format!("{spec:?}")));
    }
    let s = spec.len;
    let f = p.facet(spec.facet);
    let k = f.len();
    let w = |o: isize| -> u32 { f[((spec.start as isize + o).rem_euclid(k as isize)) as usize] };
    let f0 = p.f0() as u64;
    // token space: old vertices keep their id; x, y sit on E1, E2; z_j on
    // the off-facet edge at w_j
    let x = f0;
    let y = f0 + 1;
    let z = |j: usize| f0 + 2 + j as u64;
    let run: Vec<u32> = (0..=s as isize).map(w).collect();
    let g1 = p.dart_facet(w(0), w(-1)).unwrap().0;
    let g2 = p.dart_facet(w(s as isize + 1), w(s as isize)).unwrap().0;

    let mut out: Vec<Vec<u64>> = Vec::with_capacity(p.m() + 1);
    for (idx, cycle) in p.facets().iter().enumerate() {
        if idx == spec.facet {
            // F'' = (x, y, w_{s+1}, ..., w_{k-1})
            let mut c: Vec<u64> = vec![x, y];
            for o in (s as isize + 1)..k as isize {
                c.push(w(o) as u64);
            }
            out.push(c);
            continue;
        }
        let mut c: Vec<u64> = Vec::with_capacity(cycle.len() + 2);
        for &v in cycle {
            let j = run.iter().position(|&r| r == v);
            match j {
                None => c.push(v as u64),
                Some(j) => {
                    let g1_here = idx == g1 && j == 0;
                    let g2_here = idx == g2 && j == s;
                    if g1_here && g2_here {
                        // s = 0 corner seen from the third facet on both sides
                        debug_assert_eq!(s, 0);
                        unreachable!("flanking facets are distinct for a valid spec");
                    } else if g1_here {
                        c.push(z(0));
                        c.push(x);
                    } else if g2_here {
                        c.push(y);
                        c.push(z(s));
                    } else {
                        c.push(z(j));
                    }
                }
            }
        }
        out.push(c);
    }
    // F' = (x, z_0, ..., z_s, y)
    let mut newf: Vec<u64> = vec![x];
    for j in 0..=s {
        newf.push(z(j));
    }
    newf.push(y);
    out.push(newf);

    let (facets, map) = compact(out);
    let q = Polytope::from_facets(facets)?;
    Ok((q, (map[&x], map[&y])))
}

fn compact(facets: Vec<Vec<u64>>) -> (Vec<Vec<u32>>, HashMap<u64, u32>) {
    let mut map: HashMap<u64, u32> = HashMap::new();
    let mut next = 0u32;
    let mut out = Vec::with_capacity(facets.len());
    for f in facets {
        let mut c = Vec::with_capacity(f.len());
        for t in f {
            let id = *map.entry(t).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            c.push(id);
        }
        out.push(c);
    }
    (out, map)
}

/// Result of straightening, annotated with the flagness prediction for the
/// result when the input was flag.
#[derive(Debug, Clone)]
pub struct Straightened {
    pub polytope: Polytope,
    /// Some(true) when a 4-belt through the merged pair forces the result
    /// to be non-flag; None when the input itself was not flag.
    pub flag_loss: Option<bool>,
}

/// Straightening along the edge {x,y}: merge its two facets, smooth the two
/// endpoint corners. Combinatorially inverse to an edge-region truncation.
pub fn straighten(p: &Polytope, edge: (u32, u32)) -> Result<Straightened, Obstruction> {
    let (x, y) = edge;
    let Some((a, b)) = p.edge_facets(x, y) else {
        return Err(Obstruction::BadEdge(format!("({x},{y}) is not an edge")));
    };
    if p.m() == 4 {
        return Err(Obstruction::Simplex);
    }
    let third = |v: u32| -> usize {
        *p.vertex_facets(v).iter().find(|&&f| f as usize != a && f as usize != b).unwrap() as usize
    };
    let (fp, fq) = (third(x), third(y));
    // a facet meeting both sides away from the edge corners closes a 3-belt
    for c in 0..p.m() {
        if c == a || c == b || c == fp || c == fq {
            continue;
        }
        if p.adjacent_facets(c, a) && p.adjacent_facets(c, b) {
            return Err(Obstruction::ThreeBelt { third: c });
        }
    }
    for flank in [fp, fq] {
        if p.gonality(flank) == 3 {
            return Err(Obstruction::TriangleFlank(flank));
        }
    }
    let was_flag = is_flag(p);
    let flag_loss = if was_flag { Some(four_belt_through_pair(p, a, b)) } else { None };

    // merged cycle: walk a from y around to x, then b from x around to y
    let walk = |facet: usize, from: u32, to: u32| -> Vec<u32> {
        let cycle = p.facet(facet);
        let n = cycle.len();
        let start = cycle.iter().position(|&v| v == from).unwrap();
        let mut seq = Vec::new();
        let mut i = start;
        loop {
            seq.push(cycle[i]);
            if cycle[i] == to {
                break;
            }
            i = (i + 1) % n;
        }
        seq
    };
    let mut merged = walk(a, y, x);
    let tail = walk(b, x, y);
    merged.extend_from_slice(&tail[1..tail.len() - 1]);
    // x and y are now 2-valent: drop them here and in the flanks
    merged.retain(|&v| v != x && v != y);

    let keep = a.min(b);
    let drop = a.max(b);
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(p.m() - 1);
    for (idx, cycle) in p.facets().iter().enumerate() {
        if idx == drop {
            continue;
        }
        if idx == keep {
            out.push(merged.clone());
        } else if idx == fp {
            out.push(cycle.iter().copied().filter(|&v| v != x).collect());
        } else if idx == fq {
            out.push(cycle.iter().copied().filter(|&v| v != y).collect());
        } else {
            out.push(cycle.clone());
        }
    }
    let (facets, _) = compact(out.into_iter().map(|f| f.into_iter().map(|v| v as u64).collect()).collect());
    let polytope = Polytope::from_facets(facets).map_err(|e| Obstruction::BadEdge(e.to_string()))?;
    Ok(Straightened { polytope, flag_loss })
}

/// Is there a 4-belt (a, b, k, l) running through the adjacent pair {a,b}?
fn four_belt_through_pair(p: &Polytope, a: usize, b: usize) -> bool {
    let an = p.facet_neighbors(a);
    let bn = p.facet_neighbors(b);
    for &k in &bn {
        if k == a || p.adjacent_facets(k, a) {
            continue;
        }
        for &l in &an {
            if l == b || l == k || p.adjacent_facets(l, b) {
                continue;
            }
            if p.adjacent_facets(k, l) {
                return true;
            }
        }
    }
    false
}

/// Chamfer (the edge-hexagon operation): p6 grows by f1, every other p_k is
/// kept, and f0 quadruples. Vertices are the old ones plus a corner (v, F)
/// per incidence; each old edge blows up into a hexagon.
pub fn chamfer(p: &Polytope) -> Polytope {
    let f0 = p.f0() as u64;
    let m = p.m() as u64;
    let corner = |v: u32, f: usize| -> u64 { f0 + v as u64 * m + f as u64 };
    let mut out: Vec<Vec<u64>> = Vec::with_capacity(p.m() + p.f1());
    for (idx, cycle) in p.facets().iter().enumerate() {
        out.push(cycle.iter().map(|&v| corner(v, idx)).collect());
    }
    for (u, v) in p.edges() {
        let (fa, fb) = p.edge_facets(u, v).unwrap();
        // fa holds the dart (u,v), fb the dart (v,u)
        out.push(vec![
            corner(v, fa),
            corner(u, fa),
            u as u64,
            corner(u, fb),
            corner(v, fb),
            v as u64,
        ]);
    }
    let (facets, _) = compact(out);
    Polytope::from_facets(facets).expect("chamfer of a valid polytope is valid")
}

/// Leapfrog (the vertex-hexagon operation): p6 grows by f0, every other p_k
/// is kept, and f0 triples. Vertices are the facet-edge incidences; each
/// old vertex blows up into a hexagon.
pub fn leapfrog(p: &Polytope) -> Polytope {
    let norm = |a: u32, b: u32| -> (u32, u32) { (a.min(b), a.max(b)) };
    let mut flag_id: HashMap<(usize, (u32, u32)), u64> = HashMap::new();
    let mut next = 0u64;
    let mut id = |f: usize, e: (u32, u32)| -> u64 {
        *flag_id.entry((f, e)).or_insert_with(|| {
            let v = next;
            next += 1;
            v
        })
    };
    let mut out: Vec<Vec<u64>> = Vec::with_capacity(p.m() + p.f0());
    for (idx, cycle) in p.facets().iter().enumerate() {
        let k = cycle.len();
        out.push((0..k).map(|t| id(idx, norm(cycle[t], cycle[(t + 1) % k]))).collect());
    }
    for v in 0..p.f0() as u32 {
        let base = p.vertex_facets(v)[0] as usize;
        let cycle = p.facet(base);
        let t = cycle.iter().position(|&u| u == v).unwrap();
        let prev = cycle[(t + cycle.len() - 1) % cycle.len()];
        let next_v = cycle[(t + 1) % cycle.len()];
        let a = norm(prev, v);
        let b = norm(v, next_v);
        let h = p.dart_facet(v, prev).unwrap().0;
        let g = p.dart_facet(next_v, v).unwrap().0;
        let w = *p
            .vertex_neighbors(v)
            .iter()
            .find(|&&u| u != prev && u != next_v)
            .unwrap();
        let e3 = norm(v, w);
        out.push(vec![id(base, b), id(base, a), id(h, a), id(h, e3), id(g, e3), id(g, b)]);
    }
    let (facets, _) = compact(out);
    Polytope::from_facets(facets).expect("leapfrog of a valid polytope is valid")
}

/// Check that chamfer and leapfrog commute on `p` up to equivalence.
pub fn op_commute_check(p: &Polytope) -> bool {
    let cl = chamfer(&leapfrog(p));
    let lc = leapfrog(&chamfer(p));
    equivalent_either_orientation(&cl, &lc)
}
