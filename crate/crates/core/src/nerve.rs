//! The nerve of the facet cover: a simplicial 2-sphere on the facet set,
//! with full subcomplexes over facet subsets.

use std::collections::HashSet;

use crate::polytope::Polytope;

/// Simplicial complex on `[m]` whose simplices are the nonempty facet
/// intersections (dimension <= 2 for a simple 3-polytope; <= 1 for the
/// polygon case used by the n = 2 examples).
#[derive(Debug, Clone)]
pub struct NerveComplex {
    pub m: usize,
    pub edges: Vec<(u32, u32)>,
    pub triangles: Vec<[u32; 3]>,
    edge_set: HashSet<(u32, u32)>,
    triangle_set: HashSet<[u32; 3]>,
}

impl NerveComplex {
    pub fn new(m: usize, mut edges: Vec<(u32, u32)>, mut triangles: Vec<[u32; 3]>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        triangles.sort_unstable();
        triangles.dedup();
        let edge_set = edges.iter().copied().collect();
        let triangle_set = triangles.iter().copied().collect();
        NerveComplex { m, edges, triangles, edge_set, triangle_set }
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edge_set.contains(&(a.min(b), a.max(b)))
    }

    pub fn has_triangle(&self, t: [u32; 3]) -> bool {
        let mut t = t;
        t.sort_unstable();
        self.triangle_set.contains(&t)
    }

    /// Membership for a sorted vertex set of any size.
    pub fn is_simplex(&self, sigma: &[u32]) -> bool {
        match sigma.len() {
            0 | 1 => true,
            2 => self.has_edge(sigma[0], sigma[1]),
            3 => self.has_triangle([sigma[0], sigma[1], sigma[2]]),
            _ => false,
        }
    }

    /// Minimal nonfaces: nonface pairs, nonface triples with all edges, and
    /// the single size-4 case of the simplex boundary.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = Vec::new();
        for a in 0..self.m as u32 {
            for b in a + 1..self.m as u32 {
                if !self.has_edge(a, b) {
                    out.push(vec![a, b]);
                }
            }
        }
        for a in 0..self.m as u32 {
            for b in a + 1..self.m as u32 {
                if !self.has_edge(a, b) {
                    continue;
                }
                for c in b + 1..self.m as u32 {
                    if self.has_edge(a, c)
                        && self.has_edge(b, c)
                        && !self.has_triangle([a, b, c])
                    {
                        out.push(vec![a, b, c]);
                    }
                }
            }
        }
        if self.m == 4 && out.is_empty() && self.triangles.len() == 4 {
            out.push(vec![0, 1, 2, 3]);
        }
        out.sort();
        out
    }

    /// Simplices of the full subcomplex over the subset mask, by dimension.
    pub fn subcomplex(&self, omega: u64) -> Subcomplex {
        let inside = |v: u32| omega >> v & 1 == 1;
        let vertices: Vec<u32> = (0..self.m as u32).filter(|&v| inside(v)).collect();
        let edges: Vec<(u32, u32)> =
            self.edges.iter().copied().filter(|&(a, b)| inside(a) && inside(b)).collect();
        let triangles: Vec<[u32; 3]> = self
            .triangles
            .iter()
            .copied()
            .filter(|t| t.iter().all(|&v| inside(v)))
            .collect();
        Subcomplex { vertices, edges, triangles }
    }
}

/// A full subcomplex K_omega, listing its simplices.
#[derive(Debug, Clone)]
pub struct Subcomplex {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
    pub triangles: Vec<[u32; 3]>,
}

/// Nerve of a simple 3-polytope; panics if the derived complex is not the
/// expected 2-sphere (which would mean the polytope is invalid).
pub fn nerve(p: &Polytope) -> NerveComplex {
    let m = p.m();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in p.facet_neighbors(i) {
            if i < j {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let mut triangles: Vec<[u32; 3]> = p.vertex_triples().to_vec();
    triangles.sort_unstable();
    let k = NerveComplex::new(m, edges, triangles);
    assert_eq!(k.edges.len(), p.f1(), "nerve edge count must equal f1");
    assert_eq!(k.triangles.len(), p.f0(), "nerve triangle count must equal f0");
    k
}

/// The simplicial 2-sphere dual to the polytope boundary (same as `nerve`).
pub fn dual_sphere(p: &Polytope) -> NerveComplex {
    nerve(p)
}

/// Nerve of an m-gon (n = 2): the boundary cycle on m vertices.
pub fn polygon_nerve(m: usize) -> NerveComplex {
    assert!(m >= 3);
    let edges = (0..m as u32).map(|i| (i.min((i + 1) % m as u32), i.max((i + 1) % m as u32))).collect();
    NerveComplex::new(m, edges, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{cube, dodecahedron, simplex};

    #[test]
    fn nerve_f_vectors_match_duals() {
        let k = nerve(&simplex());
        assert_eq!((k.m, k.edges.len(), k.triangles.len()), (4, 6, 4));
        let k = nerve(&cube());
        assert_eq!((k.m, k.edges.len(), k.triangles.len()), (6, 12, 8));
        let k = nerve(&dodecahedron());
        assert_eq!((k.m, k.edges.len(), k.triangles.len()), (12, 30, 20));
    }

    #[test]
    fn simplex_minimal_nonface_is_everything() {
        let k = nerve(&simplex());
        assert_eq!(k.minimal_nonfaces(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn flag_nonfaces_are_quadratic() {
        let k = nerve(&cube());
        assert!(k.minimal_nonfaces().iter().all(|nf| nf.len() == 2));
        let k = nerve(&dodecahedron());
        assert!(k.minimal_nonfaces().iter().all(|nf| nf.len() == 2));
    }
}
