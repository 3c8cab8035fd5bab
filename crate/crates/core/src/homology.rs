//! Smith normal form over the integers and reduced simplicial homology of
//! full subcomplexes. Matrices here never exceed a few hundred entries per
//! side, so plain i128 arithmetic with minimal-pivot reduction is exact.

use serde::{Deserialize, Serialize};

use crate::nerve::Subcomplex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }
    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }
}

/// Diagonal of the Smith normal form with the divisibility chain enforced;
/// entries are positive, the length is the rank.
pub fn snf_diagonal(a: &IntMatrix) -> Vec<i128> {
    let (d, _) = snf_with_row_ops(a, None);
    d
}

pub fn rank(a: &IntMatrix) -> usize {
    snf_diagonal(a).len()
}

/// Run the Smith reduction; when `rhs` is given, apply every row operation
/// to it as well and return the transformed vector.
fn snf_with_row_ops(a: &IntMatrix, rhs: Option<&[i128]>) -> (Vec<i128>, Option<Vec<i128>>) {
    let mut m = a.clone();
    let mut b: Option<Vec<i128>> = rhs.map(|r| r.to_vec());
    let (rows, cols) = (m.rows, m.cols);
    let mut t = 0usize;
    let mut diag: Vec<i128> = Vec::new();
    while t < rows.min(cols) {
        // minimal nonzero pivot in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                let v = m.get(r, c).abs();
                if v != 0 && pivot.map_or(true, |(pr, pc)| v < m.get(pr, pc).abs()) {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        swap_rows(&mut m, b.as_deref_mut(), t, pr);
        swap_cols(&mut m, t, pc);
        loop {
            let p = m.get(t, t);
            debug_assert!(p != 0);
            let mut clean = true;
            for r in t + 1..rows {
                let q = div_round(m.get(r, t), p);
                if q != 0 {
                    row_axpy(&mut m, b.as_deref_mut(), r, t, -q);
                }
                if m.get(r, t) != 0 {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                let q = div_round(m.get(t, c), p);
                if q != 0 {
                    col_axpy(&mut m, c, t, -q);
                }
                if m.get(t, c) != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // a smaller remainder appeared somewhere in row/column t
            let mut moved = false;
            for r in t + 1..rows {
                if m.get(r, t) != 0 {
                    swap_rows(&mut m, b.as_deref_mut(), t, r);
                    moved = true;
                    break;
                }
            }
            if !moved {
                for c in t + 1..cols {
                    if m.get(t, c) != 0 {
                        swap_cols(&mut m, t, c);
                        break;
                    }
                }
            }
        }
        diag.push(m.get(t, t).abs());
        t += 1;
    }
    // enforce the divisibility chain d1 | d2 | ... (gcd cascade)
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if diag[j] % diag[i] != 0 {
                let g = gcd(diag[i], diag[j]);
                let l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    (diag, b)
}

fn swap_rows(m: &mut IntMatrix, b: Option<&mut [i128]>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..m.cols {
        let t = m.get(r1, c);
        m.set(r1, c, m.get(r2, c));
        m.set(r2, c, t);
    }
    if let Some(b) = b {
        b.swap(r1, r2);
    }
}

fn swap_cols(m: &mut IntMatrix, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for r in 0..m.rows {
        let t = m.get(r, c1);
        m.set(r, c1, m.get(r, c2));
        m.set(r, c2, t);
    }
}

fn row_axpy(m: &mut IntMatrix, b: Option<&mut [i128]>, target: usize, source: usize, factor: i128) {
    for c in 0..m.cols {
        let v = m.get(target, c) + factor * m.get(source, c);
        m.set(target, c, v);
    }
    if let Some(b) = b {
        b[target] += factor * b[source];
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, source: usize, factor: i128) {
    for r in 0..m.rows {
        let v = m.get(r, target) + factor * m.get(r, source);
        m.set(r, target, v);
    }
}

fn div_round(a: i128, b: i128) -> i128 {
    // round-to-nearest keeps remainders at most |b|/2
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if (r > 0) == (b > 0) { 1 } else { -1 }
    } else {
        q
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Is `b` in the integer column span of `a`? Row operations of the Smith
/// reduction are mirrored on `b`; membership then reads off the diagonal.
pub fn in_image(a: &IntMatrix, b: &[i128]) -> bool {
    assert_eq!(a.rows, b.len());
    let (diag, tb) = snf_with_row_ops(a, Some(b));
    let tb = tb.unwrap();
    for (i, &v) in tb.iter().enumerate() {
        match diag.get(i) {
            Some(&d) => {
                if v % d != 0 {
                    return false;
                }
            }
            None => {
                if v != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// One reduced homology group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummand {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologySummand {
    pub fn free(rank: usize) -> Self {
        HomologySummand { rank, torsion: Vec::new() }
    }
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// Reduced homology of a full subcomplex in degrees -1, 0, 1, 2.
pub struct ReducedHomology {
    pub groups: [HomologySummand; 4],
}

impl ReducedHomology {
    /// Group in degree q (q in -1..=2).
    pub fn h(&self, q: i32) -> &HomologySummand {
        &self.groups[(q + 1) as usize]
    }
    pub fn torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.is_torsion_free())
    }
}

/// Number of inversions between i and the elements of a sorted slice:
/// |{ j in sigma : j < i }|.
pub fn position_in(i: u32, sigma: &[u32]) -> usize {
    sigma.iter().filter(|&&j| j < i).count()
}

/// Boundary matrices of the (reduced) chain complex of a subcomplex, with
/// the sign of dropping vertex i from sigma being (-1)^{|{j in sigma: j < i}|}.
pub fn boundary_matrices(sub: &Subcomplex) -> [IntMatrix; 3] {
    let n0 = sub.vertices.len();
    let n1 = sub.edges.len();
    let n2 = sub.triangles.len();
    let vindex = |v: u32| sub.vertices.binary_search(&v).unwrap();
    let eindex = |e: (u32, u32)| sub.edges.binary_search(&e).unwrap();

    // d0 : C0 -> C-1, every vertex maps to the empty simplex
    let mut d0 = IntMatrix::zeros(if n0 > 0 { 1 } else { 0 }, n0);
    for c in 0..n0 {
        d0.set(0, c, 1);
    }
    let mut d1 = IntMatrix::zeros(n0, n1);
    for (c, &(a, b)) in sub.edges.iter().enumerate() {
        d1.set(vindex(b), c, 1);
        d1.set(vindex(a), c, -1);
    }
    let mut d2 = IntMatrix::zeros(n1, n2);
    for (c, t) in sub.triangles.iter().enumerate() {
        let [a, b, cc] = *t;
        d2.set(eindex((b, cc)), c, 1);
        d2.set(eindex((a, cc)), c, -1);
        d2.set(eindex((a, b)), c, 1);
    }
    [d0, d1, d2]
}

/// Reduced homology over Z of a full subcomplex, via Smith normal form of
/// the boundary matrices. The empty subcomplex has H_{-1} = Z.
pub fn reduced_homology(sub: &Subcomplex) -> ReducedHomology {
    let n = [sub.vertices.len(), sub.edges.len(), sub.triangles.len()];
    if n[0] == 0 {
        return ReducedHomology {
            groups: [
                HomologySummand::free(1),
                HomologySummand::free(0),
                HomologySummand::free(0),
                HomologySummand::free(0),
            ],
        };
    }
    let [d0, d1, d2] = boundary_matrices(sub);
    let s0 = snf_diagonal(&d0);
    let s1 = snf_diagonal(&d1);
    let s2 = snf_diagonal(&d2);
    let torsion = |s: &[i128]| -> Vec<u64> {
        s.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect()
    };
    let h_neg1 = HomologySummand { rank: 1 - s0.len(), torsion: torsion(&s0) };
    let h0 = HomologySummand { rank: n[0] - s0.len() - s1.len(), torsion: torsion(&s1) };
    let h1 = HomologySummand { rank: n[1] - s1.len() - s2.len(), torsion: torsion(&s2) };
    let h2 = HomologySummand { rank: n[2] - s2.len(), torsion: Vec::new() };
    ReducedHomology { groups: [h_neg1, h0, h1, h2] }
}

/// Ranks of reduced cohomology computed through the coboundary (transposed)
/// matrices; the independent route for the universal-coefficients check.
pub fn reduced_cohomology_ranks(sub: &Subcomplex) -> [usize; 4] {
    let n = [sub.vertices.len(), sub.edges.len(), sub.triangles.len()];
    if n[0] == 0 {
        return [1, 0, 0, 0];
    }
    let [d0, d1, d2] = boundary_matrices(sub);
    let r0 = rank(&d0.transpose());
    let r1 = rank(&d1.transpose());
    let r2 = rank(&d2.transpose());
    [1 - r0, n[0] - r0 - r1, n[1] - r1 - r2, n[2] - r2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::{nerve, polygon_nerve};
    use crate::polytope::{cube, dodecahedron, simplex};

    #[test]
    fn snf_small_cases() {
        let mut m = IntMatrix::zeros(2, 2);
        m.set(0, 0, 2);
        m.set(1, 1, 3);
        assert_eq!(snf_diagonal(&m), vec![1, 6]);
        let mut m = IntMatrix::zeros(2, 3);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 2, 4);
        assert_eq!(snf_diagonal(&m), vec![1, 4]);
    }

    #[test]
    fn empty_subcomplex_has_reduced_minus1() {
        let k = nerve(&cube());
        let h = reduced_homology(&k.subcomplex(0));
        assert_eq!(h.h(-1).rank, 1);
        assert_eq!(h.h(0).rank, 0);
    }

    #[test]
    fn full_omega_is_a_sphere() {
        for p in [simplex(), cube(), dodecahedron()] {
            let k = nerve(&p);
            let full = (1u64 << p.m()) - 1;
            let h = reduced_homology(&k.subcomplex(full));
            assert_eq!(h.h(2).rank, 1);
            assert_eq!(h.h(1).rank, 0);
            assert_eq!(h.h(0).rank, 0);
            assert!(h.torsion_free());
        }
    }

    #[test]
    fn two_disjoint_facets_give_h0() {
        let p = cube();
        let k = nerve(&p);
        // facets 0 and 1 of the prism construction are the two k-gons
        assert!(!p.adjacent_facets(0, 1));
        let h = reduced_homology(&k.subcomplex(0b11));
        assert_eq!(h.h(0).rank, 1);
        assert_eq!(h.h(1).rank, 0);
    }

    #[test]
    fn polygon_full_subcomplex_is_a_circle() {
        let k = polygon_nerve(4);
        let h = reduced_homology(&k.subcomplex(0b1111));
        assert_eq!(h.h(1).rank, 1);
    }

    #[test]
    fn cochain_ranks_match_chain_ranks() {
        let p = dodecahedron();
        let k = nerve(&p);
        for omega in [0u64, 0b11, 0b1010101, 0xfff, 0b111000111] {
            let sub = k.subcomplex(omega & ((1 << 12) - 1));
            let h = reduced_homology(&sub);
            let cr = reduced_cohomology_ranks(&sub);
            for q in 0..4 {
                assert_eq!(h.groups[q].rank, cr[q], "omega {omega:b} q {q}");
            }
        }
    }

    #[test]
    fn in_image_detects_divisibility() {
        let mut m = IntMatrix::zeros(2, 1);
        m.set(0, 0, 2);
        assert!(in_image(&m, &[4, 0]));
        assert!(!in_image(&m, &[3, 0]));
        assert!(!in_image(&m, &[2, 1]));
    }
}
