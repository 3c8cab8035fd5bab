//! Bigraded Betti numbers of the moment-angle complex via reduced homology
//! of full subcomplexes, belt shortcuts, duality and the h-vector identity.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::belts::k_belts;
use crate::error::BettiError;
use crate::homology::{reduced_homology, HomologySummand};
use crate::nerve::{nerve, NerveComplex};
use crate::polytope::Polytope;

pub const FULL_SWEEP_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BettiMode {
    /// every subset (2^m sweep, gated at m <= 16)
    Full,
    /// subsets with |omega| <= j, the top filled in by duality
    UpToJ(usize),
    /// the six low cells with combinatorial descriptions
    BeltShortcuts,
}

/// Ranks per subset: reduced homology in degrees -1..=2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OmegaRanks(pub [u16; 4]);

impl OmegaRanks {
    pub fn rank_q(&self, q: i32) -> usize {
        self.0[(q + 1) as usize] as usize
    }
    /// beta^{-i, 2 omega} with j = |omega|.
    pub fn beta(&self, i: usize, j: usize) -> usize {
        let q = j as i32 - 1 - i as i32;
        if (-1..=2).contains(&q) {
            self.rank_q(q)
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BettiTable {
    pub m: usize,
    pub n: usize,
    /// computed cells (i, j) -> beta^{-i, 2j}
    pub ranks: BTreeMap<(usize, usize), u64>,
    pub torsion_free: bool,
    /// per-subset detail (full mode only), indexed by bitmask
    #[serde(skip)]
    pub per_omega: Option<Vec<OmegaRanks>>,
}

impl BettiTable {
    pub fn beta(&self, i: usize, j: usize) -> Option<u64> {
        self.ranks.get(&(i, j)).copied().or_else(|| {
            // absent cells inside the computed range are zero; report zero
            // only in full mode where every cell is known
            if self.per_omega.is_some() {
                Some(0)
            } else {
                None
            }
        })
    }

    /// Total graded ranks of H^k, k = 0..=m+n (only meaningful in full mode).
    pub fn graded_ranks(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.m + self.n + 1];
        for (&(i, j), &r) in &self.ranks {
            let k = 2 * j - i;
            out[k] += r;
        }
        out
    }
}

fn omega_ranks(k: &NerveComplex, mask: u64) -> (OmegaRanks, bool) {
    let sub = k.subcomplex(mask);
    let h = reduced_homology(&sub);
    let arr = [
        h.groups[0].rank as u16,
        h.groups[1].rank as u16,
        h.groups[2].rank as u16,
        h.groups[3].rank as u16,
    ];
    (OmegaRanks(arr), h.torsion_free())
}

/// Full 2^m sweep over an arbitrary nerve (n = 2 polygons run through the
/// same code as 3-polytope nerves).
pub fn betti_full_sweep(k: &NerveComplex, n: usize) -> Result<BettiTable, BettiError> {
    let m = k.m;
    if m > FULL_SWEEP_LIMIT {
        return Err(BettiError::TooManyFacets { m, limit: FULL_SWEEP_LIMIT });
    }
    let total = 1u64 << m;
    let results: Vec<(OmegaRanks, bool)> =
        (0..total).into_par_iter().map(|mask| omega_ranks(k, mask)).collect();
    let mut ranks: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut torsion_free = true;
    let mut per = Vec::with_capacity(total as usize);
    for (mask, (or, tf)) in results.into_iter().enumerate() {
        torsion_free &= tf;
        let j = (mask as u64).count_ones() as usize;
        for q in -1..=2i32 {
            let r = or.rank_q(q);
            if r > 0 {
                let i = (j as i32 - 1 - q) as usize;
                *ranks.entry((i, j)).or_insert(0) += r as u64;
            }
        }
        per.push(or);
    }
    Ok(BettiTable { m, n, ranks, torsion_free, per_omega: Some(per) })
}

fn count_subsets_with_components(p: &Polytope, size: usize) -> u64 {
    // sum over all `size`-subsets of (number of connected components - 1) of
    // the facet-adjacency graph restricted to the subset
    let m = p.m();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in p.facet_neighbors(i) {
            adj[i][j] = true;
        }
    }
    let mut subset: Vec<usize> = Vec::with_capacity(size);
    fn rec(m: usize, size: usize, start: usize, subset: &mut Vec<usize>, adj: &[Vec<bool>], acc: &mut u64) {
        if subset.len() == size {
            // tiny union-find
            let mut parent: Vec<usize> = (0..size).collect();
            fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                if parent[x] != x {
                    let r = find(parent, parent[x]);
                    parent[x] = r;
                }
                parent[x]
            }
            for a in 0..size {
                for b in a + 1..size {
                    if adj[subset[a]][subset[b]] {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        if ra != rb {
                            parent[ra] = rb;
                        }
                    }
                }
            }
            let comps = (0..size).filter(|&x| find(&mut parent, x) == x).count();
            *acc += (comps - 1) as u64;
            return;
        }
        for x in start..m {
            subset.push(x);
            rec(m, size, x + 1, subset, adj, acc);
            subset.pop();
        }
    }
    let mut acc = 0u64;
    rec(m, size, 0, &mut subset, &adj, &mut acc);
    acc
}

/// Number of disjoint facet pairs; this is beta^{-1,4}.
pub fn disjoint_pair_count(p: &Polytope) -> u64 {
    let m = p.m();
    let mut count = 0u64;
    for i in 0..m {
        for j in i + 1..m {
            if !p.adjacent_facets(i, j) {
                count += 1;
            }
        }
    }
    count
}

/// Bigraded Betti numbers of a simple 3-polytope.
pub fn betti_bigraded(p: &Polytope, mode: BettiMode) -> Result<BettiTable, BettiError> {
    match mode {
        BettiMode::Full => betti_full_sweep(&nerve(p), 3),
        BettiMode::UpToJ(jmax) => {
            let k = nerve(p);
            let m = p.m();
            if m > 63 {
                return Err(BettiError::BadMode("m too large for subset masks".into()));
            }
            let masks: Vec<u64> =
                (0..1u64 << m).filter(|mask| (mask.count_ones() as usize) <= jmax).collect();
            let results: Vec<(u64, OmegaRanks, bool)> = masks
                .par_iter()
                .map(|&mask| {
                    let (or, tf) = omega_ranks(&k, mask);
                    (mask, or, tf)
                })
                .collect();
            let mut ranks: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            let mut torsion_free = true;
            for (mask, or, tf) in results {
                torsion_free &= tf;
                let j = mask.count_ones() as usize;
                for q in -1..=2i32 {
                    let r = or.rank_q(q);
                    if r > 0 {
                        let i = (j as i32 - 1 - q) as usize;
                        *ranks.entry((i, j)).or_insert(0) += r as u64;
                        // bigraded Poincare duality fills the top band
                        let (di, dj) = (m - 3 - i, m - j);
                        if dj > jmax {
                            *ranks.entry((di, dj)).or_insert(0) += r as u64;
                        }
                    }
                }
            }
            Ok(BettiTable { m, n: 3, ranks, torsion_free, per_omega: None })
        }
        BettiMode::BeltShortcuts => {
            let m = p.m();
            let belts = |k: usize| if k <= m { k_belts(p, k).len() as u64 } else { 0 };
            let mut ranks = BTreeMap::new();
            ranks.insert((1, 2), disjoint_pair_count(p));
            ranks.insert((1, 3), belts(3));
            ranks.insert((2, 3), count_subsets_with_components(p, 3));
            ranks.insert((2, 4), belts(4));
            ranks.insert((3, 4), count_subsets_with_components(p, 4));
            ranks.insert((3, 5), belts(5));
            Ok(BettiTable { m, n: 3, ranks, torsion_free: true, per_omega: None })
        }
    }
}

/// Bigraded Poincare duality over every subset; needs a full-mode table.
pub fn poincare_check(t: &BettiTable) -> bool {
    let Some(per) = &t.per_omega else { return false };
    let m = t.m;
    let full = (1u64 << m) - 1;
    for mask in 0..=full {
        let co = full ^ mask;
        for q in -1..=2i32 {
            let dual_q = t.n as i32 - 2 - q;
            let a = per[mask as usize].rank_q(q);
            let b = if (-1..=2).contains(&dual_q) { per[co as usize].rank_q(dual_q) } else { 0 };
            if a != b {
                return false;
            }
        }
    }
    true
}

/// Exact check of (1-t^2)^{m-n} (h_0 + h_1 t^2 + ... + h_n t^{2n})
/// = sum (-1)^i beta^{-i,2j} t^{2j}, in the variable x = t^2.
pub fn poly_identity_check(t: &BettiTable, f_vector: &[i64]) -> bool {
    if t.per_omega.is_none() {
        return false;
    }
    let n = t.n;
    let m = t.m;
    // h-polynomial coefficients from sum_k f_{k-1} (t-1)^{n-k}, f_{-1} = 1
    let mut h = vec![0i64; n + 1];
    for k in 0..=n {
        let f = if k == 0 { 1 } else { f_vector[n - k] };
        // f * (t-1)^{n-k}
        let d = n - k;
        for i in 0..=d {
            h[i] += f * binom(d, i) * if (d - i) % 2 == 0 { 1 } else { -1 };
        }
    }
    // lhs = (1-x)^{m-n} * (h_0 + h_1 x + ... + h_n x^n)
    let mut lhs = vec![0i64; m - n + 1];
    for i in 0..=(m - n) {
        lhs[i] = binom(m - n, i) * if i % 2 == 0 { 1 } else { -1 };
    }
    let lhs = poly_mul(&lhs, &h);
    let mut rhs = vec![0i64; m + 1];
    for (&(i, j), &r) in &t.ranks {
        rhs[j] += if i % 2 == 0 { r as i64 } else { -(r as i64) };
    }
    let len = lhs.len().max(rhs.len());
    (0..len).all(|i| lhs.get(i).copied().unwrap_or(0) == rhs.get(i).copied().unwrap_or(0))
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut r = 1i64;
    for i in 0..k.min(n - k) {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Closed-form predictions for the low bigraded Betti numbers of a simple
/// 3-polytope with m facets, plus the fullerene specializations at p6.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub b_1_4: i64,
    pub b26_minus_b16: i64,
    pub b38_minus_b28: i64,
    pub fullerene_b_1_4: i64,
    pub fullerene_b_2_6: i64,
    pub fullerene_b_3_8: i64,
}

pub fn betti_closed_forms(p6: usize, m: usize) -> ClosedForms {
    assert!(m >= 4);
    let h = m as i64 - 3;
    let p6 = p6 as i64;
    let exact = |num: i64, den: i64| {
        debug_assert_eq!(num % den, 0);
        num / den
    };
    ClosedForms {
        b_1_4: exact(h * (h - 1), 2),
        b26_minus_b16: exact((h * h - 1) * (h - 3), 3),
        b38_minus_b28: exact((h + 1) * h * (h - 2) * (h - 5), 8),
        fullerene_b_1_4: exact((8 + p6) * (9 + p6), 2),
        fullerene_b_2_6: exact((6 + p6) * (8 + p6) * (10 + p6), 3),
        fullerene_b_3_8: exact((4 + p6) * (7 + p6) * (9 + p6) * (10 + p6), 8),
    }
}

/// Reduced homology of one full subcomplex of the nerve of `p`.
pub fn subcomplex_homology(p: &Polytope, omega: &[u32]) -> [HomologySummand; 4] {
    let k = nerve(p);
    let mut mask = 0u64;
    for &v in omega {
        mask |= 1 << v;
    }
    reduced_homology(&k.subcomplex(mask)).groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::polygon_nerve;
    use crate::polytope::*;

    #[test]
    fn square_sweep_is_s3_times_s3() {
        let t = betti_full_sweep(&polygon_nerve(4), 2).unwrap();
        assert_eq!(t.graded_ranks(), vec![1, 0, 0, 2, 0, 0, 1]);
    }

    #[test]
    fn triangle_sweep_is_s5() {
        let t = betti_full_sweep(&polygon_nerve(3), 2).unwrap();
        assert_eq!(t.graded_ranks(), vec![1, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn dodecahedron_low_cells() {
        let p = dodecahedron();
        let t = betti_bigraded(&p, BettiMode::BeltShortcuts).unwrap();
        assert_eq!(t.beta(1, 2), Some(36));
        assert_eq!(t.beta(2, 3), Some(160));
        assert_eq!(t.beta(3, 4), Some(315));
        assert_eq!(t.beta(1, 3), Some(0));
        assert_eq!(t.beta(2, 4), Some(0));
        assert_eq!(t.beta(3, 5), Some(12));
    }

    #[test]
    fn closed_forms_examples() {
        let c = betti_closed_forms(0, 12);
        assert_eq!(c.b_1_4, 36);
        assert_eq!(c.fullerene_b_1_4, 36);
        assert_eq!(c.fullerene_b_2_6, 160);
        assert_eq!(c.fullerene_b_3_8, 315);
        assert_eq!(betti_closed_forms(20, 32).fullerene_b_1_4, 406);
        assert_eq!(betti_closed_forms(0, 6).b26_minus_b16, 0);
    }

    #[test]
    fn cube_full_table_checks() {
        let p = cube();
        let t = betti_bigraded(&p, BettiMode::Full).unwrap();
        assert!(t.torsion_free);
        assert!(poincare_check(&t));
        let (f0, f1, f2) = p.f_vector();
        assert!(poly_identity_check(&t, &[f0 as i64, f1 as i64, f2 as i64]));
        // shortcut cells agree with the sweep
        let s = betti_bigraded(&p, BettiMode::BeltShortcuts).unwrap();
        for key in [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5)] {
            assert_eq!(t.beta(key.0, key.1), s.beta(key.0, key.1), "cell {key:?}");
        }
    }

    #[test]
    fn up_to_j_matches_full_on_cube() {
        let p = cube();
        let full = betti_bigraded(&p, BettiMode::Full).unwrap();
        let part = betti_bigraded(&p, BettiMode::UpToJ(2)).unwrap();
        for (&(i, j), &r) in &part.ranks {
            assert_eq!(full.beta(i, j), Some(r), "cell ({i},{j})");
        }
        // duality-filled top band present
        assert!(part.ranks.contains_key(&(part.m - 3, part.m)));
    }

    #[test]
    fn disjoint_pairs_formula() {
        for p in [cube(), dodecahedron(), barrel(), prism(5)] {
            let m = p.m() as u64;
            assert_eq!(disjoint_pair_count(&p), m * (m - 1) / 2 - p.f1() as u64);
        }
    }

    #[test]
    fn simplex_table_is_trivial() {
        let t = betti_bigraded(&simplex(), BettiMode::Full).unwrap();
        assert!(poincare_check(&t));
        assert!(poly_identity_check(&t, &[4, 6, 4]));
        assert_eq!(t.graded_ranks(), vec![1, 0, 0, 0, 0, 0, 0, 1]);
    }
}
