//! The cochain algebra Λ[u_1..u_m] ⊗ Z[K] / (u_i v_i, v_i^2) with
//! du_i = v_i, dv_i = 0, whose cohomology is the moment-angle cohomology
//! ring. Elements are integer combinations of monomials v_sigma u_ext with
//! sigma a simplex of the nerve and ext disjoint from sigma.

use std::collections::BTreeMap;

use crate::homology::{in_image, IntMatrix};
use crate::nerve::{nerve, NerveComplex};
use crate::polytope::Polytope;

/// Basis monomial key: (sigma, ext), both sorted and disjoint.
pub type Monomial = (Vec<u32>, Vec<u32>);

/// Homogeneous-or-not formal sum of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DgaElement {
    pub terms: BTreeMap<Monomial, i64>,
}

impl DgaElement {
    pub fn zero() -> Self {
        DgaElement::default()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_term(&mut self, key: Monomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }
    /// Multidegree (-|ext|, omega) shared by all terms, if homogeneous.
    pub fn multidegree(&self) -> Option<(i32, Vec<u32>)> {
        let mut out: Option<(i32, Vec<u32>)> = None;
        for (sigma, ext) in self.terms.keys() {
            let mut omega: Vec<u32> = sigma.iter().chain(ext.iter()).copied().collect();
            omega.sort_unstable();
            let deg = -(ext.len() as i32);
            match &out {
                None => out = Some((deg, omega)),
                Some((d, w)) => {
                    if *d != deg || *w != omega {
                        return None;
                    }
                }
            }
        }
        out
    }
    /// Total cohomological degree 2|sigma| + |ext| of a homogeneous element.
    pub fn total_degree(&self) -> Option<usize> {
        let mut out = None;
        for (sigma, ext) in self.terms.keys() {
            let d = 2 * sigma.len() + ext.len();
            match out {
                None => out = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        out
    }
}

/// Number of pairs (a, b) with a in `left`, b in `right`, a > b; both slices
/// sorted ascending.
pub fn inversions(left: &[u32], right: &[u32]) -> usize {
    let mut count = 0;
    for &a in left {
        count += right.iter().take_while(|&&b| b < a).count();
    }
    count
}

fn merge_disjoint(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some(out)
}

/// The algebra over a fixed nerve.
pub struct CochainAlgebra {
    pub k: NerveComplex,
}

impl CochainAlgebra {
    pub fn new(k: NerveComplex) -> Self {
        CochainAlgebra { k }
    }

    pub fn for_polytope(p: &Polytope) -> Self {
        CochainAlgebra::new(nerve(p))
    }

    /// The monomial v_sigma u_ext; zero when sigma is not a simplex.
    pub fn monomial(&self, sigma: &[u32], ext: &[u32]) -> DgaElement {
        let mut s = sigma.to_vec();
        s.sort_unstable();
        let mut e = ext.to_vec();
        e.sort_unstable();
        assert!(merge_disjoint(&s, &e).is_some(), "sigma and ext must be disjoint");
        let mut out = DgaElement::zero();
        if self.k.is_simplex(&s) {
            out.add_term((s, e), 1);
        }
        out
    }

    pub fn scale(&self, a: &DgaElement, c: i64) -> DgaElement {
        let mut out = DgaElement::zero();
        for (k, &v) in &a.terms {
            out.add_term(k.clone(), c * v);
        }
        out
    }

    pub fn add(&self, a: &DgaElement, b: &DgaElement) -> DgaElement {
        let mut out = a.clone();
        for (k, &v) in &b.terms {
            out.add_term(k.clone(), v);
        }
        out
    }

    /// Product; errors when either factor is inhomogeneous.
    pub fn mul(&self, a: &DgaElement, b: &DgaElement) -> Result<DgaElement, String> {
        if !a.is_zero() && a.multidegree().is_none() {
            return Err("left factor is not multidegree-homogeneous".into());
        }
        if !b.is_zero() && b.multidegree().is_none() {
            return Err("right factor is not multidegree-homogeneous".into());
        }
        let mut out = DgaElement::zero();
        for ((s1, e1), &c1) in &a.terms {
            for ((s2, e2), &c2) in &b.terms {
                let Some(sigma) = merge_disjoint(s1, s2) else { continue };
                let Some(ext) = merge_disjoint(e1, e2) else { continue };
                if merge_disjoint(&sigma, &ext).is_none() {
                    continue;
                }
                if !self.k.is_simplex(&sigma) {
                    continue;
                }
                let sign = if inversions(e1, e2) % 2 == 0 { 1 } else { -1 };
                out.add_term((sigma, ext), sign * c1 * c2);
            }
        }
        Ok(out)
    }

    /// d(v_sigma u_ext) = sum over j in ext with sigma+j a simplex of
    /// (-1)^{|{e in ext : e < j}|} v_{sigma+j} u_{ext-j}.
    pub fn differential(&self, a: &DgaElement) -> DgaElement {
        let mut out = DgaElement::zero();
        for ((sigma, ext), &c) in &a.terms {
            for (pos, &j) in ext.iter().enumerate() {
                let s2 = merge_disjoint(sigma, &[j]).unwrap();
                if !self.k.is_simplex(&s2) {
                    continue;
                }
                let mut e2 = ext.clone();
                e2.remove(pos);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                out.add_term((s2, e2), sign * c);
            }
        }
        out
    }

    pub fn is_cocycle(&self, a: &DgaElement) -> bool {
        self.differential(a).is_zero()
    }

    /// All basis monomials of multidegree (-i, omega).
    pub fn basis(&self, i: usize, omega: &[u32]) -> Vec<Monomial> {
        let n = omega.len();
        assert!(i <= n && n < 32);
        let sigma_size = n - i;
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != sigma_size {
                continue;
            }
            let sigma: Vec<u32> =
                (0..n).filter(|&t| mask >> t & 1 == 1).map(|t| omega[t]).collect();
            if self.k.is_simplex(&sigma) {
                let ext: Vec<u32> =
                    (0..n).filter(|&t| mask >> t & 1 == 0).map(|t| omega[t]).collect();
                out.push((sigma, ext));
            }
        }
        out
    }

    /// Is the homogeneous cocycle `a` a coboundary, i.e. zero in cohomology?
    pub fn is_coboundary(&self, a: &DgaElement) -> bool {
        if a.is_zero() {
            return true;
        }
        let (deg, omega) = a.multidegree().expect("coboundary test needs a homogeneous element");
        let i = (-deg) as usize;
        debug_assert!(self.is_cocycle(a));
        let target = self.basis(i, &omega);
        let source = self.basis(i + 1, &omega);
        if source.is_empty() {
            return false;
        }
        let index: BTreeMap<&Monomial, usize> = target.iter().zip(0..).collect();
        let mut mat = IntMatrix::zeros(target.len(), source.len());
        for (c, mon) in source.iter().enumerate() {
            let mut el = DgaElement::zero();
            el.add_term(mon.clone(), 1);
            for (key, &v) in &self.differential(&el).terms {
                mat.set(index[&key], c, v as i128);
            }
        }
        let mut rhs = vec![0i128; target.len()];
        for (key, &v) in &a.terms {
            rhs[index[&key]] = v as i128;
        }
        in_image(&mat, &rhs)
    }
}

/// Whether every product of degree-3 classes [u_i v_j] (over disjoint
/// nonface pairs) vanishes in H^6. Equivalent to the absence of 4-belts.
pub fn h3_squared_trivial(p: &Polytope) -> bool {
    let alg = CochainAlgebra::for_polytope(p);
    let m = p.m();
    let mut nonface_pairs: Vec<(u32, u32)> = Vec::new();
    for i in 0..m as u32 {
        for j in i + 1..m as u32 {
            if !alg.k.has_edge(i, j) {
                nonface_pairs.push((i, j));
            }
        }
    }
    for a in 0..nonface_pairs.len() {
        for b in a + 1..nonface_pairs.len() {
            let (i, j) = nonface_pairs[a];
            let (p2, q2) = nonface_pairs[b];
            if i == p2 || i == q2 || j == p2 || j == q2 {
                continue;
            }
            let x = alg.monomial(&[j], &[i]);
            let y = alg.monomial(&[q2], &[p2]);
            let prod = alg.mul(&x, &y).unwrap();
            if prod.is_zero() {
                continue;
            }
            if !alg.is_coboundary(&prod) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{c60, cube, dodecahedron, simplex};

    #[test]
    fn unit_multiplication() {
        let alg = CochainAlgebra::for_polytope(&cube());
        let one = alg.monomial(&[], &[]);
        let x = alg.monomial(&[1], &[0]);
        assert_eq!(alg.mul(&x, &one).unwrap(), x);
        assert_eq!(alg.mul(&one, &x).unwrap(), x);
    }

    #[test]
    fn cube_detects_its_4belt() {
        // prism(4) facets: 0 bottom, 1 top, 2..=5 sides; disjoint pairs
        // (0,1), (2,4), (3,5)
        let p = cube();
        let alg = CochainAlgebra::for_polytope(&p);
        let x = alg.monomial(&[1], &[0]);
        let y = alg.monomial(&[4], &[2]);
        let prod = alg.mul(&x, &y).unwrap();
        assert!(!prod.is_zero());
        assert!(alg.is_cocycle(&prod));
        assert!(!alg.is_coboundary(&prod));
        assert!(!h3_squared_trivial(&p));
    }

    #[test]
    fn fullerenes_have_trivial_h3_square() {
        assert!(h3_squared_trivial(&dodecahedron()));
        assert!(h3_squared_trivial(&c60()));
    }

    #[test]
    fn simplex_has_no_products_at_all() {
        assert!(h3_squared_trivial(&simplex()));
    }

    #[test]
    fn d_squared_is_zero() {
        let alg = CochainAlgebra::for_polytope(&dodecahedron());
        let el = alg.monomial(&[0], &[3, 7, 9]);
        let d1 = alg.differential(&el);
        assert!(alg.differential(&d1).is_zero());
    }

    #[test]
    fn graded_commutativity_on_monomials() {
        let alg = CochainAlgebra::for_polytope(&dodecahedron());
        let x = alg.monomial(&[1], &[6]);
        let y = alg.monomial(&[2], &[9]);
        let xy = alg.mul(&x, &y).unwrap();
        let yx = alg.mul(&y, &x).unwrap();
        let (dx, dy) = (x.total_degree().unwrap(), y.total_degree().unwrap());
        let sign = if (dx * dy) % 2 == 0 { 1 } else { -1 };
        assert_eq!(xy, alg.scale(&yx, sign));
    }

    #[test]
    fn inhomogeneous_product_is_rejected() {
        let alg = CochainAlgebra::for_polytope(&cube());
        let mixed = alg.add(&alg.monomial(&[1], &[0]), &alg.monomial(&[2], &[0]));
        assert!(alg.mul(&mixed, &mixed).is_err());
    }
}
