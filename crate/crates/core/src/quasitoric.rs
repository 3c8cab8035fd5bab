//! Characteristic matrices from facet 4-colorings and the graded ranks of
//! the associated quotient ring Z[v_1..v_m]/(J_SR + I_linear).

use serde::{Deserialize, Serialize};

use crate::error::QuasitoricError;
use crate::nerve::{nerve, NerveComplex};
use crate::polytope::Polytope;

/// Proper facet coloring with colors 1..=4, by exhaustive backtracking over
/// facets ordered by descending degree then index. Deterministic.
pub fn four_color(p: &Polytope) -> Vec<u8> {
    let m = p.m();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(p.gonality(i)), i));
    let neighbors: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let mut n = p.facet_neighbors(i);
            n.sort_unstable();
            n.dedup();
            n
        })
        .collect();
    let mut colors = vec![0u8; m];
    fn assign(order: &[usize], neighbors: &[Vec<usize>], colors: &mut [u8], at: usize) -> bool {
        if at == order.len() {
            return true;
        }
        let f = order[at];
        'colors: for c in 1..=4u8 {
            for &g in &neighbors[f] {
                if colors[g] == c {
                    continue 'colors;
                }
            }
            colors[f] = c;
            if assign(order, neighbors, colors, at + 1) {
                return true;
            }
            colors[f] = 0;
        }
        false
    }
    let ok = assign(&order, &neighbors, &mut colors, 0);
    assert!(ok, "a proper 4-coloring exists for every valid input");
    colors
}

/// 3 x m integer characteristic matrix with column e_color, e4 = e1+e2+e3;
/// every vertex minor is +-1 (checked exhaustively on construction).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharMatrix {
    /// column per facet
    pub columns: Vec<[i64; 3]>,
    pub coloring: Vec<u8>,
}

const E: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];

fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

pub fn char_matrix(p: &Polytope, coloring: &[u8]) -> Result<CharMatrix, QuasitoricError> {
    assert_eq!(coloring.len(), p.m());
    for i in 0..p.m() {
        for j in p.facet_neighbors(i) {
            if coloring[i] == coloring[j] {
                return Err(QuasitoricError::ImproperColoring(i.min(j), i.max(j), coloring[i]));
            }
        }
    }
    let columns: Vec<[i64; 3]> = coloring.iter().map(|&c| E[c as usize - 1]).collect();
    let cm = CharMatrix { columns, coloring: coloring.to_vec() };
    cm.check_minors(p)?;
    Ok(cm)
}

impl CharMatrix {
    /// Exhaustive vertex minor check: the columns of any vertex's three
    /// facets must span Z^3.
    pub fn check_minors(&self, p: &Polytope) -> Result<(), QuasitoricError> {
        for (v, t) in p.vertex_triples().iter().enumerate() {
            let d = det3(
                self.columns[t[0] as usize],
                self.columns[t[1] as usize],
                self.columns[t[2] as usize],
            );
            if d.abs() != 1 {
                return Err(QuasitoricError::SingularMinor(v as u32, d));
            }
        }
        Ok(())
    }

    /// The three linear relations sum_i lambda_{r,i} v_i, r = 0..3.
    pub fn linear_rows(&self, m: usize) -> [Vec<i64>; 3] {
        let mut rows = [vec![0i64; m], vec![0i64; m], vec![0i64; m]];
        for (i, col) in self.columns.iter().enumerate() {
            for r in 0..3 {
                rows[r][i] = col[r];
            }
        }
        rows
    }

    /// Reorder facets so the three facets of vertex 0 come first and
    /// transform the matrix to the shape (I_3, Lambda_*). Returns the facet
    /// permutation (new index -> old index) and the transformed columns.
    pub fn finely_ordered(&self, p: &Polytope) -> (Vec<usize>, Vec<[i64; 3]>) {
        let t = p.vertex_triples()[0];
        let mut perm: Vec<usize> = vec![t[0] as usize, t[1] as usize, t[2] as usize];
        for i in 0..p.m() {
            if !perm.contains(&i) {
                perm.push(i);
            }
        }
        let a = self.columns[perm[0]];
        let b = self.columns[perm[1]];
        let c = self.columns[perm[2]];
        let det = det3(a, b, c);
        debug_assert_eq!(det.abs(), 1);
        // adjugate of the 3x3 with columns a,b,c, divided by the +-1 det
        let mat = [[a[0], b[0], c[0]], [a[1], b[1], c[1]], [a[2], b[2], c[2]]];
        let cof = |r: usize, cc: usize| -> i64 {
            let rs: Vec<usize> = (0..3).filter(|&x| x != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&x| x != cc).collect();
            let minor = mat[rs[0]][cs[0]] * mat[rs[1]][cs[1]] - mat[rs[0]][cs[1]] * mat[rs[1]][cs[0]];
            if (r + cc) % 2 == 0 {
                minor
            } else {
                -minor
            }
        };
        let inv = |r: usize, cc: usize| cof(cc, r) * det; // det is +-1
        let cols: Vec<[i64; 3]> = perm
            .iter()
            .map(|&old| {
                let col = self.columns[old];
                let mut out = [0i64; 3];
                for r in 0..3 {
                    out[r] = (0..3).map(|k| inv(r, k) * col[k]).sum();
                }
                out
            })
            .collect();
        (perm, cols)
    }
}

/// Generators and graded ranks of Z[v_1..v_m]/(J_SR + I_linear).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingPresentation {
    pub m: usize,
    /// minimal nonfaces (the Stanley-Reisner generators)
    pub sr_generators: Vec<Vec<u32>>,
    pub linear_relations: Vec<Vec<i64>>,
    /// ranks in degrees 0, 2, 4, 6
    pub graded_ranks: [u64; 4],
}

pub fn presentation(p: &Polytope, cm: &CharMatrix) -> RingPresentation {
    let k = nerve(p);
    let ranks = cohomology_ranks_impl(p.m(), &k, cm);
    RingPresentation {
        m: p.m(),
        sr_generators: k.minimal_nonfaces(),
        linear_relations: cm.linear_rows(p.m()).to_vec(),
        graded_ranks: ranks,
    }
}

pub fn cohomology_ranks(p: &Polytope, cm: &CharMatrix) -> [u64; 4] {
    cohomology_ranks_impl(p.m(), &nerve(p), cm)
}

/// Degree-by-degree exact linear algebra: the degree-l piece of the quotient
/// is spanned by the monomials whose support is a face, modulo the images of
/// (monomial) x (linear relation).
fn cohomology_ranks_impl(m: usize, k: &NerveComplex, cm: &CharMatrix) -> [u64; 4] {
    let rows = cm.linear_rows(m);
    let mut out = [0u64; 4];
    out[0] = 1;
    for degree in 1..=3usize {
        let monos = face_monomials(m, k, degree);
        let index: std::collections::HashMap<Vec<u32>, usize> =
            monos.iter().cloned().zip(0..).collect();
        let mut rel: Vec<Vec<i128>> = Vec::new();
        let lower = face_monomials(m, k, degree - 1);
        for x in &lower {
            for row in &rows {
                let mut v = vec![0i128; monos.len()];
                let mut nonzero = false;
                for (c, &coef) in row.iter().enumerate() {
                    if coef == 0 {
                        continue;
                    }
                    let mut mono = x.clone();
                    mono.push(c as u32);
                    mono.sort_unstable();
                    if let Some(&t) = index.get(&mono) {
                        v[t] += coef as i128;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rel.push(v);
                }
            }
        }
        let r = rank_integer(rel, monos.len());
        out[degree] = (monos.len() - r) as u64;
    }
    out
}

/// Degree-l monomials (as sorted multisets) whose support is a simplex of
/// the nerve; these span the Stanley-Reisner ring in that degree.
fn face_monomials(m: usize, k: &NerveComplex, degree: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(m: usize, k: &NerveComplex, degree: usize, from: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == degree {
            let mut support = cur.clone();
            support.dedup();
            if k.is_simplex(&support) {
                out.push(cur.clone());
            }
            return;
        }
        for v in from..m as u32 {
            cur.push(v);
            rec(m, k, degree, v, cur, out);
            cur.pop();
        }
    }
    rec(m, k, degree, 0, &mut cur, &mut out);
    out
}

/// Exact rank of an integer matrix given as rows, by fraction-free Gaussian
/// elimination with content reduction.
fn rank_integer(mut rows: Vec<Vec<i128>>, cols: usize) -> usize {
    let reduce = |r: &mut Vec<i128>| {
        let mut g: i128 = 0;
        for &x in r.iter() {
            g = crate::homology::gcd(g, x);
        }
        if g > 1 {
            for x in r.iter_mut() {
                *x /= g;
            }
        }
    };
    for r in rows.iter_mut() {
        reduce(r);
    }
    rows.retain(|r| r.iter().any(|&x| x != 0));
    let mut rank = 0usize;
    for col in 0..cols {
        // smallest nonzero pivot in this column
        let mut pivot: Option<usize> = None;
        for (i, r) in rows.iter().enumerate().skip(rank) {
            if r[col] != 0 && pivot.map_or(true, |p| r[col].abs() < rows[p][col].abs()) {
                pivot = Some(i);
            }
        }
        let Some(pi) = pivot else { continue };
        rows.swap(rank, pi);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pval = prow[col];
        for r in tail.iter_mut() {
            if r[col] == 0 {
                continue;
            }
            let rv = r[col];
            let g = crate::homology::gcd(pval, rv);
            let (a, b) = (pval / g, rv / g);
            for c2 in 0..cols {
                r[c2] = r[c2]
                    .checked_mul(a)
                    .and_then(|x| x.checked_sub(prow[c2].checked_mul(b).unwrap()))
                    .expect("rank elimination overflow");
            }
            reduce(r);
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
        rank += 1;
        if rank >= rows.len() {
            break;
        }
    }
    rank
}

/// Text emission of c1 (reduced modulo the linear relations against the
/// facets of vertex 0) and the formal total Chern and Pontryagin products.
pub fn char_class_presentation(p: &Polytope, cm: &CharMatrix) -> String {
    let m = p.m();
    let (perm, cols) = cm.finely_ordered(p);
    // with the transformed relations v_{perm[r]} = -sum_{j>=3} cols[j][r] v_{perm[j]},
    // c1 = sum_i v_i reduces to sum_{j>=3} (1 - col0 - col1 - col2) v_{perm[j]}
    let mut terms: Vec<(usize, i64)> = Vec::new();
    for j in 3..m {
        let c = 1 - cols[j][0] - cols[j][1] - cols[j][2];
        if c != 0 {
            terms.push((perm[j], c));
        }
    }
    terms.sort_unstable();
    let mut c1 = String::new();
    for (idx, (facet, coef)) in terms.iter().enumerate() {
        if idx == 0 {
            if *coef < 0 {
                c1.push('-');
            }
        } else {
            c1.push_str(if *coef < 0 { " - " } else { " + " });
        }
        let mag = coef.abs();
        if mag != 1 {
            c1.push_str(&mag.to_string());
        }
        c1.push_str(&format!("v{}", facet + 1));
    }
    if terms.is_empty() {
        c1.push('0');
    }
    let chern: String = (1..=m).map(|i| format!("(1+v{i})")).collect();
    let pontryagin: String = (1..=m).map(|i| format!("(1+v{i}^2)")).collect();
    format!("c1 = {c1}\nC = {chern}\nP = {pontryagin}\n")
}

/// Parse the emission back: returns (number of Chern factors, number of
/// Pontryagin factors), validating shape and index order.
pub fn parse_class_presentation(text: &str) -> Result<(usize, usize), QuasitoricError> {
    let mut chern = None;
    let mut pont = None;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("C = ") {
            chern = Some(count_factors(rest, false)?);
        } else if let Some(rest) = line.strip_prefix("P = ") {
            pont = Some(count_factors(rest, true)?);
        }
    }
    match (chern, pont) {
        (Some(c), Some(p)) => Ok((c, p)),
        _ => Err(QuasitoricError::Presentation("missing C or P line".into())),
    }
}

fn count_factors(s: &str, squared: bool) -> Result<usize, QuasitoricError> {
    let mut count = 0usize;
    let mut rest = s;
    while !rest.is_empty() {
        let close = rest
            .find(')')
            .ok_or_else(|| QuasitoricError::Presentation("unbalanced parenthesis".into()))?;
        let factor = &rest[..=close];
        let expect = if squared {
            format!("(1+v{}^2)", count + 1)
        } else {
            format!("(1+v{})", count + 1)
        };
        if factor != expect {
            return Err(QuasitoricError::Presentation(format!(
                "factor {} reads {factor}, expected {expect}",
                count + 1
            )));
        }
        count += 1;
        rest = &rest[close + 1..];
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::*;

    #[test]
    fn cube_uses_three_colors() {
        let p = cube();
        let colors = four_color(&p);
        let used: std::collections::HashSet<u8> = colors.iter().copied().collect();
        assert!(used.len() <= 4);
        assert!(used.len() == 3, "the cube is 3-colorable, got {used:?}");
        char_matrix(&p, &colors).unwrap();
    }

    #[test]
    fn dodecahedron_needs_four() {
        let p = dodecahedron();
        let colors = four_color(&p);
        let used: std::collections::HashSet<u8> = colors.iter().copied().collect();
        assert_eq!(used.len(), 4);
        char_matrix(&p, &colors).unwrap();
    }

    #[test]
    fn barrel_and_c60_pass_minor_checks() {
        for p in [barrel(), c60()] {
            let cm = char_matrix(&p, &four_color(&p)).unwrap();
            cm.check_minors(&p).unwrap();
        }
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let p = cube();
        let mut colors = four_color(&p);
        let j = p.facet_neighbors(0)[0];
        colors[j] = colors[0];
        assert!(matches!(
            char_matrix(&p, &colors),
            Err(QuasitoricError::ImproperColoring(..))
        ));
    }

    #[test]
    fn graded_ranks_match_h_vector() {
        for p in [simplex(), cube(), prism(5), dodecahedron()] {
            let cm = char_matrix(&p, &four_color(&p)).unwrap();
            let ranks = cohomology_ranks(&p, &cm);
            let h = p.m() as u64 - 3;
            assert_eq!(ranks, [1, h, h, 1], "m = {}", p.m());
        }
    }

    #[test]
    fn pentagon_example_matrix_has_unit_minors() {
        // the n = 2 pentagon with columns (1,0),(0,1),(1,0),(0,1),(1,1):
        // every pair of cyclically consecutive columns has det +-1
        let cols: [[i64; 2]; 5] = [[1, 0], [0, 1], [1, 0], [0, 1], [1, 1]];
        for i in 0..5 {
            let a = cols[i];
            let b = cols[(i + 1) % 5];
            assert_eq!((a[0] * b[1] - a[1] * b[0]).abs(), 1);
        }
    }

    #[test]
    fn finely_ordered_shape() {
        let p = dodecahedron();
        let cm = char_matrix(&p, &four_color(&p)).unwrap();
        let (perm, cols) = cm.finely_ordered(&p);
        assert_eq!(perm.len(), p.m());
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(cols[c][r], i64::from(r == c));
            }
        }
    }

    #[test]
    fn class_presentation_round_trip() {
        let p = dodecahedron();
        let cm = char_matrix(&p, &four_color(&p)).unwrap();
        let text = char_class_presentation(&p, &cm);
        let (c, pt) = parse_class_presentation(&text).unwrap();
        assert_eq!(c, p.m());
        assert_eq!(pt, p.m());
    }

    #[test]
    fn simplex_presentation_verbatim() {
        let p = simplex();
        let cm = char_matrix(&p, &four_color(&p)).unwrap();
        let text = char_class_presentation(&p, &cm);
        assert!(text.contains("C = (1+v1)(1+v2)(1+v3)(1+v4)"));
    }

    #[test]
    fn cube_c1_reduction_with_three_colors() {
        // the 3-coloring pairs opposite facets, so every relation reads
        // v_f + v_{opposite(f)} = 0 and c1 reduces to the zero combination
        // of the three surviving variables
        let p = cube();
        let cm = char_matrix(&p, &four_color(&p)).unwrap();
        let text = char_class_presentation(&p, &cm);
        let c1 = text.lines().next().unwrap();
        assert_eq!(c1, "c1 = 0", "got {c1}");
    }
}
