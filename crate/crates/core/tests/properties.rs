//! Property tests over randomly grown polytopes (truncation sequences from
//! the cube reach arbitrary flag combinatorics) and random DGA elements.

use belted_core::dga::CochainAlgebra;
use belted_core::*;
use proptest::prelude::*;

/// Grow a polytope by a sequence of truncations encoded as raw choice
/// triples; each triple is reduced modulo the current facet data.
fn grow(seed: &Polytope, choices: &[(u8, u8, u8)]) -> Polytope {
    let mut p = seed.clone();
    for &(f, s, l) in choices {
        let facet = f as usize % p.m();
        let k = p.gonality(facet);
        let len = l as usize % (k - 1); // 0..=k-2
        let start = s as usize % k;
        let spec = TruncationSpec { facet, start, len };
        let (q, _) = sk_truncate(&p, &spec).expect("spec reduced to range");
        p = q;
    }
    p
}

fn choice_seq() -> impl Strategy<Value = Vec<(u8, u8, u8)>> {
    prop::collection::vec((any::<u8>(), any::<u8>(), any::<u8>()), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grown_polytopes_satisfy_the_count_identities(choices in choice_seq()) {
        let p = grow(&cube(), &choices);
        prop_assert!(p.validate().all_pass());
        let (f0, f1, f2) = p.f_vector();
        prop_assert_eq!(f1, 3 * (f2 - 2));
        prop_assert_eq!(f0, 2 * (f2 - 2));
        prop_assert!(p.p_vector().satisfies_balance());
    }

    #[test]
    fn canonical_code_is_a_relabeling_congruence(
        choices in choice_seq(),
        keys in prop::collection::vec(any::<u64>(), 64),
    ) {
        let p = grow(&cube(), &choices);
        let mut idx: Vec<usize> = (0..p.f0()).collect();
        idx.sort_by_key(|&i| keys[i % keys.len()].wrapping_mul(i as u64 + 1));
        let mut perm = vec![0u32; p.f0()];
        for (new, &old) in idx.iter().enumerate() {
            perm[old] = new as u32;
        }
        let q = p.relabel_vertices(&perm).unwrap();
        prop_assert_eq!(canonical_code(&p, false), canonical_code(&q, false));
    }

    #[test]
    fn mirror_is_an_involution_and_mirror_codes_collapse(choices in choice_seq()) {
        let p = grow(&cube(), &choices);
        let m = p.mirror();
        prop_assert!(m.validate().all_pass());
        prop_assert_eq!(
            canonical_code(&m.mirror(), false).code,
            canonical_code(&p, false).code
        );
        prop_assert_eq!(canonical_code(&p, true).code, canonical_code(&m, true).code);
    }

    #[test]
    fn truncate_then_straighten_round_trips(choices in choice_seq(), f in any::<u8>(), s in any::<u8>(), l in any::<u8>()) {
        let p = grow(&cube(), &choices);
        let facet = f as usize % p.m();
        let k = p.gonality(facet);
        let spec = TruncationSpec { facet, start: s as usize % k, len: l as usize % (k - 1) };
        let (q, edge) = sk_truncate(&p, &spec).unwrap();
        let back = straighten(&q, edge).expect("straightening a fresh truncation edge is defined");
        prop_assert!(equivalent_either_orientation(&back.polytope, &p));
    }

    #[test]
    fn dga_products_are_graded_commutative_and_leibniz(
        a in 0u32..12, b in 0u32..12, c in 0u32..12, d in 0u32..12,
    ) {
        let p = dodecahedron();
        let alg = CochainAlgebra::for_polytope(&p);
        prop_assume!(a != b && c != d);
        let x = alg.monomial(&[a], &[b]);
        let y = alg.monomial(&[c], &[d]);
        let xy = alg.mul(&x, &y).unwrap();
        let yx = alg.mul(&y, &x).unwrap();
        // both factors have odd total degree 3
        prop_assert_eq!(xy.clone(), alg.scale(&yx, -1));
        // Leibniz: d(xy) = (dx) y + (-1)^{|x|} x (dy)
        let lhs = alg.differential(&xy);
        let rhs = alg.add(
            &alg.mul(&alg.differential(&x), &y).unwrap(),
            &alg.scale(&alg.mul(&x, &alg.differential(&y)).unwrap(), -1),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn low_betti_cells_match_belt_counts_on_grown_polytopes(choices in choice_seq()) {
        let p = grow(&cube(), &choices);
        prop_assume!(p.m() <= 13);
        let t = betti_bigraded(&p, BettiMode::Full).unwrap();
        prop_assert!(t.torsion_free);
        prop_assert!(poincare_check(&t));
        let (f0, f1, f2) = p.f_vector();
        prop_assert!(poly_identity_check(&t, &[f0 as i64, f1 as i64, f2 as i64]));
        prop_assert_eq!(t.beta(1, 3).unwrap(), k_belts(&p, 3).len() as u64);
        prop_assert_eq!(t.beta(1, 2).unwrap(), disjoint_pair_count(&p));
    }
}
