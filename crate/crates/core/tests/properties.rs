//! Property suites over randomized inputs.

use alex_core::{
    factor, fox_milnor_witness, ARibbonPresentation, IntMatrix, LaurentMatrix, LaurentPoly,
    ModulePresentation, Position, SeifertBlocks, SeifertPair,
};
use num::bigint::BigInt;
use proptest::prelude::*;

fn arb_laurent(max_len: usize, max_coeff: i64) -> impl Strategy<Value = LaurentPoly> {
    (
        -4i64..=4,
        proptest::collection::vec(-max_coeff..=max_coeff, 0..=max_len),
    )
        .prop_map(|(min_exp, coeffs)| LaurentPoly::from_i64_coeffs(min_exp, &coeffs))
}

fn arb_nonzero_laurent(max_len: usize, max_coeff: i64) -> impl Strategy<Value = LaurentPoly> {
    arb_laurent(max_len, max_coeff).prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_laurent_matrix(n: usize) -> impl Strategy<Value = LaurentMatrix> {
    proptest::collection::vec(arb_laurent(3, 3), n * n).prop_map(move |entries| {
        let rows: Vec<Vec<LaurentPoly>> =
            entries.chunks(n).map(|c| c.to_vec()).collect();
        LaurentMatrix::from_rows(rows).unwrap()
    })
}

fn arb_int_matrix(n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
        let rows: Vec<Vec<BigInt>> = v
            .chunks(n)
            .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        IntMatrix::from_rows(rows).unwrap()
    })
}

fn arb_position() -> impl Strategy<Value = Position> {
    prop_oneof![
        Just(Position::ball()),
        (-3i64..=3).prop_map(Position::torus),
    ]
}

fn arb_presentation(max_n: usize) -> impl Strategy<Value = ARibbonPresentation> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(prop_oneof![Just(1i64), Just(-1)], n),
            proptest::collection::vec(arb_position(), n * n),
            proptest::collection::vec(arb_position(), n * n),
        )
            .prop_map(move |(eps, bd, int)| {
                let table = |v: Vec<Position>| -> Vec<Vec<Position>> {
                    v.chunks(n).map(|c| c.to_vec()).collect()
                };
                ARibbonPresentation::new(
                    eps,
                    table(bd),
                    table(int),
                    IntMatrix::zero(n, n),
                    None,
                    None,
                    None,
                )
                .unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonicalize_is_idempotent(p in arb_nonzero_laurent(6, 6)) {
        let c = p.canonicalize().unwrap();
        prop_assert_eq!(c.canonicalize().unwrap(), c);
    }

    #[test]
    fn canonicalize_kills_units(p in arb_nonzero_laurent(6, 6), k in -3i64..=3, neg: bool) {
        let mut q = p.shifted(k);
        if neg {
            q = -&q;
        }
        prop_assert_eq!(q.canonicalize().unwrap(), p.canonicalize().unwrap());
        prop_assert!(q.equals_up_to_unit(&p));
    }

    #[test]
    fn involute_is_an_involution(p in arb_laurent(6, 6)) {
        prop_assert_eq!(p.involute().involute(), p);
    }

    #[test]
    fn involute_is_multiplicative(p in arb_laurent(5, 4), q in arb_laurent(5, 4)) {
        prop_assert_eq!((&p * &q).involute(), &p.involute() * &q.involute());
    }

    #[test]
    fn factor_reassembles_input(p in arb_nonzero_laurent(5, 4)) {
        let f = factor(&p).unwrap();
        prop_assert_eq!(f.product(), p);
    }

    #[test]
    fn witness_squares_to_input(p in arb_nonzero_laurent(5, 4)) {
        if let Some(g) = fox_milnor_witness(&p).unwrap() {
            let sq = &g * &g.involute();
            prop_assert!(sq.equals_up_to_unit(&p));
        }
    }

    #[test]
    fn mirror_det_is_involuted_det(m in arb_laurent_matrix(3)) {
        let p = ModulePresentation::new(m);
        prop_assert_eq!(p.mirror().det(), p.det().involute());
    }

    #[test]
    fn connected_sum_det_is_multiplicative(
        a in arb_laurent_matrix(2),
        b in arb_laurent_matrix(2),
    ) {
        let pa = ModulePresentation::new(a);
        let pb = ModulePresentation::new(b);
        prop_assert_eq!(pa.connected_sum(&pb).det(), &pa.det() * &pb.det());
    }

    #[test]
    fn alexander_ignores_star_blocks(
        pres in arb_presentation(3),
        s1 in arb_int_matrix(3, 4),
        s2 in arb_int_matrix(3, 4),
    ) {
        let n = pres.n();
        let mut blocks = pres.seifert_blocks().unwrap();
        let base = blocks.alexander();
        blocks.star_plus = Some(s1.submatrix_square(n));
        blocks.star_minus = Some(s2.submatrix_square(n));
        prop_assert_eq!(blocks.alexander(), base.clone());
        let pair = blocks.assemble();
        if !base.is_zero() {
            prop_assert_eq!(pair.alexander().unwrap(), base);
        }
    }

    #[test]
    fn linkings_verdicts_agree(pres in arb_presentation(4)) {
        let r = pres.check_linkings_condition();
        prop_assert_eq!(Some(r.holds), r.matrix_check);
    }

    #[test]
    fn linkings_implies_fox_milnor(pres in arb_presentation(3)) {
        let r = pres.check_linkings_condition();
        if r.holds {
            let f = pres.fox_milnor_from_linkings().unwrap();
            let delta = pres.alexander().unwrap();
            let sq = &f * &f.involute();
            prop_assert!(sq.equals_up_to_unit(&delta));
        }
    }

    #[test]
    fn homology_with_trivial_lk(pres in arb_presentation(4)) {
        let h = pres.homology();
        prop_assert_eq!(h.h1_free_rank, 2 * pres.n());
        prop_assert!(h.h1_torsion.is_empty());
        prop_assert_eq!(h.h2_rank, 2 * pres.n());
    }

    #[test]
    fn seifert_block_sum_det_multiplicative(
        a in arb_int_matrix(2, 3),
        b in arb_int_matrix(2, 3),
        c in arb_int_matrix(2, 3),
        d in arb_int_matrix(2, 3),
    ) {
        let p1 = SeifertPair::new(a, b).unwrap();
        let p2 = SeifertPair::new(c, d).unwrap();
        let sum = p1.block_sum(&p2);
        let lhs = sum.levine_matrix().det();
        let rhs = &p1.levine_matrix().det() * &p2.levine_matrix().det();
        prop_assert_eq!(lhs, rhs);
    }
}

trait SubmatrixSquare {
    fn submatrix_square(&self, n: usize) -> IntMatrix;
}

impl SubmatrixSquare for IntMatrix {
    fn submatrix_square(&self, n: usize) -> IntMatrix {
        let mut out = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }
}

#[test]
fn seifert_blocks_alexander_is_levine_product() {
    // deterministic spot check that the block path and the assembled path
    // agree on the catalog spun knots
    for name in alex_core::CATALOG {
        let v = alex_core::catalog(name).unwrap();
        let pair = v.spun();
        if pair.size() == 0 {
            continue;
        }
        let delta = pair.alexander().unwrap();
        let levine = pair.levine_matrix().det().canonicalize().unwrap();
        assert_eq!(delta, levine);
    }
}

#[test]
fn star_block_variation_paper_blocks() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let base = SeifertBlocks::new(
        IntMatrix::from_i64_rows(&[&[0, 0], &[0, -1]]),
        IntMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]),
        IntMatrix::from_i64_rows(&[&[1, -1], &[1, 1]]),
        IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]),
    )
    .unwrap();
    let expected: LaurentPoly = "2*t^2 - 2*t + 1".parse().unwrap();
    for _ in 0..20 {
        let mut blocks = base.clone();
        let mut rand_mat = || {
            let mut m = IntMatrix::zero(2, 2);
            for i in 0..2 {
                for j in 0..2 {
                    m[(i, j)] = BigInt::from(rng.gen_range(-5i64..=5));
                }
            }
            m
        };
        blocks.star_plus = Some(rand_mat());
        blocks.star_minus = Some(rand_mat());
        assert_eq!(blocks.alexander(), expected);
        assert_eq!(blocks.assemble().alexander().unwrap(), expected);
    }
}
