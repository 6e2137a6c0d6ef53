use hrestrict::binomial::{green_bound, macaulay_bound};
use hrestrict::oracle::{
    hilbert_function, lex_growth, restriction_dimension, socle_vector, stanley_split, wlp_test,
    FieldSpec, Fp, LinearForm, Monomial, MonomialIdeal, QuotientAlgebra, SplitForm,
};
use hrestrict::{FpMatrix, IntMatrix, RationalMatrix};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

fn matrices() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
    })
}

/// Artinian monomial ideals: a pure power per variable plus a few mixed
/// generators.
fn ideals() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|r| {
        (
            prop::collection::vec(2u32..=4, r),
            prop::collection::vec(prop::collection::vec(0u32..=2, r), 0..4),
        )
            .prop_map(move |(powers, extra)| {
                let mut gens: Vec<Monomial> = powers
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| {
                        let mut e = vec![0; r];
                        e[i] = p;
                        Monomial::new(e)
                    })
                    .collect();
                gens.extend(
                    extra
                        .into_iter()
                        .filter(|e| e.iter().sum::<u32>() >= 2)
                        .map(Monomial::new),
                );
                MonomialIdeal::new(r, gens).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fraction_free_rank_matches_rational_gauss(rows in matrices()) {
        let z = IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        );
        let q = RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        );
        prop_assert_eq!(z.rank_fraction_free(), q.rank_gauss());
    }

    #[test]
    fn prime_field_rank_both_ways(rows in matrices(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let m = FpMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Fp::from_i64(v, p)).collect()).collect(),
        );
        prop_assert_eq!(m.rank_gauss(), m.rank_fraction_free());
        let z = IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        );
        prop_assert!(m.rank_gauss() <= z.rank_fraction_free());
    }

    #[test]
    fn hilbert_functions_are_o_sequences(ideal in ideals()) {
        let a = QuotientAlgebra::new(ideal, FieldSpec::Rational, None);
        let h = hilbert_function(&a).to_hvector().unwrap();
        prop_assert!(h.is_o_sequence(), "{}", h);
        let socle = socle_vector(&a).unwrap();
        prop_assert_eq!(socle.last().copied(), h.entries().last().map(|v| v.try_into().unwrap()));
    }

    #[test]
    fn split_sums_to_h(ideal in ideals(), v in 0usize..3, coeffs in prop::collection::vec(-50i64..=50, 3)) {
        let r = ideal.num_vars();
        let a = QuotientAlgebra::new(ideal, FieldSpec::Rational, None);
        let s = stanley_split(&a, &SplitForm::Variable(v % r)).unwrap();
        prop_assert!(s.sums_to_h(), "{:?}", s);
        if let Ok(l) = LinearForm::from_i64s(&coeffs[..r], FieldSpec::Rational) {
            let s = stanley_split(&a, &SplitForm::General(l)).unwrap();
            prop_assert!(s.sums_to_h());
        }
    }

    #[test]
    fn restriction_below_green(ideal in ideals(), coeffs in prop::collection::vec(1i64..=1_000_000, 3)) {
        // Wide random coefficients stand in for a general form over Q.
        let r = ideal.num_vars();
        let a = QuotientAlgebra::new(ideal, FieldSpec::Rational, None);
        let l = LinearForm::from_i64s(&coeffs[..r], FieldSpec::Rational).unwrap();
        for d in 1..=a.top_degree() {
            let g = green_bound(&BigUint::from(a.dim(d)), d);
            prop_assert!(BigUint::from(restriction_dimension(&a, &l, d)) <= g);
        }
    }

    #[test]
    fn lex_growth_below_macaulay(n in 1u64..=40, d in 1usize..=4, r in 1usize..=6) {
        if let Ok(g) = lex_growth(n, d, r) {
            prop_assert!(BigUint::from(g) <= macaulay_bound(&n.into(), d));
        }
    }

    #[test]
    fn wlp_test_reproducible(ideal in ideals(), seed in any::<u64>()) {
        let a = QuotientAlgebra::new(ideal, FieldSpec::Prime(5), None);
        prop_assert_eq!(wlp_test(&a, 4, seed).unwrap(), wlp_test(&a, 4, seed).unwrap());
    }
}
