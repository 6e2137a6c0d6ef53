use hrestrict::decomposition::{
    enumerate_decompositions, init_state, propagate, DecompositionState, Propagation,
};
use hrestrict::hvector::{CharAssumption, HVector, SocleType};
use num_bigint::BigInt;
use proptest::prelude::*;

const BUDGET: u64 = 50_000_000;

fn chars() -> impl Strategy<Value = CharAssumption> {
    prop::sample::select(vec![
        CharAssumption::Zero,
        CharAssumption::NotTwo,
        CharAssumption::Exactly(2),
        CharAssumption::Exactly(3),
        CharAssumption::Exactly(5),
        CharAssumption::AtLeast(7),
        CharAssumption::Arbitrary,
    ])
}

/// Symmetric vectors `(1, h_1, ..., h_1, 1)` with entries up to `max`,
/// kept only when they are O-sequences.
fn symmetric_o_sequences(max: u64) -> impl Strategy<Value = HVector> {
    (3usize..=6)
        .prop_flat_map(move |e| (Just(e), prop::collection::vec(1..=max, e / 2)))
        .prop_filter_map("not an O-sequence", |(e, half)| {
            let mut v = vec![1u64; e + 1];
            for (i, &x) in half.iter().enumerate() {
                v[i + 1] = x;
                v[e - 1 - i] = x;
            }
            if half.is_empty() || v[1] < 2 {
                return None;
            }
            let h = HVector::from_u64s(&v).ok()?;
            h.is_o_sequence().then_some(h)
        })
}

fn level_o_sequences(max: u64) -> impl Strategy<Value = HVector> {
    (2usize..=5)
        .prop_flat_map(move |e| prop::collection::vec(1..=max, e))
        .prop_filter_map("not an O-sequence", |tail| {
            let mut v = vec![1u64];
            v.extend(tail);
            if v[1] < 2 {
                return None;
            }
            let h = HVector::from_u64s(&v).ok()?;
            h.is_o_sequence().then_some(h)
        })
}

fn check_against_enumerator(init: DecompositionState) -> Result<(), TestCaseError> {
    let all = enumerate_decompositions(&init, usize::MAX, BUDGET).unwrap();
    let outcome = propagate(init.clone());
    match &outcome {
        Propagation::Empty(_) => prop_assert!(
            all.is_empty(),
            "propagation refuted {} but {:?} exists",
            init.h(),
            all[0]
        ),
        Propagation::Fixpoint(s) => {
            prop_assert!(!all.is_empty(), "fixpoint for {} but no decomposition", init.h());
            for dec in &all {
                for (d, v) in dec.c.iter().enumerate() {
                    prop_assert!(
                        s.c_interval(d).contains(&BigInt::from(v.clone())),
                        "decomposition {:?} leaves interval {} at {}",
                        dec,
                        s.c_interval(d),
                        d
                    );
                }
            }
            let tops: Vec<_> = (0..s.c_intervals().len())
                .map(|d| s.c_interval(d).hi.clone())
                .collect();
            prop_assert!(
                all.iter().any(|dec| dec
                    .c
                    .iter()
                    .zip(&tops)
                    .all(|(v, t)| &BigInt::from(v.clone()) == t)),
                "upper endpoints of the fixpoint are not a decomposition"
            );
        }
    }
    for step in outcome.state().trace() {
        prop_assert!(step.after.is_subset_of(&step.before));
        prop_assert!(step.after != step.before);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gorenstein_propagation_matches_enumeration(h in symmetric_o_sequences(40), ch in chars()) {
        check_against_enumerator(init_state(&h, SocleType::Gorenstein, ch).unwrap())?;
    }

    #[test]
    fn level_propagation_matches_enumeration(h in level_o_sequences(30), ch in chars()) {
        check_against_enumerator(init_state(&h, SocleType::Level, ch).unwrap())?;
    }

    #[test]
    fn propagation_is_deterministic(h in symmetric_o_sequences(40), ch in chars()) {
        let s = init_state(&h, SocleType::Gorenstein, ch).unwrap();
        prop_assert_eq!(propagate(s.clone()), propagate(s));
    }

    #[test]
    fn stronger_characteristic_narrows_further(h in symmetric_o_sequences(40)) {
        let order = [CharAssumption::Arbitrary, CharAssumption::NotTwo, CharAssumption::Zero];
        let outcomes: Vec<_> = order
            .iter()
            .map(|&ch| propagate(init_state(&h, SocleType::Gorenstein, ch).unwrap()))
            .collect();
        for pair in outcomes.windows(2) {
            let (weak, strong) = (&pair[0], &pair[1]);
            if weak.is_empty() {
                prop_assert!(strong.is_empty());
            }
            if !strong.is_empty() {
                for d in 0..strong.state().c_intervals().len() {
                    prop_assert!(strong
                        .state()
                        .c_interval(d)
                        .is_subset_of(weak.state().c_interval(d)));
                }
            }
        }
    }

    #[test]
    fn replay_accepts_own_trace(h in symmetric_o_sequences(40), ch in chars()) {
        let s = propagate(init_state(&h, SocleType::Gorenstein, ch).unwrap()).into_state();
        let again = DecompositionState::replay(
            s.h(), s.socle(), s.char_assumption(), s.gate(), s.trace(),
        ).unwrap();
        prop_assert_eq!(again, s);
    }
}
