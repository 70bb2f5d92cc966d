//! Randomized invariants on chains larger than the exhaustive suites reach.

use std::sync::OnceLock;

use nsemigroup::construct::{build_nary_direct, build_table};
use nsemigroup::domain::fold_slice;
use nsemigroup::evaluate::fast_eval_trusted;
use nsemigroup::explore::all_gspecs;
use nsemigroup::gspec::{sym_check, GSpec};
use nsemigroup::io;
use nsemigroup::{BinTable, ExtValue};
use proptest::prelude::*;

const MAX_K: usize = 6;

fn symmetric(k: usize) -> &'static [GSpec] {
    static CACHE: OnceLock<Vec<Vec<GSpec>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=MAX_K).map(|k| all_gspecs(k).into_iter().filter(sym_check).collect()).collect()
    })[k]
}

fn spec_and_words() -> impl Strategy<Value = (GSpec, Vec<usize>, Vec<usize>)> {
    (1..=MAX_K).prop_flat_map(|k| {
        let n = symmetric(k).len();
        (
            0..n,
            prop::collection::vec(0..k, 1..30),
            prop::collection::vec(0..k, 1..30),
        )
            .prop_map(move |(i, u, v)| (symmetric(k)[i].clone(), u, v))
    })
}

fn any_table() -> impl Strategy<Value = BinTable> {
    (1usize..=7).prop_flat_map(|k| {
        prop::collection::vec(0..k, k * k).prop_map(move |cells| {
            BinTable::from_fn(k, |x, y| cells[x * k + y]).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn evaluators_agree((s, u, _) in spec_and_words()) {
        let t = build_table(&s);
        let fold = fold_slice(&t, &u).unwrap();
        prop_assert_eq!(fast_eval_trusted(&t, u.iter().copied()).unwrap(), fold);
        prop_assert_eq!(build_nary_direct(&s, &u).unwrap(), fold);
    }

    #[test]
    fn concatenation((s, u, v) in spec_and_words()) {
        let t = build_table(&s);
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let whole = fast_eval_trusted(&t, uv).unwrap();
        let split = t.get(fold_slice(&t, &u).unwrap(), fold_slice(&t, &v).unwrap());
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn value_is_an_input_between_the_extremes((s, u, _) in spec_and_words()) {
        let t = build_table(&s);
        let v = fast_eval_trusted(&t, u.iter().copied()).unwrap();
        let (c, d) = (*u.iter().min().unwrap(), *u.iter().max().unwrap());
        prop_assert!(v == c || v == d);
    }

    #[test]
    fn table_formats_round_trip(t in any_table()) {
        prop_assert_eq!(io::table_from_json(&io::table_to_json(&t)).unwrap(), t.clone());
        prop_assert_eq!(io::table_from_csv(&io::table_to_csv(&t).unwrap()).unwrap(), t.clone());
        prop_assert_eq!(t.transpose().transpose(), t);
    }

    #[test]
    fn gspec_json_round_trip((s, _, _) in spec_and_words()) {
        prop_assert_eq!(io::gspec_from_json(&io::gspec_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn ext_values_round_trip(d in 0u32..200) {
        let v = ExtValue::from_doubled(d);
        prop_assert_eq!(ExtValue::from_f64(v.to_f64()).unwrap(), v);
    }
}
