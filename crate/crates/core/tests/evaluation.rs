//! Single-pass evaluation against the fold, arity coherence, and the word
//! law.

mod common;

use common::class_tables_upto;
use nsemigroup::domain::{for_each_tuple, fold_slice};
use nsemigroup::evaluate::{check_word_law, fast_eval_trusted, Evaluator};
use nsemigroup::verify::is_associative;
use nsemigroup::{fold_eval, BinTable, Word};

#[test]
fn pair_fold_is_table_lookup() {
    for (t, _) in class_tables_upto(3) {
        let k = t.size();
        for x in 0..k {
            for y in 0..k {
                assert_eq!(fold_eval(&t, &Word::new(vec![x, y]).unwrap()).unwrap(), t.get(x, y));
            }
        }
    }
    let nand = BinTable::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
    assert_eq!(fold_slice(&nand, &[1, 1]).unwrap(), 0);
}

#[test]
fn fast_eval_matches_fold() {
    for (t, e) in class_tables_upto(4) {
        let ev = Evaluator::new(t.clone(), e).unwrap();
        for n in 1..=6 {
            for_each_tuple(t.size(), n, |u| {
                assert_eq!(ev.eval(u.iter().copied()).unwrap(), fold_slice(&t, u).unwrap(), "{:?} {u:?}", t.rows());
                true
            });
        }
    }
}

#[test]
fn padding_with_the_neutral_element() {
    for (t, e) in class_tables_upto(4) {
        let k = t.size();
        for n in 2..=5 {
            for a in 0..k {
                for b in 0..k {
                    let mut u = vec![e; n];
                    u[0] = a;
                    u[n - 1] = b;
                    assert_eq!(fast_eval_trusted(&t, u).unwrap(), t.get(a, b));
                }
            }
        }
    }
}

#[test]
fn inner_items_between_the_ends() {
    for (t, _) in class_tables_upto(4) {
        let k = t.size();
        for n in 2..=5 {
            for_each_tuple(k, n, |u| {
                let (a, b) = (u[0], u[n - 1]);
                if u[1..n - 1].iter().all(|&y| a <= y && y <= b) {
                    assert_eq!(fast_eval_trusted(&t, u.iter().copied()).unwrap(), t.get(a, b), "{u:?}");
                }
                true
            });
        }
    }
}

#[test]
fn concatenation_law_for_associative_tables() {
    let mut tables: Vec<BinTable> = class_tables_upto(4).into_iter().map(|(t, _)| t).collect();
    tables.push(BinTable::from_fn(4, |x, y| (x + y) % 4).unwrap());
    tables.push(BinTable::from_fn(3, |x, _| x).unwrap());
    for t in tables {
        assert!(is_associative(&t));
        let k = t.size();
        for len in 2..=6 {
            for_each_tuple(k, len, |u| {
                let whole = fold_slice(&t, u).unwrap();
                for i in 1..len {
                    let (l, r) = (fold_slice(&t, &u[..i]).unwrap(), fold_slice(&t, &u[i..]).unwrap());
                    assert_eq!(whole, t.get(l, r));
                }
                true
            });
        }
    }
}

#[test]
fn word_law_on_class_tables() {
    for (t, _) in class_tables_upto(3) {
        let r = check_word_law(&t, 5, 0);
        assert!(r.exhaustive && r.holds(), "{:?}", t.rows());
    }
}

#[test]
fn word_law_detects_nonassociative_tables() {
    let nand = BinTable::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
    let r = check_word_law(&nand, 3, 0);
    assert!(!r.holds());
    let w = &r.violations[0];
    assert_ne!(w.whole, w.combined);
}

#[test]
fn evaluator_rejects_non_class_input() {
    let proj = BinTable::from_fn(3, |x, _| x).unwrap();
    assert!(Evaluator::new(proj, 0).is_err());
}
