#![allow(dead_code)]

use nsemigroup::construct::build_table;
use nsemigroup::explore::{all_gspecs, enumerate_class_brute, BruteSpace};
use nsemigroup::gspec::{sym_check, GSpec};
use nsemigroup::verify::find_neutral_elements;
use nsemigroup::BinTable;

/// Class tables on a `k`-chain from the brute-force enumeration.
pub fn class_tables(k: usize) -> Vec<BinTable> {
    enumerate_class_brute(k, BruteSpace::default_for(k)).unwrap().into_iter().collect()
}

/// All class tables for `k = 1..=kmax` with their neutral element.
pub fn class_tables_upto(kmax: usize) -> Vec<(BinTable, usize)> {
    (1..=kmax)
        .flat_map(class_tables)
        .map(|t| {
            let e = find_neutral_elements(&t)[0];
            (t, e)
        })
        .collect()
}

pub fn symmetric_gspecs(k: usize) -> Vec<GSpec> {
    all_gspecs(k).into_iter().filter(sym_check).collect()
}

pub fn built(s: &GSpec) -> BinTable {
    build_table(s)
}
