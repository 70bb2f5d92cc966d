//! Operations generated from a [`GSpec`]: the binary table, the direct
//! min/max rule for any arity, and the commutative (uninorm) variant.

use std::cmp::Ordering;

use crate::domain::BinTable;
use crate::error::{Error, Result};
use crate::evaluate::fast_eval_trusted;
use crate::gspec::{sym_violation, GSpec, Tie};

/// Binary table of the threshold construction:
///
/// * `min(x, y)` if `y < g(x)`, or `y = g(x)` and `x < g(g(x))`;
/// * `max(x, y)` if `y > g(x)`, or `y = g(x)` and `x > g(g(x))`;
/// * the tie choice at `(x, y)` when `y = g(x)` and `x = g(g(x))`.
pub fn build_table(s: &GSpec) -> BinTable {
    let k = s.size();
    BinTable::from_fn(k, |x, y| build_entry(s, x, y)).expect("entries are x or y")
}

fn build_entry(s: &GSpec, x: usize, y: usize) -> usize {
    match s.g(x).cmp_point(y) {
        Ordering::Greater => x.min(y),
        Ordering::Less => x.max(y),
        Ordering::Equal => {
            // y = g(x) is a chain point, so g(g(x)) = g(y).
            match s.g(y).cmp_point(x) {
                Ordering::Greater => x.min(y),
                Ordering::Less => x.max(y),
                Ordering::Equal if x == y => x,
                Ordering::Equal => s.tie(x, y).expect("validated generator covers critical pairs").pick(x, y),
            }
        }
    }
}

fn require_symmetric(s: &GSpec) -> Result<()> {
    match sym_violation(s) {
        None => Ok(()),
        Some((a, b)) => Err(Error::Asymmetric(format!("pair ({a}, {b}) breaks symmetry"))),
    }
}

fn extremes(s: &GSpec, tuple: &[usize]) -> Result<(usize, usize)> {
    let &first = tuple.first().ok_or(Error::EmptyWord)?;
    let (mut c, mut d) = (first, first);
    for &x in tuple {
        if x >= s.size() {
            return Err(Error::OutOfRange { value: x, k: s.size() });
        }
        c = c.min(x);
        d = d.max(x);
    }
    Ok((c, d))
}

/// Value of the generated n-ary operation from the minimum `c` and maximum
/// `d` of the tuple alone: `c` if `c < g(d)`, `d` if `c > g(d)`. On the tie
/// `c = g(d)` the tuple is evaluated on the built table.
pub fn build_nary_direct(s: &GSpec, tuple: &[usize]) -> Result<usize> {
    require_symmetric(s)?;
    let (c, d) = extremes(s, tuple)?;
    Ok(match s.g(d).cmp_point(c) {
        Ordering::Greater => c,
        Ordering::Less => d,
        Ordering::Equal => fast_eval_trusted(&build_table(s), tuple.iter().copied())?,
    })
}

/// The commutative n-ary operation of a generator whose tie choices are
/// symmetric: `c` if `c < g(d)` or `d < g(c)`, `d` if `c > g(d)` or
/// `d > g(c)`, and the tie choice on a critical pair `(c, d)`.
pub fn build_commutative_uninorm(s: &GSpec, tuple: &[usize]) -> Result<usize> {
    require_symmetric(s)?;
    if let Some((&(a, b), _)) = s.ties().iter().find(|(&(a, b), t)| s.tie(b, a) != Some(**t)) {
        return Err(Error::AsymmetricTies { a, b });
    }
    let (c, d) = extremes(s, tuple)?;
    if c == d {
        return Ok(c);
    }
    let gd = s.g(d).cmp_point(c);
    let gc = s.g(c).cmp_point(d);
    Ok(if gd == Ordering::Greater || gc == Ordering::Greater {
        c
    } else if gd == Ordering::Less || gc == Ordering::Less {
        d
    } else {
        s.tie(c, d).unwrap_or(Tie::Min).pick(c, d)
    })
}

/// A named generator with its frozen table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub gspec: GSpec,
    pub table: BinTable,
}

fn fixture(name: &'static str, gspec: GSpec) -> Fixture {
    let table = build_table(&gspec);
    Fixture { name, gspec, table }
}

/// Reflection `g = [2, 1, 0]` on a 3-chain with `(0, 2) -> max`,
/// `(2, 0) -> min`: the smallest noncommutative member of the class.
pub fn rx3() -> Fixture {
    let s = GSpec::from_doubled(3, 1, &[4, 2, 0], [((0, 2), Tie::Max), ((2, 0), Tie::Min)])
        .expect("valid fixture");
    fixture("rx3", s)
}

/// `g` constant at the top: the minimum.
pub fn min3() -> Fixture {
    fixture("min3", GSpec::from_doubled(3, 2, &[4, 4, 4], []).expect("valid fixture"))
}

/// `g` constant at the bottom: the maximum.
pub fn max3() -> Fixture {
    fixture("max3", GSpec::from_doubled(3, 0, &[0, 0, 0], []).expect("valid fixture"))
}

pub fn fixtures() -> Vec<Fixture> {
    vec![rx3(), min3(), max3()]
}

pub fn fixture_by_name(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name.eq_ignore_ascii_case(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::fold_slice;
    use crate::verify::noncommutative_pairs;

    #[test]
    fn build_table_examples() {
        assert_eq!(build_table(&min3().gspec), BinTable::min(3).unwrap());
        assert_eq!(build_table(&max3().gspec), BinTable::max(3).unwrap());
        assert_eq!(rx3().table.rows(), vec![vec![0, 0, 2], vec![0, 1, 2], vec![0, 2, 2]]);
        let one = GSpec::from_doubled(1, 0, &[0], []).unwrap();
        assert_eq!(build_table(&one).rows(), vec![vec![0]]);
    }

    #[test]
    fn tie_choices_only_affect_their_pair() {
        let s = rx3().gspec.with_ties([((0, 2), Tie::Min), ((2, 0), Tie::Min)]).unwrap();
        let t = build_table(&s);
        assert_eq!(t.get(0, 2), 0);
        assert_eq!(t.get(2, 0), 0);
        assert!(noncommutative_pairs(&t).is_empty());
    }

    #[test]
    fn nary_direct_examples() {
        assert_eq!(build_nary_direct(&min3().gspec, &[2, 0, 1]).unwrap(), 0);
        assert_eq!(build_nary_direct(&max3().gspec, &[0, 2, 1]).unwrap(), 2);
        for f in fixtures() {
            for x in 0..3 {
                assert_eq!(build_nary_direct(&f.gspec, &[x, x, x, x]).unwrap(), x);
            }
        }
    }

    #[test]
    fn nary_direct_tie_matches_fold() {
        let f = rx3();
        for tuple in [[0, 1, 2], [2, 1, 0], [2, 0, 2], [0, 2, 0]] {
            assert_eq!(
                build_nary_direct(&f.gspec, &tuple).unwrap(),
                fold_slice(&f.table, &tuple).unwrap()
            );
        }
    }

    #[test]
    fn nary_direct_errors() {
        let asym = GSpec::from_doubled(3, 1, &[2, 2, 2], []).unwrap();
        assert!(matches!(build_nary_direct(&asym, &[0, 1]), Err(Error::Asymmetric(_))));
        assert!(matches!(build_nary_direct(&min3().gspec, &[]), Err(Error::EmptyWord)));
        assert!(build_nary_direct(&min3().gspec, &[0, 3]).is_err());
    }

    #[test]
    fn uninorm_examples() {
        let both_max = rx3().gspec.with_ties([((0, 2), Tie::Max), ((2, 0), Tie::Max)]).unwrap();
        assert_eq!(build_commutative_uninorm(&both_max, &[0, 1, 2]).unwrap(), 2);
        assert_eq!(build_commutative_uninorm(&min3().gspec, &[1, 2]).unwrap(), 1);
        for x in 0..3 {
            assert_eq!(build_commutative_uninorm(&both_max, &[x]).unwrap(), x);
        }
    }

    #[test]
    fn uninorm_rejects_asymmetric_ties() {
        assert!(matches!(
            build_commutative_uninorm(&rx3().gspec, &[0, 2]),
            Err(Error::AsymmetricTies { a: 0, b: 2 })
        ));
    }

    #[test]
    fn fixture_lookup() {
        assert_eq!(fixture_by_name("RX3").unwrap().name, "rx3");
        assert!(fixture_by_name("nope").is_none());
    }
}
