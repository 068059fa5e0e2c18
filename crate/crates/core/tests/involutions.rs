mod common;

use common::{columns, w, words_up_to};
use plactic::involutions::*;
use plactic::{Ssyt, Word};
use proptest::prelude::*;

fn count(t: &Ssyt, x: u32) -> usize {
    t.rows().iter().flatten().filter(|&&y| y == x).count()
}

#[test]
fn bender_knuth_is_a_shape_preserving_involution() {
    let all = Ssyt::all_up_to(6, 4);
    assert!(all.len() > 1000);
    for t in &all {
        for u in 1..=4 {
            let b = bender_knuth(t, u);
            assert_eq!(b.shape(), t.shape());
            assert_eq!(bender_knuth(&b, u), *t, "T={t:?} u={u}");
            assert_eq!(count(&b, u), count(t, u + 1));
            assert_eq!(count(&b, u + 1), count(t, u));
            for x in (1..=5).filter(|&x| x != u && x != u + 1) {
                assert_eq!(count(&b, x), count(t, x));
            }
        }
    }
}

/// Tableaux with entries at most `m` in which every column holds a `u`.
fn every_column_holds(cells: usize, m: u32, u: u32) -> Vec<Ssyt> {
    Ssyt::all_up_to(cells, m)
        .into_iter()
        .filter(|t| columns(t.rows()).iter().all(|c| c.contains(&u)))
        .collect()
}

#[test]
fn bender_knuth_moves_between_column_classes() {
    for m in 2..=4 {
        for u in 1..m {
            let from = every_column_holds(5, m, u);
            let to = every_column_holds(5, m, u + 1);
            assert_eq!(from.len(), to.len(), "m={m} u={u}");
            let mut image: Vec<Ssyt> = from.iter().map(|t| bender_knuth(t, u)).collect();
            image.sort();
            let mut target = to.clone();
            target.sort();
            assert_eq!(image, target, "m={m} u={u}");
        }
    }
}

#[test]
fn reverse_complement_examples() {
    assert_eq!(rc_m(&w("31122"), 4), w("33442"));
    assert_eq!(rc_m(&w("1312"), 2), w("1322"));
    assert_eq!(rc_m(&w("345"), 2), w("345"));
}

#[test]
fn reverse_complement_is_an_involution_fixing_large_letters() {
    for v in words_up_to(4, 5) {
        for m in 1..=4 {
            let r = rc_m(&v, m);
            assert_eq!(rc_m(&r, m), v, "w={v} m={m}");
            for (a, b) in v.iter().zip(r.iter()) {
                assert_eq!(*a > m, *b > m);
                if *a > m {
                    assert_eq!(a, b);
                }
            }
        }
    }
}

#[test]
fn reverse_complement_reverses_weakly_increasing_subwords() {
    let m = 3;
    for v in words_up_to(3, 5) {
        let n = v.len();
        let r = rc_m(&v, m);
        for mask in 0u32..(1 << n) {
            let picked: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let sub = Word::new(picked.iter().map(|&i| v[i]).collect()).unwrap();
            let mirrored: Vec<u32> = picked.iter().rev().map(|&i| r[n - 1 - i]).collect();
            assert_eq!(rc_m(&sub, m).to_vec(), mirrored);
            let weak = |x: &[u32]| x.windows(2).all(|p| p[0] <= p[1]);
            assert_eq!(weak(&sub), weak(&mirrored), "w={v} positions {picked:?}");
        }
    }
}

#[test]
fn evacuation_preserves_shape_and_is_an_involution() {
    for m in 1..=4 {
        for t in Ssyt::all_up_to(7, m) {
            let e = evacuation_m(&t, m).unwrap();
            assert_eq!(e.shape(), t.shape(), "T={t:?} m={m}");
            assert_eq!(evacuation_m(&e, m).unwrap(), t, "T={t:?} m={m}");
        }
    }
}

#[test]
fn tau_preserves_shape_and_is_an_involution() {
    for t in Ssyt::all_up_to(6, 5) {
        for m in 1..=4 {
            let x = tau_m(&t, m);
            assert_eq!(x.shape(), t.shape());
            assert_eq!(tau_m(&x, m), t, "T={t:?} m={m}");
            let (_, high) = split_at(&t, m);
            let (_, high_x) = split_at(&x, m);
            assert_eq!(high, high_x, "entries above m moved");
        }
    }
}

#[test]
fn split_examples() {
    let t = Ssyt::new(vec![vec![1, 3], vec![3]]).unwrap();
    let (low, high) = split_at(&t, 2);
    assert_eq!(low, Ssyt::new(vec![vec![1]]).unwrap());
    assert_eq!(high.filled(), vec![(1, 2, 3), (2, 1, 3)]);
    assert_eq!(tau_m(&t, 2), Ssyt::new(vec![vec![2, 3], vec![3]]).unwrap());
}

proptest! {
    #[test]
    fn split_keeps_every_entry(t in common::ssyt_strategy(8, 10), m in 0u32..=8) {
        let (low, high) = split_at(&t, m);
        let mut all: Vec<u32> = low.rows().iter().flatten().copied().collect();
        all.extend(high.content());
        all.sort_unstable();
        let mut expected: Vec<u32> = t.rows().iter().flatten().copied().collect();
        expected.sort_unstable();
        prop_assert_eq!(all, expected);
        prop_assert!(low.rows().iter().flatten().all(|&x| x <= m));
        prop_assert_eq!(high.inner(), low.shape());
    }

    #[test]
    fn tau_involution_on_larger_tableaux(t in common::ssyt_strategy(8, 12), m in 1u32..=8) {
        let x = tau_m(&t, m);
        prop_assert_eq!(x.shape(), t.shape());
        prop_assert_eq!(tau_m(&x, m), t);
    }

    #[test]
    fn bender_knuth_involution_on_larger_tableaux(t in common::ssyt_strategy(6, 14), u in 1u32..=6) {
        let b = bender_knuth(&t, u);
        prop_assert!(Ssyt::new(b.rows().to_vec()).is_ok());
        prop_assert_eq!(bender_knuth(&b, u), t);
    }
}
