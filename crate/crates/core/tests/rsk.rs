mod common;

use common::{naive_lwi, naive_p, w, words_up_to};
use plactic::centralizer::in_centralizer;
use plactic::rsk::{insert_word, lwi, lwi_ending_at, row_insert, row_insert_mut};
use plactic::tableau::dominates;
use plactic::{inverse_rsk, p_tableau, rsk_pair, Error, Ssyt, Word};
use proptest::prelude::*;

fn t(rows: Vec<Vec<u32>>) -> Ssyt {
    Ssyt::new(rows).unwrap()
}

#[test]
fn row_insert_examples() {
    assert_eq!(row_insert(&t(vec![vec![2]]), 1).0, t(vec![vec![1], vec![2]]));
    assert_eq!(row_insert(&t(vec![vec![1, 2], vec![2]]), 2).0, t(vec![vec![1, 2, 2], vec![2]]));
    assert_eq!(row_insert(&Ssyt::empty(), 7).0, t(vec![vec![7]]));
}

#[test]
fn p_tableau_examples() {
    assert_eq!(p_tableau(&w("212")), t(vec![vec![1, 2], vec![2]]));
    assert_eq!(p_tableau(&[]), Ssyt::empty());
    assert_eq!(p_tableau(&w("113558")), t(vec![vec![1, 1, 3, 5, 5, 8]]));
}

#[test]
fn p_tableau_matches_naive_insertion() {
    for v in words_up_to(4, 6) {
        assert_eq!(p_tableau(&v).rows(), naive_p(&v).as_slice(), "w = {v}");
    }
}

#[test]
fn rsk_pair_examples() {
    let (p, q) = rsk_pair(&w("212"));
    assert_eq!(p, t(vec![vec![1, 2], vec![2]]));
    assert_eq!(q, t(vec![vec![1, 3], vec![2]]));
    assert_eq!(rsk_pair(&[]), (Ssyt::empty(), Ssyt::empty()));
    let (_, q) = rsk_pair(&w("12235"));
    assert_eq!(q, t(vec![vec![1, 2, 3, 4, 5]]));
}

#[test]
fn inverse_rsk_examples() {
    let p = t(vec![vec![1, 2], vec![2]]);
    let q = t(vec![vec![1, 3], vec![2]]);
    assert_eq!(inverse_rsk(&p, &q).unwrap(), w("212"));
    assert_eq!(inverse_rsk(&Ssyt::empty(), &Ssyt::empty()).unwrap(), Word::empty());
    assert_eq!(inverse_rsk(&t(vec![vec![5]]), &t(vec![vec![1]])).unwrap(), w("5"));
    assert_eq!(inverse_rsk(&p, &t(vec![vec![1, 2, 3]])), Err(Error::ShapeMismatch));
    assert_eq!(inverse_rsk(&p, &t(vec![vec![1, 1], vec![2]])), Err(Error::QNotStandard));
    assert_eq!(inverse_rsk(&p, &t(vec![vec![1, 4], vec![2]])), Err(Error::QNotStandard));
}

fn is_standard(q: &Ssyt) -> bool {
    let mut entries: Vec<u32> = q.rows().iter().flatten().copied().collect();
    entries.sort_unstable();
    let strict_rows = q.rows().iter().all(|r| r.windows(2).all(|p| p[0] < p[1]));
    strict_rows && entries == (1..=q.num_cells() as u32).collect::<Vec<_>>()
}

#[test]
fn rsk_is_a_bijection_on_small_words() {
    for v in words_up_to(3, 6) {
        let (p, q) = rsk_pair(&v);
        assert_eq!(p.shape(), q.shape());
        assert!(is_standard(&q), "Q({v}) = {q:?}");
        assert_eq!(inverse_rsk(&p, &q).unwrap(), v);
    }
}

#[test]
fn insertion_tableau_of_row_word_is_identity() {
    let mut seen = 0;
    for (cells, max) in [(8, 3), (6, 4)] {
        for tab in Ssyt::all_up_to(cells, max) {
            assert_eq!(p_tableau(&tab.row_word()), tab);
            seen += 1;
        }
    }
    assert!(seen > 1000);
}

#[test]
fn lwi_examples() {
    let v = w("162724534");
    assert_eq!(lwi(&v), 5);
    assert_eq!(lwi_ending_at(&v, 3), 4);
    assert_eq!(lwi(&[]), 0);
    assert_eq!(lwi_ending_at(&v, 9), 0);
}

#[test]
fn lwi_matches_quadratic_oracle_and_first_row() {
    for v in words_up_to(4, 6) {
        assert_eq!(lwi(&v), naive_lwi(&v, None), "w = {v}");
        assert_eq!(lwi(&v), p_tableau(&v).row(1).len());
        for a in 1..=4 {
            assert_eq!(lwi_ending_at(&v, a), naive_lwi(&v, Some(a)), "w = {v}, a = {a}");
        }
    }
}

#[test]
fn appending_and_prepending_move_alpha_in_dominance_order() {
    for v in words_up_to(4, 5) {
        let p = p_tableau(&v);
        for a in 1..=4u32 {
            let wa = p_tableau(&v.concat(&[a]));
            let aw = p_tableau(&Word::new(vec![a]).unwrap().concat(&v));
            for b in (1..=4).filter(|&b| b != a) {
                assert!(dominates(&wa.alpha(b), &p.alpha(b)), "w={v} a={a} b={b}");
                assert!(dominates(&p.alpha(b), &aw.alpha(b)), "w={v} a={a} b={b}");
            }
        }
    }
}

#[test]
fn letters_outside_u_never_move_between_rows() {
    let us: Vec<Word> = words_up_to(3, 3).into_iter().filter(|u| !u.is_empty()).collect();
    let ws = words_up_to(3, 5);
    for u in &us {
        for v in ws.iter().filter(|v| in_centralizer(u, v)) {
            let pw = p_tableau(v);
            let pwu = p_tableau(&v.concat(u));
            let puw = p_tableau(&u.concat(v));
            let mut growing = pw.clone();
            let mut displaced = Vec::new();
            for &a in u.iter() {
                displaced.extend(row_insert_mut(&mut growing, a).displaced());
            }
            for b in (1..=3).filter(|b| !u.contains(b)) {
                assert_eq!(pwu.alpha(b), pw.alpha(b), "u={u} w={v} b={b}");
                assert_eq!(puw.alpha(b), pw.alpha(b), "u={u} w={v} b={b}");
                assert!(!displaced.contains(&b), "u={u} w={v} bumped {b}");
            }
        }
    }
}

proptest! {
    #[test]
    fn bump_traces_descend_one_row_at_a_time(v in common::word_strategy(6, 10), a in 1u32..=6) {
        let mut p = p_tableau(&v);
        let before = p.clone();
        let trace = row_insert_mut(&mut p, a);
        let rows: Vec<usize> = trace.path.iter().map(|s| s.row).collect();
        prop_assert_eq!(rows, (1..=trace.path.len()).collect::<Vec<_>>());
        let (last, init) = trace.path.split_last().unwrap();
        prop_assert!(last.displaced.is_none());
        prop_assert!(init.iter().all(|s| s.displaced.is_some()));
        prop_assert_eq!(p.num_cells(), before.num_cells() + 1);
        let settled = init.last().and_then(|s| s.displaced).unwrap_or(a);
        prop_assert_eq!(p.entry(last.row, last.col), Some(settled));
        let mut again = before;
        insert_word(&mut again, &[a]);
        prop_assert_eq!(again, p);
    }

    #[test]
    fn rsk_round_trip(v in common::word_strategy(9, 12)) {
        let (p, q) = rsk_pair(&v);
        prop_assert_eq!(inverse_rsk(&p, &q).unwrap(), v);
    }

    #[test]
    fn insertion_preserves_content(v in common::word_strategy(9, 12)) {
        let mut content: Vec<u32> = p_tableau(&v).rows().iter().flatten().copied().collect();
        content.sort_unstable();
        let mut letters = v.to_vec();
        letters.sort_unstable();
        prop_assert_eq!(content, letters);
    }
}
