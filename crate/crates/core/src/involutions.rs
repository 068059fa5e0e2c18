//! Bender-Knuth involutions, reverse complements and `m`-evacuation.

use crate::error::{Error, Result};
use crate::rsk::p_tableau;
use crate::tableau::{SkewTableau, Ssyt, Word};

/// The Bender-Knuth involution exchanging `u` and `u + 1`.
///
/// A `u` with a `u + 1` directly below it, and that `u + 1`, are fixed. In
/// each row the remaining (free) `u`s and `(u + 1)`s form a contiguous block
/// whose multiplicities are swapped.
pub fn bender_knuth(t: &Ssyt, u: u32) -> Ssyt {
    let v = u + 1;
    let rows = t.rows();
    let mut out = rows.to_vec();
    for (i, row) in rows.iter().enumerate() {
        let free: Vec<usize> = (0..row.len())
            .filter(|&j| match row[j] {
                x if x == u => rows.get(i + 1).and_then(|r| r.get(j)) != Some(&v),
                x if x == v => i == 0 || rows[i - 1][j] != u,
                _ => false,
            })
            .collect();
        let Some(&start) = free.first() else { continue };
        debug_assert!(free.windows(2).all(|p| p[1] == p[0] + 1));
        let n_u = free.iter().filter(|&&j| row[j] == u).count();
        let n_v = free.len() - n_u;
        for (k, &j) in free.iter().enumerate() {
            out[i][j] = if k < n_v { u } else { v };
        }
        debug_assert_eq!(free.last().copied(), Some(start + n_u + n_v - 1));
    }
    Ssyt::from_rows_unchecked(out)
}

/// Replaces the letters `<= m`, in the positions they occupy, by their
/// `m`-reverse complement; letters `> m` stay where they are.
pub fn rc_m(w: &[u32], m: u32) -> Word {
    let small: Vec<u32> = w.iter().copied().filter(|&x| x <= m).collect();
    let mut rc = small.iter().rev().map(|&x| m - x + 1);
    let out = w
        .iter()
        .map(|&x| if x <= m { rc.next().expect("same count") } else { x })
        .collect();
    Word::new(out).expect("positive letters")
}

/// `ε_m(T) = P(RC_m(rw(T)))` for a tableau bounded by `m`.
pub fn evacuation_m(t: &Ssyt, m: u32) -> Result<Ssyt> {
    let max = t.max_entry();
    if max > m {
        return Err(Error::MaxEntryExceedsM { max, m });
    }
    Ok(p_tableau(&rc_m(&t.row_word(), m)))
}

/// Splits `t` into the straight tableau of entries `<= m` and the skew
/// tableau of entries `> m` on the complementary cells.
pub fn split_at(t: &Ssyt, m: u32) -> (Ssyt, SkewTableau) {
    let low: Vec<Vec<u32>> = t
        .rows()
        .iter()
        .map(|r| r[..r.partition_point(|&x| x <= m)].to_vec())
        .filter(|r| !r.is_empty())
        .collect();
    let high: Vec<Vec<Option<u32>>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| (x > m).then_some(x)).collect())
        .collect();
    (Ssyt::from_rows_unchecked(low), SkewTableau::from_cells_unchecked(high))
}

/// Applies `ε_m` to the entries `<= m` and leaves the entries `> m` alone.
pub fn tau_m(t: &Ssyt, m: u32) -> Ssyt {
    let (low, high) = split_at(t, m);
    let evac = evacuation_m(&low, m).expect("low part is bounded by m");
    assert_eq!(evac.shape(), low.shape(), "evacuation changed the shape");
    let rows: Vec<Vec<u32>> = high
        .cells()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut small = evac.row(i + 1).iter();
            row.iter()
                .map(|c| c.unwrap_or_else(|| *small.next().expect("shapes agree")))
                .collect()
        })
        .collect();
    Ssyt::new(rows).expect("gluing across the m / m+1 boundary keeps columns strict")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: Vec<Vec<u32>>) -> Ssyt {
        Ssyt::new(rows).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn bender_knuth_examples() {
        let x = t(vec![vec![3, 4], vec![5]]);
        assert_eq!(bender_knuth(&x, 1), x);
        assert_eq!(bender_knuth(&t(vec![vec![1, 1, 2]]), 1), t(vec![vec![1, 2, 2]]));
        let fixed = t(vec![vec![1], vec![2]]);
        assert_eq!(bender_knuth(&fixed, 1), fixed);
        // row 1: 1 1 2 2 2 with the first 1 fixed by the 2 below it
        let y = t(vec![vec![1, 1, 2, 2, 2], vec![2]]);
        assert_eq!(bender_knuth(&y, 1), t(vec![vec![1, 1, 1, 1, 2], vec![2]]));
    }

    #[test]
    fn rc_examples() {
        assert_eq!(rc_m(&w("31122"), 4), w("33442"));
        assert_eq!(rc_m(&w("1312"), 2), w("1322"));
        assert_eq!(rc_m(&[], 3), Word::empty());
    }

    #[test]
    fn evacuation_examples() {
        for m in 1..=5 {
            for a in 1..=m {
                assert_eq!(evacuation_m(&t(vec![vec![a]]), m).unwrap(), t(vec![vec![m - a + 1]]));
            }
        }
        assert_eq!(evacuation_m(&t(vec![vec![1, 1]]), 2).unwrap(), t(vec![vec![2, 2]]));
        assert_eq!(evacuation_m(&t(vec![vec![1, 2]]), 2).unwrap(), t(vec![vec![1, 2]]));
        assert_eq!(
            evacuation_m(&t(vec![vec![1, 3]]), 2),
            Err(Error::MaxEntryExceedsM { max: 3, m: 2 })
        );
    }

    #[test]
    fn split_examples() {
        let x = t(vec![vec![1, 2], vec![2]]);
        let (low, high) = split_at(&x, 3);
        assert_eq!(low, x);
        assert!(high.filled().is_empty());

        let (low, high) = split_at(&x, 0);
        assert!(low.is_empty());
        assert!(high.is_straight());
        assert_eq!(high.to_straight().unwrap(), x);

        let (low, high) = split_at(&t(vec![vec![1, 3], vec![3]]), 2);
        assert_eq!(low, t(vec![vec![1]]));
        assert_eq!(high.filled(), vec![(1, 2, 3), (2, 1, 3)]);
    }

    #[test]
    fn tau_examples() {
        let x = t(vec![vec![1, 1, 2], vec![2]]);
        assert_eq!(tau_m(&x, 2), evacuation_m(&x, 2).unwrap());
        let y = t(vec![vec![3, 4], vec![5]]);
        assert_eq!(tau_m(&y, 2), y);
        assert_eq!(tau_m(&t(vec![vec![1, 3], vec![3]]), 2), t(vec![vec![2, 3], vec![3]]));
    }
}
