//! Schensted row insertion, the RSK correspondence and longest weakly
//! increasing subsequences.

use crate::error::{Error, Result};
use crate::tableau::{Ssyt, Word};

/// One row visited by an insertion: the letter lands in `(row, col)` and
/// pushes `displaced` (if any) down to the next row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BumpStep {
    pub row: usize,
    pub col: usize,
    pub displaced: Option<u32>,
}

/// The bumping route of a single row insertion, top row first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BumpTrace {
    pub path: Vec<BumpStep>,
}

impl BumpTrace {
    /// Letters pushed out of their row by the insertion.
    pub fn displaced(&self) -> impl Iterator<Item = u32> + '_ {
        self.path.iter().filter_map(|s| s.displaced)
    }

    /// The cell that was created.
    pub fn new_cell(&self) -> (usize, usize) {
        let last = self.path.last().expect("a bump trace is never empty");
        (last.row, last.col)
    }
}

/// Inserts `a` into `rows` in place and returns the 0-based row index of the
/// created cell.
pub(crate) fn insert_into(rows: &mut Vec<Vec<u32>>, mut a: u32) -> usize {
    for (i, row) in rows.iter_mut().enumerate() {
        let j = row.partition_point(|&x| x <= a);
        if j == row.len() {
            row.push(a);
            return i;
        }
        a = std::mem::replace(&mut row[j], a);
    }
    rows.push(vec![a]);
    rows.len() - 1
}

/// Row-inserts `a` into `p`: in each row `a` replaces the leftmost entry
/// strictly greater than it, or settles at the end of the row.
pub fn row_insert(p: &Ssyt, a: u32) -> (Ssyt, BumpTrace) {
    let mut t = p.clone();
    let trace = row_insert_mut(&mut t, a);
    (t, trace)
}

/// In-place [`row_insert`].
pub fn row_insert_mut(p: &mut Ssyt, mut a: u32) -> BumpTrace {
    let rows = p.rows_mut();
    let mut path = Vec::new();
    for (i, row) in rows.iter_mut().enumerate() {
        let j = row.partition_point(|&x| x <= a);
        if j == row.len() {
            row.push(a);
            path.push(BumpStep { row: i + 1, col: j + 1, displaced: None });
            return BumpTrace { path };
        }
        let out = std::mem::replace(&mut row[j], a);
        path.push(BumpStep { row: i + 1, col: j + 1, displaced: Some(out) });
        a = out;
    }
    rows.push(vec![a]);
    path.push(BumpStep { row: rows.len(), col: 1, displaced: None });
    BumpTrace { path }
}

/// Inserts every letter of `w` into `p`, left to right.
pub fn insert_word(p: &mut Ssyt, w: &[u32]) {
    let rows = p.rows_mut();
    for &a in w {
        insert_into(rows, a);
    }
}

/// Insertion tableau `P(w)`.
pub fn p_tableau(w: &[u32]) -> Ssyt {
    let mut rows = Vec::new();
    for &a in w {
        insert_into(&mut rows, a);
    }
    Ssyt::from_rows_unchecked(rows)
}

/// `(P(w), Q(w))`, where `Q` records with entry `i` the cell created by the
/// `i`-th insertion.
pub fn rsk_pair(w: &[u32]) -> (Ssyt, Ssyt) {
    let mut p = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &a) in w.iter().enumerate() {
        let r = insert_into(&mut p, a);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(step as u32 + 1);
    }
    (Ssyt::from_rows_unchecked(p), Ssyt::from_rows_unchecked(q))
}

fn is_standard(q: &Ssyt) -> bool {
    let n = q.num_cells();
    let mut seen = vec![false; n + 1];
    for &x in q.rows().iter().flatten() {
        let x = x as usize;
        if x == 0 || x > n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    q.rows().iter().all(|r| r.windows(2).all(|p| p[0] < p[1]))
}

/// Recovers the word whose RSK pair is `(p, q)`.
pub fn inverse_rsk(p: &Ssyt, q: &Ssyt) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !is_standard(q) {
        return Err(Error::QNotStandard);
    }
    let n = q.num_cells();
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let mut out = vec![0u32; n];
    for step in (1..=n as u32).rev() {
        // The largest recording entry always sits at the end of its row.
        let r = q_rows
            .iter()
            .position(|row| row.last() == Some(&step))
            .ok_or(Error::QNotStandard)?;
        q_rows[r].pop();
        let mut x = p_rows[r].pop().expect("shapes agree");
        if p_rows[r].is_empty() {
            p_rows.pop();
            q_rows.pop();
        }
        for row in p_rows[..r].iter_mut().rev() {
            let j = row.partition_point(|&y| y < x) - 1;
            x = std::mem::replace(&mut row[j], x);
        }
        out[step as usize - 1] = x;
    }
    Word::new(out)
}

/// Length of a longest weakly increasing subsequence of `w`.
pub fn lwi(w: &[u32]) -> usize {
    let mut first_row: Vec<u32> = Vec::new();
    for &a in w {
        let j = first_row.partition_point(|&x| x <= a);
        if j == first_row.len() {
            first_row.push(a);
        } else {
            first_row[j] = a;
        }
    }
    first_row.len()
}

/// Length of a longest weakly increasing subsequence of `w` ending in the
/// letter `a`; 0 when `a` does not occur.
pub fn lwi_ending_at(w: &[u32], a: u32) -> usize {
    let Some(last) = w.iter().rposition(|&x| x == a) else {
        return 0;
    };
    // The column where a letter lands in the first row is the longest weakly
    // increasing subsequence ending at that letter.
    let mut first_row: Vec<u32> = Vec::new();
    let mut col = 0;
    for &x in &w[..=last] {
        let j = first_row.partition_point(|&y| y <= x);
        if j == first_row.len() {
            first_row.push(x);
        } else {
            first_row[j] = x;
        }
        col = j + 1;
    }
    col
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: Vec<Vec<u32>>) -> Ssyt {
        Ssyt::new(rows).unwrap()
    }

    #[test]
    fn insertion_examples() {
        let (p, trace) = row_insert(&t(vec![vec![2]]), 1);
        assert_eq!(p, t(vec![vec![1], vec![2]]));
        assert_eq!(trace.displaced().collect::<Vec<_>>(), vec![2]);
        assert_eq!(trace.new_cell(), (2, 1));

        let (p, trace) = row_insert(&t(vec![vec![1, 2], vec![2]]), 2);
        assert_eq!(p, t(vec![vec![1, 2, 2], vec![2]]));
        assert_eq!(trace.path.len(), 1);

        let (p, _) = row_insert(&Ssyt::empty(), 7);
        assert_eq!(p, t(vec![vec![7]]));
    }

    #[test]
    fn p_tableau_examples() {
        assert_eq!(p_tableau(&[2, 1, 2]), t(vec![vec![1, 2], vec![2]]));
        assert_eq!(p_tableau(&[]), Ssyt::empty());
        assert_eq!(p_tableau(&[1, 1, 3, 4, 4]), t(vec![vec![1, 1, 3, 4, 4]]));
    }

    #[test]
    fn rsk_pair_examples() {
        let (p, q) = rsk_pair(&[2, 1, 2]);
        assert_eq!(p, t(vec![vec![1, 2], vec![2]]));
        assert_eq!(q, t(vec![vec![1, 3], vec![2]]));
        assert_eq!(rsk_pair(&[]), (Ssyt::empty(), Ssyt::empty()));
        let (_, q) = rsk_pair(&[1, 2, 2, 5]);
        assert_eq!(q, t(vec![vec![1, 2, 3, 4]]));
    }

    #[test]
    fn inverse_examples() {
        let p = t(vec![vec![1, 2], vec![2]]);
        let q = t(vec![vec![1, 3], vec![2]]);
        assert_eq!(inverse_rsk(&p, &q).unwrap().letters(), &[2, 1, 2]);
        assert_eq!(inverse_rsk(&Ssyt::empty(), &Ssyt::empty()).unwrap(), Word::empty());
        assert_eq!(inverse_rsk(&t(vec![vec![5]]), &t(vec![vec![1]])).unwrap().letters(), &[5]);
    }

    #[test]
    fn inverse_errors() {
        let p = t(vec![vec![1, 2], vec![2]]);
        assert_eq!(inverse_rsk(&p, &t(vec![vec![1, 2, 3]])), Err(Error::ShapeMismatch));
        assert_eq!(inverse_rsk(&p, &t(vec![vec![1, 1], vec![2]])), Err(Error::QNotStandard));
        assert_eq!(inverse_rsk(&p, &t(vec![vec![1, 4], vec![2]])), Err(Error::QNotStandard));
    }

    #[test]
    fn lwi_examples() {
        let w = [1, 6, 2, 7, 2, 4, 5, 3, 4];
        assert_eq!(lwi(&w), 5);
        assert_eq!(lwi_ending_at(&w, 3), 4);
        assert_eq!(lwi(&[]), 0);
        assert_eq!(lwi_ending_at(&w, 9), 0);
        assert_eq!(lwi_ending_at(&[2, 1], 1), 1);
    }

    fn lwi_brute(w: &[u32], end: Option<u32>) -> usize {
        let n = w.len();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let sub: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
            if sub.windows(2).all(|p| p[0] <= p[1]) && end.is_none_or(|a| sub.last() == Some(&a)) {
                best = best.max(sub.len());
            }
        }
        best
    }

    #[test]
    fn lwi_matches_subset_oracle() {
        for n in 0..=6 {
            for w in Word::all(3, n) {
                assert_eq!(lwi(&w), lwi_brute(&w, None), "{w}");
                assert_eq!(lwi(&w), p_tableau(&w).row(1).len());
                for a in 1..=3 {
                    assert_eq!(lwi_ending_at(&w, a), lwi_brute(&w, Some(a)), "{w} {a}");
                }
            }
        }
    }
}
