//! Jeu-de-taquin slides and rectification.

use crate::error::{Error, Result};
use crate::rsk::p_tableau;
use crate::tableau::{SkewTableau, Ssyt};

/// Order in which inner corners are filled during rectification.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CornerPolicy {
    /// Rightmost column first, each column bottom to top.
    #[default]
    ColumnsRightToLeft,
    /// Bottom row first, each row right to left.
    RowsBottomToTop,
}

/// One entry moving into the hole during a slide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlideMove {
    pub value: u32,
    pub from: (usize, usize),
    pub to: (usize, usize),
}

impl SlideMove {
    pub fn is_vertical(&self) -> bool {
        self.from.0 != self.to.0
    }
}

/// Places `a` south-west of `b`: `a`'s first row sits directly below `b`'s
/// last row, and `b` is shifted right by the width of `a`.
pub fn southwest_concat(a: &Ssyt, b: &Ssyt) -> SkewTableau {
    let shift = a.row(1).len();
    let mut rows: Vec<Vec<Option<u32>>> = Vec::with_capacity(a.num_rows() + b.num_rows());
    for row in b.rows() {
        let mut r = vec![None; shift];
        r.extend(row.iter().copied().map(Some));
        rows.push(r);
    }
    for row in a.rows() {
        rows.push(row.iter().copied().map(Some).collect());
    }
    SkewTableau::from_cells_unchecked(rows)
}

fn is_inner_corner(cells: &[Vec<Option<u32>>], i: usize, j: usize) -> bool {
    // 0-based (i, j) must be blank with no blank cell to its east or south.
    let blank = |r: usize, c: usize| matches!(cells.get(r).and_then(|row| row.get(c)), Some(None));
    blank(i, j) && !blank(i, j + 1) && !blank(i + 1, j)
}

fn filled(cells: &[Vec<Option<u32>>], i: usize, j: usize) -> Option<u32> {
    cells.get(i).and_then(|row| row.get(j)).copied().flatten()
}

/// Slides the hole at 0-based `(i, j)` out of the tableau, recording moves.
fn slide_from(cells: &mut Vec<Vec<Option<u32>>>, mut i: usize, mut j: usize, moves: &mut Vec<SlideMove>) {
    loop {
        let south = filled(cells, i + 1, j);
        let east = filled(cells, i, j + 1);
        let (ni, nj) = match (south, east) {
            (None, None) => break,
            (Some(_), None) => (i + 1, j),
            (None, Some(_)) => (i, j + 1),
            // ties go south to keep columns strict
            (Some(s), Some(e)) => {
                if s <= e {
                    (i + 1, j)
                } else {
                    (i, j + 1)
                }
            }
        };
        let value = cells[ni][nj].take().unwrap();
        cells[i][j] = Some(value);
        moves.push(SlideMove { value, from: (ni + 1, nj + 1), to: (i + 1, j + 1) });
        i = ni;
        j = nj;
    }
    cells[i].pop();
    while cells.last().is_some_and(Vec::is_empty) {
        cells.pop();
    }
}

/// Performs one forward slide into the inner corner `hole` (1-based).
pub fn jdt_slide(s: &SkewTableau, hole: (usize, usize)) -> Result<SkewTableau> {
    let (row, col) = hole;
    let err = Error::NotAnInnerCorner { row, col };
    if row == 0 || col == 0 {
        return Err(err);
    }
    let (i, j) = (row - 1, col - 1);
    let cells = s.cells();
    if !is_inner_corner(cells, i, j) || (filled(cells, i + 1, j).is_none() && filled(cells, i, j + 1).is_none()) {
        return Err(err);
    }
    let mut out = s.clone();
    slide_from(out.cells_mut(), i, j, &mut Vec::new());
    Ok(out)
}

fn next_corner(cells: &[Vec<Option<u32>>], policy: CornerPolicy) -> Option<(usize, usize)> {
    let corners = cells.iter().enumerate().filter_map(|(i, row)| {
        let blank = row.iter().take_while(|c| c.is_none()).count();
        (blank > 0 && is_inner_corner(cells, i, blank - 1)).then(|| (i, blank - 1))
    });
    match policy {
        CornerPolicy::ColumnsRightToLeft => corners.max_by_key(|&(i, j)| (j, i)),
        CornerPolicy::RowsBottomToTop => corners.max_by_key(|&(i, j)| (i, j)),
    }
}

/// Rectifies with the default corner policy.
pub fn rectify(s: &SkewTableau) -> Ssyt {
    rectify_with(s, CornerPolicy::default())
}

pub fn rectify_with(s: &SkewTableau, policy: CornerPolicy) -> Ssyt {
    rectify_traced(s, policy).0
}

/// Rectifies and returns every individual move made along the way.
pub fn rectify_traced(s: &SkewTableau, policy: CornerPolicy) -> (Ssyt, Vec<SlideMove>) {
    let mut cells = s.cells().to_vec();
    let mut moves = Vec::new();
    while let Some((i, j)) = next_corner(&cells, policy) {
        slide_from(&mut cells, i, j, &mut moves);
    }
    let t = SkewTableau::from_cells_unchecked(cells)
        .to_straight()
        .expect("no inner corners left");
    (t, moves)
}

/// `P(uw)` computed by rectifying `P(u)` placed south-west of `P(w)`.
pub fn p_via_jdt(u: &[u32], w: &[u32]) -> Ssyt {
    rectify(&southwest_concat(&p_tableau(u), &p_tableau(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Partition;

    fn t(rows: Vec<Vec<u32>>) -> Ssyt {
        Ssyt::new(rows).unwrap()
    }

    #[test]
    fn concat_examples() {
        let s = southwest_concat(&t(vec![vec![1]]), &t(vec![vec![2]]));
        assert_eq!(s.inner().parts(), &[1]);
        assert_eq!(s.outer().parts(), &[2, 1]);
        assert_eq!(s.cell(1, 2), Some(Some(2)));
        assert_eq!(s.cell(2, 1), Some(Some(1)));

        let b = t(vec![vec![1, 3], vec![2]]);
        let s = southwest_concat(&Ssyt::empty(), &b);
        assert!(s.is_straight());
        assert_eq!(s.to_straight().unwrap(), b);

        let s = southwest_concat(&p_tableau(&[2, 1, 2]), &t(vec![vec![1]]));
        assert_eq!(s.filled(), vec![(1, 3, 1), (2, 1, 1), (2, 2, 2), (3, 1, 2)]);
        assert_eq!(s.inner().parts(), &[2]);
    }

    #[test]
    fn slide_examples() {
        let s = southwest_concat(&t(vec![vec![1]]), &t(vec![vec![2]]));
        let out = jdt_slide(&s, (1, 1)).unwrap();
        assert_eq!(out.to_straight().unwrap(), t(vec![vec![1, 2]]));

        // only an east neighbour: the row shifts left
        let outer = Partition::new(vec![3]).unwrap();
        let inner = Partition::new(vec![1]).unwrap();
        let s = SkewTableau::new(&outer, &inner, vec![vec![4, 5]]).unwrap();
        assert_eq!(jdt_slide(&s, (1, 1)).unwrap().to_straight().unwrap(), t(vec![vec![4, 5]]));

        // only a south neighbour: it moves up
        let outer = Partition::new(vec![1, 1]).unwrap();
        let s = SkewTableau::new(&outer, &inner, vec![vec![], vec![3]]).unwrap();
        assert_eq!(jdt_slide(&s, (1, 1)).unwrap().to_straight().unwrap(), t(vec![vec![3]]));
    }

    #[test]
    fn slide_rejects_non_corners() {
        let s = southwest_concat(&t(vec![vec![1, 1]]), &t(vec![vec![2], vec![3]]));
        assert_eq!(jdt_slide(&s, (1, 1)), Err(Error::NotAnInnerCorner { row: 1, col: 1 }));
        assert_eq!(jdt_slide(&s, (2, 1)), Err(Error::NotAnInnerCorner { row: 2, col: 1 }));
        assert_eq!(jdt_slide(&s, (3, 1)), Err(Error::NotAnInnerCorner { row: 3, col: 1 }));
        assert!(jdt_slide(&s, (2, 2)).is_ok());
    }

    #[test]
    fn ties_move_south() {
        let outer = Partition::new(vec![2, 1]).unwrap();
        let inner = Partition::new(vec![1]).unwrap();
        let s = SkewTableau::new(&outer, &inner, vec![vec![2], vec![2]]).unwrap();
        assert_eq!(rectify(&s), t(vec![vec![2, 2]]));
        let s = SkewTableau::new(&outer, &inner, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(rectify(&s), t(vec![vec![1], vec![2]]));
    }

    #[test]
    fn rectify_examples() {
        let straight = t(vec![vec![1, 2, 2], vec![3]]);
        assert_eq!(rectify(&SkewTableau::from_straight(&straight)), straight);
        let s = southwest_concat(&p_tableau(&[1]), &p_tableau(&[2]));
        assert_eq!(rectify(&s), t(vec![vec![1, 2]]));
        let p212 = p_tableau(&[2, 1, 2]);
        assert_eq!(rectify(&southwest_concat(&p212, &p212)), p_tableau(&[2, 1, 2, 2, 1, 2]));
    }

    #[test]
    fn p_via_jdt_examples() {
        assert_eq!(p_via_jdt(&[1], &[2]), t(vec![vec![1, 2]]));
        assert_eq!(p_via_jdt(&[2, 1, 2], &[1]), t(vec![vec![1, 1], vec![2, 2]]));
        assert_eq!(p_via_jdt(&[], &[3, 1, 2]), p_tableau(&[3, 1, 2]));
    }

    #[test]
    fn traced_moves_cover_every_slide() {
        let s = southwest_concat(&p_tableau(&[2, 1]), &p_tableau(&[1, 3]));
        let (p, moves) = rectify_traced(&s, CornerPolicy::ColumnsRightToLeft);
        assert_eq!(p, p_tableau(&[2, 1, 1, 3]));
        assert!(!moves.is_empty());
        assert!(moves.iter().all(|m| m.to.0 <= m.from.0 && m.to.1 <= m.from.1));
    }
}
