//! Words, partitions and (skew) semistandard tableaux.
//!
//! All public coordinates are 1-based `(row, column)` pairs with row 1 at the
//! top, so `entry(1, 1)` is the top-left corner of a tableau.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        match letters.iter().find(|&&a| a == 0) {
            Some(&bad) => Err(Error::InvalidLetter(bad as u64)),
            None => Ok(Word(letters)),
        }
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    /// Largest letter, 0 for the empty word.
    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &[u32]) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(other);
        Word(letters)
    }

    /// `k` concatenated copies of this word.
    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// All words of length `n` over `[m]`, in lexicographic order.
    pub fn all(m: u32, n: usize) -> WordIter {
        WordIter::new(m, n)
    }

    /// All words over `[m]` of length at most `n`, shortest first and
    /// lexicographic within each length.
    pub fn all_up_to(m: u32, n: usize) -> impl Iterator<Item = Word> {
        (0..=n).flat_map(move |len| WordIter::new(m, len))
    }
}

impl Deref for Word {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(letters: Vec<u32>) -> Result<Self> {
        Word::new(letters)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Vec<u32> {
        w.0
    }
}

/// Comma-separated letters. A lone letter above 9 gets a trailing comma so
/// that it does not read back as digit shorthand.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        if let [a] = self.0[..] {
            if a > 9 {
                f.write_str(",")?;
            }
        }
        Ok(())
    }
}

/// Parses `2,1,2` or the digit shorthand `212`. A single letter above 9 is
/// written with a trailing comma (`12,`). The empty string is the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters = if s.contains(',') {
            let s = s.strip_suffix(',').unwrap_or(s);
            s.split(',')
                .map(|piece| {
                    piece
                        .trim()
                        .parse::<u32>()
                        .map_err(|_| parse_err("expected comma-separated positive integers"))
                })
                .collect::<Result<Vec<_>>>()?
        } else if s.chars().all(|c| c.is_ascii_digit()) {
            s.chars().map(|c| c.to_digit(10).unwrap()).collect()
        } else {
            return Err(parse_err("expected comma-separated positive integers"));
        };
        Word::new(letters)
    }
}

/// Lexicographic enumeration of `[m]^n`.
#[derive(Clone, Debug)]
pub struct WordIter {
    m: u32,
    current: Option<Vec<u32>>,
}

impl WordIter {
    fn new(m: u32, n: usize) -> Self {
        let current = if m == 0 && n > 0 { None } else { Some(vec![1; n]) };
        WordIter { m, current }
    }
}

impl Iterator for WordIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.m {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
        Some(Word(out))
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Part `i` (1-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of column `j` (1-based).
    pub fn column_len(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    /// Rows `from..=to` (1-based) as a partition.
    pub fn rows(&self, from: usize, to: usize) -> Partition {
        let lo = from.saturating_sub(1).min(self.0.len());
        let hi = to.min(self.0.len()).max(lo);
        Partition(self.0[lo..hi].to_vec())
    }

    /// All partitions of `n`, largest first part first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Multiplicities per row, with trailing zeros dropped so that equality
/// ignores them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        WeakComposition(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Entry `i` (1-based), zero past the stored prefix.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Dominance order `a ⪯ b`: every prefix sum of `a` is at most the matching
/// prefix sum of `b`.
pub fn dominates(a: &WeakComposition, b: &WeakComposition) -> bool {
    let len = a.0.len().max(b.0.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 1..=len {
        sa += a.get(i);
        sb += b.get(i);
        if sa > sb {
            return false;
        }
    }
    true
}

/// Number of entries of the weakly increasing `row` that are `< u` (strict)
/// or `<= u`.
pub fn row_count_filter(row: &[u32], u: u32, strict: bool) -> usize {
    if strict {
        row.partition_point(|&x| x < u)
    } else {
        row.partition_point(|&x| x <= u)
    }
}

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Ssyt {
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    /// Validates `rows` against the semistandard conditions.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() || (i > 0 && row.len() > rows[i - 1].len()) {
                return Err(Error::BadShape { row: i + 1 });
            }
            if let Some(&bad) = row.iter().find(|&&x| x == 0) {
                return Err(Error::InvalidLetter(bad as u64));
            }
            if let Some(j) = row.windows(2).position(|p| p[0] > p[1]) {
                return Err(Error::RowNotWeaklyIncreasing { row: i + 1, col: j + 2 });
            }
            if i > 0 {
                let above = &rows[i - 1];
                if let Some(j) = row.iter().zip(above).position(|(x, y)| x <= y) {
                    return Err(Error::ColumnNotStrictlyIncreasing { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(Ssyt { rows })
    }

    /// Callers guarantee the semistandard conditions.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(Ssyt::new(rows.clone()).is_ok(), "invalid tableau {rows:?}");
        Ssyt { rows }
    }

    pub fn empty() -> Self {
        Ssyt { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    /// Row `i` (1-based); empty past the last row.
    pub fn row(&self, i: usize) -> &[u32] {
        match i.checked_sub(1).and_then(|k| self.rows.get(k)) {
            Some(r) => r,
            None => &[],
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    /// Entry in cell `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        self.row(i).get(j.wrapping_sub(1)).copied()
    }

    /// Largest entry, 0 for the empty tableau.
    pub fn max_entry(&self) -> u32 {
        self.rows.iter().filter_map(|r| r.last().copied()).max().unwrap_or(0)
    }

    /// Column `j` (1-based), top to bottom.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows
            .iter()
            .map_while(|r| r.get(j.wrapping_sub(1)).copied())
            .collect()
    }

    /// All columns, left to right.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (1..=width).map(|j| self.column(j)).collect()
    }

    /// Reading word: rows left to right, bottom row first.
    pub fn row_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Multiplicities of `b` in each row.
    pub fn alpha(&self, b: u32) -> WeakComposition {
        WeakComposition::new(
            self.rows
                .iter()
                .map(|r| row_count_filter(r, b, false) - row_count_filter(r, b, true))
                .collect(),
        )
    }

    /// Every semistandard tableau of the given shape with entries in `[max]`,
    /// in lexicographic order of their rows.
    pub fn enumerate(shape: &Partition, max: u32) -> Vec<Ssyt> {
        let cells: Vec<(usize, usize)> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
            .collect();
        let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut out = Vec::new();
        fill(&cells, 0, max, &mut rows, &mut out);
        out
    }

    /// Every semistandard tableau with at most `cells` cells and entries in
    /// `[max]`.
    pub fn all_up_to(cells: usize, max: u32) -> Vec<Ssyt> {
        (0..=cells)
            .flat_map(Partition::all)
            .flat_map(|shape| Ssyt::enumerate(&shape, max))
            .collect()
    }
}

fn fill(cells: &[(usize, usize)], k: usize, max: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Ssyt>) {
    if k == cells.len() {
        out.push(Ssyt { rows: rows.clone() });
        return;
    }
    let (i, j) = cells[k];
    let mut lo = 1;
    if j > 0 {
        lo = lo.max(rows[i][j - 1]);
    }
    if i > 0 {
        lo = lo.max(rows[i - 1][j] + 1);
    }
    for x in lo..=max {
        rows[i][j] = x;
        fill(cells, k + 1, max, rows, out);
    }
}

impl TryFrom<Vec<Vec<u32>>> for Ssyt {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Ssyt::new(rows)
    }
}

impl From<Ssyt> for Vec<Vec<u32>> {
    fn from(t: Ssyt) -> Self {
        t.rows
    }
}

/// One bracketed row per line, e.g. `[1,2]` then `[2]`.
impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "[{}]", Word(row.clone()))?;
        }
        Ok(())
    }
}

impl FromStr for Ssyt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                let inner = line
                    .strip_prefix('[')
                    .and_then(|l| l.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse {
                        input: line.to_string(),
                        reason: "expected a bracketed row".into(),
                    })?;
                inner.parse::<Word>().map(Word::into_letters)
            })
            .collect::<Result<Vec<_>>>()?;
        Ssyt::new(rows)
    }
}

/// A filling of a skew shape `outer / inner`. Each row stores `None` for the
/// blank cells of `inner` followed by its filled cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    rows: Vec<Vec<Option<u32>>>,
}

impl SkewTableau {
    /// Builds a skew tableau from the two shapes and the filled rows
    /// (row `i` holds `outer[i] - inner[i]` entries).
    pub fn new(outer: &Partition, inner: &Partition, filling: Vec<Vec<u32>>) -> Result<Self> {
        if inner.num_rows() > outer.num_rows() {
            return Err(Error::InnerNotContained { row: outer.num_rows() + 1 });
        }
        if filling.len() != outer.num_rows() {
            return Err(Error::BadShape { row: filling.len().min(outer.num_rows()) + 1 });
        }
        let mut rows = Vec::with_capacity(outer.num_rows());
        for (k, entries) in filling.into_iter().enumerate() {
            let (o, n) = (outer.part(k + 1), inner.part(k + 1));
            if n > o {
                return Err(Error::InnerNotContained { row: k + 1 });
            }
            if entries.len() != o - n {
                return Err(Error::BadShape { row: k + 1 });
            }
            let mut row = vec![None; n];
            row.extend(entries.into_iter().map(Some));
            rows.push(row);
        }
        let s = SkewTableau { rows };
        s.validate()?;
        Ok(s)
    }

    pub(crate) fn from_cells_unchecked(rows: Vec<Vec<Option<u32>>>) -> Self {
        let s = SkewTableau { rows };
        debug_assert!(s.validate().is_ok(), "invalid skew tableau {:?}", s.rows);
        s
    }

    pub fn from_straight(t: &Ssyt) -> Self {
        SkewTableau {
            rows: t.rows().iter().map(|r| r.iter().copied().map(Some).collect()).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            let blank = row.iter().take_while(|c| c.is_none()).count();
            if row[blank..].iter().any(Option::is_none) {
                return Err(Error::BadShape { row: i + 1 });
            }
            if let Some(&bad) = row.iter().flatten().find(|&&x| x == 0) {
                return Err(Error::InvalidLetter(bad as u64));
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                let above_blank = above.iter().take_while(|c| c.is_none()).count();
                if row.len() > above.len() || blank > above_blank {
                    return Err(Error::BadShape { row: i + 1 });
                }
            }
            if row.is_empty() && self.rows[i + 1..].iter().any(|r| !r.is_empty()) {
                return Err(Error::BadShape { row: i + 1 });
            }
            for j in blank + 1..row.len() {
                if row[j - 1] > row[j] {
                    return Err(Error::RowNotWeaklyIncreasing { row: i + 1, col: j + 1 });
                }
            }
            if i > 0 {
                for j in blank..row.len() {
                    if let Some(Some(y)) = self.rows[i - 1].get(j) {
                        if row[j].unwrap() <= *y {
                            return Err(Error::ColumnNotStrictlyIncreasing { row: i + 1, col: j + 1 });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).filter(|&l| l > 0).collect())
    }

    pub fn inner(&self) -> Partition {
        Partition(
            self.rows
                .iter()
                .map(|r| r.iter().take_while(|c| c.is_none()).count())
                .filter(|&l| l > 0)
                .collect(),
        )
    }

    /// Cell contents by row, `None` for blank cells.
    pub fn cells(&self) -> &[Vec<Option<u32>>] {
        &self.rows
    }

    pub(crate) fn cells_mut(&mut self) -> &mut Vec<Vec<Option<u32>>> {
        &mut self.rows
    }

    /// Content of cell `(i, j)`: `None` outside the outer shape,
    /// `Some(None)` for a blank cell.
    pub fn cell(&self, i: usize, j: usize) -> Option<Option<u32>> {
        let row = self.rows.get(i.checked_sub(1)?)?;
        row.get(j.checked_sub(1)?).copied()
    }

    /// Filled cells only, as `(row, column, entry)` with 1-based coordinates.
    pub fn filled(&self) -> Vec<(usize, usize, u32)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .filter_map(move |(j, c)| c.map(|x| (i + 1, j + 1, x)))
            })
            .collect()
    }

    /// Sorted multiset of entries.
    pub fn content(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.rows.iter().flatten().flatten().copied().collect();
        c.sort_unstable();
        c
    }

    pub fn is_straight(&self) -> bool {
        self.rows.iter().all(|r| r.first().is_none_or(Option::is_some))
    }

    /// Converts a skew tableau with empty inner shape.
    pub fn to_straight(&self) -> Option<Ssyt> {
        if !self.is_straight() {
            return None;
        }
        let rows = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.iter().map(|c| c.unwrap()).collect())
            .collect();
        Some(Ssyt::from_rows_unchecked(rows))
    }
}
