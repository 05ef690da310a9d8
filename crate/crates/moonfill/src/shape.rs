//! Moon polyominoes: nested row intervals, the total row order, the Up/Low
//! split, per-row maximal rectangles, transposition, the staircase shapes
//! `delta(n)`, and exhaustive shape generation for the verification suites.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ShapeError {
    #[error("shape has no rows or a row with no cells")]
    EmptyRow,
    #[error("rows {0} and {1} have incomparable column intervals")]
    NotIntersectionFree(usize, usize),
    #[error("column {0} meets a non-contiguous set of rows")]
    NotColumnConvex(usize),
}

/// A convex, intersection-free polyomino given as one column interval per row.
///
/// Rows are numbered 1..=s top to bottom, columns 1..=t left to right; the
/// leftmost used column is normalized to 1. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoonPolyomino {
    rows: Vec<(usize, usize)>,
    cols: usize,
    peak: usize,
    order: Vec<usize>,
    moon: bool,
}

/// An axis-aligned rectangle of cells, 1-based inclusive bounds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RectRegion {
    pub row_lo: usize,
    pub row_hi: usize,
    pub col_lo: usize,
    pub col_hi: usize,
}

impl RectRegion {
    pub fn contains(&self, row: usize, col: usize) -> bool {
        (self.row_lo..=self.row_hi).contains(&row) && (self.col_lo..=self.col_hi).contains(&col)
    }
}

impl MoonPolyomino {
    /// Build and fully validate a moon polyomino from 1-based inclusive
    /// column intervals, top row first. Columns are shifted so the leftmost
    /// used column is 1.
    pub fn from_rows(intervals: &[(usize, usize)]) -> Result<Self, ShapeError> {
        let rows = normalize(intervals)?;
        // nestedness before column-convexity, so error reports are deterministic
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let (a, b) = (rows[i], rows[j]);
                let nested = (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1);
                if !nested {
                    return Err(ShapeError::NotIntersectionFree(i + 1, j + 1));
                }
            }
        }
        check_column_convex(&rows)?;
        let shape = Self::finish(rows, true);
        debug_assert!(shape.length_row_sequence_is_unimodal());
        Ok(shape)
    }

    /// Build a possibly non-intersection-free shape for brute-force use.
    /// Column convexity and nonemptiness are still required; `is_moon()`
    /// reports whether the full validation would have passed.
    pub fn from_rows_relaxed(intervals: &[(usize, usize)]) -> Result<Self, ShapeError> {
        let rows = normalize(intervals)?;
        check_column_convex(&rows)?;
        let moon = rows.iter().enumerate().all(|(i, &a)| {
            rows[i + 1..]
                .iter()
                .all(|&b| (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1))
        });
        Ok(Self::finish(rows, moon))
    }

    fn finish(rows: Vec<(usize, usize)>, moon: bool) -> Self {
        let cols = rows.iter().map(|&(_, b)| b).max().unwrap();
        let lens: Vec<usize> = rows.iter().map(|&(a, b)| b - a + 1).collect();
        let s = rows.len();
        // peak: the unique i with r_1 <= ... <= r_i > r_{i+1}; s when the
        // sequence never descends (everything in Up, Low empty)
        let peak = (0..s - 1).find(|&i| lens[i] > lens[i + 1]).map_or(s, |i| i + 1);
        let mut order: Vec<usize> = (1..=s).collect();
        let up = |i: usize| i <= peak;
        order.sort_by(|&i, &j| {
            lens[i - 1]
                .cmp(&lens[j - 1])
                .then_with(|| match (up(i), up(j)) {
                    (true, false) => std::cmp::Ordering::Less,
                    (false, true) => std::cmp::Ordering::Greater,
                    (true, true) => i.cmp(&j),
                    (false, false) => j.cmp(&i),
                })
        });
        Self {
            rows,
            cols,
            peak,
            order,
            moon,
        }
    }

    fn length_row_sequence_is_unimodal(&self) -> bool {
        let r = self.row_lengths();
        r[..self.peak].windows(2).all(|w| w[0] <= w[1])
            && r[self.peak - 1..].windows(2).all(|w| w[0] >= w[1])
    }

    /// The staircase `Δ_n`: n-1 rows where the row with left-endpoint label i
    /// spans the columns with right-endpoint labels i+1..=n (column with label
    /// j sits at shape column j-1 after normalization).
    pub fn delta(n: usize) -> Result<Self, ShapeError> {
        if n < 2 {
            return Err(ShapeError::EmptyRow);
        }
        let intervals: Vec<(usize, usize)> = (1..n).map(|i| (i + 1, n)).collect();
        Self::from_rows(&intervals)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn is_moon(&self) -> bool {
        self.moon
    }

    /// 1-based inclusive column interval of row `i` (1-based).
    pub fn row_interval(&self, i: usize) -> (usize, usize) {
        self.rows[i - 1]
    }

    pub fn row_len(&self, i: usize) -> usize {
        let (a, b) = self.rows[i - 1];
        b - a + 1
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|&(a, b)| b - a + 1).collect()
    }

    pub fn row_intervals(&self) -> &[(usize, usize)] {
        &self.rows
    }

    /// The peak index i0 of the unimodal length-row sequence.
    pub fn peak_index(&self) -> usize {
        self.peak
    }

    /// `true` iff row `i` belongs to the upper part (at or above the peak).
    pub fn is_up(&self, i: usize) -> bool {
        i <= self.peak
    }

    /// Row indices sorted ascending by the total order: shorter rows first,
    /// ties Up before Low, within Up topmost first, within Low bottommost first.
    pub fn row_order(&self) -> &[usize] {
        &self.order
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        if row == 0 || row > self.rows.len() {
            return false;
        }
        let (a, b) = self.rows[row - 1];
        (a..=b).contains(&col)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &(a, b))| (a..=b).map(move |c| (i + 1, c)))
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(|&(a, b)| b - a + 1).sum()
    }

    /// `true` iff every cell of the rectangle spanned by rows `r1..=r2` and
    /// columns `c1..=c2` lies inside the shape.
    pub fn contains_rect(&self, r1: usize, r2: usize, c1: usize, c2: usize) -> bool {
        if r1 == 0 || r2 > self.rows.len() {
            return false;
        }
        (r1..=r2).all(|r| {
            let (a, b) = self.rows[r - 1];
            a <= c1 && c2 <= b
        })
    }

    /// The i-th rectangle: the greatest rectangle inside the shape whose top
    /// row (for Up rows) or bottom row (for Low rows) is row `i`, spanning
    /// row `i`'s full interval.
    pub fn rectangle(&self, i: usize) -> RectRegion {
        assert!(i >= 1 && i <= self.rows.len(), "row index out of range");
        let (a, b) = self.rows[i - 1];
        let contains_interval = |r: usize| {
            let (ra, rb) = self.rows[r - 1];
            ra <= a && b <= rb
        };
        if self.is_up(i) {
            let mut hi = i;
            while hi < self.rows.len() && contains_interval(hi + 1) {
                hi += 1;
            }
            RectRegion {
                row_lo: i,
                row_hi: hi,
                col_lo: a,
                col_hi: b,
            }
        } else {
            let mut lo = i;
            while lo > 1 && contains_interval(lo - 1) {
                lo -= 1;
            }
            RectRegion {
                row_lo: lo,
                row_hi: i,
                col_lo: a,
                col_hi: b,
            }
        }
    }

    /// Rows and columns mirrored; validation is re-run on the result.
    pub fn transpose(&self) -> Self {
        let mut intervals = Vec::with_capacity(self.cols);
        for c in 1..=self.cols {
            let hit: Vec<usize> = (1..=self.rows.len())
                .filter(|&r| self.contains(r, c))
                .collect();
            intervals.push((hit[0], *hit.last().unwrap()));
        }
        if self.moon {
            Self::from_rows(&intervals).expect("transpose of a moon polyomino is moon")
        } else {
            Self::from_rows_relaxed(&intervals).expect("transpose of a column-convex shape")
        }
    }
}

fn normalize(intervals: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, ShapeError> {
    if intervals.is_empty() || intervals.iter().any(|&(a, b)| a == 0 || a > b) {
        return Err(ShapeError::EmptyRow);
    }
    let shift = intervals.iter().map(|&(a, _)| a).min().unwrap() - 1;
    Ok(intervals.iter().map(|&(a, b)| (a - shift, b - shift)).collect())
}

fn check_column_convex(rows: &[(usize, usize)]) -> Result<(), ShapeError> {
    let cols = rows.iter().map(|&(_, b)| b).max().unwrap();
    for c in 1..=cols {
        let hit: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| (a..=b).contains(&c))
            .map(|(i, _)| i)
            .collect();
        if hit.is_empty() || *hit.last().unwrap() - hit[0] + 1 != hit.len() {
            return Err(ShapeError::NotColumnConvex(c));
        }
    }
    Ok(())
}

/// Every valid moon polyomino with at most `max_rows` rows and `max_len`
/// columns, each exactly once up to column normalization, ordered by row
/// count then lexicographically on the interval list.
pub fn enumerate_shapes(max_rows: usize, max_len: usize) -> Vec<MoonPolyomino> {
    let intervals: Vec<(usize, usize)> = (1..=max_len)
        .flat_map(|a| (a..=max_len).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for s in 1..=max_rows {
        let mut idx = vec![0usize; s];
        loop {
            let candidate: Vec<(usize, usize)> = idx.iter().map(|&k| intervals[k]).collect();
            // only already-normalized interval lists, so each shape appears once
            if candidate.iter().map(|&(a, _)| a).min() == Some(1) {
                if let Ok(shape) = MoonPolyomino::from_rows(&candidate) {
                    out.push(shape);
                }
            }
            // odometer increment, last row fastest
            let mut pos = s;
            loop {
                if pos == 0 {
                    break;
                }
                idx[pos - 1] += 1;
                if idx[pos - 1] < intervals.len() {
                    break;
                }
                idx[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ShapeRepr {
    rows: Vec<(usize, usize)>,
}

impl Serialize for MoonPolyomino {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ShapeRepr {
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MoonPolyomino {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ShapeRepr::deserialize(deserializer)?;
        MoonPolyomino::from_rows(&repr.rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for MoonPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(a, b)) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}{}", " ".repeat(a - 1), "#".repeat(b - a + 1))?;
        }
        Ok(())
    }
}
