//! 01-fillings of moon polyominoes: NE/SE chain statistics, empty-line
//! profiles, the row-rectangle coloring with its luc/ruc gap counts, and the
//! brute-force enumerators and distributions everything else is checked
//! against.

use crate::qpoly::BivarPoly;
use crate::shape::MoonPolyomino;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use thiserror::Error;

/// Default cap on cell count for arbitrary (unrestricted) enumeration.
pub const DEFAULT_CELL_CAP: usize = 25;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FillError {
    #[error("cell ({0}, {1}) lies outside the shape")]
    CellOutsideShape(usize, usize),
    #[error("column {0} holds more than one 1")]
    ColumnConflict(usize),
    #[error("shape has {0} cells, above the enumeration cap of {1}")]
    CapExceeded(usize, usize),
}

/// A 01-filling: the set of 1-cells on a shared shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Filling01 {
    shape: Arc<MoonPolyomino>,
    ones: BTreeSet<(usize, usize)>,
}

/// Three-state cell classification produced by the coloring construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellState {
    Free,
    One,
    Colored,
}

/// The coloring of a filling: every shape cell mapped to its state.
#[derive(Clone, Debug)]
pub struct ColorMask {
    shape: Arc<MoonPolyomino>,
    states: BTreeMap<(usize, usize), CellState>,
}

impl Filling01 {
    pub fn new(
        shape: Arc<MoonPolyomino>,
        ones: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, FillError> {
        let ones: BTreeSet<(usize, usize)> = ones.into_iter().collect();
        for &(r, c) in &ones {
            if !shape.contains(r, c) {
                return Err(FillError::CellOutsideShape(r, c));
            }
        }
        Ok(Self { shape, ones })
    }

    pub fn empty(shape: Arc<MoonPolyomino>) -> Self {
        Self {
            shape,
            ones: BTreeSet::new(),
        }
    }

    pub fn shape(&self) -> &Arc<MoonPolyomino> {
        &self.shape
    }

    pub fn ones(&self) -> &BTreeSet<(usize, usize)> {
        &self.ones
    }

    pub fn ones_in_row(&self, row: usize) -> Vec<(usize, usize)> {
        self.ones.iter().copied().filter(|&(r, _)| r == row).collect()
    }

    pub fn row_counts(&self) -> Vec<usize> {
        let mut m = vec![0; self.shape.num_rows()];
        for &(r, _) in &self.ones {
            m[r - 1] += 1;
        }
        m
    }

    /// Errors with the offending column if two 1s share a column.
    pub fn check_one_per_column(&self) -> Result<(), FillError> {
        let mut seen = vec![false; self.shape.num_cols()];
        for &(_, c) in &self.ones {
            if seen[c - 1] {
                return Err(FillError::ColumnConflict(c));
            }
            seen[c - 1] = true;
        }
        Ok(())
    }

    /// The filling on the transposed shape with every 1-cell mirrored.
    pub fn transpose(&self) -> Filling01 {
        let shape = Arc::new(self.shape.transpose());
        let ones = self.ones.iter().map(|&(r, c)| (c, r));
        Filling01::new(shape, ones).expect("mirrored cells lie in the transposed shape")
    }
}

/// Counts of NE chains (upper 1 strictly right of the lower, rows numbered
/// top-down) and SE chains (upper 1 strictly left), where the bounding
/// rectangle of the two 1-cells must lie inside the shape. Pairs sharing a
/// row or a column count as neither.
pub fn chain_stats(filling: &Filling01) -> (usize, usize) {
    let cells: Vec<(usize, usize)> = filling.ones.iter().copied().collect();
    let shape = &filling.shape;
    let (mut ne2, mut se2) = (0, 0);
    for (k, &(r1, c1)) in cells.iter().enumerate() {
        for &(r2, c2) in &cells[k + 1..] {
            // set order is row-major, so r1 <= r2
            if r1 == r2 || c1 == c2 {
                continue;
            }
            if !shape.contains_rect(r1, r2, c1.min(c2), c1.max(c2)) {
                continue;
            }
            if c1 > c2 {
                ne2 += 1;
            } else {
                se2 += 1;
            }
        }
    }
    (ne2, se2)
}

/// Column and row indices containing no 1.
pub fn empty_lines(filling: &Filling01) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let shape = &filling.shape;
    let used_cols: BTreeSet<usize> = filling.ones.iter().map(|&(_, c)| c).collect();
    let used_rows: BTreeSet<usize> = filling.ones.iter().map(|&(r, _)| r).collect();
    let ec = (1..=shape.num_cols()).filter(|c| !used_cols.contains(c)).collect();
    let er = (1..=shape.num_rows()).filter(|r| !used_rows.contains(r)).collect();
    (ec, er)
}

impl ColorMask {
    pub fn state(&self, row: usize, col: usize) -> Result<CellState, FillError> {
        self.states
            .get(&(row, col))
            .copied()
            .ok_or(FillError::CellOutsideShape(row, col))
    }

    pub fn cells_in_state(&self, state: CellState) -> Vec<(usize, usize)> {
        self.states
            .iter()
            .filter(|&(_, &s)| s == state)
            .map(|(&c, _)| c)
            .collect()
    }

    /// FREE cells strictly left / strictly right of `cell` in its row, when
    /// `cell` holds a 1; `(0, 0)` for any other cell.
    pub fn luc_ruc(&self, row: usize, col: usize) -> Result<(usize, usize), FillError> {
        if self.state(row, col)? != CellState::One {
            return Ok((0, 0));
        }
        let (a, b) = self.shape.row_interval(row);
        let free = |c: usize| self.states.get(&(row, c)) == Some(&CellState::Free);
        let luc = (a..col).filter(|&c| free(c)).count();
        let ruc = (col + 1..=b).filter(|&c| free(c)).count();
        Ok((luc, ruc))
    }

    /// FREE-gap sequence of `row`: gap before the first 1, between consecutive
    /// 1s, and after the last, giving (number of 1s in row) + 1 entries.
    pub fn row_gaps(&self, row: usize) -> Vec<usize> {
        let (a, b) = self.shape.row_interval(row);
        let mut gaps = vec![0usize];
        for c in a..=b {
            match self.states[&(row, c)] {
                CellState::One => gaps.push(0),
                CellState::Free => *gaps.last_mut().unwrap() += 1,
                CellState::Colored => {}
            }
        }
        gaps
    }
}

/// The coloring of a filling with at most one 1 per column: cells of empty
/// columns are colored, and within the i-th rectangle the cells below (Up
/// rows) or above (Low rows) each 1 of row i are colored.
///
/// A 1 of row i only colors cells of rows that come after row i in the total
/// row order. This leaves each row exactly as the incremental row-by-row
/// construction sees it when the row is placed; without the restriction, two
/// equal-length rows straddling the peak can color each other's cells and
/// break the luc/ruc chain accounting.
pub fn coloring(filling: &Filling01) -> Result<ColorMask, FillError> {
    filling.check_one_per_column()?;
    let shape = filling.shape.clone();
    let (ec, _) = empty_lines(filling);
    let mut position = vec![0usize; shape.num_rows() + 1];
    for (pos, &row) in shape.row_order().iter().enumerate() {
        position[row] = pos;
    }
    let mut states: BTreeMap<(usize, usize), CellState> = shape
        .cells()
        .map(|(r, c)| {
            let s = if ec.contains(&c) {
                CellState::Colored
            } else {
                CellState::Free
            };
            ((r, c), s)
        })
        .collect();
    for &(i, c) in &filling.ones {
        let rect = shape.rectangle(i);
        let span: Box<dyn Iterator<Item = usize>> = if shape.is_up(i) {
            Box::new(i + 1..=rect.row_hi)
        } else {
            Box::new(rect.row_lo..i)
        };
        for r in span.filter(|&r| position[r] > position[i]) {
            states.insert((r, c), CellState::Colored);
        }
    }
    for &(r, c) in &filling.ones {
        states.insert((r, c), CellState::One);
    }
    Ok(ColorMask { shape, states })
}

/// `luc`/`ruc` of a single cell with respect to the full coloring.
pub fn luc_ruc(filling: &Filling01, row: usize, col: usize) -> Result<(usize, usize), FillError> {
    coloring(filling)?.luc_ruc(row, col)
}

/// The chain statistics recomputed from the coloring:
/// `ne2 = sum luc over Up 1-cells + sum ruc over Low 1-cells` and dually.
pub fn stats_via_coloring(filling: &Filling01) -> Result<(usize, usize), FillError> {
    let mask = coloring(filling)?;
    let (mut ne2, mut se2) = (0, 0);
    for &(r, c) in &filling.ones {
        let (luc, ruc) = mask.luc_ruc(r, c)?;
        if filling.shape.is_up(r) {
            ne2 += luc;
            se2 += ruc;
        } else {
            ne2 += ruc;
            se2 += luc;
        }
    }
    Ok((ne2, se2))
}

/// All fillings with exactly `m[i-1]` 1s in row i and at most one 1 per
/// column; with `ec` given, only fillings whose empty-column set is exactly
/// `ec`. Rows are processed top-down with lexicographic column choices, so
/// the output order is deterministic.
pub fn enumerate_row_constrained(
    shape: &Arc<MoonPolyomino>,
    m: &[usize],
    ec: Option<&BTreeSet<usize>>,
) -> Vec<Filling01> {
    assert_eq!(m.len(), shape.num_rows(), "one count per row");
    let t = shape.num_cols();
    let total: usize = m.iter().sum();
    if let Some(a) = ec {
        // every 1 uses a distinct column outside A, and every non-A column
        // must end up used
        if a.iter().any(|&c| c == 0 || c > t) || total != t - a.len() {
            return Vec::new();
        }
    }
    let mut used = vec![false; t + 1];
    if let Some(a) = ec {
        for &c in a {
            used[c] = true; // reserve A columns as permanently empty
        }
    }
    let mut out = Vec::new();
    let mut acc: Vec<(usize, usize)> = Vec::new();
    place_rows(shape, m, 1, &mut used, &mut acc, &mut out);
    out
}

fn place_rows(
    shape: &Arc<MoonPolyomino>,
    m: &[usize],
    row: usize,
    used: &mut Vec<bool>,
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Filling01>,
) {
    if row > shape.num_rows() {
        out.push(Filling01::new(shape.clone(), acc.iter().copied()).unwrap());
        return;
    }
    let need = m[row - 1];
    let (a, b) = shape.row_interval(row);
    let avail: Vec<usize> = (a..=b).filter(|&c| !used[c]).collect();
    choose_cols(&avail, need, 0, shape, m, row, used, acc, out);
}

#[allow(clippy::too_many_arguments)]
fn choose_cols(
    avail: &[usize],
    need: usize,
    from: usize,
    shape: &Arc<MoonPolyomino>,
    m: &[usize],
    row: usize,
    used: &mut Vec<bool>,
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Filling01>,
) {
    if need == 0 {
        place_rows(shape, m, row + 1, used, acc, out);
        return;
    }
    if avail.len() - from < need {
        return;
    }
    for k in from..=avail.len() - need {
        let c = avail[k];
        used[c] = true;
        acc.push((row, c));
        choose_cols(avail, need - 1, k + 1, shape, m, row, used, acc, out);
        acc.pop();
        used[c] = false;
    }
}

/// All `2^cells` unrestricted fillings, in bitmask counter order over the
/// row-major cell list.
pub fn enumerate_arbitrary(
    shape: &Arc<MoonPolyomino>,
    cap: usize,
) -> Result<impl Iterator<Item = Filling01>, FillError> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let k = cells.len();
    if k > cap {
        return Err(FillError::CapExceeded(k, cap));
    }
    let shape = shape.clone();
    Ok((0u64..(1u64 << k)).map(move |mask| {
        let ones = cells
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &cell)| cell);
        Filling01::new(shape.clone(), ones).unwrap()
    }))
}

/// All fillings with at most one 1 per column and no row restriction
/// (the union of N(T, m) over all m), by per-column choice.
pub fn enumerate_column_free(shape: &Arc<MoonPolyomino>) -> Vec<Filling01> {
    let t = shape.num_cols();
    let choices: Vec<Vec<Option<usize>>> = (1..=t)
        .map(|c| {
            let mut v: Vec<Option<usize>> = vec![None];
            v.extend((1..=shape.num_rows()).filter(|&r| shape.contains(r, c)).map(Some));
            v
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; t];
    loop {
        let ones = (0..t).filter_map(|c| choices[c][idx[c]].map(|r| (r, c + 1)));
        out.push(Filling01::new(shape.clone(), ones).unwrap());
        let mut pos = t;
        loop {
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
            if idx[pos - 1] < choices[pos - 1].len() {
                break;
            }
            idx[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    out
}

/// Which filling family a brute-force distribution ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// Row counts prescribed, at most one 1 per column.
    Row,
    /// Column counts prescribed, at most one 1 per row.
    Column,
    /// No restriction at all.
    Arbitrary,
}

/// `sum p^{ne2} q^{se2}` over the selected filling family, via `chain_stats`.
///
/// In `Row` mode with `m` absent, the sum ranges over all fillings with at
/// most one 1 per column (optionally restricted to empty-column set `ec`);
/// `Column` mode is the transposed variant with statistics still taken on the
/// original orientation.
pub fn distribution_brute(
    shape: &Arc<MoonPolyomino>,
    m: Option<&[usize]>,
    ec: Option<&BTreeSet<usize>>,
    mode: Mode,
) -> Result<BivarPoly, FillError> {
    let mut dist = BivarPoly::zero();
    let mut tally = |f: &Filling01| {
        let (ne2, se2) = chain_stats(f);
        dist = &dist + &BivarPoly::monomial(ne2 as u32, se2 as u32, BigInt::one());
    };
    match mode {
        Mode::Row => match m {
            Some(m) => {
                for f in enumerate_row_constrained(shape, m, ec) {
                    tally(&f);
                }
            }
            None => {
                for f in enumerate_column_free(shape) {
                    if let Some(a) = ec {
                        if &empty_lines(&f).0 != a {
                            continue;
                        }
                    }
                    tally(&f);
                }
            }
        },
        Mode::Column => {
            let transposed = Arc::new(shape.as_ref().transpose());
            let fillings = match m {
                Some(m) => enumerate_row_constrained(&transposed, m, ec),
                None => enumerate_column_free(&transposed),
            };
            for f in fillings {
                if m.is_none() {
                    if let Some(a) = ec {
                        if &empty_lines(&f).0 != a {
                            continue;
                        }
                    }
                }
                tally(&f.transpose());
            }
        }
        Mode::Arbitrary => {
            for f in enumerate_arbitrary(shape, DEFAULT_CELL_CAP)? {
                tally(&f);
            }
        }
    }
    Ok(dist)
}

/// `distribution_brute` in `Arbitrary` mode with an explicit cell cap.
pub fn distribution_arbitrary(
    shape: &Arc<MoonPolyomino>,
    cap: usize,
) -> Result<BivarPoly, FillError> {
    let mut dist = BivarPoly::zero();
    for f in enumerate_arbitrary(shape, cap)? {
        let (ne2, se2) = chain_stats(&f);
        dist = &dist + &BivarPoly::monomial(ne2 as u32, se2 as u32, BigInt::one());
    }
    Ok(dist)
}

#[derive(Serialize, Deserialize)]
struct FillingRepr {
    shape: MoonPolyomino,
    ones: Vec<(usize, usize)>,
}

impl Serialize for Filling01 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FillingRepr {
            shape: self.shape.as_ref().clone(),
            ones: self.ones.iter().copied().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Filling01 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FillingRepr::deserialize(deserializer)?;
        Filling01::new(Arc::new(repr.shape), repr.ones).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::enumerate_shapes;

    fn arc(shape: MoonPolyomino) -> Arc<MoonPolyomino> {
        Arc::new(shape)
    }

    fn square2() -> Arc<MoonPolyomino> {
        arc(MoonPolyomino::from_rows(&[(1, 2), (1, 2)]).unwrap())
    }

    fn example_shape() -> Arc<MoonPolyomino> {
        arc(MoonPolyomino::from_rows(&[(3, 4), (1, 6), (1, 6), (2, 5), (2, 4)]).unwrap())
    }

    #[test]
    fn chain_stats_figure1_filling() {
        // the arc diagram {(1,9),(2,3),(2,4),(3,7),(5,6),(6,9),(6,11),(9,10)}
        // placed on delta(11): arc (i,j) at cell (i, j-1)
        let arcs = [(1, 9), (2, 3), (2, 4), (3, 7), (5, 6), (6, 9), (6, 11), (9, 10)];
        let shape = arc(MoonPolyomino::delta(11).unwrap());
        let ones = arcs.iter().map(|&(i, j)| (i, j - 1));
        let f = Filling01::new(shape, ones).unwrap();
        assert_eq!(chain_stats(&f), (6, 4));
    }

    #[test]
    fn chain_stats_single_one() {
        let f = Filling01::new(square2(), [(1, 2)]).unwrap();
        assert_eq!(chain_stats(&f), (0, 0));
    }

    #[test]
    fn chain_stats_non_moon_counterexample_shape() {
        let shape = arc(MoonPolyomino::from_rows_relaxed(&[(2, 3), (1, 3), (1, 2)]).unwrap());
        let f = Filling01::new(shape, [(1, 3), (2, 2), (3, 1)]).unwrap();
        // the (1,3)/(3,1) pair's bounding rectangle needs cells the shape lacks
        assert_eq!(chain_stats(&f), (2, 0));
    }

    #[test]
    fn empty_lines_examples() {
        let empty = Filling01::empty(square2());
        let (ec, er) = empty_lines(&empty);
        assert_eq!(ec, BTreeSet::from([1, 2]));
        assert_eq!(er, BTreeSet::from([1, 2]));
        let f = Filling01::new(square2(), [(1, 1), (2, 2)]).unwrap();
        let (ec, er) = empty_lines(&f);
        assert!(ec.is_empty() && er.is_empty());
    }

    #[test]
    fn coloring_diagonal_square() {
        let f = Filling01::new(square2(), [(1, 1), (2, 2)]).unwrap();
        let mask = coloring(&f).unwrap();
        assert_eq!(mask.state(2, 1).unwrap(), CellState::Colored);
        assert_eq!(mask.state(1, 1).unwrap(), CellState::One);
        assert_eq!(mask.state(2, 2).unwrap(), CellState::One);
        assert_eq!(mask.state(1, 2).unwrap(), CellState::Free);
    }

    #[test]
    fn coloring_below_one_plus_empty_column() {
        let shape = arc(MoonPolyomino::from_rows(&[(1, 2), (1, 3)]).unwrap());
        let f = Filling01::new(shape, [(1, 1), (2, 2)]).unwrap();
        let mask = coloring(&f).unwrap();
        assert_eq!(mask.cells_in_state(CellState::Colored), vec![(2, 1), (2, 3)]);
    }

    #[test]
    fn coloring_empty_filling_all_colored() {
        let f = Filling01::empty(example_shape());
        let mask = coloring(&f).unwrap();
        assert_eq!(mask.cells_in_state(CellState::Colored).len(), 21);
    }

    #[test]
    fn coloring_rejects_column_conflict() {
        let f = Filling01::new(square2(), [(1, 1), (2, 1)]).unwrap();
        assert_eq!(coloring(&f).unwrap_err(), FillError::ColumnConflict(1));
    }

    #[test]
    fn luc_ruc_examples() {
        let f = Filling01::new(square2(), [(1, 1), (2, 2)]).unwrap();
        assert_eq!(luc_ruc(&f, 1, 1).unwrap(), (0, 1));
        assert_eq!(luc_ruc(&f, 2, 2).unwrap(), (0, 0));
        assert_eq!(luc_ruc(&f, 1, 2).unwrap(), (0, 0));
        assert_eq!(luc_ruc(&f, 3, 1).unwrap_err(), FillError::CellOutsideShape(3, 1));
    }

    #[test]
    fn stats_via_coloring_examples() {
        let anti = Filling01::new(square2(), [(1, 2), (2, 1)]).unwrap();
        assert_eq!(stats_via_coloring(&anti).unwrap(), (1, 0));
        let diag = Filling01::new(square2(), [(1, 1), (2, 2)]).unwrap();
        assert_eq!(stats_via_coloring(&diag).unwrap(), (0, 1));
    }

    #[test]
    fn enumerate_worked_example() {
        let fillings = enumerate_row_constrained(
            &example_shape(),
            &[1, 2, 1, 0, 1],
            Some(&BTreeSet::from([2])),
        );
        assert_eq!(fillings.len(), 6);
        let mut stats: Vec<(usize, usize)> = fillings.iter().map(chain_stats).collect();
        stats.sort_unstable();
        assert_eq!(stats, vec![(0, 3), (1, 2), (1, 2), (2, 1), (2, 1), (3, 0)]);
    }

    #[test]
    fn enumerate_square_diagonals() {
        let fillings = enumerate_row_constrained(&square2(), &[1, 1], Some(&BTreeSet::new()));
        assert_eq!(fillings.len(), 2);
    }

    #[test]
    fn enumerate_all_zero_rows() {
        let shape = example_shape();
        let all_cols: BTreeSet<usize> = (1..=shape.num_cols()).collect();
        let fillings = enumerate_row_constrained(&shape, &[0; 5], Some(&all_cols));
        assert_eq!(fillings.len(), 1);
        assert!(fillings[0].ones().is_empty());
    }

    #[test]
    fn enumerate_overfull_row_is_empty() {
        let fillings = enumerate_row_constrained(&square2(), &[3, 0], None);
        assert!(fillings.is_empty());
    }

    #[test]
    fn enumerate_arbitrary_counts() {
        let d2 = arc(MoonPolyomino::delta(2).unwrap());
        assert_eq!(enumerate_arbitrary(&d2, 25).unwrap().count(), 2);
        let d5 = arc(MoonPolyomino::delta(5).unwrap());
        assert_eq!(enumerate_arbitrary(&d5, 25).unwrap().count(), 1024);
        assert_eq!(enumerate_arbitrary(&square2(), 25).unwrap().count(), 16);
        let err = enumerate_arbitrary(&d5, 5).map(|_| ()).unwrap_err();
        assert_eq!(err, FillError::CapExceeded(10, 5));
    }

    #[test]
    fn distribution_worked_example() {
        let dist = distribution_brute(
            &example_shape(),
            Some(&[1, 2, 1, 0, 1]),
            Some(&BTreeSet::from([2])),
            Mode::Row,
        )
        .unwrap();
        assert_eq!(dist.to_string(), "p^3 + 2p^2q + 2pq^2 + q^3");
    }

    #[test]
    fn distribution_non_moon_counterexample() {
        let shape = arc(MoonPolyomino::from_rows_relaxed(&[(2, 3), (1, 3), (1, 2)]).unwrap());
        let dist = distribution_brute(
            &shape,
            Some(&[1, 1, 1]),
            Some(&BTreeSet::new()),
            Mode::Row,
        )
        .unwrap();
        assert_eq!(dist.to_string(), "p^2 + 2q");
        assert!(!dist.is_symmetric());
    }

    #[test]
    fn distribution_empty_m() {
        let shape = example_shape();
        let all_cols: BTreeSet<usize> = (1..=shape.num_cols()).collect();
        let dist =
            distribution_brute(&shape, Some(&[0; 5]), Some(&all_cols), Mode::Row).unwrap();
        assert_eq!(dist, BivarPoly::one());
    }

    #[test]
    fn oracle_agreement_small_family() {
        // exhaustive check of the coloring identity on shapes up to 3x3
        for shape in enumerate_shapes(3, 3) {
            let shape = arc(shape);
            for f in enumerate_column_free(&shape) {
                assert_eq!(
                    stats_via_coloring(&f).unwrap(),
                    chain_stats(&f),
                    "disagreement on {:?} over {:?}",
                    f.ones(),
                    shape.row_intervals()
                );
                let mask = coloring(&f).unwrap();
                for &(r, c) in f.ones() {
                    assert_eq!(mask.state(r, c).unwrap(), CellState::One);
                }
            }
        }
    }

    #[test]
    fn column_free_matches_row_constrained_union() {
        let shape = arc(MoonPolyomino::from_rows(&[(1, 2), (1, 3)]).unwrap());
        let total = enumerate_column_free(&shape).len();
        // columns have heights 2, 2, 1: (2+1)(2+1)(1+1) choices
        assert_eq!(total, 18);
    }

    #[test]
    fn json_round_trip() {
        let f = Filling01::new(square2(), [(1, 2), (2, 1)]).unwrap();
        let js = serde_json::to_string(&f).unwrap();
        let back: Filling01 = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }
}
