//! The h-vector, the bijection between column-restricted fillings and
//! per-row composition sequences, and the closed-form product of p,q-Gaussian
//! coefficients for the joint ascent/descent distribution.

use crate::fill::{coloring, FillError, Filling01};
use crate::qpoly::{pq_gaussian, BivarPoly};
use crate::shape::MoonPolyomino;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum BijectError {
    #[error("|A| = {got} but the column count minus the number of 1s is {expected}")]
    InfeasibleEmptySet { expected: usize, got: usize },
    #[error("composition for row {row} does not fit the available free cells")]
    InfeasibleComposition { row: usize },
    #[error(transparent)]
    Fill(#[from] FillError),
}

/// Per-row compositions: row i carries `m_i + 1` nonnegative parts summing to
/// the row's free-cell count `h_i - m_i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CompositionSeq {
    pub comps: Vec<Vec<usize>>,
}

impl CompositionSeq {
    /// Reverse every row's composition (the statistic-swapping map on
    /// composition sequences).
    pub fn reversed(&self) -> Self {
        Self {
            comps: self
                .comps
                .iter()
                .map(|c| c.iter().rev().copied().collect())
                .collect(),
        }
    }
}

/// Per-row capacities: with rows taken in the total order i_1, ..., i_s,
/// `h_{i_j} = r_{i_j} - (m_{i_1} + ... + m_{i_{j-1}}) - a_{i_j}` where
/// `a_{i_j}` counts the columns of `a` meeting row i_j. Indexed by original
/// row number; values may be negative, which signals emptiness downstream.
pub fn h_vector(shape: &MoonPolyomino, m: &[usize], a: &BTreeSet<usize>) -> Vec<i64> {
    assert_eq!(m.len(), shape.num_rows(), "one count per row");
    let mut h = vec![0i64; shape.num_rows()];
    let mut placed: i64 = 0;
    for &i in shape.row_order() {
        let (lo, hi) = shape.row_interval(i);
        let ai = a.iter().filter(|&&c| (lo..=hi).contains(&c)).count() as i64;
        h[i - 1] = shape.row_len(i) as i64 - placed - ai;
        placed += m[i - 1] as i64;
    }
    h
}

fn check_feasible(shape: &MoonPolyomino, m: &[usize], a: &BTreeSet<usize>) -> Result<(), BijectError> {
    let total: usize = m.iter().sum();
    if total + a.len() != shape.num_cols() {
        return Err(BijectError::InfeasibleEmptySet {
            expected: shape.num_cols().saturating_sub(total),
            got: a.len(),
        });
    }
    Ok(())
}

/// The map f: read each row's FREE-gap sequence around its 1s with respect to
/// the full coloring.
pub fn to_compositions(filling: &Filling01) -> Result<CompositionSeq, BijectError> {
    let mask = coloring(filling)?;
    let comps = (1..=filling.shape().num_rows())
        .map(|r| mask.row_gaps(r))
        .collect();
    Ok(CompositionSeq { comps })
}

/// The map g: starting from the empty filling with the columns of `a`
/// pre-colored, place each row's 1s (rows in the total order) so the FREE-gap
/// pattern matches its composition, coloring below/above the new 1s inside
/// the row's rectangle as it goes.
pub fn from_compositions(
    shape: &Arc<MoonPolyomino>,
    m: &[usize],
    a: &BTreeSet<usize>,
    cs: &CompositionSeq,
) -> Result<Filling01, BijectError> {
    check_feasible(shape, m, a)?;
    let builder = IncrementalFilling::new(shape.clone(), a);
    build_by_gaps(builder, m, |i| {
        let c = &cs.comps[i - 1];
        if c.len() != m[i - 1] + 1 {
            return Err(BijectError::InfeasibleComposition { row: i });
        }
        Ok(c.clone())
    })
}

/// Shared placement engine for g and the direct involution: a partially
/// built filling plus its partial coloring.
pub(crate) struct IncrementalFilling {
    shape: Arc<MoonPolyomino>,
    colored: BTreeSet<(usize, usize)>,
    ones: BTreeSet<(usize, usize)>,
}

impl IncrementalFilling {
    pub(crate) fn new(shape: Arc<MoonPolyomino>, empty_cols: &BTreeSet<usize>) -> Self {
        let colored = shape
            .cells()
            .filter(|&(_, c)| empty_cols.contains(&c))
            .collect();
        Self {
            shape,
            colored,
            ones: BTreeSet::new(),
        }
    }

    pub(crate) fn free_cols(&self, row: usize) -> Vec<usize> {
        let (a, b) = self.shape.row_interval(row);
        (a..=b)
            .filter(|&c| !self.colored.contains(&(row, c)) && !self.ones.contains(&(row, c)))
            .collect()
    }

    /// Place 1s on the row's free cells so the free-gap pattern equals `gaps`,
    /// then color below/above the new 1s within the row's rectangle.
    pub(crate) fn place_row(&mut self, row: usize, gaps: &[usize]) -> Result<(), BijectError> {
        let count = gaps.len() - 1;
        let free = self.free_cols(row);
        if gaps.iter().sum::<usize>() + count != free.len() {
            return Err(BijectError::InfeasibleComposition { row });
        }
        let rect = self.shape.rectangle(row);
        let mut pos = 0usize;
        for &gap in &gaps[..count] {
            pos += gap;
            let col = free[pos];
            pos += 1;
            self.ones.insert((row, col));
            let span: Box<dyn Iterator<Item = usize>> = if self.shape.is_up(row) {
                Box::new(row + 1..=rect.row_hi)
            } else {
                Box::new(rect.row_lo..row)
            };
            for r in span {
                self.colored.insert((r, col));
            }
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> Filling01 {
        Filling01::new(self.shape, self.ones).expect("placed cells lie inside the shape")
    }
}

pub(crate) fn build_by_gaps(
    mut builder: IncrementalFilling,
    m: &[usize],
    mut gaps_for_row: impl FnMut(usize) -> Result<Vec<usize>, BijectError>,
) -> Result<Filling01, BijectError> {
    let order: Vec<usize> = builder.shape.row_order().to_vec();
    for i in order {
        if m[i - 1] == 0 {
            continue;
        }
        let gaps = gaps_for_row(i)?;
        builder.place_row(i, &gaps)?;
    }
    Ok(builder.finish())
}

/// Closed form of the joint distribution over fillings with row counts `m`
/// and empty-column set exactly `a`: the product of `[h_j over m_j]` p,q-
/// Gaussian coefficients. Equals the brute-force distribution.
pub fn distribution_closed(
    shape: &MoonPolyomino,
    m: &[usize],
    a: &BTreeSet<usize>,
) -> Result<BivarPoly, BijectError> {
    check_feasible(shape, m, a)?;
    let h = h_vector(shape, m, a);
    let mut out = BivarPoly::one();
    for (hi, &mi) in h.iter().zip(m) {
        if *hi < 0 {
            return Ok(BivarPoly::zero());
        }
        out = &out * &pq_gaussian(*hi as u32, mi as i64);
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// The counting specialization: product of ordinary binomials `C(h_j, m_j)`.
pub fn count_closed(
    shape: &MoonPolyomino,
    m: &[usize],
    a: &BTreeSet<usize>,
) -> Result<BigInt, BijectError> {
    check_feasible(shape, m, a)?;
    let h = h_vector(shape, m, a);
    let mut out = BigInt::from(1);
    for (hi, &mi) in h.iter().zip(m) {
        if *hi < 0 || *hi < mi as i64 {
            return Ok(BigInt::zero());
        }
        out *= binomial(BigInt::from(*hi), BigInt::from(mi));
    }
    Ok(out)
}

/// Statistics recomputed from a composition sequence via the luc/ruc partial
/// sums, without touching the filling itself.
pub fn stats_from_compositions(shape: &MoonPolyomino, cs: &CompositionSeq) -> (usize, usize) {
    let (mut ne2, mut se2) = (0, 0);
    for (idx, c) in cs.comps.iter().enumerate() {
        let row = idx + 1;
        let total: usize = c.iter().sum();
        let mut prefix = 0usize;
        for &part in &c[..c.len() - 1] {
            prefix += part;
            let luc = prefix;
            let ruc = total - prefix;
            if shape.is_up(row) {
                ne2 += luc;
                se2 += ruc;
            } else {
                ne2 += ruc;
                se2 += luc;
            }
        }
    }
    (ne2, se2)
}

/// Feasible empty-column sets for `(shape, m)`: subsets of the columns of the
/// right size that some filling realizes exactly.
pub fn feasible_empty_sets(shape: &Arc<MoonPolyomino>, m: &[usize]) -> Vec<BTreeSet<usize>> {
    let t = shape.num_cols();
    let total: usize = m.iter().sum();
    if total > t {
        return Vec::new();
    }
    let size = t - total;
    let mut out = Vec::new();
    let mut current = Vec::new();
    subsets_of_size(1, t, size, &mut current, &mut out);
    out
}

fn subsets_of_size(
    from: usize,
    t: usize,
    size: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<BTreeSet<usize>>,
) {
    if size == 0 {
        out.push(current.iter().copied().collect());
        return;
    }
    for c in from..=t {
        if t - c + 1 < size {
            break;
        }
        current.push(c);
        subsets_of_size(c + 1, t, size - 1, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fill::{chain_stats, empty_lines, enumerate_row_constrained, Mode};
    use crate::shape::enumerate_shapes;

    fn example_shape() -> Arc<MoonPolyomino> {
        Arc::new(MoonPolyomino::from_rows(&[(3, 4), (1, 6), (1, 6), (2, 5), (2, 4)]).unwrap())
    }

    fn square2() -> Arc<MoonPolyomino> {
        Arc::new(MoonPolyomino::from_rows(&[(1, 2), (1, 2)]).unwrap())
    }

    #[test]
    fn h_vector_worked_example() {
        let h = h_vector(&example_shape(), &[1, 2, 1, 0, 1], &BTreeSet::from([2]));
        assert_eq!(h, vec![2, 3, 1, 1, 1]);
    }

    #[test]
    fn h_vector_square_and_trivial() {
        let h = h_vector(&square2(), &[1, 1], &BTreeSet::new());
        assert_eq!(h, vec![2, 1]);
        let t = example_shape();
        let h = h_vector(&t, &[0; 5], &BTreeSet::new());
        assert_eq!(h, vec![2, 6, 6, 4, 3]);
    }

    #[test]
    fn to_compositions_square() {
        let f = Filling01::new(square2(), [(1, 1), (2, 2)]).unwrap();
        let cs = to_compositions(&f).unwrap();
        assert_eq!(cs.comps, vec![vec![0, 1], vec![0, 0]]);
        let back = from_compositions(&square2(), &[1, 1], &BTreeSet::new(), &cs).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn to_compositions_empty_filling() {
        let t = example_shape();
        let all_cols: BTreeSet<usize> = (1..=t.num_cols()).collect();
        let f = Filling01::empty(t.clone());
        let cs = to_compositions(&f).unwrap();
        // all columns empty, so every cell is colored and every gap is zero
        assert!(cs.comps.iter().all(|c| c == &vec![0]));
        let back = from_compositions(&t, &[0; 5], &all_cols, &cs).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn from_compositions_worked_shape_round_trip() {
        // a consistent composition sequence for m = (1,2,1,0,1), A = {2}:
        // part counts m_i + 1 and row sums h_i - m_i = (1,1,0,1,0)
        let t = example_shape();
        let m = [1, 2, 1, 0, 1];
        let a = BTreeSet::from([2]);
        let cs = CompositionSeq {
            comps: vec![vec![1, 0], vec![1, 0, 0], vec![0, 0], vec![1], vec![0, 0]],
        };
        let f = from_compositions(&t, &m, &a, &cs).unwrap();
        assert_eq!(empty_lines(&f).0, a);
        assert_eq!(to_compositions(&f).unwrap(), cs);
    }

    #[test]
    fn from_compositions_rejects_bad_sum() {
        let cs = CompositionSeq {
            comps: vec![vec![2, 1], vec![0, 0]],
        };
        let err = from_compositions(&square2(), &[1, 1], &BTreeSet::new(), &cs).unwrap_err();
        assert_eq!(err, BijectError::InfeasibleComposition { row: 1 });
    }

    #[test]
    fn from_compositions_rejects_bad_empty_set() {
        let cs = CompositionSeq {
            comps: vec![vec![0, 1], vec![0, 0]],
        };
        let err =
            from_compositions(&square2(), &[1, 1], &BTreeSet::from([1]), &cs).unwrap_err();
        assert_eq!(err, BijectError::InfeasibleEmptySet { expected: 0, got: 1 });
    }

    #[test]
    fn tightly_packed_round_trip() {
        // single row of length 2 with both cells filled: no freedom at all
        let t = Arc::new(MoonPolyomino::from_rows(&[(1, 2)]).unwrap());
        let cs = CompositionSeq {
            comps: vec![vec![0, 0, 0]],
        };
        let f = from_compositions(&t, &[2], &BTreeSet::new(), &cs).unwrap();
        assert_eq!(f.ones().len(), 2);
        assert_eq!(to_compositions(&f).unwrap(), cs);
    }

    #[test]
    fn distribution_closed_worked_example() {
        let dist =
            distribution_closed(&example_shape(), &[1, 2, 1, 0, 1], &BTreeSet::from([2])).unwrap();
        assert_eq!(dist.to_string(), "p^3 + 2p^2q + 2pq^2 + q^3");
    }

    #[test]
    fn distribution_closed_square() {
        let dist = distribution_closed(&square2(), &[1, 1], &BTreeSet::new()).unwrap();
        assert_eq!(dist.to_string(), "p + q");
    }

    #[test]
    fn distribution_closed_vanishes() {
        // row 1 consists of the single reserved column, so h_1 = 0 < m_1 = 1
        let t = Arc::new(MoonPolyomino::from_rows(&[(1, 1), (1, 2)]).unwrap());
        let dist = distribution_closed(&t, &[1, 0], &BTreeSet::from([1])).unwrap();
        assert!(dist.is_zero());
    }

    #[test]
    fn distribution_closed_guards_empty_set_size() {
        // single row of length 2, m = (1), A = {} would claim p + q while
        // no filling has an empty EC
        let t = Arc::new(MoonPolyomino::from_rows(&[(1, 2)]).unwrap());
        let err = distribution_closed(&t, &[1], &BTreeSet::new()).unwrap_err();
        assert_eq!(err, BijectError::InfeasibleEmptySet { expected: 1, got: 0 });
    }

    #[test]
    fn count_closed_examples() {
        let n = count_closed(&example_shape(), &[1, 2, 1, 0, 1], &BTreeSet::from([2])).unwrap();
        assert_eq!(n, BigInt::from(6));
        let n = count_closed(&square2(), &[1, 1], &BTreeSet::new()).unwrap();
        assert_eq!(n, BigInt::from(2));
        let t = Arc::new(MoonPolyomino::from_rows(&[(1, 1), (1, 2)]).unwrap());
        assert_eq!(
            count_closed(&t, &[1, 0], &BTreeSet::from([1])).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn bijection_and_closed_form_small_family() {
        // exhaustive desk-scale verification on shapes up to 3 rows / 3 cols
        for shape in enumerate_shapes(3, 3) {
            let shape = Arc::new(shape);
            let lens = shape.row_lengths();
            for m in all_m(&lens, 3) {
                for a in feasible_empty_sets(&shape, &m) {
                    let fillings = enumerate_row_constrained(&shape, &m, Some(&a));
                    let brute = crate::fill::distribution_brute(
                        &shape,
                        Some(&m),
                        Some(&a),
                        Mode::Row,
                    )
                    .unwrap();
                    let closed = distribution_closed(&shape, &m, &a).unwrap();
                    assert_eq!(closed, brute);
                    assert_eq!(
                        count_closed(&shape, &m, &a).unwrap(),
                        BigInt::from(fillings.len())
                    );
                    for f in fillings {
                        let cs = to_compositions(&f).unwrap();
                        let back = from_compositions(&shape, &m, &a, &cs).unwrap();
                        assert_eq!(back, f);
                        assert_eq!(stats_from_compositions(&shape, &cs), chain_stats(&f));
                    }
                }
            }
        }
    }

    pub(crate) fn all_m(lens: &[usize], max_total: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for &len in lens {
            let mut next = Vec::new();
            for prefix in &out {
                let used: usize = prefix.iter().sum();
                for mi in 0..=len.min(max_total - used) {
                    let mut p = prefix.clone();
                    p.push(mi);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn json_round_trip() {
        let cs = CompositionSeq {
            comps: vec![vec![1, 0], vec![1, 0, 1]],
        };
        let js = serde_json::to_string(&cs).unwrap();
        assert_eq!(js, r#"{"comps":[[1,0],[1,0,1]]}"#);
        let back: CompositionSeq = serde_json::from_str(&js).unwrap();
        assert_eq!(back, cs);
    }
}
