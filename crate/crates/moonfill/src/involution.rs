//! The statistic-swapping involution on column-restricted fillings, both as
//! the direct two-stage rebuild and as its factorization through the
//! composition bijection.

use crate::biject::{from_compositions, to_compositions, BijectError, IncrementalFilling};
use crate::fill::{coloring, empty_lines, Filling01};
use std::sync::Arc;

/// The involution: rebuild the filling row by row in the total order,
/// re-placing each row's 1s with its FREE-gap sequence reversed. Preserves
/// the empty-column set and swaps the two chain statistics.
pub fn phi(filling: &Filling01) -> Result<Filling01, BijectError> {
    let shape = Arc::clone(filling.shape());
    let mask = coloring(filling)?;
    let (ec, _) = empty_lines(filling);
    let m = filling.row_counts();
    let mut builder = IncrementalFilling::new(shape.clone(), &ec);
    for &i in shape.row_order() {
        if m[i - 1] == 0 {
            continue;
        }
        // gaps are read against the full coloring of the input; rows placed
        // later in the order never color this row's cells, so the partial
        // free count must agree
        let gaps: Vec<usize> = mask.row_gaps(i).into_iter().rev().collect();
        debug_assert_eq!(
            builder.free_cols(i).len(),
            gaps.iter().sum::<usize>() + m[i - 1],
            "partial coloring disagrees with full coloring on row {i}"
        );
        builder.place_row(i, &gaps)?;
    }
    Ok(builder.finish())
}

/// The factorized route: map to compositions, reverse each row's composition,
/// and map back. Agrees with `phi` cell for cell.
pub fn phi_via_g(filling: &Filling01) -> Result<Filling01, BijectError> {
    let cs = to_compositions(filling)?;
    let (ec, _) = empty_lines(filling);
    from_compositions(filling.shape(), &filling.row_counts(), &ec, &cs.reversed())
}
