//! Exhaustive desk-scale verification: every symmetry, bijection and
//! closed-form claim checked over all moon polyominoes up to a size bound.
//! Shared by the CLI `verify` command and the acceptance suite.

use crate::biject::{
    count_closed, distribution_closed, feasible_empty_sets, from_compositions, h_vector,
    stats_from_compositions, to_compositions,
};
use crate::fill::{
    chain_stats, coloring, distribution_brute, empty_lines, enumerate_column_free,
    enumerate_row_constrained, stats_via_coloring, CellState, Mode,
};
use crate::involution::{phi, phi_via_g};
use crate::qpoly::BivarPoly;
use crate::shape::{enumerate_shapes, MoonPolyomino};
use num_bigint::BigInt;
use serde::Serialize;
use std::sync::Arc;

/// Outcome of one invariant across the whole shape family.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantResult {
    pub name: &'static str,
    pub passes: u64,
    pub failures: u64,
    /// Description of the first failing instance, if any.
    pub first_witness: Option<String>,
}

impl InvariantResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passes: 0,
            failures: 0,
            first_witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl Fn() -> String) {
        if ok {
            self.passes += 1;
        } else {
            self.failures += 1;
            if self.first_witness.is_none() {
                self.first_witness = Some(witness());
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BatteryReport {
    pub results: Vec<InvariantResult>,
}

impl BatteryReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.failures == 0)
    }
}

fn all_m(lens: &[usize], max_total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &len in lens {
        let mut next = Vec::new();
        for prefix in &out {
            let used: usize = prefix.iter().sum();
            for mi in 0..=len.min(max_total.saturating_sub(used)) {
                let mut p = prefix.clone();
                p.push(mi);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn witness(shape: &MoonPolyomino, extra: &str) -> String {
    format!("shape {:?}: {extra}", shape.row_intervals())
}

/// Run the full invariant battery over every moon polyomino with at most
/// `max_rows` rows and `max_len` columns, with row-count vectors summing to
/// at most `max_ones`.
pub fn run_battery(max_rows: usize, max_len: usize, max_ones: usize) -> BatteryReport {
    let mut oracle = InvariantResult::new("coloring oracle agreement");
    let mut ones_free = InvariantResult::new("1-cells stay uncolored");
    let mut free_count = InvariantResult::new("per-row free count is h_i - m_i");
    let mut closed_brute = InvariantResult::new("closed distribution == brute");
    let mut count_check = InvariantResult::new("closed count == |N(T,m;A)|");
    let mut symmetry = InvariantResult::new("p/q symmetry of the distribution");
    let mut bijection = InvariantResult::new("composition bijection round-trip");
    let mut gap_stats = InvariantResult::new("statistics from composition gaps");
    let mut involution = InvariantResult::new("involution: order two, EC kept, stats swapped");
    let mut factorization = InvariantResult::new("involution == composition factorization");
    let mut transpose_dual = InvariantResult::new("transpose preserves chain statistics");
    let mut sum_over_a = InvariantResult::new("sum over A of closed == brute without A");
    let mut row_reorder = InvariantResult::new("row reorder keeps the total distribution");

    for shape in enumerate_shapes(max_rows, max_len) {
        let shape = Arc::new(shape);
        let lens = shape.row_lengths();

        for m in all_m(&lens, max_ones) {
            // fillings with row profile m, no EC restriction
            let unrestricted = enumerate_row_constrained(&shape, &m, None);
            for f in &unrestricted {
                let via = stats_via_coloring(f).unwrap();
                let direct = chain_stats(f);
                oracle.record(via == direct, || {
                    witness(&shape, &format!("ones {:?}: coloring {via:?} vs direct {direct:?}", f.ones()))
                });
                let mask = coloring(f).unwrap();
                ones_free.record(
                    f.ones()
                        .iter()
                        .all(|&(r, c)| mask.state(r, c).unwrap() == CellState::One),
                    || witness(&shape, &format!("ones {:?}: a 1-cell got colored", f.ones())),
                );
                let g = phi(f).unwrap();
                let (ne, se) = direct;
                let ok = chain_stats(&g) == (se, ne)
                    && empty_lines(&g).0 == empty_lines(f).0
                    && phi(&g).unwrap() == *f;
                involution.record(ok, || {
                    witness(&shape, &format!("ones {:?}: involution broke", f.ones()))
                });
                factorization.record(phi_via_g(f).unwrap() == g, || {
                    witness(&shape, &format!("ones {:?}: phi != g-factorized phi", f.ones()))
                });
            }

            let brute_all = distribution_brute(&shape, Some(&m), None, Mode::Row).unwrap();
            let mut closed_sum = BivarPoly::zero();
            for a in feasible_empty_sets(&shape, &m) {
                let fillings = enumerate_row_constrained(&shape, &m, Some(&a));
                let brute = distribution_brute(&shape, Some(&m), Some(&a), Mode::Row).unwrap();
                let closed = distribution_closed(&shape, &m, &a).unwrap();
                closed_sum = &closed_sum + &closed;
                closed_brute.record(closed == brute, || {
                    witness(&shape, &format!("m {m:?} A {a:?}: closed {closed} vs brute {brute}"))
                });
                count_check.record(
                    count_closed(&shape, &m, &a).unwrap() == BigInt::from(fillings.len()),
                    || witness(&shape, &format!("m {m:?} A {a:?}: count mismatch")),
                );
                symmetry.record(brute.is_symmetric(), || {
                    witness(&shape, &format!("m {m:?} A {a:?}: {brute} not symmetric"))
                });
                let h = h_vector(&shape, &m, &a);
                for f in &fillings {
                    let cs = to_compositions(f).unwrap();
                    let ok = from_compositions(&shape, &m, &a, &cs).unwrap() == *f;
                    bijection.record(ok, || {
                        witness(&shape, &format!("m {m:?} A {a:?} ones {:?}", f.ones()))
                    });
                    gap_stats.record(
                        stats_from_compositions(&shape, &cs) == chain_stats(f),
                        || witness(&shape, &format!("m {m:?} A {a:?} ones {:?}: gap stats", f.ones())),
                    );
                    let mask = coloring(f).unwrap();
                    let ok = (1..=shape.num_rows()).all(|r| {
                        let free = mask
                            .cells_in_state(CellState::Free)
                            .iter()
                            .filter(|&&(row, _)| row == r)
                            .count() as i64;
                        free == h[r - 1] - m[r - 1] as i64
                    });
                    free_count.record(ok, || {
                        witness(&shape, &format!("m {m:?} A {a:?} ones {:?}: free count", f.ones()))
                    });
                }
            }
            sum_over_a.record(closed_sum == brute_all, || {
                witness(&shape, &format!("m {m:?}: sum {closed_sum} vs brute {brute_all}"))
            });
        }

        // transposing a filling preserves both chain statistics
        for f in enumerate_column_free(&shape) {
            let t = f.transpose();
            transpose_dual.record(chain_stats(&t) == chain_stats(&f), || {
                witness(&shape, &format!("ones {:?}: stats changed under transpose", f.ones()))
            });
        }

        // any valid vertical rearrangement of the rows leaves the total
        // column-restricted distribution unchanged
        let base = total_column_restricted_distribution(&shape);
        for perm_shape in row_rearrangements(&shape) {
            let other = total_column_restricted_distribution(&Arc::new(perm_shape.clone()));
            row_reorder.record(other == base, || {
                witness(&shape, &format!("reordered {:?}: {other} vs {base}", perm_shape.row_intervals()))
            });
        }
    }

    BatteryReport {
        results: vec![
            oracle,
            ones_free,
            free_count,
            closed_brute,
            count_check,
            symmetry,
            bijection,
            gap_stats,
            involution,
            factorization,
            transpose_dual,
            sum_over_a,
            row_reorder,
        ],
    }
}

fn total_column_restricted_distribution(shape: &Arc<MoonPolyomino>) -> BivarPoly {
    distribution_brute(shape, None, None, Mode::Row).unwrap()
}

/// Distinct permutations of the row interval list that form valid moon
/// polyominoes other than the shape itself.
fn row_rearrangements(shape: &MoonPolyomino) -> Vec<MoonPolyomino> {
    let rows = shape.row_intervals().to_vec();
    let mut out = Vec::new();
    let mut perm = rows.clone();
    permute(&mut perm, 0, &rows, &mut out);
    out
}

fn permute(
    perm: &mut Vec<(usize, usize)>,
    from: usize,
    original: &[(usize, usize)],
    out: &mut Vec<MoonPolyomino>,
) {
    if from == perm.len() {
        if perm != original {
            if let Ok(shape) = MoonPolyomino::from_rows(perm) {
                if !out.contains(&shape) {
                    out.push(shape);
                }
            }
        }
        return;
    }
    for k in from..perm.len() {
        perm.swap(from, k);
        permute(perm, from + 1, original, out);
        perm.swap(from, k);
    }
}
