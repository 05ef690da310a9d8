//! Simple graphs on [n] as arc diagrams: crossing/nesting statistics, the
//! correspondence with fillings of the staircase shape, generators for
//! matchings, set partitions and linked partitions, and the closed-form
//! distributions over endpoint classes.

use crate::fill::Filling01;
use crate::qpoly::{pq_gaussian, BivarPoly};
use crate::shape::MoonPolyomino;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ArcsError {
    #[error("arc ({0}, {1}) is not a pair 1 <= i < j <= n")]
    BadArc(usize, usize),
    #[error("filling shape is not the staircase of the expected size")]
    ShapeMismatch,
    #[error("closed form requires multiplicity one in {0}")]
    UnsupportedMultiplicity(&'static str),
}

/// A simple graph on vertices 1..=n stored as arcs (i, j) with i < j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

/// The graph class a generator or distribution ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphClass {
    /// Perfect matchings: every vertex is an endpoint of exactly one arc.
    Matchings,
    /// Standard representations of set partitions: left and right endpoint
    /// multiplicities at most one.
    Partitions,
    /// Linear representations of linked partitions: right endpoint
    /// multiplicities at most one.
    Linked,
}

impl ArcGraph {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ArcsError> {
        let arcs: BTreeSet<(usize, usize)> = arcs.into_iter().collect();
        for &(i, j) in &arcs {
            if i == 0 || i >= j || j > n {
                return Err(ArcsError::BadArc(i, j));
            }
        }
        Ok(Self { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    /// Sorted multiset of lefthand endpoints.
    pub fn left(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.arcs.iter().map(|&(i, _)| i).collect();
        v.sort_unstable();
        v
    }

    /// Sorted multiset of righthand endpoints.
    pub fn right(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.arcs.iter().map(|&(_, j)| j).collect();
        v.sort_unstable();
        v
    }

    /// Numbers of 2-crossings (i1 < i2 < j1 < j2) and 2-nestings
    /// (i1 < i2 < j2 < j1); arcs sharing an endpoint count as neither.
    pub fn cros2_nest2(&self) -> (usize, usize) {
        let arcs: Vec<(usize, usize)> = self.arcs.iter().copied().collect();
        let (mut cros, mut nest) = (0, 0);
        for (k, &(i1, j1)) in arcs.iter().enumerate() {
            for &(i2, j2) in &arcs[k + 1..] {
                let ((a1, b1), (a2, b2)) = if i1 <= i2 { ((i1, j1), (i2, j2)) } else { ((i2, j2), (i1, j1)) };
                if a1 < a2 && a2 < b1 && b1 < b2 {
                    cros += 1;
                } else if a1 < a2 && b2 < b1 {
                    nest += 1;
                }
            }
        }
        (cros, nest)
    }

    /// The 01-filling of the staircase `delta(n)` with a 1 at shape cell
    /// (i, j-1) for every arc (i, j). Chain statistics come out as
    /// (nest2, cros2).
    pub fn to_filling(&self) -> Result<Filling01, ArcsError> {
        if self.n < 2 {
            return Err(ArcsError::BadArc(0, 0));
        }
        let shape = Arc::new(MoonPolyomino::delta(self.n).expect("n >= 2"));
        let ones = self.arcs.iter().map(|&(i, j)| (i, j - 1));
        Ok(Filling01::new(shape, ones).expect("arc cells lie inside the staircase"))
    }
}

/// Inverse of `ArcGraph::to_filling`; errors unless the filling's shape is a
/// staircase.
pub fn filling_to_graph(filling: &Filling01) -> Result<ArcGraph, ArcsError> {
    let shape = filling.shape();
    let n = shape.num_cols() + 1;
    let staircase = MoonPolyomino::delta(n).map_err(|_| ArcsError::ShapeMismatch)?;
    if shape.as_ref() != &staircase {
        return Err(ArcsError::ShapeMismatch);
    }
    let arcs = filling.ones().iter().map(|&(r, c)| (r, c + 1));
    ArcGraph::new(n, arcs)
}

/// All graphs of the class on [n], optionally filtered to exact left/right
/// endpoint multisets (`o` and `c`, given as sorted-with-repetition lists).
pub fn enumerate_class(
    n: usize,
    class: GraphClass,
    o: Option<&[usize]>,
    c: Option<&[usize]>,
) -> Vec<ArcGraph> {
    let all = match class {
        GraphClass::Linked => enumerate_linked(n),
        GraphClass::Partitions => enumerate_partitions(n),
        GraphClass::Matchings => enumerate_matchings(n),
    };
    all.into_iter()
        .filter(|g| {
            o.is_none_or(|want| {
                let mut want = want.to_vec();
                want.sort_unstable();
                g.left() == want
            }) && c.is_none_or(|want| {
                let mut want = want.to_vec();
                want.sort_unstable();
                g.right() == want
            })
        })
        .collect()
}

/// Linear representations of linked partitions: each right endpoint j in
/// 2..=n is either unused or paired with exactly one i < j, independently.
fn enumerate_linked(n: usize) -> Vec<ArcGraph> {
    let mut out = vec![Vec::new()];
    for j in 2..=n {
        let mut next = Vec::new();
        for prefix in &out {
            next.push(prefix.clone());
            for i in 1..j {
                let mut p = prefix.clone();
                p.push((i, j));
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|arcs| ArcGraph::new(n.max(1), arcs).unwrap())
        .collect()
}

/// Standard representations of set partitions, generated through restricted
/// growth strings and arcs between consecutive elements of each block.
fn enumerate_partitions(n: usize) -> Vec<ArcGraph> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    gen_rgs(&mut rgs, 1, 0, n, &mut out);
    out
}

fn gen_rgs(rgs: &mut Vec<usize>, pos: usize, max_used: usize, n: usize, out: &mut Vec<ArcGraph>) {
    if pos == n {
        let blocks = max_used + 1;
        let mut last_seen: Vec<Option<usize>> = vec![None; blocks];
        last_seen[0] = Some(1);
        let mut arcs = Vec::new();
        for (idx, &b) in rgs.iter().enumerate().skip(1) {
            let v = idx + 1;
            if let Some(prev) = last_seen[b] {
                arcs.push((prev, v));
            }
            last_seen[b] = Some(v);
        }
        out.push(ArcGraph::new(n, arcs).unwrap());
        return;
    }
    for b in 0..=max_used + 1 {
        rgs[pos] = b;
        gen_rgs(rgs, pos + 1, max_used.max(b), n, out);
    }
}

/// Perfect matchings by pairing the smallest unmatched vertex with each
/// larger unmatched vertex in turn; odd n yields none.
fn enumerate_matchings(n: usize) -> Vec<ArcGraph> {
    if !n.is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let free: Vec<usize> = (1..=n).collect();
    let mut arcs = Vec::new();
    pair_up(&free, &mut arcs, n, &mut out);
    out
}

fn pair_up(free: &[usize], arcs: &mut Vec<(usize, usize)>, n: usize, out: &mut Vec<ArcGraph>) {
    if free.is_empty() {
        out.push(ArcGraph::new(n, arcs.iter().copied()).unwrap());
        return;
    }
    let lo = free[0];
    for k in 1..free.len() {
        let hi = free[k];
        let mut rest: Vec<usize> = free[1..].to_vec();
        rest.remove(k - 1);
        arcs.push((lo, hi));
        pair_up(&rest, arcs, n, out);
        arcs.pop();
    }
}

/// `sum p^{cros2} q^{nest2}` over the class by direct enumeration.
pub fn class_distribution_brute(
    n: usize,
    class: GraphClass,
    o: Option<&[usize]>,
    c: Option<&[usize]>,
) -> BivarPoly {
    let mut dist = BivarPoly::zero();
    for g in enumerate_class(n, class, o, c) {
        let (cros, nest) = g.cros2_nest2();
        dist = &dist + &BivarPoly::monomial(cros as u32, nest as u32, BigInt::one());
    }
    dist
}

/// Closed form over the endpoint class (o, c): the product over distinct
/// left endpoints i of `[h_i over m_i]` with `m_i` the multiplicity of i in
/// `o` and `h_i = #{j in c : j > i} - #{j in o : j > i}` (multiset counts).
/// Requires multiplicity one throughout `c`, and throughout `o` too except
/// for the linked class. Infeasible pairs give the zero polynomial.
pub fn class_distribution_closed(
    class: GraphClass,
    o: &[usize],
    c: &[usize],
) -> Result<BivarPoly, ArcsError> {
    let mut o = o.to_vec();
    let mut c = c.to_vec();
    o.sort_unstable();
    c.sort_unstable();
    if c.windows(2).any(|w| w[0] == w[1]) {
        return Err(ArcsError::UnsupportedMultiplicity("right endpoints"));
    }
    if class != GraphClass::Linked && o.windows(2).any(|w| w[0] == w[1]) {
        return Err(ArcsError::UnsupportedMultiplicity("left endpoints"));
    }
    if o.len() != c.len() {
        return Ok(BivarPoly::zero());
    }
    let mut dist = BivarPoly::one();
    let mut idx = 0;
    while idx < o.len() {
        let i = o[idx];
        let mult = o[idx..].iter().take_while(|&&x| x == i).count();
        idx += mult;
        let h = c.iter().filter(|&&j| j > i).count() as i64
            - o.iter().filter(|&&j| j > i).count() as i64;
        if h < 0 {
            return Ok(BivarPoly::zero());
        }
        dist = &dist * &pq_gaussian(h as u32, mult as i64);
        if dist.is_zero() {
            break;
        }
    }
    Ok(dist)
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Serialize for ArcGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            arcs: self.arcs.iter().copied().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ArcGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        ArcGraph::new(repr.n, repr.arcs).map_err(serde::de::Error::custom)
    }
}
