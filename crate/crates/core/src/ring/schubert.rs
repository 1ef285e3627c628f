//! Partitions in a `k × (n−k)` box and the Schubert-basis multiplication law.
//!
//! Products `σ_λ · σ_μ` are computed by straightening `σ_μ` into Pieri steps:
//! `σ_{μ₁} · σ_{μ'} = σ_μ + Σ σ_ν` where `μ'` drops the first row of `μ` and
//! every other `ν` in the horizontal-strip expansion has `ν₁ > μ₁`. Solving
//! for `σ_μ` gives a recursion that terminates because the first row grows
//! inside the box. All intermediate products are memoized per ring.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{precondition, Result};

/// Weakly decreasing sequence of positive parts fitting inside a
/// `box_rows × box_cols` rectangle. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    box_rows: usize,
    box_cols: usize,
}

impl Partition {
    pub fn new(parts: &[usize], box_rows: usize, box_cols: usize) -> Result<Self> {
        let parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return precondition(format!("parts {parts:?} are not weakly decreasing"));
        }
        if parts.len() > box_rows || parts.first().is_some_and(|&p| p > box_cols) {
            return precondition(format!(
                "partition {parts:?} does not fit in a {box_rows}x{box_cols} box"
            ));
        }
        Ok(Self { parts, box_rows, box_cols })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>, box_rows: usize, box_cols: usize) -> Self {
        Self { parts, box_rows, box_cols }
    }

    pub fn empty(box_rows: usize, box_cols: usize) -> Self {
        Self { parts: Vec::new(), box_rows, box_cols }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn box_rows(&self) -> usize {
        self.box_rows
    }

    pub fn box_cols(&self) -> usize {
        self.box_cols
    }

    /// `|λ|`, the cohomological degree of `σ_λ`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Box complement `λ^c`, with `λ^c_i = cols − λ_{k+1−i}`.
    pub fn complement(&self) -> Partition {
        let parts = (0..self.box_rows)
            .map(|i| self.box_cols - self.part(self.box_rows - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Partition::from_parts_unchecked(parts, self.box_rows, self.box_cols)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `weight` inside the box, in reverse lexicographic order
/// (largest first row first).
pub fn partitions_in_box(weight: usize, rows: usize, cols: usize) -> Vec<Partition> {
    fn go(
        remaining: usize,
        rows_left: usize,
        max_part: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        if rows_left == 0 || remaining > rows_left * max_part {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            acc.push(p);
            go(remaining - p, rows_left - 1, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, rows, cols, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|parts| Partition::from_parts_unchecked(parts, rows, cols))
        .collect()
}

/// Raw Pieri expansion on part vectors: every `ν ⊇ λ` in the box with
/// `|ν| = |λ| + m` and `ν/λ` a horizontal strip.
fn pieri_parts(lambda: &[usize], m: usize, rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(
        row: usize,
        remaining: usize,
        lambda: &[usize],
        rows: usize,
        cols: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == rows {
            if remaining == 0 {
                let parts: Vec<usize> = acc.iter().copied().filter(|&p| p > 0).collect();
                out.push(parts);
            }
            return;
        }
        let current = lambda.get(row).copied().unwrap_or(0);
        let ceiling = if row == 0 { cols } else { lambda.get(row - 1).copied().unwrap_or(0) };
        let room = ceiling.saturating_sub(current).min(remaining);
        for add in (0..=room).rev() {
            acc.push(current + add);
            go(row + 1, remaining - add, lambda, rows, cols, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, lambda, rows, cols, &mut Vec::with_capacity(rows), &mut out);
    out
}

/// Multiply `σ_p` by the special class `σ_m` (Pieri rule).
///
/// The result is a formal sum with unit coefficients, empty when the box is
/// saturated.
pub fn pieri_multiply(p: &Partition, m: usize) -> Result<Vec<Partition>> {
    if m == 0 || m > p.box_cols {
        return precondition(format!(
            "Pieri degree {m} outside 1..={} for a {}x{} box",
            p.box_cols, p.box_rows, p.box_cols
        ));
    }
    Ok(pieri_parts(&p.parts, m, p.box_rows, p.box_cols)
        .into_iter()
        .map(|parts| Partition::from_parts_unchecked(parts, p.box_rows, p.box_cols))
        .collect())
}

type Sparse = Arc<Vec<(usize, i64)>>;

/// Schubert basis of `H*(G(k, n); Q)` with a memoized product table.
///
/// Global indices enumerate partitions degree by degree; `offsets[d]` is the
/// index of the first partition of weight `d`.
pub(crate) struct SchubertTable {
    pub(crate) rows: usize,
    pub(crate) cols: usize,
    pub(crate) by_degree: Vec<Vec<Partition>>,
    offsets: Vec<usize>,
    degree_of: Vec<usize>,
    index: HashMap<Vec<usize>, usize>,
    memo: RwLock<HashMap<(usize, usize), Sparse>>,
}

impl SchubertTable {
    pub(crate) fn new(rows: usize, cols: usize) -> Self {
        let by_degree: Vec<Vec<Partition>> = (0..=rows * cols)
            .map(|d| partitions_in_box(d, rows, cols))
            .collect();
        let mut offsets = Vec::with_capacity(by_degree.len());
        let mut degree_of = Vec::new();
        let mut index = HashMap::new();
        for (d, parts) in by_degree.iter().enumerate() {
            offsets.push(degree_of.len());
            for p in parts {
                index.insert(p.parts.clone(), degree_of.len());
                degree_of.push(d);
            }
        }
        Self { rows, cols, by_degree, offsets, degree_of, index, memo: RwLock::new(HashMap::new()) }
    }

    pub(crate) fn locate(&self, parts: &[usize]) -> Option<(usize, usize)> {
        let g = *self.index.get(parts)?;
        let d: usize = parts.iter().sum();
        Some((d, g - self.offsets[d]))
    }

    fn global(&self, degree: usize, idx: usize) -> usize {
        self.offsets[degree] + idx
    }

    fn parts_of(&self, global: usize) -> &[usize] {
        let d = self.degree_of[global];
        &self.by_degree[d][global - self.offsets[d]].parts
    }

    /// `σ_a · σ_b` for basis elements given as `(degree, index)` pairs,
    /// returned as `(index within degree, coefficient)` in degree `da + db`.
    pub(crate) fn multiply(&self, a: (usize, usize), b: (usize, usize)) -> Vec<(usize, i64)> {
        let degree = a.0 + b.0;
        if degree > self.rows * self.cols {
            return Vec::new();
        }
        let (ga, gb) = (self.global(a.0, a.1), self.global(b.0, b.1));
        // straighten the factor with fewer rows; fewer recursion levels
        let (l, m) = if self.parts_of(ga).len() >= self.parts_of(gb).len() { (ga, gb) } else { (gb, ga) };
        let offset = self.offsets[degree];
        self.product(l, m).iter().map(|&(g, c)| (g - offset, c)).collect()
    }

    fn product(&self, l: usize, m: usize) -> Sparse {
        if let Some(hit) = self.memo.read().expect("schubert memo poisoned").get(&(l, m)) {
            return hit.clone();
        }
        let mu = self.parts_of(m).to_vec();
        let result: Sparse = if mu.is_empty() {
            Arc::new(vec![(l, 1)])
        } else {
            let first = mu[0];
            let rest = &mu[1..];
            let rest_idx = self.index[rest];
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(t, c) in self.product(l, rest_idx).iter() {
                for nu in pieri_parts(self.parts_of(t), first, self.rows, self.cols) {
                    *acc.entry(self.index[&nu]).or_insert(0) += c;
                }
            }
            for nu in pieri_parts(rest, first, self.rows, self.cols) {
                if nu == mu {
                    continue;
                }
                let nu_idx = self.index[&nu];
                for &(t, c) in self.product(l, nu_idx).iter() {
                    *acc.entry(t).or_insert(0) -= c;
                }
            }
            Arc::new(acc.into_iter().filter(|&(_, c)| c != 0).collect())
        };
        self.memo
            .write()
            .expect("schubert memo poisoned")
            .insert((l, m), result.clone());
        result
    }
}
