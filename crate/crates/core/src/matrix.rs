//! Dense integer matrices and their Smith normal form.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Row-major dense matrix of exact integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Returns `None` unless `entries.len() == rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Option<Self> {
        (entries.len() == rows * cols).then_some(Self { rows, cols, entries })
    }

    /// Builds a matrix from explicit rows. `cols` is needed for the
    /// row-less case; every row must have exactly `cols` entries.
    pub fn from_rows<R, C>(cols: usize, rows: R) -> Option<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut entries = Vec::new();
        let mut n = 0;
        for row in rows {
            let before = entries.len();
            entries.extend(row.into_iter().map(Into::into));
            if entries.len() - before != cols {
                return None;
            }
            n += 1;
        }
        Some(Self { rows: n, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Matrix product, `None` on inner dimension mismatch.
    pub fn mul(&self, rhs: &Self) -> Option<Self> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] += a * rhs.get(k, j);
                }
            }
        }
        Some(out)
    }

    /// Entrywise map, used for sign twists.
    pub fn map(&self, f: impl Fn(usize, usize, &BigInt) -> BigInt) -> Self {
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, f(r, c, self.get(r, c)));
            }
        }
        out
    }

    pub fn smith_normal_form(&self) -> SmithForm {
        smith_normal_form(self)
    }
}

/// Nonzero diagonal of the Smith normal form, ascending along the divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Diagonalizes by unimodular row and column operations, always pivoting on
/// the smallest nonzero entry (in absolute value) of the remaining block.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut a = Work {
        rows: m.rows,
        cols: m.cols,
        e: m.entries.clone(),
    };
    let mut factors = Vec::new();
    let mut t = 0;
    while t < a.rows.min(a.cols) {
        let Some((pr, pc)) = a.min_pivot(t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            if let Some((r, c)) = a.clear_cross(t) {
                // a smaller remainder appeared; pivot on it and start over
                a.swap_rows(t, r);
                a.swap_cols(t, c);
                continue;
            }
            // pivot must divide the rest of the block
            match a.non_divisible_row(t) {
                Some(r) => a.add_row(r, t),
                None => break,
            }
        }
        factors.push(a.at(t, t).abs());
        t += 1;
    }
    SmithForm {
        invariant_factors: factors,
    }
}

struct Work {
    rows: usize,
    cols: usize,
    e: Vec<BigInt>,
}

impl Work {
    fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.e[r * self.cols + c]
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let v = self.at(r, c);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(br, bc)| v.abs() < self.at(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.e.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.e.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += row[src]
    fn add_row(&mut self, src: usize, dst: usize) {
        for c in 0..self.cols {
            let v = self.at(src, c).clone();
            self.e[dst * self.cols + c] += v;
        }
    }

    /// Eliminates column `t` below and row `t` right of the pivot using
    /// quotients. Returns the position of a nonzero remainder if one is left.
    fn clear_cross(&mut self, t: usize) -> Option<(usize, usize)> {
        let pivot = self.at(t, t).clone();
        for r in t + 1..self.rows {
            let q = self.at(r, t) / &pivot;
            if !q.is_zero() {
                for c in t..self.cols {
                    let v = self.at(t, c) * &q;
                    self.e[r * self.cols + c] -= v;
                }
            }
        }
        for c in t + 1..self.cols {
            let q = self.at(t, c) / &pivot;
            if !q.is_zero() {
                for r in t..self.rows {
                    let v = self.at(r, t) * &q;
                    self.e[r * self.cols + c] -= v;
                }
            }
        }
        let below = (t + 1..self.rows).find(|&r| !self.at(r, t).is_zero());
        if let Some(r) = below {
            return Some((r, t));
        }
        (t + 1..self.cols)
            .find(|&c| !self.at(t, c).is_zero())
            .map(|c| (t, c))
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let pivot = self.at(t, t);
        (t + 1..self.rows).find(|&r| {
            (t + 1..self.cols).any(|c| !(self.at(r, c) % pivot).is_zero())
        })
    }
}
