//! Smith normal form over the integers.
//!
//! [`smith_normal_form`] first eliminates `±1` pivots sparsely (boundary
//! matrices are mostly units) and runs the dense algorithm on what remains;
//! [`smith_normal_form_with_transforms`] is fully dense and also returns the
//! unimodular factors. Both try `i64` arithmetic first and redo the work with
//! big integers on overflow.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::int::{ExactInt, Overflow};
use super::linalg::IntColumn;

/// An integer matrix stored as sparse columns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntMatrix {
    pub n_rows: usize,
    pub columns: Vec<Vec<(u32, BigInt)>>,
}

impl IntMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self { n_rows, columns: vec![Vec::new(); n_cols] }
    }

    pub fn from_int_columns(n_rows: usize, cols: &[IntColumn]) -> Self {
        let columns = cols
            .iter()
            .map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect())
            .collect();
        Self { n_rows, columns }
    }

    pub fn from_dense_rows(rows: &[Vec<i64>]) -> Self {
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut columns = vec![Vec::new(); n_cols];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged matrix");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    columns[c].push((r as u32, BigInt::from(v)));
                }
            }
        }
        Self { n_rows: rows.len(), columns }
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.n_cols()]; self.n_rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r as usize][c] = v.clone();
            }
        }
        out
    }

    /// Appends the columns of `other` (same row count).
    pub fn hconcat(&self, other: &Self) -> Self {
        assert_eq!(self.n_rows, other.n_rows);
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        Self { n_rows: self.n_rows, columns }
    }

    /// Plain-text triplets: a `rows cols` header, then one `row col value`
    /// line per nonzero entry in column-major order.
    pub fn to_triplets(&self) -> String {
        let mut out = format!("{} {}\n", self.n_rows, self.n_cols());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                writeln!(out, "{r} {c} {v}").unwrap();
            }
        }
        out
    }

    pub fn from_triplets(text: &str) -> Option<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let mut header = lines.next()?.split_whitespace();
        let n_rows: usize = header.next()?.parse().ok()?;
        let n_cols: usize = header.next()?.parse().ok()?;
        let mut m = Self::zeros(n_rows, n_cols);
        for line in lines {
            let mut t = line.split_whitespace();
            let r: u32 = t.next()?.parse().ok()?;
            let c: usize = t.next()?.parse().ok()?;
            let v: BigInt = t.next()?.parse().ok()?;
            if r as usize >= n_rows || c >= n_cols {
                return None;
            }
            if !Zero::is_zero(&v) {
                m.columns[c].push((r, v));
            }
        }
        for col in &mut m.columns {
            col.sort_by_key(|e| e.0);
        }
        Some(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Positive elementary divisors `d₁ | d₂ | … | d_r`.
    pub divisors: Vec<BigInt>,
    pub rank: usize,
    /// `(left, right)` with `left · input · right` diagonal, as dense rows.
    pub transforms: Option<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)>,
}

impl SmithForm {
    /// Divisors greater than one, i.e. the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.divisors.iter().filter(|d| !d.is_one())
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let divisors = match to_small(m) {
        Some(cols) => sparse_divisors::<i64>(m.n_rows, cols).ok(),
        None => None,
    }
    .unwrap_or_else(|| {
        sparse_divisors::<BigInt>(m.n_rows, m.columns.clone()).expect("big integers cannot overflow")
    });
    SmithForm { rank: divisors.len(), divisors, transforms: None }
}

pub fn smith_normal_form_with_transforms(m: &IntMatrix) -> SmithForm {
    let dense = m.to_dense_rows();
    let small: Option<Vec<Vec<i64>>> = dense
        .iter()
        .map(|row| row.iter().map(ToPrimitive::to_i64).collect())
        .collect();
    let run_big = || {
        let mut d = Dense::new(dense.clone(), m.n_cols(), true);
        d.reduce().expect("big integers cannot overflow");
        d.into_form()
    };
    match small {
        Some(rows) => {
            let mut d = Dense::new(rows, m.n_cols(), true);
            match d.reduce() {
                Ok(()) => d.into_form(),
                Err(Overflow) => run_big(),
            }
        }
        None => run_big(),
    }
}

fn to_small(m: &IntMatrix) -> Option<Vec<Vec<(u32, i64)>>> {
    m.columns
        .iter()
        .map(|c| c.iter().map(|(r, v)| v.to_i64().map(|v| (*r, v))).collect())
        .collect()
}

struct Dense<T> {
    a: Vec<Vec<T>>,
    rows: usize,
    cols: usize,
    left: Option<Vec<Vec<T>>>,
    right: Option<Vec<Vec<T>>>,
}

fn identity<T: ExactInt>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| (0..n).map(|j| T::from_i64((i == j) as i64)).collect())
        .collect()
}

/// `row[dst] -= q · row[src]`.
fn row_axpy<T: ExactInt>(m: &mut [Vec<T>], dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
    for k in 0..m[dst].len() {
        if !m[src][k].is_zero() {
            m[dst][k] = m[dst][k].sub(&q.mul(&m[src][k])?)?;
        }
    }
    Ok(())
}

/// `col[dst] -= q · col[src]`.
fn col_axpy<T: ExactInt>(m: &mut [Vec<T>], dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            row[dst] = row[dst].sub(&q.mul(&row[src])?)?;
        }
    }
    Ok(())
}

fn negate_row<T: ExactInt>(m: &mut [Vec<T>], i: usize) -> Result<(), Overflow> {
    for v in m[i].iter_mut() {
        *v = v.neg()?;
    }
    Ok(())
}

fn swap_cols<T>(m: &mut [Vec<T>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

impl<T: ExactInt> Dense<T> {
    fn new(a: Vec<Vec<T>>, cols: usize, transforms: bool) -> Self {
        let rows = a.len();
        Self {
            left: transforms.then(|| identity(rows)),
            right: transforms.then(|| identity(cols)),
            a,
            rows,
            cols,
        }
    }

    fn row_op(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        row_axpy(&mut self.a, dst, src, q)?;
        if let Some(l) = &mut self.left {
            row_axpy(l, dst, src, q)?;
        }
        Ok(())
    }

    fn col_op(&mut self, dst: usize, src: usize, q: &T) -> Result<(), Overflow> {
        col_axpy(&mut self.a, dst, src, q)?;
        if let Some(r) = &mut self.right {
            col_axpy(r, dst, src, q)?;
        }
        Ok(())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(l) = &mut self.left {
            l.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        swap_cols(&mut self.a, i, j);
        if let Some(r) = &mut self.right {
            swap_cols(r, i, j);
        }
    }

    fn non_divisible_row(&self, t: usize, p: &T) -> Result<Option<usize>, Overflow> {
        for i in t + 1..self.rows {
            for j in t + 1..self.cols {
                let v = &self.a[i][j];
                if !v.is_zero() && !v.sub(&v.div_floor(p).mul(p)?)?.is_zero() {
                    return Ok(Some(i));
                }
            }
        }
        Ok(None)
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = &self.a[i][j];
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs_lt(&self.a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn reduce(&mut self) -> Result<(), Overflow> {
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((i, j)) = self.smallest_in(t) else { break };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let p = self.a[t][t].clone();
                let mut clean = true;
                for i in t + 1..self.rows {
                    if !self.a[i][t].is_zero() {
                        let q = self.a[i][t].div_floor(&p);
                        self.row_op(i, t, &q)?;
                        clean &= self.a[i][t].is_zero();
                    }
                }
                for j in t + 1..self.cols {
                    if !self.a[t][j].is_zero() {
                        let q = self.a[t][j].div_floor(&p);
                        self.col_op(j, t, &q)?;
                        clean &= self.a[t][j].is_zero();
                    }
                }
                if !clean {
                    // a remainder smaller than the pivot survived; make it the pivot
                    let mut best = (t, t);
                    for i in t + 1..self.rows {
                        if !self.a[i][t].is_zero() && self.a[i][t].abs_lt(&self.a[best.0][best.1]) {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..self.cols {
                        if !self.a[t][j].is_zero() && self.a[t][j].abs_lt(&self.a[best.0][best.1]) {
                            best = (t, j);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                // enforce divisibility of the remaining block by the pivot
                match self.non_divisible_row(t, &p)? {
                    Some(i) => self.row_op(t, i, &T::from_i64(-1))?,
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                negate_row(&mut self.a, t)?;
                if let Some(l) = &mut self.left {
                    negate_row(l, t)?;
                }
            }
            t += 1;
        }
        Ok(())
    }

    fn into_form(self) -> SmithForm {
        let divisors: Vec<BigInt> = (0..self.rows.min(self.cols))
            .map(|t| self.a[t][t].to_bigint())
            .take_while(|d| !Zero::is_zero(d))
            .collect();
        let big = |m: Vec<Vec<T>>| -> Vec<Vec<BigInt>> {
            m.into_iter().map(|r| r.into_iter().map(|v| v.to_bigint()).collect()).collect()
        };
        SmithForm {
            rank: divisors.len(),
            divisors,
            transforms: self.left.zip(self.right).map(|(l, r)| (big(l), big(r))),
        }
    }
}

fn is_unit<T: ExactInt>(v: &T) -> bool {
    super::int::is_unit(v)
}

fn entry<T: ExactInt>(col: &[(u32, T)], row: u32) -> Option<&T> {
    col.binary_search_by_key(&row, |e| e.0).ok().map(|k| &col[k].1)
}

/// `x − q·y` for sorted sparse vectors.
fn sub_scaled<T: ExactInt>(x: &[(u32, T)], q: &T, y: &[(u32, T)]) -> Result<Vec<(u32, T)>, Overflow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, q.mul(&y[j].1)?.neg()?));
            j += 1;
        } else {
            let v = x[i].1.sub(&q.mul(&y[j].1)?)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Divisors via sparse unit-pivot elimination followed by a dense remainder.
///
/// Unit pivot columns are kept clean (zero at every other pivot row), so the
/// matrix is unimodularly equivalent to `±I ⊕ R` with `R` the remaining
/// columns on the non-pivot rows.
fn sparse_divisors<T: ExactInt>(n_rows: usize, cols: Vec<Vec<(u32, T)>>) -> Result<Vec<BigInt>, Overflow> {
    let mut pivots: Vec<(u32, Vec<(u32, T)>)> = Vec::new();
    let mut pivot_of_row: HashMap<u32, usize> = HashMap::new();
    let mut pending = cols;
    loop {
        let mut added = false;
        let mut rest = Vec::new();
        for mut c in pending {
            let hits: Vec<(u32, T)> = c
                .iter()
                .filter(|(r, _)| pivot_of_row.contains_key(r))
                .cloned()
                .collect();
            for (r, v) in hits {
                let (_, p) = &pivots[pivot_of_row[&r]];
                let u = entry(p, r).expect("pivot entry").clone();
                // u = ±1, so v / u = v · u
                c = sub_scaled(&c, &v.mul(&u)?, p)?;
            }
            if c.is_empty() {
                continue;
            }
            let unit = c.iter().filter(|(_, v)| is_unit(v)).min_by_key(|(r, _)| *r).map(|e| e.0);
            match unit {
                Some(r) => {
                    let u = entry(&c, r).unwrap().clone();
                    for (_, p) in pivots.iter_mut() {
                        if let Some(x) = entry(p, r).cloned() {
                            *p = sub_scaled(p, &x.mul(&u)?, &c)?;
                        }
                    }
                    pivot_of_row.insert(r, pivots.len());
                    pivots.push((r, c));
                    added = true;
                }
                None => rest.push(c),
            }
        }
        pending = rest;
        if !added {
            break;
        }
    }
    let mut row_index: HashMap<u32, usize> = HashMap::new();
    for c in &pending {
        for (r, _) in c {
            debug_assert!(!pivot_of_row.contains_key(r));
            let k = row_index.len();
            row_index.entry(*r).or_insert(k);
        }
    }
    debug_assert!(row_index.len() <= n_rows);
    let mut dense = vec![vec![T::from_i64(0); pending.len()]; row_index.len()];
    for (j, c) in pending.iter().enumerate() {
        for (r, v) in c {
            dense[row_index[r]][j] = v.clone();
        }
    }
    let mut d = Dense::new(dense, pending.len(), false);
    d.reduce()?;
    let mut divisors = vec![BigInt::one(); pivots.len()];
    divisors.extend(d.into_form().divisors);
    Ok(divisors)
}
