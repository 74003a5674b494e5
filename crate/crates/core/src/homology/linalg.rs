//! Sparse column echelon forms over `F_p` and over `Q`.
//!
//! Columns are sorted `(row, value)` lists. A column is reduced against stored
//! pivots keyed by their largest row index until it vanishes or acquires a new
//! pivot. Over `Q` the reduction is fraction-free: `c ← b·c − a·v` followed by
//! division by the content, so all coefficients stay integral.

use std::collections::HashMap;
use std::fmt::Debug;
use std::marker::PhantomData;

use num_bigint::BigInt;

use super::field::FieldSpec;
use super::int::{ExactInt, Overflow};

pub type SparseVec<C> = Vec<(u32, C)>;

/// Integer column with small entries, the common input format.
pub type IntColumn = Vec<(u32, i64)>;

pub trait Scalars: Sync {
    type C: Clone + Debug + Send + Sync;

    fn from_i64(&self, v: i64) -> Result<Self::C, Overflow>;
    fn is_zero(&self, c: &Self::C) -> bool;
    /// Eliminates the entry of `target` at the pivot row of `pivot` (its last
    /// entry); `target_track` and `pivot_track` undergo the same operation.
    fn eliminate(
        &self,
        target: &mut SparseVec<Self::C>,
        target_track: Option<&mut SparseVec<Self::C>>,
        pivot: &SparseVec<Self::C>,
        pivot_track: Option<&SparseVec<Self::C>>,
    ) -> Result<(), Overflow>;
    /// Representative integer of a coefficient (symmetric residue over `F_p`).
    fn to_bigint(&self, c: &Self::C) -> BigInt;
}

/// `F_p` with residues in `0..p`, `p < 2^61`.
#[derive(Clone, Copy, Debug)]
pub struct ModP {
    p: u64,
}

impl ModP {
    pub fn new(p: u64) -> Self {
        Self { p }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: u64) -> u64 {
        let (mut e, mut base, mut r) = (self.p - 2, a, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    /// `x - f·y` for sorted sparse vectors.
    fn sub_scaled(&self, x: &[(u32, u64)], f: u64, y: &[(u32, u64)]) -> Vec<(u32, u64)> {
        let p = self.p;
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
            let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
            if take_x {
                out.push(x[i]);
                i += 1;
            } else if take_y {
                let v = self.mul(f, y[j].1);
                if v != 0 {
                    out.push((y[j].0, p - v));
                }
                j += 1;
            } else {
                let v = (x[i].1 + p - self.mul(f, y[j].1)) % p;
                if v != 0 {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }
}

impl Scalars for ModP {
    type C = u64;

    fn from_i64(&self, v: i64) -> Result<u64, Overflow> {
        Ok(v.rem_euclid(self.p as i64) as u64)
    }

    fn is_zero(&self, c: &u64) -> bool {
        *c == 0
    }

    fn eliminate(
        &self,
        target: &mut SparseVec<u64>,
        target_track: Option<&mut SparseVec<u64>>,
        pivot: &SparseVec<u64>,
        pivot_track: Option<&SparseVec<u64>>,
    ) -> Result<(), Overflow> {
        let (_, pv) = *pivot.last().expect("pivot column is nonzero");
        let (_, tv) = *target.last().expect("target column is nonzero");
        let f = self.mul(tv, self.inv(pv));
        *target = self.sub_scaled(target, f, pivot);
        if let (Some(tt), Some(pt)) = (target_track, pivot_track) {
            *tt = self.sub_scaled(tt, f, pt);
        }
        Ok(())
    }

    fn to_bigint(&self, c: &u64) -> BigInt {
        if *c > self.p / 2 {
            BigInt::from(*c) - BigInt::from(self.p)
        } else {
            BigInt::from(*c)
        }
    }
}

/// `Q` through primitive integer vectors.
#[derive(Clone, Copy, Debug, Default)]
pub struct FractionFree<I>(PhantomData<I>);

impl<I: ExactInt> FractionFree<I> {
    pub fn new() -> Self {
        Self(PhantomData)
    }

    /// `a·x − b·y` for sorted sparse vectors.
    fn combine(a: &I, x: &[(u32, I)], b: &I, y: &[(u32, I)]) -> Result<Vec<(u32, I)>, Overflow> {
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
            let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
            if take_x {
                out.push((x[i].0, a.mul(&x[i].1)?));
                i += 1;
            } else if take_y {
                out.push((y[j].0, b.mul(&y[j].1)?.neg()?));
                j += 1;
            } else {
                let v = a.mul(&x[i].1)?.sub(&b.mul(&y[j].1)?)?;
                if !v.is_zero() {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(out)
    }
}

impl<I: ExactInt> Scalars for FractionFree<I> {
    type C = I;

    fn from_i64(&self, v: i64) -> Result<I, Overflow> {
        Ok(I::from_i64(v))
    }

    fn is_zero(&self, c: &I) -> bool {
        c.is_zero()
    }

    fn eliminate(
        &self,
        target: &mut SparseVec<I>,
        target_track: Option<&mut SparseVec<I>>,
        pivot: &SparseVec<I>,
        pivot_track: Option<&SparseVec<I>>,
    ) -> Result<(), Overflow> {
        let pv = pivot.last().expect("pivot column is nonzero").1.clone();
        let tv = target.last().expect("target column is nonzero").1.clone();
        let g = pv.gcd(&tv);
        let (a, b) = (pv.div_exact(&g), tv.div_exact(&g));
        *target = Self::combine(&a, target, &b, pivot)?;
        let mut content = target.iter().fold(I::from_i64(0), |g, (_, v)| g.gcd(v));
        match (target_track, pivot_track) {
            (Some(tt), Some(pt)) => {
                *tt = Self::combine(&a, tt, &b, pt)?;
                content = tt.iter().fold(content, |g, (_, v)| g.gcd(v));
                divide(tt, &content);
            }
            _ => {}
        }
        divide(target, &content);
        Ok(())
    }

    fn to_bigint(&self, c: &I) -> BigInt {
        c.to_bigint()
    }
}

fn divide<I: ExactInt>(v: &mut [(u32, I)], content: &I) {
    if content.is_zero() || super::int::is_unit(content) {
        return;
    }
    for (_, x) in v.iter_mut() {
        *x = x.div_exact(content);
    }
}

/// Result of inserting a column into an [`Echelon`].
pub enum Insert<C> {
    /// The column added a new pivot.
    Independent,
    /// The column reduced to zero; carries the tracked combination that
    /// produced zero.
    Dependent(SparseVec<C>),
}

/// Incremental column echelon form.
pub struct Echelon<'a, S: Scalars> {
    s: &'a S,
    pivots: HashMap<u32, (SparseVec<S::C>, SparseVec<S::C>)>,
}

impl<'a, S: Scalars> Echelon<'a, S> {
    pub fn new(s: &'a S) -> Self {
        Self { s, pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `col` (tracked by `track`) and stores it if independent.
    pub fn insert(
        &mut self,
        mut col: SparseVec<S::C>,
        mut track: SparseVec<S::C>,
    ) -> Result<Insert<S::C>, Overflow> {
        col.retain(|(_, v)| !self.s.is_zero(v));
        while let Some(&(low, _)) = col.last() {
            match self.pivots.get(&low) {
                Some((pcol, ptrack)) => self.s.eliminate(&mut col, Some(&mut track), pcol, Some(ptrack))?,
                None => {
                    self.pivots.insert(low, (col, track));
                    return Ok(Insert::Independent);
                }
            }
        }
        Ok(Insert::Dependent(track))
    }

    /// Like [`insert`](Self::insert) without combination tracking.
    pub fn insert_untracked(&mut self, mut col: SparseVec<S::C>) -> Result<bool, Overflow> {
        col.retain(|(_, v)| !self.s.is_zero(v));
        while let Some(&(low, _)) = col.last() {
            match self.pivots.get(&low) {
                Some((pcol, _)) => self.s.eliminate(&mut col, None, pcol, None)?,
                None => {
                    self.pivots.insert(low, (col, Vec::new()));
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

pub fn lift<S: Scalars>(s: &S, col: &[(u32, i64)]) -> Result<SparseVec<S::C>, Overflow> {
    col.iter().map(|&(r, v)| Ok((r, s.from_i64(v)?))).collect()
}

pub fn rank_with<S: Scalars>(s: &S, cols: &[IntColumn]) -> Result<usize, Overflow> {
    let mut e = Echelon::new(s);
    for c in cols {
        e.insert_untracked(lift(s, c)?)?;
    }
    Ok(e.rank())
}

/// Kernel basis of the column map: each vector lists `(column index, coefficient)`.
pub fn kernel_with<S: Scalars>(s: &S, cols: &[IntColumn]) -> Result<Vec<SparseVec<S::C>>, Overflow> {
    let mut e = Echelon::new(s);
    let mut out = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if let Insert::Dependent(track) = e.insert(lift(s, c)?, vec![(j as u32, s.from_i64(1)?)])? {
            out.push(track);
        }
    }
    Ok(out)
}

/// A computation that can run over any coefficient field.
pub trait FieldTask {
    type Output;
    fn run<S: Scalars>(&self, s: &S) -> Result<Self::Output, Overflow>;
}

/// Runs `task` over `field`; over `Q` it retries with big integers on overflow.
pub fn dispatch<T: FieldTask>(field: FieldSpec, task: &T) -> T::Output {
    match field {
        FieldSpec::PrimeField(p) => task.run(&ModP::new(p)).expect("modular arithmetic cannot overflow"),
        FieldSpec::Rationals => task
            .run(&FractionFree::<i64>::new())
            .or_else(|_| task.run(&FractionFree::<BigInt>::new()))
            .expect("big integers cannot overflow"),
    }
}

struct Rank<'a>(&'a [IntColumn]);

impl FieldTask for Rank<'_> {
    type Output = usize;
    fn run<S: Scalars>(&self, s: &S) -> Result<usize, Overflow> {
        rank_with(s, self.0)
    }
}

pub fn rank(field: FieldSpec, cols: &[IntColumn]) -> usize {
    dispatch(field, &Rank(cols))
}
