//! Bigraded Betti numbers of `K[Δ]` through Hochster's formula
//! `β_{i,j} = Σ_{|S| = j} dim H̃_{j-1-i}(Δ|_S)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{Face, SimplicialComplex, VertexSet};
use crate::error::Result;
use crate::homology::FieldSpec;

use super::subsets::SubsetTable;

/// Contribution of one squarefree multidegree to `β_{i,|S|}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultidegreeEntry {
    pub i: usize,
    pub support: Face,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedBettiTable {
    pub field: FieldSpec,
    pub n_vertices: usize,
    /// Nonzero `β_{i,j}` for `i ≥ 1`.
    pub entries: BTreeMap<(usize, usize), u64>,
    /// Per-multidegree contributions, sorted by `(i, |S|, S)`, when requested.
    pub multigraded: Option<Vec<MultidegreeEntry>>,
}

impl BigradedBettiTable {
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// True iff the Stanley–Reisner ideal is zero.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn polynomial(&self) -> BettiPolynomial {
        BettiPolynomial { coefficients: self.entries.clone() }
    }

    /// `max (j − i)` over nonzero entries, which equals the regularity
    /// `max {d + 1 : H̃_d(Δ|_S) ≠ 0}`; `0` for an empty table.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }
}

/// `f_RH = Σ β_{i,j} tⁱ xʲ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiPolynomial {
    pub coefficients: BTreeMap<(usize, usize), u64>,
}

impl BettiPolynomial {
    /// Parses the notation produced by `Display`, e.g.
    /// `(x^2+15x^3)t + 35x^4t^2`.
    pub fn parse(text: &str) -> Option<Self> {
        let mut coefficients = BTreeMap::new();
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "0" {
            return Some(Self { coefficients });
        }
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (inner, after) = if let Some(r) = rest.strip_prefix('(') {
                let close = r.find(')')?;
                (&r[..close], &r[close + 1..])
            } else {
                let t = rest.find('t')?;
                (&rest[..t], &rest[t..])
            };
            let after = after.strip_prefix('t')?;
            let (i, after) = parse_power(after);
            for term in inner.split('+') {
                let x = term.find('x')?;
                let c: u64 = if x == 0 { 1 } else { term[..x].parse().ok()? };
                let (j, tail) = parse_power(&term[x + 1..]);
                if !tail.is_empty() {
                    return None;
                }
                *coefficients.entry((i, j)).or_insert(0) += c;
            }
            rest = match after.strip_prefix('+') {
                Some(r) => r,
                None if after.is_empty() => after,
                None => return None,
            };
        }
        Some(Self { coefficients })
    }
}

fn parse_power(s: &str) -> (usize, &str) {
    match s.strip_prefix('^') {
        Some(r) => {
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            (r[..end].parse().unwrap_or(0), &r[end..])
        }
        None => (1, s),
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for BettiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut by_t: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
        for (&(i, j), &c) in &self.coefficients {
            by_t.entry(i).or_default().push((j, c));
        }
        let groups: Vec<String> = by_t
            .into_iter()
            .map(|(i, terms)| {
                let inner: Vec<String> = terms
                    .iter()
                    .map(|&(j, c)| {
                        let x = power("x", j);
                        match (c, x.is_empty()) {
                            (c, true) => c.to_string(),
                            (1, false) => x,
                            (c, false) => format!("{c}{x}"),
                        }
                    })
                    .collect();
                let inner = if inner.len() > 1 { format!("({})", inner.join("+")) } else { inner.join("") };
                format!("{inner}{}", power("t", i))
            })
            .collect();
        write!(f, "{}", groups.join(" + "))
    }
}

fn table_from(complex: &SimplicialComplex, field: FieldSpec, multigraded: bool) -> Result<BigradedBettiTable> {
    let table = SubsetTable::build(complex, field)?;
    let mut entries = BTreeMap::new();
    let mut multi = Vec::new();
    for mask in table.masks() {
        let j = mask.count_ones() as usize;
        for (k, &dim) in table.dims(mask).iter().enumerate() {
            // k indexes degree d = k - 1, contributing to i = j - 1 - d = j - k
            if dim == 0 || k >= j {
                continue;
            }
            let i = j - k;
            *entries.entry((i, j)).or_insert(0) += dim as u64;
            if multigraded {
                let support = Face::new(VertexSet::from_mask(mask).iter());
                multi.push(MultidegreeEntry { i, support, dim: dim as u64 });
            }
        }
    }
    multi.sort_by(|a, b| (a.i, a.support.len(), &a.support).cmp(&(b.i, b.support.len(), &b.support)));
    Ok(BigradedBettiTable {
        field,
        n_vertices: complex.n_vertices(),
        entries,
        multigraded: multigraded.then_some(multi),
    })
}

pub fn hochster_betti(complex: &SimplicialComplex, field: FieldSpec) -> Result<BigradedBettiTable> {
    table_from(complex, field, false)
}

/// Like [`hochster_betti`], also listing each multidegree's contribution.
pub fn hochster_betti_multigraded(complex: &SimplicialComplex, field: FieldSpec) -> Result<BigradedBettiTable> {
    table_from(complex, field, true)
}

pub fn regularity(complex: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    Ok(SubsetTable::build(complex, field)?.regularity())
}
