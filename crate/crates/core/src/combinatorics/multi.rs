use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// An m-tuple of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MComposition {
    entries: Vec<usize>,
}

impl MComposition {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Validation("a composition needs m >= 1 entries".into()));
        }
        Ok(MComposition { entries })
    }

    pub fn zero(m: usize) -> Self {
        MComposition { entries: vec![0; m] }
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn get(&self, r: usize) -> usize {
        self.entries[r]
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `[ω_r] = Σ_{i ≤ r} ω_i`.
    pub fn brackets(&self) -> Vec<usize> {
        self.entries
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    /// Block of each position `0..total`: position `i` (0-based) lies in
    /// block `r` iff `[ω_{r-1}] <= i < [ω_r]`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total());
        for (r, &w) in self.entries.iter().enumerate() {
            out.extend(std::iter::repeat(r).take(w));
        }
        out
    }

    /// Positions (0-based) belonging to block `r`.
    pub fn block(&self, r: usize) -> std::ops::Range<usize> {
        let start: usize = self.entries[..r].iter().sum();
        start..start + self.entries[r]
    }

    /// All m-compositions of `n`, lexicographically.
    pub fn all(m: usize, n: usize) -> Vec<MComposition> {
        fn go(m: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<MComposition>) {
            if cur.len() + 1 == m {
                cur.push(rem);
                out.push(MComposition { entries: cur.clone() });
                cur.pop();
                return;
            }
            for x in 0..=rem {
                cur.push(x);
                go(m, rem - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if m > 0 {
            go(m, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// `Λ|m,n|`: m-compositions of `n − 2l` for every `l`.
    pub fn all_levels(m: usize, n: usize) -> Vec<MComposition> {
        let mut out = Vec::new();
        let mut k = n as isize;
        while k >= 0 {
            out.extend(Self::all(m, k as usize));
            k -= 2;
        }
        out
    }

    /// Entries reordered for display: entry `i` of the result is `ω_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Vec<usize> {
        perm.iter().map(|&i| self.entries[i]).collect()
    }
}

impl fmt::Display for MComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for MComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Validation(format!("bad composition entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MComposition::new(entries)
    }
}

/// A box of an m-partition: component, 0-based row and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellBox {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

/// An m-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Validation("an m-partition needs m >= 1 components".into()));
        }
        Ok(MultiPartition { components })
    }

    pub fn empty(m: usize) -> Self {
        MultiPartition {
            components: vec![Partition::empty(); m],
        }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(parts: &[&[usize]]) -> Result<Self> {
        Self::new(
            parts
                .iter()
                .map(|p| Partition::new(p.to_vec()))
                .collect::<Result<_>>()?,
        )
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, r: usize) -> &Partition {
        &self.components[r]
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// `|λ| = (|λ^0|, …, |λ^{m−1}|)`.
    pub fn shape(&self) -> MComposition {
        MComposition {
            entries: self.components.iter().map(Partition::size).collect(),
        }
    }

    /// All m-partitions of exactly `n` boxes.
    pub fn all(m: usize, n: usize) -> Vec<MultiPartition> {
        let mut out = Vec::new();
        for c in MComposition::all(m, n) {
            out.extend(Self::with_shape(&c));
        }
        out
    }

    /// All m-partitions `λ` with `|λ| = ω`.
    pub fn with_shape(omega: &MComposition) -> Vec<MultiPartition> {
        let mut out = vec![Vec::new()];
        for &k in omega.entries() {
            let ps = Partition::all(k);
            out = out
                .into_iter()
                .flat_map(|pre: Vec<Partition>| {
                    ps.iter().map(move |p| {
                        let mut v = pre.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|components| MultiPartition { components }).collect()
    }

    /// `Λ(m,n)`: m-partitions of `n − 2l`, `0 <= l <= n/2`, largest first.
    pub fn lambda(m: usize, n: usize) -> Vec<MultiPartition> {
        let mut out = Vec::new();
        let mut k = n as isize;
        while k >= 0 {
            out.extend(Self::all(m, k as usize));
            k -= 2;
        }
        out
    }

    /// Dominance `self ⊴ other` for m-partitions of the same size.
    pub fn dominated_by(&self, other: &MultiPartition) -> Result<bool> {
        if self.m() != other.m() {
            return Err(Error::Validation("m-partitions have different m".into()));
        }
        let (mut base_a, mut base_b) = (0usize, 0usize);
        for (a, b) in self.components.iter().zip(&other.components) {
            let k = a.len().max(b.len()).max(1);
            let (mut sa, mut sb) = (base_a, base_b);
            for i in 0..k {
                sa += a.part(i);
                sb += b.part(i);
                if sa > sb {
                    return Ok(false);
                }
            }
            base_a += a.size();
            base_b += b.size();
        }
        Ok(true)
    }

    /// The extension of dominance across sizes: more boxes dominates,
    /// equal sizes fall back to `⊴`.
    pub fn extended_dominated_by(&self, other: &MultiPartition) -> Result<bool> {
        if self.m() != other.m() {
            return Err(Error::Validation("m-partitions have different m".into()));
        }
        match self.size().cmp(&other.size()) {
            std::cmp::Ordering::Less => Ok(true),
            std::cmp::Ordering::Greater => Ok(false),
            std::cmp::Ordering::Equal => self.dominated_by(other),
        }
    }

    /// Removable boxes of sign `ξ^r`, i.e. removable boxes of component `r`.
    pub fn removable(&self, r: usize) -> Vec<CellBox> {
        self.components[r]
            .removable()
            .into_iter()
            .map(|(row, col)| CellBox { component: r, row, col })
            .collect()
    }

    /// Addable boxes of sign `ξ^r`.
    pub fn addable(&self, r: usize) -> Vec<CellBox> {
        self.components[r]
            .addable()
            .into_iter()
            .map(|(row, col)| CellBox { component: r, row, col })
            .collect()
    }

    pub fn add_box(&self, b: CellBox) -> Result<MultiPartition> {
        let mut c = self.components.clone();
        c[b.component] = c[b.component].add_box(b.row)?;
        Ok(MultiPartition { components: c })
    }

    pub fn remove_box(&self, b: CellBox) -> Result<MultiPartition> {
        let mut c = self.components.clone();
        c[b.component] = c[b.component].remove_box(b.row)?;
        Ok(MultiPartition { components: c })
    }

    /// Componentwise containment.
    pub fn is_contained_in(&self, other: &MultiPartition) -> bool {
        self.m() == other.m()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.is_contained_in(b))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;
    /// Components separated by `|`, e.g. `(2,1)|()|(1)` or `2,1||1`.
    fn from_str(s: &str) -> Result<Self> {
        let comps = s.split('|').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        MultiPartition::new(comps)
    }
}
