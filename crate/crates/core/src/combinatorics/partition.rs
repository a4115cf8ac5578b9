use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Validation(format!(
                "{parts:?} is not a weakly decreasing list of positive integers"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        let parts = (0..w)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition of `n` with all parts even; `n` must be even.
    pub fn even(n: usize) -> Result<Vec<Partition>> {
        if n % 2 == 1 {
            return Err(Error::Validation(format!("{n} is odd")));
        }
        Ok(Self::all(n / 2)
            .into_iter()
            .map(|p| Partition {
                parts: p.parts.iter().map(|x| 2 * x).collect(),
            })
            .collect())
    }

    /// Young-diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Classical dominance `self ⊴ other` (sizes need not agree; missing
    /// parts count as zero).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let k = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..k {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Removable boxes as 0-based `(row, col)`.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.parts[i] - 1))
            .collect()
    }

    /// Addable boxes as 0-based `(row, col)`.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i) < self.part(i - 1))
            .map(|i| (i, self.part(i)))
            .collect()
    }

    pub fn add_box(&self, row: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else if row < parts.len() {
            parts[row] += 1;
        } else {
            return Err(Error::Validation(format!("cannot add a box in row {row}")));
        }
        Partition::new(parts)
    }

    pub fn remove_box(&self, row: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        match parts.get_mut(row) {
            Some(p) => *p -= 1,
            None => return Err(Error::Validation(format!("no box in row {row}"))),
        }
        Partition::new(parts)
    }

    /// Hook-length formula.
    pub fn standard_tableaux_count(&self) -> u128 {
        let conj = self.conjugate();
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut hooks: u128 = 1;
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                hooks *= (p - j + conj.part(j) - i - 1) as u128;
            }
        }
        num /= hooks;
        num
    }

    /// All standard Young tableaux, each as a list of rows of entries `0..n`.
    /// Ordered by the row-reading word of entries, so the row superstandard
    /// tableau comes first.
    pub fn standard_tableaux(&self) -> Vec<Vec<Vec<usize>>> {
        let n = self.size();
        // `rows_of[k]` = row holding entry k
        let mut out = Vec::new();
        let mut fill = vec![0usize; self.len()];
        let mut rows_of = Vec::with_capacity(n);
        fn go(
            shape: &[usize],
            fill: &mut Vec<usize>,
            rows_of: &mut Vec<usize>,
            n: usize,
            out: &mut Vec<Vec<usize>>,
        ) {
            if rows_of.len() == n {
                out.push(rows_of.clone());
                return;
            }
            for r in 0..shape.len() {
                if fill[r] < shape[r] && (r == 0 || fill[r - 1] > fill[r]) {
                    fill[r] += 1;
                    rows_of.push(r);
                    go(shape, fill, rows_of, n, out);
                    rows_of.pop();
                    fill[r] -= 1;
                }
            }
        }
        let mut words = Vec::new();
        go(&self.parts, &mut fill, &mut rows_of, n, &mut words);
        for w in words {
            let mut t: Vec<Vec<usize>> = self.parts.iter().map(|&p| Vec::with_capacity(p)).collect();
            for (k, &r) in w.iter().enumerate() {
                t[r].push(k);
            }
            out.push(t);
        }
        out
    }
}

/// Number of standard fillings of the skew shape `outer / inner`.
pub fn skew_standard_count(outer: &Partition, inner: &Partition) -> u128 {
    if !inner.is_contained_in(outer) {
        return 0;
    }
    if outer == inner {
        return 1;
    }
    outer
        .removable()
        .into_iter()
        .filter_map(|(r, _)| {
            let smaller = outer.remove_box(r).ok()?;
            inner.is_contained_in(&smaller).then(|| skew_standard_count(&smaller, inner))
        })
        .sum()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Accepts `(2,1)`, `2,1`, `()` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Validation(format!("bad partition part {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
