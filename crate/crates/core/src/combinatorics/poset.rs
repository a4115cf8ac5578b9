use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{MComposition, MultiPartition};
use crate::error::{Error, Result};

/// Which cyclotomic order to use: the oriented one pairs components `r`
/// and `m − r`; the unoriented one treats every component like `r = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[default]
    Oriented,
    Unoriented,
}

/// Exponents `a_r` in `ω ⪯_{Σ a_r ξ^r} ω′`.
///
/// Oriented: `r` runs over `0..=m/2`. Unoriented: `r` runs over `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PosetSignature {
    pub a: Vec<usize>,
}

impl PosetSignature {
    pub fn total(&self) -> usize {
        self.a.iter().sum()
    }

    /// `Some(r)` if the signature is exactly `ξ^r`.
    pub fn unit(&self) -> Option<usize> {
        (self.total() == 1).then(|| self.a.iter().position(|&x| x == 1).unwrap())
    }

    /// Text such as `1`, `xi`, `1+xi^2`, `2xi`; `0` for the empty sum.
    pub fn label(&self) -> String {
        let terms: Vec<String> = self
            .a
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(r, &c)| {
                let base = match r {
                    0 => String::new(),
                    1 => "xi".to_string(),
                    _ => format!("xi^{r}"),
                };
                match (c, base.is_empty()) {
                    (c, true) => c.to_string(),
                    (1, false) => base,
                    (c, false) => format!("{c}{base}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// `ω ⪯ ω′` with its signature, or `None`.
pub fn poset_leq(
    omega: &MComposition,
    omega2: &MComposition,
    variant: Variant,
) -> Result<Option<PosetSignature>> {
    let m = omega.m();
    if m != omega2.m() {
        return Err(Error::Validation("compositions have different m".into()));
    }
    let mut d = Vec::with_capacity(m);
    for r in 0..m {
        if omega.get(r) > omega2.get(r) {
            return Ok(None);
        }
        d.push(omega2.get(r) - omega.get(r));
    }
    match variant {
        Variant::Unoriented => {
            if d.iter().any(|x| x % 2 == 1) {
                return Ok(None);
            }
            Ok(Some(PosetSignature {
                a: d.iter().map(|x| x / 2).collect(),
            }))
        }
        Variant::Oriented => {
            let mut a = Vec::with_capacity(m / 2 + 1);
            for r in 0..=m / 2 {
                let s = (m - r) % m;
                if s == r {
                    if d[r] % 2 == 1 {
                        return Ok(None);
                    }
                    a.push(d[r] / 2);
                } else {
                    if d[r] != d[s] {
                        return Ok(None);
                    }
                    a.push(d[r]);
                }
            }
            Ok(Some(PosetSignature { a }))
        }
    }
}

/// The order `≤` on `Λ(m,n)`: componentwise containment plus `|λ| ⪯ |μ|`.
pub fn order_leq(lambda: &MultiPartition, mu: &MultiPartition, variant: Variant) -> bool {
    lambda.is_contained_in(mu)
        && matches!(poset_leq(&lambda.shape(), &mu.shape(), variant), Ok(Some(_)))
}

/// `Λ_ω`: all m-partitions `λ` with `|λ| ⪯ ω`.
pub fn lambda_omega(omega: &MComposition, variant: Variant) -> Vec<MultiPartition> {
    down_set(omega, variant)
        .iter()
        .flat_map(MultiPartition::with_shape)
        .collect()
}

/// `{ω′ ∈ Λ|m,n| : ω′ ⪯ ω}`, sorted.
pub fn down_set(omega: &MComposition, variant: Variant) -> Vec<MComposition> {
    MComposition::all_levels(omega.m(), omega.total())
        .into_iter()
        .filter(|w| matches!(poset_leq(w, omega, variant), Ok(Some(_))))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// A Hasse diagram of `⪯` restricted to a vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hasse {
    pub vertices: Vec<MComposition>,
    /// `(lower, upper, signature)` covering pairs, indices into `vertices`.
    pub edges: Vec<(usize, usize, PosetSignature)>,
}

impl Hasse {
    /// Covering relation of `⪯` on `vertices` (deduplicated, sorted).
    pub fn new(vertices: impl IntoIterator<Item = MComposition>, variant: Variant) -> Self {
        let vertices: Vec<MComposition> =
            vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let k = vertices.len();
        let mut below = vec![vec![None; k]; k];
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    below[i][j] = poset_leq(&vertices[i], &vertices[j], variant).ok().flatten();
                }
            }
        }
        let mut edges = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let Some(sig) = &below[i][j] else { continue };
                let covered = (0..k).all(|t| below[i][t].is_none() || below[t][j].is_none());
                if covered {
                    edges.push((i, j, sig.clone()));
                }
            }
        }
        Hasse { vertices, edges }
    }

    /// Hasse diagram of all of `Λ|m,n|`.
    pub fn full(m: usize, n: usize, variant: Variant) -> Self {
        Self::new(MComposition::all_levels(m, n), variant)
    }

    /// Connected component containing `start` in the Hasse diagram of `Λ|m,n|`.
    pub fn component(m: usize, n: usize, start: &MComposition, variant: Variant) -> Result<Self> {
        let full = Self::full(m, n, variant);
        let Some(s) = full.vertices.iter().position(|v| v == start) else {
            return Err(Error::Validation(format!("{start} is not in the poset for m={m}, n={n}")));
        };
        let comps = full.components();
        Ok(Self::new(
            comps.into_iter().find(|c| c.contains(&s)).unwrap().into_iter().map(|i| full.vertices[i].clone()),
            variant,
        ))
    }

    /// Hasse diagram of the down-set of `omega`.
    pub fn down(omega: &MComposition, variant: Variant) -> Self {
        Self::new(down_set(omega, variant), variant)
    }

    /// Connected components as sorted vertex-index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let k = self.vertices.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b, _) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..k {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().collect()
    }

    /// Vertices with no edge coming in from below.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| !self.edges.iter().any(|&(_, b, _)| b == v))
            .collect()
    }

    /// Graphviz text. `perm` reorders the displayed entries of each
    /// composition (entry `i` shows `ω_{perm[i]}`); identity if `None`.
    pub fn to_dot(&self, perm: Option<&[usize]>) -> Result<String> {
        let m = self.vertices.first().map_or(0, MComposition::m);
        let identity: Vec<usize> = (0..m).collect();
        let perm = perm.unwrap_or(&identity);
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != identity {
            return Err(Error::Validation(format!("{perm:?} is not a permutation of 0..{m}")));
        }
        let name = |v: &MComposition| {
            let e: Vec<String> = v.permuted(perm).iter().map(usize::to_string).collect();
            format!("({})", e.join(","))
        };
        let mut names: Vec<(String, usize)> =
            self.vertices.iter().enumerate().map(|(i, v)| (name(v), i)).collect();
        names.sort();
        let mut edges: Vec<(String, String, String)> = self
            .edges
            .iter()
            .map(|(a, b, s)| (name(&self.vertices[*a]), name(&self.vertices[*b]), s.label()))
            .collect();
        edges.sort();
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (n, _) in &names {
            writeln!(out, "  \"{n}\";").unwrap();
        }
        for (a, b, l) in &edges {
            writeln!(out, "  \"{a}\" -> \"{b}\" [label=\"{l}\"];").unwrap();
        }
        out.push_str("}\n");
        Ok(out)
    }
}
