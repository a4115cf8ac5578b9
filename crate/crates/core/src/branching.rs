//! Restriction of cell modules to the through-strand subalgebra `H_n^m`:
//! the closed Littlewood–Richardson formula, a character oracle, and the
//! weight decomposition of the dangle space `V(m,2l,l)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cellular::{act_on_dangle, CellModule};
use crate::combinatorics::{lr_coeff, order_leq, poset_leq, MultiPartition, Partition, Variant};
use crate::diagrams::DiagramAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::modules::Module;
use crate::scalars::{Cyclotomic, Params, Rational};
use crate::wreath::{idempotent_t, WreathElement, WreathSpecht};

/// Largest group `(Z/mZ) ≀ Σ_n` summed over by the oracle.
pub const MAX_GROUP_ORDER: usize = 200_000;

/// `[Δ(λ)↓_{H_n^m} : 𝐒(μ)]` from the Littlewood–Richardson product.
pub fn restriction_mult(lambda: &MultiPartition, mu: &MultiPartition, variant: Variant) -> Result<u64> {
    let m = lambda.m();
    if mu.m() != m {
        return Err(Error::Validation("labels have different m".into()));
    }
    if mu.size() < lambda.size() || (mu.size() - lambda.size()) % 2 == 1 {
        return Err(Error::Validation(format!(
            "{lambda} is not a cell label for n = {}",
            mu.size()
        )));
    }
    if !order_leq(lambda, mu, variant) {
        return Ok(0);
    }
    let Some(sig) = poset_leq(&lambda.shape(), &mu.shape(), variant)? else {
        return Ok(0);
    };
    let even_sum = |j: usize, a: usize| -> Result<u64> {
        Ok(Partition::even(2 * a)?
            .iter()
            .map(|eta| lr_coeff(mu.component(j), lambda.component(j), eta))
            .sum())
    };
    let mut total = 1u64;
    match variant {
        Variant::Unoriented => {
            for (j, &a) in sig.a.iter().enumerate() {
                total *= even_sum(j, a)?;
            }
        }
        Variant::Oriented => {
            for (i, &a) in sig.a.iter().enumerate() {
                let f = if 2 * i % m == 0 {
                    even_sum(i, a)?
                } else {
                    Partition::all(a)
                        .iter()
                        .map(|tau| {
                            lr_coeff(mu.component(i), lambda.component(i), tau)
                                * lr_coeff(mu.component(m - i), lambda.component(m - i), tau)
                        })
                        .sum()
                };
                total *= f;
            }
        }
    }
    Ok(total)
}

/// Character of `Δ(λ)` on a group element, read off the dangle action.
fn cell_character(cell: &CellModule, g: &WreathElement) -> Cyclotomic {
    let alg = cell.algebra();
    let x = g.to_diagram(alg.m());
    let mut acc = Cyclotomic::zero(alg.field());
    for d in cell.dangles() {
        let Some(p) = act_on_dangle(alg, &x, d) else {
            continue;
        };
        if &p.dangle == d {
            acc += &(&p.coeff * &cell.specht().character(&p.through));
        }
    }
    acc
}

/// `[Δ(λ)↓_{H_n^m} : 𝐒(μ)]` for every `μ ⊢_m n`, by the inner product of
/// characters over the whole group. Zero multiplicities are omitted.
pub fn restriction_row(alg: &DiagramAlgebra, lambda: &MultiPartition) -> Result<BTreeMap<MultiPartition, u64>> {
    let (m, n) = (alg.m(), alg.n());
    let order = (m as usize).pow(n as u32) * (1..=n).product::<usize>();
    if order > MAX_GROUP_ORDER {
        return Err(Error::Scale {
            what: "group order",
            size: order,
            limit: MAX_GROUP_ORDER,
        });
    }
    let cell = CellModule::new(alg, lambda)?;
    if cell.dim() > crate::repcalc::MAX_ALGEBRA_DIM {
        return Err(Error::Scale {
            what: "cell module dimension",
            size: cell.dim(),
            limit: crate::repcalc::MAX_ALGEBRA_DIM,
        });
    }
    let group = WreathElement::all(m, n);
    let chi: Vec<Cyclotomic> = group.iter().map(|g| cell_character(&cell, g)).collect();
    let mut out = BTreeMap::new();
    let mut accounted = 0usize;
    for mu in MultiPartition::all(m as usize, n) {
        let s = WreathSpecht::new(&mu, alg.field())?;
        let mut acc = Cyclotomic::zero(alg.field());
        for (g, c) in group.iter().zip(&chi) {
            if !c.is_zero() {
                acc += &(c * &s.character(g).conj());
            }
        }
        let q = acc
            .as_rational()
            .map(|q| q / Rational::from_integer((order as i64).into()))
            .ok_or_else(|| Error::Verification(format!("<Delta{lambda}, S{mu}> is not rational")))?;
        if !q.is_integer() || q.is_negative() {
            return Err(Error::Verification(format!("<Delta{lambda}, S{mu}> = {q}")));
        }
        let k = q.to_integer().to_u64().unwrap_or(0);
        if !q.is_zero() && k == 0 {
            return Err(Error::Verification(format!("<Delta{lambda}, S{mu}> = {q}")));
        }
        if k > 0 {
            accounted += k as usize * s.dim();
            out.insert(mu, k);
        }
    }
    if accounted != cell.dim() {
        return Err(Error::Verification(format!(
            "restriction of Delta{lambda} accounts for {accounted} of {} dimensions",
            cell.dim()
        )));
    }
    Ok(out)
}

/// One multiplicity from [`restriction_row`].
pub fn restriction_oracle(alg: &DiagramAlgebra, lambda: &MultiPartition, mu: &MultiPartition) -> Result<u64> {
    if mu.size() != alg.n() || mu.m() != alg.m() as usize {
        return Err(Error::Validation(format!("{mu} is not an m-partition of {}", alg.n())));
    }
    Ok(restriction_row(alg, lambda)?.get(mu).copied().unwrap_or(0))
}

/// Cells where the formula and the oracle disagree, over all `(λ, μ)`.
pub fn restriction_diff(alg: &DiagramAlgebra) -> Result<Vec<(MultiPartition, MultiPartition, u64, u64)>> {
    let variant = if alg.is_oriented() { Variant::Oriented } else { Variant::Unoriented };
    let mut out = Vec::new();
    for lambda in crate::cellular::cell_labels(alg) {
        let row = restriction_row(alg, &lambda)?;
        for mu in MultiPartition::all(alg.m() as usize, alg.n()) {
            let f = restriction_mult(&lambda, &mu, variant)?;
            let o = row.get(&mu).copied().unwrap_or(0);
            if f != o {
                out.push((lambda.clone(), mu, f, o));
            }
        }
    }
    Ok(out)
}

/// Weight `φ` of a tuple of arc labels: oriented, `φ_i` counts labels `i`
/// or `m − i` for `i ≤ m/2`; unoriented, `φ_i` counts labels `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVector {
    pub phi: Vec<usize>,
}

impl WeightVector {
    pub fn of_labels(m: u32, labels: &[u32], variant: Variant) -> Self {
        let len = match variant {
            Variant::Oriented => m as usize / 2 + 1,
            Variant::Unoriented => m as usize,
        };
        let mut phi = vec![0; len];
        for &r in labels {
            let r = r % m;
            let i = match variant {
                Variant::Oriented => r.min((m - r) % m),
                Variant::Unoriented => r,
            };
            phi[i as usize] += 1;
        }
        WeightVector { phi }
    }

    pub fn l(&self) -> usize {
        self.phi.iter().sum()
    }

    /// Every weight with `Σφ = l`.
    pub fn all(m: u32, l: usize, variant: Variant) -> Vec<WeightVector> {
        let len = match variant {
            Variant::Oriented => m as usize / 2 + 1,
            Variant::Unoriented => m as usize,
        };
        let mut out = vec![Vec::new()];
        for k in 0..len {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    let used: usize = p.iter().sum();
                    let range = if k + 1 == len { (l - used)..=(l - used) } else { 0..=(l - used) };
                    range.map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|phi| WeightVector { phi }).collect()
    }

    /// Arcs of `v_φ` (0-based) with the residue `T^φ` puts on their left end:
    /// adjacent pairs for self-paired weights, nested arcs otherwise.
    pub fn generator_arcs(&self, m: u32, variant: Variant) -> Vec<(usize, usize, u32)> {
        let mut arcs = Vec::new();
        let mut start = 0;
        for (i, &f) in self.phi.iter().enumerate() {
            let nested = variant == Variant::Oriented && (2 * i) % m as usize != 0;
            for p in 0..f {
                if nested {
                    arcs.push((start + p, start + 2 * f - 1 - p, i as u32));
                } else {
                    arcs.push((start + 2 * p, start + 2 * p + 1, i as u32));
                }
            }
            start += 2 * f;
        }
        arcs
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.phi.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The dangle space `V(m,2l,l)` as `Δ_{2l}(∅)`, with the idempotents `T_i^r`.
struct DangleSpace {
    alg: DiagramAlgebra,
    cell: CellModule,
}

impl DangleSpace {
    fn new(m: u32, l: usize, variant: Variant) -> Result<Self> {
        let params = match variant {
            Variant::Oriented => Params::generic(m, 1),
            Variant::Unoriented => Params::generic_unrestricted(m, 1),
        };
        let alg = DiagramAlgebra::cyclotomic(2 * l, &params, variant == Variant::Oriented);
        let cell = CellModule::new(&alg, &MultiPartition::empty(m as usize))?;
        Ok(DangleSpace { alg, cell })
    }

    /// `Π T_{i_p}^{r_p}` applied to the basis vector of dangle `d`.
    fn project(&self, d: usize, residues: &[(usize, u32)]) -> Result<Vec<Cyclotomic>> {
        let f = self.alg.field();
        let mut v = vec![Cyclotomic::zero(f); self.cell.dim()];
        v[d] = Cyclotomic::one(f);
        for &(i, r) in residues {
            v = self.cell.act_element(&idempotent_t(&self.alg, i + 1, r)?).mul_vec(&v);
        }
        Ok(v)
    }

    /// Dangles with every arc labelled 0, with their arcs `(i, j)`, `i < j`.
    fn unlabelled(&self) -> Vec<(usize, Vec<(usize, usize)>)> {
        self.cell
            .dangles()
            .iter()
            .enumerate()
            .filter(|(_, d)| (0..d.n()).all(|k| d.label(k) == 0))
            .map(|(i, d)| {
                let arcs = (0..d.n())
                    .filter_map(|k| d.partner(k).filter(|&p| p > k).map(|p| (k, p)))
                    .collect();
                (i, arcs)
            })
            .collect()
    }

    fn index_of_arcs(&self, arcs: &[(usize, usize, u32)]) -> Option<usize> {
        self.unlabelled().into_iter().find_map(|(i, a)| {
            let mut want: Vec<(usize, usize)> = arcs.iter().map(|&(x, y, _)| (x, y)).collect();
            want.sort();
            (a == want).then_some(i)
        })
    }
}

/// `V(m,2l,l)↓_{H_{2l}^m} = ⊕_φ V^φ` with the dimension of each summand.
/// Each summand is checked to be generated by `T^φ v_φ`, and the dimensions
/// to add up to `dim V(m,2l,l)`.
pub fn v_weight_decomposition(m: u32, l: usize, variant: Variant) -> Result<Vec<(WeightVector, usize)>> {
    if m == 0 {
        return Err(Error::Validation("m must be positive".into()));
    }
    let weights = WeightVector::all(m, l, variant);
    if l == 0 {
        return Ok(weights.into_iter().map(|w| (w, 1)).collect());
    }
    let space = DangleSpace::new(m, l, variant)?;
    let f = space.alg.field();
    let mut parts: BTreeMap<WeightVector, Subspace> = BTreeMap::new();
    for (d, arcs) in space.unlabelled() {
        let tuples = (m as usize).pow(l as u32);
        for code in 0..tuples {
            let mut c = code;
            let residues: Vec<(usize, u32)> = arcs
                .iter()
                .map(|&(i, _)| {
                    let r = (c % m as usize) as u32;
                    c /= m as usize;
                    (i, r)
                })
                .collect();
            let labels: Vec<u32> = residues.iter().map(|x| x.1).collect();
            let w = WeightVector::of_labels(m, &labels, variant);
            let v = space.project(d, &residues)?;
            parts
                .entry(w)
                .or_insert_with(|| Subspace::new(space.cell.dim(), f))
                .insert(v);
        }
    }
    let gens: Vec<_> = space
        .alg
        .generators()
        .into_iter()
        .filter(|(_, g)| g.through_count() == g.n())
        .map(|(_, g)| space.cell.act(&g))
        .collect();
    let mut out = Vec::new();
    let mut total = 0;
    for w in weights {
        let sub = parts
            .remove(&w)
            .ok_or_else(|| Error::Verification(format!("no vectors of weight {w}")))?;
        let arcs = w.generator_arcs(m, variant);
        let d = space
            .index_of_arcs(&arcs)
            .ok_or_else(|| Error::Verification(format!("v_phi for {w} is not a dangle")))?;
        let residues: Vec<(usize, u32)> = arcs.iter().map(|&(i, _, r)| (i, r)).collect();
        let seed = space.project(d, &residues)?;
        // the H-orbit of T^φ v_φ
        let mut orbit = Subspace::new(space.cell.dim(), f);
        let mut queue = Vec::new();
        if orbit.insert(seed.clone()) {
            queue.push(seed);
        }
        while let Some(v) = queue.pop() {
            if !sub.contains(&v) {
                return Err(Error::Verification(format!("H-orbit of T^phi v_phi leaves weight {w}")));
            }
            for g in &gens {
                let u = g.mul_vec(&v);
                if orbit.insert(u.clone()) {
                    queue.push(u);
                }
            }
        }
        if orbit.dim() != sub.dim() {
            return Err(Error::Verification(format!(
                "T^phi v_phi generates {} of {} dimensions at weight {w}",
                orbit.dim(),
                sub.dim()
            )));
        }
        total += sub.dim();
        out.push((w, sub.dim()));
    }
    if total != space.cell.dim() {
        return Err(Error::Verification(format!(
            "weight spaces add up to {total}, not {}",
            space.cell.dim()
        )));
    }
    Ok(out)
}

/// Checks `T_i^r v = T_j^{m−r} v` (oriented) or `T_i^r v = T_j^r v`
/// (unoriented) for every arc `(i, j)` of every 0-labelled dangle.
pub fn check_arc_pairing(m: u32, l: usize, variant: Variant) -> Result<usize> {
    let space = DangleSpace::new(m, l, variant)?;
    let mut checked = 0;
    for (d, arcs) in space.unlabelled() {
        for &(i, j) in &arcs {
            for r in 0..m {
                let s = match variant {
                    Variant::Oriented => (m - r) % m,
                    Variant::Unoriented => r,
                };
                if space.project(d, &[(i, r)])? != space.project(d, &[(j, s)])? {
                    return Err(Error::Verification(format!("T_{}^{r} != T_{}^{s} on arc", i + 1, j + 1)));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::cell_labels;

    fn mp(parts: &[&[usize]]) -> MultiPartition {
        MultiPartition::from_parts(parts).unwrap()
    }

    fn alg(m: u32, n: usize, oriented: bool) -> DiagramAlgebra {
        let p = if oriented { Params::generic(m, 3) } else { Params::generic_unrestricted(m, 3) };
        DiagramAlgebra::cyclotomic(n, &p, oriented)
    }

    #[test]
    fn formula_examples() {
        let o = Variant::Oriented;
        assert_eq!(restriction_mult(&mp(&[&[2, 1]]), &mp(&[&[2, 1]]), o).unwrap(), 1);
        assert_eq!(restriction_mult(&mp(&[&[]]), &mp(&[&[2]]), o).unwrap(), 1);
        assert_eq!(restriction_mult(&mp(&[&[]]), &mp(&[&[1, 1]]), o).unwrap(), 0);
        assert_eq!(restriction_mult(&mp(&[&[], &[]]), &mp(&[&[2], &[]]), o).unwrap(), 1);
        assert_eq!(restriction_mult(&mp(&[&[], &[]]), &mp(&[&[1], &[1]]), o).unwrap(), 0);
        assert!(restriction_mult(&mp(&[&[1]]), &mp(&[&[2]]), o).is_err());
    }

    #[test]
    fn character_trace_matches_matrices() {
        let a = alg(2, 3, true);
        for lambda in cell_labels(&a) {
            let cell = CellModule::new(&a, &lambda).unwrap();
            for g in WreathElement::all(2, 3).iter().step_by(5) {
                assert_eq!(cell_character(&cell, g), cell.character(&g.to_diagram(2)));
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let a = alg(1, 2, true);
        assert_eq!(restriction_oracle(&a, &mp(&[&[]]), &mp(&[&[2]])).unwrap(), 1);
        assert_eq!(restriction_oracle(&a, &mp(&[&[]]), &mp(&[&[1, 1]])).unwrap(), 0);
        let a = alg(2, 2, true);
        assert_eq!(restriction_oracle(&a, &mp(&[&[], &[]]), &mp(&[&[2], &[]])).unwrap(), 1);
        assert_eq!(restriction_oracle(&a, &mp(&[&[], &[]]), &mp(&[&[1], &[1]])).unwrap(), 0);
    }

    #[test]
    fn formula_matches_oracle() {
        for (m, n) in [(1, 4), (2, 3), (3, 2)] {
            let d = restriction_diff(&alg(m, n, true)).unwrap();
            assert!(d.is_empty(), "m={m} n={n}: {d:?}");
        }
        let d = restriction_diff(&alg(2, 3, false)).unwrap();
        assert!(d.is_empty(), "unoriented: {d:?}");
    }

    #[test]
    fn nonzero_restriction_needs_poset_relation() {
        for (m, n) in [(2, 3), (3, 2)] {
            let a = alg(m, n, true);
            for lambda in cell_labels(&a) {
                for mu in restriction_row(&a, &lambda).unwrap().keys() {
                    assert!(poset_leq(&lambda.shape(), &mu.shape(), Variant::Oriented).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn weight_decompositions() {
        let o = Variant::Oriented;
        assert_eq!(v_weight_decomposition(2, 0, o).unwrap().len(), 1);
        let dims = |m, l| -> Vec<(Vec<usize>, usize)> {
            v_weight_decomposition(m, l, o)
                .unwrap()
                .into_iter()
                .map(|(w, d)| (w.phi, d))
                .collect()
        };
        assert_eq!(dims(2, 1), vec![(vec![0, 1], 1), (vec![1, 0], 1)]);
        assert_eq!(dims(3, 1), vec![(vec![0, 1], 2), (vec![1, 0], 1)]);
        for (m, l) in [(2, 2), (3, 2), (4, 2), (2, 3)] {
            v_weight_decomposition(m, l, o).unwrap();
            v_weight_decomposition(m, l, Variant::Unoriented).unwrap();
        }
    }

    #[test]
    fn arcs_pair_residues() {
        for (m, l) in [(2, 2), (3, 2), (4, 1)] {
            assert!(check_arc_pairing(m, l, Variant::Oriented).unwrap() > 0);
            assert!(check_arc_pairing(m, l, Variant::Unoriented).unwrap() > 0);
        }
    }
}
