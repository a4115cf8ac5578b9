//! The through-strand subalgebra `H_n^m = k((Z/mZ) ≀ Σ_n)`, its idempotents
//! and its Specht modules.

mod specht;

use std::collections::HashMap;

pub use specht::SymSpecht;

use crate::combinatorics::{MComposition, MultiPartition};
use crate::diagrams::{AlgebraElement, Diagram, DiagramAlgebra, RawStrand};
use crate::error::{invalid, Result};
use crate::linalg::Matrix;
use crate::scalars::Cyclotomic;

/// A wreath-product element read as a diagram with only through strands:
/// top position `i` runs down to bottom position `sigma[i]` with label `labels[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub sigma: Vec<usize>,
    pub labels: Vec<u32>,
}

impl WreathElement {
    pub fn identity(n: usize) -> Self {
        WreathElement {
            sigma: (0..n).collect(),
            labels: vec![0; n],
        }
    }

    pub fn from_diagram(d: &Diagram) -> Result<Self> {
        let n = d.n();
        if d.through_count() != n {
            return invalid(format!("{d} has arcs"));
        }
        Ok(WreathElement {
            sigma: (0..n).map(|i| d.partner(i) - n).collect(),
            labels: (0..n).map(|i| d.label(i)).collect(),
        })
    }

    pub fn to_diagram(&self, m: u32) -> Diagram {
        let n = self.sigma.len();
        let strands: Vec<RawStrand> = (0..n)
            .map(|i| RawStrand {
                from: i,
                to: n + self.sigma[i],
                label: self.labels[i] as i64,
            })
            .collect();
        Diagram::from_strands(n, m, &strands).expect("permutation diagram")
    }

    /// All `m^n n!` elements.
    pub fn all(m: u32, n: usize) -> Vec<WreathElement> {
        let mut perms = vec![Vec::new()];
        for _ in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    let free: Vec<usize> = (0..n).filter(|v| !p.contains(v)).collect();
                    free.into_iter().map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        let total = (m as usize).pow(n as u32);
        let mut out = Vec::with_capacity(perms.len() * total);
        for p in perms {
            for code in 0..total {
                let mut c = code;
                let labels = (0..n)
                    .map(|_| {
                        let l = (c % m as usize) as u32;
                        c /= m as usize;
                        l
                    })
                    .collect();
                out.push(WreathElement {
                    sigma: p.clone(),
                    labels,
                });
            }
        }
        out
    }
}

/// The wreath Specht module `𝐒(λ)` over `H_n^m`, `n = Σ|λ^r|`.
///
/// Basis vectors are pairs (block assignment of positions to components,
/// standard tableau of each component). In component `r` every `t_i` acts by
/// `ξ^{−r}`, so that `T_i^r` projects onto component `r`.
#[derive(Debug)]
pub struct WreathSpecht {
    label: MultiPartition,
    field: u32,
    factors: Vec<SymSpecht>,
    basis: Vec<(Vec<u8>, Vec<usize>)>,
    index: HashMap<(Vec<u8>, Vec<usize>), usize>,
    fixed: bool,
}

impl WreathSpecht {
    pub fn new(label: &MultiPartition, field: u32) -> Result<Self> {
        Self::build(label, field, false)
    }

    /// `⊗_c S(λ^c)` over `Π_c Σ_{|λ^c|}`: positions are split into consecutive
    /// blocks of sizes `|λ^0|, |λ^1|, …` and group elements must preserve the
    /// blocks and carry no labels.
    pub fn fixed_blocks(label: &MultiPartition, field: u32) -> Result<Self> {
        Self::build(label, field, true)
    }

    fn build(label: &MultiPartition, field: u32, fixed: bool) -> Result<Self> {
        let m = label.m() as u32;
        if !fixed && field % m != 0 {
            return invalid(format!("field Q(xi_{field}) does not contain m = {m}th roots"));
        }
        let n = label.size();
        let factors: Vec<SymSpecht> = label
            .components()
            .iter()
            .map(|p| SymSpecht::new(p, field))
            .collect();
        let sizes = label.shape();
        let mut assignments = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut left: Vec<usize> = sizes.entries().to_vec();
        fn go(cur: &mut Vec<u8>, left: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<u8>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for r in 0..left.len() {
                if left[r] > 0 {
                    left[r] -= 1;
                    cur.push(r as u8);
                    go(cur, left, n, out);
                    cur.pop();
                    left[r] += 1;
                }
            }
        }
        if fixed {
            assignments.push(sizes.block_of().into_iter().map(|r| r as u8).collect());
        } else {
            go(&mut cur, &mut left, n, &mut assignments);
        }
        let mut basis = Vec::new();
        for a in assignments {
            let mut tabs = vec![Vec::new()];
            for f in &factors {
                tabs = tabs
                    .into_iter()
                    .flat_map(|t: Vec<usize>| {
                        (0..f.dim()).map(move |i| {
                            let mut u = t.clone();
                            u.push(i);
                            u
                        })
                    })
                    .collect();
            }
            for t in tabs {
                basis.push((a.clone(), t));
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        Ok(WreathSpecht {
            label: label.clone(),
            field,
            factors,
            basis,
            index,
            fixed,
        })
    }

    pub fn label(&self) -> &MultiPartition {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.label.size()
    }

    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn factors(&self) -> &[SymSpecht] {
        &self.factors
    }

    /// Block assignment of basis vector `i`.
    pub fn assignment(&self, i: usize) -> &[u8] {
        &self.basis[i].0
    }

    /// Image of basis vector `col` under `g`, as sparse `(row, coeff)` pairs.
    pub fn act_column(&self, g: &WreathElement, col: usize) -> Vec<(usize, Cyclotomic)> {
        let n = self.n();
        let (b, tabs) = &self.basis[col];
        let new_b: Vec<u8> = (0..n).map(|i| b[g.sigma[i]]).collect();
        let scalar = if self.fixed {
            debug_assert_eq!(&new_b, b, "element must preserve the blocks");
            Cyclotomic::one(self.field)
        } else {
            let step = (self.field as i64) / self.label.m() as i64;
            let mut exp: i64 = 0;
            for i in 0..n {
                exp -= new_b[i] as i64 * g.labels[i] as i64;
            }
            Cyclotomic::xi_pow(self.field, exp * step)
        };
        // per component: image of its tableau vector
        let mut parts: Vec<Vec<(usize, Cyclotomic)>> = Vec::with_capacity(self.factors.len());
        for (r, f) in self.factors.iter().enumerate() {
            let new_pos: Vec<usize> = (0..n).filter(|&i| new_b[i] as usize == r).collect();
            let old_pos: Vec<usize> = (0..n).filter(|&j| b[j] as usize == r).collect();
            let mut w = vec![0usize; old_pos.len()];
            for (a, &p) in new_pos.iter().enumerate() {
                let s = old_pos.binary_search(&g.sigma[p]).expect("block preserved");
                w[s] = a;
            }
            let mat = f.matrix(&w);
            parts.push(
                (0..f.dim())
                    .filter(|&i| !mat[(i, tabs[r])].is_zero())
                    .map(|i| (i, mat[(i, tabs[r])].clone()))
                    .collect(),
            );
        }
        let mut out = Vec::new();
        let mut acc: Vec<(Vec<usize>, Cyclotomic)> = vec![(Vec::new(), scalar)];
        for p in parts {
            let mut next = Vec::with_capacity(acc.len() * p.len());
            for (t, c) in &acc {
                for (i, v) in &p {
                    let mut u = t.clone();
                    u.push(*i);
                    next.push((u, c * v));
                }
            }
            acc = next;
        }
        for (t, c) in acc {
            out.push((self.index[&(new_b.clone(), t)], c));
        }
        out
    }

    pub fn matrix(&self, g: &WreathElement) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(d, d, self.field);
        for col in 0..d {
            for (row, c) in self.act_column(g, col) {
                out[(row, col)] = c;
            }
        }
        out
    }

    /// Matrix of an element supported on through-strand diagrams.
    pub fn element_matrix(&self, x: &AlgebraElement) -> Result<Matrix> {
        let d = self.dim();
        let mut out = Matrix::zeros(d, d, self.field);
        for (diag, c) in x {
            let g = WreathElement::from_diagram(diag)?;
            out.add_scaled(&self.matrix(&g), c);
        }
        Ok(out)
    }

    pub fn character(&self, g: &WreathElement) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.field);
        for col in 0..self.dim() {
            for (row, c) in self.act_column(g, col) {
                if row == col {
                    acc += &c;
                }
            }
        }
        acc
    }
}

/// `T_i^r` (1-based `i`) as an element of `alg`.
pub fn idempotent_t(alg: &DiagramAlgebra, i: usize, r: u32) -> Result<AlgebraElement> {
    if i == 0 || i > alg.n() || r >= alg.m() {
        return invalid(format!("T_{i}^{r} out of range"));
    }
    Ok(alg.torus_projection(&alg.one(), i - 1, r))
}

/// `(position, residue)` pairs defining `π_ω`: positions in block `r` get `r`.
pub fn omega_residues(omega: &MComposition) -> Vec<(usize, u32)> {
    omega.block_of().into_iter().enumerate().map(|(i, r)| (i, r as u32)).collect()
}

/// `π_ω = Π_r Π_{i ∈ [ω_r]} T_i^r`.
pub fn pi_omega(alg: &DiagramAlgebra, omega: &MComposition) -> Result<AlgebraElement> {
    if omega.m() as u32 != alg.m() || omega.total() != alg.n() {
        return invalid(format!("{omega} is not an m-composition of n = {}", alg.n()));
    }
    Ok(alg.project_left(&alg.one(), &omega_residues(omega)))
}

/// `π_ω 𝐒(λ)`: a basis (as columns in `𝐒(λ)`) of the image of `π_ω`.
pub fn truncate_specht(module: &WreathSpecht, omega: &MComposition) -> Result<Matrix> {
    let m = module.label().m() as u32;
    let p = crate::scalars::Params::from_ints(&vec![1; m as usize]);
    let alg = DiagramAlgebra::cyclotomic(module.n(), &p, true);
    let pi = pi_omega(&alg, omega)?;
    let proj = module.element_matrix(&pi)?;
    let ech = crate::linalg::RowEchelon::new(proj.transpose());
    let rows: Vec<Vec<Cyclotomic>> = (0..ech.rank()).map(|r| ech.matrix.row(r).to_vec()).collect();
    Ok(Matrix::from_columns(&rows, module.dim(), module.field()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Params;

    fn compose(x: &WreathElement, y: &WreathElement) -> WreathElement {
        // x above y
        let n = x.sigma.len();
        let m = 12;
        WreathElement {
            sigma: (0..n).map(|i| y.sigma[x.sigma[i]]).collect(),
            labels: (0..n).map(|i| (x.labels[i] + y.labels[x.sigma[i]]) % m).collect(),
        }
    }

    #[test]
    fn dimension_formula_and_regular_count() {
        for m in 1..=3usize {
            for n in 0..=4 {
                let mut total = 0u128;
                for l in MultiPartition::all(m, n) {
                    let s = WreathSpecht::new(&l, m as u32).unwrap();
                    let mut want: u128 = (1..=n as u128).product();
                    for c in l.components() {
                        want /= (1..=c.size() as u128).product::<u128>();
                        want *= c.standard_tableaux_count();
                    }
                    assert_eq!(s.dim() as u128, want);
                    total += want * want;
                }
                let fact: u128 = (1..=n as u128).product();
                assert_eq!(total, (m as u128).pow(n as u32) * fact);
            }
        }
    }

    #[test]
    fn representation_of_the_diagram_product() {
        for (m, n) in [(2usize, 3usize), (3, 2), (3, 3)] {
            let p = Params::generic(m as u32, 1);
            let alg = DiagramAlgebra::cyclotomic(n, &p, true);
            let group = WreathElement::all(m as u32, n);
            for l in MultiPartition::all(m, n) {
                let s = WreathSpecht::new(&l, m as u32).unwrap();
                for x in group.iter().step_by(5) {
                    for y in group.iter().step_by(7) {
                        let (_, d) = alg.mul_diagrams(&x.to_diagram(m as u32), &y.to_diagram(m as u32));
                        let xy = WreathElement::from_diagram(&d).unwrap();
                        let mut c = compose(x, y);
                        c.labels.iter_mut().for_each(|v| *v %= m as u32);
                        assert_eq!(c, xy);
                        assert_eq!(s.matrix(&xy), s.matrix(x).mul(&s.matrix(y)));
                    }
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let l: MultiPartition = "(1)|(1)".parse().unwrap();
        let s = WreathSpecht::new(&l, 2).unwrap();
        assert_eq!(s.dim(), 2);
        let t = WreathElement { sigma: vec![0, 1], labels: vec![1, 0] };
        let mat = s.matrix(&t);
        let mut diag: Vec<_> = (0..2).map(|i| mat[(i, i)].clone()).collect();
        diag.sort_by_key(|c| c.to_string());
        assert_eq!(diag, vec![Cyclotomic::from_int(2, -1), Cyclotomic::from_int(2, 1)]);
        let m1: MultiPartition = "(2,1)".parse().unwrap();
        assert_eq!(WreathSpecht::new(&m1, 1).unwrap().dim(), 2);
    }

    /// `Σ_λ dim 𝐒(λ) χ_λ(g) = |G| [g = 1]`.
    #[test]
    fn regular_character() {
        for (m, n) in [(1usize, 3usize), (2, 2), (2, 3)] {
            let reps: Vec<WreathSpecht> =
                MultiPartition::all(m, n).iter().map(|l| WreathSpecht::new(l, m as u32).unwrap()).collect();
            let order = (m as i64).pow(n as u32) * (1..=n as i64).product::<i64>();
            for g in WreathElement::all(m as u32, n).iter().step_by(3) {
                let mut acc = Cyclotomic::zero(m as u32);
                for r in &reps {
                    acc += &r.character(g).scale(&crate::Rational::from_integer((r.dim() as i64).into()));
                }
                let want = if *g == WreathElement::identity(n) { order } else { 0 };
                assert_eq!(acc, Cyclotomic::from_int(m as u32, want));
            }
        }
    }

    #[test]
    fn torus_idempotents() {
        for m in 1..=6u32 {
            let alg = DiagramAlgebra::cyclotomic(2, &Params::generic(m, 2), true);
            let ts: Vec<_> = (0..m).map(|r| idempotent_t(&alg, 1, r).unwrap()).collect();
            let mut sum = AlgebraElement::zero(m);
            for (r, x) in ts.iter().enumerate() {
                sum = sum.add(x);
                for (s, y) in ts.iter().enumerate() {
                    let xy = alg.mul(x, y);
                    if r == s {
                        assert_eq!(&xy, x);
                    } else {
                        assert!(xy.is_zero());
                    }
                }
            }
            assert_eq!(sum, alg.one());
        }
        let alg = DiagramAlgebra::cyclotomic(1, &Params::generic(1, 2), true);
        assert_eq!(idempotent_t(&alg, 1, 0).unwrap(), alg.one());
    }

    #[test]
    fn pi_omega_laws() {
        for (m, n) in [(2u32, 3usize), (3, 3), (4, 2)] {
            let alg = DiagramAlgebra::cyclotomic(n, &Params::generic(m, 4), true);
            let all = MComposition::all(m as usize, n);
            for omega in &all {
                let pi = pi_omega(&alg, omega).unwrap();
                assert_eq!(alg.mul(&pi, &pi), pi);
                for other in all.iter().filter(|o| *o != omega) {
                    assert!(alg.mul(&pi, &pi_omega(&alg, other).unwrap()).is_zero());
                }
                for (i, r) in omega_residues(&omega) {
                    for k in 0..m as i64 {
                        let t = alg.element(alg.t_label(i + 1, k).unwrap());
                        let lhs = alg.mul(&alg.mul(&pi, &t), &pi);
                        assert_eq!(lhs, pi.scale(&Cyclotomic::xi_pow(m, -k * r as i64)));
                    }
                }
            }
        }
    }

    #[test]
    fn truncated_specht_modules() {
        for (m, n) in [(2usize, 2usize), (2, 3), (3, 3)] {
            for l in MultiPartition::all(m, n) {
                let s = WreathSpecht::new(&l, m as u32).unwrap();
                for omega in MComposition::all(m, n) {
                    let img = truncate_specht(&s, &omega).unwrap();
                    if omega != l.shape() {
                        assert_eq!(img.cols(), 0);
                        continue;
                    }
                    let want: usize = l.components().iter().map(|p| p.standard_tableaux_count() as usize).product();
                    assert_eq!(img.cols(), want);
                    // characters of block permutations agree with the outer tensor product
                    let mut sub = crate::linalg::Subspace::new(s.dim(), m as u32);
                    for c in 0..img.cols() {
                        sub.insert(img.column(c));
                    }
                    for g in WreathElement::all(1, n) {
                        let blocks = omega.block_of();
                        if (0..n).any(|i| blocks[g.sigma[i]] != blocks[i]) {
                            continue;
                        }
                        let mat = s.matrix(&g);
                        let mut tr = Cyclotomic::zero(m as u32);
                        for c in 0..img.cols() {
                            let v = mat.mul_vec(&img.column(c));
                            tr += &sub.coordinates(&v).unwrap()[c];
                        }
                        let mut want = Cyclotomic::one(m as u32);
                        for r in 0..m {
                            // content at bottom sigma[i] moves to top i
                            let range = omega.block(r);
                            let mut inv = vec![0; range.len()];
                            for i in range.clone() {
                                inv[g.sigma[i] - range.start] = i - range.start;
                            }
                            let f = SymSpecht::new(l.component(r), m as u32);
                            want = &want * &f.character(&inv);
                        }
                        assert_eq!(tr, want);
                    }
                }
            }
        }
    }
}
