//! Cell (standard) modules `Δ_n(λ) = V ⊗ 𝐒(λ)` and the functors between
//! different `n`: localisation by `e_{n−2}`, signed restriction and signed
//! induction.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::combinatorics::MultiPartition;
use crate::diagrams::{Diagram, DiagramAlgebra, RawStrand};
use crate::error::{invalid, Error, Result};
use crate::linalg::{Matrix, RowEchelon, Subspace};
use crate::modules::{Module, RepMatrices};
use crate::scalars::Cyclotomic;
use crate::wreath::{WreathElement, WreathSpecht};

const FREE: u8 = u8::MAX;

/// Top half of a diagram: labelled arcs among `n` nodes, the rest free.
/// Arc labels are read from the left end to the right end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dangle {
    partner: Vec<u8>,
    label: Vec<u8>,
}

impl Dangle {
    pub fn n(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, k: usize) -> Option<usize> {
        (self.partner[k] != FREE).then_some(self.partner[k] as usize)
    }

    pub fn label(&self, k: usize) -> u32 {
        self.label[k] as u32
    }

    pub fn free_nodes(&self) -> Vec<usize> {
        (0..self.n()).filter(|&k| self.partner[k] == FREE).collect()
    }

    pub fn arcs(&self) -> usize {
        (self.n() - self.free_nodes().len()) / 2
    }
}

impl fmt::Display for Dangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for k in 0..self.n() {
            match self.partner(k) {
                None => parts.push(format!("{}", k + 1)),
                Some(p) if p > k => parts.push(format!("{}-{}:{}", k + 1, p + 1, self.label[k])),
                _ => {}
            }
        }
        write!(f, "<{}>", parts.join(" "))
    }
}

/// Dangles of `alg` with free nodes of colour `c` counted by `free[c]`
/// (single-colour algebras: `free[0]` free nodes), sorted.
pub fn dangles_with(alg: &DiagramAlgebra, free: &[usize]) -> Vec<Dangle> {
    let n = alg.n();
    let m = alg.m();
    let colors = alg.colors().to_vec();
    let tau = alg.tau().to_vec();
    let mut out = Vec::new();
    let mut partner = vec![FREE - 1; n];
    let mut label = vec![0u8; n];
    let mut left = free.to_vec();
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        colors: &[u8],
        tau: &[u8],
        m: u32,
        partner: &mut Vec<u8>,
        label: &mut Vec<u8>,
        left: &mut Vec<usize>,
        out: &mut Vec<Dangle>,
    ) {
        let n = partner.len();
        if k == n {
            if left.iter().all(|&x| x == 0) {
                out.push(Dangle {
                    partner: partner.clone(),
                    label: label.clone(),
                });
            }
            return;
        }
        if partner[k] != FREE - 1 {
            go(k + 1, colors, tau, m, partner, label, left, out);
            return;
        }
        let c = colors[k] as usize;
        if left[c] > 0 {
            left[c] -= 1;
            partner[k] = FREE;
            go(k + 1, colors, tau, m, partner, label, left, out);
            partner[k] = FREE - 1;
            left[c] += 1;
        }
        for j in k + 1..n {
            if partner[j] == FREE - 1 && colors[j] == tau[c] {
                partner[k] = j as u8;
                partner[j] = k as u8;
                for l in 0..m {
                    label[k] = l as u8;
                    label[j] = l as u8;
                    go(k + 1, colors, tau, m, partner, label, left, out);
                }
                label[k] = 0;
                label[j] = 0;
                partner[j] = FREE - 1;
                partner[k] = FREE - 1;
            }
        }
    }
    go(0, &colors, &tau, m, &mut partner, &mut label, &mut left, &mut out);
    out.sort();
    out
}

/// Dangles with `l` arcs for `B_n^m`: there are `C(n,2l)(2l−1)!! m^l`.
pub fn dangles(alg: &DiagramAlgebra, l: usize) -> Vec<Dangle> {
    if 2 * l > alg.n() {
        return Vec::new();
    }
    dangles_with(alg, &[alg.n() - 2 * l])
}

/// Result of placing a diagram on top of a dangle.
#[derive(Clone, Debug)]
pub struct DangleProduct {
    pub coeff: Cyclotomic,
    pub dangle: Dangle,
    /// New free node `a` (in left-to-right order) runs to old free node
    /// `sigma[a]` collecting `labels[a]`.
    pub through: WreathElement,
}

/// `X · d`, or `None` when free nodes of `d` get joined to each other.
pub fn act_on_dangle(alg: &DiagramAlgebra, x: &Diagram, d: &Dangle) -> Option<DangleProduct> {
    let n = alg.n();
    let m = alg.m() as i64;
    let oriented = alg.is_oriented();
    let sgn = |from: usize, to: usize, l: u32| -> i64 {
        if !oriented || from < to {
            l as i64
        } else {
            -(l as i64)
        }
    };
    let old_free = d.free_nodes();
    let free_pos: HashMap<usize, usize> = old_free.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut visited_mid = vec![false; n];
    let mut visited_top = vec![false; n];
    let mut partner = vec![FREE; n];
    let mut label = vec![0u8; n];
    let mut ends: Vec<(usize, usize, u32)> = Vec::new();
    for u in 0..n {
        if visited_top[u] {
            continue;
        }
        visited_top[u] = true;
        let mut cur = x.partner(u);
        let mut acc = sgn(u, cur, x.label(u));
        loop {
            if cur < n {
                visited_top[cur] = true;
                let l = if oriented && cur < u { -acc } else { acc };
                let l = l.rem_euclid(m) as u8;
                partner[u] = cur as u8;
                partner[cur] = u as u8;
                label[u] = l;
                label[cur] = l;
                break;
            }
            let k = cur - n;
            visited_mid[k] = true;
            match d.partner(k) {
                None => {
                    ends.push((u, free_pos[&k], acc.rem_euclid(m) as u32));
                    break;
                }
                Some(k2) => {
                    visited_mid[k2] = true;
                    acc += sgn(k, k2, d.label(k));
                    let node = n + k2;
                    cur = x.partner(node);
                    acc += sgn(node, cur, x.label(node));
                }
            }
        }
    }
    if ends.len() != old_free.len() {
        return None;
    }
    let mut coeff = Cyclotomic::one(alg.field());
    for k in 0..n {
        if visited_mid[k] {
            continue;
        }
        // a loop through the middle row: down into d first
        let mut acc = 0i64;
        let mut cur = k;
        loop {
            visited_mid[cur] = true;
            let k2 = d.partner(cur)?;
            visited_mid[k2] = true;
            acc += sgn(cur, k2, d.label(cur));
            let node = n + k2;
            let next = x.partner(node);
            acc += sgn(node, next, x.label(node));
            cur = next - n;
            if cur == k {
                break;
            }
        }
        let p = alg.loop_parameter(alg.colors()[k] as usize, acc.rem_euclid(m) as u32);
        if p.is_zero() {
            coeff = Cyclotomic::zero(alg.field());
        } else {
            coeff *= p;
        }
    }
    ends.sort();
    let through = WreathElement {
        sigma: ends.iter().map(|e| e.1).collect(),
        labels: ends.iter().map(|e| e.2).collect(),
    };
    Some(DangleProduct {
        coeff,
        dangle: Dangle { partner, label },
        through,
    })
}

/// `Δ_n(λ)` over `alg`. For `B_n^m` (labels mod `m > 1`, or one colour) `λ`
/// is an `m`-multipartition with `n − |λ|` even; for coloured classical
/// algebras `λ` has one partition per colour and `|λ^c|` free nodes of
/// colour `c`.
pub struct CellModule {
    algebra: DiagramAlgebra,
    label: MultiPartition,
    dangles: Vec<Dangle>,
    index: HashMap<Dangle, usize>,
    specht: WreathSpecht,
}

impl fmt::Debug for CellModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CellModule({}, dim {})", self.label, self.dim())
    }
}

impl CellModule {
    pub fn new(algebra: &DiagramAlgebra, label: &MultiPartition) -> Result<Self> {
        let n = algebra.n();
        let colored = algebra.tau().len() > 1;
        if label.size() > n || (n - label.size()) % 2 != 0 {
            return invalid(format!("{label} does not index a cell module for n = {n}"));
        }
        let (dangles, specht) = if colored {
            if label.m() != algebra.tau().len() {
                return invalid("one partition per colour is required");
            }
            if algebra.colors().windows(2).any(|w| w[0] > w[1]) {
                return invalid("colours must be arranged in increasing blocks");
            }
            let free: Vec<usize> = label.shape().entries().to_vec();
            (
                dangles_with(algebra, &free),
                WreathSpecht::fixed_blocks(label, algebra.field())?,
            )
        } else {
            if label.m() as u32 != algebra.m() {
                return invalid(format!("{label} is not an {}-multipartition", algebra.m()));
            }
            (
                dangles(algebra, (n - label.size()) / 2),
                WreathSpecht::new(label, algebra.field())?,
            )
        };
        let index = dangles.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(CellModule {
            algebra: algebra.clone(),
            label: label.clone(),
            dangles,
            index,
            specht,
        })
    }

    pub fn cell_label(&self) -> &MultiPartition {
        &self.label
    }

    pub fn dangles(&self) -> &[Dangle] {
        &self.dangles
    }

    pub fn specht(&self) -> &WreathSpecht {
        &self.specht
    }

    /// Basis vector index of `(dangle, Specht basis vector)`.
    pub fn basis_index(&self, dangle: usize, v: usize) -> usize {
        dangle * self.specht.dim() + v
    }

    /// Matrix of `x` as sparse columns.
    fn columns(&self, x: &Diagram) -> Vec<Vec<(usize, Cyclotomic)>> {
        let sd = self.specht.dim();
        let mut cols = vec![Vec::new(); self.dim()];
        for (di, d) in self.dangles.iter().enumerate() {
            let Some(p) = act_on_dangle(&self.algebra, x, d) else {
                continue;
            };
            if p.coeff.is_zero() {
                continue;
            }
            let target = self.index[&p.dangle];
            for v in 0..sd {
                cols[di * sd + v] = self
                    .specht
                    .act_column(&p.through, v)
                    .into_iter()
                    .map(|(row, c)| (target * sd + row, &c * &p.coeff))
                    .collect();
            }
        }
        cols
    }
}

impl Module for CellModule {
    fn algebra(&self) -> &DiagramAlgebra {
        &self.algebra
    }

    fn dim(&self) -> usize {
        self.dangles.len() * self.specht.dim()
    }

    fn act(&self, d: &Diagram) -> Matrix {
        let dim = self.dim();
        let mut out = Matrix::zeros(dim, dim, self.algebra.field());
        for (j, col) in self.columns(d).into_iter().enumerate() {
            for (i, c) in col {
                out[(i, j)] = c;
            }
        }
        out
    }

    fn label(&self) -> String {
        format!("Delta{}", self.label)
    }
}

impl CellModule {
    /// Diagram with top half `top`, bottom half `bottom` and free nodes
    /// joined in order by unlabelled through strands.
    fn joining_diagram(&self, top: &Dangle, bottom: &Dangle) -> Diagram {
        let n = self.algebra.n();
        let mut strands = Vec::new();
        for (row, d) in [(0, top), (n, bottom)] {
            for k in 0..n {
                if let Some(p) = d.partner(k) {
                    if p > k {
                        strands.push(RawStrand {
                            from: row + k,
                            to: row + p,
                            label: d.label(k) as i64,
                        });
                    }
                }
            }
        }
        for (a, b) in top.free_nodes().into_iter().zip(bottom.free_nodes()) {
            strands.push(RawStrand { from: a, to: n + b, label: 0 });
        }
        Diagram::from_strands(n, self.algebra.m(), &strands).expect("dangles match up")
    }

    /// Radical of the cell form: vectors killed by every diagram with as
    /// many through strands as `Δ` has free nodes. `L(λ) = Δ(λ)/rad`.
    pub fn form_radical(&self) -> Subspace {
        let field = self.algebra.field();
        let dim = self.dim();
        let mut rows = Vec::new();
        if let Some(top) = self.dangles.first() {
            for b in &self.dangles {
                let x = self.joining_diagram(top, b);
                let mat = self.act(&x);
                for r in 0..dim {
                    let row = mat.row(r);
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row.to_vec());
                    }
                }
            }
        }
        let mut sub = Subspace::new(dim, field);
        let kernel = if rows.is_empty() {
            (0..dim)
                .map(|i| {
                    let mut v = vec![Cyclotomic::zero(field); dim];
                    v[i] = Cyclotomic::one(field);
                    v
                })
                .collect()
        } else {
            Matrix::from_rows(rows, field).nullspace()
        };
        for v in kernel {
            sub.insert(v);
        }
        sub
    }
}

/// Labels of the cell modules of `alg`, largest first: `Λ(m,n)` for `B_n^m`,
/// one partition per colour (with matching free-node counts) for coloured
/// classical algebras.
pub fn cell_labels(alg: &DiagramAlgebra) -> Vec<MultiPartition> {
    let n = alg.n();
    let colors = alg.tau().len();
    if colors == 1 {
        return MultiPartition::lambda(alg.m() as usize, n);
    }
    let mut out = Vec::new();
    let mut k = n as isize;
    while k >= 0 {
        for lam in MultiPartition::all(colors, k as usize) {
            if !dangles_with(alg, lam.shape().entries()).is_empty() {
                out.push(lam);
            }
        }
        k -= 2;
    }
    out
}

fn column_space(a: &Matrix) -> Vec<Vec<Cyclotomic>> {
    let ech = RowEchelon::new(a.transpose());
    (0..ech.rank()).map(|r| ech.matrix.row(r).to_vec()).collect()
}

/// `e_{n−2} M` as a module over `B_{n−2}`. `zero_form` selects the `δ = 0`
/// form of the idempotent (needs `n ≥ 3`); the other form needs some `δ_r ≠ 0`.
pub fn localise(module: Arc<dyn Module>, zero_form: bool) -> Result<RepMatrices> {
    let alg = module.algebra().clone();
    let n = alg.n();
    if n < 2 {
        return invalid("localisation needs n >= 2");
    }
    if !zero_form && alg.parameters_vanish() {
        return Err(Error::Unavailable(
            "all parameters vanish: use the delta = 0 form of e_{n-2}".into(),
        ));
    }
    let e = if zero_form {
        alg.e_localising_zero()?
    } else {
        alg.e_localising()?
    };
    let small = alg.resized(n - 2)?;
    let basis = column_space(&module.act_element(&e));
    let label = format!("F({})", module.label());
    let big = alg.clone();
    Ok(RepMatrices::restrict(module, small, basis, label, move |d| {
        let x = big.lift_from_smaller(d, zero_form).expect("diagram of B_{n-2}");
        big.mul(&big.mul(&e, &x), &e)
    }))
}

/// `ξ^r-res M = T_n^r M` as a module over `B_{n−1}`.
pub fn signed_res(module: Arc<dyn Module>, r: u32) -> Result<RepMatrices> {
    let alg = module.algebra().clone();
    let n = alg.n();
    if n < 1 || r >= alg.m() {
        return invalid("signed restriction needs n >= 1 and r < m");
    }
    let t = alg.torus_projection(&alg.one(), n - 1, r);
    let basis = column_space(&module.act_element(&t));
    let small = alg.resized(n - 1)?;
    let label = format!("res_{r}({})", module.label());
    let big = alg.clone();
    Ok(RepMatrices::restrict(module, small, basis, label, move |d| {
        big.element(d.embed())
    }))
}

/// `ξ^r-ind M = B_{n+1} ⊗_{B_n ⊗ B_1} (M ⊠ k_r)`, where `t_{n+1}` acts on
/// `k_r` by `ξ^{−r}`. Built as an explicit quotient of
/// `⊕_{orbit reps} M` by the balancing relations.
pub fn signed_ind(module: Arc<dyn Module>, r: u32) -> Result<RepMatrices> {
    let small = module.algebra().clone();
    let n = small.n();
    if r >= small.m() {
        return invalid("signed induction needs r < m");
    }
    let big = small.resized(n + 1)?;
    let field = big.field();
    let dv = module.dim();
    let label = format!("ind_{r}({})", module.label());
    if dv == 0 {
        return Ok(RepMatrices::zero(big, label));
    }

    // generators of B_n ⊗ B_1 inside B_{n+1}, with their matrices on M ⊠ k_r
    let mut group: Vec<(Diagram, Matrix)> = Vec::new();
    let mut other: Vec<(Diagram, Matrix)> = Vec::new();
    for (_, g) in small.generators() {
        let mat = module.act(&g);
        if g.through_count() == n {
            group.push((g.embed(), mat));
        } else {
            other.push((g.embed(), mat));
        }
    }
    if big.m() > 1 {
        let t = big.t_label(n + 1, 1)?;
        group.push((t, Matrix::identity(dv, field).scale(&big.xi_pow(-(r as i64)))));
    }

    // right orbits under the group part: a = rep · h_a, a ⊗ v = rep ⊗ h_a v
    let basis = big.basis();
    let mut orbit: HashMap<Diagram, (usize, Matrix)> = HashMap::new();
    let mut reps: Vec<Diagram> = Vec::new();
    let mut relations: Vec<(usize, Matrix)> = Vec::new();
    for a in &basis {
        if orbit.contains_key(a) {
            continue;
        }
        let ri = reps.len();
        reps.push(a.clone());
        orbit.insert(a.clone(), (ri, Matrix::identity(dv, field)));
        let mut queue = vec![a.clone()];
        while let Some(b) = queue.pop() {
            let hb = orbit[&b].1.clone();
            for (g, mg) in &group {
                let (c, b2) = big.mul_diagrams(&b, g);
                debug_assert!(c.is_one());
                let h = hb.mul(mg);
                match orbit.get(&b2) {
                    Some((_, old)) => {
                        let diff = old.sub(&h);
                        if !diff.is_zero() {
                            relations.push((ri, diff));
                        }
                    }
                    None => {
                        orbit.insert(b2.clone(), (ri, h));
                        queue.push(b2);
                    }
                }
            }
        }
    }
    let total = reps.len() * dv;
    let mut rel = Subspace::new(total, field);
    for (ri, mat) in &relations {
        for j in 0..dv {
            let mut v = vec![Cyclotomic::zero(field); total];
            for i in 0..dv {
                v[ri * dv + i] = mat[(i, j)].clone();
            }
            rel.insert(v);
        }
    }
    // a e ⊗ v = a ⊗ e v
    for a in &basis {
        let (ra, ha) = &orbit[a];
        for (e, me) in &other {
            let (c, ae) = big.mul_diagrams(a, e);
            let (rb, hb) = &orbit[&ae];
            let rhs = ha.mul(me);
            for j in 0..dv {
                let mut v = vec![Cyclotomic::zero(field); total];
                if !c.is_zero() {
                    for i in 0..dv {
                        v[rb * dv + i] += &(&hb[(i, j)] * &c);
                    }
                }
                for i in 0..dv {
                    v[ra * dv + i] -= &rhs[(i, j)];
                }
                if v.iter().any(|x| !x.is_zero()) {
                    rel.insert(v);
                }
            }
        }
    }
    let comp = rel.complement_indices();
    let dim = comp.len();
    let rel = Arc::new(rel);
    let orbit = Arc::new(orbit);
    let reps = Arc::new(reps);
    let alg = big.clone();
    Ok(RepMatrices::new(big, dim, label, move |x| {
        let mut out = Matrix::zeros(dim, dim, field);
        for (j, &c) in comp.iter().enumerate() {
            let (ri, vi) = (c / dv, c % dv);
            let (coeff, d) = alg.mul_diagrams(x, &reps[ri]);
            if coeff.is_zero() {
                continue;
            }
            let (rd, hd) = &orbit[&d];
            let mut v = vec![Cyclotomic::zero(field); total];
            for i in 0..dv {
                v[rd * dv + i] = &hd[(i, vi)] * &coeff;
            }
            for (i, q) in rel.quotient_coordinates(&v).into_iter().enumerate() {
                out[(i, j)] = q;
            }
        }
        out
    }))
}

/// `ξ^r-ind Δ_n(λ)` computed as `ξ^{m−r}-res Δ_{n+2}(λ)`.
pub fn signed_ind_standard(
    alg: &DiagramAlgebra,
    label: &MultiPartition,
    r: u32,
) -> Result<RepMatrices> {
    let m = alg.m();
    let big = alg.resized(alg.n() + 2)?;
    let delta = Arc::new(CellModule::new(&big, label)?);
    signed_res(delta, (m - r) % m)
}

/// Labels of the standard filtration of a signed restriction or induction of
/// `Δ(λ)`: a submodule filtered by `sub`, with quotient filtered by `top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedLabels {
    pub sub: Vec<MultiPartition>,
    pub top: Vec<MultiPartition>,
}

impl SignedLabels {
    /// All labels, bottom first: a linear extension of dominance (more boxes
    /// dominates) within each layer, so the top quotient comes last.
    pub fn filtration(&self) -> Vec<MultiPartition> {
        let mut out = dominance_sorted(self.sub.clone());
        out.extend(dominance_sorted(self.top.clone()));
        out
    }
}

fn dominance_sorted(mut rest: Vec<MultiPartition>) -> Vec<MultiPartition> {
    rest.sort();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let i = (0..rest.len())
            .find(|&i| {
                !rest
                    .iter()
                    .any(|b| b != &rest[i] && b.extended_dominated_by(&rest[i]).unwrap_or(false))
            })
            .expect("dominance is acyclic");
        out.push(rest.remove(i));
    }
    out
}

fn dual_residue(m: usize, r: usize, oriented: bool) -> usize {
    if oriented {
        (m - r) % m
    } else {
        r
    }
}

/// Filtration labels of `ξ^r-res Δ_n(λ)`: boxes of sign `ξ^r` removed, boxes
/// of sign `ξ^{m−r}` (unoriented: `ξ^r`) added.
pub fn res_labels(lambda: &MultiPartition, n: usize, r: usize, oriented: bool) -> SignedLabels {
    let m = lambda.m();
    let sub = lambda
        .removable(r)
        .into_iter()
        .map(|b| lambda.remove_box(b).expect("removable"))
        .collect();
    let top = if lambda.size() + 2 <= n {
        lambda
            .addable(dual_residue(m, r, oriented))
            .into_iter()
            .map(|b| lambda.add_box(b).expect("addable"))
            .collect()
    } else {
        Vec::new()
    };
    SignedLabels { sub, top }
}

/// Filtration labels of `ξ^r-ind Δ_n(λ)` over `B_{n+1}`.
pub fn ind_labels(lambda: &MultiPartition, r: usize, oriented: bool) -> SignedLabels {
    let m = lambda.m();
    let sub = lambda
        .removable(dual_residue(m, r, oriented))
        .into_iter()
        .map(|b| lambda.remove_box(b).expect("removable"))
        .collect();
    let top = lambda
        .addable(r)
        .into_iter()
        .map(|b| lambda.add_box(b).expect("addable"))
        .collect();
    SignedLabels { sub, top }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::hom_space;
    use crate::scalars::Params;

    fn alg(m: u32, n: usize) -> DiagramAlgebra {
        DiagramAlgebra::cyclotomic(n, &Params::generic(m, 7), true)
    }

    fn same_character(a: &dyn Module, b: &dyn Module) -> bool {
        a.dim() == b.dim() && a.algebra().basis().iter().all(|d| a.character(d) == b.character(d))
    }

    #[test]
    fn dangle_counts() {
        fn dfact(k: usize) -> usize {
            (1..=k).filter(|x| x % 2 == 1).product()
        }
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for m in 1..=3u32 {
            for n in 0..=5 {
                for l in 0..=n / 2 {
                    let want = binom(n, 2 * l) * dfact(2 * l) * (m as usize).pow(l as u32);
                    assert_eq!(dangles(&alg(m, n), l).len(), want, "m={m} n={n} l={l}");
                }
            }
        }
    }

    #[test]
    fn cell_modules_are_representations() {
        for (m, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let a = alg(m, n);
            let basis = a.basis();
            let gens = a.generators();
            for lam in MultiPartition::lambda(m as usize, n) {
                let cell = CellModule::new(&a, &lam).unwrap();
                for (_, g) in &gens {
                    let mg = cell.act(g);
                    for x in basis.iter().step_by(7) {
                        let (c, z) = a.mul_diagrams(g, x);
                        let lhs = mg.mul(&cell.act(x));
                        let rhs = cell.act(&z).scale(&c);
                        assert_eq!(lhs, rhs, "m={m} n={n} λ={lam} g={g} x={x}");
                    }
                }
                assert!(cell.act(&Diagram::identity(n)) == Matrix::identity(cell.dim(), a.field()));
            }
        }
    }

    #[test]
    fn walled_and_product_cell_modules() {
        let d = Cyclotomic::from_int(1, 3);
        let wb = DiagramAlgebra::walled_brauer(2, 2, d);
        let basis = wb.basis();
        let mut total = 0;
        for lam in [
            MultiPartition::from_parts(&[&[2], &[1, 1]]).unwrap(),
            MultiPartition::from_parts(&[&[1], &[1]]).unwrap(),
            MultiPartition::from_parts(&[&[], &[]]).unwrap(),
        ] {
            let cell = CellModule::new(&wb, &lam).unwrap();
            total += cell.dim();
            for x in basis.iter().step_by(3) {
                for y in basis.iter().step_by(5) {
                    let (c, z) = wb.mul_diagrams(x, y);
                    assert_eq!(cell.act(x).mul(&cell.act(y)), cell.act(&z).scale(&c));
                }
            }
        }
        // (1)|(1): one arc across the wall, 2·2 ways; ()|(): two arcs, 2 ways
        assert_eq!(total, 1 + 4 + 2);
    }

    #[test]
    fn localisation_of_standards() {
        for (m, n) in [(1, 4), (2, 3), (3, 3)] {
            let a = alg(m, n);
            let small = a.resized(n - 2).unwrap();
            for lam in MultiPartition::lambda(m as usize, n) {
                let cell: Arc<dyn Module> = Arc::new(CellModule::new(&a, &lam).unwrap());
                for zero_form in [false, true] {
                    let f = localise(cell.clone(), zero_form).unwrap();
                    if lam.size() == n {
                        assert_eq!(f.dim(), 0);
                    } else {
                        let want = CellModule::new(&small, &lam).unwrap();
                        assert!(same_character(&f, &want), "m={m} n={n} λ={lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn signed_restriction_and_induction() {
        for (m, n) in [(2, 2), (3, 1), (3, 2)] {
            let a = alg(m, n);
            let bigger = a.resized(n + 1).unwrap();
            for lam in MultiPartition::lambda(m as usize, n) {
                let cell: Arc<dyn Module> = Arc::new(CellModule::new(&a, &lam).unwrap());
                for r in 0..m {
                    let ind = signed_ind(cell.clone(), r).unwrap();
                    let via = signed_ind_standard(&a, &lam, r).unwrap();
                    assert!(same_character(&ind, &via), "m={m} n={n} λ={lam} r={r}");
                    // Frobenius: Hom(ind M, N) = Hom(M, res N) on standards
                    for mu in MultiPartition::lambda(m as usize, n + 1) {
                        let nmod: Arc<dyn Module> = Arc::new(CellModule::new(&bigger, &mu).unwrap());
                        let res = signed_res(nmod.clone(), r).unwrap();
                        assert_eq!(
                            hom_space(&ind, nmod.as_ref()).len(),
                            hom_space(cell.as_ref(), &res).len(),
                            "m={m} n={n} λ={lam} μ={mu} r={r}"
                        );
                    }
                }
            }
        }
    }

    fn standards_sum(alg: &DiagramAlgebra, labels: &SignedLabels) -> Vec<Arc<dyn Module>> {
        labels
            .filtration()
            .iter()
            .map(|l| -> Arc<dyn Module> { Arc::new(CellModule::new(alg, l).unwrap()) })
            .collect()
    }

    fn matches_sum(module: &dyn Module, parts: &[Arc<dyn Module>]) -> bool {
        let dim: usize = parts.iter().map(|p| p.dim()).sum();
        dim == module.dim()
            && module.algebra().basis().iter().all(|d| {
                let mut acc = Cyclotomic::zero(module.algebra().field());
                for p in parts {
                    acc += &p.character(d);
                }
                acc == module.character(d)
            })
    }

    #[test]
    fn signed_functors_on_standards() {
        for (m, n) in [(2, 2), (2, 3), (3, 2)] {
            let a = alg(m, n);
            let smaller = a.resized(n - 1).unwrap();
            for lam in MultiPartition::lambda(m as usize, n) {
                let cell: Arc<dyn Module> = Arc::new(CellModule::new(&a, &lam).unwrap());
                let mut total = 0;
                for r in 0..m as usize {
                    let res = signed_res(cell.clone(), r as u32).unwrap();
                    let labels = res_labels(&lam, n, r, true);
                    total += res.dim();
                    assert!(matches_sum(&res, &standards_sum(&smaller, &labels)), "res m={m} n={n} λ={lam} r={r}");
                }
                assert_eq!(total, cell.dim());
            }
            for lam in MultiPartition::lambda(m as usize, n - 1) {
                let cell: Arc<dyn Module> = Arc::new(CellModule::new(&smaller, &lam).unwrap());
                for r in 0..m as usize {
                    let ind = signed_ind(cell.clone(), r as u32).unwrap();
                    let labels = ind_labels(&lam, r, true);
                    assert!(matches_sum(&ind, &standards_sum(&a, &labels)), "ind m={m} n={n} λ={lam} r={r}");
                }
            }
        }
    }

    #[test]
    fn filtration_order() {
        for lam in MultiPartition::lambda(2, 4) {
            for r in 0..2 {
                for labels in [res_labels(&lam, 4, r, true), ind_labels(&lam, r, true)] {
                    let f = labels.filtration();
                    for i in 0..f.len() {
                        for j in i + 1..f.len() {
                            assert!(!(f[j] != f[i] && f[j].extended_dominated_by(&f[i]).unwrap()));
                        }
                    }
                }
            }
        }
    }
}
