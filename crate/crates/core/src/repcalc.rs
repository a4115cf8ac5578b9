//! Characteristic-zero oracle: radical of the algebra, simple heads of the
//! cell modules, decomposition matrices and blocks.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::cellular::{cell_labels, CellModule};
use crate::combinatorics::{order_leq, MultiPartition, Variant};
use crate::diagrams::{AlgebraElement, Diagram, DiagramAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::modules::{Module, RepMatrices};
use crate::scalars::Cyclotomic;

/// Largest algebra (number of basis diagrams) handled here.
pub const MAX_ALGEBRA_DIM: usize = 2000;
/// Largest `Σ_λ dim Δ(λ)`.
pub const MAX_MODEL_DIM: usize = 500;

/// The algebra acting on `⊕_λ Δ(λ)`.
pub struct MatrixAlgebra {
    pub algebra: DiagramAlgebra,
    pub basis: Vec<Diagram>,
    pub modules: Vec<Arc<CellModule>>,
    /// Ambient dimension `Σ dim Δ(λ)`.
    pub ambient_dim: usize,
    /// Dimension of the span of the images of the basis diagrams.
    pub span_dim: usize,
}

impl MatrixAlgebra {
    pub fn is_faithful(&self) -> bool {
        self.span_dim == self.basis.len()
    }

    /// Character of `⊕Δ` on every basis diagram.
    pub fn character(&self) -> Vec<Cyclotomic> {
        let f = self.algebra.field();
        self.basis
            .iter()
            .map(|d| {
                self.modules.iter().fold(Cyclotomic::zero(f), |acc, m| &acc + &m.character(d))
            })
            .collect()
    }
}

fn check_scale(alg: &DiagramAlgebra) -> Result<Vec<Diagram>> {
    let basis = alg.basis();
    if basis.len() > MAX_ALGEBRA_DIM {
        return Err(Error::Scale {
            what: "algebra dimension",
            size: basis.len(),
            limit: MAX_ALGEBRA_DIM,
        });
    }
    Ok(basis)
}

/// `⊕_λ Δ(λ)` with the span of the image of the diagram basis.
pub fn faithful_model(alg: &DiagramAlgebra) -> Result<MatrixAlgebra> {
    let basis = check_scale(alg)?;
    let modules: Vec<Arc<CellModule>> = cell_labels(alg)
        .iter()
        .map(|l| CellModule::new(alg, l).map(Arc::new))
        .collect::<Result<_>>()?;
    let ambient_dim: usize = modules.iter().map(|m| m.dim()).sum();
    if ambient_dim > MAX_MODEL_DIM {
        return Err(Error::Scale {
            what: "sum of cell module dimensions",
            size: ambient_dim,
            limit: MAX_MODEL_DIM,
        });
    }
    let flat_len: usize = modules.iter().map(|m| m.dim() * m.dim()).sum();
    let mut span = Subspace::new(flat_len, alg.field());
    for d in &basis {
        let mut v = Vec::with_capacity(flat_len);
        for m in &modules {
            v.extend(m.act(d).entries().iter().cloned());
        }
        span.insert(v);
        if span.dim() == basis.len() {
            break;
        }
    }
    Ok(MatrixAlgebra {
        algebra: alg.clone(),
        span_dim: span.dim(),
        basis,
        modules,
        ambient_dim,
    })
}

/// The Jacobson radical as a subspace of the algebra (diagram coordinates).
#[derive(Clone, Debug)]
pub struct Radical {
    pub basis: Vec<Diagram>,
    pub space: Subspace,
}

impl Radical {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn elements(&self, field: u32) -> Vec<AlgebraElement> {
        self.space
            .basis()
            .iter()
            .map(|v| {
                let mut x = AlgebraElement::zero(field);
                for (d, c) in self.basis.iter().zip(v) {
                    if !c.is_zero() {
                        x.add_term(d.clone(), c.clone());
                    }
                }
                x
            })
            .collect()
    }
}

fn coords(x: &AlgebraElement, index: &HashMap<Diagram, usize>, field: u32) -> Vec<Cyclotomic> {
    let mut v = vec![Cyclotomic::zero(field); index.len()];
    for (d, c) in x {
        v[index[d]] += c;
    }
    v
}

/// Kernel of `(a, b) ↦ tr(ab)` on `⊕Δ`. Elements acting as zero on every
/// cell module kill every simple, so this is the radical even when the
/// model is not faithful.
pub fn radical(model: &MatrixAlgebra) -> Radical {
    let alg = &model.algebra;
    let f = alg.field();
    let chi = model.character();
    let index: HashMap<Diagram, usize> =
        model.basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
    let k = model.basis.len();
    let mut gram = Matrix::zeros(k, k, f);
    for i in 0..k {
        for j in i..k {
            let (c, z) = alg.mul_diagrams(&model.basis[i], &model.basis[j]);
            let v = &c * &chi[index[&z]];
            gram[(i, j)] = v.clone();
            gram[(j, i)] = v;
        }
    }
    let mut space = Subspace::new(k, f);
    for v in gram.nullspace() {
        space.insert(v);
    }
    Radical {
        basis: model.basis.clone(),
        space,
    }
}

/// Check that the radical is a two-sided ideal and nilpotent; returns the
/// nilpotency index.
pub fn verify_radical(alg: &DiagramAlgebra, rad: &Radical) -> Result<usize> {
    let f = alg.field();
    let index: HashMap<Diagram, usize> =
        rad.basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
    let elems = rad.elements(f);
    for (_, g) in alg.generators() {
        let g = alg.element(g);
        for x in &elems {
            for y in [alg.mul(&g, x), alg.mul(x, &g)] {
                if !rad.space.contains(&coords(&y, &index, f)) {
                    return Err(Error::Verification("radical is not an ideal".into()));
                }
            }
        }
    }
    let mut power = elems.clone();
    let mut k = 1;
    while !power.is_empty() {
        if k > rad.basis.len() + 1 {
            return Err(Error::Verification("radical is not nilpotent".into()));
        }
        let mut next = Subspace::new(rad.basis.len(), f);
        let mut next_elems = Vec::new();
        for x in &power {
            for y in &elems {
                let z = alg.mul(x, y);
                if next.insert(coords(&z, &index, f)) {
                    next_elems.push(z);
                }
            }
        }
        power = next_elems;
        k += 1;
    }
    Ok(k)
}

#[derive(Clone, Debug, Serialize)]
pub struct SemisimplicityReport {
    pub semisimple: bool,
    pub radical_dim: usize,
    pub algebra_dim: usize,
    pub faithful: bool,
}

pub fn semisimplicity_check(alg: &DiagramAlgebra) -> Result<SemisimplicityReport> {
    let model = faithful_model(alg)?;
    let rad = radical(&model);
    Ok(SemisimplicityReport {
        semisimple: rad.dim() == 0,
        radical_dim: rad.dim(),
        algebra_dim: model.basis.len(),
        faithful: model.is_faithful(),
    })
}

/// `[Δ(μ) : L(λ)]` with rows `μ` and columns `λ`, both indexed by `labels`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    pub labels: Vec<MultiPartition>,
    /// Whether `L(λ) ≠ 0`.
    pub simple: Vec<bool>,
    pub simple_dims: Vec<usize>,
    pub entries: Vec<Vec<u64>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, mu: &MultiPartition, lambda: &MultiPartition) -> Option<u64> {
        let i = self.labels.iter().position(|l| l == mu)?;
        let j = self.labels.iter().position(|l| l == lambda)?;
        Some(self.entries[i][j])
    }

    pub fn simple_count(&self) -> usize {
        self.simple.iter().filter(|&&s| s).count()
    }

    /// Every standard module has a nonzero simple head.
    pub fn quasi_hereditary(&self) -> bool {
        self.simple.iter().all(|&s| s)
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &e)| e == u64::from(i == j)))
    }

    /// Diagonal ones, and `[Δ(μ):L(λ)] ≠ 0` only for `μ ≤ λ`.
    pub fn respects_order(&self, variant: Variant) -> bool {
        let n = self.labels.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = self.entries[i][j];
                if i == j {
                    e == u64::from(self.simple[i])
                } else {
                    e == 0 || order_leq(&self.labels[i], &self.labels[j], variant)
                }
            })
        })
    }

    /// Blocks: connected components of the nonzero-entry relation.
    pub fn blocks(&self) -> Vec<Vec<MultiPartition>> {
        let n = self.labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..n {
            for j in 0..n {
                if self.entries[i][j] != 0 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<MultiPartition>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            let g = *slot.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(self.labels[i].clone());
        }
        groups
    }

    /// Block graph: one cluster per block, edges for nonzero off-diagonal entries.
    pub fn blocks_dot(&self) -> String {
        let mut s = String::from("graph blocks {\n");
        for (b, group) in self.blocks().iter().enumerate() {
            let _ = writeln!(s, "  subgraph cluster_{b} {{");
            for l in group {
                let _ = writeln!(s, "    \"{l}\";");
            }
            s.push_str("  }\n");
        }
        let n = self.labels.len();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.entries[i][j] != 0 {
                    let _ = writeln!(
                        s,
                        "  \"{}\" -- \"{}\" [label=\"{}\"];",
                        self.labels[i], self.labels[j], self.entries[i][j]
                    );
                }
            }
        }
        s.push_str("}\n");
        s
    }

    /// Rows `kind,r,s,parameter,standard,simple,multiplicity` for nonzero entries.
    pub fn csv_rows(&self, kind: &str, r: usize, s: usize, parameter: &str) -> Vec<[String; 7]> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e != 0 {
                    out.push([
                        kind.to_string(),
                        r.to_string(),
                        s.to_string(),
                        parameter.to_string(),
                        self.labels[i].to_string(),
                        self.labels[j].to_string(),
                        e.to_string(),
                    ]);
                }
            }
        }
        out
    }
}

pub const CSV_HEADER: [&str; 7] = ["kind", "r", "s", "parameter", "standard", "simple", "multiplicity"];

/// Simple head `L(λ) = Δ(λ)/(rad A)Δ(λ)`, or zero when the cell form on
/// `Δ(λ)` vanishes (then the head of `Δ(λ)` is some other `L(μ)`). The two
/// descriptions of the radical are checked against each other.
pub fn simple_head(cell: Arc<CellModule>, rad_elems: &[AlgebraElement]) -> Result<RepMatrices> {
    let f = cell.algebra().field();
    let label = format!("L{}", cell.cell_label());
    let form_rad = cell.form_radical();
    if form_rad.dim() == cell.dim() {
        return Ok(RepMatrices::zero(cell.algebra().clone(), label));
    }
    let mut sub = Subspace::new(cell.dim(), f);
    for r in rad_elems {
        let mat = cell.act_element(r);
        for j in 0..cell.dim() {
            sub.insert(mat.column(j));
        }
        if sub.dim() == cell.dim() {
            break;
        }
    }
    if sub.dim() != form_rad.dim() || !sub.basis().iter().all(|v| form_rad.contains(v)) {
        return Err(Error::Verification(format!(
            "radical of Delta{} disagrees with the cell form",
            cell.cell_label()
        )));
    }
    Ok(RepMatrices::quotient(cell, sub, label))
}

/// Decomposition matrix by solving `χ_{Δ(μ)} = Σ_λ d_{μλ} χ_{L(λ)}` exactly.
pub fn decomposition_matrix(alg: &DiagramAlgebra) -> Result<DecompositionMatrix> {
    let model = faithful_model(alg)?;
    let rad = radical(&model);
    let f = alg.field();
    let rad_elems = rad.elements(f);
    let labels: Vec<MultiPartition> =
        model.modules.iter().map(|m| m.cell_label().clone()).collect();
    let char_of = |m: &dyn Module| -> Vec<Cyclotomic> {
        model.basis.iter().map(|d| m.character(d)).collect()
    };
    let mut simple = Vec::new();
    let mut simple_dims = Vec::new();
    let mut chars = Subspace::new(model.basis.len(), f);
    let mut columns = Vec::new();
    for (j, cell) in model.modules.iter().enumerate() {
        let head = simple_head(cell.clone(), &rad_elems)?;
        simple_dims.push(head.dim());
        let nonzero = head.dim() > 0;
        simple.push(nonzero);
        if nonzero {
            if !chars.insert(char_of(&head)) {
                return Err(Error::Verification(format!(
                    "character of L{} is not independent",
                    labels[j]
                )));
            }
            columns.push(j);
        }
    }
    let n = labels.len();
    let mut entries = vec![vec![0u64; n]; n];
    for (i, cell) in model.modules.iter().enumerate() {
        let x = chars.coordinates(&char_of(cell.as_ref())).ok_or_else(|| {
            Error::Verification(format!("character of Delta{} is not a sum of simples", labels[i]))
        })?;
        for (c, &j) in x.iter().zip(&columns) {
            let v = c
                .as_integer()
                .and_then(|v| u64::try_from(v).ok())
                .ok_or_else(|| Error::Verification(format!("non-integral multiplicity {c}")))?;
            entries[i][j] = v;
        }
    }
    Ok(DecompositionMatrix {
        labels,
        simple,
        simple_dims,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Params;

    fn cyc(n: usize, p: &Params) -> DiagramAlgebra {
        DiagramAlgebra::cyclotomic(n, p, true)
    }

    #[test]
    fn faithful_model_examples() {
        let a = cyc(2, &Params::from_ints(&[1]));
        let model = faithful_model(&a).unwrap();
        assert_eq!(model.span_dim, 3);
        let a = cyc(2, &Params::generic(2, 3));
        assert_eq!(faithful_model(&a).unwrap().span_dim, 12);
        let a = cyc(2, &Params::from_ints(&[0, 0]));
        assert!(faithful_model(&a).unwrap().span_dim <= 12);
    }

    #[test]
    fn generic_is_semisimple() {
        for (m, n) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)] {
            let a = cyc(n, &Params::generic(m, 11));
            let rep = semisimplicity_check(&a).unwrap();
            assert!(rep.semisimple, "m={m} n={n}");
            let d = decomposition_matrix(&a).unwrap();
            assert!(d.is_identity());
            // Wedderburn: Σ (dim L)² = dim A
            let total: usize = d.simple_dims.iter().map(|x| x * x).sum();
            assert_eq!(total, rep.algebra_dim);
        }
    }

    #[test]
    fn degenerate_points() {
        for (m, n, delta) in [
            (1, 3, vec![1]),
            (1, 4, vec![1]),
            (1, 4, vec![-2]),
            (2, 3, vec![1, 1]),
            (2, 3, vec![3, 1]),
            (2, 2, vec![2, 0]),
            (3, 2, vec![2, -1, -1]),
        ] {
            let a = cyc(n, &Params::from_ints(&delta));
            let model = faithful_model(&a).unwrap();
            let rad = radical(&model);
            verify_radical(&a, &rad).unwrap();
            let d = decomposition_matrix(&a).unwrap();
            assert!(d.respects_order(Variant::Oriented), "m={m} n={n} δ={delta:?}\n{d:?}");
            // Wedderburn with the radical: dim A = dim rad + Σ (dim L)²
            let total: usize = d.simple_dims.iter().map(|x| x * x).sum();
            assert_eq!(total + rad.dim(), model.basis.len(), "m={m} n={n} δ={delta:?}");
            // the head agrees with the cell-form radical
            for (cell, &dl) in model.modules.iter().zip(&d.simple_dims) {
                assert_eq!(cell.dim() - cell.form_radical().dim(), dl);
            }
        }
    }

    #[test]
    fn brauer_three_at_one_is_not_semisimple() {
        let a = DiagramAlgebra::brauer(3, Cyclotomic::one(1));
        let rep = semisimplicity_check(&a).unwrap();
        assert!(!rep.semisimple);
        let d = decomposition_matrix(&a).unwrap();
        assert_eq!(d.simple_count(), d.labels.len());
        // δ − 1 + (sum of contents of (2,1)/(1)) = 0, so L((2,1)) sits in Δ((1))
        let one = MultiPartition::from_parts(&[&[1]]).unwrap();
        let two_one = MultiPartition::from_parts(&[&[2, 1]]).unwrap();
        assert_eq!(d.entry(&one, &two_one), Some(1));
    }
}
