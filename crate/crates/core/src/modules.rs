//! Finite-dimensional modules over diagram algebras, given by the matrices
//! of basis diagrams.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::diagrams::{AlgebraElement, Diagram, DiagramAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowEchelon, Subspace};
use crate::scalars::Cyclotomic;

pub trait Module: Send + Sync {
    fn algebra(&self) -> &DiagramAlgebra;
    fn dim(&self) -> usize;
    /// Matrix of a basis diagram, acting on column vectors.
    fn act(&self, d: &Diagram) -> Matrix;
    fn label(&self) -> String {
        String::new()
    }

    fn act_element(&self, x: &AlgebraElement) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n, self.algebra().field());
        for (d, c) in x {
            out.add_scaled(&self.act(d), c);
        }
        out
    }

    /// Character value on a diagram.
    fn character(&self, d: &Diagram) -> Cyclotomic {
        self.act(d).trace()
    }
}

type Action = Arc<dyn Fn(&Diagram) -> Matrix + Send + Sync>;

/// A module given lazily by a function from diagrams to matrices.
#[derive(Clone)]
pub struct RepMatrices {
    algebra: DiagramAlgebra,
    dim: usize,
    label: String,
    action: Action,
}

impl fmt::Debug for RepMatrices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMatrices({}, dim {})", self.label, self.dim)
    }
}

impl Module for RepMatrices {
    fn algebra(&self) -> &DiagramAlgebra {
        &self.algebra
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn act(&self, d: &Diagram) -> Matrix {
        (self.action)(d)
    }
    fn label(&self) -> String {
        self.label.clone()
    }
}

impl RepMatrices {
    pub fn new(
        algebra: DiagramAlgebra,
        dim: usize,
        label: impl Into<String>,
        action: impl Fn(&Diagram) -> Matrix + Send + Sync + 'static,
    ) -> Self {
        RepMatrices {
            algebra,
            dim,
            label: label.into(),
            action: Arc::new(action),
        }
    }

    pub fn zero(algebra: DiagramAlgebra, label: impl Into<String>) -> Self {
        let f = algebra.field();
        Self::new(algebra, 0, label, move |_| Matrix::zeros(0, 0, f))
    }

    /// The invariant subspace spanned by `basis` inside `base`, as a module
    /// over `algebra`, where `lift` sends a diagram of `algebra` to the
    /// element of `base`'s algebra that acts for it.
    pub fn restrict(
        base: Arc<dyn Module>,
        algebra: DiagramAlgebra,
        basis: Vec<Vec<Cyclotomic>>,
        label: impl Into<String>,
        lift: impl Fn(&Diagram) -> AlgebraElement + Send + Sync + 'static,
    ) -> Self {
        let mut sub = Subspace::new(base.dim(), base.algebra().field());
        for v in &basis {
            sub.insert(v.clone());
        }
        let dim = sub.dim();
        let field = base.algebra().field();
        let sub = Arc::new(sub);
        Self::new(algebra, dim, label, move |d| {
            let x = lift(d);
            let mat = base.act_element(&x);
            let mut out = Matrix::zeros(dim, dim, field);
            for (j, u) in sub.basis().iter().enumerate() {
                let y = mat.mul_vec(u);
                let c = sub
                    .coordinates(&y)
                    .expect("subspace is not invariant under the lifted action");
                for (i, v) in c.into_iter().enumerate() {
                    out[(i, j)] = v;
                }
            }
            out
        })
    }

    /// `base / sub` for an invariant subspace `sub`.
    pub fn quotient(base: Arc<dyn Module>, sub: Subspace, label: impl Into<String>) -> Self {
        let comp = sub.complement_indices();
        let dim = comp.len();
        let n = base.dim();
        let field = base.algebra().field();
        let algebra = base.algebra().clone();
        let sub = Arc::new(sub);
        Self::new(algebra, dim, label, move |d| {
            let mat = base.act(d);
            let mut out = Matrix::zeros(dim, dim, field);
            for (j, &c) in comp.iter().enumerate() {
                let col: Vec<Cyclotomic> = (0..n).map(|r| mat[(r, c)].clone()).collect();
                for (i, v) in sub.quotient_coordinates(&col).into_iter().enumerate() {
                    out[(i, j)] = v;
                }
            }
            out
        })
    }

    /// Direct sum.
    pub fn direct_sum(parts: Vec<Arc<dyn Module>>, label: impl Into<String>) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::Validation("empty direct sum".into()));
        };
        let algebra = first.algebra().clone();
        let dim = parts.iter().map(|p| p.dim()).sum();
        let field = algebra.field();
        Ok(Self::new(algebra, dim, label, move |d| {
            let mut out = Matrix::zeros(dim, dim, field);
            let mut off = 0;
            for p in &parts {
                let m = p.act(d);
                for i in 0..p.dim() {
                    for j in 0..p.dim() {
                        out[(off + i, off + j)] = m[(i, j)].clone();
                    }
                }
                off += p.dim();
            }
            out
        }))
    }

    /// Matrices of the algebra generators, for export.
    pub fn export(&self) -> RepJson {
        RepJson {
            label: self.label.clone(),
            dim: self.dim,
            generators: self
                .algebra
                .generators()
                .into_iter()
                .map(|(name, d)| {
                    let m = self.act(&d);
                    let rows = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
                    (name, rows)
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepJson {
    pub label: String,
    pub dim: usize,
    pub generators: Vec<(String, Vec<Vec<Cyclotomic>>)>,
}

/// Wrap any module so it can be shared.
pub fn shared<M: Module + 'static>(m: M) -> Arc<dyn Module> {
    Arc::new(m)
}

/// `Hom_A(M, N)`: maps `X` with `N(g) X = X M(g)` for every algebra generator
/// `g`. Returned as `dim N × dim M` matrices.
pub fn hom_space(m: &dyn Module, n: &dyn Module) -> Vec<Matrix> {
    let (dm, dn) = (m.dim(), n.dim());
    let field = m.algebra().field();
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Vec::new();
    }
    // X[i][j] is unknown i*dm + j
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    for (_, g) in m.algebra().generators() {
        let a = m.act(&g);
        let b = n.act(&g);
        for i in 0..dn {
            for j in 0..dm {
                // (B X)_{ij} - (X A)_{ij} = Σ_k B_ik X_kj - Σ_k X_ik A_kj
                let mut row = vec![Cyclotomic::zero(field); unknowns];
                for k in 0..dn {
                    if !b[(i, k)].is_zero() {
                        row[k * dm + j] += &b[(i, k)];
                    }
                }
                for k in 0..dm {
                    if !a[(k, j)].is_zero() {
                        row[i * dm + k] -= &a[(k, j)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        // keep the system small
        if rows.len() > 2 * unknowns {
            let ech = RowEchelon::new(Matrix::from_rows(std::mem::take(&mut rows), field));
            rows = (0..ech.rank()).map(|r| ech.matrix.row(r).to_vec()).collect();
        }
    }
    let sys = if rows.is_empty() {
        Matrix::zeros(0, unknowns, field)
    } else {
        Matrix::from_rows(rows, field)
    };
    sys.nullspace()
        .into_iter()
        .map(|v| {
            let mut x = Matrix::zeros(dn, dm, field);
            for i in 0..dn {
                for j in 0..dm {
                    x[(i, j)] = v[i * dm + j].clone();
                }
            }
            x
        })
        .collect()
}

/// Smallest submodule containing the given vectors.
pub fn generated_submodule(m: &dyn Module, seeds: &[Vec<Cyclotomic>]) -> Subspace {
    let field = m.algebra().field();
    let gens: Vec<Matrix> = m
        .algebra()
        .generators()
        .into_iter()
        .map(|(_, g)| m.act(&g))
        .collect();
    let mut sub = Subspace::new(m.dim(), field);
    let mut queue: Vec<Vec<Cyclotomic>> = Vec::new();
    for s in seeds {
        if sub.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in &gens {
            let w = g.mul_vec(&v);
            if sub.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    sub
}
