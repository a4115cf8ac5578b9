use serde::{Deserialize, Serialize};

use super::{AlgebraElement, Diagram};
use crate::error::{invalid, Error, Result};
use crate::scalars::{Cyclotomic, Params};

/// Where a multiplication happens: the diagram algebra with its loop rule.
///
/// Besides the cyclotomic Brauer algebra itself this also covers the
/// classical Brauer and walled Brauer algebras and tensor products of them:
/// every node carries a colour, through strands must join nodes of equal
/// colour, arcs must join colour `c` to `tau[c]`, and a closed loop whose
/// start node has colour `c` and label `l` evaluates to `params[c][l]`.
#[derive(Clone, Debug)]
pub struct DiagramAlgebra {
    n: usize,
    m: u32,
    oriented: bool,
    field: u32,
    /// Colour of positions `0..n` (top and bottom rows agree).
    colors: Vec<u8>,
    tau: Vec<u8>,
    params: Vec<Vec<Cyclotomic>>,
}

/// One composite strand or loop read off during a product, as signed
/// segment labels in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    /// Result nodes `(from, to)` for strands; `None` for loops.
    pub ends: Option<(usize, usize)>,
    pub segments: Vec<(i8, u32)>,
    /// Total label in the traversal direction, reduced mod `m`.
    pub label: u32,
}

impl Trace {
    /// E.g. `1-2-1+0`.
    pub fn expression(&self) -> String {
        let mut s = String::new();
        for (i, (sign, l)) in self.segments.iter().enumerate() {
            match (i, sign) {
                (0, 1) => s.push_str(&l.to_string()),
                (0, _) => s.push_str(&format!("-{l}")),
                (_, 1) => s.push_str(&format!("+{l}")),
                (_, _) => s.push_str(&format!("-{l}")),
            }
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct TracedProduct {
    pub coeff: Cyclotomic,
    pub diagram: Diagram,
    pub strands: Vec<Trace>,
    pub loops: Vec<Trace>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Upper,
    Lower,
}

impl DiagramAlgebra {
    /// `B_n^m(δ)`, or the unoriented variant.
    pub fn cyclotomic(n: usize, params: &Params, oriented: bool) -> Self {
        let m = params.m();
        DiagramAlgebra {
            n,
            m,
            oriented,
            field: m,
            colors: vec![0; n],
            tau: vec![0],
            params: vec![params.delta().to_vec()],
        }
    }

    /// Classical Brauer algebra `B(n, δ)` with `δ ∈ Q(ξ_field)`.
    pub fn brauer(n: usize, delta: Cyclotomic) -> Self {
        DiagramAlgebra {
            n,
            m: 1,
            oriented: true,
            field: delta.modulus(),
            colors: vec![0; n],
            tau: vec![0],
            params: vec![vec![delta]],
        }
    }

    /// Walled Brauer algebra `WB(r, s, δ)`, the wall after node `r`.
    pub fn walled_brauer(r: usize, s: usize, delta: Cyclotomic) -> Self {
        let mut colors = vec![0; r];
        colors.extend(std::iter::repeat(1).take(s));
        DiagramAlgebra {
            n: r + s,
            m: 1,
            oriented: true,
            field: delta.modulus(),
            colors,
            tau: vec![1, 0],
            params: vec![vec![delta.clone()], vec![delta]],
        }
    }

    /// General coloured classical algebra (labels mod 1).
    pub fn colored(colors: Vec<u8>, tau: Vec<u8>, deltas: Vec<Cyclotomic>) -> Result<Self> {
        if tau.len() != deltas.len() || deltas.is_empty() {
            return invalid("one parameter per colour is required");
        }
        for (c, &t) in tau.iter().enumerate() {
            if t as usize >= tau.len() || tau[t as usize] as usize != c {
                return invalid("colour map must be an involution");
            }
        }
        if colors.iter().any(|&c| c as usize >= tau.len()) {
            return invalid("unknown colour");
        }
        let field = deltas[0].modulus();
        Ok(DiagramAlgebra {
            n: colors.len(),
            m: 1,
            oriented: true,
            field,
            colors,
            tau,
            params: deltas.into_iter().map(|d| vec![d]).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Label modulus.
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn loop_parameter(&self, color: usize, label: u32) -> &Cyclotomic {
        &self.params[color][label as usize]
    }

    pub fn tau(&self) -> &[u8] {
        &self.tau
    }

    pub(crate) fn color(&self, k: usize) -> u8 {
        self.colors[k % self.n.max(1)]
    }

    pub(crate) fn allowed(&self, u: usize, v: usize) -> bool {
        let same_row = (u < self.n) == (v < self.n);
        let (cu, cv) = (self.color(u), self.color(v));
        if same_row {
            cv == self.tau[cu as usize]
        } else {
            cv == cu
        }
    }

    /// Whether `d` is a basis diagram of this algebra.
    pub fn contains(&self, d: &Diagram) -> bool {
        d.n() == self.n
            && (0..2 * self.n).all(|k| self.allowed(k, d.partner(k)) && d.label(k) < self.m)
    }

    pub fn check(&self, d: &Diagram) -> Result<()> {
        if self.contains(d) {
            Ok(())
        } else {
            invalid(format!("{d} is not a diagram of this algebra"))
        }
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::from_diagram(Diagram::identity(self.n), self.field)
    }

    pub fn element(&self, d: Diagram) -> AlgebraElement {
        AlgebraElement::from_diagram(d, self.field)
    }

    /// All basis diagrams, sorted.
    pub fn basis(&self) -> Vec<Diagram> {
        let n2 = 2 * self.n;
        let mut matchings = Vec::new();
        let mut partner = vec![u8::MAX; n2];
        self.matchings(&mut partner, &mut matchings);
        let mut out = Vec::new();
        for p in matchings {
            let starts: Vec<usize> = (0..n2).filter(|&k| (p[k] as usize) > k).collect();
            let total = (self.m as usize).pow(starts.len() as u32);
            for code in 0..total {
                let mut label = vec![0u8; n2];
                let mut c = code;
                for &k in starts.iter().rev() {
                    let l = (c % self.m as usize) as u8;
                    c /= self.m as usize;
                    label[k] = l;
                    label[p[k] as usize] = l;
                }
                out.push(Diagram {
                    partner: p.clone(),
                    label,
                });
            }
        }
        out.sort();
        out
    }

    fn matchings(&self, partner: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let Some(u) = partner.iter().position(|&p| p == u8::MAX) else {
            out.push(partner.clone());
            return;
        };
        for v in u + 1..partner.len() {
            if partner[v] == u8::MAX && self.allowed(u, v) {
                partner[u] = v as u8;
                partner[v] = u as u8;
                self.matchings(partner, out);
                partner[u] = u8::MAX;
                partner[v] = u8::MAX;
            }
        }
    }

    /// Closed-form basis size for the uncoloured algebras: `m^n (2n−1)!!`.
    pub fn expected_dim(m: u32, n: usize) -> u128 {
        let mut d: u128 = (m as u128).pow(n as u32);
        let mut k = 2 * n as u128;
        while k > 1 {
            d *= k - 1;
            k -= 2;
        }
        d
    }

    fn signed(&self, from: usize, to: usize, l: u8) -> (i8, u32) {
        if !self.oriented || from < to {
            (1, l as u32)
        } else {
            (-1, l as u32)
        }
    }

    fn reduce(&self, acc: i64) -> u32 {
        acc.rem_euclid(self.m as i64) as u32
    }

    /// Concatenate `x` above `y`, recording every strand and loop.
    pub fn multiply_traced(&self, x: &Diagram, y: &Diagram) -> TracedProduct {
        self.compose(x, y, true)
    }

    /// Product of two diagrams: a scalar times a diagram.
    pub fn mul_diagrams(&self, x: &Diagram, y: &Diagram) -> (Cyclotomic, Diagram) {
        let t = self.compose(x, y, false);
        (t.coeff, t.diagram)
    }

    fn compose(&self, x: &Diagram, y: &Diagram, trace: bool) -> TracedProduct {
        let n = self.n;
        let mut partner = vec![0u8; 2 * n];
        let mut label = vec![0u8; 2 * n];
        let mut mid_seen = vec![false; n];
        let mut done = vec![false; 2 * n];
        let mut strands = Vec::new();
        let mut loops = Vec::new();
        for s in 0..2 * n {
            if done[s] {
                continue;
            }
            let (mut side, mut node) = if s < n { (Side::Upper, s) } else { (Side::Lower, s) };
            let mut acc: i64 = 0;
            let mut segs = Vec::new();
            let end = loop {
                let d = if side == Side::Upper { x } else { y };
                let p = d.partner(node);
                let (sg, l) = self.signed(node, p, d.label[node]);
                acc += sg as i64 * l as i64;
                if trace {
                    segs.push((sg, l));
                }
                match side {
                    Side::Upper if p < n => break p,
                    Side::Upper => {
                        mid_seen[p - n] = true;
                        side = Side::Lower;
                        node = p - n;
                    }
                    Side::Lower if p >= n => break p,
                    Side::Lower => {
                        mid_seen[p] = true;
                        side = Side::Upper;
                        node = n + p;
                    }
                }
            };
            let canon = if !self.oriented || s < end { acc } else { -acc };
            let l = self.reduce(canon) as u8;
            partner[s] = end as u8;
            partner[end] = s as u8;
            label[s] = l;
            label[end] = l;
            done[s] = true;
            done[end] = true;
            if trace {
                strands.push(Trace {
                    ends: Some((s, end)),
                    segments: segs,
                    label: self.reduce(acc),
                });
            }
        }
        let mut coeff = Cyclotomic::one(self.field);
        for k in 0..n {
            if mid_seen[k] {
                continue;
            }
            // start at the leftmost free middle node, heading down into `y`
            let mut acc: i64 = 0;
            let mut segs = Vec::new();
            let mut node = k;
            loop {
                mid_seen[node] = true;
                let p = y.partner(node);
                debug_assert!(p < n);
                let (sg, l) = self.signed(node, p, y.label[node]);
                acc += sg as i64 * l as i64;
                mid_seen[p] = true;
                let q = x.partner(n + p);
                debug_assert!(q >= n);
                let (sg2, l2) = self.signed(n + p, q, x.label[n + p]);
                acc += sg2 as i64 * l2 as i64;
                if trace {
                    segs.push((sg, l));
                    segs.push((sg2, l2));
                }
                node = q - n;
                if node == k {
                    break;
                }
            }
            let l = self.reduce(acc);
            coeff = &coeff * &self.params[self.color(k) as usize][l as usize];
            if trace {
                loops.push(Trace {
                    ends: None,
                    segments: segs,
                    label: l,
                });
            }
        }
        TracedProduct {
            coeff,
            diagram: Diagram { partner, label },
            strands,
            loops,
        }
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (x, cx) in a {
            for (y, cy) in b {
                let (c, d) = self.mul_diagrams(x, y);
                if c.is_zero() {
                    continue;
                }
                out.add_term(d, &(cx * cy) * &c);
            }
        }
        out
    }

    /// `d · b` with `d` a single diagram.
    pub fn mul_left_diagram(&self, d: &Diagram, b: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (y, cy) in b {
            let (c, z) = self.mul_diagrams(d, y);
            if !c.is_zero() {
                out.add_term(z, &c * cy);
            }
        }
        out
    }

    pub fn star(&self, a: &AlgebraElement) -> AlgebraElement {
        a.map_diagrams(|d| d.star(self.m, self.oriented))
    }

    /// `T` at node `k` of the row: `(1/m) Σ_q ξ^{qr} t^q` applied on the left
    /// (`k` a top node) or on the right (`k` a bottom node).
    pub fn torus_projection(&self, a: &AlgebraElement, k: usize, r: u32) -> AlgebraElement {
        let m = self.m;
        let step = (self.field / m) as i64;
        let inv_m = Cyclotomic::from_ratio(self.field, 1, m as i64);
        let mut out = AlgebraElement::zero(self.field);
        for (d, c) in a {
            let p = d.partner(k);
            let eps: i64 = match (self.oriented, k < self.n) {
                (false, _) => 1,
                (true, true) => {
                    if p > k {
                        1
                    } else {
                        -1
                    }
                }
                (true, false) => {
                    if p < k {
                        1
                    } else {
                        -1
                    }
                }
            };
            let base = c * &inv_m;
            for q in 0..m as i64 {
                let mut e = d.clone();
                e.shift_label(k, eps * q, m);
                out.add_term(e, base.mul_xi_pow(step * q * r as i64));
            }
        }
        out
    }

    /// Left multiplication by `Π_i T_i^{r_i}` over the listed positions.
    pub fn project_left(&self, a: &AlgebraElement, residues: &[(usize, u32)]) -> AlgebraElement {
        residues
            .iter()
            .fold(a.clone(), |acc, &(i, r)| self.torus_projection(&acc, i, r))
    }

    /// Right multiplication by `Π_i T_i^{r_i}`.
    pub fn project_right(&self, a: &AlgebraElement, residues: &[(usize, u32)]) -> AlgebraElement {
        residues
            .iter()
            .fold(a.clone(), |acc, &(i, r)| self.torus_projection(&acc, self.n + i, r))
    }

    /// Scalar `ξ^k` in the ambient field where `ξ` is a primitive `m`-th root.
    pub fn xi_pow(&self, k: i64) -> Cyclotomic {
        Cyclotomic::xi_pow(self.field, k * (self.field / self.m) as i64)
    }

    /// The same single-colour algebra on `n` strands.
    pub fn resized(&self, n: usize) -> Result<Self> {
        if self.tau.len() != 1 {
            return invalid("only single-colour algebras can be resized");
        }
        let mut a = self.clone();
        a.n = n;
        a.colors = vec![0; n];
        Ok(a)
    }

    /// `δ̄_r = (1/m) Σ_i ξ^{ir} δ_i` for a single-colour algebra.
    pub fn signed_parameters(&self) -> Vec<Cyclotomic> {
        let m = self.m as i64;
        let inv_m = Cyclotomic::from_ratio(self.field, 1, m);
        (0..m)
            .map(|r| {
                let mut acc = Cyclotomic::zero(self.field);
                for (i, d) in self.params[0].iter().enumerate() {
                    acc += &(d * &self.xi_pow(i as i64 * r));
                }
                &acc * &inv_m
            })
            .collect()
    }

    /// Whether every loop parameter vanishes.
    pub fn parameters_vanish(&self) -> bool {
        self.params.iter().flatten().all(|d| d.is_zero())
    }

    pub fn require_same_size(&self, other: &DiagramAlgebra) -> Result<()> {
        if self.n != other.n || self.m != other.m {
            return Err(Error::Validation("algebras differ in size or modulus".into()));
        }
        Ok(())
    }
}
