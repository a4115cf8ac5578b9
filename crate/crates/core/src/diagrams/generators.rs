//! Named elements. Strand positions are 1-based here, as in `t_{i,j}`.

use super::{AlgebraElement, Diagram, DiagramAlgebra, RawStrand};
use crate::error::{invalid, Error, Result};

impl DiagramAlgebra {
    fn position(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n() {
            return invalid(format!("position {i} out of range 1..={}", self.n()));
        }
        Ok(i - 1)
    }

    fn through(&self, skip: &[usize]) -> Vec<RawStrand> {
        let n = self.n();
        (0..n)
            .filter(|k| !skip.contains(k))
            .map(|k| RawStrand {
                from: k,
                to: n + k,
                label: 0,
            })
            .collect()
    }

    /// `t_{i,j}`: swap strands `i` and `j`.
    pub fn t_swap(&self, i: usize, j: usize) -> Result<Diagram> {
        let (a, b) = (self.position(i)?, self.position(j)?);
        if a == b {
            return invalid("t_{i,j} needs i != j");
        }
        let n = self.n();
        let mut s = self.through(&[a, b]);
        s.push(RawStrand { from: a, to: n + b, label: 0 });
        s.push(RawStrand { from: b, to: n + a, label: 0 });
        let d = Diagram::from_strands(n, self.m(), &s)?;
        self.check(&d)?;
        Ok(d)
    }

    /// `t_i^r`: identity with strand `i` labelled `r`.
    pub fn t_label(&self, i: usize, r: i64) -> Result<Diagram> {
        let a = self.position(i)?;
        let n = self.n();
        let mut s = self.through(&[a]);
        s.push(RawStrand { from: a, to: n + a, label: r });
        Diagram::from_strands(n, self.m(), &s)
    }

    /// `e_{i,j}`: arcs `{i,j}` and `{ī,j̄}`, labels 0.
    pub fn e_arc(&self, i: usize, j: usize) -> Result<Diagram> {
        let (a, b) = (self.position(i)?, self.position(j)?);
        if a == b {
            return invalid("e_{i,j} needs i != j");
        }
        let n = self.n();
        let mut s = self.through(&[a, b]);
        s.push(RawStrand { from: a, to: b, label: 0 });
        s.push(RawStrand { from: n + a, to: n + b, label: 0 });
        let d = Diagram::from_strands(n, self.m(), &s)?;
        self.check(&d)?;
        Ok(d)
    }

    /// Algebra generators: `t_{i,i+1}` whenever strands `i`, `i+1` share a
    /// colour, `t_1^1` (if `m > 1`) and one arc generator per pair of
    /// colours that can be joined. For `B_n^m` these are `t_{i,i+1}`, `t_1^1`
    /// and `e_{1,2}`.
    pub fn generators(&self) -> Vec<(String, Diagram)> {
        let n = self.n();
        let mut g = Vec::new();
        for i in 1..n {
            if self.color(i - 1) == self.color(i) {
                g.push((format!("t_{{{i},{}}}", i + 1), self.t_swap(i, i + 1).unwrap()));
            }
        }
        if n >= 1 && self.m() > 1 {
            g.push(("t_1^1".to_string(), self.t_label(1, 1).unwrap()));
        }
        for c in 0..self.tau().len() {
            let t = self.tau()[c] as usize;
            if t < c {
                continue;
            }
            let of = |col: usize| (0..n).filter(move |&k| self.color(k) as usize == col);
            let pair = if t == c {
                let v: Vec<usize> = of(c).take(2).collect();
                (v.len() == 2).then(|| (v[0], v[1]))
            } else {
                of(c).last().zip(of(t).next())
            };
            if let Some((a, b)) = pair {
                let (a, b) = (a.min(b) + 1, a.max(b) + 1);
                g.push((format!("e_{{{a},{b}}}"), self.e_arc(a, b).unwrap()));
            }
        }
        g
    }

    /// The idempotent `e_{n−2}`.
    ///
    /// With some `δ_r ≠ 0` this is `(1/δ_r) t_{n−1}^r e_{n−1,n}` for the
    /// smallest such `r`; with `δ = 0` and `n ≥ 3` it is the single diagram
    /// with through strand `{n−2, n̄}`, arcs `{n−1, n}` and `{(n−2)bar, (n−1)bar}`.
    pub fn e_localising(&self) -> Result<AlgebraElement> {
        let n = self.n();
        if n < 2 {
            return invalid("e_{n-2} needs n >= 2");
        }
        let deltas: Vec<_> = (0..self.m()).map(|r| self.loop_parameter(0, r).clone()).collect();
        if let Some(r) = deltas.iter().position(|d| !d.is_zero()) {
            let inv = deltas[r].inv()?;
            let t = self.element(self.t_label(n - 1, r as i64)?);
            let e = self.element(self.e_arc(n - 1, n)?);
            return Ok(self.mul(&t, &e).scale(&inv));
        }
        self.e_localising_zero()
    }

    /// The `δ = 0` form of `e_{n−2}` (needs `n ≥ 3`).
    pub fn e_localising_zero(&self) -> Result<AlgebraElement> {
        let n = self.n();
        if n < 3 {
            return Err(Error::Unavailable(
                "e_{n-2} is unavailable for delta = 0 and n = 2".into(),
            ));
        }
        let mut s = self.through(&[n - 3, n - 2, n - 1]);
        s.push(RawStrand { from: n - 3, to: 2 * n - 1, label: 0 });
        s.push(RawStrand { from: n - 2, to: n - 1, label: 0 });
        s.push(RawStrand { from: 2 * n - 3, to: 2 * n - 2, label: 0 });
        Ok(self.element(Diagram::from_strands(n, self.m(), &s)?))
    }

    /// Image of a diagram of size `n − 2` in this algebra for the chosen
    /// form of `e_{n−2}`: the plain embedding (two identity strands on the
    /// right) for the `δ ≠ 0` form, conjugated by `t_{n−2,n}` for the
    /// `δ = 0` form.
    pub fn lift_from_smaller(&self, d: &Diagram, zero_form: bool) -> Result<AlgebraElement> {
        let n = self.n();
        if d.n() + 2 != n {
            return invalid("diagram must have n - 2 strands");
        }
        let hat = self.element(d.embed().embed());
        if !zero_form {
            return Ok(hat);
        }
        let s = self.element(self.t_swap(n - 2, n)?);
        Ok(self.mul(&self.mul(&s, &hat), &s))
    }
}
