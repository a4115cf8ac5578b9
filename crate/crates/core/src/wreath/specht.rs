use std::collections::HashMap;
use std::sync::Mutex;

use crate::combinatorics::Partition;
use crate::linalg::Matrix;
use crate::scalars::Cyclotomic;

/// Young's natural representation of `Σ_k` on the Specht module `S(λ)`,
/// with basis the standard polytabloids.
#[derive(Debug)]
pub struct SymSpecht {
    shape: Partition,
    field: u32,
    tableaux: Vec<Vec<Vec<usize>>>,
    /// tabloid (row of each entry) -> index of the standard tableau with that tabloid
    standard_tabloid: HashMap<Vec<u8>, usize>,
    /// inverse of the (standard polytabloid × standard tabloid) coefficient block
    pivot_inv: Matrix,
    cache: Mutex<HashMap<Vec<usize>, Matrix>>,
}

fn tabloid_of(t: &[Vec<usize>], k: usize) -> Vec<u8> {
    let mut rows = vec![0u8; k];
    for (r, row) in t.iter().enumerate() {
        for &e in row {
            rows[e] = r as u8;
        }
    }
    rows
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    // Heap-free recursive enumeration with signs.
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if cur.len() == k {
            let mut inv = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

impl SymSpecht {
    pub fn new(shape: &Partition, field: u32) -> Self {
        let k = shape.size();
        let tableaux = shape.standard_tableaux();
        let standard_tabloid: HashMap<Vec<u8>, usize> = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| (tabloid_of(t, k), i))
            .collect();
        let d = tableaux.len();
        let mut s = SymSpecht {
            shape: shape.clone(),
            field,
            tableaux,
            standard_tabloid,
            pivot_inv: Matrix::identity(d, field),
            cache: Mutex::new(HashMap::new()),
        };
        let mut block = Matrix::zeros(d, d, field);
        for i in 0..d {
            let t = s.tableaux[i].clone();
            let row = s.polytabloid_on_standard(&t);
            for (j, c) in row.into_iter().enumerate() {
                block[(j, i)] = Cyclotomic::from_int(field, c);
            }
        }
        s.pivot_inv = block.inverse().expect("standard polytabloids are independent");
        s
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Vec<Vec<usize>>] {
        &self.tableaux
    }

    /// Coefficients of the polytabloid `e_t` on the standard tabloids.
    fn polytabloid_on_standard(&self, t: &[Vec<usize>]) -> Vec<i64> {
        let k = self.shape.size();
        let conj = self.shape.conjugate();
        let mut out = vec![0i64; self.dim()];
        // column permutations, one factor per column
        let cols: Vec<Vec<usize>> = (0..conj.len())
            .map(|c| (0..conj.part(c)).map(|r| t[r][c]).collect())
            .collect();
        let perms: Vec<Vec<(Vec<usize>, i64)>> = cols.iter().map(|c| permutations(c.len())).collect();
        let mut choice = vec![0usize; cols.len()];
        loop {
            let mut rows = vec![0u8; k];
            let mut sign = 1;
            for (c, col) in cols.iter().enumerate() {
                let (p, s) = &perms[c][choice[c]];
                sign *= s;
                for (r, &e) in col.iter().enumerate() {
                    // entry `e` moves to row p[r]
                    rows[e] = p[r] as u8;
                }
            }
            if let Some(&j) = self.standard_tabloid.get(&rows) {
                out[j] += sign;
            }
            // odometer
            let mut c = 0;
            while c < choice.len() {
                choice[c] += 1;
                if choice[c] < perms[c].len() {
                    break;
                }
                choice[c] = 0;
                c += 1;
            }
            if c == choice.len() {
                break;
            }
        }
        out
    }

    /// Matrix of the permutation `w` (entry `s` goes to `w[s]`) in the
    /// standard polytabloid basis.
    pub fn matrix(&self, w: &[usize]) -> Matrix {
        if let Some(m) = self.cache.lock().unwrap().get(w) {
            return m.clone();
        }
        let d = self.dim();
        let mut raw = Matrix::zeros(d, d, self.field);
        for i in 0..d {
            let t: Vec<Vec<usize>> = self.tableaux[i]
                .iter()
                .map(|row| row.iter().map(|&e| w[e]).collect())
                .collect();
            for (j, c) in self.polytabloid_on_standard(&t).into_iter().enumerate() {
                raw[(j, i)] = Cyclotomic::from_int(self.field, c);
            }
        }
        let m = self.pivot_inv.mul(&raw);
        self.cache.lock().unwrap().insert(w.to_vec(), m.clone());
        m
    }

    /// Character value of a permutation.
    pub fn character(&self, w: &[usize]) -> Cyclotomic {
        self.matrix(w).trace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        // (a ∘ b)(s) = a[b[s]]
        b.iter().map(|&s| a[s]).collect()
    }

    #[test]
    fn small_shapes() {
        let triv = SymSpecht::new(&Partition::new(vec![3]).unwrap(), 1);
        assert_eq!(triv.dim(), 1);
        assert!(triv.matrix(&[1, 0, 2]).trace().is_one());
        let sign = SymSpecht::new(&Partition::new(vec![1, 1, 1]).unwrap(), 1);
        assert_eq!(sign.matrix(&[1, 0, 2]).trace(), Cyclotomic::from_int(1, -1));
        let std = SymSpecht::new(&Partition::new(vec![2, 1]).unwrap(), 1);
        assert_eq!(std.dim(), 2);
        assert!(std.character(&[1, 0, 2]).is_zero());
        assert_eq!(std.character(&[1, 2, 0]), Cyclotomic::from_int(1, -1));
    }

    #[test]
    fn homomorphism_and_orthogonality() {
        for k in 1..=5 {
            let perms: Vec<Vec<usize>> = permutations(k).into_iter().map(|(p, _)| p).collect();
            let reps: Vec<SymSpecht> = Partition::all(k).iter().map(|p| SymSpecht::new(p, 1)).collect();
            for rep in &reps {
                for a in perms.iter().step_by(3) {
                    for b in perms.iter().step_by(5) {
                        assert_eq!(rep.matrix(&compose(a, b)), rep.matrix(a).mul(&rep.matrix(b)));
                    }
                }
            }
            // Σ_g χ_λ(g) χ_μ(g) = k! δ_{λμ} (characters are real)
            let fact = perms.len() as i64;
            for (i, x) in reps.iter().enumerate() {
                for (j, y) in reps.iter().enumerate() {
                    let mut s = Cyclotomic::zero(1);
                    for g in &perms {
                        s += &(&x.character(g) * &y.character(g));
                    }
                    let want = if i == j { fact } else { 0 };
                    assert_eq!(s, Cyclotomic::from_int(1, want));
                }
            }
        }
    }
}
