use super::Partition;

/// Littlewood–Richardson coefficient `c^ν_{λ,τ}`: the number of semistandard
/// fillings of `ν/λ` with content `τ` whose reverse reading word is a
/// lattice word.
pub fn lr_coeff(nu: &Partition, lambda: &Partition, tau: &Partition) -> u64 {
    if nu.size() != lambda.size() + tau.size() || !lambda.is_contained_in(nu) {
        return 0;
    }
    if !tau.is_contained_in(nu) {
        return 0;
    }
    // cells in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..nu.len()).map(|r| vec![0; nu.part(r)]).collect();
    let mut count = vec![0usize; tau.len()];
    let mut total = 0;
    fill(0, &cells, lambda, tau, &mut grid, &mut count, &mut total);
    total
}

fn fill(
    k: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    tau: &Partition,
    grid: &mut [Vec<usize>],
    count: &mut [usize],
    total: &mut u64,
) {
    if k == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[k];
    // values are 1-based so that 0 marks "no constraint"
    let max_right = if c + 1 < grid[r].len() { grid[r][c + 1] } else { usize::MAX };
    let min_above = if r > 0 && c >= lambda.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    for v in min_above..=tau.len().min(max_right) {
        if count[v - 1] >= tau.part(v - 1) {
            continue;
        }
        if v > 1 && count[v - 1] + 1 > count[v - 2] {
            continue;
        }
        count[v - 1] += 1;
        grid[r][c] = v;
        fill(k + 1, cells, lambda, tau, grid, count, total);
        grid[r][c] = 0;
        count[v - 1] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::skew_standard_count;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[])), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coeff(&p(&[2, 2]), &p(&[1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coeff(&p(&[2, 2]), &p(&[1]), &p(&[1, 1, 1])), 0);
        assert_eq!(lr_coeff(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }

    /// Pieri rule: multiplying by a one-row partition adds a horizontal strip.
    #[test]
    fn pieri() {
        for n in 0..=6 {
            for nu in Partition::all(n) {
                for k in 0..=n {
                    for lam in Partition::all(n - k) {
                        let strip = lam.is_contained_in(&nu)
                            && (0..nu.len()).all(|i| i == 0 || nu.part(i) <= lam.part(i - 1));
                        let want = u64::from(strip);
                        let row = if k == 0 { p(&[]) } else { p(&[k]) };
                        assert_eq!(lr_coeff(&nu, &lam, &row), want, "{nu} {lam} {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_and_matches_skew_counts() {
        for n in 0..=8 {
            for nu in Partition::all(n) {
                for k in 0..=n {
                    for lam in Partition::all(k) {
                        let mut skew = 0u128;
                        for tau in Partition::all(n - k) {
                            let c = lr_coeff(&nu, &lam, &tau);
                            assert_eq!(c, lr_coeff(&nu, &tau, &lam));
                            if n <= 6 {
                                skew += c as u128 * tau.standard_tableaux_count();
                            }
                        }
                        if n <= 6 {
                            assert_eq!(skew, skew_standard_count(&nu, &lam));
                        }
                    }
                }
            }
        }
    }
}
