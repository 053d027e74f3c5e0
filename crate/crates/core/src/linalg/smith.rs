use alloc::vec::Vec;

/// Smith normal form `D = U A V` of a small square integer matrix.
/// Only `D` and the column transform `V` are retained.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub right: Vec<Vec<i64>>,
}

pub fn smith_normal_form(a: &[Vec<i64>]) -> SmithForm {
    let n = a.len();
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut v: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();

    let col_op = |m: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>, src: usize, dst: usize, k: i64| {
        for row in m.iter_mut() {
            row[dst] -= k * row[src];
        }
        for row in v.iter_mut() {
            row[dst] -= k * row[src];
        }
    };
    let col_swap = |m: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    };

    for t in 0..n {
        loop {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if m[i][j] != 0
                        && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return SmithForm {
                    diagonal: (0..n).map(|i| m[i][i].abs()).collect(),
                    right: v,
                };
            };
            m.swap(t, bi);
            col_swap(&mut m, &mut v, t, bj);
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let k = m[i][t].div_euclid(p);
                if k != 0 {
                    let pivot_row = m[t].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x -= k * y;
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..n {
                let k = m[t][j].div_euclid(p);
                if k != 0 {
                    col_op(&mut m, &mut v, t, j, k);
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| m[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    let row = m[i].clone();
                    for (x, y) in m[t].iter_mut().zip(&row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
    }
    SmithForm {
        diagonal: (0..n).map(|i| m[i][i].abs()).collect(),
        right: v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_z2_times_z4_presentation() {
        // Relations of Z/2 x Z/4 presented with a redundant generator.
        let a = alloc::vec![alloc::vec![2, 0], alloc::vec![-1, 4]];
        let s = smith_normal_form(&a);
        let mut d = s.diagonal.clone();
        d.sort_unstable();
        assert_eq!(d, [1, 8]);
        let a = alloc::vec![alloc::vec![2, 0], alloc::vec![0, 4]];
        assert_eq!(smith_normal_form(&a).diagonal, [2, 4]);
        let a = alloc::vec![alloc::vec![6, 0], alloc::vec![0, 4]];
        assert_eq!(smith_normal_form(&a).diagonal, [2, 12]);
    }
}
