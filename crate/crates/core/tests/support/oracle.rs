//! Brute-force oracle for the augmentation filtration, independent of
//! `Lattice` and `AugmentationFiltration`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use stickel_core::groupring::{AbelianGroup, GroupRingElement, VanishingOrder};
use stickel_core::linalg::Rational;

/// Echelon basis with reduced off-pivot entries; independent of `Lattice`.
pub fn naive_hnf(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..ncols {
        loop {
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
            let live: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if live.len() <= 1 {
                break;
            }
            let best = *live.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            let pivot = rows[best].clone();
            for &i in &live {
                if i != best {
                    let q = rows[i][c].div_floor(&pivot[c]);
                    for (x, y) in rows[i].iter_mut().zip(&pivot) {
                        *x -= &q * y;
                    }
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            let mut r = rows.swap_remove(i);
            if r[c].is_negative() {
                r.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push(r);
        }
    }
    // Reduce entries above pivots.
    for i in 0..out.len() {
        let pc = out[i].iter().position(|x| !x.is_zero()).unwrap();
        for j in 0..i {
            let q = out[j][pc].div_floor(&out[i][pc]);
            let pivot = out[i].clone();
            for (x, y) in out[j].iter_mut().zip(&pivot) {
                *x -= &q * y;
            }
        }
    }
    out
}

pub fn naive_contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut w = v.to_vec();
    for row in basis {
        let pc = row.iter().position(|x| !x.is_zero()).unwrap();
        if w[pc].is_zero() {
            continue;
        }
        let (q, r) = w[pc].div_rem(&row[pc]);
        if !r.is_zero() {
            return false;
        }
        for (x, y) in w.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    w.iter().all(Zero::is_zero)
}

/// Layers `I^1..I^{r_max+1}` as full coefficient lattices in `Z^|G|`, built
/// from products with `g - 1` for every group element `g`.
pub fn oracle_layers(group: &AbelianGroup, count: usize) -> Vec<Vec<Vec<BigInt>>> {
    let n = group.order();
    let mul = |x: &[BigInt], g: usize| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        for (h, c) in x.iter().enumerate() {
            out[group.mul(g, h)] += c;
        }
        out
    };
    let mut first = Vec::new();
    for g in 1..n {
        let mut v = vec![BigInt::zero(); n];
        v[g] += 1;
        v[0] -= 1;
        first.push(v);
    }
    let mut layers = vec![naive_hnf(first, n)];
    while layers.len() < count {
        let prev = layers.last().unwrap();
        let mut gens = Vec::new();
        for b in prev {
            for g in 0..n {
                let gb = mul(b, g);
                gens.push(gb.iter().zip(b).map(|(x, y)| x - y).collect());
            }
        }
        layers.push(naive_hnf(gens, n));
    }
    layers
}

pub fn oracle_order(layers: &[Vec<Vec<BigInt>>], x: &[BigInt], r_max: u32) -> VanishingOrder {
    if x.iter().all(Zero::is_zero) {
        return VanishingOrder::Zero;
    }
    if x.iter().fold(BigInt::zero(), |a, c| a + c) != BigInt::zero() {
        return VanishingOrder::Finite(0);
    }
    for r in 1..=r_max as usize {
        if !naive_contains(&layers[r], x) {
            return VanishingOrder::Finite(r as u32);
        }
        if layers[r] == layers[r - 1] {
            let at = layers.windows(2).position(|w| w[0] == w[1]).unwrap() + 1;
            return VanishingOrder::Stabilized { at: at as u32 };
        }
    }
    VanishingOrder::AtLeast(r_max + 1)
}

/// Every abelian group of order <= 12, by invariant factors.
pub fn small_groups() -> Vec<Vec<u64>> {
    vec![
        vec![], vec![2], vec![3], vec![4], vec![2, 2], vec![5], vec![6], vec![7], vec![8],
        vec![2, 4], vec![2, 2, 2], vec![9], vec![3, 3], vec![10], vec![11], vec![12], vec![2, 6],
    ]
}

pub fn random_element(group: &Arc<AbelianGroup>, rng: &mut ChaCha8Rng) -> GroupRingElement {
    let n = group.order();
    let one = GroupRingElement::one(group);
    let depth = rng.gen_range(0..4);
    let mut x = GroupRingElement::from_i64(group, &(0..n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
    for _ in 0..depth {
        let g = rng.gen_range(0..n);
        x = &x * &(&GroupRingElement::basis(group, g) - &one);
    }
    if rng.gen_bool(0.2) {
        x = x.scale(&Rational::from_integer(rng.gen_range(2..5).into()));
    }
    x
}
