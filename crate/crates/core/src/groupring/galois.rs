use alloc::sync::Arc;
use alloc::vec::Vec;

use super::abelian::AbelianGroup;
use crate::arith;
use crate::error::{Error, Result};
use crate::linalg::smith_normal_form;

const NONE: u32 = u32::MAX;

/// `G_M = (Z/M)^* / {±1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisGroup {
    modulus: u64,
    group: Arc<AbelianGroup>,
    /// Residue `a mod M` to element index.
    residue_map: Vec<u32>,
    /// Smallest nonnegative representative of each element.
    reps: Vec<u64>,
    generator_residues: Vec<u64>,
}

impl GaloisGroup {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 3 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        let m = modulus;
        let class_rep = |a: u64| a.min(m - a);
        let order = (arith::totient(m) / 2) as usize;

        // Polycyclic presentation from a greedy generating set.
        let mut gens: Vec<u64> = Vec::new();
        let mut rel_orders: Vec<u64> = Vec::new();
        let mut relations: Vec<Vec<u64>> = Vec::new();
        // Known class reps and their exponents in terms of `gens`.
        let mut known: alloc::collections::BTreeMap<u64, Vec<u64>> = alloc::collections::BTreeMap::new();
        known.insert(1, Vec::new());
        for a in 2..m {
            if known.len() == order {
                break;
            }
            if arith::gcd(a, m) != 1 || a != class_rep(a) || known.contains_key(&a) {
                continue;
            }
            let j = gens.len();
            for e in known.values_mut() {
                e.push(0);
            }
            // Relative order of a over the current subgroup.
            let mut n = 1u64;
            let mut power = a;
            while !known.contains_key(&class_rep(power)) {
                power = arith::mul_mod(power, a, m);
                n += 1;
            }
            let tail = known[&class_rep(power)].clone();
            let mut row = alloc::vec![0u64; j + 1];
            row[..j].copy_from_slice(&tail[..j]);
            relations.push(row);
            rel_orders.push(n);
            gens.push(a);
            let old: Vec<(u64, Vec<u64>)> = known.iter().map(|(k, v)| (*k, v.clone())).collect();
            let mut ak = 1u64;
            for k in 1..n {
                ak = arith::mul_mod(ak, a, m);
                for (h, e) in &old {
                    let prod = class_rep(arith::mul_mod(*h, ak, m));
                    let mut e = e.clone();
                    e[j] = k;
                    known.insert(prod, e);
                }
            }
        }
        debug_assert_eq!(known.len(), order);

        let k = gens.len();
        // Relation matrix: row j says n_j e_j - (exponents of g_j^{n_j}) = 0.
        let mat: Vec<Vec<i64>> = (0..k)
            .map(|j| {
                (0..k)
                    .map(|i| {
                        let tail = relations[j].get(i).copied().unwrap_or(0) as i64;
                        if i == j { rel_orders[j] as i64 } else { -tail }
                    })
                    .collect()
            })
            .collect();
        let snf = smith_normal_form(&mat);
        let keep: Vec<usize> = (0..k).filter(|&i| snf.diagonal[i].abs() > 1).collect();
        let invariants: Vec<u64> = keep.iter().map(|&i| snf.diagonal[i].unsigned_abs()).collect();
        let group = AbelianGroup::new(&invariants);

        let to_element = |e: &[u64]| -> usize {
            let coords: Vec<u64> = keep
                .iter()
                .zip(&invariants)
                .map(|(&col, &d)| {
                    let s: i128 = e
                        .iter()
                        .zip(&snf.right)
                        .map(|(&x, row)| x as i128 * row[col] as i128)
                        .sum();
                    s.rem_euclid(d as i128) as u64
                })
                .collect();
            group.element(&coords)
        };
        let mut residue_map = alloc::vec![NONE; m as usize];
        let mut reps = alloc::vec![0u64; order];
        for (a, e) in &known {
            let mut e = e.clone();
            e.resize(k, 0);
            let g = to_element(&e);
            reps[g] = *a;
            residue_map[*a as usize] = g as u32;
            residue_map[(m - a) as usize] = g as u32;
        }
        let generator_residues = group.generators().into_iter().map(|g| reps[g]).collect();
        Ok(Self { modulus, group: Arc::new(group), residue_map, reps, generator_residues })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn invariants(&self) -> &[u64] {
        self.group.invariants()
    }

    /// Residues whose images are the standard generators.
    pub fn generator_residues(&self) -> &[u64] {
        &self.generator_residues
    }

    /// Element index of `sigma_a`.
    pub fn element_of(&self, a: i64) -> Result<usize> {
        let r = a.rem_euclid(self.modulus as i64) as usize;
        match self.residue_map[r] {
            NONE => Err(Error::NotAUnit { a, modulus: self.modulus }),
            g => Ok(g as usize),
        }
    }

    /// Smallest nonnegative residue in the class of `g`.
    pub fn representative(&self, g: usize) -> u64 {
        self.reps[g]
    }

    pub fn representatives(&self) -> &[u64] {
        &self.reps
    }
}
