use alloc::vec::Vec;

use num_traits::Zero;

use super::heilbronn;
use super::p1::P1List;
use super::paths;
use super::quotient::Quotient;
use crate::arith;
use crate::linalg::{self, Rational};

/// Which quotient a matrix acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// The full space of modular symbols.
    Full,
    /// The quotient by `x - x^*`.
    Plus,
}

/// Modular symbols of weight 2 for `Gamma_0(N)` presented by Manin symbols.
#[derive(Debug, Clone)]
pub struct ModularSymbolSpace {
    p1: P1List,
    full: Quotient,
    plus: Quotient,
    star: Vec<Vec<Rational>>,
    plus_subspace: Vec<Vec<Rational>>,
}

impl ModularSymbolSpace {
    pub fn new(level: u64) -> Self {
        let p1 = P1List::new(level);
        let n = p1.len();
        let s_pairs: Vec<(usize, usize, i8)> = (0..n).map(|i| (i, p1.apply_s(i), -1)).collect();
        let triples: Vec<[usize; 3]> = (0..n)
            .map(|i| {
                let t = p1.apply_t(i);
                [i, t, p1.apply_t(t)]
            })
            .collect();
        let full = Quotient::build(n, &s_pairs, &triples);
        let mut plus_pairs = s_pairs.clone();
        plus_pairs.extend((0..n).map(|i| (i, p1.apply_star(i), 1)));
        let plus = Quotient::build(n, &plus_pairs, &triples);

        let star: Vec<Vec<Rational>> = full
            .basis
            .iter()
            .map(|&g| full.coords[p1.apply_star(g)].clone())
            .collect();
        // Row vectors v with v * star = v.
        let mut shifted = star.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] -= Rational::from_integer(1.into());
        }
        let plus_subspace = linalg::left_kernel(&shifted, full.dim);
        Self { p1, full, plus, star, plus_subspace }
    }

    pub fn level(&self) -> u64 {
        self.p1.level()
    }

    pub fn p1(&self) -> &P1List {
        &self.p1
    }

    pub fn quotient(&self, sign: Sign) -> &Quotient {
        match sign {
            Sign::Full => &self.full,
            Sign::Plus => &self.plus,
        }
    }

    pub fn dimension(&self, sign: Sign) -> usize {
        self.quotient(sign).dim
    }

    /// Star involution on the full quotient; row `b` holds the image of basis vector `b`.
    pub fn star_matrix(&self) -> &[Vec<Rational>] {
        &self.star
    }

    /// Basis (as row vectors in full-quotient coordinates) of the `+1`
    /// eigenspace of the star involution.
    pub fn plus_subspace(&self) -> &[Vec<Rational>] {
        &self.plus_subspace
    }

    /// Image of generator `g` under the Hecke operator `T_p` (`U_p` when `p | N`),
    /// as a list of generator indices with multiplicity one each.
    pub fn hecke_images(&self, g: usize, p: u64) -> Vec<usize> {
        let family = if self.level() % p == 0 { heilbronn::merel(p) } else { heilbronn::cremona(p) };
        self.images_under(g, &family)
    }

    pub(crate) fn images_under(&self, g: usize, family: &[heilbronn::Matrix]) -> Vec<usize> {
        family.iter().filter_map(|m| self.p1.apply_matrix(g, *m)).collect()
    }

    /// Matrix of `T_p`: row `b` holds the coordinates of `T_p` applied to basis vector `b`.
    pub fn hecke_matrix(&self, p: u64, sign: Sign) -> Vec<Vec<Rational>> {
        let family = if self.level() % p == 0 { heilbronn::merel(p) } else { heilbronn::cremona(p) };
        self.matrix_of_family(&family, sign)
    }

    pub fn matrix_of_family(&self, family: &[heilbronn::Matrix], sign: Sign) -> Vec<Vec<Rational>> {
        let q = self.quotient(sign);
        q.basis
            .iter()
            .map(|&g| q.combine(self.images_under(g, family).into_iter().map(|h| (h, 1))))
            .collect()
    }

    /// Coordinates of the path `{inf, r}` where `r = num/den`.
    pub fn path_to_cusp(&self, num: i64, den: i64, sign: Sign) -> Vec<Rational> {
        let q = self.quotient(sign);
        if den == 0 {
            return alloc::vec![Rational::zero(); q.dim];
        }
        q.combine(
            paths::symbols_to_cusp(num, den)
                .into_iter()
                .map(|(c, d, m)| (self.p1.index(c, d).expect("unimodular segment"), m)),
        )
    }

    /// Matrix of the Fricke involution `W_N = [[0, -1], [N, 0]]`.
    pub fn fricke_matrix(&self, sign: Sign) -> Vec<Vec<Rational>> {
        let q = self.quotient(sign);
        q.basis.iter().map(|&g| self.fricke_image(g, sign)).collect()
    }

    /// Image of generator `g` under `W_N`. For `g = [[a, b], [c, d]]` the
    /// path `g{0, inf}` maps to `{-d/(Nb), -c/(Na)}`.
    pub fn fricke_image(&self, g: usize, sign: Sign) -> Vec<Rational> {
        let n = self.level() as i64;
        let [a, b, c, d] = self.p1.lift_to_sl2(g);
        let head = self.path_to_cusp(-c, n * a, sign);
        let tail = self.path_to_cusp(-d, n * b, sign);
        head.into_iter().zip(tail).map(|(x, y)| x - y).collect()
    }

    /// Primes `p <= bound` with `p ∤ N`.
    pub fn good_primes(&self, bound: u64) -> Vec<u64> {
        arith::primes_up_to(bound)
            .into_iter()
            .filter(|p| self.level() % p != 0)
            .collect()
    }
}
