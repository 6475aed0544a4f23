//! Seeded generators shared by the integration suites.
#![allow(dead_code)]

use monores::complex::LabeledComplex;
use monores::monomial::{Monomial, MonomialIdeal};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, gens).unwrap()
}

pub fn counterexample() -> MonomialIdeal {
    ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]])
}

pub fn unkel() -> MonomialIdeal {
    ideal(2, &[&[4, 0], &[2, 1], &[1, 2]])
}

pub fn square() -> MonomialIdeal {
    ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
}

/// Up to `r_max` random generators in `n` variables with exponents in
/// `0..=e_max`, none equal to 1.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, r_max: usize, e_max: u32) -> MonomialIdeal {
    let r = rng.gen_range(1..=r_max);
    let mut gens = Vec::with_capacity(r);
    while gens.len() < r {
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=e_max)).collect();
        if exps.iter().any(|&e| e > 0) {
            gens.push(Monomial::new(exps));
        }
    }
    MonomialIdeal::new(n, &gens).unwrap()
}

/// A random generic ideal. With `artinian`, pure powers of every variable
/// are included and count towards `r_max`.
pub fn random_generic(rng: &mut ChaCha8Rng, n: usize, r_max: usize, e_max: u32, artinian: bool) -> MonomialIdeal {
    loop {
        let mut gens: Vec<Monomial> = Vec::new();
        let extra = if artinian { r_max.saturating_sub(n).max(1) } else { r_max };
        let m = random_ideal(rng, n, extra, e_max);
        gens.extend(m.generators().iter().cloned());
        if artinian {
            for i in 0..n {
                gens.push(Monomial::pure_power(n, i, rng.gen_range(1..=e_max + 1)));
            }
        }
        let candidate = MonomialIdeal::new(n, &gens).unwrap();
        if candidate.is_generic().unwrap() && (!artinian || candidate.len() <= r_max.max(n)) {
            return candidate;
        }
    }
}

/// An Artinian staircase in two variables: generators `(a_i, b_i)` with
/// `a` strictly decreasing to 0 and `b` strictly increasing from 0.
pub fn random_staircase(rng: &mut ChaCha8Rng, r: usize) -> (MonomialIdeal, Vec<u32>, Vec<u32>) {
    let mut pool: Vec<u32> = (1..=3 * r as u32).collect();
    pool.shuffle(rng);
    let mut a: Vec<u32> = pool[..r - 1].to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    a.push(0);
    pool.shuffle(rng);
    let mut b: Vec<u32> = vec![0];
    let mut rest = pool[..r - 1].to_vec();
    rest.sort_unstable();
    b.extend(rest);
    let gens: Vec<Monomial> = a.iter().zip(&b).map(|(&x, &y)| Monomial::new(vec![x, y])).collect();
    (MonomialIdeal::new(2, &gens).unwrap(), a, b)
}

/// A random simplicial complex containing every vertex, on `labels`.
pub fn random_complex(rng: &mut ChaCha8Rng, labels: Vec<Monomial>) -> LabeledComplex {
    let r = labels.len();
    let mut facets: Vec<Vec<usize>> = (0..r).map(|v| vec![v]).collect();
    for _ in 0..rng.gen_range(0..=r) {
        let size = rng.gen_range(1..=r);
        let mut verts: Vec<usize> = (0..r).collect();
        verts.shuffle(rng);
        let mut f = verts[..size].to_vec();
        f.sort_unstable();
        facets.push(f);
    }
    LabeledComplex::simplicial_from_facets(labels, &facets).unwrap()
}
