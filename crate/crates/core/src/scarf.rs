//! Scarf complexes, ghost generators and the `(K, τ)` facet pairs.

use std::collections::{BTreeSet, HashMap};

use crate::complex::{check_vertex_cap, LabeledComplex};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::par::Execution;

/// The subsets of generators whose lcm is shared by no other subset.
///
/// All `2^r` subsets are grouped by lcm in one pass; subsets alone in their
/// class are the faces.
pub fn scarf_complex(ideal: &MonomialIdeal, cap: usize) -> Result<LabeledComplex> {
    scarf_complex_with(ideal, cap, Execution::default())
}

pub fn scarf_complex_with(ideal: &MonomialIdeal, cap: usize, exec: Execution) -> Result<LabeledComplex> {
    ideal.require_nonzero()?;
    let gens = ideal.generators();
    check_vertex_cap(gens.len(), cap)?;
    let n = ideal.ambient_dim();
    let total = 1u64 << gens.len();

    // lcm -> (number of subsets, some subset), counts saturate at 2.
    let parts = exec.map_ranges(total, |range| {
        let mut local: HashMap<Monomial, (u32, u64)> = HashMap::new();
        for mask in range {
            let mut acc = Monomial::one(n);
            for (i, g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.lcm_assign(g);
                }
            }
            local.entry(acc).and_modify(|e| e.0 = 2).or_insert((1, mask));
        }
        local
    });
    let mut classes: HashMap<Monomial, (u32, u64)> = HashMap::new();
    for part in parts {
        for (k, (count, mask)) in part {
            classes.entry(k).and_modify(|e| e.0 = (e.0 + count).min(2)).or_insert((count, mask));
        }
    }

    let unique: BTreeSet<u64> = classes.values().filter(|(c, _)| *c == 1).map(|&(_, m)| m).filter(|&m| m != 0).collect();
    for &mask in &unique {
        let mut bits = mask;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            let sub = mask & !low;
            if sub != 0 && !unique.contains(&sub) {
                return Err(Error::Verification(format!("Scarf family not closed under subsets at mask {mask:#b}")));
            }
            bits &= bits - 1;
        }
        if mask.count_ones() as usize > n {
            return Err(Error::Verification(format!("Scarf face {mask:#b} has more than {n} vertices")));
        }
    }
    let faces = unique.iter().map(|&mask| (0..gens.len()).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>());
    Ok(LabeledComplex::from_closed_simplices(gens.to_vec(), faces))
}

/// Every face of `Δ_M` appears in `complex`, matching vertices by label.
/// A complex supporting a resolution of a generic `M` has this property.
pub fn contains_scarf_complex(complex: &LabeledComplex, ideal: &MonomialIdeal, cap: usize) -> Result<bool> {
    let delta = scarf_complex(ideal, cap)?;
    let mut vertex_of: HashMap<&Monomial, usize> = HashMap::new();
    for v in complex.present_vertices() {
        vertex_of.insert(&complex.vertex_labels()[v], v);
    }
    for face in delta.faces().iter().skip(1) {
        let mapped: Option<Vec<usize>> = face.vertices().iter().map(|&v| vertex_of.get(&delta.vertex_labels()[v]).copied()).collect();
        let Some(mut mapped) = mapped else {
            return Ok(false);
        };
        mapped.sort_unstable();
        if complex.find_face(&mapped).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A vertex of the Artinianized ideal `M*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StarVertex {
    /// Position in the base ideal's generator list.
    Base(usize),
    /// The ghost generator `z_i^D` of variable `i`.
    Ghost(usize),
}

/// `M* = M + (z_1^D, ..., z_n^D)`, minimalized, with bookkeeping of which
/// ghosts survive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhostedIdeal {
    base: MonomialIdeal,
    ghost_exponent: u32,
    star: MonomialIdeal,
    ghost_index: Vec<Option<usize>>,
    vertices: Vec<StarVertex>,
}

impl GhostedIdeal {
    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn ghost_exponent(&self) -> u32 {
        self.ghost_exponent
    }

    pub fn star(&self) -> &MonomialIdeal {
        &self.star
    }

    /// Position of `z_i^D` among the generators of `M*`, if it is minimal.
    pub fn ghost_index(&self, var: usize) -> Option<usize> {
        self.ghost_index[var]
    }

    /// What each generator of `M*` is, by position.
    pub fn vertices(&self) -> &[StarVertex] {
        &self.vertices
    }
}

/// Adds ghost generators `z_i^D`; the default `D` is one more than the
/// largest exponent in `M`.
pub fn star_ideal(ideal: &MonomialIdeal, ghost_exponent: Option<u32>) -> Result<GhostedIdeal> {
    ideal.require_nonzero()?;
    let max = ideal.max_exponent();
    let d = match ghost_exponent {
        Some(d) if d <= max => return Err(Error::GhostExponentTooSmall { given: d, max }),
        Some(d) => d,
        None => max.checked_add(1).ok_or(Error::Overflow)?,
    };
    let n = ideal.ambient_dim();
    let mut gens = ideal.generators().to_vec();
    gens.extend((0..n).map(|i| Monomial::pure_power(n, i, d)));
    let star = MonomialIdeal::new(n, &gens)?;

    let mut ghost_index = vec![None; n];
    let vertices = star
        .generators()
        .iter()
        .enumerate()
        .map(|(pos, g)| match ideal.generators().iter().position(|b| b == g) {
            Some(i) => StarVertex::Base(i),
            None => {
                let var = g.pure_power_var().expect("non-base generators of M* are ghosts");
                ghost_index[var] = Some(pos);
                StarVertex::Ghost(var)
            }
        })
        .collect();
    Ok(GhostedIdeal { base: ideal.clone(), ghost_exponent: d, star, ghost_index, vertices })
}

/// A facet `J` of `Δ_{M*}` written as `(K, τ)`: `K` are the variables whose
/// ghost is not in `J`, `τ` the base generators in `J`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScarfPair {
    pub k: Vec<usize>,
    pub tau: Vec<usize>,
    pub label: Monomial,
}

pub fn scarf_pairs(ideal: &MonomialIdeal, ghost_exponent: Option<u32>, cap: usize) -> Result<Vec<ScarfPair>> {
    scarf_pairs_with(ideal, ghost_exponent, cap, Execution::default())
}

pub fn scarf_pairs_with(
    ideal: &MonomialIdeal,
    ghost_exponent: Option<u32>,
    cap: usize,
    exec: Execution,
) -> Result<Vec<ScarfPair>> {
    let ghosted = star_ideal(ideal, ghost_exponent)?;
    let delta = scarf_complex_with(ghosted.star(), cap, exec)?;
    let n = ideal.ambient_dim();
    let mut pairs: Vec<ScarfPair> = delta
        .facets()
        .into_iter()
        .map(|fid| {
            let face = delta.face(fid);
            let mut tau = Vec::new();
            let mut ghosts = BTreeSet::new();
            for &v in face.vertices() {
                match ghosted.vertices()[v] {
                    StarVertex::Base(i) => tau.push(i),
                    StarVertex::Ghost(var) => {
                        ghosts.insert(var);
                    }
                }
            }
            tau.sort_unstable();
            let k = (0..n).filter(|i| !ghosts.contains(i)).collect();
            ScarfPair { k, tau, label: face.label().clone() }
        })
        .collect();
    pairs.sort_by(|a, b| a.tau.cmp(&b.tau).then_with(|| a.k.cmp(&b.k)));
    Ok(pairs)
}
