//! Irredundant irreducible decompositions of monomial ideals.
//!
//! Three independent routes: facets of the Scarf complex of `M*` (generic
//! ideals), facets of a minimal cellular resolution (Artinian ideals), and
//! a brute-force search over the exponent box that serves as the oracle.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::LabeledComplex;
use crate::error::{Error, Result};
use crate::monomial::{intersect_irreducibles, IrreducibleIdeal, Monomial, MonomialIdeal};
use crate::par::Execution;
use crate::resolution::{is_resolution_with, FreeComplex};
use crate::scarf::scarf_pairs_with;

/// Default bound on the brute-force candidate box.
pub const DEFAULT_CANDIDATE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Scarf,
    MinimalResolution,
    BruteForce,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Scarf => "scarf",
            Method::MinimalResolution => "minimal",
            Method::BruteForce => "brute",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    components: Vec<IrreducibleIdeal>,
    method: Method,
    source: MonomialIdeal,
}

impl Decomposition {
    fn new(mut components: Vec<IrreducibleIdeal>, method: Method, source: &MonomialIdeal) -> Self {
        components.sort_by(|a, b| b.cmp(a));
        components.dedup();
        Decomposition { components, method, source: source.clone() }
    }

    /// Components in decreasing lexicographic order of exponent.
    pub fn components(&self) -> &[IrreducibleIdeal] {
        &self.components
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    pub fn component_set(&self) -> BTreeSet<IrreducibleIdeal> {
        self.components.iter().cloned().collect()
    }

    pub fn intersection(&self) -> Result<MonomialIdeal> {
        intersect_irreducibles(self.source.ambient_dim(), &self.components)
    }

    /// Dropping any single component enlarges the intersection.
    pub fn is_irredundant(&self) -> Result<bool> {
        let n = self.source.ambient_dim();
        for skip in 0..self.components.len() {
            let rest: Vec<IrreducibleIdeal> =
                self.components.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, c)| c.clone()).collect();
            if intersect_irreducibles(n, &rest)? == self.source {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Intersection equals the source ideal and no component is redundant.
    pub fn verify(&self) -> Result<bool> {
        Ok(self.intersection()? == self.source && self.is_irredundant()?)
    }
}

/// Components `M_J` over the facets `J = (K, τ)` of `Δ_{M*}`.
pub fn decompose_scarf(ideal: &MonomialIdeal, ghost_exponent: Option<u32>, cap: usize) -> Result<Decomposition> {
    decompose_scarf_with(ideal, ghost_exponent, cap, Execution::default())
}

pub fn decompose_scarf_with(
    ideal: &MonomialIdeal,
    ghost_exponent: Option<u32>,
    cap: usize,
    exec: Execution,
) -> Result<Decomposition> {
    if !ideal.is_generic()? {
        return Err(Error::NotGeneric);
    }
    let d = crate::scarf::star_ideal(ideal, ghost_exponent)?.ghost_exponent();
    let pairs = scarf_pairs_with(ideal, Some(d), cap, exec)?;
    let components = pairs
        .iter()
        .map(|p| {
            let exps: Vec<u32> = p.label.exponents().iter().map(|&e| if e < d { e } else { 0 }).collect();
            IrreducibleIdeal::new(Monomial::new(exps))
        })
        .collect();
    Ok(Decomposition::new(components, Method::Scarf, ideal))
}

/// Components `m^{α_τ}` over the facets of a minimal cellular resolution.
pub fn decompose_minimal(ideal: &MonomialIdeal, complex: &LabeledComplex, cap: usize) -> Result<Decomposition> {
    decompose_minimal_with(ideal, complex, cap, Execution::default())
}

pub fn decompose_minimal_with(
    ideal: &MonomialIdeal,
    complex: &LabeledComplex,
    cap: usize,
    exec: Execution,
) -> Result<Decomposition> {
    if !ideal.is_artinian()? {
        return Err(Error::NotArtinian);
    }
    let free = FreeComplex::build(complex, ideal)?;
    if !is_resolution_with(complex, cap, exec)? {
        return Err(Error::NotResolution);
    }
    if !free.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let components = complex.facets().into_iter().map(|f| IrreducibleIdeal::new(complex.face(f).label().clone())).collect();
    Ok(Decomposition::new(components, Method::MinimalResolution, ideal))
}

/// Exhaustive search over exponents `b_i ∈ {0, ..., d_i}`, `d_i` the largest
/// degree of `z_i` among the generators.
///
/// The irreducible ideals containing `M` are closed upwards under
/// inclusion, and any strict inclusion inside the box factors through single
/// steps (raise one exponent by one, or drop a variable). So `m^b` is
/// inclusion-minimal among them exactly when none of its one-step
/// shrinkings still contains `M`.
pub fn decompose_brute(ideal: &MonomialIdeal, cap: usize) -> Result<Decomposition> {
    decompose_brute_with(ideal, cap, Execution::default())
}

pub fn decompose_brute_with(ideal: &MonomialIdeal, cap: usize, exec: Execution) -> Result<Decomposition> {
    ideal.require_nonzero()?;
    let bounds = ideal.max_degrees();
    let mut total: u64 = 1;
    for &d in &bounds {
        total = total.saturating_mul(d as u64 + 1);
    }
    if total > cap as u64 {
        return Err(Error::CapExceeded { what: "brute-force candidates", limit: cap, actual: total.min(usize::MAX as u64) as usize });
    }

    let contains = |b: &[u32]| ideal.generators().iter().all(|g| g.exponents().iter().zip(b).any(|(&e, &bi)| bi > 0 && e >= bi));
    let locally_minimal = |b: &mut Vec<u32>| {
        for i in 0..b.len() {
            if b[i] == 0 {
                continue;
            }
            let orig = b[i];
            let mut shrinks = vec![0];
            if orig < bounds[i] {
                shrinks.push(orig + 1);
            }
            for s in shrinks {
                b[i] = s;
                let smaller_contains = b.iter().any(|&x| x > 0) && contains(b);
                b[i] = orig;
                if smaller_contains {
                    return false;
                }
            }
        }
        true
    };

    let parts = exec.map_ranges(total, |range| {
        let mut found = Vec::new();
        let mut b = vec![0u32; bounds.len()];
        for idx in range {
            let mut rest = idx;
            for (bi, &d) in b.iter_mut().zip(&bounds) {
                *bi = (rest % (d as u64 + 1)) as u32;
                rest /= d as u64 + 1;
            }
            if b.iter().all(|&x| x == 0) || !contains(&b) {
                continue;
            }
            if locally_minimal(&mut b) {
                found.push(IrreducibleIdeal::from_exponents(&b));
            }
        }
        found
    });
    let mut components: Vec<IrreducibleIdeal> = parts.concat();
    components.sort_by(|a, b| b.cmp(a));

    // Greedy redundancy removal in canonical order.
    let n = ideal.ambient_dim();
    let mut i = 0;
    while i < components.len() {
        let rest: Vec<IrreducibleIdeal> =
            components.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, c)| c.clone()).collect();
        if intersect_irreducibles(n, &rest)? == *ideal {
            components.remove(i);
        } else {
            i += 1;
        }
    }
    let decomposition = Decomposition::new(components, Method::BruteForce, ideal);
    if decomposition.intersection()? != *ideal {
        return Err(Error::Verification("brute-force components do not intersect to the ideal".into()));
    }
    Ok(decomposition)
}

/// Supports of the irredundant components.
pub fn associated_primes(ideal: &MonomialIdeal, cap: usize) -> Result<BTreeSet<Vec<usize>>> {
    Ok(decompose_brute(ideal, cap)?.components().iter().map(IrreducibleIdeal::support).collect())
}

/// Intersects the components sharing a support `K`; each group is the
/// `p_K`-primary component.
pub fn primary_grouping(decomposition: &Decomposition) -> Result<BTreeMap<Vec<usize>, MonomialIdeal>> {
    let n = decomposition.source().ambient_dim();
    let mut groups: BTreeMap<Vec<usize>, Vec<IrreducibleIdeal>> = BTreeMap::new();
    for c in decomposition.components() {
        groups.entry(c.support()).or_default().push(c.clone());
    }
    groups.into_iter().map(|(k, comps)| Ok((k, intersect_irreducibles(n, &comps)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{FaceSpec, DEFAULT_VERTEX_CAP};
    use crate::scarf::scarf_complex;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn comps(list: &[&[u32]]) -> BTreeSet<IrreducibleIdeal> {
        list.iter().map(|e| IrreducibleIdeal::from_exponents(e)).collect()
    }

    fn counter() -> MonomialIdeal {
        ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]])
    }

    fn unkel() -> MonomialIdeal {
        ideal(2, &[&[4, 0], &[2, 1], &[1, 2]])
    }

    /// Pairwise inclusion pruning, the literal form of the minimality filter.
    fn pairwise_minimal(m: &MonomialIdeal) -> BTreeSet<IrreducibleIdeal> {
        let bounds = m.max_degrees();
        let mut cands = Vec::new();
        crate::monomial::for_each_in_box(&bounds, |b| {
            let c = IrreducibleIdeal::new(b.clone());
            if !c.is_zero() && m.contained_in_irreducible(&c).unwrap() {
                cands.push(c);
            }
        });
        cands
            .iter()
            .filter(|b| !cands.iter().any(|c| c != *b && c.is_contained_in(b)))
            .cloned()
            .collect()
    }

    #[test]
    fn brute_counterexample() {
        let d = decompose_brute(&counter(), DEFAULT_CANDIDATE_CAP).unwrap();
        assert_eq!(d.component_set(), comps(&[&[1, 2, 1], &[2, 1, 2]]));
        assert!(d.verify().unwrap());
        assert_eq!(d.component_set(), pairwise_minimal(&counter()));
    }

    #[test]
    fn brute_irreducible_and_principal() {
        let irr = ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]);
        assert_eq!(decompose_brute(&irr, DEFAULT_CANDIDATE_CAP).unwrap().component_set(), comps(&[&[2, 3, 1]]));
        let principal = ideal(2, &[&[3, 2]]);
        assert_eq!(
            decompose_brute(&principal, DEFAULT_CANDIDATE_CAP).unwrap().component_set(),
            comps(&[&[3, 0], &[0, 2]])
        );
    }

    #[test]
    fn brute_cap() {
        let m = ideal(2, &[&[9, 0], &[0, 9]]);
        assert!(matches!(decompose_brute(&m, 50), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn scarf_unkel() {
        let d = decompose_scarf(&unkel(), None, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(d.component_set(), comps(&[&[1, 0], &[4, 1], &[2, 2]]));
        assert!(d.verify().unwrap());
        assert_eq!(d.component_set(), decompose_brute(&unkel(), DEFAULT_CANDIDATE_CAP).unwrap().component_set());
    }

    #[test]
    fn scarf_square_and_refusal() {
        let sq = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(decompose_scarf(&sq, None, DEFAULT_VERTEX_CAP).unwrap().component_set(), comps(&[&[2, 1], &[1, 2]]));
        assert_eq!(decompose_scarf(&counter(), None, DEFAULT_VERTEX_CAP).unwrap_err(), Error::NotGeneric);
    }

    #[test]
    fn minimal_on_hull_complex() {
        // Triangle {1,2,3} and quadrilateral {0,1,3,4} glued along edge {1,3}.
        let v = |id: i64, x: usize| FaceSpec { id, dim: 0, vertices: vec![x], boundary: vec![] };
        let e = |id: i64, a: usize, b: usize| FaceSpec {
            id,
            dim: 1,
            vertices: vec![a, b],
            boundary: vec![(b as i64, 1), (a as i64, -1)],
        };
        let specs = vec![
            v(0, 0),
            v(1, 1),
            v(2, 2),
            v(3, 3),
            v(4, 4),
            e(10, 0, 1),
            e(11, 1, 3),
            e(12, 3, 4),
            e(13, 0, 4),
            e(14, 1, 2),
            e(15, 2, 3),
            FaceSpec { id: 20, dim: 2, vertices: vec![0, 1, 3, 4], boundary: vec![(10, 1), (11, 1), (12, 1), (13, -1)] },
            FaceSpec { id: 21, dim: 2, vertices: vec![1, 2, 3], boundary: vec![(14, 1), (15, 1), (11, -1)] },
        ];
        let m = counter();
        let x = LabeledComplex::polyhedral_from_incidence(m.generators().to_vec(), &specs).unwrap();
        let d = decompose_minimal(&m, &x, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(d.component_set(), comps(&[&[1, 2, 1], &[2, 1, 2]]));
    }

    #[test]
    fn minimal_preconditions() {
        let m = ideal(1, &[&[3]]);
        let point = LabeledComplex::full_simplex(m.generators().to_vec()).unwrap();
        assert_eq!(decompose_minimal(&m, &point, DEFAULT_VERTEX_CAP).unwrap().component_set(), comps(&[&[3]]));

        let sq = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let taylor = LabeledComplex::full_simplex(sq.generators().to_vec()).unwrap();
        assert_eq!(decompose_minimal(&sq, &taylor, DEFAULT_VERTEX_CAP).unwrap_err(), Error::NotMinimal);
        let hollow = LabeledComplex::simplicial_from_facets(sq.generators().to_vec(), &[vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap();
        assert_eq!(decompose_minimal(&sq, &hollow, DEFAULT_VERTEX_CAP).unwrap_err(), Error::NotResolution);
        let scarf = scarf_complex(&unkel(), DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(decompose_minimal(&unkel(), &scarf, DEFAULT_VERTEX_CAP).unwrap_err(), Error::NotArtinian);
        let scarf_sq = scarf_complex(&sq, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(
            decompose_minimal(&sq, &scarf_sq, DEFAULT_VERTEX_CAP).unwrap().component_set(),
            decompose_scarf(&sq, None, DEFAULT_VERTEX_CAP).unwrap().component_set()
        );
    }

    #[test]
    fn primes_and_grouping() {
        let primes = associated_primes(&unkel(), DEFAULT_CANDIDATE_CAP).unwrap();
        assert_eq!(primes, BTreeSet::from([vec![0], vec![0, 1]]));
        let sq = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(associated_primes(&sq, DEFAULT_CANDIDATE_CAP).unwrap(), BTreeSet::from([vec![0, 1]]));
        let xy = ideal(2, &[&[1, 1]]);
        assert_eq!(associated_primes(&xy, DEFAULT_CANDIDATE_CAP).unwrap(), BTreeSet::from([vec![0], vec![1]]));

        let groups = primary_grouping(&decompose_brute(&unkel(), DEFAULT_CANDIDATE_CAP).unwrap()).unwrap();
        assert_eq!(groups[&vec![0]], ideal(2, &[&[1, 0]]));
        assert_eq!(groups[&vec![0, 1]], ideal(2, &[&[4, 0], &[2, 1], &[0, 2]]).intersect(&ideal(2, &[&[4, 0], &[0, 1]])).unwrap());
        assert_eq!(groups[&vec![0, 1]], ideal(2, &[&[4, 0], &[2, 1], &[0, 2]]));
        let all = groups.values().try_fold(MonomialIdeal::unit(2), |acc, g| acc.intersect(g)).unwrap();
        assert_eq!(all, unkel());

        let sq_groups = primary_grouping(&decompose_brute(&sq, DEFAULT_CANDIDATE_CAP).unwrap()).unwrap();
        assert_eq!(sq_groups.len(), 1);
        assert_eq!(sq_groups[&vec![0, 1]], sq);
    }
}
