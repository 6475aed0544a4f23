//! Property tests for the algebraic and combinatorial invariants.

mod common;

use std::collections::BTreeSet;

use monores::complex::{LabeledComplex, DEFAULT_VERTEX_CAP};
use monores::decomposition::{decompose_brute, decompose_minimal, decompose_scarf, DEFAULT_CANDIDATE_CAP};
use monores::io::{format_ideal_text, parse_ideal};
use monores::monomial::{default_names, for_each_in_box, minimalize, IrreducibleIdeal, Monomial, MonomialIdeal};
use monores::residue::{annihilator_bounds, classify, residue_current, Status};
use monores::resolution::{is_resolution, FreeComplex};
use monores::scarf::{contains_scarf_complex, scarf_complex, scarf_pairs};
use proptest::prelude::*;

fn exps(n: usize, e_max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=e_max, n).prop_filter("not the unit monomial", |v| v.iter().any(|&e| e > 0))
}

fn gens_in(n: usize, r_max: usize, e_max: u32) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(exps(n, e_max).prop_map(Monomial::new), 1..=r_max)
}

fn ideal_in(n: usize, r_max: usize, e_max: u32) -> impl Strategy<Value = MonomialIdeal> {
    gens_in(n, r_max, e_max).prop_map(move |g| MonomialIdeal::new(n, &g).unwrap())
}

/// Ideals in 1 to 4 variables.
fn ideal(r_max: usize, e_max: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(move |n| ideal_in(n, r_max, e_max))
}

/// An ideal with pure powers of every variable added.
fn artinian(r_max: usize, e_max: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(move |n| {
        (gens_in(n, r_max, e_max), prop::collection::vec(1..=e_max + 1, n)).prop_map(move |(mut g, powers)| {
            g.extend(powers.iter().enumerate().map(|(i, &d)| Monomial::pure_power(n, i, d)));
            MonomialIdeal::new(n, &g).unwrap()
        })
    })
}

fn same_dim_pair(r_max: usize, e_max: u32) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(move |n| (ideal_in(n, r_max, e_max), ideal_in(n, r_max, e_max), ideal_in(n, r_max, e_max)))
}

/// A simplicial complex on the generators, every vertex present.
fn with_complex(m: MonomialIdeal) -> impl Strategy<Value = (MonomialIdeal, LabeledComplex)> {
    let r = m.len();
    prop::collection::vec(prop::collection::btree_set(0..r, 1..=r), 0..=r).prop_map(move |extra| {
        let mut facets: Vec<Vec<usize>> = (0..r).map(|v| vec![v]).collect();
        facets.extend(extra.into_iter().map(|s| s.into_iter().collect()));
        let x = LabeledComplex::simplicial_from_facets(m.generators().to_vec(), &facets).unwrap();
        (m.clone(), x)
    })
}

fn degree_box(a: &MonomialIdeal, b: &MonomialIdeal) -> Vec<u32> {
    a.max_degrees().iter().zip(b.max_degrees()).map(|(&x, y)| x.max(y) + 1).collect()
}

fn taylor(m: &MonomialIdeal) -> LabeledComplex {
    LabeledComplex::full_simplex(m.generators().to_vec()).unwrap()
}

/// Inclusion-minimal irreducible ideals containing `m`, by pairwise comparison.
fn pairwise_components(m: &MonomialIdeal) -> BTreeSet<IrreducibleIdeal> {
    let mut cands = Vec::new();
    for_each_in_box(&m.max_degrees(), |b| {
        let c = IrreducibleIdeal::new(b.clone());
        if !c.is_zero() && m.contained_in_irreducible(&c).unwrap() {
            cands.push(c);
        }
    });
    cands.iter().filter(|b| !cands.iter().any(|c| c != *b && c.is_contained_in(b))).cloned().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_idempotent_and_order_free(gens in (1usize..=4).prop_flat_map(|n| gens_in(n, 8, 4)), k in any::<usize>()) {
        let once = minimalize(&gens).unwrap();
        prop_assert_eq!(minimalize(&once).unwrap(), once.clone());
        let mut shuffled = gens.clone();
        shuffled.reverse();
        let mid = k % shuffled.len();
        shuffled.rotate_left(mid);
        prop_assert_eq!(minimalize(&shuffled).unwrap(), once);
    }

    #[test]
    fn intersection_laws((a, b, c) in same_dim_pair(4, 4)) {
        let ab = a.intersect(&b).unwrap();
        prop_assert_eq!(&ab, &b.intersect(&a).unwrap());
        prop_assert_eq!(ab.intersect(&c).unwrap(), a.intersect(&b.intersect(&c).unwrap()).unwrap());
        let mut ok = true;
        for_each_in_box(&degree_box(&ab, &c), |m| {
            ok &= ab.member(m).unwrap() == (a.member(m).unwrap() && b.member(m).unwrap());
        });
        prop_assert!(ok);
    }

    #[test]
    fn strongly_generic_implies_generic(m in ideal(6, 4)) {
        if m.is_strongly_generic().unwrap() {
            prop_assert!(m.is_generic().unwrap());
        }
    }

    #[test]
    fn two_variables_are_always_generic(m in ideal_in(2, 8, 6)) {
        prop_assert!(m.is_generic().unwrap());
    }

    #[test]
    fn ideal_text_round_trip(m in ideal(6, 5)) {
        let names = default_names(m.ambient_dim());
        let parsed = parse_ideal(&format_ideal_text(&m, &names)).unwrap();
        prop_assert_eq!(parsed.ideal, m);
        prop_assert_eq!(parsed.names, names);
    }

    #[test]
    fn chain_condition_on_random_complexes((m, x) in ideal(5, 4).prop_flat_map(with_complex)) {
        prop_assert!(FreeComplex::build(&x, &m).unwrap().verify_chain());
        prop_assert!(FreeComplex::build(&taylor(&m), &m).unwrap().verify_chain());
    }

    #[test]
    fn restriction_is_induced_subcomplex((m, x) in ideal(5, 4).prop_flat_map(with_complex)) {
        for beta in x.lcm_lattice(DEFAULT_VERTEX_CAP).unwrap() {
            let vb: Vec<usize> =
                (0..m.len()).filter(|&v| x.vertex_labels()[v].divides(&beta).unwrap()).collect();
            prop_assert_eq!(x.restrict_leq(&beta).unwrap(), x.induced_subcomplex(&vb));
        }
    }

    #[test]
    fn euler_characteristic_matches_homology((_m, x) in ideal(6, 3).prop_flat_map(with_complex)) {
        let ranks = x.reduced_homology_ranks();
        let alternating: i64 = ranks.iter().enumerate().map(|(i, &r)| if i % 2 == 1 { r as i64 } else { -(r as i64) }).sum();
        prop_assert_eq!(x.euler_characteristic(), alternating);
    }

    #[test]
    fn cones_are_acyclic((m, x) in ideal(5, 3).prop_flat_map(with_complex)) {
        let apex = m.len();
        let mut labels = x.vertex_labels().to_vec();
        labels.push(Monomial::one(m.ambient_dim()));
        let facets: Vec<Vec<usize>> = x
            .facets()
            .iter()
            .map(|&f| x.face(f).vertices().iter().copied().chain([apex]).collect())
            .collect();
        let cone = LabeledComplex::simplicial_from_facets(labels, &facets).unwrap();
        prop_assert!(cone.reduced_homology_ranks().iter().all(|&r| r == 0));
    }

    #[test]
    fn taylor_is_a_resolution(m in ideal(6, 6)) {
        prop_assert!(is_resolution(&taylor(&m), DEFAULT_VERTEX_CAP).unwrap());
    }

    #[test]
    fn minimality_tests_agree((m, x) in ideal(5, 3).prop_flat_map(with_complex)) {
        let f = FreeComplex::build(&x, &m).unwrap();
        prop_assert_eq!(f.is_minimal(), !x.has_equal_incident_labels());
        prop_assert_eq!(f.is_minimal(), f.is_minimal_by_degree());
    }

    #[test]
    fn scarf_ranks_bounded_by_taylor(m in ideal(6, 4)) {
        if m.is_generic().unwrap() {
            let s = scarf_complex(&m, DEFAULT_VERTEX_CAP).unwrap();
            prop_assert!(is_resolution(&s, DEFAULT_VERTEX_CAP).unwrap());
            let small = FreeComplex::build(&s, &m).unwrap();
            let big = FreeComplex::build(&taylor(&m), &m).unwrap();
            prop_assert!(small.ranks().iter().zip(big.ranks()).all(|(a, b)| a <= b));
            prop_assert!(small.ranks().len() <= big.ranks().len());
        }
    }

    #[test]
    fn scarf_structure(m in ideal(7, 4)) {
        let n = m.ambient_dim();
        let x = scarf_complex(&m, DEFAULT_VERTEX_CAP).unwrap();
        prop_assert!(x.dim() < n as isize);
        for f in x.faces().iter().skip(1) {
            for drop in 0..f.vertices().len() {
                let sub: Vec<usize> = f.vertices().iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect();
                prop_assert!(x.find_face(&sub).is_some());
            }
        }
        let d = m.max_exponent() + 1;
        let key = |d: u32| -> Vec<(Vec<usize>, Vec<usize>)> {
            scarf_pairs(&m, Some(d), DEFAULT_VERTEX_CAP).unwrap().into_iter().map(|p| (p.k, p.tau)).collect()
        };
        prop_assert_eq!(key(d), key(d + 2));
    }

    #[test]
    fn artinian_generic_scarf_triangulates(m in artinian(4, 4)) {
        if m.is_generic().unwrap() {
            let n = m.ambient_dim();
            let x = scarf_complex(&m, DEFAULT_VERTEX_CAP).unwrap();
            prop_assert!(x.facets().iter().all(|&f| x.face(f).vertices().len() == n));
        }
    }

    #[test]
    fn resolutions_of_generic_ideals_contain_scarf((m, x) in ideal(5, 4).prop_flat_map(with_complex)) {
        if m.is_generic().unwrap() && is_resolution(&x, DEFAULT_VERTEX_CAP).unwrap() {
            prop_assert!(contains_scarf_complex(&x, &m, DEFAULT_VERTEX_CAP).unwrap());
        }
    }

    #[test]
    fn brute_matches_pairwise_oracle(m in ideal(5, 4)) {
        let d = decompose_brute(&m, DEFAULT_CANDIDATE_CAP).unwrap();
        prop_assert!(d.verify().unwrap());
        prop_assert_eq!(d.component_set(), pairwise_components(&m));
    }

    #[test]
    fn decomposition_routes_agree(m in ideal(6, 5)) {
        if m.is_generic().unwrap() {
            let scarf = decompose_scarf(&m, None, DEFAULT_VERTEX_CAP).unwrap();
            let brute = decompose_brute(&m, DEFAULT_CANDIDATE_CAP).unwrap();
            prop_assert!(scarf.verify().unwrap());
            prop_assert_eq!(scarf.component_set(), brute.component_set());
        }
    }

    #[test]
    fn minimal_route_on_artinian(m in artinian(4, 4)) {
        let x = scarf_complex(&m, DEFAULT_VERTEX_CAP).unwrap();
        let f = FreeComplex::build(&x, &m).unwrap();
        if f.is_minimal() && is_resolution(&x, DEFAULT_VERTEX_CAP).unwrap() {
            let d = decompose_minimal(&m, &x, DEFAULT_VERTEX_CAP).unwrap();
            prop_assert_eq!(d.component_set(), decompose_brute(&m, DEFAULT_CANDIDATE_CAP).unwrap().component_set());
        }
        // Components never outnumber the top-dimensional faces of a resolution.
        let t = taylor(&m);
        let count = decompose_brute(&m, DEFAULT_CANDIDATE_CAP).unwrap().components().len();
        prop_assert!(count <= t.graded(m.ambient_dim()).len());
    }

    #[test]
    fn residue_invariants(m in ideal(5, 3)) {
        let t = taylor(&m);
        let cur = classify(residue_current(&m, &t).unwrap()).unwrap();
        for e in cur.entries() {
            if e.status == Status::Zero {
                prop_assert!(!m.contained_in_irreducible(&e.annihilator).unwrap());
            }
            let restricted: Vec<u32> =
                (0..m.ambient_dim()).map(|i| if e.k.contains(&i) { e.alpha.degree(i) } else { 0 }).collect();
            prop_assert_eq!(e.annihilator.exponent().exponents(), &restricted[..]);
            prop_assert!(e.k.iter().all(|&i| e.alpha.degree(i) > 0));
        }
        let (lower, upper) = annihilator_bounds(&cur).unwrap();
        prop_assert!(m.contains_ideal_on_box(&lower).unwrap());
        prop_assert!(upper.contains_ideal_on_box(&m).unwrap());
        if cur.is_complete() {
            prop_assert_eq!(&lower, &m);
            if m.is_artinian().unwrap() {
                prop_assert!(cur.count(Status::Nonzero) >= cur.components().len());
            }
        }
    }

    #[test]
    fn generic_residue_matches_scarf(m in ideal(5, 4)) {
        if m.is_generic().unwrap() {
            let x = scarf_complex(&m, DEFAULT_VERTEX_CAP).unwrap();
            let cur = classify(residue_current(&m, &x).unwrap()).unwrap();
            let nonzero: BTreeSet<IrreducibleIdeal> =
                cur.entries().iter().filter(|e| e.status == Status::Nonzero).map(|e| e.annihilator.clone()).collect();
            prop_assert_eq!(nonzero, decompose_scarf(&m, None, DEFAULT_VERTEX_CAP).unwrap().component_set());
            prop_assert_eq!(cur.count(Status::Unknown), 0);

            // Passing to the larger Taylor complex never turns a Nonzero face Zero.
            let big = classify(residue_current(&m, &taylor(&m)).unwrap()).unwrap();
            for e in cur.entries().iter().filter(|e| e.status == Status::Nonzero) {
                let same = big.entries().iter().find(|b| b.k == e.k && b.tau == e.tau).unwrap();
                prop_assert_ne!(same.status, Status::Zero);
            }
        }
    }
}
