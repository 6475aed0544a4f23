//! The cellular free complex `F_X` of a labeled complex.
//!
//! `A_k` has one basis element per face of `X_k` (faces of dimension
//! `k - 1`), and `f_k(e_τ) = Σ sgn(τ', τ) · (m_τ / m_τ') · e_τ'` over the
//! codimension-one faces `τ'` of `τ`. Matrices are kept sparse.

use std::collections::{BTreeSet, HashMap};

use crate::complex::LabeledComplex;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::par::Execution;

/// A nonzero matrix entry `sign · monomial` at `(row, col)`, where rows
/// index `X_{k-1}` and columns index `X_k` in the complex's face order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub monomial: Monomial,
}

#[derive(Debug, Clone)]
pub struct FreeComplex {
    ideal: MonomialIdeal,
    complex: LabeledComplex,
    ranks: Vec<usize>,
    // differentials[k] holds f_k; index 0 is unused.
    differentials: Vec<Vec<DifferentialEntry>>,
}

impl FreeComplex {
    /// Builds `F_X`, requiring the vertex labels to be exactly the minimal
    /// generators of `ideal`.
    pub fn build(complex: &LabeledComplex, ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_nonzero()?;
        if complex.ambient_dim() != ideal.ambient_dim() {
            return Err(Error::DimensionMismatch { left: complex.ambient_dim(), right: ideal.ambient_dim() });
        }
        let present: BTreeSet<&Monomial> =
            complex.present_vertices().iter().map(|&v| &complex.vertex_labels()[v]).collect();
        let gens: BTreeSet<&Monomial> = ideal.generators().iter().collect();
        if present != gens || complex.present_vertices().len() != ideal.len() {
            return Err(Error::LabelMismatch);
        }

        let length = (complex.dim() + 1).max(0) as usize;
        let ranks: Vec<usize> = (0..=length).map(|k| complex.graded(k).len()).collect();
        let mut differentials = vec![Vec::new()];
        for k in 1..=length {
            let row_of: HashMap<usize, usize> =
                complex.graded(k - 1).iter().enumerate().map(|(r, &id)| (id, r)).collect();
            let mut entries = Vec::new();
            for (col, &id) in complex.graded(k).iter().enumerate() {
                let face = complex.face(id);
                for &(fid, sign) in face.boundary() {
                    let monomial = face.label().checked_div(complex.face(fid).label())?;
                    entries.push(DifferentialEntry { row: row_of[&fid], col, sign, monomial });
                }
            }
            entries.sort_by_key(|e| (e.col, e.row));
            differentials.push(entries);
        }
        Ok(FreeComplex { ideal: ideal.clone(), complex: complex.clone(), ranks, differentials })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn complex(&self) -> &LabeledComplex {
        &self.complex
    }

    /// `|X_k|` for `k = 0 ..= dim X + 1`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Number of differentials, `dim X + 1`.
    pub fn length(&self) -> usize {
        self.differentials.len() - 1
    }

    /// Entries of `f_k`, `1 <= k <= length`.
    pub fn differential(&self, k: usize) -> &[DifferentialEntry] {
        &self.differentials[k]
    }

    /// `f_k ∘ f_{k+1} = 0` for all `k`, as matrices over the polynomial ring.
    pub fn verify_chain(&self) -> bool {
        (1..self.length()).all(|k| composition_vanishes(&self.differentials[k], &self.differentials[k + 1]))
    }

    /// No differential entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().flatten().all(|e| !e.monomial.is_one())
    }

    /// Minimality read off the labels: total degree strictly increases
    /// along every incidence.
    pub fn is_minimal_by_degree(&self) -> bool {
        self.complex
            .faces()
            .iter()
            .all(|f| f.boundary().iter().all(|&(fid, _)| f.label().total_degree() > self.complex.face(fid).label().total_degree()))
    }

    pub fn is_resolution(&self, cap: usize) -> Result<bool> {
        is_resolution(&self.complex, cap)
    }

    /// The ranks, which are the Betti numbers once the complex is a minimal
    /// resolution.
    pub fn betti_ranks(&self, cap: usize) -> Result<Vec<usize>> {
        if !self.is_minimal() {
            return Err(Error::NotMinimal);
        }
        if !self.is_resolution(cap)? {
            return Err(Error::NotResolution);
        }
        Ok(self.ranks.clone())
    }

    #[cfg(test)]
    pub(crate) fn differential_mut(&mut self, k: usize) -> &mut Vec<DifferentialEntry> {
        &mut self.differentials[k]
    }
}

fn composition_vanishes(lower: &[DifferentialEntry], upper: &[DifferentialEntry]) -> bool {
    let mut by_col: HashMap<usize, Vec<&DifferentialEntry>> = HashMap::new();
    for e in lower {
        by_col.entry(e.col).or_default().push(e);
    }
    let mut acc: HashMap<(usize, usize, Monomial), i64> = HashMap::new();
    for u in upper {
        for l in by_col.get(&u.row).into_iter().flatten() {
            let Ok(product) = l.monomial.checked_mul(&u.monomial) else {
                return false;
            };
            *acc.entry((l.row, u.col, product)).or_insert(0) += l.sign as i64 * u.sign as i64;
        }
    }
    acc.values().all(|&c| c == 0)
}

/// `F_X` is exact: `X_{⪯β}` is acyclic for every `β` in the lcm lattice.
pub fn is_resolution(complex: &LabeledComplex, cap: usize) -> Result<bool> {
    is_resolution_with(complex, cap, Execution::default())
}

pub fn is_resolution_with(complex: &LabeledComplex, cap: usize, exec: Execution) -> Result<bool> {
    complex.supports_resolution(cap, exec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::DEFAULT_VERTEX_CAP;

    fn square() -> MonomialIdeal {
        MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap()
    }

    fn taylor(ideal: &MonomialIdeal) -> FreeComplex {
        let x = LabeledComplex::full_simplex(ideal.generators().to_vec()).unwrap();
        FreeComplex::build(&x, ideal).unwrap()
    }

    #[test]
    fn taylor_of_square_by_hand() {
        let f = taylor(&square());
        assert_eq!(f.ranks(), &[1, 3, 3, 1]);
        let f1: Vec<(usize, i8, Vec<u32>)> =
            f.differential(1).iter().map(|e| (e.col, e.sign, e.monomial.exponents().to_vec())).collect();
        assert_eq!(f1, vec![(0, 1, vec![2, 0]), (1, 1, vec![1, 1]), (2, 1, vec![0, 2])]);
        // Edge {1,2}: m_12 = x^2 y, so f_2 e_12 = -y e_1 + x e_2.
        let edge: Vec<(usize, i8, Vec<u32>)> = f
            .differential(2)
            .iter()
            .filter(|e| e.col == 0)
            .map(|e| (e.row, e.sign, e.monomial.exponents().to_vec()))
            .collect();
        assert_eq!(edge, vec![(0, -1, vec![0, 1]), (1, 1, vec![1, 0])]);
        assert!(f.verify_chain());
    }

    #[test]
    fn principal_ideal_point() {
        let i = MonomialIdeal::from_exponents(2, &[&[3, 1]]).unwrap();
        let f = taylor(&i);
        assert_eq!(f.length(), 1);
        assert_eq!(f.differential(1)[0].monomial.exponents(), &[3, 1]);
        assert!(f.verify_chain());
        assert_eq!(f.betti_ranks(DEFAULT_VERTEX_CAP).unwrap(), vec![1, 1]);
    }

    #[test]
    fn corrupted_sign_breaks_chain() {
        let mut f = taylor(&square());
        f.differential_mut(2)[0].sign *= -1;
        assert!(!f.verify_chain());
    }

    #[test]
    fn label_mismatch_is_rejected() {
        let x = LabeledComplex::full_simplex(vec![Monomial::new(vec![2, 0]), Monomial::new(vec![0, 1])]).unwrap();
        assert_eq!(FreeComplex::build(&x, &square()).unwrap_err(), Error::LabelMismatch);
    }

    #[test]
    fn taylor_square_is_not_minimal() {
        let f = taylor(&square());
        assert!(!f.is_minimal());
        assert!(!f.is_minimal_by_degree());
        assert!(f.complex().has_equal_incident_labels());
        assert_eq!(f.betti_ranks(DEFAULT_VERTEX_CAP), Err(Error::NotMinimal));
        assert!(f.is_resolution(DEFAULT_VERTEX_CAP).unwrap());
    }

    #[test]
    fn koszul_betti_numbers() {
        let i = MonomialIdeal::from_exponents(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(taylor(&i).betti_ranks(DEFAULT_VERTEX_CAP).unwrap(), vec![1, 2, 1]);
    }
}
