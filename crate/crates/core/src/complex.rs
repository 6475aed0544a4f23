//! Labeled polyhedral cell complexes and their reduced homology.
//!
//! Faces are identified with their vertex sets. Every complex contains the
//! empty face at id `0`; the remaining faces are stored in canonical order,
//! by dimension and then by sorted vertex list. Vertex `i` carries the label
//! `vertex_labels[i]`, and a face is labeled by the lcm of its vertices.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::Monomial;
use crate::par::Execution;

/// Default bound on the number of vertices for subset enumerations.
pub const DEFAULT_VERTEX_CAP: usize = 20;

/// Subset enumerations index vertex sets by `u64` masks.
pub const MAX_VERTEX_CAP: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    vertices: Vec<usize>,
    dim: isize,
    boundary: Vec<(usize, i8)>,
    label: Monomial,
}

impl Face {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `-1` for the empty face.
    pub fn dim(&self) -> isize {
        self.dim
    }

    /// Codimension-one faces with their incidence signs.
    pub fn boundary(&self) -> &[(usize, i8)] {
        &self.boundary
    }

    pub fn label(&self) -> &Monomial {
        &self.label
    }
}

/// One face of a polyhedral complex as supplied by the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSpec {
    pub id: i64,
    pub dim: isize,
    pub vertices: Vec<usize>,
    /// `(facet id, sign)`; must be empty for vertices, whose boundary is the
    /// empty face with sign `+1`.
    pub boundary: Vec<(i64, i8)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledComplex {
    ambient_dim: usize,
    vertex_labels: Vec<Monomial>,
    faces: Vec<Face>,
    by_dim: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    simplicial: bool,
}

impl LabeledComplex {
    /// Subset closure of `facets`, oriented by the vertex order.
    pub fn simplicial_from_facets(labels: Vec<Monomial>, facets: &[Vec<usize>]) -> Result<Self> {
        if facets.is_empty() || facets.iter().any(Vec::is_empty) {
            return Err(Error::EmptyFacet);
        }
        check_label_dims(&labels)?;
        let mut closed: BTreeSet<Vec<usize>> = BTreeSet::new();
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            if let Some(&bad) = f.iter().find(|&&v| v >= labels.len()) {
                return Err(Error::VertexOutOfRange { index: bad, count: labels.len() });
            }
            if f.len() > MAX_VERTEX_CAP {
                return Err(Error::CapExceeded { what: "facet size", limit: MAX_VERTEX_CAP, actual: f.len() });
            }
            if closed.contains(&f) {
                continue;
            }
            for mask in 0u64..(1u64 << f.len()) {
                closed.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
            }
        }
        Ok(Self::from_closed_simplices(labels, closed))
    }

    /// The full simplex on all vertices, which supports the Taylor complex.
    pub fn full_simplex(labels: Vec<Monomial>) -> Result<Self> {
        let all: Vec<usize> = (0..labels.len()).collect();
        Self::simplicial_from_facets(labels, &[all])
    }

    /// Builds a simplicial complex from a subset-closed family of vertex sets.
    pub(crate) fn from_closed_simplices(labels: Vec<Monomial>, simplices: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut sets: Vec<Vec<usize>> = simplices.into_iter().filter(|s| !s.is_empty()).collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let ambient_dim = labels.first().map_or(0, Monomial::dim);
        let mut faces = vec![Face { vertices: Vec::new(), dim: -1, boundary: Vec::new(), label: Monomial::one(ambient_dim) }];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(Vec::new(), 0);
        for s in sets {
            let boundary = if s.len() == 1 {
                vec![(0, 1)]
            } else {
                (0..s.len())
                    .map(|j| {
                        let mut facet = s.clone();
                        facet.remove(j);
                        let id = *index.get(&facet).expect("family is closed under subsets");
                        (id, if j % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            };
            let label = lcm_of(&labels, &s, ambient_dim);
            index.insert(s.clone(), faces.len());
            faces.push(Face { dim: s.len() as isize - 1, vertices: s, boundary, label });
        }
        Self::assemble(ambient_dim, labels, faces, index, true)
    }

    /// Validates a user-supplied signed face lattice.
    pub fn polyhedral_from_incidence(labels: Vec<Monomial>, specs: &[FaceSpec]) -> Result<Self> {
        check_label_dims(&labels)?;
        let ambient_dim = labels.first().map_or(0, Monomial::dim);
        let mut by_id: HashMap<i64, usize> = HashMap::new();
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(specs.len());
        for (pos, spec) in specs.iter().enumerate() {
            let invalid = |reason: &str| Error::InvalidFace { face: spec.id, reason: reason.to_string() };
            if by_id.insert(spec.id, pos).is_some() {
                return Err(invalid("duplicate face id"));
            }
            let mut v = spec.vertices.clone();
            v.sort_unstable();
            v.dedup();
            if let Some(&bad) = v.iter().find(|&&x| x >= labels.len()) {
                return Err(Error::VertexOutOfRange { index: bad, count: labels.len() });
            }
            if spec.dim < 0 {
                return Err(invalid("declared dimension must be at least 0"));
            }
            if v.len() < spec.dim as usize + 1 {
                return Err(invalid("fewer vertices than the declared dimension allows"));
            }
            if spec.dim == 0 && (v.len() != 1 || !spec.boundary.is_empty()) {
                return Err(invalid("a vertex has exactly one vertex and an empty boundary list"));
            }
            if spec.dim > 0 && spec.boundary.is_empty() {
                return Err(invalid("positive-dimensional face with empty boundary"));
            }
            normalized.push(v);
        }

        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        for (pos, v) in normalized.iter().enumerate() {
            if index.insert(v.clone(), pos).is_some() {
                return Err(Error::InvalidFace { face: specs[pos].id, reason: "two faces share a vertex set".into() });
            }
        }
        for (spec, v) in specs.iter().zip(&normalized) {
            let invalid = |reason: &str| Error::InvalidFace { face: spec.id, reason: reason.to_string() };
            for &x in v {
                if !index.contains_key(&vec![x]) {
                    return Err(invalid("uses a vertex that is not itself a face"));
                }
            }
            if spec.dim == 0 {
                continue;
            }
            let mut union: BTreeSet<usize> = BTreeSet::new();
            let mut seen: BTreeSet<i64> = BTreeSet::new();
            for &(fid, sign) in &spec.boundary {
                let Some(&fpos) = by_id.get(&fid) else {
                    return Err(invalid(&format!("boundary references unknown face {fid}")));
                };
                if !seen.insert(fid) {
                    return Err(invalid(&format!("facet {fid} listed twice")));
                }
                if sign != 1 && sign != -1 {
                    return Err(invalid("incidence signs must be +1 or -1"));
                }
                if specs[fpos].dim != spec.dim - 1 {
                    return Err(invalid(&format!("boundary facet {fid} does not have dimension {}", spec.dim - 1)));
                }
                let fv = &normalized[fpos];
                if !is_subset(fv, v) || fv.len() == v.len() {
                    return Err(invalid(&format!("boundary facet {fid} is not a proper subface")));
                }
                union.extend(fv.iter().copied());
            }
            if union.into_iter().collect::<Vec<_>>() != *v {
                return Err(invalid("boundary facets do not cover the vertex set"));
            }
        }

        // Canonical renumbering with the empty face in front.
        let mut order: Vec<usize> = (0..specs.len()).collect();
        order.sort_by(|&a, &b| specs[a].dim.cmp(&specs[b].dim).then_with(|| normalized[a].cmp(&normalized[b])));
        let mut new_id = vec![0usize; specs.len()];
        for (k, &pos) in order.iter().enumerate() {
            new_id[pos] = k + 1;
        }
        let mut faces = vec![Face { vertices: Vec::new(), dim: -1, boundary: Vec::new(), label: Monomial::one(ambient_dim) }];
        let mut canonical_index: HashMap<Vec<usize>, usize> = HashMap::new();
        canonical_index.insert(Vec::new(), 0);
        for &pos in &order {
            let spec = &specs[pos];
            let mut boundary: Vec<(usize, i8)> = if spec.dim == 0 {
                vec![(0, 1)]
            } else {
                spec.boundary.iter().map(|&(fid, s)| (new_id[by_id[&fid]], s)).collect()
            };
            boundary.sort_unstable();
            let v = normalized[pos].clone();
            let label = lcm_of(&labels, &v, ambient_dim);
            canonical_index.insert(v.clone(), faces.len());
            faces.push(Face { vertices: v, dim: spec.dim, boundary, label });
        }
        let complex = Self::assemble(ambient_dim, labels, faces, canonical_index, false);
        complex.check_boundary_squared(|id| specs[order[id - 1]].id)?;
        complex.check_intersections(|id| specs[order[id - 1]].id)?;
        Ok(complex)
    }

    fn assemble(
        ambient_dim: usize,
        vertex_labels: Vec<Monomial>,
        faces: Vec<Face>,
        index: HashMap<Vec<usize>, usize>,
        simplicial: bool,
    ) -> Self {
        let max_dim = faces.iter().map(|f| f.dim).max().unwrap_or(-1);
        let mut by_dim = vec![Vec::new(); (max_dim + 2) as usize];
        for (id, f) in faces.iter().enumerate() {
            by_dim[(f.dim + 1) as usize].push(id);
        }
        LabeledComplex { ambient_dim, vertex_labels, faces, by_dim, index, simplicial }
    }

    fn check_boundary_squared(&self, user_id: impl Fn(usize) -> i64) -> Result<()> {
        for (id, face) in self.faces.iter().enumerate().skip(1) {
            let mut acc: HashMap<usize, i32> = HashMap::new();
            for &(fid, s) in &face.boundary {
                for &(gid, t) in &self.faces[fid].boundary {
                    *acc.entry(gid).or_insert(0) += s as i32 * t as i32;
                }
            }
            if acc.values().any(|&c| c != 0) {
                return Err(Error::BoundarySquareNonzero { face: user_id(id) });
            }
        }
        Ok(())
    }

    fn check_intersections(&self, user_id: impl Fn(usize) -> i64) -> Result<()> {
        let below: Vec<BTreeSet<usize>> = {
            let mut below: Vec<BTreeSet<usize>> = Vec::with_capacity(self.faces.len());
            for (id, face) in self.faces.iter().enumerate() {
                let mut set = BTreeSet::from([id]);
                for &(fid, _) in &face.boundary {
                    set.extend(below[fid].iter().copied());
                }
                below.push(set);
            }
            below
        };
        for a in 1..self.faces.len() {
            for b in a + 1..self.faces.len() {
                let common: Vec<usize> =
                    self.faces[a].vertices.iter().copied().filter(|v| self.faces[b].vertices.binary_search(v).is_ok()).collect();
                let ok = match self.index.get(&common) {
                    Some(&c) => below[a].contains(&c) && below[b].contains(&c),
                    None => false,
                };
                if !ok {
                    return Err(Error::InvalidFace {
                        face: user_id(a),
                        reason: format!("intersection with face {} is not a common face", user_id(b)),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertex_labels(&self) -> &[Monomial] {
        &self.vertex_labels
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn is_simplicial(&self) -> bool {
        self.simplicial
    }

    /// Largest face dimension; `-1` when only the empty face is present.
    pub fn dim(&self) -> isize {
        self.by_dim.len() as isize - 2
    }

    /// Ids of the faces of dimension `d` (`d >= -1`).
    pub fn faces_of_dim(&self, d: isize) -> &[usize] {
        if d < -1 {
            return &[];
        }
        self.by_dim.get((d + 1) as usize).map_or(&[], Vec::as_slice)
    }

    /// `X_k`: faces of dimension `k - 1`, so `X_0 = {∅}`.
    pub fn graded(&self, k: usize) -> &[usize] {
        self.faces_of_dim(k as isize - 1)
    }

    pub fn find_face(&self, vertices: &[usize]) -> Option<usize> {
        self.index.get(vertices).copied()
    }

    /// Vertices that occur as faces of the complex.
    pub fn present_vertices(&self) -> Vec<usize> {
        self.faces_of_dim(0).iter().map(|&id| self.faces[id].vertices[0]).collect()
    }

    pub fn has_nonempty_faces(&self) -> bool {
        self.faces.len() > 1
    }

    /// Maximal faces with respect to inclusion.
    pub fn facets(&self) -> Vec<usize> {
        let mut covered = vec![false; self.faces.len()];
        for face in &self.faces {
            for &(fid, _) in &face.boundary {
                covered[fid] = true;
            }
        }
        (1..self.faces.len()).filter(|&id| !covered[id]).collect()
    }

    /// Some face shares its label with a codimension-one face of its boundary.
    pub fn has_equal_incident_labels(&self) -> bool {
        self.faces.iter().any(|f| f.boundary.iter().any(|&(fid, _)| self.faces[fid].label == f.label))
    }

    /// `sum (-1)^dim` over all faces including the empty one.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| if f.dim.rem_euclid(2) == 0 { 1 } else { -1 }).sum()
    }

    /// Faces selected by `keep`, which must be closed under taking faces.
    fn subcomplex(&self, keep: &[bool]) -> LabeledComplex {
        let mut new_id = vec![usize::MAX; self.faces.len()];
        let mut faces = Vec::new();
        let mut index = HashMap::new();
        for (id, face) in self.faces.iter().enumerate() {
            if !keep[id] {
                continue;
            }
            new_id[id] = faces.len();
            index.insert(face.vertices.clone(), faces.len());
            let boundary = face.boundary.iter().map(|&(fid, s)| (new_id[fid], s)).collect();
            faces.push(Face { vertices: face.vertices.clone(), dim: face.dim, boundary, label: face.label.clone() });
        }
        Self::assemble(self.ambient_dim, self.vertex_labels.clone(), faces, index, self.simplicial)
    }

    /// `X_{⪯β}`: faces whose label divides `z^β`.
    pub fn restrict_leq(&self, beta: &Monomial) -> Result<LabeledComplex> {
        if beta.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: beta.dim() });
        }
        let keep: Vec<bool> = self.faces.iter().map(|f| f.label.divides_unchecked(beta)).collect();
        Ok(self.subcomplex(&keep))
    }

    /// Faces all of whose vertices lie in `vertices`.
    pub fn induced_subcomplex(&self, vertices: &[usize]) -> LabeledComplex {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        let keep: Vec<bool> = self.faces.iter().map(|f| f.vertices.iter().all(|v| set.contains(v))).collect();
        self.subcomplex(&keep)
    }

    fn kept_vertex_mask(&self, keep: &[bool]) -> Vec<bool> {
        let mut mask = vec![false; self.vertex_labels.len()];
        for &id in self.faces_of_dim(0) {
            if keep[id] {
                mask[self.faces[id].vertices[0]] = true;
            }
        }
        mask
    }

    /// Ranks of `H̃_k` over the rationals for `k = -1 ..= dim X`; entry `i`
    /// holds `k = i - 1`.
    pub fn reduced_homology_ranks(&self) -> Vec<usize> {
        let keep = vec![true; self.faces.len()];
        self.ranks_on(&keep)
    }

    fn ranks_on(&self, keep: &[bool]) -> Vec<usize> {
        let layers: Vec<Vec<usize>> =
            self.by_dim.iter().map(|ids| ids.iter().copied().filter(|&id| keep[id]).collect()).collect();
        let top = layers.iter().rposition(|l| !l.is_empty()).unwrap_or(0);
        let layers = &layers[..=top];
        // boundary_rank[i] is the rank of the map from layer i to layer i-1.
        let mut boundary_rank = vec![0usize; layers.len() + 1];
        for i in 1..layers.len() {
            let rows = &layers[i - 1];
            let row_of: HashMap<usize, usize> = rows.iter().enumerate().map(|(r, &id)| (id, r)).collect();
            let mut matrix = vec![vec![0i64; layers[i].len()]; rows.len()];
            for (c, &id) in layers[i].iter().enumerate() {
                for &(fid, s) in &self.faces[id].boundary {
                    if let Some(&r) = row_of.get(&fid) {
                        matrix[r][c] = s as i64;
                    }
                }
            }
            boundary_rank[i] = linalg::rank(&matrix);
        }
        (0..layers.len()).map(|i| layers[i].len() - boundary_rank[i] - boundary_rank[i + 1]).collect()
    }

    /// A vertex `v` with `τ ∪ {v}` a kept face for every kept face `τ`.
    fn has_cone_point(&self, keep: &[bool]) -> bool {
        if !self.simplicial {
            return false;
        }
        let vertex_mask = self.kept_vertex_mask(keep);
        'candidates: for v in (0..vertex_mask.len()).filter(|&v| vertex_mask[v]) {
            for (id, face) in self.faces.iter().enumerate() {
                if !keep[id] || face.vertices.binary_search(&v).is_ok() {
                    continue;
                }
                let mut joined = face.vertices.clone();
                let pos = joined.binary_search(&v).unwrap_err();
                joined.insert(pos, v);
                match self.index.get(&joined) {
                    Some(&j) if keep[j] => {}
                    _ => continue 'candidates,
                }
            }
            return true;
        }
        false
    }

    fn acyclic_on(&self, keep: &[bool]) -> bool {
        if !keep.iter().skip(1).any(|&k| k) {
            return true;
        }
        if self.has_cone_point(keep) {
            return true;
        }
        self.ranks_on(keep).iter().all(|&r| r == 0)
    }

    /// Empty, or all reduced homology vanishes.
    pub fn is_acyclic(&self) -> bool {
        let keep = vec![true; self.faces.len()];
        self.acyclic_on(&keep)
    }

    /// All lcms of nonempty sets of present vertices, plus the zero vector.
    pub fn lcm_lattice(&self, cap: usize) -> Result<BTreeSet<Monomial>> {
        self.lcm_lattice_with(cap, Execution::default())
    }

    pub fn lcm_lattice_with(&self, cap: usize, exec: Execution) -> Result<BTreeSet<Monomial>> {
        let vertices = self.present_vertices();
        check_vertex_cap(vertices.len(), cap)?;
        let labels: Vec<&Monomial> = vertices.iter().map(|&v| &self.vertex_labels[v]).collect();
        let n = self.ambient_dim;
        let total = 1u64 << labels.len();
        let parts = exec.map_ranges(total, |range| {
            let mut local: BTreeSet<Monomial> = BTreeSet::new();
            for mask in range {
                let mut acc = Monomial::one(n);
                for (i, l) in labels.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc.lcm_assign(l);
                    }
                }
                local.insert(acc);
            }
            local
        });
        let mut lattice = BTreeSet::new();
        for p in parts {
            lattice.extend(p);
        }
        Ok(lattice)
    }

    /// `X_{⪯β}` acyclic for every `β` of the lcm lattice.
    ///
    /// `X_{⪯β}` only depends on the set of vertices whose label divides
    /// `z^β`, so lattice points with the same vertex set are checked once.
    pub(crate) fn supports_resolution(&self, cap: usize, exec: Execution) -> Result<bool> {
        let lattice = self.lcm_lattice_with(cap, exec)?;
        let vertices = self.present_vertices();
        let mut masks: BTreeSet<u64> = BTreeSet::new();
        for beta in &lattice {
            let mut mask = 0u64;
            for (i, &v) in vertices.iter().enumerate() {
                if self.vertex_labels[v].divides_unchecked(beta) {
                    mask |= 1 << i;
                }
            }
            masks.insert(mask);
        }
        let masks: Vec<u64> = masks.into_iter().collect();
        let slot: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Ok(exec.all(&masks, |&mask| {
            let keep: Vec<bool> = self.faces.iter().map(|f| f.vertices.iter().all(|v| mask >> slot[v] & 1 == 1)).collect();
            self.acyclic_on(&keep)
        }))
    }
}

pub fn check_vertex_cap(count: usize, cap: usize) -> Result<()> {
    let limit = cap.min(MAX_VERTEX_CAP);
    if count > limit {
        return Err(Error::CapExceeded { what: "vertex count", limit, actual: count });
    }
    Ok(())
}

fn check_label_dims(labels: &[Monomial]) -> Result<()> {
    if let Some(first) = labels.first() {
        for l in labels {
            if l.dim() != first.dim() {
                return Err(Error::DimensionMismatch { left: first.dim(), right: l.dim() });
            }
        }
    }
    Ok(())
}

fn lcm_of(labels: &[Monomial], vertices: &[usize], n: usize) -> Monomial {
    let mut acc = Monomial::one(n);
    for &v in vertices {
        acc.lcm_assign(&labels[v]);
    }
    acc
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}
