//! The residue current of a cellular resolution, kept symbolic.
//!
//! An entry `R_{(K,τ)}` is a product of Coleff–Herrera factors
//! `∂̄[1/z_i^{α_i}]` over `i ∈ K` times a coefficient, possibly a smooth
//! factor when `K` is not every variable. Coefficient values are never
//! computed; each entry carries a three-state status and the rule that set it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::complex::{LabeledComplex, DEFAULT_VERTEX_CAP};
use crate::decomposition::{decompose_brute_with, DEFAULT_CANDIDATE_CAP};
use crate::error::{Error, Result};
use crate::monomial::{default_names, intersect_irreducibles, IrreducibleIdeal, Monomial, MonomialIdeal};
use crate::par::Execution;
use crate::resolution::{is_resolution_with, FreeComplex};
use crate::scarf::scarf_pairs_with;

/// Work bounds shared by the residue pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex cap for lcm lattices and Scarf complexes.
    pub vertices: usize,
    /// Candidate cap for the brute-force decomposition.
    pub candidates: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { vertices: DEFAULT_VERTEX_CAP, candidates: DEFAULT_CANDIDATE_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Zero,
    Nonzero,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Zero => "zero",
            Status::Nonzero => "nonzero",
            Status::Unknown => "unknown",
        }
    }
}

/// Which classification rule decided an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Not yet classified.
    Unclassified,
    /// `M` is not contained in the annihilator, so the coefficient vanishes.
    NotContained,
    /// `M` generic and `(K, τ)` a facet of the Scarf complex of `M*`.
    ScarfFacet,
    /// `M` Artinian and `X` a minimal resolution; applied without a
    /// genericity hypothesis.
    ExtendedMinimal,
    /// The annihilator is an irredundant component and this is its only
    /// possible carrier.
    UniqueCarrier,
    /// No rule applies.
    Undetermined,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Unclassified => "unclassified",
            Rule::NotContained => "not-contained",
            Rule::ScarfFacet => "scarf-facet",
            Rule::ExtendedMinimal => "extended-minimal",
            Rule::UniqueCarrier => "unique-carrier",
            Rule::Undetermined => "undetermined",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueEntry {
    /// Support of the associated prime `p_K`.
    pub k: Vec<usize>,
    /// Face id in the complex.
    pub face: usize,
    /// Vertices of the face.
    pub tau: Vec<usize>,
    /// The face label `α_τ`.
    pub alpha: Monomial,
    /// `M_{(K,τ)} = (z_i^{α_i} : i ∈ K)`.
    pub annihilator: IrreducibleIdeal,
    pub status: Status,
    pub rule: Rule,
    /// `K` is not every variable, so a smooth factor multiplies the residue.
    pub has_smooth_factor: bool,
}

impl ResidueEntry {
    /// `c · ∂̄[1/x^4] ∧ ∂̄[1/y]`, prefixed by `s ·` when a smooth factor is present.
    pub fn render(&self, names: &[String]) -> String {
        let factors: Vec<String> = self
            .k
            .iter()
            .map(|&i| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("z{}", i + 1));
                match self.alpha.degree(i) {
                    1 => format!("∂̄[1/{name}]"),
                    e => format!("∂̄[1/{name}^{e}]"),
                }
            })
            .collect();
        let smooth = if self.has_smooth_factor { "s · " } else { "" };
        format!("{smooth}c · {}", factors.join(" ∧ "))
    }
}

#[derive(Debug, Clone)]
pub struct ResidueCurrent {
    ideal: MonomialIdeal,
    complex: LabeledComplex,
    components: Vec<IrreducibleIdeal>,
    entries: Vec<ResidueEntry>,
    limits: Limits,
    exec: Execution,
}

impl ResidueCurrent {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn complex(&self) -> &LabeledComplex {
        &self.complex
    }

    /// Irredundant components of the ideal, from the brute-force oracle.
    pub fn components(&self) -> &[IrreducibleIdeal] {
        &self.components
    }

    /// Entries ordered by `K`, then by face.
    pub fn entries(&self) -> &[ResidueEntry] {
        &self.entries
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn is_classified(&self) -> bool {
        self.entries.iter().all(|e| e.rule != Rule::Unclassified)
    }

    /// Classified and no entry left `Unknown`.
    pub fn is_complete(&self) -> bool {
        self.is_classified() && self.count(Status::Unknown) == 0
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let tau: Vec<String> = e.tau.iter().map(|v| (v + 1).to_string()).collect();
            out.push_str(&format!(
                "K={{{}}} tau={{{}}} [{}] {}  ann {}\n",
                e.k.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","),
                tau.join(","),
                e.status.as_str(),
                e.render(names),
                e.annihilator.display_with(names),
            ));
        }
        out
    }
}

impl fmt::Display for ResidueCurrent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.ideal.ambient_dim())))
    }
}

/// Builds the unclassified current of `F_X`.
///
/// For every associated prime `p_K` of codimension `ℓ` and every face
/// `τ ∈ X_ℓ` whose label is positive on `K` there is one entry.
pub fn residue_current(ideal: &MonomialIdeal, complex: &LabeledComplex) -> Result<ResidueCurrent> {
    residue_current_with(ideal, complex, Limits::default(), Execution::default())
}

pub fn residue_current_with(
    ideal: &MonomialIdeal,
    complex: &LabeledComplex,
    limits: Limits,
    exec: Execution,
) -> Result<ResidueCurrent> {
    FreeComplex::build(complex, ideal)?;
    if !is_resolution_with(complex, limits.vertices, exec)? {
        return Err(Error::NotResolution);
    }
    let components = decompose_brute_with(ideal, limits.candidates, exec)?.components().to_vec();
    let primes: BTreeSet<Vec<usize>> = components.iter().map(IrreducibleIdeal::support).collect();
    let n = ideal.ambient_dim();

    let mut entries = Vec::new();
    for k in &primes {
        for &fid in complex.graded(k.len()) {
            let face = complex.face(fid);
            let alpha = face.label();
            if k.iter().any(|&i| alpha.degree(i) == 0) {
                continue;
            }
            let mut exps = vec![0; n];
            for &i in k {
                exps[i] = alpha.degree(i);
            }
            entries.push(ResidueEntry {
                k: k.clone(),
                face: fid,
                tau: face.vertices().to_vec(),
                alpha: alpha.clone(),
                annihilator: IrreducibleIdeal::from_exponents(&exps),
                status: Status::Unknown,
                rule: Rule::Unclassified,
                has_smooth_factor: k.len() != n,
            });
        }
    }
    Ok(ResidueCurrent { ideal: ideal.clone(), complex: complex.clone(), components, entries, limits, exec })
}

/// Tags every entry, trying the rules in order: not-contained, Scarf facet,
/// extended minimal, unique carrier.
pub fn classify(mut current: ResidueCurrent) -> Result<ResidueCurrent> {
    let ideal = &current.ideal;
    let complex = &current.complex;

    let scarf_keys: Option<BTreeSet<(Vec<usize>, Vec<usize>)>> = if ideal.is_generic()? {
        let pairs = scarf_pairs_with(ideal, None, current.limits.vertices, current.exec)?;
        Some(pairs.into_iter().map(|p| (p.k, p.tau)).collect())
    } else {
        None
    };
    let minimal = ideal.is_artinian()? && FreeComplex::build(complex, ideal)?.is_minimal();
    // Vertex of the complex -> index of its label among the generators.
    let gen_index: HashMap<&Monomial, usize> = ideal.generators().iter().enumerate().map(|(i, g)| (g, i)).collect();
    let base_tau = |tau: &[usize]| {
        let mut t: Vec<usize> = tau.iter().map(|v| gen_index[&complex.vertex_labels()[*v]]).collect();
        t.sort_unstable();
        t
    };

    let tags = current.exec.map(&current.entries, |e| -> Result<(Status, Rule)> {
        Ok(if !ideal.contained_in_irreducible(&e.annihilator)? {
            (Status::Zero, Rule::NotContained)
        } else if scarf_keys.as_ref().is_some_and(|keys| keys.contains(&(e.k.clone(), base_tau(&e.tau)))) {
            (Status::Nonzero, Rule::ScarfFacet)
        } else if minimal {
            (Status::Nonzero, Rule::ExtendedMinimal)
        } else {
            (Status::Unknown, Rule::Undetermined)
        })
    });
    for (e, tag) in current.entries.iter_mut().zip(tags) {
        (e.status, e.rule) = tag?;
    }

    let mut carriers: HashMap<&IrreducibleIdeal, usize> = HashMap::new();
    for e in current.entries.iter().filter(|e| e.status != Status::Zero) {
        *carriers.entry(&e.annihilator).or_default() += 1;
    }
    let forced: BTreeSet<IrreducibleIdeal> = current
        .components
        .iter()
        .filter(|c| carriers.get(c).copied() == Some(1))
        .cloned()
        .collect();
    for e in current.entries.iter_mut() {
        if e.status == Status::Unknown && forced.contains(&e.annihilator) {
            (e.status, e.rule) = (Status::Nonzero, Rule::UniqueCarrier);
        }
    }
    Ok(current)
}

/// `(lower, upper)`: intersections of annihilators over the entries that may
/// be nonzero and over those known to be nonzero.
pub fn annihilator_bounds(current: &ResidueCurrent) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let n = current.ideal.ambient_dim();
    let pick = |keep: &dyn Fn(Status) -> bool| -> Vec<IrreducibleIdeal> {
        current.entries.iter().filter(|e| keep(e.status)).map(|e| e.annihilator.clone()).collect()
    };
    let lower = intersect_irreducibles(n, &pick(&|s| s != Status::Zero))?;
    let upper = intersect_irreducibles(n, &pick(&|s| s == Status::Nonzero))?;
    Ok((lower, upper))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// `lower = upper = M`.
    Exact,
    /// `lower ⊆ M ⊆ upper`.
    Consistent,
    Violated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Exact => "exact",
            Verdict::Consistent => "consistent",
            Verdict::Violated => "violated",
        }
    }
}

#[derive(Debug, Clone)]
pub struct DualityReport {
    pub current: ResidueCurrent,
    pub lower: MonomialIdeal,
    pub upper: MonomialIdeal,
    pub verdict: Verdict,
}

/// Checks `ann R = M` as far as the classification allows.
pub fn duality_check(ideal: &MonomialIdeal, complex: &LabeledComplex) -> Result<DualityReport> {
    duality_check_with(ideal, complex, Limits::default(), Execution::default())
}

pub fn duality_check_with(
    ideal: &MonomialIdeal,
    complex: &LabeledComplex,
    limits: Limits,
    exec: Execution,
) -> Result<DualityReport> {
    let current = classify(residue_current_with(ideal, complex, limits, exec)?)?;
    let (lower, upper) = annihilator_bounds(&current)?;
    let verdict = if lower == *ideal && upper == *ideal {
        Verdict::Exact
    } else if ideal.contains_ideal(&lower)? && upper.contains_ideal(ideal)? {
        Verdict::Consistent
    } else {
        Verdict::Violated
    };
    Ok(DualityReport { current, lower, upper, verdict })
}

/// Entries grouped by the support `K` of their associated prime.
pub fn primary_parts(current: &ResidueCurrent) -> BTreeMap<Vec<usize>, Vec<ResidueEntry>> {
    let mut parts: BTreeMap<Vec<usize>, Vec<ResidueEntry>> = BTreeMap::new();
    for e in &current.entries {
        parts.entry(e.k.clone()).or_default().push(e.clone());
    }
    parts
}
