//! When is a cut polytope compressed or Gorenstein. Besides the graph test
//! this module searches for special simplices and offers two independent
//! checks based on lattice points.

use std::ops::ControlFlow;

use crate::ehrhart::{self, HVector, NormalityVerdict};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, K5Minor, VertexPartition};
use crate::linalg;
use crate::polytope::points::PointEnumerator;
use crate::polytope::{
    barahona_facets, codegree, cut_vector, cut_vertices, CutVector, FacetSystem,
    LatticeMembershipBasis,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Compressedness {
    Compressed,
    K5Minor(K5Minor),
    /// A chordless cycle of length at least five.
    LongInducedCycle(Cycle),
}

impl Compressedness {
    pub fn is_compressed(&self) -> bool {
        matches!(self, Compressedness::Compressed)
    }
}

/// `CUT(G)` is compressed exactly when `G` has no K5 minor and no chordless
/// cycle of length five or more.
pub fn is_compressed(g: &Graph) -> Compressedness {
    if let Some(k) = g.k5_minor() {
        return Compressedness::K5Minor(k);
    }
    match g.induced_cycle_at_least(5) {
        Some(c) => Compressedness::LongInducedCycle(c),
        None => Compressedness::Compressed,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Gorenstein,
    Not,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Bipartite with no chordless cycle of length six or more.
    Bipartite,
    /// Chordal with no bridge.
    BridgelessChordal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    K5Minor(K5Minor),
    /// Bipartite, but with a chordless cycle of length at least six.
    BipartiteLongInducedCycle(Cycle),
    /// Not bipartite.
    OddCycle(Cycle),
    /// A chordless cycle of length at least four.
    NotChordal(Cycle),
    /// Edge index of a bridge.
    Bridge(usize),
}

impl Violation {
    /// Re-checks the witness against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        match self {
            Violation::K5Minor(k) => k.is_valid_in(g),
            Violation::BipartiteLongInducedCycle(c) => {
                g.is_bipartite() && c.len() >= 6 && c.is_induced_in(g)
            }
            Violation::OddCycle(c) => c.len() % 2 == 1 && c.is_valid_in(g),
            Violation::NotChordal(c) => c.len() >= 4 && c.is_induced_in(g),
            Violation::Bridge(e) => g.bridges().contains(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialSimplex {
    vertices: Vec<CutVector>,
}

impl SpecialSimplex {
    pub fn new(vertices: Vec<CutVector>) -> Self {
        SpecialSimplex { vertices }
    }

    pub fn vertices(&self) -> &[CutVector] {
        &self.vertices
    }

    pub fn d(&self) -> usize {
        self.vertices.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinCertificate {
    pub verdict: Verdict,
    pub branch: Option<Branch>,
    /// The bipartition (branch (i)) or 4-colouring (branch (ii)).
    pub partition: Option<VertexPartition>,
    pub simplex: Option<SpecialSimplex>,
    /// Empty exactly for GORENSTEIN.
    pub violations: Vec<Violation>,
}

fn bipartite_branch(g: &Graph) -> std::result::Result<VertexPartition, Violation> {
    match g.bipartition() {
        None => Err(Violation::OddCycle(
            g.odd_cycle().expect("non-bipartite graphs have odd cycles"),
        )),
        Some(p) => match g.induced_cycle_at_least(6) {
            Some(c) => Err(Violation::BipartiteLongInducedCycle(c)),
            None => Ok(p),
        },
    }
}

fn chordal_branch(g: &Graph) -> std::result::Result<(), Violation> {
    if let crate::graph::ChordalWitness::NotChordal(c) = g.chordality() {
        return Err(Violation::NotChordal(c));
    }
    match g.bridges().first() {
        Some(&e) => Err(Violation::Bridge(e)),
        None => Ok(()),
    }
}

/// `CUT(G)` is Gorenstein iff `G` has no K5 minor and is either bipartite
/// without chordless cycles of length >= 6, or chordal and bridgeless.
/// The first branch is reported when both apply.
pub fn classify_gorenstein(g: &Graph) -> Result<GorensteinCertificate> {
    if let Some(k) = g.k5_minor() {
        return Ok(GorensteinCertificate {
            verdict: Verdict::Not,
            branch: None,
            partition: None,
            simplex: None,
            violations: vec![Violation::K5Minor(k)],
        });
    }
    let (branch, partition) = match bipartite_branch(g) {
        Ok(p) => (Branch::Bipartite, p),
        Err(first) => match chordal_branch(g) {
            Ok(()) => (Branch::BridgelessChordal, g.chordal_four_coloring()?),
            Err(second) => {
                return Ok(GorensteinCertificate {
                    verdict: Verdict::Not,
                    branch: None,
                    partition: None,
                    simplex: None,
                    violations: vec![first, second],
                })
            }
        },
    };
    let simplex = simplex_from_partition(g, branch, &partition)?;
    Ok(GorensteinCertificate {
        verdict: Verdict::Gorenstein,
        branch: Some(branch),
        partition: Some(partition),
        simplex: Some(simplex),
        violations: Vec::new(),
    })
}

fn simplex_from_partition(
    g: &Graph,
    branch: Branch,
    partition: &VertexPartition,
) -> Result<SpecialSimplex> {
    if g.m() == 0 {
        // CUT(G) is a point: the 0-simplex on it
        return Ok(SpecialSimplex::new(vec![cut_vector(g, &[])?]));
    }
    let vertices = match branch {
        Branch::Bipartite => vec![cut_vector(g, &[])?, cut_vector(g, &partition.classes()[0])?],
        Branch::BridgelessChordal => partition
            .classes()
            .iter()
            .map(|c| cut_vector(g, c))
            .collect::<Result<Vec<_>>>()?,
    };
    let coords: Vec<Vec<i64>> = vertices.iter().map(|v| v.coords().to_vec()).collect();
    if !linalg::affinely_independent(&coords)? {
        return Err(Error::Internal(format!(
            "constructed simplex is degenerate: {coords:?}"
        )));
    }
    Ok(SpecialSimplex::new(vertices))
}

/// The special simplex from the proof of the classification: `{0, δ(V_1)}`
/// for bipartite graphs, `{δ(V_1), ..., δ(V_4)}` over a 4-colouring for
/// bridgeless chordal ones. Edgeless graphs give the 0-simplex `{0}`.
pub fn construct_special_simplex(g: &Graph) -> Result<SpecialSimplex> {
    let cert = classify_gorenstein(g)?;
    cert.simplex
        .ok_or_else(|| Error::Precondition("cut polytope is not Gorenstein".into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplexCheck {
    Valid,
    AffinelyDependent,
    /// Position in the simplex of a point that is not a polytope vertex.
    NotAVertex(usize),
    /// An inequality tight on the wrong number of simplex vertices.
    Facet {
        index: usize,
        tight: usize,
    },
}

impl SimplexCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, SimplexCheck::Valid)
    }
}

/// Checks that `sigma` is a special simplex of the polytope with facets `fs`
/// and vertices `vertex_list`: affinely independent polytope vertices, with
/// every facet containing exactly `d` of them.
pub fn verify_special_simplex(
    fs: &FacetSystem,
    sigma: &SpecialSimplex,
    vertex_list: &[CutVector],
) -> Result<SimplexCheck> {
    let coords: Vec<Vec<i64>> = sigma.vertices.iter().map(|v| v.coords().to_vec()).collect();
    if coords.is_empty() || !linalg::affinely_independent(&coords)? {
        return Ok(SimplexCheck::AffinelyDependent);
    }
    for (i, x) in coords.iter().enumerate() {
        if !vertex_list.iter().any(|v| v.coords() == x.as_slice()) {
            return Ok(SimplexCheck::NotAVertex(i));
        }
    }
    let d = sigma.d();
    for (index, q) in fs.inequalities().iter().enumerate() {
        if q.a.len() != coords[0].len() {
            return Err(Error::WrongLength {
                expected: q.a.len(),
                got: coords[0].len(),
            });
        }
        let tight = coords.iter().filter(|x| q.is_tight(x)).count();
        if tight != d {
            return Ok(SimplexCheck::Facet { index, tight });
        }
    }
    Ok(SimplexCheck::Valid)
}

pub const MAX_SIMPLEX_SEARCH_VERTICES: usize = 5;
pub const MAX_SIMPLEX_SEARCH_DIMENSION: usize = 4;

/// Facets not containing a vertex, as a bitset over the facet list.
fn missed_facets(fs: &FacetSystem, x: &[i64]) -> Vec<u64> {
    let mut out = vec![0u64; fs.len().div_ceil(64)];
    for (i, q) in fs.inequalities().iter().enumerate() {
        if !q.is_tight(x) {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

struct SimplexSearch<'a> {
    missed: Vec<Vec<u64>>,
    full: Vec<u64>,
    coords: Vec<Vec<i64>>,
    vertices: &'a [CutVector],
    chosen: Vec<usize>,
    all: bool,
    found: Vec<SpecialSimplex>,
}

impl SimplexSearch<'_> {
    /// Subsets of the given size whose missed-facet sets partition the facet
    /// list; every facet then contains all but one of the chosen vertices.
    fn walk(&mut self, start: usize, size: usize, covered: &mut Vec<u64>) -> Result<bool> {
        if self.chosen.len() == size {
            if *covered != self.full {
                return Ok(false);
            }
            let pts: Vec<Vec<i64>> = self
                .chosen
                .iter()
                .map(|&i| self.coords[i].clone())
                .collect();
            if !linalg::affinely_independent(&pts)? {
                return Ok(false);
            }
            self.found.push(SpecialSimplex::new(
                self.chosen
                    .iter()
                    .map(|&i| self.vertices[i].clone())
                    .collect(),
            ));
            return Ok(!self.all);
        }
        for i in start..self.coords.len() {
            let mask = self.missed[i].clone();
            if covered.iter().zip(&mask).any(|(c, m)| c & m != 0) {
                continue;
            }
            for (c, m) in covered.iter_mut().zip(&mask) {
                *c |= m;
            }
            self.chosen.push(i);
            let stop = self.walk(i + 1, size, covered)?;
            self.chosen.pop();
            for (c, m) in covered.iter_mut().zip(&mask) {
                *c &= !m;
            }
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn search(g: &Graph, d_max: usize, all: bool) -> Result<Vec<SpecialSimplex>> {
    if g.n() > MAX_SIMPLEX_SEARCH_VERTICES {
        return Err(Error::bound(
            "vertices for special simplex search",
            MAX_SIMPLEX_SEARCH_VERTICES,
            g.n(),
        ));
    }
    if d_max > MAX_SIMPLEX_SEARCH_DIMENSION {
        return Err(Error::bound(
            "special simplex dimension",
            MAX_SIMPLEX_SEARCH_DIMENSION,
            d_max,
        ));
    }
    if !is_compressed(g).is_compressed() {
        return Err(Error::Precondition("cut polytope is not compressed".into()));
    }
    let fs = barahona_facets(g)?;
    let vertices = cut_vertices(g)?;
    let coords: Vec<Vec<i64>> = vertices.iter().map(|v| v.coords().to_vec()).collect();
    let mut full = vec![0u64; fs.len().div_ceil(64)];
    for i in 0..fs.len() {
        full[i / 64] |= 1 << (i % 64);
    }
    let mut s = SimplexSearch {
        missed: coords.iter().map(|x| missed_facets(&fs, x)).collect(),
        full,
        coords,
        vertices: &vertices,
        chosen: Vec::new(),
        all,
        found: Vec::new(),
    };
    for size in 1..=d_max + 1 {
        let mut covered = vec![0u64; s.full.len()];
        if s.walk(0, size, &mut covered)? {
            break;
        }
    }
    Ok(s.found)
}

/// First special simplex with at most `d_max + 1` vertices, by size and then
/// lexicographically in the vertex order of [`cut_vertices`]. Requires a
/// compressed cut polytope and `n <= 5`.
pub fn special_simplex_search(g: &Graph, d_max: usize) -> Result<Option<SpecialSimplex>> {
    Ok(search(g, d_max, false)?.into_iter().next())
}

/// Every special simplex with at most `d_max + 1` vertices, in search order.
pub fn all_special_simplices(g: &Graph, d_max: usize) -> Result<Vec<SpecialSimplex>> {
    search(g, d_max, true)
}

pub const MAX_CRITERION_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionFailure {
    /// `int(d·P) ∩ L_P` has more than one point; the first two are listed.
    SeveralInteriorPoints(Vec<i64>, Vec<i64>),
    /// `w ∈ int((d+r)·P) ∩ L_P` with `w - v ∉ r·P`.
    Shift { r: usize, w: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub codegree: u32,
    /// The unique interior point at the codegree, when unique.
    pub v: Option<Vec<i64>>,
    pub r_max: usize,
    pub failure: Option<CriterionFailure>,
}

impl CriterionReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Necessary condition for a Gorenstein cut polytope with codegree `d`:
/// `int(d·P) ∩ L_P = {v}` and `w - v ∈ r·P ∩ L_P` for every
/// `w ∈ int((d+r)·P) ∩ L_P`, `1 <= r <= r_max`. Failure disproves the
/// Gorenstein property; success proves nothing.
pub fn criterion_check(g: &Graph, r_max: usize) -> Result<CriterionReport> {
    if r_max > MAX_CRITERION_DEGREE {
        return Err(Error::bound(
            "criterion degree",
            MAX_CRITERION_DEGREE,
            r_max,
        ));
    }
    let d = codegree(g)?.k;
    let fs = barahona_facets(g)?;
    let lattice = LatticeMembershipBasis::new(g);
    let e = PointEnumerator::new(&fs, &lattice);
    let mut report = CriterionReport {
        codegree: d,
        v: None,
        r_max,
        failure: None,
    };
    let mut first_two = Vec::new();
    let _ = e.for_each(d as i64, true, |x| {
        first_two.push(x.to_vec());
        if first_two.len() == 2 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if first_two.len() != 1 {
        let mut it = first_two.into_iter();
        let a = it
            .next()
            .ok_or_else(|| Error::Internal("codegree without interior point".into()))?;
        let b = it.next().unwrap();
        report.failure = Some(CriterionFailure::SeveralInteriorPoints(a, b));
        return Ok(report);
    }
    let v = first_two.into_iter().next().unwrap();
    for r in 1..=r_max {
        let mut bad = None;
        let _ = e.for_each(d as i64 + r as i64, true, |w| {
            let diff: Vec<i64> = w.iter().zip(&v).map(|(w, v)| w - v).collect();
            let ok = fs.first_violation(&diff, r as i64, false).is_none()
                && lattice.contains(&diff).unwrap_or(false);
            if ok {
                ControlFlow::Continue(())
            } else {
                bad = Some(w.to_vec());
                ControlFlow::Break(())
            }
        });
        if let Some(w) = bad {
            report.failure = Some(CriterionFailure::Shift { r, w });
            break;
        }
    }
    report.v = Some(v);
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    /// Counts agree and the h-vector is symmetric, with normality checked
    /// only up to `certified_degree`.
    Gorenstein {
        certified_degree: usize,
    },
    NotNormal {
        degree: usize,
    },
    Asymmetric,
    Undecided(String),
}

impl OracleVerdict {
    /// `Some(true)` for GORENSTEIN, `Some(false)` for NOT, `None` otherwise.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            OracleVerdict::Gorenstein { .. } => Some(true),
            OracleVerdict::NotNormal { .. } | OracleVerdict::Asymmetric => Some(false),
            OracleVerdict::Undecided(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub verdict: OracleVerdict,
    pub normality: Option<NormalityVerdict>,
    pub h: Option<HVector>,
}

/// Gorenstein test by counting: normal up to degree `m + 2` and a symmetric
/// h-vector. Bound errors make the answer UNDECIDED.
pub fn gorenstein_oracle(g: &Graph) -> Result<OracleReport> {
    let (e, h) = match ehrhart::both_counts(g, None) {
        Ok(c) => c,
        Err(err) if err.is_bound() || err == Error::HasK5Minor => {
            return Ok(OracleReport {
                verdict: OracleVerdict::Undecided(err.to_string()),
                normality: None,
                h: None,
            })
        }
        Err(err) => return Err(err),
    };
    let normality = ehrhart::compare(&e, &h);
    let hv = ehrhart::h_vector(&h)?;
    let verdict = match normality {
        NormalityVerdict::NotNormal(degree) => OracleVerdict::NotNormal { degree },
        NormalityVerdict::NormalUpTo(r) => {
            if hv.is_symmetric() {
                OracleVerdict::Gorenstein {
                    certified_degree: r,
                }
            } else {
                OracleVerdict::Asymmetric
            }
        }
    };
    Ok(OracleReport {
        verdict,
        normality: Some(normality),
        h: Some(hv),
    })
}
