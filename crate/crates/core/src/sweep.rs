//! Exhaustive checks of the library's invariants over small labeled graphs.

use std::collections::HashMap;

use crate::ehrhart::{self, NormalityVerdict};
use crate::error::Result;
use crate::gorenstein::{
    all_special_simplices, classify_gorenstein, construct_special_simplex, gorenstein_oracle,
    is_compressed, special_simplex_search, verify_special_simplex, Verdict,
};
use crate::graph::{canonical_form, labeled_graphs, Graph};
use crate::linalg;
use crate::polytope::{barahona_facets, codegree, codegree_formula, cut_vertices};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Vertex bound for the purely combinatorial suites.
    pub max_n: usize,
    /// Vertex bound for suites that count lattice points.
    pub counting_n: usize,
    /// Edge bound for suites that count lattice points.
    pub max_m: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 7,
            counting_n: 5,
            max_m: 7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: u64,
    pub skipped: u64,
    pub violation: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checked: 0,
            skipped: 0,
            violation: None,
        }
    }

    fn fail(&mut self, g: &Graph, what: impl std::fmt::Display) {
        self.violation = Some(format!("{what} on edges {:?} (n = {})", g.edges(), g.n()));
    }
}

fn graphs(max_n: usize, max_m: usize, connected: Option<bool>) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(move |n| {
        labeled_graphs(n)
            .expect("vertex bound checked by caller")
            .filter(move |g| g.m() <= max_m && connected.is_none_or(|c| g.is_connected() == c))
    })
}

/// Normality verdicts memoised by isomorphism class.
#[derive(Default)]
pub struct NormalityCache {
    map: HashMap<(usize, u64), Option<NormalityVerdict>>,
}

impl NormalityCache {
    /// `None` when the counts are out of bounds.
    pub fn get(&mut self, g: &Graph) -> Result<Option<NormalityVerdict>> {
        let key = (g.n(), canonical_form(g)?);
        if let Some(v) = self.map.get(&key) {
            return Ok(*v);
        }
        let v = match ehrhart::is_normal_desk(g, None) {
            Ok(v) => Some(v),
            Err(e) if e.is_bound() => None,
            Err(e) => return Err(e),
        };
        self.map.insert(key, v);
        Ok(v)
    }
}

/// GORENSTEIN implies compressed.
pub fn gorenstein_implies_compressed(max_n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("gorenstein_implies_compressed");
    for g in graphs(max_n, usize::MAX, None) {
        rep.checked += 1;
        if classify_gorenstein(&g)?.verdict == Verdict::Gorenstein
            && !is_compressed(&g).is_compressed()
        {
            rep.fail(&g, "Gorenstein but not compressed");
            break;
        }
    }
    Ok(rep)
}

/// Decomposition into K3/K4 blocks exists exactly for bridgeless chordal
/// K5-minor-free graphs, and reassembles to the input.
pub fn decomposition(max_n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("clique_sum_decomposition");
    for g in graphs(max_n, usize::MAX, Some(true)) {
        rep.checked += 1;
        let expected = g.bridges().is_empty() && g.is_chordal() && !g.has_k5_minor();
        match g.clique_sum_decompose()? {
            Some(t) if expected => {
                let edges: std::collections::BTreeSet<_> = g.edges().iter().copied().collect();
                if t.reassemble() != edges || !t.is_valid_for(&g) {
                    rep.fail(&g, "decomposition does not reassemble");
                    break;
                }
            }
            None if !expected => {}
            other => {
                rep.fail(
                    &g,
                    format!("decomposition {} but expected {expected}", other.is_some()),
                );
                break;
            }
        }
    }
    Ok(rep)
}

/// The graph classification agrees with the counting oracle.
pub fn main_equivalence(cfg: &SweepConfig, connected: bool) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(if connected {
        "classification_vs_oracle"
    } else {
        "classification_vs_oracle_disconnected"
    });
    for g in graphs(cfg.counting_n, cfg.max_m, Some(connected)) {
        let classified = classify_gorenstein(&g)?.verdict == Verdict::Gorenstein;
        match gorenstein_oracle(&g)?.verdict.as_bool() {
            None => rep.skipped += 1,
            Some(oracle) => {
                rep.checked += 1;
                if oracle != classified {
                    rep.fail(&g, format!("classifier {classified}, oracle {oracle}"));
                    break;
                }
            }
        }
    }
    Ok(rep)
}

/// Constructed simplices verify; for compressed graphs the exhaustive
/// search succeeds exactly for GORENSTEIN, and every special simplex has
/// dimension 1 (untriangled edge or chordless 4-cycle) or 3 (triangle).
pub fn special_simplices(cfg: &SweepConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("special_simplices");
    let n = cfg
        .counting_n
        .min(crate::gorenstein::MAX_SIMPLEX_SEARCH_VERTICES);
    for g in graphs(n, usize::MAX, Some(true)) {
        let cert = classify_gorenstein(&g)?;
        let gor = cert.verdict == Verdict::Gorenstein;
        let facets = (!g.has_k5_minor())
            .then(|| barahona_facets(&g))
            .transpose()?;
        if let (true, Some(fs)) = (gor, &facets) {
            let s = construct_special_simplex(&g)?;
            if !verify_special_simplex(fs, &s, &cut_vertices(&g)?)?.is_valid() {
                rep.fail(&g, "constructed simplex is not special");
                break;
            }
        }
        if !is_compressed(&g).is_compressed() {
            rep.skipped += 1;
            continue;
        }
        rep.checked += 1;
        let found = special_simplex_search(&g, 4)?;
        if found.is_some() != gor {
            rep.fail(
                &g,
                format!(
                    "search found {} but verdict {:?}",
                    found.is_some(),
                    cert.verdict
                ),
            );
            break;
        }
        let all = all_special_simplices(&g, 4)?;
        let triangle = g.has_triangle();
        let flat = (0..g.m()).any(|i| !g.edge_in_triangle(i))
            || g.induced_cycles().iter().any(|c| c.len() == 4);
        if let Some(s) = all
            .iter()
            .find(|s| (triangle && s.d() != 3) || (flat && s.d() != 1))
        {
            rep.fail(&g, format!("special simplex of dimension {}", s.d()));
            break;
        }
    }
    Ok(rep)
}

/// Facet inequalities hold on all cut vectors and each is tight on an
/// affinely spanning set of `m` of them; cut vectors lie in the lattice.
pub fn facets(cfg: &SweepConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("facet_systems");
    for g in graphs(cfg.counting_n, cfg.max_m, None) {
        if g.has_k5_minor() {
            rep.skipped += 1;
            continue;
        }
        rep.checked += 1;
        let fs = barahona_facets(&g)?;
        let verts = cut_vertices(&g)?;
        for v in &verts {
            if !fs.contains(v.coords(), 1, false)? || !g.lattice_contains(v.coords())? {
                rep.fail(&g, format!("cut vector {:?} outside", v.coords()));
                return Ok(rep);
            }
        }
        for (i, q) in fs.inequalities().iter().enumerate() {
            let tight: Vec<Vec<i64>> = verts
                .iter()
                .filter(|v| q.is_tight(v.coords()))
                .map(|v| v.coords().to_vec())
                .collect();
            if linalg::affine_dimension(&tight)? != Some(g.m() - 1) {
                rep.fail(&g, format!("inequality {i} is not a facet"));
                return Ok(rep);
            }
        }
    }
    Ok(rep)
}

/// Codegree search against the formula, and h-vector properties, for
/// graphs whose counts agree up to the default degree.
pub fn counting(cfg: &SweepConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("codegree_and_h_vectors");
    for g in graphs(cfg.counting_n, cfg.max_m, Some(true)) {
        let (e, h) = match ehrhart::both_counts(&g, None) {
            Ok(c) => c,
            Err(err) if err.is_bound() => {
                rep.skipped += 1;
                continue;
            }
            Err(err) => return Err(err),
        };
        rep.checked += 1;
        if h.values[1] != 1 << (g.n() - 1) || e.values[0] != 1 {
            rep.fail(&g, "wrong counts in degree 0 or 1");
            break;
        }
        if !ehrhart::compare(&e, &h).is_normal_up_to() {
            continue;
        }
        let hv = ehrhart::h_vector(&h)?;
        let back = hv.expand(g.m(), h.values.len() - 1)?;
        if back.iter().zip(&h.values).any(|(a, &b)| *a != b as i128) {
            rep.fail(&g, "h-vector does not reproduce the counts");
            break;
        }
        if !hv.is_nonnegative() {
            rep.fail(&g, format!("negative h-vector {:?}", hv.entries()));
            break;
        }
        let gor = classify_gorenstein(&g)?.verdict == Verdict::Gorenstein;
        if gor && is_compressed(&g).is_compressed() && !(hv.is_symmetric() && hv.is_unimodal()) {
            rep.fail(&g, format!("Gorenstein h-vector {:?}", hv.entries()));
            break;
        }
        if g.m() <= crate::polytope::MAX_CODEGREE_EDGES {
            let k = codegree(&g)?.k;
            if k != codegree_formula(&g) {
                rep.fail(
                    &g,
                    format!("codegree {k}, formula {}", codegree_formula(&g)),
                );
                break;
            }
        }
    }
    Ok(rep)
}

/// Normal cut polytopes stay normal under single edge deletions and
/// contractions.
pub fn minor_closure(cfg: &SweepConfig, cache: &mut NormalityCache) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("normality_minor_closed");
    for g in graphs(cfg.counting_n, cfg.max_m, None) {
        match cache.get(&g)? {
            Some(v) if v.is_normal_up_to() => {}
            Some(_) => continue,
            None => {
                rep.skipped += 1;
                continue;
            }
        }
        if g.has_k5_minor() {
            rep.fail(&g, "normal but has a K5 minor");
            break;
        }
        rep.checked += 1;
        for i in 0..g.m() {
            for (what, h) in [
                ("deletion", g.delete_edge(i)?),
                ("contraction", g.contract_edge(i)?.graph),
            ] {
                if let Some(NormalityVerdict::NotNormal(r)) = cache.get(&h)? {
                    rep.fail(&g, format!("{what} of edge {i} not normal in degree {r}"));
                    return Ok(rep);
                }
            }
        }
    }
    Ok(rep)
}

fn cliques(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..1 << g.n() {
        if mask.count_ones() as usize == size {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            if vs
                .iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&w| g.has_edge(u, w)))
            {
                out.push(vs);
            }
        }
    }
    out
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// 0-, 1- and 2-sums are normal exactly when both summands are. Summands are
/// connected isomorphism-class representatives; sums are kept within
/// `counting_n + 1` vertices and `max_m` edges.
pub fn clique_sums(cfg: &SweepConfig, cache: &mut NormalityCache) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("normality_clique_sums");
    let mut reps: HashMap<(usize, u64), Graph> = HashMap::new();
    for g in graphs(cfg.counting_n, cfg.max_m, Some(true)) {
        reps.entry((g.n(), canonical_form(&g)?)).or_insert(g);
    }
    let mut summands: Vec<_> = reps.into_iter().collect();
    summands.sort_by_key(|(k, _)| *k);
    let max_sum_n = (cfg.counting_n + 1).min(ehrhart::MAX_HILBERT_VERTICES);
    for (_, a) in &summands {
        for (_, b) in &summands {
            for k in 1..=3usize {
                if a.n() < k || b.n() < k || a.n() + b.n() - k > max_sum_n {
                    continue;
                }
                for ca in cliques(a, k) {
                    for cb in cliques(b, k) {
                        for pb in permutations(&cb) {
                            let glue: Vec<(usize, usize)> =
                                ca.iter().copied().zip(pb.iter().copied()).collect();
                            let s = a.clique_sum(b, &glue)?;
                            if s.m() > cfg.max_m {
                                continue;
                            }
                            let (Some(va), Some(vb), Some(vs)) =
                                (cache.get(a)?, cache.get(b)?, cache.get(&s)?)
                            else {
                                rep.skipped += 1;
                                continue;
                            };
                            rep.checked += 1;
                            let parts = va.is_normal_up_to() && vb.is_normal_up_to();
                            if vs.is_normal_up_to() != parts {
                                rep.fail(
                                    &s,
                                    format!(
                                        "sum normal {} but parts {parts}",
                                        vs.is_normal_up_to()
                                    ),
                                );
                                return Ok(rep);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

type Suite<'a> = Box<dyn FnMut(&mut NormalityCache) -> Result<SuiteReport> + 'a>;

/// Runs every suite in order, stopping after the first violation.
pub fn run(cfg: &SweepConfig, mut progress: impl FnMut(&SuiteReport)) -> Result<Vec<SuiteReport>> {
    let mut cache = NormalityCache::default();
    let mut out = Vec::new();
    let suites: Vec<Suite> = vec![
        Box::new(|_| gorenstein_implies_compressed(cfg.max_n)),
        Box::new(|_| decomposition(cfg.max_n)),
        Box::new(|_| facets(cfg)),
        Box::new(|_| main_equivalence(cfg, true)),
        Box::new(|_| main_equivalence(cfg, false)),
        Box::new(|_| special_simplices(cfg)),
        Box::new(|_| counting(cfg)),
        Box::new(|c| minor_closure(cfg, c)),
        Box::new(|c| clique_sums(cfg, c)),
    ];
    for mut suite in suites {
        let rep = suite(&mut cache)?;
        progress(&rep);
        let failed = rep.violation.is_some();
        out.push(rep);
        if failed {
            break;
        }
    }
    Ok(out)
}
