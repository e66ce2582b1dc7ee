//! JSON views of library values. Vertices and edges are 1-based here.

use cut_gorenstein::ehrhart::{CountKind, DilationCounts, HVector, NormalityVerdict};
use cut_gorenstein::gorenstein::{
    Branch, CriterionFailure, CriterionReport, GorensteinCertificate, OracleReport, OracleVerdict,
    SpecialSimplex, Verdict, Violation,
};
use cut_gorenstein::graph::{BlockKind, CliqueSumTree, Cycle};
use cut_gorenstein::polytope::{CutVector, FacetOrigin, FacetSystem};
use cut_gorenstein::Graph;
use serde_json::{json, Value};

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn h_entries(h: &HVector) -> Vec<Value> {
    // i128 is not a JSON number type in serde_json; entries fit i64 at desk scale
    h.entries()
        .iter()
        .map(|&x| match i64::try_from(x) {
            Ok(v) => json!(v),
            Err(_) => json!(x.to_string()),
        })
        .collect()
}

pub fn graph(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect::<Vec<_>>(),
    })
}

pub fn cut_vector(v: &CutVector) -> Value {
    json!({"S": one_based(v.source()), "x": v.coords()})
}

pub fn origin(o: &FacetOrigin) -> Value {
    match o {
        FacetOrigin::BoxLower(i) => json!({"kind": "BoxLower", "edge": i + 1}),
        FacetOrigin::BoxUpper(i) => json!({"kind": "BoxUpper", "edge": i + 1}),
        FacetOrigin::CycleOdd { cycle, odd } => {
            json!({"kind": "CycleOdd", "cycle": one_based(cycle), "odd": one_based(odd)})
        }
        FacetOrigin::TriangleHom { triangle, positive } => json!({
            "kind": "TriangleHom",
            "triangle": one_based(triangle),
            "positive": positive + 1,
        }),
        FacetOrigin::TriangleSum { triangle } => {
            json!({"kind": "TriangleSum", "triangle": one_based(triangle)})
        }
        FacetOrigin::Square4 {
            cycle,
            negative,
            upper,
        } => json!({
            "kind": "Square4",
            "cycle": one_based(cycle),
            "negative": negative + 1,
            "upper": upper,
        }),
        FacetOrigin::Hull => json!({"kind": "Hull"}),
    }
}

pub fn facets(fs: &FacetSystem) -> Value {
    fs.inequalities()
        .iter()
        .map(|q| json!({"a": q.a, "b": q.b, "origin": origin(&q.origin)}))
        .collect()
}

pub fn simplex(s: &SpecialSimplex) -> Value {
    json!({
        "d": s.d(),
        "vertices": s.vertices().iter().map(cut_vector).collect::<Vec<_>>(),
    })
}

fn cycle(c: &Cycle) -> Value {
    json!({"vertices": one_based(c.vertices()), "edges": one_based(c.edges())})
}

pub fn violation(v: &Violation, g: &Graph) -> Value {
    match v {
        Violation::K5Minor(k) => json!({
            "kind": "K5Minor",
            "branch_sets": k.branch_sets().iter().map(|b| one_based(b)).collect::<Vec<_>>(),
        }),
        Violation::BipartiteLongInducedCycle(c) => {
            json!({"kind": "BipartiteLongInducedCycle", "cycle": cycle(c)})
        }
        Violation::OddCycle(c) => json!({"kind": "OddCycle", "cycle": cycle(c)}),
        Violation::NotChordal(c) => json!({"kind": "NotChordal", "cycle": cycle(c)}),
        Violation::Bridge(e) => {
            let (u, w) = g.edge(*e);
            json!({"kind": "Bridge", "edge": e + 1, "endpoints": [u + 1, w + 1]})
        }
    }
}

pub fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Gorenstein => "GORENSTEIN",
        Verdict::Not => "NOT",
    }
}

pub fn certificate(c: &GorensteinCertificate, g: &Graph) -> Value {
    json!({
        "graph": graph(g),
        "verdict": verdict(c.verdict),
        "branch": c.branch.map(|b| match b {
            Branch::Bipartite => "i",
            Branch::BridgelessChordal => "ii",
        }),
        "partition": c.partition.as_ref().map(|p| {
            p.classes().iter().map(|c| one_based(c)).collect::<Vec<_>>()
        }),
        "special_simplex": c.simplex.as_ref().map(simplex),
        "violations": c.violations.iter().map(|v| violation(v, g)).collect::<Vec<_>>(),
    })
}

pub fn normality(v: &NormalityVerdict) -> Value {
    match v {
        NormalityVerdict::NormalUpTo(r) => json!({"verdict": "NORMAL_UP_TO", "degree": r}),
        NormalityVerdict::NotNormal(r) => json!({"verdict": "NOT_NORMAL", "degree": r}),
    }
}

pub fn counts_kind(c: &DilationCounts) -> &'static str {
    match c.kind {
        CountKind::Ehrhart => "EHRHART",
        CountKind::Hilbert => "HILBERT",
    }
}

pub fn h_vector(h: &HVector) -> Value {
    Value::Array(h_entries(h))
}

pub fn oracle(r: &OracleReport) -> Value {
    let (verdict, extra) = match &r.verdict {
        OracleVerdict::Gorenstein { certified_degree } => (
            "GORENSTEIN",
            json!({"caveat": format!("normality checked only up to degree {certified_degree}")}),
        ),
        OracleVerdict::NotNormal { degree } => (
            "NOT",
            json!({"reason": format!("not normal in degree {degree}")}),
        ),
        OracleVerdict::Asymmetric => ("NOT", json!({"reason": "h-vector is not symmetric"})),
        OracleVerdict::Undecided(why) => ("UNDECIDED", json!({"reason": why})),
    };
    let mut out = json!({
        "verdict": verdict,
        "normality": r.normality.as_ref().map(normality),
        "h": r.h.as_ref().map(h_vector),
    });
    if let (Value::Object(o), Value::Object(e)) = (&mut out, extra) {
        o.extend(e);
    }
    out
}

pub fn criterion(r: &CriterionReport) -> Value {
    let failure = r.failure.as_ref().map(|f| match f {
        CriterionFailure::SeveralInteriorPoints(a, b) => {
            json!({"kind": "SeveralInteriorPoints", "points": [a, b]})
        }
        CriterionFailure::Shift { r, w } => json!({"kind": "Shift", "r": r, "w": w}),
    });
    json!({
        "holds": r.holds(),
        "codegree": r.codegree,
        "v": r.v,
        "r_max": r.r_max,
        "failure": failure,
        "note": "necessary condition only; success does not certify the Gorenstein property",
    })
}

pub fn decomposition(t: Option<&CliqueSumTree>) -> Value {
    match t {
        None => json!({"decomposable": false}),
        Some(t) => json!({
            "decomposable": true,
            "blocks": t.blocks.iter().map(|b| json!({
                "kind": match b.kind { BlockKind::K3 => "K3", BlockKind::K4 => "K4" },
                "vertices": one_based(&b.vertices),
            })).collect::<Vec<_>>(),
            "gluings": t.gluings.iter().map(|gl| json!({
                "a": gl.a + 1,
                "b": gl.b + 1,
                "shared": one_based(&gl.shared),
                "k": gl.sum_order(),
            })).collect::<Vec<_>>(),
        }),
    }
}
