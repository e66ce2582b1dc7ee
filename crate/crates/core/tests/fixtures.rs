//! Worked examples for each operation, checked against literal values or
//! the brute-force references in `common`.

mod common;

use cut_gorenstein::ehrhart::{self, HVector, NormalityVerdict};
use cut_gorenstein::gorenstein::{
    classify_gorenstein, construct_special_simplex, criterion_check, gorenstein_oracle,
    is_compressed, special_simplex_search, verify_special_simplex, Branch, CriterionFailure,
    OracleVerdict, SpecialSimplex, Verdict, Violation,
};
use cut_gorenstein::graph::families::*;
use cut_gorenstein::graph::{canonical_form, BlockKind, ChordalWitness};
use cut_gorenstein::polytope::{
    barahona_facets, codegree, codegree_formula, compressed_facets, cut_vector, cut_vertices,
    hull_facet_oracle, CutPolytope, FacetOrigin, LatticeMembershipBasis,
};
use cut_gorenstein::{Error, Graph};

fn coords(g: &Graph) -> Vec<Vec<i64>> {
    cut_vertices(g)
        .unwrap()
        .iter()
        .map(|c| c.coords().to_vec())
        .collect()
}

#[test]
fn graph_construction() {
    let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(k3.edge(2), (0, 2));
    assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::Loop(0)));
    assert_eq!(
        Graph::new(4, [(0, 1), (0, 1)]),
        Err(Error::DuplicateEdge(0, 1))
    );
}

#[test]
fn graph_predicates() {
    let c4 = cycle(4);
    assert_eq!(
        c4.bipartition().unwrap().classes(),
        [vec![0, 2], vec![1, 3]]
    );
    assert!(cycle(3).bipartition().is_none());
    assert_eq!(path(2).bipartition().unwrap().classes(), [vec![0], vec![1]]);

    assert!(complete(4).is_chordal());
    match c4.chordality() {
        ChordalWitness::NotChordal(c) => assert_eq!(c.len(), 4),
        other => panic!("{other:?}"),
    }
    assert!(clique_sum_of_complete(3, 3).is_chordal());

    assert_eq!(path(4).bridges(), [0, 1, 2]);
    assert!(cycle(3).bridges().is_empty());
    let g23 = clique_sum_of_complete(2, 3);
    assert_eq!(g23.bridges(), [0]);

    assert_eq!(complete(4).triangles().len(), 4);
    assert!(c4.triangles().is_empty());
    assert_eq!(g23.triangles().len(), 1);
    assert!(!g23.edge_in_triangle(0));
}

#[test]
fn induced_cycles() {
    assert!(cycle(6).max_induced_cycle_at_least(6));
    let chorded = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]).unwrap();
    assert_eq!(common::longest_induced_cycle(&chorded), 4);
    assert!(!chorded.max_induced_cycle_at_least(5));
    assert!(chorded.max_induced_cycle_at_least(4));
    assert!(!complete(4).max_induced_cycle_at_least(4));
}

#[test]
fn k5_minors() {
    assert!(complete(5).has_k5_minor());
    for g in [cycle(5), complete(4), clique_sum_of_complete(3, 3)] {
        assert!(!g.has_k5_minor());
    }
    let p = petersen();
    let minor = p.k5_minor().expect("Petersen graph has a K5 minor");
    assert!(minor.is_valid_in(&p));
    // contracting the perfect matching between the outer and inner cycle
    let mut g = p.clone();
    while let Some(i) = (0..g.m()).find(|&i| {
        let (u, v) = g.edge(i);
        u.min(v) < 5 && u.max(v) >= 5 && g.n() > 5
    }) {
        g = g.contract_edge(i).unwrap().graph;
    }
    assert_eq!((g.n(), g.m()), (5, 10));
    assert_eq!(
        canonical_form(&g).unwrap(),
        canonical_form(&complete(5)).unwrap()
    );
}

#[test]
fn minor_operations() {
    assert_eq!(cycle(3).contract_edge(0).unwrap().graph, path(2));
    assert_eq!(complete(4).delete_edge(5).unwrap().m(), 5);
    let c = cycle(4).contract_edge(0).unwrap();
    assert_eq!(c.graph.m(), 3);
    assert!(c.graph.is_chordal() && c.graph.triangles().len() == 1);
}

#[test]
fn four_colourings() {
    let k4 = complete(4).chordal_four_coloring().unwrap();
    assert!(k4.classes().iter().all(|c| c.len() == 1));
    let k3 = cycle(3).chordal_four_coloring().unwrap();
    let mut sizes: Vec<usize> = k3.classes().iter().map(Vec::len).collect();
    sizes.sort();
    assert_eq!(sizes, [0, 1, 1, 1]);
    let g33 = clique_sum_of_complete(3, 3);
    let p = g33.chordal_four_coloring().unwrap();
    let nonempty: Vec<&Vec<usize>> = p.classes().iter().filter(|c| !c.is_empty()).collect();
    assert_eq!(nonempty.len(), 3);
    assert!(nonempty.contains(&&vec![2]));
    let colour = p.color_of(g33.n());
    assert!(g33.edges().iter().all(|&(u, v)| colour[u] != colour[v]));
}

#[test]
fn decompositions() {
    let t = clique_sum_of_complete(3, 3)
        .clique_sum_decompose()
        .unwrap()
        .unwrap();
    assert_eq!(t.blocks.len(), 2);
    assert!(t.blocks.iter().all(|b| b.kind == BlockKind::K3));
    assert_eq!(t.gluings.len(), 1);
    assert_eq!(t.gluings[0].shared, [2]);
    let t = complete(4).clique_sum_decompose().unwrap().unwrap();
    assert_eq!(t.blocks.len(), 1);
    assert_eq!(t.blocks[0].kind, BlockKind::K4);
    assert!(clique_sum_of_complete(2, 3)
        .clique_sum_decompose()
        .unwrap()
        .is_none());
}

#[test]
fn cut_vectors() {
    let k3 = cycle(3);
    assert_eq!(cut_vector(&k3, &[]).unwrap().coords(), [0, 0, 0]);
    // K3 with edges 12, 23, 13 in that order
    let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(cut_vector(&k3, &[0]).unwrap().coords(), [1, 0, 1]);
    assert_eq!(
        cut_vector(&k3, &[1, 2]).unwrap(),
        cut_vector(&k3, &[0]).unwrap()
    );
    let mut v = coords(&k3);
    v.sort();
    assert_eq!(v, [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]);
    assert_eq!(coords(&path(2)), [[0], [1]]);
    let mut v = coords(&path(3));
    v.sort();
    assert_eq!(v, [[0, 0], [0, 1], [1, 0], [1, 1]]);
}

#[test]
fn lattice_membership() {
    let k3 = cycle(3);
    let basis = LatticeMembershipBasis::new(&k3);
    assert!(basis.contains(&[1, 1, 0]).unwrap());
    assert!(!basis.contains(&[1, 0, 0]).unwrap());
    for g in [cycle(5), complete(4), petersen()] {
        assert!(LatticeMembershipBasis::new(&g)
            .contains(&vec![2; g.m()])
            .unwrap());
    }
}

#[test]
fn facet_lists() {
    let k3 = barahona_facets(&cycle(3)).unwrap();
    assert_eq!(k3.len(), 4);
    let sum = k3.inequalities().iter().filter(|q| q.b == 2).count();
    let hom = k3.inequalities().iter().filter(|q| q.b == 0).count();
    assert_eq!((sum, hom), (1, 3));
    let k2 = barahona_facets(&path(2)).unwrap();
    assert_eq!(k2.normalized_set(), [(vec![-1], 0), (vec![1], 1)].into());
    let c5 = barahona_facets(&cycle(5)).unwrap();
    assert_eq!(c5.len(), 26);
    let oracle = hull_facet_oracle(&coords(&cycle(5)), 5).unwrap();
    assert!(c5.same_facets(&oracle));

    assert!(compressed_facets(&cycle(3)).unwrap().same_facets(&k3));
    let c4 = compressed_facets(&cycle(4)).unwrap();
    let boxes = c4
        .inequalities()
        .iter()
        .filter(|q| {
            matches!(
                q.origin,
                FacetOrigin::BoxLower(_) | FacetOrigin::BoxUpper(_)
            )
        })
        .count();
    assert_eq!((c4.len(), boxes), (16, 8));
    assert!(c4.same_facets(&hull_facet_oracle(&coords(&cycle(4)), 4).unwrap()));
    let k4 = compressed_facets(&complete(4)).unwrap();
    assert_eq!(k4.len(), 16);
    assert!(k4.inequalities().iter().all(|q| matches!(
        q.origin,
        FacetOrigin::TriangleHom { .. } | FacetOrigin::TriangleSum { .. }
    )));
    assert!(k4.same_facets(&hull_facet_oracle(&coords(&complete(4)), 6).unwrap()));
    assert_eq!(barahona_facets(&complete(5)), Err(Error::HasK5Minor));
}

#[test]
fn membership_and_codegree() {
    let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let fs = barahona_facets(&k3).unwrap();
    assert!(fs.contains(&[2, 2, 2], 4, true).unwrap());
    assert!(!fs.contains(&[1, 1, 0], 1, true).unwrap());
    assert!(barahona_facets(&cycle(4))
        .unwrap()
        .contains(&[1, 1, 1, 1], 2, true)
        .unwrap());

    let c = codegree(&k3).unwrap();
    assert_eq!((c.k, c.witness), (4, vec![2, 2, 2]));
    let c = codegree(&cycle(4)).unwrap();
    assert_eq!((c.k, c.witness), (2, vec![1, 1, 1, 1]));
    assert_eq!(codegree(&cycle(5)).unwrap().k, 3);
    assert_eq!(codegree_formula(&cycle(4)), 2);
    assert_eq!(codegree_formula(&clique_sum_of_complete(3, 3)), 4);
    assert_eq!(codegree_formula(&cycle(5)), 3);
}

#[test]
fn hull_examples() {
    let k3 = CutPolytope::new(&cycle(3)).unwrap();
    assert_eq!(hull_facet_oracle(&k3.vertex_coords(), 3).unwrap().len(), 4);
    let square = [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]];
    assert_eq!(hull_facet_oracle(&square, 2).unwrap().len(), 4);
}

#[test]
fn counting() {
    let k3 = cycle(3);
    assert_eq!(ehrhart::ehrhart_count(&k3, 1).unwrap(), 4);
    assert_eq!(ehrhart::ehrhart_count(&cycle(5), 0).unwrap(), 1);
    let c4 = cycle(4);
    assert_eq!(
        ehrhart::ehrhart_count(&c4, 2).unwrap(),
        ehrhart::hilbert_count(&c4, 2).unwrap()
    );
    assert_eq!(
        ehrhart::hilbert_count(&c4, 2).unwrap(),
        common::hilbert_counts(&c4, 2)[2]
    );
    assert_eq!(ehrhart::hilbert_count(&k3, 2).unwrap(), 10);
    assert_eq!(common::hilbert_counts(&k3, 2)[2], 10);
    for g in [cycle(5), complete(4), path(4), clique_sum_of_complete(3, 3)] {
        assert_eq!(ehrhart::hilbert_count(&g, 1).unwrap(), 1 << (g.n() - 1));
        assert_eq!(ehrhart::hilbert_count(&g, 0).unwrap(), 1);
    }
}

#[test]
fn normality() {
    for g in [cycle(3), clique_sum_of_complete(3, 3)] {
        assert!(ehrhart::is_normal_desk(&g, None).unwrap().is_normal_up_to());
    }
    assert_eq!(
        ehrhart::is_normal_desk(&cycle(6), Some(8)).unwrap(),
        NormalityVerdict::NormalUpTo(8)
    );
}

#[test]
fn h_vectors() {
    let k3 = cycle(3);
    let h = ehrhart::h_vector(&ehrhart::hilbert_counts(&k3, 5).unwrap()).unwrap();
    assert_eq!(h.entries(), [1]);
    assert_eq!(
        common::h_from_counts(&common::hilbert_counts(&k3, 5), 3),
        [1]
    );
    let h = HVector::new(vec![1, 9, 9, 1]);
    assert!(h.is_symmetric() && h.is_unimodal());
    assert!(!HVector::new(vec![1, 3]).is_symmetric());
    let h = HVector::new(vec![1]);
    assert!(h.is_symmetric() && h.is_unimodal());
}

#[test]
fn compressedness() {
    assert!(!is_compressed(&cycle(5)).is_compressed());
    assert!(is_compressed(&complete(4)).is_compressed());
    assert!(!is_compressed(&complete(5)).is_compressed());
}

#[test]
fn classification() {
    for g in [path(5), star(4), path(2)] {
        let c = classify_gorenstein(&g).unwrap();
        assert_eq!(
            (c.verdict, c.branch),
            (Verdict::Gorenstein, Some(Branch::Bipartite))
        );
    }
    let c = classify_gorenstein(&clique_sum_of_complete(3, 3)).unwrap();
    assert_eq!(
        (c.verdict, c.branch),
        (Verdict::Gorenstein, Some(Branch::BridgelessChordal))
    );
    let c = classify_gorenstein(&clique_sum_of_complete(2, 3)).unwrap();
    assert_eq!(c.verdict, Verdict::Not);
    assert!(matches!(
        c.violations[..],
        [Violation::OddCycle(_), Violation::Bridge(0)]
    ));
    let c = classify_gorenstein(&cycle(6)).unwrap();
    assert_eq!(c.verdict, Verdict::Not);
    assert!(matches!(&c.violations[0], Violation::BipartiteLongInducedCycle(cy) if cy.len() == 6));
}

#[test]
fn special_simplices() {
    let s = construct_special_simplex(&path(2)).unwrap();
    assert_eq!(s.d(), 1);
    let mut pts: Vec<_> = s.vertices().iter().map(|v| v.coords().to_vec()).collect();
    pts.sort();
    assert_eq!(pts, [[0], [1]]);

    let k4 = complete(4);
    let s = construct_special_simplex(&k4).unwrap();
    assert_eq!(s.d(), 3);
    let singletons: Vec<_> = (0..4).map(|v| cut_vector(&k4, &[v]).unwrap()).collect();
    assert!(s.vertices().iter().all(|v| singletons.contains(v)));
    let fs = barahona_facets(&k4).unwrap();
    assert!(verify_special_simplex(&fs, &s, &cut_vertices(&k4).unwrap())
        .unwrap()
        .is_valid());

    let k3 = cycle(3);
    let s = construct_special_simplex(&k3).unwrap();
    assert_eq!(s.d(), 3);
    assert_eq!(s.vertices().len(), 4);

    let c4 = cycle(4);
    let segment = SpecialSimplex::new(vec![
        cut_vector(&c4, &[]).unwrap(),
        cut_vector(&c4, &[1, 3]).unwrap(),
    ]);
    assert_eq!(segment.vertices()[1].coords(), [1, 1, 1, 1]);
    let fs = barahona_facets(&c4).unwrap();
    assert!(
        verify_special_simplex(&fs, &segment, &cut_vertices(&c4).unwrap())
            .unwrap()
            .is_valid()
    );

    // no pair of vertices of CUT(G_{2,3}) is a special segment
    let g23 = clique_sum_of_complete(2, 3);
    let fs = barahona_facets(&g23).unwrap();
    let verts = cut_vertices(&g23).unwrap();
    for (i, a) in verts.iter().enumerate() {
        for b in &verts[i + 1..] {
            let s = SpecialSimplex::new(vec![a.clone(), b.clone()]);
            assert!(!verify_special_simplex(&fs, &s, &verts).unwrap().is_valid());
        }
    }

    let found = special_simplex_search(&clique_sum_of_complete(3, 3), 4).unwrap();
    assert_eq!(found.map(|s| s.d()), Some(3));
    assert!(special_simplex_search(&g23, 4).unwrap().is_none());
    assert_eq!(
        special_simplex_search(&path(2), 4).unwrap().map(|s| s.d()),
        Some(1)
    );
}

#[test]
fn interior_point_criterion() {
    let r = criterion_check(&cycle(3), 2).unwrap();
    assert!(r.holds());
    assert_eq!(r.v, Some(vec![2, 2, 2]));
    let r = criterion_check(&path(2), 2).unwrap();
    assert!(r.holds());
    assert_eq!(r.v, Some(vec![1]));

    // For C6 the first shift that fails is in degree 2: degree 1 passes.
    let c6 = cycle(6);
    assert!(criterion_check(&c6, 1).unwrap().holds());
    let r = criterion_check(&c6, 2).unwrap();
    let Some(CriterionFailure::Shift { r: 2, w }) = r.failure else {
        panic!("{r:?}");
    };
    let fs = barahona_facets(&c6).unwrap();
    let v = r.v.unwrap();
    assert!(fs.contains(&w, 4, true).unwrap());
    let diff: Vec<i64> = w.iter().zip(&v).map(|(a, b)| a - b).collect();
    assert!(!(fs.contains(&diff, 2, false).unwrap() && common::in_lattice(&c6, &diff)));
}

#[test]
fn counting_oracle() {
    let r = gorenstein_oracle(&clique_sum_of_complete(3, 3)).unwrap();
    assert!(matches!(r.verdict, OracleVerdict::Gorenstein { .. }));
    let r = gorenstein_oracle(&clique_sum_of_complete(2, 3)).unwrap();
    assert_eq!(r.verdict, OracleVerdict::Asymmetric);
    assert_eq!(r.h.unwrap().entries(), [1, 3]);

    let c6 = cycle(6);
    let r = gorenstein_oracle(&c6).unwrap();
    assert_eq!(r.verdict, OracleVerdict::Asymmetric);
    let reference = common::h_from_counts(&common::hilbert_counts(&c6, 8), 6);
    assert_eq!(r.h.unwrap().entries(), reference.as_slice());
    assert!(reference.iter().ne(reference.iter().rev()));
}
