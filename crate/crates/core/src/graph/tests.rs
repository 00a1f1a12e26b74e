use super::*;

fn path(n: usize) -> DenseGraph {
    let e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    DenseGraph::from_edges(n, &e).unwrap()
}

fn cycle(n: usize) -> DenseGraph {
    let e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    DenseGraph::from_edges(n, &e).unwrap()
}

#[test]
fn p4_is_not_a_cograph() {
    let g = path(4);
    let r = is_cograph(&g);
    let w = r.witness().unwrap();
    assert!(w.verify(&g));
    assert_eq!(w, &Witness::P4([0, 1, 2, 3]));
}

#[test]
fn complete_graph_is_one_join() {
    let g = DenseGraph::complete(5).unwrap();
    match is_cograph(&g) {
        Certified::Member(Cotree::Join(cs)) => assert_eq!(cs.len(), 5),
        other => panic!("{other:?}"),
    }
    assert!(is_threshold(&g) && is_quasi_threshold(&g));
    assert_eq!(independence_number(&g).unwrap(), 1);
    assert_eq!(maximal_cliques(&g).len(), 1);
}

#[test]
fn holes() {
    let g = cycle(4);
    let w = is_chordal(&g).witness().cloned().unwrap();
    assert!(w.verify(&g));
    assert_eq!(w.vertices().len(), 4);
    assert!(has_induced_c4(&g).unwrap().verify(&g));
    let g = cycle(7);
    let w = is_chordal(&g).witness().cloned().unwrap();
    assert_eq!(w.vertices().len(), 7);
    assert!(w.verify(&g));
    assert!(has_induced_c4(&g).is_none());
}

#[test]
fn trees_are_chordal() {
    let g = DenseGraph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
    match is_chordal(&g) {
        Certified::Member(p) => assert!(p.verify(&g)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn diamonds() {
    let k4 = DenseGraph::complete(4).unwrap();
    assert!(is_diamond_free(&k4).is_none());
    let d = DenseGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let w = is_diamond_free(&d).unwrap();
    assert!(w.verify(&d));
}

#[test]
fn block_examples() {
    let b = blocks(&path(4));
    assert_eq!(b.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    assert_eq!(b.cut_vertices, vec![1, 2]);
    assert!(is_block_graph(&path(4)));

    // 8-cycle with the chords of the 4-cycle on its even positions
    let mut g = cycle(8);
    for (a, b) in [(1, 3), (3, 5), (5, 7), (7, 1)] {
        g.add_edge(a, b);
    }
    let b = blocks(&g);
    assert_eq!(b.blocks.len(), 1);
    assert!(!is_block_graph(&g));
}

#[test]
fn isolated_vertices_are_blocks() {
    let g = DenseGraph::from_edges(3, &[(0, 1)]).unwrap();
    let b = blocks(&g);
    assert_eq!(b.isolated, vec![2]);
    assert_eq!(b.blocks, vec![vec![0, 1], vec![2]]);
}

#[test]
fn cliques_and_independence() {
    let tri = DenseGraph::complete(3).unwrap();
    assert_eq!(maximal_cliques(&tri), vec![vec![0, 1, 2]]);
    assert_eq!(maximal_cliques(&path(3)), vec![vec![0, 1], vec![1, 2]]);
    let empty = DenseGraph::new(9).unwrap();
    assert_eq!(independence_number(&empty).unwrap(), 9);
    assert!(independence_number(&DenseGraph::new(65).unwrap()).is_err());
}

#[test]
fn twins() {
    assert_eq!(DenseGraph::complete(2).unwrap().closed_twins(), vec![(0, 1)]);
    assert!(path(4).closed_twins().is_empty());
}

#[test]
fn cap_is_enforced() {
    assert!(matches!(
        DenseGraph::new(DENSE_CAP + 1),
        Err(crate::Error::GraphTooLarge { .. })
    ));
}

#[test]
fn witness_verification_rejects_wrong_shapes() {
    let g = path(4);
    assert!(!Witness::P4([0, 2, 1, 3]).verify(&g));
    assert!(!Witness::P4([0, 1, 2, 2]).verify(&g));
    assert!(!Witness::Hole(vec![0, 1, 2]).verify(&g));
}
