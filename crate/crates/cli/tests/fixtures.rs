mod common;

use numvc::graph::VertexSet;
use numvc::oracle::exact_mvc;

#[test]
fn mann_reconstruction_matches_published_sizes() {
    let a9 = common::mann_clq(2);
    assert_eq!((a9.num_vertices(), a9.num_edges()), (45, 918));
    let cover = exact_mvc(&a9.complement().unwrap(), 64).unwrap();
    assert_eq!(cover.optimum, 29);
    assert!(a9.is_clique(&cover.witness.complement()));

    let a27 = common::mann_a27_clq();
    assert_eq!((a27.num_vertices(), a27.num_edges()), (378, 70551));
}

#[test]
fn hamming8_4_matches_published_sizes() {
    let g = common::hamming_clq(8, 4);
    assert_eq!((g.num_vertices(), g.num_edges()), (256, 20864));
    // the extended Hamming code [8,4,4] is a clique of 16 words
    let rows = [0b1111_0000usize, 0b1100_1100, 0b1010_1010, 0b1111_1111];
    let code = (0..16usize).map(|mask| {
        (0..4).filter(|i| mask >> i & 1 == 1).fold(0, |w, i| w ^ rows[i])
    });
    assert!(g.is_clique(&VertexSet::from_vertices(256, code)));
}

#[test]
fn frb_instances_have_benchmark_shape() {
    for (groups, d, vc) in [(30, 15, 420), (35, 17, 560)] {
        let (g, target) = common::frb(groups, 7);
        assert_eq!(target, vc);
        assert_eq!(g.num_vertices(), groups * d);
        // every group is a clique, so an independent set has at most one vertex per group
        for grp in 0..groups {
            for a in 0..d {
                for b in a + 1..d {
                    assert!(g.has_edge(grp * d + a, grp * d + b));
                }
            }
        }
        let m = g.num_edges() as f64;
        let expected = if groups == 30 { 17_827.0 } else { 27_856.0 };
        assert!((m - expected).abs() / expected < 0.02, "{m} edges");
    }
}
