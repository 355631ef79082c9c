use std::collections::BTreeSet;

use cpg_core::{canon, ccpm, filter, klee, oracle, orderly, props, Constraints, Graph, Split};

fn certs(graphs: &[Graph]) -> BTreeSet<Vec<u8>> {
    graphs.iter().map(canon::certificate).collect()
}

#[test]
fn small_census() {
    let expected = [(6, 1), (8, 2), (10, 4), (12, 10), (14, 28)];
    for (n, count) in expected {
        let graphs = ccpm::generate_all(n, Constraints::default(), Split::NONE).unwrap();
        assert_eq!(graphs.len(), count, "order {n}");
        assert_eq!(certs(&graphs).len(), count, "order {n} has duplicates");
        for g in &graphs {
            assert!(g.is_cubic() && g.order() == n);
            assert!(filter::has_permutation_two_factor(g));
        }
    }
}

#[test]
fn three_generators_agree() {
    for n in [8, 10, 12, 14] {
        for c in [Constraints::default(), Constraints::girth(5), Constraints::non_hamiltonian()] {
            let a = certs(&ccpm::generate_all(n, c, Split::NONE).unwrap());
            let options = orderly::Options { constraints: c, ..Default::default() };
            let b = certs(&orderly::generate_all(n, options).unwrap());
            let o = certs(&oracle::generate_by_lists(n, c).unwrap());
            assert_eq!(a, o, "order {n} {c:?}");
            assert_eq!(b, o, "order {n} {c:?}");
        }
    }
}

#[test]
fn slices_partition_the_output() {
    let full = ccpm::generate_all(12, Constraints::default(), Split::NONE).unwrap();
    for modulus in [2, 5] {
        let depth = ccpm::default_split_depth(12, Constraints::default(), modulus).unwrap();
        let mut union = Vec::new();
        for r in 0..modulus {
            union.extend(ccpm::generate_all(12, Constraints::default(), Split::new(r, modulus, depth).unwrap()).unwrap());
        }
        assert_eq!(union.len(), full.len());
        assert_eq!(certs(&union), certs(&full));
    }
}

#[test]
fn petersen_is_the_smallest_non_hamiltonian_member() {
    let nh = ccpm::generate_all(10, Constraints::non_hamiltonian(), Split::NONE).unwrap();
    assert_eq!(nh.len(), 1);
    let c = props::classify(&nh[0]);
    assert_eq!(c.girth, Some(5));
    assert!(!c.hamiltonian && !c.colorable && c.lambda_c_ge_5);
    let built = klee::construct_nonhamiltonian(10).unwrap();
    assert_eq!(canon::certificate(&built), canon::certificate(&nh[0]));
}

#[test]
fn invalid_requests() {
    assert!(ccpm::generate_all(7, Constraints::default(), Split::NONE).is_err());
    assert!(orderly::generate_all(4, orderly::Options::default()).is_err());
    assert!(Split::new(3, 3, 1).is_err());
    assert!(oracle::generate_by_lists(20, Constraints::default()).is_err());
}
