use cpg_core::{graph6, Error, Graph};
use proptest::prelude::*;

/// A random subcubic graph: candidate edges are offered in the given order
/// and kept while both ends still have room.
fn subcubic(n: usize, picks: &[(usize, usize)]) -> Graph {
    let mut g = Graph::empty(n);
    for &(a, b) in picks {
        let (u, v) = (a % n, b % n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < 3 && g.degree(v) < 3 {
            g.add_edge(u, v);
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn encode_then_decode_is_identity(
        n in 6usize..=70,
        picks in prop::collection::vec((0usize..70, 0usize..70), 0..120),
    ) {
        let g = subcubic(n, &picks);
        let code = graph6::encode(&g);
        prop_assert!(code.iter().all(|b| (63..=126).contains(b)));
        let back = graph6::decode(&code).unwrap();
        prop_assert_eq!(back.order(), n);
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(graph6::encode(&back), code);
    }
}

#[test]
fn known_encodings() {
    let petersen = cpg_core::graph::named::petersen();
    let text = graph6::encode_string(&petersen);
    let back = graph6::decode(text.as_bytes()).unwrap();
    assert_eq!(cpg_core::canon::certificate(&back), cpg_core::canon::certificate(&petersen));
    // K4 is "C~"
    let k4 = graph6::decode(b"C~").unwrap();
    assert_eq!(k4.edges(), cpg_core::graph::named::k4().edges());
    assert_eq!(graph6::encode_string(&cpg_core::graph::named::k4()), "C~");
}

#[test]
fn malformed_input_is_rejected() {
    assert!(matches!(graph6::decode(b""), Err(Error::Graph6(_))));
    assert!(matches!(graph6::decode(b"C"), Err(Error::Graph6(_))));
    assert!(matches!(graph6::decode(b"C~~"), Err(Error::Graph6(_))));
    // K5 has degree 4
    assert_eq!(graph6::decode(b"D~{"), Err(Error::NotSubcubic));
}
