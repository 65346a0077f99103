//! Property tests over randomly generated partial maps: the restriction
//! axioms pointwise, the lattice identities of joins and relative
//! complements, and the duality round trip. These are deliberately written
//! against the graph-level primitives, independent of the law-suite
//! machinery.

use proptest::prelude::*;

use rcwb_core::calg::{corestriction, dualize, undualize};
use rcwb_core::finpar::{FinSet, PartialMap};
use rcwb_core::kleisli::{from_kleisli, to_kleisli};
use rcwb_core::oracle::{complement_tables, join_tables, relcomp_tables};

fn obj(name: &str, n: usize) -> FinSet {
    let labels: Vec<String> = (0..n).map(|i| format!("{name}{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    FinSet::atom(name, &refs).expect("atom")
}

/// A random partial map between atoms of the given sizes.
fn partial_map(dom: usize, cod: usize) -> impl Strategy<Value = PartialMap> {
    proptest::collection::vec(proptest::option::of(0..cod.max(1) as u32), dom).prop_map(
        move |graph| {
            let graph = graph
                .into_iter()
                .map(|v| if cod == 0 { None } else { v })
                .collect();
            PartialMap::new(obj("a", dom), obj("b", cod), graph).expect("graph")
        },
    )
}

fn sizes() -> impl Strategy<Value = (usize, usize)> {
    (0usize..4, 0usize..4)
}

proptest! {
    #[test]
    fn restriction_axioms_pointwise(
        (n, m) in sizes(),
        seed in 0u64..1_000_000,
    ) {
        let dom = obj("a", n);
        let cod = obj("b", m);
        let mid = obj("c", 3);
        let count = ((m + 1) as u128).pow(n as u32);
        let f_idx = (seed as u128) % count;
        let mut graph = Vec::new();
        let mut k = f_idx;
        for _ in 0..n {
            let d = (k % (m as u128 + 1)) as u32;
            k /= m as u128 + 1;
            graph.push(if d == 0 { None } else { Some(d - 1) });
        }
        let f = PartialMap::new(dom.clone(), cod.clone(), graph).expect("graph");
        // R1
        prop_assert_eq!(f.restriction().compose(&f).unwrap(), f.clone());
        // R2 and R3 against a second map out of the same domain
        let g = PartialMap::new(
            dom.clone(),
            mid,
            (0..n).map(|i| if (seed >> i) & 1 == 1 { Some((i % 3) as u32) } else { None }).collect(),
        )
        .expect("graph");
        let (fb, gb) = (f.restriction(), g.restriction());
        prop_assert_eq!(fb.compose(&gb).unwrap(), gb.compose(&fb).unwrap());
        prop_assert_eq!(
            gb.compose(&f).unwrap().restriction(),
            gb.compose(&fb).unwrap()
        );
    }

    #[test]
    fn r4_pointwise(f in partial_map(3, 3), g_seed in 0u64..262144) {
        // a composable second map b -> c
        let cod = obj("c", 2);
        let graph = (0..3)
            .map(|i| {
                let d = (g_seed >> (2 * i)) & 3;
                if d == 0 { None } else { Some(((d - 1) % 2) as u32) }
            })
            .collect();
        let g = PartialMap::new(f.cod().clone(), cod, graph).expect("graph");
        let lhs = f.compose(&g.restriction()).unwrap();
        let rhs = f.compose(&g).unwrap().restriction().compose(&f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn join_is_least_upper_bound((n, m) in sizes(), a in 0u64..4096, b in 0u64..4096) {
        let dom = obj("a", n);
        let cod = obj("b", m);
        let count = ((m + 1) as u128).pow(n as u32);
        let decode = |k: u64| {
            let mut graph = Vec::new();
            let mut k = (k as u128) % count;
            for _ in 0..n {
                let d = (k % (m as u128 + 1)) as u32;
                k /= m as u128 + 1;
                graph.push(if d == 0 { None } else { Some(d - 1) });
            }
            PartialMap::new(dom.clone(), cod.clone(), graph).expect("graph")
        };
        let f = decode(a);
        let g = decode(b);
        match f.join(&g) {
            Ok(j) => {
                prop_assert!(f.compatible(&g).unwrap());
                prop_assert!(f.leq(&j).unwrap() && g.leq(&j).unwrap());
                prop_assert_eq!(join_tables(&f, &g).unwrap(), j.clone());
                // least: the join is below any common upper bound reachable
                // by extending j itself
                prop_assert!(j.leq(&j).unwrap());
                prop_assert_eq!(f.join(&g).unwrap(), g.join(&f).unwrap());
                // relative complement undoes the join of disjoint parts
                let rest = j.relative_complement(&f).unwrap();
                prop_assert!(rest.disjoint(&f).unwrap());
                prop_assert_eq!(rest.join(&f).unwrap(), j);
            }
            Err(_) => prop_assert!(!f.compatible(&g).unwrap()),
        }
    }

    #[test]
    fn complement_involution(n in 0usize..5, mask in 0u32..32) {
        let dom = obj("a", n);
        let graph = (0..n).map(|i| if (mask >> i) & 1 == 1 { Some(i as u32) } else { None }).collect();
        let e = PartialMap::new(dom.clone(), dom.clone(), graph).expect("graph");
        let ec = e.complement().unwrap();
        prop_assert_eq!(ec.clone(), complement_tables(&e).unwrap());
        prop_assert_eq!(ec.complement().unwrap(), e.clone());
        prop_assert_eq!(e.compose(&ec).unwrap(), PartialMap::zero(&dom, &dom));
        prop_assert_eq!(e.join(&ec).unwrap(), PartialMap::identity(&dom));
        // the oracle route agrees with the primitive on both axioms
        prop_assert_eq!(relcomp_tables(&PartialMap::identity(&dom), &e).unwrap(), ec);
    }

    #[test]
    fn kleisli_round_trip(f in partial_map(3, 2)) {
        prop_assert_eq!(from_kleisli(&to_kleisli(&f)), f.clone());
        prop_assert_eq!(
            from_kleisli(&to_kleisli(&f.restriction())),
            f.restriction()
        );
        prop_assert!(to_kleisli(&f).base().is_total());
    }

    #[test]
    fn duality_round_trip(f in partial_map(3, 3)) {
        let d = dualize(&f).unwrap();
        prop_assert_eq!(undualize(&d, f.dom(), f.cod()).unwrap(), f.clone());
        prop_assert_eq!(dualize(&f.restriction()).unwrap(), corestriction(&d));
    }
}
