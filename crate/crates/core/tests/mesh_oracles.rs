//! The mesh engine against independent computations of the same spaces:
//! brute-force path counting modulo mesh relations, and knitting on `ℤD_n`
//! without reference to edges.

use dn_cluster::knitting::knit_hom_function;
use dn_cluster::linalg::Q;
use dn_cluster::mesh::{hom_dim_paths, Morphism};
use dn_cluster::*;
use proptest::prelude::*;

fn edges(n: usize) -> Vec<TaggedEdge> {
    enumerate_tagged_edges(n).unwrap()
}

fn brute_force_agrees(n: usize, shifts: std::ops::RangeInclusive<i64>) {
    let engine = MeshEngine::new(n).unwrap();
    for m in edges(n) {
        let x = MeshVertex::new(0, m);
        for k in shifts.clone() {
            for y in edges(n) {
                let y = MeshVertex::new(k, y);
                let a = engine.hom_dim_vertices(&x, &y).unwrap();
                let b = hom_dim_paths(&x, &y);
                assert_eq!(a, b, "Hom({x:?}, {y:?})");
            }
        }
    }
}

#[test]
fn brute_force_paths_n3() {
    brute_force_agrees(3, 0..=2);
}

#[test]
fn brute_force_paths_n4() {
    brute_force_agrees(4, 0..=1);
}

#[test]
fn knitting_matches_engine() {
    for n in 3..=7 {
        let engine = MeshEngine::new(n).unwrap();
        for m in edges(n) {
            let x = MeshVertex::new(0, m);
            let (i0, j0) = x.zq_position();
            let columns = 2 * n as i64 + 2;
            let h = knit_hom_function(n, (i0, j0), columns);
            for i in i0..i0 + columns {
                for j in 1..=n {
                    let y = MeshVertex::from_zq(n, i, j);
                    let want = h.get(&(i, j)).copied().unwrap_or(0) as usize;
                    let got = engine.hom_dim_vertices(&x, &y).unwrap();
                    assert_eq!(got, want, "n={n} source {m} at ({i}, {j})");
                }
            }
        }
    }
}

#[test]
fn hom_vanishes_outside_two_periods() {
    // dim Hom_C is at most 2 and is carried by shifts 0 and 1
    for n in 3..=7 {
        let engine = MeshEngine::new(n).unwrap();
        for m in edges(n) {
            for x in edges(n) {
                let s = engine.hom_space(&m, &x).unwrap();
                assert!(s.dim() <= 2);
                assert!(s.components.iter().all(|c| c.dim == 0 || (0..=1).contains(&c.shift)));
            }
        }
    }
}

fn random_morphism(engine: &MeshEngine, m: &TaggedEdge, x: &TaggedEdge, seed: &[i64]) -> Morphism {
    let space = engine.hom_space(m, x).unwrap();
    let coords: Vec<Q> = (0..space.dim()).map(|i| Q::from_integer(seed[i % seed.len()])).collect();
    space.element(&coords)
}

fn normalized(f: &Morphism) -> Morphism {
    let mut g = f.clone();
    g.components.retain(|_, v| v.iter().any(|c| *c != Q::from_integer(0)));
    g
}

fn edge_strategy() -> impl Strategy<Value = (usize, [usize; 3])> {
    (3usize..=5).prop_flat_map(|n| (Just(n), [0..n * n, 0..n * n, 0..n * n]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identity_is_neutral((n, idx) in edge_strategy(), seed in prop::collection::vec(-3i64..=3, 2)) {
        let engine = MeshEngine::new(n).unwrap();
        let m = TaggedEdge::from_index(n, idx[0]).unwrap();
        let x = TaggedEdge::from_index(n, idx[1]).unwrap();
        let f = random_morphism(&engine, &m, &x, &seed);
        let left = engine.compose(&engine.identity(&m), &f).unwrap();
        let right = engine.compose(&f, &engine.identity(&x)).unwrap();
        prop_assert_eq!(normalized(&left), normalized(&f));
        prop_assert_eq!(normalized(&right), normalized(&f));
    }

    #[test]
    fn composition_is_associative_and_bilinear(
        (n, idx) in edge_strategy(),
        last in 0usize..25,
        a in prop::collection::vec(-3i64..=3, 2),
        b in prop::collection::vec(-3i64..=3, 2),
        c in prop::collection::vec(-3i64..=3, 2),
    ) {
        let engine = MeshEngine::new(n).unwrap();
        let [p, q, r] = idx.map(|i| TaggedEdge::from_index(n, i).unwrap());
        let s = TaggedEdge::from_index(n, last % (n * n)).unwrap();
        let f = random_morphism(&engine, &p, &q, &a);
        let g = random_morphism(&engine, &q, &r, &b);
        let h = random_morphism(&engine, &r, &s, &c);
        let fg_h = engine.compose(&engine.compose(&f, &g).unwrap(), &h).unwrap();
        let f_gh = engine.compose(&f, &engine.compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(normalized(&fg_h), normalized(&f_gh));

        let g2 = random_morphism(&engine, &q, &r, &c);
        let sum = engine.compose(&f, &g.add(&g2)).unwrap();
        let parts = engine.compose(&f, &g).unwrap().add(&engine.compose(&f, &g2).unwrap());
        prop_assert_eq!(normalized(&sum), normalized(&parts));
    }
}
