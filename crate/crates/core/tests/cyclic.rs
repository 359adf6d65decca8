use ansular_core::cyclic::{
    compose, format_word, parse_word, psi_morphism, psi_object, relation_instances, CyclicMorphism,
    DihedralMorphism,
};
use ansular_core::graph::{isomorphisms, reduced_morphisms};
use std::collections::BTreeSet;

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `g ∘ f` straight from the defining formula on representatives.
fn naive_compose(f: &CyclicMorphism, g: &CyclicMorphism) -> Vec<i64> {
    let m = g.dst() as i64 + 1;
    let raw: Vec<i64> = (0..=f.src() as i64).map(|i| g.eval(f.eval(i))).collect();
    let shift = raw[0].div_euclid(m) * m;
    raw.iter().map(|v| v - shift).collect()
}

#[test]
fn relation_suite_up_to_five() {
    let all = relation_instances(5);
    assert!(all.len() > 100);
    for r in &all {
        assert!(r.holds(), "{} : {} vs {}", r.name, r.lhs, r.rhs);
    }
}

#[test]
fn relations_from_words() {
    // the cyclic relations again, this time spelled as words
    for n in 1..=5 {
        for i in 1..=n {
            let lhs = parse_word(n - 1, &format!("t d{i}")).unwrap();
            let rhs = parse_word(n - 1, &format!("d{} t", i - 1)).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert_eq!(
            parse_word(n - 1, "t d0").unwrap(),
            parse_word(n - 1, &format!("d{n}")).unwrap()
        );
        assert_eq!(
            parse_word(n, &format!("t^{}", n + 1)).unwrap(),
            DihedralMorphism::identity(n)
        );
    }
    for n in 0..=4 {
        assert_eq!(
            parse_word(n + 1, "t s0").unwrap(),
            parse_word(n + 1, &format!("s{n} t^2")).unwrap()
        );
    }
}

#[test]
fn hom_set_sizes() {
    for n in 0..=4u64 {
        for m in 0..=4u64 {
            let all = CyclicMorphism::homs(n as usize, m as usize, false);
            assert_eq!(all.len() as u64, (n + 1) * binomial(n + m + 1, n + 1));
            let inj = CyclicMorphism::homs(n as usize, m as usize, true);
            assert_eq!(inj.len() as u64, (m + 1) * binomial(m, n));
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }
}

#[test]
fn composition_matches_representatives() {
    for n in 0..=2 {
        for m in 0..=2 {
            for k in 0..=2 {
                for f in CyclicMorphism::homs(n, m, false) {
                    for g in CyclicMorphism::homs(m, k, false) {
                        let gf = compose(&f, &g).unwrap();
                        assert_eq!(gf.values(), &naive_compose(&f, &g)[..]);
                    }
                }
            }
        }
    }
}

#[test]
fn composition_is_associative_and_unital() {
    for (a, b, c, d) in [(1, 2, 1, 2), (2, 1, 2, 0), (0, 2, 2, 1), (2, 2, 2, 2)] {
        let fs = CyclicMorphism::homs(a, b, false);
        let gs = CyclicMorphism::homs(b, c, false);
        let hs = CyclicMorphism::homs(c, d, true);
        for f in &fs {
            assert_eq!(&CyclicMorphism::identity(a).then(f).unwrap(), f);
            assert_eq!(&f.then(&CyclicMorphism::identity(b)).unwrap(), f);
            for g in &gs {
                let fg = f.then(g).unwrap();
                for h in &hs {
                    assert_eq!(fg.then(h).unwrap(), f.then(&g.then(h).unwrap()).unwrap());
                }
            }
        }
    }
    assert!(compose(&CyclicMorphism::identity(1), &CyclicMorphism::identity(2)).is_err());
}

#[test]
fn reversal_is_an_involutive_functor() {
    for n in 0..=3 {
        assert_eq!(
            CyclicMorphism::identity(n).reversal(),
            CyclicMorphism::identity(n)
        );
        let t = CyclicMorphism::rotation(n);
        assert_eq!(t.reversal(), t.pow(n).unwrap());
        for m in 0..=3 {
            for f in CyclicMorphism::homs(n, m, false) {
                assert_eq!(f.reversal().reversal(), f);
                assert_eq!(f.reversal().is_injective(), f.is_injective());
                for k in 0..=2 {
                    for g in CyclicMorphism::homs(m, k, false) {
                        assert_eq!(
                            f.then(&g).unwrap().reversal(),
                            f.reversal().then(&g.reversal()).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn dihedral_composition_is_associative() {
    let objs = [0, 1, 2];
    for &a in &objs {
        for &b in &objs {
            for &c in &objs {
                let fs = DihedralMorphism::homs(a, b, false);
                let gs = DihedralMorphism::homs(b, c, false);
                let hs = DihedralMorphism::homs(c, 1, false);
                for f in &fs {
                    for g in &gs {
                        let fg = f.then(g).unwrap();
                        for h in hs.iter().step_by(3) {
                            assert_eq!(fg.then(h).unwrap(), f.then(&g.then(h).unwrap()).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn automorphism_groups_are_dihedral() {
    for n in 0..=5 {
        let autos: Vec<_> = DihedralMorphism::homs(n, n, true)
            .into_iter()
            .filter(DihedralMorphism::is_iso)
            .collect();
        assert_eq!(autos.len(), 2 * (n + 1));
        // closed under composition, and the reflection inverts the rotation
        let set: BTreeSet<_> = autos.iter().cloned().collect();
        for a in &autos {
            for b in &autos {
                assert!(set.contains(&a.then(b).unwrap()));
            }
        }
        let t = DihedralMorphism::new(CyclicMorphism::rotation(n), false);
        let r = DihedralMorphism::reflection(n);
        let rtr = r.then(&t).unwrap().then(&r).unwrap();
        assert_eq!(rtr.then(&t).unwrap(), DihedralMorphism::identity(n));
        assert_eq!(
            isomorphisms(&psi_object(n), &psi_object(n)).len(),
            autos.len()
        );
    }
}

#[test]
fn faces_then_automorphism_factorization_is_unique() {
    for n in 0..=3 {
        for m in n..=3 {
            let autos: Vec<_> = DihedralMorphism::homs(n, n, true)
                .into_iter()
                .filter(DihedralMorphism::is_iso)
                .collect();
            // monotone injections: composites of faces
            let faces: Vec<_> = CyclicMorphism::homs(n, m, true)
                .into_iter()
                .filter(|f| f.values()[n] <= m as i64)
                .map(|f| DihedralMorphism::new(f, false))
                .collect();
            assert_eq!(faces.len() as u64, binomial(m as u64 + 1, n as u64 + 1));
            for target in DihedralMorphism::homs(n, m, true) {
                let count = autos
                    .iter()
                    .flat_map(|a| faces.iter().map(move |d| a.then(d).unwrap()))
                    .filter(|x| *x == target)
                    .count();
                assert_eq!(count, 1, "{target:?}");
            }
        }
    }
}

#[test]
fn psi_matches_graph_morphisms() {
    for n in 0..=3 {
        for m in 0..=3 {
            let graphs = reduced_morphisms(&psi_object(n), &psi_object(m));
            // morphisms Ψ[n] → Ψ[m] come from [m] → [n]
            let arrows = DihedralMorphism::homs(m, n, true);
            assert_eq!(graphs.len(), arrows.len(), "[{n}] -> [{m}]");
            let images: BTreeSet<_> = arrows.iter().map(|f| psi_morphism(f).unwrap()).collect();
            assert_eq!(images.len(), arrows.len());
            let expected: BTreeSet<_> = graphs.into_iter().collect();
            assert_eq!(images, expected);
        }
    }
}

#[test]
fn psi_is_a_contravariant_functor() {
    for a in 0..=2 {
        for b in 0..=3 {
            for c in 0..=3 {
                for f in DihedralMorphism::homs(a, b, true) {
                    for g in DihedralMorphism::homs(b, c, true) {
                        let whole = psi_morphism(&f.then(&g).unwrap()).unwrap();
                        let parts = psi_morphism(&g).unwrap().then(&psi_morphism(&f).unwrap());
                        assert_eq!(whole, parts);
                    }
                }
            }
        }
    }
    for n in 0..=3 {
        let id = psi_morphism(&DihedralMorphism::identity(n)).unwrap();
        assert!(id.half_edge.iter().enumerate().all(|(h, k)| *k == Some(h)));
    }
}

#[test]
fn psi_generators_do_what_they_say() {
    // τ_n rotates the vertices by one
    let t = psi_morphism(&DihedralMorphism::new(CyclicMorphism::rotation(3), false)).unwrap();
    assert_eq!(t.vertex, [1, 2, 3, 0]);
    // the reflection sends i to n + 1 - i
    let r = psi_morphism(&DihedralMorphism::reflection(3)).unwrap();
    assert_eq!(r.vertex, [0, 3, 2, 1]);
    // δ_i collapses the edge between i and i + 1
    for i in 0..=3 {
        let d = psi_morphism(&DihedralMorphism::new(
            CyclicMorphism::face(i, 3).unwrap(),
            false,
        ))
        .unwrap();
        assert_eq!(d.vertex[i], d.vertex[(i + 1) % 4]);
        assert_eq!(d.half_edge[2 * i], None);
    }
}

#[test]
fn words_print_and_parse() {
    let f = parse_word(2, "d3 t^2 r").unwrap();
    assert_eq!(format_word(&f.word()), "d3 t^2 r");
    assert_eq!(format_word(&DihedralMorphism::identity(4).word()), "id");
    assert_eq!(parse_word(1, "id").unwrap(), DihedralMorphism::identity(1));
}
