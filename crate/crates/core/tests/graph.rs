use ansular_core::graph::{
    canonical_code, canonical_form, collapse_reduced, contract_edge, enumerate_reduced, is_reduced,
    isomorphisms, nu, pi0, Corolla, Graph, GraphMorphism, Mate,
};
use proptest::prelude::*;

/// Raw material for a connected graph: a spanning tree given by parent
/// choices, extra edges (possibly loops), legs, and keys that shuffle slots.
#[derive(Clone, Debug)]
struct Recipe {
    parents: Vec<u32>,
    extra: Vec<(u32, u32)>,
    legs: Vec<u32>,
    keys: Vec<u32>,
    order: Vec<u32>,
}

fn recipe(max_vertices: usize, max_extra: usize, max_legs: usize) -> impl Strategy<Value = Recipe> {
    (
        prop::collection::vec(any::<u32>(), 0..max_vertices),
        prop::collection::vec((any::<u32>(), any::<u32>()), 0..=max_extra),
        prop::collection::vec(any::<u32>(), 0..=max_legs),
        prop::collection::vec(any::<u32>(), 64),
        prop::collection::vec(any::<u32>(), 8),
    )
        .prop_map(|(parents, extra, legs, keys, order)| Recipe {
            parents,
            extra,
            legs,
            keys,
            order,
        })
}

/// Builds the graph, numbering vertices through `rank` (a permutation of the
/// vertices) and ordering slots at each vertex by `keys`.
fn build(r: &Recipe, shuffle: bool) -> Graph {
    let n = r.parents.len() + 1;
    let mut ends: Vec<(usize, Option<u32>, usize)> = Vec::new(); // (vertex, leg label, edge id)
    let mut edge = 0;
    let mut pairs = Vec::new();
    for (i, &p) in r.parents.iter().enumerate() {
        pairs.push((i + 1, p as usize % (i + 1)));
    }
    for &(a, b) in &r.extra {
        pairs.push((a as usize % n, b as usize % n));
    }
    for &(a, b) in &pairs {
        ends.push((a, None, edge));
        ends.push((b, None, edge));
        edge += 1;
    }
    for (l, &v) in r.legs.iter().enumerate() {
        ends.push((v as usize % n, Some(l as u32), usize::MAX));
    }
    let mut rank: Vec<usize> = (0..n).collect();
    if shuffle {
        rank.sort_by_key(|&v| (r.order[v % r.order.len()], v));
    }
    let new_of = {
        let mut new_of = vec![0; n];
        for (new, &old) in rank.iter().enumerate() {
            new_of[old] = new;
        }
        new_of
    };
    let mut idx: Vec<usize> = (0..ends.len()).collect();
    if shuffle {
        idx.sort_by_key(|&i| (r.keys[i % r.keys.len()], i));
    }
    let mut arity = vec![0; n];
    let mut slot_of = vec![(0, 0); ends.len()];
    for &i in &idx {
        let v = new_of[ends[i].0];
        slot_of[i] = (v, arity[v]);
        arity[v] += 1;
    }
    let mut edges = Vec::new();
    for e in 0..edge {
        edges.push((slot_of[2 * e], slot_of[2 * e + 1]));
    }
    let legs: Vec<_> = ends
        .iter()
        .enumerate()
        .filter_map(|(i, end)| end.1.map(|l| (l, slot_of[i])))
        .collect();
    Graph::from_slots(arity, &edges, &legs).expect("recipe builds a graph")
}

fn leg_labels(g: &Graph) -> Vec<u32> {
    g.legs().into_iter().map(|(l, _)| l).collect()
}

proptest! {
    #[test]
    fn nu_is_a_forest_of_corollas(r in recipe(6, 3, 3)) {
        let g = build(&r, true);
        let cut = nu(&g);
        prop_assert_eq!(cut.betti(), 0);
        prop_assert_eq!(cut.vertex_count(), g.vertex_count());
        prop_assert_eq!(cut.component_count(), g.vertex_count());
        prop_assert_eq!(cut.leg_count(), g.half_edge_count());
        prop_assert_eq!(pi0(&cut), cut.clone());
    }

    #[test]
    fn pi0_keeps_legs_per_component(r in recipe(6, 3, 3), s in recipe(4, 2, 2)) {
        let a = build(&r, true);
        let mut b = build(&s, true);
        // shift the second graph's labels so the union has distinct labels
        let shift = 100;
        let mates = b.mates().iter().map(|m| match *m {
            Mate::Leg(l) => Mate::Leg(l + shift),
            e => e,
        }).collect();
        b = Graph::new(b.arities().to_vec(), mates).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        let p = pi0(&u);
        prop_assert_eq!(p.vertex_count(), 2);
        prop_assert_eq!(p.edge_count(), 0);
        let (_, comp) = u.components();
        for v in 0..p.vertex_count() {
            let mut here: Vec<u32> = p.half_edges_at(v).filter_map(|h| match p.mate(h) {
                Mate::Leg(l) => Some(l),
                Mate::Edge(_) => None,
            }).collect();
            here.sort();
            let mut expected: Vec<u32> = u.legs().into_iter()
                .filter(|&(_, h)| comp[u.vertex_of(h)] == v)
                .map(|(l, _)| l)
                .collect();
            expected.sort();
            prop_assert_eq!(here, expected);
        }
    }

    #[test]
    fn contraction_keeps_betti_and_legs(r in recipe(6, 3, 3)) {
        let g = build(&r, true);
        for (h, _) in g.internal_edges() {
            match contract_edge(&g, h) {
                Ok(c) => {
                    prop_assert!(!g.is_self_loop(h));
                    prop_assert_eq!(c.betti(), g.betti());
                    prop_assert_eq!(c.vertex_count(), g.vertex_count() - 1);
                    prop_assert_eq!(leg_labels(&c), leg_labels(&g));
                }
                Err(_) => prop_assert!(g.is_self_loop(h)),
            }
        }
    }

    #[test]
    fn spanning_tree_contracts_to_a_rose(r in recipe(6, 3, 3)) {
        let mut g = build(&r, true);
        let b = g.betti();
        while let Some((h, _)) = g.internal_edges().into_iter().find(|&(h, _)| !g.is_self_loop(h)) {
            g = contract_edge(&g, h).unwrap();
        }
        prop_assert_eq!(g.vertex_count(), 1);
        prop_assert_eq!(g.edge_count(), b);
        prop_assert!(g.internal_edges().iter().all(|&(h, _)| g.is_self_loop(h)));
    }

    #[test]
    fn collapse_is_idempotent(r in recipe(6, 2, 2)) {
        let g = build(&r, true);
        let c = collapse_reduced(&g);
        prop_assert!(is_reduced(&c.graph));
        prop_assert_eq!(c.graph.betti(), g.betti());
        prop_assert_eq!(leg_labels(&c.graph), leg_labels(&g));
        prop_assert!(c.map.is_map_between(&g, &c.graph));
        let again = collapse_reduced(&c.graph);
        prop_assert!(again.steps.is_empty());
        prop_assert_eq!(again.graph, c.graph.clone());
        prop_assert_eq!(
            c.one_leg_corolla,
            c.graph.vertex_count() == 1 && c.graph.valence(0) == 1
        );
    }

    #[test]
    fn canonical_code_ignores_numbering(r in recipe(6, 3, 3)) {
        let plain = build(&r, false);
        let shuffled = build(&r, true);
        prop_assert_eq!(canonical_code(&plain), canonical_code(&shuffled));
        prop_assert_eq!(canonical_form(&plain).0, canonical_form(&shuffled).0);
        let isos = isomorphisms(&plain, &shuffled);
        prop_assert!(!isos.is_empty());
        for m in &isos {
            prop_assert!(m.is_map_between(&plain, &shuffled));
        }
    }

    #[test]
    fn canonical_code_decides_isomorphism(r in recipe(4, 2, 2), s in recipe(4, 2, 2)) {
        let a = build(&r, true);
        let b = build(&s, true);
        prop_assert_eq!(
            canonical_code(&a) == canonical_code(&b),
            !isomorphisms(&a, &b).is_empty()
        );
    }

    #[test]
    fn reduced_graphs_are_enumerated(r in recipe(7, 2, 2)) {
        let g = build(&r, true);
        let c = collapse_reduced(&g).graph;
        prop_assume!(c.vertex_count() <= 4);
        let over = Corolla::with_legs(c.leg_count());
        let listed = enumerate_reduced(&over, c.betti(), 4);
        let code = canonical_code(&c);
        prop_assert!(listed.iter().any(|o| canonical_code(o.graph()) == code));
    }
}

#[test]
fn enumeration_has_no_isomorphic_pairs() {
    for legs in 0..=2 {
        for genus in 0..=2 {
            let objs = enumerate_reduced(&Corolla::with_legs(legs), genus, 5);
            for o in &objs {
                let g = o.graph();
                assert!(g.is_connected() && is_reduced(g));
                assert_eq!(o.genus(), genus);
                assert_eq!(g.leg_count(), legs);
            }
            for (i, a) in objs.iter().enumerate() {
                for b in &objs[i + 1..] {
                    if a.graph().edge_count() <= 6 && b.graph().edge_count() <= 6 {
                        assert!(isomorphisms(a.graph(), b.graph()).is_empty());
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_reduced(&Corolla::with_legs(2), 1, 4);
    let b = enumerate_reduced(&Corolla::with_legs(2), 1, 4);
    assert_eq!(a, b);
}

#[test]
fn trivalent_genus_two_graphs() {
    // the theta graph and the dumbbell (two loops joined by an edge)
    let objs = enumerate_reduced(&Corolla::with_legs(0), 2, 2);
    let trivalent: Vec<_> = objs
        .iter()
        .filter(|o| o.graph().vertex_count() == 2)
        .filter(|o| (0..2).all(|v| o.graph().valence(v) == 3))
        .collect();
    assert_eq!(trivalent.len(), 2);
}

fn corollas(arities: &[usize]) -> Vec<Corolla> {
    arities
        .iter()
        .enumerate()
        .map(|(i, &a)| Corolla::new(i as u32, (0..a as u32).collect()).unwrap())
        .collect()
}

/// A forest automorphism permuting the legs of each corolla.
fn relabeling(forest: &[Corolla], keys: &[u32]) -> GraphMorphism {
    let mut arity = Vec::new();
    let mut mate = Vec::new();
    let mut offset = 0u32;
    for c in forest {
        let n = c.arity();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&s| (keys[(offset as usize + s) % keys.len()], s));
        arity.push(n);
        mate.extend(perm.iter().map(|&p| Mate::Leg(offset + p as u32)));
        offset += n as u32;
    }
    let witness = Graph::new(arity, mate).unwrap();
    GraphMorphism::new(
        forest.to_vec(),
        forest.to_vec(),
        witness,
        (0..forest.len()).collect(),
    )
    .unwrap()
}

/// A gluing of up to `k` pairs of ports chosen by `keys`, or a relabeling.
fn step(forest: &[Corolla], keys: &[u32], k: usize) -> GraphMorphism {
    let total: usize = forest.iter().map(Corolla::arity).sum();
    if k == 0 {
        return relabeling(forest, keys);
    }
    let mut ports: Vec<usize> = (0..total).collect();
    ports.sort_by_key(|&p| (keys[p % keys.len()], p));
    let pairs: Vec<_> = ports
        .chunks_exact(2)
        .take(k)
        .map(|c| (c[0], c[1]))
        .collect();
    GraphMorphism::from_gluing(forest.to_vec(), &pairs).unwrap()
}

proptest! {
    #[test]
    fn composition_is_associative_and_unital(
        arities in prop::collection::vec(0usize..4, 1..5),
        keys in prop::collection::vec(any::<u32>(), 3..16),
        ks in (0usize..3, 0usize..3, 0usize..3),
    ) {
        let f = step(&corollas(&arities), &keys, ks.0);
        let g = step(f.target(), &keys[1..], ks.1);
        let h = step(g.target(), &keys[2..], ks.2);
        let left = f.then(&g).unwrap().then(&h).unwrap();
        let right = f.then(&g.then(&h).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let id_s = GraphMorphism::identity(f.source());
        let id_t = GraphMorphism::identity(f.target());
        prop_assert_eq!(id_s.then(&f).unwrap(), f.clone());
        prop_assert_eq!(f.then(&id_t).unwrap(), f);
    }
}
