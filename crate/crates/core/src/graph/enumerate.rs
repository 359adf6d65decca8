//! Enumeration of connected reduced graphs over a corolla, and of the
//! morphisms between them (forest collapses followed by isomorphisms).

use super::{
    canonical_code, canonical_form, contract_edge_mapped, is_reduced, isomorphisms, CanonicalCode,
    Corolla, Graph, GraphError, GraphMap, GraphMorphism,
};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

/// A connected graph whose legs are identified with the legs of `over`,
/// i.e. an object of the slice over a corolla.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeObject {
    over: Corolla,
    morphism: GraphMorphism,
    genus: usize,
    one_leg_corolla: bool,
}

impl EnvelopeObject {
    /// `graph` must be connected with legs labeled `0..n` where `n` is the
    /// arity of `over`; label `i` is identified with `over.legs()[i]`.
    pub fn new(over: Corolla, graph: Graph) -> Result<Self, GraphError> {
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let source = super::nu_corollas(&graph)
            .into_iter()
            .map(|c| Corolla::new(c.id(), (0..c.arity() as u32).collect()).expect("distinct slots"))
            .collect();
        let genus = graph.betti();
        let one_leg_corolla =
            over.arity() == 1 && graph.vertex_count() == 1 && graph.valence(0) == 1;
        let morphism = GraphMorphism::new(source, vec![over.clone()], graph, vec![0])?;
        Ok(EnvelopeObject {
            over,
            morphism,
            genus,
            one_leg_corolla,
        })
    }

    pub fn over(&self) -> &Corolla {
        &self.over
    }

    pub fn morphism(&self) -> &GraphMorphism {
        &self.morphism
    }

    pub fn graph(&self) -> &Graph {
        self.morphism.witness()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_one_leg_corolla(&self) -> bool {
        self.one_leg_corolla
    }
}

struct Search<'a> {
    vertices: usize,
    edges: usize,
    legs_at: &'a [usize],
    /// first vertex without legs; vertices from here on are interchangeable
    legless_from: usize,
    pairs: Vec<(usize, usize)>,
    mult: Vec<usize>,
    degree: Vec<usize>,
    found: &'a mut BTreeMap<CanonicalCode, Graph>,
    leg_vertex: &'a [usize],
}

impl Search<'_> {
    fn need(&self, v: usize) -> usize {
        2usize.saturating_sub(self.legs_at[v] + self.degree[v])
    }

    /// Row `v` is finished once every pair `(u, w)` with `u <= v` is decided.
    fn row_ok(&self, v: usize) -> bool {
        if self.degree[v] + self.legs_at[v] < 2 {
            return false;
        }
        !(v > self.legless_from && self.degree[v] > self.degree[v - 1])
    }

    fn run(&mut self, idx: usize, remaining: usize) {
        if idx == self.pairs.len() {
            if remaining == 0 {
                self.emit();
            }
            return;
        }
        let (u, w) = self.pairs[idx];
        let closes_row = idx + 1 == self.pairs.len() || self.pairs[idx + 1].0 != u;
        // later vertices must still be able to reach valence two
        let deficit: usize = ((u + 1)..self.vertices).map(|v| self.need(v)).sum();
        if deficit > 2 * remaining {
            return;
        }
        for m in 0..=remaining {
            self.mult[idx] = m;
            let add = if u == w { 2 * m } else { m };
            self.degree[u] += add;
            if u != w {
                self.degree[w] += m;
            }
            if !closes_row || self.row_ok(u) {
                self.run(idx + 1, remaining - m);
            }
            self.degree[u] -= add;
            if u != w {
                self.degree[w] -= m;
            }
        }
        self.mult[idx] = 0;
    }

    fn emit(&mut self) {
        let mut arity: Vec<usize> = (0..self.vertices)
            .map(|v| self.legs_at[v] + self.degree[v])
            .collect();
        let mut next = vec![0usize; self.vertices];
        let mut legs = Vec::new();
        for (leg, &v) in self.leg_vertex.iter().enumerate() {
            legs.push((leg as u32, (v, next[v])));
            next[v] += 1;
        }
        let mut edges = Vec::new();
        for (i, &(u, w)) in self.pairs.iter().enumerate() {
            for _ in 0..self.mult[i] {
                let a = (u, next[u]);
                next[u] += 1;
                let b = (w, next[w]);
                next[w] += 1;
                edges.push((a, b));
            }
        }
        debug_assert_eq!(next, arity);
        let g = Graph::from_slots(core::mem::take(&mut arity), &edges, &legs)
            .expect("enumerated layout is consistent");
        if !g.is_connected() || !is_reduced(&g) {
            return;
        }
        let (c, _) = canonical_form(&g);
        self.found.entry(canonical_code(&c)).or_insert(c);
    }
}

/// Leg-to-vertex assignments in restricted growth form: leg 0 sits on
/// vertex 0, and each later leg sits on an earlier-used vertex or the next
/// fresh one.
fn leg_assignments(legs: usize, vertices: usize) -> Vec<Vec<usize>> {
    fn go(
        legs: usize,
        vertices: usize,
        cur: &mut Vec<usize>,
        used: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == legs {
            out.push(cur.clone());
            return;
        }
        for v in 0..=used.min(vertices - 1) {
            cur.push(v);
            go(legs, vertices, cur, used.max(v + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(legs, vertices, &mut Vec::new(), 0, &mut out);
    out
}

/// All connected reduced graphs with legs identified with `over`, first Betti
/// number `genus` and at most `max_vertices` vertices, one per isomorphism
/// class, sorted by canonical code.
///
/// For `over = •` and genus zero this is the bare vertex. For the one-leg
/// corolla and genus zero it is the corolla itself, flagged as the exception
/// to the no-valence-one rule.
pub fn enumerate_reduced(over: &Corolla, genus: usize, max_vertices: usize) -> Vec<EnvelopeObject> {
    let legs = over.arity();
    let mut found = BTreeMap::new();
    for vertices in 1..=max_vertices {
        let edges = vertices - 1 + genus;
        for leg_vertex in leg_assignments(legs, vertices) {
            let mut legs_at = vec![0; vertices];
            for &v in &leg_vertex {
                legs_at[v] += 1;
            }
            let legless_from = legs_at.iter().position(|&n| n == 0).unwrap_or(vertices);
            let pairs: Vec<_> = (0..vertices)
                .flat_map(|u| (u..vertices).map(move |w| (u, w)))
                .collect();
            let npairs = pairs.len();
            let mut search = Search {
                vertices,
                edges,
                legs_at: &legs_at,
                legless_from,
                pairs,
                mult: vec![0; npairs],
                degree: vec![0; vertices],
                found: &mut found,
                leg_vertex: &leg_vertex,
            };
            if vertices == 1 {
                // a single vertex: `genus` loops and all legs
                search.mult[0] = edges;
                search.degree[0] = 2 * edges;
                search.emit();
            } else {
                let e = search.edges;
                search.run(0, e);
            }
        }
    }
    found
        .into_values()
        .map(|g| EnvelopeObject::new(over.clone(), g).expect("enumerated graphs are connected"))
        .collect()
}

/// Contracts the given internal edges (named by one of their half-edges in
/// `g`), returning the result and the collapse map. Fails if the edges do not
/// form a forest.
pub fn collapse_edges(g: &Graph, edges: &[usize]) -> Result<(Graph, GraphMap), GraphError> {
    let mut current = g.clone();
    let mut map = GraphMap::identity(g);
    for &h in edges {
        let here = map.half_edge[h].ok_or(GraphError::NotInternal(h))?;
        let (next, m) = contract_edge_mapped(&current, here)?;
        map = map.then(&m);
        current = next;
    }
    Ok((current, map))
}

/// Every morphism `a → b` between reduced graphs over the same corolla: the
/// collapse of a forest of internal edges followed by an isomorphism.
pub fn reduced_morphisms(a: &Graph, b: &Graph) -> Vec<GraphMap> {
    let edges: Vec<usize> = a.internal_edges().into_iter().map(|(h, _)| h).collect();
    let Some(drop) = a.vertex_count().checked_sub(b.vertex_count()) else {
        return Vec::new();
    };
    if a.edge_count() < drop || a.betti() != b.betti() {
        return Vec::new();
    }
    let mut out = BTreeSet::new();
    for subset in subsets(edges.len(), drop) {
        let chosen: Vec<usize> = subset.iter().map(|&i| edges[i]).collect();
        let Ok((c, collapse)) = collapse_edges(a, &chosen) else {
            continue;
        };
        for iso in isomorphisms(&c, b) {
            out.insert(collapse.then(&iso));
        }
    }
    out.into_iter().collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
