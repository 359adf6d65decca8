//! Canonical forms and isomorphisms of graphs with labeled legs.
//!
//! The canonical code is the lexicographically smallest vertex-by-vertex
//! encoding over all vertex orderings. Each vertex contributes
//! `[valence, #legs, leg labels…, #loops, multiplicities to earlier vertices…]`.
//! Only orderings that keep the running prefix minimal are explored, which
//! keeps the search small for the sizes we enumerate.

use super::{Graph, GraphMap, HalfEdge, LegLabel, Mate};
use alloc::vec;
use alloc::vec::Vec;

pub type CanonicalCode = Vec<u32>;

struct Shape {
    legs: Vec<Vec<LegLabel>>,
    loops: Vec<u32>,
    mult: Vec<Vec<u32>>,
}

impl Shape {
    fn of(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut legs = vec![Vec::new(); n];
        let mut loops = vec![0u32; n];
        let mut mult = vec![vec![0u32; n]; n];
        for h in 0..g.half_edge_count() {
            let v = g.vertex_of(h);
            match g.mate(h) {
                Mate::Leg(l) => legs[v].push(l),
                Mate::Edge(k) if h < k => {
                    let w = g.vertex_of(k);
                    if v == w {
                        loops[v] += 1;
                    } else {
                        mult[v][w] += 1;
                        mult[w][v] += 1;
                    }
                }
                Mate::Edge(_) => {}
            }
        }
        for l in &mut legs {
            l.sort_unstable();
        }
        Shape { legs, loops, mult }
    }

    fn element(&self, g: &Graph, v: usize, placed: &[usize]) -> Vec<u32> {
        let mut el = Vec::with_capacity(3 + self.legs[v].len() + placed.len());
        el.push(g.valence(v) as u32);
        el.push(self.legs[v].len() as u32);
        el.extend_from_slice(&self.legs[v]);
        el.push(self.loops[v]);
        el.extend(placed.iter().map(|&w| self.mult[v][w]));
        el
    }
}

fn search(
    g: &Graph,
    shape: &Shape,
    order: &mut Vec<usize>,
    used: &mut [bool],
    code: &mut Vec<u32>,
    best: &mut Option<(Vec<u32>, Vec<usize>)>,
) {
    let n = g.vertex_count();
    if order.len() == n {
        if best.as_ref().is_none_or(|(b, _)| *code < *b) {
            *best = Some((code.clone(), order.clone()));
        }
        return;
    }
    let mut min: Option<Vec<u32>> = None;
    let mut candidates = Vec::new();
    for v in 0..n {
        if used[v] {
            continue;
        }
        let el = shape.element(g, v, order);
        match &min {
            Some(m) if el > *m => {}
            Some(m) if el == *m => candidates.push(v),
            _ => {
                min = Some(el);
                candidates.clear();
                candidates.push(v);
            }
        }
    }
    let min = min.expect("an unplaced vertex remains");
    if let Some((b, _)) = best.as_ref() {
        let len = code.len() + min.len();
        let ours = code.iter().chain(min.iter());
        if ours.cmp(b[..len].iter()) == core::cmp::Ordering::Greater {
            return;
        }
    }
    let mark = code.len();
    code.extend_from_slice(&min);
    for v in candidates {
        used[v] = true;
        order.push(v);
        search(g, shape, order, used, code, best);
        order.pop();
        used[v] = false;
    }
    code.truncate(mark);
}

fn canonical_order(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let shape = Shape::of(g);
    let mut best = None;
    let mut code = vec![g.vertex_count() as u32];
    search(
        g,
        &shape,
        &mut Vec::new(),
        &mut vec![false; g.vertex_count()],
        &mut code,
        &mut best,
    );
    best.unwrap_or((code, Vec::new()))
}

/// A complete isomorphism invariant: equal codes iff the graphs are
/// isomorphic by a map preserving leg labels.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_order(g).0
}

/// The canonical representative of the isomorphism class of `g`, plus the
/// vertex order used (`order[i]` is the old index of new vertex `i`).
///
/// Slots at each vertex are: legs by label, then loop half-edges in pairs,
/// then half-edges towards other vertices by increasing new index.
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let (_, order) = canonical_order(g);
    let n = order.len();
    let shape = Shape::of(g);
    // Slot layout, in terms of the new vertex numbering.
    let mut arity = Vec::with_capacity(n);
    let mut start_to: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut loop_start = Vec::with_capacity(n);
    for &v in &order {
        let nl = shape.legs[v].len();
        let mut s = nl + 2 * shape.loops[v] as usize;
        loop_start.push(nl);
        let mut starts = vec![0; n];
        for (j, start) in starts.iter_mut().enumerate() {
            *start = s;
            s += shape.mult[v][order[j]] as usize;
        }
        start_to.push(starts);
        arity.push(s);
    }
    let mut edges = Vec::new();
    let mut legs = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        for (k, &l) in shape.legs[v].iter().enumerate() {
            legs.push((l, (i, k)));
        }
        for k in 0..shape.loops[v] as usize {
            let s = loop_start[i] + 2 * k;
            edges.push(((i, s), (i, s + 1)));
        }
        for j in (i + 1)..n {
            for k in 0..shape.mult[v][order[j]] as usize {
                edges.push(((i, start_to[i][j] + k), (j, start_to[j][i] + k)));
            }
        }
    }
    let out = Graph::from_slots(arity, &edges, &legs).expect("canonical layout is consistent");
    (out, order)
}

/// Every isomorphism `a → b` preserving leg labels, as half-edge level maps.
pub fn isomorphisms(a: &Graph, b: &Graph) -> Vec<GraphMap> {
    let n = a.vertex_count();
    if n != b.vertex_count()
        || a.half_edge_count() != b.half_edge_count()
        || a.edge_count() != b.edge_count()
    {
        return Vec::new();
    }
    let (sa, sb) = (Shape::of(a), Shape::of(b));
    let mut out = Vec::new();
    let mut vmap = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    vertex_search(a, b, &sa, &sb, 0, &mut vmap, &mut taken, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn vertex_search(
    a: &Graph,
    b: &Graph,
    sa: &Shape,
    sb: &Shape,
    v: usize,
    vmap: &mut Vec<usize>,
    taken: &mut Vec<bool>,
    out: &mut Vec<GraphMap>,
) {
    let n = a.vertex_count();
    if v == n {
        let mut hmap = vec![None; a.half_edge_count()];
        let mut used = vec![false; b.half_edge_count()];
        half_edge_search(a, b, vmap, 0, &mut hmap, &mut used, out);
        return;
    }
    for w in 0..n {
        if taken[w]
            || a.valence(v) != b.valence(w)
            || sa.legs[v] != sb.legs[w]
            || sa.loops[v] != sb.loops[w]
            || (0..v).any(|u| sa.mult[v][u] != sb.mult[w][vmap[u]])
        {
            continue;
        }
        vmap[v] = w;
        taken[w] = true;
        vertex_search(a, b, sa, sb, v + 1, vmap, taken, out);
        taken[w] = false;
        vmap[v] = usize::MAX;
    }
}

fn half_edge_search(
    a: &Graph,
    b: &Graph,
    vmap: &[usize],
    h: HalfEdge,
    hmap: &mut Vec<Option<HalfEdge>>,
    used: &mut Vec<bool>,
    out: &mut Vec<GraphMap>,
) {
    if h == a.half_edge_count() {
        out.push(GraphMap {
            vertex: vmap.to_vec(),
            half_edge: hmap.clone(),
        });
        return;
    }
    if hmap[h].is_some() {
        half_edge_search(a, b, vmap, h + 1, hmap, used, out);
        return;
    }
    let w = vmap[a.vertex_of(h)];
    for k in b.half_edges_at(w) {
        if used[k] {
            continue;
        }
        match (a.mate(h), b.mate(k)) {
            (Mate::Leg(l), Mate::Leg(m)) if l == m => {
                hmap[h] = Some(k);
                used[k] = true;
                half_edge_search(a, b, vmap, h + 1, hmap, used, out);
                used[k] = false;
                hmap[h] = None;
            }
            (Mate::Edge(h2), Mate::Edge(k2)) => {
                if used[k2] || b.vertex_of(k2) != vmap[a.vertex_of(h2)] {
                    continue;
                }
                hmap[h] = Some(k);
                hmap[h2] = Some(k2);
                used[k] = true;
                used[k2] = true;
                half_edge_search(a, b, vmap, h + 1, hmap, used, out);
                used[k] = false;
                used[k2] = false;
                hmap[h] = None;
                hmap[h2] = None;
            }
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Corolla;

    fn circle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| ((i, 0), ((i + 1) % n, 1))).collect();
        Graph::from_slots(vec![2; n], &edges, &[]).unwrap()
    }

    #[test]
    fn circle_automorphisms_are_dihedral() {
        assert_eq!(isomorphisms(&circle(1), &circle(1)).len(), 2);
        assert_eq!(isomorphisms(&circle(2), &circle(2)).len(), 4);
        for n in 3..7 {
            assert_eq!(isomorphisms(&circle(n), &circle(n)).len(), 2 * n);
        }
    }

    #[test]
    fn corolla_automorphisms_fix_labels() {
        let t = Corolla::with_legs(3).to_graph();
        assert_eq!(isomorphisms(&t, &t).len(), 1);
    }

    #[test]
    fn canonical_form_is_isomorphic_and_stable() {
        let g = Graph::from_slots(
            vec![3, 2, 3],
            &[((0, 0), (1, 1)), ((1, 0), (2, 2)), ((2, 0), (0, 2))],
            &[(5, (0, 1)), (2, (2, 1))],
        )
        .unwrap();
        let (c, _) = canonical_form(&g);
        assert!(!isomorphisms(&g, &c).is_empty());
        assert_eq!(canonical_form(&c).0, c);
        assert_eq!(canonical_code(&c), canonical_code(&g));
    }

    #[test]
    fn leg_labels_distinguish() {
        let a = Graph::from_slots(vec![2, 2], &[((0, 0), (1, 0))], &[(0, (0, 1)), (1, (1, 1))])
            .unwrap();
        let b = Graph::from_slots(vec![2, 2], &[((0, 0), (1, 0))], &[(1, (0, 1)), (0, (1, 1))])
            .unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        let c = Graph::from_slots(vec![3, 1], &[((0, 0), (1, 0))], &[(0, (0, 1)), (1, (0, 2))])
            .unwrap();
        assert_ne!(canonical_code(&a), canonical_code(&c));
    }
}
