//! Maps between graphs, and morphisms of the category of graphs.

use super::{Corolla, Graph, GraphError, HalfEdge, Mate};
use alloc::vec;
use alloc::vec::Vec;

/// A map of graphs: vertices to vertices, and surviving half-edges bijectively
/// onto the half-edges of the target. Half-edges sent to `None` belong to
/// edges collapsed into a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphMap {
    pub vertex: Vec<usize>,
    pub half_edge: Vec<Option<HalfEdge>>,
}

impl GraphMap {
    pub fn identity(g: &Graph) -> Self {
        GraphMap {
            vertex: (0..g.vertex_count()).collect(),
            half_edge: (0..g.half_edge_count()).map(Some).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GraphMap) -> GraphMap {
        GraphMap {
            vertex: self.vertex.iter().map(|&v| next.vertex[v]).collect(),
            half_edge: self
                .half_edge
                .iter()
                .map(|h| h.and_then(|h| next.half_edge[h]))
                .collect(),
        }
    }

    /// Checks the structural conditions for `src → dst`: surjective on
    /// vertices, bijective from surviving half-edges onto all of `dst`,
    /// compatible with attachment, pairing and leg labels, and collapsing
    /// only whole internal edges into single vertices.
    pub fn is_map_between(&self, src: &Graph, dst: &Graph) -> bool {
        if self.vertex.len() != src.vertex_count() || self.half_edge.len() != src.half_edge_count()
        {
            return false;
        }
        if self.vertex.iter().any(|&v| v >= dst.vertex_count()) {
            return false;
        }
        let mut hit = vec![false; dst.vertex_count()];
        for &v in &self.vertex {
            hit[v] = true;
        }
        if hit.iter().any(|h| !h) {
            return false;
        }
        let mut covered = vec![false; dst.half_edge_count()];
        for (h, image) in self.half_edge.iter().enumerate() {
            let v = self.vertex[src.vertex_of(h)];
            match (*image, src.mate(h)) {
                (Some(k), mate) => {
                    if k >= covered.len() || covered[k] || dst.vertex_of(k) != v {
                        return false;
                    }
                    covered[k] = true;
                    let ok = match mate {
                        Mate::Leg(l) => dst.mate(k) == Mate::Leg(l),
                        Mate::Edge(h2) => self.half_edge[h2].map(Mate::Edge) == Some(dst.mate(k)),
                    };
                    if !ok {
                        return false;
                    }
                }
                (None, Mate::Edge(h2)) => {
                    if self.half_edge[h2].is_some() || self.vertex[src.vertex_of(h2)] != v {
                        return false;
                    }
                }
                (None, Mate::Leg(_)) => return false,
            }
        }
        covered.iter().all(|&c| c)
    }
}

/// A morphism of the graph category from the disjoint union of `source`
/// corollas to the disjoint union of `target` corollas.
///
/// The identification of `ν(witness)` with the source is positional: vertex
/// `v` of the witness is `source[v]`, and its slot `s` is leg `s` of that
/// corolla. The identification of `π₀(witness)` with the target is carried by
/// leg labels: a witness leg labeled `p` is the `p`-th leg of the target
/// forest, counting corolla by corolla. `component_target[c]` names the
/// target corolla of the `c`-th component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphMorphism {
    source: Vec<Corolla>,
    target: Vec<Corolla>,
    witness: Graph,
    component_target: Vec<usize>,
}

fn port_offsets(forest: &[Corolla]) -> Vec<usize> {
    let mut acc = 0;
    forest
        .iter()
        .map(|c| {
            let o = acc;
            acc += c.arity();
            o
        })
        .collect()
}

impl GraphMorphism {
    pub fn new(
        source: Vec<Corolla>,
        target: Vec<Corolla>,
        witness: Graph,
        component_target: Vec<usize>,
    ) -> Result<Self, GraphError> {
        if witness.vertex_count() != source.len()
            || source
                .iter()
                .enumerate()
                .any(|(v, c)| c.arity() != witness.valence(v))
        {
            return Err(GraphError::BoundaryMismatch);
        }
        let (count, comp) = witness.components();
        if count != target.len() || component_target.len() != count {
            return Err(GraphError::LegsMismatch);
        }
        let mut seen = vec![false; target.len()];
        for &t in &component_target {
            if t >= target.len() || seen[t] {
                return Err(GraphError::LegsMismatch);
            }
            seen[t] = true;
        }
        let offsets = port_offsets(&target);
        let total: usize = target.iter().map(Corolla::arity).sum();
        let mut port_seen = vec![false; total];
        for (label, h) in witness.legs() {
            let p = label as usize;
            if p >= total || port_seen[p] {
                return Err(GraphError::LegsMismatch);
            }
            port_seen[p] = true;
            let t = component_target[comp[witness.vertex_of(h)]];
            if p < offsets[t] || p >= offsets[t] + target[t].arity() {
                return Err(GraphError::LegsMismatch);
            }
        }
        if port_seen.iter().any(|s| !s) {
            return Err(GraphError::LegsMismatch);
        }
        Ok(GraphMorphism {
            source,
            target,
            witness,
            component_target,
        })
    }

    pub fn identity(forest: &[Corolla]) -> Self {
        let offsets = port_offsets(forest);
        let arity = forest.iter().map(Corolla::arity).collect();
        let mate = forest
            .iter()
            .zip(&offsets)
            .flat_map(|(c, &o)| (0..c.arity()).map(move |s| Mate::Leg((o + s) as u32)))
            .collect();
        GraphMorphism {
            source: forest.to_vec(),
            target: forest.to_vec(),
            witness: Graph::from_raw(arity, mate),
            component_target: (0..forest.len()).collect(),
        }
    }

    /// Glues the given pairs of source legs (numbered as ports of the source
    /// forest). Each resulting component becomes a target corolla, in order of
    /// its smallest vertex, with legs `0, 1, …` in increasing port order.
    pub fn from_gluing(source: Vec<Corolla>, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let arity: Vec<usize> = source.iter().map(Corolla::arity).collect();
        let total: usize = arity.iter().sum();
        let mut mate: Vec<Option<Mate>> = vec![None; total];
        for &(a, b) in pairs {
            if a >= total || b >= total || a == b || mate[a].is_some() || mate[b].is_some() {
                return Err(GraphError::BoundaryMismatch);
            }
            mate[a] = Some(Mate::Edge(b));
            mate[b] = Some(Mate::Edge(a));
        }
        let paired: Vec<Mate> = mate.iter().map(|m| m.unwrap_or(Mate::Leg(0))).collect();
        let provisional = Graph::from_raw_unchecked(arity.clone(), paired);
        let (count, comp) = provisional.components();
        let mut target: Vec<Corolla> = (0..count)
            .map(|c| Corolla {
                id: c as u32,
                legs: Vec::new(),
            })
            .collect();
        let mut legs_of: Vec<Vec<usize>> = vec![Vec::new(); count];
        for h in 0..total {
            if mate[h].is_none() {
                legs_of[comp[provisional.vertex_of(h)]].push(h);
            }
        }
        let mut port = 0u32;
        for (c, hs) in legs_of.iter().enumerate() {
            target[c].legs = (0..hs.len() as u32).collect();
            for &h in hs {
                mate[h] = Some(Mate::Leg(port));
                port += 1;
            }
        }
        let witness = Graph::new(arity, mate.into_iter().map(Option::unwrap).collect())?;
        GraphMorphism::new(source, target, witness, (0..count).collect())
    }

    /// The automorphism of `corolla` sending leg position `s` to position `perm[s]`.
    pub fn permutation(corolla: &Corolla, perm: &[usize]) -> Result<Self, GraphError> {
        let n = corolla.arity();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || core::mem::replace(&mut seen[p], true))
        {
            return Err(GraphError::LegsMismatch);
        }
        let witness = Graph::new(vec![n], perm.iter().map(|&p| Mate::Leg(p as u32)).collect())?;
        GraphMorphism::new(
            vec![corolla.clone()],
            vec![corolla.clone()],
            witness,
            vec![0],
        )
    }

    pub fn source(&self) -> &[Corolla] {
        &self.source
    }

    pub fn target(&self) -> &[Corolla] {
        &self.target
    }

    pub fn witness(&self) -> &Graph {
        &self.witness
    }

    pub fn component_target(&self) -> &[usize] {
        &self.component_target
    }

    /// `self` followed by `next`, by substituting the witness of `self` into
    /// the vertices of the witness of `next`.
    pub fn then(&self, next: &GraphMorphism) -> Result<GraphMorphism, GraphError> {
        compose(self, next)
    }
}

fn offsets_of(arity: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    arity
        .iter()
        .map(|a| {
            let o = acc;
            acc += a;
            o
        })
        .collect()
}

impl Graph {
    /// Like `from_raw` but without the debug consistency check; used for
    /// provisional graphs whose leg labels are placeholders.
    pub(crate) fn from_raw_unchecked(arity: Vec<usize>, mate: Vec<Mate>) -> Graph {
        let offset = offsets_of(&arity);
        Graph {
            arity,
            offset,
            mate,
        }
    }
}

/// The composite `f` then `g`. The composite's witness has the vertices and
/// half-edges of `f`'s witness; legs of `f` that meet an internal edge of `g`
/// are paired, and the remaining ones take `g`'s labels.
pub fn compose(f: &GraphMorphism, g: &GraphMorphism) -> Result<GraphMorphism, GraphError> {
    if f.target != g.source {
        return Err(GraphError::BoundaryMismatch);
    }
    let mid_offsets = port_offsets(&f.target);
    let total_mid: usize = f.target.iter().map(Corolla::arity).sum();
    // port of the middle forest -> half-edge of f's witness
    let mut port_to_half = vec![usize::MAX; total_mid];
    for (label, h) in f.witness.legs() {
        port_to_half[label as usize] = h;
    }
    // half-edge of g's witness -> port of the middle forest
    let half_to_port = |k: HalfEdge| -> usize {
        let (m, s) = g.witness.slot_of(k);
        mid_offsets[m] + s
    };
    let mut mate = f.witness.mates().to_vec();
    for (label, h) in f.witness.legs() {
        let p = label as usize;
        let m = (0..f.target.len())
            .find(|&u| p >= mid_offsets[u] && p < mid_offsets[u] + f.target[u].arity())
            .expect("port inside the middle forest");
        let k = g.witness.half_edge(m, p - mid_offsets[m]);
        mate[h] = match g.witness.mate(k) {
            Mate::Edge(k2) => Mate::Edge(port_to_half[half_to_port(k2)]),
            Mate::Leg(q) => Mate::Leg(q),
        };
    }
    let witness = Graph::new(f.witness.arities().to_vec(), mate)?;
    let (count, comp) = witness.components();
    let (_, f_comp) = f.witness.components();
    let (_, g_comp) = g.witness.components();
    let mut component_target = vec![0; count];
    let mut done = vec![false; count];
    for v in 0..witness.vertex_count() {
        let c = comp[v];
        if done[c] {
            continue;
        }
        done[c] = true;
        let m = f.component_target[f_comp[v]];
        component_target[c] = g.component_target[g_comp[m]];
    }
    GraphMorphism::new(
        f.source.clone(),
        g.target.clone(),
        witness,
        component_target,
    )
}
