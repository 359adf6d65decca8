//! Half-edge graphs with legs.
//!
//! A [`Graph`] is a set of vertices, each owning an ordered list of slots
//! (half-edges). Every half-edge is either paired with another half-edge
//! (the two form an internal edge) or is a leg carrying an external label.
//! Corollas, disjoint unions of corollas, and the connected graphs indexing
//! the modular envelope are all values of this one type.

mod canonical;
mod enumerate;
mod morphism;

pub use canonical::{canonical_code, canonical_form, isomorphisms, CanonicalCode};
pub use enumerate::{enumerate_reduced, reduced_morphisms, EnvelopeObject};
pub use morphism::{GraphMap, GraphMorphism};

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of a half-edge in a [`Graph`].
pub type HalfEdge = usize;

/// External label of a leg.
pub type LegLabel = u32;

/// A `(vertex, slot)` position.
pub type Slot = (usize, usize);

/// What a half-edge is attached to on its other side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mate {
    /// Paired with this half-edge; together they form an internal edge.
    Edge(HalfEdge),
    /// Unpaired: a leg with this label.
    Leg(LegLabel),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SlotCountMismatch { expected: usize, got: usize },
    MateOutOfRange(HalfEdge),
    SelfPaired(HalfEdge),
    NotInvolution(HalfEdge),
    DuplicateLegLabel(LegLabel),
    NoSuchSlot { vertex: usize, slot: usize },
    SlotUsedTwice { vertex: usize, slot: usize },
    SlotUnused { vertex: usize, slot: usize },
    NotInternal(HalfEdge),
    SelfLoop(HalfEdge),
    Disconnected,
    LegsMismatch,
    DuplicateCorollaLeg(u32),
    BoundaryMismatch,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SlotCountMismatch { expected, got } => {
                write!(f, "expected {expected} half-edges, got {got}")
            }
            GraphError::MateOutOfRange(h) => write!(f, "half-edge {h} is paired out of range"),
            GraphError::SelfPaired(h) => write!(f, "half-edge {h} is paired with itself"),
            GraphError::NotInvolution(h) => {
                write!(f, "pairing is not an involution at half-edge {h}")
            }
            GraphError::DuplicateLegLabel(l) => write!(f, "leg label {l} used twice"),
            GraphError::NoSuchSlot { vertex, slot } => {
                write!(f, "vertex {vertex} has no slot {slot}")
            }
            GraphError::SlotUsedTwice { vertex, slot } => {
                write!(f, "slot {slot} of vertex {vertex} used twice")
            }
            GraphError::SlotUnused { vertex, slot } => {
                write!(
                    f,
                    "slot {slot} of vertex {vertex} is neither an edge end nor a leg"
                )
            }
            GraphError::NotInternal(h) => write!(f, "half-edge {h} is a leg, not an internal edge"),
            GraphError::SelfLoop(h) => write!(f, "edge at half-edge {h} is a self-loop"),
            GraphError::Disconnected => f.write_str("graph is not connected"),
            GraphError::LegsMismatch => f.write_str("legs do not match the target corolla"),
            GraphError::DuplicateCorollaLeg(l) => write!(f, "corolla leg {l} repeated"),
            GraphError::BoundaryMismatch => {
                f.write_str("target of the first morphism is not the source of the second")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A one-vertex graph with an ordered list of distinct leg identifiers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corolla {
    id: u32,
    legs: Vec<u32>,
}

impl Corolla {
    pub fn new(id: u32, legs: Vec<u32>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for &l in &legs {
            if !seen.insert(l) {
                return Err(GraphError::DuplicateCorollaLeg(l));
            }
        }
        Ok(Corolla { id, legs })
    }

    /// Corolla with legs `0, …, n-1`. `T_n` is `with_legs(n + 1)`; `•` is `with_legs(0)`.
    pub fn with_legs(n: usize) -> Self {
        Corolla {
            id: 0,
            legs: (0..n as u32).collect(),
        }
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    pub fn arity(&self) -> usize {
        self.legs.len()
    }

    /// Single vertex whose slot `i` is the leg labeled `legs[i]`.
    pub fn to_graph(&self) -> Graph {
        Graph::from_raw(
            vec![self.legs.len()],
            self.legs.iter().map(|&l| Mate::Leg(l)).collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    arity: Vec<usize>,
    offset: Vec<usize>,
    mate: Vec<Mate>,
}

fn offsets(arity: &[usize]) -> Vec<usize> {
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
    /// The empty graph, the monoidal unit of disjoint union.
    pub fn empty() -> Self {
        Graph::from_raw(vec![], vec![])
    }

    pub(crate) fn from_raw(arity: Vec<usize>, mate: Vec<Mate>) -> Self {
        let offset = offsets(&arity);
        let g = Graph {
            arity,
            offset,
            mate,
        };
        debug_assert!(g.check().is_ok(), "{:?}", g.check());
        g
    }

    /// Builds a graph from per-vertex slot counts and a mate for every half-edge
    /// (half-edges are numbered vertex by vertex, slot by slot).
    pub fn new(arity: Vec<usize>, mate: Vec<Mate>) -> Result<Self, GraphError> {
        let offset = offsets(&arity);
        let g = Graph {
            arity,
            offset,
            mate,
        };
        g.check()?;
        Ok(g)
    }

    /// Builds a graph from `(vertex, slot)` references: each edge pairs two
    /// slots, each leg attaches a label to one slot, and every slot must be
    /// used exactly once.
    pub fn from_slots(
        arity: Vec<usize>,
        edges: &[(Slot, Slot)],
        legs: &[(LegLabel, Slot)],
    ) -> Result<Self, GraphError> {
        let offset = offsets(&arity);
        let total: usize = arity.iter().sum();
        let mut mate: Vec<Option<Mate>> = vec![None; total];
        let index = |(v, s): (usize, usize)| -> Result<usize, GraphError> {
            if v < arity.len() && s < arity[v] {
                Ok(offset[v] + s)
            } else {
                Err(GraphError::NoSuchSlot { vertex: v, slot: s })
            }
        };
        let mut place = |slot: (usize, usize), m: Mate| -> Result<(), GraphError> {
            let h = index(slot)?;
            if mate[h].is_some() {
                return Err(GraphError::SlotUsedTwice {
                    vertex: slot.0,
                    slot: slot.1,
                });
            }
            mate[h] = Some(m);
            Ok(())
        };
        for &(a, b) in edges {
            let (ha, hb) = (index(a)?, index(b)?);
            if ha == hb {
                return Err(GraphError::SelfPaired(ha));
            }
            place(a, Mate::Edge(hb))?;
            place(b, Mate::Edge(ha))?;
        }
        for &(label, slot) in legs {
            place(slot, Mate::Leg(label))?;
        }
        let mut out = Vec::with_capacity(total);
        for (v, &a) in arity.iter().enumerate() {
            for s in 0..a {
                match mate[offset[v] + s] {
                    Some(m) => out.push(m),
                    None => return Err(GraphError::SlotUnused { vertex: v, slot: s }),
                }
            }
        }
        Graph::new(arity, out)
    }

    fn check(&self) -> Result<(), GraphError> {
        let total: usize = self.arity.iter().sum();
        if total != self.mate.len() {
            return Err(GraphError::SlotCountMismatch {
                expected: total,
                got: self.mate.len(),
            });
        }
        let mut labels = BTreeSet::new();
        for (h, m) in self.mate.iter().enumerate() {
            match *m {
                Mate::Edge(k) => {
                    if k >= self.mate.len() {
                        return Err(GraphError::MateOutOfRange(h));
                    }
                    if k == h {
                        return Err(GraphError::SelfPaired(h));
                    }
                    if self.mate[k] != Mate::Edge(h) {
                        return Err(GraphError::NotInvolution(h));
                    }
                }
                Mate::Leg(l) => {
                    if !labels.insert(l) {
                        return Err(GraphError::DuplicateLegLabel(l));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.arity.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.mate.len()
    }

    /// Number of half-edges at `v`, legs included.
    pub fn valence(&self, v: usize) -> usize {
        self.arity[v]
    }

    pub fn arities(&self) -> &[usize] {
        &self.arity
    }

    pub fn half_edge(&self, v: usize, slot: usize) -> HalfEdge {
        debug_assert!(slot < self.arity[v]);
        self.offset[v] + slot
    }

    pub fn half_edges_at(&self, v: usize) -> core::ops::Range<HalfEdge> {
        self.offset[v]..self.offset[v] + self.arity[v]
    }

    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        // offsets are nondecreasing; take the last vertex starting at or before h
        // that actually owns slots.
        let mut v = self.offset.partition_point(|&o| o <= h) - 1;
        while self.arity[v] == 0 {
            v -= 1;
        }
        v
    }

    pub fn slot_of(&self, h: HalfEdge) -> (usize, usize) {
        let v = self.vertex_of(h);
        (v, h - self.offset[v])
    }

    pub fn mate(&self, h: HalfEdge) -> Mate {
        self.mate[h]
    }

    pub fn mates(&self) -> &[Mate] {
        &self.mate
    }

    /// Internal edges as `(h, h')` with `h < h'`, in increasing order of `h`.
    pub fn internal_edges(&self) -> Vec<(HalfEdge, HalfEdge)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(h, m)| match *m {
                Mate::Edge(k) if h < k => Some((h, k)),
                _ => None,
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.mate
            .iter()
            .filter(|m| matches!(m, Mate::Edge(_)))
            .count()
            / 2
    }

    /// Legs as `(label, half-edge)`, sorted by label.
    pub fn legs(&self) -> Vec<(LegLabel, HalfEdge)> {
        let mut out: Vec<_> = self
            .mate
            .iter()
            .enumerate()
            .filter_map(|(h, m)| match *m {
                Mate::Leg(l) => Some((l, h)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn leg_count(&self) -> usize {
        self.mate
            .iter()
            .filter(|m| matches!(m, Mate::Leg(_)))
            .count()
    }

    pub fn is_self_loop(&self, h: HalfEdge) -> bool {
        match self.mate[h] {
            Mate::Edge(k) => self.vertex_of(h) == self.vertex_of(k),
            Mate::Leg(_) => false,
        }
    }

    /// Component index of every vertex; components are numbered by their
    /// smallest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for h in self.half_edges_at(v) {
                    if let Mate::Edge(k) = self.mate[h] {
                        let w = self.vertex_of(k);
                        if comp[w] == usize::MAX {
                            comp[w] = count;
                            stack.push(w);
                        }
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn component_count(&self) -> usize {
        self.components().0
    }

    /// Non-empty and connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// First Betti number `|E| - |V| + |components|`.
    pub fn betti(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// Rebuilds a graph from a new layout. `layout[v]` lists the old half-edges
    /// that form the slots of new vertex `v`; old half-edges not listed must be
    /// paired only among themselves.
    pub(crate) fn relayout(&self, layout: &[Vec<HalfEdge>]) -> (Graph, Vec<Option<HalfEdge>>) {
        let mut new_index = vec![None; self.half_edge_count()];
        let mut next = 0;
        for slots in layout {
            for &h in slots {
                new_index[h] = Some(next);
                next += 1;
            }
        }
        let mut mate = Vec::with_capacity(next);
        for slots in layout {
            for &h in slots {
                mate.push(match self.mate[h] {
                    Mate::Edge(k) => Mate::Edge(new_index[k].expect("partner removed")),
                    leg => leg,
                });
            }
        }
        let arity = layout.iter().map(Vec::len).collect();
        (Graph::from_raw(arity, mate), new_index)
    }

    /// Disjoint union; half-edges and vertices of `other` come after ours.
    /// Leg labels must not clash.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.half_edge_count();
        let mut arity = self.arity.clone();
        arity.extend_from_slice(&other.arity);
        let mut mate = self.mate.clone();
        mate.extend(other.mate.iter().map(|m| match *m {
            Mate::Edge(k) => Mate::Edge(k + shift),
            leg => leg,
        }));
        Graph::new(arity, mate)
    }
}

/// Cuts every internal edge. Vertices and slot order are kept; every
/// half-edge becomes a leg labeled by its half-edge index.
pub fn nu(g: &Graph) -> Graph {
    let mate = (0..g.half_edge_count())
        .map(|h| Mate::Leg(h as LegLabel))
        .collect();
    Graph::from_raw(g.arity.clone(), mate)
}

/// The corollas of [`nu`], one per vertex, legs named by half-edge index.
pub fn nu_corollas(g: &Graph) -> Vec<Corolla> {
    (0..g.vertex_count())
        .map(|v| Corolla {
            id: v as u32,
            legs: g.half_edges_at(v).map(|h| h as u32).collect(),
        })
        .collect()
}

/// Contracts every internal edge: one vertex per connected component carrying
/// that component's legs (in half-edge order) with their labels.
pub fn pi0(g: &Graph) -> Graph {
    let (count, comp) = g.components();
    let mut layout: Vec<Vec<HalfEdge>> = vec![Vec::new(); count];
    for h in 0..g.half_edge_count() {
        if let Mate::Leg(_) = g.mate[h] {
            layout[comp[g.vertex_of(h)]].push(h);
        }
    }
    g.relayout(&layout).0
}

/// Contracts the internal edge containing half-edge `h`, merging its two end
/// vertices. The merged vertex sits at the smaller index and takes the
/// remaining slots of the smaller vertex followed by those of the larger.
pub fn contract_edge(g: &Graph, h: HalfEdge) -> Result<Graph, GraphError> {
    contract_edge_mapped(g, h).map(|(c, _)| c)
}

/// [`contract_edge`] together with the induced map of graphs.
pub fn contract_edge_mapped(g: &Graph, h: HalfEdge) -> Result<(Graph, GraphMap), GraphError> {
    let k = match g.mate(h) {
        Mate::Edge(k) => k,
        Mate::Leg(_) => return Err(GraphError::NotInternal(h)),
    };
    let (a, b) = (g.vertex_of(h), g.vertex_of(k));
    if a == b {
        return Err(GraphError::SelfLoop(h));
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let mut layout = Vec::with_capacity(g.vertex_count() - 1);
    let mut vertex_map = vec![0; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if v == hi {
            continue;
        }
        vertex_map[v] = layout.len();
        let mut slots: Vec<HalfEdge> = g.half_edges_at(v).filter(|&x| x != h && x != k).collect();
        if v == lo {
            slots.extend(g.half_edges_at(hi).filter(|&x| x != h && x != k));
        }
        layout.push(slots);
    }
    vertex_map[hi] = vertex_map[lo];
    let (out, half_edge) = g.relayout(&layout);
    Ok((
        out,
        GraphMap {
            vertex: vertex_map,
            half_edge,
        },
    ))
}

/// The result of collapsing valence-one vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collapse {
    pub graph: Graph,
    /// Half-edges (in the graph current at that step) whose edge was contracted,
    /// always the one at the univalent vertex.
    pub steps: Vec<HalfEdge>,
    /// The composite map from the input graph to `graph`.
    pub map: GraphMap,
    /// Set when the result is the one-leg corolla, the single reduced graph
    /// allowed to keep a valence-one vertex.
    pub one_leg_corolla: bool,
}

/// Repeatedly contracts the edge at a valence-one vertex until none is left.
///
/// A valence-one vertex whose only half-edge is a leg can only occur in the
/// one-leg corolla itself; it is kept and flagged. A tree without legs
/// collapses to the bare vertex `•`.
pub fn collapse_reduced(g: &Graph) -> Collapse {
    let mut current = g.clone();
    let mut map = GraphMap::identity(g);
    let mut steps = Vec::new();
    loop {
        let next = (0..current.vertex_count()).find_map(|v| {
            if current.valence(v) != 1 {
                return None;
            }
            let h = current.half_edge(v, 0);
            matches!(current.mate(h), Mate::Edge(_)).then_some(h)
        });
        let Some(h) = next else { break };
        let (c, m) = contract_edge_mapped(&current, h).expect("univalent edge is not a loop");
        map = map.then(&m);
        steps.push(h);
        current = c;
    }
    let one_leg_corolla = current.vertex_count() == 1
        && current.valence(0) == 1
        && matches!(current.mate(0), Mate::Leg(_));
    Collapse {
        graph: current,
        steps,
        map,
        one_leg_corolla,
    }
}

/// No valence-one vertices, except for the one-leg corolla.
pub fn is_reduced(g: &Graph) -> bool {
    if g.vertex_count() == 1 && g.valence(0) == 1 {
        return g.leg_count() == 1;
    }
    (0..g.vertex_count()).all(|v| g.valence(v) != 1)
}
