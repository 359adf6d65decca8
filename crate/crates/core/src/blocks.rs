//! Dimensions of handlebody blocks.
//!
//! For a handlebody of genus `g` with boundary disks labeled `X_1, …, X_n`
//! the block is `C(K, X_1 ⊗ … ⊗ X_n ⊗ F^{⊗g})` with `F = ⊕_α X_ᾱ ⊗ X_α`.
//! The same number is computed here by summing over simple labels, by gluing
//! along the edges of any connected graph of the right genus, by the closed
//! formula for pointed data, and for group algebras by counting orbits.

use crate::graph::{EnvelopeObject, Graph};
use crate::gv::{FusionDatum, GroupTable, PointedDatum};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockError {
    InvalidLabel(usize),
    LegCount { expected: usize, found: usize },
    Overflow,
}

impl fmt::Display for BlockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockError::InvalidLabel(l) => write!(f, "label {l} is out of range"),
            BlockError::LegCount { expected, found } => {
                write!(f, "graph has {expected} legs but {found} labels were given")
            }
            BlockError::Overflow => f.write_str("dimension does not fit in 64 bits"),
        }
    }
}

impl core::error::Error for BlockError {}

/// A handlebody of genus `genus` with one embedded disk per label, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HandlebodySignature {
    pub genus: usize,
    pub labels: Vec<usize>,
}

impl HandlebodySignature {
    pub fn new(genus: usize, labels: Vec<usize>) -> Self {
        HandlebodySignature { genus, labels }
    }

    pub fn closed(genus: usize) -> Self {
        Self::new(genus, Vec::new())
    }
}

impl fmt::Display for HandlebodySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(g={}; ", self.genus)?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    Coend,
    Graph(Graph),
    Pointed,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Coend => f.write_str("coend"),
            Method::Graph(g) => write!(f, "graph(V={},E={})", g.vertex_count(), g.edge_count()),
            Method::Pointed => f.write_str("pointed"),
            Method::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockResult {
    pub signature: HandlebodySignature,
    pub dimension: u64,
    pub method: Method,
}

fn check_labels(d: &FusionDatum, labels: &[usize]) -> Result<(), BlockError> {
    match labels.iter().find(|&&l| l >= d.rank()) {
        Some(&l) => Err(BlockError::InvalidLabel(l)),
        None => Ok(()),
    }
}

/// Multiplicities of the simples in `X_{l_1} ⊗ … ⊗ X_{l_k}`, tensoring from
/// the left starting with `start`.
fn tensor_vector(
    d: &FusionDatum,
    start: Vec<u64>,
    labels: &[usize],
) -> Result<Vec<u64>, BlockError> {
    let r = d.rank();
    let mut v = start;
    for &x in labels {
        let mut next = vec![0u64; r];
        for (a, &va) in v.iter().enumerate() {
            if va == 0 {
                continue;
            }
            for (c, slot) in next.iter_mut().enumerate() {
                let n = d.n(a, x, c) as u64;
                if n != 0 {
                    let add = va.checked_mul(n).ok_or(BlockError::Overflow)?;
                    *slot = slot.checked_add(add).ok_or(BlockError::Overflow)?;
                }
            }
        }
        v = next;
    }
    Ok(v)
}

fn unit_vector(d: &FusionDatum) -> Vec<u64> {
    let mut v = vec![0u64; d.rank()];
    v[0] = 1;
    v
}

/// `dim C(K, X_{l_1} ⊗ … ⊗ X_{l_n})`: the multiplicity of `X_κ` in the
/// product. The empty product is the unit.
pub fn genus_zero_dim(d: &FusionDatum, labels: &[usize]) -> Result<u64, BlockError> {
    check_labels(d, labels)?;
    Ok(tensor_vector(d, unit_vector(d), labels)?[d.kappa()])
}

/// The block of `H_{g,n}` as a sum over `g`-tuples of simple labels of
/// genus-zero blocks with the pairs `X_ᾱ ⊗ X_α` appended. The sum is
/// organized as `g` applications of tensoring with `F`.
pub fn handlebody_dim(d: &FusionDatum, s: &HandlebodySignature) -> Result<BlockResult, BlockError> {
    check_labels(d, &s.labels)?;
    let mut v = tensor_vector(d, unit_vector(d), &s.labels)?;
    for _ in 0..s.genus {
        let mut next = vec![0u64; d.rank()];
        for a in 0..d.rank() {
            let w = tensor_vector(d, v.clone(), &[d.bar(a), a])?;
            for (slot, x) in next.iter_mut().zip(w) {
                *slot = slot.checked_add(x).ok_or(BlockError::Overflow)?;
            }
        }
        v = next;
    }
    Ok(BlockResult {
        signature: s.clone(),
        dimension: v[d.kappa()],
        method: Method::Coend,
    })
}

/// `Σ_{α,α',β} N_{ᾱα}^β N_{ᾱ'α'}^{β̄}`, the closed-genus-two block written
/// out as a double sum.
pub fn genus_two_sum(d: &FusionDatum) -> u64 {
    let r = d.rank();
    let mut total = 0u64;
    for a in 0..r {
        for a2 in 0..r {
            for b in 0..r {
                total += d.n(d.bar(a), a, b) as u64 * d.n(d.bar(a2), a2, d.bar(b)) as u64;
            }
        }
    }
    total
}

/// The block of a connected graph: every internal edge carries a simple label
/// `α` on one half-edge and `ᾱ` on the other, each vertex contributes the
/// genus-zero block of the labels around it in slot order, and the products
/// are summed over all edge labelings. `leg_labels[i]` labels leg `i`.
pub fn graph_glue_dim(
    d: &FusionDatum,
    gamma: &EnvelopeObject,
    leg_labels: &[usize],
) -> Result<BlockResult, BlockError> {
    let g = gamma.graph();
    let dimension = glue_graph(d, g, leg_labels)?;
    Ok(BlockResult {
        signature: HandlebodySignature::new(gamma.genus(), leg_labels.to_vec()),
        dimension,
        method: Method::Graph(g.clone()),
    })
}

/// [`graph_glue_dim`] on a bare graph whose legs are labeled `0..n`.
pub fn glue_graph(d: &FusionDatum, g: &Graph, leg_labels: &[usize]) -> Result<u64, BlockError> {
    check_labels(d, leg_labels)?;
    let legs = g.legs();
    if legs.len() != leg_labels.len() {
        return Err(BlockError::LegCount {
            expected: legs.len(),
            found: leg_labels.len(),
        });
    }
    let mut label = vec![usize::MAX; g.half_edge_count()];
    for (l, h) in legs {
        let l = l as usize;
        if l >= leg_labels.len() {
            return Err(BlockError::LegCount {
                expected: g.leg_count(),
                found: leg_labels.len(),
            });
        }
        label[h] = leg_labels[l];
    }
    let edges = g.internal_edges();
    let mut total = 0u64;
    glue_search(d, g, &edges, 0, &mut label, &mut total)?;
    Ok(total)
}

fn glue_search(
    d: &FusionDatum,
    g: &Graph,
    edges: &[(usize, usize)],
    idx: usize,
    label: &mut [usize],
    total: &mut u64,
) -> Result<(), BlockError> {
    if idx == edges.len() {
        let mut product = 1u64;
        for v in 0..g.vertex_count() {
            let around: Vec<usize> = g.half_edges_at(v).map(|h| label[h]).collect();
            product = product
                .checked_mul(genus_zero_dim(d, &around)?)
                .ok_or(BlockError::Overflow)?;
            if product == 0 {
                return Ok(());
            }
        }
        *total = total.checked_add(product).ok_or(BlockError::Overflow)?;
        return Ok(());
    }
    let (h, k) = edges[idx];
    for a in 0..d.rank() {
        label[h] = a;
        label[k] = d.bar(a);
        glue_search(d, g, edges, idx + 1, label, total)?;
    }
    label[h] = usize::MAX;
    label[k] = usize::MAX;
    Ok(())
}

/// `|G|^g` if the product of the labels times `a0^g` is `a0`, else zero.
pub fn pointed_dim(p: &PointedDatum, s: &HandlebodySignature) -> Result<BlockResult, BlockError> {
    let g = p.group();
    let n = g.order();
    if let Some(&l) = s.labels.iter().find(|&&l| l >= n) {
        return Err(BlockError::InvalidLabel(l));
    }
    let a0 = p.a0();
    let product = s.labels.iter().fold(0, |acc, &l| g.mul(acc, l));
    let total = g.mul(product, g.pow(a0, s.genus as i64));
    let dimension = if total == a0 {
        (n as u64)
            .checked_pow(s.genus as u32)
            .ok_or(BlockError::Overflow)?
    } else {
        0
    };
    Ok(BlockResult {
        signature: s.clone(),
        dimension,
        method: Method::Pointed,
    })
}

/// Orbits of `G` acting on `G^g` by simultaneous conjugation, counted with
/// Burnside's lemma: `(1/|G|) Σ_x |C_G(x)|^g`.
pub fn orbit_oracle(group: &GroupTable, genus: usize) -> Result<u64, BlockError> {
    let mut sum = 0u64;
    for x in 0..group.order() {
        let c = (group.centralizer_order(x) as u64)
            .checked_pow(genus as u32)
            .ok_or(BlockError::Overflow)?;
        sum = sum.checked_add(c).ok_or(BlockError::Overflow)?;
    }
    Ok(sum / group.order() as u64)
}
