//! Combinatorial and numerical core for computing the handlebody blocks of a
//! ribbon Grothendieck-Verdier category given in skeletal form.
//!
//! * [`graph`]: half-edge graphs with legs, ν and π₀, edge contraction,
//!   collapse of univalent vertices, canonical forms and enumeration.
//! * [`cyclic`]: Connes' cyclic category, its reversal involution, the
//!   semidihedral category and the functor to genus-one graphs.
//! * [`gv`]: fusion data and pointed (abelian group) data, with validation.
//! * [`blocks`]: dimensions of handlebody blocks by several independent routes.
//! * [`torus`]: the solid-torus mapping class group action for pointed data.
//! * [`scalar`]: exact roots of unity and cyclotomic integers.
#![no_std]

extern crate alloc;

pub mod blocks;
pub mod cyclic;
pub mod graph;
pub mod gv;
pub mod scalar;
pub mod torus;
