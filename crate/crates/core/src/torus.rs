//! The action of `Map(H_{1,0}) ≅ Z × Z₂` on the solid-torus block of a
//! pointed datum.
//!
//! The block `C(K, F)` has one basis vector per `a ∈ G`, spanning the line
//! `C(K, X_ā ⊗ X_a)` with `ā = a0 a^{-1}`. The waist twist `T` acts by the
//! balancing `q(a)`. The rotation `R` braids the two factors, twists the
//! dual one and re-indexes, sending `e_a` to `λ(a) e_ā`.
//!
//! Scalars come from one fixed skeleton: the braiding on simples is
//! `c(a, b) = B(a, b)` for `a < b`, `1` for `a > b`, and a square root of
//! `B(a, a)` on the diagonal, so `c(a, b) c(b, a) = B(a, b)` throughout.

use crate::gv::PointedDatum;
use crate::scalar::{CycMatrix, Root};
use alloc::vec::Vec;

/// The braiding scalar of `X_a ⊗ X_b → X_b ⊗ X_a` in the fixed skeleton.
pub fn braiding(p: &PointedDatum, a: usize, b: usize) -> Root {
    use core::cmp::Ordering;
    match a.cmp(&b) {
        Ordering::Less => p.form(a, b),
        Ordering::Greater => Root::ONE,
        Ordering::Equal => p.form(a, a).sqrt(),
    }
}

/// `λ(a)`: braid `X_a ⊗ X_ā`, then twist the dual factor.
pub fn rotation_scalar(p: &PointedDatum, a: usize) -> Root {
    let dual = p.bar(a);
    braiding(p, a, dual) * p.q(dual)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusRep {
    pub basis: Vec<usize>,
    pub t_diagonal: Vec<Root>,
    pub r_permutation: Vec<usize>,
    pub r_coefficients: Vec<Root>,
    pub t: CycMatrix,
    pub r: CycMatrix,
}

/// Every group element once, in table order.
pub fn torus_block_basis(p: &PointedDatum) -> Vec<usize> {
    (0..p.group().order()).collect()
}

pub fn t_matrix(p: &PointedDatum) -> CycMatrix {
    let diag: Vec<Root> = torus_block_basis(p).into_iter().map(|a| p.q(a)).collect();
    CycMatrix::diagonal(&diag)
}

pub fn r_matrix(p: &PointedDatum) -> CycMatrix {
    let basis = torus_block_basis(p);
    let perm: Vec<usize> = basis.iter().map(|&a| p.bar(a)).collect();
    let coeff: Vec<Root> = basis.iter().map(|&a| rotation_scalar(p, a)).collect();
    CycMatrix::monomial(&perm, &coeff)
}

pub fn torus_rep(p: &PointedDatum) -> TorusRep {
    let basis = torus_block_basis(p);
    TorusRep {
        t_diagonal: basis.iter().map(|&a| p.q(a)).collect(),
        r_permutation: basis.iter().map(|&a| p.bar(a)).collect(),
        r_coefficients: basis.iter().map(|&a| rotation_scalar(p, a)).collect(),
        t: t_matrix(p),
        r: r_matrix(p),
        basis,
    }
}

/// The images of `T` and `R` in `SL(2, Z)`.
pub fn sl2z_shadow() -> ([[i64; 2]; 2], [[i64; 2]; 2]) {
    ([[1, 0], [1, 1]], [[-1, 0], [0, -1]])
}

/// A generator of `Z × Z₂` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusGenerator {
    T,
    TInverse,
    R,
}

impl TorusRep {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn t_inverse(&self) -> CycMatrix {
        let inv: Vec<Root> = self.t_diagonal.iter().map(|r| r.inv()).collect();
        CycMatrix::diagonal(&inv)
    }

    /// The matrix of `T^m R^ε`.
    pub fn element(&self, m: i64, flip: bool) -> CycMatrix {
        let t = if m < 0 {
            self.t_inverse()
        } else {
            self.t.clone()
        };
        let tm = t.pow(m.unsigned_abs() as u32);
        if flip {
            tm.mul(&self.r)
        } else {
            tm
        }
    }

    /// The product of the generator matrices of `word`, left to right.
    pub fn word_matrix(&self, word: &[TorusGenerator]) -> CycMatrix {
        let t_inv = self.t_inverse();
        word.iter().fold(CycMatrix::identity(self.dim()), |acc, g| {
            acc.mul(match g {
                TorusGenerator::T => &self.t,
                TorusGenerator::TInverse => &t_inv,
                TorusGenerator::R => &self.r,
            })
        })
    }

    pub fn commutes(&self) -> bool {
        self.t.mul(&self.r) == self.r.mul(&self.t)
    }

    pub fn r_is_involution(&self) -> bool {
        self.r.mul(&self.r).is_identity()
    }

    /// Every word of length at most `max_len` in `T`, `T^{-1}`, `R` maps to
    /// the matrix of its image `(Σ ±1, #R mod 2)` in `Z × Z₂`. Returns the
    /// first word that does not.
    pub fn homomorphism_counterexample(&self, max_len: usize) -> Option<Vec<TorusGenerator>> {
        const GENS: [TorusGenerator; 3] = [
            TorusGenerator::T,
            TorusGenerator::TInverse,
            TorusGenerator::R,
        ];
        let mut words: Vec<Vec<TorusGenerator>> = alloc::vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &words {
                for g in GENS {
                    let mut w2 = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
            for w in &next {
                let m: i64 = w
                    .iter()
                    .map(|g| match g {
                        TorusGenerator::T => 1,
                        TorusGenerator::TInverse => -1,
                        TorusGenerator::R => 0,
                    })
                    .sum();
                let flip = w.iter().filter(|&&g| g == TorusGenerator::R).count() % 2 == 1;
                if self.word_matrix(w) != self.element(m, flip) {
                    return Some(w.clone());
                }
            }
            words = next;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gv::GroupTable;
    use crate::scalar::Cyclotomic;

    #[test]
    fn semion() {
        let p = PointedDatum::new(GroupTable::cyclic(2), 4, alloc::vec![0, 1], 0);
        let rep = torus_rep(&p);
        assert_eq!(rep.t_diagonal, [Root::ONE, Root::new(1, 4)]);
        assert_eq!(rep.r_permutation, [0, 1]);
        assert_eq!(rep.r_coefficients, [Root::ONE, Root::new(1, 2)]);
        assert!(rep.commutes() && rep.r_is_involution());
    }

    #[test]
    fn untwisted_is_a_permutation() {
        let p = PointedDatum::untwisted(GroupTable::cyclic(5), 0);
        let r = r_matrix(&p);
        for a in 0..5 {
            for b in 0..5 {
                let want = if b == (5 - a) % 5 {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(r.get(b, a), &want);
            }
        }
        assert!(t_matrix(&p).is_identity());
    }

    #[test]
    fn z3_with_nontrivial_dualizing_element() {
        let p = PointedDatum::new(GroupTable::cyclic(3), 3, alloc::vec![0, 0, 2], 1);
        let rep = torus_rep(&p);
        assert_eq!(rep.r_permutation, [1, 0, 2]);
        assert!(rep.commutes() && rep.r_is_involution());
        assert_eq!(rep.homomorphism_counterexample(4), None);
    }
}
