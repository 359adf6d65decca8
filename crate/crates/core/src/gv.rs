//! Skeletal input data: semisimple ribbon Grothendieck-Verdier categories in
//! fusion-coefficient form, and pointed categories built from a finite
//! abelian group with a balancing function and a dualizing element.

use crate::scalar::Root;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    Empty,
    NotSquare,
    OutOfRange { row: usize, col: usize },
    IdentityNotFirst,
    NotLatin { row: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::Empty => f.write_str("group table is empty"),
            GroupError::NotSquare => f.write_str("group table is not square"),
            GroupError::OutOfRange { row, col } => {
                write!(f, "entry ({row}, {col}) is not an element")
            }
            GroupError::IdentityNotFirst => f.write_str("element 0 is not the identity"),
            GroupError::NotLatin { row } => write!(f, "row {row} is not a permutation"),
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "({a}{b}){c} != {a}({b}{c})")
            }
        }
    }
}

impl core::error::Error for GroupError {}

/// A finite group given by its multiplication table; element 0 is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if table.iter().any(|row| row.len() != n) {
            return Err(GroupError::NotSquare);
        }
        for (row, r) in table.iter().enumerate() {
            if let Some(col) = r.iter().position(|&x| x >= n) {
                return Err(GroupError::OutOfRange { row, col });
            }
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return Err(GroupError::IdentityNotFirst);
        }
        for (row, r) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            for &x in r {
                if core::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::NotLatin { row });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| table[a].iter().position(|&x| x == 0).expect("latin row"))
            .collect();
        Ok(GroupTable { table, inverse })
    }

    /// `Z/n`, with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        GroupTable::new(table).expect("cyclic group table")
    }

    /// `G × H`, with `(g, h)` stored at index `g * |H| + h`.
    pub fn product(g: &GroupTable, h: &GroupTable) -> Self {
        let (m, n) = (g.order(), h.order());
        let table = (0..m * n)
            .map(|x| {
                (0..m * n)
                    .map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n))
                    .collect()
            })
            .collect();
        GroupTable::new(table).expect("product of groups")
    }

    /// The symmetric group on `k` letters, permutations in lexicographic
    /// order (so the identity comes first), composed as functions.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        fn go(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for x in 0..k {
                if !cur.contains(&x) {
                    cur.push(x);
                    go(k, cur, out);
                    cur.pop();
                }
            }
        }
        go(k, &mut Vec::new(), &mut perms);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("a permutation");
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&q.iter().map(|&x| p[x]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        GroupTable::new(table).expect("symmetric group table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// `|C_G(x)|`.
    pub fn centralizer_order(&self, x: usize) -> usize {
        (0..self.order())
            .filter(|&y| self.mul(x, y) == self.mul(y, x))
            .count()
    }
}

/// Invariant factor lists `[d_1, …, d_k]` with `d_1 | d_2 | …`, one for each
/// abelian group of order at most `max_order` (the trivial group is `[]`).
pub fn abelian_group_types(max_order: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(cur.clone());
            return;
        }
        // the next factor is a multiple of the previous one and divides what is left
        let prev = cur.last().copied().unwrap_or(1);
        for d in 2..=rest {
            if d % prev == 0 && rest.is_multiple_of(d) {
                let remaining = rest / d;
                // all later factors are multiples of d
                if remaining == 1 || remaining.is_multiple_of(d) {
                    cur.push(d);
                    go(remaining, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    for order in 1..=max_order {
        go(order, &mut Vec::new(), &mut out);
    }
    out
}

/// The abelian group `Z/d_1 × … × Z/d_k`.
pub fn abelian_group(factors: &[usize]) -> GroupTable {
    factors.iter().fold(GroupTable::cyclic(1), |g, &d| {
        GroupTable::product(&g, &GroupTable::cyclic(d))
    })
}

/// One failed constraint of a fusion datum, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FusionViolation {
    Shape,
    LabelOutOfRange {
        what: &'static str,
        label: usize,
    },
    LeftUnit {
        a: usize,
        b: usize,
        got: u32,
    },
    RightUnit {
        a: usize,
        b: usize,
        got: u32,
    },
    Associativity {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        left: u64,
        right: u64,
    },
    Commutativity {
        a: usize,
        b: usize,
        c: usize,
    },
    DualNotInvolution {
        a: usize,
    },
    Duality {
        a: usize,
        b: usize,
        got: u32,
    },
}

impl fmt::Display for FusionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FusionViolation::Shape => f.write_str("N is not a rank x rank x rank tensor"),
            FusionViolation::LabelOutOfRange { what, label } => {
                write!(f, "{what} refers to label {label} outside the rank")
            }
            FusionViolation::LeftUnit { a, b, got } => {
                write!(f, "unit law: N[0][{a}][{b}] = {got}")
            }
            FusionViolation::RightUnit { a, b, got } => {
                write!(f, "unit law: N[{a}][0][{b}] = {got}")
            }
            FusionViolation::Associativity {
                a,
                b,
                c,
                d,
                left,
                right,
            } => write!(
                f,
                "associativity at ({a},{b},{c};{d}): (ab)c gives {left}, a(bc) gives {right}"
            ),
            FusionViolation::Commutativity { a, b, c } => {
                write!(f, "braiding: N[{a}][{b}][{c}] != N[{b}][{a}][{c}]")
            }
            FusionViolation::DualNotInvolution { a } => {
                write!(f, "dual: bar(bar({a})) != {a}")
            }
            FusionViolation::Duality { a, b, got } => {
                write!(f, "duality: N[{a}][{b}][kappa] = {got}")
            }
        }
    }
}

/// A skeletal semisimple ribbon Grothendieck-Verdier category: simple labels
/// `0..rank` with `0` the unit, fusion coefficients, the duality on labels and
/// the label of the dualizing object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionDatum {
    rank: usize,
    n: Vec<Vec<Vec<u32>>>,
    bar: Vec<usize>,
    kappa: usize,
}

impl FusionDatum {
    /// Stores the data without checking the axioms; see [`FusionDatum::validate`].
    pub fn new(n: Vec<Vec<Vec<u32>>>, bar: Vec<usize>, kappa: usize) -> Self {
        FusionDatum {
            rank: n.len(),
            n,
            bar,
            kappa,
        }
    }

    /// The rank-one category of vector spaces.
    pub fn trivial() -> Self {
        FusionDatum::new(vec![vec![vec![1]]], vec![0], 0)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn bar(&self, a: usize) -> usize {
        self.bar[a]
    }

    pub fn bars(&self) -> &[usize] {
        &self.bar
    }

    pub fn tensor(&self) -> &[Vec<Vec<u32>>] {
        &self.n
    }

    /// `N_{ab}^c`.
    pub fn n(&self, a: usize, b: usize, c: usize) -> u32 {
        self.n[a][b][c]
    }

    pub fn set_n(&mut self, a: usize, b: usize, c: usize, value: u32) {
        self.n[a][b][c] = value;
    }

    fn well_formed(&self) -> Vec<FusionViolation> {
        let r = self.rank;
        let mut out = Vec::new();
        if r == 0
            || self
                .n
                .iter()
                .any(|m| m.len() != r || m.iter().any(|row| row.len() != r))
        {
            out.push(FusionViolation::Shape);
            return out;
        }
        if self.bar.len() != r {
            out.push(FusionViolation::Shape);
        }
        if let Some(&label) = self.bar.iter().find(|&&b| b >= r) {
            out.push(FusionViolation::LabelOutOfRange { what: "bar", label });
        }
        if self.kappa >= r {
            out.push(FusionViolation::LabelOutOfRange {
                what: "kappa",
                label: self.kappa,
            });
        }
        out
    }

    /// Checks every constraint and reports each failure with a witness.
    /// An empty list means the datum is valid.
    pub fn validate(&self) -> Vec<FusionViolation> {
        let mut out = self.well_formed();
        if !out.is_empty() {
            return out;
        }
        let r = self.rank;
        for a in 0..r {
            for b in 0..r {
                let want = (a == b) as u32;
                if self.n(0, a, b) != want {
                    out.push(FusionViolation::LeftUnit {
                        a,
                        b,
                        got: self.n(0, a, b),
                    });
                }
                if self.n(a, 0, b) != want {
                    out.push(FusionViolation::RightUnit {
                        a,
                        b,
                        got: self.n(a, 0, b),
                    });
                }
            }
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let left: u64 = (0..r)
                            .map(|e| self.n(a, b, e) as u64 * self.n(e, c, d) as u64)
                            .sum();
                        let right: u64 = (0..r)
                            .map(|e| self.n(b, c, e) as u64 * self.n(a, e, d) as u64)
                            .sum();
                        if left != right {
                            out.push(FusionViolation::Associativity {
                                a,
                                b,
                                c,
                                d,
                                left,
                                right,
                            });
                        }
                    }
                }
            }
        }
        for a in 0..r {
            for b in (a + 1)..r {
                for c in 0..r {
                    if self.n(a, b, c) != self.n(b, a, c) {
                        out.push(FusionViolation::Commutativity { a, b, c });
                    }
                }
            }
        }
        for a in 0..r {
            if self.bar[self.bar[a]] != a {
                out.push(FusionViolation::DualNotInvolution { a });
            }
        }
        for a in 0..r {
            for b in 0..r {
                let got = self.n(a, b, self.kappa);
                if got != (b == self.bar[a]) as u32 {
                    out.push(FusionViolation::Duality { a, b, got });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

/// Whether the dualizing object is the unit. Equivalent to the two disk
/// functors on the circle being adjoint.
pub fn is_r_category(d: &FusionDatum) -> bool {
    d.kappa == 0
}

/// One failed constraint of a pointed datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointedViolation {
    Group(GroupError),
    NotAbelian { a: usize, b: usize },
    Shape,
    ZeroRootOrder,
    ElementOutOfRange { element: usize },
    UnitTwist { got: Root },
    NotBicharacter { a: usize, b: usize, c: usize },
    DualTwist { a: usize, got: Root, dual: Root },
}

impl fmt::Display for PointedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointedViolation::Group(e) => write!(f, "group: {e}"),
            PointedViolation::NotAbelian { a, b } => write!(f, "{a} and {b} do not commute"),
            PointedViolation::Shape => f.write_str("q does not have one entry per element"),
            PointedViolation::ZeroRootOrder => f.write_str("root order must be positive"),
            PointedViolation::ElementOutOfRange { element } => {
                write!(f, "b0 = {element} is not an element")
            }
            PointedViolation::UnitTwist { got } => write!(f, "q(1) = {got}, expected 1"),
            PointedViolation::NotBicharacter { a, b, c } => {
                write!(f, "B({a}{b},{c}) != B({a},{c}) B({b},{c})")
            }
            PointedViolation::DualTwist { a, got, dual } => {
                write!(
                    f,
                    "twist of the dual: q({a}) = {got} but q(bar {a}) = {dual}"
                )
            }
        }
    }
}

/// Pointed data: a finite abelian group `G`, the balancing `θ_a = q(a)` with
/// `q(a) = ζ_M^{k_a}`, and `b0` determining the dualizing element
/// `a0 = b0^{-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedDatum {
    group: GroupTable,
    root_order: u64,
    exponents: Vec<u64>,
    b0: usize,
}

impl PointedDatum {
    /// Stores the data without checking the axioms; see [`PointedDatum::validate`].
    pub fn new(group: GroupTable, root_order: u64, exponents: Vec<u64>, b0: usize) -> Self {
        PointedDatum {
            group,
            root_order,
            exponents,
            b0,
        }
    }

    /// Trivial balancing on `group` with `b0` as given.
    pub fn untwisted(group: GroupTable, b0: usize) -> Self {
        let n = group.order();
        PointedDatum::new(group, 1, vec![0; n], b0)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn b0(&self) -> usize {
        self.b0
    }

    /// `a0 = b0^{-2}`.
    pub fn a0(&self) -> usize {
        self.group.pow(self.b0, -2)
    }

    /// The dual label `ā = a0 a^{-1}`.
    pub fn bar(&self, a: usize) -> usize {
        self.group.mul(self.a0(), self.group.inv(a))
    }

    /// `θ_a = q(a)`.
    pub fn q(&self, a: usize) -> Root {
        Root::new(self.exponents[a] as i64, self.root_order)
    }

    /// `B(a, b) = q(ab) / (q(a) q(b))`.
    pub fn form(&self, a: usize, b: usize) -> Root {
        self.q(self.group.mul(a, b)) * (self.q(a) * self.q(b)).inv()
    }

    pub fn validate(&self) -> Vec<PointedViolation> {
        let g = match GroupTable::new(self.group.table.clone()) {
            Ok(g) => g,
            Err(e) => return vec![PointedViolation::Group(e)],
        };
        let n = g.order();
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if g.mul(a, b) != g.mul(b, a) {
                    out.push(PointedViolation::NotAbelian { a, b });
                }
            }
        }
        if self.exponents.len() != n {
            out.push(PointedViolation::Shape);
        }
        if self.root_order == 0 {
            out.push(PointedViolation::ZeroRootOrder);
        }
        if self.b0 >= n {
            out.push(PointedViolation::ElementOutOfRange { element: self.b0 });
        }
        if !out.is_empty() {
            return out;
        }
        if !self.q(0).is_one() {
            out.push(PointedViolation::UnitTwist { got: self.q(0) });
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.form(g.mul(a, b), c) != self.form(a, c) * self.form(b, c) {
                        out.push(PointedViolation::NotBicharacter { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            let dual = self.q(self.bar(a));
            if dual != self.q(a) {
                out.push(PointedViolation::DualTwist {
                    a,
                    got: self.q(a),
                    dual,
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

/// The fusion datum of `Vect_G`: `N_{ab}^c = δ_{ab,c}`, `ā = a0 a^{-1}`,
/// `κ = a0`.
pub fn pointed_to_fusion(p: &PointedDatum) -> Result<FusionDatum, Vec<PointedViolation>> {
    let violations = p.validate();
    if !violations.is_empty() {
        return Err(violations);
    }
    let g = &p.group;
    let r = g.order();
    let n = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| (0..r).map(|c| (g.mul(a, b) == c) as u32).collect())
                .collect()
        })
        .collect();
    let bar = (0..r).map(|a| p.bar(a)).collect();
    Ok(FusionDatum::new(n, bar, p.a0()))
}
