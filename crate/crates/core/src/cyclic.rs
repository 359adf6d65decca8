//! Connes' cyclic category Λ, the reversal involution, the dihedral category
//! Λ ⋊ Z₂, and the functor from the degeneracy-free part to genus-one graphs.
//!
//! A morphism `[n] → [m]` is a nondecreasing map `f: Z → Z` with
//! `f(i + n + 1) = f(i) + m + 1`, up to adding multiples of `m + 1`. We store
//! `f(0), …, f(n)` shifted so that `0 <= f(0) <= m`.
//!
//! Words are written in composition order, rightmost generator first:
//! `d1 t` is `δ₁ ∘ τ`. Tokens are `d<i>` (face), `s<j>` (degeneracy),
//! `t` or `t^k` (rotation), `r` (reversal) and `id`.

use crate::graph::{Graph, GraphMap};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicError {
    ObjectMismatch {
        expected: usize,
        found: usize,
    },
    IndexOutOfRange {
        generator: char,
        index: usize,
        object: usize,
    },
    NotAMorphism,
    Degeneracy,
    Parse(String),
}

impl fmt::Display for CyclicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicError::ObjectMismatch { expected, found } => {
                write!(f, "object mismatch: expected [{expected}], found [{found}]")
            }
            CyclicError::IndexOutOfRange {
                generator,
                index,
                object,
            } => write!(f, "{generator}{index} is not defined at [{object}]"),
            CyclicError::NotAMorphism => {
                write!(f, "values do not define a nondecreasing periodic map")
            }
            CyclicError::Degeneracy => write!(f, "morphism uses a degeneracy"),
            CyclicError::Parse(msg) => write!(f, "cannot parse word: {msg}"),
        }
    }
}

impl core::error::Error for CyclicError {}

/// A generator of Λ ⋊ Z₂. Objects are implicit and inferred from the source.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Face(usize),
    Degeneracy(usize),
    Rotation,
    Reflection,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Face(i) => write!(f, "d{i}"),
            Generator::Degeneracy(j) => write!(f, "s{j}"),
            Generator::Rotation => f.write_str("t"),
            Generator::Reflection => f.write_str("r"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicMorphism {
    src: usize,
    dst: usize,
    values: Vec<i64>,
}

impl CyclicMorphism {
    /// `values` are `f(0), …, f(src)` for some representative `f`.
    pub fn new(src: usize, dst: usize, values: Vec<i64>) -> Result<Self, CyclicError> {
        if values.len() != src + 1 {
            return Err(CyclicError::NotAMorphism);
        }
        let period = dst as i64 + 1;
        if values.windows(2).any(|w| w[0] > w[1]) || values[src] > values[0] + period {
            return Err(CyclicError::NotAMorphism);
        }
        Ok(Self::normalized(src, dst, values))
    }

    fn normalized(src: usize, dst: usize, mut values: Vec<i64>) -> Self {
        let period = dst as i64 + 1;
        let shift = values[0].div_euclid(period) * period;
        for v in &mut values {
            *v -= shift;
        }
        CyclicMorphism { src, dst, values }
    }

    fn from_fn(src: usize, dst: usize, f: impl Fn(i64) -> i64) -> Self {
        Self::normalized(src, dst, (0..=src as i64).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i| i)
    }

    /// `δ_i: [n-1] → [n]`, skipping `i`.
    pub fn face(i: usize, n: usize) -> Result<Self, CyclicError> {
        if n == 0 || i > n {
            return Err(CyclicError::IndexOutOfRange {
                generator: 'd',
                index: i,
                object: n,
            });
        }
        let i = i as i64;
        Ok(Self::from_fn(n - 1, n, |k| if k < i { k } else { k + 1 }))
    }

    /// `σ_j: [n+1] → [n]`, hitting `j` twice.
    pub fn degeneracy(j: usize, n: usize) -> Result<Self, CyclicError> {
        if j > n {
            return Err(CyclicError::IndexOutOfRange {
                generator: 's',
                index: j,
                object: n,
            });
        }
        let j = j as i64;
        Ok(Self::from_fn(n + 1, n, |k| if k <= j { k } else { k - 1 }))
    }

    /// `τ_n: [n] → [n]`, represented by `i ↦ i - 1`.
    pub fn rotation(n: usize) -> Self {
        Self::from_fn(n, n, |i| i - 1)
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    /// The normalized representative on `0..=src`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The stored representative, extended periodically to all of `Z`.
    pub fn eval(&self, i: i64) -> i64 {
        let n = self.src as i64 + 1;
        let m = self.dst as i64 + 1;
        self.values[i.rem_euclid(n) as usize] + i.div_euclid(n) * m
    }

    /// `self` followed by `next`, i.e. `next ∘ self`.
    pub fn then(&self, next: &CyclicMorphism) -> Result<CyclicMorphism, CyclicError> {
        if self.dst != next.src {
            return Err(CyclicError::ObjectMismatch {
                expected: self.dst,
                found: next.src,
            });
        }
        Ok(Self::from_fn(self.src, next.dst, |i| {
            next.eval(self.eval(i))
        }))
    }

    pub fn pow(&self, k: usize) -> Result<CyclicMorphism, CyclicError> {
        let mut out = Self::identity(self.src);
        for _ in 0..k {
            out = out.then(self)?;
        }
        Ok(out)
    }

    /// `r(f)`, represented by `p ↦ m - f(n - p)`.
    pub fn reversal(&self) -> CyclicMorphism {
        let (n, m) = (self.src as i64, self.dst as i64);
        Self::from_fn(self.src, self.dst, |p| m - self.eval(n - p))
    }

    /// Whether the morphism lies in the degeneracy-free subcategory.
    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
            && self.values[self.src] < self.values[0] + self.dst as i64 + 1
    }

    pub fn is_iso(&self) -> bool {
        self.src == self.dst && self.is_injective()
    }

    /// Splits `f = φ ∘ τ^k` with `φ` in the simplex category and
    /// `0 <= k <= src`; returns `(φ, k)`.
    pub fn split(&self) -> (CyclicMorphism, usize) {
        let m = self.dst as i64 + 1;
        for k in 0..=self.src {
            let first = self.eval(k as i64);
            let last = self.eval((k + self.src) as i64);
            if first.div_euclid(m) == last.div_euclid(m) {
                let phi = Self::from_fn(self.src, self.dst, |i| self.eval(i + k as i64));
                return (phi, k);
            }
        }
        unreachable!("every cyclic morphism has a monotone window")
    }

    /// The normal form `δ… σ… τ^k`: faces with decreasing indices, then
    /// degeneracies with increasing indices, then `k` rotations.
    pub fn word(&self) -> Vec<Generator> {
        let (phi, k) = self.split();
        let image: Vec<i64> = phi.values().to_vec();
        let mut word = Vec::new();
        for i in (0..=self.dst as i64).rev() {
            if !image.contains(&i) {
                word.push(Generator::Face(i as usize));
            }
        }
        for j in 0..self.src {
            if image[j] == image[j + 1] {
                word.push(Generator::Degeneracy(j));
            }
        }
        word.extend(core::iter::repeat_n(Generator::Rotation, k));
        word
    }

    /// All morphisms `[n] → [m]`, or only the injective ones.
    pub fn homs(n: usize, m: usize, injective_only: bool) -> Vec<CyclicMorphism> {
        fn go(n: usize, m: usize, strict: bool, cur: &mut Vec<i64>, out: &mut Vec<CyclicMorphism>) {
            let period = m as i64 + 1;
            if cur.len() == n + 1 {
                let top = cur[0] + period;
                if cur[n] < top || (!strict && cur[n] == top) {
                    out.push(CyclicMorphism {
                        src: n,
                        dst: m,
                        values: cur.clone(),
                    });
                }
                return;
            }
            let (lo, hi) = match cur.last() {
                None => (0, period - 1),
                Some(&prev) => (prev + strict as i64, cur[0] + period),
            };
            for v in lo..=hi {
                cur.push(v);
                go(n, m, strict, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, m, injective_only, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for CyclicMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}] (", self.src, self.dst)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `g ∘ f` for `f: [n] → [m]` and `g: [m] → [k]`.
pub fn compose(f: &CyclicMorphism, g: &CyclicMorphism) -> Result<CyclicMorphism, CyclicError> {
    f.then(g)
}

/// A morphism of Λ ⋊ Z₂, read as `base ∘ ρ` when `flip` is set, where `ρ`
/// is the reversal generator at the source. Composition uses
/// `ρ ∘ f = r(f) ∘ ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralMorphism {
    pub base: CyclicMorphism,
    pub flip: bool,
}

impl DihedralMorphism {
    pub fn new(base: CyclicMorphism, flip: bool) -> Self {
        DihedralMorphism { base, flip }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(CyclicMorphism::identity(n), false)
    }

    pub fn reflection(n: usize) -> Self {
        Self::new(CyclicMorphism::identity(n), true)
    }

    pub fn src(&self) -> usize {
        self.base.src
    }

    pub fn dst(&self) -> usize {
        self.base.dst
    }

    /// `self` followed by `next`: `(g, η) ∘ (f, ε) = (g ∘ r^η(f), η + ε)`.
    pub fn then(&self, next: &DihedralMorphism) -> Result<DihedralMorphism, CyclicError> {
        let f = if next.flip {
            self.base.reversal()
        } else {
            self.base.clone()
        };
        Ok(Self::new(f.then(&next.base)?, self.flip ^ next.flip))
    }

    pub fn is_semidihedral(&self) -> bool {
        self.base.is_injective()
    }

    pub fn is_iso(&self) -> bool {
        self.base.is_iso()
    }

    pub fn word(&self) -> Vec<Generator> {
        let mut w = self.base.word();
        if self.flip {
            w.push(Generator::Reflection);
        }
        w
    }

    pub fn homs(n: usize, m: usize, injective_only: bool) -> Vec<DihedralMorphism> {
        let base = CyclicMorphism::homs(n, m, injective_only);
        let mut out: Vec<_> = base.iter().map(|f| Self::new(f.clone(), false)).collect();
        out.extend(base.into_iter().map(|f| Self::new(f, true)));
        out
    }
}

/// Renders a word in the token syntax of this module.
pub fn format_word(word: &[Generator]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        if !out.is_empty() {
            out.push(' ');
        }
        if word[i] == Generator::Rotation {
            let run = word[i..]
                .iter()
                .take_while(|&&g| g == Generator::Rotation)
                .count();
            out.push('t');
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        } else {
            out.push_str(&format!("{}", word[i]));
            i += 1;
        }
    }
    if out.is_empty() {
        out.push_str("id");
    }
    out
}

/// Parses a word and evaluates it starting at the object `[src]`.
pub fn parse_word(src: usize, text: &str) -> Result<DihedralMorphism, CyclicError> {
    let mut gens = Vec::new();
    for token in text.split_whitespace() {
        let bad = || CyclicError::Parse(format!("unknown token `{token}`"));
        let index = |s: &str| s.parse::<usize>().map_err(|_| bad());
        match token {
            "id" => {}
            "t" => gens.push(Generator::Rotation),
            "r" => gens.push(Generator::Reflection),
            _ if token.starts_with("t^") => gens.extend(core::iter::repeat_n(
                Generator::Rotation,
                index(&token[2..])?,
            )),
            _ if token.starts_with('d') => gens.push(Generator::Face(index(&token[1..])?)),
            _ if token.starts_with('s') => gens.push(Generator::Degeneracy(index(&token[1..])?)),
            _ => return Err(bad()),
        }
    }
    let mut acc = DihedralMorphism::identity(src);
    for g in gens.into_iter().rev() {
        let at = acc.dst();
        let step = match g {
            Generator::Face(i) => DihedralMorphism::new(CyclicMorphism::face(i, at + 1)?, false),
            Generator::Degeneracy(j) => {
                if at == 0 {
                    return Err(CyclicError::IndexOutOfRange {
                        generator: 's',
                        index: j,
                        object: at,
                    });
                }
                DihedralMorphism::new(CyclicMorphism::degeneracy(j, at - 1)?, false)
            }
            Generator::Rotation => DihedralMorphism::new(CyclicMorphism::rotation(at), false),
            Generator::Reflection => DihedralMorphism::reflection(at),
        };
        acc = acc.then(&step)?;
    }
    Ok(acc)
}

/// Evaluates a word starting at `[src]`.
pub fn eval_word(src: usize, word: &[Generator]) -> Result<DihedralMorphism, CyclicError> {
    let text: Vec<String> = word.iter().map(|g| format!("{g}")).collect();
    parse_word(src, &text.join(" "))
}

/// `Ψ([n])`: the circle with bivalent vertices `0..=n`. Slot 0 of vertex `i`
/// points to vertex `i + 1`, slot 1 to vertex `i - 1`, so half-edge `2i`
/// and half-edge `2(i+1 mod n+1) + 1` form the edge `e_i`.
pub fn psi_object(n: usize) -> Graph {
    let len = n + 1;
    let edges: Vec<_> = (0..len).map(|i| ((i, 0), ((i + 1) % len, 1))).collect();
    Graph::from_slots(vec![2; len], &edges, &[]).expect("circle layout is consistent")
}

/// `Ψ` on a morphism `[m] → [n]` of the semidihedral category, which is a
/// morphism `[n] → [m]` of its opposite: the graph map `Ψ([n]) → Ψ([m])`.
///
/// For `f` injective, the edge `e_{f(j)}` is sent to `e_j` keeping its
/// direction and every other edge is collapsed; the flip is the reflection
/// `i ↦ -i` of `Ψ([m])` applied afterwards.
pub fn psi_morphism(f: &DihedralMorphism) -> Result<GraphMap, CyclicError> {
    if !f.is_semidihedral() {
        return Err(CyclicError::Degeneracy);
    }
    let (m, n) = (f.src(), f.dst());
    let (src_len, dst_len) = (n + 1, m + 1);
    let base = &f.base;
    let mut half_edge = vec![None; 2 * src_len];
    for j in 0..dst_len {
        let k = base.eval(j as i64).rem_euclid(src_len as i64) as usize;
        half_edge[2 * k] = Some(2 * j);
        half_edge[2 * ((k + 1) % src_len) + 1] = Some(2 * ((j + 1) % dst_len) + 1);
    }
    let vertex = (0..src_len as i64)
        .map(|k| {
            let mut j = -(dst_len as i64);
            while base.eval(j) < k {
                j += 1;
            }
            j.rem_euclid(dst_len as i64) as usize
        })
        .collect();
    let map = GraphMap { vertex, half_edge };
    Ok(if f.flip {
        map.then(&reflection_map(m))
    } else {
        map
    })
}

/// The reflection `i ↦ -i` of `Ψ([n])`, reversing every edge.
fn reflection_map(n: usize) -> GraphMap {
    let len = n + 1;
    let minus = |i: usize| (len - i) % len;
    GraphMap {
        vertex: (0..len).map(minus).collect(),
        half_edge: (0..2 * len)
            .map(|h| Some(2 * minus(h / 2) + 1 - h % 2))
            .collect(),
    }
}

/// One instance of a defining relation of Λ, with both sides evaluated.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub name: String,
    pub lhs: CyclicMorphism,
    pub rhs: CyclicMorphism,
}

impl RelationInstance {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Every instance of the simplicial and cyclic relations whose objects are
/// at most `[max_n]`, plus `τ_n^{n+1} = id`.
pub fn relation_instances(max_n: usize) -> Vec<RelationInstance> {
    type M = CyclicMorphism;
    let d = |i, n| M::face(i, n).expect("index in range");
    let s = |j, n| M::degeneracy(j, n).expect("index in range");
    let t = M::rotation;
    // `a ∘ b`
    let c = |a: &M, b: &M| b.then(a).expect("composable");
    let mut out = Vec::new();
    let mut push = |name: String, lhs: M, rhs: M| out.push(RelationInstance { name, lhs, rhs });
    for n in 0..=max_n {
        push(
            format!("t_{n}^{} = id", n + 1),
            t(n).pow(n + 1).expect("endo"),
            M::identity(n),
        );
    }
    for n in 2..=max_n {
        for j in 0..=n {
            for i in 0..j {
                push(
                    format!("d{j} d{i} = d{i} d{} on [{}]", j - 1, n - 2),
                    c(&d(j, n), &d(i, n - 1)),
                    c(&d(i, n), &d(j - 1, n - 1)),
                );
            }
        }
    }
    for n in 0..max_n {
        for j in 0..=n {
            for i in 0..=j {
                push(
                    format!("s{j} s{i} = s{i} s{} on [{}]", j + 1, n + 2),
                    c(&s(j, n), &s(i, n + 1)),
                    c(&s(i, n), &s(j + 1, n + 1)),
                );
            }
        }
    }
    for n in 1..=max_n {
        // σ_j: [n] → [n-1] after δ_i: [n-1] → [n]
        for j in 0..n {
            for i in 0..=n {
                let lhs = c(&s(j, n - 1), &d(i, n));
                let rhs = if i < j {
                    c(&d(i, n - 1), &s(j - 1, n - 2))
                } else if i == j || i == j + 1 {
                    M::identity(n - 1)
                } else {
                    c(&d(i - 1, n - 1), &s(j, n - 2))
                };
                push(format!("s{j} d{i} on [{}]", n - 1), lhs, rhs);
            }
        }
    }
    for n in 1..=max_n {
        for i in 1..=n {
            push(
                format!("t d{i} = d{} t on [{}]", i - 1, n - 1),
                c(&t(n), &d(i, n)),
                c(&d(i - 1, n), &t(n - 1)),
            );
        }
        push(
            format!("t d0 = d{n} on [{}]", n - 1),
            c(&t(n), &d(0, n)),
            d(n, n),
        );
    }
    for n in 1..=max_n {
        for i in 1..=n {
            push(
                format!("t s{i} = s{} t on [{}]", i - 1, n + 1),
                c(&t(n), &s(i, n)),
                c(&s(i - 1, n), &t(n + 1)),
            );
        }
    }
    for n in 0..max_n {
        push(
            format!("t s0 = s{n} t^2 on [{}]", n + 1),
            c(&t(n), &s(0, n)),
            c(&s(n, n), &t(n + 1).pow(2).expect("endo")),
        );
    }
    out
}
