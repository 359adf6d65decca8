//! Bundled datasets and generated families.

use crate::format::{parse_dataset, Dataset};
use ansular_core::gv::{abelian_group, abelian_group_types, FusionDatum, GroupTable, PointedDatum};

/// Name and canonical JSON of every bundled dataset.
pub const BUNDLED: [(&str, &str); 7] = [
    ("trivial", include_str!("../data/trivial.json")),
    ("z2", include_str!("../data/z2.json")),
    ("semion", include_str!("../data/semion.json")),
    ("z3_dual", include_str!("../data/z3_dual.json")),
    ("z3_square", include_str!("../data/z3_square.json")),
    ("z4", include_str!("../data/z4.json")),
    ("rep_s3", include_str!("../data/rep_s3.json")),
];

pub fn corpus() -> Vec<(&'static str, Dataset)> {
    BUNDLED
        .iter()
        .map(|&(name, text)| (name, parse_dataset(text).expect("bundled datasets parse")))
        .collect()
}

pub fn bundled(name: &str) -> Option<Dataset> {
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_dataset(text).expect("bundled datasets parse"))
}

/// The fusion datum behind a dataset.
pub fn fusion_of(d: &Dataset) -> Option<FusionDatum> {
    match d {
        Dataset::Fusion(f) => Some(f.clone()),
        Dataset::Pointed(p) => ansular_core::gv::pointed_to_fusion(p).ok(),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every valid pointed datum on an abelian group of order at most
/// `max_order` whose twist is a product of the diagonal forms
/// `x ↦ ζ_{2d}^{c x²}` on the cyclic factors `Z/d`, for every `b0`.
pub fn pointed_family(max_order: usize) -> Vec<PointedDatum> {
    let mut out = Vec::new();
    for factors in abelian_group_types(max_order) {
        let group = abelian_group(&factors);
        let m = factors.iter().fold(1u64, |acc, &d| {
            let two_d = 2 * d as u64;
            acc / gcd(acc, two_d) * two_d
        });
        let mut coeffs = vec![0u64; factors.len()];
        loop {
            let exponents: Vec<u64> = (0..group.order())
                .map(|a| {
                    let digits = mixed_radix(a, &factors);
                    digits
                        .iter()
                        .zip(&factors)
                        .zip(&coeffs)
                        .map(|((&x, &d), &c)| c * (x * x) as u64 * (m / (2 * d as u64)))
                        .sum::<u64>()
                        % m
                })
                .collect();
            for b0 in 0..group.order() {
                let p = PointedDatum::new(group.clone(), m, exponents.clone(), b0);
                if p.is_valid() {
                    out.push(p);
                }
            }
            // next coefficient vector, c_i < 2 d_i
            let mut i = 0;
            while i < coeffs.len() {
                coeffs[i] += 1;
                if coeffs[i] < 2 * factors[i] as u64 {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == coeffs.len() {
                break;
            }
        }
    }
    out
}

/// Digits of element `a` of `Z/d_1 × … × Z/d_k`, first factor most
/// significant.
fn mixed_radix(mut a: usize, factors: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; factors.len()];
    for (slot, &d) in digits.iter_mut().zip(factors).rev() {
        *slot = a % d;
        a /= d;
    }
    digits
}

/// A group by name: `s3`, or `zN`, or a product such as `z2xz2`.
pub fn named_group(name: &str) -> Option<GroupTable> {
    let lower = name.to_ascii_lowercase();
    if let Some(k) = lower.strip_prefix('s') {
        let k: usize = k.parse().ok()?;
        return (1..=5).contains(&k).then(|| GroupTable::symmetric(k));
    }
    let factors = lower
        .split('x')
        .map(|f| {
            f.strip_prefix('z')?
                .parse::<usize>()
                .ok()
                .filter(|&d| d >= 1)
        })
        .collect::<Option<Vec<usize>>>()?;
    Some(abelian_group(&factors))
}

/// The fusion datum of `Rep(G)` for the groups we ship one for: `s3`, and
/// every abelian group through its untwisted pointed datum.
pub fn group_fusion(name: &str) -> Option<FusionDatum> {
    if name.eq_ignore_ascii_case("s3") {
        return fusion_of(&bundled("rep_s3")?);
    }
    let g = named_group(name)?;
    if !g.is_abelian() {
        return None;
    }
    ansular_core::gv::pointed_to_fusion(&PointedDatum::untwisted(g, 0)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_by_name() {
        assert_eq!(named_group("s3").unwrap().order(), 6);
        assert_eq!(named_group("z2xz4").unwrap().order(), 8);
        assert!(named_group("q8").is_none());
        assert!(group_fusion("s4").is_none());
    }

    #[test]
    fn family_is_nontrivial() {
        let fam = pointed_family(4);
        assert!(fam.iter().any(|p| p.a0() != 0));
        assert!(fam.iter().any(|p| p.exponents().iter().any(|&e| e != 0)));
    }
}
