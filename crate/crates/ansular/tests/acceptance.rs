//! Acceptance suite: one line per criterion, with its time limit.
//!
//! Expected values are recomputed here by direct loops over the raw data and
//! compared with the library paths.

use ansular::corpus::{corpus, fusion_of, pointed_family};
use ansular::format::Dataset;
use ansular_core::blocks::{
    graph_glue_dim, handlebody_dim, orbit_oracle, pointed_dim, HandlebodySignature,
};
use ansular_core::cyclic::{psi_object, relation_instances, CyclicMorphism, DihedralMorphism};
use ansular_core::graph::{enumerate_reduced, reduced_morphisms, Corolla};
use ansular_core::gv::{pointed_to_fusion, FusionDatum, GroupTable, PointedDatum};
use ansular_core::scalar::{CycMatrix, Cyclotomic, Root};
use ansular_core::torus::torus_rep;
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

/// Largest vertex count of the graphs compared in the gluing criterion.
const GLUE_MAX_VERTICES: usize = 4;

fn closed(g: usize) -> HandlebodySignature {
    HandlebodySignature::closed(g)
}

fn fusion_corpus() -> Vec<(&'static str, FusionDatum)> {
    corpus()
        .into_iter()
        .map(|(n, d)| (n, fusion_of(&d).expect("corpus converts")))
        .collect()
}

fn pointed_corpus() -> Vec<(&'static str, PointedDatum)> {
    corpus()
        .into_iter()
        .filter_map(|(n, d)| match d {
            Dataset::Pointed(p) => Some((n, p)),
            Dataset::Fusion(_) => None,
        })
        .collect()
}

fn genus_one_universality() -> Outcome {
    let all = corpus();
    for (name, d) in &all {
        let f = fusion_of(d).ok_or(format!("{name}: no fusion datum"))?;
        let got = handlebody_dim(&f, &closed(1))
            .map_err(|e| e.to_string())?
            .dimension;
        if got != d.rank() as u64 {
            return Err(format!("{name}: dim {got}, rank {}", d.rank()));
        }
    }
    Ok(format!("{} datasets", all.len()))
}

fn genus_two_formula() -> Outcome {
    let all = fusion_corpus();
    let mut values = Vec::new();
    for (name, d) in &all {
        let t = d.tensor();
        let r = d.rank();
        let mut direct = 0u64;
        for a in 0..r {
            for a2 in 0..r {
                for b in 0..r {
                    direct += t[d.bar(a)][a][b] as u64 * t[d.bar(a2)][a2][d.bar(b)] as u64;
                }
            }
        }
        let got = handlebody_dim(d, &closed(2))
            .map_err(|e| e.to_string())?
            .dimension;
        if got != direct {
            return Err(format!("{name}: coend {got}, double sum {direct}"));
        }
        values.push(format!("{name}={got}"));
    }
    Ok(values.join(" "))
}

fn group_power(g: &GroupTable, a: usize, k: usize) -> usize {
    let mut x = 0;
    for _ in 0..k {
        x = g.table()[x][a];
    }
    x
}

fn pointed_closed_form() -> Outcome {
    let family = pointed_family(8);
    let mut checked = 0;
    for p in &family {
        let g = p.group();
        let d = pointed_to_fusion(p).map_err(|v| format!("{v:?}"))?;
        let a0 = d.kappa();
        for genus in 0..=3 {
            let want = if group_power(g, a0, genus) == a0 {
                (g.order() as u64).pow(genus as u32)
            } else {
                0
            };
            let pointed = pointed_dim(p, &closed(genus))
                .map_err(|e| e.to_string())?
                .dimension;
            let fusion = handlebody_dim(&d, &closed(genus))
                .map_err(|e| e.to_string())?
                .dimension;
            if pointed != want || fusion != want {
                return Err(format!(
                    "|G|={} b0={} g={genus}: closed form {want}, pointed {pointed}, fusion {fusion}",
                    g.order(),
                    p.b0()
                ));
            }
            checked += 1;
        }
    }
    let z3 = pointed_corpus()
        .into_iter()
        .find(|(n, _)| *n == "z3_dual")
        .ok_or("z3_dual missing")?
        .1;
    let zero = pointed_dim(&z3, &closed(2))
        .map_err(|e| e.to_string())?
        .dimension;
    if zero != 0 {
        return Err(format!("Z/3 with a0 != 1 at genus 2: {zero}"));
    }
    Ok(format!(
        "{} data, {checked} cases, Z/3 a0!=1 g=2 -> 0",
        family.len()
    ))
}

fn graph_independence() -> Outcome {
    let mut compared = 0;
    for (name, d) in fusion_corpus().into_iter().filter(|(_, d)| d.rank() <= 4) {
        for legs in 0..=2 {
            let tuples: Vec<Vec<usize>> = (0..d.rank().pow(legs as u32))
                .map(|mut i| {
                    (0..legs)
                        .map(|_| {
                            let l = i % d.rank();
                            i /= d.rank();
                            l
                        })
                        .collect()
                })
                .collect();
            for genus in 0..=2 {
                let graphs = enumerate_reduced(&Corolla::with_legs(legs), genus, GLUE_MAX_VERTICES);
                for labels in &tuples {
                    let want = handlebody_dim(&d, &HandlebodySignature::new(genus, labels.clone()))
                        .map_err(|e| e.to_string())?
                        .dimension;
                    for o in &graphs {
                        let got = graph_glue_dim(&d, o, labels)
                            .map_err(|e| e.to_string())?
                            .dimension;
                        if got != want {
                            return Err(format!(
                                "{name} legs={legs} g={genus} labels={labels:?}: graph {got}, handlebody {want}"
                            ));
                        }
                        compared += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{compared} gluings, graphs up to {GLUE_MAX_VERTICES} vertices"
    ))
}

fn orbits_by_listing(g: &GroupTable, genus: usize) -> u64 {
    let n = g.order();
    let total = n.pow(genus as u32);
    let mut seen = vec![false; total];
    let mut orbits = 0;
    for start in 0..total {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut t = Vec::with_capacity(genus);
        let mut i = start;
        for _ in 0..genus {
            t.push(i % n);
            i /= n;
        }
        for h in 0..n {
            let idx = t
                .iter()
                .rev()
                .fold(0, |acc, &x| acc * n + g.mul(g.mul(h, x), g.inv(h)));
            seen[idx] = true;
        }
    }
    orbits
}

fn hopf_oracle() -> Outcome {
    let s3 = GroupTable::symmetric(3);
    let d = fusion_corpus()
        .into_iter()
        .find(|(n, _)| *n == "rep_s3")
        .ok_or("rep_s3 missing")?
        .1;
    let mut row = Vec::new();
    for genus in 0..=3 {
        let listed = orbits_by_listing(&s3, genus);
        let burnside = orbit_oracle(&s3, genus).map_err(|e| e.to_string())?;
        let fusion = handlebody_dim(&d, &closed(genus))
            .map_err(|e| e.to_string())?
            .dimension;
        if listed != burnside || fusion != burnside {
            return Err(format!(
                "g={genus}: fusion {fusion}, Burnside {burnside}, listing {listed}"
            ));
        }
        row.push(fusion.to_string());
    }
    if row[2] != "11" {
        return Err(format!("genus two gives {}", row[2]));
    }
    Ok(format!("g=0..3: {}", row.join(",")))
}

fn mapping_class_relations() -> Outcome {
    let all = pointed_corpus();
    for (name, p) in &all {
        let rep = torus_rep(p);
        let n = rep.dim();
        let tr = rep.t.mul(&rep.r);
        let rt = rep.r.mul(&rep.t);
        if tr != rt {
            return Err(format!("{name}: TR != RT"));
        }
        if rep.r.mul(&rep.r) != CycMatrix::identity(n) {
            return Err(format!("{name}: R^2 != 1"));
        }
        for i in 0..n {
            for j in 0..n {
                let a = rep.basis[i];
                let want = if i == j {
                    Cyclotomic::root(Root::new(p.exponents()[a] as i64, p.root_order()))
                } else {
                    Cyclotomic::zero()
                };
                if rep.t.get(i, j) != &want {
                    return Err(format!("{name}: T[{i}][{j}] is not q({a})"));
                }
            }
        }
    }
    Ok(format!("{} pointed datasets", all.len()))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn dihedral_suite() -> Outcome {
    let relations = relation_instances(5);
    if let Some(r) = relations.iter().find(|r| !r.holds()) {
        return Err(format!("relation {} fails: {} vs {}", r.name, r.lhs, r.rhs));
    }
    for n in 0..=3 {
        for m in 0..=3 {
            for f in CyclicMorphism::homs(n, m, false) {
                if f.reversal().reversal() != f {
                    return Err(format!("reversal twice moves {f}"));
                }
                for k in 0..=3 {
                    for g in CyclicMorphism::homs(m, k, false) {
                        let whole = f.then(&g).map_err(|e| e.to_string())?.reversal();
                        let parts = f
                            .reversal()
                            .then(&g.reversal())
                            .map_err(|e| e.to_string())?;
                        if whole != parts {
                            return Err(format!("reversal does not respect {f} then {g}"));
                        }
                    }
                }
            }
        }
    }
    for n in 0..=5 {
        let autos = DihedralMorphism::homs(n, n, true)
            .into_iter()
            .filter(DihedralMorphism::is_iso)
            .count();
        if autos != 2 * (n + 1) {
            return Err(format!("|Aut [{n}]| = {autos}"));
        }
    }
    for n in 0..=3 {
        for m in 0..=3 {
            let arrows = DihedralMorphism::homs(m, n, true).len();
            let graphs = reduced_morphisms(&psi_object(n), &psi_object(m)).len();
            let formula = 2 * (n + 1) * binomial(n, m);
            if arrows != graphs || arrows != formula {
                return Err(format!(
                    "[{m}]->[{n}]: {arrows} arrows, {graphs} graph maps, {formula} expected"
                ));
            }
        }
    }
    Ok(format!("{} relation instances", relations.len()))
}

fn validation_completeness() -> Outcome {
    for (name, d) in fusion_corpus() {
        let v = d.validate();
        if !v.is_empty() {
            return Err(format!("{name}: {}", v[0]));
        }
    }
    let d = fusion_corpus()
        .into_iter()
        .find(|(n, _)| *n == "rep_s3")
        .ok_or("rep_s3 missing")?
        .1;
    let mut total = 0;
    let mut accepted = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for delta in [1i64, -1] {
                    let v = d.n(a, b, c) as i64 + delta;
                    if v < 0 {
                        continue;
                    }
                    total += 1;
                    let mut m = d.clone();
                    m.set_n(a, b, c, v as u32);
                    if m.is_valid() {
                        accepted.push(format!("N[{a}][{b}][{c}]{delta:+}"));
                    }
                }
            }
        }
    }
    if accepted.is_empty() {
        Ok(format!("{total} mutations all rejected"))
    } else {
        Err(format!(
            "{} of {total} mutations satisfy every fusion axiom: {}",
            accepted.len(),
            accepted.join(", ")
        ))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "genus-one universality",
            Duration::from_secs(1),
            genus_one_universality,
        ),
        (
            "genus-two formula",
            Duration::from_secs(1),
            genus_two_formula,
        ),
        (
            "pointed closed form",
            Duration::from_secs(5),
            pointed_closed_form,
        ),
        (
            "graph independence",
            Duration::from_secs(30),
            graph_independence,
        ),
        ("group orbit oracle", Duration::from_secs(1), hopf_oracle),
        (
            "mapping-class relations",
            Duration::from_secs(1),
            mapping_class_relations,
        ),
        (
            "dihedral category suite",
            Duration::from_secs(30),
            dihedral_suite,
        ),
        (
            "validation completeness",
            Duration::from_secs(30),
            validation_completeness,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {}  {}  {name}  ({:.3}s, limit {}s)  {detail}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
