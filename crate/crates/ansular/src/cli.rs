//! The `ansular` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for unreadable or malformed input, 3 when a sum would exceed the budget.

use crate::corpus::{bundled, corpus, fusion_of, group_fusion, named_group, BUNDLED};
use crate::format::{graph_to_json, parse_dataset, parse_graph, to_canonical, Dataset};
use ansular_core::blocks::{
    glue_graph, handlebody_dim, orbit_oracle, pointed_dim, HandlebodySignature,
};
use ansular_core::cyclic::{
    format_word, parse_word, psi_morphism, psi_object, relation_instances, CyclicMorphism,
    DihedralMorphism,
};
use ansular_core::graph::{enumerate_reduced, isomorphisms, reduced_morphisms, Corolla};
use ansular_core::gv::{is_r_category, pointed_to_fusion, PointedDatum};
use ansular_core::scalar::{Cyclotomic, Root};
use ansular_core::torus::torus_rep;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ansular",
    version,
    about = "Blocks, torus actions and graph combinatorics from ribbon GV data"
)]
pub struct Cli {
    /// Print canonical JSON instead of text tables.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a dataset against the fusion or pointed axioms.
    Validate(DatasetArg),
    /// Dimension of a handlebody block.
    Dims(DimsArgs),
    /// T and R on the solid-torus block of a pointed dataset.
    TorusRep(TorusArgs),
    /// Enumerate reduced connected graphs over a corolla.
    Graphs(GraphsArgs),
    /// Morphisms of the dihedral category.
    #[command(subcommand)]
    Dihedral(DihedralCommand),
    /// Cross-checks against independent oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// List the bundled datasets.
    Corpus,
}

#[derive(Args, Debug)]
pub struct DatasetArg {
    /// A dataset file, or the name of a bundled dataset.
    #[arg(long)]
    pub dataset: String,
}

#[derive(Args, Debug)]
pub struct DimsArgs {
    #[command(flatten)]
    pub dataset: DatasetArg,
    #[arg(short = 'g', long = "genus", default_value_t = 0)]
    pub genus: usize,
    /// Boundary labels, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub labels: Vec<usize>,
    /// Glue along this graph instead; its first Betti number is the genus.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Largest number of label tuples a sum may range over.
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u64,
}

#[derive(Args, Debug)]
pub struct TorusArgs {
    #[command(flatten)]
    pub dataset: DatasetArg,
    /// Run the relation checks and fail on any violation.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct GraphsArgs {
    #[arg(long, default_value_t = 0)]
    pub legs: usize,
    #[arg(short = 'g', long = "genus", default_value_t = 0)]
    pub genus: usize,
    /// Largest number of vertices.
    #[arg(long = "max-n", default_value_t = 6)]
    pub max_n: usize,
}

#[derive(Subcommand, Debug)]
pub enum DihedralCommand {
    /// Normalize a morphism given as a word or a value list; without one, run
    /// the relation suite.
    Check {
        /// A word such as "d3 t^2 r", or values such as "[1]->[2] (0,2) r".
        morphism: Option<String>,
        /// Source object of a word.
        #[arg(long)]
        src: Option<usize>,
        #[arg(long = "max-n", default_value_t = 5)]
        max_n: usize,
    },
    /// List the morphisms [src] -> [dst].
    Homs {
        #[arg(long)]
        src: usize,
        #[arg(long)]
        dst: usize,
        /// Only morphisms of the degeneracy-free part.
        #[arg(long)]
        injective: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Handlebody blocks of Rep(G) against conjugation-orbit counts.
    Compare {
        #[arg(long)]
        group: String,
        #[arg(long = "max-genus", default_value_t = 3)]
        max_genus: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("budget exceeded: {terms} terms, budget {budget}")]
    Budget { terms: String, budget: u64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Budget { .. } => EXIT_BUDGET,
        }
    }
}

/// One line of a check report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub check: String,
    pub witness: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Record {
    fn new(check: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Record {
            check: check.into(),
            witness: String::new(),
            pass: expected == got,
            expected,
            got,
        }
    }

    fn failure(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Record {
            check: check.into(),
            witness: witness.into(),
            expected: "none".into(),
            got: "violation".into(),
            pass: false,
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "expected": self.expected,
            "got": self.got,
            "pass": self.pass,
            "witness": self.witness,
        })
    }
}

/// What a command produced.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub records: Vec<Record>,
}

impl Output {
    fn plain(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            records: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }
}

/// Columns padded to a common width, separated by two spaces.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', width[c] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn records_table(records: &[Record]) -> String {
    let mut rows = vec![vec![
        "check".to_string(),
        "expected".into(),
        "got".into(),
        "status".into(),
        "witness".into(),
    ]];
    for r in records {
        rows.push(vec![
            r.check.clone(),
            r.expected.clone(),
            r.got.clone(),
            if r.pass { "pass" } else { "FAIL" }.into(),
            r.witness.clone(),
        ]);
    }
    table(&rows)
}

fn records_json(records: &[Record]) -> Value {
    Value::Array(records.iter().map(Record::to_json).collect())
}

fn status(records: &[Record]) -> &'static str {
    if records.iter().all(|r| r.pass) {
        "pass"
    } else {
        "fail"
    }
}

pub fn load_dataset(spec: &str) -> Result<Dataset, CliError> {
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return parse_dataset(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())));
    }
    bundled(spec).ok_or_else(|| {
        let names: Vec<&str> = BUNDLED.iter().map(|(n, _)| *n).collect();
        CliError::Input(format!(
            "no file or bundled dataset named {spec:?} (bundled: {})",
            names.join(", ")
        ))
    })
}

fn check_budget(rank: usize, exponent: usize, budget: u64) -> Result<(), CliError> {
    let terms = (rank as u128).checked_pow(exponent as u32);
    match terms {
        Some(t) if t <= budget as u128 => Ok(()),
        Some(t) => Err(CliError::Budget {
            terms: t.to_string(),
            budget,
        }),
        None => Err(CliError::Budget {
            terms: format!("{rank}^{exponent}"),
            budget,
        }),
    }
}

fn root_pair(r: Root) -> Value {
    json!([r.exponent(), r.order()])
}

fn validate(dataset: &str) -> Result<Output, CliError> {
    let d = load_dataset(dataset)?;
    let mut records = Vec::new();
    let mut facts = Vec::new();
    let fusion = match &d {
        Dataset::Fusion(f) => Some(f.clone()),
        Dataset::Pointed(p) => {
            let v = p.validate();
            if v.is_empty() {
                records.push(Record::new("pointed axioms", "ok", "ok"));
                facts.push(("a0".to_string(), p.a0().to_string()));
            }
            for x in &v {
                records.push(Record::failure("pointed axioms", x.to_string()));
            }
            pointed_to_fusion(p).ok()
        }
    };
    if let Some(f) = &fusion {
        let v = f.validate();
        if v.is_empty() {
            records.push(Record::new("fusion axioms", "ok", "ok"));
            facts.push((
                "r-category".into(),
                if is_r_category(f) { "yes" } else { "no" }.into(),
            ));
        }
        for x in &v {
            records.push(Record::failure("fusion axioms", x.to_string()));
        }
    }
    facts.insert(0, ("rank".into(), d.rank().to_string()));
    let mut text = table(
        &facts
            .iter()
            .map(|(k, v)| vec![k.clone(), v.clone()])
            .collect::<Vec<_>>(),
    );
    text.push('\n');
    text.push_str(&records_table(&records));
    let json = json!({
        "facts": facts.iter().cloned().collect::<BTreeMap<_, _>>(),
        "records": records_json(&records),
        "status": status(&records),
    });
    Ok(Output {
        text,
        json,
        records,
    })
}

fn dims(args: &DimsArgs) -> Result<Output, CliError> {
    let d = load_dataset(&args.dataset.dataset)?;
    let invalid =
        |what: &str| CliError::Input(format!("dataset is not valid ({what}); run validate"));
    let (signature, dimension, method) = if let Some(path) = &args.graph {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let g =
            parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        if !g.is_connected() {
            return Err(CliError::Input("graph is not connected".into()));
        }
        let f = fusion_of(&d)
            .filter(|f| f.is_valid())
            .ok_or_else(|| invalid("fusion"))?;
        check_budget(f.rank(), g.edge_count(), args.budget)?;
        let dim = glue_graph(&f, &g, &args.labels).map_err(|e| CliError::Input(e.to_string()))?;
        let method = format!("graph(V={},E={})", g.vertex_count(), g.edge_count());
        (
            HandlebodySignature::new(g.betti(), args.labels.clone()),
            dim,
            method,
        )
    } else {
        let s = HandlebodySignature::new(args.genus, args.labels.clone());
        let r = match &d {
            Dataset::Pointed(p) => {
                if !p.is_valid() {
                    return Err(invalid("pointed"));
                }
                pointed_dim(p, &s)
            }
            Dataset::Fusion(f) => {
                if !f.is_valid() {
                    return Err(invalid("fusion"));
                }
                check_budget(f.rank(), s.genus, args.budget)?;
                handlebody_dim(f, &s)
            }
        }
        .map_err(|e| CliError::Input(e.to_string()))?;
        (s, r.dimension, r.method.to_string())
    };
    let text = table(&[
        vec!["signature".into(), signature.to_string()],
        vec!["dimension".into(), dimension.to_string()],
        vec!["method".into(), method.clone()],
    ]);
    let json = json!({
        "dimension": dimension,
        "method": method,
        "signature": {"genus": signature.genus, "labels": signature.labels},
    });
    Ok(Output::plain(text, json))
}

fn matrix_grid(dim: usize, entry: impl Fn(usize, usize) -> Option<Root>) -> String {
    let rows: Vec<Vec<String>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| entry(i, j).map_or(".".to_string(), |r| r.to_string()))
                .collect()
        })
        .collect();
    table(&rows).lines().map(|l| format!("  {l}\n")).collect()
}

fn torus(args: &TorusArgs) -> Result<Output, CliError> {
    let p: PointedDatum = match load_dataset(&args.dataset.dataset)? {
        Dataset::Pointed(p) => p,
        Dataset::Fusion(_) => {
            return Err(CliError::Input("torus-rep needs a pointed dataset".into()));
        }
    };
    if !p.is_valid() {
        return Err(CliError::Input(
            "dataset is not valid (pointed); run validate".into(),
        ));
    }
    let rep = torus_rep(&p);
    let n = rep.dim();
    let mut rows = vec![vec![
        "a".to_string(),
        "dual".into(),
        "T".into(),
        "R coefficient".into(),
    ]];
    for i in 0..n {
        rows.push(vec![
            rep.basis[i].to_string(),
            rep.r_permutation[i].to_string(),
            rep.t_diagonal[i].to_string(),
            rep.r_coefficients[i].to_string(),
        ]);
    }
    let mut text = table(&rows);
    text.push_str("\nT\n");
    text.push_str(&matrix_grid(n, |i, j| (i == j).then(|| rep.t_diagonal[i])));
    text.push_str("R\n");
    text.push_str(&matrix_grid(n, |i, j| {
        (rep.r_permutation[j] == i).then(|| rep.r_coefficients[j])
    }));
    let mut records = Vec::new();
    if args.check {
        let diag_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let want = if i == j {
                    Cyclotomic::root(p.q(rep.basis[i]))
                } else {
                    Cyclotomic::zero()
                };
                rep.t.get(i, j) == &want
            })
        });
        records.push(Record::new("T = diag(q)", true, diag_ok));
        records.push(Record::new("TR = RT", true, rep.commutes()));
        records.push(Record::new("R^2 = 1", true, rep.r_is_involution()));
        let bad = rep.homomorphism_counterexample(5);
        let mut r = Record::new(
            "words of length <= 5",
            "none",
            if bad.is_some() {
                "counterexample"
            } else {
                "none"
            },
        );
        if let Some(w) = bad {
            r.witness = format!("{w:?}");
        }
        records.push(r);
        text.push('\n');
        text.push_str(&records_table(&records));
    }
    let json = json!({
        "R": {
            "coefficients": rep.r_coefficients.iter().map(|&r| root_pair(r)).collect::<Vec<_>>(),
            "permutation": rep.r_permutation,
        },
        "T": rep.t_diagonal.iter().map(|&r| root_pair(r)).collect::<Vec<_>>(),
        "basis": rep.basis,
        "records": records_json(&records),
        "status": status(&records),
    });
    Ok(Output {
        text,
        json,
        records,
    })
}

fn graphs(args: &GraphsArgs) -> Result<Output, CliError> {
    let found = enumerate_reduced(&Corolla::with_legs(args.legs), args.genus, args.max_n);
    let mut rows = vec![vec![
        "#".to_string(),
        "V".into(),
        "E".into(),
        "graph".into(),
    ]];
    let mut list = Vec::new();
    for (i, o) in found.iter().enumerate() {
        let g = o.graph();
        let j = graph_to_json(g);
        rows.push(vec![
            i.to_string(),
            g.vertex_count().to_string(),
            g.edge_count().to_string(),
            j.to_string(),
        ]);
        list.push(j);
    }
    let mut text = format!(
        "{} reduced graphs, {} legs, genus {}, at most {} vertices\n\n",
        found.len(),
        args.legs,
        args.genus,
        args.max_n
    );
    text.push_str(&table(&rows));
    let json = json!({
        "count": found.len(),
        "genus": args.genus,
        "graphs": list,
        "legs": args.legs,
        "max_n": args.max_n,
    });
    Ok(Output::plain(text, json))
}

/// Reads `[n]->[m] (v0,...,vn)`, optionally followed by `r`.
fn parse_values(text: &str) -> Result<DihedralMorphism, CliError> {
    let bad = || CliError::Input(format!("cannot read {text:?} as [n]->[m] (v0,...,vn) [r]"));
    let text = text.trim();
    let (body, flip) = match text.strip_suffix('r') {
        Some(rest) if rest.ends_with(|c: char| c.is_whitespace() || c == ')') => {
            (rest.trim_end(), true)
        }
        _ => (text, false),
    };
    let (objects, values) = body.split_once('(').ok_or_else(bad)?;
    let values = values.strip_suffix(')').ok_or_else(bad)?;
    let (src, dst) = objects.trim().split_once("->").ok_or_else(bad)?;
    let object = |s: &str| -> Result<usize, CliError> {
        s.trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .and_then(|s| s.parse().ok())
            .ok_or_else(bad)
    };
    let values = values
        .split(',')
        .map(|v| v.trim().parse::<i64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    let base = CyclicMorphism::new(object(src)?, object(dst)?, values)
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(DihedralMorphism::new(base, flip))
}

fn show_dihedral(f: &DihedralMorphism) -> String {
    let mut s = f.base.to_string();
    if f.flip {
        s.push_str(" r");
    }
    s
}

fn dihedral_morphism(text: &str, src: Option<usize>) -> Result<Output, CliError> {
    let f = if text.contains("->") {
        parse_values(text)?
    } else {
        let src = src.ok_or_else(|| CliError::Input("a word needs --src".into()))?;
        parse_word(src, text).map_err(|e| CliError::Input(e.to_string()))?
    };
    let word = format_word(&f.word());
    let values = show_dihedral(&f);
    let records = vec![
        Record::new(
            "word round-trip",
            &values,
            parse_word(f.src(), &word)
                .map(|g| show_dihedral(&g))
                .unwrap_or_default(),
        ),
        Record::new(
            "values round-trip",
            &values,
            parse_values(&values)
                .map(|g| show_dihedral(&g))
                .unwrap_or_default(),
        ),
    ];
    let mut rows = vec![
        vec!["word".to_string(), word.clone()],
        vec!["values".into(), values.clone()],
        vec!["injective".into(), f.is_semidihedral().to_string()],
        vec!["iso".into(), f.is_iso().to_string()],
    ];
    let mut json = json!({
        "dst": f.dst(),
        "flip": f.flip,
        "injective": f.is_semidihedral(),
        "iso": f.is_iso(),
        "records": records_json(&records),
        "src": f.src(),
        "status": status(&records),
        "values": f.base.values(),
        "word": word,
    });
    if f.is_semidihedral() {
        let psi = psi_morphism(&f).map_err(|e| CliError::Input(e.to_string()))?;
        rows.push(vec![
            format!("psi [{}]->[{}]", f.dst(), f.src()),
            format!("vertices {:?}", psi.vertex),
        ]);
        json["psi_vertices"] = json!(psi.vertex);
    }
    let mut text = table(&rows);
    text.push('\n');
    text.push_str(&records_table(&records));
    Ok(Output {
        text,
        json,
        records,
    })
}

/// A relation name with its object dropped and every index replaced by `i`.
fn relation_family(name: &str) -> String {
    let name = name.split(" on [").next().unwrap_or(name);
    let mut out = String::new();
    for c in name.chars() {
        if c.is_ascii_digit() {
            if !out.ends_with('i') {
                out.push('i');
            }
        } else {
            out.push(c);
        }
    }
    out
}

fn dihedral_suite(max_n: usize) -> Output {
    let mut records = Vec::new();
    let mut by_name: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for r in relation_instances(max_n) {
        let e = by_name.entry(relation_family(&r.name)).or_default();
        e.0 += 1;
        e.1 += usize::from(r.holds());
    }
    for (name, (total, held)) in by_name {
        records.push(Record::new(format!("relation {name}"), total, held));
    }
    for n in 0..=max_n {
        let autos = DihedralMorphism::homs(n, n, true)
            .into_iter()
            .filter(DihedralMorphism::is_iso)
            .count();
        records.push(Record::new(format!("|Aut [{n}]|"), 2 * (n + 1), autos));
    }
    let small = max_n.min(3);
    for n in 0..=small {
        for m in 0..=small {
            let arrows = DihedralMorphism::homs(m, n, true).len();
            let graphs = reduced_morphisms(&psi_object(n), &psi_object(m)).len();
            records.push(Record::new(
                format!("hom([{m}],[{n}]) vs graph maps"),
                graphs,
                arrows,
            ));
        }
        let graph_autos = isomorphisms(&psi_object(n), &psi_object(n)).len();
        records.push(Record::new(
            format!("graph automorphisms of psi[{n}]"),
            2 * (n + 1),
            graph_autos,
        ));
    }
    let mut reversal_ok = true;
    for n in 0..=small {
        for m in 0..=small {
            for f in CyclicMorphism::homs(n, m, false) {
                reversal_ok &= f.reversal().reversal() == f;
            }
        }
    }
    records.push(Record::new("reversal is an involution", true, reversal_ok));
    let text = records_table(&records);
    let json = json!({
        "max_n": max_n,
        "records": records_json(&records),
        "status": status(&records),
    });
    Output {
        text,
        json,
        records,
    }
}

fn dihedral_homs(src: usize, dst: usize, injective: bool) -> Output {
    let homs = DihedralMorphism::homs(src, dst, injective);
    let mut rows = vec![vec!["word".to_string(), "values".into()]];
    let mut list = Vec::new();
    for f in &homs {
        let word = format_word(&f.word());
        rows.push(vec![word.clone(), show_dihedral(f)]);
        list.push(json!({"flip": f.flip, "values": f.base.values(), "word": word}));
    }
    let mut text = format!("{} morphisms [{src}] -> [{dst}]\n\n", homs.len());
    text.push_str(&table(&rows));
    Output::plain(
        text,
        json!({"count": homs.len(), "dst": dst, "morphisms": list, "src": src}),
    )
}

fn oracle_compare(group: &str, max_genus: usize, budget: u64) -> Result<Output, CliError> {
    let g =
        named_group(group).ok_or_else(|| CliError::Input(format!("unknown group {group:?}")))?;
    let d = group_fusion(group)
        .ok_or_else(|| CliError::Input(format!("no fusion data shipped for {group:?}")))?;
    check_budget(d.rank(), max_genus, budget)?;
    check_budget(g.order(), max_genus, budget)?;
    let mut rows = vec![vec![
        "g".to_string(),
        "fusion".into(),
        "orbit".into(),
        "status".into(),
    ]];
    let mut records = Vec::new();
    let mut list = Vec::new();
    for genus in 0..=max_genus {
        let fusion = handlebody_dim(&d, &HandlebodySignature::closed(genus))
            .map_err(|e| CliError::Input(e.to_string()))?
            .dimension;
        let orbit = orbit_oracle(&g, genus).map_err(|e| CliError::Input(e.to_string()))?;
        let r = Record::new(format!("g={genus}"), orbit, fusion);
        rows.push(vec![
            genus.to_string(),
            fusion.to_string(),
            orbit.to_string(),
            if r.pass { "pass" } else { "FAIL" }.into(),
        ]);
        list.push(json!({"fusion": fusion, "genus": genus, "orbit": orbit, "pass": r.pass}));
        records.push(r);
    }
    let json = json!({"group": group, "rows": list, "status": status(&records)});
    Ok(Output {
        text: table(&rows),
        json,
        records,
    })
}

fn list_corpus() -> Output {
    let mut rows = vec![vec![
        "name".to_string(),
        "kind".into(),
        "rank".into(),
        "kappa".into(),
        "valid".into(),
    ]];
    let mut list = Vec::new();
    for (name, d) in corpus() {
        let kind = match d {
            Dataset::Fusion(_) => "fusion",
            Dataset::Pointed(_) => "pointed",
        };
        let f = fusion_of(&d);
        let valid = f.as_ref().is_some_and(|f| f.is_valid());
        let kappa = f.map(|f| f.kappa()).unwrap_or_default();
        rows.push(vec![
            name.into(),
            kind.into(),
            d.rank().to_string(),
            kappa.to_string(),
            valid.to_string(),
        ]);
        list.push(json!({"kappa": kappa, "kind": kind, "name": name, "rank": d.rank(), "valid": valid, "json": to_canonical(&d).trim_end()}));
    }
    Output::plain(table(&rows), Value::Array(list))
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Validate(a) => validate(&a.dataset),
        Command::Dims(a) => dims(a),
        Command::TorusRep(a) => torus(a),
        Command::Graphs(a) => graphs(a),
        Command::Dihedral(DihedralCommand::Check {
            morphism: Some(m),
            src,
            ..
        }) => dihedral_morphism(m, *src),
        Command::Dihedral(DihedralCommand::Check {
            morphism: None,
            max_n,
            ..
        }) => Ok(dihedral_suite(*max_n)),
        Command::Dihedral(DihedralCommand::Homs {
            src,
            dst,
            injective,
        }) => Ok(dihedral_homs(*src, *dst, *injective)),
        Command::Oracle(OracleCommand::Compare {
            group,
            max_genus,
            budget,
        }) => oracle_compare(group, *max_genus, *budget),
        Command::Corpus => Ok(list_corpus()),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let rendered = if cli.json {
                let mut s = serde_json::to_string_pretty(&output.json).expect("output serializes");
                s.push('\n');
                s
            } else {
                output.text.clone()
            };
            let _ = out.write_all(rendered.as_bytes());
            if output.passed() {
                EXIT_PASS
            } else {
                EXIT_CHECK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
