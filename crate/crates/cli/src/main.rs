//! Single entry point for the poset invariant toolkit. Output is
//! byte-deterministic given identical inputs and flags; `--json` emits the
//! documented schemas. Exit codes: 0 success, 1 domain error, 2 usage.

mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use poset_forge::canon::{canonical_form, diag_conjugate_test, orbit_invariant, PatternMatrix};
use poset_forge::cocycle::{cohomology_structure, MultCochain};
use poset_forge::complex::homology;
use poset_forge::deform::{
    deformations_isomorphic_with_limit, is_trivial_deformation, recognize_incidence,
    DeformedAlgebra, RecognizedOrder,
};
use poset_forge::error::{Error, Result};
use poset_forge::field::{Field, FieldClass, Gf, Rationals};
use poset_forge::poset::{Poset, DEFAULT_AUTOMORPHISM_LIMIT, DEFAULT_ENUMERATION_LIMIT};
use poset_forge::tensor::{k0_table, tensor, undeformed_semigroup_with_limit};
use poset_forge::thin::{
    accessibility_chain, classify_thin_with_limit, reps_isomorphic, submodule_lattice, StepKind,
    ThinRep,
};

#[derive(Parser)]
#[command(name = "poset-forge", version, about = "Exact invariants of finite posets and their incidence algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Poset structure, homology and cohomology
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Deformations of incidence algebras
    #[command(subcommand)]
    Deform(DeformCmd),
    /// Thin representations
    #[command(subcommand)]
    Thin(ThinCmd),
    /// Diagonal-conjugation canonical forms
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Grothendieck ring of a meet-semilattice
    #[command(subcommand)]
    K0(K0Cmd),
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Elements, covers and connectivity
    Info {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Integral homology of the order complex, one line per degree
    Homology {
        file: PathBuf,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Structure of H^n(Delta(P), K*)
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Cayley table of the closed subposets under wedge
    Semigroup {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Clone)]
enum DeformCmd {
    /// Build I_lambda(P,K) from a degree-2 cochain and verify associativity
    Build {
        poset: PathBuf,
        cocycle: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide triviality of the deformation class
    Trivial {
        poset: PathBuf,
        cocycle: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide isomorphism of two deformations of the same poset
    Iso {
        poset: PathBuf,
        cocycle_a: PathBuf,
        cocycle_b: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Recognize a structure-constant table as a deformed incidence algebra
    Recognize {
        table: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ThinCmd {
    /// Complete catalogue of thin representations over F_q
    Classify {
        poset: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Isomorphism of two representations, with the rescaling witness
    Iso {
        rep1: PathBuf,
        rep2: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Tensor product on the (support, cocycle) invariant
    Tensor {
        rep1: PathBuf,
        rep2: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Accessibility chain down to a simple module
    Access {
        rep: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Submodule lattice of the projective at an element
    Sublattice {
        poset: PathBuf,
        element: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum MatrixCmd {
    /// Canonical form under diagonal conjugation
    Canon {
        file: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Pattern graph and cycle-holonomy orbit invariant
    Orbit {
        file: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide diagonal conjugacy of two matrices
    Conj {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        field: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum K0Cmd {
    /// Meet table of a meet-semilattice (the K_0 multiplication table)
    Table {
        poset: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn enumeration_limit() -> usize {
    std::env::var("POSET_FORGE_MAX_ELEMENTS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_LIMIT)
}

fn automorphism_limit() -> usize {
    std::env::var("POSET_FORGE_MAX_ELEMENTS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_AUTOMORPHISM_LIMIT)
}

fn finite_field(spec: &str) -> Result<Gf> {
    match FieldClass::parse(spec)? {
        FieldClass::Finite { q } => Gf::new(q),
        _ => Err(Error::InvalidField(format!("`{spec}`: a finite field q is required here"))),
    }
}

/// Runs a closure for either concrete field; symbolic specs are rejected.
fn with_concrete_field(
    spec: &str,
    fin: impl FnOnce(Gf) -> Result<()>,
    rat: impl FnOnce(Rationals) -> Result<()>,
) -> Result<()> {
    match FieldClass::parse(spec)? {
        FieldClass::Finite { q } => fin(Gf::new(q)?),
        FieldClass::Rationals => rat(Rationals),
        FieldClass::Symbolic { .. } => Err(Error::SymbolicFieldUnsupported),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Poset(cmd) => run_poset(cmd),
        Command::Deform(cmd) => run_deform(cmd),
        Command::Thin(cmd) => run_thin(cmd),
        Command::Matrix(cmd) => run_matrix(cmd),
        Command::K0(cmd) => run_k0(cmd),
    }
}

fn covers_of(p: &Poset) -> Vec<(String, String)> {
    p.hasse_covers()
        .into_iter()
        .map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
        .collect()
}

fn run_poset(cmd: PosetCmd) -> Result<()> {
    match cmd {
        PosetCmd::Info { file, json } => {
            let p = io::load_poset(&file)?;
            let covers = covers_of(&p);
            if json {
                println!(
                    "{}",
                    json!({
                        "elements": p.elements(),
                        "covers": covers,
                        "connected": p.is_connected(),
                        "components": p.components().len(),
                    })
                );
            } else {
                println!("elements: {}", p.elements().join(" "));
                let covers: Vec<String> =
                    covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
                println!("covers: {}", covers.join(" "));
                println!("connected: {}", p.is_connected());
            }
            Ok(())
        }
        PosetCmd::Homology { file, max_degree, json } => {
            let p = io::load_poset(&file)?;
            let complex = poset_forge::complex::OrderComplex::new(p.clone());
            let top = complex.top_degree().max(0) as usize;
            let max = max_degree.unwrap_or(top);
            let groups: Vec<_> = (0..=max).map(|n| homology(&p, n)).collect();
            if json {
                let arr: Vec<_> = groups
                    .iter()
                    .enumerate()
                    .map(|(n, h)| {
                        json!({
                            "degree": n,
                            "rank": h.rank,
                            "torsion": h.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!("{}", json!({ "homology": arr }));
            } else {
                for (n, h) in groups.iter().enumerate() {
                    println!("H_{n} = {h}");
                }
            }
            Ok(())
        }
        PosetCmd::Cohomology { file, degree, field, json } => {
            let p = io::load_poset(&file)?;
            let class = FieldClass::parse(&field)?;
            let expr = cohomology_structure(&p, degree, &class)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "degree": degree,
                        "field": field,
                        "unit_rank": expr.unit_rank,
                        "torsion": expr.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                        "order": expr.order().map(|o| o.to_string()),
                    })
                );
            } else {
                println!("H^{degree} = {expr}");
            }
            Ok(())
        }
        PosetCmd::Semigroup { file, json } => {
            let p = io::load_poset(&file)?;
            let sg = undeformed_semigroup_with_limit(&p, enumeration_limit())?;
            if json {
                let subs: Vec<_> = sg
                    .subposets
                    .iter()
                    .map(|s| {
                        json!({
                            "members": s.members().iter().map(|&i| p.label(i)).collect::<Vec<_>>(),
                            "rel": s.strict_pairs().iter().map(|&(a, b)| [p.label(a), p.label(b)]).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!("{}", json!({ "subposets": subs, "table": sg.table }));
            } else {
                println!("closed subposets: {}", sg.subposets.len());
                for (i, s) in sg.subposets.iter().enumerate() {
                    let members: Vec<&str> =
                        s.members().iter().map(|&x| p.label(x)).collect();
                    let rel: Vec<String> = s
                        .strict_pairs()
                        .iter()
                        .map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b)))
                        .collect();
                    println!("S{i}: {{{}}} rel {{{}}}", members.join(" "), rel.join(" "));
                }
                println!("table:");
                for row in &sg.table {
                    let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                    println!("{}", cells.join(" "));
                }
            }
            Ok(())
        }
    }
}

fn cochain_lines<F: Field>(c: &MultCochain<F>, p: &Poset, f: &F) -> Vec<String> {
    c.values()
        .filter(|(_, v)| !f.is_one(v))
        .map(|(chain, v)| {
            let labels: Vec<&str> = chain.iter().map(|&i| p.label(i)).collect();
            format!("{} : {}", labels.join(" "), f.format(v))
        })
        .collect()
}

fn run_deform_generic<F: Field>(cmd: DeformCmd, field: F) -> Result<()> {
    match cmd {
        DeformCmd::Build { poset, cocycle, json, .. } => {
            let p = io::load_poset(&poset)?;
            let lambda = io::load_cochain(&p, &field, &cocycle, 2)?;
            let alg = DeformedAlgebra::build(p.clone(), lambda)?;
            let unit = alg.unit();
            if json {
                let unit: Vec<_> = alg
                    .intervals()
                    .iter()
                    .zip(unit.iter())
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(&(x, y), c)| json!([p.label(x), p.label(y), field.format(c)]))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "dimension": alg.dim(),
                        "associative": true,
                        "unit": unit,
                    })
                );
            } else {
                println!("dimension: {}", alg.dim());
                println!("associative: true");
                let parts: Vec<String> = alg
                    .intervals()
                    .iter()
                    .zip(unit.iter())
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(&(x, _), c)| format!("{} f[{},{}]", field.format(c), p.label(x), p.label(x)))
                    .collect();
                println!("unit: {}", parts.join(" + "));
            }
            Ok(())
        }
        DeformCmd::Trivial { poset, cocycle, json, .. } => {
            let p = io::load_poset(&poset)?;
            let lambda = io::load_cochain(&p, &field, &cocycle, 2)?;
            let alg = DeformedAlgebra::build(p.clone(), lambda)?;
            let (trivial, witness) = is_trivial_deformation(&alg)?;
            if json {
                let witness_lines = witness.as_ref().map(|w| cochain_lines(w, &p, &field));
                println!("{}", json!({ "trivial": trivial, "witness": witness_lines }));
            } else {
                println!("trivial: {trivial}");
                if let Some(w) = witness {
                    for line in cochain_lines(&w, &p, &field) {
                        println!("alpha {line}");
                    }
                }
            }
            Ok(())
        }
        DeformCmd::Iso { poset, cocycle_a, cocycle_b, json, .. } => {
            let p = io::load_poset(&poset)?;
            let la = io::load_cochain(&p, &field, &cocycle_a, 2)?;
            let lb = io::load_cochain(&p, &field, &cocycle_b, 2)?;
            let a = DeformedAlgebra::build(p.clone(), la)?;
            let b = DeformedAlgebra::build(p.clone(), lb)?;
            let found = deformations_isomorphic_with_limit(&a, &b, automorphism_limit())?;
            match found {
                Some((sigma, alpha)) => {
                    let perm: Vec<String> = (0..p.len())
                        .map(|x| format!("{}->{}", p.label(x), p.label(sigma.apply(x))))
                        .collect();
                    if json {
                        println!(
                            "{}",
                            json!({
                                "isomorphic": true,
                                "sigma": perm,
                                "alpha": cochain_lines(&alpha, &p, &field),
                            })
                        );
                    } else {
                        println!("isomorphic: true");
                        println!("sigma: {}", perm.join(" "));
                        for line in cochain_lines(&alpha, &p, &field) {
                            println!("alpha {line}");
                        }
                    }
                }
                None => {
                    if json {
                        println!("{}", json!({ "isomorphic": false }));
                    } else {
                        println!("isomorphic: false");
                    }
                }
            }
            Ok(())
        }
        DeformCmd::Recognize { table, json, .. } => {
            let alg = io::load_structure_constants(&table, &field)?;
            let rec = recognize_incidence(&alg)?;
            match rec {
                None => {
                    if json {
                        println!("{}", json!({ "recognized": false }));
                    } else {
                        println!("recognized: false");
                    }
                }
                Some(rec) => {
                    let (kind, relations) = match &rec.order {
                        RecognizedOrder::Poset(p) => {
                            let rels: Vec<String> = p
                                .hasse_covers()
                                .iter()
                                .map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b)))
                                .collect();
                            ("poset", rels)
                        }
                        RecognizedOrder::Preorder(q) => {
                            let n = q.len();
                            let mut rels = Vec::new();
                            for i in 0..n {
                                for j in 0..n {
                                    if i != j && q.leq(i, j) {
                                        rels.push(format!(
                                            "{}<={}",
                                            q.elements()[i],
                                            q.elements()[j]
                                        ));
                                    }
                                }
                            }
                            ("preorder", rels)
                        }
                    };
                    let lambda_lines: Vec<String> = rec
                        .lambda
                        .iter()
                        .filter(|(_, v)| !field.is_one(v))
                        .map(|(&(i, j, k), v)| {
                            format!(
                                "{} {} {} : {}",
                                rec.elements[i],
                                rec.elements[j],
                                rec.elements[k],
                                field.format(v)
                            )
                        })
                        .collect();
                    if json {
                        println!(
                            "{}",
                            json!({
                                "recognized": true,
                                "kind": kind,
                                "elements": rec.elements,
                                "relations": relations,
                                "lambda": lambda_lines,
                            })
                        );
                    } else {
                        println!("recognized: {kind}");
                        println!("elements: {}", rec.elements.join(" "));
                        println!("relations: {}", relations.join(" "));
                        for line in &lambda_lines {
                            println!("lambda {line}");
                        }
                    }
                }
            }
            Ok(())
        }
    }
}

fn run_deform(cmd: DeformCmd) -> Result<()> {
    let spec = match &cmd {
        DeformCmd::Build { field, .. }
        | DeformCmd::Trivial { field, .. }
        | DeformCmd::Iso { field, .. }
        | DeformCmd::Recognize { field, .. } => field.clone(),
    };
    let other = cmd.clone();
    with_concrete_field(
        &spec,
        |f| run_deform_generic(cmd, f),
        |f| run_deform_generic(other, f),
    )
}

fn rep_summary<F: Field>(rep: &ThinRep<F>, f: &F) -> serde_json::Value {
    let p = rep.parent();
    json!({
        "support": rep.support().members().iter().map(|&i| p.label(i)).collect::<Vec<_>>(),
        "rel": rep.support().strict_pairs().iter().map(|&(a, b)| [p.label(a), p.label(b)]).collect::<Vec<_>>(),
        "alpha": rep.support().strict_pairs().iter().map(|&(a, b)| {
            json!([p.label(a), p.label(b), f.format(rep.alpha(a, b).unwrap())])
        }).collect::<Vec<_>>(),
        "dimension_vector": rep.dimension_vector(),
    })
}

fn print_rep<F: Field>(rep: &ThinRep<F>, f: &F, prefix: &str) {
    let p = rep.parent();
    let members: Vec<&str> = rep.support().members().iter().map(|&i| p.label(i)).collect();
    let rel: Vec<String> = rep
        .support()
        .strict_pairs()
        .iter()
        .map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b)))
        .collect();
    let alpha: Vec<String> = rep
        .support()
        .strict_pairs()
        .iter()
        .filter(|&&(a, b)| !f.is_one(rep.alpha(a, b).unwrap()))
        .map(|&(a, b)| {
            format!("{} {} {}", p.label(a), p.label(b), f.format(rep.alpha(a, b).unwrap()))
        })
        .collect();
    let mut line = format!("{prefix}support {{{}}} rel {{{}}}", members.join(" "), rel.join(" "));
    if !alpha.is_empty() {
        line.push_str(&format!(" alpha {{{}}}", alpha.join(", ")));
    }
    println!("{line}");
}

fn run_thin(cmd: ThinCmd) -> Result<()> {
    match cmd {
        ThinCmd::Classify { poset, field, json } => {
            let f = finite_field(&field)?;
            let p = io::load_poset(&poset)?;
            let reps = classify_thin_with_limit(&p, &f, enumeration_limit())?;
            if json {
                let arr: Vec<_> = reps.iter().map(|r| rep_summary(r, &f)).collect();
                println!("{}", json!({ "classes": arr, "total": reps.len() }));
            } else {
                for (i, r) in reps.iter().enumerate() {
                    print_rep(r, &f, &format!("class {i}: "));
                }
                println!("total: {}", reps.len());
            }
            Ok(())
        }
        ThinCmd::Iso { rep1, rep2, field, json } => {
            with_concrete_field(
                &field,
                |f| thin_iso(&rep1, &rep2, f, json),
                |f| thin_iso(&rep1, &rep2, f, json),
            )
        }
        ThinCmd::Tensor { rep1, rep2, field, json } => {
            with_concrete_field(
                &field,
                |f| thin_tensor(&rep1, &rep2, f, json),
                |f| thin_tensor(&rep1, &rep2, f, json),
            )
        }
        ThinCmd::Access { rep, field, json } => {
            with_concrete_field(
                &field,
                |f| thin_access(&rep, f, json),
                |f| thin_access(&rep, f, json),
            )
        }
        ThinCmd::Sublattice { poset, element, json } => {
            let p = io::load_poset(&poset)?;
            let x = p.index_of(&element)?;
            let lattice = submodule_lattice(&p, x)?;
            if json {
                let members: Vec<Vec<&str>> = lattice
                    .members
                    .iter()
                    .map(|s| s.iter().map(|&i| p.label(i)).collect())
                    .collect();
                println!(
                    "{}",
                    json!({
                        "generator": p.label(x),
                        "submodules": members,
                        "distributive": lattice.distributive,
                    })
                );
            } else {
                for s in &lattice.members {
                    let labels: Vec<&str> = s.iter().map(|&i| p.label(i)).collect();
                    println!("{{{}}}", labels.join(" "));
                }
                println!("submodules: {}", lattice.members.len());
                println!("distributive: {}", lattice.distributive);
            }
            Ok(())
        }
    }
}

fn thin_iso<F: Field>(rep1: &PathBuf, rep2: &PathBuf, f: F, json: bool) -> Result<()> {
    let (p1, m) = io::load_rep(rep1, &f)?;
    let (_, n) = io::load_rep(rep2, &f)?;
    let theta = reps_isomorphic(&m, &n)?;
    match theta {
        Some(theta) => {
            let lines: Vec<String> = theta
                .iter()
                .map(|(x, v)| format!("{} {}", p1.label(*x), f.format(v)))
                .collect();
            if json {
                println!("{}", json!({ "isomorphic": true, "theta": lines }));
            } else {
                println!("isomorphic: true");
                for l in &lines {
                    println!("theta {l}");
                }
            }
        }
        None => {
            if json {
                println!("{}", json!({ "isomorphic": false }));
            } else {
                println!("isomorphic: false");
            }
        }
    }
    Ok(())
}

fn thin_tensor<F: Field>(rep1: &PathBuf, rep2: &PathBuf, f: F, json: bool) -> Result<()> {
    let (_, m) = io::load_rep(rep1, &f)?;
    let (_, n) = io::load_rep(rep2, &f)?;
    let t = tensor(&m, &n)?;
    if json {
        println!("{}", rep_summary(&t, &f));
    } else {
        print_rep(&t, &f, "");
    }
    Ok(())
}

fn thin_access<F: Field>(rep: &PathBuf, f: F, json: bool) -> Result<()> {
    let (p, m) = io::load_rep(rep, &f)?;
    let chain = accessibility_chain(&m)?;
    if json {
        let steps: Vec<_> = chain
            .steps
            .iter()
            .map(|s| {
                json!({
                    "removed": p.label(s.removed),
                    "kind": match s.kind { StepKind::Submodule => "submodule", StepKind::Quotient => "quotient" },
                    "rep": rep_summary(&s.rep, &f),
                })
            })
            .collect();
        println!("{}", json!({ "start": rep_summary(&chain.start, &f), "steps": steps }));
    } else {
        print_rep(&chain.start, &f, "start: ");
        for (i, s) in chain.steps.iter().enumerate() {
            let kind = match s.kind {
                StepKind::Submodule => "submodule",
                StepKind::Quotient => "quotient",
            };
            print_rep(&s.rep, &f, &format!("step {}: removed {} ({kind}): ", i + 1, p.label(s.removed)));
        }
    }
    Ok(())
}

fn run_matrix(cmd: MatrixCmd) -> Result<()> {
    match cmd {
        MatrixCmd::Canon { file, field, json } => with_concrete_field(
            &field,
            |f| matrix_canon(&file, f, json),
            |f| matrix_canon(&file, f, json),
        ),
        MatrixCmd::Orbit { file, field, json } => with_concrete_field(
            &field,
            |f| matrix_orbit(&file, f, json),
            |f| matrix_orbit(&file, f, json),
        ),
        MatrixCmd::Conj { a, b, field, json } => with_concrete_field(
            &field,
            |f| matrix_conj(&a, &b, f, json),
            |f| matrix_conj(&a, &b, f, json),
        ),
    }
}

fn format_matrix<F: Field>(m: &PatternMatrix<F>, f: &F) -> Vec<Vec<String>> {
    (0..m.size())
        .map(|i| (0..m.size()).map(|j| f.format(m.entry(i, j))).collect())
        .collect()
}

fn one_based(pairs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    pairs.iter().map(|&(i, j)| [i + 1, j + 1]).collect()
}

fn matrix_canon<F: Field>(file: &PathBuf, f: F, json: bool) -> Result<()> {
    let a = PatternMatrix::parse(f.clone(), &io::read_to_string(file)?)?;
    let pair = canonical_form(&a);
    let (_, invariant) = orbit_invariant(&a);
    let c_rows = format_matrix(&pair.c, &f);
    let d: Vec<String> = pair.d.iter().map(|v| f.format(v)).collect();
    if json {
        println!(
            "{}",
            json!({
                "c": c_rows,
                "d": d,
                "tree": one_based(&pair.structure.retained),
                "eliminated": one_based(&pair.structure.eliminated),
                "invariant": invariant.iter().map(|v| f.format(v)).collect::<Vec<_>>(),
            })
        );
    } else {
        println!("C:");
        for row in &c_rows {
            println!("{}", row.join(" "));
        }
        println!("D: {}", d.join(" "));
        let tree: Vec<String> =
            pair.structure.retained.iter().map(|&(i, j)| format!("{}->{}", i + 1, j + 1)).collect();
        println!("tree: {}", tree.join(" "));
        let inv: Vec<String> = invariant.iter().map(|v| f.format(v)).collect();
        println!("invariant: {}", inv.join(" "));
    }
    Ok(())
}

fn matrix_orbit<F: Field>(file: &PathBuf, f: F, json: bool) -> Result<()> {
    let a = PatternMatrix::parse(f.clone(), &io::read_to_string(file)?)?;
    let (graph, invariant) = orbit_invariant(&a);
    if json {
        println!(
            "{}",
            json!({
                "arrows": one_based(&graph),
                "invariant": invariant.iter().map(|v| f.format(v)).collect::<Vec<_>>(),
            })
        );
    } else {
        let arrows: Vec<String> =
            graph.iter().map(|&(i, j)| format!("{}->{}", i + 1, j + 1)).collect();
        println!("arrows: {}", arrows.join(" "));
        let inv: Vec<String> = invariant.iter().map(|v| f.format(v)).collect();
        println!("invariant: {}", inv.join(" "));
    }
    Ok(())
}

fn matrix_conj<F: Field>(pa: &PathBuf, pb: &PathBuf, f: F, json: bool) -> Result<()> {
    let a = PatternMatrix::parse(f.clone(), &io::read_to_string(pa)?)?;
    let b = PatternMatrix::parse(f.clone(), &io::read_to_string(pb)?)?;
    match diag_conjugate_test(&a, &b) {
        Some(d) => {
            let d: Vec<String> = d.iter().map(|v| f.format(v)).collect();
            if json {
                println!("{}", json!({ "conjugate": true, "d": d }));
            } else {
                println!("conjugate: true");
                println!("D: {}", d.join(" "));
            }
        }
        None => {
            if json {
                println!("{}", json!({ "conjugate": false }));
            } else {
                println!("conjugate: false");
            }
        }
    }
    Ok(())
}

fn run_k0(cmd: K0Cmd) -> Result<()> {
    match cmd {
        K0Cmd::Table { poset, json } => {
            let p = io::load_poset(&poset)?;
            let table = k0_table(&p)?;
            if json {
                let rows: Vec<Vec<&String>> = table
                    .meet
                    .iter()
                    .map(|row| row.iter().map(|&k| &table.elements[k]).collect())
                    .collect();
                println!("{}", json!({ "elements": table.elements, "meet": rows }));
            } else {
                println!("elements: {}", table.elements.join(" "));
                for (x, row) in table.meet.iter().enumerate() {
                    let cells: Vec<&str> =
                        row.iter().map(|&k| table.elements[k].as_str()).collect();
                    println!("{}: {}", table.elements[x], cells.join(" "));
                }
            }
            Ok(())
        }
    }
}
