//! Command-line front end. Every command prints JSON (pretty by default,
//! compact with `--json`); domain errors exit with 1, usage errors with 2.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::branching::{
    bounded_branch_sp, bounded_branch_sp_direct, branch_step, coordinatewise_criterion, insert_left, insert_right,
    is_bounded_hw_sp, restricts_to, tensor_decompose_sw, tensor_t_set,
};
use crate::cls::{
    clsb_shift, is_coherent_at, level_set, nf_from_triple, nf_product, pls_to_cls, NormalForm, Triple,
};
use crate::half::{format_list, parse_list, Half};
use crate::hecke::{CoxeterGroup, CoxeterType, HeckeAlgebra, KlTable};
use crate::primitive::{
    central_character, degree_of_bounded, extract_dominant_window, highest_weight_v, ideals_equal_at_level,
    separate, tau_conditions, tau_move, weyl_dimension, weyl_equiv, Separation,
};
use crate::symbols::{symbol_of_partition, symbol_of_w};
use crate::tableaux::{p_of_w, rs_insert_steps, rs_of_permutation, Partition};
use crate::weyl::{
    act, bruhat_leq, dot_action, integral_class_decomposition, Algebra, GroupType, SignedPermutation, Weight,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "primideal", version, about = "Exact combinatorics for primitive ideals of U(o(inf)) and U(sp(inf))")]
pub struct Cli {
    /// Compact single-line JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// RS insertion of a comma-separated sequence of positive integers, with every step.
    Rs { seq: String },
    /// Signed permutations. Generators: s_k (k < n) swaps k, k+1; s_n is the type C or D end node.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Barbasch-Vogan symbols.
    Symbol(SymbolArgs),
    /// Kazhdan-Lusztig polynomials of a Weyl group or a Coxeter matrix.
    Kl(KlArgs),
    /// Gelfand-Tsetlin branching.
    Branch(BranchArgs),
    /// Coherent local systems.
    #[command(subcommand)]
    Cls(ClsCmd),
    /// Primitive ideals: triples, central characters, separation, tau-moves.
    #[command(subcommand)]
    Prim(PrimCmd),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TypeArg {
    #[value(alias = "A")]
    A,
    #[value(alias = "C")]
    C,
    #[value(alias = "D")]
    D,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlgArg {
    #[value(alias = "O")]
    O,
    #[value(alias = "SP")]
    Sp,
}

impl From<AlgArg> for Algebra {
    fn from(a: AlgArg) -> Self {
        match a {
            AlgArg::O => Algebra::O,
            AlgArg::Sp => Algebra::Sp,
        }
    }
}

fn group_type(t: TypeArg) -> Result<GroupType, CliError> {
    match t {
        TypeArg::C => Ok(GroupType::C),
        TypeArg::D => Ok(GroupType::D),
        TypeArg::A => Err(CliError::Usage("type A is only available for kl".into())),
    }
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    /// Length, reduced word, inverse and tableaux of one element given by w(1..n).
    Info {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        images: String,
    },
    /// All elements, sorted by length.
    Elements {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long)]
        rank: usize,
    },
    /// Bruhat comparison x <= y.
    Bruhat {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Linear and dot action on a weight.
    Act {
        #[arg(long, value_enum)]
        alg: AlgArg,
        #[arg(long, allow_hyphen_values = true)]
        images: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Integral classes of a rational weight such as 1/2,1,1/3.
    Classes {
        #[arg(long, value_enum)]
        alg: AlgArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
}

#[derive(Args, Debug)]
pub struct SymbolArgs {
    #[arg(long = "type", value_enum)]
    ty: TypeArg,
    /// Element by w(1..n).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "partition")]
    images: Option<String>,
    /// Partition by row lengths.
    #[arg(long)]
    partition: Option<String>,
}

#[derive(Args, Debug)]
pub struct KlArgs {
    #[arg(long = "type", value_enum, required_unless_present = "matrix")]
    ty: Option<TypeArg>,
    #[arg(long, required_unless_present = "matrix")]
    rank: Option<usize>,
    /// Coxeter matrix rows separated by ';', entries by ',' (0 for infinity).
    #[arg(long, conflicts_with_all = ["ty", "rank"])]
    matrix: Option<String>,
    /// Also print the canonical basis element of this element index.
    #[arg(long)]
    canonical: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BranchArgs {
    #[arg(long, value_enum)]
    alg: AlgArg,
    #[arg(long, allow_hyphen_values = true)]
    tuple: String,
    /// With --to: decide restriction by chain search.
    #[arg(long, requires = "to")]
    chain: bool,
    /// With --to: decide restriction by the coordinatewise criterion.
    #[arg(long, requires = "to")]
    criterion: bool,
    #[arg(long, allow_hyphen_values = true)]
    to: Option<String>,
    /// Bounded sp weight: classify and branch through the shift.
    #[arg(long)]
    bounded: bool,
    /// R(tuple, k).
    #[arg(long, allow_hyphen_values = true)]
    right: Option<Half>,
    /// L(tuple, k).
    #[arg(long, allow_hyphen_values = true)]
    left: Option<Half>,
    /// Tensor decomposition with the Shale-Weil module SW^j (j = 0 or 1).
    #[arg(long)]
    tensor: Option<u8>,
}

#[derive(Args, Debug)]
pub struct NfInput {
    /// Normal form as JSON, e.g. {"v":1,"L":{"2":1},"m":0,"R":false,"alg":"sp"}.
    #[arg(long, conflicts_with = "triple")]
    nf: Option<String>,
    /// Triple x,y,Z_1,Z_2,...
    #[arg(long)]
    triple: Option<String>,
    #[arg(long, value_enum, default_value = "sp")]
    alg: AlgArg,
}

#[derive(Subcommand, Debug)]
pub enum ClsCmd {
    /// Normal form of the triple x,y,Z_1,Z_2,...
    FromTriple {
        triple: String,
        #[arg(long, value_enum, default_value = "sp")]
        alg: AlgArg,
    },
    /// Level set at rank n.
    Level {
        #[command(flatten)]
        input: NfInput,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Product of two normal forms given as JSON.
    Product {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// The o <-> sp correspondence.
    Shift {
        #[command(flatten)]
        input: NfInput,
    },
    /// Coherence check between ranks n and n-1.
    Coherent {
        #[command(flatten)]
        input: NfInput,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: Option<u32>,
    },
    /// The system Q(lambda) at rank m, entries bounded by --bound.
    Pls {
        #[arg(long, value_enum)]
        alg: AlgArg,
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum PrimCmd {
    /// Highest weight, normal form and central character of V(x, y, Z)(2n).
    Classify {
        #[arg(long)]
        x: u32,
        #[arg(long)]
        y: Half,
        #[arg(long = "Z", default_value = "")]
        z: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "sp")]
        alg: AlgArg,
    },
    /// Search for a weight separating two triples.
    Separate {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 6)]
        bound: u32,
        #[arg(long, value_enum, default_value = "sp")]
        alg: AlgArg,
    },
    /// Compare two level sets at one rank.
    Equal {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: u32,
        #[arg(long, value_enum, default_value = "sp")]
        alg: AlgArg,
    },
    /// Casimir values g_1..g_n of a weight.
    Casimir {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Tableau equivalence of two elements.
    Equiv {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
    },
    /// The eight tau-move conditions at index i (-n+1 <= i <= -1).
    Tau {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        images: String,
        #[arg(long, allow_hyphen_values = true)]
        i: i32,
    },
    /// Dominant window of a signed sequence.
    Window {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long)]
        r: u32,
    },
    /// Weyl dimension of a dominant weight.
    Dim {
        #[arg(long, value_enum)]
        alg: AlgArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Degree of a bounded sp weight.
    Degree {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
}

fn parse_ints<T: FromStr>(s: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|p| p.trim().parse::<T>().map_err(|e| usage(format!("{p:?}: {e}")))).collect()
}

fn parse_halves(s: &str) -> Result<Vec<Half>, CliError> {
    parse_list(s).map_err(usage)
}

fn parse_perm(s: &str, ty: TypeArg) -> Result<SignedPermutation, CliError> {
    SignedPermutation::from_images(parse_ints(s)?, group_type(ty)?).map_err(domain)
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Partition::new(parse_ints(s)?).map_err(usage)
}

/// `x,y,Z_1,Z_2,...`; a missing `Z` is the empty diagram.
pub fn parse_triple(s: &str) -> Result<Triple, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
    if parts.len() < 2 {
        return Err(CliError::Usage(format!("triple {s:?} needs at least x,y")));
    }
    let x: u32 = parts[0].parse().map_err(|e| usage(format!("x: {e}")))?;
    let y: Half = parts[1].parse().map_err(usage)?;
    let z = parse_partition(&parts[2..].join(","))?;
    Triple::new(x, y, z).map_err(usage)
}

fn nf_input(input: &NfInput) -> Result<NormalForm, CliError> {
    match (&input.nf, &input.triple) {
        (Some(j), _) => parse_nf(j),
        (None, Some(t)) => Ok(nf_from_triple(&parse_triple(t)?, input.alg.into())),
        (None, None) => Err(CliError::Usage("one of --nf or --triple is required".into())),
    }
}

fn parse_nf(j: &str) -> Result<NormalForm, CliError> {
    let nf: NormalForm = serde_json::from_str(j).map_err(usage)?;
    nf.validate().map_err(domain)?;
    Ok(nf)
}

fn weights_json(set: &std::collections::BTreeSet<Vec<Half>>) -> Value {
    Value::Array(set.iter().map(|w| Value::String(format_list(w))).collect())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn perm_json(w: &SignedPermutation) -> Value {
    json!({
        "element": to_value(w),
        "length": w.length(),
        "reducedWord": w.reduced_word(),
        "inverse": w.inverse().images(),
    })
}

fn kl_label(g: &CoxeterGroup, ty: Option<GroupType>, w: usize) -> Value {
    match (g.realization(w), ty) {
        (Some(images), Some(t)) => {
            let p = SignedPermutation::from_images(images.to_vec(), t).expect("realized element");
            to_value(&p.one_line())
        }
        (Some(images), None) => to_value(&images),
        (None, _) => json!({ "word": g.word(w).iter().map(|s| s + 1).collect::<Vec<_>>() }),
    }
}

fn run_weyl(cmd: &WeylCmd) -> Result<Value, CliError> {
    match cmd {
        WeylCmd::Info { ty, images } => {
            let w = parse_perm(images, *ty)?;
            let (p, q) = rs_of_permutation(&w);
            let mut v = perm_json(&w);
            v["insertion"] = to_value(&p);
            v["recording"] = to_value(&q);
            v["shape"] = to_value(&p_of_w(&w));
            Ok(v)
        }
        WeylCmd::Elements { ty, rank } => {
            let all = SignedPermutation::all_elements(*rank, group_type(*ty)?);
            Ok(Value::Array(all.iter().map(perm_json).collect()))
        }
        WeylCmd::Bruhat { ty, x, y } => {
            let (x, y) = (parse_perm(x, *ty)?, parse_perm(y, *ty)?);
            Ok(json!({ "leq": bruhat_leq(&x, &y).map_err(domain)? }))
        }
        WeylCmd::Act { alg, images, weight } => {
            let alg: Algebra = (*alg).into();
            let w = SignedPermutation::from_images(parse_ints(images)?, alg.weyl_type()).map_err(domain)?;
            let lam = Weight::new(parse_halves(weight)?);
            let rho = Weight::rho(alg, lam.rank());
            let lin = act(&w, &lam).map_err(domain)?;
            let dot = dot_action(&w, &lam, &rho).map_err(domain)?;
            Ok(json!({ "act": format_list(&lin.coords), "dot": format_list(&dot.coords) }))
        }
        WeylCmd::Classes { alg, weight } => {
            let lam: Vec<Rational64> = parse_ints(weight)?;
            Ok(to_value(&integral_class_decomposition(&lam, (*alg).into())))
        }
    }
}

fn run_symbol(a: &SymbolArgs) -> Result<Value, CliError> {
    let ty = group_type(a.ty)?;
    let sym = match (&a.images, &a.partition) {
        (Some(images), _) => symbol_of_w(&parse_perm(images, a.ty)?).map_err(domain)?,
        (None, Some(p)) => symbol_of_partition(&parse_partition(p)?, ty).map_err(domain)?,
        (None, None) => return Err(CliError::Usage("one of --images or --partition is required".into())),
    };
    Ok(json!({
        "symbol": to_value(&sym),
        "nu": to_value(&sym.nu()),
        "special": sym.is_special(),
        "display": sym.to_string(),
    }))
}

fn parse_matrix(s: &str) -> Result<Vec<Vec<u32>>, CliError> {
    s.split(';').map(parse_ints).collect()
}

fn run_kl(a: &KlArgs) -> Result<Value, CliError> {
    let (g, ty) = match (&a.matrix, a.ty, a.rank) {
        (Some(m), _, _) => (CoxeterGroup::from_coxeter_matrix(parse_matrix(m)?).map_err(domain)?, None),
        (None, Some(t), Some(r)) => {
            let (ct, gt) = match t {
                TypeArg::A => (CoxeterType::A, None),
                TypeArg::C => (CoxeterType::C, Some(GroupType::C)),
                TypeArg::D => (CoxeterType::D, Some(GroupType::D)),
            };
            (CoxeterGroup::of_type(ct, r).map_err(domain)?, gt)
        }
        _ => return Err(CliError::Usage("give --type and --rank, or --matrix".into())),
    };
    let table = KlTable::compute(&g).map_err(domain)?;
    let entries: Vec<Value> = table
        .entries()
        .into_iter()
        .map(|e| json!({ "x": kl_label(&g, ty, e.x), "y": kl_label(&g, ty, e.y), "P": e.p }))
        .collect();
    match a.canonical {
        None => Ok(Value::Array(entries)),
        Some(w) => {
            if w >= g.size() {
                return Err(CliError::Domain(format!("element index {w} out of range")));
            }
            let h = HeckeAlgebra::new(&g);
            let c = table.canonical(&h, w);
            let terms: Vec<Value> =
                c.terms().map(|(y, p)| json!({ "y": kl_label(&g, ty, y), "coeff": p.to_string() })).collect();
            Ok(json!({ "table": entries, "canonical": terms }))
        }
    }
}

fn run_branch(a: &BranchArgs) -> Result<Value, CliError> {
    let alg: Algebra = a.alg.into();
    let lam = parse_halves(&a.tuple)?;
    if let Some(to) = &a.to {
        let mu = parse_halves(to)?;
        let mut out = json!({});
        if a.chain || !a.criterion {
            out["chain"] = json!(restricts_to(&lam, &mu, alg).map_err(domain)?);
        }
        if a.criterion {
            out["criterion"] = json!(coordinatewise_criterion(&mu, &lam, alg).map_err(domain)?);
        }
        return Ok(out);
    }
    if a.bounded {
        let class = is_bounded_hw_sp(&lam);
        let via_shift = bounded_branch_sp(&lam).map_err(domain)?;
        let direct = bounded_branch_sp_direct(&lam).map_err(domain)?;
        return Ok(json!({
            "class": to_value(&class),
            "branch": weights_json(&via_shift),
            "agrees": via_shift == direct,
        }));
    }
    if let Some(k) = a.right {
        return Ok(json!({ "R": format_list(&insert_right(&lam, k)) }));
    }
    if let Some(k) = a.left {
        return Ok(json!({ "L": format_list(&insert_left(&lam, k)) }));
    }
    if let Some(j) = a.tensor {
        let t = tensor_t_set(&lam, j).map_err(domain)?;
        let parts = tensor_decompose_sw(&lam, j).map_err(domain)?;
        let fmt = |v: Vec<Vec<Half>>| v.iter().map(|w| format_list(w)).collect::<Vec<_>>();
        return Ok(json!({ "T": fmt(t), "components": fmt(parts) }));
    }
    Ok(weights_json(&branch_step(&lam, alg).map_err(domain)?))
}

fn nf_json(nf: &NormalForm) -> Value {
    let mut v = to_value(nf);
    v["display"] = Value::String(nf.to_string());
    v
}

fn run_cls(cmd: &ClsCmd) -> Result<Value, CliError> {
    match cmd {
        ClsCmd::FromTriple { triple, alg } => Ok(nf_json(&nf_from_triple(&parse_triple(triple)?, (*alg).into()))),
        ClsCmd::Level { input, n, bound } => {
            let nf = nf_input(input)?;
            Ok(json!({ "nf": nf_json(&nf), "n": n, "weights": weights_json(&level_set(&nf, *n, *bound).map_err(domain)?) }))
        }
        ClsCmd::Product { a, b } => Ok(nf_json(&nf_product(&parse_nf(a)?, &parse_nf(b)?).map_err(domain)?)),
        ClsCmd::Shift { input } => Ok(nf_json(&clsb_shift(&nf_input(input)?))),
        ClsCmd::Coherent { input, n, bound } => {
            if *n < 2 {
                return Err(CliError::Usage("--n must be at least 2".into()));
            }
            let nf = nf_input(input)?;
            Ok(json!({ "nf": nf_json(&nf), "coherent": is_coherent_at(&nf, *n, *bound).map_err(domain)? }))
        }
        ClsCmd::Pls { alg, tuple, m, bound } => {
            let q = pls_to_cls(&parse_halves(tuple)?, (*alg).into()).map_err(domain)?;
            Ok(json!({ "lambda": format_list(&q.lambda), "m": m, "weights": weights_json(&q.level(*m, *bound)) }))
        }
    }
}

fn run_prim(cmd: &PrimCmd) -> Result<Value, CliError> {
    match cmd {
        PrimCmd::Classify { x, y, z, n, alg } => {
            let t = Triple::new(*x, *y, parse_partition(z)?).map_err(usage)?;
            let alg: Algebra = (*alg).into();
            let hw = highest_weight_v(&t, *n, alg).map_err(domain)?;
            let g = central_character(&hw);
            Ok(json!({
                "triple": to_value(&t),
                "highestWeight": format_list(&hw.coords),
                "normalForm": nf_json(&nf_from_triple(&t, alg)),
                "g": to_value(&g.values.iter().map(ToString::to_string).collect::<Vec<_>>()),
            }))
        }
        PrimCmd::Separate { t1, t2, nmax, bound, alg } => {
            let (a, b) = (parse_triple(t1)?, parse_triple(t2)?);
            let s = separate(&a, &b, *nmax, *bound, (*alg).into()).map_err(domain)?;
            let mut v = to_value(&s);
            v["message"] = Value::String(match &s {
                Separation::Separated { n, bound, weight, member_of } => {
                    format!("separated at (n,B) = ({n},{bound}) by ({weight}) in triple {member_of}")
                }
                Separation::Indistinguishable { n, bound } => format!("indistinguishable up to ({n},{bound})"),
            });
            Ok(v)
        }
        PrimCmd::Equal { t1, t2, n, bound, alg } => {
            let (a, b) = (parse_triple(t1)?, parse_triple(t2)?);
            Ok(json!({ "equalAtLevel": ideals_equal_at_level(&a, &b, *n, *bound, (*alg).into()).map_err(domain)? }))
        }
        PrimCmd::Casimir { weight } => {
            let w = Weight::new(parse_halves(weight)?);
            Ok(to_value(&central_character(&w)))
        }
        PrimCmd::Equiv { ty, w1, w2 } => {
            let (a, b) = (parse_perm(w1, *ty)?, parse_perm(w2, *ty)?);
            Ok(json!({ "equivalent": weyl_equiv(&a, &b).map_err(domain)? }))
        }
        PrimCmd::Tau { ty, images, i } => {
            let w = parse_perm(images, *ty)?;
            let conds = tau_conditions(&w, *i).map_err(domain)?;
            let moved = tau_move(&w, *i).map_err(domain)?;
            Ok(json!({
                "conditions": conds,
                "applies": conds.iter().any(|&c| c),
                "moved": to_value(&moved),
                "sameTableau": weyl_equiv(&w, &moved).map_err(domain)?,
            }))
        }
        PrimCmd::Window { h, r } => Ok(to_value(&extract_dominant_window(&parse_ints::<i64>(h)?, *r).map_err(domain)?)),
        PrimCmd::Dim { alg, weight } => {
            let w = Weight::new(parse_halves(weight)?);
            Ok(json!({ "dim": weyl_dimension(&w, (*alg).into()).map_err(domain)?.to_string() }))
        }
        PrimCmd::Degree { weight } => {
            let w = Weight::new(parse_halves(weight)?);
            Ok(json!({ "degree": degree_of_bounded(&w).map_err(domain)?.to_string() }))
        }
    }
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Rs { seq } => {
            let seq: Vec<i64> = parse_ints(seq)?;
            let steps = rs_insert_steps(&seq).map_err(domain)?;
            let last = steps.last().expect("nonempty").clone();
            Ok(json!({ "insertion": to_value(&last.insertion), "recording": to_value(&last.recording), "steps": to_value(&steps) }))
        }
        Command::Weyl(c) => run_weyl(c),
        Command::Symbol(a) => run_symbol(a),
        Command::Kl(a) => run_kl(a),
        Command::Branch(a) => run_branch(a),
        Command::Cls(c) => run_cls(c),
        Command::Prim(c) => run_prim(c),
    }
}

/// Process outcome: exit code plus the text for standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(v) => {
            let text = if cli.json { serde_json::to_string(&v) } else { serde_json::to_string_pretty(&v) };
            Outcome { code: 0, stdout: text.expect("serializable") + "\n", stderr: String::new() }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
