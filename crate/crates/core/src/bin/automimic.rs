use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use automimic::constructions::{
    agrees_with_psi, build_tm_word, derksen_mimic_word, tame_generators_word, vandermonde_alpha,
};
use automimic::experiments::{self, ExperimentReport};
use automimic::fields::{Field, ZPoly};
use automimic::maps::{parse_map, parse_word, parse_zpoly, render_map, render_word, PolyMap, Word};
use automimic::mimicry::{jvdk_decompose_dim2, mimic_fixed_variable, nagata_word};
use automimic::perms::{induced_map, induced_word, Domain, Perm};
use automimic::{Error, Result};

#[derive(Parser)]
#[command(
    name = "automimic",
    version,
    about = "Polynomial automorphisms over finite fields"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Finite field arithmetic.
    Field {
        #[command(subcommand)]
        op: FieldCmd,
    },
    /// Polynomial maps.
    Map {
        #[command(subcommand)]
        op: MapCmd,
    },
    /// Induced permutations.
    Perm {
        #[command(subcommand)]
        op: PermCmd,
    },
    /// Permutation groups generated by induced bijections.
    Group {
        #[command(subcommand)]
        op: GroupCmd,
    },
    /// Explicit words.
    Construct {
        #[command(subcommand)]
        op: ConstructCmd,
    },
    /// Mimicking and decomposition.
    Mimic {
        #[command(subcommand)]
        op: MimicCmd,
    },
    /// Reproducible experiments.
    Experiment {
        #[command(subcommand)]
        op: ExperimentCmd,
    },
}

#[derive(Args, Clone)]
struct FieldArg {
    /// Field as `p^r` or `p`.
    #[arg(long, default_value = "2")]
    field: String,
    /// Upper bound on field and domain sizes.
    #[arg(long, default_value_t = 1 << 20)]
    bound: u64,
}

impl FieldArg {
    fn field(&self) -> Result<Field> {
        let f = Field::parse_spec(&self.field)?;
        Field::with_bound(f.p() as u64, f.r(), self.bound)
    }
}

#[derive(Args, Clone)]
struct MapArg {
    #[command(flatten)]
    field: FieldArg,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Map such as `(x1+x2^2,x2)`.
    #[arg(long, conflicts_with = "word")]
    map: Option<String>,
    /// File with one generator per line.
    #[arg(long)]
    word: Option<std::path::PathBuf>,
}

enum Input {
    Map(PolyMap<Field>),
    Word(Word<Field>),
}

impl MapArg {
    fn input(&self) -> Result<(Field, Input)> {
        let f = self.field.field()?;
        let input = match (&self.map, &self.word) {
            (Some(m), _) => Input::Map(parse_map(m, &f, self.n)?),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::Precondition(format!("cannot read {}: {e}", path.display()))
                })?;
                Input::Word(parse_word(&text, &f, self.n)?)
            }
            (None, None) => return Err(Error::Precondition("pass --map or --word".into())),
        };
        Ok((f, input))
    }

    fn map(&self) -> Result<(Field, PolyMap<Field>)> {
        let (f, i) = self.input()?;
        Ok(match i {
            Input::Map(m) => (f, m),
            Input::Word(w) => (f, w.to_map()),
        })
    }

    fn perm(&self, m: u32) -> Result<Perm> {
        let (f, input) = self.input()?;
        let dom = Domain::with_bound(&f, m, self.n, self.field.bound)?;
        match input {
            Input::Map(map) => induced_map(&map, &dom),
            Input::Word(w) => induced_word(&w, &dom),
        }
    }
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Characteristic, modulus and primitive element.
    Info(FieldArg),
    /// Apply `add`, `sub`, `mul`, `div`, `pow` or `inv` to base-p digit strings.
    Op {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        op: String,
        #[arg(long)]
        a: String,
        /// Second operand, or the exponent for `pow`.
        #[arg(long)]
        b: Option<String>,
    },
}

#[derive(Subcommand)]
enum MapCmd {
    /// Normal form, degree, shape and Jacobian determinant.
    Show(MapArg),
    /// Value at a comma-separated point.
    Eval {
        #[command(flatten)]
        input: MapArg,
        #[arg(long)]
        point: String,
    },
    /// `F ∘ G` for `--map F --with G`.
    Compose {
        #[command(flatten)]
        input: MapArg,
        #[arg(long = "with")]
        other: String,
    },
}

#[derive(Args)]
struct PermArg {
    #[command(flatten)]
    input: MapArg,
    /// Extension degree of the domain `F_{q^m}^n`.
    #[arg(long, default_value_t = 1)]
    m: u32,
}

#[derive(Subcommand)]
enum PermCmd {
    /// Sign of the induced permutation.
    Sign(PermArg),
    /// Cycle decomposition, order and sign.
    Cycles(PermArg),
    /// Whether `--map` and `--with` induce the same bijection; exits 1 if not.
    Compare {
        #[command(flatten)]
        input: PermArg,
        #[arg(long = "with")]
        other: String,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Order of the group generated by a named generator set.
    Order {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// `linear`, `affine`, `tame`, `tame-deg<k>` or `derksen`.
        #[arg(long, default_value = "tame")]
        gens: String,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Coefficients `α` with `Σ α_i (Y+i)^{kp+p-1} = Y^l + lower terms`.
    Vandermonde {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
    },
    /// The scaling gadget `T_m` and its check against `ψ`.
    Tm {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// A Derksen-alphabet word inducing `E_{1,α}` on `F_{q^m}^n`.
    Derksen {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Comma-separated exponents of `x2, ..., xn`.
        #[arg(long)]
        alpha: String,
    },
    /// A word over affine and elementary letters of the reduced generating set for `E_{1,v}`.
    Tame {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        v: String,
    },
}

#[derive(Subcommand)]
enum MimicCmd {
    /// Fixed-variable mimicking of `(X - 2fYΔ - fgΔ², Y + gΔ)`, `Δ = gX + fY²`.
    Nagata {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value = "1")]
        f: String,
        #[arg(long, default_value = "z")]
        g: String,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Decompose a plane automorphism into affine and triangular letters.
    Jvdk(MapArg),
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Index of the normal closure of the linear group in the tame group on `F_4^2`.
    GlinIndex,
    /// Signs of the permutations induced by a generator set.
    Parity {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value = "tame")]
        gens: String,
    },
    /// The conjugation identity for elementary maps over fields with `q > 2`.
    Tlin {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        alpha: String,
    },
    /// Seeded random oracle checks over `F_q^2`.
    Oracles {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
    /// Group order with a breadth-first cross-check.
    Order {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value = "tame")]
        gens: String,
    },
}

/// A result and whether it counts as a pass.
struct Outcome {
    value: Value,
    pass: bool,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Outcome { value, pass: true }
    }
}

impl From<ExperimentReport> for Outcome {
    fn from(r: ExperimentReport) -> Self {
        Outcome {
            pass: r.pass,
            value: serde_json::to_value(r).expect("reports serialize"),
        }
    }
}

fn csv<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| {
            t.trim().parse().map_err(|_| Error::Syntax {
                offset: 0,
                message: format!("bad {what} entry {t:?}"),
            })
        })
        .collect()
}

fn run_field(op: FieldCmd) -> Result<Outcome> {
    match op {
        FieldCmd::Info(fa) => {
            let f = fa.field()?;
            Ok(json!({
                "p": f.p(),
                "r": f.r(),
                "q": f.q(),
                "modulus": f.modulus(),
                "primitive": f.render(f.primitive()),
            })
            .into())
        }
        FieldCmd::Op { field, op, a, b } => {
            let f = field.field()?;
            let x = f.parse_element(&a)?;
            let y = || -> Result<_> {
                let b = b
                    .as_deref()
                    .ok_or_else(|| Error::Precondition(format!("{op} needs --b")))?;
                f.parse_element(b)
            };
            let r = match op.as_str() {
                "add" => f.add(x, y()?),
                "sub" => f.sub(x, y()?),
                "mul" => f.mul(x, y()?),
                "div" => f.div(x, y()?)?,
                "inv" => f.inv(x)?,
                "pow" => {
                    let e: u64 = csv(b.as_deref().unwrap_or(""), "exponent")?[0];
                    f.pow(x, e)
                }
                other => return Err(Error::Precondition(format!("unknown field op {other:?}"))),
            };
            Ok(json!({"result": f.render(r)}).into())
        }
    }
}

fn run_map(op: MapCmd) -> Result<Outcome> {
    match op {
        MapCmd::Show(input) => {
            let (f, map) = input.map()?;
            let jac = map.jacobian_det();
            let shape = map.shape();
            Ok(json!({
                "map": render_map(&map),
                "degree": map.max_degree(),
                "affine": shape.is_affine,
                "triangular": shape.is_triangular,
                "strictly_jonquiere": shape.is_strictly_jonquiere,
                "jacobian": automimic::maps::render_poly(&jac, &f),
            })
            .into())
        }
        MapCmd::Eval { input, point } => {
            let (f, map) = input.map()?;
            let pt = point
                .split(',')
                .map(|s| f.parse_element(s))
                .collect::<Result<Vec<_>>>()?;
            let v = map.eval(&pt)?;
            Ok(json!({"value": v.iter().map(|&x| f.render(x)).collect::<Vec<_>>()}).into())
        }
        MapCmd::Compose { input, other } => {
            let (f, map) = input.map()?;
            let g = parse_map(&other, &f, input.n)?;
            Ok(json!({"map": render_map(&map.compose(&g)?)}).into())
        }
    }
}

fn run_perm(op: PermCmd) -> Result<Outcome> {
    match op {
        PermCmd::Sign(a) => Ok(json!({"sign": a.input.perm(a.m)?.sign()}).into()),
        PermCmd::Cycles(a) => {
            let p = a.input.perm(a.m)?;
            Ok(json!({
                "degree": p.degree(),
                "sign": p.sign(),
                "order": p.order(),
                "cycles": p.render_cycles(),
            })
            .into())
        }
        PermCmd::Compare { input, other } => {
            let a = input.input.perm(input.m)?;
            let f = input.input.field.field()?;
            let g = parse_map(&other, &f, input.input.n)?;
            let dom = Domain::with_bound(&f, input.m, input.input.n, input.input.field.bound)?;
            let b = induced_map(&g, &dom)?;
            let moved = a
                .compose(&b.inverse())
                .cycles()
                .iter()
                .map(Vec::len)
                .sum::<usize>();
            Ok(Outcome {
                value: json!({"equal": a == b, "points_differing": moved}),
                pass: a == b,
            })
        }
    }
}

fn run_construct(op: ConstructCmd) -> Result<Outcome> {
    match op {
        ConstructCmd::Vandermonde { p, k, l } => {
            Ok(json!({"alpha": vandermonde_alpha(p, k, l)?}).into())
        }
        ConstructCmd::Tm { field, n, m } => {
            let f = field.field()?;
            let w = build_tm_word(&f, n, m)?;
            let dom = Domain::with_bound(&f, m, n, field.bound)?;
            let ok = agrees_with_psi(&w, &dom)?;
            Ok(Outcome {
                value: json!({"letters": w.len(), "agrees_with_psi": ok, "word": render_word(&w)}),
                pass: ok,
            })
        }
        ConstructCmd::Derksen { field, n, m, alpha } => {
            let f = field.field()?;
            let alpha: Vec<u64> = csv(&alpha, "exponent")?;
            let w = derksen_mimic_word(&f, n, m, &alpha)?;
            let dom = Domain::with_bound(&f, m, n, field.bound)?;
            let exps: Vec<u32> = alpha.iter().map(|&a| a as u32).collect();
            let target = Word::from_gen(
                &f,
                n,
                automimic::maps::build::e(n, 0, &exps, automimic::fields::Fq::ONE),
            )?;
            let ok = induced_word(&w, &dom)? == induced_word(&target, &dom)? && w.is_derksen();
            Ok(Outcome {
                value: json!({"letters": w.len(), "verified": ok, "word": render_word(&w)}),
                pass: ok,
            })
        }
        ConstructCmd::Tame { field, v } => {
            let f = field.field()?;
            let v: Vec<u32> = csv(&v, "exponent")?;
            let n = v.len() + 1;
            let w = tame_generators_word(&f, n, &v)?;
            let target = Word::from_gen(
                &f,
                n,
                automimic::maps::build::e(n, 0, &v, automimic::fields::Fq::ONE),
            )?;
            let ok = w.to_map() == target.to_map();
            Ok(Outcome {
                value: json!({"letters": w.len(), "recomposes": ok, "word": render_word(&w)}),
                pass: ok,
            })
        }
    }
}

fn run_mimic(op: MimicCmd) -> Result<Outcome> {
    match op {
        MimicCmd::Nagata { field, f, g, m } => {
            let base = field.field()?;
            let fz: ZPoly = parse_zpoly(&f, &base)?;
            let gz: ZPoly = parse_zpoly(&g, &base)?;
            let res = mimic_fixed_variable(&nagata_word(&fz, &gz, &base)?, m)?;
            Ok(Outcome {
                pass: res.all_pass,
                value: serde_json::to_value(&res).expect("results serialize"),
            })
        }
        MimicCmd::Jvdk(input) => {
            let (_, map) = input.map()?;
            let w = jvdk_decompose_dim2(&map)?;
            let ok = w.to_map() == map;
            Ok(Outcome {
                value: json!({"letters": w.len(), "recomposes": ok, "word": render_word(&w)}),
                pass: ok,
            })
        }
    }
}

fn run_experiment(op: ExperimentCmd) -> Result<Outcome> {
    Ok(match op {
        ExperimentCmd::GlinIndex => experiments::glin_index()?.into(),
        ExperimentCmd::Parity { field, n, m, gens } => {
            experiments::parity_census(&field.field()?, n, m, &gens)?.into()
        }
        ExperimentCmd::Tlin { field, alpha } => {
            experiments::tlin_identity_check(&field.field()?, &csv::<u32>(&alpha, "exponent")?)?
                .into()
        }
        ExperimentCmd::Oracles { field, seed, cases } => {
            experiments::oracle_suite(&field.field()?, seed, cases)?.into()
        }
        ExperimentCmd::Order { field, n, m, gens } => {
            experiments::group_order(&field.field()?, n, m, &gens)?.into()
        }
    })
}

fn run(cmd: Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Field { op } => run_field(op),
        Cmd::Map { op } => run_map(op),
        Cmd::Perm { op } => run_perm(op),
        Cmd::Group {
            op: GroupCmd::Order { field, n, m, gens },
        } => experiments::group_order(&field.field()?, n, m, &gens).map(Into::into),
        Cmd::Construct { op } => run_construct(op),
        Cmd::Mimic { op } => run_mimic(op),
        Cmd::Experiment { op } => run_experiment(op),
    }
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match x {
                    Value::Object(_) => {
                        let row: Vec<String> = x
                            .as_object()
                            .unwrap()
                            .iter()
                            .map(|(k, y)| format!("{k}={}", scalar(y)))
                            .collect();
                        out.push_str(&format!("{pad}- {}\n", row.join(" ")));
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(x))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.value),
                Format::Text => {
                    let mut s = String::new();
                    text(&out.value, 0, &mut s);
                    print!("{s}");
                }
            }
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(Error::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
