//! Reproducible group-theoretic computations with JSON reports.
//!
//! Generator sets are named by strings:
//!
//! * `linear`: `X_1 + X_2`, the swaps `R_{1,i}`, and `S_{1,ω}` for a
//!   primitive `ω` when `q > 2`.
//! * `affine`: `linear` plus the translation `T_{1,1}`.
//! * `tame-deg<k>`: `affine` plus every `E_{1,α}` with coefficient one and
//!   `2 <= |α| <= k`. For `q = 2`, `n = 2`, `k = 3` this is exactly
//!   `(x+1, y), (x+y, y), (x+y², y), (x+y³, y), (y, x)`.
//! * `tame`: `tame-deg<k>` with every `α_i <= q^m - 1`, which already
//!   induces every bijection an elementary map can induce on `F_{q^m}^n`.
//! * `derksen`: `affine` plus `ε = E_{1,(p-1,...,p-1)}`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fields::{Field, Fq};
use crate::maps::{build, Gen, Word};
use crate::mimicry::jvdk_decompose_dim2;
use crate::perms::{
    brute_force_order, induced_gen, induced_word, normal_closure, Bsgs, Domain, Perm,
};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// A published statement being reproduced.
    Claim,
    /// An independent computation inside this crate.
    Oracle,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub provenance: Provenance,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub id: String,
    pub parameters: Value,
    pub quantities: Value,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub seconds: f64,
}

impl ExperimentReport {
    fn new(id: &str, parameters: Value) -> Self {
        ExperimentReport {
            id: id.into(),
            parameters,
            quantities: json!({}),
            checks: Vec::new(),
            pass: true,
            seconds: 0.0,
        }
    }

    fn check(&mut self, name: &str, expected: Value, actual: Value, provenance: Provenance) {
        let pass = expected == actual;
        self.pass &= pass;
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            provenance,
            pass,
        });
    }

    fn set(&mut self, key: &str, v: Value) {
        self.quantities[key] = v;
    }

    fn finish(mut self, start: Instant) -> Self {
        self.seconds = start.elapsed().as_secs_f64();
        self
    }
}

/// A named generator.
#[derive(Debug, Clone)]
pub struct NamedGen {
    pub name: String,
    pub gen: Gen<Fq>,
}

fn named(f: &Field, n: usize, gen: Gen<Fq>) -> Result<NamedGen> {
    let w = Word::from_gen(f, n, gen.clone())?;
    Ok(NamedGen {
        name: w.to_map().render(),
        gen,
    })
}

/// All exponent vectors of length `len` with entries `<= cap` and total in
/// `lo..=hi`, in lexicographic order.
fn exponent_vectors(len: usize, cap: u32, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(k: usize, cur: &mut Vec<u32>, cap: u32, lo: u32, hi: u32, out: &mut Vec<Vec<u32>>) {
        if k == cur.len() {
            let s: u32 = cur.iter().sum();
            if (lo..=hi).contains(&s) {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=cap {
            cur[k] = e;
            if cur[..=k].iter().sum::<u32>() > hi {
                break;
            }
            rec(k + 1, cur, cap, lo, hi, out);
        }
        cur[k] = 0;
    }
    rec(0, &mut cur, cap, lo, hi, &mut out);
    out
}

/// The generator set named by `spec` for `F_q^n`; `m` fixes the cap used by
/// `tame`.
pub fn generator_set(spec: &str, f: &Field, n: usize, m: u32) -> Result<Vec<NamedGen>> {
    if n < 2 {
        return Err(Error::Precondition("generator sets need n >= 2".into()));
    }
    let usage = || {
        Error::Precondition(format!(
            "unknown generator set {spec:?}; expected linear, affine, tame, tame-deg<k> or derksen"
        ))
    };
    let mut e12 = vec![0u32; n - 1];
    e12[0] = 1;
    let mut linear = vec![named(f, n, build::e(n, 0, &e12, Fq::ONE))?];
    if f.q() > 2 {
        linear.push(named(f, n, build::s(0, f.primitive()))?);
    }
    for i in 1..n {
        linear.push(named(f, n, build::swap(0, i))?);
    }
    if spec == "linear" {
        return Ok(linear);
    }
    let mut affine = vec![named(f, n, build::t(0, Fq::ONE))?];
    affine.extend(linear);
    let elementary = |cap: u32, hi: u32| -> Result<Vec<NamedGen>> {
        exponent_vectors(n - 1, cap, 2, hi)
            .into_iter()
            .map(|a| named(f, n, build::e(n, 0, &a, Fq::ONE)))
            .collect()
    };
    let extra = match spec {
        "affine" => Vec::new(),
        "derksen" => vec![named(f, n, build::epsilon(f, n))?],
        "tame" => {
            let cap = (f.q() as u64)
                .checked_pow(m)
                .filter(|&v| v <= 64)
                .ok_or_else(|| Error::Unsupported("q^m too large for the tame set".into()))?
                as u32
                - 1;
            elementary(cap, cap * (n as u32 - 1))?
        }
        s => {
            let k: u32 = s
                .strip_prefix("tame-deg")
                .and_then(|k| k.parse().ok())
                .ok_or_else(usage)?;
            elementary(k, k)?
        }
    };
    // order: translation, elementary maps by degree, then linear letters
    let mut out = vec![affine[0].clone()];
    out.push(affine[1].clone());
    out.extend(extra);
    out.extend(affine.into_iter().skip(2));
    Ok(out)
}

fn perms_of(gens: &[NamedGen], f: &Field, dom: &Domain) -> Result<Vec<Perm>> {
    gens.iter().map(|g| induced_gen(&g.gen, f, dom)).collect()
}

fn factored(v: &[(u64, u32)]) -> String {
    v.iter()
        .map(|(p, e)| {
            if *e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Brute-force cross-check limit for group orders.
pub const BRUTE_FORCE_LIMIT: usize = 40320;

/// Order of the group generated by `π_{q^m}` of a generator set.
pub fn group_order(f: &Field, n: usize, m: u32, spec: &str) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut rep = ExperimentReport::new(
        "group-order",
        json!({"q": f.q(), "n": n, "m": m, "generators": spec}),
    );
    let dom = Domain::new(f, m, n)?;
    let gens = generator_set(spec, f, n, m)?;
    let perms = perms_of(&gens, f, &dom)?;
    let g = Bsgs::new(dom.size(), &perms)?;
    let order = g.order();
    rep.set("order", json!(order.to_string()));
    rep.set("order_factored", json!(factored(&g.order_factored())));
    rep.set("degree", json!(dom.size()));
    if let Some(bf) = brute_force_order(dom.size(), &perms, BRUTE_FORCE_LIMIT) {
        rep.check(
            "order agrees with breadth-first closure",
            json!(bf.to_string()),
            json!(order.to_string()),
            Provenance::Oracle,
        );
    }
    Ok(rep.finish(start))
}

/// Index of the normal closure of the linear group inside the tame group,
/// both as bijections of `F_4^2`, with the generators over `F_2` of degree
/// at most 3.
pub fn glin_index() -> Result<ExperimentReport> {
    let start = Instant::now();
    let f2 = Field::new(2, 1)?;
    let mut rep = ExperimentReport::new(
        "glin-index",
        json!({"base": 2, "m": 2, "n": 2, "tame": "tame-deg3", "linear": "linear"}),
    );
    let dom = Domain::new(&f2, 2, 2)?;
    let tame = generator_set("tame-deg3", &f2, 2, 2)?;
    let linear = generator_set("linear", &f2, 2, 2)?;
    rep.set(
        "tame_generators",
        json!(tame.iter().map(|g| g.name.clone()).collect::<Vec<_>>()),
    );
    rep.set(
        "linear_generators",
        json!(linear.iter().map(|g| g.name.clone()).collect::<Vec<_>>()),
    );
    let tp = perms_of(&tame, &f2, &dom)?;
    let lp = perms_of(&linear, &f2, &dom)?;
    let g = Bsgs::new(dom.size(), &tp)?;
    let nc = normal_closure(dom.size(), &lp, &tp)?;
    let idx = crate::perms::index(&g, &nc)?;
    rep.set("tame_order", json!(g.order().to_string()));
    rep.set("tame_order_factored", json!(factored(&g.order_factored())));
    rep.set("closure_order", json!(nc.order().to_string()));
    rep.set(
        "closure_order_factored",
        json!(factored(&nc.order_factored())),
    );
    rep.set("index", json!(idx.to_string()));
    rep.check(
        "index",
        json!("2"),
        json!(idx.to_string()),
        Provenance::Claim,
    );
    rep.check(
        "linear generators lie in the tame group",
        json!(true),
        json!(lp.iter().all(|p| g.contains(p))),
        Provenance::Oracle,
    );
    rep.check(
        "closure is normalized by the tame generators",
        json!(true),
        json!(nc.is_normalized_by(&tp)),
        Provenance::Oracle,
    );
    if let Some(bf) = brute_force_order(dom.size(), &tp, BRUTE_FORCE_LIMIT) {
        rep.check(
            "tame order agrees with breadth-first closure",
            json!(bf.to_string()),
            json!(g.order().to_string()),
            Provenance::Oracle,
        );
    }
    Ok(rep.finish(start))
}

/// Signs of `π_{q^m}` of every generator in a set.
pub fn parity_census(f: &Field, n: usize, m: u32, spec: &str) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut rep = ExperimentReport::new(
        "parity-census",
        json!({"q": f.q(), "n": n, "m": m, "generators": spec}),
    );
    let dom = Domain::new(f, m, n)?;
    let gens = generator_set(spec, f, n, m)?;
    let mut rows = Vec::new();
    let mut all_even = true;
    for g in &gens {
        let sign = induced_gen(&g.gen, f, &dom)?.sign();
        all_even &= sign == 1;
        rows.push(json!({"generator": g.name, "sign": sign}));
    }
    rep.set("signs", Value::Array(rows));
    rep.set("all_even", json!(all_even));
    Ok(rep.finish(start))
}

/// `S_{1,c} W^{-1} S_{1,c}^{-1} W = E_{1,α}` with `W = S_{1,d} E_{1,α} S_{1,d^{-1}}`
/// and `d = (1-c)^{-1}`, for every `c ∉ {0, 1}`.
pub fn tlin_identity_check(f: &Field, alpha: &[u32]) -> Result<ExperimentReport> {
    let start = Instant::now();
    if f.q() == 2 {
        return Err(Error::Precondition(
            "needs a field with an element other than 0 and 1".into(),
        ));
    }
    let n = alpha.len() + 1;
    let mut rep = ExperimentReport::new("tlin-identity", json!({"q": f.q(), "alpha": alpha}));
    let e = Word::from_gen(f, n, build::e(n, 0, alpha, Fq::ONE))?;
    let target = e.to_map();
    let mut rows = Vec::new();
    for c in f.elements().filter(|&c| !c.is_zero() && c != Fq::ONE) {
        let d = f.inv(f.sub(Fq::ONE, c))?;
        let sd = Word::from_gen(f, n, build::s(0, d))?;
        let sc = Word::from_gen(f, n, build::s(0, c))?;
        let w = sd.then(&e).then(&sd.inverse());
        let lhs = sc.then(&w.inverse()).then(&sc.inverse()).then(&w);
        let holds = lhs.to_map() == target;
        rows.push(json!({"c": f.render(c), "d": f.render(d), "holds": holds}));
        rep.check(
            &format!("identity at c = {}", f.render(c)),
            json!(true),
            json!(holds),
            Provenance::Oracle,
        );
    }
    rep.set("instances", Value::Array(rows));
    Ok(rep.finish(start))
}

/// A random word of `len` letters over `F_q^n`, about a third of them
/// inverted.
pub fn random_word(rng: &mut impl Rng, f: &Field, n: usize, len: usize) -> Result<Word<Field>> {
    let q = f.q();
    let mut w = Word::identity(f, n);
    for _ in 0..len {
        let i = rng.gen_range(0..n);
        let unit = Fq(rng.gen_range(1..q));
        let g = match rng.gen_range(0..4) {
            0 => build::t(i, Fq(rng.gen_range(0..q))),
            1 => build::s(i, unit),
            2 if n > 1 => build::swap(i, (i + rng.gen_range(1..n)) % n),
            _ => {
                let alpha: Vec<u32> = (1..n).map(|_| rng.gen_range(0..4)).collect();
                build::e(n, i, &alpha, unit)
            }
        };
        if rng.gen_bool(0.3) {
            w.push_inv(g)?;
        } else {
            w.push(g)?;
        }
    }
    Ok(w)
}

/// Seeded random checks of three oracle equivalences: induced bijections
/// respect composition, Schreier-Sims agrees with breadth-first closure,
/// and plane decompositions recompose.
pub fn oracle_suite(f: &Field, seed: u64, cases: usize) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut rep = ExperimentReport::new(
        "oracle-suite",
        json!({"q": f.q(), "seed": seed, "cases": cases}),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dom = Domain::new(f, 1, 2)?;
    let mut hom = 0;
    let mut orders = 0;
    let mut round_trips = 0;
    for _ in 0..cases {
        let a = random_word(&mut rng, f, 2, 5)?;
        let b = random_word(&mut rng, f, 2, 5)?;
        let lhs = induced_word(&a.then(&b), &dom)?;
        hom += usize::from(lhs == induced_word(&a, &dom)?.compose(&induced_word(&b, &dom)?));

        let gens = [lhs, induced_word(&a, &dom)?];
        let g = Bsgs::new(dom.size(), &gens)?;
        orders += usize::from(
            brute_force_order(dom.size(), &gens, BRUTE_FORCE_LIMIT)
                .is_none_or(|bf| g.order() == bf.into()),
        );

        let map = a.to_map();
        round_trips += usize::from(jvdk_decompose_dim2(&map)?.to_map() == map);
    }
    rep.check("homomorphism", json!(cases), json!(hom), Provenance::Oracle);
    rep.check(
        "group orders",
        json!(cases),
        json!(orders),
        Provenance::Oracle,
    );
    rep.check(
        "plane round trips",
        json!(cases),
        json!(round_trips),
        Provenance::Oracle,
    );
    Ok(rep.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_three_generator_list() {
        let f2 = Field::new(2, 1).unwrap();
        let names: Vec<String> = generator_set("tame-deg3", &f2, 2, 1)
            .unwrap()
            .into_iter()
            .map(|g| g.name)
            .collect();
        assert_eq!(
            names,
            [
                "(x1 + 1, x2)",
                "(x1 + x2, x2)",
                "(x2^2 + x1, x2)",
                "(x2^3 + x1, x2)",
                "(x2, x1)"
            ]
        );
        assert!(generator_set("bogus", &f2, 2, 1).is_err());
        assert_eq!(generator_set("derksen", &f2, 3, 1).unwrap().len(), 5);
    }

    #[test]
    fn index_two() {
        let rep = glin_index().unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.quantities["index"], json!("2"));
    }

    #[test]
    fn parity_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let f2 = Field::new(2, 1).unwrap();
        let all_even = |r: ExperimentReport| r.quantities["all_even"] == json!(true);
        assert!(all_even(parity_census(&f4, 2, 1, "tame").unwrap()));
        assert!(!all_even(parity_census(&f2, 3, 1, "tame").unwrap()));
        assert!(all_even(parity_census(&f2, 3, 1, "linear").unwrap()));
    }

    #[test]
    fn tlin_examples() {
        let f3 = Field::new(3, 1).unwrap();
        let r = tlin_identity_check(&f3, &[2, 2]).unwrap();
        assert!(r.pass);
        assert_eq!(r.checks.len(), 1);
        let f4 = Field::new(2, 2).unwrap();
        let r = tlin_identity_check(&f4, &[1, 1]).unwrap();
        assert!(r.pass);
        assert_eq!(r.checks.len(), 2);
        assert!(tlin_identity_check(&Field::new(2, 1).unwrap(), &[1, 1]).is_err());
    }

    #[test]
    fn seeded_suite_is_deterministic() {
        let f3 = Field::new(3, 1).unwrap();
        let a = oracle_suite(&f3, 7, 10).unwrap();
        let b = oracle_suite(&f3, 7, 10).unwrap();
        assert!(a.pass);
        assert_eq!(a.parameters, b.parameters);
        assert_eq!(
            serde_json::to_value(&a.checks).unwrap(),
            serde_json::to_value(&b.checks).unwrap()
        );
    }

    #[test]
    fn full_symmetric_image() {
        let f2 = Field::new(2, 1).unwrap();
        let r = group_order(&f2, 3, 1, "tame").unwrap();
        assert_eq!(r.quantities["order"], json!("40320"));
        assert!(r.pass);
    }
}
