//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact;
//! the time limit is part of each criterion.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use automimic::constructions::tame::is_tame_alphabet_word;
use automimic::constructions::tm::{char2_block_word, char2_exponents};
use automimic::constructions::{
    agrees_with_psi, build_tm_word, derksen_mimic_word, tame_generators_word, tm_conjugate,
    vandermonde_alpha, DerksenMimic,
};
use automimic::experiments::{self, generator_set, BRUTE_FORCE_LIMIT};
use automimic::fields::{Field, Fq, ZPoly};
use automimic::maps::{build, parse_map, Word};
use automimic::mimicry::{jvdk_decompose_dim2, mimic_fixed_variable, nagata_word};
use automimic::perms::{brute_force_order, induced_gen, induced_word, Bsgs, Domain, Perm};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(f: &Field, n: usize, alpha: &[u32]) -> Word<Field> {
    Word::from_gen(f, n, build::e(n, 0, alpha, Fq::ONE)).unwrap()
}

fn glin_index() -> Outcome {
    let rep = experiments::glin_index().map_err(|e| e.to_string())?;
    let idx = rep.quantities["index"].clone();
    ensure(rep.pass, || format!("report failed: {:?}", rep.checks))?;
    Ok(format!(
        "index {idx}, tame order {}",
        rep.quantities["tame_order_factored"]
    ))
}

fn full_symmetric_image() -> Outcome {
    let f2 = Field::new(2, 1).unwrap();
    let rep = experiments::group_order(&f2, 3, 1, "tame").map_err(|e| e.to_string())?;
    let order = rep.quantities["order"]
        .as_str()
        .unwrap_or_default()
        .to_string();
    ensure(order == "40320", || format!("order {order}"))?;
    ensure(rep.pass, || "breadth-first closure disagrees".into())?;
    Ok(format!("order {order} = 8!"))
}

fn parity() -> Outcome {
    let f4 = Field::new(2, 2).unwrap();
    let f2 = Field::new(2, 1).unwrap();
    let a = experiments::parity_census(&f4, 2, 1, "tame").map_err(|e| e.to_string())?;
    let b = experiments::parity_census(&f2, 3, 1, "linear").map_err(|e| e.to_string())?;
    let count =
        |r: &experiments::ExperimentReport| r.quantities["signs"].as_array().map_or(0, Vec::len);
    ensure(a.quantities["all_even"] == true, || {
        "an F_4 tame generator is odd".into()
    })?;
    ensure(b.quantities["all_even"] == true, || {
        "an F_2 linear generator is odd".into()
    })?;
    Ok(format!(
        "{} tame generators on F_4^2 and {} linear generators on F_2^3 are even",
        count(&a),
        count(&b)
    ))
}

fn xpow(var: &str, e: u64) -> String {
    match e {
        0 => "1".into(),
        1 => var.into(),
        _ => format!("{var}^{e}"),
    }
}

fn tm_correctness() -> Outcome {
    for (p, r, m, n) in [
        (2u64, 1u32, 1u32, 3usize),
        (2, 1, 2, 3),
        (3, 1, 1, 3),
        (2, 2, 1, 3),
    ] {
        let f = Field::new(p, r).unwrap();
        let w = build_tm_word(&f, n, m).map_err(|e| e.to_string())?;
        ensure(w.is_derksen(), || {
            format!("q={} m={m}: word leaves the alphabet", f.q())
        })?;
        let dom = Domain::new(&f, m, n).unwrap();
        let ok = agrees_with_psi(&w, &dom).map_err(|e| e.to_string())?;
        ensure(ok, || format!("q={} m={m}: disagrees with psi", f.q()))?;
    }
    // odd characteristic closed form with Q = q^m
    let f3 = Field::new(3, 1).unwrap();
    let big_q = 3u64;
    let x3 = |e| xpow("x3", e);
    let expect = format!(
        "(2*x1*{} - x1*{} + x2*{} - x2, x1 - x1*{} + x2*x3, x3)",
        x3(big_q - 2),
        x3(2 * big_q - 3),
        x3(big_q - 1),
        x3(big_q - 1)
    );
    let tm = build_tm_word(&f3, 3, 1).unwrap().to_map();
    ensure(tm == parse_map(&expect, &f3, 3).unwrap(), || {
        format!("odd closed form: got {}", tm.render())
    })?;
    // characteristic two block B with k = 2^{2M-1} and h = Σ_{j=1}^{2M-1} x3^{k - 2^j}
    for (r, m) in [(1u32, 1u32), (1, 2), (2, 1)] {
        let f = Field::new(2, r).unwrap();
        let (total, k) = char2_exponents(&f, m);
        let h: Vec<String> = (1..2 * total).map(|j| xpow("x3", k - (1 << j))).collect();
        let h = format!("({})", h.join(" + "));
        let expect = format!(
            "(x1*({} + {h}) + x2*{}, x1*{} + x2*{h}, x3)",
            xpow("x3", k),
            xpow("x3", k - 1),
            xpow("x3", k - 1)
        );
        let b = char2_block_word(&f, 3, m).unwrap().to_map();
        ensure(b == parse_map(&expect, &f, 3).unwrap(), || {
            format!("char-2 block q={} m={m}: got {}", f.q(), b.render())
        })?;
    }
    Ok("psi on the punctured domain for 4 cases; odd and char-2 closed forms".into())
}

fn vandermonde() -> Outcome {
    let mut count = 0;
    for p in [2u32, 3, 5] {
        let fp = Field::new(p as u64, 1).unwrap();
        for k in 0..=3u64 {
            let big = k * p as u64 + p as u64 - 1;
            for l in k * p as u64..(k + 1) * p as u64 {
                let alpha = vandermonde_alpha(p, k, l).map_err(|e| e.to_string())?;
                let mut sum = ZPoly::zero();
                for (i, &a) in alpha.iter().enumerate() {
                    let lin = ZPoly::from_coeffs(vec![fp.from_int(i as i64), Fq::ONE]);
                    sum = sum.add(&lin.pow(big, &fp).scale(fp.from_int(a as i64), &fp), &fp);
                }
                let rest = sum.sub(&ZPoly::z().pow(l, &fp), &fp);
                ensure(rest.degree() < (k * p as u64) as isize, || {
                    format!("p={p} k={k} l={l}: remainder degree {}", rest.degree())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} identities"))
}

fn derksen_mimic() -> Outcome {
    let f2 = Field::new(2, 1).unwrap();
    let dom = Domain::new(&f2, 2, 3).unwrap();
    let mut mimic = DerksenMimic::new(&f2, 3, 2).map_err(|e| e.to_string())?;
    let mut letters = 0;
    for a in 0..4u64 {
        for b in 0..4u64 {
            let w = mimic.word(&[a, b]).map_err(|e| e.to_string())?;
            ensure(w.is_derksen(), || {
                format!("alpha ({a},{b}) leaves the alphabet")
            })?;
            let target = e(&f2, 3, &[a as u32, b as u32]);
            ensure(
                induced_word(&w, &dom).unwrap() == induced_word(&target, &dom).unwrap(),
                || format!("alpha ({a},{b}) induces a different bijection"),
            )?;
            letters += w.len();
        }
    }
    Ok(format!(
        "16 exponent vectors on 64 points, {letters} letters in total"
    ))
}

fn tame_generators() -> Outcome {
    let mut count = 0;
    for p in [2u64, 3] {
        let f = Field::new(p, 1).unwrap();
        let top = 2 * p as u32 - 1;
        for n in [2usize, 3] {
            let vs: Vec<Vec<u32>> = if n == 2 {
                (0..=top).map(|a| vec![a]).collect()
            } else {
                (0..=top)
                    .flat_map(|a| (0..=top).map(move |b| vec![a, b]))
                    .collect()
            };
            for v in vs {
                let w = tame_generators_word(&f, n, &v).map_err(|e| e.to_string())?;
                ensure(is_tame_alphabet_word(&w), || {
                    format!("p={p} v={v:?}: foreign letter")
                })?;
                ensure(w.to_map() == e(&f, n, &v).to_map(), || {
                    format!("p={p} v={v:?}: recomposes to {}", w.to_map().render())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} exponent vectors recompose exactly"))
}

fn nagata_certificate() -> Outcome {
    let f3 = Field::new(3, 1).unwrap();
    let w = nagata_word(&ZPoly::one(), &ZPoly::z(), &f3).map_err(|e| e.to_string())?;
    let mut points = 0;
    for m in 1..=2 {
        let res = mimic_fixed_variable(&w, m).map_err(|e| e.to_string())?;
        ensure(res.all_pass, || format!("m={m}: certificate fails"))?;
        points += res.certificate.len();
    }
    Ok(format!("{points} specializations agree"))
}

fn random_word(rng: &mut ChaCha8Rng, f: &Field, n: usize, len: usize) -> Word<Field> {
    experiments::random_word(rng, f, n, len).unwrap()
}

fn bsgs_matches_brute_force(degree: usize, gens: &[Perm]) -> Result<bool, String> {
    let g = Bsgs::new(degree, gens).map_err(|e| e.to_string())?;
    Ok(match brute_force_order(degree, gens, BRUTE_FORCE_LIMIT) {
        Some(bf) => g.order() == bf.into(),
        None => true,
    })
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // induced bijections respect composition
    let cases = [
        (Field::new(2, 1).unwrap(), 2u32, 3usize),
        (Field::new(3, 1).unwrap(), 1, 2),
        (Field::new(2, 2).unwrap(), 1, 2),
    ];
    let mut pairs = 0;
    for (f, m, n) in &cases {
        let dom = Domain::new(f, *m, *n).unwrap();
        for _ in 0..40 {
            let a = random_word(&mut rng, f, *n, 5);
            let b = random_word(&mut rng, f, *n, 5);
            let lhs = induced_word(&a.then(&b), &dom).unwrap();
            let rhs = induced_word(&a, &dom)
                .unwrap()
                .compose(&induced_word(&b, &dom).unwrap());
            ensure(lhs == rhs, || {
                format!("homomorphism fails for {} and {}", a.render(), b.render())
            })?;
            pairs += 1;
        }
    }

    // Schreier-Sims against breadth-first closure
    let mut groups = 0;
    let f2 = Field::new(2, 1).unwrap();
    for (f, n, m, spec) in [
        (f2.clone(), 3, 1, "tame"),
        (f2.clone(), 3, 1, "linear"),
        (f2.clone(), 3, 1, "affine"),
        (f2.clone(), 3, 1, "derksen"),
        (f2.clone(), 2, 2, "tame-deg3"),
        (f2.clone(), 2, 2, "linear"),
        (Field::new(3, 1).unwrap(), 2, 1, "affine"),
        (Field::new(2, 2).unwrap(), 2, 1, "linear"),
    ] {
        let dom = Domain::new(&f, m, n).unwrap();
        let gens: Vec<Perm> = generator_set(spec, &f, n, m)
            .unwrap()
            .iter()
            .map(|g| induced_gen(&g.gen, &f, &dom).unwrap())
            .collect();
        ensure(bsgs_matches_brute_force(dom.size(), &gens)?, || {
            format!("order mismatch for {spec} over F_{} n={n} m={m}", f.q())
        })?;
        groups += 1;
    }
    let dom = Domain::new(&f2, 1, 3).unwrap();
    for _ in 0..30 {
        let gens: Vec<Perm> = (0..2)
            .map(|_| induced_word(&random_word(&mut rng, &f2, 3, 3), &dom).unwrap())
            .collect();
        ensure(bsgs_matches_brute_force(dom.size(), &gens)?, || {
            "random subgroup order mismatch".into()
        })?;
        groups += 1;
    }

    // plane decomposition round trip
    let mut words = 0;
    for f in [
        Field::new(2, 1).unwrap(),
        Field::new(3, 1).unwrap(),
        Field::new(2, 2).unwrap(),
        Field::new(5, 1).unwrap(),
    ] {
        for _ in 0..60 {
            let len = rng.gen_range(1..9);
            let map = random_word(&mut rng, &f, 2, len).to_map();
            let w = jvdk_decompose_dim2(&map).map_err(|e| e.to_string())?;
            ensure(w.to_map() == map, || {
                format!("round trip fails for {}", map.render())
            })?;
            words += 1;
        }
    }

    // conjugation by T_m shifts the last exponent by α_2 + 1
    let mut conj = 0;
    let mut zero_slot = Vec::new();
    for m in 1..=2u32 {
        let dom = Domain::new(&f2, m, 3).unwrap();
        let tm = build_tm_word(&f2, 3, m).unwrap();
        let top = 2u32.pow(m) - 1;
        for a2 in 0..=top {
            for a3 in 0..=top {
                let lhs = induced_word(&tm_conjugate(&e(&f2, 3, &[a2, a3]), &tm), &dom).unwrap();
                let rhs = induced_word(&e(&f2, 3, &[a2, a3 + a2 + 1]), &dom).unwrap();
                if a3 == 0 {
                    zero_slot.push((m, a2, lhs == rhs));
                    continue;
                }
                ensure(lhs == rhs, || format!("m={m} alpha=({a2},{a3})"))?;
                conj += 1;
            }
        }
    }

    // h_m = u^{k-1} and the Fermat identity in characteristic two
    for m in 1..=3u32 {
        let f = Field::new(2, m).unwrap();
        let k = 1u64 << (2 * m - 1);
        for u in f.elements() {
            ensure(f.pow(u, 1 << (2 * m)) == u, || {
                format!("u^(2^2m) != u at m={m}")
            })?;
            if u.is_zero() {
                continue;
            }
            let h = (1..2 * m).fold(Fq::ZERO, |acc, j| f.add(acc, f.pow(u, k - (1 << j))));
            ensure(h == f.pow(u, k - 1), || {
                format!("h_m(u) != u^(k-1) at m={m}")
            })?;
        }
    }

    // conjugation identity for elementary maps over F_3 and F_4
    let mut tlin = 0;
    for (p, r) in [(3u64, 1u32), (2, 2)] {
        let f = Field::new(p, r).unwrap();
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                let rep =
                    experiments::tlin_identity_check(&f, &[a, b]).map_err(|e| e.to_string())?;
                ensure(rep.pass, || format!("q={} alpha=({a},{b})", f.q()))?;
                tlin += 1;
            }
        }
    }

    // E_{1,α} moves points with u_3 = 0 when α_3 = 0, so the identity needs α_3 >= 1
    let counterexamples = zero_slot.iter().filter(|(_, _, holds)| !holds).count();
    ensure(counterexamples == zero_slot.len(), || {
        format!("unexpected agreement with a zero last exponent: {zero_slot:?}")
    })?;
    Ok(format!(
        "{pairs} homomorphism pairs, {groups} groups, {words} plane round trips, \
         {conj} T_m conjugations with alpha_3 >= 1 \
         ({counterexamples} of {} with alpha_3 = 0 differ, as predicted), h_m for m <= 3, {tlin} conjugation identities",
        zero_slot.len()
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: f64,
    run: fn() -> Outcome,
}

#[test]
fn acceptance() {
    let criteria = [
        Criterion {
            id: 1,
            name: "linear normal closure has index 2 in the tame group on F_4^2",
            limit: 5.0,
            run: glin_index,
        },
        Criterion {
            id: 2,
            name: "tame generators of F_2^3 induce all of S_8",
            limit: 5.0,
            run: full_symmetric_image,
        },
        Criterion {
            id: 3,
            name: "parity of tame generators on F_4^2 and linear generators on F_2^3",
            limit: 1.0,
            run: parity,
        },
        Criterion {
            id: 4,
            name: "T_m agrees with psi and its closed forms",
            limit: 10.0,
            run: tm_correctness,
        },
        Criterion {
            id: 5,
            name: "Vandermonde coefficient identities",
            limit: 5.0,
            run: vandermonde,
        },
        Criterion {
            id: 6,
            name: "Derksen words mimic every E_1,alpha on F_4^3",
            limit: 60.0,
            run: derksen_mimic,
        },
        Criterion {
            id: 7,
            name: "reduced tame generating set recomposes",
            limit: 30.0,
            run: tame_generators,
        },
        Criterion {
            id: 8,
            name: "fixed-variable mimicking certificate over F_3",
            limit: 10.0,
            run: nagata_certificate,
        },
        Criterion {
            id: 9,
            name: "oracle property suites",
            limit: 120.0,
            run: property_suites,
        },
    ];
    let mut failed = Vec::new();
    writeln!(std::io::stdout()).expect("stdout is writable");
    for c in &criteria {
        let start = Instant::now();
        let out = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        let (pass, detail) = match out {
            Ok(d) if secs < c.limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(d) => (false, d),
        };
        let line = format!(
            "{} [{}] {}: {} ({secs:.2} s, limit {} s)",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            detail,
            c.limit
        );
        writeln!(std::io::stdout(), "{line}").expect("stdout is writable");
        if !pass {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn derksen_word_helper_matches_builder() {
    let f2 = Field::new(2, 1).unwrap();
    let a = derksen_mimic_word(&f2, 3, 2, &[2, 3]).unwrap();
    let mut b = DerksenMimic::new(&f2, 3, 2).unwrap();
    assert_eq!(a, b.word(&[2, 3]).unwrap());
}
