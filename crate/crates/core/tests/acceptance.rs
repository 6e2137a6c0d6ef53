//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion with
//! its wall time against the allowed limit, and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hrestrict::binomial::{binom_u64, green_bound, macaulay_bound, mnz_h2_bound};
use hrestrict::decomposition::{
    enumerate_decompositions, init_state_with_gate, propagate, PlaneCurveGate,
};
use hrestrict::hvector::{CharAssumption, HVector, SocleType};
use hrestrict::oracle::{
    charp_counterexample, lex_growth, restriction_dimension, wlp_test, FieldSpec, LinearForm,
    Monomial, MonomialIdeal, QuotientAlgebra, WlpOutcome,
};
use hrestrict::prover::{
    analyze_codim14_socle5, analyze_codim18_socle6, analyze_gap_family, analyze_gorenstein,
    symmetric_o_sequences, wlp_analyze, VerdictTag,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn u(n: u64) -> BigUint {
    BigUint::from(n)
}

fn h(v: &[u64]) -> HVector {
    HVector::from_u64s(v).unwrap()
}

fn operator_values() -> Check {
    ensure(green_bound(&u(14), 4) == u(4), || "green_bound(14,4) != 4".into())?;
    ensure(green_bound(&u(18), 5) == u(4), || "green_bound(18,5) != 4".into())?;
    for e in 3..=12u64 {
        ensure(green_bound(&u(e), e as usize - 1) == u(1), || {
            format!("green_bound({e},{}) != 1", e - 1)
        })?;
    }
    for m in 2..=8u64 {
        let r = binom_u64(m + 3, 3);
        ensure(mnz_h2_bound(&r, 4) == u((m + 1) * (m + 1)), || {
            format!("mnz_h2_bound(C({},3),4) != {}", m + 3, (m + 1) * (m + 1))
        })?;
    }
    for m in 2..=20u64 {
        let n = binom_u64(m + 1, 2) - 1u32;
        let want = binom_u64(m + 2, 3) - u(m);
        ensure(macaulay_bound(&n, 2) == want, || format!("macaulay_bound(C({},2)-1,2) != {want}", m + 1))?;
    }
    Ok("29 operator values exact".into())
}

fn smallest_cases() -> Check {
    let a = analyze_gorenstein(&h(&[1, 10, 9, 10, 1]), CharAssumption::NotTwo);
    ensure(a.tag() == VerdictTag::NotGorenstein, || format!("(1,10,9,10,1): {}", a.tag()))?;
    let cert = a.certificate.as_ref().ok_or("missing certificate")?;
    ensure(cert.replay().map_err(|e| e.to_string())? == VerdictTag::NotGorenstein, || {
        "certificate replay disagrees".into()
    })?;
    let b = analyze_gorenstein(&h(&[1, 11, 10, 11, 1]), CharAssumption::NotTwo);
    ensure(b.tag() == VerdictTag::Inconclusive, || format!("(1,11,10,11,1): {}", b.tag()))?;
    Ok(format!(
        "(1,10,9,10,1) refuted in {} steps; (1,11,10,11,1) inconclusive",
        cert.steps.len()
    ))
}

fn gap_family() -> Check {
    let strict = analyze_gap_family(10, CharAssumption::NotTwo).map_err(|e| e.to_string())?;
    ensure(strict.entries.len() == 9 && strict.all(VerdictTag::NotGorenstein), || {
        format!("only {} of 9 refuted under not-two", strict.count(VerdictTag::NotGorenstein))
    })?;
    let loose = analyze_gap_family(10, CharAssumption::Arbitrary).map_err(|e| e.to_string())?;
    ensure(loose.all(VerdictTag::Inconclusive), || {
        format!("{} refuted without a characteristic assumption", loose.count(VerdictTag::NotGorenstein))
    })?;
    Ok("m = 2..10: 9/9 refuted (not-two), 9/9 inconclusive (arbitrary)".into())
}

fn socle_five_six_families() -> Check {
    let five = analyze_codim14_socle5(CharAssumption::Zero);
    ensure(five.all(VerdictTag::NotGorenstein), || "some (1,14,a,a,14,1) not refuted".into())?;
    let six = analyze_codim18_socle6(CharAssumption::Zero);
    ensure(six.all(VerdictTag::NotGorenstein), || {
        let bad: Vec<u64> = six
            .entries
            .iter()
            .filter(|e| e.verdict.tag() != VerdictTag::NotGorenstein)
            .map(|e| e.parameter)
            .collect();
        format!("(1,18,a,t,a,18,1) not refuted for 1000a+t in {bad:?}")
    })?;
    Ok(format!(
        "{} vectors (1,14,a,a,14,1) and {} vectors (1,18,a,t,a,18,1) refuted",
        five.entries.len(),
        six.entries.len()
    ))
}

fn propagation_vs_enumeration() -> Check {
    let chars = [
        CharAssumption::Zero,
        CharAssumption::NotTwo,
        CharAssumption::Exactly(2),
        CharAssumption::Exactly(3),
        CharAssumption::Exactly(5),
        CharAssumption::Arbitrary,
    ];
    let mut vectors = Vec::new();
    for e in 2..=5 {
        for r in 1..=20 {
            vectors.extend(
                symmetric_o_sequences(r, e, 1_000_000)
                    .map_err(|err| err.to_string())?
                    .into_iter()
                    .filter(|v| v.entries().iter().all(|x| *x <= u(20))),
            );
        }
    }
    let (mut cases, mut empty) = (0usize, 0usize);
    for v in &vectors {
        for &ch in &chars {
            for gate in [PlaneCurveGate::Strict, PlaneCurveGate::Relaxed] {
                let init = init_state_with_gate(v, SocleType::Gorenstein, ch, gate)
                    .map_err(|err| err.to_string())?;
                let refuted = propagate(init.clone()).is_empty();
                let none = enumerate_decompositions(&init, 1, u64::MAX)
                    .map_err(|err| err.to_string())?
                    .is_empty();
                ensure(refuted == none, || {
                    format!("{v} ({ch}, {gate:?}): propagation empty = {refuted}, enumeration empty = {none}")
                })?;
                cases += 1;
                empty += refuted as usize;
            }
        }
    }
    Ok(format!(
        "{} vectors x {} settings = {cases} cases agree ({empty} empty)",
        vectors.len(),
        chars.len() * 2
    ))
}

fn wlp_ground_truth() -> Check {
    let ideal = MonomialIdeal::parse("x^2, y^2, z^2", 3).map_err(|e| e.to_string())?;
    let alg = |p| QuotientAlgebra::new(ideal.clone(), FieldSpec::new(p).unwrap(), None);
    let f2 = wlp_test(&alg(2), 7, 0).map_err(|e| e.to_string())?;
    match &f2 {
        WlpOutcome::FailsForAllSampled {
            exhaustive: true,
            forms_tried: 7,
            ranks,
            ..
        } => ensure(ranks[1].rank <= 2, || "F_2 rank A_1 -> A_2 exceeds 2".into())?,
        other => return Err(format!("over F_2 expected exhaustive failure, got {other:?}")),
    }
    ensure(wlp_test(&alg(101), 20, 0).map_err(|e| e.to_string())?.has_wlp(), || {
        "no WLP witness over F_101".into()
    })?;
    ensure(wlp_test(&alg(0), 20, 0).map_err(|e| e.to_string())?.has_wlp(), || {
        "no WLP witness over Q".into()
    })?;
    let forced = wlp_analyze(&h(&[1, 3, 3, 1]), SocleType::Gorenstein, CharAssumption::NotTwo);
    ensure(forced.tag() == VerdictTag::ForcedWlp, || format!("prover: {}", forced.tag()))?;
    let char2 = wlp_analyze(&h(&[1, 3, 3, 1]), SocleType::Gorenstein, CharAssumption::Exactly(2));
    ensure(char2.tag() == VerdictTag::WlpUnknown, || {
        format!("prover claims {} in characteristic 2, where the oracle shows failure", char2.tag())
    })?;
    Ok("F_2 fails on all 7 forms; F_101 and Q have witnesses; prover forced (not-two) / unknown (char 2)".into())
}

fn charp_sections() -> Check {
    for (p, d, k) in [(2u64, 2usize, 0usize), (3, 3, 0), (2, 3, 1)] {
        let rep = charp_counterexample(p, d, k, 2024, 20).map_err(|e| e.to_string())?;
        ensure(rep.samples.len() == 20 && rep.matches_prediction(), || {
            format!("(p={p}, d={d}, deg G={k}): codim W = {}, sections {:?}", rep.codim_w, rep.samples)
        })?;
    }
    Ok("codim W = C(d+2,2)-3 and codim W_H = d-1 for 3 cases x 20 planes".into())
}

fn lex_sharpness() -> Check {
    let mut checked = 0;
    for d in 1..=4usize {
        for n in 1..=60u64 {
            let mac = macaulay_bound(&u(n), d);
            let g = lex_growth(n, d, n as usize).map_err(|e| e.to_string())?;
            ensure(u(g) == mac, || format!("lex_growth({n},{d},{n}) = {g} != {mac}"))?;
            checked += 1;
            for r in 1..n as usize {
                if binom_u64((r + d - 1) as u64, d as i64) < u(n) {
                    continue;
                }
                let g = lex_growth(n, d, r).map_err(|e| e.to_string())?;
                ensure(u(g) <= mac, || format!("lex_growth({n},{d},{r}) = {g} > {mac}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, d, r) triples"))
}

/// 500 monomial ideals in at most 3 variables generated in degrees 1..=3:
/// every such ideal in 1 and 2 variables, then distinct 3-variable ideals
/// drawn with a fixed seed.
fn ideal_catalog() -> Vec<MonomialIdeal> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |ideal: MonomialIdeal, out: &mut Vec<MonomialIdeal>| {
        let key = (ideal.num_vars(), ideal.generators().to_vec());
        if seen.insert(key) {
            out.push(ideal);
        }
    };
    for r in 1..=2usize {
        let mons: Vec<Monomial> = (1..=3).flat_map(|d| Monomial::all_of_degree(r, d)).collect();
        for mask in 0u32..(1 << mons.len()) {
            let gens = (0..mons.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| mons[i].clone())
                .collect();
            push(MonomialIdeal::new(r, gens).unwrap(), &mut out);
        }
    }
    let mons: Vec<Monomial> = (1..=3).flat_map(|d| Monomial::all_of_degree(3, d)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    while out.len() < 500 {
        let k = rng.gen_range(0..=5);
        let gens = (0..k).map(|_| mons[rng.gen_range(0..mons.len())].clone()).collect();
        push(MonomialIdeal::new(3, gens).unwrap(), &mut out);
    }
    out.truncate(500);
    out
}

fn green_property_suite() -> Check {
    let catalog = ideal_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checks = 0usize;
    for ideal in &catalog {
        let a = QuotientAlgebra::new(ideal.clone(), FieldSpec::Rational, Some(6));
        let top = a.top_degree().min(6);
        for _ in 0..20 {
            let l = LinearForm::random(a.num_vars(), FieldSpec::Rational, &mut rng);
            for d in 1..=top {
                let got = restriction_dimension(&a, &l, d);
                let bound = green_bound(&u(a.dim(d) as u64), d);
                ensure(u(got) <= bound, || {
                    format!("{ideal}, L = {l}, d = {d}: restriction {got} > Green bound {bound}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{} ideals x 20 forms, {checks} degree checks, 0 violations", catalog.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Check); 9] = [
        ("operator values", Duration::from_secs(1), operator_values),
        ("smallest open cases", Duration::from_secs(1), smallest_cases),
        ("gap family and characteristic gating", Duration::from_secs(5), gap_family),
        ("socle degree 5 and 6 families", Duration::from_secs(30), socle_five_six_families),
        ("propagation vs enumeration", Duration::from_secs(600), propagation_vs_enumeration),
        ("WLP ground truth", Duration::from_secs(5), wlp_ground_truth),
        ("characteristic-p sections", Duration::from_secs(5), charp_sections),
        ("lex sharpness of Macaulay's bound", Duration::from_secs(60), lex_sharpness),
        ("Green bound on an ideal catalog", Duration::from_secs(300), green_property_suite),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if took > *limit => ("FAIL", format!("exceeded time limit {limit:?}")),
            Ok(msg) => ("PASS", msg),
            Err(msg) => ("FAIL", msg),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {}: {status} [{name}] {detail} ({:.3}s / limit {}s)",
            i + 1,
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
