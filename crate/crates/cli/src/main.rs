use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hrestrict::binomial::{expand, green_bound, macaulay_bound, mnz_h2_bound};
use hrestrict::decomposition::{PlaneCurveGate, RuleApplication};
use hrestrict::oracle::{
    charp_counterexample, hilbert_function, lex_growth, restriction_dimension, socle_vector,
    stanley_split, wlp_test, FieldSpec, LinearForm, MonomialIdeal, QuotientAlgebra, SplitForm,
    WlpOutcome,
};
use hrestrict::prover::{
    analyze_gorenstein_with, enumerate_candidates, h2_lower_bound_check, wlp_analyze,
    AnalyzeOptions, H2Check, Verdict, VerdictTag,
};
use hrestrict::{CharAssumption, Error, HVector, SocleType};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "hrestrict",
    version,
    about = "Hilbert-function bounds under hyperplane restriction, Gorenstein obstructions and an exact algebra oracle"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Macaulay i-binomial expansion of N at level D.
    Expand { n: BigUint, d: usize },
    /// Evaluate a growth or restriction bound.
    Bound {
        #[arg(long, value_enum)]
        kind: BoundKind,
        /// N (or the codimension r for mnz-h2).
        a: BigUint,
        /// Degree d (or the socle degree e for mnz-h2).
        b: usize,
    },
    /// O-sequence and symmetry report for an h-vector.
    Check { h: String },
    /// Try to prove that no Gorenstein algebra has h-vector H.
    Analyze {
        #[arg(long = "char", default_value = "zero")]
        char: String,
        h: String,
        /// Write the certificate as JSON to this file.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// List the surviving decompositions of inconclusive vectors.
        #[arg(long)]
        witnesses: bool,
        /// Characteristic requirement for plane-curve rigidity.
        #[arg(long, default_value = "strict")]
        gate: String,
        /// Limit on the search space of the witness enumeration.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Decide the weak Lefschetz property from the h-vector alone.
    Wlp {
        #[arg(long, default_value = "gorenstein")]
        socle: String,
        #[arg(long = "char", default_value = "zero")]
        char: String,
        h: String,
    },
    /// Classify every symmetric O-sequence (1, r, ..., r, 1) of socle degree e.
    Enumerate {
        #[arg(long)]
        codim: u64,
        #[arg(long = "socle-degree")]
        socle_degree: usize,
        #[arg(long = "char", default_value = "zero")]
        char: String,
        /// Maximum number of candidates.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
    /// Computations on actual algebras.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Macaulay,
    Green,
    #[value(name = "mnz-h2")]
    MnzH2,
}

#[derive(Args)]
struct IdealArgs {
    /// Comma-separated monomial generators, e.g. "x^2,y^2,z^2".
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    vars: usize,
    /// 0 for the rationals, otherwise a prime.
    #[arg(long = "char", default_value_t = 0)]
    char: u64,
    /// Degree cap for ideals that are not artinian.
    #[arg(long)]
    cap: Option<usize>,
}

impl IdealArgs {
    fn algebra(&self) -> Result<QuotientAlgebra, Error> {
        let field = FieldSpec::new(self.char)?;
        let ideal = MonomialIdeal::parse(&self.ideal, self.vars)?;
        Ok(QuotientAlgebra::new(ideal, field, self.cap))
    }
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Hilbert function, socle, and optionally WLP and restriction data.
    Algebra {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Test the weak Lefschetz property.
        #[arg(long)]
        wlp: bool,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Compare restriction by a random form with Green's bound.
        #[arg(long)]
        restrict: bool,
    },
    /// Degree-(d+1) growth of the lex quotient with N standard monomials.
    Lex { n: u64, d: usize, r: usize },
    /// Hyperplane sections of span(x^p G, y^p G, z^p G) over F_p.
    Charp {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'd')]
        d: usize,
        #[arg(long)]
        gdeg: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Observed decomposition h = b + c for a variable or a linear form.
    Split {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Variable to split by, e.g. z or x3.
        #[arg(long, conflicts_with = "form")]
        var: Option<String>,
        /// Linear form coefficients, e.g. "1,2,3".
        #[arg(long, allow_hyphen_values = true)]
        form: Option<String>,
    },
}

/// What a command produced: text, its JSON form, and the exit code.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

fn num(n: &BigUint) -> Value {
    match n.to_u64_digits().as_slice() {
        [] => json!(0),
        [v] => json!(v),
        _ => json!(n.to_string()),
    }
}

fn parse_h(s: &str) -> Result<HVector, Error> {
    HVector::parse(s)
}

fn parse_char(s: &str) -> Result<CharAssumption, Error> {
    s.parse()
}

fn verdict_code(tag: VerdictTag) -> u8 {
    if tag.is_decided() {
        0
    } else {
        2
    }
}

fn render_steps(out: &mut String, steps: &[RuleApplication]) {
    for (i, s) in steps.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {:>3}. {:<20} c_{}: {} -> {}{}",
            i + 1,
            s.rule.to_string(),
            s.degree,
            s.before,
            s.after,
            if s.detail.is_empty() {
                String::new()
            } else {
                format!("   ({})", s.detail)
            }
        );
    }
}

fn render_verdict(v: &Verdict, show_witnesses: bool) -> String {
    let mut out = String::new();
    let h = HVector::new(v.h.clone()).map(|h| h.to_string()).unwrap_or_default();
    let _ = writeln!(out, "{}  h = ({h})", v.verdict);
    if let Some(cert) = &v.certificate {
        if let Some(claim) = &cert.wlp {
            let _ = writeln!(out, "rule {}: {}", claim.rule, claim.rule.statement());
            for hyp in &claim.hypotheses {
                let _ = writeln!(out, "  hypothesis: {hyp}");
            }
        }
        if !cert.steps.is_empty() {
            let _ = writeln!(out, "steps:");
            render_steps(&mut out, &cert.steps);
        }
        let _ = writeln!(out, "conclusion: {}", cert.conclusion);
    }
    if let Some(note) = &v.note {
        let _ = writeln!(out, "note: {note}");
    }
    if show_witnesses && !v.witnesses.is_empty() {
        let _ = writeln!(out, "surviving decompositions (b | c):");
        for w in &v.witnesses {
            let join = |xs: &[BigUint]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            let _ = writeln!(out, "  ({}) | ({})", join(&w.b), join(&w.c));
        }
    }
    out
}

fn run(cmd: Command) -> Result<Output, Error> {
    match cmd {
        Command::Expand { n, d } => {
            let x = expand(&n, d)?;
            Ok(Output::ok(
                format!("{n} = {x}\n"),
                json!({ "n": num(&n), "degree": d, "expansion": x }),
            ))
        }
        Command::Bound { kind, a, b } => {
            let (name, value) = match kind {
                BoundKind::Macaulay | BoundKind::Green if b == 0 => {
                    return Err(Error::OutOfRange("degree must be at least 1".into()))
                }
                BoundKind::Macaulay => ("macaulay", macaulay_bound(&a, b)),
                BoundKind::Green => ("green", green_bound(&a, b)),
                BoundKind::MnzH2 => {
                    if b < 2 || a == BigUint::ZERO {
                        return Err(Error::OutOfRange(
                            "mnz-h2 needs codimension r >= 1 and socle degree e >= 2".into(),
                        ));
                    }
                    ("mnz-h2", mnz_h2_bound(&a, b))
                }
            };
            Ok(Output::ok(
                format!("{value}\n"),
                json!({ "kind": name, "a": num(&a), "b": b, "value": num(&value) }),
            ))
        }
        Command::Check { h } => {
            let h = parse_h(&h)?;
            let violation = h.macaulay_violation();
            let symmetric = h.is_symmetric();
            let h2 = h2_lower_bound_check(&h);
            let mut text = format!(
                "h = ({h})\nsocle degree: {}\ncodimension: {}\n",
                h.socle_degree(),
                h.codimension()
            );
            match &violation {
                None => text.push_str("O-sequence: yes\n"),
                Some((d, bound)) => {
                    let _ = writeln!(
                        text,
                        "O-sequence: no (h_{d} = {} exceeds Macaulay bound {bound})",
                        h.get(*d)
                    );
                }
            }
            let _ = writeln!(text, "symmetric: {}", if symmetric { "yes" } else { "no" });
            match &h2 {
                H2Check::Pass { bound } => {
                    let _ = writeln!(text, "h_2 lower bound for Gorenstein: pass (h_2 >= {bound})");
                }
                H2Check::Fail { bound } => {
                    let _ = writeln!(text, "h_2 lower bound for Gorenstein: FAIL (h_2 < {bound})");
                }
                H2Check::NotApplicable => {
                    text.push_str("h_2 lower bound for Gorenstein: not applicable (socle degree 2)\n")
                }
            }
            let json = json!({
                "h": h.entries().iter().map(num).collect::<Vec<_>>(),
                "socle_degree": h.socle_degree(),
                "codimension": num(h.codimension()),
                "o_sequence": violation.is_none(),
                "violation": violation.map(|(d, bound)| json!({ "degree": d, "value": num(h.get(d)), "bound": num(&bound) })),
                "symmetric": symmetric,
                "h2_lower_bound": h2,
            });
            Ok(Output::ok(text, json))
        }
        Command::Analyze {
            char,
            h,
            certificate,
            witnesses,
            gate,
            budget,
        } => {
            let h = parse_h(&h)?;
            let char = parse_char(&char)?;
            let gate: PlaneCurveGate = gate.parse()?;
            let opts = AnalyzeOptions {
                witnesses: 10,
                budget,
                gate,
            };
            let v = analyze_gorenstein_with(&h, char, opts);
            if let (Some(path), Some(cert)) = (&certificate, &v.certificate) {
                std::fs::write(path, cert.to_json() + "\n").map_err(|e| {
                    Error::OutOfRange(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            let mut text = render_verdict(&v, witnesses);
            if let Some(path) = &certificate {
                if v.certificate.is_some() {
                    let _ = writeln!(text, "certificate written to {}", path.display());
                } else {
                    text.push_str("no certificate: the verdict is not a refutation\n");
                }
            }
            Ok(Output {
                text,
                json: serde_json::to_value(&v).expect("verdict serializes"),
                code: verdict_code(v.tag()),
            })
        }
        Command::Wlp { socle, char, h } => {
            let h = parse_h(&h)?;
            let socle: SocleType = socle.parse()?;
            let char = parse_char(&char)?;
            let v = wlp_analyze(&h, socle, char);
            Ok(Output {
                text: render_verdict(&v, false),
                json: serde_json::to_value(&v).expect("verdict serializes"),
                code: verdict_code(v.tag()),
            })
        }
        Command::Enumerate {
            codim,
            socle_degree,
            char,
            budget,
        } => {
            let char = parse_char(&char)?;
            let rep = enumerate_candidates(codim, socle_degree, char, budget)?;
            let mut text = String::new();
            for c in &rep.candidates {
                let h = HVector::new(c.h.clone()).map(|h| h.to_string()).unwrap_or_default();
                let _ = writeln!(text, "{:<16} ({h})", c.label.to_string());
            }
            let _ = writeln!(
                text,
                "total {}: not-gorenstein {}, inconclusive {}, below-mnz-bound {}",
                rep.candidates.len(),
                rep.not_gorenstein,
                rep.inconclusive,
                rep.below_mnz_bound
            );
            Ok(Output::ok(text, serde_json::to_value(&rep).expect("report serializes")))
        }
        Command::Oracle(o) => run_oracle(o),
    }
}

fn run_oracle(cmd: OracleCommand) -> Result<Output, Error> {
    match cmd {
        OracleCommand::Algebra {
            ideal,
            wlp,
            trials,
            seed,
            restrict,
        } => {
            let a = ideal.algebra()?;
            let hf = hilbert_function(&a);
            let mut text = format!("A = k[{} vars]/{} over {}\n", a.num_vars(), a.ideal(), a.field());
            let _ = writeln!(text, "Hilbert function: {hf}");
            let mut json = json!({
                "ideal": a.ideal().to_string(),
                "vars": a.num_vars(),
                "char": a.field().characteristic(),
                "hilbert_function": hf.values,
                "artinian": hf.artinian,
            });
            if !hf.artinian {
                let _ = writeln!(text, "not artinian: showing degrees 0..={}", a.top_degree());
            } else {
                let socle = socle_vector(&a)?;
                let total: u64 = socle.iter().sum();
                let top = socle.last().copied().unwrap_or(0);
                let kind = if total == 1 {
                    "Gorenstein"
                } else if total == top {
                    "level"
                } else {
                    "not level"
                };
                let _ = writeln!(text, "socle vector: {socle:?} ({kind})");
                json["socle"] = json!(socle);
                json["socle_type"] = json!(kind.to_lowercase());
            }
            if restrict {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let l = LinearForm::random(a.num_vars(), a.field(), &mut rng);
                let _ = writeln!(text, "restriction by L = {l}:");
                let mut rows = Vec::new();
                for d in 1..=a.top_degree() {
                    let got = restriction_dimension(&a, &l, d);
                    let bound = green_bound(&BigUint::from(a.dim(d)), d);
                    let _ = writeln!(text, "  d = {d}: h'_d = {got}, Green bound {bound}");
                    rows.push(json!({ "degree": d, "restriction": got, "green_bound": num(&bound) }));
                }
                json["restriction"] = json!({ "form": l, "degrees": rows });
            }
            if wlp {
                let outcome = wlp_test(&a, trials, seed)?;
                match &outcome {
                    WlpOutcome::HasWlp { form, .. } => {
                        let _ = writeln!(text, "WLP holds (witness L = {form})");
                    }
                    WlpOutcome::FailsForAllSampled {
                        exhaustive,
                        forms_tried,
                        best,
                        ranks,
                    } => {
                        if *exhaustive {
                            let _ = writeln!(text, "WLP fails (exhaustive over {})", a.field());
                        } else {
                            let _ = writeln!(
                                text,
                                "WLP fails for all {forms_tried} sampled forms (not a proof)"
                            );
                        }
                        let _ = writeln!(text, "best form L = {best}:");
                        for r in ranks {
                            let _ = writeln!(
                                text,
                                "  A_{} -> A_{}: rank {} of {}",
                                r.degree,
                                r.degree + 1,
                                r.rank,
                                r.required
                            );
                        }
                    }
                }
                json["wlp"] = serde_json::to_value(&outcome).expect("outcome serializes");
            }
            Ok(Output::ok(text, json))
        }
        OracleCommand::Lex { n, d, r } => {
            let g = lex_growth(n, d, r)?;
            let mac = macaulay_bound(&BigUint::from(n), d.max(1));
            Ok(Output::ok(
                format!("{g}\n"),
                json!({ "n": n, "d": d, "r": r, "growth": g, "macaulay_bound": num(&mac) }),
            ))
        }
        OracleCommand::Charp {
            p,
            d,
            gdeg,
            seed,
            samples,
        } => {
            let rep = charp_counterexample(p, d, gdeg, seed, samples)?;
            let mut text = format!("G = {} over F_{p}\n", rep.g);
            let _ = writeln!(
                text,
                "W = span(x^{p} G, y^{p} G, z^{p} G): dim {}, codim {} in degree {d}",
                rep.dim_w, rep.codim_w
            );
            if let Some(m) = rep.m {
                let _ = writeln!(
                    text,
                    "h_{d} = {} is the plane-curve value for m = {m}; Green bound {}",
                    rep.codim_w, rep.green_bound
                );
            }
            for s in &rep.samples {
                let _ = writeln!(
                    text,
                    "  H = ({},{},{}): dim W_H = {}, codim W_H = {}",
                    s.h[0], s.h[1], s.h[2], s.dim_w_h, s.codim_w_h
                );
            }
            let _ = writeln!(
                text,
                "prediction codim W = C(d+2,2)-3, codim W_H = d-1: {}",
                if rep.matches_prediction() { "holds" } else { "FAILS" }
            );
            Ok(Output::ok(text, serde_json::to_value(&rep).expect("report serializes")))
        }
        OracleCommand::Split { ideal, var, form } => {
            let a = ideal.algebra()?;
            let how = match (var, form) {
                (Some(v), None) => {
                    let gen = MonomialIdeal::parse(&v, a.num_vars())?;
                    match gen.generators() {
                        [m] if m.degree() == 1 => SplitForm::Variable(
                            m.exponents().iter().position(|&e| e == 1).expect("degree one"),
                        ),
                        _ => return Err(Error::Parse(format!("`{v}` is not a variable"))),
                    }
                }
                (None, Some(f)) => {
                    let coeffs: Vec<i64> = f
                        .split(',')
                        .map(|c| c.trim().parse::<i64>())
                        .collect::<Result<_, _>>()
                        .map_err(|e| Error::Parse(format!("form `{f}`: {e}")))?;
                    if coeffs.len() != a.num_vars() {
                        return Err(Error::Parse(format!(
                            "form has {} coefficients, expected {}",
                            coeffs.len(),
                            a.num_vars()
                        )));
                    }
                    SplitForm::General(LinearForm::from_i64s(&coeffs, a.field())?)
                }
                _ => return Err(Error::Parse("give exactly one of --var or --form".into())),
            };
            let s = stanley_split(&a, &how)?;
            let fmt = |v: &[u64]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            let text = format!(
                "h = ({})\nb = ({})\nc = ({})\nh = b + c: {}\n",
                fmt(&s.h),
                fmt(&s.b),
                fmt(&s.c),
                if s.sums_to_h() { "yes" } else { "NO" }
            );
            Ok(Output::ok(text, serde_json::to_value(&s).expect("split serializes")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hrestrict::prover::Certificate;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn certificate_type_is_exported() {
        let v = analyze_gorenstein_with(
            &HVector::parse("1,10,9,10,1").unwrap(),
            CharAssumption::NotTwo,
            AnalyzeOptions::default(),
        );
        let c: &Certificate = v.certificate.as_ref().unwrap();
        assert_eq!(c.verdict, VerdictTag::NotGorenstein);
    }
}
