//! Verdicts on candidate h-vectors: refutations of Gorensteinness, forced
//! weak Lefschetz conclusions, and batch drivers over families.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::{binom, macaulay_bound, mnz_h2_bound};
use crate::decomposition::{
    enumerate_decompositions, init_state, init_state_with_gate, propagate, Decomposition,
    DecompositionState, PlaneCurveGate, Propagation, RuleApplication,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::error::{Error, Result};
use crate::hvector::{binomial_shape, family_gorenstein_gap, CharAssumption, HVector, SocleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictTag {
    NotGorenstein,
    Inconclusive,
    #[serde(rename = "forced-wlp")]
    ForcedWlp,
    #[serde(rename = "wlp-unknown")]
    WlpUnknown,
}

impl VerdictTag {
    /// Whether the verdict settles the question asked.
    pub fn is_decided(self) -> bool {
        matches!(self, VerdictTag::NotGorenstein | VerdictTag::ForcedWlp)
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictTag::NotGorenstein => "NOT GORENSTEIN",
            VerdictTag::Inconclusive => "INCONCLUSIVE",
            VerdictTag::ForcedWlp => "FORCED WLP",
            VerdictTag::WlpUnknown => "WLP UNKNOWN",
        })
    }
}

/// A necessary condition that fails before any decomposition reasoning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Precheck {
    NotOSequence {
        degree: usize,
        #[serde(with = "crate::serde_big::uint")]
        value: BigUint,
        #[serde(with = "crate::serde_big::uint")]
        bound: BigUint,
    },
    NotSymmetric { index: usize },
}

impl Precheck {
    fn find(h: &HVector) -> Option<Precheck> {
        if let Some((degree, bound)) = h.macaulay_violation() {
            return Some(Precheck::NotOSequence {
                degree,
                value: h.get(degree).clone(),
                bound,
            });
        }
        let e = h.socle_degree();
        (0..=e)
            .find(|&i| h.get(i) != h.get(e - i))
            .map(|index| Precheck::NotSymmetric { index })
    }

    fn holds_for(&self, h: &HVector) -> bool {
        match self {
            Precheck::NotOSequence {
                degree,
                value,
                bound,
            } => {
                *degree >= 2
                    && *degree <= h.socle_degree()
                    && h.get(*degree) == value
                    && macaulay_bound(h.get(degree - 1), degree - 1) == *bound
                    && value > bound
            }
            Precheck::NotSymmetric { index } => {
                let e = h.socle_degree();
                *index <= e && h.get(*index) != h.get(e - index)
            }
        }
    }

    fn anchor(&self) -> String {
        match self {
            Precheck::NotOSequence {
                degree,
                value,
                bound,
            } => format!(
                "Macaulay's theorem: h_{{d+1}} <= ((h_d)_(d))^1_1 for every standard graded algebra; \
                 here h_{degree} = {value} > {bound}"
            ),
            Precheck::NotSymmetric { index } => format!(
                "Gorenstein h-vectors are symmetric (h_i = h_{{e-i}}); here index {index} breaks symmetry"
            ),
        }
    }
}

/// The WLP statements the prover can apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WlpRule {
    W1,
    W2,
    W3,
    W4,
}

impl WlpRule {
    pub fn statement(self) -> &'static str {
        match self {
            WlpRule::W1 => {
                "Gorenstein, char != 2, h_1 = e >= 3 and h_2 = e: the decomposition is forced to \
                 c = (1, e-1, 0, ..., 0), so h_i = e for 1 <= i <= e-1 and multiplication by a general \
                 linear form is onto in every degree >= 2"
            }
            WlpRule::W2 => {
                "level, char != 2, codimension >= 3, h_{e-1} <= h_e = e+1: Green's bound gives c_e <= 1, \
                 linear-space rigidity excludes c_e = 1, so x L is onto in degree e, hence injective \
                 there, hence injective below by levelness"
            }
            WlpRule::W3 => {
                "Gorenstein, char != 2, h = (1,4,a,4,1): rigidity forces c_3 = 0, b = (1,4,4,1), so x L is \
                 injective from degree 1, onto into degree 3, and onto into degree 4 since the socle \
                 sits in degree 4 only"
            }
            WlpRule::W4 => {
                "level, char != 2, h_d = C(m+d,d) and h_{d-1} = C(m+d-1,d-1)+1: a kernel in degree d-1 \
                 would push c_d to Green's bound and force h_{d-1} = C(m+d-1,d-1), so x L is injective \
                 in degree d-1 and, by levelness, in every lower degree"
            }
        }
    }
}

impl fmt::Display for WlpRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpClaim {
    pub rule: WlpRule,
    pub hypotheses: Vec<String>,
    /// Multiplication by a general linear form has maximal rank on
    /// `A_i -> A_{i+1}` for every `i <= through_degree`.
    pub through_degree: usize,
}

/// A replayable justification of a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(with = "crate::serde_big::uint_vec")]
    pub h: Vec<BigUint>,
    pub char: CharAssumption,
    pub socle: SocleType,
    #[serde(default)]
    pub plane_curve_gate: PlaneCurveGate,
    pub verdict: VerdictTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precheck: Option<Precheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wlp: Option<WlpClaim>,
    pub steps: Vec<RuleApplication>,
    pub conclusion: String,
}

impl Certificate {
    fn from_state(state: &DecompositionState, verdict: VerdictTag, conclusion: String) -> Self {
        Certificate {
            h: state.h().entries().to_vec(),
            char: state.char_assumption(),
            socle: state.socle(),
            plane_curve_gate: state.gate(),
            verdict,
            precheck: None,
            wlp: None,
            steps: state.trace().to_vec(),
            conclusion,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }

    /// Re-derives the verdict from scratch: prechecks are re-evaluated,
    /// every step is replayed against its rule, and the end state must
    /// support the recorded verdict.
    pub fn replay(&self) -> Result<VerdictTag> {
        let h = HVector::new(self.h.clone())?;
        let bad = |reason: String| Error::Replay {
            step: self.steps.len(),
            reason,
        };
        if let Some(pre) = &self.precheck {
            if !self.steps.is_empty() || self.verdict != VerdictTag::NotGorenstein {
                return Err(bad("a precheck certificate carries no steps".into()));
            }
            if !pre.holds_for(&h) {
                return Err(bad(format!("precheck {pre:?} does not hold for {h}")));
            }
            return Ok(VerdictTag::NotGorenstein);
        }
        let state =
            DecompositionState::replay(&h, self.socle, self.char, self.plane_curve_gate, &self.steps)?;
        let derived = match (&self.wlp, self.verdict) {
            (None, VerdictTag::NotGorenstein) => {
                if self.socle != SocleType::Gorenstein || !state.is_empty() {
                    return Err(bad("steps do not end in an empty state".into()));
                }
                VerdictTag::NotGorenstein
            }
            (Some(claim), VerdictTag::ForcedWlp) => {
                if state.is_empty() {
                    return Err(bad("WLP certificate ends in an empty state".into()));
                }
                let found = wlp_rule_for(&h, self.socle, self.char, &state)
                    .ok_or_else(|| bad(format!("{} hypotheses do not hold", claim.rule)))?;
                if found.rule != claim.rule || found.through_degree != claim.through_degree {
                    return Err(bad(format!(
                        "recorded {} through degree {}, derived {} through degree {}",
                        claim.rule, claim.through_degree, found.rule, found.through_degree
                    )));
                }
                VerdictTag::ForcedWlp
            }
            (_, other) => return Err(bad(format!("verdict {other} carries no certificate"))),
        };
        Ok(derived)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub verdict: VerdictTag,
    #[serde(with = "crate::serde_big::uint_vec")]
    pub h: Vec<BigUint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Decomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn new(tag: VerdictTag, h: &HVector) -> Self {
        Verdict {
            verdict: tag,
            h: h.entries().to_vec(),
            certificate: None,
            witnesses: Vec::new(),
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn tag(&self) -> VerdictTag {
        self.verdict
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Maximum number of witness decompositions reported for inconclusive
    /// vectors.
    pub witnesses: usize,
    pub budget: u64,
    pub gate: PlaneCurveGate,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            witnesses: 10,
            budget: DEFAULT_ENUMERATION_BUDGET,
            gate: PlaneCurveGate::default(),
        }
    }
}

/// Tries to show that no Gorenstein algebra has h-vector `h`.
pub fn analyze_gorenstein(h: &HVector, char: CharAssumption) -> Verdict {
    analyze_gorenstein_with(h, char, AnalyzeOptions::default())
}

pub fn analyze_gorenstein_with(h: &HVector, char: CharAssumption, opts: AnalyzeOptions) -> Verdict {
    if let Some(pre) = Precheck::find(h) {
        let conclusion = format!("{h} is not a Gorenstein h-vector: {}", pre.anchor());
        let mut v = Verdict::new(VerdictTag::NotGorenstein, h);
        v.certificate = Some(Certificate {
            h: h.entries().to_vec(),
            char,
            socle: SocleType::Gorenstein,
            plane_curve_gate: opts.gate,
            verdict: VerdictTag::NotGorenstein,
            precheck: Some(pre),
            wlp: None,
            steps: Vec::new(),
            conclusion,
        });
        return v;
    }
    let state = init_state_with_gate(h, SocleType::Gorenstein, char, opts.gate)
        .expect("prechecked symmetric O-sequence");
    match propagate(state) {
        Propagation::Empty(s) => {
            let last = s.trace().last().expect("emptiness needs a step");
            let conclusion = format!(
                "{h} is not a Gorenstein h-vector (char {char}): no decomposition h = b + c survives; \
                 {} empties c_{}",
                last.rule, last.degree
            );
            let mut v = Verdict::new(VerdictTag::NotGorenstein, h);
            v.certificate = Some(Certificate::from_state(&s, VerdictTag::NotGorenstein, conclusion));
            v
        }
        Propagation::Fixpoint(s) => {
            let mut v = Verdict::new(VerdictTag::Inconclusive, h);
            if opts.witnesses == 0 {
                return v;
            }
            match enumerate_decompositions(&s, opts.witnesses, opts.budget) {
                Ok(w) => v.witnesses = w,
                Err(e) => v = v.with_note(format!("witness search skipped: {e}")),
            }
            v
        }
    }
}

/// Lower bound on `h_2` from codimension and socle degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum H2Check {
    Pass {
        #[serde(with = "crate::serde_big::uint")]
        bound: BigUint,
    },
    Fail {
        #[serde(with = "crate::serde_big::uint")]
        bound: BigUint,
    },
    /// Socle degree 2: the bound formula does not specialize (it would
    /// reject `(1,2,1)`).
    NotApplicable,
}

pub fn h2_lower_bound_check(h: &HVector) -> H2Check {
    let e = h.socle_degree();
    if e < 3 {
        return H2Check::NotApplicable;
    }
    let bound = mnz_h2_bound(h.codimension(), e);
    if h.get(2) < &bound {
        H2Check::Fail { bound }
    } else {
        H2Check::Pass { bound }
    }
}

/// Determines which WLP statement, if any, applies to `h` given the
/// propagated decomposition state.
fn wlp_rule_for(
    h: &HVector,
    socle: SocleType,
    char: CharAssumption,
    state: &DecompositionState,
) -> Option<WlpClaim> {
    if !char.excludes_two() {
        return None;
    }
    let e = h.socle_degree();
    let r = h.codimension();
    let small = |n: u64| BigUint::from(n);
    if socle == SocleType::Gorenstein && h.is_symmetric() && e >= 3 {
        let forced = (2..=e).all(|i| state.c_interval(i).lo.is_zero() && state.c_interval(i).hi.is_zero());
        if *r == small(e as u64) && *h.get(2) == small(e as u64) && forced {
            return Some(WlpClaim {
                rule: WlpRule::W1,
                hypotheses: vec![
                    format!("h_1 = e = {e} >= 3"),
                    format!("h_2 = {e}"),
                    "propagation forces c_i = 0 for all i >= 2".into(),
                ],
                through_degree: e - 1,
            });
        }
    }
    if socle.is_level() && *r >= small(3) && *h.get(e) == small(e as u64 + 1) && h.get(e - 1) <= h.get(e)
    {
        return Some(WlpClaim {
            rule: WlpRule::W2,
            hypotheses: vec![
                "level".into(),
                format!("codimension {r} >= 3"),
                format!("h_{} = {} <= h_{e} = e+1 = {}", e - 1, h.get(e - 1), h.get(e)),
            ],
            through_degree: e - 1,
        });
    }
    if socle == SocleType::Gorenstein
        && e == 4
        && h.is_symmetric()
        && *r == small(4)
        && *h.get(3) == small(4)
    {
        return Some(WlpClaim {
            rule: WlpRule::W3,
            hypotheses: vec![format!("Gorenstein with h = (1,4,{},4,1)", h.get(2))],
            through_degree: 3,
        });
    }
    if socle.is_level() {
        for d in (2..=e).rev() {
            let Some(m) = binomial_shape(h.get(d), d) else {
                continue;
            };
            if *h.get(d - 1) == binom(&(&m + d - 1u32), d as i64 - 1) + 1u32 {
                return Some(WlpClaim {
                    rule: WlpRule::W4,
                    hypotheses: vec![
                        "level".into(),
                        format!("h_{d} = C({m}+{d},{d}) = {}", h.get(d)),
                        format!("h_{} = C({m}+{},{}) + 1 = {}", d - 1, d - 1, d - 1, h.get(d - 1)),
                    ],
                    through_degree: d - 1,
                });
            }
        }
    }
    None
}

/// Applies the first matching WLP statement among W1..W4.
pub fn wlp_analyze(h: &HVector, socle: SocleType, char: CharAssumption) -> Verdict {
    let unknown = |note: String| Verdict::new(VerdictTag::WlpUnknown, h).with_note(note);
    if !h.is_o_sequence() {
        return unknown(format!("{h} is not an O-sequence, so no algebra has it"));
    }
    if !char.excludes_two() {
        return unknown(format!(
            "every WLP statement here needs char != 2; char {char} allows 2"
        ));
    }
    if socle == SocleType::Gorenstein && !h.is_symmetric() {
        return unknown(format!("{h} is not symmetric, so it is not a Gorenstein h-vector"));
    }
    let state = match init_state(h, socle, char) {
        Ok(s) => s,
        Err(e) => return unknown(e.to_string()),
    };
    let state = match propagate(state) {
        Propagation::Fixpoint(s) => s,
        Propagation::Empty(_) => {
            return unknown(format!(
                "no algebra of this socle type has h-vector {h}; the WLP question is vacuous"
            ))
        }
    };
    match wlp_rule_for(h, socle, char, &state) {
        Some(claim) => {
            let full = claim.through_degree + 1 == h.socle_degree();
            let conclusion = format!(
                "every {} algebra with h-vector {h} (char {char}) has the weak Lefschetz property{} by {}: {}",
                if socle == SocleType::Gorenstein { "Gorenstein" } else { "level" },
                if full {
                    String::new()
                } else {
                    format!(" through degree {}", claim.through_degree)
                },
                claim.rule,
                claim.rule.statement()
            );
            let mut cert = Certificate::from_state(&state, VerdictTag::ForcedWlp, conclusion);
            cert.wlp = Some(claim);
            let mut v = Verdict::new(VerdictTag::ForcedWlp, h);
            v.certificate = Some(cert);
            v
        }
        None => unknown("no WLP statement applies".into()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub parameter: u64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub char: CharAssumption,
    pub entries: Vec<FamilyEntry>,
}

impl FamilyReport {
    pub fn count(&self, tag: VerdictTag) -> usize {
        self.entries.iter().filter(|e| e.verdict.tag() == tag).count()
    }

    pub fn all(&self, tag: VerdictTag) -> bool {
        self.entries.iter().all(|e| e.verdict.tag() == tag)
    }
}

/// `(1, C(m+3,3), (m+1)^2, C(m+3,3), 1)` for `m = 2..=m_max`.
pub fn analyze_gap_family(m_max: u64, char: CharAssumption) -> Result<FamilyReport> {
    if m_max < 2 {
        return Err(Error::OutOfRange(format!("the family starts at m = 2, got m_max = {m_max}")));
    }
    let opts = AnalyzeOptions {
        witnesses: 0,
        ..AnalyzeOptions::default()
    };
    let entries = (2..=m_max)
        .into_par_iter()
        .map(|m| {
            let h = family_gorenstein_gap(m)?;
            Ok(FamilyEntry {
                parameter: m,
                verdict: analyze_gorenstein_with(&h, char, opts),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyReport {
        family: "(1, C(m+3,3), (m+1)^2, C(m+3,3), 1)".into(),
        char,
        entries,
    })
}

/// `(1,14,a,a,14,1)` for every `a <= 13` giving an O-sequence.
pub fn analyze_codim14_socle5(char: CharAssumption) -> FamilyReport {
    let entries = (1..=13u64)
        .filter_map(|a| {
            let h = HVector::from_u64s(&[1, 14, a, a, 14, 1]).ok()?;
            h.is_o_sequence().then(|| FamilyEntry {
                parameter: a,
                verdict: analyze_gorenstein_with(&h, char, AnalyzeOptions { witnesses: 0, ..Default::default() }),
            })
        })
        .collect();
    FamilyReport {
        family: "(1,14,a,a,14,1), a <= 13".into(),
        char,
        entries,
    }
}

/// `(1,18,a,t,a,18,1)` for every `a <= 17` and every `t` giving an
/// O-sequence. Entries are keyed by `1000 * a + t`.
pub fn analyze_codim18_socle6(char: CharAssumption) -> FamilyReport {
    let pairs: Vec<(u64, u64)> = (1..=17u64)
        .flat_map(|a| {
            let top = macaulay_bound(&BigUint::from(a), 2).to_u64().unwrap_or(0);
            (1..=top).map(move |t| (a, t))
        })
        .collect();
    let entries = pairs
        .into_par_iter()
        .filter_map(|(a, t)| {
            let h = HVector::from_u64s(&[1, 18, a, t, a, 18, 1]).ok()?;
            h.is_o_sequence().then(|| FamilyEntry {
                parameter: 1000 * a + t,
                verdict: analyze_gorenstein_with(&h, char, AnalyzeOptions { witnesses: 0, ..Default::default() }),
            })
        })
        .collect();
    FamilyReport {
        family: "(1,18,a,t,a,18,1), a <= 17".into(),
        char,
        entries,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CandidateLabel {
    NotGorenstein,
    Inconclusive,
    #[serde(rename = "below-mnz-bound")]
    BelowMnzBound,
}

impl fmt::Display for CandidateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CandidateLabel::NotGorenstein => "not-gorenstein",
            CandidateLabel::Inconclusive => "inconclusive",
            CandidateLabel::BelowMnzBound => "below-mnz-bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    #[serde(with = "crate::serde_big::uint_vec")]
    pub h: Vec<BigUint>,
    pub label: CandidateLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub codim: u64,
    pub socle_degree: usize,
    pub char: CharAssumption,
    pub candidates: Vec<Candidate>,
    pub not_gorenstein: usize,
    pub inconclusive: usize,
    pub below_mnz_bound: usize,
}

/// Every symmetric O-sequence `(1, r, ..., r, 1)` of socle degree `e`, in
/// lexicographic order, classified. Fails when more than `budget`
/// candidates exist.
pub fn enumerate_candidates(
    r: u64,
    e: usize,
    char: CharAssumption,
    budget: u64,
) -> Result<CandidateReport> {
    if r < 1 || e < 2 {
        return Err(Error::OutOfRange(format!(
            "need codimension >= 1 and socle degree >= 2, got r = {r}, e = {e}"
        )));
    }
    let vectors = symmetric_o_sequences(r, e, budget)?;
    let candidates: Vec<Candidate> = vectors
        .into_par_iter()
        .map(|h| {
            let label = match h2_lower_bound_check(&h) {
                H2Check::Fail { .. } => CandidateLabel::BelowMnzBound,
                _ => {
                    let opts = AnalyzeOptions {
                        witnesses: 0,
                        ..AnalyzeOptions::default()
                    };
                    match analyze_gorenstein_with(&h, char, opts).tag() {
                        VerdictTag::NotGorenstein => CandidateLabel::NotGorenstein,
                        _ => CandidateLabel::Inconclusive,
                    }
                }
            };
            Candidate {
                h: h.entries().to_vec(),
                label,
            }
        })
        .collect();
    let count = |l| candidates.iter().filter(|c| c.label == l).count();
    Ok(CandidateReport {
        codim: r,
        socle_degree: e,
        char,
        not_gorenstein: count(CandidateLabel::NotGorenstein),
        inconclusive: count(CandidateLabel::Inconclusive),
        below_mnz_bound: count(CandidateLabel::BelowMnzBound),
        candidates,
    })
}

/// Symmetric O-sequences with `h_1 = r` and socle degree `e`: the first
/// half is grown under Macaulay's bound, mirrored, then checked whole.
pub fn symmetric_o_sequences(r: u64, e: usize, budget: u64) -> Result<Vec<HVector>> {
    let half = e / 2;
    let mut out = Vec::new();
    let mut prefix = vec![BigUint::one(), BigUint::from(r)];
    let mut produced = 0u64;
    fn grow(
        prefix: &mut Vec<BigUint>,
        half: usize,
        e: usize,
        budget: u64,
        produced: &mut u64,
        out: &mut Vec<HVector>,
    ) -> Result<()> {
        if prefix.len() > half {
            *produced += 1;
            if *produced > budget {
                return Err(Error::BudgetExceeded {
                    needed: BigUint::from(*produced),
                    budget,
                });
            }
            let mut v: Vec<BigUint> = vec![BigUint::zero(); e + 1];
            for (i, x) in prefix.iter().enumerate().take(half + 1) {
                v[i] = x.clone();
                v[e - i] = x.clone();
            }
            let h = HVector::new(v)?;
            if h.is_o_sequence() {
                out.push(h);
            }
            return Ok(());
        }
        let d = prefix.len() - 1;
        let top = macaulay_bound(&prefix[d], d);
        let mut x = BigUint::one();
        while x <= top {
            prefix.push(x.clone());
            grow(prefix, half, e, budget, produced, out)?;
            prefix.pop();
            x += 1u32;
        }
        Ok(())
    }
    if e == 2 || half < 1 {
        let h = HVector::new(vec![BigUint::one(), BigUint::from(r), BigUint::one()])?;
        return Ok(if e == 2 { vec![h] } else { Vec::new() });
    }
    grow(&mut prefix, half, e, budget, &mut produced, &mut out)?;
    Ok(out)
}
