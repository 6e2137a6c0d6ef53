//! Stanley decomposition `h = b + c` as an interval constraint system.
//!
//! For a general linear form `L`, `c` is the h-vector of `R/(I, L)` and `b`
//! (indices shifted by one) the h-vector of `R/(I : L)`. Only the intervals
//! for `c` are stored; `b_i = h_i - c_i` mirrors them. Each rule narrows
//! some `c_d` from facts that hold for every algebra with h-vector `h`, so an
//! empty interval proves that no such algebra exists.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binom, green_bound, macaulay_bound, macaulay_preimage};
use crate::error::{Error, Result};
use crate::hvector::{
    binomial_shape, linear_space_prefix, plane_curve_prefix, plane_curve_shape, CharAssumption,
    HVector, SocleType,
};

/// Closed integer interval `[lo, hi]`; empty when `lo > hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
}

impl Interval {
    pub fn new(lo: impl Into<BigInt>, hi: impl Into<BigInt>) -> Self {
        Interval {
            lo: lo.into(),
            hi: hi.into(),
        }
    }

    pub fn point(v: impl Into<BigInt>) -> Self {
        let v = v.into();
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval {
            lo: (&self.lo).max(&other.lo).clone(),
            hi: (&self.hi).min(&other.hi).clone(),
        }
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        self.is_empty() || (other.lo <= self.lo && self.hi <= other.hi)
    }

    /// Number of integers in the interval.
    pub fn width(&self) -> BigUint {
        if self.is_empty() {
            BigUint::zero()
        } else {
            (&self.hi - &self.lo + 1u32).to_biguint().expect("nonempty width")
        }
    }

    /// `{h - x : x in self}`.
    pub fn reflect(&self, h: &BigUint) -> Interval {
        let h = BigInt::from(h.clone());
        Interval {
            lo: &h - &self.hi,
            hi: &h - &self.lo,
        }
    }

    fn shift(&self, delta: &BigInt) -> Interval {
        Interval {
            lo: &self.lo + delta,
            hi: &self.hi + delta,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::serde_big::int_pair::serialize(&(self.lo.clone(), self.hi.clone()), s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (lo, hi) = crate::serde_big::int_pair::deserialize(d)?;
        Ok(Interval { lo, hi })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleId {
    NonNegativity,
    SymmetryLink,
    GreenCap,
    LinearSpaceRigidity,
    PlaneCurveRigidity,
    MacaulayGrowthC,
    MacaulayGrowthB,
}

impl RuleId {
    /// Application order within one propagation round.
    pub const ORDER: [RuleId; 7] = [
        RuleId::NonNegativity,
        RuleId::SymmetryLink,
        RuleId::GreenCap,
        RuleId::LinearSpaceRigidity,
        RuleId::PlaneCurveRigidity,
        RuleId::MacaulayGrowthC,
        RuleId::MacaulayGrowthB,
    ];

    /// The mathematical fact the rule applies.
    pub fn anchor(self) -> &'static str {
        match self {
            RuleId::NonNegativity => "dimensions: 0 <= c_d <= h_d",
            RuleId::SymmetryLink => {
                "Stanley decomposition: b = h(R/(I:L)) is a Gorenstein h-vector, so b_i = b_{e+1-i}"
            }
            RuleId::GreenCap => "Green restriction bound: h'_d <= ((h_d)_(d))^{-1}_0",
            RuleId::LinearSpaceRigidity => {
                "Green linear-space rigidity (char != 2, zero socle below d): \
                 h_d = C(m+d,d) and h'_d = C(m-1+d,d) force h_i = C(m+i,i) for i <= d"
            }
            RuleId::PlaneCurveRigidity => {
                "Green plane-curve rigidity (char 0 or large, zero socle below d): \
                 h_d = C(d+2,2)-C(d-m+2,2) and h'_d = m force h_i = C(i+2,2)-C(i-m+2,2) for i <= d"
            }
            RuleId::MacaulayGrowthC => "Macaulay bound on c = h(R/(I,L)): c_{d+1} <= ((c_d)_(d))^1_1",
            RuleId::MacaulayGrowthB => {
                "Macaulay bound on b = h(R/(I:L)) shifted by one: b_{i+1} <= ((b_i)_(i-1))^1_1"
            }
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Characteristic requirement for the plane-curve rigidity rule at degree
/// `d` with curve degree `m`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlaneCurveGate {
    /// Characteristic 0 or greater than `d + 1`.
    #[default]
    Strict,
    /// Characteristic 0 or at least `m`.
    Relaxed,
}

impl PlaneCurveGate {
    pub fn allows(self, char: CharAssumption, d: usize, m: usize) -> bool {
        match self {
            PlaneCurveGate::Strict => char.zero_or_at_least(d as u64 + 2),
            PlaneCurveGate::Relaxed => char.zero_or_at_least(m as u64),
        }
    }
}

impl std::str::FromStr for PlaneCurveGate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "strict" => Ok(PlaneCurveGate::Strict),
            "relaxed" => Ok(PlaneCurveGate::Relaxed),
            other => Err(Error::Parse(format!(
                "unknown plane-curve gate `{other}` (expected strict or relaxed)"
            ))),
        }
    }
}

/// One narrowing step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    pub rule: RuleId,
    pub degree: usize,
    pub before: Interval,
    pub after: Interval,
    pub anchor: String,
    #[serde(default)]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionState {
    h: HVector,
    socle: SocleType,
    char: CharAssumption,
    gate: PlaneCurveGate,
    c: Vec<Interval>,
    trace: Vec<RuleApplication>,
}

/// Result of [`propagate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    Fixpoint(DecompositionState),
    Empty(DecompositionState),
}

impl Propagation {
    pub fn state(&self) -> &DecompositionState {
        match self {
            Propagation::Fixpoint(s) | Propagation::Empty(s) => s,
        }
    }

    pub fn into_state(self) -> DecompositionState {
        match self {
            Propagation::Fixpoint(s) | Propagation::Empty(s) => s,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Propagation::Empty(_))
    }
}

fn nat(v: &BigInt) -> BigUint {
    v.to_biguint().unwrap_or_default()
}

fn int(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

/// Sets up the constraint system for `h`: `c_i in [0, h_i]`, `c_0 = 1`,
/// `c_1 = h_1 - 1` (so `b_1 = 1`), and in Gorenstein mode `c_e = 0`,
/// `b_e = 1`.
pub fn init_state(
    h: &HVector,
    socle: SocleType,
    char: CharAssumption,
) -> Result<DecompositionState> {
    init_state_with_gate(h, socle, char, PlaneCurveGate::default())
}

pub fn init_state_with_gate(
    h: &HVector,
    socle: SocleType,
    char: CharAssumption,
    gate: PlaneCurveGate,
) -> Result<DecompositionState> {
    if let Some((degree, bound)) = h.macaulay_violation() {
        return Err(Error::NotOSequence {
            degree,
            value: h.get(degree).clone(),
            bound,
        });
    }
    let e = h.socle_degree();
    if socle == SocleType::Gorenstein && !h.get(e).is_one() {
        return Err(Error::InvalidHVector(format!(
            "a Gorenstein h-vector ends in 1, got h_{e} = {}",
            h.get(e)
        )));
    }
    let mut c: Vec<Interval> = h
        .entries()
        .iter()
        .map(|v| Interval::new(0, int(v)))
        .collect();
    c[0] = Interval::point(1);
    c[1] = Interval::point(int(h.get(1)) - 1);
    if socle == SocleType::Gorenstein {
        c[e] = c[e].intersect(&Interval::point(0));
    }
    Ok(DecompositionState {
        h: h.clone(),
        socle,
        char,
        gate,
        c,
        trace: Vec::new(),
    })
}

impl DecompositionState {
    pub fn h(&self) -> &HVector {
        &self.h
    }

    pub fn socle(&self) -> SocleType {
        self.socle
    }

    pub fn char_assumption(&self) -> CharAssumption {
        self.char
    }

    pub fn gate(&self) -> PlaneCurveGate {
        self.gate
    }

    pub fn socle_degree(&self) -> usize {
        self.h.socle_degree()
    }

    /// Gorenstein mode tracks `b` as a symmetric O-sequence; level mode only
    /// constrains `c`.
    pub fn is_gorenstein_mode(&self) -> bool {
        self.socle == SocleType::Gorenstein
    }

    pub fn c_interval(&self, i: usize) -> &Interval {
        &self.c[i]
    }

    pub fn c_intervals(&self) -> &[Interval] {
        &self.c
    }

    /// `b_i = h_i - c_i`; `b_0` is identically 0.
    pub fn b_interval(&self, i: usize) -> Interval {
        if i == 0 {
            Interval::point(0)
        } else {
            self.c[i].reflect(self.h.get(i))
        }
    }

    pub fn trace(&self) -> &[RuleApplication] {
        &self.trace
    }

    pub fn is_empty(&self) -> bool {
        self.c.iter().any(Interval::is_empty)
    }

    /// Product of interval widths over all degrees.
    pub fn search_space(&self) -> BigUint {
        self.c.iter().map(Interval::width).product()
    }

    fn rules(&self) -> impl Iterator<Item = RuleId> + '_ {
        RuleId::ORDER.into_iter().filter(move |r| {
            self.is_gorenstein_mode()
                || !matches!(r, RuleId::SymmetryLink | RuleId::MacaulayGrowthB)
        })
    }

    /// The interval that `rule` derives for `c_d` from the current state, or
    /// `None` when the rule says nothing at `d`.
    pub fn rule_bound(&self, rule: RuleId, d: usize) -> Option<(Interval, String)> {
        let e = self.socle_degree();
        if d > e {
            return None;
        }
        let h_d = self.h.get(d);
        match rule {
            RuleId::NonNegativity => Some((Interval::new(0, int(h_d)), String::new())),
            RuleId::SymmetryLink => {
                if !self.is_gorenstein_mode() || d == 0 {
                    return None;
                }
                let j = e + 1 - d;
                if j == d {
                    return None;
                }
                let delta = int(h_d) - int(self.h.get(j));
                Some((
                    self.c[j].shift(&delta),
                    format!("b_{d} = b_{j}, so c_{d} = c_{j} + ({delta})"),
                ))
            }
            RuleId::GreenCap => {
                if d == 0 {
                    return None;
                }
                let cap = green_bound(h_d, d);
                let detail = format!("c_{d} <= (({h_d})_({d}))^{{-1}}_0 = {cap}");
                Some((Interval::new(0, int(&cap)), detail))
            }
            RuleId::LinearSpaceRigidity => {
                if d == 0 || !self.char.excludes_two() || !self.socle.zero_socle_below(d, e) {
                    return None;
                }
                let m = binomial_shape(h_d, d)?;
                let cap = binom(&(&m + d - 1u32), d as i64);
                if green_bound(h_d, d) != cap {
                    return None;
                }
                let shape = linear_space_prefix(&m, d);
                if self.h.entries()[..=d] == shape[..] {
                    return None;
                }
                let detail = format!(
                    "h_{d} = C({m}+{d},{d}); c_{d} = {cap} would force h_i = C({m}+i,i) for i <= {d}, \
                     which fails, so c_{d} <= {}",
                    &cap - 1u32
                );
                Some((Interval::new(0, int(&cap) - 1), detail))
            }
            RuleId::PlaneCurveRigidity => {
                if d == 0 || !self.socle.zero_socle_below(d, e) {
                    return None;
                }
                let m = plane_curve_shape(h_d, d)?;
                if !self.gate.allows(self.char, d, m) {
                    return None;
                }
                if green_bound(h_d, d) != BigUint::from(m) {
                    return None;
                }
                let shape = plane_curve_prefix(m, d).ok()?;
                if self.h.entries()[..=d] == shape.entries()[..] {
                    return None;
                }
                let detail = format!(
                    "h_{d} is the degree-{m} plane curve value; c_{d} = {m} would force the plane curve \
                     prefix ({shape}), which fails, so c_{d} <= {}",
                    m - 1
                );
                Some((Interval::new(0, m as i64 - 1), detail))
            }
            RuleId::MacaulayGrowthC => {
                if d == 0 {
                    return None;
                }
                let mut bound = Interval::new(0, int(h_d));
                let mut parts = Vec::new();
                if d >= 2 && !self.c[d - 1].is_empty() {
                    let prev = nat(&self.c[d - 1].hi);
                    let cap = macaulay_bound(&prev, d - 1);
                    parts.push(format!("c_{d} <= (({prev})_({}))^1_1 = {cap}", d - 1));
                    bound.hi = int(&cap);
                }
                if d < e && !self.c[d + 1].is_empty() {
                    let next = nat(&self.c[d + 1].lo);
                    let floor = macaulay_preimage(&next, d);
                    parts.push(format!("c_{} >= {next} needs c_{d} >= {floor}", d + 1));
                    bound.lo = int(&floor);
                }
                (!parts.is_empty()).then(|| (bound, parts.join("; ")))
            }
            RuleId::MacaulayGrowthB => {
                if !self.is_gorenstein_mode() || d < 2 {
                    return None;
                }
                // b_d sits at shifted index d - 1.
                let mut b_bound = Interval::new(0, int(h_d));
                let mut parts = Vec::new();
                if d >= 3 && !self.c[d - 1].is_empty() {
                    let prev = nat(&self.b_interval(d - 1).hi);
                    let cap = macaulay_bound(&prev, d - 2);
                    parts.push(format!("b_{d} <= (({prev})_({}))^1_1 = {cap}", d - 2));
                    b_bound.hi = int(&cap);
                }
                if d < e && !self.c[d + 1].is_empty() {
                    let next = nat(&self.b_interval(d + 1).lo);
                    let floor = macaulay_preimage(&next, d - 1);
                    parts.push(format!("b_{} >= {next} needs b_{d} >= {floor}", d + 1));
                    b_bound.lo = int(&floor);
                }
                (!parts.is_empty()).then(|| (b_bound.reflect(h_d), parts.join("; ")))
            }
        }
    }

    /// Intersects `c_d` with the rule's bound. Returns true when the interval
    /// changed; the change is appended to the trace.
    fn narrow(&mut self, rule: RuleId, d: usize) -> bool {
        let Some((bound, detail)) = self.rule_bound(rule, d) else {
            return false;
        };
        let before = self.c[d].clone();
        let after = before.intersect(&bound);
        if after == before {
            return false;
        }
        self.trace.push(RuleApplication {
            rule,
            degree: d,
            before,
            after: after.clone(),
            anchor: rule.anchor().to_string(),
            detail,
        });
        self.c[d] = after;
        true
    }

    /// One pass of `rule` over every degree; stops at the first empty
    /// interval.
    pub fn apply_rule(mut self, rule: RuleId) -> Self {
        if !self.rules().any(|r| r == rule) {
            return self;
        }
        for d in 0..=self.socle_degree() {
            if self.narrow(rule, d) && self.c[d].is_empty() {
                break;
            }
        }
        self
    }

    /// Re-executes recorded steps from the initial state of `h`, checking that
    /// each step is exactly what its rule derives at that point.
    pub fn replay(
        h: &HVector,
        socle: SocleType,
        char: CharAssumption,
        gate: PlaneCurveGate,
        steps: &[RuleApplication],
    ) -> Result<DecompositionState> {
        let mut state = init_state_with_gate(h, socle, char, gate)?;
        for (idx, step) in steps.iter().enumerate() {
            let fail = |reason: String| Error::Replay { step: idx, reason };
            if state.is_empty() {
                return Err(fail("state already empty".into()));
            }
            if step.degree > state.socle_degree() {
                return Err(fail(format!("degree {} out of range", step.degree)));
            }
            if !state.rules().any(|r| r == step.rule) {
                return Err(fail(format!("{} does not apply in this mode", step.rule)));
            }
            let current = &state.c[step.degree];
            if *current != step.before {
                return Err(fail(format!(
                    "recorded before {} but state has {}",
                    step.before, current
                )));
            }
            let (bound, _) = state
                .rule_bound(step.rule, step.degree)
                .ok_or_else(|| fail(format!("{} is not applicable at degree {}", step.rule, step.degree)))?;
            let derived = current.intersect(&bound);
            if derived != step.after {
                return Err(fail(format!(
                    "{} derives {} at degree {}, certificate claims {}",
                    step.rule, derived, step.degree, step.after
                )));
            }
            state.c[step.degree] = derived;
            state.trace.push(step.clone());
        }
        Ok(state)
    }
}

/// Applies every rule round-robin until nothing changes or an interval
/// empties. Terminates because each recorded step strictly shrinks a finite
/// integer interval.
pub fn propagate(state: DecompositionState) -> Propagation {
    let mut state = state;
    if state.is_empty() {
        return Propagation::Empty(state);
    }
    let rules: Vec<RuleId> = state.rules().collect();
    loop {
        let mut changed = false;
        for &rule in &rules {
            for d in 0..=state.socle_degree() {
                if state.narrow(rule, d) {
                    changed = true;
                    if state.c[d].is_empty() {
                        return Propagation::Empty(state);
                    }
                }
            }
        }
        if !changed {
            return Propagation::Fixpoint(state);
        }
    }
}

pub fn rule_symmetry_link(s: DecompositionState) -> DecompositionState {
    s.apply_rule(RuleId::SymmetryLink)
}

pub fn rule_green_cap(s: DecompositionState) -> DecompositionState {
    s.apply_rule(RuleId::GreenCap)
}

pub fn rule_linear_space_rigidity(s: DecompositionState) -> DecompositionState {
    s.apply_rule(RuleId::LinearSpaceRigidity)
}

pub fn rule_plane_curve_rigidity(s: DecompositionState) -> DecompositionState {
    s.apply_rule(RuleId::PlaneCurveRigidity)
}

pub fn rule_macaulay_growth_c(s: DecompositionState) -> DecompositionState {
    s.apply_rule(RuleId::MacaulayGrowthC)
}

pub fn rule_macaulay_growth_b(s: DecompositionState) -> DecompositionState {
    s.apply_rule(RuleId::MacaulayGrowthB)
}

/// A concrete split `h = b + c`. Both vectors are indexed `0..=e`; `b_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    #[serde(with = "crate::serde_big::uint_vec")]
    pub b: Vec<BigUint>,
    #[serde(with = "crate::serde_big::uint_vec")]
    pub c: Vec<BigUint>,
}

/// Default limit on the product of interval widths for
/// [`enumerate_decompositions`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 50_000_000;

/// Exhaustive search for every `(b, c)` inside the state's intervals that
/// satisfies the raw constraints: `c` an O-sequence, `c_d` below the Green
/// cap and off the rigidity-excluded value, and in Gorenstein mode `b`
/// symmetric with `(b_1, ..., b_e)` an O-sequence. Works value by value and
/// never uses interval reasoning, so it checks [`propagate`] independently.
pub fn enumerate_decompositions(
    s: &DecompositionState,
    cap: usize,
    budget: u64,
) -> Result<Vec<Decomposition>> {
    let space = s.search_space();
    if space > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: space,
            budget,
        });
    }
    let mut search = Search::new(s);
    let mut out = Vec::new();
    if cap > 0 && !s.is_empty() {
        let mut c = Vec::with_capacity(s.socle_degree() + 1);
        search.dfs(&mut c, cap, &mut out);
    }
    Ok(out)
}

struct Search<'a> {
    s: &'a DecompositionState,
    h: Vec<u64>,
    gorenstein: bool,
    /// Per degree, the value of `c_d` excluded by a rigidity statement.
    excluded: Vec<Vec<u64>>,
    green: Vec<u64>,
    mac: HashMap<(u64, usize), u64>,
}

impl<'a> Search<'a> {
    fn new(s: &'a DecompositionState) -> Self {
        let h: Vec<u64> = s
            .h
            .entries()
            .iter()
            .map(|v| v.to_u64().expect("enumeration needs entries within u64"))
            .collect();
        let e = h.len() - 1;
        let mut excluded = vec![Vec::new(); e + 1];
        let mut green = vec![u64::MAX; e + 1];
        for d in 1..=e {
            let hd = BigUint::from(h[d]);
            let g = green_bound(&hd, d).to_u64().unwrap();
            green[d] = g;
            if !s.socle.zero_socle_below(d, e) {
                continue;
            }
            if s.char.excludes_two() {
                if let Some(m) = binomial_shape(&hd, d) {
                    let lin = linear_space_prefix(&m, d);
                    let lin_cap = binom(&(&m + d - 1u32), d as i64);
                    if lin_cap == BigUint::from(g) && s.h.entries()[..=d] != lin[..] {
                        excluded[d].push(g);
                    }
                }
            }
            if let Some(m) = plane_curve_shape(&hd, d) {
                if s.gate.allows(s.char, d, m) && g == m as u64 {
                    let curve = plane_curve_prefix(m, d).unwrap();
                    if s.h.entries()[..=d] != curve.entries()[..] {
                        excluded[d].push(g);
                    }
                }
            }
        }
        Search {
            s,
            h,
            gorenstein: s.is_gorenstein_mode(),
            excluded,
            green,
            mac: HashMap::new(),
        }
    }

    fn mac(&mut self, n: u64, d: usize) -> u64 {
        *self.mac.entry((n, d)).or_insert_with(|| {
            macaulay_bound(&BigUint::from(n), d)
                .to_u64()
                .unwrap_or(u64::MAX)
        })
    }

    /// Checks every constraint whose variables are all among `c_0..=c_d`.
    fn admissible(&mut self, c: &[u64], d: usize) -> bool {
        let e = self.h.len() - 1;
        let v = c[d];
        if v > self.h[d] {
            return false;
        }
        if d == 0 {
            return v == 1;
        }
        if d == 1 && v + 1 != self.h[1] {
            return false;
        }
        if v > self.green[d] || self.excluded[d].contains(&v) {
            return false;
        }
        if d >= 2 && v > self.mac(c[d - 1], d - 1) {
            return false;
        }
        if self.gorenstein {
            let b = |i: usize| self.h[i] - c[i];
            if d == e && b(d) != 1 {
                return false;
            }
            let partner = e + 1 - d;
            if partner < d && b(d) != b(partner) {
                return false;
            }
            if d >= 3 {
                let (prev, cur) = (b(d - 1), b(d));
                if cur > self.mac(prev, d - 2) {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&mut self, c: &mut Vec<u64>, cap: usize, out: &mut Vec<Decomposition>) {
        let d = c.len();
        let e = self.h.len() - 1;
        if d > e {
            out.push(Decomposition {
                b: (0..=e)
                    .map(|i| BigUint::from(if i == 0 { 0 } else { self.h[i] - c[i] }))
                    .collect(),
                c: c.iter().map(|&v| BigUint::from(v)).collect(),
            });
            return;
        }
        let iv = &self.s.c[d];
        let lo = iv.lo.to_u64().unwrap_or(0);
        let hi = iv.hi.to_u64().unwrap_or(0).min(self.h[d]);
        for v in lo..=hi {
            c.push(v);
            if self.admissible(c, d) {
                self.dfs(c, cap, out);
            }
            c.pop();
            if out.len() >= cap {
                return;
            }
        }
    }
}
