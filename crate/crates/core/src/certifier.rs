//! Slope classification: is `p/q`-surgery on every nontrivial knot in `S^3`
//! guaranteed to have an irreducible SU(2) representation?
//!
//! Rules R1 to R5 are tried in a fixed order and every rule that applies is
//! recorded; the first one is the headline. `2/1` cites R1 and R3.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot_invariants::{determinant, enumerate_lspace_alexander};
use crate::lens_simple::{branched_cover_order, simple_knot_genus};
use crate::slope::Slope;

/// `n = r^e` with `r` prime, or `None`. Requires `n >= 2`.
pub fn is_prime_power(n: u64) -> Option<(u64, u32)> {
    assert!(n >= 2, "is_prime_power needs n >= 2, got {n}");
    let r = (2..)
        .take_while(|d| d * d <= n)
        .find(|d| n % d == 0)
        .unwrap_or(n);
    let mut m = n;
    let mut e = 0;
    while m % r == 0 {
        m /= r;
        e += 1;
    }
    (m == 1).then_some((r, e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Open,
    FailsInGeneral,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Certified => 0,
            Verdict::Open => 2,
            Verdict::FailsInGeneral => 3,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::Open => "open",
            Verdict::FailsInGeneral => "fails_in_general",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl Rule {
    pub fn citation(self) -> &'static str {
        match self {
            Rule::R1 => {
                "Kronheimer-Mrowka: r-surgery on a nontrivial knot is not SU(2)-abelian for r in [0,2]"
            }
            Rule::R2 => {
                "prime-power numerator in (2,3): an SU(2)-abelian surgery forces a fibered strongly \
                 quasipositive genus-1 knot, and the trefoil has none in this range"
            }
            Rule::R3 => {
                "power-of-2 numerator below 7: Klassen's binary dihedral count against the \
                 determinants of genus <= 3 instanton L-space knots"
            }
            Rule::R4 => {
                "odd prime-power numerator, p/q in [4,5): the branched double cover along \
                 S(p,2q,10q) has |H_1| = 5p != p"
            }
            Rule::R5 => {
                "odd prime-power numerator, p/q in [3,4): g(S(p,2q,10q)) <= (p+1)/4, \
                 equivalently 23p-9 <= 80q <= 25p+9"
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub type Witnesses = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleRecord {
    pub rule: Rule,
    pub citation: String,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub slope: Slope,
    pub verdict: Verdict,
    pub chain: Vec<RuleRecord>,
    pub witnesses: Witnesses,
}

impl Certificate {
    pub fn rules(&self) -> impl Iterator<Item = Rule> + '_ {
        self.chain.iter().map(|r| r.rule)
    }

    pub fn cites(&self, rule: Rule) -> bool {
        self.rules().any(|r| r == rule)
    }

    /// The rule that decided a certified verdict.
    pub fn headline(&self) -> Option<Rule> {
        self.chain.first().map(|r| r.rule)
    }
}

fn ratio_string(num: u64, den: u64) -> String {
    let g = num.gcd(&den);
    if den / g == 1 {
        (num / g).to_string()
    } else {
        format!("{}/{}", num / g, den / g)
    }
}

fn witnesses<const N: usize>(pairs: [(&str, String); N]) -> Witnesses {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Determinants of genus 2 and genus 3 instanton L-space Alexander patterns.
fn low_genus_determinants() -> &'static [u64] {
    static DETS: OnceLock<Vec<u64>> = OnceLock::new();
    DETS.get_or_init(|| {
        let mut out = Vec::new();
        for g in 2..=3 {
            for delta in enumerate_lspace_alexander(g).expect("genus >= 1") {
                let det = determinant(&delta).expect("L-space patterns are symmetric, Δ(1) = 1");
                let det = u64::try_from(det).expect("small determinant");
                if !out.contains(&det) {
                    out.push(det);
                }
            }
        }
        out
    })
}

/// The `p/q ∈ [3,4)` simple-knot genus test and its linear reformulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusTest {
    pub genus: u64,
    pub genus_ok: bool,
    pub lower: u64,
    pub middle: u64,
    pub upper: u64,
    pub inequality_ok: bool,
}

/// Requires `p` odd, `gcd(p,5) = 1` and `p/q ∈ [3,6]`.
pub fn genus_test(slope: Slope) -> Result<GenusTest> {
    let genus = simple_knot_genus(slope)?;
    let (p, q) = (slope.p(), slope.q());
    let (lower, middle, upper) = ((23 * p).saturating_sub(9), 80 * q, 25 * p + 9);
    Ok(GenusTest {
        genus,
        genus_ok: 4 * genus <= p + 1,
        lower,
        middle,
        upper,
        inequality_ok: 23 * p <= middle + 9 && middle <= upper,
    })
}

fn simple_knot_eligible(slope: Slope) -> bool {
    let p = slope.p();
    p % 2 == 1 && p % 5 != 0 && slope.in_closed((3, 1), (6, 1)) && is_prime_power(p).is_some()
}

fn record(rule: Rule, witnesses: Witnesses) -> RuleRecord {
    RuleRecord {
        rule,
        citation: rule.citation().to_string(),
        witnesses,
    }
}

pub fn certify(slope: Slope) -> Certificate {
    let (p, q) = (slope.p(), slope.q());
    let prime_power = (p >= 2).then(|| is_prime_power(p)).flatten();
    let mut chain = Vec::new();
    let mut top = Witnesses::new();
    if let Some((r, e)) = prime_power {
        top.insert("prime_power".into(), format!("{r}^{e}"));
    }

    if slope.in_closed((0, 1), (2, 1)) {
        chain.push(record(Rule::R1, witnesses([("slope", slope.to_string())])));
    }

    if slope.in_open((2, 1), (3, 1)) {
        if let Some((r, e)) = prime_power {
            chain.push(record(
                Rule::R2,
                witnesses([("prime_power", format!("{r}^{e}"))]),
            ));
        }
    }

    if let Some((2, e)) = prime_power {
        if slope.cmp_ratio(7, 1).is_lt() {
            let delta = (6 * q).abs_diff(p);
            assert!(delta >= 2, "6q - p is even and nonzero for p a power of 2");
            let dets = low_genus_determinants()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            chain.push(record(
                Rule::R3,
                witnesses([
                    ("power_of_two", format!("2^{e}")),
                    ("trefoil_exclusion_delta", delta.to_string()),
                    ("genus_le_3_determinants", dets),
                ]),
            ));
        }
    }

    if simple_knot_eligible(slope) {
        let cover = branched_cover_order(slope).expect("eligible slope");
        top.insert("cover_order".into(), cover.to_string());
        top.insert("lens_order".into(), p.to_string());
        if slope.in_half_open((4, 1), (5, 1)) {
            assert_eq!(cover, 5 * p);
            chain.push(record(
                Rule::R4,
                witnesses([
                    ("cover_order", cover.to_string()),
                    ("lens_order", p.to_string()),
                ]),
            ));
        }
        if slope.in_half_open((3, 1), (4, 1)) {
            let t = genus_test(slope).expect("eligible slope");
            assert_eq!(
                t.genus_ok, t.inequality_ok,
                "genus test and inequality disagree at {slope}"
            );
            let inequality = format!("{} <= {} <= {}", t.lower, t.middle, t.upper);
            top.insert("genus".into(), t.genus.to_string());
            top.insert("genus_bound".into(), ratio_string(p + 1, 4));
            top.insert("inequality".into(), inequality.clone());
            top.insert("inequality_holds".into(), t.inequality_ok.to_string());
            if t.genus_ok {
                chain.push(record(
                    Rule::R5,
                    witnesses([
                        ("genus", t.genus.to_string()),
                        ("genus_bound", ratio_string(p + 1, 4)),
                        ("inequality", inequality),
                    ]),
                ));
            }
        }
    }

    let verdict = if !chain.is_empty() {
        Verdict::Certified
    } else if slope == Slope::integer(5) {
        top.insert(
            "counterexample".into(),
            "5-surgery on the right-handed trefoil is the lens space L(5,4)".into(),
        );
        Verdict::FailsInGeneral
    } else {
        Verdict::Open
    };
    for rec in &chain {
        for (k, v) in &rec.witnesses {
            top.entry(k.clone()).or_insert_with(|| v.clone());
        }
    }
    Certificate {
        slope,
        verdict,
        chain,
        witnesses: top,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub max_p: u64,
    pub lo: Slope,
    pub hi: Slope,
    pub certificates: Vec<Certificate>,
    pub counts: BTreeMap<Verdict, usize>,
}

/// All reduced `p/q ∈ [lo, hi)` with `p <= max_p`, sorted by value.
///
/// When `lo = 0` the range is unbounded in `q`; it is cut at `q <= max_p`.
pub fn enumerate_certified(max_p: u64, lo: Slope, hi: Slope) -> Result<Enumeration> {
    if max_p < 2 {
        return Err(Error::invalid(format!(
            "max_p must be at least 2, got {max_p}"
        )));
    }
    if lo >= hi {
        return Err(Error::invalid(format!("empty range [{lo}, {hi})")));
    }
    let mut slopes = Vec::new();
    if lo.p() == 0 {
        slopes.push(Slope::integer(0));
    }
    for p in 1..=max_p {
        // p/q < hi  <=>  q > p*hq/hp
        let q_min = (p * hi.q()) / hi.p() + 1;
        let q_max = if lo.p() == 0 {
            max_p
        } else {
            (p * lo.q()) / lo.p()
        };
        for q in q_min..=q_max {
            if p.gcd(&q) == 1 {
                slopes.push(Slope::new(p, q).expect("q >= 1"));
            }
        }
    }
    let mut certificates: Vec<Certificate> = slopes.into_par_iter().map(certify).collect();
    certificates.sort_by_key(|c| c.slope);
    let mut counts = BTreeMap::new();
    for c in &certificates {
        *counts.entry(c.verdict).or_insert(0) += 1;
    }
    Ok(Enumeration {
        max_p,
        lo,
        hi,
        certificates,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Slope {
        x.parse().unwrap()
    }

    #[test]
    fn prime_powers() {
        assert_eq!(is_prime_power(9), Some((3, 2)));
        assert_eq!(is_prime_power(4), Some((2, 2)));
        assert_eq!(is_prime_power(6), None);
        assert_eq!(is_prime_power(2), Some((2, 1)));
        assert_eq!(is_prime_power(97), Some((97, 1)));
        assert_eq!(is_prime_power(3125), Some((5, 5)));
        assert_eq!(is_prime_power(1 << 40), Some((2, 40)));
        for n in 2..2000u64 {
            let brute = (2..=n)
                .find(|r| n % r == 0)
                .and_then(|r| (1..=11).find(|&e| r.pow(e) == n).map(|e| (r, e)));
            assert_eq!(is_prime_power(n), brute, "n = {n}");
        }
    }

    #[test]
    fn known_verdicts() {
        let three = certify(s("3"));
        assert_eq!(three.verdict, Verdict::Certified);
        let r5 = three.chain.iter().find(|r| r.rule == Rule::R5).unwrap();
        assert_eq!(r5.witnesses["genus"], "0");
        assert_eq!(r5.witnesses["inequality"], "60 <= 80 <= 84");

        assert_eq!(certify(s("9/2")).headline(), Some(Rule::R4));
        assert_eq!(certify(s("4")).headline(), Some(Rule::R3));
        assert_eq!(certify(s("7/2")).headline(), Some(Rule::R5));
        assert_eq!(certify(s("5")).verdict, Verdict::FailsInGeneral);
        assert!(certify(s("5")).chain.is_empty());

        let open = certify(s("19/5"));
        assert_eq!(open.verdict, Verdict::Open);
        assert!(open.chain.is_empty());
        assert_eq!(open.witnesses["genus"], "12");
        assert_eq!(open.witnesses["genus_bound"], "5");
        assert_eq!(open.witnesses["inequality"], "428 <= 400 <= 484");
        assert_eq!(open.witnesses["inequality_holds"], "false");

        let c = certify(s("13/4"));
        assert_eq!(c.headline(), Some(Rule::R5));
        assert_eq!(c.witnesses["inequality"], "290 <= 320 <= 334");
        assert_eq!(c.witnesses["genus_bound"], "7/2");
    }

    #[test]
    fn small_slopes_and_multiple_rules() {
        let zero = certify(Slope::integer(0));
        assert_eq!(zero.headline(), Some(Rule::R1));
        let two = certify(Slope::integer(2));
        assert_eq!(two.rules().collect::<Vec<_>>(), vec![Rule::R1, Rule::R3]);
        let r3 = &two.chain[1];
        assert_eq!(r3.witnesses["trefoil_exclusion_delta"], "4");
        assert_eq!(r3.witnesses["genus_le_3_determinants"], "5,7,3");
        assert_eq!(certify(s("5/2")).headline(), Some(Rule::R2));
        assert_eq!(
            certify(s("8/3")).rules().collect::<Vec<_>>(),
            vec![Rule::R2, Rule::R3]
        );
        assert_eq!(certify(s("12/5")).verdict, Verdict::Open);
        assert_eq!(certify(s("32/5")).headline(), Some(Rule::R3));
        assert_eq!(certify(s("7")).verdict, Verdict::Open);
        assert_eq!(certify(s("11/2")).verdict, Verdict::Open);
    }

    #[test]
    fn enumerate_examples() {
        let e = enumerate_certified(10, s("3"), s("5")).unwrap();
        for c in &e.certificates {
            if c.slope.q() <= 2 {
                assert_eq!(c.verdict, Verdict::Certified, "{}", c.slope);
            }
        }
        assert!(e.certificates.windows(2).all(|w| w[0].slope < w[1].slope));
        assert!(e
            .certificates
            .iter()
            .all(|c| c.slope >= s("3") && c.slope < s("5")));
        assert_eq!(e.counts.values().sum::<usize>(), e.certificates.len());

        let small = enumerate_certified(2, Slope::integer(0), s("7")).unwrap();
        let got: Vec<String> = small
            .certificates
            .iter()
            .map(|c| c.slope.to_string())
            .collect();
        assert_eq!(got, vec!["0/1", "1/2", "1/1", "2/1"]);
        assert!(small
            .certificates
            .iter()
            .all(|c| c.verdict == Verdict::Certified));

        assert!(enumerate_certified(1, s("3"), s("5")).is_err());
        assert!(enumerate_certified(10, s("5"), s("3")).is_err());
    }

    #[test]
    fn json_shape() {
        let c = certify(s("3"));
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["slope"], "3/1");
        assert_eq!(v["verdict"], "certified");
        assert_eq!(v["chain"][0]["rule"], "R5");
        let back: Certificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
        assert_eq!(
            serde_json::to_value(certify(s("5"))).unwrap()["verdict"],
            "fails_in_general"
        );
    }
}
