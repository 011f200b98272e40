//! Zaremba certificates for powers of `-3±i`, `-2±i`, 2, 3 and 5: a
//! numerator coprime to `b^k` whose Hurwitz digits are uniformly bounded,
//! built by repeated folding from a few seeds and checked exactly.

pub mod oracle;
pub mod seeds;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::cf::{evaluate, fold, fold_unit, CfSequence};
use crate::error::{Error, Result};
use crate::gaussian::{gauss_gcd, GaussianInt, GaussianRational};
use crate::geometry::validity::{check_validity, Validity};
use crate::hcf::{hcf_expand, is_reversible_real, HcfExpansion};

pub use oracle::{brute_force_min_k, OracleResult, DEFAULT_ORACLE_CAP};
pub use seeds::{printed_seed, printed_seeds, Seed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZarembaBase {
    MinusThreePlusI,
    MinusThreeMinusI,
    MinusTwoPlusI,
    MinusTwoMinusI,
    Two,
    Three,
    Five,
}

/// How a power above the seeds is obtained from a lower one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoldRule {
    /// `fold_unit` applied to the certificate for `from`.
    Unit { from: u32 },
    /// `fold` with middle digit `x` applied to the certificate for `from`.
    General { from: u32, x: GaussianInt },
}

impl FoldRule {
    pub fn parent(&self) -> u32 {
        match self {
            FoldRule::Unit { from } | FoldRule::General { from, .. } => *from,
        }
    }
}

impl ZarembaBase {
    pub const ALL: [ZarembaBase; 7] = [
        ZarembaBase::MinusThreePlusI,
        ZarembaBase::MinusThreeMinusI,
        ZarembaBase::MinusTwoPlusI,
        ZarembaBase::MinusTwoMinusI,
        ZarembaBase::Two,
        ZarembaBase::Three,
        ZarembaBase::Five,
    ];

    pub fn value(self) -> GaussianInt {
        use ZarembaBase::*;
        match self {
            MinusThreePlusI => GaussianInt::from_i64(-3, 1),
            MinusThreeMinusI => GaussianInt::from_i64(-3, -1),
            MinusTwoPlusI => GaussianInt::from_i64(-2, 1),
            MinusTwoMinusI => GaussianInt::from_i64(-2, -1),
            Two => GaussianInt::from_i64(2, 0),
            Three => GaussianInt::from_i64(3, 0),
            Five => GaussianInt::from_i64(5, 0),
        }
    }

    /// Squared digit bound `eta^2`.
    pub fn eta_sq(self) -> u32 {
        use ZarembaBase::*;
        match self {
            MinusThreePlusI | MinusThreeMinusI | MinusTwoPlusI | MinusTwoMinusI => 18,
            Two | Three => 64,
            Five => 49,
        }
    }

    /// Largest power covered by a seed.
    pub fn last_seed(self) -> u32 {
        use ZarembaBase::*;
        match self {
            MinusThreePlusI | MinusThreeMinusI | Five => 2,
            MinusTwoPlusI | MinusTwoMinusI | Three => 7,
            Two => 13,
        }
    }

    /// The folding step producing power `n`, or `None` for seed powers.
    pub fn fold_rule(self, n: u32) -> Option<FoldRule> {
        if n <= self.last_seed() {
            return None;
        }
        let b = self.value();
        Some(match self {
            ZarembaBase::Two if n.is_multiple_of(2) => FoldRule::General {
                from: (n - 2) / 2,
                x: GaussianInt::from_i64(4, 0),
            },
            ZarembaBase::Two => FoldRule::General {
                from: (n - 3) / 2,
                x: GaussianInt::from_i64(8, 0),
            },
            _ if n.is_multiple_of(2) => FoldRule::Unit { from: n / 2 },
            _ => FoldRule::General {
                from: (n - 1) / 2,
                x: b,
            },
        })
    }
}

impl fmt::Display for ZarembaBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value().fmt(f)
    }
}

impl FromStr for ZarembaBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let z: GaussianInt = s.parse()?;
        ZarembaBase::ALL
            .into_iter()
            .find(|b| b.value() == z)
            .ok_or_else(|| Error::UnsupportedBase(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranscriptStep {
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    pub steps: Vec<TranscriptStep>,
}

impl Transcript {
    fn push(&mut self, check: &'static str, passed: bool, detail: impl Into<String>) {
        self.steps.push(TranscriptStep {
            check,
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }

    /// `check:pass` pairs separated by `, `.
    pub fn summary(&self) -> String {
        self.steps
            .iter()
            .map(|s| format!("{}:{}", s.check, if s.passed { "pass" } else { "FAIL" }))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let verdict = if s.passed { "pass" } else { "FAIL" };
            writeln!(f, "{:<11} {verdict}  {}", s.check, s.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct ZarembaCertificate {
    pub base: ZarembaBase,
    pub power: u32,
    pub numerator: GaussianInt,
    pub digits: HcfExpansion,
    pub eta_sq: u32,
    pub transcript: Transcript,
}

impl ZarembaCertificate {
    pub fn denominator(&self) -> GaussianInt {
        self.base.value().pow(u64::from(self.power))
    }

    /// `max |a_i|^2`.
    pub fn k_sq(&self) -> BigInt {
        self.digits.max_digit_norm()
    }

    /// Stable text record, one `key = value` per line.
    pub fn to_record(&self) -> String {
        let digits: Vec<String> = self.digits.digits.iter().map(|d| d.to_string()).collect();
        format!(
            "base = {}\npower = {}\nnumerator = {}\ndigits = [{}]\neta_sq = {}\ntranscript = {}\n",
            self.base,
            self.power,
            self.numerator,
            digits.join(", "),
            self.eta_sq,
            self.transcript.summary()
        )
    }

    /// Reads back a record written by [`ZarembaCertificate::to_record`] and
    /// re-runs every check; the stored transcript is not trusted.
    pub fn from_record(record: &str) -> Result<ZarembaCertificate> {
        let mut fields: HashMap<&str, &str> = HashMap::new();
        for line in record.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("record line without '=': {line}")))?;
            fields.insert(k.trim(), v.trim());
        }
        let get = |k: &str| {
            fields
                .get(k)
                .copied()
                .ok_or_else(|| Error::Parse(format!("record is missing '{k}'")))
        };
        let base: ZarembaBase = get("base")?.parse()?;
        let power: u32 = get("power")?
            .parse()
            .map_err(|_| Error::Parse("power".into()))?;
        let numerator: GaussianInt = get("numerator")?.parse()?;
        let digits: CfSequence = get("digits")?.parse()?;
        let eta_sq: u32 = get("eta_sq")?
            .parse()
            .map_err(|_| Error::Parse("eta_sq".into()))?;
        let mut cert = ZarembaCertificate {
            base,
            power,
            numerator,
            digits: HcfExpansion {
                integer_part: digits.head,
                digits: digits.tail,
            },
            eta_sq,
            transcript: Transcript::default(),
        };
        cert.transcript = verify_certificate(&cert);
        Ok(cert)
    }
}

fn in_norm_range(d: &GaussianInt, lo: u32, hi: u32) -> bool {
    let n = d.norm();
    n >= BigInt::from(lo) && n <= BigInt::from(hi)
}

/// Side conditions the construction maintains for each base, or `None`
/// when the base imposes none at this power.
fn window_check(base: ZarembaBase, power: u32, digits: &[GaussianInt]) -> Option<(bool, String)> {
    use ZarembaBase::*;
    let (first, last) = (digits.first()?, digits.last()?);
    let one = GaussianInt::one();
    match base {
        MinusThreePlusI | MinusThreeMinusI => {
            // the end digits are the pivots of later unit folds; interior
            // digits may drop to norm 5 once a pivot has been split
            let ok = [first, last].iter().all(|d| d.norm() >= BigInt::from(8));
            Some((ok, "|a_1|^2, |a_last|^2 >= 8".into()))
        }
        MinusTwoPlusI | MinusTwoMinusI if power >= 4 => {
            let all = digits.iter().all(|d| in_norm_range(d, 5, 18));
            let ends = [first, last]
                .iter()
                .all(|d| in_norm_range(&(*d + &one), 5, 18) && in_norm_range(&(*d - &one), 5, 18));
            Some((
                all && ends,
                "5 <= |a_i|^2 <= 18, and 5 <= |a_i +- 1|^2 <= 18 at both ends".into(),
            ))
        }
        Two | Three | Five => {
            let (lo, from) = match base {
                Two => (9, 6),
                Three => (16, 4),
                _ => (16, 1),
            };
            if power < from {
                return None;
            }
            let ends = in_norm_range(first, lo, 49) && in_norm_range(last, lo, 49);
            let reversible = is_reversible_real(digits).unwrap_or(false);
            Some((
                ends && reversible,
                format!("{lo} <= |a_1|^2, |a_last|^2 <= 49 and reversible"),
            ))
        }
        _ => None,
    }
}

/// Re-runs every check on a certificate from scratch.
pub fn verify_certificate(cert: &ZarembaCertificate) -> Transcript {
    let mut t = Transcript::default();
    let den = cert.denominator();
    let target = GaussianRational::new(cert.numerator.clone(), den.clone());
    let value = evaluate(&cert.digits.to_cf());

    match (&target, &value) {
        (Ok(target), Ok(value)) => t.push(
            "evaluation",
            value == target,
            format!("digits evaluate to {value}"),
        ),
        _ => t.push("evaluation", false, "digits or fraction undefined"),
    }

    match gauss_gcd(&cert.numerator, &den) {
        Ok(g) => t.push("gcd", g.is_unit(), format!("gcd = {g}")),
        Err(e) => t.push("gcd", false, e.to_string()),
    }

    let in_domain = target
        .as_ref()
        .map(|z| z.in_fundamental_domain())
        .unwrap_or(false);
    t.push(
        "domain",
        in_domain,
        "numerator/denominator in the fundamental square",
    );

    let k_sq = cert.k_sq();
    // a stated bound looser than the base's is not a certificate
    t.push(
        "bound",
        k_sq <= BigInt::from(cert.eta_sq) && cert.eta_sq <= cert.base.eta_sq(),
        format!(
            "max |a_i|^2 = {k_sq} <= {} <= {}",
            cert.eta_sq,
            cert.base.eta_sq()
        ),
    );

    match target.as_ref().map(hcf_expand) {
        Ok(Ok(e)) => t.push(
            "canonical",
            e == cert.digits,
            format!("Hurwitz expansion has {} digits", e.len()),
        ),
        _ => t.push("canonical", false, "expansion failed"),
    }

    match check_validity(&cert.digits.digits) {
        Ok(r) => t.push(
            "validity",
            r.verdict != Validity::Invalid,
            format!("{}", r.verdict),
        ),
        Err(e) => t.push("validity", false, e.to_string()),
    }

    if let Some((ok, what)) = window_check(cert.base, cert.power, &cert.digits.digits) {
        t.push("window", ok, what);
    }
    t
}

type Cache = Mutex<HashMap<(ZarembaBase, u32), Arc<ZarembaCertificate>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn reject(base: ZarembaBase, power: u32, t: &Transcript) -> Error {
    Error::CertificateRejected {
        base: base.to_string(),
        power,
        transcript: t.to_string(),
    }
}

/// Certificate for `base^power`, built by the seed-and-fold induction and
/// verified at every stage. Results are cached for the process.
pub fn certify(base: ZarembaBase, power: u32) -> Result<Arc<ZarembaCertificate>> {
    if power == 0 {
        return Err(Error::ZeroPower);
    }
    if let Some(c) = cache().lock().expect("cache lock").get(&(base, power)) {
        return Ok(Arc::clone(c));
    }
    let den = base.value().pow(u64::from(power));
    let (numerator, digits, parent_len, step) = match base.fold_rule(power) {
        None => {
            let s = printed_seed(base, power).expect("every seed power is listed");
            let e = hcf_expand(&GaussianRational::new(s.numerator.clone(), den.clone())?)?;
            (s.numerator, e, None, None)
        }
        Some(rule) => {
            let parent = certify(base, rule.parent())?;
            let cf = parent.digits.to_cf();
            let folded = match &rule {
                FoldRule::Unit { .. } => fold_unit(&cf)?,
                FoldRule::General { x, .. } => fold(&cf, x)?,
            };
            let value = evaluate(&folded)?;
            let scale = den.checked_div_exact(value.denom()).ok_or_else(|| {
                Error::Verification(format!(
                    "folded value {value} does not have denominator {den}"
                ))
            })?;
            let numerator = value.numer() * &scale;
            // The certificate carries the Hurwitz digits of the folded value.
            // They usually coincide with the folded sequence; when the split
            // pivot breaks a successor rule they are recomputed instead.
            let e = hcf_expand(&value)?;
            let note = match &rule {
                FoldRule::Unit { from } => format!("x = 1 on power {from}"),
                FoldRule::General { from, x } => format!("x = {x} on power {from}"),
            };
            let note = if e.to_cf() == folded {
                note
            } else {
                format!("{note}, folded digits re-expanded")
            };
            (numerator, e, Some(parent.digits.len()), Some((rule, note)))
        }
    };
    let mut cert = ZarembaCertificate {
        base,
        power,
        numerator,
        digits,
        eta_sq: base.eta_sq(),
        transcript: Transcript::default(),
    };
    let mut t = verify_certificate(&cert);
    if let (Some(n), Some((rule, note))) = (parent_len, step) {
        let expected = match rule {
            FoldRule::Unit { .. } => 2 * n,
            FoldRule::General { .. } => 2 * n + 1,
        };
        t.push(
            "structure",
            cert.digits.len() == expected,
            format!("{} digits from a parent of {n}, {note}", cert.digits.len()),
        );
    }
    cert.transcript = t;
    if !cert.transcript.all_passed() {
        return Err(reject(base, power, &cert.transcript));
    }
    let cert = Arc::new(cert);
    cache()
        .lock()
        .expect("cache lock")
        .insert((base, power), Arc::clone(&cert));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::parse_digit_list;

    #[test]
    fn rules() {
        use ZarembaBase::*;
        assert_eq!(Two.fold_rule(13), None);
        assert_eq!(
            Two.fold_rule(14),
            Some(FoldRule::General {
                from: 6,
                x: GaussianInt::from_i64(4, 0)
            })
        );
        assert_eq!(Two.fold_rule(15).unwrap().parent(), 6);
        assert_eq!(Three.fold_rule(8), Some(FoldRule::Unit { from: 4 }));
        assert_eq!(MinusTwoPlusI.fold_rule(9).unwrap().parent(), 4);
        assert_eq!(Five.fold_rule(3).unwrap().parent(), 1);
        assert_eq!("-3-i".parse::<ZarembaBase>().unwrap(), MinusThreeMinusI);
        assert!("7".parse::<ZarembaBase>().is_err());
    }

    #[test]
    fn small_certificates() {
        let c = certify(ZarembaBase::MinusThreePlusI, 2).unwrap();
        assert_eq!(c.numerator, "2+3i".parse().unwrap());
        assert_eq!(c.digits.digits, parse_digit_list("-3i, -2-3i").unwrap());
        let c = certify(ZarembaBase::Two, 7).unwrap();
        assert_eq!(c.digits.digits, parse_digit_list("7, -4, 5").unwrap());
        let c = certify(ZarembaBase::Three, 6).unwrap();
        assert_eq!(c.numerator, GaussianInt::from_i64(107, 0));
        assert!(c.transcript.all_passed());
    }

    #[test]
    fn folded_certificates() {
        for base in ZarembaBase::ALL {
            for k in 1..=12 {
                let c = certify(base, k).unwrap();
                assert!(c.transcript.all_passed(), "{base}^{k}\n{}", c.transcript);
            }
        }
    }

    #[test]
    fn tampering_is_caught() {
        let mut c = (*certify(ZarembaBase::MinusTwoPlusI, 4).unwrap()).clone();
        c.digits.digits[1] = -&c.digits.digits[1];
        let t = verify_certificate(&c);
        assert!(!t.all_passed());
        assert!(t.steps.iter().any(|s| s.check == "evaluation" && !s.passed));
    }

    #[test]
    fn record_round_trip() {
        let c = certify(ZarembaBase::Five, 4).unwrap();
        let back = ZarembaCertificate::from_record(&c.to_record()).unwrap();
        assert_eq!(back.numerator, c.numerator);
        assert_eq!(back.digits, c.digits);
        assert!(back.transcript.all_passed());
        for claim in ["eta_sq = 4", "eta_sq = 100"] {
            let forged = c.to_record().replace("eta_sq = 49", claim);
            let t = ZarembaCertificate::from_record(&forged).unwrap().transcript;
            assert!(
                t.steps.iter().any(|s| s.check == "bound" && !s.passed),
                "{claim}"
            );
        }
    }

    #[test]
    fn seeds_expand_as_listed_except_four() {
        let differing = [
            (ZarembaBase::MinusTwoPlusI, 7, "3i, 3+i, -2-2i, 3i, 1-3i"),
            (ZarembaBase::MinusTwoMinusI, 7, "-3i, 3-i, -2+2i, -3i, 1+3i"),
            (ZarembaBase::MinusTwoMinusI, 2, "-2+2i, 2i"),
            (ZarembaBase::Two, 9, "7, 5, -4, 4"),
        ];
        let seeds = printed_seeds();
        assert_eq!(seeds.len(), 40);
        for s in seeds {
            let den = s.base.value().pow(u64::from(s.power));
            let e = hcf_expand(&GaussianRational::new(s.numerator.clone(), den).unwrap()).unwrap();
            match differing.iter().find(|m| (m.0, m.1) == (s.base, s.power)) {
                Some(m) => {
                    assert_ne!(e.digits, s.digits);
                    assert_eq!(e.digits, parse_digit_list(m.2).unwrap());
                }
                None => assert_eq!(e.digits, s.digits, "{}^{}", s.base, s.power),
            }
        }
    }

    #[test]
    fn folding_real_digits_with_two_breaks_reversibility() {
        let c = certify(ZarembaBase::Three, 5).unwrap();
        for x in [2, -2] {
            // one reading direction puts the pivot after a digit of the wrong sign
            let f = fold(&c.digits.to_cf(), &GaussianInt::from_i64(x, 0)).unwrap();
            let back: Vec<_> = f.tail.iter().rev().cloned().collect();
            let both = is_reversible_real(&f.tail).unwrap() && is_reversible_real(&back).unwrap();
            assert!(!both, "x = {x}");
        }
        let f = fold(&c.digits.to_cf(), &GaussianInt::from_i64(3, 0)).unwrap();
        assert!(is_reversible_real(&f.tail).unwrap());
    }

    #[test]
    fn windows_hold_along_the_induction() {
        let c = certify(ZarembaBase::MinusTwoMinusI, 9).unwrap();
        assert!(c
            .transcript
            .steps
            .iter()
            .any(|s| s.check == "window" && s.passed));
        assert!(window_check(ZarembaBase::Two, 3, &c.digits.digits).is_none());
        let bad = parse_digit_list("2, 7, 2").unwrap();
        assert_eq!(
            window_check(ZarembaBase::Five, 3, &bad).map(|w| w.0),
            Some(false)
        );
    }

    #[test]
    fn re_expanded_stage_keeps_bound() {
        let c = certify(ZarembaBase::MinusTwoPlusI, 10).unwrap();
        let s = c
            .transcript
            .steps
            .iter()
            .find(|s| s.check == "structure")
            .unwrap();
        assert!(s.detail.contains("re-expanded"));
        assert!(c.transcript.all_passed());
        assert_eq!(c.digits.len(), 8);
    }
}
