//! The prototype-set automaton: states are the distinct open sets
//! `T^n(C_n(b))` and a digit moves one state to the next.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::{Mutex, OnceLock};

use super::region::{invert_region, translate_region, Region};
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::hcf::digit_in_alphabet;

/// Largest coordinate of the digits explored when closing the automaton.
pub const FRONTIER: i64 = 4;

/// Refuse to explore beyond this many states.
pub const STATE_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct PrototypeState {
    pub region: Region,
    pub fingerprint: Vec<u64>,
    pub label: String,
}

/// `F° ∩ τ_{-d}(ι(s))`, or `None` when empty.
pub fn prototype_step(s: &Region, d: &GaussianInt) -> Result<Option<Region>> {
    if !digit_in_alphabet(d) {
        return Err(Error::DigitNotInAlphabet(d.to_string()));
    }
    let moved = translate_region(&invert_region(s), &-d);
    Ok(Region::fundamental().intersect(&moved))
}

/// Digits of the alphabet with both coordinates in `[-k, k]`, ordered by
/// real part then imaginary part.
pub fn digit_box(k: i64) -> Vec<GaussianInt> {
    let mut out = Vec::new();
    for re in -k..=k {
        for im in -k..=k {
            let d = GaussianInt::from_i64(re, im);
            if digit_in_alphabet(&d) {
                out.push(d);
            }
        }
    }
    out
}

/// Closed state set with its transition table over the frontier digits.
/// Steps by other digits are computed on demand and cached.
#[derive(Debug)]
pub struct Automaton {
    states: Vec<PrototypeState>,
    index: HashMap<Region, usize>,
    transitions: BTreeMap<(usize, GaussianInt), Option<usize>>,
    extra: Mutex<HashMap<(usize, GaussianInt), Option<usize>>>,
}

/// Breadth-first closure from the open square.
pub fn explore_automaton() -> Result<Automaton> {
    let digits = digit_box(FRONTIER);
    let mut states: Vec<PrototypeState> = Vec::new();
    let mut index: HashMap<Region, usize> = HashMap::new();
    let mut by_fingerprint: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut transitions = BTreeMap::new();
    let mut queue = VecDeque::new();

    let mut add = |region: Region,
                   states: &mut Vec<PrototypeState>,
                   queue: &mut VecDeque<usize>|
     -> Result<usize> {
        if let Some(&k) = index.get(&region) {
            return Ok(k);
        }
        let fingerprint = region.fingerprint();
        if let Some(&other) = by_fingerprint.get(&fingerprint) {
            return Err(Error::Verification(format!(
                "distinct regions {} and {} share a grid fingerprint",
                states[other].label, region
            )));
        }
        let k = states.len();
        if k >= STATE_CAP {
            return Err(Error::AutomatonDidNotClose { cap: STATE_CAP });
        }
        let label = if k == 0 {
            "F".to_string()
        } else {
            format!("P{k}")
        };
        by_fingerprint.insert(fingerprint.clone(), k);
        index.insert(region.clone(), k);
        states.push(PrototypeState {
            region,
            fingerprint,
            label,
        });
        queue.push_back(k);
        Ok(k)
    };

    add(Region::fundamental(), &mut states, &mut queue)?;
    while let Some(s) = queue.pop_front() {
        for d in &digits {
            let next = match prototype_step(&states[s].region, d)? {
                Some(r) => Some(add(r, &mut states, &mut queue)?),
                None => None,
            };
            transitions.insert((s, d.clone()), next);
        }
    }
    let index = states
        .iter()
        .enumerate()
        .map(|(k, s)| (s.region.clone(), k))
        .collect();
    Ok(Automaton {
        states,
        index,
        transitions,
        extra: Mutex::new(HashMap::new()),
    })
}

/// The automaton, explored once per process.
pub fn shared_automaton() -> Result<&'static Automaton> {
    static CELL: OnceLock<std::result::Result<Automaton, String>> = OnceLock::new();
    CELL.get_or_init(|| explore_automaton().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Error::Verification(e.clone()))
}

/// Outcome of running a digit sequence through the automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    /// Visited state indices, starting with the full state.
    pub states: Vec<usize>,
    /// Whether every step was nonempty.
    pub alive: bool,
}

impl Trace {
    pub fn last(&self) -> usize {
        *self.states.last().expect("trace starts at the full state")
    }
}

impl Automaton {
    pub fn states(&self) -> &[PrototypeState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Index of the full state.
    pub fn full(&self) -> usize {
        0
    }

    pub fn label(&self, s: usize) -> &str {
        &self.states[s].label
    }

    pub fn index_of(&self, region: &Region) -> Option<usize> {
        self.index.get(region).copied()
    }

    pub fn transitions(&self) -> impl Iterator<Item = (&(usize, GaussianInt), &Option<usize>)> {
        self.transitions.iter()
    }

    /// One step; a region outside the closed state set is an error.
    pub fn step(&self, s: usize, d: &GaussianInt) -> Result<Option<usize>> {
        let key = (s, d.clone());
        if let Some(t) = self.transitions.get(&key) {
            return Ok(*t);
        }
        if let Some(t) = self.extra.lock().expect("cache lock").get(&key) {
            return Ok(*t);
        }
        let next = match prototype_step(&self.states[s].region, d)? {
            None => None,
            Some(r) => Some(self.index_of(&r).ok_or_else(|| {
                Error::Verification(format!(
                    "digit {d} leads from {} to a region outside the state set",
                    self.label(s)
                ))
            })?),
        };
        self.extra.lock().expect("cache lock").insert(key, next);
        Ok(next)
    }

    /// Runs `digits` from state `start`, stopping at the first empty step.
    pub fn run_from(&self, start: usize, digits: &[GaussianInt]) -> Result<Trace> {
        let mut states = vec![start];
        for d in digits {
            match self.step(*states.last().expect("nonempty"), d)? {
                Some(t) => states.push(t),
                None => {
                    return Ok(Trace {
                        states,
                        alive: false,
                    })
                }
            }
        }
        Ok(Trace {
            states,
            alive: true,
        })
    }

    pub fn run(&self, digits: &[GaussianInt]) -> Result<Trace> {
        self.run_from(self.full(), digits)
    }

    /// Whether the sequence is valid on open regions and ends in the full state.
    pub fn is_full(&self, digits: &[GaussianInt]) -> Result<bool> {
        let t = self.run(digits)?;
        Ok(t.alive && t.last() == self.full())
    }

    /// Digits `d'` of the box `[-k, k]^2` with a nonempty step from `s`.
    pub fn successors(&self, s: usize, k: i64) -> Result<Vec<GaussianInt>> {
        let mut out = Vec::new();
        for d in digit_box(k) {
            if self.step(s, &d)?.is_some() {
                out.push(d);
            }
        }
        Ok(out)
    }

    /// One line per frontier transition: `state,digit,next` with `-` for empty.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for ((s, d), t) in &self.transitions {
            let next = t.map_or("-", |t| self.label(t));
            writeln!(out, "{},{},{}", self.label(*s), d, next).expect("write to string");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_i64(re, im)
    }

    #[test]
    fn large_digit_keeps_full_square() {
        let f = Region::fundamental();
        assert_eq!(prototype_step(&f, &g(3, 0)).unwrap(), Some(f.clone()));
        assert_eq!(prototype_step(&f, &g(-5, 7)).unwrap(), Some(f));
    }

    #[test]
    fn small_digit_cuts_square() {
        let f = Region::fundamental();
        let s = prototype_step(&f, &g(2, 0)).unwrap().unwrap();
        assert_ne!(s, f);
    }

    #[test]
    fn digit_box_size() {
        assert_eq!(digit_box(4).len(), 76);
        assert_eq!(digit_box(1).len(), 4);
    }
}
