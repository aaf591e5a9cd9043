//! Recovering family parameters from a path sequence.
//!
//! The caller names the family. Cheap parameters come from `P_0`, `P_1` and
//! `P_2`; the remaining structure is recovered from later entries. Whatever
//! the route, a candidate is only reported after its full sequence has been
//! recomputed and compared with the query.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::closed_forms::{sequence_of, signed_generalized_count, signed_starlike_count};
use crate::error::{Error, Result};
use crate::generators::{rho, BranchSequence, FamilyKind, FamilySpec};
use crate::oracle::PathSequence;

/// How a result was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Parameters solved from a few entries, then verified.
    DirectInversion,
    /// Every admissible parameter value tried against the full sequence.
    ParameterSearch,
    /// Depth-first search over branch multiplicities, pruned entry by entry.
    PrunedBranchSearch,
}

/// One step of starlike branch recovery: at length `h`,
/// `L_{h-2} = (P_h - base) / (2 - m)` where `base` is the count with
/// `L_{h-2} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveryStep {
    pub h: usize,
    pub numerator: BigInt,
    pub divisor: BigInt,
    pub quotient: BigInt,
    pub remainder: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentifyResult {
    /// The matching member. Its sequence equals the query exactly.
    pub matched: Option<FamilySpec>,
    pub method: Method,
    /// Parameter values or branch-prefix extensions tested.
    pub candidates_examined: usize,
    /// Every candidate that reproduced the full sequence, in search order.
    /// `matched` is the first of them. More than one would be a uniqueness
    /// failure; it is reported rather than hidden.
    pub survivors: Vec<FamilySpec>,
    /// Starlike recovery steps; empty for other families.
    pub recovery: Vec<RecoveryStep>,
}

impl IdentifyResult {
    fn new(method: Method) -> Self {
        IdentifyResult {
            matched: None,
            method,
            candidates_examined: 0,
            survivors: Vec::new(),
            recovery: Vec::new(),
        }
    }

    /// Verifies `spec` against `seq` and records it if it matches.
    fn consider(&mut self, spec: FamilySpec, seq: &PathSequence) -> Result<()> {
        self.candidates_examined += 1;
        if reproduces(&spec, seq)? {
            if self.matched.is_none() {
                self.matched = Some(spec.clone());
            }
            self.survivors.push(spec);
        }
        Ok(())
    }
}

fn reproduces(spec: &FamilySpec, seq: &PathSequence) -> Result<bool> {
    if spec.validate().is_err() || rho(spec)? != seq.rho() {
        return Ok(false);
    }
    Ok(sequence_of(spec)? == *seq)
}

fn small(v: &BigUint) -> Option<usize> {
    v.to_usize()
}

/// The nonnegative integer root of `x^2 + b x + c = 0` taken with the `+`
/// square root, if the discriminant is a perfect square and the root is an
/// integer.
fn upper_root(b: &BigInt, c: &BigInt) -> Option<BigInt> {
    let disc: BigInt = b * b - 4 * c;
    if disc < BigInt::zero() {
        return None;
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return None;
    }
    let (q, r) = (s - b).div_rem(&BigInt::from(2));
    (r.is_zero() && q >= BigInt::zero()).then_some(q)
}

/// `n1` with `n1 (n1 - 1) / 2 - n1 = P_1 - P_0`, i.e. `n1^2 - 3 n1 - 2 d = 0`.
/// `x^2/2 - 3x/2` is increasing for `x >= 3/2`, so there is at most one
/// solution `n1 >= 2`.
fn clique_size(seq: &PathSequence) -> Option<usize> {
    let d = BigInt::from(seq.get(1)) - BigInt::from(seq.get(0));
    upper_root(&BigInt::from(-3), &(-2 * d))?
        .to_usize()
        .filter(|&n1| n1 >= 2)
}

/// Identifies `seq` as a member of the family `kind`.
///
/// Returns an error only when `seq` is not a valid path sequence at all; a
/// valid sequence with no matching member gives `matched = None`.
pub fn identify(kind: FamilyKind, seq: &PathSequence) -> Result<IdentifyResult> {
    seq.validate()?;
    let mut result = IdentifyResult::new(match kind {
        FamilyKind::Lollipop => Method::ParameterSearch,
        FamilyKind::GeneralizedStarlike => Method::PrunedBranchSearch,
        _ => Method::DirectInversion,
    });
    let Some(n) = small(&seq.get(0)) else {
        return Ok(result);
    };
    match kind {
        FamilyKind::Complete => result.consider(FamilySpec::Complete { n }, seq)?,
        FamilyKind::Path => result.consider(FamilySpec::Path { n }, seq)?,
        FamilyKind::Cycle => result.consider(FamilySpec::Cycle { n }, seq)?,
        FamilyKind::Star => result.consider(FamilySpec::Star { n }, seq)?,
        FamilyKind::CompleteBipartite => {
            // n1 + n2 = P_0, n1 n2 = P_1: roots of x^2 - P_0 x + P_1.
            let (sum, prod) = (BigInt::from(seq.get(0)), BigInt::from(seq.get(1)));
            if let Some(n2) = upper_root(&-&sum, &prod).and_then(|r| r.to_usize()) {
                if n2 <= n {
                    result.consider(FamilySpec::CompleteBipartite { n1: n - n2, n2 }, seq)?;
                }
            }
        }
        FamilyKind::Kite => {
            if let Some(n1) = clique_size(seq).filter(|&n1| n1 <= n) {
                result.consider(FamilySpec::Kite { n1, n2: n + 1 - n1 }, seq)?;
            }
        }
        FamilyKind::Lollipop => {
            for n1 in 3..n {
                result.consider(FamilySpec::Lollipop { n1, n2: n + 1 - n1 }, seq)?;
            }
        }
        FamilyKind::Starlike => recover_starlike(n, seq, &mut result)?,
        FamilyKind::GeneralizedStarlike => search_generalized(n, seq, &mut result)?,
    }
    Ok(result)
}

fn recover_starlike(n: usize, seq: &PathSequence, result: &mut IdentifyResult) -> Result<()> {
    // P_2 = m^2/2 - 3m/2 + n - 1, so m^2 - 3m + 2(n - 1 - P_2) = 0.
    let c = 2 * (BigInt::from(n) - 1 - BigInt::from(seq.get(2)));
    let Some(m) = upper_root(&BigInt::from(-3), &c).and_then(|m| m.to_usize()) else {
        return Ok(());
    };
    if m < 3 || m >= n {
        return Ok(());
    }
    let divisor = BigInt::from(2) - BigInt::from(m);
    let mut counts: Vec<usize> = Vec::new();
    let (mut branches_left, mut mass_left) = (m, n - 1);
    for h in 3..=seq.rho() {
        if branches_left == 0 {
            break;
        }
        let base = signed_starlike_count(n, m, &counts, h);
        let numerator = BigInt::from(seq.get(h)) - base;
        let (quotient, remainder) = numerator.div_mod_floor(&divisor);
        result.recovery.push(RecoveryStep {
            h,
            numerator,
            divisor: divisor.clone(),
            quotient: quotient.clone(),
            remainder: remainder.clone(),
        });
        let j = h - 2;
        let Some(l) = quotient.to_usize().filter(|_| remainder.is_zero()) else {
            return Ok(());
        };
        if l > branches_left || l * j > mass_left {
            return Ok(());
        }
        counts.push(l);
        branches_left -= l;
        mass_left -= l * j;
    }
    // Branches longer than rho - 2 are not pinned by any entry; at most one
    // can exist unless all branches have length 1.
    match (branches_left, mass_left) {
        (0, 0) => {}
        (0, _) => return Ok(()),
        (1, len) => {
            if len < counts.len() + 1 {
                return Ok(());
            }
            counts.resize(len, 0);
            counts[len - 1] += 1;
        }
        (r, mass) if mass % r == 0 && mass / r > counts.len() => {
            counts.resize(mass / r, 0);
            counts[mass / r - 1] += r;
        }
        _ => return Ok(()),
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    if let Ok(branches) = BranchSequence::new(counts) {
        result.consider(FamilySpec::Starlike { branches }, seq)?;
    }
    Ok(())
}

/// Above this many admissible values for one multiplicity, the search tests
/// only the value solved from the affine dependence of `P_{j+2}` on `L_j`.
const LEVEL_WIDTH: usize = 1024;

struct Search<'a> {
    seq: &'a PathSequence,
    n1: usize,
    n2: usize,
    m: usize,
}

fn search_generalized(n: usize, seq: &PathSequence, result: &mut IdentifyResult) -> Result<()> {
    let Some(n1) = clique_size(seq).filter(|&n1| n1 >= 3 && n1 <= n) else {
        return Ok(());
    };
    let n2 = n + 1 - n1;
    if n2 < 2 {
        return Ok(());
    }
    // 2 P_2 = m^2 + (2 n1 - 5) m + n1^3 - 3 n1^2 + 2n.
    let a = BigInt::from(n1);
    let b = 2 * &a - 5;
    let c = &a * &a * &a - 3 * &a * &a + 2 * BigInt::from(n) - 2 * BigInt::from(seq.get(2));
    let Some(m) = upper_root(&b, &c).and_then(|m| m.to_usize()) else {
        return Ok(());
    };
    if m == 0 || m > n2 - 1 {
        return Ok(());
    }
    let search = Search { seq, n1, n2, m };
    let mut prefix = Vec::new();
    search.extend(&mut prefix, m, n2 - 1, result)
}

impl Search<'_> {
    fn extend(
        &self,
        prefix: &mut Vec<usize>,
        branches_left: usize,
        mass_left: usize,
        result: &mut IdentifyResult,
    ) -> Result<()> {
        if branches_left == 0 {
            if mass_left == 0 {
                let mut counts = prefix.clone();
                while counts.last() == Some(&0) {
                    counts.pop();
                }
                let branches = BranchSequence::new(counts)?;
                result.consider(
                    FamilySpec::GeneralizedStarlike {
                        n1: self.n1,
                        branches,
                    },
                    self.seq,
                )?;
            }
            return Ok(());
        }
        let j = prefix.len() + 1;
        if mass_left < branches_left * j {
            return Ok(());
        }
        let most = branches_left.min(mass_left / j);
        let values: Vec<usize> = if most < LEVEL_WIDTH {
            (0..=most).collect()
        } else {
            self.solve_level(prefix, j)
                .into_iter()
                .filter(|&v| v <= most)
                .collect()
        };
        for l in values {
            result.candidates_examined += 1;
            prefix.push(l);
            if self.consistent(prefix, j) {
                self.extend(prefix, branches_left - l, mass_left - l * j, result)?;
            }
            prefix.pop();
        }
        Ok(())
    }

    /// `P_{j+2}` depends on the branches only through `L_1..L_j`.
    fn consistent(&self, prefix: &[usize], j: usize) -> bool {
        let h = j + 2;
        signed_generalized_count(self.n1, self.n2, self.m, prefix, h)
            == BigInt::from(self.seq.get(h))
    }

    fn solve_level(&self, prefix: &mut Vec<usize>, j: usize) -> Option<usize> {
        let h = j + 2;
        prefix.push(0);
        let base = signed_generalized_count(self.n1, self.n2, self.m, prefix, h);
        prefix.pop();
        let slope = BigInt::from(3) - BigInt::from(self.m) - BigInt::from(self.n1);
        let (q, r) = (BigInt::from(self.seq.get(h)) - base).div_mod_floor(&slope);
        if r.is_zero() {
            q.to_usize()
        } else {
            None
        }
    }
}

/// Whether two members of the same family have equal path sequences. Within
/// every supported family this is equivalent to isomorphism. Specs of
/// different kinds are rejected: across families, equal sequences do not
/// imply isomorphism.
pub fn same_by_sequence(a: &FamilySpec, b: &FamilySpec) -> Result<bool> {
    if a.kind() != b.kind() {
        return Err(Error::MixedFamilies(a.kind().name(), b.kind().name()));
    }
    Ok(sequence_of(a)? == sequence_of(b)?)
}
