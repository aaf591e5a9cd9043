//! Closed-form path counts for the supported families.
//!
//! Conventions: empty products are 1 and empty sums are 0. Every count
//! returns the vertex count at `h = 0` and zero beyond the longest path.
//!
//! The kite, lollipop and generalized starlike counts are evaluated as one
//! truncating composition around the attachment vertex `x`:
//!
//! ```text
//! P_h = P_h(A) + P_h(B) + sum_{k=1}^{h-1} ends_A(k) * ends_B(h - k)
//! ```
//!
//! where `A` and `B` are the two pieces glued at `x` and `ends_X(k)` counts
//! paths of length `k` in `X` that start at `x`. The truncation happens
//! inside `ends_X`, which vanishes once `k` exceeds what `X` can host, so no
//! case split on the relative sizes of the pieces is needed. The piecewise
//! forms in [`piecewise`] are kept as cross-checks.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::generators::{rho, BranchSequence, FamilySpec};
use crate::oracle::{PathSequence, PathTypeCounts};

/// `n (n-1) ... (n-k+1)`; zero when `k > n`.
pub(crate) fn falling(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i))
}

/// Paths of length `k` in `K_n` starting at a fixed vertex: `(n-1)(n-2)...(n-k)`.
fn clique_ends(n: usize, k: usize) -> BigUint {
    falling(n - 1, k)
}

/// `P_h(K_n)`: `n` at `h = 0`, `(1/2) n (n-1) ... (n-h)` for `1 <= h <= n-1`.
pub fn complete_count(n: usize, h: usize) -> BigUint {
    match h {
        0 => BigUint::from(n),
        _ if h >= n => BigUint::zero(),
        _ => falling(n, h + 1) >> 1,
    }
}

/// `P_h(K_{n1,n2})`, symmetric in `n1`, `n2`.
///
/// Odd `h`: both end classes are forced, `prod_{i=0}^{(h-1)/2} (n1-i)(n2-i)`.
/// Even `h`: both ends lie in the same part; the two parts contribute
/// `(1/2) (n2)_{h/2+1} (n1)_{h/2}` and `(1/2) (n1)_{h/2+1} (n2)_{h/2}`
/// (falling factorials). This form has no division by `n - h/2`, so it stays
/// defined at `h = 2 n1` when `n1 < n2`.
pub fn complete_bipartite_count(n1: usize, n2: usize, h: usize) -> BigUint {
    if h == 0 {
        return BigUint::from(n1 + n2);
    }
    let half = h / 2;
    if h % 2 == 1 {
        falling(n1, half + 1) * falling(n2, half + 1)
    } else {
        ((falling(n2, half + 1) * falling(n1, half)) >> 1)
            + ((falling(n1, half + 1) * falling(n2, half)) >> 1)
    }
}

fn path_count(n: usize, h: usize) -> BigUint {
    if h < n {
        BigUint::from(n - h)
    } else {
        BigUint::zero()
    }
}

fn cycle_count(n: usize, h: usize) -> BigUint {
    if h < n {
        BigUint::from(n)
    } else {
        BigUint::zero()
    }
}

/// Path sequences of paths, cycles and stars.
pub fn simple_family_sequence(spec: &FamilySpec) -> Result<PathSequence> {
    spec.validate()?;
    let counts: Vec<BigUint> = match *spec {
        FamilySpec::Path { n } => (0..n).map(|h| path_count(n, h)).collect(),
        FamilySpec::Cycle { n } => vec![BigUint::from(n); n],
        FamilySpec::Star { n } => vec![n.into(), (n - 1).into(), ((n - 1) * (n - 2) / 2).into()],
        _ => {
            return Err(Error::InvalidSpec(format!(
                "{} is not a path, cycle or star",
                spec.kind()
            )))
        }
    };
    Ok(PathSequence::from_counts(counts))
}

/// Signed bucket values. With independent `n` and `m`, or a truncated branch
/// vector, entries may go negative; for a real starlike tree they are the
/// true counts.
#[derive(Debug, Clone)]
pub(crate) struct SignedTypeCounts {
    x1: BigInt,
    x2: BigInt,
    y1: BigInt,
    y2: BigInt,
    z1: Vec<BigInt>,
    z2: Vec<BigInt>,
    z3: Vec<BigInt>,
}

impl SignedTypeCounts {
    fn total(&self) -> BigInt {
        let scalars = [&self.x1, &self.x2, &self.y1, &self.y2];
        scalars
            .into_iter()
            .chain(&self.z1)
            .chain(&self.z2)
            .chain(&self.z3)
            .sum()
    }
}

/// The position-class counts of a starlike tree with `n` vertices, center
/// degree `m` and branch multiplicities `L_j = branch_counts[j - 1]` (zero
/// past the slice), for `h >= 1`.
pub(crate) fn signed_type_counts(
    n: usize,
    m: usize,
    branch_counts: &[usize],
    h: usize,
) -> SignedTypeCounts {
    let l = |j: usize| -> BigInt {
        if j == 0 {
            BigInt::zero()
        } else {
            BigInt::from(branch_counts.get(j - 1).copied().unwrap_or(0))
        }
    };
    // sum_{i=1}^{j} L_i and sum_{i=1}^{j} i L_i
    let prefix = |j: usize| -> BigInt { (1..=j).map(l).sum() };
    let weighted = |j: usize| -> BigInt { (1..=j).map(|i| l(i) * i).sum() };
    let m = BigInt::from(m);
    let n = BigInt::from(n);
    let one = BigInt::one();
    let even = h.is_multiple_of(2);

    let longer_than_h = &m - prefix(h);
    let x1 = l(h);
    let x2 = longer_than_h.clone();
    let y1 = (&n - 1) - weighted(h) - BigInt::from(h + 1) * &longer_than_h;
    let y2 = longer_than_h;

    // One leaf end at distance a+1; the other end sits inside a branch of
    // length >= h-a, which is not the leaf's own branch.
    let z1 = (0..h.saturating_sub(1))
        .map(|a| {
            let own_branch_qualifies = if even { a >= h / 2 } else { a >= (h - 1) / 2 };
            let others = &m
                - prefix(h - a - 1)
                - if own_branch_qualifies {
                    &one
                } else {
                    &BigInt::ZERO
                };
            l(a + 1) * others
        })
        .collect();
    // Two leaf ends at distances a+1 and h-a-1.
    let z2 = (0..h / 2)
        .map(|a| {
            if even && a == h / 2 - 1 {
                (l(a + 1) - 1) * l(a + 1) / 2
            } else {
                l(a + 1) * l(h - a - 1)
            }
        })
        .collect();
    // Two inner ends at distances a and h-a.
    let z3 = (1..=h / 2)
        .map(|a| {
            if even && a == h / 2 {
                (&m - prefix(a)) * (&m - 1 - prefix(a)) / 2
            } else {
                (&m - prefix(h - a)) * (&m - 1 - prefix(a))
            }
        })
        .collect();
    SignedTypeCounts {
        x1,
        x2,
        y1,
        y2,
        z1,
        z2,
        z3,
    }
}

fn to_unsigned(v: BigInt) -> BigUint {
    assert!(
        v.sign() != Sign::Minus,
        "negative path count {v}: branch sequence inconsistent"
    );
    v.magnitude().clone()
}

/// Per-position-class path counts of a starlike tree (see
/// [`PathTypeCounts`]), for `1 <= h`; all-zero past the longest path.
pub fn starlike_type_counts(branches: &BranchSequence, h: usize) -> Result<PathTypeCounts> {
    if h == 0 {
        return Err(Error::InvalidSpec("path type counts need h >= 1".into()));
    }
    if h > branches.longest() + branches.second_longest() {
        return Ok(PathTypeCounts::zeroed(h));
    }
    let s = signed_type_counts(
        branches.vertex_count(),
        branches.branch_count(),
        branches.counts(),
        h,
    );
    Ok(PathTypeCounts {
        h,
        x1: to_unsigned(s.x1),
        x2: to_unsigned(s.x2),
        y1: to_unsigned(s.y1),
        y2: to_unsigned(s.y2),
        z1: s.z1.into_iter().map(to_unsigned).collect(),
        z2: s.z2.into_iter().map(to_unsigned).collect(),
        z3: s.z3.into_iter().map(to_unsigned).collect(),
    })
}

/// Starlike `P_h` with `n`, `m` and the branch prefix supplied independently;
/// branch multiplicities past the slice are taken as zero.
///
/// For `h >= 3` the count depends on the branches only through
/// `L_1, ..., L_{h-2}`, with coefficient `2 - m` on `L_{h-2}`, so a prefix of
/// that length already determines it.
pub(crate) fn signed_starlike_count(
    n: usize,
    m: usize,
    branch_counts: &[usize],
    h: usize,
) -> BigInt {
    let (nb, mb) = (BigInt::from(n), BigInt::from(m));
    match h {
        0 => nb,
        1 => nb - 1,
        2 => (&mb * &mb - 3 * &mb) / 2 + nb - 1,
        _ => signed_type_counts(n, m, branch_counts, h).total(),
    }
}

/// `P_h` of the starlike tree (any center degree) with the given branches.
pub fn starlike_count(branches: &BranchSequence, h: usize) -> BigUint {
    if h > 0 && h > branches.longest() + branches.second_longest() {
        return BigUint::zero();
    }
    to_unsigned(signed_starlike_count(
        branches.vertex_count(),
        branches.branch_count(),
        branches.counts(),
        h,
    ))
}

/// `P_h` of the kite: `K_{n1}` with a pendant path of `n2` vertices at `x`.
pub fn kite_count(n1: usize, n2: usize, h: usize) -> BigUint {
    if h == 0 {
        return BigUint::from(n1 + n2 - 1);
    }
    let cross: BigUint = (1..h)
        .filter(|&k| h - k < n2)
        .map(|k| clique_ends(n1, k))
        .sum();
    complete_count(n1, h) + path_count(n2, h) + cross
}

/// `P_h` of the lollipop: `C_{n1}` with a pendant path of `n2` vertices at `x`.
/// Each length below `n1` leaves `x` along the cycle in two directions.
pub fn lollipop_count(n1: usize, n2: usize, h: usize) -> BigUint {
    if h == 0 {
        return BigUint::from(n1 + n2 - 1);
    }
    let cross = (1..h).filter(|&k| k < n1 && h - k < n2).count() * 2;
    cycle_count(n1, h) + path_count(n2, h) + BigUint::from(cross)
}

/// Paths of length `j >= 1` in a starlike tree starting at the root: one per
/// branch of length at least `j`.
fn branch_ends(branches: &BranchSequence, j: usize) -> usize {
    (j..=branches.longest()).map(|l| branches.get(l)).sum()
}

/// `P_h` of the generalized starlike tree: `K_{n1}` coalesced with the root
/// of the starlike tree described by `branches`.
pub fn generalized_starlike_count(n1: usize, branches: &BranchSequence, h: usize) -> BigUint {
    if h == 0 {
        return BigUint::from(n1 + branches.vertex_count() - 1);
    }
    let cross: BigUint = (1..h)
        .map(|k| clique_ends(n1, k) * branch_ends(branches, h - k))
        .sum();
    complete_count(n1, h) + starlike_count(branches, h) + cross
}

/// Generalized starlike `P_h` from `n1`, `n2`, `m` and the branch prefix
/// alone. Exact once the prefix covers `L_1, ..., L_{h-2}`.
pub(crate) fn signed_generalized_count(
    n1: usize,
    n2: usize,
    m: usize,
    branch_counts: &[usize],
    h: usize,
) -> BigInt {
    if h == 0 {
        return BigInt::from(n1 + n2 - 1);
    }
    let prefix = |j: usize| -> usize { branch_counts.iter().take(j).sum() };
    let cross: BigInt = (1..h)
        .map(|k| {
            // Branches of length >= h-k: m minus those of length <= h-k-1.
            let ends = BigInt::from(m) - BigInt::from(prefix(h - k - 1));
            BigInt::from(clique_ends(n1, k)) * ends
        })
        .sum();
    BigInt::from(complete_count(n1, h)) + signed_starlike_count(n2, m, branch_counts, h) + cross
}

/// The full path sequence of a family member.
pub fn sequence_of(spec: &FamilySpec) -> Result<PathSequence> {
    let longest = rho(spec)?;
    let counts: Vec<BigUint> = match spec {
        FamilySpec::Path { .. } | FamilySpec::Cycle { .. } | FamilySpec::Star { .. } => {
            return simple_family_sequence(spec)
        }
        FamilySpec::Complete { n } => (0..=longest).map(|h| complete_count(*n, h)).collect(),
        FamilySpec::CompleteBipartite { n1, n2 } => (0..=longest)
            .map(|h| complete_bipartite_count(*n1, *n2, h))
            .collect(),
        FamilySpec::Starlike { branches } => {
            (0..=longest).map(|h| starlike_count(branches, h)).collect()
        }
        FamilySpec::Kite { n1, n2 } => (0..=longest).map(|h| kite_count(*n1, *n2, h)).collect(),
        FamilySpec::Lollipop { n1, n2 } => {
            (0..=longest).map(|h| lollipop_count(*n1, *n2, h)).collect()
        }
        FamilySpec::GeneralizedStarlike { n1, branches } => (0..=longest)
            .map(|h| generalized_starlike_count(*n1, branches, h))
            .collect(),
    };
    debug_assert!(!counts[longest].is_zero(), "{spec}: P_rho vanished");
    Ok(PathSequence::from_counts(counts))
}

/// Closed forms in their usual simplified or piecewise presentation.
///
/// These are not used to compute anything; they exist so the compositions
/// above can be checked against them. Some are wrong on part of their
/// domain, as documented on each function.
// Bounds are kept in the `h <= n - 1` shape they are usually written in.
#[allow(clippy::int_plus_one)]
pub mod piecewise {
    use super::*;

    fn prod(range: std::ops::RangeInclusive<usize>, f: impl Fn(usize) -> BigInt) -> BigInt {
        range.map(f).product()
    }

    /// Complete bipartite `P_h` written as
    /// `(1/2) prod_{i=0}^{h/2} (n1-i)(n2-i) * (1/(n1-h/2) + 1/(n2-h/2))` for even
    /// `h`. Returns `None` where a denominator vanishes (for example
    /// `h = 2 n1` with `n1 < n2`, a 0/0 form although paths exist).
    pub fn complete_bipartite_cancelled(n1: usize, n2: usize, h: usize) -> Option<BigUint> {
        if h == 0 || h % 2 == 1 {
            return Some(complete_bipartite_count(n1, n2, h));
        }
        let half = (h / 2) as i64;
        let (a, b) = (n1 as i64 - half, n2 as i64 - half);
        if a == 0 || b == 0 {
            return None;
        }
        let p = prod(0..=h / 2, |i| {
            BigInt::from((n1 as i64 - i as i64) * (n2 as i64 - i as i64))
        });
        let num = p * BigInt::from(a + b);
        let den = BigInt::from(2 * a * b);
        debug_assert!((&num % &den).is_zero());
        Some(to_unsigned(num / den))
    }

    /// The polynomial `m^2 + m + n - 1 + (2 - m) L_1` sometimes given for the
    /// starlike `P_3`. It does not count paths: `K_{1,4}` has no path of
    /// length 3, yet the polynomial gives 16.
    pub fn starlike_p3_polynomial(branches: &BranchSequence) -> BigInt {
        let (n, m, l1) = (
            BigInt::from(branches.vertex_count()),
            BigInt::from(branches.branch_count()),
            BigInt::from(branches.get(1)),
        );
        &m * &m + &m + n - 1 + (2 - m) * l1
    }

    /// `2 P_4` as the polynomial
    /// `2(n-1) - 13m + 3m^2 + (7 - 4m) L_1 + L_1^2 + 2(2 - m) L_2`. Like the
    /// `P_3` polynomial it disagrees with the true counts.
    pub fn starlike_p4_polynomial_doubled(branches: &BranchSequence) -> BigInt {
        let (n, m, l1, l2) = (
            BigInt::from(branches.vertex_count()),
            BigInt::from(branches.branch_count()),
            BigInt::from(branches.get(1)),
            BigInt::from(branches.get(2)),
        );
        2 * (n - 1) - 13 * &m + 3 * &m * &m + (7 - 4 * &m) * &l1 + &l1 * &l1 + 2 * (2 - m) * l2
    }

    /// Kite `P_h` by the piecewise case split on `n2 <= n1` versus
    /// `n1 < n2`. For `n1 < n2` the last range (`n2 <= h`) keeps the full
    /// `sum_{k=1}^{n1-1} g(k)` and so overcounts for `h > n2`.
    pub fn kite(n1: usize, n2: usize, h: usize) -> Option<BigUint> {
        let g = |k: usize| prod(1..=k, |i| BigInt::from(n1 as i64 - i as i64));
        let half_clique = || BigInt::from(complete_count(n1, h));
        let path_rest = || BigInt::from(n2 as i64 - h as i64);
        let value = match h {
            0 => BigInt::from(n1 + n2 - 1),
            1 => BigInt::from(n1 * (n1 - 1) / 2 + n2 - 1),
            _ if h > n1 + n2 - 2 => return None,
            _ if n2 <= n1 => {
                if h <= n2 - 1 {
                    half_clique() + path_rest() + (1..h).map(g).sum::<BigInt>()
                } else if h <= n1 - 1 {
                    half_clique() + (1..n2).map(|k| g(h - k)).sum::<BigInt>()
                } else {
                    (1..n2).map(|k| g(h - k)).sum()
                }
            }
            _ => {
                if h <= n1 - 1 {
                    half_clique() + path_rest() + (1..h).map(g).sum::<BigInt>()
                } else if h <= n2 - 1 {
                    path_rest() + (1..n1).map(g).sum::<BigInt>()
                } else {
                    (1..n1).map(g).sum()
                }
            }
        };
        Some(to_unsigned(value))
    }

    /// Lollipop `P_h` as linear pieces in `h`.
    pub fn lollipop(n1: usize, n2: usize, h: usize) -> Option<BigUint> {
        let (a, b, x) = (n1 as i64, n2 as i64, h as i64);
        let value = match h {
            0 | 1 => a + b - 1,
            _ if x > a + b - 2 => return None,
            _ if n2 <= n1 => {
                if x <= b - 1 {
                    a + b + x - 2
                } else if x <= a - 1 {
                    a + 2 * b - 2
                } else {
                    2 * a + 2 * b - 2 * x - 2
                }
            }
            _ => {
                if x <= a - 1 {
                    a + b + x - 2
                } else if x <= b - 1 {
                    2 * a + b - x - 2
                } else {
                    2 * a + 2 * b - 2 * x - 2
                }
            }
        };
        Some(BigUint::from(value as u64))
    }

    /// Generalized starlike `P_h` by the four-regime case split on `n1`,
    /// `t1`, `t2`. `None` where no regime applies (a single branch whose
    /// length is at least `n1 - 1`), or past the longest path.
    pub fn generalized_starlike(n1: usize, branches: &BranchSequence, h: usize) -> Option<BigUint> {
        let n2 = branches.vertex_count();
        let m = branches.branch_count();
        let n = n1 + n2 - 1;
        let (t1, t2) = (branches.longest(), branches.second_longest());
        let g = |k: usize| -> BigInt {
            if k == 0 {
                return BigInt::one();
            }
            prod(1..=k, |i| BigInt::from(n1 as i64 - i as i64))
        };
        let f = |j: usize| -> BigInt {
            BigInt::from(m)
                - (1..j)
                    .map(|i| BigInt::from(branches.get(i)))
                    .sum::<BigInt>()
        };
        let clique = || BigInt::from(complete_count(n1, h));
        let star = || BigInt::from(starlike_count(branches, h));
        // sum_{k=1}^{upper} g(k) f(h-k) and sum_{k=1}^{upper} f(k) g(h-k)
        let gf = |upper: usize| -> BigInt { (1..=upper).map(|k| g(k) * f(h - k)).sum() };
        let fg = |upper: usize| -> BigInt { (1..=upper).map(|k| f(k) * g(h - k)).sum() };

        let value = match h {
            0 => BigInt::from(n),
            1 => BigInt::from(n1 * (n1 - 1) / 2 + n2 - 1),
            2 => {
                // (1/2) m^2 + (n1 - 5/2) m + (1/2) n1^3 - (3/2) n1^2 + n, doubled then halved.
                let (m, a) = (BigInt::from(m), BigInt::from(n1));
                (&m * &m + (2 * &a - 5) * &m + &a * &a * &a - 3 * &a * &a) / 2 + n
            }
            _ if t2 < n1 - 1 => {
                if n1 - 1 <= t1 + t2 {
                    if n1 - 1 <= t1 && t1 < t1 + t2 {
                        if h <= n1 - 1 {
                            clique() + star() + gf(h - 1)
                        } else if h <= t1 + t2 {
                            star() + gf(n1 - 1)
                        } else if h <= t1 + n1 - 1 {
                            gf(n1 - 1)
                        } else {
                            return None;
                        }
                    } else if t1 < n1 - 1 {
                        if h <= t1 {
                            clique() + star() + fg(h - 1)
                        } else if h <= n1 - 1 {
                            clique() + star() + fg(t1)
                        } else if h <= t1 + t2 {
                            star() + fg(t1)
                        } else if h <= t1 + n1 - 1 {
                            fg(t1)
                        } else {
                            return None;
                        }
                    } else {
                        return None;
                    }
                } else if h <= t1 {
                    clique() + star() + fg(h - 1)
                } else if h <= t1 + t2 {
                    clique() + star() + fg(t1)
                } else if h <= n1 - 1 {
                    clique() + fg(t1)
                } else if h <= t1 + n1 - 1 {
                    fg(t1)
                } else {
                    return None;
                }
            }
            _ => {
                if h <= n1 - 1 {
                    clique() + star() + gf(h - 1)
                } else if h <= t1 + n1 - 1 {
                    star() + gf(n1 - 1)
                } else if h <= t1 + t2 {
                    star()
                } else {
                    return None;
                }
            }
        };
        Some(to_unsigned(value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(counts: &[usize]) -> BranchSequence {
        BranchSequence::new(counts.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete_count(4, 2), big(12));
        assert_eq!(complete_count(4, 5), big(0));
        assert_eq!(complete_count(1, 0), big(1));
        assert_eq!(complete_count(4, 3), big(12));
    }

    #[test]
    fn complete_bipartite_examples() {
        assert_eq!(complete_bipartite_count(2, 3, 2), big(9));
        assert_eq!(complete_bipartite_count(2, 3, 4), big(6));
        assert_eq!(complete_bipartite_count(2, 2, 3), big(4));
        assert_eq!(complete_bipartite_count(2, 3, 5), big(0));
        assert_eq!(complete_bipartite_count(2, 3, 0), big(5));
        assert_eq!(piecewise::complete_bipartite_cancelled(2, 3, 4), None);
        assert_eq!(
            piecewise::complete_bipartite_cancelled(2, 3, 2),
            Some(big(9))
        );
    }

    #[test]
    fn simple_families() {
        let s = |spec| simple_family_sequence(&spec).unwrap().to_string();
        assert_eq!(s(FamilySpec::Path { n: 4 }), "4,3,2,1");
        assert_eq!(s(FamilySpec::Cycle { n: 5 }), "5,5,5,5,5");
        assert_eq!(s(FamilySpec::Star { n: 4 }), "4,3,3");
        assert!(simple_family_sequence(&FamilySpec::Complete { n: 3 }).is_err());
    }

    #[test]
    fn starlike_type_count_examples() {
        let c = starlike_type_counts(&bs(&[2, 1]), 2).unwrap();
        assert_eq!(
            (c.x1.clone(), c.x2.clone(), c.y1.clone(), c.y2.clone()),
            (big(1), big(0), big(0), big(0))
        );
        assert_eq!(c.z1.iter().sum::<BigUint>(), big(2));
        assert_eq!(c.z2.iter().sum::<BigUint>(), big(1));
        assert_eq!(c.z3.iter().sum::<BigUint>(), big(0));

        let c = starlike_type_counts(&bs(&[4]), 2).unwrap();
        assert_eq!(c.z2.iter().sum::<BigUint>(), big(6));
        assert_eq!(c.total(), big(6));

        let c = starlike_type_counts(&bs(&[2, 1]), 3).unwrap();
        assert_eq!(c.z2.iter().sum::<BigUint>(), big(2));
        assert_eq!(c.total(), big(2));

        assert!(starlike_type_counts(&bs(&[2, 1]), 0).is_err());
        assert_eq!(
            starlike_type_counts(&bs(&[2, 1]), 9).unwrap(),
            PathTypeCounts::zeroed(9)
        );
    }

    #[test]
    fn starlike_count_examples() {
        assert_eq!(starlike_count(&bs(&[2, 1]), 2), big(4));
        assert_eq!(starlike_count(&bs(&[2, 1]), 3), big(2));
        assert_eq!(starlike_count(&bs(&[4]), 3), big(0));
        assert_eq!(starlike_count(&bs(&[4]), 0), big(5));
    }

    #[test]
    fn kite_and_lollipop_examples() {
        assert_eq!(kite_count(4, 2, 2), big(15));
        assert_eq!(kite_count(4, 2, 4), big(6));
        assert_eq!(kite_count(4, 2, 1), big(7));
        assert_eq!(lollipop_count(4, 3, 2), big(7));
        assert_eq!(lollipop_count(4, 3, 4), big(4));
        assert_eq!(lollipop_count(4, 3, 1), big(6));
    }

    #[test]
    fn generalized_starlike_examples() {
        assert_eq!(generalized_starlike_count(3, &bs(&[3]), 2), big(12));
        assert_eq!(generalized_starlike_count(3, &bs(&[3]), 3), big(6));
        assert_eq!(generalized_starlike_count(3, &bs(&[3]), 4), big(0));
        assert_eq!(
            piecewise::generalized_starlike(3, &bs(&[3]), 2),
            Some(big(12))
        );
    }

    #[test]
    fn sequence_examples() {
        let s = |spec| sequence_of(&spec).unwrap().to_string();
        assert_eq!(s(FamilySpec::Kite { n1: 4, n2: 2 }), "5,7,15,18,6");
        assert_eq!(s(FamilySpec::Lollipop { n1: 4, n2: 3 }), "6,6,7,8,4,2");
        assert_eq!(s(FamilySpec::Complete { n: 4 }), "4,6,12,12");
        assert_eq!(s(FamilySpec::Complete { n: 1 }), "1");
        assert_eq!(s(FamilySpec::CompleteBipartite { n1: 1, n2: 1 }), "2,1");
        assert!(sequence_of(&FamilySpec::Cycle { n: 2 }).is_err());
    }

    #[test]
    fn p3_polynomial_erratum() {
        assert_eq!(
            piecewise::starlike_p3_polynomial(&bs(&[4])),
            BigInt::from(16)
        );
        assert_eq!(starlike_count(&bs(&[4]), 3), big(0));
    }

    #[test]
    fn signed_counts_ignore_branches_past_h_minus_2() {
        // L = (1, 1, 2): n = 1 + 1 + 2 + 6 = 10, m = 4.
        let full = bs(&[1, 1, 2]);
        for h in 3..=6 {
            let truncated = &full.counts()[..(h - 2).min(3)];
            assert_eq!(
                signed_starlike_count(10, 4, truncated, h),
                BigInt::from(starlike_count(&full, h)),
                "h = {h}"
            );
        }
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling(5, 0), big(1));
        assert_eq!(falling(5, 2), big(20));
        assert_eq!(falling(3, 4), big(0));
    }
}
