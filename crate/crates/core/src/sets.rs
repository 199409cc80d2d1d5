//! Finite-set calculus underlying the determinantal constructions.
//!
//! Families are indexed by a pair (or, on the bounded lattice, a quartet) of
//! finite sets of positive integers together with a nonpositive integer
//! parameter. The quantities here control degrees, index sets, admissibility,
//! and the reduction of degenerate parameter choices to canonical ones.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::rat::{pow_i, rat, Rat};
use crate::Error;

/// Sorted duplicate-free set of integers. The constructions use sets of
/// positive integers; 0 appears transiently in the reduction chains and in
/// deleted-mass recipes, negatives only inside node sets.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FiniteSet {
    elems: Vec<i64>,
}

impl FiniteSet {
    pub fn new(mut elems: Vec<i64>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        FiniteSet { elems }
    }

    pub fn empty() -> Self {
        FiniteSet::default()
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: i64, hi: i64) -> Self {
        FiniteSet {
            elems: (lo..=hi).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }

    pub fn elems(&self) -> &[i64] {
        &self.elems
    }

    /// Maximum with the convention `max ∅ = -1`.
    pub fn max(&self) -> i64 {
        self.elems.last().copied().unwrap_or(-1)
    }

    /// Minimum with the convention `min ∅ = -1`.
    pub fn min(&self) -> i64 {
        self.elems.first().copied().unwrap_or(-1)
    }

    pub fn sum(&self) -> i64 {
        self.elems.iter().sum()
    }

    pub fn insert(&self, v: i64) -> FiniteSet {
        let mut e = self.elems.clone();
        if let Err(pos) = e.binary_search(&v) {
            e.insert(pos, v);
        }
        FiniteSet { elems: e }
    }

    pub fn remove(&self, v: i64) -> FiniteSet {
        let mut e = self.elems.clone();
        if let Ok(pos) = e.binary_search(&v) {
            e.remove(pos);
        }
        FiniteSet { elems: e }
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let mut e = self.elems.clone();
        e.extend_from_slice(&other.elems);
        FiniteSet::new(e)
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet {
            elems: self
                .elems
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        }
    }

    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet {
            elems: self
                .elems
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        }
    }

    /// Elementwise map, re-sorted.
    pub fn map(&self, f: impl Fn(i64) -> i64) -> FiniteSet {
        FiniteSet::new(self.elems.iter().map(|&v| f(v)).collect())
    }

    /// The involution `I(F) = {1, ..., max F} \ {max F - f : f in F}` on
    /// finite sets of positive integers; the empty set is a fixed point.
    /// Applying it twice gives the set back, and `max` is preserved.
    pub fn involution(&self) -> FiniteSet {
        if self.is_empty() {
            return FiniteSet::empty();
        }
        let m = self.max();
        let mirror = self.map(|f| m - f);
        FiniteSet::range(1, m).difference(&mirror)
    }

    /// One past the initial run of consecutive elements `1, 2, ...`:
    /// the smallest `s >= 1` with `s < f_s` (1-indexed ascending), or
    /// `len + 1` when the set is exactly such a run. A 0 in the set is
    /// ignored. 1 for the empty set.
    pub fn segment_index(&self) -> i64 {
        let start = usize::from(self.contains(0));
        for (i, &f) in self.elems[start..].iter().enumerate() {
            let s = i as i64 + 1;
            if s < f {
                return s;
            }
        }
        (self.elems.len() - start) as i64 + 1
    }

    /// Remove the initial run (together with a leading 0 if present) and
    /// shift the survivors down by the segment index: the set of
    /// `f - s` over elements `f > s`, where `s` is `segment_index`.
    /// The original is recovered as `{1,...,s-1} ∪ (s + result)` (with 0
    /// joining the first block when it was present).
    pub fn collapse_segment(&self) -> FiniteSet {
        let base = self.remove(0);
        let s = base.segment_index();
        FiniteSet {
            elems: base.elems.iter().filter(|&&f| f > s).map(|&f| f - s).collect(),
        }
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Pair of finite sets indexing a family on the unbounded lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetPair {
    pub f1: FiniteSet,
    pub f2: FiniteSet,
}

impl SetPair {
    pub fn new(f1: FiniteSet, f2: FiniteSet) -> Self {
        SetPair { f1, f2 }
    }

    pub fn k1(&self) -> usize {
        self.f1.len()
    }

    pub fn k2(&self) -> usize {
        self.f2.len()
    }

    /// Total number of elements.
    pub fn k(&self) -> usize {
        self.k1() + self.k2()
    }

    pub fn zero_free(&self) -> bool {
        !self.f1.contains(0) && !self.f2.contains(0)
    }

    /// `u = sum F1 + sum F2 - C(k1+1, 2) - C(k2, 2)`; nonnegative for pairs
    /// of positive integers.
    pub fn u(&self) -> i64 {
        let k1 = self.k1() as i64;
        let k2 = self.k2() as i64;
        self.f1.sum() + self.f2.sum() - k1 * (k1 + 1) / 2 - k2 * (k2 - 1) / 2
    }

    /// Membership in the index set `{u, u+1, ...} \ {u + f : f in F1}`.
    pub fn sigma_contains(&self, n: i64) -> bool {
        let u = self.u();
        n >= u && !self.f1.contains(n - u)
    }

    /// All members of the index set up to and including `n_max`, ascending.
    pub fn sigma_to(&self, n_max: i64) -> Vec<i64> {
        (self.u()..=n_max).filter(|&n| self.sigma_contains(n)).collect()
    }

    /// First `count` members of the index set, ascending.
    pub fn sigma_prefix(&self, count: usize) -> Vec<i64> {
        let mut out = Vec::with_capacity(count);
        let mut n = self.u();
        while out.len() < count {
            if self.sigma_contains(n) {
                out.push(n);
            }
            n += 1;
        }
        out
    }

    /// Collapse the first component's initial segment, keep the second.
    pub fn collapse_first(&self) -> SetPair {
        SetPair::new(self.f1.collapse_segment(), self.f2.clone())
    }
}

impl fmt::Display for SetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f1, self.f2)
    }
}

/// `H(u; I, J) = [[I ∪ (u - J)] \ {0, ..., u}] ∪ [I ∩ (u - J)]`, the finite
/// set of nodes whose product gives the deformed mass. May contain negative
/// integers; the intersection part re-enters points inside the band.
pub fn h_nodes(u: i64, i_set: &FiniteSet, j_set: &FiniteSet) -> FiniteSet {
    let uj = j_set.map(|j| u - j);
    let band = FiniteSet::range(0, u);
    i_set
        .union(&uj)
        .difference(&band)
        .union(&i_set.intersection(&uj))
}

/// The covering condition `{0, 1, ..., -c_hat} ⊆ F1 ∪ (-c_hat - F2)` that
/// makes the deformed measure well defined for nonpositive `c_hat`.
pub fn covering_holds(c_hat: i64, pair: &SetPair) -> bool {
    debug_assert!(c_hat <= 0);
    let shifted = pair.f2.map(|f| -c_hat - f);
    (0..=-c_hat).all(|x| pair.f1.contains(x) || shifted.contains(x))
}

/// Node set of the measure attached to `(c_hat; F1, F2)`: `H(-c_hat, F1, F2)`.
pub fn measure_nodes(c_hat: i64, pair: &SetPair) -> FiniteSet {
    h_nodes(-c_hat, &pair.f1, &pair.f2)
}

#[derive(Clone, Debug)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub nodes: FiniteSet,
    /// A point of `N \ F1` where the node product is negative, if any.
    pub witness: Option<i64>,
}

/// `(c_hat, F)` is admissible when `prod_{h in H} (x - h) >= 0` for every
/// natural `x` outside `F1`. The product has positive leading coefficient,
/// so scanning past `max H` settles the sign everywhere.
pub fn admissible(c_hat: i64, pair: &SetPair) -> AdmissibilityReport {
    let nodes = measure_nodes(c_hat, pair);
    let p = node_product(&nodes);
    let top = nodes.max().max(0) + 1;
    for x in 0..=top {
        if pair.f1.contains(x) {
            continue;
        }
        if p.eval_i(x) < Rat::zero() {
            return AdmissibilityReport {
                admissible: false,
                nodes,
                witness: Some(x),
            };
        }
    }
    AdmissibilityReport {
        admissible: true,
        nodes,
        witness: None,
    }
}

/// `prod_{h in H} (x - h)` as a polynomial.
pub fn node_product(nodes: &FiniteSet) -> Poly {
    let roots: Vec<Rat> = nodes.iter().map(rat).collect();
    Poly::from_roots(&roots)
}

/// Vandermonde factor `prod_{i<j} (f_j - f_i)` of one set; 1 when fewer
/// than two elements.
pub fn vandermonde(set: &FiniteSet) -> Rat {
    let e = set.elems();
    let mut v = Rat::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            v *= rat(e[j] - e[i]);
        }
    }
    v
}

// ---- Reduction of degenerate parameters ----

/// Canonical outcome of the reduction chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalForm {
    /// A genuinely new instance: `c_hat <= -1` with both sets 0-free.
    Deformed { c_hat: i64, pair: SetPair },
    /// Collapse to a Christoffel transform of the undeformed measure with a
    /// positive integer parameter `d`.
    Christoffel { d: i64, pair: SetPair },
}

/// One rewrite step of the chain, for reporting.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub rule: &'static str,
    pub c_hat: i64,
    pub pair: SetPair,
    pub shift: i64,
}

/// Result of reducing `(c_hat; F1, F2)`: the original measure equals
/// `a^{a_power}` times the canonical measure translated right by `shift`.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub canonical: CanonicalForm,
    pub steps: Vec<ReductionStep>,
    pub shift: i64,
    pub a_power: i64,
}

impl Normalized {
    /// The scalar `a^{a_power}` for a concrete `a`.
    pub fn scale(&self, a: &Rat) -> Rat {
        pow_i(a, self.a_power)
    }
}

/// Rewrite `(c_hat; F1, F2)`, `c_hat <= 0`, until the sets are 0-free with
/// `c_hat <= -1`, or the instance collapses to a Christoffel transform.
///
/// Steps, applied in order until none fires:
/// * `c_hat <= -1` and `0 in F1`: collapse the initial segment of `F1`; the
///   parameter rises by the segment index `s` when `s <= -c_hat` (measure
///   translates by `s` and scales by `a^s`), otherwise the parameter jumps
///   to 0 with the segment partially re-expanded.
/// * `c_hat <= -1` and `0 in F2` only: same on the second component, with
///   no translation and no scale.
/// * `c_hat = 0`: terminal rewrite to the Christoffel form with a positive
///   integer parameter built from the segment indices.
///
/// Errors when the covering condition fails for the given data.
pub fn normalize_pair(c_hat: i64, pair: &SetPair) -> Result<Normalized, Error> {
    if c_hat > 0 {
        return Err(Error::DegenerateParameter(alloc::format!(
            "parameter {c_hat} is positive; nothing to reduce"
        )));
    }
    if !covering_holds(c_hat, pair) {
        return Err(Error::NotRepresentable(alloc::format!(
            "covering condition fails for c_hat = {c_hat}, F = {pair}"
        )));
    }
    let mut c = c_hat;
    let mut p = pair.clone();
    let mut steps = Vec::new();
    let mut shift = 0i64;
    let mut a_power = 0i64;

    loop {
        if c <= -1 && p.zero_free() {
            return Ok(Normalized {
                canonical: CanonicalForm::Deformed { c_hat: c, pair: p },
                steps,
                shift,
                a_power,
            });
        }
        if c == 0 {
            // terminal: express as a Christoffel transform
            let s1 = p.f1.segment_index();
            let s2 = p.f2.segment_index();
            let (d, u, extra_shift, extra_power);
            if p.f1.contains(0) && !p.f2.contains(0) {
                d = s1;
                u = SetPair::new(p.f1.collapse_segment(), p.f2.clone());
                extra_shift = s1;
                extra_power = s1;
            } else if p.f1.contains(0) && p.f2.contains(0) {
                d = s1 + s2;
                u = SetPair::new(p.f1.collapse_segment(), p.f2.collapse_segment());
                extra_shift = s1;
                extra_power = s1;
            } else if p.f2.contains(0) {
                d = s2;
                u = SetPair::new(p.f1.clone(), p.f2.collapse_segment());
                extra_shift = 0;
                extra_power = 0;
            } else {
                // covering at c_hat = 0 forces 0 into F1 or F2
                return Err(Error::NotRepresentable(alloc::format!(
                    "neither component of {p} contains 0 at parameter 0"
                )));
            }
            shift += extra_shift;
            a_power += extra_power;
            steps.push(ReductionStep {
                rule: "christoffel",
                c_hat: d,
                pair: u.clone(),
                shift,
            });
            return Ok(Normalized {
                canonical: CanonicalForm::Christoffel { d, pair: u },
                steps,
                shift,
                a_power,
            });
        }
        // c <= -1 with a 0 somewhere
        if p.f1.contains(0) {
            let s = p.f1.segment_index();
            if s <= -c {
                p = SetPair::new(p.f1.collapse_segment(), p.f2.clone());
                c += s;
                shift += s;
                a_power += s;
                steps.push(ReductionStep {
                    rule: "collapse-first",
                    c_hat: c,
                    pair: p.clone(),
                    shift,
                });
            } else {
                // parameter would overshoot 0: rebuild the first component
                // with the surplus of the segment kept
                let kept = FiniteSet::range(0, s - 1 + c);
                let moved = p.f1.collapse_segment().map(|f| f + s + c);
                p = SetPair::new(kept.union(&moved), p.f2.clone());
                shift += -c;
                a_power += -c;
                c = 0;
                steps.push(ReductionStep {
                    rule: "collapse-first-partial",
                    c_hat: c,
                    pair: p.clone(),
                    shift,
                });
            }
        } else if p.f2.contains(0) {
            let s = p.f2.segment_index();
            if s <= -c {
                p = SetPair::new(p.f1.clone(), p.f2.collapse_segment());
                c += s;
                steps.push(ReductionStep {
                    rule: "collapse-second",
                    c_hat: c,
                    pair: p.clone(),
                    shift,
                });
            } else {
                let kept = FiniteSet::range(0, s - 1 + c);
                let moved = p.f2.collapse_segment().map(|f| f + s + c);
                p = SetPair::new(p.f1.clone(), kept.union(&moved));
                c = 0;
                steps.push(ReductionStep {
                    rule: "collapse-second-partial",
                    c_hat: c,
                    pair: p.clone(),
                    shift,
                });
            }
        } else {
            unreachable!("loop invariant: a rewrite always applies");
        }
        assert!(steps.len() < 64, "reduction chain failed to terminate");
    }
}

/// Index-preserving reduction for the determinantal families themselves:
/// when `c_hat = 0` or a component contains 0, the degree-`n` member equals
/// (up to a constant) the member of `(d; U1, U2)` with `d = c_hat + s1 + s2`
/// where `s_i` is the segment index when `0 in F_i` (else 0) and `U_i` the
/// collapsed component.
pub fn collapse_target(c_hat: i64, pair: &SetPair) -> (i64, SetPair) {
    let s1 = if pair.f1.contains(0) {
        pair.f1.segment_index()
    } else {
        0
    };
    let s2 = if pair.f2.contains(0) {
        pair.f2.segment_index()
    } else {
        0
    };
    let u1 = if s1 > 0 {
        pair.f1.collapse_segment()
    } else {
        pair.f1.clone()
    };
    let u2 = if s2 > 0 {
        pair.f2.collapse_segment()
    } else {
        pair.f2.clone()
    };
    (c_hat + s1 + s2, SetPair::new(u1, u2))
}

// ---- Deleted-mass recipes ----

/// Data of a measure `(c_hat; F1, F2)` realizing the geometric-type measure
/// with positive integer parameter `d` and the masses at `A` removed.
#[derive(Clone, Debug)]
pub struct DeletedMassSpec {
    pub c_hat: i64,
    pub pair: SetPair,
    pub nodes: FiniteSet,
}

/// Removing the masses at a finite set `A` of nonnegative integers from the
/// measure with positive integer parameter `d` yields the instance
/// `c_hat = -max A`, `F1 = A`, `F2 = X ∪ Y` where `X` mirrors the gaps of
/// `A` inside `{1..max A}` and `Y` carries the parameter excess. The node
/// set is always `{-d+1, ..., -1}`.
pub fn deleted_mass_pair(d: i64, a_set: &FiniteSet) -> Result<DeletedMassSpec, Error> {
    if d < 1 {
        return Err(Error::DegenerateParameter(alloc::format!(
            "deleted-mass recipe needs a positive integer parameter, got {d}"
        )));
    }
    if a_set.min() < 0 && !a_set.is_empty() {
        return Err(Error::InvalidSpec(alloc::format!(
            "deleted points must be nonnegative, got {a_set}"
        )));
    }
    let c_hat = -a_set.max().max(0);
    // complement of A inside {1, ..., -c_hat}
    let a_comp = FiniteSet::range(1, -c_hat).difference(a_set);
    let mut x = a_comp.map(|b| -c_hat - b);
    if !a_set.contains(0) && !a_set.is_empty() {
        x = x.insert(-c_hat);
    }
    let y = FiniteSet::new((1..d).map(|i| -c_hat + i).collect());
    let pair = SetPair::new(a_set.clone(), x.union(&y));
    if !covering_holds(c_hat, &pair) {
        return Err(Error::InvalidSpec(alloc::format!(
            "recipe output violates the covering condition for A = {a_set}, d = {d}"
        )));
    }
    let nodes = measure_nodes(c_hat, &pair);
    Ok(DeletedMassSpec { c_hat, pair, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fs(v: &[i64]) -> FiniteSet {
        FiniteSet::new(v.to_vec())
    }

    #[test]
    fn involution_examples() {
        assert_eq!(fs(&[1, 2, 3]).involution(), fs(&[3]));
        assert_eq!(fs(&[2]).involution(), fs(&[1, 2]));
        assert_eq!(FiniteSet::empty().involution(), FiniteSet::empty());
        assert_eq!(fs(&[1]).involution(), fs(&[1]));
    }

    #[test]
    fn involution_is_involutive_and_preserves_max() {
        for set in [fs(&[2, 5]), fs(&[1, 4, 6]), fs(&[3]), fs(&[1, 2, 3]), fs(&[2, 3, 7, 8])] {
            let g = set.involution();
            assert_eq!(g.involution(), set);
            assert_eq!(g.max(), set.max());
            assert_eq!(g.len() as i64, set.max() - set.len() as i64 + 1);
        }
    }

    #[test]
    fn segment_index_cases() {
        assert_eq!(FiniteSet::empty().segment_index(), 1);
        assert_eq!(fs(&[1, 2]).segment_index(), 3);
        assert_eq!(fs(&[1, 2, 5]).segment_index(), 3);
        assert_eq!(fs(&[2]).segment_index(), 1);
        // 0 is ignored
        assert_eq!(fs(&[0, 1, 2]).segment_index(), 3);
        assert_eq!(fs(&[0]).segment_index(), 1);
    }

    #[test]
    fn collapse_segment_cases() {
        assert_eq!(fs(&[2, 3]).collapse_segment(), fs(&[1, 2]));
        assert_eq!(fs(&[1, 2, 5, 6]).collapse_segment(), fs(&[2, 3]));
        assert_eq!(fs(&[1, 2, 3]).collapse_segment(), FiniteSet::empty());
        assert_eq!(fs(&[0, 2]).collapse_segment(), fs(&[1]));
        assert_eq!(fs(&[2]).collapse_segment(), fs(&[1]));
    }

    #[test]
    fn reconstruction_identity() {
        // F = {1,...,s-1} ∪ (s + collapsed) for 0-free F
        for set in [fs(&[1, 2, 5, 6]), fs(&[2]), fs(&[1, 3]), fs(&[4, 5, 6]), fs(&[1, 2, 3])] {
            let s = set.segment_index();
            let rebuilt = FiniteSet::range(1, s - 1).union(&set.collapse_segment().map(|f| f + s));
            assert_eq!(rebuilt, set, "failed for {set}");
        }
    }

    #[test]
    fn u_and_sigma() {
        let p = SetPair::new(fs(&[1]), fs(&[1]));
        assert_eq!(p.u(), 1);
        assert_eq!(p.sigma_prefix(4), vec![1, 3, 4, 5]);

        let q = SetPair::new(FiniteSet::empty(), fs(&[2]));
        assert_eq!(q.u(), 2);
        assert_eq!(q.sigma_prefix(3), vec![2, 3, 4]);

        // a full initial segment in the first component contributes nothing
        let r = SetPair::new(fs(&[1, 2, 3]), FiniteSet::empty());
        assert_eq!(r.u(), 0);

        let s = SetPair::new(FiniteSet::empty(), fs(&[1, 2]));
        assert_eq!(s.u(), 2);
    }

    #[test]
    fn node_set_examples() {
        assert_eq!(h_nodes(1, &fs(&[1]), &fs(&[1])), FiniteSet::empty());
        assert_eq!(h_nodes(0, &fs(&[2]), &fs(&[3])), fs(&[-3, 2]));
        // a point in both parts survives through the intersection
        assert_eq!(h_nodes(2, &fs(&[1, 3]), &fs(&[1])), fs(&[1, 3]));
    }

    #[test]
    fn covering_and_admissibility() {
        let p = SetPair::new(fs(&[1]), fs(&[1]));
        assert!(covering_holds(-1, &p));
        let rep = admissible(-1, &p);
        assert!(rep.admissible);
        assert!(rep.nodes.is_empty());

        // nodes {-1} from the deleted-mass recipe are always admissible
        let q = SetPair::new(fs(&[0]), fs(&[1]));
        assert!(covering_holds(0, &q));
        let rep = admissible(0, &q);
        assert!(rep.admissible);
        assert_eq!(rep.nodes, fs(&[-1]));

        // a single positive node makes small points negative
        let r = SetPair::new(fs(&[1, 2]), fs(&[1]));
        assert!(covering_holds(-1, &r));
        let rep = admissible(-1, &r);
        assert_eq!(rep.nodes, fs(&[2]));
        assert!(!rep.admissible);
        assert_eq!(rep.witness, Some(0));
    }

    #[test]
    fn vandermonde_products() {
        assert_eq!(vandermonde(&fs(&[5])), rat(1));
        assert_eq!(vandermonde(&fs(&[1, 2, 4])), rat(6));
        assert_eq!(vandermonde(&fs(&[1, 2, 3])), rat(2));
    }

    #[test]
    fn normalize_already_canonical() {
        let p = SetPair::new(fs(&[1]), fs(&[1]));
        let n = normalize_pair(-1, &p).unwrap();
        assert_eq!(n.shift, 0);
        assert_eq!(n.a_power, 0);
        assert!(n.steps.is_empty());
        assert_eq!(
            n.canonical,
            CanonicalForm::Deformed { c_hat: -1, pair: p }
        );
    }

    #[test]
    fn normalize_zero_parameter() {
        // (0; {0}, {1}) is the one-point deletion of the parameter-2 measure
        let p = SetPair::new(fs(&[0]), fs(&[1]));
        let n = normalize_pair(0, &p).unwrap();
        match n.canonical {
            CanonicalForm::Christoffel { d, ref pair } => {
                assert_eq!(d, 1);
                assert_eq!(*pair, SetPair::new(FiniteSet::empty(), fs(&[1])));
            }
            _ => panic!("expected Christoffel form"),
        }
        assert_eq!(n.shift, 1);
        assert_eq!(n.a_power, 1);
    }

    #[test]
    fn normalize_walks_first_component() {
        // (-2; {0, 2}, {1}): segment index of {0, 2} is 1 <= 2
        let p = SetPair::new(fs(&[0, 2]), fs(&[1]));
        assert!(covering_holds(-2, &p));
        let n = normalize_pair(-2, &p).unwrap();
        match n.canonical {
            CanonicalForm::Deformed { c_hat, ref pair } => {
                assert_eq!(c_hat, -1);
                assert_eq!(*pair, SetPair::new(fs(&[1]), fs(&[1])));
                assert!(covering_holds(c_hat, pair));
            }
            _ => panic!("expected deformed form"),
        }
        assert_eq!(n.shift, 1);
        assert_eq!(n.a_power, 1);
    }

    #[test]
    fn normalize_partial_collapse_reaches_zero() {
        // (-1; {0,1,3}, {2}): segment index 2 exceeds 1, so the chain jumps
        // through parameter 0 and ends in a Christoffel form
        let p = SetPair::new(fs(&[0, 1, 3]), fs(&[2]));
        assert!(covering_holds(-1, &p));
        let n = normalize_pair(-1, &p).unwrap();
        match n.canonical {
            CanonicalForm::Christoffel { d, ref pair } => {
                assert_eq!(d, 1);
                assert_eq!(*pair, SetPair::new(fs(&[1]), fs(&[2])));
            }
            _ => panic!("expected Christoffel form"),
        }
        assert_eq!(n.shift, 2);
        assert_eq!(n.a_power, 2);
        assert_eq!(n.steps.len(), 2);
    }

    #[test]
    fn deleted_mass_examples() {
        // remove the origin from the parameter-2 measure
        let spec = deleted_mass_pair(2, &fs(&[0])).unwrap();
        assert_eq!(spec.c_hat, 0);
        assert_eq!(spec.pair, SetPair::new(fs(&[0]), fs(&[1])));
        assert_eq!(spec.nodes, fs(&[-1]));

        // remove {1} from the parameter-2 measure
        let spec = deleted_mass_pair(2, &fs(&[1])).unwrap();
        assert_eq!(spec.c_hat, -1);
        assert_eq!(spec.pair, SetPair::new(fs(&[1]), fs(&[1, 2])));
        assert_eq!(spec.nodes, fs(&[-1]));

        // node set is always {-d+1, ..., -1}
        for (d, a_set) in [(1i64, fs(&[0, 2])), (3, fs(&[1, 3])), (2, fs(&[0, 1, 4]))] {
            let spec = deleted_mass_pair(d, &a_set).unwrap();
            assert_eq!(spec.nodes, FiniteSet::range(-d + 1, -1), "A = {a_set}, d = {d}");
        }
    }

    #[test]
    fn collapse_target_examples() {
        let (d, u) = collapse_target(0, &SetPair::new(fs(&[0]), fs(&[1])));
        assert_eq!(d, 1);
        assert_eq!(u, SetPair::new(FiniteSet::empty(), fs(&[1])));

        let (d, u) = collapse_target(-2, &SetPair::new(fs(&[1, 2]), fs(&[0, 2])));
        assert_eq!(d, -1);
        assert_eq!(u, SetPair::new(fs(&[1, 2]), fs(&[1])));
    }
}
