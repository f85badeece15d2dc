//! Column sets `Col_n(q)` and the right-divisibility order `q ◁ r ⇔ r ∈ Col_n(q)`.

use crate::bits::ElementSet;
use crate::error::{LaverError, Result};
use crate::report::CheckReport;
use crate::table::{project, Element, LaverTable, Magma, HARD_MAX_N};

/// Poset commands refuse tables above this exponent.
pub const POSET_MAX_N: u32 = 10;

/// The values occurring in one column of `A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSet {
    pub q: Element,
    pub members: ElementSet,
}

impl ColumnSet {
    pub fn contains(&self, r: Element) -> bool {
        self.members.contains(r)
    }
}

pub fn column_set(t: &LaverTable, q: Element) -> Result<ColumnSet> {
    t.apply(1, q)?;
    let mut members = ElementSet::empty(t.size());
    for p in 1..=t.size() {
        members.insert(t.op(p, q));
    }
    Ok(ColumnSet { q, members })
}

/// `q ◁_n r`.
pub fn divides(t: &LaverTable, q: Element, r: Element) -> Result<bool> {
    t.apply(1, r)?;
    Ok(column_set(t, q)?.contains(r))
}

/// Outcome of [`DivisibilityPoset::is_lattice`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVerdict {
    pub is_lattice: bool,
    /// First pair (in lexicographic order) lacking a least upper bound or a
    /// greatest lower bound.
    pub witness: Option<(Element, Element)>,
    /// Every such pair `a < b`, in lexicographic order.
    pub failing_pairs: Vec<(Element, Element)>,
}

#[derive(Debug, Clone)]
pub struct DivisibilityPoset {
    n: u32,
    colsets: Vec<ElementSet>,
    /// `down[r - 1] = { q : q ◁ r }`
    down: Vec<ElementSet>,
    covers: Vec<(Element, Element)>,
}

impl DivisibilityPoset {
    pub fn new(t: &LaverTable) -> Result<Self> {
        Self::with_cap(t, POSET_MAX_N)
    }

    pub fn with_cap(t: &LaverTable, cap: u32) -> Result<Self> {
        if t.n() > cap {
            return Err(LaverError::SizeLimit {
                what: "divisibility poset",
                requested: t.n(),
                cap,
            });
        }
        let size = t.size();
        let colsets: Vec<ElementSet> = (1..=size)
            .map(|q| column_set(t, q).map(|c| c.members))
            .collect::<Result<_>>()?;
        let mut down = vec![ElementSet::empty(size); size as usize];
        for q in 1..=size {
            for r in colsets[q as usize - 1].iter() {
                down[r as usize - 1].insert(q);
            }
        }
        let mut covers = Vec::new();
        for a in 1..=size {
            let mut strict = colsets[a as usize - 1].clone();
            strict.remove(a);
            let mut beyond = ElementSet::empty(size);
            for c in strict.iter() {
                let mut above_c = colsets[c as usize - 1].clone();
                above_c.remove(c);
                beyond.union_with(&above_c);
            }
            strict.difference_with(&beyond);
            covers.extend(strict.iter().map(|b| (a, b)));
        }
        Ok(DivisibilityPoset {
            n: t.n(),
            colsets,
            down,
            covers,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> Element {
        1 << self.n
    }

    fn check(&self, x: Element) -> Result<()> {
        if (1..=self.size()).contains(&x) {
            Ok(())
        } else {
            Err(LaverError::Domain(format!("{x} is not an element of A_{}", self.n)))
        }
    }

    /// `Col_n(q)`.
    pub fn column(&self, q: Element) -> &ElementSet {
        &self.colsets[q as usize - 1]
    }

    /// `{ q : q ◁ r }`.
    pub fn below(&self, r: Element) -> &ElementSet {
        &self.down[r as usize - 1]
    }

    pub fn divides(&self, q: Element, r: Element) -> bool {
        self.column(q).contains(r)
    }

    /// Hasse covers `a → b`, sorted by `a` then `b`.
    pub fn covers(&self) -> &[(Element, Element)] {
        &self.covers
    }

    pub fn lub(&self, a: Element, b: Element) -> Result<Option<Element>> {
        self.check(a)?;
        self.check(b)?;
        let upper = self.column(a).intersection(self.column(b));
        let least = upper.iter().find(|&u| upper.is_subset(self.column(u)));
        Ok(least)
    }

    pub fn glb(&self, a: Element, b: Element) -> Result<Option<Element>> {
        self.check(a)?;
        self.check(b)?;
        let lower = self.below(a).intersection(self.below(b));
        let greatest = lower.iter().find(|&l| lower.is_subset(self.below(l)));
        Ok(greatest)
    }

    pub fn is_lattice(&self) -> LatticeVerdict {
        let size = self.size();
        let mut failing_pairs = Vec::new();
        for a in 1..=size {
            for b in a + 1..=size {
                let ok = self.lub(a, b).ok().flatten().is_some() && self.glb(a, b).ok().flatten().is_some();
                if !ok {
                    failing_pairs.push((a, b));
                }
            }
        }
        LatticeVerdict {
            is_lattice: failing_pairs.is_empty(),
            witness: failing_pairs.first().copied(),
            failing_pairs,
        }
    }

    /// Reflexive-transitive closure of the cover relation, as up-sets.
    pub fn closure_of_covers(&self) -> Vec<ElementSet> {
        let size = self.size();
        let mut up: Vec<ElementSet> = (1..=size)
            .map(|a| {
                let mut s = ElementSet::empty(size);
                s.insert(a);
                s
            })
            .collect();
        loop {
            let mut changed = false;
            for &(a, b) in &self.covers {
                let ub = up[b as usize - 1].clone();
                let ua = &mut up[a as usize - 1];
                if !ub.is_subset(ua) {
                    ua.union_with(&ub);
                    changed = true;
                }
            }
            if !changed {
                return up;
            }
        }
    }
}

/// Reflexivity, antisymmetry, transitivity, pairwise distinct columns, and
/// `q ◁ r ⇔ Col(q) ⊇ Col(r)`.
pub fn check_order_axioms(t: &LaverTable) -> Result<CheckReport> {
    let poset = DivisibilityPoset::new(t)?;
    let size = t.size();
    let mut r = CheckReport::new("order-axioms");
    for q in 1..=size {
        r.holds("reflexive", &[q.into()], poset.divides(q, q));
        for s in 1..=size {
            let input = [q.into(), s.into()];
            let d = poset.divides(q, s);
            r.holds("antisymmetric", &input, q == s || !(d && poset.divides(s, q)));
            r.holds(
                "q ◁ r iff Col(q) ⊇ Col(r)",
                &input,
                d == poset.column(s).is_subset(poset.column(q)),
            );
            if q < s {
                r.holds("columns distinct", &input, poset.column(q) != poset.column(s));
            }
            if d {
                r.holds("transitive", &input, poset.column(s).is_subset(poset.column(q)));
            }
        }
    }
    Ok(r)
}

/// The finer structure of `◁_n` near its two ends and under projection.
pub fn check_structure(t: &LaverTable) -> Result<CheckReport> {
    let poset = DivisibilityPoset::new(t)?;
    let n = t.n();
    let size = t.size();
    let mut r = CheckReport::new("structure");
    if n == 0 {
        return Ok(r);
    }
    let half = size / 2;
    let prev = DivisibilityPoset::new(&LaverTable::build_capped(n - 1, HARD_MAX_N)?)?;
    let covers: std::collections::HashSet<_> = poset.covers().iter().copied().collect();

    for q in 1..=half {
        let lifted = poset.column(q + half);
        let mut joined = lifted.clone();
        joined.insert(q);
        r.holds(
            "Col(q) = Col(q + 2^(n-1)) ⊔ {q}",
            &[q.into()],
            !lifted.contains(q) && joined == *poset.column(q),
        );
        r.holds(
            "q → q + 2^(n-1) is a cover",
            &[q.into()],
            covers.contains(&(q, q + half)),
        );
        for s in 1..=half {
            r.holds(
                "order projects",
                &[s.into(), q.into()],
                prev.divides(s, q) == poset.divides(s + half, q + half),
            );
        }
    }
    for p in 2..=size {
        r.holds("2^(n-1) + 1 ◁ p", &[p.into()], poset.divides(half + 1, p));
    }
    if n >= 2 {
        let quarter = size / 4;
        let tail = size - quarter;
        r.case(
            "2^(n-2) ⊳ (2^n - 2^(n-2)) = 2^(n-1)",
            &[quarter.into(), tail.into()],
            half.into(),
            t.op(quarter, tail).into(),
        );
        for p in (1..size).filter(|&p| p != half) {
            r.holds("p ◁ 2^n - 2^(n-2)", &[p.into()], poset.divides(p, tail));
        }
        r.holds("2^n - 2^(n-2) ◁ 2^(n-1)", &[tail.into()], poset.divides(tail, half));
        r.holds("2^(n-1) ◁ 2^n", &[half.into()], poset.divides(half, size));
    }
    Ok(r)
}

/// Congruence on `q` under which `2^n - r` occurs in column `q`, for
/// `r = 1..=8`. Returns `None` outside that range.
pub fn occurrence_constraint(r: u32, q: Element) -> Option<bool> {
    let m8 = q % 8;
    Some(match r {
        1 => q % 2 == 1,
        2 => !q.is_multiple_of(4),
        3 => q % 4 == 1,
        4 => !q.is_multiple_of(8),
        5 => matches!(m8, 1 | 3 | 5),
        6 => matches!(m8, 1 | 2 | 5),
        7 => m8 == 1,
        8 => !q.is_multiple_of(16),
        _ => return None,
    })
}

/// Whether `2^n - r` occurs in column `q` of `A_n` depends only on `q`
/// modulo `2^m` whenever `r < 2^m`. Also checks the congruence table for
/// `r ≤ 8`, and `r = 0` (the value `2^n`, present in every column).
pub fn occurrence_check(nmax: u32, r: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new("occurrences");
    let tables: Vec<LaverTable> = (0..=nmax).map(LaverTable::build).collect::<Result<_>>()?;
    let occurs = |t: &LaverTable, q: Element| -> bool {
        let target = t.size() - r;
        target >= 1 && (1..=t.size()).any(|p| t.op(p, q) == target)
    };
    for t in &tables {
        let n = t.n();
        if r >= t.size() {
            continue;
        }
        for q in 1..=t.size() {
            let here = occurs(t, q);
            for base in &tables[..=n as usize] {
                if r == 0 || r < base.size() {
                    let qb = project(n, base.n(), q)?;
                    report.case(
                        "occurrence projects",
                        &[n.into(), base.n().into(), q.into()],
                        i64::from(occurs(base, qb)),
                        i64::from(here),
                    );
                }
            }
            if r == 0 {
                report.holds("2^n occurs everywhere", &[n.into(), q.into()], here);
            } else if let Some(expected) = occurrence_constraint(r, q) {
                report.case(
                    "congruence table",
                    &[n.into(), q.into()],
                    i64::from(expected),
                    i64::from(here),
                );
            }
        }
    }
    Ok(report)
}

/// `q ⊲̄ r` iff `q ⊳ p = r` for some `p`; exhibits `1 ⊲̄ 2^n ⊲̄ 1` without
/// `1 ⊲̄ 1`, so the relation is not transitive once `n ≥ 1`.
pub fn beforesym_demo(t: &LaverTable) -> CheckReport {
    let size = t.size();
    let rel = |q: Element, r: Element| (1..=size).any(|p| t.op(q, p) == r);
    let mut report = CheckReport::new("beforesym");
    if size == 1 {
        report.holds("1 ⊲̄ 1", &[1, 1], rel(1, 1));
        return report;
    }
    report.holds("1 ⊲̄ 2^n", &[1, size.into()], rel(1, size));
    report.holds("2^n ⊲̄ 1", &[size.into(), 1], rel(size, 1));
    report.holds("not 1 ⊲̄ 1", &[1, 1], !rel(1, 1));
    report
}
