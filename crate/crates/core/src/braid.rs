//! Colorings of positive braid diagrams by `A_n` and the invariants obtained
//! by summing a cocycle over the crossings.
//!
//! Strand positions are 1-based from the bottom. A crossing `σ_i` has lower
//! input `a` at position `i` and upper input `b` at position `i + 1`; it
//! writes `a ⊳ b` to position `i` and `a` to position `i + 1`, with weight
//! `φ(a, b)`, or `φ(a, b, u)` where `u` colors the region above the crossing.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cochain::Cochain;
use crate::complex::cocycle_defect;
use crate::error::{LaverError, Result};
use crate::report::CheckReport;
use crate::table::{Element, LaverTable, Magma};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands == 0 {
            return Err(LaverError::Parse("a braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(LaverError::Parse(format!(
                "generator {bad} out of range for {strands} strands"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Every word reachable by one braid-relation or far-commutation move,
    /// tagged with the position of the move.
    pub fn rewrites(&self) -> Vec<(Rewrite, BraidWord)> {
        let w = &self.letters;
        let mut out = Vec::new();
        for j in 0..w.len() {
            if j + 1 < w.len() && w[j].abs_diff(w[j + 1]) >= 2 {
                let mut v = w.clone();
                v.swap(j, j + 1);
                out.push((Rewrite::FarCommutation(j), self.with_letters(v)));
            }
            if j + 2 < w.len() && w[j] == w[j + 2] && w[j].abs_diff(w[j + 1]) == 1 {
                let mut v = w.clone();
                v[j] = w[j + 1];
                v[j + 1] = w[j];
                v[j + 2] = w[j + 1];
                out.push((Rewrite::BraidRelation(j), self.with_letters(v)));
            }
        }
        out
    }

    fn with_letters(&self, letters: Vec<usize>) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// A single positional move; the index is the 0-based offset of the first
/// affected letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rewrite {
    BraidRelation(usize),
    FarCommutation(usize),
}

impl Rewrite {
    fn law(self) -> &'static str {
        match self {
            Rewrite::BraidRelation(_) => "braid relation",
            Rewrite::FarCommutation(_) => "far commutation",
        }
    }

    fn position(self) -> usize {
        match self {
            Rewrite::BraidRelation(j) | Rewrite::FarCommutation(j) => j,
        }
    }
}

pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord> {
    let letters = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| LaverError::Parse(format!("not a generator index: {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub position: usize,
    pub lower: Element,
    pub upper: Element,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region: Option<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringTrace {
    pub initial: Vec<Element>,
    pub crossings: Vec<Crossing>,
    pub final_colors: Vec<Element>,
}

fn check_colors(t: &LaverTable, w: &BraidWord, colors: &[Element]) -> Result<()> {
    if colors.len() != w.strands {
        return Err(LaverError::Domain(format!(
            "{} colors for a {}-strand braid",
            colors.len(),
            w.strands
        )));
    }
    if let Some(&bad) = colors.iter().find(|&&c| !t.contains(c)) {
        return Err(LaverError::Domain(format!("{bad} is not an element of A_{}", t.n())));
    }
    Ok(())
}

/// Color of the region just above position `i` (1-based), given the top
/// region color `d`.
fn region_above<M: Magma>(m: &M, colors: &[Element], i: usize, d: Element) -> Element {
    colors[i..].iter().rev().fold(d, |u, &s| m.op(s, u))
}

/// Walks the word, calling `visit(position, a, b, colors)` before each
/// crossing mutates `colors`.
fn propagate<M: Magma>(
    m: &M,
    letters: &[usize],
    colors: &mut [Element],
    mut visit: impl FnMut(usize, Element, Element, &[Element]),
) {
    for &i in letters {
        let (a, b) = (colors[i - 1], colors[i]);
        visit(i, a, b, colors);
        colors[i - 1] = m.op(a, b);
        colors[i] = a;
    }
}

pub fn color_propagate(t: &LaverTable, w: &BraidWord, colors: &[Element]) -> Result<ColoringTrace> {
    trace_with(t, w, colors, None)
}

/// Like [`color_propagate`], also recording the region above each crossing
/// when the top region is colored `d`.
pub fn color_propagate_shadow(t: &LaverTable, w: &BraidWord, colors: &[Element], d: Element) -> Result<ColoringTrace> {
    if !t.contains(d) {
        return Err(LaverError::Domain(format!("{d} is not an element of A_{}", t.n())));
    }
    trace_with(t, w, colors, Some(d))
}

fn trace_with(t: &LaverTable, w: &BraidWord, colors: &[Element], d: Option<Element>) -> Result<ColoringTrace> {
    check_colors(t, w, colors)?;
    let mut state = colors.to_vec();
    let mut crossings = Vec::with_capacity(w.len());
    propagate(t, &w.letters, &mut state, |i, a, b, c| {
        crossings.push(Crossing {
            position: i,
            lower: a,
            upper: b,
            region: d.map(|d| region_above(t, c, i + 1, d)),
        })
    });
    Ok(ColoringTrace {
        initial: colors.to_vec(),
        crossings,
        final_colors: state,
    })
}

/// Region colors from the bottom up: entry `i` lies below strand `i + 1`,
/// and the last entry is the top region `d`.
pub fn region_colors(t: &LaverTable, strands: &[Element], d: Element) -> Result<Vec<Element>> {
    if let Some(&bad) = strands.iter().chain([&d]).find(|&&c| !t.contains(c)) {
        return Err(LaverError::Domain(format!("{bad} is not an element of A_{}", t.n())));
    }
    let mut out = vec![d; strands.len() + 1];
    for i in (0..strands.len()).rev() {
        out[i] = t.op(strands[i], out[i + 1]);
    }
    Ok(out)
}

fn require_cocycle(t: &LaverTable, phi: &Cochain, k: u32) -> Result<()> {
    if phi.arity() != k {
        return Err(LaverError::Arity {
            expected: k as usize,
            actual: phi.arity() as usize,
        });
    }
    if phi.n() != t.n() {
        return Err(LaverError::Domain(format!(
            "cochain on A_{} used with A_{}",
            phi.n(),
            t.n()
        )));
    }
    if let Some((tuple, value)) = cocycle_defect(t, phi)? {
        return Err(LaverError::Contract(format!("not a cocycle: δφ{tuple:?} = {value}")));
    }
    Ok(())
}

/// `Σ φ(a_i, b_i)` over the crossings; `φ` must be a 2-cocycle.
pub fn invariant2(t: &LaverTable, w: &BraidWord, colors: &[Element], phi: &Cochain) -> Result<i64> {
    require_cocycle(t, phi, 2)?;
    check_colors(t, w, colors)?;
    Ok(arc_sums(t, w, colors.to_vec(), std::slice::from_ref(phi)).1[0])
}

/// `Σ φ(a_i, b_i, u_i)` with `u_i` the region above crossing `i`; `φ` must be
/// a 3-cocycle.
pub fn invariant3(t: &LaverTable, w: &BraidWord, colors: &[Element], d: Element, phi: &Cochain) -> Result<i64> {
    require_cocycle(t, phi, 3)?;
    check_colors(t, w, colors)?;
    if !t.contains(d) {
        return Err(LaverError::Domain(format!("{d} is not an element of A_{}", t.n())));
    }
    Ok(shadow_sums(t, w, colors.to_vec(), d, std::slice::from_ref(phi)).1[0])
}

fn arc_sums<M: Magma>(m: &M, w: &BraidWord, mut colors: Vec<Element>, phis: &[Cochain]) -> (Vec<Element>, Vec<i64>) {
    let mut sums = vec![0; phis.len()];
    propagate(m, &w.letters, &mut colors, |_, a, b, _| {
        for (s, phi) in sums.iter_mut().zip(phis) {
            *s += phi.at(&[a, b]);
        }
    });
    (colors, sums)
}

fn shadow_sums<M: Magma>(
    m: &M,
    w: &BraidWord,
    mut colors: Vec<Element>,
    d: Element,
    phis: &[Cochain],
) -> (Vec<Element>, Vec<i64>) {
    let mut sums = vec![0; phis.len()];
    propagate(m, &w.letters, &mut colors, |i, a, b, c| {
        let u = region_above(m, c, i + 1, d);
        for (s, phi) in sums.iter_mut().zip(phis) {
            *s += phi.at(&[a, b, u]);
        }
    });
    (colors, sums)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// 2-cochains weighted by the arc colors.
    Arc,
    /// 3-cochains weighted by arc and region colors, for every top color.
    Shadow,
}

impl Mode {
    fn arity(self) -> u32 {
        match self {
            Mode::Arc => 2,
            Mode::Shadow => 3,
        }
    }
}

/// Which initial colorings a rewrite check visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoringBudget {
    /// All colorings are tried while `n · strands` stays within this.
    pub max_exhaustive_bits: u32,
    /// Number of uniform samples otherwise.
    pub sample: usize,
    pub seed: u64,
}

impl Default for ColoringBudget {
    fn default() -> Self {
        ColoringBudget {
            max_exhaustive_bits: 16,
            sample: 1 << 12,
            seed: 0xb7a1d,
        }
    }
}

fn colorings(n: u32, strands: usize, budget: &ColoringBudget) -> Vec<Vec<Element>> {
    let bits = n as usize * strands;
    let size = 1u32 << n;
    if bits <= budget.max_exhaustive_bits as usize {
        let mask = (1usize << n) - 1;
        (0..1usize << bits)
            .map(|index| {
                (0..strands)
                    .map(|s| ((index >> (s * n as usize)) & mask) as Element + 1)
                    .collect()
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        (0..budget.sample)
            .map(|_| (0..strands).map(|_| rng.gen_range(1..=size)).collect())
            .collect()
    }
}

pub fn rewrite_check(t: &LaverTable, w: &BraidWord, mode: Mode, phi: &Cochain) -> Result<CheckReport> {
    rewrite_check_many(t, w, mode, std::slice::from_ref(phi), &ColoringBudget::default())
}

/// Compares `w` with each of its one-move rewrites: final colors and the
/// invariant of every cochain in `phis` must agree on every visited
/// coloring (and every top color in shadow mode).
///
/// Cochains are evaluated without a cocycle check, so a non-cocycle shows up
/// as failures rather than an error.
pub fn rewrite_check_many(
    t: &LaverTable,
    w: &BraidWord,
    mode: Mode,
    phis: &[Cochain],
    budget: &ColoringBudget,
) -> Result<CheckReport> {
    for phi in phis {
        if phi.arity() != mode.arity() {
            return Err(LaverError::Arity {
                expected: mode.arity() as usize,
                actual: phi.arity() as usize,
            });
        }
        if phi.n() != t.n() {
            return Err(LaverError::Domain(format!(
                "cochain on A_{} used with A_{}",
                phi.n(),
                t.n()
            )));
        }
    }
    let rewrites = w.rewrites();
    let tops: Vec<Option<Element>> = match mode {
        Mode::Arc => vec![None],
        Mode::Shadow => (1..=t.size()).map(Some).collect(),
    };
    let eval = |word: &BraidWord, colors: &[Element], d: Option<Element>| match d {
        None => arc_sums(t, word, colors.to_vec(), phis),
        Some(d) => shadow_sums(t, word, colors.to_vec(), d, phis),
    };
    let report = colorings(t.n(), w.strands, budget)
        .par_iter()
        .enumerate()
        .map(|(ci, colors)| {
            let mut r = CheckReport::new("braid-rewrites");
            for &d in &tops {
                let (final0, sums0) = eval(w, colors, d);
                for (rw, other) in &rewrites {
                    let (final1, sums1) = eval(other, colors, d);
                    let input = [rw.position() as i64, ci as i64, d.map_or(0, i64::from)];
                    r.holds(&format!("{}: final colors", rw.law()), &input, final0 == final1);
                    for (j, (a, b)) in sums0.iter().zip(&sums1).enumerate() {
                        let input = [input[0], input[1], input[2], j as i64];
                        r.case(&format!("{}: invariant", rw.law()), &input, *a, *b);
                    }
                }
            }
            r
        })
        .reduce(|| CheckReport::new("braid-rewrites"), CheckReport::merge);
    Ok(report)
}
