//! The cycle and Petersen inequalities behind the `F_3`, `F_4` and `P*`
//! constructions, evaluated exactly, plus a randomized search for
//! counterexamples that re-checks anything it finds in exact arithmetic.
//!
//! Score functions are written once over [`Field`] and instantiated for both
//! `f64` (search) and [`Rational`] (certification).

use std::ops::{Add, Mul, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::halves::{pstar_layout, PStarLayout};
use crate::rational::{fmt, from_f64_with_denominator, one, rat, to_f64, zero, Rational};

/// Amount by which a floating-point score must exceed its bound before it is
/// re-checked exactly.
pub const FLOAT_MARGIN: f64 = 1e-9;
/// Iteration cap of the alternating projection.
pub const PROJECTION_ITERS: usize = 100;

/// Minimal arithmetic needed by the score functions.
pub trait Field: Clone + PartialOrd + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn ratio(p: i64, q: i64) -> Self;
}

impl Field for f64 {
    fn ratio(p: i64, q: i64) -> Self {
        p as f64 / q as f64
    }
}

impl Field for Rational {
    fn ratio(p: i64, q: i64) -> Self {
        rat(p, q)
    }
}

fn min_of<T: Field>(it: impl Iterator<Item = T>) -> T {
    it.reduce(|a, b| if b < a { b } else { a }).expect("non-empty")
}

fn max_of<T: Field>(it: impl Iterator<Item = T>) -> T {
    it.reduce(|a, b| if b > a { b } else { a }).expect("non-empty")
}

/// `1/2 (1/2 - a)(outer) + 1/4 (1/2 - a)^2`.
fn cycle_term<T: Field>(a: T, outer: T) -> T {
    let h = T::ratio(1, 2) - a;
    T::ratio(1, 2) * h.clone() * outer + T::ratio(1, 4) * h.clone() * h
}

/// Term `i` of the 8-cycle inequality: window `x_i, x_{i+1}, x_{i+2}`.
fn term8<T: Field>(x: &[T], i: usize) -> T {
    let (a, b, c) = (x[i % 8].clone(), x[(i + 1) % 8].clone(), x[(i + 2) % 8].clone());
    cycle_term(a.clone() + b + c.clone(), a + c)
}

/// Term `i` of the 11-cycle inequality: window `x_{i+1}, .., x_{i+4}`.
fn term11<T: Field>(x: &[T], i: usize) -> T {
    let w: Vec<T> = (1..=4).map(|k| x[(i + k) % 11].clone()).collect();
    let total = w[0].clone() + w[1].clone() + w[2].clone() + w[3].clone();
    cycle_term(total, w[0].clone() + w[3].clone())
}

fn petersen_terms<T: Field>(x: &[T], y: &[T], layout: &PStarLayout) -> T {
    layout
        .terms
        .iter()
        .map(|t| {
            let tri = x[t.triple[0]].clone() + x[t.triple[1]].clone() + x[t.triple[2]].clone();
            let quarter = T::ratio(1, 4) * y[t.partner].clone();
            let slack = T::ratio(1, 2) - tri.clone() - y[t.star].clone() - quarter.clone();
            slack * (quarter + T::ratio(1, 3) * tri)
        })
        .reduce(|a, b| a + b)
        .expect("20 terms")
}

fn c5_jensen<T: Field>(x: &[T]) -> T {
    (0..5)
        .map(|i| x[i].clone() * (T::ratio(1, 2) - x[i].clone() - x[(i + 1) % 5].clone()))
        .reduce(|a, b| a + b)
        .expect("five terms")
}

/// Which inequality to evaluate or attack.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    /// Some 8-cycle term is at most 1/50.
    Lemma8,
    /// Some 11-cycle term is at most 1/50.
    Lemma11,
    /// The 20-term `P*` sum is at most 2/5.
    Petersen,
    /// The five `C5` half masses sum to at most 1/10.
    C5Jensen,
    /// An 8-cycle term above 1/50 forces its window below 0.394.
    Claim394,
    /// 8-cycle windows below 0.394 force `(x_i + x_{i+4})/2 >= 0.106`.
    Claim106,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] =
        [LemmaId::Lemma8, LemmaId::Lemma11, LemmaId::Petersen, LemmaId::C5Jensen, LemmaId::Claim394, LemmaId::Claim106];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Lemma8 => "8cycle",
            LemmaId::Lemma11 => "11cycle",
            LemmaId::Petersen => "petersen",
            LemmaId::C5Jensen => "c5jensen",
            LemmaId::Claim394 => "claim394",
            LemmaId::Claim106 => "claim106",
        }
    }

    pub fn from_name(s: &str) -> Option<LemmaId> {
        LemmaId::ALL.into_iter().find(|l| l.name() == s)
    }
}

/// Feasible region: coordinate bounds, `sum = 1`, and optional cyclic
/// window sums of a fixed width bounded below or above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintBox {
    pub lower: Vec<Rational>,
    pub upper: Vec<Rational>,
    pub min_window: Option<(usize, Rational)>,
    pub max_window: Option<(usize, Rational)>,
    /// Windows wrap around the first `cycle` coordinates only.
    pub cycle: usize,
}

impl ConstraintBox {
    fn cyclic(vars: usize, lower: Rational) -> Self {
        ConstraintBox {
            lower: vec![lower; vars],
            upper: vec![one(); vars],
            min_window: None,
            max_window: None,
            cycle: vars,
        }
    }

    /// `1/14 <= x_i`, windows of width 3 at least `5/14`, on 8 variables.
    pub fn lemma8() -> Self {
        ConstraintBox { min_window: Some((3, rat(5, 14))), ..ConstraintBox::cyclic(8, rat(1, 14)) }
    }

    /// `1/14 <= x_i`, windows of width 4 at least `5/14`, on 11 variables.
    pub fn lemma11() -> Self {
        ConstraintBox { min_window: Some((4, rat(5, 14))), ..ConstraintBox::cyclic(11, rat(1, 14)) }
    }

    /// `x_i >= 1/10 - delta` on ten variables, `y_j >= 0` on five more.
    pub fn petersen(delta: &Rational) -> Result<Self> {
        if delta <= &zero() || delta > &rat(1, 90) {
            return Err(Error::ConstraintViolation(format!("delta = {delta} is outside (0, 1/90]")));
        }
        let mut lower = vec![rat(1, 10) - delta; 10];
        lower.extend(vec![zero(); 5]);
        Ok(ConstraintBox { lower, upper: vec![one(); 15], min_window: None, max_window: None, cycle: 10 })
    }

    /// The probability simplex on five variables.
    pub fn simplex5() -> Self {
        ConstraintBox::cyclic(5, zero())
    }

    /// [`ConstraintBox::lemma8`] with every window also at most `0.394`.
    pub fn claim106() -> Self {
        ConstraintBox { max_window: Some((3, rat(394, 1000))), ..ConstraintBox::lemma8() }
    }

    pub fn for_lemma(id: LemmaId) -> Self {
        match id {
            LemmaId::Lemma8 | LemmaId::Claim394 => ConstraintBox::lemma8(),
            LemmaId::Lemma11 => ConstraintBox::lemma11(),
            LemmaId::Petersen => ConstraintBox::petersen(&rat(1, 90)).expect("1/90 is admissible"),
            LemmaId::C5Jensen => ConstraintBox::simplex5(),
            LemmaId::Claim106 => ConstraintBox::claim106(),
        }
    }

    pub fn vars(&self) -> usize {
        self.lower.len()
    }

    fn window_sum<T: Field>(&self, x: &[T], start: usize, width: usize) -> T {
        (0..width).map(|k| x[(start + k) % self.cycle].clone()).reduce(|a, b| a + b).expect("positive width")
    }

    /// First violated constraint at an exact point.
    pub fn violation(&self, x: &[Rational]) -> Option<String> {
        if x.len() != self.vars() {
            return Some(format!("{} coordinates, expected {}", x.len(), self.vars()));
        }
        for (i, v) in x.iter().enumerate() {
            if v < &self.lower[i] || v > &self.upper[i] {
                return Some(format!("coordinate {i} = {v} outside [{}, {}]", self.lower[i], self.upper[i]));
            }
        }
        let total: Rational = x.iter().sum();
        if total != one() {
            return Some(format!("coordinates sum to {total}"));
        }
        for i in 0..self.cycle {
            if let Some((w, m)) = &self.min_window {
                let s = self.window_sum(x, i, *w);
                if &s < m {
                    return Some(format!("window at {i} sums to {s} < {m}"));
                }
            }
            if let Some((w, m)) = &self.max_window {
                let s = self.window_sum(x, i, *w);
                if &s > m {
                    return Some(format!("window at {i} sums to {s} > {m}"));
                }
            }
        }
        None
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.violation(x).is_none()
    }

    fn check(&self, x: &[Rational]) -> Result<()> {
        match self.violation(x) {
            Some(msg) => Err(Error::ConstraintViolation(msg)),
            None => Ok(()),
        }
    }

    /// Every coordinate equal; the petersen box puts all mass on the first ten.
    pub fn uniform_point(&self) -> Vec<Rational> {
        let k = self.cycle;
        (0..self.vars()).map(|i| if i < k { rat(1, k as i64) } else { zero() }).collect()
    }

    fn lower_f64(&self) -> Vec<f64> {
        self.lower.iter().map(to_f64).collect()
    }

    fn upper_f64(&self) -> Vec<f64> {
        self.upper.iter().map(to_f64).collect()
    }

    /// Floating-point feasibility with tolerance `tol`.
    pub fn contains_f64(&self, x: &[f64], tol: f64) -> bool {
        let (lo, hi) = (self.lower_f64(), self.upper_f64());
        if x.iter().enumerate().any(|(i, &v)| v < lo[i] - tol || v > hi[i] + tol) {
            return false;
        }
        if (x.iter().sum::<f64>() - 1.0).abs() > tol {
            return false;
        }
        (0..self.cycle).all(|i| {
            let ok_min = self.min_window.as_ref().is_none_or(|(w, m)| self.window_sum(x, i, *w) >= to_f64(m) - tol);
            let ok_max = self.max_window.as_ref().is_none_or(|(w, m)| self.window_sum(x, i, *w) <= to_f64(m) + tol);
            ok_min && ok_max
        })
    }

    /// Alternating projections onto the box, the windows and the sum
    /// constraint. Returns whether the point ended up feasible.
    pub fn project(&self, x: &mut [f64]) -> bool {
        let (lo, hi) = (self.lower_f64(), self.upper_f64());
        let n = x.len();
        let clamp = |x: &mut [f64]| {
            for i in 0..n {
                x[i] = x[i].clamp(lo[i], hi[i]);
            }
        };
        for _ in 0..PROJECTION_ITERS {
            clamp(x);
            for i in 0..self.cycle {
                if let Some((w, m)) = &self.min_window {
                    let s = self.window_sum(x, i, *w);
                    let m = to_f64(m);
                    if s < m {
                        for k in 0..*w {
                            x[(i + k) % self.cycle] += (m - s) / *w as f64;
                        }
                    }
                }
                if let Some((w, m)) = &self.max_window {
                    let s = self.window_sum(x, i, *w);
                    let m = to_f64(m);
                    if s > m {
                        for k in 0..*w {
                            x[(i + k) % self.cycle] -= (s - m) / *w as f64;
                        }
                    }
                }
            }
            clamp(x);
            let diff = 1.0 - x.iter().sum::<f64>();
            let movable: Vec<usize> =
                (0..n).filter(|&i| if diff > 0.0 { x[i] < hi[i] } else { x[i] > lo[i] }).collect();
            if !movable.is_empty() {
                let share = diff / movable.len() as f64;
                for i in movable {
                    x[i] += share;
                }
            }
            if self.contains_f64(x, 1e-12) {
                return true;
            }
        }
        false
    }
}

fn check_len(x: &[Rational], n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::invalid(format!("expected {n} values, got {}", x.len())));
    }
    Ok(())
}

/// Smallest 8-cycle term at a feasible point.
pub fn lemma8_min_lhs(x: &[Rational]) -> Result<Rational> {
    check_len(x, 8)?;
    ConstraintBox::lemma8().check(x)?;
    Ok(min_of((0..8).map(|i| term8(x, i))))
}

/// Smallest 11-cycle term at a feasible point.
pub fn lemma11_min_lhs(x: &[Rational]) -> Result<Rational> {
    check_len(x, 11)?;
    ConstraintBox::lemma11().check(x)?;
    Ok(min_of((0..11).map(|i| term11(x, i))))
}

/// The 20-term `P*` sum; `x` indexes Petersen vertices, `y` star vertices in
/// extension order.
pub fn petersen_sum(x: &[Rational], y: &[Rational], delta: &Rational) -> Result<Rational> {
    check_len(x, 10)?;
    check_len(y, 5)?;
    let point: Vec<Rational> = x.iter().chain(y).cloned().collect();
    ConstraintBox::petersen(delta)?.check(&point)?;
    Ok(petersen_terms(x, y, &pstar_layout()?))
}

/// Sum of the five `C5` half masses for weights `x` on the simplex.
pub fn c5_jensen_value(x: &[Rational]) -> Result<Rational> {
    check_len(x, 5)?;
    ConstraintBox::simplex5().check(x)?;
    Ok(c5_jensen(x))
}

/// Quantity maximized by the search and the bound it must not exceed.
fn score<T: Field>(id: LemmaId, x: &[T], layout: &PStarLayout) -> T {
    match id {
        LemmaId::Lemma8 => min_of((0..8).map(|i| term8(x, i))),
        LemmaId::Lemma11 => min_of((0..11).map(|i| term11(x, i))),
        LemmaId::Petersen => petersen_terms(&x[..10], &x[10..], layout),
        LemmaId::C5Jensen => c5_jensen(x),
        // Largest window among those whose term exceeds 1/50, else 0.
        LemmaId::Claim394 => max_of((0..8).map(|i| {
            if term8(x, i) > T::ratio(1, 50) {
                x[i].clone() + x[(i + 1) % 8].clone() + x[(i + 2) % 8].clone()
            } else {
                T::ratio(0, 1)
            }
        })),
        // Violated when some z_i drops below 0.106.
        LemmaId::Claim106 => {
            max_of((0..4).map(|i| T::ratio(106, 1000) - T::ratio(1, 2) * (x[i].clone() + x[i + 4].clone())))
        }
    }
}

fn bound(id: LemmaId) -> Rational {
    match id {
        LemmaId::Lemma8 | LemmaId::Lemma11 => rat(1, 50),
        LemmaId::Petersen => rat(2, 5),
        LemmaId::C5Jensen => rat(1, 10),
        LemmaId::Claim394 => rat(394, 1000),
        LemmaId::Claim106 => zero(),
    }
}

/// Claim106 holds with equality on its closed region; only strictly
/// smaller values refute it.
fn exceeds(id: LemmaId, value: &Rational) -> bool {
    match id {
        LemmaId::Claim394 => value >= &bound(id),
        _ => value > &bound(id),
    }
}

/// Grid denominator for exhaustive enumeration, where it is affordable.
fn grid_denominator(id: LemmaId) -> Option<i64> {
    match id {
        LemmaId::Lemma8 | LemmaId::Lemma11 | LemmaId::Claim394 | LemmaId::Claim106 => Some(28),
        LemmaId::C5Jensen => Some(20),
        LemmaId::Petersen => None,
    }
}

/// All points `k / den` of the box with integer `k`.
fn grid_points(bx: &ConstraintBox, den: i64) -> Vec<Vec<Rational>> {
    let n = bx.vars();
    let lo: Vec<i64> = bx
        .lower
        .iter()
        .map(|l| {
            let scaled = l * rat(den, 1);
            scaled.ceil().to_integer().try_into().unwrap_or(0)
        })
        .collect();
    let free = den - lo.iter().sum::<i64>();
    let mut out = Vec::new();
    if free < 0 {
        return out;
    }
    let mut k = vec![0i64; n];
    fn rec(i: usize, left: i64, k: &mut [i64], lo: &[i64], den: i64, bx: &ConstraintBox, out: &mut Vec<Vec<Rational>>) {
        if i + 1 == k.len() {
            k[i] = left;
            let p: Vec<Rational> = k.iter().zip(lo).map(|(a, b)| rat(a + b, den)).collect();
            if bx.contains(&p) {
                out.push(p);
            }
            return;
        }
        for a in 0..=left {
            k[i] = a;
            rec(i + 1, left - a, k, lo, den, bx, out);
        }
    }
    rec(0, free, &mut k, &lo, den, bx, &mut out);
    out
}

/// Outcome of [`falsify`].
#[derive(Clone, Debug, Serialize)]
pub struct FalsifyReport {
    pub lemma: LemmaId,
    pub budget: usize,
    pub seed: u64,
    pub samples: usize,
    pub grid_points: usize,
    pub ascent_starts: usize,
    /// Largest score seen, in floating point.
    pub worst_score: f64,
    pub bound: String,
    pub worst_point: Vec<f64>,
    /// A point refuting the inequality in exact arithmetic.
    pub counterexample: Option<Vec<String>>,
    /// The exact score at `counterexample`.
    pub counterexample_score: Option<String>,
}

impl FalsifyReport {
    pub fn refuted(&self) -> bool {
        self.counterexample.is_some()
    }
}

const CHUNK: usize = 2048;
const ASCENT_STARTS: usize = 24;
const ASCENT_STEPS: usize = 200;

fn sample_point(bx: &ConstraintBox, rng: &mut ChaCha8Rng) -> Option<Vec<f64>> {
    let lo = bx.lower_f64();
    let free = 1.0 - lo.iter().sum::<f64>();
    let e: Vec<f64> = (0..bx.vars()).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let total: f64 = e.iter().sum();
    let mut x: Vec<f64> = lo.iter().zip(&e).map(|(l, v)| l + free * v / total).collect();
    bx.project(&mut x).then_some(x)
}

/// Top `k` by score, ties broken by the earlier point.
fn keep_top(pool: &mut Vec<(f64, usize, Vec<f64>)>, k: usize) {
    pool.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    pool.truncate(k);
}

fn ascend(id: LemmaId, bx: &ConstraintBox, layout: &PStarLayout, start: Vec<f64>) -> (f64, Vec<f64>) {
    let n = start.len();
    let mut x = start;
    let mut best = score(id, &x, layout);
    let mut step = 1e-2;
    let h = 1e-7;
    for _ in 0..ASCENT_STEPS {
        if step < 1e-10 {
            break;
        }
        let grad: Vec<f64> = (0..n)
            .map(|i| {
                let mut y = x.clone();
                y[i] += h;
                (score(id, &y, layout) - best) / h
            })
            .collect();
        // Keep the sum fixed before stepping.
        let mean = grad.iter().sum::<f64>() / n as f64;
        let dir: Vec<f64> = grad.iter().map(|g| g - mean).collect();
        let norm = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
        if norm < 1e-14 {
            break;
        }
        let mut y: Vec<f64> = x.iter().zip(&dir).map(|(a, d)| a + step * d / norm).collect();
        if bx.project(&mut y) {
            let s = score(id, &y, layout);
            if s > best {
                x = y;
                best = s;
                step *= 1.2;
                continue;
            }
        }
        step *= 0.5;
    }
    (best, x)
}

/// Exact rational point near `x` on the sum-one hyperplane.
fn rationalize(x: &[f64]) -> Vec<Rational> {
    let den = 1_000_000_000_000i64;
    let mut p: Vec<Rational> = x.iter().map(|&v| from_f64_with_denominator(v, den)).collect();
    let last = p.len() - 1;
    let others: Rational = p[..last].iter().sum();
    p[last] = one() - others;
    p
}

/// Searches the feasible region of `lemma` for a point breaking its
/// inequality: `budget` random samples, a rational grid where affordable,
/// then projected ascent from the best points. Any floating-point violation
/// is re-evaluated exactly before being reported.
pub fn falsify(lemma: LemmaId, budget: usize, seed: u64) -> Result<FalsifyReport> {
    if budget == 0 {
        return Err(Error::invalid("budget must be positive"));
    }
    let layout = pstar_layout()?;
    let bx = ConstraintBox::for_lemma(lemma);
    let uniform = bx.uniform_point();
    if let Some(msg) = bx.violation(&uniform) {
        return Err(Error::ConstraintViolation(format!("uniform point infeasible: {msg}")));
    }
    let bound_f = to_f64(&bound(lemma));

    let chunks = budget.div_ceil(CHUNK);
    let per_chunk: Vec<Vec<(f64, usize, Vec<f64>)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let count = CHUNK.min(budget - c * CHUNK);
            let mut top = Vec::new();
            for k in 0..count {
                if let Some(x) = sample_point(&bx, &mut rng) {
                    top.push((score(lemma, &x, &layout), c * CHUNK + k, x));
                    if top.len() > 4 * ASCENT_STARTS {
                        keep_top(&mut top, ASCENT_STARTS);
                    }
                }
            }
            keep_top(&mut top, ASCENT_STARTS);
            top
        })
        .collect();
    let mut pool: Vec<(f64, usize, Vec<f64>)> = per_chunk.into_iter().flatten().collect();

    let grid = grid_denominator(lemma).map(|den| grid_points(&bx, den)).unwrap_or_default();
    let grid_count = grid.len();
    let mut exact_hit: Option<(Vec<Rational>, Rational)> = None;
    for (k, p) in grid.into_iter().enumerate() {
        let s = score(lemma, &p, &layout);
        if exact_hit.is_none() && exceeds(lemma, &s) {
            exact_hit = Some((p.clone(), s.clone()));
        }
        pool.push((to_f64(&s), budget + k, p.iter().map(to_f64).collect()));
        if pool.len() > 4 * ASCENT_STARTS {
            keep_top(&mut pool, ASCENT_STARTS);
        }
    }
    pool.push((to_f64(&score(lemma, &uniform, &layout)), usize::MAX, uniform.iter().map(to_f64).collect()));
    keep_top(&mut pool, ASCENT_STARTS);
    let starts = pool.len();

    let ascended: Vec<(f64, usize, Vec<f64>)> = pool
        .into_par_iter()
        .map(|(_, id, x)| {
            let (s, y) = ascend(lemma, &bx, &layout, x);
            (s, id, y)
        })
        .collect();
    let mut ranked = ascended;
    let all = ranked.len();
    keep_top(&mut ranked, all);
    let (worst_score, _, worst_point) = ranked.first().cloned().expect("at least the uniform start");

    if exact_hit.is_none() {
        for (s, _, x) in &ranked {
            if *s <= bound_f + FLOAT_MARGIN && !(lemma == LemmaId::Claim394 && *s >= bound_f) {
                continue;
            }
            let p = rationalize(x);
            if bx.contains(&p) {
                let exact = score(lemma, &p, &layout);
                if exceeds(lemma, &exact) {
                    exact_hit = Some((p, exact));
                    break;
                }
            }
        }
    }

    Ok(FalsifyReport {
        lemma,
        budget,
        seed,
        samples: budget,
        grid_points: grid_count,
        ascent_starts: starts,
        worst_score,
        bound: fmt(&bound(lemma)),
        worst_point,
        counterexample: exact_hit.as_ref().map(|(p, _)| p.iter().map(fmt).collect()),
        counterexample_score: exact_hit.map(|(_, s)| fmt(&s)),
    })
}

/// Exact value of the inequality's left side at the uniform point.
pub fn uniform_value(lemma: LemmaId) -> Result<Rational> {
    let bx = ConstraintBox::for_lemma(lemma);
    Ok(score(lemma, &bx.uniform_point(), &pstar_layout()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fd::make_fd;
    use crate::halves::c5_jensen_sum;
    use crate::weighted::WeightFunction;
    use std::sync::Arc;

    #[test]
    fn uniform_values() {
        assert_eq!(lemma8_min_lhs(&vec![rat(1, 8); 8]).unwrap(), rat(5, 256));
        assert_eq!(lemma11_min_lhs(&vec![rat(1, 11); 11]).unwrap(), rat(33, 1936));
        let s = petersen_sum(&vec![rat(1, 10); 10], &vec![zero(); 5], &rat(1, 90)).unwrap();
        assert_eq!(s, rat(2, 5));
        assert_eq!(uniform_value(LemmaId::Lemma8).unwrap(), rat(5, 256));
        assert_eq!(uniform_value(LemmaId::C5Jensen).unwrap(), rat(1, 10));
    }

    #[test]
    fn padded_lemma8_point_is_infeasible() {
        // Six entries at 1/14 and two antipodal ones sharing the rest: some
        // width-3 window stays at 3/14 < 5/14.
        let mut x = vec![rat(1, 14); 8];
        x[0] = rat(4, 14);
        x[4] = rat(4, 14);
        assert!(matches!(lemma8_min_lhs(&x), Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn lemma8_feasible_nonuniform() {
        let x = vec![rat(2, 14), rat(1, 14), rat(2, 14), rat(2, 14), rat(1, 14), rat(2, 14), rat(2, 14), rat(2, 14)];
        let sum: Rational = x.iter().sum();
        assert_eq!(sum, one());
        assert!(lemma8_min_lhs(&x).unwrap() <= rat(1, 50));
    }

    #[test]
    fn lemma11_rejects_small_entry() {
        let mut x = vec![rat(1, 11); 11];
        x[0] = rat(1, 20);
        x[1] = rat(1, 11) + rat(1, 11) - rat(1, 20);
        assert!(matches!(lemma11_min_lhs(&x), Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn petersen_examples() {
        let x = vec![rat(1, 10) - rat(1, 1000); 10];
        let y = vec![rat(1, 500); 5];
        let s = petersen_sum(&x, &y, &rat(1, 90)).unwrap();
        assert!(s < rat(2, 5));
        let r = petersen_sum(&vec![rat(1, 10); 10], &vec![zero(); 5], &rat(1, 50));
        assert!(matches!(r, Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn jensen_identity_matches_direct_sum() {
        let ws = [
            vec![rat(1, 5); 5],
            vec![rat(1, 2), rat(1, 8), rat(1, 8), rat(1, 8), rat(1, 8)],
            vec![rat(3, 10), rat(1, 10), rat(1, 5), rat(1, 5), rat(1, 5)],
        ];
        for w in ws {
            let wf = Arc::new(WeightFunction::new(make_fd(2).unwrap(), w.clone()).unwrap());
            let direct = c5_jensen_sum(&wf).unwrap();
            let closed: Rational = rat(1, 2)
                - rat(1, 2) * (0..5).map(|i| crate::rational::sq(&(&w[i] + &w[(i + 1) % 5]))).sum::<Rational>();
            assert_eq!(direct, closed);
            assert_eq!(c5_jensen_value(&w).unwrap(), direct);
            assert!(direct <= rat(1, 10));
        }
    }

    #[test]
    fn projection_lands_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for id in LemmaId::ALL {
            let bx = ConstraintBox::for_lemma(id);
            for _ in 0..200 {
                let mut x: Vec<f64> = (0..bx.vars()).map(|_| rng.gen::<f64>() / bx.vars() as f64 * 2.0).collect();
                if bx.project(&mut x) {
                    assert!(bx.contains_f64(&x, 1e-9));
                }
            }
        }
    }

    #[test]
    fn grids_are_feasible() {
        let g = grid_points(&ConstraintBox::lemma11(), 28);
        assert!(!g.is_empty());
        assert!(g.iter().all(|p| ConstraintBox::lemma11().contains(p)));
    }

    #[test]
    fn small_falsify_runs_find_nothing() {
        for id in LemmaId::ALL {
            let r = falsify(id, 3000, 42).unwrap();
            assert!(!r.refuted(), "{id:?}: {r:?}");
        }
    }

    #[test]
    fn falsify_is_deterministic() {
        let a = falsify(LemmaId::Petersen, 5000, 9).unwrap();
        let b = falsify(LemmaId::Petersen, 5000, 9).unwrap();
        assert_eq!(a.worst_point, b.worst_point);
        assert_eq!(a.worst_score, b.worst_score);
    }
}
