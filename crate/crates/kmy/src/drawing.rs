//! Standardized drawings and the crossing-label height estimator.
//!
//! The drawing puts top arcs, the propagating permutation, and bottom arcs
//! into three horizontal bands:
//!
//! * arcs are drawn with a single turning point, at a depth that grows with
//!   the span, so nested arcs never intersect and top arcs never meet
//!   bottom arcs;
//! * propagating lines run vertically through the arc bands and realise
//!   their permutation as a bubble-sort wiring diagram in the middle band,
//!   one adjacent swap per step.
//!
//! Crossings then occur exactly when the combinatorics force them: two
//! propagating lines cross iff their endpoint order reverses, a propagating
//! line crosses a same-side arc iff its endpoint lies strictly between the
//! arc's endpoints, and two same-side arcs cross iff their endpoints
//! interleave. Each crossing is labelled with the number of curves hit by a
//! horizontal ray running to the left frame edge (the smaller of the two
//! counts just above and just below the crossing). The label is an upper
//! bound for the alcove number of the crossing, so the maximum label bounds
//! the diagram height from above.

use num::Zero;

use crate::diagram::Diagram;
use crate::ring::{rat, rat_int, Rational};

/// One arc in a band; 1-based positions, `a < b`. The arc's level (depth)
/// is its index + 1 in the band's arc list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcCurve {
    pub a: usize,
    pub b: usize,
}

impl ArcCurve {
    fn covers(&self, x: usize) -> bool {
        self.a < x && x < self.b
    }

    fn interleaves(&self, other: &ArcCurve) -> bool {
        (self.a < other.a && other.a < self.b && self.b < other.b)
            || (other.a < self.a && self.a < other.b && other.b < self.b)
    }
}

/// A propagating line; 1-based top and bottom positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropCurve {
    pub top: usize,
    pub bottom: usize,
}

/// One adjacent transposition of the bubble-sort wiring; `lane` is the
/// 1-based left lane of the swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Swap {
    pub lane: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Band {
    Top,
    Bottom,
}

/// What crosses what. Indices refer to the owning `Drawing`'s curve lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingKind {
    /// Swap `step` (0-based into `swaps`) of two propagating lines.
    PropProp { step: usize, lane: usize },
    /// Propagating line `prop` through arc `arc` of `band`.
    PropArc { band: Band, prop: usize, arc: usize },
    /// Interleaving arcs of one band; `shallow` has the smaller level.
    ArcArc { band: Band, shallow: usize, deep: usize },
}

#[derive(Debug, Clone)]
pub struct Crossing {
    pub kind: CrossingKind,
    /// Sheared horizontal position; distinct across the drawing.
    pub x: Rational,
    pub y: Rational,
    pub label: i64,
}

/// The standardized drawing of a diagram.
#[derive(Debug, Clone)]
pub struct Drawing {
    pub diagram: Diagram,
    /// Top arcs by increasing depth (span-ascending order).
    pub top_arcs: Vec<ArcCurve>,
    /// Bottom arcs by increasing depth.
    pub bottom_arcs: Vec<ArcCurve>,
    /// Propagating lines sorted by top position.
    pub props: Vec<PropCurve>,
    /// Bubble-sort swaps realising the propagating permutation.
    pub swaps: Vec<Swap>,
    /// All crossings, sorted by `x`.
    pub crossings: Vec<Crossing>,
}

impl Drawing {
    /// Maximum crossing label; -1 when the drawing has no crossings.
    pub fn max_label(&self) -> i64 {
        self.crossings.iter().map(|c| c.label).max().unwrap_or(-1)
    }

    /// Number of crossings labelled exactly `l`.
    pub fn feature_count(&self, l: i64) -> usize {
        self.crossings.iter().filter(|c| c.label == l).count()
    }

    /// The leftmost crossing labelled `l`, if any.
    pub fn leftmost_feature(&self, l: i64) -> Option<&Crossing> {
        self.crossings.iter().find(|c| c.label == l)
    }
}

/// Arcs of one row, sorted by right endpoint: the drawing depth of an arc
/// is its position in this list. A contained arc closes earlier than its
/// container, so containment nests, and of two interleaving arcs the one
/// reaching further right is drawn deeper, which puts their crossing at
/// the deeper arc's left foot -- as far left as it can go.
fn band_arcs(pairs: &[(usize, usize)]) -> Vec<ArcCurve> {
    let mut arcs: Vec<ArcCurve> = pairs.iter().map(|&(a, b)| ArcCurve { a, b }).collect();
    arcs.sort_by_key(|arc| arc.b);
    arcs
}

/// Ray count just below a crossing on `arc_level` of a band at position
/// `x0`: propagating lines strictly left of `x0` plus legs of strictly
/// deeper arcs strictly left of `x0`. This equals the smaller of the two
/// perturbed horizontal ray counts for every band crossing.
fn band_label(arcs: &[ArcCurve], prop_positions: &[usize], arc_level: usize, x0: usize) -> i64 {
    let props_left = prop_positions.iter().filter(|&&t| t < x0).count();
    let legs_left: usize = arcs
        .iter()
        .enumerate()
        .filter(|(idx, _)| idx + 1 > arc_level)
        .map(|(_, arc)| usize::from(arc.a < x0) + usize::from(arc.b < x0))
        .sum();
    (props_left + legs_left) as i64
}

struct RawCrossing {
    kind: CrossingKind,
    x: Rational,
    y: Rational,
    label: i64,
}

fn band_crossings(
    band: Band,
    arcs: &[ArcCurve],
    prop_positions: &[usize],
    y_of_level: &dyn Fn(usize) -> Rational,
    out: &mut Vec<RawCrossing>,
) {
    for (ai, arc) in arcs.iter().enumerate() {
        let level = ai + 1;
        for (pi, &t) in prop_positions.iter().enumerate() {
            if arc.covers(t) {
                out.push(RawCrossing {
                    kind: CrossingKind::PropArc { band, prop: pi, arc: ai },
                    x: rat_int(t as i64),
                    y: y_of_level(level),
                    label: band_label(arcs, prop_positions, level, t),
                });
            }
        }
        for (bi, other) in arcs.iter().enumerate().skip(ai + 1) {
            if arc.interleaves(other) {
                // `other` is deeper; the crossing sits at its endpoint
                // inside `arc`'s span, on `arc`'s level.
                let x0 = if arc.covers(other.a) { other.a } else { other.b };
                debug_assert!(arc.covers(x0));
                out.push(RawCrossing {
                    kind: CrossingKind::ArcArc { band, shallow: ai, deep: bi },
                    x: rat_int(x0 as i64),
                    y: y_of_level(level),
                    label: band_label(arcs, prop_positions, level, x0),
                });
            }
        }
    }
}

/// Builds the standardized drawing of `d`.
pub fn standardise(d: &Diagram) -> Drawing {
    let n = d.n();
    let mut top_pairs = Vec::new();
    let mut bottom_pairs = Vec::new();
    let mut props = Vec::new();
    for (a, b) in d.pairs() {
        if b < n {
            top_pairs.push((a + 1, b + 1));
        } else if a >= n {
            bottom_pairs.push((a - n + 1, b - n + 1));
        } else {
            props.push(PropCurve { top: a + 1, bottom: b - n + 1 });
        }
    }
    let top_arcs = band_arcs(&top_pairs);
    let bottom_arcs = band_arcs(&bottom_pairs);
    props.sort_by_key(|p| p.top);

    // Exit ranks: position of each wire's bottom among all bottoms.
    let m = props.len();
    let mut bottoms: Vec<usize> = props.iter().map(|p| p.bottom).collect();
    bottoms.sort_unstable();
    let exit_rank: Vec<usize> =
        props.iter().map(|p| bottoms.binary_search(&p.bottom).unwrap()).collect();

    // Bubble-sort wiring of the middle band.
    let mut lanes: Vec<usize> = (0..m).collect(); // lane -> wire
    let mut swaps = Vec::new();
    loop {
        let mut swapped = false;
        for p in 0..m.saturating_sub(1) {
            if exit_rank[lanes[p]] > exit_rank[lanes[p + 1]] {
                lanes.swap(p, p + 1);
                swaps.push(Swap { lane: p + 1 });
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }

    let kt = top_arcs.len() as i64;
    let s_total = swaps.len() as i64;
    let jb = bottom_arcs.len() as i64;

    let mut raw = Vec::new();
    let top_props: Vec<usize> = props.iter().map(|p| p.top).collect();
    let bottom_props: Vec<usize> = props.iter().map(|p| p.bottom).collect();
    band_crossings(Band::Top, &top_arcs, &top_props, &|level| rat_int(level as i64), &mut raw);
    band_crossings(
        Band::Bottom,
        &bottom_arcs,
        &bottom_props,
        &|level| rat_int(kt + s_total + 1 + (jb - level as i64)),
        &mut raw,
    );
    for (step, swap) in swaps.iter().enumerate() {
        raw.push(RawCrossing {
            kind: CrossingKind::PropProp { step, lane: swap.lane },
            x: rat_int(swap.lane as i64) + rat(1, 2),
            y: rat_int(kt + 1 + step as i64),
            label: swap.lane as i64 - 1,
        });
    }

    // Shear x by a multiple of y small enough to keep distinct raw x values
    // ordered; crossings sharing a raw x then separate by their y.
    let mut xs: Vec<Rational> = raw.iter().map(|c| c.x.clone()).collect();
    xs.sort();
    xs.dedup();
    let min_gap = xs.windows(2).map(|w| &w[1] - &w[0]).min();
    let max_y = raw.iter().map(|c| c.y.clone()).max().unwrap_or_else(Rational::zero);
    let eps = match min_gap {
        Some(g) => g / ((max_y.clone() + rat_int(1)) * rat_int(2)),
        None => (max_y + rat_int(1)).recip(),
    };
    let mut crossings: Vec<Crossing> = raw
        .into_iter()
        .map(|c| Crossing { x: &c.x + &eps * &c.y, y: c.y, kind: c.kind, label: c.label })
        .collect();
    crossings.sort_by(|a, b| a.x.cmp(&b.x));
    debug_assert!(
        crossings.windows(2).all(|w| w[0].x != w[1].x),
        "crossings must have distinct x positions"
    );

    Drawing { diagram: d.clone(), top_arcs, bottom_arcs, props, swaps, crossings }
}
