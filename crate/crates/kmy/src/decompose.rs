//! Decomposition of diagrams into words in the generators u_i, s_m.
//!
//! Two independent routes are provided. `decompose_search` is a
//! breadth-first oracle over the closure basis, returning a shortest word.
//! `decompose_constructive` follows the standardized drawing: it repeatedly
//! extracts the leftmost crossing of maximal label L as an s_{L+1} layer
//! between two diagrams with strictly smaller (L, count) measure, and
//! resolves the planar base case by peeling cap generators off a normal
//! form. Every split and the final word are re-evaluated before being
//! returned.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::diagram::Diagram;
use crate::drawing::{standardise, Band, Crossing, CrossingKind, Drawing};
use crate::error::{KmyError, Result};
use crate::height::{check_height_bound, generator_ids, height_exact, GeneratorId};

/// A word in the generators, read left to right as top-to-bottom stacking,
/// together with the delta exponent its evaluation produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    pub n: usize,
    pub l: i64,
    pub tokens: Vec<GeneratorId>,
    pub delta_exponent: i64,
}

impl GeneratorWord {
    pub fn new(n: usize, l: i64, tokens: Vec<GeneratorId>) -> Result<Self> {
        check_height_bound(n, l)?;
        for t in &tokens {
            match *t {
                GeneratorId::U(i) if i >= 1 && i < n => {}
                GeneratorId::S(m) if m >= 1 && (m as i64) <= l + 1 && m < n => {}
                _ => {
                    return Err(KmyError::ParseError(format!(
                        "token {t} invalid for (n, l) = ({n}, {l})"
                    )))
                }
            }
        }
        let mut word = GeneratorWord { n, l, tokens, delta_exponent: 0 };
        let (k, _) = word.evaluate()?;
        word.delta_exponent = k;
        Ok(word)
    }

    /// Folds the stacking product over the tokens, starting from the
    /// identity: returns the accumulated delta exponent and the product
    /// diagram.
    pub fn evaluate(&self) -> Result<(i64, Diagram)> {
        evaluate_tokens(self.n, &self.tokens)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Parses the word grammar: whitespace-separated `u<i>` / `s<m>` tokens
    /// with an optional `d^<k>` prefix; `1` denotes the empty word.
    pub fn parse(n: usize, l: i64, s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        let mut claimed_exponent: Option<i64> = None;
        for (idx, tok) in s.split_whitespace().enumerate() {
            if let Some(k) = tok.strip_prefix("d^") {
                if idx != 0 {
                    return Err(KmyError::ParseError("d^ prefix must come first".into()));
                }
                claimed_exponent = Some(
                    k.parse().map_err(|_| KmyError::ParseError(format!("bad exponent `{tok}`")))?,
                );
                continue;
            }
            if tok == "1" {
                continue;
            }
            let (kind, num) = tok.split_at(1);
            let idx: usize = num
                .parse()
                .map_err(|_| KmyError::ParseError(format!("bad token `{tok}`")))?;
            match kind {
                "u" => tokens.push(GeneratorId::U(idx)),
                "s" => tokens.push(GeneratorId::S(idx)),
                _ => return Err(KmyError::ParseError(format!("bad token `{tok}`"))),
            }
        }
        let word = GeneratorWord::new(n, l, tokens)?;
        if let Some(k) = claimed_exponent {
            if k != word.delta_exponent {
                return Err(KmyError::ParseError(format!(
                    "word evaluates to delta^{}, not delta^{k}",
                    word.delta_exponent
                )));
            }
        }
        Ok(word)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.delta_exponent != 0 {
            parts.push(format!("d^{}", self.delta_exponent));
        }
        if self.tokens.is_empty() {
            parts.push("1".into());
        } else {
            parts.extend(self.tokens.iter().map(|t| t.to_string()));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Evaluates a token slice from the identity diagram.
pub fn evaluate_tokens(n: usize, tokens: &[GeneratorId]) -> Result<(i64, Diagram)> {
    let mut exponent = 0i64;
    let mut cur = Diagram::identity(n);
    for t in tokens {
        let (loops, prod) = cur.multiply(&t.diagram(n))?;
        exponent += loops as i64;
        cur = prod;
    }
    Ok((exponent, cur))
}

struct BfsTree {
    index: HashMap<Diagram, usize>,
    parent: Vec<Option<(usize, GeneratorId, u32)>>,
}

fn bfs_cache() -> &'static Mutex<HashMap<(usize, i64), Arc<BfsTree>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, i64), Arc<BfsTree>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn bfs_tree(n: usize, l: i64) -> Result<Arc<BfsTree>> {
    if let Some(hit) = bfs_cache().lock().unwrap().get(&(n, l)) {
        return Ok(hit.clone());
    }
    let gens = generator_ids(n, l)?;
    let mut order = vec![Diagram::identity(n)];
    let mut index = HashMap::new();
    index.insert(Diagram::identity(n), 0usize);
    let mut parent: Vec<Option<(usize, GeneratorId, u32)>> = vec![None];
    let mut head = 0;
    while head < order.len() {
        let d = order[head].clone();
        for &g in &gens {
            let (loops, prod) = d.multiply(&g.diagram(n))?;
            if !index.contains_key(&prod) {
                index.insert(prod.clone(), order.len());
                order.push(prod);
                parent.push(Some((head, g, loops)));
            }
        }
        head += 1;
    }
    let tree = Arc::new(BfsTree { index, parent });
    bfs_cache().lock().unwrap().insert((n, l), tree.clone());
    Ok(tree)
}

/// Shortest generator word for `d` by breadth-first search from the
/// identity (right multiplication), with the delta exponent taken from the
/// search path.
pub fn decompose_search(d: &Diagram, l: i64) -> Result<GeneratorWord> {
    let n = d.n();
    check_height_bound(n, l)?;
    let h = height_exact(d);
    if h > l {
        return Err(KmyError::NotInAlgebra { height: h, l });
    }
    let tree = bfs_tree(n, l)?;
    let mut at = *tree.index.get(d).ok_or(KmyError::NotInAlgebra { height: h, l })?;
    let mut tokens = Vec::new();
    let mut exponent = 0i64;
    while let Some((prev, g, loops)) = tree.parent[at] {
        tokens.push(g);
        exponent += loops as i64;
        at = prev;
    }
    tokens.reverse();
    let word = GeneratorWord { n, l, tokens, delta_exponent: exponent };
    debug_assert_eq!(word.evaluate()?, (exponent, d.clone()));
    Ok(word)
}

// ---------------------------------------------------------------------------
// constructive route
// ---------------------------------------------------------------------------

/// Spread measure for the planar peeling: sum over pairs of the distance
/// between endpoints. Zero exactly on the identity.
fn spread(d: &Diagram) -> usize {
    let n = d.n();
    d.pairs()
        .into_iter()
        .map(|(a, b)| {
            let same_row = b < n || a >= n;
            if same_row {
                b - a
            } else {
                (b - n).abs_diff(a)
            }
        })
        .sum()
}

/// One left peel of a planar diagram: find a cap index i and a planar `c`
/// with `u_i * c = d` (no loops) and smaller spread.
fn peel_left(d: &Diagram) -> Option<(usize, Diagram)> {
    let n = d.n();
    let mu = spread(d);
    let pairs = d.pairs();
    for i in 0..n - 1 {
        // adjacent top arc at positions (i, i+1)?
        if d.partner(i) != i + 1 {
            continue;
        }
        for &(p, q) in &pairs {
            if (p, q) == (i, i + 1) {
                continue;
            }
            for (first, second) in [(p, q), (q, p)] {
                let mut new_pairs: Vec<(usize, usize)> = pairs
                    .iter()
                    .copied()
                    .filter(|&pair| pair != (i, i + 1) && pair != (p, q))
                    .collect();
                new_pairs.push((i, first));
                new_pairs.push((i + 1, second));
                let Ok(c) = Diagram::new(n, &new_pairs) else { continue };
                if c.is_planar() && spread(&c) < mu {
                    debug_assert_eq!(
                        Diagram::u(n, i + 1).multiply(&c).unwrap(),
                        (0, d.clone())
                    );
                    return Some((i + 1, c));
                }
            }
        }
    }
    None
}

/// Cap-generator word for a planar diagram, peeling from the top and, if
/// ever needed, from the bottom.
fn planar_word(d: &Diagram) -> Result<Vec<GeneratorId>> {
    let n = d.n();
    let identity = Diagram::identity(n);
    let mut prefix = Vec::new();
    let mut suffix = Vec::new();
    let mut cur = d.clone();
    while cur != identity {
        if let Some((i, c)) = peel_left(&cur) {
            prefix.push(GeneratorId::U(i));
            cur = c;
            continue;
        }
        if let Some((j, c)) = peel_left(&cur.flip()) {
            suffix.push(GeneratorId::U(j));
            cur = c.flip();
            continue;
        }
        return Err(KmyError::InternalVerificationFailed(format!(
            "planar peeling stuck at {cur}"
        )));
    }
    prefix.extend(suffix.into_iter().rev());
    Ok(prefix)
}

/// Measure used by the split recursion: (max label, crossings at that
/// label); the planar case compares below everything.
fn measure(drawing: &Drawing) -> (i64, usize) {
    let max = drawing.max_label();
    if max < 0 {
        (-1, 0)
    } else {
        (max, drawing.feature_count(max))
    }
}

/// The middle-band data of a drawing: wires sorted by top position with
/// their exit ranks.
struct Wires {
    tops: Vec<usize>,    // 0-based top positions, ascending
    bottoms: Vec<usize>, // 0-based bottom positions, wire order
}

fn wires_of(drawing: &Drawing) -> Wires {
    Wires {
        tops: drawing.props.iter().map(|p| p.top - 1).collect(),
        bottoms: drawing.props.iter().map(|p| p.bottom - 1).collect(),
    }
}

/// Bottom padding of d1 and matching offset top padding of d2, threaded
/// through the rightmost strand so that re-stacking closes no loops: d1
/// exits `c` strands at positions 0..c plus nested caps to the right; d2
/// receives them at 0..c-1 and n-1, with its own caps shifted by one.
struct Padding {
    c: usize,
    n: usize,
}

impl Padding {
    fn d1_arcs(&self) -> Vec<(usize, usize)> {
        (self.c..self.n).step_by(2).map(|a| (a, a + 1)).collect()
    }

    fn d2_arcs(&self) -> Vec<(usize, usize)> {
        if self.c == self.n {
            return Vec::new();
        }
        (self.c - 1..self.n - 1).step_by(2).map(|a| (a, a + 1)).collect()
    }

    /// Where an interface strand at position `i` enters d2's top row.
    fn d2_pos(&self, i: usize) -> usize {
        if self.c < self.n && i == self.c - 1 {
            self.n - 1
        } else {
            i
        }
    }
}

/// Split at a middle-band crossing: slice the bubble wiring just around
/// swap `step`.
fn split_middle(drawing: &Drawing, step: usize) -> Result<(Diagram, usize, Diagram)> {
    let n = drawing.diagram.n();
    let wires = wires_of(drawing);
    let m = wires.tops.len();
    let mut lanes: Vec<usize> = (0..m).collect();
    for s in drawing.swaps.iter().take(step) {
        lanes.swap(s.lane - 1, s.lane);
    }
    let lane = drawing.swaps[step].lane; // 1-based left lane of the crossing
    let pad = Padding { c: m, n };

    // d1: top half of the diagram, wires run to their lane before the swap.
    let mut d1_pairs: Vec<(usize, usize)> =
        drawing.top_arcs.iter().map(|a| (a.a - 1, a.b - 1)).collect();
    for (lane_idx, &w) in lanes.iter().enumerate() {
        d1_pairs.push((wires.tops[w], n + lane_idx));
    }
    d1_pairs.extend(pad.d1_arcs().into_iter().map(|(a, b)| (n + a, n + b)));
    let d1 = Diagram::new(n, &d1_pairs)?;

    // d2: wires continue from the swapped lanes to their bottom positions.
    let mut after = lanes.clone();
    after.swap(lane - 1, lane);
    let mut d2_pairs: Vec<(usize, usize)> =
        drawing.bottom_arcs.iter().map(|a| (n + a.a - 1, n + a.b - 1)).collect();
    for (lane_idx, &w) in after.iter().enumerate() {
        d2_pairs.push((pad.d2_pos(lane_idx), n + wires.bottoms[w]));
    }
    d2_pairs.extend(pad.d2_arcs());
    let d2 = Diagram::new(n, &d2_pairs)?;

    Ok((d1, lane, d2))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum StrandKind {
    Prop(usize),
    Leg { arc: usize, right_end: bool },
}

/// Split at a top-band crossing (a propagating line or a deeper arc leg
/// against the run of a shallower arc). The shallower arc's cap, every
/// deeper cap, the middle permutation and the bottom half all move into
/// d2; the extracted crossing becomes an s layer between them.
fn split_top_band(drawing: &Drawing, crossing: &Crossing) -> Result<(Diagram, usize, Diagram)> {
    let n = drawing.diagram.n();
    let wires = wires_of(drawing);
    let (shallow_idx, mover_key) = match crossing.kind {
        CrossingKind::PropArc { band: Band::Top, prop, arc } => (arc, wires.tops[prop]),
        CrossingKind::ArcArc { band: Band::Top, shallow, deep } => {
            let s = &drawing.top_arcs[shallow];
            let d = &drawing.top_arcs[deep];
            let inside = if s.a < d.a && d.a < s.b { d.a } else { d.b };
            (shallow, inside - 1)
        }
        _ => {
            return Err(KmyError::InternalVerificationFailed(
                "split_top_band needs a top-band crossing".into(),
            ))
        }
    };
    let s_arc = &drawing.top_arcs[shallow_idx];
    let sa = s_arc.a - 1;

    // Transiting strands: all propagating lines, both legs of every arc
    // deeper than the shallow one, and the shallow arc's own legs.
    let mut strands: Vec<(usize, StrandKind)> = Vec::new();
    for (w, &t) in wires.tops.iter().enumerate() {
        strands.push((t, StrandKind::Prop(w)));
    }
    for (ai, arc) in drawing.top_arcs.iter().enumerate() {
        if ai >= shallow_idx {
            strands.push((arc.a - 1, StrandKind::Leg { arc: ai, right_end: false }));
            strands.push((arc.b - 1, StrandKind::Leg { arc: ai, right_end: true }));
        }
    }
    strands.sort_by_key(|&(key, _)| key);
    let c = strands.len();
    let s_left = strands.iter().position(|&(key, _)| key == sa).unwrap();
    let mover = strands.iter().position(|&(key, _)| key == mover_key).unwrap();
    debug_assert!(s_left < mover);

    // Exit order: everything left of the mover except the shallow arc's
    // left leg, then that leg, then the mover, then the rest. The crossing
    // then sits at positions (L, L+1) with exactly L strands to its left.
    let mut exit_pos = vec![0usize; c];
    let mut next = 0;
    for (idx, _) in strands.iter().enumerate().take(mover) {
        if idx != s_left {
            exit_pos[idx] = next;
            next += 1;
        }
    }
    let level = next; // = L
    exit_pos[s_left] = level;
    exit_pos[mover] = level + 1;
    next = level + 2;
    for idx in mover + 1..c {
        exit_pos[idx] = next;
        next += 1;
    }
    debug_assert_eq!(crossing.label, level as i64, "strip position disagrees with the label");

    let pad = Padding { c, n };

    // d1: shallow caps above the cut, everything else runs straight down.
    let mut d1_pairs: Vec<(usize, usize)> = drawing
        .top_arcs
        .iter()
        .take(shallow_idx)
        .map(|a| (a.a - 1, a.b - 1))
        .collect();
    for (idx, &(key, _)) in strands.iter().enumerate() {
        d1_pairs.push((key, n + exit_pos[idx]));
    }
    d1_pairs.extend(pad.d1_arcs().into_iter().map(|(a, b)| (n + a, n + b)));
    let d1 = Diagram::new(n, &d1_pairs)?;

    // d2: receives the interface with the two crossers exchanged, closes
    // the caps, and carries the permutation and bottom half.
    let mut final_pos = exit_pos.clone();
    final_pos[s_left] = level + 1;
    final_pos[mover] = level;
    let mut leg_pos: HashMap<(usize, bool), usize> = HashMap::new();
    let mut d2_pairs: Vec<(usize, usize)> = Vec::new();
    for (idx, &(_, kind)) in strands.iter().enumerate() {
        let pos = pad.d2_pos(final_pos[idx]);
        match kind {
            StrandKind::Prop(w) => d2_pairs.push((pos, n + wires.bottoms[w])),
            StrandKind::Leg { arc, right_end } => {
                leg_pos.insert((arc, right_end), pos);
            }
        }
    }
    for ai in shallow_idx..drawing.top_arcs.len() {
        d2_pairs.push((leg_pos[&(ai, false)], leg_pos[&(ai, true)]));
    }
    d2_pairs.extend(drawing.bottom_arcs.iter().map(|a| (n + a.a - 1, n + a.b - 1)));
    d2_pairs.extend(pad.d2_arcs());
    let d2 = Diagram::new(n, &d2_pairs)?;

    Ok((d1, level + 1, d2))
}

/// One split of a non-planar diagram at the leftmost crossing of maximal
/// label L: returns (d1, j, d2) with d1 * s_j * d2 re-evaluating to
/// delta^k d, j <= L+1, and both factors strictly smaller in the
/// (L, count) measure.
fn split_once(d: &Diagram, drawing: &Drawing) -> Result<(Diagram, usize, Diagram)> {
    let max = drawing.max_label();
    let feature = drawing
        .leftmost_feature(max)
        .ok_or_else(|| KmyError::InternalVerificationFailed("no feature to split".into()))?;
    let (d1, j, d2) = match feature.kind {
        CrossingKind::PropProp { step, lane } => {
            let (d1, lane2, d2) = split_middle(drawing, step)?;
            debug_assert_eq!(lane, lane2);
            (d1, lane2, d2)
        }
        CrossingKind::PropArc { band: Band::Top, .. }
        | CrossingKind::ArcArc { band: Band::Top, .. } => split_top_band(drawing, feature)?,
        CrossingKind::PropArc { band: Band::Bottom, .. }
        | CrossingKind::ArcArc { band: Band::Bottom, .. } => {
            // Mirror: the crossing is a top-band feature of the flip with
            // the same label.
            let flipped = d.flip();
            let fdrawing = standardise(&flipped);
            let feature = fdrawing
                .crossings
                .iter()
                .filter(|c| {
                    c.label == max
                        && matches!(
                            c.kind,
                            CrossingKind::PropArc { band: Band::Top, .. }
                                | CrossingKind::ArcArc { band: Band::Top, .. }
                        )
                })
                .min_by(|a, b| a.x.cmp(&b.x))
                .ok_or_else(|| {
                    KmyError::InternalVerificationFailed(
                        "mirrored feature missing in the flipped drawing".into(),
                    )
                })?;
            let (e1, j, e2) = split_top_band(&fdrawing, feature)?;
            (e2.flip(), j, e1.flip())
        }
    };
    // Verify the split re-evaluates to the diagram (delta powers allowed).
    let (_, m1) = d1.multiply(&Diagram::s(d.n(), j))?;
    let (_, m2) = m1.multiply(&d2)?;
    if &m2 != d {
        return Err(KmyError::InternalVerificationFailed(format!(
            "split of {d} reassembles to {m2}"
        )));
    }
    Ok((d1, j, d2))
}

fn constructive_tokens(d: &Diagram, budget: &mut usize) -> Result<Vec<GeneratorId>> {
    let drawing = standardise(d);
    let here = measure(&drawing);
    if here.0 < 0 {
        return planar_word(d);
    }
    if *budget == 0 {
        return Err(KmyError::InternalVerificationFailed(
            "split recursion exceeded its budget".into(),
        ));
    }
    *budget -= 1;
    let (d1, j, d2) = split_once(d, &drawing)?;
    for factor in [&d1, &d2] {
        let sub = measure(&standardise(factor));
        if sub >= here {
            return Err(KmyError::InternalVerificationFailed(format!(
                "split factor {factor} has measure {sub:?}, not below {here:?}"
            )));
        }
    }
    let mut tokens = constructive_tokens(&d1, budget)?;
    tokens.push(GeneratorId::S(j));
    tokens.extend(constructive_tokens(&d2, budget)?);
    Ok(tokens)
}

/// Constructive decomposition along the standardized drawing. The result
/// is internally re-evaluated: its diagram part always equals `d`, with
/// the measured delta exponent recorded in the word.
pub fn decompose_constructive(d: &Diagram, l: i64) -> Result<GeneratorWord> {
    let n = d.n();
    check_height_bound(n, l)?;
    let h = height_exact(d);
    if h > l {
        return Err(KmyError::NotInAlgebra { height: h, l });
    }
    let mut budget = 100_000usize;
    let tokens = constructive_tokens(d, &mut budget)?;
    let (exponent, diagram) = evaluate_tokens(n, &tokens)?;
    if &diagram != d {
        return Err(KmyError::InternalVerificationFailed(format!(
            "constructive word evaluates to {diagram}, expected {d}"
        )));
    }
    for t in &tokens {
        if let GeneratorId::S(m) = *t {
            if m as i64 > l + 1 {
                return Err(KmyError::InternalVerificationFailed(format!(
                    "constructive word uses s{m} beyond the bound l = {l}"
                )));
            }
        }
    }
    Ok(GeneratorWord { n, l, tokens, delta_exponent: exponent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::height::closure_basis;

    fn n8_example() -> Diagram {
        Diagram::parse(8, "1-7' 2-1' 3-6 5-8 4-2' 7-4' 3'-6' 5'-8'").unwrap()
    }

    const N8_WORD: &str = "s3 s4 u5 s1 s2 u6 s4 u5 u7 s3 u6 s4 u5 s4 s3";

    #[test]
    fn evaluate_simple_words() {
        let w = GeneratorWord::parse(3, -1, "u1").unwrap();
        assert_eq!(w.evaluate().unwrap(), (0, Diagram::u(3, 1)));
        let w = GeneratorWord::parse(3, -1, "u1 u1").unwrap();
        assert_eq!(w.evaluate().unwrap(), (1, Diagram::u(3, 1)));
        assert_eq!(w.delta_exponent, 1);
        assert_eq!(w.to_string(), "d^1 u1 u1");
        let empty = GeneratorWord::parse(3, -1, "1").unwrap();
        assert_eq!(empty.evaluate().unwrap(), (0, Diagram::identity(3)));
    }

    #[test]
    fn word_validation() {
        assert!(GeneratorWord::parse(3, -1, "s1").is_err());
        assert!(GeneratorWord::parse(3, 0, "s1").is_ok());
        assert!(GeneratorWord::parse(3, 0, "s2").is_err());
        assert!(GeneratorWord::parse(3, 0, "u3").is_err());
        assert!(GeneratorWord::parse(3, 0, "d^1 u1").is_err());
        assert!(GeneratorWord::parse(3, 0, "d^1 u1 u1").is_ok());
    }

    #[test]
    fn fifteen_token_word_gives_the_example_diagram() {
        let w = GeneratorWord::parse(8, 3, N8_WORD).unwrap();
        assert_eq!(w.len(), 15);
        let (k, d) = w.evaluate().unwrap();
        assert_eq!(k, 0);
        assert_eq!(d, n8_example());
    }

    #[test]
    fn search_finds_shortest_words() {
        let w = decompose_search(&Diagram::identity(4), 0).unwrap();
        assert!(w.is_empty());
        let w = decompose_search(&Diagram::s(4, 1), 0).unwrap();
        assert_eq!(w.tokens, vec![GeneratorId::S(1)]);
        let err = decompose_search(&Diagram::s(4, 3), 0);
        assert!(matches!(err, Err(KmyError::NotInAlgebra { height: 2, l: 0 })));
    }

    #[test]
    fn search_roundtrips_j04() {
        for d in &closure_basis(4, 0).unwrap().diagrams {
            let w = decompose_search(d, 0).unwrap();
            let (k, prod) = w.evaluate().unwrap();
            assert_eq!(&prod, d);
            assert_eq!(k, w.delta_exponent);
        }
    }

    #[test]
    fn planar_words_for_tl_diagrams() {
        // u2 u1 product diagram decomposes with u tokens only
        let (_, d) = evaluate_tokens(3, &[GeneratorId::U(2), GeneratorId::U(1)]).unwrap();
        let w = decompose_constructive(&d, -1).unwrap();
        assert!(w.tokens.iter().all(|t| matches!(t, GeneratorId::U(_))));
        assert_eq!(w.evaluate().unwrap().1, d);
    }

    #[test]
    fn planar_peeling_exhaustive_n6() {
        for n in 1..=6usize {
            for d in Diagram::enumerate_all(n) {
                if !d.is_planar() {
                    continue;
                }
                let tokens = planar_word(&d).unwrap();
                let (_, prod) = evaluate_tokens(n, &tokens).unwrap();
                assert_eq!(prod, d, "peeling failed for {d}");
            }
        }
    }

    #[test]
    fn constructive_roundtrips_exhaustive_n4() {
        for l in -1..=2i64 {
            for d in &closure_basis(4, l).unwrap().diagrams {
                let w = decompose_constructive(d, l).unwrap();
                let (_, prod) = w.evaluate().unwrap();
                assert_eq!(&prod, d, "constructive round trip failed at l = {l}");
            }
        }
    }

    #[test]
    fn constructive_handles_the_example() {
        let d = n8_example();
        let w = decompose_constructive(&d, 3).unwrap();
        let (k, prod) = w.evaluate().unwrap();
        assert_eq!(prod, d);
        assert_eq!(k, w.delta_exponent);
        assert!(w.tokens.iter().all(|t| match *t {
            GeneratorId::S(m) => m <= 4,
            GeneratorId::U(i) => i <= 7,
        }));
    }

    #[test]
    fn cross_oracle_on_j15() {
        for d in &closure_basis(5, 1).unwrap().diagrams {
            let a = decompose_search(d, 1).unwrap();
            let b = decompose_constructive(d, 1).unwrap();
            assert_eq!(a.evaluate().unwrap().1, b.evaluate().unwrap().1);
            assert!(a.len() <= b.len(), "search word longer than constructive for {d}");
        }
    }
}
