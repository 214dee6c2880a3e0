//! The height filtration: generator sets, closure bases and exact heights.
//!
//! The height of a diagram is computed through the generating set: h(d) is
//! the least l such that d lies in the multiplicative closure of
//! {u_1..u_{n-1}, s_1..s_{l+1}}. The standardized-drawing estimator in
//! [`crate::drawing`] supplies an upper bound which caps the search.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::diagram::Diagram;
use crate::drawing::standardise;
use crate::error::{KmyError, Result};

/// A token naming one generator of J_{l,n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorId {
    /// Cap-cup u_i, 1 <= i <= n-1.
    U(usize),
    /// Crossing s_m, 1 <= m <= l+1.
    S(usize),
}

impl GeneratorId {
    pub fn diagram(&self, n: usize) -> Diagram {
        match *self {
            GeneratorId::U(i) => Diagram::u(n, i),
            GeneratorId::S(m) => Diagram::s(n, m),
        }
    }
}

impl std::fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeneratorId::U(i) => write!(f, "u{i}"),
            GeneratorId::S(m) => write!(f, "s{m}"),
        }
    }
}

pub fn check_height_bound(n: usize, l: i64) -> Result<()> {
    if l < -1 || l > n as i64 - 2 {
        return Err(KmyError::BadHeightBound { n, l });
    }
    Ok(())
}

/// Generator ids for J_{l,n}: u_1..u_{n-1} then s_1..s_{l+1}.
pub fn generator_ids(n: usize, l: i64) -> Result<Vec<GeneratorId>> {
    check_height_bound(n, l)?;
    let mut out: Vec<GeneratorId> = (1..n).map(GeneratorId::U).collect();
    if l >= 0 {
        out.extend((1..=(l + 1) as usize).map(GeneratorId::S));
    }
    Ok(out)
}

/// The generator diagrams of J_{l,n}.
pub fn generators(n: usize, l: i64) -> Result<Vec<Diagram>> {
    Ok(generator_ids(n, l)?.into_iter().map(|g| g.diagram(n)).collect())
}

/// The diagram set of J_{l,n}: identity and generators, closed under taking
/// product diagrams (delta powers discarded).
#[derive(Debug)]
pub struct ClosureSet {
    pub n: usize,
    pub l: i64,
    /// Canonically sorted.
    pub diagrams: Vec<Diagram>,
    pub set: HashSet<Diagram>,
}

impl ClosureSet {
    pub fn contains(&self, d: &Diagram) -> bool {
        self.set.contains(d)
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }
}

fn closure_cache() -> &'static Mutex<HashMap<(usize, i64), Arc<ClosureSet>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, i64), Arc<ClosureSet>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Worklist fixed point: multiply the frontier by every generator on both
/// sides until stable. Results are cached per (n, l).
pub fn closure_basis(n: usize, l: i64) -> Result<Arc<ClosureSet>> {
    check_height_bound(n, l)?;
    if let Some(hit) = closure_cache().lock().unwrap().get(&(n, l)) {
        return Ok(hit.clone());
    }
    let gens = generators(n, l)?;
    let mut set: HashSet<Diagram> = HashSet::new();
    let mut queue: VecDeque<Diagram> = VecDeque::new();
    for d in std::iter::once(Diagram::identity(n)).chain(gens.iter().cloned()) {
        if set.insert(d.clone()) {
            queue.push_back(d);
        }
    }
    while let Some(d) = queue.pop_front() {
        for g in &gens {
            for prod in [d.multiply(g)?.1, g.multiply(&d)?.1] {
                if !set.contains(&prod) {
                    set.insert(prod.clone());
                    queue.push_back(prod);
                }
            }
        }
    }
    let mut diagrams: Vec<Diagram> = set.iter().cloned().collect();
    diagrams.sort();
    let out = Arc::new(ClosureSet { n, l, diagrams, set });
    closure_cache().lock().unwrap().insert((n, l), out.clone());
    Ok(out)
}

/// Exact height: -1 for planar diagrams, otherwise the least l with
/// d in closure_basis(n, l). The drawing estimator caps the scan, so the
/// largest closure actually built is at level h(d) - 1.
pub fn height_exact(d: &Diagram) -> i64 {
    if d.is_planar() {
        return -1;
    }
    let n = d.n();
    let upper = height_upper_bound(d);
    debug_assert!(upper >= 0);
    for l in 0..upper {
        if closure_basis(n, l).expect("0 <= l <= n-2 here").contains(d) {
            return l;
        }
    }
    upper
}

/// Upper bound from the standardized drawing: the maximum crossing label.
pub fn height_upper_bound(d: &Diagram) -> i64 {
    standardise(d).max_label()
}
