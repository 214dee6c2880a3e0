//! The algebra J_{l,n}(delta): basis, ideal filtration, iterated-inflation
//! layers and the distinguished idempotents.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::cells::{assemble, half_diagrams, m_l, HalfDiagram};
use crate::diagram::Diagram;
use crate::element::AlgebraElement;
use crate::error::{KmyError, Result};
use crate::height::{check_height_bound, closure_basis, ClosureSet};
use crate::ring::{Coefficient, RingSpec};
use crate::specht::permutations;

/// J_{l,n} with its diagram basis.
///
/// The basis is sorted by decreasing propagating count, then canonically,
/// so each ideal I_m is a contiguous suffix. The structure-constant memo is
/// behind a mutex with idempotent inserts; the algebra itself is immutable
/// after construction.
#[derive(Debug)]
pub struct KmyAlgebra {
    n: usize,
    l: i64,
    ring: RingSpec,
    basis: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
    closure: Arc<ClosureSet>,
    memo: Mutex<HashMap<(usize, usize), (u32, usize)>>,
}

/// One layer of the iterated-inflation filtration: the diagrams with m
/// propagating lines, spanned by V_m x Sym(m_l) x V_m.
#[derive(Debug, Clone)]
pub struct InflationLayer {
    pub m: usize,
    pub m_l: usize,
    pub halves: Vec<HalfDiagram>,
    /// |V_m|^2 * m_l!
    pub size: usize,
}

impl KmyAlgebra {
    pub fn new(n: usize, l: i64, ring: RingSpec) -> Result<Self> {
        check_height_bound(n, l)?;
        let closure = closure_basis(n, l)?;
        let mut basis = closure.diagrams.clone();
        basis.sort_by(|a, b| {
            b.propagating_count().cmp(&a.propagating_count()).then_with(|| a.cmp(b))
        });
        let index = basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(KmyAlgebra { n, l, ring, basis, index, closure, memo: Mutex::new(HashMap::new()) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Diagram] {
        &self.basis
    }

    pub fn contains(&self, d: &Diagram) -> bool {
        self.closure.contains(d)
    }

    pub fn basis_index(&self, d: &Diagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Product of two basis diagrams as (delta exponent, basis index),
    /// memoized.
    pub fn mul_basis(&self, i: usize, j: usize) -> Result<(u32, usize)> {
        if let Some(&hit) = self.memo.lock().unwrap().get(&(i, j)) {
            return Ok(hit);
        }
        let (loops, prod) = self.basis[i].multiply(&self.basis[j])?;
        let k = self.basis_index(&prod).ok_or_else(|| {
            KmyError::InternalVerificationFailed(format!(
                "product of basis diagrams left the algebra: {} * {}",
                self.basis[i], self.basis[j]
            ))
        })?;
        self.memo.lock().unwrap().insert((i, j), (loops, k));
        Ok((loops, k))
    }

    /// Diagrams spanning the ideal I_m (propagating count at most m).
    pub fn ideal_basis(&self, m: usize) -> Vec<Diagram> {
        self.basis.iter().filter(|d| d.propagating_count() <= m).cloned().collect()
    }

    /// The half-diagram sets V_m for m = n, n-2, ..., with the bijection
    /// onto the m-propagating basis diagrams checked on the way.
    pub fn inflation_layers(&self) -> Result<Vec<InflationLayer>> {
        let mut out = Vec::new();
        let mut m = self.n;
        loop {
            let halves = half_diagrams(self.n, self.l, m)?;
            let ml = m_l(self.l, m);
            let mut assembled = std::collections::HashSet::new();
            for x in &halves {
                for y in &halves {
                    for perm in permutations(ml) {
                        let mut sigma: Vec<usize> = (0..m).collect();
                        sigma[..ml].copy_from_slice(&perm);
                        let d = assemble(x, &sigma, y)?;
                        if !assembled.insert(d.clone()) {
                            return Err(KmyError::LayerMismatch(format!(
                                "duplicate assembly at m = {m}: {d}"
                            )));
                        }
                    }
                }
            }
            let layer_set: std::collections::HashSet<Diagram> = self
                .basis
                .iter()
                .filter(|d| d.propagating_count() == m)
                .cloned()
                .collect();
            if assembled != layer_set {
                return Err(KmyError::LayerMismatch(format!(
                    "layer m = {m}: assembled {} diagrams, basis has {}",
                    assembled.len(),
                    layer_set.len()
                )));
            }
            let size = assembled.len();
            debug_assert_eq!(size, halves.len() * halves.len() * factorial(ml));
            out.push(InflationLayer { m, m_l: ml, halves, size });
            if m < 2 {
                break;
            }
            m -= 2;
        }
        Ok(out)
    }

    fn delta_inverse_power(&self, t: i64) -> Result<Coefficient> {
        self.ring.delta_power(-t)
    }

    /// The diagram part of e_{n,t}: 1_{n-2t} tensor U^{tensor t}.
    pub fn e_t_diagram(&self, t: usize) -> Result<Diagram> {
        if 2 * t > self.n {
            return Err(KmyError::BadCellIndex(format!("e_(n,{t}) needs n >= 2t")));
        }
        let mut d = if self.n > 2 * t {
            Diagram::identity(self.n - 2 * t)
        } else {
            // pure caps: build from the first factor
            Diagram::u(2, 1)
        };
        let start = if self.n > 2 * t { 0 } else { 1 };
        for _ in start..t {
            d = d.tensor(&Diagram::u(2, 1));
        }
        Ok(d)
    }

    /// The idempotent e_n = (1/delta) (1_{n-2} tensor U). Needs n >= 2 and
    /// an invertible delta.
    pub fn idempotent_e(&self) -> Result<AlgebraElement> {
        if self.n < 2 {
            return Err(KmyError::BadCellIndex("e_n needs n >= 2".into()));
        }
        self.idempotent_e_t(1)
    }

    /// The normalized idempotent e'_{n,t} = delta^{-t} (1_{n-2t} tensor
    /// U^{tensor t}); e'_{n,0} is the identity.
    pub fn idempotent_e_t(&self, t: usize) -> Result<AlgebraElement> {
        let d = self.e_t_diagram(t)?;
        let c = self.delta_inverse_power(t as i64)?;
        AlgebraElement::from_term(d, c, self.ring.clone())
    }

    /// Lifts a diagram into an algebra element over this algebra's ring.
    pub fn element(&self, d: &Diagram) -> Result<AlgebraElement> {
        if !self.contains(d) {
            return Err(KmyError::NotInAlgebra {
                height: crate::height::height_exact(d),
                l: self.l,
            });
        }
        Ok(AlgebraElement::from_diagram(d.clone(), self.ring.clone()))
    }
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}
