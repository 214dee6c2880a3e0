//! Brauer diagrams: pair partitions of n top and n bottom vertices, with
//! exact stacking multiplication and loop extraction.
//!
//! Vertices are numbered `0..n` for the top row and `n..2n` for the bottom
//! row, so top vertex `i` (1-based) is `i-1` and bottom vertex `i'` is
//! `n+i-1`. A diagram is stored as its partner involution, which is already
//! a canonical form: two diagrams are equal iff their partner arrays are.

use std::fmt;

use crate::error::{KmyError, Result};

/// A perfect matching on the 2n frame vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: u16,
    partner: Vec<u16>,
}

impl Diagram {
    /// Builds a diagram from a list of vertex pairs (vertices `0..2n`).
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(KmyError::MalformedPairing("n must be positive".into()));
        }
        if pairs.len() != n {
            return Err(KmyError::MalformedPairing(format!(
                "expected {} pairs, got {}",
                n,
                pairs.len()
            )));
        }
        let mut partner = vec![u16::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n {
                return Err(KmyError::MalformedPairing(format!(
                    "vertex out of range in pair ({a}, {b})"
                )));
            }
            if a == b {
                return Err(KmyError::MalformedPairing(format!("vertex {a} paired with itself")));
            }
            if partner[a] != u16::MAX || partner[b] != u16::MAX {
                return Err(KmyError::MalformedPairing(format!(
                    "vertex appears twice in pair ({a}, {b})"
                )));
            }
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        Ok(Diagram { n: n as u16, partner })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Partner of a vertex under the pairing involution.
    pub fn partner(&self, v: usize) -> usize {
        self.partner[v] as usize
    }

    /// Pairs in canonical order: each pair `(a, b)` with `a < b`, sorted by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n());
        for v in 0..2 * self.n() {
            let w = self.partner(v);
            if v < w {
                out.push((v, w));
            }
        }
        out
    }

    pub fn identity(n: usize) -> Self {
        let n16 = n as u16;
        let mut partner = vec![0u16; 2 * n];
        for i in 0..n {
            partner[i] = n16 + i as u16;
            partner[n + i] = i as u16;
        }
        Diagram { n: n16, partner }
    }

    /// The Temperley-Lieb generator `u_i` (1-based, `1 <= i <= n-1`): a cap
    /// joining top `i, i+1` and a cup joining bottom `i, i+1`.
    pub fn u(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "u_{i} needs 1 <= i <= n-1");
        let mut d = Diagram::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b as u16;
        d.partner[b] = a as u16;
        d.partner[n + a] = (n + b) as u16;
        d.partner[n + b] = (n + a) as u16;
        d
    }

    /// The transposition generator `s_i` (1-based): strands `i` and `i+1`
    /// cross, everything else is straight.
    pub fn s(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} needs 1 <= i <= n-1");
        let mut d = Diagram::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = (n + b) as u16;
        d.partner[n + b] = a as u16;
        d.partner[b] = (n + a) as u16;
        d.partner[n + a] = b as u16;
        d
    }

    /// Permutation diagram with pairs `(T_i, B_{sigma(i)})`, sigma given
    /// 0-based. Under stacking, `mul(from_permutation(s), from_permutation(t))`
    /// is `from_permutation(i -> t(s(i)))`: composition reads left to right.
    pub fn from_permutation(sigma: &[usize]) -> Self {
        let n = sigma.len();
        let mut partner = vec![0u16; 2 * n];
        for (i, &si) in sigma.iter().enumerate() {
            partner[i] = (n + si) as u16;
            partner[n + si] = i as u16;
        }
        Diagram { n: n as u16, partner }
    }

    /// Stacks `self` on top of `other` and extracts closed loops.
    ///
    /// Returns `(loops, product)`; the caller accounts for the factor
    /// delta^loops.
    pub fn multiply(&self, other: &Diagram) -> Result<(u32, Diagram)> {
        if self.n != other.n {
            return Err(KmyError::SizeMismatch { left: self.n(), right: other.n() });
        }
        let n = self.n();
        // Composite vertex walk. Boundary vertices are self's top (0..n) and
        // other's bottom (2n..3n in glued numbering); the n middle vertices
        // carry one edge from each factor.
        let mut partner = vec![u16::MAX; 2 * n];
        let mut seen_mid_path = vec![false; n];
        for start in 0..2 * n {
            // start enumerates final vertices: 0..n = self's top, n..2n = other's bottom
            if partner[start] != u16::MAX {
                continue;
            }
            // Walk to the partner.
            let mut cur: usize;
            let mut in_self: bool;
            if start < n {
                cur = self.partner(start);
                in_self = true;
            } else {
                cur = other.partner(n + (start - n));
                in_self = false;
            }
            loop {
                if in_self {
                    if cur < n {
                        // landed on self's top: boundary
                        partner[start] = cur as u16;
                        partner[cur] = start as u16;
                        break;
                    }
                    // middle vertex, cross into other
                    let mid = cur - n;
                    seen_mid_path[mid] = true;
                    cur = other.partner(mid);
                    in_self = false;
                } else {
                    if cur >= n {
                        // landed on other's bottom: boundary
                        let fin = cur; // final vertex id n..2n
                        partner[start] = fin as u16;
                        partner[fin] = start as u16;
                        break;
                    }
                    // middle vertex, cross into self
                    seen_mid_path[cur] = true;
                    cur = self.partner(n + cur);
                    in_self = true;
                }
            }
        }
        // Loop count: union middle vertices along middle-to-middle edges and
        // count the components no propagating path ran through.
        let mut uf = UnionFind::new(n);
        for m in 0..n {
            let w = self.partner(n + m);
            if w >= n {
                uf.union(m, w - n);
            }
            let w = other.partner(m);
            if w < n {
                uf.union(m, w);
            }
        }
        let mut loop_roots = std::collections::HashSet::new();
        for m in 0..n {
            if !seen_mid_path[m] {
                loop_roots.insert(uf.find(m));
            }
        }
        let loops = loop_roots.len() as u32;
        Ok((loops, Diagram { n: self.n, partner }))
    }

    /// Swaps every top vertex with the matching bottom vertex. An involution
    /// and an anti-automorphism of the stacking product.
    pub fn flip(&self) -> Diagram {
        let n = self.n();
        let map = |v: usize| if v < n { v + n } else { v - n };
        let mut partner = vec![0u16; 2 * n];
        for v in 0..2 * n {
            partner[map(v)] = map(self.partner(v)) as u16;
        }
        Diagram { n: self.n, partner }
    }

    /// Side-by-side concatenation; `other`'s strands sit to the right.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let n1 = self.n();
        let n2 = other.n();
        let n = n1 + n2;
        let map1 = |v: usize| if v < n1 { v } else { v - n1 + n };
        let map2 = |v: usize| if v < n2 { n1 + v } else { n + n1 + (v - n2) };
        let mut partner = vec![0u16; 2 * n];
        for v in 0..2 * n1 {
            partner[map1(v)] = map1(self.partner(v)) as u16;
        }
        for v in 0..2 * n2 {
            partner[map2(v)] = map2(other.partner(v)) as u16;
        }
        Diagram { n: n as u16, partner }
    }

    /// Number of top-to-bottom lines. Same parity as n.
    pub fn propagating_count(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&v| self.partner(v) >= n).count()
    }

    /// Non-crossing test: reads the 2n endpoints around the frame boundary
    /// (top left-to-right, then bottom right-to-left) and checks that no two
    /// pairs interleave.
    pub fn is_planar(&self) -> bool {
        let n = self.n();
        let pos = |v: usize| if v < n { v } else { 2 * n - 1 - (v - n) };
        let mut chords: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let (p, q) = (pos(a), pos(b));
                if p < q {
                    (p, q)
                } else {
                    (q, p)
                }
            })
            .collect();
        chords.sort_unstable();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                let (a, b) = chords[i];
                let (c, d) = chords[j];
                if a < c && c < b && b < d {
                    return false;
                }
            }
        }
        true
    }

    /// All (2n-1)!! pairings on 2n vertices, in canonical order.
    pub fn enumerate_all(n: usize) -> Vec<Diagram> {
        let mut out = Vec::new();
        let mut partner = vec![u16::MAX; 2 * n];
        fn rec(partner: &mut Vec<u16>, out: &mut Vec<Diagram>, n: u16) {
            let free = partner.iter().position(|&p| p == u16::MAX);
            let Some(a) = free else {
                out.push(Diagram { n, partner: partner.clone() });
                return;
            };
            for b in a + 1..partner.len() {
                if partner[b] == u16::MAX {
                    partner[a] = b as u16;
                    partner[b] = a as u16;
                    rec(partner, out, n);
                    partner[a] = u16::MAX;
                    partner[b] = u16::MAX;
                }
            }
        }
        rec(&mut partner, &mut out, n as u16);
        out.sort();
        out
    }

    /// Parses the text grammar: whitespace-separated `a-b` pairs with `a`, `b`
    /// in `1..n` or `1'..n'` (primes mark bottom vertices).
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let Some((a, b)) = tok.split_once('-') else {
                return Err(KmyError::ParseError(format!("bad pair token `{tok}`")));
            };
            pairs.push((parse_vertex(n, a)?, parse_vertex(n, b)?));
        }
        Diagram::new(n, &pairs)
    }
}

fn parse_vertex(n: usize, s: &str) -> Result<usize> {
    let (digits, bottom) = match s.strip_suffix('\'') {
        Some(d) => (d, true),
        None => (s, false),
    };
    let k: usize = digits
        .parse()
        .map_err(|_| KmyError::ParseError(format!("bad vertex label `{s}`")))?;
    if k < 1 || k > n {
        return Err(KmyError::ParseError(format!("vertex `{s}` out of range for n = {n}")));
    }
    Ok(if bottom { n + k - 1 } else { k - 1 })
}

fn vertex_label(n: usize, v: usize) -> String {
    if v < n {
        format!("{}", v + 1)
    } else {
        format!("{}'", v - n + 1)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let parts: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", vertex_label(n, a), vertex_label(n, b)))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({})", self)
    }
}

/// Union-find with union by rank, used for loop counting.
struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[a] = b;
                self.rank[b] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The height-3 diagram on 8 strands used as a running example.
    pub(crate) fn n8_example() -> Diagram {
        Diagram::parse(8, "1-7' 2-1' 3-6 5-8 4-2' 7-4' 3'-6' 5'-8'").unwrap()
    }

    #[test]
    fn new_validates_pairings() {
        assert!(Diagram::new(2, &[(0, 2), (1, 3)]).is_ok());
        // T1 appearing twice
        let err = Diagram::new(2, &[(0, 2), (0, 3)]);
        assert!(matches!(err, Err(KmyError::MalformedPairing(_))));
        // out of range
        assert!(matches!(Diagram::new(2, &[(0, 4), (1, 3)]), Err(KmyError::MalformedPairing(_))));
        // missing vertex
        assert!(matches!(Diagram::new(2, &[(0, 1), (0, 1)]), Err(KmyError::MalformedPairing(_))));
    }

    #[test]
    fn identity_diagram() {
        let id = Diagram::identity(2);
        assert_eq!(id, Diagram::new(2, &[(0, 2), (1, 3)]).unwrap());
        assert_eq!(id.to_string(), "1-1' 2-2'");
    }

    #[test]
    fn parse_print_roundtrip_canonical() {
        let d = n8_example();
        let s = d.to_string();
        assert_eq!(Diagram::parse(8, &s).unwrap(), d);
        assert_eq!(s, "1-7' 2-1' 3-6 4-2' 5-8 7-4' 3'-6' 5'-8'");
    }

    #[test]
    fn multiply_extracts_loops() {
        let n = 3;
        let u1 = Diagram::u(n, 1);
        let (loops, prod) = u1.multiply(&u1).unwrap();
        assert_eq!(loops, 1);
        assert_eq!(prod, u1);

        let d = n8_example();
        let (loops, prod) = Diagram::identity(8).multiply(&d).unwrap();
        assert_eq!((loops, &prod), (0, &d));

        // u1 u2 u1 = u1 with no loops
        let u2 = Diagram::u(n, 2);
        let (l1, p1) = u1.multiply(&u2).unwrap();
        let (l2, p2) = p1.multiply(&u1).unwrap();
        assert_eq!(l1 + l2, 0);
        assert_eq!(p2, u1);
    }

    #[test]
    fn multiply_size_mismatch() {
        let a = Diagram::identity(2);
        let b = Diagram::identity(3);
        assert!(matches!(a.multiply(&b), Err(KmyError::SizeMismatch { .. })));
    }

    #[test]
    fn flip_is_involution_and_fixed_on_symmetric() {
        let d = n8_example();
        assert_eq!(d.flip().flip(), d);
        let sym = Diagram::new(2, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(sym.flip(), sym);
        assert_eq!(Diagram::identity(4).flip(), Diagram::identity(4));
        // flip of the example swaps primed and unprimed labels
        assert_eq!(d.flip(), Diagram::parse(8, "1'-7 2'-1 3'-6' 5'-8' 4'-2 7'-4 3-6 5-8").unwrap());
    }

    #[test]
    fn tensor_concatenates() {
        assert_eq!(
            Diagram::identity(2).tensor(&Diagram::identity(3)),
            Diagram::identity(5)
        );
        let u = Diagram::u(2, 1);
        assert_eq!(
            u.tensor(&u),
            Diagram::parse(4, "1-2 1'-2' 3-4 3'-4'").unwrap()
        );
        // 1_{n-2} tensor U is the diagram part of e_n
        let e4 = Diagram::identity(2).tensor(&u);
        assert_eq!(e4, Diagram::u(4, 3));
    }

    #[test]
    fn permutation_diagrams_compose_left_to_right() {
        let n = 5;
        assert_eq!(Diagram::from_permutation(&[0, 1, 2, 3, 4]), Diagram::identity(n));
        // 1->2, 2->4, 3->1, 4->5, 5->3 (1-based)
        let sigma = [1usize, 3, 0, 4, 2];
        let d = Diagram::from_permutation(&sigma);
        assert_eq!(d.to_string(), "1-2' 2-4' 3-1' 4-5' 5-3'");
        let tau = [4usize, 3, 2, 1, 0];
        let (loops, prod) = Diagram::from_permutation(&sigma).multiply(&Diagram::from_permutation(&tau)).unwrap();
        assert_eq!(loops, 0);
        let composed: Vec<usize> = (0..n).map(|i| tau[sigma[i]]).collect();
        assert_eq!(prod, Diagram::from_permutation(&composed));
        assert_eq!(Diagram::from_permutation(&[1, 0]), Diagram::parse(2, "1-2' 2-1'").unwrap());
    }

    #[test]
    fn propagating_counts() {
        assert_eq!(Diagram::identity(6).propagating_count(), 6);
        assert_eq!(Diagram::u(6, 1).propagating_count(), 4);
        assert_eq!(n8_example().propagating_count(), 4);
    }

    #[test]
    fn planarity() {
        assert!(Diagram::identity(4).is_planar());
        assert!(!Diagram::from_permutation(&[1, 0]).is_planar());
        let planar_count = Diagram::enumerate_all(4).iter().filter(|d| d.is_planar()).count();
        assert_eq!(planar_count, 14); // Catalan(4)
        assert_eq!(Diagram::enumerate_all(4).len(), 105); // (2*4-1)!!
    }

    #[test]
    fn propagating_monotone_under_product() {
        // exhaustive n <= 4
        for n in 1..=4 {
            let all = Diagram::enumerate_all(n);
            for a in &all {
                for b in &all {
                    let (_, p) = a.multiply(b).unwrap();
                    assert!(p.propagating_count() <= a.propagating_count().min(b.propagating_count()));
                }
            }
        }
    }

    mod properties {
        use super::*;
        use crate::element::AlgebraElement;
        use crate::ring::RingSpec;
        use proptest::prelude::*;

        /// Random pairing on 2n points, driven by a priority vector.
        fn arb_diagram(n: usize) -> impl Strategy<Value = Diagram> {
            proptest::collection::vec(0usize..1000, 2 * n).prop_map(move |prio| {
                let mut free: Vec<usize> = (0..2 * n).collect();
                let mut pairs = Vec::with_capacity(n);
                while !free.is_empty() {
                    let a = free.remove(0);
                    let pick = prio[a] % free.len();
                    let b = free.remove(pick);
                    pairs.push((a, b));
                }
                Diagram::new(n, &pairs).unwrap()
            })
        }

        fn arb_sized() -> impl Strategy<Value = Diagram> {
            (1usize..=5).prop_flat_map(arb_diagram)
        }

        fn arb_pair() -> impl Strategy<Value = (Diagram, Diagram)> {
            (1usize..=5).prop_flat_map(|n| (arb_diagram(n), arb_diagram(n)))
        }

        proptest! {
            #[test]
            fn multiplication_is_associative(n in 1usize..=5, seeds in proptest::collection::vec(proptest::collection::vec(0usize..1000, 10), 3)) {
                let ds: Vec<Diagram> = seeds
                    .into_iter()
                    .map(|prio| {
                        let mut free: Vec<usize> = (0..2 * n).collect();
                        let mut pairs = Vec::with_capacity(n);
                        while !free.is_empty() {
                            let a = free.remove(0);
                            let pick = prio[a % prio.len()] % free.len();
                            let b = free.remove(pick);
                            pairs.push((a, b));
                        }
                        Diagram::new(n, &pairs).unwrap()
                    })
                    .collect();
                // compare as algebra elements so the delta powers count too
                let [a, b, c] = [&ds[0], &ds[1], &ds[2]]
                    .map(|d| AlgebraElement::from_diagram(d.clone(), RingSpec::Laurent));
                let left = a.mul(&b).unwrap().mul(&c).unwrap();
                let right = a.mul(&b.mul(&c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }

            #[test]
            fn flip_is_an_anti_automorphism((d1, d2) in arb_pair()) {
                let (loops, prod) = d1.multiply(&d2).unwrap();
                let (loops_f, prod_f) = d2.flip().multiply(&d1.flip()).unwrap();
                prop_assert_eq!(loops, loops_f);
                prop_assert_eq!(prod.flip(), prod_f);
            }

            #[test]
            fn parse_print_roundtrip(d in arb_sized()) {
                let s = d.to_string();
                prop_assert_eq!(Diagram::parse(d.n(), &s).unwrap(), d);
            }

            #[test]
            fn propagating_monotone_sampled(n in 5usize..=6, pair in (proptest::collection::vec(0usize..1000, 12), proptest::collection::vec(0usize..1000, 12))) {
                let build = |prio: &[usize]| {
                    let mut free: Vec<usize> = (0..2 * n).collect();
                    let mut pairs = Vec::with_capacity(n);
                    while !free.is_empty() {
                        let a = free.remove(0);
                        let pick = prio[a % prio.len()] % free.len();
                        let b = free.remove(pick);
                        pairs.push((a, b));
                    }
                    Diagram::new(n, &pairs).unwrap()
                };
                let (a, b) = (build(&pair.0), build(&pair.1));
                let (_, p) = a.multiply(&b).unwrap();
                prop_assert!(p.propagating_count() <= a.propagating_count().min(b.propagating_count()));
            }
        }
    }
}
