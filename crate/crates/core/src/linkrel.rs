//! Link diagrams as systems of crossing relations.
//!
//! A diagram is reduced to its arcs and crossings. At every crossing the
//! colors satisfy `2·over ≡ under_a + under_b (mod p)`; handedness never
//! matters for that relation, so it is not recorded. Crossing-free components
//! are kept only as a count of free circles.
//!
//! Diagrams are built by stacking [`Pattern`]s (tangles with the same number
//! of strands on each side) and closing them up: output slot `k` of one
//! pattern is glued to input slot `k` of the next, and the last pattern wraps
//! around to the first. Braid generators and the repeated patterns of the
//! paradromic rings are both expressed this way.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{check_prime, Error, IntMatrix, ModVector, Result};

/// Default cap on `p^(arcs + circles)` for [`RelationSystem::enumerate_colorings`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// One crossing: `over` passes above the two under-arc pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: usize,
    pub under_a: usize,
    pub under_b: usize,
}

impl Crossing {
    pub fn new(over: usize, under_a: usize, under_b: usize) -> Self {
        Crossing { over, under_a, under_b }
    }

    fn arcs(&self) -> [usize; 3] {
        [self.over, self.under_a, self.under_b]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationSystem {
    arc_count: usize,
    crossings: Vec<Crossing>,
    free_circles: usize,
}

impl RelationSystem {
    pub fn new(arc_count: usize, crossings: Vec<Crossing>, free_circles: usize) -> Result<Self> {
        for c in &crossings {
            for arc in c.arcs() {
                if arc >= arc_count {
                    return Err(Error::ArcOutOfRange { arc, arc_count });
                }
            }
        }
        Ok(RelationSystem { arc_count, crossings, free_circles })
    }

    /// `c` unlinked round circles and nothing else.
    pub fn circles(c: usize) -> Self {
        RelationSystem { arc_count: 0, crossings: Vec::new(), free_circles: c }
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    /// One row per crossing, one column per arc: `+2` at the over-arc and
    /// `−1` at each under-arc, summed where ids coincide. Every row sums to 0.
    pub fn coloring_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.crossings.len(), self.arc_count);
        for (r, c) in self.crossings.iter().enumerate() {
            m.add_to(r, c.over, 2);
            m.add_to(r, c.under_a, -1);
            m.add_to(r, c.under_b, -1);
        }
        m
    }

    /// Number of link components: under-arc pieces meeting at a crossing
    /// belong to the same strand.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c.under_a, c.under_b);
        }
        uf.classes() + self.free_circles
    }

    /// Number of split pieces of the diagram. Arcs at a common crossing are in
    /// one piece; each free circle is a piece of its own.
    pub fn split_pieces(&self) -> usize {
        let mut uf = UnionFind::new(self.arc_count);
        for c in &self.crossings {
            uf.union(c.over, c.under_a);
            uf.union(c.over, c.under_b);
        }
        uf.classes() + self.free_circles
    }

    /// Dimension over GF(p) of the space of all colorings, constants included.
    pub fn coloring_dimension(&self, p: u64) -> Result<usize> {
        let rank = self.coloring_matrix().rank_mod(p)?;
        Ok(self.arc_count - rank + self.free_circles)
    }

    /// True when some coloring mod `p` uses at least two colors.
    ///
    /// Constants always color the diagram, so this asks for a coloring space
    /// of dimension at least two.
    pub fn is_p_colorable(&self, p: u64) -> Result<bool> {
        Ok(self.coloring_dimension(p)? >= 2)
    }

    /// A non-constant coloring mod `p`: arc colors first, then one color per
    /// free circle. The first non-constant vector of the reduced echelon
    /// nullspace basis is used, shifted so that the first entry is 0.
    pub fn find_coloring(&self, p: u64) -> Result<Option<ModVector>> {
        let m = self.coloring_matrix().pad_columns(self.free_circles);
        let basis = m.nullspace_mod(p)?;
        Ok(basis.into_iter().find(|v| !v.is_constant()).map(|v| {
            let first = v.coords()[0];
            v.shifted((p - first) % p)
        }))
    }

    /// Exhaustively counts every assignment of colors mod `p` to arcs and free
    /// circles that satisfies all crossing relations, constants included.
    ///
    /// Fails when `p^(arcs + circles)` exceeds `budget`. Partial assignments
    /// are cut off as soon as a fully assigned crossing is violated, so the
    /// work done is far below the nominal bound.
    pub fn enumerate_colorings(&self, p: u64, budget: u64) -> Result<u64> {
        check_prime(p)?;
        let vars = self.arc_count + self.free_circles;
        let space = u32::try_from(vars)
            .ok()
            .and_then(|v| (p as u128).checked_pow(v))
            .filter(|&s| s <= budget as u128);
        if space.is_none() {
            return Err(Error::BudgetExceeded { budget });
        }
        // crossings become checkable once their largest arc is assigned
        let mut ready: Vec<Vec<Crossing>> = vec![Vec::new(); self.arc_count];
        for c in &self.crossings {
            let last = c.arcs().into_iter().max().expect("three arcs");
            ready[last].push(*c);
        }
        let mut colors = vec![0u64; self.arc_count];
        let arcs = count_assignments(&ready, &mut colors, 0, p);
        Ok(arcs * p.pow(self.free_circles as u32))
    }

    /// Determinant of the link: `|minor|` of the coloring matrix with the last
    /// row and column removed. Split diagrams give 0, a lone circle gives 1.
    pub fn link_determinant(&self) -> BigUint {
        if self.split_pieces() >= 2 {
            return BigUint::zero();
        }
        if self.arc_count == 0 {
            return BigUint::one();
        }
        let m = self.coloring_matrix();
        if m.is_square() {
            let n = m.rows();
            let minor = m.minor_det(n - 1, n - 1).expect("square and nonempty");
            return minor.abs().to_biguint().expect("nonnegative");
        }
        // Non-square (an arc with no under-pass, say): the determinant is the
        // order of the torsion-plus-rank-deficit of the reduced coloring
        // group, i.e. the product of the first arcs−1 invariant factors.
        let factors = m.smith_normal_form();
        let needed = self.arc_count - 1;
        if factors.len() < needed {
            return BigUint::zero();
        }
        factors[..needed].iter().product()
    }
}

fn count_assignments(ready: &[Vec<Crossing>], colors: &mut [u64], k: usize, p: u64) -> u64 {
    if k == colors.len() {
        return 1;
    }
    let mut total = 0;
    for c in 0..p {
        colors[k] = c;
        let ok = ready[k].iter().all(|x| {
            let lhs = 2 * colors[x.over] as u128;
            let rhs = colors[x.under_a] as u128 + colors[x.under_b] as u128;
            (lhs + 2 * p as u128 - rhs) % p as u128 == 0
        });
        if ok {
            total += count_assignments(ready, colors, k + 1, p);
        }
    }
    total
}

/// A tangle on `width` strands: local arcs `0..width` are the incoming arcs,
/// higher ids are arcs created inside. `outputs[k]` is the local arc leaving
/// through slot `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    width: usize,
    arc_count: usize,
    crossings: Vec<Crossing>,
    outputs: Vec<usize>,
}

impl Pattern {
    pub fn new(width: usize, arc_count: usize, crossings: Vec<Crossing>, outputs: Vec<usize>) -> Result<Self> {
        if outputs.len() != width {
            return Err(Error::DimensionMismatch(outputs.len(), width));
        }
        if arc_count < width {
            return Err(Error::DimensionMismatch(arc_count, width));
        }
        let used = crossings.iter().flat_map(|c| c.arcs()).chain(outputs.iter().copied());
        for arc in used {
            if arc >= arc_count {
                return Err(Error::ArcOutOfRange { arc, arc_count });
            }
        }
        Ok(Pattern { width, arc_count, crossings, outputs })
    }

    /// The single crossing repeated to build `P(m,2)`: the first strand passes
    /// over the second, which comes out on top.
    pub fn twist() -> Self {
        Self::generator(2, 1).expect("σ1 on two strands")
    }

    /// Braid generator `σ_i` on `strands` strands (`1 ≤ i < strands`). The
    /// strand in position `i−1` crosses over the one in position `i`.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= strands {
            return Err(Error::GeneratorOutOfRange { letter: i, strands });
        }
        let fresh = strands;
        let mut outputs: Vec<usize> = (0..strands).collect();
        outputs[i - 1] = fresh;
        outputs[i] = i - 1;
        Ok(Pattern {
            width: strands,
            arc_count: strands + 1,
            crossings: vec![Crossing::new(i - 1, i, fresh)],
            outputs,
        })
    }

    /// The pattern on `n` strands (`n` odd, `n ≥ 3`) whose repetition builds
    /// `P(m,n)` for odd `mn`.
    ///
    /// With inputs `x_1..x_n` and `r = (n−1)/2`, it creates `y_1..y_{n−1}` and
    /// a short middle arc `w`:
    ///
    /// - `y_i = 2x_1 − x_{i+1}` for `i ∉ {r, r+1}`,
    /// - `y_{r+1} = 2x_1 − x_{r+1}`,
    /// - `w = 2x_{r+1} − x_{r+2}` and `y_r = 2x_1 − w`,
    ///
    /// and `x_1` leaves through the last slot. Local ids: `x_j ↦ j−1`,
    /// `y_i ↦ n+i−1`, `w ↦ 2n−1`.
    pub fn odd(n: usize) -> Result<Self> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::BadPatternWidth(n));
        }
        let x = |j: usize| j - 1;
        let y = |i: usize| n + i - 1;
        let w = 2 * n - 1;
        let r = (n - 1) / 2;
        let mut crossings = Vec::with_capacity(n);
        for i in (1..n).filter(|&i| i != r) {
            let incoming = if i == r + 1 { x(r + 1) } else { x(i + 1) };
            crossings.push(Crossing::new(x(1), incoming, y(i)));
        }
        crossings.push(Crossing::new(x(r + 1), x(r + 2), w));
        crossings.push(Crossing::new(x(1), w, y(r)));
        let mut outputs: Vec<usize> = (1..n).map(y).collect();
        outputs.push(x(1));
        Ok(Pattern { width: n, arc_count: 2 * n, crossings, outputs })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    /// The integer matrix sending incoming colors to outgoing colors, found by
    /// propagating the crossing relations from the inputs.
    ///
    /// Fails if some outgoing arc is not determined by the incoming ones.
    pub fn induced_transfer(&self) -> Result<IntMatrix> {
        let n = self.width;
        let mut known: Vec<Option<Vec<BigInt>>> = vec![None; self.arc_count];
        for (j, slot) in known.iter_mut().enumerate().take(n) {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            *slot = Some(e);
        }
        loop {
            let mut progress = false;
            for c in &self.crossings {
                let Some(over) = known[c.over].clone() else { continue };
                let (from, to) = match (&known[c.under_a], &known[c.under_b]) {
                    (Some(_), None) => (c.under_a, c.under_b),
                    (None, Some(_)) => (c.under_b, c.under_a),
                    _ => continue,
                };
                let from = known[from].as_ref().expect("known under-arc");
                let derived = over.iter().zip(from).map(|(o, f)| 2 * o - f).collect();
                known[to] = Some(derived);
                progress = true;
            }
            if !progress {
                break;
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for &out in &self.outputs {
            let row = known[out]
                .as_ref()
                .ok_or(Error::BadParameters("pattern outputs are not determined by its inputs"))?;
            entries.extend(row.iter().cloned());
        }
        IntMatrix::new(n, n, entries)
    }

    /// `reps` copies of this pattern joined in a ring.
    pub fn closure(&self, reps: usize) -> RelationSystem {
        close_sequence(self.width, core::iter::repeat_n(self, reps))
            .expect("copies of one pattern share a width")
    }
}

/// Stacks the patterns left to right and closes the result into a ring.
///
/// Arc ids of the resulting system follow first appearance in the crossing
/// list; closed strands that meet no crossing become free circles.
pub fn close_sequence<'a, I>(width: usize, patterns: I) -> Result<RelationSystem>
where
    I: IntoIterator<Item = &'a Pattern>,
{
    let mut slots: Vec<usize> = (0..width).collect();
    let mut next = width;
    let mut raw: Vec<Crossing> = Vec::new();
    for pat in patterns {
        if pat.width != width {
            return Err(Error::DimensionMismatch(pat.width, width));
        }
        let global: Vec<usize> = (0..pat.arc_count)
            .map(|local| {
                if local < width {
                    slots[local]
                } else {
                    next + local - width
                }
            })
            .collect();
        next += pat.arc_count - width;
        raw.extend(
            pat.crossings
                .iter()
                .map(|c| Crossing::new(global[c.over], global[c.under_a], global[c.under_b])),
        );
        slots = pat.outputs.iter().map(|&o| global[o]).collect();
    }
    let mut uf = UnionFind::new(next);
    for (k, &s) in slots.iter().enumerate() {
        uf.union(k, s);
    }
    let mut ids: Vec<Option<usize>> = vec![None; next];
    let mut arc_count = 0;
    let mut crossings = Vec::with_capacity(raw.len());
    for c in &raw {
        let mut canon = |arc: usize| {
            let root = uf.find(arc);
            *ids[root].get_or_insert_with(|| {
                arc_count += 1;
                arc_count - 1
            })
        };
        let over = canon(c.over);
        let under_a = canon(c.under_a);
        let under_b = canon(c.under_b);
        crossings.push(Crossing::new(over, under_a, under_b));
    }
    let mut loose: Vec<usize> = (0..next).map(|a| uf.find(a)).filter(|&r| ids[r].is_none()).collect();
    loose.sort_unstable();
    loose.dedup();
    RelationSystem::new(arc_count, crossings, loose.len())
}

/// A braid word on `strands` strands with unsigned generators `σ_i`,
/// `1 ≤ i < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= strands) {
            return Err(Error::GeneratorOutOfRange { letter, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// `(σ_1 σ_2 … σ_{v−1})^u` on `v` strands, whose closure is `T(u,v)`.
    pub fn torus(u: usize, v: usize) -> Result<Self> {
        if v == 0 {
            return Err(Error::NoStrands);
        }
        let letters = (0..u).flat_map(|_| 1..v).collect();
        Self::new(v, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Relation system of the braid closure.
    pub fn relations(&self) -> RelationSystem {
        let gens: Vec<Pattern> = (1..self.strands)
            .map(|i| Pattern::generator(self.strands, i).expect("in range"))
            .collect();
        close_sequence(self.strands, self.letters.iter().map(|&l| &gens[l - 1]))
            .expect("generators share the braid width")
    }
}

/// A diagram of the paradromic ring `P(m,n)`.
///
/// `n = 1` is a single circle; for even `mn` it is the closure of the torus
/// braid `T(mn/2, n)`; for odd `mn` it is `m(n−1)/2` copies of
/// [`Pattern::odd`] joined in a ring.
pub fn paradrome_relations(m: usize, n: usize) -> Result<RelationSystem> {
    match n {
        0 => Err(Error::BadParameters("P(m,n) needs n ≥ 1")),
        1 => Ok(RelationSystem::circles(1)),
        _ if (m * n).is_even() => Ok(BraidWord::torus(m * n / 2, n)?.relations()),
        _ => Ok(Pattern::odd(n)?.closure(m * (n - 1) / 2)),
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
