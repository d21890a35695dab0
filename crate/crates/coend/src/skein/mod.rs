//! Temperley-Lieb diagram algebra at loop value delta = -(q + q^-1),
//! Jones-Wenzl projectors, Kauffman bracket crossing resolution, and closed
//! colored-network evaluation.
//!
//! Diagrams are read from top to bottom: a tangle's top boundary is its
//! source, the bottom its target. `compose(f, g)` stacks `g` above `f`.

pub mod network;

use crate::cyclotomic::{CycField, CycNum};
use dashmap::DashMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SkeinError {
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("network is not closed: bottom boundary {bottom:?} vs top boundary {top:?}")]
    NotClosed { bottom: Vec<usize>, top: Vec<usize> },
    #[error("{0} out of range: {1} (level r = {2})")]
    OutOfRange(&'static str, usize, usize),
}

/// An arc endpoint as (side, geometric position): side 0 is the bottom
/// boundary, side 1 the top, positions counted left to right.
pub type ArcPoint = (u8, usize);

/// A planar (n_bottom, n_top)-tangle: a noncrossing perfect matching on the
/// boundary points. Boundary points are indexed cyclically: bottom points
/// left to right, then top points right to left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TLDiagram {
    n_bottom: usize,
    n_top: usize,
    /// partner[i] = the point matched with boundary point i.
    partner: Vec<u32>,
}

impl fmt::Debug for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TL({},{};{:?})", self.n_bottom, self.n_top, self.partner)
    }
}

impl TLDiagram {
    /// Cyclic index of the bottom point at geometric position i (left to right).
    #[inline]
    fn bottom_idx(&self, i: usize) -> usize {
        i
    }

    /// Cyclic index of the top point at geometric position i (left to right).
    #[inline]
    fn top_idx(&self, i: usize) -> usize {
        self.n_bottom + (self.n_top - 1 - i)
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    /// Build a diagram from geometric arc descriptions, validating that the
    /// pairing is a planar perfect matching.
    pub fn new(
        n_bottom: usize,
        n_top: usize,
        arcs: &[(ArcPoint, ArcPoint)],
    ) -> Result<TLDiagram, SkeinError> {
        let total = n_bottom + n_top;
        if !total.is_multiple_of(2) || arcs.len() * 2 != total {
            return Err(SkeinError::BoundaryMismatch(format!(
                "{} arcs cannot match {} boundary points",
                arcs.len(),
                total
            )));
        }
        let mut d = TLDiagram {
            n_bottom,
            n_top,
            partner: vec![u32::MAX; total],
        };
        let idx = |d: &TLDiagram, (side, pos): (u8, usize)| -> Result<usize, SkeinError> {
            let limit = if side == 0 { n_bottom } else { n_top };
            if pos >= limit {
                return Err(SkeinError::BoundaryMismatch(format!(
                    "point ({}, {}) outside boundary",
                    side, pos
                )));
            }
            Ok(if side == 0 {
                d.bottom_idx(pos)
            } else {
                d.top_idx(pos)
            })
        };
        for &(a, b) in arcs {
            let ia = idx(&d, a)?;
            let ib = idx(&d, b)?;
            if ia == ib || d.partner[ia] != u32::MAX || d.partner[ib] != u32::MAX {
                return Err(SkeinError::BoundaryMismatch(
                    "pairing is not a perfect matching".into(),
                ));
            }
            d.partner[ia] = ib as u32;
            d.partner[ib] = ia as u32;
        }
        if !d.is_planar() {
            return Err(SkeinError::BoundaryMismatch(
                "pairing is not planar".into(),
            ));
        }
        Ok(d)
    }

    /// The identity (n, n)-tangle.
    pub fn identity(n: usize) -> TLDiagram {
        let mut d = TLDiagram {
            n_bottom: n,
            n_top: n,
            partner: vec![0; 2 * n],
        };
        for i in 0..n {
            let b = d.bottom_idx(i);
            let t = d.top_idx(i);
            d.partner[b] = t as u32;
            d.partner[t] = b as u32;
        }
        d
    }

    /// Noncrossing check in the cyclic order (standard balanced-parenthesis
    /// stack scan).
    pub fn is_planar(&self) -> bool {
        let total = self.partner.len();
        let mut stack = Vec::with_capacity(total / 2);
        for i in 0..total {
            let p = self.partner[i] as usize;
            if p >= total {
                return false;
            }
            if p > i {
                stack.push(i);
            } else if stack.pop() != Some(p) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Stack `above` on top of `self`; returns the composed diagram and the
    /// number of closed loops removed.
    pub fn compose(&self, above: &TLDiagram) -> Result<(TLDiagram, usize), SkeinError> {
        if self.n_top != above.n_bottom {
            return Err(SkeinError::BoundaryMismatch(format!(
                "compose: top boundary {} vs bottom boundary {}",
                self.n_top, above.n_bottom
            )));
        }
        let m = self.n_top;
        let nb = self.n_bottom;
        let nt = above.n_top;

        // Outer nodes 0..nb+nt (result boundary), interface nodes after.
        // Map each diagram's cyclic indices to node ids.
        let f_node = |i: usize| -> usize {
            if i < nb {
                i // result bottom
            } else {
                // f top at geometric position g -> interface node
                let g = self.n_bottom + self.n_top - 1 - i;
                nb + nt + g
            }
        };
        let g_node = |i: usize| -> usize {
            if i < m {
                nb + nt + i // g bottom geometric i -> interface i
            } else {
                // g top at geometric position g -> result top
                let g = above.n_bottom + above.n_top - 1 - i;
                nb + (nt - 1 - g) // cyclic index of result top
            }
        };
        // adjacency: at every node at most one f-arc and one g-arc
        let total = nb + nt + m;
        let mut f_adj = vec![usize::MAX; total];
        let mut g_adj = vec![usize::MAX; total];
        for i in 0..self.partner.len() {
            let j = self.partner[i] as usize;
            f_adj[f_node(i)] = f_node(j);
        }
        for i in 0..above.partner.len() {
            let j = above.partner[i] as usize;
            g_adj[g_node(i)] = g_node(j);
        }

        let mut result = TLDiagram {
            n_bottom: nb,
            n_top: nt,
            partner: vec![u32::MAX; nb + nt],
        };
        let mut visited = vec![false; total];
        for start in 0..nb + nt {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            // outer nodes carry exactly one arc (from f if bottom, g if top)
            let mut prev_was_f = start >= nb; // top nodes first step uses g
            let mut cur = if start < nb {
                f_adj[start]
            } else {
                g_adj[start]
            };
            prev_was_f = !prev_was_f;
            while cur >= nb + nt {
                visited[cur] = true;
                cur = if prev_was_f { g_adj[cur] } else { f_adj[cur] };
                prev_was_f = !prev_was_f;
            }
            visited[cur] = true;
            result.partner[start] = cur as u32;
            result.partner[cur] = start as u32;
        }
        // remaining unvisited interface nodes form closed loops
        let mut loops = 0;
        for start in nb + nt..total {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut cur = start;
            let mut use_f = true;
            while !visited[cur] {
                visited[cur] = true;
                cur = if use_f { f_adj[cur] } else { g_adj[cur] };
                use_f = !use_f;
            }
        }
        debug_assert!(result.is_planar());
        Ok((result, loops))
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, right: &TLDiagram) -> TLDiagram {
        let nb = self.n_bottom + right.n_bottom;
        let nt = self.n_top + right.n_top;
        let mut out = TLDiagram {
            n_bottom: nb,
            n_top: nt,
            partner: vec![u32::MAX; nb + nt],
        };
        // geometric relabeling: left keeps positions, right shifts
        let map_left = |d: &TLDiagram, i: usize| -> usize {
            if i < d.n_bottom {
                i
            } else {
                let g = d.n_bottom + d.n_top - 1 - i;
                out.n_bottom + (out.n_top - 1 - g)
            }
        };
        let map_right = |d: &TLDiagram, i: usize| -> usize {
            if i < d.n_bottom {
                self.n_bottom + i
            } else {
                let g = d.n_bottom + d.n_top - 1 - i;
                out.n_bottom + (out.n_top - 1 - (self.n_top + g))
            }
        };
        for i in 0..self.partner.len() {
            let j = self.partner[i] as usize;
            let (a, b) = (map_left(self, i), map_left(self, j));
            out.partner[a] = b as u32;
            out.partner[b] = a as u32;
        }
        for i in 0..right.partner.len() {
            let j = right.partner[i] as usize;
            let (a, b) = (map_right(right, i), map_right(right, j));
            out.partner[a] = b as u32;
            out.partner[b] = a as u32;
        }
        debug_assert!(out.is_planar());
        out
    }

    /// Loop count of the Markov closure (bottom point i joined to top point i
    /// around the side); requires n_bottom = n_top.
    pub fn closure_loops(&self) -> usize {
        assert_eq!(self.n_bottom, self.n_top);
        let total = self.partner.len();
        let mut visited = vec![false; total];
        let trace_partner = |i: usize| -> usize {
            if i < self.n_bottom {
                self.top_idx(i)
            } else {
                let g = self.n_bottom + self.n_top - 1 - i;
                self.bottom_idx(g)
            }
        };
        let mut loops = 0;
        for start in 0..total {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut cur = start;
            let mut use_arc = true;
            while !visited[cur] {
                visited[cur] = true;
                cur = if use_arc {
                    self.partner[cur] as usize
                } else {
                    trace_partner(cur)
                };
                use_arc = !use_arc;
            }
        }
        loops
    }
}

/// A formal linear combination of planar tangles with a fixed boundary,
/// coefficients in Q(zeta_N). Zero coefficients are never stored.
#[derive(Clone)]
pub struct TLElement {
    field: Arc<CycField>,
    n_bottom: usize,
    n_top: usize,
    terms: HashMap<TLDiagram, CycNum>,
}

impl PartialEq for TLElement {
    fn eq(&self, other: &Self) -> bool {
        self.n_bottom == other.n_bottom
            && self.n_top == other.n_top
            && self.terms == other.terms
    }
}
impl Eq for TLElement {}

impl fmt::Debug for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TLElement({},{}; {} terms)",
            self.n_bottom,
            self.n_top,
            self.terms.len()
        )
    }
}

impl TLElement {
    pub fn zero(field: &Arc<CycField>, n_bottom: usize, n_top: usize) -> TLElement {
        TLElement {
            field: field.clone(),
            n_bottom,
            n_top,
            terms: HashMap::new(),
        }
    }

    pub fn from_diagram(field: &Arc<CycField>, d: TLDiagram, coeff: CycNum) -> TLElement {
        let mut e = TLElement::zero(field, d.n_bottom, d.n_top);
        e.add_term(d, coeff);
        e
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> TLElement {
        TLElement::from_diagram(field, TLDiagram::identity(n), field.one())
    }

    /// The empty tangle with coefficient one (monoidal unit, scalar one).
    pub fn empty(field: &Arc<CycField>) -> TLElement {
        TLElement::identity(field, 0)
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &CycNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn add_term(&mut self, d: TLDiagram, coeff: CycNum) {
        debug_assert_eq!((d.n_bottom, d.n_top), (self.n_bottom, self.n_top));
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &TLElement) -> TLElement {
        assert_eq!((self.n_bottom, self.n_top), (other.n_bottom, other.n_top));
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &CycNum) -> TLElement {
        if c.is_zero() {
            return TLElement::zero(&self.field, self.n_bottom, self.n_top);
        }
        let mut out = TLElement::zero(&self.field, self.n_bottom, self.n_top);
        for (d, t) in &self.terms {
            out.add_term(d.clone(), t * c);
        }
        out
    }

    /// Stack `above` on top of `self`; closed loops contribute factors of
    /// delta, supplied by the caller as successive powers.
    pub fn compose(&self, above: &TLElement, delta_pows: &[CycNum]) -> Result<TLElement, SkeinError> {
        if self.n_top != above.n_bottom {
            return Err(SkeinError::BoundaryMismatch(format!(
                "compose: top boundary {} vs bottom boundary {}",
                self.n_top, above.n_bottom
            )));
        }
        let mut out = TLElement::zero(&self.field, self.n_bottom, above.n_top);
        for (df, cf) in &self.terms {
            for (dg, cg) in &above.terms {
                let (d, loops) = df.compose(dg)?;
                let mut c = cf * cg;
                if loops > 0 {
                    c = &c * &delta_power(delta_pows, loops);
                }
                out.add_term(d, c);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, right: &TLElement) -> TLElement {
        let mut out = TLElement::zero(
            &self.field,
            self.n_bottom + right.n_bottom,
            self.n_top + right.n_top,
        );
        for (df, cf) in &self.terms {
            for (dg, cg) in &right.terms {
                out.add_term(df.tensor(dg), cf * cg);
            }
        }
        out
    }

    /// Markov closure: join bottom point i to top point i around the side;
    /// every resulting loop contributes a delta factor.
    pub fn markov_close(&self, delta_pows: &[CycNum]) -> Result<CycNum, SkeinError> {
        if self.n_bottom != self.n_top {
            return Err(SkeinError::NotClosed {
                bottom: vec![self.n_bottom],
                top: vec![self.n_top],
            });
        }
        let mut acc = self.field.zero();
        for (d, c) in &self.terms {
            let loops = d.closure_loops();
            acc = &acc + &(c * &delta_power(delta_pows, loops));
        }
        Ok(acc)
    }

    /// Coefficient of the empty diagram in a (0,0)-element.
    pub fn scalar_part(&self) -> CycNum {
        assert_eq!((self.n_bottom, self.n_top), (0, 0));
        self.terms
            .values()
            .next()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }
}

fn delta_power(delta_pows: &[CycNum], k: usize) -> CycNum {
    if k < delta_pows.len() {
        return delta_pows[k].clone();
    }
    let mut acc = delta_pows[delta_pows.len() - 1].clone();
    for _ in delta_pows.len() - 1..k {
        acc = &acc * &delta_pows[1];
    }
    acc
}

/// Shared evaluation context at level r: the field Q(zeta_4r), the loop value
/// delta = -(q + q^-1), and write-once caches for Jones-Wenzl projectors and
/// colored generator expansions. Caches may race on insert; all writers store
/// identical values.
pub struct Skein {
    field: Arc<CycField>,
    r: usize,
    delta_pows: Vec<CycNum>,
    jw_cache: DashMap<usize, Arc<TLElement>>,
    vertex_cache: DashMap<(usize, usize, usize, bool), Arc<TLElement>>,
    cup_cache: DashMap<(usize, bool), Arc<TLElement>>,
    cross_cache: DashMap<(usize, usize, i8), Arc<TLElement>>,
}

impl Skein {
    pub fn new(r: usize) -> Result<Arc<Skein>, SkeinError> {
        if r < 2 {
            return Err(SkeinError::OutOfRange("level", r, r));
        }
        let field = CycField::for_level(r).expect("r >= 2");
        // delta = -(q + q^-1), q = zeta^2
        let delta = -&(&field.zeta_pow(2) + &field.zeta_pow(-2));
        // powers up to the largest loop count any desk-scale contraction hits
        let max_pow = 16 * r;
        let mut delta_pows = Vec::with_capacity(max_pow + 1);
        delta_pows.push(field.one());
        for k in 1..=max_pow {
            delta_pows.push(&delta_pows[k - 1] * &delta);
        }
        Ok(Arc::new(Skein {
            field,
            r,
            delta_pows,
            jw_cache: DashMap::new(),
            vertex_cache: DashMap::new(),
            cup_cache: DashMap::new(),
            cross_cache: DashMap::new(),
        }))
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn level(&self) -> usize {
        self.r
    }

    pub fn delta(&self) -> &CycNum {
        &self.delta_pows[1]
    }

    pub fn delta_pows(&self) -> &[CycNum] {
        &self.delta_pows
    }

    pub fn compose(&self, below: &TLElement, above: &TLElement) -> Result<TLElement, SkeinError> {
        below.compose(above, &self.delta_pows)
    }

    /// The Jones-Wenzl idempotent on n strands, memoized per (r, n).
    ///
    /// Built by the recursion P_{n+1} = P_n (x) 1 + ([n]/[n+1]) (P_n (x) 1)
    /// e_n (P_n (x) 1), which with loop value -(q+q^-1) is the unique
    /// idempotent killed by all cups and caps.
    pub fn jones_wenzl(&self, n: usize) -> Result<Arc<TLElement>, SkeinError> {
        if n > self.r - 1 {
            return Err(SkeinError::OutOfRange("jones_wenzl strand count", n, self.r));
        }
        if let Some(p) = self.jw_cache.get(&n) {
            return Ok(p.clone());
        }
        let value = if n == 0 {
            Arc::new(TLElement::empty(&self.field))
        } else if n == 1 {
            Arc::new(TLElement::identity(&self.field, 1))
        } else {
            let prev = self.jones_wenzl(n - 1)?;
            let pn1 = prev.tensor(&TLElement::identity(&self.field, 1));
            // e_{n-1} on n strands: join bottom pair and top pair at the right
            let mut arcs: Vec<((u8, usize), (u8, usize))> = Vec::new();
            for i in 0..n - 2 {
                arcs.push(((0, i), (1, i)));
            }
            arcs.push(((0, n - 2), (0, n - 1)));
            arcs.push(((1, n - 2), (1, n - 1)));
            let e = TLElement::from_diagram(
                &self.field,
                TLDiagram::new(n, n, &arcs).expect("e generator is planar"),
                self.field.one(),
            );
            let t = self.compose(&pn1, &e)?;
            let t = self.compose(&t, &pn1)?;
            let k = (n - 1) as i64;
            let coeff = &self.field.quantum_int(k)
                * &self
                    .field
                    .quantum_int(k + 1)
                    .invert()
                    .expect("[k] nonzero for k <= r-1");
            Arc::new(pn1.add(&t.scale(&coeff)))
        };
        Ok(self
            .jw_cache
            .entry(n)
            .or_insert(value)
            .clone())
    }

    /// Kauffman bracket resolution of a single crossing on two strands:
    /// positive sign gives A id + A^-1 e, negative swaps A and A^-1.
    pub fn resolve_crossing(&self, sign: i8) -> TLElement {
        let a = self.field.zeta_pow(if sign >= 0 { 1 } else { -1 });
        let a_inv = self.field.zeta_pow(if sign >= 0 { -1 } else { 1 });
        let id2 = TLElement::identity(&self.field, 2);
        let e = TLElement::from_diagram(
            &self.field,
            TLDiagram::new(2, 2, &[((0, 0), (0, 1)), ((1, 0), (1, 1))]).unwrap(),
            self.field.one(),
        );
        id2.scale(&a).add(&e.scale(&a_inv))
    }
}
