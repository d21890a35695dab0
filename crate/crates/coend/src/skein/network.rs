//! Closed colored trivalent networks as layered compositions of generators,
//! and their evaluation to exact scalars.
//!
//! Layers are listed from the bottom of the diagram upward, so a closed
//! network has an empty bottom boundary on its first layer and an empty top
//! boundary on its last. Every color-c edge expands into c parallel strands
//! routed through the Jones-Wenzl projector P_c; a vertex expands into the
//! standard projector-dressed splitting with internal strand counts
//! i = (a+b-c)/2, j = (a+c-b)/2, k = (b+c-a)/2. A diagram containing a
//! non-admissible vertex evaluates to zero by convention.

use super::{Skein, SkeinError, TLDiagram, TLElement};
use crate::cyclotomic::CycNum;
use std::sync::Arc;

/// Admissibility of a vertex triple: parity, quantum triangle inequality,
/// and non-negligibility a+b+c <= 2r-4.
pub fn admissible_triple(r: usize, a: usize, b: usize, c: usize) -> bool {
    (a + b + c).is_multiple_of(2)
        && a + b >= c
        && b + c >= a
        && c + a >= b
        && a + b + c + 4 <= 2 * r
}

/// One box in a layer. Colors are integers in 0..=r-2; `Jw(n)` acts on n
/// bare strands (color-1 legs) and allows n up to r-1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Id(usize),
    /// Creation arc: no legs above, two color-c legs below.
    Cup(usize),
    /// Annihilation arc: two color-c legs above, none below.
    Cap(usize),
    /// Split the top color into (left, right), reading downward.
    Vertex { top: usize, left: usize, right: usize },
    /// Merge (left, right) into the bottom color, reading downward.
    Covertex { left: usize, right: usize, bottom: usize },
    /// Colored crossing with a sign; top legs [c1, c2], bottom legs [c2, c1].
    Cross { c1: usize, c2: usize, sign: i8 },
    Jw(usize),
}

impl Generator {
    pub fn top_colors(&self) -> Vec<usize> {
        match *self {
            Generator::Id(c) => vec![c],
            Generator::Cup(_) => vec![],
            Generator::Cap(c) => vec![c, c],
            Generator::Vertex { top, .. } => vec![top],
            Generator::Covertex { left, right, .. } => vec![left, right],
            Generator::Cross { c1, c2, .. } => vec![c1, c2],
            Generator::Jw(n) => vec![1; n],
        }
    }

    pub fn bottom_colors(&self) -> Vec<usize> {
        match *self {
            Generator::Id(c) => vec![c],
            Generator::Cup(c) => vec![c, c],
            Generator::Cap(_) => vec![],
            Generator::Vertex { left, right, .. } => vec![left, right],
            Generator::Covertex { bottom, .. } => vec![bottom],
            Generator::Cross { c1, c2, .. } => vec![c2, c1],
            Generator::Jw(n) => vec![1; n],
        }
    }

    fn max_color(&self) -> usize {
        match *self {
            Generator::Id(c) | Generator::Cup(c) | Generator::Cap(c) => c,
            Generator::Vertex { top, left, right } => top.max(left).max(right),
            Generator::Covertex { left, right, bottom } => left.max(right).max(bottom),
            Generator::Cross { c1, c2, .. } => c1.max(c2),
            Generator::Jw(_) => 1,
        }
    }
}

/// A network as a sequence of parallel generator lists, bottom layer first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkSpec {
    pub layers: Vec<Vec<Generator>>,
}

fn width(colors: &[usize]) -> usize {
    colors.iter().sum()
}

impl NetworkSpec {
    pub fn new(layers: Vec<Vec<Generator>>) -> NetworkSpec {
        NetworkSpec { layers }
    }

    pub fn layer_top_colors(layer: &[Generator]) -> Vec<usize> {
        layer.iter().flat_map(|g| g.top_colors()).collect()
    }

    pub fn layer_bottom_colors(layer: &[Generator]) -> Vec<usize> {
        layer.iter().flat_map(|g| g.bottom_colors()).collect()
    }

    /// The network's outer (bottom, top) color lists.
    pub fn boundary(&self) -> (Vec<usize>, Vec<usize>) {
        match (self.layers.first(), self.layers.last()) {
            (Some(b), Some(t)) => (
                Self::layer_bottom_colors(b),
                Self::layer_top_colors(t),
            ),
            _ => (vec![], vec![]),
        }
    }

    /// Check color ranges and that adjacent layers agree on their shared
    /// boundary.
    pub fn validate(&self, r: usize) -> Result<(), SkeinError> {
        for layer in &self.layers {
            for g in layer {
                if let Generator::Jw(n) = g {
                    if *n > r - 1 {
                        return Err(SkeinError::OutOfRange("jw strand count", *n, r));
                    }
                } else if g.max_color() + 2 > r {
                    return Err(SkeinError::OutOfRange("color", g.max_color(), r));
                }
            }
        }
        for k in 0..self.layers.len().saturating_sub(1) {
            let below_top = Self::layer_top_colors(&self.layers[k]);
            let above_bottom = Self::layer_bottom_colors(&self.layers[k + 1]);
            if below_top != above_bottom {
                return Err(SkeinError::BoundaryMismatch(format!(
                    "layer {} top {:?} vs layer {} bottom {:?}",
                    k,
                    below_top,
                    k + 1,
                    above_bottom
                )));
            }
        }
        Ok(())
    }

    fn has_inadmissible_vertex(&self, r: usize) -> bool {
        self.layers.iter().flatten().any(|g| match *g {
            Generator::Vertex { top, left, right } => !admissible_triple(r, top, left, right),
            Generator::Covertex { left, right, bottom } => {
                !admissible_triple(r, bottom, left, right)
            }
            _ => false,
        })
    }
}

impl Skein {
    /// Bare nested arcs: creation of 2c strands (no legs above).
    fn bare_cup(&self, c: usize) -> TLElement {
        let arcs: Vec<_> = (0..c).map(|m| ((0u8, m), (0u8, 2 * c - 1 - m))).collect();
        TLElement::from_diagram(
            self.field(),
            TLDiagram::new(2 * c, 0, &arcs).expect("nested arcs are planar"),
            self.field().one(),
        )
    }

    fn bare_cap(&self, c: usize) -> TLElement {
        let arcs: Vec<_> = (0..c).map(|m| ((1u8, m), (1u8, 2 * c - 1 - m))).collect();
        TLElement::from_diagram(
            self.field(),
            TLDiagram::new(0, 2 * c, &arcs).expect("nested arcs are planar"),
            self.field().one(),
        )
    }

    /// Colored creation arc: projectors on both color-c legs below the arcs.
    pub fn cup_element(&self, c: usize) -> Result<Arc<TLElement>, SkeinError> {
        if let Some(e) = self.cup_cache.get(&(c, false)) {
            return Ok(e.clone());
        }
        let p = self.jones_wenzl(c)?;
        let pp = p.tensor(&p);
        let value = Arc::new(self.compose(&pp, &self.bare_cup(c))?);
        Ok(self.cup_cache.entry((c, false)).or_insert(value).clone())
    }

    /// Colored annihilation arc: projectors on both color-c legs above the arcs.
    pub fn cap_element(&self, c: usize) -> Result<Arc<TLElement>, SkeinError> {
        if let Some(e) = self.cup_cache.get(&(c, true)) {
            return Ok(e.clone());
        }
        let p = self.jones_wenzl(c)?;
        let pp = p.tensor(&p);
        let value = Arc::new(self.compose(&self.bare_cap(c), &pp)?);
        Ok(self.cup_cache.entry((c, true)).or_insert(value).clone())
    }

    /// The projector-dressed trivalent splitting of `top` into (`left`,
    /// `right`), assuming the triple is admissible.
    pub fn vertex_element(
        &self,
        top: usize,
        left: usize,
        right: usize,
    ) -> Result<Arc<TLElement>, SkeinError> {
        let key = (top, left, right, false);
        if let Some(e) = self.vertex_cache.get(&key) {
            return Ok(e.clone());
        }
        let value = Arc::new(self.build_vertex(top, left, right, false)?);
        Ok(self.vertex_cache.entry(key).or_insert(value).clone())
    }

    /// The mirror merge of (`left`, `right`) into `bottom`.
    pub fn covertex_element(
        &self,
        left: usize,
        right: usize,
        bottom: usize,
    ) -> Result<Arc<TLElement>, SkeinError> {
        let key = (bottom, left, right, true);
        if let Some(e) = self.vertex_cache.get(&key) {
            return Ok(e.clone());
        }
        let value = Arc::new(self.build_vertex(bottom, left, right, true)?);
        Ok(self.vertex_cache.entry(key).or_insert(value).clone())
    }

    fn build_vertex(
        &self,
        a: usize,
        b: usize,
        c: usize,
        mirrored: bool,
    ) -> Result<TLElement, SkeinError> {
        assert!(
            admissible_triple(self.level(), a, b, c),
            "vertex expansion requires an admissible triple"
        );
        let i = (a + b - c) / 2;
        let j = (a + c - b) / 2;
        let k = (b + c - a) / 2;
        // wiring from a strands (top) to b + c strands (bottom):
        // i straight on the left, j straight on the right, k nested arcs
        // between the two groups
        let mut arcs: Vec<((u8, usize), (u8, usize))> = Vec::new();
        for t in 0..i {
            arcs.push(((1, t), (0, t)));
        }
        for t in 0..j {
            arcs.push(((1, i + t), (0, b + k + t)));
        }
        for m in 0..k {
            arcs.push(((0, i + m), (0, b + k - 1 - m)));
        }
        let w = TLElement::from_diagram(
            self.field(),
            TLDiagram::new(b + c, a, &arcs).expect("vertex wiring is planar"),
            self.field().one(),
        );
        let pa = self.jones_wenzl(a)?;
        let pb = self.jones_wenzl(b)?;
        let pc = self.jones_wenzl(c)?;
        let pbc = pb.tensor(&pc);
        let split = self.compose(&self.compose(&pbc, &w)?, &pa)?;
        if !mirrored {
            return Ok(split);
        }
        // mirror: merge (b, c) into a, i.e. flip the wiring upside down
        let mut arcs: Vec<((u8, usize), (u8, usize))> = Vec::new();
        for t in 0..i {
            arcs.push(((0, t), (1, t)));
        }
        for t in 0..j {
            arcs.push(((0, i + t), (1, b + k + t)));
        }
        for m in 0..k {
            arcs.push(((1, i + m), (1, b + k - 1 - m)));
        }
        let w = TLElement::from_diagram(
            self.field(),
            TLDiagram::new(a, b + c, &arcs).expect("vertex wiring is planar"),
            self.field().one(),
        );
        let merge = self.compose(&self.compose(&pa, &w)?, &pbc)?;
        Ok(merge)
    }

    /// Colored crossing of a c1 bundle with a c2 bundle, each elementary
    /// crossing resolved by the Kauffman bracket.
    pub fn cross_element(
        &self,
        c1: usize,
        c2: usize,
        sign: i8,
    ) -> Result<Arc<TLElement>, SkeinError> {
        let sign = if sign >= 0 { 1 } else { -1 };
        let key = (c1, c2, sign);
        if let Some(e) = self.cross_cache.get(&key) {
            return Ok(e.clone());
        }
        let n = c1 + c2;
        let p1 = self.jones_wenzl(c1)?;
        let p2 = self.jones_wenzl(c2)?;
        let mut acc = p2.tensor(&p1); // bottom projectors: colors [c2, c1]
        let sigma = self.resolve_crossing(sign);
        // block transposition word, built bottom-up (reverse reading order)
        for y in (0..c2).rev() {
            for x in 0..c1 {
                let pos = x + y;
                let layer = TLElement::identity(self.field(), pos)
                    .tensor(&sigma)
                    .tensor(&TLElement::identity(self.field(), n - pos - 2));
                acc = self.compose(&acc, &layer)?;
            }
        }
        let value = Arc::new(self.compose(&acc, &p1.tensor(&p2))?);
        Ok(self.cross_cache.entry(key).or_insert(value).clone())
    }

    pub fn generator_element(&self, g: &Generator) -> Result<Arc<TLElement>, SkeinError> {
        match *g {
            Generator::Id(c) | Generator::Jw(c) => self.jones_wenzl(c),
            Generator::Cup(c) => self.cup_element(c),
            Generator::Cap(c) => self.cap_element(c),
            Generator::Vertex { top, left, right } => self.vertex_element(top, left, right),
            Generator::Covertex { left, right, bottom } => {
                self.covertex_element(left, right, bottom)
            }
            Generator::Cross { c1, c2, sign } => self.cross_element(c1, c2, sign),
        }
    }

    /// Evaluate a closed (or trace-closable) network to a scalar.
    ///
    /// The layers are composed bottom to top, one generator at a time. If the
    /// outer boundaries are both empty the scalar is returned directly; if
    /// they are equal nonempty color lists, the result is the Markov closure
    /// (trace); otherwise the network is not closed.
    pub fn evaluate_network(&self, spec: &NetworkSpec) -> Result<CycNum, SkeinError> {
        spec.validate(self.level())?;
        let (bottom, top) = spec.boundary();
        if bottom != top {
            return Err(SkeinError::NotClosed { bottom, top });
        }
        if spec.has_inadmissible_vertex(self.level()) {
            return Ok(self.field().zero());
        }
        let mut acc = TLElement::identity(self.field(), width(&bottom));
        for layer in &spec.layers {
            let old_top = acc.n_top();
            let mut consumed = 0;
            let mut produced = 0;
            for g in layer {
                let elem = self.generator_element(g)?;
                let gb = width(&g.bottom_colors());
                let gt = width(&g.top_colors());
                let right = old_top - consumed - gb;
                let padded = TLElement::identity(self.field(), produced)
                    .tensor(&elem)
                    .tensor(&TLElement::identity(self.field(), right));
                acc = self.compose(&acc, &padded)?;
                consumed += gb;
                produced += gt;
            }
            if consumed != old_top {
                return Err(SkeinError::BoundaryMismatch(format!(
                    "layer consumes {} strands of {}",
                    consumed, old_top
                )));
            }
        }
        if bottom.is_empty() {
            Ok(acc.scalar_part())
        } else {
            acc.markov_close(self.delta_pows())
        }
    }

    /// Convenience wrapper: an unknot colored n.
    pub fn colored_loop(&self, n: usize) -> Result<CycNum, SkeinError> {
        self.evaluate_network(&NetworkSpec::new(vec![
            vec![Generator::Cap(n)],
            vec![Generator::Cup(n)],
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::Skein;

    fn quantum_dim(s: &Skein, n: usize) -> CycNum {
        let mut d = s.field().quantum_int(n as i64 + 1);
        if n % 2 == 1 {
            d = -&d;
        }
        d
    }

    #[test]
    fn colored_loop_is_quantum_dimension() {
        for r in 2..=5 {
            let s = Skein::new(r).unwrap();
            for n in 0..=r - 2 {
                assert_eq!(s.colored_loop(n).unwrap(), quantum_dim(&s, n));
            }
        }
    }

    #[test]
    fn theta_with_a_zero_edge_degenerates_to_a_loop() {
        let s = Skein::new(5).unwrap();
        for a in 0..=3 {
            let spec = NetworkSpec::new(vec![
                vec![Generator::Cap(a)],
                vec![
                    Generator::Covertex {
                        left: a,
                        right: 0,
                        bottom: a,
                    },
                    Generator::Id(a),
                ],
                vec![
                    Generator::Vertex {
                        top: a,
                        left: a,
                        right: 0,
                    },
                    Generator::Id(a),
                ],
                vec![Generator::Cup(a)],
            ]);
            assert_eq!(s.evaluate_network(&spec).unwrap(), quantum_dim(&s, a));
        }
    }

    #[test]
    fn inadmissible_vertex_evaluates_to_zero() {
        let s = Skein::new(4).unwrap();
        // (2,2,2) violates non-negligibility at r = 4
        let spec = NetworkSpec::new(vec![
            vec![Generator::Cap(2)],
            vec![
                Generator::Covertex {
                    left: 2,
                    right: 2,
                    bottom: 2,
                },
                Generator::Id(2),
            ],
            vec![
                Generator::Vertex {
                    top: 2,
                    left: 2,
                    right: 2,
                },
                Generator::Id(2),
            ],
            vec![Generator::Cup(2)],
        ]);
        assert!(s.evaluate_network(&spec).unwrap().is_zero());
    }

    #[test]
    fn not_closed_is_an_error() {
        let s = Skein::new(3).unwrap();
        let spec = NetworkSpec::new(vec![vec![Generator::Cup(1)], vec![Generator::Id(1)]]);
        assert!(matches!(
            s.evaluate_network(&spec),
            Err(SkeinError::BoundaryMismatch(_))
        ));
        let open = NetworkSpec::new(vec![vec![Generator::Cup(1)]]);
        assert!(matches!(
            s.evaluate_network(&open),
            Err(SkeinError::NotClosed { .. })
        ));
    }

    #[test]
    fn trace_closure_of_identity_strand() {
        let s = Skein::new(4).unwrap();
        for n in 0..=2 {
            let spec = NetworkSpec::new(vec![vec![Generator::Id(n)]]);
            assert_eq!(s.evaluate_network(&spec).unwrap(), quantum_dim(&s, n));
        }
    }

    #[test]
    fn reidemeister_two_inside_a_network() {
        let s = Skein::new(4).unwrap();
        let base = NetworkSpec::new(vec![
            vec![Generator::Cap(1)],
            vec![Generator::Id(1), Generator::Id(1)],
            vec![Generator::Cup(1)],
        ]);
        let with_kink = NetworkSpec::new(vec![
            vec![Generator::Cap(1)],
            vec![Generator::Cross {
                c1: 1,
                c2: 1,
                sign: 1,
            }],
            vec![Generator::Cross {
                c1: 1,
                c2: 1,
                sign: -1,
            }],
            vec![Generator::Cup(1)],
        ]);
        assert_eq!(
            s.evaluate_network(&base).unwrap(),
            s.evaluate_network(&with_kink).unwrap()
        );
    }

    #[test]
    fn colored_reidemeister_two() {
        let s = Skein::new(5).unwrap();
        let base = NetworkSpec::new(vec![
            vec![Generator::Id(2), Generator::Id(1)],
        ]);
        let with_kinks = NetworkSpec::new(vec![
            vec![Generator::Cross {
                c1: 2,
                c2: 1,
                sign: 1,
            }],
            vec![Generator::Cross {
                c1: 1,
                c2: 2,
                sign: -1,
            }],
        ]);
        assert_eq!(
            s.evaluate_network(&base).unwrap(),
            s.evaluate_network(&with_kinks).unwrap()
        );
    }

    #[test]
    fn empty_network_evaluates_to_one() {
        let s = Skein::new(3).unwrap();
        let spec = NetworkSpec::new(vec![]);
        assert!(s.evaluate_network(&spec).unwrap().is_one());
    }

    #[test]
    fn crossing_with_an_invisible_strand_is_the_identity() {
        let s = Skein::new(5).unwrap();
        for n in 0..=3 {
            let c = s.cross_element(0, n, 1).unwrap();
            assert_eq!(*c, *s.jones_wenzl(n).unwrap());
            let c = s.cross_element(n, 0, -1).unwrap();
            assert_eq!(*c, *s.jones_wenzl(n).unwrap());
        }
    }
}
