//! Self-duality data: the pairing of the algebra with its dual (identified
//! index-for-index), the canonical element, the dual basis, the pivotal
//! element, and the left Fourier transform.
//!
//! Two bases appear. The working basis is the theta-normalized double
//! tree e_(j,p,q,r,s); the matrix-unit basis of the endomorphism picture is
//! related to it by e_(j,p,q,r,s) = theta(j,r,s) E^(j)_{(p,q),(s,r)}, where
//! the matrix-unit indices are the admissible pairs and the bottom pair is
//! read in swapped order. The matrix-unit coordinates make composition and
//! trace Kronecker-diagonal, which is what the orthogonality relations, the
//! dual-basis property and the trace form of the Fourier transform refer to.

use super::{WhaData, WhaElement};
use crate::cyclotomic::linalg::{CycMatrix, LinalgError};
use crate::cyclotomic::CycNum;
use crate::recoupling::Color;
use crate::wha::verify::CheckResult;
use rayon::prelude::*;
use std::collections::HashMap;
use std::time::Instant;

pub struct SelfDuality {
    /// pairing matrix in the double-tree basis: p6[K][L] = <e_K; e-hat_L>
    p6: CycMatrix,
    /// canonical element coefficients in the double-tree basis:
    /// G(1) = sum g6[L][M] e-hat_L (x) e_M
    g6: CycMatrix,
    /// theta(j, r, s) per basis index (the normalization of the basis)
    theta_norm: Vec<CycNum>,
    /// basis index of the matrix-unit index swap (m and l exchanged)
    swap: Vec<u32>,
    /// the solved pivotal element and its inverse
    m: WhaElement,
    m_inv: WhaElement,
    /// left Fourier transform in matrix-unit coordinates
    phi_l: CycMatrix,
}

fn run(name: &str, f: impl FnOnce() -> Option<String>) -> CheckResult {
    let t0 = Instant::now();
    let witness = f();
    CheckResult {
        name: name.to_string(),
        passed: witness.is_none(),
        witness,
        millis: t0.elapsed().as_millis(),
    }
}

impl SelfDuality {
    pub fn build(h: &WhaData) -> Result<SelfDuality, LinalgError> {
        let rec = h.recoupler();
        let field = h.field();
        let dim = h.dim();

        let theta_norm: Vec<CycNum> = h
            .basis()
            .iter()
            .map(|b| rec.theta(b.j, b.r_, b.s))
            .collect();
        let swap: Vec<u32> = h
            .basis()
            .iter()
            .map(|b| h.basis_id(b.j, b.s, b.r_, b.q, b.p).expect("swap exists"))
            .collect();

        // pairing: <e^(j)_{p1 q1, r1 s1}; e-hat^(l)_{p2 q2, r2 s2}> =
        //   [p2=p1][q2=s1][r2=r1][s2=q1]
        //   theta(j,r1,s1) theta(l,r2,s2) {l s1 r1; j q1 p1}
        let p6 = CycMatrix::from_fn(field, dim, dim, |k, l| {
            let x = h.basis()[k];
            let y = h.basis()[l];
            if y.p != x.p || y.q != x.s || y.r_ != x.r_ || y.s != x.q {
                return field.zero();
            }
            let six = rec.sixj(y.j, x.s, x.r_, x.j, x.q, x.p);
            if six.is_zero() {
                return field.zero();
            }
            &(&rec.theta(x.j, x.r_, x.s) * &rec.theta(y.j, y.r_, y.s)) * &six
        });

        // canonical element: the flat tree of the display expands through
        // the recoupling move into the normalized dual basis, giving
        // G(1) = sum_{j,a,b,c,d,i} Delta_j {c d i; a b j} /
        //        (Delta_c theta(j,a,b) theta(j,c,d))
        //        e-hat_(i,a,d,c,b) (x) e_(j,a,b,c,d).
        // The triangle identities against the pairing pin this normalization
        // and are verified exactly by the suite.
        let mut g6 = CycMatrix::zeros(field, dim, dim);
        for (col, y) in h.basis().iter().enumerate() {
            let (j, a, b, c, d) = (y.j, y.p, y.q, y.r_, y.s);
            let denom = &(&rec.quantum_dim(c) * &rec.theta(j, a, b)) * &rec.theta(j, c, d);
            let denom_inv = denom.invert().expect("dimensions and thetas nonzero");
            let scale = &rec.quantum_dim(j) * &denom_inv;
            for i in rec.colors() {
                let six = rec.sixj(c, d, i, a, b, j);
                if six.is_zero() {
                    continue;
                }
                let row = h
                    .basis_id(i, a, d, c, b)
                    .expect("admissible by the nonzero 6j") as usize;
                let v = &scale * &six;
                *g6.at_mut(row, col) = g6.at(row, col) + &v;
            }
        }

        // pivotal element: solve <e_K; m-hat> = w(e_K) over the basis
        let w_col = CycMatrix::from_fn(field, dim, 1, |k, _| h.w_coeff(k as u32).clone());
        let m_col = p6.solve(&w_col)?;
        let m = WhaElement((0..dim).map(|k| m_col.at(k, 0).clone()).collect());
        // invert m in the algebra: solve (left multiplication by m) y = 1
        let lm = CycMatrix::from_fn(field, dim, dim, |i, k| {
            let mut acc = field.zero();
            for (x, c) in m.0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (t, v) in h.mu_terms(x as u32, k as u32) {
                    if *t as usize == i {
                        acc = &acc + &(c * v);
                    }
                }
            }
            acc
        });
        let eta_col = CycMatrix::from_fn(field, dim, 1, |k, _| h.eta_coeffs()[k].clone());
        let m_inv_col = lm.solve(&eta_col)?;
        let m_inv = WhaElement((0..dim).map(|k| m_inv_col.at(k, 0).clone()).collect());

        // left Fourier transform: solve T(g-hat, phi_L(f)) = <f; g-hat> with
        // T the composition-trace form, Kronecker-diagonal in matrix units:
        // T[A][B] = [B = swap(A)] / Delta_{j_A}
        let t_form = CycMatrix::from_fn(field, dim, dim, |a, b| {
            if swap[a] as usize == b {
                rec.quantum_dim(h.basis()[a].j)
                    .invert()
                    .expect("dimension nonzero")
            } else {
                field.zero()
            }
        });
        // P in matrix-unit coordinates: p_abs[K][L] = p6[K][L]/(theta_K theta_L)
        let p_abs = CycMatrix::from_fn(field, dim, dim, |k, l| {
            let v = p6.at(k, l);
            if v.is_zero() {
                return field.zero();
            }
            &(v * &theta_norm[k].invert().unwrap()) * &theta_norm[l].invert().unwrap()
        });
        // T phi = P^T  (columns of phi are the transforms of the basis)
        let phi_l = t_form.solve(&p_abs.transpose())?;

        Ok(SelfDuality {
            p6,
            g6,
            theta_norm,
            swap,
            m,
            m_inv,
            phi_l,
        })
    }

    pub fn pairing_matrix(&self) -> &CycMatrix {
        &self.p6
    }

    pub fn canonical_matrix(&self) -> &CycMatrix {
        &self.g6
    }

    pub fn pivotal_element(&self) -> &WhaElement {
        &self.m
    }

    pub fn pivotal_inverse(&self) -> &WhaElement {
        &self.m_inv
    }

    pub fn fourier_l(&self) -> &CycMatrix {
        &self.phi_l
    }

    /// The dual basis read off the canonical element, as columns over the
    /// normalized double-tree basis of the dual: G(1) = sum_M Edual_M (x) e_M.
    pub fn dual_basis_matrix(&self) -> CycMatrix {
        let field = self.p6.field();
        let dim = self.p6.rows();
        CycMatrix::from_fn(field, dim, dim, |l, m| {
            let v = self.g6.at(l, m);
            if v.is_zero() {
                field.zero()
            } else {
                v * &self.theta_norm[m]
            }
        })
    }

    /// <x; e-hat_L> for an arbitrary element x.
    pub fn pair_left(&self, x: &WhaElement, l: u32) -> CycNum {
        let field = self.p6.field();
        let mut acc = field.zero();
        for (k, c) in x.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = self.p6.at(k, l as usize);
            if !v.is_zero() {
                acc = &acc + &(c * v);
            }
        }
        acc
    }

    /// The matrix-unit-normalized pairing <E_K; E-hat_L>.
    fn p_abs(&self, k: usize, l: usize) -> CycNum {
        let v = self.p6.at(k, l);
        if v.is_zero() {
            return v.clone();
        }
        &(v * &self.theta_norm[k].invert().unwrap())
            * &self.theta_norm[l].invert().unwrap()
    }

    /// The matrix-unit coefficients of the canonical element.
    fn g_abs(&self, k: usize, l: usize) -> CycNum {
        let v = self.g6.at(k, l);
        if v.is_zero() {
            return v.clone();
        }
        &(v * &self.theta_norm[k]) * &self.theta_norm[l]
    }

    /// The second pairing <e-hat; e>, read off the canonical element:
    /// the coefficient of E-hat_{pq} (x) E_{rs} in G(1) is
    /// <E-hat_{qp}; E_{sr}> dim(X) dim(Y).
    fn q_abs(&self, h: &WhaData, k: usize, l: usize) -> CycNum {
        let sk = self.swap[k] as usize;
        let sl = self.swap[l] as usize;
        let v = self.g_abs(sk, sl);
        if v.is_zero() {
            return v;
        }
        let rec = h.recoupler();
        let d = &rec.quantum_dim(h.basis()[k].j) * &rec.quantum_dim(h.basis()[l].j);
        &v * &d.invert().expect("dimensions nonzero")
    }
}

/// The full self-duality suite: non-degeneracy, the displayed orthogonality
/// relations, the five dual-pairing axioms, the dual-basis property, the
/// triangle identities, the pivotal element, and the Fourier transform.
pub fn pairing_suite(h: &WhaData, sd: &SelfDuality) -> Vec<CheckResult> {
    let dim = h.dim();
    let field = h.field();
    let rec = h.recoupler();
    let mut out = Vec::new();

    out.push(run("pairing-rank", || {
        let rk = sd.p6.rank();
        (rk != dim).then(|| format!("rank {} of {}", rk, dim))
    }));

    out.push(run("dual-pairing-axiom-delta-vs-product", || {
        // g(Delta h; l1 (x) l2) = g(h; l1 l2)
        (0..dim as u32).into_par_iter().find_map_any(|x| {
            for l1 in 0..dim as u32 {
                for l2 in 0..dim as u32 {
                    let mut lhs = field.zero();
                    for (a, b, c) in h.delta_terms(x) {
                        let p1 = sd.p6.at(*a as usize, l1 as usize);
                        if p1.is_zero() {
                            continue;
                        }
                        let p2 = sd.p6.at(*b as usize, l2 as usize);
                        if p2.is_zero() {
                            continue;
                        }
                        lhs = &lhs + &(&(p1 * p2) * c);
                    }
                    let mut rhs = field.zero();
                    for (t, c) in h.mu_terms(l1, l2) {
                        let p = sd.p6.at(x as usize, *t as usize);
                        if !p.is_zero() {
                            rhs = &rhs + &(p * c);
                        }
                    }
                    if lhs != rhs {
                        return Some(format!("(h,l1,l2) = ({},{},{})", x, l1, l2));
                    }
                }
            }
            None
        })
    }));

    out.push(run("dual-pairing-axiom-counit-right", || {
        // eps(h) = g(h; 1)
        let one = h.unit();
        (0..dim).find_map(|x| {
            let mut acc = field.zero();
            for (l, c) in one.0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let p = sd.p6.at(x, l);
                if !p.is_zero() {
                    acc = &acc + &(p * c);
                }
            }
            (acc != *h.epsilon_coeff(x as u32)).then(|| format!("h = {}", x))
        })
    }));

    out.push(run("dual-pairing-axiom-product-vs-delta", || {
        // g(h1 h2; l) = g(h1 (x) h2; Delta l)
        (0..dim as u32).into_par_iter().find_map_any(|h1| {
            for h2 in 0..dim as u32 {
                let prod = h.mu_terms(h1, h2);
                for l in 0..dim as u32 {
                    let mut lhs = field.zero();
                    for (t, c) in prod {
                        let p = sd.p6.at(*t as usize, l as usize);
                        if !p.is_zero() {
                            lhs = &lhs + &(p * c);
                        }
                    }
                    let mut rhs = field.zero();
                    for (a, b, c) in h.delta_terms(l) {
                        let p1 = sd.p6.at(h1 as usize, *a as usize);
                        if p1.is_zero() {
                            continue;
                        }
                        let p2 = sd.p6.at(h2 as usize, *b as usize);
                        if p2.is_zero() {
                            continue;
                        }
                        rhs = &rhs + &(&(p1 * p2) * c);
                    }
                    if lhs != rhs {
                        return Some(format!("(h1,h2,l) = ({},{},{})", h1, h2, l));
                    }
                }
            }
            None
        })
    }));

    out.push(run("dual-pairing-axiom-counit-left", || {
        // g(1; l) = eps(l)
        let one = h.unit();
        (0..dim).find_map(|l| {
            let mut acc = field.zero();
            for (k, c) in one.0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let p = sd.p6.at(k, l);
                if !p.is_zero() {
                    acc = &acc + &(p * c);
                }
            }
            (acc != *h.epsilon_coeff(l as u32)).then(|| format!("l = {}", l))
        })
    }));

    out.push(run("dual-pairing-axiom-antipode", || {
        // g(S h; l) = g(h; S l)
        (0..dim as u32).into_par_iter().find_map_any(|x| {
            let (sx, cx) = h.antipode_term(x);
            for l in 0..dim as u32 {
                let (sl, cl) = h.antipode_term(l);
                let lhs = cx * sd.p6.at(*sx as usize, l as usize);
                let rhs = cl * sd.p6.at(x as usize, *sl as usize);
                if lhs != rhs {
                    return Some(format!("(h,l) = ({},{})", x, l));
                }
            }
            None
        })
    }));

    out.push(run("orthogonality-relation-1", || {
        // dim Y sum_j dim V_j sum_{p,q} <E^X_{lm}; E-hat^j_{qp}>
        //   <E-hat^j_{pq}; E^Y_{sr}> = delta_XY delta_rl delta_sm;
        // the Kronecker side pairs K = (X; l, m) with the swap of
        // M = (Y; s, r)
        (0..dim).into_par_iter().find_map_any(|k| {
            for mm in 0..dim {
                let mut acc = field.zero();
                for l in 0..dim {
                    let p1 = sd.p_abs(k, l);
                    if p1.is_zero() {
                        continue;
                    }
                    let q1 = sd.q_abs(h, sd.swap[l] as usize, mm);
                    if q1.is_zero() {
                        continue;
                    }
                    let dj = rec.quantum_dim(h.basis()[l].j);
                    acc = &acc + &(&(&p1 * &q1) * &dj);
                }
                let dy = rec.quantum_dim(h.basis()[mm].j);
                acc = &acc * &dy;
                let expect = if mm == sd.swap[k] as usize {
                    field.one()
                } else {
                    field.zero()
                };
                if acc != expect {
                    return Some(format!("(K,M) = ({},{})", k, mm));
                }
            }
            None
        })
    }));

    out.push(run("orthogonality-relation-2", || {
        (0..dim).into_par_iter().find_map_any(|k| {
            for mm in 0..dim {
                let mut acc = field.zero();
                for l in 0..dim {
                    let q1 = sd.q_abs(h, k, l);
                    if q1.is_zero() {
                        continue;
                    }
                    let p1 = sd.p_abs(sd.swap[l] as usize, mm);
                    if p1.is_zero() {
                        continue;
                    }
                    let dj = rec.quantum_dim(h.basis()[l].j);
                    acc = &acc + &(&(&q1 * &p1) * &dj);
                }
                let dy = rec.quantum_dim(h.basis()[mm].j);
                acc = &acc * &dy;
                let expect = if mm == sd.swap[k] as usize {
                    field.one()
                } else {
                    field.zero()
                };
                if acc != expect {
                    return Some(format!("(K,M) = ({},{})", k, mm));
                }
            }
            None
        })
    }));

    out.push(run("dual-basis-kronecker", || {
        // E-dual_M = sum_L g_abs[L][M] E-hat_L satisfies
        // <E_K; E-dual_M> = delta_{KM}
        (0..dim).into_par_iter().find_map_any(|k| {
            for mm in 0..dim {
                let mut acc = field.zero();
                for l in 0..dim {
                    let g = sd.g_abs(l, mm);
                    if g.is_zero() {
                        continue;
                    }
                    let p = sd.p_abs(k, l);
                    if !p.is_zero() {
                        acc = &acc + &(&p * &g);
                    }
                }
                let expect = if k == mm { field.one() } else { field.zero() };
                if acc != expect {
                    return Some(format!("(K,M) = ({},{})", k, mm));
                }
            }
            None
        })
    }));

    out.push(run("triangle-identities", || {
        let pg = sd.p6.mul(&sd.g6);
        if !pg.is_identity() {
            return Some("pairing . canonical != id".to_string());
        }
        let gp = sd.g6.mul(&sd.p6);
        if !gp.is_identity() {
            return Some("canonical . pairing != id".to_string());
        }
        None
    }));

    out.push(run("pivotal-pairs-to-the-pivotal-form", || {
        (0..dim as u32).find_map(|k| {
            let mut acc = field.zero();
            for (l, c) in sd.m.0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let p = sd.p6.at(k as usize, l);
                if !p.is_zero() {
                    acc = &acc + &(p * c);
                }
            }
            (acc != *h.w_coeff(k)).then(|| format!("k = {}", k))
        })
    }));

    out.push(run("pivotal-invertible", || {
        let prod = h.multiply(&sd.m, &sd.m_inv);
        let prod2 = h.multiply(&sd.m_inv, &sd.m);
        let one = h.unit();
        if prod != one {
            return Some("m m^-1 != 1".to_string());
        }
        if prod2 != one {
            return Some("m^-1 m != 1".to_string());
        }
        None
    }));

    out.push(run("pivotal-group-like", || {
        // (m 1') (x) (m 1'') = Delta(m) = (1' m) (x) (1'' m)
        let mut dm: HashMap<(u32, u32), CycNum> = h.comultiply(&sd.m);
        dm.retain(|_, c| !c.is_zero());
        let mut left: HashMap<(u32, u32), CycNum> = HashMap::new();
        let mut right: HashMap<(u32, u32), CycNum> = HashMap::new();
        for (u, v, c) in h.delta_one() {
            let mu_ = h.multiply(&sd.m, &h.basis_element(*u));
            for (a, ca) in mu_.0.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                let mv = h.multiply(&sd.m, &h.basis_element(*v));
                for (b, cb) in mv.0.iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    let val = &(ca * cb) * c;
                    let e = left.entry((a as u32, b as u32)).or_insert_with(|| field.zero());
                    *e = &*e + &val;
                }
            }
            let um = h.multiply(&h.basis_element(*u), &sd.m);
            for (a, ca) in um.0.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                let vm = h.multiply(&h.basis_element(*v), &sd.m);
                for (b, cb) in vm.0.iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    let val = &(ca * cb) * c;
                    let e = right.entry((a as u32, b as u32)).or_insert_with(|| field.zero());
                    *e = &*e + &val;
                }
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        if left != dm {
            return Some("(m 1') (x) (m 1'') != Delta(m)".to_string());
        }
        if right != dm {
            return Some("(1' m) (x) (1'' m) != Delta(m)".to_string());
        }
        None
    }));

    // The antipode inverts every group-like: g S(g) = eps_t(g) = 1. The
    // fixed-point form S(m) = m can therefore only hold when m^2 = 1, which
    // fails here for r >= 4 (S^4 is not the identity: S^2 scales
    // e_(1,0,1,0,1)-type elements by Delta_1^2). Both forms are reported;
    // the fixed-point check is expected to fail at r >= 4.
    out.push(run("pivotal-antipode-inverse", || {
        (h.antipode_apply(&sd.m) != sd.m_inv).then(|| "S(m) != m^-1".to_string())
    }));

    out.push(run("pivotal-antipode-fixed", || {
        (h.antipode_apply(&sd.m) != sd.m).then(|| {
            "S(m) != m (only S(m) = m^-1 can hold: S^4 is not the identity)".to_string()
        })
    }));

    out.push(run("pivotal-counital", || {
        let (t, s) = h.counital_maps(&sd.m);
        let one = h.unit();
        (t != one || s != one).then(|| "eps_t(m) or eps_s(m) != 1".to_string())
    }));

    out.push(run("pivotal-conjugation", || {
        (0..dim as u32).into_par_iter().find_map_any(|x| {
            let e = h.basis_element(x);
            let s2 = h.antipode_apply(&h.antipode_apply(&e));
            let conj = h.multiply(&h.multiply(&sd.m, &e), &sd.m_inv);
            (s2 != conj).then(|| format!("x = {}", x))
        })
    }));

    out.push(run("fourier-l-invertible", || {
        let rk = sd.phi_l.rank();
        (rk != dim).then(|| format!("rank {} of {}", rk, dim))
    }));

    out
}

/// The action of the algebra on the simple comodule of color j, derived from
/// the coaction and the pairing: gamma(v (x) l-hat) = v_V <v_H; l-hat>.
/// Returns the tensor as (v, L) -> (w, coeff) entries.
pub fn action_from_pairing(
    h: &WhaData,
    sd: &SelfDuality,
    j: Color,
) -> HashMap<(usize, u32), Vec<(usize, CycNum)>> {
    let comodule = crate::repcat::ComoduleData::build(h, j);
    let mut out: HashMap<(usize, u32), Vec<(usize, CycNum)>> = HashMap::new();
    for b in 0..comodule.dim() {
        for l in 0..h.dim() as u32 {
            let mut terms: Vec<(usize, CycNum)> = Vec::new();
            for (a, k, c) in comodule.beta_terms(b) {
                let p = sd.p6.at(*k as usize, l as usize);
                if p.is_zero() {
                    continue;
                }
                terms.push((*a, c * p));
            }
            if !terms.is_empty() {
                out.insert((b, l), terms);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r2_duality_is_trivial() {
        let h = WhaData::build(2).unwrap();
        let sd = SelfDuality::build(&h).unwrap();
        assert_eq!(sd.p6.rank(), 1);
        assert!(!sd.p6.at(0, 0).is_zero());
        // m = 1, the unique unit-proportional solution
        assert_eq!(*sd.pivotal_element(), h.unit());
        assert!(!sd.phi_l.at(0, 0).is_zero());
        for c in pairing_suite(&h, &sd) {
            assert!(c.passed, "{} failed: {:?}", c.name, c.witness);
        }
    }

    #[test]
    fn pairing_suite_passes_at_r3() {
        let h = WhaData::build(3).unwrap();
        let sd = SelfDuality::build(&h).unwrap();
        for c in pairing_suite(&h, &sd) {
            assert!(c.passed, "{} failed: {:?}", c.name, c.witness);
        }
    }

    #[test]
    fn dual_basis_columns_are_dual_to_the_basis() {
        // <e_K/theta_K; Edual_M> = delta_KM, i.e. P6 . dual6 = diag(theta)
        let h = WhaData::build(3).unwrap();
        let sd = SelfDuality::build(&h).unwrap();
        let prod = sd.pairing_matrix().mul(&sd.dual_basis_matrix());
        for k in 0..h.dim() {
            for m in 0..h.dim() {
                let expect = if k == m {
                    sd.theta_norm[k].clone()
                } else {
                    h.field().zero()
                };
                assert_eq!(*prod.at(k, m), expect, "({},{})", k, m);
            }
        }
    }

    #[test]
    fn pairing_vanishes_off_the_leg_matching() {
        let h = WhaData::build(3).unwrap();
        let sd = SelfDuality::build(&h).unwrap();
        for (k, x) in h.basis().iter().enumerate() {
            for (l, y) in h.basis().iter().enumerate() {
                let matches = y.p == x.p && y.q == x.s && y.r_ == x.r_ && y.s == x.q;
                if !matches {
                    assert!(sd.p6.at(k, l).is_zero(), "({},{})", k, l);
                }
            }
        }
    }
}
