use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::graph::{vertex_cover_number, Graph, MAX_ORDER};
use crate::poly::{IntPoly, RatPoly, Rational};
use crate::realroots::{are_compatible, interleaves, signs_at_roots, RootProfile};
use crate::sigma::{eta_count, forbidden_shapes, SigmaPolynomial};

/// Complement of a graph with vertex cover `{u1, u2, u3}` inducing
/// `K2 ⊍ K1`: `m_i` leaves on `u_i`, and `r`, `j`, `k` vertices whose
/// neighbourhoods are `{u1, u2}`, `{u2, u3}` and `{u1, u3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointCoverParams {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
    pub r: usize,
    pub j: usize,
    pub k: usize,
}

impl PointCoverParams {
    pub fn new(m1: usize, m2: usize, m3: usize, r: usize, j: usize, k: usize) -> Self {
        PointCoverParams { m1, m2, m3, r, j, k }
    }

    pub fn order(&self) -> usize {
        3 + self.m1 + self.m2 + self.m3 + self.r + self.j + self.k
    }

    pub fn alpha_beta(&self) -> AlphaBeta {
        AlphaBeta {
            alpha: self.m2 + self.j + self.r,
            beta: self.m1 + self.k + self.r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphaBeta {
    pub alpha: usize,
    pub beta: usize,
}

impl AlphaBeta {
    pub fn new(alpha: usize, beta: usize) -> Self {
        AlphaBeta { alpha, beta }
    }

    /// `x³ + (α+β+1)x² + αβx`.
    pub fn cubic(&self) -> IntPoly {
        let (a, b) = (self.alpha as i64, self.beta as i64);
        IntPoly::from_i64s(&[0, a * b, a + b + 1, 1])
    }

    /// `x² + (α+β)x + (α−1)β`.
    pub fn quadratic_j(&self) -> IntPoly {
        let (a, b) = (self.alpha as i64, self.beta as i64);
        IntPoly::from_i64s(&[(a - 1) * b, a + b, 1])
    }

    /// `x² + (α+β)x + α(β−1)`.
    pub fn quadratic_k(&self) -> IntPoly {
        let (a, b) = (self.alpha as i64, self.beta as i64);
        IntPoly::from_i64s(&[a * (b - 1), a + b, 1])
    }

    fn require_positive(&self) -> Result<(), FamilyError> {
        if self.alpha == 0 || self.beta == 0 {
            return Err(FamilyError::DegenerateAlphaBeta);
        }
        Ok(())
    }
}

/// Vertices are `u1 = 0`, `u2 = 1`, `u3 = 2`, then the blocks `M1`, `M2`,
/// `M3`, `R`, `J`, `K` in that order.
pub fn pointcover_complement(p: &PointCoverParams) -> Result<Graph, FamilyError> {
    let n = p.order();
    if n > MAX_ORDER {
        return Err(FamilyError::TooLarge(n));
    }
    let mut edges = vec![(0, 1)];
    let mut next = 3;
    let mut block = |count: usize, attach: &[usize], edges: &mut Vec<(usize, usize)>| {
        for _ in 0..count {
            edges.extend(attach.iter().map(|&u| (u, next)));
            next += 1;
        }
    };
    block(p.m1, &[0], &mut edges);
    block(p.m2, &[1], &mut edges);
    block(p.m3, &[2], &mut edges);
    block(p.r, &[0, 1], &mut edges);
    block(p.j, &[1, 2], &mut edges);
    block(p.k, &[0, 2], &mut edges);
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// `σ(G) = x^{m3}(xσ(H̄) + j·xσ(H̄_J) + k·xσ(H̄_K) + m3·σ(H̄))` with
/// `H = Ḡ − (M3 ∪ {u3})` and each piece equal to `x^{n_H − 2}` times the
/// cubic's quadratic factor or one of the two quadratics.
pub fn sigma_pointcover_formula(p: &PointCoverParams) -> Result<SigmaPolynomial, FamilyError> {
    if p.j == 0 || p.k == 0 {
        return Err(FamilyError::EmptyJOrK);
    }
    let n = p.order();
    if n > MAX_ORDER {
        return Err(FamilyError::TooLarge(n));
    }
    let ab = p.alpha_beta();
    let shift = n - p.m3 - 1 - 2;
    let h = IntPoly::from_i64s(&[(ab.alpha * ab.beta) as i64, (ab.alpha + ab.beta + 1) as i64, 1])
        .shift_by_power(shift);
    let hj = ab.quadratic_j().shift_by_power(shift);
    let hk = ab.quadratic_k().shift_by_power(shift);
    let scalar = |c: usize| BigInt::from(c);
    let inner = &(&h.shift_by_power(1) + &hj.scale(&scalar(p.j)))
        + &(&hk.scale(&scalar(p.k)) + &h.scale(&scalar(p.m3)));
    Ok(SigmaPolynomial::from_coefficients(
        inner.shift_by_power(p.m3).into_coeffs(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootChainReport {
    /// `0 = r1 > t1 > r2 > t2 > r3`.
    pub strict: bool,
    /// The same chain with `≥`.
    pub weak: bool,
}

/// Compares the roots `r_i` of the cubic with the roots `t_i` of
/// `x² + (α+β)x + (α−1)β`. The strict chain is decided twice: from the
/// isolated root order, and from signs at the `t_i`, where
/// `cubic(t_i) = t_i(t_i + β)` because the cubic's quadratic factor is the
/// quadratic plus `x + β`.
pub fn root_chain_check(ab: AlphaBeta) -> Result<RootChainReport, FamilyError> {
    ab.require_positive()?;
    let cubic = ab.cubic().to_rational();
    let quad = ab.quadratic_j().to_rational();
    let weak = interleaves(&cubic, &quad)?;

    let profile = RootProfile::new(&[&cubic, &quad])?;
    let owners: Vec<Vec<usize>> = profile.multiplicities.iter().rev().cloned().collect();
    let by_order = owners.len() == 5
        && owners
            .iter()
            .enumerate()
            .all(|(i, m)| *m == if i % 2 == 0 { vec![1, 0] } else { vec![0, 1] });

    // 0 > t1 > r2 > t2 > r3 iff t1 < 0, cubic(t1) < 0 and cubic(t2) > 0
    let at_t = signs_at_roots(&cubic, &quad)?;
    let x_at_t = signs_at_roots(&RatPoly::from_i64s(&[0, 1]), &quad)?;
    let shifted = signs_at_roots(&RatPoly::from_i64s(&[ab.beta as i64, 1]), &quad)?;
    let by_sign = at_t == [-1, 1] && x_at_t[0] < 0;
    let product: Vec<i8> = x_at_t.iter().zip(&shifted).map(|(a, b)| a * b).collect();
    if at_t != product {
        return Err(FamilyError::RouteDisagreement(format!(
            "cubic signs at t: {at_t:?} vs {product:?}"
        )));
    }
    if by_order != by_sign {
        return Err(FamilyError::RouteDisagreement(format!(
            "root order says {by_order}, signs say {by_sign}"
        )));
    }
    Ok(RootChainReport {
        strict: by_order,
        weak,
    })
}

/// Values of `c` at which the discriminant of `c·q_J + q_K` is checked.
pub const DISCRIMINANT_PROBES: [(i64, i64); 9] = [
    (1, 1000),
    (1, 7),
    (1, 2),
    (1, 1),
    (2, 1),
    (3, 1),
    (41, 5),
    (100, 1),
    (10000, 1),
];

/// Decides compatibility of the two quadratics with the exact interleaver
/// test, and checks that `(c+1)²(α+β)² − 4(c+1)(c(α−1)β + α(β−1))`, the
/// discriminant of `c·q_J + q_K`, is nonnegative at each probe. The two
/// must agree.
pub fn quadratic_compatibility_check(ab: AlphaBeta) -> Result<bool, FamilyError> {
    ab.require_positive()?;
    let qj = ab.quadratic_j().to_rational();
    let qk = ab.quadratic_k().to_rational();
    let exact = are_compatible(&qj, &qk)?;
    let (a, b) = (
        Rational::from_integer(ab.alpha.into()),
        Rational::from_integer(ab.beta.into()),
    );
    let one = Rational::one();
    let four = Rational::from_integer(4.into());
    let probes_pass = DISCRIMINANT_PROBES.iter().all(|&(num, den)| {
        let c = Rational::new(num.into(), den.into());
        let c1 = &c + &one;
        let sum = &a + &b;
        let constant = &c * (&a - &one) * &b + &a * (&b - &one);
        let disc = &c1 * &c1 * &sum * &sum - &four * &c1 * constant;
        !disc.is_negative()
    });
    if exact != probes_pass {
        return Err(FamilyError::RouteDisagreement(format!(
            "interleaver test says {exact}, discriminant probes say {probes_pass}"
        )));
    }
    Ok(exact)
}

/// `α₀(g) = k` and `g` contains some disjoint union of cliques of total
/// excess `k`.
pub fn is_proper_k_star(g: &Graph, k: usize) -> bool {
    k >= 1
        && vertex_cover_number(g) == k
        && forbidden_shapes(k)
            .iter()
            .filter(|s| s.vertex_count() <= g.order())
            .any(|s| !eta_count(g, s).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma::sigma_bruteforce;

    #[test]
    fn construction_audit() {
        let p = PointCoverParams::new(0, 0, 0, 0, 1, 1);
        let g = pointcover_complement(&p).unwrap();
        assert_eq!(g.order(), 5);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 4), (1, 3), (2, 3), (2, 4)]);
        assert!(crate::graph::are_isomorphic(&g, &Graph::cycle(5).unwrap()));
        assert_eq!(
            PointCoverParams::new(1, 2, 0, 1, 1, 1).alpha_beta(),
            AlphaBeta::new(4, 3)
        );
        assert_eq!(
            pointcover_complement(&PointCoverParams::new(61, 0, 0, 0, 0, 1)),
            Err(FamilyError::TooLarge(65))
        );
    }

    #[test]
    fn formula_small() {
        let p = PointCoverParams::new(0, 0, 0, 0, 1, 1);
        let s = sigma_pointcover_formula(&p).unwrap();
        assert_eq!(s.poly(), &IntPoly::from_i64s(&[0, 0, 0, 5, 5, 1]));
        for p in [
            PointCoverParams::new(1, 0, 2, 1, 1, 2),
            PointCoverParams::new(2, 1, 1, 0, 2, 1),
        ] {
            let g = pointcover_complement(&p).unwrap().complement();
            assert_eq!(
                sigma_pointcover_formula(&p).unwrap(),
                sigma_bruteforce(&g).unwrap()
            );
        }
        assert_eq!(
            sigma_pointcover_formula(&PointCoverParams::new(1, 1, 1, 1, 0, 1)),
            Err(FamilyError::EmptyJOrK)
        );
    }

    #[test]
    fn root_chains() {
        assert_eq!(
            root_chain_check(AlphaBeta::new(1, 1)).unwrap(),
            RootChainReport {
                strict: false,
                weak: true
            }
        );
        assert!(root_chain_check(AlphaBeta::new(2, 2)).unwrap().strict);
        assert!(root_chain_check(AlphaBeta::new(5, 3)).unwrap().strict);
        assert_eq!(
            root_chain_check(AlphaBeta::new(0, 3)),
            Err(FamilyError::DegenerateAlphaBeta)
        );
    }

    #[test]
    fn quadratics() {
        assert!(quadratic_compatibility_check(AlphaBeta::new(3, 2)).unwrap());
        assert!(quadratic_compatibility_check(AlphaBeta::new(4, 4)).unwrap());
        assert_eq!(
            quadratic_compatibility_check(AlphaBeta::new(2, 0)),
            Err(FamilyError::DegenerateAlphaBeta)
        );
    }

    #[test]
    fn proper_stars() {
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_proper_k_star(&two_k2, 2));
        assert!(is_proper_k_star(&Graph::complete(2).unwrap(), 1));
        assert!(!is_proper_k_star(&Graph::empty(5).unwrap(), 1));
        // a star has cover number 1 but only the K2 shape
        assert!(!is_proper_k_star(
            &Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
            2
        ));
        let p = PointCoverParams::new(1, 1, 1, 0, 1, 1);
        assert!(is_proper_k_star(&pointcover_complement(&p).unwrap(), 3));
    }
}
