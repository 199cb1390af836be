use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{SigmaError, SigmaPolynomial};
use crate::graph::{canonical_form, Graph};
use crate::poly::{to_falling_factorial, IntPoly};

/// Recursion steps allowed by [`chromatic_polynomial`].
pub const DEFAULT_CHROMATIC_BUDGET: u64 = 50_000_000;

const MEMO_MAX_ORDER: usize = 10;

pub fn chromatic_polynomial(g: &Graph) -> Result<IntPoly, SigmaError> {
    chromatic_polynomial_with_budget(g, DEFAULT_CHROMATIC_BUDGET)
}

/// Deletion-contraction on sparse graphs and addition-contraction on dense
/// ones, factoring over components and stopping at edgeless, complete and
/// tree pieces.
pub fn chromatic_polynomial_with_budget(g: &Graph, budget: u64) -> Result<IntPoly, SigmaError> {
    let mut ctx = Ctx {
        steps: 0,
        budget,
        memo: HashMap::new(),
    };
    ctx.chromatic(g)
}

/// `σ(g)` read off the falling-factorial expansion of the chromatic
/// polynomial.
pub fn sigma_from_chromatic(g: &Graph) -> Result<SigmaPolynomial, SigmaError> {
    let p = chromatic_polynomial(g)?;
    Ok(SigmaPolynomial::from_coefficients(to_falling_factorial(&p)))
}

struct Ctx {
    steps: u64,
    budget: u64,
    memo: HashMap<Graph, IntPoly>,
}

fn falling(n: usize) -> IntPoly {
    (0..n).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::linear(BigInt::from(i)))
}

fn x_pow(n: usize) -> IntPoly {
    IntPoly::monomial(BigInt::one(), n)
}

impl Ctx {
    fn chromatic(&mut self, g: &Graph) -> Result<IntPoly, SigmaError> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(SigmaError::BudgetExceeded(self.budget));
        }
        let n = g.order();
        if g.is_edgeless() {
            return Ok(x_pow(n));
        }
        if g.is_complete() {
            return Ok(falling(n));
        }
        let comps = g.components();
        if comps.len() > 1 {
            let mut out = IntPoly::one();
            for c in comps {
                out = &out * &self.chromatic(&g.induced_by_mask(c))?;
            }
            return Ok(out);
        }
        let m = g.edge_count();
        if m + 1 == n {
            // connected with n - 1 edges: a tree
            return Ok(&x_pow(1) * &IntPoly::from_i64s(&[-1, 1]).pow(n - 1));
        }
        let key = (n <= MEMO_MAX_ORDER).then(|| canonical_form(g));
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return Ok(hit.clone());
        }
        let out = if 4 * m > n * (n - 1) {
            let (u, v) = first_non_edge(g);
            let added = self.chromatic(&g.add_edge(u, v)?)?;
            &added + &self.chromatic(&g.contract(u, v)?)?
        } else {
            let u = (0..n)
                .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
                .expect("nonempty");
            let v = g.neighbors(u).trailing_zeros() as usize;
            let deleted = self.chromatic(&g.delete_edge(u, v)?)?;
            &deleted - &self.chromatic(&g.contract(u, v)?)?
        };
        if let Some(k) = key {
            self.memo.insert(k, out.clone());
        }
        Ok(out)
    }
}

fn first_non_edge(g: &Graph) -> (usize, usize) {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.has_edge(u, v))
        .expect("graph is not complete")
}
