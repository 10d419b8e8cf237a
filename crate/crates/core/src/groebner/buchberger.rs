use std::cmp::Ordering;
use std::collections::HashSet;

use super::division::{normal_form, s_polynomial};
use super::ideal::Ideal;
use crate::budget::Budget;
use crate::error::Result;
use crate::ring::{Field, Monomial, MonomialOrder, Polynomial};

/// Pair-elimination criteria used by [`buchberger_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Criteria {
    /// Skip pairs whose leading monomials are coprime.
    pub coprime: bool,
    /// Skip `(i, j)` when some `k` has `lm(k) | lcm(i, j)` and both `(i, k)`
    /// and `(j, k)` have already left the queue.
    pub chain: bool,
}

impl Default for Criteria {
    fn default() -> Self {
        Criteria {
            coprime: true,
            chain: true,
        }
    }
}

/// The reduced Groebner basis of an ideal: monic, interreduced, sorted
/// ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct ReducedGroebnerBasis<C> {
    elements: Vec<Polynomial<C>>,
    order: MonomialOrder,
    source: Ideal<C>,
    pairs_processed: u64,
}

impl<C: Field> ReducedGroebnerBasis<C> {
    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn source(&self) -> &Ideal<C> {
        &self.source
    }

    /// Pair reductions performed while computing this basis.
    pub fn pairs_processed(&self) -> u64 {
        self.pairs_processed
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("nonzero").clone())
            .collect()
    }

    pub fn reduce(&self, p: &Polynomial<C>) -> Polynomial<C> {
        normal_form(p, &self.elements, self.order)
    }

    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn as_ideal(&self) -> Ideal<C> {
        Ideal::new(self.elements.clone()).expect("a basis of a nonzero ideal is nonempty")
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with both criteria and the normal selection strategy.
pub fn buchberger<C: Field>(ideal: &Ideal<C>, ord: MonomialOrder, budget: &Budget) -> Result<ReducedGroebnerBasis<C>> {
    buchberger_with(ideal, ord, budget, Criteria::default())
}

pub fn buchberger_with<C: Field>(
    ideal: &Ideal<C>,
    ord: MonomialOrder,
    budget: &Budget,
    criteria: Criteria,
) -> Result<ReducedGroebnerBasis<C>> {
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut queued: HashSet<(usize, usize)> = HashSet::new();
    let mut unit = false;

    let push = |h: Polynomial<C>, basis: &mut Vec<Polynomial<C>>, leads: &mut Vec<Monomial>, pending: &mut Vec<Pair>, queued: &mut HashSet<(usize, usize)>| {
        let lm = h.leading_monomial(ord).expect("nonzero").clone();
        let j = basis.len();
        for (i, m) in leads.iter().enumerate() {
            pending.push(Pair {
                i,
                j,
                lcm: m.lcm(&lm),
            });
            queued.insert((i, j));
        }
        basis.push(h);
        leads.push(lm);
    };

    for g in ideal.normalized().generators() {
        let g = g.monic(ord);
        if g.is_constant() {
            unit = true;
            break;
        }
        push(g, &mut basis, &mut leads, &mut pending, &mut queued);
    }

    let mut pairs = 0u64;
    while !unit && !pending.is_empty() {
        let pick = (0..pending.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pending[a], &pending[b]);
                ord.cmp(&p.lcm, &q.lcm)
                    .then((p.j, p.i).cmp(&(q.j, q.i)))
            })
            .expect("nonempty");
        let Pair { i, j, lcm } = pending.swap_remove(pick);
        queued.remove(&(i, j));

        if criteria.coprime && leads[i].is_coprime(&leads[j]) {
            continue;
        }
        if criteria.chain {
            let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
            let redundant = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && leads[k].divides(&lcm)
                    && !queued.contains(&key(i, k))
                    && !queued.contains(&key(j, k))
            });
            if redundant {
                continue;
            }
        }

        pairs += 1;
        if let Err(e) = budget.check(pairs) {
            budget.record(pairs);
            return Err(e);
        }
        let s = s_polynomial(&basis[i], &basis[j], ord)?;
        let r = normal_form(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(ord);
        if r.is_constant() {
            unit = true;
            break;
        }
        push(r, &mut basis, &mut leads, &mut pending, &mut queued);
    }
    budget.record(pairs);

    let elements = if unit {
        vec![Polynomial::one(ideal.context())]
    } else {
        reduce_basis(basis, ord)
    };
    Ok(ReducedGroebnerBasis {
        elements,
        order: ord,
        source: ideal.clone(),
        pairs_processed: pairs,
    })
}

/// Minimalizes and interreduces a Groebner basis into canonical form.
fn reduce_basis<C: Field>(mut basis: Vec<Polynomial<C>>, ord: MonomialOrder) -> Vec<Polynomial<C>> {
    let lm = |g: &Polynomial<C>| g.leading_monomial(ord).expect("nonzero").clone();
    basis.sort_by(|a, b| ord.cmp(&lm(a), &lm(b)));
    let mut kept: Vec<Polynomial<C>> = Vec::new();
    for g in basis {
        let m = lm(&g);
        if !kept.iter().any(|k| lm(k).divides(&m)) {
            kept.push(g.monic(ord));
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for (idx, g) in kept.iter().enumerate() {
        let lead = g.leading_term(ord).expect("nonzero").clone();
        let mut tail = g.clone();
        tail.remove_monomial(&lead.monomial);
        let others: Vec<Polynomial<C>> = kept
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let reduced_tail = normal_form(&tail, &others, ord);
        let lead_poly = Polynomial::term(g.context(), lead.coefficient, lead.monomial);
        out.push(&lead_poly + &reduced_tail);
    }
    out.sort_by(|a, b| match ord.cmp(&lm(a), &lm(b)) {
        Ordering::Equal => unreachable!("minimal basis has distinct leading monomials"),
        o => o,
    });
    out
}

/// Buchberger's criterion, checked on every pair with no shortcuts.
pub fn is_groebner_basis<C: Field>(gens: &[Polynomial<C>], ord: MonomialOrder) -> bool {
    let gens: Vec<&Polynomial<C>> = gens.iter().filter(|g| !g.is_zero()).collect();
    let owned: Vec<Polynomial<C>> = gens.iter().map(|g| (*g).clone()).collect();
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let s = s_polynomial(gens[a], gens[b], ord).expect("nonzero inputs");
            if !normal_form(&s, &owned, ord).is_zero() {
                return false;
            }
        }
    }
    true
}
