use std::cmp::Ordering;
use std::sync::Arc;

use super::reduce::{subtract_tail, workspace_of, Key, Reducers, Workspace};
use super::Ideal;
use crate::monomial::MonomialIdeal;
use crate::ring::{presentation_order, DegRevLex, Monomial, Polynomial, RingContext, TermOrder};
use crate::scalar::Scalar;

/// A degrevlex Gröbner basis of a homogeneous ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<C> {
    ring: Arc<RingContext>,
    elements: Vec<Polynomial<C>>,
    reduced: bool,
    truncated_at: Option<u32>,
}

impl<C: Scalar> GroebnerBasis<C> {
    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    /// Elements sorted by leading monomial in [`presentation_order`].
    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// `Some(D)` when only S-pairs up to degree `D` were processed; the
    /// basis is then only valid in degrees `<= D`.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(Polynomial::leading_monomial)
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    let (cf, mf) = f.leading_term().expect("nonzero");
    let (cg, mg) = g.leading_term().expect("nonzero");
    let lcm = mf.lcm(mg);
    let a = f.mul_term(&(C::one() / cf.clone()), &lcm.div(mf).unwrap());
    let b = g.mul_term(&(C::one() / cg.clone()), &lcm.div(mg).unwrap());
    &a - &b
}

/// Monic `f` and `g`: the S-polynomial with its cancelled leading term
/// already removed.
fn s_workspace<C: Scalar>(f: &Polynomial<C>, g: &Polynomial<C>, lcm: &Monomial) -> Workspace<C> {
    let mut work = Workspace::new();
    let qf = lcm.div(f.leading_monomial().unwrap()).unwrap();
    let qg = lcm.div(g.leading_monomial().unwrap()).unwrap();
    for t in &f.terms()[1..] {
        work.insert(Key(t.mono.mul(&qf)), t.coeff.clone());
    }
    subtract_tail(&mut work, &C::one(), &qg, g);
    work
}

struct State<C> {
    basis: Vec<Polynomial<C>>,
    pairs: Vec<Pair>,
}

impl<C: Scalar> State<C> {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().unwrap()
    }

    /// Gebauer–Möller update after appending a new basis element.
    fn update(&mut self, h: usize) {
        let t = self.lm(h).clone();
        let fresh: Vec<Pair> = (0..h).map(|g| Pair { i: g, j: h, lcm: self.lm(g).lcm(&t) }).collect();

        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in fresh.iter().enumerate() {
            let coprime = self.lm(p.i).is_coprime(&t);
            if coprime || !fresh[k + 1..].iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm)) {
                kept.push(p.clone());
            }
        }
        kept.retain(|p| !self.lm(p.i).is_coprime(&t));

        let basis = &self.basis;
        let lm = |i: usize| basis[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            !(t.divides(&p.lcm) && lm(p.i).lcm(&t) != p.lcm && lm(p.j).lcm(&t) != p.lcm)
        });
        self.pairs.extend(kept);
    }
}

/// Reduced degrevlex Gröbner basis of a homogeneous ideal.
///
/// Pairs are processed degree by degree (normal selection strategy), pruned
/// with the coprime and chain criteria, and every new element is fully
/// reduced and made monic before it joins the basis.
pub fn buchberger<C: Scalar>(ideal: &Ideal<C>) -> GroebnerBasis<C> {
    run(ideal, None)
}

/// A Gröbner basis valid up to degree `max_degree`: S-pairs and generators
/// of higher degree are never processed.
pub fn buchberger_truncated<C: Scalar>(ideal: &Ideal<C>, max_degree: u32) -> GroebnerBasis<C> {
    run(ideal, Some(max_degree))
}

fn run<C: Scalar>(ideal: &Ideal<C>, max_degree: Option<u32>) -> GroebnerBasis<C> {
    let n = ideal.num_vars();
    let mut inputs: Vec<&Polynomial<C>> = ideal.generators().iter().collect();
    inputs.sort_by_key(|g| g.degree().unwrap());
    let mut next_input = 0;

    let mut state = State { basis: Vec::new(), pairs: Vec::new() };
    // indices into `state.basis`, ordered by increasing leading monomial
    let mut order: Vec<usize> = Vec::new();

    loop {
        let pair_deg = state.pairs.iter().map(|p| p.lcm.degree()).min();
        let input_deg = inputs.get(next_input).map(|g| g.degree().unwrap());
        let Some(degree) = [pair_deg, input_deg].into_iter().flatten().min() else { break };
        if max_degree.is_some_and(|m| degree > m) {
            break;
        }

        let mut batch: Vec<Workspace<C>> = Vec::new();
        while let Some(g) = inputs.get(next_input).filter(|g| g.degree() == Some(degree)) {
            batch.push(workspace_of(g));
            next_input += 1;
        }
        let (mut now, later): (Vec<Pair>, Vec<Pair>) =
            std::mem::take(&mut state.pairs).into_iter().partition(|p| p.lcm.degree() == degree);
        state.pairs = later;
        now.sort_by(|a, b| DegRevLex::compare(&a.lcm, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))));
        batch.extend(now.iter().map(|p| s_workspace(&state.basis[p.i], &state.basis[p.j], &p.lcm)));

        for work in batch {
            let reducers = Reducers::new(order.iter().map(|&i| &state.basis[i]));
            let h = reducers.reduce(n, work);
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            let lm = h.leading_monomial().unwrap().clone();
            let idx = state.basis.len();
            state.basis.push(h);
            let at = order.partition_point(|&i| DegRevLex::compare(state.lm(i), &lm) == Ordering::Less);
            order.insert(at, idx);
            state.update(idx);
        }
    }

    GroebnerBasis { ring: ideal.ring().clone(), elements: interreduce(n, state.basis), reduced: true, truncated_at: max_degree }
}

/// Tail-reduces every element against the others. Leading monomials are
/// already pairwise non-dividing because elements enter by degree, each
/// fully reduced against its predecessors.
fn interreduce<C: Scalar>(n: usize, basis: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    let mut out: Vec<Polynomial<C>> = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others = Reducers::new(basis.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p));
        let mut tail = workspace_of(g);
        let (lc, lm) = tail.pop_last().map(|(Key(m), c)| (c, m)).unwrap();
        let rest = others.reduce(n, tail);
        let lead = Polynomial::monomial(lc, lm);
        out.push(&lead + &rest);
    }
    out.sort_by(|a, b| presentation_order(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Minimal monomial generators of `<LT(g) : g in G>`.
pub fn leading_term_ideal<C: Scalar>(gb: &GroebnerBasis<C>) -> MonomialIdeal {
    MonomialIdeal::new(gb.ring.clone(), gb.leading_monomials().cloned())
        .expect("leading monomials live in the basis ring")
}
