//! Bounded search for LD-equivalence of one-generator terms.
//!
//! Two terms are LD-equivalent when one can be turned into the other by
//! rewriting subterms with `a*(b*c) ↔ (a*b)*(a*c)`. The closure of a term
//! under these rewrites is usually infinite (the forward rule duplicates
//! `a`), so the search is bounded by rewrite depth, term size and the number
//! of visited terms.
//!
//! A negative answer needs a certificate: either some closure was explored
//! completely without meeting the other term, or the two terms take different
//! values in a finite left self-distributive algebra (any such algebra is a
//! quotient of the free one, so different values rule out equivalence). The
//! finite algebras used are the tables `A_n` on `{1, ..., 2^n}` generated by
//! `p ⋆ 1 = p + 1 (mod 2^n)` and `p ⋆ (q + 1) = (p ⋆ q) ⋆ (p + 1)`.

use std::collections::HashMap;

use super::LdTerm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    /// Maximum number of rewrite steps from the start term.
    pub depth: usize,
    /// Terms with more leaves than this are not explored.
    pub max_size: usize,
    /// Maximum number of distinct terms visited per search.
    pub max_states: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            depth: 8,
            max_size: 64,
            max_states: 200_000,
        }
    }
}

/// How a pair was shown not to be LD-equivalent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refutation {
    /// The closure of the left term was exhausted.
    LeftClosureExhausted,
    /// The closure of the right term was exhausted.
    RightClosureExhausted,
    /// The terms differ when evaluated at the generator of the table `A_n`.
    FiniteModel { order: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Reached within `steps` rewrites.
    Equivalent {
        steps: usize,
    },
    Distinct(Refutation),
    /// Bounds were hit before either answer was established.
    Unknown,
}

impl Verdict {
    /// `Some(true)`, `Some(false)`, or `None` for unknown.
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Equivalent { .. } => Some(true),
            Verdict::Distinct(_) => Some(false),
            Verdict::Unknown => None,
        }
    }
}

type Id = u32;
const LEAF: Id = 0;

/// Hash-consed term store: structurally equal terms share an id.
#[derive(Default)]
struct Terms {
    children: Vec<(Id, Id)>,
    sizes: Vec<usize>,
    lookup: HashMap<(Id, Id), Id>,
    rewrites: HashMap<Id, Vec<Id>>,
}

impl Terms {
    fn new() -> Self {
        Terms {
            children: vec![(LEAF, LEAF)],
            sizes: vec![1],
            ..Default::default()
        }
    }

    fn node(&mut self, l: Id, r: Id) -> Id {
        if let Some(&id) = self.lookup.get(&(l, r)) {
            return id;
        }
        let id = Id::try_from(self.children.len()).expect("term store overflow");
        self.children.push((l, r));
        self.sizes
            .push(self.sizes[l as usize] + self.sizes[r as usize]);
        self.lookup.insert((l, r), id);
        id
    }

    fn intern(&mut self, t: &LdTerm) -> Id {
        match t {
            LdTerm::Leaf => LEAF,
            LdTerm::Node(l, r) => {
                let (l, r) = (self.intern(l), self.intern(r));
                self.node(l, r)
            }
        }
    }

    fn split(&self, t: Id) -> Option<(Id, Id)> {
        (t != LEAF).then(|| self.children[t as usize])
    }

    /// Every term one rewrite away from `t`, in either direction, at any position.
    fn neighbours(&mut self, t: Id) -> Vec<Id> {
        if let Some(cached) = self.rewrites.get(&t) {
            return cached.clone();
        }
        let Some((l, r)) = self.split(t) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if let Some((b, c)) = self.split(r) {
            // l*(b*c) expands to (l*b)*(l*c).
            let lb = self.node(l, b);
            let lc = self.node(l, c);
            out.push(self.node(lb, lc));
            // (a*b')*(a*c) contracts to a*(b'*c).
            if let Some((a, b2)) = self.split(l) {
                if a == b {
                    let bc = self.node(b2, c);
                    out.push(self.node(a, bc));
                }
            }
        }
        for l2 in self.neighbours(l) {
            out.push(self.node(l2, r));
        }
        for r2 in self.neighbours(r) {
            out.push(self.node(l, r2));
        }
        out.sort_unstable();
        out.dedup();
        self.rewrites.insert(t, out.clone());
        out
    }
}

enum Search {
    Found(usize),
    Exhausted,
    Truncated,
}

/// Breadth-first search from `start` for `goal`.
fn search(terms: &mut Terms, start: Id, goal: Id, bounds: &OracleBounds) -> Search {
    if start == goal {
        return Search::Found(0);
    }
    let mut seen = std::collections::HashSet::from([start]);
    let mut frontier = vec![start];
    let mut truncated = false;
    for step in 1..=bounds.depth {
        let mut next = Vec::new();
        for &t in &frontier {
            for n in terms.neighbours(t) {
                if terms.sizes[n as usize] > bounds.max_size {
                    truncated = true;
                    continue;
                }
                if !seen.insert(n) {
                    continue;
                }
                if n == goal {
                    return Search::Found(step);
                }
                if seen.len() > bounds.max_states {
                    return Search::Truncated;
                }
                next.push(n);
            }
        }
        if next.is_empty() {
            return if truncated {
                Search::Truncated
            } else {
                Search::Exhausted
            };
        }
        frontier = next;
    }
    Search::Truncated
}

/// Operation table of `A_n`, elements `1..=2^n` stored as `0..2^n`.
struct FiniteModel {
    order: u32,
    table: Vec<Vec<u32>>,
}

impl FiniteModel {
    fn new(order: u32) -> Self {
        let n = 1usize << order;
        let mut table = vec![vec![0u32; n]; n];
        // Row of the top element is the identity map.
        table[n - 1] = (0..n as u32).collect();
        for p in (0..n - 1).rev() {
            table[p][0] = (p + 1) as u32;
            for q in 1..n {
                let prev = table[p][q - 1] as usize;
                debug_assert!(prev > p);
                table[p][q] = table[prev][p + 1];
            }
        }
        FiniteModel { order, table }
    }

    fn eval(&self, t: &LdTerm) -> u32 {
        match t {
            LdTerm::Leaf => 0,
            LdTerm::Node(l, r) => self.table[self.eval(l) as usize][self.eval(r) as usize],
        }
    }
}

/// Reusable oracle; keeps its term store and tables between queries.
pub struct LdOracle {
    bounds: OracleBounds,
    terms: Terms,
    models: Vec<FiniteModel>,
}

impl LdOracle {
    pub fn new(bounds: OracleBounds) -> Self {
        LdOracle {
            bounds,
            terms: Terms::new(),
            models: (1..=6).map(FiniteModel::new).collect(),
        }
    }

    pub fn bounds(&self) -> OracleBounds {
        self.bounds
    }

    pub fn decide(&mut self, s: &LdTerm, t: &LdTerm) -> Verdict {
        if let Some(m) = self.models.iter().find(|m| m.eval(s) != m.eval(t)) {
            return Verdict::Distinct(Refutation::FiniteModel { order: m.order });
        }
        let (sid, tid) = (self.terms.intern(s), self.terms.intern(t));
        match search(&mut self.terms, sid, tid, &self.bounds) {
            Search::Found(steps) => return Verdict::Equivalent { steps },
            Search::Exhausted => return Verdict::Distinct(Refutation::LeftClosureExhausted),
            Search::Truncated => {}
        }
        match search(&mut self.terms, tid, sid, &self.bounds) {
            Search::Found(steps) => Verdict::Equivalent { steps },
            Search::Exhausted => Verdict::Distinct(Refutation::RightClosureExhausted),
            Search::Truncated => Verdict::Unknown,
        }
    }
}

/// One-shot form of [`LdOracle::decide`] with the given depth bound and
/// default size and state bounds.
pub fn ld_equiv_oracle(s: &LdTerm, t: &LdTerm, depth_bound: usize) -> Verdict {
    let bounds = OracleBounds {
        depth: depth_bound,
        ..OracleBounds::default()
    };
    LdOracle::new(bounds).decide(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LdTerm {
        LdTerm::Leaf
    }

    fn op(l: LdTerm, r: LdTerm) -> LdTerm {
        LdTerm::op(l, r)
    }

    #[test]
    fn examples() {
        let s = op(x(), op(x(), x()));
        let t = op(op(x(), x()), op(x(), x()));
        assert_eq!(ld_equiv_oracle(&s, &t, 1), Verdict::Equivalent { steps: 1 });
        assert_eq!(ld_equiv_oracle(&t, &s, 1), Verdict::Equivalent { steps: 1 });
        assert_eq!(
            ld_equiv_oracle(&x(), &x(), 3),
            Verdict::Equivalent { steps: 0 }
        );
        assert_eq!(
            ld_equiv_oracle(&x(), &op(x(), x()), 3).as_bool(),
            Some(false)
        );
    }

    #[test]
    fn right_closure_refutes() {
        assert_eq!(
            ld_equiv_oracle(&op(x(), op(x(), x())), &x(), 2).as_bool(),
            Some(false)
        );
    }

    #[test]
    fn neighbours_of_small_terms() {
        let mut terms = Terms::new();
        let xx = terms.node(LEAF, LEAF);
        assert!(terms.neighbours(xx).is_empty());
        let s = terms.intern(&op(x(), op(x(), x())));
        let t = terms.intern(&op(op(x(), x()), op(x(), x())));
        assert_eq!(terms.neighbours(s), vec![t]);
        assert!(terms.neighbours(t).contains(&s));
    }

    #[test]
    fn finite_models_are_left_distributive() {
        for order in 1..=4 {
            let m = FiniteModel::new(order);
            let n = m.table.len();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let t = &m.table;
                        assert_eq!(
                            t[a][t[b][c] as usize],
                            t[t[a][b] as usize][t[a][c] as usize]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn two_element_table() {
        let m = FiniteModel::new(1);
        assert_eq!(m.table, vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn depth_bound_gives_unknown_without_refutation() {
        let s = op(x(), op(x(), x()));
        let t = op(op(x(), x()), op(x(), x()));
        let mut oracle = LdOracle::new(OracleBounds {
            depth: 0,
            max_size: 64,
            max_states: 10,
        });
        assert_eq!(oracle.decide(&s, &t), Verdict::Unknown);
    }
}
