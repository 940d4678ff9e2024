//! 2-SAT in linear time via strongly connected components of the
//! implication graph.

use std::fmt;
use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// A variable or its negation, packed as `2 * var + negated`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(u32);

impl Literal {
    pub fn new(var: usize, positive: bool) -> Self {
        debug_assert!(var < (u32::MAX / 2) as usize);
        Literal((2 * var + usize::from(!positive)) as u32)
    }

    pub fn pos(var: usize) -> Self {
        Literal::new(var, true)
    }

    pub fn neg(var: usize) -> Self {
        Literal::new(var, false)
    }

    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    pub fn negate(self) -> Self {
        Literal(self.0 ^ 1)
    }

    /// Node index in the implication graph.
    #[inline]
    fn node(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.var())
        } else {
            write!(f, "¬x{}", self.var())
        }
    }
}

/// A conjunction of 2-clauses over variables `0..vars`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    vars: usize,
    clauses: Vec<(Literal, Literal)>,
}

impl TwoSatFormula {
    pub fn new(vars: usize) -> Self {
        TwoSatFormula {
            vars,
            clauses: Vec::new(),
        }
    }

    pub fn with_capacity(vars: usize, clauses: usize) -> Self {
        TwoSatFormula {
            vars,
            clauses: Vec::with_capacity(clauses),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[(Literal, Literal)] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Appends the clause `a ∨ b`. Duplicates are kept.
    pub fn add_clause(&mut self, a: Literal, b: Literal) -> Result<()> {
        for lit in [a, b] {
            if lit.var() >= self.vars {
                return Err(Error::VariableOutOfRange {
                    var: lit.var(),
                    vars: self.vars,
                });
            }
        }
        self.clauses.push((a, b));
        Ok(())
    }

    /// Caller guarantees both variables are in range.
    #[inline]
    pub(crate) fn push_clause(&mut self, a: Literal, b: Literal) {
        debug_assert!(a.var() < self.vars && b.var() < self.vars);
        self.clauses.push((a, b));
    }

    pub fn solve(&self) -> Option<Assignment> {
        self.solve_with_stats().0
    }

    /// Solves the formula and reports how many implication edges the SCC pass
    /// traversed. The count is exactly `2 * clauses`.
    pub fn solve_with_stats(&self) -> (Option<Assignment>, SolveStats) {
        let graph = ImplicationGraph::build(self);
        let (component, edge_visits) = graph.tarjan();
        let stats = SolveStats {
            nodes: graph.nodes(),
            edges: graph.targets.len(),
            edge_visits,
        };
        // Tarjan numbers components in reverse topological order, so a literal
        // whose component is numbered lower comes later in the ordering.
        let mut values = Vec::with_capacity(self.vars);
        for var in 0..self.vars {
            let t = component[Literal::pos(var).node() as usize];
            let f = component[Literal::neg(var).node() as usize];
            if t == f {
                return (None, stats);
            }
            values.push(t < f);
        }
        (Some(Assignment { values }), stats)
    }

    /// Writes the implication graph, one `a -> b` line per edge.
    pub fn write_implication_graph<W: Write>(&self, mut out: W) -> io::Result<()> {
        for &(a, b) in &self.clauses {
            writeln!(out, "{:?} -> {:?}", a.negate(), b)?;
            writeln!(out, "{:?} -> {:?}", b.negate(), a)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: usize,
    pub edges: usize,
    pub edge_visits: usize,
}

/// A total truth assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn from_values(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn value(&self, var: usize) -> bool {
        self.values[var]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn eval(&self, lit: Literal) -> bool {
        self.values[lit.var()] == lit.is_positive()
    }

    pub fn satisfies(&self, formula: &TwoSatFormula) -> bool {
        self.values.len() == formula.vars
            && formula
                .clauses
                .iter()
                .all(|&(a, b)| self.eval(a) || self.eval(b))
    }
}

/// An implication digraph supplied row by row instead of as a clause list.
///
/// The successors of a literal are returned as two variable sets: `lit → x_v`
/// for `v` in the first and `lit → ¬x_v` for `v` in the second. Dense formulas
/// with `Θ(n^2)` clauses are solved this way with sequential word scans.
pub trait ImplicationRows {
    fn vars(&self) -> usize;

    fn successors(&self, lit: Literal) -> (VertexSet, VertexSet);
}

/// Solves the 2-SAT instance whose implication graph is `rows`, in time
/// linear in the number of implications plus `O(vars^2 / 64)` word scans.
pub fn solve_rows<R: ImplicationRows + ?Sized>(rows: &R) -> Option<Assignment> {
    const UNSEEN: u32 = u32::MAX;
    let vars = rows.vars();
    let nodes = 2 * vars;
    let mut index = vec![UNSEEN; nodes];
    let mut low = vec![0u32; nodes];
    let mut component = vec![UNSEEN; nodes];
    let mut stack: Vec<u32> = Vec::new();
    let mut call: Vec<RowCursor> = Vec::new();
    let mut counter = 0u32;
    let mut components = 0u32;

    let open = |node: u32| {
        let lit = Literal(node);
        let (pos, neg) = rows.successors(lit);
        RowCursor::new(node, pos, neg)
    };

    for root in 0..nodes as u32 {
        if index[root as usize] != UNSEEN {
            continue;
        }
        index[root as usize] = counter;
        low[root as usize] = counter;
        counter += 1;
        stack.push(root);
        call.push(open(root));

        while let Some(frame) = call.last_mut() {
            let v = frame.node as usize;
            if let Some(w) = frame.next() {
                let wi = w as usize;
                if index[wi] == UNSEEN {
                    index[wi] = counter;
                    low[wi] = counter;
                    counter += 1;
                    stack.push(w);
                    call.push(open(w));
                } else if component[wi] == UNSEEN {
                    low[v] = low[v].min(index[wi]);
                }
                continue;
            }
            call.pop();
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    component[w as usize] = components;
                    if w as usize == v {
                        break;
                    }
                }
                components += 1;
            }
            if let Some(parent) = call.last() {
                let p = parent.node as usize;
                low[p] = low[p].min(low[v]);
            }
        }
    }

    let mut values = Vec::with_capacity(vars);
    for var in 0..vars {
        let t = component[Literal::pos(var).node() as usize];
        let f = component[Literal::neg(var).node() as usize];
        if t == f {
            return None;
        }
        values.push(t < f);
    }
    Some(Assignment { values })
}

/// Resumable iteration over one literal's successor row.
struct RowCursor {
    node: u32,
    words: Vec<u64>,
    positive_words: usize,
    word: usize,
    bits: u64,
}

impl RowCursor {
    fn new(node: u32, pos: VertexSet, neg: VertexSet) -> Self {
        let positive_words = pos.as_words().len();
        let mut words = Vec::with_capacity(2 * positive_words);
        words.extend_from_slice(pos.as_words());
        words.extend_from_slice(neg.as_words());
        let bits = words.first().copied().unwrap_or(0);
        RowCursor {
            node,
            words,
            positive_words,
            word: 0,
            bits,
        }
    }

    fn next(&mut self) -> Option<u32> {
        while self.bits == 0 {
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.bits = self.words[self.word];
        }
        let bit = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        let lit = if self.word < self.positive_words {
            Literal::pos(self.word * 64 + bit)
        } else {
            Literal::neg((self.word - self.positive_words) * 64 + bit)
        };
        Some(lit.node())
    }
}

/// Compressed adjacency of the literal implication digraph.
struct ImplicationGraph {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl ImplicationGraph {
    fn build(formula: &TwoSatFormula) -> Self {
        let nodes = 2 * formula.vars;
        let mut offsets = vec![0u32; nodes + 1];
        for &(a, b) in &formula.clauses {
            offsets[a.negate().node() as usize + 1] += 1;
            offsets[b.negate().node() as usize + 1] += 1;
        }
        for i in 0..nodes {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; 2 * formula.clauses.len()];
        let mut push = |from: u32, to: u32| {
            let slot = &mut fill[from as usize];
            targets[*slot as usize] = to;
            *slot += 1;
        };
        for &(a, b) in &formula.clauses {
            push(a.negate().node(), b.node());
            push(b.negate().node(), a.node());
        }
        ImplicationGraph { offsets, targets }
    }

    fn nodes(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Iterative Tarjan. Returns the component id of every node and the number
    /// of edges examined.
    fn tarjan(&self) -> (Vec<u32>, usize) {
        const UNSEEN: u32 = u32::MAX;
        let n = self.nodes();
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0u32; n];
        let mut component = vec![UNSEEN; n];
        let mut next_edge: Vec<u32> = self.offsets[..n].to_vec();
        let mut stack: Vec<u32> = Vec::new();
        let mut call: Vec<u32> = Vec::new();
        let mut counter = 0u32;
        let mut components = 0u32;
        let mut edge_visits = 0usize;

        for root in 0..n as u32 {
            if index[root as usize] != UNSEEN {
                continue;
            }
            index[root as usize] = counter;
            low[root as usize] = counter;
            counter += 1;
            stack.push(root);
            call.push(root);

            while let Some(&v) = call.last() {
                let vi = v as usize;
                let end = self.offsets[vi + 1];
                if next_edge[vi] < end {
                    let w = self.targets[next_edge[vi] as usize];
                    next_edge[vi] += 1;
                    edge_visits += 1;
                    let wi = w as usize;
                    if index[wi] == UNSEEN {
                        index[wi] = counter;
                        low[wi] = counter;
                        counter += 1;
                        stack.push(w);
                        call.push(w);
                    } else if component[wi] == UNSEEN {
                        low[vi] = low[vi].min(index[wi]);
                    }
                    continue;
                }
                call.pop();
                if low[vi] == index[vi] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        component[w as usize] = components;
                        if w == v {
                            break;
                        }
                    }
                    components += 1;
                }
                if let Some(&parent) = call.last() {
                    let pi = parent as usize;
                    low[pi] = low[pi].min(low[vi]);
                }
            }
        }
        (component, edge_visits)
    }
}
