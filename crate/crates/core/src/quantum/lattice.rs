//! Finite lattices with precomputed meet and join tables.

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl FiniteLattice {
    /// Builds a lattice from a partial order, given as `leq[a][b] ⇔ a ≤ b`.
    pub fn from_order(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::NotALattice("order relation must be a non-empty square table".into()));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::NotALattice(format!("{} ≤ {} fails", labels[a], labels[a])));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::NotALattice(format!("{} and {} are mutually below", labels[a], labels[b])));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::NotALattice(format!(
                            "order is not transitive at {}, {}, {}",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let bound = |a: usize, b: usize, upper: bool| -> Result<usize> {
            let rel = |x: usize, y: usize| if upper { leq[x][y] } else { leq[y][x] };
            let cands: Vec<usize> = (0..n).filter(|&z| rel(a, z) && rel(b, z)).collect();
            cands.iter().copied().find(|&z| cands.iter().all(|&w| rel(z, w))).ok_or_else(|| {
                Error::NotALattice(format!(
                    "{} and {} have no {}",
                    labels[a],
                    labels[b],
                    if upper { "least upper bound" } else { "greatest lower bound" }
                ))
            })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = bound(a, b, false)?;
                join[a][b] = bound(a, b, true)?;
            }
        }
        Ok(FiniteLattice { labels, leq, meet, join })
    }

    /// Builds a lattice from operation tables; the order is read off as
    /// `a ≤ b ⇔ a ∧ b = a`. Axioms are not checked here.
    pub(crate) fn from_tables(labels: Vec<String>, meet: Vec<Vec<usize>>, join: Vec<Vec<usize>>) -> Self {
        let n = labels.len();
        let leq = (0..n).map(|a| (0..n).map(|b| meet[a][b] == a).collect()).collect();
        FiniteLattice { labels, leq, meet, join }
    }

    /// The pentagon `N₅`: `0 < a < c < 1`, `0 < b < 1`.
    pub fn pentagon() -> Self {
        Self::from_covers(&["0", "a", "b", "c", "1"], &[(0, 1), (0, 2), (1, 3), (3, 4), (2, 4)])
    }

    /// The diamond `M₃`: three atoms between `0` and `1`.
    pub fn diamond() -> Self {
        Self::from_covers(&["0", "a", "b", "c", "1"], &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    }

    /// Subsets of `{1..k}` ordered by inclusion.
    pub fn boolean(k: u32) -> Result<Self> {
        if k > 8 {
            return Err(Error::ResourceLimit(format!("boolean lattice on {k} atoms is too large")));
        }
        let n = 1usize << k;
        let labels = (0..n)
            .map(|s| {
                let items: Vec<String> = (0..k).filter(|&j| s >> j & 1 == 1).map(|j| (j + 1).to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        let leq = (0..n).map(|a| (0..n).map(|b| a & b == a).collect()).collect();
        Self::from_order(labels, leq)
    }

    /// The chain `0 < 1 < … < k−1`.
    pub fn chain(k: usize) -> Result<Self> {
        if k == 0 || k > 256 {
            return Err(Error::ResourceLimit(format!("chain length {k} outside 1..=256")));
        }
        let labels = (0..k).map(|i| i.to_string()).collect();
        let leq = (0..k).map(|a| (0..k).map(|b| a <= b).collect()).collect();
        Self::from_order(labels, leq)
    }

    fn from_covers(labels: &[&str], covers: &[(usize, usize)]) -> Self {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in covers {
            leq[a][b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if leq[a][k] && leq[k][b] {
                        leq[a][b] = true;
                    }
                }
            }
        }
        Self::from_order(labels.iter().map(|s| s.to_string()).collect(), leq).expect("named lattice")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    fn witness(&self, law: Law, t: [usize; 3], lhs: usize, rhs: usize) -> LawWitness {
        let l = |x: usize| self.labels[x].clone();
        LawWitness { law, a: l(t[0]), b: l(t[1]), c: l(t[2]), lhs: l(lhs), rhs: l(rhs) }
    }

    fn triples(&self) -> impl Iterator<Item = [usize; 3]> {
        let n = self.len();
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    MeetAssociative,
    JoinAssociative,
    MeetCommutative,
    JoinCommutative,
    MeetIdempotent,
    JoinIdempotent,
    Absorption,
    Modular,
    Distributive,
}

/// A triple violating `law`, with both sides of the identity evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawWitness {
    pub law: Law,
    pub a: String,
    pub b: String,
    pub c: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an exhaustive identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub holds: bool,
    pub witness: Option<LawWitness>,
}

impl LawCheck {
    fn from_witness(witness: Option<LawWitness>) -> Self {
        LawCheck { holds: witness.is_none(), witness }
    }
}

/// Associativity, commutativity, idempotence and absorption of `∧` and `∨`
/// over every triple; the first failing law is returned as a witness.
pub fn check_lattice_axioms(l: &FiniteLattice) -> LawCheck {
    let (m, j) = (|a, b| l.meet(a, b), |a, b| l.join(a, b));
    for t @ [a, b, c] in l.triples() {
        let checks = [
            (Law::MeetAssociative, m(m(a, b), c), m(a, m(b, c))),
            (Law::JoinAssociative, j(j(a, b), c), j(a, j(b, c))),
            (Law::MeetCommutative, m(a, b), m(b, a)),
            (Law::JoinCommutative, j(a, b), j(b, a)),
            (Law::MeetIdempotent, m(a, a), a),
            (Law::JoinIdempotent, j(a, a), a),
            (Law::Absorption, m(a, j(a, b)), a),
            (Law::Absorption, j(a, m(a, b)), a),
        ];
        if let Some(&(law, lhs, rhs)) = checks.iter().find(|(_, x, y)| x != y) {
            return LawCheck::from_witness(Some(l.witness(law, t, lhs, rhs)));
        }
    }
    LawCheck::from_witness(None)
}

/// The modular law: `b ≤ a ⇒ a ∧ (b ∨ c) = b ∨ (a ∧ c)`.
pub fn is_modular(l: &FiniteLattice) -> LawCheck {
    LawCheck::from_witness(l.triples().filter(|&[a, b, _]| l.leq(b, a)).find_map(|t @ [a, b, c]| {
        let lhs = l.meet(a, l.join(b, c));
        let rhs = l.join(b, l.meet(a, c));
        (lhs != rhs).then(|| l.witness(Law::Modular, t, lhs, rhs))
    }))
}

/// The distributive law: `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
pub fn is_distributive(l: &FiniteLattice) -> LawCheck {
    LawCheck::from_witness(l.triples().find_map(|t @ [a, b, c]| {
        let lhs = l.meet(a, l.join(b, c));
        let rhs = l.join(l.meet(a, b), l.meet(a, c));
        (lhs != rhs).then(|| l.witness(Law::Distributive, t, lhs, rhs))
    }))
}
