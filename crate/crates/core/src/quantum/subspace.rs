//! The lattice of subspaces of `𝔽_q^d`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::lattice::FiniteLattice;
use crate::arith::{mod_inverse_u64, Prime};
use crate::{Error, Result};

/// Bound on `q^d`.
pub const MAX_AMBIENT_SIZE: u64 = 1 << 14;
/// Bound on the number of subspaces, which sizes the operation tables.
pub const MAX_SUBSPACES: usize = 4096;

/// A subspace stored as its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    rows: Vec<Vec<u64>>,
}

impl Subspace {
    pub fn span(q: Prime, d: usize, vectors: &[Vec<u64>]) -> Self {
        Subspace { rows: rref(q.get(), d, vectors.to_vec()) }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    fn contains(&self, q: u64, v: &[u64]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rref(q, v.len(), rows).len() == self.rows.len()
    }

    /// All `q^dim` vectors of the subspace.
    fn vectors(&self, q: u64, d: usize) -> Vec<Vec<u64>> {
        let mut out = vec![vec![0; d]];
        for row in &self.rows {
            out = out
                .iter()
                .flat_map(|v| (0..q).map(move |c| v.iter().zip(row).map(|(a, b)| (a + c * b) % q).collect()))
                .collect();
        }
        out
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("0");
        }
        let vs: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("({})", r.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "<{}>", vs.join(","))
    }
}

fn rref(q: u64, d: usize, mut rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = mod_inverse_u64(rows[r][c], q).expect("nonzero mod prime");
        for v in rows[r].iter_mut() {
            *v = *v * inv % q;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v = (*v + (q - f) * pv) % q;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// All subspaces of `𝔽_q^d`, sorted by dimension then basis, with their
/// lattice of intersections and spans.
#[derive(Debug, Clone)]
pub struct SubspaceLattice {
    q: Prime,
    d: usize,
    subspaces: Vec<Subspace>,
    lattice: FiniteLattice,
}

/// `Σ_k [d choose k]_q`, the number of subspaces of `𝔽_q^d`.
pub fn gaussian_binomial_sum(q: u64, d: u32) -> BigInt {
    let q = BigInt::from(q);
    let qp = |k: u32| num_traits::pow(q.clone(), k as usize);
    (0..=d)
        .map(|k| {
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for i in 0..k {
                num *= qp(d - i) - 1;
                den *= qp(i + 1) - 1;
            }
            num / den
        })
        .fold(BigInt::zero(), |a, b| a + b)
}

/// Enumerates the subspace lattice of `𝔽_q^d`.
pub fn subspace_lattice(q: Prime, d: usize) -> Result<SubspaceLattice> {
    let size = (q.get() as u128).checked_pow(d as u32);
    if d == 0 || size.is_none_or(|s| s > MAX_AMBIENT_SIZE as u128) {
        return Err(Error::ResourceLimit(format!("q^d = {q}^{d} outside 1 < q^d <= {MAX_AMBIENT_SIZE}")));
    }
    let expected = gaussian_binomial_sum(q.get(), d as u32);
    if expected > BigInt::from(MAX_SUBSPACES) {
        return Err(Error::ResourceLimit(format!("F_{q}^{d} has {expected} subspaces, above {MAX_SUBSPACES}")));
    }
    let qq = q.get();

    // lines through normalized vectors, then closure under span
    let zero = Subspace { rows: Vec::new() };
    let mut lines = BTreeSet::new();
    for code in 1..size.expect("checked") as u64 {
        let v: Vec<u64> = (0..d).map(|j| code / qq.pow(j as u32) % qq).collect();
        lines.insert(Subspace::span(q, d, &[v]));
    }
    let mut all: BTreeSet<Subspace> = BTreeSet::from([zero]);
    let mut frontier: Vec<Subspace> = lines.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        if !all.insert(s.clone()) {
            continue;
        }
        for l in &lines {
            if !s.contains(qq, &l.rows[0]) {
                let mut rows = s.rows.clone();
                rows.extend(l.rows.iter().cloned());
                frontier.push(Subspace::span(q, d, &rows));
            }
        }
    }
    let mut subspaces: Vec<Subspace> = all.into_iter().collect();
    subspaces.sort_by(|a, b| (a.dim(), &a.rows).cmp(&(b.dim(), &b.rows)));
    debug_assert_eq!(BigInt::from(subspaces.len()), expected);

    let index: HashMap<&Subspace, usize> = subspaces.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let n = subspaces.len();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    let members: Vec<Vec<Vec<u64>>> = subspaces.iter().map(|s| s.vectors(qq, d)).collect();
    for a in 0..n {
        for b in a..n {
            let mut rows = subspaces[a].rows.clone();
            rows.extend(subspaces[b].rows.iter().cloned());
            let j = index[&Subspace::span(q, d, &rows)];
            let common: Vec<Vec<u64>> =
                members[a].iter().filter(|v| subspaces[b].contains(qq, v)).cloned().collect();
            let m = index[&Subspace::span(q, d, &common)];
            join[a][b] = j;
            join[b][a] = j;
            meet[a][b] = m;
            meet[b][a] = m;
        }
    }
    let labels = subspaces.iter().map(Subspace::to_string).collect();
    Ok(SubspaceLattice { q, d, lattice: FiniteLattice::from_tables(labels, meet, join), subspaces })
}

impl SubspaceLattice {
    pub fn q(&self) -> Prime {
        self.q
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.subspaces.iter().position(|t| t == s)
    }
}
