//! Finitely presented groups: text format, coset enumeration, abelianization
//! and substitution of matrix images.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::group::{pu_equal, GroupElt};
use crate::word::{parse_letters, Letters};

use super::table::{closure, iso_check, FiniteGroupTable};
use super::IsotropyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub gens: Vec<String>,
    pub rels: Vec<Letters>,
}

impl Presentation {
    pub fn new(gens: &[&str], rels: &[&str]) -> Result<Presentation, IsotropyError> {
        let gens: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let mut p = Presentation { gens, rels: Vec::new() };
        for r in rels {
            p.add_relation(r)?;
        }
        Ok(p)
    }

    /// Add a relator, or a chain of equalities `u = v = w` (each
    /// consecutive pair becomes u·v⁻¹). `id` names the identity.
    pub fn add_relation(&mut self, text: &str) -> Result<(), IsotropyError> {
        let known = |s: &str| self.gens.iter().any(|g| g == s);
        let parts = text
            .split('=')
            .map(|s| parse_letters(s, &known, Some("id")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut new = Vec::new();
        if parts.len() == 1 {
            new.push(parts[0].clone());
        } else {
            for w in parts.windows(2) {
                new.push(w[0].concat(&w[1].inverse()));
            }
        }
        self.rels.extend(new.into_iter().filter(|r| !r.is_empty()));
        Ok(())
    }

    pub fn with_relations(&self, extra: &[&str]) -> Result<Presentation, IsotropyError> {
        let mut p = self.clone();
        for r in extra {
            p.add_relation(r)?;
        }
        Ok(p)
    }

    fn gen_index(&self, name: &str) -> usize {
        self.gens.iter().position(|g| g == name).expect("validated generator")
    }

    /// Word as coset-table columns: generator i is column 2i, its inverse 2i+1.
    fn columns(&self, w: &Letters) -> Vec<usize> {
        w.syllables()
            .map(|(n, e)| 2 * self.gen_index(n) + usize::from(e < 0))
            .collect()
    }
}

impl std::str::FromStr for Presentation {
    type Err = IsotropyError;

    /// `gens: a b c; rels: a^6, b^6, a*b*a^-1*b^-1`
    fn from_str(s: &str) -> Result<Presentation, IsotropyError> {
        let bad = |msg: &str| IsotropyError::PresentationSyntax(msg.to_string());
        let mut gens = None;
        let mut rels = None;
        for section in s.split(';') {
            let section = section.trim();
            if section.is_empty() {
                continue;
            }
            let (key, body) = section.split_once(':').ok_or_else(|| bad("expected `key: value`"))?;
            match key.trim() {
                "gens" => gens = Some(body.split([' ', ',']).filter(|t| !t.is_empty()).collect::<Vec<_>>()),
                "rels" => rels = Some(split_top_level(body)),
                other => return Err(bad(&format!("unknown section {other:?}"))),
            }
        }
        let gens = gens.ok_or_else(|| bad("missing gens"))?;
        for g in &gens {
            if !g.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                || !g.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(bad(&format!("bad generator name {g:?}")));
            }
        }
        Presentation::new(&gens, &rels.unwrap_or_default())
    }
}

/// Split on commas outside brackets and parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().map(str::trim).filter(|t| !t.is_empty()).collect()
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}; rels: ", self.gens.join(" "))?;
        // Matrix words spell the identity `Id`; here it is `id`.
        let rels: Vec<String> =
            self.rels.iter().map(|r| if r.is_empty() { "id".to_string() } else { r.to_string() }).collect();
        write!(f, "{}", rels.join(", "))
    }
}

const NONE: usize = usize::MAX;

/// A complete coset table, standardized so that cosets are numbered in the
/// order a breadth-first scan of columns first reaches them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetTable {
    /// rows[c][2i] = c·gᵢ, rows[c][2i+1] = c·gᵢ⁻¹.
    pub rows: Vec<Vec<usize>>,
    pub complete: bool,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    /// Coset reached from `c` by the given word columns.
    fn walk(&self, c: usize, cols: &[usize]) -> usize {
        cols.iter().fold(c, |acc, &x| self.rows[acc][x])
    }

    /// For the trivial subgroup, the regular representation as a group table.
    pub fn to_group_table(&self) -> FiniteGroupTable {
        let n = self.index();
        // word (columns) reaching each coset from 0
        let mut path: Vec<Option<Vec<usize>>> = vec![None; n];
        path[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for x in 0..self.rows[c].len() {
                let d = self.rows[c][x];
                if path[d].is_none() {
                    let mut p = path[c].clone().expect("visited");
                    p.push(x);
                    path[d] = Some(p);
                    queue.push_back(d);
                }
            }
        }
        let table = (0..n)
            .map(|a| (0..n).map(|b| self.walk(a, path[b].as_ref().expect("transitive"))).collect())
            .collect();
        let ngens = self.rows.first().map_or(0, |r| r.len() / 2);
        let gens = (0..ngens).map(|i| self.rows[0][2 * i]).collect();
        FiniteGroupTable::from_table(table, gens)
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    max_live: usize,
}

impl Enumerator {
    fn new(ncols: usize, max_live: usize) -> Self {
        Enumerator { ncols, table: vec![NONE; ncols], parent: vec![0], live: 1, max_live }
    }

    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.ncols + x]
    }

    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.ncols + x] = d;
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) {
        let d = self.parent.len();
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        self.live -= 1;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, x ^ 1, NONE);
                let (e1, f1) = (self.rep(e), self.rep(f));
                let t = self.get(e1, x);
                if t != NONE {
                    self.merge(f1, t, &mut queue);
                } else {
                    let u = self.get(f1, x ^ 1);
                    if u != NONE {
                        self.merge(e1, u, &mut queue);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                    }
                }
            }
        }
    }

    /// Scan `w` at coset `c`. With `fill`, undefined gaps are filled by new
    /// cosets; without, the scan stops at the first gap after deductions.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> Result<(), ()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, w[j as usize] ^ 1) != NONE {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            if self.live >= self.max_live {
                return Err(());
            }
            self.define(f, w[i]);
        }
    }

    /// Scan every relator at every live coset without defining anything.
    fn lookahead(&mut self, rels: &[Vec<usize>]) {
        let mut c = 0;
        while c < self.parent.len() {
            for r in rels {
                if !self.alive(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
            c += 1;
        }
    }

    /// Run `step`, retrying once after a lookahead pass if the coset bound
    /// was hit.
    fn with_room(
        &mut self,
        rels: &[Vec<usize>],
        mut step: impl FnMut(&mut Self) -> Result<(), ()>,
    ) -> Result<(), ()> {
        if step(self).is_ok() {
            return Ok(());
        }
        let before = self.live;
        self.lookahead(rels);
        if self.live < before {
            step(self)
        } else {
            Err(())
        }
    }
}

/// Coset enumeration (HLT with lookahead) of the subgroup generated by
/// `subgroup` in the group presented by `p`.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup: &[Letters],
    max_cosets: usize,
) -> Result<CosetTable, IsotropyError> {
    let ncols = 2 * p.gens.len();
    let rels: Vec<Vec<usize>> = p.rels.iter().map(|r| p.columns(r)).collect();
    let sub: Vec<Vec<usize>> = subgroup.iter().map(|w| p.columns(w)).collect();
    let exceeded = || IsotropyError::MaxCosetsExceeded(max_cosets);
    let mut e = Enumerator::new(ncols, max_cosets.max(1));
    for w in &sub {
        e.with_room(&rels, |e| e.scan(0, w, true)).map_err(|_| exceeded())?;
    }
    let mut c = 0;
    while c < e.parent.len() {
        for r in &rels {
            if !e.alive(c) {
                break;
            }
            e.with_room(&rels, |e| e.scan(c, r, true)).map_err(|_| exceeded())?;
        }
        for x in 0..ncols {
            if !e.alive(c) {
                break;
            }
            if e.get(c, x) == NONE {
                e.with_room(&rels, |e| {
                    if e.get(c, x) != NONE {
                        return Ok(());
                    }
                    if e.live >= e.max_live {
                        return Err(());
                    }
                    e.define(c, x);
                    Ok(())
                })
                .map_err(|_| exceeded())?;
            }
        }
        c += 1;
    }
    Ok(standardize(&mut e))
}

fn standardize(e: &mut Enumerator) -> CosetTable {
    let mut number = BTreeMap::new();
    let mut order = vec![0usize];
    number.insert(0usize, 0usize);
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        for x in 0..e.ncols {
            let d = e.rep(e.get(c, x));
            if let std::collections::btree_map::Entry::Vacant(v) = number.entry(d) {
                v.insert(order.len());
                order.push(d);
            }
        }
        k += 1;
    }
    let rows = order
        .iter()
        .map(|&c| (0..e.ncols).map(|x| number[&e.rep(e.get(c, x))]).collect())
        .collect();
    CosetTable { rows, complete: true }
}

/// Order of a finite group given by a presentation.
pub fn group_order(p: &Presentation, max_cosets: usize) -> Result<usize, IsotropyError> {
    Ok(todd_coxeter(p, &[], max_cosets)?.index())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    /// Invariant factors greater than 1, each dividing the next.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z{d}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.free_rank));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Diagonal of the Smith normal form of an integer matrix.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by(|&(a, b), &(c, d)| m[a][b].abs().cmp(&m[c][d].abs()));
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &m[t][j];
                        m[i][j] -= v;
                    }
                }
                if !m[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &q * &m[i][t];
                        m[i][j] -= v;
                    }
                }
                if !m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&m[i][j] % &m[t][t]).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = m[i][j].clone();
                            m[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let n = p.gens.len();
    let m: Vec<Vec<BigInt>> = p
        .rels
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); n];
            for (g, e) in &r.0 {
                row[p.gen_index(g)] += BigInt::from(*e);
            }
            row
        })
        .collect();
    let diag = smith_diagonal(m);
    let rank = diag.len();
    AbelianInvariants {
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
        free_rank: n - rank,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomReport {
    pub relators: Vec<(String, bool)>,
    pub all_hold: bool,
}

/// Substitute matrix images into every relator and test each for the
/// projective identity.
pub fn hom_check(
    p: &Presentation,
    images: &BTreeMap<String, GroupElt>,
) -> Result<HomReport, IsotropyError> {
    for g in &p.gens {
        if !images.contains_key(g) {
            return Err(IsotropyError::MissingImage(g.clone()));
        }
    }
    let relators: Vec<(String, bool)> = p
        .rels
        .iter()
        .map(|r| {
            let m = r
                .0
                .iter()
                .fold(GroupElt::identity(), |acc, (g, e)| acc.mul(&images[g].pow(*e)));
            (r.to_string(), pu_equal(&m, &GroupElt::identity()))
        })
        .collect();
    let all_hold = relators.iter().all(|(_, ok)| *ok);
    Ok(HomReport { relators, all_hold })
}

/// True when the images generate `t`, satisfy every relator, and the
/// presented group has the same order as `t`.
pub fn matrix_group_vs_presentation(
    t: &FiniteGroupTable,
    p: &Presentation,
    images: &BTreeMap<String, GroupElt>,
    max_cosets: usize,
) -> Result<bool, IsotropyError> {
    let gens: Vec<GroupElt> = p.gens.iter().filter_map(|g| images.get(g).cloned()).collect();
    if gens.iter().any(|g| t.find_rep(g).is_none()) {
        return Ok(false);
    }
    if closure(&gens, t.order() + 1)?.order() != t.order() {
        return Ok(false);
    }
    if !hom_check(p, images)?.all_hold {
        return Ok(false);
    }
    Ok(group_order(p, max_cosets)? == t.order())
}

/// Abstract group table of a finite presentation, for comparison with a
/// matrix group.
pub fn presented_table(p: &Presentation, max_cosets: usize) -> Result<FiniteGroupTable, IsotropyError> {
    Ok(todd_coxeter(p, &[], max_cosets)?.to_group_table())
}

pub fn presentation_iso_table(
    p: &Presentation,
    t: &FiniteGroupTable,
    max_cosets: usize,
) -> Result<bool, IsotropyError> {
    Ok(iso_check(&presented_table(p, max_cosets)?, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let p = pres("gens: a b; rels: a^6, b^6 = id, a b = b a");
        assert_eq!(p.gens, vec!["a", "b"]);
        assert_eq!(p.rels.len(), 3);
        assert_eq!(p.rels[2].to_string(), "a*b*a^-1*b^-1");
        assert_eq!(p.to_string(), "gens: a b; rels: a^6, b^6, a*b*a^-1*b^-1");
        assert!("gens: a; rels: b".parse::<Presentation>().is_err());
        assert!("rels: a".parse::<Presentation>().is_err());
    }

    #[test]
    fn cyclic_enumeration() {
        let t = todd_coxeter(&pres("gens: a; rels: a^6"), &[], 100).unwrap();
        assert_eq!(t.index(), 6);
        assert!(t.complete);
        let sub = vec![Letters::single("a", 2)];
        assert_eq!(todd_coxeter(&pres("gens: a; rels: a^6"), &sub, 100).unwrap().index(), 2);
    }

    #[test]
    fn small_orders() {
        assert_eq!(group_order(&pres("gens: a b; rels: a^2, b^3, (a b)^2"), 100).unwrap(), 6);
        assert_eq!(group_order(&pres("gens: a b; rels: a^2, b^3, (a b)^5"), 1000).unwrap(), 60);
        assert_eq!(group_order(&pres("gens: a b; rels: a^4, a^2 = b^2, b a b^-1 = a^-1"), 100).unwrap(), 8);
    }

    #[test]
    fn enumeration_bound() {
        let free = pres("gens: a b; rels: a^6");
        assert!(matches!(todd_coxeter(&free, &[], 200), Err(IsotropyError::MaxCosetsExceeded(200))));
    }

    #[test]
    fn regular_representation() {
        let t = presented_table(&pres("gens: s t; rels: s^2, t^6, [s,t]"), 100).unwrap();
        assert_eq!(t.order(), 12);
        assert!(t.is_abelian());
        assert!(t.check_associative());
    }

    #[test]
    fn smith_forms() {
        let a = abelianization(&pres("gens: a b; rels: [a,b]"));
        assert_eq!(a.free_rank, 2);
        assert!(a.torsion.is_empty());
        let a = abelianization(&pres("gens: s t; rels: s^2, t^6, [s,t]"));
        assert_eq!(a.torsion, vec![BigInt::from(2), BigInt::from(6)]);
        assert_eq!(a.to_string(), "Z2 + Z6");
        let a = abelianization(&pres("gens: x y; rels: x^6, x y x (y x y)^-1"));
        assert_eq!(a.torsion, vec![BigInt::from(6)]);
        assert_eq!(a.free_rank, 0);
        assert_eq!(smith_diagonal(vec![
            vec![BigInt::from(4), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(6)],
        ]), vec![BigInt::from(2), BigInt::from(12)]);
    }
}
