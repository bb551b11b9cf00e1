//! Finite groups as multiplication tables, built either from matrix
//! generators (projective classes) or abstractly.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::group::{GroupElt, GroupError};
use crate::linalg::{HVector, Mat3};

use super::IsotropyError;

/// A finite group given by its multiplication table. Index 0 is the
/// identity. Matrix groups also carry a representative for each element.
#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    reps: Option<Vec<GroupElt>>,
}

impl FiniteGroupTable {
    /// Build from a complete table whose row/column 0 is the identity.
    pub fn from_table(table: Vec<Vec<usize>>, generators: Vec<usize>) -> FiniteGroupTable {
        let n = table.len();
        let inverses = (0..n)
            .map(|i| (0..n).find(|&j| table[i][j] == 0).expect("group has inverses"))
            .collect();
        FiniteGroupTable { table, inverses, generators, reps: None }
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: usize) -> FiniteGroupTable {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroupTable::from_table(table, if n > 1 { vec![1] } else { vec![] })
    }

    pub fn direct_product(a: &FiniteGroupTable, b: &FiniteGroupTable) -> FiniteGroupTable {
        let (na, nb) = (a.order(), b.order());
        let idx = |i: usize, j: usize| i * nb + j;
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| idx(a.mul(x / nb, y / nb), b.mul(x % nb, y % nb)))
                    .collect()
            })
            .collect();
        let gens = a
            .generators
            .iter()
            .map(|&g| idx(g, 0))
            .chain(b.generators.iter().map(|&g| idx(0, g)))
            .collect();
        FiniteGroupTable::from_table(table, gens)
    }

    /// Dihedral group of order 2n: rotations r^k at k, reflections s·r^k at n + k.
    pub fn dihedral(n: usize) -> FiniteGroupTable {
        let mul = |x: usize, y: usize| -> usize {
            let (sx, kx) = (x / n, x % n);
            let (sy, ky) = (y / n, y % n);
            // (s^a r^b)(s^c r^d) = s^{a+c} r^{(-1)^c b + d}
            let k = if sy == 0 { (kx + ky) % n } else { (n - kx + ky) % n };
            ((sx + sy) % 2) * n + k
        };
        let table = (0..2 * n).map(|x| (0..2 * n).map(|y| mul(x, y)).collect()).collect();
        FiniteGroupTable::from_table(table, vec![1 % (2 * n), n])
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn reps(&self) -> Option<&[GroupElt]> {
        self.reps.as_deref()
    }

    pub fn rep(&self, i: usize) -> Option<&GroupElt> {
        self.reps.as_ref().map(|r| &r[i])
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Spot check of associativity on every triple of generators and a
    /// deterministic sample of other triples.
    pub fn check_associative(&self) -> bool {
        let n = self.order();
        let step = (n / 17).max(1);
        let sample: Vec<usize> = (0..n).step_by(step).chain(self.generators.iter().copied()).collect();
        sample.iter().all(|&a| {
            sample
                .iter()
                .all(|&b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        })
    }

    /// Subgroup generated by the given elements, as a list of indices.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The subgroup on `elems` (which must contain 0 and be closed), as its
    /// own table. Representatives are carried over.
    pub fn subgroup(&self, elems: &[usize], gens: &[usize]) -> FiniteGroupTable {
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let table = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos[&self.mul(a, b)]).collect())
            .collect();
        let mut sub = FiniteGroupTable::from_table(table, gens.iter().map(|g| pos[g]).collect());
        sub.reps = self.reps.as_ref().map(|r| elems.iter().map(|&e| r[e].clone()).collect());
        sub
    }

    pub fn center_indices(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let conj: Vec<usize> = gens
            .iter()
            .flat_map(|&g| (0..n).map(move |x| (g, x)))
            .map(|(g, x)| self.mul(self.mul(x, g), self.inverse(x)))
            .collect();
        self.generated(&conj)
    }

    /// Index of the element with the given representative, by projective class.
    pub fn find_rep(&self, g: &GroupElt) -> Option<usize> {
        let key = g.projective_key();
        self.reps.as_ref()?.iter().position(|r| r.projective_key() == key)
    }
}

/// Breadth-first closure of matrix generators under multiplication, with
/// projective deduplication. Elements are sorted canonically (identity first,
/// then by the text of the projective key).
pub fn closure(gens: &[GroupElt], cap: usize) -> Result<FiniteGroupTable, IsotropyError> {
    let mut keys: HashMap<Mat3, usize> = HashMap::new();
    let mut elems: Vec<GroupElt> = vec![GroupElt::identity()];
    keys.insert(Mat3::identity(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let y = elems[i].mul(g);
            let key = y.projective_key();
            if keys.contains_key(&key) {
                continue;
            }
            if elems.len() >= cap {
                return Err(IsotropyError::CapExceeded(cap));
            }
            keys.insert(key, elems.len());
            queue.push_back(elems.len());
            elems.push(y);
        }
    }
    let mut order: Vec<usize> = (1..elems.len()).collect();
    let text: Vec<String> = elems.iter().map(|e| e.projective_key().to_string()).collect();
    order.sort_by(|&a, &b| text[a].cmp(&text[b]));
    order.insert(0, 0);
    let reps: Vec<GroupElt> = order.iter().map(|&i| elems[i].clone()).collect();
    let index: HashMap<Mat3, usize> =
        reps.iter().enumerate().map(|(i, r)| (r.projective_key(), i)).collect();
    let table = reps
        .iter()
        .map(|a| reps.iter().map(|b| index[&a.mul(b).projective_key()]).collect())
        .collect();
    let gen_idx = gens.iter().map(|g| index[&g.projective_key()]).collect();
    let mut t = FiniteGroupTable::from_table(table, gen_idx);
    t.reps = Some(reps);
    Ok(t)
}

pub fn common_fixed_point(t: &FiniteGroupTable, v: &HVector) -> Result<bool, GroupError> {
    let Some(reps) = t.reps() else {
        return Ok(false);
    };
    for r in reps {
        if !r.fixes_projectively(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn center(t: &FiniteGroupTable) -> FiniteGroupTable {
    let c = t.center_indices();
    t.subgroup(&c, &c)
}

/// Quotient by the normal closure of `normal_gens`.
pub fn quotient(t: &FiniteGroupTable, normal_gens: &[usize]) -> FiniteGroupTable {
    let n_sub = t.normal_closure(normal_gens);
    let mut coset_of = vec![usize::MAX; t.order()];
    let mut reps = Vec::new();
    for x in 0..t.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &m in &n_sub {
            coset_of[t.mul(x, m)] = id;
        }
    }
    let table = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of[t.mul(a, b)]).collect())
        .collect();
    let mut gens: Vec<usize> = t.generators().iter().map(|&g| coset_of[g]).filter(|&g| g != 0).collect();
    gens.dedup();
    FiniteGroupTable::from_table(table, gens)
}

/// A small generating set: greedily add elements of largest order that
/// enlarge the generated subgroup.
fn small_generating_set(t: &FiniteGroupTable) -> Vec<usize> {
    let mut cand: Vec<usize> = (1..t.order()).collect();
    cand.sort_by_key(|&a| (std::cmp::Reverse(t.element_order(a)), a));
    let mut gens = Vec::new();
    let mut span: HashSet<usize> = HashSet::from([0]);
    for a in cand {
        if span.len() == t.order() {
            break;
        }
        if !span.contains(&a) {
            gens.push(a);
            span = t.generated(&gens).into_iter().collect();
        }
    }
    gens
}

/// Try to extend generator images to an isomorphism a → b.
fn extend_to_iso(a: &FiniteGroupTable, b: &FiniteGroupTable, gens: &[usize], imgs: &[usize]) -> bool {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (g, h) in gens.iter().zip(imgs) {
            let y = a.mul(x, *g);
            let fy = b.mul(map[x], *h);
            if map[y] == usize::MAX {
                if used[fy] {
                    return false;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push_back(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])))
}

/// Brute-force isomorphism test pruned by element orders.
pub fn iso_check(a: &FiniteGroupTable, b: &FiniteGroupTable) -> bool {
    if a.order() != b.order() || a.order() > 10_000 {
        return false;
    }
    if a.order_profile() != b.order_profile() || a.is_abelian() != b.is_abelian() {
        return false;
    }
    let gens = small_generating_set(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..b.order()).filter(|&h| b.element_order(h) == a.element_order(g)).collect())
        .collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, v)| v[c]).collect();
        if extend_to_iso(a, b, &gens, &imgs) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                return false;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Invariant factors of a finite abelian group from element-order counts.
pub fn abelian_invariants_of_table(t: &FiniteGroupTable) -> Option<Vec<u64>> {
    if !t.is_abelian() {
        return None;
    }
    let n = t.order() as u64;
    let orders: Vec<u64> = (0..t.order()).map(|a| t.element_order(a) as u64).collect();
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // partitions[p] = exponents of the p-primary cyclic factors, descending
    let mut factors: Vec<u64> = Vec::new();
    for p in primes {
        let count = |k: u32| orders.iter().filter(|&&o| p.pow(k) % o == 0).count() as u64;
        let mut lambda_conj = Vec::new();
        let mut k = 1;
        loop {
            let (c1, c0) = (count(k), count(k - 1));
            if c1 == c0 {
                break;
            }
            let ratio = c1 / c0;
            lambda_conj.push(ratio.ilog(p) as usize);
            k += 1;
        }
        let parts = lambda_conj.first().copied().unwrap_or(0);
        let lambda: Vec<u32> =
            (0..parts).map(|i| lambda_conj.iter().filter(|&&c| c > i).count() as u32).collect();
        // combine into invariant factors: largest with largest
        for (i, e) in lambda.iter().enumerate() {
            if factors.len() <= i {
                factors.push(1);
            }
            factors[i] *= p.pow(*e);
        }
    }
    factors.sort_unstable();
    Some(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{eval_str, Gen};

    #[test]
    fn closure_orders() {
        assert_eq!(closure(&[Gen::J.elt()], 100).unwrap().order(), 3);
        let w12 = closure(&[eval_str("P*Q^-1").unwrap(), Gen::R.elt()], 100).unwrap();
        assert_eq!(w12.order(), 12);
        assert!(w12.is_abelian());
        assert!(matches!(closure(&[Gen::P.elt()], 50), Err(IsotropyError::CapExceeded(50))));
    }

    #[test]
    fn closure_is_canonical() {
        let a = closure(&[eval_str("P*Q^-1").unwrap(), Gen::R.elt()], 100).unwrap();
        let b = closure(&[Gen::R.elt(), eval_str("P*Q^-1").unwrap()], 100).unwrap();
        let keys = |t: &FiniteGroupTable| -> Vec<Mat3> {
            t.reps().unwrap().iter().map(GroupElt::projective_key).collect()
        };
        assert_eq!(keys(&a), keys(&b));
        assert_eq!(a.mul(3, 5), b.mul(3, 5));
        assert!(a.check_associative());
    }

    #[test]
    fn small_groups() {
        let z2z6 = FiniteGroupTable::direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(6));
        assert_eq!(z2z6.order(), 12);
        assert!(z2z6.is_abelian());
        let d6 = FiniteGroupTable::dihedral(6);
        assert!(!d6.is_abelian());
        assert!(d6.check_associative());
        assert_eq!(center(&d6).order(), 2);
        assert!(!iso_check(&FiniteGroupTable::cyclic(4), &FiniteGroupTable::direct_product(
            &FiniteGroupTable::cyclic(2),
            &FiniteGroupTable::cyclic(2)
        )));
        assert!(iso_check(&FiniteGroupTable::cyclic(6), &FiniteGroupTable::direct_product(
            &FiniteGroupTable::cyclic(2),
            &FiniteGroupTable::cyclic(3)
        )));
    }

    #[test]
    fn center_and_quotient_trivial_cases() {
        let c3 = closure(&[Gen::J.elt()], 10).unwrap();
        assert_eq!(center(&c3).order(), 3);
        let z = FiniteGroupTable::cyclic(6);
        assert!(iso_check(&quotient(&z, &[0]), &z));
        assert_eq!(quotient(&z, &[3]).order(), 3);
    }

    #[test]
    fn abelian_invariants_from_orders() {
        let z2z6 = FiniteGroupTable::direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(6));
        assert_eq!(abelian_invariants_of_table(&z2z6), Some(vec![2, 6]));
        assert_eq!(abelian_invariants_of_table(&FiniteGroupTable::cyclic(12)), Some(vec![12]));
        assert_eq!(abelian_invariants_of_table(&FiniteGroupTable::dihedral(3)), None);
    }
}
