//! Finite groups stored as dense Cayley tables.
//!
//! Elements are indices `0..N`, and index `0` is always the identity.
//! Every table is checked on construction, so the rest of the crate can
//! index into it without re-checking the group axioms.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order accepted by [`FiniteGroup::from_rows`].
pub const DEFAULT_ORDER_CAP: usize = 512;

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

/// Sorted multiset of element orders.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct OrderProfile(pub Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgroupPredicates {
    pub normal: bool,
    pub central: bool,
}

#[derive(Clone, Debug)]
pub struct ConjugateIntersection {
    pub conjugate: Subgroup,
    pub intersection: Subgroup,
}

/// `G/N` together with the canonical projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedSeries {
    /// Orders of `G, G', G'', ...` up to the first repeat.
    pub series: Vec<usize>,
    pub solvable: bool,
}

impl FiniteGroup {
    /// The cyclic group `Z_n`, element `i` standing for `a^i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group order must be ≥ 1".into()));
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::TooLarge {
                order: n,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let inverses = (0..n).map(|i| (n - i) % n).collect();
        let labels = (0..n).map(|i| format!("a^{i}")).collect();
        Ok(FiniteGroup {
            order: n,
            table,
            inverses,
            labels: Some(labels),
        })
    }

    /// The one-element group.
    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            table: vec![0],
            inverses: vec![0],
            labels: None,
        }
    }

    /// Validates a square table whose identity is already at index 0.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_rows_with_cap(rows, DEFAULT_ORDER_CAP)
    }

    pub fn from_rows_with_cap(rows: &[Vec<usize>], cap: usize) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        Self::from_flat_with_cap(n, rows.concat(), cap)
    }

    /// Validates a row-major `n × n` table.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        Self::from_flat_with_cap(order, table, DEFAULT_ORDER_CAP)
    }

    pub fn from_flat_with_cap(order: usize, table: Vec<usize>, cap: usize) -> Result<Self> {
        let n = order;
        if n == 0 {
            return Err(Error::InvalidParameter("group table is empty".into()));
        }
        if n > cap {
            return Err(Error::TooLarge { order: n, cap });
        }
        if table.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { index: bad, size: n });
        }
        let at = |i: usize, j: usize| table[i * n + j];

        for j in 0..n {
            if at(0, j) != j || at(j, 0) != j {
                return Err(Error::NotUnital { index: j });
            }
        }

        let mut inverses = vec![0; n];
        for (x, slot) in inverses.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&y| at(x, y) == 0 && at(y, x) == 0)
                .ok_or(Error::NoInverse { element: x })?;
        }

        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = at(i, j);
                if seen[v] == i {
                    return Err(Error::NonBijectiveRow { row: i });
                }
                seen[v] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..n {
            for i in 0..n {
                let v = at(i, j);
                if seen[v] == j {
                    return Err(Error::NonBijectiveColumn { column: j });
                }
                seen[v] = j;
            }
        }

        for x in 0..n {
            for y in 0..n {
                let xy = at(x, y);
                for z in 0..n {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(Error::NonAssociative { x, y, z });
                    }
                }
            }
        }

        Ok(FiniteGroup {
            order: n,
            table,
            inverses,
            labels: None,
        })
    }

    /// Accepts a table whose identity may sit at any index, moving it to 0.
    ///
    /// Returns the group and `perm`, where `perm[old] = new`.
    pub fn from_rows_reindexed(rows: &[Vec<usize>]) -> Result<(Self, Vec<usize>)> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index: bad, size: n });
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(Error::NotUnital { index: 0 })?;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, identity);
        // perm is an involution, so it is its own inverse
        let table: Vec<usize> = (0..n * n).map(|k| perm[rows[perm[k / n]][perm[k % n]]]).collect();
        Ok((Self::from_flat(n, table)?, perm))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    /// `x y x⁻¹`.
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inv(x))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub(crate) fn check_index(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                size: self.order,
            })
        }
    }

    pub fn element_order(&self, x: usize) -> Result<usize> {
        self.check_index(x)?;
        Ok(self.order_of(x))
    }

    pub(crate) fn order_of(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn center(&self) -> Subgroup {
        let elements = (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.commutes(x, z)))
            .collect();
        Subgroup::from_sorted(self.order, elements)
    }

    pub fn order_profile(&self) -> OrderProfile {
        let mut orders: Vec<usize> = (0..self.order).map(|x| self.order_of(x)).collect();
        orders.sort_unstable();
        OrderProfile(orders)
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            self.check_index(g)?;
        }
        Ok(self.closure(gens))
    }

    pub(crate) fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push(y);
                }
            }
        }
        Subgroup::from_mask(member)
    }

    pub fn subgroup_predicates(&self, h: &Subgroup) -> Result<SubgroupPredicates> {
        h.check_parent(self)?;
        let normal = self.first_non_normal(h).is_none();
        let central = h
            .elements()
            .iter()
            .all(|&z| (0..self.order).all(|x| self.commutes(x, z)));
        Ok(SubgroupPredicates { normal, central })
    }

    /// `(x, h)` with `x h x⁻¹ ∉ H`, if any.
    pub(crate) fn first_non_normal(&self, h: &Subgroup) -> Option<(usize, usize)> {
        (0..self.order).find_map(|x| {
            h.elements()
                .iter()
                .find(|&&y| !h.contains(self.conj(x, y)))
                .map(|&y| (x, y))
        })
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.first_non_normal(h).is_none()
    }

    /// `x H x⁻¹`.
    pub fn conjugate(&self, h: &Subgroup, x: usize) -> Result<Subgroup> {
        h.check_parent(self)?;
        self.check_index(x)?;
        let mut elements: Vec<usize> = h.elements().iter().map(|&y| self.conj(x, y)).collect();
        elements.sort_unstable();
        Ok(Subgroup::from_sorted(self.order, elements))
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
        a.check_parent(self)?;
        b.check_parent(self)?;
        let elements = a.elements().iter().copied().filter(|&x| b.contains(x)).collect();
        Ok(Subgroup::from_sorted(self.order, elements))
    }

    /// `x H1 x⁻¹` and `H1 ∩ H2`.
    pub fn conjugate_and_intersect(
        &self,
        h1: &Subgroup,
        x: usize,
        h2: &Subgroup,
    ) -> Result<ConjugateIntersection> {
        Ok(ConjugateIntersection {
            conjugate: self.conjugate(h1, x)?,
            intersection: self.intersection(h1, h2)?,
        })
    }

    /// `G/N`. Cosets are numbered by their smallest element, so the identity
    /// coset is 0.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        n.check_parent(self)?;
        if let Some((x, h)) = self.first_non_normal(n) {
            return Err(Error::NotNormal { x, h });
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if projection[x] == usize::MAX {
                let id = reps.len();
                reps.push(x);
                for &k in n.elements() {
                    projection[self.mul(x, k)] = id;
                }
            }
        }
        let q = reps.len();
        let table = (0..q * q)
            .map(|k| projection[self.mul(reps[k / q], reps[k % q])])
            .collect();
        let group = FiniteGroup::from_flat(q, table)?;
        Ok(Quotient { group, projection })
    }

    /// Subgroup generated by all commutators `x y x⁻¹ y⁻¹` of elements of `k`.
    pub fn commutator_subgroup(&self, k: &Subgroup) -> Subgroup {
        let mut gens = Vec::new();
        let mut seen = vec![false; self.order];
        for &x in k.elements() {
            for &y in k.elements() {
                let c = self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)));
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        self.closure(&gens)
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut current = Subgroup::whole(self);
        let mut series = vec![current.order()];
        loop {
            let next = self.commutator_subgroup(&current);
            if next.order() == current.order() {
                break;
            }
            series.push(next.order());
            current = next;
        }
        let solvable = current.order() == 1;
        DerivedSeries { series, solvable }
    }

    /// The subgroup as a group in its own right; local index `i` is
    /// `h.elements()[i]`.
    pub fn subgroup_group(&self, h: &Subgroup) -> Result<FiniteGroup> {
        h.check_parent(self)?;
        let elems = h.elements();
        let k = elems.len();
        let mut local = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            local[e] = i;
        }
        let table = (0..k * k)
            .map(|idx| local[self.mul(elems[idx / k], elems[idx % k])])
            .collect();
        let group = FiniteGroup::from_flat(k, table)?;
        match &self.labels {
            Some(l) => group.with_labels(elems.iter().map(|&e| l[e].clone()).collect()),
            None => Ok(group),
        }
    }

    /// Checks `f(xy) = f(x)f(y)` for all `x, y`, reporting the first failure.
    pub fn check_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> Result<()> {
        if map.len() != self.order {
            return Err(Error::ShapeMismatch(format!(
                "map has {} entries, source has order {}",
                map.len(),
                self.order
            )));
        }
        for &v in map {
            target.check_index(v)?;
        }
        for x in 0..self.order {
            for y in 0..self.order {
                if map[self.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::NotHomomorphism { x, y });
                }
            }
        }
        Ok(())
    }

    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        self.check_homomorphism(target, map).is_ok()
    }

    pub fn is_isomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        if self.order != target.order || !self.is_homomorphism(target, map) {
            return false;
        }
        let mut hit = vec![false; target.order];
        map.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
    }
}

/// A subgroup of some parent group, stored as a sorted element set.
///
/// Two subgroups are equal when their element sets are; the parent is only
/// tracked by its order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
}

impl Subgroup {
    /// Checks that `elements` form a subgroup of `g`.
    pub fn new(g: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        for &x in elements {
            g.check_index(x)?;
        }
        let mut mask = vec![false; g.order()];
        for &x in elements {
            mask[x] = true;
        }
        if !mask[0] {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let sub = Subgroup::from_mask(mask);
        for &x in sub.elements() {
            if !sub.contains(g.inv(x)) {
                return Err(Error::NotASubgroup(format!("inverse of {x} missing")));
            }
            for &y in sub.elements() {
                if !sub.contains(g.mul(x, y)) {
                    return Err(Error::NotASubgroup(format!("{x}·{y} missing")));
                }
            }
        }
        Ok(sub)
    }

    pub fn trivial(parent_order: usize) -> Self {
        Subgroup {
            parent_order,
            elements: vec![0],
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            parent_order: g.order(),
            elements: g.elements().collect(),
        }
    }

    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let parent_order = mask.len();
        let elements = mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
            .collect();
        Subgroup {
            parent_order,
            elements,
        }
    }

    pub(crate) fn from_sorted(parent_order: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup {
            parent_order,
            elements,
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    fn check_parent(&self, g: &FiniteGroup) -> Result<()> {
        if self.parent_order != g.order() {
            return Err(Error::NotASubgroup(format!(
                "subgroup belongs to a group of order {}, not {}",
                self.parent_order,
                g.order()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> FiniteGroup {
        FiniteGroup::from_rows(&[
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap()
    }

    /// S_3 as permutations of {0,1,2}; element 0 is the identity.
    fn s3() -> (FiniteGroup, Vec<[usize; 3]>) {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        (FiniteGroup::from_rows(&rows).unwrap(), perms)
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().rows(), vec![vec![0]]);
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.mul(3, 2), 1);
        assert_eq!(c4.element_order(1).unwrap(), 4);
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.element_order(2).unwrap(), 3);
        assert_eq!(c6.element_order(3).unwrap(), 2);
        assert_eq!(c6.element_order(0).unwrap(), 1);
        assert_eq!(c6.label(5), "a^5");
        assert!(matches!(FiniteGroup::cyclic(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(c6.element_order(6), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn validation_errors() {
        assert!(FiniteGroup::from_rows(&FiniteGroup::cyclic(4).unwrap().rows()).is_ok());
        assert_eq!(
            FiniteGroup::from_rows(&[vec![0, 1], vec![1, 1]]),
            Err(Error::NoInverse { element: 1 })
        );
        assert_eq!(
            FiniteGroup::from_rows(&[vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]]),
            Err(Error::NonBijectiveRow { row: 1 })
        );
        assert_eq!(
            FiniteGroup::from_rows(&[vec![1, 0], vec![0, 1]]),
            Err(Error::NotUnital { index: 0 })
        );
        assert!(matches!(
            FiniteGroup::from_rows(&[vec![0, 1], vec![1]]),
            Err(Error::ShapeMismatch(_))
        ));
        assert_eq!(
            FiniteGroup::from_rows(&[vec![0, 2], vec![1, 0]]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
        assert!(matches!(
            FiniteGroup::from_rows_with_cap(&FiniteGroup::cyclic(5).unwrap().rows(), 4),
            Err(Error::TooLarge { order: 5, cap: 4 })
        ));
    }

    #[test]
    fn non_associative_latin_square() {
        // Unital loop of order 5 that is not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_rows(&rows),
            Err(Error::NonAssociative { .. })
        ));
    }

    #[test]
    fn reindexing_moves_identity() {
        // C_3 with identity stored at index 2.
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let (g, perm) = FiniteGroup::from_rows_reindexed(&rows).unwrap();
        assert_eq!(perm[2], 0);
        assert_eq!(g.order_profile(), OrderProfile(vec![1, 3, 3]));
    }

    #[test]
    fn subgroups_and_predicates() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.generated_subgroup(&[0]).unwrap().elements(), &[0]);
        assert_eq!(c6.generated_subgroup(&[2]).unwrap().elements(), &[0, 2, 4]);

        let (s3, _) = s3();
        assert_eq!(s3.generated_subgroup(&[1, 3]).unwrap().order(), 6);
        let rot = s3.generated_subgroup(&[1]).unwrap();
        assert_eq!(
            s3.subgroup_predicates(&rot).unwrap(),
            SubgroupPredicates {
                normal: true,
                central: false
            }
        );
        let refl = s3.generated_subgroup(&[3]).unwrap();
        assert!(!s3.subgroup_predicates(&refl).unwrap().normal);
        let whole = Subgroup::whole(&s3);
        assert_eq!(
            s3.subgroup_predicates(&whole).unwrap(),
            SubgroupPredicates {
                normal: true,
                central: false
            }
        );
        assert!(c6.subgroup_predicates(&Subgroup::whole(&c6)).unwrap().central);

        assert!(Subgroup::new(&c6, &[0, 2]).is_err());
        assert!(Subgroup::new(&c6, &[2, 4]).is_err());
        assert!(Subgroup::new(&c6, &[4, 0, 2]).is_ok());
    }

    #[test]
    fn conjugates_and_intersections() {
        let c12 = FiniteGroup::cyclic(12).unwrap();
        let a2 = c12.generated_subgroup(&[2]).unwrap();
        let a3 = c12.generated_subgroup(&[3]).unwrap();
        let r = c12.conjugate_and_intersect(&a2, 0, &a3).unwrap();
        assert_eq!(r.conjugate, a2);
        assert_eq!((a2.order(), a3.order()), (6, 4));
        assert_eq!(r.intersection.elements(), &[0, 6]);

        let (s3, _) = s3();
        let rot = s3.generated_subgroup(&[1]).unwrap();
        let refl = s3.generated_subgroup(&[3]).unwrap();
        for x in s3.elements() {
            assert_eq!(s3.conjugate(&rot, x).unwrap(), rot);
            assert_eq!(s3.conjugate(&refl, x).unwrap().order(), 2);
        }
        assert_ne!(s3.conjugate(&refl, 1).unwrap(), refl);
    }

    #[test]
    fn quotients() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        let q = c6.quotient(&Subgroup::whole(&c6)).unwrap();
        assert_eq!(q.group.order(), 1);
        let q = c6.quotient(&Subgroup::trivial(6)).unwrap();
        assert_eq!(q.projection, (0..6).collect::<Vec<_>>());
        let q = c6.quotient(&c6.generated_subgroup(&[3]).unwrap()).unwrap();
        assert_eq!(q.group.order_profile(), OrderProfile(vec![1, 3, 3]));
        assert!(c6.check_homomorphism(&q.group, &q.projection).is_ok());

        let (s3, _) = s3();
        let refl = s3.generated_subgroup(&[3]).unwrap();
        assert!(matches!(s3.quotient(&refl), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn derived_series_and_profiles() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(
            c6.derived_series(),
            DerivedSeries {
                series: vec![6, 1],
                solvable: true
            }
        );
        assert_eq!(klein().derived_series().series, vec![4, 1]);
        let (s3, _) = s3();
        assert_eq!(
            s3.derived_series(),
            DerivedSeries {
                series: vec![6, 3, 1],
                solvable: true
            }
        );
        assert_eq!(FiniteGroup::trivial().derived_series().series, vec![1]);

        assert_eq!(
            FiniteGroup::cyclic(4).unwrap().order_profile().0,
            vec![1, 2, 4, 4]
        );
        assert_eq!(klein().order_profile().0, vec![1, 2, 2, 2]);
        assert_eq!(c6.order_profile().0, vec![1, 2, 3, 3, 6, 6]);
        assert_eq!(s3.order_profile().0, vec![1, 2, 2, 2, 3, 3]);
        assert_eq!(s3.center().order(), 1);
    }

    #[test]
    fn subgroup_as_group() {
        let c12 = FiniteGroup::cyclic(12).unwrap();
        let h = c12.generated_subgroup(&[4]).unwrap();
        let g = c12.subgroup_group(&h).unwrap();
        assert_eq!(g.order_profile().0, vec![1, 3, 3]);
        assert_eq!(g.label(1), "a^4");
    }
}
