//! Actions and matched pairs of groups.
//!
//! Both action tables are stored `|G| × |H|`, indexed `[g][h]`:
//! the left action holds `g ▷ h ∈ H`, the right action holds `g ◁ h ∈ G`.

use crate::error::{Error, Result, Side, UnitViolation};
use crate::group::FiniteGroup;

/// Left action of `G` on the set `H`, `table[g][h] = g ▷ h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeftAction {
    g_order: usize,
    h_order: usize,
    table: Vec<usize>,
}

/// Right action of `H` on the set `G`, `table[g][h] = g ◁ h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RightAction {
    g_order: usize,
    h_order: usize,
    table: Vec<usize>,
}

impl LeftAction {
    /// The action `g ▷ h = h`.
    pub fn trivial(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (ng, nh) = (g.order(), h.order());
        LeftAction {
            g_order: ng,
            h_order: nh,
            table: (0..ng * nh).map(|k| k % nh).collect(),
        }
    }

    /// Checks the identity and composition axioms.
    pub fn new(g: &FiniteGroup, h: &FiniteGroup, rows: &[Vec<usize>]) -> Result<Self> {
        let table = flatten(rows, g.order(), h.order(), h.order(), "alpha")?;
        Self::from_flat(g, h, table)
    }

    pub fn from_flat(g: &FiniteGroup, h: &FiniteGroup, table: Vec<usize>) -> Result<Self> {
        let (ng, nh) = (g.order(), h.order());
        check_flat(&table, ng, nh, nh, "alpha")?;
        if let Some(x) = (0..nh).find(|&x| table[x] != x) {
            return Err(Error::ActionNotUnital {
                side: Side::Left,
                index: x,
            });
        }
        for g1 in 0..ng {
            for g2 in 0..ng {
                let g12 = g.mul(g1, g2);
                for x in 0..nh {
                    if table[g12 * nh + x] != table[g1 * nh + table[g2 * nh + x]] {
                        return Err(Error::NotAnAction {
                            side: Side::Left,
                            a: g1,
                            b: g2,
                            c: x,
                        });
                    }
                }
            }
        }
        Ok(LeftAction {
            g_order: ng,
            h_order: nh,
            table,
        })
    }

    /// Skips the axiom checks; callers guarantee them by construction.
    pub(crate) fn from_flat_unchecked(g_order: usize, h_order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), g_order * h_order);
        LeftAction {
            g_order,
            h_order,
            table,
        }
    }

    #[inline]
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.table[g * self.h_order + h]
    }

    pub fn flat(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.h_order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().enumerate().all(|(k, &v)| v == k % self.h_order)
    }

    /// First `(g, h1, h2)` with `g ▷ (h1 h2) ≠ (g ▷ h1)(g ▷ h2)`.
    pub fn first_non_automorphism(&self, h: &FiniteGroup) -> Option<(usize, usize, usize)> {
        let nh = self.h_order;
        (0..self.g_order).find_map(|g| {
            (0..nh).find_map(|h1| {
                (0..nh)
                    .find(|&h2| self.act(g, h.mul(h1, h2)) != h.mul(self.act(g, h1), self.act(g, h2)))
                    .map(|h2| (g, h1, h2))
            })
        })
    }
}

impl RightAction {
    /// The action `g ◁ h = g`.
    pub fn trivial(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (ng, nh) = (g.order(), h.order());
        RightAction {
            g_order: ng,
            h_order: nh,
            table: (0..ng * nh).map(|k| k / nh).collect(),
        }
    }

    pub fn new(g: &FiniteGroup, h: &FiniteGroup, rows: &[Vec<usize>]) -> Result<Self> {
        let table = flatten(rows, g.order(), h.order(), g.order(), "beta")?;
        Self::from_flat(g, h, table)
    }

    pub fn from_flat(g: &FiniteGroup, h: &FiniteGroup, table: Vec<usize>) -> Result<Self> {
        let (ng, nh) = (g.order(), h.order());
        check_flat(&table, ng, nh, ng, "beta")?;
        if let Some(x) = (0..ng).find(|&x| table[x * nh] != x) {
            return Err(Error::ActionNotUnital {
                side: Side::Right,
                index: x,
            });
        }
        for x in 0..ng {
            for h1 in 0..nh {
                let xh1 = table[x * nh + h1];
                for h2 in 0..nh {
                    if table[x * nh + h.mul(h1, h2)] != table[xh1 * nh + h2] {
                        return Err(Error::NotAnAction {
                            side: Side::Right,
                            a: x,
                            b: h1,
                            c: h2,
                        });
                    }
                }
            }
        }
        Ok(RightAction {
            g_order: ng,
            h_order: nh,
            table,
        })
    }

    pub(crate) fn from_flat_unchecked(g_order: usize, h_order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), g_order * h_order);
        RightAction {
            g_order,
            h_order,
            table,
        }
    }

    #[inline]
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.table[g * self.h_order + h]
    }

    pub fn flat(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.h_order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().enumerate().all(|(k, &v)| v == k / self.h_order)
    }
}

fn flatten(rows: &[Vec<usize>], ng: usize, nh: usize, range: usize, name: &str) -> Result<Vec<usize>> {
    if rows.len() != ng || rows.iter().any(|r| r.len() != nh) {
        return Err(Error::ShapeMismatch(format!("{name} must be a {ng}×{nh} table")));
    }
    let table = rows.concat();
    check_flat(&table, ng, nh, range, name)?;
    Ok(table)
}

fn check_flat(table: &[usize], ng: usize, nh: usize, range: usize, name: &str) -> Result<()> {
    if table.len() != ng * nh {
        return Err(Error::ShapeMismatch(format!("{name} must be a {ng}×{nh} table")));
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= range) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            size: range,
        });
    }
    Ok(())
}

/// Validates both action tables at once.
pub fn validate_actions(
    g: &FiniteGroup,
    h: &FiniteGroup,
    alpha: &[Vec<usize>],
    beta: &[Vec<usize>],
) -> Result<(LeftAction, RightAction)> {
    Ok((LeftAction::new(g, h, alpha)?, RightAction::new(g, h, beta)?))
}

/// Scans both compatibility conditions in lexicographic order and returns
/// the first failure. `alpha` and `beta` are flat `|G| × |H|` tables.
pub(crate) fn compat_violation(
    h: &FiniteGroup,
    g: &FiniteGroup,
    alpha: &[usize],
    beta: &[usize],
) -> Option<Error> {
    let (ng, nh) = (g.order(), h.order());
    for x in 0..ng {
        let row = x * nh;
        for h1 in 0..nh {
            let a1 = alpha[row + h1];
            let moved = beta[row + h1] * nh;
            for h2 in 0..nh {
                if alpha[row + h.mul(h1, h2)] != h.mul(a1, alpha[moved + h2]) {
                    return Some(Error::Compat1Violation {
                        g: x,
                        h1,
                        h2,
                        unit: unit_violation(nh, ng, alpha, beta),
                    });
                }
            }
        }
    }
    for g1 in 0..ng {
        for g2 in 0..ng {
            let g12 = g.mul(g1, g2) * nh;
            let row2 = g2 * nh;
            for y in 0..nh {
                let rhs = g.mul(beta[g1 * nh + alpha[row2 + y]], beta[row2 + y]);
                if beta[g12 + y] != rhs {
                    return Some(Error::Compat2Violation {
                        g1,
                        g2,
                        h: y,
                        unit: unit_violation(nh, ng, alpha, beta),
                    });
                }
            }
        }
    }
    None
}

fn unit_violation(nh: usize, ng: usize, alpha: &[usize], beta: &[usize]) -> Option<UnitViolation> {
    if let Some(g) = (0..ng).find(|&g| alpha[g * nh] != 0) {
        return Some(UnitViolation::LeftMovesIdentity { g });
    }
    (0..nh)
        .find(|&h| beta[h] != 0)
        .map(|h| UnitViolation::RightMovesIdentity { h })
}

/// A matched pair `(H, G, ▷, ◁)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    h: FiniteGroup,
    g: FiniteGroup,
    alpha: LeftAction,
    beta: RightAction,
}

impl MatchedPair {
    /// Checks both compatibility conditions over every triple.
    pub fn new(h: FiniteGroup, g: FiniteGroup, alpha: LeftAction, beta: RightAction) -> Result<Self> {
        let shape = (g.order(), h.order());
        if (alpha.g_order, alpha.h_order) != shape || (beta.g_order, beta.h_order) != shape {
            return Err(Error::ShapeMismatch(
                "action tables do not match the groups".into(),
            ));
        }
        if let Some(e) = compat_violation(&h, &g, &alpha.table, &beta.table) {
            return Err(e);
        }
        Ok(MatchedPair { h, g, alpha, beta })
    }

    /// Validates raw tables: first the action axioms, then compatibility.
    pub fn from_tables(
        h: FiniteGroup,
        g: FiniteGroup,
        alpha: &[Vec<usize>],
        beta: &[Vec<usize>],
    ) -> Result<Self> {
        let (alpha, beta) = validate_actions(&g, &h, alpha, beta)?;
        Self::new(h, g, alpha, beta)
    }

    /// `H ⋈ G` with both actions trivial, i.e. the direct product.
    pub fn trivial(h: FiniteGroup, g: FiniteGroup) -> Self {
        let alpha = LeftAction::trivial(&g, &h);
        let beta = RightAction::trivial(&g, &h);
        MatchedPair { h, g, alpha, beta }
    }

    pub(crate) fn new_unchecked(
        h: FiniteGroup,
        g: FiniteGroup,
        alpha: LeftAction,
        beta: RightAction,
    ) -> Self {
        MatchedPair { h, g, alpha, beta }
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn alpha(&self) -> &LeftAction {
        &self.alpha
    }

    pub fn beta(&self) -> &RightAction {
        &self.beta
    }

    /// `g ▷ h`.
    #[inline]
    pub fn left(&self, g: usize, h: usize) -> usize {
        self.alpha.act(g, h)
    }

    /// `g ◁ h`.
    #[inline]
    pub fn right(&self, g: usize, h: usize) -> usize {
        self.beta.act(g, h)
    }

    /// The pair `(G, H, α̃, β̃)` with `α̃(h, g) = β(g⁻¹, h⁻¹)⁻¹` and
    /// `β̃(h, g) = α(g⁻¹, h⁻¹)⁻¹`.
    pub fn reversed(&self) -> MatchedPair {
        let (ng, nh) = (self.g.order(), self.h.order());
        // new actor is H, new space is G; tables are indexed [h][g]
        let mut alpha = Vec::with_capacity(nh * ng);
        let mut beta = Vec::with_capacity(nh * ng);
        for y in 0..nh {
            for x in 0..ng {
                let (xi, yi) = (self.g.inv(x), self.h.inv(y));
                alpha.push(self.g.inv(self.right(xi, yi)));
                beta.push(self.h.inv(self.left(xi, yi)));
            }
        }
        MatchedPair {
            h: self.g.clone(),
            g: self.h.clone(),
            alpha: LeftAction::from_flat_unchecked(nh, ng, alpha),
            beta: RightAction::from_flat_unchecked(nh, ng, beta),
        }
    }

    /// Re-runs every check on this pair; used to confirm derived pairs.
    pub fn revalidate(&self) -> Result<()> {
        LeftAction::from_flat(&self.g, &self.h, self.alpha.table.clone())?;
        RightAction::from_flat(&self.g, &self.h, self.beta.table.clone())?;
        match compat_violation(&self.h, &self.g, &self.alpha.table, &self.beta.table) {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    pub fn same_tables(&self, other: &MatchedPair) -> bool {
        self == other
    }
}

/// Whether `(f_h, f_g)` is a morphism of matched pairs `mp1 → mp2`.
pub fn matched_pair_morphism(
    mp1: &MatchedPair,
    mp2: &MatchedPair,
    f_h: &[usize],
    f_g: &[usize],
) -> Result<bool> {
    if f_h.len() != mp1.h.order() || f_g.len() != mp1.g.order() {
        return Err(Error::ShapeMismatch(
            "morphism maps must be total on H1 and G1".into(),
        ));
    }
    for &v in f_h {
        mp2.h.check_index(v)?;
    }
    for &v in f_g {
        mp2.g.check_index(v)?;
    }
    if !mp1.h.is_homomorphism(&mp2.h, f_h) || !mp1.g.is_homomorphism(&mp2.g, f_g) {
        return Ok(false);
    }
    for g in mp1.g.elements() {
        for h in mp1.h.elements() {
            if f_h[mp1.left(g, h)] != mp2.left(f_g[g], f_h[h])
                || f_g[mp1.right(g, h)] != mp2.right(f_g[g], f_h[h])
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
