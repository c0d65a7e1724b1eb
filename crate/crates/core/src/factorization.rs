//! Exact factorizations `E = HG`, `H ∩ G = 1`, and the matched pair each
//! one determines.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::bicrossed::BicrossedGroup;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::matched_pair::{compat_violation, LeftAction, MatchedPair, RightAction};

/// Every subgroup of `e`, sorted by order and then by element set.
///
/// Starts from the cyclic subgroups and repeatedly joins known subgroups
/// with cyclic ones until nothing new appears, so the lattice is complete.
pub fn all_subgroups(e: &FiniteGroup) -> Vec<Subgroup> {
    let mut cyclic: BTreeSet<Subgroup> = BTreeSet::new();
    for x in e.elements() {
        cyclic.insert(e.closure(&[x]));
    }
    let cyclic: Vec<Subgroup> = cyclic.into_iter().collect();
    let generators: Vec<usize> = cyclic
        .iter()
        .map(|c| {
            c.elements()
                .iter()
                .copied()
                .find(|&x| e.order_of(x) == c.order())
                .unwrap_or(0)
        })
        .collect();

    let mut known: BTreeSet<Subgroup> = cyclic.iter().cloned().collect();
    let mut frontier: Vec<(Subgroup, Vec<usize>)> = cyclic
        .iter()
        .zip(&generators)
        .map(|(s, &g)| (s.clone(), vec![g]))
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (sub, gens) in &frontier {
            for &x in &generators {
                if sub.contains(x) {
                    continue;
                }
                let mut joined = gens.clone();
                joined.push(x);
                let s = e.closure(&joined);
                if known.insert(s.clone()) {
                    next.push((s, joined));
                }
            }
        }
        frontier = next;
    }
    let mut subs: Vec<Subgroup> = known.into_iter().collect();
    subs.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    subs
}

/// An exact factorization of `parent` by subgroups `h` and `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactFactorization {
    pub h: Subgroup,
    pub g: Subgroup,
}

impl ExactFactorization {
    /// Checks `|H||G| = |E|`, `H ∩ G = 1`, and that every element factors
    /// uniquely as `hg`.
    pub fn new(e: &FiniteGroup, h: Subgroup, g: Subgroup) -> Result<Self> {
        Subgroup::new(e, h.elements())?;
        Subgroup::new(e, g.elements())?;
        if h.order() * g.order() != e.order() {
            return Err(Error::NotExactFactorization(format!(
                "|H|·|G| = {} but |E| = {}",
                h.order() * g.order(),
                e.order()
            )));
        }
        factor_table(e, &h, &g)?;
        Ok(ExactFactorization { h, g })
    }
}

/// `table[x] = (i, j)` with `x = h_i g_j`, local indices into the sorted
/// element lists.
fn factor_table(e: &FiniteGroup, h: &Subgroup, g: &Subgroup) -> Result<Vec<(usize, usize)>> {
    let mut table = vec![(usize::MAX, usize::MAX); e.order()];
    for (i, &x) in h.elements().iter().enumerate() {
        for (j, &y) in g.elements().iter().enumerate() {
            let xy = e.mul(x, y);
            if table[xy].0 != usize::MAX {
                return Err(Error::NotExactFactorization(format!(
                    "element {xy} factors twice"
                )));
            }
            table[xy] = (i, j);
        }
    }
    if let Some(x) = table.iter().position(|t| t.0 == usize::MAX) {
        return Err(Error::NotExactFactorization(format!(
            "element {x} has no factorization"
        )));
    }
    Ok(table)
}

/// All ordered pairs `(H, G)` of subgroups with `|H||G| = |E|` and
/// `H ∩ G = 1`, sorted by `|H|` and then by the element sets.
pub fn find_exact_factorizations(e: &FiniteGroup) -> Vec<ExactFactorization> {
    let subs = all_subgroups(e);
    let n = e.order();
    subs.par_iter()
        .flat_map_iter(|h| {
            subs.iter()
                .filter(move |g| {
                    h.order() * g.order() == n && h.elements().iter().skip(1).all(|&x| !g.contains(x))
                })
                .map(move |g| ExactFactorization {
                    h: h.clone(),
                    g: g.clone(),
                })
        })
        .collect()
}

/// The matched pair recovered from an exact factorization.
#[derive(Clone, Debug)]
pub struct Recovered {
    pub pair: MatchedPair,
    /// `θ(h, g) = hg` as a map from `H ⋈ G` indices to `E` indices.
    pub theta: Vec<usize>,
    pub verified: bool,
}

/// Defines `g ▷ h` and `g ◁ h` by the unique factorization `gh = (g ▷ h)(g ◁ h)`
/// and checks that `θ(h, g) = hg` is an isomorphism `H ⋈ G → E`.
pub fn recover_matched_pair(e: &FiniteGroup, f: &ExactFactorization) -> Result<Recovered> {
    let (hs, gs) = (&f.h, &f.g);
    let table = factor_table(e, hs, gs)?;
    let hg = e.subgroup_group(hs)?;
    let gg = e.subgroup_group(gs)?;
    let (nh, ng) = (hs.order(), gs.order());
    let mut alpha = Vec::with_capacity(ng * nh);
    let mut beta = Vec::with_capacity(ng * nh);
    for &y in gs.elements() {
        for &x in hs.elements() {
            let (i, j) = table[e.mul(y, x)];
            alpha.push(i);
            beta.push(j);
        }
    }
    let alpha = LeftAction::from_flat(&gg, &hg, alpha)?;
    let beta = RightAction::from_flat(&gg, &hg, beta)?;
    if let Some(err) = compat_violation(&hg, &gg, alpha.flat(), beta.flat()) {
        return Err(Error::Inconsistent(format!(
            "recovered pair is not matched: {err}"
        )));
    }
    let pair = MatchedPair::new_unchecked(hg, gg, alpha, beta);
    let product = BicrossedGroup::build(&pair)?;
    let theta: Vec<usize> = (0..e.order())
        .map(|k| {
            let (i, j) = product.decode(k);
            e.mul(hs.elements()[i], gs.elements()[j])
        })
        .collect();
    if !product.group().is_isomorphism(e, &theta) {
        return Err(Error::Inconsistent("θ(h, g) = hg is not an isomorphism".into()));
    }
    Ok(Recovered {
        pair,
        theta,
        verified: true,
    })
}
