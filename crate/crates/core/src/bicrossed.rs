//! The bicrossed product `H ⋈ G` of a matched pair and the maps around it.
//!
//! Elements `(h, g)` are encoded row-major as `h·|G| + g`, so `(h, 1)` is
//! `h·|G|` and `(1, g)` is `g`.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matched_pair::{matched_pair_morphism, LeftAction, MatchedPair};

/// `H ⋈ G` together with the pair it was built from.
#[derive(Clone, Debug)]
pub struct BicrossedGroup {
    group: FiniteGroup,
    pair: MatchedPair,
}

/// Multiplication table of `H × G` under
/// `(h1, g1)(h2, g2) = (h1 (g1 ▷ h2), (g1 ◁ h2) g2)`.
///
/// The maps need not satisfy any axiom; whether the result is a group is
/// for the caller to check.
pub fn bicrossed_table(h: &FiniteGroup, g: &FiniteGroup, alpha: &[usize], beta: &[usize]) -> Vec<usize> {
    let (nh, ng) = (h.order(), g.order());
    let n = nh * ng;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (h1, g1) = (x / ng, x % ng);
        for y in 0..n {
            let (h2, g2) = (y / ng, y % ng);
            let hh = h.mul(h1, alpha[g1 * nh + h2]);
            let gg = g.mul(beta[g1 * nh + h2], g2);
            table.push(hh * ng + gg);
        }
    }
    table
}

impl BicrossedGroup {
    /// Builds `H ⋈ G` and re-validates the resulting table as a group.
    pub fn build(pair: &MatchedPair) -> Result<Self> {
        let (h, g) = (pair.h(), pair.g());
        let table = bicrossed_table(h, g, pair.alpha().flat(), pair.beta().flat());
        let group = FiniteGroup::from_flat(h.order() * g.order(), table)
            .map_err(|e| Error::InvalidMatchedPair(Box::new(e)))?;
        let labels = (0..group.order())
            .map(|x| format!("a^{} b^{}", x / g.order(), x % g.order()))
            .collect();
        let group = group.with_labels(labels)?;
        Ok(BicrossedGroup {
            group,
            pair: pair.clone(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn h_order(&self) -> usize {
        self.pair.h().order()
    }

    pub fn g_order(&self) -> usize {
        self.pair.g().order()
    }

    #[inline]
    pub fn encode(&self, h: usize, g: usize) -> usize {
        h * self.g_order() + g
    }

    #[inline]
    pub fn decode(&self, x: usize) -> (usize, usize) {
        (x / self.g_order(), x % self.g_order())
    }

    pub fn i_h(&self, h: usize) -> usize {
        self.encode(h, 0)
    }

    pub fn i_g(&self, g: usize) -> usize {
        self.encode(0, g)
    }

    pub fn p_h(&self, x: usize) -> usize {
        self.decode(x).0
    }

    pub fn p_g(&self, x: usize) -> usize {
        self.decode(x).1
    }

    /// Indices of `H × {1}` in increasing order.
    pub fn h_elements(&self) -> Vec<usize> {
        (0..self.h_order()).map(|h| self.i_h(h)).collect()
    }

    /// Indices of `{1} × G` in increasing order.
    pub fn g_elements(&self) -> Vec<usize> {
        (0..self.g_order()).map(|g| self.i_g(g)).collect()
    }

    /// `(h, g)⁻¹ = (g⁻¹ ▷ h⁻¹, (g ◁ (g⁻¹ ▷ h⁻¹))⁻¹)`.
    pub fn formula_inverse(&self, h: usize, g: usize) -> (usize, usize) {
        let (hg, gg) = (self.pair.h(), self.pair.g());
        let k = self.pair.left(gg.inv(g), hg.inv(h));
        (k, gg.inv(self.pair.right(g, k)))
    }
}

/// `H ⋊ G` with `(h1, g1)(h2, g2) = (h1 (g1 ▷ h2), g1 g2)`.
pub fn semidirect_product(h: &FiniteGroup, g: &FiniteGroup, alpha: &LeftAction) -> Result<FiniteGroup> {
    if alpha.flat().len() != h.order() * g.order() {
        return Err(Error::ShapeMismatch(
            "action table does not match the groups".into(),
        ));
    }
    if let Some((gi, h1, h2)) = alpha.first_non_automorphism(h) {
        return Err(Error::NotAutomorphismAction { g: gi, h1, h2 });
    }
    let (nh, ng) = (h.order(), g.order());
    let n = nh * ng;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (h1, g1) = (x / ng, x % ng);
        for y in 0..n {
            let (h2, g2) = (y / ng, y % ng);
            table.push(h.mul(h1, alpha.act(g1, h2)) * ng + g.mul(g1, g2));
        }
    }
    FiniteGroup::from_flat(n, table)
}

/// The isomorphisms `χ: (H ⋈ G)ᵒᵖ → G ⋈ H` and `ξ: H ⋈ G → G ⋈ H`, both
/// checked exhaustively.
#[derive(Clone, Debug)]
pub struct ChiXi {
    pub chi: Vec<usize>,
    pub xi: Vec<usize>,
    pub verified: bool,
}

pub fn chi_xi_isomorphisms(pair: &MatchedPair) -> Result<ChiXi> {
    let forward = BicrossedGroup::build(pair)?;
    let reversed = BicrossedGroup::build(&pair.reversed())?;
    let (hg, gg) = (pair.h(), pair.g());
    let n = forward.group().order();

    let chi: Vec<usize> = (0..n)
        .map(|x| {
            let (h, g) = forward.decode(x);
            reversed.encode(gg.inv(g), hg.inv(h))
        })
        .collect();
    let xi: Vec<usize> = (0..n)
        .map(|x| {
            let (h, g) = forward.decode(x);
            let k = pair.left(gg.inv(g), hg.inv(h));
            reversed.encode(pair.right(g, k), hg.inv(k))
        })
        .collect();

    let (p, r) = (forward.group(), reversed.group());
    // χ reverses products: χ(y x) = χ(x) χ(y)
    let chi_ok =
        is_bijection(&chi, n) && (0..n).all(|x| (0..n).all(|y| chi[p.mul(y, x)] == r.mul(chi[x], chi[y])));
    if !chi_ok {
        return Err(Error::Inconsistent("χ is not an anti-isomorphism".into()));
    }
    if !p.is_isomorphism(r, &xi) {
        return Err(Error::Inconsistent("ξ is not an isomorphism".into()));
    }
    Ok(ChiXi {
        chi,
        xi,
        verified: true,
    })
}

fn is_bijection(map: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    map.len() == n
        && map
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut hit[v], true))
}

/// `(h, g) ↦ (f_h(h), f_g(g))` for a morphism of matched pairs.
pub fn induced_morphism(
    mp1: &MatchedPair,
    mp2: &MatchedPair,
    f_h: &[usize],
    f_g: &[usize],
) -> Result<Vec<usize>> {
    if !matched_pair_morphism(mp1, mp2, f_h, f_g)? {
        return Err(Error::NotAMorphism("maps do not commute with the actions".into()));
    }
    let src = BicrossedGroup::build(mp1)?;
    let dst = BicrossedGroup::build(mp2)?;
    let map: Vec<usize> = (0..src.group().order())
        .map(|x| {
            let (h, g) = src.decode(x);
            dst.encode(f_h[h], f_g[g])
        })
        .collect();
    if src.group().check_homomorphism(dst.group(), &map).is_err() {
        return Err(Error::Inconsistent("induced map is not a homomorphism".into()));
    }
    Ok(map)
}

/// Which universal property a [`Mediator`] solves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `w: H ⋈ G → X` with `w ∘ i_H = u`, `w ∘ i_G = v`.
    From,
    /// `w: X → H ⋈ G` with `p_H ∘ w = u`, `p_G ∘ w = v`.
    To,
}

/// The unique map through `H ⋈ G` determined by `(u, v)`.
#[derive(Clone, Debug)]
pub struct Mediator {
    pub direction: Direction,
    pub map: Vec<usize>,
    u: Vec<usize>,
    v: Vec<usize>,
}

impl Mediator {
    /// Whether `alt` also solves the same universal problem.
    pub fn is_solution(&self, product: &BicrossedGroup, x: &FiniteGroup, alt: &[usize]) -> bool {
        match self.direction {
            Direction::From => {
                alt.len() == product.group().order()
                    && alt.iter().all(|&v| v < x.order())
                    && product.group().is_homomorphism(x, alt)
                    && (0..product.h_order()).all(|h| alt[product.i_h(h)] == self.u[h])
                    && (0..product.g_order()).all(|g| alt[product.i_g(g)] == self.v[g])
            }
            Direction::To => {
                alt.len() == x.order()
                    && alt.iter().all(|&v| v < product.group().order())
                    && x.is_homomorphism(product.group(), alt)
                    && alt
                        .iter()
                        .enumerate()
                        .all(|(i, &w)| product.p_h(w) == self.u[i] && product.p_g(w) == self.v[i])
            }
        }
    }

    /// True unless `alt` is a different solution, which would break
    /// uniqueness.
    pub fn is_unique_against(&self, product: &BicrossedGroup, x: &FiniteGroup, alt: &[usize]) -> bool {
        alt == self.map.as_slice() || !self.is_solution(product, x, alt)
    }
}

/// `w(h, g) = u(h) v(g)` for homomorphisms `u: H → X`, `v: G → X` with
/// `v(g) u(h) = u(g ▷ h) v(g ◁ h)`.
pub fn mediating_from(
    product: &BicrossedGroup,
    x: &FiniteGroup,
    u: &[usize],
    v: &[usize],
) -> Result<Mediator> {
    let pair = product.pair();
    pair.h().check_homomorphism(x, u)?;
    pair.g().check_homomorphism(x, v)?;
    for g in pair.g().elements() {
        for h in pair.h().elements() {
            if x.mul(v[g], u[h]) != x.mul(u[pair.left(g, h)], v[pair.right(g, h)]) {
                return Err(Error::IncompatiblePair(g, h));
            }
        }
    }
    let map: Vec<usize> = (0..product.group().order())
        .map(|e| {
            let (h, g) = product.decode(e);
            x.mul(u[h], v[g])
        })
        .collect();
    let med = Mediator {
        direction: Direction::From,
        map,
        u: u.to_vec(),
        v: v.to_vec(),
    };
    if !med.is_solution(product, x, &med.map) {
        return Err(Error::Inconsistent(
            "mediating map fails its factorization".into(),
        ));
    }
    Ok(med)
}

/// `w(x) = (u(x), v(x))` for maps `u: X → H`, `v: X → G` with
/// `u(xy) = u(x)(v(x) ▷ u(y))` and `v(xy) = (v(x) ◁ u(y)) v(y)`.
pub fn mediating_to(product: &BicrossedGroup, x: &FiniteGroup, u: &[usize], v: &[usize]) -> Result<Mediator> {
    let pair = product.pair();
    let (hg, gg) = (pair.h(), pair.g());
    if u.len() != x.order() || v.len() != x.order() {
        return Err(Error::ShapeMismatch("u and v must be total on X".into()));
    }
    for &e in u {
        hg.check_index(e)?;
    }
    for &e in v {
        gg.check_index(e)?;
    }
    for a in x.elements() {
        for b in x.elements() {
            let ab = x.mul(a, b);
            let u_ok = u[ab] == hg.mul(u[a], pair.left(v[a], u[b]));
            let v_ok = v[ab] == gg.mul(pair.right(v[a], u[b]), v[b]);
            if !u_ok || !v_ok {
                return Err(Error::IncompatiblePair(a, b));
            }
        }
    }
    let map: Vec<usize> = (0..x.order()).map(|i| product.encode(u[i], v[i])).collect();
    let med = Mediator {
        direction: Direction::To,
        map,
        u: u.to_vec(),
        v: v.to_vec(),
    };
    if !med.is_solution(product, x, &med.map) {
        return Err(Error::Inconsistent(
            "mediating map fails its factorization".into(),
        ));
    }
    Ok(med)
}

/// Splits a homomorphism `w: H ⋈ G → X` into `u = w ∘ i_H`, `v = w ∘ i_G`
/// and confirms `w(h, g) = u(h) v(g)` with `(u, v)` compatible.
pub fn decompose_from(
    product: &BicrossedGroup,
    x: &FiniteGroup,
    w: &[usize],
) -> Result<(Vec<usize>, Vec<usize>)> {
    product.group().check_homomorphism(x, w)?;
    let u: Vec<usize> = (0..product.h_order()).map(|h| w[product.i_h(h)]).collect();
    let v: Vec<usize> = (0..product.g_order()).map(|g| w[product.i_g(g)]).collect();
    let med = mediating_from(product, x, &u, &v)?;
    if med.map != w {
        return Err(Error::Inconsistent("w differs from u(h)v(g)".into()));
    }
    Ok((u, v))
}

/// Splits a homomorphism `w: X → H ⋈ G` into `u = p_H ∘ w`, `v = p_G ∘ w`.
pub fn decompose_to(
    product: &BicrossedGroup,
    x: &FiniteGroup,
    w: &[usize],
) -> Result<(Vec<usize>, Vec<usize>)> {
    x.check_homomorphism(product.group(), w)?;
    let u: Vec<usize> = w.iter().map(|&e| product.p_h(e)).collect();
    let v: Vec<usize> = w.iter().map(|&e| product.p_g(e)).collect();
    let med = mediating_to(product, x, &u, &v)?;
    if med.map != w {
        return Err(Error::Inconsistent("w differs from (u, v)".into()));
    }
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matched_pair::RightAction;

    fn c(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    fn inversion_pair() -> MatchedPair {
        let alpha = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let beta = vec![vec![0, 0, 0], vec![1, 1, 1]];
        MatchedPair::from_tables(c(3), c(2), &alpha, &beta).unwrap()
    }

    #[test]
    fn direct_products() {
        let p = BicrossedGroup::build(&MatchedPair::trivial(c(2), c(2))).unwrap();
        assert_eq!(p.group().order_profile().0, vec![1, 2, 2, 2]);
        assert!(p.group().is_abelian());
        let p = BicrossedGroup::build(&MatchedPair::trivial(c(3), c(2))).unwrap();
        assert_eq!(p.group().order_profile().0, vec![1, 2, 3, 3, 6, 6]);
        assert_eq!(p.group().label(3), "a^1 b^1");
    }

    #[test]
    fn inversion_product_is_nonabelian() {
        let p = BicrossedGroup::build(&inversion_pair()).unwrap();
        let g = p.group();
        assert_eq!(g.order_profile().0, vec![1, 2, 2, 2, 3, 3]);
        // (a, 1) has order 3
        assert_eq!(g.element_order(p.i_h(1)).unwrap(), 3);
        assert_eq!(g.derived_series().series, vec![6, 3, 1]);
        for x in g.elements() {
            let (h, gg) = p.decode(x);
            assert_eq!(p.encode(h, gg), x);
            assert_eq!(g.mul(p.i_h(h), p.i_g(gg)), x);
            let (ih, ig) = p.formula_inverse(h, gg);
            assert_eq!(p.encode(ih, ig), g.inv(x));
        }
    }

    #[test]
    fn bypassed_validation_is_caught() {
        let h = c(2);
        let g = c(2);
        let swap = LeftAction::from_flat(&g, &h, vec![0, 1, 1, 0]).unwrap();
        let bad = MatchedPair::new_unchecked(h.clone(), g.clone(), swap, RightAction::trivial(&g, &h));
        assert!(matches!(
            BicrossedGroup::build(&bad),
            Err(Error::InvalidMatchedPair(_))
        ));
    }

    #[test]
    fn semidirect_matches_bicrossed() {
        let (h, g) = (c(5), c(4));
        let table: Vec<usize> = (0..4u32)
            .flat_map(|k| (0..5).map(move |x| x * 2usize.pow(k) % 5))
            .collect();
        let alpha = LeftAction::from_flat(&g, &h, table).unwrap();
        let sd = semidirect_product(&h, &g, &alpha).unwrap();
        assert_eq!(sd.order(), 20);
        assert!(!sd.is_abelian());
        let mp = MatchedPair::new(h.clone(), g.clone(), alpha, RightAction::trivial(&g, &h)).unwrap();
        assert_eq!(BicrossedGroup::build(&mp).unwrap().group(), &sd);

        let triv = semidirect_product(&c(3), &c(2), &LeftAction::trivial(&c(2), &c(3))).unwrap();
        assert!(triv.is_abelian());

        // the swap of Z_2 is an action but not by automorphisms
        let swap = LeftAction::from_flat(&c(2), &c(2), vec![0, 1, 1, 0]).unwrap();
        assert_eq!(
            semidirect_product(&c(2), &c(2), &swap),
            Err(Error::NotAutomorphismAction { g: 1, h1: 0, h2: 0 })
        );
    }

    #[test]
    fn chi_and_xi() {
        let cx = chi_xi_isomorphisms(&inversion_pair()).unwrap();
        assert!(cx.verified);
        assert_eq!(cx.chi[0], 0);
        // (a, b) ↦ (b⁻¹, a⁻¹) = (b, a²), encoded b·3 + 2
        assert_eq!(cx.chi[3], 5);
    }

    #[test]
    fn induced_morphisms() {
        let mp = inversion_pair();
        let id = induced_morphism(&mp, &mp, &[0, 1, 2], &[0, 1]).unwrap();
        assert_eq!(id, (0..6).collect::<Vec<_>>());
        let triv = MatchedPair::trivial(FiniteGroup::trivial(), FiniteGroup::trivial());
        assert_eq!(
            induced_morphism(&mp, &triv, &[0; 3], &[0; 2]).unwrap(),
            vec![0; 6]
        );
        let auto = induced_morphism(&mp, &mp, &[0, 2, 1], &[0, 1]).unwrap();
        let p = BicrossedGroup::build(&mp).unwrap();
        assert!(p.group().is_isomorphism(p.group(), &auto));
        assert!(matches!(
            induced_morphism(&mp, &mp, &[0, 1, 2], &[1, 0]),
            Err(Error::NotAMorphism(_))
        ));
    }

    #[test]
    fn mediating_maps() {
        let mp = inversion_pair();
        let p = BicrossedGroup::build(&mp).unwrap();
        let id: Vec<usize> = (0..6).collect();
        let w = mediating_from(&p, p.group(), &p.h_elements(), &p.g_elements()).unwrap();
        assert_eq!(w.map, id);
        let w = mediating_from(&p, &FiniteGroup::trivial(), &[0; 3], &[0; 2]).unwrap();
        assert_eq!(w.map, vec![0; 6]);

        let hs: Vec<usize> = (0..6).map(|x| p.p_h(x)).collect();
        let gs: Vec<usize> = (0..6).map(|x| p.p_g(x)).collect();
        let w = mediating_to(&p, p.group(), &hs, &gs).unwrap();
        assert_eq!(w.map, id);
        let w = mediating_to(&p, &FiniteGroup::trivial(), &[0], &[0]).unwrap();
        assert_eq!(w.map, vec![0]);

        // u, v into C_6 cannot satisfy the twisted relation
        let c6 = c(6);
        assert!(matches!(
            mediating_from(&p, &c6, &[0, 2, 4], &[0, 3]),
            Err(Error::IncompatiblePair(1, 1))
        ));
        assert!(matches!(
            mediating_from(&p, &c6, &[0, 1, 2], &[0, 3]),
            Err(Error::NotHomomorphism { .. })
        ));
    }
}
