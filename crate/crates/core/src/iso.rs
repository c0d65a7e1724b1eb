//! Isomorphism testing by invariant pruning and backtracking over images of
//! a generating sequence.

use serde::Serialize;

use crate::group::{FiniteGroup, OrderProfile};

/// Cheap isomorphism invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub order_profile: OrderProfile,
    pub center_order: usize,
    pub derived_series_orders: Vec<usize>,
    pub abelian: bool,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        Fingerprint {
            order: g.order(),
            order_profile: g.order_profile(),
            center_order: g.center().order(),
            derived_series_orders: g.derived_series().series,
            abelian: g.is_abelian(),
        }
    }

    /// Name of the first field on which `self` and `other` differ.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        if self.order != other.order {
            Some("order")
        } else if self.order_profile != other.order_profile {
            Some("order_profile")
        } else if self.center_order != other.center_order {
            Some("center_order")
        } else if self.derived_series_orders != other.derived_series_orders {
            Some("derived_series")
        } else if self.abelian != other.abelian {
            Some("abelian")
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "field", rename_all = "snake_case")]
pub enum Refutation {
    Fingerprint(&'static str),
    Exhausted,
}

impl std::fmt::Display for Refutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Refutation::Fingerprint(field) => write!(f, "fingerprint differs: {field}"),
            Refutation::Exhausted => f.write_str("search exhausted"),
        }
    }
}

/// Outcome of [`are_isomorphic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsomorphismCertificate {
    /// `map[x]` is the image of `x`; a verified isomorphism.
    Isomorphic(Vec<usize>),
    NotIsomorphic(Refutation),
}

impl IsomorphismCertificate {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsomorphismCertificate::Isomorphic(_))
    }

    pub fn map(&self) -> Option<&[usize]> {
        match self {
            IsomorphismCertificate::Isomorphic(m) => Some(m),
            IsomorphismCertificate::NotIsomorphic(_) => None,
        }
    }
}

impl Serialize for IsomorphismCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        match self {
            IsomorphismCertificate::Isomorphic(map) => {
                m.serialize_entry("iso", &true)?;
                m.serialize_entry("map", map)?;
            }
            IsomorphismCertificate::NotIsomorphic(r) => {
                m.serialize_entry("iso", &false)?;
                m.serialize_entry("reason", &r.to_string())?;
            }
        }
        m.end()
    }
}

/// Repeatedly adds the lowest-index element outside the current closure.
pub fn generating_sequence(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut sub = g.closure(&gens);
    while sub.order() < g.order() {
        let next = g.elements().find(|&x| !sub.contains(x)).expect("proper subgroup");
        gens.push(next);
        sub = g.closure(&gens);
    }
    gens
}

struct Search<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
}

impl Search<'_> {
    /// Extends `gens[i] ↦ images[i]` along right multiplication by the
    /// assigned generators. Returns the map on the generated subgroup, or
    /// `None` on a conflict.
    fn extend(&self) -> Option<Vec<usize>> {
        let k = self.images.len();
        let mut map = vec![usize::MAX; self.src.order()];
        let mut used = vec![false; self.dst.order()];
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for i in 0..k {
                let y = self.src.mul(x, self.gens[i]);
                let fy = self.dst.mul(map[x], self.images[i]);
                if map[y] == usize::MAX {
                    if used[fy] {
                        return None;
                    }
                    used[fy] = true;
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        let depth = self.images.len();
        if depth == self.gens.len() {
            let map = self.extend()?;
            return self.src.is_isomorphism(self.dst, &map).then_some(map);
        }
        for ci in 0..self.candidates[depth].len() {
            let y = self.candidates[depth][ci];
            self.images.push(y);
            if self.extend().is_some() {
                if let Some(map) = self.run() {
                    return Some(map);
                }
            }
            self.images.pop();
        }
        None
    }
}

/// Decides whether `g1 ≅ g2`, returning a verified bijection when it is.
pub fn are_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> IsomorphismCertificate {
    are_isomorphic_with(g1, &Fingerprint::of(g1), g2, &Fingerprint::of(g2))
}

/// As [`are_isomorphic`] with precomputed fingerprints.
pub fn are_isomorphic_with(
    g1: &FiniteGroup,
    f1: &Fingerprint,
    g2: &FiniteGroup,
    f2: &Fingerprint,
) -> IsomorphismCertificate {
    if let Some(field) = f1.first_difference(f2) {
        return IsomorphismCertificate::NotIsomorphic(Refutation::Fingerprint(field));
    }
    let gens = generating_sequence(g1);
    let center1 = g1.center();
    let center2 = g2.center();
    let orders2: Vec<usize> = g2.elements().map(|y| g2.element_order(y).unwrap_or(0)).collect();
    let candidates = gens
        .iter()
        .map(|&x| {
            let ord = g1.element_order(x).unwrap_or(0);
            let central = center1.contains(x);
            g2.elements()
                .filter(|&y| orders2[y] == ord && center2.contains(y) == central)
                .collect()
        })
        .collect();
    let mut search = Search {
        src: g1,
        dst: g2,
        gens,
        candidates,
        images: Vec::new(),
    };
    match search.run() {
        Some(map) => IsomorphismCertificate::Isomorphic(map),
        None => IsomorphismCertificate::NotIsomorphic(Refutation::Exhausted),
    }
}

/// One isomorphism class in a [`classify`] result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub order: usize,
    pub order_profile: OrderProfile,
}

/// Partitions `groups` into isomorphism classes. Representatives are the
/// first member in input order; classes are sorted by order, then order
/// profile, then representative.
pub fn classify(groups: &[FiniteGroup]) -> Vec<IsoClass> {
    let prints: Vec<Fingerprint> = groups.iter().map(Fingerprint::of).collect();
    let mut classes: Vec<IsoClass> = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        let found = classes.iter_mut().find(|c| {
            let r = c.representative;
            prints[r] == prints[i]
                && are_isomorphic_with(&groups[r], &prints[r], g, &prints[i]).is_isomorphic()
        });
        match found {
            Some(c) => c.members.push(i),
            None => classes.push(IsoClass {
                representative: i,
                members: vec![i],
                order: g.order(),
                order_profile: prints[i].order_profile.clone(),
            }),
        }
    }
    classes.sort_by(|a, b| {
        (a.order, &a.order_profile, a.representative).cmp(&(b.order, &b.order_profile, b.representative))
    });
    classes
}
