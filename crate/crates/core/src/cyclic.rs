//! Matched pairs between cyclic groups `C_n = ⟨a⟩` and `C_m = ⟨b⟩`.
//!
//! Both actions are fixed by two permutations: `θ ∈ S(Z_n)` with
//! `b ▷ a^x = a^{θ(x)}`, and `φ ∈ S(Z_m)` with `b^y ◁ a = b^{φ(y)}`.
//! An action of `C_m` needs `θ^m = id` and one of `C_n` needs `φ^n = id`;
//! a matched pair also fixes the identity, so `θ(0) = 0` and `φ(0) = 0`.
//! Seeds are generated with those constraints already applied.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::bicrossed::{semidirect_product, BicrossedGroup};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::iso::{are_isomorphic_with, Fingerprint, IsomorphismCertificate};
use crate::matched_pair::{compat_violation, LeftAction, MatchedPair, RightAction};

/// Default cap on the number of candidate seeds examined by one search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A pair `(θ, φ)` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicSeed {
    pub n: usize,
    pub m: usize,
    pub theta: Vec<usize>,
    pub phi: Vec<usize>,
}

fn check_sizes(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("cyclic orders must be ≥ 1".into()));
    }
    if n * m > crate::group::DEFAULT_ORDER_CAP {
        return Err(Error::TooLarge {
            order: n * m,
            cap: crate::group::DEFAULT_ORDER_CAP,
        });
    }
    Ok(())
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// Order of a permutation in one-line notation.
pub fn permutation_order(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut order = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}

/// Rearranges `v` into the next permutation in lexicographic order.
/// Returns `false` after the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Permutations of `Z_n` fixing 0 whose order divides `k`, in lexicographic
/// one-line order.
pub fn permutations_fixing_zero(n: usize, k: usize, budget: u64) -> Result<Vec<Vec<usize>>> {
    let needed = factorial(n.saturating_sub(1));
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        if k.is_multiple_of(permutation_order(&perm)) {
            out.push(perm.clone());
        }
        if n < 2 || !next_permutation(&mut perm[1..]) {
            break;
        }
    }
    Ok(out)
}

/// All admissible `(θ, φ)` for `(C_n, C_m)`, held as two factor lists.
/// Seed `i` is `(thetas[i / |phis|], phis[i % |phis|])`.
#[derive(Clone, Debug)]
pub struct SeedSpace {
    pub n: usize,
    pub m: usize,
    pub thetas: Vec<Vec<usize>>,
    pub phis: Vec<Vec<usize>>,
}

impl SeedSpace {
    pub fn new(n: usize, m: usize, budget: u64) -> Result<Self> {
        check_sizes(n, m)?;
        let thetas = permutations_fixing_zero(n, m, budget)?;
        let phis = permutations_fixing_zero(m, n, budget)?;
        let needed = thetas.len() as u128 * phis.len() as u128;
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(SeedSpace { n, m, thetas, phis })
    }

    pub fn len(&self) -> usize {
        self.thetas.len() * self.phis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn seed(&self, i: usize) -> CyclicSeed {
        let k = self.phis.len();
        CyclicSeed {
            n: self.n,
            m: self.m,
            theta: self.thetas[i / k].clone(),
            phi: self.phis[i % k].clone(),
        }
    }
}

/// Every `(θ, φ)` with `θ(0) = 0`, `φ(0) = 0`, `θ^m = id`, `φ^n = id`, in
/// lexicographic `(θ, φ)` order.
pub fn enumerate_seeds(n: usize, m: usize, budget: u64) -> Result<Vec<CyclicSeed>> {
    let space = SeedSpace::new(n, m, budget)?;
    Ok((0..space.len()).map(|i| space.seed(i)).collect())
}

/// Rows `perm^0, perm^1, ..., perm^{count-1}`, flattened.
fn power_rows(perm: &[usize], count: usize) -> Vec<usize> {
    let len = perm.len();
    let mut out = Vec::with_capacity(count * len);
    out.extend(0..len);
    for k in 1..count {
        let start = (k - 1) * len;
        for x in 0..len {
            let prev = out[start + x];
            out.push(perm[prev]);
        }
    }
    out
}

/// `α` as a flat `|C_m| × |C_n|` table: `b^k ▷ a^x = a^{θ^k(x)}`.
fn alpha_table(theta: &[usize], m: usize) -> Vec<usize> {
    power_rows(theta, m)
}

/// `β` as a flat `|C_m| × |C_n|` table: `b^y ◁ a^j = b^{φ^j(y)}`.
fn beta_table(phi: &[usize], n: usize) -> Vec<usize> {
    let m = phi.len();
    let powers = power_rows(phi, n);
    let mut out = vec![0; m * n];
    for j in 0..n {
        for y in 0..m {
            out[y * n + j] = powers[j * m + y];
        }
    }
    out
}

/// Raw action tables for an arbitrary `(θ, φ)`, with no constraints
/// checked. The result is only a pair of actions when `θ^m = φ^n = id`.
pub fn raw_action_tables(theta: &[usize], phi: &[usize]) -> (Vec<usize>, Vec<usize>) {
    (alpha_table(theta, phi.len()), beta_table(phi, theta.len()))
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// Expands a seed into full action tables; both are checked against the
/// action axioms.
pub fn expand_seed(seed: &CyclicSeed) -> Result<(LeftAction, RightAction)> {
    check_sizes(seed.n, seed.m)?;
    if seed.theta.len() != seed.n || !is_permutation(&seed.theta) {
        return Err(Error::InvalidParameter("θ must be a permutation of Z_n".into()));
    }
    if seed.phi.len() != seed.m || !is_permutation(&seed.phi) {
        return Err(Error::InvalidParameter("φ must be a permutation of Z_m".into()));
    }
    if seed.theta[0] != 0 || seed.phi[0] != 0 {
        return Err(Error::InvalidParameter("θ and φ must fix 0".into()));
    }
    if !seed.m.is_multiple_of(permutation_order(&seed.theta))
        || !seed.n.is_multiple_of(permutation_order(&seed.phi))
    {
        return Err(Error::InvalidParameter("need θ^m = id and φ^n = id".into()));
    }
    let h = FiniteGroup::cyclic(seed.n)?;
    let g = FiniteGroup::cyclic(seed.m)?;
    let (alpha, beta) = raw_action_tables(&seed.theta, &seed.phi);
    Ok((
        LeftAction::from_flat(&g, &h, alpha)?,
        RightAction::from_flat(&g, &h, beta)?,
    ))
}

/// A matched pair `(C_n, C_m)` with the seed that produced it.
#[derive(Clone, Debug)]
pub struct CyclicPair {
    pub seed: CyclicSeed,
    pub pair: MatchedPair,
}

/// Every matched pair `(C_n, C_m)`, in seed order.
pub fn enumerate_matched_pairs(n: usize, m: usize, budget: u64) -> Result<Vec<CyclicPair>> {
    let space = SeedSpace::new(n, m, budget)?;
    let h = FiniteGroup::cyclic(n)?;
    let g = FiniteGroup::cyclic(m)?;
    let alphas: Vec<Vec<usize>> = space.thetas.iter().map(|t| alpha_table(t, m)).collect();
    let betas: Vec<Vec<usize>> = space.phis.iter().map(|p| beta_table(p, n)).collect();
    let k = betas.len();
    let found: Vec<usize> = (0..space.len())
        .into_par_iter()
        .filter(|&i| compat_violation(&h, &g, &alphas[i / k], &betas[i % k]).is_none())
        .collect();
    Ok(found
        .into_iter()
        .map(|i| {
            let alpha = LeftAction::from_flat_unchecked(m, n, alphas[i / k].clone());
            let beta = RightAction::from_flat_unchecked(m, n, betas[i % k].clone());
            CyclicPair {
                seed: space.seed(i),
                pair: MatchedPair::new_unchecked(h.clone(), g.clone(), alpha, beta),
            }
        })
        .collect())
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        e >>= 1;
    }
    result
}

/// Which factor of the product is normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    /// The order-`p` factor is normal as given.
    NormalH,
    /// The order-`m` factor is normal.
    NormalG,
    /// Neither factor is normal; a corrected order-`p` generator is.
    Corrected,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::NormalH => "NormalH",
            Orientation::NormalG => "NormalG",
            Orientation::Corrected => "Corrected",
        }
    }
}

/// A semidirect product of cyclic groups of orders `p` and `m`.
///
/// `NormalH` is `C_p ⋊_r C_m` with `b ▷ a = a^r`; `NormalG` is
/// `C_m ⋊_r C_p` with `a ▷ b = b^r`.
#[derive(Clone, Debug)]
pub struct SemidirectCandidate {
    pub orientation: Orientation,
    pub r: usize,
    pub group: FiniteGroup,
}

/// `C_k ⋊ C_l` with the generator of `C_l` acting by `x ↦ r·x`.
fn cyclic_semidirect(k: usize, l: usize, r: usize) -> Result<FiniteGroup> {
    let h = FiniteGroup::cyclic(k)?;
    let g = FiniteGroup::cyclic(l)?;
    let mut table = Vec::with_capacity(k * l);
    let mut mult = 1 % k.max(1);
    for _ in 0..l {
        table.extend((0..k).map(|x| x * mult % k));
        mult = mult * r % k;
    }
    let alpha = LeftAction::from_flat(&g, &h, table)?;
    semidirect_product(&h, &g, &alpha)
}

/// All `C_p ⋊_r C_m` with `r^m ≡ 1 (mod p)` followed by all `C_m ⋊_r C_p`
/// with `r` a unit and `r^p ≡ 1 (mod m)`.
pub fn enumerate_semidirects(p: usize, m: usize) -> Result<Vec<SemidirectCandidate>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    check_sizes(p, m)?;
    let mut out = Vec::new();
    for r in 1..p {
        if pow_mod(r as u64, m as u64, p as u64) == 1 {
            out.push(SemidirectCandidate {
                orientation: Orientation::NormalH,
                r,
                group: cyclic_semidirect(p, m, r)?,
            });
        }
    }
    for r in 0..m {
        if r.gcd(&m) == 1 && pow_mod(r as u64, p as u64, m as u64) == 1 % m as u64 {
            out.push(SemidirectCandidate {
                orientation: Orientation::NormalG,
                r,
                group: cyclic_semidirect(m, p, r)?,
            });
        }
    }
    Ok(out)
}

/// Constructive evidence that `E = ⟨a⟩⟨b⟩` is a semidirect product.
///
/// For `NormalH` and `Corrected`, `b ã b⁻¹ = ã^t` with `⟨ã⟩` normal of
/// order `p`. For `NormalG`, `a b a⁻¹ = b^t` with `⟨b⟩` normal and
/// `ã = a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidirectWitness {
    pub orientation: Orientation,
    pub p: usize,
    pub m: usize,
    pub a: usize,
    pub b: usize,
    pub t: usize,
    pub c: usize,
    pub u: Option<usize>,
    pub a_tilde: usize,
    /// `C_m ∩ a C_m a⁻¹` in the corrected case, trivial otherwise.
    pub central_h: Vec<usize>,
}

fn trivial_meet(e: &FiniteGroup, x: &Subgroup, y: &Subgroup) -> bool {
    e.intersection(x, y).map(|s| s.is_trivial()).unwrap_or(false)
}

/// Smallest `t` in `range` with `base^t = target`.
fn find_exponent(
    e: &FiniteGroup,
    base: usize,
    target: usize,
    range: std::ops::Range<usize>,
) -> Option<usize> {
    range.into_iter().find(|&t| e.pow(base, t) == target)
}

/// Follows the normal-complement construction for `E = ⟨a⟩⟨b⟩` with
/// `|a| = p` prime, `|b| = m` and `⟨a⟩ ∩ ⟨b⟩ = 1`.
pub fn witness_decomposition(
    e: &FiniteGroup,
    a: usize,
    b: usize,
    p: usize,
    m: usize,
) -> Result<SemidirectWitness> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    e.check_index(a)?;
    e.check_index(b)?;
    if e.order() != p * m {
        return Err(Error::PreconditionFailure(format!(
            "|E| = {} is not {p}·{m}",
            e.order()
        )));
    }
    if e.order_of(a) != p || e.order_of(b) != m {
        return Err(Error::PreconditionFailure(
            "a must have order p and b order m".into(),
        ));
    }
    let big_a = e.closure(&[a]);
    let big_b = e.closure(&[b]);
    if !trivial_meet(e, &big_a, &big_b) {
        return Err(Error::PreconditionFailure("⟨a⟩ ∩ ⟨b⟩ is not trivial".into()));
    }
    let bab = e.conj(b, a);

    if e.is_normal(&big_a) {
        let t = find_exponent(e, a, bab, 1..p)
            .ok_or_else(|| Error::Inconsistent("normal ⟨a⟩ does not contain bab⁻¹".into()))?;
        return Ok(SemidirectWitness {
            orientation: Orientation::NormalH,
            p,
            m,
            a,
            b,
            t,
            c: 0,
            u: None,
            a_tilde: a,
            central_h: vec![0],
        });
    }
    if e.is_normal(&big_b) {
        let aba = e.conj(a, b);
        let t = find_exponent(e, b, aba, 1..m)
            .ok_or_else(|| Error::Inconsistent("normal ⟨b⟩ does not contain aba⁻¹".into()))?;
        return Ok(SemidirectWitness {
            orientation: Orientation::NormalG,
            p,
            m,
            a,
            b,
            t,
            c: 0,
            u: None,
            a_tilde: a,
            central_h: vec![0],
        });
    }

    let frob = |msg: &str| Error::FrobeniusStepFailure(msg.to_string());
    let conj_b = e.conjugate(&big_b, a)?;
    let central = e.intersection(&big_b, &conj_b)?;
    if !e.subgroup_predicates(&central)?.central {
        return Err(frob("C_m ∩ a C_m a⁻¹ is not central"));
    }
    // bab⁻¹ = a^t c with c ∈ central
    let (t, c) = (1..p)
        .find_map(|t| {
            let c = e.mul(e.inv(e.pow(a, t)), bab);
            central.contains(c).then_some((t, c))
        })
        .ok_or_else(|| frob("no t with bab⁻¹ ∈ a^t·H"))?;
    if e.pow(c, p) != 0 {
        return Err(frob("c^p ≠ 1"));
    }
    if c == 0 {
        return Err(frob("c = 1 although ⟨a⟩ is not normal"));
    }
    if t == 1 {
        return Err(frob("t = 1 although ⟨b⟩ is not normal"));
    }
    let gcd = ((t - 1) as i64).extended_gcd(&(p as i64));
    if gcd.gcd != 1 {
        return Err(frob("t − 1 is not invertible mod p"));
    }
    let u = gcd.x.rem_euclid(p as i64) as usize;
    let a_tilde = e.mul(a, e.pow(c, u));
    let witness = SemidirectWitness {
        orientation: Orientation::Corrected,
        p,
        m,
        a,
        b,
        t,
        c,
        u: Some(u),
        a_tilde,
        central_h: central.elements().to_vec(),
    };
    witness.verify(e).map_err(|err| frob(&err.to_string()))?;
    Ok(witness)
}

impl SemidirectWitness {
    /// Re-checks every claim the witness makes about `e`.
    pub fn verify(&self, e: &FiniteGroup) -> Result<()> {
        let fail = |msg: &str| {
            Err(Error::Inconsistent(format!(
                "{} witness: {msg}",
                self.orientation.name()
            )))
        };
        let (p, m) = (self.p, self.m);
        let big_b = e.closure(&[self.b]);
        if e.order_of(self.b) != m || e.order_of(self.a) != p {
            return fail("generator orders");
        }
        match self.orientation {
            Orientation::NormalG => {
                if e.conj(self.a, self.b) != e.pow(self.b, self.t) {
                    return fail("a b a⁻¹ ≠ b^t");
                }
                if !e.is_normal(&big_b) {
                    return fail("⟨b⟩ not normal");
                }
                if !trivial_meet(e, &e.closure(&[self.a]), &big_b) {
                    return fail("⟨a⟩ ∩ ⟨b⟩ not trivial");
                }
                if self.a_tilde != self.a {
                    return fail("ã must equal a");
                }
            }
            Orientation::NormalH | Orientation::Corrected => {
                let at = self.a_tilde;
                if !(1..p).contains(&self.t) {
                    return fail("t out of range");
                }
                if e.conj(self.b, at) != e.pow(at, self.t) {
                    return fail("b ã b⁻¹ ≠ ã^t");
                }
                if e.order_of(at) != p {
                    return fail("ã does not have order p");
                }
                let big_at = e.closure(&[at]);
                if !e.is_normal(&big_at) {
                    return fail("⟨ã⟩ not normal");
                }
                if !trivial_meet(e, &big_at, &big_b) {
                    return fail("⟨ã⟩ ∩ ⟨b⟩ not trivial");
                }
            }
        }
        match (self.orientation, self.u) {
            (Orientation::Corrected, Some(u)) => {
                let central = Subgroup::new(e, &self.central_h)?;
                if !e.subgroup_predicates(&central)?.central || !central.contains(self.c) {
                    return fail("c must lie in a central subgroup");
                }
                if self.c == 0 || e.pow(self.c, p) != 0 || self.t == 1 {
                    return fail("need c ≠ 1, c^p = 1, t ≠ 1");
                }
                if u * (self.t - 1) % p != 1 {
                    return fail("u(t − 1) ≢ 1 (mod p)");
                }
                if e.conj(self.b, self.a) != e.mul(e.pow(self.a, self.t), self.c) {
                    return fail("bab⁻¹ ≠ a^t c");
                }
                if self.a_tilde != e.mul(self.a, e.pow(self.c, u)) {
                    return fail("ã ≠ a c^u");
                }
            }
            (Orientation::Corrected, None) => return fail("missing u"),
            (_, Some(_)) => return fail("u is only set in the corrected case"),
            (_, None) => {
                if self.c != 0 {
                    return fail("c must be 1");
                }
            }
        }
        Ok(())
    }
}

/// A semidirect product found isomorphic to a bicrossed product.
#[derive(Clone, Debug)]
pub struct SemidirectMatch {
    pub semidirect: usize,
    pub certificate: IsomorphismCertificate,
}

#[derive(Clone, Debug)]
pub struct TheoremPair {
    pub seed: CyclicSeed,
    pub product: BicrossedGroup,
    pub matched: Option<SemidirectMatch>,
    pub witness: SemidirectWitness,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BranchCounts {
    #[serde(rename = "NormalH")]
    pub normal_h: usize,
    #[serde(rename = "NormalG")]
    pub normal_g: usize,
    #[serde(rename = "Corrected")]
    pub corrected: usize,
}

/// Every bicrossed product `C_p ⋈ C_m`, its matching semidirect product and
/// its normal-complement witness.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub p: usize,
    pub m: usize,
    pub pairs: Vec<TheoremPair>,
    pub semidirects: Vec<SemidirectCandidate>,
    pub all_matched: bool,
}

impl TheoremReport {
    pub fn branch_counts(&self) -> BranchCounts {
        let mut counts = BranchCounts::default();
        for pair in &self.pairs {
            match pair.witness.orientation {
                Orientation::NormalH => counts.normal_h += 1,
                Orientation::NormalG => counts.normal_g += 1,
                Orientation::Corrected => counts.corrected += 1,
            }
        }
        counts
    }
}

/// Matches every bicrossed product `C_p ⋈ C_m` against the semidirect
/// products of the same cyclic groups and extracts a witness for each.
///
/// An unmatched pair is reported as [`Error::TheoremViolation`]: the
/// statement is a theorem, so a miss means a bug here.
pub fn verify_main_theorem(p: usize, m: usize, budget: u64) -> Result<TheoremReport> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let pairs = enumerate_matched_pairs(p, m, budget)?;
    let semidirects = enumerate_semidirects(p, m)?;
    let prints: Vec<Fingerprint> = semidirects.iter().map(|s| Fingerprint::of(&s.group)).collect();

    let results: Vec<Result<TheoremPair>> = pairs
        .into_par_iter()
        .map(|cp| {
            let product = BicrossedGroup::build(&cp.pair)?;
            let fp = Fingerprint::of(product.group());
            let matched = semidirects
                .iter()
                .zip(&prints)
                .enumerate()
                .find_map(|(j, (s, sfp))| {
                    let cert = are_isomorphic_with(product.group(), &fp, &s.group, sfp);
                    cert.is_isomorphic().then_some(SemidirectMatch {
                        semidirect: j,
                        certificate: cert,
                    })
                });
            let (a, b) = (product.i_h(1 % p), product.i_g(1 % m));
            let witness = witness_decomposition(product.group(), a, b, p, m)?;
            witness.verify(product.group())?;
            Ok(TheoremPair {
                seed: cp.seed,
                product,
                matched,
                witness,
            })
        })
        .collect();
    let pairs = results.into_iter().collect::<Result<Vec<_>>>()?;
    if let Some(i) = pairs.iter().position(|x| x.matched.is_none()) {
        return Err(Error::TheoremViolation { pair: i });
    }
    Ok(TheoremReport {
        p,
        m,
        pairs,
        semidirects,
        all_matched: true,
    })
}
