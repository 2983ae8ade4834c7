//! Finite crystallographic root systems, parabolic data and Weyl group actions.
//!
//! Conventions used everywhere in the crate:
//!
//! * the Cartan matrix entry `a[i][j]` is `⟨α_j, α_i^∨⟩`;
//! * roots are stored in the simple-root basis, weights in the fundamental-weight basis,
//!   so `⟨λ, α_i^∨⟩` is simply the `i`-th coefficient of `λ`;
//! * in `B_n` the last simple root is short, in `C_n` it is long, and in `G_2` the first
//!   simple root is short (Bourbaki numbering for all types);
//! * simple-root labels exposed through the API (Levi sets, reduced words) are 1-based.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{rat, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return Err(Error::invalid(format!("unknown Cartan family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::invalid(format!("no root system of type {family}{rank}")));
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Number of positive roots, from the classification.
    pub fn classical_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// 1-based labels of the simple roots orthogonal to this weight.
    pub fn zero_support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &c)| c == 0).map(|(i, _)| i + 1).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    positive_roots: Vec<Root>,
    /// Coefficients of `β^∨` in the simple coroots, parallel to `positive_roots`.
    coroots: Vec<Vec<i64>>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(ct: CartanType) -> RootSystem {
        let cartan = ct.cartan_matrix();
        let symmetrizers = symmetrizers(&cartan);
        let positive_roots = close_positive_roots(&cartan);
        let rank = ct.rank();
        let coroots = positive_roots
            .iter()
            .map(|b| {
                let c = b.coeffs();
                let mut norm2 = 0; // (β,β), with (α_i,α_j) = d_i a_ij
                for i in 0..rank {
                    for j in 0..rank {
                        norm2 += c[i] * c[j] * symmetrizers[i] * cartan[i][j];
                    }
                }
                let half = norm2 / 2;
                (0..rank)
                    .map(|j| {
                        let num = c[j] * symmetrizers[j];
                        assert_eq!(num % half, 0, "non-integral coroot coefficient");
                        num / half
                    })
                    .collect()
            })
            .collect();
        let rs =
            RootSystem { cartan_type: ct, cartan, symmetrizers, positive_roots, coroots, rho: Weight(vec![1; rank]) };
        debug_assert_eq!(rs.positive_roots.len(), ct.classical_root_count());
        rs
    }

    /// Convenience constructor from a family and rank.
    pub fn of(family: Family, rank: usize) -> Result<RootSystem> {
        Ok(RootSystem::new(CartanType::new(family, rank)?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weight(&self, label: usize) -> Result<Weight> {
        self.check_label(label)?;
        let mut w = vec![0; self.rank()];
        w[label - 1] = 1;
        Ok(Weight(w))
    }

    pub fn simple_root(&self, label: usize) -> Result<Root> {
        self.check_label(label)?;
        let mut c = vec![0; self.rank()];
        c[label - 1] = 1;
        Ok(Root(c))
    }

    pub(crate) fn check_label(&self, label: usize) -> Result<()> {
        if label == 0 || label > self.rank() {
            return Err(Error::invalid(format!(
                "simple root index {label} out of range 1..={} for {}",
                self.rank(),
                self.cartan_type
            )));
        }
        Ok(())
    }

    pub fn check_weight(&self, lam: &Weight) -> Result<()> {
        if lam.0.len() != self.rank() {
            return Err(Error::invalid(format!(
                "weight {lam} has {} coefficients, expected {}",
                lam.0.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn is_positive_root(&self, beta: &Root) -> bool {
        self.positive_root_index(beta).is_some()
    }

    pub fn is_root(&self, beta: &Root) -> bool {
        self.is_positive_root(beta) || self.is_positive_root(&beta.neg())
    }

    fn positive_root_index(&self, beta: &Root) -> Option<usize> {
        if beta.0.len() != self.rank() {
            return None;
        }
        self.positive_roots.binary_search_by(|r| root_order(r, beta)).ok()
    }

    /// `⟨λ, β^∨⟩` for any root `β` (positive or negative).
    pub fn pairing(&self, lam: &Weight, beta: &Root) -> Result<i64> {
        self.check_weight(lam)?;
        if let Some(i) = self.positive_root_index(beta) {
            return Ok(self.coroot_pairing(lam.coeffs(), i));
        }
        if let Some(i) = self.positive_root_index(&beta.neg()) {
            return Ok(-self.coroot_pairing(lam.coeffs(), i));
        }
        Err(Error::invalid(format!("{:?} is not a root of {}", beta.0, self.cartan_type)))
    }

    /// `⟨λ, β_k^∨⟩` for the `k`-th positive root.
    pub(crate) fn coroot_pairing(&self, lam: &[i64], k: usize) -> i64 {
        self.coroots[k].iter().zip(lam).map(|(c, l)| c * l).sum()
    }

    pub fn coroot_coefficients(&self, k: usize) -> &[i64] {
        &self.coroots[k]
    }

    /// Expresses an element of the root lattice in fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &Root) -> Weight {
        Weight(self.cartan.iter().map(|row| row.iter().zip(&beta.0).map(|(a, c)| a * c).sum()).collect())
    }

    /// Simple reflection `s_i` (0-based) on a weight in fundamental coordinates.
    pub(crate) fn reflect_weight_in_place(&self, i: usize, mu: &mut [i64]) {
        let m = mu[i];
        if m != 0 {
            for (k, x) in mu.iter_mut().enumerate() {
                *x -= m * self.cartan[k][i];
            }
        }
    }

    pub(crate) fn reflect_root_in_place(&self, i: usize, beta: &mut [i64]) {
        let p: i64 = self.cartan[i].iter().zip(beta.iter()).map(|(a, c)| a * c).sum();
        beta[i] -= p;
    }

    /// Applies `s_{w[0]}` first, then `s_{w[1]}`, ... (0-based letters).
    pub(crate) fn act_on_weight(&self, word: &[usize], mu: &Weight) -> Weight {
        let mut v = mu.0.clone();
        for &i in word {
            self.reflect_weight_in_place(i, &mut v);
        }
        Weight(v)
    }

    pub(crate) fn act_on_root(&self, word: &[usize], beta: &Root) -> Root {
        let mut v = beta.0.clone();
        for &i in word {
            self.reflect_root_in_place(i, &mut v);
        }
        Root(v)
    }

    /// A reduced word (0-based, in order of application to `ρ`) for the longest element of
    /// the parabolic subgroup generated by `levi` (0-based), found by greedy descent.
    fn longest_word_of(&self, levi: &[usize]) -> Vec<usize> {
        let mut mu = self.rho.0.clone();
        let mut word = Vec::new();
        while let Some(&i) = levi.iter().find(|&&i| mu[i] > 0) {
            self.reflect_weight_in_place(i, &mut mu);
            word.push(i);
        }
        word
    }

    /// A reduced word (1-based labels) for the longest Weyl group element.
    pub fn longest_element_word(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.rank()).collect();
        let mut w = self.longest_word_of(&all);
        w.reverse();
        w.into_iter().map(|i| i + 1).collect()
    }

    pub fn parabolic(&self, levi: &[usize]) -> Result<ParabolicData> {
        let mut set: Vec<usize> = Vec::with_capacity(levi.len());
        for &l in levi {
            self.check_label(l)?;
            if set.contains(&(l - 1)) {
                return Err(Error::invalid(format!("simple root {l} listed twice in Levi set")));
            }
            set.push(l - 1);
        }
        set.sort_unstable();
        if set.len() == self.rank() {
            return Err(Error::invalid("the Levi set must not contain every simple root"));
        }
        let (levi_roots, phi_p_plus): (Vec<Root>, Vec<Root>) = self
            .positive_roots
            .iter()
            .cloned()
            .partition(|r| r.0.iter().enumerate().all(|(i, &c)| c == 0 || set.contains(&i)));
        let w_i_word = self.longest_word_of(&set);
        let rank = self.rank();
        let w_i_action = (0..rank)
            .map(|row| {
                (0..rank)
                    .map(|col| {
                        let mut e = vec![0; rank];
                        e[col] = 1;
                        self.act_on_weight(&w_i_word, &Weight(e)).0[row]
                    })
                    .collect()
            })
            .collect();
        Ok(ParabolicData { levi: set.iter().map(|i| i + 1).collect(), phi_p_plus, levi_roots, w_i_word, w_i_action })
    }

    /// Parabolic whose Levi set is the set of simple roots orthogonal to `lam`.
    pub fn parabolic_of(&self, lam: &Weight) -> Result<ParabolicData> {
        self.check_weight(lam)?;
        self.parabolic(&lam.zero_support())
    }

    /// Every admissible parabolic (all proper subsets of the simple roots), smallest Levi first.
    pub fn all_parabolics(&self) -> Vec<ParabolicData> {
        let r = self.rank();
        let mut subsets: Vec<Vec<usize>> =
            (0u32..(1 << r) - 1).map(|mask| (0..r).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()).collect();
        subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        subsets.iter().map(|s| self.parabolic(s).expect("proper subset")).collect()
    }

    pub fn w_i_apply(&self, par: &ParabolicData, mu: &Weight) -> Weight {
        self.act_on_weight(&par.w_i_word, mu)
    }

    pub fn w_i_apply_root(&self, par: &ParabolicData, beta: &Root) -> Root {
        self.act_on_root(&par.w_i_word, beta)
    }

    /// `ρ + w_I(ρ)`, cross-checked against the sum of the roots of `Φ_P^+`.
    pub fn anticanonical_weight(&self, par: &ParabolicData) -> Weight {
        let via_w = self.rho.add(&self.w_i_apply(par, &self.rho));
        let mut sum = vec![0; self.rank()];
        for b in &par.phi_p_plus {
            for (s, c) in sum.iter_mut().zip(&b.0) {
                *s += c;
            }
        }
        let via_sum = self.root_to_weight(&Root(sum));
        assert_eq!(via_w, via_sum, "ρ + w_I(ρ) disagrees with the sum over Φ_P^+");
        via_w
    }

    pub fn is_p_regular(&self, par: &ParabolicData, lam: &Weight) -> bool {
        lam.0.len() == self.rank()
            && lam.0.iter().enumerate().all(|(i, &c)| if par.levi.contains(&(i + 1)) { c == 0 } else { c > 0 })
    }

    /// `λ ∈ Λ_P^+`: dominant and orthogonal to every simple root of the Levi set.
    pub fn is_p_dominant(&self, par: &ParabolicData, lam: &Weight) -> bool {
        lam.0.len() == self.rank() && lam.is_dominant() && par.levi.iter().all(|&l| lam.0[l - 1] == 0)
    }

    /// Inverse Cartan matrix applied to a weight: its coordinates in the simple-root basis.
    pub fn weight_to_root_coords(&self, lam: &Weight) -> Vec<Rat> {
        let r = self.rank();
        let rows: Vec<Vec<Rat>> = (0..r)
            .map(|i| {
                let mut row: Vec<Rat> = (0..r).map(|j| rat(self.cartan[i][j])).collect();
                row.push(rat(lam.0[i]));
                row
            })
            .collect();
        let (red, _) = crate::arith::rref(rows);
        red.iter().map(|row| row[r].clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    /// 1-based labels of the simple roots in the Levi set `I`, sorted.
    pub levi: Vec<usize>,
    pub phi_p_plus: Vec<Root>,
    pub levi_roots: Vec<Root>,
    /// Reduced word for `w_I` (0-based, in order of application).
    pub w_i_word: Vec<usize>,
    /// `w_I` on the weight lattice in fundamental coordinates (row-major).
    pub w_i_action: Vec<Vec<i64>>,
}

impl ParabolicData {
    pub fn n_p(&self) -> usize {
        self.phi_p_plus.len()
    }
}

/// By height, then lexicographically decreasing, so simple roots come in label order.
fn root_order(a: &Root, b: &Root) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
}

fn symmetrizers(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    d[0] = Some(Rat::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                // d_i a_ij = d_j a_ji
                let dj = d[i].clone().unwrap() * rat(a[i][j]) / rat(a[j][i]);
                d[j] = Some(dj);
                stack.push(j);
            }
        }
    }
    let d: Vec<Rat> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let l = d.iter().fold(num_bigint::BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<i64> =
        d.iter().map(|x| i64::try_from((x * Rat::from_integer(l.clone())).to_integer()).unwrap()).collect();
    let g = ints.iter().fold(0i64, |g, &x| g.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

/// Generates the positive roots level by level using root strings.
fn close_positive_roots(a: &[Vec<i64>]) -> Vec<Root> {
    let n = a.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut out = Vec::new();
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
                // p = length of the downward α_i-string through β
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pair;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        out.extend(level.drain(..).map(Root));
        level = next;
    }
    out.sort_by(root_order);
    out
}
