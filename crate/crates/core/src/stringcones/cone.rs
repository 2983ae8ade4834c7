//! String cones of type `A_n` from trails in the fundamental representations, and
//! their truncation by a dominant weight.
//!
//! The weights of `Λ^i C^{n+1}` are the `i`-subsets `S` of `{1, …, n+1}`, all of
//! multiplicity one. Lowering by `α_j` replaces `j ∈ S` by `j+1 ∉ S`, and
//! `⟨ε_S, α_j^∨⟩ = [j ∈ S] − [j+1 ∈ S]`. A trail along the word steps from `ω_i` to
//! `w_0 s_i ω_i`, at each letter either staying or lowering once; a step of size `c_k`
//! contributes `d_k = ⟨(γ_{k−1} + γ_k)/2, α_{i_k}^∨⟩`, which is `0` for a lowering step.
//! Every trail gives the inequality `Σ d_k t_k ≥ 0`.

use num_traits::Zero;

use super::ReducedWord;
use crate::arith::{rat, Rat};
use crate::error::{Error, Result};
use crate::polyhedra::{HalfSpace, Polytope};
use crate::rootsys::{Family, RootSystem, Weight};

/// Pointed polyhedral cone `{t : a·t ≤ 0}` in string coordinates of a fixed word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringCone {
    word: ReducedWord,
    halfspaces: Vec<HalfSpace>,
}

impl StringCone {
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn dim(&self) -> usize {
        self.word.len()
    }

    pub fn contains(&self, t: &[i64]) -> bool {
        let x: Vec<Rat> = t.iter().map(|&v| rat(v)).collect();
        self.halfspaces.iter().all(|h| h.contains(&x))
    }
}

/// Inequalities of the string cone for a reduced word of type `A`.
pub fn gp_string_cone(rs: &RootSystem, word: &ReducedWord) -> Result<StringCone> {
    if rs.cartan_type().family() != Family::A {
        return Err(Error::Unsupported(format!(
            "string cones from trails are only available in type A, not {}",
            rs.cartan_type()
        )));
    }
    word.check_system(rs)?;
    let n = rs.rank();
    let letters: Vec<usize> = word.letters().to_vec();
    let mut halfspaces = Vec::new();
    for i in 1..=n {
        let start: Vec<bool> = (1..=n + 1).map(|s| s <= i).collect();
        let mut si = start.clone();
        si.swap(i - 1, i);
        let target: Vec<bool> = (1..=n + 1).map(|s| si[n + 1 - s]).collect();
        let mut d = vec![0i64; letters.len()];
        trails(&letters, 0, start, &target, &mut d, &mut |d| {
            if d.iter().any(|&x| x != 0) {
                let a: Vec<Rat> = d.iter().map(|&x| rat(-x)).collect();
                halfspaces.push(HalfSpace::new(a, Rat::zero()).expect("nonzero"));
            }
        });
    }
    halfspaces.sort();
    halfspaces.dedup();
    let cone = StringCone { word: word.clone(), halfspaces };
    #[cfg(debug_assertions)]
    self_test(rs, &cone)?;
    Ok(cone)
}

/// Depth-first enumeration of trails; `set[s-1]` says whether `s ∈ S`.
fn trails(
    letters: &[usize],
    k: usize,
    set: Vec<bool>,
    target: &[bool],
    d: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]),
) {
    if k == letters.len() {
        if set == target {
            emit(d);
        }
        return;
    }
    let j = letters[k];
    let (has_j, has_next) = (set[j - 1], set[j]);
    d[k] = has_j as i64 - has_next as i64;
    trails(letters, k + 1, set.clone(), target, d, emit);
    if has_j && !has_next {
        let mut lowered = set;
        lowered[j - 1] = false;
        lowered[j] = true;
        d[k] = 0;
        trails(letters, k + 1, lowered, target, d, emit);
    }
    d[k] = 0;
}

/// `λ`-inequalities `a_k + Σ_{l>k} ⟨α_{i_l}, α_{i_k}^∨⟩ a_l ≤ ⟨λ, α_{i_k}^∨⟩`.
pub fn lambda_inequalities(rs: &RootSystem, word: &ReducedWord, lam: &Weight) -> Vec<HalfSpace> {
    let l = word.letters();
    let a = rs.cartan_matrix();
    (0..l.len())
        .map(|k| {
            let ik = l[k] - 1;
            let coeffs: Vec<Rat> = (0..l.len())
                .map(|m| match m.cmp(&k) {
                    std::cmp::Ordering::Less => Rat::zero(),
                    std::cmp::Ordering::Equal => rat(1),
                    std::cmp::Ordering::Greater => rat(a[ik][l[m] - 1]),
                })
                .collect();
            HalfSpace::new(coeffs, rat(lam.coeffs()[ik])).expect("diagonal entry is 1")
        })
        .collect()
}

/// The string polytope `cone ∩ {λ-inequalities}`.
pub fn truncate_cone(cone: &StringCone, rs: &RootSystem, word: &ReducedWord, lam: &Weight) -> Result<Polytope> {
    if cone.word() != word {
        return Err(Error::invalid("the cone was built for a different word"));
    }
    word.check_system(rs)?;
    rs.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::invalid(format!("weight {lam} is not dominant")));
    }
    let mut hs = cone.halfspaces.clone();
    hs.extend(lambda_inequalities(rs, word, lam));
    // strings are nonnegative
    for k in 0..word.len() {
        let mut a = vec![Rat::zero(); word.len()];
        a[k] = rat(-1);
        hs.push(HalfSpace::new(a, Rat::zero()).expect("nonzero"));
    }
    Polytope::from_halfspaces(word.len(), &hs)
}

#[cfg(debug_assertions)]
fn self_test(rs: &RootSystem, cone: &StringCone) -> Result<()> {
    use num_bigint::BigInt;
    use std::collections::HashSet;
    use std::sync::{Mutex, OnceLock};

    type Seen = Mutex<HashSet<(usize, Vec<usize>)>>;
    static CHECKED: OnceLock<Seen> = OnceLock::new();
    let key = (rs.rank(), cone.word.letters().to_vec());
    let checked = CHECKED.get_or_init(Default::default);
    if rs.rank() > 3 || checked.lock().expect("not poisoned").contains(&key) {
        return Ok(());
    }
    let r = rs.rank();
    for code in 0..3usize.pow(r as u32) {
        let lam = Weight::new((0..r).map(|k| (code / 3usize.pow(k as u32) % 3) as i64).collect());
        let q = truncate_cone(cone, rs, &cone.word, &lam)?;
        let pts: Vec<Vec<BigInt>> = q.lattice_points(false);
        let strings = super::strings(rs, &lam, &cone.word, super::path::DEFAULT_CRYSTAL_CAP)?;
        let expect: Vec<Vec<BigInt>> = strings.iter().map(|s| s.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(pts, expect, "string cone of {:?} disagrees with the crystal at {lam}", cone.word);
    }
    checked.lock().expect("not poisoned").insert(key);
    Ok(())
}
