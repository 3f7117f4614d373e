//! The G2 root datum in weight coordinates.
//!
//! A weight is `lambda = m lambda_1 + n lambda_2`, and each positive coroot
//! `alpha^vee` is stored as the linear form `(c1, c2)` with
//! `<alpha^vee, lambda> = c1 m + c2 n`. Weyl group elements are 2x2 integer
//! matrices acting on `(m, n)`, so every positivity and wall test is exact
//! integer arithmetic.
//!
//! Theorem-level reductions accept `w1` in the Weyl group only. For G2 the
//! Dynkin diagram has no automorphisms, so `Aut = W` and nothing is lost.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coroot forms of the six positive roots, in the order `alpha_1..alpha_6`:
/// `m, n, m+n, m+2n, m+3n, 2m+3n`.
pub const POSITIVE_FORMS: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)];

/// A positive root, identified by its coroot form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRootForm {
    /// 1-based root index.
    pub index: usize,
    pub coroot_coords: (i64, i64),
}

impl PositiveRootForm {
    pub fn all() -> [PositiveRootForm; 6] {
        std::array::from_fn(|i| PositiveRootForm {
            index: i + 1,
            coroot_coords: POSITIVE_FORMS[i],
        })
    }

    pub fn eval(&self, m: i64, n: i64) -> i64 {
        self.coroot_coords.0 * m + self.coroot_coords.1 * n
    }
}

/// Looks a form up among `+-` the positive forms: `(index 0..6, is_negative)`.
fn classify_form(c: (i64, i64)) -> Option<(usize, bool)> {
    POSITIVE_FORMS.iter().enumerate().find_map(|(i, &f)| {
        if f == c {
            Some((i, false))
        } else if (-f.0, -f.1) == c {
            Some((i, true))
        } else {
            None
        }
    })
}

type Matrix = [[i64; 2]; 2];

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// `row * M` for a row vector.
fn form_times(c: (i64, i64), m: &Matrix) -> (i64, i64) {
    (c.0 * m[0][0] + c.1 * m[1][0], c.0 * m[0][1] + c.1 * m[1][1])
}

const IDENTITY: Matrix = [[1, 0], [0, 1]];
/// `sigma_1 (m, n) = (-m, m + n)`
const SIGMA1: Matrix = [[-1, 0], [1, 1]];
/// `sigma_2 (m, n) = (m + 3n, -n)`
const SIGMA2: Matrix = [[1, 3], [0, -1]];

/// Element of the Weyl group of G2.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: Matrix,
    /// Shortest, lexicographically least word in the generators (1 and 2).
    word: Vec<u8>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

impl WeylElement {
    pub fn identity() -> Self {
        group().elements[0].clone()
    }

    /// Simple reflection `sigma_1` or `sigma_2`.
    pub fn simple(i: u8) -> Self {
        Self::from_word(&[i]).expect("generator index is 1 or 2")
    }

    /// Longest element, equal to `-1` for G2.
    pub fn longest() -> Self {
        Self::from_word(&[1, 2, 1, 2, 1, 2]).expect("valid word")
    }

    /// Product of generators, applied right to left.
    pub fn from_word(word: &[u8]) -> Result<Self> {
        let mut m = IDENTITY;
        for &g in word {
            let s = match g {
                1 => SIGMA1,
                2 => SIGMA2,
                _ => return Err(Error::InvalidInput(format!("no generator sigma_{g} in G2"))),
            };
            m = mat_mul(&m, &s);
        }
        Ok(Self::from_matrix(m))
    }

    fn from_matrix(m: Matrix) -> Self {
        group().by_matrix[&m].clone()
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Human-readable word, `1` for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "1".into();
        }
        self.word.iter().map(|g| format!("s{g}")).collect()
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        Self::from_matrix(mat_mul(&self.matrix, &other.matrix))
    }

    pub fn inverse(&self) -> WeylElement {
        let [[a, b], [c, d]] = self.matrix;
        let det = a * d - b * c;
        Self::from_matrix([[d * det, -b * det], [-c * det, a * det]])
    }

    /// Action on a weight `(m, n)`.
    pub fn apply(&self, m: i64, n: i64) -> (i64, i64) {
        let [[a, b], [c, d]] = self.matrix;
        (a * m + b * n, c * m + d * n)
    }

    /// Image `w alpha_i` of the positive root `i` (0-based) as
    /// `(root index 0..6, negative?)`.
    fn image_of_root(&self, i: usize) -> (usize, bool) {
        // <(w alpha)^vee, lambda> = <alpha^vee, w^{-1} lambda>
        let c = form_times(POSITIVE_FORMS[i], &self.inverse().matrix);
        classify_form(c).expect("Weyl group permutes the roots")
    }
}

struct Group {
    elements: Vec<WeylElement>,
    by_matrix: HashMap<Matrix, WeylElement>,
}

fn group() -> &'static Group {
    static GROUP: OnceLock<Group> = OnceLock::new();
    GROUP.get_or_init(|| {
        // Breadth-first closure; each element keeps the first word reaching it.
        let mut by_matrix: HashMap<Matrix, WeylElement> = HashMap::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        let id = WeylElement {
            matrix: IDENTITY,
            word: vec![],
        };
        by_matrix.insert(IDENTITY, id.clone());
        queue.push_back(id);
        while let Some(w) = queue.pop_front() {
            order.push(w.clone());
            for (g, s) in [(1u8, SIGMA1), (2u8, SIGMA2)] {
                let m = mat_mul(&w.matrix, &s);
                if let std::collections::hash_map::Entry::Vacant(slot) = by_matrix.entry(m) {
                    let mut word = w.word.clone();
                    word.push(g);
                    let e = WeylElement { matrix: m, word };
                    slot.insert(e.clone());
                    queue.push_back(e);
                }
            }
        }
        order.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
        Group {
            elements: order,
            by_matrix,
        }
    })
}

/// All twelve elements, sorted by word length then word.
pub fn weyl_group() -> Vec<WeylElement> {
    group().elements.clone()
}

/// `Delta_w`: 1-based indices of positive roots sent to negative roots by `w`.
pub fn inversion_set(w: &WeylElement) -> BTreeSet<usize> {
    (0..6)
        .filter(|&i| w.image_of_root(i).1)
        .map(|i| i + 1)
        .collect()
}

/// Nonempty subset of the simple roots `{1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleSubset {
    pub contains_1: bool,
    pub contains_2: bool,
}

impl SimpleSubset {
    pub const ONE: SimpleSubset = SimpleSubset {
        contains_1: true,
        contains_2: false,
    };
    pub const TWO: SimpleSubset = SimpleSubset {
        contains_1: false,
        contains_2: true,
    };
    pub const BOTH: SimpleSubset = SimpleSubset {
        contains_1: true,
        contains_2: true,
    };

    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut s = SimpleSubset {
            contains_1: false,
            contains_2: false,
        };
        for &i in indices {
            match i {
                1 => s.contains_1 = true,
                2 => s.contains_2 = true,
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "simple root index {i} not in {{1,2}}"
                    )))
                }
            }
        }
        if !s.contains_1 && !s.contains_2 {
            return Err(Error::InvalidInput(
                "I must be a nonempty subset of {1,2}".into(),
            ));
        }
        Ok(s)
    }

    pub fn indices(&self) -> Vec<usize> {
        let mut v = Vec::new();
        if self.contains_1 {
            v.push(1);
        }
        if self.contains_2 {
            v.push(2);
        }
        v
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `W^I = { w : alpha_i^vee in w Delta_+^vee for i in I }`, ordered by word
/// length then word.
pub fn parabolic_transversal(subset: SimpleSubset) -> Vec<WeylElement> {
    weyl_group()
        .into_iter()
        .filter(|w| {
            subset.indices().iter().all(|&i| {
                // w^{-1} alpha_i^vee as a form is alpha_i^vee . M_w
                let c = form_times(POSITIVE_FORMS[i - 1], &w.matrix);
                !classify_form(c).expect("root").1
            })
        })
        .collect()
}

/// Exponents `(s_1, ..., s_6)`, one per positive root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentTuple(pub [i64; 6]);

impl ExponentTuple {
    /// Checks every entry is a positive integer.
    pub fn new(exps: [i64; 6]) -> Result<Self> {
        if exps.iter().any(|&e| e < 1) {
            return Err(Error::InvalidInput(format!(
                "exponents must be positive integers, got {exps:?}"
            )));
        }
        Ok(Self(exps))
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Permutation `pi` with `(w s)_i = s_{pi[i]}` (0-based), i.e. `pi[i]` is
/// the root `w^{-1} alpha_i` up to sign.
pub fn exponent_permutation(w: &WeylElement) -> [usize; 6] {
    let inv = w.inverse();
    std::array::from_fn(|i| inv.image_of_root(i).0)
}

/// `(w s)_alpha = s_{w^{-1} alpha}`, with `s_{-alpha} = s_alpha`.
pub fn act_on_exponents<T: Copy>(w: &WeylElement, s: &[T; 6]) -> [T; 6] {
    let pi = exponent_permutation(w);
    std::array::from_fn(|i| s[pi[i]])
}

/// `prod_{alpha in Delta_{w^{-1}}} (-1)^{s_alpha}`.
pub fn sign_product(w: &WeylElement, s: &ExponentTuple) -> i64 {
    let parity: i64 = inversion_set(&w.inverse())
        .iter()
        .map(|&i| s.0[i - 1])
        .sum();
    if parity.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sign of a term together with its exponent tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedTerm<T = ExponentTuple> {
    pub sign: i64,
    pub exps: T,
}

/// Sign-carrying terms `prod_{Delta_{v^{-1}}} (-1)^{s_alpha}` and `v^{-1} s`
/// for `v` in `W^I`. Only entries in inversion sets need to be integers, so
/// the exponents are generic; `parity` extracts the integer parity of an
/// entry and must succeed for every entry touched by a sign.
pub fn functional_sum_terms_with<T: Copy>(
    subset: SimpleSubset,
    s: &[T; 6],
    parity: impl Fn(&T) -> Option<i64>,
) -> Result<Vec<SignedTerm<[T; 6]>>> {
    parabolic_transversal(subset)
        .iter()
        .map(|v| {
            let vinv = v.inverse();
            let mut odd = 0;
            for i in inversion_set(&vinv) {
                odd += parity(&s[i - 1]).ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "exponent of root {i} enters a sign factor and must be an integer"
                    ))
                })?;
            }
            Ok(SignedTerm {
                sign: if odd.rem_euclid(2) == 0 { 1 } else { -1 },
                exps: act_on_exponents(&vinv, s),
            })
        })
        .collect()
}

/// The terms of the Weyl-symmetrized sum for integer exponents.
pub fn functional_sum_terms(subset: SimpleSubset, s: &ExponentTuple) -> Vec<SignedTerm> {
    functional_sum_terms_with(subset, &s.0, |e| Some(*e))
        .expect("integer exponents always have a parity")
        .into_iter()
        .map(|t| SignedTerm {
            sign: t.sign,
            exps: ExponentTuple(t.exps),
        })
        .collect()
}

fn coset(w: &WeylElement, set: &[WeylElement]) -> BTreeSet<[[i64; 2]; 2]> {
    set.iter().map(|v| w.compose(v).matrix).collect()
}

/// Terms over `W^I \ w1 W^I`, after checking `w1^{-1} s = s`, that the sign
/// product over `Delta_{w1^{-1}}` is `-1`, and that `w1^{-1} W^I = w1 W^I`.
pub fn reduction_terms(
    subset: SimpleSubset,
    w1: &WeylElement,
    s: &ExponentTuple,
) -> Result<Vec<SignedTerm>> {
    let w1inv = w1.inverse();
    if act_on_exponents(&w1inv, &s.0) != s.0 {
        return Err(Error::HypothesisViolated(format!(
            "w1^-1 s = {} differs from s = {s}",
            ExponentTuple(act_on_exponents(&w1inv, &s.0))
        )));
    }
    if sign_product(w1, s) != -1 {
        return Err(Error::HypothesisViolated(format!(
            "sign product over Delta_(w1^-1) is +1 for s = {s}"
        )));
    }
    let transversal = parabolic_transversal(subset);
    let left = coset(w1, &transversal);
    if coset(&w1inv, &transversal) != left {
        return Err(Error::CosetMismatch(format!(
            "w1^-1 W^I != w1 W^I for w1 = {w1}, I = {subset}"
        )));
    }
    let kept: BTreeSet<_> = transversal
        .iter()
        .filter(|v| !left.contains(&v.matrix))
        .map(|v| v.matrix)
        .collect();
    Ok(functional_sum_terms(subset, s)
        .into_iter()
        .zip(&transversal)
        .filter(|(_, v)| kept.contains(&v.matrix))
        .map(|(t, _)| t)
        .collect())
}

/// Elements of `W^I \ w1 W^I`, in transversal order.
pub fn reduced_transversal(subset: SimpleSubset, w1: &WeylElement) -> Vec<WeylElement> {
    let transversal = parabolic_transversal(subset);
    let left = coset(w1, &transversal);
    transversal
        .into_iter()
        .filter(|v| !left.contains(&v.matrix))
        .collect()
}
