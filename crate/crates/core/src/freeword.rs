//! Words in the free product `M + N` (or `M + N + T` for ternary questions).
//!
//! A reduced word alternates between factors and never contains an identity
//! letter. The flat subgroup `A♭B` is the kernel of the fold onto `A`; it is
//! generated by the formal conjugates `a b a⁻¹`, and [`FreeProduct::flat_decompose`]
//! recovers such a factorisation. The cosmash subgroup `A◇B` is the kernel of
//! both folds.

use std::fmt;
use std::str::FromStr;

use crate::action::Action;
use crate::group::FiniteGroup;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    M,
    N,
    /// Third factor, only used for ternary cosmash membership.
    T,
}

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::M => 0,
            Side::N => 1,
            Side::T => 2,
        }
    }

    /// The other side of a binary product.
    pub fn other(self) -> Side {
        match self {
            Side::M => Side::N,
            Side::N => Side::M,
            Side::T => panic!("no opposite side in a ternary product"),
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Side::M => "M",
            Side::N => "N",
            Side::T => "T",
        }
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(Side::M),
            "N" | "n" => Ok(Side::N),
            "T" | "t" => Ok(Side::T),
            _ => Err(Error::Parse(format!("unknown side tag {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub side: Side,
    pub elem: usize,
}

impl Letter {
    pub fn new(side: Side, elem: usize) -> Self {
        Letter { side, elem }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.side.tag(), self.elem)
    }
}

/// Parses the literal syntax `"M:3 N:1 M:0"` into raw, unreduced letters.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace()
        .map(|tok| {
            let (side, elem) = tok
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("letter {tok:?} is not SIDE:INDEX")))?;
            let elem = elem
                .parse()
                .map_err(|_| Error::Parse(format!("bad element index in {tok:?}")))?;
            Ok(Letter::new(side.parse()?, elem))
        })
        .collect()
}

/// A reduced word. Equality is structural on the reduced form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `a · b · a⁻¹` with `a` from the acting factor and `b` from the other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjGenerator {
    pub conjugator: usize,
    pub core: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// `M♭N`: kernel of the fold onto `M`.
    FlatMN,
    /// `N♭M`: kernel of the fold onto `N`.
    FlatNM,
    /// `M◇N`: kernel of `Σ: M + N -> M × N`.
    Cosmash,
    /// `M◇N◇T`: kernel of `M+N+T -> (M+N) × (M+T) × (N+T)`.
    TernaryCosmash,
}

/// The free product of two or three finite groups.
#[derive(Debug, Clone, Copy)]
pub struct FreeProduct<'g> {
    factors: [Option<&'g FiniteGroup>; 3],
}

impl<'g> FreeProduct<'g> {
    pub fn new(m: &'g FiniteGroup, n: &'g FiniteGroup) -> Self {
        FreeProduct { factors: [Some(m), Some(n), None] }
    }

    pub fn ternary(m: &'g FiniteGroup, n: &'g FiniteGroup, t: &'g FiniteGroup) -> Self {
        FreeProduct { factors: [Some(m), Some(n), Some(t)] }
    }

    pub fn factor(&self, side: Side) -> &'g FiniteGroup {
        self.factors[side.index()].expect("side not present in this free product")
    }

    fn restricted(&self, keep: [bool; 3]) -> Self {
        let mut factors = self.factors;
        for (f, k) in factors.iter_mut().zip(keep) {
            if !k {
                *f = None;
            }
        }
        FreeProduct { factors }
    }

    fn check_letter(&self, l: &Letter) -> Result<()> {
        let g = self.factors[l.side.index()]
            .ok_or_else(|| Error::Parse(format!("side {} not in this product", l.side.tag())))?;
        if l.elem >= g.order() {
            return Err(Error::ElementOutOfRange(l.elem));
        }
        Ok(())
    }

    /// Parses and reduces a word literal, checking every letter's range.
    pub fn parse(&self, text: &str) -> Result<FreeWord> {
        let raw = parse_letters(text)?;
        for l in &raw {
            self.check_letter(l)?;
        }
        Ok(self.reduce(&raw))
    }

    /// Canonical reduced form: identity letters vanish and adjacent letters
    /// from the same factor are multiplied, cascading as needed.
    pub fn reduce(&self, raw: &[Letter]) -> FreeWord {
        let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
        for &l in raw {
            let g = self.factor(l.side);
            if l.elem == g.identity() {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.side == l.side => {
                    let merged = g.mul(top.elem, l.elem);
                    if merged == g.identity() {
                        out.pop();
                    } else {
                        top.elem = merged;
                    }
                }
                _ => out.push(l),
            }
        }
        FreeWord { letters: out }
    }

    pub fn mul(&self, v: &FreeWord, w: &FreeWord) -> FreeWord {
        let mut raw = v.letters.clone();
        raw.extend_from_slice(&w.letters);
        self.reduce(&raw)
    }

    pub fn inverse(&self, w: &FreeWord) -> FreeWord {
        FreeWord {
            letters: w
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.side, self.factor(l.side).inv(l.elem)))
                .collect(),
        }
    }

    /// Fold of a raw letter sequence onto one factor: the ordered product of
    /// that factor's letters.
    pub fn fold(&self, letters: &[Letter], side: Side) -> usize {
        let g = self.factor(side);
        g.product(letters.iter().filter(|l| l.side == side).map(|l| l.elem))
    }

    /// `Σ(w)`: the pair of folds `(M-fold, N-fold)`.
    pub fn sigma_image(&self, w: &FreeWord) -> (usize, usize) {
        (self.fold(&w.letters, Side::M), self.fold(&w.letters, Side::N))
    }

    pub fn is_member(&self, w: &FreeWord, which: Membership) -> bool {
        let trivial_fold = |side: Side| {
            self.fold(&w.letters, side) == self.factor(side).identity()
        };
        match which {
            Membership::FlatMN => trivial_fold(Side::M),
            Membership::FlatNM => trivial_fold(Side::N),
            Membership::Cosmash => trivial_fold(Side::M) && trivial_fold(Side::N),
            Membership::TernaryCosmash => {
                // dropping one factor and reducing in the remaining binary
                // product must leave the empty word, for each of the three pairs
                [[true, true, false], [true, false, true], [false, true, true]]
                    .into_iter()
                    .all(|keep| {
                        let sub = self.restricted(keep);
                        let kept: Vec<Letter> = w
                            .letters
                            .iter()
                            .copied()
                            .filter(|l| keep[l.side.index()])
                            .collect();
                        sub.reduce(&kept).is_empty()
                    })
            }
        }
    }

    /// Factorises a word of the flat subgroup with conjugators from
    /// `acting` as a product of conjugates `a b a⁻¹`, sweeping left to right
    /// and accumulating the running prefix of `acting` letters.
    ///
    /// Works on raw sequences; identity letters of the other factor produce
    /// generators with trivial core, which a reduced input never contains.
    pub fn flat_decompose(&self, letters: &[Letter], acting: Side) -> Result<Vec<ConjGenerator>> {
        let a = self.factor(acting);
        let mut prefix = a.identity();
        let mut out = Vec::new();
        for l in letters {
            if l.side == acting {
                prefix = a.mul(prefix, l.elem);
            } else {
                out.push(ConjGenerator { conjugator: prefix, core: l.elem });
            }
        }
        if prefix != a.identity() {
            return Err(Error::NotInFlat(prefix));
        }
        Ok(out)
    }

    /// Rebuilds the word represented by a product of conjugation generators.
    pub fn from_generators(&self, gens: &[ConjGenerator], acting: Side) -> FreeWord {
        let a = self.factor(acting);
        let mut raw = Vec::with_capacity(3 * gens.len());
        for g in gens {
            raw.push(Letter::new(acting, g.conjugator));
            raw.push(Letter::new(acting.other(), g.core));
            raw.push(Letter::new(acting, a.inv(g.conjugator)));
        }
        self.reduce(&raw)
    }

    /// `ξ: A♭X -> X` for the action `psi` of the `acting` factor on the other
    /// one: the product of `ψ(a, x)` over the flat decomposition.
    pub fn eval_flat_action(&self, psi: &Action, letters: &[Letter], acting: Side) -> Result<usize> {
        let x = self.factor(acting.other());
        if psi.acting().as_ref() != self.factor(acting) || psi.target().as_ref() != x {
            return Err(Error::GroupMismatch("action does not match free product factors".into()));
        }
        let gens = self.flat_decompose(letters, acting)?;
        Ok(x.product(gens.iter().map(|g| psi.act(g.conjugator, g.core))))
    }
}
