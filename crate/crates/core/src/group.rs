//! Finite groups given by their multiplication tables.
//!
//! Elements are dense indices `0..order`. The identity can sit at any index,
//! so tables imported from elsewhere never need re-indexing.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::{Diagnostic, Error, Result};

pub type GroupRef = Arc<FiniteGroup>;

/// Largest group order accepted by the automorphism and isomorphism searches.
pub const DEFAULT_SEARCH_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupAxiomFailure {
    NoIdentity,
    NoInverse { element: usize },
    NonAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for GroupAxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupAxiomFailure::NoIdentity => write!(f, "no two-sided identity element"),
            GroupAxiomFailure::NoInverse { element } => {
                write!(f, "no inverse for element {element}")
            }
            GroupAxiomFailure::NonAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
        }
    }
}

/// Checks a raw table against the group axioms.
///
/// Structural problems (empty, non-square, out-of-range entries) are errors;
/// a well-formed table that is not a group yields the first failed axiom,
/// scanning identity, then inverses, then associativity in lexicographic order.
pub fn validate_group(table: &[Vec<usize>]) -> Result<Diagnostic<GroupAxiomFailure>> {
    let order = check_shape(table)?;
    Ok(Diagnostic::from_option(
        axioms(order, |a, b| table[a][b]).err(),
    ))
}

fn check_shape(table: &[Vec<usize>]) -> Result<usize> {
    let order = table.len();
    if order == 0 {
        return Err(Error::EmptyTable);
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(Error::NonSquare { row, len: entries.len(), expected: order });
        }
        if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::OutOfRange { row, col, value, order });
        }
    }
    Ok(order)
}

/// Returns `(identity, inverses)` or the first failed axiom.
fn axioms(
    order: usize,
    mul: impl Fn(usize, usize) -> usize,
) -> std::result::Result<(usize, Vec<usize>), GroupAxiomFailure> {
    let identity = (0..order)
        .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
        .ok_or(GroupAxiomFailure::NoIdentity)?;
    let mut inverses = Vec::with_capacity(order);
    for x in 0..order {
        let mut candidates =
            (0..order).filter(|&y| mul(x, y) == identity && mul(y, x) == identity);
        match (candidates.next(), candidates.next()) {
            (Some(y), None) => inverses.push(y),
            _ => return Err(GroupAxiomFailure::NoInverse { element: x }),
        }
    }
    for a in 0..order {
        for b in 0..order {
            let ab = mul(a, b);
            for c in 0..order {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Err(GroupAxiomFailure::NonAssociative { a, b, c });
                }
            }
        }
    }
    Ok((identity, inverses))
}

/// A finite group stored as a full multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: Option<String>,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.identity == other.identity && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a table, validating every axiom.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let order = check_shape(table)?;
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        Self::from_flat(order, flat)
    }

    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut flat = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = mul(a, b);
                if v >= order {
                    return Err(Error::OutOfRange { row: a, col: b, value: v, order });
                }
                flat.push(v);
            }
        }
        Self::from_flat(order, flat)
    }

    fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        let (identity, inverses) =
            axioms(order, |a, b| table[a * order + b]).map_err(Error::InvalidGroup)?;
        Ok(FiniteGroup { name: None, order, table, identity, inverses })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.conj(a, b), self.inv(b))
    }

    pub fn product(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Multiset of element orders, sorted.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.order);
        set.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// Smallest normal subgroup containing `gens`: the subgroup generated by
    /// all conjugates of the generators.
    pub fn normal_closure(&self, gens: &[usize]) -> ElementSet {
        let mut conjugates = ElementSet::empty(self.order);
        for &x in gens {
            for g in self.elements() {
                conjugates.insert(self.conj(g, x));
            }
        }
        conjugates.remove(self.identity);
        self.subgroup_generated(&conjugates.to_vec())
    }

    /// A small generating set, chosen greedily by descending element order
    /// (ties broken by index). Empty for the trivial group.
    pub fn generators(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = self.elements().collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut span = self.subgroup_generated(&gens);
        for x in candidates {
            if span.len() == self.order {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// Quotient by a normal subgroup. Each coset is represented by its
    /// minimal element index, and cosets are numbered in increasing order of
    /// their representatives.
    pub fn quotient(self: &GroupRef, normal: &ElementSet) -> Result<(GroupRef, Hom)> {
        if normal.universe() != self.order || !normal.is_normal_in(self) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for k in normal.iter() {
                coset_of[self.mul(x, k)] = idx;
            }
        }
        let q = FiniteGroup::from_fn(reps.len(), |a, b| coset_of[self.mul(reps[a], reps[b])])?;
        let q = Arc::new(q);
        let proj = Hom { dom: self.clone(), cod: q.clone(), map: coset_of };
        Ok((q, proj))
    }

    /// The subgroup `set` as a group in its own right, elements numbered in
    /// increasing order of their index in `self`, with its inclusion.
    pub fn subgroup_as_group(self: &GroupRef, set: &ElementSet) -> Result<(GroupRef, Hom)> {
        if !set.is_subgroup_of(self) {
            return Err(Error::GroupMismatch("subset is not a subgroup".into()));
        }
        let members = set.to_vec();
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i;
        }
        let sub = FiniteGroup::from_fn(members.len(), |a, b| local[self.mul(members[a], members[b])])?;
        let sub = Arc::new(sub);
        let inc = Hom { dom: sub.clone(), cod: self.clone(), map: members };
        Ok((sub, inc))
    }

    /// Direct product with element `(g, h)` at index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let n = h.order;
        FiniteGroup::from_fn(g.order * n, |a, b| {
            g.mul(a / n, b / n) * n + h.mul(a % n, b % n)
        })
        .expect("direct product of groups is a group")
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_fn(1, |_, _| 0).expect("trivial group").with_name("1")
    }

    /// Cyclic group `Z/n` with element `k` at index `k`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn(n, |a, b| (a + b) % n)
            .expect("cyclic group")
            .with_name(format!("Z{n}"))
    }

    /// Symmetric group on `{0..n}`; elements are the permutations in
    /// lexicographic order of their image lists, and `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> FiniteGroup {
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
        FiniteGroup::from_fn(perms.len(), |a, b| {
            let composed: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
            index(&composed)
        })
        .expect("symmetric group")
        .with_name(format!("S{n}"))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A subset of a group's elements, as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: Vec<bool>,
    len: usize,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet { members: vec![false; universe], len: 0 }
    }

    pub fn from_elements(universe: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for x in elems {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.get(x).copied().unwrap_or(false)
    }

    /// Returns whether `x` was newly inserted.
    pub fn insert(&mut self, x: usize) -> bool {
        if self.members[x] {
            false
        } else {
            self.members[x] = true;
            self.len += 1;
            true
        }
    }

    pub fn remove(&mut self, x: usize) -> bool {
        if self.members[x] {
            self.members[x] = false;
            self.len -= 1;
            true
        } else {
            false
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subgroup_of(&self, g: &FiniteGroup) -> bool {
        self.universe() == g.order()
            && self.contains(g.identity())
            && self.iter().all(|x| {
                self.contains(g.inv(x)) && self.iter().all(|y| self.contains(g.mul(x, y)))
            })
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.is_subgroup_of(g)
            && g.elements().all(|h| self.iter().all(|x| self.contains(g.conj(h, x))))
    }
}

/// A group homomorphism, stored as the image of every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    dom: GroupRef,
    cod: GroupRef,
    map: Vec<usize>,
}

impl Hom {
    /// Builds a homomorphism, checking range and multiplicativity.
    pub fn new(dom: GroupRef, cod: GroupRef, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.order() {
            return Err(Error::DimensionMismatch(format!(
                "map has {} entries, domain has order {}",
                map.len(),
                dom.order()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= cod.order()) {
            return Err(Error::ElementOutOfRange(v));
        }
        for x in dom.elements() {
            for y in dom.elements() {
                if map[dom.mul(x, y)] != cod.mul(map[x], map[y]) {
                    return Err(Error::NotHomomorphism { x, y });
                }
            }
        }
        Ok(Hom { dom, cod, map })
    }

    pub(crate) fn new_unchecked(dom: GroupRef, cod: GroupRef, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), dom.order());
        Hom { dom, cod, map }
    }

    pub fn identity(g: &GroupRef) -> Self {
        Hom { dom: g.clone(), cod: g.clone(), map: g.elements().collect() }
    }

    pub fn trivial(dom: &GroupRef, cod: &GroupRef) -> Self {
        Hom { dom: dom.clone(), cod: cod.clone(), map: vec![cod.identity(); dom.order()] }
    }

    pub fn dom(&self) -> &GroupRef {
        &self.dom
    }

    pub fn cod(&self) -> &GroupRef {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Hom) -> Result<Hom> {
        if inner.cod != self.dom {
            return Err(Error::GroupMismatch("composition of non-composable maps".into()));
        }
        Ok(Hom {
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            map: inner.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    pub fn kernel(&self) -> ElementSet {
        ElementSet::from_elements(
            self.dom.order(),
            self.dom.elements().filter(|&x| self.map[x] == self.cod.identity()),
        )
    }

    pub fn image(&self) -> ElementSet {
        ElementSet::from_elements(self.cod.order(), self.map.iter().copied())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.cod.order()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Option<Hom> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut inv = vec![0; self.cod.order()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(Hom { dom: self.cod.clone(), cod: self.dom.clone(), map: inv })
    }
}

/// Extends generator images to a map on the whole domain, or `None` when the
/// assignment is inconsistent. Every edge `x -> x*g` is checked, so a `Some`
/// result is a homomorphism whenever `gens` generates `dom`.
fn extend_from_generators(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; dom.order()];
    map[dom.identity()] = cod.identity();
    let mut queue = VecDeque::from([dom.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &h) in gens.iter().zip(images) {
            let y = dom.mul(x, g);
            let fy = cod.mul(map[x], h);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Backtracking over images of `dom.generators()`, with `candidates(g)`
/// listing the admissible images of a generator `g`.
fn search_homs(
    dom: &GroupRef,
    cod: &GroupRef,
    candidates: impl Fn(usize) -> Vec<usize>,
    mut accept: impl FnMut(Vec<usize>) -> bool,
) {
    let gens = dom.generators();
    let choices: Vec<Vec<usize>> = gens.iter().map(|&g| candidates(g)).collect();
    let mut pick = vec![0usize; gens.len()];
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    loop {
        let images: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        if let Some(map) = extend_from_generators(dom, cod, &gens, &images) {
            if !accept(map) {
                return;
            }
        }
        // odometer, last generator fastest
        let mut k = gens.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
}

/// All homomorphisms `dom -> cod`, in lexicographic order of generator images.
pub fn homomorphisms(dom: &GroupRef, cod: &GroupRef) -> Vec<Hom> {
    let cod_orders: Vec<usize> = cod.elements().map(|y| cod.element_order(y)).collect();
    let mut out = Vec::new();
    search_homs(
        dom,
        cod,
        |g| {
            let k = dom.element_order(g);
            cod.elements().filter(|&y| k % cod_orders[y] == 0).collect()
        },
        |map| {
            out.push(Hom::new_unchecked(dom.clone(), cod.clone(), map));
            true
        },
    );
    out
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

/// All automorphisms of `g`. The identity comes first.
pub fn automorphisms(g: &GroupRef, cap: usize) -> Result<Vec<Hom>> {
    check_cap("automorphism search", g.order(), cap)?;
    let orders: Vec<usize> = g.elements().map(|y| g.element_order(y)).collect();
    let mut out = Vec::new();
    search_homs(
        g,
        g,
        |x| g.elements().filter(|&y| orders[y] == orders[x]).collect(),
        |map| {
            let hom = Hom::new_unchecked(g.clone(), g.clone(), map);
            if hom.is_isomorphism() {
                out.push(hom);
            }
            true
        },
    );
    let id = Hom::identity(g);
    if let Some(pos) = out.iter().position(|h| *h == id) {
        let first = out.remove(pos);
        out.insert(0, first);
    }
    Ok(out)
}

/// An isomorphism `g -> h` if one exists.
pub fn is_isomorphic(g: &GroupRef, h: &GroupRef, cap: usize) -> Result<Option<Hom>> {
    check_cap("isomorphism search", g.order().max(h.order()), cap)?;
    if g.order() != h.order() || g.order_profile() != h.order_profile() {
        return Ok(None);
    }
    let h_orders: Vec<usize> = h.elements().map(|y| h.element_order(y)).collect();
    let mut found = None;
    search_homs(
        g,
        h,
        |x| {
            let k = g.element_order(x);
            h.elements().filter(|&y| h_orders[y] == k).collect()
        },
        |map| {
            let hom = Hom::new_unchecked(g.clone(), h.clone(), map);
            if hom.is_isomorphism() {
                found = Some(hom);
                false
            } else {
                true
            }
        },
    );
    Ok(found)
}

/// `Aut(X)` as a finite group, with element `i` standing for `autos[i]` and
/// product `i * j = autos[i] ∘ autos[j]`.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub group: GroupRef,
    pub autos: Vec<Hom>,
}

impl AutomorphismGroup {
    pub fn of(x: &GroupRef, cap: usize) -> Result<Self> {
        let autos = automorphisms(x, cap)?;
        let index = |h: &Hom| autos.iter().position(|a| a == h).expect("closed under composition");
        let mut table = vec![vec![0; autos.len()]; autos.len()];
        for (i, a) in autos.iter().enumerate() {
            for (j, b) in autos.iter().enumerate() {
                table[i][j] = index(&a.compose(b)?);
            }
        }
        let group = FiniteGroup::from_table(&table)?;
        Ok(AutomorphismGroup { group: Arc::new(group), autos })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> GroupRef {
        Arc::new(g)
    }

    #[test]
    fn validate_examples() {
        assert!(validate_group(&[vec![0, 1], vec![1, 0]]).unwrap().is_valid());
        assert_eq!(
            validate_group(&[vec![0, 1], vec![1, 1]]).unwrap(),
            Diagnostic::Invalid(GroupAxiomFailure::NoInverse { element: 1 })
        );
        let z3: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        assert!(validate_group(&z3).unwrap().is_valid());
    }

    #[test]
    fn validate_structural_errors() {
        assert_eq!(validate_group(&[]), Err(Error::EmptyTable));
        assert!(matches!(
            validate_group(&[vec![0, 1], vec![1]]),
            Err(Error::NonSquare { row: 1, .. })
        ));
        assert!(matches!(
            validate_group(&[vec![0, 2], vec![1, 0]]),
            Err(Error::OutOfRange { row: 0, col: 1, value: 2, .. })
        ));
    }

    #[test]
    fn validate_catches_non_associative() {
        // a loop of order 5 with identity and unique inverses but no associativity
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            validate_group(&t).unwrap(),
            Diagnostic::Invalid(GroupAxiomFailure::NonAssociative { .. })
        ));
    }

    #[test]
    fn identity_need_not_be_zero() {
        // Z2 with identity at index 1
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn normal_closure_examples() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.normal_closure(&[s3.identity()]).to_vec(), vec![s3.identity()]);
        // (0 1) swaps the first two points: image list [1,0,2]
        let t = permutations(3).iter().position(|p| p == &[1, 0, 2]).unwrap();
        assert_eq!(s3.normal_closure(&[t]).len(), 6);
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(z6.normal_closure(&[2]).to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn quotient_examples() {
        let s3 = arc(FiniteGroup::symmetric(3));
        let (q, p) = s3.quotient(&ElementSet::from_elements(6, [s3.identity()])).unwrap();
        assert_eq!(q.order(), 6);
        assert!(p.is_isomorphism());
        let (q, _) = s3.quotient(&ElementSet::from_elements(6, 0..6)).unwrap();
        assert_eq!(q.order(), 1);
        let a3 = s3.normal_closure(&[3]); // [1,2,0] is a 3-cycle
        assert_eq!(a3.len(), 3);
        let (q, p) = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(p.kernel(), a3);
        let not_normal = ElementSet::from_elements(6, [0, 1]);
        assert_eq!(s3.quotient(&not_normal).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn automorphism_counts() {
        let cap = DEFAULT_SEARCH_CAP;
        assert_eq!(automorphisms(&arc(FiniteGroup::cyclic(2)), cap).unwrap().len(), 1);
        assert_eq!(automorphisms(&arc(FiniteGroup::cyclic(3)), cap).unwrap().len(), 2);
        let v4 = arc(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
        assert_eq!(automorphisms(&v4, cap).unwrap().len(), 6);
        assert_eq!(automorphisms(&arc(FiniteGroup::symmetric(3)), cap).unwrap().len(), 6);
        let big = arc(FiniteGroup::cyclic(65));
        assert!(matches!(automorphisms(&big, cap), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn automorphisms_form_a_group() {
        let v4 = arc(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
        let aut = AutomorphismGroup::of(&v4, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(aut.group.order(), 6);
        assert!(!aut.group.is_abelian());
        for a in &aut.autos {
            assert!(aut.autos.contains(&a.inverse().unwrap()));
        }
    }

    #[test]
    fn isomorphism_examples() {
        let cap = DEFAULT_SEARCH_CAP;
        let z4 = arc(FiniteGroup::cyclic(4));
        let v4 = arc(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
        assert!(is_isomorphic(&z4, &z4, cap).unwrap().is_some());
        assert!(is_isomorphic(&z4, &v4, cap).unwrap().is_none());
        let z6 = arc(FiniteGroup::cyclic(6));
        let z2z3 = arc(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3)));
        assert_eq!(z2z3.order(), 6);
        let iso = is_isomorphic(&z6, &z2z3, cap).unwrap().unwrap();
        assert!(iso.is_isomorphism());
        assert!(Hom::new(z6.clone(), z2z3.clone(), iso.map().to_vec()).is_ok());
        let s3 = arc(FiniteGroup::symmetric(3));
        assert!(is_isomorphic(&z6, &s3, cap).unwrap().is_none());
    }

    #[test]
    fn direct_product_with_trivial() {
        let s3 = arc(FiniteGroup::symmetric(3));
        let p = arc(FiniteGroup::direct_product(&FiniteGroup::trivial(), &s3));
        assert!(is_isomorphic(&p, &s3, DEFAULT_SEARCH_CAP).unwrap().is_some());
    }

    #[test]
    fn hom_count_s3_to_s3() {
        let s3 = arc(FiniteGroup::symmetric(3));
        assert_eq!(homomorphisms(&s3, &s3).len(), 10);
        let z2 = arc(FiniteGroup::cyclic(2));
        assert_eq!(homomorphisms(&z2, &s3).len(), 4);
        assert_eq!(homomorphisms(&s3, &z2).len(), 2);
    }

    #[test]
    fn hom_new_rejects_non_homomorphism() {
        let z2 = arc(FiniteGroup::cyclic(2));
        let z3 = arc(FiniteGroup::cyclic(3));
        assert!(matches!(Hom::new(z3, z2, vec![0, 1, 1]), Err(Error::NotHomomorphism { .. })));
    }
}
