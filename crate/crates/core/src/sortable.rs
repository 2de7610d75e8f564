//! Sorting words, sortable elements and closed Cambrian intervals.
//!
//! Fix a Coxeter element `γ` by a reduced word that uses every generator
//! once. The `γ`-sorting word of `w` is the lexicographically first reduced
//! word of `w` when read as a subword of `γγγ⋯`; it splits into one block per
//! copy of `γ`. `w` is `γ`-sortable when these blocks shrink weakly under
//! inclusion.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::coxeter::{CoxeterError, CoxeterSystem, Element, LeftPeeler};
use crate::error::Error;
use crate::lattice::FiniteLattice;
use crate::weak::{weak_le, OrderIdeal};

/// A Coxeter element, stored as the generator order of its chosen reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    order: Vec<usize>,
}

impl CoxeterElement {
    pub fn new(rank: usize, order: Vec<usize>) -> Result<Self, Error> {
        let mut seen = vec![false; rank];
        if order.len() != rank {
            return Err(Error::InvalidCoxeterElement(format!(
                "{} letters for rank {rank}",
                order.len()
            )));
        }
        for &s in &order {
            if s >= rank || seen[s] {
                return Err(Error::InvalidCoxeterElement(format!("{order:?} is not a permutation")));
            }
            seen[s] = true;
        }
        Ok(CoxeterElement { order })
    }

    /// `s0 s1 ⋯ s(n-1)` in index order.
    pub fn standard(rank: usize) -> Self {
        CoxeterElement { order: (0..rank).collect() }
    }

    pub fn parse(sys: &CoxeterSystem, text: &str) -> Result<Self, Error> {
        CoxeterElement::new(sys.rank(), sys.parse_word(text)?)
    }

    /// Every generator order, lexicographically.
    pub fn all(rank: usize) -> Vec<Self> {
        (0..rank).permutations(rank).map(|order| CoxeterElement { order }).collect()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.order.len()
    }

    /// The first letter of the chosen word.
    pub fn initial(&self) -> usize {
        self.order[0]
    }

    /// `sγs` for the initial letter `s`: the word rotated by one.
    pub fn rotated(&self) -> Self {
        let mut order = self.order.clone();
        order.rotate_left(1);
        CoxeterElement { order }
    }

    pub fn element(&self, sys: &CoxeterSystem) -> Result<Element, CoxeterError> {
        sys.canonicalize(&self.order)
    }

    pub fn label(&self, sys: &CoxeterSystem) -> String {
        sys.format_word(&self.order)
    }
}

/// The `γ`-sorting word of an element, split into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortingWord {
    letters: Vec<usize>,
    /// Exclusive end offset of each block within `letters`.
    block_ends: Vec<usize>,
    owner: Element,
}

impl SortingWord {
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn owner(&self) -> &Element {
        &self.owner
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[usize]> + '_ {
        let starts = std::iter::once(0).chain(self.block_ends.iter().copied());
        starts.zip(&self.block_ends).map(|(a, &b)| &self.letters[a..b])
    }

    pub fn block_count(&self) -> usize {
        self.block_ends.len()
    }

    /// Blocks weakly decrease under inclusion.
    pub fn is_sortable(&self) -> bool {
        self.blocks()
            .tuple_windows()
            .all(|(outer, inner)| inner.iter().all(|s| outer.contains(s)))
    }

    /// Names separated by spaces with ` | ` between blocks, e.g. `s0 s2 s3 | s2`.
    pub fn render(&self) -> String {
        let sys = self.owner.system();
        self.blocks().map(|b| sys.format_word(b)).join(" | ")
    }

    /// The word without block dividers; `ε` when empty.
    pub fn label(&self) -> String {
        if self.letters.is_empty() {
            "ε".to_string()
        } else {
            self.owner.system().format_word(&self.letters)
        }
    }

    /// `ε = x_0, x_1, …, x_k = w` with `x_i` the product of the first `i` letters.
    pub fn prefixes(&self) -> Result<Vec<Element>, CoxeterError> {
        let sys = self.owner.system();
        (0..=self.letters.len()).map(|i| sys.canonicalize(&self.letters[..i])).collect()
    }
}

impl fmt::Display for SortingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn check_rank(w: &Element, gamma: &CoxeterElement) -> Result<(), Error> {
    if gamma.rank() != w.system().rank() {
        return Err(Error::InvalidCoxeterElement(format!(
            "rank {} Coxeter element for a rank {} system",
            gamma.rank(),
            w.system().rank()
        )));
    }
    Ok(())
}

/// Scans `γ^∞` and takes each letter that is a left descent of what remains.
pub fn sorting_word(w: &Element, gamma: &CoxeterElement) -> Result<SortingWord, Error> {
    check_rank(w, gamma)?;
    let mut rest = LeftPeeler::new(w);
    let mut letters = Vec::with_capacity(w.len());
    let mut block_ends = Vec::new();
    while !rest.is_done() {
        for &s in gamma.order() {
            if rest.is_descent(s)? {
                rest.peel(s)?;
                letters.push(s);
            }
        }
        block_ends.push(letters.len());
    }
    Ok(SortingWord { letters, block_ends, owner: w.clone() })
}

pub fn is_sortable(w: &Element, gamma: &CoxeterElement) -> Result<bool, Error> {
    Ok(sorting_word(w, gamma)?.is_sortable())
}

/// Sortability through the initial-letter recursion.
///
/// With `s` initial in `γ`: if `s ≤ w`, recurse on `sw` with `sγs`;
/// otherwise `w` must lie in the parabolic subgroup without `s` and be
/// sortable there for `sγ`. The parabolic subgroup is tracked as the
/// remaining suffix of the word, so no subsystem is built.
pub fn is_sortable_recursive(w: &Element, gamma: &CoxeterElement) -> Result<bool, Error> {
    check_rank(w, gamma)?;
    fn go(w: &Element, gamma: &[usize]) -> Result<bool, CoxeterError> {
        if w.is_identity() {
            return Ok(true);
        }
        let Some((&s, rest)) = gamma.split_first() else {
            return Ok(false);
        };
        if w.is_left_descent(s)? {
            let mut rotated = rest.to_vec();
            rotated.push(s);
            go(&w.generator_times(s)?, &rotated)
        } else if w.word().contains(&s) {
            Ok(false)
        } else {
            go(w, rest)
        }
    }
    Ok(go(w, gamma.order())?)
}

/// Splits a word into blocks by its leftmost embedding in `γ^∞`.
///
/// For the sorting word this gives the sorting blocks; for other reduced
/// words it shows where they sit as subwords of `γ^∞`.
pub fn blocks_in_gamma_power(word: &[usize], gamma: &CoxeterElement) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut last: Option<usize> = None;
    for &s in word {
        let at = gamma.order().iter().position(|&t| t == s).expect("letter of γ");
        if last.is_none_or(|p| at <= p) {
            blocks.push(Vec::new());
        }
        last = Some(at);
        blocks.last_mut().expect("pushed").push(s);
    }
    blocks
}

/// Every reduced word of `w`, lexicographically sorted.
pub fn all_reduced_words(w: &Element) -> Result<Vec<Vec<usize>>, CoxeterError> {
    fn go(w: &Element, memo: &mut HashMap<Element, Vec<Vec<usize>>>) -> Result<Vec<Vec<usize>>, CoxeterError> {
        if let Some(words) = memo.get(w) {
            return Ok(words.clone());
        }
        let mut out = Vec::new();
        if w.is_identity() {
            out.push(Vec::new());
        }
        for s in w.left_descents()? {
            for tail in go(&w.generator_times(s)?, memo)? {
                let mut word = Vec::with_capacity(tail.len() + 1);
                word.push(s);
                word.extend(tail);
                out.push(word);
            }
        }
        memo.insert(w.clone(), out.clone());
        Ok(out)
    }
    let mut words = go(w, &mut HashMap::new())?;
    words.sort();
    Ok(words)
}

/// Prefixes of the sorting word of a sortable `w`.
pub fn sorting_chain(w: &Element, gamma: &CoxeterElement) -> Result<Vec<Element>, Error> {
    let sw = sorting_word(w, gamma)?;
    if !sw.is_sortable() {
        return Err(not_sortable("element", &sw));
    }
    Ok(sw.prefixes()?)
}

fn not_sortable(role: &'static str, sw: &SortingWord) -> Error {
    Error::NotSortable { role, word: sw.owner().label(), blocks: sw.render() }
}

/// The closed interval `[u, v]_γ` of the Cambrian semilattice.
#[derive(Debug, Clone)]
pub struct CambrianInterval {
    gamma: CoxeterElement,
    bottom: Element,
    top: Element,
    elements: Vec<Element>,
    sorting_words: Vec<SortingWord>,
    lattice: FiniteLattice,
}

impl CambrianInterval {
    pub fn gamma(&self) -> &CoxeterElement {
        &self.gamma
    }

    pub fn bottom(&self) -> &Element {
        &self.bottom
    }

    pub fn top(&self) -> &Element {
        &self.top
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.top.system()
    }

    /// Members ordered by length, then canonical word; lattice indices follow this order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn sorting_words(&self) -> &[SortingWord] {
        &self.sorting_words
    }

    /// Covers are those of the induced subposet; labels are sorting words.
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.elements.binary_search(w).ok()
    }

    /// Lattice indices of the sorting-word prefixes of the top that lie in the interval.
    pub fn sorting_chain_indices(&self) -> Result<Vec<usize>, Error> {
        let sw = sorting_word(&self.top, &self.gamma)?;
        Ok(sw.prefixes()?.iter().filter_map(|x| self.index_of(x)).collect())
    }
}

pub type SortablePredicate<'a> = dyn Fn(&Element) -> Result<bool, Error> + Sync + 'a;

/// Options for [`cambrian_interval_with`].
#[derive(Default)]
pub struct IntervalOptions<'a> {
    /// Upper bound on the size of the weak-order ideal below the top.
    pub max_elems: Option<usize>,
    /// Replaces the block test, e.g. by a lookup into a precomputed set.
    pub sortable: Option<&'a SortablePredicate<'a>>,
}

pub fn cambrian_interval(u: &Element, v: &Element, gamma: &CoxeterElement) -> Result<CambrianInterval, Error> {
    cambrian_interval_with(u, v, gamma, &IntervalOptions::default())
}

/// Builds `[u, v]_γ`: the sortable members of the ideal below `v` that lie
/// above `u`, with the transitive reduction of the induced order as covers.
pub fn cambrian_interval_with(
    u: &Element,
    v: &Element,
    gamma: &CoxeterElement,
    options: &IntervalOptions<'_>,
) -> Result<CambrianInterval, Error> {
    check_rank(u, gamma)?;
    check_rank(v, gamma)?;
    for (role, x) in [("bottom", u), ("top", v)] {
        let sw = sorting_word(x, gamma)?;
        if !sw.is_sortable() {
            return Err(not_sortable(role, &sw));
        }
    }
    if !weak_le(u, v)? {
        return Err(Error::NotBelow { bottom: u.label(), top: v.label() });
    }
    let ideal = OrderIdeal::new(v, options.max_elems)?;
    let bottom = ideal.index_of(u).expect("u ≤ v lies in the ideal of v");
    let keep: Vec<Result<bool, Error>> = ideal
        .elements()
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            if !ideal.le(bottom, i) {
                return Ok(false);
            }
            match options.sortable {
                Some(f) => f(x),
                None => is_sortable(x, gamma),
            }
        })
        .collect();
    let mut chosen = Vec::new();
    for (i, k) in keep.into_iter().enumerate() {
        if k? {
            chosen.push(i);
        }
    }
    let elements: Vec<Element> = chosen.iter().map(|&i| ideal.elements()[i].clone()).collect();
    let sorting_words = elements.iter().map(|x| sorting_word(x, gamma)).collect::<Result<Vec<_>, _>>()?;
    let labels = sorting_words.iter().map(SortingWord::label).collect();
    let lattice = FiniteLattice::from_order(labels, |a, b| ideal.le(chosen[a], chosen[b]))?;
    Ok(CambrianInterval {
        gamma: gamma.clone(),
        bottom: u.clone(),
        top: v.clone(),
        elements,
        sorting_words,
        lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems;

    fn gamma_c3() -> CoxeterElement {
        CoxeterElement::standard(4)
    }

    #[test]
    fn coxeter_element_validation() {
        assert!(CoxeterElement::new(3, vec![0, 1, 1]).is_err());
        assert!(CoxeterElement::new(3, vec![0, 1]).is_err());
        assert_eq!(CoxeterElement::all(3).len(), 6);
        let g = CoxeterElement::new(3, vec![2, 0, 1]).unwrap();
        assert_eq!(g.rotated().order(), &[0, 1, 2]);
    }

    #[test]
    fn sorting_words_of_the_worked_example() {
        let sys = systems::affine_c3();
        let w = sys.parse_element("s0 s2 s3 s2").unwrap();
        let sw = sorting_word(&w, &gamma_c3()).unwrap();
        assert_eq!(sw.render(), "s0 s2 s3 | s2");
        assert_eq!(sw.blocks().collect::<Vec<_>>(), vec![&[0, 2, 3][..], &[2][..]]);
        assert!(sw.is_sortable());

        let w = sys.parse_element("s0 s2 s3 s1").unwrap();
        let sw = sorting_word(&w, &gamma_c3()).unwrap();
        assert_eq!(sw.render(), "s0 s2 s3 | s1");
        assert!(!sw.is_sortable());

        let e = sorting_word(&sys.identity(), &gamma_c3()).unwrap();
        assert_eq!(e.render(), "");
        assert_eq!(e.block_count(), 0);
        assert!(e.is_sortable());
    }

    #[test]
    fn recursion_matches_examples() {
        let sys = systems::affine_c3();
        let g = gamma_c3();
        assert!(is_sortable_recursive(&sys.parse_element("s0 s2 s3 s2").unwrap(), &g).unwrap());
        assert!(is_sortable_recursive(&sys.parse_element("s2").unwrap(), &g).unwrap());
        assert!(!is_sortable_recursive(&sys.parse_element("s0 s2 s3 s1").unwrap(), &g).unwrap());
    }

    #[test]
    fn reduced_word_counts() {
        let sys = systems::affine_c3();
        assert_eq!(all_reduced_words(&sys.parse_element("s0 s2 s3 s2").unwrap()).unwrap().len(), 4);
        assert_eq!(all_reduced_words(&sys.parse_element("s0 s2 s3 s1").unwrap()).unwrap().len(), 5);
        assert_eq!(all_reduced_words(&sys.identity()).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn chains() {
        let sys = systems::affine_c3();
        let w = sys.parse_element("s0 s2 s3 s2").unwrap();
        let chain: Vec<String> = sorting_chain(&w, &gamma_c3()).unwrap().iter().map(|e| e.label()).collect();
        assert_eq!(chain, ["ε", "s0", "s0 s2", "s0 s2 s3", "s0 s2 s3 s2"]);
        assert_eq!(sorting_chain(&sys.identity(), &gamma_c3()).unwrap().len(), 1);
        let bad = sys.parse_element("s0 s2 s3 s1").unwrap();
        assert!(matches!(sorting_chain(&bad, &gamma_c3()), Err(Error::NotSortable { .. })));
    }

    #[test]
    fn pentagon() {
        let sys = systems::a2();
        let g = CoxeterElement::standard(2);
        let top = sys.parse_element("s1 s2 s1").unwrap();
        let iv = cambrian_interval(&sys.identity(), &top, &g).unwrap();
        let labels: Vec<&str> = iv.lattice().labels().iter().map(String::as_str).collect();
        assert_eq!(labels, ["ε", "s1", "s2", "s1 s2", "s1 s2 s1"]);
        assert_eq!(iv.lattice().covers().len(), 5);
    }

    #[test]
    fn point_interval() {
        let sys = systems::affine_c3();
        let w = sys.parse_element("s0 s2 s3 s2").unwrap();
        let iv = cambrian_interval(&w, &w, &gamma_c3()).unwrap();
        assert_eq!(iv.len(), 1);
    }

    #[test]
    fn interval_errors() {
        let sys = systems::affine_c3();
        let bad = sys.parse_element("s0 s2 s3 s1").unwrap();
        let err = cambrian_interval(&sys.identity(), &bad, &gamma_c3()).unwrap_err();
        assert!(matches!(err, Error::NotSortable { role: "top", .. }));
        assert!(err.to_string().contains("s0 s2 s3 | s1"));
        let u = sys.parse_element("s2").unwrap();
        let v = sys.parse_element("s0").unwrap();
        assert!(matches!(cambrian_interval(&u, &v, &gamma_c3()), Err(Error::NotBelow { .. })));
        let top = sys.parse_element("s0 s1 s2 s3 s1 s2 s3 s1 s2 s3").unwrap();
        let limited = IntervalOptions { max_elems: Some(10), sortable: None };
        assert!(matches!(
            cambrian_interval_with(&sys.identity(), &top, &gamma_c3(), &limited),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
