//! Cross-checks the reflection representation against the symmetric group
//! acting on one-line notation, which shares no code with the library.

use std::collections::{BTreeSet, HashSet};

use cambrian::sortable::{is_sortable, sorting_word, CoxeterElement};
use cambrian::weak::{weak_join, weak_le, weak_meet};
use cambrian::{systems, CoxeterSystem, Element};
use itertools::Itertools;

/// One-line notation; generator `i` (0-based) swaps positions `i, i + 1` on the right.
type Perm = Vec<usize>;

fn times(p: &Perm, i: usize) -> Perm {
    let mut q = p.clone();
    q.swap(i, i + 1);
    q
}

fn inversions(p: &Perm) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                out.insert((p[b], p[a]));
            }
        }
    }
    out
}

fn right_descents(p: &Perm) -> Vec<usize> {
    (0..p.len() - 1).filter(|&i| p[i] > p[i + 1]).collect()
}

fn left_descents(p: &Perm) -> Vec<usize> {
    let pos = |v: usize| p.iter().position(|&x| x == v).unwrap();
    (0..p.len() - 1).filter(|&i| pos(i + 1) < pos(i)).collect()
}

fn reduced_words(p: &Perm) -> Vec<Vec<usize>> {
    let descents = right_descents(p);
    if descents.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in descents {
        for mut w in reduced_words(&times(p, i)) {
            w.push(i);
            out.push(w);
        }
    }
    out
}

fn perm_of(word: &[usize], n: usize) -> Perm {
    word.iter().fold((0..n).collect(), |p, &i| times(&p, i))
}

fn element_of(sys: &CoxeterSystem, p: &Perm) -> Element {
    sys.canonicalize(&reduced_words(p)[0]).unwrap()
}

/// Positions of the leftmost embedding of `word` in `gamma^∞`.
fn positions(word: &[usize], gamma: &[usize]) -> Vec<usize> {
    let n = gamma.len();
    let mut out = Vec::new();
    let mut next = 0;
    for &s in word {
        let offset = gamma.iter().position(|&t| t == s).unwrap();
        let mut at = (next / n) * n + offset;
        if at < next {
            at += n;
        }
        out.push(at);
        next = at + 1;
    }
    out
}

/// Sorting word and block-decreasing verdict, by brute force over reduced words.
fn oracle_sorting(p: &Perm, gamma: &[usize]) -> (Vec<usize>, bool) {
    let best = reduced_words(p).into_iter().min_by_key(|w| positions(w, gamma)).unwrap();
    let pos = positions(&best, gamma);
    let n = gamma.len();
    let blocks_needed = pos.last().map_or(0, |&x| x / n + 1);
    let mut blocks = vec![HashSet::new(); blocks_needed];
    for (&s, &at) in best.iter().zip(&pos) {
        blocks[at / n].insert(s);
    }
    let decreasing = blocks.windows(2).all(|b| b[1].is_subset(&b[0]));
    (best, decreasing)
}

fn symmetric_group(n: usize) -> Vec<Perm> {
    (0..n).permutations(n).collect()
}

#[test]
fn lengths_descents_and_equality_match() {
    for (sys, n) in [(systems::a2(), 3), (systems::a3(), 4)] {
        let perms = symmetric_group(n);
        let elements: Vec<Element> = perms.iter().map(|p| element_of(&sys, p)).collect();
        assert_eq!(elements.iter().collect::<HashSet<_>>().len(), perms.len());
        for (p, e) in perms.iter().zip(&elements) {
            assert_eq!(e.len(), inversions(p).len());
            assert_eq!(e.left_descents().unwrap(), left_descents(p));
            assert_eq!(e.right_descents().unwrap(), right_descents(p));
            assert_eq!(perm_of(e.word(), n), *p, "canonical word evaluates back");
        }
    }
}

#[test]
fn products_match() {
    let sys = systems::a3();
    let perms = symmetric_group(4);
    for p in &perms {
        for q in &perms {
            let product = perm_of(&[reduced_words(p)[0].clone(), reduced_words(q)[0].clone()].concat(), 4);
            let e = element_of(&sys, p).multiply(&element_of(&sys, q)).unwrap();
            assert_eq!(e, element_of(&sys, &product));
        }
    }
}

#[test]
fn weak_order_is_inversion_containment() {
    let sys = systems::a3();
    let perms = symmetric_group(4);
    let elements: Vec<Element> = perms.iter().map(|p| element_of(&sys, p)).collect();
    for (p, x) in perms.iter().zip(&elements) {
        for (q, y) in perms.iter().zip(&elements) {
            assert_eq!(weak_le(x, y).unwrap(), inversions(p).is_subset(&inversions(q)));
        }
    }
}

#[test]
fn meets_and_joins_match_inversion_sets() {
    // Weak order on S_n is a lattice; the join's inversion set is the
    // transitive closure of the union.
    let sys = systems::a3();
    let perms = symmetric_group(4);
    let by_inv: Vec<(BTreeSet<(usize, usize)>, Perm)> = perms.iter().map(|p| (inversions(p), p.clone())).collect();
    for p in &perms {
        for q in &perms {
            let (ip, iq) = (inversions(p), inversions(q));
            let upper = by_inv.iter().filter(|(i, _)| ip.is_subset(i) && iq.is_subset(i)).min_by_key(|(i, _)| i.len());
            let lower = by_inv.iter().filter(|(i, _)| i.is_subset(&ip) && i.is_subset(&iq)).max_by_key(|(i, _)| i.len());
            let (x, y) = (element_of(&sys, p), element_of(&sys, q));
            assert_eq!(weak_join(&x, &y, 6).unwrap().unwrap(), element_of(&sys, &upper.unwrap().1));
            assert_eq!(weak_meet(&x, &y).unwrap(), element_of(&sys, &lower.unwrap().1));
        }
    }
}

#[test]
fn sorting_words_match_brute_force() {
    for (sys, n) in [(systems::a2(), 3), (systems::a3(), 4)] {
        for order in (0..n - 1).permutations(n - 1) {
            let gamma = CoxeterElement::new(n - 1, order.clone()).unwrap();
            let mut sortable = 0;
            for p in symmetric_group(n) {
                let (word, decreasing) = oracle_sorting(&p, &order);
                let e = element_of(&sys, &p);
                assert_eq!(sorting_word(&e, &gamma).unwrap().letters(), word.as_slice());
                assert_eq!(is_sortable(&e, &gamma).unwrap(), decreasing);
                sortable += decreasing as usize;
            }
            // Catalan numbers C_3 = 5 and C_4 = 14, for every Coxeter element.
            assert_eq!(sortable, if n == 3 { 5 } else { 14 });
        }
    }
}
