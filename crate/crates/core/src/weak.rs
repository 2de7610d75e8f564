//! The right weak order: `u ≤ v` iff `ℓ(v) = ℓ(u) + ℓ(u⁻¹v)`.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::coxeter::{CoxeterError, CoxeterSystem, Element};
use crate::error::Error;

pub fn weak_le(u: &Element, v: &Element) -> Result<bool, CoxeterError> {
    if u.system() != v.system() {
        return Err(CoxeterError::SystemMismatch);
    }
    if u.len() > v.len() {
        return Ok(false);
    }
    let quotient: Vec<usize> = u.word().iter().rev().chain(v.word()).copied().collect();
    let q = u.system().canonicalize(&quotient)?;
    Ok(v.len() == u.len() + q.len())
}

/// `{ w·s : ℓ(ws) = ℓ(w) + 1 }`, sorted.
pub fn upper_covers(w: &Element) -> Result<Vec<Element>, CoxeterError> {
    let mut out = Vec::new();
    for s in 0..w.system().rank() {
        if !w.is_right_descent(s)? {
            out.push(w.times_generator(s)?);
        }
    }
    out.sort();
    Ok(out)
}

/// `{ w·s : ℓ(ws) = ℓ(w) - 1 }`, sorted.
pub fn lower_covers(w: &Element) -> Result<Vec<Element>, CoxeterError> {
    let mut out = Vec::new();
    for s in 0..w.system().rank() {
        if w.is_right_descent(s)? {
            out.push(w.times_generator(s)?);
        }
    }
    out.sort();
    Ok(out)
}

/// The principal order ideal `{u : u ≤ w}`, by length then word.
pub fn order_ideal(w: &Element) -> Result<Vec<Element>, CoxeterError> {
    Ok(OrderIdeal::new(w, None).map_err(|e| match e {
        Error::Coxeter(c) => c,
        other => unreachable!("unlimited ideal cannot fail with {other}"),
    })?
    .elements)
}

/// A principal order ideal with its comparability relation.
#[derive(Debug, Clone)]
pub struct OrderIdeal {
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    /// `below[i]` holds `j` iff `elements[j] ≤ elements[i]`.
    below: Vec<FixedBitSet>,
}

impl OrderIdeal {
    /// Enumerates `[ε, top]` by downward closure; `limit` caps its size.
    pub fn new(top: &Element, limit: Option<usize>) -> Result<Self, Error> {
        let mut seen: HashSet<Element> = HashSet::new();
        let mut lower: HashMap<Element, Vec<Element>> = HashMap::new();
        let mut frontier = vec![top.clone()];
        seen.insert(top.clone());
        while let Some(x) = frontier.pop() {
            let covers = lower_covers(&x)?;
            for c in &covers {
                if seen.insert(c.clone()) {
                    if let Some(limit) = limit {
                        if seen.len() > limit {
                            return Err(Error::ResourceLimit { what: "order ideal", limit });
                        }
                    }
                    frontier.push(c.clone());
                }
            }
            lower.insert(x, covers);
        }
        let mut elements: Vec<Element> = seen.into_iter().collect();
        elements.sort();
        let index: HashMap<Element, usize> =
            elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elements.len();
        let mut below: Vec<FixedBitSet> = Vec::with_capacity(n);
        for (i, x) in elements.iter().enumerate() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(i);
            for c in &lower[x] {
                set.union_with(&below[index[c]]);
            }
            below.push(set);
        }
        Ok(OrderIdeal { elements, index, below })
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> &Element {
        self.elements.last().expect("ideals are nonempty")
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.index.contains_key(w)
    }

    /// `elements[i] ≤ elements[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    pub fn below(&self, j: usize) -> &FixedBitSet {
        &self.below[j]
    }
}

/// The greatest common lower bound.
///
/// The ideal of the shorter argument is filtered by membership below the
/// other and its unique maximal element returned.
pub fn weak_meet(u: &Element, v: &Element) -> Result<Element, CoxeterError> {
    if u.system() != v.system() {
        return Err(CoxeterError::SystemMismatch);
    }
    let (short, long) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    let ideal = OrderIdeal::new(short, None).map_err(|e| match e {
        Error::Coxeter(c) => c,
        other => CoxeterError::Inconsistent(other.to_string()),
    })?;
    let mut common = Vec::new();
    for (i, x) in ideal.elements().iter().enumerate() {
        if weak_le(x, long)? {
            common.push(i);
        }
    }
    let best = *common.last().expect("identity is a common lower bound");
    if let Some(&bad) = common.iter().find(|&&i| !ideal.le(i, best)) {
        return Err(CoxeterError::Inconsistent(format!(
            "{} and {} are both maximal common lower bounds of {} and {}",
            ideal.elements()[best],
            ideal.elements()[bad],
            u,
            v
        )));
    }
    Ok(ideal.elements()[best].clone())
}

/// The least common upper bound, if one of length at most `cap` exists.
///
/// Searches upward from the longer argument one length at a time; the first
/// level containing an upper bound holds exactly the join. `None` means no
/// upper bound within the cap, which says nothing about longer ones.
pub fn weak_join(u: &Element, v: &Element, cap: usize) -> Result<Option<Element>, CoxeterError> {
    if u.system() != v.system() {
        return Err(CoxeterError::SystemMismatch);
    }
    let (short, long) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    if long.len() > cap {
        return Ok(None);
    }
    let mut level: Vec<Element> = vec![long.clone()];
    for _ in long.len()..=cap {
        let mut hits = Vec::new();
        for x in &level {
            if weak_le(short, x)? {
                hits.push(x.clone());
            }
        }
        match hits.len() {
            0 => {}
            1 => return Ok(hits.pop()),
            _ => {
                return Err(CoxeterError::Inconsistent(format!(
                    "{} and {} have several minimal upper bounds",
                    u, v
                )))
            }
        }
        let mut next: HashSet<Element> = HashSet::new();
        for x in &level {
            next.extend(upper_covers(x)?);
        }
        level = next.into_iter().collect();
        level.sort();
    }
    Ok(None)
}

/// Meet of a nonempty finite set.
pub fn meet_all(items: &[Element]) -> Result<Element, CoxeterError> {
    let (first, rest) = items.split_first().expect("meet of an empty set");
    rest.iter().try_fold(first.clone(), |acc, x| weak_meet(&acc, x))
}

/// Join of a nonempty finite set, bounded by `cap`.
pub fn join_all(items: &[Element], cap: usize) -> Result<Option<Element>, CoxeterError> {
    let (first, rest) = items.split_first().expect("join of an empty set");
    let mut acc = first.clone();
    for x in rest {
        match weak_join(&acc, x, cap)? {
            Some(j) => acc = j,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// All elements of length at most `max_len`, by length then word.
pub fn elements_up_to(sys: &CoxeterSystem, max_len: usize) -> Result<Vec<Element>, CoxeterError> {
    let mut all = vec![sys.identity()];
    let mut level = vec![sys.identity()];
    for _ in 0..max_len {
        let mut next = HashSet::new();
        for x in &level {
            next.extend(upper_covers(x)?);
        }
        level = next.into_iter().collect();
        level.sort();
        if level.is_empty() {
            break;
        }
        all.extend(level.iter().cloned());
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Bond;
    use crate::systems;

    #[test]
    fn identity_is_bottom() {
        let sys = systems::affine_c3();
        let w = sys.parse_element("s0 s2 s3 s2").unwrap();
        assert!(weak_le(&sys.identity(), &w).unwrap());
        assert!(weak_le(&sys.generator(2).unwrap(), &w).unwrap());
        assert!(!weak_le(&sys.generator(1).unwrap(), &w).unwrap());
    }

    #[test]
    fn covers() {
        let sys = systems::affine_c3();
        assert_eq!(upper_covers(&sys.identity()).unwrap(), sys.generators());
        let a2 = systems::a2();
        let s1 = a2.generator(0).unwrap();
        let covers: Vec<String> = upper_covers(&s1).unwrap().iter().map(|e| e.label()).collect();
        assert_eq!(covers, ["s1 s2"]);
    }

    #[test]
    fn infinite_dihedral_is_two_chains() {
        let sys = systems::dihedral(Bond::Infinite);
        for start in 0..2 {
            let mut word = vec![];
            for k in 0..12 {
                word.push((start + k) % 2);
                let w = sys.canonicalize(&word).unwrap();
                assert_eq!(w.len(), k + 1);
                let up = upper_covers(&w).unwrap();
                assert_eq!(up.len(), 1);
                assert_eq!(up[0].len(), k + 2);
            }
        }
    }

    #[test]
    fn ideals() {
        let sys = systems::a2();
        assert_eq!(order_ideal(&sys.identity()).unwrap(), vec![sys.identity()]);
        let top = sys.parse_element("s1 s2 s1").unwrap();
        assert_eq!(order_ideal(&top).unwrap().len(), 6);
    }

    #[test]
    fn meets() {
        let sys = systems::a2();
        let u = sys.parse_element("s1 s2").unwrap();
        let v = sys.parse_element("s2 s1").unwrap();
        assert!(weak_meet(&u, &v).unwrap().is_identity());
        assert!(weak_meet(&u, &sys.identity()).unwrap().is_identity());
        let c3 = systems::affine_c3();
        let m = weak_meet(&c3.parse_element("s0 s1").unwrap(), &c3.parse_element("s0 s2").unwrap()).unwrap();
        assert_eq!(m.label(), "s0");
    }

    #[test]
    fn joins() {
        let sys = systems::a2();
        let j = weak_join(&sys.generator(0).unwrap(), &sys.generator(1).unwrap(), 3).unwrap();
        assert_eq!(j.unwrap().label(), "s1 s2 s1");
        let j = weak_join(&sys.generator(0).unwrap(), &sys.generator(1).unwrap(), 2).unwrap();
        assert!(j.is_none());
        let c3 = systems::affine_c3();
        let w = c3.parse_element("s0 s2 s3 s2").unwrap();
        assert_eq!(weak_join(&w, &c3.identity(), 4).unwrap(), Some(w));
        let j = weak_join(&c3.generator(0).unwrap(), &c3.generator(2).unwrap(), 2).unwrap();
        assert_eq!(j.unwrap().label(), "s0 s2");
    }

    #[test]
    fn infinite_dihedral_has_no_joins() {
        let sys = systems::dihedral(Bond::Infinite);
        let j = weak_join(&sys.generator(0).unwrap(), &sys.generator(1).unwrap(), 30).unwrap();
        assert!(j.is_none());
    }

    #[test]
    fn ball_sizes() {
        assert_eq!(elements_up_to(&systems::a2(), 10).unwrap().len(), 6);
        assert_eq!(elements_up_to(&systems::a3(), 10).unwrap().len(), 24);
        assert_eq!(elements_up_to(&systems::dihedral(Bond::Finite(4)), 10).unwrap().len(), 8);
    }
}
