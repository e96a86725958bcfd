//! Weighted-coverage welfare functions and exhaustive property certification.
//!
//! A ground set is a list of elements, each covering one or more atomic
//! cells; every cell carries a nonnegative exact weight. The welfare of an
//! element subset is the total weight of the cells it covers, so the
//! function is normalized, nondecreasing and submodular by construction.
//! The property checker nevertheless verifies all three exhaustively and
//! works against any [`SetFunction`] oracle, so deliberately corrupted
//! oracles can be caught in tests.

use std::collections::HashMap;

use crate::bits::{ElemSet, MAX_SET_BITS};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default cap on ground-set size for the exhaustive property checker
/// (2^16 subset evaluations). Larger grounds are rejected, never sampled.
pub const DEFAULT_GROUND_CAP: usize = 16;

/// Oracle view of a set function over elements `0..ground_size()`.
pub trait SetFunction<R> {
    fn ground_size(&self) -> usize;
    fn value(&self, set: ElemSet) -> R;
}

#[derive(Clone, Debug)]
pub struct GroundSet<R> {
    cell_names: Vec<String>,
    cell_weights: Vec<R>,
    element_names: Vec<String>,
    element_covers: Vec<u128>,
    element_lookup: HashMap<String, usize>,
}

impl<R: Scalar> GroundSet<R> {
    /// Build from `(cell, weight)` pairs and `(element, covered cells)` pairs.
    /// Order is preserved and determines element indices.
    pub fn new(cells: Vec<(String, R)>, elements: Vec<(String, Vec<String>)>) -> Result<Self> {
        if cells.len() > MAX_SET_BITS {
            return Err(Error::SizeLimit {
                what: "ground-set cells",
                needed: cells.len() as u128,
                cap: MAX_SET_BITS as u128,
            });
        }
        if elements.len() > MAX_SET_BITS {
            return Err(Error::SizeLimit {
                what: "ground-set elements",
                needed: elements.len() as u128,
                cap: MAX_SET_BITS as u128,
            });
        }
        let mut cell_lookup = HashMap::new();
        let mut cell_names = Vec::new();
        let mut cell_weights = Vec::new();
        for (name, w) in cells {
            if cell_lookup.insert(name.clone(), cell_names.len()).is_some() {
                return Err(Error::DuplicateName(name));
            }
            if w < R::zero() {
                return Err(Error::NegativeWeight {
                    cell: name,
                    weight: w.to_string(),
                });
            }
            cell_names.push(name);
            cell_weights.push(w);
        }
        let mut element_lookup = HashMap::new();
        let mut element_names = Vec::new();
        let mut element_covers = Vec::new();
        for (name, covered) in elements {
            if element_lookup
                .insert(name.clone(), element_names.len())
                .is_some()
            {
                return Err(Error::DuplicateName(name));
            }
            if covered.is_empty() {
                return Err(Error::EmptyElement(name));
            }
            let mut mask = 0u128;
            for c in &covered {
                let idx = *cell_lookup
                    .get(c)
                    .ok_or_else(|| Error::UnknownCell(c.clone()))?;
                mask |= 1u128 << idx;
            }
            element_names.push(name);
            element_covers.push(mask);
        }
        Ok(GroundSet {
            cell_names,
            cell_weights,
            element_names,
            element_covers,
            element_lookup,
        })
    }

    pub fn element_count(&self) -> usize {
        self.element_names.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cell_names.len()
    }

    pub fn element_name(&self, idx: usize) -> &str {
        &self.element_names[idx]
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn cell_names(&self) -> &[String] {
        &self.cell_names
    }

    pub fn cell_weight(&self, idx: usize) -> &R {
        &self.cell_weights[idx]
    }

    pub fn cells_of_element(&self, idx: usize) -> Vec<usize> {
        let mut mask = self.element_covers[idx];
        let mut out = Vec::new();
        while mask != 0 {
            out.push(mask.trailing_zeros() as usize);
            mask &= mask - 1;
        }
        out
    }

    pub fn index_of(&self, element: &str) -> Result<usize> {
        self.element_lookup
            .get(element)
            .copied()
            .ok_or_else(|| Error::UnknownElement(element.to_string()))
    }

    /// Resolve a list of element names into a set.
    pub fn element_set<S: AsRef<str>>(&self, names: &[S]) -> Result<ElemSet> {
        let mut s = ElemSet::EMPTY;
        for n in names {
            s = s.with(self.index_of(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn names_of_set(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|i| self.element_names[i].clone()).collect()
    }

    fn cover_mask(&self, set: ElemSet) -> u128 {
        set.iter().fold(0u128, |m, i| m | self.element_covers[i])
    }

    fn weight_of_cover(&self, mut cover: u128) -> R {
        let mut total = R::zero();
        while cover != 0 {
            let idx = cover.trailing_zeros() as usize;
            cover &= cover - 1;
            total = total + self.cell_weights[idx].clone();
        }
        total
    }
}

/// Coverage welfare: `f(A)` is the weight of all cells covered by `A`.
#[derive(Clone, Debug)]
pub struct CoverageWelfare<R> {
    ground: GroundSet<R>,
}

impl<R: Scalar> CoverageWelfare<R> {
    pub fn new(ground: GroundSet<R>) -> Self {
        CoverageWelfare { ground }
    }

    pub fn ground(&self) -> &GroundSet<R> {
        &self.ground
    }

    pub fn evaluate(&self, set: ElemSet) -> R {
        self.ground.weight_of_cover(self.ground.cover_mask(set))
    }

    pub fn evaluate_named<S: AsRef<str>>(&self, names: &[S]) -> Result<R> {
        Ok(self.evaluate(self.ground.element_set(names)?))
    }

    /// Marginal gain of adding `a` on top of `b`: `f(a ∪ b) − f(b)`.
    pub fn marginal_gain(&self, a: ElemSet, b: ElemSet) -> R {
        self.evaluate(a.union(b)) - self.evaluate(b)
    }
}

impl<R: Scalar> SetFunction<R> for CoverageWelfare<R> {
    fn ground_size(&self) -> usize {
        self.ground.element_count()
    }

    fn value(&self, set: ElemSet) -> R {
        self.evaluate(set)
    }
}

#[derive(Clone, Debug)]
pub struct MonotoneViolation<R> {
    pub smaller: ElemSet,
    pub larger: ElemSet,
    pub f_smaller: R,
    pub f_larger: R,
}

#[derive(Clone, Debug)]
pub struct SubmodularViolation<R> {
    /// The nested pair `small ⊆ large` and the element whose marginal gain
    /// grows when added to the larger set.
    pub small: ElemSet,
    pub large: ElemSet,
    pub element: usize,
    pub small_gain: R,
    pub large_gain: R,
}

/// Outcome of the exhaustive Definition-style property check. `None` means
/// the property holds on every subset.
#[derive(Clone, Debug)]
pub struct PropertyCheck<R> {
    pub normalized: Option<R>,
    pub monotone: Option<MonotoneViolation<R>>,
    pub submodular: Option<SubmodularViolation<R>>,
}

impl<R> PropertyCheck<R> {
    pub fn all_pass(&self) -> bool {
        self.normalized.is_none() && self.monotone.is_none() && self.submodular.is_none()
    }
}

/// Exhaustively certify normalization, monotonicity and submodularity of an
/// oracle by tabulating all `2^n` values. Single-element increments suffice:
/// monotonicity follows by chaining, and the nested-pair form of
/// submodularity follows by induction on `|B \ A|`.
pub fn check_properties<R: Scalar, F: SetFunction<R> + ?Sized>(
    f: &F,
    cap: usize,
) -> Result<PropertyCheck<R>> {
    let n = f.ground_size();
    if n > cap {
        return Err(Error::SizeLimit {
            what: "exhaustive welfare property check",
            needed: n as u128,
            cap: cap as u128,
        });
    }
    let size = 1usize << n;
    let mut vals = Vec::with_capacity(size);
    for mask in 0..size {
        vals.push(f.value(mask_to_set(mask)));
    }

    let normalized = if vals[0].is_zero() {
        None
    } else {
        Some(vals[0].clone())
    };

    let mut monotone = None;
    'mono: for mask in 0..size {
        for i in 0..n {
            if mask & (1 << i) != 0 {
                continue;
            }
            let bigger = mask | (1 << i);
            if vals[mask] > vals[bigger] {
                monotone = Some(MonotoneViolation {
                    smaller: mask_to_set(mask),
                    larger: mask_to_set(bigger),
                    f_smaller: vals[mask].clone(),
                    f_larger: vals[bigger].clone(),
                });
                break 'mono;
            }
        }
    }

    let mut submodular = None;
    'sub: for mask in 0..size {
        for s in 0..n {
            if mask & (1 << s) != 0 {
                continue;
            }
            for t in 0..n {
                if t == s || mask & (1 << t) != 0 {
                    continue;
                }
                let small_gain = vals[mask | (1 << s)].clone() - vals[mask].clone();
                let large_gain =
                    vals[mask | (1 << t) | (1 << s)].clone() - vals[mask | (1 << t)].clone();
                if small_gain < large_gain {
                    submodular = Some(SubmodularViolation {
                        small: mask_to_set(mask),
                        large: mask_to_set(mask | (1 << t)),
                        element: s,
                        small_gain,
                        large_gain,
                    });
                    break 'sub;
                }
            }
        }
    }

    Ok(PropertyCheck {
        normalized,
        monotone,
        submodular,
    })
}

fn mask_to_set(mask: usize) -> ElemSet {
    let mut s = ElemSet::EMPTY;
    let mut m = mask;
    while m != 0 {
        s = s.with(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::Rat64;

    fn named(items: &[(&str, &[&str])]) -> Vec<(String, Vec<String>)> {
        items
            .iter()
            .map(|(n, cs)| {
                (
                    n.to_string(),
                    cs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                )
            })
            .collect()
    }

    /// Boxes instance used throughout: s_big covers s_sm, the rest disjoint.
    /// With tau groups there are boxes s_2..s_tau of unit area.
    fn boxes(tau: usize) -> CoverageWelfare<Rat64> {
        let eps = frac::<Rat64>(1, 1000);
        let mut cells = vec![
            ("c_eps".to_string(), eps.clone()),
            ("c_sm".to_string(), int::<Rat64>(1) + eps.clone()),
            ("c_big".to_string(), int::<Rat64>(1) - eps),
        ];
        let mut elements = named(&[
            ("s_eps", &["c_eps"]),
            ("s_sm", &["c_sm"]),
            ("s_big", &["c_sm", "c_big"]),
        ]);
        for t in 2..=tau {
            cells.push((format!("c_{t}"), int::<Rat64>(1)));
            elements.push((format!("s_{t}"), vec![format!("c_{t}")]));
        }
        CoverageWelfare::new(GroundSet::new(cells, elements).unwrap())
    }

    #[test]
    fn empty_set_is_zero() {
        let f = boxes(3);
        assert_eq!(f.evaluate(ElemSet::EMPTY), int::<Rat64>(0));
    }

    #[test]
    fn big_box_covers_small() {
        let f = boxes(3);
        // total area of the two overlapping boxes is exactly 2
        assert_eq!(
            f.evaluate_named(&["s_sm", "s_big"]).unwrap(),
            int::<Rat64>(2)
        );
    }

    #[test]
    fn direct_cell_sum_oracle() {
        // Independent oracle: sum the weights of the union of cell lists.
        // s_eps covers {c_eps}, s_2 covers {c_2}: 1/1000 + 1 = 1001/1000.
        let f = boxes(3);
        assert_eq!(
            f.evaluate_named(&["s_eps", "s_2"]).unwrap(),
            frac::<Rat64>(1001, 1000)
        );
    }

    #[test]
    fn unknown_element_is_input_error() {
        let f = boxes(2);
        assert!(matches!(
            f.evaluate_named(&["s_typo"]),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn marginal_gain_cases() {
        let f = boxes(3);
        let g = f.ground();
        let a = g.element_set(&["s_sm", "s_2"]).unwrap();
        // gain over the empty set is just the value
        assert_eq!(f.marginal_gain(a, ElemSet::EMPTY), f.evaluate(a));
        // the small box adds nothing on top of the big one
        let sm = g.element_set(&["s_sm"]).unwrap();
        let big = g.element_set(&["s_big"]).unwrap();
        assert_eq!(f.marginal_gain(sm, big), int::<Rat64>(0));
        // evaluate-oracle difference: f({sm,big}) - f({sm}) = 2 - 1001/1000...
        // = 999/1000 at eps = 1/1000
        assert_eq!(f.marginal_gain(big, sm), frac::<Rat64>(999, 1000));
    }

    #[test]
    fn coverage_passes_all_properties() {
        let f = boxes(4);
        let report = check_properties(&f, DEFAULT_GROUND_CAP).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn ground_cap_refuses_rather_than_samples() {
        let cells: Vec<_> = (0..20)
            .map(|i| (format!("c{i}"), int::<Rat64>(1)))
            .collect();
        let elements: Vec<_> = (0..20).map(|i| (format!("e{i}"), vec![format!("c{i}")])).collect();
        let f = CoverageWelfare::new(GroundSet::new(cells, elements).unwrap());
        assert!(matches!(
            check_properties(&f, DEFAULT_GROUND_CAP),
            Err(Error::SizeLimit { .. })
        ));
    }

    /// Arbitrary tabulated oracle for negative tests.
    struct Table {
        n: usize,
        vals: Vec<Rat64>,
    }

    impl SetFunction<Rat64> for Table {
        fn ground_size(&self) -> usize {
            self.n
        }
        fn value(&self, set: ElemSet) -> Rat64 {
            self.vals[set.raw() as usize].clone()
        }
    }

    #[test]
    fn corrupted_oracle_fails_monotonicity_with_witness() {
        // f({a}) = 2 but f({a,b}) = 1
        let t = Table {
            n: 2,
            vals: vec![int(0), int(2), int(1), int(1)],
        };
        let report = check_properties(&t, 4).unwrap();
        let m = report.monotone.expect("monotonicity must fail");
        assert_eq!(m.smaller, ElemSet::from_indices(&[0]));
        assert_eq!(m.larger, ElemSet::from_indices(&[0, 1]));
    }

    #[test]
    fn supermodular_oracle_fails_submodularity() {
        // f(A) = |A|^2 on two elements: gain of adding b grows with context.
        let t = Table {
            n: 2,
            vals: vec![int(0), int(1), int(1), int(4)],
        };
        let report = check_properties(&t, 4).unwrap();
        assert!(report.submodular.is_some());
        assert!(report.monotone.is_none());
    }

    #[test]
    fn subadditivity_follows_exhaustively() {
        let f = boxes(3);
        let n = f.ground_size();
        for a in 0..(1usize << n) {
            for b in 0..(1usize << n) {
                let (sa, sb) = (mask_to_set(a), mask_to_set(b));
                assert!(f.evaluate(sa.union(sb)) <= f.evaluate(sa) + f.evaluate(sb));
            }
        }
    }

    #[test]
    fn negative_weight_rejected() {
        let res = GroundSet::<Rat64>::new(
            vec![("c".into(), frac(-1, 2))],
            named(&[("e", &["c"])]),
        );
        assert!(matches!(res, Err(Error::NegativeWeight { .. })));
    }
}
