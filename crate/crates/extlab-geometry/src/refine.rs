//! Refinement of a cube family into per-cube subcube partitions, and the
//! decomposition of the family into selections (one subcube per cube) with
//! per-selection weak-transversality verdicts.
//!
//! Refinement works axis by axis:
//!
//! 1. every projection is cut at every projection endpoint of the family,
//!    so any two resulting cells of different cubes are equal, interior
//!    disjoint, or share a single endpoint;
//! 2. a cell that is point-touched by other cubes' cells at both of its
//!    endpoints is halved at its midpoint. Cells equal as intervals are
//!    halved together (halving one copy but not another would leave a pair
//!    of properly overlapping cells, breaking step 1's guarantee).
//!
//! Step 2 ensures that in any single selection a cell meets its point
//! neighbors on one side only, except in the documented case where two
//! cubes share a cell that is flanked on both sides; no finite splitting
//! rule removes that case, and downstream consumers check the property they
//! need per selection instead of assuming it.

use std::collections::BTreeSet;

use crate::cube::{CubeCollection, RationalCube};
use crate::interval::Interval;
use crate::rational::Rational;
use crate::transversality::{weakly_transversal_with_pivot, DirectionAssignment};

/// Per-cube, per-axis cell partitions. Cell lists are ascending; the
/// original cube j is exactly the union of its axis-cell tensor products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedCollection {
    d: usize,
    cells: Vec<Vec<Vec<Interval>>>,
}

impl RefinedCollection {
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn cube_count(&self) -> usize {
        self.cells.len()
    }

    pub fn axis_cells(&self, cube: usize, axis: usize) -> &[Interval] {
        &self.cells[cube][axis]
    }

    pub fn subcube_count(&self, cube: usize) -> usize {
        self.cells[cube].iter().map(Vec::len).product()
    }

    /// Subcubes of one original cube, lexicographic with axis 0 slowest.
    pub fn subcubes(&self, cube: usize) -> Vec<RationalCube> {
        let mut out = Vec::with_capacity(self.subcube_count(cube));
        let axes = &self.cells[cube];
        let mut index = vec![0usize; self.d];
        loop {
            let intervals: Vec<Interval> = index
                .iter()
                .zip(axes)
                .map(|(&i, cells)| cells[i].clone())
                .collect();
            out.push(RationalCube::new(intervals).expect("d >= 1"));
            let mut pos = self.d;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                index[pos] += 1;
                if index[pos] < axes[pos].len() {
                    break;
                }
                index[pos] = 0;
            }
        }
    }

    pub fn selection_count(&self) -> usize {
        (0..self.cube_count()).map(|j| self.subcube_count(j)).product()
    }
}

pub fn refine_collection(coll: &CubeCollection) -> RefinedCollection {
    let d = coll.dim();
    let k = coll.len();
    let per_axis: Vec<Vec<Vec<Interval>>> = (0..d).map(|axis| refine_axis(coll, axis)).collect();
    let cells = (0..k)
        .map(|j| per_axis.iter().map(|axis| axis[j].clone()).collect())
        .collect();
    RefinedCollection { d, cells }
}

/// Cell lists per cube along one axis.
fn refine_axis(coll: &CubeCollection, axis: usize) -> Vec<Vec<Interval>> {
    let mut endpoints: BTreeSet<Rational> = BTreeSet::new();
    for cube in coll.cubes() {
        let p = cube.projection(axis);
        endpoints.insert(p.lo().clone());
        endpoints.insert(p.hi().clone());
    }
    let cuts: Vec<Rational> = endpoints.into_iter().collect();

    let split: Vec<Vec<Interval>> = coll
        .cubes()
        .iter()
        .map(|c| c.projection(axis).split_at(&cuts))
        .collect();

    // A cell value is halved when some owner sees other-cube cells
    // point-touching it at both endpoints; equal cells share the verdict.
    let mut marked: BTreeSet<Interval> = BTreeSet::new();
    for (j, own) in split.iter().enumerate() {
        for v in own {
            if v.is_point() || marked.contains(v) {
                continue;
            }
            let mut lo_touched = false;
            let mut hi_touched = false;
            for (other, their) in split.iter().enumerate() {
                if other == j {
                    continue;
                }
                for c in their {
                    match c.touch_point(v) {
                        Some(p) if p == *v.lo() => lo_touched = true,
                        Some(p) if p == *v.hi() => hi_touched = true,
                        _ => {}
                    }
                }
            }
            if lo_touched && hi_touched {
                marked.insert(v.clone());
            }
        }
    }

    split
        .into_iter()
        .map(|own| {
            own.into_iter()
                .flat_map(|c| {
                    if marked.contains(&c) {
                        c.halves()
                    } else {
                        vec![c]
                    }
                })
                .collect()
        })
        .collect()
}

/// One subcube picked per original cube, with its weak-transversality
/// verdict and the per-pivot assignments that witness it.
#[derive(Clone, Debug)]
pub struct SelectionVerdict {
    /// Subcube index chosen for each original cube, in subcubes() order.
    pub indices: Vec<usize>,
    pub collection: CubeCollection,
    pub weakly_transversal: bool,
    /// Assignment per pivot; None entries are the pivots that fail.
    pub per_pivot: Vec<Option<DirectionAssignment>>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub refined: RefinedCollection,
    /// Actual subcube count per original cube (no a-priori bound is
    /// asserted; consumers see the real growth).
    pub subcube_counts: Vec<usize>,
    pub selections: Vec<SelectionVerdict>,
    pub all_weakly_transversal: bool,
}

/// Refines the family and enumerates every selection of one subcube per
/// original cube, verifying weak transversality per selection and pivot.
/// Intended for transversal inputs, where every selection passes; for other
/// inputs the failing selections are reported rather than rejected.
pub fn decompose_weakly_transversal(coll: &CubeCollection) -> Decomposition {
    let refined = refine_collection(coll);
    let k = refined.cube_count();
    let subcubes: Vec<Vec<RationalCube>> = (0..k).map(|j| refined.subcubes(j)).collect();
    let subcube_counts: Vec<usize> = subcubes.iter().map(Vec::len).collect();

    let mut selections = Vec::with_capacity(refined.selection_count());
    let mut choice = vec![0usize; k];
    loop {
        let picked: Vec<RationalCube> = (0..k).map(|j| subcubes[j][choice[j]].clone()).collect();
        let collection = CubeCollection::new(picked).expect("selections are nonempty");
        let per_pivot: Vec<Option<DirectionAssignment>> = (0..k)
            .map(|p| weakly_transversal_with_pivot(&collection, p).expect("pivot in range"))
            .collect();
        let weakly_transversal = per_pivot.iter().all(Option::is_some);
        selections.push(SelectionVerdict {
            indices: choice.clone(),
            collection,
            weakly_transversal,
            per_pivot,
        });
        let mut pos = k;
        loop {
            if pos == 0 {
                let all_weakly_transversal = selections.iter().all(|s| s.weakly_transversal);
                return Decomposition {
                    refined,
                    subcube_counts,
                    selections,
                    all_weakly_transversal,
                };
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < subcubes[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}
