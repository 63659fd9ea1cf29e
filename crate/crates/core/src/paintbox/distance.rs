//! Hausdorff distance between the complements of interval systems.

use num_rational::BigRational;
use num_traits::Zero;

use super::{Interval, IntervalSystem, Label};

/// `max(d_H(U↑ᶜ, V↑ᶜ), d_H(U↓ᶜ, V↓ᶜ))`, complements taken in `[0, 1]`.
pub fn paintbox_distance(u: &IntervalSystem, v: &IntervalSystem) -> BigRational {
    let up = hausdorff_of_complements(u.intervals(Label::Up), v.intervals(Label::Up));
    let down = hausdorff_of_complements(u.intervals(Label::Down), v.intervals(Label::Down));
    up.max(down)
}

/// Hausdorff distance between `[0,1] \ ∪a` and `[0,1] \ ∪b`, where `a` and
/// `b` are sorted lists of disjoint open intervals.
pub fn hausdorff_of_complements(a: &[Interval], b: &[Interval]) -> BigRational {
    directed(a, b).max(directed(b, a))
}

/// `sup_{x ∉ ∪a} dist(x, [0,1] \ ∪b)`.
///
/// The distance to the complement of `b` is a tent over each gap of `b` and
/// zero elsewhere; on a gap it peaks at the midpoint, so the sup over the
/// closed set `[0,1] \ ∪a` is reached at the point of that set nearest to the
/// midpoint.
fn directed(a: &[Interval], b: &[Interval]) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mut best = BigRational::zero();
    for gap in b {
        let tent = |x: &BigRational| {
            let v = (x - &gap.lo).min(&gap.hi - x);
            if v > BigRational::zero() {
                v
            } else {
                BigRational::zero()
            }
        };
        let mid = (&gap.lo + &gap.hi) / &two;
        // the gap of `a` containing the midpoint, if any
        let idx = a.partition_point(|i| i.hi <= mid);
        let value = match a.get(idx) {
            Some(i) if i.lo < mid => tent(&i.lo).max(tent(&i.hi)),
            _ => tent(&mid),
        };
        if value > best {
            best = value;
        }
    }
    best
}
