//! Pure geometric primitives over [`Rect`]: areas, intersection, IoU,
//! containment, the overlap-shrinking transform, and exact union area.

use crate::model::Rect;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeometryError {
    /// IoU is undefined when both rects have zero area.
    #[error("iou undefined: both rects have zero area")]
    UndefinedIou,
    /// Containment ratio is undefined for a zero-area inner rect.
    #[error("containment ratio undefined: inner rect is degenerate")]
    DegenerateInner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ShrinkError {
    /// The inputs are disjoint, or one near-contains the other.
    #[error("rects are not partially overlapping")]
    NotPartiallyOverlapping,
    /// Disjointing the pair would destroy more than half of one box; the
    /// caller must fall back to priority rules.
    #[error("overlap cannot be resolved without destroying a box")]
    Unresolvable,
}

pub fn area(r: Rect) -> f64 {
    (r.x1 - r.x0) * (r.y1 - r.y0)
}

/// Overlap rectangle of `a` and `b`, or `None` when their interiors are
/// disjoint. Edge-touching rects count as disjoint.
pub fn intersect(a: Rect, b: Rect) -> Option<Rect> {
    let x0 = a.x0.max(b.x0);
    let y0 = a.y0.max(b.y0);
    let x1 = a.x1.min(b.x1);
    let y1 = a.y1.min(b.y1);
    if x1 > x0 && y1 > y0 {
        Some(Rect { x0, y0, x1, y1 })
    } else {
        None
    }
}

/// Intersection over union. At least one input must have positive area.
pub fn iou(a: Rect, b: Rect) -> Result<f64, GeometryError> {
    let aa = area(a);
    let ab = area(b);
    if aa == 0.0 && ab == 0.0 {
        return Err(GeometryError::UndefinedIou);
    }
    let inter = intersect(a, b).map_or(0.0, area);
    Ok(inter / (aa + ab - inter))
}

/// Fraction of `inner`'s area covered by `outer`.
pub fn containment_ratio(inner: Rect, outer: Rect) -> Result<f64, GeometryError> {
    let ai = area(inner);
    if ai == 0.0 {
        return Err(GeometryError::DegenerateInner);
    }
    Ok(intersect(inner, outer).map_or(0.0, area) / ai)
}

/// Shrinks two partially overlapping rects away from each other so their
/// interiors become disjoint.
///
/// The cut runs along the axis where the intrusion depth is smaller and splits
/// the overlap band at its midpoint, so each box keeps its own side. Returns
/// `NotPartiallyOverlapping` when the rects are disjoint or one is contained
/// in the other at `containment_limit` or above, and `Unresolvable` when a box
/// would lose more than half its area.
pub fn shrink_to_avoid(
    a: Rect,
    b: Rect,
    containment_limit: f64,
) -> Result<(Rect, Rect), ShrinkError> {
    let overlap = intersect(a, b).ok_or(ShrinkError::NotPartiallyOverlapping)?;
    let contained = |inner: Rect, outer: Rect| {
        containment_ratio(inner, outer).map_or(true, |r| r >= containment_limit)
    };
    if contained(a, b) || contained(b, a) {
        return Err(ShrinkError::NotPartiallyOverlapping);
    }

    let (a2, b2) = if overlap.height() <= overlap.width() {
        // Horizontal cut: the box whose center sits higher keeps the top.
        let mid = (overlap.y0 + overlap.y1) / 2.0;
        if upper_first(a, b) {
            (
                Rect { y1: a.y1.min(mid), ..a },
                Rect { y0: b.y0.max(mid), ..b },
            )
        } else {
            (
                Rect { y0: a.y0.max(mid), ..a },
                Rect { y1: b.y1.min(mid), ..b },
            )
        }
    } else {
        // Vertical cut: the box whose center sits further left keeps the left.
        let mid = (overlap.x0 + overlap.x1) / 2.0;
        if lefter_first(a, b) {
            (
                Rect { x1: a.x1.min(mid), ..a },
                Rect { x0: b.x0.max(mid), ..b },
            )
        } else {
            (
                Rect { x0: a.x0.max(mid), ..a },
                Rect { x1: b.x1.min(mid), ..b },
            )
        }
    };

    let survives = |orig: Rect, cut: Rect| area(cut) >= 0.5 * area(orig) - 1e-9;
    if !survives(a, a2) || !survives(b, b2) {
        return Err(ShrinkError::Unresolvable);
    }
    Ok((a2, b2))
}

fn upper_first(a: Rect, b: Rect) -> bool {
    let (ca, cb) = ((a.y0 + a.y1) / 2.0, (b.y0 + b.y1) / 2.0);
    if ca != cb {
        return ca < cb;
    }
    if a.y0 != b.y0 {
        return a.y0 < b.y0;
    }
    a.x0 <= b.x0
}

fn lefter_first(a: Rect, b: Rect) -> bool {
    let (ca, cb) = ((a.x0 + a.x1) / 2.0, (b.x0 + b.x1) / 2.0);
    if ca != cb {
        return ca < cb;
    }
    if a.x0 != b.x0 {
        return a.x0 < b.x0;
    }
    a.y0 <= b.y0
}

/// Exact area of the union of the given rects, by coordinate compression.
pub fn union_area(rects: &[Rect]) -> f64 {
    let live: Vec<Rect> = rects.iter().copied().filter(|r| area(*r) > 0.0).collect();
    if live.is_empty() {
        return 0.0;
    }
    let mut xs: Vec<f64> = live.iter().flat_map(|r| [r.x0, r.x1]).collect();
    let mut ys: Vec<f64> = live.iter().flat_map(|r| [r.y0, r.y1]).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.dedup();

    let mut total = 0.0;
    for xw in xs.windows(2) {
        let cx = (xw[0] + xw[1]) / 2.0;
        for yw in ys.windows(2) {
            let cy = (yw[0] + yw[1]) / 2.0;
            if live.iter().any(|r| r.contains_point(cx, cy)) {
                total += (xw[1] - xw[0]) * (yw[1] - yw[0]);
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    const LIMIT: f64 = 0.8;

    #[test]
    fn area_examples() {
        assert_eq!(area(Rect::new(0.0, 0.0, 10.0, 10.0)), 100.0);
        assert_eq!(area(Rect::new(5.0, 5.0, 5.0, 9.0)), 0.0);
        // 5 x 8 by hand.
        assert_eq!(area(Rect::new(2.0, 3.0, 7.0, 11.0)), 40.0);
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            intersect(Rect::new(0.0, 0.0, 10.0, 10.0), Rect::new(5.0, 5.0, 20.0, 20.0)),
            Some(Rect::new(5.0, 5.0, 10.0, 10.0))
        );
        // Edge touch counts as disjoint.
        assert_eq!(
            intersect(Rect::new(0.0, 0.0, 10.0, 10.0), Rect::new(10.0, 0.0, 20.0, 10.0)),
            None
        );
        let a = Rect::new(1.0, 2.0, 9.0, 8.0);
        assert_eq!(intersect(a, a), Some(a));
    }

    #[test]
    fn iou_examples() {
        let a = Rect::new(0.0, 0.0, 10.0, 10.0);
        assert_eq!(iou(a, a).unwrap(), 1.0);
        assert_eq!(iou(a, Rect::new(20.0, 20.0, 30.0, 30.0)).unwrap(), 0.0);
        // 50 / 150 by rectangle arithmetic.
        let v = iou(a, Rect::new(5.0, 0.0, 15.0, 10.0)).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
        let degenerate = Rect::new(1.0, 1.0, 1.0, 5.0);
        assert_eq!(iou(degenerate, degenerate), Err(GeometryError::UndefinedIou));
        // One degenerate side is still defined.
        assert_eq!(iou(a, degenerate).unwrap(), 0.0);
    }

    #[test]
    fn containment_examples() {
        let outer = Rect::new(0.0, 0.0, 100.0, 100.0);
        let inner = Rect::new(10.0, 10.0, 20.0, 20.0);
        assert_eq!(containment_ratio(inner, outer).unwrap(), 1.0);
        assert_eq!(
            containment_ratio(inner, Rect::new(50.0, 50.0, 60.0, 60.0)).unwrap(),
            0.0
        );
        // 80 / 100 by hand.
        let v = containment_ratio(Rect::new(0.0, 0.0, 10.0, 10.0), Rect::new(0.0, 0.0, 10.0, 8.0))
            .unwrap();
        assert!((v - 0.8).abs() < 1e-12);
        assert_eq!(
            containment_ratio(Rect::new(1.0, 1.0, 1.0, 1.0), outer),
            Err(GeometryError::DegenerateInner)
        );
    }

    #[test]
    fn shrink_splits_overlap_band_at_midpoint() {
        // Vertical intrusion 5 < horizontal 100: horizontal cut at 47.5.
        let a = Rect::new(0.0, 0.0, 100.0, 50.0);
        let b = Rect::new(0.0, 45.0, 100.0, 95.0);
        let (a2, b2) = shrink_to_avoid(a, b, LIMIT).unwrap();
        assert_eq!(a2, Rect::new(0.0, 0.0, 100.0, 47.5));
        assert_eq!(b2, Rect::new(0.0, 47.5, 100.0, 95.0));
        // Argument order is preserved when inputs are swapped.
        let (b3, a3) = shrink_to_avoid(b, a, LIMIT).unwrap();
        assert_eq!((a3, b3), (a2, b2));
    }

    #[test]
    fn shrink_rejects_disjoint_inputs() {
        let a = Rect::new(0.0, 0.0, 10.0, 10.0);
        let b = Rect::new(20.0, 0.0, 30.0, 10.0);
        assert_eq!(shrink_to_avoid(a, b, LIMIT), Err(ShrinkError::NotPartiallyOverlapping));
    }

    #[test]
    fn shrink_rejects_near_total_overlap() {
        // b is fully covered by a (containment ratio 1.0 >= 0.8), so the
        // partial-overlap precondition fails; callers fall back to priority
        // rules for pairs like this.
        let a = Rect::new(0.0, 0.0, 10.0, 10.0);
        let b = Rect::new(1.0, 1.0, 9.0, 9.0);
        assert_eq!(shrink_to_avoid(a, b, LIMIT), Err(ShrinkError::NotPartiallyOverlapping));
    }

    #[test]
    fn shrink_cuts_vertically_when_horizontal_intrusion_smaller() {
        let a = Rect::new(0.0, 0.0, 50.0, 100.0);
        let b = Rect::new(45.0, 0.0, 95.0, 100.0);
        let (a2, b2) = shrink_to_avoid(a, b, LIMIT).unwrap();
        assert_eq!(a2, Rect::new(0.0, 0.0, 47.5, 100.0));
        assert_eq!(b2, Rect::new(47.5, 0.0, 95.0, 100.0));
    }

    #[test]
    fn union_area_handles_overlap_and_nesting() {
        let a = Rect::new(0.0, 0.0, 10.0, 10.0);
        assert_eq!(union_area(&[a]), 100.0);
        assert_eq!(union_area(&[a, a]), 100.0);
        assert_eq!(union_area(&[a, Rect::new(5.0, 0.0, 15.0, 10.0)]), 150.0);
        assert_eq!(union_area(&[a, Rect::new(2.0, 2.0, 8.0, 8.0)]), 100.0);
        assert_eq!(union_area(&[]), 0.0);
    }
}
