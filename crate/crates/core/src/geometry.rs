//! Exact rational predicates for points and segments.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(
            Q::from_integer(BigInt::from(x)),
            Q::from_integer(BigInt::from(y)),
        )
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, t: &Q) -> Point {
        Point::new(&self.x * t, &self.y * t)
    }

    /// `self + t * (to - self)`.
    pub fn lerp(&self, to: &Point, t: &Q) -> Point {
        self.add(&to.sub(self).scale(t))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (q_to_f64(&self.x), q_to_f64(&self.y))
    }
}

pub fn q_to_f64(q: &Q) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational for a finite float (every finite `f64` is dyadic).
pub fn q_from_f64(v: f64) -> Q {
    Q::from_float(v).unwrap_or_else(Q::zero)
}

pub fn cross(a: &Point, b: &Point) -> Q {
    &a.x * &b.y - &a.y * &b.x
}

pub fn dot(a: &Point, b: &Point) -> Q {
    &a.x * &b.x + &a.y * &b.y
}

/// Sign of the turn `a -> b -> c`: `Greater` for counter-clockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    cross(&b.sub(a), &c.sub(a)).cmp(&Q::zero())
}

/// Counter-clockwise angular order of non-zero direction vectors, starting
/// from the positive x axis.
pub fn cmp_direction(u: &Point, v: &Point) -> Ordering {
    let lower = |p: &Point| p.y.is_negative() || (p.y.is_zero() && p.x.is_negative());
    match (lower(u), lower(v)) {
        (false, true) => Ordering::Less,
        (true, false) => Ordering::Greater,
        _ => Q::zero().cmp(&cross(u, v)),
    }
}

/// Parameter of `p` along `a -> b` (assumes `p` is on the line).
pub fn param(a: &Point, b: &Point, p: &Point) -> Q {
    let d = b.sub(a);
    dot(&p.sub(a), &d) / dot(&d, &d)
}

pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if orient(a, b, p) != Ordering::Equal {
        return false;
    }
    let t = param(a, b, p);
    !t.is_negative() && t <= Q::one()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentContact {
    Disjoint,
    /// Interiors cross at one point.
    Proper(Point),
    /// A single common point that is an endpoint of at least one segment.
    Touch(Point),
    /// Collinear with a common piece of positive length.
    Overlap,
}

pub fn segment_contact(a: &Point, b: &Point, c: &Point, d: &Point) -> SegmentContact {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    use Ordering::Equal;
    if o1 == Equal && o2 == Equal {
        // Collinear: compare parameter intervals along a -> b.
        let tc = param(a, b, c);
        let td = param(a, b, d);
        let (lo, hi) = if tc <= td { (tc, td) } else { (td, tc) };
        let start = if lo.is_negative() { Q::zero() } else { lo };
        let end = if hi > Q::one() { Q::one() } else { hi };
        return match start.cmp(&end) {
            Ordering::Greater => SegmentContact::Disjoint,
            Ordering::Equal => SegmentContact::Touch(a.lerp(b, &start)),
            Ordering::Less => SegmentContact::Overlap,
        };
    }
    if o1 != Equal && o2 != Equal && o3 != Equal && o4 != Equal {
        if o1 != o2 && o3 != o4 {
            let r = b.sub(a);
            let s = d.sub(c);
            let t = cross(&c.sub(a), &s) / cross(&r, &s);
            return SegmentContact::Proper(a.lerp(b, &t));
        }
        return SegmentContact::Disjoint;
    }
    for (p, q0, q1) in [(c, a, b), (d, a, b), (a, c, d), (b, c, d)] {
        if on_segment(q0, q1, p) {
            return SegmentContact::Touch(p.clone());
        }
    }
    SegmentContact::Disjoint
}

/// Floating-point bounding box padded so that it always contains the exact
/// one; used only to skip pairs that cannot meet.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds {
    lo: (f64, f64),
    hi: (f64, f64),
}

impl Bounds {
    pub fn of_segment(a: &Point, b: &Point) -> Self {
        let (ax, ay) = a.to_f64();
        let (bx, by) = b.to_f64();
        let pad = |v: f64| 1e-9 * (1.0 + v.abs());
        let lo = (ax.min(bx), ay.min(by));
        let hi = (ax.max(bx), ay.max(by));
        Bounds {
            lo: (lo.0 - pad(lo.0), lo.1 - pad(lo.1)),
            hi: (hi.0 + pad(hi.0), hi.1 + pad(hi.1)),
        }
    }

    pub fn of_point(p: &Point) -> Self {
        Self::of_segment(p, p)
    }

    pub fn meets(&self, o: &Bounds) -> bool {
        self.lo.0 <= o.hi.0 && o.lo.0 <= self.hi.0 && self.lo.1 <= o.hi.1 && o.lo.1 <= self.hi.1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn contacts() {
        let half = Q::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            segment_contact(&p(0, 0), &p(1, 1), &p(0, 1), &p(1, 0)),
            SegmentContact::Proper(Point::new(half.clone(), half))
        );
        assert_eq!(
            segment_contact(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)),
            SegmentContact::Touch(p(1, 0))
        );
        assert_eq!(
            segment_contact(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)),
            SegmentContact::Overlap
        );
        assert_eq!(
            segment_contact(&p(0, 0), &p(2, 0), &p(2, 0), &p(3, 0)),
            SegmentContact::Touch(p(2, 0))
        );
        assert_eq!(
            segment_contact(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)),
            SegmentContact::Disjoint
        );
        assert_eq!(
            segment_contact(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)),
            SegmentContact::Disjoint
        );
    }

    #[test]
    fn direction_order_is_counter_clockwise() {
        let dirs = [
            p(1, 0),
            p(1, 1),
            p(0, 1),
            p(-1, 0),
            p(-1, -1),
            p(0, -1),
            p(1, -1),
        ];
        for w in dirs.windows(2) {
            assert_eq!(cmp_direction(&w[0], &w[1]), Ordering::Less);
        }
        assert_eq!(cmp_direction(&p(2, 2), &p(1, 1)), Ordering::Equal);
    }
}
