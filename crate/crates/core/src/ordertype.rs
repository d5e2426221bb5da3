//! Order types: canonical keys and the binary database record format.

use alloc::format;
use alloc::vec::Vec;

use crate::geom::{hull_indices, Orientation, Point, PointSet, Predicates};
use crate::{with_kernel, Error, Result};

/// Number of order types of n points in general position, n = 0..=10
/// (mirror images identified).
pub const KNOWN_ORDER_TYPE_COUNTS: [u64; 11] = [1, 1, 1, 1, 2, 3, 16, 135, 3315, 158_817, 14_309_547];

/// A relabelling- and reflection-invariant encoding of the orientation of
/// every triple. Two sets share a key iff they have the same order type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderTypeKey(Vec<u64>);

/// Key of the sub-configuration `sub` (at least 3 points, no collinear
/// triple among them).
///
/// Every hull vertex is tried as the first label, with the rest sorted by
/// angle around it, in both orientations; the key is the smallest
/// resulting triple-sign vector.
pub fn order_type_key_of<K: Predicates + ?Sized>(k: &K, sub: &[usize]) -> OrderTypeKey {
    let n = sub.len();
    let hull = hull_indices(k, sub);
    let mut best: Option<Vec<u64>> = None;
    let mut labels = Vec::with_capacity(n);
    for &p in &hull {
        for mirror in [false, true] {
            let first = if mirror { Orientation::Cw } else { Orientation::Ccw };
            labels.clear();
            labels.push(p);
            labels.extend(sub.iter().copied().filter(|&q| q != p));
            labels[1..].sort_by(|&a, &b| {
                if a == b {
                    core::cmp::Ordering::Equal
                } else if k.orient(p, a, b) == first {
                    core::cmp::Ordering::Less
                } else {
                    core::cmp::Ordering::Greater
                }
            });
            let mut bits = Vec::with_capacity((n * n * n / 6) / 64 + 1);
            let (mut word, mut used) = (0u64, 0);
            for i in 0..n {
                for j in i + 1..n {
                    for l in j + 1..n {
                        word = (word << 1) | (k.orient(labels[i], labels[j], labels[l]) == first) as u64;
                        used += 1;
                        if used == 64 {
                            bits.push(word);
                            (word, used) = (0, 0);
                        }
                    }
                }
            }
            if used > 0 {
                bits.push(word);
            }
            if best.as_ref().is_none_or(|b| bits < *b) {
                best = Some(bits);
            }
        }
    }
    OrderTypeKey(best.unwrap_or_default())
}

pub fn order_type_key(s: &PointSet) -> Result<OrderTypeKey> {
    s.require_general_position()?;
    let all: Vec<usize> = (0..s.len()).collect();
    Ok(with_kernel!(s.coords(), k => order_type_key_of(k, &all)))
}

/// Bytes per coordinate in database records: 1 for n ≤ 8, else 2
/// (little-endian).
pub fn coordinate_width(n: usize) -> usize {
    if n <= 8 {
        1
    } else {
        2
    }
}

pub fn record_size(n: usize) -> usize {
    2 * n * coordinate_width(n)
}

/// Decodes one record of `n` points. `index` only labels errors.
pub fn decode_record(bytes: &[u8], n: usize, index: u64) -> Result<PointSet> {
    if bytes.len() != record_size(n) {
        return Err(Error::Format {
            offset: index * record_size(n) as u64,
            msg: format!("record {index}: expected {} bytes, got {}", record_size(n), bytes.len()),
        });
    }
    let w = coordinate_width(n);
    let coord = |i: usize| -> i64 {
        if w == 1 {
            bytes[i] as i64
        } else {
            u16::from_le_bytes([bytes[2 * i], bytes[2 * i + 1]]) as i64
        }
    };
    let pts: Vec<Point> = (0..n).map(|i| Point::new(coord(2 * i), coord(2 * i + 1))).collect();
    PointSet::new(pts).map_err(|e| Error::Format {
        offset: index * record_size(n) as u64,
        msg: format!("record {index}: {e}"),
    })
}

/// Encodes a set as one record; coordinates must fit the record width.
pub fn encode_record(s: &PointSet) -> Result<Vec<u8>> {
    let n = s.len();
    let w = coordinate_width(n);
    let max = if w == 1 { u8::MAX as i64 } else { u16::MAX as i64 };
    let mut out = Vec::with_capacity(record_size(n));
    for p in s.points() {
        for c in [&p.x, &p.y] {
            let v = i64::try_from(c).ok().filter(|v| (0..=max).contains(v)).ok_or_else(|| {
                Error::OutOfRange(format!("coordinate {c} does not fit a {}-byte record field", w))
            })?;
            if w == 1 {
                out.push(v as u8);
            } else {
                out.extend_from_slice(&(v as u16).to_le_bytes());
            }
        }
    }
    Ok(out)
}
