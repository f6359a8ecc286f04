use crate::error::Result;
use crate::geometry::TaggedEdge;

/// `dim Hom_C(M, N)` from positions alone.
///
/// Both edges are rotated by `τ^{start(M)}` so that `M` sits at `(1, m)`;
/// with `(i, j)` the position of the rotated `N`, the dimension is read off
/// from a few linear inequalities. For `m >= n - 1` the other central level
/// is written `m'`.
pub fn hom_dim_closed_form(m: &TaggedEdge, target: &TaggedEdge) -> Result<u8> {
    m.same_polygon(target)?;
    let n = m.n() as i64;
    let k = m.start() as i64;
    let mm = m.tau_pow(k).pos().level as i64;
    let p = target.tau_pow(k).pos();
    let (i, j) = (p.column as i64, p.level as i64);
    let v = if mm <= n - 2 {
        let one = (1..=mm).contains(&i) && i + j > mm
            || (mm + 1..=n - 1).contains(&i) && (n..=n + mm - 1).contains(&(i + j));
        let two = (2..=n - 2).contains(&mm)
            && (2..=mm).contains(&i)
            && (2..=n - 2).contains(&j)
            && i + j >= n;
        if two {
            2
        } else {
            u8::from(one)
        }
    } else {
        let other = if mm == n { n - 1 } else { n };
        let one = (2..=n - 1).contains(&i) && i + j >= n && j <= n - 2
            || (1..=n - 1).contains(&i) && j == if i % 2 == 1 { mm } else { other };
        u8::from(one)
    };
    Ok(v)
}
