use golden_poincare::error::Error;
use golden_poincare::zeros::CloudPoint;

const TWO_PHI: f64 = 3.236_067_977_499_79;

/// Binary P5 hit-count histogram of the points over the square circumscribing
/// ring `ring`, linearly scaled so the fullest cell is 255.
pub fn histogram(points: &[CloudPoint], ring: i32, side: usize) -> Result<Vec<u8>, Error> {
    if side == 0 || side > 16_384 {
        return Err(Error::InvalidArgument(format!("grid side {side} not in 1..=16384")));
    }
    let half = TWO_PHI.powi(ring + 1);
    let mut counts = vec![0u32; side * side];
    for p in points {
        let col = ((p.z.re + half) / (2.0 * half) * side as f64).floor();
        // row 0 at the top
        let row = ((half - p.z.im) / (2.0 * half) * side as f64).floor();
        if (0.0..side as f64).contains(&col) && (0.0..side as f64).contains(&row) {
            counts[row as usize * side + col as usize] += 1;
        }
    }
    let max = counts.iter().copied().max().unwrap_or(0).max(1) as u64;
    let mut out = format!("P5\n{side} {side}\n255\n").into_bytes();
    out.extend(counts.iter().map(|&c| ((c as u64 * 255 + max / 2) / max) as u8));
    Ok(out)
}
