//! Box counting and log-log slope fits.

use std::io::Write;

use crate::error::{Error, Result};
use crate::fractal::{build_xinf_box, build_xk, build_xk_in_box, build_xplus_box, level_size_guard, truncation_level};
use crate::lattice::{max_norm, PointSet};

/// Which set to count.
#[derive(Clone, Debug)]
pub enum Generator {
    /// X_k at a fixed level, or at level ⌈log₂ r⌉ + 2 for each radius r when `k` is `None`.
    Xk { k: Option<u32> },
    Xinf,
    Xplus,
    Set(PointSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    pub radii: Vec<u64>,
    pub counts: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DimensionFit {
    pub slope: f64,
    pub residual: f64,
}

fn validate_radii(radii: &[u64]) -> Result<()> {
    if radii.is_empty() {
        return Err(Error::InvalidArgument("at least one radius is required".into()));
    }
    if radii[0] == 0 {
        return Err(Error::InvalidArgument("radii must be positive".into()));
    }
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("radii must be strictly increasing".into()));
    }
    Ok(())
}

/// Counts per radius from the sorted max-norms of a set.
fn counts_from_norms(set: &PointSet, radii: &[u64]) -> Vec<u64> {
    let mut norms: Vec<u64> = set.iter().map(max_norm).collect();
    norms.sort_unstable();
    radii
        .iter()
        .map(|r| norms.partition_point(|n| n <= r) as u64)
        .collect()
}

/// |X ∩ [−r, r]^d| for every radius.
pub fn count_in_boxes(generator: &Generator, d: usize, radii: &[u64]) -> Result<CountSeries> {
    validate_radii(radii)?;
    let rmax = *radii.last().expect("validated nonempty");
    let counts = match generator {
        Generator::Xk { k: Some(k) } => counts_from_norms(&build_xk(d, *k)?.points, radii),
        Generator::Xk { k: None } => {
            level_size_guard(d, truncation_level(rmax))?;
            radii
                .iter()
                .map(|&r| Ok(build_xk_in_box(d, truncation_level(r), r)?.len() as u64))
                .collect::<Result<Vec<_>>>()?
        }
        Generator::Xinf => counts_from_norms(&build_xinf_box(d, rmax)?, radii),
        Generator::Xplus => counts_from_norms(&build_xplus_box(d, rmax)?, radii),
        Generator::Set(set) => {
            if set.dim() != d {
                return Err(Error::DimensionMismatch { left: d, right: set.dim() });
            }
            counts_from_norms(set, radii)
        }
    };
    Ok(CountSeries {
        radii: radii.to_vec(),
        counts,
    })
}

/// Least-squares slope of ln(count) against ln(radius), with the RMS residual.
pub fn fit_dimension(series: &CountSeries) -> Result<DimensionFit> {
    if series.radii.len() != series.counts.len() {
        return Err(Error::DegenerateFit("radii and counts differ in length".into()));
    }
    if series.radii.len() < 3 {
        return Err(Error::DegenerateFit(format!("need at least 3 radii, got {}", series.radii.len())));
    }
    if let Some(i) = series.counts.iter().position(|c| *c == 0) {
        return Err(Error::DegenerateFit(format!("count at radius {} is zero", series.radii[i])));
    }
    if let Some(i) = series.radii.iter().position(|r| *r == 0) {
        return Err(Error::DegenerateFit(format!("radius at index {i} is zero")));
    }
    let xs: Vec<f64> = series.radii.iter().map(|r| (*r as f64).ln()).collect();
    let ys: Vec<f64> = series.counts.iter().map(|c| (*c as f64).ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateFit("all radii are equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - (intercept + slope * x)).powi(2))
        .sum();
    Ok(DimensionFit {
        slope,
        residual: (sse / n).sqrt(),
    })
}

/// Powers of two 2^lo ..= 2^hi.
pub fn power_of_two_radii(lo: u32, hi: u32) -> Vec<u64> {
    (lo..=hi).map(|j| 1u64 << j).collect()
}

/// `radius,count` rows, then `# slope=<s> residual=<e>` when a fit is given.
pub fn write_csv<W: Write>(w: &mut W, series: &CountSeries, fit: Option<&DimensionFit>) -> Result<()> {
    {
        let mut csv = csv::Writer::from_writer(&mut *w);
        csv.write_record(["radius", "count"]).map_err(csv_err)?;
        for (r, c) in series.radii.iter().zip(&series.counts) {
            csv.write_record([r.to_string(), c.to_string()]).map_err(csv_err)?;
        }
        csv.flush()?;
    }
    if let Some(fit) = fit {
        writeln!(w, "# slope={:.6} residual={:.6}", fit.slope, fit.residual)?;
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractal::build_xinf_box;

    #[test]
    fn exact_power_law_has_zero_residual() {
        let radii = power_of_two_radii(1, 6);
        let counts = (1..=6).map(|j| 4u64.pow(j)).collect();
        let fit = fit_dimension(&CountSeries { radii, counts }).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-12);
        assert!(fit.residual < 1e-12);
    }

    #[test]
    fn degenerate_fits_are_reported() {
        let zero = CountSeries { radii: vec![1, 2, 4], counts: vec![1, 0, 3] };
        assert!(matches!(fit_dimension(&zero), Err(Error::DegenerateFit(_))));
        let short = CountSeries { radii: vec![1, 2], counts: vec![1, 2] };
        assert!(matches!(fit_dimension(&short), Err(Error::DegenerateFit(_))));
    }

    #[test]
    fn xinf_d1_counts_odd_integers() {
        let s = count_in_boxes(&Generator::Xinf, 1, &[1, 3, 5]).unwrap();
        assert_eq!(s.counts, vec![2, 4, 6]);
    }

    #[test]
    fn empty_file_counts_zero() {
        let s = count_in_boxes(&Generator::Set(PointSet::empty(2)), 2, &[1, 2, 4]).unwrap();
        assert_eq!(s.counts, vec![0, 0, 0]);
    }

    #[test]
    fn derived_level_counts_respect_theorem_bounds() {
        let radii = power_of_two_radii(1, 6);
        let s = count_in_boxes(&Generator::Xk { k: None }, 2, &radii).unwrap();
        for (j, c) in (1u32..).zip(&s.counts) {
            assert!(4u64.pow(j) <= *c && *c <= 4u64.pow(j + 2), "j={j} c={c}");
        }
        let xinf = count_in_boxes(&Generator::Xinf, 2, &radii).unwrap();
        assert_eq!(s.counts, xinf.counts);
    }

    #[test]
    fn fixed_level_counts_saturate() {
        let s = count_in_boxes(&Generator::Xk { k: Some(3) }, 2, &[1, 2, 4, 8, 16]).unwrap();
        assert_eq!(*s.counts.last().unwrap(), 64);
        assert!(s.counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn radii_validation() {
        assert!(count_in_boxes(&Generator::Xinf, 2, &[]).is_err());
        assert!(count_in_boxes(&Generator::Xinf, 2, &[4, 4]).is_err());
        assert!(count_in_boxes(&Generator::Xinf, 2, &[0, 4]).is_err());
        assert!(count_in_boxes(&Generator::Set(PointSet::empty(3)), 2, &[1]).is_err());
    }

    #[test]
    fn xplus_counts_bracket_xinf_counts() {
        for d in 1..=3usize {
            let radii = power_of_two_radii(1, 5);
            let inf = count_in_boxes(&Generator::Xinf, d, &radii).unwrap();
            let plus = count_in_boxes(&Generator::Xplus, d, &radii).unwrap();
            for (a, b) in inf.counts.iter().zip(&plus.counts) {
                assert!(a <= b && *b <= (2 * d as u64 + 1) * a, "d={d} xinf={a} xplus={b}");
            }
        }
    }

    #[test]
    fn counts_match_direct_clipping() {
        let set = build_xinf_box(3, 16).unwrap();
        let s = count_in_boxes(&Generator::Set(set.clone()), 3, &[1, 2, 5, 16]).unwrap();
        for (r, c) in s.radii.iter().zip(&s.counts) {
            assert_eq!(*c as usize, set.clip(&crate::lattice::LatticeBox::centered(3, *r)).len());
        }
    }

    #[test]
    fn csv_layout() {
        let s = CountSeries { radii: vec![1, 2, 4], counts: vec![2, 4, 16] };
        let fit = fit_dimension(&s).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &s, Some(&fit)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("radius,count\n1,2\n2,4\n4,16\n# slope="));
        assert!(text.contains(" residual="));
    }
}
