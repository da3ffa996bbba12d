/// Parse `start:stop:step`, a comma separated list, or a single value into a
/// strictly increasing list of finite numbers.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let number = |t: &str| -> Result<f64, String> {
        let v: f64 = t.trim().parse().map_err(|_| format!("not a number: {t:?}"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("not finite: {t:?}"))
        }
    };
    let values = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(format!("grid {spec:?} is not start:stop:step"));
        };
        let (start, stop, step) = (number(start)?, number(stop)?, number(step)?);
        if !(step > 0.0) {
            return Err(format!("grid step must be positive, got {step}"));
        }
        if stop < start {
            return Err(format!("grid stop {stop} is below start {start}"));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize;
        if count > 1_000_000 {
            return Err(format!("grid {spec:?} has too many points"));
        }
        (0..=count).map(|k| start + k as f64 * step).collect()
    } else {
        spec.split(',').map(number).collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err("empty grid".into());
    }
    if values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(format!("grid {spec:?} is not strictly increasing"));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_grid("1").unwrap(), vec![1.0]);
        assert_eq!(parse_grid("-1,0.5,2").unwrap(), vec![-1.0, 0.5, 2.0]);
        let g = parse_grid("0:3:0.25").unwrap();
        assert_eq!(g.len(), 13);
        assert_eq!(g[12], 3.0);
    }

    #[test]
    fn rejects() {
        for bad in ["", "a", "1:2", "0:1:0", "2:1:0.5", "1,1", "2,1", "inf", "0:1:-1"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }
}
