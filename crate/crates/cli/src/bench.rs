//! Predicted and constructed trade-off counts, one CSV row per `(n, k, variant)`.

use std::io::Write;

use qhsynth_core::tradeoff::{
    granularity_instance, predicted_cnot_count, savings_vs_prior, synthesize_tradeoff,
    TradeoffPlan, Variant,
};
use qhsynth_core::Axis;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub k_min: usize,
    pub k_max: usize,
    pub variants: Vec<Variant>,
    /// Largest `n` for which circuits are built and counted.
    pub build_max_n: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub variant: &'static str,
    pub predicted_cnots: Option<u64>,
    pub actual_cnots: Option<usize>,
    pub depth: Option<usize>,
    pub min_angle_num: Option<String>,
    pub min_angle_den_base: Option<u64>,
    pub min_angle_den_exp: Option<u32>,
    pub savings_vs_prior: Option<i128>,
    pub max_den_exp: Option<u32>,
    pub note: String,
}

pub fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::General => "general",
        Variant::Phase => "phase",
    }
}

fn row(n: usize, k: usize, variant: Variant, build_max_n: usize) -> BenchRow {
    let mut r = BenchRow {
        n,
        k,
        variant: variant_name(variant),
        predicted_cnots: None,
        actual_cnots: None,
        depth: None,
        min_angle_num: None,
        min_angle_den_base: None,
        min_angle_den_exp: None,
        savings_vs_prior: None,
        max_den_exp: None,
        note: String::new(),
    };
    let plan = match TradeoffPlan::new(n, k, Axis::Z, variant) {
        Ok(p) => p,
        Err(e) => {
            r.note = format!("infeasible: {e}");
            return r;
        }
    };
    r.predicted_cnots = predicted_cnot_count(&plan).ok();
    r.savings_vs_prior = savings_vs_prior(&plan).ok();
    let mut notes = Vec::new();
    if k == 0 {
        notes.push(
            "no splitting level; the closed form counts one CNOT more than the circuit",
        );
    }
    if n > build_max_n {
        notes.push("not built: n above the build limit");
    } else {
        match synthesize_tradeoff(&plan, &granularity_instance(n - 1)) {
            Ok(rep) => {
                r.actual_cnots = Some(rep.cnot_count);
                r.depth = Some(rep.depth);
                if let Some(a) = &rep.min_angle {
                    r.min_angle_num = Some(a.numerator().to_string());
                    r.min_angle_den_base = Some(a.den_base());
                    r.min_angle_den_exp = Some(a.den_exp());
                }
                r.max_den_exp = rep.max_den_exp;
            }
            Err(_) => notes.push("build failed"),
        }
    }
    r.note = notes.join("; ");
    r
}

pub fn bench_rows(cfg: &BenchConfig) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        for &variant in &cfg.variants {
            for k in cfg.k_min..=cfg.k_max.min(n) {
                rows.push(row(n, k, variant, cfg.build_max_n));
            }
        }
    }
    rows
}

pub fn write_csv(rows: &[BenchRow], out: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n_min: usize, n_max: usize, build_max_n: usize) -> BenchConfig {
        BenchConfig {
            n_min,
            n_max,
            k_min: 0,
            k_max: 9,
            variants: vec![Variant::General, Variant::Phase],
            build_max_n,
        }
    }

    #[test]
    fn spot_rows() {
        let rows = bench_rows(&cfg(10, 10, 0));
        let find = |k, v| rows.iter().find(|r| r.k == k && r.variant == v).unwrap();
        assert_eq!(find(5, "general").predicted_cnots, Some(11360));
        assert_eq!(find(4, "phase").predicted_cnots, Some(6736));
        assert_eq!(find(6, "general").predicted_cnots, None);
        assert!(find(6, "general").note.starts_with("infeasible"));
        assert_eq!(find(5, "general").actual_cnots, None);
    }

    #[test]
    fn built_rows_agree_from_one_level() {
        for r in bench_rows(&cfg(6, 8, 8)) {
            let (Some(p), Some(a)) = (r.predicted_cnots, r.actual_cnots) else {
                continue;
            };
            assert_eq!(a as u64 + u64::from(r.k == 0), p, "{r:?}");
        }
    }

    #[test]
    fn header_and_blank_cells() {
        let mut buf = Vec::new();
        write_csv(&bench_rows(&cfg(5, 5, 0)), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,k,variant,predicted_cnots,actual_cnots,depth,min_angle_num,min_angle_den_base,min_angle_den_exp,savings_vs_prior,max_den_exp,note"
        );
        assert!(lines.any(|l| l.starts_with("5,1,general,,,")));
    }
}
