//! SVG renderings of a single replication.

use plotters::prelude::*;

use tfclust::sim::{ideal_prototypes, Replication, ScenarioSpec};

use crate::{CliError, Result};

const SIZE: (u32, u32) = (800, 480);
const PALETTE: [RGBColor; 4] = [
    RGBColor(31, 119, 180),
    RGBColor(255, 127, 14),
    RGBColor(44, 160, 44),
    RGBColor(148, 103, 189),
];

fn plot_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Plot(e.to_string())
}

/// Membership heatmap, weight bars and prototype overlay, as
/// `(name, svg bytes)` pairs.
pub fn render_replication(
    spec: &ScenarioSpec,
    rep: &Replication,
) -> Result<Vec<(&'static str, Vec<u8>)>> {
    Ok(vec![
        ("memberships", membership_heatmap(rep)?.into_bytes()),
        ("weights", weight_bars(rep)?.into_bytes()),
        ("prototypes", prototype_overlay(spec, rep)?.into_bytes()),
    ])
}

fn membership_heatmap(rep: &Replication) -> Result<String> {
    let u = &rep.result.memberships;
    let (c, n) = (u.clusters(), u.n());
    let mut svg = String::new();
    {
        let root = SVGBackend::with_string(&mut svg, SIZE).into_drawing_area();
        root.fill(&WHITE).map_err(plot_err)?;
        let mut chart = ChartBuilder::on(&root)
            .caption("Memberships", ("sans-serif", 20))
            .margin(10)
            .x_label_area_size(35)
            .y_label_area_size(45)
            .build_cartesian_2d(0..n, 0..c)
            .map_err(plot_err)?;
        chart
            .configure_mesh()
            .disable_mesh()
            .x_desc("datum")
            .y_desc("cluster")
            .draw()
            .map_err(plot_err)?;
        chart
            .draw_series((0..c).flat_map(|i| {
                (0..n).map(move |k| {
                    let v = u.get(i, k).clamp(0.0, 1.0);
                    let shade = (255.0 * (1.0 - v)).round() as u8;
                    Rectangle::new(
                        [(k, i), (k + 1, i + 1)],
                        RGBColor(shade, shade, 255).filled(),
                    )
                })
            }))
            .map_err(plot_err)?;
        root.present().map_err(plot_err)?;
    }
    Ok(svg)
}

fn weight_bars(rep: &Replication) -> Result<String> {
    let w = rep.result.weights.values();
    let flags = &rep.dataset.outlier_flags;
    let top = w.iter().copied().fold(0.0_f64, f64::max) * 1.05;
    let mut svg = String::new();
    {
        let root = SVGBackend::with_string(&mut svg, SIZE).into_drawing_area();
        root.fill(&WHITE).map_err(plot_err)?;
        let mut chart = ChartBuilder::on(&root)
            .caption("Weights (outliers in red)", ("sans-serif", 20))
            .margin(10)
            .x_label_area_size(35)
            .y_label_area_size(55)
            .build_cartesian_2d(0.0..w.len() as f64, 0.0..top.max(f64::MIN_POSITIVE))
            .map_err(plot_err)?;
        chart
            .configure_mesh()
            .x_desc("datum")
            .y_desc("weight")
            .draw()
            .map_err(plot_err)?;
        chart
            .draw_series(w.iter().enumerate().map(|(k, &v)| {
                let color = if flags[k] { RED } else { PALETTE[0] };
                Rectangle::new([(k as f64 + 0.1, 0.0), (k as f64 + 0.9, v)], color.filled())
            }))
            .map_err(plot_err)?;
        root.present().map_err(plot_err)?;
    }
    Ok(svg)
}

/// Membership functions of the fitted prototypes (solid) and the generating
/// group means (dashed) on the first feature.
fn prototype_overlay(spec: &ScenarioSpec, rep: &Replication) -> Result<String> {
    let fitted: Vec<[f64; 3]> = rep
        .result
        .prototypes
        .iter()
        .map(|v| v.component(0).as_array())
        .collect();
    let ideal: Vec<[f64; 3]> = ideal_prototypes(spec)
        .iter()
        .map(|v| v.component(0).as_array())
        .collect();
    let lo = fitted
        .iter()
        .chain(&ideal)
        .map(|t| t[0] - t[1])
        .fold(f64::INFINITY, f64::min);
    let hi = fitted
        .iter()
        .chain(&ideal)
        .map(|t| t[0] + t[2])
        .fold(f64::NEG_INFINITY, f64::max);
    let pad = 0.05 * (hi - lo).max(1.0);

    let mut svg = String::new();
    {
        let root = SVGBackend::with_string(&mut svg, SIZE).into_drawing_area();
        root.fill(&WHITE).map_err(plot_err)?;
        let mut chart = ChartBuilder::on(&root)
            .caption("Prototypes, feature 1", ("sans-serif", 20))
            .margin(10)
            .x_label_area_size(35)
            .y_label_area_size(45)
            .build_cartesian_2d(lo - pad..hi + pad, 0.0..1.05)
            .map_err(plot_err)?;
        chart
            .configure_mesh()
            .x_desc("value")
            .y_desc("membership")
            .draw()
            .map_err(plot_err)?;
        for (i, t) in fitted.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            chart
                .draw_series(LineSeries::new(triangle(t), color.stroke_width(2)))
                .map_err(plot_err)?
                .label(format!("cluster {}", i + 1))
                .legend(move |(x, y)| PathElement::new([(x, y), (x + 20, y)], color));
        }
        for t in &ideal {
            chart
                .draw_series(DashedLineSeries::new(
                    triangle(t),
                    6,
                    4,
                    BLACK.stroke_width(1),
                ))
                .map_err(plot_err)?;
        }
        chart
            .configure_series_labels()
            .background_style(WHITE.mix(0.8))
            .border_style(BLACK)
            .draw()
            .map_err(plot_err)?;
        root.present().map_err(plot_err)?;
    }
    Ok(svg)
}

fn triangle(t: &[f64; 3]) -> Vec<(f64, f64)> {
    vec![(t[0] - t[1], 0.0), (t[0], 1.0), (t[0] + t[2], 0.0)]
}
