//! Renders a configuration on the 2-simplex to `simplex_plot.svg`.

use tropical::svg::render_delta2;
use tropical::SimplexPoint;

fn main() {
    let points: Vec<SimplexPoint> = [
        [0.8, 0.1, 0.1],
        [0.1, 0.8, 0.1],
        [0.1, 0.1, 0.8],
        [0.5, 0.4, 0.1],
        [0.2, 0.3, 0.5],
    ]
    .iter()
    .map(|c| SimplexPoint::new(c.to_vec()).unwrap())
    .collect();

    let svg = render_delta2(&points);
    std::fs::write("simplex_plot.svg", &svg).unwrap();
    println!("wrote simplex_plot.svg ({} bytes)", svg.len());
}
