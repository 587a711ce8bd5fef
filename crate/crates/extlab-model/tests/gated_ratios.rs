//! The reported-ratio corpus: band-limited random inputs pushed through
//! the full gated reporting path. The window is sized so the outermost
//! m shell passes the truncation gate for every draw, which is what
//! makes the reported p = 4 to q = 4.5 ratios trustworthy.

use extlab_geometry::{ratio, Interval, RationalCube};
use extlab_model::{bandlimited_corpus, norm_ratio};
use extlab_packets::FrequencyBox;

#[test]
fn reported_ratios_stay_bounded_across_the_corpus() {
    let cube =
        RationalCube::new(vec![Interval::new(ratio(0, 1), ratio(1, 1)).unwrap()]).unwrap();
    // Modes up to 4, so the coefficient band at height m spans about
    // 2|m| + 4 columns and the window radius 648 covers every band in
    // |m| <= 320 with room to spare.
    let corpus = bandlimited_corpus(0x45ED, 200, &cube, 8192, 4).unwrap();
    let n_box = FrequencyBox::centered(1, 648);
    let m_range = (-320, 320);

    let mut worst_ratio: f64 = 0.0;
    let mut worst_tail: f64 = 0.0;
    for g in &corpus {
        let report = norm_ratio(g, 4.0, 4.5, &n_box, m_range).expect("gate must pass");
        assert!(!report.resolution_warning);
        worst_ratio = worst_ratio.max(report.ratio);
        worst_tail = worst_tail.max(report.tail_fraction);
    }
    assert!(worst_ratio <= 10.0, "worst ratio {worst_ratio}");
    assert!(worst_tail <= 1e-3, "worst tail {worst_tail}");
}
