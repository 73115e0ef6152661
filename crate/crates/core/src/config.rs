//! Engine tunables. The paper states most of these heuristics qualitatively;
//! the constants here are the engine's defaults and can be adjusted per corpus.

use serde::{Deserialize, Serialize};

/// All pipeline thresholds in one place.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EngineConfig {
    /// Mean native characters per page below which a document is OCR-classified.
    pub t_chars: f64,
    /// Fraction of page area images must cover for a page to count as image-dominated.
    pub c_cover: f64,
    /// Fraction of image-dominated pages above which a document is OCR-classified.
    pub p_pages: f64,
    /// Fraction of bad codepoints (replacement/control/private-use) above which
    /// text counts as garbled.
    pub g_ratio: f64,
    /// Fraction of CJK codepoints among alphabetic codepoints at or above which
    /// the language is Chinese.
    pub cjk_ratio: f64,
    /// Containment ratio at or above which a box counts as contained in another.
    pub containment_threshold: f64,
    /// Maximum tolerated IoU between kept, non-deferred blocks after overlap
    /// resolution.
    pub epsilon_overlap: f64,
    /// Minimum width of a vertical whitespace gutter for a column split, points.
    pub gap_x: f64,
    /// Minimum height of a horizontal whitespace band for a band split, points.
    pub gap_y: f64,
    /// Two spans share a line when their vertical center distance is at most
    /// this factor times the median span height.
    pub line_band_factor: f64,
    /// Satellites attach to a host within this factor times the median line height.
    pub attach_dist_factor: f64,
    /// Detections per page (per category) considered when computing recall.
    pub eval_max_dets: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            t_chars: 5.0,
            c_cover: 0.8,
            p_pages: 0.5,
            g_ratio: 0.05,
            cjk_ratio: 0.3,
            containment_threshold: 0.8,
            epsilon_overlap: 0.001,
            gap_x: 12.0,
            gap_y: 8.0,
            line_band_factor: 0.5,
            attach_dist_factor: 2.0,
            eval_max_dets: 100,
        }
    }
}
