//! Shared data types: page geometry, category taxonomies, blocks/lines/spans,
//! document metadata and the intermediate document structure.
//!
//! Everything here is an immutable value after construction and safe to share
//! across worker threads without coordination.

use serde::{Deserialize, Serialize};

/// Axis-aligned box in page coordinates. Origin is the top-left corner of the
/// page, y grows downward, units are points.
///
/// Invariants: `x0 <= x1`, `y0 <= y1`, all coordinates finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 4]", try_from = "[f64; 4]")]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    /// Builds a rect, normalizing corner order so the invariants hold.
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Rect {
            x0: x0.min(x1),
            y0: y0.min(y1),
            x1: x0.max(x1),
            y1: y0.max(y1),
        }
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    pub fn center(&self) -> (f64, f64) {
        ((self.x0 + self.x1) / 2.0, (self.y0 + self.y1) / 2.0)
    }

    pub fn center_y(&self) -> f64 {
        (self.y0 + self.y1) / 2.0
    }

    pub fn contains_point(&self, x: f64, y: f64) -> bool {
        x >= self.x0 && x <= self.x1 && y >= self.y0 && y <= self.y1
    }

    /// Clamps the rect into `[0, w] x [0, h]`.
    pub fn clamp_to(&self, w: f64, h: f64) -> Self {
        Rect {
            x0: self.x0.clamp(0.0, w),
            y0: self.y0.clamp(0.0, h),
            x1: self.x1.clamp(0.0, w),
            y1: self.y1.clamp(0.0, h),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x0.is_finite() && self.y0.is_finite() && self.x1.is_finite() && self.y1.is_finite()
    }
}

impl From<Rect> for [f64; 4] {
    fn from(r: Rect) -> Self {
        [r.x0, r.y0, r.x1, r.y1]
    }
}

impl TryFrom<[f64; 4]> for Rect {
    type Error = String;

    fn try_from(v: [f64; 4]) -> Result<Self, Self::Error> {
        if v.iter().any(|c| !c.is_finite()) {
            return Err(format!("non-finite bbox coordinate in {v:?}"));
        }
        Ok(Rect::new(v[0], v[1], v[2], v[3]))
    }
}

/// Page region categories produced by layout detection.
///
/// The last four are discard kinds: regions excluded from all output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockCategory {
    Title,
    Text,
    Image,
    ImageCaption,
    Table,
    TableCaption,
    TableFootnote,
    InterlineEquation,
    EquationLabel,
    Header,
    Footer,
    PageNumber,
    PageNote,
}

impl BlockCategory {
    pub const ALL: [BlockCategory; 13] = [
        BlockCategory::Title,
        BlockCategory::Text,
        BlockCategory::Image,
        BlockCategory::ImageCaption,
        BlockCategory::Table,
        BlockCategory::TableCaption,
        BlockCategory::TableFootnote,
        BlockCategory::InterlineEquation,
        BlockCategory::EquationLabel,
        BlockCategory::Header,
        BlockCategory::Footer,
        BlockCategory::PageNumber,
        BlockCategory::PageNote,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BlockCategory::Title => "title",
            BlockCategory::Text => "text",
            BlockCategory::Image => "image",
            BlockCategory::ImageCaption => "image_caption",
            BlockCategory::Table => "table",
            BlockCategory::TableCaption => "table_caption",
            BlockCategory::TableFootnote => "table_footnote",
            BlockCategory::InterlineEquation => "interline_equation",
            BlockCategory::EquationLabel => "equation_label",
            BlockCategory::Header => "header",
            BlockCategory::Footer => "footer",
            BlockCategory::PageNumber => "page_number",
            BlockCategory::PageNote => "page_note",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.as_str() == s)
    }
}

/// True for the categories that are filtered out of every output.
pub fn is_discard(category: BlockCategory) -> bool {
    matches!(
        category,
        BlockCategory::Header
            | BlockCategory::Footer
            | BlockCategory::PageNumber
            | BlockCategory::PageNote
    )
}

/// The smallest content units inside a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpanKind {
    #[serde(rename = "text")]
    TextLineFragment,
    #[serde(rename = "inline_equation")]
    InlineFormula,
    #[serde(rename = "interline_equation")]
    DisplayedFormula,
    #[serde(rename = "image")]
    ImageRegion,
    #[serde(rename = "table")]
    TableRegion,
}

impl SpanKind {
    pub const ALL: [SpanKind; 5] = [
        SpanKind::TextLineFragment,
        SpanKind::InlineFormula,
        SpanKind::DisplayedFormula,
        SpanKind::ImageRegion,
        SpanKind::TableRegion,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SpanKind::TextLineFragment => "text",
            SpanKind::InlineFormula => "inline_equation",
            SpanKind::DisplayedFormula => "interline_equation",
            SpanKind::ImageRegion => "image",
            SpanKind::TableRegion => "table",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|k| k.as_str() == s)
    }

    /// Text-bearing kinds; image/table spans carry asset references instead.
    pub fn is_textual(&self) -> bool {
        !matches!(self, SpanKind::ImageRegion | SpanKind::TableRegion)
    }
}

/// One content fragment: a text line piece, a formula, or an asset reference,
/// with its box and the detector/extraction confidence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Span {
    pub bbox: Rect,
    pub kind: SpanKind,
    pub content: String,
    pub score: f64,
}

/// An ordered run of spans sharing a baseline band, sorted by ascending x0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub bbox: Rect,
    pub spans: Vec<Span>,
}

impl Line {
    pub fn from_spans(mut spans: Vec<Span>) -> Self {
        spans.sort_by(|a, b| {
            a.bbox
                .x0
                .partial_cmp(&b.bbox.x0)
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let bbox = hull_of(spans.iter().map(|s| s.bbox)).unwrap_or(Rect::new(0.0, 0.0, 0.0, 0.0));
        Line { bbox, spans }
    }
}

/// Smallest rect covering all the given rects.
pub fn hull_of(rects: impl IntoIterator<Item = Rect>) -> Option<Rect> {
    let mut it = rects.into_iter();
    let first = it.next()?;
    Some(it.fold(first, |h, r| Rect {
        x0: h.x0.min(r.x0),
        y0: h.y0.min(r.y0),
        x1: h.x1.max(r.x1),
        y1: h.y1.max(r.y1),
    }))
}

/// Document-unique block identifier, assigned at block construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockId(pub u32);

impl std::fmt::Display for BlockId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "b{}", self.0)
    }
}

/// A categorized page region holding ordered lines of spans.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Block {
    pub id: BlockId,
    pub category: BlockCategory,
    pub bbox: Rect,
    pub score: f64,
    pub lines: Vec<Line>,
    /// Set by the reading-order stage; `None` before ordering.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order_index: Option<usize>,
    /// Host block for satellites (captions, footnotes, equation labels).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub attached_to: Option<BlockId>,
}

impl Block {
    pub fn new(id: BlockId, category: BlockCategory, bbox: Rect, score: f64) -> Self {
        Block {
            id,
            category,
            bbox,
            score,
            lines: Vec::new(),
            order_index: None,
            attached_to: None,
        }
    }

    /// Hull of all span rects, or `None` for a block with no spans.
    pub fn span_hull(&self) -> Option<Rect> {
        hull_of(self.lines.iter().flat_map(|l| l.spans.iter().map(|s| s.bbox)))
    }

    /// All spans in (line, x) order.
    pub fn spans(&self) -> impl Iterator<Item = &Span> {
        self.lines.iter().flat_map(|l| l.spans.iter())
    }
}

/// One violated block invariant. Violations are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BlockViolation {
    /// Span rect does not intersect the block rect.
    SpanOutsideBlock { line: usize, span: usize },
    /// Spans within the line are not sorted by ascending x0.
    LineUnsorted { line: usize },
}

/// Checks the per-block invariants and returns one descriptor per violation.
pub fn validate_block(block: &Block) -> Vec<BlockViolation> {
    let mut violations = Vec::new();
    for (li, line) in block.lines.iter().enumerate() {
        for (si, span) in line.spans.iter().enumerate() {
            if crate::bbox::intersect(span.bbox, block.bbox).is_none()
                && !rect_touches(span.bbox, block.bbox)
            {
                violations.push(BlockViolation::SpanOutsideBlock { line: li, span: si });
            }
        }
        if line
            .spans
            .windows(2)
            .any(|w| w[0].bbox.x0 > w[1].bbox.x0)
        {
            violations.push(BlockViolation::LineUnsorted { line: li });
        }
    }
    violations
}

// Degenerate spans (zero area after clipping) still count as inside when they
// touch the block rect.
fn rect_touches(a: Rect, b: Rect) -> bool {
    a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1
}

/// Whether document text came from native extraction or an OCR engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParseType {
    #[serde(rename = "txt")]
    Txt,
    #[serde(rename = "ocr")]
    Ocr,
}

impl ParseType {
    pub fn as_str(&self) -> &'static str {
        match self {
            ParseType::Txt => "txt",
            ParseType::Ocr => "ocr",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "txt" => Some(ParseType::Txt),
            "ocr" => Some(ParseType::Ocr),
            _ => None,
        }
    }
}

/// Document language; the engine handles Chinese and English only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LangType {
    #[serde(rename = "zh")]
    Zh,
    #[serde(rename = "en")]
    En,
    #[serde(rename = "unknown")]
    Unknown,
}

impl LangType {
    pub fn as_str(&self) -> &'static str {
        match self {
            LangType::Zh => "zh",
            LangType::En => "en",
            LangType::Unknown => "unknown",
        }
    }

    pub fn from_str(s: &str) -> Option<Self> {
        match s {
            "zh" => Some(LangType::Zh),
            "en" => Some(LangType::En),
            "unknown" => Some(LangType::Unknown),
            _ => None,
        }
    }
}

/// Document-level metadata produced by the preprocessing classifiers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocMeta {
    pub page_count: usize,
    /// Per-page (width, height) in points.
    pub page_dims: Vec<(f64, f64)>,
    pub language: LangType,
    pub parse_type: ParseType,
    pub garbled: bool,
}

/// One page of the intermediate document: ordered, discard-free blocks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PageInfo {
    pub page_idx: usize,
    pub page_size: [f64; 2],
    pub para_blocks: Vec<Block>,
}

/// The intermediate structure every output format derives from.
///
/// Concatenating `para_blocks` page by page in order reproduces the document
/// reading order; discard-category blocks never appear here.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntermediateDoc {
    pub pdf_info: Vec<PageInfo>,
    #[serde(rename = "_parse_type")]
    pub parse_type: ParseType,
    #[serde(rename = "_version_name")]
    pub version_name: String,
}
