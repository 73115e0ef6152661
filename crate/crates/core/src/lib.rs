//! Document extraction pipeline engine.
//!
//! Takes per-page layout/formula detections and native text spans (a
//! "bundle"), and turns them into correctly ordered, cleanly segmented
//! Markdown and a structured intermediate document. The stages are:
//!
//! 1. [`ingest`] — bundle loading, schema validation, and the preprocessing
//!    classifiers (parseability, garbled text, language).
//! 2. [`layout`] — bounding-box post-processing: discard filtering,
//!    containment removal, partial-overlap resolution.
//! 3. [`order`] — recursive XY-cut page segmentation and reading order.
//! 4. [`assembly`] — formula masking/reinsertion, line assembly, paragraph
//!    merging, caption/label attachment.
//! 5. [`emit`] — intermediate document, Markdown and canonical structured
//!    output, asset cropping.
//!
//! [`eval`] is a standalone detection-metric toolkit (AP/AR/mAP) for
//! validating upstream detectors against ground truth, and [`pipeline`]
//! wires the stages together.

pub mod assembly;
pub mod bbox;
pub mod config;
pub mod emit;
pub mod eval;
pub mod ingest;
pub mod layout;
pub mod model;
pub mod order;
pub mod pipeline;

pub use config::EngineConfig;
pub use model::{Block, BlockCategory, DocMeta, IntermediateDoc, LangType, ParseType, Rect, Span, SpanKind};
pub use pipeline::{run_pipeline, PipelineError, PipelineOutput, RunOptions};
