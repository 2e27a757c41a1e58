//! The guide in `book/` compiled as doc-tests, one module per chapter so a
//! failing snippet points at its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exterior.md")]
pub mod exterior {}
#[doc = include_str!("../../../book/src/double_forms.md")]
pub mod double_forms {}
#[doc = include_str!("../../../book/src/basic_maps.md")]
pub mod basic_maps {}
#[doc = include_str!("../../../book/src/curvature.md")]
pub mod curvature {}
#[doc = include_str!("../../../book/src/pontrjagin.md")]
pub mod pontrjagin {}
#[doc = include_str!("../../../book/src/identities.md")]
pub mod identities {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
