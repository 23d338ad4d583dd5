//! Exact-arithmetic certification kernel.
//!
//! Every quantity this crate manipulates is exact: arbitrary-precision rationals,
//! surds `c·√r`, rational multiples of π², and rational interval enclosures.
//! No floating-point number ever participates in a certified comparison; floats
//! appear only in advisory display helpers and in test oracles.
//!
//! Modules, bottom-up:
//!
//! * [`exactnum`] — the scalar tower and the certified π enclosure.
//! * [`polyalg`] — univariate polynomial algebra over the rationals: Sturm chains,
//!   root counting, root isolation and refinement, positivity certificates on the
//!   positive ray.
//! * [`surface`] — the intersection lattice of the two-point blow-up of the complex
//!   projective plane, its Kähler classes, and the swap involution.
//! * [`extremal`] — the normalized Calabi energy of the bilaterally symmetric
//!   Kähler classes as an explicit rational function, with certificates for its
//!   critical point, the boundary root, scalar-curvature positivity, and the C⁰
//!   curvature bound.
//! * [`bounds`] — global inequalities: energy below 9, controlled-cone membership,
//!   the Yamabe lower bound, and the Sobolev-constant upper bound 2√3.
//! * [`bubbles`] — the bubbling exclusion chain: curvature energy budgets and the
//!   case-by-case elimination of every candidate deepest bubble, ending in a
//!   no-bubbling verdict.

pub mod bounds;
pub mod bubbles;
pub mod exactnum;
pub mod extremal;
pub mod polyalg;
pub mod surface;
