//! Constructions with prescribed index: Egyptian fractions, realisation of
//! any rational index, embedding into distance exceptional graphs, basket
//! potentials and the pendant jailbreak.
//!
//! Every construction carries a potential along with the graph and checks
//! it exactly against the result, so each returned graph comes with a
//! certificate for its index.

mod algorithm1;
mod basket;
mod chain;
mod egyptian;
mod jailbreak;
mod realize;

pub use algorithm1::{algorithm1_embed, algorithm1_embed_with, EmbedOptions, EmbedResult, MergePolicy};
pub use basket::{basket_block, basket_potential, BasketPotential};
pub use egyptian::{egyptian_fraction, egyptian_fraction_with, EgyptianDecomposition, EgyptianStrategy};
pub use jailbreak::{
    attach_pendants, basket_jailbreak, jailbreak_basket_index, PendantResult, Placement, MAX_JAILBREAK_J,
};
pub use realize::{
    realize_rational_index, realize_rational_index_with, Composition, Realization, RealizeOptions, DX7_GRAPH6,
};
