//! Library surface of the exroot command-line tool; holds the rendering
//! code so it can be tested directly.

pub mod render;
