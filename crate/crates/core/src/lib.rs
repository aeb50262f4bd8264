#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod divided_power;
pub mod error;
pub mod frank;
pub mod gf3;
pub mod jternary;
pub mod linalg;
pub mod meataxe;
pub mod rep_alpha3;
pub mod witt_contact;
