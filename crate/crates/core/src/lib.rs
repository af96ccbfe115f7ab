pub mod poly;
pub mod protocol;
pub mod algebra;
pub mod proof;
pub mod wu;
pub mod ndg;
pub mod groebner;
pub mod report;
