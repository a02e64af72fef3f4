pub mod canon;
pub mod engine;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod poly;
pub mod verify;
