pub use belted_core as core;
