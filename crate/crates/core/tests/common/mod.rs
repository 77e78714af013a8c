pub mod ops;
pub mod oracle;
