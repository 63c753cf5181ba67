pub mod anchor;
pub mod c3c7;
pub mod c4cs;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod lists;
pub mod oracle;
pub mod palette;
pub mod properties;
pub mod solve;
pub mod two_list;
