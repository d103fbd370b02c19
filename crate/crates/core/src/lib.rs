pub mod gca;
